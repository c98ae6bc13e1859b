//! Declarative quandle spec files.
//!
//! A spec file is one JSON object naming a family, its parameters, the
//! action whose Schreier graph is wanted, and optionally explicit generator
//! names. See the README for the full schema.

use std::fmt;

use quandle_core::algebra::{check_quandle_axioms, EnumeratedGroup, FiniteQuandle, Permutation};
use quandle_core::families::{
    conjugation_quandle, dihedral_quandle, CayleyTable, DihedralOrder, FiniteBackend, FreeQuandle, GAlexFinite,
    LatticeGAlex, QuandleBackend, UnimodularMatrix,
};
use quandle_core::schreier::GeneratorSet;
use quandle_core::Error;
use serde_json::{Map, Value};

/// Error codes reported by [`parse_spec`] and [`QuandleSpec::instantiate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecErrorCode {
    InvalidJson,
    NotAnObject,
    UnknownFamily,
    UnknownAction,
    MissingField,
    UnknownField,
    InvalidParameter,
    MalformedTable,
    NonUnimodular,
    InvalidGroup,
    NotAutomorphism,
    NotConjugationClosed,
    AxiomViolation,
    InvalidGenerators,
}

impl SpecErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            SpecErrorCode::InvalidJson => "invalid-json",
            SpecErrorCode::NotAnObject => "not-an-object",
            SpecErrorCode::UnknownFamily => "unknown-family",
            SpecErrorCode::UnknownAction => "unknown-action",
            SpecErrorCode::MissingField => "missing-field",
            SpecErrorCode::UnknownField => "unknown-field",
            SpecErrorCode::InvalidParameter => "invalid-parameter",
            SpecErrorCode::MalformedTable => "malformed-table",
            SpecErrorCode::NonUnimodular => "non-unimodular",
            SpecErrorCode::InvalidGroup => "invalid-group",
            SpecErrorCode::NotAutomorphism => "not-automorphism",
            SpecErrorCode::NotConjugationClosed => "not-conjugation-closed",
            SpecErrorCode::AxiomViolation => "axiom-violation",
            SpecErrorCode::InvalidGenerators => "invalid-generators",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub code: SpecErrorCode,
    pub field: Option<String>,
    /// 1-based line of the offending field or syntax error, when known.
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code.as_str(), self.message)?;
        match (&self.field, self.line, self.column) {
            (Some(field), Some(line), _) => write!(f, " (field `{field}`, line {line})"),
            (Some(field), None, _) => write!(f, " (field `{field}`)"),
            (None, Some(line), Some(col)) => write!(f, " (line {line}, column {col})"),
            (None, Some(line), None) => write!(f, " (line {line})"),
            (None, None, _) => Ok(()),
        }
    }
}

impl std::error::Error for SpecError {}

/// How a finite group is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Z/n`, `S_n`, `A_n`, `D_n` (order `2n`) or `Q_8`.
    Named(String),
    Table(Vec<Vec<usize>>),
    /// Generating permutations as image lists.
    Permutations(Vec<Vec<usize>>),
}

/// An element of a group, by index or by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRef {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetSpec {
    All,
    Elements(Vec<GroupRef>),
    ClassOf(GroupRef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Sigma(Vec<GroupRef>),
    /// Conjugation by an element, `x ↦ g^-1 x g`.
    Inner(GroupRef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    FiniteTable(Vec<Vec<usize>>),
    /// `None` is `R_∞`.
    Dihedral(Option<usize>),
    Conjugation { group: GroupSpec, subset: SubsetSpec },
    Free(String),
    GAlexFinite { group: GroupSpec, twist: Twist },
    GAlexLattice(UnimodularMatrix),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::FiniteTable(_) => "finite-table",
            Family::Dihedral(_) => "dihedral",
            Family::Conjugation { .. } => "conjugation",
            Family::Free(_) => "free",
            Family::GAlexFinite { .. } => "galex-finite",
            Family::GAlexLattice(_) => "galex-lattice",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionTag {
    Inner,
    Displacement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleSpec {
    pub family: Family,
    pub action: ActionTag,
    pub generators: Option<Vec<String>>,
}

/// A spec turned into live objects.
pub struct Model {
    pub backend: Box<dyn QuandleBackend>,
    pub finite: Option<FiniteQuandle>,
    pub galex: Option<GAlexFinite>,
    /// The conjugating element when `σ` was given as inner.
    pub inner_element: Option<usize>,
    pub lattice: Option<LatticeGAlex>,
}

/// Where instantiation failed: a bad spec, or a core error such as a cap.
#[derive(Debug)]
pub enum InstantiateError {
    Spec(SpecError),
    Core(Error),
}

impl From<SpecError> for InstantiateError {
    fn from(e: SpecError) -> Self {
        InstantiateError::Spec(e)
    }
}

struct Reader<'a> {
    text: &'a str,
}

impl Reader<'_> {
    /// Line of the first `"field"` occurrence in the source.
    fn line_of(&self, field: &str) -> Option<usize> {
        let needle = format!("\"{field}\"");
        let at = self.text.find(&needle)?;
        Some(self.text[..at].matches('\n').count() + 1)
    }

    fn error(&self, code: SpecErrorCode, field: &str, message: impl Into<String>) -> SpecError {
        SpecError {
            code,
            field: Some(field.to_string()),
            line: self.line_of(field),
            column: None,
            message: message.into(),
        }
    }

    fn required<'v>(&self, obj: &'v Map<String, Value>, field: &str, family: &str) -> Result<&'v Value, SpecError> {
        obj.get(field).ok_or_else(|| SpecError {
            code: SpecErrorCode::MissingField,
            field: Some(field.to_string()),
            line: None,
            column: None,
            message: format!("family `{family}` requires `{field}`"),
        })
    }

    fn usize_of(&self, v: &Value, field: &str) -> Result<usize, SpecError> {
        v.as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.error(SpecErrorCode::InvalidParameter, field, format!("expected a non-negative integer, found {v}")))
    }

    fn rows(&self, v: &Value, field: &str, code: SpecErrorCode) -> Result<Vec<Vec<Value>>, SpecError> {
        let rows = v
            .as_array()
            .ok_or_else(|| self.error(code, field, "expected an array of rows"))?;
        rows.iter()
            .map(|r| {
                r.as_array()
                    .cloned()
                    .ok_or_else(|| self.error(code, field, format!("row {r} is not an array")))
            })
            .collect()
    }

    /// A square table with entries in `0..n`.
    fn table(&self, v: &Value, field: &str) -> Result<Vec<Vec<usize>>, SpecError> {
        let code = SpecErrorCode::MalformedTable;
        let rows = self.rows(v, field, code)?;
        let n = rows.len();
        if n == 0 {
            return Err(self.error(code, field, "table is empty"));
        }
        let mut table = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(self.error(code, field, format!("row {i} has {} entries, expected {n}", row.len())));
            }
            let mut out = Vec::with_capacity(n);
            for (j, e) in row.iter().enumerate() {
                match e.as_u64() {
                    Some(k) if (k as usize) < n => out.push(k as usize),
                    _ => return Err(self.error(code, field, format!("entry ({i}, {j}) = {e} is not in 0..{n}"))),
                }
            }
            table.push(out);
        }
        Ok(table)
    }

    fn matrix(&self, v: &Value, field: &str) -> Result<UnimodularMatrix, SpecError> {
        let code = SpecErrorCode::InvalidParameter;
        let rows = self.rows(v, field, code)?;
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.as_i64().ok_or_else(|| self.error(code, field, format!("entry {e} is not an integer"))))
                    .collect::<Result<Vec<i64>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        UnimodularMatrix::from_i64(&rows).map_err(|e| match e {
            Error::NotUnimodular { determinant } => self.error(
                SpecErrorCode::NonUnimodular,
                field,
                format!("matrix has determinant {determinant}, expected 1 or -1"),
            ),
            other => self.error(SpecErrorCode::MalformedTable, field, other.to_string()),
        })
    }

    fn group(&self, v: &Value) -> Result<GroupSpec, SpecError> {
        const FIELD: &str = "group";
        match v {
            Value::String(name) => Ok(GroupSpec::Named(name.clone())),
            Value::Object(obj) => match (obj.get("table"), obj.get("permutations")) {
                (Some(t), None) => Ok(GroupSpec::Table(self.table(t, FIELD)?)),
                (None, Some(p)) => {
                    let rows = self.rows(p, FIELD, SpecErrorCode::InvalidGroup)?;
                    let perms = rows
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|e| self.usize_of(e, FIELD))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(GroupSpec::Permutations(perms))
                }
                _ => Err(self.error(
                    SpecErrorCode::InvalidGroup,
                    FIELD,
                    "a group object needs exactly one of `table` or `permutations`",
                )),
            },
            other => Err(self.error(SpecErrorCode::InvalidGroup, FIELD, format!("unexpected group value {other}"))),
        }
    }

    fn group_ref(&self, v: &Value, field: &str) -> Result<GroupRef, SpecError> {
        match v {
            Value::String(label) => Ok(GroupRef::Label(label.clone())),
            other => Ok(GroupRef::Index(self.usize_of(other, field)?)),
        }
    }

    fn group_refs(&self, v: &Value, field: &str) -> Result<Vec<GroupRef>, SpecError> {
        v.as_array()
            .ok_or_else(|| self.error(SpecErrorCode::InvalidParameter, field, "expected an array"))?
            .iter()
            .map(|e| self.group_ref(e, field))
            .collect()
    }
}

const FAMILIES: [&str; 6] = ["finite-table", "dihedral", "conjugation", "free", "galex-finite", "galex-lattice"];

fn allowed_fields(family: &str) -> &'static [&'static str] {
    match family {
        "finite-table" => &["table"],
        "dihedral" => &["n"],
        "conjugation" => &["group", "subset"],
        "free" => &["alphabet"],
        "galex-finite" => &["group", "sigma", "inner"],
        _ => &["t"],
    }
}

/// Parses and validates a spec file.
pub fn parse_spec(text: &str) -> Result<QuandleSpec, SpecError> {
    let r = Reader { text };
    let value: Value = serde_json::from_str(text).map_err(|e| SpecError {
        code: SpecErrorCode::InvalidJson,
        field: None,
        line: Some(e.line()),
        column: Some(e.column()),
        message: {
            let full = e.to_string();
            match full.rfind(" at line ") {
                Some(at) => full[..at].to_string(),
                None => full,
            }
        },
    })?;
    let Value::Object(obj) = value else {
        return Err(SpecError {
            code: SpecErrorCode::NotAnObject,
            field: None,
            line: Some(1),
            column: None,
            message: "a spec is a JSON object".into(),
        });
    };
    let family = match obj.get("family") {
        None => {
            return Err(SpecError {
                code: SpecErrorCode::MissingField,
                field: Some("family".into()),
                line: None,
                column: None,
                message: "every spec needs a `family`".into(),
            })
        }
        Some(Value::String(tag)) if FAMILIES.contains(&tag.as_str()) => tag.clone(),
        Some(other) => {
            return Err(r.error(
                SpecErrorCode::UnknownFamily,
                "family",
                format!("unknown family {other}; expected one of {}", FAMILIES.join(", ")),
            ))
        }
    };
    for key in obj.keys() {
        if !matches!(key.as_str(), "family" | "action" | "generators") && !allowed_fields(&family).contains(&key.as_str())
        {
            return Err(r.error(
                SpecErrorCode::UnknownField,
                key,
                format!("field `{key}` does not apply to family `{family}`"),
            ));
        }
    }

    let fam = match family.as_str() {
        "finite-table" => Family::FiniteTable(r.table(r.required(&obj, "table", &family)?, "table")?),
        "dihedral" => match r.required(&obj, "n", &family)? {
            Value::String(s) if s == "inf" => Family::Dihedral(None),
            v => match v.as_u64() {
                Some(n) if n >= 1 => Family::Dihedral(Some(n as usize)),
                _ => {
                    return Err(r.error(
                        SpecErrorCode::InvalidParameter,
                        "n",
                        format!("expected a positive integer or \"inf\", found {v}"),
                    ))
                }
            },
        },
        "conjugation" => {
            let group = r.group(r.required(&obj, "group", &family)?)?;
            let subset = match obj.get("subset") {
                None => SubsetSpec::All,
                Some(Value::String(s)) if s == "all" => SubsetSpec::All,
                Some(Value::Object(o)) => match o.get("class_of") {
                    Some(g) if o.len() == 1 => SubsetSpec::ClassOf(r.group_ref(g, "subset")?),
                    _ => {
                        return Err(r.error(
                            SpecErrorCode::InvalidParameter,
                            "subset",
                            "a subset object must be {\"class_of\": element}",
                        ))
                    }
                },
                Some(v) => SubsetSpec::Elements(r.group_refs(v, "subset")?),
            };
            Family::Conjugation { group, subset }
        }
        "free" => {
            let v = r.required(&obj, "alphabet", &family)?;
            let alphabet = match v {
                Value::String(s) => s.clone(),
                Value::Array(items) => items
                    .iter()
                    .map(|i| i.as_str().unwrap_or("?"))
                    .collect::<Vec<_>>()
                    .concat(),
                _ => String::new(),
            };
            if alphabet.is_empty() || !alphabet.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(r.error(
                    SpecErrorCode::InvalidParameter,
                    "alphabet",
                    format!("alphabet must be a non-empty set of ASCII letters, found {v}"),
                ));
            }
            Family::Free(alphabet)
        }
        "galex-finite" => {
            let group = r.group(r.required(&obj, "group", &family)?)?;
            let twist = match (obj.get("sigma"), obj.get("inner")) {
                (Some(s), None) => Twist::Sigma(r.group_refs(s, "sigma")?),
                (None, Some(g)) => Twist::Inner(r.group_ref(g, "inner")?),
                (None, None) => {
                    return Err(SpecError {
                        code: SpecErrorCode::MissingField,
                        field: Some("sigma".into()),
                        line: None,
                        column: None,
                        message: "family `galex-finite` requires `sigma` or `inner`".into(),
                    })
                }
                (Some(_), Some(_)) => {
                    return Err(r.error(
                        SpecErrorCode::InvalidParameter,
                        "inner",
                        "give either `sigma` or `inner`, not both",
                    ))
                }
            };
            Family::GAlexFinite { group, twist }
        }
        _ => Family::GAlexLattice(r.matrix(r.required(&obj, "t", &family)?, "t")?),
    };

    let action = match obj.get("action") {
        None => ActionTag::Inner,
        Some(Value::String(s)) if s == "inner" => ActionTag::Inner,
        Some(Value::String(s)) if s == "displacement" => ActionTag::Displacement,
        Some(other) => {
            return Err(r.error(
                SpecErrorCode::UnknownAction,
                "action",
                format!("unknown action {other}; expected \"inner\" or \"displacement\""),
            ))
        }
    };

    let generators = match obj.get("generators") {
        None => None,
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(|i| {
                    i.as_str().map(str::to_string).ok_or_else(|| {
                        r.error(SpecErrorCode::InvalidGenerators, "generators", format!("generator {i} is not a string"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(other) => {
            return Err(r.error(
                SpecErrorCode::InvalidGenerators,
                "generators",
                format!("expected an array of generator names, found {other}"),
            ))
        }
    };

    Ok(QuandleSpec {
        family: fam,
        action,
        generators,
    })
}

fn spec_error(code: SpecErrorCode, field: &str, message: impl Into<String>) -> InstantiateError {
    InstantiateError::Spec(SpecError {
        code,
        field: Some(field.to_string()),
        line: None,
        column: None,
        message: message.into(),
    })
}

fn core_or(code: SpecErrorCode, field: &'static str) -> impl Fn(Error) -> InstantiateError {
    move |e| match e {
        Error::BoundExceeded { .. } | Error::VertexCap { .. } => InstantiateError::Core(e),
        other => spec_error(code, field, other.to_string()),
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn build_group(spec: &GroupSpec, group_cap: usize) -> Result<(String, CayleyTable), InstantiateError> {
    let too_big = |order: Option<usize>| match order {
        Some(o) if o <= group_cap => Ok(()),
        _ => Err(InstantiateError::Core(Error::BoundExceeded { bound: group_cap })),
    };
    let invalid = core_or(SpecErrorCode::InvalidGroup, "group");
    match spec {
        GroupSpec::Named(name) => {
            let bad = || spec_error(SpecErrorCode::InvalidGroup, "group", format!("unknown group name `{name}`"));
            let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
            if compact == "Q_8" || compact == "Q8" {
                return Ok((compact, CayleyTable::quaternion()));
            }
            let (kind, n) = if let Some(rest) = compact.strip_prefix("Z/") {
                ("Z", rest)
            } else if let Some(rest) = compact.strip_prefix("C_") {
                ("Z", rest)
            } else if let Some(rest) = compact.strip_prefix("S_") {
                ("S", rest)
            } else if let Some(rest) = compact.strip_prefix("A_") {
                ("A", rest)
            } else if let Some(rest) = compact.strip_prefix("D_") {
                ("D", rest)
            } else {
                return Err(bad());
            };
            let n: usize = n.parse().map_err(|_| bad())?;
            let table = match kind {
                "Z" => {
                    too_big(Some(n))?;
                    CayleyTable::cyclic(n).map_err(&invalid)?
                }
                "S" => {
                    too_big(factorial(n))?;
                    CayleyTable::symmetric(n).map_err(&invalid)?.0
                }
                "A" => {
                    too_big(factorial(n).map(|f| f.div_ceil(2)))?;
                    CayleyTable::alternating(n).map_err(&invalid)?.0
                }
                _ => {
                    too_big(n.checked_mul(2))?;
                    CayleyTable::dihedral(n).map_err(&invalid)?.0
                }
            };
            Ok((compact, table))
        }
        GroupSpec::Table(t) => {
            too_big(Some(t.len()))?;
            Ok((format!("table({})", t.len()), CayleyTable::new(t.clone(), None).map_err(&invalid)?))
        }
        GroupSpec::Permutations(images) => {
            let degree = images.first().map_or(1, Vec::len).max(1);
            let perms = images
                .iter()
                .map(|p| Permutation::new(p.clone()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(&invalid)?;
            let labels: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
            let group = EnumeratedGroup::generated_by(degree, perms, group_cap).map_err(&invalid)?;
            Ok((format!("<{}>", labels.join(",")), CayleyTable::from_group(&group)))
        }
    }
}

fn resolve(table: &CayleyTable, r: &GroupRef, field: &str) -> Result<usize, InstantiateError> {
    match r {
        GroupRef::Index(i) if *i < table.order() => Ok(*i),
        GroupRef::Index(i) => Err(spec_error(
            SpecErrorCode::InvalidParameter,
            field,
            format!("element {i} is out of range for a group of order {}", table.order()),
        )),
        GroupRef::Label(l) => (0..table.order()).find(|&g| table.label(g) == l).ok_or_else(|| {
            let mut message = format!("no group element is labeled `{l}`");
            if table.order() <= 24 {
                message += &format!("; labels are {}", table.labels().join(", "));
            }
            spec_error(SpecErrorCode::InvalidParameter, field, message)
        }),
    }
}

fn finite(name: String, q: FiniteQuandle) -> Box<dyn QuandleBackend> {
    Box::new(FiniteBackend::new(name, q))
}

impl QuandleSpec {
    /// Builds the backend and any finite structure behind it.
    pub fn instantiate(&self, group_cap: usize) -> Result<Model, InstantiateError> {
        let mut model = Model {
            backend: Box::new(quandle_core::families::DihedralInfinite),
            finite: None,
            galex: None,
            inner_element: None,
            lattice: None,
        };
        match &self.family {
            Family::FiniteTable(table) => {
                let report = check_quandle_axioms(table).map_err(core_or(SpecErrorCode::MalformedTable, "table"))?;
                if !report.passed() {
                    return Err(spec_error(SpecErrorCode::AxiomViolation, "table", report.to_string()));
                }
                let q = FiniteQuandle::from_table(table.clone()).map_err(core_or(SpecErrorCode::MalformedTable, "table"))?;
                model.backend = finite(format!("finite-table({})", q.size()), q.clone());
                model.finite = Some(q);
            }
            Family::Dihedral(n) => {
                let order = n.map_or(DihedralOrder::Infinite, DihedralOrder::Finite);
                model.backend = dihedral_quandle(order).map_err(core_or(SpecErrorCode::InvalidParameter, "n"))?;
                if let Some(n) = n {
                    model.finite = Some(
                        FiniteQuandle::from_table(quandle_core::families::dihedral_table(*n))
                            .map_err(core_or(SpecErrorCode::InvalidParameter, "n"))?,
                    );
                }
            }
            Family::Conjugation { group, subset } => {
                let (name, table) = build_group(group, group_cap)?;
                let elements = match subset {
                    SubsetSpec::All => (0..table.order()).collect(),
                    SubsetSpec::Elements(refs) => refs
                        .iter()
                        .map(|r| resolve(&table, r, "subset"))
                        .collect::<Result<Vec<_>, _>>()?,
                    SubsetSpec::ClassOf(r) => table.conjugacy_class(resolve(&table, r, "subset")?),
                };
                let q = conjugation_quandle(&table, &elements).map_err(|e| match e {
                    Error::NotConjugationClosed { .. } => {
                        spec_error(SpecErrorCode::NotConjugationClosed, "subset", e.to_string())
                    }
                    other => spec_error(SpecErrorCode::InvalidParameter, "subset", other.to_string()),
                })?;
                model.backend = finite(format!("conjugation({name})"), q.clone());
                model.finite = Some(q);
            }
            Family::Free(alphabet) => {
                model.backend = Box::new(
                    FreeQuandle::new(alphabet.chars()).map_err(core_or(SpecErrorCode::InvalidParameter, "alphabet"))?,
                );
            }
            Family::GAlexFinite { group, twist } => {
                let (name, table) = build_group(group, group_cap)?;
                let galex = match twist {
                    Twist::Sigma(refs) => {
                        let sigma = refs
                            .iter()
                            .map(|r| resolve(&table, r, "sigma"))
                            .collect::<Result<Vec<_>, _>>()?;
                        if sigma.len() != table.order() {
                            return Err(spec_error(
                                SpecErrorCode::NotAutomorphism,
                                "sigma",
                                format!("sigma has {} images for a group of order {}", sigma.len(), table.order()),
                            ));
                        }
                        GAlexFinite::new(table, sigma).map_err(core_or(SpecErrorCode::NotAutomorphism, "sigma"))?
                    }
                    Twist::Inner(r) => {
                        let g = resolve(&table, r, "inner")?;
                        model.inner_element = Some(g);
                        GAlexFinite::inner(table, g).map_err(core_or(SpecErrorCode::InvalidParameter, "inner"))?
                    }
                };
                model.backend = finite(format!("galex({name})"), galex.quandle().clone());
                model.finite = Some(galex.quandle().clone());
                model.galex = Some(galex);
            }
            Family::GAlexLattice(t) => {
                let lattice = LatticeGAlex::new(t.clone());
                model.backend = Box::new(lattice.clone());
                model.lattice = Some(lattice);
            }
        }
        Ok(model)
    }
}

impl Model {
    /// Generators of the spec file's action, or the explicit names when given.
    pub fn generators(&self, spec: &QuandleSpec) -> Result<GeneratorSet, InstantiateError> {
        let gens = match (&spec.generators, spec.action) {
            (Some(names), _) => self.backend.generators_from_names(names),
            (None, ActionTag::Inner) => self.backend.inner_generators(),
            (None, ActionTag::Displacement) => match self.backend.displacement_generators() {
                Ok(Some(g)) => Ok(g),
                Ok(None) => {
                    return Err(spec_error(
                        SpecErrorCode::InvalidGenerators,
                        "action",
                        format!(
                            "{} has no finite displacement generating set; list `generators` explicitly",
                            self.backend.id()
                        ),
                    ))
                }
                Err(e) => Err(e),
            },
        };
        gens.map_err(core_or(SpecErrorCode::InvalidGenerators, "generators"))
    }
}
