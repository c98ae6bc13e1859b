use std::collections::BTreeMap;

use quandle_core::algebra::{check_quandle_axioms, Permutation};
use quandle_core::families::lattice::format_vector;
use quandle_core::families::{check_backend_axioms, QuandleBackend, WindowViolation};
use quandle_core::schreier::{
    bilipschitz_compare, distance, ends_estimate, lipschitz_constant, quandle_ball, to_dot, to_json_lines,
    BallDistance, GeneratorSet, QuandleAction,
};
use quandle_core::verify::{
    reports_to_json_lines, verify_dis_properties, verify_free_action_isometry, verify_free_transitive_reconstruction,
    verify_homogeneous_component_isometry, verify_inner_case_commutator, verify_p_equals_dis, TheoremReport,
};
use quandle_core::{Element, Error};
use serde_json::{json, Value};

use crate::spec::{parse_spec, Family, InstantiateError, Model, QuandleSpec, SpecError};
use crate::{Cli, Command, Suite, EXIT_CAP, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(pass: bool, stdout: String) -> Self {
        Outcome {
            code: if pass { EXIT_OK } else { EXIT_FAILURE },
            stdout,
            stderr: String::new(),
        }
    }
}

enum Failure {
    Spec(SpecError),
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<InstantiateError> for Failure {
    fn from(e: InstantiateError) -> Self {
        match e {
            InstantiateError::Spec(s) => Failure::Spec(s),
            InstantiateError::Core(c) => Failure::Core(c),
        }
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, stderr) = match self {
            Failure::Spec(e) => (EXIT_USAGE, e.to_string()),
            Failure::Usage(msg) => (EXIT_USAGE, format!("error[usage]: {msg}")),
            Failure::Core(e @ (Error::VertexCap { .. } | Error::BoundExceeded { .. } | Error::Inconclusive(_))) => {
                (EXIT_CAP, format!("error[cap-exceeded]: {e}"))
            }
            Failure::Core(e) => (EXIT_USAGE, format!("error[invalid-input]: {e}")),
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr + "\n",
        }
    }
}

type Run = std::result::Result<Outcome, Failure>;

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Outcome {
    execute(cli).unwrap_or_else(Failure::into_outcome)
}

fn execute(cli: &Cli) -> Run {
    let path = cli
        .spec
        .as_ref()
        .ok_or_else(|| Failure::Usage("--spec <FILE> is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let spec = parse_spec(&text).map_err(Failure::Spec)?;

    if let (Command::Axioms { .. }, Family::FiniteTable(table)) = (&cli.command, &spec.family) {
        return table_axioms(&format!("finite-table({})", table.len()), table);
    }
    let model = spec.instantiate(cli.group_cap)?;
    let ctx = Context { cli, spec: &spec, model: &model };
    match &cli.command {
        Command::Axioms { window } => ctx.axioms(*window),
        Command::Ball {
            base,
            radius,
            dot,
            json: _,
            output,
        } => {
            let ball = quandle_ball(model.backend.as_ref(), &ctx.gens()?, &ctx.base(base)?, *radius, cli.vertex_cap)?;
            let text = if *dot { to_dot(&ball) } else { to_json_lines(&ball) };
            match output {
                Some(file) => {
                    std::fs::write(file, text)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", file.display())))?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Dist { from, to, radius } => ctx.dist(from, to, *radius),
        Command::Ends {
            inner_radius,
            outer_radius,
            base,
        } => {
            let action = QuandleAction::new(model.backend.as_ref());
            let ends = ends_estimate(&action, &ctx.gens()?, ctx.base(base)?, *inner_radius, *outer_radius, cli.vertex_cap)
                .map_err(|e| match e {
                    Error::InvalidInput(msg) => Failure::Usage(msg),
                    other => other.into(),
                })?;
            Ok(Outcome::ok(format!("{ends}\n")))
        }
        Command::Components { window } => ctx.components(*window),
        Command::DisLattice => ctx.dis_lattice(),
        Command::CompareGensets {
            genset_a,
            genset_b,
            radius,
            base,
        } => ctx.compare(genset_a, genset_b, *radius, base),
        Command::Growth { radius, base } => {
            let ball = quandle_ball(model.backend.as_ref(), &ctx.gens()?, &ctx.base(base)?, *radius, cli.vertex_cap)?;
            Ok(Outcome::ok(format!("{}\n", json!(ball.sphere_sizes()))))
        }
        Command::Verify {
            suite,
            radius,
            base,
            map,
            x0,
        } => ctx.verify(*suite, *radius, base, map.as_deref(), *x0),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn table_axioms(backend: &str, table: &[Vec<usize>]) -> Run {
    let report = check_quandle_axioms(table)?;
    let out = json!({
        "backend": backend,
        "checked": "table",
        "elements": table.len(),
        "pass": report.passed(),
        "axiom": report.axiom(),
        "violation": (!report.passed()).then(|| report.to_string()),
    });
    Ok(Outcome::verdict(report.passed(), pretty(&out)))
}

struct Context<'a> {
    cli: &'a Cli,
    spec: &'a QuandleSpec,
    model: &'a Model,
}

impl Context<'_> {
    fn backend(&self) -> &dyn QuandleBackend {
        self.model.backend.as_ref()
    }

    fn gens(&self) -> std::result::Result<GeneratorSet, Failure> {
        Ok(self.model.generators(self.spec)?)
    }

    fn element(&self, key: &str) -> std::result::Result<Element, Failure> {
        self.backend()
            .parse_element(key)
            .map_err(|e| Failure::Usage(format!("{e} in {}", self.backend().id())))
    }

    fn base(&self, base: &Option<String>) -> std::result::Result<Element, Failure> {
        match base {
            Some(key) => self.element(key),
            None => Ok(self.backend().default_base()),
        }
    }

    fn axioms(&self, window: usize) -> Run {
        let backend = self.backend();
        if let Some(q) = &self.model.finite {
            return table_axioms(&backend.id(), q.table());
        }
        let elements = backend.window(window);
        let violation = check_backend_axioms(backend, &elements)?;
        let describe = |v: &WindowViolation| match v {
            WindowViolation::Idempotence(x) => (1, format!("idempotence fails at x = {x}")),
            WindowViolation::RightInverse(x, y) => (2, format!("right inverse fails at x = {x}, y = {y}")),
            WindowViolation::Distributivity(x, y, z) => {
                (3, format!("distributivity fails at x = {x}, y = {y}, z = {z}"))
            }
        };
        let described = violation.as_ref().map(describe);
        let out = json!({
            "backend": backend.id(),
            "checked": "window",
            "window": window,
            "elements": elements.len(),
            "pass": violation.is_none(),
            "axiom": described.as_ref().map(|d| d.0),
            "violation": described.map(|d| d.1),
        });
        Ok(Outcome::verdict(violation.is_none(), pretty(&out)))
    }

    fn dist(&self, from: &str, to: &str, radius: usize) -> Run {
        let x = self.element(from)?;
        let y = self.element(to)?;
        let ball = quandle_ball(self.backend(), &self.gens()?, &x, radius, self.cli.vertex_cap)?;
        match distance(&ball, &x.to_string(), &y.to_string()) {
            BallDistance::Exact(d) => Ok(Outcome::ok(format!("{d}\n"))),
            BallDistance::Uncertified(d) => Ok(Outcome::verdict(
                false,
                format!("uncertified: at most {d}, a shorter path may leave the radius-{radius} ball\n"),
            )),
            BallDistance::OutOfBall => Ok(Outcome::verdict(false, format!("unreached within radius {radius}\n"))),
        }
    }

    fn components(&self, window: usize) -> Run {
        let backend = self.backend();
        let elements = backend.window(window);
        let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for x in &elements {
            classes.entry(backend.component_key(x)?).or_default().push(x.to_string());
        }
        let classes: Vec<Value> = classes
            .into_iter()
            .map(|(key, members)| json!({"key": key, "size": members.len(), "members": members}))
            .collect();
        let out = json!({
            "backend": backend.id(),
            "window": window,
            "elements": elements.len(),
            "components": classes.len(),
            "classes": classes,
        });
        Ok(Outcome::ok(pretty(&out)))
    }

    fn dis_lattice(&self) -> Run {
        let lattice = self
            .model
            .lattice
            .as_ref()
            .ok_or_else(|| Failure::Usage(format!("dis-lattice needs a galex-lattice spec, found {}", self.spec.family.tag())))?;
        let dis = lattice.dis_lattice();
        let number = |s: String| s.parse::<i64>().map_or(Value::String(s), Value::from);
        let m = lattice.t().one_minus_inverse();
        let out = json!({
            "backend": self.backend().id(),
            "t": lattice.t().to_string(),
            "one_minus_t_inverse": m.iter().map(|row| row.iter().map(|e| number(e.to_string())).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "rank": dis.rank(),
            "basis": dis.basis().iter().map(|v| format_vector(v)).collect::<Vec<_>>(),
            "pivot_rows": dis.pivot_rows(),
            "determinant": dis.index().map(|d| number(d.to_string())),
        });
        Ok(Outcome::ok(pretty(&out)))
    }

    fn compare(&self, a: &str, b: &str, radius: usize, base: &Option<String>) -> Run {
        let split = |s: &str| -> Vec<String> {
            s.split(';')
                .map(str::trim)
                .filter(|n| !n.is_empty())
                .map(str::to_string)
                .collect()
        };
        let (names_a, names_b) = (split(a), split(b));
        if names_a.is_empty() || names_b.is_empty() {
            return Err(Failure::Usage("both generating sets need at least one generator".into()));
        }
        let backend = self.backend();
        let gens = |names: &[String]| {
            backend
                .generators_from_names(names)
                .map_err(|e| Failure::Usage(format!("bad generating set: {e}")))
        };
        let (s, t) = (gens(&names_a)?, gens(&names_b)?);
        let l = lipschitz_constant(&s, &t, self.cli.word_cap)?;
        let x = self.base(base)?;
        let ball_s = quandle_ball(backend, &s, &x, radius, self.cli.vertex_cap)?;
        let ball_t = quandle_ball(backend, &t, &x, radius, self.cli.vertex_cap)?;
        let outcome = bilipschitz_compare(&ball_s, &ball_t, l)?;
        let out = json!({
            "backend": backend.id(),
            "basepoint": x.to_string(),
            "radius": radius,
            "genset_a": s.names(),
            "genset_b": t.names(),
            "lipschitz_constant": outcome.constant,
            "pairs_checked": outcome.pairs_checked,
            "pass": outcome.pass,
            "witness": outcome.witness,
        });
        Ok(Outcome::verdict(outcome.pass, pretty(&out)))
    }

    fn verify(&self, suite: Suite, radius: usize, base: &Option<String>, map: Option<&str>, x0: usize) -> Run {
        let instance = self.backend().id();
        let cap = self.cli.group_cap;
        let needs = |what: &str| Failure::Usage(format!("suite {suite:?} needs {what}"));
        let finite = || self.model.finite.as_ref().ok_or_else(|| needs("a finite quandle"));
        let galex = || self.model.galex.as_ref().ok_or_else(|| needs("a galex-finite spec"));
        let reports: Vec<TheoremReport> = match suite {
            Suite::DisProperties => verify_dis_properties(finite()?, &instance, cap)?,
            Suite::Reconstruction => {
                let q = finite()?;
                if x0 >= q.size() {
                    return Err(Failure::Usage(format!("--x0 {x0} is not an element")));
                }
                let dis = q.displacement_group(cap)?;
                vec![verify_free_transitive_reconstruction(q, &dis, None, x0, &instance, cap)?]
            }
            Suite::PEqualsDis => vec![verify_p_equals_dis(galex()?, &instance, cap)?],
            Suite::InnerCommutator => {
                let g = galex()?;
                let element = self
                    .model
                    .inner_element
                    .ok_or_else(|| needs("sigma given as `inner`"))?;
                vec![verify_inner_case_commutator(g.group(), element, &instance, cap)?]
            }
            Suite::FreeAction => {
                let p = self.base(base)?;
                vec![verify_free_action_isometry(self.backend(), &self.gens()?, &p, radius, &instance, cap)?]
            }
            Suite::Homogeneous => {
                let q = finite()?;
                let images = map
                    .ok_or_else(|| needs("--map"))?
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Failure::Usage(format!("--map: {e}")))?;
                if images.len() != q.size() {
                    return Err(Failure::Usage(format!(
                        "--map has {} images for a quandle of size {}",
                        images.len(),
                        q.size()
                    )));
                }
                let f = Permutation::new(images).map_err(|e| Failure::Usage(format!("--map: {e}")))?;
                q.components()
                    .iter()
                    .map(|c| verify_homogeneous_component_isometry(q, &f, c, &instance))
                    .collect::<quandle_core::Result<Vec<_>>>()
                    .map_err(|e| match e {
                        Error::NotQuandleAutomorphism { .. } => Failure::Usage(format!("--map: {e}")),
                        other => other.into(),
                    })?
            }
        };
        let pass = reports.iter().all(|r| r.pass);
        Ok(Outcome::verdict(pass, reports_to_json_lines(&reports)))
    }
}
