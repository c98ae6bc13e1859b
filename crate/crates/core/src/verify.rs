//! Executable checks of structural statements on finite and windowed
//! instances. Each check yields a [`TheoremReport`]; a failing report always
//! carries a witness.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    abelianization_invariants, commutator_subgroup, group_closure, is_free_action, normal_closure, orbits,
    EnumeratedGroup, FiniteQuandle, PermGroup, Permutation,
};
use crate::error::{Error, Result};
use crate::families::{CayleyTable, FiniteBackend, GAlexFinite, QuandleBackend};
use crate::repr::{Automorphism, Element};
use crate::schreier::{explore, quandle_ball, CayleyAction, GeneratorSet, LabeledBall, DEFAULT_VERTEX_CAP};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub statement: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub details: Value,
}

impl TheoremReport {
    fn new(statement: &str, instance: &str, failure: Option<Value>, details: Value) -> Self {
        TheoremReport {
            statement: statement.to_string(),
            instance: instance.to_string(),
            pass: failure.is_none(),
            witness: failure,
            details,
        }
    }
}

/// One JSON object per line.
pub fn reports_to_json_lines(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}

fn perm_json(p: &Permutation) -> Value {
    json!(p.to_string())
}

/// The four displacement-group properties of a finite quandle:
/// `Dis ⊴ Inn`, `Inn/Dis` cyclic, `Dis` = zero exponent-sum symmetry words,
/// and equal `Inn`/`Dis` orbits.
pub fn verify_dis_properties(q: &FiniteQuandle, instance: &str, bound: usize) -> Result<Vec<TheoremReport>> {
    let inn = q.inner_group(bound)?;
    let dis = q.displacement_group(bound)?;
    let symmetries = q.symmetries();
    let sizes = json!({"inn": inn.order(), "dis": dis.order()});

    let normal_failure = if let Some(p) = dis.elements().iter().find(|p| !inn.contains(p)) {
        Some(json!({"reason": "not a subset", "element": perm_json(p)}))
    } else {
        dis.normality_witness(&symmetries)
            .map(|(h, n)| json!({"conjugator": perm_json(&h), "element": perm_json(&n)}))
    };
    let normal = TheoremReport::new("dis-normal-in-inn", instance, normal_failure, sizes.clone());

    // Inn is generated by the s_y, which all agree modulo Dis, so Inn/Dis is
    // cyclic iff the coset of s_0 has order [Inn : Dis].
    let index = inn.order() / dis.order();
    let s0 = &symmetries[0];
    let mut power = s0.clone();
    let mut coset_order = 1;
    while !dis.contains(&power) {
        power = power.then(s0);
        coset_order += 1;
    }
    let congruent = symmetries
        .iter()
        .find(|s| !dis.contains(&s.then(&s0.inverse())))
        .map(|s| json!({"reason": "symmetries differ modulo Dis", "symmetry": perm_json(s)}));
    let cyclic_failure = congruent.or_else(|| {
        (coset_order != index).then(|| json!({"coset_order": coset_order, "index": index}))
    });
    let cyclic = TheoremReport::new(
        "inn-mod-dis-cyclic",
        instance,
        cyclic_failure,
        json!({"index": index, "generator_coset_order": coset_order}),
    );

    let max_len = 2 * inn.order();
    let zero_sum = zero_sum_elements(&inn, &symmetries, max_len);
    let missing = dis.elements().iter().find(|p| !zero_sum.contains(p));
    let extra = zero_sum.iter().find(|p| !dis.contains(p));
    let words_failure = match (missing, extra) {
        (Some(p), _) => Some(json!({"in_dis_without_zero_sum_word": perm_json(p)})),
        (None, Some(p)) => Some(json!({"zero_sum_word_outside_dis": perm_json(p)})),
        (None, None) => None,
    };
    let words = TheoremReport::new(
        "dis-equals-zero-sum-words",
        instance,
        words_failure,
        json!({"word_length_bound": max_len, "zero_sum_elements": zero_sum.len()}),
    );

    let domain: Vec<usize> = (0..q.size()).collect();
    let inn_orbits = orbits(&symmetries, &domain);
    let dis_orbits = orbits(&q.displacement_generators(), &domain);
    let orbit_failure =
        (inn_orbits != dis_orbits).then(|| json!({"inn_orbits": inn_orbits, "dis_orbits": dis_orbits}));
    let same = TheoremReport::new(
        "inn-dis-same-orbits",
        instance,
        orbit_failure,
        json!({"components": inn_orbits.len()}),
    );

    Ok(vec![normal, cyclic, words, same])
}

/// Elements of `Inn` written as words of length `<= max_len` in the
/// symmetries and their inverses with exponent sum zero.
fn zero_sum_elements(inn: &EnumeratedGroup, symmetries: &[Permutation], max_len: usize) -> HashSet<Permutation> {
    let max = max_len as i64;
    let mut steps: Vec<(usize, i64)> = Vec::new();
    let positions: Vec<(usize, usize)> = symmetries
        .iter()
        .map(|s| {
            (
                inn.position(s).expect("symmetries lie in Inn"),
                inn.position(&s.inverse()).expect("Inn is closed"),
            )
        })
        .collect();
    for &(f, b) in &positions {
        steps.push((f, 1));
        steps.push((b, -1));
    }
    let elements = inn.elements();
    let identity = inn.position(inn.identity()).expect("identity is enumerated");
    let mut seen: HashSet<(usize, i64)> = HashSet::from([(identity, 0)]);
    let mut layer = vec![(identity, 0i64)];
    for len in 1..=max {
        let mut next = Vec::new();
        for &(e, sum) in &layer {
            for &(s, sign) in &steps {
                let sum = sum + sign;
                // sums that cannot return to zero in the remaining letters
                if sum.abs() > max - len {
                    continue;
                }
                let p = inn.position(&elements[e].then(&elements[s])).expect("Inn is closed");
                if seen.insert((p, sum)) {
                    next.push((p, sum));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    seen.into_iter()
        .filter(|&(_, sum)| sum == 0)
        .map(|(p, _)| elements[p].clone())
        .collect()
}

/// Reconstruction of `q` as `GAlex(G, σ)` from a group `G` of quandle
/// automorphisms that is normal in `ambient` (default `Inn(q)`) and acts
/// freely and transitively, with `σ(g) = s_{x0}^-1 g s_{x0}` and
/// `f(g) = x0 · g`.
pub fn verify_free_transitive_reconstruction(
    q: &FiniteQuandle,
    group: &EnumeratedGroup,
    ambient: Option<&EnumeratedGroup>,
    x0: usize,
    instance: &str,
    bound: usize,
) -> Result<TheoremReport> {
    const ID: &str = "free-transitive-reconstruction";
    if group.degree() != q.size() {
        return Err(Error::DimensionMismatch {
            expected: q.size(),
            found: group.degree(),
        });
    }
    for g in group.elements() {
        if let Some((x, y)) = q.automorphism_witness(g) {
            return Err(Error::NotQuandleAutomorphism { x, y });
        }
    }
    let inn;
    let (ambient, ambient_name) = match ambient {
        Some(a) => (a, "supplied"),
        None => {
            inn = q.inner_group(bound)?;
            (&inn, "Inn")
        }
    };
    let details = json!({"group_order": group.order(), "ambient": ambient_name, "basepoint": x0});
    if let Some((h, n)) = group.normality_witness(ambient.elements()) {
        let w = json!({"hypothesis": "normal", "conjugator": perm_json(&h), "element": perm_json(&n)});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    let domain: Vec<usize> = (0..q.size()).collect();
    let gens: Vec<Permutation> = group.elements().to_vec();
    let orbit_list = orbits(&gens, &domain);
    if orbit_list.len() != 1 {
        let w = json!({"hypothesis": "transitive", "orbits": orbit_list});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    if !is_free_action(group, &domain) {
        let w = json!({"hypothesis": "free"});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }

    let table = CayleyTable::from_group(group);
    let s = q.symmetry(x0);
    let sigma: Vec<usize> = group
        .elements()
        .iter()
        .map(|g| group.position(&s.inverse().then(g).then(&s)).expect("G is normal in Inn"))
        .collect();
    let galex = GAlexFinite::new(table, sigma)?;
    let f: Vec<usize> = group.elements().iter().map(|g| g.apply(x0)).collect();
    let n = group.order();
    for g in 0..n {
        for h in 0..n {
            let lhs = f[galex.quandle().op(g, h)];
            let rhs = q.op(f[g], f[h]);
            if lhs != rhs {
                let w = json!({"hypothesis": "homomorphism", "g": perm_json(&group.elements()[g]),
                    "h": perm_json(&group.elements()[h]), "f(g◁h)": lhs, "f(g)◁f(h)": rhs});
                return Ok(TheoremReport::new(ID, instance, Some(w), details));
            }
        }
    }
    Ok(TheoremReport::new(ID, instance, None, details))
}

fn is_subgroup(table: &CayleyTable, subset: &BTreeSet<usize>) -> Option<Value> {
    if !subset.contains(&table.identity()) {
        return Some(json!({"reason": "identity missing"}));
    }
    for &a in subset {
        if !subset.contains(&table.inv(a)) {
            return Some(json!({"reason": "not closed under inverses", "element": a}));
        }
        for &b in subset {
            if !subset.contains(&table.mul(a, b)) {
                return Some(json!({"reason": "not closed under products", "pair": [a, b]}));
            }
        }
    }
    None
}

/// `P`, the component of the identity of `GAlex(G, σ)`, is a subgroup and
/// `x ↦ R_x` is an isomorphism `P → Dis`; moreover
/// `s_x s_y^-1 = R_{1 ◁ x ◁^-1 y}` for all `x, y`.
pub fn verify_p_equals_dis(g: &GAlexFinite, instance: &str, bound: usize) -> Result<TheoremReport> {
    const ID: &str = "p-isomorphic-to-dis";
    let table = g.group();
    let q = g.quandle();
    let p: BTreeSet<usize> = g.identity_component().into_iter().collect();
    let dis = q.displacement_group(bound)?;
    let details = json!({"p_order": p.len(), "dis_order": dis.order(), "p": p});
    if let Some(w) = is_subgroup(table, &p) {
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    let images: HashMap<usize, Permutation> = p.iter().map(|&x| (x, g.right_translation(x))).collect();
    for &x in &p {
        for &y in &p {
            let product = images[&x].then(&images[&y]);
            if product != images[&table.mul(x, y)] {
                let w = json!({"reason": "R is not a homomorphism", "pair": [x, y]});
                return Ok(TheoremReport::new(ID, instance, Some(w), details));
            }
        }
    }
    let distinct: HashSet<&Permutation> = images.values().collect();
    if distinct.len() != p.len() {
        let w = json!({"reason": "R is not injective"});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    if let Some(x) = p.iter().find(|x| !dis.contains(&images[x])) {
        let w = json!({"reason": "R_x outside Dis", "x": x});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    if dis.order() != p.len() {
        let w = json!({"reason": "Dis larger than R(P)", "dis_order": dis.order(), "p_order": p.len()});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    let e = table.identity();
    for x in 0..table.order() {
        for y in 0..table.order() {
            let d = q.symmetry(x).then(&q.symmetry(y).inverse());
            let point = q.inv_op(q.op(e, x), y);
            if d != g.right_translation(point) {
                let w = json!({"reason": "s_x s_y^-1 differs from R_(1◁x◁^-1y)", "pair": [x, y]});
                return Ok(TheoremReport::new(ID, instance, Some(w), details));
            }
        }
    }
    Ok(TheoremReport::new(ID, instance, None, details))
}

fn subgroup_generated(degree: usize, gens: Vec<Permutation>, bound: usize) -> Result<EnumeratedGroup> {
    if gens.is_empty() {
        return Ok(EnumeratedGroup::trivial(degree));
    }
    group_closure(&PermGroup::from_perms(degree, gens)?, bound)
}

/// For `σ` conjugation by `g`: compares `P` with `[⟨⟨g⟩⟩, ⟨⟨g⟩⟩]` as subsets
/// of `G`, and reports `[G, ⟨⟨g⟩⟩]`, the abelian invariants of `⟨⟨g⟩⟩`,
/// and whether they form the single cyclic factor `Z/ord(g)`.
pub fn verify_inner_case_commutator(
    table: &CayleyTable,
    g: usize,
    instance: &str,
    bound: usize,
) -> Result<TheoremReport> {
    const ID: &str = "inner-case-commutator";
    let galex = GAlexFinite::inner(table.clone(), g)?;
    let p: BTreeSet<usize> = galex.identity_component().into_iter().collect();
    let regular = table.regular_group();
    let translations = table.right_regular();
    let n = normal_closure(&regular, &translations[g], bound)?;
    let nn = commutator_subgroup(&n)?;
    let mixed: Vec<Permutation> = regular
        .elements()
        .iter()
        .flat_map(|a| n.elements().iter().map(move |b| Permutation::commutator(a, b)))
        .filter(|c| !c.is_identity())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let gn = subgroup_generated(table.order(), mixed, bound)?;
    let invariants = abelianization_invariants(&n)?;

    let as_set = |h: &EnumeratedGroup| table.elements_of(h).into_iter().collect::<BTreeSet<usize>>();
    let nn_set = as_set(&nn);
    let gn_set = as_set(&gn);
    let order = translations[g].order();
    let details = json!({
        "g": table.label(g),
        "g_order": order,
        "p": p,
        "normal_closure_order": n.order(),
        "commutator_of_closure": nn_set,
        "commutator_with_group": gn_set,
        "p_equals_commutator_with_group": p == gn_set,
        "closure_abelianization": invariants,
        "closure_abelianization_is_cyclic_of_order_g": invariants == vec![order as u64] || (order == 1 && invariants.is_empty()),
        "commutator_index_in_closure": n.order() / nn.order(),
    });
    let failure = (p != nn_set).then(|| {
        let only_p: Vec<usize> = p.difference(&nn_set).copied().collect();
        let only_nn: Vec<usize> = nn_set.difference(&p).copied().collect();
        json!({"in_p_only": only_p, "in_commutator_only": only_nn})
    });
    Ok(TheoremReport::new(ID, instance, failure, details))
}

/// For a group `U` of automorphisms acting freely, `α(h) = p · h` is an
/// isometry from the word metric of `U` onto the Schreier graph at `p`;
/// compared on balls of radius `radius`.
pub fn verify_free_action_isometry(
    backend: &dyn QuandleBackend,
    gens: &GeneratorSet,
    p: &Element,
    radius: usize,
    instance: &str,
    bound: usize,
) -> Result<TheoremReport> {
    const ID: &str = "free-action-isometry";
    let free = free_action_evidence(backend, gens, p, bound)?;
    let details_base = json!({"radius": radius, "freeness": free.1});
    if let Some(w) = free.0 {
        return Ok(TheoremReport::new(ID, instance, Some(w), details_base));
    }
    let identity = match gens.iter().next() {
        Some(g) => g.forward.identity_like(),
        None => return Ok(TheoremReport::new(ID, instance, None, details_base)),
    };
    let (cayley, auts) = explore(&CayleyAction, gens, identity, radius, DEFAULT_VERTEX_CAP)?;
    let orbit = quandle_ball(backend, gens, p, radius, DEFAULT_VERTEX_CAP)?;
    let alpha: Vec<usize> = auts
        .iter()
        .map(|h| {
            let key = h.apply(p)?.to_string();
            orbit
                .index_of(&key)
                .ok_or_else(|| Error::Inconclusive(format!("image {key} of a ball element lies outside the orbit ball")))
        })
        .collect::<Result<_>>()?;
    let details = json!({"radius": radius, "freeness": free.1, "vertices": cayley.len()});
    if alpha.iter().copied().collect::<HashSet<_>>().len() != cayley.len() || cayley.len() != orbit.len() {
        let w = json!({"reason": "α is not a bijection of balls", "cayley": cayley.len(), "orbit": orbit.len()});
        return Ok(TheoremReport::new(ID, instance, Some(w), details));
    }
    match compare_certified(&cayley, &orbit, &alpha) {
        Some(w) => Ok(TheoremReport::new(ID, instance, Some(w), details)),
        None => Ok(TheoremReport::new(ID, instance, None, details)),
    }
}

/// First pair certified in both balls whose distances differ under `map`.
fn compare_certified(a: &LabeledBall, b: &LabeledBall, map: &[usize]) -> Option<Value> {
    for i in 0..a.len() {
        let da = a.distances_from(i);
        let db = b.distances_from(map[i]);
        for j in i + 1..a.len() {
            let (Some(x), Some(y)) = (da[j], db[map[j]]) else {
                continue;
            };
            if a.certifies(i, j, x) && b.certifies(map[i], map[j], y) && x != y {
                return Some(json!({"x": a.key(i), "y": a.key(j), "d_source": x, "d_target": y}));
            }
        }
    }
    None
}

/// `(failure, description)`: translations act freely; permutation groups
/// are checked by stabilizers on the orbit of `p`.
fn free_action_evidence(
    backend: &dyn QuandleBackend,
    gens: &GeneratorSet,
    p: &Element,
    bound: usize,
) -> Result<(Option<Value>, &'static str)> {
    let auts: Vec<&Automorphism> = gens.iter().map(|g| &g.forward).collect();
    if auts.iter().all(|a| a.is_translation()) {
        return Ok((None, "translations"));
    }
    let perms: Option<Vec<Permutation>> = auts
        .iter()
        .map(|a| match a {
            Automorphism::Perm(p) => Some(p.clone()),
            _ => None,
        })
        .collect();
    let Some(perms) = perms else {
        return Err(Error::Inconclusive(format!("cannot decide freeness of the action on {}", backend.id())));
    };
    let Element::Index(x) = p else {
        return Err(Error::ElementMismatch {
            automorphism: "permutation",
            element: p.kind(),
        });
    };
    let degree = perms[0].degree();
    let group = subgroup_generated(degree, perms, bound)?;
    let orbit: BTreeSet<usize> = group.elements().iter().map(|g| g.apply(*x)).collect();
    let orbit: Vec<usize> = orbit.into_iter().collect();
    if is_free_action(&group, &orbit) {
        Ok((None, "stabilizer test"))
    } else {
        let fixer = group
            .elements()
            .iter()
            .find(|g| !g.is_identity() && g.apply(*x) == *x)
            .map(perm_json);
        Ok((Some(json!({"hypothesis": "free", "stabilizer_element": fixer})), "stabilizer test"))
    }
}

/// For an automorphism `f` of `q`, checks
/// `d_A(x, y) = d_B(f(x), f(y))` on `component`, with `A` all symmetries
/// and `B = f^-1 A f`.
pub fn verify_homogeneous_component_isometry(
    q: &FiniteQuandle,
    f: &Permutation,
    component: &[usize],
    instance: &str,
) -> Result<TheoremReport> {
    const ID: &str = "homogeneous-component-isometry";
    if let Some((x, y)) = q.automorphism_witness(f) {
        return Err(Error::NotQuandleAutomorphism { x, y });
    }
    let backend = FiniteBackend::new(instance, q.clone());
    let a = backend.inner_generators()?;
    let f_inv = f.inverse();
    let b = GeneratorSet::new(
        a.iter()
            .map(|g| {
                let Automorphism::Perm(s) = &g.forward else {
                    unreachable!("finite backends use permutations")
                };
                (format!("f^-1*{}*f", g.name), Automorphism::Perm(f_inv.then(s).then(f)))
            })
            .collect(),
    )?;
    let n = q.size();
    let image: Vec<usize> = component.iter().map(|&x| f.apply(x)).collect();
    let details = json!({"component": component, "image": image});
    let Some(&x0) = component.first() else {
        return Ok(TheoremReport::new(ID, instance, None, details));
    };
    let ball_a = quandle_ball(&backend, &a, &Element::Index(x0), n, DEFAULT_VERTEX_CAP)?;
    let ball_b = quandle_ball(&backend, &b, &Element::Index(f.apply(x0)), n, DEFAULT_VERTEX_CAP)?;
    for &x in component {
        let (Some(ia), Some(ib)) = (ball_a.index_of(&x.to_string()), ball_b.index_of(&f.apply(x).to_string())) else {
            let w = json!({"reason": "component is not a single orbit", "x": x});
            return Ok(TheoremReport::new(ID, instance, Some(w), details));
        };
        let da = ball_a.distances_from(ia);
        let db = ball_b.distances_from(ib);
        for &y in component {
            let ja = ball_a.index_of(&y.to_string());
            let jb = ball_b.index_of(&f.apply(y).to_string());
            let d1 = ja.and_then(|j| da[j]);
            let d2 = jb.and_then(|j| db[j]);
            if d1 != d2 {
                let w = json!({"x": x, "y": y, "d_a": d1, "d_b": d2});
                return Ok(TheoremReport::new(ID, instance, Some(w), details));
            }
        }
    }
    Ok(TheoremReport::new(ID, instance, None, details))
}
