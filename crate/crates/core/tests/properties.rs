use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use quandle_core::algebra::{check_quandle_axioms, AxiomReport, FiniteQuandle, Permutation};
use quandle_core::families::lattice::LatticeAmbient;
use quandle_core::families::{
    dihedral_table, fq_normalize, fq_op, free_reduce, CayleyTable, FiniteBackend, FreeQuandleElement, GAlexFinite,
    IntegerLattice, QuandleBackend, SignedAffine, UnimodularMatrix,
};
use quandle_core::schreier::{quandle_ball, DEFAULT_VERTEX_CAP};
use quandle_core::Element;

const AB: [char; 3] = ['a', 'b', 'c'];

fn raw_word() -> impl Strategy<Value = Vec<(char, i8)>> {
    prop::collection::vec((prop::sample::select(AB.to_vec()), prop::bool::ANY), 0..12)
        .prop_map(|v| v.into_iter().map(|(c, pos)| (c, if pos { 1 } else { -1 })).collect())
}

fn inverse_raw(w: &[(char, i8)]) -> Vec<(char, i8)> {
    w.iter().rev().map(|&(c, e)| (c, -e)).collect()
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Products of elementary matrices and sign flips.
fn unimodular(n: usize) -> impl Strategy<Value = UnimodularMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, prop::bool::ANY), 0..6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, k, flip) in ops {
            if i != j {
                for c in 0..n {
                    m[i][c] += k * m[j][c];
                }
            }
            if flip {
                for c in 0..n {
                    m[i][c] = -m[i][c];
                }
            }
        }
        UnimodularMatrix::from_i64(&m).unwrap()
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-20i64..=20, n).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn brute_force_is_quandle(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| t[x][x] == x)
        && (0..n).all(|y| {
            let mut col: Vec<usize> = (0..n).map(|x| t[x][y]).collect();
            col.sort_unstable();
            col == (0..n).collect::<Vec<_>>()
        })
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[t[x][z]][t[y][z]])))
}

proptest! {
    #[test]
    fn permutation_group_laws(a in permutation(6), b in permutation(6), c in permutation(6)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        for x in 0..6 {
            prop_assert_eq!(a.then(&b).apply(x), b.apply(a.apply(x)));
        }
        prop_assert_eq!(a.pow(a.order() as i64), Permutation::identity(6));
    }

    #[test]
    fn free_reduction_is_idempotent_and_minimal(raw in raw_word()) {
        let w = free_reduce(&raw, &AB).unwrap();
        prop_assert_eq!(free_reduce(w.letters(), &AB).unwrap(), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| !(p[0].0 == p[1].0 && p[0].1 == -p[1].1)));
        prop_assert!(w.len() <= raw.len());
        prop_assert_eq!(w.len() % 2, raw.len() % 2);
        let mut both = raw.clone();
        both.extend(inverse_raw(&raw));
        prop_assert!(free_reduce(&both, &AB).unwrap().is_empty());
    }

    #[test]
    fn free_multiplication_matches_concatenation(x in raw_word(), y in raw_word()) {
        let xy: Vec<(char, i8)> = x.iter().chain(&y).copied().collect();
        let lhs = free_reduce(&x, &AB).unwrap().mul(&free_reduce(&y, &AB).unwrap());
        prop_assert_eq!(lhs, free_reduce(&xy, &AB).unwrap());
    }

    #[test]
    fn free_operation_respects_normalization(
        a in prop::sample::select(AB.to_vec()), w in raw_word(),
        b in prop::sample::select(AB.to_vec()), v in raw_word(),
        pos in prop::bool::ANY,
    ) {
        let e: i8 = if pos { 1 } else { -1 };
        let x = fq_normalize(a, free_reduce(&w, &AB).unwrap());
        let y = fq_normalize(b, free_reduce(&v, &AB).unwrap());
        // raw a^{w v^-1 b^e v}
        let mut raw = w.clone();
        raw.extend(inverse_raw(&v));
        raw.push((b, e));
        raw.extend(v.iter().copied());
        let expected = fq_normalize(a, free_reduce(&raw, &AB).unwrap());
        prop_assert_eq!(fq_op(&x, &y, e), expected);
    }

    #[test]
    fn free_quandle_axioms(
        a in prop::sample::select(AB.to_vec()), w in raw_word(),
        b in prop::sample::select(AB.to_vec()), v in raw_word(),
        c in prop::sample::select(AB.to_vec()), u in raw_word(),
    ) {
        let x = fq_normalize(a, free_reduce(&w, &AB).unwrap());
        let y = fq_normalize(b, free_reduce(&v, &AB).unwrap());
        let z = fq_normalize(c, free_reduce(&u, &AB).unwrap());
        prop_assert_eq!(fq_op(&x, &x, 1), x.clone());
        prop_assert_eq!(fq_op(&fq_op(&x, &y, 1), &y, -1), x.clone());
        prop_assert_eq!(fq_op(&fq_op(&x, &y, 1), &z, 1), fq_op(&fq_op(&x, &z, 1), &fq_op(&y, &z, 1), 1));
        let parsed = FreeQuandleElement::parse(&x.to_string(), &AB).unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn signed_affine_composition(e1 in prop::bool::ANY, c1 in -50i64..50, e2 in prop::bool::ANY, c2 in -50i64..50, z in -100i64..100) {
        let f = SignedAffine::new(if e1 { 1 } else { -1 }, c1);
        let g = SignedAffine::new(if e2 { 1 } else { -1 }, c2);
        prop_assert_eq!(f.then(&g).apply(z), g.apply(f.apply(z)));
        prop_assert_eq!(f.inverse().apply(f.apply(z)), z);
    }

    #[test]
    fn lattice_affine_composition(t in unimodular(3), y1 in vector(3), y2 in vector(3), z in vector(3)) {
        let amb = LatticeAmbient::new(t.clone());
        let a = amb.symmetry(&y1).unwrap();
        let b = amb.symmetry(&y2).unwrap().inverse();
        prop_assert_eq!(a.then(&b).unwrap().apply(&z).unwrap(), b.apply(&a.apply(&z).unwrap()).unwrap());
        prop_assert_eq!(a.inverse().apply(&a.apply(&z).unwrap()).unwrap(), z.clone());
        // s_x s_y^-1 is translation by (1 - t^-1)(y - x)
        let d = a.then(&b).unwrap();
        prop_assert!(d.is_translation());
        let diff: Vec<BigInt> = y2.iter().zip(&y1).map(|(p, q)| p - q).collect();
        let tinv = t.inverse().mul_vec(&diff).unwrap();
        let expected: Vec<BigInt> = diff.iter().zip(&tinv).map(|(p, q)| p - q).collect();
        prop_assert_eq!(d.shift(), expected.as_slice());
    }

    #[test]
    fn unimodular_inverse(t in unimodular(4)) {
        prop_assert!(t.mul(&t.inverse()).is_identity());
        prop_assert_eq!(t.pow(3).mul(&t.pow(-3)), UnimodularMatrix::identity(4));
    }

    #[test]
    fn hnf_invariants(gens in prop::collection::vec(vector(3), 0..5), probe in vector(3)) {
        let l = IntegerLattice::span(3, &gens).unwrap();
        for g in &gens {
            prop_assert!(l.contains(g).unwrap());
        }
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(IntegerLattice::span(3, &rev).unwrap(), l.clone());
        let rows = l.pivot_rows();
        prop_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        for (i, (col, &r)) in l.basis().iter().zip(rows).enumerate() {
            prop_assert!(col[r] > BigInt::from(0));
            prop_assert!(col[..r].iter().all(|x| *x == BigInt::from(0)));
            for other in &l.basis()[..i] {
                prop_assert!(other[r] >= BigInt::from(0) && other[r] < col[r]);
            }
        }
        let red = l.reduce(&probe).unwrap();
        prop_assert_eq!(l.reduce(&red).unwrap(), red.clone());
        let diff: Vec<BigInt> = probe.iter().zip(&red).map(|(a, b)| a - b).collect();
        prop_assert!(l.contains(&diff).unwrap());
    }

    #[test]
    fn axiom_checker_matches_brute_force(n in 2usize..6, seed in prop::collection::vec((0usize..6, 0usize..6, 0usize..6), 0..3)) {
        let mut t = dihedral_table(n);
        for (x, y, v) in seed {
            t[x % n][y % n] = v % n;
        }
        let report = check_quandle_axioms(&t).unwrap();
        prop_assert_eq!(report.passed(), brute_force_is_quandle(&t));
        match report {
            AxiomReport::Pass => {}
            AxiomReport::Idempotence { x } => prop_assert_ne!(t[x][x], x),
            AxiomReport::RightInvertibility { y, x1, x2 } => {
                prop_assert!(x1 != x2 && t[x1][y] == t[x2][y]);
            }
            AxiomReport::Distributivity { x, y, z } => {
                prop_assert_ne!(t[t[x][y]][z], t[t[x][z]][t[y][z]]);
            }
        }
    }

    #[test]
    fn multiplicative_alexander_quandles(n in 2usize..15, k in 1usize..15) {
        prop_assume!(k % n != 0 && k.gcd(&n) == 1);
        let z = CayleyTable::cyclic(n).unwrap();
        let sigma: Vec<usize> = (0..n).map(|x| (x * k) % n).collect();
        let g = GAlexFinite::new(z, sigma).unwrap();
        prop_assert!(check_quandle_axioms(g.quandle().table()).unwrap().passed());
    }

    #[test]
    fn ball_distances_are_consistent(n in 3usize..15, base in 0usize..15, pick in prop::collection::vec(0usize..15, 1..4)) {
        let q = FiniteQuandle::from_table(dihedral_table(n)).unwrap();
        let b = FiniteBackend::new("r", q);
        let names: Vec<String> = pick.iter().map(|y| format!("s_{}", y % n)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let gens = b.generators_from_names(&names).unwrap();
        let ball = quandle_ball(&b, &gens, &Element::Index(base % n), n, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert!(ball.is_complete());
        for e in ball.edges() {
            prop_assert!(ball.depth_of(e.a).abs_diff(ball.depth_of(e.b)) <= 1);
        }
        for i in 0..ball.len() {
            let d = ball.distances_from(i);
            for j in 0..ball.len() {
                prop_assert_eq!(d[j], ball.distances_from(j)[i]);
            }
        }
    }
}
