//! Finite-group and permutation machinery, and the quandle-axiom checker.

mod group;
mod perm;
mod quandle;
mod words;

pub use group::{
    abelianization_invariants, commutator_subgroup, group_closure, is_free_action, normal_closure,
    orbits, EnumeratedGroup, PermGroup, DEFAULT_GROUP_CAP,
};
pub use perm::Permutation;
pub use quandle::{check_quandle_axioms, point_symmetry, AxiomReport, FiniteQuandle};
pub use words::{symmetry_rewrite, word_length, QuandleTerm, SymmetryWord};
