//! Quandles as metric spaces.
//!
//! A quandle carries two natural right actions: the inner automorphism group
//! `Inn(X)` generated by the point symmetries, and the displacement group
//! `Dis(X)` generated by the products `s_x s_y^-1`. Given finite generating
//! sets, each action defines a Schreier graph whose path metric makes every
//! connected component of the quandle a metric space.
//!
//! The crate is organised as follows:
//!
//! * [`algebra`]: finite quandle tables, permutations, permutation-group
//!   closures and the word-length machinery shared by all representations.
//! * [`families`]: concrete quandles (dihedral, conjugation, free,
//!   generalized Alexander over finite groups and over `Z^n`) with exact
//!   element and automorphism representations.
//! * [`schreier`]: labeled Schreier-graph balls, path metrics, ends,
//!   forest checks, bi-Lipschitz and quasi-isometry verification, DOT/JSON
//!   export.
//! * [`verify`]: executable structural checks that report witnesses.
//!
//! Composition follows the right-action convention everywhere: `f.then(g)`
//! is the product `fg`, meaning "apply `f`, then `g`".

pub mod algebra;
pub mod error;
pub mod families;
pub mod repr;
pub mod schreier;
pub mod verify;

pub use error::{Error, Result};
pub use repr::{Automorphism, Element};
