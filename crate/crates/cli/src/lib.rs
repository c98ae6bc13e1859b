//! The `quandle` command-line tool.
//!
//! Every invocation reads one spec file (see [`spec`]), builds the quandle
//! and the generating set of the requested action, runs one subcommand and
//! reports through an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or every check passed |
//! | 1 | a mathematical check failed; the output carries a witness |
//! | 2 | usage error or invalid spec |
//! | 3 | a vertex, group-order or word-length cap was exceeded |

pub mod commands;
pub mod spec;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use quandle_core::algebra::DEFAULT_GROUP_CAP;
use quandle_core::schreier::DEFAULT_VERTEX_CAP;

pub use commands::{run, Outcome};
pub use spec::{parse_spec, QuandleSpec, SpecError, SpecErrorCode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub const DEFAULT_WORD_CAP: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "quandle", version, about = "Schreier graphs and metric invariants of quandles")]
pub struct Cli {
    /// Quandle spec file (JSON).
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,

    /// Maximum number of vertices in any explored ball.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    pub vertex_cap: usize,

    /// Maximum order of any enumerated group.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: usize,

    /// Maximum word length when expressing one generating set in another.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    pub word_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quandle axioms on the whole table, or on a window.
    Axioms {
        /// Window size for infinite families.
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
    /// Export the labeled ball around a basepoint.
    Ball {
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        #[arg(long)]
        radius: usize,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON-lines output (the default).
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certified path distance between two elements.
    Dist {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        radius: usize,
    },
    /// Number of ends seen from the annulus between two radii.
    Ends {
        #[arg(long)]
        inner_radius: usize,
        #[arg(long)]
        outer_radius: usize,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Group a window of elements by connected component.
    Components {
        #[arg(long)]
        window: usize,
    },
    /// Hermite basis and rank of (1 - t^-1) Z^n.
    DisLattice,
    /// Bi-Lipschitz comparison of two `;`-separated generating sets.
    CompareGensets {
        #[arg(long)]
        genset_a: String,
        #[arg(long)]
        genset_b: String,
        #[arg(long)]
        radius: usize,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Sphere sizes of the ball around a basepoint.
    Growth {
        #[arg(long)]
        radius: usize,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Run a structural check suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Ball radius for `free-action`.
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        /// Automorphism for `homogeneous`, as comma-separated images.
        #[arg(long)]
        map: Option<String>,
        /// Basepoint for `reconstruction`.
        #[arg(long, default_value_t = 0)]
        x0: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Dis normal in Inn, cyclic quotient, zero-sum words, equal orbits.
    DisProperties,
    /// Rebuild the quandle from the free transitive action of Dis.
    Reconstruction,
    /// The identity component P of GAlex(G, sigma) against Dis.
    PEqualsDis,
    /// P against the commutator subgroup of the normal closure of g.
    InnerCommutator,
    /// Orbit map of a freely acting generating set is an isometry.
    FreeAction,
    /// An automorphism is an isometry between two generating sets.
    Homogeneous,
}
