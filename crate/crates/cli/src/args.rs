use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "schur-scope", version, about = "Exact Weyl group, Hurwitz orbit and Schur root queries")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Preset Cartan type, e.g. A3, G2, affine-A2, universal:3:2.
    #[arg(long = "type", global = true, value_name = "PRESET", conflicts_with = "cartan")]
    pub type_name: Option<String>,
    /// File holding a Cartan matrix: the rank, then the rows.
    #[arg(long, global = true, value_name = "FILE")]
    pub cartan: Option<PathBuf>,
    /// Coxeter order as a 1-based permutation, e.g. 2,3,1.
    #[arg(long, global = true, value_name = "I1,I2,...")]
    pub order: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Node cap for orbit searches.
    #[arg(long, global = true, value_name = "N")]
    pub orbit_cap: Option<usize>,
    /// Height bound for root enumeration and pruning in infinite types.
    #[arg(long, global = true, value_name = "H")]
    pub height: Option<i64>,
    /// Cap on reflection-length searches.
    #[arg(long, global = true, value_name = "K")]
    pub length_cap: Option<usize>,
    /// Run every search on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real roots.
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Group-level data.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Hurwitz orbit of the canonical factorization of c.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Schur root certification.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Non-crossing partition poset.
    #[command(subcommand)]
    Nc(NcCmd),
    /// Braid group action on factorizations.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Curve words on the punctured disc.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Source or sink mutation of the orientation.
    Mutate(MutateArgs),
    /// Re-run a checked-in fixture and diff against its expected output.
    Repro(ReproArgs),
}

#[derive(Debug, Subcommand)]
pub enum RootsCmd {
    /// Positive real roots (height-bounded in infinite types).
    List {
        /// Include negative roots.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Order of the group.
    Order,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCmd {
    /// Number of factorizations in the orbit.
    Count,
    /// Every factorization in the orbit, as root tuples.
    Dump,
}

#[derive(Debug, Clone, Args)]
pub struct CurveInput {
    /// Curve letters, 1-based and comma-separated (may be empty).
    #[arg(long, value_name = "J1,J2,...", allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Endpoint puncture, 1-based.
    #[arg(long, value_name = "I")]
    pub end: Option<usize>,
    /// Negate the curve.
    #[arg(long)]
    pub neg: bool,
}

#[derive(Debug, Subcommand)]
pub enum SchurCmd {
    /// Certify one root, given directly or as a curve.
    Check {
        /// Root coordinates, e.g. 1,1.
        #[arg(long, value_name = "R", allow_hyphen_values = true, conflicts_with_all = ["word", "end"])]
        root: Option<String>,
        #[command(flatten)]
        curve: CurveInput,
        /// Skip the finite and rank-2 shortcuts.
        #[arg(long)]
        generic: bool,
    },
    /// Verdicts for every positive root up to the height bound.
    List {
        #[arg(long)]
        generic: bool,
    },
    /// Compare the prefix, curve and positive-root sets up to the height bound.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum NcCmd {
    /// Elements and covers of the poset.
    List {
        /// Print Graphviz instead of the listing.
        #[arg(long)]
        dot: bool,
    },
    /// Absolute order test u <= w; elements are simple-reflection words.
    Leq {
        #[arg(long, value_name = "WORD")]
        u: String,
        #[arg(long, value_name = "WORD")]
        w: String,
    },
    /// A maximal chain between two elements (default: identity to c).
    Chain {
        #[arg(long, value_name = "WORD")]
        from: Option<String>,
        #[arg(long, value_name = "WORD")]
        to: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Apply a braid word to the canonical factorization.
    Apply {
        /// Signed 1-based generators, e.g. 1,-2.
        #[arg(long, value_name = "W", allow_hyphen_values = true)]
        word: String,
    },
    /// Stabilizer checks.
    Stab {
        /// Check whether this word fixes the canonical factorization.
        #[arg(long, value_name = "W", allow_hyphen_values = true)]
        word: Option<String>,
        /// Check every subdiagram stabilizer word.
        #[arg(long)]
        lemma: bool,
        /// Check the full twist identity for this power.
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        twist: Option<i64>,
        /// Search conjugates of the subdiagram words up to this depth.
        #[arg(long, value_name = "DEPTH")]
        probe: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurveCmd {
    /// Root presented by the curve.
    Root(CurveInput),
    /// Loop word of the curve.
    Loop(CurveInput),
    /// Simplicity on the punctured disc.
    Simple(CurveInput),
    /// Spiral the curve k times around the boundary.
    Spiral {
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        k: i64,
    },
    /// Write a schematic SVG of the curve.
    Render {
        #[command(flatten)]
        curve: CurveInput,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct MutateArgs {
    /// source or sink.
    pub side: String,
    /// Compare Schur verdicts of this root before and after.
    #[arg(long, value_name = "R", allow_hyphen_values = true)]
    pub root: Option<String>,
    #[command(flatten)]
    pub curve: CurveInput,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Fixture name: example-2.6, example-3.6, example-4.8 or table-4.
    pub fixture: String,
}
