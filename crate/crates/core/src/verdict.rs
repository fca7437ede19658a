use std::fmt;

use serde::{Deserialize, Serialize};

/// Three-valued answer for questions a bounded search may not settle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Certainty {
    Yes,
    No,
    Unknown,
}

impl Certainty {
    pub fn is_yes(self) -> bool {
        self == Certainty::Yes
    }

    pub fn is_definite(self) -> bool {
        self != Certainty::Unknown
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Certainty::Yes
        } else {
            Certainty::No
        }
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certainty::Yes => "Yes",
            Certainty::No => "No",
            Certainty::Unknown => "Unknown",
        })
    }
}

/// Search limits shared by the orbit, prefix and certification routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of tuples visited by an orbit search.
    pub orbit_cap: usize,
    /// Infinite types: orbit tuples whose largest root height exceeds this
    /// multiple of the query height are not expanded.
    pub prune_multiple: i64,
    /// Cap on the number of factors in absolute-length searches; `None`
    /// means the rank.
    pub length_cap: Option<usize>,
    pub exec: crate::Exec,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { orbit_cap: 1_000_000, prune_multiple: 4, length_cap: None, exec: crate::Exec::default() }
    }
}

impl Limits {
    pub fn length_cap_for(&self, rank: usize) -> usize {
        self.length_cap.unwrap_or(rank).max(rank)
    }
}
