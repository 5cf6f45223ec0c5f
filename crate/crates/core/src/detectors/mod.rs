//! Decision procedures for the graph properties, with witnesses and certificates.

mod clique;
mod crossings;
mod free_edges;
mod independent;
mod occupancy;
mod planarity;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use clique::has_clique_k;
pub use crossings::{
    adjacent_sides_are_edges, count_crossings, crossing_pairs, find_anchor, is_plane, two_hop_holds, Anchor,
    CrossingPair,
};
pub use free_edges::{all_edges_free, edge_is_free, free_edges, has_free_edge, long_edge_cutoff, long_edges};
pub use independent::{
    clique_cover, clique_cover_of_points, greedy_independent_set, grid_witness_is, independent_k, is_independent,
    maximum_independent_set, CliqueCover, MIS_COMPONENT_CAP,
};
pub use occupancy::nine_subsquare_occupancy;
pub use planarity::{is_planar, is_planar_graph, kuratowski_witness, lr_planarity, Kuratowski, KuratowskiKind};

use crate::error::{Error, Result};
use crate::graph::{self, RggGraph};

/// Largest clique size handled by [`has_clique_k`].
pub const MAX_CLIQUE_K: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "name", content = "k", rename_all = "kebab-case")]
pub enum Property {
    HasEdge,
    ConnectedK(usize),
    CliqueK(usize),
    Plane,
    Planar,
    HasFreeEdge,
    AllEdgesFree,
    IndependentK(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Adding edges never destroys the property.
    Increasing,
    /// Adding edges never creates the property.
    Decreasing,
}

impl Property {
    pub const NAMES: [&'static str; 8] = [
        "has-edge",
        "connected-k",
        "clique-k",
        "plane",
        "planar",
        "has-free-edge",
        "all-free",
        "independent-k",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::HasEdge => "has-edge",
            Property::ConnectedK(_) => "connected-k",
            Property::CliqueK(_) => "clique-k",
            Property::Plane => "plane",
            Property::Planar => "planar",
            Property::HasFreeEdge => "has-free-edge",
            Property::AllEdgesFree => "all-free",
            Property::IndependentK(_) => "independent-k",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            Property::ConnectedK(k) | Property::CliqueK(k) | Property::IndependentK(k) => Some(k),
            _ => None,
        }
    }

    /// Builds a property from its name and optional `k`.
    pub fn from_parts(name: &str, k: Option<usize>) -> Result<Property> {
        let need_k = |k: Option<usize>| {
            let k = k.ok_or_else(|| Error::InvalidConfig(format!("property {name} needs k")))?;
            if k < 2 {
                return Err(Error::InvalidK {
                    k,
                    reason: "k must be at least 2".into(),
                });
            }
            Ok(k)
        };
        let p = match name {
            "has-edge" => Property::HasEdge,
            "connected-k" => Property::ConnectedK(need_k(k)?),
            "clique-k" => Property::CliqueK(need_k(k)?),
            "plane" => Property::Plane,
            "planar" => Property::Planar,
            "has-free-edge" => Property::HasFreeEdge,
            "all-free" => Property::AllEdgesFree,
            "independent-k" => Property::IndependentK(need_k(k)?),
            _ => {
                return Err(Error::InvalidConfig(format!(
                    "unknown property {name:?} (expected one of {})",
                    Property::NAMES.join(", ")
                )))
            }
        };
        Ok(p)
    }

    pub fn direction(&self) -> Option<Direction> {
        match self {
            Property::HasEdge | Property::ConnectedK(_) | Property::CliqueK(_) => Some(Direction::Increasing),
            Property::Plane | Property::Planar | Property::IndependentK(_) => Some(Direction::Decreasing),
            Property::HasFreeEdge | Property::AllEdgesFree => None,
        }
    }

    /// Exponent `e` of the predicted threshold `r ~ n^e`, where known.
    pub fn predicted_exponent(&self) -> Option<f64> {
        match *self {
            Property::HasEdge => Some(-1.0),
            Property::ConnectedK(k) | Property::CliqueK(k) => Some(-(k as f64) / (2.0 * k as f64 - 2.0)),
            Property::Plane => Some(-2.0 / 3.0),
            Property::Planar => Some(-5.0 / 8.0),
            _ => None,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}(k={k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Parses `name` or `name:k`, e.g. `clique-k:3`.
impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, k)) => {
                let k = k
                    .parse()
                    .map_err(|_| Error::InvalidConfig(format!("invalid k in property {s:?}")))?;
                Property::from_parts(name, Some(k))
            }
            None => Property::from_parts(s, None),
        }
    }
}

/// Why an independent set of the requested size cannot exist.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Points fall into `occupied` cells of diagonal at most `r`, each a clique.
    CliqueCover {
        cells_per_side: usize,
        occupied: usize,
        k: usize,
    },
    /// Exact maximum independent set size, summed over components.
    ExactMaximum { size: usize, k: usize },
    /// Exhaustive clique search found no `k`-clique.
    NoClique { k: usize },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::CliqueCover {
                cells_per_side,
                occupied,
                k,
            } => write!(
                f,
                "{occupied} non-empty cells of a {cells_per_side}x{cells_per_side} diagonal-r grid < k = {k}"
            ),
            Certificate::ExactMaximum { size, k } => write!(f, "maximum independent set has size {size} < k = {k}"),
            Certificate::NoClique { k } => write!(f, "exhaustive search found no clique of size {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum TriStateDecision {
    Yes { witness: Vec<usize> },
    No { certificate: Certificate },
    Unknown { lower: usize, upper: usize },
}

impl TriStateDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, TriStateDecision::Yes { .. })
    }

    pub fn outcome(&self) -> Outcome {
        match self {
            TriStateDecision::Yes { .. } => Outcome::Yes,
            TriStateDecision::No { .. } => Outcome::No,
            TriStateDecision::Unknown { .. } => Outcome::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Bool(bool),
    Tri(TriStateDecision),
}

impl Verdict {
    pub fn outcome(&self) -> Outcome {
        match self {
            Verdict::Bool(true) => Outcome::Yes,
            Verdict::Bool(false) => Outcome::No,
            Verdict::Tri(t) => t.outcome(),
        }
    }
}

pub fn has_connected_k(g: &RggGraph, k: usize) -> bool {
    graph::max_component_size(g) >= k
}

fn check_k(p: Property, n: usize) -> Result<()> {
    match p.k() {
        Some(k) if k < 2 => Err(Error::InvalidK {
            k,
            reason: "k must be at least 2".into(),
        }),
        Some(k) if k > n => Err(Error::InvalidK {
            k,
            reason: format!("k exceeds the number of points n = {n}"),
        }),
        _ => Ok(()),
    }
}

/// Decides `p` on `g`. Only `IndependentK` yields a tri-state verdict.
pub fn evaluate(g: &RggGraph, p: Property) -> Result<Verdict> {
    check_k(p, g.n())?;
    let v = match p {
        Property::HasEdge => Verdict::Bool(g.edge_count() > 0),
        Property::ConnectedK(k) => Verdict::Bool(has_connected_k(g, k)),
        Property::CliqueK(k) => Verdict::Bool(has_clique_k(g, k)?.is_yes()),
        Property::Plane => Verdict::Bool(is_plane(g)),
        Property::Planar => Verdict::Bool(is_planar(g)),
        Property::HasFreeEdge => Verdict::Bool(has_free_edge(g)),
        Property::AllEdgesFree => Verdict::Bool(all_edges_free(g)),
        Property::IndependentK(k) => Verdict::Tri(independent_k(g, k)?),
    };
    Ok(v)
}
