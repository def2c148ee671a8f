//! Torsion and `|G : Z(G)G'|` diagnostics along a truncated system.
//!
//! The center of the limit can be strictly smaller than the limit of the
//! levelwise centers, so these trends are only evidence at the truncation
//! depth, never a proof about the limit.

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::subgroup::{center, derived_subgroup};

use super::InverseSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trend {
    /// Stable over the last step (or a single level).
    Bounded,
    /// Strictly increasing at every step.
    StrictlyGrowing,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitVerdict {
    /// Exponent and index both bounded so far.
    ConsistentWithCGroup,
    /// Exponent keeps growing: the limit is not torsion of bounded exponent.
    ExponentUnbounded,
    /// Index keeps growing: the obstruction to being a C-group.
    IndexUnbounded,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelIndexRecord {
    pub level: usize,
    pub order: usize,
    pub exponent: usize,
    pub center_order: usize,
    pub derived_order: usize,
    /// `|G_k : Z(G_k) G_k'|`.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionIndexReport {
    pub depth: usize,
    pub levels: Vec<LevelIndexRecord>,
    pub exponents: Vec<usize>,
    pub indices: Vec<usize>,
    pub exponent_trend: Trend,
    pub index_trend: Trend,
    pub verdict: LimitVerdict,
    pub note: String,
}

fn level_record(level: usize, g: &FiniteGroup) -> LevelIndexRecord {
    let z = center(g);
    let d = derived_subgroup(g);
    let zd = z.order() * d.order() / z.intersection_order(&d);
    LevelIndexRecord {
        level,
        order: g.order(),
        exponent: g.exponent(),
        center_order: z.order(),
        derived_order: d.order(),
        index: g.order() / zd,
    }
}

fn trend(xs: &[usize]) -> Trend {
    match xs {
        [] | [_] => Trend::Bounded,
        _ if xs.windows(2).all(|w| w[0] < w[1]) => Trend::StrictlyGrowing,
        [.., a, b] if a == b => Trend::Bounded,
        _ => Trend::Indeterminate,
    }
}

pub fn torsion_index_report(sys: &InverseSystem) -> TorsionIndexReport {
    let levels: Vec<LevelIndexRecord> = sys.levels().iter().enumerate().map(|(k, g)| level_record(k, g)).collect();
    let exponents: Vec<usize> = levels.iter().map(|r| r.exponent).collect();
    let indices: Vec<usize> = levels.iter().map(|r| r.index).collect();
    let (exponent_trend, index_trend) = (trend(&exponents), trend(&indices));
    let verdict = match (exponent_trend, index_trend) {
        (Trend::StrictlyGrowing, _) => LimitVerdict::ExponentUnbounded,
        (_, Trend::StrictlyGrowing) => LimitVerdict::IndexUnbounded,
        (Trend::Bounded, Trend::Bounded) => LimitVerdict::ConsistentWithCGroup,
        _ => LimitVerdict::Indeterminate,
    };
    TorsionIndexReport {
        depth: sys.depth(),
        levels,
        exponents,
        indices,
        exponent_trend,
        index_trend,
        verdict,
        note: format!("heuristic at truncation depth {}", sys.depth()),
    }
}
