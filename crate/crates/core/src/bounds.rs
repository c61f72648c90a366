//! Bounds on the minimum and maximum embeddable genus of a multibranched
//! surface, and the necessary condition for embedding it in `S^3`.
//!
//! For every neighborhood `N` of `X`, `eg(N) >= rank H1(X) - g(∂N)`, so the
//! extremes of `g(∂N)` over permutation systems bound `min g(X)` and
//! `max g(X)` from below. `max g(X) <= #branches + #sectors` from above.
//! Embeddable genus itself is not computed.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::homology::rank_h1;
use crate::neighborhood::{boundary_genus, genus_range, CircularPermutationSystem, SearchMode};
use crate::surface::MultibranchedSurface;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum S3Verdict {
    /// Some neighborhood has `g(∂N) >= rank H1`: no obstruction found.
    Pass,
    /// Every neighborhood has `g(∂N) < rank H1`: `X` does not embed in `S^3`.
    Fail,
    /// Only sampled systems were examined and none reached the rank.
    Inconclusive,
}

impl S3Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            S3Verdict::Pass => 0,
            S3Verdict::Fail => 2,
            S3Verdict::Inconclusive => 3,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            S3Verdict::Pass => "no obstruction found",
            S3Verdict::Fail => "does not embed in S^3",
            S3Verdict::Inconclusive => "inconclusive: sampled systems stay below the rank",
        }
    }
}

impl fmt::Display for S3Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            S3Verdict::Pass => "pass",
            S3Verdict::Fail => "fail",
            S3Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A difference clamped at zero, with the unclamped value kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClampedBound {
    pub value: u64,
    pub raw: i64,
}

impl ClampedBound {
    fn new(raw: i64) -> Self {
        ClampedBound {
            value: raw.max(0) as u64,
            raw,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBoundsReport {
    pub rank_h1: u64,
    pub min_boundary_genus: u64,
    pub min_boundary_genus_exact: bool,
    pub max_boundary_genus: u64,
    pub max_boundary_genus_exact: bool,
    pub systems_examined: u64,
    /// `rank_h1 - max_boundary_genus`, clamped at 0.
    pub lower_bound_min_genus: u64,
    pub lower_bound_min_genus_raw: i64,
    /// `rank_h1 - min_boundary_genus`, clamped at 0.
    pub lower_bound_max_genus: u64,
    pub lower_bound_max_genus_raw: i64,
    /// `#branches + #sectors`.
    pub upper_bound_max_genus: u64,
    pub s3_obstruction: S3Verdict,
    pub notes: Vec<String>,
}

pub(crate) fn verdict(rank: u64, max_boundary: u64, exact: bool) -> S3Verdict {
    if max_boundary >= rank {
        S3Verdict::Pass
    } else if exact {
        S3Verdict::Fail
    } else {
        S3Verdict::Inconclusive
    }
}

pub fn genus_bounds(x: &MultibranchedSurface, mode: SearchMode) -> Result<GenusBoundsReport> {
    let rank = rank_h1(x)? as u64;
    let range = genus_range(x, mode)?;
    let lo = ClampedBound::new(rank as i64 - range.max_genus as i64);
    let hi = ClampedBound::new(rank as i64 - range.min_genus as i64);
    let mut notes = vec![
        "values are bounds on the embeddable genus, not the genus itself".to_string(),
        "upper bound from the dual graph: not computed".to_string(),
        "boundary genus depends only on the permutation system; slopes are not enumerated"
            .to_string(),
    ];
    if !range.exact {
        notes.push(format!(
            "boundary genus range from {} of {} systems; the min lower bound may be too high and the max lower bound too low",
            range.systems_examined,
            range
                .systems_total
                .map_or_else(|| "more than 2^128".to_string(), |t| t.to_string())
        ));
    }
    Ok(GenusBoundsReport {
        rank_h1: rank,
        min_boundary_genus: range.min_genus,
        min_boundary_genus_exact: range.exact,
        max_boundary_genus: range.max_genus,
        max_boundary_genus_exact: range.exact,
        systems_examined: range.systems_examined,
        lower_bound_min_genus: lo.value,
        lower_bound_min_genus_raw: lo.raw,
        lower_bound_max_genus: hi.value,
        lower_bound_max_genus_raw: hi.raw,
        upper_bound_max_genus: (x.branches.len() + x.sectors.len()) as u64,
        s3_obstruction: verdict(rank, range.max_genus, range.exact),
        notes,
    })
}

/// Necessary condition for `X ⊂ S^3`: some neighborhood must have
/// `g(∂N) >= rank H1(X)`.
pub fn s3_obstruction(x: &MultibranchedSurface, mode: SearchMode) -> Result<S3Verdict> {
    let rank = rank_h1(x)? as u64;
    let range = genus_range(x, mode)?;
    Ok(verdict(rank, range.max_genus, range.exact))
}

/// `rank H1(X) - g(∂N(X; P))`, a lower bound for the embeddable genus of
/// that neighborhood.
pub fn eg_lower_bound(
    x: &MultibranchedSurface,
    p: &CircularPermutationSystem,
) -> Result<ClampedBound> {
    let rank = rank_h1(x)? as i64;
    Ok(ClampedBound::new(rank - boundary_genus(x, p)? as i64))
}
