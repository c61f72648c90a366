//! Boundary of the neighborhood `N(X; P, S)`.
//!
//! Thickening a sector `e` to `e x [-1, 1]` exposes two copies of `e` on
//! the boundary, the sides `(e, +)` and `(e, -)`. Around a branch with cyclic
//! order `c1, ..., ck` the boundary torus of its solid torus is cut by the
//! attaching annuli into `k` strips; strip `i` joins the side of `ci` facing
//! `c(i+1)` to the side of `c(i+1)` facing `ci`. A prebranch with positive
//! oriented degree faces its successor with `+` and its predecessor with
//! `-`; negative degree swaps them. Strips are annuli and add nothing to
//! the Euler characteristic, so each boundary component has `χ` equal to
//! the sum over its sides.

use std::collections::BTreeMap;

use serde::Serialize;

use super::permutation::CircularPermutationSystem;
use crate::error::Result;
use crate::surface::{MultibranchedSurface, SurfaceIndex};
use crate::unionfind::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SectorSide {
    pub sector: String,
    pub side: Side,
}

impl std::fmt::Display for SectorSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.side {
            Side::Plus => '+',
            Side::Minus => '-',
        };
        write!(f, "{}{s}", self.sector)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    pub sides: Vec<SectorSide>,
    pub euler_characteristic: i64,
    pub genus: u64,
}

/// The closed orientable surface `∂N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundarySurface {
    /// Ordered by first side, in sector list order with `+` before `-`.
    pub components: Vec<BoundaryComponent>,
    pub total_components: usize,
    pub total_genus: u64,
}

/// Integer view of the slot pairing, shared by tracing and search.
#[derive(Clone, Debug)]
pub(crate) struct Tracer {
    pub idx: SurfaceIndex,
    pub chi: i64,
    /// Prebranch index of each lexicographic rank.
    pub by_rank: Vec<usize>,
    rank_of: Vec<u32>,
    /// Side piece facing the successor / predecessor, by rank.
    next_piece: Vec<u32>,
    prev_piece: Vec<u32>,
    /// One ascending group of ranks per branch, branches sorted by id.
    pub base: Vec<Vec<u32>>,
}

impl Tracer {
    pub(crate) fn new(x: &MultibranchedSurface) -> Result<Self> {
        let idx = x.indexed()?;
        let mut by_rank: Vec<usize> = (0..idx.prebranch_ids.len()).collect();
        by_rank.sort_by(|&a, &b| idx.prebranch_ids[a].cmp(&idx.prebranch_ids[b]));
        let mut rank_of = vec![0u32; by_rank.len()];
        for (r, &c) in by_rank.iter().enumerate() {
            rank_of[c] = r as u32;
        }
        let piece =
            |c: usize, positive: bool| (2 * idx.pre_sector[c] + usize::from(!positive)) as u32;
        let next_piece = by_rank
            .iter()
            .map(|&c| piece(c, idx.pre_od[c] > 0))
            .collect();
        let prev_piece = by_rank
            .iter()
            .map(|&c| piece(c, idx.pre_od[c] < 0))
            .collect();
        let base = idx
            .branch_order
            .iter()
            .map(|&l| {
                let mut g: Vec<u32> = idx.attached[l].iter().map(|&c| rank_of[c]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Ok(Tracer {
            chi: x.euler_characteristic(),
            idx,
            by_rank,
            rank_of,
            next_piece,
            prev_piece,
            base,
        })
    }

    pub(crate) fn pieces(&self) -> usize {
        2 * self.idx.sectors()
    }

    /// Joins sides along every strip.
    pub(crate) fn join(&self, uf: &mut UnionFind, groups: &[Vec<u32>]) {
        uf.reset(self.pieces());
        for g in groups {
            let k = g.len();
            for i in 0..k {
                let a = g[i] as usize;
                let b = g[(i + 1) % k] as usize;
                uf.union(self.next_piece[a] as usize, self.prev_piece[b] as usize);
            }
        }
    }

    /// Total genus of the boundary, `b - χ(X)`.
    pub(crate) fn genus(&self, uf: &mut UnionFind, groups: &[Vec<u32>]) -> i64 {
        self.join(uf, groups);
        uf.sets() as i64 - self.chi
    }

    /// Groups for `p` in the order of [`Tracer::base`].
    pub(crate) fn groups_of(
        &self,
        x: &MultibranchedSurface,
        p: &CircularPermutationSystem,
    ) -> Result<Vec<Vec<u32>>> {
        p.check(x)?;
        let pos: BTreeMap<&str, usize> = self
            .idx
            .prebranch_ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        Ok(self
            .idx
            .branch_order
            .iter()
            .map(|&l| {
                p.cycle(&self.idx.branch_ids[l])
                    .expect("checked")
                    .iter()
                    .map(|c| self.rank_of[pos[c.as_str()]])
                    .collect()
            })
            .collect())
    }

    pub(crate) fn system_of(&self, groups: &[Vec<u32>]) -> CircularPermutationSystem {
        CircularPermutationSystem::new(self.idx.branch_order.iter().zip(groups).map(|(&l, g)| {
            (
                self.idx.branch_ids[l].clone(),
                g.iter()
                    .map(|&r| self.idx.prebranch_ids[self.by_rank[r as usize]].clone())
                    .collect::<Vec<_>>(),
            )
        }))
    }

    /// Per-component Euler characteristics, in order of first piece.
    pub(crate) fn component_chis(
        &self,
        uf: &mut UnionFind,
        groups: &[Vec<u32>],
    ) -> Vec<(Vec<usize>, i64)> {
        self.join(uf, groups);
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        let mut out: Vec<(Vec<usize>, i64)> = Vec::new();
        for piece in 0..self.pieces() {
            let root = uf.find(piece);
            let i = *slot.entry(root).or_insert_with(|| {
                out.push((Vec::new(), 0));
                out.len() - 1
            });
            out[i].0.push(piece);
            out[i].1 += self.idx.sector_chi[piece / 2];
        }
        out
    }
}

pub fn trace_boundary(
    x: &MultibranchedSurface,
    p: &CircularPermutationSystem,
) -> Result<BoundarySurface> {
    let tracer = Tracer::new(x)?;
    let groups = tracer.groups_of(x, p)?;
    let mut uf = UnionFind::new(tracer.pieces());
    let components: Vec<BoundaryComponent> = tracer
        .component_chis(&mut uf, &groups)
        .into_iter()
        .map(|(pieces, chi)| {
            debug_assert!(chi <= 2 && chi % 2 == 0, "closed orientable component");
            BoundaryComponent {
                sides: pieces
                    .into_iter()
                    .map(|piece| SectorSide {
                        sector: x.sectors[piece / 2].id.clone(),
                        side: if piece % 2 == 0 {
                            Side::Plus
                        } else {
                            Side::Minus
                        },
                    })
                    .collect(),
                euler_characteristic: chi,
                genus: ((2 - chi) / 2) as u64,
            }
        })
        .collect();
    Ok(BoundarySurface {
        total_components: components.len(),
        total_genus: components.iter().map(|c| c.genus).sum(),
        components,
    })
}

/// Sum of the genera of the components of `∂N(X; P)`.
pub fn boundary_genus(x: &MultibranchedSurface, p: &CircularPermutationSystem) -> Result<u64> {
    let tracer = Tracer::new(x)?;
    let groups = tracer.groups_of(x, p)?;
    let mut uf = UnionFind::new(tracer.pieces());
    Ok(tracer.genus(&mut uf, &groups) as u64)
}
