//! The multibranched surface `G x S^1` and the check that its boundary
//! genus range is governed by the embedding genus range of `G`.
//!
//! Vertex `v` becomes the branch `v`, edge `e` the annulus sector `e`, and
//! the dart `e+` / `e-` the prebranch of the same name with oriented degree
//! `+1` / `-1`. A rotation system of `G` is then literally a circular
//! permutation system of `G x S^1`, and each face of the embedding becomes
//! one torus of `∂N`.

use std::collections::HashMap;

use serde::Serialize;

use super::embedding::{guarded_count, rotation_count, FaceTracer};
use super::graph::Multigraph;
use super::rotation::RotationSystem;
use crate::cyclic::{for_range, par_ranges, Odometer};
use crate::error::Result;
use crate::homology::rank_h1;
use crate::neighborhood::{CircularPermutationSystem, Tracer};
use crate::surface::MultibranchedSurface;
use crate::unionfind::UnionFind;

pub fn times_circle(g: &Multigraph) -> Result<MultibranchedSurface> {
    g.validate()?;
    let mut x = MultibranchedSurface::new();
    for v in &g.vertices {
        x.add_branch(v.clone());
    }
    for e in &g.edges {
        x.add_sector(e.id.clone(), 0);
        x.attach_named(format!("{}-", e.id), &e.id, &e.from, -1);
        x.attach_named(format!("{}+", e.id), &e.id, &e.to, 1);
    }
    Ok(x)
}

pub fn rotation_to_permutation(
    g: &Multigraph,
    rotation: &RotationSystem,
) -> Result<CircularPermutationSystem> {
    rotation.check(g)?;
    Ok(CircularPermutationSystem::new(rotation.iter().map(
        |(v, darts)| {
            (
                v.to_string(),
                darts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            )
        },
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub rotation_systems: u64,
    pub rank_h1: u64,
    pub min_genus: u64,
    pub max_genus: u64,
    pub min_boundary_genus: u64,
    pub max_boundary_genus: u64,
    /// `rank H1(G x S^1) - max g(∂N)`, expected to be `2 min g(G)`.
    pub min_side: i64,
    /// `rank H1(G x S^1) - min g(∂N)`, expected to be `2 max g(G)`.
    pub max_side: i64,
    /// Every rotation passed the per-system checks.
    pub bridge_ok: bool,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Default)]
struct Tally {
    min_genus: i64,
    max_genus: i64,
    min_boundary: i64,
    max_boundary: i64,
    failure: Option<(u64, Failure)>,
}

#[derive(Clone, Copy)]
enum Failure {
    ComponentCount {
        faces: usize,
        components: usize,
    },
    NotTorus {
        chi: i64,
    },
    Difference {
        rank: i64,
        boundary: i64,
        genus: i64,
    },
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::ComponentCount { faces, components } => {
                write!(f, "{faces} faces but {components} boundary components")
            }
            Failure::NotTorus { chi } => write!(f, "boundary component with euler characteristic {chi}"),
            Failure::Difference { rank, boundary, genus } => write!(
                f,
                "rank {rank} - boundary genus {boundary} differs from twice the embedding genus {genus}"
            ),
        }
    }
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            min_genus: self.min_genus.min(other.min_genus),
            max_genus: self.max_genus.max(other.max_genus),
            min_boundary: self.min_boundary.min(other.min_boundary),
            max_boundary: self.max_boundary.max(other.max_boundary),
            failure: match (self.failure, other.failure) {
                (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Checks, for every rotation system `ρ` of `g`, that `∂N(G x S^1; P(ρ))`
/// consists of exactly one torus per face of `ρ` and that
/// `rank H1 - g(∂N) = 2 g(ρ)`; then compares the extremes.
pub fn verify_product_theorem(g: &Multigraph, limit: Option<u64>) -> Result<ProductReport> {
    g.ensure_connected()?;
    let total = guarded_count(rotation_count(g), limit)?;
    let x = times_circle(g)?;
    let rank = rank_h1(&x)? as i64;
    let faces_proto = FaceTracer::new(g);
    let tracer = Tracer::new(&x)?;
    let base = faces_proto.idx.base();

    // Dart rank -> prebranch rank, through the shared names.
    let pre_rank: HashMap<&str, u32> = tracer
        .by_rank
        .iter()
        .enumerate()
        .map(|(r, &c)| (tracer.idx.prebranch_ids[c].as_str(), r as u32))
        .collect();
    let remap: Vec<u32> = faces_proto
        .idx
        .by_rank
        .iter()
        .map(|&d| pre_rank[faces_proto.idx.dart_names[d].as_str()])
        .collect();

    let parts = par_ranges(total, |start, len| {
        let mut ft = faces_proto.clone();
        let mut uf = UnionFind::new(tracer.pieces());
        let mut pgroups: Vec<Vec<u32>> = base.iter().map(|g| vec![0; g.len()]).collect();
        let mut chi_by_root = vec![0i64; tracer.pieces()];
        let mut tally: Option<Tally> = None;
        for_range(&base, start, len, |i, groups| {
            ft.set_rotation(groups);
            let faces = ft.count_faces();
            let genus = ft.genus_for_faces(faces);
            for (dst, src) in pgroups.iter_mut().zip(groups) {
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = remap[s as usize];
                }
            }
            tracer.join(&mut uf, &pgroups);
            let components = uf.sets();
            chi_by_root.fill(0);
            for piece in 0..tracer.pieces() {
                let root = uf.find(piece);
                chi_by_root[root] += tracer.idx.sector_chi[piece / 2];
            }
            let boundary = components as i64 - tracer.chi;

            let failure = if components != faces {
                Some(Failure::ComponentCount { faces, components })
            } else if let Some(piece) =
                (0..tracer.pieces()).find(|&p| uf.find(p) == p && chi_by_root[p] != 0)
            {
                Some(Failure::NotTorus {
                    chi: chi_by_root[piece],
                })
            } else if rank - boundary != 2 * genus {
                Some(Failure::Difference {
                    rank,
                    boundary,
                    genus,
                })
            } else {
                None
            };
            let here = Tally {
                min_genus: genus,
                max_genus: genus,
                min_boundary: boundary,
                max_boundary: boundary,
                failure: failure.map(|f| (i, f)),
            };
            tally = Some(match tally {
                Some(t) => t.merge(here),
                None => here,
            });
        });
        tally
    });
    let tally = parts
        .into_iter()
        .flatten()
        .reduce(Tally::merge)
        .expect("connected graphs have a rotation system");

    let min_side = rank - tally.max_boundary;
    let max_side = rank - tally.min_boundary;
    let aggregates_ok = min_side == 2 * tally.min_genus && max_side == 2 * tally.max_genus;
    let counterexample = match tally.failure {
        Some((i, failure)) => {
            let r = RotationSystem::from_groups(&faces_proto.idx, g, Odometer::at(&base, i as u128).groups());
            Some(format!("rotation {r}: {failure}"))
        }
        None if !aggregates_ok => Some(format!(
            "extremes: rank - max g(∂N) = {min_side} vs 2 min g = {}, rank - min g(∂N) = {max_side} vs 2 max g = {}",
            2 * tally.min_genus,
            2 * tally.max_genus
        )),
        None => None,
    };
    Ok(ProductReport {
        rotation_systems: total,
        rank_h1: rank as u64,
        min_genus: tally.min_genus as u64,
        max_genus: tally.max_genus as u64,
        min_boundary_genus: tally.min_boundary as u64,
        max_boundary_genus: tally.max_boundary as u64,
        min_side,
        max_side,
        bridge_ok: tally.failure.is_none(),
        passed: tally.failure.is_none() && aggregates_ok,
        counterexample,
    })
}
