//! Cellular embeddings from rotation systems.
//!
//! Faces are the orbits of `d -> ρ(d̄)`: reverse the dart, then step to the
//! next dart around the vertex it now sits at. Orbits are the boundary
//! circles of the disk-band surface, so `2 - 2g = V - E + F`.

use serde::Serialize;

use super::graph::{DartIndex, DartRef, Multigraph};
use super::rotation::RotationSystem;
use crate::cyclic::{for_range, par_ranges, tuple_count, Extremes, Odometer};
use crate::error::{Error, Result};

/// Default cap on the number of rotation systems or spanning trees swept.
pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingResult {
    pub face_count: usize,
    #[serde(serialize_with = "serialize_walks")]
    pub face_walks: Vec<Vec<DartRef>>,
    pub genus: u64,
}

fn serialize_walks<S: serde::Serializer>(
    walks: &[Vec<DartRef>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(walks.len()))?;
    for w in walks {
        let names: Vec<String> = w.iter().map(ToString::to_string).collect();
        seq.serialize_element(&names)?;
    }
    seq.end()
}

/// Face counting over a reusable dart permutation.
#[derive(Clone, Debug)]
pub(crate) struct FaceTracer {
    pub idx: DartIndex,
    rot_next: Vec<u32>,
    seen: Vec<bool>,
    vertices: i64,
    edges: i64,
}

impl FaceTracer {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let idx = DartIndex::new(g);
        let n = idx.darts();
        FaceTracer {
            idx,
            rot_next: vec![0; n],
            seen: vec![false; n],
            vertices: g.vertices.len() as i64,
            edges: g.edges.len() as i64,
        }
    }

    pub(crate) fn set_rotation(&mut self, groups: &[Vec<u32>]) {
        for grp in groups {
            let k = grp.len();
            for i in 0..k {
                let d = self.idx.by_rank[grp[i] as usize];
                let e = self.idx.by_rank[grp[(i + 1) % k] as usize];
                self.rot_next[d] = e as u32;
            }
        }
    }

    #[inline]
    pub(crate) fn face_next(&self, d: usize) -> usize {
        self.rot_next[d ^ 1] as usize
    }

    pub(crate) fn count_faces(&mut self) -> usize {
        self.seen.fill(false);
        let mut faces = 0;
        for start in 0..self.seen.len() {
            if self.seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !self.seen[d] {
                self.seen[d] = true;
                d = self.face_next(d);
            }
        }
        faces
    }

    pub(crate) fn genus_for_faces(&self, faces: usize) -> i64 {
        (2 - self.vertices + self.edges - faces as i64) / 2
    }

    pub(crate) fn walks(&mut self) -> Vec<Vec<usize>> {
        self.seen.fill(false);
        let mut out = Vec::new();
        for start in 0..self.seen.len() {
            if self.seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !self.seen[d] {
                self.seen[d] = true;
                walk.push(d);
                d = self.face_next(d);
            }
            out.push(walk);
        }
        out
    }
}

pub fn faces(g: &Multigraph, rotation: &RotationSystem) -> Result<EmbeddingResult> {
    g.ensure_connected()?;
    let mut tracer = FaceTracer::new(g);
    let groups = rotation.groups(&tracer.idx, g)?;
    tracer.set_rotation(&groups);
    let walks = tracer.walks();
    let chi_gap = 2 - g.vertices.len() as i64 + g.edges.len() as i64 - walks.len() as i64;
    debug_assert!(chi_gap >= 0 && chi_gap % 2 == 0);
    Ok(EmbeddingResult {
        face_count: walks.len(),
        genus: (chi_gap / 2) as u64,
        face_walks: walks
            .into_iter()
            .map(|w| {
                w.into_iter()
                    .map(|d| {
                        tracer.idx.dart_names[d]
                            .parse()
                            .expect("generated dart names parse")
                    })
                    .collect()
            })
            .collect(),
    })
}

/// Number of rotation systems, `Π (deg(v) - 1)!`.
pub fn rotation_count(g: &Multigraph) -> Option<u128> {
    tuple_count(g.vertices.iter().map(|v| g.degree(v)))
}

pub(crate) fn guarded_count(total: Option<u128>, limit: Option<u64>) -> Result<u64> {
    let too_large = |limit| Error::SearchTooLarge {
        size: total.map_or_else(|| "more than 2^128".into(), |t| t.to_string()),
        limit,
    };
    let total = total
        .and_then(|t| u64::try_from(t).ok())
        .ok_or_else(|| too_large(limit.unwrap_or(u64::MAX)))?;
    match limit {
        Some(limit) if total > limit => Err(too_large(limit)),
        _ => Ok(total),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusExtremes {
    pub min_genus: u64,
    pub min_witness: RotationSystem,
    pub max_genus: u64,
    pub max_witness: RotationSystem,
    pub rotation_systems: u64,
}

/// Exhaustive minimum and maximum embedding genus. `limit` caps the number
/// of rotation systems; `None` removes the cap.
pub fn genus_extremes(g: &Multigraph, limit: Option<u64>) -> Result<GenusExtremes> {
    g.ensure_connected()?;
    let total = guarded_count(rotation_count(g), limit)?;
    let proto = FaceTracer::new(g);
    let base = proto.idx.base();
    let parts = par_ranges(total, |start, len| {
        let mut tracer = proto.clone();
        let mut ext: Option<Extremes> = None;
        for_range(&base, start, len, |i, groups| {
            tracer.set_rotation(groups);
            let faces = tracer.count_faces();
            let genus = tracer.genus_for_faces(faces);
            match &mut ext {
                Some(e) => e.observe(genus, i),
                None => ext = Some(Extremes::new(genus, i)),
            }
        });
        ext
    });
    let ext = Extremes::fold(parts).expect("connected graphs have a rotation system");
    let witness = |i: u64| {
        RotationSystem::from_groups(&proto.idx, g, Odometer::at(&base, i as u128).groups())
    };
    Ok(GenusExtremes {
        min_genus: ext.min.0 as u64,
        min_witness: witness(ext.min.1),
        max_genus: ext.max.0 as u64,
        max_witness: witness(ext.max.1),
        rotation_systems: total,
    })
}

pub fn min_genus(g: &Multigraph, limit: Option<u64>) -> Result<(u64, RotationSystem)> {
    let e = genus_extremes(g, limit)?;
    Ok((e.min_genus, e.min_witness))
}

pub fn max_genus(g: &Multigraph, limit: Option<u64>) -> Result<(u64, RotationSystem)> {
    let e = genus_extremes(g, limit)?;
    Ok((e.max_genus, e.max_witness))
}

/// Every rotation system of `g` in enumeration order.
pub fn enumerate_rotation_systems(g: &Multigraph) -> Result<impl Iterator<Item = RotationSystem>> {
    g.validate()?;
    let idx = DartIndex::new(g);
    let base = idx.base();
    let g = g.clone();
    let mut odo = Some(Odometer::first(&base));
    Ok(std::iter::from_fn(move || {
        let current = odo.as_mut()?;
        let r = RotationSystem::from_groups(&idx, &g, current.groups());
        if !current.advance() {
            odo = None;
        }
        Some(r)
    }))
}
