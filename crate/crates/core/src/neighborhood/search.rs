use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::permutation::CircularPermutationSystem;
use super::trace::Tracer;
use crate::cyclic::{canonical_rotation, for_range, par_ranges, tuple_count, Extremes, Odometer};
use crate::error::{Error, Result};
use crate::surface::MultibranchedSurface;
use crate::unionfind::UnionFind;

/// Witness groups for the min and max.
type Groups = Vec<Vec<u32>>;

/// How [`genus_range`] explores the permutation systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchMode {
    /// Every system.
    Exhaustive,
    /// The first `n` systems in enumeration order.
    Prefix { count: u64 },
    /// `count` systems drawn independently from a seeded generator; the
    /// draws for `count` are a prefix of the draws for any larger count.
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusRange {
    pub min_genus: u64,
    pub max_genus: u64,
    pub witness_min: CircularPermutationSystem,
    pub witness_max: CircularPermutationSystem,
    /// True iff every system was examined.
    pub exact: bool,
    pub systems_examined: u64,
    /// `None` when the count does not fit in 128 bits.
    #[serde(serialize_with = "serialize_count")]
    pub systems_total: Option<u128>,
}

fn serialize_count<S: serde::Serializer>(
    n: &Option<u128>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

/// Number of circular permutation systems, `Π (i(l) - 1)!`.
pub fn system_count(x: &MultibranchedSurface) -> Result<Option<u128>> {
    x.ensure_valid()?;
    Ok(tuple_count(x.branches.iter().map(|l| x.index(l))))
}

/// All systems in lexicographic order (branches by id, each cycle starting
/// at its least prebranch).
pub fn enumerate_permutation_systems(
    x: &MultibranchedSurface,
) -> Result<impl Iterator<Item = CircularPermutationSystem>> {
    let tracer = Tracer::new(x)?;
    let mut odo = Some(Odometer::first(&tracer.base));
    Ok(std::iter::from_fn(move || {
        let current = odo.as_mut()?;
        let p = tracer.system_of(current.groups());
        if !current.advance() {
            odo = None;
        }
        Some(p)
    }))
}

/// The system at position `index` of [`enumerate_permutation_systems`].
pub fn permutation_system_at(
    x: &MultibranchedSurface,
    index: u128,
) -> Result<Option<CircularPermutationSystem>> {
    let tracer = Tracer::new(x)?;
    match tuple_count(tracer.base.iter().map(Vec::len)) {
        Some(total) if index < total => Ok(Some(
            tracer.system_of(Odometer::at(&tracer.base, index).groups()),
        )),
        _ => Ok(None),
    }
}

fn checked_total(total: Option<u128>) -> Result<u64> {
    total
        .and_then(|t| u64::try_from(t).ok())
        .ok_or_else(|| Error::SearchTooLarge {
            size: total.map_or_else(|| "more than 2^128".to_string(), |t| t.to_string()),
            limit: u64::MAX,
        })
}

fn scan(tracer: &Tracer, len: u64) -> Extremes {
    let parts = par_ranges(len, |start, n| {
        let mut uf = UnionFind::new(tracer.pieces());
        let mut ext: Option<Extremes> = None;
        for_range(&tracer.base, start, n, |i, groups| {
            let g = tracer.genus(&mut uf, groups);
            match &mut ext {
                Some(e) => e.observe(g, i),
                None => ext = Some(Extremes::new(g, i)),
            }
        });
        ext
    });
    Extremes::fold(parts).expect("at least one system")
}

pub fn genus_range(x: &MultibranchedSurface, mode: SearchMode) -> Result<GenusRange> {
    let tracer = Tracer::new(x)?;
    let total = tuple_count(tracer.base.iter().map(Vec::len));
    match mode {
        SearchMode::Exhaustive | SearchMode::Prefix { .. } => {
            let all = checked_total(total);
            let (len, exact) = match (mode, all) {
                (SearchMode::Prefix { count }, Ok(all)) => (count.min(all), count >= all),
                (SearchMode::Prefix { count }, Err(_)) => (count, false),
                (_, Ok(all)) => (all, true),
                (_, Err(e)) => return Err(e),
            };
            if len == 0 {
                return Err(Error::EmptySample);
            }
            let ext = scan(&tracer, len);
            let witness = |i: u64| tracer.system_of(Odometer::at(&tracer.base, i as u128).groups());
            Ok(GenusRange {
                min_genus: ext.min.0 as u64,
                max_genus: ext.max.0 as u64,
                witness_min: witness(ext.min.1),
                witness_max: witness(ext.max.1),
                exact,
                systems_examined: len,
                systems_total: total,
            })
        }
        SearchMode::Sample { count, seed } => {
            if count == 0 {
                return Err(Error::EmptySample);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut uf = UnionFind::new(tracer.pieces());
            let mut groups = tracer.base.clone();
            let mut best: Option<(Extremes, Groups, Groups)> = None;
            for i in 0..count {
                for g in groups.iter_mut() {
                    g.shuffle(&mut rng);
                    canonical_rotation(g);
                }
                let genus = tracer.genus(&mut uf, &groups);
                match &mut best {
                    None => best = Some((Extremes::new(genus, i), groups.clone(), groups.clone())),
                    Some((ext, lo, hi)) => {
                        let before = *ext;
                        ext.observe(genus, i);
                        if ext.min != before.min {
                            *lo = groups.clone();
                        }
                        if ext.max != before.max {
                            *hi = groups.clone();
                        }
                    }
                }
            }
            let (ext, lo, hi) = best.expect("count >= 1");
            Ok(GenusRange {
                min_genus: ext.min.0 as u64,
                max_genus: ext.max.0 as u64,
                witness_min: tracer.system_of(&lo),
                witness_max: tracer.system_of(&hi),
                exact: false,
                systems_examined: count,
                systems_total: total,
            })
        }
    }
}

/// Every boundary genus achieved by some system.
pub fn genus_values(x: &MultibranchedSurface) -> Result<BTreeSet<u64>> {
    let tracer = Tracer::new(x)?;
    let total = checked_total(tuple_count(tracer.base.iter().map(Vec::len)))?;
    let parts = par_ranges(total, |start, n| {
        let mut uf = UnionFind::new(tracer.pieces());
        let mut seen = BTreeSet::new();
        for_range(&tracer.base, start, n, |_, groups| {
            seen.insert(tracer.genus(&mut uf, groups) as u64);
        });
        seen
    });
    Ok(parts.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lens_spine, rose, torus};
    use crate::neighborhood::boundary_genus;

    #[test]
    fn counts_match_factorials() {
        assert_eq!(system_count(&lens_spine(3)).unwrap(), Some(1));
        assert_eq!(system_count(&rose(1)).unwrap(), Some(6));
        assert_eq!(system_count(&rose(2)).unwrap(), Some(5040));
        assert_eq!(enumerate_permutation_systems(&rose(1)).unwrap().count(), 6);
        assert_eq!(
            enumerate_permutation_systems(&lens_spine(2))
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn enumeration_is_sorted_distinct_and_indexable() {
        let x = rose(2);
        let all: Vec<_> = enumerate_permutation_systems(&x).unwrap().collect();
        assert_eq!(all.len(), 5040);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for i in [0usize, 1, 719, 5039] {
            assert_eq!(
                permutation_system_at(&x, i as u128).unwrap().as_ref(),
                Some(&all[i])
            );
        }
        assert_eq!(permutation_system_at(&x, 5040).unwrap(), None);
        for p in &all[..20] {
            p.check(&x).unwrap();
        }
    }

    #[test]
    fn rose_ranges() {
        let r = genus_range(&rose(1), SearchMode::Exhaustive).unwrap();
        assert_eq!((r.min_genus, r.max_genus, r.exact), (1, 3, true));
        assert_eq!(boundary_genus(&rose(1), &r.witness_min).unwrap(), 1);
        assert_eq!(boundary_genus(&rose(1), &r.witness_max).unwrap(), 3);
        let r = genus_range(&rose(2), SearchMode::Exhaustive).unwrap();
        assert_eq!((r.min_genus, r.max_genus), (1, 5));
        assert_eq!(r.systems_examined, 5040);
    }

    #[test]
    fn witnesses_are_first_in_enumeration_order() {
        let x = rose(1);
        let r = genus_range(&x, SearchMode::Exhaustive).unwrap();
        let first_min = enumerate_permutation_systems(&x)
            .unwrap()
            .find(|p| boundary_genus(&x, p).unwrap() == r.min_genus)
            .unwrap();
        assert_eq!(r.witness_min, first_min);
    }

    #[test]
    fn lens_and_torus() {
        let r = genus_range(&lens_spine(5), SearchMode::Exhaustive).unwrap();
        assert_eq!((r.min_genus, r.max_genus), (0, 0));
        let r = genus_range(&torus(), SearchMode::Exhaustive).unwrap();
        assert_eq!((r.min_genus, r.max_genus), (2, 2));
    }

    #[test]
    fn prefix_and_sample_modes() {
        let x = rose(2);
        let p = genus_range(&x, SearchMode::Prefix { count: 10 }).unwrap();
        assert!(!p.exact);
        assert_eq!(p.systems_examined, 10);
        let full = genus_range(&x, SearchMode::Prefix { count: 1 << 20 }).unwrap();
        assert!(full.exact);
        assert_eq!(full.max_genus, 5);

        let s = genus_range(&x, SearchMode::Sample { count: 50, seed: 7 }).unwrap();
        assert!(!s.exact);
        assert!(s.min_genus >= 1 && s.max_genus <= 5);
        assert_eq!(
            s,
            genus_range(&x, SearchMode::Sample { count: 50, seed: 7 }).unwrap()
        );
        assert_eq!(boundary_genus(&x, &s.witness_max).unwrap(), s.max_genus);
        assert!(matches!(
            genus_range(&x, SearchMode::Sample { count: 0, seed: 7 }),
            Err(Error::EmptySample)
        ));
    }

    #[test]
    fn achievable_values() {
        assert_eq!(genus_values(&rose(1)).unwrap(), BTreeSet::from([1, 3]));
        assert_eq!(genus_values(&rose(2)).unwrap(), BTreeSet::from([1, 3, 5]));
    }
}
