//! Standard surfaces and a seeded generator of small random ones.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graphs::{times_circle, Multigraph};
use crate::neighborhood::CircularPermutationSystem;
use crate::surface::MultibranchedSurface;

/// The rose with `2n` petals times a circle: one branch `v` and `2n`
/// annuli `e0, e1, ...`, each wrapping once around `v` in each direction.
pub fn rose(n: usize) -> MultibranchedSurface {
    times_circle(&Multigraph::bouquet(2 * n)).expect("bouquets have no isolated vertex")
}

/// The spine of the lens space `L(p, q)`: a disk `s` whose boundary wraps
/// `p` times around the branch `l`.
pub fn lens_spine(p: u32) -> MultibranchedSurface {
    let mut x = MultibranchedSurface::new();
    x.add_branch("l")
        .add_sector("s", 0)
        .attach("s", "l", p as i64);
    x
}

/// A torus cut along a meridian: the annulus `s` with both ends on `l`.
pub fn torus() -> MultibranchedSurface {
    let mut x = MultibranchedSurface::new();
    x.add_branch("l")
        .add_sector("s", 0)
        .attach("s", "l", 1)
        .attach("s", "l", -1);
    x
}

/// Size limits for [`random_surface`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSurfaceConfig {
    pub max_branches: usize,
    pub max_sectors: usize,
    pub max_degree: u32,
    pub max_genus: u32,
    /// Most boundary circles on one sector.
    pub max_boundary: u32,
}

impl Default for RandomSurfaceConfig {
    fn default() -> Self {
        RandomSurfaceConfig {
            max_branches: 4,
            max_sectors: 6,
            max_degree: 3,
            max_genus: 2,
            max_boundary: 3,
        }
    }
}

/// A valid regular surface within `cfg`: branches `l0, l1, ...` each with a
/// random degree, sectors `s0, s1, ...` with random genus and boundary
/// circles on random branches with random signs. Branches left without
/// prebranches are dropped.
pub fn random_surface<R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &RandomSurfaceConfig,
) -> MultibranchedSurface {
    let branches = rng.gen_range(1..=cfg.max_branches.max(1));
    let sectors = rng.gen_range(1..=cfg.max_sectors.max(1));
    let degrees: Vec<i64> = (0..branches)
        .map(|_| rng.gen_range(1..=cfg.max_degree.max(1)) as i64)
        .collect();
    let mut x = MultibranchedSurface::new();
    for l in 0..branches {
        x.add_branch(format!("l{l}"));
    }
    for s in 0..sectors {
        let id = format!("s{s}");
        x.add_sector(id.clone(), rng.gen_range(0..=cfg.max_genus));
        for _ in 0..rng.gen_range(1..=cfg.max_boundary.max(1)) {
            let l = rng.gen_range(0..branches);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            x.attach(&id, &format!("l{l}"), sign * degrees[l]);
        }
    }
    let used: Vec<String> = x
        .branches
        .iter()
        .filter(|l| x.index(l) > 0)
        .cloned()
        .collect();
    x.branches = used;
    x
}

/// A uniformly random circular permutation system for a valid `x`.
pub fn random_permutation<R: Rng + ?Sized>(
    rng: &mut R,
    x: &MultibranchedSurface,
) -> CircularPermutationSystem {
    CircularPermutationSystem::new(x.branches.iter().map(|l| {
        let mut cycle: Vec<String> = x.attached(l).map(|c| c.id.clone()).collect();
        cycle.shuffle(rng);
        (l.clone(), cycle)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_surfaces_are_valid_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = RandomSurfaceConfig::default();
        for _ in 0..200 {
            let x = random_surface(&mut rng, &cfg);
            assert!(x.is_valid(), "{}", x.validate());
            assert!(x.branches.len() <= 4 && x.sectors.len() <= 6);
            assert!(x.branches.iter().all(|l| x.degree(l).unwrap() <= 3));
            random_permutation(&mut rng, &x).check(&x).unwrap();
        }
    }

    #[test]
    fn generator_is_seeded() {
        let cfg = RandomSurfaceConfig::default();
        let a = random_surface(&mut ChaCha8Rng::seed_from_u64(3), &cfg);
        let b = random_surface(&mut ChaCha8Rng::seed_from_u64(3), &cfg);
        assert_eq!(a, b);
    }

    #[test]
    fn named_families() {
        assert_eq!(rose(2).sectors.len(), 4);
        assert_eq!(torus().euler_characteristic(), 0);
        assert_eq!(lens_spine(3).euler_characteristic(), 1);
    }
}
