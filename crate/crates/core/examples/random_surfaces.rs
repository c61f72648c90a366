//! Seeded random surfaces and permutation systems, with the boundary genus
//! of one random neighborhood against the exhaustive range.

use multibranched::families::{random_permutation, random_surface, RandomSurfaceConfig};
use multibranched::homology::h1;
use multibranched::neighborhood::{boundary_genus, genus_range, system_count, SearchMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> multibranched::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = RandomSurfaceConfig::default();
    for _ in 0..5 {
        let x = random_surface(&mut rng, &cfg);
        let p = random_permutation(&mut rng, &x);
        let g = boundary_genus(&x, &p)?;
        let total = system_count(&x)?.unwrap_or(u128::MAX);
        let range = if total <= 100_000 {
            let r = genus_range(&x, SearchMode::Exhaustive)?;
            format!("[{}, {}]", r.min_genus, r.max_genus)
        } else {
            "too many systems".to_string()
        };
        println!(
            "{} branches, {} sectors, H1 = {}: g(∂N) = {g} for one system, range {range} of {total}",
            x.branches.len(),
            x.sectors.len(),
            h1(&x)?
        );
    }
    Ok(())
}
