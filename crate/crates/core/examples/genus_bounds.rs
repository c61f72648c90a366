//! Lower and upper bounds on embeddable genus for the first few roses.

use multibranched::bounds::genus_bounds;
use multibranched::families::rose;
use multibranched::neighborhood::SearchMode;

fn main() -> multibranched::Result<()> {
    for n in 1..=2 {
        let r = genus_bounds(&rose(n), SearchMode::Exhaustive)?;
        println!(
            "rose({n}): rank H1 = {}, g(∂N) in [{}, {}] over {} systems",
            r.rank_h1, r.min_boundary_genus, r.max_boundary_genus, r.systems_examined
        );
        println!(
            "  min eg >= {}, max eg >= {}, max eg <= {}",
            r.lower_bound_min_genus, r.lower_bound_max_genus, r.upper_bound_max_genus
        );
    }
    // rose(3) has 11! systems.
    let r = genus_bounds(
        &rose(3),
        SearchMode::Sample {
            count: 20_000,
            seed: 1,
        },
    )?;
    println!(
        "rose(3), sampled: max eg >= {} (exact: {})",
        r.lower_bound_max_genus, r.max_boundary_genus_exact
    );
    Ok(())
}
