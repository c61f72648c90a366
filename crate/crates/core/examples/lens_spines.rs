//! Spines of lens spaces: torsion in H1 and a single neighborhood each.

use multibranched::bounds::genus_bounds;
use multibranched::families::lens_spine;
use multibranched::homology::h1;
use multibranched::neighborhood::SearchMode;

fn main() -> multibranched::Result<()> {
    for p in [2, 3, 5, 7] {
        let x = lens_spine(p);
        let r = genus_bounds(&x, SearchMode::Exhaustive)?;
        println!(
            "p = {p}: H1 = {}, g(∂N) = {}, S^3 check: {}",
            h1(&x)?,
            r.max_boundary_genus,
            r.s3_obstruction.description()
        );
    }
    Ok(())
}
