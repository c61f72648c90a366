//! `G x S^1` as a multibranched surface, and the check that its boundary
//! genus range matches the embedding genus range of `G`.

use multibranched::graphs::{times_circle, verify_product_theorem, Multigraph};
use multibranched::io::surface_to_json;

fn main() -> multibranched::Result<()> {
    let theta = times_circle(&Multigraph::theta())?;
    println!(
        "theta x S^1 has {} branches and {} annuli",
        theta.branches.len(),
        theta.sectors.len()
    );
    println!("{}", surface_to_json(&times_circle(&Multigraph::path(2))?));
    for (name, g) in [
        ("bouquet(2)", Multigraph::bouquet(2)),
        ("theta", Multigraph::theta()),
        ("K4", Multigraph::complete(4)),
        ("path(3)", Multigraph::path(3)),
    ] {
        let r = verify_product_theorem(&g, None)?;
        println!(
            "{name:>10}: rank {} - max g(∂N) = {} = 2*{}, rank - min g(∂N) = {} = 2*{} ({})",
            r.rank_h1,
            r.min_side,
            r.min_genus,
            r.max_side,
            r.max_genus,
            if r.passed { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
