//! The necessary condition for embedding in `S^3`: some neighborhood with
//! boundary genus at least rank H1.

use multibranched::bounds::s3_obstruction;
use multibranched::families::rose;
use multibranched::graphs::{times_circle, Multigraph};
use multibranched::neighborhood::SearchMode;

fn main() -> multibranched::Result<()> {
    let cases = [
        ("rose(1)", rose(1), SearchMode::Exhaustive),
        (
            "K4 x S^1",
            times_circle(&Multigraph::complete(4))?,
            SearchMode::Exhaustive,
        ),
        (
            "K5 x S^1",
            times_circle(&Multigraph::complete(5))?,
            SearchMode::Exhaustive,
        ),
        (
            "K5 x S^1, 50 samples",
            times_circle(&Multigraph::complete(5))?,
            SearchMode::Sample { count: 50, seed: 7 },
        ),
    ];
    for (name, x, mode) in cases {
        let v = s3_obstruction(&x, mode)?;
        println!(
            "{name:>22}: {v} ({}), exit code {}",
            v.description(),
            v.exit_code()
        );
    }
    Ok(())
}
