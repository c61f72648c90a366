//! Traces the boundary of a neighborhood for a chosen permutation system.

use multibranched::families::rose;
use multibranched::neighborhood::{trace_boundary, CircularPermutationSystem};

fn main() -> multibranched::Result<()> {
    let x = rose(1);
    for literal in ["v:e0+,e0-,e1+,e1-", "v:e0+,e1+,e0-,e1-"] {
        let p: CircularPermutationSystem = literal.parse()?;
        let b = trace_boundary(&x, &p)?;
        println!(
            "P = {p}: {} component(s), total genus {}",
            b.total_components, b.total_genus
        );
        for c in &b.components {
            let sides: Vec<String> = c.sides.iter().map(ToString::to_string).collect();
            println!("  genus {} from sides {}", c.genus, sides.join(" "));
        }
    }
    Ok(())
}
