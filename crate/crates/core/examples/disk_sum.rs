//! Disk sums: H1 adds, and the boundary genus values form a sumset.

use multibranched::disk_sum;
use multibranched::families::{lens_spine, rose};
use multibranched::homology::h1;
use multibranched::neighborhood::genus_values;

fn main() -> multibranched::Result<()> {
    let pairs = [
        ("lens2 # lens3", lens_spine(2), "s", lens_spine(3), "s"),
        ("rose1 # lens2", rose(1), "e0", lens_spine(2), "s"),
        ("rose1 # rose1", rose(1), "e0", rose(1), "e1"),
    ];
    for (name, a, sa, b, sb) in pairs {
        let sum = disk_sum(&a, sa, &b, sb)?;
        println!(
            "{name}: H1 = {} (summands {} and {}), g(∂N) values {:?}",
            h1(&sum)?,
            h1(&a)?,
            h1(&b)?,
            genus_values(&sum)?
        );
    }
    Ok(())
}
