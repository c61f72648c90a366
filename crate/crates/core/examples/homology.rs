//! First homology of a few surfaces, computed from the relation matrix and
//! cross-checked against the cellular chain complex.

use multibranched::families::{lens_spine, rose, torus};
use multibranched::homology::{h1, h1_cw_oracle, relation_matrix, smith_normal_form};
use multibranched::io::read_surface;

fn main() -> multibranched::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/lens5.json");
    let from_file = read_surface(path.as_ref())?;
    for (name, x) in [
        ("rose(1)", rose(1)),
        ("rose(2)", rose(2)),
        ("torus", torus()),
        ("lens spine p=3", lens_spine(3)),
        ("data/lens5.json", from_file),
    ] {
        let group = h1(&x)?;
        assert_eq!(group, h1_cw_oracle(&x)?);
        let d = relation_matrix(&x)?;
        let snf = smith_normal_form(&d)?;
        println!(
            "{name:>16}: H1 = {group:<8} relation matrix {}x{}, diagonal {:?}",
            d.rows(),
            d.cols(),
            snf.diagonal
        );
    }
    Ok(())
}
