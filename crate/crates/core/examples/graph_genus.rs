//! Minimum and maximum embedding genus of small graphs, exhaustively and
//! via spanning trees.

use multibranched::graphs::{
    faces, genus_extremes, xuong_max_genus, Multigraph, DEFAULT_SEARCH_LIMIT,
};

fn main() -> multibranched::Result<()> {
    let mut k33 = Multigraph::new();
    for v in ["a0", "a1", "a2", "b0", "b1", "b2"] {
        k33.add_vertex(v);
    }
    for i in 0..3 {
        for j in 0..3 {
            k33.add_edge(format!("e{i}{j}"), &format!("a{i}"), &format!("b{j}"));
        }
    }
    let graphs = [
        ("bouquet(2)", Multigraph::bouquet(2)),
        ("theta", Multigraph::theta()),
        ("K4", Multigraph::complete(4)),
        ("K5", Multigraph::complete(5)),
        ("K3,3", k33),
    ];
    for (name, g) in graphs {
        let e = genus_extremes(&g, Some(DEFAULT_SEARCH_LIMIT))?;
        let x = xuong_max_genus(&g, None)?;
        assert_eq!(x.max_genus, e.max_genus);
        println!(
            "{name:>10}: genus {}..={} over {} rotations; Xuong deficiency {} over {} spanning trees",
            e.min_genus, e.max_genus, e.rotation_systems, x.deficiency, x.spanning_trees
        );
        let walks = faces(&g, &e.min_witness)?;
        println!(
            "{:>12}minimal rotation {} has {} faces",
            "", e.min_witness, walks.face_count
        );
    }
    Ok(())
}
