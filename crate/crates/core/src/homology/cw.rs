//! Cellular chain complex of a multibranched surface.
//!
//! Cells: one vertex and one loop edge per branch. A sector of genus `g`
//! with boundary circles `c1..cb` contributes `2g` loop edges at the vertex
//! of the branch under `c1`, `b - 1` arcs from that vertex to the vertex
//! under each `ci`, and one 2-cell attached along
//! `[a1,b1]...[ag,bg] c1 (t2 c2 t2^-1) ... (tb cb tb^-1)`, where `ci`
//! runs `od(ci)` times around its branch. Homology is read off from
//! kernel and image lattices, without the Euler characteristic shortcut.

use super::group::AbelianGroup;
use super::matrix::IntegerMatrix;
use super::snf::{smith_normal_form, smith_normal_form_with_transforms};
use crate::error::{Error, Result};
use crate::surface::MultibranchedSurface;

#[derive(Clone, Debug)]
pub struct CellComplex {
    /// Boundary of 1-cells: vertices x edges.
    pub d1: IntegerMatrix,
    /// Boundary of 2-cells: edges x faces.
    pub d2: IntegerMatrix,
}

pub fn cell_complex(x: &MultibranchedSurface) -> Result<CellComplex> {
    let idx = x.indexed()?;
    let n = idx.branch_ids.len();

    let mut per_sector: Vec<Vec<usize>> = vec![Vec::new(); idx.sectors()];
    for c in 0..idx.pre_od.len() {
        per_sector[idx.pre_sector[c]].push(c);
    }

    // Edge layout: branch loops first, then per sector its handle loops and
    // connecting arcs.
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut handle_loops = 0usize;
    for (s, circles) in per_sector.iter().enumerate() {
        handle_loops += 2 * x.sectors[s].shape.genus as usize;
        let base = idx.pre_branch[circles[0]];
        for &c in &circles[1..] {
            arcs.push((base, idx.pre_branch[c]));
        }
    }
    let edges = n + handle_loops + arcs.len();

    let mut d1 = IntegerMatrix::zeros(n, edges);
    for (k, &(from, to)) in arcs.iter().enumerate() {
        let e = n + handle_loops + k;
        d1[(to, e)] += 1;
        d1[(from, e)] -= 1;
    }

    let mut d2 = IntegerMatrix::zeros(edges, idx.sectors());
    for (s, circles) in per_sector.iter().enumerate() {
        for &c in circles {
            let l = idx.pre_branch[c];
            d2[(l, s)] = d2[(l, s)]
                .checked_add(idx.pre_od[c] as i128)
                .ok_or(Error::Overflow("cellular boundary"))?;
        }
    }
    Ok(CellComplex { d1, d2 })
}

/// `H1` as `ker d1 / im d2`, computed in a basis of the kernel lattice.
pub fn h1_cw_oracle(x: &MultibranchedSurface) -> Result<AbelianGroup> {
    let cx = cell_complex(x)?;
    let d2_zero = cx.d1.checked_mul(&cx.d2)?;
    assert!(d2_zero.is_zero(), "d1 * d2 must vanish");

    let snf = smith_normal_form_with_transforms(&cx.d1)?;
    let t = snf.transforms.expect("transforms requested");
    // Columns rank.. of `right` span ker d1; `right_inverse` gives
    // coordinates in that basis.
    let coords = t.right_inverse.checked_mul(&cx.d2)?;
    for i in 0..snf.rank {
        assert!(
            coords.row(i).iter().all(|&v| v == 0),
            "boundaries lie in the cycles"
        );
    }
    let relations = coords.tail_rows(snf.rank);
    let kernel_rank = relations.rows();
    let rel = smith_normal_form(&relations)?;
    Ok(AbelianGroup::from_invariant_factors(
        kernel_rank - rel.rank,
        &rel.diagonal,
    ))
}
