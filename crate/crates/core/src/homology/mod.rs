//! First homology of multibranched surfaces.
//!
//! `H1(X)` is the cokernel of the sector-by-branch relation matrix, whose
//! entry `(s, l)` sums the oriented degrees of the boundary circles of `s`
//! covering `l`, plus a free summand of rank
//! `C(X) - χ(X) + #sectors - #branches` (`C` counts components). That
//! summand is the first Betti number of `X` with an open disk removed from
//! every sector, minus the branch count.
//!
//! [`h1_cw_oracle`] recomputes the group from an explicit cell structure as
//! an independent check.

mod cw;
mod group;
mod matrix;
mod snf;

pub use cw::{cell_complex, h1_cw_oracle, CellComplex};
pub use group::AbelianGroup;
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, smith_normal_form_with_transforms, SmithForm, Transforms};

use crate::error::{Error, Result};
use crate::surface::MultibranchedSurface;

/// Sector-by-branch matrix of summed oriented degrees, rows in sector list
/// order and columns in branch list order.
pub fn relation_matrix(x: &MultibranchedSurface) -> Result<IntegerMatrix> {
    let idx = x.indexed()?;
    let mut d = IntegerMatrix::zeros(idx.sectors(), idx.branch_ids.len());
    for c in 0..idx.pre_od.len() {
        let (s, l) = (idx.pre_sector[c], idx.pre_branch[c]);
        d[(s, l)] = d[(s, l)]
            .checked_add(idx.pre_od[c] as i128)
            .ok_or(Error::Overflow("relation matrix"))?;
    }
    Ok(d)
}

/// `rank H1(Ẋ) - n`, where `Ẋ` removes an open disk from each sector.
///
/// `Ẋ` deformation retracts onto a graph with the components of `X` and
/// Euler characteristic `χ(X) - m`.
pub fn extra_free_rank(x: &MultibranchedSurface) -> Result<i64> {
    x.ensure_valid()?;
    Ok(
        x.component_count() as i64 - x.euler_characteristic() + x.sectors.len() as i64
            - x.branches.len() as i64,
    )
}

pub fn h1(x: &MultibranchedSurface) -> Result<AbelianGroup> {
    let d = relation_matrix(x)?;
    let snf = smith_normal_form(&d)?;
    let extra = extra_free_rank(x)?;
    let free = (x.branches.len() - snf.rank) as i64 + extra;
    let free = usize::try_from(free).expect("negative free rank for a valid surface");
    Ok(AbelianGroup::from_invariant_factors(free, &snf.diagonal))
}

pub fn rank_h1(x: &MultibranchedSurface) -> Result<usize> {
    Ok(h1(x)?.free_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lens_spine, rose, torus};
    use crate::graphs::{times_circle, Multigraph};
    use crate::surface::disk_sum;

    #[test]
    fn relation_matrices() {
        assert_eq!(
            relation_matrix(&lens_spine(5)).unwrap(),
            IntegerMatrix::from_rows(&[[5]])
        );
        assert_eq!(
            relation_matrix(&rose(1)).unwrap(),
            IntegerMatrix::from_rows(&[[0], [0]])
        );
        let theta = relation_matrix(&times_circle(&Multigraph::theta()).unwrap()).unwrap();
        assert_eq!((theta.rows(), theta.cols()), (3, 2));
        for i in 0..3 {
            assert_eq!(theta.row(i), &[-1, 1]);
        }
        assert_eq!(smith_normal_form(&theta).unwrap().rank, 1);
    }

    #[test]
    fn named_families() {
        for n in 1..=3 {
            assert_eq!(h1(&rose(n)).unwrap(), AbelianGroup::free(2 * n + 1));
        }
        for p in [2, 3, 5, 12] {
            assert_eq!(
                h1(&lens_spine(p)).unwrap(),
                AbelianGroup::from_invariant_factors(0, &[p as i128])
            );
            assert_eq!(rank_h1(&lens_spine(p)).unwrap(), 0);
        }
        assert_eq!(h1(&torus()).unwrap(), AbelianGroup::free(2));
        assert_eq!(rank_h1(&rose(2)).unwrap(), 5);
    }

    #[test]
    fn lens_disk_sum_is_cyclic_of_order_six() {
        let x = disk_sum(&lens_spine(2), "s", &lens_spine(3), "s").unwrap();
        let g = h1(&x).unwrap();
        assert_eq!(g, AbelianGroup::from_invariant_factors(0, &[6]));
        assert_eq!(g.torsion_order(), Some(6));
        assert_eq!(h1_cw_oracle(&x).unwrap(), g);
    }

    #[test]
    fn disjoint_lens_spines_have_rank_zero() {
        let mut x = lens_spine(2);
        for p in [3, 4, 5] {
            x = x.disjoint_union(&lens_spine(p));
        }
        assert_eq!(rank_h1(&x).unwrap(), 0);
        assert_eq!(h1(&x).unwrap().to_string(), "Z/2 ⊕ Z/60");
    }

    #[test]
    fn invalid_surface_is_rejected() {
        let mut x = lens_spine(2);
        x.prebranches[0].oriented_degree = 0;
        assert!(matches!(h1(&x), Err(Error::Invalid(_))));
    }
}
