use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with
/// `1 < d1 | d2 | ... | dk`.
///
/// Rendered as `Z^r` for the free part followed by ` ⊕ Z/d` per torsion
/// factor, e.g. `Z^2 ⊕ Z/2 ⊕ Z/6`; the free part is omitted when `r = 0`
/// and the trivial group renders as `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i128>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds the group from invariant factors, dropping units.
    ///
    /// # Panics
    /// If a factor is not positive or the factors fail the divisibility chain.
    pub fn from_invariant_factors(free_rank: usize, factors: &[i128]) -> Self {
        let torsion: Vec<i128> = factors.iter().copied().filter(|&d| d != 1).collect();
        assert!(
            torsion.iter().all(|&d| d > 1),
            "invariant factors must be positive"
        );
        assert!(
            torsion.windows(2).all(|w| w[1] % w[0] == 0),
            "invariant factors must form a divisibility chain"
        );
        AbelianGroup { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup, if it fits.
    pub fn torsion_order(&self) -> Option<i128> {
        self.torsion
            .iter()
            .try_fold(1i128, |acc, &d| acc.checked_mul(d))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for d in &self.torsion {
            if !first {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(AbelianGroup::default());
        }
        let bad = |part: &str| Error::Parse(format!("bad group summand `{part}` in `{s}`"));
        let mut group = AbelianGroup::default();
        for (i, part) in s.split('⊕').map(str::trim).enumerate() {
            if let Some(r) = part.strip_prefix("Z^") {
                if i != 0 {
                    return Err(bad(part));
                }
                group.free_rank = r.parse().map_err(|_| bad(part))?;
                if group.free_rank == 0 {
                    return Err(bad(part));
                }
            } else if let Some(d) = part.strip_prefix("Z/") {
                let d: i128 = d.parse().map_err(|_| bad(part))?;
                if d <= 1 || group.torsion.last().is_some_and(|&prev| d % prev != 0) {
                    return Err(bad(part));
                }
                group.torsion.push(d);
            } else {
                return Err(bad(part));
            }
        }
        Ok(group)
    }
}
