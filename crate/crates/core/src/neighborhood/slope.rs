use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::surface::MultibranchedSurface;

/// Gluing slope `p/q` on the boundary torus of a branch's solid torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    pub p: i64,
    pub q: u64,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlopeSystem {
    slopes: BTreeMap<String, Slope>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SlopeViolation {
    Missing { branch: String },
    UnknownBranch { branch: String },
    Denominator { branch: String, degree: u64, q: u64 },
    NotReduced { branch: String, p: i64, q: u64 },
}

impl fmt::Display for SlopeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeViolation::Missing { branch } => write!(f, "no slope for branch `{branch}`"),
            SlopeViolation::UnknownBranch { branch } => {
                write!(f, "slope given for unknown branch `{branch}`")
            }
            SlopeViolation::Denominator { branch, degree, q } => write!(
                f,
                "slope denominator {q} at branch `{branch}` differs from its degree {degree}"
            ),
            SlopeViolation::NotReduced { branch, p, q } => {
                write!(f, "slope {p}/{q} at branch `{branch}` is not reduced")
            }
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl SlopeSystem {
    pub fn new(slopes: impl IntoIterator<Item = (String, Slope)>) -> Self {
        SlopeSystem {
            slopes: slopes.into_iter().collect(),
        }
    }

    /// Slope `1/d(l)` at every branch, which is always reduced.
    pub fn standard(x: &MultibranchedSurface) -> Result<Self> {
        x.ensure_valid()?;
        Ok(Self::new(x.branches.iter().map(|l| {
            let q = x.degree(l).expect("valid surfaces are regular");
            (l.clone(), Slope { p: 1, q })
        })))
    }

    pub fn get(&self, branch: &str) -> Option<Slope> {
        self.slopes.get(branch).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Slope)> {
        self.slopes.iter().map(|(b, s)| (b.as_str(), *s))
    }
}

/// Checks `q = d(l)` and `gcd(|p|, q) = 1` at every branch.
pub fn validate_slopes(
    x: &MultibranchedSurface,
    slopes: &SlopeSystem,
) -> Result<Vec<SlopeViolation>> {
    x.ensure_valid()?;
    let mut out = Vec::new();
    for l in &x.branches {
        let Some(s) = slopes.get(l) else {
            out.push(SlopeViolation::Missing { branch: l.clone() });
            continue;
        };
        let degree = x.degree(l).expect("valid surfaces are regular");
        if s.q != degree {
            out.push(SlopeViolation::Denominator {
                branch: l.clone(),
                degree,
                q: s.q,
            });
        }
        if gcd(s.p.unsigned_abs(), s.q) != 1 {
            out.push(SlopeViolation::NotReduced {
                branch: l.clone(),
                p: s.p,
                q: s.q,
            });
        }
    }
    for (b, _) in slopes.iter() {
        if !x.branches.iter().any(|l| l == b) {
            out.push(SlopeViolation::UnknownBranch {
                branch: b.to_string(),
            });
        }
    }
    Ok(out)
}

impl fmt::Display for SlopeSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (b, s)) in self.slopes.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{b}:{s}")?;
        }
        Ok(())
    }
}

/// Parses `branch:p/q;branch:p/q`.
impl FromStr for SlopeSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut slopes = BTreeMap::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Parse(format!("expected `branch:p/q`, got `{part}`"));
            let (branch, frac) = part.split_once(':').ok_or_else(bad)?;
            let (p, q) = frac.split_once('/').ok_or_else(bad)?;
            let slope = Slope {
                p: p.trim().parse().map_err(|_| bad())?,
                q: q.trim().parse().map_err(|_| bad())?,
            };
            if slope.q == 0 || slopes.insert(branch.trim().to_string(), slope).is_some() {
                return Err(bad());
            }
        }
        Ok(SlopeSystem { slopes })
    }
}

impl Serialize for SlopeSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
