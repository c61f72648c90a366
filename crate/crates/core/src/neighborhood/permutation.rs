use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::cyclic::canonical_rotation;
use crate::error::{Error, Result};
use crate::surface::{is_plain_identifier, MultibranchedSurface};

/// A cyclic order of the attached prebranches at every branch.
///
/// Each cycle is stored rotated so that its lexicographically least
/// prebranch comes first. The literal form is
/// `branch:pre,pre,...;branch:...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularPermutationSystem {
    cycles: BTreeMap<String, Vec<String>>,
}

impl CircularPermutationSystem {
    pub fn new<B, P, C>(cycles: impl IntoIterator<Item = (B, C)>) -> Self
    where
        B: Into<String>,
        P: Into<String>,
        C: IntoIterator<Item = P>,
    {
        let mut out = CircularPermutationSystem::default();
        for (branch, cycle) in cycles {
            let mut cycle: Vec<String> = cycle.into_iter().map(Into::into).collect();
            canonical_rotation(&mut cycle);
            out.cycles.insert(branch.into(), cycle);
        }
        out
    }

    pub fn cycle(&self, branch: &str) -> Option<&[String]> {
        self.cycles.get(branch).map(Vec::as_slice)
    }

    /// Cycles keyed by branch, in branch order.
    pub fn cycles(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.cycles.iter().map(|(b, c)| (b.as_str(), c.as_slice()))
    }

    /// Every cycle traversed backwards.
    pub fn reversed(&self) -> Self {
        Self::new(self.cycles.iter().map(|(b, c)| {
            let mut c = c.clone();
            c.reverse();
            (b.clone(), c)
        }))
    }

    /// Checks that each branch of `x` has a cycle containing exactly its
    /// attached prebranches.
    pub fn check(&self, x: &MultibranchedSurface) -> Result<()> {
        let mismatch = |msg: String| Err(Error::PermutationMismatch(msg));
        for branch in self.cycles.keys() {
            if !x.branches.contains(branch) {
                return mismatch(format!("unknown branch `{branch}`"));
            }
        }
        for branch in &x.branches {
            let Some(cycle) = self.cycles.get(branch) else {
                return mismatch(format!("no cycle for branch `{branch}`"));
            };
            let want: BTreeSet<&str> = x.attached(branch).map(|c| c.id.as_str()).collect();
            let mut have = BTreeSet::new();
            for c in cycle {
                if !have.insert(c.as_str()) {
                    return mismatch(format!("prebranch `{c}` repeated at branch `{branch}`"));
                }
            }
            if let Some(extra) = have.difference(&want).next() {
                return mismatch(format!(
                    "prebranch `{extra}` is not attached to branch `{branch}`"
                ));
            }
            if let Some(missing) = want.difference(&have).next() {
                return mismatch(format!(
                    "prebranch `{missing}` missing at branch `{branch}`"
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CircularPermutationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (branch, cycle)) in self.cycles.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{branch}:{}", cycle.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for CircularPermutationSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cycles: Vec<(String, Vec<String>)> = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (branch, items) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `branch:items` in `{part}`")))?;
            let branch = branch.trim();
            if !is_plain_identifier(branch) {
                return Err(Error::Parse(format!("bad branch name in `{part}`")));
            }
            if cycles.iter().any(|(b, _)| b == branch) {
                return Err(Error::Parse(format!("branch `{branch}` listed twice")));
            }
            let items: Vec<String> = items.split(',').map(|c| c.trim().to_string()).collect();
            if items.iter().any(|c| !is_plain_identifier(c)) {
                return Err(Error::Parse(format!("bad prebranch list in `{part}`")));
            }
            cycles.push((branch.to_string(), items));
        }
        Ok(Self::new(cycles))
    }
}

impl Serialize for CircularPermutationSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lens_spine, rose};

    #[test]
    fn literal_round_trip_and_canonical_rotation() {
        let p: CircularPermutationSystem = " v: e1+ ,e0-,e0+ ; w:x ".parse().unwrap();
        assert_eq!(p.to_string(), "v:e0+,e1+,e0-;w:x");
        assert_eq!(
            p.to_string().parse::<CircularPermutationSystem>().unwrap(),
            p
        );
        assert_eq!(p.cycle("v").unwrap()[0], "e0+");
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["v", "v:a;v:b", ":a", "v:a,,b"] {
            assert!(bad.parse::<CircularPermutationSystem>().is_err(), "{bad}");
        }
    }

    #[test]
    fn checks_against_surface() {
        let x = rose(1);
        let ok: CircularPermutationSystem = "v:e0+,e0-,e1+,e1-".parse().unwrap();
        ok.check(&x).unwrap();
        for bad in [
            "v:e0+,e0-,e1+",
            "v:e0+,e0-,e1+,e1-,e2+",
            "v:e0+,e0+,e1+,e1-",
            "v:e0+,e0-,e1+,e1-;w:q",
            "",
        ] {
            let p: CircularPermutationSystem = bad.parse().unwrap();
            assert!(
                matches!(p.check(&x), Err(Error::PermutationMismatch(_))),
                "{bad}"
            );
        }
        let lens: CircularPermutationSystem = "l:s.1".parse().unwrap();
        lens.check(&lens_spine(3)).unwrap();
    }

    #[test]
    fn reversal() {
        let p: CircularPermutationSystem = "v:a,b,c,d".parse().unwrap();
        assert_eq!(p.reversed().to_string(), "v:a,d,c,b");
        assert_eq!(p.reversed().reversed(), p);
    }
}
