use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::graph::{DartIndex, DartRef, Multigraph};
use crate::error::{Error, Result};
use crate::surface::is_plain_identifier;

/// Cyclic order of the darts around every vertex.
///
/// Cycles are stored starting at the dart whose literal (`e1+`) is least;
/// the literal form of the whole system is `v1:e1+,e2+,e1-;v2:...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotations: BTreeMap<String, Vec<DartRef>>,
}

fn rotate_to_least(darts: &mut [DartRef]) {
    let names: Vec<String> = darts.iter().map(ToString::to_string).collect();
    if let Some(pos) = (0..names.len()).min_by(|&a, &b| names[a].cmp(&names[b])) {
        darts.rotate_left(pos);
    }
}

impl RotationSystem {
    pub fn new<V: Into<String>>(rotations: impl IntoIterator<Item = (V, Vec<DartRef>)>) -> Self {
        RotationSystem {
            rotations: rotations
                .into_iter()
                .map(|(v, mut darts)| {
                    rotate_to_least(&mut darts);
                    (v.into(), darts)
                })
                .collect(),
        }
    }

    pub fn at(&self, vertex: &str) -> Option<&[DartRef]> {
        self.rotations.get(vertex).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[DartRef])> {
        self.rotations
            .iter()
            .map(|(v, d)| (v.as_str(), d.as_slice()))
    }

    /// Checks that every dart of `g` appears exactly once, at its own vertex.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        let bad = |msg: String| Err(Error::RotationMismatch(msg));
        let ends: HashMap<String, &str> = g
            .edges
            .iter()
            .flat_map(|e| {
                [
                    (format!("{}+", e.id), e.to.as_str()),
                    (format!("{}-", e.id), e.from.as_str()),
                ]
            })
            .collect();
        for v in self.rotations.keys() {
            if !g.vertices.contains(v) {
                return bad(format!("unknown vertex `{v}`"));
            }
        }
        let mut seen = HashSet::new();
        for v in &g.vertices {
            let Some(darts) = self.rotations.get(v) else {
                return bad(format!("no rotation at vertex `{v}`"));
            };
            for d in darts {
                let name = d.to_string();
                match ends.get(&name) {
                    None => return bad(format!("unknown dart `{name}`")),
                    Some(&at) if at != v => {
                        return bad(format!("dart `{name}` is not incident to `{v}`"))
                    }
                    _ => {}
                }
                if !seen.insert(name.clone()) {
                    return bad(format!("dart `{name}` repeated"));
                }
            }
        }
        if seen.len() != ends.len() {
            let missing = ends
                .keys()
                .filter(|d| !seen.contains(*d))
                .min()
                .expect("some dart");
            return bad(format!("dart `{missing}` missing"));
        }
        Ok(())
    }

    pub(crate) fn from_groups(idx: &DartIndex, g: &Multigraph, groups: &[Vec<u32>]) -> Self {
        RotationSystem::new(idx.vertex_order.iter().zip(groups).map(|(&v, grp)| {
            let darts = grp
                .iter()
                .map(|&r| {
                    idx.dart_names[idx.by_rank[r as usize]]
                        .parse()
                        .expect("generated dart names parse")
                })
                .collect();
            (g.vertices[v].clone(), darts)
        }))
    }

    /// Dart-rank groups in the order of [`DartIndex::base`].
    pub(crate) fn groups(&self, idx: &DartIndex, g: &Multigraph) -> Result<Vec<Vec<u32>>> {
        self.check(g)?;
        let by_name: HashMap<&str, usize> = idx
            .dart_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        Ok(idx
            .vertex_order
            .iter()
            .map(|&v| {
                self.rotations[&g.vertices[v]]
                    .iter()
                    .map(|d| idx.rank_of[by_name[d.to_string().as_str()]])
                    .collect()
            })
            .collect())
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, darts)) in self.rotations.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}:")?;
            for (j, d) in darts.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RotationSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rotations: Vec<(String, Vec<DartRef>)> = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, darts) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `vertex:darts` in `{part}`")))?;
            let v = v.trim();
            if !is_plain_identifier(v) || rotations.iter().any(|(w, _)| w == v) {
                return Err(Error::Parse(format!("bad or repeated vertex in `{part}`")));
            }
            let darts = darts
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<DartRef>>>()?;
            rotations.push((v.to_string(), darts));
        }
        Ok(RotationSystem::new(rotations))
    }
}

impl Serialize for RotationSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        let r: RotationSystem = "v:e1+,e0-,e0+,e1-".parse().unwrap();
        assert_eq!(r.to_string(), "v:e0+,e1-,e1+,e0-");
        assert_eq!(r.to_string().parse::<RotationSystem>().unwrap(), r);
        assert!("v:e0".parse::<RotationSystem>().is_err());
        assert!("v:e0+;v:e0-".parse::<RotationSystem>().is_err());
    }

    #[test]
    fn canonical_start_uses_literal_order() {
        let r: RotationSystem = "v:e10+,e1-,e1+".parse().unwrap();
        assert_eq!(r.at("v").unwrap()[0].to_string(), "e1+");
    }

    #[test]
    fn check_against_graph() {
        let g = Multigraph::theta();
        let ok: RotationSystem = "v0:e0-,e1-,e2-;v1:e0+,e1+,e2+".parse().unwrap();
        ok.check(&g).unwrap();
        for bad in [
            "v0:e0-,e1-;v1:e0+,e1+,e2+",
            "v0:e0-,e1-,e2-,e2-;v1:e0+,e1+,e2+",
            "v0:e0+,e1-,e2-;v1:e0-,e1+,e2+",
            "v0:e0-,e1-,e2-",
            "v0:e0-,e1-,e2-;v1:e0+,e1+,e2+;v2:e9+",
            "v0:e0-,e1-,e2-,e5-;v1:e0+,e1+,e2+",
        ] {
            let r: RotationSystem = bad.parse().unwrap();
            assert!(
                matches!(r.check(&g), Err(Error::RotationMismatch(_))),
                "{bad}"
            );
        }
    }
}
