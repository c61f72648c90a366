//! Regular multibranched surfaces with orientable sectors.
//!
//! A surface is given combinatorially by its branch circles, its compact
//! sectors and the prebranches (boundary circles of sectors), each of which
//! covers one branch with a signed degree.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Topological type of a compact sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SectorShape {
    pub genus: u32,
    pub boundary_count: u32,
    pub orientable: bool,
}

impl SectorShape {
    pub fn orientable(genus: u32, boundary_count: u32) -> Self {
        SectorShape {
            genus,
            boundary_count,
            orientable: true,
        }
    }

    pub fn disk() -> Self {
        Self::orientable(0, 1)
    }

    pub fn annulus() -> Self {
        Self::orientable(0, 2)
    }

    /// `2 - 2g - b` for orientable sectors.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Sector {
    pub id: String,
    pub shape: SectorShape,
}

/// A boundary circle of a sector together with the branch it covers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Prebranch {
    pub id: String,
    pub sector: String,
    pub branch: String,
    /// Covering degree, negative when the covering reverses orientation.
    pub oriented_degree: i64,
}

impl Prebranch {
    pub fn degree(&self) -> u64 {
        self.oriented_degree.unsigned_abs()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultibranchedSurface {
    pub branches: Vec<String>,
    pub sectors: Vec<Sector>,
    pub prebranches: Vec<Prebranch>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdKind {
    Branch,
    Sector,
    Prebranch,
}

impl fmt::Display for IdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdKind::Branch => "branch",
            IdKind::Sector => "sector",
            IdKind::Prebranch => "prebranch",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    BadIdentifier {
        what: IdKind,
        id: String,
    },
    DuplicateId {
        what: IdKind,
        id: String,
    },
    UnknownBranch {
        prebranch: String,
        branch: String,
    },
    UnknownSector {
        prebranch: String,
        sector: String,
    },
    ZeroDegree {
        prebranch: String,
    },
    NoBoundary {
        sector: String,
    },
    Nonorientable {
        sector: String,
    },
    BoundaryMismatch {
        sector: String,
        expected: u32,
        found: u32,
    },
    EmptyBranch {
        branch: String,
    },
    NotRegular {
        branch: String,
        degrees: Vec<u64>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadIdentifier { what, id } => write!(
                f,
                "bad identifier: {what} `{id}` is empty or contains whitespace, ':', ';' or ','"
            ),
            Violation::DuplicateId { what, id } => {
                write!(f, "duplicate identifier: {what} `{id}`")
            }
            Violation::UnknownBranch { prebranch, branch } => write!(
                f,
                "unknown branch: prebranch `{prebranch}` is attached to missing branch `{branch}`"
            ),
            Violation::UnknownSector { prebranch, sector } => write!(
                f,
                "unknown sector: prebranch `{prebranch}` bounds missing sector `{sector}`"
            ),
            Violation::ZeroDegree { prebranch } => {
                write!(f, "zero degree: prebranch `{prebranch}` has oriented degree 0")
            }
            Violation::NoBoundary { sector } => {
                write!(f, "no boundary: sector `{sector}` has empty boundary")
            }
            Violation::Nonorientable { sector } => {
                write!(f, "nonorientable: sector `{sector}` is not orientable")
            }
            Violation::BoundaryMismatch {
                sector,
                expected,
                found,
            } => write!(
                f,
                "boundary mismatch: sector `{sector}` has {expected} boundary circles but {found} prebranches"
            ),
            Violation::EmptyBranch { branch } => {
                write!(f, "empty branch: no prebranch is attached to branch `{branch}`")
            }
            Violation::NotRegular { branch, degrees } => {
                write!(f, "not regular: branch `{branch}` carries degrees {degrees:?}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A connected piece of the branch/sector incidence structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub branches: Vec<String>,
    pub sectors: Vec<String>,
}

pub(crate) fn is_plain_identifier(id: &str) -> bool {
    !id.is_empty()
        && !id
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ':' | ';' | ','))
}

impl MultibranchedSurface {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_branch(&mut self, id: impl Into<String>) -> &mut Self {
        self.branches.push(id.into());
        self
    }

    /// Adds a sector of the given genus with no boundary yet; boundary
    /// circles are added with [`attach`](Self::attach).
    pub fn add_sector(&mut self, id: impl Into<String>, genus: u32) -> &mut Self {
        self.sectors.push(Sector {
            id: id.into(),
            shape: SectorShape::orientable(genus, 0),
        });
        self
    }

    /// Adds a boundary circle to `sector` covering `branch`, named
    /// `<sector>.<k>` where `k` counts that sector's circles from 1.
    pub fn attach(&mut self, sector: &str, branch: &str, oriented_degree: i64) -> &mut Self {
        let k = self
            .prebranches
            .iter()
            .filter(|c| c.sector == sector)
            .count()
            + 1;
        self.attach_named(format!("{sector}.{k}"), sector, branch, oriented_degree)
    }

    pub fn attach_named(
        &mut self,
        id: impl Into<String>,
        sector: &str,
        branch: &str,
        oriented_degree: i64,
    ) -> &mut Self {
        if let Some(s) = self.sectors.iter_mut().find(|s| s.id == sector) {
            s.shape.boundary_count += 1;
        }
        self.prebranches.push(Prebranch {
            id: id.into(),
            sector: sector.to_string(),
            branch: branch.to_string(),
            oriented_degree,
        });
        self
    }

    pub fn sector(&self, id: &str) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.id == id)
    }

    /// The prebranches attached to `branch`, in list order.
    pub fn attached<'a>(&'a self, branch: &'a str) -> impl Iterator<Item = &'a Prebranch> + 'a {
        self.prebranches.iter().filter(move |c| c.branch == branch)
    }

    /// Number of prebranches attached to `branch`.
    pub fn index(&self, branch: &str) -> usize {
        self.attached(branch).count()
    }

    /// Common degree of the prebranches on `branch`, if the branch is
    /// nonempty and regular.
    pub fn degree(&self, branch: &str) -> Option<u64> {
        let mut degrees = self.attached(branch).map(Prebranch::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut check_ids = |what: IdKind, ids: &mut dyn Iterator<Item = &String>| {
            let mut seen = HashSet::new();
            for id in ids {
                if !is_plain_identifier(id) {
                    violations.push(Violation::BadIdentifier {
                        what,
                        id: id.clone(),
                    });
                }
                if !seen.insert(id.as_str()) {
                    violations.push(Violation::DuplicateId {
                        what,
                        id: id.clone(),
                    });
                }
            }
        };
        check_ids(IdKind::Branch, &mut self.branches.iter());
        check_ids(IdKind::Sector, &mut self.sectors.iter().map(|s| &s.id));
        check_ids(
            IdKind::Prebranch,
            &mut self.prebranches.iter().map(|c| &c.id),
        );

        let branches: HashSet<&str> = self.branches.iter().map(String::as_str).collect();
        let sectors: HashSet<&str> = self.sectors.iter().map(|s| s.id.as_str()).collect();
        for c in &self.prebranches {
            if !branches.contains(c.branch.as_str()) {
                violations.push(Violation::UnknownBranch {
                    prebranch: c.id.clone(),
                    branch: c.branch.clone(),
                });
            }
            if !sectors.contains(c.sector.as_str()) {
                violations.push(Violation::UnknownSector {
                    prebranch: c.id.clone(),
                    sector: c.sector.clone(),
                });
            }
            if c.oriented_degree == 0 {
                violations.push(Violation::ZeroDegree {
                    prebranch: c.id.clone(),
                });
            }
        }

        let mut per_sector: HashMap<&str, u32> = HashMap::new();
        for c in &self.prebranches {
            *per_sector.entry(c.sector.as_str()).or_default() += 1;
        }
        for s in &self.sectors {
            if !s.shape.orientable {
                violations.push(Violation::Nonorientable {
                    sector: s.id.clone(),
                });
            }
            if s.shape.boundary_count == 0 {
                violations.push(Violation::NoBoundary {
                    sector: s.id.clone(),
                });
            }
            let found = per_sector.get(s.id.as_str()).copied().unwrap_or(0);
            if found != s.shape.boundary_count {
                violations.push(Violation::BoundaryMismatch {
                    sector: s.id.clone(),
                    expected: s.shape.boundary_count,
                    found,
                });
            }
        }

        for l in &self.branches {
            let mut degrees: Vec<u64> = self.attached(l).map(Prebranch::degree).collect();
            if degrees.is_empty() {
                violations.push(Violation::EmptyBranch { branch: l.clone() });
                continue;
            }
            degrees.sort_unstable();
            degrees.dedup();
            if degrees.len() > 1 {
                violations.push(Violation::NotRegular {
                    branch: l.clone(),
                    degrees,
                });
            }
        }

        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Sum of the sector Euler characteristics; branches are circles and
    /// contribute nothing.
    pub fn euler_characteristic(&self) -> i64 {
        self.sectors
            .iter()
            .map(|s| s.shape.euler_characteristic())
            .sum()
    }

    /// Connected components of the branch/sector incidence graph, ordered by
    /// their first branch in list order (sector-only components, which
    /// cannot occur in a valid surface, come last).
    pub fn components(&self) -> Vec<Component> {
        let nb = self.branches.len();
        let branch_idx: HashMap<&str, usize> = self
            .branches
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let sector_idx: HashMap<&str, usize> = self
            .sectors
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), nb + i))
            .collect();
        let mut uf = UnionFind::new(nb + self.sectors.len());
        for c in &self.prebranches {
            if let (Some(&l), Some(&s)) = (
                branch_idx.get(c.branch.as_str()),
                sector_idx.get(c.sector.as_str()),
            ) {
                uf.union(l, s);
            }
        }

        let mut order: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comps: Vec<Component> = Vec::new();
        for node in 0..nb + self.sectors.len() {
            let root = uf.find(node);
            let slot = *order.entry(root).or_insert_with(|| {
                comps.push(Component {
                    branches: Vec::new(),
                    sectors: Vec::new(),
                });
                comps.len() - 1
            });
            if node < nb {
                comps[slot].branches.push(self.branches[node].clone());
            } else {
                comps[slot].sectors.push(self.sectors[node - nb].id.clone());
            }
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Returns a copy with every identifier rewritten by `rename`.
    pub fn relabel(&self, mut rename: impl FnMut(IdKind, &str) -> String) -> Self {
        let mut branch = HashMap::new();
        let mut sector = HashMap::new();
        let branches = self
            .branches
            .iter()
            .map(|l| {
                let new = rename(IdKind::Branch, l);
                branch.insert(l.clone(), new.clone());
                new
            })
            .collect();
        let sectors = self
            .sectors
            .iter()
            .map(|s| {
                let new = rename(IdKind::Sector, &s.id);
                sector.insert(s.id.clone(), new.clone());
                Sector {
                    id: new,
                    shape: s.shape,
                }
            })
            .collect();
        let prebranches = self
            .prebranches
            .iter()
            .map(|c| Prebranch {
                id: rename(IdKind::Prebranch, &c.id),
                sector: sector
                    .get(&c.sector)
                    .cloned()
                    .unwrap_or_else(|| c.sector.clone()),
                branch: branch
                    .get(&c.branch)
                    .cloned()
                    .unwrap_or_else(|| c.branch.clone()),
                oriented_degree: c.oriented_degree,
            })
            .collect();
        MultibranchedSurface {
            branches,
            sectors,
            prebranches,
        }
    }

    /// Copy with every identifier prefixed by `prefix`.
    pub fn prefixed(&self, prefix: &str) -> Self {
        self.relabel(|_, id| format!("{prefix}{id}"))
    }

    /// Disjoint union; identifiers are prefixed with `a.` and `b.`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut out = self.prefixed("a.");
        let b = other.prefixed("b.");
        out.branches.extend(b.branches);
        out.sectors.extend(b.sectors);
        out.prebranches.extend(b.prebranches);
        out
    }

    /// Flips the sign of every oriented degree.
    pub fn mirrored(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.prebranches {
            c.oriented_degree = -c.oriented_degree;
        }
        out
    }

    pub(crate) fn indexed(&self) -> Result<SurfaceIndex> {
        self.ensure_valid()?;
        Ok(SurfaceIndex::build(self))
    }
}

/// Identifier prefix for the pieces created by [`disk_sum`].
pub const DISK_SUM_PREFIX: &str = "ds.";

/// Identifies a disk in sector `s1` of `x1` with a disk in sector `s2` of
/// `x2`.
///
/// The summands' identifiers are prefixed with `a.` and `b.`. The boundary
/// of the identified disk becomes a new degree-one branch `ds.l` of index
/// three: `a.<s1>` and `b.<s2>` each gain a boundary circle covering it with
/// oriented degree -1, and the new disk sector `ds.s` covers it with +1.
pub fn disk_sum(
    x1: &MultibranchedSurface,
    s1: &str,
    x2: &MultibranchedSurface,
    s2: &str,
) -> Result<MultibranchedSurface> {
    if x1.sector(s1).is_none() {
        return Err(Error::UnknownSector(s1.to_string()));
    }
    if x2.sector(s2).is_none() {
        return Err(Error::UnknownSector(s2.to_string()));
    }
    x1.ensure_valid()?;
    x2.ensure_valid()?;

    let mut x = x1.disjoint_union(x2);
    let l0 = format!("{DISK_SUM_PREFIX}l");
    let disk = format!("{DISK_SUM_PREFIX}s");
    let outer_a = format!("a.{s1}");
    let outer_b = format!("b.{s2}");
    x.add_branch(l0.clone());
    x.add_sector(disk.clone(), 0);
    x.attach_named(format!("{DISK_SUM_PREFIX}a"), &outer_a, &l0, -1);
    x.attach_named(format!("{DISK_SUM_PREFIX}b"), &outer_b, &l0, -1);
    x.attach_named(format!("{DISK_SUM_PREFIX}d"), &disk, &l0, 1);
    Ok(x)
}

/// Dense integer view of a validated surface.
#[derive(Clone, Debug)]
pub(crate) struct SurfaceIndex {
    pub branch_ids: Vec<String>,
    pub prebranch_ids: Vec<String>,
    pub pre_sector: Vec<usize>,
    pub pre_branch: Vec<usize>,
    pub pre_od: Vec<i64>,
    pub sector_chi: Vec<i64>,
    /// Per branch (list order), attached prebranch indices sorted by id.
    pub attached: Vec<Vec<usize>>,
    /// Branch indices sorted by id.
    pub branch_order: Vec<usize>,
}

impl SurfaceIndex {
    fn build(x: &MultibranchedSurface) -> Self {
        let branch_idx: HashMap<&str, usize> = x
            .branches
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let sector_idx: HashMap<&str, usize> = x
            .sectors
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), i))
            .collect();
        let pre_sector = x
            .prebranches
            .iter()
            .map(|c| sector_idx[c.sector.as_str()])
            .collect();
        let pre_branch: Vec<usize> = x
            .prebranches
            .iter()
            .map(|c| branch_idx[c.branch.as_str()])
            .collect();
        let mut attached = vec![Vec::new(); x.branches.len()];
        for (i, &l) in pre_branch.iter().enumerate() {
            attached[l].push(i);
        }
        for list in &mut attached {
            list.sort_by(|&a, &b| x.prebranches[a].id.cmp(&x.prebranches[b].id));
        }
        let mut branch_order: Vec<usize> = (0..x.branches.len()).collect();
        branch_order.sort_by(|&a, &b| x.branches[a].cmp(&x.branches[b]));
        SurfaceIndex {
            branch_ids: x.branches.clone(),
            prebranch_ids: x.prebranches.iter().map(|c| c.id.clone()).collect(),
            pre_sector,
            pre_branch,
            pre_od: x.prebranches.iter().map(|c| c.oriented_degree).collect(),
            sector_chi: x
                .sectors
                .iter()
                .map(|s| s.shape.euler_characteristic())
                .collect(),
            attached,
            branch_order,
        }
    }

    pub fn sectors(&self) -> usize {
        self.sector_chi.len()
    }
}
