//! JSON file formats for surfaces and graphs.
//!
//! Surface files look like
//!
//! ```json
//! {"branches": ["l"],
//!  "sectors": [{"id": "s", "genus": 0,
//!               "boundary": [{"branch": "l", "odegree": 2}]}]}
//! ```
//!
//! A boundary entry may carry an `"id"`; otherwise the prebranch is named
//! `<sector>.<k>`. A sector may carry `"orientable": false`, which
//! validation then rejects. Graph files are
//! `{"vertices": [...], "edges": [{"id": "e", "from": "u", "to": "v"}]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Multigraph;
use crate::surface::MultibranchedSurface;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub branches: Vec<String>,
    pub sectors: Vec<SectorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorEntry {
    pub id: String,
    pub genus: u32,
    #[serde(default = "yes", skip_serializing_if = "Clone::clone")]
    pub orientable: bool,
    pub boundary: Vec<BoundaryEntry>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEntry {
    pub branch: String,
    pub odegree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

impl SurfaceFile {
    pub fn to_surface(&self) -> MultibranchedSurface {
        let mut x = MultibranchedSurface::new();
        for l in &self.branches {
            x.add_branch(l.clone());
        }
        for s in &self.sectors {
            x.add_sector(s.id.clone(), s.genus);
            for c in &s.boundary {
                match &c.id {
                    Some(id) => x.attach_named(id.clone(), &s.id, &c.branch, c.odegree),
                    None => x.attach(&s.id, &c.branch, c.odegree),
                };
            }
            if !s.orientable {
                x.sectors.last_mut().expect("just added").shape.orientable = false;
            }
        }
        x
    }

    /// Boundary circles are listed per sector in prebranch list order; ids
    /// are written out only where they differ from the default name.
    pub fn from_surface(x: &MultibranchedSurface) -> Self {
        SurfaceFile {
            branches: x.branches.clone(),
            sectors: x
                .sectors
                .iter()
                .map(|s| SectorEntry {
                    id: s.id.clone(),
                    genus: s.shape.genus,
                    orientable: s.shape.orientable,
                    boundary: x
                        .prebranches
                        .iter()
                        .filter(|c| c.sector == s.id)
                        .enumerate()
                        .map(|(k, c)| BoundaryEntry {
                            branch: c.branch.clone(),
                            odegree: c.oriented_degree,
                            id: (c.id != format!("{}.{}", s.id, k + 1)).then(|| c.id.clone()),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

fn json_error(source: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{source}:{}:{}: {e}", e.line(), e.column()))
}

/// Parses a surface file; `source` names the input in error messages.
/// The result is not validated.
pub fn parse_surface(text: &str, source: &str) -> Result<MultibranchedSurface> {
    let file: SurfaceFile = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    Ok(file.to_surface())
}

pub fn surface_to_json(x: &MultibranchedSurface) -> String {
    serde_json::to_string_pretty(&SurfaceFile::from_surface(x)).expect("surface files serialize")
}

/// Parses and validates a graph file.
pub fn parse_graph(text: &str, source: &str) -> Result<Multigraph> {
    let g: Multigraph = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    g.validate()
        .map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    Ok(g)
}

pub fn graph_to_json(g: &Multigraph) -> String {
    serde_json::to_string_pretty(g).expect("graphs serialize")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_surface(path: &Path) -> Result<MultibranchedSurface> {
    parse_surface(&read(path)?, &path.display().to_string())
}

pub fn read_graph(path: &Path) -> Result<Multigraph> {
    parse_graph(&read(path)?, &path.display().to_string())
}
