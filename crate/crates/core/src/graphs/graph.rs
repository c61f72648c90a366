use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::is_plain_identifier;
use crate::unionfind::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// Undirected multigraph; loops and parallel edges are allowed. Each edge
/// is oriented `from -> to` only to name its two ends.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

/// End of an edge: `Head` sits at `to` and is written `+`, `Tail` sits at
/// `from` and is written `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum End {
    Head,
    Tail,
}

impl End {
    pub fn sign(self) -> char {
        match self {
            End::Head => '+',
            End::Tail => '-',
        }
    }
}

/// A half-edge, named `<edge id><sign>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DartRef {
    pub edge: String,
    pub end: End,
}

impl fmt::Display for DartRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.edge, self.end.sign())
    }
}

impl std::str::FromStr for DartRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (edge, end) = match s.chars().last() {
            Some('+') => (&s[..s.len() - 1], End::Head),
            Some('-') => (&s[..s.len() - 1], End::Tail),
            _ => return Err(Error::Parse(format!("dart `{s}` must end in `+` or `-`"))),
        };
        if edge.is_empty() {
            return Err(Error::Parse(format!("dart `{s}` has no edge name")));
        }
        Ok(DartRef {
            edge: edge.to_string(),
            end,
        })
    }
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> &mut Self {
        self.vertices.push(id.into());
        self
    }

    pub fn add_edge(&mut self, id: impl Into<String>, from: &str, to: &str) -> &mut Self {
        self.edges.push(Edge {
            id: id.into(),
            from: from.to_string(),
            to: to.to_string(),
        });
        self
    }

    /// Vertices `v0..v(n-1)` and edges `e0, e1, ...` from index pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new();
        for v in 0..n {
            g.add_vertex(format!("v{v}"));
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            g.add_edge(format!("e{i}"), &format!("v{a}"), &format!("v{b}"));
        }
        g
    }

    /// One vertex `v` with `k` loops `e0..e(k-1)`.
    pub fn bouquet(k: usize) -> Self {
        let mut g = Multigraph::new();
        g.add_vertex("v");
        for i in 0..k {
            g.add_edge(format!("e{i}"), "v", "v");
        }
        g
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> Self {
        Self::from_pairs(2, &[(0, 1), (0, 1), (0, 1)])
    }

    pub fn complete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let pairs: Vec<_> = (0..a)
            .flat_map(|i| (0..b).map(move |j| (i, a + j)))
            .collect();
        Self::from_pairs(a + b, &pairs)
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn cycle(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// `β = E - V + C`.
    pub fn betti_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertices.len()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.from == v) + usize::from(e.to == v))
            .sum()
    }

    /// Checks identifiers, endpoints and that no vertex is isolated.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !is_plain_identifier(v) {
                return bad(format!("bad vertex name `{v}`"));
            }
            if !seen.insert(v.as_str()) {
                return bad(format!("duplicate vertex `{v}`"));
            }
        }
        let mut edge_ids = HashSet::new();
        for e in &self.edges {
            if !is_plain_identifier(&e.id) || e.id.ends_with(['+', '-']) {
                return bad(format!("bad edge name `{}`", e.id));
            }
            if !edge_ids.insert(e.id.as_str()) {
                return bad(format!("duplicate edge `{}`", e.id));
            }
            for end in [&e.from, &e.to] {
                if !seen.contains(end.as_str()) {
                    return bad(format!("edge `{}` ends at unknown vertex `{end}`", e.id));
                }
            }
        }
        if let Some(v) = self.vertices.iter().find(|v| self.degree(v) == 0) {
            return Err(Error::IsolatedVertex(v.clone()));
        }
        Ok(())
    }

    pub fn component_count(&self) -> usize {
        let idx: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            if let (Some(&a), Some(&b)) = (idx.get(e.from.as_str()), idx.get(e.to.as_str())) {
                uf.union(a, b);
            }
        }
        uf.sets()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub(crate) fn ensure_connected(&self) -> Result<()> {
        self.validate()?;
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// Dense dart numbering: dart `2e` is the head of edge `e`, `2e + 1` its tail.
#[derive(Clone, Debug)]
pub(crate) struct DartIndex {
    pub dart_names: Vec<String>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub dart_vertex: Vec<usize>,
    /// Darts at each vertex, sorted by name.
    pub at_vertex: Vec<Vec<usize>>,
    /// Vertex indices sorted by id.
    pub vertex_order: Vec<usize>,
    /// Rank of each dart name in lexicographic order, and its inverse.
    pub rank_of: Vec<u32>,
    pub by_rank: Vec<usize>,
}

impl DartIndex {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let vidx: HashMap<&str, usize> = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut dart_names = Vec::with_capacity(2 * g.edges.len());
        let mut dart_vertex = Vec::with_capacity(2 * g.edges.len());
        for e in &g.edges {
            dart_names.push(format!("{}+", e.id));
            dart_vertex.push(vidx[e.to.as_str()]);
            dart_names.push(format!("{}-", e.id));
            dart_vertex.push(vidx[e.from.as_str()]);
        }
        let mut by_rank: Vec<usize> = (0..dart_names.len()).collect();
        by_rank.sort_by(|&a, &b| dart_names[a].cmp(&dart_names[b]));
        let mut rank_of = vec![0u32; by_rank.len()];
        for (r, &d) in by_rank.iter().enumerate() {
            rank_of[d] = r as u32;
        }
        let mut at_vertex = vec![Vec::new(); g.vertices.len()];
        for &d in &by_rank {
            at_vertex[dart_vertex[d]].push(d);
        }
        let mut vertex_order: Vec<usize> = (0..g.vertices.len()).collect();
        vertex_order.sort_by(|&a, &b| g.vertices[a].cmp(&g.vertices[b]));
        DartIndex {
            dart_names,
            dart_vertex,
            at_vertex,
            vertex_order,
            rank_of,
            by_rank,
        }
    }

    pub(crate) fn darts(&self) -> usize {
        self.dart_names.len()
    }

    /// Groups of dart ranks, ascending, vertices sorted by id.
    pub(crate) fn base(&self) -> Vec<Vec<u32>> {
        self.vertex_order
            .iter()
            .map(|&v| self.at_vertex[v].iter().map(|&d| self.rank_of[d]).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        let k4 = Multigraph::complete(4);
        assert_eq!((k4.vertices.len(), k4.edges.len()), (4, 6));
        assert_eq!(k4.betti_number(), 3);
        assert_eq!(Multigraph::complete_bipartite(3, 3).edges.len(), 9);
        assert_eq!(Multigraph::bouquet(4).degree("v"), 8);
        assert_eq!(Multigraph::theta().betti_number(), 2);
        assert_eq!(Multigraph::path(5).betti_number(), 0);
        assert_eq!(Multigraph::cycle(3).betti_number(), 1);
        for g in [k4, Multigraph::theta(), Multigraph::bouquet(2)] {
            g.validate().unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn validation_errors() {
        let mut g = Multigraph::path(2);
        g.add_vertex("lonely");
        assert!(matches!(g.validate(), Err(Error::IsolatedVertex(v)) if v == "lonely"));
        assert!(matches!(
            g.ensure_connected(),
            Err(Error::IsolatedVertex(_))
        ));

        let mut g = Multigraph::path(2);
        g.add_edge("e0", "v0", "v1");
        assert!(matches!(g.validate(), Err(Error::InvalidGraph(_))));

        let mut g = Multigraph::path(2);
        g.add_edge("x", "v0", "nowhere");
        assert!(matches!(g.validate(), Err(Error::InvalidGraph(_))));

        let mut two = Multigraph::path(2);
        two.add_vertex("a").add_vertex("b").add_edge("f", "a", "b");
        assert!(matches!(two.ensure_connected(), Err(Error::Disconnected)));
        assert!(matches!(
            Multigraph::new().ensure_connected(),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn dart_literals() {
        let d: DartRef = "e12-".parse().unwrap();
        assert_eq!(
            d,
            DartRef {
                edge: "e12".into(),
                end: End::Tail
            }
        );
        assert_eq!(d.to_string(), "e12-");
        assert!("e1".parse::<DartRef>().is_err());
        assert!("+".parse::<DartRef>().is_err());
    }

    #[test]
    fn dart_index_layout() {
        let g = Multigraph::from_pairs(2, &[(0, 1), (1, 1)]);
        let idx = DartIndex::new(&g);
        assert_eq!(idx.dart_names, vec!["e0+", "e0-", "e1+", "e1-"]);
        assert_eq!(idx.dart_vertex, vec![1, 0, 1, 1]);
        assert_eq!(idx.at_vertex[1], vec![0, 2, 3]);
        assert_eq!(idx.base(), vec![vec![1], vec![0, 2, 3]]);
    }
}
