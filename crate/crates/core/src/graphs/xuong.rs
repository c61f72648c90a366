//! Maximum genus by Xuong's theorem: `(β(G) - ξ(G)) / 2`, where the
//! deficiency `ξ(G)` is the least, over spanning trees `T`, number of
//! components of `G - E(T)` having an odd number of edges.

use std::collections::HashMap;

use serde::Serialize;

use super::graph::Multigraph;
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XuongResult {
    pub max_genus: u64,
    pub betti_number: u64,
    pub deficiency: u64,
    /// Edge ids of a spanning tree attaining the deficiency.
    pub witness_tree: Vec<String>,
    pub spanning_trees: u64,
}

struct Sweep<'a> {
    n: usize,
    ends: Vec<(usize, usize)>,
    /// Indices of non-loop edges, the only tree candidates.
    candidates: Vec<usize>,
    limit: Option<u64>,
    trees: u64,
    best: Option<(u64, Vec<usize>)>,
    graph: &'a Multigraph,
}

impl Sweep<'_> {
    fn odd_cotree_components(&self, tree: &[usize]) -> u64 {
        let mut in_tree = vec![false; self.ends.len()];
        for &e in tree {
            in_tree[e] = true;
        }
        let mut uf = UnionFind::new(self.n);
        for (e, &(a, b)) in self.ends.iter().enumerate() {
            if !in_tree[e] {
                uf.union(a, b);
            }
        }
        let mut edges_per_root = vec![0u64; self.n];
        for (e, &(a, _)) in self.ends.iter().enumerate() {
            if !in_tree[e] {
                let r = uf.find(a);
                edges_per_root[r] += 1;
            }
        }
        edges_per_root.iter().filter(|&&k| k % 2 == 1).count() as u64
    }

    fn can_still_connect(&self, uf: &UnionFind, from: usize) -> bool {
        let mut uf = uf.clone();
        for &e in &self.candidates[from..] {
            let (a, b) = self.ends[e];
            uf.union(a, b);
        }
        uf.sets() == 1
    }

    fn visit(&mut self, pos: usize, uf: UnionFind, tree: &mut Vec<usize>) -> Result<()> {
        if tree.len() + 1 == self.n {
            self.trees += 1;
            if let Some(limit) = self.limit {
                if self.trees > limit {
                    return Err(Error::SearchTooLarge {
                        size: format!("more than {limit} spanning trees"),
                        limit,
                    });
                }
            }
            let xi = self.odd_cotree_components(tree);
            if self.best.as_ref().is_none_or(|(b, _)| xi < *b) {
                self.best = Some((xi, tree.clone()));
            }
            return Ok(());
        }
        if pos == self.candidates.len() {
            return Ok(());
        }
        let e = self.candidates[pos];
        let (a, b) = self.ends[e];
        let mut with = uf.clone();
        if with.union(a, b) {
            tree.push(e);
            self.visit(pos + 1, with, tree)?;
            tree.pop();
        }
        if self.can_still_connect(&uf, pos + 1) {
            self.visit(pos + 1, uf, tree)?;
        }
        Ok(())
    }
}

/// `limit` caps the number of spanning trees examined; `None` removes it.
pub fn xuong_max_genus(g: &Multigraph, limit: Option<u64>) -> Result<XuongResult> {
    g.ensure_connected()?;
    let vidx: HashMap<&str, usize> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let ends: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|e| (vidx[e.from.as_str()], vidx[e.to.as_str()]))
        .collect();
    let candidates = (0..ends.len())
        .filter(|&e| ends[e].0 != ends[e].1)
        .collect();
    let mut sweep = Sweep {
        n: g.vertices.len(),
        ends,
        candidates,
        limit,
        trees: 0,
        best: None,
        graph: g,
    };
    sweep.visit(0, UnionFind::new(g.vertices.len()), &mut Vec::new())?;
    let (deficiency, tree) = sweep
        .best
        .clone()
        .expect("connected graphs have a spanning tree");
    let betti = g.betti_number() as u64;
    debug_assert_eq!((betti - deficiency) % 2, 0);
    Ok(XuongResult {
        max_genus: (betti - deficiency) / 2,
        betti_number: betti,
        deficiency,
        witness_tree: tree
            .iter()
            .map(|&e| sweep.graph.edges[e].id.clone())
            .collect(),
        spanning_trees: sweep.trees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let r = xuong_max_genus(&Multigraph::complete(4), None).unwrap();
        assert_eq!((r.betti_number, r.deficiency, r.max_genus), (3, 1, 1));
        assert_eq!(r.spanning_trees, 16);
        assert_eq!(r.witness_tree.len(), 3);
    }

    #[test]
    fn bouquets_have_no_deficiency() {
        for n in 1..=4 {
            let r = xuong_max_genus(&Multigraph::bouquet(2 * n), None).unwrap();
            assert_eq!((r.deficiency, r.max_genus), (0, n as u64));
            assert_eq!(r.spanning_trees, 1);
            assert!(r.witness_tree.is_empty());
        }
    }

    #[test]
    fn trees_and_small_graphs() {
        let r = xuong_max_genus(&Multigraph::path(6), None).unwrap();
        assert_eq!((r.betti_number, r.max_genus), (0, 0));
        assert_eq!(
            xuong_max_genus(&Multigraph::complete(5), None)
                .unwrap()
                .max_genus,
            3
        );
        assert_eq!(
            xuong_max_genus(&Multigraph::complete(5), None)
                .unwrap()
                .spanning_trees,
            125
        );
        assert_eq!(
            xuong_max_genus(&Multigraph::theta(), None)
                .unwrap()
                .max_genus,
            1
        );
        assert_eq!(
            xuong_max_genus(&Multigraph::cycle(5), None)
                .unwrap()
                .max_genus,
            0
        );
    }

    #[test]
    fn tree_limit() {
        assert!(matches!(
            xuong_max_genus(&Multigraph::complete(5), Some(10)),
            Err(Error::SearchTooLarge { .. })
        ));
    }
}
