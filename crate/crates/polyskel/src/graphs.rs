//! Small labeled graphs: undirected graphs, DAGs and bipartite matchings.
//!
//! Everything here targets the enumeration sizes of this project (n well
//! below 64), so adjacency is kept as one bitmask per node.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// An undirected simple graph on nodes 0..n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UGraph {
    n: usize,
    adj: Vec<u64>,
}

impl UGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "UGraph supports at most 64 nodes");
        UGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = UGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds an edge; duplicates are a no-op (set semantics).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::domain(format!("self-loop at node {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u},{v}) outside node range 0..{}",
                self.n
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// True when the nodes of `mask` induce a complete subgraph.
    pub fn induces_clique(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if mask & !(self.adj[u] | (1 << u)) != 0 {
                return false;
            }
        }
        true
    }

    /// True when `mask` is an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[u] & m != 0 {
                return false;
            }
        }
        true
    }

    pub fn complement(&self) -> UGraph {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let adj = (0..self.n)
            .map(|u| (full & !self.adj[u]) & !(1 << u))
            .collect();
        UGraph { n: self.n, adj }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen.count_ones() as usize == self.n
    }

    /// A spanning tree on all n nodes: connected with n−1 edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Union of edge sets (same node count).
    pub fn union(&self, other: &UGraph) -> UGraph {
        assert_eq!(self.n, other.n);
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a | b)
            .collect();
        UGraph { n: self.n, adj }
    }

    /// Intersection of edge sets (same node count).
    pub fn intersection(&self, other: &UGraph) -> UGraph {
        assert_eq!(self.n, other.n);
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a & b)
            .collect();
        UGraph { n: self.n, adj }
    }

    /// True when every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &UGraph) -> bool {
        self.n == other.n
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A directed acyclic graph on nodes 0..n, stored as parent masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dag {
    n: usize,
    parents: Vec<u64>,
}

impl Dag {
    /// Builds a DAG from arcs `(parent, child)`, rejecting self-loops and
    /// directed cycles. Duplicate arcs collapse.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        assert!(n <= 64);
        let mut parents = vec![0u64; n];
        for &(p, c) in arcs {
            if p == c {
                return Err(Error::domain(format!("self-loop at node {p}")));
            }
            if p >= n || c >= n {
                return Err(Error::domain(format!(
                    "arc ({p},{c}) outside node range 0..{n}"
                )));
            }
            parents[c] |= 1 << p;
        }
        let dag = Dag { n, parents };
        if !dag.is_acyclic() {
            return Err(Error::domain("arc set contains a directed cycle"));
        }
        Ok(dag)
    }

    /// Internal constructor for enumeration loops that guarantee acyclicity
    /// by construction.
    pub(crate) fn from_parent_masks_unchecked(n: usize, parents: Vec<u64>) -> Self {
        Dag { n, parents }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parents_mask(&self, i: usize) -> u64 {
        self.parents[i]
    }

    pub fn parent_count(&self, i: usize) -> usize {
        self.parents[i].count_ones() as usize
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 0..self.n {
            let mut m = self.parents[c];
            while m != 0 {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((p, c));
            }
        }
        out
    }

    fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the parent masks.
        let mut remaining: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        loop {
            let mut removed_any = false;
            let mut m = remaining;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.parents[i] & remaining == 0 {
                    remaining &= !(1u64 << i);
                    removed_any = true;
                }
            }
            if remaining == 0 {
                return true;
            }
            if !removed_any {
                return false;
            }
        }
    }

    /// Undirected skeleton.
    pub fn skeleton(&self) -> UGraph {
        let mut g = UGraph::new(self.n);
        for (p, c) in self.arcs() {
            g.add_edge(p, c).expect("dag arcs are valid edges");
        }
        g
    }

    /// True when no node has two non-adjacent parents.
    pub fn is_v_structure_free(&self) -> bool {
        let skel = self.skeleton();
        for i in 0..self.n {
            let pa = crate::subsets::mask_labels(self.parents[i] as u32);
            for (xi, &x) in pa.iter().enumerate() {
                for &y in &pa[xi + 1..] {
                    if !skel.has_edge(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nodes that are centers of at least one v-structure.
    pub fn collider_nodes(&self) -> Vec<usize> {
        let skel = self.skeleton();
        let mut out = Vec::new();
        for i in 0..self.n {
            let pa = crate::subsets::mask_labels(self.parents[i] as u32);
            'node: for (xi, &x) in pa.iter().enumerate() {
                for &y in &pa[xi + 1..] {
                    if !skel.has_edge(x, y) {
                        out.push(i);
                        break 'node;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .arcs()
            .iter()
            .map(|(p, c)| format!("{p}->{c}"))
            .collect();
        write!(f, "Dag(n={}, [{}])", self.n, arcs.join(", "))
    }
}

/// A k-matching in the complete bipartite graph K_{m,n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    m: usize,
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(m: usize, n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut rows = 0u64;
        let mut cols = 0u64;
        for &(r, c) in &pairs {
            if r >= m || c >= n {
                return Err(Error::domain(format!(
                    "pair ({r},{c}) outside the {m}x{n} grid"
                )));
            }
            if rows & (1 << r) != 0 || cols & (1 << c) != 0 {
                return Err(Error::domain(format!(
                    "row or column repeated at pair ({r},{c})"
                )));
            }
            rows |= 1 << r;
            cols |= 1 << c;
        }
        pairs.sort_unstable();
        Ok(Matching { m, n, pairs })
    }

    pub fn sides(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Flattened m×n 0/1 matrix, row major.
    pub fn to_coords(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.m * self.n];
        for &(r, c) in &self.pairs {
            out[r * self.n + c] = 1;
        }
        out
    }
}

/// A graph file: `<n> <m>` then one line per edge, `u v` for undirected
/// edges and `u -> v` for arcs. A file must be all-undirected or all-arcs.
pub enum ParsedGraph {
    Undirected(UGraph),
    Directed(Dag),
}

pub fn read_graph<R: BufRead>(r: R) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut undirected: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (lineno0, line) in r.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = t.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(Error::parse(lineno, "expected header \"<n> <m>\""));
                }
                let n = tokens[0]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad node count"))?;
                let m = tokens[1]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            Some(_) => match tokens.as_slice() {
                [u, v] => {
                    let u = u.parse().map_err(|_| Error::parse(lineno, "bad node"))?;
                    let v = v.parse().map_err(|_| Error::parse(lineno, "bad node"))?;
                    undirected.push((u, v));
                }
                [u, "->", v] => {
                    let u = u.parse().map_err(|_| Error::parse(lineno, "bad node"))?;
                    let v = v.parse().map_err(|_| Error::parse(lineno, "bad node"))?;
                    arcs.push((u, v));
                }
                _ => return Err(Error::parse(lineno, "expected \"u v\" or \"u -> v\"")),
            },
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(1, "empty graph file"))?;
    if undirected.len() + arcs.len() != m {
        return Err(Error::parse(
            1,
            format!(
                "header declares {m} edges but {} were found",
                undirected.len() + arcs.len()
            ),
        ));
    }
    match (undirected.is_empty(), arcs.is_empty()) {
        (_, true) => Ok(ParsedGraph::Undirected(UGraph::from_edges(n, &undirected)?)),
        (true, false) => Ok(ParsedGraph::Directed(Dag::from_arcs(n, &arcs)?)),
        (false, false) => Err(Error::parse(
            1,
            "graph file mixes undirected edges and arcs",
        )),
    }
}

pub fn read_graph_path(path: impl AsRef<Path>) -> Result<ParsedGraph> {
    read_graph(BufReader::new(File::open(path)?))
}

pub fn read_ugraph_path(path: impl AsRef<Path>) -> Result<UGraph> {
    match read_graph_path(path)? {
        ParsedGraph::Undirected(g) => Ok(g),
        ParsedGraph::Directed(_) => Err(Error::domain("expected an undirected graph file")),
    }
}

pub fn read_dag_path(path: impl AsRef<Path>) -> Result<Dag> {
    match read_graph_path(path)? {
        ParsedGraph::Undirected(g) if g.edge_count() == 0 => {
            Dag::from_arcs(g.n(), &[])
        }
        ParsedGraph::Undirected(_) => Err(Error::domain("expected a DAG file with -> arcs")),
        ParsedGraph::Directed(d) => Ok(d),
    }
}

pub fn write_graph<W: Write>(mut w: W, g: &UGraph) -> Result<()> {
    let edges = g.edges();
    writeln!(w, "{} {}", g.n(), edges.len())?;
    for (u, v) in edges {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
