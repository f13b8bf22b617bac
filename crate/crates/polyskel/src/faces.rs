//! Face restriction for 0/1-polytopes and the chordal compatibility
//! machinery: Δ(G,H), its components, selection imsets and witness search.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::families::chordal_imset;
use crate::graphs::UGraph;
use crate::subsets::all_masks;
use crate::vertex::{CostFunction, IntVertex, VertexSet};

/// The ±1/0 cost function whose maximizers over 0/1 vectors are exactly the
/// vertices agreeing with `a` and `b` wherever those two agree.
pub fn face_cost(a: &IntVertex, b: &IntVertex) -> Result<CostFunction> {
    if a.dim() != b.dim() {
        return Err(Error::domain("face_cost needs vertices of equal dimension"));
    }
    if !a.is_zero_one() || !b.is_zero_one() {
        return Err(Error::domain("face_cost is defined for 0/1 vertices only"));
    }
    let weights = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(&x, &y)| match (x, y) {
            (1, 1) => 1.0,
            (0, 0) => -1.0,
            _ => 0.0,
        })
        .collect();
    Ok(CostFunction::new(weights))
}

/// Vertex indices of the face F_{α,β}: all vertices that coordinate-wise
/// agree with α and β wherever α and β agree. Contains `a` and `b`.
pub fn restrict_face(vs: &VertexSet, a: usize, b: usize) -> Result<Vec<usize>> {
    if a == b {
        return Err(Error::domain("face restriction needs two distinct vertices"));
    }
    if !vs.is_zero_one() {
        return Err(Error::domain(
            "face restriction is defined for 0/1 vertex sets only",
        ));
    }
    let va = vs.get(a).coords();
    let vb = vs.get(b).coords();
    let agree: Vec<(usize, i64)> = va
        .iter()
        .zip(vb)
        .enumerate()
        .filter(|(_, (x, y))| x == y)
        .map(|(i, (x, _))| (i, *x))
        .collect();
    let out = (0..vs.len())
        .filter(|&i| {
            let v = vs.get(i).coords();
            agree.iter().all(|&(j, val)| v[j] == val)
        })
        .collect();
    Ok(out)
}

/// True iff the graph has a perfect elimination ordering, checked with
/// maximum-cardinality search.
pub fn is_chordal(g: &UGraph) -> bool {
    let n = g.n();
    if n <= 2 {
        return true;
    }
    // MCS visit order; the first visit gets the largest elimination number.
    let mut visit = Vec::with_capacity(n);
    let mut numbered: u64 = 0;
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_w = -1i64;
        for u in 0..n {
            if numbered & (1 << u) != 0 {
                continue;
            }
            let w = (g.neighbors_mask(u) & numbered).count_ones() as i64;
            if w > best_w {
                best_w = w;
                best = u;
            }
        }
        numbered |= 1 << best;
        visit.push(best);
    }
    // Reverse visit order is a perfect elimination ordering iff chordal.
    let elim: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0usize; n];
    for (p, &v) in elim.iter().enumerate() {
        pos[v] = p;
    }
    let mut later: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for &v in &elim {
        later &= !(1u64 << v);
        let rn = g.neighbors_mask(v) & later;
        if rn == 0 {
            continue;
        }
        // The later neighbor eliminated next; remaining later neighbors must
        // be adjacent to it.
        let mut f = 0;
        let mut f_pos = usize::MAX;
        let mut m = rn;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if pos[u] < f_pos {
                f_pos = pos[u];
                f = u;
            }
        }
        if (rn & !(1u64 << f)) & !g.neighbors_mask(f) != 0 {
            return false;
        }
    }
    true
}

/// Splits the node set into a clique K and an independent set O, or returns
/// `None` when the graph is not split. K is the lexicographically smallest
/// maximal clique of maximum size among valid splits.
pub fn split_partition(g: &UGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    assert!(n <= 16, "split_partition is meant for small graphs");
    let full: u64 = (1u64 << n) - 1;
    let mut candidates: Vec<u64> = (0..=full).collect();
    // Largest cliques first; ties by lexicographically smallest label list,
    // which for equal popcount is ascending mask value.
    candidates.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    for mask in candidates {
        if g.induces_clique(mask) && g.is_independent(full & !mask) {
            let k = crate::subsets::mask_labels(mask as u32);
            let o = crate::subsets::mask_labels((full & !mask) as u32);
            return Some((k, o));
        }
    }
    None
}

/// The graph Δ(G,H) on subsets where the imsets of G and H differ, with
/// S ~ T iff S∩T is itself such a subset. Adjacency is evaluated on demand;
/// only the component decomposition is materialized.
pub struct DeltaGraph {
    n: usize,
    nodes: Vec<u32>,
    node_pos: HashMap<u32, usize>,
    comp_of: Vec<usize>,
    comps: Vec<Vec<usize>>,
    cg_one_on_comp: Vec<bool>,
}

impl DeltaGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Subset masks of the nodes, in canonical coordinate order.
    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn component_count(&self) -> usize {
        self.comps.len()
    }

    pub fn component_of(&self, node: usize) -> usize {
        self.comp_of[node]
    }

    pub fn component(&self, id: usize) -> &[usize] {
        &self.comps[id]
    }

    /// c_G restricted to a component is constant; this is that value.
    pub fn cg_is_one_on(&self, comp: usize) -> bool {
        self.cg_one_on_comp[comp]
    }

    /// Adjacency per definition: S ~ T iff S∩T is a node of Δ.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.node_pos.contains_key(&(self.nodes[i] & self.nodes[j]))
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        self.node_pos.contains_key(&mask)
    }

    /// The component ids whose selection reproduces c_G.
    pub fn selection_for_g(&self) -> Selection {
        Selection {
            chosen: (0..self.comps.len())
                .filter(|&c| self.cg_one_on_comp[c])
                .collect(),
        }
    }

    /// The component ids whose selection reproduces c_H.
    pub fn selection_for_h(&self) -> Selection {
        Selection {
            chosen: (0..self.comps.len())
                .filter(|&c| !self.cg_one_on_comp[c])
                .collect(),
        }
    }
}

/// Builds Δ(G,H) and its component decomposition.
pub fn delta_graph(g: &UGraph, h: &UGraph) -> Result<DeltaGraph> {
    if g.n() != h.n() {
        return Err(Error::domain("Δ(G,H) needs graphs on the same node set"));
    }
    let n = g.n();
    let cg = chordal_imset(g);
    let ch = chordal_imset(h);
    let masks = all_masks(n);
    let mut nodes = Vec::new();
    let mut cg_vals = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        if cg.get(i) != ch.get(i) {
            nodes.push(m);
            cg_vals.push(cg.get(i) == 1);
        }
    }
    let node_pos: HashMap<u32, usize> =
        nodes.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    // Union-find over the nodes.
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if node_pos.contains_key(&(nodes[i] & nodes[j])) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut comp_ids: HashMap<usize, usize> = HashMap::new();
    let mut comp_of = vec![0usize; nodes.len()];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut cg_one_on_comp: Vec<bool> = Vec::new();
    for i in 0..nodes.len() {
        let root = find(&mut parent, i);
        let id = *comp_ids.entry(root).or_insert_with(|| {
            comps.push(Vec::new());
            cg_one_on_comp.push(cg_vals[i]);
            comps.len() - 1
        });
        comp_of[i] = id;
        comps[id].push(i);
        debug_assert_eq!(cg_one_on_comp[id], cg_vals[i], "c_G not constant on a component");
    }
    Ok(DeltaGraph {
        n,
        nodes,
        node_pos,
        comp_of,
        comps,
        cg_one_on_comp,
    })
}

/// A choice 𝒮 of components of Δ(G,H).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub chosen: BTreeSet<usize>,
}

impl Selection {
    pub fn empty() -> Self {
        Selection {
            chosen: BTreeSet::new(),
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        Selection {
            chosen: ids.into_iter().collect(),
        }
    }

    fn from_mask(mask: u64) -> Self {
        Selection {
            chosen: (0..64).filter(|&i| mask & (1 << i) != 0).collect(),
        }
    }

    fn validate(&self, delta: &DeltaGraph) -> Result<()> {
        if let Some(&max) = self.chosen.iter().next_back() {
            if max >= delta.component_count() {
                return Err(Error::domain(format!(
                    "component id {max} out of range for Δ with {} components",
                    delta.component_count()
                )));
            }
        }
        Ok(())
    }
}

/// The vector c_𝒮: agrees with c_G = c_H off Δ, is 1 on chosen components
/// and 0 on unchosen ones.
pub fn selection_imset(
    g: &UGraph,
    h: &UGraph,
    delta: &DeltaGraph,
    sel: &Selection,
) -> Result<IntVertex> {
    sel.validate(delta)?;
    let cg = chordal_imset(g);
    let masks = all_masks(g.n());
    let mut coords = Vec::with_capacity(masks.len());
    for (i, &m) in masks.iter().enumerate() {
        let value = match delta.node_pos.get(&m) {
            Some(&node) => {
                if sel.chosen.contains(&delta.comp_of[node]) {
                    1
                } else {
                    0
                }
            }
            None => cg.get(i),
        };
        coords.push(value);
    }
    Ok(IntVertex::new(coords))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatVerdict {
    /// c_𝒮 is the imset of the chordal graph it induces.
    Compatible,
    /// The induced graph has a chordless cycle.
    NotChordal,
    /// The induced graph has a clique S with c_𝒮(S) = 0.
    ExtraClique,
}

#[derive(Clone, Debug)]
pub struct Compatibility {
    pub verdict: CompatVerdict,
    /// The graph induced by the pair coordinates of c_𝒮.
    pub graph: UGraph,
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        self.verdict == CompatVerdict::Compatible
    }
}

/// Decides whether a selection is chordally compatible: the graph D induced
/// by the pair coordinates of c_𝒮 must be chordal with chordal_imset(D) = c_𝒮.
pub fn chordally_compatible(
    g: &UGraph,
    h: &UGraph,
    delta: &DeltaGraph,
    sel: &Selection,
) -> Result<Compatibility> {
    if !is_chordal(g) || !is_chordal(h) {
        return Err(Error::domain("chordal compatibility needs chordal inputs"));
    }
    let cs = selection_imset(g, h, delta, sel)?;
    Ok(compatibility_of_imset(g.n(), &cs))
}

fn compatibility_of_imset(n: usize, cs: &IntVertex) -> Compatibility {
    let masks = all_masks(n);
    let mut d = UGraph::new(n);
    for (i, &m) in masks.iter().enumerate() {
        if m.count_ones() == 2 && cs.get(i) == 1 {
            let labels = crate::subsets::mask_labels(m);
            d.add_edge(labels[0], labels[1]).unwrap();
        }
    }
    if !is_chordal(&d) {
        return Compatibility {
            verdict: CompatVerdict::NotChordal,
            graph: d,
        };
    }
    let cd = chordal_imset(&d);
    if &cd != cs {
        // The only failure direction: a set complete in D that c_𝒮 misses.
        debug_assert!((0..cd.dim()).all(|i| cd.get(i) >= cs.get(i)));
        return Compatibility {
            verdict: CompatVerdict::ExtraClique,
            graph: d,
        };
    }
    Compatibility {
        verdict: CompatVerdict::Compatible,
        graph: d,
    }
}

/// Default cap on the number of Δ components the witness search will take on.
pub const DEFAULT_WITNESS_CAP: usize = 20;

/// Searches for a selection 𝒮 such that both 𝒮 and its complement are
/// chordally compatible and c_𝒮 reproduces neither c_G nor c_H. Returns the
/// induced witness pair, or `None` when no such selection exists, in which
/// case c_G, c_H is an edge of CGP_n.
pub fn find_chordal_witnesses(g: &UGraph, h: &UGraph) -> Result<Option<(UGraph, UGraph)>> {
    find_chordal_witnesses_with_cap(g, h, DEFAULT_WITNESS_CAP)
}

pub fn find_chordal_witnesses_with_cap(
    g: &UGraph,
    h: &UGraph,
    cap: usize,
) -> Result<Option<(UGraph, UGraph)>> {
    if !is_chordal(g) || !is_chordal(h) {
        return Err(Error::domain("witness search needs chordal inputs"));
    }
    if chordal_imset(g) == chordal_imset(h) {
        return Err(Error::domain("witness search needs c_G ≠ c_H"));
    }
    let delta = delta_graph(g, h)?;
    let m = delta.component_count();
    if m > cap {
        return Err(Error::Indeterminate(format!(
            "Δ(G,H) has {m} components, above the search cap {cap}"
        )));
    }
    let mask_g: u64 = delta
        .selection_for_g()
        .chosen
        .iter()
        .fold(0, |acc, &c| acc | (1 << c));
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mask_h = full ^ mask_g;

    let mut memo: HashMap<u64, Option<UGraph>> = HashMap::new();
    let mut compatible_graph = |mask: u64| -> Option<UGraph> {
        memo.entry(mask)
            .or_insert_with(|| {
                let sel = Selection::from_mask(mask);
                let cs = selection_imset(g, h, &delta, &sel).expect("mask validated");
                let compat = compatibility_of_imset(g.n(), &cs);
                compat.is_compatible().then_some(compat.graph)
            })
            .clone()
    };

    // Gray-code enumeration order; any hit works, this makes it canonical.
    for step in 0..(1u64 << m) {
        let mask = step ^ (step >> 1);
        if mask == mask_g || mask == mask_h {
            continue;
        }
        if let Some(d1) = compatible_graph(mask) {
            if let Some(d2) = compatible_graph(full ^ mask) {
                return Ok(Some((d1, d2)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube_vertices, spanning_tree_vertices};
    use crate::graphs::UGraph;
    use crate::subsets::subset_index;
    use crate::vertex::IntVertex;

    #[test]
    fn face_cost_matches_the_definition() {
        let c = face_cost(&IntVertex::new(vec![1, 0]), &IntVertex::new(vec![1, 1])).unwrap();
        assert_eq!(c.weights, vec![1.0, 0.0]);
        let c = face_cost(&IntVertex::new(vec![0, 1]), &IntVertex::new(vec![0, 1])).unwrap();
        assert_eq!(c.weights, vec![-1.0, 1.0]);
        let c = face_cost(&IntVertex::new(vec![0, 1]), &IntVertex::new(vec![1, 0])).unwrap();
        assert_eq!(c.weights, vec![0.0, 0.0]);
        assert!(face_cost(&IntVertex::new(vec![2, 0]), &IntVertex::new(vec![0, 0])).is_err());
    }

    #[test]
    fn cube_face_restriction() {
        let cube = cube_vertices(3).unwrap();
        let a = cube.position(&IntVertex::new(vec![0, 0, 0])).unwrap();
        let b = cube.position(&IntVertex::new(vec![0, 1, 1])).unwrap();
        let face = restrict_face(&cube, a, b).unwrap();
        let got: Vec<&IntVertex> = face.iter().map(|&i| cube.get(i)).collect();
        let expect: Vec<IntVertex> = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1]]
            .into_iter()
            .map(|c| IntVertex::new(c.to_vec()))
            .collect();
        assert_eq!(got.len(), 4);
        for e in &expect {
            assert!(got.iter().any(|v| *v == e));
        }
    }

    #[test]
    fn complementary_pair_restricts_to_everything() {
        let cube = cube_vertices(3).unwrap();
        let a = cube.position(&IntVertex::new(vec![0, 0, 0])).unwrap();
        let b = cube.position(&IntVertex::new(vec![1, 1, 1])).unwrap();
        assert_eq!(restrict_face(&cube, a, b).unwrap().len(), cube.len());
    }

    #[test]
    fn face_members_maximize_the_face_cost() {
        let vs = spanning_tree_vertices(4).unwrap();
        for a in 0..vs.len() {
            for b in (a + 1)..vs.len() {
                let face = restrict_face(&vs, a, b).unwrap();
                assert!(face.contains(&a) && face.contains(&b));
                let cost = face_cost(vs.get(a), vs.get(b)).unwrap();
                let max = (0..vs.len())
                    .map(|i| cost.dot(vs.get(i)))
                    .fold(f64::NEG_INFINITY, f64::max);
                for i in 0..vs.len() {
                    let is_max = cost.dot(vs.get(i)) == max;
                    assert_eq!(is_max, face.contains(&i));
                }
            }
        }
    }

    #[test]
    fn chordality_oracle() {
        let k4 = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_chordal(&k4));
        let c4 = UGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_chordal(&c4));
        // 5-cycle plus one chord leaves a chordless 4-cycle.
        let c5_chord =
            UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_chordal(&c5_chord));
        assert!(is_chordal(&UGraph::new(3)));
    }

    #[test]
    fn chordality_matches_brute_force_on_all_small_graphs() {
        // Brute force: a chordless cycle is a cyclic node sequence of length
        // >= 4 with no chords between non-consecutive members.
        fn has_chordless_cycle(g: &UGraph) -> bool {
            let n = g.n();
            fn extend(g: &UGraph, path: &mut Vec<usize>, used: u64) -> bool {
                let last = *path.last().unwrap();
                for next in 0..g.n() {
                    if used & (1 << next) != 0 || !g.has_edge(last, next) {
                        continue;
                    }
                    if path.len() >= 3 && g.has_edge(*path.first().unwrap(), next) {
                        // Candidate cycle: check chordlessness.
                        let ok = path.len() + 1 >= 4
                            && (0..path.len()).all(|i| {
                                let u = path[i];
                                ((i + 2)..path.len()).all(|j| {
                                    let v = path[j];
                                    let consecutive_wrap = i == 0 && j == path.len() - 1;
                                    consecutive_wrap || !g.has_edge(u, v)
                                })
                            })
                            && (1..path.len() - 1).all(|i| !g.has_edge(path[i], next));
                        if ok {
                            return true;
                        }
                    }
                    if next > path[0] {
                        path.push(next);
                        if extend(g, path, used | (1 << next)) {
                            return true;
                        }
                        path.pop();
                    }
                }
                false
            }
            for start in 0..n {
                let mut path = vec![start];
                if extend(g, &mut path, 1 << start) {
                    return true;
                }
            }
            false
        }
        for g in crate::families::all_graphs(5) {
            assert_eq!(is_chordal(&g), !has_chordless_cycle(&g), "graph {g:?}");
        }
    }

    #[test]
    fn split_partitions() {
        let k3 = UGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(split_partition(&k3), Some((vec![0, 1, 2], vec![])));
        let c4 = UGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(split_partition(&c4), None);
        // Star with center 0: maximal clique enumeration gives K = {0, 1}.
        let star = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(split_partition(&star), Some((vec![0, 1], vec![2, 3])));
    }

    #[test]
    fn split_iff_graph_and_complement_chordal() {
        for g in crate::families::all_graphs(5) {
            let split = split_partition(&g).is_some();
            let both_chordal = is_chordal(&g) && is_chordal(&g.complement());
            assert_eq!(split, both_chordal, "graph {g:?}");
        }
    }

    #[test]
    fn delta_graph_of_equal_graphs_is_empty() {
        let g = UGraph::from_edges(3, &[(0, 1)]).unwrap();
        let d = delta_graph(&g, &g).unwrap();
        assert_eq!(d.node_count(), 0);
        assert_eq!(d.component_count(), 0);
    }

    #[test]
    fn delta_graph_empty_vs_triangle() {
        let empty = UGraph::new(3);
        let k3 = UGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let d = delta_graph(&empty, &k3).unwrap();
        // 4 nodes; the triple is adjacent to each pair, pairs mutually
        // non-adjacent, one component.
        assert_eq!(d.node_count(), 4);
        assert_eq!(d.component_count(), 1);
        let triple = d.nodes().iter().position(|&m| m.count_ones() == 3).unwrap();
        for i in 0..4 {
            if i != triple {
                assert!(d.adjacent(i, triple));
                for j in 0..4 {
                    if j != i && j != triple {
                        assert!(!d.adjacent(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn top_set_connects_delta_against_complete_graph() {
        let kn = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for g in crate::families::all_graphs(4) {
            if g == kn {
                continue;
            }
            let d = delta_graph(&g, &kn).unwrap();
            assert_eq!(d.component_count(), 1, "Δ(G, K_n) must be connected");
            let top = (1u32 << 4) - 1;
            assert!(d.contains_mask(top));
        }
    }

    #[test]
    fn full_and_empty_selections_reproduce_the_imsets() {
        let g = UGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let h = UGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let delta = delta_graph(&g, &h).unwrap();
        let sel_g = delta.selection_for_g();
        let sel_h = delta.selection_for_h();
        assert_eq!(
            selection_imset(&g, &h, &delta, &sel_g).unwrap(),
            chordal_imset(&g)
        );
        assert_eq!(
            selection_imset(&g, &h, &delta, &sel_h).unwrap(),
            chordal_imset(&h)
        );
        // G ⊆ H: the empty selection takes c_G's value 0 on every component.
        assert_eq!(
            selection_imset(&g, &h, &delta, &Selection::empty()).unwrap(),
            chordal_imset(&g)
        );
        let both = chordally_compatible(&g, &h, &delta, &sel_g).unwrap();
        assert!(both.is_compatible());
        assert_eq!(both.graph, g);
        let other = chordally_compatible(&g, &h, &delta, &sel_h).unwrap();
        assert!(other.is_compatible());
        assert_eq!(other.graph, h);
    }

    #[test]
    fn selection_sum_identity() {
        // c_𝒮 + c_{M∖𝒮} = c_G + c_H for every selection.
        let g = UGraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let h = UGraph::from_edges(5, &[(1, 2), (3, 4)]).unwrap();
        let delta = delta_graph(&g, &h).unwrap();
        let m = delta.component_count();
        let cg = chordal_imset(&g);
        let ch = chordal_imset(&h);
        let total = cg.checked_add(&ch).unwrap();
        for mask in 0u64..(1 << m) {
            let s = Selection::from_mask(mask);
            let t = Selection::from_mask(((1u64 << m) - 1) ^ mask);
            let cs = selection_imset(&g, &h, &delta, &s).unwrap();
            let ct = selection_imset(&g, &h, &delta, &t).unwrap();
            assert_eq!(cs.checked_add(&ct).unwrap(), total);
        }
    }

    #[test]
    fn incompatible_selection_detected() {
        // G and H on 4 nodes realizing an alternating 4-cycle: picking one
        // edge from each side induces a chordless cycle.
        let g = UGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let h = UGraph::from_edges(4, &[(1, 2), (0, 3)]).unwrap();
        let delta = delta_graph(&g, &h).unwrap();
        assert_eq!(delta.component_count(), 4);
        let mut found_not_chordal = false;
        for mask in 0u64..16 {
            let sel = Selection::from_mask(mask);
            let compat = chordally_compatible(&g, &h, &delta, &sel).unwrap();
            if compat.graph.edge_count() == 4 {
                assert_eq!(compat.verdict, CompatVerdict::NotChordal);
                found_not_chordal = true;
            }
        }
        assert!(found_not_chordal);
    }

    #[test]
    fn single_edge_graphs_have_union_and_empty_as_witnesses() {
        let g = UGraph::from_edges(3, &[(0, 1)]).unwrap();
        let h = UGraph::from_edges(3, &[(1, 2)]).unwrap();
        let (d1, d2) = find_chordal_witnesses(&g, &h).unwrap().unwrap();
        let mut pair = [d1.edge_count(), d2.edge_count()];
        pair.sort();
        assert_eq!(pair, [0, 2]);
        let sum = chordal_imset(&d1).checked_add(&chordal_imset(&d2)).unwrap();
        let expect = chordal_imset(&g).checked_add(&chordal_imset(&h)).unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn subgraph_pairs_with_disconnected_delta_have_witnesses() {
        // G ⊂ H with Δ(G,H) having k >= 2 components: 𝒮 = {S_1} works.
        let g = UGraph::new(4);
        let h = UGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let delta = delta_graph(&g, &h).unwrap();
        assert!(delta.component_count() >= 2);
        let witnesses = find_chordal_witnesses(&g, &h).unwrap();
        assert!(witnesses.is_some());
        let (d1, d2) = witnesses.unwrap();
        for d in [&d1, &d2] {
            assert!(is_chordal(d));
            assert_ne!(chordal_imset(d), chordal_imset(&g));
            assert_ne!(chordal_imset(d), chordal_imset(&h));
        }
    }

    #[test]
    fn witness_cap_reports_indeterminate() {
        let g = UGraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let h = UGraph::from_edges(5, &[(1, 2), (3, 4)]).unwrap();
        match find_chordal_witnesses_with_cap(&g, &h, 1) {
            Err(Error::Indeterminate(_)) => {}
            other => panic!("expected indeterminate, got {:?}", other.is_ok()),
        }
    }
}
