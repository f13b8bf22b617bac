//! Vertex-set generators for every polytope family under study.
//!
//! Generators emit vertices sorted lexicographically on the coordinate
//! vector, so indices are reproducible across runs and implementations.

use crate::error::{Error, Result};
use crate::graphs::{Dag, Matching, UGraph};
use crate::subsets::{self, all_masks};
use crate::vertex::{IntVertex, VertexSet};

fn finish(dim: usize, vertices: Vec<IntVertex>, tag: String) -> VertexSet {
    let mut vs = VertexSet::from_vertices(dim, vertices).expect("generator dims are uniform");
    vs.canonicalize();
    vs.set_family_tag(tag);
    vs
}

/// The characteristic imset of a DAG: coordinate S is 1 iff some i ∈ S has
/// S ⊆ pa(i) ∪ {i}. Laid out in canonical subset order.
pub fn char_imset(g: &Dag) -> IntVertex {
    let n = g.n();
    let masks = all_masks(n);
    let closed: Vec<u64> = (0..n).map(|i| g.parents_mask(i) | (1 << i)).collect();
    let coords = masks
        .iter()
        .map(|&s| {
            let mut m = s as u64;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                if s as u64 & !closed[i] == 0 {
                    return 1i64;
                }
            }
            0i64
        })
        .collect();
    IntVertex::new(coords)
}

/// The imset of an undirected graph: coordinate S is 1 iff S induces a
/// clique. For chordal graphs this is the characteristic imset of any
/// v-structure-free DAG with that skeleton.
pub fn chordal_imset(g: &UGraph) -> IntVertex {
    let masks = all_masks(g.n());
    let coords = masks
        .iter()
        .map(|&s| if g.induces_clique(s as u64) { 1i64 } else { 0i64 })
        .collect();
    IntVertex::new(coords)
}

/// All labeled DAGs on n nodes, by assigning each unordered pair one of
/// {absent, u→v, v→u} and filtering out directed cycles.
pub fn all_dags(n: usize) -> Vec<Dag> {
    assert!(n >= 1 && n <= 6, "DAG enumeration is meant for small n");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut parents = vec![0u64; n];
        let mut c = code;
        for &(u, v) in &pairs {
            match c % 3 {
                0 => {}
                1 => parents[v] |= 1 << u,
                _ => parents[u] |= 1 << v,
            }
            c /= 3;
        }
        let dag = Dag::from_parent_masks_unchecked(n, parents);
        if Dag::from_arcs(n, &dag.arcs()).is_ok() {
            out.push(dag);
        }
    }
    out
}

/// All labeled trees on n nodes via Prüfer sequences.
pub fn all_labeled_trees(n: usize) -> Vec<UGraph> {
    assert!(n >= 2);
    if n == 2 {
        return vec![UGraph::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut seq = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = (c % n as u64) as usize;
            c /= n as u64;
        }
        out.push(prufer_to_tree(&seq, n));
    }
    out
}

/// Decodes a Prüfer sequence of length n−2 into a labeled tree.
pub fn prufer_to_tree(seq: &[usize], n: usize) -> UGraph {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1u32; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = UGraph::new(n);
    // Smallest-leaf elimination; `ptr` sweeps candidates once overall.
    let mut ptr = 0;
    let mut leaf = {
        while degree[ptr] != 1 {
            ptr += 1;
        }
        ptr
    };
    for &s in seq {
        g.add_edge(leaf, s).unwrap();
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // Two leaves remain; one of them is `leaf`, the other is node n−1.
    g.add_edge(leaf, n - 1).unwrap();
    g
}

/// All DAG orientations of all labeled trees on n nodes.
pub fn all_tree_dags(n: usize) -> Vec<Dag> {
    let mut out = Vec::new();
    for tree in all_labeled_trees(n) {
        let edges = tree.edges();
        for code in 0..(1u32 << edges.len()) {
            let mut parents = vec![0u64; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if code & (1 << i) == 0 {
                    parents[v] |= 1 << u;
                } else {
                    parents[u] |= 1 << v;
                }
            }
            // Orientations of a tree are always acyclic.
            out.push(Dag::from_parent_masks_unchecked(n, parents));
        }
    }
    out
}

/// CIM_n: distinct characteristic imsets over all DAGs on n labeled nodes.
pub fn enum_cim_vertices(n: usize) -> Result<VertexSet> {
    if !(2..=5).contains(&n) {
        return Err(Error::domain(format!(
            "CIM enumeration supports 2 <= n <= 5, got {n}"
        )));
    }
    let dim = subsets::imset_len(n);
    let vertices = all_dags(n).iter().map(char_imset).collect();
    Ok(finish(dim, vertices, format!("cim:{n} order=card-lex")))
}

/// CIMTree_n: distinct imsets of DAGs whose skeleton is a spanning tree.
pub fn enum_cimtree_vertices(n: usize) -> Result<VertexSet> {
    if !(3..=6).contains(&n) {
        return Err(Error::domain(format!(
            "CIMTree enumeration supports 3 <= n <= 6, got {n}"
        )));
    }
    let dim = subsets::imset_len(n);
    let vertices = all_tree_dags(n).iter().map(char_imset).collect();
    Ok(finish(dim, vertices, format!("cimtree:{n} order=card-lex")))
}

/// CGP_n: imsets of all labeled chordal graphs on n nodes.
pub fn enum_cgp_vertices(n: usize) -> Result<VertexSet> {
    if !(2..=6).contains(&n) {
        return Err(Error::domain(format!(
            "CGP enumeration supports 2 <= n <= 6, got {n}"
        )));
    }
    let dim = subsets::imset_len(n);
    let vertices = all_graphs(n)
        .into_iter()
        .filter(crate::faces::is_chordal)
        .map(|g| chordal_imset(&g))
        .collect();
    Ok(finish(dim, vertices, format!("cgp:{n} order=card-lex")))
}

/// All 2^C(n,2) labeled graphs on n nodes.
pub fn all_graphs(n: usize) -> Vec<UGraph> {
    assert!(n >= 1 && n <= 7, "graph enumeration is meant for small n");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u64..(1 << pairs.len()))
        .map(|code| {
            let mut g = UGraph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if code & (1 << i) != 0 {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
        .collect()
}

/// Edge-indicator vector of a graph in the C(n,2)-dimensional pair space,
/// pairs ordered lexicographically (matching the canonical 2-subset order).
pub fn edge_indicator(g: &UGraph) -> IntVertex {
    let n = g.n();
    let mut coords = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            coords.push(if g.has_edge(u, v) { 1 } else { 0 });
        }
    }
    IntVertex::new(coords)
}

/// Spanning tree polytope vertices: one 0/1 vector per labeled tree of K_n.
pub fn spanning_tree_vertices(n: usize) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::domain("spanning trees need n >= 2"));
    }
    if n > 8 {
        return Err(Error::domain(
            "spanning tree enumeration above n = 8 is not supported",
        ));
    }
    let dim = n * (n - 1) / 2;
    let vertices = all_labeled_trees(n).iter().map(edge_indicator).collect();
    Ok(finish(dim, vertices, format!("st:{n}")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Flattened n×n permutation matrix; entry (i, σ(i)) is 1.
pub fn permutation_matrix(perm: &[usize]) -> IntVertex {
    let n = perm.len();
    let mut coords = vec![0i64; n * n];
    for (i, &j) in perm.iter().enumerate() {
        coords[i * n + j] = 1;
    }
    IntVertex::new(coords)
}

/// Birkhoff polytope vertices: all n! permutation matrices.
pub fn birkhoff_vertices(n: usize) -> Result<VertexSet> {
    if n < 1 {
        return Err(Error::domain("Birkhoff polytope needs n >= 1"));
    }
    if n > 8 {
        return Err(Error::domain("Birkhoff enumeration above n = 8 is not supported"));
    }
    let vertices = permutations(n)
        .iter()
        .map(|p| permutation_matrix(p))
        .collect();
    Ok(finish(n * n, vertices, format!("birkhoff:{n}")))
}

/// All k-matchings of the m×n grid.
pub fn all_matchings(m: usize, n: usize, k: usize) -> Result<Vec<Matching>> {
    if k < 1 || k > m.min(n) {
        return Err(Error::domain(format!(
            "k = {k} outside 1..=min({m},{n})"
        )));
    }
    let mut out = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k);
    fn rec(
        row: usize,
        m: usize,
        n: usize,
        k: usize,
        used_cols: u64,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        if pairs.len() == k {
            out.push(Matching::new(m, n, pairs.clone()).unwrap());
            return;
        }
        if row >= m || m - row < k - pairs.len() {
            return;
        }
        // Skip the row entirely.
        rec(row + 1, m, n, k, used_cols, pairs, out);
        for c in 0..n {
            if used_cols & (1 << c) == 0 {
                pairs.push((row, c));
                rec(row + 1, m, n, k, used_cols | (1 << c), pairs, out);
                pairs.pop();
            }
        }
    }
    rec(0, m, n, k, 0, &mut pairs, &mut out);
    Ok(out)
}

/// k-assignment polytope vertices: m×n 0/1 matrices with exactly k ones and
/// no repeated row or column, flattened row major.
pub fn k_assignment_vertices(m: usize, n: usize, k: usize) -> Result<VertexSet> {
    let vertices = all_matchings(m, n, k)?
        .iter()
        .map(|mt| IntVertex::new(mt.to_coords()))
        .collect();
    Ok(finish(m * n, vertices, format!("kassign:{m}x{n}:{k}")))
}

/// All stable (independent) sets of g, as bitmasks.
pub fn stable_sets(g: &UGraph) -> Vec<u64> {
    (0u64..(1 << g.n())).filter(|&m| g.is_independent(m)).collect()
}

/// Stable set polytope vertices: incidence vectors of all stable sets.
pub fn stab_vertices(g: &UGraph) -> VertexSet {
    let n = g.n();
    let vertices = stable_sets(g)
        .into_iter()
        .map(|mask| {
            IntVertex::new((0..n).map(|i| ((mask >> i) & 1) as i64).collect())
        })
        .collect();
    finish(n, vertices, format!("stab:{n}"))
}

/// Cartesian product: all concatenations of a vertex of v1 with one of v2.
pub fn product_vertices(v1: &VertexSet, v2: &VertexSet) -> VertexSet {
    let dim = v1.dim() + v2.dim();
    let mut vertices = Vec::with_capacity(v1.len() * v2.len());
    for a in v1.iter() {
        for b in v2.iter() {
            let mut coords = Vec::with_capacity(dim);
            coords.extend_from_slice(a.coords());
            coords.extend_from_slice(b.coords());
            vertices.push(IntVertex::new(coords));
        }
    }
    finish(dim, vertices, "product".to_string())
}

/// Cross polytope vertices ±e_i, 2n of them.
pub fn cross_polytope_vertices(n: usize) -> Result<VertexSet> {
    if n < 1 {
        return Err(Error::domain("cross polytope needs n >= 1"));
    }
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        for sign in [1i64, -1] {
            let mut coords = vec![0i64; n];
            coords[i] = sign;
            vertices.push(IntVertex::new(coords));
        }
    }
    Ok(finish(n, vertices, format!("cross:{n}")))
}

/// Permutohedron vertices: all permutations of (1,…,n).
pub fn permutohedron_vertices(n: usize) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::domain("permutohedron needs n >= 2"));
    }
    if n > 8 {
        return Err(Error::domain("permutohedron above n = 8 is not supported"));
    }
    let vertices = permutations(n)
        .iter()
        .map(|p| IntVertex::new(p.iter().map(|&x| (x + 1) as i64).collect()))
        .collect();
    Ok(finish(n, vertices, format!("permutohedron:{n}")))
}

/// Standard cube vertices: all 0/1 vectors of length d.
pub fn cube_vertices(d: usize) -> Result<VertexSet> {
    if d < 1 {
        return Err(Error::domain("cube needs d >= 1"));
    }
    if d > 20 {
        return Err(Error::domain("cube above d = 20 is not supported"));
    }
    let vertices = (0u64..(1 << d))
        .map(|mask| IntVertex::new((0..d).map(|i| ((mask >> i) & 1) as i64).collect()))
        .collect();
    Ok(finish(d, vertices, format!("cube:{d}")))
}

/// Simplex with d+1 vertices: the origin and the d unit vectors.
pub fn simplex_vertices(d: usize) -> Result<VertexSet> {
    if d < 1 {
        return Err(Error::domain("simplex needs d >= 1"));
    }
    let mut vertices = vec![IntVertex::new(vec![0; d])];
    for i in 0..d {
        let mut coords = vec![0i64; d];
        coords[i] = 1;
        vertices.push(IntVertex::new(coords));
    }
    Ok(finish(d, vertices, format!("simplex:{d}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::subset_index;

    #[test]
    fn char_imset_of_edgeless_dag_is_zero() {
        let dag = Dag::from_arcs(3, &[]).unwrap();
        assert_eq!(char_imset(&dag).coords(), &[0, 0, 0, 0]);
    }

    #[test]
    fn char_imset_of_single_arc() {
        let dag = Dag::from_arcs(3, &[(0, 1)]).unwrap();
        let imset = char_imset(&dag);
        let mut expected = vec![0i64; 4];
        expected[subset_index(&[0, 1], 3).unwrap()] = 1;
        assert_eq!(imset.coords(), expected.as_slice());
    }

    #[test]
    fn char_imset_of_collider() {
        // 0 → 2 ← 1: evaluating the definition over all four subsets gives
        // 1 at {0,2}, {1,2}, {0,1,2} and 0 at {0,1}.
        let dag = Dag::from_arcs(3, &[(0, 2), (1, 2)]).unwrap();
        let imset = char_imset(&dag);
        let idx = |s: &[usize]| subset_index(s, 3).unwrap();
        assert_eq!(imset.get(idx(&[0, 2])), 1);
        assert_eq!(imset.get(idx(&[1, 2])), 1);
        assert_eq!(imset.get(idx(&[0, 1, 2])), 1);
        assert_eq!(imset.get(idx(&[0, 1])), 0);
    }

    #[test]
    fn char_imset_depends_only_on_parent_sets() {
        let a = Dag::from_arcs(4, &[(0, 1), (2, 1), (1, 3)]).unwrap();
        let b = Dag::from_arcs(4, &[(1, 3), (2, 1), (0, 1)]).unwrap();
        assert_eq!(char_imset(&a), char_imset(&b));
    }

    #[test]
    fn cim_counts_for_small_n() {
        assert_eq!(enum_cim_vertices(2).unwrap().len(), 2);
        // 25 DAGs on 3 nodes collapse to 11 Markov classes.
        assert_eq!(all_dags(3).len(), 25);
        assert_eq!(enum_cim_vertices(3).unwrap().len(), 11);
    }

    #[test]
    fn cimtree_count_for_three_nodes() {
        // 3 labeled trees, each a path with 2 Markov classes.
        let vs = enum_cimtree_vertices(3).unwrap();
        assert_eq!(vs.len(), 6);
    }

    #[test]
    fn chordal_imset_examples() {
        let edgeless = UGraph::new(3);
        assert_eq!(chordal_imset(&edgeless).coords(), &[0, 0, 0, 0]);
        let k3 = UGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(chordal_imset(&k3).coords(), &[1, 1, 1, 1]);
        let path = UGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let idx = |s: &[usize]| subset_index(s, 3).unwrap();
        let im = chordal_imset(&path);
        assert_eq!(im.get(idx(&[0, 1])), 1);
        assert_eq!(im.get(idx(&[1, 2])), 1);
        assert_eq!(im.get(idx(&[0, 2])), 0);
        assert_eq!(im.get(idx(&[0, 1, 2])), 0);
    }

    #[test]
    fn chordal_imset_is_downward_closed() {
        for g in all_graphs(5) {
            let im = chordal_imset(&g);
            let masks = all_masks(5);
            for (i, &s) in masks.iter().enumerate() {
                if im.get(i) == 0 {
                    continue;
                }
                for (j, &t) in masks.iter().enumerate() {
                    if t & !s == 0 && im.get(j) != 1 {
                        panic!("subset {t:b} of clique {s:b} not marked");
                    }
                }
            }
        }
    }

    #[test]
    fn cgp_counts_for_small_n() {
        assert_eq!(enum_cgp_vertices(2).unwrap().len(), 2);
        // All 8 graphs on 3 nodes are chordal.
        assert_eq!(enum_cgp_vertices(3).unwrap().len(), 8);
        // 61 of the 64 graphs on 4 nodes are chordal.
        assert_eq!(enum_cgp_vertices(4).unwrap().len(), 61);
    }

    #[test]
    fn only_the_complete_graph_fills_the_top_coordinate() {
        for n in [3usize, 4] {
            let vs = enum_cgp_vertices(n).unwrap();
            let top = subsets::imset_len(n) - 1;
            let full: Vec<usize> = (0..vs.len())
                .filter(|&i| vs.get(i).get(top) == 1)
                .collect();
            assert_eq!(full.len(), 1);
            // That one vertex is the all-ones imset of K_n.
            assert!(vs.get(full[0]).coords().iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn spanning_tree_counts_and_hyperplane() {
        assert_eq!(spanning_tree_vertices(3).unwrap().len(), 3);
        assert_eq!(spanning_tree_vertices(4).unwrap().len(), 16);
        for n in 2..=6 {
            let vs = spanning_tree_vertices(n).unwrap();
            assert_eq!(vs.len(), (n as u64).pow(n as u32 - 2) as usize);
            for v in vs.iter() {
                let sum: i64 = v.coords().iter().sum();
                assert_eq!(sum, n as i64 - 1);
            }
        }
    }

    #[test]
    fn birkhoff_counts() {
        assert_eq!(birkhoff_vertices(1).unwrap().len(), 1);
        let b3 = birkhoff_vertices(3).unwrap();
        assert_eq!(b3.len(), 6);
        assert_eq!(b3.dim(), 9);
        assert_eq!(birkhoff_vertices(5).unwrap().len(), 120);
    }

    #[test]
    fn k_assignment_counts_and_birkhoff_special_case() {
        assert_eq!(k_assignment_vertices(2, 2, 1).unwrap().len(), 4);
        // C(3,2)·C(3,2)·2! = 18, counted by enumeration.
        assert_eq!(k_assignment_vertices(3, 3, 2).unwrap().len(), 18);
        for n in 1..=4 {
            let ka = k_assignment_vertices(n, n, n).unwrap();
            let b = birkhoff_vertices(n).unwrap();
            assert_eq!(ka.len(), b.len());
            assert!(ka.iter().zip(b.iter()).all(|(x, y)| x == y));
        }
        assert!(k_assignment_vertices(2, 2, 3).is_err());
    }

    #[test]
    fn stab_counts() {
        assert_eq!(stab_vertices(&UGraph::new(2)).len(), 4);
        let k2 = UGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(stab_vertices(&k2).len(), 3);
        let c5 = UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        // Brute force over all 32 subsets gives 11 stable sets.
        assert_eq!(stab_vertices(&c5).len(), 11);
    }

    #[test]
    fn products_of_segments_are_cubes() {
        let segment = cube_vertices(1).unwrap();
        let square = product_vertices(&segment, &segment);
        assert_eq!(square.len(), 4);
        let cube3 = product_vertices(&square, &segment);
        assert_eq!(cube3, cube_vertices(3).unwrap());
        let s2 = simplex_vertices(2).unwrap();
        assert_eq!(product_vertices(&s2, &s2).len(), 9);
    }

    #[test]
    fn small_fixed_vertex_sets() {
        let cross = cross_polytope_vertices(2).unwrap();
        let expected: Vec<Vec<i64>> =
            vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]];
        let got: Vec<Vec<i64>> = cross.iter().map(|v| v.coords().to_vec()).collect();
        assert_eq!(got, expected);

        let hex = permutohedron_vertices(3).unwrap();
        assert_eq!(hex.len(), 6);
        for v in hex.iter() {
            assert_eq!(v.coords().iter().sum::<i64>(), 6);
        }

        assert_eq!(cube_vertices(2).unwrap().len(), 4);
    }

    #[test]
    fn cim_contains_cimtree() {
        for n in 3..=4 {
            let cim = enum_cim_vertices(n).unwrap();
            let cimtree = enum_cimtree_vertices(n).unwrap();
            for v in cimtree.iter() {
                assert!(cim.contains(v));
            }
        }
    }

    #[test]
    fn cgp_matches_v_structure_free_dags_small_n() {
        for n in 2..=4 {
            let cgp = enum_cgp_vertices(n).unwrap();
            let mut from_dags = std::collections::HashSet::new();
            for dag in all_dags(n) {
                if dag.is_v_structure_free() {
                    from_dags.insert(char_imset(&dag));
                }
            }
            assert_eq!(from_dags.len(), cgp.len());
            assert!(cgp.iter().all(|v| from_dags.contains(v)));
        }
    }

    #[test]
    fn range_errors() {
        assert!(enum_cim_vertices(6).is_err());
        assert!(enum_cimtree_vertices(2).is_err());
        assert!(enum_cgp_vertices(7).is_err());
    }
}
