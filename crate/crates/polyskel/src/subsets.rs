//! Canonical indexing of the subsets S ⊆ {0,…,n−1} with |S| ≥ 2.
//!
//! Imset coordinates are laid out in ascending cardinality, ties broken
//! lexicographically on the sorted element list. The order is a project
//! convention (files depend on it being bit-exact), so everything here is
//! table-free combinatorics rather than anything clever.

use crate::error::{Error, Result};

/// Largest node count the subset machinery accepts. Imset lengths grow as
/// 2^n, so anything bigger is a usage error rather than a real workload.
pub const MAX_NODES: usize = 24;

/// Number of imset coordinates for `n` nodes: 2^n − n − 1.
pub fn imset_len(n: usize) -> usize {
    assert!(n >= 2 && n <= MAX_NODES, "node count out of range");
    (1usize << n) - n - 1
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 || n > MAX_NODES {
        return Err(Error::domain(format!(
            "node count {n} outside supported range 2..={MAX_NODES}"
        )));
    }
    Ok(())
}

/// Canonical coordinate index of the subset given as a bitmask.
///
/// The mask must have at least two bits set, all below `n`.
pub fn mask_index(mask: u32, n: usize) -> usize {
    debug_assert!(mask.count_ones() >= 2);
    debug_assert!(mask < (1u32 << n));
    let k = mask.count_ones() as usize;
    // Subsets of smaller cardinality come first.
    let mut idx: u64 = (2..k).map(|j| binomial(n, j)).sum();
    // Lexicographic rank of the sorted element list among k-subsets.
    let mut prev: i64 = -1;
    let mut remaining = k;
    let mut m = mask;
    while m != 0 {
        let a = m.trailing_zeros() as i64;
        m &= m - 1;
        remaining -= 1;
        for j in (prev + 1)..a {
            idx += binomial(n - 1 - j as usize, remaining);
        }
        prev = a;
    }
    idx as usize
}

/// Inverse of [`mask_index`].
pub fn index_mask(index: usize, n: usize) -> Result<u32> {
    check_n(n)?;
    if index >= imset_len(n) {
        return Err(Error::domain(format!(
            "coordinate index {index} out of range for n = {n}"
        )));
    }
    let mut rank = index as u64;
    let mut k = 2;
    while rank >= binomial(n, k) {
        rank -= binomial(n, k);
        k += 1;
    }
    // Unrank within the k-subsets.
    let mut mask = 0u32;
    let mut next = 0usize;
    let mut remaining = k;
    while remaining > 0 {
        let c = binomial(n - 1 - next, remaining - 1);
        if rank < c {
            mask |= 1 << next;
            remaining -= 1;
        } else {
            rank -= c;
        }
        next += 1;
    }
    Ok(mask)
}

fn labels_to_mask(labels: &[usize], n: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &x in labels {
        if x >= n {
            return Err(Error::domain(format!(
                "label {x} outside the node set 0..{n}"
            )));
        }
        if mask & (1 << x) != 0 {
            return Err(Error::domain(format!("duplicate label {x}")));
        }
        mask |= 1 << x;
    }
    Ok(mask)
}

/// Canonical coordinate index of a subset given by its labels.
pub fn subset_index(labels: &[usize], n: usize) -> Result<usize> {
    check_n(n)?;
    let mask = labels_to_mask(labels, n)?;
    if mask.count_ones() < 2 {
        return Err(Error::domain("subsets must have at least two elements"));
    }
    Ok(mask_index(mask, n))
}

/// Sorted labels of the subset at the given coordinate index.
pub fn index_subset(index: usize, n: usize) -> Result<Vec<usize>> {
    let mask = index_mask(index, n)?;
    Ok(mask_labels(mask))
}

/// Sorted labels of a bitmask.
pub fn mask_labels(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// All subset masks of {0,…,n−1} with |S| ≥ 2 in canonical order.
///
/// Position in the returned vector equals the canonical coordinate index.
pub fn all_masks(n: usize) -> Vec<u32> {
    assert!(n >= 2 && n <= MAX_NODES);
    let mut masks: Vec<u32> = (0..(1u32 << n)).filter(|m| m.count_ones() >= 2).collect();
    masks.sort_by_key(|&m| (m.count_ones(), mask_labels(m)));
    masks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_subsets_for_three_nodes() {
        assert_eq!(subset_index(&[0, 1], 3).unwrap(), 0);
        assert_eq!(subset_index(&[0, 2], 3).unwrap(), 1);
        assert_eq!(subset_index(&[1, 2], 3).unwrap(), 2);
        assert_eq!(subset_index(&[0, 1, 2], 3).unwrap(), 3);
    }

    #[test]
    fn five_nodes_is_a_bijection_onto_26() {
        let len = imset_len(5);
        assert_eq!(len, 26);
        let mut seen = vec![false; len];
        for mask in 0u32..(1 << 5) {
            if mask.count_ones() < 2 {
                continue;
            }
            let idx = mask_index(mask, 5);
            assert!(idx < len);
            assert!(!seen[idx], "index {idx} hit twice");
            seen[idx] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn round_trip_up_to_eight_nodes() {
        for n in 2..=8 {
            for idx in 0..imset_len(n) {
                let labels = index_subset(idx, n).unwrap();
                assert_eq!(subset_index(&labels, n).unwrap(), idx);
            }
            // all_masks agrees with the ranking function.
            for (idx, mask) in all_masks(n).into_iter().enumerate() {
                assert_eq!(mask_index(mask, n), idx);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(subset_index(&[0], 3).is_err());
        assert!(subset_index(&[], 3).is_err());
        assert!(subset_index(&[0, 3], 3).is_err());
        assert!(subset_index(&[1, 1], 3).is_err());
        assert!(index_subset(4, 3).is_err());
    }
}
