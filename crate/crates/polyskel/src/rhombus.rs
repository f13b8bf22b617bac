//! The rhombus-criterion prefilter: a pair α, β with a second pair α′, β′
//! satisfying α+β = α′+β′ is never an edge, and one sort over the sum keys
//! finds every such coincidence at once.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ledger::{PairLedger, PairStatus, Resolution};
use crate::vertex::{IntVertex, VertexSet};

/// The sum key γ = α + β.
pub fn sum_key(a: &IntVertex, b: &IntVertex) -> Result<IntVertex> {
    a.checked_add(b)
}

/// What one scan did.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScanReport {
    /// Records examined.
    pub pairs: usize,
    /// Records marked NonEdge.
    pub marked_nonedge: usize,
    /// Equal-key groups of size at least two.
    pub groups: usize,
}

/// Marks every pair that shares its sum key with another pair as NonEdge,
/// assigning each record the next record of its group (cyclically) as
/// witness. Statuses of unaffected records are untouched.
///
/// Requires the ledger's sum keys to be materialized; one sort plus one
/// linear pass, O(d·v²·log v).
pub fn rhombus_scan(ledger: &mut PairLedger, vs: &VertexSet) -> Result<ScanReport> {
    if !ledger.has_keys() {
        return Err(Error::domain(
            "rhombus_scan needs a ledger with sum keys; use rhombus_scan_streamed otherwise",
        ));
    }
    if ledger.vertex_count() != vs.len() {
        return Err(Error::domain("ledger and vertex set sizes disagree"));
    }
    let mut order: Vec<u32> = (0..ledger.len() as u32).collect();
    order.sort_unstable_by(|&i, &j| {
        ledger
            .key_slice(i as usize)
            .cmp(&ledger.key_slice(j as usize))
            .then(i.cmp(&j))
    });
    let mut report = ScanReport {
        pairs: ledger.len(),
        marked_nonedge: 0,
        groups: 0,
    };
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len()
            && ledger.key_slice(order[start] as usize) == ledger.key_slice(order[end] as usize)
        {
            end += 1;
        }
        if end - start >= 2 {
            mark_group(ledger, &order[start..end], &mut report);
        }
        start = end;
    }
    Ok(report)
}

fn mark_group(ledger: &mut PairLedger, group: &[u32], report: &mut ScanReport) {
    report.groups += 1;
    for (pos, &idx) in group.iter().enumerate() {
        let next = group[(pos + 1) % group.len()] as usize;
        let witness = ledger.pair_at(next);
        ledger.set_status(
            idx as usize,
            PairStatus::NonEdge,
            Some(witness),
            Resolution::RhombusWitness,
        );
        report.marked_nonedge += 1;
    }
}

/// Streamed variant for ledgers whose keys would not fit in memory: pairs
/// are hashed on their sum key into shards of at most `max_resident`
/// entries, and only one shard's keys are resident at a time. Equal keys
/// always land in the same shard, so the markings match [`rhombus_scan`].
pub fn rhombus_scan_streamed(
    ledger: &mut PairLedger,
    vs: &VertexSet,
    max_resident: usize,
) -> Result<ScanReport> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};

    if ledger.vertex_count() != vs.len() {
        return Err(Error::domain("ledger and vertex set sizes disagree"));
    }
    let total = ledger.len();
    let shards = total.div_ceil(max_resident.max(1)).max(1) as u64;
    let mut report = ScanReport {
        pairs: total,
        marked_nonedge: 0,
        groups: 0,
    };
    let v = vs.len();
    let dim = vs.dim();
    let mut key = vec![0i64; dim];
    for shard in 0..shards {
        // (key, pair index) for the pairs hashing into this shard.
        let mut resident: Vec<(Vec<i64>, u32)> = Vec::new();
        let mut idx = 0u32;
        for a in 0..v {
            let va = vs.get(a).coords();
            for b in (a + 1)..v {
                let vb = vs.get(b).coords();
                for ((k, x), y) in key.iter_mut().zip(va).zip(vb) {
                    *k = x + y;
                }
                if shards == 1 || {
                    let mut h = DefaultHasher::new();
                    key.hash(&mut h);
                    h.finish() % shards == shard
                } {
                    resident.push((key.clone(), idx));
                }
                idx += 1;
            }
        }
        resident.sort_unstable();
        let mut start = 0;
        while start < resident.len() {
            let mut end = start + 1;
            while end < resident.len() && resident[end].0 == resident[start].0 {
                end += 1;
            }
            if end - start >= 2 {
                let group: Vec<u32> = resident[start..end].iter().map(|(_, i)| *i).collect();
                mark_group(ledger, &group, &mut report);
            }
            start = end;
        }
    }
    Ok(report)
}

/// True when the pair (a, b) has rhombus witnesses inside `vs`: some vertex
/// γ outside the pair with α+β−γ also a vertex outside the pair. Hash
/// lookups make this O(v·d) for a single pair.
pub fn has_witness(vs: &VertexSet, a: usize, b: usize) -> bool {
    let sum = vs
        .get(a)
        .checked_add(vs.get(b))
        .expect("vertices of one set share a dimension");
    for (g, cand) in vs.iter().enumerate() {
        if g == a || g == b {
            continue;
        }
        let partner = sum.checked_sub(cand).expect("dimensions match");
        if let Some(p) = vs.position(&partner) {
            if p != a && p != b && p != g {
                return true;
            }
        }
    }
    false
}

/// Result of a fulfillment audit.
#[derive(Clone, Debug, Serialize)]
pub struct FulfillmentReport {
    pub fulfills: bool,
    /// Pairs that are non-edges without witnesses.
    pub violations: Vec<(usize, usize)>,
    pub pairs: usize,
    /// Pairs with witnesses (sound non-edges without consulting the oracle).
    pub witnessed: usize,
    /// Pairs the oracle was asked about.
    pub oracle_checked: usize,
}

/// Audits the rhombus criterion over a vertex set: a pair violates iff the
/// oracle calls it a non-edge and no witness pair exists in `vs`.
///
/// `edge_oracle(a, b)` must soundly return true iff the pair is an edge.
/// Only pairs without witnesses are sent to the oracle.
pub fn check_fulfillment<F>(vs: &VertexSet, mut edge_oracle: F) -> Result<FulfillmentReport>
where
    F: FnMut(usize, usize) -> Result<bool>,
{
    let mut ledger = crate::ledger::make_ledger_with_budget(vs, false, u64::MAX)?;
    let scan = rhombus_scan_streamed(&mut ledger, vs, 8_000_000)?;
    let mut report = FulfillmentReport {
        fulfills: true,
        violations: Vec::new(),
        pairs: scan.pairs,
        witnessed: scan.marked_nonedge,
        oracle_checked: 0,
    };
    for idx in 0..ledger.len() {
        if ledger.status(idx) != PairStatus::Unknown {
            continue;
        }
        let (a, b) = ledger.pair_at(idx);
        report.oracle_checked += 1;
        if !edge_oracle(a, b)? {
            report.violations.push((a, b));
            report.fulfills = false;
        }
    }
    Ok(report)
}
