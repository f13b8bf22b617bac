//! The pair ledger: one record per unordered vertex pair.
//!
//! Records are stored structure-of-arrays style keyed by the triangular pair
//! rank, so a CIM_5-sized ledger (38.5 million pairs) stays in the hundreds
//! of megabytes. Sum keys are optional and live in one flat buffer.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex::{IntVertex, VertexSet};

/// Default cap on in-memory ledger records, overridable via
/// `POLYSKEL_MEM_BUDGET`.
pub const DEFAULT_MEM_BUDGET: u64 = 100_000_000;

/// Reads the ledger memory budget from the environment, falling back to
/// [`DEFAULT_MEM_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var("POLYSKEL_MEM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MEM_BUDGET)
}

/// Edge status of a vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairStatus {
    NonEdge,
    Unknown,
    Edge,
}

impl PairStatus {
    pub fn as_i8(self) -> i8 {
        match self {
            PairStatus::NonEdge => -1,
            PairStatus::Unknown => 0,
            PairStatus::Edge => 1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            -1 => Some(PairStatus::NonEdge),
            0 => Some(PairStatus::Unknown),
            1 => Some(PairStatus::Edge),
            _ => None,
        }
    }
}

/// How a record reached its final status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// Not yet resolved.
    None,
    /// Marked non-edge by the sum-key scan; a witness pair is stored.
    RhombusWitness,
    /// Decided by the exact rational LP; a certificate was computed.
    ExactLp,
    /// Verified as an edge by the numeric cost-function search.
    Numeric,
}

impl Resolution {
    fn as_u8(self) -> u8 {
        match self {
            Resolution::None => 0,
            Resolution::RhombusWitness => 1,
            Resolution::ExactLp => 2,
            Resolution::Numeric => 3,
        }
    }

    fn from_u8(v: u8) -> Self {
        match v {
            1 => Resolution::RhombusWitness,
            2 => Resolution::ExactLp,
            3 => Resolution::Numeric,
            _ => Resolution::None,
        }
    }
}

const NO_WITNESS: u32 = u32::MAX;

/// A materialized view of one ledger record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub a: usize,
    pub b: usize,
    pub status: PairStatus,
    pub sum_key: Option<IntVertex>,
    pub witness: Option<(usize, usize)>,
    pub resolution: Resolution,
}

/// The list L of all unordered vertex-index pairs.
pub struct PairLedger {
    vertex_count: usize,
    dim: usize,
    status: Vec<i8>,
    witness: Vec<(u32, u32)>,
    resolution: Vec<u8>,
    /// Flat `pairs × dim` buffer when keys are materialized.
    keys: Option<Vec<i64>>,
}

/// Number of unordered pairs over `v` vertices, as u128 to survive huge `v`.
pub fn pair_count(v: usize) -> u128 {
    (v as u128) * (v as u128 - 1) / 2
}

impl PairLedger {
    /// Triangular rank of the pair `(a, b)` with `a < b`.
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b < self.vertex_count);
        let v = self.vertex_count;
        a * v - a * (a + 1) / 2 + (b - a - 1)
    }

    /// Inverse of [`Self::pair_index`].
    pub fn pair_at(&self, idx: usize) -> (usize, usize) {
        let v = self.vertex_count;
        // Find the largest a with a*v - a(a+1)/2 <= idx by direct walk from
        // the quadratic estimate; v is at most a few thousand per shard so
        // this never loops more than a couple of times.
        let mut a = {
            let vf = v as f64;
            let i = idx as f64;
            let est = (2.0 * vf - 1.0 - ((2.0 * vf - 1.0).powi(2) - 8.0 * i).max(0.0).sqrt()) / 2.0;
            (est as usize).min(v - 2)
        };
        while a > 0 && a * v - a * (a + 1) / 2 > idx {
            a -= 1;
        }
        while (a + 1) * v - (a + 1) * (a + 2) / 2 <= idx {
            a += 1;
        }
        let base = a * v - a * (a + 1) / 2;
        (a, idx - base + a + 1)
    }

    pub fn len(&self) -> usize {
        self.status.len()
    }

    pub fn is_empty(&self) -> bool {
        self.status.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_keys(&self) -> bool {
        self.keys.is_some()
    }

    pub fn status(&self, idx: usize) -> PairStatus {
        PairStatus::from_i8(self.status[idx]).unwrap()
    }

    pub fn witness(&self, idx: usize) -> Option<(usize, usize)> {
        let (wa, wb) = self.witness[idx];
        if wa == NO_WITNESS {
            None
        } else {
            Some((wa as usize, wb as usize))
        }
    }

    pub fn resolution(&self, idx: usize) -> Resolution {
        Resolution::from_u8(self.resolution[idx])
    }

    pub fn key_slice(&self, idx: usize) -> Option<&[i64]> {
        self.keys
            .as_ref()
            .map(|k| &k[idx * self.dim..(idx + 1) * self.dim])
    }

    pub fn record(&self, idx: usize) -> PairRecord {
        let (a, b) = self.pair_at(idx);
        PairRecord {
            a,
            b,
            status: self.status(idx),
            sum_key: self.key_slice(idx).map(|s| IntVertex::new(s.to_vec())),
            witness: self.witness(idx),
            resolution: self.resolution(idx),
        }
    }

    pub fn set_status(
        &mut self,
        idx: usize,
        status: PairStatus,
        witness: Option<(usize, usize)>,
        resolution: Resolution,
    ) {
        self.status[idx] = status.as_i8();
        self.witness[idx] = match witness {
            Some((a, b)) => (a as u32, b as u32),
            None => (NO_WITNESS, NO_WITNESS),
        };
        self.resolution[idx] = resolution.as_u8();
    }

    /// Indices of records still marked Unknown.
    pub fn unknown_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.status(i) == PairStatus::Unknown)
            .collect()
    }

    /// All pairs with final status Edge, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.status(i) == PairStatus::Edge)
            .map(|i| self.pair_at(i))
            .collect()
    }

    pub fn count_status(&self, status: PairStatus) -> usize {
        let raw = status.as_i8();
        self.status.iter().filter(|&&s| s == raw).count()
    }
}

/// Creates one Unknown record per unordered pair of `vs`.
///
/// With `with_keys` the sum key α+β is materialized per record. Fails when
/// the record count exceeds the memory budget; callers should then use the
/// streamed scan in the rhombus module instead.
pub fn make_ledger(vs: &VertexSet, with_keys: bool) -> Result<PairLedger> {
    make_ledger_with_budget(vs, with_keys, default_budget())
}

pub fn make_ledger_with_budget(
    vs: &VertexSet,
    with_keys: bool,
    budget: u64,
) -> Result<PairLedger> {
    let v = vs.len();
    if v < 2 {
        return Err(Error::domain("a pair ledger needs at least two vertices"));
    }
    let pairs = pair_count(v);
    if pairs > budget as u128 {
        return Err(Error::Budget { pairs, budget });
    }
    let pairs = pairs as usize;
    let dim = vs.dim();
    let keys = if with_keys {
        let mut keys = Vec::with_capacity(pairs * dim);
        for a in 0..v {
            let va = vs.get(a).coords();
            for b in (a + 1)..v {
                let vb = vs.get(b).coords();
                keys.extend(va.iter().zip(vb).map(|(x, y)| x + y));
            }
        }
        Some(keys)
    } else {
        None
    };
    Ok(PairLedger {
        vertex_count: v,
        dim,
        status: vec![0; pairs],
        witness: vec![(NO_WITNESS, NO_WITNESS); pairs],
        resolution: vec![0; pairs],
        keys,
    })
}

/// Writes the ledger CSV: `a,b,status,witness_a,witness_b`.
pub fn write_ledger_csv<W: Write>(mut w: W, ledger: &PairLedger) -> Result<()> {
    writeln!(w, "a,b,status,witness_a,witness_b")?;
    for idx in 0..ledger.len() {
        let (a, b) = ledger.pair_at(idx);
        let status = ledger.status(idx).as_i8();
        match ledger.witness(idx) {
            Some((wa, wb)) => writeln!(w, "{a},{b},{status},{wa},{wb}")?,
            None => writeln!(w, "{a},{b},{status},,")?,
        }
    }
    Ok(())
}

pub fn write_ledger_csv_path(path: impl AsRef<Path>, ledger: &PairLedger) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_ledger_csv(&mut w, ledger)?;
    w.flush()?;
    Ok(())
}

/// Reads a ledger CSV produced by [`write_ledger_csv`]. The vertex count is
/// recovered from the record count, so the file must be complete.
pub fn read_ledger_csv<R: BufRead>(r: R) -> Result<PairLedger> {
    let mut rows: Vec<(usize, usize, i8, Option<(usize, usize)>)> = Vec::new();
    let mut max_vertex = 0usize;
    for (lineno0, line) in r.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if lineno == 1 {
            if t != "a,b,status,witness_a,witness_b" {
                return Err(Error::parse(lineno, "bad ledger header"));
            }
            continue;
        }
        let fields: Vec<&str> = t.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::parse(lineno, "expected 5 fields"));
        }
        let a: usize = fields[0]
            .parse()
            .map_err(|_| Error::parse(lineno, "bad field a"))?;
        let b: usize = fields[1]
            .parse()
            .map_err(|_| Error::parse(lineno, "bad field b"))?;
        let status: i8 = fields[2]
            .parse()
            .map_err(|_| Error::parse(lineno, "bad status"))?;
        PairStatus::from_i8(status).ok_or_else(|| Error::parse(lineno, "status out of range"))?;
        let witness = match (fields[3], fields[4]) {
            ("", "") => None,
            (wa, wb) => Some((
                wa.parse()
                    .map_err(|_| Error::parse(lineno, "bad witness_a"))?,
                wb.parse()
                    .map_err(|_| Error::parse(lineno, "bad witness_b"))?,
            )),
        };
        if a >= b {
            return Err(Error::parse(lineno, "pairs must satisfy a < b"));
        }
        max_vertex = max_vertex.max(b);
        rows.push((a, b, status, witness));
    }
    let v = max_vertex + 1;
    if rows.len() as u128 != pair_count(v) {
        return Err(Error::parse(
            1,
            format!(
                "{} records do not form a complete ledger over {v} vertices",
                rows.len()
            ),
        ));
    }
    let mut ledger = PairLedger {
        vertex_count: v,
        dim: 0,
        status: vec![0; rows.len()],
        witness: vec![(NO_WITNESS, NO_WITNESS); rows.len()],
        resolution: vec![0; rows.len()],
        keys: None,
    };
    for (a, b, status, witness) in rows {
        let idx = ledger.pair_index(a, b);
        ledger.status[idx] = status;
        ledger.witness[idx] = match witness {
            Some((wa, wb)) => (wa as u32, wb as u32),
            None => (NO_WITNESS, NO_WITNESS),
        };
    }
    Ok(ledger)
}

/// Skeleton output schema: `{"dim": d, "vertices": v, "edges": [[i,j],…]}`.
#[derive(Serialize)]
pub struct SkeletonOut {
    pub dim: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SkeletonOut {
    pub fn from_ledger(vs: &VertexSet, ledger: &PairLedger) -> Self {
        SkeletonOut {
            dim: vs.dim(),
            vertices: vs.len(),
            edges: ledger.edges(),
        }
    }
}

pub fn write_skeleton_json_path(path: impl AsRef<Path>, out: &SkeletonOut) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer(&mut w, out).map_err(|e| Error::Io(e.into()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn read_ledger_csv_path(path: impl AsRef<Path>) -> Result<PairLedger> {
    read_ledger_csv(BufReader::new(File::open(path)?))
}
