//! Integer vertices, deduplicated vertex sets and the plain-text file format.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// A polytope vertex with dense signed-integer coordinates.
///
/// Vertices of the 0/1 families only ever hold 0 and 1, but the type is
/// deliberately wider so the cross polytope and the permutohedron reuse the
/// same machinery.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVertex {
    coords: Vec<i64>,
}

impl IntVertex {
    pub fn new(coords: Vec<i64>) -> Self {
        IntVertex { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    /// True when every coordinate is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.coords.iter().all(|&c| c == 0 || c == 1)
    }

    /// Coordinate-wise sum. Dimensions must match.
    pub fn checked_add(&self, other: &IntVertex) -> Result<IntVertex> {
        if self.dim() != other.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(IntVertex::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Coordinate-wise difference. Dimensions must match.
    pub fn checked_sub(&self, other: &IntVertex) -> Result<IntVertex> {
        if self.dim() != other.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(IntVertex::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }
}

impl fmt::Debug for IntVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{:?}", self.coords)
    }
}

impl fmt::Display for IntVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// An immutable, deduplicated collection of vertices of common dimension.
///
/// Indices are stable: they follow first-occurrence order of construction and
/// survive a save/load round trip.
#[derive(Clone, Debug)]
pub struct VertexSet {
    dim: usize,
    vertices: Vec<IntVertex>,
    positions: HashMap<IntVertex, usize>,
    family_tag: Option<String>,
    all_zero_one: bool,
}

impl VertexSet {
    pub fn new(dim: usize) -> Self {
        VertexSet {
            dim,
            vertices: Vec::new(),
            positions: HashMap::new(),
            family_tag: None,
            all_zero_one: true,
        }
    }

    /// Builds a set from an iterator, deduplicating while preserving the
    /// first occurrence of each coordinate vector.
    pub fn from_vertices<I>(dim: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = IntVertex>,
    {
        let mut vs = VertexSet::new(dim);
        for v in iter {
            vs.push(v)?;
        }
        Ok(vs)
    }

    /// Inserts a vertex; returns its index, or the index of the existing
    /// duplicate.
    pub fn push(&mut self, v: IntVertex) -> Result<usize> {
        if v.dim() != self.dim {
            return Err(Error::domain(format!(
                "vertex of dimension {} pushed into a set of dimension {}",
                v.dim(),
                self.dim
            )));
        }
        if let Some(&i) = self.positions.get(&v) {
            return Ok(i);
        }
        let i = self.vertices.len();
        self.all_zero_one &= v.is_zero_one();
        self.positions.insert(v.clone(), i);
        self.vertices.push(v);
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> &IntVertex {
        &self.vertices[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVertex> {
        self.vertices.iter()
    }

    /// Index of a vertex with exactly these coordinates, if present.
    pub fn position(&self, v: &IntVertex) -> Option<usize> {
        self.positions.get(v).copied()
    }

    pub fn contains(&self, v: &IntVertex) -> bool {
        self.positions.contains_key(v)
    }

    pub fn family_tag(&self) -> Option<&str> {
        self.family_tag.as_deref()
    }

    pub fn set_family_tag(&mut self, tag: impl Into<String>) {
        self.family_tag = Some(tag.into());
    }

    /// True when every vertex is a 0/1 vector. Cached at insertion time so
    /// the per-pair pipeline can query it for free.
    pub fn is_zero_one(&self) -> bool {
        self.all_zero_one
    }

    /// Sorts the vertices lexicographically on their coordinate vectors and
    /// rebuilds the index map. Generators call this so emitted indices are
    /// reproducible across runs.
    pub fn canonicalize(&mut self) {
        self.vertices.sort();
        self.positions = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}
impl Eq for VertexSet {}

/// A linear cost function over vertex coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CostFunction {
    pub weights: Vec<f64>,
}

impl CostFunction {
    pub fn new(weights: Vec<f64>) -> Self {
        CostFunction { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn dot(&self, v: &IntVertex) -> f64 {
        self.weights
            .iter()
            .zip(v.coords())
            .map(|(w, &c)| w * c as f64)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.weights.iter().map(|w| w * w).sum::<f64>().sqrt()
    }

    /// Scales the weights to unit Euclidean norm; no-op on the zero vector.
    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for w in &mut self.weights {
                *w /= n;
            }
        }
    }
}

/// Reads a vertex set from the plain-text format.
///
/// The first non-comment line is `<v> <d>`, followed by `v` lines of `d`
/// space-separated integers. Lines starting with `#` are skipped; a
/// `# family: <tag>` comment sets the family tag. Duplicate rows are
/// collapsed with a warning.
pub fn read_vertices<R: BufRead>(reader: R) -> Result<VertexSet> {
    let mut family_tag: Option<String> = None;
    let mut header: Option<(usize, usize, usize)> = None; // (v, d, line)
    let mut vs: Option<VertexSet> = None;
    let mut rows_read = 0usize;

    for (lineno0, line) in reader.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(tag) = rest.strip_prefix("family:") {
                family_tag = Some(tag.trim().to_string());
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(Error::parse(lineno, "expected header \"<v> <d>\""));
                }
                let v: usize = tokens[0]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "vertex count is not an integer"))?;
                let d: usize = tokens[1]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "dimension is not an integer"))?;
                if d == 0 {
                    return Err(Error::parse(lineno, "dimension must be positive"));
                }
                header = Some((v, d, lineno));
                vs = Some(VertexSet::new(d));
            }
            Some((v, d, _)) => {
                if rows_read == v {
                    return Err(Error::parse(
                        lineno,
                        format!("more than the declared {v} rows"),
                    ));
                }
                if tokens.len() != d {
                    return Err(Error::parse(
                        lineno,
                        format!("expected {d} coordinates, found {}", tokens.len()),
                    ));
                }
                let mut coords = Vec::with_capacity(d);
                for t in &tokens {
                    let c: i64 = t.parse().map_err(|_| {
                        Error::parse(lineno, format!("non-integer token {t:?}"))
                    })?;
                    coords.push(c);
                }
                let set = vs.as_mut().unwrap();
                let before = set.len();
                set.push(IntVertex::new(coords))?;
                if set.len() == before {
                    log::warn!("line {lineno}: duplicate vertex row dropped");
                }
                rows_read += 1;
            }
        }
    }

    let (v, _, header_line) = header.ok_or_else(|| Error::parse(1, "empty vertex file"))?;
    if rows_read != v {
        return Err(Error::parse(
            header_line,
            format!("header declares {v} rows but {rows_read} were found"),
        ));
    }
    let mut vs = vs.unwrap();
    if let Some(tag) = family_tag {
        vs.set_family_tag(tag);
    }
    Ok(vs)
}

pub fn read_vertices_path(path: impl AsRef<Path>) -> Result<VertexSet> {
    read_vertices(BufReader::new(File::open(path)?))
}

/// Writes a vertex set in the plain-text format; inverse of
/// [`read_vertices`] up to deduplication.
pub fn write_vertices<W: Write>(mut writer: W, vs: &VertexSet) -> Result<()> {
    if let Some(tag) = vs.family_tag() {
        writeln!(writer, "# family: {tag}")?;
    }
    writeln!(writer, "{} {}", vs.len(), vs.dim())?;
    for v in vs.iter() {
        let row: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        writeln!(writer, "{}", row.join(" "))?;
    }
    Ok(())
}

pub fn write_vertices_path(path: impl AsRef<Path>, vs: &VertexSet) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_vertices(&mut w, vs)?;
    w.flush()?;
    Ok(())
}
