//! Small exact linear-algebra helpers: integer matrix rank via fraction-free
//! elimination and exact dot products of dyadic (f64) weights with integer
//! vertices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};

use crate::vertex::VertexSet;

/// Rank of an integer matrix, computed with Bareiss fraction-free
/// elimination over BigInt (no overflow, exact).
pub fn integer_rank(rows: Vec<Vec<i64>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        // Pivot search.
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for i in (row + 1)..m.len() {
            for j in (col + 1)..cols {
                let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

/// Affine dimension of a vertex set: rank of the differences to the first
/// vertex.
pub fn affine_dim(vs: &VertexSet) -> usize {
    if vs.len() <= 1 {
        return 0;
    }
    let base = vs.get(0).coords();
    let rows = (1..vs.len())
        .map(|i| {
            vs.get(i)
                .coords()
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    integer_rank(rows)
}

/// Exact BigRational value of a finite f64.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Exact rationalization of a float weight vector.
pub fn rationalize(weights: &[f64]) -> Vec<BigRational> {
    weights.iter().map(|&w| rational_from_f64(w)).collect()
}

/// Exact dot product of rational weights with integer coordinates.
pub fn dot_rational(weights: &[BigRational], coords: &[i64]) -> BigRational {
    weights
        .iter()
        .zip(coords)
        .map(|(w, &c)| w * BigRational::from_integer(BigInt::from(c)))
        .sum()
}

/// Projects rational weights onto the orthogonal complement of the integer
/// direction `delta`: w − (⟨w,δ⟩/⟨δ,δ⟩)·δ. Returns `None` for δ = 0.
pub fn project_orthogonal(
    weights: &[BigRational],
    delta: &[i64],
) -> Option<Vec<BigRational>> {
    let den: i64 = delta.iter().map(|d| d * d).sum();
    if den == 0 {
        return None;
    }
    let num = dot_rational(weights, delta);
    let factor = num / BigRational::from_integer(BigInt::from(den));
    Some(
        weights
            .iter()
            .zip(delta)
            .map(|(w, &d)| w - &factor * BigRational::from_integer(BigInt::from(d)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::IntVertex;

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        assert_eq!(
            integer_rank(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            3
        );
        assert_eq!(integer_rank(vec![vec![1, 2], vec![2, 4], vec![3, 6]]), 1);
        assert_eq!(integer_rank(vec![vec![0, 0]]), 0);
    }

    #[test]
    fn affine_dim_of_a_square_is_two() {
        let vs = crate::families::cube_vertices(2).unwrap();
        assert_eq!(affine_dim(&vs), 2);
        let seg = crate::families::cube_vertices(1).unwrap();
        assert_eq!(affine_dim(&seg), 1);
    }

    #[test]
    fn exact_projection_is_orthogonal() {
        let w = rationalize(&[0.25, -1.5, 3.0]);
        let delta = [1i64, 2, -1];
        let p = project_orthogonal(&w, &delta).unwrap();
        assert!(dot_rational(&p, &delta).is_zero());
        // The projection moves w by (⟨w,δ⟩/⟨δ,δ⟩)·δ, nothing else.
        let v = IntVertex::new(vec![5, -2, 7]);
        let shift = dot_rational(&w, v.coords()) - dot_rational(&p, v.coords());
        let delta_dot_v: i64 = delta.iter().zip(v.coords()).map(|(d, c)| d * c).sum();
        let expected = dot_rational(&w, &delta)
            * BigRational::new(delta_dot_v.into(), 6.into());
        assert_eq!(shift, expected);
    }

    #[test]
    fn zero_delta_is_rejected() {
        let w = rationalize(&[1.0]);
        assert!(project_orthogonal(&w, &[0]).is_none());
    }
}
