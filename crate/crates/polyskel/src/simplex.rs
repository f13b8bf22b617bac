//! Exact feasibility of `A x = b, x >= 0` over arbitrary-precision
//! rationals: a dense phase-1 simplex with Bland's rule, which terminates on
//! every input. Infeasible systems yield a Farkas certificate.

use num::rational::BigRational;
use num::traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Outcome of a feasibility run.
pub enum Feasibility {
    /// A solution `x >= 0` with `A x = b`, one value per column.
    Feasible(Vec<Rational>),
    /// A row vector `y` with `yᵀA <= 0` (column-wise) and `yᵀb > 0`.
    Infeasible(Vec<Rational>),
}

/// Decides whether `A x = b` admits `x >= 0`, where `columns[j]` is the
/// j-th column of A.
pub fn feasibility(columns: &[Vec<Rational>], rhs: &[Rational]) -> Result<Feasibility> {
    let m = rhs.len();
    let n = columns.len();
    for (j, col) in columns.iter().enumerate() {
        if col.len() != m {
            return Err(Error::domain(format!(
                "column {j} has {} rows, expected {m}",
                col.len()
            )));
        }
    }

    // Tableau T with one artificial per row; columns 0..n structural,
    // n..n+m artificial, last column the rhs. Rows are flipped so b >= 0.
    let mut flipped = vec![false; m];
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = rhs[i] < Rational::zero();
        flipped[i] = flip;
        let mut row = Vec::with_capacity(width);
        for col in columns {
            row.push(if flip { -col[i].clone() } else { col[i].clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            });
        }
        row.push(if flip { -rhs[i].clone() } else { rhs[i].clone() });
        t.push(row);
    }

    // Phase-1 objective: minimize the sum of artificials. With the
    // artificial basis the reduced-cost row is the negated column sums for
    // structural columns and zero for artificials; `obj[width-1]` carries
    // the negated objective value.
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for (o, v) in obj.iter_mut().zip(row.iter()) {
            *o -= v;
        }
    }
    for k in 0..m {
        obj[n + k] = Rational::zero();
    }

    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut guard = 0u64;
    loop {
        guard += 1;
        if guard > 50_000_000 {
            return Err(Error::Numeric("simplex iteration guard tripped".into()));
        }
        // Bland: entering column is the lowest index with negative reduced
        // cost.
        let entering = (0..n + m).find(|&j| obj[j] < Rational::zero());
        let Some(e) = entering else {
            break;
        };
        // Ratio test, ties broken on the smallest basic variable (Bland).
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][e] > Rational::zero() {
                let ratio = &t[i][width - 1] / &t[i][e];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((l, _)) = leave else {
            // Phase-1 objective is bounded below by zero, so an unbounded
            // ray cannot occur; reaching here means the tableau is broken.
            return Err(Error::Numeric("phase-1 simplex claims unboundedness".into()));
        };
        pivot(&mut t, &mut obj, l, e, width);
        basis[l] = e;
    }

    // obj[width-1] holds the negated optimal value.
    let optimum = -obj[width - 1].clone();
    debug_assert!(optimum >= Rational::zero());
    if optimum.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = t[i][width - 1].clone();
            }
            // A basic artificial at optimum zero has value zero; the
            // structural solution stands either way.
        }
        Ok(Feasibility::Feasible(x))
    } else {
        // Duals from the artificial reduced costs: r_{a_i} = 1 - y_i. Flip
        // back the rows that were negated.
        let one = Rational::from_integer(1.into());
        let y = (0..m)
            .map(|i| {
                let yi = &one - &obj[n + i];
                if flipped[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        Ok(Feasibility::Infeasible(y))
    }
}

fn pivot(t: &mut [Vec<Rational>], obj: &mut [Rational], l: usize, e: usize, width: usize) {
    let p = t[l][e].clone();
    for v in t[l].iter_mut() {
        *v /= &p;
    }
    for i in 0..t.len() {
        if i == l {
            continue;
        }
        if !t[i][e].is_zero() {
            let factor = t[i][e].clone();
            for j in 0..width {
                let delta = &factor * &t[l][j];
                t[i][j] -= delta;
            }
        }
    }
    if !obj[e].is_zero() {
        let factor = obj[e].clone();
        for j in 0..width {
            let delta = &factor * &t[l][j];
            obj[j] -= delta;
        }
    }
}
