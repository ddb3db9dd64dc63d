//! Exact dense linear algebra over the rationals.
//!
//! Rows are cleared to integers and eliminated with fraction-free
//! (Bareiss-style) reduction, which keeps every intermediate value an exact
//! integer bounded by a minor of the input. Pivoting takes the first nonzero
//! entry in column order; exactness makes numerical pivoting irrelevant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{Poly, Rat};
use crate::error::LinSolveError;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Clear denominators row by row into integer rows.
    fn integer_rows(&self, extra: Option<&[Rat]>) -> Vec<Vec<BigInt>> {
        assert!(extra.is_none_or(|e| e.len() == self.rows));
        (0..self.rows)
            .map(|i| {
                let mut all: Vec<Rat> = self.row(i).to_vec();
                if let Some(e) = extra {
                    all.push(e[i].clone());
                }
                let mut den = BigInt::one();
                for v in &all {
                    den = den.lcm(v.denom());
                }
                all.iter().map(|v| v.numer() * &den / v.denom()).collect()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

/// Row echelon form of an integer matrix by one-step Bareiss elimination.
/// Returns the pivot columns (one per nonzero row of the echelon form).
pub fn int_echelon(mat: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        // Sylvester's identity makes every division below exact.
        let exact_div = |v: BigInt, d: &BigInt| {
            debug_assert!((&v % d).is_zero(), "inexact fraction-free division");
            v / d
        };
        for i in r + 1..rows {
            if mat[i][c].is_zero() {
                // Still renormalize by the Bareiss division to keep growth bounded.
                for j in c..cols {
                    if !mat[i][j].is_zero() {
                        let v = &mat[r][c] * &mat[i][j];
                        mat[i][j] = exact_div(v, &prev);
                    }
                }
                continue;
            }
            for j in (c..cols).rev() {
                let v = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                mat[i][j] = exact_div(v, &prev);
            }
        }
        prev = mat[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of an integer matrix.
pub fn int_rank(mut mat: Vec<Vec<BigInt>>) -> usize {
    int_echelon(&mut mat).len()
}

/// Exact kernel basis of an integer matrix, as rational vectors.
pub fn int_nullspace(mut mat: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<Rat>> {
    let pivots = int_echelon(&mut mat);
    nullspace_from_echelon(&mat, cols, &pivots)
}

fn nullspace_from_echelon(mat: &[Vec<BigInt>], cols: usize, pivots: &[usize]) -> Vec<Vec<Rat>> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Rat::zero(); cols];
        v[fc] = Rat::one();
        // Back-substitute the pivot rows from the bottom up.
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rat::zero();
            for c in pc + 1..cols {
                if !mat[ri][c].is_zero() && !v[c].is_zero() {
                    acc += &(&Rat::from(mat[ri][c].clone()) * &v[c]);
                }
            }
            v[pc] = -&(&acc / &Rat::from(mat[ri][pc].clone()));
        }
        basis.push(v);
    }
    basis
}

/// Solve `M x = rhs` exactly. Non-square and rank-deficient systems are
/// allowed: returns a particular solution with free variables set to zero,
/// or `None` if the system is inconsistent.
pub fn solve_linear(m: &RatMatrix, rhs: &[Rat]) -> Result<Option<Vec<Rat>>, LinSolveError> {
    if rhs.len() != m.rows {
        return Err(LinSolveError::DimensionMismatch {
            rows: m.rows,
            cols: m.cols,
            rhs: rhs.len(),
        });
    }
    let mut aug = m.integer_rows(Some(rhs));
    let pivots = int_echelon(&mut aug);
    // A pivot in the rhs column marks an inconsistent row.
    if pivots.last().is_some_and(|&c| c == m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); m.cols];
    for (ri, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = Rat::from(aug[ri][m.cols].clone());
        for c in pc + 1..m.cols {
            if !aug[ri][c].is_zero() && !x[c].is_zero() {
                acc -= &(&Rat::from(aug[ri][c].clone()) * &x[c]);
            }
        }
        x[pc] = &acc / &Rat::from(aug[ri][pc].clone());
    }
    Ok(Some(x))
}

/// Exact kernel basis; empty exactly when the kernel is trivial.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rat>> {
    int_nullspace(m.integer_rows(None), m.cols)
}

pub fn rank(m: &RatMatrix) -> usize {
    int_rank(m.integer_rows(None))
}

fn squared_linear(a: &Rat) -> Poly {
    // (x + a y)^2
    let x = Poly::var(0, 2);
    let y = Poly::var(1, 2);
    let form = x.checked_add(&y.scale(a)).expect("same nvars");
    form.pow(2)
}

/// Find the unique `(A, B, C)` with
/// `A (x+ay)^2 + B (x+by)^2 + C (x+cy)^2 = D (x+dy)^2`,
/// certified by polynomial expansion before it is returned.
pub fn solve_quadratic_dependence(
    a: &Rat,
    b: &Rat,
    c: &Rat,
    d: &Rat,
    big_d: &Rat,
) -> Result<(Rat, Rat, Rat), LinSolveError> {
    if a == b || a == c || b == c {
        return Err(LinSolveError::NonDistinctParameters);
    }
    let two = Rat::from_int(2);
    let m = RatMatrix::from_rows(vec![
        vec![Rat::one(), Rat::one(), Rat::one()],
        vec![&two * a, &two * b, &two * c],
        vec![a * a, b * b, c * c],
    ]);
    let rhs = vec![big_d.clone(), &(&two * d) * big_d, &(d * d) * big_d];
    let sol = solve_linear(&m, &rhs)?.ok_or(LinSolveError::CertificationFailed)?;
    let (ca, cb, cc) = (sol[0].clone(), sol[1].clone(), sol[2].clone());
    let lhs = squared_linear(a)
        .scale(&ca)
        .checked_add(&squared_linear(b).scale(&cb))
        .and_then(|t| t.checked_add(&squared_linear(c).scale(&cc)))
        .expect("same nvars");
    if lhs != squared_linear(d).scale(big_d) {
        return Err(LinSolveError::CertificationFailed);
    }
    Ok((ca, cb, cc))
}

/// Find the unique `(A1, A2, B1, B2)` with
/// `(A1 x + A2 y)(x+ay)^2 + (B1 x + B2 y)(x+by)^2 = (C1 x + C2 y)(x+cy)^2`,
/// certified by polynomial expansion before it is returned.
pub fn solve_cubic_split(
    a: &Rat,
    b: &Rat,
    c: &Rat,
    c1: &Rat,
    c2: &Rat,
) -> Result<(Rat, Rat, Rat, Rat), LinSolveError> {
    if a == b {
        return Err(LinSolveError::NonDistinctParameters);
    }
    let two = Rat::from_int(2);
    let m = RatMatrix::from_rows(vec![
        vec![Rat::one(), Rat::zero(), Rat::one(), Rat::zero()],
        vec![&two * a, Rat::one(), &two * b, Rat::one()],
        vec![a * a, &two * a, b * b, &two * b],
        vec![Rat::zero(), a * a, Rat::zero(), b * b],
    ]);
    let rhs = vec![
        c1.clone(),
        &(&(&two * c) * c1) + c2,
        &(&(c * c) * c1) + &(&(&two * c) * c2),
        &(c * c) * c2,
    ];
    let sol = solve_linear(&m, &rhs)?.ok_or(LinSolveError::CertificationFailed)?;
    let (a1, a2, b1, b2) = (
        sol[0].clone(),
        sol[1].clone(),
        sol[2].clone(),
        sol[3].clone(),
    );
    let lin = |u: &Rat, v: &Rat| {
        Poly::var(0, 2)
            .scale(u)
            .checked_add(&Poly::var(1, 2).scale(v))
            .expect("same nvars")
    };
    let lhs = lin(&a1, &a2)
        .checked_mul(&squared_linear(a))
        .and_then(|t| t.checked_add(&lin(&b1, &b2).checked_mul(&squared_linear(b))?))
        .expect("same nvars");
    let rhs_poly = lin(c1, c2)
        .checked_mul(&squared_linear(c))
        .expect("same nvars");
    if lhs != rhs_poly {
        return Err(LinSolveError::CertificationFailed);
    }
    Ok((a1, a2, b1, b2))
}
