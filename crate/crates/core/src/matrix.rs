//! Exact linear algebra over `Z` and `Q`.
//!
//! Everything here is fraction-free or plain rational Gaussian elimination —
//! small dense matrices only (the ambient dimension is at most 4, Sylvester
//! matrices stay below ~25×25). The sparse exact rank engine used for
//! truncated Milnor numbers lives in [`crate::milnor`] instead.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
///
/// # Panics
/// Panics if the matrix is not square.
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // Pivot search.
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev; // exact by Bareiss
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square `i64` matrix (computed exactly in big integers).
pub fn det_i64(m: &[Vec<i64>]) -> Int {
    let big: Vec<Vec<Int>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    det_int(&big)
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank_rat(m: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = a[rank][col].clone().recip();
        for v in a[rank][col..].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v = &*v - &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solve `A·x = b` for a rational matrix `A` (any shape).
///
/// Returns `None` if the system is inconsistent. If the solution space is
/// positive-dimensional, free variables are set to zero (callers that need
/// uniqueness must ensure full column rank).
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "right-hand side length mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].clone().recip();
        for v in m[rank][col..=cols].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row[col..=cols].iter_mut().zip(&pivot_row[col..=cols]) {
                    *v = &*v - &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for row in m.iter().skip(rank) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse_rat(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].clone().recip();
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &factor * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Matrix product of integer matrices given as row-major `i64`.
///
/// # Panics
/// Panics on dimension mismatch or entry overflow.
pub fn matmul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    assert!(a.iter().all(|r| r.len() == inner), "dimension mismatch");
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let s: i128 = row
                        .iter()
                        .zip(b)
                        .map(|(&x, brow)| x as i128 * brow[j] as i128)
                        .sum();
                    i64::try_from(s).expect("matrix entry overflow")
                })
                .collect()
        })
        .collect()
}

/// Greatest common divisor of all `k×k` minors of an `n×k` integer matrix
/// (columns are the generators). Zero if the matrix has rank `< k`.
pub fn gcd_of_maximal_minors(cols: &[Vec<i64>]) -> Int {
    let k = cols.len();
    let n = cols.first().map_or(0, Vec::len);
    assert!(cols.iter().all(|c| c.len() == n), "ragged generator list");
    assert!(k <= n, "more generators than ambient dimension");
    let mut g = Int::zero();
    for rows in subsets_of_size(n, k) {
        let minor: Vec<Vec<Int>> = rows
            .iter()
            .map(|&r| cols.iter().map(|c| Int::from(c[r])).collect())
            .collect();
        g = g.gcd(&det_int(&minor));
        if g.is_one() {
            return g;
        }
    }
    g
}

/// All size-`k` subsets of `0..n`, in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut cur, &mut out);
    }
    out
}

/// True if the integer vector is primitive (nonzero, gcd of entries = 1).
pub fn is_primitive(v: &[i64]) -> bool {
    let mut g = Int::zero();
    for &x in v {
        g = g.gcd(&Int::from(x));
    }
    g.is_one()
}

/// Divide an integer vector by the gcd of its entries (returns `None` for zero).
pub fn make_primitive(v: &[i64]) -> Option<Vec<i64>> {
    let mut g: i64 = 0;
    for &x in v {
        g = gcd_i64(g, x);
    }
    if g == 0 {
        return None;
    }
    Some(v.iter().map(|&x| x / g).collect())
}

/// Nonnegative gcd of two `i64`s.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g ≥ 0`.
pub fn ext_gcd_i64(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd_i64(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

/// Complete a primitive integer vector `w` to a unimodular matrix whose
/// **first column** is `w` (so `U · e₁ = w`, `det U = ±1`).
pub fn unimodular_completion(w: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = w.len();
    if !is_primitive(w) {
        return Err(Error::InvalidWeight {
            w: w.to_vec(),
            msg: "unimodular completion needs a primitive vector".into(),
        });
    }
    // Row-reduce w to e₁ with unimodular row operations, tracking them in V.
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut x = w.to_vec();
    for i in 1..n {
        if x[i] == 0 {
            continue;
        }
        let (g, s, t) = ext_gcd_i64(x[0], x[i]);
        let (a, b) = (x[0] / g, x[i] / g);
        // Rows: r0' = s·r0 + t·ri ; ri' = -b·r0 + a·ri  (determinant 1).
        let r0: Vec<i64> = (0..n).map(|j| s * v[0][j] + t * v[i][j]).collect();
        let ri: Vec<i64> = (0..n).map(|j| -b * v[0][j] + a * v[i][j]).collect();
        v[0] = r0;
        v[i] = ri;
        x[0] = g;
        x[i] = 0;
    }
    debug_assert_eq!(x[0].abs(), 1);
    if x[0] == -1 {
        for e in &mut v[0] {
            *e = -*e;
        }
    }
    // U = V⁻¹ (integral because det V = ±1).
    let v_rat: Vec<Vec<Rat>> = v
        .iter()
        .map(|r| r.iter().map(|&e| crate::rat(e)).collect())
        .collect();
    let inv = inverse_rat(&v_rat).expect("unimodular matrix is invertible");
    let u: Vec<Vec<i64>> = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|q| {
                    debug_assert!(q.denom().is_one());
                    i64::try_from(q.numer().clone()).expect("completion entry overflow")
                })
                .collect()
        })
        .collect();
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn determinants() {
        assert_eq!(det_i64(&[vec![2, 1], vec![1, 1]]), Int::from(1));
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), Int::from(-1));
        assert_eq!(
            det_i64(&[vec![2, 1, 0], vec![2, 0, 1], vec![1, 0, 0]]),
            Int::from(1)
        );
        assert_eq!(det_i64(&[vec![1, 2], vec![2, 4]]), Int::from(0));
        // 4×4 with a zero pivot on the way.
        let m = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 1, 1],
            vec![2, 1, 0, 5],
            vec![3, 1, 5, 0],
        ];
        assert_eq!(det_i64(&m), Int::from(-24));
    }

    #[test]
    fn solving_and_inverse() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let x = solve_rat(&a, &[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = inverse_rat(&a).unwrap();
        assert_eq!(inv[0], vec![rat(1), rat(-1)]);
        assert_eq!(inv[1], vec![rat(-1), rat(2)]);
        // Inconsistent system.
        let b = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve_rat(&b, &[rat(1), rat(3)]).is_none());
        assert_eq!(rank_rat(&b), 1);
    }

    #[test]
    fn minor_gcd_and_primitivity() {
        // Columns (2,2,1) and (1,1,1): 2×2 minors are 0, 1, 1 → gcd 1.
        assert_eq!(
            gcd_of_maximal_minors(&[vec![2, 2, 1], vec![1, 1, 1]]),
            Int::from(1)
        );
        // Columns (2,0) and (0,2): single minor 4.
        assert_eq!(gcd_of_maximal_minors(&[vec![2, 0], vec![0, 2]]), Int::from(4));
        assert!(is_primitive(&[2, 2, 1]));
        assert!(!is_primitive(&[2, 4, 2]));
        assert_eq!(make_primitive(&[2, 4, 2]), Some(vec![1, 2, 1]));
        assert_eq!(make_primitive(&[0, 0]), None);
    }

    #[test]
    fn unimodular_completion_has_w_as_first_column() {
        for w in [
            vec![2, 2, 1],
            vec![1, 1, 1],
            vec![3, 2],
            vec![1, 0, 0, 0],
            vec![6, 10, 15],
            vec![0, 0, 1],
        ] {
            let u = unimodular_completion(&w).unwrap();
            let n = w.len();
            for (i, row) in u.iter().enumerate() {
                assert_eq!(row[0], w[i], "first column must be w");
                assert_eq!(row.len(), n);
            }
            let d = det_i64(&u);
            assert!(d == Int::from(1) || d == Int::from(-1), "det must be ±1");
        }
        assert!(unimodular_completion(&[2, 4]).is_err());
    }

    #[test]
    fn subsets() {
        assert_eq!(subsets_of_size(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets_of_size(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets_of_size(2, 3).is_empty());
    }
}
