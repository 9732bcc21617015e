//! Fraction-free (Bareiss) solution of linear systems over Z[v].
//!
//! Overdetermined systems are handled by picking a square subsystem whose
//! rows are independent at a random-looking specialization of `v` modulo a
//! large prime, solving it exactly, and then checking every original row.

use num_bigint::BigInt;

use super::modgcd::{primes, reduce};
use super::upoly::Poly;
use crate::error::{Error, Result};

pub type ZVPoly = Poly<BigInt>;

/// Solution `x_j = numerators[j] / det`, with `det != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FfSolution {
    pub numerators: Vec<ZVPoly>,
    pub det: ZVPoly,
}

fn eval_mod(p: &ZVPoly, v0: u64, m: u64) -> u64 {
    p.coeffs().iter().rev().fold(0u64, |acc, c| {
        ((acc as u128 * v0 as u128 + reduce(c, m) as u128) % m as u128) as u64
    })
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = a as u128;
    let mut e = m - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// Greedy row selection over F_m. Returns the indices of rows forming a
/// basis of the row space (in input order) of the matrix whose rows are
/// given, with `width` columns.
fn independent_rows(rows: &[Vec<u64>], width: usize, m: u64) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new(); // (pivot column, reduced row)
    let mut chosen = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let mut w = row.clone();
        for (pc, b) in &basis {
            let f = w[*pc];
            if f != 0 {
                for j in 0..width {
                    w[j] = ((w[j] as u128 + (m - f) as u128 * b[j] as u128) % m as u128) as u64;
                }
            }
        }
        if let Some(pc) = (0..width).find(|&j| w[j] != 0) {
            let inv = inv_mod(w[pc], m);
            for x in w.iter_mut() {
                *x = (*x as u128 * inv as u128 % m as u128) as u64;
            }
            basis.push((pc, w));
            chosen.push(r);
            if chosen.len() == width {
                break;
            }
        }
    }
    chosen
}

/// Solves `A x = b` over Q(v) where `A` has `ncols` columns and any number
/// of rows, all entries in Z[v]. Errors with `Inconsistent` when no solution
/// exists and `Underdetermined` when the solution is not unique.
pub fn solve_fraction_free(a: &[Vec<ZVPoly>], b: &[ZVPoly], ncols: usize) -> Result<FfSolution> {
    assert_eq!(a.len(), b.len());
    if ncols == 0 {
        return if b.iter().all(|x| x.is_zero()) {
            Ok(FfSolution { numerators: Vec::new(), det: Poly::constant(1.into()) })
        } else {
            Err(Error::Inconsistent)
        };
    }
    let m = primes()[7];
    let mut best: Vec<usize> = Vec::new();
    let mut aug_rank = 0;
    for &v0 in &[1_234_567u64, 98_765_431, 55_555_333, 7_777_771] {
        let rows: Vec<Vec<u64>> = a
            .iter()
            .map(|row| row.iter().map(|e| eval_mod(e, v0, m)).collect())
            .collect();
        let chosen = independent_rows(&rows, ncols, m);
        if chosen.len() > best.len() {
            best = chosen;
        }
        if best.len() == ncols {
            break;
        }
        let aug: Vec<Vec<u64>> = rows
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(eval_mod(bi, v0, m));
                r
            })
            .collect();
        aug_rank = aug_rank.max(independent_rows(&aug, ncols + 1, m).len());
    }
    if best.len() < ncols {
        if aug_rank > best.len() {
            return Err(Error::Inconsistent);
        }
        return Err(Error::Underdetermined { nullity: ncols - best.len() });
    }

    let n = ncols;
    let mut mat: Vec<Vec<ZVPoly>> = best.iter().map(|&r| a[r].clone()).collect();
    let mut rhs: Vec<ZVPoly> = best.iter().map(|&r| b[r].clone()).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    let mut prev: ZVPoly = Poly::constant(1.into());

    for k in 0..n {
        // Lowest-degree nonzero pivot; ties by column index, then row.
        let mut pick: Option<(i64, usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                let e = &mat[i][j];
                if e.is_zero() {
                    continue;
                }
                let key = (e.deg(), j, i);
                if pick.is_none_or(|p| key < p) {
                    pick = Some(key);
                }
            }
        }
        let Some((_, pj, pi)) = pick else {
            return Err(Error::Underdetermined { nullity: n - k });
        };
        mat.swap(k, pi);
        rhs.swap(k, pi);
        if pj != k {
            for row in mat.iter_mut() {
                row.swap(k, pj);
            }
            col_perm.swap(k, pj);
        }
        let pivot = mat[k][k].clone();
        for i in k + 1..n {
            let factor = mat[i][k].clone();
            for j in k + 1..n {
                let t = &(&pivot * &mat[i][j]) - &(&factor * &mat[k][j]);
                mat[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            let t = &(&pivot * &rhs[i]) - &(&factor * &rhs[k]);
            rhs[i] = t.exact_div(&prev).expect("Bareiss division is exact");
            mat[i][k] = Poly::zero();
        }
        prev = pivot;
    }
    let det = mat[n - 1][n - 1].clone();

    let mut num = vec![Poly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &rhs[i];
        for j in i + 1..n {
            acc = &acc - &(&mat[i][j] * &num[j]);
        }
        num[i] = acc.exact_div(&mat[i][i]).expect("Cramer numerators are polynomials");
    }
    let mut numerators = vec![Poly::zero(); n];
    for (k, &c) in col_perm.iter().enumerate() {
        numerators[c] = num[k].clone();
    }

    for (row, bi) in a.iter().zip(b) {
        let mut lhs: ZVPoly = Poly::zero();
        for (e, x) in row.iter().zip(&numerators) {
            if !e.is_zero() && !x.is_zero() {
                lhs = &lhs + &(e * x);
            }
        }
        if lhs != bi * &det {
            return Err(Error::Inconsistent);
        }
    }
    Ok(FfSolution { numerators, det })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZVPoly {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn solves_polynomial_system() {
        // (1+v) x0 + x1 = 2 + v ; x0 - v x1 = 1 - v  =>  x0 = 1, x1 = 1
        let a = vec![vec![z(&[1, 1]), z(&[1])], vec![z(&[1]), z(&[0, -1])]];
        let b = vec![z(&[2, 1]), z(&[1, -1])];
        let s = solve_fraction_free(&a, &b, 2).unwrap();
        for x in &s.numerators {
            assert_eq!(x, &s.det);
        }
    }

    #[test]
    fn overdetermined_consistent_and_inconsistent() {
        let a = vec![vec![z(&[1])], vec![z(&[0, 1])], vec![z(&[2])]];
        let b = vec![z(&[3]), z(&[0, 3]), z(&[6])];
        let s = solve_fraction_free(&a, &b, 1).unwrap();
        assert_eq!(s.numerators[0], &s.det * &z(&[3]));
        let bad = vec![z(&[3]), z(&[0, 3]), z(&[7])];
        assert_eq!(solve_fraction_free(&a, &bad, 1), Err(Error::Inconsistent));
    }

    #[test]
    fn rank_deficiency_reports_nullity() {
        let a = vec![vec![z(&[1]), z(&[1])], vec![z(&[2]), z(&[2])]];
        let b = vec![z(&[1]), z(&[2])];
        assert_eq!(solve_fraction_free(&a, &b, 2), Err(Error::Underdetermined { nullity: 1 }));
    }
}
