use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{hermite_normal_form, IntMatrix};
use super::{common_denominator, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Rational,
    Integer,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..m[i].len() {
                    let delta = &factor * &m[row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    let mut work = m.to_vec();
    rref(&mut work, cols).len()
}

/// Basis of `{x : Mx = 0}` for an `rows × cols` matrix (`rows` may be zero).
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `Mx = b` over the requested domain; free variables are set to zero
/// in the rational case. Returns `None` for inconsistent systems.
pub fn solve_linear(m: &[Vec<Rational>], b: &[Rational], domain: Domain) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    if m.len() != b.len() {
        return None;
    }
    match domain {
        Domain::Rational => solve_rational(m, b, cols),
        Domain::Integer => solve_integer(m, b, cols),
    }
}

fn solve_rational(m: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

fn solve_integer(m: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    if cols == 0 {
        return b.iter().all(Zero::is_zero).then(Vec::new);
    }
    // clear denominators row by row
    let mut rows = Vec::with_capacity(m.len());
    let mut rhs = Vec::with_capacity(m.len());
    for (row, bi) in m.iter().zip(b) {
        let mut all = row.clone();
        all.push(bi.clone());
        let l = common_denominator(&all);
        rows.push(row.iter().map(|x| (x * &l).to_integer()).collect::<Vec<BigInt>>());
        rhs.push((bi * &l).to_integer());
    }
    if rows.iter().all(|r| r.iter().all(Zero::is_zero)) {
        return rhs.iter().all(Zero::is_zero).then(|| vec![Rational::zero(); cols]);
    }
    let mut mat = IntMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            mat.set(i, j, x.clone());
        }
    }
    let hnf = hermite_normal_form(&mat).ok()?;
    // forward substitution on H y = rhs
    let mut y = vec![BigInt::zero(); cols];
    let mut solved = 0usize;
    for i in 0..mat.rows() {
        let partial: BigInt = (0..solved).map(|j| hnf.h.get(i, j) * &y[j]).sum();
        let residual = &rhs[i] - partial;
        if hnf.pivots.get(solved).map(|&(r, _)| r) == Some(i) {
            let pivot = hnf.h.get(i, solved);
            if !(&residual % pivot).is_zero() {
                return None;
            }
            y[solved] = residual / pivot;
            solved += 1;
        } else if !residual.is_zero() {
            return None;
        }
    }
    let x = (0..cols)
        .map(|i| {
            let v: BigInt = (0..cols).map(|j| hnf.u.get(i, j) * &y[j]).sum();
            Rational::from_integer(v)
        })
        .collect();
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn gorenstein_section_of_example_map() {
        let m = rows(&[&[3, -1], &[0, 1]]);
        let x = solve_linear(&m, &[int(-1), int(-1)], Domain::Rational).unwrap();
        assert_eq!(x, vec![rat(-2, 3), int(-1)]);
    }

    #[test]
    fn integer_solution_absent() {
        let m = rows(&[&[3, -1], &[0, 1]]);
        assert_eq!(solve_linear(&m, &[int(1), int(1)], Domain::Integer), None);
        let x = solve_linear(&m, &[int(2), int(1)], Domain::Integer).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
    }

    #[test]
    fn identity_zero_rhs() {
        let m = rows(&[&[1, 0], &[0, 1]]);
        for domain in [Domain::Rational, Domain::Integer] {
            assert_eq!(
                solve_linear(&m, &[int(0), int(0)], domain).unwrap(),
                vec![int(0), int(0)]
            );
        }
    }

    #[test]
    fn inconsistent_system() {
        let m = rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve_linear(&m, &[int(1), int(3)], Domain::Rational), None);
        assert_eq!(solve_linear(&m, &[int(1), int(3)], Domain::Integer), None);
    }

    #[test]
    fn underdetermined_integer_system() {
        // 2x + 3y = 1 has integer solutions although neither coefficient is a unit
        let m = rows(&[&[2, 3]]);
        let x = solve_linear(&m, &[int(1)], Domain::Integer).unwrap();
        assert_eq!(int(2) * &x[0] + int(3) * &x[1], int(1));
        let m = rows(&[&[2, 4]]);
        assert_eq!(solve_linear(&m, &[int(1)], Domain::Integer), None);
    }

    #[test]
    fn rational_coefficients_in_integer_domain() {
        let m = vec![vec![rat(1, 2), rat(1, 3)]];
        let x = solve_linear(&m, &[rat(5, 6)], Domain::Integer).unwrap();
        assert_eq!(rat(1, 2) * &x[0] + rat(1, 3) * &x[1], rat(5, 6));
        assert!(x.iter().all(|v| v.is_integer()));
    }

    #[test]
    fn nullspace_and_rank() {
        let m = rows(&[&[1, 1, 1], &[0, 1, 2]]);
        assert_eq!(rank(&m, 3), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns, vec![vec![int(1), int(-2), int(1)]]);
        assert_eq!(nullspace(&[], 1), vec![vec![int(1)]]);
    }
}
