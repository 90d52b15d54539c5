//! Smith normal form of integer matrices, with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::Mat;
use super::AbelianInvariants;

/// `u * a * v = d` with `d` diagonal, nonnegative, each entry dividing the
/// next, and `u`, `v` unimodular.
#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub u: Mat<BigInt>,
    pub v: Mat<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Torsion coefficients (> 1) in divisibility order plus the free rank of
    /// the cokernel of a matrix with `cols` columns.
    pub fn cokernel_invariants(&self, cols: usize) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: cols - self.rank(),
            torsion: self
                .diagonal
                .iter()
                .filter(|d| !d.is_zero() && **d != BigInt::from(1))
                .cloned()
                .collect(),
        }
    }
}

/// Diagonalize by unimodular row/column operations, pivoting on the smallest
/// nonzero entry until the pivot divides everything it clears.
pub fn smith_normal_form(a: &Mat<BigInt>) -> SmithForm {
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut m = a.clone();
    let mut u = Mat::identity(rows, &BigInt::zero());
    let mut v = Mat::identity(cols, &BigInt::zero());
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            // re-pivot on the smallest entry each round: it shrinks toward
            // the gcd of the submatrix and keeps the quotients (hence the
            // fill-in) small
            let Some((pi, pj)) = min_abs_pivot(&m, t) else {
                break;
            };
            swap_rows(&mut m, &mut u, t, pi);
            swap_cols(&mut m, &mut v, t, pj);

            // one nearest-division pass over column t and row t; leftover
            // remainders are at most half the pivot and get picked up by the
            // next re-pivot
            let mut remainder = false;
            for i in t + 1..rows {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[(i, t)], &m[(t, t)]);
                row_sub(&mut m, &mut u, i, t, &q);
                remainder |= !m[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[(t, j)], &m[(t, t)]);
                col_sub(&mut m, &mut v, j, t, &q);
                remainder |= !m[(t, j)].is_zero();
            }
            if remainder {
                continue;
            }
            // pivot must divide the rest of the submatrix
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[(i, j)].mod_floor(&m[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    // fold the offending row into row t; re-clearing shrinks
                    // the pivot to a proper divisor
                    row_add(&mut m, &mut u, t, i);
                }
                None => break,
            }
        }
        if m[(t, t)].is_negative() {
            negate_row(&mut m, &mut u, t);
        }
    }

    let diagonal: Vec<BigInt> = (0..steps).map(|t| m[(t, t)].clone()).collect();
    SmithForm { diagonal, u, v }
}

fn min_abs_pivot(m: &Mat<BigInt>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.nrows() {
        for j in t..m.ncols() {
            if m[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if m[(i, j)].abs() < m[b].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Quotient rounded to nearest, so remainders have at most half the pivot.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(m: &mut Mat<BigInt>, u: &mut Mat<BigInt>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.ncols() {
        let x = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = x;
    }
    for j in 0..u.ncols() {
        let x = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = x;
    }
}

fn swap_cols(m: &mut Mat<BigInt>, v: &mut Mat<BigInt>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let x = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = x;
    }
    for i in 0..v.nrows() {
        let x = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = x;
    }
}

/// row_i -= q * row_t
fn row_sub(m: &mut Mat<BigInt>, u: &mut Mat<BigInt>, i: usize, t: usize, q: &BigInt) {
    for j in 0..m.ncols() {
        let d = q * &m[(t, j)];
        m[(i, j)] = &m[(i, j)] - d;
    }
    for j in 0..u.ncols() {
        let d = q * &u[(t, j)];
        u[(i, j)] = &u[(i, j)] - d;
    }
}

/// row_t += row_i
fn row_add(m: &mut Mat<BigInt>, u: &mut Mat<BigInt>, t: usize, i: usize) {
    for j in 0..m.ncols() {
        let d = m[(i, j)].clone();
        m[(t, j)] = &m[(t, j)] + d;
    }
    for j in 0..u.ncols() {
        let d = u[(i, j)].clone();
        u[(t, j)] = &u[(t, j)] + d;
    }
}

/// col_j -= q * col_t
fn col_sub(m: &mut Mat<BigInt>, v: &mut Mat<BigInt>, j: usize, t: usize, q: &BigInt) {
    for i in 0..m.nrows() {
        let d = q * &m[(i, t)];
        m[(i, j)] = &m[(i, j)] - d;
    }
    for i in 0..v.nrows() {
        let d = q * &v[(i, t)];
        v[(i, j)] = &v[(i, j)] - d;
    }
}

fn negate_row(m: &mut Mat<BigInt>, u: &mut Mat<BigInt>, t: usize) {
    for j in 0..m.ncols() {
        m[(t, j)] = -m[(t, j)].clone();
    }
    for j in 0..u.ncols() {
        u[(t, j)] = -u[(t, j)].clone();
    }
}

/// Check `u * a * v == diag` exactly; used by tests and the self-test.
pub fn verify_smith(a: &Mat<BigInt>, s: &SmithForm) -> bool {
    let prod = s.u.mul(a).mul(&s.v);
    for i in 0..prod.nrows() {
        for j in 0..prod.ncols() {
            let expect = if i == j && i < s.diagonal.len() {
                s.diagonal[i].clone()
            } else {
                BigInt::zero()
            };
            if prod[(i, j)] != expect {
                return false;
            }
        }
    }
    // divisibility chain
    for w in s.diagonal.windows(2) {
        if !w[0].is_zero() && !w[1].mod_floor(&w[0]).is_zero() {
            return false;
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
    }
    // unimodularity
    let du = s.u.bareiss_determinant().unwrap();
    let dv = s.v.bareiss_determinant().unwrap();
    du.abs() == BigInt::from(1) && dv.abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_mat(rows: Vec<Vec<i64>>) -> Mat<BigInt> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn diag_of(m: Mat<BigInt>) -> Vec<i64> {
        let s = smith_normal_form(&m);
        assert!(verify_smith(&m, &s));
        s.diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn coprime_diagonal() {
        assert_eq!(diag_of(int_mat(vec![vec![2, 0], vec![0, 3]])), vec![1, 6]);
    }

    #[test]
    fn rank_one() {
        assert_eq!(diag_of(int_mat(vec![vec![1, 0], vec![0, 0]])), vec![1, 0]);
    }

    #[test]
    fn derived_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        assert_eq!(diag_of(int_mat(vec![vec![2, 4], vec![6, 8]])), vec![2, 4]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(diag_of(int_mat(vec![vec![2, 4, 4]])), vec![2]);
        assert_eq!(
            diag_of(int_mat(vec![vec![0, 0], vec![0, 0], vec![0, 0]])),
            vec![0, 0]
        );
    }

    #[test]
    fn permutation_invariance_of_diagonal() {
        let a = int_mat(vec![vec![6, 4], vec![2, 8]]);
        let b = int_mat(vec![vec![2, 8], vec![6, 4]]);
        let c = int_mat(vec![vec![4, 6], vec![8, 2]]);
        let d = |m: &Mat<BigInt>| smith_normal_form(m).diagonal;
        assert_eq!(d(&a), d(&b));
        assert_eq!(d(&a), d(&c));
    }

    #[test]
    fn dense_8x8_stays_fast() {
        // regression: first-remainder pivoting used to blow entries up to
        // millions of bits here; global re-pivoting keeps them tiny
        let mut seed = 0x0123_4567_89AB_CDEFu64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 41) as i64 - 20
        };
        let m = int_mat((0..8).map(|_| (0..8).map(|_| next()).collect()).collect());
        let s = smith_normal_form(&m);
        assert!(verify_smith(&m, &s));
        assert_eq!(
            s.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            ["1", "1", "1", "1", "1", "1", "3", "3256210428"]
        );
    }

    #[test]
    fn random_reconstruction() {
        let mut seed = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 21) as i64 - 10
        };
        for _ in 0..60 {
            let r = 1 + (next().unsigned_abs() as usize % 4);
            let c = 1 + (next().unsigned_abs() as usize % 4);
            let m = int_mat((0..r).map(|_| (0..c).map(|_| next()).collect()).collect());
            let s = smith_normal_form(&m);
            assert!(verify_smith(&m, &s), "failed on {m:?}");
        }
    }
}
