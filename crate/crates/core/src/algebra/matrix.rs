//! Dense matrices over any [`RingOps`] coefficient ring, with fraction-free
//! (Bareiss) determinants and minor enumeration.

use super::{AlgebraError, RingOps};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RingOps> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "matrix must be nonempty");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        assert!(rows > 0 && cols > 0);
        Mat {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn identity(n: usize, exemplar: &T) -> Self {
        let mut m = Mat::filled(n, n, exemplar.zero_like());
        for i in 0..n {
            m[(i, i)] = exemplar.one_like();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let z = self.data[0].zero_like();
        let mut out = Mat::filled(self.rows, rhs.cols, z);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = out[(i, j)].clone();
                for k in 0..self.cols {
                    acc = acc.ring_add(&self[(i, k)].ring_mul(&rhs[(k, j)]));
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.ring_sub(b);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat::filled(self.cols, self.rows, self.data[0].zero_like());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert!(!rows.is_empty() && !cols.is_empty());
        Mat::from_rows(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self[(i, j)].clone()).collect())
                .collect(),
        )
    }

    pub fn delete_cols(&self, remove: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !remove.contains(j)).collect();
        let all_rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all_rows, &keep)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if i == j {
                    if *e != e.one_like() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by Bareiss's fraction-free elimination. All interior
    /// divisions are exact in the coefficient ring.
    pub fn bareiss_determinant(&self) -> Result<T, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let one = m.data[0].one_like();
        let mut prev = one.clone();
        let mut sign_flip = false;
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(m.data[0].zero_like()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)]
                        .ring_mul(&m[(k, k)])
                        .ring_sub(&m[(i, k)].ring_mul(&m[(k, j)]));
                    m[(i, j)] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                m[(i, k)] = m.data[0].zero_like();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if sign_flip { det.ring_neg() } else { det })
    }

    /// Cofactor-expansion determinant. Exponential; kept as the independent
    /// oracle for Bareiss on small matrices.
    pub fn cofactor_determinant(&self) -> Result<T, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.cofactor_rec(&(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    fn cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> T {
        if rows.len() == 1 {
            return self[(rows[0], cols[0])].clone();
        }
        let mut acc = self.data[0].zero_like();
        let rest: Vec<usize> = rows[1..].to_vec();
        for (idx, &j) in cols.iter().enumerate() {
            let e = &self[(rows[0], j)];
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&c| c != j)
                .collect();
            let term = e.ring_mul(&self.cofactor_rec(&rest, &sub_cols));
            acc = if idx % 2 == 0 {
                acc.ring_add(&term)
            } else {
                acc.ring_sub(&term)
            };
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Fold `combine` over the determinants of all `k x k` minors, in
    /// lexicographic (row-subset, column-subset) order. `stop` short-circuits
    /// the enumeration (used for early exit once a gcd becomes a unit).
    pub fn fold_minors<A>(
        &self,
        k: usize,
        init: A,
        mut combine: impl FnMut(A, T) -> A,
        mut stop: impl FnMut(&A) -> bool,
    ) -> Result<A, AlgebraError> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(AlgebraError::BadMinorSize {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = init;
        for rows in Combinations::new(self.rows, k) {
            for cols in Combinations::new(self.cols, k) {
                let det = self.submatrix(&rows, &cols).bareiss_determinant()?;
                acc = combine(acc, det);
                if stop(&acc) {
                    return Ok(acc);
                }
            }
        }
        Ok(acc)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Lexicographic k-subsets of 0..n.
pub struct Combinations {
    n: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let state = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        let k = current.len();
        // advance
        let mut next = current.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (k - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}
