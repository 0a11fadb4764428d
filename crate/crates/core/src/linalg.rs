//! Dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, Rational};

/// A dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| &acc + &self[(i, i)])
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().unwrap();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let d = &factor * &m[(r, j)];
                    m[(i, j)] = &m[(i, j)] - &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{ v : self v = 0 }`, one vector per free column, in
    /// increasing order of the free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(r, free)];
            }
            out.push(v);
        }
        out
    }

    /// Rank by fraction-free (Bareiss) elimination on the integer matrix
    /// obtained by clearing row denominators.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let d = common_denominator(row);
                row.iter()
                    .map(|q| q.to_big().numer() * (&d / q.to_big().denom()))
                    .collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in (r + 1)..rows {
                for j in (c + 1)..cols {
                    let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Whether some vector with all entries positive satisfies `a · w = 0` for
/// every row `a` of `eqs`.
///
/// Parametrizes the kernel, then runs Fourier–Motzkin elimination on the
/// strict inequalities `w_i > 0`.
pub fn has_positive_kernel_vector(eqs: &QMatrix) -> bool {
    let basis = eqs.nullspace();
    if basis.is_empty() {
        return false;
    }
    let n = eqs.cols();
    // w = Σ c_k basis_k; constraint i: Σ_k basis_k[i] c_k > 0
    let ineqs: Vec<Vec<Rational>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    strict_homogeneous_feasible(ineqs)
}

/// Feasibility of `{ c : a · c > 0 for every a }` by Fourier–Motzkin.
fn strict_homogeneous_feasible(mut ineqs: Vec<Vec<Rational>>) -> bool {
    let Some(dim) = ineqs.first().map(Vec::len) else {
        return true;
    };
    for k in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for a in ineqs {
            match a[k].signum() {
                1 => pos.push(a),
                -1 => neg.push(a),
                _ => rest.push(a),
            }
        }
        for p in &pos {
            for q in &neg {
                // scale so the k-th coefficients cancel; both multipliers positive
                let sp = -&q[k];
                let sq = p[k].clone();
                let comb: Vec<Rational> = p
                    .iter()
                    .zip(q)
                    .map(|(x, y)| &(&sp * x) + &(&sq * y))
                    .collect();
                rest.push(comb);
            }
        }
        rest.iter_mut().for_each(|a| a.truncate(k));
        rest.sort();
        rest.dedup();
        ineqs = rest;
        if ineqs.is_empty() {
            return true;
        }
    }
    // only constant constraints 0 > 0 remain
    ineqs.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = QMatrix::from_rows(ns.iter().map(|v| v.clone()).collect()).transpose();
        assert!(m.mul(&v).data.iter().all(Rational::is_zero));
        let q = QMatrix::from_rows(vec![vec![Rational::new(1, 2), Rational::new(1, 3)], vec![
            Rational::new(3, 2),
            Rational::from_int(1),
        ]]);
        assert_eq!(q.rank(), 1);
        assert_eq!(QMatrix::zeros(2, 3).rank(), 0);
        assert_eq!(QMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn positive_kernel() {
        // w1 + w2 - w3 = 0 has (1,1,2)
        assert!(has_positive_kernel_vector(&QMatrix::from_ints(&[&[1, 1, -1]])));
        // w1 + w2 = 0 has none
        assert!(!has_positive_kernel_vector(&QMatrix::from_ints(&[&[1, 1, 0]])));
        // w1 = w2, w2 = 2 w3
        assert!(has_positive_kernel_vector(&QMatrix::from_ints(&[&[1, -1, 0], &[0, 1, -2]])));
        assert!(!has_positive_kernel_vector(&QMatrix::from_ints(&[&[1, 0], &[0, 1]])));
        assert!(has_positive_kernel_vector(&QMatrix::zeros(0, 3)));
    }
}
