use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::poly::{Point, Polynomial, Ring};

use super::ideal::Ideal;

/// A rectangular matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            if row.iter().any(|p| p.ring() != ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// The first `k` columns.
    pub fn left_columns(&self, k: usize) -> PolyMatrix {
        assert!(k <= self.cols);
        let rows = (0..self.rows).map(|i| self.row(i)[..k].to_vec()).collect();
        PolyMatrix::new(&self.ring, rows).unwrap()
    }

    /// All `k×k` minors, nonzero, made monic and deduplicated, in a
    /// deterministic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        let max = self.rows.min(self.cols);
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange { index: k, n: max });
        }
        Ok(self.minor_levels(k).pop().unwrap())
    }

    /// `minors(k)` for `k = 1..=max_k`, sharing the cofactor expansion.
    pub fn minor_levels(&self, max_k: usize) -> Vec<Vec<Polynomial>> {
        assert!(self.rows <= 64 && self.cols <= 64, "matrix too large for bitmask minors");
        let max_k = max_k.min(self.rows.min(self.cols));
        let mut out = Vec::with_capacity(max_k);
        // level 1: entries keyed by (row mask, col mask)
        let mut level: HashMap<(u64, u64), Polynomial> = HashMap::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    level.insert((1 << i, 1 << j), e.clone());
                }
            }
        }
        if max_k >= 1 {
            out.push(canonical(&level));
        }
        for k in 2..=max_k {
            let mut next: HashMap<(u64, u64), Polynomial> = HashMap::new();
            for rmask in subsets(self.rows, k) {
                // expand along the first row of the subset
                let r0 = rmask.trailing_zeros() as usize;
                let rest = rmask & !(1 << r0);
                for cmask in subsets(self.cols, k) {
                    let mut det = Polynomial::zero(&self.ring);
                    let mut sign_pos = true;
                    let mut bits = cmask;
                    while bits != 0 {
                        let c = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let e = self.get(r0, c);
                        if !e.is_zero() {
                            if let Some(sub) = level.get(&(rest, cmask & !(1 << c))) {
                                let term = e * sub;
                                det = if sign_pos { &det + &term } else { &det - &term };
                            }
                        }
                        sign_pos = !sign_pos;
                    }
                    if !det.is_zero() {
                        next.insert((rmask, cmask), det);
                    }
                }
            }
            level = next;
            out.push(canonical(&level));
        }
        out
    }

    /// Determinant of a square matrix, by expansion over column subsets.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        assert!(n <= 20, "matrix too large for subset expansion");
        // det of rows 0..k restricted to the columns in the mask
        let mut level: HashMap<u64, Polynomial> = HashMap::new();
        level.insert(0, Polynomial::one(&self.ring));
        for r in 0..n {
            let mut next: HashMap<u64, Polynomial> = HashMap::new();
            for (&mask, sub) in &level {
                for c in (0..n).filter(|c| mask & (1 << c) == 0) {
                    let e = self.get(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    // sign from the columns in the mask to the right of c
                    let above = (mask >> c).count_ones();
                    let term = e * sub;
                    let slot = next.entry(mask | (1 << c)).or_insert_with(|| Polynomial::zero(&self.ring));
                    *slot = if above % 2 == 0 { &*slot + &term } else { &*slot - &term };
                }
            }
            next.retain(|_, v| !v.is_zero());
            level = next;
        }
        Ok(level.remove(&((1u64 << n) - 1)).unwrap_or_else(|| Polynomial::zero(&self.ring)))
    }

    /// The ideal of `k×k` minors.
    pub fn minor_ideal(&self, k: usize) -> Result<Ideal> {
        Ok(Ideal::new(&self.ring, self.minors(k)?))
    }

    pub fn evaluate(&self, p: &Point) -> Result<QMatrix> {
        if p.dim() != self.ring.n() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.n(),
                got: p.dim(),
            });
        }
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self.get(i, j).evaluate(p)?;
            }
        }
        Ok(m)
    }

    /// Rank over `Q` of the matrix evaluated at `p`.
    pub fn rank_at_point(&self, p: &Point) -> Result<usize> {
        Ok(self.evaluate(p)?.rank())
    }
}

fn canonical(level: &HashMap<(u64, u64), Polynomial>) -> Vec<Polynomial> {
    let mut keys: Vec<&(u64, u64)> = level.keys().collect();
    keys.sort();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for k in keys {
        let p = level[k].monic();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// All `k`-element subsets of `0..n` as bitmasks, in increasing order.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u128 << n;
    let mut out = Vec::new();
    let mut m: u64 = (1u64 << k) - 1;
    while (m as u128) < limit {
        out.push(m);
        // Gosper's hack: next integer with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        if r == 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
