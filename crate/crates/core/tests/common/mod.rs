//! Independent oracles for the integration tests: degree-truncated linear
//! algebra over `BigRational`, brute-force subset enumeration, and random
//! input generators.
#![allow(dead_code)]

pub mod divisor_props;
pub mod ideal_props;
pub mod published;

use std::collections::HashMap;

use divlab::{Monomial, Polynomial, Rational, Ring};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn ring(vars: &str) -> Ring {
    Ring::from_list(vars).unwrap()
}

pub fn p(r: &Ring, s: &str) -> Polynomial {
    divlab::parse_polynomial(s, r).unwrap()
}

/// Monomials of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e as u16);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    monomials_up_to(n, d).into_iter().filter(|m| m.degree() == d).collect()
}

/// Coordinates of polynomials in a shared monomial basis.
struct Coords {
    index: HashMap<Monomial, usize>,
}

impl Coords {
    fn new() -> Self {
        Coords { index: HashMap::new() }
    }

    fn vector(&mut self, f: &Polynomial) -> Vec<(usize, BigRational)> {
        f.terms()
            .iter()
            .map(|(m, c)| {
                let n = self.index.len();
                let i = *self.index.entry(m.clone()).or_insert(n);
                (i, c.to_big())
            })
            .collect()
    }

    fn len(&self) -> usize {
        self.index.len()
    }
}

fn dense(rows: &[Vec<(usize, BigRational)>], width: usize) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            let mut v = vec![BigRational::zero(); width];
            for (i, c) in r {
                v[*i] = &v[*i] + c;
            }
            v
        })
        .collect()
}

/// Row echelon form by plain Gaussian elimination; returns the rank.
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] = &m[i][j] - &d;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Kernel of `m` (as column vectors) by reduced row echelon form.
pub fn nullspace(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for j in 0..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// Whether `f` is a `Q`-combination of `m * g` with `deg(m) + deg(g) <= d`.
/// Sound for membership; complete once `d` is large enough.
pub fn truncated_member(f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let n = f.ring().n();
    let mut coords = Coords::new();
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.total_degree() else { continue };
        if gd > d {
            continue;
        }
        for m in monomials_up_to(n, d - gd) {
            let mg = g.mul_monomial(&m, &Rational::one());
            rows.push(coords.vector(&mg));
        }
    }
    let target = coords.vector(f);
    let width = coords.len();
    let base = dense(&rows, width);
    let r0 = rank(base.clone());
    let mut with = base;
    with.extend(dense(&[target], width));
    rank(with) == r0
}

/// All syzygies of `v` whose entries have degree at most `d`, as a basis of
/// the finite-dimensional solution space.
pub fn truncated_syzygies(v: &[Polynomial], d: u32) -> Vec<Vec<Polynomial>> {
    let ring = v[0].ring().clone();
    let n = ring.n();
    let monos = monomials_up_to(n, d);
    let r = v.len();
    // unknown (i, m): coefficient of m in entry i
    let mut coords = Coords::new();
    let mut columns: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for vi in v {
        for m in &monos {
            columns.push(coords.vector(&vi.mul_monomial(m, &Rational::one())));
        }
    }
    let height = coords.len();
    let mut mat = vec![vec![BigRational::zero(); columns.len()]; height];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            mat[*i][j] = &mat[*i][j] + c;
        }
    }
    let ns = nullspace(mat, columns.len());
    ns.into_iter()
        .map(|sol| {
            (0..r)
                .map(|i| {
                    Polynomial::from_terms(
                        &ring,
                        monos.iter().enumerate().map(|(k, m)| {
                            (m.clone(), Rational::from_big(sol[i * monos.len() + k].clone()))
                        }),
                    )
                })
                .collect()
        })
        .collect()
}

/// Dimension of a monomial variety by checking every coordinate subspace.
pub fn brute_monomial_dimension(monos: &[Monomial], n: usize) -> i32 {
    if monos.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut best = 0;
    for set in 0u32..(1 << n) {
        // the coordinate subspace spanned by `set` lies in V iff every
        // generator uses some variable outside `set`
        let inside = monos.iter().all(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && set & (1 << i) == 0)
        });
        if inside {
            best = best.max(set.count_ones() as i32);
        }
    }
    best
}

pub fn arb_monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::from_exponents(&e))
}

/// Random polynomial with small integer coefficients and degree at most `d`.
pub fn arb_poly(ring: Ring, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.n();
    let monos = monomials_up_to(n, d);
    proptest::collection::vec((proptest::sample::select(monos), -4i64..=4), 1..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(&ring, terms.into_iter().map(|(m, c)| (m, Rational::from_int(c))))
        },
    )
}

/// Random homogeneous polynomial of degree `d`.
pub fn arb_homogeneous(ring: Ring, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(ring.n(), d);
    proptest::collection::vec((proptest::sample::select(monos), -4i64..=4), 1..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(&ring, terms.into_iter().map(|(m, c)| (m, Rational::from_int(c))))
        },
    )
}
