//! Logarithmic derivations of a divisor `V(f)` and the data read off them.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{prune_generators, syzygies, Limits, ModuleVector, PolyMatrix, Submodule};
use crate::linalg::QMatrix;
use crate::poly::{Monomial, Point, Polynomial, Ring};
use crate::rational::Rational;

/// A vector field `δ = Σ a_j ∂_j` with `δ(f) = α f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    coefficients: Vec<Polynomial>,
    cofactor: Polynomial,
}

impl Derivation {
    /// Checks `Σ a_j ∂_j f = α f` exactly.
    pub fn new(f: &Polynomial, coefficients: Vec<Polynomial>, cofactor: Polynomial) -> Result<Self> {
        let n = f.ring().n();
        if coefficients.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: coefficients.len(),
            });
        }
        let d = Derivation {
            coefficients,
            cofactor,
        };
        if d.apply(f)? != &d.cofactor * f {
            return Err(Error::Precondition(format!("{d} is not logarithmic for {f}")));
        }
        Ok(d)
    }

    /// The Euler field `Σ x_i ∂_i`, without a cofactor check.
    pub fn euler(ring: &Ring, cofactor: Polynomial) -> Self {
        Derivation {
            coefficients: (0..ring.n()).map(|i| Polynomial::var(ring, i)).collect(),
            cofactor,
        }
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn cofactor(&self) -> &Polynomial {
        &self.cofactor
    }

    pub fn ring(&self) -> &Ring {
        self.cofactor.ring()
    }

    /// `δ(g) = Σ a_j ∂_j g`.
    pub fn apply(&self, g: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(g.ring());
        for (j, a) in self.coefficients.iter().enumerate() {
            if !a.is_zero() {
                out = &out + &(a * &g.partial_derivative(j)?);
            }
        }
        Ok(out)
    }

    /// `(a_1, .., a_n, -α)`, a syzygy of `(∂_1 f, .., ∂_n f, f)`.
    pub fn as_syzygy(&self) -> ModuleVector {
        let mut v = self.coefficients.clone();
        v.push(-&self.cofactor);
        ModuleVector(v)
    }

    /// Constant terms of the coefficients.
    pub fn constant_part(&self) -> Vec<Rational> {
        self.coefficients.iter().map(Polynomial::constant_term).collect()
    }

    /// Linear part as a matrix: entry `(k, j)` is the coefficient of `x_k`
    /// in `a_j`.
    pub fn linear_part(&self) -> QMatrix {
        let n = self.coefficients.len();
        let mut m = QMatrix::zeros(n, n);
        for (j, a) in self.coefficients.iter().enumerate() {
            for k in 0..n {
                m[(k, j)] = a.coefficient(&Monomial::var(n, k));
            }
        }
        m
    }

    pub fn vanishes_at(&self, p: &Point) -> Result<bool> {
        for a in &self.coefficients {
            if !a.evaluate(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            coefficients: self.coefficients.iter().map(|a| a.scale(c)).collect(),
            cofactor: self.cofactor.scale(c),
        }
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
            cofactor: &self.cofactor + &other.cofactor,
        }
    }

    /// Largest total degree of a coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.coefficients.iter().filter_map(Polynomial::total_degree).max()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        let mut first = true;
        for (j, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a.is_one() {
                write!(f, "d/d{}", ring.name(j))?;
            } else if a.len() == 1 && a.terms()[0].1.signum() > 0 {
                write!(f, "{a}*d/d{}", ring.name(j))?;
            } else {
                write!(f, "({a})*d/d{}", ring.name(j))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [cofactor {}]", self.cofactor)
    }
}

/// A generating set of logarithmic derivations with its Saito matrices.
#[derive(Clone, Debug)]
pub struct SaitoData {
    f: Polynomial,
    derivations: Vec<Derivation>,
    a: PolyMatrix,
    a_ext: PolyMatrix,
}

impl SaitoData {
    /// Builds the matrices from any generating set of the module.
    pub fn from_derivations(f: &Polynomial, derivations: Vec<Derivation>) -> Result<Self> {
        let ring = f.ring();
        let rows: Vec<Vec<Polynomial>> = derivations.iter().map(|d| d.as_syzygy().0).collect();
        let a_ext = PolyMatrix::new(ring, rows)?;
        let a = a_ext.left_columns(ring.n());
        Ok(SaitoData {
            f: f.clone(),
            derivations,
            a,
            a_ext,
        })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    pub fn derivations(&self) -> &[Derivation] {
        &self.derivations
    }

    /// Saito matrix, one row per derivation.
    pub fn matrix(&self) -> &PolyMatrix {
        &self.a
    }

    /// Saito matrix with the column `-α` appended.
    pub fn extended_matrix(&self) -> &PolyMatrix {
        &self.a_ext
    }

    /// The module spanned by the derivations, as syzygies in `R^{n+1}`.
    pub fn module(&self, limits: &Limits) -> Result<Submodule> {
        Submodule::new(
            self.ring(),
            self.ring().n() + 1,
            self.derivations.iter().map(Derivation::as_syzygy).collect(),
            limits,
        )
    }

    pub fn contains(&self, d: &Derivation, limits: &Limits) -> Result<bool> {
        self.module(limits)?.contains(&d.as_syzygy())
    }
}

fn check_divisor(f: &Polynomial) -> Result<()> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::Precondition("f must be nonconstant".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::Precondition("f must vanish at the origin".into()));
    }
    Ok(())
}

/// Generators of `Der(-log f)`: the syzygies `(a, b)` of
/// `(∂_1 f, .., ∂_n f, f)`, read as `Σ a_j ∂_j` with cofactor `-b`.
pub fn logarithmic_derivations(f: &Polynomial, limits: &Limits) -> Result<SaitoData> {
    check_divisor(f)?;
    let ring = f.ring();
    let n = ring.n();
    let mut v = Vec::with_capacity(n + 1);
    for j in 0..n {
        v.push(f.partial_derivative(j)?);
    }
    v.push(f.clone());
    let syz = syzygies(&v, limits)?;
    let pruned = prune_generators(ring, syz, limits)?;
    let derivations = pruned
        .into_iter()
        .map(|s| {
            let mut e = s.0;
            let b = e.pop().unwrap();
            let d = Derivation {
                coefficients: e,
                cofactor: -&b,
            };
            assert!(d.apply(f).unwrap() == &d.cofactor * f, "syzygy identity");
            d
        })
        .collect();
    SaitoData::from_derivations(f, derivations)
}

/// Index of a derivation with a coefficient not vanishing at the origin.
pub fn is_product_at_origin(sd: &SaitoData) -> Option<usize> {
    sd.derivations
        .iter()
        .position(|d| d.coefficients.iter().any(|a| !a.constant_term().is_zero()))
}

/// Outcome of the search for a basis at the origin.
#[derive(Clone, Debug)]
pub enum FreeBasis {
    /// Indices into the generating set, the determinant and `q = det / f`.
    Basis {
        indices: Vec<usize>,
        determinant: Polynomial,
        quotient: Polynomial,
    },
    /// Every `n`-subset tried, with `q(0)` (or `None` when the determinant
    /// is not a multiple of `f`).
    NotFree { tried: Vec<(Vec<usize>, Option<Rational>)> },
}

impl FreeBasis {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeBasis::Basis { .. })
    }
}

fn lex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn determinant(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    PolyMatrix::new(ring, rows)?.determinant()
}

/// Saito's criterion at the origin: the first `n`-subset of generators (in
/// lexicographic order of indices) whose determinant is `q f` with
/// `q(0) ≠ 0`. By Nakayama a basis of the localized module, if any, can be
/// chosen among the generators, so the search is complete.
pub fn free_basis_at_origin(sd: &SaitoData) -> Result<FreeBasis> {
    let ring = sd.ring();
    let n = ring.n();
    let origin = Point::origin(n);
    let mut tried = Vec::new();
    for idx in lex_subsets(sd.derivations.len(), n) {
        let rows = idx.iter().map(|&i| sd.a.row(i).to_vec()).collect();
        let det = determinant(ring, rows)?;
        let q = det.exact_divide(&sd.f)?;
        match q {
            Some(q) if !q.evaluate(&origin)?.is_zero() => {
                return Ok(FreeBasis::Basis {
                    indices: idx,
                    determinant: det,
                    quotient: q,
                });
            }
            Some(q) => tried.push((idx, Some(q.evaluate(&origin)?))),
            None => tried.push((idx, None)),
        }
    }
    Ok(FreeBasis::NotFree { tried })
}

/// A basis of the logarithmic derivations with linear coefficients and
/// constant cofactor, for homogeneous `f`.
pub fn linear_log_derivations(f: &Polynomial) -> Result<Vec<Derivation>> {
    check_divisor(f)?;
    if f.homogeneous_degree()?.is_none() {
        return Err(Error::Precondition("f must be homogeneous".into()));
    }
    let ring = f.ring();
    let n = ring.n();
    let partials: Vec<Polynomial> = (0..n).map(|j| f.partial_derivative(j)).collect::<Result<_>>()?;
    // unknown k*n + j: coefficient of x_k in a_j; unknown n*n: -α
    let mut columns: Vec<Polynomial> = Vec::with_capacity(n * n + 1);
    for k in 0..n {
        for p in &partials {
            columns.push(&Polynomial::var(ring, k) * p);
        }
    }
    columns.push(f.clone());
    let mut monos: Vec<Monomial> = columns
        .iter()
        .flat_map(|c| c.terms().iter().map(|(m, _)| m.clone()))
        .collect();
    monos.sort_by(|a, b| crate::poly::MonomialOrder::DegRevLex.cmp(b, a));
    monos.dedup();
    let mut sys = QMatrix::zeros(monos.len(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, m) in monos.iter().enumerate() {
            sys[(r, c)] = col.coefficient(m);
        }
    }
    let mut out = Vec::new();
    for sol in sys.nullspace() {
        let coefficients = (0..n)
            .map(|j| {
                Polynomial::from_terms(
                    ring,
                    (0..n).map(|k| (Monomial::var(n, k), sol[k * n + j].clone())),
                )
            })
            .collect();
        let cofactor = Polynomial::constant(ring, -&sol[n * n]);
        out.push(Derivation::new(f, coefficients, cofactor)?);
    }
    Ok(out)
}

/// Linear freeness: `n` linear logarithmic derivations with determinant a
/// nonzero constant times `f`. Returns the basis on success; a homogeneous
/// `f` of degree other than `n` is never linear free.
pub fn is_linear_free(f: &Polynomial) -> Result<Option<Vec<Derivation>>> {
    let n = f.ring().n();
    match f.homogeneous_degree()? {
        None => return Err(Error::Precondition("f must be homogeneous".into())),
        Some(d) if d != n as u32 => return Ok(None),
        Some(_) => {}
    }
    let lin = linear_log_derivations(f)?;
    for idx in lex_subsets(lin.len(), n) {
        let rows = idx.iter().map(|&i| lin[i].coefficients.clone()).collect();
        let det = determinant(f.ring(), rows)?;
        if let Some(q) = det.exact_divide(f)? {
            if q.is_constant() && !q.is_zero() {
                return Ok(Some(idx.into_iter().map(|i| lin[i].clone()).collect()));
            }
        }
    }
    Ok(None)
}

/// Linearly independent `n×n` matrices spanning the linear parts of the
/// singular elements of the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPartSpace {
    n: usize,
    basis: Vec<QMatrix>,
}

impl LinearPartSpace {
    /// Keeps the matrices that are independent of the ones before them.
    pub fn span(n: usize, candidates: impl IntoIterator<Item = QMatrix>) -> Self {
        let mut basis: Vec<QMatrix> = Vec::new();
        let mut rank = 0;
        for c in candidates {
            assert_eq!((c.rows(), c.cols()), (n, n));
            let mut rows: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
            rows.push(flatten(&c));
            let r = QMatrix::from_rows(rows).rank();
            if r > rank {
                rank = r;
                basis.push(c);
            }
        }
        LinearPartSpace { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// Linear parts of `Σ c_i δ_i` with `Σ c_i v_i = 0` (`v_i` the constant
/// parts), together with the rank-one parts `w v_iᵀ` coming from `x_k δ_i`.
pub fn singular_linear_part_space(sd: &SaitoData) -> LinearPartSpace {
    let n = sd.ring().n();
    let m = sd.derivations.len();
    let consts: Vec<Vec<Rational>> = sd.derivations.iter().map(Derivation::constant_part).collect();
    let lins: Vec<QMatrix> = sd.derivations.iter().map(Derivation::linear_part).collect();
    // V has v_i as column i
    let mut v = QMatrix::zeros(n, m);
    for (i, c) in consts.iter().enumerate() {
        for k in 0..n {
            v[(k, i)] = c[k].clone();
        }
    }
    let mut candidates = Vec::new();
    for c in v.nullspace() {
        let mut acc = QMatrix::zeros(n, n);
        for (ci, mi) in c.iter().zip(&lins) {
            if ci.is_zero() {
                continue;
            }
            for r in 0..n {
                for s in 0..n {
                    acc[(r, s)] = &acc[(r, s)] + &(ci * &mi[(r, s)]);
                }
            }
        }
        candidates.push(acc);
    }
    for c in &consts {
        if c.iter().all(Rational::is_zero) {
            continue;
        }
        for k in 0..n {
            let mut e = QMatrix::zeros(n, n);
            for (j, cj) in c.iter().enumerate() {
                e[(k, j)] = cj.clone();
            }
            candidates.push(e);
        }
    }
    LinearPartSpace::span(n, candidates)
}

/// Whether every element of the space is nilpotent: `trace(B(y)^k) = 0`
/// identically for `k = 1..n`, with `B(y) = Σ y_i B_i` over fresh
/// indeterminates.
pub fn all_topologically_nilpotent(space: &LinearPartSpace) -> bool {
    let d = space.dim();
    if d == 0 {
        return true;
    }
    let n = space.n;
    let names: Vec<String> = (0..d).map(|i| format!("y{i}")).collect();
    let ring = Ring::new(&names).expect("fresh names are valid");
    let mut b = vec![Polynomial::zero(&ring); n * n];
    for (i, bi) in space.basis.iter().enumerate() {
        let yi = Polynomial::var(&ring, i);
        for r in 0..n {
            for s in 0..n {
                if !bi[(r, s)].is_zero() {
                    b[r * n + s] = &b[r * n + s] + &yi.scale(&bi[(r, s)]);
                }
            }
        }
    }
    let mut power = b.clone();
    for k in 1..=n {
        let trace = (0..n).fold(Polynomial::zero(&ring), |acc, i| &acc + &power[i * n + i]);
        if !trace.is_zero() {
            return false;
        }
        if k < n {
            power = poly_matmul(&ring, &power, &b, n);
        }
    }
    true
}

fn poly_matmul(ring: &Ring, a: &[Polynomial], b: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(ring); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] = &out[i * n + j] + &(x * y);
                }
            }
        }
    }
    out
}

/// Whether some element of the space has nonzero trace.
pub fn exists_nonzero_trace(space: &LinearPartSpace) -> bool {
    space.basis.iter().any(|m| !m.trace().is_zero())
}

/// Strong Euler-homogeneity at `p`: `rank Ã(p) = rank A(p) + 1`.
///
/// On success the witness is `χ = Σ c_i δ_i` with `χ(p) = 0` and cofactor
/// equal to `1` at `p`; `c` is the first vector of the reduced-echelon
/// kernel basis of `A(p)ᵀ` that pairs nontrivially with the cofactors.
pub fn is_seh_at_point(sd: &SaitoData, p: &Point) -> Result<(bool, Option<Derivation>)> {
    if !sd.f.evaluate(p)?.is_zero() {
        return Err(Error::Precondition(format!("point {p} is not on the divisor")));
    }
    let ap = sd.a.evaluate(p)?;
    let ext = sd.a_ext.evaluate(p)?;
    if ext.rank() != ap.rank() + 1 {
        return Ok((false, None));
    }
    let m = sd.derivations.len();
    let alphas: Vec<Rational> = sd
        .derivations
        .iter()
        .map(|d| d.cofactor.evaluate(p))
        .collect::<Result<_>>()?;
    for c in ap.transpose().nullspace() {
        let pairing = (0..m).fold(Rational::zero(), |acc, i| &acc + &(&c[i] * &alphas[i]));
        if pairing.is_zero() {
            continue;
        }
        let inv = pairing.recip().unwrap();
        let mut chi: Option<Derivation> = None;
        for (ci, d) in c.iter().zip(&sd.derivations) {
            if ci.is_zero() {
                continue;
            }
            let term = d.scale(&(ci * &inv));
            chi = Some(match chi {
                Some(acc) => acc.add(&term),
                None => term,
            });
        }
        return Ok((true, chi));
    }
    unreachable!("rank jump without a pairing vector")
}

/// Whether some positive weights make `f` weighted homogeneous.
pub fn is_quasi_homogeneous(f: &Polynomial) -> bool {
    let terms = f.terms();
    let n = f.ring().n();
    if terms.is_empty() {
        return false;
    }
    let first = terms[0].0.exponents().to_vec();
    let rows: Vec<Vec<Rational>> = terms[1..]
        .iter()
        .map(|(m, _)| {
            m.exponents()
                .iter()
                .zip(&first)
                .map(|(&a, &b)| Rational::from_int(a as i64 - b as i64))
                .collect()
        })
        .collect();
    let eqs = if rows.is_empty() {
        QMatrix::zeros(0, n)
    } else {
        QMatrix::from_rows(rows)
    };
    crate::linalg::has_positive_kernel_vector(&eqs)
}
