use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

use super::groebner::{groebner, GbConfig, NormalForm, TermOrder, Vector};
use super::syzygy::syzygies;
use super::Limits;

/// A reduced Gröbner basis together with a ready reducer.
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    leads: Vec<Monomial>,
    nf: NormalForm,
}

impl GroebnerBasis {
    fn new(ring: &Ring, order: MonomialOrder, elems: Vec<Vector>) -> Self {
        let leads = elems.iter().map(|v| v.terms[0].mono.clone()).collect();
        let polys = elems.iter().map(|v| v.to_polynomial(ring)).collect();
        GroebnerBasis {
            order,
            polys,
            leads,
            nf: NormalForm::new(&elems, TermOrder::ideal(order)),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let v = Vector::from_polynomial(f, 0, self.nf.order());
        self.nf.reduce(v).to_polynomial(f.ring())
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        let v = Vector::from_polynomial(f, 0, self.nf.order());
        self.nf.reduce(v).is_zero()
    }
}

/// An ideal of `Q[x_1..x_n]` given by generators.
///
/// The degree-reverse-lex reduced Gröbner basis is computed on first use and
/// cached; the cache is write-once and shared by clones.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: Arc<OnceLock<Arc<GroebnerBasis>>>,
}

impl Ideal {
    /// Zero generators are dropped; repeated generators kept once.
    pub fn new(ring: &Ring, generators: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            assert!(g.ring() == ring, "generator lives in a different ring");
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            generators: gens,
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, [])
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, [Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Cached reduced Gröbner basis under degree-reverse-lex.
    pub fn groebner_basis(&self, limits: &Limits) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let gb = Arc::new(self.compute_basis(MonomialOrder::DegRevLex, limits)?);
        // a racing thread may have published an identical basis first
        Ok(self.gb.get_or_init(|| gb).clone())
    }

    /// Reduced Gröbner basis under an arbitrary order (cached only for
    /// degree-reverse-lex).
    pub fn groebner_basis_in(&self, order: MonomialOrder, limits: &Limits) -> Result<Arc<GroebnerBasis>> {
        if order == MonomialOrder::DegRevLex {
            return self.groebner_basis(limits);
        }
        Ok(Arc::new(self.compute_basis(order, limits)?))
    }

    fn compute_basis(&self, order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
        let cfg = GbConfig::ideal(order);
        let input: Vec<Vector> = self
            .generators
            .iter()
            .map(|g| Vector::from_polynomial(g, 0, &cfg.order))
            .collect();
        let elems = groebner(&input, &cfg, limits)?;
        Ok(GroebnerBasis::new(&self.ring, order, elems))
    }

    pub fn is_unit(&self, limits: &Limits) -> Result<bool> {
        if self.generators.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        Ok(self.groebner_basis(limits)?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial, limits: &Limits) -> Result<bool> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        Ok(self.groebner_basis(limits)?.reduces_to_zero(f))
    }

    /// `other ⊆ self`, by generator membership.
    pub fn contains_ideal(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        Ok(self.contains_ideal(other, limits)? && other.contains_ideal(self, limits)?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(other.generators.iter()).cloned(),
        )
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `self : f = { a : a f ∈ self }`, from the syzygies of `(f, g_1, .., g_r)`.
    pub fn quotient(&self, f: &Polynomial, limits: &Limits) -> Result<Ideal> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.generators.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let gb = self.groebner_basis(limits)?;
        if gb.is_unit() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut v = vec![f.clone()];
        v.extend(gb.polynomials().iter().cloned());
        let syz = syzygies(&v, limits)?;
        Ok(Ideal::new(
            &self.ring,
            syz.into_iter().map(|s| s.0.into_iter().next().unwrap()),
        ))
    }

    /// `self : f^∞ = (self + (1 - w f)) ∩ Q[x]` for a fresh variable `w`.
    pub fn saturation(&self, f: &Polynomial, limits: &Limits) -> Result<Ideal> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.generators.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.extended(&["w"], &[]);
        let lift: Vec<usize> = (1..=self.ring.n()).collect();
        let w = Polynomial::var(&big, 0);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.embed(&big, &lift)).collect();
        gens.push(&Polynomial::one(&big) - &(&w * &f.embed(&big, &lift)));
        let out = Ideal::new(&big, gens).eliminate(1, limits)?;
        let map: Vec<usize> = (0..self.ring.n()).collect();
        Ok(Ideal::new(&self.ring, out.generators().iter().map(|g| g.embed(&self.ring, &map))))
    }

    /// `self ∩ Q[x_{k+1}..x_n]`, returned over the ring of the last `n-k`
    /// variables.
    pub fn eliminate(&self, k: usize, limits: &Limits) -> Result<Ideal> {
        let n = self.ring.n();
        if k == 0 || k >= n {
            return Err(Error::Precondition(format!(
                "can eliminate between 1 and {} variables, asked for {k}",
                n - 1
            )));
        }
        let names: Vec<&str> = self.ring.names()[k..].iter().map(String::as_str).collect();
        let sub = Ring::new(&names)?;
        let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
        let gb = self.groebner_basis_in(MonomialOrder::Block(k), limits)?;
        let kept = gb
            .polynomials()
            .iter()
            .zip(gb.leading_monomials())
            .filter(|(_, lm)| lm.exponents()[..k].iter().all(|&e| e == 0))
            .map(|(p, _)| {
                debug_assert!(p
                    .terms()
                    .iter()
                    .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)));
                p.embed(&sub, &map)
            });
        Ok(Ideal::new(&sub, kept))
    }

    /// `g ∈ √self`: first tries small powers against the cached basis, then
    /// decides with `1 ∈ self + (1 - w g)` in a ring with a fresh variable `w`.
    pub fn radical_contains(&self, g: &Polynomial, limits: &Limits) -> Result<bool> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        let gb = self.groebner_basis(limits)?;
        if gb.is_unit() || gb.reduces_to_zero(g) {
            return Ok(true);
        }
        let deg = g.total_degree().unwrap_or(0).max(1);
        let mut power = g.clone();
        for _ in 2..=4 {
            if deg * 4 > 24 || power.len() > 400 {
                break;
            }
            power = &power * g;
            if gb.reduces_to_zero(&power) {
                return Ok(true);
            }
        }
        let ext = self.ring.extended::<&str>(&[], &["w"]);
        let n = self.ring.n();
        let map: Vec<usize> = (0..n).collect();
        let w = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = gb.polynomials().iter().map(|p| p.embed(&ext, &map)).collect();
        gens.push(&Polynomial::one(&ext) - &(&w * &g.embed(&ext, &map)));
        Ideal::new(&ext, gens).is_unit(limits)
    }

    /// `other ⊆ √self`.
    pub fn radical_contains_ideal(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        // a Gröbner basis is usually a shorter generating set
        let gens: Vec<Polynomial> = match other.gb.get() {
            Some(gb) => gb.polynomials().to_vec(),
            None => other.generators.clone(),
        };
        for g in &gens {
            if !self.radical_contains(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `√self = √other`, by two-sided radical membership of generators.
    pub fn radical_equal(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        Ok(self.radical_contains_ideal(other, limits)? && other.radical_contains_ideal(self, limits)?)
    }

    /// `V(self) ⊆ V(other)` near the origin: for every generator `g` of
    /// `other`, `V(self : g^∞)` (the closure of `V(self) \ V(g)`) misses 0.
    pub fn germ_contained_in(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        let n = self.ring.n();
        let m: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&self.ring, i)).collect();
        for g in other.generators() {
            if g.is_zero() {
                continue;
            }
            let sat = self.saturation(g, limits)?;
            let at0 = sat.sum(&Ideal::new(&self.ring, m.clone()));
            if !at0.groebner_basis(limits)?.is_unit() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `√self = √other` as germs at the origin.
    pub fn radical_equal_at_origin(&self, other: &Ideal, limits: &Limits) -> Result<bool> {
        Ok(self.germ_contained_in(other, limits)? && other.germ_contained_in(self, limits)?)
    }

    /// Krull dimension of `V(self)`; `-1` for the unit ideal.
    ///
    /// Largest set of variables that supports no leading monomial of the
    /// Gröbner basis.
    pub fn dimension(&self, limits: &Limits) -> Result<i32> {
        let n = self.ring.n();
        if self.generators.is_empty() {
            return Ok(n as i32);
        }
        let gb = self.groebner_basis(limits)?;
        if gb.is_unit() {
            return Ok(-1);
        }
        Ok(dimension_of_monomial_ideal(gb.leading_monomials(), n))
    }

    fn check_ring(&self, f: &Polynomial) -> Result<()> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

/// Dimension of `V(m_1, .., m_r)` for monomials `m_i` in `n` variables.
pub(crate) fn dimension_of_monomial_ideal(monomials: &[Monomial], n: usize) -> i32 {
    if monomials.iter().any(Monomial::is_one) {
        return -1;
    }
    assert!(n <= 30, "too many variables for subset enumeration");
    let supports: Vec<u32> = monomials
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as i32;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
