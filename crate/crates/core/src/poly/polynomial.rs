use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{Monomial, MonomialOrder, Ring};

/// A point of affine space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn origin(n: usize) -> Self {
        Point(vec![Rational::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Parses `c1,c2,...,cn` with rational entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        let mut offset = 0;
        for piece in text.split(',') {
            let c = piece.trim().parse::<Rational>().map_err(|msg| Error::Syntax {
                pos: offset,
                msg,
            })?;
            coords.push(c);
            offset += piece.len() + 1;
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are stored without zero coefficients, sorted by strictly decreasing
/// monomial under degree-reverse-lex. That order is also the display order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

const CANONICAL: MonomialOrder = MonomialOrder::DegRevLex;

fn sort_desc(terms: &mut [(Monomial, Rational)]) {
    terms.sort_by(|a, b| CANONICAL.cmp(&b.0, &a.0));
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.n()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.n(), i), Rational::one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.n(), ring.n());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.n(), ring.n(), "monomial arity does not match the ring");
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms that are already distinct, nonzero and sorted.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| CANONICAL.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// True for a nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .cloned()
            .collect();
        Self::from_sorted_unchecked(&self.ring, terms)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Self::from_sorted_unchecked(&self.ring, terms)
    }

    /// Scales so that the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip().unwrap()),
            _ => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), a * c))
            .collect();
        Self::from_sorted_unchecked(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        let n = self.ring.n();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exps[i];
            (e > 0).then(|| {
                let mut d = m.clone();
                d.exps[i] -= 1;
                (d, c * &Rational::from_int(e as i64))
            })
        });
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn evaluate(&self, p: &Point) -> Result<Rational> {
        let n = self.ring.n();
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.dim(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in p.0.iter().zip(m.exps.iter()) {
                if e > 0 {
                    v = &v * &x.pow(e as u32);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`. `Ok(None)` when `g` does not divide `self`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.ring != g.ring {
            return Err(Error::RingMismatch);
        }
        let (glead, gcoef) = &g.terms[0];
        let ginv = gcoef.recip().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let Some(q) = glead.quotient_of(m) else {
                return Ok(None);
            };
            let qc = c * &ginv;
            rem = &rem - &g.mul_monomial(&q, &qc);
            quot.push((q, qc));
        }
        // quotient terms come out in decreasing order
        Ok(Some(Self::from_sorted_unchecked(&self.ring, quot)))
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let Some(d) = self.total_degree() else {
            return Err(Error::Precondition(
                "homogeneity is undefined for the zero polynomial".into(),
            ));
        };
        Ok(self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d))
    }

    /// Re-expresses `self` in `target`, sending variable `i` to variable
    /// `map[i]` of the target ring.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.n());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut t = Monomial::one(target.n());
            for (i, &e) in m.exps.iter().enumerate() {
                t.exps[map[i]] += e;
            }
            (t, c.clone())
        });
        Self::from_terms(target, terms)
    }

    /// Substitutes polynomials (all in one ring) for the variables.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.ring.n());
        let target = values[0].ring().clone();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (v, &e) in values.iter().zip(m.exps.iter()) {
                if e > 0 {
                    t = &t * &v.pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(self.ring == other.ring, "ring mismatch in polynomial arithmetic");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match CANONICAL.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Self::from_sorted_unchecked(&self.ring, out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring, "ring mismatch in polynomial arithmetic");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms);
        Polynomial::from_sorted_unchecked(&self.ring, terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical form, e.g. `3*x^2*y - 1/2*z + 4`; parses back to itself.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
