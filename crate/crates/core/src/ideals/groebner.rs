//! Buchberger's algorithm over free modules `R^k`, `R = Q[x_1..x_n]`.
//!
//! Ideals are the case where every term sits in component 0. Pairs are
//! pruned with the Gebauer–Möller installation (chain criterion, plus the
//! product criterion for ideals) and selected by lowest sugar degree.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::rational::Rational;

use super::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionOrder {
    /// Compare monomials first, then components.
    TermOverPosition,
    /// Compare components first (lower index is larger), then monomials.
    PositionOverTerm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    pub pos: PositionOrder,
}

impl TermOrder {
    pub fn ideal(mono: MonomialOrder) -> Self {
        TermOrder {
            mono,
            pos: PositionOrder::TermOverPosition,
        }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match self.pos {
            PositionOrder::TermOverPosition => {
                self.mono.cmp(am, bm).then_with(|| bc.cmp(&ac))
            }
            PositionOrder::PositionOverTerm => {
                bc.cmp(&ac).then_with(|| self.mono.cmp(am, bm))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: Rational,
}

/// A module element as a list of terms sorted decreasingly by a term order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_polynomial(p: &Polynomial, comp: u32, ord: &TermOrder) -> Vector {
        let mut terms: Vec<Term> = p
            .terms()
            .iter()
            .map(|(m, c)| Term {
                mono: m.clone(),
                comp,
                coeff: c.clone(),
            })
            .collect();
        sort_terms(&mut terms, ord);
        Vector { terms }
    }

    /// Stacks polynomials into one vector, entry `i` in component `offset + i`.
    pub fn from_entries(entries: &[Polynomial], offset: u32, ord: &TermOrder) -> Vector {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term {
                    mono: m.clone(),
                    comp: offset + i as u32,
                    coeff: c.clone(),
                });
            }
        }
        sort_terms(&mut terms, ord);
        Vector { terms }
    }

    /// Component `comp` as a polynomial over `ring`.
    pub fn component(&self, comp: u32, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mono.clone(), t.coeff.clone())),
        )
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        self.component(0, ring)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    fn monic(mut self) -> Vector {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.recip().unwrap();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
        self
    }

    fn degree(&self, shifts: &[u32]) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.degree() + shift(shifts, t.comp))
            .max()
            .unwrap_or(0)
    }

    fn max_mono_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }
}

fn sort_terms(terms: &mut [Term], ord: &TermOrder) {
    terms.sort_by(|a, b| ord.cmp(&b.mono, b.comp, &a.mono, a.comp));
}

#[inline]
fn shift(shifts: &[u32], comp: u32) -> u32 {
    shifts.get(comp as usize).copied().unwrap_or(0)
}

/// `a[a_start+1..] - c * m * b[1..]`, assuming the leading terms cancel.
fn sub_shifted_tail(
    a: &[Term],
    c: &Rational,
    m: &Monomial,
    b: &[Term],
    ord: &TermOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (1, 1);
    let mut pending: Option<Term> = None;
    let next_b = |j: usize| -> Term {
        let t = &b[j];
        Term {
            mono: t.mono.mul(m),
            comp: t.comp,
            coeff: -(c * &t.coeff),
        }
    };
    while i < a.len() && j < b.len() {
        let bt = pending.take().unwrap_or_else(|| next_b(j));
        match ord.cmp(&a[i].mono, a[i].comp, &bt.mono, bt.comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                pending = Some(bt);
            }
            Ordering::Less => {
                out.push(bt);
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].coeff + &bt.coeff;
                if !s.is_zero() {
                    out.push(Term {
                        mono: bt.mono,
                        comp: bt.comp,
                        coeff: s,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    if let Some(bt) = pending.take() {
        out.push(bt);
        j += 1;
    }
    out.extend_from_slice(&a[i.min(a.len())..]);
    while j < b.len() {
        out.push(next_b(j));
        j += 1;
    }
    out
}

struct Elem {
    v: Vector,
    lead: Monomial,
    comp: u32,
    mask: u64,
    sugar: u32,
}

impl Elem {
    fn new(v: Vector, sugar: u32) -> Elem {
        let lt = v.lead().expect("nonzero basis element");
        Elem {
            lead: lt.mono.clone(),
            comp: lt.comp,
            mask: lt.mono.support_mask(),
            v,
            sugar,
        }
    }
}

/// A critical pair, or an input generator waiting (`input`) to be reduced
/// and installed when its leading term comes up.
struct Pair {
    i: usize,
    j: usize,
    input: Option<usize>,
    lcm: Monomial,
    comp: u32,
    sugar: u32,
}

/// Critical pair selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Selection {
    /// Smallest least common multiple first.
    #[default]
    Normal,
    /// Lowest sugar degree first, ties by least common multiple.
    Sugar,
}

/// Configuration of one Gröbner basis computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub order: TermOrder,
    pub selection: Selection,
    /// Degree weights of the components, used for sugar only.
    pub shifts: Vec<u32>,
    /// Enables the product criterion and the unit-ideal shortcut.
    pub ideal: bool,
}

impl GbConfig {
    pub fn ideal(mono: MonomialOrder) -> Self {
        GbConfig {
            order: TermOrder::ideal(mono),
            selection: Selection::default(),
            shifts: Vec::new(),
            ideal: true,
        }
    }
}

struct Reducer<'a> {
    elems: &'a [Elem],
    active: &'a [usize],
    ord: &'a TermOrder,
}

impl<'a> Reducer<'a> {
    fn find(&self, t: &Term) -> Option<&'a Elem> {
        let mask = t.mono.support_mask();
        let mut best: Option<&Elem> = None;
        for &k in self.active {
            let e = &self.elems[k];
            if e.comp == t.comp
                && e.mask & !mask == 0
                && e.lead.divides(&t.mono)
                && best.is_none_or(|b| self.ord.cmp(&e.lead, e.comp, &b.lead, b.comp) == Ordering::Less)
            {
                best = Some(e);
            }
        }
        best
    }

    /// Reduces `p` (with sugar `sugar`); `full` also reduces the tail.
    fn reduce(&self, p: Vector, mut sugar: u32, full: bool) -> (Vector, u32) {
        let mut rest = p.terms;
        let mut start = 0;
        let mut done: Vec<Term> = Vec::new();
        while start < rest.len() {
            let t = &rest[start];
            match self.find(t) {
                Some(e) => {
                    let m = e.lead.quotient_of(&t.mono).unwrap();
                    sugar = sugar.max(m.degree() + e.sugar);
                    let c = t.coeff.clone();
                    rest = sub_shifted_tail(&rest[start..], &c, &m, &e.v.terms, self.ord);
                    start = 0;
                }
                None => {
                    if !full {
                        break;
                    }
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        done.extend_from_slice(&rest[start..]);
        (Vector { terms: done }, sugar)
    }
}

fn s_vector(a: &Elem, b: &Elem, lcm: &Monomial, ord: &TermOrder) -> Vector {
    let ma = a.lead.quotient_of(lcm).unwrap();
    let mb = b.lead.quotient_of(lcm).unwrap();
    // ma * a - mb * b; both monic, so the leads cancel
    let shifted_a: Vec<Term> = a
        .v
        .terms
        .iter()
        .map(|t| Term {
            mono: t.mono.mul(&ma),
            comp: t.comp,
            coeff: t.coeff.clone(),
        })
        .collect();
    if shifted_a.is_empty() {
        return Vector::default();
    }
    let terms = sub_shifted_tail(&shifted_a, &Rational::one(), &mb, &b.v.terms, ord);
    Vector { terms }
}

struct State<'a> {
    cfg: &'a GbConfig,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> State<'a> {
    /// Gebauer–Möller installation of the new element `h`.
    fn update(&mut self, h: usize) {
        let (hlead, hcomp, hsugar) = {
            let e = &self.elems[h];
            (e.lead.clone(), e.comp, e.sugar)
        };
        let ideal = self.cfg.ideal;
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .filter(|&&g| self.elems[g].comp == hcomp)
            .map(|&g| {
                let gl = &self.elems[g].lead;
                (g, hlead.lcm(gl), ideal && hlead.coprime(gl))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, lcm, coprime)) = cands.pop() {
            let dominated = cands.iter().any(|(_, l, _)| l.divides(&lcm))
                || kept.iter().any(|(_, l, _)| l.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.input.is_some() || p.comp != hcomp || !hlead.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead.lcm(&hlead);
            let lj = elems[p.j].lead.lcm(&hlead);
            li == p.lcm || lj == p.lcm
        });
        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let ge = &self.elems[g];
            let sugar = (lcm.degree() - hlead.degree() + hsugar)
                .max(lcm.degree() - ge.lead.degree() + ge.sugar);
            self.pairs.push(Pair {
                i: g,
                j: h,
                input: None,
                lcm,
                comp: hcomp,
                sugar,
            });
        }
        let elems = &self.elems;
        self.active
            .retain(|&g| !(elems[g].comp == hcomp && hlead.divides(&elems[g].lead)));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ord = &self.cfg.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let key = match self.cfg.selection {
                    Selection::Sugar => a.sugar.cmp(&b.sugar),
                    Selection::Normal => Ordering::Equal,
                };
                key.then_with(|| ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            elems: &self.elems,
            active: &self.active,
            ord: &self.cfg.order,
        }
    }

    fn check_degree(&self, v: &Vector, limits: &Limits) -> Result<()> {
        let d = v.max_mono_degree();
        if d > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "polynomial degree {d} exceeds the limit {}",
                limits.max_degree
            )));
        }
        let bits = v.terms.iter().map(|t| t.coeff.bits()).max().unwrap_or(0);
        if bits > limits.max_coeff_bits {
            return Err(Error::ResourceLimit(format!(
                "coefficient of {bits} bits exceeds the limit {}",
                limits.max_coeff_bits
            )));
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of the submodule generated by `input`.
///
/// Output elements are monic and sorted by increasing leading term. For
/// ideals the unit ideal comes back as the single constant `1`.
pub fn groebner(input: &[Vector], cfg: &GbConfig, limits: &Limits) -> Result<Vec<Vector>> {
    let (st, unit) = buchberger(input, cfg, limits, None)?;
    if let Some(u) = unit {
        return Ok(vec![u]);
    }
    Ok(interreduce(&st))
}

/// Basis computation that never pairs or reduces by elements whose leading
/// term lies outside component 0.
///
/// Returns the (non-reduced) elements with leading term in component 0 and
/// every vector whose component-0 part reduced to zero. With inputs
/// `v_i e_0 + e_i` under a position-over-term order the latter generate the
/// syzygies of `v` (Schreyer); the product criterion is off so that no pair
/// is skipped without a chain witness.
pub fn groebner_with_syzygies(
    input: &[Vector],
    cfg: &GbConfig,
    limits: &Limits,
) -> Result<(Vec<Vector>, Vec<Vector>)> {
    assert!(!cfg.ideal, "syzygy tracking needs the product criterion off");
    let mut syz = Vec::new();
    let (st, _) = buchberger(input, cfg, limits, Some(&mut syz))?;
    let basis = st.active.iter().map(|&i| st.elems[i].v.clone()).collect();
    Ok((basis, syz))
}

fn buchberger<'a>(
    input: &[Vector],
    cfg: &'a GbConfig,
    limits: &Limits,
    mut syz: Option<&mut Vec<Vector>>,
) -> Result<(State<'a>, Option<Vector>)> {
    let ord = cfg.order;
    let mut gens: Vec<(Vector, u32)> = input
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let s = v.degree(&cfg.shifts);
            (v.clone().monic(), s)
        })
        .collect();
    let mut st = State {
        cfg,
        elems: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = |v: &Vector| cfg.ideal && v.terms[0].mono.is_one();
    if let Some((v, _)) = gens.iter().find(|(v, _)| unit(v)) {
        let u = Vector {
            terms: vec![Term {
                mono: v.terms[0].mono.clone(),
                comp: 0,
                coeff: Rational::one(),
            }],
        };
        return Ok((st, Some(u)));
    }
    gens.sort_by(|(a, _), (b, _)| {
        let (x, y) = (&a.terms[0], &b.terms[0]);
        ord.cmp(&x.mono, x.comp, &y.mono, y.comp)
    });

    let mut insert = |st: &mut State<'a>, r: Vector, sugar: u32| -> Option<Vector> {
        if r.is_zero() {
            return None;
        }
        let r = r.monic();
        if unit(&r) {
            return Some(r);
        }
        if let Some(syz) = syz.as_deref_mut() {
            if r.terms[0].comp != 0 {
                syz.push(r);
                return None;
            }
        }
        st.elems.push(Elem::new(r, sugar));
        let h = st.elems.len() - 1;
        st.update(h);
        None
    };

    let mut inputs: Vec<Option<Vector>> = Vec::with_capacity(gens.len());
    for (k, (v, sugar)) in gens.into_iter().enumerate() {
        let t = &v.terms[0];
        st.pairs.push(Pair {
            i: 0,
            j: 0,
            input: Some(k),
            lcm: t.mono.clone(),
            comp: t.comp,
            sugar,
        });
        inputs.push(Some(v));
    }

    let mut processed = 0usize;
    while let Some(pair) = st.next_pair() {
        let (s, full) = match pair.input {
            Some(k) => (inputs[k].take().expect("input queued once"), true),
            None => {
                processed += 1;
                if processed > limits.max_pairs {
                    return Err(Error::ResourceLimit(format!(
                        "more than {} critical pairs processed",
                        limits.max_pairs
                    )));
                }
                (s_vector(&st.elems[pair.i], &st.elems[pair.j], &pair.lcm, &ord), false)
            }
        };
        if s.is_zero() {
            continue;
        }
        let (r, sugar) = st.reducer().reduce(s, pair.sugar, full);
        if r.is_zero() {
            continue;
        }
        st.check_degree(&r, limits)?;
        if let Some(u) = insert(&mut st, r, sugar) {
            return Ok((st, Some(u)));
        }
    }
    Ok((st, None))
}

/// Interreduces the active elements into the reduced basis.
fn interreduce(st: &State<'_>) -> Vec<Vector> {
    let ord = st.cfg.order;
    let mut active = st.active.clone();
    active.sort_by(|&a, &b| {
        let (x, y) = (&st.elems[a], &st.elems[b]);
        ord.cmp(&x.lead, x.comp, &y.lead, y.comp)
    });
    let mut out: Vec<Vector> = Vec::with_capacity(active.len());
    for (k, &idx) in active.iter().enumerate() {
        let others: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, &i)| i)
            .collect();
        let e = &st.elems[idx];
        let red = Reducer {
            elems: &st.elems,
            active: &others,
            ord: &ord,
        };
        // leads are pairwise non-divisible, so only the tail changes
        let lead = e.v.terms[0].clone();
        let tail = Vector {
            terms: e.v.terms[1..].to_vec(),
        };
        let (tail, _) = red.reduce(tail, 0, true);
        let mut terms = vec![lead];
        terms.extend(tail.terms);
        out.push(Vector { terms });
    }
    out
}

/// Full normal form of `v` modulo a Gröbner basis.
pub fn normal_form(v: &Vector, basis: &[Vector], ord: &TermOrder) -> Vector {
    let elems: Vec<Elem> = basis.iter().map(|b| Elem::new(b.clone(), 0)).collect();
    let active: Vec<usize> = (0..elems.len()).collect();
    let red = Reducer {
        elems: &elems,
        active: &active,
        ord,
    };
    red.reduce(v.clone(), 0, true).0
}

/// Reusable reducer over a fixed Gröbner basis.
pub struct NormalForm {
    elems: Vec<Elem>,
    active: Vec<usize>,
    ord: TermOrder,
}

impl NormalForm {
    pub fn new(basis: &[Vector], ord: TermOrder) -> Self {
        let elems: Vec<Elem> = basis.iter().map(|b| Elem::new(b.clone(), 0)).collect();
        let active = (0..elems.len()).collect();
        NormalForm { elems, active, ord }
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        Reducer {
            elems: &self.elems,
            active: &self.active,
            ord: &self.ord,
        }
        .reduce(v, 0, true)
        .0
    }

    pub fn order(&self) -> &TermOrder {
        &self.ord
    }
}

/// Every S-vector of `basis` reduces to zero modulo `basis`.
pub fn is_groebner(basis: &[Vector], ord: &TermOrder) -> bool {
    let nf = NormalForm::new(basis, *ord);
    for i in 0..nf.elems.len() {
        for j in (i + 1)..nf.elems.len() {
            let (a, b) = (&nf.elems[i], &nf.elems[j]);
            if a.comp != b.comp {
                continue;
            }
            let lcm = a.lead.lcm(&b.lead);
            let s = s_vector(a, b, &lcm, ord);
            if !nf.reduce(s).is_zero() {
                return false;
            }
        }
    }
    true
}
