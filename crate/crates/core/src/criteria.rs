//! Decision procedures composed from the Saito data and the minor ladder,
//! each returning a verdict with the facts it was decided from.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{Ideal, Limits};
use crate::logder::{
    all_topologically_nilpotent, exists_nonzero_trace, free_basis_at_origin, is_linear_free,
    is_product_at_origin, is_quasi_homogeneous, is_seh_at_point, logarithmic_derivations,
    singular_linear_part_space, Derivation, FreeBasis, LinearPartSpace, SaitoData,
};
use crate::poly::{Point, Polynomial, Ring};
use crate::strata::{minor_ladder, MinorLadder};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Detail {
    Ideal(Vec<String>),
    Derivation { coefficients: Vec<String>, cofactor: String },
    Dimensions(Vec<i32>),
    Dimension(i32),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evidence {
    pub label: String,
    #[serde(flatten)]
    pub detail: Detail,
}

impl Evidence {
    pub fn ideal(label: impl Into<String>, ideal: &Ideal) -> Self {
        Evidence {
            label: label.into(),
            detail: Detail::Ideal(ideal.generators().iter().map(Polynomial::to_string).collect()),
        }
    }

    pub fn derivation(label: impl Into<String>, d: &Derivation) -> Self {
        Evidence {
            label: label.into(),
            detail: Detail::Derivation {
                coefficients: d.coefficients().iter().map(Polynomial::to_string).collect(),
                cofactor: d.cofactor().to_string(),
            },
        }
    }

    pub fn text(label: impl Into<String>, text: impl Into<String>) -> Self {
        Evidence {
            label: label.into(),
            detail: Detail::Text(text.into()),
        }
    }

    pub fn dims(label: impl Into<String>, dims: &[i32]) -> Self {
        Evidence {
            label: label.into(),
            detail: Detail::Dimensions(dims.to_vec()),
        }
    }
}

fn is_true(b: &bool) -> bool {
    *b
}

/// A boolean answer with supporting facts. An inapplicable check has value
/// `true` (nothing was found against it) and `applicable = false`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "is_true")]
    pub applicable: bool,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

impl Verdict {
    pub fn new(value: bool, evidence: Vec<Evidence>) -> Self {
        Verdict {
            value,
            evidence,
            applicable: true,
            warnings: Vec::new(),
        }
    }

    pub fn inapplicable(evidence: Vec<Evidence>) -> Self {
        Verdict {
            value: true,
            evidence,
            applicable: false,
            warnings: Vec::new(),
        }
    }

    /// Text of the first evidence item labelled `fails`.
    pub fn failure(&self) -> Option<&str> {
        self.evidence.iter().find_map(|e| match (&e.label[..], &e.detail) {
            ("fails", Detail::Text(t)) => Some(t.as_str()),
            _ => None,
        })
    }

    fn with_warning(mut self, w: Option<String>) -> Self {
        self.warnings.extend(w);
        self
    }
}

const GLOBAL_WARNING: &str = "f is not quasi-homogeneous: dimensions and radicals are computed globally and may see components away from the origin";

fn check_input(f: &Polynomial) -> Result<()> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::Precondition("f must be nonconstant".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::Precondition("f must vanish at the origin".into()));
    }
    Ok(())
}

/// Reducedness: `dim V(J_f) ≤ n - 2`.
pub fn check_reduced(f: &Polynomial, limits: &Limits) -> Result<Verdict> {
    check_input(f)?;
    let ring = f.ring();
    let n = ring.n() as i32;
    let mut gens: Vec<Polynomial> = (0..ring.n()).map(|j| f.partial_derivative(j)).collect::<Result<_>>()?;
    gens.push(f.clone());
    let dim = Ideal::new(ring, gens).dimension(limits)?;
    let mut ev = vec![Evidence {
        label: "dim Sing D".into(),
        detail: Detail::Dimension(dim),
    }];
    let value = dim <= n - 2;
    if !value {
        ev.push(Evidence::text("fails", format!("dim Sing D = {dim} > {}", n - 2)));
    }
    Ok(Verdict::new(value, ev))
}

/// A logarithmic derivation not vanishing at the origin.
pub fn check_product(sd: &SaitoData) -> Verdict {
    match is_product_at_origin(sd) {
        Some(i) => Verdict::new(true, vec![Evidence::derivation("nonsingular derivation", &sd.derivations()[i])]),
        None => Verdict::new(false, vec![Evidence::text("fails", "every generator vanishes at the origin")]),
    }
}

/// Saito's criterion at the origin over the generating set.
pub fn check_free(sd: &SaitoData) -> Result<(Verdict, FreeBasis)> {
    let basis = free_basis_at_origin(sd)?;
    let verdict = match &basis {
        FreeBasis::Basis {
            indices, determinant, ..
        } => {
            let mut ev: Vec<Evidence> = indices
                .iter()
                .map(|&i| Evidence::derivation(format!("basis δ{}", i + 1), &sd.derivations()[i]))
                .collect();
            ev.push(Evidence::text("det", determinant.to_string()));
            Verdict::new(true, ev)
        }
        FreeBasis::NotFree { tried } => Verdict::new(
            false,
            vec![Evidence::text(
                "fails",
                format!("none of the {} subsets of size {} has det = unit * f", tried.len(), sd.ring().n()),
            )],
        ),
    };
    Ok((verdict, basis))
}

/// A global basis of linear logarithmic derivations.
pub fn check_linear_free(f: &Polynomial) -> Result<Verdict> {
    if f.homogeneous_degree()?.is_none() {
        return Ok(Verdict::new(false, vec![Evidence::text("fails", "f is not homogeneous")]));
    }
    Ok(match is_linear_free(f)? {
        Some(basis) => Verdict::new(
            true,
            basis
                .iter()
                .enumerate()
                .map(|(i, d)| Evidence::derivation(format!("linear basis δ{}", i + 1), d))
                .collect(),
        ),
        None => Verdict::new(false, vec![Evidence::text("fails", "no linear basis")]),
    })
}

fn quasi_warning(f: &Polynomial) -> Option<String> {
    (!is_quasi_homogeneous(f)).then(|| GLOBAL_WARNING.to_string())
}

/// `Ĩ_1 = (1)`.
pub fn check_seh_on_d0(ladder: &MinorLadder, limits: &Limits) -> Result<Verdict> {
    let i1 = ladder.extended_minors(1);
    let value = i1.is_unit(limits)?;
    let mut ev = vec![Evidence::ideal("Itilde_1", i1)];
    if !value {
        ev.push(Evidence::text("fails", "Itilde_1 != (1)"));
    }
    Ok(Verdict::new(value, ev).with_warning(quasi_warning(ladder.f())))
}

/// `√Ĩ_{i+1} = √I_i` for `i = 1..n-2`.
pub fn check_seh_off_d0(ladder: &MinorLadder, limits: &Limits) -> Result<Verdict> {
    let n = ladder.n();
    let mut ev = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let (ext, plain) = (ladder.extended_minors(i + 1), ladder.minors(i));
        if !ext.radical_equal(plain, limits)? {
            ev.push(Evidence::ideal(format!("Itilde_{}", i + 1), ext));
            ev.push(Evidence::ideal(format!("I_{i}"), plain));
            ev.push(Evidence::text("fails", format!("sqrt(Itilde_{}) != sqrt(I_{i})", i + 1)));
            return Ok(Verdict::new(false, ev).with_warning(quasi_warning(ladder.f())));
        }
        ev.push(Evidence::text(format!("level {i}"), format!("sqrt(Itilde_{}) = sqrt(I_{i})", i + 1)));
    }
    Ok(Verdict::new(true, ev).with_warning(quasi_warning(ladder.f())))
}

/// Conjunction of the two checks above.
pub fn check_seh(on_d0: &Verdict, off_d0: &Verdict) -> Verdict {
    let mut ev = Vec::new();
    for v in [on_d0, off_d0] {
        if let Some(f) = v.failure() {
            ev.push(Evidence::text("fails", f));
        }
    }
    let mut v = Verdict::new(on_d0.value && off_d0.value, ev);
    v.warnings = on_d0.warnings.clone();
    v
}

fn bounded(dims: &[i32], range: std::ops::Range<usize>, slack: i32, name: &str) -> (bool, Vec<Evidence>) {
    let mut ev = vec![Evidence::dims(name, dims)];
    for i in range {
        if dims[i] > i as i32 - slack {
            let set = if name == "dims_D_ext" { "Dtilde" } else { "D" };
            ev.push(Evidence::text("fails", format!("dim {set}_{i} = {} > {}", dims[i], i as i32 - slack)));
            return (false, ev);
        }
    }
    (true, ev)
}

/// Weak: `dim D̃_i ≤ i` for `i = 0..n-3`.
pub fn check_weak_sh(ladder: &MinorLadder) -> Verdict {
    let n = ladder.n();
    let (value, ev) = bounded(ladder.dims_d_ext(), 0..n.saturating_sub(2), 0, "dims_D_ext");
    Verdict::new(value, ev).with_warning(quasi_warning(ladder.f()))
}

/// Plain: `dim D_i ≤ i` for `i = 0..n-3`.
pub fn check_sh(ladder: &MinorLadder) -> Verdict {
    let n = ladder.n();
    let (value, ev) = bounded(ladder.dims_d(), 0..n.saturating_sub(2), 0, "dims_D");
    Verdict::new(value, ev).with_warning(quasi_warning(ladder.f()))
}

/// Strong: `Ĩ_1 = (1)` and `dim D̃_i ≤ i - 1` for `i = 1..n-2`.
pub fn check_strong_sh(ladder: &MinorLadder) -> Verdict {
    let n = ladder.n();
    let dims = ladder.dims_d_ext();
    if dims[0] >= 0 {
        let ev = vec![
            Evidence::dims("dims_D_ext", dims),
            Evidence::text("fails", "Itilde_1 != (1)"),
        ];
        return Verdict::new(false, ev).with_warning(quasi_warning(ladder.f()));
    }
    let (value, ev) = bounded(dims, 1..n.saturating_sub(1), 1, "dims_D_ext");
    Verdict::new(value, ev).with_warning(quasi_warning(ladder.f()))
}

/// A singular derivation with nonzero trace; only meaningful for free
/// divisors.
pub fn check_lct_trace_necessary(space: &LinearPartSpace, free: bool) -> Verdict {
    let mut ev = vec![Evidence::text("linear part space dimension", space.dim().to_string())];
    if !free {
        ev.push(Evidence::text("inapplicable", "the divisor is not free at the origin"));
        return Verdict::inapplicable(ev);
    }
    if exists_nonzero_trace(space) {
        ev.push(Evidence::text("result", "no obstruction found"));
        Verdict::new(true, ev)
    } else {
        let nil = all_topologically_nilpotent(space);
        ev.push(Evidence::text("all nilpotent", nil.to_string()));
        ev.push(Evidence::text("fails", "every singular derivation has zero trace: LCT impossible"));
        Verdict::new(false, ev)
    }
}

/// `√Ĩ_1 = √((∂f:f) + (f))`, required when the divisor is strongly
/// Euler-homogeneous off `D_0`.
pub fn check_colon_consistency(ladder: &MinorLadder, seh_off_d0: bool, limits: &Limits) -> Result<Verdict> {
    let i1 = ladder.extended_minors(1);
    let colon = ladder.colon();
    // D̃_0 lies on D; away from D the colon ideal also vanishes at the
    // critical points of f, so compare along D
    let along_d = colon.sum(&Ideal::new(colon.ring(), [ladder.f().clone()]));
    let equal = i1.radical_equal(&along_d, limits)?;
    let mut ev = vec![Evidence::ideal("Itilde_1", i1), Evidence::ideal("colon", colon)];
    ev.push(Evidence::text(
        "radicals",
        if equal { "sqrt(Itilde_1) = sqrt(colon)" } else { "sqrt(Itilde_1) != sqrt(colon)" },
    ));
    if !seh_off_d0 {
        ev.push(Evidence::text("inapplicable", "not strongly Euler-homogeneous off D_0"));
        return Ok(Verdict::inapplicable(ev));
    }
    if !equal {
        ev.push(Evidence::text("fails", "sqrt(Itilde_1) != sqrt(colon)"));
    }
    Ok(Verdict::new(equal, ev))
}

/// Kernels of `φ: O[ξ, s] → O[t]`, `ξ_j ↦ ∂_j f t`, `s ↦ f t`: the
/// degree-one part generated by `Σ_j a_ij ξ_j - α_i s`, and the full kernel.
#[derive(Clone, Debug)]
pub struct ReesKernelData {
    pub ring: Ring,
    pub ker1: Ideal,
    pub ker: Ideal,
}

fn rees_ring(ring: &Ring) -> Ring {
    let n = ring.n();
    let mut suffix: Vec<String> = (1..=n).map(|j| format!("xi{j}")).collect();
    suffix.push("s".into());
    ring.extended(&[] as &[String], &suffix)
}

/// `ker1` over `Q[x, ξ, s]`.
pub fn rees_degree_one_kernel(sd: &SaitoData) -> Ideal {
    let ring = rees_ring(sd.ring());
    let n = sd.ring().n();
    let lift: Vec<usize> = (0..n).collect();
    Ideal::new(
        &ring,
        sd.derivations().iter().map(|d| {
            let mut sigma = Polynomial::zero(&ring);
            for (j, a) in d.coefficients().iter().enumerate() {
                sigma = &sigma + &(&a.embed(&ring, &lift) * &Polynomial::var(&ring, n + j));
            }
            &sigma - &(&d.cofactor().embed(&ring, &lift) * &Polynomial::var(&ring, 2 * n))
        }),
    )
}

/// The full kernel as the graph ideal `(ξ_j - t ∂_j f, s - t f)` with `t`
/// eliminated.
pub fn rees_kernel_by_elimination(f: &Polynomial, limits: &Limits) -> Result<Ideal> {
    let n = f.ring().n();
    let big = rees_ring(f.ring()).extended(&["t"], &[]);
    let lift: Vec<usize> = (1..=n).collect();
    let var = |i: usize| Polynomial::var(&big, i);
    let (t, s) = (var(0), var(2 * n + 1));
    let mut graph = Vec::with_capacity(n + 1);
    for j in 0..n {
        let dj = f.partial_derivative(j)?.embed(&big, &lift);
        graph.push(&var(n + 1 + j) - &(&t * &dj));
    }
    graph.push(&s - &(&t * &f.embed(&big, &lift)));
    Ideal::new(&big, graph).eliminate(1, limits)
}

/// Both kernels. The full one is `ker1 : f^∞`: after inverting `f` the
/// Jacobian ideal is the unit ideal, where the symmetric and Rees algebras
/// agree, and the Rees algebra has no `f`-torsion.
pub fn rees_kernel_data(sd: &SaitoData, limits: &Limits) -> Result<ReesKernelData> {
    let ker1 = rees_degree_one_kernel(sd);
    let ring = ker1.ring().clone();
    let f = sd.f().embed(&ring, &(0..sd.ring().n()).collect::<Vec<_>>());
    let ker = ker1.saturation(&f, limits)?;
    Ok(ReesKernelData { ring, ker1, ker })
}

/// Linear Jacobian type: the kernel is generated in degree one, i.e.
/// `ker1 : f^∞ = ker1`.
pub fn check_linear_jacobian_type(sd: &SaitoData, limits: &Limits) -> Result<Verdict> {
    let ker1 = rees_degree_one_kernel(sd);
    let f = sd.f().embed(ker1.ring(), &(0..sd.ring().n()).collect::<Vec<_>>());
    let q = ker1.saturation(&f, limits)?;
    let gb = ker1.groebner_basis(limits)?;
    let mut ev = vec![Evidence::text("ker1 generators", ker1.generators().len().to_string())];
    for g in q.generators() {
        if !gb.reduces_to_zero(g) {
            ev.push(Evidence::text("fails", format!("{g} lies in ker but not in ker1")));
            return Ok(Verdict::new(false, ev));
        }
    }
    Ok(Verdict::new(true, ev))
}

/// Which groups of checks `analyze` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub seh: bool,
    pub sh: bool,
    pub free: bool,
    pub trace: bool,
    pub colon: bool,
    pub ljt: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            seh: true,
            sh: true,
            free: true,
            trace: true,
            colon: true,
            ljt: false,
        }
    }
}

impl FromStr for Checks {
    type Err = Error;

    /// Comma-separated subset of `seh,sh,free,trace,colon,ljt`.
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Checks {
            seh: false,
            sh: false,
            free: false,
            trace: false,
            colon: false,
            ljt: false,
        };
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "seh" => c.seh = true,
                "sh" => c.sh = true,
                "free" => c.free = true,
                "trace" => c.trace = true,
                "colon" => c.colon = true,
                "ljt" => c.ljt = true,
                other => {
                    return Err(Error::Syntax {
                        pos: 0,
                        msg: format!("unknown check `{other}` (expected seh, sh, free, trace, colon, ljt)"),
                    })
                }
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub checks: Checks,
    pub points: Vec<Point>,
    pub limits: Limits,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub poly: String,
    pub vars: Vec<String>,
    pub homogeneous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SehReport {
    #[serde(rename = "on_D0")]
    pub on_d0: Verdict,
    #[serde(rename = "off_D0")]
    pub off_d0: Verdict,
    pub everywhere: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShReport {
    pub weak: Verdict,
    pub plain: Verdict,
    pub strong: Verdict,
    /// Free divisors: weak, plain and strong Koszul-freeness coincide with
    /// these.
    pub koszul_alias: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderSummary {
    #[serde(rename = "dims_D")]
    pub dims_d: Vec<i32>,
    #[serde(rename = "dims_D_ext")]
    pub dims_d_ext: Vec<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub p: Vec<String>,
    pub seh: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    pub input: InputEcho,
    pub reduced: Verdict,
    pub product: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_free: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seh: Option<SehReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saito_holonomicity: Option<ShReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lct_trace_necessary: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colon_consistency: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_jacobian_type: Option<Verdict>,
    pub ladder: LadderSummary,
    pub points: Vec<PointReport>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub derivations: Vec<Derivation>,
    #[serde(skip)]
    pub seh_at_origin: Option<bool>,
}

impl DivisorReport {
    /// Implications that must hold between the verdicts; returns the ones
    /// violated.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(sh) = &self.saito_holonomicity {
            if sh.strong.value && !sh.plain.value {
                out.push("strong_sh without sh".into());
            }
            if sh.plain.value && !sh.weak.value {
                out.push("sh without weak_sh".into());
            }
            if let Some(seh) = &self.seh {
                if sh.plain.value && sh.strong.value != seh.everywhere.value {
                    out.push("sh holds but strong_sh != seh".into());
                }
                if sh.strong.value && !seh.everywhere.value {
                    out.push("strong_sh without seh".into());
                }
            }
            if let Some(ljt) = &self.linear_jacobian_type {
                if ljt.value && !sh.strong.value {
                    out.push("linear Jacobian type without strong_sh".into());
                }
            }
        }
        if let (Some(seh), Some(at0)) = (&self.seh, self.seh_at_origin) {
            if seh.everywhere.value && !at0 {
                out.push("seh holds but the origin fails the rank test".into());
            }
        }
        if let Some(tr) = &self.lct_trace_necessary {
            if self.input.homogeneous && tr.applicable && !tr.value {
                out.push("homogeneous f without a nonzero trace".into());
            }
        }
        out
    }
}

/// Runs the selected checks on `f`.
pub fn analyze(f: &Polynomial, options: &AnalyzeOptions) -> Result<DivisorReport> {
    let limits = &options.limits;
    let checks = options.checks;
    let ring = f.ring();
    let n = ring.n();
    for p in &options.points {
        if p.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.dim() });
        }
        if !f.evaluate(p)?.is_zero() {
            return Err(Error::Precondition(format!("point {p} is not on the divisor")));
        }
    }
    let reduced = check_reduced(f, limits)?;
    if !reduced.value {
        return Err(Error::Precondition(format!(
            "f is not reduced ({})",
            reduced.failure().unwrap_or_default()
        )));
    }
    let degree = f.homogeneous_degree()?;
    let input = InputEcho {
        poly: f.to_string(),
        vars: ring.names().to_vec(),
        homogeneous: degree.is_some(),
        degree,
    };
    let mut warnings: Vec<String> = Vec::new();
    let sd = logarithmic_derivations(f, limits)?;
    let product = check_product(&sd);
    let ladder = minor_ladder(&sd, limits)?;

    let needs_free = checks.free || checks.trace || checks.sh;
    let (free, basis) = if needs_free {
        let (v, b) = check_free(&sd)?;
        (Some(v), Some(b))
    } else {
        (None, None)
    };
    let is_free = basis.as_ref().is_some_and(FreeBasis::is_free);
    let linear_free = if checks.free { Some(check_linear_free(f)?) } else { None };

    let needs_seh = checks.seh || checks.colon || checks.sh;
    let seh = if needs_seh {
        let on_d0 = check_seh_on_d0(&ladder, limits)?;
        let off_d0 = check_seh_off_d0(&ladder, limits)?;
        let everywhere = check_seh(&on_d0, &off_d0);
        Some(SehReport {
            on_d0,
            off_d0,
            everywhere,
        })
    } else {
        None
    };
    let saito_holonomicity = checks.sh.then(|| ShReport {
        weak: check_weak_sh(&ladder),
        plain: check_sh(&ladder),
        strong: check_strong_sh(&ladder),
        koszul_alias: is_free,
    });
    let lct_trace_necessary = if checks.trace {
        let space = singular_linear_part_space(&sd);
        let mut v = check_lct_trace_necessary(&space, is_free);
        if !is_quasi_homogeneous(f) {
            v.warnings
                .push("linear parts are relative to the computed generating set".into());
        }
        Some(v)
    } else {
        None
    };
    let colon_consistency = match (&seh, checks.colon) {
        (Some(s), true) => Some(check_colon_consistency(&ladder, s.off_d0.value, limits)?),
        _ => None,
    };
    let linear_jacobian_type = if checks.ljt {
        Some(check_linear_jacobian_type(&sd, limits)?)
    } else {
        None
    };

    let mut points = Vec::with_capacity(options.points.len());
    for p in &options.points {
        let (value, witness) = is_seh_at_point(&sd, p)?;
        points.push(PointReport {
            p: p.0.iter().map(ToString::to_string).collect(),
            seh: value,
            witness: witness.map(|w| w.to_string()),
        });
    }
    let origin = Point::origin(n);
    let seh_at_origin = if ladder.dims_d()[0] >= 0 || n == 1 {
        Some(is_seh_at_point(&sd, &origin)?.0)
    } else {
        None
    };

    let seh = if checks.seh { seh } else { None };
    let all = [
        Some(&reduced),
        Some(&product),
        free.as_ref(),
        linear_free.as_ref(),
        seh.as_ref().map(|s| &s.on_d0),
        seh.as_ref().map(|s| &s.off_d0),
        saito_holonomicity.as_ref().map(|s| &s.weak),
        lct_trace_necessary.as_ref(),
        colon_consistency.as_ref(),
    ];
    for v in all.into_iter().flatten() {
        for w in &v.warnings {
            if !warnings.contains(w) {
                warnings.push(w.clone());
            }
        }
    }
    Ok(DivisorReport {
        input,
        reduced,
        product,
        free: if checks.free { free } else { None },
        linear_free,
        seh,
        saito_holonomicity,
        lct_trace_necessary,
        colon_consistency,
        linear_jacobian_type,
        ladder: LadderSummary {
            dims_d: ladder.dims_d().to_vec(),
            dims_d_ext: ladder.dims_d_ext().to_vec(),
        },
        points,
        warnings,
        derivations: sd.derivations().to_vec(),
        seh_at_origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn run(vars: &str, f: &str) -> DivisorReport {
        let r = Ring::from_list(vars).unwrap();
        let f = parse_polynomial(f, &r).unwrap();
        analyze(&f, &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn normal_crossing_report() {
        let rep = run("x,y,z", "x*y*z");
        assert!(rep.free.as_ref().unwrap().value);
        assert!(rep.linear_free.as_ref().unwrap().value);
        assert!(rep.seh.as_ref().unwrap().everywhere.value);
        let sh = rep.saito_holonomicity.as_ref().unwrap();
        assert!(sh.weak.value && sh.plain.value && sh.strong.value && sh.koszul_alias);
        assert!(rep.lct_trace_necessary.as_ref().unwrap().value);
        assert!(rep.colon_consistency.as_ref().unwrap().value);
        assert!(rep.consistency_violations().is_empty());
        assert!(rep.warnings.is_empty());
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["seh"]["everywhere"]["value"], true);
        assert!(json["seh"]["on_D0"]["evidence"].is_array());
        assert!(json["seh"]["on_D0"].get("applicable").is_none());
        assert_eq!(json["ladder"]["dims_D"], serde_json::json!([0, 1, 2]));
    }

    #[test]
    fn non_reduced_input_is_a_precondition_error() {
        let r = Ring::from_list("x,y").unwrap();
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert!(matches!(analyze(&f, &AnalyzeOptions::default()), Err(Error::Precondition(_))));
        assert!(!check_reduced(&f, &Limits::default()).unwrap().value);
    }

    #[test]
    fn check_selection() {
        let c: Checks = "seh, ljt".parse().unwrap();
        assert!(c.seh && c.ljt && !c.sh && !c.free);
        assert!("seh,bogus".parse::<Checks>().is_err());
        let r = Ring::from_list("x,y").unwrap();
        let f = parse_polynomial("x*y", &r).unwrap();
        let opts = AnalyzeOptions {
            checks: "sh".parse().unwrap(),
            ..Default::default()
        };
        let rep = analyze(&f, &opts).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        assert!(json.get("seh").is_none());
        assert!(json.get("saito_holonomicity").is_some());
    }

    #[test]
    fn linear_jacobian_type_of_smooth_and_crossing() {
        let l = Limits::default();
        for (vars, f) in [("x,y", "x"), ("x,y", "x*y")] {
            let r = Ring::from_list(vars).unwrap();
            let f = parse_polynomial(f, &r).unwrap();
            let sd = logarithmic_derivations(&f, &l).unwrap();
            assert!(check_linear_jacobian_type(&sd, &l).unwrap().value);
        }
    }
}
