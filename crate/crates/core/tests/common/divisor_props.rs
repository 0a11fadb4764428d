//! Randomized checks of the ladder and the criteria on small reduced
//! divisors (n <= 3, degree <= 4).

use divlab::criteria::{analyze, check_reduced, AnalyzeOptions};
use divlab::logder::{logarithmic_derivations, Derivation, SaitoData};
use divlab::strata::{minor_ladder, MinorLadder};
use divlab::{Error, Ideal, Limits, Polynomial, Ring};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::ideal_props::runner;
use super::*;

fn vars(n: usize) -> &'static str {
    ["x", "x,y", "x,y,z"][n - 1]
}

fn without_constant(f: Polynomial) -> Polynomial {
    let c = Polynomial::constant(f.ring(), f.constant_term());
    &f - &c
}

fn product(fs: Vec<Polynomial>) -> Polynomial {
    let mut it = fs.into_iter();
    let first = without_constant(it.next().unwrap());
    it.fold(first, |acc, g| &acc * &g)
}

/// Nonconstant polynomials of degree at most 4 through the origin: sparse
/// ones, and products of a few low-degree factors (at least one through the
/// origin) so that singular loci of positive dimension show up.
pub fn arb_input(ring: Ring) -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        arb_poly(ring.clone(), 4, 4).prop_map(without_constant),
        proptest::collection::vec(arb_poly(ring.clone(), 2, 3), 2).prop_map(product),
        proptest::collection::vec(arb_poly(ring, 1, 3), 2..=4).prop_map(product),
    ]
    .prop_filter("degree <= 4, nonconstant", |f| {
        f.total_degree().is_some_and(|d| (1..=4).contains(&d))
    })
}

/// Reduced inputs in 2 or 3 variables.
pub fn arb_divisor() -> impl Strategy<Value = Polynomial> {
    (2usize..=3).prop_flat_map(|n| arb_input(ring(vars(n)))).prop_filter("reduced", |f| {
        check_reduced(f, &Limits::default()).is_ok_and(|v| v.value)
    })
}

fn lift(e: Error) -> TestCaseError {
    match e {
        Error::ResourceLimit(m) => TestCaseError::reject(m),
        e => TestCaseError::fail(e.to_string()),
    }
}

fn ladder_of(f: &Polynomial, l: &Limits) -> Result<(SaitoData, MinorLadder), TestCaseError> {
    let sd = logarithmic_derivations(f, l).map_err(lift)?;
    let ladder = minor_ladder(&sd, l).map_err(lift)?;
    Ok((sd, ladder))
}

fn check(ok: Result<bool, Error>, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok.map_err(lift)? {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

fn run(cases: u32, strategy: impl Strategy<Value = Polynomial>, test: impl Fn(Polynomial) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// (a) `Ĩ_{k+1} ⊆ I_{k+1} + (∂f:f) I_k ⊆ I_k ⊆ Ĩ_k`.
pub fn ladder_chain(cases: u32) -> Result<(), String> {
    let l = Limits::default();
    run(cases, arb_divisor(), |f| {
        let (_, ladder) = ladder_of(&f, &l)?;
        for k in 0..ladder.n() {
            let bridge = ladder.minors(k + 1).sum(&ladder.colon().product(ladder.minors(k)));
            check(bridge.contains_ideal(ladder.extended_minors(k + 1), &l), || {
                format!("{f}: Itilde_{} not in the bridge", k + 1)
            })?;
            check(ladder.minors(k).contains_ideal(&bridge, &l), || format!("{f}: bridge not in I_{k}"))?;
            check(ladder.extended_minors(k).contains_ideal(ladder.minors(k), &l), || {
                format!("{f}: I_{k} not in Itilde_{k}")
            })?;
        }
        Ok(())
    })
}

/// (b) `√I_n = √(f)` and `√Ĩ_n = √J_f`.
pub fn top_radicals(cases: u32) -> Result<(), String> {
    let l = Limits::default();
    run(cases, arb_divisor(), |f| {
        let (_, ladder) = ladder_of(&f, &l)?;
        let n = ladder.n();
        let r = f.ring();
        check(ladder.minors(n).radical_equal(&Ideal::new(r, [f.clone()]), &l), || {
            format!("{f}: sqrt(I_n) != sqrt(f)")
        })?;
        let mut jac: Vec<Polynomial> = (0..n).map(|j| f.partial_derivative(j).unwrap()).collect();
        jac.push(f.clone());
        check(ladder.extended_minors(n).radical_equal(&Ideal::new(r, jac), &l), || {
            format!("{f}: sqrt(Itilde_n) != sqrt(J_f)")
        })
    })
}

/// (c) Every reduced plane curve is Saito-holonomic.
pub fn plane_curves_are_sh(cases: u32) -> Result<(), String> {
    let strategy = arb_input(ring("x,y"))
        .prop_filter("reduced", |f| check_reduced(f, &Limits::default()).is_ok_and(|v| v.value));
    run(cases, strategy, |f| {
        let report = analyze(&f, &AnalyzeOptions::default()).map_err(lift)?;
        let sh = report.saito_holonomicity.unwrap();
        prop_assert!(sh.weak.value && sh.plain.value, "{f}");
        Ok(())
    })
}

/// A random `Q[x]`-combination of the generators, with degree-0 and
/// degree-1 coefficients.
fn combination(sd: &SaitoData, seed: &[i64]) -> Derivation {
    let r = sd.ring();
    let n = r.n();
    let mut coeffs = vec![Polynomial::zero(r); n];
    let mut cofactor = Polynomial::zero(r);
    for (i, d) in sd.derivations().iter().enumerate() {
        let c0 = seed[(2 * i) % seed.len()];
        let c1 = seed[(2 * i + 1) % seed.len()];
        let c = &Polynomial::constant(r, Rational::from_int(c0))
            + &Polynomial::var(r, i % n).scale(&Rational::from_int(c1));
        for (j, a) in d.coefficients().iter().enumerate() {
            coeffs[j] = &coeffs[j] + &(&c * a);
        }
        cofactor = &cofactor + &(&c * d.cofactor());
    }
    Derivation::new(sd.f(), coeffs, cofactor).unwrap()
}

/// (d) The ladder ideals do not change when a combination of the
/// generators is appended to the generating set.
pub fn augmentation_invariance(cases: u32) -> Result<(), String> {
    let l = Limits::default();
    let strategy = (arb_divisor(), proptest::collection::vec(-3i64..=3, 4));
    runner(cases)
        .run(&strategy, |(f, seed)| {
            let (sd, ladder) = ladder_of(&f, &l)?;
            let mut ders = sd.derivations().to_vec();
            ders.push(combination(&sd, &seed));
            let bigger = SaitoData::from_derivations(&f, ders).unwrap();
            let other = minor_ladder(&bigger, &l).map_err(lift)?;
            for k in 1..=ladder.n() {
                check(ladder.minors(k).equals(other.minors(k), &l), || format!("{f}: I_{k} changed"))?;
                check(ladder.extended_minors(k).equals(other.extended_minors(k), &l), || {
                    format!("{f}: Itilde_{k} changed")
                })?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// (e) For `f(x, y, z) = g(y, z)`: `dim D_0 = dim D̃_0 = -1` and
/// `dim D_i = dim D'_{i-1} + 1` (both empty together), likewise for the
/// extended ladder; the three Saito-holonomicity verdicts agree.
pub fn product_shift(cases: u32) -> Result<(), String> {
    let small = ring("y,z");
    let big = ring("x,y,z");
    let strategy = arb_input(small)
        .prop_filter("reduced", |g| check_reduced(g, &Limits::default()).is_ok_and(|v| v.value));
    run(cases, strategy, |g| {
        let f = g.embed(&big, &[1, 2]);
        let options = AnalyzeOptions::default();
        let rg = analyze(&g, &options).map_err(lift)?;
        let rf = analyze(&f, &options).map_err(lift)?;
        let shift = |d: &[i32]| -> Vec<i32> {
            std::iter::once(-1).chain(d.iter().map(|&x| if x < 0 { -1 } else { x + 1 })).collect()
        };
        prop_assert_eq!(&rf.ladder.dims_d, &shift(&rg.ladder.dims_d), "{}", f);
        prop_assert_eq!(&rf.ladder.dims_d_ext, &shift(&rg.ladder.dims_d_ext), "{}", f);
        let (sf, sg) = (rf.saito_holonomicity.unwrap(), rg.saito_holonomicity.unwrap());
        prop_assert_eq!(sf.weak.value, sg.weak.value, "{}", f);
        prop_assert_eq!(sf.plain.value, sg.plain.value, "{}", f);
        prop_assert_eq!(sf.strong.value, sg.strong.value, "{}", f);
        prop_assert!(rf.product.value, "{}", f);
        Ok(())
    })
}

/// (f) Saito-holonomic divisors are strongly Saito-holonomic exactly when
/// they are strongly Euler-homogeneous.
pub fn sh_strong_iff_seh(cases: u32) -> Result<(), String> {
    run(cases, arb_divisor(), |f| {
        let report = analyze(&f, &AnalyzeOptions::default()).map_err(lift)?;
        let sh = report.saito_holonomicity.unwrap();
        let seh = report.seh.unwrap().everywhere.value;
        if sh.plain.value {
            prop_assert_eq!(sh.strong.value, seh, "{}", f);
        }
        Ok(())
    })
}
