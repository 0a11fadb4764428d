//! Randomized checks of the ideal engine against the oracles in `common`.

use divlab::ideals::{prune_generators, syzygies, Limits, ModuleVector, Submodule};
use divlab::{Ideal, Monomial, PolyMatrix, Polynomial, Rational, Ring};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::*;

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn lead(f: &Polynomial) -> &Monomial {
    &f.terms()[0].0
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let l = lead(f).lcm(lead(g));
    let (cf, cg) = (&f.terms()[0].1, &g.terms()[0].1);
    let a = f.mul_monomial(&lead(f).quotient_of(&l).unwrap(), &cf.recip().unwrap());
    let b = g.mul_monomial(&lead(g).quotient_of(&l).unwrap(), &cg.recip().unwrap());
    &a - &b
}

/// Every S-polynomial of the reduced basis reduces to zero, and membership of
/// homogeneous targets agrees with the truncated linear-algebra oracle.
pub fn groebner_membership(cases: u32) -> Result<(), String> {
    let r = ring("x,y,z");
    let gens = proptest::collection::vec(arb_homogeneous(r.clone(), 2, 3), 1..=3);
    let mult = proptest::collection::vec(arb_homogeneous(r.clone(), 2, 3), 3);
    let noise = arb_homogeneous(r.clone(), 4, 4);
    let strat = (gens, mult, noise, any::<bool>());
    report(runner(cases).run(&strat, |(gens, mult, noise, member)| {
        let l = Limits::default();
        let ideal = Ideal::new(&r, gens.clone());
        let gb = ideal.groebner_basis(&l).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let basis = gb.polynomials();
        for i in 0..basis.len() {
            prop_assert!(ideal.contains(&basis[i], &l).unwrap());
            for j in (i + 1)..basis.len() {
                prop_assert!(!lead(&basis[i]).divides(lead(&basis[j])));
                prop_assert!(gb.reduces_to_zero(&s_poly(&basis[i], &basis[j])));
            }
        }
        let mut f = if member {
            gens.iter()
                .zip(&mult)
                .fold(Polynomial::zero(&r), |acc, (g, m)| &acc + &(g * m))
        } else {
            noise.clone()
        };
        if f.is_zero() {
            f = noise;
        }
        let d = f.total_degree().unwrap_or(0);
        prop_assert_eq!(ideal.contains(&f, &l).unwrap(), truncated_member(&f, &gens, d));
        Ok(())
    }))
}

/// Non-homogeneous membership: the truncated oracle is sound up to degree 6.
pub fn membership_soundness(cases: u32) -> Result<(), String> {
    let r = ring("x,y");
    let gens = proptest::collection::vec(arb_poly(r.clone(), 2, 3), 1..=2);
    let f = arb_poly(r.clone(), 4, 4);
    report(runner(cases).run(&(gens, f), |(gens, f)| {
        let l = Limits::default();
        let ideal = Ideal::new(&r, gens.clone());
        if truncated_member(&f, &gens, 6) {
            prop_assert!(ideal.contains(&f, &l).unwrap());
        }
        let probe = &f * &gens[0];
        prop_assert!(ideal.contains(&probe, &l).unwrap());
        Ok(())
    }))
}

/// Computed syzygies are sound and span every oracle syzygy of low degree.
pub fn syzygy_completeness(cases: u32) -> Result<(), String> {
    let r = ring("x,y,z");
    let v = proptest::collection::vec(arb_poly(r.clone(), 2, 3), 2..=3);
    report(runner(cases).run(&v, |v| {
        prop_assume!(v.iter().all(|p| !p.is_zero()));
        let l = Limits::default();
        let syz = syzygies(&v, &l).unwrap();
        for s in &syz {
            prop_assert!(s.dot(&v).is_zero());
        }
        let module = Submodule::new(&r, v.len(), syz.clone(), &l).unwrap();
        for s in truncated_syzygies(&v, 2) {
            prop_assert!(module.contains(&ModuleVector(s)).unwrap());
        }
        let pruned = prune_generators(&r, syz, &l).unwrap();
        let small = Submodule::new(&r, v.len(), pruned, &l).unwrap();
        for s in module.generators() {
            prop_assert!(small.contains(s).unwrap());
        }
        Ok(())
    }))
}

/// Radical membership agrees with `g^k ∈ I` for some `k <= 8` on monomial
/// ideals.
pub fn radical_powers(cases: u32) -> Result<(), String> {
    let r = ring("x,y,z");
    let gens = proptest::collection::vec(arb_monomial(3, 3), 1..=3);
    let g = proptest::collection::vec((arb_monomial(3, 2), 1i64..=3), 1..=2);
    report(runner(cases).run(&(gens, g), |(gens, g)| {
        let l = Limits::default();
        let ideal = Ideal::new(&r, gens.iter().map(|m| Polynomial::monomial(&r, m.clone(), Rational::one())));
        let g = Polynomial::from_terms(&r, g.into_iter().map(|(m, c)| (m, Rational::from_int(c))));
        let by_powers = (1..=8).any(|k| ideal.contains(&g.pow(k), &l).unwrap());
        prop_assert_eq!(ideal.radical_contains(&g, &l).unwrap(), by_powers);
        Ok(())
    }))
}

/// Dimension of monomial ideals in up to 8 variables against subset
/// enumeration.
pub fn monomial_dimension(cases: u32) -> Result<(), String> {
    let strat = (1usize..=8).prop_flat_map(|n| (Just(n), proptest::collection::vec(arb_monomial(n, 2), 1..=5)));
    report(runner(cases).run(&strat, |(n, monos)| {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let r = Ring::new(&names).unwrap();
        let l = Limits::default();
        let ideal = Ideal::new(&r, monos.iter().map(|m| Polynomial::monomial(&r, m.clone(), Rational::one())));
        prop_assert_eq!(ideal.dimension(&l).unwrap(), brute_monomial_dimension(&monos, n));
        Ok(())
    }))
}

/// `f (I : f) ⊆ I`, and the quotient contains `I`.
pub fn quotient_soundness(cases: u32) -> Result<(), String> {
    let r = ring("x,y,z");
    let gens = proptest::collection::vec(arb_poly(r.clone(), 2, 3), 1..=3);
    let f = arb_poly(r.clone(), 2, 3);
    report(runner(cases).run(&(gens, f), |(gens, f)| {
        prop_assume!(!f.is_zero());
        let l = Limits::default();
        let ideal = Ideal::new(&r, gens);
        let q = ideal.quotient(&f, &l).unwrap();
        for a in q.generators() {
            prop_assert!(ideal.contains(&(a * &f), &l).unwrap());
        }
        prop_assert!(q.contains_ideal(&ideal, &l).unwrap());
        Ok(())
    }))
}

/// Ideals of minors descend: `minors(k+1) ⊆ minors(k)`.
pub fn minors_descend(cases: u32) -> Result<(), String> {
    let r = ring("x,y,z");
    let entries = proptest::collection::vec(arb_poly(r.clone(), 2, 2), 9);
    report(runner(cases).run(&entries, |e| {
        let l = Limits::default();
        let rows = e.chunks(3).map(|c| c.to_vec()).collect();
        let m = PolyMatrix::new(&r, rows).unwrap();
        for k in 1..3 {
            let small = m.minor_ideal(k).unwrap();
            let big = m.minor_ideal(k + 1).unwrap();
            prop_assert!(small.contains_ideal(&big, &l).unwrap());
        }
        Ok(())
    }))
}
