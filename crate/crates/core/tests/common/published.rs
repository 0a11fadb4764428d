//! Generating sets of logarithmic derivations as printed in the literature,
//! each checked against its stated cofactor.

use divlab::ideals::{Limits, Submodule};
use divlab::logder::Derivation;
use divlab::{Polynomial, Ring};

use super::p;

pub const EX_SEH: (&str, &str) = ("x,y,z,t", "x*y*(x+z)*(x^2+y*z)*(z+y*t)");
pub const EX_NOT_SEH: (&str, &str) = ("x,y,z,t", "x*y*(x+z)*(x^2+y*z)*(z^2+y*t)");
pub const PLANE_CURVE: (&str, &str) = ("x,y", "x^4+y^5+y^4*x");
pub const LFD5: (&str, &str) = ("x,y,z,t,u", "x*(8*x^3*u - y*(8*t*x^2 - 4*x*y*z + y^3))");
pub const FOUR_LINES: (&str, &str) = ("x1,x2,x3", "x1*x2*(x1+x2)*(x1+x2*x3)");
pub const COLON: (&str, &str) = ("x,y,z", "x*y*z*(x^3+x*y*z+y^3*z^3)");
pub const QUASI_AT_0: (&str, &str) = ("x,y,z", "x*y*z*(x^5*z+x^3*y^3+y^5*z)");
pub const ARR9: (&str, &str) = ("x,y,z,t", "x*y*z*(x+t)*(y+t)*(z+t)*(x+y+t)*(x+z+t)*(y+z+t)");

/// `Σ a_j ∂_j` checked against the stated cofactor by direct expansion.
pub fn der(r: &Ring, f: &Polynomial, coeffs: &[&str], cofactor: &str) -> Derivation {
    let a: Vec<Polynomial> = coeffs.iter().map(|c| p(r, c)).collect();
    let alpha = p(r, cofactor);
    let mut lhs = Polynomial::zero(r);
    for (j, aj) in a.iter().enumerate() {
        lhs = &lhs + &(aj * &f.partial_derivative(j).unwrap());
    }
    assert_eq!(lhs, &alpha * f, "stated cofactor of {coeffs:?}");
    Derivation::new(f, a, alpha).unwrap()
}

pub fn module(r: &Ring, ds: &[Derivation]) -> Submodule {
    let l = Limits::default();
    Submodule::new(r, r.n() + 1, ds.iter().map(Derivation::as_syzygy).collect(), &l).unwrap()
}

/// Mutual containment of the modules of `(a, -α)` rows.
pub fn same_module(r: &Ring, a: &[Derivation], b: &[Derivation]) -> bool {
    let (ma, mb) = (module(r, a), module(r, b));
    a.iter().all(|d| mb.contains(&d.as_syzygy()).unwrap()) && b.iter().all(|d| ma.contains(&d.as_syzygy()).unwrap())
}

pub fn ex_seh(r: &Ring, f: &Polynomial) -> Vec<Derivation> {
    vec![
        der(r, f, &["x", "y", "z", "0"], "6"),
        der(r, f, &["0", "0", "0", "z+y*t"], "y"),
        der(r, f, &["0", "y*(x+z)", "-z*(x+z)", "-2*t*(x+z)"], "-z"),
        der(r, f, &["0", "y^2*(y+z)", "y*(x^2-z^2)", "-x^2+y*z+2*z^2"], "x*y+3*y^2+y*z"),
        der(r, f, &["0", "y*z*(y+z)", "z*(x^2-z^2)", "x^2*t-2*z^2*t+z^2"], "x^2+x*z+3*y*z-z^2"),
    ]
}

pub fn ex_not_seh(r: &Ring, f: &Polynomial) -> Vec<Derivation> {
    vec![
        der(r, f, &["x", "y", "z", "t"], "7"),
        der(r, f, &["0", "0", "0", "z^2+y*t"], "y"),
        der(r, f, &["0", "y*(x+z)", "-z*(x+z)", "-3*t*(x+z)"], "-x-2*z"),
        der(r, f, &["0", "y^2*(y+z)", "y*(x^2-z^2)", "-(2*x^2*z+y^2*t+3*y*z*t)"], "x*y+2*y^2-2*y*z"),
        der(r, f, &["0", "y*z*(y+z)", "z*(x^2-z^2)", "2*x^2*t-y*z*t+3*y*t^2"], "2*x^2+x*z+2*y*z-2*z^2+3*y*t"),
    ]
}

pub fn plane_curve(r: &Ring, f: &Polynomial) -> Vec<Derivation> {
    vec![
        der(r, f, &["4*x^2+5*x*y", "3*x*y+4*y^2"], "16*x+20*y"),
        der(r, f, &["16*x*y^2+4*y^3-125*x*y", "12*y^3-4*x^2+5*x*y-100*y^2"], "64*y^2-500*y"),
    ]
}

pub fn lfd5(r: &Ring, f: &Polynomial) -> Vec<Derivation> {
    vec![
        der(r, f, &["x", "y", "z", "t", "u"], "5"),
        der(r, f, &["-4*x", "y", "6*z", "11*t", "16*u"], "0"),
        der(r, f, &["0", "x", "y", "z", "t"], "0"),
        der(r, f, &["0", "0", "2*x", "y", "0"], "0"),
        der(r, f, &["0", "0", "0", "x", "y"], "0"),
    ]
}
