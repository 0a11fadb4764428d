pub mod catalog;
pub mod criteria;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod logder;
pub mod poly;
pub mod rational;
pub mod strata;

pub use error::{Error, Result};
pub use ideals::{Ideal, Limits, ModuleVector, PolyMatrix};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Point, Polynomial, Ring};
pub use rational::Rational;
