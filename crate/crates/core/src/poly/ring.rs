use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of named variables; `Q[x_1, ..., x_n]`.
///
/// Cloning is cheap. Two rings are equal when their variable names agree.
#[derive(Clone)]
pub struct Ring(Arc<Vec<String>>);

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref().trim();
            if !valid_ident(name) {
                return Err(Error::InvalidRing(format!("invalid variable name `{name}`")));
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
            out.push(name.to_string());
        }
        Ok(Ring(Arc::new(out)))
    }

    /// Parses a comma-separated variable list such as `x,y,z`.
    pub fn from_list(list: &str) -> Result<Self> {
        let names: Vec<&str> = list.split(',').map(str::trim).collect();
        Self::new(&names)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A ring with `prefix` variables prepended and `suffix` variables
    /// appended. Names that clash with existing ones get underscores appended.
    pub fn extended<S: AsRef<str>>(&self, prefix: &[S], suffix: &[S]) -> Ring {
        let mut names: Vec<String> = Vec::new();
        let fresh = |base: &str, taken: &Vec<String>| {
            let mut cand = base.to_string();
            while taken.contains(&cand) || self.0.contains(&cand) {
                cand.push('_');
            }
            cand
        };
        for p in prefix {
            let c = fresh(p.as_ref(), &names);
            names.push(c);
        }
        names.extend(self.0.iter().cloned());
        for s in suffix {
            let c = fresh(s.as_ref(), &names);
            names.push(c);
        }
        Ring(Arc::new(names))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.join(","))
    }
}
