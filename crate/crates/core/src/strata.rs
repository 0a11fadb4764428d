//! Fitting-ideal ladders of the Saito matrices and the loci they cut out.

use crate::error::{Error, Result};
use crate::ideals::{Ideal, Limits};
use crate::logder::SaitoData;
use crate::poly::Polynomial;

/// `I_i` and `Ĩ_i` for `i = 0..=n` (index 0 is the unit ideal), with the
/// Jacobian ideal, the colon ideal and the dimensions of the loci.
#[derive(Clone, Debug)]
pub struct MinorLadder {
    f: Polynomial,
    i: Vec<Ideal>,
    i_ext: Vec<Ideal>,
    jacobian: Ideal,
    colon: Ideal,
    dims_d: Vec<i32>,
    dims_d_ext: Vec<i32>,
}

fn partials(f: &Polynomial) -> Result<Vec<Polynomial>> {
    (0..f.ring().n()).map(|j| f.partial_derivative(j)).collect()
}

/// Builds the ladder; the chain inclusions `I_{i+1} ⊆ I_i`,
/// `Ĩ_{i+1} ⊆ Ĩ_i` and `I_i ⊆ Ĩ_i` are asserted.
pub fn minor_ladder(sd: &SaitoData, limits: &Limits) -> Result<MinorLadder> {
    let ring = sd.ring();
    let n = ring.n();
    let f = sd.f().clone();
    let to_ideals = |levels: Vec<Vec<Polynomial>>| -> Vec<Ideal> {
        let mut out = vec![Ideal::unit(ring)];
        out.extend(levels.into_iter().map(|g| Ideal::new(ring, g)));
        out.resize(n + 1, Ideal::zero(ring));
        out
    };
    let i = to_ideals(sd.matrix().minor_levels(n));
    let i_ext = to_ideals(sd.extended_matrix().minor_levels(n));
    let d = partials(&f)?;
    let mut jac = d.clone();
    jac.push(f.clone());
    let jacobian = Ideal::new(ring, jac);
    let colon = Ideal::new(ring, d).quotient(&f, limits)?;
    let mut dims_d = Vec::with_capacity(n);
    let mut dims_d_ext = Vec::with_capacity(n);
    for k in 1..=n {
        dims_d.push(i[k].dimension(limits)?);
        dims_d_ext.push(i_ext[k].dimension(limits)?);
    }
    for k in 1..=n {
        assert!(i[k - 1].contains_ideal(&i[k], limits)?, "I_{k} ⊆ I_{}", k - 1);
        assert!(i_ext[k - 1].contains_ideal(&i_ext[k], limits)?, "Ĩ_{k} ⊆ Ĩ_{}", k - 1);
        assert!(i_ext[k].contains_ideal(&i[k], limits)?, "I_{k} ⊆ Ĩ_{k}");
    }
    Ok(MinorLadder {
        f,
        i,
        i_ext,
        jacobian,
        colon,
        dims_d,
        dims_d_ext,
    })
}

impl MinorLadder {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.i.len() - 1
    }

    /// `I_k`, the ideal of `k×k` minors of the Saito matrix.
    pub fn minors(&self, k: usize) -> &Ideal {
        &self.i[k]
    }

    /// `Ĩ_k`, the ideal of `k×k` minors of the extended Saito matrix.
    pub fn extended_minors(&self, k: usize) -> &Ideal {
        &self.i_ext[k]
    }

    /// `(∂_1 f, .., ∂_n f, f)`.
    pub fn jacobian(&self) -> &Ideal {
        &self.jacobian
    }

    /// `(∂_1 f, .., ∂_n f) : f`.
    pub fn colon(&self) -> &Ideal {
        &self.colon
    }

    /// `dim D_i = dim V(I_{i+1})` for `i = 0..n-1`, `-1` when empty.
    pub fn dims_d(&self) -> &[i32] {
        &self.dims_d
    }

    /// `dim D̃_i = dim V(Ĩ_{i+1})` for `i = 0..n-1`.
    pub fn dims_d_ext(&self) -> &[i32] {
        &self.dims_d_ext
    }

    /// Checks the remaining ladder facts and returns a description of each
    /// one that fails: `Ĩ_{i+1} ⊆ I_{i+1} + (∂f:f) I_i`, `√I_n = √(f)`,
    /// `√Ĩ_n = √J_f`, `J_f ⊆ √((∂f:f) + (f))` and monotone dimensions.
    pub fn verify(&self, limits: &Limits) -> Result<Vec<String>> {
        let n = self.n();
        let ring = self.f.ring();
        let mut failures = Vec::new();
        for k in 0..n {
            let bridge = self.i[k + 1].sum(&self.colon.product(&self.i[k]));
            if !bridge.contains_ideal(&self.i_ext[k + 1], limits)? {
                failures.push(format!("Ĩ_{} ⊄ I_{} + (∂f:f) I_{k}", k + 1, k + 1));
            }
        }
        if !self.i[n].radical_equal(&Ideal::new(ring, [self.f.clone()]), limits)? {
            failures.push(format!("√I_{n} ≠ √(f)"));
        }
        if !self.i_ext[n].radical_equal(&self.jacobian, limits)? {
            failures.push(format!("√Ĩ_{n} ≠ √J_f"));
        }
        // V(∂f:f) ⊆ Sing D only along D: off D the colon ideal sees the
        // critical points of f
        let along_d = self.colon.sum(&Ideal::new(ring, [self.f.clone()]));
        if !along_d.radical_contains_ideal(&self.jacobian, limits)? {
            failures.push("J_f ⊄ √((∂f:f) + (f))".into());
        }
        for dims in [&self.dims_d, &self.dims_d_ext] {
            if dims.windows(2).any(|w| w[0] > w[1]) {
                failures.push(format!("dimensions {dims:?} not monotone"));
            }
        }
        Ok(failures)
    }
}

/// `(∂_1 g, .., ∂_n g) : g` for `g = u f`, or `g = f` without a unit.
pub fn colon_partials(f: &Polynomial, u: Option<&Polynomial>, limits: &Limits) -> Result<Ideal> {
    let g = match u {
        Some(u) => {
            if u.constant_term().is_zero() {
                return Err(Error::Precondition(format!("{u} vanishes at the origin")));
            }
            u * f
        }
        None => f.clone(),
    };
    Ideal::new(f.ring(), partials(&g)?).quotient(&g, limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    /// `D_i ∖ D̃_i`: points where `rank Ã = rank A + 1`.
    Seh,
    /// `D̃_i ∖ D_{i-1}`: points where both ranks equal `i`.
    NonSeh,
}

/// The locally closed set `V(closure) ∖ V(boundary)`.
#[derive(Clone, Debug)]
pub struct StratumPiece {
    pub index: usize,
    pub kind: PieceKind,
    pub closure: Ideal,
    pub boundary: Ideal,
    pub empty: bool,
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub pieces: Vec<StratumPiece>,
}

impl StratumReport {
    pub fn non_seh(&self) -> impl Iterator<Item = &StratumPiece> {
        self.pieces.iter().filter(|p| p.kind == PieceKind::NonSeh)
    }
}

/// For each `i = 0..n-2`, the pieces `D_i ∖ D̃_i` and `D̃_i ∖ D_{i-1}` of
/// the singular locus. A piece is empty iff the boundary ideal lies in the
/// radical of the closure ideal.
pub fn stratification(ladder: &MinorLadder, limits: &Limits) -> Result<StratumReport> {
    let n = ladder.n();
    let mut pieces = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for (kind, closure, boundary) in [
            (PieceKind::Seh, &ladder.i[i + 1], &ladder.i_ext[i + 1]),
            (PieceKind::NonSeh, &ladder.i_ext[i + 1], &ladder.i[i]),
        ] {
            let empty = closure.radical_contains_ideal(boundary, limits)?;
            pieces.push(StratumPiece {
                index: i,
                kind,
                closure: closure.clone(),
                boundary: boundary.clone(),
                empty,
            });
        }
    }
    Ok(StratumReport { pieces })
}
