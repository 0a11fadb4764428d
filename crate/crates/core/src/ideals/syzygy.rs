use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::groebner::{groebner, groebner_with_syzygies, GbConfig, NormalForm, PositionOrder, Selection, TermOrder, Vector};
use super::Limits;

/// An element of a free module `R^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector(pub Vec<Polynomial>);

impl ModuleVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Polynomial::is_zero)
    }

    /// `Σ self_i v_i`.
    pub fn dot(&self, v: &[Polynomial]) -> Polynomial {
        assert_eq!(self.0.len(), v.len(), "length mismatch");
        let ring = v[0].ring();
        self.0
            .iter()
            .zip(v)
            .fold(Polynomial::zero(ring), |acc, (a, b)| &acc + &(a * b))
    }

    /// Largest total degree of an entry; `None` for the zero vector.
    pub fn degree(&self) -> Option<u32> {
        self.0.iter().filter_map(Polynomial::total_degree).max()
    }
}

/// Generators of the syzygy module `{ s : Σ s_i v_i = 0 }`.
///
/// Runs a position-over-term basis computation on `v_i e_0 + e_i` and keeps
/// the vectors whose first coordinate reduces to zero. The list need not be minimal; see
/// [`prune_generators`].
pub fn syzygies(v: &[Polynomial], limits: &Limits) -> Result<Vec<ModuleVector>> {
    if v.is_empty() {
        return Err(Error::Precondition("syzygies of an empty list".into()));
    }
    let ring = v[0].ring().clone();
    if v.iter().any(|p| p.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let r = v.len();
    let ord = TermOrder {
        mono: MonomialOrder::DegRevLex,
        pos: PositionOrder::PositionOverTerm,
    };
    let mut shifts = vec![0u32];
    shifts.extend(v.iter().map(|p| p.total_degree().unwrap_or(0)));
    let cfg = GbConfig {
        order: ord,
        selection: Selection::default(),
        shifts,
        ideal: false,
    };
    let input: Vec<Vector> = v
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut entries = vec![Polynomial::zero(&ring); r + 1];
            entries[0] = p.clone();
            entries[i + 1] = Polynomial::one(&ring);
            Vector::from_entries(&entries, 0, &ord)
        })
        .collect();
    let (_, found) = groebner_with_syzygies(&input, &cfg, limits)?;
    let syz: Vec<ModuleVector> = found
        .iter()
        .map(|b| ModuleVector((1..=r as u32).map(|c| b.component(c, &ring)).collect()))
        .collect();
    debug_assert!(syz.iter().all(|s| s.dot(v).is_zero()));
    Ok(syz)
}

/// A submodule of `R^r` with a term-over-position Gröbner basis for
/// membership tests.
pub struct Submodule {
    ring: Ring,
    rank: usize,
    generators: Vec<ModuleVector>,
    nf: NormalForm,
}

impl Submodule {
    pub fn new(ring: &Ring, rank: usize, generators: Vec<ModuleVector>, limits: &Limits) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: g.len(),
            });
        }
        let ord = Self::order();
        let input: Vec<Vector> = generators
            .iter()
            .map(|g| Vector::from_entries(&g.0, 0, &ord))
            .collect();
        let cfg = GbConfig {
            order: ord,
            selection: Selection::default(),
            shifts: Vec::new(),
            ideal: false,
        };
        let basis = groebner(&input, &cfg, limits)?;
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators,
            nf: NormalForm::new(&basis, ord),
        })
    }

    fn order() -> TermOrder {
        TermOrder {
            mono: MonomialOrder::DegRevLex,
            pos: PositionOrder::TermOverPosition,
        }
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        if v.0.iter().any(|p| p.ring() != &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.nf.reduce(Vector::from_entries(&v.0, 0, &Self::order())).is_zero())
    }
}

/// Drops generators that lie in the submodule spanned by the others.
///
/// Candidates are added in order of increasing degree when not already
/// spanned; a second pass removes any kept generator implied by the rest.
pub fn prune_generators(ring: &Ring, mut gens: Vec<ModuleVector>, limits: &Limits) -> Result<Vec<ModuleVector>> {
    gens.retain(|g| !g.is_zero());
    let Some(rank) = gens.first().map(ModuleVector::len) else {
        return Ok(gens);
    };
    // stable: ties keep their input order
    gens.sort_by_key(|g| g.degree().unwrap_or(0));
    let mut kept: Vec<ModuleVector> = Vec::new();
    for g in gens {
        if kept.is_empty() {
            kept.push(g);
            continue;
        }
        let sub = Submodule::new(ring, rank, kept.clone(), limits)?;
        if !sub.contains(&g)? {
            kept.push(g);
        }
    }
    let mut i = kept.len();
    while i > 0 && kept.len() > 1 {
        i -= 1;
        let others: Vec<ModuleVector> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let sub = Submodule::new(ring, rank, others, limits)?;
        if sub.contains(&kept[i])? {
            kept.remove(i);
        }
    }
    Ok(kept)
}
