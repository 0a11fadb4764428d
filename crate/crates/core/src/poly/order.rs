use std::cmp::Ordering;

use super::Monomial;

/// Monomial orders supported by the Gröbner engine.
///
/// `Block(k)` compares the first `k` variables by degree-reverse-lex and
/// breaks ties with degree-reverse-lex on the remaining ones, so it is an
/// elimination order for the first `k` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block(usize),
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.as_slice().cmp(b.exps.as_slice()),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.n());
                degrevlex(&a.exps[..k], &b.exps[..k])
                    .then_with(|| degrevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}
