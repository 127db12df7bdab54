use std::cmp::Ordering;

use super::Monomial;
use crate::error::Result;

/// Monomial orderings, all with `x_n < ... < x_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    Drl,
    /// Pure lexicographic.
    Lex,
    /// Block order: the first `k` variables compared by DRL, ties broken
    /// by DRL on the remaining ones. Eliminates the first block.
    Elim(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_same_context(b)?;
        Ok(self.cmp(a, b))
    }

    /// Infallible comparison for monomials already known to share a context.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Drl => drl(a.degree(), b.degree(), a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elim(k) => {
                let (ah, at) = a.exponents().split_at(k);
                let (bh, bt) = b.exponents().split_at(k);
                let dh = |e: &[u32]| e.iter().sum::<u32>();
                drl(dh(ah), dh(bh), ah, bh).then_with(|| {
                    drl(a.degree() - dh(ah), b.degree() - dh(bh), at, bt)
                })
            }
        }
    }

    /// Whether the order refines total degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Drl)
    }
}

#[inline]
fn drl(da: u32, db: u32, a: &[u32], b: &[u32]) -> Ordering {
    da.cmp(&db).then_with(|| Monomial::revlex(a, b))
}
