use super::Monomial;

/// A nonzero coefficient attached to a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub monomial: Monomial,
}

/// Sparse polynomial: terms strictly decreasing under the order of the
/// [`Ring`](super::Ring) that built it, no zero coefficients.
///
/// A `Polynomial` does not remember its ring; every operation goes
/// through a ring context so that the order and field are explicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub(crate) terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial. Panics on the zero polynomial.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    /// Leading coefficient. Panics on the zero polynomial.
    #[inline]
    pub fn lc(&self) -> u32 {
        self.terms[0].coeff
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.monomial)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].monomial.degree() == w[1].monomial.degree())
    }

    pub fn coefficient_of(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| &t.monomial == m).map_or(0, |t| t.coeff)
    }

    /// Whether the variable `index` occurs in some term.
    pub fn involves(&self, index: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponent(index) > 0)
    }
}
