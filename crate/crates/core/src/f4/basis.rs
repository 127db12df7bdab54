use std::cmp::Ordering;

use crate::ring::{MonomialOrder, Polynomial, Ring};

/// A list of generators together with the ring (and thus the order) they
/// are a Gröbner basis for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps generators without checking anything; `reduced` is a claim by
    /// the caller.
    pub fn from_parts(ring: Ring, generators: Vec<Polynomial>, reduced: bool) -> Self {
        Self {
            ring,
            generators,
            reduced,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `{1}`
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.ring.normal_form(f, &self.generators)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Whether the leading monomials contain a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        has_pure_powers(self.ring.nvars, &self.generators)
    }
}

pub(crate) fn has_pure_powers(nvars: usize, polys: &[Polynomial]) -> bool {
    let mut seen = vec![false; nvars];
    for g in polys.iter().filter(|g| !g.is_zero()) {
        if g.lm().is_one() {
            return true;
        }
        if let Some(i) = g.lm().pure_power_of() {
            seen[i] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Interreduces a Gröbner basis into the unique reduced one: drops
/// generators whose leading monomial is divisible by another's, reduces
/// the tails, makes everything monic and sorts by increasing leading
/// monomial. If the input is not a Gröbner basis the output is still
/// interreduced but need not be a basis of anything in particular.
pub fn reduce_basis(ring: &Ring, generators: &[Polynomial]) -> GroebnerBasis {
    let polys: Vec<&Polynomial> = generators.iter().filter(|g| !g.is_zero()).collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in polys.iter().enumerate() {
        let redundant = polys.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            keep.push(ring.monic(g));
        }
    }
    if keep.iter().any(|g| g.is_constant()) {
        return GroebnerBasis::from_parts(*ring, vec![ring.one()], true);
    }
    keep.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = ring.monomial_poly(1, keep[i].lm().clone());
        let tail = ring.sub(&keep[i], &lead);
        reduced.push(ring.add(&lead, &ring.normal_form(&tail, &others)));
    }
    GroebnerBasis::from_parts(*ring, reduced, true)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn buchberger_check(ring: &Ring, generators: &[Polynomial]) -> bool {
    let g: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = ring.spolynomial(&g[i], &g[j]).expect("nonzero");
            if !ring.normal_form(&s, &g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Sorts polynomials by increasing leading monomial, then by full term
/// list, for order-independent comparisons.
pub fn canonical_order(ring: &Ring, polys: &mut [Polynomial]) {
    polys.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => ring.cmp(a.lm(), b.lm()).then_with(|| {
            for (x, y) in a.terms().iter().zip(b.terms()) {
                let o = ring.cmp(&x.monomial, &y.monomial).then(x.coeff.cmp(&y.coeff));
                if o != Ordering::Equal {
                    return o;
                }
            }
            a.len().cmp(&b.len())
        }),
    });
}
