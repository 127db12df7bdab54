//! Faugère's F4 with the normal (degree) selection strategy.

mod basis;
mod matrix;
mod pairs;

pub use basis::{buchberger_check, canonical_order, reduce_basis, GroebnerBasis};
pub(crate) use basis::has_pure_powers;
pub use matrix::{linear_algebra, symbolic_preprocessing, MacaulayMatrix, RowKind};
pub use pairs::{update_pairs, CriticalPair, PairQueue};

use crate::ring::{Polynomial, Ring};

/// What one linear-algebra step did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub degree: u32,
    pub pairs: usize,
    pub rows: usize,
    pub columns: usize,
    pub added: usize,
}

/// Incremental F4 state. Generators are never removed, only deactivated
/// once a newer element's leading monomial divides theirs, so pair
/// indices stay valid.
#[derive(Clone, Debug)]
pub struct F4Engine {
    ring: Ring,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    queue: PairQueue,
}

impl F4Engine {
    pub fn new(ring: Ring) -> Self {
        Self {
            ring,
            basis: Vec::new(),
            active: Vec::new(),
            queue: PairQueue::new(),
        }
    }

    pub fn with_generators(ring: Ring, generators: &[Polynomial]) -> Self {
        let mut e = Self::new(ring);
        for g in generators {
            e.insert(g.clone());
        }
        e
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn queue(&self) -> &PairQueue {
        &self.queue
    }

    /// True once the basis contains a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().zip(&self.active).any(|(g, a)| *a && g.is_constant())
    }

    pub fn is_done(&self) -> bool {
        self.queue.is_empty()
    }

    pub fn next_degree(&self) -> Option<u32> {
        self.queue.min_degree()
    }

    /// Adds `h` (made monic) to the basis and updates the pair queue.
    /// Returns false for the zero polynomial.
    pub fn insert(&mut self, h: Polynomial) -> bool {
        if h.is_zero() {
            return false;
        }
        let h = self.ring.monic(&h);
        if h.is_constant() {
            self.basis.push(h);
            self.active.iter_mut().for_each(|a| *a = false);
            self.active.push(true);
            self.queue = PairQueue::new();
            return true;
        }
        if self.is_unit() {
            return true;
        }
        self.basis.push(h);
        self.active.push(true);
        let new = self.basis.len() - 1;
        pairs::gebauer_moller(&mut self.queue, &self.basis, &mut self.active, new);
        true
    }

    /// Processes every pair of the minimal pending degree. `None` when no
    /// pairs are left.
    pub fn step(&mut self) -> Option<StepReport> {
        let selected = self.queue.select_minimal_degree(&self.ring).ok()?;
        let degree = selected[0].degree;
        let m = symbolic_preprocessing(&self.ring, &selected, &self.basis, &self.active);
        let new = linear_algebra(&self.ring, &m);
        let added = new.len();
        for h in new {
            self.insert(h);
        }
        Some(StepReport {
            degree,
            pairs: selected.len(),
            rows: m.nrows(),
            columns: m.ncols(),
            added,
        })
    }

    pub fn run(&mut self) {
        while self.step().is_some() {}
    }

    /// Processes pairs until the smallest pending degree exceeds `d`.
    pub fn run_to_degree(&mut self, d: u32) {
        while self.next_degree().is_some_and(|k| k <= d) {
            self.step();
        }
    }

    /// The active generators, in insertion order.
    pub fn active_basis(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g.clone())
            .collect()
    }

    /// The reduced basis of what has been computed so far.
    pub fn reduced(&self) -> GroebnerBasis {
        reduce_basis(&self.ring, &self.active_basis())
    }
}

/// The reduced Gröbner basis of `⟨generators⟩`. Zero generators are
/// ignored; the zero ideal gets an empty basis.
pub fn f4(ring: &Ring, generators: &[Polynomial]) -> GroebnerBasis {
    let mut e = F4Engine::with_generators(*ring, generators);
    e.run();
    e.reduced()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, MonomialOrder, PrimeField};

    fn p(r: &Ring, t: &[(i64, &[u32])]) -> Polynomial {
        r.from_terms(t.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    fn gf7() -> Ring {
        Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Drl)
    }

    #[test]
    fn small_example() {
        let r = gf7();
        let f = vec![
            p(&r, &[(1, &[2, 0]), (-1, &[0, 1])]),
            p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]),
        ];
        let g = f4(&r, &f);
        let expected = [p(&r, &[(1, &[0, 2]), (-1, &[1, 0])]),
            p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]),
            p(&r, &[(1, &[2, 0]), (-1, &[0, 1])])];
        assert_eq!(g.generators(), &expected[..]);
        assert!(g.is_reduced());
        assert!(buchberger_check(&r, g.generators()));
    }

    #[test]
    fn unit_ideals() {
        let r = gf7();
        assert!(f4(&r, &[r.constant(3)]).is_unit());
        let f = vec![
            p(&r, &[(1, &[2, 0])]),
            r.pow(&p(&r, &[(1, &[0, 1]), (-1, &[0, 0])]), 2),
            p(&r, &[(1, &[1, 1]), (-1, &[0, 1]), (-1, &[0, 0])]),
        ];
        let g = f4(&r, &f);
        assert!(g.is_unit());
        assert_eq!(g.generators(), &[r.one()]);
    }

    #[test]
    fn zero_ideal_is_empty() {
        let r = gf7();
        assert!(f4(&r, &[Polynomial::zero()]).is_empty());
        assert!(f4(&r, &[]).is_empty());
    }

    #[test]
    fn buchberger_check_examples() {
        let r = gf7();
        let a = p(&r, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let b = p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let c = p(&r, &[(1, &[0, 2]), (-1, &[1, 0])]);
        assert!(buchberger_check(&r, &[a.clone(), b.clone(), c]));
        assert!(!buchberger_check(&r, &[a, b]));
        assert!(buchberger_check(&r, &[r.var(0), r.var(1)]));
    }

    #[test]
    fn reduce_basis_examples() {
        let r = gf7();
        let a = p(&r, &[(2, &[2, 0]), (-2, &[0, 1])]);
        let mid = p(&r, &[(1, &[2, 0]), (-1, &[0, 1]), (1, &[1, 1]), (-1, &[0, 0])]);
        let b = p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let g = reduce_basis(&r, &[a, mid, b.clone()]);
        assert_eq!(g.generators(), &[b, p(&r, &[(1, &[2, 0]), (-1, &[0, 1])])]);
        let again = reduce_basis(&r, g.generators());
        assert_eq!(again, g);
        assert!(reduce_basis(&r, &[r.constant(5)]).is_unit());
    }

    #[test]
    fn truncated_run_closes_low_degree_pairs() {
        let r = Ring::new(PrimeField::new(65521).unwrap(), 3, MonomialOrder::Drl);
        let f = vec![
            p(&r, &[(1, &[2, 0, 0]), (3, &[0, 1, 1]), (-1, &[0, 0, 0])]),
            p(&r, &[(1, &[1, 1, 0]), (2, &[0, 0, 2]), (5, &[1, 0, 0])]),
            p(&r, &[(1, &[0, 2, 1]), (-1, &[1, 0, 0])]),
        ];
        for d in 2..6 {
            let mut e = F4Engine::with_generators(r, &f);
            e.run_to_degree(d);
            let g = e.active_basis();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    if g[i].lm().lcm(g[j].lm()).degree() <= d {
                        let s = r.spolynomial(&g[i], &g[j]).unwrap();
                        assert!(r.normal_form(&s, &g).is_zero(), "degree {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let r = Ring::new(PrimeField::new(65521).unwrap(), 3, MonomialOrder::Drl);
        let f = vec![
            p(&r, &[(1, &[1, 1, 1]), (7, &[0, 1, 0]), (-1, &[0, 0, 0])]),
            p(&r, &[(1, &[2, 0, 1]), (2, &[0, 2, 0])]),
            p(&r, &[(3, &[0, 1, 2]), (1, &[1, 0, 0])]),
        ];
        assert_eq!(f4(&r, &f), f4(&r, &f));
    }

    #[test]
    fn lex_order_is_supported() {
        let r = Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Lex);
        let f = vec![
            p(&r, &[(1, &[2, 0]), (-1, &[0, 1])]),
            p(&r, &[(1, &[1, 1]), (-1, &[0, 0])]),
        ];
        let g = f4(&r, &f);
        assert!(buchberger_check(&r, g.generators()));
        // y^3 - 1 and x - y^2
        assert_eq!(g.len(), 2);
        assert_eq!(g.generators()[0].lm(), &Monomial::new(vec![0, 3]));
    }
}
