use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Ring};

/// A pair of basis indices `i < j` with the lcm of their leading monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub degree: u32,
}

impl CriticalPair {
    pub fn new(i: usize, j: usize, lcm: Monomial) -> Self {
        debug_assert!(i < j);
        let degree = lcm.degree();
        Self { i, j, lcm, degree }
    }
}

/// Pending critical pairs. Selection is keyed by
/// `(degree, lcm under the ring order, i, j)`.
#[derive(Clone, Debug, Default)]
pub struct PairQueue {
    pairs: Vec<CriticalPair>,
}

impl PairQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: Vec<CriticalPair>) -> Self {
        Self { pairs }
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[CriticalPair] {
        &self.pairs
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.pairs.iter().map(|p| p.degree).min()
    }

    /// Removes and returns every pair of minimal degree, sorted by the
    /// queue key.
    pub fn select_minimal_degree(&mut self, ring: &Ring) -> Result<Vec<CriticalPair>> {
        let d = self
            .min_degree()
            .ok_or_else(|| Error::contract("selecting from an empty pair queue"))?;
        let (mut chosen, rest): (Vec<_>, Vec<_>) =
            std::mem::take(&mut self.pairs).into_iter().partition(|p| p.degree == d);
        self.pairs = rest;
        chosen.sort_by(|a, b| key_cmp(ring, a, b));
        Ok(chosen)
    }
}

fn key_cmp(ring: &Ring, a: &CriticalPair, b: &CriticalPair) -> Ordering {
    a.degree
        .cmp(&b.degree)
        .then_with(|| ring.cmp(&a.lcm, &b.lcm))
        .then(a.i.cmp(&b.i))
        .then(a.j.cmp(&b.j))
}

/// Gebauer–Möller update for the new basis element `basis[new]`.
///
/// New pairs `(g, h)` are filtered by the chain criterion among
/// themselves (strictly smaller or equal lcm wins) and by the product
/// criterion; old pairs whose lcm is a proper multiple of `LM(h)` in the
/// chain sense are dropped; active elements whose leading monomial is a
/// multiple of `LM(h)` are deactivated.
pub(crate) fn gebauer_moller(
    queue: &mut PairQueue,
    basis: &[Polynomial],
    active: &mut [bool],
    new: usize,
) {
    let hm = basis[new].lm().clone();
    struct Cand {
        i: usize,
        lcm: Monomial,
        coprime: bool,
    }
    let mut cands: Vec<Cand> = (0..new)
        .filter(|&i| active[i])
        .map(|i| Cand {
            i,
            lcm: basis[i].lm().lcm(&hm),
            coprime: basis[i].lm().is_coprime(&hm),
        })
        .collect();

    let mut kept: Vec<Cand> = Vec::with_capacity(cands.len());
    while !cands.is_empty() {
        let c = cands.remove(0);
        let dominated = !c.coprime
            && (cands.iter().any(|o| o.lcm.divides(&c.lcm)) || kept.iter().any(|o| o.lcm.divides(&c.lcm)));
        if !dominated {
            kept.push(c);
        }
    }

    queue.pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && basis[p.i].lm().lcm(&hm) != p.lcm
            && basis[p.j].lm().lcm(&hm) != p.lcm)
    });
    queue
        .pairs
        .extend(kept.into_iter().filter(|c| !c.coprime).map(|c| CriticalPair::new(c.i, new, c.lcm)));

    for i in 0..new {
        if active[i] && hm.divides(basis[i].lm()) {
            active[i] = false;
        }
    }
}

/// Standalone form of the pair update: `basis` are the current (active)
/// generators, `h` the incoming one, which receives index `basis.len()`.
/// Returns the updated queue.
pub fn update_pairs(queue: &PairQueue, basis: &[Polynomial], h: &Polynomial) -> PairQueue {
    let mut all = basis.to_vec();
    all.push(h.clone());
    let mut active = vec![true; all.len()];
    let mut q = queue.clone();
    gebauer_moller(&mut q, &all, &mut active, basis.len());
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, PrimeField};

    fn ring() -> Ring {
        Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Drl)
    }

    fn mono(r: &Ring, e: &[u32]) -> Polynomial {
        r.monomial_poly(1, Monomial::new(e.to_vec()))
    }

    #[test]
    fn select_examples() {
        let r = ring();
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let mut q = PairQueue::from_pairs(vec![
            CriticalPair::new(0, 1, m(&[2, 1])),
            CriticalPair::new(0, 2, m(&[3, 2])),
            CriticalPair::new(1, 2, m(&[1, 2])),
        ]);
        let l = q.select_minimal_degree(&r).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.iter().all(|p| p.degree == 3));
        assert_eq!(q.len(), 1);
        // ties sorted by lcm under DRL: xy^2 < x^2y
        assert_eq!(l[0].lcm, m(&[1, 2]));

        let mut single = PairQueue::from_pairs(vec![CriticalPair::new(0, 1, m(&[1, 1]))]);
        assert_eq!(single.select_minimal_degree(&r).unwrap().len(), 1);
        assert!(single.is_empty());
        assert!(single.select_minimal_degree(&r).is_err());

        let mut flat = PairQueue::from_pairs(vec![
            CriticalPair::new(0, 1, m(&[1, 1])),
            CriticalPair::new(0, 2, m(&[2, 0])),
            CriticalPair::new(1, 2, m(&[0, 2])),
        ]);
        assert_eq!(flat.select_minimal_degree(&r).unwrap().len(), 3);
    }

    #[test]
    fn product_criterion_drops_coprime_pair() {
        let r = ring();
        let q = update_pairs(&PairQueue::new(), &[mono(&r, &[2, 0])], &mono(&r, &[0, 3]));
        assert!(q.is_empty());
    }

    #[test]
    fn non_coprime_pair_is_kept() {
        let r = ring();
        let q = update_pairs(&PairQueue::new(), &[mono(&r, &[1, 1])], &mono(&r, &[0, 2]));
        assert_eq!(q.len(), 1);
        assert_eq!(q.pairs()[0].lcm, Monomial::new(vec![1, 2]));
    }

    #[test]
    fn chain_criterion_drops_old_pair() {
        // LMs x^2y, xy^2 with pending pair (lcm x^2y^2); adding xy removes it
        // while the two pairs involving xy survive.
        let r = ring();
        let g = vec![mono(&r, &[2, 1]), mono(&r, &[1, 2])];
        let q0 = update_pairs(&PairQueue::new(), &g[..1], &g[1]);
        assert_eq!(q0.len(), 1);
        let q = update_pairs(&q0, &g, &mono(&r, &[1, 1]));
        let lcms: Vec<_> = q.pairs().iter().map(|p| (p.i, p.j, p.lcm.clone())).collect();
        assert_eq!(lcms.len(), 2);
        assert!(lcms.contains(&(0, 2, Monomial::new(vec![2, 1]))));
        assert!(lcms.contains(&(1, 2, Monomial::new(vec![1, 2]))));
    }
}
