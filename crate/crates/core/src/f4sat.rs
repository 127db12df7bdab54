//! Saturation `⟨F⟩ : φ^∞` by interleaving F4 steps with left-kernel
//! searches for polynomials `h` such that `hφ` already lies in the ideal.

use std::collections::HashMap;

use crate::f4::{f4, has_pure_powers, reduce_basis, F4Engine, GroebnerBasis};
use crate::ring::{Monomial, Polynomial, Ring, Term};

/// Scheduling knobs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatConfig {
    /// Number of linear-algebra steps that added elements before an
    /// intermediate kernel search; 0 disables intermediate searches.
    pub steps_between: usize,
    /// Intermediate searches only use monomials of degree at most
    /// `ceil(num / den * maxdeg G)`.
    pub partial_degree: (u32, u32),
    /// Try `f4(G ∪ {φ}) = {1}` on zero-dimensional bases before the final
    /// kernel search.
    pub zero_dim_shortcut: bool,
}

impl Default for SatConfig {
    fn default() -> Self {
        Self {
            steps_between: 3,
            partial_degree: (2, 3),
            zero_dim_shortcut: true,
        }
    }
}

/// Result of a saturation run plus the quantities the degree bound is
/// stated in.
#[derive(Clone, Debug)]
pub struct SatReport {
    pub basis: GroebnerBasis,
    /// Largest degree in the internal (unreduced) basis at termination.
    pub internal_max_degree: u32,
    /// Degree of `NF(φ)` against that basis; `None` when it is zero.
    pub nf_phi_degree: Option<u32>,
    pub f4_steps: usize,
    pub kernel_searches: usize,
    pub discovered: usize,
    pub shortcut_used: bool,
}

impl SatReport {
    pub fn degree_bound(&self) -> u32 {
        self.internal_max_degree.max(self.nf_phi_degree.unwrap_or(0))
    }
}

/// Monomials of degree at most `dmax` outside `⟨LM(G)⟩`, increasing.
pub fn staircase_monomials(ring: &Ring, basis: &[Polynomial], dmax: u32) -> Vec<Monomial> {
    let leads: Vec<&Monomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.lm()).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    let outside = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut all = vec![Monomial::one(ring.nvars)];
    let mut level = all.clone();
    for _ in 0..dmax {
        let mut next = Vec::new();
        for m in &level {
            let last = (0..ring.nvars).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
            for i in last..ring.nvars {
                let c = m.mul_var(i);
                if outside(&c) {
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| ring.cmp(a, b));
    all
}

/// Sparse vector: sorted `(index, coefficient)` pairs.
pub type SparseVector = Vec<(usize, u32)>;

/// Echelon basis of `{c : Σ c_i rows[i] = 0}`. Each returned vector's
/// largest index carries coefficient 1 and no two vectors share that index.
pub fn left_kernel_lower_triangular(ring: &Ring, rows: &[Polynomial]) -> Vec<SparseVector> {
    let f = ring.field;
    let mut pivots: HashMap<Monomial, (Polynomial, SparseVector)> = HashMap::new();
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        let mut comb: SparseVector = vec![(i, 1)];
        while !r.is_zero() {
            let Some((pr, pc)) = pivots.get(r.lm()) else { break };
            let c = f.neg(f.div(r.lc(), pr.lc()));
            r = ring.axpy(&r, c, &Monomial::one(ring.nvars), pr);
            comb = sparse_axpy(f, &comb, c, pc);
        }
        if r.is_zero() {
            kernel.push(comb);
        } else {
            pivots.insert(r.lm().clone(), (r, comb));
        }
    }
    kernel
}

fn sparse_axpy(f: crate::ring::PrimeField, a: &SparseVector, c: u32, b: &SparseVector) -> SparseVector {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.mul(c, b[j].1)));
            j += 1;
        } else {
            let v = f.add(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Cache of `q_σ ≡ σφ` modulo the current ideal.
#[derive(Clone, Debug, Default)]
pub struct NfCache {
    entries: HashMap<Monomial, Polynomial>,
}

impl NfCache {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One kernel search: returns polynomials `h`, supported on the staircase
/// of `basis` up to degree `dmax`, with `NF(hφ) = 0`, sorted by increasing
/// leading monomial and with no leading monomial dividing a later one.
/// `NF(φ) = 0` gives `{1}`.
pub fn saturation_step(
    ring: &Ring,
    basis: &[Polynomial],
    phi: &Polynomial,
    dmax: u32,
    cache: &mut NfCache,
) -> Vec<Polynomial> {
    let psi = ring.normal_form(phi, basis);
    if psi.is_zero() {
        return vec![ring.one()];
    }
    let labels = staircase_monomials(ring, basis, dmax);
    let mut rows: Vec<Polynomial> = Vec::with_capacity(labels.len());
    let mut fresh: HashMap<Monomial, usize> = HashMap::new();
    for (k, s) in labels.iter().enumerate() {
        let q = if s.is_one() {
            psi.clone()
        } else if let Some(old) = cache.entries.get(s) {
            ring.normal_form(old, basis)
        } else {
            let i = (0..ring.nvars).rev().find(|&i| s.exponent(i) > 0).unwrap();
            let mut e = s.exponents().to_vec();
            e[i] -= 1;
            let parent = Monomial::new(e);
            let prev = &rows[fresh[&parent]];
            ring.normal_form(&ring.mul_term(prev, 1, &Monomial::var(ring.nvars, i)), basis)
        };
        fresh.insert(s.clone(), k);
        cache.entries.insert(s.clone(), q.clone());
        rows.push(q);
    }

    let mut found: Vec<Polynomial> = left_kernel_lower_triangular(ring, &rows)
        .into_iter()
        .map(|v| {
            let terms = v
                .iter()
                .map(|&(k, c)| Term {
                    coeff: c,
                    monomial: labels[k].clone(),
                })
                .collect();
            ring.normalize(terms)
        })
        .collect();
    found.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut accepted: Vec<Polynomial> = Vec::new();
    for h in found {
        if accepted.iter().any(|a| a.lm().divides(h.lm())) {
            continue;
        }
        debug_assert!(ring.normal_form(&ring.mul(&h, phi), basis).is_zero());
        accepted.push(h);
    }
    accepted
}

/// Whether `⟨G⟩` has a pure power of every variable among its leading
/// monomials and `f4(G ∪ {φ}) = {1}`; in that case `⟨G⟩ : φ = ⟨G⟩`.
pub fn zero_dim_shortcut(ring: &Ring, basis: &[Polynomial], phi: &Polynomial) -> bool {
    if !has_pure_powers(ring.nvars, basis) {
        return false;
    }
    let mut g = basis.to_vec();
    g.push(phi.clone());
    f4(ring, &g).is_unit()
}

/// The reduced Gröbner basis of `⟨F⟩ : φ^∞` with default scheduling.
pub fn f4sat(ring: &Ring, generators: &[Polynomial], phi: &Polynomial) -> GroebnerBasis {
    f4sat_with(ring, generators, phi, SatConfig::default()).basis
}

pub fn f4sat_with(ring: &Ring, generators: &[Polynomial], phi: &Polynomial, cfg: SatConfig) -> SatReport {
    let mut report = SatReport {
        basis: GroebnerBasis::from_parts(*ring, Vec::new(), true),
        internal_max_degree: 0,
        nf_phi_degree: None,
        f4_steps: 0,
        kernel_searches: 0,
        discovered: 0,
        shortcut_used: false,
    };
    if phi.is_zero() {
        report.basis = GroebnerBasis::from_parts(*ring, vec![ring.one()], true);
        return report;
    }
    if generators.iter().all(|g| g.is_zero()) {
        report.nf_phi_degree = phi.degree();
        return report;
    }

    let mut engine = F4Engine::with_generators(*ring, generators);
    let mut cache = NfCache::default();
    let mut productive_steps = 0;
    loop {
        if engine.is_unit() {
            break;
        }
        if let Some(step) = engine.step() {
            report.f4_steps += 1;
            if step.added > 0 {
                productive_steps += 1;
            }
            if cfg.steps_between > 0 && productive_steps >= cfg.steps_between {
                productive_steps = 0;
                let g = engine.active_basis();
                let maxdeg = g.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
                let (num, den) = cfg.partial_degree;
                let bound = (num * maxdeg).div_ceil(den);
                report.kernel_searches += 1;
                for h in saturation_step(ring, &g, phi, bound, &mut cache) {
                    report.discovered += 1;
                    engine.insert(h);
                }
            }
            continue;
        }
        let g = engine.active_basis();
        if cfg.zero_dim_shortcut && zero_dim_shortcut(ring, &g, phi) {
            report.shortcut_used = true;
            break;
        }
        let maxdeg = g.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        let bound = maxdeg.max(ring.normal_form(phi, &g).degree().unwrap_or(0));
        report.kernel_searches += 1;
        let new = saturation_step(ring, &g, phi, bound, &mut cache);
        if new.is_empty() {
            break;
        }
        productive_steps = 0;
        for h in new {
            report.discovered += 1;
            engine.insert(h);
        }
    }

    let g = engine.active_basis();
    report.internal_max_degree = g.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    report.nf_phi_degree = ring.normal_form(phi, &g).degree();
    report.basis = reduce_basis(ring, &g);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, PrimeField};

    fn ring() -> Ring {
        Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Drl)
    }

    fn p(r: &Ring, t: &[(i64, &[u32])]) -> Polynomial {
        r.from_terms(t.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn staircase_examples() {
        let r = ring();
        let g = vec![p(&r, &[(1, &[2, 0]), (-1, &[1, 0])]), p(&r, &[(1, &[1, 1])])];
        assert_eq!(
            staircase_monomials(&r, &g, 2),
            vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[0, 2])]
        );
        assert!(staircase_monomials(&r, &[r.one()], 5).is_empty());
        let g = vec![p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[0, 2])])];
        assert_eq!(
            staircase_monomials(&r, &g, 2),
            vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[1, 1])]
        );
    }

    #[test]
    fn kernel_example() {
        let r = ring();
        let x = r.var(0);
        let rows = vec![x.clone(), Polynomial::zero(), x, Polynomial::zero()];
        let k = left_kernel_lower_triangular(&r, &rows);
        assert_eq!(k, vec![vec![(1, 1)], vec![(0, 6), (2, 1)], vec![(3, 1)]]);

        let zeros = vec![Polynomial::zero(); 3];
        assert_eq!(left_kernel_lower_triangular(&r, &zeros).len(), 3);

        let indep = vec![r.var(0), r.var(1), r.one()];
        assert!(left_kernel_lower_triangular(&r, &indep).is_empty());
    }

    #[test]
    fn saturation_step_examples() {
        let r = ring();
        let g = vec![p(&r, &[(1, &[2, 0]), (-1, &[1, 0])]), p(&r, &[(1, &[1, 1])])];
        let hs = saturation_step(&r, &g, &r.var(0), 2, &mut NfCache::default());
        assert_eq!(hs, vec![r.var(1), p(&r, &[(1, &[1, 0]), (-1, &[0, 0])])]);

        let gb = f4(&r, &g);
        assert!(saturation_step(&r, gb.generators(), &r.one(), 2, &mut NfCache::default()).is_empty());

        let hs = saturation_step(&r, &g, &p(&r, &[(1, &[1, 1])]), 2, &mut NfCache::default());
        assert_eq!(hs, vec![r.one()]);
    }

    #[test]
    fn f4sat_examples() {
        let r = ring();
        let f = vec![p(&r, &[(1, &[2, 1])]), p(&r, &[(1, &[1, 2])])];
        assert_eq!(f4sat(&r, &f, &r.var(0)).generators(), &[r.var(1)]);
        assert_eq!(f4sat(&r, &f, &r.var(1)).generators(), &[r.var(0)]);

        let f = vec![p(&r, &[(1, &[2, 0]), (-1, &[1, 0])]), p(&r, &[(1, &[1, 1])])];
        assert_eq!(
            f4sat(&r, &f, &r.var(0)).generators(),
            &[r.var(1), p(&r, &[(1, &[1, 0]), (-1, &[0, 0])])]
        );
    }

    #[test]
    fn zero_phi_and_zero_ideal() {
        let r = ring();
        assert!(f4sat(&r, &[r.var(0)], &Polynomial::zero()).is_unit());
        assert!(f4sat(&r, &[Polynomial::zero()], &r.var(0)).is_empty());
    }

    #[test]
    fn shortcut_examples() {
        let r = ring();
        let g = vec![p(&r, &[(1, &[1, 0]), (-1, &[0, 0])]), r.var(1)];
        assert!(zero_dim_shortcut(&r, &g, &r.var(0)));
        let g = vec![p(&r, &[(1, &[2, 0])]), r.var(1)];
        assert!(!zero_dim_shortcut(&r, &g, &r.var(0)));
        assert!(!zero_dim_shortcut(&r, &[r.var(1)], &r.var(0)));
    }

    #[test]
    fn scheduling_does_not_change_the_answer() {
        let r = Ring::new(PrimeField::new(65521).unwrap(), 3, MonomialOrder::Drl);
        let f = vec![
            p(&r, &[(1, &[2, 1, 0]), (-1, &[1, 0, 1])]),
            p(&r, &[(1, &[1, 2, 0]), (3, &[0, 0, 2])]),
            p(&r, &[(1, &[1, 0, 2]), (1, &[0, 1, 1])]),
        ];
        let phi = p(&r, &[(1, &[1, 0, 0]), (2, &[0, 0, 1])]);
        let base = f4sat(&r, &f, &phi);
        for cfg in [
            SatConfig { steps_between: 0, ..SatConfig::default() },
            SatConfig { steps_between: 1, ..SatConfig::default() },
            SatConfig { zero_dim_shortcut: false, ..SatConfig::default() },
            SatConfig { partial_degree: (1, 1), ..SatConfig::default() },
        ] {
            assert_eq!(f4sat_with(&r, &f, &phi, cfg).basis, base, "{cfg:?}");
        }
    }
}
