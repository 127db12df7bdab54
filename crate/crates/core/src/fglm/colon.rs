//! LEX bases of zero-dimensional colon ideals `⟨G⟩ : φ` where `⟨G⟩` itself
//! may be positive-dimensional.

use std::collections::{HashMap, HashSet};

use super::matrix::{build_projected_matrix, dot, SparseMultMatrix, Staircase};
use super::recurrence::{berlekamp_massey, hankel_solve, UniPoly};
use super::{random_scalar, random_vector, FglmConfig, ShapeBasis, VerifyMode};
use crate::error::{Diagnostic, Error, Result};
use crate::f4::GroebnerBasis;
use crate::ring::{Monomial, Polynomial, Ring};

/// Echelon basis of the Krylov space `span{NF(x_n^i φ)}`.
struct Krylov {
    echelon: HashMap<Monomial, Polynomial>,
    support: HashSet<Monomial>,
}

impl Krylov {
    fn build(g: &GroebnerBasis, phi: &Polynomial, cap: usize) -> Result<Self> {
        let ring = g.ring();
        let xn = ring.nvars - 1;
        let mut v = g.normal_form(phi);
        if v.is_zero() {
            return Err(Error::contract("φ lies in the ideal"));
        }
        let mut k = Krylov {
            echelon: HashMap::new(),
            support: HashSet::new(),
        };
        loop {
            let r = k.reduce(ring, &v);
            if r.is_zero() {
                return Ok(k);
            }
            k.support.extend(v.monomials().cloned());
            if k.support.len() > cap || k.echelon.len() >= cap {
                return Err(Error::NotZeroDimensional(cap));
            }
            k.echelon.insert(r.lm().clone(), r);
            v = g.normal_form(&ring.mul_term(&v, 1, &Monomial::var(ring.nvars, xn)));
        }
    }

    fn reduce(&self, ring: &Ring, f: &Polynomial) -> Polynomial {
        let one = Monomial::one(ring.nvars);
        let mut r = f.clone();
        while !r.is_zero() {
            let Some(e) = self.echelon.get(r.lm()) else { break };
            let c = ring.field.neg(ring.field.div(r.lc(), e.lc()));
            r = ring.axpy(&r, c, &one, e);
        }
        r
    }

    fn contains(&self, ring: &Ring, f: &Polynomial) -> bool {
        self.reduce(ring, f).is_zero()
    }

    fn sigma(&self, ring: &Ring) -> Staircase {
        let mut closed: HashSet<Monomial> = HashSet::new();
        for m in &self.support {
            if !closed.contains(m) {
                closed.extend(m.divisors());
            }
        }
        Staircase::from_monomials(ring, closed.into_iter().collect(), true)
    }
}

/// Divisor closure of the supports of the Krylov vectors
/// `NF(φ), NF(x_n φ), NF(x_n^2 φ), …`, grown until the next vector is a
/// linear combination of the previous ones.
pub fn build_sigma(g: &GroebnerBasis, phi: &Polynomial, cap: usize) -> Result<Staircase> {
    Ok(Krylov::build(g, phi, cap)?.sigma(g.ring()))
}

/// Drops every `σ` for which some `x_n^i σ` is a staircase monomial of `G`
/// outside `Σ`.
pub fn reduce_sigma(g: &GroebnerBasis, sigma: &Staircase) -> Staircase {
    let ring = g.ring();
    let xn = ring.nvars - 1;
    let leads: Vec<&Monomial> = g.generators().iter().map(|p| p.lm()).collect();
    let kept = sigma
        .monomials()
        .iter()
        .filter(|s| {
            let mut m = s.mul_var(xn);
            loop {
                if leads.iter().any(|l| l.divides(&m)) {
                    return true;
                }
                if !sigma.contains(&m) {
                    return false;
                }
                m = m.mul_var(xn);
            }
        })
        .cloned()
        .collect();
    Staircase::from_monomials(ring, kept, false)
}

/// Which monomial set to project the multiplication matrix on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaChoice {
    Sigma,
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonReport {
    pub basis: ShapeBasis,
    pub sigma_len: usize,
    pub reduced_len: usize,
    /// The reduced set was unusable and the full one was used instead.
    pub fell_back: bool,
    pub terms: usize,
    pub attempts: u32,
}

struct Setup {
    psi: Polynomial,
    krylov: Krylov,
    sigma: Staircase,
    basis: Staircase,
    matrix: SparseMultMatrix,
    fell_back: bool,
    sigma_reduced_len: usize,
}

fn setup(g: &GroebnerBasis, phi: &Polynomial, choice: SigmaChoice, cfg: &FglmConfig) -> Result<Setup> {
    let psi = g.normal_form(phi);
    let krylov = Krylov::build(g, phi, cfg.max_sigma)?;
    let sigma = krylov.sigma(g.ring());
    let reduced = reduce_sigma(g, &sigma);
    let sigma_reduced_len = reduced.len();
    let (basis, fell_back) = match choice {
        SigmaChoice::Sigma => (sigma.clone(), false),
        SigmaChoice::Reduced => {
            if reduced.is_empty() || reduced.project(&psi).iter().all(|&c| c == 0) {
                (sigma.clone(), true)
            } else {
                (reduced, false)
            }
        }
    };
    let matrix = build_projected_matrix(g, &basis);
    Ok(Setup {
        psi,
        krylov,
        sigma,
        basis,
        matrix,
        fell_back,
        sigma_reduced_len,
    })
}

impl Setup {
    /// A random row vector over `basis`, drawn over `sigma` and restricted
    /// so that both choices see the same coordinates.
    fn row(&self, ring: &Ring, seed: u64) -> Vec<u32> {
        let full = random_vector(ring.field, self.sigma.len(), seed);
        self.basis
            .monomials()
            .iter()
            .map(|m| full[self.sigma.position(m).unwrap()])
            .collect()
    }

    fn terms(&self, ring: &Ring, r: &[u32], c: &[u32], count: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(count);
        let mut row = r.to_vec();
        for i in 0..count {
            out.push(dot(ring.field, &row, c));
            if i + 1 < count {
                row = self.matrix.left_mul(ring.field, &row);
            }
        }
        out
    }

    /// Online Berlekamp–Massey: extend the sequence `stride` terms at a
    /// time until the recurrence has been stable for twice its order, or
    /// `2 dim` terms are known.
    fn eliminant(&self, ring: &Ring, r: &[u32], c: &[u32], stride: usize) -> (UniPoly, Vec<u32>, Vec<u32>) {
        let cap = 2 * self.basis.len();
        let stride = stride.max(1);
        let mut w = Vec::new();
        let mut row = r.to_vec();
        let mut last: Option<(UniPoly, usize)> = None;
        loop {
            let target = (w.len() + stride).min(cap);
            while w.len() < target {
                w.push(dot(ring.field, &row, c));
                row = self.matrix.left_mul(ring.field, &row);
            }
            let p = berlekamp_massey(ring.field, &w);
            let order = p.degree().unwrap_or(0);
            match &last {
                Some((q, since)) if *q == p => {
                    if w.len() - since >= 2 * order && w.len() >= 2 * order {
                        return (p, w, row);
                    }
                }
                _ => last = Some((p.clone(), w.len())),
            }
            if w.len() >= cap {
                return (p, w, row);
            }
        }
    }

    fn extend(&self, ring: &Ring, w: &mut Vec<u32>, row: &mut Vec<u32>, c: &[u32], count: usize) {
        while w.len() < count {
            w.push(dot(ring.field, row, c));
            *row = self.matrix.left_mul(ring.field, row);
        }
    }
}

fn kills(g: &GroebnerBasis, f: &Polynomial, phi: &Polynomial) -> bool {
    g.normal_form(&g.ring().mul(f, phi)).is_zero()
}

/// The eliminant of `⟨G⟩ : φ` recovered through the chosen projection,
/// with a verified `NF(h_n φ) = 0`.
pub fn colon_eliminant(g: &GroebnerBasis, phi: &Polynomial, choice: SigmaChoice, cfg: &FglmConfig) -> Result<UniPoly> {
    let ring = *g.ring();
    let xn = ring.nvars - 1;
    let st = setup(g, phi, choice, cfg)?;
    let c0 = st.basis.project(&st.psi);
    for attempt in 0..=cfg.retries {
        let r = st.row(&ring, cfg.seed.wrapping_add(attempt as u64));
        let (mut hn, mut w, mut row) = st.eliminant(&ring, &r, &c0, cfg.bm_stride);
        if !kills(g, &hn.to_polynomial(&ring, xn), phi) {
            st.extend(&ring, &mut w, &mut row, &c0, 2 * st.basis.len());
            hn = berlekamp_massey(ring.field, &w);
            if !kills(g, &hn.to_polynomial(&ring, xn), phi) {
                continue;
            }
        }
        return Ok(hn);
    }
    Err(Error::Diagnostic(Diagnostic::BadVector))
}

/// LEX basis of the zero-dimensional colon ideal `⟨G⟩ : φ` in shape
/// position; `G` is a reduced DRL basis, possibly positive-dimensional.
pub fn spfglm_col(g: &GroebnerBasis, phi: &Polynomial, cfg: &FglmConfig) -> Result<ShapeBasis> {
    spfglm_col_with(g, phi, cfg).map(|r| r.basis)
}

pub fn spfglm_col_with(g: &GroebnerBasis, phi: &Polynomial, cfg: &FglmConfig) -> Result<ColonReport> {
    let ring = *g.ring();
    let field = ring.field;
    let xn = ring.nvars - 1;
    let st = setup(g, phi, SigmaChoice::Reduced, cfg)?;
    let c0 = st.basis.project(&st.psi);

    let psi_k: Vec<Polynomial> = (0..xn).map(|k| g.normal_form(&ring.mul(&ring.var(k), &st.psi))).collect();
    // shape position holds exactly when every x_k ψ stays in the Krylov space
    if psi_k.iter().any(|p| !st.krylov.contains(&ring, p)) {
        return Err(Error::Diagnostic(Diagnostic::NotInShapePosition));
    }
    let cs: Vec<Vec<u32>> = psi_k.iter().map(|p| st.basis.project(p)).collect();

    for attempt in 0..=cfg.retries {
        let seed = cfg.seed.wrapping_add(attempt as u64);
        let r = st.row(&ring, seed);
        let (mut hn, mut w, mut row) = st.eliminant(&ring, &r, &c0, cfg.bm_stride);
        if !kills(g, &hn.to_polynomial(&ring, xn), phi) {
            st.extend(&ring, &mut w, &mut row, &c0, 2 * st.basis.len());
            hn = berlekamp_massey(field, &w);
            if !kills(g, &hn.to_polynomial(&ring, xn), phi) {
                continue;
            }
        }
        let dp = hn.degree().unwrap_or(0);
        let mut hk = Vec::with_capacity(xn);
        for (k, c) in cs.iter().enumerate() {
            let wk = st.terms(&ring, &r, c, dp);
            let gamma = UniPoly::new(hankel_solve(field, &w, &wk, dp)?);
            let ok = match cfg.verify {
                VerifyMode::Exact => kills(g, &ring.sub(&ring.var(k), &gamma.to_polynomial(&ring, xn)), phi),
                VerifyMode::LambdaShift => {
                    let lambda = random_scalar(field, seed.wrapping_add(k as u64));
                    shifted_parametrization(g, &st, &r, &psi_k[k], k, lambda, dp).as_ref() == Some(&gamma)
                }
            };
            if !ok {
                return Err(Error::Diagnostic(Diagnostic::NotInShapePosition));
            }
            hk.push(gamma);
        }
        return Ok(ColonReport {
            basis: ShapeBasis::new(&ring, hn, hk),
            sigma_len: st.sigma.len(),
            reduced_len: st.sigma_reduced_len,
            fell_back: st.fell_back,
            terms: w.len(),
            attempts: attempt + 1,
        });
    }
    Err(Error::Diagnostic(Diagnostic::BadVector))
}

/// `h_k` recomputed from the sequences of `NF((x_k + λ)φ)` and
/// `NF(x_k (x_k + λ)φ)`; `None` when the Hankel system is singular.
fn shifted_parametrization(
    g: &GroebnerBasis,
    st: &Setup,
    r: &[u32],
    psi_k: &Polynomial,
    k: usize,
    lambda: u32,
    dp: usize,
) -> Option<UniPoly> {
    let ring = *g.ring();
    let shifted = ring.add(psi_k, &ring.scale(&st.psi, lambda));
    let shifted_k = ring.add(
        &g.normal_form(&ring.mul(&ring.var(k), psi_k)),
        &ring.scale(psi_k, lambda),
    );
    if !st.sigma.supports(&shifted_k) {
        return None;
    }
    let w0 = st.terms(&ring, r, &st.basis.project(&shifted), 2 * dp);
    let wk = st.terms(&ring, r, &st.basis.project(&shifted_k), dp);
    hankel_solve(ring.field, &w0, &wk, dp).ok().map(UniPoly::new)
}

/// Probabilistic check that `x_k - h_k(x_n)` lies in `⟨G⟩ : φ`: the
/// parametrization recomputed after multiplying `φ` by `x_k + λ` must
/// agree with `h_k`.
pub fn lambda_shift_check(
    g: &GroebnerBasis,
    phi: &Polynomial,
    k: usize,
    lambda: u32,
    h_k: &UniPoly,
    cfg: &FglmConfig,
) -> Result<bool> {
    let ring = *g.ring();
    let st = setup(g, phi, SigmaChoice::Reduced, cfg)?;
    let hn = colon_eliminant(g, phi, SigmaChoice::Reduced, cfg)?;
    let dp = hn.degree().unwrap_or(0);
    let r = st.row(&ring, cfg.seed);
    let psi_k = g.normal_form(&ring.mul(&ring.var(k), &st.psi));
    if !st.krylov.contains(&ring, &psi_k) {
        return Ok(false);
    }
    Ok(shifted_parametrization(g, &st, &r, &psi_k, k, lambda, dp).as_ref() == Some(h_k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f4::f4;
    use crate::ring::{MonomialOrder, PrimeField};

    fn ring() -> Ring {
        Ring::new(PrimeField::new(65521).unwrap(), 2, MonomialOrder::Drl)
    }

    fn p(r: &Ring, t: &[(i64, &[u32])]) -> Polynomial {
        r.from_terms(t.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn example() -> (Ring, GroebnerBasis) {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[2, 0]), (-1, &[1, 0])]), p(&r, &[(1, &[1, 1])])]);
        (r, g)
    }

    #[test]
    fn sigma_examples() {
        let (r, g) = example();
        let s = build_sigma(&g, &r.var(0), 100).unwrap();
        assert_eq!(s.monomials(), &[m(&[0, 0]), m(&[1, 0])]);
        assert_eq!(reduce_sigma(&g, &s).monomials(), &[m(&[1, 0])]);

        // x + 1 vanishes nowhere on V(I), so the colon is I itself
        let unit = build_sigma(&g, &p(&r, &[(1, &[1, 0]), (1, &[0, 0])]), 100);
        assert_eq!(unit, Err(Error::NotZeroDimensional(100)));

        let g2 = f4(&r, &[p(&r, &[(1, &[0, 2]), (-1, &[0, 1])]), p(&r, &[(1, &[1, 0]), (-1, &[0, 1])])]);
        let s2 = build_sigma(&g2, &r.var(1), 100).unwrap();
        assert_eq!(s2.monomials(), &[m(&[0, 0]), m(&[0, 1])]);
        assert_eq!(reduce_sigma(&g2, &s2), Staircase::from_monomials(&r, s2.monomials().to_vec(), false));

        let g3 = f4(&r, &[p(&r, &[(1, &[1, 0]), (-1, &[0, 0])]), p(&r, &[(1, &[0, 2]), (-1, &[0, 0])])]);
        let s3 = build_sigma(&g3, &r.one(), 100).unwrap();
        assert!(s3.contains(&m(&[0, 1])));
    }

    #[test]
    fn sigma_of_constant_normal_form() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[1, 0]), (-1, &[0, 0])]), r.var(1)]);
        let s = build_sigma(&g, &r.constant(3), 10).unwrap();
        assert_eq!(s.monomials(), &[m(&[0, 0])]);
    }

    #[test]
    fn reduce_sigma_can_empty() {
        // Σ = {1} with y·1 = y outside Σ but inside the staircase of ⟨x⟩
        let r = ring();
        let g = f4(&r, &[r.var(0)]);
        let s = Staircase::from_monomials(&r, vec![m(&[0, 0])], true);
        assert!(reduce_sigma(&g, &s).is_empty());
    }

    #[test]
    fn projected_matrix_examples() {
        let (r, g) = example();
        let s = Staircase::from_monomials(&r, vec![m(&[1, 0])], false);
        assert_eq!(build_projected_matrix(&g, &s).columns, vec![vec![]]);
    }

    #[test]
    fn worked_colon_example() {
        let (r, g) = example();
        let out = spfglm_col(&g, &r.var(0), &FglmConfig::default()).unwrap();
        assert_eq!(out.eliminant, UniPoly::new(vec![0, 1]));
        assert_eq!(out.parametrization, vec![UniPoly::one()]);
        let lr = r.with_order(MonomialOrder::Lex);
        assert_eq!(
            out.to_polynomials(),
            vec![lr.var(1), p(&lr, &[(1, &[1, 0]), (-1, &[0, 0])])]
        );
        let fast = FglmConfig {
            verify: VerifyMode::LambdaShift,
            ..FglmConfig::default()
        };
        assert_eq!(spfglm_col(&g, &r.var(0), &fast).unwrap(), out);
    }

    #[test]
    fn fat_point_is_rejected_in_both_modes() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[1, 1])]), p(&r, &[(1, &[0, 2])])]);
        let phi = p(&r, &[(1, &[1, 0]), (1, &[0, 0])]);
        for verify in [VerifyMode::Exact, VerifyMode::LambdaShift] {
            let cfg = FglmConfig {
                verify,
                ..FglmConfig::default()
            };
            assert_eq!(
                spfglm_col(&g, &phi, &cfg),
                Err(Error::Diagnostic(Diagnostic::NotInShapePosition))
            );
        }
    }

    #[test]
    fn positive_dimensional_colon_fails_explicitly() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[2, 1])]), p(&r, &[(1, &[1, 2])])]);
        let cfg = FglmConfig {
            max_sigma: 200,
            ..FglmConfig::default()
        };
        assert_eq!(spfglm_col(&g, &r.one(), &cfg), Err(Error::NotZeroDimensional(200)));
        let phi = p(&r, &[(1, &[1, 0]), (1, &[0, 1]), (-1, &[0, 0])]);
        assert_eq!(spfglm_col(&g, &phi, &cfg), Err(Error::NotZeroDimensional(200)));
    }

    #[test]
    fn positive_dimensional_input_zero_dimensional_colon() {
        // I = ℓ·⟨x^2 - y - 1, y^2 - 2x⟩ with ℓ = x + 2y + 3, so I : ℓ is
        // the zero-dimensional ideal of the second factor.
        let r = ring();
        let l = p(&r, &[(1, &[1, 0]), (2, &[0, 1]), (3, &[0, 0])]);
        let f1 = p(&r, &[(1, &[2, 0]), (-1, &[0, 1]), (-1, &[0, 0])]);
        let f2 = p(&r, &[(1, &[0, 2]), (-2, &[1, 0])]);
        let g = f4(&r, &[r.mul(&l, &f1), r.mul(&l, &f2)]);
        assert!(!g.is_zero_dimensional());
        let out = spfglm_col_with(&g, &l, &FglmConfig::default()).unwrap();
        let lr = r.with_order(MonomialOrder::Lex);
        let expected = f4(&lr, &[r.reorder(&f1, MonomialOrder::Lex), r.reorder(&f2, MonomialOrder::Lex)]);
        assert_eq!(out.basis.to_basis(), expected);
        assert!(out.reduced_len <= out.sigma_len);
        assert_eq!(
            colon_eliminant(&g, &l, SigmaChoice::Sigma, &FglmConfig::default()).unwrap(),
            colon_eliminant(&g, &l, SigmaChoice::Reduced, &FglmConfig::default()).unwrap()
        );
    }

    #[test]
    fn lambda_check_examples() {
        let (r, g) = example();
        let cfg = FglmConfig::default();
        let h = UniPoly::one();
        for seed in 0..5 {
            let lambda = random_scalar(r.field, seed);
            assert!(lambda_shift_check(&g, &r.var(0), 0, lambda, &h, &cfg).unwrap());
        }
        let bad = UniPoly::new(vec![2]);
        assert!(!lambda_shift_check(&g, &r.var(0), 0, 7, &bad, &cfg).unwrap());
    }
}
