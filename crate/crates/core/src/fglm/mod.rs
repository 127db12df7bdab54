//! Change of ordering from DRL to LEX for ideals and colon ideals in shape
//! position, through linearly recurrent sequences.

mod colon;
mod matrix;
mod recurrence;

pub use colon::{
    build_sigma, colon_eliminant, lambda_shift_check, reduce_sigma, spfglm_col, spfglm_col_with, ColonReport,
    SigmaChoice,
};
pub use matrix::{build_mult_matrix, build_projected_matrix, sequences, ColumnKind, SparseMultMatrix, Staircase};
pub use recurrence::{berlekamp_massey, hankel_solve, UniPoly};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Diagnostic, Error, Result};
use crate::f4::GroebnerBasis;
use crate::ring::{MonomialOrder, Polynomial, PrimeField, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Check `NF((x_k - h_k)φ) = 0` for every `k`.
    Exact,
    /// Recompute every `h_k` through a random shift `x_k + λ` and compare.
    LambdaShift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FglmConfig {
    pub seed: u64,
    /// Extra attempts with seeds `seed + 1, seed + 2, …` after a bad vector.
    pub retries: u32,
    /// Give up on the Krylov support once it exceeds this many monomials.
    pub max_sigma: usize,
    /// Online Berlekamp–Massey reruns after this many new terms.
    pub bm_stride: usize,
    pub verify: VerifyMode,
}

impl Default for FglmConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            retries: 3,
            max_sigma: 1_000_000,
            bm_stride: 16,
            verify: VerifyMode::Exact,
        }
    }
}

/// `{h_n(x_n), x_{n-1} - h_{n-1}(x_n), …, x_1 - h_1(x_n)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeBasis {
    ring: Ring,
    pub eliminant: UniPoly,
    /// `parametrization[k]` is `h_{k+1}`, for the variables before `x_n`.
    pub parametrization: Vec<UniPoly>,
}

impl ShapeBasis {
    pub fn new(ring: &Ring, eliminant: UniPoly, parametrization: Vec<UniPoly>) -> Self {
        Self {
            ring: ring.with_order(MonomialOrder::Lex),
            eliminant,
            parametrization,
        }
    }

    /// The LEX ring the basis lives in.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Generators under LEX, by increasing leading monomial.
    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        let r = &self.ring;
        let xn = r.nvars - 1;
        let hn = self.eliminant.to_polynomial(r, xn);
        if hn.is_constant() {
            return vec![r.one()];
        }
        let mut out = vec![hn];
        for k in (0..xn).rev() {
            let hk = self.parametrization[k].to_polynomial(r, xn);
            out.push(r.sub(&r.var(k), &hk));
        }
        out
    }

    pub fn to_basis(&self) -> GroebnerBasis {
        GroebnerBasis::from_parts(self.ring, self.to_polynomials(), true)
    }
}

pub(crate) fn random_vector(field: PrimeField, len: usize, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.gen_range(1..field.characteristic())).collect()
}

pub(crate) fn random_scalar(field: PrimeField, seed: u64) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5bd1_e995_9e37_79b9);
    rng.gen_range(1..field.characteristic())
}

/// LEX basis of a zero-dimensional ideal in shape position from its reduced
/// DRL basis and staircase.
pub fn spfglm(g: &GroebnerBasis, s: &Staircase, cfg: &FglmConfig) -> Result<ShapeBasis> {
    let ring = g.ring();
    let field = ring.field;
    let m = build_mult_matrix(g, s)?;
    let d = s.len();
    let one = s.project(&ring.one());
    let xn = ring.nvars - 1;
    let cs: Vec<Vec<u32>> = std::iter::once(one)
        .chain((0..xn).map(|k| s.project(&g.normal_form(&ring.var(k)))))
        .collect();
    for attempt in 0..=cfg.retries {
        let r = random_vector(field, d, cfg.seed.wrapping_add(attempt as u64));
        let w = sequences(field, &m, &r, &cs, d)?;
        let hn = berlekamp_massey(field, &w[0]);
        if hn.degree() != Some(d) {
            continue;
        }
        let hk = (1..cs.len())
            .map(|k| hankel_solve(field, &w[0], &w[k], d).map(UniPoly::new))
            .collect::<Result<Vec<_>>>()?;
        return Ok(ShapeBasis::new(ring, hn, hk));
    }
    Err(Error::Diagnostic(Diagnostic::NotInShapePositionOrBadVector))
}

/// LEX basis of `⟨G⟩ : φ` for zero-dimensional `⟨G⟩`, through the full
/// multiplication matrix.
pub fn spfglm_colon_zero_dim(g: &GroebnerBasis, s: &Staircase, phi: &Polynomial, cfg: &FglmConfig) -> Result<ShapeBasis> {
    let ring = g.ring();
    let field = ring.field;
    let psi = g.normal_form(phi);
    if psi.is_zero() {
        return Err(Error::contract("φ lies in the ideal"));
    }
    let m = build_mult_matrix(g, s)?;
    let d = s.len();
    let xn = ring.nvars - 1;
    let mut cs = vec![s.project(&psi)];
    cs.extend((0..xn).map(|k| s.project(&g.normal_form(&ring.mul(&ring.var(k), &psi)))));
    for attempt in 0..=cfg.retries {
        let r = random_vector(field, d, cfg.seed.wrapping_add(attempt as u64));
        let w = sequences(field, &m, &r, &cs, d)?;
        let hn = berlekamp_massey(field, &w[0]);
        if !g.normal_form(&ring.mul(&hn.to_polynomial(ring, xn), phi)).is_zero() {
            continue;
        }
        let dp = hn.degree().unwrap_or(0);
        let mut hk = Vec::with_capacity(xn);
        for k in 0..xn {
            let gamma = UniPoly::new(hankel_solve(field, &w[0], &w[k + 1], dp)?);
            let diff = ring.sub(&ring.var(k), &gamma.to_polynomial(ring, xn));
            if !g.normal_form(&ring.mul(&diff, phi)).is_zero() {
                return Err(Error::Diagnostic(Diagnostic::NotInShapePosition));
            }
            hk.push(gamma);
        }
        return Ok(ShapeBasis::new(ring, hn, hk));
    }
    Err(Error::Diagnostic(Diagnostic::BadVector))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f4::f4;

    fn ring() -> Ring {
        Ring::new(PrimeField::new(65521).unwrap(), 2, MonomialOrder::Drl)
    }

    fn p(r: &Ring, t: &[(i64, &[u32])]) -> Polynomial {
        r.from_terms(t.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    fn lex(r: &Ring, t: &[(i64, &[u32])]) -> Polynomial {
        p(&r.with_order(MonomialOrder::Lex), t)
    }

    #[test]
    fn spfglm_two_points() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[0, 2]), (-1, &[0, 1])]), p(&r, &[(1, &[1, 0]), (-1, &[0, 1])])]);
        let s = Staircase::of_basis(&g).unwrap();
        let out = spfglm(&g, &s, &FglmConfig::default()).unwrap().to_polynomials();
        assert_eq!(
            out,
            vec![lex(&r, &[(1, &[0, 2]), (-1, &[0, 1])]), lex(&r, &[(1, &[1, 0]), (-1, &[0, 1])])]
        );
    }

    #[test]
    fn spfglm_single_point() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[1, 0]), (-1, &[0, 0])]), p(&r, &[(1, &[0, 1]), (-1, &[0, 0])])]);
        let s = Staircase::of_basis(&g).unwrap();
        let out = spfglm(&g, &s, &FglmConfig::default()).unwrap().to_polynomials();
        assert_eq!(
            out,
            vec![lex(&r, &[(1, &[0, 1]), (-1, &[0, 0])]), lex(&r, &[(1, &[1, 0]), (-1, &[0, 0])])]
        );
    }

    #[test]
    fn spfglm_not_in_shape_position() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[1, 1])]), p(&r, &[(1, &[0, 2])])]);
        let s = Staircase::of_basis(&g).unwrap();
        assert_eq!(
            spfglm(&g, &s, &FglmConfig::default()),
            Err(Error::Diagnostic(Diagnostic::NotInShapePositionOrBadVector))
        );
    }

    #[test]
    fn spfglm_matches_lex_f4() {
        let r = Ring::new(PrimeField::new(65521).unwrap(), 3, MonomialOrder::Drl);
        let f = vec![
            p(&r, &[(1, &[2, 0, 0]), (3, &[0, 1, 0]), (-2, &[0, 0, 1]), (1, &[0, 0, 0])]),
            p(&r, &[(1, &[0, 2, 0]), (5, &[1, 0, 0]), (7, &[0, 0, 0])]),
            p(&r, &[(1, &[0, 0, 2]), (1, &[1, 1, 0]), (-4, &[0, 0, 0])]),
        ];
        let g = f4(&r, &f);
        let s = Staircase::of_basis(&g).unwrap();
        let out = spfglm(&g, &s, &FglmConfig::default()).unwrap();
        let lr = r.with_order(MonomialOrder::Lex);
        let f_lex: Vec<_> = f.iter().map(|x| r.reorder(x, MonomialOrder::Lex)).collect();
        assert_eq!(out.to_basis(), f4(&lr, &f_lex));
    }

    #[test]
    fn colon_zero_dim_examples() {
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[0, 2]), (-1, &[0, 1])]), p(&r, &[(1, &[1, 0]), (-1, &[0, 1])])]);
        let s = Staircase::of_basis(&g).unwrap();
        let cfg = FglmConfig::default();
        let out = spfglm_colon_zero_dim(&g, &s, &r.var(1), &cfg).unwrap().to_polynomials();
        assert_eq!(
            out,
            vec![lex(&r, &[(1, &[0, 1]), (-1, &[0, 0])]), lex(&r, &[(1, &[1, 0]), (-1, &[0, 0])])]
        );
        assert_eq!(
            spfglm_colon_zero_dim(&g, &s, &r.one(), &cfg).unwrap(),
            spfglm(&g, &s, &cfg).unwrap()
        );
        assert!(matches!(
            spfglm_colon_zero_dim(&g, &s, &g.generators()[0], &cfg),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn colon_zero_dim_not_in_shape_position() {
        // ⟨x^2, xy, y^2⟩ : (x + 1) is the ideal itself
        let r = ring();
        let g = f4(&r, &[p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[1, 1])]), p(&r, &[(1, &[0, 2])])]);
        let s = Staircase::of_basis(&g).unwrap();
        let phi = p(&r, &[(1, &[1, 0]), (1, &[0, 0])]);
        assert_eq!(
            spfglm_colon_zero_dim(&g, &s, &phi, &FglmConfig::default()),
            Err(Error::Diagnostic(Diagnostic::NotInShapePosition))
        );
    }
}
