//! Univariate polynomials, Berlekamp–Massey and Hankel solving.

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, PrimeField, Ring, Term};

/// Dense univariate polynomial, coefficients in increasing degree, no
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Checks `Σ_j a_j w_{i+j} = 0` for every window that fits in `w`.
    pub fn annihilates(&self, field: PrimeField, w: &[u32]) -> bool {
        let Some(d) = self.degree() else { return w.is_empty() };
        (0..w.len().saturating_sub(d)).all(|i| {
            self.coeffs
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &a)| field.add(acc, field.mul(a, w[i + j])))
                == 0
        })
    }

    /// The polynomial in `ring` obtained by substituting variable `var`.
    pub fn to_polynomial(&self, ring: &Ring, var: usize) -> Polynomial {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(j, &c)| {
                let mut e = vec![0; ring.nvars];
                e[var] = j as u32;
                Term {
                    coeff: c,
                    monomial: Monomial::new(e),
                }
            })
            .collect();
        ring.normalize(terms)
    }
}

/// Characteristic polynomial `x^L + c_{L-1} x^{L-1} + … + c_0` of the
/// shortest linear recurrence generating `w`; the all-zero sequence gives 1.
pub fn berlekamp_massey(field: PrimeField, w: &[u32]) -> UniPoly {
    let mut c: Vec<u32> = vec![1];
    let mut b: Vec<u32> = vec![1];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = 1u32;
    for n in 0..w.len() {
        let mut d = w[n];
        for i in 1..=l.min(c.len() - 1) {
            d = field.add(d, field.mul(c[i], w[n - i]));
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = field.div(d, bd);
        let t = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] = field.sub(c[i + m], field.mul(coef, bi));
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = t;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, 0);
    UniPoly::new((0..=l).map(|j| c[l - j]).collect())
}

/// Solves `Σ_j γ_j w0_{i+j} = wk_i` for `0 ≤ i < d`.
pub fn hankel_solve(field: PrimeField, w0: &[u32], wk: &[u32], d: usize) -> Result<Vec<u32>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    if w0.len() < 2 * d - 1 || wk.len() < d {
        return Err(Error::contract(format!(
            "Hankel system of size {d} needs {} and {d} terms, got {} and {}",
            2 * d - 1,
            w0.len(),
            wk.len()
        )));
    }
    let mut a: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut row: Vec<u32> = w0[i..i + d].to_vec();
            row.push(wk[i]);
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| a[r][col] != 0).ok_or(Error::SingularHankel(d))?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col]);
        for v in a[col].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && row[col] != 0 {
                let f = row[col];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = field.sub(*v, field.mul(f, pv));
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[d]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(65521).unwrap()
    }

    #[test]
    fn bm_examples() {
        let f = f();
        let m1 = f.neg(1);
        assert_eq!(berlekamp_massey(f, &[1, 1, 2, 3, 5, 8]), UniPoly::new(vec![m1, m1, 1]));
        assert_eq!(berlekamp_massey(f, &[3, 6, 12, 24]), UniPoly::new(vec![f.neg(2), 1]));
        assert_eq!(berlekamp_massey(f, &[0, 0, 0, 0]), UniPoly::one());
    }

    #[test]
    fn bm_leading_zeros() {
        let f = f();
        // 0, 0, 1, 0, 0, ... has minimal recurrence x^3
        let p = berlekamp_massey(f, &[0, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(p, UniPoly::new(vec![0, 0, 0, 1]));
        assert!(p.annihilates(f, &[0, 0, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn hankel_examples() {
        let f = f();
        assert_eq!(hankel_solve(f, &[1, 1, 2], &[3, 5], 2).unwrap(), vec![1, 2]);
        assert_eq!(hankel_solve(f, &[4], &[8], 1).unwrap(), vec![2]);
        assert_eq!(hankel_solve(f, &[1, 2, 4], &[1, 1], 2), Err(Error::SingularHankel(2)));
        assert!(hankel_solve(f, &[1], &[1, 1], 2).is_err());
    }

    #[test]
    fn to_polynomial_places_variable() {
        let r = Ring::new(f(), 2, crate::ring::MonomialOrder::Lex);
        let p = UniPoly::new(vec![1, 0, 3]).to_polynomial(&r, 1);
        assert_eq!(p, r.from_terms([(3, vec![0, 2]), (1, vec![0, 0])]));
    }
}
