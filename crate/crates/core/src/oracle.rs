//! Slow, independent reference computations for testing.

use crate::f4::{f4, GroebnerBasis};
use crate::f4sat::left_kernel_lower_triangular;
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring, Term};

fn drop_first_variable(ext: &Ring, f: &Polynomial, target: &Ring) -> Polynomial {
    debug_assert_eq!(ext.nvars, target.nvars + 1);
    let terms = f
        .terms()
        .iter()
        .map(|t| Term {
            coeff: t.coeff,
            monomial: Monomial::new(t.monomial.exponents()[1..].to_vec()),
        })
        .collect();
    target.normalize(terms)
}

/// `(⟨F⟩ + ⟨1 - tφ⟩) ∩ K[x]`, with `t` as the leading block of an
/// elimination order.
pub fn saturate_rabinowitsch(ring: &Ring, generators: &[Polynomial], phi: &Polynomial) -> GroebnerBasis {
    if phi.is_zero() {
        return GroebnerBasis::from_parts(*ring, vec![ring.one()], true);
    }
    let ext = Ring::new(ring.field, ring.nvars + 1, MonomialOrder::Elim(1));
    let shift: Vec<usize> = (1..=ring.nvars).collect();
    let mut f: Vec<Polynomial> = generators.iter().map(|g| ring.permute_variables(g, &shift, &ext)).collect();
    let t_phi = ext.mul(&ext.var(0), &ring.permute_variables(phi, &shift, &ext));
    f.push(ext.sub(&ext.one(), &t_phi));
    let g = f4(&ext, &f);
    let kept: Vec<Polynomial> = g
        .generators()
        .iter()
        .filter(|p| !p.involves(0))
        .map(|p| drop_first_variable(&ext, p, ring))
        .collect();
    f4(ring, &kept)
}

/// Bayer's method for `⟨F⟩ : x_n^∞`: homogenize, compute a DRL basis with
/// `x_n` the smallest variable, divide out powers of `x_n`, dehomogenize.
pub fn saturate_bayer(ring: &Ring, generators: &[Polynomial]) -> GroebnerBasis {
    let n = ring.nvars;
    let appended = ring.homogenized_ring();
    let homog = ring.homogenize(generators);
    // move the homogenizing variable from last to first
    let hom = Ring::new(ring.field, n + 1, MonomialOrder::Drl);
    let perm: Vec<usize> = (0..n).map(|i| i + 1).chain(std::iter::once(0)).collect();
    let moved: Vec<Polynomial> = homog.iter().map(|f| appended.permute_variables(f, &perm, &hom)).collect();
    let g = f4(&hom, &moved);
    let stripped: Vec<Polynomial> = g
        .generators()
        .iter()
        .map(|p| {
            let k = p.terms().iter().map(|t| t.monomial.exponent(n)).min().unwrap_or(0);
            let terms = p
                .terms()
                .iter()
                .map(|t| {
                    let mut e = t.monomial.exponents().to_vec();
                    e[n] -= k;
                    e[0] = 0;
                    Term {
                        coeff: t.coeff,
                        monomial: Monomial::new(e),
                    }
                })
                .collect();
            let deh = hom.normalize(terms);
            drop_first_variable(&hom, &deh, ring)
        })
        .collect();
    f4(ring, &stripped)
}

/// Basis of `{h : deg h ≤ dmax, hφ ∈ ⟨F⟩}` as an echelonized vector space,
/// sorted by increasing leading monomial.
pub fn colon_brute_force(ring: &Ring, generators: &[Polynomial], phi: &Polynomial, dmax: u32) -> Vec<Polynomial> {
    let g = f4(ring, generators);
    let labels = all_monomials(ring, dmax);
    let rows: Vec<Polynomial> = labels
        .iter()
        .map(|s| g.normal_form(&ring.mul_term(phi, 1, s)))
        .collect();
    let mut out: Vec<Polynomial> = left_kernel_lower_triangular(ring, &rows)
        .into_iter()
        .map(|v| {
            ring.normalize(
                v.iter()
                    .map(|&(k, c)| Term {
                        coeff: c,
                        monomial: labels[k].clone(),
                    })
                    .collect(),
            )
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    out
}

/// All monomials of degree at most `dmax`, increasing.
pub fn all_monomials(ring: &Ring, dmax: u32) -> Vec<Monomial> {
    let mut all = vec![Monomial::one(ring.nvars)];
    let mut level = all.clone();
    for _ in 0..dmax {
        let mut next = Vec::new();
        for m in &level {
            let last = (0..ring.nvars).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
            for i in last..ring.nvars {
                next.push(m.mul_var(i));
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| ring.cmp(a, b));
    all
}

/// Equality of ideals via their reduced Gröbner bases.
pub fn ideal_equal(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    f4(ring, a) == f4(ring, b)
}
