//! Staircases, multiplication-by-`x_n` matrices and Krylov sequences.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::f4::GroebnerBasis;
use crate::ring::{Monomial, Polynomial, PrimeField, Ring};

/// Monomials sorted increasingly under the ring order, with positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    divisor_closed: bool,
}

impl Staircase {
    /// Sorts and indexes `monomials` (duplicates removed).
    pub fn from_monomials(ring: &Ring, mut monomials: Vec<Monomial>, divisor_closed: bool) -> Self {
        monomials.sort_by(|a, b| ring.cmp(a, b));
        monomials.dedup();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Self {
            monomials,
            index,
            divisor_closed,
        }
    }

    /// The full staircase of a zero-dimensional basis.
    pub fn of_basis(g: &GroebnerBasis) -> Result<Self> {
        if !g.is_zero_dimensional() {
            return Err(Error::contract("the ideal is not zero-dimensional"));
        }
        let ring = g.ring();
        let leads: Vec<&Monomial> = g.generators().iter().map(|p| p.lm()).collect();
        let mut all = Vec::new();
        if !leads.iter().any(|l| l.is_one()) {
            let mut level = vec![Monomial::one(ring.nvars)];
            while !level.is_empty() {
                let mut next = Vec::new();
                for m in &level {
                    let last = (0..ring.nvars).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
                    for i in last..ring.nvars {
                        let c = m.mul_var(i);
                        if !leads.iter().any(|l| l.divides(&c)) {
                            next.push(c);
                        }
                    }
                }
                all.append(&mut level);
                level = next;
            }
        }
        Ok(Self::from_monomials(ring, all, true))
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.divisor_closed
    }

    /// Coordinates of `f` on these monomials; terms outside are dropped.
    pub fn project(&self, f: &Polynomial) -> Vec<u32> {
        let mut v = vec![0; self.len()];
        for t in f.terms() {
            if let Some(i) = self.position(&t.monomial) {
                v[i] = t.coeff;
            }
        }
        v
    }

    /// Whether every monomial of `f` is in the set.
    pub fn supports(&self, f: &Polynomial) -> bool {
        f.monomials().all(|m| self.contains(m))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnKind {
    /// `x_n σ_j` is itself a basis monomial.
    Shift,
    /// `x_n σ_j` is a staircase monomial outside the basis.
    Zero,
    /// A normal form.
    Dense,
}

/// Column-sparse square matrix of multiplication by `x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMultMatrix {
    pub dim: usize,
    pub columns: Vec<Vec<(usize, u32)>>,
    pub kinds: Vec<ColumnKind>,
}

impl SparseMultMatrix {
    /// `r M`.
    pub fn left_mul(&self, field: PrimeField, r: &[u32]) -> Vec<u32> {
        self.columns
            .iter()
            .map(|col| col.iter().fold(0, |acc, &(i, v)| field.add(acc, field.mul(r[i], v))))
            .collect()
    }

    /// `M v`.
    pub fn mul_vec(&self, field: PrimeField, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (j, col) in self.columns.iter().enumerate() {
            if v[j] != 0 {
                for &(i, c) in col {
                    out[i] = field.add(out[i], field.mul(c, v[j]));
                }
            }
        }
        out
    }

    pub fn dense_columns(&self) -> usize {
        self.kinds.iter().filter(|k| **k == ColumnKind::Dense).count()
    }
}

/// Matrix of `f ↦ π(NF(x_n f))` on the span of `basis`, where `π` keeps the
/// coordinates on `basis`. Columns whose product is a leading monomial of
/// `g` are read off the generator; only the remaining dense columns need a
/// normal form.
pub fn build_projected_matrix(g: &GroebnerBasis, basis: &Staircase) -> SparseMultMatrix {
    let ring = g.ring();
    let xn = ring.nvars - 1;
    let gens = g.generators();
    let mut columns = Vec::with_capacity(basis.len());
    let mut kinds = Vec::with_capacity(basis.len());
    for s in basis.monomials() {
        let m = s.mul_var(xn);
        if let Some(i) = basis.position(&m) {
            columns.push(vec![(i, 1)]);
            kinds.push(ColumnKind::Shift);
            continue;
        }
        if !gens.iter().any(|p| p.lm().divides(&m)) {
            columns.push(Vec::new());
            kinds.push(ColumnKind::Zero);
            continue;
        }
        let nf = match gens.iter().find(|p| p.lm() == &m) {
            Some(p) if g.is_reduced() => {
                let lead = ring.monomial_poly(p.lc(), m.clone());
                ring.scale(&ring.sub(&lead, p), ring.field.inv(p.lc()))
            }
            _ => g.normal_form(&ring.monomial_poly(1, m.clone())),
        };
        let mut col: Vec<(usize, u32)> = nf
            .terms()
            .iter()
            .filter_map(|t| basis.position(&t.monomial).map(|i| (i, t.coeff)))
            .collect();
        col.sort_unstable();
        columns.push(col);
        kinds.push(ColumnKind::Dense);
    }
    SparseMultMatrix {
        dim: basis.len(),
        columns,
        kinds,
    }
}

/// Multiplication matrix on the full staircase of a zero-dimensional
/// reduced basis.
pub fn build_mult_matrix(g: &GroebnerBasis, s: &Staircase) -> Result<SparseMultMatrix> {
    let full = Staircase::of_basis(g)?;
    if full.monomials() != s.monomials() {
        return Err(Error::contract("the monomial set is not the staircase of the basis"));
    }
    Ok(build_projected_matrix(g, s))
}

/// `(r M^i c_0)` for `i < 2D` and `(r M^i c_k)` for `i < D`, `k ≥ 1`.
pub fn sequences(
    field: PrimeField,
    m: &SparseMultMatrix,
    r: &[u32],
    cs: &[Vec<u32>],
    d: usize,
) -> Result<Vec<Vec<u32>>> {
    if r.len() != m.dim || cs.iter().any(|c| c.len() != m.dim) {
        return Err(Error::contract("vector dimensions do not match the matrix"));
    }
    let mut out: Vec<Vec<u32>> = cs.iter().map(|_| Vec::new()).collect();
    let mut row = r.to_vec();
    for i in 0..2 * d {
        for (k, c) in cs.iter().enumerate() {
            if k == 0 || i < d {
                out[k].push(dot(field, &row, c));
            }
        }
        if i + 1 < 2 * d {
            row = m.left_mul(field, &row);
        }
    }
    Ok(out)
}

pub(crate) fn dot(field: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
