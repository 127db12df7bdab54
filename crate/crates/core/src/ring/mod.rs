//! Exact arithmetic over `Z/pZ`: monomials, orders, polynomials and the
//! basic reduction machinery every other module builds on.

mod field;
mod monomial;
mod order;
mod polynomial;

use std::cmp::Ordering;

pub use field::{is_prime, PrimeField};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};

use crate::error::{Error, Result};

/// A polynomial ring `GF(p)[x_1, ..., x_n]` together with the monomial
/// order its polynomials are sorted by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize, order: MonomialOrder) -> Self {
        if let MonomialOrder::Elim(k) = order {
            assert!(k <= nvars, "elimination block larger than the ring");
        }
        Self { field, nvars, order }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring::new(self.field, self.nvars, order)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> Polynomial {
        self.monomial_poly(c, Monomial::one(self.nvars))
    }

    pub fn var(&self, index: usize) -> Polynomial {
        self.monomial_poly(1, Monomial::var(self.nvars, index))
    }

    pub fn monomial_poly(&self, c: u32, m: Monomial) -> Polynomial {
        let c = self.field.reduce_u64(c as u64);
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term { coeff: c, monomial: m }],
            }
        }
    }

    /// Builds a polynomial from arbitrary `(coefficient, exponents)` pairs:
    /// coefficients are reduced, duplicates merged, zeros dropped.
    pub fn from_terms<I>(&self, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (i64, Vec<u32>)>,
    {
        let raw = terms
            .into_iter()
            .map(|(c, e)| {
                assert_eq!(e.len(), self.nvars, "exponent vector length");
                Term {
                    coeff: self.field.from_i64(c),
                    monomial: Monomial::new(e),
                }
            })
            .collect();
        self.normalize(raw)
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff == 0 {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff == 0) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Re-sorts `f` for another order, returning it in the ring `self.with_order(order)`.
    pub fn reorder(&self, f: &Polynomial, order: MonomialOrder) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial { terms }
    }

    /// Checks the sorted/no-zero invariant.
    pub fn is_well_formed(&self, f: &Polynomial) -> bool {
        f.terms.iter().all(|t| t.coeff != 0 && t.coeff < self.field.characteristic() && t.monomial.nvars() == self.nvars)
            && f.terms.windows(2).all(|w| self.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, 1, &Monomial::one(self.nvars), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, self.field.neg(1), &Monomial::one(self.nvars), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// `c * m * f`; the order is multiplicative so no re-sort is needed.
    pub fn mul_term(&self, f: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    /// `f + c * m * g` as a single merge.
    pub fn axpy(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        Polynomial {
            terms: self.axpy_terms(&f.terms, c, m, g),
        }
    }

    fn axpy_terms(&self, f: &[Term], c: u32, m: &Monomial, g: &Polynomial) -> Vec<Term> {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut a = f.iter().peekable();
        let mut b = g.terms.iter().map(|t| Term {
            coeff: self.field.mul(t.coeff, c),
            monomial: t.monomial.mul(m),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.take()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.push(a.next().unwrap().clone());
                }
                (None, Some(tb)) => {
                    out.push(tb);
                    next_b = b.next();
                }
                (Some(ta), Some(tb)) => match self.cmp(&ta.monomial, &tb.monomial) {
                    Ordering::Greater => {
                        out.push(a.next().unwrap().clone());
                        next_b = Some(tb);
                    }
                    Ordering::Less => {
                        out.push(tb);
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let s = self.field.add(ta.coeff, tb.coeff);
                        if s != 0 {
                            out.push(Term {
                                coeff: s,
                                monomial: tb.monomial,
                            });
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        out
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for t in &small.terms {
            acc = self.axpy(&acc, t.coeff, &t.monomial, big);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales `f` so its leading coefficient is one. Zero stays zero.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn derivative(&self, f: &Polynomial, index: usize) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .filter(|t| t.monomial.exponent(index) > 0)
            .map(|t| {
                let e = t.monomial.exponent(index);
                let mut exps = t.monomial.exponents().to_vec();
                exps[index] -= 1;
                Term {
                    coeff: self.field.mul(t.coeff, self.field.reduce_u64(e as u64)),
                    monomial: Monomial::new(exps),
                }
            })
            .collect();
        // d/dx keeps the relative order of the surviving terms only for
        // some orders, so renormalize.
        self.normalize(terms)
    }

    /// Remainder of `f` on division by `divisors`, reducing the largest
    /// reducible monomial first and always using the first divisor (in
    /// list order) whose leading monomial divides it.
    pub fn normal_form(&self, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
        let mut rest = f.terms.clone();
        let mut pos = 0;
        let mut remainder: Vec<Term> = Vec::new();
        // Inverses of leading coefficients, computed once.
        let lcinv: Vec<u32> = divisors
            .iter()
            .map(|g| if g.is_zero() { 0 } else { self.field.inv(g.lc()) })
            .collect();
        while let Some(lead) = rest.get(pos) {
            let hit = divisors
                .iter()
                .enumerate()
                .find(|(_, g)| !g.is_zero() && g.lm().divides(&lead.monomial));
            match hit {
                Some((i, g)) => {
                    let q = g.lm().quotient_of(&lead.monomial).unwrap();
                    let c = self.field.neg(self.field.mul(lead.coeff, lcinv[i]));
                    rest = self.axpy_terms(&rest[pos..], c, &q, g);
                    pos = 0;
                }
                None => {
                    remainder.push(lead.clone());
                    pos += 1;
                }
            }
        }
        Polynomial { terms: remainder }
    }

    /// `lcm/LT(f) * f - lcm/LT(g) * g`.
    pub fn spolynomial(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::contract("S-polynomial of a zero polynomial"));
        }
        let l = f.lm().lcm(g.lm());
        let mf = f.lm().quotient_of(&l).unwrap();
        let mg = g.lm().quotient_of(&l).unwrap();
        let a = self.mul_term(f, self.field.inv(f.lc()), &mf);
        Ok(self.axpy(&a, self.field.neg(self.field.inv(g.lc())), &mg, g))
    }

    /// Ring with one more variable `x_0`, appended last so that it is the
    /// smallest variable.
    pub fn homogenized_ring(&self) -> Ring {
        Ring::new(self.field, self.nvars + 1, self.order)
    }

    /// Homogenizes every polynomial with a fresh smallest variable; the
    /// results live in [`Ring::homogenized_ring`].
    pub fn homogenize(&self, polys: &[Polynomial]) -> Vec<Polynomial> {
        let target = self.homogenized_ring();
        polys
            .iter()
            .map(|f| {
                let d = f.degree().unwrap_or(0);
                let terms = f
                    .terms
                    .iter()
                    .map(|t| {
                        let mut e = t.monomial.exponents().to_vec();
                        e.push(d - t.monomial.degree());
                        Term {
                            coeff: t.coeff,
                            monomial: Monomial::new(e),
                        }
                    })
                    .collect();
                target.normalize(terms)
            })
            .collect()
    }

    /// Sets the last variable to one, landing in the ring with one fewer
    /// variable (same order kind).
    pub fn dehomogenize(&self, polys: &[Polynomial]) -> Vec<Polynomial> {
        assert!(self.nvars >= 1);
        let target = Ring::new(self.field, self.nvars - 1, self.order);
        polys
            .iter()
            .map(|f| {
                let terms = f
                    .terms
                    .iter()
                    .map(|t| Term {
                        coeff: t.coeff,
                        monomial: Monomial::new(t.monomial.exponents()[..self.nvars - 1].to_vec()),
                    })
                    .collect();
                target.normalize(terms)
            })
            .collect()
    }

    /// Moves variables around: variable `i` of `self` becomes variable
    /// `perm[i]` of `target`.
    pub fn permute_variables(&self, f: &Polynomial, perm: &[usize], target: &Ring) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0; target.nvars];
                for (i, &x) in t.monomial.exponents().iter().enumerate() {
                    e[perm[i]] = x;
                }
                Term {
                    coeff: t.coeff,
                    monomial: Monomial::new(e),
                }
            })
            .collect();
        target.normalize(terms)
    }
}
