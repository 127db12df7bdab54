//! Macaulay matrices: symbolic preprocessing and reduction.

use std::collections::{HashMap, HashSet};

use super::CriticalPair;
use crate::ring::{Monomial, Polynomial, Ring, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// One half of an S-polynomial.
    SPair,
    /// A multiple of a basis element added to reduce some column.
    Reducer,
    /// An arbitrary polynomial that is not a multiple of a basis element.
    Input,
}

impl RowKind {
    fn rank(self) -> u8 {
        match self {
            RowKind::Reducer => 0,
            RowKind::SPair => 1,
            RowKind::Input => 2,
        }
    }
}

/// Sparse rows against a column dictionary of monomials sorted
/// decreasingly; column 0 is the largest monomial.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    pub columns: Vec<Monomial>,
    pub rows: Vec<Vec<(usize, u32)>>,
    pub kinds: Vec<RowKind>,
}

impl MacaulayMatrix {
    pub fn empty() -> Self {
        Self {
            columns: Vec::new(),
            rows: Vec::new(),
            kinds: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Builds the column dictionary and sparse rows for the given polynomials.
    pub fn from_polys(ring: &Ring, polys: Vec<(Polynomial, RowKind)>) -> Self {
        let mut seen: HashSet<&Monomial> = HashSet::new();
        let mut columns: Vec<Monomial> = Vec::new();
        for (p, _) in &polys {
            for m in p.monomials() {
                if seen.insert(m) {
                    columns.push(m.clone());
                }
            }
        }
        columns.sort_by(|a, b| ring.cmp(b, a));
        let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = polys
            .iter()
            .map(|(p, _)| p.terms().iter().map(|t| (index[&t.monomial], t.coeff)).collect())
            .collect();
        let kinds = polys.iter().map(|(_, k)| *k).collect();
        Self { columns, rows, kinds }
    }
}

/// Builds the matrix for the selected pairs: both halves of every pair,
/// then, for every monomial not yet leading some row, a reducer
/// `m / LM(g) * g` from the first active `g` whose leading monomial
/// divides it, closed under the monomials those reducers introduce.
pub fn symbolic_preprocessing(
    ring: &Ring,
    pairs: &[CriticalPair],
    basis: &[Polynomial],
    active: &[bool],
) -> MacaulayMatrix {
    if pairs.is_empty() {
        return MacaulayMatrix::empty();
    }
    let mut rows: Vec<(Polynomial, RowKind)> = Vec::new();
    let mut multipliers: HashSet<(usize, Monomial)> = HashSet::new();
    let mut done: HashSet<Monomial> = HashSet::new();
    let mut todo: Vec<Monomial> = Vec::new();

    for p in pairs {
        for idx in [p.i, p.j] {
            let g = &basis[idx];
            let mult = g.lm().quotient_of(&p.lcm).expect("lcm is a multiple");
            if multipliers.insert((idx, mult.clone())) {
                let row = ring.mul_term(g, 1, &mult);
                done.insert(row.lm().clone());
                todo.extend(row.monomials().skip(1).cloned());
                rows.push((row, RowKind::SPair));
            }
        }
    }

    while let Some(m) = todo.pop() {
        if !done.insert(m.clone()) {
            continue;
        }
        let reducer = basis
            .iter()
            .enumerate()
            .find(|(i, g)| active[*i] && g.lm().divides(&m));
        if let Some((_, g)) = reducer {
            let mult = g.lm().quotient_of(&m).unwrap();
            let row = ring.mul_term(g, 1, &mult);
            todo.extend(row.monomials().skip(1).filter(|x| !done.contains(*x)).cloned());
            rows.push((row, RowKind::Reducer));
        }
    }
    MacaulayMatrix::from_polys(ring, rows)
}

/// Row-reduces the matrix and returns the fully reduced, monic rows whose
/// pivot column is not the leading column of any row that is a multiple of
/// a basis element, sorted by increasing leading monomial.
pub fn linear_algebra(ring: &Ring, matrix: &MacaulayMatrix) -> Vec<Polynomial> {
    let field = ring.field;
    let p = field.characteristic() as u64;
    let ncols = matrix.ncols();
    let known_leads: HashSet<usize> = matrix
        .rows
        .iter()
        .zip(&matrix.kinds)
        .filter(|(_, k)| **k != RowKind::Input)
        .filter_map(|(r, _)| r.first().map(|e| e.0))
        .collect();

    let mut order: Vec<usize> = (0..matrix.nrows()).filter(|&i| !matrix.rows[i].is_empty()).collect();
    order.sort_by_key(|&i| (matrix.rows[i][0].0, matrix.kinds[i].rank(), i));

    let mut pivot: Vec<Option<Vec<(usize, u32)>>> = vec![None; ncols];
    let mut acc = vec![0u64; ncols];

    let monic = |row: Vec<(usize, u32)>| -> Vec<(usize, u32)> {
        let inv = field.inv(row[0].1);
        row.into_iter().map(|(c, v)| (c, field.mul(v, inv))).collect()
    };

    for i in order {
        let row = &matrix.rows[i];
        let lead = row[0].0;
        if pivot[lead].is_none() {
            pivot[lead] = Some(monic(row.clone()));
            continue;
        }
        for &(c, v) in row {
            acc[c] = v as u64;
        }
        let mut new_lead = None;
        for c in lead..ncols {
            let a = acc[c] % p;
            if a == 0 {
                acc[c] = 0;
                continue;
            }
            match &pivot[c] {
                Some(prow) => {
                    let f = p - a;
                    for &(cc, v) in prow {
                        acc[cc] = (acc[cc] + f * v as u64) % p;
                    }
                }
                None => {
                    new_lead = Some(c);
                    break;
                }
            }
        }
        if let Some(c0) = new_lead {
            let mut out = Vec::new();
            for (c, slot) in acc.iter_mut().enumerate().skip(c0) {
                let a = *slot % p;
                if a != 0 {
                    out.push((c, a as u32));
                }
                *slot = 0;
            }
            pivot[c0] = Some(monic(out));
        }
        acc.iter_mut().for_each(|x| *x = 0);
    }

    let mut result = Vec::new();
    for c0 in (0..ncols).rev() {
        if known_leads.contains(&c0) {
            continue;
        }
        let Some(row) = &pivot[c0] else { continue };
        for &(c, v) in row {
            acc[c] = v as u64;
        }
        for c in c0 + 1..ncols {
            let a = acc[c] % p;
            if a == 0 {
                acc[c] = 0;
                continue;
            }
            if let Some(prow) = &pivot[c] {
                let f = p - a;
                for &(cc, v) in prow {
                    acc[cc] = (acc[cc] + f * v as u64) % p;
                }
            }
        }
        let mut terms = Vec::new();
        for (c, slot) in acc.iter_mut().enumerate().skip(c0) {
            let a = *slot % p;
            if a != 0 {
                terms.push(Term {
                    coeff: a as u32,
                    monomial: matrix.columns[c].clone(),
                });
            }
            *slot = 0;
        }
        result.push(Polynomial { terms });
    }
    result
}
