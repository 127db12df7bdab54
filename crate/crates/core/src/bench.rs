//! Sum-of-squares benchmark instances.
//!
//! `f = q_1^2 + … + q_p^2` where each `q_i` is a dense polynomial of degree
//! `d` in `n` variables whose coefficients are drawn uniformly from the
//! nonzero elements of the field (ChaCha8, seeded). Mode `pos` gives
//! `I = ⟨∂f/∂x_1, …, ∂f/∂x_{n-1}⟩` and mode `zero` prepends `f`. In both
//! cases `φ = ∂f/∂x_n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::io::format_polynomial;
use crate::oracle::all_monomials;
use crate::ring::{MonomialOrder, Polynomial, PrimeField, Ring};

pub const MAX_VARS: usize = 5;
pub const MAX_DEGREE: u32 = 3;
pub const MAX_SQUARES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SosMode {
    Pos,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SosParams {
    pub degree: u32,
    pub nvars: usize,
    pub squares: usize,
    pub seed: u64,
    pub mode: SosMode,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosInstance {
    pub ring: Ring,
    pub names: Vec<String>,
    pub f: Polynomial,
    pub generators: Vec<Polynomial>,
    pub phi: Polynomial,
}

impl SosInstance {
    /// Problem-file text with a trailing `#phi` line.
    pub fn to_problem_text(&self) -> String {
        let fmt = |p: &Polynomial| format_polynomial(&self.ring, &self.names, p);
        let mut out = format!("{}\n{}\n", self.names.join(","), self.ring.field.characteristic());
        let gens: Vec<String> = self.generators.iter().map(fmt).collect();
        out.push_str(&gens.join(",\n"));
        out.push('\n');
        out.push_str(&format!("#phi {}\n", fmt(&self.phi)));
        out
    }
}

pub fn sos_instance(params: &SosParams) -> Result<SosInstance> {
    let SosParams {
        degree,
        nvars,
        squares,
        seed,
        mode,
        prime,
    } = *params;
    if !(2..=MAX_VARS).contains(&nvars) {
        return Err(Error::contract(format!("n must be between 2 and {MAX_VARS}, got {nvars}")));
    }
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::contract(format!("d must be between 1 and {MAX_DEGREE}, got {degree}")));
    }
    if !(1..=MAX_SQUARES).contains(&squares) {
        return Err(Error::contract(format!("p must be between 1 and {MAX_SQUARES}, got {squares}")));
    }
    let field = PrimeField::new(prime)?;
    let ring = Ring::new(field, nvars, MonomialOrder::Drl);
    let monomials = all_monomials(&ring, degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Polynomial::zero();
    for _ in 0..squares {
        let q = monomials.iter().fold(Polynomial::zero(), |acc, m| {
            let c = rng.gen_range(1..field.characteristic());
            ring.add(&acc, &ring.monomial_poly(c, m.clone()))
        });
        f = ring.add(&f, &ring.mul(&q, &q));
    }
    let mut generators: Vec<Polynomial> = (0..nvars - 1).map(|i| ring.derivative(&f, i)).collect();
    if mode == SosMode::Zero {
        generators.insert(0, f.clone());
    }
    let phi = ring.derivative(&f, nvars - 1);
    let names = (1..=nvars).map(|i| format!("x{i}")).collect();
    Ok(SosInstance {
        ring,
        names,
        f,
        generators,
        phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_problem;

    fn params(mode: SosMode) -> SosParams {
        SosParams {
            degree: 2,
            nvars: 3,
            squares: 2,
            seed: 0,
            mode,
            prime: 1073741827,
        }
    }

    #[test]
    fn deterministic() {
        let a = sos_instance(&params(SosMode::Pos)).unwrap();
        let b = sos_instance(&params(SosMode::Pos)).unwrap();
        assert_eq!(a.generators.len(), 2);
        assert_eq!(a.to_problem_text(), b.to_problem_text());
        let c = sos_instance(&SosParams {
            seed: 1,
            ..params(SosMode::Pos)
        })
        .unwrap();
        assert_ne!(a.to_problem_text(), c.to_problem_text());
    }

    #[test]
    fn zero_mode_adds_f() {
        let pos = sos_instance(&params(SosMode::Pos)).unwrap();
        let zero = sos_instance(&params(SosMode::Zero)).unwrap();
        assert_eq!(zero.generators.len(), pos.generators.len() + 1);
        assert_eq!(zero.generators[0], zero.f);
        assert_eq!(zero.f.degree(), Some(4));
    }

    #[test]
    fn text_round_trips() {
        let inst = sos_instance(&params(SosMode::Zero)).unwrap();
        let p = parse_problem(&inst.to_problem_text(), MonomialOrder::Drl).unwrap();
        assert_eq!(p.polynomials, inst.generators);
        assert_eq!(p.parse_polynomial(p.phi.as_deref().unwrap()).unwrap(), inst.phi);
    }

    #[test]
    fn derivative_rule() {
        let r = Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Drl);
        let f = r.from_terms([(1, vec![2, 1])]);
        assert_eq!(r.derivative(&f, 0), r.from_terms([(2, vec![1, 1])]));
    }

    #[test]
    fn out_of_range() {
        for bad in [
            SosParams { nvars: 6, ..params(SosMode::Pos) },
            SosParams { nvars: 1, ..params(SosMode::Pos) },
            SosParams { degree: 4, ..params(SosMode::Pos) },
            SosParams { degree: 0, ..params(SosMode::Pos) },
            SosParams { squares: 0, ..params(SosMode::Pos) },
            SosParams { prime: 8, ..params(SosMode::Pos) },
        ] {
            assert!(sos_instance(&bad).is_err(), "{bad:?}");
        }
    }
}
