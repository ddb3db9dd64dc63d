//! Exact polynomial arithmetic over the rationals: sparse multivariate
//! polynomials, exact division, factored generators with lcm, and linear
//! changes of variables.

mod factor;
mod parse;
mod poly;
mod rat;

pub use factor::{factor_generator, FactoredGen};
pub use parse::parse_poly;
pub use poly::{det, invert, HomDegree, Monomial, Poly, MAX_VARS, VAR_NAMES};
pub use rat::Rat;

use crate::error::AlgebraError;

/// An affine-linear form: one coefficient per variable plus a constant term.
/// Never identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LinForm {
    coeffs: Vec<Rat>,
    constant: Rat,
}

impl LinForm {
    pub fn new(coeffs: Vec<Rat>, constant: Rat) -> Result<Self, AlgebraError> {
        if coeffs.iter().all(|c| c.is_zero()) && constant.is_zero() {
            return Err(AlgebraError::ZeroLinForm);
        }
        Ok(LinForm { coeffs, constant })
    }

    /// Interpret a polynomial of total degree at most one as a linear form.
    pub fn from_poly(p: &Poly) -> Result<Self, AlgebraError> {
        if p.total_degree().is_some_and(|d| d > 1) {
            return Err(AlgebraError::Parse(format!("`{p}` is not linear")));
        }
        let coeffs = (0..p.nvars()).map(|i| p.coeff(&Monomial::var(i))).collect();
        LinForm::new(coeffs, p.coeff(&Monomial::unit()))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = self.constant.clone();
        for (c, x) in self.coeffs.iter().zip(point) {
            acc += &(c * x);
        }
        acc
    }

    /// Drop the constant term; errors if nothing remains.
    pub fn homogeneous_part(&self) -> Result<LinForm, AlgebraError> {
        LinForm::new(self.coeffs.clone(), Rat::zero())
    }

    pub fn to_poly(&self, nvars: usize) -> Poly {
        let mut p = Poly::constant(self.constant.clone(), nvars);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = p
                    .checked_add(&Poly::monomial(Monomial::var(i), c.clone(), nvars))
                    .expect("same nvars");
            }
        }
        p
    }

    /// Are two forms scalar multiples of each other?
    pub fn proportional(&self, other: &LinForm) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len()) + 1;
        let a: Vec<Rat> = (0..n)
            .map(|i| {
                if i == 0 {
                    self.constant.clone()
                } else {
                    self.coeff(i - 1)
                }
            })
            .collect();
        let b: Vec<Rat> = (0..n)
            .map(|i| {
                if i == 0 {
                    other.constant.clone()
                } else {
                    other.coeff(i - 1)
                }
            })
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if &(&a[i] * &b[j]) - &(&a[j] * &b[i]) != Rat::zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod lin_form_tests {
    use super::*;

    #[test]
    fn from_poly_and_eval() {
        let f = LinForm::from_poly(&parse_poly("2x - 3y + 1").unwrap()).unwrap();
        assert_eq!(f.coeff(0), Rat::from_int(2));
        assert_eq!(f.coeff(1), Rat::from_int(-3));
        assert_eq!(f.constant(), &Rat::one());
        assert_eq!(f.eval(&[Rat::from_int(1), Rat::from_int(1)]), Rat::zero());
        assert!(LinForm::from_poly(&parse_poly("x^2").unwrap()).is_err());
        assert!(LinForm::from_poly(&Poly::zero(2)).is_err());
    }

    #[test]
    fn proportionality() {
        let f = LinForm::from_poly(&parse_poly("x + 2y").unwrap()).unwrap();
        let g = LinForm::from_poly(&parse_poly("-3x - 6y").unwrap()).unwrap();
        let h = LinForm::from_poly(&parse_poly("x + 2y + 1").unwrap()).unwrap();
        assert!(f.proportional(&g));
        assert!(!f.proportional(&h));
    }
}
