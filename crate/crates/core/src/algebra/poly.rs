//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` ordered by graded lexicographic order, so
//! iteration, printing, and equality are all canonical. At most four
//! variables (`x`, `y`, `z`, `w`) are supported; the cycle algorithms only
//! ever need two, the rest is homogenization/translation slack.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::AlgebraError;

use super::rat::Rat;

pub const MAX_VARS: usize = 4;
pub const VAR_NAMES: [char; MAX_VARS] = ['x', 'y', 'z', 'w'];

/// Exponent vector of a single term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        let mut exps = [0; MAX_VARS];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut full = [0; MAX_VARS];
        full[..exps.len()].copy_from_slice(exps);
        Monomial { exps: full }
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = e.checked_add(o).expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(&s, o)| s <= o)
    }

    /// `other / self`; requires `self.divides(other)`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps) {
            *e -= s;
        }
        Monomial { exps }
    }

    pub fn max_var(&self) -> Option<usize> {
        (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // Lexicographic with x > y > z > w: a higher exponent on an
                // earlier variable is larger.
                for i in 0..MAX_VARS {
                    match self.exps[i].cmp(&other.exps[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Homogeneity report: the zero polynomial is degreeless but compatible with
/// any homogeneous vector, so it gets its own variant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomDegree {
    Zero,
    Deg(u32),
}

/// A sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored zero coefficients; `nvars <= MAX_VARS`; no term uses
/// a variable of index `>= nvars`. Equality and ordering compare terms only,
/// so the same polynomial embedded with different `nvars` compares equal.
#[derive(Clone)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        // Compare term streams from the leading end.
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(Rat::one(), nvars)
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars && nvars <= MAX_VARS);
        let mut p = Poly::zero(nvars);
        p.terms.insert(Monomial::var(i), Rat::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rat, nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            assert!(m.max_var().is_none_or(|v| v < nvars));
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term under graded lex, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Re-embed with a (weakly larger) variable count.
    pub fn with_nvars(&self, nvars: usize) -> Poly {
        assert!(nvars <= MAX_VARS);
        assert!(self.used_vars() <= nvars, "cannot drop used variables");
        Poly {
            nvars,
            terms: self.terms.clone(),
        }
    }

    /// Smallest variable count that covers every term.
    pub fn used_vars(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.max_var())
            .max()
            .map_or(0, |v| v + 1)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.max_var().is_none_or(|v| v < self.nvars));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &Poly) -> Result<usize, AlgebraError> {
        if self.nvars != other.nvars {
            Err(AlgebraError::VarCountMismatch(self.nvars, other.nvars))
        } else {
            Ok(self.nvars)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        let nvars = self.check_nvars(other)?;
        let mut out = Poly {
            nvars,
            terms: self.terms.clone(),
        };
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        let nvars = self.check_nvars(other)?;
        let mut out = Poly {
            nvars,
            terms: self.terms.clone(),
        };
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        let nvars = self.check_nvars(other)?;
        let mut out = Poly::zero(nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        if r.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..exp {
            out = out.checked_mul(self).expect("same nvars");
        }
        out
    }

    /// Exact division: `Ok(Some(r))` with `self = divisor * r`, `Ok(None)` if
    /// the divisor does not divide exactly.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Option<Poly>, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        let nvars = self.nvars.max(divisor.nvars);
        let mut rem = self.clone().with_nvars(nvars);
        let div = divisor.clone().with_nvars(nvars);
        let (dm, dc) = {
            let (m, c) = div.leading().expect("nonzero divisor");
            (*m, c.clone())
        };
        let mut quot = Poly::zero(nvars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !dm.divides(&rm) {
                return Ok(None);
            }
            let qm = dm.div_into(&rm);
            let qc = &rc / &dc;
            quot.add_term(qm, qc.clone());
            // rem -= (qm, qc) * div
            for (m, c) in &div.terms {
                rem.add_term(m.mul(&qm), -&(c * &qc));
            }
        }
        Ok(Some(quot))
    }

    /// Degree if every term shares the same total degree; the zero polynomial
    /// reports [`HomDegree::Zero`]; `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<HomDegree> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(HomDegree::Zero),
            Some(m) => m.total_degree(),
        };
        if it.all(|m| m.total_degree() == first) {
            Some(HomDegree::Deg(first))
        } else {
            None
        }
    }

    /// The homogeneous component of the given total degree.
    pub fn homogeneous_component(&self, degree: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Replace each variable by an affine combination: `x_i ->
    /// sum_j matrix[i][j] x_j + shift[i]`. The matrix must be invertible.
    pub fn substitute_linear(
        &self,
        matrix: &[Vec<Rat>],
        shift: &[Rat],
    ) -> Result<Poly, AlgebraError> {
        let n = self.nvars;
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) || shift.len() != n {
            return Err(AlgebraError::BadSubstitutionShape);
        }
        if det(matrix).is_zero() {
            return Err(AlgebraError::SingularMatrix);
        }
        // Affine image of each variable.
        let mut forms = Vec::with_capacity(n);
        for i in 0..n {
            let mut f = Poly::constant(shift[i].clone(), n);
            for (j, coeff) in matrix[i].iter().enumerate() {
                f = f
                    .checked_add(&Poly::monomial(Monomial::var(j), coeff.clone(), n))
                    .expect("same nvars");
            }
            forms.push(f);
        }
        // Cache powers of each form up to the largest exponent that occurs.
        let mut powers: Vec<Vec<Poly>> = (0..n)
            .map(|i| vec![Poly::one(n), forms[i].clone()])
            .collect();
        let mut out = Poly::zero(n);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone(), n);
            for (i, pows) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pows.len() <= e {
                    let next = pows
                        .last()
                        .unwrap()
                        .checked_mul(&forms[i])
                        .expect("same nvars");
                    pows.push(next);
                }
                if e > 0 {
                    term = term.checked_mul(&pows[e]).expect("same nvars");
                }
            }
            out = out.checked_add(&term).expect("same nvars");
        }
        Ok(out)
    }

    pub fn derivative(&self, var: usize) -> Poly {
        assert!(var < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[var] -= 1;
            out.add_term(Monomial { exps }, c * &Rat::from_int(e as i64));
        }
        out
    }

    /// Monic normal form under graded lex: returns `(self / lc, lc)`. The
    /// zero polynomial is returned unchanged with unit 1.
    pub fn monic(&self) -> (Poly, Rat) {
        match self.leading() {
            None => (self.clone(), Rat::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&lc.recip()), lc)
            }
        }
    }

    /// Smallest positive rational `s` such that `s * self` has coprime
    /// integer coefficients, together with the scaled polynomial. Used to
    /// hand integer data to the elimination routines.
    pub fn integer_primitive(&self) -> (Poly, Rat) {
        if self.is_zero() {
            return (self.clone(), Rat::one());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let s = Rat::new(den_lcm, num_gcd);
        (self.scale(&s), s)
    }

    /// Coefficients as big integers; panics unless all are integers.
    pub fn integer_coeffs(&self) -> Vec<(Monomial, BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                assert!(c.is_integer(), "non-integer coefficient");
                (*m, c.numer().clone())
            })
            .collect()
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert!(point.len() >= self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate().take(self.nvars) {
                let e = m.exp(i);
                if e > 0 {
                    t *= &p.pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }
}

/// Determinant of a small square rational matrix by Laplace expansion.
pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    match n {
        0 => Rat::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Rat::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rat>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

/// Inverse of a small square rational matrix, if it exists.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            for j in 0..n {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    let sub = pv * &factor;
                    *v -= &sub;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_unit() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}", a)?;
                }
                for (name, e) in VAR_NAMES.iter().zip(m.exps) {
                    match e {
                        0 => {}
                        1 => write!(f, "{name}")?,
                        e => write!(f, "{name}^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
