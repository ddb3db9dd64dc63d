//! Factored principal-ideal generators with gcd-free lcm.
//!
//! Generators are stored as a unit times monic irreducible factors. The
//! factorization routine covers the shapes the algorithms need: univariate
//! polynomials and bivariate homogeneous ones (dehomogenized to a single
//! variable). Everything else must arrive pre-factored.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::AlgebraError;

use super::poly::{HomDegree, Monomial, Poly};
use super::rat::Rat;

/// `unit * prod factors[i].0 ^ factors[i].1` with monic, pairwise
/// non-associate irreducible factors sorted canonically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredGen {
    unit: Rat,
    factors: Vec<(Poly, u32)>,
}

impl FactoredGen {
    /// Assemble from parts, normalizing each factor to monic form and merging
    /// associates. Irreducibility of supplied factors is the caller's claim.
    pub fn new(unit: Rat, factors: Vec<(Poly, u32)>) -> Result<Self, AlgebraError> {
        if unit.is_zero() {
            return Err(AlgebraError::Parse(
                "factored generator with zero unit".into(),
            ));
        }
        let mut u = unit;
        let mut canon: Vec<(Poly, u32)> = Vec::new();
        for (f, mult) in factors {
            if f.is_zero() {
                return Err(AlgebraError::Parse("zero factor".into()));
            }
            if mult == 0 {
                continue;
            }
            let (monic, lc) = f.monic();
            u *= &lc.pow(mult);
            if monic.total_degree() == Some(0) {
                continue;
            }
            match canon.iter_mut().find(|(g, _)| *g == monic) {
                Some((_, m)) => *m += mult,
                None => canon.push((monic, mult)),
            }
        }
        canon.sort_by(|(a, _), (b, _)| a.cmp(b));
        Ok(FactoredGen {
            unit: u,
            factors: canon,
        })
    }

    pub fn constant(unit: Rat) -> Result<Self, AlgebraError> {
        Self::new(unit, Vec::new())
    }

    /// Same factors with the unit replaced.
    pub fn with_unit(mut self, unit: Rat) -> Result<Self, AlgebraError> {
        if unit.is_zero() {
            return Err(AlgebraError::Parse(
                "factored generator with zero unit".into(),
            ));
        }
        self.unit = unit;
        Ok(self)
    }

    pub fn unit(&self) -> &Rat {
        &self.unit
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    /// Multiply everything back out.
    pub fn expand(&self) -> Poly {
        let nvars = self
            .factors
            .iter()
            .map(|(f, _)| f.used_vars())
            .max()
            .unwrap_or(0);
        let mut out = Poly::constant(self.unit.clone(), nvars);
        for (f, mult) in &self.factors {
            out = out
                .checked_mul(&f.with_nvars(nvars).pow(*mult))
                .expect("same nvars");
        }
        out
    }

    /// Exponent-wise max over the union of factor sets; the unit is monic.
    pub fn lcm(&self, other: &FactoredGen) -> FactoredGen {
        let mut factors: Vec<(Poly, u32)> = self.factors.clone();
        for (g, m) in &other.factors {
            match factors.iter_mut().find(|(f, _)| f == g) {
                Some((_, mm)) => *mm = (*mm).max(*m),
                None => factors.push((g.clone(), *m)),
            }
        }
        factors.sort_by(|(a, _), (b, _)| a.cmp(b));
        FactoredGen {
            unit: Rat::one(),
            factors,
        }
    }

    /// The unique linear form `l` with `self = unit * l^2`, if that is the
    /// shape of this generator.
    pub fn squared_linear_form(&self) -> Option<&Poly> {
        match self.factors.as_slice() {
            [(f, 2)] if f.total_degree() == Some(1) => Some(f),
            _ => None,
        }
    }
}

/// Positive divisors of `n`; requires `n` to fit in u64.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, AlgebraError> {
    let n: u64 = n.abs().try_into().map_err(|_| {
        AlgebraError::UnsupportedFactorShape(
            n.to_string(),
            "constant term too large for rational root search".into(),
        )
    })?;
    if n == 0 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Univariate view of a polynomial in one variable: dense coefficient vector.
fn to_dense(p: &Poly, var: usize) -> Vec<Rat> {
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(var) as usize] = c.clone();
    }
    coeffs
}

fn from_dense(coeffs: &[Rat], var: usize, nvars: usize) -> Poly {
    Poly::from_terms(
        nvars,
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let mut exps = [0u16; 4];
                exps[var] = e as u16;
                (Monomial::from_exps(&exps), c.clone())
            }),
    )
}

fn dense_degree(c: &[Rat]) -> Option<usize> {
    c.iter().rposition(|v| !v.is_zero())
}

fn dense_monic(c: &mut Vec<Rat>) -> Rat {
    let d = dense_degree(c).expect("nonzero");
    let lc = c[d].clone();
    let inv = lc.recip();
    for v in c.iter_mut() {
        *v *= &inv;
    }
    c.truncate(d + 1);
    lc
}

/// Remainder of univariate division (dense, monic divisor not required).
fn dense_rem(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dd = dense_degree(den).expect("nonzero divisor");
    let mut rem = num.to_vec();
    while let Some(rd) = dense_degree(&rem) {
        if rd < dd {
            break;
        }
        let q = &rem[rd] / &den[dd];
        for i in 0..=dd {
            let sub = &den[i] * &q;
            rem[rd - dd + i] -= &sub;
        }
        rem[rd] = Rat::zero();
    }
    rem
}

fn dense_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dd = dense_degree(den).expect("nonzero divisor");
    let mut rem = num.to_vec();
    let nd = dense_degree(&rem).unwrap_or(0);
    let mut quot = vec![Rat::zero(); nd.saturating_sub(dd) + 1];
    while let Some(rd) = dense_degree(&rem) {
        if rd < dd {
            break;
        }
        let q = &rem[rd] / &den[dd];
        quot[rd - dd] = q.clone();
        for i in 0..=dd {
            let sub = &den[i] * &q;
            rem[rd - dd + i] -= &sub;
        }
        rem[rd] = Rat::zero();
    }
    debug_assert!(dense_degree(&rem).is_none(), "inexact division");
    quot
}

fn dense_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    loop {
        match dense_degree(&b) {
            None => {
                if dense_degree(&a).is_some() {
                    dense_monic(&mut a);
                }
                return a;
            }
            Some(_) => {
                let r = dense_rem(&a, &b);
                a = b;
                b = r;
            }
        }
    }
}

fn dense_derivative(c: &[Rat]) -> Vec<Rat> {
    if c.len() <= 1 {
        return vec![Rat::zero()];
    }
    (1..c.len())
        .map(|i| &c[i] * &Rat::from_int(i as i64))
        .collect()
}

/// Yun's square-free decomposition of a monic univariate polynomial:
/// returns pairs `(g_i, i)` with the input equal to `prod g_i^i`.
fn squarefree_decomposition(f: &[Rat]) -> Vec<(Vec<Rat>, u32)> {
    let fd = dense_derivative(f);
    let g = dense_gcd(f, &fd);
    if dense_degree(&g) == Some(0) || dense_degree(&g).is_none() {
        return vec![(f.to_vec(), 1)];
    }
    let mut out = Vec::new();
    let mut c = dense_div_exact(f, &g);
    let mut d = {
        let t = dense_div_exact(&fd, &g);
        sub_dense(&t, &dense_derivative(&c))
    };
    let mut i = 1u32;
    loop {
        let a = dense_gcd(&c, &d);
        if dense_degree(&a).is_some_and(|deg| deg > 0) {
            out.push((a.clone(), i));
        }
        c = dense_div_exact(&c, &a);
        if dense_degree(&c) == Some(0) || dense_degree(&c).is_none() {
            break;
        }
        d = sub_dense(&dense_div_exact(&d, &a), &dense_derivative(&c));
        i += 1;
    }
    out
}

fn sub_dense(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            &x - &y
        })
        .collect()
}

/// Rational roots of a monic squarefree dense polynomial, found via the
/// rational root theorem on its primitive integer form.
fn rational_roots(f: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
    let deg = match dense_degree(f) {
        Some(d) if d >= 1 => d,
        _ => return Ok(vec![]),
    };
    if deg == 1 {
        return Ok(vec![-&(&f[0] / &f[1])]);
    }
    // Clear denominators to integer coefficients.
    let mut den = BigInt::from(1);
    for c in f.iter() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = f.iter().map(|c| c.numer() * &den / c.denom()).collect();
    let lead = &ints[deg];
    let tail = match ints.iter().position(|c| !c.is_zero()) {
        Some(i) => &ints[i],
        None => return Ok(vec![]),
    };
    let mut roots = Vec::new();
    for p in divisors(tail)? {
        for q in divisors(lead)? {
            for sign in [1i64, -1] {
                let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                if roots.contains(&cand) {
                    continue;
                }
                let mut acc = Rat::zero();
                for c in f.iter().rev() {
                    acc = &(&acc * &cand) + c;
                }
                if acc.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Factor a univariate polynomial (in variable `var`) into monic irreducible
/// pieces. After square-free splitting and rational-root extraction, a
/// root-free block of degree <= 3 is provably irreducible over the
/// rationals; larger blocks are rejected.
fn factor_univariate(p: &Poly, var: usize) -> Result<FactoredGen, AlgebraError> {
    let mut dense = to_dense(p, var);
    let unit = dense_monic(&mut dense);
    let nvars = p.nvars().max(var + 1);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    // Pull out the power of the variable itself.
    let low = dense.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        factors.push((Poly::var(var, nvars), low as u32));
        dense.drain(..low);
    }
    for (sf, mult) in squarefree_decomposition(&dense) {
        let mut block = sf;
        dense_monic(&mut block);
        for root in rational_roots(&block)? {
            // Divide out (t - root).
            let lin = vec![-&root, Rat::one()];
            block = dense_div_exact(&block, &lin);
            factors.push((from_dense(&lin, var, nvars), mult));
        }
        match dense_degree(&block) {
            None | Some(0) => {}
            Some(d) if d <= 3 => {
                factors.push((from_dense(&block, var, nvars), mult));
            }
            Some(d) => {
                return Err(AlgebraError::UnsupportedFactorShape(
                    p.to_string(),
                    format!("degree-{d} block with no rational root; supply factors explicitly"),
                ));
            }
        }
    }
    FactoredGen::new(unit, factors)
}

/// Factor a generator polynomial into a [`FactoredGen`].
///
/// Supported shapes: nonzero constants, univariate polynomials in any single
/// variable, and bivariate homogeneous polynomials (factored through
/// dehomogenization). Anything else needs a user-supplied factorization.
pub fn factor_generator(p: &Poly) -> Result<FactoredGen, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::UnsupportedFactorShape(
            "0".into(),
            "zero polynomial".into(),
        ));
    }
    let used: Vec<usize> = (0..p.nvars())
        .filter(|&i| p.terms().any(|(m, _)| m.exp(i) > 0))
        .collect();
    match used.as_slice() {
        [] => FactoredGen::constant(p.coeff(&Monomial::unit())),
        [v] => factor_univariate(p, *v),
        [a, b] => {
            let d = match p.homogeneous_degree() {
                Some(HomDegree::Deg(d)) => d,
                _ => {
                    return Err(AlgebraError::UnsupportedFactorShape(
                        p.to_string(),
                        "multivariate but not homogeneous".into(),
                    ))
                }
            };
            // Dehomogenize: q(t) = p at x_a = t, x_b = 1, factor in t, then
            // rehomogenize each factor and account for the dropped power of
            // x_b.
            let (a, b) = (*a, *b);
            let mut q = vec![Rat::zero(); d as usize + 1];
            for (m, c) in p.terms() {
                q[m.exp(a) as usize] = c.clone();
            }
            let qdeg = dense_degree(&q).expect("nonzero");
            let fg = factor_univariate(&from_dense(&q, a, p.nvars()), a)?;
            let mut factors: Vec<(Poly, u32)> = Vec::new();
            if (d as usize) > qdeg {
                factors.push((Poly::var(b, p.nvars()), d - qdeg as u32));
            }
            for (f, mult) in fg.factors() {
                factors.push((homogenize(f, a, b, p.nvars()), *mult));
            }
            FactoredGen::new(fg.unit().clone(), factors)
        }
        _ => Err(AlgebraError::UnsupportedFactorShape(
            p.to_string(),
            "three or more variables".into(),
        )),
    }
}

/// Homogenize a univariate polynomial in `var_a` to a bivariate form in
/// `(var_a, var_b)` of degree equal to its own.
fn homogenize(f: &Poly, var_a: usize, var_b: usize, nvars: usize) -> Poly {
    let deg = f.total_degree().expect("nonzero");
    Poly::from_terms(
        nvars,
        f.terms().map(|(m, c)| {
            let ea = m.exp(var_a);
            let mut exps = [0u16; 4];
            exps[var_a] = ea;
            exps[var_b] = (deg - ea as u32) as u16;
            (Monomial::from_exps(&exps), c.clone())
        }),
    )
}
