//! Sparse multivariate polynomials over the rationals, truncated in total
//! degree.
//!
//! Exponent vectors are dense fixed-length arrays indexed by a fixed variable
//! ordering; the variable count is small here (one variable per building-set
//! member), which keeps monomial comparison trivial. Multiplication discards
//! every term above the truncation order, so these double as truncated
//! multivariate power series.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{format_rat, Rat};
use crate::series::Series;

pub type Exponents = Vec<u32>;

pub fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    nvars: usize,
    trunc: usize,
    /// No zero coefficients are stored; every key has total degree <= trunc.
    terms: BTreeMap<Exponents, Rat>,
}

impl TruncPoly {
    pub fn zero(nvars: usize, trunc: usize) -> Self {
        TruncPoly {
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, trunc: usize, c: Rat) -> Self {
        let mut p = TruncPoly::zero(nvars, trunc);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize, trunc: usize) -> Self {
        TruncPoly::constant(nvars, trunc, Rat::one())
    }

    pub fn variable(nvars: usize, trunc: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut p = TruncPoly::zero(nvars, trunc);
        if trunc >= 1 {
            let mut e = vec![0; nvars];
            e[idx] = 1;
            p.add_term(e, Rat::one());
        }
        p
    }

    pub fn monomial(nvars: usize, trunc: usize, exps: Exponents, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = TruncPoly::zero(nvars, trunc);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.nvars])
    }

    /// Add `c * x^exps`, dropping it if beyond the truncation order and
    /// removing the entry if the coefficient cancels to zero.
    pub fn add_term(&mut self, exps: Exponents, c: Rat) {
        if c.is_zero() || total_degree(&exps) > self.trunc {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TruncPoly) -> TruncPoly {
        self.check_compat(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncPoly) -> TruncPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> TruncPoly {
        if factor.is_zero() {
            return TruncPoly::zero(self.nvars, self.trunc);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * factor;
        }
        out
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        self.check_compat(other);
        let mut out = TruncPoly::zero(self.nvars, self.trunc);
        for (ea, ca) in self.terms() {
            let da = total_degree(ea);
            for (eb, cb) in other.terms() {
                if da + total_degree(eb) > self.trunc {
                    continue;
                }
                let exps: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// `self^k` for `k >= 0`; for `k < 0` the truncated multiplicative
    /// inverse is taken first, which requires constant term 1.
    pub fn pow_signed(&self, k: i64) -> Result<TruncPoly, Error> {
        if k == 0 {
            return Ok(TruncPoly::one(self.nvars, self.trunc));
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = base.clone();
        for _ in 1..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Truncated multiplicative inverse of a series with constant term 1,
    /// via the geometric series in the augmentation part.
    pub fn inverse(&self) -> Result<TruncPoly, Error> {
        if !self.constant_term().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut u = self.clone();
        u.add_term(vec![0; self.nvars], -Rat::one()); // u = self - 1, no constant term
        let mut acc = TruncPoly::one(self.nvars, self.trunc);
        let mut upow = TruncPoly::one(self.nvars, self.trunc);
        for j in 1..=self.trunc {
            upow = upow.mul(&u);
            if upow.is_zero() {
                break;
            }
            if j % 2 == 0 {
                acc = acc.add(&upow);
            } else {
                acc = acc.sub(&upow);
            }
        }
        Ok(acc)
    }

    /// Whether the polynomial is homogeneous linear with zero constant term.
    pub fn is_linear_form(&self) -> bool {
        self.terms.keys().all(|e| total_degree(e) == 1)
    }

    /// The homogeneous part of total degree `j`.
    pub fn homogeneous_part(&self, j: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.trunc);
        for (e, c) in self.terms() {
            if total_degree(e) == j {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// `Some(d)` if every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree, reported as `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| total_degree(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn check_compat(&self, other: &TruncPoly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.trunc, other.trunc, "truncation order mismatch");
    }

    /// Human-readable rendering with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms() {
            let mut factors = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], exp)),
                }
            }
            let mono = factors.join("*");
            let part = if mono.is_empty() {
                format_rat(c)
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else {
                format!("{}*{}", format_rat(c), mono)
            };
            parts.push(part);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Compose a univariate series with a homogeneous linear form:
/// `sum_k s_k * ell^k`, truncated at the polynomial order of `ell`.
pub fn substitute_linear(s: &Series, ell: &TruncPoly) -> Result<TruncPoly, Error> {
    if !ell.is_linear_form() {
        return Err(Error::NotLinear);
    }
    let mut acc = TruncPoly::constant(ell.nvars(), ell.trunc(), s.coeff(0).clone());
    let mut lpow = TruncPoly::one(ell.nvars(), ell.trunc());
    for k in 1..=s.order().min(ell.trunc()) {
        lpow = lpow.mul(ell);
        if lpow.is_zero() {
            break;
        }
        acc = acc.add(&lpow.scale(s.coeff(k)));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::series::q_series;

    fn var(i: usize) -> TruncPoly {
        TruncPoly::variable(2, 2, i)
    }

    #[test]
    fn geometric_inverse() {
        // (1 + c0)^-1 at order 2 is 1 - c0 + c0^2
        let s = TruncPoly::one(2, 2).add(&var(0));
        let inv = s.pow_signed(-1).unwrap();
        assert_eq!(inv.coeff(&[0, 0]), rat_int(1));
        assert_eq!(inv.coeff(&[1, 0]), rat_int(-1));
        assert_eq!(inv.coeff(&[2, 0]), rat_int(1));
        assert_eq!(inv.num_terms(), 3);
    }

    #[test]
    fn zeroth_power_is_one() {
        let s = TruncPoly::one(2, 2).add(&var(0)).add(&var(1).scale(&rat(3, 7)));
        assert_eq!(s.pow_signed(0).unwrap(), TruncPoly::one(2, 2));
    }

    #[test]
    fn square_at_order_one() {
        // (1 + c0 + cL)^2 truncated at order 1 is 1 + 2c0 + 2cL
        let s = TruncPoly::one(2, 1)
            .add(&TruncPoly::variable(2, 1, 0))
            .add(&TruncPoly::variable(2, 1, 1));
        let sq = s.pow_signed(2).unwrap();
        assert_eq!(sq.coeff(&[0, 0]), rat_int(1));
        assert_eq!(sq.coeff(&[1, 0]), rat_int(2));
        assert_eq!(sq.coeff(&[0, 1]), rat_int(2));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn pow_requires_unit_constant_term() {
        let s = var(0);
        assert!(s.pow_signed(-1).is_err());
    }

    #[test]
    fn substitute_q_into_negated_sum() {
        // Q through order 1 composed with -(c0 + cL): 1 - (c0 + cL)/2 exactly
        let ell = var(0).add(&var(1)).neg();
        let t = substitute_linear(&q_series(1), &ell).unwrap();
        assert_eq!(t.coeff(&[0, 0]), rat_int(1));
        assert_eq!(t.coeff(&[1, 0]), rat(-1, 2));
        assert_eq!(t.coeff(&[0, 1]), rat(-1, 2));
        assert_eq!(t.num_terms(), 3);
    }

    #[test]
    fn substitute_constant_series() {
        let s = Series::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        let ell = var(0).add(&var(1).scale(&rat_int(-4)));
        assert_eq!(substitute_linear(&s, &ell).unwrap(), TruncPoly::one(2, 2));
    }

    #[test]
    fn substitute_q_order_two() {
        // Q order 2 composed with -c0: 1 - c0/2 + c0^2/12
        let ell = var(0).neg();
        let t = substitute_linear(&q_series(2), &ell).unwrap();
        assert_eq!(t.coeff(&[0, 0]), rat_int(1));
        assert_eq!(t.coeff(&[1, 0]), rat(-1, 2));
        assert_eq!(t.coeff(&[2, 0]), rat(1, 12));
        assert_eq!(t.num_terms(), 3);
    }

    #[test]
    fn substitute_rejects_nonlinear() {
        let bad = TruncPoly::one(2, 2).add(&var(0));
        assert!(substitute_linear(&q_series(2), &bad).is_err());
        let quad = var(0).mul(&var(0));
        assert!(substitute_linear(&q_series(2), &quad).is_err());
    }

    #[test]
    fn homogeneous_parts() {
        let p = TruncPoly::one(2, 2)
            .add(&var(0).scale(&rat_int(3)))
            .add(&var(0).mul(&var(1)).scale(&rat_int(-2)));
        assert_eq!(p.homogeneous_part(0), TruncPoly::one(2, 2));
        assert_eq!(p.homogeneous_part(1), var(0).scale(&rat_int(3)));
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!(p.homogeneous_part(2).homogeneous_degree(), Some(2));
    }

    #[test]
    fn truncation_discards_high_degrees() {
        let p = var(0).add(&var(1));
        let cube = p.mul(&p).mul(&p);
        // trunc = 2, so the product of three linear factors vanishes
        assert!(cube.is_zero());
    }
}
