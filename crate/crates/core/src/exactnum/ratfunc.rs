//! Rational functions in `q, Q_1, …, Q_d` over a cyclotomic field, kept in
//! partially factored form.
//!
//! A value is stored as `c · x^e · Π f_i^{k_i}` where `c` is a field
//! constant, `x^e` a Laurent monomial and each `f_i` a *normalized*
//! polynomial (minimum exponent zero in every variable, leading coefficient
//! one) with a nonzero signed multiplicity.  Products and quotients merge
//! factor lists, so the products of binomials that dominate this crate stay
//! small; sums expand only the parts that are not shared.  Equality is
//! decided exactly by testing whether the difference vanishes.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use super::cyclo::{CycField, CycRat};
use super::laurent::{Exps, LaurentPoly};
use crate::error::{Error, Result};

/// An element of the rational function field `Q(ζ)(x_0, …, x_{k-1})`.
#[derive(Clone)]
pub struct RatFunc {
    field: Arc<CycField>,
    coef: CycRat,
    mono: Exps,
    factors: Vec<(LaurentPoly, i32)>,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coef)?;
        for (v, &k) in self.mono.iter().enumerate() {
            if k != 0 {
                write!(f, "*x{}^{}", v, k)?;
            }
        }
        for (p, k) in &self.factors {
            write!(f, "*({})^{}", p, k)?;
        }
        Ok(())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl RatFunc {
    /// The zero function.
    pub fn zero(field: &Arc<CycField>, nvars: usize) -> RatFunc {
        RatFunc {
            field: field.clone(),
            coef: CycRat::zero(field),
            mono: vec![0; nvars],
            factors: Vec::new(),
        }
    }

    /// The constant `c`.
    pub fn constant(c: CycRat, nvars: usize) -> RatFunc {
        RatFunc {
            field: c.field().clone(),
            coef: c,
            mono: vec![0; nvars],
            factors: Vec::new(),
        }
    }

    /// The single term `c · x^e`.
    pub fn monomial(c: CycRat, e: Exps) -> RatFunc {
        RatFunc {
            field: c.field().clone(),
            coef: c,
            mono: e,
            factors: Vec::new(),
        }
    }

    /// Wrap a Laurent polynomial.
    pub fn from_poly(p: &LaurentPoly, field: &Arc<CycField>) -> RatFunc {
        let nvars = p.nvars();
        match p.normalize() {
            None => Self::zero(field, nvars),
            Some((c, e, g)) => {
                let mut r = RatFunc {
                    field: field.clone(),
                    coef: c,
                    mono: e,
                    factors: Vec::new(),
                };
                if !g.is_one() {
                    r.factors.push((g, 1));
                }
                r
            }
        }
    }

    /// Quotient of two Laurent polynomials.
    pub fn from_fraction(num: &LaurentPoly, den: &LaurentPoly, field: &Arc<CycField>) -> Result<RatFunc> {
        let n = Self::from_poly(num, field);
        let d = Self::from_poly(den, field);
        n.div(&d)
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.mono.len()
    }

    /// Coefficient field.
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// Factored representation: constant, monomial exponent and the list of
    /// normalized factors with signed multiplicities.
    pub fn parts(&self) -> (&CycRat, &Exps, &[(LaurentPoly, i32)]) {
        (&self.coef, &self.mono, &self.factors)
    }

    fn one_poly(&self) -> LaurentPoly {
        LaurentPoly::constant(CycRat::one(&self.field), self.nvars())
    }

    /// Expanded numerator (the constant and positive monomial part included).
    pub fn num(&self) -> LaurentPoly {
        let pos: Exps = self.mono.iter().map(|&k| k.max(0)).collect();
        let mut p = LaurentPoly::monomial(self.coef.clone(), pos);
        for (f, k) in &self.factors {
            if *k > 0 {
                p = p.mul(&f.pow(*k as u32));
            }
        }
        p
    }

    /// Expanded denominator (monic in the lexicographic order).
    pub fn den(&self) -> LaurentPoly {
        let neg: Exps = self.mono.iter().map(|&k| (-k).max(0)).collect();
        let mut p = LaurentPoly::monomial(CycRat::one(&self.field), neg);
        for (f, k) in &self.factors {
            if *k < 0 {
                p = p.mul(&f.pow((-*k) as u32));
            }
        }
        p
    }

    /// True if the function is a Laurent polynomial, i.e. no factor has a
    /// negative multiplicity.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k > 0)
    }

    fn push_factor(&mut self, g: LaurentPoly, k: i32) {
        if k == 0 || g.is_one() {
            return;
        }
        if let Some(slot) = self.factors.iter_mut().find(|(f, _)| *f == g) {
            slot.1 += k;
        } else {
            self.factors.push((g, k));
        }
        self.factors.retain(|(_, k)| *k != 0);
    }

    /// Multiply by a polynomial, cancelling denominator factors that divide
    /// it exactly.
    fn absorb_poly(&mut self, p: &LaurentPoly) {
        let Some((c, e, mut g)) = p.normalize() else {
            *self = Self::zero(&self.field, self.nvars());
            return;
        };
        self.coef = self.coef.mul(&c);
        for (a, b) in self.mono.iter_mut().zip(&e) {
            *a += b;
        }
        if g.is_one() {
            return;
        }
        let mut i = 0;
        while i < self.factors.len() {
            if self.factors[i].1 < 0 && self.factors[i].0.len() <= g.len() {
                if let Some(quot) = g.exact_div(&self.factors[i].0) {
                    g = quot;
                    self.factors[i].1 += 1;
                    if self.factors[i].1 == 0 {
                        self.factors.remove(i);
                    }
                    if g.is_one() {
                        return;
                    }
                    continue;
                }
            }
            i += 1;
        }
        self.push_factor(g, 1);
    }

    /// Sum.
    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Pull out the common part C, leaving polynomial cofactors.
        let cmono: Exps = self
            .mono
            .iter()
            .zip(&other.mono)
            .map(|(a, b)| *a.min(b))
            .collect();
        let mut common: Vec<(LaurentPoly, i32)> = Vec::new();
        let mut xs: Vec<(&LaurentPoly, i32)> = Vec::new();
        let mut ys: Vec<(&LaurentPoly, i32)> = Vec::new();
        for (f, kx) in &self.factors {
            let ky = other
                .factors
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            let c = (*kx).min(ky);
            if c != 0 {
                common.push((f.clone(), c));
            }
            if kx - c > 0 {
                xs.push((f, kx - c));
            }
            if ky - c > 0 {
                ys.push((f, ky - c));
            }
        }
        for (g, ky) in &other.factors {
            if self.factors.iter().any(|(f, _)| f == g) {
                continue;
            }
            let c = (*ky).min(0);
            if c != 0 {
                common.push((g.clone(), c));
                xs.push((g, -c));
            }
            if ky - c > 0 {
                ys.push((g, ky - c));
            }
        }
        let expand = |coef: &CycRat, mono: &Exps, fs: &[(&LaurentPoly, i32)]| -> LaurentPoly {
            let e: Exps = mono.iter().zip(&cmono).map(|(a, b)| a - b).collect();
            let mut p = LaurentPoly::monomial(coef.clone(), e);
            for (f, k) in fs {
                p = p.mul(&f.pow(*k as u32));
            }
            p
        };
        let px = expand(&self.coef, &self.mono, &xs);
        let py = expand(&other.coef, &other.mono, &ys);
        let s = px.add(&py);
        if s.is_zero() {
            return Self::zero(&self.field, self.nvars());
        }
        let mut r = RatFunc {
            field: self.field.clone(),
            coef: CycRat::one(&self.field),
            mono: cmono,
            factors: common,
        };
        r.absorb_poly(&s);
        r
    }

    /// Negation.
    pub fn neg(&self) -> RatFunc {
        let mut r = self.clone();
        r.coef = r.coef.neg();
        r
    }

    /// Difference.
    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    /// Product.
    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field, self.nvars());
        }
        let mut r = self.clone();
        r.coef = r.coef.mul(&other.coef);
        for (a, b) in r.mono.iter_mut().zip(&other.mono) {
            *a += b;
        }
        for (g, k) in &other.factors {
            r.push_factor(g.clone(), *k);
        }
        r.cancel_cross();
        r
    }

    /// Cancel negative-multiplicity factors that divide a positive one.
    fn cancel_cross(&mut self) {
        loop {
            let mut changed = false;
            'outer: for i in 0..self.factors.len() {
                if self.factors[i].1 <= 0 || self.factors[i].0.len() <= 2 {
                    continue;
                }
                for j in 0..self.factors.len() {
                    if self.factors[j].1 >= 0 || self.factors[j].0.len() >= self.factors[i].0.len() {
                        continue;
                    }
                    if let Some(quot) = self.factors[i].0.exact_div(&self.factors[j].0) {
                        self.factors[i].1 -= 1;
                        self.factors[j].1 += 1;
                        self.push_factor(quot, 1);
                        self.factors.retain(|(_, k)| *k != 0);
                        changed = true;
                        break 'outer;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(RatFunc {
            field: self.field.clone(),
            coef: self.coef.inv()?,
            mono: self.mono.iter().map(|k| -k).collect(),
            factors: self.factors.iter().map(|(f, k)| (f.clone(), -k)).collect(),
        })
    }

    /// Quotient.
    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power.
    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e == 0 {
            return Ok(Self::constant(CycRat::one(&self.field), self.nvars()));
        }
        if self.is_zero() {
            return if e > 0 { Ok(self.clone()) } else { Err(Error::ZeroDivisor) };
        }
        let e32 = i32::try_from(e).map_err(|_| Error::Invalid(alloc::format!("exponent {} too large", e)))?;
        Ok(RatFunc {
            field: self.field.clone(),
            coef: self.coef.pow(e)?,
            mono: self.mono.iter().map(|k| k * e32).collect(),
            factors: self.factors.iter().map(|(f, k)| (f.clone(), k * e32)).collect(),
        })
    }

    /// Multiply by a rational constant.
    pub fn scale(&self, r: &BigRational) -> RatFunc {
        let mut out = self.clone();
        out.coef = out.coef.scale(r);
        if out.coef.is_zero() {
            return Self::zero(&self.field, self.nvars());
        }
        out
    }

    /// If the function is a constant, return it.
    pub fn as_constant(&self) -> Option<CycRat> {
        if self.is_zero() {
            return Some(self.coef.clone());
        }
        if self.mono.iter().all(|&k| k == 0) && self.factors.is_empty() {
            Some(self.coef.clone())
        } else {
            // The factored form need not be fully reduced; fall back to an
            // exact comparison against the candidate constant.
            let n = self.num();
            let d = self.den();
            let (_, dc) = d.leading()?;
            let (ne, nc) = n.leading()?;
            let (de, _) = d.leading()?;
            if ne != de {
                return None;
            }
            let c = nc.div(dc).ok()?;
            if n == d.mul_term(&vec![0; self.nvars()], &c) {
                Some(c)
            } else {
                None
            }
        }
    }

    /// Evaluate with a caller-supplied evaluator for polynomials.  A
    /// vanishing denominator factor yields a specialization-pole error.
    pub fn eval_with<E>(&self, mut eval_poly: E, target: &Arc<CycField>) -> Result<CycRat>
    where
        E: FnMut(&LaurentPoly) -> Result<CycRat>,
    {
        if self.is_zero() {
            return Ok(CycRat::zero(target));
        }
        let mono_poly = LaurentPoly::monomial(self.coef.clone(), self.mono.clone());
        let mut acc = eval_poly(&mono_poly)?;
        let mut num_zero = false;
        for (f, k) in &self.factors {
            let v = eval_poly(f)?;
            if v.is_zero() {
                if *k < 0 {
                    return Err(Error::SpecializationPole(alloc::format!(
                        "denominator factor {} vanishes",
                        f
                    )));
                }
                num_zero = true;
                continue;
            }
            acc = acc.mul(&v.pow(*k as i64)?);
        }
        if num_zero {
            return Ok(CycRat::zero(target));
        }
        Ok(acc)
    }

    /// The constant one of the same field and arity.
    pub fn one_like(&self) -> RatFunc {
        Self::constant(CycRat::one(&self.field), self.nvars())
    }

    /// Access to a unit polynomial, used when constructing factors.
    pub fn unit_poly(&self) -> LaurentPoly {
        self.one_poly()
    }
}
