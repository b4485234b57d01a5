//! Multivariate Laurent polynomials with cyclotomic coefficients.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::cyclo::{CycField, CycRat};
use crate::error::{Error, Result};

/// Exponent vector of a monomial (one signed entry per variable).
pub type Exps = Vec<i32>;

/// A Laurent polynomial in `nvars` variables over `Q(ζ_n)`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vectors, so the term
/// order is lexicographic and the leading term is the last entry.  No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    field_order: u64,
    terms: BTreeMap<Exps, CycRat>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (v, &k) in e.iter().enumerate() {
                if k != 0 {
                    write!(f, "*x{}^{}", v, k)?;
                }
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(field: &Arc<CycField>, nvars: usize) -> LaurentPoly {
        LaurentPoly {
            nvars,
            field_order: field.order(),
            terms: BTreeMap::new(),
        }
    }

    /// A single term `c · x^e`.
    pub fn monomial(c: CycRat, e: Exps) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        let nvars = e.len();
        let field_order = c.field().order();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly {
            nvars,
            field_order,
            terms,
        }
    }

    /// The constant `c`.
    pub fn constant(c: CycRat, nvars: usize) -> LaurentPoly {
        Self::monomial(c, vec![0; nvars])
    }

    /// Build from a list of terms; repeated exponents are summed.
    pub fn from_terms(
        field: &Arc<CycField>,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exps, CycRat)>,
    ) -> Result<LaurentPoly> {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ShapeMismatch(alloc::format!(
                    "exponent vector of length {} in a polynomial with {} variables",
                    e.len(),
                    nvars
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &CycRat)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lexicographically leading term.
    pub fn leading(&self) -> Option<(&Exps, &CycRat)> {
        self.terms.iter().next_back()
    }

    /// If the polynomial is a single term, return it.
    pub fn as_monomial(&self) -> Option<(&Exps, &CycRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Exps, c: CycRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn sub_term(&mut self, e: &Exps, c: &CycRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(e) {
            Some(old) => {
                let s = old.sub(c);
                if s.is_zero() {
                    self.terms.remove(e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e.clone(), c.neg());
            }
        }
    }

    /// Sum.
    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut r = big.clone();
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    /// Difference.
    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.sub_term(e, c);
        }
        r
    }

    /// Negation.
    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            field_order: self.field_order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly {
            nvars: self.nvars,
            field_order: self.field_order,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2));
            }
        }
        r
    }

    /// Multiply by the single term `c · x^e`.
    pub fn mul_term(&self, e: &[i32], c: &CycRat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly {
                nvars: self.nvars,
                field_order: self.field_order,
                terms: BTreeMap::new(),
            };
        }
        LaurentPoly {
            nvars: self.nvars,
            field_order: self.field_order,
            terms: self
                .terms
                .iter()
                .map(|(e1, c1)| {
                    (
                        e1.iter().zip(e).map(|(a, b)| a + b).collect(),
                        c1.mul(c),
                    )
                })
                .collect(),
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        let field = self.terms.values().next().map(|c| c.field().clone());
        let mut acc = match field {
            Some(f) => Self::constant(CycRat::one(&f), self.nvars),
            None => return self.clone(),
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Per-variable minimum exponents (`None` for the zero polynomial).
    pub fn min_exps(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                if *b < *a {
                    *a = *b;
                }
            }
        }
        Some(m)
    }

    /// Per-variable maximum exponents (`None` for the zero polynomial).
    pub fn max_exps(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                if *b > *a {
                    *a = *b;
                }
            }
        }
        Some(m)
    }

    /// Exact quotient `self / divisor` in the Laurent polynomial ring, or
    /// `None` if the division is not exact.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (db_e, db_c) = divisor.leading()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        // Exponent bounds of a quotient follow from the Newton polytope.
        let amin = self.min_exps()?;
        let amax = self.max_exps()?;
        let bmin = divisor.min_exps()?;
        let bmax = divisor.max_exps()?;
        let lo: Exps = amin.iter().zip(&bmin).map(|(a, b)| a - b).collect();
        let hi: Exps = amax.iter().zip(&bmax).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let db_inv = db_c.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly {
            nvars: self.nvars,
            field_order: self.field_order,
            terms: BTreeMap::new(),
        };
        while let Some((re, rc)) = rem.leading() {
            let e: Exps = re.iter().zip(db_e).map(|(a, b)| a - b).collect();
            if e
                .iter()
                .zip(lo.iter().zip(&hi))
                .any(|(x, (l, h))| x < l || x > h)
            {
                return None;
            }
            let c = rc.mul(&db_inv);
            rem = rem.sub(&divisor.mul_term(&e, &c));
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Split off the monomial content and leading coefficient:
    /// returns `(c, e, g)` with `self = c · x^e · g`, `g` having minimum
    /// exponent zero in every variable and leading coefficient one.
    pub fn normalize(&self) -> Option<(CycRat, Exps, LaurentPoly)> {
        let (_, lc) = self.leading()?;
        let lc = lc.clone();
        let inv = lc.inv().ok()?;
        let m = self.min_exps()?;
        let g = LaurentPoly {
            nvars: self.nvars,
            field_order: self.field_order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(&m).map(|(a, b)| a - b).collect(), c.mul(&inv)))
                .collect(),
        };
        Some((lc, m, g))
    }

    /// True if this is the constant polynomial one.
    pub fn is_one(&self) -> bool {
        match self.as_monomial() {
            Some((e, c)) => e.iter().all(|&x| x == 0) && c.is_one(),
            None => false,
        }
    }

    /// Evaluate at a point.  `coeff_map` embeds coefficients into the target
    /// field; `powers[v]` returns the value of variable `v` raised to a
    /// signed exponent.
    pub fn eval_with<F, P>(&self, target: &Arc<CycField>, coeff_map: F, mut powers: P) -> Result<CycRat>
    where
        F: Fn(&CycRat) -> Result<CycRat>,
        P: FnMut(usize, i32) -> Result<CycRat>,
    {
        let mut acc = CycRat::zero(target);
        for (e, c) in &self.terms {
            let mut t = coeff_map(c)?;
            for (v, &k) in e.iter().enumerate() {
                if k != 0 {
                    t = t.mul(&powers(v, k)?);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }
}
