//! Exact arithmetic in cyclotomic fields `Q(ζ_n) = Q[x]/Φ_n(x)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut res = n;
    let mut f = 2;
    while f * f <= m {
        if m % f == 0 {
            while m % f == 0 {
                m /= f;
            }
            res -= res / f;
        }
        f += 1;
    }
    if m > 1 {
        res -= res / m;
    }
    res
}

/// Integer coefficients (constant term first) of the `n`-th cyclotomic
/// polynomial, computed from `x^n - 1 = Π_{d | n} Φ_d(x)`.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // numerator x^n - 1
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = div_monic(&num, &phi_d);
        }
    }
    num
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() <= db {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].clone();
        if c.is_zero() {
            continue;
        }
        q[i - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero), "non-exact cyclotomic division");
    q
}

/// A cyclotomic field `Q(ζ_n)` together with its defining polynomial and
/// the reduced residues of all powers of `ζ_n`.
#[derive(Debug)]
pub struct CycField {
    n: u64,
    modulus: Vec<BigRational>,
    powers: Vec<Vec<BigRational>>,
}

impl CycField {
    /// Construct `Q(ζ_n)`; `n = 1` gives `Q` itself.
    pub fn new(n: u64) -> Result<Arc<CycField>> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let modulus: Vec<BigRational> = cyclotomic_poly(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let phi = modulus.len() - 1;
        let mut field = CycField {
            n,
            modulus,
            powers: Vec::new(),
        };
        let mut powers = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            let mut v = vec![BigRational::zero(); k + 1];
            v[k] = BigRational::one();
            field.reduce(&mut v);
            v.resize(phi, BigRational::zero());
            powers.push(v);
        }
        field.powers = powers;
        Ok(Arc::new(field))
    }

    /// Conductor `n` of the field.
    pub fn order(&self) -> u64 {
        self.n
    }

    /// Degree `φ(n)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduce a coefficient vector modulo `Φ_n` in place (result has length
    /// at most `φ(n)`).
    fn reduce(&self, v: &mut Vec<BigRational>) {
        let phi = self.degree();
        while v.len() > phi {
            let c = v.pop().expect("non-empty");
            if c.is_zero() {
                continue;
            }
            let top = v.len();
            for j in 0..phi {
                let idx = top - phi + j;
                let t = &c * &self.modulus[j];
                v[idx] -= t;
            }
        }
    }
}

/// An element of `Q(ζ_n)` stored as its unique residue of degree `< φ(n)`.
#[derive(Clone)]
pub struct CycRat {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycRat {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycRat {}

impl PartialOrd for CycRat {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycRat {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.field
            .n
            .cmp(&other.field.n)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*z{}", c, self.field.n)?,
                _ => write!(f, "({})*z{}^{}", c, self.field.n, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycRat {
    /// Build from an arbitrary polynomial in `ζ_n` (constant term first).
    pub fn from_poly(field: &Arc<CycField>, mut coeffs: Vec<BigRational>) -> CycRat {
        field.reduce(&mut coeffs);
        coeffs.resize(field.degree(), BigRational::zero());
        CycRat {
            field: field.clone(),
            coeffs,
        }
    }

    /// The rational number `r` viewed in `Q(ζ_n)`.
    pub fn from_rational(field: &Arc<CycField>, r: BigRational) -> CycRat {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = r;
        CycRat {
            field: field.clone(),
            coeffs,
        }
    }

    /// The integer `i` viewed in `Q(ζ_n)`.
    pub fn from_int(field: &Arc<CycField>, i: i64) -> CycRat {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(i)))
    }

    /// Zero of the field.
    pub fn zero(field: &Arc<CycField>) -> CycRat {
        CycRat {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    /// One of the field.
    pub fn one(field: &Arc<CycField>) -> CycRat {
        Self::from_int(field, 1)
    }

    /// `ζ_n^k` for any signed `k`.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> CycRat {
        let n = field.n as i64;
        let e = k.rem_euclid(n) as usize;
        CycRat {
            field: field.clone(),
            coeffs: field.powers[e].clone(),
        }
    }

    /// The ambient field.
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Residue coefficients (constant term first, length `φ(n)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True if the element is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True if the element is one.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycRat) {
        assert_eq!(
            self.field.n, other.field.n,
            "mixing elements of different cyclotomic fields"
        );
    }

    /// Sum.
    pub fn add(&self, other: &CycRat) -> CycRat {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycRat {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Difference.
    pub fn sub(&self, other: &CycRat) -> CycRat {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycRat {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Negation.
    pub fn neg(&self) -> CycRat {
        CycRat {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &CycRat) -> CycRat {
        self.check_same(other);
        let phi = self.field.degree();
        if phi == 1 {
            return CycRat {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Self::from_poly(&self.field, prod)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> CycRat {
        CycRat {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CycRat> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let phi = self.field.degree();
        if phi == 1 {
            return Ok(CycRat {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Solve (multiplication-by-self matrix) · x = e_0.
        // Column j holds the residue of self · ζ^j.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let zj = Self::zeta_pow(&self.field, j as i64);
            cols.push(self.mul(&zj).coeffs);
        }
        let mut a: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for c in 0..phi {
            let piv = (c..phi)
                .find(|&r| !a[r][c].is_zero())
                .ok_or_else(|| Error::Internal(String::from("singular multiplication matrix")))?;
            a.swap(c, piv);
            let inv = a[c][c].recip();
            for v in a[c].iter_mut() {
                *v *= &inv;
            }
            for r in 0..phi {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for k in c..=phi {
                        let t = &f * &a[c][k];
                        a[r][k] -= t;
                    }
                }
            }
        }
        Ok(CycRat {
            field: self.field.clone(),
            coeffs: a.into_iter().map(|row| row[phi].clone()).collect(),
        })
    }

    /// Quotient.
    pub fn div(&self, other: &CycRat) -> Result<CycRat> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i64) -> Result<CycRat> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycRat::one(&self.field);
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Embed into `Q(ζ_m)` for a multiple `m` of this field's order, sending
    /// `ζ_n ↦ ζ_m^{m/n}`.
    pub fn embed(&self, target: &Arc<CycField>) -> Result<CycRat> {
        let n = self.field.n;
        let m = target.n;
        if m % n != 0 {
            return Err(Error::Invalid(alloc::format!(
                "cannot embed Q(z{}) into Q(z{})",
                n, m
            )));
        }
        if n == m {
            return Ok(CycRat {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            });
        }
        let step = (m / n) as i64;
        let mut acc = CycRat::zero(target);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&CycRat::zeta_pow(target, step * i as i64).scale(c));
        }
        Ok(acc)
    }

    /// If the element equals `c · ζ_n^k` with `c` rational, return `(c, k)`
    /// with `0 ≤ k < n` minimal.
    pub fn as_rational_times_root(&self) -> Option<(BigRational, u64)> {
        let n = self.field.n;
        for k in 0..n {
            let y = self.mul(&Self::zeta_pow(&self.field, -(k as i64)));
            if let Some(c) = y.to_rational() {
                return Some((c, k));
            }
        }
        None
    }

    /// True if the element is a root of unity, i.e. `±ζ_n^k`.
    pub fn is_root_of_unity(&self) -> bool {
        match self.as_rational_times_root() {
            Some((c, _)) => c.abs().is_one(),
            None => false,
        }
    }
}

/// `ε^k` where `ε = ζ_p` is a primitive `p`-th root of unity.
pub fn eps_pow(p: i64, k: i64) -> Result<CycRat> {
    if p < 2 {
        return Err(Error::InvalidOrder(p));
    }
    let field = CycField::new(p as u64)?;
    Ok(CycRat::zeta_pow(&field, k))
}

/// Convert a small rational pair into a `BigRational`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Greatest common divisor of two machine integers (nonnegative result).
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Integer value of a rational that is known to be integral.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
