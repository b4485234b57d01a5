//! Field handles: the generic parameter field and exact specialization
//! points, together with the common scalar interface used by every
//! algebraic layer above.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cyclo::{CycField, CycRat};
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Exact field element interface shared by [`CycRat`] and [`RatFunc`].
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Zero of the same field.
    fn zero_like(&self) -> Self;
    /// One of the same field.
    fn one_like(&self) -> Self;
    /// Zero test.
    fn is_zero(&self) -> bool;
    /// Sum.
    fn add(&self, o: &Self) -> Self;
    /// Difference.
    fn sub(&self, o: &Self) -> Self;
    /// Product.
    fn mul(&self, o: &Self) -> Self;
    /// Negation.
    fn neg(&self) -> Self;
    /// Inverse; fails on zero.
    fn inv(&self) -> Result<Self>;
    /// Quotient; fails on a zero divisor.
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
    /// One-test.
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
    /// Integer power.
    fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl Scalar for CycRat {
    fn zero_like(&self) -> Self {
        CycRat::zero(self.field())
    }
    fn one_like(&self) -> Self {
        CycRat::one(self.field())
    }
    fn is_zero(&self) -> bool {
        CycRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        CycRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CycRat::mul(self, o)
    }
    fn neg(&self) -> Self {
        CycRat::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        CycRat::inv(self)
    }
    fn is_one(&self) -> bool {
        CycRat::is_one(self)
    }
    fn pow(&self, e: i64) -> Result<Self> {
        CycRat::pow(self, e)
    }
}

impl Scalar for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.field(), self.nvars())
    }
    fn one_like(&self) -> Self {
        RatFunc::one_like(self)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn pow(&self, e: i64) -> Result<Self> {
        RatFunc::pow(self, e)
    }
}

/// A signed monomial `c · ε^e · q^a · Q_1^{b_1} ⋯ Q_d^{b_d}` with rational
/// `c`; the basic building block of every closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono {
    /// Rational coefficient.
    pub coef: BigRational,
    /// Exponent of `ε`.
    pub eps: i64,
    /// Exponent of `q`.
    pub q: i64,
    /// Exponents of `Q_1, …, Q_d`.
    pub qs: Vec<i64>,
}

impl Mono {
    /// The monomial `1` with `d` parameters.
    pub fn one(d: usize) -> Mono {
        Mono {
            coef: BigRational::one(),
            eps: 0,
            q: 0,
            qs: vec![0; d],
        }
    }

    /// `ε^e`.
    pub fn eps(d: usize, e: i64) -> Mono {
        Mono {
            eps: e,
            ..Mono::one(d)
        }
    }

    /// `q^a`.
    pub fn q(d: usize, a: i64) -> Mono {
        Mono {
            q: a,
            ..Mono::one(d)
        }
    }

    /// `Q_i` (1-based).
    pub fn big_q(d: usize, i: usize) -> Mono {
        let mut m = Mono::one(d);
        m.qs[i - 1] = 1;
        m
    }

    /// A rational constant.
    pub fn constant(d: usize, c: BigRational) -> Mono {
        Mono { coef: c, ..Mono::one(d) }
    }

    /// Product of monomials.
    pub fn mul(&self, o: &Mono) -> Mono {
        Mono {
            coef: &self.coef * &o.coef,
            eps: self.eps + o.eps,
            q: self.q + o.q,
            qs: self.qs.iter().zip(&o.qs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Inverse monomial (requires a nonzero coefficient).
    pub fn inv(&self) -> Result<Mono> {
        if self.coef.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Mono {
            coef: self.coef.recip(),
            eps: -self.eps,
            q: -self.q,
            qs: self.qs.iter().map(|a| -a).collect(),
        })
    }

    /// Integer power.
    pub fn pow(&self, e: i64) -> Result<Mono> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        let mut coef = BigRational::one();
        for _ in 0..k {
            coef *= &base.coef;
        }
        let k = k as i64;
        Ok(Mono {
            coef,
            eps: base.eps * k,
            q: base.q * k,
            qs: base.qs.iter().map(|a| a * k).collect(),
        })
    }

    /// Multiply the coefficient by `-1`.
    pub fn negate(&self) -> Mono {
        Mono {
            coef: -self.coef.clone(),
            ..self.clone()
        }
    }

    /// Shift the `ε`-exponent by `t`.
    pub fn shift_eps(&self, t: i64) -> Mono {
        Mono {
            eps: self.eps + t,
            ..self.clone()
        }
    }
}

/// A choice of coefficient field for all parametric computations: either
/// the generic function field or an exact specialization point.
pub trait ParamField: Clone + Send + Sync {
    /// Element type of the field.
    type E: Scalar;
    /// Order `p` of `ε`.
    fn p(&self) -> usize;
    /// Number `d` of independent parameters `Q_i`.
    fn d(&self) -> usize;
    /// Zero.
    fn zero(&self) -> Self::E;
    /// One.
    fn one(&self) -> Self::E;
    /// A rational constant.
    fn from_rat(&self, r: &BigRational) -> Self::E;
    /// An integer constant.
    fn from_int(&self, i: i64) -> Self::E {
        self.from_rat(&BigRational::from_integer(BigInt::from(i)))
    }
    /// Value of a monomial.
    fn monomial(&self, m: &Mono) -> Self::E;
    /// `ε^k`.
    fn eps(&self, k: i64) -> Self::E {
        self.monomial(&Mono::eps(self.d(), k))
    }
    /// `q`.
    fn q(&self) -> Self::E {
        self.monomial(&Mono::q(self.d(), 1))
    }
    /// Short description for reports.
    fn describe(&self) -> alloc::string::String;
}

/// The generic function field `F = Q(ε)(q, Q_1, …, Q_d)`.
#[derive(Clone, Debug)]
pub struct GenericField {
    p: usize,
    d: usize,
    field: Arc<CycField>,
}

impl GenericField {
    /// Construct the handle; `p ≥ 2` and `d ≥ 1` are required.
    pub fn new(p: usize, d: usize) -> Result<GenericField> {
        if p < 2 {
            return Err(Error::InvalidOrder(p as i64));
        }
        if d < 1 {
            return Err(Error::Invalid("the number of parameters d must be at least 1".to_string()));
        }
        Ok(GenericField {
            p,
            d,
            field: CycField::new(p as u64)?,
        })
    }

    /// Coefficient field `Q(ε)`.
    pub fn coeff_field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Number of variables (`q` and `Q_1..Q_d`).
    pub fn nvars(&self) -> usize {
        self.d + 1
    }

    /// Wrap a polynomial given by its terms.
    pub fn poly(&self, terms: Vec<(Vec<i32>, CycRat)>) -> Result<RatFunc> {
        let p = LaurentPoly::from_terms(&self.field, self.nvars(), terms)?;
        Ok(RatFunc::from_poly(&p, &self.field))
    }

    /// Specialize a rational function at a point.
    pub fn specialize(&self, f: &RatFunc, pt: &SpecPoint) -> Result<CycRat> {
        specialize(f, pt)
    }
}

/// Exact value at `pt` of the generic function `f`.
pub fn specialize(f: &RatFunc, pt: &SpecPoint) -> Result<CycRat> {
    if f.nvars() != pt.d() + 1 {
        return Err(Error::ShapeMismatch(alloc::format!(
            "function in {} variables evaluated at a point with d = {}",
            f.nvars(),
            pt.d()
        )));
    }
    if f.field().order() as usize != pt.p() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "function over Q(e{}) evaluated at a point with p = {}",
            f.field().order(),
            pt.p()
        )));
    }
    let target = pt.field.clone();
    let eval = |poly: &LaurentPoly| -> Result<CycRat> {
        poly.eval_with(
            &target,
            |c| pt.embed_eps_coeff(c),
            |v, k| pt.var_pow(v, k as i64),
        )
    };
    f.eval_with(eval, &target)
}

impl ParamField for GenericField {
    type E = RatFunc;
    fn p(&self) -> usize {
        self.p
    }
    fn d(&self) -> usize {
        self.d
    }
    fn zero(&self) -> RatFunc {
        RatFunc::zero(&self.field, self.nvars())
    }
    fn one(&self) -> RatFunc {
        RatFunc::constant(CycRat::one(&self.field), self.nvars())
    }
    fn from_rat(&self, r: &BigRational) -> RatFunc {
        RatFunc::constant(CycRat::from_rational(&self.field, r.clone()), self.nvars())
    }
    fn monomial(&self, m: &Mono) -> RatFunc {
        let c = CycRat::zeta_pow(&self.field, m.eps).scale(&m.coef);
        let mut e = Vec::with_capacity(self.nvars());
        e.push(m.q as i32);
        e.extend(m.qs.iter().map(|&k| k as i32));
        RatFunc::monomial(c, e)
    }
    fn describe(&self) -> alloc::string::String {
        alloc::format!("generic(p={}, d={})", self.p, self.d)
    }
}

/// An exact specialization point: values of `q, Q_1, …, Q_d` in
/// `Q(ζ_N)` with `p | N`, and `ε = ζ_N^{N/p}`.
#[derive(Clone, Debug)]
pub struct SpecPoint {
    p: usize,
    field: Arc<CycField>,
    q: CycRat,
    q_inv: CycRat,
    qs: Vec<CycRat>,
    qs_inv: Vec<CycRat>,
}

impl SpecPoint {
    /// Build a point; every coordinate must be nonzero.
    pub fn new(p: usize, field: Arc<CycField>, q: CycRat, qs: Vec<CycRat>) -> Result<SpecPoint> {
        if p < 2 {
            return Err(Error::InvalidOrder(p as i64));
        }
        let n = field.order() as usize;
        if n % p != 0 {
            return Err(Error::Invalid(alloc::format!("p = {} does not divide N = {}", p, n)));
        }
        if qs.is_empty() {
            return Err(Error::Invalid("a point needs at least one Q value".to_string()));
        }
        for v in core::iter::once(&q).chain(qs.iter()) {
            if v.field().order() != field.order() {
                return Err(Error::ShapeMismatch("coordinate in the wrong cyclotomic field".to_string()));
            }
        }
        let q_inv = q
            .inv()
            .map_err(|_| Error::Invalid("q must be nonzero".to_string()))?;
        let qs_inv = qs
            .iter()
            .map(|v| v.inv().map_err(|_| Error::Invalid("every Q_i must be nonzero".to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpecPoint {
            p,
            field,
            q,
            q_inv,
            qs,
            qs_inv,
        })
    }

    /// Point with rational coordinates in `Q(ζ_p)`.
    pub fn rational(p: usize, q: BigRational, qs: Vec<BigRational>) -> Result<SpecPoint> {
        if p < 2 {
            return Err(Error::InvalidOrder(p as i64));
        }
        let field = CycField::new(p as u64)?;
        let qv = CycRat::from_rational(&field, q);
        let qsv = qs.into_iter().map(|x| CycRat::from_rational(&field, x)).collect();
        Self::new(p, field, qv, qsv)
    }

    /// Point with integer coordinates in `Q(ζ_p)`.
    pub fn integers(p: usize, q: i64, qs: &[i64]) -> Result<SpecPoint> {
        Self::rational(
            p,
            BigRational::from_integer(BigInt::from(q)),
            qs.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect(),
        )
    }

    /// Order of `ε`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of `Q` parameters.
    pub fn d(&self) -> usize {
        self.qs.len()
    }

    /// Conductor `N`.
    pub fn conductor(&self) -> u64 {
        self.field.order()
    }

    /// Ambient field `Q(ζ_N)`.
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Value of `q`.
    pub fn q_val(&self) -> &CycRat {
        &self.q
    }

    /// Values of `Q_1..Q_d`.
    pub fn qs_vals(&self) -> &[CycRat] {
        &self.qs
    }

    /// Embed an element of `Q(ε)` (order `p`) into `Q(ζ_N)`.
    pub fn embed_eps_coeff(&self, c: &CycRat) -> Result<CycRat> {
        c.embed(&self.field)
    }

    /// Value of variable `v` (0 = `q`, `i` = `Q_i`) to a signed power.
    pub fn var_pow(&self, v: usize, k: i64) -> Result<CycRat> {
        let (x, xi) = if v == 0 {
            (&self.q, &self.q_inv)
        } else {
            let i = v - 1;
            if i >= self.qs.len() {
                return Err(Error::IndexOutOfRange(alloc::format!("variable {}", v)));
            }
            (&self.qs[i], &self.qs_inv[i])
        };
        if k >= 0 {
            x.pow(k)
        } else {
            xi.pow(-k)
        }
    }

    /// The element `ε^k`.
    pub fn eps_val(&self, k: i64) -> CycRat {
        let step = (self.field.order() as usize / self.p) as i64;
        CycRat::zeta_pow(&self.field, step * k)
    }

    /// Separation test: `Π_{i,j ≤ d} Π_{|k|<n} Π_{1≤t<p} (Q_i − ε^t q^k Q_j) ≠ 0`.
    pub fn is_separated(&self, n: usize) -> bool {
        let n = n as i64;
        for qi in &self.qs {
            for qj in &self.qs {
                for k in (1 - n)..n {
                    let qk = match self.var_pow(0, k) {
                        Ok(v) => v,
                        Err(_) => return false,
                    };
                    for t in 1..self.p as i64 {
                        let rhs = self.eps_val(t).mul(&qk).mul(qj);
                        if qi.sub(&rhs).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Stronger genericity used by the sampler: `q` is not a root of unity
    /// of small order and `Q_i ≠ ε^t q^k Q_j` for all `|k| ≤ n` and all `t`,
    /// apart from the trivial coincidence `i = j, t = 0, k = 0`.  This keeps
    /// every content of every standard tableau distinct.
    pub fn is_generic(&self, n: usize) -> bool {
        let n = n as i64;
        let one = CycRat::one(&self.field);
        let mut qk = one.clone();
        for _ in 1..=(2 * n + 2) {
            qk = qk.mul(&self.q);
            if qk == one {
                return false;
            }
        }
        for (i, qi) in self.qs.iter().enumerate() {
            for (j, qj) in self.qs.iter().enumerate() {
                for k in -n..=n {
                    let Ok(qk) = self.var_pow(0, k) else {
                        return false;
                    };
                    for t in 0..self.p as i64 {
                        if i == j && t == 0 && k == 0 {
                            continue;
                        }
                        let rhs = self.eps_val(t).mul(&qk).mul(qj);
                        if qi.sub(&rhs).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Draw a deterministic pseudo-random separated point for algebras with
    /// `n` strands: integer coordinates in `[2, 10^6]`, rejected until
    /// [`SpecPoint::is_separated`] and [`SpecPoint::is_generic`] hold.
    pub fn sample(p: usize, d: usize, n: usize, seed: u64) -> Result<SpecPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let q: i64 = rng.gen_range(2..=1_000_000);
            let qs: Vec<i64> = (0..d).map(|_| rng.gen_range(2..=1_000_000)).collect();
            let pt = Self::integers(p, q, &qs)?;
            if pt.is_separated(n) && pt.is_generic(n) {
                return Ok(pt);
            }
        }
    }

    /// `k` independent sampled points derived from one seed.
    pub fn sample_many(p: usize, d: usize, n: usize, seed: u64, k: usize) -> Result<Vec<SpecPoint>> {
        (0..k)
            .map(|i| Self::sample(p, d, n, seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)))
            .collect()
    }
}

impl ParamField for SpecPoint {
    type E = CycRat;
    fn p(&self) -> usize {
        self.p
    }
    fn d(&self) -> usize {
        self.qs.len()
    }
    fn zero(&self) -> CycRat {
        CycRat::zero(&self.field)
    }
    fn one(&self) -> CycRat {
        CycRat::one(&self.field)
    }
    fn from_rat(&self, r: &BigRational) -> CycRat {
        CycRat::from_rational(&self.field, r.clone())
    }
    fn monomial(&self, m: &Mono) -> CycRat {
        let mut v = self.eps_val(m.eps).scale(&m.coef);
        if m.q != 0 {
            v = v.mul(&self.var_pow(0, m.q).expect("q is invertible"));
        }
        for (i, &k) in m.qs.iter().enumerate() {
            if k != 0 {
                v = v.mul(&self.var_pow(i + 1, k).expect("Q_i is invertible"));
            }
        }
        v
    }
    fn describe(&self) -> alloc::string::String {
        alloc::format!("point(p={}, N={}, q={}, Q={:?})", self.p, self.conductor(), self.q, self.qs)
    }
}

/// The product `A(ε, q, Q) = Π_{i,j ≤ d} Π_{|k|<n} Π_{1≤t<p} (Q_i − ε^t q^k Q_j)`
/// as an element of the given field.
pub fn separation_product<F: ParamField>(f: &F, n: usize) -> F::E {
    let d = f.d();
    let n = n as i64;
    let mut acc = f.one();
    for i in 1..=d {
        for j in 1..=d {
            for k in (1 - n)..n {
                for t in 1..f.p() as i64 {
                    let qi = f.monomial(&Mono::big_q(d, i));
                    let mut m = Mono::big_q(d, j);
                    m.eps = t;
                    m.q = k;
                    let rhs = f.monomial(&m);
                    acc = acc.mul(&qi.sub(&rhs));
                }
            }
        }
    }
    acc
}

/// Handle selecting symbolic computation in `Q(ε_p)(q, Q_1, …, Q_d)`.
pub fn generic_field(p: usize, d: usize) -> Result<GenericField> {
    GenericField::new(p, d)
}

/// Helper: the zero element is never a valid divisor.
pub fn nonzero<E: Scalar>(x: E) -> Result<E> {
    if x.is_zero() {
        Err(Error::ZeroDivisor)
    } else {
        Ok(x)
    }
}
