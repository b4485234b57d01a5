//! Seminormal representations of the Ariki–Koike algebra on Specht modules,
//! words in the generators, and exact evaluation of words as matrices.
//!
//! Matrices act on row vectors: the basis vector `v_s` is row `s`, and a
//! word `w_1 w_2` is represented by the product `M(w_1) · M(w_2)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combin::Multipartition;
use crate::exactnum::{GenericField, Mat, Mono, ParamField, Scalar, SpecPoint};
use crate::error::{Error, Result};
use crate::tableau::{beta_from_contents, content_vector, enumerate_std, StandardTableau};

/// One token of a word in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    /// `T_i` (`T_0 = L_1`).
    T(usize),
    /// `T_i^{-1}`.
    Tinv(usize),
    /// Jucys–Murphy element `L_k`.
    L(usize),
    /// A scalar monomial.
    Scal(Mono),
    /// A formal sum of words.
    Sum(Vec<Word>),
}

/// A product of tokens, read from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Token>);

impl Word {
    /// The empty word (the identity).
    pub fn one() -> Word {
        Word(Vec::new())
    }

    /// A single token.
    pub fn token(t: Token) -> Word {
        Word(vec![t])
    }

    /// `T_{i_1} ⋯ T_{i_k}`.
    pub fn t_word(indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| Token::T(i)).collect())
    }

    /// A scalar.
    pub fn scalar(m: Mono) -> Word {
        Word(vec![Token::Scal(m)])
    }

    /// Concatenation `self · other`.
    pub fn then(mut self, other: &Word) -> Word {
        self.0.extend(other.0.iter().cloned());
        self
    }

    /// Product of a sequence of words.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut w = Word::one();
        for x in words {
            w.0.extend(x.0.iter().cloned());
        }
        w
    }

    /// A formal sum.
    pub fn sum(terms: Vec<Word>) -> Word {
        Word(vec![Token::Sum(terms)])
    }

    /// Number of top-level tokens.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Substitute `Q_i ↦ ε^t Q_i` in every scalar.
    pub fn shift_params(&self, t: i64) -> Word {
        Word(
            self.0
                .iter()
                .map(|tok| match tok {
                    Token::Scal(m) => {
                        let deg: i64 = m.qs.iter().sum();
                        Token::Scal(m.shift_eps(t * deg))
                    }
                    Token::Sum(ws) => Token::Sum(ws.iter().map(|w| w.shift_params(t)).collect()),
                    other => other.clone(),
                })
                .collect(),
        )
    }

    /// Shift every generator index by `k` (`T_i ↦ T_{i+k}`, `L_j ↦ L_{j+k}`);
    /// `T_0` is only allowed when `k = 0`.
    pub fn shift_indices(&self, k: usize) -> Result<Word> {
        let toks = self
            .0
            .iter()
            .map(|tok| {
                Ok(match tok {
                    Token::T(0) | Token::Tinv(0) if k > 0 => {
                        return Err(Error::Invalid("cannot shift T_0".into()));
                    }
                    Token::T(i) => Token::T(i + k),
                    Token::Tinv(i) => Token::Tinv(i + k),
                    Token::L(j) => Token::L(j + k),
                    Token::Scal(m) => Token::Scal(m.clone()),
                    Token::Sum(ws) => Token::Sum(ws.iter().map(|w| w.shift_indices(k)).collect::<Result<_>>()?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(toks))
    }

    fn validate(&self, n: usize) -> Result<()> {
        for tok in &self.0 {
            match tok {
                Token::T(i) | Token::Tinv(i) if *i >= n.max(1) => {
                    return Err(Error::IndexOutOfRange(format!("T_{} with n = {}", i, n)));
                }
                Token::L(k) if *k == 0 || *k > n => {
                    return Err(Error::IndexOutOfRange(format!("L_{} with n = {}", k, n)));
                }
                Token::Sum(ws) => {
                    for w in ws {
                        w.validate(n)?;
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct GenRow<E> {
    diag: E,
    off: Option<(usize, E)>,
}

/// The seminormal representation of `H_{r,n}` on `S(λ)`.
#[derive(Clone, Debug)]
pub struct SeminormalRep<F: ParamField> {
    shape: Multipartition,
    basis: Vec<StandardTableau>,
    field: F,
    n: usize,
    /// `contents[k-1][b] = cont_b(k)`.
    contents: Vec<Vec<F::E>>,
    /// Diagonal of `T_0`.
    t0: Vec<F::E>,
    /// Diagonal of `T_0^{-1}`.
    t0_inv: Vec<F::E>,
    gens: Vec<Vec<GenRow<F::E>>>,
    gens_inv: Vec<Vec<GenRow<F::E>>>,
}

/// Elementary symmetric polynomials `e_0..e_r` of the parameter list
/// `ε^s Q_i` (`1 ≤ s ≤ p`, `1 ≤ i ≤ d`).
fn param_elementary<F: ParamField>(f: &F) -> Vec<F::E> {
    let d = f.d();
    let mut e = vec![f.one()];
    for s in 1..=f.p() as i64 {
        for i in 1..=d {
            let mut m = Mono::big_q(d, i);
            m.eps = s;
            let u = f.monomial(&m);
            let mut next = e.clone();
            next.push(f.zero());
            for k in 1..next.len() {
                next[k] = next[k].add(&e[k - 1].mul(&u));
            }
            e = next;
        }
    }
    e
}

/// `x^{-1}` computed from the relation `Π (x − u) = 0`:
/// `x^{-1} = −(Σ_{k<r} (−1)^k e_k x^{r−1−k}) / ((−1)^r e_r)`.
fn inverse_from_relation<E: Scalar>(x: &E, e: &[E]) -> Result<E> {
    let r = e.len() - 1;
    let mut acc = x.zero_like();
    for (k, ek) in e.iter().enumerate().take(r) {
        let term = ek.mul(&x.pow((r - 1 - k) as i64)?);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    let er = if r % 2 == 0 { e[r].clone() } else { e[r].neg() };
    acc.neg().div(&er)
}

impl<F: ParamField> SeminormalRep<F> {
    /// Build the representation on `S(λ)` over the field `f`.
    pub fn build(lam: &Multipartition, f: &F) -> Result<SeminormalRep<F>> {
        let r = f.p() * f.d();
        if lam.r() != r {
            return Err(Error::ShapeMismatch(format!(
                "{:?} has {} components but r = pd = {}",
                lam,
                lam.r(),
                r
            )));
        }
        let n = lam.size();
        let basis = enumerate_std(lam);
        let d = f.d();
        let dim = basis.len();
        let cvecs: Vec<Vec<Mono>> = basis.iter().map(|s| content_vector(s, d)).collect();
        let contents: Vec<Vec<F::E>> = (0..n)
            .map(|k| (0..dim).map(|b| f.monomial(&cvecs[b][k])).collect())
            .collect();
        // Index tableaux by reading word for the swap lookups.
        let words: Vec<Vec<usize>> = basis.iter().map(StandardTableau::reading_word).collect();
        let find = |t: &StandardTableau| -> Option<usize> {
            let w = t.reading_word();
            words.binary_search(&w).ok()
        };
        let q = f.q();
        let one = f.one();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        let mut gens_inv = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut rows = Vec::with_capacity(dim);
            let mut rows_inv = Vec::with_capacity(dim);
            for (b, s) in basis.iter().enumerate() {
                let beta = beta_from_contents(&contents[i - 1][b], &contents[i][b], f)?;
                let off = s.swap(i).map(|t| {
                    let idx = find(&t).expect("swapped tableau is standard");
                    (idx, one.add(&beta))
                });
                let qinv = q.inv()?;
                let diag_inv = beta.add(&one).sub(&q).mul(&qinv);
                let off_inv = off.as_ref().map(|(idx, v)| (*idx, v.mul(&qinv)));
                rows.push(GenRow { diag: beta, off });
                rows_inv.push(GenRow {
                    diag: diag_inv,
                    off: off_inv,
                });
            }
            gens.push(rows);
            gens_inv.push(rows_inv);
        }
        let e = param_elementary(f);
        let (t0, t0_inv) = if n > 0 {
            let t0 = contents[0].clone();
            let t0_inv = t0
                .iter()
                .map(|x| inverse_from_relation(x, &e))
                .collect::<Result<Vec<_>>>()?;
            (t0, t0_inv)
        } else {
            (Vec::new(), Vec::new())
        };
        let rep = SeminormalRep {
            shape: lam.clone(),
            basis,
            field: f.clone(),
            n,
            contents,
            t0,
            t0_inv,
            gens,
            gens_inv,
        };
        rep.check_jucys_murphy()?;
        Ok(rep)
    }

    /// Cross-check `L_{k+1} = q^{-1} T_k L_k T_k` against the diagonal of
    /// contents, starting from `L_1 = T_0`.
    fn check_jucys_murphy(&self) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        let zero = self.field.zero();
        let qinv = self.field.q().inv()?;
        let mut l = Mat::diagonal(&self.t0, &zero);
        for k in 1..self.n {
            let t = self.gen_dense(k, false);
            l = t.mul(&l).mul(&t).scale(&qinv);
            let expect = Mat::diagonal(&self.contents[k], &zero);
            if l != expect {
                return Err(Error::Internal(format!(
                    "L_{} from the recursion disagrees with the contents on {:?}",
                    k + 1,
                    self.shape
                )));
            }
        }
        for (x, xi) in self.t0.iter().zip(&self.t0_inv) {
            if !x.mul(xi).is_one() {
                return Err(Error::Internal("T_0^{-1} from the cyclotomic relation is wrong".into()));
            }
        }
        Ok(())
    }

    /// Shape `λ`.
    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    /// Ordered basis `Std(λ)`.
    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// Dimension `|Std(λ)|`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of strands.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Field handle.
    pub fn field(&self) -> &F {
        &self.field
    }

    /// Diagonal of `L_k`.
    pub fn l_diag(&self, k: usize) -> &[F::E] {
        &self.contents[k - 1]
    }

    /// A copy with `T_0` replaced by `T_0 + δ·1` (used to exercise the
    /// relation checker on a deliberately broken representation).
    pub fn with_t0_perturbed(&self, delta: &F::E) -> SeminormalRep<F> {
        let mut r = self.clone();
        r.t0 = r.t0.iter().map(|x| x.add(delta)).collect();
        r
    }

    fn gen_dense(&self, i: usize, inverse: bool) -> Mat<F::E> {
        let zero = self.field.zero();
        let dim = self.dim();
        if i == 0 {
            let d = if inverse { &self.t0_inv } else { &self.t0 };
            return Mat::diagonal(d, &zero);
        }
        let rows = if inverse { &self.gens_inv[i - 1] } else { &self.gens[i - 1] };
        let mut m = Mat::zeros(dim, dim, &zero);
        for (b, row) in rows.iter().enumerate() {
            m.set(b, b, row.diag.clone());
            if let Some((t, v)) = &row.off {
                m.set(b, *t, v.clone());
            }
        }
        m
    }

    /// Dense matrix of `T_i` (`i = 0` gives `T_0`).
    pub fn t_matrix(&self, i: usize) -> Mat<F::E> {
        self.gen_dense(i, false)
    }

    /// Dense matrix of `T_i^{-1}`.
    pub fn t_inv_matrix(&self, i: usize) -> Mat<F::E> {
        self.gen_dense(i, true)
    }

    /// Dense matrix of `L_k`.
    pub fn l_matrix(&self, k: usize) -> Mat<F::E> {
        Mat::diagonal(&self.contents[k - 1], &self.field.zero())
    }

    /// Evaluate a word.
    pub fn eval(&self, w: &Word) -> Result<Mat<F::E>> {
        w.validate(self.n)?;
        Ok(self.eval_acc(w)?.into_mat(self.dim(), &self.field.zero()))
    }

    fn eval_acc(&self, w: &Word) -> Result<Acc<F::E>> {
        let mut acc = Acc::Scalar(self.field.one());
        for tok in &w.0 {
            acc = match tok {
                Token::Scal(m) => acc.scale(&self.field.monomial(m)),
                Token::L(k) => acc.mul_diag(&self.contents[*k - 1]),
                Token::T(0) => acc.mul_diag(&self.t0),
                Token::Tinv(0) => acc.mul_diag(&self.t0_inv),
                Token::T(i) => acc.mul_gen(&self.gens[*i - 1], &self.field.zero()),
                Token::Tinv(i) => acc.mul_gen(&self.gens_inv[*i - 1], &self.field.zero()),
                Token::Sum(ws) => {
                    let mut total: Option<Acc<F::E>> = None;
                    for x in ws {
                        let v = self.eval_acc(x)?;
                        total = Some(match total {
                            None => v,
                            Some(t) => t.add(v, self.dim(), &self.field.zero()),
                        });
                    }
                    match total {
                        None => Acc::Scalar(self.field.zero()),
                        Some(t) => acc.mul(t, self.dim(), &self.field.zero()),
                    }
                }
            };
        }
        Ok(acc)
    }

    /// Trace of a word: the character value `χ^λ(w)`.
    pub fn character(&self, w: &Word) -> Result<F::E> {
        w.validate(self.n)?;
        let zero = self.field.zero();
        Ok(match self.eval_acc(w)? {
            Acc::Scalar(c) => c.mul(&self.field.from_int(self.dim() as i64)),
            Acc::Diag(d) => d.iter().fold(zero, |a, x| a.add(x)),
            Acc::Dense(m) => m.trace(&zero),
        })
    }
}

/// Accumulator used while multiplying out a word; diagonal factors are
/// merged without forming dense matrices.
enum Acc<E: Scalar> {
    Scalar(E),
    Diag(Vec<E>),
    Dense(Mat<E>),
}

impl<E: Scalar> Acc<E> {
    fn into_mat(self, dim: usize, zero: &E) -> Mat<E> {
        match self {
            Acc::Scalar(c) => Mat::identity(dim, zero).scale(&c),
            Acc::Diag(d) => Mat::diagonal(&d, zero),
            Acc::Dense(m) => m,
        }
    }

    fn scale(self, c: &E) -> Acc<E> {
        match self {
            Acc::Scalar(x) => Acc::Scalar(x.mul(c)),
            Acc::Diag(d) => Acc::Diag(d.iter().map(|x| x.mul(c)).collect()),
            Acc::Dense(m) => Acc::Dense(m.scale(c)),
        }
    }

    fn mul_diag(self, diag: &[E]) -> Acc<E> {
        match self {
            Acc::Scalar(x) => Acc::Diag(diag.iter().map(|y| x.mul(y)).collect()),
            Acc::Diag(d) => Acc::Diag(d.iter().zip(diag).map(|(a, b)| a.mul(b)).collect()),
            Acc::Dense(m) => Acc::Dense(m.mul_diag(diag)),
        }
    }

    fn mul_gen(self, rows: &[GenRow<E>], zero: &E) -> Acc<E> {
        let dim = rows.len();
        let mut out = Mat::zeros(dim, dim, zero);
        match self {
            Acc::Scalar(c) => {
                for (b, row) in rows.iter().enumerate() {
                    out.set(b, b, row.diag.mul(&c));
                    if let Some((t, v)) = &row.off {
                        out.set(b, *t, v.mul(&c));
                    }
                }
            }
            Acc::Diag(d) => {
                for (b, row) in rows.iter().enumerate() {
                    out.set(b, b, row.diag.mul(&d[b]));
                    if let Some((t, v)) = &row.off {
                        out.set(b, *t, v.mul(&d[b]));
                    }
                }
            }
            Acc::Dense(m) => {
                for i in 0..dim {
                    for (b, row) in rows.iter().enumerate() {
                        let x = m.get(i, b);
                        if x.is_zero() {
                            continue;
                        }
                        let cur = out.get(i, b).add(&x.mul(&row.diag));
                        out.set(i, b, cur);
                        if let Some((t, v)) = &row.off {
                            let cur = out.get(i, *t).add(&x.mul(v));
                            out.set(i, *t, cur);
                        }
                    }
                }
            }
        }
        Acc::Dense(out)
    }

    fn mul(self, other: Acc<E>, dim: usize, zero: &E) -> Acc<E> {
        match other {
            Acc::Scalar(c) => self.scale(&c),
            Acc::Diag(d) => self.mul_diag(&d),
            Acc::Dense(m) => match self {
                Acc::Scalar(c) => Acc::Dense(m.scale(&c)),
                Acc::Diag(d) => Acc::Dense(Mat::diag_mul(&d, &m)),
                Acc::Dense(a) => {
                    let _ = (dim, zero);
                    Acc::Dense(a.mul(&m))
                }
            },
        }
    }

    fn add(self, other: Acc<E>, dim: usize, zero: &E) -> Acc<E> {
        match (self, other) {
            (Acc::Scalar(a), Acc::Scalar(b)) => Acc::Scalar(a.add(&b)),
            (Acc::Scalar(a), Acc::Diag(d)) | (Acc::Diag(d), Acc::Scalar(a)) => {
                Acc::Diag(d.iter().map(|x| x.add(&a)).collect())
            }
            (Acc::Diag(x), Acc::Diag(y)) => Acc::Diag(x.iter().zip(&y).map(|(a, b)| a.add(b)).collect()),
            (a, b) => Acc::Dense(a.into_mat(dim, zero).add(&b.into_mat(dim, zero))),
        }
    }
}

/// Outcome of [`check_relations`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Number of individual relations checked.
    pub checked: usize,
    /// Descriptions of the relations that failed.
    pub failures: Vec<String>,
}

impl RelationReport {
    /// True if no relation failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify every defining relation of `H_{r,n}(Q^{∨ε})` as an exact matrix
/// identity: the cyclotomic relation `Π_{s,i} (T_0 − ε^s Q_i) = 0`, the
/// quadratic relations, both braid families and the commutations.
pub fn check_relations<F: ParamField>(rep: &SeminormalRep<F>) -> RelationReport {
    let mut rep_out = RelationReport::default();
    let f = rep.field();
    let zero = f.zero();
    let dim = rep.dim();
    let n = rep.n();
    if n == 0 {
        return rep_out;
    }
    let id = Mat::identity(dim, &zero);
    let t: Vec<Mat<F::E>> = (0..n).map(|i| rep.t_matrix(i)).collect();
    let mut check = |name: String, lhs: Mat<F::E>, rhs: Mat<F::E>| {
        rep_out.checked += 1;
        if lhs != rhs {
            rep_out.failures.push(name);
        }
    };
    // cyclotomic relation
    let d = f.d();
    let mut cyc = id.clone();
    for s in 1..=f.p() as i64 {
        for i in 1..=d {
            let mut m = Mono::big_q(d, i);
            m.eps = s;
            let u = f.monomial(&m);
            cyc = cyc.mul(&t[0].sub(&id.scale(&u)));
        }
    }
    check(String::from("cyclotomic relation for T_0"), cyc, Mat::zeros(dim, dim, &zero));
    // quadratic relations
    let q = f.q();
    for i in 1..n {
        let lhs = t[i].sub(&id.scale(&q)).mul(&t[i].add(&id));
        check(format!("quadratic relation for T_{}", i), lhs, Mat::zeros(dim, dim, &zero));
    }
    if n >= 2 {
        let lhs = t[0].mul(&t[1]).mul(&t[0]).mul(&t[1]);
        let rhs = t[1].mul(&t[0]).mul(&t[1]).mul(&t[0]);
        check(String::from("T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0"), lhs, rhs);
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = t[i + 1].mul(&t[i]).mul(&t[i + 1]);
        let rhs = t[i].mul(&t[i + 1]).mul(&t[i]);
        check(format!("braid relation T_{} T_{} T_{}", i + 1, i, i + 1), lhs, rhs);
    }
    for j in 2..n {
        check(format!("T_0 commutes with T_{}", j), t[0].mul(&t[j]), t[j].mul(&t[0]));
    }
    for i in 1..n {
        for j in (i + 2)..n {
            check(format!("T_{} commutes with T_{}", i, j), t[i].mul(&t[j]), t[j].mul(&t[i]));
        }
    }
    rep_out
}

/// The faithful representation `⊕_{λ ∈ P_{r,n}} S(λ)` over one field.
#[derive(Clone, Debug)]
pub struct Faithful<F: ParamField> {
    reps: Vec<SeminormalRep<F>>,
}

impl<F: ParamField> Faithful<F> {
    /// Build all Specht modules for `r = pd` and `n`.
    pub fn build(f: &F, n: usize) -> Result<Faithful<F>> {
        let r = f.p() * f.d();
        let reps = Multipartition::all(r, n)
            .iter()
            .map(|lam| SeminormalRep::build(lam, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Faithful { reps })
    }

    /// Build only the given shapes.
    pub fn build_shapes(f: &F, shapes: &[Multipartition]) -> Result<Faithful<F>> {
        let reps = shapes
            .iter()
            .map(|lam| SeminormalRep::build(lam, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Faithful { reps })
    }

    /// Components.
    pub fn reps(&self) -> &[SeminormalRep<F>] {
        &self.reps
    }

    /// Total dimension `Σ |Std(λ)|²`.
    pub fn algebra_dim(&self) -> usize {
        self.reps.iter().map(|r| r.dim() * r.dim()).sum()
    }

    /// Evaluate a word on every component.
    pub fn eval(&self, w: &Word) -> Result<Vec<Mat<F::E>>> {
        self.reps.iter().map(|r| r.eval(w)).collect()
    }

    /// True if two words act identically on every component.
    pub fn equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        for r in &self.reps {
            if r.eval(w1)? != r.eval(w2)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// How identities between elements are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Over the generic function field.
    Symbolic,
    /// At `trials` pseudo-random separated points derived from `seed`.
    Specialize {
        /// Number of points.
        trials: usize,
        /// Seed for the point sampler.
        seed: u64,
    },
}

impl Mode {
    /// The default mode for `(r, n)`: symbolic when `r^n n! ≤ 40`, otherwise
    /// three specialized points.
    pub fn default_for(r: usize, n: usize, seed: u64) -> Mode {
        let mut dim: u128 = 1;
        for k in 1..=n as u128 {
            dim *= k * r as u128;
        }
        if dim <= 40 {
            Mode::Symbolic
        } else {
            Mode::Specialize { trials: 3, seed }
        }
    }
}

/// Decide `w_1 = w_2` in `H_{r,n}` through the faithful representation.
pub fn element_equal(p: usize, d: usize, n: usize, w1: &Word, w2: &Word, mode: Mode) -> Result<bool> {
    match mode {
        Mode::Symbolic => {
            let f = GenericField::new(p, d)?;
            Faithful::build(&f, n)?.equal(w1, w2)
        }
        Mode::Specialize { trials, seed } => {
            for pt in SpecPoint::sample_many(p, d, n, seed, trials)? {
                if !Faithful::build(&pt, n)?.equal(w1, w2)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// `χ^λ(w)` over the given field.
pub fn character<F: ParamField>(lam: &Multipartition, w: &Word, f: &F) -> Result<F::E> {
    SeminormalRep::build(lam, f)?.character(w)
}
