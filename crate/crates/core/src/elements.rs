//! The distinguished elements of `H_{r,n}` as words (`LL` products,
//! `T_{a,b}`, `T_b`, `v_b`, `Y_t`, …), the canonical trace form, and the
//! verifiers for the identities these elements satisfy.
//!
//! Every identity is decided through the faithful seminormal representation
//! `⊕_λ S(λ)`, either over the generic function field or at exact
//! specialization points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combin::{wab_perm, wb_perm, Composition, Multipartition, Partition, Perm};
use crate::exactnum::{GenericField, Mat, Mono, ParamField, Scalar, SpecPoint};
use crate::error::{Error, Result};
use crate::scalars::{schur_element, schur_element_params};
use crate::seminormal::{Faithful, Mode, SeminormalRep, Token, Word};
use crate::tableau::count_std;

/// Which distinguished element to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSpec {
    /// `LL^{(s)}_{l,m} = Π_{l ≤ k ≤ m} Π_i (L_k − ε^s Q_i)`.
    LL {
        /// The `ε`-exponent `s`.
        s: i64,
        /// First index.
        l: usize,
        /// Last index.
        m: usize,
    },
    /// `LL^{(i,j)}_{l,m}`: the product of `LL^{(s)}_{l,m}` over `s ∈ I_{ij}`.
    LLRange {
        /// Start of the cyclic range.
        i: usize,
        /// End of the cyclic range.
        j: usize,
        /// First index.
        l: usize,
        /// Last index.
        m: usize,
    },
    /// `T^{⟨k⟩}_{a,b}`.
    Tab {
        /// `a`.
        a: usize,
        /// `b`.
        b: usize,
        /// Index shift `k`.
        k: usize,
    },
    /// `T_b = T_{w_b}`.
    Tb(Composition),
    /// `v_b^{(t)} = v_b(ε^t Q)`.
    Vb {
        /// The composition.
        b: Composition,
        /// Parameter twist `t`.
        t: i64,
    },
    /// The `j`-th rewriting of `v_b`.
    Changing {
        /// The composition.
        b: Composition,
        /// `1 ≤ j ≤ p`.
        j: usize,
    },
    /// `Y_t`.
    Y {
        /// The composition.
        b: Composition,
        /// `1 ≤ t ≤ p`.
        t: usize,
    },
    /// `Y_{t,m} = Y_{tm+m} ⋯ Y_{tm+1}` (indices mod `p`).
    Ytm {
        /// The composition.
        b: Composition,
        /// `t`.
        t: usize,
        /// `m`.
        m: usize,
    },
    /// `u_b^+`.
    UbPlus(Composition),
    /// `u_b^-`.
    UbMinus(Composition),
    /// `v_b^+`.
    VbPlus(Composition),
    /// `v_b^-`.
    VbMinus(Composition),
    /// `x_λ = Σ_{w ∈ S_λ} T_w`.
    X(Multipartition),
    /// `y_λ = Σ_{w ∈ S_λ} (−1)^{ℓ(w)} T_w`.
    Y2(Multipartition),
    /// `u^+_λ = Π_{s ≥ 2} Π_{j ≤ a_s} (L_j − u_s)`.
    UPlus(Multipartition),
}

/// Builds element words in the context `(p, d, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Elements {
    p: usize,
    d: usize,
    n: usize,
}

fn cyc(i: i64, p: usize) -> usize {
    ((i - 1).rem_euclid(p as i64) + 1) as usize
}

impl Elements {
    /// A context for `H_{r,n}` with `r = pd`.
    pub fn new(p: usize, d: usize, n: usize) -> Result<Elements> {
        if p < 1 || d < 1 {
            return Err(Error::Invalid(format!("need p, d ≥ 1 (got p = {}, d = {})", p, d)));
        }
        Ok(Elements { p, d, n })
    }

    /// `p`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// `d`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    fn check_comp(&self, b: &Composition) -> Result<()> {
        if b.len() != self.p || b.total() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "composition {:?} is not in Comp_{}({})",
                b.parts(),
                self.p,
                self.n
            )));
        }
        Ok(())
    }

    /// `LL^{(s)}_k = Π_{i=1}^d (L_k − ε^s Q_i)`.
    pub fn ll_k(&self, s: i64, k: usize) -> Result<Word> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange(format!("L_{} with n = {}", k, self.n)));
        }
        let mut w = Word::one();
        for i in 1..=self.d {
            let mut m = Mono::big_q(self.d, i);
            m.eps = s;
            w.0.push(Token::Sum(vec![Word::token(Token::L(k)), Word::scalar(m.negate())]));
        }
        Ok(w)
    }

    /// `LL^{(s)}_{l,m}` (the identity when `l > m`).
    pub fn ll(&self, s: i64, l: usize, m: usize) -> Result<Word> {
        let mut w = Word::one();
        for k in l..=m {
            w = w.then(&self.ll_k(s, k)?);
        }
        Ok(w)
    }

    /// The index set `I_{ij}`: `{i, …, j}` if `i ≤ j`, otherwise
    /// `{1, …, j, i, …, p}`.
    pub fn index_set(&self, i: usize, j: usize) -> Result<Vec<usize>> {
        if i == 0 || j == 0 || i > self.p || j > self.p {
            return Err(Error::IndexOutOfRange(format!("I_{{{},{}}} with p = {}", i, j, self.p)));
        }
        Ok(if i <= j {
            (i..=j).collect()
        } else {
            (1..=j).chain(i..=self.p).collect()
        })
    }

    /// `LL^{(i,j)}_{l,m}`.
    pub fn ll_range(&self, i: usize, j: usize, l: usize, m: usize) -> Result<Word> {
        let set = self.index_set(i, j)?;
        let mut w = Word::one();
        for k in l..=m {
            for &s in &set {
                w = w.then(&self.ll_k(s as i64, k)?);
            }
        }
        Ok(w)
    }

    /// `T_w` through a reduced word of `w`.
    pub fn t_perm(&self, w: &Perm) -> Result<Word> {
        if w.n() != self.n {
            return Err(Error::ShapeMismatch(format!("permutation of {} points with n = {}", w.n(), self.n)));
        }
        Ok(Word::t_word(&w.reduced_word()))
    }

    /// `T^{⟨k⟩}_{a,b}`.
    pub fn t_ab(&self, a: usize, b: usize, k: usize) -> Result<Word> {
        self.t_perm(&wab_perm(self.n, a, b, k)?)
    }

    /// `T_b`.
    pub fn t_b(&self, b: &Composition) -> Result<Word> {
        self.check_comp(b)?;
        self.t_perm(&wb_perm(b))
    }

    /// `v_b` by its defining product.
    pub fn v_b(&self, b: &Composition) -> Result<Word> {
        Ok(self.v_b_plus(b)?.then(&self.u_b_plus(b)?))
    }

    /// `v_b^{(t)} = v_b(ε^t Q)`.
    pub fn v_b_twisted(&self, b: &Composition, t: i64) -> Result<Word> {
        Ok(self.v_b(b)?.shift_params(t))
    }

    /// `v_b^+ = LL^{(1,p−1)}_{1,b_p} T_{b_p, b_1^{p−1}} ⋯ LL^{(1,1)}_{1,b_2} T_{b_2, b_1^1}`.
    pub fn v_b_plus(&self, b: &Composition) -> Result<Word> {
        self.check_comp(b)?;
        let mut w = Word::one();
        for i in (2..=self.p).rev() {
            w = w
                .then(&self.ll_range(1, i - 1, 1, b.part(i))?)
                .then(&self.t_ab(b.part(i), b.partial(1, i - 1), 0)?);
        }
        Ok(w)
    }

    /// `u_b^+ = LL^{(2)}_{1,b_1^1} LL^{(3)}_{1,b_1^2} ⋯ LL^{(p)}_{1,b_1^{p−1}}`.
    pub fn u_b_plus(&self, b: &Composition) -> Result<Word> {
        self.check_comp(b)?;
        let mut w = Word::one();
        for s in 2..=self.p {
            w = w.then(&self.ll(s as i64, 1, b.partial(1, s - 1))?);
        }
        Ok(w)
    }

    /// `u_b^- = LL^{(p−1)}_{1,b_p^p} ⋯ LL^{(2)}_{1,b_3^p} LL^{(1)}_{1,b_2^p}`.
    pub fn u_b_minus(&self, b: &Composition) -> Result<Word> {
        self.check_comp(b)?;
        let mut w = Word::one();
        for s in (1..self.p).rev() {
            w = w.then(&self.ll(s as i64, 1, b.partial(s + 1, self.p))?);
        }
        Ok(w)
    }

    /// `v_b^- = T_{b_p^p, b_{p−1}} LL^{(p,p)}_{1,b_{p−1}} ⋯ T_{b_2^p, b_1} LL^{(2,p)}_{1,b_1}`.
    pub fn v_b_minus(&self, b: &Composition) -> Result<Word> {
        self.check_comp(b)?;
        let mut w = Word::one();
        for i in (2..=self.p).rev() {
            w = w
                .then(&self.t_ab(b.partial(i, self.p), b.part(i - 1), 0)?)
                .then(&self.ll_range(i, self.p, 1, b.part(i - 1))?);
        }
        Ok(w)
    }

    /// The `j`-th expression for `v_b`:
    /// `Π_{j≤k<p} LL^{(j,k)}_{1,b_{k+1}} T_{b_{k+1}, b_j^k} · Π_{1≤i<j} LL^{(i)}_{1,b_{i+1}^p}
    ///  · Π_{j<k≤p} LL^{(k)}_{1,b_j^{k−1}} · Π_{1<i≤j} T_{b_i^p, b_{i−1}} LL^{(i,p)}_{1,b_{i−1}}`,
    /// every product taken with decreasing index.
    pub fn changing(&self, b: &Composition, j: usize) -> Result<Word> {
        self.check_comp(b)?;
        let p = self.p;
        if j == 0 || j > p {
            return Err(Error::IndexOutOfRange(format!("j = {} with p = {}", j, p)));
        }
        let mut w = Word::one();
        for k in (j..p).rev() {
            w = w
                .then(&self.ll_range(j, k, 1, b.part(k + 1))?)
                .then(&self.t_ab(b.part(k + 1), b.partial(j, k), 0)?);
        }
        for i in (1..j).rev() {
            w = w.then(&self.ll(i as i64, 1, b.partial(i + 1, p))?);
        }
        for k in ((j + 1)..=p).rev() {
            w = w.then(&self.ll(k as i64, 1, b.partial(j, k - 1))?);
        }
        for i in (2..=j).rev() {
            w = w
                .then(&self.t_ab(b.partial(i, p), b.part(i - 1), 0)?)
                .then(&self.ll_range(i, p, 1, b.part(i - 1))?);
        }
        Ok(w)
    }

    /// `Y_t = LL^{(t+1, t+p−1)}_{1,b_t} T_{b_t, n−b_t}`, with the range of
    /// `ε`-exponents read modulo `p` (`t` itself is also read modulo `p`).
    pub fn y(&self, b: &Composition, t: usize) -> Result<Word> {
        self.check_comp(b)?;
        let p = self.p;
        let tt = cyc(t as i64, p);
        let bt = b.part(tt);
        let ll = if p == 1 {
            Word::one()
        } else {
            self.ll_range(cyc(tt as i64 + 1, p), cyc((tt + p - 1) as i64, p), 1, bt)?
        };
        Ok(ll.then(&self.t_ab(bt, self.n - bt, 0)?))
    }

    /// `Y_{t,m} = Y_{tm+m} Y_{tm+m−1} ⋯ Y_{tm+1}`.
    pub fn y_tm(&self, b: &Composition, t: usize, m: usize) -> Result<Word> {
        let mut w = Word::one();
        for u in (1..=m).rev() {
            w = w.then(&self.y(b, t * m + u)?);
        }
        Ok(w)
    }

    /// `Y_p Y_{p−1} ⋯ Y_1`.
    pub fn y_product(&self, b: &Composition) -> Result<Word> {
        self.y_tm(b, 0, self.p)
    }

    /// `v_b T_b`.
    pub fn v_b_t_b(&self, b: &Composition) -> Result<Word> {
        Ok(self.v_b(b)?.then(&self.t_b(b)?))
    }

    fn young_elements(&self, lam: &Multipartition, signed: bool) -> Result<Word> {
        if lam.size() != self.n {
            return Err(Error::ShapeMismatch(format!("{:?} is not a multipartition of {}", lam, self.n)));
        }
        let parts: Vec<usize> = lam
            .comps()
            .iter()
            .flat_map(|c| c.parts().iter().map(|&x| x as usize))
            .collect();
        let terms = young_subgroup(&parts)
            .into_iter()
            .map(|w| {
                let word = w.reduced_word();
                let t = Word::t_word(&word);
                if signed && word.len() % 2 == 1 {
                    Word::scalar(Mono::one(self.d).negate()).then(&t)
                } else {
                    t
                }
            })
            .collect();
        Ok(Word::sum(terms))
    }

    /// `u^+_λ = Π_{s=2}^{r} Π_{j=1}^{a_s} (L_j − u_s)` where
    /// `a_s = |λ^{(1)}| + ⋯ + |λ^{(s−1)}|` and `u_s = ε^{p_s} Q_{d_s}` is the
    /// `s`-th parameter.
    pub fn u_plus(&self, lam: &Multipartition) -> Result<Word> {
        let r = self.p * self.d;
        if lam.r() != r || lam.size() != self.n {
            return Err(Error::ShapeMismatch(format!("{:?} is not in P_{{{},{}}}", lam, r, self.n)));
        }
        let mut w = Word::one();
        let mut a = 0;
        for s in 2..=r {
            a += lam.comp(s - 1).size();
            let ci = crate::combin::ComponentIndex::new(s, self.d);
            let mut u = Mono::big_q(self.d, ci.d_s);
            u.eps = ci.p_s as i64;
            for k in 1..=a {
                w.0.push(Token::Sum(vec![Word::token(Token::L(k)), Word::scalar(u.negate())]));
            }
        }
        Ok(w)
    }

    /// Expand an [`ElementSpec`].
    pub fn make(&self, spec: &ElementSpec) -> Result<Word> {
        match spec {
            ElementSpec::LL { s, l, m } => self.ll(*s, *l, *m),
            ElementSpec::LLRange { i, j, l, m } => self.ll_range(*i, *j, *l, *m),
            ElementSpec::Tab { a, b, k } => self.t_ab(*a, *b, *k),
            ElementSpec::Tb(b) => self.t_b(b),
            ElementSpec::Vb { b, t } => self.v_b_twisted(b, *t),
            ElementSpec::Changing { b, j } => self.changing(b, *j),
            ElementSpec::Y { b, t } => self.y(b, *t),
            ElementSpec::Ytm { b, t, m } => self.y_tm(b, *t, *m),
            ElementSpec::UbPlus(b) => self.u_b_plus(b),
            ElementSpec::UbMinus(b) => self.u_b_minus(b),
            ElementSpec::VbPlus(b) => self.v_b_plus(b),
            ElementSpec::VbMinus(b) => self.v_b_minus(b),
            ElementSpec::X(lam) => self.young_elements(lam, false),
            ElementSpec::Y2(lam) => self.young_elements(lam, true),
            ElementSpec::UPlus(lam) => self.u_plus(lam),
        }
    }
}

/// All elements of the Young subgroup `S_{c_1} × S_{c_2} × ⋯` of `S_n`,
/// where `n = Σ c_i`.
pub fn young_subgroup(parts: &[usize]) -> Vec<Perm> {
    let n: usize = parts.iter().sum();
    let mut out = vec![Perm::identity(n)];
    let mut offset = 0;
    for &c in parts {
        let block = symmetric_group(c);
        let mut next = Vec::with_capacity(out.len() * block.len());
        for w in &out {
            for x in &block {
                next.push(w.then(&embed_perm(x, offset, n)));
            }
        }
        out = next;
        offset += c;
    }
    out
}

/// All permutations of `{1..m}`.
pub fn symmetric_group(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut img: Vec<usize> = (1..=m).collect();
    fn rec(k: usize, img: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if k == img.len() {
            out.push(Perm::from_images(img.clone()).expect("valid"));
            return;
        }
        for i in k..img.len() {
            img.swap(k, i);
            rec(k + 1, img, out);
            img.swap(k, i);
        }
    }
    rec(0, &mut img, &mut out);
    out.sort_by(|a, b| a.images().cmp(b.images()));
    out
}

/// The permutation `x^{⟨c⟩}` of `{1..n}`: `x` acting on `c+1..c+m`.
pub fn embed_perm(x: &Perm, c: usize, n: usize) -> Perm {
    let mut img: Vec<usize> = (1..=n).collect();
    for i in 1..=x.n() {
        img[c + i - 1] = c + x.apply(i);
    }
    Perm::from_images(img).expect("embedding of a permutation")
}

// ---------------------------------------------------------------------------
// Trace forms
// ---------------------------------------------------------------------------

/// The faithful representation together with the Schur elements: evaluates
/// the canonical trace `Tr = Σ_λ χ^λ / s_λ` of `H_{r,n}`.
#[derive(Clone, Debug)]
pub struct TraceForm<F: ParamField> {
    faithful: Faithful<F>,
    inv_schur: Vec<F::E>,
}

impl<F: ParamField> TraceForm<F> {
    /// Build for `H_{r,n}` over `f`.
    pub fn new(f: &F, n: usize) -> Result<TraceForm<F>> {
        let faithful = Faithful::build(f, n)?;
        let inv_schur = faithful
            .reps()
            .iter()
            .map(|rep| schur_element(rep.shape(), f)?.inv())
            .collect::<Result<Vec<_>>>()?;
        Ok(TraceForm { faithful, inv_schur })
    }

    /// The faithful representation.
    pub fn faithful(&self) -> &Faithful<F> {
        &self.faithful
    }

    /// `Tr(w)`.
    pub fn trace(&self, w: &Word) -> Result<F::E> {
        let f = self.faithful.reps()[0].field();
        let mut acc = f.zero();
        for (rep, c) in self.faithful.reps().iter().zip(&self.inv_schur) {
            acc = acc.add(&rep.character(w)?.mul(c));
        }
        Ok(acc)
    }

    /// `Tr` of an element given by its matrices on each component.
    pub fn trace_mats(&self, mats: &[Mat<F::E>]) -> F::E {
        let f = self.faithful.reps()[0].field();
        let zero = f.zero();
        let mut acc = f.zero();
        for (m, c) in mats.iter().zip(&self.inv_schur) {
            acc = acc.add(&m.trace(&zero).mul(c));
        }
        acc
    }

    /// `Tr(a · b)` from matrices, without forming the products.
    pub fn trace_product(&self, a: &[Mat<F::E>], b: &[Mat<F::E>]) -> F::E {
        let f = self.faithful.reps()[0].field();
        let mut acc = f.zero();
        for ((x, y), c) in a.iter().zip(b).zip(&self.inv_schur) {
            acc = acc.add(&trace_of_product(x, y, &f.zero()).mul(c));
        }
        acc
    }
}

/// `tr(a · b)` in `O(dim²)` operations.
pub fn trace_of_product<E: Scalar>(a: &Mat<E>, b: &Mat<E>, zero: &E) -> E {
    let mut acc = zero.zero_like();
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            let y = b.get(k, i);
            if !y.is_zero() {
                acc = acc.add(&x.mul(y));
            }
        }
    }
    acc
}

/// `Tr(w) = Σ_λ χ^λ(w)/s_λ` in `H_{r,n}`, `r = pd`.
pub fn trace<F: ParamField>(f: &F, n: usize, w: &Word) -> Result<F::E> {
    TraceForm::new(f, n)?.trace(w)
}

/// The trace of `H_{d,m}(ε^t Q)` realised inside the block `t` of the
/// ambient field: `Σ_μ χ^μ(w) / s_μ(ε^t Q)` over `d`-multipartitions `μ`
/// of `m`, each placed in block `t`.
pub fn block_trace<F: ParamField>(f: &F, t: usize, m: usize, w: &Word) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    if t == 0 || t > p {
        return Err(Error::IndexOutOfRange(format!("block {} with p = {}", t, p)));
    }
    let params = block_params(d, t);
    let mut acc = f.zero();
    for mu in Multipartition::all(d, m) {
        let mut comps = vec![Partition::empty(); p * d];
        for (i, c) in mu.comps().iter().enumerate() {
            comps[d * (t - 1) + i] = c.clone();
        }
        let lam = Multipartition::new(comps);
        let chi = SeminormalRep::build(&lam, f)?.character(w)?;
        let s = schur_element_params(mu.comps(), &params, f)?;
        acc = acc.add(&chi.div(&s)?);
    }
    Ok(acc)
}

/// The parameter list `ε^t Q_1, …, ε^t Q_d`.
pub fn block_params(d: usize, t: usize) -> Vec<Mono> {
    (1..=d)
        .map(|i| {
            let mut m = Mono::big_q(d, i);
            m.eps = t as i64;
            m
        })
        .collect()
}

/// The closed formula
/// `Tr(v_b T_b) = (−1)^{dn(p−1)} q^{ℓ(w_b)} ε^{dnp(p−1)/2 − dα(b)} (Q_1⋯Q_d)^{n(p−1)}`.
pub fn trace_vbtb_closed(p: usize, d: usize, b: &Composition) -> Mono {
    let n = b.total() as i64;
    let (p_, d_) = (p as i64, d as i64);
    let mut m = Mono::one(d);
    if (d_ * n * (p_ - 1)) % 2 != 0 {
        m.coef = -m.coef;
    }
    m.q = b.ell_wb() as i64;
    m.eps = d_ * n * p_ * (p_ - 1) / 2 - d_ * b.alpha() as i64;
    for e in m.qs.iter_mut() {
        *e = n * (p_ - 1);
    }
    m
}

/// Result of comparing the closed formula for `Tr(v_b T_b)` with the
/// character expansion.
#[derive(Clone, Debug)]
pub struct TraceCheck<E> {
    /// The closed formula.
    pub closed: E,
    /// `Σ_λ χ^λ(v_b T_b)/s_λ`.
    pub expansion: E,
}

impl<E: Scalar> TraceCheck<E> {
    /// Whether the two agree.
    pub fn passed(&self) -> bool {
        self.closed == self.expansion
    }
}

/// `Tr(v_b T_b)` two ways over `f`.
pub fn trace_vbtb<F: ParamField>(f: &F, b: &Composition) -> Result<TraceCheck<F::E>> {
    let el = Elements::new(f.p(), f.d(), b.total())?;
    let tf = TraceForm::new(f, b.total())?;
    let expansion = tf.trace(&el.v_b_t_b(b)?)?;
    Ok(TraceCheck {
        closed: f.monomial(&trace_vbtb_closed(f.p(), f.d(), b)),
        expansion,
    })
}

// ---------------------------------------------------------------------------
// Identity verifiers
// ---------------------------------------------------------------------------

fn decide(p: usize, d: usize, n: usize, mode: Mode, check: &dyn Fn(&dyn AnyField) -> Result<bool>) -> Result<bool> {
    match mode {
        Mode::Symbolic => check(&GenericField::new(p, d)?),
        Mode::Specialize { trials, seed } => {
            for pt in SpecPoint::sample_many(p, d, n, seed, trials)? {
                if !check(&pt)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Object-safe access to "decide `w_1 = w_2` over this field".
pub trait AnyField {
    /// Whether the words act identically on `⊕_λ S(λ)` for `λ ∈ P_{r,n}`.
    fn words_equal(&self, n: usize, pairs: &[(Word, Word)]) -> Result<bool>;
}

impl<F: ParamField> AnyField for F {
    fn words_equal(&self, n: usize, pairs: &[(Word, Word)]) -> Result<bool> {
        let fa = Faithful::build(self, n)?;
        for (a, b) in pairs {
            if !fa.equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `v_b` (definition) equals its `j`-th rewriting.
pub fn verify_changing(d: usize, b: &Composition, j: usize, mode: Mode) -> Result<bool> {
    let (p, n) = (b.len(), b.total());
    let el = Elements::new(p, d, n)?;
    let pair = (el.v_b(b)?, el.changing(b, j)?);
    decide(p, d, n, mode, &|f| f.words_equal(n, core::slice::from_ref(&pair)))
}

/// `v_b` rewritten for every `j = 1..p` at once (one representation build
/// per point).
pub fn verify_changing_all(d: usize, b: &Composition, mode: Mode) -> Result<bool> {
    let (p, n) = (b.len(), b.total());
    let el = Elements::new(p, d, n)?;
    let vb = el.v_b(b)?;
    let pairs = (1..=p)
        .map(|j| Ok((vb.clone(), el.changing(b, j)?)))
        .collect::<Result<Vec<_>>>()?;
    decide(p, d, n, mode, &|f| f.words_equal(n, &pairs))
}

/// `Y_p ⋯ Y_1 = v_b T_b`.
pub fn verify_pleftmult(d: usize, b: &Composition, mode: Mode) -> Result<bool> {
    let (p, n) = (b.len(), b.total());
    let el = Elements::new(p, d, n)?;
    let pair = (el.y_product(b)?, el.v_b_t_b(b)?);
    decide(p, d, n, mode, &|f| f.words_equal(n, core::slice::from_ref(&pair)))
}

/// `v_b = v_b^+ u_b^+ = u_b^- v_b^-`.
pub fn verify_vb_factorizations(d: usize, b: &Composition, mode: Mode) -> Result<bool> {
    let (p, n) = (b.len(), b.total());
    let el = Elements::new(p, d, n)?;
    let vb = el.v_b(b)?;
    let pairs = vec![
        (vb.clone(), el.v_b_plus(b)?.then(&el.u_b_plus(b)?)),
        (vb, el.u_b_minus(b)?.then(&el.v_b_minus(b)?)),
    ];
    decide(p, d, n, mode, &|f| f.words_equal(n, &pairs))
}

/// `T_i v_b = v_b T_{(i)w_b^{-1}}` and `L_j v_b = v_b L_{(j)w_b^{-1}}` for
/// all admissible `i` (`i ≠ b_t^p`) and all `j`.
pub fn verify_vb_commutation(d: usize, b: &Composition, mode: Mode) -> Result<bool> {
    let (p, n) = (b.len(), b.total());
    let el = Elements::new(p, d, n)?;
    let vb = el.v_b(b)?;
    let winv = wb_perm(b).inverse();
    let excluded: Vec<usize> = (1..=p).map(|t| b.partial(t, p)).collect();
    let mut pairs = Vec::new();
    for i in 1..n {
        if excluded.contains(&i) {
            continue;
        }
        let (a, c) = (winv.apply(i), winv.apply(i + 1));
        if c != a + 1 {
            return Err(Error::Internal(format!(
                "(i)w_b^{{-1}} = {} but (i+1)w_b^{{-1}} = {} for i = {}",
                a, c, i
            )));
        }
        pairs.push((Word::token(Token::T(i)).then(&vb), vb.clone().then(&Word::token(Token::T(a)))));
    }
    for j in 1..=n {
        pairs.push((Word::token(Token::L(j)).then(&vb), vb.clone().then(&Word::token(Token::L(winv.apply(j))))));
    }
    decide(p, d, n, mode, &|f| f.words_equal(n, &pairs))
}

// ---------------------------------------------------------------------------
// The tensor basis of H_{d,b} and the comparison of trace forms
// ---------------------------------------------------------------------------

/// A basis element `⊗_t L_1^{a_{t,1}} ⋯ L_{b_t}^{a_{t,b_t}} T_{x_t}` of
/// `H_{d,b} = H_{d,b_1} ⊗ ⋯ ⊗ H_{d,b_p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorBasisElement {
    /// `exps[t][j] = a_{t+1,j+1}`, each in `0..d`.
    pub exps: Vec<Vec<u32>>,
    /// `perms[t] = x_{t+1} ∈ S_{b_{t+1}}`.
    pub perms: Vec<Perm>,
}

impl TensorBasisElement {
    /// True for the identity `1 ⊗ ⋯ ⊗ 1`.
    pub fn is_one(&self) -> bool {
        self.exps.iter().flatten().all(|&a| a == 0)
            && self.perms.iter().all(|x| x.images().iter().enumerate().all(|(i, &v)| v == i + 1))
    }

    /// True if some `L`-exponent is positive.
    pub fn has_l_part(&self) -> bool {
        self.exps.iter().flatten().any(|&a| a > 0)
    }

    /// The tensor factor `t` (1-based) as a word of `H_{d,b_t}`.
    pub fn factor_word(&self, t: usize) -> Word {
        let mut w = Word::one();
        for (j, &a) in self.exps[t - 1].iter().enumerate() {
            for _ in 0..a {
                w.0.push(Token::L(j + 1));
            }
        }
        w.then(&Word::t_word(&self.perms[t - 1].reduced_word()))
    }
}

/// The Ariki–Koike basis of `H_{d,b}` as tensors.
pub fn tensor_basis(d: usize, b: &Composition) -> Vec<TensorBasisElement> {
    let mut out = vec![TensorBasisElement {
        exps: Vec::new(),
        perms: Vec::new(),
    }];
    for &bt in b.parts() {
        let mut exps_t = vec![Vec::new()];
        for _ in 0..bt {
            exps_t = exps_t
                .into_iter()
                .flat_map(|e: Vec<u32>| {
                    (0..d as u32).map(move |a| {
                        let mut e2 = e.clone();
                        e2.push(a);
                        e2
                    })
                })
                .collect();
        }
        let perms_t = symmetric_group(bt);
        let mut next = Vec::new();
        for h in &out {
            for e in &exps_t {
                for x in &perms_t {
                    let mut h2 = h.clone();
                    h2.exps.push(e.clone());
                    h2.perms.push(x.clone());
                    next.push(h2);
                }
            }
        }
        out = next;
    }
    out
}

/// The natural inclusion `Θ_b`: sends the tensor basis element to
/// `Π_t Π_j L_{b_1^{t−1}+j}^{a_{t,j}} · T_{x_1} T_{x_2^{⟨b_1^1⟩}} ⋯ T_{x_p^{⟨b_1^{p−1}⟩}}`.
pub fn theta_b(b: &Composition, h: &TensorBasisElement) -> Result<Word> {
    let p = b.len();
    let n = b.total();
    if h.exps.len() != p || h.perms.len() != p {
        return Err(Error::ShapeMismatch("tensor element has the wrong number of factors".into()));
    }
    let mut w = Word::one();
    let mut x = Perm::identity(n);
    for t in 1..=p {
        let off = b.partial(1, t - 1);
        if h.exps[t - 1].len() != b.part(t) || h.perms[t - 1].n() != b.part(t) {
            return Err(Error::ShapeMismatch(format!("tensor factor {} does not match b_{}", t, t)));
        }
        for (j, &a) in h.exps[t - 1].iter().enumerate() {
            for _ in 0..a {
                w.0.push(Token::L(off + j + 1));
            }
        }
        x = x.then(&embed_perm(&h.perms[t - 1], off, n));
    }
    Ok(w.then(&Word::t_word(&x.reduced_word())))
}

/// Outcome of the trace comparison over the tensor basis.
#[derive(Clone, Debug, Default)]
pub struct ComparisonReport {
    /// Basis elements checked (per point).
    pub checked: usize,
    /// Failing basis elements, described.
    pub failures: Vec<String>,
    /// Basis elements with a positive `L`-exponent whose left side was zero.
    pub l_part_zero: usize,
}

impl ComparisonReport {
    /// True if no failures were recorded.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `Tr(v_b Θ_b(h) T_b) = Tr_b(h) · Tr(v_b T_b)` for every `h` in the tensor
/// basis of `H_{d,b}`, over one field.  `Tr_b` is computed as the product of
/// the block traces, each from characters and Schur elements of
/// `H_{d,b_t}(ε^t Q)`.
pub fn verify_comparison_in<F: ParamField>(f: &F, b: &Composition) -> Result<ComparisonReport> {
    let (p, d, n) = (f.p(), f.d(), b.total());
    if b.len() != p {
        return Err(Error::ShapeMismatch(format!("composition with {} parts and p = {}", b.len(), p)));
    }
    let el = Elements::new(p, d, n)?;
    let tf = TraceForm::new(f, n)?;
    let vb = tf.faithful().eval(&el.v_b(b)?)?;
    let tb = tf.faithful().eval(&el.t_b(b)?)?;
    let tb_vb: Vec<Mat<F::E>> = tb.iter().zip(&vb).map(|(x, y)| x.mul(y)).collect();
    let tr_vbtb = tf.trace_product(&vb, &tb);
    let mut report = ComparisonReport::default();
    for h in tensor_basis(d, b) {
        let x = tf.faithful().eval(&theta_b(b, &h)?)?;
        // Tr(v_b X T_b) = Tr(X · T_b v_b)
        let lhs = tf.trace_product(&x, &tb_vb);
        let mut trb = f.one();
        for t in 1..=p {
            if b.part(t) > 0 {
                trb = trb.mul(&block_trace(f, t, b.part(t), &h.factor_word(t))?);
            }
        }
        let rhs = trb.mul(&tr_vbtb);
        report.checked += 1;
        if lhs != rhs {
            report.failures.push(format!("h = {:?}: {} vs {}", h, lhs, rhs));
        } else if h.has_l_part() && lhs.is_zero() {
            report.l_part_zero += 1;
        }
    }
    Ok(report)
}

/// [`verify_comparison_in`] in the requested mode.
pub fn verify_comparison(d: usize, b: &Composition, mode: Mode) -> Result<ComparisonReport> {
    let (p, n) = (b.len(), b.total());
    match mode {
        Mode::Symbolic => verify_comparison_in(&GenericField::new(p, d)?, b),
        Mode::Specialize { trials, seed } => {
            let mut total = ComparisonReport::default();
            for pt in SpecPoint::sample_many(p, d, n, seed, trials)? {
                let r = verify_comparison_in(&pt, b)?;
                total.checked += r.checked;
                total.l_part_zero += r.l_part_zero;
                total.failures.extend(r.failures);
            }
            Ok(total)
        }
    }
}

// ---------------------------------------------------------------------------
// The scalar f_λ as an eigenvalue
// ---------------------------------------------------------------------------

/// `f_λ` read off the faithful representation: on `S(λ)`,
/// `ρ(v_b T_b) · ρ(v_b) = f_λ · ρ(v_b)` for `λ ∈ P_{d,b}`, while
/// `ρ(v_b) = 0` for every other `λ`.  The rank of `ρ(v_b)` is checked to be
/// `dim S_b(λ) = Π_t |Std(λ^{[t]})|`.
pub fn flam_eigen_oracle<F: ParamField>(f: &F, b: &Composition) -> Result<Vec<(Multipartition, F::E)>> {
    let (p, d, n) = (f.p(), f.d(), b.total());
    let el = Elements::new(p, d, n)?;
    let vb_w = el.v_b(b)?;
    let tb_w = el.t_b(b)?;
    let mut out = Vec::new();
    for lam in Multipartition::all(p * d, n) {
        let rep = SeminormalRep::build(&lam, f)?;
        let a = rep.eval(&vb_w)?;
        let in_pdb = lam.block_sizes(p, d)? == *b;
        if !in_pdb {
            if !a.is_zero() {
                return Err(Error::Verification(format!("v_b does not vanish on S({:?})", lam)));
            }
            continue;
        }
        let expected_rank: u128 = lam.blocks(p, d)?.iter().map(count_std).product();
        if a.rank() as u128 != expected_rank {
            return Err(Error::Verification(format!(
                "rank of v_b on S({:?}) is {}, expected {}",
                lam,
                a.rank(),
                expected_rank
            )));
        }
        let m = a.mul(&rep.eval(&tb_w)?);
        let ma = m.mul(&a);
        let (i, j) = (0..a.rows())
            .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| !a.get(i, j).is_zero())
            .ok_or_else(|| Error::Verification(format!("v_b vanishes on S({:?})", lam)))?;
        let fl = ma.get(i, j).div(a.get(i, j))?;
        if ma != a.scale(&fl) {
            return Err(Error::Verification(format!(
                "v_b T_b v_b is not a multiple of v_b on S({:?})",
                lam
            )));
        }
        out.push((lam, fl));
    }
    Ok(out)
}
