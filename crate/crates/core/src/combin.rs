//! Partitions, multipartitions, compositions and permutations, with every
//! combinatorial statistic consumed by the closed formulas.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Partition {
    /// Validate and wrap a sequence of parts (trailing zeros are dropped).
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{:?} is not a partition", parts)));
        }
        Ok(Partition(parts))
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Size `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// The `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Transpose.
    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=m)
                .map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32)
                .collect(),
        )
    }

    /// `β(λ) = Σ (i−1) λ_i`.
    pub fn beta(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| i as u64 * x as u64)
            .sum()
    }

    /// Nodes `(row, col)` (1-based) in row-reading order.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size());
        for (i, &x) in self.0.iter().enumerate() {
            for j in 0..x as usize {
                v.push((i + 1, j + 1));
            }
        }
        v
    }

    /// True if `(i, j)` (1-based) is a node of the diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=max.min(rem)).rev() {
                cur.push(k as u32);
                rec(rem - k, k, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        let len = self.len().max(other.len());
        for i in 1..=len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }
}

/// Generalized hook length `h_{ij}(λ, μ) = λ_i − i + μ'_j − j + 1`.
pub fn hook(lam: &Partition, mu: &Partition, i: usize, j: usize) -> Result<i64> {
    if !lam.contains(i, j) {
        return Err(Error::IndexOutOfRange(format!("node ({}, {}) is not in {:?}", i, j, lam)));
    }
    let muc = mu.conjugate();
    Ok(lam.part(i) as i64 - i as i64 + muc.part(j) as i64 - j as i64 + 1)
}

/// Decomposition `s = d(p_s − 1) + d_s` of a 1-based component index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentIndex {
    /// Component index `s` in `1..=r`.
    pub s: usize,
    /// Block index `p_s` in `1..=p`.
    pub p_s: usize,
    /// Position `d_s` inside the block, in `1..=d`.
    pub d_s: usize,
}

impl ComponentIndex {
    /// Decompose `s` with respect to `d`.
    pub fn new(s: usize, d: usize) -> ComponentIndex {
        assert!(s >= 1 && d >= 1, "component indices are 1-based");
        ComponentIndex {
            s,
            p_s: (s - 1) / d + 1,
            d_s: (s - 1) % d + 1,
        }
    }
}

/// An ordered tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multipartition {
    comps: Vec<Partition>,
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", c)?;
        }
        write!(f, ")")
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multipartition {
    /// The total order used for representatives and deterministic output:
    /// lexicographic on `(|λ^(1)|, λ^(1), |λ^(2)|, λ^(2), …)`.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl Multipartition {
    /// Wrap components.
    pub fn new(comps: Vec<Partition>) -> Multipartition {
        Multipartition { comps }
    }

    /// Parse from raw part lists.
    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Multipartition> {
        Ok(Multipartition {
            comps: parts.into_iter().map(Partition::new).collect::<Result<_>>()?,
        })
    }

    /// Components.
    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    /// Component `s` (1-based).
    pub fn comp(&self, s: usize) -> &Partition {
        &self.comps[s - 1]
    }

    /// Number of components `r`.
    pub fn r(&self) -> usize {
        self.comps.len()
    }

    /// Total size `n`.
    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    /// Flattened key `(|λ^(1)|, λ^(1), |λ^(2)|, …)` of the total order.
    pub fn order_key(&self) -> Vec<u32> {
        let mut k = Vec::new();
        for c in &self.comps {
            k.push(c.size() as u32);
            k.extend_from_slice(c.parts());
        }
        k
    }

    /// Conjugate: reverse the components and transpose each.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition {
            comps: self.comps.iter().rev().map(Partition::conjugate).collect(),
        }
    }

    /// All parts sorted into a single partition.
    pub fn arrow(&self) -> Partition {
        let mut v: Vec<u32> = self.comps.iter().flat_map(|c| c.parts().iter().copied()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Dominance order.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        if self.r() != other.r() || self.size() != other.size() {
            return Err(Error::ShapeMismatch(format!(
                "cannot compare {:?} and {:?} in the dominance order",
                self, other
            )));
        }
        let (mut a, mut b) = (0i64, 0i64);
        for (x, y) in self.comps.iter().zip(&other.comps) {
            let len = x.len().max(y.len());
            let (mut pa, mut pb) = (a, b);
            for i in 1..=len {
                pa += x.part(i) as i64;
                pb += y.part(i) as i64;
                if pa < pb {
                    return Ok(false);
                }
            }
            a += x.size() as i64;
            b += y.size() as i64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_context(&self, p: usize, d: usize) -> Result<()> {
        if p == 0 || d == 0 || self.r() != p * d {
            return Err(Error::ShapeMismatch(format!(
                "{:?} has {} components, but the context (p, d) = ({}, {}) needs {}",
                self,
                self.r(),
                p,
                d,
                p * d
            )));
        }
        Ok(())
    }

    /// Block `λ^{[t]}` (1-based `t`) as a `d`-multipartition.
    pub fn block(&self, t: usize, d: usize) -> Multipartition {
        Multipartition {
            comps: self.comps[d * (t - 1)..d * t].to_vec(),
        }
    }

    /// All blocks `λ^{[1]}, …, λ^{[p]}`.
    pub fn blocks(&self, p: usize, d: usize) -> Result<Vec<Multipartition>> {
        self.check_context(p, d)?;
        Ok((1..=p).map(|t| self.block(t, d)).collect())
    }

    /// Block sizes `(|λ^{[1]}|, …, |λ^{[p]}|)`.
    pub fn block_sizes(&self, p: usize, d: usize) -> Result<Composition> {
        Ok(Composition(self.blocks(p, d)?.iter().map(|b| b.size()).collect()))
    }

    /// Cyclic block shift `λ⟨k⟩ = (λ^{[k+1]}, …, λ^{[k+p]})`.
    pub fn shift(&self, k: i64, p: usize, d: usize) -> Result<Multipartition> {
        self.check_context(p, d)?;
        let k = k.rem_euclid(p as i64) as usize;
        let mut comps = Vec::with_capacity(self.r());
        for t in 0..p {
            let src = (t + k) % p;
            comps.extend_from_slice(&self.comps[d * src..d * (src + 1)]);
        }
        Ok(Multipartition { comps })
    }

    /// Orbit data `(o_λ, p_λ)`: the minimal positive shift fixing `λ` and
    /// `p / o_λ`.
    pub fn orbit_order(&self, p: usize, d: usize) -> Result<(usize, usize)> {
        self.check_context(p, d)?;
        for o in 1..=p {
            if p % o == 0 && self.shift(o as i64, p, d)? == *self {
                return Ok((o, p / o));
            }
        }
        Err(Error::Internal("shift by p does not fix the multipartition".into()))
    }

    /// `√λ = (λ^{[1]}, …, λ^{[o_λ]})` as an `(o_λ d)`-multipartition.
    pub fn root(&self, p: usize, d: usize) -> Result<Multipartition> {
        let (o, _) = self.orbit_order(p, d)?;
        Ok(Multipartition {
            comps: self.comps[..o * d].to_vec(),
        })
    }

    /// All `r`-multipartitions of `n`, sorted by the total order.
    pub fn all(r: usize, n: usize) -> Vec<Multipartition> {
        let mut out = Vec::new();
        for sizes in compositions(n, r) {
            let lists: Vec<Vec<Partition>> = sizes.iter().map(|&m| Partition::all(m)).collect();
            product_into(&lists, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    /// `P_{d,b}`: multipartitions with `|λ^{[t]}| = b_t`, sorted.
    pub fn enumerate_pdb(d: usize, b: &Composition) -> Vec<Multipartition> {
        let mut blocks: Vec<Vec<Multipartition>> = Vec::new();
        for &bt in b.parts() {
            blocks.push(Multipartition::all(d, bt));
        }
        let mut out = Vec::new();
        fn rec(blocks: &[Vec<Multipartition>], cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            match blocks.split_first() {
                None => out.push(Multipartition { comps: cur.clone() }),
                Some((first, rest)) => {
                    for m in first {
                        let len = cur.len();
                        cur.extend_from_slice(&m.comps);
                        rec(rest, cur, out);
                        cur.truncate(len);
                    }
                }
            }
        }
        rec(&blocks, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

fn product_into(lists: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
    match lists.split_first() {
        None => out.push(Multipartition { comps: cur.clone() }),
        Some((first, rest)) => {
            for p in first {
                cur.push(p.clone());
                product_into(rest, cur, out);
                cur.pop();
            }
        }
    }
}

/// All weak compositions of `n` into `k` parts, in lexicographic order.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(rem: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if k == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rem {
            cur.push(x);
            rec(rem - x, k - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// A composition `b = (b_1, …, b_p)` of `n` into `p` nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    /// Wrap parts.
    pub fn new(parts: Vec<usize>) -> Composition {
        Composition(parts)
    }

    /// All compositions of `n` into `p` parts.
    pub fn all(p: usize, n: usize) -> Vec<Composition> {
        compositions(n, p).into_iter().map(Composition).collect()
    }

    /// Parts.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `p`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True if there are no parts.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `b_i` (1-based).
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Total `n`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sum `b_i^j = b_i + … + b_j` (zero when `i > j`), 1-based.
    pub fn partial(&self, i: usize, j: usize) -> usize {
        if i > j || j == 0 {
            return 0;
        }
        let i = i.max(1);
        let j = j.min(self.len());
        if i > j {
            return 0;
        }
        self.0[i - 1..j].iter().sum()
    }

    /// Cyclic shift `b⟨k⟩ = (b_{k+1}, …, b_{k+p})`.
    pub fn shift(&self, k: i64) -> Composition {
        let p = self.len();
        let k = k.rem_euclid(p as i64) as usize;
        Composition((0..p).map(|t| self.0[(t + k) % p]).collect())
    }

    /// `(o_b, p_b)`: minimal positive period and `p / o_b`.
    pub fn orbit_order(&self) -> (usize, usize) {
        let p = self.len();
        for o in 1..=p {
            if p % o == 0 && self.shift(o as i64) == *self {
                return (o, p / o);
            }
        }
        (p, 1)
    }

    /// `α(b) = Σ i b_i`.
    pub fn alpha(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x as u64).sum()
    }

    /// `ℓ(w_b) = Σ_{i<j} b_i b_j`.
    pub fn ell_wb(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                s += (self.0[i] * self.0[j]) as u64;
            }
        }
        s
    }

    /// The reversed composition `(b_p, …, b_1)`.
    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }
}

/// `(α(b), ℓ(w_b))`.
pub fn comp_stats(b: &Composition) -> (u64, u64) {
    (b.alpha(), b.ell_wb())
}

/// A permutation of `{1, …, n}` acting on the right: `(i)(xy) = ((i)x)y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    /// Identity on `n` points.
    pub fn identity(n: usize) -> Perm {
        Perm {
            img: (1..=n).collect(),
        }
    }

    /// From the images `(1)w, …, (n)w`.
    pub fn from_images(img: Vec<usize>) -> Result<Perm> {
        let n = img.len();
        let set: BTreeSet<usize> = img.iter().copied().collect();
        if set.len() != n || img.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::Invalid(format!("{:?} is not a permutation", img)));
        }
        Ok(Perm { img })
    }

    /// The simple transposition `s_i = (i, i+1)` on `n` points.
    pub fn simple(n: usize, i: usize) -> Perm {
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Degree.
    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image `(i)w` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    /// Images.
    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// Product `self · other` (first `self`, then `other`).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            img: self.img.iter().map(|&x| other.img[x - 1]).collect(),
        }
    }

    /// Product of simple transpositions `s_{i_1} ⋯ s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.then(&Self::simple(n, i));
        }
        p
    }

    /// Inverse.
    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x - 1] = i + 1;
        }
        Perm { img }
    }

    /// Number of inversions `#{i < j : (i)w > (j)w}` = Coxeter length.
    pub fn inversions(&self) -> usize {
        let mut c = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word `w = s_{i_1} ⋯ s_{i_k}` (leftmost descents first).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..w.n() {
                if w.img[i - 1] > w.img[i] {
                    // w = s_i · (s_i w), and s_i w swaps the images of i, i+1
                    w.img.swap(i - 1, i);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }
}

/// `w^{⟨k⟩}_{a,b}` as a permutation of `{1..n}`.
pub fn wab_perm(n: usize, a: usize, b: usize, k: usize) -> Result<Perm> {
    if a + b + k > n {
        return Err(Error::IndexOutOfRange(format!(
            "w_{{{},{}}} shifted by {} does not fit in S_{}",
            a, b, k, n
        )));
    }
    let mut word = Vec::new();
    for _ in 0..b {
        if a == 0 {
            break;
        }
        for i in ((k + 1)..=(a + b + k - 1)).rev() {
            word.push(i);
        }
    }
    Ok(Perm::from_word(n, &word))
}

/// The permutation `w_b` built from its defining product of `w_{a,b}^{⟨k⟩}`.
pub fn wb_perm(b: &Composition) -> Perm {
    let n = b.total();
    let p = b.len();
    let mut w = Perm::identity(n);
    // w_b = w^{<b_1^{p-2}>}_{b_{p-1}, b_p^p} ⋯ w^{<b_1^1>}_{b_2, b_3^p} w_{b_1, b_2^p}
    for i in (1..p).rev() {
        let f = wab_perm(n, b.part(i), b.partial(i + 1, p), b.partial(1, i - 1)).expect("fits");
        w = w.then(&f);
    }
    w
}

/// The two-line form of `w_b`: position `b_1^{i−1} + u` maps to
/// `b_{i+1}^p + u`.
pub fn wb_two_line(b: &Composition) -> Perm {
    let p = b.len();
    let mut img = Vec::with_capacity(b.total());
    for i in 1..=p {
        for u in 1..=b.part(i) {
            img.push(b.partial(i + 1, p) + u);
        }
    }
    Perm { img }
}

/// Representatives of the classes of `items` under block shifts.  With
/// `step = 1` this is `∼_σ`; with `step = o_b` it is `∼_b`.  Each
/// representative is the minimum of its full orbit in the total order, and
/// the output is sorted and free of duplicates.
pub fn class_reps(items: &[Multipartition], p: usize, d: usize, step: usize) -> Result<Vec<Multipartition>> {
    let step = step.max(1);
    let mut reps = BTreeSet::new();
    for lam in items {
        let mut best = lam.clone();
        let mut k = step;
        while k < p {
            let s = lam.shift(k as i64, p, d)?;
            if s < best {
                best = s;
            }
            k += step;
        }
        reps.insert(best);
    }
    Ok(reps.into_iter().collect())
}

/// Number of `d`-multipartitions of `m`, via the generating function
/// `Π_k (1 − x^k)^{−d}`.
pub fn count_multipartitions(d: usize, m: usize) -> u64 {
    // coefficients of the single-partition generating function
    let mut part = vec![0u64; m + 1];
    part[0] = 1;
    for k in 1..=m {
        for x in k..=m {
            part[x] += part[x - k];
        }
    }
    // d-th convolution power
    let mut acc = vec![0u64; m + 1];
    acc[0] = 1;
    for _ in 0..d {
        let mut next = vec![0u64; m + 1];
        for i in 0..=m {
            for j in 0..=(m - i) {
                next[i + j] += acc[i] * part[j];
            }
        }
        acc = next;
    }
    acc[m]
}
