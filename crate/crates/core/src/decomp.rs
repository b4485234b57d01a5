//! Decomposition tables, the Vandermonde formula for splittable
//! decomposition numbers, the linear-relation oracle and the assembly of
//! labelled decomposition matrices of `H_{r,p,n}`.
//!
//! Decomposition tables of the small algebras `H_{d,m}(ε^t Q)` and the
//! Kleshchev labels are input data; the only built-in tables are the
//! semisimple ones (identity matrices over all labels) and seeded random
//! unitriangular tables used for testing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combin::{class_reps, Composition, Multipartition};
use crate::exactnum::{CycField, CycRat, GenericField, Mat, SpecPoint};
use crate::error::{Error, Result};
use crate::scalars::g_lambda;
use crate::tableau::count_std;

/// A labelled decomposition matrix of an Ariki–Koike algebra `H_{s,m}` with
/// parameters `ε^t Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompTable {
    s: usize,
    m: usize,
    eps_power: i64,
    rows: Vec<Multipartition>,
    cols: Vec<Multipartition>,
    entries: BTreeMap<(usize, usize), u64>,
    semisimple: bool,
    row_index: BTreeMap<Multipartition, usize>,
    col_index: BTreeMap<Multipartition, usize>,
}

fn index_of(labels: &[Multipartition], what: &str) -> Result<BTreeMap<Multipartition, usize>> {
    let mut idx = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if idx.insert(l.clone(), i).is_some() {
            return Err(Error::InputData(format!("duplicate {} label {:?}", what, l)));
        }
    }
    Ok(idx)
}

impl DecompTable {
    /// Build and validate a table.  Every label must be an `s`-multipartition
    /// of `m`, every column label must also label a row, and entries are
    /// `(row index, column index, value)` triples.
    pub fn new(
        s: usize,
        m: usize,
        eps_power: i64,
        rows: Vec<Multipartition>,
        cols: Vec<Multipartition>,
        entries: &[(usize, usize, u64)],
        semisimple: bool,
    ) -> Result<DecompTable> {
        for l in rows.iter().chain(&cols) {
            if l.r() != s || l.size() != m {
                return Err(Error::InputData(format!(
                    "label {:?} is not a {}-multipartition of {}",
                    l, s, m
                )));
            }
        }
        let row_index = index_of(&rows, "row")?;
        let col_index = index_of(&cols, "column")?;
        if let Some(c) = cols.iter().find(|c| !row_index.contains_key(*c)) {
            return Err(Error::InputData(format!("column label {:?} is not a row label", c)));
        }
        let mut map = BTreeMap::new();
        for &(ri, ci, v) in entries {
            if ri >= rows.len() || ci >= cols.len() {
                return Err(Error::InputData(format!("entry ({}, {}) is outside the table", ri, ci)));
            }
            if map.insert((ri, ci), v).is_some() {
                return Err(Error::InputData(format!("entry ({}, {}) given twice", ri, ci)));
            }
        }
        map.retain(|_, v| *v != 0);
        let t = DecompTable {
            s,
            m,
            eps_power,
            rows,
            cols,
            entries: map,
            semisimple,
            row_index,
            col_index,
        };
        if semisimple && !t.is_identity() {
            return Err(Error::InputData("table flagged semisimple is not an identity matrix".into()));
        }
        Ok(t)
    }

    /// The semisimple table: the identity over all `s`-multipartitions of `m`.
    pub fn semisimple(s: usize, m: usize, eps_power: i64) -> DecompTable {
        let labels = Multipartition::all(s, m);
        let entries: Vec<(usize, usize, u64)> = (0..labels.len()).map(|i| (i, i, 1)).collect();
        Self::new(s, m, eps_power, labels.clone(), labels, &entries, true).expect("identity table is valid")
    }

    /// A seeded random unitriangular table over all `s`-multipartitions of
    /// `m`: ones on the diagonal, and entries in `0..=max_entry` at
    /// positions `(λ, μ)` with `λ` strictly dominating `μ`.
    pub fn random_unitriangular(s: usize, m: usize, eps_power: i64, seed: u64, max_entry: u64) -> DecompTable {
        let labels = Multipartition::all(s, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut entries = Vec::new();
        for (i, lam) in labels.iter().enumerate() {
            for (j, mu) in labels.iter().enumerate() {
                if i == j {
                    entries.push((i, j, 1));
                } else if lam.dominates(mu).unwrap_or(false) {
                    let v = rng.gen_range(0..=max_entry);
                    if v != 0 {
                        entries.push((i, j, v));
                    }
                }
            }
        }
        Self::new(s, m, eps_power, labels.clone(), labels, &entries, false).expect("random table is valid")
    }

    /// Number of components `s`.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Size `m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The twist `t` of the parameters `ε^t Q`.
    pub fn eps_power(&self) -> i64 {
        self.eps_power
    }

    /// Row labels.
    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    /// Column (Kleshchev) labels.
    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    /// Nonzero entries as `(row index, column index, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, u64)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }

    /// The semisimple flag.
    pub fn is_semisimple(&self) -> bool {
        self.semisimple
    }

    fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.len() == self.rows.len()
            && self.entries.iter().all(|(&(i, j), &v)| i == j && v == 1)
    }

    /// The decomposition number `[S(λ) : D(μ)]`.
    pub fn entry(&self, lam: &Multipartition, mu: &Multipartition) -> Result<u64> {
        let i = self
            .row_index
            .get(lam)
            .ok_or_else(|| Error::UnknownLabel(format!("row {:?} in the table of H_({},{})", lam, self.s, self.m)))?;
        let j = self
            .col_index
            .get(mu)
            .ok_or_else(|| Error::UnknownLabel(format!("column {:?} in the table of H_({},{})", mu, self.s, self.m)))?;
        Ok(self.entries.get(&(*i, *j)).copied().unwrap_or(0))
    }

    /// Violations of unitriangularity: nonzero entries whose row does not
    /// dominate the column, and diagonal entries different from one.
    pub fn unitriangularity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (j, mu) in self.cols.iter().enumerate() {
            let i = self.row_index[mu];
            let v = self.entries.get(&(i, j)).copied().unwrap_or(0);
            if v != 1 {
                out.push(format!("[S({:?}) : D({:?})] = {} on the diagonal", mu, mu, v));
            }
        }
        for (&(i, j), &v) in &self.entries {
            let (lam, mu) = (&self.rows[i], &self.cols[j]);
            if lam != mu && !lam.dominates(mu).unwrap_or(false) {
                out.push(format!("[S({:?}) : D({:?})] = {} but the row does not dominate", lam, mu, v));
            }
        }
        out
    }
}

/// The decomposition tables of the algebras `H_{d,m}(ε^t Q)` needed for
/// `H_{r,p,n}`, looked up by `(m, t mod p)`.
#[derive(Clone, Debug)]
pub struct TableSet {
    p: usize,
    d: usize,
    tables: Vec<DecompTable>,
}

impl TableSet {
    /// Collect tables for the context `(p, d)`; each table must have `s = d`
    /// and no two may share `(m, t mod p)`.
    pub fn new(p: usize, d: usize, tables: Vec<DecompTable>) -> Result<TableSet> {
        if p == 0 || d == 0 {
            return Err(Error::Invalid(format!("need p, d ≥ 1 (got p = {}, d = {})", p, d)));
        }
        let mut seen = BTreeSet::new();
        for t in &tables {
            if t.s != d {
                return Err(Error::InputData(format!("table of H_({},{}) in a context with d = {}", t.s, t.m, d)));
            }
            if !seen.insert((t.m, t.eps_power.rem_euclid(p as i64))) {
                return Err(Error::InputData(format!(
                    "two tables for m = {} and parameters ε^{}Q",
                    t.m, t.eps_power
                )));
            }
        }
        Ok(TableSet { p, d, tables })
    }

    /// Semisimple tables for every `m ≤ n` and every twist `1 ≤ t ≤ p`.
    pub fn semisimple(p: usize, d: usize, n: usize) -> Result<TableSet> {
        let mut tables = Vec::new();
        for m in 0..=n {
            for t in 1..=p {
                tables.push(DecompTable::semisimple(d, m, t as i64));
            }
        }
        Self::new(p, d, tables)
    }

    /// Seeded random unitriangular tables for every `m ≤ n` and `1 ≤ t ≤ p`.
    pub fn random_unitriangular(p: usize, d: usize, n: usize, seed: u64, max_entry: u64) -> Result<TableSet> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tables = Vec::new();
        for m in 0..=n {
            for t in 1..=p {
                tables.push(DecompTable::random_unitriangular(d, m, t as i64, rng.gen(), max_entry));
            }
        }
        Self::new(p, d, tables)
    }

    /// `p`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// `d`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// All tables.
    pub fn tables(&self) -> &[DecompTable] {
        &self.tables
    }

    /// The table of `H_{d,m}(ε^t Q)`.
    pub fn get(&self, m: usize, t: i64) -> Result<&DecompTable> {
        let tm = t.rem_euclid(self.p as i64);
        self.tables
            .iter()
            .find(|x| x.m == m && x.eps_power.rem_euclid(self.p as i64) == tm)
            .ok_or_else(|| Error::UnknownLabel(format!("no decomposition table for H_({},{}) at ε^{}Q", self.d, m, t)))
    }

    /// `[Δ(λ^{[t]}) : L(μ^{[t]})]` read from the table for block `t`.
    pub fn block_number(&self, t: usize, lam: &Multipartition, mu: &Multipartition) -> Result<u64> {
        if lam.size() != mu.size() {
            return Err(Error::ShapeMismatch(format!(
                "blocks {:?} and {:?} have different sizes",
                lam, mu
            )));
        }
        self.get(lam.size(), t as i64)?.entry(lam, mu)
    }
}

fn check_same_b(lam: &Multipartition, mu: &Multipartition, p: usize, d: usize) -> Result<Composition> {
    let b = lam.block_sizes(p, d)?;
    if mu.block_sizes(p, d)? != b {
        return Err(Error::ShapeMismatch(format!(
            "{:?} and {:?} lie in different sets P_{{d,b}}",
            lam, mu
        )));
    }
    Ok(b)
}

/// `d_{λ_m μ_m} = Π_{i=1}^m [Δ(λ^{[i]}) : L(μ^{[i]})]`.
pub fn d_product(lam: &Multipartition, mu: &Multipartition, m: usize, tables: &TableSet) -> Result<u64> {
    let (p, d) = (tables.p, tables.d);
    check_same_b(lam, mu, p, d)?;
    if m > p {
        return Err(Error::IndexOutOfRange(format!("m = {} exceeds p = {}", m, p)));
    }
    let mut acc: u64 = 1;
    for i in 1..=m {
        let v = tables.block_number(i, &lam.block(i, d), &mu.block(i, d))?;
        acc = acc
            .checked_mul(v)
            .ok_or_else(|| Error::InputData("decomposition number product overflows".into()))?;
    }
    Ok(acc)
}

fn check_divides(l: usize, p: usize) -> Result<()> {
    if l == 0 || p % l != 0 {
        return Err(Error::Invalid(format!("l = {} does not divide p = {}", l, p)));
    }
    Ok(())
}

/// `ε^k` for `ε = ζ_N^{N/p}` in `Q(ζ_N)`.
fn eps_in(field: &Arc<CycField>, p: usize, k: i64) -> Result<CycRat> {
    let n = field.order();
    if n % p as u64 != 0 {
        return Err(Error::Invalid(format!("Q(ζ_{}) does not contain a primitive {}-th root of unity", n, p)));
    }
    Ok(CycRat::zeta_pow(field, (n / p as u64) as i64 * k))
}

/// The `l × l` Vandermonde matrix `V(l)` with `(a, b)` entry `ε^{(a−1) b m}`,
/// `m = p/l`, over `Q(ε_p)`.
pub fn vandermonde(l: usize, p: usize) -> Result<Mat<CycRat>> {
    let field = CycField::new(p.max(2) as u64)?;
    vandermonde_in(&field, l, p)
}

/// [`vandermonde`] over a cyclotomic field containing `ε_p`.
pub fn vandermonde_in(field: &Arc<CycField>, l: usize, p: usize) -> Result<Mat<CycRat>> {
    check_divides(l, p)?;
    let m = (p / l) as i64;
    let mut rows = Vec::with_capacity(l);
    for a in 1..=l as i64 {
        let mut row = Vec::with_capacity(l);
        for b in 1..=l as i64 {
            row.push(eps_in(field, p, (a - 1) * b * m)?);
        }
        rows.push(row);
    }
    Mat::from_rows(rows)
}

/// The right-hand side `(c (g_λ/g_μ)^t d^{l_t})_{t=0..l−1}`, `l_t = gcd(l, t)`,
/// `l_0 = l`.
fn relation_rhs(l: usize, ratio: &CycRat, dprod: u64, scale: u64) -> Result<Vec<CycRat>> {
    let field = ratio.field();
    let mut out = Vec::with_capacity(l);
    for t in 0..l {
        let lt = if t == 0 { l } else { t.gcd(&l) };
        let dpow = BigInt::from(dprod).pow(lt as u32) * BigInt::from(scale);
        let c = CycRat::from_rational(field, BigRational::from_integer(dpow));
        out.push(ratio.pow(t as i64)?.mul(&c));
    }
    Ok(out)
}

/// How a [`SplitResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Cramer's rule on the Vandermonde system.
    Formula,
    /// Gaussian elimination on the relation system.
    Oracle,
}

/// The numbers `d^{(j)}_{λμ} = [Δ^λ_{0,p} : L^μ_{j,p}]`, `1 ≤ j ≤ l`, of a
/// splittable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    /// `λ`.
    pub lam: Multipartition,
    /// `μ`.
    pub mu: Multipartition,
    /// `l = p_λ = p_μ`.
    pub l: usize,
    /// `d^{(1)}, …, d^{(l)}`.
    pub values: Vec<BigRational>,
    /// The values reduced modulo a characteristic, if one was requested.
    pub residues: Option<(u64, Vec<u64>)>,
    /// How the values were obtained.
    pub provenance: Provenance,
}

fn check_ratio(ratio: &CycRat, p: usize) -> Result<()> {
    if ratio.field().order() % p as u64 != 0 {
        return Err(Error::Invalid(format!(
            "ratio lives in Q(ζ_{}), which does not contain ε_{}",
            ratio.field().order(),
            p
        )));
    }
    if ratio.is_zero() || ratio.as_rational_times_root().is_none() {
        return Err(Error::NonConstantRatio(format!(
            "{} is not a nonzero root of unity times a rational",
            ratio
        )));
    }
    Ok(())
}

fn splittable_setup(lam: &Multipartition, mu: &Multipartition, tables: &TableSet) -> Result<(usize, usize)> {
    let (p, d) = (tables.p, tables.d);
    check_same_b(lam, mu, p, d)?;
    let (m, l) = lam.orbit_order(p, d)?;
    let (_, l_mu) = mu.orbit_order(p, d)?;
    if l != l_mu {
        return Err(Error::NotSplittable(format!("p_λ = {} but p_μ = {}", l, l_mu)));
    }
    Ok((m, l))
}

fn to_count(v: &CycRat, what: &str) -> Result<BigRational> {
    v.to_rational()
        .ok_or_else(|| Error::InputData(format!("{} = {} is not rational", what, v)))
}

fn reduce_mod(v: &BigRational, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Invalid("characteristic must be positive".into()));
    }
    if !v.is_integer() {
        return Err(Error::InputData(format!("{} is not an integer", v)));
    }
    let r = v.to_integer().mod_floor(&BigInt::from(k));
    Ok(r.to_u64().expect("residue fits"))
}

fn check_count(v: &BigRational, what: &str) -> Result<()> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InputData(format!(
            "{} = {} is not a nonnegative integer; the input tables or ratio are inconsistent",
            what, v
        )));
    }
    Ok(())
}

/// `det V_k(l) / det V(l)`: column `k` of `V(l)` replaced by the relation
/// right-hand side.
fn cramer_column(l: usize, p: usize, k: usize, rhs: &[CycRat]) -> Result<CycRat> {
    let field = rhs[0].field().clone();
    let v = vandermonde_in(&field, l, p)?;
    let det = v.det()?;
    let mut vk = v;
    for (t, x) in rhs.iter().enumerate() {
        vk.set(t, k - 1, x.clone());
    }
    vk.det()?.div(&det)
}

/// The index `k ∈ {1, …, l}` with `k ≡ j − i (mod l)`.
pub fn cyclic_offset(i: usize, j: usize, l: usize) -> Result<usize> {
    if l == 0 || i == 0 || j == 0 || i > l || j > l {
        return Err(Error::IndexOutOfRange(format!("(i, j) = ({}, {}) with l = {}", i, j, l)));
    }
    let k = (j as i64 - i as i64).rem_euclid(l as i64) as usize;
    Ok(if k == 0 { l } else { k })
}

/// All `d^{(j)}_{λμ}` of a splittable pair by Cramer's rule, with
/// `ratio = g_λ/g_μ`.
pub fn split_result(
    lam: &Multipartition,
    mu: &Multipartition,
    tables: &TableSet,
    ratio: &CycRat,
    char_k: Option<u64>,
) -> Result<SplitResult> {
    let p = tables.p;
    check_ratio(ratio, p)?;
    let (m, l) = splittable_setup(lam, mu, tables)?;
    let dprod = d_product(lam, mu, m, tables)?;
    let rhs = relation_rhs(l, ratio, dprod, 1)?;
    let mut values = Vec::with_capacity(l);
    for j in 1..=l {
        let v = to_count(&cramer_column(l, p, j, &rhs)?, &format!("d^({})", j))?;
        check_count(&v, &format!("d^({})_{{{:?},{:?}}}", j, lam, mu))?;
        values.push(v);
    }
    let residues = match char_k {
        None => None,
        Some(k) => Some((k, values.iter().map(|v| reduce_mod(v, k)).collect::<Result<_>>()?)),
    };
    Ok(SplitResult {
        lam: lam.clone(),
        mu: mu.clone(),
        l,
        values,
        residues,
        provenance: Provenance::Formula,
    })
}

/// `[S^λ_i : D^μ_j] = d^{(k)}` with `k ≡ j − i (mod l)`.
pub fn cyclic_reindex(result: &SplitResult, i: usize, j: usize) -> Result<BigRational> {
    Ok(result.values[cyclic_offset(i, j, result.l)? - 1].clone())
}

/// A splittable decomposition number, with its residue if requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitValue {
    /// The value in characteristic zero.
    pub value: BigRational,
    /// The value modulo the requested characteristic.
    pub residue: Option<u64>,
}

/// The splittable decomposition number `[S^λ_i : D^μ_j] = det V_{j−i}(l) / det V(l)`.
pub fn splittable_number(
    lam: &Multipartition,
    mu: &Multipartition,
    i: usize,
    j: usize,
    tables: &TableSet,
    ratio: &CycRat,
    char_k: Option<u64>,
) -> Result<SplitValue> {
    let p = tables.p;
    check_ratio(ratio, p)?;
    let (m, l) = splittable_setup(lam, mu, tables)?;
    let k = cyclic_offset(i, j, l)?;
    let dprod = d_product(lam, mu, m, tables)?;
    let rhs = relation_rhs(l, ratio, dprod, 1)?;
    let value = to_count(&cramer_column(l, p, k, &rhs)?, "decomposition number")?;
    check_count(&value, &format!("[S^{:?}_{} : D^{:?}_{}]", lam, i, mu, j))?;
    let residue = match char_k {
        None => None,
        Some(c) => Some(reduce_mod(&value, c)?),
    };
    Ok(SplitValue { value, residue })
}

/// What the relation system determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    /// `p_μ = p_λ`: the unique solution `d^{(1)}, …, d^{(l)}`.
    Unique(Vec<BigRational>),
    /// `p_μ > p_λ = l`: only the sums `Σ_{j ≡ c (mod l)} d^{(j)}` for
    /// `c = 1, …, l` are determined.
    ResidueSums {
        /// `l = p_λ`.
        l: usize,
        /// `p_μ`.
        l_mu: usize,
        /// The sums, indexed by `c − 1`.
        sums: Vec<BigRational>,
    },
}

/// Solve the relations
/// `p_{μ/λ} (g_λ/g_μ^{p_{μ/λ}})^t d^{l_t}_{λ_m μ_m} = Σ_{j=1}^{p_μ} ε^{t j m} d^{(j)}_{λμ}`,
/// `0 ≤ t < l = p_λ`, by Gaussian elimination; `ratio = g_λ/g_μ^{p_{μ/λ}}`.
pub fn relations_oracle(lam: &Multipartition, mu: &Multipartition, tables: &TableSet, ratio: &CycRat) -> Result<Relations> {
    let (p, d) = (tables.p, tables.d);
    check_ratio(ratio, p)?;
    check_same_b(lam, mu, p, d)?;
    let (m, l) = lam.orbit_order(p, d)?;
    let (_, l_mu) = mu.orbit_order(p, d)?;
    if l_mu % l != 0 {
        return Err(Error::NotSplittable(format!(
            "μ = {:?} is not {}-symmetric (p_μ = {})",
            mu, l, l_mu
        )));
    }
    let dprod = d_product(lam, mu, m, tables)?;
    let rhs = relation_rhs(l, ratio, dprod, (l_mu / l) as u64)?;
    let field = ratio.field().clone();
    let zero = CycRat::zero(&field);
    let solve = |cols: usize| -> Result<Vec<BigRational>> {
        let mut a = Mat::zeros(l, cols, &zero);
        for t in 0..l {
            for j in 1..=cols {
                a.set(t, j - 1, eps_in(&field, p, (t * j * m) as i64)?);
            }
        }
        match a.solve_general(&rhs)? {
            None => Err(Error::InputData(format!("relations for {:?}, {:?} are inconsistent", lam, mu))),
            Some((x, _)) => x.iter().enumerate().map(|(j, v)| to_count(v, &format!("d^({})", j + 1))).collect(),
        }
    };
    if l_mu == l {
        return Ok(Relations::Unique(solve(l)?));
    }
    // Columns j and j + l coincide; solve for one representative per class.
    Ok(Relations::ResidueSums { l, l_mu, sums: solve(l)? })
}

/// `g_λ / g_μ^{p_{μ/λ}}` as a constant: at the given point, or over the
/// generic field when it happens to be constant there.
pub fn g_ratio(lam: &Multipartition, mu: &Multipartition, b: &Composition, p: usize, d: usize, point: Option<&SpecPoint>) -> Result<CycRat> {
    let (_, l) = lam.orbit_order(p, d)?;
    let (_, l_mu) = mu.orbit_order(p, d)?;
    if l_mu % l != 0 {
        return Err(Error::NotSplittable(format!("p_λ = {} does not divide p_μ = {}", l, l_mu)));
    }
    let e = (l_mu / l) as i64;
    match point {
        Some(pt) => g_lambda(lam, b, pt)?.div(&g_lambda(mu, b, pt)?.pow(e)?),
        None => {
            let f = GenericField::new(p, d)?;
            let r = g_lambda(lam, b, &f)?.div(&g_lambda(mu, b, &f)?.pow(e)?)?;
            r.as_constant().ok_or_else(|| {
                Error::NonConstantRatio(format!(
                    "g_λ/g_μ = {} for λ = {:?}, μ = {:?} depends on the parameters; supply a specialization point",
                    r, lam, mu
                ))
            })
        }
    }
}

/// Dimension data of the simple-module labels of `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimReport {
    /// `dim S(λ) = |Std(λ)|`.
    pub dim: u128,
    /// `p_λ`.
    pub p_lam: usize,
    /// `dim S^λ_t = dim S(λ) / p_λ`.
    pub dim_t: u128,
}

/// `dim S(λ)`, `p_λ` and `dim S^λ_t = dim S(λ)/p_λ`.
pub fn dim_report(lam: &Multipartition, p: usize, d: usize) -> Result<DimReport> {
    let (_, l) = lam.orbit_order(p, d)?;
    let dim = count_std(lam);
    if dim % l as u128 != 0 {
        return Err(Error::Internal(format!("p_λ = {} does not divide dim S({:?}) = {}", l, lam, dim)));
    }
    Ok(DimReport {
        dim,
        p_lam: l,
        dim_t: dim / l as u128,
    })
}

/// An entry of an assembled decomposition matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    /// A determined decomposition number.
    Known(u64),
    /// An undetermined decomposition number, by index into the unknowns.
    Unknown(usize),
}

/// A linear constraint `Σ_k c_k x_k = rhs` on unknown entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    /// `(coefficient, unknown index)` pairs.
    pub terms: Vec<(i64, usize)>,
    /// Right-hand side.
    pub rhs: BigInt,
    /// Which relation produced the constraint.
    pub origin: String,
}

/// A row or column label `(λ, i)`.
pub type Label = (Multipartition, usize);

/// The decomposition matrix of `H_{r,p,n}` assembled from the tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssembledMatrix {
    /// `p`.
    pub p: usize,
    /// `d`.
    pub d: usize,
    /// `n`.
    pub n: usize,
    /// Row labels `(λ, i)`, `1 ≤ i ≤ p_λ`.
    pub rows: Vec<Label>,
    /// Column labels `(μ, j)`, `1 ≤ j ≤ p_μ`.
    pub cols: Vec<Label>,
    /// Dense entries, row-major.
    pub entries: Vec<Vec<Entry>>,
    /// Unknown positions `(row, column)`.
    pub unknowns: Vec<(usize, usize)>,
    /// Constraints on the unknowns.
    pub constraints: Vec<Constraint>,
    /// Characteristic the known entries were reduced modulo, if any.
    pub characteristic: Option<u64>,
    /// Unitriangularity findings (empty when unitriangular).
    pub violations: Vec<String>,
}

impl AssembledMatrix {
    /// True when no unitriangularity violation was found.
    pub fn is_unitriangular(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when every entry is known and the matrix is an identity.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, e)| *e == Entry::Known(if i == j { 1 } else { 0 }))
            })
    }
}

/// Options for [`assemble_matrix`].
#[derive(Clone, Debug, Default)]
pub struct AssembleOptions {
    /// Reduce known entries modulo this characteristic.
    pub characteristic: Option<u64>,
    /// Point at which the ratios `g_λ/g_μ` are evaluated when needed.
    pub point: Option<SpecPoint>,
}

/// Cumulative row sums used as a dominance-compatible sort key.
fn dominance_key(lam: &Multipartition, n: usize) -> Vec<i64> {
    let mut key = Vec::new();
    let mut acc = 0i64;
    for c in lam.comps() {
        for i in 1..=n.max(1) {
            acc += c.part(i) as i64;
            key.push(acc);
        }
    }
    key
}

/// Sort labels along a linear extension of the dominance order (more
/// dominant first), breaking ties by the total order.
fn dominance_sort(labels: &mut [Multipartition], n: usize) {
    labels.sort_by(|a, b| dominance_key(b, n).cmp(&dominance_key(a, n)).then(a.cmp(b)));
}

/// Shift of `μ` whose block sizes equal `b`, if any.
fn align(mu: &Multipartition, b: &Composition, p: usize, d: usize) -> Result<Option<Multipartition>> {
    for k in 0..p {
        let s = mu.shift(k as i64, p, d)?;
        if s.block_sizes(p, d)? == *b {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn big_to_u64(v: &BigRational, what: &str) -> Result<u64> {
    check_count(v, what)?;
    v.to_integer()
        .to_u64()
        .ok_or_else(|| Error::InputData(format!("{} = {} is too large", what, v)))
}

/// Assemble the labelled decomposition matrix of `H_{r,p,n}`, `r = pd`.
///
/// Rows are `(λ, i)` over `∼_σ` class representatives of `P_{r,n}`, columns
/// `(μ, j)` over representatives of the Kleshchev labels, both ordered
/// along the dominance order.  For each pair the column representative is
/// shifted so that its block sizes match the row's; pairs with no such
/// shift vanish.  Diagonal blocks are `δ_{ij}`, entries with `λ ⋭ μ` vanish,
/// splittable entries come from the Vandermonde formula, and the remaining
/// entries are unknowns carrying the sum constraints of the relation
/// system.  Entries whose constraints force zero are filled in as zero.
pub fn assemble_matrix(
    p: usize,
    d: usize,
    n: usize,
    tables: &TableSet,
    klesh: &[Multipartition],
    opts: &AssembleOptions,
) -> Result<AssembledMatrix> {
    if tables.p != p || tables.d != d {
        return Err(Error::ShapeMismatch(format!(
            "tables for (p, d) = ({}, {}) used with ({}, {})",
            tables.p, tables.d, p, d
        )));
    }
    let r = p * d;
    let kset: BTreeSet<Multipartition> = klesh.iter().cloned().collect();
    for mu in klesh {
        if mu.r() != r || mu.size() != n {
            return Err(Error::InputData(format!("Kleshchev label {:?} is not an {}-multipartition of {}", mu, r, n)));
        }
        for k in 1..p {
            let s = mu.shift(k as i64, p, d)?;
            if !kset.contains(&s) {
                return Err(Error::InputData(format!(
                    "Kleshchev labels are not closed under shifts: {:?} is missing",
                    s
                )));
            }
        }
    }
    let mut lam_reps = class_reps(&Multipartition::all(r, n), p, d, 1)?;
    let mut mu_reps = class_reps(klesh, p, d, 1)?;
    dominance_sort(&mut lam_reps, n);
    dominance_sort(&mut mu_reps, n);

    let mut rows = Vec::new();
    for lam in &lam_reps {
        let (_, l) = lam.orbit_order(p, d)?;
        rows.extend((1..=l).map(|i| (lam.clone(), i)));
    }
    let mut cols = Vec::new();
    for mu in &mu_reps {
        let (_, l) = mu.orbit_order(p, d)?;
        cols.extend((1..=l).map(|j| (mu.clone(), j)));
    }
    let mut entries = vec![vec![Entry::Known(0); cols.len()]; rows.len()];
    let mut unknowns = Vec::new();
    let mut constraints = Vec::new();
    let mut violations = Vec::new();

    let row_start: BTreeMap<&Multipartition, usize> = {
        let mut m = BTreeMap::new();
        for (k, (lam, i)) in rows.iter().enumerate() {
            if *i == 1 {
                m.insert(lam, k);
            }
        }
        m
    };
    let mut col_start = BTreeMap::new();
    for (k, (mu, j)) in cols.iter().enumerate() {
        if *j == 1 {
            col_start.insert(mu, k);
        }
    }

    for lam in &lam_reps {
        let b = lam.block_sizes(p, d)?;
        let (o_lam, l) = lam.orbit_order(p, d)?;
        let r0 = row_start[lam];
        for mu in &mu_reps {
            let c0 = col_start[mu];
            let (o_mu, l_mu) = mu.orbit_order(p, d)?;
            let Some(mu_al) = align(mu, &b, p, d)? else {
                continue;
            };
            if lam == mu {
                for i in 0..l {
                    entries[r0 + i][c0 + i] = Entry::Known(1);
                }
                continue;
            }
            if !lam.dominates(&mu_al)? {
                continue;
            }
            if l == l_mu {
                let full = d_product(lam, &mu_al, o_lam, tables)?;
                let ratio = if full == 0 || l == 1 {
                    CycRat::one(&CycField::new(p.max(2) as u64)?)
                } else {
                    g_ratio(lam, &mu_al, &b, p, d, opts.point.as_ref())?
                };
                let res = split_result(lam, &mu_al, tables, &ratio, None)?;
                for i in 1..=l {
                    for j in 1..=l {
                        let v = big_to_u64(&cyclic_reindex(&res, i, j)?, "decomposition number")?;
                        entries[r0 + i - 1][c0 + j - 1] = Entry::Known(v);
                    }
                }
                continue;
            }
            // Total-sum constraint, valid for every row i: the restriction
            // argument gives Σ_j [S^λ_i : D^μ_j] = (o_λ/o_μ) [Δ_b(λ) : L_b(μ)].
            let full = d_product(lam, &mu_al, p, tables)?;
            let total = BigRational::new(BigInt::from(full) * BigInt::from(o_lam), BigInt::from(o_mu));
            if !total.is_integer() {
                return Err(Error::InputData(format!(
                    "row sum {} for ({:?}, {:?}) is not an integer",
                    total, lam, mu
                )));
            }
            if total.is_zero() {
                continue;
            }
            let mut ids = vec![vec![0usize; l_mu]; l];
            for i in 0..l {
                for j in 0..l_mu {
                    ids[i][j] = unknowns.len();
                    entries[r0 + i][c0 + j] = Entry::Unknown(unknowns.len());
                    unknowns.push((r0 + i, c0 + j));
                }
                constraints.push(Constraint {
                    terms: ids[i].iter().map(|&u| (1, u)).collect(),
                    rhs: total.to_integer(),
                    origin: format!("row sum of ({:?}, {}) against {:?}", lam, i + 1, mu),
                });
            }
            if l_mu % l == 0 {
                let needs_ratio = d_product(lam, &mu_al, o_lam, tables)? != 0 && l > 1;
                let ratio = if needs_ratio {
                    g_ratio(lam, &mu_al, &b, p, d, opts.point.as_ref())?
                } else {
                    CycRat::one(&CycField::new(p.max(2) as u64)?)
                };
                if let Relations::ResidueSums { sums, .. } = relations_oracle(lam, &mu_al, tables, &ratio)? {
                    for (c, s) in sums.iter().enumerate() {
                        check_count(s, "residue-class sum")?;
                        // Relations are stated for Δ^λ_{0,p}, i.e. the row i ≡ 0 (mod l).
                        let terms = (0..l_mu)
                            .filter(|j| (j + 1) % l == (c + 1) % l)
                            .map(|j| (1, ids[l - 1][j]))
                            .collect();
                        constraints.push(Constraint {
                            terms,
                            rhs: s.to_integer(),
                            origin: format!("residue class {} mod {} of ({:?}, {}) against {:?}", c + 1, l, lam, l, mu),
                        });
                    }
                }
            }
        }
    }

    // Unitriangularity.
    for (k, (mu, j)) in cols.iter().enumerate() {
        match row_start.get(mu) {
            None => violations.push(format!("column ({:?}, {}) has no matching row", mu, j)),
            Some(&r0) => {
                if entries[r0 + j - 1][k] != Entry::Known(1) {
                    violations.push(format!("diagonal entry at ({:?}, {}) is not 1", mu, j));
                }
            }
        }
    }
    for (ri, (lam, _)) in rows.iter().enumerate() {
        for (ci, (mu, _)) in cols.iter().enumerate() {
            if entries[ri][ci] == Entry::Known(0) || lam == mu {
                continue;
            }
            let b = lam.block_sizes(p, d)?;
            let ok = match align(mu, &b, p, d)? {
                Some(m) => lam.dominates(&m)? && *lam != m,
                None => false,
            };
            if !ok {
                violations.push(format!("nonzero entry at ({:?}, {:?}) outside the dominance order", lam, mu));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::InputData(format!("assembled matrix is not unitriangular: {}", violations.join("; "))));
    }
    if let Some(k) = opts.characteristic {
        if k == 0 {
            return Err(Error::Invalid("characteristic must be positive".into()));
        }
        for row in entries.iter_mut() {
            for e in row.iter_mut() {
                if let Entry::Known(v) = e {
                    *v %= k;
                }
            }
        }
    }
    Ok(AssembledMatrix {
        p,
        d,
        n,
        rows,
        cols,
        entries,
        unknowns,
        constraints,
        characteristic: opts.characteristic,
        violations,
    })
}
