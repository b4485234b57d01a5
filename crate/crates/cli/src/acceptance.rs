//! The acceptance grid: nine exact checks, each run over a fixed parameter
//! grid.  The `Desk` scale is the full grid; `Quick` is a subset that
//! finishes in well under a minute.

use std::time::Instant;

use grpn_core::combin::{Composition, Multipartition};
use grpn_core::decomp::{
    assemble_matrix, cyclic_reindex, d_product, dim_report, relations_oracle, split_result, splittable_number,
    AssembleOptions, Relations, TableSet,
};
use grpn_core::elements::{flam_eigen_oracle, trace_vbtb, verify_changing_all, verify_comparison, verify_pleftmult};
use grpn_core::exactnum::{generic_field, specialize, CycField, CycRat, SpecPoint};
use grpn_core::scalars::{f_lambda_closed, f_lambda_via_schur, verify_factorization};
use grpn_core::seminormal::{check_relations, Mode, SeminormalRep};
use grpn_core::tableau::count_std;
use grpn_core::Result;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

/// Grid size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// The full acceptance grid.
    Desk,
    /// A fast subset.
    Quick,
}

impl Scale {
    /// Parse a suite name.
    pub fn from_name(name: &str) -> Option<Scale> {
        match name {
            "desk" => Some(Scale::Desk),
            "quick" => Some(Scale::Quick),
            _ => None,
        }
    }
}

/// Outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    /// Criterion number, 1 to 9.
    pub id: u8,
    /// Short name.
    pub name: &'static str,
    /// Whether every check passed.
    pub passed: bool,
    /// Number of individual checks performed.
    pub checks: usize,
    /// Failure descriptions (empty on success).
    pub failures: Vec<String>,
    /// Wall-clock seconds (kept out of the JSON report so that it stays
    /// deterministic).
    #[serde(skip)]
    pub seconds: f64,
}

impl CriterionResult {
    /// One human-readable line.
    pub fn line(&self) -> String {
        let mut s = format!(
            "criterion {} [{}]: {} ({} checks, {:.1}s)",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.seconds
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" first failure: {}", f));
        }
        s
    }
}

/// Seed for every sampled point of the grid.
pub const SEED: u64 = 20_240_611;

/// Names of the criteria, indexed by `id − 1`.
pub const NAMES: [&str; 9] = [
    "presentation suite",
    "dimension identity",
    "element identities",
    "trace comparison",
    "scalar identities",
    "root factorization",
    "splittable formula vs oracle",
    "assembly",
    "divisibility",
];

/// Accumulates checks and failures of one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn result(&mut self, what: impl FnOnce() -> String, r: Result<bool>) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: error {}", what(), e));
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

fn factorizations(r: usize) -> Vec<(usize, usize)> {
    (2..=r).filter(|p| r % p == 0).map(|p| (p, r / p)).collect()
}

fn presentation_grid(scale: Scale) -> Vec<(usize, usize)> {
    match scale {
        Scale::Desk => vec![(2, 2), (2, 3), (3, 3), (4, 3), (2, 4)],
        Scale::Quick => vec![(2, 2), (2, 3), (3, 2)],
    }
}

fn criterion_1(scale: Scale) -> Tally {
    let jobs: Vec<(usize, usize, usize, Multipartition)> = presentation_grid(scale)
        .into_iter()
        .flat_map(|(r, n)| {
            factorizations(r)
                .into_iter()
                .flat_map(move |(p, d)| Multipartition::all(r, n).into_iter().map(move |l| (p, d, n, l)))
        })
        .collect();
    jobs.par_iter()
        .map(|(p, d, n, lam)| {
            let mut t = Tally::default();
            let what = |how: &str| format!("(p, d) = ({}, {}), λ = {:?} {}", p, d, lam, how);
            match Mode::default_for(p * d, *n, SEED) {
                Mode::Symbolic => {
                    let rep = generic_field(*p, *d).and_then(|f| SeminormalRep::build(lam, &f).map(|r| check_relations(&r)));
                    t.result(|| what("symbolically"), rep.map(|r| r.passed()));
                }
                Mode::Specialize { trials, seed } => match SpecPoint::sample_many(*p, *d, *n, seed, trials) {
                    Err(e) => t.result(|| what("sampling"), Err(e)),
                    Ok(points) => {
                        for pt in &points {
                            let rep = SeminormalRep::build(lam, pt).map(|r| check_relations(&r));
                            t.result(|| what("at a sampled point"), rep.map(|r| r.passed()));
                        }
                    }
                },
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn criterion_2(scale: Scale) -> Tally {
    let mut t = Tally::default();
    for (r, n) in presentation_grid(scale) {
        let total: u128 = Multipartition::all(r, n)
            .iter()
            .map(|l| {
                let c = count_std(l);
                c * c
            })
            .sum();
        let want = (r as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
        t.check(total == want, || format!("(r, n) = ({}, {}): Σ = {}, r^n n! = {}", r, n, total, want));
    }
    t
}

fn element_grid(scale: Scale) -> Vec<(usize, usize, Composition)> {
    let (ps, ds): (&[usize], &[usize]) = match scale {
        Scale::Desk => (&[2, 3], &[1, 2]),
        Scale::Quick => (&[2], &[1]),
    };
    let mut out = Vec::new();
    for &p in ps {
        for &d in ds {
            for b in Composition::all(p, 3) {
                out.push((p, d, b));
            }
        }
    }
    out
}

fn criterion_3(scale: Scale) -> Tally {
    element_grid(scale)
        .par_iter()
        .map(|(p, d, b)| {
            let mut t = Tally::default();
            let mode = Mode::Specialize { trials: 3, seed: SEED };
            t.result(|| format!("changing, p = {}, d = {}, b = {:?}", p, d, b), verify_changing_all(*d, b, mode));
            t.result(|| format!("pleftmult, p = {}, d = {}, b = {:?}", p, d, b), verify_pleftmult(*d, b, mode));
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn criterion_4(scale: Scale) -> Tally {
    let ns: &[usize] = match scale {
        Scale::Desk => &[2, 3],
        Scale::Quick => &[2],
    };
    let jobs: Vec<Composition> = ns.iter().flat_map(|&n| Composition::all(2, n)).collect();
    jobs.par_iter()
        .map(|b| {
            let mut t = Tally::default();
            let closed = generic_field(2, 1).and_then(|f| trace_vbtb(&f, b)).map(|c| c.passed());
            t.result(|| format!("Tr(v_b T_b), b = {:?}", b), closed);
            let cmp = verify_comparison(1, b, Mode::Symbolic).map(|r| r.passed());
            t.result(|| format!("comparison over the tensor basis, b = {:?}", b), cmp);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn criterion_5(scale: Scale) -> Tally {
    element_grid(scale)
        .par_iter()
        .map(|(p, d, b)| {
            let mut t = Tally::default();
            let run = || -> Result<Tally> {
                let mut t = Tally::default();
                let f = generic_field(*p, *d)?;
                for lam in Multipartition::enumerate_pdb(*d, b) {
                    let closed = f_lambda_closed(&lam, b, &f)?;
                    let via = f_lambda_via_schur(&lam, b, &f)?;
                    t.check(closed == via, || format!("f_λ two ways, λ = {:?}", lam));
                }
                for pt in SpecPoint::sample_many(*p, *d, b.total(), SEED, 3)? {
                    for (lam, v) in flam_eigen_oracle(&pt, b)? {
                        let closed = specialize(&f_lambda_closed(&lam, b, &f)?, &pt)?;
                        t.check(closed == v, || format!("f_λ vs eigenvalue, λ = {:?}", lam));
                    }
                }
                Ok(t)
            };
            match run() {
                Ok(inner) => t = t.merge(inner),
                Err(e) => t.result(|| format!("p = {}, d = {}, b = {:?}", p, d, b), Err(e)),
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn criterion_6(scale: Scale) -> Tally {
    let (ps, ds, nmax): (&[usize], &[usize], usize) = match scale {
        Scale::Desk => (&[2, 3, 4], &[1, 2], 4),
        Scale::Quick => (&[2, 3], &[1], 3),
    };
    let mut jobs = Vec::new();
    for &p in ps {
        for &d in ds {
            for n in 0..=nmax {
                for lam in Multipartition::all(p * d, n) {
                    if lam.orbit_order(p, d).map(|(_, l)| l > 1).unwrap_or(false) {
                        jobs.push((p, d, lam));
                    }
                }
            }
        }
    }
    jobs.par_iter()
        .map(|(p, d, lam)| {
            let mut t = Tally::default();
            let r = generic_field(*p, *d).and_then(|f| {
                let b = lam.block_sizes(*p, *d)?;
                verify_factorization(lam, &b, &f).map(|c| c.passed())
            });
            t.result(|| format!("g^p_λ = ε^E f_λ, p = {}, d = {}, λ = {:?}", p, d, lam), r);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// `ε_p^k` in `Q(ζ_p)`.
pub fn eps_power(p: usize, k: i64) -> Result<CycRat> {
    let f = CycField::new(p.max(2) as u64)?;
    let step = (f.order() / p as u64) as i64;
    Ok(CycRat::zeta_pow(&f, k * step))
}

/// Pairs of `l`-symmetric multipartitions, `l > 1`, with equal block sizes,
/// together with `o_λ` and `l`.
pub fn splittable_pairs(p: usize, d: usize, n: usize) -> Vec<(Multipartition, Multipartition, usize, usize)> {
    let sym: Vec<_> = Multipartition::all(p * d, n)
        .into_iter()
        .filter_map(|l| {
            let (o, pl) = l.orbit_order(p, d).ok()?;
            let b = l.block_sizes(p, d).ok()?;
            (pl > 1).then_some((l, b, o, pl))
        })
        .collect();
    let mut out = Vec::new();
    for (a, ba, o, la) in &sym {
        for (b, bb, _, lb) in &sym {
            if la == lb && ba == bb {
                out.push((a.clone(), b.clone(), *o, *la));
            }
        }
    }
    out
}

fn check_splittable_set(tables: &TableSet, p: usize, n: usize, semisimple: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for (lam, mu, m, l) in splittable_pairs(p, 1, n) {
        let dprod = d_product(&lam, &mu, m, tables)?;
        // the ratio runs over the l-th roots of unity ε^{km}
        for k in 0..l as i64 {
            let ratio = eps_power(p, k * m as i64)?;
            let res = split_result(&lam, &mu, tables, &ratio, None)?;
            let oracle = relations_oracle(&lam, &mu, tables, &ratio)?;
            t.check(oracle == Relations::Unique(res.values.clone()), || {
                format!("formula vs oracle, λ = {:?}, μ = {:?}, k = {}", lam, mu, k)
            });
            let sum: BigRational = res.values.iter().cloned().sum();
            let want = BigRational::from_integer(BigInt::from(dprod).pow(l as u32));
            t.check(sum == want, || format!("row sum, λ = {:?}, μ = {:?}", lam, mu));
            for i in 1..=l {
                for j in 1..=l {
                    let v = splittable_number(&lam, &mu, i, j, tables, &ratio, None)?;
                    t.check(v.value == cyclic_reindex(&res, i, j)?, || {
                        format!("[S_{} : D_{}], λ = {:?}, μ = {:?}", i, j, lam, mu)
                    });
                }
            }
        }
        if semisimple && lam == mu {
            let one = eps_power(p, 0)?;
            for i in 1..=l {
                for j in 1..=l {
                    let v = splittable_number(&lam, &mu, i, j, tables, &one, None)?;
                    let want = BigRational::from_integer(BigInt::from(u8::from(i == j)));
                    t.check(v.value == want, || format!("δ_ij at (i, j) = ({}, {}), λ = {:?}", i, j, lam));
                }
            }
        }
    }
    Ok(t)
}

fn criterion_7(scale: Scale) -> Tally {
    let (nmax, seeds) = match scale {
        Scale::Desk => (4, 20u64),
        Scale::Quick => (3, 3u64),
    };
    let mut jobs = Vec::new();
    for p in 2..=4 {
        for n in 0..=nmax {
            jobs.push((p, n, None));
            for s in 0..seeds {
                jobs.push((p, n, Some(s)));
            }
        }
    }
    jobs.par_iter()
        .map(|&(p, n, seed)| {
            let run = || -> Result<Tally> {
                let tables = match seed {
                    None => TableSet::semisimple(p, 1, n)?,
                    Some(s) => TableSet::random_unitriangular(p, 1, n, SEED ^ s, 3)?,
                };
                check_splittable_set(&tables, p, n, seed.is_none())
            };
            run().unwrap_or_else(|e| Tally {
                checks: 1,
                failures: vec![format!("p = {}, n = {}, seed = {:?}: error {}", p, n, seed, e)],
            })
        })
        .reduce(Tally::default, Tally::merge)
}

fn criterion_8(scale: Scale) -> Tally {
    let nmax = match scale {
        Scale::Desk => 4,
        Scale::Quick => 3,
    };
    let mut t = Tally::default();
    for p in 2..=3 {
        for n in 0..=nmax {
            let what = || format!("p = {}, n = {}", p, n);
            let r = TableSet::semisimple(p, 1, n).and_then(|tables| {
                let klesh = Multipartition::all(p, n);
                let m = assemble_matrix(p, 1, n, &tables, &klesh, &AssembleOptions::default())?;
                let mut labels = 0;
                for l in &klesh {
                    let (_, pl) = l.orbit_order(p, 1)?;
                    labels += pl * pl;
                }
                // Σ over class representatives of p_λ equals Σ_{λ ∈ P} p_λ² / p
                Ok(m.is_identity() && m.is_unitriangular() && m.rows.len() * p == labels)
            });
            t.result(what, r);
        }
    }
    t
}

fn criterion_9(scale: Scale) -> Tally {
    let nmax = match scale {
        Scale::Desk => 6,
        Scale::Quick => 4,
    };
    let mut t = Tally::default();
    for p in 1..=3 {
        for d in 1..=2 {
            // H_{r,p,0} is the ground field; the statement concerns n ≥ 1
            for n in 1..=nmax {
                for lam in Multipartition::all(p * d, n) {
                    let r = dim_report(&lam, p, d).map(|rep| rep.dim % rep.p_lam as u128 == 0);
                    t.result(|| format!("p = {}, d = {}, λ = {:?}", p, d, lam), r);
                }
            }
        }
    }
    t
}

/// Run criterion `id` (1 to 9).
pub fn run_criterion(id: u8, scale: Scale) -> CriterionResult {
    let start = Instant::now();
    let tally = match id {
        1 => criterion_1(scale),
        2 => criterion_2(scale),
        3 => criterion_3(scale),
        4 => criterion_4(scale),
        5 => criterion_5(scale),
        6 => criterion_6(scale),
        7 => criterion_7(scale),
        8 => criterion_8(scale),
        9 => criterion_9(scale),
        _ => panic!("there are nine criteria, got {}", id),
    };
    CriterionResult {
        id,
        name: NAMES[id as usize - 1],
        passed: tally.failures.is_empty() && tally.checks > 0,
        checks: tally.checks,
        failures: tally.failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Run all nine criteria in order.
pub fn run_all(scale: Scale) -> Vec<CriterionResult> {
    (1..=9).map(|id| run_criterion(id, scale)).collect()
}
