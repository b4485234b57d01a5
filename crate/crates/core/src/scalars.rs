//! Closed formulas for the Schur elements `s_λ`, `s_λ^b`, the scalars `f_λ`
//! and their distinguished roots `g_λ`.
//!
//! Every formula is assembled from [`Mono`] factors and evaluated in any
//! [`ParamField`], so the same code serves the generic function field and
//! exact specialization points.

use alloc::format;
use alloc::vec::Vec;

use crate::combin::{hook, ComponentIndex, Composition, Multipartition, Partition};
use crate::elements::{block_params, trace_vbtb_closed};
use crate::exactnum::{Mono, ParamField, Scalar};
use crate::error::{Error, Result};

/// A generalized hook `h^λ_{ij}(s,t) = ε^{p_s−p_t} q^{h_{ij}(λ^{(s)},λ^{(t)})} Q_{d_s} Q_{d_t}^{−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookDatum {
    /// Row of the node.
    pub i: usize,
    /// Column of the node.
    pub j: usize,
    /// Component holding the node.
    pub s: usize,
    /// Target component.
    pub t: usize,
    /// The monomial value.
    pub value: Mono,
}

/// The generalized hook `h^λ_{ij}(s,t)` in the context `d`.
pub fn hook_datum(lam: &Multipartition, i: usize, j: usize, s: usize, t: usize, d: usize) -> Result<HookDatum> {
    if s == 0 || t == 0 || s > lam.r() || t > lam.r() {
        return Err(Error::IndexOutOfRange(format!("components ({}, {}) of {:?}", s, t, lam)));
    }
    let h = hook(lam.comp(s), lam.comp(t), i, j)?;
    let (cs, ct) = (ComponentIndex::new(s, d), ComponentIndex::new(t, d));
    let mut m = Mono::one(d);
    m.eps = cs.p_s as i64 - ct.p_s as i64;
    m.q = h;
    m.qs[cs.d_s - 1] += 1;
    m.qs[ct.d_s - 1] -= 1;
    Ok(HookDatum {
        i,
        j,
        s,
        t,
        value: m,
    })
}

/// The parameter `u_s = ε^{p_s} Q_{d_s}` attached to component `s`.
pub fn component_param(s: usize, d: usize) -> Mono {
    let ci = ComponentIndex::new(s, d);
    let mut m = Mono::big_q(d, ci.d_s);
    m.eps = ci.p_s as i64;
    m
}

fn arrow_of(comps: &[Partition]) -> Partition {
    Multipartition::new(comps.to_vec()).arrow()
}

/// Schur element of the Ariki–Koike algebra with parameter list
/// `u_1, …, u_k` at the multipartition `comps`:
/// `(−1)^{n(k−1)} q^{−β(→λ)} (q−1)^{−n} Π_{(i,j,s)} Π_t (q^{h_{ij}(λ^{(s)},λ^{(t)})} u_s/u_t − 1)`.
pub fn schur_element_params<F: ParamField>(comps: &[Partition], params: &[Mono], f: &F) -> Result<F::E> {
    if comps.len() != params.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} components but {} parameters",
            comps.len(),
            params.len()
        )));
    }
    let k = comps.len();
    let n: usize = comps.iter().map(Partition::size).sum();
    let d = f.d();
    let mut lead = Mono::q(d, -(arrow_of(comps).beta() as i64));
    if (n * (k.saturating_sub(1))) % 2 == 1 {
        lead = lead.negate();
    }
    let mut acc = f.monomial(&lead);
    let qm1 = f.q().sub(&f.one());
    acc = acc.div(&qm1.pow(n as i64)?)?;
    for (s, lam_s) in comps.iter().enumerate() {
        for (i, j) in lam_s.nodes() {
            for (t, lam_t) in comps.iter().enumerate() {
                let h = hook(lam_s, lam_t, i, j)?;
                let mut m = params[s].mul(&params[t].inv()?);
                m.q += h;
                acc = acc.mul(&f.monomial(&m).sub(&f.one()));
            }
        }
    }
    Ok(acc)
}

/// The Schur element `s_λ` of `H_{r,n}` (parameters `u_s = ε^{p_s} Q_{d_s}`).
pub fn schur_element<F: ParamField>(lam: &Multipartition, f: &F) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    if lam.r() != p * d {
        return Err(Error::ShapeMismatch(format!("{:?} has {} components, r = {}", lam, lam.r(), p * d)));
    }
    let params: Vec<Mono> = (1..=lam.r()).map(|s| component_param(s, d)).collect();
    schur_element_params(lam.comps(), &params, f)
}

fn check_pdb(lam: &Multipartition, b: &Composition, p: usize, d: usize) -> Result<()> {
    if b.len() != p {
        return Err(Error::ShapeMismatch(format!("composition {:?} with p = {}", b.parts(), p)));
    }
    if lam.block_sizes(p, d)? != *b {
        return Err(Error::ShapeMismatch(format!("{:?} is not in P_{{d,b}} for b = {:?}", lam, b.parts())));
    }
    Ok(())
}

/// `s_λ^b = Π_t s_{λ^{[t]}}(ε^t Q)`.
pub fn schur_element_b<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    check_pdb(lam, b, p, d)?;
    let mut acc = f.one();
    for t in 1..=p {
        let blk = lam.block(t, d);
        acc = acc.mul(&schur_element_params(blk.comps(), &block_params(d, t), f)?);
    }
    Ok(acc)
}

/// `γ_b(λ) = ℓ(w_b) − β(→λ) + Σ_a β(→λ^{[a]})`.
pub fn gamma_b(lam: &Multipartition, b: &Composition, p: usize, d: usize) -> Result<i64> {
    let blocks = lam.blocks(p, d)?;
    let sum: i64 = blocks.iter().map(|x| x.arrow().beta() as i64).sum();
    Ok(b.ell_wb() as i64 - lam.arrow().beta() as i64 + sum)
}

/// The closed formula
/// `f_λ = ε^{dnp(p−1)/2 − dα(b)} q^{γ_b(λ)} (Q_1⋯Q_d)^{n(p−1)} Π_{(i,j,s)} Π_{p_t ≠ p_s} (h^λ_{ij}(s,t) − 1)`.
pub fn f_lambda_closed<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    check_pdb(lam, b, p, d)?;
    let n = lam.size() as i64;
    let (p_, d_) = (p as i64, d as i64);
    let mut lead = Mono::one(d);
    lead.eps = d_ * n * p_ * (p_ - 1) / 2 - d_ * b.alpha() as i64;
    lead.q = gamma_b(lam, b, p, d)?;
    for e in lead.qs.iter_mut() {
        *e = n * (p_ - 1);
    }
    let mut acc = f.monomial(&lead);
    let r = p * d;
    for s in 1..=r {
        let ps = ComponentIndex::new(s, d).p_s;
        for (i, j) in lam.comp(s).nodes() {
            for t in 1..=r {
                if ComponentIndex::new(t, d).p_s == ps {
                    continue;
                }
                let h = hook_datum(lam, i, j, s, t, d)?.value;
                acc = acc.mul(&f.monomial(&h).sub(&f.one()));
            }
        }
    }
    Ok(acc)
}

/// `f_λ = (s_λ / s_λ^b) · Tr(v_b T_b)`, with the trace from its closed formula.
pub fn f_lambda_via_schur<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<F::E> {
    let ratio = schur_element(lam, f)?.div(&schur_element_b(lam, b, f)?)?;
    Ok(ratio.mul(&f.monomial(&trace_vbtb_closed(f.p(), f.d(), b))))
}

/// Integer data entering `g_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootData {
    /// `o_λ`.
    pub o: usize,
    /// `p_λ = p / o_λ`.
    pub l: usize,
    /// `n_λ = n / p_λ`.
    pub n_lam: usize,
    /// `α(λ) = n_λ(rp − d o_λ)/2 − dα(b)/p_λ`.
    pub alpha: i64,
    /// `γ_b(√λ) = (ℓ(w_b) + Σ_a β(→λ^{[a]}) − β(→λ)) / p_λ`.
    pub gamma: i64,
}

/// Compute [`RootData`], checking every integrality claim.
pub fn root_data(lam: &Multipartition, b: &Composition, p: usize, d: usize) -> Result<RootData> {
    check_pdb(lam, b, p, d)?;
    let (o, l) = lam.orbit_order(p, d)?;
    let n = lam.size();
    if n % l != 0 {
        return Err(Error::Internal(format!("p_λ = {} does not divide n = {}", l, n)));
    }
    let n_lam = n / l;
    let r = (p * d) as i64;
    let num = n_lam as i64 * (r * p as i64 - (d * o) as i64);
    let da = d as i64 * b.alpha() as i64;
    // the two terms may be half-integers individually; only their difference is integral
    let twice_l_alpha = num * l as i64 - 2 * da;
    let den = 2 * l as i64;
    if twice_l_alpha % den != 0 {
        return Err(Error::Internal(format!("α(λ) is not an integer for {:?}", lam)));
    }
    let alpha = twice_l_alpha / den;
    let g = gamma_b(lam, b, p, d)?;
    if g % l as i64 != 0 {
        return Err(Error::Internal(format!("γ_b(√λ) is not an integer for {:?}", lam)));
    }
    Ok(RootData {
        o,
        l,
        n_lam,
        alpha,
        gamma: g / l as i64,
    })
}

/// The distinguished root
/// `g_λ = ε^{α(λ)} q^{γ_b(√λ)} (Q_1⋯Q_d)^{n_λ(p−1)} Π_{(i,j,s) ∈ [√λ]} Π_{t ≤ d o_λ} Π_{0 ≤ a < p_λ, a ≠ 0 if p_t = p_s} (ε^{a o_λ} h^λ_{ij}(s,t) − 1)`.
pub fn g_lambda<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    let rd = root_data(lam, b, p, d)?;
    let mut lead = Mono::one(d);
    lead.eps = rd.alpha;
    lead.q = rd.gamma;
    for e in lead.qs.iter_mut() {
        *e = rd.n_lam as i64 * (p as i64 - 1);
    }
    let mut acc = f.monomial(&lead);
    let top = d * rd.o;
    for s in 1..=top {
        let ps = ComponentIndex::new(s, d).p_s;
        for (i, j) in lam.comp(s).nodes() {
            for t in 1..=top {
                let same = ComponentIndex::new(t, d).p_s == ps;
                let h = hook_datum(lam, i, j, s, t, d)?.value;
                for a in 0..rd.l {
                    if a == 0 && same {
                        continue;
                    }
                    let m = h.shift_eps((a * rd.o) as i64);
                    acc = acc.mul(&f.monomial(&m).sub(&f.one()));
                }
            }
        }
    }
    Ok(acc)
}

/// `f_{t:m} = ε^{−(t−1) d m (n/l)} g_λ` for `1 ≤ t ≤ l`, with `m = o_λ`,
/// `l = p_λ`.
pub fn f_shift_factor<F: ParamField>(lam: &Multipartition, b: &Composition, t: usize, f: &F) -> Result<F::E> {
    let (p, d) = (f.p(), f.d());
    let rd = root_data(lam, b, p, d)?;
    if t == 0 || t > rd.l {
        return Err(Error::IndexOutOfRange(format!("t = {} with p_λ = {}", t, rd.l)));
    }
    let e = -(((t - 1) * d * rd.o * rd.n_lam) as i64);
    Ok(f.eps(e).mul(&g_lambda(lam, b, f)?))
}

/// The exponent `E = d o_λ (n/p_λ) p_λ(p_λ−1)/2` of `g_λ^{p_λ} = ε^E f_λ`.
pub fn factorization_exponent(rd: &RootData, d: usize) -> i64 {
    (d * rd.o * rd.n_lam * (rd.l * (rd.l - 1) / 2)) as i64
}

/// Both sides of `g_λ^{p_λ} = ε^E f_λ`, plus the telescoping product
/// `f_{1:m} ⋯ f_{l:m}` which must equal `f_λ`.
#[derive(Clone, Debug)]
pub struct FactorizationCheck<E> {
    /// `g_λ^{p_λ}`.
    pub g_power: E,
    /// `ε^E f_λ`.
    pub eps_f: E,
    /// `Π_t f_{t:m}`.
    pub telescoped: E,
    /// `f_λ`.
    pub f: E,
}

impl<E: Scalar> FactorizationCheck<E> {
    /// Whether both identities hold.
    pub fn passed(&self) -> bool {
        self.g_power == self.eps_f && self.telescoped == self.f
    }
}

/// Check `g_λ^{p_λ} = ε^E f_λ` and `Π_t f_{t:m} = f_λ`.
pub fn verify_factorization<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<FactorizationCheck<F::E>> {
    let (p, d) = (f.p(), f.d());
    let rd = root_data(lam, b, p, d)?;
    let g = g_lambda(lam, b, f)?;
    let fl = f_lambda_closed(lam, b, f)?;
    let mut telescoped = f.one();
    for t in 1..=rd.l {
        telescoped = telescoped.mul(&f_shift_factor(lam, b, t, f)?);
    }
    Ok(FactorizationCheck {
        g_power: g.pow(rd.l as i64)?,
        eps_f: f.eps(factorization_exponent(&rd, d)).mul(&fl),
        telescoped,
        f: fl,
    })
}

/// All scalars attached to `λ ∈ P_{d,b}`.
#[derive(Clone, Debug)]
pub struct ScalarBundle<E> {
    /// `s_λ`.
    pub schur: E,
    /// `s_λ^b`.
    pub schur_b: E,
    /// `f_λ`.
    pub f: E,
    /// `g_λ`.
    pub g: E,
    /// Integer data.
    pub root: RootData,
}

/// Compute the [`ScalarBundle`] of `λ`.
pub fn scalar_bundle<F: ParamField>(lam: &Multipartition, b: &Composition, f: &F) -> Result<ScalarBundle<F::E>> {
    Ok(ScalarBundle {
        schur: schur_element(lam, f)?,
        schur_b: schur_element_b(lam, b, f)?,
        f: f_lambda_closed(lam, b, f)?,
        g: g_lambda(lam, b, f)?,
        root: root_data(lam, b, f.p(), f.d())?,
    })
}
