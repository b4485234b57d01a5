//! Standard tableaux of multipartition shape, contents and the seminormal
//! coefficients `β_s(i)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combin::{ComponentIndex, Multipartition};
use crate::exactnum::{Mono, ParamField, Scalar};
use crate::error::{Error, Result};

/// A standard tableau: components → rows → entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    entries: Vec<Vec<Vec<usize>>>,
}

/// Position of an entry: `(component s, row, column)`, all 1-based.
pub type Position = (usize, usize, usize);

impl StandardTableau {
    /// Validate a filling of a multipartition diagram.
    pub fn new(entries: Vec<Vec<Vec<usize>>>) -> Result<StandardTableau> {
        let t = StandardTableau { entries };
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for comp in &t.entries {
            for (i, row) in comp.iter().enumerate() {
                if row.is_empty() {
                    return Err(Error::Invalid("empty tableau row".into()));
                }
                if i > 0 && row.len() > comp[i - 1].len() {
                    return Err(Error::Invalid("tableau rows must weakly decrease".into()));
                }
                for (j, &x) in row.iter().enumerate() {
                    if x == 0 || x > n || seen[x] {
                        return Err(Error::Invalid(format!("entry {} repeated or out of range", x)));
                    }
                    seen[x] = true;
                    if j > 0 && row[j - 1] >= x {
                        return Err(Error::Invalid("rows must increase".into()));
                    }
                    if i > 0 && comp[i - 1][j] >= x {
                        return Err(Error::Invalid("columns must increase".into()));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Entries, component by component and row by row.
    pub fn entries(&self) -> &[Vec<Vec<usize>>] {
        &self.entries
    }

    /// Number of entries `n`.
    pub fn size(&self) -> usize {
        self.entries.iter().flatten().map(Vec::len).sum()
    }

    /// Shape of the tableau.
    pub fn shape(&self) -> Multipartition {
        Multipartition::from_parts(
            self.entries
                .iter()
                .map(|c| c.iter().map(|r| r.len() as u32).collect())
                .collect(),
        )
        .expect("rows weakly decrease")
    }

    /// Reading word: entries component by component, row by row.
    pub fn reading_word(&self) -> Vec<usize> {
        self.entries.iter().flatten().flatten().copied().collect()
    }

    /// Positions of `1..=n`: `positions()[k-1]` is the node holding `k`.
    pub fn positions(&self) -> Vec<Position> {
        let mut pos = vec![(0, 0, 0); self.size()];
        for (s, comp) in self.entries.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    pos[x - 1] = (s + 1, i + 1, j + 1);
                }
            }
        }
        pos
    }

    /// Position of `k`.
    pub fn position(&self, k: usize) -> Result<Position> {
        for (s, comp) in self.entries.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x == k {
                        return Ok((s + 1, i + 1, j + 1));
                    }
                }
            }
        }
        Err(Error::IndexOutOfRange(format!("entry {} not in tableau", k)))
    }

    /// The filling `s(i, i+1)` obtained by swapping `i` and `i+1`, if it is
    /// standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        let mut e = self.entries.clone();
        for comp in e.iter_mut() {
            for row in comp.iter_mut() {
                for x in row.iter_mut() {
                    if *x == i {
                        *x = i + 1;
                    } else if *x == i + 1 {
                        *x = i;
                    }
                }
            }
        }
        StandardTableau::new(e).ok()
    }

    /// Block rotation `s⟨z⟩ = (s^{[z+1]}, …, s^{[z+p]})`.
    pub fn shift(&self, z: i64, p: usize, d: usize) -> Result<StandardTableau> {
        if self.entries.len() != p * d {
            return Err(Error::ShapeMismatch(format!(
                "tableau with {} components in context (p, d) = ({}, {})",
                self.entries.len(),
                p,
                d
            )));
        }
        let k = z.rem_euclid(p as i64) as usize;
        let mut entries = Vec::with_capacity(p * d);
        for t in 0..p {
            let src = (t + k) % p;
            entries.extend_from_slice(&self.entries[d * src..d * (src + 1)]);
        }
        Ok(StandardTableau { entries })
    }
}

/// All standard tableaux of shape `λ`, sorted by reading word.
pub fn enumerate_std(lam: &Multipartition) -> Vec<StandardTableau> {
    let n = lam.size();
    let shape: Vec<Vec<usize>> = lam
        .comps()
        .iter()
        .map(|c| c.parts().iter().map(|&x| x as usize).collect())
        .collect();
    let mut fill: Vec<Vec<Vec<usize>>> = shape
        .iter()
        .map(|c| c.iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut filled: Vec<Vec<usize>> = shape.iter().map(|c| vec![0; c.len()]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        shape: &[Vec<usize>],
        fill: &mut Vec<Vec<Vec<usize>>>,
        filled: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if k > n {
            out.push(StandardTableau { entries: fill.clone() });
            return;
        }
        for s in 0..shape.len() {
            for i in 0..shape[s].len() {
                let j = filled[s][i];
                if j >= shape[s][i] {
                    continue;
                }
                if i > 0 && filled[s][i - 1] <= j {
                    continue;
                }
                fill[s][i][j] = k;
                filled[s][i] += 1;
                rec(k + 1, n, shape, fill, filled, out);
                filled[s][i] -= 1;
                fill[s][i][j] = 0;
            }
        }
    }
    rec(1, n, &shape, &mut fill, &mut filled, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    out
}

/// The superstandard tableau `t^λ`: entries in order along the rows of
/// the first component, then the second, and so on.
pub fn superstandard(lam: &Multipartition) -> StandardTableau {
    let mut k = 0;
    let entries = lam
        .comps()
        .iter()
        .map(|c| {
            c.parts()
                .iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| {
                            k += 1;
                            k
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    StandardTableau { entries }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|Std(λ)|` by the multinomial coefficient times the hook length formula
/// of each component.
pub fn count_std(lam: &Multipartition) -> u128 {
    let n = lam.size();
    let mut count = factorial(n);
    for c in lam.comps() {
        let conj = c.conjugate();
        let mut hooks: u128 = 1;
        for (i, j) in c.nodes() {
            let h = c.part(i) as usize - j + conj.part(j) as usize - i + 1;
            hooks *= h as u128;
        }
        count /= hooks;
    }
    count
}

/// The content `cont_s(k) = ε^{p_c} q^{col−row} Q_{d_c}` as a monomial,
/// where `k` lies in component `c = d(p_c − 1) + d_c` of `s`.
pub fn content_mono(s: &StandardTableau, k: usize, d: usize) -> Result<Mono> {
    let (c, row, col) = s.position(k)?;
    Ok(content_of_node(c, row, col, d))
}

/// Content of the node `(row, col)` of component `c`.
pub fn content_of_node(c: usize, row: usize, col: usize, d: usize) -> Mono {
    let ci = ComponentIndex::new(c, d);
    let mut m = Mono::big_q(d, ci.d_s);
    m.eps = ci.p_s as i64;
    m.q = col as i64 - row as i64;
    m
}

/// `cont_s(k)` evaluated in a field.
pub fn content<F: ParamField>(s: &StandardTableau, k: usize, f: &F) -> Result<F::E> {
    if k == 0 || k > s.size() {
        return Err(Error::IndexOutOfRange(format!("content index {}", k)));
    }
    Ok(f.monomial(&content_mono(s, k, f.d())?))
}

/// All contents `cont_s(1), …, cont_s(n)` as monomials.
pub fn content_vector(s: &StandardTableau, d: usize) -> Vec<Mono> {
    s.positions()
        .into_iter()
        .map(|(c, row, col)| content_of_node(c, row, col, d))
        .collect()
}

/// `β_s(i) = (q − 1) c_t / (c_t − c_s)` with `c_s = cont_s(i)` and
/// `c_t = cont_{s(i,i+1)}(i) = cont_s(i+1)`.
pub fn beta_coeff<F: ParamField>(s: &StandardTableau, i: usize, f: &F) -> Result<F::E> {
    if i == 0 || i >= s.size() {
        return Err(Error::IndexOutOfRange(format!("generator T_{} on {} strands", i, s.size())));
    }
    let cs = content(s, i, f)?;
    let ct = content(s, i + 1, f)?;
    beta_from_contents(&cs, &ct, f)
}

/// `β` from the two contents.
pub fn beta_from_contents<F: ParamField>(cs: &F::E, ct: &F::E, f: &F) -> Result<F::E> {
    let den = ct.sub(cs);
    if den.is_zero() {
        return Err(Error::DegenerateSpecialization(format!(
            "contents {} and {} coincide",
            cs, ct
        )));
    }
    let qm1 = f.q().sub(&f.one());
    qm1.mul(ct).div(&den)
}
