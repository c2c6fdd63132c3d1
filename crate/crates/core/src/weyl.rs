//! The affine symmetric group acting on θ-space, reduction to the fundamental
//! alcove, and the classification of a parameter point by `(s, w, ±, ψ, J)`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multipartitions::{Charge, Perm};
use crate::params::ParamPoint;
use crate::rat::{fmt_q, q, Q};

/// Hard cap on reduction steps; reaching it signals an arithmetic bug.
pub const REDUCTION_CAP: usize = 100_000;

/// `σ_i·θ`: negate `θ_i` and add it to both cyclic neighbours (twice to the single
/// neighbour when `ℓ = 2`).
pub fn simple_reflect(i: usize, theta: &[Q]) -> Result<Vec<Q>> {
    let ell = theta.len();
    if ell < 2 {
        return Err(Error::NoReflections);
    }
    if i >= ell {
        return Err(Error::ResidueRange(i, ell));
    }
    let mut out = theta.to_vec();
    let t = theta[i];
    out[i] = -t;
    out[(i + ell - 1) % ell] += t;
    out[(i + 1) % ell] += t;
    Ok(out)
}

/// Applies `σ_{word[0]}` first, then `σ_{word[1]}`, and so on.
pub fn apply_word(word: &[usize], theta: &[Q]) -> Vec<Q> {
    word.iter().fold(theta.to_vec(), |acc, &i| simple_reflect(i, &acc).expect("letters index θ"))
}

/// An element of the affine symmetric group, stored as the word of simple
/// reflections that produces it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub level: usize,
    pub word: Vec<usize>,
}

impl AffineMap {
    pub fn apply(&self, theta: &[Q]) -> Vec<Q> {
        apply_word(&self.word, theta)
    }

    pub fn apply_inverse(&self, theta: &[Q]) -> Vec<Q> {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        apply_word(&rev, theta)
    }

    /// Permutation of `{1, …, ℓ}` obtained by replacing `σ_0` with `(1 ℓ)` and
    /// `σ_j` with `(j j+1)`, composed in application order.
    pub fn linear_part(&self) -> Perm {
        let ell = self.level;
        self.word.iter().fold(Perm::identity(ell), |acc, &i| {
            let t = if i == 0 { Perm::transposition(ell, 1, ell) } else { Perm::transposition(ell, i, i + 1) };
            t.compose(&acc)
        })
    }

    /// `o - g(o)` for `o = (1, 0, …, 0)`.
    pub fn translation(&self) -> Vec<Q> {
        let mut o = vec![q(0); self.level];
        o[0] = q(1);
        let go = self.apply(&o);
        o.iter().zip(go).map(|(a, b)| a - b).collect()
    }
}

/// Reduces `θ` with `Σθ_i = 1` into the closed fundamental alcove by reflecting at
/// the smallest negative coordinate. Returns `(ψ, g)` with `g·θ = ψ`.
pub fn to_fundamental(theta: &[Q]) -> Result<(Vec<Q>, AffineMap)> {
    let mut cur = theta.to_vec();
    let mut word = Vec::new();
    while let Some(i) = cur.iter().position(|x| x.is_negative()) {
        if word.len() >= REDUCTION_CAP {
            return Err(Error::ReductionCap(REDUCTION_CAP));
        }
        cur = simple_reflect(i, &cur)?;
        word.push(i);
    }
    Ok((cur, AffineMap { level: theta.len(), word }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// How to choose an alcove for a point lying on alcove walls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum AlcoveMode {
    /// The alcove reached by the deterministic reduction.
    #[default]
    Canonical,
    /// The alcove whose upper closure contains the point.
    UpperClosure,
}

impl fmt::Display for AlcoveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlcoveMode::Canonical => "canonical",
            AlcoveMode::UpperClosure => "upper-closure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveData {
    pub sign: Sign,
    pub s: Charge,
    pub w: Perm,
    pub psi: Vec<Q>,
    pub j: BTreeSet<usize>,
    pub scale: Q,
    pub map: AffineMap,
    pub mode: AlcoveMode,
}

impl AlcoveData {
    pub fn level(&self) -> usize {
        self.psi.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sign": self.sign.to_string(),
            "s": self.s.entries(),
            "w": self.w.images(),
            "psi": self.psi.iter().map(fmt_q).collect::<Vec<_>>(),
            "J": self.j.iter().collect::<Vec<_>>(),
        })
    }
}

/// Classifies `p` (which must have `h ≠ 0`).
///
/// For `h > 0` the barred point is classified and the sign is `-`. The normalized
/// θ is reduced to the fundamental alcove; the translation part of the reducing
/// map gives the charge and its finite part gives `w`.
pub fn alcove_data(p: &ParamPoint, mode: AlcoveMode) -> Result<AlcoveData> {
    let h = p.h();
    if h.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let (sign, point) = if h.is_negative() { (Sign::Plus, p.clone()) } else { (Sign::Minus, p.bar()) };
    let theta = point.theta();
    let ell = theta.len();
    let scale: Q = theta.iter().copied().sum();
    let normed: Vec<Q> = theta.iter().map(|x| x / scale).collect();

    let (psi, map) = match mode {
        AlcoveMode::Canonical => to_fundamental(&normed)?,
        AlcoveMode::UpperClosure => {
            let (_, map) = to_fundamental(&lowered(&normed))?;
            (map.apply(&normed), map)
        }
    };

    let d = map.translation();
    let mut s = vec![q(0); ell];
    for i in 1..ell {
        s[i] = s[i - 1] + d[i];
    }
    let mean = s.iter().copied().sum::<Q>() / q(ell as i128);
    let s: Vec<i64> = s
        .iter()
        .map(|x| {
            let y = x - mean;
            assert!(y.is_integer(), "alcove charge must be integral, got {y}");
            y.to_integer() as i64
        })
        .collect();
    let s = Charge::new(s).expect("centred charge sums to zero");
    let w = map.linear_part().inverse();
    let j = psi.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(i, _)| i).collect();
    let data = AlcoveData { sign, s, w, psi, j, scale, map, mode };
    self_check(&data, &normed);
    Ok(data)
}

/// Moves `θ` slightly against every positive root, staying off all other walls.
fn lowered(theta: &[Q]) -> Vec<Q> {
    let ell = theta.len();
    let mut gap = q(1);
    for i in 1..ell {
        let mut acc = q(0);
        for x in &theta[i..] {
            acc += x;
            let frac = acc - acc.floor();
            if !frac.is_zero() {
                gap = gap.min(frac).min(q(1) - frac);
            }
        }
    }
    let eps = gap / q(2 * ell as i128);
    let mut out = theta.to_vec();
    out[0] += eps * q(ell as i128 - 1);
    for x in out.iter_mut().skip(1) {
        *x -= eps;
    }
    out
}

/// `𝟏 + (s_1 - s_ℓ, s_2 - s_1, …, s_ℓ - s_{ℓ-1})` moved by the finite part `w`.
pub fn alcove_base_point(s: &Charge, w: &Perm) -> Vec<Q> {
    let ell = s.level();
    let one = q(1) / q(ell as i128);
    let mut x = vec![one; ell];
    x[0] += q((s.get(1) - s.get(ell)) as i128);
    for (i, xi) in x.iter_mut().enumerate().skip(1) {
        *xi += q((s.get(i + 1) - s.get(i)) as i128);
    }
    apply_word(&w.adjacent_word(), &x)
}

/// Verifies the invariants tying `(s, w, ψ)` back to the normalized point.
fn self_check(d: &AlcoveData, normed: &[Q]) {
    let ell = d.level();
    assert!(d.psi.iter().all(|x| !x.is_negative()), "ψ has a negative entry");
    assert_eq!(d.psi.iter().copied().sum::<Q>(), q(1), "ψ does not sum to 1");
    if ell < 2 {
        return;
    }
    let barycentre = vec![q(1) / q(ell as i128); ell];
    let base = d.map.apply_inverse(&barycentre);
    assert_eq!(base, alcove_base_point(&d.s, &d.w), "base point disagrees with (s, w)");
    for i in 1..ell {
        for k in i..ell {
            let b: Q = base[i..=k].iter().copied().sum();
            let t: Q = normed[i..=k].iter().copied().sum();
            let lo = b.floor();
            assert!(!b.is_integer(), "base point lies on a wall");
            assert!(lo <= t && t <= lo + q(1), "point is outside the closure of its alcove");
        }
    }
}

/// The facet type `J` of `p`.
pub fn facet_type(p: &ParamPoint, mode: AlcoveMode) -> Result<BTreeSet<usize>> {
    Ok(alcove_data(p, mode)?.j)
}
