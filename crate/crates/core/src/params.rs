//! Parameter points `(h, H_1, …, H_{ℓ-1})`, their θ-coordinates, and the two wall
//! arrangements (G.I.T. walls and c-walls) as integer linear forms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartitions::MultiPartition;
use crate::rat::{fmt_q_list, parse_q, parse_q_list, q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    h: Q,
    hs: Vec<Q>,
}

impl ParamPoint {
    /// `hs` holds `H_1, …, H_{ℓ-1}`.
    pub fn new(h: Q, hs: Vec<Q>) -> Self {
        ParamPoint { h, hs }
    }

    pub fn level(&self) -> usize {
        self.hs.len() + 1
    }

    pub fn h(&self) -> Q {
        self.h
    }

    /// `H_i` for `0 ≤ i ≤ ℓ-1`, with `H_0 = -(H_1 + … + H_{ℓ-1})`.
    pub fn big_h(&self, i: usize) -> Q {
        if i == 0 {
            -self.hs.iter().copied().sum::<Q>()
        } else {
            self.hs[i - 1]
        }
    }

    pub fn hs(&self) -> &[Q] {
        &self.hs
    }

    /// `θ = (-h + H_0, H_1, …, H_{ℓ-1})`.
    pub fn theta(&self) -> Vec<Q> {
        let mut t = Vec::with_capacity(self.level());
        t.push(-self.h + self.big_h(0));
        t.extend(self.hs.iter().copied());
        debug_assert_eq!(t.iter().copied().sum::<Q>(), -self.h);
        t
    }

    pub fn from_theta(theta: &[Q]) -> Self {
        assert!(!theta.is_empty());
        let hs = theta[1..].to_vec();
        let h0 = -hs.iter().copied().sum::<Q>();
        ParamPoint { h: h0 - theta[0], hs }
    }

    /// `h̄ = (-h, -H_{ℓ-1}, …, -H_1)`.
    pub fn bar(&self) -> Self {
        ParamPoint { h: -self.h, hs: self.hs.iter().rev().map(|x| -x).collect() }
    }

    pub fn scaled(&self, k: Q) -> Self {
        ParamPoint { h: self.h * k, hs: self.hs.iter().map(|x| x * k).collect() }
    }

    /// `M_i = H_1 + … + H_{i-1}` for `1 ≤ i ≤ ℓ`.
    pub fn partial_sum(&self, i: usize) -> Q {
        self.hs[..i - 1].iter().copied().sum()
    }

    /// Coordinates `(h, H_1, …)` in the order used by [`WallForm`].
    pub fn coords(&self) -> Vec<Q> {
        let mut v = vec![self.h];
        v.extend(self.hs.iter().copied());
        v
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h={} H={}", self.h, fmt_q_list(&self.hs))
    }
}

impl FromStr for ParamPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut h = None;
        let mut hs = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(v) = tok.strip_prefix("h=") {
                h = Some(parse_q(v)?);
            } else if let Some(v) = tok.strip_prefix("H=") {
                hs = parse_q_list(v)?;
            } else {
                return Err(Error::Parse(format!("unexpected token '{tok}'")));
            }
        }
        let h = h.ok_or_else(|| Error::Parse("missing h=".into()))?;
        Ok(ParamPoint::new(h, hs))
    }
}

/// The linear form `a_h·h + Σ a_i·H_i`, stored primitive with first nonzero
/// coefficient positive. Coefficients are ordered `(a_h, a_1, …, a_{ℓ-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WallForm {
    coeffs: Vec<i64>,
}

impl WallForm {
    /// Normalizes a rational coefficient vector; `None` for the zero form.
    pub fn from_rational(coeffs: &[Q]) -> Option<WallForm> {
        let lcm = coeffs.iter().fold(1i128, |acc, c| acc.lcm(c.denom()));
        let ints: Vec<i128> = coeffs.iter().map(|c| (c * q(lcm)).to_integer()).collect();
        let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
        if g == 0 {
            return None;
        }
        let lead = ints.iter().find(|x| !x.is_zero()).unwrap();
        let g = if lead.is_negative() { -g } else { g };
        Some(WallForm { coeffs: ints.iter().map(|x| (x / g) as i64).collect() })
    }

    pub fn from_ints(coeffs: &[i64]) -> Option<WallForm> {
        let qs: Vec<Q> = coeffs.iter().map(|&x| q(x as i128)).collect();
        WallForm::from_rational(&qs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn level(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, p: &ParamPoint) -> Q {
        self.coeffs.iter().zip(p.coords()).map(|(&a, x)| q(a as i128) * x).sum()
    }

    /// The form expressed in the barred coordinates: `f̄(p̄) = f(p)`.
    pub fn bar(&self) -> WallForm {
        let mut v = vec![-self.coeffs[0]];
        v.extend(self.coeffs[1..].iter().rev().map(|x| -x));
        WallForm::from_ints(&v).expect("nonzero form stays nonzero")
    }
}

impl fmt::Display for WallForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let terms = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, format!("H{}", i + 1)))
            .chain(std::iter::once((self.coeffs[0], "h".to_string())));
        for (a, var) in terms {
            if a == 0 {
                continue;
            }
            if a < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if a.abs() != 1 {
                out.push_str(&a.abs().to_string());
            }
            out.push_str(&var);
        }
        f.write_str(&out)
    }
}

/// Forms `(H_i + … + H_j) + m·h` for `1 ≤ i ≤ j ≤ ℓ-1`, `|m| ≤ n-1`, together with `h`.
pub fn git_walls(ell: usize, n: usize) -> BTreeSet<WallForm> {
    let mut out = BTreeSet::new();
    let mut hform = vec![0i64; ell];
    hform[0] = 1;
    out.insert(WallForm::from_ints(&hform).unwrap());
    let m_max = n.saturating_sub(1) as i64;
    for i in 1..ell {
        for j in i..ell {
            for m in -m_max..=m_max {
                let mut c = vec![0i64; ell];
                c[0] = m;
                c[i..=j].fill(1);
                out.insert(WallForm::from_ints(&c).unwrap());
            }
        }
    }
    out
}

/// Integer coefficients `(a_h, a_1, …, a_{ℓ-1})` of the c-function of `lam`.
pub fn c_coefficients(lam: &MultiPartition) -> Vec<i64> {
    let ell = lam.level() as i64;
    let n = lam.degree() as i64;
    let mut c = vec![0i64; lam.level()];
    let twist: i64 = lam.components().iter().map(|p| p.n_statistic() as i64 - p.transpose().n_statistic() as i64).sum();
    c[0] = -ell * (n * (n - 1) / 2 + twist);
    for (i, slot) in c.iter_mut().enumerate().skip(1) {
        let above: usize = lam.components()[i..].iter().map(|p| p.degree()).sum();
        *slot = ell * above as i64;
    }
    c
}

/// Normalized nonzero differences of c-functions over all pairs in `P(ℓ, n)`.
pub fn c_wall_forms(ell: usize, n: usize) -> BTreeSet<WallForm> {
    let coeffs: BTreeSet<Vec<i64>> = MultiPartition::enumerate(ell, n).iter().map(c_coefficients).collect();
    let coeffs: Vec<_> = coeffs.into_iter().collect();
    let mut out = BTreeSet::new();
    for (k, a) in coeffs.iter().enumerate() {
        for b in &coeffs[k + 1..] {
            let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if let Some(f) = WallForm::from_ints(&d) {
                out.insert(f);
            }
        }
    }
    out
}

pub fn walls_through(p: &ParamPoint, n: usize) -> Vec<WallForm> {
    git_walls(p.level(), n).into_iter().filter(|f| f.eval(p).is_zero()).collect()
}

pub fn is_git_regular(p: &ParamPoint, n: usize) -> bool {
    walls_through(p, n).is_empty()
}

pub fn on_c_wall(p: &ParamPoint, n: usize) -> bool {
    c_wall_forms(p.level(), n).iter().any(|f| f.eval(p).is_zero())
}
