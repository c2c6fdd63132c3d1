//! ℓ-multipartitions, charges, permutations of components and the bijection τ_s.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{dominance_of_prefixes, Partition, Rel};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiPartition {
    comps: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(comps: Vec<Partition>) -> Self {
        assert!(!comps.is_empty(), "a multipartition has at least one component");
        MultiPartition { comps }
    }

    /// `(∅, …, ∅)` of level `ell`.
    pub fn empty(ell: usize) -> Self {
        MultiPartition::new(vec![Partition::empty(); ell])
    }

    /// `((n), ∅, …, ∅)`.
    pub fn top(ell: usize, n: usize) -> Self {
        let mut comps = vec![Partition::empty(); ell];
        if n > 0 {
            comps[0] = Partition::new(vec![n]).unwrap();
        }
        MultiPartition::new(comps)
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn degree(&self) -> usize {
        self.comps.iter().map(Partition::degree).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    /// Component `i`, 1-based.
    pub fn comp(&self, i: usize) -> &Partition {
        &self.comps[i - 1]
    }

    /// All ℓ-multipartitions of `n`: components compared left to right, earlier
    /// components of larger degree first, each component in reverse-lex order.
    pub fn enumerate(ell: usize, n: usize) -> Vec<MultiPartition> {
        assert!(ell >= 1);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(ell);
        enumerate_rec(ell, n, &mut cur, &mut out);
        out
    }

    /// Dominance on `P(ℓ, n)`; `Less` means `self ◁ other`.
    pub fn dominance(&self, other: &MultiPartition) -> Result<Rel> {
        if self.level() != other.level() {
            return Err(Error::LevelMismatch(self.level(), other.level()));
        }
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let n = self.degree();
        Ok(dominance_of_prefixes(self.cumulative(n), other.cumulative(n)))
    }

    /// `Σ_{k<i} |λ^{(k)}| + Σ_{r≤j} λ^{(i)}_r` for every `i` and `1 ≤ j ≤ n`.
    fn cumulative(&self, n: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.level() * n.max(1));
        let mut before = 0;
        for c in &self.comps {
            let mut acc = before;
            for j in 1..=n.max(1) {
                acc += c.part(j);
                out.push(acc);
            }
            before += c.degree();
        }
        out
    }

    /// Componentwise transpose.
    pub fn transpose(&self) -> MultiPartition {
        MultiPartition::new(self.comps.iter().map(Partition::transpose).collect())
    }

    /// `(ᵗλ^{(ℓ)}, …, ᵗλ^{(1)})`.
    pub fn bar(&self) -> MultiPartition {
        MultiPartition::new(self.comps.iter().rev().map(Partition::transpose).collect())
    }

    /// `(w·λ)_i = λ^{(w(i))}`.
    ///
    /// With `(vw)(x) = v(w(x))` this is a right action: `v·(w·λ) = (wv)·λ`.
    pub fn act(&self, w: &Perm) -> MultiPartition {
        assert_eq!(w.len(), self.level());
        MultiPartition::new((1..=self.level()).map(|i| self.comp(w.apply(i)).clone()).collect())
    }
}

fn enumerate_rec(ell: usize, n: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
    if cur.len() + 1 == ell {
        for p in Partition::all(n) {
            cur.push(p);
            out.push(MultiPartition::new(cur.clone()));
            cur.pop();
        }
        return;
    }
    for k in (0..=n).rev() {
        for p in Partition::all(k) {
            cur.push(p);
            enumerate_rec(ell, n - k, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("multipartition '{t}' must be bracketed")))?;
        let mut comps = Vec::new();
        let mut depth = 0;
        let mut start = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = Some(i);
                    }
                    depth += 1;
                }
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        let st = start.take().expect("balanced brackets");
                        comps.push(inner[st..=i].parse::<Partition>()?);
                    }
                }
                ',' if depth == 0 => {}
                _ if depth == 0 => return Err(Error::Parse(format!("unexpected '{ch}' in '{t}'"))),
                _ => {}
            }
        }
        if depth != 0 || comps.is_empty() {
            return Err(Error::Parse(format!("malformed multipartition '{t}'")));
        }
        Ok(MultiPartition::new(comps))
    }
}

/// A charge `s ∈ ℤ^ℓ` with `Σ s_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Charge {
    entries: Vec<i64>,
}

impl Charge {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let sum: i64 = entries.iter().sum();
        if sum != 0 {
            return Err(Error::ChargeSum(sum));
        }
        Ok(Charge { entries })
    }

    pub fn zero(ell: usize) -> Self {
        Charge { entries: vec![0; ell] }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    /// Entry `i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    /// Every charge of level `ell` with entries bounded by `bound` in absolute value.
    pub fn all_bounded(ell: usize, bound: i64) -> Vec<Charge> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        charges_rec(ell, bound, &mut cur, &mut out);
        out
    }

    /// `τ_s(∅, …, ∅)`, always an ℓ-core.
    pub fn core(&self) -> Partition {
        tau(self, &MultiPartition::empty(self.level())).expect("levels agree")
    }

    /// Inverse of [`Charge::core`].
    pub fn of_core(nu: &Partition, ell: usize) -> Result<Charge> {
        if !nu.is_core(ell) {
            return Err(Error::NotCore(nu.to_string(), ell));
        }
        Ok(runner_decomposition(nu, ell).0)
    }
}

fn charges_rec(ell: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Charge>) {
    if cur.len() + 1 == ell {
        let last = -cur.iter().sum::<i64>();
        if last.abs() <= bound {
            cur.push(last);
            out.push(Charge { entries: cur.clone() });
            cur.pop();
        }
        return;
    }
    for x in -bound..=bound {
        cur.push(x);
        charges_rec(ell, bound, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Charge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        let entries = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad charge entry '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        Charge::new(entries)
    }
}

/// A permutation of `{1, …, ℓ}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > images.len() || seen[x - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(ell: usize) -> Self {
        Perm((1..=ell).collect())
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(ell: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (1..=ell).collect();
        v.swap(a - 1, b - 1);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x - 1] = i + 1;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Adjacent transpositions `j_1, j_2, …` with `self = (j_k j_k+1) ∘ … ∘ (j_1 j_1+1)`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(j) = (1..cur.len()).find(|&j| cur.apply(j) > cur.apply(j + 1)) {
            word.push(j);
            cur = cur.compose(&Perm::transposition(cur.len(), j, j + 1));
        }
        word
    }

    /// All permutations of `{1, …, ell}` in lexicographic order.
    pub fn all(ell: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; ell];
        perms_rec(ell, &mut cur, &mut used, &mut out);
        out
    }
}

fn perms_rec(ell: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
    if cur.len() == ell {
        out.push(Perm(cur.clone()));
        return;
    }
    for x in 1..=ell {
        if !used[x - 1] {
            used[x - 1] = true;
            cur.push(x);
            perms_rec(ell, cur, used, out);
            cur.pop();
            used[x - 1] = false;
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// `τ_s(λ)`: the partition with β_0-set `⋃_i {ℓ(x-1)+i : x ∈ β_{s_i}(λ^{(i)})}`.
pub fn tau(s: &Charge, lam: &MultiPartition) -> Result<Partition> {
    let ell = lam.level();
    if s.level() != ell {
        return Err(Error::LevelMismatch(s.level(), ell));
    }
    let e = ell as i64;
    let spread = s.entries.iter().max().unwrap() - s.entries.iter().min().unwrap();
    let mut count = lam.degree() + spread as usize + 2;
    loop {
        let mut all = BTreeSet::new();
        let mut floors = Vec::with_capacity(ell);
        for i in 1..=ell {
            let xs = lam.comp(i).beta_numbers(s.get(i), count).expect("count exceeds every length");
            let ys: Vec<i64> = xs.iter().map(|&x| e * (x - 1) + i as i64).collect();
            floors.push(*ys.last().unwrap());
            all.extend(ys);
        }
        let cut = *floors.iter().max().unwrap();
        // Each runner must be full from its own floor up to the common cut, so that
        // every integer below the cut lies in the untruncated set.
        let full = floors.iter().all(|&f| (f..cut).step_by(ell).all(|y| all.contains(&y)));
        if full {
            let set: Vec<i64> = all.range(cut..).copied().collect();
            return Partition::from_beta_numbers(&set, 0);
        }
        count *= 2;
    }
}

/// Splits `β_0(ν)` into ℓ runners and reads off each runner's charge and partition.
fn runner_decomposition(nu: &Partition, ell: usize) -> (Charge, MultiPartition) {
    let e = ell as i64;
    let count = nu.len() + ell;
    let beta = nu.beta_numbers(0, count).expect("count exceeds length");
    let mut runners: Vec<Vec<i64>> = vec![Vec::new(); ell];
    for y in beta {
        // y = ℓ(x-1) + i with 1 ≤ i ≤ ℓ
        let i = (y - 1).rem_euclid(e) + 1;
        runners[(i - 1) as usize].push((y - i) / e + 1);
    }
    let mut charges = Vec::with_capacity(ell);
    let mut comps = Vec::with_capacity(ell);
    for xs in &runners {
        let c = xs.last().unwrap() + xs.len() as i64 - 1;
        charges.push(c);
        comps.push(Partition::from_beta_numbers(xs, c).expect("runner is a staircase at its charge"));
    }
    (Charge::new(charges).expect("runner charges of β_0 sum to zero"), MultiPartition::new(comps))
}

/// Inverse of [`tau`] on partitions with ℓ-core `τ_s(∅)`.
pub fn tau_inverse(s: &Charge, nu: &Partition) -> Result<MultiPartition> {
    let (charge, lam) = runner_decomposition(nu, s.level());
    if charge != *s {
        return Err(Error::WrongCore { nu: nu.to_string(), charge: s.to_string() });
    }
    Ok(lam)
}
