//! Integer partitions: dominance, β-numbers, contents, cores and J-hearts.
//!
//! Diagram nodes are `(p, q)` with `q` the (1-based) row and `1 <= p <= λ_q`;
//! the residue of a node is `p - q`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of comparing two elements of a (pre)order.
///
/// `Less` means the left operand is strictly below the right one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rel {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Rel {
    pub fn flip(self) -> Rel {
        match self {
            Rel::Less => Rel::Greater,
            Rel::Greater => Rel::Less,
            r => r,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Less => "<",
            Rel::Greater => ">",
            Rel::Equal => "=",
            Rel::Incomparable => "||",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&x| x > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `j`-th part, 1-based, zero past the end.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first).map(|c| self.parts.iter().filter(|&&x| x > c).count()).collect();
        Partition { parts }
    }

    /// Dominance comparison; `Less` means `self ◁ other`.
    pub fn dominance(&self, other: &Partition) -> Result<Rel> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(dominance_of_prefixes(prefix_sums(&self.parts), prefix_sums(&other.parts)))
    }

    /// `self ⊴ other`, for partitions of equal degree.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Ok(Rel::Less) | Ok(Rel::Equal))
    }

    /// `n(λ) = Σ λ_i (i-1)`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &x)| i * x).sum()
    }

    /// Iterates the nodes `(p, q)` of the diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |p| (p, r + 1)))
    }

    pub fn beta_numbers(&self, s: i64, count: usize) -> Result<Vec<i64>> {
        if count < self.len() {
            return Err(Error::BetaCountTooSmall { parts: self.len(), count });
        }
        Ok((1..=count).map(|j| self.part(j) as i64 + s + 1 - j as i64).collect())
    }

    /// Inverse of [`Partition::beta_numbers`]: the entries below the given ones are
    /// taken to continue the staircase `s + 1 - j`.
    pub fn from_beta_numbers(set: &[i64], s: i64) -> Result<Partition> {
        let mut b = set.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        if b.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotStaircase(s));
        }
        let mut parts = Vec::with_capacity(b.len());
        for (j, &x) in b.iter().enumerate() {
            let part = x - s + j as i64;
            if part < 0 {
                return Err(Error::NotStaircase(s));
            }
            parts.push(part as usize);
        }
        Partition::new(parts)
    }

    /// `(cont_0, …, cont_{ℓ-1})`: node counts per residue class mod `ℓ`.
    pub fn content_counts(&self, ell: usize) -> Vec<usize> {
        let mut out = vec![0; ell];
        for (p, q) in self.nodes() {
            out[residue_class(p as i64 - q as i64, ell)] += 1;
        }
        out
    }

    /// The ℓ-core, by sliding beads down the runners of an ℓ-abacus.
    pub fn ell_core(&self, ell: usize) -> Partition {
        if ell <= 1 {
            return Partition::empty();
        }
        let count = self.len() + ell;
        let beta = self.beta_numbers(0, count).expect("count covers all parts");
        let floor = 1 - count as i64;
        let mut per_runner = vec![0usize; ell];
        for &y in &beta {
            per_runner[residue_class(y - floor, ell)] += 1;
        }
        let mut slid = Vec::with_capacity(count);
        for (r, &k) in per_runner.iter().enumerate() {
            for t in 0..k {
                slid.push(floor + r as i64 + (t * ell) as i64);
            }
        }
        Partition::from_beta_numbers(&slid, 0).expect("abacus positions stay above the floor")
    }

    pub fn is_core(&self, ell: usize) -> bool {
        self.ell_core(ell) == *self
    }

    /// Removable boxes as `(q, p, residue class mod ℓ)`, top row first.
    pub fn removable_boxes(&self, ell: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for q in 1..=self.len() {
            let p = self.part(q);
            if p > self.part(q + 1) {
                out.push((q, p, residue_class(p as i64 - q as i64, ell)));
            }
        }
        out
    }

    /// Removes the box at the end of row `q` (which must be removable).
    pub fn remove_box(&self, q: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[q - 1] -= 1;
        Partition::new(parts).expect("removing a removable box keeps the parts decreasing")
    }

    /// The J-heart: strip `j`-removable boxes with `j ∈ J` until none remain.
    ///
    /// Boxes are removed leftmost-lowest first.
    pub fn j_heart(&self, j: &BTreeSet<usize>, ell: usize) -> Partition {
        let mut cur = self.clone();
        loop {
            let next = cur.removable_boxes(ell).into_iter().rev().find(|&(_, _, i)| j.contains(&i));
            match next {
                Some((q, _, _)) => cur = cur.remove_box(q),
                None => return cur,
            }
        }
    }

    /// Lists every partition of `n` in reverse-lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, &mut cur, &mut out);
        out
    }
}

fn partitions_rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for k in (1..=max.min(n)).rev() {
        cur.push(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop();
    }
}

/// Least non-negative representative of `r` mod `ell`.
pub fn residue_class(r: i64, ell: usize) -> usize {
    r.rem_euclid(ell as i64) as usize
}

pub(crate) fn prefix_sums(xs: &[usize]) -> Vec<usize> {
    xs.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Compares two prefix-sum sequences (padded with their last value).
pub(crate) fn dominance_of_prefixes(a: Vec<usize>, b: Vec<usize>) -> Rel {
    let len = a.len().max(b.len());
    let at = |v: &Vec<usize>, i: usize| v.get(i).copied().or(v.last().copied()).unwrap_or(0);
    let (mut le, mut ge) = (true, true);
    for i in 0..len {
        let (x, y) = (at(&a, i), at(&b, i));
        le &= x <= y;
        ge &= x >= y;
    }
    match (le, ge) {
        (true, true) => Rel::Equal,
        (true, false) => Rel::Less,
        (false, true) => Rel::Greater,
        (false, false) => Rel::Incomparable,
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition '{t}' must be bracketed")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in '{t}'")));
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    /// Column-count transpose, kept separate from the library routine.
    fn transpose_by_columns(l: &Partition) -> Partition {
        let mut cols = vec![0usize; l.part(1)];
        for (pp, _) in l.nodes() {
            cols[pp - 1] += 1;
        }
        p(&cols)
    }

    /// Content counts from β-numbers: Σ_j #{y ≤ ℓj+i : y ∉ β_0} − max(ℓj+i, 0).
    fn content_counts_from_beta(l: &Partition, ell: usize) -> Vec<usize> {
        let count = l.len() + l.degree() + ell + 2;
        let beta: BTreeSet<i64> = l.beta_numbers(0, count).unwrap().into_iter().collect();
        let lo = *beta.iter().next().unwrap();
        let hi = l.part(1) as i64 + 1;
        let e = ell as i64;
        (0..e)
            .map(|i| {
                let mut total = 0i64;
                let mut j = lo.div_euclid(e) - 1;
                while e * j + i <= hi + e {
                    let k = e * j + i;
                    let gaps = (lo..=k).filter(|y| !beta.contains(y)).count() as i64;
                    total += gaps - k.max(0);
                    j += 1;
                }
                total as usize
            })
            .collect()
    }

    /// Removes rim ℓ-hooks from the diagram until none has hook length ℓ.
    fn core_by_rim_hooks(l: &Partition, ell: usize) -> Partition {
        let mut cur = l.clone();
        'outer: loop {
            let t = cur.transpose();
            for i in 1..=cur.len() {
                for j in 1..=cur.part(i) {
                    let hook = cur.part(i) - j + t.part(j) - i + 1;
                    if hook == ell {
                        let k = t.part(j);
                        let mut parts = cur.parts().to_vec();
                        for r in i..k {
                            parts[r - 1] = cur.part(r + 1) - 1;
                        }
                        parts[k - 1] = j - 1;
                        cur = p(&parts);
                        continue 'outer;
                    }
                }
            }
            return cur;
        }
    }

    fn heart_all_orders(l: &Partition, j: &BTreeSet<usize>, ell: usize, out: &mut BTreeSet<Partition>) {
        let boxes: Vec<_> = l.removable_boxes(ell).into_iter().filter(|b| j.contains(&b.2)).collect();
        if boxes.is_empty() {
            out.insert(l.clone());
        }
        for (q, _, _) in boxes {
            heart_all_orders(&l.remove_box(q), j, ell, out);
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[4]).transpose(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[5, 5, 3, 1, 1]).transpose(), p(&[5, 3, 3, 2, 2]));
        assert_eq!(p(&[5, 5, 3, 1, 1]).transpose(), transpose_by_columns(&p(&[5, 5, 3, 1, 1])));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[1, 1, 1]).dominance(&p(&[2, 1])).unwrap(), Rel::Less);
        assert_eq!(p(&[3, 3]).dominance(&p(&[4, 1, 1])).unwrap(), Rel::Incomparable);
        assert_eq!(p(&[2, 1]).dominance(&p(&[2, 1])).unwrap(), Rel::Equal);
        assert!(matches!(p(&[2]).dominance(&p(&[2, 1])), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn n_statistic_examples() {
        assert_eq!(p(&[5]).n_statistic(), 0);
        assert_eq!(p(&[1, 1, 1, 1]).n_statistic(), 6);
        assert_eq!(p(&[5, 5, 3, 1, 1]).n_statistic(), 18);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(Partition::empty().beta_numbers(0, 3).unwrap(), vec![0, -1, -2]);
        assert_eq!(p(&[1]).beta_numbers(0, 3).unwrap(), vec![1, -1, -2]);
        assert_eq!(p(&[2, 1]).beta_numbers(5, 4).unwrap(), vec![7, 5, 3, 2]);
        assert!(p(&[2, 1]).beta_numbers(0, 1).is_err());
        assert_eq!(Partition::from_beta_numbers(&[0, -1, -2], 0).unwrap(), Partition::empty());
        assert_eq!(Partition::from_beta_numbers(&[1, -1, -2], 0).unwrap(), p(&[1]));
        assert_eq!(Partition::from_beta_numbers(&[2, -1, -2], 0).unwrap(), p(&[2]));
        assert!(Partition::from_beta_numbers(&[2, 2], 0).is_err());
        assert!(Partition::from_beta_numbers(&[-5, -6], 0).is_err());
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[5, 5, 3, 1, 1]).content_counts(3), vec![6, 4, 5]);
        assert_eq!(Partition::empty().content_counts(4), vec![0; 4]);
        assert_eq!(p(&[2]).content_counts(2), vec![1, 1]);
    }

    #[test]
    fn content_counts_match_beta_formula() {
        for n in 0..=12 {
            for l in Partition::all(n) {
                for ell in 1..=4 {
                    assert_eq!(l.content_counts(ell), content_counts_from_beta(&l, ell), "{l} ell={ell}");
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(p(&[1, 1]).ell_core(2), Partition::empty());
        assert_eq!(p(&[2, 1]).ell_core(2), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).ell_core(3), p(&[3, 1]).ell_core(3).ell_core(3));
        assert_eq!(p(&[5, 5, 3, 1, 1]).ell_core(1), Partition::empty());
    }

    #[test]
    fn core_matches_rim_hook_removal() {
        for n in 0..=10 {
            for l in Partition::all(n) {
                for ell in 2..=4 {
                    let core = l.ell_core(ell);
                    assert_eq!(core, core_by_rim_hooks(&l, ell), "{l} ell={ell}");
                    assert_eq!((l.degree() - core.degree()) % ell, 0);
                }
            }
        }
    }

    #[test]
    fn equal_core_iff_equal_contents() {
        for n in 0..=8 {
            let all = Partition::all(n);
            for ell in 2..=4 {
                for a in &all {
                    for b in &all {
                        assert_eq!(a.ell_core(ell) == b.ell_core(ell), a.content_counts(ell) == b.content_counts(ell));
                    }
                }
            }
        }
    }

    #[test]
    fn removable_examples() {
        assert!(Partition::empty().removable_boxes(2).is_empty());
        assert_eq!(p(&[2]).removable_boxes(2), vec![(1, 2, 1)]);
        assert_eq!(p(&[2, 1]).removable_boxes(2), vec![(1, 2, 1), (2, 1, 1)]);
    }

    #[test]
    fn heart_examples() {
        let l = p(&[4, 2, 1]);
        assert_eq!(l.j_heart(&set(&[]), 3), l);
        assert_eq!(l.j_heart(&set(&[0, 1, 2]), 3), Partition::empty());
        assert_eq!(p(&[2]).j_heart(&set(&[1]), 2), p(&[1]));
    }

    #[test]
    fn heart_is_order_independent() {
        for n in 0..=8 {
            for l in Partition::all(n) {
                for ell in 2..=3 {
                    for mask in 0..(1usize << ell) {
                        let j: BTreeSet<usize> = (0..ell).filter(|i| mask >> i & 1 == 1).collect();
                        let mut ends = BTreeSet::new();
                        heart_all_orders(&l, &j, ell, &mut ends);
                        let heart = l.j_heart(&j, ell);
                        assert_eq!(ends.into_iter().collect::<Vec<_>>(), vec![heart.clone()]);
                        assert_eq!(heart.j_heart(&j, ell), heart);
                        assert!((1..=heart.len()).all(|q| heart.part(q) <= l.part(q)));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[5, 5, 3, 1, 1]).to_string(), "[5,5,3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[5,5,3,1,1]".parse::<Partition>().unwrap(), p(&[5, 5, 3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..7, 0..7).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn transpose_involution(l in arb_partition()) {
            prop_assert_eq!(l.transpose().transpose(), l.clone());
            prop_assert_eq!(l.transpose().degree(), l.degree());
        }

        #[test]
        fn dominance_reverses_under_transpose(a in arb_partition(), b in arb_partition()) {
            if a.degree() == b.degree() {
                let r = a.dominance(&b).unwrap();
                prop_assert_eq!(b.transpose().dominance(&a.transpose()).unwrap(), r);
            }
        }

        #[test]
        fn beta_roundtrip(l in arb_partition(), s in -6i64..6, slack in 0usize..5) {
            let b = l.beta_numbers(s, l.len() + slack).unwrap();
            prop_assert!(b.windows(2).all(|w| w[0] > w[1]));
            prop_assert_eq!(Partition::from_beta_numbers(&b, s).unwrap(), l);
        }

        #[test]
        fn contents_sum_to_degree(l in arb_partition(), ell in 1usize..6) {
            prop_assert_eq!(l.content_counts(ell).iter().sum::<usize>(), l.degree());
        }

        #[test]
        fn core_is_fixpoint(l in arb_partition(), ell in 2usize..5) {
            let c = l.ell_core(ell);
            prop_assert!(c.is_core(ell));
            prop_assert_eq!((l.degree() - c.degree()) % ell, 0);
        }
    }

    #[test]
    fn strict_dominance_lowers_n() {
        for n in 0..=8 {
            let all = Partition::all(n);
            for a in &all {
                for b in &all {
                    if a.dominance(b).unwrap() == Rel::Less {
                        assert!(b.n_statistic() < a.n_statistic());
                    }
                }
            }
        }
    }
}
