//! The scalar functions c, a, A, f on `P(ℓ, n)` and the orders they govern:
//! the c-order, the a-order, the geometric order and its extension to walls.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multipartitions::{tau, MultiPartition};
use crate::params::{c_coefficients, is_git_regular, ParamPoint};
use crate::partitions::{residue_class, Partition, Rel};
use crate::rat::{q, Q};
use crate::weyl::{alcove_data, AlcoveData, AlcoveMode, Sign};

/// `c_h(λ)`.
pub fn c_value(p: &ParamPoint, lam: &MultiPartition) -> Q {
    c_coefficients(lam).iter().zip(p.coords()).map(|(&a, x)| q(a as i128) * x).sum()
}

/// The c-order: `λ >_h μ` exactly when `c_h(μ) > c_h(λ)`.
pub fn c_compare(p: &ParamPoint, lam: &MultiPartition, mu: &MultiPartition) -> Rel {
    let (cl, cm) = (c_value(p, lam), c_value(p, mu));
    match cm.cmp(&cl) {
        std::cmp::Ordering::Greater => Rel::Greater,
        std::cmp::Ordering::Less => Rel::Less,
        std::cmp::Ordering::Equal => Rel::Equal,
    }
}

/// The a-function for `h > 0`, normalized to vanish on `((n), ∅, …, ∅)`.
pub fn a_value(p: &ParamPoint, lam: &MultiPartition) -> Result<Q> {
    if !p.h().is_positive() {
        return Err(Error::NonPositiveH);
    }
    let top = MultiPartition::top(lam.level(), lam.degree());
    Ok(a_prime(p, lam) - a_prime(p, &top))
}

fn a_prime(p: &ParamPoint, lam: &MultiPartition) -> Q {
    let ell = lam.level();
    let n = lam.degree();
    let h = p.h();
    let m: Vec<Q> = (1..=ell).map(|i| p.partial_sum(i)).collect();
    let b = |i: usize, u: usize| h * q((n + lam.comp(i).part(u)) as i128 - u as i128) + m[i - 1];
    let mut total = q(0);
    for i in 1..=ell {
        for j in i..=ell {
            for u in 1..=n {
                let v_start = if i == j { u + 1 } else { 1 };
                for v in v_start..=n {
                    total += b(i, u).min(b(j, v));
                }
            }
        }
    }
    for i in 1..=ell {
        for (u0, &len) in lam.comp(i).parts().iter().enumerate() {
            let u = u0 + 1;
            for k in 1..=len {
                let x = h * q((n + k) as i128 - u as i128) + m[i - 1];
                for mj in &m {
                    total -= x.min(*mj);
                }
            }
        }
    }
    total
}

/// The multipartition actually fed to `τ_s`: `ᵗ(w·λ)` for sign `+`, `ᵗ(w·λ̄)` for `-`.
fn transported(d: &AlcoveData, lam: &MultiPartition) -> MultiPartition {
    let base = match d.sign {
        Sign::Plus => lam.clone(),
        Sign::Minus => lam.bar(),
    };
    base.act(&d.w).transpose()
}

/// The partition labelling the fixed point of `λ` at `d`.
pub fn fixed_point_label(d: &AlcoveData, lam: &MultiPartition) -> Partition {
    tau(&d.s, &transported(d, lam)).expect("levels agree")
}

fn weighted_sum(d: &AlcoveData, nu: &Partition, weight: impl Fn(usize, usize) -> i128) -> Q {
    let ell = d.level();
    let total: Q =
        nu.nodes().map(|(pp, qq)| d.psi[residue_class(pp as i64 - qq as i64, ell)] * q(weight(pp, qq))).sum();
    d.scale * total
}

/// `A_θ(λ) = scale · Σ_{(p,q) ∈ ν} ψ_{res(p,q)}·(q-1)` with `ν` the fixed-point label.
pub fn a_big_value(p: &ParamPoint, lam: &MultiPartition, mode: AlcoveMode) -> Result<Q> {
    let d = alcove_data(p, mode)?;
    Ok(a_big_from(&d, lam))
}

pub fn a_big_from(d: &AlcoveData, lam: &MultiPartition) -> Q {
    weighted_sum(d, &fixed_point_label(d, lam), |_, qq| qq as i128 - 1)
}

/// `f_θ(λ) = scale · Σ_{(p,q) ∈ ν} ψ_{res(p,q)}·(p-q)`.
pub fn f_value(p: &ParamPoint, lam: &MultiPartition, mode: AlcoveMode) -> Result<Q> {
    let d = alcove_data(p, mode)?;
    Ok(f_from(&d, lam))
}

pub fn f_from(d: &AlcoveData, lam: &MultiPartition) -> Q {
    weighted_sum(d, &fixed_point_label(d, lam), |pp, qq| pp as i128 - qq as i128)
}

/// Geometric order from fixed-point labels: `λ ≺ μ` iff `ν_μ ◁ ν_λ`.
pub fn compare_labels(nu_lam: &Partition, nu_mu: &Partition) -> Rel {
    nu_mu.dominance(nu_lam).expect("labels in one τ_s image have equal degree")
}

/// The geometric order `≺_h` at a G.I.T.-regular point; `Less` means `λ ≺ μ`.
pub fn geometric_compare(p: &ParamPoint, lam: &MultiPartition, mu: &MultiPartition, mode: AlcoveMode) -> Result<Rel> {
    if !is_git_regular(p, lam.degree()) {
        return Err(Error::NotRegular(p.to_string()));
    }
    let d = alcove_data(p, mode)?;
    Ok(compare_labels(&fixed_point_label(&d, lam), &fixed_point_label(&d, mu)))
}

/// The wall-extended order at a point of facet type `J`, over all of `P(ℓ, n)`.
#[derive(Debug, Clone)]
pub struct FacetOrder {
    pub data: AlcoveData,
    pub elems: Vec<MultiPartition>,
    pub labels: Vec<Partition>,
    pub hearts: Vec<Partition>,
    /// `below[a][b]`: `ν_a ◁_J ν_b` after transitive closure.
    below: Vec<Vec<bool>>,
    /// Pairs present only because of the transitive closure.
    pub closure_added: Vec<(usize, usize)>,
}

impl FacetOrder {
    pub fn new(p: &ParamPoint, n: usize, mode: AlcoveMode) -> Result<Self> {
        let data = alcove_data(p, mode)?;
        let ell = data.level();
        let elems = MultiPartition::enumerate(ell, n);
        let labels: Vec<Partition> = elems.iter().map(|m| fixed_point_label(&data, m)).collect();
        let hearts: Vec<Partition> = labels.iter().map(|nu| nu.j_heart(&data.j, ell)).collect();
        let k = elems.len();
        let mut below = vec![vec![false; k]; k];
        for a in 0..k {
            for b in 0..k {
                below[a][b] = hearts[a] != hearts[b] && labels[a].dominance(&labels[b]).unwrap() == Rel::Less;
            }
        }
        let base = below.clone();
        for mid in 0..k {
            for a in 0..k {
                if below[a][mid] {
                    let mid_row = below[mid].clone();
                    for (dst, &x) in below[a].iter_mut().zip(&mid_row) {
                        *dst |= x;
                    }
                }
            }
        }
        let closure_added =
            (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| below[a][b] && !base[a][b]).collect();
        Ok(FacetOrder { data, elems, labels, hearts, below, closure_added })
    }

    pub fn index_of(&self, lam: &MultiPartition) -> Option<usize> {
        self.elems.iter().position(|m| m == lam)
    }

    /// `Less` means `elems[i] ⪯ elems[j]` strictly; `Equal` means the same J-class.
    pub fn compare_idx(&self, i: usize, j: usize) -> Rel {
        if self.hearts[i] == self.hearts[j] {
            Rel::Equal
        } else if self.below[j][i] {
            Rel::Less
        } else if self.below[i][j] {
            Rel::Greater
        } else {
            Rel::Incomparable
        }
    }

    /// J-classes as index lists, ordered by first member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_heart: BTreeMap<&Partition, Vec<usize>> = BTreeMap::new();
        for (i, h) in self.hearts.iter().enumerate() {
            by_heart.entry(h).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = by_heart.into_values().collect();
        out.sort();
        out
    }

    /// Fails if the J-classes are not compatible with the strict relation.
    pub fn relation(&self, provenance: String) -> Result<OrderRelation> {
        let k = self.elems.len();
        let table = (0..k).map(|i| (0..k).map(|j| self.compare_idx(i, j)).collect()).collect();
        OrderRelation::new(self.elems.iter().map(|m| m.to_string()).collect(), table, provenance)
    }
}

pub fn facet_compare(p: &ParamPoint, lam: &MultiPartition, mu: &MultiPartition, mode: AlcoveMode) -> Result<Rel> {
    if lam.level() != mu.level() || lam.level() != p.level() {
        return Err(Error::LevelMismatch(lam.level(), mu.level()));
    }
    let order = FacetOrder::new(p, lam.degree(), mode)?;
    let i = order.index_of(lam).ok_or(Error::DegreeMismatch(lam.degree(), mu.degree()))?;
    let j = order.index_of(mu).ok_or(Error::DegreeMismatch(lam.degree(), mu.degree()))?;
    Ok(order.compare_idx(i, j))
}

/// Fibres of `λ ↦ j_heart(ν_λ, J)` over `P(ℓ, n)`.
pub fn j_classes(p: &ParamPoint, n: usize, mode: AlcoveMode) -> Result<Vec<Vec<MultiPartition>>> {
    let order = FacetOrder::new(p, n, mode)?;
    Ok(order.classes().into_iter().map(|c| c.into_iter().map(|i| order.elems[i].clone()).collect()).collect())
}

/// A finite relation table whose strict part is a partial order and whose
/// `Equal` entries form an equivalence compatible with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    pub labels: Vec<String>,
    pub table: Vec<Vec<Rel>>,
    pub provenance: String,
}

impl OrderRelation {
    pub fn new(labels: Vec<String>, table: Vec<Vec<Rel>>, provenance: String) -> Result<Self> {
        let k = labels.len();
        if table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(Error::NotAnOrder("table is not square".into()));
        }
        for i in 0..k {
            if table[i][i] != Rel::Equal {
                return Err(Error::NotAnOrder(format!("{} is not equal to itself", labels[i])));
            }
            for j in 0..k {
                if table[j][i] != table[i][j].flip() {
                    return Err(Error::NotAnOrder(format!("{} and {} are not antisymmetric", labels[i], labels[j])));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let rij = table[i][j];
                if rij == Rel::Incomparable || i == j {
                    continue;
                }
                for l in 0..k {
                    let expected = match (rij, table[j][l]) {
                        (Rel::Less, Rel::Less) | (Rel::Less, Rel::Equal) | (Rel::Equal, Rel::Less) => Some(Rel::Less),
                        (Rel::Equal, Rel::Equal) => Some(Rel::Equal),
                        _ => None,
                    };
                    if let Some(e) = expected {
                        if table[i][l] != e {
                            return Err(Error::NotAnOrder(format!(
                                "{} {} {} {} {} but {} {} {}",
                                labels[i],
                                rij.symbol(),
                                labels[j],
                                table[j][l].symbol(),
                                labels[l],
                                labels[i],
                                table[i][l].symbol(),
                                labels[l]
                            )));
                        }
                    }
                }
            }
        }
        Ok(OrderRelation { labels, table, provenance })
    }

    /// Builds a relation from a comparison function on indices.
    pub fn from_fn(labels: Vec<String>, provenance: String, cmp: impl Fn(usize, usize) -> Rel) -> Result<Self> {
        let k = labels.len();
        let table = (0..k).map(|i| (0..k).map(|j| cmp(i, j)).collect()).collect();
        OrderRelation::new(labels, table, provenance)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Covering pairs `(lower, upper)`: `lower < upper` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if self.table[a][b] != Rel::Less {
                    continue;
                }
                let covered = (0..k).any(|c| self.table[a][c] == Rel::Less && self.table[c][b] == Rel::Less);
                if !covered {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                pairs.push(json!({"a": self.labels[i], "b": self.labels[j], "rel": self.table[i][j].symbol()}));
            }
        }
        json!({"provenance": self.provenance, "elements": self.labels, "pairs": pairs})
    }

    /// Hasse diagram in DOT, edges pointing from lower to upper.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph order {\n");
        let _ = writeln!(out, "  label=\"{}\";", self.provenance.replace('"', "'"));
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{l}\"];");
        }
        for (a, b) in self.hasse() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_table(&self) -> String {
        let width = self.labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut out = format!("# {}\n", self.provenance);
        for (i, l) in self.labels.iter().enumerate() {
            let row: Vec<&str> = self.table[i].iter().map(|r| r.symbol()).collect();
            let _ = writeln!(out, "{l:>width$}  {}", row.join(" "));
        }
        out
    }
}

fn mp_labels(elems: &[MultiPartition]) -> Vec<String> {
    elems.iter().map(|m| m.to_string()).collect()
}

pub fn c_order(p: &ParamPoint, n: usize) -> OrderRelation {
    let elems = MultiPartition::enumerate(p.level(), n);
    let vals: Vec<Q> = elems.iter().map(|m| c_value(p, m)).collect();
    OrderRelation::from_fn(mp_labels(&elems), format!("c-order at {p}"), |i, j| match vals[j].cmp(&vals[i]) {
        std::cmp::Ordering::Greater => Rel::Greater,
        std::cmp::Ordering::Less => Rel::Less,
        std::cmp::Ordering::Equal => Rel::Equal,
    })
    .expect("value orders are preorders")
}

/// The a-order: `λ` below `μ` when `a(λ) < a(μ)`.
pub fn a_order(p: &ParamPoint, n: usize) -> Result<OrderRelation> {
    let elems = MultiPartition::enumerate(p.level(), n);
    let vals = elems.iter().map(|m| a_value(p, m)).collect::<Result<Vec<Q>>>()?;
    OrderRelation::from_fn(mp_labels(&elems), format!("a-order at {p}"), |i, j| match vals[i].cmp(&vals[j]) {
        std::cmp::Ordering::Less => Rel::Less,
        std::cmp::Ordering::Greater => Rel::Greater,
        std::cmp::Ordering::Equal => Rel::Equal,
    })
}

pub fn geometric_order(p: &ParamPoint, n: usize, mode: AlcoveMode) -> Result<OrderRelation> {
    if !is_git_regular(p, n) {
        return Err(Error::NotRegular(p.to_string()));
    }
    let d = alcove_data(p, mode)?;
    let elems = MultiPartition::enumerate(p.level(), n);
    let labels: Vec<Partition> = elems.iter().map(|m| fixed_point_label(&d, m)).collect();
    OrderRelation::from_fn(mp_labels(&elems), format!("geometric order at {p} ({mode})"), |i, j| {
        compare_labels(&labels[i], &labels[j])
    })
}

pub fn facet_order(p: &ParamPoint, n: usize, mode: AlcoveMode) -> Result<OrderRelation> {
    let f = FacetOrder::new(p, n, mode)?;
    let j: Vec<String> = f.data.j.iter().map(|x| x.to_string()).collect();
    f.relation(format!("facet order at {p} ({mode}, J={{{}}})", j.join(",")))
}

pub fn dominance_order(ell: usize, n: usize) -> OrderRelation {
    let elems = MultiPartition::enumerate(ell, n);
    OrderRelation::from_fn(mp_labels(&elems), format!("dominance on P({ell},{n})"), |i, j| {
        elems[i].dominance(&elems[j]).unwrap()
    })
    .expect("dominance is a partial order")
}

pub fn partition_dominance_order(n: usize) -> OrderRelation {
    let elems = Partition::all(n);
    let labels = elems.iter().map(|p| p.to_string()).collect();
    OrderRelation::from_fn(labels, format!("dominance on P({n})"), |i, j| elems[i].dominance(&elems[j]).unwrap())
        .expect("dominance is a partial order")
}

/// Set of classes `{i : same J-heart}` keyed for quick lookup.
pub fn class_index(order: &FacetOrder) -> Vec<usize> {
    let mut ids = vec![0; order.elems.len()];
    for (c, members) in order.classes().iter().enumerate() {
        for &i in members {
            ids[i] = c;
        }
    }
    ids
}

/// Whether every element of `vals` agrees after subtracting a common constant.
pub fn differ_by_constant(a: &[Q], b: &[Q]) -> bool {
    let diffs: BTreeSet<Q> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    diffs.len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn pt(h: Q, hs: &[Q]) -> ParamPoint {
        ParamPoint::new(h, hs.to_vec())
    }

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    const C: AlcoveMode = AlcoveMode::Canonical;

    #[test]
    fn c_examples() {
        let p = pt(frac(-3, 2), &[frac(1, 3), frac(-2, 7), frac(5, 4)]);
        assert_eq!(c_value(&p, &MultiPartition::top(4, 5)), q(0));
        // λ(a, b, j) = ((a), …, (b) in slot j, …)
        for j in 2..=4 {
            for (a, b) in [(1usize, 1usize), (2, 3), (4, 1)] {
                let mut comps = vec![Partition::empty(); 4];
                comps[0] = Partition::new(vec![a]).unwrap();
                comps[j - 1] = Partition::new(vec![b]).unwrap();
                let lam = MultiPartition::new(comps);
                let expected = q(4 * b as i128) * (p.partial_sum(j) - q(a as i128) * p.h());
                assert_eq!(c_value(&p, &lam), expected);
            }
        }
        let h = frac(5, 3);
        for n in 1..=5 {
            for l in Partition::all(n) {
                let lam = MultiPartition::new(vec![l.clone()]);
                let expected = -(q((n * (n - 1) / 2) as i128) + q(l.n_statistic() as i128)
                    - q(l.transpose().n_statistic() as i128))
                    * h;
                assert_eq!(c_value(&pt(h, &[]), &lam), expected);
            }
        }
    }

    #[test]
    fn c_compare_examples() {
        let p = pt(q(-1), &[q(10)]);
        let all = MultiPartition::enumerate(2, 3);
        for (a, b) in [(0, 1), (3, 7), (9, 2)] {
            let (ca, cb) = (c_value(&p, &all[a]), c_value(&p, &all[b]));
            let r = c_compare(&p, &all[a], &all[b]);
            assert_eq!(r == Rel::Greater, cb > ca);
            assert_eq!(r == Rel::Less, cb < ca);
        }
        assert_eq!(c_compare(&p, &all[4], &all[4]), Rel::Equal);
        // H_1 = 0 makes ((1),∅) and (∅,(1)) tie.
        let wall = pt(q(-1), &[q(0)]);
        assert_eq!(c_compare(&wall, &mp("[[1],[]]"), &mp("[[],[1]]")), Rel::Equal);
        // Every generic c-order is total.
        let r = c_order(&pt(q(-1), &[frac(1, 3)]), 3);
        assert!(r.table.iter().flatten().all(|&x| x != Rel::Incomparable));
    }

    #[test]
    fn a_examples() {
        let h = frac(7, 3);
        let p = pt(h, &[]);
        assert_eq!(a_value(&p, &mp("[[1,1]]")).unwrap(), h);
        assert_eq!(a_value(&p, &mp("[[2]]")).unwrap(), q(0));
        assert_eq!(a_value(&pt(q(-1), &[]), &mp("[[2]]")), Err(Error::NonPositiveH));
        let p2 = pt(q(1), &[frac(1, 3)]);
        assert_eq!(a_value(&p2, &MultiPartition::top(2, 3)).unwrap(), q(0));
    }

    #[test]
    fn a_big_at_the_barycentre() {
        for ell in 2..=3usize {
            let p = pt(q(-1), &vec![frac(1, ell as i128); ell - 1]);
            let d = alcove_data(&p, C).unwrap();
            for lam in MultiPartition::enumerate(ell, 3) {
                let nu = tau(&d.s, &lam.transpose()).unwrap();
                assert_eq!(a_big_from(&d, &lam), frac(nu.n_statistic() as i128, ell as i128));
            }
        }
        assert_eq!(a_big_value(&pt(q(-1), &[q(1)]), &MultiPartition::empty(2), C).unwrap(), q(0));
    }

    #[test]
    fn level_one_a_big_tracks_a() {
        let p = pt(q(2), &[]);
        let all = MultiPartition::enumerate(1, 5);
        let a: Vec<Q> = all.iter().map(|m| a_value(&p, m).unwrap()).collect();
        let big: Vec<Q> = all.iter().map(|m| a_big_value(&p, m, C).unwrap()).collect();
        assert!(differ_by_constant(&a, &big));
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_value(&pt(q(-1), &[q(1)]), &MultiPartition::empty(2), C).unwrap(), q(0));
        let p = pt(q(-1), &[frac(1, 3)]);
        let all = MultiPartition::enumerate(2, 3);
        let f: Vec<Q> = all.iter().map(|m| f_value(&p, m, C).unwrap()).collect();
        let c: Vec<Q> = all.iter().map(|m| c_value(&p, m)).collect();
        assert!(differ_by_constant(&f, &c));
        assert_eq!(f_value(&pt(q(0), &[q(1)]), &all[0], C), Err(Error::ZeroDelta));
    }

    #[test]
    fn geometric_examples() {
        let p = pt(q(-1), &[q(10)]);
        assert_eq!(geometric_compare(&p, &mp("[[],[1,1]]"), &mp("[[2],[]]"), C).unwrap(), Rel::Less);
        let l = mp("[[1],[1]]");
        assert_eq!(geometric_compare(&p, &l, &l, C).unwrap(), Rel::Equal);
        assert!(matches!(geometric_compare(&pt(q(-1), &[q(1)]), &l, &mp("[[2],[]]"), C), Err(Error::NotRegular(_))));
        for n in 1..=5 {
            let neg = geometric_order(&pt(q(-1), &[]), n, C).unwrap();
            let pos = geometric_order(&pt(q(1), &[]), n, C).unwrap();
            let dom = dominance_order(1, n);
            assert_eq!(neg.table, dom.table);
            let flipped: Vec<Vec<Rel>> = dom.table.iter().map(|r| r.iter().map(|x| x.flip()).collect()).collect();
            assert_eq!(pos.table, flipped);
        }
    }

    #[test]
    fn facet_examples() {
        let regular = pt(q(-1), &[frac(1, 3)]);
        assert_eq!(facet_order(&regular, 3, C).unwrap().table, geometric_order(&regular, 3, C).unwrap().table);
        let wall = pt(q(-1), &[q(0)]);
        let f = FacetOrder::new(&wall, 1, C).unwrap();
        assert_eq!(f.data.j, BTreeSet::from([1]));
        assert_eq!(f.hearts, vec![Partition::new(vec![1]).unwrap(); 2]);
        assert_eq!(facet_compare(&wall, &mp("[[1],[]]"), &mp("[[],[1]]"), C).unwrap(), Rel::Equal);
        assert_eq!(j_classes(&wall, 1, C).unwrap(), vec![vec![mp("[[1],[]]"), mp("[[],[1]]")]]);
    }

    #[test]
    fn class_count_constant_on_a_facet() {
        // Two points on the wall H_1 = 0 with h < 0 lie in the same facet.
        let a = j_classes(&pt(q(-1), &[q(0)]), 3, C).unwrap();
        let b = j_classes(&pt(frac(-5, 2), &[q(0)]), 3, C).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(j_classes(&pt(q(-1), &[frac(1, 3)]), 3, C).unwrap().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn hasse_examples() {
        let chain =
            OrderRelation::from_fn(vec!["a".into(), "b".into(), "c".into()], "chain".into(), |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => Rel::Less,
                std::cmp::Ordering::Greater => Rel::Greater,
                std::cmp::Ordering::Equal => Rel::Equal,
            })
            .unwrap();
        assert_eq!(chain.hasse(), vec![(0, 1), (1, 2)]);
        let anti = OrderRelation::from_fn(vec!["a".into(), "b".into()], "anti".into(), |i, j| {
            if i == j {
                Rel::Equal
            } else {
                Rel::Incomparable
            }
        })
        .unwrap();
        assert!(anti.hasse().is_empty());
        let dom = partition_dominance_order(4);
        assert_eq!(dom.labels, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(dom.hasse(), vec![(1, 0), (2, 1), (3, 2), (4, 3)]);
        let dom6 = partition_dominance_order(6);
        assert_eq!(dom6.hasse().len(), 12);
    }

    #[test]
    fn relation_rejects_cycles() {
        let labels: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        let cyc = |i: usize, j: usize| {
            if i == j {
                Rel::Equal
            } else if (i + 1) % 3 == j {
                Rel::Less
            } else {
                Rel::Greater
            }
        };
        assert!(matches!(OrderRelation::from_fn(labels, "cycle".into(), cyc), Err(Error::NotAnOrder(_))));
    }

    #[test]
    fn dot_output() {
        let dot = partition_dominance_order(3).to_dot();
        assert!(dot.starts_with("digraph order {"));
        assert!(dot.contains("n1 -> n0;"));
        assert!(dot.contains("n2 [label=\"[1,1,1]\"];"));
    }
}
