//! Double orders on a finite set `A = {0, …, n−1}` (`n ≤ 8`), their
//! classification, the posets `(R(A),⊑)` and `(R⁺(A),⊆)` and the functors
//! between them.

mod functors;
mod universe;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{element_name, Permutation};

pub use functors::{f_map, g_map, g_of_sd_f};
pub use universe::{double_by_filter, poset_leq, regular_by_blocks, OrderClass, OrderUniverse, PosetVariant};

/// Largest ground set a [`Relation`] can hold.
pub const MAX_GROUND: usize = 8;

/// A binary relation on `{0, …, n−1}`; bit `b` of `rows[a]` is `a R b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: u8,
    rows: [u8; MAX_GROUND],
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        Relation {
            n: n as u8,
            rows: [0; MAX_GROUND],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Relation::empty(n);
        for &(a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    /// The relation induced by a level function: `a < b` iff `h(a) < h(b)`.
    pub fn from_levels(levels: &[usize]) -> Self {
        let n = levels.len();
        let mut r = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if levels[a] < levels[b] {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// The total order listing `seq` in increasing order.
    pub fn chain(n: usize, seq: &[usize]) -> Self {
        let mut r = Relation::empty(n);
        for (i, &a) in seq.iter().enumerate() {
            for &b in &seq[i + 1..] {
                r.insert(a, b);
            }
        }
        r
    }

    pub fn from_matrix(m: &[Vec<bool>]) -> Result<Self> {
        let n = m.len();
        if n > MAX_GROUND || m.iter().any(|row| row.len() != n) {
            return Err(Error::argument("relation matrix must be square and at most 8×8"));
        }
        let mut r = Relation::empty(n);
        for (a, row) in m.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v {
                    r.insert(a, b);
                }
            }
        }
        Ok(r)
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|a| (0..self.len()).map(|b| self.contains(a, b)).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.rows[..self.len()].iter().all(|&r| r == 0)
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.rows[a] & (1 << b) != 0
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.len() && b < self.len());
        self.rows[a] |= 1 << b;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| (0..n).filter(move |&b| self.contains(a, b)).map(move |b| (a, b)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.contains(a, b) || self.contains(b, a)
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.len()).all(|a| !self.contains(a, a))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len())
                .filter(|&b| self.contains(a, b))
                .all(|b| self.rows[b] & !self.rows[a] == 0)
        })
    }

    pub fn is_strict_order(&self) -> bool {
        self.is_irreflexive() && self.is_transitive()
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Relation) -> Relation {
        let mut r = *self;
        for (x, y) in r.rows.iter_mut().zip(&other.rows) {
            *x |= y;
        }
        r
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut r = *self;
        let n = self.len();
        for k in 0..n {
            for a in 0..n {
                if r.contains(a, k) {
                    r.rows[a] |= r.rows[k];
                }
            }
        }
        r
    }

    /// `R ∪̄ S`: transitive closure of the union; may be reflexive.
    pub fn union_bar(&self, other: &Relation) -> Relation {
        self.union(other).transitive_closure()
    }

    /// `self ∖ other`: the pairs of `self` that are incomparable in `other`.
    pub fn minus_comparable(&self, other: &Relation) -> Relation {
        let mut r = Relation::empty(self.len());
        for (a, b) in self.pairs() {
            if !other.comparable(a, b) {
                r.insert(a, b);
            }
        }
        r
    }

    /// `a (Rσ) b ⇔ σ(a) R σ(b)`.
    pub fn act(&self, sigma: &Permutation) -> Relation {
        let n = self.len();
        let mut r = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if self.contains(sigma.apply(a), sigma.apply(b)) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// The level function `h : A → {1, …, l}` when the relation is a
    /// semi-linear strict order; layers are peeled off from the minimal
    /// elements upward.
    pub fn level_function(&self) -> Option<Vec<usize>> {
        if !self.is_strict_order() {
            return None;
        }
        let n = self.len();
        let mut level = vec![0usize; n];
        let mut remaining: u8 = if n == 8 { 0xff } else { (1u8 << n) - 1 };
        let mut current = 0;
        while remaining != 0 {
            current += 1;
            let minimal: Vec<usize> = (0..n)
                .filter(|&b| remaining & (1 << b) != 0)
                .filter(|&b| (0..n).all(|a| remaining & (1 << a) == 0 || !self.contains(a, b)))
                .collect();
            for &b in &minimal {
                level[b] = current;
                remaining &= !(1 << b);
            }
        }
        (Relation::from_levels(&level) == *self).then_some(level)
    }

    /// All strict partial orders on `n` elements, by brute force over the
    /// off-diagonal relations.
    pub fn all_strict_orders(n: usize) -> Vec<Relation> {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        (0u64..1 << slots.len())
            .filter_map(|mask| {
                let mut r = Relation::empty(n);
                for (bit, &(a, b)) in slots.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        r.insert(a, b);
                    }
                }
                r.is_strict_order().then_some(r)
            })
            .collect()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .map(|(a, b)| format!("{}<{}", element_name(a), element_name(b)))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A pair `(x<, y<)` of relations; the constructors do not enforce any
/// property, [`DoubleOrder::classify`] reports them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleOrder {
    pub x: Relation,
    pub y: Relation,
}

/// Why a pair fails to be a pair of strict orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderDefect {
    pub component: char,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub defects: Vec<OrderDefect>,
    pub is_double: bool,
    pub is_regular: bool,
    /// Decided by the direct criterion: `o` is the union of all regular
    /// double orders contained in it.
    pub is_semi_regular: bool,
    pub level: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrderJson {
    pub x: Vec<Vec<bool>>,
    pub y: Vec<Vec<bool>>,
    pub labels: Vec<String>,
}

impl DoubleOrder {
    pub fn new(x: Relation, y: Relation) -> Self {
        assert_eq!(x.len(), y.len(), "relations on different ground sets");
        DoubleOrder { x, y }
    }

    pub fn from_pairs(n: usize, x: &[(usize, usize)], y: &[(usize, usize)]) -> Self {
        DoubleOrder::new(Relation::from_pairs(n, x), Relation::from_pairs(n, y))
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_strict_pair(&self) -> bool {
        self.x.is_strict_order() && self.y.is_strict_order()
    }

    pub fn is_double(&self) -> bool {
        let n = self.len();
        self.is_strict_pair()
            && (0..n).all(|a| {
                (a + 1..n).all(|b| self.x.comparable(a, b) || self.y.comparable(a, b))
            })
    }

    pub fn is_regular(&self) -> bool {
        self.is_double()
            && self.x.level_function().is_some()
            && self.x.pairs().all(|(a, b)| !self.y.comparable(a, b))
    }

    /// Semi-regularity via the direct criterion (see [`Classification`]).
    pub fn is_semi_regular(&self) -> bool {
        if !self.is_double() {
            return false;
        }
        let mut acc = DoubleOrder::new(Relation::empty(self.len()), Relation::empty(self.len()));
        for r in regular_orders_within(self) {
            acc = DoubleOrder::new(acc.x.union(&r.x), acc.y.union(&r.y));
        }
        let acc = DoubleOrder::new(acc.x.transitive_closure(), acc.y.transitive_closure());
        acc == *self
    }

    pub fn classify(&self) -> Classification {
        let mut defects = Vec::new();
        for (name, r) in [('x', &self.x), ('y', &self.y)] {
            if !r.is_irreflexive() {
                defects.push(OrderDefect {
                    component: name,
                    reason: "reflexive pair",
                });
            }
            if !r.is_transitive() {
                defects.push(OrderDefect {
                    component: name,
                    reason: "not transitive",
                });
            }
        }
        Classification {
            is_double: self.is_double(),
            is_regular: self.is_regular(),
            is_semi_regular: self.is_semi_regular(),
            level: self.x.level_function(),
            defects,
        }
    }

    /// `o₁ ∪̄ o₂`; `None` when either closure is reflexive.
    pub fn union_bar(&self, other: &DoubleOrder) -> Option<DoubleOrder> {
        let x = self.x.union_bar(&other.x);
        let y = self.y.union_bar(&other.y);
        (x.is_irreflexive() && y.is_irreflexive()).then_some(DoubleOrder { x, y })
    }

    /// `⊆`: both components contained.
    pub fn is_subset(&self, other: &DoubleOrder) -> bool {
        self.x.is_subset(&other.x) && self.y.is_subset(&other.y)
    }

    /// `⊑`: `x` contained, `y` containing.
    pub fn is_sqsubset(&self, other: &DoubleOrder) -> bool {
        self.x.is_subset(&other.x) && other.y.is_subset(&self.y)
    }

    pub fn act(&self, sigma: &Permutation) -> DoubleOrder {
        DoubleOrder {
            x: self.x.act(sigma),
            y: self.y.act(sigma),
        }
    }

    pub fn to_json(&self) -> OrderJson {
        OrderJson {
            x: self.x.to_matrix(),
            y: self.y.to_matrix(),
            labels: (0..self.len()).map(element_name).collect(),
        }
    }

    pub fn from_json(json: &OrderJson) -> Result<Self> {
        let x = Relation::from_matrix(&json.x)?;
        let y = Relation::from_matrix(&json.y)?;
        if x.len() != y.len() || json.labels.len() != x.len() {
            return Err(Error::Parse("order components have different sizes".into()));
        }
        Ok(DoubleOrder { x, y })
    }

    /// Blocks of a regular order: the `x`-levels, each listed in `y`-order.
    /// This is the monotone numbering read block by block.
    pub fn blocks(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_regular() {
            return None;
        }
        let level = self.x.level_function()?;
        let top = level.iter().copied().max().unwrap_or(0);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); top];
        for (a, &l) in level.iter().enumerate() {
            blocks[l - 1].push(a);
        }
        for block in &mut blocks {
            // y restricted to a block is total, so counting predecessors sorts it
            block.sort_by_key(|&a| block_rank(&self.y, a));
        }
        Some(blocks)
    }

    /// The regular order with the given blocks (`x` between blocks, `y`
    /// inside a block in listed order).
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> DoubleOrder {
        let mut level = vec![0; n];
        let mut y = Relation::empty(n);
        for (l, block) in blocks.iter().enumerate() {
            for &a in block {
                level[a] = l + 1;
            }
            y = y.union(&Relation::chain(n, block));
        }
        DoubleOrder::new(Relation::from_levels(&level), y)
    }
}

fn block_rank(y: &Relation, a: usize) -> usize {
    (0..y.len()).filter(|&b| y.contains(b, a)).count()
}

/// All regular double orders `r ⊆ o`.
fn regular_orders_within(o: &DoubleOrder) -> Vec<DoubleOrder> {
    universe::regular_by_blocks(o.len())
        .into_iter()
        .filter(|r| r.is_subset(o))
        .collect()
}

impl fmt::Display for DoubleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{} y{}", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;

    #[test]
    fn classification_examples() {
        let o = DoubleOrder::from_pairs(2, &[(A, B)], &[]);
        let c = o.classify();
        assert!(c.is_double && c.is_regular);
        assert_eq!(c.level, Some(vec![1, 2]));

        let o = DoubleOrder::from_pairs(2, &[(A, B)], &[(A, B)]);
        let c = o.classify();
        assert!(c.is_double && !c.is_regular && c.is_semi_regular);

        let o = DoubleOrder::from_pairs(2, &[], &[]);
        assert!(!o.classify().is_double);
    }

    #[test]
    fn defects_are_reported() {
        let o = DoubleOrder::from_pairs(3, &[(0, 1), (1, 2)], &[(0, 0)]);
        let c = o.classify();
        assert!(!c.is_double);
        assert_eq!(c.defects.len(), 2);
        assert!(c.defects.iter().any(|d| d.component == 'x' && d.reason == "not transitive"));
        assert!(c.defects.iter().any(|d| d.component == 'y' && d.reason == "reflexive pair"));
    }

    #[test]
    fn union_bar_examples() {
        let ab = Relation::from_pairs(2, &[(A, B)]);
        let ba = Relation::from_pairs(2, &[(B, A)]);
        assert!(!ab.union_bar(&ba).is_irreflexive());
        let o1 = DoubleOrder::from_pairs(2, &[(A, B)], &[]);
        let o2 = DoubleOrder::from_pairs(2, &[], &[(A, B)]);
        assert_eq!(
            o1.union_bar(&o2),
            Some(DoubleOrder::from_pairs(2, &[(A, B)], &[(A, B)]))
        );
        assert_eq!(o1.union_bar(&o1), Some(o1));
    }

    #[test]
    fn poset_relations() {
        let lo = DoubleOrder::from_pairs(2, &[], &[(A, B)]);
        let hi = DoubleOrder::from_pairs(2, &[(A, B)], &[]);
        assert!(lo.is_sqsubset(&hi));
        assert!(lo.is_sqsubset(&lo));
        assert!(!hi.is_sqsubset(&lo));
    }

    #[test]
    fn level_function_rejects_non_semilinear() {
        // a < b only, c incomparable: not semi-linear on three elements
        let r = Relation::from_pairs(3, &[(0, 1)]);
        assert_eq!(r.level_function(), None);
        let r = Relation::from_pairs(3, &[(0, 2), (1, 2)]);
        assert_eq!(r.level_function(), Some(vec![1, 1, 2]));
    }

    #[test]
    fn strict_order_counts() {
        // labelled posets on 1..=4 points
        let counts: Vec<usize> = (1..=4).map(|n| Relation::all_strict_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn blocks_round_trip() {
        let o = DoubleOrder::from_blocks(3, &[vec![1, 0], vec![2]]);
        assert!(o.is_regular());
        assert_eq!(o.blocks(), Some(vec![vec![1, 0], vec![2]]));
    }

    #[test]
    fn json_round_trip() {
        let o = DoubleOrder::from_pairs(2, &[(A, B)], &[]);
        let j = o.to_json();
        assert_eq!(j.labels, vec!["a", "b"]);
        assert_eq!(DoubleOrder::from_json(&j).unwrap(), o);
    }
}
