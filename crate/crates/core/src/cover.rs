//! The cover of the ordered configuration space of `A` in the plane by the
//! sets `U(⋖)`, in exact rational arithmetic.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::orders::{DoubleOrder, OrderClass, OrderUniverse, Relation};
use crate::par::Execution;
use crate::perm::{element_name, Permutation};

/// A labelling `f : A → ℚ²`, stored as `(f_x(a), f_y(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoint {
    pub coords: Vec<(BigRational, BigRational)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub points: BTreeMap<String, [String; 2]>,
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl LabeledPoint {
    pub fn from_integers(coords: &[(i64, i64)]) -> Self {
        LabeledPoint {
            coords: coords.iter().map(|&(x, y)| (rational(x), rational(y))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// No two elements share both coordinates.
    pub fn is_injective(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.coords[a] != self.coords[b]))
    }

    /// `(fσ)(a) = f(σ(a))`, so that `f ∈ U(⋖) ⇔ fσ ∈ U(⋖σ)`.
    pub fn act(&self, sigma: &Permutation) -> LabeledPoint {
        LabeledPoint {
            coords: (0..self.len()).map(|a| self.coords[sigma.apply(a)].clone()).collect(),
        }
    }

    pub fn to_json(&self) -> ConfigurationJson {
        ConfigurationJson {
            points: self
                .coords
                .iter()
                .enumerate()
                .map(|(a, (x, y))| (element_name(a), [ratio_string(x), ratio_string(y)]))
                .collect(),
        }
    }

    /// Elements must be named `a`, `b`, … without gaps.
    pub fn from_json(json: &ConfigurationJson) -> Result<Self> {
        let mut coords = Vec::with_capacity(json.points.len());
        for a in 0..json.points.len() {
            let name = element_name(a);
            let [x, y] = json
                .points
                .get(&name)
                .ok_or_else(|| Error::Parse(format!("missing point for element {name}")))?;
            let parse = |s: &str| {
                BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
            };
            coords.push((parse(x)?, parse(y)?));
        }
        Ok(LabeledPoint { coords })
    }
}

fn respects(r: &Relation, f: &LabeledPoint, coord: impl Fn(&(BigRational, BigRational)) -> &BigRational) -> bool {
    r.pairs().all(|(a, b)| coord(&f.coords[a]) < coord(&f.coords[b]))
}

/// `f ∈ U(⋖)`: both components are respected strictly.
pub fn u_contains(o: &DoubleOrder, f: &LabeledPoint) -> bool {
    f.len() == o.len() && respects(&o.x, f, |p| &p.0) && respects(&o.y, f, |p| &p.1)
}

/// 1-based ranks of a linear extension of a strict order (ties broken by
/// element index).
fn extension_ranks(r: &Relation) -> Vec<i64> {
    let n = r.len();
    let mut rank = vec![0; n];
    let mut placed = vec![false; n];
    for next in 1..=n as i64 {
        let a = (0..n)
            .find(|&a| !placed[a] && (0..n).all(|b| placed[b] || b == a || !r.contains(b, a)))
            .expect("strict orders have minimal elements");
        placed[a] = true;
        rank[a] = next;
    }
    rank
}

/// A point of `U(⋖)`: the rank functions of linear extensions of both
/// components. Requires both components to be strict orders.
pub fn witness_point(o: &DoubleOrder) -> Result<LabeledPoint> {
    if !o.is_strict_pair() {
        return Err(Error::argument(format!("{o} is not a pair of strict orders")));
    }
    let rx = extension_ranks(&o.x);
    let ry = extension_ranks(&o.y);
    let f = LabeledPoint {
        coords: rx.iter().zip(&ry).map(|(&x, &y)| (rational(x), rational(y))).collect(),
    };
    debug_assert!(u_contains(o, &f) && f.is_injective());
    Ok(f)
}

/// `⋖_f`: `x` compares `f_x`, `y` compares `f_y` among points with equal `f_x`.
pub fn point_to_order(f: &LabeledPoint) -> Result<DoubleOrder> {
    if !f.is_injective() {
        return Err(Error::argument("configuration is not injective"));
    }
    let n = f.len();
    let mut x = Relation::empty(n);
    let mut y = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = (&f.coords[a], &f.coords[b]);
            if pa.0 < pb.0 {
                x.insert(a, b);
            } else if pa.0 == pb.0 && pa.1 < pb.1 {
                y.insert(a, b);
            }
        }
    }
    Ok(DoubleOrder::new(x, y))
}

/// A cycle `a₀ < a₁ < ⋯ < a₀` in one component of `o₁ ∪ o₂`, which
/// certifies `U(o₁) ∩ U(o₂) = ∅`. The component is `'x'` or `'y'`.
pub fn union_cycle(o1: &DoubleOrder, o2: &DoubleOrder) -> Option<(char, Vec<usize>)> {
    [('x', o1.x.union(&o2.x)), ('y', o1.y.union(&o2.y))]
        .into_iter()
        .find_map(|(name, r)| find_cycle(&r).map(|c| (name, c)))
}

fn find_cycle(r: &Relation) -> Option<Vec<usize>> {
    let n = r.len();
    for start in 0..n {
        // shortest path back to `start`
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                if !r.contains(v, w) {
                    continue;
                }
                if w == start {
                    let mut cycle = vec![v];
                    let mut u = v;
                    while u != start {
                        u = prev[u];
                        cycle.push(u);
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    None
}

fn cycle_is_certificate(o1: &DoubleOrder, o2: &DoubleOrder, (name, cycle): &(char, Vec<usize>)) -> bool {
    let r = if *name == 'x' { o1.x.union(&o2.x) } else { o1.y.union(&o2.y) };
    !cycle.is_empty() && (0..cycle.len()).all(|i| r.contains(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// A point of `U(o₁)` outside `U(o₂)`; exists exactly when `o₂ ⊄ o₁`.
pub fn separating_witness(o1: &DoubleOrder, o2: &DoubleOrder) -> Result<Option<LabeledPoint>> {
    if !o1.is_strict_pair() {
        return Err(Error::argument(format!("{o1} is not a pair of strict orders")));
    }
    let missing_x = o2.x.pairs().find(|&(a, b)| !o1.x.contains(a, b));
    let missing_y = o2.y.pairs().find(|&(a, b)| !o1.y.contains(a, b));
    // reversing a missing pair keeps the component acyclic
    let reversed = |r: &Relation, (a, b): (usize, usize)| r.union(&Relation::from_pairs(r.len(), &[(b, a)])).transitive_closure();
    let o = match (missing_x, missing_y) {
        (Some(p), _) => DoubleOrder::new(reversed(&o1.x, p), o1.y),
        (None, Some(p)) => DoubleOrder::new(o1.x, reversed(&o1.y, p)),
        (None, None) => return Ok(None),
    };
    let f = witness_point(&o)?;
    if !u_contains(o1, &f) || u_contains(o2, &f) {
        return Err(Error::consistency("separating witness failed to separate"));
    }
    Ok(Some(f))
}

/// A random injective configuration with coordinates `k/den`, `0 ≤ k < n`,
/// so that equal `x`-coordinates are common.
pub fn random_configuration(n: usize, rng: &mut impl Rng) -> LabeledPoint {
    let den = rng.gen_range(1..=4i64);
    loop {
        let coords: Vec<(BigRational, BigRational)> = (0..n)
            .map(|_| {
                let x = BigRational::new(rng.gen_range(0..n.max(2) as i64).into(), den.into());
                let y = BigRational::new(rng.gen_range(-(n as i64)..=n as i64).into(), rng.gen_range(1..=3i64).into());
                (x, y)
            })
            .collect();
        let f = LabeledPoint { coords };
        if f.is_injective() {
            return f;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub n: usize,
    pub semi_regular: usize,
    pub regular: usize,
    pub pairs: usize,
    pub nonempty_pairs: usize,
    pub empty_pairs: usize,
    /// Intersection rule: witness for every irreflexive union, cycle for
    /// every reflexive one, and sampled points agree.
    pub complete: bool,
    /// `U(o) ∩ U(oσ) = ∅` for `σ ≠ 1`, with cycle certificates.
    pub proper: bool,
    pub equivariant: bool,
    /// Every sampled configuration lies in `U(⋖_f)` with `⋖_f` regular.
    pub covering: bool,
    pub samples: usize,
    /// `o₁ ⊆ o₂ ⇔ U(o₂) ⊆ U(o₁)`, with witnesses for the failures.
    pub antitone: bool,
    /// Distinct semi-regular orders have distinct cover sets.
    pub injective: bool,
    pub counterexample: Option<String>,
}

impl CoverReport {
    pub fn holds(&self) -> bool {
        self.complete && self.proper && self.equivariant && self.covering && self.antitone
    }
}

/// Exhaustive check of the cover over `R⁺(A)` plus `samples` random
/// configurations drawn from a seeded generator.
pub fn verify_cover(n: usize, samples: usize, seed: u64, caps: &Caps, exec: Execution) -> Result<CoverReport> {
    let plus = OrderUniverse::new(n, OrderClass::SemiRegular, caps, exec)?;
    let regular = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let orders = &plus.orders;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probes: Vec<LabeledPoint> = (0..samples).map(|_| random_configuration(n, &mut rng)).collect();
    let sigmas = Permutation::all(n);
    let mut report = CoverReport {
        n,
        semi_regular: orders.len(),
        regular: regular.len(),
        pairs: orders.len() * orders.len(),
        nonempty_pairs: 0,
        empty_pairs: 0,
        complete: true,
        proper: true,
        equivariant: true,
        covering: true,
        samples,
        antitone: true,
        injective: true,
        counterexample: None,
    };

    // (nonempty, complete, antitone, injective, first problem) per row
    type Row = (usize, bool, bool, bool, Option<String>);
    let rows: Vec<Result<Row>> = exec.map(orders, |o1| {
        let mut nonempty = 0;
        let (mut complete, mut antitone, mut injective) = (true, true, true);
        let mut problem = None;
        for o2 in orders {
            match o1.union_bar(o2) {
                Some(u) => {
                    nonempty += 1;
                    let w = witness_point(&u)?;
                    let sampled = probes
                        .iter()
                        .all(|p| (u_contains(o1, p) && u_contains(o2, p)) == u_contains(&u, p));
                    if !(u.is_double() && u_contains(o1, &w) && u_contains(o2, &w) && sampled) {
                        complete = false;
                        problem.get_or_insert(format!("intersection rule fails for {o1} and {o2}"));
                    }
                }
                None => {
                    let ok = union_cycle(o1, o2).is_some_and(|c| cycle_is_certificate(o1, o2, &c));
                    if !ok {
                        complete = false;
                        problem.get_or_insert(format!("no cycle certificate for {o1} and {o2}"));
                    }
                }
            }
            // U(o2) ⊆ U(o1) iff o1 ⊆ o2
            if o1.is_subset(o2) {
                if !u_contains(o1, &witness_point(o2)?) {
                    antitone = false;
                    problem.get_or_insert(format!("witness of {o2} is outside U({o1})"));
                }
            } else if separating_witness(o2, o1)?.is_none() {
                antitone = false;
                problem.get_or_insert(format!("no point of U({o2}) outside U({o1})"));
            }
            if o1 != o2 && separating_witness(o1, o2)?.is_none() && separating_witness(o2, o1)?.is_none() {
                injective = false;
            }
        }
        Ok((nonempty, complete, antitone, injective, problem))
    });
    for row in rows {
        let (nonempty, complete, antitone, injective, problem) = row?;
        report.nonempty_pairs += nonempty;
        report.complete &= complete;
        report.antitone &= antitone;
        report.injective &= injective;
        if report.counterexample.is_none() {
            report.counterexample = problem;
        }
    }
    report.empty_pairs = report.pairs - report.nonempty_pairs;

    for o in orders {
        for sigma in sigmas.iter().filter(|s| !s.is_identity()) {
            let moved = o.act(sigma);
            let certified = o.union_bar(&moved).is_none()
                && union_cycle(o, &moved).is_some_and(|c| cycle_is_certificate(o, &moved, &c));
            if !certified {
                report.proper = false;
                report
                    .counterexample
                    .get_or_insert(format!("U({o}) meets its translate by {sigma}"));
            }
        }
        for sigma in &sigmas {
            let moved = o.act(sigma);
            let w = witness_point(o)?;
            let same = u_contains(&moved, &w.act(sigma))
                && probes.iter().all(|p| u_contains(o, p) == u_contains(&moved, &p.act(sigma)));
            if !same {
                report.equivariant = false;
                report
                    .counterexample
                    .get_or_insert(format!("U({o}) is not carried to U({o}σ) by {sigma}"));
            }
        }
    }

    for p in &probes {
        let o = point_to_order(p)?;
        if !(regular.contains(&o) && o.is_regular() && u_contains(&o, p)) {
            report.covering = false;
            report
                .counterexample
                .get_or_insert(format!("configuration {:?} is not covered", p.to_json().points));
        }
    }
    Ok(report)
}
