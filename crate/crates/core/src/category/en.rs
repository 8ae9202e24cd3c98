use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::quotient::{quotient_category, GroupAction};
use super::{FiniteCategory, Morphism};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::orders::{DoubleOrder, OrderClass, OrderUniverse, PosetVariant};
use crate::par::Execution;
use crate::perm::Permutation;

/// A subset of `{1, …, n−1}`; bit `b−1` stands for `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnObject(pub u32);

impl EnObject {
    pub fn from_breaks(breaks: &[usize]) -> Self {
        EnObject(breaks.iter().fold(0, |m, &b| m | 1 << (b - 1)))
    }

    pub fn breaks(self) -> Vec<usize> {
        (1..=32).filter(|&b| self.0 & (1 << (b - 1)) != 0).collect()
    }

    pub fn contains_set(self, other: EnObject) -> bool {
        self.0 & other.0 == other.0
    }

    /// Block of each position `0..n` (0-based positions, 0-based blocks).
    fn block_of(self, n: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(n);
        let mut block = 0;
        for i in 0..n {
            out.push(block);
            if self.0 & (1 << i) != 0 {
                block += 1;
            }
        }
        out
    }
}

impl fmt::Display for EnObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.breaks().iter().map(|b| b.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct EnCategory {
    pub n: usize,
    pub category: FiniteCategory,
    pub objects: Vec<EnObject>,
    /// The permutation carried by each morphism.
    pub perms: Vec<Permutation>,
    index: HashMap<(usize, usize, Vec<usize>), usize>,
}

impl EnCategory {
    pub fn object_index(&self, b: EnObject) -> Option<usize> {
        self.objects.iter().position(|&o| o == b)
    }

    pub fn morphism_index(&self, source: usize, target: usize, phi: &Permutation) -> Option<usize> {
        self.index.get(&(source, target, phi.images().to_vec())).copied()
    }
}

/// Condition (x): `φ` maps every `B'`-block onto itself.
fn block_preserving(phi: &[usize], block: &[usize]) -> bool {
    phi.iter().enumerate().all(|(i, &p)| block[i] == block[p])
}

/// Condition (x'): positions in earlier `B'`-blocks keep their order.
fn cross_order_preserving(phi: &[usize], block: &[usize]) -> bool {
    let n = phi.len();
    (0..n).all(|i| (i + 1..n).all(|j| block[i] == block[j] || phi[i] < phi[j]))
}

/// Condition (y): `φ` increases along every `B`-block.
fn increasing_on_blocks(phi: &[usize], block: &[usize]) -> bool {
    (1..phi.len()).all(|i| block[i - 1] != block[i] || phi[i - 1] < phi[i])
}

/// Builds `𝓔ₙ` by filtering all permutations for each pair `B ⊇ B'`.
pub fn build_en(n: usize, caps: &Caps, exec: Execution) -> Result<EnCategory> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    caps.check("n for E_n", n, caps.en_size)?;
    let objects: Vec<EnObject> = (0..1u32 << (n - 1)).map(EnObject).collect();
    let blocks: Vec<Vec<usize>> = objects.iter().map(|o| o.block_of(n)).collect();
    let all = Permutation::all(n);
    let k = objects.len();
    let found: Vec<Result<Vec<(usize, usize, Permutation)>>> = exec.map_range(k * k, |pair| {
        let (s, t) = (pair / k, pair % k);
        if !objects[s].contains_set(objects[t]) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for phi in &all {
            let x = block_preserving(phi.images(), &blocks[t]);
            if x != cross_order_preserving(phi.images(), &blocks[t]) {
                return Err(Error::consistency(format!(
                    "conditions (x) and (x') disagree on {phi} for {} -> {}",
                    objects[s], objects[t]
                )));
            }
            if x && increasing_on_blocks(phi.images(), &blocks[s]) {
                out.push((s, t, phi.clone()));
            }
        }
        Ok(out)
    });
    let mut morphisms = Vec::new();
    let mut perms = Vec::new();
    let mut index = HashMap::new();
    for batch in found {
        for (s, t, phi) in batch? {
            index.insert((s, t, phi.images().to_vec()), morphisms.len());
            caps.check_cells("morphisms of E_n", morphisms.len() + 1)?;
            morphisms.push(Morphism {
                source: s,
                target: t,
                label: phi.to_string(),
            });
            perms.push(phi);
        }
    }
    let id = Permutation::identity(n);
    let identities = (0..k)
        .map(|o| {
            index
                .get(&(o, o, id.images().to_vec()))
                .copied()
                .ok_or_else(|| Error::consistency(format!("identity missing at {}", objects[o])))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut outgoing = vec![Vec::new(); k];
    for (f, m) in morphisms.iter().enumerate() {
        outgoing[m.source].push(f);
    }
    let mut compose = HashMap::new();
    for (f, mf) in morphisms.iter().enumerate() {
        for &g in &outgoing[mf.target] {
            let gf = perms[g].compose(&perms[f]);
            let target = morphisms[g].target;
            let h = index.get(&(mf.source, target, gf.images().to_vec())).ok_or_else(|| {
                Error::consistency(format!("E_n is not closed under composing {} after {}", perms[g], perms[f]))
            })?;
            compose.insert((g, f), *h);
        }
    }
    caps.check_cells("composition table of E_n", compose.len())?;
    let labels = objects.iter().map(|o| o.to_string()).collect();
    let category = FiniteCategory::new(labels, morphisms, identities, compose)?;
    Ok(EnCategory {
        n,
        category,
        objects,
        perms,
        index,
    })
}

/// `F(⋖)`: the break set of the cumulative block sizes. `None` for
/// non-regular orders.
pub fn en_object(o: &DoubleOrder) -> Option<EnObject> {
    let blocks = o.blocks()?;
    let mut breaks = Vec::new();
    let mut total = 0;
    for b in &blocks[..blocks.len().saturating_sub(1)] {
        total += b.len();
        breaks.push(total);
    }
    Some(EnObject::from_breaks(&breaks))
}

/// The monotone numbering `a₁, …, aₙ` (0-based elements) of a regular order.
pub fn monotone_numbering(o: &DoubleOrder) -> Option<Vec<usize>> {
    Some(o.blocks()?.concat())
}

/// Result of checking the functor `(R(A),⊒) → 𝓔ₙ` and its quotient.
#[derive(Debug, Clone, Serialize)]
pub struct EnFunctor {
    pub n: usize,
    /// `𝓔ₙ` object index of each order.
    pub object_map: Vec<usize>,
    /// `𝓔ₙ` morphism index of each morphism of `(R(A),⊒)`.
    pub morphism_map: Vec<usize>,
    pub lands_in_en: bool,
    pub functorial: bool,
    pub sigma_invariant: bool,
    pub quotient_objects: usize,
    pub quotient_morphisms: usize,
    pub en_objects: usize,
    pub en_morphisms: usize,
    pub bijective_on_objects: bool,
    pub bijective_on_morphisms: bool,
    pub counterexample: Option<String>,
}

impl EnFunctor {
    pub fn holds(&self) -> bool {
        self.lands_in_en
            && self.functorial
            && self.sigma_invariant
            && self.bijective_on_objects
            && self.bijective_on_morphisms
    }
}

fn is_bijection(map: &[usize], size: usize) -> bool {
    let mut seen = vec![false; size];
    map.len() == size && map.iter().all(|&x| x < size && !std::mem::replace(&mut seen[x], true))
}

/// Builds `F` on `(R(A),⊒)` for `|A| = n` and checks that it lands in
/// `𝓔ₙ`, is a functor, is `Σ_A`-invariant, and that the induced functor on
/// the quotient by `Σ_A` is bijective on objects and morphisms.
pub fn en_functor(n: usize, caps: &Caps, exec: Execution) -> Result<EnFunctor> {
    let universe = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let c = universe.poset(PosetVariant::SqSupset, exec)?.to_category();
    let en = build_en(n, caps, exec)?;
    let mut report = EnFunctor {
        n,
        object_map: Vec::new(),
        morphism_map: Vec::new(),
        lands_in_en: true,
        functorial: true,
        sigma_invariant: true,
        quotient_objects: 0,
        quotient_morphisms: 0,
        en_objects: en.objects.len(),
        en_morphisms: en.category.morphisms().len(),
        bijective_on_objects: false,
        bijective_on_morphisms: false,
        counterexample: None,
    };
    let mut numbering = Vec::with_capacity(universe.len());
    for o in &universe.orders {
        let b = en_object(o).ok_or_else(|| Error::consistency("order in R(A) is not regular"))?;
        report.object_map.push(en.object_index(b).expect("every break set is an object"));
        numbering.push(monotone_numbering(o).expect("regular"));
    }
    for m in c.morphisms() {
        // a'_{φ(i)} = a_i
        let mut position = vec![0; n];
        for (i, &a) in numbering[m.target].iter().enumerate() {
            position[a] = i;
        }
        let phi: Vec<usize> = numbering[m.source].iter().map(|&a| position[a]).collect();
        let phi = Permutation::from_images(phi).expect("numberings are bijective");
        let s = report.object_map[m.source];
        let t = report.object_map[m.target];
        match en.morphism_index(s, t, &phi) {
            Some(f) => report.morphism_map.push(f),
            None => {
                report.lands_in_en = false;
                report.counterexample.get_or_insert(format!(
                    "{phi} for {} ⊒ {} is not a morphism of E_n",
                    universe.orders[m.source], universe.orders[m.target]
                ));
                report.morphism_map.push(usize::MAX);
            }
        }
    }
    if !report.lands_in_en {
        return Ok(report);
    }
    for (f, mf) in c.morphisms().iter().enumerate() {
        for &g in c.outgoing(mf.target) {
            let lhs = report.morphism_map[c.compose(g, f)];
            let rhs = en.category.compose(report.morphism_map[g], report.morphism_map[f]);
            if lhs != rhs {
                report.functorial = false;
                report
                    .counterexample
                    .get_or_insert(format!("F does not preserve the composite of {g} after {f}"));
            }
        }
    }
    for o in 0..c.objects().len() {
        if report.morphism_map[c.identity(o)] != en.category.identity(report.object_map[o]) {
            report.functorial = false;
        }
    }
    let act = GroupAction::on_poset_category(&c, universe.sigma_action())?;
    for (obj, mor) in act.on_objects.iter().zip(&act.on_morphisms) {
        let objects_fixed = (0..obj.len()).all(|o| report.object_map[obj[o]] == report.object_map[o]);
        let morphisms_fixed =
            (0..mor.len()).all(|f| report.morphism_map[mor[f]] == report.morphism_map[f]);
        if !(objects_fixed && morphisms_fixed) {
            report.sigma_invariant = false;
            report.counterexample.get_or_insert("F is not invariant under the symmetric group".into());
        }
    }
    let q = quotient_category(&c, &act)?;
    report.quotient_objects = q.object_orbits.len();
    report.quotient_morphisms = q.morphism_orbits.len();
    let induced_objects: Vec<usize> = q.object_orbits.iter().map(|o| report.object_map[o[0]]).collect();
    let induced_morphisms: Vec<usize> =
        q.morphism_orbits.iter().map(|o| report.morphism_map[o[0]]).collect();
    report.bijective_on_objects = is_bijection(&induced_objects, report.en_objects);
    report.bijective_on_morphisms = is_bijection(&induced_morphisms, report.en_morphisms);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn en(n: usize) -> EnCategory {
        build_en(n, &Caps::default(), Execution::Sequential).unwrap()
    }

    fn hom_count(e: &EnCategory, s: &[usize], t: &[usize]) -> usize {
        let s = e.object_index(EnObject::from_breaks(s)).unwrap();
        let t = e.object_index(EnObject::from_breaks(t)).unwrap();
        e.category.hom(s, t).len()
    }

    #[test]
    fn e2_has_two_parallel_arrows() {
        let e = en(2);
        assert_eq!(e.objects.len(), 2);
        assert_eq!(hom_count(&e, &[1], &[]), 2);
        assert_eq!(hom_count(&e, &[], &[1]), 0);
        assert_eq!(e.category.morphisms().len(), 4);
        assert!(e.category.is_loop_free());
    }

    #[test]
    fn e3_hom_counts() {
        let e = en(3);
        assert_eq!(hom_count(&e, &[1, 2], &[]), 6);
        assert_eq!(hom_count(&e, &[1], &[]), 3);
        assert_eq!(hom_count(&e, &[1, 2], &[1]), 2);
        for o in 0..e.objects.len() {
            assert_eq!(e.category.hom(o, o).len(), 1);
        }
    }

    #[test]
    fn en_is_loop_free_up_to_five() {
        for n in 1..=5 {
            assert!(en(n).category.is_loop_free(), "n = {n}");
        }
    }

    #[test]
    fn break_set_and_numbering() {
        // blocks {a,b} then {c}, y: a < b
        let o = DoubleOrder::from_blocks(3, &[vec![0, 1], vec![2]]);
        assert_eq!(en_object(&o), Some(EnObject::from_breaks(&[2])));
        assert_eq!(monotone_numbering(&o), Some(vec![0, 1, 2]));
    }

    #[test]
    fn functor_small_cases() {
        for n in 1..=3 {
            let r = en_functor(n, &Caps::default(), Execution::Sequential).unwrap();
            assert!(r.holds(), "n = {n}: {r:?}");
        }
        let r = en_functor(2, &Caps::default(), Execution::Sequential).unwrap();
        assert_eq!((r.quotient_objects, r.quotient_morphisms), (2, 4));
    }
}
