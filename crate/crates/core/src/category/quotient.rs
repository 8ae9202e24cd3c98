use std::collections::HashMap;

use serde::Serialize;

use super::nerve::{simplex_face, Nerve};
use super::{FiniteCategory, Morphism};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::par::Execution;

/// A right action of a finite group on a category, element by element:
/// `on_objects[g][c] = cg`, `on_morphisms[g][f] = fg`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub on_objects: Vec<Vec<usize>>,
    pub on_morphisms: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks that every element acts by a functor that is bijective on
    /// objects and morphisms.
    pub fn new(
        c: &FiniteCategory,
        on_objects: Vec<Vec<usize>>,
        on_morphisms: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if on_objects.len() != on_morphisms.len() {
            return Err(Error::structural("object and morphism tables differ in length"));
        }
        for (g, (obj, mor)) in on_objects.iter().zip(&on_morphisms).enumerate() {
            if !is_permutation(obj, c.objects().len()) || !is_permutation(mor, c.morphisms().len()) {
                return Err(Error::contract(format!("group element {g} is not a bijection")));
            }
            for (f, m) in c.morphisms().iter().enumerate() {
                let image = c.morphism(mor[f]);
                if image.source != obj[m.source] || image.target != obj[m.target] {
                    return Err(Error::contract(format!(
                        "group element {g} does not preserve the endpoints of morphism {f}"
                    )));
                }
                for &h in c.outgoing(m.target) {
                    if mor[c.compose(h, f)] != c.compose(mor[h], mor[f]) {
                        return Err(Error::contract(format!(
                            "group element {g} does not preserve composition"
                        )));
                    }
                }
            }
            for o in 0..c.objects().len() {
                if mor[c.identity(o)] != c.identity(obj[o]) {
                    return Err(Error::contract(format!(
                        "group element {g} does not preserve identities"
                    )));
                }
            }
        }
        Ok(GroupAction {
            on_objects,
            on_morphisms,
        })
    }

    /// Action on a poset category induced by permutations of its elements.
    pub fn on_poset_category(c: &FiniteCategory, perms: Vec<Vec<usize>>) -> Result<Self> {
        let lookup: HashMap<(usize, usize), usize> = c
            .morphisms()
            .iter()
            .enumerate()
            .map(|(f, m)| ((m.source, m.target), f))
            .collect();
        let mut on_morphisms = Vec::with_capacity(perms.len());
        for p in &perms {
            let mut row = Vec::with_capacity(c.morphisms().len());
            for m in c.morphisms() {
                let f = lookup.get(&(p[m.source], p[m.target])).ok_or_else(|| {
                    Error::contract("permutation does not preserve the order")
                })?;
                row.push(*f);
            }
            on_morphisms.push(row);
        }
        GroupAction::new(c, perms, on_morphisms)
    }

    pub fn order(&self) -> usize {
        self.on_objects.len()
    }

    fn is_trivial(&self, g: usize) -> bool {
        self.on_objects[g].iter().enumerate().all(|(i, &j)| i == j)
            && self.on_morphisms[g].iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `cg ≠ c` for every object `c` and every non-identity `g`.
    pub fn is_free(&self) -> bool {
        (0..self.order())
            .filter(|&g| !self.is_trivial(g))
            .all(|g| self.on_objects[g].iter().enumerate().all(|(i, &j)| i != j))
    }

    /// Exactly one element acts trivially.
    fn trivial_count(&self) -> usize {
        (0..self.order()).filter(|&g| self.is_trivial(g)).count()
    }
}

fn is_permutation(v: &[usize], n: usize) -> bool {
    if v.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    v.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

/// Orbit numbering: orbits ordered by their least member.
fn orbits(n: usize, tables: &[Vec<usize>]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut class = vec![usize::MAX; n];
    let mut members = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut orbit: Vec<usize> = tables.iter().map(|t| t[x]).collect();
        orbit.push(x);
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            class[y] = id;
        }
        members.push(orbit);
    }
    (class, members)
}

/// `C/G` for a free action, with the projection functor.
#[derive(Debug, Clone)]
pub struct QuotientCategory {
    pub category: FiniteCategory,
    pub object_class: Vec<usize>,
    pub morphism_class: Vec<usize>,
    pub object_orbits: Vec<Vec<usize>>,
    pub morphism_orbits: Vec<Vec<usize>>,
}

/// The quotient category: objects and morphisms are orbits; `[g]∘[f]` is
/// the orbit of `g'∘f` where `g'` is the member of `[g]` leaving the target
/// of `f` (unique because the action is free).
pub fn quotient_category(c: &FiniteCategory, act: &GroupAction) -> Result<QuotientCategory> {
    if act.trivial_count() != 1 {
        return Err(Error::contract("group list must contain the identity exactly once"));
    }
    if !act.is_free() {
        return Err(Error::contract("quotient categories need a free action"));
    }
    let (object_class, object_orbits) = orbits(c.objects().len(), &act.on_objects);
    let (morphism_class, morphism_orbits) = orbits(c.morphisms().len(), &act.on_morphisms);
    let objects = object_orbits
        .iter()
        .map(|o| format!("[{}]", c.objects()[o[0]]))
        .collect();
    let morphisms: Vec<Morphism> = morphism_orbits
        .iter()
        .map(|o| {
            let m = c.morphism(o[0]);
            Morphism {
                source: object_class[m.source],
                target: object_class[m.target],
                label: m.label.clone(),
            }
        })
        .collect();
    let identities = object_orbits
        .iter()
        .map(|o| morphism_class[c.identity(o[0])])
        .collect();
    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); object_orbits.len()];
    for (i, m) in morphisms.iter().enumerate() {
        by_source[m.source].push(i);
    }
    let mut compose = HashMap::new();
    for (alpha, orbit) in morphism_orbits.iter().enumerate() {
        let f = orbit[0];
        let t = c.morphism(f).target;
        for &beta in &by_source[morphisms[alpha].target] {
            let g = morphism_orbits[beta]
                .iter()
                .copied()
                .find(|&g| c.morphism(g).source == t)
                .ok_or_else(|| Error::consistency("orbit misses a composable representative"))?;
            compose.insert((beta, alpha), morphism_class[c.compose(g, f)]);
        }
    }
    let category = FiniteCategory::new(objects, morphisms, identities, compose)?;
    // |C/G(cG, c'G)| = Σ_g |C(c, c'g)|
    for (a, oa) in object_orbits.iter().enumerate() {
        for (b, ob) in object_orbits.iter().enumerate() {
            let expected: usize = ob.iter().map(|&target| c.hom(oa[0], target).len()).sum();
            if category.hom(a, b).len() != expected {
                return Err(Error::consistency(format!(
                    "hom count between orbits {a} and {b} is {}, expected {expected}",
                    category.hom(a, b).len()
                )));
            }
        }
    }
    Ok(QuotientCategory {
        category,
        object_class,
        morphism_class,
        object_orbits,
        morphism_orbits,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NerveQuotientReport {
    /// Orbit counts of `N(C)/G` per dimension.
    pub orbit_counts: Vec<usize>,
    /// Simplex counts of `N(C/G)` per dimension.
    pub quotient_counts: Vec<usize>,
    pub bijective: bool,
    pub faces_commute: bool,
    /// First problem found, if any.
    pub counterexample: Option<String>,
}

impl NerveQuotientReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.faces_commute
    }
}

/// Compares `N(C)/G` with `N(C/G)` simplex by simplex: the projection must
/// induce a bijection on orbits in every dimension and commute with all
/// face maps.
pub fn nerve_quotient_isomorphism(
    c: &FiniteCategory,
    act: &GroupAction,
    caps: &Caps,
    exec: Execution,
) -> Result<NerveQuotientReport> {
    let q = quotient_category(c, act)?;
    let nerve = Nerve::new(c, caps, exec)?;
    let qnerve = Nerve::new(&q.category, caps, exec)?;
    let project = |dim: usize, s: &[usize]| -> Vec<usize> {
        if dim == 0 {
            vec![q.object_class[s[0]]]
        } else {
            s.iter().map(|&f| q.morphism_class[f]).collect()
        }
    };
    let mut report = NerveQuotientReport {
        orbit_counts: Vec::new(),
        quotient_counts: qnerve.counts(),
        bijective: true,
        faces_commute: true,
        counterexample: None,
    };
    for (dim, simplices) in nerve.simplices.iter().enumerate() {
        let table = if dim == 0 { &act.on_objects } else { &act.on_morphisms };
        let moved: Vec<Vec<usize>> = table
            .iter()
            .map(|t| {
                simplices
                    .iter()
                    .map(|s| {
                        let image: Vec<usize> = s.iter().map(|&x| t[x]).collect();
                        nerve.index_of(dim, &image).expect("action preserves the nerve")
                    })
                    .collect()
            })
            .collect();
        let (_, orbit_list) = orbits(simplices.len(), &moved);
        report.orbit_counts.push(orbit_list.len());
        let mut hit = vec![false; qnerve.simplices.get(dim).map_or(0, Vec::len)];
        for orbit in &orbit_list {
            let s = &simplices[orbit[0]];
            let image = project(dim, s);
            match qnerve.index_of(dim, &image) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => {
                    report.bijective = false;
                    report
                        .counterexample
                        .get_or_insert(format!("orbit of simplex {s:?} in dimension {dim} is not matched once"));
                }
            }
            if dim > 0 {
                for i in 0..=dim {
                    let down = project(dim - 1, &simplex_face(c, s, i));
                    let across = simplex_face(&q.category, &image, i);
                    if down != across {
                        report.faces_commute = false;
                        report.counterexample.get_or_insert(format!(
                            "face {i} of simplex {s:?} does not commute with the projection"
                        ));
                    }
                }
            }
        }
        if hit.iter().any(|h| !h) {
            report.bijective = false;
            report
                .counterexample
                .get_or_insert(format!("a simplex of the quotient nerve in dimension {dim} has no preimage"));
        }
    }
    if report.orbit_counts.len() != report.quotient_counts.len() {
        report.bijective = false;
    }
    Ok(report)
}
