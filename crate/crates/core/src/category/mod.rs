//! Finite categories and posets, their nerves, quotients by free group
//! actions and the category `𝓔ₙ`.

mod en;
mod nerve;
mod poset;
mod quotient;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub use en::{build_en, en_functor, en_object, monotone_numbering, EnCategory, EnFunctor, EnObject};
pub use nerve::{nerve_complex, nerve_simplex_counts, Nerve};
pub use poset::{Poset, Subdivision};
pub use quotient::{
    nerve_quotient_isomorphism, quotient_category, GroupAction, NerveQuotientReport,
    QuotientCategory,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite category with an explicit composition table.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `(g, f) ↦ g∘f` for every composable pair (`target(f) = source(g)`).
    compose: HashMap<(usize, usize), usize>,
    /// morphisms by source, identities included
    outgoing: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CategoryJson {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    /// `[g, f, g∘f]` triples, sorted.
    pub composition: Vec<[usize; 3]>,
}

impl FiniteCategory {
    /// Builds the category and checks the identity and associativity laws
    /// on the full table.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let mut outgoing = vec![Vec::new(); objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            if m.source >= objects.len() || m.target >= objects.len() {
                return Err(Error::structural(format!("morphism {i} has a missing endpoint")));
            }
            outgoing[m.source].push(i);
        }
        let cat = FiniteCategory {
            objects,
            morphisms,
            identities,
            compose,
            outgoing,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<()> {
        if self.identities.len() != self.objects.len() {
            return Err(Error::structural("one identity per object required"));
        }
        for (o, &id) in self.identities.iter().enumerate() {
            let m = &self.morphisms[id];
            if m.source != o || m.target != o {
                return Err(Error::consistency(format!("identity of object {o} is not an endomorphism")));
            }
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            for &g in &self.outgoing[mf.target] {
                let gf = self.try_compose(g, f).ok_or_else(|| {
                    Error::structural(format!("composite of morphisms {g} and {f} missing"))
                })?;
                let m = &self.morphisms[gf];
                if m.source != mf.source || m.target != self.morphisms[g].target {
                    return Err(Error::consistency(format!("composite {g}∘{f} has wrong endpoints")));
                }
                for &h in &self.outgoing[self.morphisms[g].target] {
                    if self.compose[&(h, gf)] != self.compose[&(self.compose[&(h, g)], f)] {
                        return Err(Error::consistency(format!(
                            "associativity fails for {h}, {g}, {f}"
                        )));
                    }
                }
            }
            if self.compose.get(&(self.identities[mf.target], f)) != Some(&f)
                || self.compose.get(&(f, self.identities[mf.source])) != Some(&f)
            {
                return Err(Error::consistency(format!("identity law fails for morphism {f}")));
            }
        }
        Ok(())
    }

    pub fn from_poset(p: &Poset) -> FiniteCategory {
        let n = p.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) {
                    index.insert((a, b), morphisms.len());
                    morphisms.push(Morphism {
                        source: a,
                        target: b,
                        label: String::new(),
                    });
                }
            }
        }
        let identities = (0..n).map(|a| index[&(a, a)]).collect();
        let mut compose = HashMap::new();
        for (f, m) in morphisms.iter().enumerate() {
            for c in 0..n {
                if let Some(&g) = index.get(&(m.target, c)) {
                    compose.insert((g, f), index[&(m.source, c)]);
                }
            }
        }
        let mut outgoing = vec![Vec::new(); n];
        for (i, m) in morphisms.iter().enumerate() {
            outgoing[m.source].push(i);
        }
        // a poset table is a category by construction; skip the law check
        FiniteCategory {
            objects: p.labels().to_vec(),
            morphisms,
            identities,
            compose,
            outgoing,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    /// `g∘f`; panics unless `target(f) = source(g)`.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.compose[&(g, f)]
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// Morphisms leaving `o`, identity included.
    pub fn outgoing(&self, o: usize) -> &[usize] {
        &self.outgoing[o]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        self.outgoing[a]
            .iter()
            .copied()
            .filter(|&f| self.morphisms[f].target == b)
            .collect()
    }

    /// No non-identity endomorphisms and no cycle of non-identity
    /// morphisms; exactly the categories with a finite nerve.
    pub fn is_loop_free(&self) -> bool {
        let n = self.objects.len();
        let mut indegree = vec![0usize; n];
        for (f, m) in self.morphisms.iter().enumerate() {
            if !self.is_identity(f) {
                if m.source == m.target {
                    return false;
                }
                indegree[m.target] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&o| indegree[o] == 0).collect();
        let mut visited = 0;
        while let Some(o) = stack.pop() {
            visited += 1;
            for &f in &self.outgoing[o] {
                if !self.is_identity(f) {
                    let t = self.morphisms[f].target;
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        visited == n
    }

    pub fn to_json(&self) -> CategoryJson {
        let mut composition: Vec<[usize; 3]> =
            self.compose.iter().map(|(&(g, f), &h)| [g, f, h]).collect();
        composition.sort_unstable();
        CategoryJson {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            composition,
        }
    }

    /// Objects as nodes, non-identity morphisms as labelled edges.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for (i, o) in self.objects.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(o)));
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            if !self.is_identity(f) {
                out.push_str(&format!(
                    "  n{} -> n{} [label=\"{}\"];\n",
                    m.source,
                    m.target,
                    escape(&m.label)
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Poset {
    /// Hasse diagram in DOT.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for (i, l) in self.labels().iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(l)));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}
