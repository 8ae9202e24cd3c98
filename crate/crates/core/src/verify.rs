//! Registry of exhaustive checks with machine-readable reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::category::{
    build_en, en_functor, nerve_complex, nerve_quotient_isomorphism, nerve_simplex_counts,
    quotient_category, FiniteCategory, GroupAction,
};
use crate::chains::{chain_order_isomorphism, face_swap};
use crate::complexes::{z_complex, YComplex};
use crate::cover::verify_cover;
use crate::cubical::{find_isomorphism, is_non_self_linked, PrecubicalComplex, SelfLinkage};
use crate::error::{Error, Result};
use crate::homology::{euler_from_homology, homology, same_homology, HomologyGroup};
use crate::orders::{f_map, g_map, g_of_sd_f, DoubleOrder, OrderClass, OrderUniverse, PosetVariant};
use crate::par::Execution;
use crate::perm::Permutation;

/// Seed of the random configurations used by the cover checks.
pub const COVER_SEED: u64 = 0x5eed_c0de;
/// Number of random configurations used by the cover checks.
pub const COVER_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    /// Sizes the check accepts.
    pub min_n: usize,
    pub max_n: usize,
    pub summary: &'static str,
}

pub const REGISTRY: &[CheckInfo] = &[
    CheckInfo { id: "chain-order-iso", min_n: 1, max_n: 4, summary: "Ch(Y^A) and (R(A),⊒) are equivariantly isomorphic posets" },
    CheckInfo { id: "orbit-iso", min_n: 1, max_n: 5, summary: "Y^A/Σ_A → Z̃ₙ is a bi-pointed isomorphism" },
    CheckInfo { id: "non-self-linked", min_n: 1, max_n: 4, summary: "Y^A is non-self-linked and the truncated Z is not" },
    CheckInfo { id: "face-swap", min_n: 0, max_n: 7, summary: "face swap identity for all p + q ≤ n" },
    CheckInfo { id: "free-action", min_n: 1, max_n: 4, summary: "Σ_A acts freely on D(A)" },
    CheckInfo { id: "union-sigma", min_n: 1, max_n: 4, summary: "o ∪̄ oσ is a double order iff σ = 1, for regular o" },
    CheckInfo { id: "F-G-triangles", min_n: 1, max_n: 3, summary: "F∘G = max on ⊑-chains of R(A); G∘sd(F) ⊆ max on ⊆-chains of R⁺(A)" },
    CheckInfo { id: "nerve-quotient", min_n: 1, max_n: 4, summary: "N((R(A),⊒))/Σ_A ≅ N((R(A),⊒)/Σ_A)" },
    CheckInfo { id: "bar-F-iso", min_n: 1, max_n: 4, summary: "(R(A),⊒)/Σ_A → 𝓔ₙ is an isomorphism of categories" },
    CheckInfo { id: "cover-complete", min_n: 1, max_n: 3, summary: "intersection rule, antitonicity and covering of the cover by U(⋖)" },
    CheckInfo { id: "cover-proper", min_n: 1, max_n: 3, summary: "U(o) ∩ U(oσ) = ∅ for σ ≠ 1, and equivariance" },
    CheckInfo { id: "homology-cross-model", min_n: 2, max_n: 4, summary: "𝓔ₙ, (R(A),⊒)/Σ_A and (R⁺(A),⊆)/Σ_A have equal homology" },
    CheckInfo { id: "euler-zero", min_n: 2, max_n: 5, summary: "the nerve of 𝓔ₙ has Euler characteristic 0" },
    CheckInfo { id: "homology-ordered", min_n: 2, max_n: 3, summary: "(R(A),⊑) and (R⁺(A),⊆) have equal homology" },
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub caps: Caps,
    pub status: Status,
    /// Check-specific data; failures carry a `counterexample` entry.
    pub details: Value,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn outcome(pass: bool, details: Value) -> (bool, Value) {
    (pass, details)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// Runs one check at one size. Resource errors are returned; any other
/// error raised by the check is reported as a failure.
pub fn run_check(id: &str, n: usize, caps: &Caps, exec: Execution) -> Result<VerificationReport> {
    let info = check_info(id).ok_or_else(|| Error::argument(format!("unknown check {id:?}")))?;
    let start = Instant::now();
    let result = if n < info.min_n || n > info.max_n {
        Ok((
            None,
            json!({ "reason": format!("size {n} outside {}..={}", info.min_n, info.max_n) }),
        ))
    } else {
        dispatch(id, n, caps, exec).map(|(pass, details)| (Some(pass), details))
    };
    let (status, details) = match result {
        Ok((None, d)) => (Status::Skipped, d),
        Ok((Some(true), d)) => (Status::Pass, d),
        Ok((Some(false), d)) => (Status::Fail, d),
        Err(e @ Error::Resource { .. }) => return Err(e),
        Err(e) => (Status::Fail, json!({ "counterexample": e.to_string() })),
    };
    Ok(VerificationReport {
        id: id.to_string(),
        n,
        caps: *caps,
        status,
        details,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs every selected check for every supported size up to `n_max`, in
/// registry-independent but stable order: selection order, then size.
pub fn run_suite(ids: &[String], n_max: usize, caps: &Caps, exec: Execution) -> Result<Vec<VerificationReport>> {
    let mut jobs = Vec::new();
    for id in ids {
        let info = check_info(id).ok_or_else(|| Error::argument(format!("unknown check {id:?}")))?;
        if n_max < info.min_n {
            jobs.push((info.id, n_max));
        }
        for n in info.min_n..=n_max.min(info.max_n) {
            jobs.push((info.id, n));
        }
    }
    exec.map(&jobs, |&(id, n)| run_check(id, n, caps, exec))
        .into_iter()
        .collect()
}

fn dispatch(id: &str, n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    match id {
        "chain-order-iso" => {
            let r = chain_order_isomorphism(n, caps, exec)?;
            Ok(outcome(r.holds(), to_value(&r)))
        }
        "orbit-iso" => orbit_iso(n, caps),
        "non-self-linked" => non_self_linked(n, caps, exec),
        "face-swap" => face_swap_all(n),
        "free-action" => free_action(n, caps, exec),
        "union-sigma" => union_sigma(n, caps, exec),
        "F-G-triangles" => triangles(n, caps, exec),
        "nerve-quotient" => {
            let u = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
            let c = u.poset(PosetVariant::SqSupset, exec)?.to_category();
            let act = GroupAction::on_poset_category(&c, u.sigma_action())?;
            let r = nerve_quotient_isomorphism(&c, &act, caps, exec)?;
            Ok(outcome(r.holds(), to_value(&r)))
        }
        "bar-F-iso" => {
            let r = en_functor(n, caps, exec)?;
            let details = json!({
                "quotient_objects": r.quotient_objects,
                "quotient_morphisms": r.quotient_morphisms,
                "en_objects": r.en_objects,
                "en_morphisms": r.en_morphisms,
                "lands_in_en": r.lands_in_en,
                "functorial": r.functorial,
                "sigma_invariant": r.sigma_invariant,
                "bijective_on_objects": r.bijective_on_objects,
                "bijective_on_morphisms": r.bijective_on_morphisms,
                "counterexample": r.counterexample,
            });
            Ok(outcome(r.holds(), details))
        }
        "cover-complete" => {
            let r = verify_cover(n, COVER_SAMPLES, COVER_SEED, caps, exec)?;
            Ok(outcome(r.complete && r.antitone && r.covering, to_value(&r)))
        }
        "cover-proper" => {
            let r = verify_cover(n, COVER_SAMPLES, COVER_SEED, caps, exec)?;
            Ok(outcome(r.proper && r.equivariant, to_value(&r)))
        }
        "homology-cross-model" => cross_model(n, caps, exec),
        "euler-zero" => euler_zero(n, caps, exec),
        "homology-ordered" => ordered_models(n, caps, exec),
        _ => unreachable!("registry and dispatch agree"),
    }
}

fn orbit_iso(n: usize, caps: &Caps) -> Result<(bool, Value)> {
    let y = YComplex::new(n, caps)?;
    let (q, map) = y.orbit_map()?;
    let target = y.z_tilde().complex;
    let bijective = map.is_bijective(&target);
    let independent = find_isomorphism(&q.complex, &target).is_some();
    Ok(outcome(
        bijective && independent,
        json!({
            "quotient_cells": q.complex.dims(),
            "z_tilde_cells": target.dims(),
            "induced_map_bijective": bijective,
            "isomorphism_found_by_search": independent,
        }),
    ))
}

fn self_linkage_json(k: &PrecubicalComplex, s: SelfLinkage) -> Value {
    match s {
        SelfLinkage::NonSelfLinked => json!(null),
        SelfLinkage::SelfLinked { cell } => json!({ "cell": cell.to_pair(), "label": k.label(cell) }),
    }
}

/// Non-self-linkedness of a named complex: `yA` (`Yᴬ`, `|A| = n`) or `z`
/// (`Z` truncated at dimension `n`).
pub fn non_self_linked_target(target: &str, n: usize, caps: &Caps, exec: Execution) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = match target {
        "yA" => YComplex::new(n, caps)?.complex,
        "z" => z_complex(n),
        _ => return Err(Error::argument(format!("unknown target {target:?}, expected yA or z"))),
    };
    let s = is_non_self_linked(&k, caps, exec)?;
    let status = if s.holds() { Status::Pass } else { Status::Fail };
    Ok(VerificationReport {
        id: "non-self-linked".into(),
        n,
        caps: *caps,
        status,
        details: json!({ "target": target, "counterexample": self_linkage_json(&k, s) }),
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn non_self_linked(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let y = YComplex::new(n, caps)?;
    let ys = is_non_self_linked(&y.complex, caps, exec)?;
    let z = z_complex(n);
    let zs = is_non_self_linked(&z, caps, exec)?;
    Ok(outcome(
        ys.holds() && !zs.holds(),
        json!({
            "y_counterexample": self_linkage_json(&y.complex, ys),
            "truncated_z_counterexample": self_linkage_json(&z, zs),
        }),
    ))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

fn face_swap_all(bound: usize) -> Result<(bool, Value)> {
    let mut cases = 0;
    for p in 0..=bound {
        for q in 0..=bound - p {
            for v in subsets(p) {
                for w in subsets(q) {
                    if p - v.len() != q - w.len() {
                        continue;
                    }
                    cases += 1;
                    if let Err(e) = face_swap(p, q, &v, &w) {
                        return Ok(outcome(
                            false,
                            json!({ "counterexample": { "p": p, "q": q, "V": v, "W": w, "error": e.to_string() } }),
                        ));
                    }
                }
            }
        }
    }
    Ok(outcome(true, json!({ "cases": cases })))
}

fn free_action(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let d = OrderUniverse::new(n, OrderClass::Double, caps, exec)?;
    let sigmas: Vec<Permutation> = Permutation::all(n).into_iter().filter(|s| !s.is_identity()).collect();
    let fixed = exec.find_map_first(&d.orders, |o| {
        sigmas.iter().find(|s| o.act(s) == *o).map(|s| (*o, s.clone()))
    });
    Ok(match fixed {
        None => outcome(true, json!({ "double_orders": d.len(), "group_order": sigmas.len() + 1 })),
        Some((o, s)) => outcome(false, json!({ "counterexample": { "order": o.to_string(), "sigma": s.to_string() } })),
    })
}

fn union_sigma(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let r = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let sigmas = Permutation::all(n);
    let bad = exec.find_map_first(&r.orders, |o| {
        sigmas.iter().find_map(|s| {
            let double = o.union_bar(&o.act(s)).is_some_and(|u| u.is_double());
            (double != s.is_identity()).then(|| (*o, s.clone()))
        })
    });
    Ok(match bad {
        None => outcome(true, json!({ "regular_orders": r.len(), "group_order": sigmas.len() })),
        Some((o, s)) => outcome(false, json!({ "counterexample": { "order": o.to_string(), "sigma": s.to_string() } })),
    })
}

fn triangles(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let r = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let plus = OrderUniverse::new(n, OrderClass::SemiRegular, caps, exec)?;
    let sq = r.poset(PosetVariant::SqSubset, exec)?;
    let sub = plus.poset(PosetVariant::Subset, exec)?;
    let sq_chains = sq.chains();
    let sub_chains = sub.chains();
    caps.check_cells("poset chains", sq_chains.len() + sub_chains.len())?;
    let pick = |u: &OrderUniverse, c: &[usize]| -> Vec<DoubleOrder> { c.iter().map(|&i| u.orders[i]).collect() };

    let upper = exec.find_map_first(&sq_chains, |c| {
        let chain = pick(&r, c);
        let ok = g_map(&chain).and_then(|g| f_map(&g)).is_ok_and(|fg| fg == *chain.last().unwrap());
        (!ok).then(|| chain.iter().map(|o| o.to_string()).collect::<Vec<_>>())
    });
    let lower = exec.find_map_first(&sub_chains, |c| {
        let chain = pick(&plus, c);
        let ok = g_of_sd_f(&chain).is_ok_and(|g| g.is_subset(chain.last().unwrap()));
        (!ok).then(|| chain.iter().map(|o| o.to_string()).collect::<Vec<_>>())
    });
    let sigmas = Permutation::all(n);
    let mut f_monotone = true;
    let mut f_equivariant = true;
    for a in &plus.orders {
        let fa = f_map(a)?;
        f_monotone &= plus.orders.iter().all(|b| !a.is_subset(b) || f_map(b).is_ok_and(|fb| fa.is_sqsubset(&fb)));
        f_equivariant &= sigmas.iter().all(|s| f_map(&a.act(s)).is_ok_and(|x| x == fa.act(s)));
    }
    let details = json!({
        "sq_chains": sq_chains.len(),
        "subset_chains": sub_chains.len(),
        "f_monotone": f_monotone,
        "f_equivariant": f_equivariant,
        "counterexample": upper.clone().map(|c| json!({ "F(G(chain)) != max": c }))
            .or_else(|| lower.clone().map(|c| json!({ "G(sd F(chain)) not below max": c }))),
    });
    Ok(outcome(upper.is_none() && lower.is_none() && f_monotone && f_equivariant, details))
}

fn nerve_homology(c: &FiniteCategory, caps: &Caps, exec: Execution) -> Result<Vec<HomologyGroup>> {
    homology(&nerve_complex(c, caps, exec)?, exec)
}

fn orbit_category(class: OrderClass, variant: PosetVariant, n: usize, caps: &Caps, exec: Execution) -> Result<FiniteCategory> {
    let u = OrderUniverse::new(n, class, caps, exec)?;
    let c = u.poset(variant, exec)?.to_category();
    let act = GroupAction::on_poset_category(&c, u.sigma_action())?;
    Ok(quotient_category(&c, &act)?.category)
}

fn strings(h: &[HomologyGroup]) -> Vec<String> {
    h.iter().map(|g| g.to_string()).collect()
}

/// Values pinned after cross-model agreement; `None` where nothing is pinned.
fn pinned_unordered(n: usize, h: &[HomologyGroup]) -> Option<bool> {
    let z = HomologyGroup::free(1);
    match n {
        2 => Some(same_homology(h, &[z.clone(), z])),
        3 => Some(same_homology(h, &[z.clone(), z, HomologyGroup::free(0)])),
        4 => Some(
            h.len() > 2
                && h[0] == z
                && h[1] == z
                && h[2].torsion.iter().any(|t| (t % 2u32) == 0u32.into()),
        ),
        _ => None,
    }
}

fn cross_model(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let en = nerve_homology(&build_en(n, caps, exec)?.category, caps, exec)?;
    let mut models = vec![("E_n", en.clone())];
    models.push((
        "(R(A),⊒)/Σ_A",
        nerve_homology(&orbit_category(OrderClass::Regular, PosetVariant::SqSupset, n, caps, exec)?, caps, exec)?,
    ));
    if n <= 3 {
        models.push((
            "(R⁺(A),⊆)/Σ_A",
            nerve_homology(&orbit_category(OrderClass::SemiRegular, PosetVariant::Subset, n, caps, exec)?, caps, exec)?,
        ));
    }
    let agree = models.iter().all(|(_, h)| same_homology(h, &en));
    let pinned = pinned_unordered(n, &en);
    let details = json!({
        "models": models.iter().map(|(name, h)| json!({ "model": name, "homology": strings(h) })).collect::<Vec<_>>(),
        "agree": agree,
        "matches_pinned": pinned,
        "counterexample": (!agree).then_some("models disagree"),
    });
    Ok(outcome(agree && pinned != Some(false), details))
}

fn euler_zero(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let en = build_en(n, caps, exec)?;
    let counts = nerve_simplex_counts(&en.category)?;
    let chi: num_bigint::BigInt = counts
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
        .sum();
    let from_homology = if n <= 4 {
        Some(euler_from_homology(&nerve_homology(&en.category, caps, exec)?))
    } else {
        None
    };
    let zero = chi == 0.into() && from_homology.is_none_or(|e| e == 0);
    Ok(outcome(
        zero,
        json!({
            "simplex_counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "euler_characteristic": chi.to_string(),
            "from_homology": from_homology,
        }),
    ))
}

fn ordered_models(n: usize, caps: &Caps, exec: Execution) -> Result<(bool, Value)> {
    let r = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let plus = OrderUniverse::new(n, OrderClass::SemiRegular, caps, exec)?;
    let hr = nerve_homology(&r.poset(PosetVariant::SqSubset, exec)?.to_category(), caps, exec)?;
    let hp = nerve_homology(&plus.poset(PosetVariant::Subset, exec)?.to_category(), caps, exec)?;
    let agree = same_homology(&hr, &hp);
    let z = HomologyGroup::free(1);
    let pinned = match n {
        2 => Some(same_homology(&hr, &[z.clone(), z])),
        3 => Some(same_homology(&hr, &[z, HomologyGroup::free(3), HomologyGroup::free(2)])),
        _ => None,
    };
    Ok(outcome(
        agree && pinned != Some(false),
        json!({
            "regular_sqsubset": strings(&hr),
            "semi_regular_subset": strings(&hp),
            "agree": agree,
            "matches_pinned": pinned,
        }),
    ))
}
