//! Adding a single non-concept to a geometry.
//!
//! `AffAut(⟨G, R⟩)` is the set of members of `AffAut(G)` that respect `R`.
//! It is compared with `TrivEuclSim = AffAut(LClass)` in both directions,
//! and, when a member outside `TrivEuclSim` turns up, with
//! `EuclSim ∩ PoiSim`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::RelationId;
use crate::groups::{classify, mixed_pool, GroupId};
use crate::rng;
use crate::transform::{respects_exact, AffineMap};

use super::{affaut_member, catalog, member_pool, violated_defining_relation, Evidence, ExpandedGeometry, GeometryId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Leiras2Verdict {
    /// `AffAut(⟨G, R⟩) = TrivEuclSim`.
    EquivLClass,
    /// `AffAut(⟨G, R⟩) = EuclSim ∩ PoiSim ≠ TrivEuclSim`.
    EquivExceptionalTriple,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Leiras2Report {
    pub geometry: GeometryId,
    pub relation: RelationId,
    pub d: usize,
    pub trials: usize,
    pub seed: u64,
    pub verdict: Leiras2Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Admissibility witness first, then one item per containment checked.
    pub evidence: Vec<Evidence>,
}

fn in_eucl_poi(a: &AffineMap) -> bool {
    classify(a, GroupId::EuclSim).member && classify(a, GroupId::PoiSim).member
}

/// Evidence that `a` is not an automorphism of `ext`.
fn outside(name: String, ext: &ExpandedGeometry, a: &AffineMap) -> Evidence {
    let rel = violated_defining_relation(ext.base, a).unwrap_or(ext.extra);
    Evidence::witness(name, a, rel)
}

/// Evidence that `a` lies outside `EuclSim ∩ PoiSim`.
fn outside_eucl_poi(name: String, a: &AffineMap) -> Evidence {
    let rel = if classify(a, GroupId::EuclSim).member {
        RelationId::Lambda
    } else {
        RelationId::CongE
    };
    Evidence::witness(name, a, rel)
}

fn sampled(trials: usize, seed: u64) -> Evidence {
    Evidence::Sampled {
        trials,
        seed,
        counterexamples: 0,
    }
}

/// Decides whether `⟨g, rel⟩` is definitionally equivalent to `LClass` (or,
/// for `d = 2`, to the exceptional `EuclSim ∩ PoiSim` geometry).
pub fn check_leiras2(g: GeometryId, rel: RelationId, d: usize, trials: usize, seed: u64) -> Result<Leiras2Report> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    let catalog = catalog(d);
    let admissible = catalog
        .iter()
        .find(|(_, w)| affaut_member(g, w) && !respects_exact(w, rel))
        .ok_or(Error::InadmissiblePair {
            geometry: g,
            relation: rel,
        })?;
    let ext = ExpandedGeometry { base: g, extra: rel };
    let mut evidence = vec![Evidence::witness(admissible.0.name(), &admissible.1, rel)];
    let report = |verdict, reason: Option<String>, evidence| Leiras2Report {
        geometry: g,
        relation: rel,
        d,
        trials,
        seed,
        verdict,
        reason,
        evidence,
    };

    let sub_seed = |tag: u64| rng::derive_seed(seed, &[0x6c6c, g.index(), rel.index(), tag]);
    let triv = member_pool(GeometryId::LClass, d, trials, sub_seed(0));

    // TrivEuclSim ⊆ AffAut(⟨G, R⟩).
    if let Some((k, a)) = triv.iter().enumerate().find(|(_, a)| !ext.aff_aut_member(a)) {
        evidence.push(outside(format!("triv_eucl_sim#{k}"), &ext, a));
        let reason = format!("a trivial Euclidean similarity is not an automorphism of {ext}");
        return Ok(report(Leiras2Verdict::Rejected, Some(reason), evidence));
    }
    evidence.push(sampled(triv.len(), sub_seed(0)));

    // AffAut(⟨G, R⟩) ⊆ TrivEuclSim, over members found among varied candidates.
    let mut candidates: Vec<(String, AffineMap)> =
        catalog.iter().map(|(n, w)| (n.name().to_string(), w.clone())).collect();
    let own = member_pool(g, d, trials, sub_seed(1));
    let group_name = g.aff_aut().map_or("affine", GroupId::name);
    candidates.extend(
        own.into_iter()
            .enumerate()
            .map(|(k, a)| (format!("{group_name}#{k}"), a)),
    );
    candidates.extend(
        mixed_pool(d, trials, sub_seed(2))
            .into_iter()
            .enumerate()
            .map(|(k, a)| (format!("mixed#{k}"), a)),
    );
    for (k, t) in triv.iter().take(trials / 5 + 1).enumerate() {
        for (n, w) in &catalog {
            candidates.push((format!("triv_eucl_sim#{k}∘{n}"), t.compose(w)?));
            candidates.push((format!("{n}∘triv_eucl_sim#{k}"), w.compose(t)?));
        }
    }
    let members: Vec<&(String, AffineMap)> = candidates.iter().filter(|(_, a)| ext.aff_aut_member(a)).collect();

    let Some((vname, v)) = members.iter().find(|(_, a)| !affaut_member(GeometryId::LClass, a)) else {
        evidence.push(sampled(members.len(), sub_seed(1)));
        return Ok(report(Leiras2Verdict::EquivLClass, None, evidence));
    };
    evidence.push(Evidence::witness(
        vname.clone(),
        v,
        violated_defining_relation(GeometryId::LClass, v).expect("outside TrivEuclSim"),
    ));

    // A member outside TrivEuclSim: compare with EuclSim ∩ PoiSim instead.
    if let Some((name, a)) = members.iter().find(|(_, a)| !in_eucl_poi(a)) {
        evidence.push(outside_eucl_poi(name.clone(), a));
        let reason = format!("{name} is an automorphism of {ext} outside TrivEuclSim and outside EuclSim ∩ PoiSim");
        return Ok(report(Leiras2Verdict::Rejected, Some(reason), evidence));
    }
    evidence.push(sampled(members.len(), sub_seed(1)));

    let mut both: Vec<(String, AffineMap)> = Vec::new();
    for (k, t) in triv.iter().enumerate() {
        both.push((format!("triv_eucl_sim#{k}"), t.clone()));
        both.push((format!("triv_eucl_sim#{k}∘{vname}"), t.compose(v)?));
        for (n, w) in catalog.iter().filter(|(_, w)| in_eucl_poi(w)) {
            both.push((format!("triv_eucl_sim#{k}∘{n}"), t.compose(w)?));
        }
    }
    if let Some((name, a)) = both.iter().find(|(_, a)| !ext.aff_aut_member(a)) {
        evidence.push(outside(name.clone(), &ext, a));
        let reason = format!("{name} lies in EuclSim ∩ PoiSim but is not an automorphism of {ext}");
        return Ok(report(Leiras2Verdict::Rejected, Some(reason), evidence));
    }
    evidence.push(sampled(both.len(), sub_seed(0)));
    Ok(report(Leiras2Verdict::EquivExceptionalTriple, None, evidence))
}
