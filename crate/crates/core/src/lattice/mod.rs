//! The seven geometries and their concept sets, compared through affine
//! automorphism groups: `Ca(G) ⊆ Ca(G′)` iff `AffAut(G) ⊇ AffAut(G′)`.
//!
//! A concept is absent (or a containment fails) on the strength of a concrete
//! map, which is conclusive. Presence and equality are supported by sampled
//! group members with a recorded seed, which is evidence rather than proof.

pub mod expected;
mod leiras2;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geometry::{PointVec, RelationId};
use crate::groups::{classify, generate_with, witness, GeneratorParams, GroupId, WitnessName};
use crate::rng;
use crate::transform::{random_affine, respects_exact, respects_sampled, AffineMap};

pub use leiras2::{check_leiras2, Leiras2Report, Leiras2Verdict};
pub use report::{build_report, emit_dot, render_table, DimensionReport, HasseEdge, LatticeReport, TableCell};

/// Sampled tuples per member used to corroborate the exact respect check.
const CORROBORATING_TUPLES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeometryId {
    OAff,
    Eucl,
    Rel,
    Mink,
    Gal,
    Newt,
    LClass,
}

impl GeometryId {
    pub const ALL: [GeometryId; 7] = [
        GeometryId::OAff,
        GeometryId::Eucl,
        GeometryId::Rel,
        GeometryId::Mink,
        GeometryId::Gal,
        GeometryId::Newt,
        GeometryId::LClass,
    ];

    /// Column order of the concept table.
    pub const TABLE_COLUMNS: [GeometryId; 5] = [
        GeometryId::Eucl,
        GeometryId::Rel,
        GeometryId::Gal,
        GeometryId::Newt,
        GeometryId::LClass,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeometryId::OAff => "OAff",
            GeometryId::Eucl => "Eucl",
            GeometryId::Rel => "Rel",
            GeometryId::Mink => "Mink",
            GeometryId::Gal => "Gal",
            GeometryId::Newt => "Newt",
            GeometryId::LClass => "LClass",
        }
    }

    pub fn defining_relations(self) -> &'static [RelationId] {
        use RelationId::*;
        match self {
            GeometryId::OAff => &[Bw],
            GeometryId::Eucl => &[CongE, Bw],
            GeometryId::Rel => &[Lambda, Bw],
            GeometryId::Mink => &[CongMu, Bw],
            GeometryId::Gal => &[CongS, Bw],
            GeometryId::Newt => &[CongS, Rest, Bw],
            GeometryId::LClass => &[CongS, Lambda, Bw],
        }
    }

    /// The group `AffAut(G)`; `None` for `OAff`, whose group is every
    /// affine bijection.
    pub fn aff_aut(self) -> Option<GroupId> {
        match self {
            GeometryId::OAff => None,
            GeometryId::Eucl => Some(GroupId::EuclSim),
            GeometryId::Rel | GeometryId::Mink => Some(GroupId::PoiSim),
            GeometryId::Gal => Some(GroupId::GalSim),
            GeometryId::Newt => Some(GroupId::TrivGalSim),
            GeometryId::LClass => Some(GroupId::TrivEuclSim),
        }
    }

    pub(crate) fn index(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for GeometryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeometryId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GeometryId::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown geometry `{s}`"))
    }
}

impl Serialize for GeometryId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for GeometryId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A geometry with one relation added to its signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpandedGeometry {
    pub base: GeometryId,
    pub extra: RelationId,
}

impl ExpandedGeometry {
    pub fn aff_aut_member(&self, a: &AffineMap) -> bool {
        affaut_member(self.base, a) && respects_exact(a, self.extra)
    }
}

impl fmt::Display for ExpandedGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.base, self.extra)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Membership {
    In,
    NotIn,
}

impl Membership {
    pub fn symbol(self) -> &'static str {
        match self {
            Membership::In => "∈",
            Membership::NotIn => "∉",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// A map that fails `violates` on `counterexample`. Conclusive.
    Witness {
        witness: String,
        map: AffineMap,
        violates: RelationId,
        counterexample: Vec<PointVec>,
    },
    /// `trials` sampled maps, none of them a counterexample. Supporting only.
    Sampled {
        trials: usize,
        seed: u64,
        counterexamples: usize,
    },
}

impl Evidence {
    pub fn is_witness(&self) -> bool {
        matches!(self, Evidence::Witness { .. })
    }

    pub fn witness_name(&self) -> Option<&str> {
        match self {
            Evidence::Witness { witness, .. } => Some(witness),
            Evidence::Sampled { .. } => None,
        }
    }

    /// Witness evidence for `map` failing `rel`, with a replayable tuple.
    pub(crate) fn witness(name: impl Into<String>, map: &AffineMap, rel: RelationId) -> Evidence {
        let counterexample = respects_sampled(map, rel, 0, 0)
            .counterexample
            .or_else(|| respects_sampled(map, rel, 1000, 0).counterexample)
            .map(|c| c.args)
            .unwrap_or_default();
        Evidence::Witness {
            witness: name.into(),
            map: map.clone(),
            violates: rel,
            counterexample,
        }
    }
}

/// `A ∈ AffAut(G)`.
pub fn affaut_member(g: GeometryId, a: &AffineMap) -> bool {
    match g.aff_aut() {
        None => true,
        Some(group) => classify(a, group).member,
    }
}

/// The first defining relation of `g` that `a` fails, if any.
pub fn violated_defining_relation(g: GeometryId, a: &AffineMap) -> Option<RelationId> {
    g.defining_relations().iter().copied().find(|&r| !respects_exact(a, r))
}

/// Deterministic sample of `AffAut(g)` in dimension `d`.
pub fn member_pool(g: GeometryId, d: usize, n: usize, seed: u64) -> Vec<AffineMap> {
    let mut rng = rng::stream(seed, &[0x6d656d62, d as u64, g.index()]);
    let params = GeneratorParams::default();
    (0..n)
        .map(|_| match g.aff_aut() {
            None => random_affine(d, &mut rng),
            Some(group) => generate_with(group, d, &mut rng, &params),
        })
        .collect()
}

/// Catalog witnesses in dimension `d`, in catalog order.
pub fn catalog(d: usize) -> Vec<(WitnessName, AffineMap)> {
    WitnessName::ALL.into_iter().map(|w| (w, witness(w, d))).collect()
}

/// `a` respects `rel`, decided exactly and corroborated on sampled tuples.
fn respects_checked(a: &AffineMap, rel: RelationId, seed: u64) -> bool {
    respects_exact(a, rel) && respects_sampled(a, rel, CORROBORATING_TUPLES, seed).respects
}

/// Verdict on `rel ∈ Ca(g)` over a given member pool.
pub(crate) fn concept_from_pool(
    rel: RelationId,
    g: GeometryId,
    d: usize,
    pool: &[AffineMap],
    seed: u64,
) -> (Membership, Evidence) {
    for (name, w) in catalog(d) {
        if affaut_member(g, &w) && !respects_exact(&w, rel) {
            return (Membership::NotIn, Evidence::witness(name.name(), &w, rel));
        }
    }
    let mut counterexamples = 0;
    let mut first = None;
    for (k, a) in pool.iter().enumerate() {
        if !respects_checked(a, rel, rng::derive_seed(seed, &[k as u64, rel.index()])) {
            counterexamples += 1;
            first.get_or_insert((k, a));
        }
    }
    match first {
        Some((k, a)) => {
            let name = format!("{}#{k}", g.aff_aut().map_or("affine", GroupId::name));
            (Membership::NotIn, Evidence::witness(name, a, rel))
        }
        None => (
            Membership::In,
            Evidence::Sampled {
                trials: pool.len(),
                seed,
                counterexamples,
            },
        ),
    }
}

/// Decides `rel ∈ Ca(g)` in dimension `d`: a violating member of
/// `AffAut(g)` (catalog first, then `trials` sampled members) rules it out.
pub fn concept_in_geometry(
    rel: RelationId,
    g: GeometryId,
    d: usize,
    trials: usize,
    seed: u64,
) -> (Membership, Evidence) {
    let pool = member_pool(g, d, trials, seed);
    concept_from_pool(rel, g, d, &pool, seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetComparison {
    Equal,
    /// `Ca(G1) ⊊ Ca(G2)`.
    StrictSubset,
    StrictSuperset,
    Incomparable,
}

/// Result of comparing two concept sets, with evidence for each direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub left: GeometryId,
    pub right: GeometryId,
    pub verdict: SetComparison,
    /// Evidence about `Ca(left) ⊆ Ca(right)`, i.e. `AffAut(right) ⊆ AffAut(left)`.
    pub left_in_right: Evidence,
    /// Evidence about `Ca(right) ⊆ Ca(left)`.
    pub right_in_left: Evidence,
}

/// Looks for a member of `AffAut(inner)` outside `AffAut(outer)`.
/// `None` when there is none in the catalog or `pool`.
pub(crate) fn group_violator(inner: GeometryId, outer: GeometryId, d: usize, pool: &[AffineMap]) -> Option<Evidence> {
    let catalog = catalog(d);
    let named = catalog.iter().map(|(n, w)| (n.name().to_string(), w));
    let sampled = pool
        .iter()
        .enumerate()
        .map(|(k, a)| (format!("{}#{k}", inner.aff_aut().map_or("affine", GroupId::name)), a));
    named
        .chain(sampled)
        .filter(|(_, a)| affaut_member(inner, a))
        .find_map(|(name, a)| violated_defining_relation(outer, a).map(|rel| Evidence::witness(name, a, rel)))
}

pub(crate) fn compare_with_pools(
    left: GeometryId,
    right: GeometryId,
    d: usize,
    left_pool: &[AffineMap],
    right_pool: &[AffineMap],
    seed: u64,
) -> Comparison {
    let direction = |inner, outer, pool: &[AffineMap]| match group_violator(inner, outer, d, pool) {
        Some(e) => (false, e),
        None => (
            true,
            Evidence::Sampled {
                trials: pool.len(),
                seed,
                counterexamples: 0,
            },
        ),
    };
    let (l_in_r, left_in_right) = direction(right, left, right_pool);
    let (r_in_l, right_in_left) = direction(left, right, left_pool);
    let verdict = match (l_in_r, r_in_l) {
        (true, true) => SetComparison::Equal,
        (true, false) => SetComparison::StrictSubset,
        (false, true) => SetComparison::StrictSuperset,
        (false, false) => SetComparison::Incomparable,
    };
    Comparison {
        left,
        right,
        verdict,
        left_in_right,
        right_in_left,
    }
}

/// Compares `Ca(left)` with `Ca(right)` in dimension `d`.
pub fn compare_concept_sets(left: GeometryId, right: GeometryId, d: usize, trials: usize, seed: u64) -> Comparison {
    let lp = member_pool(left, d, trials, seed);
    let rp = member_pool(right, d, trials, seed);
    compare_with_pools(left, right, d, &lp, &rp, seed)
}
