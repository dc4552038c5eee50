//! Concept table, Hasse diagram and their renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::RelationId;
use crate::rng;
use crate::transform::AffineMap;

use super::{
    compare_with_pools, concept_from_pool, member_pool, Comparison, Evidence, GeometryId, Membership, SetComparison,
};

/// How sampled evidence is produced, stated in every report.
pub const PROVENANCE: &str = "Group members are drawn from Cayley-transform generators \
(rational orthogonal and Lorentz blocks, composed with random reflections, scalings and translations); \
affine maps from random sparse rational matrices. Witness evidence is conclusive; sampled evidence is \
support from the listed number of members, not a proof.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub relation: RelationId,
    pub geometry: GeometryId,
    pub verdict: Membership,
    pub evidence: Evidence,
}

/// `Ca(from) ⊊ Ca(to)` with nothing in between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub from: GeometryId,
    pub to: GeometryId,
    /// A member of `AffAut(from)` outside `AffAut(to)`.
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub d: usize,
    pub table_cells: Vec<TableCell>,
    pub comparisons: Vec<Comparison>,
    pub hasse_edges: Vec<HasseEdge>,
    pub equivalences: Vec<(GeometryId, GeometryId)>,
}

impl DimensionReport {
    /// A report with no cells, edges or equivalences.
    pub fn empty(d: usize) -> Self {
        DimensionReport {
            d,
            table_cells: Vec::new(),
            comparisons: Vec::new(),
            hasse_edges: Vec::new(),
            equivalences: Vec::new(),
        }
    }

    pub fn cell(&self, rel: RelationId, g: GeometryId) -> Option<&TableCell> {
        self.table_cells.iter().find(|c| c.relation == rel && c.geometry == g)
    }

    pub fn comparison(&self, a: GeometryId, b: GeometryId) -> Option<&Comparison> {
        self.comparisons
            .iter()
            .find(|c| (c.left, c.right) == (a, b) || (c.left, c.right) == (b, a))
    }

    /// Representative of each geometry's equivalence class, the least
    /// geometry in declaration order.
    pub fn classes(&self) -> BTreeMap<GeometryId, GeometryId> {
        let mut rep: BTreeMap<GeometryId, GeometryId> = GeometryId::ALL.iter().map(|&g| (g, g)).collect();
        for _ in 0..GeometryId::ALL.len() {
            for &(a, b) in &self.equivalences {
                let m = rep[&a].min(rep[&b]);
                rep.insert(a, m);
                rep.insert(b, m);
            }
        }
        rep
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub trials: usize,
    pub seed: u64,
    pub provenance: &'static str,
    pub dimensions: Vec<DimensionReport>,
}

/// Builds the concept table, pairwise comparisons and Hasse diagram for
/// each dimension. Deterministic in `seed`.
pub fn build_report(dims: &[usize], trials: usize, seed: u64) -> LatticeReport {
    LatticeReport {
        trials,
        seed,
        provenance: PROVENANCE,
        dimensions: dims.iter().map(|&d| build_dimension(d, trials, seed)).collect(),
    }
}

fn build_dimension(d: usize, trials: usize, seed: u64) -> DimensionReport {
    let pool_seed = rng::derive_seed(seed, &[d as u64]);
    let pools: BTreeMap<GeometryId, Vec<AffineMap>> = GeometryId::ALL
        .par_iter()
        .map(|&g| (g, member_pool(g, d, trials, pool_seed)))
        .collect();

    let rows = std::iter::once(RelationId::Bw).chain(RelationId::CONCEPT_ROWS);
    let cells: Vec<(RelationId, GeometryId)> = rows.flat_map(|r| GeometryId::TABLE_COLUMNS.map(|g| (r, g))).collect();
    let table_cells = cells
        .par_iter()
        .map(|&(relation, geometry)| {
            let (verdict, evidence) = concept_from_pool(relation, geometry, d, &pools[&geometry], pool_seed);
            TableCell {
                relation,
                geometry,
                verdict,
                evidence,
            }
        })
        .collect();

    let pairs: Vec<(GeometryId, GeometryId)> = GeometryId::ALL
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| GeometryId::ALL[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    let comparisons: Vec<Comparison> = pairs
        .par_iter()
        .map(|&(a, b)| compare_with_pools(a, b, d, &pools[&a], &pools[&b], pool_seed))
        .collect();

    let equivalences = comparisons
        .iter()
        .filter(|c| c.verdict == SetComparison::Equal)
        .map(|c| (c.left, c.right))
        .collect();
    let mut report = DimensionReport {
        d,
        table_cells,
        comparisons,
        hasse_edges: Vec::new(),
        equivalences,
    };
    report.hasse_edges = hasse_edges(&report);
    report
}

/// Evidence that `Ca(small) ⊊ Ca(large)` is strict, if the comparison says so.
fn strict_evidence(report: &DimensionReport, small: GeometryId, large: GeometryId) -> Option<&Evidence> {
    let c = report.comparison(small, large)?;
    match (c.left == small, c.verdict) {
        (true, SetComparison::StrictSubset) => Some(&c.right_in_left),
        (false, SetComparison::StrictSuperset) => Some(&c.left_in_right),
        _ => None,
    }
}

fn hasse_edges(report: &DimensionReport) -> Vec<HasseEdge> {
    let classes = report.classes();
    let mut reps: Vec<GeometryId> = classes.values().copied().collect();
    reps.sort();
    reps.dedup();
    let below = |a: GeometryId, b: GeometryId| strict_evidence(report, a, b).is_some();
    let mut edges = Vec::new();
    for &a in &reps {
        for &b in &reps {
            if !below(a, b) || reps.iter().any(|&c| below(a, c) && below(c, b)) {
                continue;
            }
            edges.push(HasseEdge {
                from: a,
                to: b,
                evidence: strict_evidence(report, a, b).expect("strict").clone(),
            });
        }
    }
    edges
}

fn node_label(report: &DimensionReport, rep: GeometryId) -> String {
    let classes = report.classes();
    GeometryId::ALL
        .iter()
        .filter(|g| classes[g] == rep)
        .map(|g| g.name())
        .collect::<Vec<_>>()
        .join("=")
}

/// Graphviz rendering of the Hasse diagram; one node per equivalence class,
/// edges pointing from the smaller concept set to the larger.
pub fn emit_dot(report: &DimensionReport) -> String {
    let classes = report.classes();
    let mut out = String::from("digraph concept_sets {\n  rankdir=BT;\n  node [shape=box];\n");
    for g in GeometryId::ALL {
        if classes[&g] != g {
            continue;
        }
        let label = node_label(report, g);
        if label == g.name() {
            let _ = writeln!(out, "  {g};");
        } else {
            let _ = writeln!(out, "  {g} [label=\"{label}\"];");
        }
    }
    for e in &report.hasse_edges {
        match e.evidence.witness_name() {
            Some(w) => {
                let _ = writeln!(out, "  {} -> {} [label=\"{w}\"];", e.from, e.to);
            }
            None => {
                let _ = writeln!(out, "  {} -> {};", e.from, e.to);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Plain-text concept table: concept rows against geometry columns.
pub fn render_table(report: &DimensionReport) -> String {
    let mut out = format!("d = {}\n{:<8}", report.d, "");
    for g in GeometryId::TABLE_COLUMNS {
        let _ = write!(out, "{:>8}", g.name());
    }
    out.push('\n');
    for r in RelationId::CONCEPT_ROWS.into_iter().chain([RelationId::Bw]) {
        let _ = write!(out, "{:<8}", r.symbol());
        for g in GeometryId::TABLE_COLUMNS {
            let s = report.cell(r, g).map_or("?", |c| c.verdict.symbol());
            let _ = write!(out, "{s:>8}");
        }
        out.push('\n');
    }
    out
}
