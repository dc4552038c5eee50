//! Known answers, used by the command-line front end to flag a mismatch.

use crate::geometry::RelationId;

use super::{GeometryId, Leiras2Verdict, Membership};

/// Expected membership of `rel` in `Ca(g)`.
pub fn table_cell(rel: RelationId, g: GeometryId) -> Membership {
    use GeometryId::*;
    use RelationId::*;
    let inside: &[GeometryId] = match rel {
        Bw => &[OAff, Eucl, Rel, Mink, Gal, Newt, LClass],
        CongE => &[Eucl, LClass],
        CongMu | Lambda => &[Rel, Mink, LClass],
        CongS | S => &[Gal, Newt, LClass],
        Rest => &[Newt, LClass],
        Delta => &[LClass],
    };
    if inside.contains(&g) {
        Membership::In
    } else {
        Membership::NotIn
    }
}

/// Covering pairs `Ca(from) ⊊ Ca(to)`, with `Rel` standing for `Rel = Mink`.
pub const HASSE_EDGES: [(GeometryId, GeometryId); 7] = [
    (GeometryId::OAff, GeometryId::Eucl),
    (GeometryId::OAff, GeometryId::Rel),
    (GeometryId::OAff, GeometryId::Gal),
    (GeometryId::Eucl, GeometryId::LClass),
    (GeometryId::Rel, GeometryId::LClass),
    (GeometryId::Gal, GeometryId::Newt),
    (GeometryId::Newt, GeometryId::LClass),
];

pub const EQUIVALENCES: [(GeometryId, GeometryId); 1] = [(GeometryId::Rel, GeometryId::Mink)];

/// Expected outcome of adding `rel` to `g` in dimension `d`; `None` when
/// `rel` is already a concept of `g`.
pub fn leiras2(g: GeometryId, rel: RelationId, d: usize) -> Option<Leiras2Verdict> {
    use GeometryId::*;
    use RelationId::*;
    if table_cell(rel, g) == Membership::In {
        return None;
    }
    Some(match (g, rel) {
        (Gal, Rest) => Leiras2Verdict::Rejected,
        (Eucl, Lambda | CongMu) | (Rel | Mink, CongE) if d == 2 => Leiras2Verdict::EquivExceptionalTriple,
        (OAff, Delta) => Leiras2Verdict::EquivLClass,
        (OAff, _) => Leiras2Verdict::Rejected,
        _ => Leiras2Verdict::EquivLClass,
    })
}
