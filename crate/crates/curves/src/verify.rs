//! System-level checks: the 1-system property, saturation over a twist
//! window with a monotone tail certificate, leave-one-out admissibility,
//! reconstruction of the squares from triangle restrictions, and the size
//! bound survey over all decomposition graphs.

use crate::arcs::{self, Family, FormulaError, Intersection, Method, ProjectedArc};
use crate::codes::{codes_in_window, CurveCode, CycleCurve};
use crate::graph::{
    bound_1system, cycle, cycles, enumerate_trivalent_graphs, square_avoiding, Cycle, CycleId,
    Edge, EDGES, OPPOSITE_PAIRS,
};
use crate::oracle;
use std::collections::{BTreeMap, BTreeSet};

/// Which engine establishes intersection values.
///
/// `Formula` and `Both` fall back to the diagram engine on same-cycle pairs,
/// where the projection calculus does not apply; `Both` additionally
/// cross-checks every distinct-cycle value against the diagram and fails
/// loudly on disagreement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Engine {
    Formula,
    Oracle,
    Both,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("engines disagree on {a} vs {b}: projection {formula}, diagram {oracle}")]
    Disagreement {
        a: String,
        b: String,
        formula: u32,
        oracle: u32,
    },
    #[error("diagram value {value} for {a} vs {b} is below the capping bound {bound}")]
    BoundViolated {
        a: String,
        b: String,
        bound: u32,
        value: u32,
    },
    #[error("window radius {0} cannot certify saturation; the tail argument needs radius >= 2")]
    WindowTooSmall(i32),
    #[error("restriction of {cycle} cut at {cut} is not a single point: {count} compatible pairs")]
    RestrictionNotUnique {
        cycle: String,
        cut: String,
        count: usize,
    },
}

/// Strict per-pair entry point: `Formula` refuses same-cycle pairs.
pub fn intersection(
    a: &CurveCode,
    b: &CurveCode,
    engine: Engine,
) -> Result<Intersection, VerifyError> {
    match engine {
        Engine::Formula => Ok(arcs::cross_cycle_intersection(a, b)?),
        Engine::Oracle => Ok(Intersection::exact(
            oracle::intersection_number(a, b),
            Method::Oracle,
        )),
        Engine::Both => match arcs::cross_cycle_intersection(a, b) {
            Ok(f) => {
                let o = oracle::intersection_number(a, b);
                if f.value() == Some(o) {
                    Ok(f)
                } else {
                    Err(VerifyError::Disagreement {
                        a: a.to_string(),
                        b: b.to_string(),
                        formula: f.value().unwrap_or(u32::MAX),
                        oracle: o,
                    })
                }
            }
            Err(FormulaError::SameCycle) => same_cycle_checked(a, b),
            Err(e) => Err(e.into()),
        },
    }
}

fn same_cycle_checked(a: &CurveCode, b: &CurveCode) -> Result<Intersection, VerifyError> {
    let value = oracle::intersection_number(a, b);
    if let (Some(ca), Some(cb)) = (a.as_cycle(), b.as_cycle()) {
        let bound = arcs::torus_lower_bound(ca, cb).expect("same cycle");
        if value < bound {
            return Err(VerifyError::BoundViolated {
                a: a.to_string(),
                b: b.to_string(),
                bound,
                value,
            });
        }
    }
    Ok(Intersection::exact(value, Method::Oracle))
}

/// System-level value: same-cycle pairs go to the diagram engine under every
/// engine choice.
fn pair_value(a: &CurveCode, b: &CurveCode, engine: Engine) -> Result<Intersection, VerifyError> {
    match engine {
        Engine::Formula => match arcs::cross_cycle_intersection(a, b) {
            Ok(f) => Ok(f),
            Err(FormulaError::SameCycle) => Ok(Intersection::exact(
                oracle::intersection_number(a, b),
                Method::Oracle,
            )),
            Err(e) => Err(e.into()),
        },
        Engine::Oracle | Engine::Both => intersection(a, b, engine),
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Violation {
    pub a: CurveCode,
    pub b: CurveCode,
    pub value: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SystemReport {
    pub size: usize,
    pub k: u32,
    pub pairs: usize,
    pub max_pairwise: u32,
    pub violations: Vec<Violation>,
    /// How many pairs each method settled.
    pub methods: BTreeMap<String, usize>,
}

impl SystemReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that all distinct pairs intersect at most `k` times.
pub fn is_k_system(
    curves: &[CurveCode],
    k: u32,
    engine: Engine,
) -> Result<SystemReport, VerifyError> {
    let mut report = SystemReport {
        size: curves.len(),
        k,
        pairs: 0,
        max_pairwise: 0,
        violations: Vec::new(),
        methods: BTreeMap::new(),
    };
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            let r = pair_value(a, b, engine)?;
            let v = r.value().expect("engines produce exact values");
            report.pairs += 1;
            report.max_pairwise = report.max_pairwise.max(v);
            *report.methods.entry(r.method.to_string()).or_insert(0) += 1;
            if v > k {
                report.violations.push(Violation {
                    a: a.clone(),
                    b: b.clone(),
                    value: v,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Blocked {
    pub candidate: CurveCode,
    pub blocker: CurveCode,
    pub value: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RimCheck {
    /// Cycle id of the candidate family, then the probed edge, both 1-indexed
    /// in display form.
    pub cycle: u8,
    pub edge: u8,
    /// First out-of-window twist on the probed side.
    pub side: i32,
    pub blocker: CurveCode,
    /// Lower bound for the blocking value at `side`, for every candidate with
    /// that twist at the probed edge.
    pub value: u32,
    /// Same bound one step further out; soundness needs `value + 1`.
    pub next_value: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct TailCertificate {
    pub checks: Vec<RimCheck>,
    /// Every check reached at least 2 at the rim and grows by exactly one per
    /// step, so it stays blocked arbitrarily far out.
    pub sound: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SaturationReport {
    pub radius: i32,
    pub lo: i32,
    pub hi: i32,
    pub candidates: usize,
    pub members: usize,
    pub blocked: usize,
    pub admissible: Vec<CurveCode>,
    pub tail: TailCertificate,
    /// First blocker per rejected candidate, in candidate order. Large;
    /// omitted from serialized reports.
    #[serde(skip)]
    pub blockers: Vec<Blocked>,
}

impl SaturationReport {
    pub fn holds(&self) -> bool {
        self.admissible.is_empty() && self.tail.sound
    }
}

/// Boundary codes, then every cycle code with twists in `[lo, hi]`.
pub fn window_candidates(lo: i32, hi: i32) -> Vec<CurveCode> {
    let mut out: Vec<CurveCode> = EDGES.iter().map(|&e| CurveCode::Boundary(e)).collect();
    for c in cycles() {
        out.extend(
            codes_in_window(c.id, lo, hi)
                .into_iter()
                .map(CurveCode::Cycle),
        );
    }
    out
}

/// Checks that no curve outside `members` meets every member at most once,
/// over the twist window `[-radius, radius + 1]`, and certifies the window
/// tail. Needs `radius >= 2` for the tail argument.
pub fn saturation_check(
    members: &[CurveCode],
    radius: i32,
    engine: Engine,
) -> Result<SaturationReport, VerifyError> {
    if radius < 2 {
        return Err(VerifyError::WindowTooSmall(radius));
    }
    let (lo, hi) = (-radius, radius + 1);
    let member_set: BTreeSet<&CurveCode> = members.iter().collect();
    let mut report = SaturationReport {
        radius,
        lo,
        hi,
        candidates: 0,
        members: 0,
        blocked: 0,
        admissible: Vec::new(),
        tail: tail_certificate(members, lo, hi),
        blockers: Vec::new(),
    };
    for cand in window_candidates(lo, hi) {
        report.candidates += 1;
        if member_set.contains(&cand) {
            report.members += 1;
            continue;
        }
        let mut blocker: Option<Blocked> = None;
        for m in members {
            let v = pair_value(&cand, m, engine)?.value().expect("exact");
            if v >= 2 {
                blocker = Some(Blocked {
                    candidate: cand.clone(),
                    blocker: m.clone(),
                    value: v,
                });
                break;
            }
        }
        match blocker {
            Some(b) => {
                report.blocked += 1;
                report.blockers.push(b);
            }
            None => report.admissible.push(cand),
        }
    }
    Ok(report)
}

/// For each probed cycle edge and window side, a member on a neighbouring
/// cycle whose blocking value depends only on the candidate's twist at that
/// edge: for a triangle, a member of the adjacent triangle across the edge
/// (single-edge projection, value `|x - m|`); for a square, the member square
/// through the same opposite pair (whose per-edge term `floor(|i - j|)` at the
/// probed edge lower-bounds the two-edge sum).
fn tail_certificate(members: &[CurveCode], lo: i32, hi: i32) -> TailCertificate {
    let mut checks = Vec::new();
    for c in cycles() {
        for &e in &c.edges {
            for (side, step) in [(lo - 1, -1), (hi + 1, 1)] {
                let check = if c.is_triangle() {
                    triangle_rim_check(members, &c, e, side, step)
                } else {
                    square_rim_check(members, &c, e, side, step)
                };
                checks.push(check);
            }
        }
    }
    let sound = checks
        .iter()
        .all(|r| r.value >= 2 && r.next_value == r.value + 1);
    TailCertificate { checks, sound }
}

fn probe_candidate(c: &Cycle, e: Edge, x: i32) -> CycleCurve {
    let pairs: Vec<(Edge, i32)> = c
        .edges
        .iter()
        .map(|&f| (f, if f == e { x } else { 0 }))
        .collect();
    CycleCurve::new(c.id, &pairs).expect("probe code is canonical")
}

fn triangle_rim_check(members: &[CurveCode], c: &Cycle, e: Edge, side: i32, step: i32) -> RimCheck {
    let other = cycles()
        .into_iter()
        .find(|t| t.is_triangle() && t.id != c.id && t.contains(e))
        .expect("each edge lies on two triangles");
    let blocker = members
        .iter()
        .find(|m| {
            m.as_cycle()
                .map(|cc| cc.cycle_id() == other.id && cc.twist(e) == Some(0))
                .unwrap_or(false)
        })
        .expect("members cover twist 0 on every triangle edge")
        .clone();
    let value_at = |x: i32| {
        let cand = CurveCode::Cycle(probe_candidate(c, e, x));
        arcs::cross_cycle_intersection(&cand, &blocker)
            .expect("distinct triangles")
            .value()
            .expect("exact")
    };
    RimCheck {
        cycle: c.id.0 + 1,
        edge: e.0 + 1,
        side,
        value: value_at(side),
        next_value: value_at(side + step),
        blocker,
    }
}

fn square_rim_check(members: &[CurveCode], c: &Cycle, e: Edge, side: i32, step: i32) -> RimCheck {
    let other = cycles()
        .into_iter()
        .find(|s| s.is_square() && s.id != c.id && s.contains(e))
        .expect("each edge lies on two squares");
    let blocker = members
        .iter()
        .find(|m| {
            m.as_cycle()
                .map(|cc| cc.cycle_id() == other.id)
                .unwrap_or(false)
        })
        .expect("one member per square")
        .clone();
    let blocker_cycle = blocker.as_cycle().expect("square member").clone();
    // Per-edge term of the two-edge sum at the probed edge alone: a lower
    // bound because the opposite-edge term is nonnegative.
    let value_at = |x: i32| {
        let cand = probe_candidate(c, e, x);
        let (p, q) = (
            arcs::project(&cand, e).expect("probe traverses e"),
            arcs::project(&blocker_cycle, e).expect("blocker traverses e"),
        );
        arcs::arc_intersection(&p, &q)
    };
    RimCheck {
        cycle: c.id.0 + 1,
        edge: e.0 + 1,
        side,
        value: value_at(side),
        next_value: value_at(side + step),
        blocker,
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct LeaveOneOut {
    pub removed: CurveCode,
    pub admissible: Vec<CurveCode>,
}

/// For each member, the curves in the window admissible after removing it.
/// In a saturated 1-system the removed member itself is always re-admitted.
pub fn leave_one_out(
    members: &[CurveCode],
    radius: i32,
    engine: Engine,
) -> Result<Vec<LeaveOneOut>, VerifyError> {
    if radius < 2 {
        return Err(VerifyError::WindowTooSmall(radius));
    }
    let member_set: BTreeSet<&CurveCode> = members.iter().collect();
    // Blocker sets per candidate, as bitmasks over member indices.
    let candidates = window_candidates(-radius, radius + 1);
    let mut masks: Vec<u64> = Vec::with_capacity(candidates.len());
    for cand in &candidates {
        let mut mask = 0u64;
        for (j, m) in members.iter().enumerate() {
            if cand == m {
                continue;
            }
            let v = pair_value(cand, m, engine)?.value().expect("exact");
            if v >= 2 {
                mask |= 1 << j;
            }
        }
        masks.push(mask);
    }
    let mut out = Vec::with_capacity(members.len());
    for (j, removed) in members.iter().enumerate() {
        let keep = !(1u64 << j);
        let admissible: Vec<CurveCode> = candidates
            .iter()
            .zip(&masks)
            .filter(|&(cand, &mask)| {
                mask & keep == 0 && (cand == removed || !member_set.contains(cand))
            })
            .map(|(cand, _)| cand.clone())
            .collect();
        out.push(LeaveOneOut {
            removed: removed.clone(),
            admissible,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RestrictionReport {
    /// Triangle whose members constrain the square, 1-indexed cycle id.
    pub cycle: u8,
    /// Cut edge (1-indexed) defining the square family.
    pub cut: u8,
    /// The two shared edges carrying the scanned twists, ascending.
    pub edges: (u8, u8),
    pub compatible: Vec<(i32, i32)>,
}

/// Scans twist pairs at the two edges a triangle shares with the square
/// avoiding `cut`, keeping those compatible (value at most 1) with every
/// member on the triangle. The triangle-square value depends only on the
/// shared-edge twists, so compatibility of a pair stands for any extension.
pub fn unique_square_restriction(
    triangle: CycleId,
    cut: Edge,
    radius: i32,
    members: &[CurveCode],
) -> Result<RestrictionReport, VerifyError> {
    if radius < 2 {
        return Err(VerifyError::WindowTooSmall(radius));
    }
    let t = cycle(triangle);
    assert!(
        t.is_triangle() && t.contains(cut),
        "cut must be a triangle edge"
    );
    let s = square_avoiding(cut);
    let shared: Vec<Edge> = t.edges.iter().copied().filter(|&e| e != cut).collect();
    debug_assert!(shared.iter().all(|&e| s.contains(e)));
    let on_triangle: Vec<&CurveCode> = members
        .iter()
        .filter(|m| {
            m.as_cycle()
                .map(|c| c.cycle_id() == triangle)
                .unwrap_or(false)
        })
        .collect();
    let (lo, hi) = (-radius, radius + 1);
    let mut compatible = Vec::new();
    for ta in lo..=hi {
        for tb in lo..=hi {
            let pairs: Vec<(Edge, i32)> = s
                .edges
                .iter()
                .map(|&f| {
                    let v = if f == shared[0] {
                        ta
                    } else if f == shared[1] {
                        tb
                    } else {
                        0
                    };
                    (f, v)
                })
                .collect();
            let cand = CurveCode::Cycle(CycleCurve::new(s.id, &pairs).expect("canonical"));
            let ok = on_triangle.iter().all(|m| {
                arcs::cross_cycle_intersection(&cand, m)
                    .expect("triangle vs square")
                    .value()
                    .expect("exact")
                    <= 1
            });
            if ok {
                compatible.push((ta, tb));
            }
        }
    }
    Ok(RestrictionReport {
        cycle: triangle.0 + 1,
        cut: cut.0 + 1,
        edges: (shared[0].0 + 1, shared[1].0 + 1),
        compatible,
    })
}

/// Rebuilds the three square members from triangle restrictions alone: for
/// each opposite pair, the two triangles through its first edge each force a
/// unique twist pair on the edges they share with the square avoiding it.
pub fn reconstruct_squares(
    members: &[CurveCode],
    radius: i32,
) -> Result<Vec<CurveCode>, VerifyError> {
    let mut out = Vec::new();
    for &(p, _) in &OPPOSITE_PAIRS {
        let s = square_avoiding(p);
        let mut pairs: Vec<(Edge, i32)> = Vec::new();
        for t in cycles()
            .into_iter()
            .filter(|t| t.is_triangle() && t.contains(p))
        {
            let r = unique_square_restriction(t.id, p, radius, members)?;
            if r.compatible.len() != 1 {
                return Err(VerifyError::RestrictionNotUnique {
                    cycle: format!("cycle {}", r.cycle),
                    cut: format!("e{}", r.cut),
                    count: r.compatible.len(),
                });
            }
            let (ta, tb) = r.compatible[0];
            pairs.push((Edge(r.edges.0 - 1), ta));
            pairs.push((Edge(r.edges.1 - 1), tb));
        }
        out.push(CurveCode::Cycle(
            CycleCurve::new(s.id, &pairs).expect("restrictions cover the square"),
        ));
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ComponentRow {
    pub genus: u32,
    pub boundary: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SurveyRow {
    pub edges: Vec<(usize, usize)>,
    pub bridges: usize,
    pub components: Vec<ComponentRow>,
    /// 1-system size bound via bridge cuts; `None` when bridgeless.
    pub bound: Option<u32>,
}

/// Size bounds for 1-systems subordinate to each decomposition graph. Only
/// the bridgeless graphs escape the cut bound, so only they can carry a
/// 1-system larger than 21 curves.
pub fn bound_survey() -> Vec<SurveyRow> {
    enumerate_trivalent_graphs()
        .iter()
        .map(|g| SurveyRow {
            edges: g.edge_list(),
            bridges: g.bridge_count(),
            components: g
                .bridgeless_components()
                .iter()
                .map(|c| ComponentRow {
                    genus: c.genus,
                    boundary: c.boundary,
                })
                .collect(),
            bound: bound_1system(g),
        })
        .collect()
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ArcCase {
    pub family1: String,
    pub index1: String,
    pub family2: String,
    pub index2: String,
    pub expected: u32,
    pub diagram: u32,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ArcTableReport {
    pub cases: Vec<ArcCase>,
    pub mismatches: usize,
}

/// All valid index pairs for the given bound, per family.
fn family_indices(f: Family, max_index: i32) -> Vec<ProjectedArc> {
    let mut out = Vec::new();
    let doubled_max = 2 * max_index;
    let start = if f.is_half() {
        -doubled_max + 1
    } else {
        -doubled_max
    };
    let mut d = start;
    while d <= doubled_max {
        let index = arcs::HalfIndex(d);
        let arc = ProjectedArc { family: f, index };
        debug_assert!(arc.is_valid());
        out.push(arc);
        d += 2;
    }
    out
}

/// Replays every distinct-family arc pair with indices bounded by `max_index`
/// in the two-pants chart and compares against `floor(|i - j|)`.
pub fn arc_table_check(max_index: i32) -> ArcTableReport {
    let mut cases = Vec::new();
    let mut mismatches = 0;
    for (i, &f1) in Family::ALL.iter().enumerate() {
        for &f2 in &Family::ALL[i + 1..] {
            for p in family_indices(f1, max_index) {
                for q in family_indices(f2, max_index) {
                    let expected = arcs::arc_intersection(&p, &q);
                    let diagram = oracle::arc_crossings(f1, p.twist(), f2, q.twist());
                    if expected != diagram {
                        mismatches += 1;
                    }
                    cases.push(ArcCase {
                        family1: f1.to_string(),
                        index1: p.index.to_string(),
                        family2: f2.to_string(),
                        index2: q.index.to_string(),
                        expected,
                        diagram,
                    });
                }
            }
        }
    }
    ArcTableReport { cases, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_x0;
    use crate::graph::CycleId;

    #[test]
    fn x0_is_a_1_system_with_cross_checked_engines() {
        let x0 = build_x0();
        let report = is_k_system(&x0, 1, Engine::Both).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs, 33 * 32 / 2);
        assert_eq!(report.max_pairwise, 1);
    }

    #[test]
    fn window_candidate_count() {
        // 6 boundary + 4 triangles * 6^3 + 3 squares * 6^4 codes.
        assert_eq!(window_candidates(-2, 3).len(), 6 + 4 * 216 + 3 * 1296);
    }

    #[test]
    fn small_window_is_rejected() {
        let x0 = build_x0();
        assert!(matches!(
            saturation_check(&x0, 1, Engine::Formula),
            Err(VerifyError::WindowTooSmall(1))
        ));
    }

    #[test]
    fn restriction_is_unique_for_the_outer_triangle() {
        let x0 = build_x0();
        let r = unique_square_restriction(CycleId(0), Edge(1), 2, &x0).unwrap();
        assert_eq!(r.edges, (1, 3));
        assert_eq!(r.compatible, vec![(1, 0)]);
    }

    #[test]
    fn squares_rebuild_from_triangle_restrictions() {
        let x0 = build_x0();
        let rebuilt = reconstruct_squares(&x0, 2).unwrap();
        let squares: Vec<CurveCode> = x0
            .iter()
            .filter(|c| c.as_cycle().map(|cc| cc.cycle().is_square()) == Some(true))
            .cloned()
            .collect();
        assert_eq!(rebuilt, squares);
    }

    #[test]
    fn survey_bounds_by_bridge_count() {
        let rows = bound_survey();
        let summary: Vec<(usize, Option<u32>)> =
            rows.iter().map(|r| (r.bridges, r.bound)).collect();
        assert_eq!(
            summary,
            vec![
                (0, None),
                (0, None),
                (1, Some(21)),
                (2, Some(14)),
                (3, Some(12))
            ]
        );
    }

    #[test]
    fn arc_table_is_clean_at_small_indices() {
        let report = arc_table_check(2);
        assert_eq!(report.mismatches, 0);
    }
}
