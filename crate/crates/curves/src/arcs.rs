//! Projection calculus: intersection numbers of cycle curves computed from
//! per-edge arc data instead of an explicit diagram.
//!
//! Cutting the surface along four of the six decomposition curves leaves a
//! 4-holed sphere around each remaining edge; a cycle curve through that edge
//! projects to a spanning arc classified by one of four families (which pair
//! of cuffs it joins) and a half-integer index. Two of the families carry
//! integer indices, the two "diagonal" families carry indices in Z + 1/2.
//! Intersection numbers of distinct-cycle curves reduce to floor differences
//! of these indices, except for triangle-square pairs whose shared edges meet
//! at a pants: those need both relative placements of the shared chord (the
//! cut subsurfaces overlap), giving a two-branch minimum instead of a sum.

use crate::codes::{CurveCode, CycleCurve};
use crate::graph::{Edge, Vertex, EDGES};
use std::fmt;

/// Arc family in the 4-holed sphere around an edge, named by the chord types
/// at the two ends of the tube (`Base` = the chord whose corner sits at this
/// cuff, `Next` = the chord carried over from the rotation-predecessor cuff).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// `(Next, Base)`: integer indices.
    A,
    /// `(Base, Next)`: integer indices.
    B,
    /// `(Next, Next)`: indices in Z + 1/2.
    G,
    /// `(Base, Base)`: indices in Z + 1/2.
    D,
}

/// Chord type at one end of a tube.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChordEnd {
    /// The cuff is the corner base of the chord (7/8 attachment block).
    Base,
    /// The cuff is the rotation successor of the chord's base (1/8 block).
    Next,
}

impl Family {
    pub fn end_types(self) -> (ChordEnd, ChordEnd) {
        match self {
            Family::A => (ChordEnd::Next, ChordEnd::Base),
            Family::B => (ChordEnd::Base, ChordEnd::Next),
            Family::G => (ChordEnd::Next, ChordEnd::Next),
            Family::D => (ChordEnd::Base, ChordEnd::Base),
        }
    }

    fn from_end_types(u: ChordEnd, w: ChordEnd) -> Family {
        match (u, w) {
            (ChordEnd::Next, ChordEnd::Base) => Family::A,
            (ChordEnd::Base, ChordEnd::Next) => Family::B,
            (ChordEnd::Next, ChordEnd::Next) => Family::G,
            (ChordEnd::Base, ChordEnd::Base) => Family::D,
        }
    }

    /// Families carrying half-integer indices.
    pub fn is_half(self) -> bool {
        matches!(self, Family::G | Family::D)
    }

    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::G, Family::D];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::G => "G",
            Family::D => "D",
        };
        write!(f, "{s}")
    }
}

/// Exact half-integer, stored doubled.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfIndex(pub i32);

impl HalfIndex {
    pub fn from_integer(n: i32) -> HalfIndex {
        HalfIndex(2 * n)
    }

    /// `n + 1/2`.
    pub fn from_half(n: i32) -> HalfIndex {
        HalfIndex(2 * n + 1)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn doubled(self) -> i32 {
        self.0
    }
}

impl fmt::Display for HalfIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Projection of a cycle curve to the 4-holed sphere around one edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProjectedArc {
    pub family: Family,
    pub index: HalfIndex,
}

impl ProjectedArc {
    /// Index parity must match the family.
    pub fn is_valid(&self) -> bool {
        self.family.is_half() != self.index.is_integer()
    }

    /// Twist parameter realizing this arc: inverse of the index calibration.
    pub fn twist(&self) -> i32 {
        let d = self.index.doubled();
        match self.family {
            Family::A | Family::B => d / 2,
            Family::G => (d + 1) / 2,
            Family::D => (d - 1) / 2,
        }
    }
}

impl fmt::Display for ProjectedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.family, self.index)
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("curve does not traverse edge {0}")]
    EdgeNotOnCycle(String),
    #[error("codes lie on the same cycle; only the diagram engine computes such pairs")]
    SameCycle,
    #[error("projected arcs have mismatched index parity for their families")]
    ParityMismatch,
}

/// How an exact intersection value was established.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Disjointness,
    EdgeMembership,
    SingleEdgeProjection,
    TwoEdgeSum,
    TorusCapping,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Disjointness => "disjointness",
            Method::EdgeMembership => "edge-membership",
            Method::SingleEdgeProjection => "single-edge-projection",
            Method::TwoEdgeSum => "two-edge-sum",
            Method::TorusCapping => "torus-capping",
            Method::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

/// An intersection value: exact, or bracketed when only bounds are available.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Intersection {
    pub lo: u32,
    pub hi: u32,
    pub method: Method,
}

impl Intersection {
    pub fn exact(value: u32, method: Method) -> Intersection {
        Intersection {
            lo: value,
            hi: value,
            method,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<u32> {
        self.is_exact().then_some(self.lo)
    }
}

/// Chord type of `curve` at the `at`-side end of `edge`.
fn end_type(curve: &CycleCurve, edge: Edge, at: Vertex) -> ChordEnd {
    let (base, next) = curve.cycle().chord_at(at).expect("cycle visits this pants");
    if edge == base {
        ChordEnd::Base
    } else {
        debug_assert_eq!(edge, next);
        ChordEnd::Next
    }
}

/// Projects a cycle curve to the 4-holed sphere around `edge`.
///
/// Calibration: families A, B keep the twist as index; G is `twist - 1/2`,
/// D is `twist + 1/2`.
pub fn project(curve: &CycleCurve, edge: Edge) -> Result<ProjectedArc, FormulaError> {
    let twist = curve
        .twist(edge)
        .ok_or_else(|| FormulaError::EdgeNotOnCycle(edge.to_string()))?;
    let (u, w) = edge.endpoints();
    let family = Family::from_end_types(end_type(curve, edge, u), end_type(curve, edge, w));
    let index = match family {
        Family::A | Family::B => HalfIndex::from_integer(twist),
        Family::G => HalfIndex::from_half(twist - 1),
        Family::D => HalfIndex::from_half(twist),
    };
    Ok(ProjectedArc { family, index })
}

/// Geometric intersection number of two projected arcs over the same edge:
/// `floor(|i1 - i2|)`, which is `|n - m|` when the indices share parity.
pub fn arc_intersection(p: &ProjectedArc, q: &ProjectedArc) -> u32 {
    debug_assert!(p.is_valid() && q.is_valid());
    (p.index.doubled() - q.index.doubled()).unsigned_abs() / 2
}

/// Exact intersection number of codes on distinct cycles (or boundary codes),
/// by per-edge projection data alone.
pub fn cross_cycle_intersection(
    c1: &CurveCode,
    c2: &CurveCode,
) -> Result<Intersection, FormulaError> {
    if c1 == c2 {
        return Ok(Intersection::exact(0, Method::Disjointness));
    }
    match (c1, c2) {
        (CurveCode::Boundary(_), CurveCode::Boundary(_)) => {
            Ok(Intersection::exact(0, Method::Disjointness))
        }
        (CurveCode::Boundary(e), CurveCode::Cycle(c))
        | (CurveCode::Cycle(c), CurveCode::Boundary(e)) => {
            let v = u32::from(c.cycle().contains(*e));
            Ok(Intersection::exact(v, Method::EdgeMembership))
        }
        (CurveCode::Cycle(a), CurveCode::Cycle(b)) => {
            if a.cycle_id() == b.cycle_id() {
                return Err(FormulaError::SameCycle);
            }
            let shared: Vec<Edge> = a
                .cycle()
                .edges
                .iter()
                .copied()
                .filter(|&e| b.cycle().contains(e))
                .collect();
            match shared[..] {
                [e] => {
                    let (p, q) = (project(a, e)?, project(b, e)?);
                    debug_assert!(
                        !p.family.is_half() && !q.family.is_half() && p.family != q.family
                    );
                    Ok(Intersection::exact(
                        arc_intersection(&p, &q),
                        Method::SingleEdgeProjection,
                    ))
                }
                [e, f] if e.opposite() == f => {
                    // Two squares; the cut subsurfaces around the shared edges
                    // are disjoint, so per-edge counts add.
                    let mut total = 0;
                    for &x in &[e, f] {
                        let (p, q) = (project(a, x)?, project(b, x)?);
                        debug_assert!(
                            p.family.is_half() && q.family.is_half() && p.family != q.family
                        );
                        total += arc_intersection(&p, &q);
                    }
                    Ok(Intersection::exact(total, Method::TwoEdgeSum))
                }
                [e, f] => {
                    // Triangle and square: shared edges meet at one pants, the
                    // subsurfaces overlap, and the shared chord admits two
                    // relative placements; the count is the better of the two.
                    let (tri, sq) = if a.cycle().is_triangle() {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    debug_assert!(tri.cycle().is_triangle() && sq.cycle().is_square());
                    let x = shared_vertex(e, f);
                    let (base, next) = tri.cycle().chord_at(x).expect("shared pants");
                    debug_assert_eq!(sq.cycle().chord_at(x), Some((base, next)));
                    let da = tri.twist(next).unwrap() as i64 - sq.twist(next).unwrap() as i64;
                    let db = tri.twist(base).unwrap() as i64 - sq.twist(base).unwrap() as i64;
                    let value = (da.abs() + db.abs()).min((da + 1).abs() + (db - 1).abs());
                    Ok(Intersection::exact(value as u32, Method::TwoEdgeSum))
                }
                _ => unreachable!("distinct cycles share one or two edges"),
            }
        }
    }
}

fn shared_vertex(e: Edge, f: Edge) -> Vertex {
    let (a, b) = e.endpoints();
    if f.is_incident(a) {
        a
    } else {
        debug_assert!(f.is_incident(b));
        b
    }
}

/// Lower bound for same-cycle pairs: cap all cuffs of the cycle's subsurface
/// to get a torus, where the pair becomes a pair of lines of slopes given by
/// total twist.
pub fn torus_lower_bound(c1: &CycleCurve, c2: &CycleCurve) -> Result<u32, FormulaError> {
    if c1.cycle_id() != c2.cycle_id() {
        return Err(FormulaError::SameCycle);
    }
    let sum: i64 = c1
        .twist_pairs()
        .into_iter()
        .zip(c2.twist_pairs())
        .map(|((_, t1), (_, t2))| t1 as i64 - t2 as i64)
        .sum();
    Ok(sum.unsigned_abs() as u32)
}

// --- Frozen family assignment table ----------------------------------------

/// The family assignment table shipped with the crate: for every edge and
/// every cuff pair (other edge at each end), the arc family. Derived from the
/// rotation system; `family_table_text` regenerates it bit for bit.
pub const FAMILY_TABLE: &str = include_str!("../data/family_table.txt");

/// Regenerates the assignment table from the rotation system.
pub fn family_table_text() -> String {
    let mut out = String::new();
    out.push_str("# family of the spanning arc through an edge, by cuff pair\n");
    out.push_str("# edge  cuff-at-u,cuff-at-w  family\n");
    for e in EDGES {
        let (u, w) = e.endpoints();
        for cu in [e.prev_at(u), e.next_at(u)] {
            for cw in [e.prev_at(w), e.next_at(w)] {
                let tu = if cu == e.next_at(u) {
                    ChordEnd::Base
                } else {
                    ChordEnd::Next
                };
                let tw = if cw == e.next_at(w) {
                    ChordEnd::Base
                } else {
                    ChordEnd::Next
                };
                let fam = Family::from_end_types(tu, tw);
                out.push_str(&format!("{e} {cu},{cw} {fam}\n"));
            }
        }
    }
    out
}
