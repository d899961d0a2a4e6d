//! Diagram engine: realizes codes as curves in the glued pants charts, counts
//! crossings tube by tube, and removes every bigon before reporting.
//!
//! Positions on a cuff are 64ths of a turn. A chord with corner base `c` and
//! successor cuff `n = next(c)` attaches on `c` in the 7/8 block (slots 57, 58)
//! and on `n` in the 1/8 block (slots 9, 10); the two blocks of one cuff host
//! chords of the two classes touching it, so slot arithmetic never mixes
//! classes. Tubes are glued with a mirror: a strand endpoint at slot `phi` on
//! the smaller-vertex side enters the tube at angle `64 - phi`, at `phi` on the
//! other side, and a twist adds full turns. Two parallel chords of one class
//! sit in seed order on the base cuff and reversed on the successor cuff
//! (planarity of the rainbow); one seed bit per pants fixes the order, and all
//! bigon surgery is seed flipping.

use crate::arcs::{ChordEnd, Family};
use crate::codes::CurveCode;
use crate::graph::{Edge, Vertex, EDGES, VERTICES};

/// A chord class in one pants: corner base cuff and its rotation successor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chord {
    pub base: Edge,
    pub next: Edge,
}

/// A code realized in the charts: at most one chord per pants and one strand
/// (with twist) per tube, or a core circle for a boundary code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Realized {
    core: Option<Edge>,
    chords: [Option<Chord>; 4],
    strands: [Option<i32>; 6],
}

impl Realized {
    pub fn chord(&self, v: Vertex) -> Option<Chord> {
        self.chords[v.index()]
    }

    pub fn strand_twist(&self, e: Edge) -> Option<i32> {
        self.strands[e.index()]
    }

    pub fn is_core(&self) -> bool {
        self.core.is_some()
    }

    /// Winding of each strand in 64ths of a turn relative to the mirror frame,
    /// for the all-first seed order.
    pub fn windings(&self) -> Vec<(Edge, i64)> {
        let mut out = Vec::new();
        for e in EDGES {
            let Some(t) = self.strands[e.index()] else {
                continue;
            };
            let (u, w) = e.endpoints();
            let phi_u = single_phi(self.chords[u.index()].unwrap(), e);
            let phi_w = single_phi(self.chords[w.index()].unwrap(), e);
            out.push((e, phi_w - (64 - phi_u) + 64 * t as i64));
        }
        out
    }
}

fn single_phi(ch: Chord, cuff: Edge) -> i64 {
    if cuff == ch.base {
        57
    } else {
        debug_assert_eq!(cuff, ch.next);
        9
    }
}

/// Realizes a code in the charts of the closed surface.
pub fn realize(code: &CurveCode) -> Realized {
    let mut r = Realized {
        core: None,
        chords: [None; 4],
        strands: [None; 6],
    };
    match code {
        CurveCode::Boundary(e) => r.core = Some(*e),
        CurveCode::Cycle(c) => {
            let cycle = c.cycle();
            for v in cycle.vertices() {
                let (base, next) = cycle.chord_at(v).unwrap();
                r.chords[v.index()] = Some(Chord { base, next });
            }
            for (e, t) in c.twist_pairs() {
                r.strands[e.index()] = Some(t);
            }
        }
    }
    r
}

/// The two-pants chart used by the arc table: pants v1 and v2 glued along e1,
/// the four remaining cuffs left as boundary.
const ARC_TUBE: Edge = Edge(0);

/// Realizes a spanning arc of the given family and twist in the two-pants chart.
pub fn realize_arc(family: Family, twist: i32) -> Realized {
    let mut r = Realized {
        core: None,
        chords: [None; 4],
        strands: [None; 6],
    };
    let (u, w) = ARC_TUBE.endpoints();
    let (tu, tw) = family.end_types();
    r.chords[u.index()] = Some(chord_with_end(ARC_TUBE, u, tu));
    r.chords[w.index()] = Some(chord_with_end(ARC_TUBE, w, tw));
    r.strands[ARC_TUBE.index()] = Some(twist);
    r
}

fn chord_with_end(e: Edge, v: Vertex, ty: ChordEnd) -> Chord {
    match ty {
        ChordEnd::Base => Chord {
            base: e,
            next: e.next_at(v),
        },
        ChordEnd::Next => Chord {
            base: e.prev_at(v),
            next: e,
        },
    }
}

/// Two realized curves over a common chart set. `tube_mask` has bit `i` set
/// when edge `e(i+1)` is a glued tube; other cuffs are surface boundary.
/// `seeds` has bit `j` set when the parallel-chord order in pants `v(j+1)` is
/// swapped.
#[derive(Clone, Copy, Debug)]
struct Overlay {
    a: Realized,
    b: Realized,
    seeds: u8,
    tube_mask: u8,
}

const CLOSED: u8 = 0b111_111;

impl Overlay {
    fn is_tube(&self, e: Edge) -> bool {
        self.tube_mask >> e.index() & 1 == 1
    }

    fn curve(&self, which: usize) -> &Realized {
        if which == 0 {
            &self.a
        } else {
            &self.b
        }
    }

    /// Both curves carry a chord of the same class at `v`.
    fn parallel_at(&self, v: Vertex) -> bool {
        match (self.a.chord(v), self.b.chord(v)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// Attachment slot of one curve's chord on `cuff` at pants `v`.
    fn phi(&self, which: usize, v: Vertex, cuff: Edge) -> i64 {
        let ch = self.curve(which).chord(v).expect("chord present");
        let (pos, count) = if self.parallel_at(v) {
            let flip = (self.seeds >> v.index() & 1) as usize;
            ((which ^ flip) as i64, 2)
        } else {
            (0, 1)
        };
        if cuff == ch.base {
            57 + pos
        } else {
            debug_assert_eq!(cuff, ch.next);
            9 + (count - 1 - pos)
        }
    }

    /// Angle difference between the two strands at both ends of tube `e`,
    /// measured in the tube frame; `None` unless both curves traverse it.
    /// The twist term sits on the larger-vertex side.
    fn tube_d(&self, e: Edge) -> Option<(i64, i64)> {
        let ta = self.a.strand_twist(e)?;
        let tb = self.b.strand_twist(e)?;
        let (u, w) = e.endpoints();
        let d_u = (64 - self.phi(0, u, e)) - (64 - self.phi(1, u, e));
        let d_w = self.phi(0, w, e) - self.phi(1, w, e) + 64 * (ta as i64 - tb as i64);
        debug_assert!(d_u.rem_euclid(64) != 0 && d_w.rem_euclid(64) != 0);
        Some((d_u, d_w))
    }

    fn tube_count(&self, e: Edge) -> Option<u32> {
        let (d_u, d_w) = self.tube_d(e)?;
        Some((d_w.div_euclid(64) - d_u.div_euclid(64)).unsigned_abs() as u32)
    }

    fn total(&self) -> u32 {
        EDGES.iter().filter_map(|&e| self.tube_count(e)).sum()
    }

    /// Follows a corridor link out of pants `p` through `cuff`: the far pants,
    /// if the strands run side by side through the tube and the corridor
    /// continues there. Side by side means no relative winding (`d_u == d_w`,
    /// hence also crossing-free): a winding pair leaves the thin band between
    /// the strands on opposite sides of the two cuffs, and no bigon passes
    /// through a pants outside that band.
    fn link_target(&self, p: Vertex, cuff: Edge) -> Option<Vertex> {
        if !self.is_tube(cuff) {
            return None;
        }
        let (d_u, d_w) = self.tube_d(cuff).expect("shared cuff is traversed");
        if d_u != d_w {
            return None;
        }
        let (x, y) = cuff.endpoints();
        let q = if x == p { y } else { x };
        if !self.parallel_at(q) {
            return None;
        }
        let ch = self.a.chord(q).unwrap();
        debug_assert!(ch.base == cuff || ch.next == cuff);
        Some(q)
    }

    /// Maximal corridors: chains of parallel pants joined through tubes the
    /// strands traverse side by side. Fully cyclic corridors are dropped (they
    /// occur only for disjoint parallel curves). Sorted by first pants.
    fn corridors(&self) -> Vec<Corridor> {
        let mut out = Vec::new();
        let mut used = [false; 4];
        for start in VERTICES {
            if used[start.index()] || !self.parallel_at(start) {
                continue;
            }
            let ch = self.a.chord(start).unwrap();
            // Walk as far as possible along the `base` direction, then record
            // the chain toward the other side.
            let mut tail = start;
            let mut back = ch.base;
            let mut cyclic = false;
            while let Some(q) = self.link_target(tail, back) {
                if q == start {
                    cyclic = true;
                    break;
                }
                let qch = self.a.chord(q).unwrap();
                back = if qch.base == back { qch.next } else { qch.base };
                tail = q;
            }
            if cyclic {
                for v in VERTICES {
                    if self.parallel_at(v) {
                        used[v.index()] = true;
                    }
                }
                continue;
            }
            // `tail` is a terminal pants whose exit cuff is `back`.
            let mut pants = vec![tail];
            used[tail.index()] = true;
            let mut exit = if self.a.chord(tail).unwrap().base == back {
                self.a.chord(tail).unwrap().next
            } else {
                self.a.chord(tail).unwrap().base
            };
            let mut cur = tail;
            while let Some(q) = self.link_target(cur, exit) {
                let qch = self.a.chord(q).unwrap();
                exit = if qch.base == exit { qch.next } else { qch.base };
                pants.push(q);
                used[q.index()] = true;
                cur = q;
            }
            out.push(Corridor {
                pants,
                ends: [(tail, back), (cur, exit)],
            });
        }
        out.sort_by_key(|c| c.ends[0].0);
        out
    }

    /// Whether the strands pinch together across the crossing nearest to the
    /// corridor end that exits `from` into tube `e`: near that end the strands
    /// are one slot apart, and the first crossing cancels when the angle
    /// difference re-enters the near band on the far side.
    fn pinches(&self, e: Edge, from: Vertex) -> (bool, i64) {
        let (d_u, d_w) = self.tube_d(e).expect("end tube is traversed by both");
        let (u, _) = e.endpoints();
        let (d_near, d_far) = if from == u { (d_u, d_w) } else { (d_w, d_u) };
        let m = (d_near + 32).div_euclid(64);
        debug_assert_eq!((d_near - 64 * m).abs(), 1, "corridor end is one slot apart");
        ((d_near - 64 * m > 0) != (d_far - 64 * m > 0), m)
    }

    /// Finds a corridor bounding a bigon (or a half-bigon against surface
    /// boundary) and returns it with the crossing count it will remove.
    fn find_reducible(&self) -> Option<(Corridor, u32)> {
        for c in self.corridors() {
            let kinds = c.ends.map(|(_, cuff)| {
                if !self.is_tube(cuff) {
                    EndKind::Boundary
                } else if self.tube_count(cuff).unwrap() > 0 {
                    EndKind::Crossing
                } else {
                    EndKind::Dead
                }
            });
            let drop = match kinds {
                [EndKind::Crossing, EndKind::Crossing] => {
                    let (p1, m1) = self.pinches(c.ends[0].1, c.ends[0].0);
                    let (p2, m2) = self.pinches(c.ends[1].1, c.ends[1].0);
                    let same_tube = c.ends[0].1 == c.ends[1].1;
                    if p1 && p2 && (!same_tube || m1 != m2) {
                        2
                    } else {
                        continue;
                    }
                }
                [EndKind::Crossing, EndKind::Boundary] => {
                    if self.pinches(c.ends[0].1, c.ends[0].0).0 {
                        1
                    } else {
                        continue;
                    }
                }
                [EndKind::Boundary, EndKind::Crossing] => {
                    if self.pinches(c.ends[1].1, c.ends[1].0).0 {
                        1
                    } else {
                        continue;
                    }
                }
                _ => continue,
            };
            return Some((c, drop));
        }
        None
    }

    /// Reduces to a taut position and returns the crossing count.
    fn reduce(&mut self) -> u32 {
        let mut total = self.total();
        while total > 0 {
            let Some((corridor, drop)) = self.find_reducible() else {
                break;
            };
            for v in &corridor.pants {
                self.seeds ^= 1 << v.index();
            }
            let new_total = self.total();
            assert_eq!(
                new_total,
                total - drop,
                "bigon surgery must remove exactly the bounded crossings"
            );
            total = new_total;
        }
        total
    }
}

#[derive(Clone, Debug)]
struct Corridor {
    pants: Vec<Vertex>,
    /// Terminal pants with their exit cuffs; equal pants (distinct cuffs) for
    /// a one-pants corridor.
    ends: [(Vertex, Edge); 2],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum EndKind {
    Boundary,
    Crossing,
    Dead,
}

fn core_count(core: Edge, other: &Realized) -> u32 {
    // A tube core circle meets exactly the strands through its tube, once each.
    u32::from(other.strand_twist(core).is_some())
}

fn overlay_total(a: &CurveCode, b: &CurveCode, seeds: u8, reduce: bool) -> u32 {
    if a == b {
        return 0;
    }
    let ra = realize(a);
    let rb = realize(b);
    if let Some(e) = ra.core {
        return core_count(e, &rb);
    }
    if let Some(e) = rb.core {
        return core_count(e, &ra);
    }
    let mut ov = Overlay {
        a: ra,
        b: rb,
        seeds,
        tube_mask: CLOSED,
    };
    if reduce {
        ov.reduce()
    } else {
        ov.total()
    }
}

/// Geometric intersection number of two codes, by drawing both curves in the
/// charts and removing every bigon.
pub fn intersection_number(a: &CurveCode, b: &CurveCode) -> u32 {
    overlay_total(a, b, 0, true)
}

/// Same, but starting from a chosen parallel-chord order in each pants. The
/// result never depends on `seeds`; exposed for that property's tests.
pub fn intersection_number_seeded(a: &CurveCode, b: &CurveCode, seeds: u8) -> u32 {
    overlay_total(a, b, seeds, true)
}

/// Crossing count of the initial diagram before bigon removal.
pub fn raw_crossings(a: &CurveCode, b: &CurveCode, seeds: u8) -> u32 {
    overlay_total(a, b, seeds, false)
}

/// Minimal crossing count of two spanning arcs in the two-pants chart (pants
/// v1, v2 glued along e1), each given by family and twist. Free endpoints stay
/// on the boundary cuffs; reduction slides them across half-bigons.
pub fn arc_crossings(f1: Family, t1: i32, f2: Family, t2: i32) -> u32 {
    if f1 == f2 && t1 == t2 {
        return 0;
    }
    let mut ov = Overlay {
        a: realize_arc(f1, t1),
        b: realize_arc(f2, t2),
        seeds: 0,
        tube_mask: 1 << ARC_TUBE.index(),
    };
    ov.reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_x0, seed_square};

    fn code(text: &str) -> CurveCode {
        CurveCode::parse(text).unwrap()
    }

    #[test]
    fn seed_square_is_a_square() {
        assert!(seed_square().as_cycle().unwrap().cycle().is_square());
    }

    #[test]
    fn realize_keeps_windings_small() {
        for text in ["0,0,0,_,_,_", "1,_,0,_,0,1"] {
            let r = realize(&code(text));
            for (e, wind) in r.windings() {
                let t = r.strand_twist(e).unwrap() as i64;
                assert!((wind - 64 * t).abs() < 64, "{text} at {e}");
            }
        }
    }

    #[test]
    fn triangle_twist_differences() {
        let base = code("0,0,0,_,_,_");
        assert_eq!(intersection_number(&base, &code("1,0,0,_,_,_")), 1);
        assert_eq!(intersection_number(&base, &code("2,0,0,_,_,_")), 2);
        assert_eq!(intersection_number(&base, &code("1,1,0,_,_,_")), 2);
        assert_eq!(intersection_number(&base, &code("1,-1,0,_,_,_")), 0);
        assert_eq!(intersection_number(&base, &code("1,1,1,_,_,_")), 3);
    }

    #[test]
    fn same_cycle_reduction_is_seed_independent() {
        let pairs = [
            ("0,0,0,_,_,_", "1,1,0,_,_,_"),
            ("0,0,0,_,_,_", "2,-1,0,_,_,_"),
            ("1,_,0,_,0,1", "0,_,1,_,1,0"),
            ("1,_,0,_,0,1", "1,_,2,_,-1,1"),
        ];
        for (a, b) in pairs {
            let (a, b) = (code(a), code(b));
            let want = intersection_number(&a, &b);
            for seeds in 0..16 {
                assert_eq!(
                    intersection_number_seeded(&a, &b, seeds),
                    want,
                    "{a} {b} {seeds:04b}"
                );
            }
        }
    }

    #[test]
    fn cross_cycle_hand_values() {
        let g3 = code("1,_,0,_,0,1");
        assert_eq!(intersection_number(&code("0,0,0,_,_,_"), &g3), 1);
        assert_eq!(intersection_number(&code("1,0,0,_,_,_"), &g3), 0);
        assert_eq!(intersection_number(&code("0,1,0,_,_,_"), &g3), 1);
        assert_eq!(intersection_number(&code("0,0,1,_,_,_"), &g3), 0);
        assert_eq!(intersection_number(&code("1,1,0,_,_,_"), &g3), 0);
        assert_eq!(intersection_number(&code("1,0,1,_,_,_"), &g3), 1);
        assert_eq!(intersection_number(&code("0,1,1,_,_,_"), &g3), 0);
        assert_eq!(intersection_number(&code("1,1,1,_,_,_"), &g3), 1);
    }

    #[test]
    fn the_three_squares_are_disjoint() {
        let squares = ["1,_,0,_,0,1", "_,0,1,0,1,_", "0,1,_,1,_,0"];
        for a in squares {
            for b in squares {
                assert_eq!(intersection_number(&code(a), &code(b)), 0, "{a} {b}");
            }
        }
    }

    #[test]
    fn boundary_codes_count_memberships() {
        let a1 = code("a1");
        assert_eq!(intersection_number(&a1, &code("a2")), 0);
        assert_eq!(intersection_number(&a1, &code("1,0,0,_,_,_")), 1);
        assert_eq!(intersection_number(&a1, &code("_,0,1,0,1,_")), 0);
        assert_eq!(intersection_number(&a1, &a1), 0);
    }

    #[test]
    fn member_system_has_unit_intersections() {
        let x0 = build_x0();
        assert_eq!(x0.len(), 33);
        for a in &x0 {
            for b in &x0 {
                assert!(intersection_number(a, b) <= 1, "{a} {b}");
            }
        }
    }

    #[test]
    fn arc_chart_distinct_families() {
        use Family::*;
        // Hand-counted diagrams; the index calibration is checked end to end
        // by the arc table acceptance test.
        assert_eq!(arc_crossings(A, 0, B, 0), 0);
        assert_eq!(arc_crossings(A, 1, B, 0), 1);
        assert_eq!(arc_crossings(A, 0, G, 0), 0);
        assert_eq!(arc_crossings(A, -1, G, 0), 0);
        assert_eq!(arc_crossings(A, 0, D, 0), 0);
        assert_eq!(arc_crossings(A, 1, D, 0), 0);
        assert_eq!(arc_crossings(G, 1, D, 0), 0);
        assert_eq!(arc_crossings(G, 0, D, 0), 1);
        assert_eq!(arc_crossings(G, 0, D, 1), 2);
        assert_eq!(arc_crossings(G, 2, D, 0), 1);
    }

    #[test]
    fn arc_chart_same_family_sheds_one() {
        use Family::*;
        for f in [A, B, G, D] {
            assert_eq!(arc_crossings(f, 0, f, 0), 0);
            assert_eq!(arc_crossings(f, 3, f, 0), 2);
            assert_eq!(arc_crossings(f, 0, f, 2), 1);
        }
    }
}
