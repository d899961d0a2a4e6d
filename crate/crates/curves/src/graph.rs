//! The tetrahedral pants graph and the catalogue of trivalent multigraphs on
//! four vertices.
//!
//! A pants decomposition of the closed genus-3 surface with four pairs of pants
//! is encoded by a trivalent multigraph on four vertices. The engine works over
//! the complete graph K4 (the tetrahedral decomposition); `enumerate_trivalent_graphs`
//! produces every decomposition graph up to isomorphism for the bound survey.

use std::fmt;

/// One of the four pairs of pants, `v1..v4`. `v4` is the central pants.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub u8);

/// One of the six curves of the pants decomposition, `e1..e6`.
/// The same six curves appear as boundary codes `a1..a6`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(pub u8);

pub const VERTICES: [Vertex; 4] = [Vertex(0), Vertex(1), Vertex(2), Vertex(3)];
pub const EDGES: [Edge; 6] = [Edge(0), Edge(1), Edge(2), Edge(3), Edge(4), Edge(5)];

/// Endpoints of each K4 edge, smaller vertex first.
/// e1={v1,v2} e2={v2,v3} e3={v3,v1} e4={v4,v1} e5={v4,v2} e6={v4,v3}.
pub const ENDPOINTS: [(Vertex, Vertex); 6] = [
    (Vertex(0), Vertex(1)),
    (Vertex(1), Vertex(2)),
    (Vertex(0), Vertex(2)),
    (Vertex(0), Vertex(3)),
    (Vertex(1), Vertex(3)),
    (Vertex(2), Vertex(3)),
];

/// Counterclockwise cuff order around each pants in the fixed planar embedding
/// (the surface is the boundary of a thickened tetrahedral spine). Invariant
/// under even vertex relabelings.
pub const ROTATION: [[Edge; 3]; 4] = [
    [Edge(0), Edge(3), Edge(2)], // v1: e1, e4, e3
    [Edge(1), Edge(4), Edge(0)], // v2: e2, e5, e1
    [Edge(2), Edge(5), Edge(1)], // v3: e3, e6, e2
    [Edge(3), Edge(4), Edge(5)], // v4: e4, e5, e6
];

/// The three pairs of opposite (vertex-disjoint) edges: (e1,e6), (e2,e4), (e3,e5).
pub const OPPOSITE_PAIRS: [(Edge, Edge); 3] =
    [(Edge(0), Edge(5)), (Edge(1), Edge(3)), (Edge(2), Edge(4))];

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Edge {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        ENDPOINTS[self.index()]
    }

    pub fn is_incident(self, v: Vertex) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == v
    }

    /// The edge opposite to this one (no shared endpoint).
    pub fn opposite(self) -> Edge {
        for &(a, b) in &OPPOSITE_PAIRS {
            if a == self {
                return b;
            }
            if b == self {
                return a;
            }
        }
        unreachable!()
    }

    /// Cuff that follows `self` counterclockwise around pants `v`.
    pub fn next_at(self, v: Vertex) -> Edge {
        let rot = &ROTATION[v.index()];
        let i = rot
            .iter()
            .position(|&e| e == self)
            .expect("edge not at vertex");
        rot[(i + 1) % 3]
    }

    /// Cuff that precedes `self` counterclockwise around pants `v`.
    pub fn prev_at(self, v: Vertex) -> Edge {
        let rot = &ROTATION[v.index()];
        let i = rot
            .iter()
            .position(|&e| e == self)
            .expect("edge not at vertex");
        rot[(i + 2) % 3]
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0 + 1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

/// A simple cycle of K4: one of the four triangles or three squares.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleId(pub u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub id: CycleId,
    /// Edge set, ascending.
    pub edges: Vec<Edge>,
}

impl Cycle {
    pub fn is_triangle(&self) -> bool {
        self.edges.len() == 3
    }

    pub fn is_square(&self) -> bool {
        self.edges.len() == 4
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Vertices visited by the cycle, ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = VERTICES
            .iter()
            .copied()
            .filter(|&v| self.edges.iter().filter(|e| e.is_incident(v)).count() == 2)
            .collect();
        vs.sort();
        vs
    }

    /// The two cycle edges meeting at `v`, in rotation order: returns `(x, y)`
    /// with `y = x.next_at(v)` whenever the pair is rotation-consecutive, which
    /// it always is for a chord of an embedded cycle.
    pub fn chord_at(&self, v: Vertex) -> Option<(Edge, Edge)> {
        let at: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.is_incident(v))
            .collect();
        match at[..] {
            [x, y] => {
                if x.next_at(v) == y {
                    Some((x, y))
                } else {
                    debug_assert_eq!(y.next_at(v), x);
                    Some((y, x))
                }
            }
            _ => None,
        }
    }
}

/// All simple cycles of K4 in canonical order: the four triangles, then the
/// three squares, each group sorted by edge list.
pub fn cycles() -> Vec<Cycle> {
    let raw: [&[u8]; 7] = [
        &[0, 1, 2],
        &[0, 3, 4],
        &[1, 4, 5],
        &[2, 3, 5],
        &[0, 1, 3, 5],
        &[0, 2, 4, 5],
        &[1, 2, 3, 4],
    ];
    raw.iter()
        .enumerate()
        .map(|(i, es)| Cycle {
            id: CycleId(i as u8),
            edges: es.iter().map(|&e| Edge(e)).collect(),
        })
        .collect()
}

pub fn cycle(id: CycleId) -> Cycle {
    cycles()
        .into_iter()
        .nth(id.0 as usize)
        .expect("cycle id out of range")
}

/// Looks up the cycle with exactly this edge set, if it is one.
pub fn cycle_with_edges(edges: &[Edge]) -> Option<Cycle> {
    let mut sorted: Vec<Edge> = edges.to_vec();
    sorted.sort();
    sorted.dedup();
    cycles().into_iter().find(|c| c.edges == sorted)
}

/// The square avoiding an opposite pair: complement of `{e, e.opposite()}`.
pub fn square_avoiding(e: Edge) -> Cycle {
    let avoid = (e, e.opposite());
    let edges: Vec<Edge> = EDGES
        .iter()
        .copied()
        .filter(|&x| x != avoid.0 && x != avoid.1)
        .collect();
    cycle_with_edges(&edges).expect("complement of an opposite pair is a 4-cycle")
}

// ---------------------------------------------------------------------------
// Trivalent multigraphs on four labeled vertices, up to isomorphism.
// ---------------------------------------------------------------------------

/// Unordered vertex pairs (loops included) indexing edge multiplicities.
const PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// A trivalent multigraph on four labeled vertices; loops contribute two to the
/// degree of their vertex and count once as an edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TrivalentGraph {
    /// Multiplicity per unordered vertex pair, in `PAIRS` order.
    pub multiplicity: [u8; 10],
}

impl TrivalentGraph {
    /// Total number of edges, loops counted once. Always six.
    pub fn edge_count(&self) -> u32 {
        self.multiplicity.iter().map(|&m| m as u32).sum()
    }

    pub fn degree(&self, v: usize) -> u32 {
        let mut d = 0;
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            if a == v && b == v {
                d += 2 * self.multiplicity[i] as u32;
            } else if a == v || b == v {
                d += self.multiplicity[i] as u32;
            }
        }
        d
    }

    /// Edge list as vertex pairs, sorted, with multiplicity expanded.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            for _ in 0..self.multiplicity[i] {
                out.push((a, b));
            }
        }
        out
    }

    fn relabel(&self, perm: &[usize; 4]) -> TrivalentGraph {
        let mut m = [0u8; 10];
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            let (mut x, mut y) = (perm[a], perm[b]);
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            let j = PAIRS.iter().position(|&p| p == (x, y)).unwrap();
            m[j] += self.multiplicity[i];
        }
        TrivalentGraph { multiplicity: m }
    }

    /// Lexicographically least multiplicity vector over all vertex relabelings.
    pub fn canonical(&self) -> TrivalentGraph {
        let mut best = self.clone();
        permutations4(|p| {
            let g = self.relabel(&p);
            if g.multiplicity < best.multiplicity {
                best = g;
            }
        });
        best
    }

    fn adjacency_without(&self, skip: Option<usize>) -> [[u8; 4]; 4] {
        let mut adj = [[0u8; 4]; 4];
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            if a == b {
                continue;
            }
            let mut m = self.multiplicity[i];
            if Some(i) == skip {
                m = m.saturating_sub(1);
            }
            adj[a][b] = m;
            adj[b][a] = m;
        }
        adj
    }

    fn reachable(adj: &[[u8; 4]; 4], start: usize) -> [bool; 4] {
        let mut seen = [false; 4];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for w in 0..4 {
                if adj[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// True when the non-loop edges connect all four vertices. Degree 3 rules
    /// out loop-only vertices, so ignoring loops is safe.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency_without(None);
        Self::reachable(&adj, 0).iter().all(|&s| s)
    }

    /// Bridges: non-loop single edges whose removal disconnects their endpoints.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            if a == b || self.multiplicity[i] != 1 {
                continue;
            }
            let adj = self.adjacency_without(Some(i));
            if !Self::reachable(&adj, a)[b] {
                out.push((a, b));
            }
        }
        out
    }

    pub fn bridge_count(&self) -> usize {
        self.bridges().len()
    }

    /// Connected components of the graph with all bridges removed, each with
    /// the subsurface data (genus, boundary count) it induces: genus is the
    /// cyclomatic number of the component, the boundary count is the number of
    /// incident bridges.
    pub fn bridgeless_components(&self) -> Vec<ComponentSurface> {
        let bridges = self.bridges();
        let mut adj = [[0u8; 4]; 4];
        let mut loops = [0u8; 4];
        let mut nonbridge_edges: Vec<(usize, usize)> = Vec::new();
        for (i, &(a, b)) in PAIRS.iter().enumerate() {
            let m = self.multiplicity[i];
            if m == 0 {
                continue;
            }
            if a == b {
                loops[a] += m;
                continue;
            }
            if m == 1 && bridges.contains(&(a, b)) {
                continue;
            }
            adj[a][b] = m;
            adj[b][a] = m;
            for _ in 0..m {
                nonbridge_edges.push((a, b));
            }
        }
        let mut assigned = [usize::MAX; 4];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..4 {
            if assigned[v] != usize::MAX {
                continue;
            }
            let seen = Self::reachable(&adj, v);
            let members: Vec<usize> = (0..4).filter(|&w| seen[w]).collect();
            for &w in &members {
                assigned[w] = comps.len();
            }
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let v = members.len() as i64;
                let e = nonbridge_edges
                    .iter()
                    .filter(|&&(a, _)| members.contains(&a))
                    .count() as i64
                    + members.iter().map(|&m| loops[m] as i64).sum::<i64>();
                let boundary = bridges
                    .iter()
                    .map(|&(a, b)| members.contains(&a) as u32 + members.contains(&b) as u32)
                    .sum::<u32>();
                ComponentSurface {
                    vertices: members,
                    genus: (e - v + 1) as u32,
                    boundary,
                }
            })
            .collect()
    }
}

/// Subsurface induced by a bridgeless component: `genus` handles, `boundary`
/// separating curves along incident bridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSurface {
    pub vertices: Vec<usize>,
    pub genus: u32,
    pub boundary: u32,
}

fn permutations4(mut f: impl FnMut([usize; 4])) {
    let mut items = [0usize, 1, 2, 3];
    // Heap's algorithm, iterative.
    let mut c = [0usize; 4];
    f(items);
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All connected trivalent multigraphs on four vertices up to isomorphism,
/// sorted by bridge count and then by canonical edge list. There are exactly
/// five.
pub fn enumerate_trivalent_graphs() -> Vec<TrivalentGraph> {
    let mut classes: Vec<TrivalentGraph> = Vec::new();
    let mut seen: std::collections::BTreeSet<[u8; 10]> = std::collections::BTreeSet::new();
    let mut m = [0u8; 10];
    enumerate_rec(&mut m, 0, &mut |g: &TrivalentGraph| {
        let canon = g.canonical();
        if seen.insert(canon.multiplicity) {
            classes.push(canon);
        }
    });
    classes.sort_by_key(|g| (g.bridge_count(), g.edge_list()));
    classes
}

fn enumerate_rec(m: &mut [u8; 10], slot: usize, emit: &mut impl FnMut(&TrivalentGraph)) {
    if slot == 10 {
        let g = TrivalentGraph { multiplicity: *m };
        if (0..4).all(|v| g.degree(v) == 3) && g.is_connected() {
            emit(&g);
        }
        return;
    }
    // Degree bound of 3 caps every multiplicity at 3 (loops at 1).
    let (a, b) = PAIRS[slot];
    let cap = if a == b { 1 } else { 3 };
    for v in 0..=cap {
        m[slot] = v;
        // Prune: no vertex may exceed degree 3 among decided slots.
        let g = TrivalentGraph { multiplicity: *m };
        if (0..4).all(|v| {
            let mut d = 0;
            for (i, &(x, y)) in PAIRS.iter().enumerate().take(slot + 1) {
                if x == v && y == v {
                    d += 2 * g.multiplicity[i] as u32;
                } else if x == v || y == v {
                    d += g.multiplicity[i] as u32;
                }
            }
            d <= 3
        }) {
            enumerate_rec(m, slot + 1, emit);
        }
    }
    m[slot] = 0;
}

/// Size table for maximal 1-systems on a subsurface of the given genus and
/// boundary count, where known. A planar piece carries no essential curve.
pub fn bound_table(genus: u32, boundary: u32) -> Option<u32> {
    match (genus, boundary) {
        (0, _) => Some(0),
        (1, n) => Some(3 * n),
        (2, 1) => Some(17),
        _ => None,
    }
}

/// Upper bound for a 1-system subordinate to the decomposition graph: curves
/// either live in a bridgeless component's subsurface or are parallel to a
/// bridge curve. `None` when the graph is bridgeless (no bound by this method)
/// or when a component falls outside the table.
pub fn bound_1system(g: &TrivalentGraph) -> Option<u32> {
    let bridges = g.bridge_count() as u32;
    if bridges == 0 {
        return None;
    }
    let mut total = bridges;
    for comp in g.bridgeless_components() {
        total += bound_table(comp.genus, comp.boundary)?;
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_lists_incident_edges() {
        for v in VERTICES {
            for e in ROTATION[v.index()] {
                assert!(e.is_incident(v));
            }
        }
    }

    #[test]
    fn opposite_pairs_are_disjoint() {
        for (a, b) in OPPOSITE_PAIRS {
            let (u1, u2) = a.endpoints();
            let (w1, w2) = b.endpoints();
            assert!(u1 != w1 && u1 != w2 && u2 != w1 && u2 != w2);
            assert_eq!(a.opposite(), b);
            assert_eq!(b.opposite(), a);
        }
    }

    #[test]
    fn seven_cycles_with_lengths_three_and_four() {
        let cs = cycles();
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.iter().filter(|c| c.is_triangle()).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.is_square()).count(), 3);
        // Never a 2-cycle: each cycle visits 3 or 4 pants.
        for c in &cs {
            assert!(c.vertices().len() == c.edges.len());
        }
    }

    #[test]
    fn chords_are_rotation_consecutive() {
        for c in cycles() {
            for v in c.vertices() {
                let (x, y) = c.chord_at(v).unwrap();
                assert_eq!(x.next_at(v), y);
            }
        }
    }

    #[test]
    fn triangle_and_square_shared_edges() {
        let cs = cycles();
        for a in &cs {
            for b in &cs {
                if a.id >= b.id {
                    continue;
                }
                let shared: Vec<Edge> =
                    a.edges.iter().copied().filter(|&e| b.contains(e)).collect();
                match (a.edges.len(), b.edges.len()) {
                    (3, 3) => assert_eq!(shared.len(), 1),
                    (3, 4) | (4, 3) => {
                        assert_eq!(shared.len(), 2);
                        // Adjacent, not opposite.
                        assert_ne!(shared[0].opposite(), shared[1]);
                    }
                    (4, 4) => {
                        assert_eq!(shared.len(), 2);
                        assert_eq!(shared[0].opposite(), shared[1]);
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn five_graph_classes_with_expected_bridges() {
        let classes = enumerate_trivalent_graphs();
        assert_eq!(classes.len(), 5);
        let bridges: Vec<usize> = classes.iter().map(|g| g.bridge_count()).collect();
        assert_eq!(bridges, vec![0, 0, 1, 2, 3]);
        for g in &classes {
            assert_eq!(g.edge_count(), 6);
        }
    }

    #[test]
    fn euler_characteristic_bookkeeping() {
        // Sum of (2g + b - 2) over bridgeless components equals 4 = -chi.
        for g in enumerate_trivalent_graphs() {
            let total: i64 = g
                .bridgeless_components()
                .iter()
                .map(|c| 2 * c.genus as i64 + c.boundary as i64 - 2)
                .sum();
            assert_eq!(total, 4, "graph {:?}", g.edge_list());
        }
    }

    #[test]
    fn k4_is_enumerated_and_bridgeless() {
        let k4 = TrivalentGraph {
            multiplicity: [0, 1, 1, 1, 0, 1, 1, 0, 1, 0],
        };
        let classes = enumerate_trivalent_graphs();
        assert!(classes.contains(&k4.canonical()));
        assert_eq!(bound_1system(&k4), None);
    }
}
