//! Curve codes: boundary curves of the pants decomposition and twisted cycle
//! curves, together with the even relabeling action of the tetrahedron.
//!
//! A cycle curve is determined by a simple cycle of K4 and one integer twist
//! parameter per cycle edge. The tuple form lists all six edge slots with `_`
//! for edges the cycle avoids, e.g. `1,_,0,_,0,1`; boundary curves render as
//! `a1..a6`.

use crate::graph::{cycle, cycle_with_edges, Cycle, CycleId, Edge, Vertex, EDGES};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;

/// A curve on the genus-3 surface subordinate to the tetrahedral pants
/// decomposition: either one of the six decomposition curves or a twisted
/// cycle curve.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurveCode {
    Boundary(Edge),
    Cycle(CycleCurve),
}

/// A twisted cycle curve in canonical form: twist entries are meaningful
/// exactly on the cycle's edges and zero elsewhere, so derived equality is
/// canonical equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleCurve {
    cycle: CycleId,
    twists: [i32; 6],
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("expected 6 comma-separated fields, got {0}")]
    FieldCount(usize),
    #[error("field {0} is neither an integer nor `_`: {1:?}")]
    BadField(usize, String),
    #[error("filled slots {0:?} do not form a simple cycle of K4")]
    NotACycle(Vec<String>),
    #[error("boundary curve must be a1..a6, got {0:?}")]
    BadBoundary(String),
    #[error("twist given for edge {0} which the cycle does not traverse")]
    TwistOffCycle(String),
    #[error("missing twist for cycle edge {0}")]
    MissingTwist(String),
    #[error("unknown edge name {0:?}")]
    BadEdgeName(String),
}

impl CycleCurve {
    /// Builds a canonical cycle curve; `twists` must cover the cycle's edges
    /// exactly.
    pub fn new(cycle_id: CycleId, twists: &[(Edge, i32)]) -> Result<CycleCurve, CodeError> {
        let c = cycle(cycle_id);
        let mut arr = [0i32; 6];
        let mut seen = [false; 6];
        for &(e, t) in twists {
            if !c.contains(e) {
                return Err(CodeError::TwistOffCycle(e.to_string()));
            }
            arr[e.index()] = t;
            seen[e.index()] = true;
        }
        for &e in &c.edges {
            if !seen[e.index()] {
                return Err(CodeError::MissingTwist(e.to_string()));
            }
        }
        Ok(CycleCurve {
            cycle: cycle_id,
            twists: arr,
        })
    }

    pub fn cycle_id(&self) -> CycleId {
        self.cycle
    }

    pub fn cycle(&self) -> Cycle {
        cycle(self.cycle)
    }

    /// Twist at `e`, `None` if the cycle avoids `e`.
    pub fn twist(&self, e: Edge) -> Option<i32> {
        if self.cycle().contains(e) {
            Some(self.twists[e.index()])
        } else {
            None
        }
    }

    pub fn twist_pairs(&self) -> Vec<(Edge, i32)> {
        self.cycle()
            .edges
            .iter()
            .map(|&e| (e, self.twists[e.index()]))
            .collect()
    }

    /// The curve with every twist shifted by `delta` along `edits`.
    pub fn with_twists(&self, edits: &[(Edge, i32)]) -> Result<CycleCurve, CodeError> {
        let mut pairs = self.twist_pairs();
        for &(e, t) in edits {
            match pairs.iter_mut().find(|(pe, _)| *pe == e) {
                Some((_, pt)) => *pt = t,
                None => return Err(CodeError::TwistOffCycle(e.to_string())),
            }
        }
        CycleCurve::new(self.cycle, &pairs)
    }
}

impl CurveCode {
    pub fn boundary(edge_1indexed: u8) -> Option<CurveCode> {
        if (1..=6).contains(&edge_1indexed) {
            Some(CurveCode::Boundary(Edge(edge_1indexed - 1)))
        } else {
            None
        }
    }

    pub fn as_cycle(&self) -> Option<&CycleCurve> {
        match self {
            CurveCode::Cycle(c) => Some(c),
            CurveCode::Boundary(_) => None,
        }
    }

    /// Parses the tuple form (`1,_,0,_,0,1`) or a boundary name (`a4`).
    pub fn parse(text: &str) -> Result<CurveCode, CodeError> {
        let trimmed = text.trim();
        if let Some(rest) = trimmed.strip_prefix('a') {
            if !trimmed.contains(',') {
                let n: u8 = rest
                    .parse()
                    .map_err(|_| CodeError::BadBoundary(trimmed.to_string()))?;
                return CurveCode::boundary(n)
                    .ok_or_else(|| CodeError::BadBoundary(trimmed.to_string()));
            }
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 6 {
            return Err(CodeError::FieldCount(fields.len()));
        }
        let mut twists: Vec<(Edge, i32)> = Vec::new();
        for (i, f) in fields.iter().enumerate() {
            if *f == "_" {
                continue;
            }
            let t: i32 = f
                .parse()
                .map_err(|_| CodeError::BadField(i + 1, (*f).to_string()))?;
            twists.push((Edge(i as u8), t));
        }
        let edges: Vec<Edge> = twists.iter().map(|&(e, _)| e).collect();
        let c = cycle_with_edges(&edges)
            .ok_or_else(|| CodeError::NotACycle(edges.iter().map(|e| e.to_string()).collect()))?;
        Ok(CurveCode::Cycle(CycleCurve::new(c.id, &twists)?))
    }
}

impl fmt::Display for CurveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveCode::Boundary(e) => write!(f, "a{}", e.0 + 1),
            CurveCode::Cycle(c) => {
                let parts: Vec<String> = EDGES
                    .iter()
                    .map(|&e| match c.twist(e) {
                        Some(t) => t.to_string(),
                        None => "_".to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

// --- JSON form ------------------------------------------------------------
//
// {"kind":"boundary","edge":4}
// {"kind":"cycle","edges":[1,3,5,6],"twists":{"e1":1,"e3":0,"e5":0,"e6":1}}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    twists: Option<std::collections::BTreeMap<String, i32>>,
}

impl Serialize for CurveCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let json = match self {
            CurveCode::Boundary(e) => CodeJson {
                kind: "boundary".into(),
                edge: Some(e.0 + 1),
                edges: None,
                twists: None,
            },
            CurveCode::Cycle(c) => CodeJson {
                kind: "cycle".into(),
                edge: None,
                edges: Some(c.cycle().edges.iter().map(|e| e.0 + 1).collect()),
                twists: Some(
                    c.twist_pairs()
                        .into_iter()
                        .map(|(e, t)| (format!("e{}", e.0 + 1), t))
                        .collect(),
                ),
            },
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CurveCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = CodeJson::deserialize(deserializer)?;
        match json.kind.as_str() {
            "boundary" => {
                let e = json.edge.ok_or_else(|| D::Error::custom("missing edge"))?;
                CurveCode::boundary(e).ok_or_else(|| D::Error::custom("edge out of range"))
            }
            "cycle" => {
                let edges = json
                    .edges
                    .ok_or_else(|| D::Error::custom("missing edges"))?;
                let twists = json
                    .twists
                    .ok_or_else(|| D::Error::custom("missing twists"))?;
                let edges: Vec<Edge> = edges
                    .iter()
                    .map(|&n| {
                        if (1..=6).contains(&n) {
                            Ok(Edge(n - 1))
                        } else {
                            Err(D::Error::custom("edge out of range"))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                let c = cycle_with_edges(&edges)
                    .ok_or_else(|| D::Error::custom("edges do not form a cycle"))?;
                let mut pairs: Vec<(Edge, i32)> = Vec::new();
                for (name, t) in &twists {
                    let e = parse_edge_name(name)
                        .ok_or_else(|| D::Error::custom(format!("bad edge name {name:?}")))?;
                    pairs.push((e, *t));
                }
                CycleCurve::new(c.id, &pairs)
                    .map(CurveCode::Cycle)
                    .map_err(D::Error::custom)
            }
            other => Err(D::Error::custom(format!("unknown kind {other:?}"))),
        }
    }
}

fn parse_edge_name(name: &str) -> Option<Edge> {
    let n: u8 = name.strip_prefix('e')?.parse().ok()?;
    if (1..=6).contains(&n) {
        Some(Edge(n - 1))
    } else {
        None
    }
}

// --- The even relabeling action --------------------------------------------

/// An even permutation of the four pants, acting on curves by relabeling.
/// Twist parameters are carried along unchanged.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Relabeling(pub [u8; 4]);

impl Relabeling {
    pub const IDENTITY: Relabeling = Relabeling([0, 1, 2, 3]);

    pub fn apply_vertex(self, v: Vertex) -> Vertex {
        Vertex(self.0[v.index()])
    }

    pub fn apply_edge(self, e: Edge) -> Edge {
        let (u, w) = e.endpoints();
        let (a, b) = (self.apply_vertex(u), self.apply_vertex(w));
        *EDGES
            .iter()
            .find(|x| {
                let (p, q) = x.endpoints();
                (p == a && q == b) || (p == b && q == a)
            })
            .expect("image of an edge is an edge")
    }

    pub fn compose(self, then: Relabeling) -> Relabeling {
        Relabeling(std::array::from_fn(|v| then.0[self.0[v] as usize]))
    }

    pub fn inverse(self) -> Relabeling {
        let mut out = [0u8; 4];
        for v in 0..4 {
            out[self.0[v] as usize] = v as u8;
        }
        Relabeling(out)
    }

    fn is_even(self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// Relabels a curve code; cycles map to cycles and twists follow edges.
    pub fn apply(self, code: &CurveCode) -> CurveCode {
        match code {
            CurveCode::Boundary(e) => CurveCode::Boundary(self.apply_edge(*e)),
            CurveCode::Cycle(c) => {
                let pairs: Vec<(Edge, i32)> = c
                    .twist_pairs()
                    .into_iter()
                    .map(|(e, t)| (self.apply_edge(e), t))
                    .collect();
                let edges: Vec<Edge> = pairs.iter().map(|&(e, _)| e).collect();
                let img = cycle_with_edges(&edges).expect("image of a cycle is a cycle");
                CurveCode::Cycle(CycleCurve::new(img.id, &pairs).expect("canonical image"))
            }
        }
    }
}

impl fmt::Display for Relabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Cycle notation over v1..v4.
        let mut seen = [false; 4];
        let mut out = String::new();
        for start in 0..4 {
            if seen[start] || self.0[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.0[start] as usize;
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.0[cur] as usize;
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|v| format!("v{}", v + 1))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        write!(f, "{out}")
    }
}

/// The twelve even relabelings, ascending by permutation array (identity first).
pub fn relabelings() -> Vec<Relabeling> {
    let mut out = Vec::new();
    let mut items = [0u8, 1, 2, 3];
    permute(&mut items, 0, &mut |p| {
        let r = Relabeling(*p);
        if r.is_even() {
            out.push(r);
        }
    });
    out.sort();
    out
}

fn permute(items: &mut [u8; 4], k: usize, f: &mut impl FnMut(&[u8; 4])) {
    if k == 4 {
        f(items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Relabelings fixing the central pants `v4`: the identity and the two
/// 3-cycles of the outer pants.
pub fn central_stabilizer() -> Vec<Relabeling> {
    relabelings().into_iter().filter(|r| r.0[3] == 3).collect()
}

/// Orbit of a code under the even relabelings, sorted canonically.
pub fn orbit(code: &CurveCode) -> Vec<CurveCode> {
    let set: BTreeSet<CurveCode> = relabelings().iter().map(|r| r.apply(code)).collect();
    set.into_iter().collect()
}

/// Relabelings fixing the code, in canonical order.
pub fn stabilizer(code: &CurveCode) -> Vec<Relabeling> {
    relabelings()
        .into_iter()
        .filter(|r| &r.apply(code) == code)
        .collect()
}

// --- The 33-curve system ----------------------------------------------------

/// Seed triangle curve `1,0,0` on the outer triangle.
pub fn seed_triangle_simple() -> CurveCode {
    CurveCode::parse("1,0,0,_,_,_").expect("valid seed")
}

/// Seed triangle curve `1,1,0` on the outer triangle.
pub fn seed_triangle_double() -> CurveCode {
    CurveCode::parse("1,1,0,_,_,_").expect("valid seed")
}

/// Seed square curve `1,_,0,_,0,1`.
pub fn seed_square() -> CurveCode {
    CurveCode::parse("1,_,0,_,0,1").expect("valid seed")
}

/// The full 33-curve system: the six boundary codes and the relabeling orbits
/// of the three seeds, in canonical order.
pub fn build_x0() -> Vec<CurveCode> {
    let mut set: BTreeSet<CurveCode> = BTreeSet::new();
    for e in EDGES {
        set.insert(CurveCode::Boundary(e));
    }
    for seed in [
        seed_triangle_simple(),
        seed_triangle_double(),
        seed_square(),
    ] {
        set.extend(orbit(&seed));
    }
    set.into_iter().collect()
}

/// Members of the system living on one cycle.
pub fn x0_on_cycle(id: CycleId) -> Vec<CurveCode> {
    build_x0()
        .into_iter()
        .filter(|c| c.as_cycle().map(|cc| cc.cycle_id()) == Some(id))
        .collect()
}

/// Every cycle code over `cycle_id` with all twists in `[lo, hi]`, in
/// lexicographic twist order.
pub fn codes_in_window(cycle_id: CycleId, lo: i32, hi: i32) -> Vec<CycleCurve> {
    let c = cycle(cycle_id);
    let k = c.edges.len();
    let span = (hi - lo + 1) as usize;
    let total = span.pow(k as u32);
    let mut out = Vec::with_capacity(total);
    for mut n in 0..total {
        let mut pairs = Vec::with_capacity(k);
        for &e in &c.edges {
            pairs.push((e, lo + (n % span) as i32));
            n /= span;
        }
        // Least-significant digit ran over the first edge; reorder to make the
        // listing lexicographic in edge order.
        out.push(CycleCurve::new(c.id, &pairs).expect("window code is canonical"));
    }
    out.sort();
    out
}
