//! Decorated o-graphs: 4-regular graphs with knot-diagram crossing data at
//! every vertex and a `Z/3` color on every edge.
//!
//! Each vertex has four edge-ends, numbered 0..3 counterclockwise in the
//! planar picture. Opposite slots `{0, 2}` and `{1, 3}` are the two strands
//! through the crossing; one of them is marked as passing over.
//!
//! Text format (`#` starts a comment):
//!
//! ```text
//! ograph v1
//! vertices <n>
//! vertex <i> over <02|13>
//! edge <i>.<slot> <j>.<slot> color <0|1|2>
//! ```

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OGraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no vertices")]
    NoVertices,
    #[error("vertex {vertex} has {ends} edge-ends, expected 4")]
    Regularity { vertex: usize, ends: usize },
    #[error("edge-end {vertex}.{slot} does not exist (graph has {vertices} vertices)")]
    DanglingEnd {
        vertex: usize,
        slot: usize,
        vertices: usize,
    },
    #[error("edge-end {vertex}.{slot} is used by more than one edge")]
    DuplicateEnd { vertex: usize, slot: u8 },
    #[error("color {color} is not an element of Z/3")]
    ColorOutOfRange { color: u32 },
}

/// One of the four edge-ends of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndRef {
    pub vertex: usize,
    pub slot: u8,
}

impl EndRef {
    pub fn new(vertex: usize, slot: u8) -> Self {
        Self { vertex, slot }
    }
}

impl fmt::Display for EndRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.slot)
    }
}

/// An element of `Z/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Color(u8);

impl Color {
    pub fn new(value: u32) -> Result<Self, OGraphError> {
        if value < 3 {
            Ok(Color(value as u8))
        } else {
            Err(OGraphError::ColorOutOfRange { color: value })
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// Which diagonal pair of slots carries the over-passing strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverStrand {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl OverStrand {
    pub fn is_over(self, slot: u8) -> bool {
        match self {
            OverStrand::Even => slot.is_multiple_of(2),
            OverStrand::Odd => slot % 2 == 1,
        }
    }

    fn token(self) -> &'static str {
        match self {
            OverStrand::Even => "02",
            OverStrand::Odd => "13",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: OverStrand,
}

/// An edge joining two edge-ends. Stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: EndRef,
    pub b: EndRef,
    pub color: Color,
}

impl Edge {
    pub fn new(x: EndRef, y: EndRef, color: Color) -> Self {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        Self { a, b, color }
    }

    pub fn is_loop(&self) -> bool {
        self.a.vertex == self.b.vertex
    }
}

/// A validated o-graph with edges in canonical order, so that `==` is
/// structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OGraph {
    vertices: Vec<Crossing>,
    edges: Vec<Edge>,
    /// `incidence[v][slot]` is the index of the edge using that end.
    incidence: Vec<[usize; 4]>,
}

impl OGraph {
    pub fn new(vertices: Vec<Crossing>, edges: Vec<Edge>) -> Result<Self, OGraphError> {
        let n = vertices.len();
        if n == 0 {
            return Err(OGraphError::NoVertices);
        }
        let mut edges = edges;
        for e in &mut edges {
            *e = Edge::new(e.a, e.b, e.color);
        }
        edges.sort_by_key(|e| (e.a, e.b));

        let mut incidence = vec![[usize::MAX; 4]; n];
        for (idx, e) in edges.iter().enumerate() {
            for end in [e.a, e.b] {
                if end.vertex >= n || end.slot > 3 {
                    return Err(OGraphError::DanglingEnd {
                        vertex: end.vertex,
                        slot: end.slot as usize,
                        vertices: n,
                    });
                }
                let cell = &mut incidence[end.vertex][end.slot as usize];
                if *cell != usize::MAX {
                    return Err(OGraphError::DuplicateEnd {
                        vertex: end.vertex,
                        slot: end.slot,
                    });
                }
                *cell = idx;
            }
        }
        for (vertex, ends) in incidence.iter().enumerate() {
            let used = ends.iter().filter(|&&e| e != usize::MAX).count();
            if used != 4 {
                return Err(OGraphError::Regularity { vertex, ends: used });
            }
        }
        Ok(Self {
            vertices,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Crossing] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_at(&self, end: EndRef) -> &Edge {
        &self.edges[self.incidence[end.vertex][end.slot as usize]]
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Number of unordered vertex pairs joined by exactly two edges.
    pub fn double_edge_count(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.a.vertex, e.b.vertex))
            .collect();
        pairs.sort_unstable();
        pairs
            .chunk_by(|x, y| x == y)
            .filter(|run| run.len() == 2)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for slot in 0..4 {
                let e = self.edge_at(EndRef::new(v, slot));
                for w in [e.a.vertex, e.b.vertex] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Canonical text form.
    pub fn serialize(&self) -> String {
        let mut out = String::from("ograph v1\n");
        out.push_str(&format!("vertices {}\n", self.vertices.len()));
        for (i, c) in self.vertices.iter().enumerate() {
            out.push_str(&format!("vertex {i} over {}\n", c.over.token()));
        }
        for e in &self.edges {
            out.push_str(&format!("edge {} {} color {}\n", e.a, e.b, e.color.value()));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, OGraphError> {
        parse_ograph(text)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> OGraphError {
    OGraphError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_end(token: &str, line: usize) -> Result<EndRef, OGraphError> {
    let (v, s) = token
        .split_once('.')
        .ok_or_else(|| syntax(line, format!("expected <vertex>.<slot>, found {token:?}")))?;
    let vertex = v
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex index {v:?}")))?;
    let slot: u8 = s
        .parse()
        .map_err(|_| syntax(line, format!("bad slot {s:?}")))?;
    Ok(EndRef::new(vertex, slot))
}

/// Parses and validates the text format described in the module docs.
pub fn parse_ograph(text: &str) -> Result<OGraph, OGraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, "ograph v1")) => {}
        Some((n, l)) => return Err(syntax(n, format!("expected header `ograph v1`, found {l:?}"))),
        None => return Err(syntax(1, "empty input")),
    }
    let count: usize = match lines.next() {
        Some((n, l)) => {
            let rest = l
                .strip_prefix("vertices ")
                .ok_or_else(|| syntax(n, "expected `vertices <n>`"))?;
            rest.trim()
                .parse()
                .map_err(|_| syntax(n, format!("bad vertex count {rest:?}")))?
        }
        None => return Err(syntax(1, "missing `vertices <n>` line")),
    };
    if count == 0 {
        return Err(OGraphError::NoVertices);
    }

    let mut crossings: Vec<Option<Crossing>> = vec![None; count];
    let mut edges = Vec::new();
    for (n, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", idx, "over", strand] => {
                let i: usize = idx
                    .parse()
                    .map_err(|_| syntax(n, format!("bad vertex index {idx:?}")))?;
                let over = match *strand {
                    "02" => OverStrand::Even,
                    "13" => OverStrand::Odd,
                    other => return Err(syntax(n, format!("over strand must be 02 or 13, found {other:?}"))),
                };
                let slot = crossings.get_mut(i).ok_or_else(|| {
                    syntax(n, format!("vertex {i} out of range (declared {count})"))
                })?;
                if slot.replace(Crossing { over }).is_some() {
                    return Err(syntax(n, format!("vertex {i} declared twice")));
                }
            }
            ["edge", x, y, "color", c] => {
                let a = parse_end(x, n)?;
                let b = parse_end(y, n)?;
                let c: u32 = c
                    .parse()
                    .map_err(|_| syntax(n, format!("bad color {c:?}")))?;
                edges.push(Edge::new(a, b, Color::new(c)?));
            }
            _ => return Err(syntax(n, format!("unrecognized line {l:?}"))),
        }
    }
    let mut vertices = Vec::with_capacity(count);
    for (i, c) in crossings.into_iter().enumerate() {
        vertices.push(c.ok_or_else(|| syntax(0, format!("vertex {i} has no `vertex` line")))?);
    }
    OGraph::new(vertices, edges)
}

/// Top/bottom color pairs of the five building blocks, left to right.
const BLOCK_A: [(u32, u32); 1] = [(0, 1)];
const BLOCK_B: [(u32, u32); 2] = [(1, 1), (0, 1)];
const BLOCK_C: [(u32, u32); 2] = [(1, 1), (0, 0)];
const BLOCK_D: [(u32, u32); 2] = [(0, 1), (1, 0)];
const BLOCK_E: [(u32, u32); 1] = [(0, 1)];
const LOOP_COLOR: u32 = 1;

/// Double-edge color pairs `(top, bottom)` of `G_n`, `n = 5 + 4s`, left to
/// right: the block word `A B^s C D^s E`.
pub fn gn_color_pairs(s: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity(4 + 4 * s);
    pairs.extend(BLOCK_A);
    for _ in 0..s {
        pairs.extend(BLOCK_B);
    }
    pairs.extend(BLOCK_C);
    for _ in 0..s {
        pairs.extend(BLOCK_D);
    }
    pairs.extend(BLOCK_E);
    pairs
}

/// Builds the chain graph used by `G_n`: vertices in a row, a loop at each
/// end, a double edge between neighbours.
///
/// Slot layout at every vertex (counterclockwise from the positive
/// horizontal direction): interior vertices have 0 = top-right,
/// 1 = top-left, 2 = bottom-left, 3 = bottom-right. The left loop joins
/// slots 1 and 2 of the first vertex, the right loop slots 0 and 3 of the
/// last. The strand bottom-left/top-right is drawn unbroken at every vertex,
/// so slots `{0, 2}` pass over.
pub fn chain_graph(pairs: &[(u32, u32)], loop_color: u32) -> Result<OGraph, OGraphError> {
    let n = pairs.len() + 1;
    let vertices = vec![Crossing { over: OverStrand::Even }; n];
    let loop_color = Color::new(loop_color)?;
    let mut edges = vec![
        Edge::new(EndRef::new(0, 1), EndRef::new(0, 2), loop_color),
        Edge::new(EndRef::new(n - 1, 0), EndRef::new(n - 1, 3), loop_color),
    ];
    for (i, &(top, bottom)) in pairs.iter().enumerate() {
        edges.push(Edge::new(EndRef::new(i, 0), EndRef::new(i + 1, 1), Color::new(top)?));
        edges.push(Edge::new(EndRef::new(i, 3), EndRef::new(i + 1, 2), Color::new(bottom)?));
    }
    OGraph::new(vertices, edges)
}

/// The decorated graph `G_n` with `n = 5 + 4s`.
pub fn generate_gn(s: usize) -> OGraph {
    chain_graph(&gn_color_pairs(s), LOOP_COLOR).expect("block colors are in range")
}

/// A random o-graph with `n` vertices: uniform pairing of the `4n` ends,
/// uniform colors and over-strand flags. Deterministic for a given seed.
pub fn random_ograph(n: usize, seed: u64) -> OGraph {
    assert!(n >= 1, "random_ograph needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ends: Vec<EndRef> = (0..n)
        .flat_map(|v| (0..4).map(move |s| EndRef::new(v, s)))
        .collect();
    ends.shuffle(&mut rng);
    let edges = ends
        .chunks_exact(2)
        .map(|pair| Edge::new(pair[0], pair[1], Color(rng.gen_range(0..3))))
        .collect();
    let vertices = (0..n)
        .map(|_| Crossing {
            over: if rng.gen_bool(0.5) {
                OverStrand::Even
            } else {
                OverStrand::Odd
            },
        })
        .collect();
    OGraph::new(vertices, edges).expect("a perfect matching of ends is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn top_bottom(g: &OGraph) -> Vec<(u8, u8)> {
        (0..g.vertex_count() - 1)
            .map(|i| {
                (
                    g.edge_at(EndRef::new(i, 0)).color.value(),
                    g.edge_at(EndRef::new(i, 3)).color.value(),
                )
            })
            .collect()
    }

    #[test]
    fn g5_shape_and_colors() {
        let g = generate_gn(0);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges().len(), 10);
        assert_eq!(g.loop_count(), 2);
        assert_eq!(g.double_edge_count(), 4);
        assert_eq!(top_bottom(&g), vec![(0, 1), (1, 1), (0, 0), (0, 1)]);
        let loops: Vec<u8> = g.edges().iter().filter(|e| e.is_loop()).map(|e| e.color.value()).collect();
        assert_eq!(loops, vec![1, 1]);
    }

    #[test]
    fn g9_colors_follow_block_word() {
        let g = generate_gn(1);
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(
            top_bottom(&g),
            vec![(0, 1), (1, 1), (0, 1), (1, 1), (0, 0), (0, 1), (1, 0), (0, 1)]
        );
    }

    #[test]
    fn gn_counts() {
        for s in 0..6 {
            let g = generate_gn(s);
            let n = 5 + 4 * s;
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edges().len(), 2 * n);
            assert_eq!(g.loop_count(), 2);
            assert_eq!(g.double_edge_count(), n - 1);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn parse_reports_errors_distinctly() {
        assert_eq!(parse_ograph("ograph v1\nvertices 0\n"), Err(OGraphError::NoVertices));

        let three_ends = "ograph v1\nvertices 1\nvertex 0 over 02\nedge 0.0 0.1 color 0\nedge 0.2 0.2 color 0\n";
        assert!(matches!(parse_ograph(three_ends), Err(OGraphError::DuplicateEnd { .. })));

        let missing = "ograph v1\nvertices 1\nvertex 0 over 02\nedge 0.0 0.1 color 0\n";
        assert_eq!(parse_ograph(missing), Err(OGraphError::Regularity { vertex: 0, ends: 2 }));

        let dangling = "ograph v1\nvertices 1\nvertex 0 over 02\nedge 0.0 1.1 color 0\nedge 0.2 0.3 color 0\n";
        assert!(matches!(parse_ograph(dangling), Err(OGraphError::DanglingEnd { vertex: 1, .. })));

        let color = "ograph v1\nvertices 1\nvertex 0 over 02\nedge 0.0 0.1 color 3\nedge 0.2 0.3 color 0\n";
        assert_eq!(parse_ograph(color), Err(OGraphError::ColorOutOfRange { color: 3 }));

        let bad = "ograph v1\nvertices 1\nvertex 0 over 02\nedge 0.0 0.1 colour 0\n";
        assert!(matches!(parse_ograph(bad), Err(OGraphError::Syntax { line: 4, .. })));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a single crossing\nograph v1\n\nvertices 1 # one\nvertex 0 over 13\nedge 0.3 0.0 color 2\nedge 0.1 0.2 color 1\n";
        let g = parse_ograph(text).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges()[0].a, EndRef::new(0, 0));
        assert_eq!(g.edges()[0].b, EndRef::new(0, 3));
    }

    #[test]
    fn round_trip_generated() {
        for s in 0..3 {
            let g = generate_gn(s);
            assert_eq!(parse_ograph(&g.serialize()).unwrap(), g);
        }
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_ograph(4, 1), random_ograph(4, 1));
        assert_ne!(random_ograph(4, 1), random_ograph(4, 2));
        let one = random_ograph(1, 7);
        assert_eq!(one.edges().len(), 2);
        assert_eq!(one.loop_count(), 2);
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 1usize..12, seed in any::<u64>()) {
            let g = random_ograph(n, seed);
            prop_assert_eq!(parse_ograph(&g.serialize()).unwrap(), g);
        }
    }
}
