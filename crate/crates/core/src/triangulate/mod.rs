//! Ideal triangulations and the special spines dual to them.
//!
//! A tetrahedron has vertices `0..4`; face `f` is the face opposite vertex
//! `f`. A gluing of face `f` of tetrahedron `t` to face `g` of `t'` is a
//! permutation `p` with `p(f) = g` that carries the vertices of the first
//! face onto those of the second.
//!
//! In the dual spine, tetrahedra are true vertices, face pairings are triple
//! edges and edge classes are 2-components. The link of a true vertex is a
//! `K4` whose vertices are the four faces and whose edges are the six
//! tetrahedron edges: edge `{a, b}` joins the two faces that contain it.

mod boundary;
mod classes;
mod perm;

pub use boundary::{boundary_surface, BoundaryError, BoundaryReport};
pub use classes::{edge_classes, strata_summary, EdgeClassification, SpineStrata};
pub use perm::Perm4;

use std::fmt;

use crate::ograph::{OGraph, OverStrand};

/// Vertex pairs of the six tetrahedron edges, in slot order.
pub const TET_EDGES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Index of the tetrahedron edge `{a, b}` in [`TET_EDGES`].
pub fn tet_edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not a tetrahedron edge: {{{a}, {b}}}"),
    }
}

/// The three tetrahedron edges lying in face `f`.
pub fn face_edges(f: u8) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for (i, &(a, b)) in TET_EDGES.iter().enumerate() {
        if a != f && b != f {
            out[k] = i;
            k += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangulationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no tetrahedra")]
    NoTetrahedra,
    #[error("face {tet}.{face} does not exist")]
    FaceOutOfRange { tet: usize, face: usize },
    #[error("face {tet}.{face} is glued to itself")]
    SelfGluedFace { tet: usize, face: u8 },
    #[error("face {tet}.{face} is glued more than once")]
    FaceGluedTwice { tet: usize, face: u8 },
    #[error("face {tet}.{face} is not glued")]
    FreeFace { tet: usize, face: u8 },
    #[error("gluing of {tet}.{face}: {message}")]
    BadPermutation { tet: usize, face: u8, message: String },
}

/// One side of a face pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceRef {
    pub tet: usize,
    pub face: u8,
}

impl FaceRef {
    pub fn new(tet: usize, face: u8) -> Self {
        Self { tet, face }
    }
}

impl fmt::Display for FaceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tet, self.face)
    }
}

/// Where a face goes and how its vertices are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceGluing {
    pub partner: FaceRef,
    pub perm: Perm4,
}

/// `n` tetrahedra with every face glued to exactly one other face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTriangulation {
    gluings: Vec<[FaceGluing; 4]>,
}

impl IdealTriangulation {
    /// Builds a triangulation from one entry per face pairing. The reverse
    /// direction of each pairing is filled in automatically.
    pub fn new(
        n_tets: usize,
        pairings: impl IntoIterator<Item = (FaceRef, FaceRef, Perm4)>,
    ) -> Result<Self, TriangulationError> {
        if n_tets == 0 {
            return Err(TriangulationError::NoTetrahedra);
        }
        let mut slots: Vec<[Option<FaceGluing>; 4]> = vec![[None; 4]; n_tets];
        for (x, y, perm) in pairings {
            for r in [x, y] {
                if r.tet >= n_tets || r.face > 3 {
                    return Err(TriangulationError::FaceOutOfRange {
                        tet: r.tet,
                        face: r.face as usize,
                    });
                }
            }
            if x == y {
                return Err(TriangulationError::SelfGluedFace { tet: x.tet, face: x.face });
            }
            if perm.apply(x.face) != y.face {
                return Err(TriangulationError::BadPermutation {
                    tet: x.tet,
                    face: x.face,
                    message: format!("permutation {perm} does not send face {} to face {}", x.face, y.face),
                });
            }
            for (from, to, p) in [(x, y, perm), (y, x, perm.inverse())] {
                let cell = &mut slots[from.tet][from.face as usize];
                if cell.is_some() {
                    return Err(TriangulationError::FaceGluedTwice { tet: from.tet, face: from.face });
                }
                *cell = Some(FaceGluing { partner: to, perm: p });
            }
        }
        let mut gluings = Vec::with_capacity(n_tets);
        for (tet, faces) in slots.into_iter().enumerate() {
            let mut row = [FaceGluing {
                partner: FaceRef::new(0, 0),
                perm: Perm4::IDENTITY,
            }; 4];
            for (face, g) in faces.into_iter().enumerate() {
                row[face] = g.ok_or(TriangulationError::FreeFace { tet, face: face as u8 })?;
            }
            gluings.push(row);
        }
        Ok(Self { gluings })
    }

    pub fn n_tets(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, face: FaceRef) -> FaceGluing {
        self.gluings[face.tet][face.face as usize]
    }

    /// Each face pairing once, from the smaller face reference. The position
    /// in this sequence numbers the triple edges of the dual spine.
    pub fn pairings(&self) -> impl Iterator<Item = (FaceRef, FaceGluing)> + '_ {
        self.gluings.iter().enumerate().flat_map(|(tet, row)| {
            row.iter().enumerate().filter_map(move |(face, g)| {
                let me = FaceRef::new(tet, face as u8);
                (me < g.partner).then_some((me, *g))
            })
        })
    }

    /// Triple-edge index of every face, `[tet][face]`.
    pub fn face_classes(&self) -> Vec<[usize; 4]> {
        let mut out = vec![[0; 4]; self.n_tets()];
        for (idx, (me, g)) in self.pairings().enumerate() {
            out[me.tet][me.face as usize] = idx;
            out[g.partner.tet][g.partner.face as usize] = idx;
        }
        out
    }

    /// Canonical text form:
    ///
    /// ```text
    /// tri v1
    /// tets <n>
    /// glue <i>.<f> <j>.<g> perm <abc>
    /// ```
    ///
    /// where `abc` are the images of the vertices of face `f` in ascending
    /// order.
    pub fn serialize(&self) -> String {
        let mut out = format!("tri v1\ntets {}\n", self.n_tets());
        for (me, g) in self.pairings() {
            let images: String = (0..4u8)
                .filter(|&v| v != me.face)
                .map(|v| char::from(b'0' + g.perm.apply(v)))
                .collect();
            out.push_str(&format!("glue {me} {} perm {images}\n", g.partner));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TriangulationError> {
        parse_triangulation(text)
    }

    /// Assigns `+1`/`-1` to each tetrahedron so that every gluing reverses
    /// orientation. `None` if no such assignment exists.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        let n = self.n_tets();
        let mut sign = vec![0i8; n];
        for start in 0..n {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for g in &self.gluings[t] {
                    // An odd gluing between equally oriented tetrahedra reverses
                    // the induced face orientations.
                    let want = if g.perm.is_odd() { sign[t] } else { -sign[t] };
                    let u = g.partner.tet;
                    if sign[u] == 0 {
                        sign[u] = want;
                        stack.push(u);
                    } else if sign[u] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> TriangulationError {
    TriangulationError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_face(token: &str, line: usize) -> Result<FaceRef, TriangulationError> {
    let (t, f) = token
        .split_once('.')
        .ok_or_else(|| syntax(line, format!("expected <tet>.<face>, found {token:?}")))?;
    let tet = t.parse().map_err(|_| syntax(line, format!("bad tetrahedron index {t:?}")))?;
    let face = f.parse().map_err(|_| syntax(line, format!("bad face {f:?}")))?;
    Ok(FaceRef::new(tet, face))
}

pub fn parse_triangulation(text: &str) -> Result<IdealTriangulation, TriangulationError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "tri v1")) => {}
        Some((n, l)) => return Err(syntax(n, format!("expected header `tri v1`, found {l:?}"))),
        None => return Err(syntax(1, "empty input")),
    }
    let n_tets: usize = match lines.next() {
        Some((n, l)) => {
            let rest = l
                .strip_prefix("tets ")
                .ok_or_else(|| syntax(n, "expected `tets <n>`"))?;
            rest.trim()
                .parse()
                .map_err(|_| syntax(n, format!("bad tetrahedron count {rest:?}")))?
        }
        None => return Err(syntax(1, "missing `tets <n>` line")),
    };
    let mut pairings = Vec::new();
    for (n, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let ["glue", x, y, "perm", images] = tokens.as_slice() else {
            return Err(syntax(n, format!("unrecognized line {l:?}")));
        };
        let x = parse_face(x, n)?;
        let y = parse_face(y, n)?;
        if x.face > 3 || y.face > 3 {
            return Err(TriangulationError::FaceOutOfRange {
                tet: if x.face > 3 { x.tet } else { y.tet },
                face: x.face.max(y.face) as usize,
            });
        }
        let digits: Vec<u8> = images
            .bytes()
            .map(|c| c.wrapping_sub(b'0'))
            .collect();
        if digits.len() != 3 || digits.iter().any(|&d| d > 3) {
            return Err(syntax(n, format!("perm must be three labels 0..3, found {images:?}")));
        }
        let mut map = [0u8; 4];
        map[x.face as usize] = y.face;
        for (v, &img) in (0..4u8).filter(|&v| v != x.face).zip(&digits) {
            map[v as usize] = img;
        }
        let perm = Perm4::new(map).ok_or_else(|| TriangulationError::BadPermutation {
            tet: x.tet,
            face: x.face,
            message: format!("{images:?} does not map face {} onto face {}", x.face, y.face),
        })?;
        pairings.push((x, y, perm));
    }
    IdealTriangulation::new(n_tets, pairings)
}

/// Vertices of face `opposite`, as a cycle that follows the boundary
/// orientation induced by a tetrahedron of orientation `sign`, rotated to
/// start at `start`.
fn oriented_face_cycle(opposite: u8, sign: i8, start: u8) -> [u8; 3] {
    let asc: Vec<u8> = (0..4).filter(|&v| v != opposite).collect();
    // The boundary of [0123] is [123] - [023] + [013] - [012].
    let positive = opposite.is_multiple_of(2) == (sign > 0);
    let cycle = if positive {
        [asc[0], asc[1], asc[2]]
    } else {
        [asc[0], asc[2], asc[1]]
    };
    let k = cycle.iter().position(|&v| v == start).expect("start lies on the face");
    [cycle[k], cycle[(k + 1) % 3], cycle[(k + 2) % 3]]
}

/// One-line statement of the o-graph convention used by [`from_ograph`].
pub const OGRAPH_CONVENTION: &str = "port s is face s+2 (mod 4); vertex s is the region across the sheet from the wall at port s; \
crossings with over strand {0,2} are positively oriented; color c rotates the wall-to-wall identification by c steps";

/// Face of the dual tetrahedron that sits at o-graph slot `slot`.
pub fn face_of_slot(slot: u8) -> u8 {
    (slot + 2) % 4
}

/// Orientation of the tetrahedron dual to a crossing, with the vertex
/// labelling described on [`from_ograph`].
pub fn crossing_orientation(over: OverStrand) -> i8 {
    match over {
        OverStrand::Even => 1,
        OverStrand::Odd => -1,
    }
}

/// The ideal triangulation dual to the special spine encoded by an o-graph.
///
/// Local model at a crossing: a horizontal sheet, an upper wall along the
/// over strand and a lower wall along the under strand. The four
/// complementary regions are the tetrahedron vertices; vertex `s` is the
/// region adjacent to port `s` on the far side of the sheet from that port's
/// wall. Port `s` is then face `s + 2 (mod 4)`, and the wall at port `s` is
/// the tetrahedron edge of that face opposite vertex `s`. Crossings whose
/// over strand is `{1, 3}` carry the opposite orientation under this
/// labelling.
///
/// An edge of color `c` glues the two ports by the orientation-reversing
/// identification that matches wall to wall, followed by `c` steps of
/// rotation in the positive sense about the edge.
pub fn from_ograph(graph: &OGraph) -> IdealTriangulation {
    let pairings = graph.edges().iter().map(|e| {
        let (u, su) = (e.a.vertex, e.a.slot);
        let (v, sv) = (e.b.vertex, e.b.slot);
        let fu = face_of_slot(su);
        let fv = face_of_slot(sv);
        let cu = oriented_face_cycle(fu, crossing_orientation(graph.vertices()[u].over), su);
        let cv = oriented_face_cycle(fv, crossing_orientation(graph.vertices()[v].over), sv);
        let k = e.color.value() as usize;
        let mut map = [0u8; 4];
        map[fu as usize] = fv;
        for i in 0..3 {
            map[cu[i] as usize] = cv[(k + 3 - i) % 3];
        }
        let perm = Perm4::new(map).expect("face cycles are disjoint from the opposite vertex");
        (FaceRef::new(u, fu), FaceRef::new(v, fv), perm)
    });
    IdealTriangulation::new(graph.vertex_count(), pairings)
        .expect("an o-graph pairs every port exactly once")
}
