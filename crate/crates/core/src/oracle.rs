//! Independent reference computations used by the tests and the claim
//! checker. Each one avoids the shortcut taken by the production path it
//! checks.

use num_bigint::BigInt;

use crate::subpoly::Selection;
use crate::triangulate::{edge_classes, IdealTriangulation, FaceRef, TET_EDGES};
use crate::volume::quadrature::integrate;

/// Homeomorphism type of a finite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkType {
    Empty,
    Circle,
    Theta,
    K4,
    Other,
}

/// Classifies a multigraph on `vertex_count` vertices up to homeomorphism,
/// by smoothing degree-2 vertices and matching the reduced graph against the
/// admissible link shapes.
pub fn classify_graph(vertex_count: usize, edges: &[(usize, usize)]) -> LinkType {
    let mut edges: Vec<(usize, usize)> = edges.to_vec();
    let mut alive: Vec<bool> = (0..vertex_count)
        .map(|v| edges.iter().any(|&(a, b)| a == v || b == v))
        .collect();
    if !alive.iter().any(|&x| x) {
        return LinkType::Empty;
    }
    if !connected(vertex_count, &alive, &edges) {
        return LinkType::Other;
    }
    loop {
        let degree = |v: usize, edges: &[(usize, usize)]| {
            edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum::<usize>()
        };
        let smoothable = (0..vertex_count).find(|&v| {
            alive[v]
                && degree(v, &edges) == 2
                && !edges.iter().any(|&(a, b)| a == v && b == v)
        });
        let Some(v) = smoothable else { break };
        let incident: Vec<usize> = (0..edges.len())
            .filter(|&i| edges[i].0 == v || edges[i].1 == v)
            .collect();
        let other = |(a, b): (usize, usize)| if a == v { b } else { a };
        let joined = (other(edges[incident[0]]), other(edges[incident[1]]));
        edges.remove(incident[1]);
        edges.remove(incident[0]);
        edges.push(joined);
        alive[v] = false;
    }
    let verts: Vec<usize> = (0..vertex_count).filter(|&v| alive[v]).collect();
    match (verts.len(), edges.len()) {
        (1, 1) if edges[0].0 == edges[0].1 => LinkType::Circle,
        (2, 3) if edges.iter().all(|&(a, b)| a != b) => LinkType::Theta,
        (4, 6) => {
            let mut pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            pairs.sort_unstable();
            pairs.dedup();
            if pairs.len() == 6 && pairs.iter().all(|&(a, b)| a != b) {
                LinkType::K4
            } else {
                LinkType::Other
            }
        }
        _ => LinkType::Other,
    }
}

fn connected(n: usize, alive: &[bool], edges: &[(usize, usize)]) -> bool {
    let start = (0..n).find(|&v| alive[v]).expect("nonempty");
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    (0..n).all(|v| !alive[v] || seen[v])
}

/// Decides simplicity of a selection by building every point link
/// explicitly: the link at each true vertex is the subgraph of `K4` on the
/// four faces, and the link at a point of a triple edge has two vertices and
/// one edge per selected wing.
pub fn link_graph_is_simple(t: &IdealTriangulation, sel: Selection) -> bool {
    let ec = edge_classes(t);
    for tet in 0..t.n_tets() {
        let mut link = Vec::new();
        for (i, &(a, b)) in TET_EDGES.iter().enumerate() {
            if sel.contains(ec.class_of(tet, i)) {
                // Edge {a, b} lies in the two faces opposite the other vertices.
                let faces: Vec<usize> = (0..4).filter(|&f| f != a as usize && f != b as usize).collect();
                link.push((faces[0], faces[1]));
            }
        }
        if classify_graph(4, &link) == LinkType::Other {
            return false;
        }
    }
    for (me, _) in t.pairings() {
        let FaceRef { tet, face } = me;
        let wings = TET_EDGES
            .iter()
            .enumerate()
            .filter(|&(i, &(a, b))| a != face && b != face && sel.contains(ec.class_of(tet, i)))
            .count();
        let link = vec![(0, 1); wings];
        if !matches!(classify_graph(2, &link), LinkType::Empty | LinkType::Circle | LinkType::Theta) {
            return false;
        }
    }
    true
}

/// `F_0 ..= F_n` by repeated addition.
pub fn fibonacci(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0), BigInt::from(1)];
    while out.len() <= n {
        let next = &out[out.len() - 1] + &out[out.len() - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `-integral_0^x ln|2 sin z| dz` by adaptive quadrature, for `0 <= x <= pi`.
pub fn lobachevsky_by_quadrature(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let f = |z: f64| -(2.0 * z.sin()).abs().ln();
    integrate(f, 0.0, x, 1e-12).expect("integrable log singularity").value
}
