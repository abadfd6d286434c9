//! The boundary surface of the compact manifold.
//!
//! Truncating tetrahedron `t` at vertex `v` leaves a triangle `(t, v)` whose
//! corners are labelled by the other three vertices `w`. Its side opposite
//! corner `f` lies in face `f` and is glued to the side of `(t', p(v))`
//! opposite `p(f)`, where `(t', p)` is the gluing of face `f`.

use super::{FaceRef, IdealTriangulation};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub component_count: usize,
    /// Genus of each component, ordered by the smallest triangle it contains.
    pub genera: Vec<u64>,
    pub euler_boundary: i64,
    /// Vertices of the boundary triangulation, over all components.
    pub vertex_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundaryError {
    #[error("boundary component {component} is not orientable")]
    NonOrientable { component: usize },
    #[error("boundary component {component} has odd Euler characteristic {euler}")]
    OddEuler { component: usize, euler: i64 },
}

/// `+1` if `b` follows `a` in the ascending cyclic order of the labels other
/// than `v`, `-1` if it precedes it.
fn step(v: u8, a: u8, b: u8) -> i8 {
    let cyc: Vec<u8> = (0..4).filter(|&x| x != v).collect();
    let ia = cyc.iter().position(|&x| x == a).expect("corner of triangle");
    if cyc[(ia + 1) % 3] == b { 1 } else { -1 }
}

pub fn boundary_surface(t: &IdealTriangulation) -> Result<BoundaryReport, BoundaryError> {
    let n = t.n_tets();
    let tri = |tet: usize, v: u8| 4 * tet + v as usize;
    let corner = |tet: usize, v: u8, w: u8| 16 * tet + 4 * v as usize + w as usize;

    let mut triangles = UnionFind::new(4 * n);
    let mut corners = UnionFind::new(16 * n);
    for (me, g) in t.pairings() {
        let f = me.face;
        for v in (0..4).filter(|&v| v != f) {
            triangles.union(tri(me.tet, v), tri(g.partner.tet, g.perm.apply(v)));
            for w in (0..4).filter(|&w| w != f && w != v) {
                corners.union(
                    corner(me.tet, v, w),
                    corner(g.partner.tet, g.perm.apply(v), g.perm.apply(w)),
                );
            }
        }
    }
    let (comp_of, count) = triangles.labels();

    let mut faces = vec![0i64; count];
    for &c in &comp_of {
        faces[c] += 1;
    }
    let mut seen = vec![false; 16 * n];
    let mut vertices = vec![0i64; count];
    let mut vertex_count = 0;
    for tet in 0..n {
        for v in 0..4u8 {
            for w in (0..4u8).filter(|&w| w != v) {
                let root = corners.find(corner(tet, v, w));
                if !seen[root] {
                    seen[root] = true;
                    vertices[comp_of[tri(tet, v)]] += 1;
                    vertex_count += 1;
                }
            }
        }
    }

    // Orient triangles by propagation: glued sides must be traversed in
    // opposite directions.
    let mut sign = vec![0i8; 4 * n];
    for start in 0..4 * n {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let (tet, v) = (x / 4, (x % 4) as u8);
            for f in (0..4u8).filter(|&f| f != v) {
                let g = t.gluing(FaceRef::new(tet, f));
                let mut side = (0..4u8).filter(|&w| w != v && w != f);
                let (a, b) = (side.next().unwrap(), side.next().unwrap());
                let pv = g.perm.apply(v);
                let want = -sign[x] * step(v, a, b) * step(pv, g.perm.apply(a), g.perm.apply(b));
                let y = tri(g.partner.tet, pv);
                if sign[y] == 0 {
                    sign[y] = want;
                    stack.push(y);
                } else if sign[y] != want {
                    return Err(BoundaryError::NonOrientable { component: comp_of[x] });
                }
            }
        }
    }

    let mut genera = Vec::with_capacity(count);
    let mut euler_boundary = 0;
    for c in 0..count {
        // Each triangle has three sides and sides are glued in pairs.
        let euler = vertices[c] - 3 * faces[c] / 2 + faces[c];
        if euler % 2 != 0 || euler > 2 {
            return Err(BoundaryError::OddEuler { component: c, euler });
        }
        genera.push(((2 - euler) / 2) as u64);
        euler_boundary += euler;
    }
    Ok(BoundaryReport {
        component_count: count,
        genera,
        euler_boundary,
        vertex_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ograph::{generate_gn, random_ograph};
    use crate::triangulate::{from_ograph, strata_summary};
    use proptest::prelude::*;

    #[test]
    fn g5_boundary_is_connected_genus_4() {
        let b = boundary_surface(&from_ograph(&generate_gn(0))).unwrap();
        assert_eq!(b.component_count, 1);
        assert_eq!(b.genera, vec![4]);
        assert_eq!(b.euler_boundary, -6);
    }

    #[test]
    fn g9_boundary_is_connected_genus_8() {
        let b = boundary_surface(&from_ograph(&generate_gn(1))).unwrap();
        assert_eq!(b.genera, vec![8]);
        assert_eq!(b.euler_boundary, -14);
    }

    #[test]
    fn non_orientable_gluing_is_rejected() {
        // The second gluing preserves orientation.
        let text = "tri v1\ntets 1\nglue 0.0 0.1 perm 023\nglue 0.2 0.3 perm 102\n";
        let t = IdealTriangulation::parse(text).unwrap();
        assert!(t.orientation().is_none());
        assert!(boundary_surface(&t).is_err());
    }

    proptest! {
        #[test]
        fn euler_doubles(n in 1usize..9, seed in any::<u64>()) {
            let t = from_ograph(&random_ograph(n, seed));
            let b = boundary_surface(&t).unwrap();
            let s = strata_summary(&t);
            prop_assert_eq!(b.euler_boundary, 2 * s.euler);
            prop_assert_eq!(b.vertex_count, 2 * s.components2);
        }
    }
}
