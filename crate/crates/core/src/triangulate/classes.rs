use super::{IdealTriangulation, TET_EDGES, tet_edge_index};
use crate::union_find::UnionFind;

/// Partition of the `6n` tetrahedron-edge slots into edge classes. Slot
/// `6t + i` is edge `TET_EDGES[i]` of tetrahedron `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    slot_class: Vec<usize>,
    sizes: Vec<usize>,
}

impl EdgeClassification {
    /// Number of classes, which is the number of 2-components of the spine.
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    /// Class of every slot, numbered in order of the smallest slot.
    pub fn slot_classes(&self) -> &[usize] {
        &self.slot_class
    }

    pub fn class_of(&self, tet: usize, edge: usize) -> usize {
        self.slot_class[6 * tet + edge]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Members of each class, in ascending slot order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.sizes.len()];
        for (slot, &c) in self.slot_class.iter().enumerate() {
            out[c].push(slot);
        }
        out
    }
}

pub fn edge_classes(t: &IdealTriangulation) -> EdgeClassification {
    let n = t.n_tets();
    let mut uf = UnionFind::new(6 * n);
    for (me, g) in t.pairings() {
        for (i, &(a, b)) in TET_EDGES.iter().enumerate() {
            if a == me.face || b == me.face {
                continue;
            }
            let j = tet_edge_index(g.perm.apply(a), g.perm.apply(b));
            uf.union(6 * me.tet + i, 6 * g.partner.tet + j);
        }
    }
    let (slot_class, count) = uf.labels();
    let mut sizes = vec![0; count];
    for &c in &slot_class {
        sizes[c] += 1;
    }
    EdgeClassification { slot_class, sizes }
}

/// Cell counts of the dual special spine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineStrata {
    pub true_vertices: usize,
    pub triple_edges: usize,
    pub components2: usize,
    pub euler: i64,
}

pub fn strata_summary(t: &IdealTriangulation) -> SpineStrata {
    let true_vertices = t.n_tets();
    let triple_edges = t.pairings().count();
    let components2 = edge_classes(t).class_count();
    SpineStrata {
        true_vertices,
        triple_edges,
        components2,
        euler: true_vertices as i64 - triple_edges as i64 + components2 as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ograph::{generate_gn, random_ograph};
    use crate::triangulate::from_ograph;
    use proptest::prelude::*;

    #[test]
    fn gn_has_two_classes_of_size_3n() {
        for s in 0..=4 {
            let t = from_ograph(&generate_gn(s));
            let n = t.n_tets();
            assert_eq!(edge_classes(&t).sizes(), &[3 * n, 3 * n], "s={s}");
        }
    }

    #[test]
    fn strata_of_g5_and_g9() {
        let s5 = strata_summary(&from_ograph(&generate_gn(0)));
        assert_eq!((s5.true_vertices, s5.triple_edges, s5.components2, s5.euler), (5, 10, 2, -3));
        let s9 = strata_summary(&from_ograph(&generate_gn(1)));
        assert_eq!((s9.true_vertices, s9.triple_edges, s9.components2, s9.euler), (9, 18, 2, -7));
    }

    #[test]
    fn one_tetrahedron() {
        let t = from_ograph(&random_ograph(1, 3));
        let s = strata_summary(&t);
        assert_eq!(s.euler, s.components2 as i64 - 1);
    }

    proptest! {
        #[test]
        fn classes_partition_all_slots(n in 1usize..9, seed in any::<u64>()) {
            let t = from_ograph(&random_ograph(n, seed));
            let ec = edge_classes(&t);
            prop_assert_eq!(ec.sizes().iter().sum::<usize>(), 6 * n);
            prop_assert_eq!(ec.classes().iter().map(Vec::len).collect::<Vec<_>>(), ec.sizes().to_vec());
            let s = strata_summary(&t);
            prop_assert_eq!(s.triple_edges, 2 * n);
            prop_assert_eq!(s.euler, s.components2 as i64 - n as i64);
        }
    }
}
