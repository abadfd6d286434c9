//! Simple subpolyhedra of a special spine.
//!
//! Every simple subpolyhedron is a union of closed 2-components, so it is
//! named by a bitmask over the edge classes. At a true vertex the link of the
//! subpolyhedron is the subgraph of `K4` spanned by the selected tetrahedron
//! edges, with `K4` vertices the faces of the tetrahedron. The admissible
//! links (circle, theta and `K4` itself, plus the empty graph) are exactly the
//! subgraphs in which every face has degree 0, 2 or 3. The same face degree
//! counts the selected wings along the dual triple edge.

use rayon::prelude::*;

use crate::triangulate::{edge_classes, face_edges, IdealTriangulation};

/// Largest number of 2-components for which subsets fit a bitmask.
pub const MAX_COMPONENTS: usize = 62;

/// Serial enumeration below this many 2-components.
const PARALLEL_THRESHOLD: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SubpolyError {
    #[error("too many 2-components: {k} (at most {MAX_COMPONENTS} are supported)")]
    TooManyComponents { k: usize },
    #[error("selection {selection:#x} is not a simple subpolyhedron")]
    NotSimple { selection: u64 },
}

/// A set of 2-components: bit `i` selects edge class `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Selection(pub u64);

impl Selection {
    pub const EMPTY: Selection = Selection(0);

    /// All `k` components.
    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_COMPONENTS, "{k} components do not fit a selection");
        Selection((1u64 << k) - 1)
    }

    pub fn contains(self, class: usize) -> bool {
        (self.0 >> class) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// The combinatorics of a spine needed to test selections: for every face of
/// every tetrahedron, the edge classes of its three edges.
#[derive(Debug, Clone)]
pub struct SpineComplex {
    n_tets: usize,
    k: usize,
    /// `[tet][face]` edge classes of the face's three edges.
    wings: Vec<[[usize; 3]; 4]>,
    /// Edge classes of the six edges of each tetrahedron.
    tet_classes: Vec<[usize; 6]>,
    /// One `(tet, face)` representative per triple edge.
    triple_edges: Vec<(usize, u8)>,
}

impl SpineComplex {
    pub fn new(t: &IdealTriangulation) -> Self {
        let ec = edge_classes(t);
        let n = t.n_tets();
        let mut wings = vec![[[0; 3]; 4]; n];
        let mut tet_classes = vec![[0; 6]; n];
        for tet in 0..n {
            tet_classes[tet] = std::array::from_fn(|e| ec.class_of(tet, e));
            for f in 0..4u8 {
                wings[tet][f as usize] = face_edges(f).map(|e| ec.class_of(tet, e));
            }
        }
        let triple_edges = t.pairings().map(|(me, _)| (me.tet, me.face)).collect();
        Self {
            n_tets: n,
            k: ec.class_count(),
            wings,
            tet_classes,
            triple_edges,
        }
    }

    /// Number of 2-components.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_tets(&self) -> usize {
        self.n_tets
    }

    fn face_degree(&self, sel: Selection, tet: usize, face: usize) -> usize {
        self.wings[tet][face].iter().filter(|&&c| sel.contains(c)).count()
    }

    pub fn is_simple(&self, sel: Selection) -> bool {
        (0..self.n_tets).all(|tet| {
            (0..4).all(|face| self.face_degree(sel, tet, face) != 1)
        })
    }

    /// `(V, chi)` of a simple selection: true vertices of the subpolyhedron
    /// and its Euler characteristic in the cell structure inherited from the
    /// spine.
    pub fn sub_invariants(&self, sel: Selection) -> Result<(i64, i64), SubpolyError> {
        if !self.is_simple(sel) {
            return Err(SubpolyError::NotSimple { selection: sel.0 });
        }
        let mut true_vertices = 0;
        let mut vertices = 0;
        for classes in &self.tet_classes {
            let selected = classes.iter().filter(|&&c| sel.contains(c)).count();
            if selected == 6 {
                true_vertices += 1;
            }
            if selected > 0 {
                vertices += 1;
            }
        }
        let edges = self
            .triple_edges
            .iter()
            .filter(|&&(tet, face)| self.face_degree(sel, tet, face as usize) > 0)
            .count() as i64;
        Ok((true_vertices, vertices - edges + sel.len() as i64))
    }

    fn check_k(&self) -> Result<(), SubpolyError> {
        if self.k > MAX_COMPONENTS {
            Err(SubpolyError::TooManyComponents { k: self.k })
        } else {
            Ok(())
        }
    }

    /// All simple selections in ascending bitmask order.
    pub fn enumerate_simple(&self) -> Result<Vec<Selection>, SubpolyError> {
        self.enumerate_in(self.k >= PARALLEL_THRESHOLD)
    }

    fn enumerate_in(&self, parallel: bool) -> Result<Vec<Selection>, SubpolyError> {
        self.check_k()?;
        let total = 1u64 << self.k;
        if !parallel {
            return Ok((0..total).map(Selection).filter(|&s| self.is_simple(s)).collect());
        }
        Ok((0..total)
            .into_par_iter()
            .map(Selection)
            .filter(|&s| self.is_simple(s))
            .collect())
    }

    /// `true` if no selection other than the empty and the full one is simple.
    pub fn is_poor(&self) -> Result<bool, SubpolyError> {
        self.check_k()?;
        let full = Selection::full(self.k).0;
        let proper = |m: u64| self.is_simple(Selection(m));
        if self.k < PARALLEL_THRESHOLD {
            Ok(!(1..full).any(proper))
        } else {
            Ok(!(1..full).into_par_iter().any(proper))
        }
    }
}

pub fn is_simple(t: &IdealTriangulation, sel: Selection) -> bool {
    SpineComplex::new(t).is_simple(sel)
}

pub fn enumerate_simple(t: &IdealTriangulation) -> Result<Vec<Selection>, SubpolyError> {
    SpineComplex::new(t).enumerate_simple()
}

pub fn is_poor(t: &IdealTriangulation) -> Result<bool, SubpolyError> {
    SpineComplex::new(t).is_poor()
}

pub fn sub_invariants(t: &IdealTriangulation, sel: Selection) -> Result<(i64, i64), SubpolyError> {
    SpineComplex::new(t).sub_invariants(sel)
}
