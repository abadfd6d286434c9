//! The Turaev-Viro invariant at the golden root of unity:
//! `t(M) = sum over simple subpolyhedra Q of (-1)^V(Q) eps^(chi(Q) - V(Q))`.

use crate::golden::GoldenInt;
use crate::subpoly::{Selection, SpineComplex, SubpolyError};
use crate::triangulate::IdealTriangulation;

/// `(-1)^v eps^(chi - v)`.
pub fn weight(v: i64, chi: i64) -> GoldenInt {
    let w = GoldenInt::eps_pow(chi - v);
    if v % 2 == 0 { w } else { -w }
}

/// Value of the invariant on a poor spine: the empty set and the spine
/// itself are its only simple subpolyhedra.
pub fn poor_closed_form(v: i64, chi: i64) -> GoldenInt {
    weight(v, chi) + GoldenInt::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub selection: Selection,
    pub true_vertices: i64,
    pub euler: i64,
    pub weight: GoldenInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonInvariant {
    pub value: GoldenInt,
    pub terms: Vec<Term>,
}

pub fn epsilon_invariant(t: &IdealTriangulation) -> Result<EpsilonInvariant, SubpolyError> {
    epsilon_of_complex(&SpineComplex::new(t))
}

pub fn epsilon_of_complex(cx: &SpineComplex) -> Result<EpsilonInvariant, SubpolyError> {
    let mut terms = Vec::new();
    for selection in cx.enumerate_simple()? {
        let (v, chi) = cx.sub_invariants(selection)?;
        terms.push(Term {
            selection,
            true_vertices: v,
            euler: chi,
            weight: weight(v, chi),
        });
    }
    let value = terms.iter().map(|t| t.weight.clone()).sum();
    Ok(EpsilonInvariant { value, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ograph::{generate_gn, random_ograph};
    use crate::triangulate::{from_ograph, strata_summary};

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn weights() {
        assert_eq!(weight(0, 0), g(1, 0));
        assert_eq!(weight(5, -3), g(-34, 21));
        assert_eq!(weight(9, -7), g(-1597, 987));
    }

    #[test]
    fn closed_form() {
        assert_eq!(poor_closed_form(5, -3), g(-33, 21));
        assert_eq!(poor_closed_form(0, 0), g(2, 0));
        assert_eq!(poor_closed_form(9, -7), g(-1596, 987));
    }

    #[test]
    fn fixtures() {
        let e5 = epsilon_invariant(&from_ograph(&generate_gn(0))).unwrap();
        assert_eq!(e5.value, g(-33, 21));
        assert_eq!(e5.terms.len(), 2);
        let e9 = epsilon_invariant(&from_ograph(&generate_gn(1))).unwrap();
        assert_eq!(e9.value, g(-1596, 987));
    }

    #[test]
    fn poor_spines_match_closed_form() {
        for seed in 0..150u64 {
            let n = 1 + (seed % 6) as usize;
            let t = from_ograph(&random_ograph(n, seed));
            let cx = SpineComplex::new(&t);
            let e = epsilon_of_complex(&cx).unwrap();
            assert_eq!(e.value, e.terms.iter().map(|t| t.weight.clone()).sum::<GoldenInt>());
            if cx.is_poor().unwrap() {
                let s = strata_summary(&t);
                assert_eq!(e.value, poor_closed_form(n as i64, s.euler), "seed {seed}");
                assert_eq!(e.terms.len(), 2);
            }
            if cx.k() == 1 {
                assert_eq!(e.value, GoldenInt::one() + weight(n as i64, 1 - n as i64));
            }
        }
    }

    #[test]
    fn weights_are_injective_in_v() {
        for chi in -8..=8 {
            let ws: Vec<GoldenInt> = (0..=64).map(|v| weight(v, chi)).collect();
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    assert_ne!(ws[i], ws[j], "chi={chi} v={i},{j}");
                }
            }
        }
    }
}
