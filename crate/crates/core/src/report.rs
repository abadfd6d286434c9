//! Whole-spine analysis and its `key: value` report.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::golden::GoldenInt;
use crate::invariant::epsilon_of_complex;
use crate::ograph::OGraph;
use crate::subpoly::SpineComplex;
use crate::triangulate::{
    boundary_surface, edge_classes, from_ograph, IdealTriangulation,
};
use crate::volume::{regular_angle, volume_both};

/// The decorated graph with 5 vertices, in canonical form.
pub const G5_FIXTURE: &str = include_str!("../fixtures/g5.og");
/// The decorated graph with 9 vertices, in canonical form.
pub const G9_FIXTURE: &str = include_str!("../fixtures/g9.og");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    OGraph,
    Triangulation,
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::OGraph => "ograph",
            InputFormat::Triangulation => "triangulation",
        })
    }
}

/// Decides the format from the first non-comment line.
pub fn detect_format(text: &str) -> Option<InputFormat> {
    let header = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())?;
    match header {
        "ograph v1" => Some(InputFormat::OGraph),
        "tri v1" => Some(InputFormat::Triangulation),
        _ => None,
    }
}

/// Parses either input format into a triangulation.
pub fn load_triangulation(text: &str) -> Result<(InputFormat, IdealTriangulation)> {
    match detect_format(text).ok_or(Error::UnknownFormat)? {
        InputFormat::OGraph => Ok((InputFormat::OGraph, from_ograph(&OGraph::parse(text)?))),
        InputFormat::Triangulation => Ok((InputFormat::Triangulation, IdealTriangulation::parse(text)?)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularVolume {
    pub theta: f64,
    pub via_integral: f64,
    pub via_lobachevsky: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpineReport {
    pub input: String,
    pub format: InputFormat,
    pub tetrahedra: usize,
    pub edge_class_sizes: Vec<usize>,
    pub triple_edges: usize,
    pub euler: i64,
    pub boundary_genera: Vec<u64>,
    pub simple_subpolyhedra: usize,
    pub poor: bool,
    pub epsilon: GoldenInt,
    pub regular: Option<RegularVolume>,
}

impl SpineReport {
    pub fn analyze(input: impl Into<String>, format: InputFormat, t: &IdealTriangulation) -> Result<Self> {
        let ec = edge_classes(t);
        let boundary = boundary_surface(t)?;
        let cx = SpineComplex::new(t);
        let eps = epsilon_of_complex(&cx)?;
        let triple_edges = t.pairings().count();
        let regular = match regular_angle(t) {
            Some(theta) => {
                let v = volume_both(theta, t.n_tets() as u64)?;
                Some(RegularVolume {
                    theta: v.theta,
                    via_integral: v.via_integral,
                    via_lobachevsky: v.via_lobachevsky,
                })
            }
            None => None,
        };
        Ok(Self {
            input: input.into(),
            format,
            tetrahedra: t.n_tets(),
            edge_class_sizes: ec.sizes().to_vec(),
            triple_edges,
            euler: t.n_tets() as i64 - triple_edges as i64 + ec.class_count() as i64,
            boundary_genera: boundary.genera,
            simple_subpolyhedra: eps.terms.len(),
            poor: eps.terms.len() == 2,
            epsilon: eps.value,
            regular,
        })
    }

    /// Parses and analyzes a file's contents.
    pub fn from_text(input: impl Into<String>, text: &str) -> Result<Self> {
        let (format, t) = load_triangulation(text)?;
        Self::analyze(input, format, &t)
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_genera.len()
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SpineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {}", self.input)?;
        writeln!(f, "format: {}", self.format)?;
        writeln!(f, "tetrahedra: {}", self.tetrahedra)?;
        writeln!(f, "edge_classes: {}", self.edge_class_sizes.len())?;
        writeln!(f, "edge_class_sizes: {}", join(&self.edge_class_sizes))?;
        writeln!(f, "triple_edges: {}", self.triple_edges)?;
        writeln!(f, "euler_characteristic: {}", self.euler)?;
        writeln!(f, "boundary_components: {}", self.boundary_components())?;
        writeln!(f, "boundary_genera: {}", join(&self.boundary_genera))?;
        writeln!(f, "simple_subpolyhedra: {}", self.simple_subpolyhedra)?;
        writeln!(f, "poor: {}", self.poor)?;
        writeln!(f, "epsilon: {}", self.epsilon)?;
        writeln!(f, "epsilon_float: {:.12}", self.epsilon.to_f64())?;
        match &self.regular {
            Some(r) => {
                writeln!(f, "regular_angle: {:.15}", r.theta)?;
                writeln!(f, "regular_angle_over_pi: {:.15}", r.theta / PI)?;
                writeln!(f, "volume_lobachevsky: {:.12}", r.via_lobachevsky)?;
                writeln!(f, "volume_integral: {:.12}", r.via_integral)
            }
            None => writeln!(f, "regular_angle: none"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ograph::generate_gn;

    #[test]
    fn fixtures_are_canonical_gn() {
        assert_eq!(OGraph::parse(G5_FIXTURE).unwrap(), generate_gn(0));
        assert_eq!(OGraph::parse(G9_FIXTURE).unwrap(), generate_gn(1));
    }

    #[test]
    fn g5_report() {
        let r = SpineReport::from_text("g5", G5_FIXTURE).unwrap();
        assert_eq!(r.tetrahedra, 5);
        assert_eq!(r.edge_class_sizes, vec![15, 15]);
        assert_eq!(r.triple_edges, 10);
        assert_eq!(r.euler, -3);
        assert_eq!(r.boundary_genera, vec![4]);
        assert!(r.poor);
        assert_eq!(r.epsilon, GoldenInt::new(-33, 21));
        let reg = r.regular.as_ref().unwrap();
        assert!((reg.theta - 2.0 * PI / 15.0).abs() < 1e-15);
        let text = r.to_string();
        assert!(text.contains("epsilon: -33 + 21*eps\n"));
        assert!(text.contains("boundary_genera: 4\n"));
    }

    #[test]
    fn g9_report() {
        let r = SpineReport::from_text("g9", G9_FIXTURE).unwrap();
        assert_eq!(
            (r.tetrahedra, r.edge_class_sizes.clone(), r.euler, r.boundary_genera.clone(), r.poor),
            (9, vec![27, 27], -7, vec![8], true)
        );
        assert_eq!(r.epsilon, GoldenInt::new(-1596, 987));
    }

    #[test]
    fn triangulation_input_gives_the_same_report() {
        let t = from_ograph(&generate_gn(0));
        let a = SpineReport::from_text("x", &t.serialize()).unwrap();
        let b = SpineReport::from_text("x", G5_FIXTURE).unwrap();
        assert_eq!(a.format, InputFormat::Triangulation);
        assert_eq!(a.to_string().replace("triangulation", "ograph"), b.to_string());
    }

    #[test]
    fn unknown_header() {
        assert!(matches!(SpineReport::from_text("x", "hello\n"), Err(Error::UnknownFormat)));
        assert!(matches!(SpineReport::from_text("x", ""), Err(Error::UnknownFormat)));
    }
}
