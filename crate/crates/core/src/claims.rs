//! Machine checks of the combinatorial and numerical facts about the spines
//! `P_n` and the manifolds `W_n`. Each criterion reports pass or fail with a
//! short detail line.

use std::f64::consts::PI;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::golden::GoldenInt;
use crate::invariant::{epsilon_invariant, poor_closed_form};
use crate::ograph::{generate_gn, random_ograph, OGraph};
use crate::oracle::{fibonacci, link_graph_is_simple, lobachevsky_by_quadrature};
use crate::report::{G5_FIXTURE, G9_FIXTURE};
use crate::subpoly::{Selection, SpineComplex};
use crate::triangulate::{boundary_surface, from_ograph, strata_summary, IdealTriangulation, OGRAPH_CONVENTION};
use crate::volume::{ideal_limit, lobachevsky, volume_both, Angle};

/// Inputs that the checks read. Replacing a fixture is how a corrupted
/// input is fed to the checker.
#[derive(Debug, Clone)]
pub struct ClaimInputs {
    pub g5: String,
    pub g9: String,
    /// Number of seeded random o-graphs in the property suites.
    pub population: u64,
}

impl Default for ClaimInputs {
    fn default() -> Self {
        Self {
            g5: G5_FIXTURE.to_string(),
            g9: G9_FIXTURE.to_string(),
            population: 200,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

/// One line per criterion. Timings are left out so that the output is the
/// same on every run.
impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn parse_fixture(text: &str) -> Result<IdealTriangulation, String> {
    OGraph::parse(text).map(|g| from_ograph(&g)).map_err(|e| format!("fixture does not parse: {e}"))
}

/// The invariants of `P_n`: `n` tetrahedra, two edge classes of size `3n`,
/// `2n` triple edges, `chi = 2 - n`, a connected boundary of genus `n - 1`,
/// and no proper simple subpolyhedron.
fn check_pn(t: &IdealTriangulation, n: usize) -> Check {
    let s = strata_summary(t);
    ensure(t.n_tets() == n, || format!("{} tetrahedra, expected {n}", t.n_tets()))?;
    let sizes = crate::triangulate::edge_classes(t).sizes().to_vec();
    ensure(sizes == vec![3 * n, 3 * n], || format!("edge classes {sizes:?}, expected [{0}, {0}]", 3 * n))?;
    ensure(s.triple_edges == 2 * n, || format!("{} triple edges, expected {}", s.triple_edges, 2 * n))?;
    ensure(s.euler == 2 - n as i64, || format!("chi = {}, expected {}", s.euler, 2 - n as i64))?;
    let b = boundary_surface(t).map_err(|e| e.to_string())?;
    ensure(b.genera == vec![n as u64 - 1], || format!("boundary genera {:?}, expected [{}]", b.genera, n - 1))?;
    let poor = SpineComplex::new(t).is_poor().map_err(|e| e.to_string())?;
    ensure(poor, || "spine is not poor".to_string())?;
    Ok(format!(
        "{n} tets, classes {sizes:?}, {} triple edges, chi {}, boundary genus {}, poor",
        s.triple_edges, s.euler, n - 1
    ))
}

fn fixture(text: &str, n: usize) -> Check {
    check_pn(&parse_fixture(text)?, n)
}

fn family_sweep() -> Check {
    for s in 0..=4 {
        let n = 5 + 4 * s;
        check_pn(&from_ograph(&generate_gn(s)), n).map_err(|e| format!("s = {s}: {e}"))?;
    }
    Ok("s = 0..4 (n = 5, 9, 13, 17, 21) all match".to_string())
}

fn epsilon(inputs: &ClaimInputs) -> Check {
    let cases = [
        (&inputs.g5, 5, -3, GoldenInt::new(-33, 21)),
        (&inputs.g9, 9, -7, GoldenInt::new(-1596, 987)),
    ];
    let mut shown = Vec::new();
    for (text, v, chi, want) in cases {
        let t = parse_fixture(text)?;
        let e = epsilon_invariant(&t).map_err(|e| e.to_string())?;
        let closed = poor_closed_form(v, chi);
        ensure(e.value == want, || format!("n = {v}: t = {}, expected {want}", e.value))?;
        ensure(closed == want, || format!("n = {v}: closed form {closed}, expected {want}"))?;
        shown.push(format!("t = {}", e.value));
    }
    Ok(format!("{} (enumerated = closed form)", shown.join("; ")))
}

fn golden_oracle() -> Check {
    let fib = fibonacci(65);
    for k in 1..=64i64 {
        let p = GoldenInt::eps_pow(k);
        let want = GoldenInt::new(fib[k as usize - 1].clone(), fib[k as usize].clone());
        ensure(p == want, || format!("eps^{k} = {p}, expected {want}"))?;
    }
    for k in -64..=64i64 {
        let prod = &GoldenInt::eps_pow(k) * &GoldenInt::eps_pow(-k);
        ensure(prod == GoldenInt::one(), || format!("eps^{k} eps^{} = {prod}", -k))?;
    }
    let f64th = &fib[64];
    ensure(*f64th == BigInt::from(10_610_209_857_723u64), || format!("F_64 = {f64th}"))?;
    Ok("eps^k = (F_(k-1), F_k) for k <= 64; eps^k eps^-k = 1 for |k| <= 64".to_string())
}

fn volume_cross() -> Check {
    let mut worst: f64 = 0.0;
    for theta in [0.0, PI / 12.0, 2.0 * PI / 15.0, PI / 6.0, PI / 4.0, 1.0] {
        let r = volume_both(Angle::new(theta).map_err(|e| e.to_string())?, 1).map_err(|e| e.to_string())?;
        ensure(r.discrepancy() <= 1e-9, || format!("theta = {theta}: {} vs {}", r.via_integral, r.via_lobachevsky))?;
        worst = worst.max(r.discrepancy());
        if theta == 0.0 {
            let l = ideal_limit();
            ensure((r.via_integral - l).abs() <= 1e-9 && (r.via_lobachevsky - l).abs() <= 1e-9, || {
                format!("theta = 0 does not give 8 L(pi/4) = {l}")
            })?;
        }
    }
    Ok(format!("6 angles, max discrepancy {worst:.2e}"))
}

fn lobachevsky_properties() -> Check {
    let l = |x: f64| lobachevsky(x).expect("finite");
    ensure(l(0.0).abs() <= 1e-12 && l(PI / 2.0).abs() <= 1e-12, || "L(0) or L(pi/2) is not 0".to_string())?;
    for i in 0..100 {
        let x = -5.0 + 10.0 * i as f64 / 99.0;
        ensure((l(-x) + l(x)).abs() <= 1e-12, || format!("oddness fails at {x}"))?;
        ensure((l(x + PI) - l(x)).abs() <= 1e-12, || format!("periodicity fails at {x}"))?;
        ensure((0.5 * l(2.0 * x) - l(x) - l(x + PI / 2.0)).abs() <= 1e-11, || format!("duplication fails at {x}"))?;
    }
    let mut worst: f64 = 0.0;
    for i in 1..50 {
        let x = PI * i as f64 / 50.0;
        let d = (l(x) - lobachevsky_by_quadrature(x)).abs();
        ensure(d <= 1e-9, || format!("series and quadrature differ by {d:e} at {x}"))?;
        worst = worst.max(d);
    }
    Ok(format!("odd, pi-periodic, duplication on 100 points; quadrature gap {worst:.1e}"))
}

struct Sample {
    seed: u64,
    t: IdealTriangulation,
    cx: SpineComplex,
}

fn population(size: u64) -> Vec<Sample> {
    (0..size)
        .map(|seed| {
            let n = 1 + (seed % 6) as usize;
            let t = from_ograph(&random_ograph(n, seed));
            let cx = SpineComplex::new(&t);
            Sample { seed, t, cx }
        })
        .collect()
}

fn one_component_is_poor(pop: &[Sample]) -> Check {
    let mut count = 0;
    for s in pop.iter().filter(|s| s.cx.k() == 1) {
        ensure(s.cx.is_poor().map_err(|e| e.to_string())?, || format!("seed {}: k = 1 but not poor", s.seed))?;
        count += 1;
    }
    ensure(count > 0, || "no instance with one edge class".to_string())?;
    Ok(format!("{count} of {} random spines have k = 1; all poor", pop.len()))
}

fn disconnected_boundary_is_not_poor(pop: &[Sample]) -> Check {
    let mut count = 0;
    for s in pop {
        let b = boundary_surface(&s.t).map_err(|e| format!("seed {}: {e}", s.seed))?;
        if b.component_count >= 2 {
            ensure(!s.cx.is_poor().map_err(|e| e.to_string())?, || format!("seed {}: poor with {} boundary components", s.seed, b.component_count))?;
            count += 1;
        }
    }
    ensure(count > 0, || "no instance with a disconnected boundary".to_string())?;
    Ok(format!("{count} of {} random spines have >= 2 boundary components; none poor", pop.len()))
}

fn simplicity_oracle(pop: &[Sample]) -> Check {
    let (mut spines, mut subsets) = (0, 0);
    for s in pop.iter().filter(|s| s.cx.k() <= 4) {
        for m in 0..1u64 << s.cx.k() {
            let sel = Selection(m);
            let fast = s.cx.is_simple(sel);
            let slow = link_graph_is_simple(&s.t, sel);
            ensure(fast == slow, || format!("seed {}: selection {m:#b}: face rule {fast}, link graphs {slow}", s.seed))?;
            subsets += 1;
        }
        spines += 1;
    }
    Ok(format!("{spines} spines with k <= 4, {subsets} subsets agree"))
}

fn convention(inputs: &ClaimInputs, pop: &[Sample]) -> Check {
    fixture(&inputs.g5, 5).map_err(|e| format!("G5 under the frozen convention: {e}"))?;
    fixture(&inputs.g9, 9).map_err(|e| format!("G9 under the frozen convention: {e}"))?;
    for s in pop {
        ensure(s.t.orientation().is_some(), || format!("seed {}: gluings are not orientation reversing", s.seed))?;
    }
    Ok(format!("reproduces criteria 1-2, orientable on all random inputs ({OGRAPH_CONVENTION})"))
}

/// Runs every criterion in order.
pub fn run_claims(inputs: &ClaimInputs) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    let mut run = |id: u8, name: &'static str, limit: Option<u64>, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let limit = limit.map(Duration::from_millis);
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if let Some(l) = limit {
            if elapsed > l {
                passed = false;
                detail = format!("{detail}; exceeded time limit of {} ms", l.as_millis());
            }
        }
        out.push(CriterionResult { id, name, passed, detail, elapsed, limit });
    };
    run(1, "g5-fixture", Some(1_000), &mut || fixture(&inputs.g5, 5));
    run(2, "g9-fixture", Some(1_000), &mut || fixture(&inputs.g9, 9));
    run(3, "family-sweep", Some(30_000), &mut family_sweep);
    run(4, "epsilon-invariant", None, &mut || epsilon(inputs));
    run(5, "golden-ring-oracle", None, &mut golden_oracle);
    run(6, "volume-cross-validation", Some(5_000), &mut volume_cross);
    run(7, "lobachevsky-properties", None, &mut lobachevsky_properties);
    let pop = population(inputs.population);
    run(8, "one-edge-class-is-poor", Some(10_000), &mut || one_component_is_poor(&pop));
    run(9, "disconnected-boundary-not-poor", Some(10_000), &mut || disconnected_boundary_is_not_poor(&pop));
    run(10, "simplicity-oracle", None, &mut || simplicity_oracle(&pop));
    run(11, "convention-frozen", None, &mut || convention(inputs, &pop));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_on_fixtures() {
        let results = run_claims(&ClaimInputs::default());
        assert_eq!(results.len(), 11);
        for r in &results {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn corrupted_g5_fails_by_name() {
        let inputs = ClaimInputs {
            g5: G5_FIXTURE.replace("edge 2.0 3.1 color 0", "edge 2.0 3.1 color 2"),
            ..ClaimInputs::default()
        };
        let results = run_claims(&inputs);
        let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
        assert!(failed.contains(&"g5-fixture"), "{failed:?}");
        assert!(failed.contains(&"convention-frozen"));
        assert!(!failed.contains(&"g9-fixture"));
    }

    #[test]
    fn output_is_deterministic() {
        let inputs = ClaimInputs { population: 40, ..ClaimInputs::default() };
        let a: Vec<String> = run_claims(&inputs).iter().map(ToString::to_string).collect();
        let b: Vec<String> = run_claims(&inputs).iter().map(ToString::to_string).collect();
        assert_eq!(a, b);
    }
}
