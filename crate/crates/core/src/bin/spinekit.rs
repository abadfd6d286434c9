use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use spinekit::claims::{run_claims, ClaimInputs};
use spinekit::error::Error;
use spinekit::invariant::epsilon_of_complex;
use spinekit::ograph::generate_gn;
use spinekit::report::{load_triangulation, SpineReport};
use spinekit::subpoly::SpineComplex;
use spinekit::volume::{family_volume, volume_both, Angle, Family, VolumeResult};

/// Special spines, poor-spine detection, the golden Turaev-Viro invariant and
/// volumes of regular truncated tetrahedra.
#[derive(Parser)]
#[command(name = "spinekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the decorated graph with 5 + 4s vertices.
    Generate {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a full report for an o-graph or triangulation file.
    Analyze {
        path: PathBuf,
        /// Treat PATH as a directory and analyze every file in it.
        #[arg(long)]
        dir: bool,
    },
    /// List the simple subpolyhedra and decide poorness.
    Poor { path: PathBuf },
    /// Print the invariant exactly and as a float, with its terms.
    Epsilon { path: PathBuf },
    /// Volumes of regular truncated tetrahedra.
    Volume {
        #[arg(long, conflicts_with_all = ["family", "n"], required_unless_present = "family")]
        theta: Option<f64>,
        #[arg(long, requires = "n")]
        family: Option<FamilyArg>,
        #[arg(long, requires = "family")]
        n: Option<u64>,
    },
    /// Check every claim and print one line per criterion.
    VerifyPaper {
        /// Replacement for the built-in 5-vertex fixture.
        #[arg(long)]
        g5: Option<PathBuf>,
        /// Replacement for the built-in 9-vertex fixture.
        #[arg(long)]
        g9: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Mn,
    Wn,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn print_volume(label: &str, r: &VolumeResult) {
    println!("{label}");
    println!("theta: {:.15}", r.theta);
    println!("volume_lobachevsky: {:.12}", r.via_lobachevsky);
    println!("volume_integral: {:.12}", r.via_integral);
    println!("discrepancy: {:.3e}", r.discrepancy());
    println!("agreed: {}", r.agreed);
}

fn analyze_dir(dir: &Path) -> Result<bool, Error> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|source| Error::Io { path: dir.to_path_buf(), source })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let results: Vec<Result<SpineReport, Error>> = files
        .par_iter()
        .map(|p| SpineReport::from_text(p.display().to_string(), &read(p)?))
        .collect();
    let mut ok = true;
    for (path, r) in files.iter().zip(results) {
        match r {
            Ok(report) => println!("{report}"),
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                ok = false;
            }
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Generate { s, out } => {
            let text = generate_gn(s).serialize();
            fs::write(&out, text).map_err(|source| Error::Io { path: out.clone(), source })?;
            println!("wrote {} ({} vertices)", out.display(), 5 + 4 * s);
        }
        Command::Analyze { path, dir: true } => {
            if !analyze_dir(&path)? {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Analyze { path, dir: false } => {
            let report = SpineReport::from_text(path.display().to_string(), &read(&path)?)?;
            print!("{report}");
        }
        Command::Poor { path } => {
            let (_, t) = load_triangulation(&read(&path)?)?;
            let cx = SpineComplex::new(&t);
            let family = cx.enumerate_simple()?;
            println!("edge_classes: {}", cx.k());
            println!("simple_subpolyhedra: {}", family.len());
            for sel in &family {
                let (v, chi) = cx.sub_invariants(*sel)?;
                println!("  {:#0w$b} V={v} chi={chi}", sel.0, w = cx.k() + 2);
            }
            println!("poor: {}", family.len() == 2);
        }
        Command::Epsilon { path } => {
            let (_, t) = load_triangulation(&read(&path)?)?;
            let cx = SpineComplex::new(&t);
            let e = epsilon_of_complex(&cx)?;
            println!("epsilon: {}", e.value);
            println!("epsilon_float: {:.12}", e.value.to_f64());
            println!("terms: {}", e.terms.len());
            for term in &e.terms {
                println!(
                    "  {:#0w$b} V={} chi={} weight={}",
                    term.selection.0,
                    term.true_vertices,
                    term.euler,
                    term.weight,
                    w = cx.k() + 2
                );
            }
        }
        Command::Volume { theta: Some(theta), .. } => {
            let r = volume_both(Angle::new(theta)?, 1)?;
            print_volume("regular truncated tetrahedron", &r);
        }
        Command::Volume { family: Some(family), n: Some(n), .. } => {
            let (fam, label) = match family {
                FamilyArg::Mn => (Family::Mn, format!("M_{n}: {n} tetrahedra at angle pi/(3n)")),
                FamilyArg::Wn => (Family::Wn, format!("W_{n}: {n} tetrahedra at angle 2pi/(3n)")),
            };
            print_volume(&label, &family_volume(fam, n)?);
        }
        Command::Volume { .. } => unreachable!("clap enforces --theta or --family with --n"),
        Command::VerifyPaper { g5, g9 } => {
            let mut inputs = ClaimInputs::default();
            if let Some(p) = g5 {
                inputs.g5 = read(&p)?;
            }
            if let Some(p) = g9 {
                inputs.g9 = read(&p)?;
            }
            let results = run_claims(&inputs);
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("{} passed, {failed} failed", results.len() - failed);
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("SPINEKIT_THREADS").ok().and_then(|v| v.parse().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().ok();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
