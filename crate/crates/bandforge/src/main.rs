//! Thin command-line frontend over the library: parse a cone file, run the
//! requested analysis, print a text or JSON report.
//!
//! Exit codes: 0 success, 1 validation failure, 2 parse error, 3 cap
//! exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bandforge::bands::{self, Band};
use bandforge::cone::{self, ConeSpec, LambdaSet};
use bandforge::error::Error;
use bandforge::ratmath::{dot, format_rat, parse_rat, RatVector};
use bandforge::report;
use bandforge::satcore::{self, IndexSet};
use bandforge::{cap_from_env, gen};
use num_traits::Zero;

#[derive(Parser)]
#[command(name = "bandforge", version, about = "Enumerate bands of a finite-dimensional ordered vector space with polyhedral cone")]
struct Cli {
    /// Cap on |Lambda| for subset enumeration (default 22, env BANDFORGE_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the cone is pointed and the unit is interior
    Validate { file: PathBuf },
    /// List the extreme functionals with original-index provenance
    Lambda { file: PathBuf },
    /// Enumerate all bands and print the full report
    Bands {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// List all saturated index sets
    Saturated { file: PathBuf },
    /// Decide whether two vectors are disjoint, with the evaluation trace
    Disjoint {
        file: PathBuf,
        /// First vector, comma-separated rationals, e.g. "1,0,-1/2"
        x: String,
        /// Second vector, same format
        y: String,
    },
    /// Print the two extension-procedure carriers for the band with the
    /// given N-set
    Extend {
        file: PathBuf,
        /// N-set as comma-separated labels or 1-based indices, e.g.
        /// "phi1,phi2" or "1,2"
        n_set: String,
    },
    /// Write a built-in instance to a cone file
    Generate {
        /// standard-lattice | quad-pyramid | cube-apex | general-position
        kind: String,
        /// Dimension parameter for standard-lattice / general-position
        #[arg(long)]
        n: Option<usize>,
        /// PRNG seed for general-position
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suite on the instance, pass/fail per property
    Check { file: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Machine-readable report
    #[arg(long)]
    json: bool,
    /// Plain-text table (default)
    #[arg(long)]
    table: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.cap.unwrap_or_else(cap_from_env);
    match run(cli.command, cap) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn load(path: &PathBuf) -> Result<ConeSpec, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ConeSpec::from_json(&text)
}

fn run(command: Command, cap: usize) -> Result<(), Error> {
    match command {
        Command::Validate { file } => cmd_validate(&load(&file)?),
        Command::Lambda { file } => cmd_lambda(&load(&file)?),
        Command::Bands { file, format } => cmd_bands(&load(&file)?, cap, format.json),
        Command::Saturated { file } => cmd_saturated(&load(&file)?, cap),
        Command::Disjoint { file, x, y } => cmd_disjoint(&load(&file)?, &x, &y),
        Command::Extend { file, n_set } => cmd_extend(&load(&file)?, cap, &n_set),
        Command::Generate { kind, n, seed, out } => cmd_generate(&kind, n, seed, out),
        Command::Check { file } => cmd_check(&load(&file)?, cap),
    }
}

fn cmd_validate(spec: &ConeSpec) -> Result<(), Error> {
    let normalized = cone::normalize(spec)?;
    let v = cone::validate(&normalized.spec);
    println!(
        "dim {}  functionals {} ({} after dedup)  rank {}",
        v.dim,
        spec.functionals.len(),
        v.functional_count,
        v.rank
    );
    if let Some(line) = &v.line_certificate {
        let coords: Vec<String> = line.iter().map(format_rat).collect();
        println!(
            "cone not pointed: every functional vanishes on ({})",
            coords.join(", ")
        );
    }
    if v.is_valid() {
        println!("valid");
        Ok(())
    } else {
        Err(Error::ValidationFailed(format!(
            "rank {} < dim {}",
            v.rank, v.dim
        )))
    }
}

/// Normalize + validate + extreme points, plus the original-index map for
/// provenance output. Mirrors `cone::lambda_of` but keeps the map.
fn analyzed(spec: &ConeSpec) -> Result<(LambdaSet, Vec<usize>), Error> {
    let normalized = cone::normalize(spec)?;
    let v = cone::validate(&normalized.spec);
    if !v.is_valid() {
        return Err(Error::ValidationFailed(format!(
            "functional matrix rank {} < dim {}; the cone contains a line",
            v.rank, v.dim
        )));
    }
    Ok((cone::extreme_points(&normalized.spec), normalized.index_map))
}

fn cmd_lambda(spec: &ConeSpec) -> Result<(), Error> {
    let (lambda, index_map) = analyzed(spec)?;
    let normalized = cone::normalize(spec)?;
    println!("|Lambda| = {} (of {} input functionals)", lambda.len(), spec.functionals.len());
    for i in 0..lambda.len() {
        // which inputs map onto this extreme functional
        let rep = normalized
            .spec
            .functionals
            .iter()
            .position(|f| f == lambda.functional(i))
            .expect("extreme functional comes from the normalized list");
        let sources: Vec<String> = index_map
            .iter()
            .enumerate()
            .filter(|&(_, &j)| j == rep)
            .map(|(orig, _)| (orig + 1).to_string())
            .collect();
        let coords: Vec<String> = lambda.functional(i).iter().map(format_rat).collect();
        println!(
            "{}: ({})  from input #{}",
            lambda.label(i),
            coords.join(", "),
            sources.join(",#")
        );
    }
    Ok(())
}

fn full_report(spec: &ConeSpec, cap: usize) -> Result<report::Report, Error> {
    let lambda = cone::lambda_of(spec)?;
    let all = bands::all_bands(&lambda, cap)?;
    let sat = satcore::enumerate_saturated(&lambda, cap)?;
    Ok(report::build_report(
        &lambda,
        &all,
        spec.functionals.len(),
        sat.sets.len(),
    ))
}

fn cmd_bands(spec: &ConeSpec, cap: usize, json: bool) -> Result<(), Error> {
    let rep = full_report(spec, cap)?;
    if json {
        println!("{}", report::render_json(&rep));
    } else {
        print!("{}", report::render_text(&rep));
    }
    Ok(())
}

fn cmd_saturated(spec: &ConeSpec, cap: usize) -> Result<(), Error> {
    let lambda = cone::lambda_of(spec)?;
    let family = satcore::enumerate_saturated(&lambda, cap)?;
    println!("{} saturated sets", family.sets.len());
    for s in &family.sets {
        let labels: Vec<&str> = s.indices().iter().map(|&i| lambda.label(i)).collect();
        let tag = if satcore::is_bisaturated(s, &lambda) {
            "  (bisaturated)"
        } else {
            ""
        };
        println!("{{{}}}{tag}", labels.join(","));
    }
    Ok(())
}

fn parse_vector(s: &str, dim: usize) -> Result<RatVector, Error> {
    let coords: Result<RatVector, Error> =
        s.split(',').map(|c| parse_rat(c.trim())).collect();
    let coords = coords?;
    if coords.len() != dim {
        return Err(Error::Parse(format!(
            "expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn cmd_disjoint(spec: &ConeSpec, x: &str, y: &str) -> Result<(), Error> {
    let lambda = cone::lambda_of(spec)?;
    let x = parse_vector(x, lambda.dim())?;
    let y = parse_vector(y, lambda.dim())?;
    let mut all_ok = true;
    for i in 0..lambda.len() {
        let fx = dot(lambda.functional(i), &x);
        let fy = dot(lambda.functional(i), &y);
        let ok = fx.is_zero() || fy.is_zero();
        all_ok &= ok;
        println!(
            "{}: phi(x) = {}, phi(y) = {}  {}",
            lambda.label(i),
            format_rat(&fx),
            format_rat(&fy),
            if ok { "ok" } else { "BOTH NONZERO" }
        );
    }
    println!("{}", if all_ok { "disjoint" } else { "not disjoint" });
    Ok(())
}

/// Accepts either labels ("phi1,phi5") or 1-based indices ("1,5"); the
/// empty string and "{}" denote the empty set.
fn parse_index_set(s: &str, lambda: &LambdaSet) -> Result<IndexSet, Error> {
    let trimmed = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut indices = Vec::new();
    for token in trimmed.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let idx = match lambda.labels().iter().position(|l| l == token) {
            Some(i) => i,
            None => {
                let one_based: usize = token.parse().map_err(|_| {
                    Error::Parse(format!("unknown label or index `{token}`"))
                })?;
                if one_based == 0 || one_based > lambda.len() {
                    return Err(Error::Parse(format!(
                        "index {one_based} out of range 1..={}",
                        lambda.len()
                    )));
                }
                one_based - 1
            }
        };
        indices.push(idx);
    }
    Ok(IndexSet::from_indices(&indices, lambda.len()))
}

fn cmd_extend(spec: &ConeSpec, cap: usize, n_set: &str) -> Result<(), Error> {
    let lambda = cone::lambda_of(spec)?;
    let n = parse_index_set(n_set, &lambda)?;
    if !satcore::is_bisaturated(&n, &lambda) {
        return Err(Error::NotBisaturated { set: n.to_string() });
    }
    let all = bands::all_bands(&lambda, cap)?;
    let band: &Band = all
        .iter()
        .find(|b| b.n_set == n)
        .expect("every bisaturated set appears in the enumeration");
    let (proc_i, proc_ii) = bands::extension_carriers(band, &lambda);
    let show = |s: &IndexSet| {
        let labels: Vec<&str> = s.indices().iter().map(|&i| lambda.label(i)).collect();
        format!("{{{}}}", labels.join(","))
    };
    println!("band N-set {}  dim {}", show(&n), band.space.dim());
    println!("procI carrier  {}", show(&proc_i));
    println!("procII carrier {}", show(&proc_ii));
    Ok(())
}

fn cmd_generate(
    kind: &str,
    n: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), Error> {
    let need_n = || n.ok_or_else(|| Error::Parse(format!("kind `{kind}` requires --n")));
    let recipe = match kind {
        "standard-lattice" => gen::GeneratorRecipe::StandardLattice { n: need_n()? },
        "quad-pyramid" => gen::GeneratorRecipe::QuadPyramid,
        "cube-apex" => gen::GeneratorRecipe::CubeApex,
        "general-position" => gen::GeneratorRecipe::GeneralPosition { n: need_n()?, seed },
        other => {
            return Err(Error::Parse(format!(
                "unknown kind `{other}`; expected standard-lattice, quad-pyramid, cube-apex, or general-position"
            )))
        }
    };
    let spec = gen::generate(recipe)?;
    let json = spec.to_json();
    match out {
        Some(path) => fs::write(&path, json)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_check(spec: &ConeSpec, cap: usize) -> Result<(), Error> {
    let lambda = cone::lambda_of(spec)?;
    let saturated = satcore::enumerate_saturated(&lambda, cap)?;
    let bisaturated = satcore::enumerate_bisaturated(&lambda, cap)?;
    let all = bands::all_bands(&lambda, cap)?;
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{}  {name}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    // both bandhood tests agree on Z(M) for every saturated M
    let oracle = saturated.sets.iter().all(|m| {
        let b = bands::zero_set(m, &lambda);
        bands::is_band(&b, &lambda) == bands::is_band_via_bisaturation(&b, &lambda)
    });
    check("oracle equivalence (double disjoint-complement vs bisaturation)", oracle);

    // Galois: N(Z(M)) = sat(M) and Z(sat(M)) = Z(M) over all subsets
    let galois = (0u64..(1 << lambda.len())).all(|mask| {
        let m = IndexSet::from_mask(mask, lambda.len());
        let s = satcore::saturate(&m, &lambda);
        bands::n_of(&bands::zero_set(&m, &lambda), &lambda) == s
            && bands::zero_set(&s, &lambda) == bands::zero_set(&m, &lambda)
    });
    check("Galois correspondence (N after Z = sat, Z after sat = Z)", galois);

    // partner is an involution and the pair covers Lambda
    let pairs = bisaturated.sets.iter().all(|m| {
        match satcore::partner(m, &lambda) {
            Ok(p) => {
                satcore::partner(&p, &lambda).map(|q| q == *m).unwrap_or(false)
                    && m.union(&p).is_full()
            }
            Err(_) => false,
        }
    });
    check("pair involution and covering", pairs);

    let bound = report::bound_check(lambda.dim(), all.len());
    check("band-count bound", bound.within);

    if failures == 0 {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Error::ValidationFailed(format!(
            "{failures} invariant check(s) failed"
        )))
    }
}
