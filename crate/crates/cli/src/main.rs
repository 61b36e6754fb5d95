//! `cwcode`: file-driven front end for the constant-weight code toolkit.
//!
//! Exit codes, uniform across subcommands: 0 for success (including "the
//! check passed"), 1 for a check or search that ran and came up negative,
//! 2 for unusable input (bad files, bad flags).

mod format;

use clap::{Parser, Subcommand};
use cwcode::autgroup::automorphism_group;
use cwcode::clique::exact_max;
use cwcode::construct::{extract_weight, nordstrom_robinson, pad_extend, shorten};
use cwcode::search::{anneal, augment_greedy, AnnealParams};
use cwcode::verify::{verify_code, ConflictReport};
use cwcode::{Code, Codeword, Error};
use format::{emit_code_file, parse_code_file};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cwcode",
    version,
    about = "Construct, verify and search binary constant-weight codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a code file against its declared parameters
    Verify {
        /// Code file to check
        path: PathBuf,
        /// Override the declared length
        #[arg(long)]
        n: Option<u32>,
        /// Override the declared minimum distance
        #[arg(long)]
        d: Option<u32>,
        /// Override the declared weight (0 means mixed)
        #[arg(long)]
        w: Option<u32>,
        /// Report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the Nordstrom-Robinson code or one of its weight slices
    Nr {
        /// Keep only the words of this weight
        #[arg(long, value_name = "W", conflicts_with = "full")]
        extract: Option<u32>,
        /// Print all 256 words (mixed weight, declared w = 0)
        #[arg(long)]
        full: bool,
    },
    /// Search for an (n, d, w) code of a given size by simulated annealing
    Anneal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: u32,
        /// Number of codewords to aim for
        #[arg(long)]
        size: usize,
        /// Seed of the first chain; chain k uses seed + k
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Initial temperature
        #[arg(long, default_value_t = cwcode::search::DEFAULT_T_INITIAL)]
        t0: f64,
        /// Geometric cooling factor per temperature level
        #[arg(long, default_value_t = cwcode::search::DEFAULT_COOLING)]
        cool: f64,
        /// Steps per temperature level (default 50 * size)
        #[arg(long)]
        spt: Option<u64>,
        /// Temperature at which a chain gives up
        #[arg(long, default_value_t = cwcode::search::DEFAULT_T_MIN)]
        tmin: f64,
        /// Step budget per chain
        #[arg(long, default_value_t = cwcode::search::DEFAULT_MAX_STEPS)]
        max_steps: u64,
        /// Independent restarts before giving up
        #[arg(long, default_value_t = 1)]
        chains: u32,
    },
    /// Extend a code file with every compatible word, greedily
    Augment { path: PathBuf },
    /// Shorten a code file at one coordinate
    Shorten {
        path: PathBuf,
        /// Coordinate to shorten at
        #[arg(long)]
        coord: u32,
        /// Keep the words with this bit value there
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        bit: u8,
    },
    /// Append an always-zero coordinate to a code file
    Pad { path: PathBuf },
    /// Prove the maximum size for small parameters by branch and bound
    Exact {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: u32,
        /// Branch node budget; past it the result is only a lower bound
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Compute the coordinate automorphism group of a code file
    Aut {
        path: PathBuf,
        /// Give up once the group exceeds this many elements
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
}

/// A handler's terminal failure: what to say and which code to exit with.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Core errors that mean "the input code fails its own claims" exit 1;
/// everything else is unusable input, exit 2.
fn core_failure(e: Error) -> Failure {
    match e {
        Error::InvalidCode => fail(1, format!("{e}; run `cwcode verify` for details")),
        Error::GroupTooLarge { .. } => fail(1, e.to_string()),
        _ => fail(2, e.to_string()),
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`cwcode nr --full | head`) like other
    // line-oriented tools; Rust's default turns EPIPE into a panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Verify {
            path,
            n,
            d,
            w,
            json,
        } => cmd_verify(&path, n, d, w, json),
        Command::Nr { extract, full } => cmd_nr(extract, full),
        Command::Anneal {
            n,
            d,
            w,
            size,
            seed,
            t0,
            cool,
            spt,
            tmin,
            max_steps,
            chains,
        } => cmd_anneal(n, d, w, size, seed, t0, cool, spt, tmin, max_steps, chains),
        Command::Augment { path } => transform(&path, |c| augment_greedy(&c)),
        Command::Shorten { path, coord, bit } => transform(&path, |c| shorten(&c, coord, bit == 1)),
        Command::Pad { path } => transform(&path, |c| pad_extend(&c)),
        Command::Exact { n, d, w, budget } => cmd_exact(n, d, w, budget),
        Command::Aut { path, limit } => cmd_aut(&path, limit),
    }
}

fn load_code(path: &Path) -> Result<Code, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    parse_code_file(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

/// Shared shape of augment, shorten and pad: load, apply, print the result.
fn transform(
    path: &Path,
    op: impl FnOnce(Code) -> Result<Code, Error>,
) -> Result<ExitCode, Failure> {
    let code = load_code(path)?;
    let out = op(code).map_err(core_failure)?;
    print!("{}", emit_code_file(&out));
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// verify
// ============================================================================

#[derive(Serialize)]
struct JsonConflict {
    i: usize,
    j: usize,
    distance: u32,
}

#[derive(Serialize)]
struct JsonWeightViolation {
    index: usize,
    weight: u32,
}

#[derive(Serialize)]
struct JsonReport {
    n: u32,
    d: u32,
    w: u32,
    codewords: usize,
    valid: bool,
    min_distance: Option<u32>,
    conflicts: Vec<JsonConflict>,
    weight_violations: Vec<JsonWeightViolation>,
    duplicate_pairs: Vec<(usize, usize)>,
}

impl JsonReport {
    fn build(code: &Code, report: &ConflictReport) -> JsonReport {
        JsonReport {
            n: code.n(),
            d: code.d(),
            w: code.w(),
            codewords: code.len(),
            valid: report.is_valid(),
            min_distance: report.min_distance,
            conflicts: report
                .conflicts
                .iter()
                .map(|&(i, j, distance)| JsonConflict { i, j, distance })
                .collect(),
            weight_violations: report
                .weight_violations
                .iter()
                .map(|&(index, weight)| JsonWeightViolation { index, weight })
                .collect(),
            duplicate_pairs: report.duplicate_pairs.clone(),
        }
    }
}

fn cmd_verify(
    path: &Path,
    n: Option<u32>,
    d: Option<u32>,
    w: Option<u32>,
    json: bool,
) -> Result<ExitCode, Failure> {
    let parsed = load_code(path)?;
    let code = match (n, d, w) {
        (None, None, None) => parsed,
        _ => {
            // Overrides rebuild the words at the new length, so a --n below
            // some word's top coordinate is rejected here.
            let n = n.unwrap_or(parsed.n());
            let words: Result<Vec<Codeword>, Error> = parsed
                .words()
                .iter()
                .map(|word| Codeword::from_bits(word.bits(), n))
                .collect();
            let words = words.map_err(|e| fail(2, e.to_string()))?;
            Code::new(n, d.unwrap_or(parsed.d()), w.unwrap_or(parsed.w()), words)
                .map_err(|e| fail(2, e.to_string()))?
        }
    };
    let report = verify_code(&code);
    if json {
        let rendered = serde_json::to_string_pretty(&JsonReport::build(&code, &report))
            .expect("report serialization cannot fail");
        println!("{rendered}");
    } else {
        for &(index, weight) in &report.weight_violations {
            println!("word {index}: weight {weight}, declared {}", code.w());
        }
        for &(i, j) in &report.duplicate_pairs {
            println!("words {i} and {j} are identical");
        }
        for &(i, j, distance) in &report.conflicts {
            println!("words {i} and {j}: distance {distance} < {}", code.d());
        }
        let noun = if code.len() == 1 {
            "codeword"
        } else {
            "codewords"
        };
        match report.min_distance {
            Some(md) => println!("{} {noun}, min distance {md}", code.len()),
            None => println!("{} {noun}, min distance n/a", code.len()),
        }
    }
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ============================================================================
// construction and search
// ============================================================================

fn cmd_nr(extract: Option<u32>, full: bool) -> Result<ExitCode, Failure> {
    let nr = nordstrom_robinson();
    let out = match (extract, full) {
        (Some(w), false) => {
            if w > 16 {
                return Err(fail(2, format!("weight {w} exceeds length 16")));
            }
            extract_weight(&nr, w)
        }
        (None, true) => nr,
        _ => return Err(fail(2, "pass exactly one of --extract <W> or --full")),
    };
    print!("{}", emit_code_file(&out));
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_anneal(
    n: u32,
    d: u32,
    w: u32,
    size: usize,
    seed: u64,
    t0: f64,
    cool: f64,
    spt: Option<u64>,
    tmin: f64,
    max_steps: u64,
    chains: u32,
) -> Result<ExitCode, Failure> {
    if chains == 0 {
        return Err(fail(2, "need at least one chain"));
    }
    let mut failures = Vec::new();
    for k in 0..chains {
        let mut params = AnnealParams::new(n, d, w, size, seed.wrapping_add(k as u64));
        params.t_initial = t0;
        params.cooling = cool;
        if let Some(spt) = spt {
            params.steps_per_temp = spt;
        }
        params.t_min = tmin;
        params.max_steps = max_steps;
        let result = anneal(&params).map_err(|e| fail(2, e.to_string()))?;
        if result.found {
            print!("{}", emit_code_file(&result.code));
            return Ok(ExitCode::SUCCESS);
        }
        failures.push((result.seed, result.final_cost, result.steps_used));
    }
    for (seed, cost, steps) in failures {
        eprintln!("seed {seed}: cost {cost} after {steps} steps");
    }
    eprintln!("no conflict-free code of size {size} found in {chains} chain(s)");
    Ok(ExitCode::from(1))
}

fn cmd_exact(n: u32, d: u32, w: u32, budget: u64) -> Result<ExitCode, Failure> {
    let result = exact_max(n, d, w, budget).map_err(core_failure)?;
    println!(
        "size={} proven={}",
        result.size,
        if result.proven { "yes" } else { "no" }
    );
    print!("{}", emit_code_file(&result.witness));
    Ok(ExitCode::SUCCESS)
}

fn cmd_aut(path: &Path, limit: u64) -> Result<ExitCode, Failure> {
    let code = load_code(path)?;
    let group = automorphism_group(&code, limit).map_err(core_failure)?;
    println!("order={}", group.len());
    for perm in &group {
        if !perm.is_identity() {
            println!("{}", perm.cycle_string());
        }
    }
    Ok(ExitCode::SUCCESS)
}
