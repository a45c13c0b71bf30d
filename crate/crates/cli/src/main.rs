//! Command-line surface for the fintop verification engine.
//!
//! Exit codes follow a fixed contract so CI can tell the cases apart:
//! 0 — every check passed, 1 — a verification failed (the math is wrong),
//! 2 — the input was malformed or out of range. All payload goes to standard
//! output and is byte-identical for identical inputs and flags; wall times
//! appear only on `#`-marked standard-error lines.

mod report;

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use fintop::census::{enumerate_brute, enumerate_preorder, random_topology, CensusMethod};
use fintop::closure::{
    closure_from_topology, topology_from_closure, validate_kuratowski, ClosureError,
};
use fintop::format::{
    emit_topology, parse_function, parse_operator_table, parse_topology_family, FormatError,
};
use fintop::initial::{
    initial_topology_direct, initial_topology_via_closure, initial_topology_via_image,
    verify_weakest,
};
use fintop::set::{Carrier, PointSet};
use fintop::subspace::{
    maximal_open_representative, subspace_topology, subspace_topology_canonical,
    subspace_via_closure,
};
use fintop::topology::{is_continuous, validate, Topology, TopologyError};

use report::Report;

#[derive(Parser)]
#[command(name = "fintop", version, about = "Finite-topology construction verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the topology axioms on a topology file.
    Validate {
        /// Topology file, e.g. {"n":2,"opens":[[],[0],[0,1]]}
        topology: PathBuf,
    },
    /// Run the three subspace constructions on a subset and cross-compare.
    Crosscheck {
        topology: PathBuf,
        /// Subset of the carrier, e.g. "{1,2}" or a bitstring "110"
        subset: String,
    },
    /// Run the three initial-topology constructions through a function file.
    Initial {
        topology: PathBuf,
        /// Function file, e.g. {"dom_n":2,"cod_n":3,"table":[0,2]}
        function: PathBuf,
    },
    /// Check the Kuratowski axioms on a closure-operator file.
    #[command(name = "closure-check")]
    ClosureCheck {
        /// Operator file, e.g. {"n":2,"table":[[],[0,1],[1],[0,1]]}
        operator: PathBuf,
    },
    /// Verify operator ↔ topology round trips over the census, and classify
    /// every raw table on two points.
    Roundtrip {
        /// Largest carrier size to sweep (brute-enumerable, at most 4).
        #[arg(long, default_value_t = 3)]
        max_n: u8,
        /// Also classify all 8^8 raw tables on three points.
        #[arg(long)]
        slow: bool,
    },
    /// Enumerate all labeled topologies on a small carrier.
    Census {
        n: u8,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Emit every topology, one per line, in the canonical file format.
        #[arg(long)]
        dump: bool,
    },
    /// Emit a seeded random topology in the canonical file format.
    Random {
        n: u8,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Preorder,
}

/// Input or format problem; reported on standard error with exit code 2.
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<FormatError> for InputError {
    fn from(e: FormatError) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(cli.command);
    eprintln!("# wall_ms={}", started.elapsed().as_millis());
    match outcome {
        Ok(Some(report)) => {
            report.print();
            ExitCode::from(report.exit_code())
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(None)` means the command already wrote its bare payload (the
/// generators); everything else prints a framed report.
fn run(command: Command) -> Result<Option<Report>, InputError> {
    match command {
        Command::Validate { topology } => cmd_validate(&topology).map(Some),
        Command::Crosscheck { topology, subset } => cmd_crosscheck(&topology, &subset).map(Some),
        Command::Initial { topology, function } => cmd_initial(&topology, &function).map(Some),
        Command::ClosureCheck { operator } => cmd_closure_check(&operator).map(Some),
        Command::Roundtrip { max_n, slow } => cmd_roundtrip(max_n, slow).map(Some),
        Command::Census { n, method, dump } => cmd_census(n, method, dump).map(Some),
        Command::Random { n, seed } => cmd_random(n, seed).map(|()| None),
    }
}

fn read_input(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

/// Reads and fully validates a topology file, for the commands that require
/// a topology as input rather than judging one.
fn read_topology(path: &Path, report: &mut Report) -> Result<Topology, InputError> {
    let text = read_input(path)?;
    report.input(&path.display().to_string(), text.as_bytes());
    let (carrier, family) = parse_topology_family(&text)?;
    validate(carrier, &family)
        .map_err(|e| InputError(format!("{} is not a topology: {e}", path.display())))
}

fn cmd_validate(path: &Path) -> Result<Report, InputError> {
    let mut report = Report::new("validate");
    let text = read_input(path)?;
    report.input(&path.display().to_string(), text.as_bytes());
    let (carrier, family) = parse_topology_family(&text)?;
    match validate(carrier, &family) {
        Ok(t) => {
            report.line(format!("opens: {}", t.open_count()));
            report.check("axioms", true);
        }
        Err(TopologyError::Axioms(violations)) => {
            for v in violations.violations() {
                report.line(format!("violation: {v}"));
            }
            report.fail();
        }
        Err(other) => return Err(InputError(other.to_string())),
    }
    Ok(report)
}

fn cmd_crosscheck(path: &Path, subset: &str) -> Result<Report, InputError> {
    let mut report = Report::new("crosscheck");
    let t = read_topology(path, &mut report)?;
    let y = PointSet::parse(t.carrier(), subset)
        .map_err(|e| InputError(format!("invalid subset {subset:?}: {e}")))?;

    let direct = subspace_topology(&t, y);
    let (canonical, certificate) = subspace_topology_canonical(&t, y);
    let via_closure = subspace_via_closure(&t, y);

    report.check("direct = canonical", direct.sub() == canonical.sub());
    report.check("direct = via-closure", direct.sub() == via_closure.sub());
    report.check("union identities", certificate.all_hold());

    let mut maximality = true;
    let mut traces: Vec<u16> = t.open_masks().iter().map(|&u| u & y.mask()).collect();
    traces.sort_unstable();
    traces.dedup();
    for &vmask in &traces {
        let v = PointSet::from_mask(t.carrier(), vmask).expect("trace of a carrier subset");
        let rep = maximal_open_representative(&t, y, v).expect("every trace is relatively open");
        maximality &= t.is_open(rep) && rep.mask() & y.mask() == vmask;
        for &w in t.open_masks() {
            if w & y.mask() == vmask {
                maximality &= w & !rep.mask() == 0;
            }
        }
    }
    report.check("representative maximality", maximality);

    for line in certificate.render().lines() {
        report.line(format!("cert: {line}"));
    }
    report.line(emit_topology(direct.sub()));
    Ok(report)
}

fn cmd_initial(topology: &Path, function: &Path) -> Result<Report, InputError> {
    let mut report = Report::new("initial");
    let t = read_topology(topology, &mut report)?;
    let text = read_input(function)?;
    report.input(&function.display().to_string(), text.as_bytes());
    let f = parse_function(&text)?;
    if f.cod() != t.carrier() {
        return Err(InputError(format!(
            "function codomain has {} points but the topology carrier has {}",
            f.cod().size(),
            t.carrier().size()
        )));
    }

    let direct = initial_topology_direct(&t, &f);
    let via_image = initial_topology_via_image(&t, &f);
    let via_closure = initial_topology_via_closure(&t, &f);
    report.line(format!("construction: direct {}", emit_topology(&direct)));
    report.line(format!("construction: via-image {}", emit_topology(&via_image)));
    report.line(format!("construction: via-closure {}", emit_topology(&via_closure)));
    report.check("direct = via-image", via_image == direct);
    report.check("direct = via-closure", via_closure == direct);
    report.check(
        "continuity",
        is_continuous(&f, &direct, &t).expect("carriers agree by construction"),
    );
    report.check(
        "weakest",
        verify_weakest(&t, &f, &direct)
            .expect("carriers agree by construction")
            .holds(),
    );
    report.line(emit_topology(&direct));
    Ok(report)
}

fn cmd_closure_check(path: &Path) -> Result<Report, InputError> {
    let mut report = Report::new("closure-check");
    let text = read_input(path)?;
    report.input(&path.display().to_string(), text.as_bytes());
    let (carrier, table) = parse_operator_table(&text)?;
    match validate_kuratowski(carrier, &table) {
        Ok(op) => {
            report.check("K1-K4", true);
            let induced = topology_from_closure(&op);
            report.check("round trip", closure_from_topology(&induced) == op);
            report.line(emit_topology(&induced));
        }
        Err(ClosureError::Axioms(violations)) => {
            for v in violations.violations() {
                report.line(format!("violation: {v}"));
            }
            report.fail();
        }
        Err(other) => return Err(InputError(other.to_string())),
    }
    Ok(report)
}

fn cmd_roundtrip(max_n: u8, slow: bool) -> Result<Report, InputError> {
    if max_n > 4 {
        return Err(InputError(format!(
            "roundtrip sweeps the brute census, which is limited to 4 points (got {max_n})"
        )));
    }
    let mut report = Report::new("roundtrip");
    for n in 0..=max_n {
        let census = enumerate_brute(n).expect("within the brute limit");
        let mut ok = true;
        for t in census.topologies() {
            let op = closure_from_topology(t);
            let back = topology_from_closure(&op);
            ok &= back == *t;
            ok &= closure_from_topology(&back) == op;
        }
        report.check(&format!("operator round trip n={n} topologies={}", census.len()), ok);
    }

    classify_tables(&mut report, 2);
    if slow {
        classify_tables(&mut report, 3);
    }
    Ok(report)
}

/// Classifies every raw `2^n`-entry table over an `n`-point carrier: the
/// validator must accept exactly the tables realized by some census
/// topology's closure.
fn classify_tables(report: &mut Report, n: u8) {
    let carrier = Carrier::new(n).unwrap();
    let entries = carrier.subset_count();
    let realized: HashSet<Vec<u16>> = enumerate_brute(n)
        .expect("within the brute limit")
        .topologies()
        .iter()
        .map(|t| closure_from_topology(t).table().to_vec())
        .collect();

    let total = (entries as u64).pow(entries as u32);
    let mut accepted = 0u64;
    let mut ok = true;
    let mut table = vec![0u16; entries];
    let mut exhausted = false;
    while !exhausted {
        match validate_kuratowski(carrier, &table) {
            Ok(op) => {
                accepted += 1;
                ok &= realized.contains(op.table());
            }
            Err(_) => ok &= !realized.contains(&table),
        }
        exhausted = true;
        for slot in table.iter_mut() {
            *slot += 1;
            if (*slot as usize) < entries {
                exhausted = false;
                break;
            }
            *slot = 0;
        }
    }
    ok &= accepted == realized.len() as u64;
    report.check(&format!("table classification n={n} tables={total} accepted={accepted}"), ok);
}

fn cmd_census(n: u8, method: MethodArg, dump: bool) -> Result<Report, InputError> {
    let census = match method {
        MethodArg::Brute => enumerate_brute(n),
        MethodArg::Preorder => enumerate_preorder(n),
    }
    .map_err(|e| InputError(e.to_string()))?;

    let mut report = Report::new("census");
    let method_name = match census.method() {
        CensusMethod::Brute => "brute",
        CensusMethod::Preorder => "preorder",
    };
    report.line(format!("n={} method={} count={}", census.n(), method_name, census.len()));
    if dump {
        for t in census.topologies() {
            report.line(emit_topology(t));
        }
    }
    Ok(report)
}

/// Prints a bare topology file, pipeable into the other commands.
fn cmd_random(n: u8, seed: u64) -> Result<(), InputError> {
    let carrier = Carrier::new(n).map_err(|e| InputError(e.to_string()))?;
    let t = random_topology(carrier, seed);
    println!("{}", emit_topology(&t));
    Ok(())
}
