use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use spacetime_concepts::groups::{decompose_similarity, witness};
use spacetime_concepts::lattice::{build_report, check_leiras2, emit_dot, expected, render_table, DimensionReport};
use spacetime_concepts::{
    classify, respects_exact, AffineMap, Error, FieldMode, GeometryId, GroupId, RelationId, WitnessName,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_INADMISSIBLE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stconcepts",
    version,
    about = "Exact automorphism deciders and the concept lattice of spacetime geometries"
)]
struct Cli {
    /// Field used for exact square roots and for accepted matrix entries.
    #[arg(long, global = true, default_value = "rational")]
    field: FieldMode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an affine map (JSON) into the five groups and eight relations.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Rebuild the concept table for one dimension.
    Table {
        #[command(flatten)]
        run: RunArgs,
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rebuild the Hasse diagram of concept sets as Graphviz DOT.
    Hasse {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check whether adding one relation to a geometry yields LClass.
    Leiras2 {
        #[arg(long)]
        geometry: GeometryId,
        #[arg(long)]
        relation: RelationId,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a catalog witness as JSON.
    Witness {
        #[arg(long)]
        name: WitnessName,
        #[arg(long, value_parser = parse_dim)]
        dim: usize,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, value_parser = parse_dim)]
    dim: usize,
    #[arg(long, default_value_t = 1000, value_parser = parse_trials)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_dim(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(d) if d >= 2 => Ok(d),
        _ => Err(format!("dimension must be an integer >= 2, got `{s}`")),
    }
}

fn parse_trials(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("trials must be a positive integer, got `{s}`")),
    }
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Json(_) => 2,
            Error::InadmissiblePair { .. } => EXIT_INADMISSIBLE,
            _ => EXIT_BAD_INPUT,
        };
        Failure(code, e.to_string())
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure(EXIT_BAD_INPUT, format!("{}: {e}", path.display()))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { input } => {
            let text = fs::read_to_string(&input).map_err(|e| io_failure(&input, e))?;
            let map = AffineMap::from_json(&text)?;
            check_field(&map, cli.field)?;
            println!("{}", pretty(&classify_json(&map, cli.field)));
            Ok(())
        }
        Command::Table { run, json } => {
            let report = build_report(&[run.dim], run.trials, run.seed);
            let dim = &report.dimensions[0];
            println!("seed = {}, trials = {}", run.seed, run.trials);
            print!("{}", render_table(dim));
            if let Some(path) = json {
                fs::write(&path, pretty(&report) + "\n").map_err(|e| io_failure(&path, e))?;
            }
            let mismatches = table_mismatches(dim);
            if mismatches.is_empty() {
                Ok(())
            } else {
                Err(Failure(
                    EXIT_MISMATCH,
                    format!("table differs from the known result: {}", mismatches.join(", ")),
                ))
            }
        }
        Command::Hasse { run, out } => {
            let report = build_report(&[run.dim], run.trials, run.seed);
            let dim = &report.dimensions[0];
            fs::write(&out, emit_dot(dim)).map_err(|e| io_failure(&out, e))?;
            for e in &dim.hasse_edges {
                println!(
                    "{} -> {}  ({})",
                    e.from,
                    e.to,
                    e.evidence.witness_name().unwrap_or("sampled")
                );
            }
            if hasse_matches(dim) {
                Ok(())
            } else {
                Err(Failure(
                    EXIT_MISMATCH,
                    "Hasse diagram differs from the known result".into(),
                ))
            }
        }
        Command::Leiras2 {
            geometry,
            relation,
            run,
        } => {
            let report = check_leiras2(geometry, relation, run.dim, run.trials, run.seed)?;
            println!("{}", pretty(&report));
            match expected::leiras2(geometry, relation, run.dim) {
                Some(v) if v != report.verdict => Err(Failure(
                    EXIT_MISMATCH,
                    format!("verdict {:?} differs from the known result {v:?}", report.verdict),
                )),
                _ => Ok(()),
            }
        }
        Command::Witness { name, dim } => {
            println!("{}", pretty(&witness(name, dim)));
            Ok(())
        }
    }
}

/// Rejects entries from a quadratic extension other than the selected one.
fn check_field(map: &AffineMap, mode: FieldMode) -> Result<(), Failure> {
    let allowed = match mode {
        FieldMode::Rational => None,
        FieldMode::QuadExt(k) => Some(k),
    };
    let entries = map
        .linear()
        .rows()
        .into_iter()
        .flatten()
        .chain(map.translation_part().coords().iter().cloned());
    for x in entries {
        if let Some(k) = x.radicand() {
            if Some(k) != allowed {
                return Err(Failure(
                    EXIT_BAD_INPUT,
                    format!("entry {x} is outside the field {mode}"),
                ));
            }
        }
    }
    Ok(())
}

fn classify_json(map: &AffineMap, mode: FieldMode) -> Value {
    let mut out = Map::new();
    out.insert("field".into(), json!(mode.to_string()));
    for g in GroupId::ALL {
        out.insert(
            g.name().into(),
            serde_json::to_value(classify(map, g)).expect("serializable"),
        );
    }
    let respects: Map<String, Value> = RelationId::ALL
        .into_iter()
        .map(|r| (r.name().to_string(), json!(respects_exact(map, r))))
        .collect();
    out.insert("respects".into(), Value::Object(respects));
    let mut decompositions = Map::new();
    for g in [GroupId::EuclSim, GroupId::GalSim] {
        if classify(map, g).member {
            let v = match decompose_similarity(map, g, mode) {
                Ok(d) => serde_json::to_value(d).expect("serializable"),
                Err(e) => json!({ "error": e.to_string() }),
            };
            decompositions.insert(g.name().into(), v);
        }
    }
    out.insert("decompositions".into(), Value::Object(decompositions));
    Value::Object(out)
}

fn table_mismatches(dim: &DimensionReport) -> Vec<String> {
    dim.table_cells
        .iter()
        .filter(|c| c.verdict != expected::table_cell(c.relation, c.geometry))
        .map(|c| format!("({}, {})", c.relation, c.geometry))
        .collect()
}

fn hasse_matches(dim: &DimensionReport) -> bool {
    let mut got: Vec<_> = dim.hasse_edges.iter().map(|e| (e.from, e.to)).collect();
    got.sort();
    let mut want = expected::HASSE_EDGES.to_vec();
    want.sort();
    got == want && dim.equivalences == expected::EQUIVALENCES
}
