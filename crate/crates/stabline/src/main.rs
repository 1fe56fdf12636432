//! The `stabline` command line tool.
//!
//! Subcommands map onto the library one to one: `check` decides existence,
//! `solve` prints one selected transversal, `polygon` prints the transversal
//! polygon in dual coordinates, `plot` renders an SVG picture, and `oracle`
//! runs the brute-force feasibility cross-check. Every command reads a JSON
//! instance file and prints a single JSON object. The process exit status is
//! 0 when a transversal exists, 1 when none exists, and 2 on input or usage
//! errors.

#![forbid(unsafe_code)]
#![allow(clippy::result_large_err)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use stabline::dual::{dual_to_line, oracle_feasible, DualPoint};
use stabline::instance::{
    canonicalize, parse_instance, rational_to_json, solve_instance, InstanceDocument,
};
use stabline::selectors::SelectorMethod;
use stabline::stabbing::feasibility;
use stabline::svg::{emit_svg, PlotMode};
use stabline::Error;

#[derive(Parser)]
#[command(
    name = "stabline",
    version,
    about = "Exact stabbing lines for families of parallel segments",
    after_help = "Exit status: 0 when a transversal exists, 1 when none exists, \
                  2 on input or usage errors."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a line crossing every segment exists.
    Check {
        /// Instance file (JSON).
        file: PathBuf,
    },
    /// Print one selected transversal as JSON.
    Solve {
        /// Instance file (JSON).
        file: PathBuf,
        /// Selection rule: extreme-min, extreme-max, midpoint, discrete, or
        /// centroid.
        #[arg(long, default_value = "centroid")]
        method: SelectorMethod,
    },
    /// Print the polygon of all transversals in dual (slope, intercept)
    /// coordinates of the canonical frame.
    Polygon {
        /// Instance file (JSON).
        file: PathBuf,
    },
    /// Render the instance and its solution as an SVG file.
    Plot {
        /// Instance file (JSON).
        file: PathBuf,
        /// Where to write the SVG document.
        #[arg(long)]
        out: PathBuf,
        /// Draw the dual plane (strips and polygon) instead of the primal one.
        #[arg(long)]
        dual: bool,
        /// Comma-separated selection rules to draw.
        #[arg(long, value_delimiter = ',', default_values_t = SelectorMethod::ALL)]
        methods: Vec<SelectorMethod>,
    },
    /// Brute-force feasibility via strip boundary crossings (test support).
    Oracle {
        /// Instance file (JSON).
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::NoTransversal => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cmd: &Command) -> Result<bool, Error> {
    match cmd {
        Command::Check { file } => cmd_check(file),
        Command::Solve { file, method } => cmd_solve(file, *method),
        Command::Polygon { file } => cmd_polygon(file),
        Command::Plot { file, out, dual, methods } => cmd_plot(file, out, *dual, methods),
        Command::Oracle { file } => cmd_oracle(file),
    }
}

fn load(path: &Path) -> Result<InstanceDocument, Error> {
    let text = std::fs::read_to_string(path).map_err(|err| Error::Input {
        path: path.display().to_string(),
        message: err.to_string(),
    })?;
    parse_instance(&text)
}

fn print_json(obj: Map<String, Value>) {
    println!("{}", Value::Object(obj));
}

fn dual_point_json(p: &DualPoint) -> Value {
    json!({ "m": rational_to_json(&p.m), "b": rational_to_json(&p.b) })
}

fn cmd_check(file: &Path) -> Result<bool, Error> {
    let doc = load(file)?;
    let mut obj = Map::new();
    match canonicalize(&doc) {
        Ok((family, map)) => {
            let report = feasibility(&family);
            obj.insert("feasible".to_string(), json!(report.feasible));
            obj.insert("unique".to_string(), json!(report.unique));
            if let Some(line) = &report.witness {
                obj.insert("witness".to_string(), map.line_back(line).to_json());
            }
            print_json(obj);
            Ok(report.feasible)
        }
        Err(err @ Error::DisjointAtAbscissa(_)) => {
            obj.insert("feasible".to_string(), json!(false));
            obj.insert("unique".to_string(), json!(false));
            obj.insert("note".to_string(), json!(err.to_string()));
            print_json(obj);
            Ok(false)
        }
        Err(err) => Err(err),
    }
}

fn cmd_solve(file: &Path, method: SelectorMethod) -> Result<bool, Error> {
    let doc = load(file)?;
    let result = solve_instance(&doc)?;
    if !result.feasible {
        let mut obj = Map::new();
        obj.insert("feasible".to_string(), json!(false));
        if let Some(note) = &result.note {
            obj.insert("note".to_string(), json!(note));
        }
        print_json(obj);
        return Ok(false);
    }
    let line = result.line_for(method).expect("feasible result has every selector line");
    println!("{}", line.to_json());
    Ok(true)
}

fn cmd_polygon(file: &Path) -> Result<bool, Error> {
    let doc = load(file)?;
    let result = solve_instance(&doc)?;
    let mut obj = Map::new();
    obj.insert(
        "classification".to_string(),
        json!(result.polygon.class().name()),
    );
    let vertices: Vec<Value> = result.polygon.vertices().iter().map(dual_point_json).collect();
    obj.insert("vertices".to_string(), Value::Array(vertices));
    obj.insert("area".to_string(), rational_to_json(&result.area));
    if let Some(centroid) = result.polygon.centroid() {
        obj.insert("centroid".to_string(), dual_point_json(&centroid));
    }
    if let Some(note) = &result.note {
        obj.insert("note".to_string(), json!(note));
    }
    print_json(obj);
    Ok(result.feasible)
}

fn cmd_plot(
    file: &Path,
    out: &Path,
    dual: bool,
    methods: &[SelectorMethod],
) -> Result<bool, Error> {
    let doc = load(file)?;
    let result = solve_instance(&doc)?;
    let mode = if dual { PlotMode::Dual } else { PlotMode::Primal };
    let svg = emit_svg(&doc, &result, mode, methods)?;
    std::fs::write(out, svg).map_err(|err| Error::Input {
        path: out.display().to_string(),
        message: err.to_string(),
    })?;
    Ok(result.feasible)
}

fn cmd_oracle(file: &Path) -> Result<bool, Error> {
    let doc = load(file)?;
    let mut obj = Map::new();
    match canonicalize(&doc) {
        Ok((family, map)) => match oracle_feasible(&family)? {
            Some(point) => {
                obj.insert("feasible".to_string(), json!(true));
                let line = dual_to_line(&point);
                obj.insert("witness".to_string(), map.line_back(&line).to_json());
                print_json(obj);
                Ok(true)
            }
            None => {
                obj.insert("feasible".to_string(), json!(false));
                print_json(obj);
                Ok(false)
            }
        },
        Err(err @ Error::DisjointAtAbscissa(_)) => {
            obj.insert("feasible".to_string(), json!(false));
            obj.insert("note".to_string(), json!(err.to_string()));
            print_json(obj);
            Ok(false)
        }
        Err(err) => Err(err),
    }
}
