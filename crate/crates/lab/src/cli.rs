//! Command-line front end. Exit codes: 0 when the verdict holds, 1 when it
//! does not, 2 on bad input or an infeasible request.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use iasl_core::{
    classify, enumerate_topologies, minimal_ground_set, realize_topology, run_all, run_oracle,
    search_iasgl, search_top_iasgl, search_top_iasl, verify_iasgl, verify_iasi, verify_iasl,
    verify_top_iasgl, verify_top_iasl, verify_uniform, Graph, GroundSet, Holds, Labeling,
    SearchMode, TheoremId, VerificationReport,
};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::format::{self, FormatError};
use crate::json;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const DEFAULT_ORACLE_GROUND_SETS: [&str; 2] = ["{0,1}", "{0,1,2}"];

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] iasl_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "iasl-lab",
    version,
    about = "Integer additive set-labelings of small graphs"
)]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a labeling file against a graph file.
    Verify {
        /// iasl, iasi, uniform:K, iasgl, top-iasl or top-iasgl
        #[arg(long)]
        class: Class,
        graph: PathBuf,
        labeling: PathBuf,
    },
    /// Classify the subsets of a ground set as sumsets and summands.
    Classify { ground: String },
    /// Search for a labeling of a graph over a ground set.
    Search {
        #[arg(long, value_parser = parse_mode)]
        mode: SearchMode,
        graph: PathBuf,
        ground: String,
    },
    /// Build the labeled star realising a topology file.
    Realize {
        topology: PathBuf,
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        labeling_out: Option<PathBuf>,
    },
    /// List the topologies on a ground set.
    EnumTopologies {
        ground: String,
        /// Keep only topologies containing {0}.
        #[arg(long)]
        with_zero: bool,
        /// Print only the number of topologies.
        #[arg(long)]
        count: bool,
    },
    /// Find the smallest ground set admitting a labeling.
    MinGroundSet {
        #[arg(long, value_parser = parse_mode)]
        mode: SearchMode,
        #[arg(long, default_value_t = 6)]
        max_element: u32,
        graph: PathBuf,
    },
    /// Check the structural results over all small connected graphs.
    Oracle {
        /// Check ids, or `all`.
        #[arg(default_value = "all")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Ground set literal; repeat for several. Defaults to {0,1} and {0,1,2}.
        #[arg(long = "ground-set")]
        ground_sets: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Iasl,
    Iasi,
    Uniform(usize),
    Iasgl,
    TopIasl,
    TopIasgl,
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "iasl" => Class::Iasl,
            "iasi" => Class::Iasi,
            "iasgl" => Class::Iasgl,
            "top-iasl" => Class::TopIasl,
            "top-iasgl" => Class::TopIasgl,
            _ => {
                let k = s
                    .strip_prefix("uniform:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k > 0)
                    .ok_or_else(|| format!("unknown class `{s}`"))?;
                Class::Uniform(k)
            }
        })
    }
}

impl Class {
    fn name(self) -> String {
        match self {
            Class::Iasl => "iasl".into(),
            Class::Iasi => "iasi".into(),
            Class::Uniform(k) => format!("uniform:{k}"),
            Class::Iasgl => "iasgl".into(),
            Class::TopIasl => "top-iasl".into(),
            Class::TopIasgl => "top-iasgl".into(),
        }
    }

    fn verify(self, g: &Graph, f: &Labeling) -> VerificationReport {
        match self {
            Class::Iasl => verify_iasl(g, f),
            Class::Iasi => verify_iasi(g, f),
            Class::Uniform(k) => verify_uniform(g, f, k),
            Class::Iasgl => verify_iasgl(g, f),
            Class::TopIasl => verify_top_iasl(g, f),
            Class::TopIasgl => verify_top_iasgl(g, f),
        }
    }
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse()
}

/// What a subcommand produced: its exit status and the two renderings.
struct Output {
    ok: bool,
    json: Value,
    text: String,
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_TRUE
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            let written = if cli.json {
                serde_json::to_writer_pretty(&mut *out, &json::document(output.json))
                    .map_err(std::io::Error::from)
                    .and_then(|()| writeln!(out))
            } else {
                write!(out, "{}", output.text)
            };
            if written.is_err() {
                return EXIT_ERROR;
            }
            if output.ok {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn ground(literal: &str) -> Result<GroundSet, CliError> {
    Ok(literal.parse()?)
}

fn execute(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Verify {
            class,
            graph,
            labeling,
        } => {
            let g = load(&graph, format::parse_graph)?;
            let f = load(&labeling, format::parse_labeling)?;
            let report = class.verify(&g, &f);
            let mut text = format!("class    {}\nverdict  {}\n", class.name(), report.verdict());
            if !g.is_connected() {
                text.push_str("note     graph is disconnected\n");
            }
            for v in &report.violations {
                text.push_str(&format!(
                    "  {:<20} {:<16} {}\n",
                    v.kind.as_str(),
                    v.location,
                    v.detail
                ));
            }
            let mut body = json::report(&report);
            body["class"] = Value::from(class.name());
            body["connected"] = Value::from(g.is_connected());
            Ok(Output {
                ok: report.verdict(),
                json: body,
                text,
            })
        }
        Command::Classify { ground: literal } => {
            let c = classify(ground(&literal)?);
            let mut text = format!(
                "ground     {}\nrho        {}\nrho'       {}\nrho''      {}\nX sumset   {}\n",
                c.ground, c.rho, c.rho_prime, c.rho_double_prime, c.x_is_sumset
            );
            for f in &c.per_subset {
                let witness = f
                    .witness
                    .map(|(a, b)| format!("{a} + {b}"))
                    .unwrap_or_default();
                text.push_str(&format!(
                    "  {:<14} sumset={:<5} summand={:<5} {}\n",
                    f.set.to_string(),
                    f.is_nontrivial_sumset,
                    f.is_nontrivial_summand,
                    witness
                ));
            }
            Ok(Output {
                ok: true,
                json: json::classification(&c),
                text,
            })
        }
        Command::Search {
            mode,
            graph,
            ground: literal,
        } => {
            let g = load(&graph, format::parse_graph)?;
            let x = ground(&literal)?;
            let outcome = match mode {
                SearchMode::Iasgl => search_iasgl(&g, x)?,
                SearchMode::TopIasl => search_top_iasl(&g, x)?,
                SearchMode::TopIasgl => search_top_iasgl(&g, x)?,
            };
            let mut text = format!(
                "mode     {mode}\nground   {x}\nfound    {}\nnodes    {}\n",
                outcome.found, outcome.nodes_explored
            );
            if !g.is_connected() {
                text.push_str("note     graph is disconnected\n");
            }
            if let Some(f) = &outcome.labeling {
                text.push_str(&format::emit_labeling(f));
            }
            let mut body = json::outcome(&outcome);
            body["connected"] = Value::from(g.is_connected());
            Ok(Output {
                ok: outcome.found,
                json: body,
                text,
            })
        }
        Command::Realize {
            topology,
            graph_out,
            labeling_out,
        } => {
            let t = load(&topology, format::parse_topology)?;
            let (g, f) = realize_topology(&t)?;
            let report = verify_top_iasl(&g, &f);
            let graph_text = format::emit_graph(&g);
            let labeling_text = format::emit_labeling(&f);
            let mut text = String::new();
            match &graph_out {
                Some(p) => write(p, &graph_text)?,
                None => text.push_str(&graph_text),
            }
            match &labeling_out {
                Some(p) => write(p, &labeling_text)?,
                None => text.push_str(&labeling_text),
            }
            Ok(Output {
                ok: report.verdict(),
                json: json!({
                    "topology": json::topology(&t),
                    "graph": json::graph(&g),
                    "labeling": json::labeling(&f),
                    "verdict": report.verdict(),
                }),
                text,
            })
        }
        Command::EnumTopologies {
            ground: literal,
            with_zero,
            count,
        } => {
            let x = ground(&literal)?;
            let topologies = enumerate_topologies(x, with_zero)?;
            let text = if count {
                format!("{}\n", topologies.len())
            } else {
                topologies.iter().map(|t| format!("{t}\n")).collect()
            };
            let mut body = json!({ "ground": x.to_string(), "count": topologies.len() });
            if !count {
                body["topologies"] = topologies.iter().map(json::topology).collect();
            }
            Ok(Output {
                ok: true,
                json: body,
                text,
            })
        }
        Command::MinGroundSet {
            mode,
            max_element,
            graph,
        } => {
            let g = load(&graph, format::parse_graph)?;
            let found = minimal_ground_set(&g, mode, max_element)?;
            let text = match found {
                Some(x) => format!("{x}\n"),
                None => format!("none with elements up to {max_element}\n"),
            };
            Ok(Output {
                ok: found.is_some(),
                json: json!({
                    "mode": mode.as_str(),
                    "max_element": max_element,
                    "ground": found.map(|x| x.to_string()),
                }),
                text,
            })
        }
        Command::Oracle {
            ids,
            max_vertices,
            ground_sets,
        } => {
            let ids = theorem_ids(&ids)?;
            let literals: Vec<&str> = if ground_sets.is_empty() {
                DEFAULT_ORACLE_GROUND_SETS.to_vec()
            } else {
                ground_sets.iter().map(String::as_str).collect()
            };
            let grounds = literals
                .into_iter()
                .map(ground)
                .collect::<Result<Vec<_>, _>>()?;
            let reports = match ids[..] {
                [id] if !grounds.is_empty() => vec![run_oracle(id, max_vertices, &grounds)?],
                // one shared run so labelings are searched once
                _ => run_all(max_vertices, &grounds)?
                    .into_iter()
                    .filter(|r| ids.contains(&r.theorem_id))
                    .collect(),
            };
            let clean = reports.iter().all(|r| !r.is_undocumented_counterexample());
            let mut text = format!(
                "{:<10} {:<15} {:>9} {:>8}  {}\n",
                "check", "holds", "instances", "failures", "documented"
            );
            for r in &reports {
                text.push_str(&format!(
                    "{:<10} {:<15} {:>9} {:>8}  {}\n",
                    r.theorem_id.as_str(),
                    r.holds.as_str(),
                    r.instances_checked,
                    r.failures,
                    if r.documented { "yes" } else { "no" }
                ));
            }
            for r in reports
                .iter()
                .filter(|r| r.holds != Holds::Confirmed || !r.notes.is_empty())
            {
                text.push_str(&format!("\n{}: {}\n", r.theorem_id, r.theorem_id.claim()));
                for w in &r.witnesses {
                    text.push_str(&format!(
                        "  witness  X={} [{}] {}\n",
                        w.ground,
                        w.graph.describe(),
                        w.detail
                    ));
                }
                for n in &r.notes {
                    text.push_str(&format!("  note     {n}\n"));
                }
            }
            Ok(Output {
                ok: clean,
                json: json!({
                    "clean": clean,
                    "reports": reports.iter().map(json::theorem_report).collect::<Vec<_>>(),
                }),
                text,
            })
        }
    }
}

fn theorem_ids(ids: &[String]) -> Result<Vec<TheoremId>, CliError> {
    if ids.iter().any(|s| s == "all") {
        if ids.len() > 1 {
            return Err(CliError::Usage(
                "`all` cannot be combined with other ids".into(),
            ));
        }
        return Ok(TheoremId::ALL.to_vec());
    }
    Ok(ids
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<_>, _>>()?)
}
