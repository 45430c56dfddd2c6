//! The `reconfig` command line.
//!
//! Exit codes: 0 means yes or ok, 1 means no or invalid, 2 means error
//! (including an exhausted search budget and usage errors).

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::engine::{solve_tar_with, verify_sequence, SolveOptions, DEFAULT_MAX_STATES};
use crate::error::{Error, Result};
use crate::gadgets::{build_ccsr, ccsr_to_cdsr};
use crate::generate::{random_planar_cds, PlanarParams};
use crate::graph::{degeneracy, Graph, VertexSet};
use crate::io::{
    instance_to_json, parse_edge_list, parse_instance, parse_reconf_instance, parse_sequence, sequence_to_json,
    to_dot, Parsed,
};
use crate::kernel::{compute_core, kernelize};
use crate::planar::{compute_or_validate_embedding, embed, enumerate_faces};

#[derive(Parser, Debug)]
#[command(name = "reconfig", version, about = "Connected dominating set reconfiguration toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the main output here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Also write the output graph in Graphviz DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search for a shortest TAR sequence from source to target.
    Solve {
        /// Instance file, or `-` for stdin.
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a sequence against an instance.
    Verify { instance: PathBuf, sequence: PathBuf },
    /// Reduce a planar CDS instance.
    Kernelize {
        instance: PathBuf,
        /// Write the rule trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Compute a domination core containing source and target.
    Core {
        instance: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Build the hardness gadget from a Multicolored Clique file.
    GenGadget {
        mcc: PathBuf,
        /// Layers per block.
        #[arg(long, default_value_t = 2)]
        rep: usize,
        /// Apply the colored-to-CDS reduction.
        #[arg(long)]
        to_cds: bool,
        /// Write the copy and subdivision tables as JSON.
        #[arg(long)]
        layout: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Generate a seeded random planar CDS instance with an embedding.
    GenRandomPlanar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Compute or validate a planar embedding.
    Embed {
        input: PathBuf,
        /// Read a plain or DIMACS edge list instead of an instance file.
        #[arg(long)]
        edge_list: bool,
        /// Edge list ids start at 1.
        #[arg(long, requires = "edge_list")]
        one_based: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Print graph statistics as JSON.
    Stats {
        input: PathBuf,
        #[arg(long)]
        edge_list: bool,
        #[arg(long, requires = "edge_list")]
        one_based: bool,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<Vec<u8>> {
        if path == Path::new("-") {
            let mut buf = Vec::new();
            self.stdin
                .read_to_end(&mut buf)
                .map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
            Ok(buf)
        } else {
            fs::read(path).map_err(|e| Error::Invalid(format!("reading {}: {e}", path.display())))
        }
    }

    fn emit(&mut self, out: Option<&Path>, text: &str) -> Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match out {
            Some(p) => write_file(p, &text),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Invalid(format!("writing stdout: {e}"))),
        }
    }

    fn note(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.stderr, "{msg}");
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Invalid(format!("writing {}: {e}", path.display())))
}

fn write_dot(path: Option<&Path>, g: &Graph, highlight: &VertexSet) -> Result<()> {
    match path {
        Some(p) => write_file(p, &to_dot(g, highlight)),
        None => Ok(()),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("value serializes")
}

fn read_graph(io: &mut Io, path: &Path, edge_list: bool, one_based: bool) -> Result<(Graph, Option<Parsed>)> {
    let bytes = io.read(path)?;
    if edge_list {
        let text = String::from_utf8(bytes).map_err(|e| Error::Invalid(format!("not UTF-8: {e}")))?;
        return Ok((parse_edge_list(&text, one_based)?, None));
    }
    let parsed = parse_instance(&bytes)?;
    let g = match &parsed {
        Parsed::Reconf { instance, .. } => instance.graph().clone(),
        Parsed::Mcc { instance, .. } => instance.graph().clone(),
    };
    Ok((g, Some(parsed)))
}

#[derive(Serialize)]
struct Stats {
    n: usize,
    m: usize,
    max_degree: usize,
    degeneracy: usize,
    components: usize,
    planar: bool,
    faces: Option<usize>,
}

fn execute(cmd: Command, io: &mut Io) -> Result<i32> {
    match cmd {
        Command::Solve {
            instance,
            max_states,
            out,
        } => {
            let (inst, _) = parse_reconf_instance(&io.read(&instance)?)?;
            match solve_tar_with(&inst, SolveOptions { max_states })? {
                Some(seq) => {
                    io.emit(out.as_deref(), &sequence_to_json(&seq))?;
                    Ok(0)
                }
                None => {
                    io.note("unreachable: no TAR sequence from source to target");
                    Ok(1)
                }
            }
        }
        Command::Verify { instance, sequence } => {
            let (inst, _) = parse_reconf_instance(&io.read(&instance)?)?;
            let seq = parse_sequence(&io.read(&sequence)?)?;
            match verify_sequence(&inst, &seq) {
                Ok(()) => {
                    io.note(format!("ok: {} moves", seq.len()));
                    Ok(0)
                }
                Err(v) => {
                    io.note(format!("invalid: {v}"));
                    Ok(1)
                }
            }
        }
        Command::Kernelize {
            instance,
            trace,
            output,
        } => {
            let (inst, rs) = parse_reconf_instance(&io.read(&instance)?)?;
            let kernel = kernelize(&inst, rs.as_ref())?;
            io.emit(output.out.as_deref(), &instance_to_json(&kernel.instance, Some(&kernel.rotation)))?;
            write_dot(output.dot.as_deref(), kernel.instance.graph(), kernel.instance.source())?;
            match trace {
                Some(p) => write_file(&p, &to_json(&kernel.trace))?,
                None => io.note(format!(
                    "{} rule applications; n {} -> {}",
                    kernel.trace.len(),
                    inst.graph().n(),
                    kernel.instance.graph().n()
                )),
            }
            Ok(0)
        }
        Command::Core { instance, out } => {
            let (inst, _) = parse_reconf_instance(&io.read(&instance)?)?;
            let cert = compute_core(inst.graph(), inst.k(), &inst.source().union(inst.target()))?;
            io.emit(out.as_deref(), &to_json(&cert))?;
            Ok(0)
        }
        Command::GenGadget {
            mcc,
            rep,
            to_cds,
            layout,
            output,
        } => {
            let mcc = match parse_instance(&io.read(&mcc)?)? {
                Parsed::Mcc { instance, .. } => instance,
                Parsed::Reconf { .. } => {
                    return Err(Error::Field {
                        field: "variant".into(),
                        message: "gen-gadget expects variant mcc".into(),
                    })
                }
            };
            let (mut inst, lay) = build_ccsr(&mcc, rep)?;
            if to_cds {
                inst = ccsr_to_cdsr(&inst)?;
            }
            io.emit(output.out.as_deref(), &instance_to_json(&inst, None))?;
            write_dot(output.dot.as_deref(), inst.graph(), inst.source())?;
            if let Some(p) = layout {
                write_file(&p, &to_json(&lay))?;
            }
            Ok(0)
        }
        Command::GenRandomPlanar { n, k, seed, output } => {
            let (inst, rs) = random_planar_cds(PlanarParams::new(n, k, seed))?;
            io.emit(output.out.as_deref(), &instance_to_json(&inst, Some(&rs)))?;
            write_dot(output.dot.as_deref(), inst.graph(), inst.source())?;
            Ok(0)
        }
        Command::Embed {
            input,
            edge_list,
            one_based,
            output,
        } => {
            let (g, parsed) = read_graph(io, &input, edge_list, one_based)?;
            let given = match &parsed {
                Some(Parsed::Reconf { rotation, .. } | Parsed::Mcc { rotation, .. }) => rotation.clone(),
                None => None,
            };
            let rs = match compute_or_validate_embedding(&g, given.as_ref()) {
                Ok(rs) => rs,
                Err(Error::NonPlanar { .. }) => {
                    io.note("not planar");
                    return Ok(1);
                }
                Err(e) => return Err(e),
            };
            let text = match parsed {
                Some(Parsed::Reconf { instance, .. }) => instance_to_json(&instance, Some(&rs)),
                _ => to_json(&rs),
            };
            io.emit(output.out.as_deref(), &text)?;
            write_dot(output.dot.as_deref(), &g, &VertexSet::new())?;
            Ok(0)
        }
        Command::Stats {
            input,
            edge_list,
            one_based,
        } => {
            let (g, _) = read_graph(io, &input, edge_list, one_based)?;
            let rs = embed(&g).ok();
            let stats = Stats {
                n: g.n(),
                m: g.m(),
                max_degree: g.max_degree(),
                degeneracy: degeneracy(&g).0,
                components: g.components().len(),
                planar: rs.is_some(),
                faces: rs.map(|r| enumerate_faces(&r).len()),
            };
            io.emit(None, &to_json(&stats))?;
            Ok(0)
        }
    }
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run_with(
    argv: impl IntoIterator<Item = impl Into<std::ffi::OsString> + Clone>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            io.note(format!("error: {e}"));
            2
        }
    }
}

/// Runs the CLI on the process streams.
pub fn run(argv: impl IntoIterator<Item = impl Into<std::ffi::OsString> + Clone>) -> i32 {
    run_with(
        argv,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
