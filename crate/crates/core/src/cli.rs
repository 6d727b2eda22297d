//! Batch front end. Every input argument is a file path, `-` for standard
//! input, or the literal text itself.

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::certify::{certificate, Witnesser};
use crate::composition::{leaf_root, node_replace, NodeOrder};
use crate::error::Error;
use crate::graph::KmGraph;
use crate::shape::Shape;
use crate::tree::{decode, encode, enumerate_trees, Tree};

#[derive(Parser, Debug)]
#[command(name = "kmtree", about = "Trees as Kelly-Mac Lane graphs")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the variance of a shape.
    Variance { shape: String },
    /// Decide whether a tree-shaped graph is allowable.
    Check { graph: String },
    /// Print the graph of a tree.
    Encode { tree: String },
    /// Print the tree of an acyclic tree-shaped graph.
    Decode { graph: String },
    /// Graft the root of S onto leaf q of T.
    ComposeLeaf {
        s: String,
        t: String,
        #[arg(short, long)]
        q: usize,
        /// List the nodes of T before those of S.
        #[arg(long)]
        t_first: bool,
    },
    /// Substitute S for node p of T.
    ComposeNode {
        s: String,
        t: String,
        #[arg(short, long)]
        p: usize,
    },
    /// Print an allowable term for a tree (or tree graph) and verify it.
    Certify { input: String },
    /// Print an allowable morphism exhibiting a closed loop with a graph.
    Witness { graph: String },
    /// List every tree with the given node arities.
    Enumerate { arities: Vec<usize> },
    /// Render a graph (or a tree's graph) in DOT.
    Dot { input: String },
}

/// Exit status and the text destined for standard output and error.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(p) => Failure::Usage(p.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<crate::parse::ParseError> for Failure {
    fn from(e: crate::parse::ParseError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn graph(arg: &str) -> Result<KmGraph, Failure> {
    Ok(read_input(arg)?.parse()?)
}

fn tree(arg: &str) -> Result<Tree, Failure> {
    Ok(read_input(arg)?.parse()?)
}

/// A tree, or a graph of tree shape read back as one.
fn tree_or_graph(arg: &str) -> Result<Tree, Failure> {
    let text = read_input(arg)?;
    if text.trim_start().starts_with("dom") {
        Ok(decode(&text.parse()?)?)
    } else {
        Ok(text.parse()?)
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    let out = match command {
        Command::Variance { shape } => {
            let s: Shape = read_input(&shape)?.parse()?;
            s.variance().to_string()
        }
        Command::Check { graph: g } => {
            let g = graph(&g)?;
            format!("allowable: {}", decode(&g)?)
        }
        Command::Encode { tree: t } => encode(&tree(&t)?).to_string(),
        Command::Decode { graph: g } => decode(&graph(&g)?)?.to_string(),
        Command::ComposeLeaf { s, t, q, t_first } => {
            let order = if t_first {
                NodeOrder::BaseFirst
            } else {
                NodeOrder::GraftedFirst
            };
            leaf_root(&graph(&s)?, &graph(&t)?, q, order)?.to_string()
        }
        Command::ComposeNode { s, t, p } => node_replace(&graph(&s)?, &graph(&t)?, p)?.to_string(),
        Command::Certify { input } => {
            let c = certificate(&tree_or_graph(&input)?);
            let verified = c.verify()?;
            let text = format!("{c}\nverified: {verified}");
            if !verified {
                return Err(Failure::Domain(text));
            }
            text
        }
        Command::Witness { graph: g } => {
            let w = Witnesser::new().witness(&graph(&g)?)?;
            let verified = w.verify()?;
            format!("{w}\nverified: {verified}")
        }
        Command::Enumerate { arities } => enumerate_trees(&arities)
            .iter()
            .map(Tree::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
        Command::Dot { input } => {
            let text = read_input(&input)?;
            let g: KmGraph = if text.trim_start().starts_with("dom") {
                text.parse()?
            } else {
                encode(&text.parse()?)
            };
            g.to_dot().trim_end().to_string()
        }
    };
    Ok(Outcome::ok(out + "\n"))
}

/// Runs one command. `argv[0]` is the program name. Exit status is 0 on
/// success, 1 when the input is well formed but the operation fails (a
/// cycle, a shape mismatch), and 2 for usage or syntax errors.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: msg + "\n",
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    };
    match (&cli.output, outcome.code) {
        (Some(path), 0) => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome::default(),
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: writing {}: {e}\n", path.display()),
            },
        },
        _ => outcome,
    }
}
