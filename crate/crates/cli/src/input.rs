use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::Args;
use mintough::graph::{parse_edge_list, parse_graph6};
use mintough::Graph;

use crate::Failure;

/// Exactly one graph source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// graph6 string, or "-" to read one from standard input
    pub graph6: Option<String>,
    /// File whose first non-empty line is a graph6 string
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// File holding an edge list ("n m" header, then one "u v" pair per edge)
    #[arg(long, value_name = "PATH")]
    pub edge_list: Option<PathBuf>,
}

fn first_line(text: &str) -> &str {
    text.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim()
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, Failure> {
        let io_err = |what: &str, e: io::Error| Failure::Parse(format!("cannot read {what}: {e}"));
        if let Some(path) = &self.edge_list {
            let text = fs::read_to_string(path).map_err(|e| io_err(&path.display().to_string(), e))?;
            return parse_edge_list(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())));
        }
        let text = match (&self.file, self.graph6.as_deref()) {
            (Some(path), _) => fs::read_to_string(path).map_err(|e| io_err(&path.display().to_string(), e))?,
            (None, Some("-")) => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| io_err("standard input", e))?;
                buf
            }
            (None, Some(g6)) => g6.to_string(),
            (None, None) => unreachable!("clap enforces one input"),
        };
        let line = first_line(&text);
        parse_graph6(line).map_err(|e| Failure::Parse(format!("graph6 {line:?}: {e}")))
    }
}
