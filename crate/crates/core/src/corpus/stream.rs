use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use thiserror::Error;

use crate::error::ParseError;
use crate::graph::{parse_graph6, Graph};

/// What to do with a line that does not parse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OnError {
    /// Yield the error and stop.
    #[default]
    FailFast,
    /// Record the error and continue with the next line.
    Skip,
}

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Io { line: usize, source: io::Error },
}

/// A parsed graph and the 1-based line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberedGraph {
    pub line: usize,
    pub graph: Graph,
}

/// Lazily parses one graph6 string per line. Blank lines and a leading
/// `>>graph6<<` header are ignored.
pub struct Graph6Stream<R> {
    lines: io::Lines<R>,
    line: usize,
    mode: OnError,
    done: bool,
    skipped: Vec<StreamError>,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R, mode: OnError) -> Self {
        Graph6Stream {
            lines: reader.lines(),
            line: 0,
            mode,
            done: false,
            skipped: Vec::new(),
        }
    }

    /// Errors recorded so far in [`OnError::Skip`] mode.
    pub fn skipped(&self) -> &[StreamError] {
        &self.skipped
    }

    fn fail(&mut self, err: StreamError) -> Option<Result<NumberedGraph, StreamError>> {
        match self.mode {
            OnError::FailFast => {
                self.done = true;
                Some(Err(err))
            }
            OnError::Skip => {
                self.skipped.push(err);
                None
            }
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<NumberedGraph, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = match self.lines.next()? {
                Ok(text) => text,
                Err(source) => {
                    let line = self.line + 1;
                    self.line = line;
                    // A broken reader cannot be resumed, even in skip mode.
                    self.done = true;
                    return Some(Err(StreamError::Io { line, source }));
                }
            };
            self.line += 1;
            let mut body = text.trim_end_matches('\r');
            if self.line == 1 {
                body = body.strip_prefix(">>graph6<<").unwrap_or(body);
            }
            if body.trim().is_empty() {
                continue;
            }
            match parse_graph6(body) {
                Ok(graph) => return Some(Ok(NumberedGraph { line: self.line, graph })),
                Err(source) => {
                    let line = self.line;
                    if let Some(item) = self.fail(StreamError::Parse { line, source }) {
                        return Some(item);
                    }
                }
            }
        }
        None
    }
}

/// Opens `path` as a [`Graph6Stream`].
pub fn read_graph6_stream(path: impl AsRef<Path>, mode: OnError) -> io::Result<Graph6Stream<BufReader<File>>> {
    Ok(Graph6Stream::new(BufReader::new(File::open(path)?), mode))
}
