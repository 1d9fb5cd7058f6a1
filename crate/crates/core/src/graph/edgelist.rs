//! Plain edge-list text: a header `n m`, then `m` pairs `u v` (0-indexed),
//! all whitespace-separated.

use super::Graph;
use crate::error::ParseError;

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = text.split_whitespace().enumerate();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let (idx, tok) = tokens
            .next()
            .ok_or_else(|| ParseError::EdgeList(format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| ParseError::EdgeList(format!("token {idx} ({tok:?}) is not a count")))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut g = Graph::empty(n).map_err(|e| ParseError::EdgeList(e.to_string()))?;
    for i in 0..m {
        let u = next(&format!("endpoint of edge {i}"))?;
        let v = next(&format!("endpoint of edge {i}"))?;
        if g.has_edge(u, v) {
            return Err(ParseError::EdgeList(format!("edge {u} {v} listed twice")));
        }
        g.add_edge(u, v)
            .map_err(|e| ParseError::EdgeList(format!("edge {i}: {e}")))?;
    }
    if let Some((idx, tok)) = tokens.next() {
        return Err(ParseError::EdgeList(format!(
            "trailing token {idx} ({tok:?}) after {m} edges"
        )));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::cycle;

    #[test]
    fn parses_and_emits() {
        let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("x 0").is_err());
    }
}
