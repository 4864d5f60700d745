//! The `.glg` line format.
//!
//! ```text
//! # comment
//! vertex NAME RANK
//! edge NAME TAIL HEAD
//! ```
//!
//! Names match `[A-Za-z0-9_]+`; ranks are base-10 nonnegative integers.
//! An edge may only refer to vertices declared on an earlier line.

use std::fmt;

use thiserror::Error;

use super::{is_valid_name, Digraph, GraphError, RankedDigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed(String),
    Graph(GraphError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Malformed(msg) => write!(f, "malformed line: {msg}"),
            ParseErrorKind::Graph(e) => write!(f, "{e}"),
        }
    }
}

/// 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    let mut start_col = 0;
    for (i, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: start_col,
                });
            }
        } else if start.is_none() {
            start = Some(i);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: start_col,
        });
    }
    out
}

fn parse(text: &str, require_ranks: bool) -> Result<Digraph, ParseError> {
    let mut g = Digraph::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let toks = tokens(line);
        let Some(first) = toks.first() else {
            continue;
        };
        let err = |column: usize, kind: ParseErrorKind| ParseError {
            line: line_no,
            column,
            kind,
        };
        let malformed = |column: usize, msg: String| err(column, ParseErrorKind::Malformed(msg));
        if first.text.starts_with('#') {
            continue;
        }
        let check_name = |t: &Token<'_>| {
            if is_valid_name(t.text) {
                Ok(())
            } else {
                Err(err(
                    t.column,
                    ParseErrorKind::Graph(GraphError::InvalidName(t.text.to_string())),
                ))
            }
        };
        match first.text {
            "vertex" => {
                let arity_ok = if require_ranks {
                    toks.len() == 3
                } else {
                    toks.len() == 2 || toks.len() == 3
                };
                if !arity_ok {
                    let col = toks.get(3).map_or(first.column, |t| t.column);
                    return Err(malformed(col, "expected `vertex NAME RANK`".into()));
                }
                check_name(&toks[1])?;
                let rank =
                    match toks.get(2) {
                        Some(t) => Some(t.text.parse::<u32>().map_err(|_| {
                            malformed(t.column, format!("rank {:?} is not a nonnegative integer", t.text))
                        })?),
                        None => None,
                    };
                g.add_vertex(toks[1].text, rank)
                    .map_err(|e| err(toks[1].column, ParseErrorKind::Graph(e)))?;
            }
            "edge" => {
                if toks.len() != 4 {
                    let col = toks.get(4).map_or(first.column, |t| t.column);
                    return Err(malformed(col, "expected `edge NAME TAIL HEAD`".into()));
                }
                for t in &toks[1..] {
                    check_name(t)?;
                }
                let (name, tail, head) = (&toks[1], &toks[2], &toks[3]);
                for endpoint in [tail, head] {
                    if g.vertex(endpoint.text).is_none() {
                        return Err(err(
                            endpoint.column,
                            ParseErrorKind::Graph(GraphError::UnknownVertex {
                                edge: name.text.to_string(),
                                vertex: endpoint.text.to_string(),
                            }),
                        ));
                    }
                }
                if require_ranks {
                    let rank = |t: &Token<'_>| g.given_rank(g.vertex(t.text).unwrap()).unwrap();
                    let (tr, hr) = (rank(tail), rank(head));
                    if tr <= hr {
                        return Err(err(
                            name.column,
                            ParseErrorKind::Graph(GraphError::NotRankDecreasing {
                                edge: name.text.to_string(),
                                tail: tail.text.to_string(),
                                head: head.text.to_string(),
                                tail_rank: tr,
                                head_rank: hr,
                            }),
                        ));
                    }
                }
                g.add_edge(name.text, tail.text, head.text)
                    .map_err(|e| err(name.column, ParseErrorKind::Graph(e)))?;
            }
            other => {
                return Err(malformed(
                    first.column,
                    format!("unknown record {other:?}, expected `vertex`, `edge` or `#`"),
                ))
            }
        }
    }
    Ok(g)
}

/// Parse a `.glg` document into a validated generalized layered graph.
pub fn parse_graph(text: &str) -> Result<RankedDigraph, ParseError> {
    let g = parse(text, true)?;
    Ok(g.into_ranked().expect("ranks and edges were validated line by line"))
}

/// Parse a `.glg` document where ranks are optional. Cycles are not rejected.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    parse(text, false)
}
