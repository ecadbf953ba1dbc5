//! Text formats.
//!
//! Instance file:
//!
//! ```text
//! c optional comments
//! p ctov <n> <m> <k>
//! e <u> <v> <multiplicity>
//! ```
//!
//! Vertices are `0..n`. A vertex set file lists vertex ids separated by
//! whitespace, with the same `c` comments.

use std::collections::BTreeSet;

use crate::error::{ParseError, ParseErrorKind};
use crate::multigraph::{Instance, MultiGraph, VertexId};

fn is_comment(line: &str) -> bool {
    line.is_empty() || line == "c" || line.starts_with("c ")
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut graph = MultiGraph::new(0);
    let mut found = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |kind| ParseError::new(line_no, kind);
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| err(ParseErrorKind::Malformed));
        match toks.as_slice() {
            ["p", "ctov", n, m, k] => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let (n, m, k) = (num(n)?, num(m)?, num(k)?);
                header = Some((n, m, k, line_no));
                graph = MultiGraph::new(n);
            }
            ["e", u, v, mult] => {
                let Some((n, ..)) = header else {
                    return Err(err(ParseErrorKind::MissingHeader));
                };
                let (u, v) = (num(u)?, num(v)?);
                let mult: u32 = mult.parse().map_err(|_| err(ParseErrorKind::Malformed))?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(ParseErrorKind::VertexOutOfRange(x)));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                if mult == 0 {
                    return Err(err(ParseErrorKind::ZeroMultiplicity));
                }
                if graph.has_edge(u, v) {
                    return Err(err(ParseErrorKind::DuplicatePair(u.min(v), u.max(v))));
                }
                graph.add_edge(u, v, mult).expect("endpoints checked");
                found += 1;
            }
            _ if header.is_none() => return Err(err(ParseErrorKind::MissingHeader)),
            _ => return Err(err(ParseErrorKind::Malformed)),
        }
    }
    let Some((_, m, k, line)) = header else {
        return Err(ParseError::new(
            text.lines().count().max(1),
            ParseErrorKind::MissingHeader,
        ));
    };
    if m != found {
        return Err(ParseError::new(
            line,
            ParseErrorKind::EdgeCountMismatch { declared: m, found },
        ));
    }
    Ok(Instance::new(graph, k))
}

/// Serializes with edges sorted. Deleted vertex ids are squeezed out, so the
/// output always uses `0..n`.
pub fn write_instance(inst: &Instance) -> String {
    let (g, _) = inst.graph.compacted();
    let mut out = format!("p ctov {} {} {}\n", g.num_vertices(), g.adjacent_pair_count(), inst.k);
    for (u, v, m) in g.edges() {
        out.push_str(&format!("e {u} {v} {m}\n"));
    }
    out
}

/// Parses a vertex set file; ids must be below `n`.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<BTreeSet<VertexId>, ParseError> {
    let mut out = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        for tok in line.split_whitespace() {
            let v: VertexId = tok
                .parse()
                .map_err(|_| ParseError::new(i + 1, ParseErrorKind::Malformed))?;
            if v >= n {
                return Err(ParseError::new(i + 1, ParseErrorKind::VertexOutOfRange(v)));
            }
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn write_vertex_set(s: &BTreeSet<VertexId>) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_edge_instance() {
        let inst = parse_instance("p ctov 2 1 1\ne 0 1 2\n").unwrap();
        assert_eq!(inst.k, 1);
        assert_eq!(inst.graph.multiplicity(0, 1), 2);
    }

    #[test]
    fn round_trip_sorts_edges() {
        let text = "c hello\np ctov 4 3 2\ne 2 3 1\ne 1 0 3\ne 0 2 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(write_instance(&inst), "p ctov 4 3 2\ne 0 1 3\ne 0 2 1\ne 2 3 1\n");
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("p ctov 2 1 1\ne 0 0 1\n", 2, ParseErrorKind::SelfLoop(0)),
            ("p ctov 2 1 1\ne 0 1 0\n", 2, ParseErrorKind::ZeroMultiplicity),
            ("p ctov 2 1 1\ne 0 2 1\n", 2, ParseErrorKind::VertexOutOfRange(2)),
            ("e 0 1 1\n", 1, ParseErrorKind::MissingHeader),
            (
                "p ctov 2 2 1\ne 0 1 1\ne 1 0 1\n",
                3,
                ParseErrorKind::DuplicatePair(0, 1),
            ),
            (
                "p ctov 2 2 1\ne 0 1 1\n",
                1,
                ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 },
            ),
            ("p ctov 2 0 1\np ctov 2 0 1\n", 2, ParseErrorKind::DuplicateHeader),
            ("p ctov 2 1 1\ne 0 x 1\n", 2, ParseErrorKind::Malformed),
        ];
        for (text, line, kind) in cases {
            assert_eq!(parse_instance(text), Err(ParseError::new(line, kind)), "{text:?}");
        }
    }

    #[test]
    fn vertex_sets() {
        let s = parse_vertex_set("c s\n3 1\n\n0\n", 4).unwrap();
        assert_eq!(s, BTreeSet::from([0, 1, 3]));
        assert_eq!(write_vertex_set(&s), "0 1 3\n");
        assert!(parse_vertex_set("4", 4).is_err());
    }
}
