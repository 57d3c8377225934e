//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n=4          # optional header: tokens are then raw indices 0..n-1
//! 0 1
//! 1 2
//! ```
//!
//! Without a header the integer tokens are vertex labels: the distinct
//! labels are sorted numerically and mapped onto `0..m`, and the original
//! labels are kept on the graph. For 0-based dense input this is the
//! identity map.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(u64, u64)> = Vec::new();
    let mut seen_edge = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
            if seen_edge || declared_n.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "header must precede edges and appear once".into(),
                });
            }
            let n = rest.trim().parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad vertex count '{}': {e}", rest.trim()),
            })?;
            declared_n = Some(n);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 'u v', got '{line}'"),
            });
        }
        let parse = |t: &str| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("'{t}' is not a non-negative integer"),
            })
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("loop edge at vertex {u}"),
            });
        }
        seen_edge = true;
        edges.push((u, v));
    }

    match declared_n {
        Some(n) => {
            let idx = |x: u64| -> Result<usize> {
                usize::try_from(x)
                    .ok()
                    .filter(|&v| v < n)
                    .ok_or(Error::VertexOutOfRange {
                        vertex: x as usize,
                        n,
                    })
            };
            let list = edges
                .iter()
                .map(|&(u, v)| Ok((idx(u)?, idx(v)?)))
                .collect::<Result<Vec<_>>>()?;
            Graph::from_edges(n, list)
        }
        None => {
            let labels: Vec<u64> = edges
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let idx = |x: u64| labels.binary_search(&x).expect("label present");
            let list: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (idx(u), idx(v))).collect();
            let dense = labels.iter().enumerate().all(|(i, &l)| i as u64 == l);
            let g = Graph::from_edges(labels.len(), list)?;
            Ok(if dense {
                g
            } else {
                g.with_vertex_labels(labels.iter().map(u64::to_string).collect())
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertex_labels().is_none());
    }

    #[test]
    fn loop_is_rejected_with_line() {
        match parse_edge_list("0 0") {
            Err(Error::Parse { line: 1, msg }) => assert!(msg.contains("loop")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_line_reports_number() {
        assert!(matches!(
            parse_edge_list("0 1\n# c\n1 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 -1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn=3"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn header_overrides_and_bounds() {
        let g = parse_edge_list("n=5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            parse_edge_list("n=2\n0 2\n"),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn duplicates_collapse_and_comments_skip() {
        let g = parse_edge_list("# header\n0 1 # first\n1 0\n\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn one_based_labels_are_relabelled() {
        let g = parse_edge_list("1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.vertex_by_name("1"), Some(0));
        assert_eq!(g.vertex_name(2), "3");
    }

    #[test]
    fn prism_position_edge_list() {
        let text = "1 2\n1 3\n1 4\n2 5\n2 7\n3 7\n8 3\n6 4\n8 4\n9 5\n10 6\n7 9\n10 8\n10 9\n6 5\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }
}
