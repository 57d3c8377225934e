//! graph6 encoding: vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, big-endian, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735; // 2^36 - 1

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn decode_n(bytes: &[u8]) -> Result<(usize, usize)> {
    let six = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(bad(format!("byte {b} out of range 63..=126")))
        }
    };
    let first = *bytes.first().ok_or_else(|| bad("empty input"))?;
    if first != 126 {
        return Ok((six(first)?, 1));
    }
    if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(bad("truncated 36-bit vertex count"));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | six(b)?;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(bad("truncated 18-bit vertex count"));
    }
    let mut n = 0;
    for &b in &bytes[1..4] {
        n = (n << 6) | six(b)?;
    }
    Ok((n, 4))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (n, offset) = decode_n(bytes)?;
    let body = &bytes[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(bad(format!("byte {b} out of range 63..=126")));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        let last = body[body.len() - 1];
        if !(63..=126).contains(&last) || (last - 63) & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode_graph6(&g), "C~");
    }

    #[test]
    fn five_vertex_codes() {
        // star centred at vertex 4
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode_graph6(&g), "D?{");
        let h = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&h), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), h);
    }

    #[test]
    fn large_n_prefix() {
        let g = Graph::from_edges(63, [(0, 62)]).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    /// Shortest cycle by BFS from every vertex: a non-tree edge `(x, y)`
    /// closes a cycle of length at most `d(x) + d(y) + 1`.
    fn bfs_girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut parent = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in g.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        q.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_from_graph6() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(bfs_girth(&g), Some(5));
        assert_eq!(bfs_girth(&parse_graph6("C~").unwrap()), Some(3));
        assert_eq!(encode_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~").is_err()); // too long
        assert!(parse_graph6("D?").is_err()); // too short
        assert!(parse_graph6("C\x20").is_err()); // byte below 63
        assert!(parse_graph6("B@").is_err()); // padding bit set (n=2 uses one bit)
    }
}
