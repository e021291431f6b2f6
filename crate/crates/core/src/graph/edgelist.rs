use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format:
///
/// ```text
/// # comment
/// n 4
/// 0 1
/// 2 3   # trailing comments are fine
/// ```
///
/// The `n <count>` line must come before any edge. Self-loops, duplicate
/// edges and out-of-range indices are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::MalformedInput(format!("line {}: {msg}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (&mut graph, fields.as_slice()) {
            (None, ["n", count]) => {
                let n: usize = count.parse().map_err(|_| bad(format!("bad vertex count {count:?}")))?;
                if n > super::MAX_VERTICES {
                    return Err(Error::TooLarge { n, max: super::MAX_VERTICES });
                }
                graph = Some(Graph::new(n));
            }
            (None, _) => return Err(bad("expected header line `n <count>`".into())),
            (Some(_), ["n", _]) => return Err(bad("duplicate `n` header".into())),
            (Some(g), [a, b]) => {
                let u: usize = a.parse().map_err(|_| bad(format!("bad vertex {a:?}")))?;
                let v: usize = b.parse().map_err(|_| bad(format!("bad vertex {b:?}")))?;
                if u >= g.order() || v >= g.order() {
                    return Err(bad(format!("edge {u} {v} out of range for n={}", g.order())));
                }
                if u == v {
                    return Err(bad(format!("self-loop at vertex {u}")));
                }
                if g.has_edge(u, v) {
                    return Err(bad(format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
            }
            (Some(_), _) => return Err(bad(format!("expected `u v`, found {line:?}"))),
        }
    }
    graph.ok_or_else(|| Error::MalformedInput("missing `n <count>` header".into()))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
