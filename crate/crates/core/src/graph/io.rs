//! PACE-style `.gr` text format: `p tw <n> <m>` header, one `u v` line per
//! edge, 1-indexed on disk and 0-indexed in memory. Comment lines start with
//! `c`.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        if line.starts_with('p') {
            let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
            it.next();
            let kind = it.next().ok_or_else(|| err("missing problem kind"))?;
            if kind != "tw" {
                return Err(err(&format!("expected 'p tw', got 'p {kind}'")));
            }
            let nv: usize = it
                .next()
                .ok_or_else(|| err("missing vertex count"))?
                .parse()
                .map_err(|_| err("bad vertex count"))?;
            let _m: usize = it
                .next()
                .ok_or_else(|| err("missing edge count"))?
                .parse()
                .map_err(|_| err("bad edge count"))?;
            n = Some(nv);
            continue;
        }
        let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
        let u: usize = it.next().ok_or_else(|| err("missing endpoint"))?.parse().map_err(|_| err("bad endpoint"))?;
        let v: usize = it.next().ok_or_else(|| err("missing endpoint"))?.parse().map_err(|_| err("bad endpoint"))?;
        if u == 0 || v == 0 {
            return Err(err("vertices are 1-indexed on disk"));
        }
        edges.push((u - 1, v - 1));
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing 'p tw' header".into() })?;
    Graph::new(n, &edges)
}

pub fn to_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
