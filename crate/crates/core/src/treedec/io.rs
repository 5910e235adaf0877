//! PACE 2017 `.td` interchange format:
//! `s td <#bags> <width+1> <n>`, `b <id> <vertices...>` lines, then tree edges
//! as `<id> <id>` lines. Ids and vertices are 1-indexed on disk.

use super::TreeDecomposition;
use crate::error::{Error, Result};

pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<u32>>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| Error::Parse { line: lineno + 1, msg };
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        if line.starts_with('s') {
            it.next();
            let kind = it.next().ok_or_else(|| err("missing 'td'".into()))?;
            if kind != "td" {
                return Err(err(format!("expected 's td', got 's {kind}'")));
            }
            let nb: usize = it.next().ok_or_else(|| err("missing bag count".into()))?.parse().map_err(|_| err("bad bag count".into()))?;
            let w1: usize = it.next().ok_or_else(|| err("missing width".into()))?.parse().map_err(|_| err("bad width".into()))?;
            let n: usize = it.next().ok_or_else(|| err("missing vertex count".into()))?.parse().map_err(|_| err("bad vertex count".into()))?;
            header = Some((nb, w1, n));
            bags = vec![None; nb];
            continue;
        }
        let (nb, _, n) = header.ok_or_else(|| err("line before 's td' header".into()))?;
        if line.starts_with('b') {
            it.next();
            let id: usize = it.next().ok_or_else(|| err("missing bag id".into()))?.parse().map_err(|_| err("bad bag id".into()))?;
            if id == 0 || id > nb {
                return Err(err(format!("bag id {id} out of range 1..={nb}")));
            }
            let mut bag = Vec::new();
            for tok in it {
                let v: usize = tok.parse().map_err(|_| err(format!("bad vertex '{tok}'")))?;
                if v == 0 || v > n {
                    return Err(err(format!("bag references unknown vertex {v}")));
                }
                bag.push((v - 1) as u32);
            }
            bags[id - 1] = Some(bag);
            continue;
        }
        let a: usize = it.next().ok_or_else(|| err("missing edge endpoint".into()))?.parse().map_err(|_| err("bad edge endpoint".into()))?;
        let b: usize = it.next().ok_or_else(|| err("missing edge endpoint".into()))?.parse().map_err(|_| err("bad edge endpoint".into()))?;
        if a == 0 || a > nb || b == 0 || b > nb {
            return Err(err(format!("tree edge ({a},{b}) out of range")));
        }
        edges.push((a - 1, b - 1));
    }
    let (nb, _, n) = header.ok_or(Error::Parse { line: 0, msg: "missing 's td' header".into() })?;
    let bags: Vec<Vec<u32>> = (0..nb)
        .map(|i| bags[i].clone().unwrap_or_default())
        .collect();
    Ok((TreeDecomposition::new(bags, edges), n))
}

pub fn emit_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for &v in bag {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
