//! Line-oriented group definition files.
//!
//! ```text
//! [group]
//! kind = finbyab            # or raagext, thompsonext
//! K.order = 2
//! K.names = e t             # optional; element 0 is the identity
//! K.mult = 0 1 ; 1 0        # optional for cyclic K; rows by index or name
//! rank = 4                  # finbyab
//! matrix t = 0 1 0 0 ; 1 0 0 0 ; 0 0 0 1 ; 0 0 1 0
//! vertices = 1 2 3 4        # raagext
//! edges = (1,4) (2,4) (3,4)
//! perm t = (1 2)
//! flip t = 1                # thompsonext
//! ```

use std::collections::BTreeMap;

use super::finbyab::{identity, Matrix};
use super::{FinByAbelianGroup, FiniteGroupTable, GroupError, GroupInstance, RaagExtGroup, ThompsonExtGroup};
use crate::raagsigma::FlagComplex;

struct Entry {
    line: usize,
    key: String,
    value: String,
}

fn err(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse { line, msg: msg.into() }
}

/// Parses a group definition file.
pub fn parse_group(text: &str) -> Result<GroupInstance, GroupError> {
    let mut entries = Vec::new();
    let mut in_group = false;
    let last_line = text.lines().count().max(1);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('[') {
            if content != "[group]" {
                return Err(err(line, format!("unknown section {content}")));
            }
            in_group = true;
            continue;
        }
        if !in_group {
            return Err(err(line, "expected [group] header"));
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(line, "expected 'key = value'"))?;
        entries.push(Entry {
            line,
            key: key.split_whitespace().collect::<Vec<_>>().join(" "),
            value: value.trim().to_string(),
        });
    }
    if !in_group {
        return Err(err(1, "missing [group] header"));
    }
    let find = |key: &str| entries.iter().find(|e| e.key == key);
    let kind = find("kind").ok_or_else(|| err(last_line, "missing 'kind'"))?;
    let k = parse_k(&entries, last_line)?;
    match kind.value.as_str() {
        "finbyab" => parse_finbyab(&entries, k, last_line).map(GroupInstance::FinByAb),
        "raagext" => parse_raagext(&entries, k, last_line).map(GroupInstance::Raag),
        "thompsonext" => parse_thompson(&entries, k).map(GroupInstance::Thompson),
        other => Err(err(kind.line, format!("unknown kind '{other}'"))),
    }
}

fn parse_usize(e: &Entry, s: &str) -> Result<usize, GroupError> {
    s.parse()
        .map_err(|_| err(e.line, format!("expected a count, got '{s}'")))
}

fn parse_k(entries: &[Entry], last_line: usize) -> Result<FiniteGroupTable, GroupError> {
    let order_entry = entries.iter().find(|e| e.key == "K.order");
    let order = match order_entry {
        Some(e) => parse_usize(e, &e.value)?,
        None => 1,
    };
    if order == 0 {
        return Err(err(
            order_entry.map_or(last_line, |e| e.line),
            "K.order must be positive",
        ));
    }
    let names: Vec<String> = match entries.iter().find(|e| e.key == "K.names") {
        Some(e) => {
            let n: Vec<String> = e.value.split_whitespace().map(str::to_string).collect();
            if n.len() != order {
                return Err(err(e.line, format!("{} names for order {order}", n.len())));
            }
            n
        }
        None => FiniteGroupTable::cyclic(order, "k").names().to_vec(),
    };
    let mult_entries: Vec<&Entry> = entries.iter().filter(|e| e.key == "K.mult").collect();
    if mult_entries.is_empty() {
        let cyc = FiniteGroupTable::cyclic(order, "k");
        let mult = (0..order)
            .map(|a| (0..order).map(|b| cyc.mul(a, b)).collect())
            .collect();
        return FiniteGroupTable::new(mult, names).map_err(|e| err(last_line, e.to_string()));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for e in &mult_entries {
        for row in e.value.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let r = row
                .split_whitespace()
                .map(|tok| {
                    names
                        .iter()
                        .position(|n| n == tok)
                        .or_else(|| tok.parse().ok())
                        .ok_or_else(|| err(e.line, format!("unknown K element '{tok}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(r);
        }
    }
    let line = mult_entries[0].line;
    if rows.len() != order {
        return Err(err(line, format!("{} rows in K.mult for order {order}", rows.len())));
    }
    FiniteGroupTable::new(rows, names).map_err(|e| err(line, e.to_string()))
}

/// Entries of the form `<prefix> <k-element> = ...`, keyed by K index.
fn per_element<'a>(
    entries: &'a [Entry],
    prefix: &str,
    k: &FiniteGroupTable,
) -> Result<BTreeMap<usize, &'a Entry>, GroupError> {
    let mut out = BTreeMap::new();
    for e in entries {
        let mut parts = e.key.split_whitespace();
        if parts.next() != Some(prefix) {
            continue;
        }
        let name = parts
            .next()
            .ok_or_else(|| err(e.line, format!("'{prefix}' needs a K element")))?;
        let idx = k
            .index_of(name)
            .ok_or_else(|| err(e.line, format!("unknown K element '{name}'")))?;
        if out.insert(idx, e).is_some() {
            return Err(err(e.line, format!("duplicate '{prefix} {name}'")));
        }
    }
    Ok(out)
}

fn parse_finbyab(entries: &[Entry], k: FiniteGroupTable, last_line: usize) -> Result<FinByAbelianGroup, GroupError> {
    let rank_e = entries
        .iter()
        .find(|e| e.key == "rank")
        .ok_or_else(|| err(last_line, "missing 'rank'"))?;
    let n = parse_usize(rank_e, &rank_e.value)?;
    let basis = match entries.iter().find(|e| e.key == "basis") {
        Some(e) => {
            let b: Vec<String> = e.value.split_whitespace().map(str::to_string).collect();
            if b.len() != n {
                return Err(err(e.line, format!("{} basis names for rank {n}", b.len())));
            }
            Some(b)
        }
        None => None,
    };
    let given = per_element(entries, "matrix", &k)?;
    let mut action: Vec<Matrix> = vec![identity(n); k.order()];
    for (&idx, e) in &given {
        let rows: Vec<Vec<i64>> = e
            .value
            .split(';')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|x| {
                        x.parse::<i64>()
                            .map_err(|_| err(e.line, format!("bad matrix entry '{x}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(err(e.line, format!("matrix must be {n}x{n}")));
        }
        action[idx] = rows;
    }
    // unspecified elements: products of specified ones when possible
    fill_by_products(&k, &mut action, &given.keys().copied().collect::<Vec<_>>());
    let line = given.values().next().map_or(rank_e.line, |e| e.line);
    FinByAbelianGroup::new(k, n, action, basis).map_err(|e| err(line, e.to_string()))
}

/// Extends an action given on some elements to the subgroup they generate.
fn fill_by_products<T: Clone + PartialEq + Composable>(k: &FiniteGroupTable, action: &mut [T], given: &[usize]) {
    let mut known: Vec<bool> = (0..k.order()).map(|i| i == 0 || given.contains(&i)).collect();
    loop {
        let mut grew = false;
        for a in 0..k.order() {
            for b in 0..k.order() {
                let ab = k.mul(a, b);
                if known[a] && known[b] && !known[ab] {
                    action[ab] = action[a].compose(&action[b]);
                    known[ab] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return;
        }
    }
}

trait Composable {
    fn compose(&self, other: &Self) -> Self;
}

impl Composable for Matrix {
    fn compose(&self, other: &Self) -> Self {
        super::finbyab::mat_mul(self, other)
    }
}

impl Composable for Vec<usize> {
    fn compose(&self, other: &Self) -> Self {
        other.iter().map(|&v| self[v]).collect()
    }
}

impl Composable for bool {
    fn compose(&self, other: &Self) -> Self {
        self ^ other
    }
}

fn parse_raagext(entries: &[Entry], k: FiniteGroupTable, last_line: usize) -> Result<RaagExtGroup, GroupError> {
    let ve = entries
        .iter()
        .find(|e| e.key == "vertices")
        .ok_or_else(|| err(last_line, "missing 'vertices'"))?;
    let labels: Vec<String> = ve.value.split_whitespace().map(str::to_string).collect();
    let vertex = |e: &Entry, s: &str| {
        labels
            .iter()
            .position(|l| l == s.trim())
            .ok_or_else(|| err(e.line, format!("unknown vertex '{}'", s.trim())))
    };
    let mut edges = Vec::new();
    let mut edge_line = ve.line;
    for e in entries.iter().filter(|e| e.key == "edges") {
        edge_line = e.line;
        let mut rest = e.value.as_str().trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err(e.line, "edges must look like (a,b)"))?;
            let close = body.find(')').ok_or_else(|| err(e.line, "unclosed edge"))?;
            let (a, b) = body[..close]
                .split_once(',')
                .ok_or_else(|| err(e.line, "edge needs two vertices"))?;
            edges.push((vertex(e, a)?, vertex(e, b)?));
            rest = body[close + 1..].trim_start_matches([',', ' ']).trim();
        }
    }
    let l = FlagComplex::new(&labels, &edges).map_err(|e| err(edge_line, e.to_string()))?;
    let given = per_element(entries, "perm", &k)?;
    let n = labels.len();
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect(); k.order()];
    for (&idx, e) in &given {
        let mut p: Vec<usize> = (0..n).collect();
        let mut rest = e.value.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err(e.line, "cycles must look like (a b c)"))?;
            let close = body.find(')').ok_or_else(|| err(e.line, "unclosed cycle"))?;
            let cyc: Vec<usize> = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| vertex(e, s))
                .collect::<Result<_, _>>()?;
            for (i, &v) in cyc.iter().enumerate() {
                p[v] = cyc[(i + 1) % cyc.len()];
            }
            rest = body[close + 1..].trim();
        }
        perms[idx] = p;
    }
    fill_by_products(&k, &mut perms, &given.keys().copied().collect::<Vec<_>>());
    let line = given.values().next().map_or(ve.line, |e| e.line);
    RaagExtGroup::new(l, k, perms).map_err(|e| err(line, e.to_string()))
}

fn parse_thompson(entries: &[Entry], k: FiniteGroupTable) -> Result<ThompsonExtGroup, GroupError> {
    let given = per_element(entries, "flip", &k)?;
    let mut flip = vec![false; k.order()];
    for (&idx, e) in &given {
        flip[idx] = match e.value.as_str() {
            "0" => false,
            "1" => true,
            other => return Err(err(e.line, format!("flip must be 0 or 1, got '{other}'"))),
        };
    }
    fill_by_products(&k, &mut flip, &given.keys().copied().collect::<Vec<_>>());
    let line = given.values().next().map_or(1, |e| e.line);
    ThompsonExtGroup::new(k, flip).map_err(|e| err(line, e.to_string()))
}
