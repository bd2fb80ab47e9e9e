//! The line-oriented algebra file format.
//!
//! ```text
//! # comment
//! kind: qmv
//! elements: a b c 0 d e 1
//! const 1: 1
//! const 0: 0
//! op plus:
//!   a a a a a b b 0      # one row per left argument, in element order
//!   ...
//! op neg: 1 e d 0 c b a
//! op pos: ...
//! op negpart: ...
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{FiniteAlgebra, Kind, Tables};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        column,
        message: message.into(),
    })
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, (b, c)) in s.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, b)),
            (true, Some((ci, bi))) => {
                out.push((offset + ci + 1, &s[bi..b]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((ci, bi)) = start {
        out.push((offset + ci + 1, &s[bi..]));
    }
    out
}

struct Pending {
    name: &'static str,
    header_line: usize,
    rows: Vec<usize>,
}

#[derive(Default)]
struct Parsed {
    kind: Option<Kind>,
    names: Option<Vec<String>>,
    one: Option<usize>,
    zero: Option<usize>,
    binary: Option<(&'static str, Vec<usize>)>,
    neg: Option<Vec<usize>>,
    pos: Option<Vec<usize>>,
    negpart: Option<Vec<usize>>,
}

const TABLES: [&str; 5] = ["plus", "arrow", "neg", "pos", "negpart"];

/// Parses an algebra file. Element order follows the `elements` line.
pub fn load_algebra(source: &str) -> Result<FiniteAlgebra, FormatError> {
    let mut p = Parsed::default();
    let mut pending: Option<Pending> = None;
    let mut last_line = 0;

    for (idx, raw) in source.lines().enumerate() {
        let ln = idx + 1;
        last_line = ln;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }

        if let Some(pend) = pending.as_mut() {
            let names = p.names.as_ref().expect("binary table needs elements");
            let n = names.len();
            let row = pend.rows.len() / n;
            let toks = tokens(content, 0);
            if toks.len() != n {
                return err(
                    ln,
                    1,
                    format!(
                        "row {} of table {} has {} entries, expected {n}",
                        names[row],
                        pend.name,
                        toks.len()
                    ),
                );
            }
            for (i, (col, t)) in toks.iter().enumerate() {
                match names.iter().position(|x| x == t) {
                    Some(e) => pend.rows.push(e),
                    None => {
                        return err(
                            ln,
                            *col,
                            format!(
                                "unknown element `{t}` in table {}, row {}, column {}",
                                pend.name, names[row], names[i]
                            ),
                        )
                    }
                }
            }
            if pend.rows.len() == n * n {
                let done = pending.take().unwrap();
                p.binary = Some((done.name, done.rows));
            }
            continue;
        }

        let Some((head, rest)) = content.split_once(':') else {
            return err(ln, 1, format!("expected a directive, found `{}`", content.trim()));
        };
        let rest_offset = head.chars().count() + 1;
        let head_toks = tokens(head, 0);
        let words: Vec<&str> = head_toks.iter().map(|t| t.1).collect();
        let col = head_toks.first().map_or(1, |t| t.0);
        let args = tokens(rest, rest_offset);

        match words.as_slice() {
            ["kind"] => {
                if p.kind.is_some() {
                    return err(ln, col, "duplicate kind line");
                }
                let [(c, k)] = args.as_slice() else {
                    return err(ln, col, "kind line takes one value");
                };
                p.kind = Some(k.parse().or_else(|e| err(ln, *c, format!("{e}")))?);
            }
            ["elements"] => {
                if p.names.is_some() {
                    return err(ln, col, "duplicate elements line");
                }
                if args.is_empty() {
                    return err(ln, col, "carrier is empty");
                }
                let mut names: Vec<String> = Vec::new();
                for (c, t) in &args {
                    if names.iter().any(|n| n == t) {
                        return err(ln, *c, format!("duplicate element name `{t}`"));
                    }
                    names.push(t.to_string());
                }
                p.names = Some(names);
            }
            ["const", which @ ("0" | "1")] => {
                let names = need_elements(&p, ln, col)?;
                let [(c, t)] = args.as_slice() else {
                    return err(ln, col, format!("const {which} takes one element"));
                };
                let e = lookup(names, t, ln, *c, &format!("const {which}"))?;
                let slot = if *which == "1" { &mut p.one } else { &mut p.zero };
                if slot.replace(e).is_some() {
                    return err(ln, col, format!("duplicate const {which}"));
                }
            }
            ["op", name] => {
                let Some(&name) = TABLES.iter().find(|t| *t == name) else {
                    return err(ln, col, format!("unknown table `{name}`"));
                };
                let names = need_elements(&p, ln, col)?;
                let n = names.len();
                if name == "plus" || name == "arrow" {
                    if p.binary.is_some() {
                        return err(ln, col, "duplicate binary table");
                    }
                    if !args.is_empty() {
                        return err(ln, args[0].0, "binary table rows start on the next line");
                    }
                    pending = Some(Pending {
                        name,
                        header_line: ln,
                        rows: Vec::with_capacity(n * n),
                    });
                } else {
                    if args.len() != n {
                        return err(
                            ln,
                            col,
                            format!("table {name} has {} entries, expected {n}", args.len()),
                        );
                    }
                    let mut v = Vec::with_capacity(n);
                    for (i, (c, t)) in args.iter().enumerate() {
                        v.push(lookup(names, t, ln, *c, &format!("table {name} at {}", names[i]))?);
                    }
                    let slot = match name {
                        "neg" => &mut p.neg,
                        "pos" => &mut p.pos,
                        _ => &mut p.negpart,
                    };
                    if slot.replace(v).is_some() {
                        return err(ln, col, format!("duplicate table {name}"));
                    }
                }
            }
            _ => return err(ln, col, format!("unknown directive `{}`", head.trim())),
        }
    }

    if let Some(pend) = pending {
        return err(
            pend.header_line,
            1,
            format!("table {} is incomplete", pend.name),
        );
    }
    finish(p, last_line + 1)
}

fn need_elements(p: &Parsed, ln: usize, col: usize) -> Result<&Vec<String>, FormatError> {
    match &p.names {
        Some(n) => Ok(n),
        None => err(ln, col, "`elements` must come before constants and tables"),
    }
}

fn lookup(names: &[String], t: &str, ln: usize, col: usize, what: &str) -> Result<usize, FormatError> {
    match names.iter().position(|n| n == t) {
        Some(i) => Ok(i),
        None => err(ln, col, format!("unknown element `{t}` in {what}")),
    }
}

fn finish(p: Parsed, end: usize) -> Result<FiniteAlgebra, FormatError> {
    let missing = |what: &str| err(end, 1, format!("missing {what}"));
    let Some(kind) = p.kind else { return missing("kind") };
    let Some(names) = p.names else { return missing("elements") };
    let Some(one) = p.one else { return missing("const 1") };
    let want = kind.binary_name();
    let binary = match p.binary {
        Some((name, rows)) if name == want => rows,
        Some((name, _)) => return err(end, 1, format!("table {name} not allowed for kind {kind}, expected {want}")),
        None => return missing(&format!("table {want}")),
    };
    let Some(neg) = p.neg else { return missing("table neg") };
    if kind.is_quasi() {
        if p.pos.is_none() {
            return missing("table pos");
        }
        if p.negpart.is_none() {
            return missing("table negpart");
        }
    } else if p.pos.is_some() || p.negpart.is_some() {
        let t = if p.pos.is_some() { "pos" } else { "negpart" };
        return err(end, 1, format!("table {t} not allowed for kind {kind}"));
    }
    if kind.is_implicative() {
        if p.zero.is_some() {
            return err(end, 1, format!("const 0 not allowed for kind {kind}"));
        }
    } else if p.zero.is_none() {
        return missing("const 0");
    }
    FiniteAlgebra::new(
        kind,
        names,
        Tables {
            binary,
            neg,
            pos: p.pos,
            negpart: p.negpart,
            one,
            zero: p.zero,
        },
    )
    .or_else(|e| err(end, 1, e.to_string()))
}

/// Renders an algebra in the file format; [`load_algebra`] reads it back.
pub fn write_algebra(alg: &FiniteAlgebra) -> String {
    let names = alg.names();
    let w = names.iter().map(|n| n.chars().count()).max().unwrap_or(1);
    let pad = |s: &str| format!("{s:<w$}");
    let row = |v: &mut dyn Iterator<Item = super::Elem>| {
        v.map(|e| pad(alg.name(e))).collect::<Vec<_>>().join(" ").trim_end().to_string()
    };
    let mut s = String::new();
    let _ = writeln!(s, "kind: {}", alg.kind());
    let _ = writeln!(s, "elements: {}", names.join(" "));
    let _ = writeln!(s, "const 1: {}", alg.name(alg.one_elem()));
    if let Some(z) = alg.zero_elem() {
        let _ = writeln!(s, "const 0: {}", alg.name(z));
    }
    let _ = writeln!(s, "op {}:", alg.kind().binary_name());
    for x in alg.elements() {
        let _ = writeln!(s, "  {}", row(&mut alg.elements().map(|y| alg.op(x, y))));
    }
    for t in ["neg", "pos", "negpart"] {
        if let Some(tab) = alg.unary_table(t) {
            let _ = writeln!(s, "op {t}: {}", row(&mut tab.iter().copied()));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = "\
kind: qw
elements: o l
const 1: l
op arrow:
  o l
  o o
op neg: o l
op pos: o l
op negpart: o o
";

    #[test]
    fn round_trip() {
        let a = load_algebra(TINY).unwrap();
        assert_eq!(load_algebra(&write_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn missing_pos() {
        let src = TINY.replace("op pos: o l\n", "");
        let e = load_algebra(&src).unwrap_err();
        assert_eq!(e.message, "missing table pos");
    }

    #[test]
    fn unknown_cell_is_located() {
        let src = TINY.replace("  o o\n", "  o z\n");
        let e = load_algebra(&src).unwrap_err();
        assert_eq!((e.line, e.column), (6, 5));
        assert!(e.message.contains("`z`") && e.message.contains("row l"), "{e}");
    }

    #[test]
    fn wrong_table_for_kind() {
        let src = TINY.replace("op arrow:", "op plus:");
        assert!(load_algebra(&src).unwrap_err().message.contains("plus"));
        let src = TINY.replace("kind: qw", "kind: w");
        assert!(load_algebra(&src).unwrap_err().message.contains("not allowed"));
    }

    #[test]
    fn duplicate_elements() {
        let e = load_algebra("kind: w\nelements: a b a\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 15));
    }
}
