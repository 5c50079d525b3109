//! Text formats for groups.
//!
//! `cayley 1`: header, `order n`, optional `names t1 … tn`, then `n` rows of
//! `n` zero-based indices. `permgen 1`: header, `degree d`, then one
//! `gen i0 … i(d-1)` line per generator. `#` starts a comment in both.

use crate::catalog::permutation_group;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};

/// Largest permutation group closure [`parse_permgen`] will build.
pub const PERMGEN_CAP: usize = 65536;

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    key: &str,
    last_line: usize,
) -> Result<(usize, usize)> {
    let (ln, toks) = lines.next().ok_or_else(|| syntax(last_line, format!("missing `{key}` line")))?;
    if toks.len() != 2 || toks[0] != key {
        return Err(syntax(ln, format!("expected `{key} <n>`")));
    }
    Ok((ln, parse_num(ln, toks[1])?))
}

pub fn parse_cayley(text: &str) -> Result<Group> {
    parse_cayley_with(text, &Limits::default())
}

pub fn parse_cayley_with(text: &str, limits: &Limits) -> Result<Group> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text).peekable();
    let (ln, version) = expect_header(&mut lines, "cayley", last_line)?;
    if version != 1 {
        return Err(syntax(ln, format!("unsupported cayley version {version}")));
    }
    let (ln, n) = expect_header(&mut lines, "order", last_line)?;
    if n == 0 {
        return Err(syntax(ln, "order must be positive"));
    }
    limits.check_order(n as u128)?;
    let mut names = None;
    if let Some((ln, toks)) = lines.peek() {
        if toks[0] == "names" {
            if toks.len() != n + 1 {
                return Err(syntax(*ln, format!("expected {n} names, found {}", toks.len() - 1)));
            }
            names = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            lines.next();
        }
    }
    let mut rows = Vec::with_capacity(n);
    for (ln, toks) in lines {
        if rows.len() == n {
            return Err(syntax(ln, "more rows than the declared order"));
        }
        if toks.len() != n {
            return Err(syntax(ln, format!("expected {n} entries, found {}", toks.len())));
        }
        rows.push(toks.iter().map(|t| parse_num(ln, t)).collect::<Result<Vec<_>>>()?);
    }
    if rows.len() != n {
        return Err(syntax(last_line, format!("expected {n} rows, found {}", rows.len())));
    }
    Group::from_rows(&rows, names)
}

/// Cayley v1 text; whitespace inside element names is dropped.
pub fn serialize_cayley(g: &Group) -> String {
    let n = g.order();
    let mut out = format!("cayley 1\norder {n}\n");
    if let Some(names) = g.names() {
        let cleaned: Vec<String> =
            names.iter().map(|s| s.split_whitespace().collect::<String>().replace('#', "")).collect();
        out.push_str("names ");
        out.push_str(&cleaned.join(" "));
        out.push('\n');
    }
    for a in 0..n {
        let row: Vec<String> = g.row(a).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_permgen(text: &str) -> Result<Group> {
    parse_permgen_with(text, PERMGEN_CAP)
}

pub fn parse_permgen_with(text: &str, cap: usize) -> Result<Group> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (ln, version) = expect_header(&mut lines, "permgen", last_line)?;
    if version != 1 {
        return Err(syntax(ln, format!("unsupported permgen version {version}")));
    }
    let (ln, degree) = expect_header(&mut lines, "degree", last_line)?;
    if degree == 0 {
        return Err(syntax(ln, "degree must be positive"));
    }
    let mut gens = Vec::new();
    for (ln, toks) in lines {
        if toks[0] != "gen" {
            return Err(syntax(ln, format!("expected `gen`, found `{}`", toks[0])));
        }
        if toks.len() != degree + 1 {
            return Err(syntax(ln, format!("expected {degree} images, found {}", toks.len() - 1)));
        }
        gens.push(toks[1..].iter().map(|t| parse_num(ln, t)).collect::<Result<Vec<_>>>()?);
    }
    permutation_group(degree, &gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::resolve;

    #[test]
    fn cayley_c2() {
        let g = parse_cayley("cayley 1\norder 2\n0 1\n1 0").unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn cayley_comments_and_names() {
        let text = "# a group\ncayley 1 # v1\norder 2\nnames e s\n\n0 1\n1 0 # last\n";
        let g = parse_cayley(text).unwrap();
        assert_eq!(g.name(1), "s");
    }

    #[test]
    fn cayley_errors() {
        assert!(matches!(parse_cayley("cayley 1\norder 3\n0 1 2\n1 2 0"), Err(Error::Syntax { line: 4, .. })));
        assert!(matches!(parse_cayley("cayley 2\norder 1\n0"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_cayley("cayley 1\norder 2\n0 1\n1 x"), Err(Error::Syntax { line: 4, .. })));
        assert!(matches!(parse_cayley("cayley 1\norder 2\n0 1\n1 0\n0 1"), Err(Error::Syntax { line: 5, .. })));
        assert!(matches!(parse_cayley("cayley 1\norder 2\n0 1\n1 1"), Err(Error::NotLatinSquare { .. })));
    }

    #[test]
    fn s3_file_classes() {
        let text = serialize_cayley(&resolve("S3").unwrap());
        let g = parse_cayley(&text).unwrap();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn round_trip_keeps_table() {
        for name in ["S4", "Q16", "C7:Q8", "A5"] {
            let g = resolve(name).unwrap();
            let back = parse_cayley(&serialize_cayley(&g)).unwrap();
            assert_eq!(back.rows(), g.rows(), "{name}");
        }
    }

    #[test]
    fn permgen_examples() {
        let g = parse_permgen("permgen 1\ndegree 3\ngen 1 2 0\ngen 1 0 2\n").unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let g = parse_permgen("permgen 1\ndegree 4\ngen 1 2 3 0\n").unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian() && g.exponent() == 4);
        assert_eq!(parse_permgen("permgen 1\ndegree 3\ngen 0 0 1\n"), Err(Error::NotPermutation(0)));
        assert!(matches!(parse_permgen("permgen 1\ndegree 3\ngen 0 1\n"), Err(Error::Syntax { line: 3, .. })));
        let big = "permgen 1\ndegree 5\ngen 1 2 3 4 0\ngen 1 0 2 3 4\n";
        assert!(matches!(parse_permgen_with(big, 100), Err(Error::OrderCap { .. })));
    }
}
