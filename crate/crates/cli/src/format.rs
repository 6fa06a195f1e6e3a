//! Plain-text formats for algebras (`mla 1`) and relative central
//! extensions (`rlce 1`).
//!
//! Both formats are line-oriented: `#` starts a comment, blank lines are
//! ignored, and every error is positioned by line and column. The emitters
//! produce a canonical form — single spaces, `\n` endings, no comments —
//! and parsing an emitted file reproduces the original tables exactly.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use mla_core::actions::MutualAction;
use mla_core::algebra::{ElemSet, FiniteMla, MlaHom};
use mla_core::extensions::RelativeExtension;

/// A positioned syntax or shape error in an input file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

/// One token with its 1-based source position.
#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

/// A nonempty logical line of tokens.
#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Tok<'a>>,
}

/// Strips comments and splits into token lines.
fn tokenize(src: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let number = i + 1;
        let body = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut col = 0;
        for piece in body.split_inclusive(char::is_whitespace) {
            let trimmed = piece.trim_end_matches(char::is_whitespace);
            if !trimmed.is_empty() {
                tokens.push(Tok {
                    text: trimmed,
                    line: number,
                    col: col + 1,
                });
            }
            col += piece.chars().count();
        }
        if !tokens.is_empty() {
            lines.push(Line { number, tokens });
        }
    }
    lines
}

/// Cursor over token lines.
struct Reader<'a> {
    lines: Vec<Line<'a>>,
    at: usize,
}

impl<'a> Reader<'a> {
    fn new(src: &'a str) -> Self {
        Reader {
            lines: tokenize(src),
            at: 0,
        }
    }

    /// Position just past the last consumed line, for end-of-file errors.
    fn here(&self) -> (usize, usize) {
        match self.lines.get(self.at) {
            Some(l) => (l.number, l.tokens[0].col),
            None => (
                self.lines.last().map(|l| l.number + 1).unwrap_or(1),
                1,
            ),
        }
    }

    fn next_line(&mut self, expected: &str) -> Result<Line<'a>, ParseError> {
        match self.lines.get(self.at) {
            Some(l) => {
                self.at += 1;
                Ok(l.clone())
            }
            None => {
                let (line, col) = self.here();
                err(line, col, format!("unexpected end of file, expected {expected}"))
            }
        }
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines.get(self.at).map(|l| l.tokens[0].text)
    }

    /// Consumes a line that must consist of exactly the given keyword.
    fn keyword(&mut self, word: &str) -> Result<Line<'a>, ParseError> {
        let l = self.next_line(&format!("`{word}`"))?;
        let head = l.tokens[0];
        if head.text != word {
            return err(
                head.line,
                head.col,
                format!("expected `{word}`, found `{}`", head.text),
            );
        }
        if l.tokens.len() > 1 {
            let t = l.tokens[1];
            return err(t.line, t.col, format!("unexpected token after `{word}`"));
        }
        Ok(l)
    }

    fn finish(&self) -> Result<(), ParseError> {
        if let Some(l) = self.lines.get(self.at) {
            let t = l.tokens[0];
            return err(t.line, t.col, format!("unexpected trailing content `{}`", t.text));
        }
        Ok(())
    }
}

fn parse_index(t: Tok<'_>, bound: usize, what: &str) -> Result<usize, ParseError> {
    let v: usize = match t.text.parse() {
        Ok(v) => v,
        Err(_) => return err(t.line, t.col, format!("{what} `{}` is not a number", t.text)),
    };
    if v >= bound {
        return err(
            t.line,
            t.col,
            format!("{what} {v} is out of range, must be below {bound}"),
        );
    }
    Ok(v)
}

/// Reads `rows` lines of exactly `width` indices below `bound`.
fn parse_block(
    r: &mut Reader<'_>,
    rows: usize,
    width: usize,
    bound: usize,
    what: &str,
) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::with_capacity(rows * width);
    for row in 0..rows {
        let l = r.next_line(&format!("{what} row {row}"))?;
        if l.tokens.len() != width {
            let t = *l.tokens.last().unwrap();
            return err(
                l.number,
                t.col,
                format!(
                    "{what} row {row} has {} entries, expected {width}",
                    l.tokens.len()
                ),
            );
        }
        for &t in &l.tokens {
            out.push(parse_index(t, bound, what)?);
        }
    }
    Ok(out)
}

fn expect_header(r: &mut Reader<'_>, format: &str) -> Result<(), ParseError> {
    let l = r.next_line(&format!("header `{format} 1`"))?;
    let head = l.tokens[0];
    if head.text != format {
        return err(
            head.line,
            head.col,
            format!("expected header `{format} 1`, found `{}`", head.text),
        );
    }
    match (l.tokens.get(1), l.tokens.len()) {
        (Some(v), 2) if v.text == "1" => Ok(()),
        (Some(v), 2) => err(v.line, v.col, format!("unsupported {format} version `{}`", v.text)),
        (Some(_), _) => {
            let t = l.tokens[2];
            err(t.line, t.col, "unexpected token after the version")
        }
        (None, _) => err(head.line, head.col, format!("header `{format}` is missing its version")),
    }
}

/// Parses an `mla 1` file into a verified-shape algebra. Group and star
/// laws are NOT checked here; only table shape, index ranges, and the
/// identity-at-0 convention are.
pub fn parse_mla(src: &str) -> Result<FiniteMla, ParseError> {
    let mut r = Reader::new(src);
    expect_header(&mut r, "mla")?;

    let l = r.next_line("`order <n>`")?;
    let head = l.tokens[0];
    if head.text != "order" {
        return err(head.line, head.col, format!("expected `order`, found `{}`", head.text));
    }
    let n = match l.tokens.get(1) {
        Some(t) if l.tokens.len() == 2 => {
            let v = parse_index(*t, usize::MAX, "order")?;
            if v == 0 {
                return err(t.line, t.col, "order must be at least 1");
            }
            v
        }
        Some(t) => return err(l.tokens[2].line, l.tokens[2].col, format!("unexpected token after order {}", t.text)),
        None => return err(head.line, head.col, "`order` is missing its value"),
    };

    let names = if r.peek_keyword() == Some("names") {
        let l = r.next_line("`names`")?;
        if l.tokens.len() != n + 1 {
            let t = *l.tokens.last().unwrap();
            return err(
                l.number,
                t.col,
                format!("`names` lists {} names, expected {n}", l.tokens.len() - 1),
            );
        }
        Some(l.tokens[1..].iter().map(|t| t.text.to_string()).collect::<Vec<_>>())
    } else {
        None
    };

    let group_at = r.keyword("group")?.number;
    let group = parse_block(&mut r, n, n, n, "group entry")?;
    r.keyword("star")?;
    let star = parse_block(&mut r, n, n, n, "star entry")?;
    r.finish()?;

    for j in 0..n {
        if group[j] != j || group[j * n] != j {
            return err(
                group_at,
                1,
                format!("identity is not element 0: row or column 0 moves {j}"),
            );
        }
    }

    FiniteMla::new(n, group, star, names)
        .map_err(|e| ParseError {
            line: group_at,
            col: 1,
            message: e.to_string(),
        })
}

/// Renders an algebra in canonical `mla 1` form.
pub fn emit_mla(a: &FiniteMla) -> String {
    let n = a.order();
    let mut out = String::from("mla 1\n");
    out.push_str(&format!("order {n}\n"));
    if let Some(ns) = a.names() {
        out.push_str("names");
        for name in ns {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
    }
    let blocks: [(&str, &dyn Fn(usize, usize) -> usize); 2] = [
        ("group", &|x, y| a.mul(x, y)),
        ("star", &|x, y| a.star(x, y)),
    ];
    for (word, cell) in blocks {
        out.push_str(word);
        out.push('\n');
        for x in 0..n {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                out.push_str(&cell(x, y).to_string());
            }
            out.push('\n');
        }
    }
    out
}

/// Parses an `rlce 1` file. The `L` and `G` lines name algebra files that
/// are fetched through `loader` (the CLI passes a filesystem loader rooted
/// at the extension file's directory; tests can inject anything). The
/// result has valid shape but is not verified — that is a separate command.
pub fn parse_rlce(
    src: &str,
    loader: &dyn Fn(&str) -> Result<String, String>,
) -> Result<RelativeExtension, ParseError> {
    let mut r = Reader::new(src);
    expect_header(&mut r, "rlce")?;

    let load_algebra = |r: &mut Reader<'_>, letter: &str| -> Result<Arc<FiniteMla>, ParseError> {
        let l = r.next_line(&format!("`{letter} <path>`"))?;
        let head = l.tokens[0];
        if head.text != letter {
            return err(head.line, head.col, format!("expected `{letter}`, found `{}`", head.text));
        }
        let path = match (l.tokens.get(1), l.tokens.len()) {
            (Some(t), 2) => t,
            (Some(_), _) => {
                let t = l.tokens[2];
                return err(t.line, t.col, "unexpected token after the path");
            }
            (None, _) => return err(head.line, head.col, format!("`{letter}` is missing its path")),
        };
        let text = loader(path.text).map_err(|m| ParseError {
            line: path.line,
            col: path.col,
            message: format!("cannot load `{}`: {m}", path.text),
        })?;
        let algebra = parse_mla(&text).map_err(|e| ParseError {
            line: path.line,
            col: path.col,
            message: format!("in referenced file `{}`: {e}", path.text),
        })?;
        Ok(Arc::new(algebra))
    };

    let lx = load_algebra(&mut r, "L")?;
    let gx = load_algebra(&mut r, "G")?;
    let (nl, ng) = (lx.order(), gx.order());

    let l = r.next_line("`H <indices>`")?;
    let head = l.tokens[0];
    if head.text != "H" {
        return err(head.line, head.col, format!("expected `H`, found `{}`", head.text));
    }
    let mut h = ElemSet::empty(ng);
    for &t in &l.tokens[1..] {
        h.insert(parse_index(t, ng, "H member")?);
    }

    let l = r.next_line("`tau <indices>`")?;
    let head = l.tokens[0];
    if head.text != "tau" {
        return err(head.line, head.col, format!("expected `tau`, found `{}`", head.text));
    }
    if l.tokens.len() != nl + 1 {
        let t = *l.tokens.last().unwrap();
        return err(
            l.number,
            t.col,
            format!("`tau` lists {} values, expected {nl}", l.tokens.len() - 1),
        );
    }
    let mut tau_map = Vec::with_capacity(nl);
    for &t in &l.tokens[1..] {
        tau_map.push(parse_index(t, ng, "tau value")?);
    }
    let tau_line = l.number;
    let tau = MlaHom::new(lx.clone(), gx.clone(), tau_map).map_err(|e| ParseError {
        line: tau_line,
        col: 1,
        message: e.to_string(),
    })?;

    let at = r.keyword("act_gl")?.number;
    let act_gl = parse_block(&mut r, ng, nl, nl, "act_gl entry")?;
    r.keyword("brk_gl")?;
    let brk_gl = parse_block(&mut r, ng, nl, nl, "brk_gl entry")?;
    r.keyword("act_lg")?;
    let act_lg = parse_block(&mut r, nl, ng, ng, "act_lg entry")?;
    r.keyword("brk_lg")?;
    let brk_lg = parse_block(&mut r, nl, ng, ng, "brk_lg entry")?;
    r.finish()?;

    let action = MutualAction::new(gx, lx, act_gl, brk_gl, act_lg, brk_lg).map_err(|e| {
        ParseError {
            line: at,
            col: 1,
            message: e.to_string(),
        }
    })?;
    RelativeExtension::new(tau, h, action).map_err(|e| ParseError {
        line: at,
        col: 1,
        message: e.to_string(),
    })
}

/// Renders an extension in canonical `rlce 1` form, naming the two algebra
/// files it depends on.
pub fn emit_rlce(e: &RelativeExtension, l_path: &str, g_path: &str) -> String {
    let (nl, ng) = (e.l().order(), e.g().order());
    let mut out = String::from("rlce 1\n");
    out.push_str(&format!("L {l_path}\n"));
    out.push_str(&format!("G {g_path}\n"));
    out.push_str("H");
    for m in e.h.iter() {
        out.push_str(&format!(" {m}"));
    }
    out.push('\n');
    out.push_str("tau");
    for l in 0..nl {
        out.push_str(&format!(" {}", e.tau.apply(l)));
    }
    out.push('\n');
    let blocks: [(&str, usize, usize, &dyn Fn(usize, usize) -> usize); 4] = [
        ("act_gl", ng, nl, &|g, l| e.action.act_gl(g, l)),
        ("brk_gl", ng, nl, &|g, l| e.action.brk_gl(g, l)),
        ("act_lg", nl, ng, &|l, g| e.action.act_lg(l, g)),
        ("brk_lg", nl, ng, &|l, g| e.action.brk_lg(l, g)),
    ];
    for (word, rows, width, cell) in blocks {
        out.push_str(word);
        out.push('\n');
        for x in 0..rows {
            for y in 0..width {
                if y > 0 {
                    out.push(' ');
                }
                out.push_str(&cell(x, y).to_string());
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mla_core::extensions::identity_extension;
    use mla_core::fixtures;

    #[test]
    fn mla_round_trip_is_byte_exact() {
        for a in [fixtures::v4a(), fixtures::d4b(), fixtures::s3c()] {
            let text = emit_mla(&a);
            let back = parse_mla(&text).unwrap();
            assert_eq!(emit_mla(&back), text);
            assert_eq!(back.group_table(), a.group_table());
            assert_eq!(back.star_table(), a.star_table());
            assert_eq!(back.names(), a.names());
        }
    }

    #[test]
    fn comments_and_blank_lines_are_transparent() {
        let canonical = emit_mla(&fixtures::v4a());
        let mut noisy = String::from("# leading comment\n\n");
        for line in canonical.lines() {
            noisy.push_str(line);
            noisy.push_str("   # trailing\n\n");
        }
        let a = parse_mla(&noisy).unwrap();
        assert_eq!(emit_mla(&a), canonical);
    }

    #[test]
    fn truncated_group_block_is_positioned() {
        let text = "mla 1\norder 3\ngroup\n0 1 2\n1 2 0\n";
        let e = parse_mla(text).unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.message.contains("unexpected end of file"), "{e}");
    }

    #[test]
    fn out_of_range_entry_is_positioned() {
        let text = "mla 1\norder 2\ngroup\n0 1\n1 9\nstar\n0 0\n0 0\n";
        let e = parse_mla(text).unwrap_err();
        assert_eq!((e.line, e.col), (5, 3));
        assert!(e.message.contains("out of range"), "{e}");
    }

    #[test]
    fn misplaced_identity_is_rejected() {
        // A valid Latin square whose identity is element 1, not 0.
        let text = "mla 1\norder 2\ngroup\n1 0\n0 1\nstar\n0 0\n0 0\n";
        let e = parse_mla(text).unwrap_err();
        assert!(e.message.contains("identity"), "{e}");
    }

    #[test]
    fn rlce_round_trip_preserves_all_tables() {
        let e = identity_extension(&fixtures::s3c());
        let text = emit_rlce(&e, "alg.mla", "alg.mla");
        let stored = emit_mla(e.l());
        let loader = move |p: &str| -> Result<String, String> {
            if p == "alg.mla" {
                Ok(stored.clone())
            } else {
                Err("unknown".into())
            }
        };
        let back = parse_rlce(&text, &loader).unwrap();
        assert_eq!(emit_rlce(&back, "alg.mla", "alg.mla"), text);
        back.verify().unwrap();
    }

    #[test]
    fn rlce_tau_of_wrong_length_is_positioned() {
        let e = identity_extension(&fixtures::s3c());
        let text = emit_rlce(&e, "alg.mla", "alg.mla");
        let broken = text.replace("tau 0 1 2 3 4 5", "tau 0 1 2 3 4");
        let stored = emit_mla(e.l());
        let loader = move |_: &str| -> Result<String, String> { Ok(stored.clone()) };
        let err = parse_rlce(&broken, &loader).unwrap_err();
        assert_eq!(err.line, 5);
        assert!(err.message.contains("expected 6"), "{err}");
    }

    #[test]
    fn rlce_h_member_out_of_range_is_positioned() {
        let e = identity_extension(&fixtures::s3c());
        let text = emit_rlce(&e, "alg.mla", "alg.mla");
        let broken = text.replace("H 0 1 2 3 4 5", "H 0 1 2 3 4 6");
        let stored = emit_mla(e.l());
        let loader = move |_: &str| -> Result<String, String> { Ok(stored.clone()) };
        let err = parse_rlce(&broken, &loader).unwrap_err();
        assert!(err.message.contains("out of range"), "{err}");
    }

    #[test]
    fn rlce_with_unresolvable_reference_is_an_error() {
        let e = identity_extension(&fixtures::s3c());
        let text = emit_rlce(&e, "missing.mla", "missing.mla");
        let loader = |_: &str| -> Result<String, String> { Err("no such file".into()) };
        let err = parse_rlce(&text, &loader).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("cannot load"), "{err}");
    }
}
