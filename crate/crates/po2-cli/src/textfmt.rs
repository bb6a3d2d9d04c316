//! The element file format.
//!
//! One directive per line, LF terminated:
//!
//! ```text
//! PO2 v1
//! orientation = preserve
//! bound = 3
//! row_shifts = 0,0
//! col_shifts = 1,1
//! map:
//! 1 2 -> 1 1
//! 2 2 -> 2 1
//! end
//! ```
//!
//! Shift lines carry exactly `bound - 1` comma-separated entries and read
//! `row_shifts =` when the bound is 1. Map lines are sorted strictly by
//! key, lexicographically; window-square points absent from the map are
//! domain holes. The parser rejects duplicate or unsorted keys, malformed
//! numbers, and coordinates below 1; writing always emits the normalized
//! representation.

use std::collections::BTreeMap;
use std::fmt;

use po2_core::{CanonicalElement, Orientation, Point, RawElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

impl std::error::Error for ParseError {}

/// Serializes the normalized form of an element.
pub fn format(a: &CanonicalElement) -> String {
    let a = a.normalize();
    let mut out = String::from("PO2 v1\n");
    out.push_str(&format!("orientation = {}\n", a.orientation()));
    out.push_str(&format!("bound = {}\n", a.bound()));
    push_shift_line(&mut out, "row_shifts", a.row_shifts());
    push_shift_line(&mut out, "col_shifts", a.col_shifts());
    out.push_str("map:\n");
    for (p, q) in a.window() {
        out.push_str(&format!("{} {} -> {} {}\n", p.x(), p.y(), q.x(), q.y()));
    }
    out.push_str("end\n");
    out
}

fn push_shift_line(out: &mut String, key: &str, shifts: &[u32]) {
    if shifts.is_empty() {
        out.push_str(&format!("{key} =\n"));
    } else {
        let items: Vec<String> = shifts.iter().map(u32::to_string).collect();
        out.push_str(&format!("{key} = {}\n", items.join(",")));
    }
}

/// Parses the exact grammar above into an unvalidated element.
pub fn parse(text: &str) -> Result<RawElement, ParseError> {
    let total_lines = text.split('\n').count();
    if !text.ends_with('\n') {
        return Err(ParseError {
            line: total_lines,
            reason: "every line must end with a line feed".into(),
        });
    }
    let lines: Vec<&str> = {
        let mut v: Vec<&str> = text.split('\n').collect();
        v.pop();
        v
    };
    let fail = |line: usize, reason: &str| ParseError { line, reason: reason.into() };
    let get = |idx: usize| -> Result<&str, ParseError> {
        lines
            .get(idx)
            .copied()
            .ok_or_else(|| fail(idx + 1, "unexpected end of file"))
    };

    if get(0)? != "PO2 v1" {
        return Err(fail(1, "expected header \"PO2 v1\""));
    }

    let flipped = match get(1)?.strip_prefix("orientation = ") {
        Some("preserve") => false,
        Some("flip") => true,
        _ => return Err(fail(2, "expected \"orientation = preserve\" or \"orientation = flip\"")),
    };

    let bound = match get(2)?.strip_prefix("bound = ").and_then(parse_number) {
        Some(b) if b >= 1 => b,
        _ => return Err(fail(3, "expected \"bound = B\" with a positive integer B")),
    };

    let expected = (bound - 1) as usize;
    let row_shifts = parse_shift_line(get(3)?, "row_shifts", expected).map_err(|r| fail(4, &r))?;
    let col_shifts = parse_shift_line(get(4)?, "col_shifts", expected).map_err(|r| fail(5, &r))?;

    if get(5)? != "map:" {
        return Err(fail(6, "expected \"map:\""));
    }

    let mut window = BTreeMap::new();
    let mut idx = 6;
    let mut last_key: Option<Point> = None;
    loop {
        let line = get(idx)?;
        if line == "end" {
            break;
        }
        let (key, value) = parse_map_line(line).map_err(|r| fail(idx + 1, &r))?;
        if last_key.is_some_and(|prev| key <= prev) {
            return Err(fail(
                idx + 1,
                "map lines must be strictly sorted by key with no duplicates",
            ));
        }
        last_key = Some(key);
        window.insert(key, value);
        idx += 1;
    }
    if idx + 1 != lines.len() {
        return Err(fail(idx + 2, "content after \"end\""));
    }

    Ok(RawElement {
        bound,
        row_shifts,
        col_shifts,
        window,
        flipped,
    })
}

/// Plain decimal, digits only.
fn parse_number(token: &str) -> Option<u32> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn parse_shift_line(line: &str, key: &str, expected: usize) -> Result<Vec<u32>, String> {
    let rest = line
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(" ="))
        .ok_or_else(|| format!("expected \"{key} = ...\""))?;
    let values: Vec<u32> = if rest.is_empty() {
        Vec::new()
    } else {
        let items = rest
            .strip_prefix(' ')
            .ok_or_else(|| format!("expected a single space after \"{key} =\""))?;
        items
            .split(',')
            .map(|tok| parse_number(tok).ok_or_else(|| format!("bad shift entry {tok:?}")))
            .collect::<Result<_, _>>()?
    };
    if values.len() != expected {
        return Err(format!(
            "expected {expected} shift entries, found {}",
            values.len()
        ));
    }
    Ok(values)
}

fn parse_map_line(line: &str) -> Result<(Point, Point), String> {
    let tokens: Vec<&str> = line.split(' ').collect();
    if tokens.len() != 5 || tokens[2] != "->" {
        return Err("expected \"i j -> p q\"".into());
    }
    let coord = |tok: &str| -> Result<u32, String> {
        match parse_number(tok) {
            Some(v) if v >= 1 => Ok(v),
            _ => Err(format!("bad coordinate {tok:?}; coordinates start at 1")),
        }
    };
    Ok((
        Point::new(coord(tokens[0])?, coord(tokens[1])?),
        Point::new(coord(tokens[3])?, coord(tokens[4])?),
    ))
}

/// The point syntax used by CLI output.
pub fn format_point(p: Point) -> String {
    format!("({},{})", p.x(), p.y())
}

/// One-line classification record, `key=value` separated by spaces.
pub fn format_report(report: &po2_core::GreenReport) -> String {
    let orientation = match report.orientation {
        Orientation::Preserve => "preserve",
        Orientation::Flip => "flip",
    };
    format!(
        "orientation={} n_alpha={} unit={} idempotent={} h_class_size={} d_class_size={}",
        orientation,
        report.n_alpha,
        report.is_unit,
        report.is_idempotent,
        report.h_class_size,
        report.d_class_size
    )
}
