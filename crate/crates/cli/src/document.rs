//! The line-oriented configuration document.
//!
//! ```text
//! name conic
//! dimension 1
//! point 0
//! point 1
//! point 2
//! heights 0 1/2 0
//! ```
//!
//! Every line is a keyword, one space, then space-separated values; the
//! file ends with a newline and `heights` is optional. Only the canonical
//! spelling of each number is accepted, so parsing and writing round-trip
//! byte for byte.

use std::fmt;

use toric_stability::exact::rational::{format_rational, parse_rational, Rational};
use toric_stability::exact::PointConfiguration;

#[derive(Clone, Debug, PartialEq)]
pub struct ConfigDocument {
    pub name: String,
    pub dimension: usize,
    pub points: Vec<Vec<i64>>,
    pub heights: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// Splits `keyword value value ...`, returning values with their
    /// 1-based columns.
    fn fields(&self, keyword: &str) -> Result<Vec<(usize, &'a str)>, ParseError> {
        let Some(rest) = self.text.strip_prefix(keyword) else {
            let found = self.text.split(' ').next().unwrap_or("");
            return Err(self.err(1, format!("expected `{keyword}`, found `{found}`")));
        };
        let Some(rest) = rest.strip_prefix(' ') else {
            return Err(self.err(
                keyword.len() + 1,
                format!("expected a single space after `{keyword}`"),
            ));
        };
        let mut out = Vec::new();
        let mut column = keyword.len() + 2;
        for token in rest.split(' ') {
            if token.is_empty() {
                return Err(self.err(
                    column,
                    "empty field (values are separated by single spaces)",
                ));
            }
            out.push((column, token));
            column += token.chars().count() + 1;
        }
        Ok(out)
    }
}

fn parse_int(line: &Line<'_>, column: usize, token: &str) -> Result<i64, ParseError> {
    let value: i64 = token
        .parse()
        .map_err(|_| line.err(column, format!("`{token}` is not a 64-bit integer")))?;
    if value.to_string() != token {
        return Err(line.err(
            column,
            format!("`{token}` is not written canonically (expected `{value}`)"),
        ));
    }
    Ok(value)
}

fn parse_rat(line: &Line<'_>, column: usize, token: &str) -> Result<Rational, ParseError> {
    let value = parse_rational(token)
        .ok_or_else(|| line.err(column, format!("`{token}` is not a rational `p` or `p/q`")))?;
    let canonical = format_rational(&value);
    if canonical != token {
        return Err(line.err(
            column,
            format!("`{token}` is not written canonically (expected `{canonical}`)"),
        ));
    }
    Ok(value)
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let body = match text.strip_suffix('\n') {
            Some(b) => b,
            None => {
                let line = text.lines().count().max(1);
                let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
                return Err(ParseError {
                    line,
                    column,
                    message: "missing final newline".into(),
                });
            }
        };
        let lines: Vec<Line<'_>> = body
            .split('\n')
            .enumerate()
            .map(|(i, text)| Line {
                number: i + 1,
                text,
            })
            .collect();
        for l in &lines {
            if let Some((i, c)) = l.text.chars().enumerate().find(|(_, c)| c.is_control()) {
                return Err(l.err(i + 1, format!("unexpected control character {c:?}")));
            }
            if l.text.ends_with(' ') {
                return Err(l.err(l.text.chars().count(), "trailing space"));
            }
        }

        let mut it = lines.iter().peekable();
        let end = |it: &mut std::iter::Peekable<std::slice::Iter<'_, Line<'_>>>, what: &str| {
            it.peek().map(|_| ()).ok_or_else(|| ParseError {
                line: lines.len() + 1,
                column: 1,
                message: format!("unexpected end of document, expected {what}"),
            })
        };

        end(&mut it, "`name`")?;
        let l = it.next().unwrap();
        let name = l
            .text
            .strip_prefix("name ")
            .ok_or_else(|| l.err(1, "expected `name <name>`"))?;
        if name.is_empty() || name.starts_with(' ') {
            return Err(l.err(6, "empty name"));
        }

        end(&mut it, "`dimension`")?;
        let l = it.next().unwrap();
        let f = l.fields("dimension")?;
        if f.len() != 1 {
            return Err(l.err(f[1].0, "expected exactly one value"));
        }
        let dimension = parse_int(l, f[0].0, f[0].1)?;
        if dimension < 1 {
            return Err(l.err(f[0].0, "dimension must be positive"));
        }
        let dimension = dimension as usize;

        let mut points = Vec::new();
        while let Some(l) = it.next_if(|l| l.text.starts_with("point")) {
            let f = l.fields("point")?;
            if f.len() != dimension {
                let column = f.get(dimension).map_or(l.text.chars().count() + 1, |x| x.0);
                return Err(l.err(
                    column,
                    format!("expected {dimension} coordinates, found {}", f.len()),
                ));
            }
            points.push(
                f.iter()
                    .map(|&(c, t)| parse_int(l, c, t))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if points.is_empty() {
            end(&mut it, "`point`")?;
            return Err(it
                .next()
                .unwrap()
                .err(1, "expected at least one `point` line"));
        }

        let mut heights = None;
        if let Some(l) = it.next() {
            let f = l.fields("heights")?;
            if f.len() != points.len() {
                let column = f
                    .get(points.len())
                    .map_or(l.text.chars().count() + 1, |x| x.0);
                return Err(l.err(
                    column,
                    format!("expected {} heights, found {}", points.len(), f.len()),
                ));
            }
            heights = Some(
                f.iter()
                    .map(|&(c, t)| parse_rat(l, c, t))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if let Some(l) = it.next() {
            return Err(l.err(1, "unexpected line after `heights`"));
        }
        Ok(ConfigDocument {
            name: name.to_string(),
            dimension,
            points,
            heights,
        })
    }

    pub fn write(&self) -> String {
        let mut out = format!("name {}\ndimension {}\n", self.name, self.dimension);
        for p in &self.points {
            let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
            out.push_str(&format!("point {}\n", coords.join(" ")));
        }
        if let Some(h) = &self.heights {
            let hs: Vec<String> = h.iter().map(format_rational).collect();
            out.push_str(&format!("heights {}\n", hs.join(" ")));
        }
        out
    }

    pub fn configuration(&self) -> toric_stability::Result<PointConfiguration> {
        PointConfiguration::new(self.dimension, self.points.clone())
    }
}
