//! Plain-text matrix format used for counterexamples.
//!
//! A header line `rows cols field` (`field` is `real`, `complex` or `bool`)
//! is followed by the entries in row-major order, one row per line. Real
//! entries use Rust's shortest round-trip float syntax, complex entries are
//! written `a+bi` or `a-bi`, and relations are 0/1 grids. Parsing reads back
//! exactly the bits that were written.

use std::fmt::Write;

use hilbert_axioms::{BoolMatrix, GroundField, Matrix, Payload, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TextError {
    #[error("missing header `rows cols field`")]
    MissingHeader,
    #[error("bad header `{0}`")]
    BadHeader(String),
    #[error("expected field `{expected}`, found `{found}`")]
    WrongField { expected: String, found: String },
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("bad entry `{0}`")]
    BadEntry(String),
    #[error("non-finite entry `{0}`")]
    NonFinite(String),
}

/// Payloads that can be written in the text format.
pub trait PayloadText: Payload {
    fn to_text(&self) -> String;
}

impl<S: Scalar> PayloadText for Matrix<S> {
    fn to_text(&self) -> String {
        format_matrix(self)
    }
}

impl PayloadText for BoolMatrix {
    fn to_text(&self) -> String {
        format_relation(self)
    }
}

fn field_name(field: GroundField) -> &'static str {
    match field {
        GroundField::Real => "real",
        GroundField::Complex => "complex",
    }
}

fn write_grid(
    out: &mut String,
    rows: usize,
    cols: usize,
    field: &str,
    mut entry: impl FnMut(&mut String, usize, usize),
) {
    let _ = write!(out, "{rows} {cols} {field}");
    for i in 0..rows {
        out.push('\n');
        for j in 0..cols {
            if j > 0 {
                out.push(' ');
            }
            entry(out, i, j);
        }
    }
}

pub fn format_matrix<S: Scalar>(m: &Matrix<S>) -> String {
    let mut out = String::new();
    write_grid(
        &mut out,
        m.rows(),
        m.cols(),
        field_name(S::FIELD),
        |out, i, j| {
            let z = m[(i, j)];
            match S::FIELD {
                GroundField::Real => {
                    let _ = write!(out, "{:?}", z.re());
                }
                GroundField::Complex => {
                    let im = z.im();
                    let sign = if im.is_sign_negative() { '-' } else { '+' };
                    let _ = write!(out, "{:?}{sign}{:?}i", z.re(), im.abs());
                }
            }
        },
    );
    out
}

pub fn format_relation(r: &BoolMatrix) -> String {
    let mut out = String::new();
    write_grid(&mut out, r.rows(), r.cols(), "bool", |out, i, j| {
        out.push(if r.get(i, j) { '1' } else { '0' });
    });
    out
}

/// Splits a text block into its header and its entry tokens.
fn tokens<'a>(
    text: &'a str,
    expected_field: &str,
) -> Result<(usize, usize, Vec<&'a str>), TextError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(TextError::MissingHeader)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols, field] = parts[..] else {
        return Err(TextError::BadHeader(header.to_owned()));
    };
    let parse_dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| TextError::BadHeader(header.to_owned()))
    };
    let (rows, cols) = (parse_dim(rows)?, parse_dim(cols)?);
    if field != expected_field {
        return Err(TextError::WrongField {
            expected: expected_field.to_owned(),
            found: field.to_owned(),
        });
    }
    let entries: Vec<&str> = lines.flat_map(str::split_whitespace).collect();
    if entries.len() != rows * cols {
        return Err(TextError::EntryCount {
            expected: rows * cols,
            found: entries.len(),
        });
    }
    Ok((rows, cols, entries))
}

fn parse_real(token: &str) -> Result<f64, TextError> {
    let x: f64 = token
        .parse()
        .map_err(|_| TextError::BadEntry(token.to_owned()))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(TextError::NonFinite(token.to_owned()))
    }
}

/// `a+bi` or `a-bi`; the split is the last sign not part of an exponent.
fn parse_complex(token: &str) -> Result<(f64, f64), TextError> {
    let bad = || TextError::BadEntry(token.to_owned());
    let body = token.strip_suffix('i').ok_or_else(bad)?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let re = parse_real(&body[..split])?;
    let im = parse_real(&body[split + 1..])?;
    Ok((re, if bytes[split] == b'-' { -im } else { im }))
}

pub fn parse_matrix<S: Scalar>(text: &str) -> Result<Matrix<S>, TextError> {
    let (rows, cols, entries) = tokens(text, field_name(S::FIELD))?;
    let data = entries
        .into_iter()
        .map(|token| {
            let (re, im) = match S::FIELD {
                GroundField::Real => (parse_real(token)?, 0.0),
                GroundField::Complex => parse_complex(token)?,
            };
            S::from_parts(re, im).ok_or_else(|| TextError::BadEntry(token.to_owned()))
        })
        .collect::<Result<Vec<S>, TextError>>()?;
    Ok(Matrix::from_row_major(rows, cols, data))
}

pub fn parse_relation(text: &str) -> Result<BoolMatrix, TextError> {
    let (rows, cols, entries) = tokens(text, "bool")?;
    let data = entries
        .into_iter()
        .map(|token| match token {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(TextError::BadEntry(token.to_owned())),
        })
        .collect::<Result<Vec<bool>, TextError>>()?;
    Ok(BoolMatrix::from_row_major(rows, cols, data))
}
