//! Matrix file formats.
//!
//! Text form: a header line `rows cols` (both positive), then `rows` lines of
//! `cols` whitespace-separated scalars. Lines end in `\n`; the final newline
//! is optional. JSON form: `{"rows":n,"cols":m,"entries":[[…],…]}` with
//! entries as scalar strings (plain JSON integers are accepted on input).

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_scalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_dim(token: &str, what: &str) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("header {what} {token:?} is not a positive integer")));
    }
    match token.parse::<usize>() {
        Ok(0) | Err(_) => Err(Error::Parse(format!(
            "header {what} {token:?} is not a positive integer"
        ))),
        Ok(v) => Ok(v),
    }
}

pub fn parse_matrix_text(text: &str) -> Result<Matrix> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let dims: Vec<&str> = header.split_ascii_whitespace().collect();
    let [rows, cols] = dims.as_slice() else {
        return Err(Error::Parse(format!("line 1: expected \"rows cols\", got {header:?}")));
    };
    let (rows, cols) = (parse_dim(rows, "rows")?, parse_dim(cols, "cols")?);
    let total = rows
        .checked_mul(cols)
        .filter(|&t| t <= body.len())
        .ok_or_else(|| Error::Parse(format!("{rows}x{cols} does not fit in the input")))?;

    let mut entries = Vec::with_capacity(total);
    let mut seen_rows = 0;
    for (k, line) in lines.enumerate() {
        let lineno = k + 2;
        if seen_rows == rows {
            return Err(Error::Parse(format!("line {lineno}: more than {rows} rows")));
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != cols {
            return Err(Error::Parse(format!(
                "line {lineno}: expected {cols} entries, found {}",
                tokens.len()
            )));
        }
        for token in tokens {
            entries.push(
                parse_scalar(token).map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?,
            );
        }
        seen_rows += 1;
    }
    if seen_rows != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {seen_rows}")));
    }
    Matrix::new(rows, cols, entries)
}

pub fn emit_matrix_text(a: &Matrix) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for row in a.to_rows() {
        let line: Vec<String> = row.iter().map(Scalar::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// JSON shape of a matrix, with scalars as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&Matrix> for MatrixJson {
    fn from(a: &Matrix) -> Self {
        MatrixJson {
            rows: a.rows(),
            cols: a.cols(),
            entries: a
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }
}

pub fn parse_matrix_json(text: &str) -> Result<Matrix> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("matrix JSON must be an object".into()))?;
    let dim = |key: &str| -> Result<usize> {
        obj.get(key)
            .and_then(Value::as_u64)
            .filter(|&v| v > 0)
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a positive integer")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let body = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("\"entries\" must be an array of rows".into()))?;
    if body.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", body.len())));
    }
    let mut entries = Vec::new();
    for (i, row) in body.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == cols)
            .ok_or_else(|| Error::Parse(format!("row {} must hold {cols} entries", i + 1)))?;
        for cell in row {
            let scalar = match cell {
                Value::String(s) => parse_scalar(s)?,
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string())?,
                other => {
                    return Err(Error::Parse(format!(
                        "row {}: entry {other} is not an integer or scalar string",
                        i + 1
                    )))
                }
            };
            entries.push(scalar);
        }
    }
    Matrix::new(rows, cols, entries)
}

pub fn emit_matrix_json(a: &Matrix) -> String {
    serde_json::to_string(&MatrixJson::from(a)).expect("matrix JSON serializes")
}

/// Parses either form, choosing JSON when the first non-blank byte is `{`.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    if text.trim_start().starts_with('{') {
        parse_matrix_json(text)
    } else {
        parse_matrix_text(text)
    }
}

pub fn emit_matrix(a: &Matrix, format: Format) -> String {
    match format {
        Format::Text => emit_matrix_text(a),
        Format::Json => {
            let mut s = emit_matrix_json(a);
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_round_trip_example() {
        let text = "2 3\n1 -2 3/4\n0 5 -7/2\n";
        let a = parse_matrix_text(text).unwrap();
        assert_eq!(a.at(1, 3), &Scalar::from_ratio(3, 4).unwrap());
        assert_eq!(emit_matrix_text(&a), text);
        assert_eq!(parse_matrix_text("1 1\n6/4").unwrap().at(1, 1).to_string(), "3/2");
    }

    #[test]
    fn text_rejects_bad_input() {
        for bad in [
            "",
            "2\n1 2\n",
            "0 2\n\n",
            "2 2\n1 2\n3\n",
            "2 2\n1 2\n3 4\n5 6\n",
            "2 2\n1 2\n",
            "1 1\n1/0\n",
            "1 1\nx\n",
            "1 1\n1\n\n",
            "-1 1\n1\n",
            "99999999999 99999999999\n1\n",
        ] {
            assert!(matches!(parse_matrix_text(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn json_forms() {
        let a = parse_matrix_json(r#"{"rows":2,"cols":2,"entries":[["1","-1/2"],[3,4]]}"#).unwrap();
        assert_eq!(a.at(1, 2), &Scalar::from_ratio(-1, 2).unwrap());
        assert_eq!(emit_matrix_json(&a), r#"{"rows":2,"cols":2,"entries":[["1","-1/2"],["3","4"]]}"#);
        assert_eq!(parse_matrix(&emit_matrix(&a, Format::Json)).unwrap(), a);
        for bad in [
            "[]",
            r#"{"rows":1,"cols":1}"#,
            r#"{"rows":1,"cols":1,"entries":[[1.5]]}"#,
            r#"{"rows":1,"cols":2,"entries":[[1]]}"#,
            r#"{"rows":0,"cols":0,"entries":[]}"#,
            r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#,
        ] {
            assert!(parse_matrix_json(bad).is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn emit_parse_round_trip(
            (r, c, cells) in (1usize..6, 1usize..6).prop_flat_map(|(r, c)|
                (Just(r), Just(c), proptest::collection::vec((-50i64..50, 1i64..9), r * c)))
        ) {
            let a = Matrix::new(r, c, cells.into_iter().map(|(p, q)| Scalar::from_ratio(p, q).unwrap()).collect()).unwrap();
            prop_assert_eq!(parse_matrix(&emit_matrix(&a, Format::Text)).unwrap(), a.clone());
            prop_assert_eq!(parse_matrix(&emit_matrix(&a, Format::Json)).unwrap(), a);
        }

        #[test]
        fn text_parser_never_panics(s in "\\PC{0,64}") {
            let _ = parse_matrix(&s);
        }
    }
}
