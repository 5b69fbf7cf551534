//! The line-oriented code file format.
//!
//! ```text
//! # comment lines start with '#'
//! field 2 3 1,1,0,1
//! rows 2 4
//! 1 1 3 3
//! 0 5 1 0
//! ```
//!
//! The header names `p`, `e` and the modulus coefficients, constant term first
//! (`0,1` is the modulus `x` of a prime field). Entries are integer encodings in `[0, q)`.
//! Blank lines are ignored as well.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<u32> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

pub fn parse_field_header(line: &str, lineno: usize) -> Result<FieldSpec> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "field" {
        return Err(parse_err(lineno, "expected 'field <p> <e> <c0,c1,...,ce>'"));
    }
    let p = parse_num(toks[1], lineno, "characteristic")?;
    let e = parse_num(toks[2], lineno, "extension degree")?;
    let modulus = toks[3]
        .split(',')
        .map(|c| parse_num(c, lineno, "modulus coefficient"))
        .collect::<Result<Vec<_>>>()?;
    FieldSpec::new(p, e, Some(&modulus)).map_err(|err| parse_err(lineno, err.to_string()))
}

/// Parses a code file into its field and matrix. Errors carry 1-based line numbers.
pub fn parse_code_file(text: &str) -> Result<(FieldSpec, Matrix)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "missing field header"))?;
    let field = parse_field_header(header, ln)?;

    let (ln, dims) = lines
        .next()
        .ok_or_else(|| parse_err(ln + 1, "missing 'rows <k> <n>' line"))?;
    let toks: Vec<&str> = dims.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "rows" {
        return Err(parse_err(ln, "expected 'rows <k> <n>'"));
    }
    let k = parse_num(toks[1], ln, "row count")? as usize;
    let n = parse_num(toks[2], ln, "column count")? as usize;

    let mut values = Vec::with_capacity(k * n);
    let mut last = ln;
    for r in 0..k {
        let (ln, row) = lines
            .next()
            .ok_or_else(|| parse_err(last + 1, format!("expected {k} rows, found {r}")))?;
        last = ln;
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != n {
            return Err(parse_err(ln, format!("expected {n} entries, found {}", entries.len())));
        }
        for tok in entries {
            let v = parse_num(tok, ln, "entry")?;
            if v >= field.q() {
                return Err(parse_err(ln, format!("entry {v} is not below q = {}", field.q())));
            }
            values.push(v);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, format!("unexpected content after {k} rows")));
    }
    let matrix = Matrix::from_values(&field, k, n, &values)?;
    Ok((field, matrix))
}

pub fn format_field_header(field: &FieldSpec) -> String {
    let coeffs: Vec<String> = field.modulus().iter().map(u32::to_string).collect();
    format!("field {} {} {}", field.p(), field.e(), coeffs.join(","))
}

/// Canonical serialization: header, dims, one row per line, trailing newline.
pub fn format_code_file(matrix: &Matrix) -> String {
    let mut out = format_field_header(matrix.field());
    out.push('\n');
    out.push_str(&format!("rows {} {}\n", matrix.rows(), matrix.cols()));
    for row in matrix.row_iter() {
        let entries: Vec<String> = row.iter().map(|a| a.to_string()).collect();
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_code_file(path: &std::path::Path) -> Result<(FieldSpec, Matrix)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_code_file(&text)
}
