//! Matrix text format: header `p matrix <rows> <cols> <field>` with field in
//! {`gf:<p>`, `rat`}, then one line of scalar tokens per row.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{ExactMatrix, Field};

pub fn write_matrix(m: &ExactMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "p matrix {} {} {}", m.rows(), m.cols(), m.field()).unwrap();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c");
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 5 || tokens[0] != "p" || tokens[1] != "matrix" {
        return Err(Error::parse(
            line_no,
            "expected `p matrix <rows> <cols> <field>` header",
        ));
    }
    let rows: usize = tokens[2]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad row count"))?;
    let cols: usize = tokens[3]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad column count"))?;
    let field =
        Field::from_str(tokens[4]).map_err(|e| Error::parse(line_no, e.to_string()))?;
    let mut m = ExactMatrix::zeros(field, rows, cols);
    let mut filled = 0usize;
    for (row_line, line) in lines {
        let row = filled;
        if row >= rows {
            return Err(Error::parse(row_line, "more rows than declared"));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(Error::parse(
                row_line,
                format!("expected {cols} entries, found {}", tokens.len()),
            ));
        }
        for (j, tok) in tokens.iter().enumerate() {
            let scalar = field
                .parse_scalar(tok)
                .map_err(|e| Error::parse(row_line, e.to_string()))?;
            m.set(row, j, scalar)?;
        }
        filled += 1;
    }
    if filled != rows {
        return Err(Error::parse(
            line_no,
            format!("header declares {rows} rows, found {filled}"),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_over_gf5_and_rationals() {
        let m = ExactMatrix::from_integers(Field::Prime(5), 2, 3, &[1, 2, 3, 4, 0, 1]);
        let text = write_matrix(&m);
        assert!(text.starts_with("p matrix 2 3 gf:5\n"));
        assert_eq!(parse_matrix(&text).unwrap(), m);

        let q = ExactMatrix::from_integers(Field::Rational, 2, 2, &[1, -7, 0, 3]);
        assert_eq!(parse_matrix(&write_matrix(&q)).unwrap(), q);
    }

    #[test]
    fn malformed_matrices() {
        assert!(parse_matrix("p matrix 1 2 gf:7\n1\n").is_err());
        assert!(parse_matrix("p matrix 2 1 rat\n1\n").is_err());
        assert!(parse_matrix("p matrix 1 1 gf:9\n1\n").is_err());
    }
}
