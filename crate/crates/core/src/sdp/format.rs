//! Gram matrix text format: header `p gram <n>`, then n rows of n floats.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::gram::GramMatrix;

pub fn write_gram(m: &GramMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "p gram {}", m.n()).unwrap();
    for i in 0..m.n() {
        let row: Vec<String> = (0..m.n()).map(|j| format!("{:?}", m.get(i, j))).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_gram(text: &str) -> Result<GramMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c");
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "p" || tokens[1] != "gram" {
        return Err(Error::parse(line_no, "expected `p gram <n>` header"));
    }
    let n: usize = tokens[2]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad size"))?;
    let mut data = Vec::with_capacity(n * n);
    for (line_no, line) in lines {
        for token in line.split_whitespace() {
            let x: f64 = token
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad float `{token}`")))?;
            data.push(x);
        }
    }
    if data.len() != n * n {
        return Err(Error::parse(
            1,
            format!("expected {} entries, found {}", n * n, data.len()),
        ));
    }
    GramMatrix::from_data(n, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut m = GramMatrix::identity(3);
        m.set_sym(0, 1, -0.5);
        m.set_sym(1, 2, 0.25);
        let text = write_gram(&m);
        assert!(text.starts_with("p gram 3\n"));
        let back = parse_gram(&text).unwrap();
        assert_eq!(back, m);
    }
}
