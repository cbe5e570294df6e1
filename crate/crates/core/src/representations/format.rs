//! Representation file format: header `p rep <n> <t> <field>` with field in
//! {`gf:<p>`, `rat`, `real`}, then one line of t scalar tokens per vertex.
//! Subspace representations use `p subrep <n> <t> <k>` with n*k rows of t
//! floats, vertex-major.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{ExactVector, Field, FieldScalar};

use super::exact::ExactOrthogonalRepresentation;
use super::real::RealOrthogonalRepresentation;
use super::subspace::SubspaceRepresentation;

/// Either flavor of vector representation, as read from a file.
#[derive(Clone, Debug)]
pub enum ParsedRepresentation {
    Exact(ExactOrthogonalRepresentation),
    Real(RealOrthogonalRepresentation),
}

pub fn write_exact(rep: &ExactOrthogonalRepresentation) -> String {
    let mut out = String::new();
    writeln!(out, "p rep {} {} {}", rep.n(), rep.dim(), rep.field()).unwrap();
    for v in 0..rep.n() {
        let tokens: Vec<String> = (0..rep.dim())
            .map(|i| rep.vector(v).get(i).to_string())
            .collect();
        writeln!(out, "{}", tokens.join(" ")).unwrap();
    }
    out
}

pub fn write_real(rep: &RealOrthogonalRepresentation) -> String {
    let mut out = String::new();
    writeln!(out, "p rep {} {} real", rep.n(), rep.dim()).unwrap();
    for v in 0..rep.n() {
        let tokens: Vec<String> = rep.vector(v).iter().map(|x| format!("{x:?}")).collect();
        writeln!(out, "{}", tokens.join(" ")).unwrap();
    }
    out
}

pub fn parse_representation(text: &str) -> Result<ParsedRepresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c");
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 5 || tokens[0] != "p" || tokens[1] != "rep" {
        return Err(Error::parse(
            line_no,
            "expected `p rep <n> <t> <field>` header",
        ));
    }
    let n: usize = tokens[2]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad vertex count"))?;
    let t: usize = tokens[3]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad dimension"))?;
    let field_token = tokens[4];

    let mut rows: Vec<(usize, Vec<&str>)> = Vec::with_capacity(n);
    for (line_no, line) in lines {
        rows.push((line_no, line.split_whitespace().collect()));
    }
    if rows.len() != n {
        return Err(Error::parse(
            line_no,
            format!("expected {n} vector lines, found {}", rows.len()),
        ));
    }
    for (row_line, row) in &rows {
        if row.len() != t {
            return Err(Error::parse(
                *row_line,
                format!("expected {t} scalars, found {}", row.len()),
            ));
        }
    }

    if field_token == "real" {
        let mut vectors = Vec::with_capacity(n);
        for (row_line, row) in rows {
            let coords: Result<Vec<f64>> = row
                .iter()
                .map(|tok| {
                    tok.parse::<f64>()
                        .map_err(|_| Error::parse(row_line, format!("bad float `{tok}`")))
                })
                .collect();
            vectors.push(coords?);
        }
        let rep = RealOrthogonalRepresentation::with_default_tolerances(vectors)?;
        return Ok(ParsedRepresentation::Real(rep));
    }

    let field = Field::from_str(field_token)
        .map_err(|e| Error::parse(line_no, e.to_string()))?;
    let mut vectors = Vec::with_capacity(n);
    for (row_line, row) in rows {
        let scalars: Result<Vec<FieldScalar>> = row
            .iter()
            .map(|tok| {
                field
                    .parse_scalar(tok)
                    .map_err(|e| Error::parse(row_line, e.to_string()))
            })
            .collect();
        vectors.push(ExactVector::from_scalars(field, scalars?)?);
    }
    Ok(ParsedRepresentation::Exact(
        ExactOrthogonalRepresentation::new(field, vectors)?,
    ))
}

pub fn write_subspace(rep: &SubspaceRepresentation) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p subrep {} {} {}",
        rep.n(),
        rep.ambient(),
        rep.k()
    )
    .unwrap();
    for v in 0..rep.n() {
        for b in rep.basis(v) {
            let tokens: Vec<String> = b.iter().map(|x| format!("{x:?}")).collect();
            writeln!(out, "{}", tokens.join(" ")).unwrap();
        }
    }
    out
}

pub fn parse_subspace(text: &str) -> Result<SubspaceRepresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c");
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 5 || tokens[0] != "p" || tokens[1] != "subrep" {
        return Err(Error::parse(
            line_no,
            "expected `p subrep <n> <t> <k>` header",
        ));
    }
    let n: usize = tokens[2]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad vertex count"))?;
    let t: usize = tokens[3]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad ambient dimension"))?;
    let k: usize = tokens[4]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad subspace dimension"))?;
    let mut flat: Vec<Vec<f64>> = Vec::with_capacity(n * k);
    for (row_line, line) in lines {
        let coords: Result<Vec<f64>> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|_| Error::parse(row_line, format!("bad float `{tok}`")))
            })
            .collect();
        let coords = coords?;
        if coords.len() != t {
            return Err(Error::parse(row_line, format!("expected {t} floats")));
        }
        flat.push(coords);
    }
    if flat.len() != n * k {
        return Err(Error::parse(
            line_no,
            format!("expected {} basis rows, found {}", n * k, flat.len()),
        ));
    }
    let bases: Vec<Vec<Vec<f64>>> = flat.chunks(k).map(|c| c.to_vec()).collect();
    SubspaceRepresentation::with_default_tolerances(t, k, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_round_trip() {
        let f = Field::prime(5).unwrap();
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::from_integers(f, &[1, 2]),
                ExactVector::from_integers(f, &[3, 1]),
            ],
        )
        .unwrap();
        let text = write_exact(&rep);
        assert!(text.starts_with("p rep 2 2 gf:5\n"));
        match parse_representation(&text).unwrap() {
            ParsedRepresentation::Exact(back) => assert_eq!(back, rep),
            _ => panic!("expected exact"),
        }
    }

    #[test]
    fn rational_round_trip() {
        let f = Field::Rational;
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![ExactVector::from_scalars(
                f,
                vec![
                    f.parse_scalar("1/2").unwrap(),
                    f.parse_scalar("-3").unwrap(),
                ],
            )
            .unwrap()],
        )
        .unwrap();
        let text = write_exact(&rep);
        match parse_representation(&text).unwrap() {
            ParsedRepresentation::Exact(back) => assert_eq!(back, rep),
            _ => panic!("expected exact"),
        }
    }

    #[test]
    fn real_round_trip() {
        let rep = RealOrthogonalRepresentation::with_default_tolerances(vec![
            vec![1.0, -0.25],
            vec![0.1234567890123, 2.0],
        ])
        .unwrap();
        let text = write_real(&rep);
        match parse_representation(&text).unwrap() {
            ParsedRepresentation::Real(back) => {
                assert_eq!(back.vectors(), rep.vectors());
            }
            _ => panic!("expected real"),
        }
    }

    #[test]
    fn subspace_round_trip() {
        let rep = SubspaceRepresentation::coordinate_blocks(3, 2);
        let text = write_subspace(&rep);
        let back = parse_subspace(&text).unwrap();
        assert_eq!(back.n(), 3);
        assert_eq!(back.ambient(), 6);
        assert_eq!(back.k(), 2);
        assert_eq!(back.basis(1), rep.basis(1));
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_representation("p rep 1 2\n1 0\n").is_err());
        assert!(parse_representation("p rep 1 2 gf:4\n1 0\n").is_err());
        assert!(parse_representation("p rep 2 2 real\n1 0\n").is_err());
        assert!(parse_representation("p rep 1 2 real\n1\n").is_err());
    }
}
