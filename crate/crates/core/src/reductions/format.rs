//! Label Cover file format: header `p labelcover <|U|> <|V|> <|E|> <R> <L>`,
//! then one line per edge `e <x> <z> <R integers>` carrying the projection
//! table, everything 1-indexed. Assignments are `a <vertex> <value>` lines
//! with U-vertices first (1..|U|), then V-vertices (|U|+1..|U|+|V|).

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::labelcover::{Assignment, LabelCoverInstance};

pub fn write_label_cover(lc: &LabelCoverInstance) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p labelcover {} {} {} {} {}",
        lc.n_u(),
        lc.n_v(),
        lc.edges().len(),
        lc.r(),
        lc.l()
    )
    .unwrap();
    for (idx, &(x, z)) in lc.edges().iter().enumerate() {
        let table: Vec<String> = lc.projection(idx).iter().map(|b| (b + 1).to_string()).collect();
        writeln!(out, "e {} {} {}", x + 1, z + 1, table.join(" ")).unwrap();
    }
    out
}

pub fn parse_label_cover(text: &str) -> Result<LabelCoverInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c");
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 7 || tokens[0] != "p" || tokens[1] != "labelcover" {
        return Err(Error::parse(
            line_no,
            "expected `p labelcover <|U|> <|V|> <|E|> <R> <L>` header",
        ));
    }
    let nums: Result<Vec<usize>> = tokens[2..]
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("bad number `{t}`")))
        })
        .collect();
    let nums = nums?;
    let (nu, nv, m, r, l) = (nums[0], nums[1], nums[2], nums[3], nums[4]);
    let mut edges = Vec::with_capacity(m);
    let mut projections = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 + r || tokens[0] != "e" {
            return Err(Error::parse(
                line_no,
                format!("expected `e <x> <z>` plus {r} projection values"),
            ));
        }
        let parse_idx = |t: &str, bound: usize, what: &str| -> Result<usize> {
            let v: usize = t
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad {what} `{t}`")))?;
            if v == 0 || v > bound {
                return Err(Error::parse(line_no, format!("{what} out of range")));
            }
            Ok(v - 1)
        };
        let x = parse_idx(tokens[1], nu, "U-vertex")?;
        let z = parse_idx(tokens[2], nv, "V-vertex")?;
        let table: Result<Vec<usize>> = tokens[3..]
            .iter()
            .map(|t| parse_idx(t, l, "projection value"))
            .collect();
        edges.push((x, z));
        projections.push(table?);
    }
    if edges.len() != m {
        return Err(Error::parse(
            line_no,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    LabelCoverInstance::new(nu, nv, r, l, edges, projections)
        .map_err(|e| Error::parse(line_no, e.to_string()))
}

pub fn write_assignment(lc: &LabelCoverInstance, a: &Assignment) -> String {
    let mut out = String::new();
    for (x, &v) in a.u_values.iter().enumerate() {
        writeln!(out, "a {} {}", x + 1, v + 1).unwrap();
    }
    for (z, &v) in a.v_values.iter().enumerate() {
        writeln!(out, "a {} {}", lc.n_u() + z + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_assignment(text: &str, lc: &LabelCoverInstance) -> Result<Assignment> {
    let mut u_values = vec![None; lc.n_u()];
    let mut v_values = vec![None; lc.n_v()];
    for (line_no, line) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c")
    {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "a" {
            return Err(Error::parse(line_no, "expected `a <vertex> <value>`"));
        }
        let vertex: usize = tokens[1]
            .parse()
            .map_err(|_| Error::parse(line_no, "bad vertex"))?;
        let value: usize = tokens[2]
            .parse()
            .map_err(|_| Error::parse(line_no, "bad value"))?;
        if vertex == 0 || vertex > lc.n_u() + lc.n_v() || value == 0 {
            return Err(Error::parse(line_no, "assignment entry out of range"));
        }
        if vertex <= lc.n_u() {
            if value > lc.r() {
                return Err(Error::parse(line_no, "U-value out of range"));
            }
            u_values[vertex - 1] = Some(value - 1);
        } else {
            if value > lc.l() {
                return Err(Error::parse(line_no, "V-value out of range"));
            }
            v_values[vertex - lc.n_u() - 1] = Some(value - 1);
        }
    }
    let u_values: Option<Vec<usize>> = u_values.into_iter().collect();
    let v_values: Option<Vec<usize>> = v_values.into_iter().collect();
    match (u_values, v_values) {
        (Some(u_values), Some(v_values)) => Ok(Assignment { u_values, v_values }),
        _ => Err(Error::parse(1, "assignment misses some vertices")),
    }
}
