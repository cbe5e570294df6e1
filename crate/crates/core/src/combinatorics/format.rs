//! Text formats for graphs and hypergraphs.
//!
//! Graph: header `p graph <n> <m>`, then `e <u> <v>` lines, 1-indexed.
//! Hypergraph: header `p hypergraph <n> <m> <k>`, then one line of k vertex
//! indices per hyperedge. Whitespace-separated, newline-terminated; `c ...`
//! lines are comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{Graph, UniformHypergraph};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p graph {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "p hypergraph {} {} {}", h.n(), h.m(), h.k()).unwrap();
    for e in h.hyperedges() {
        let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Lines that carry content: skips blanks and `c` comments, keeps 1-based
/// line numbers for error reporting.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c")
}

fn parse_header<'a>(text: &'a str, kind: &str) -> Result<(usize, Vec<usize>, Vec<(usize, &'a str)>)> {
    let mut lines: Vec<(usize, &str)> = content_lines(text).collect();
    if lines.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    let (line_no, header) = lines.remove(0);
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() < 2 || tokens[0] != "p" || tokens[1] != kind {
        return Err(Error::parse(
            line_no,
            format!("expected `p {kind} ...` header, got `{header}`"),
        ));
    }
    let numbers: Result<Vec<usize>> = tokens[2..]
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("bad number `{t}`")))
        })
        .collect();
    Ok((line_no, numbers?, lines))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (header_line, numbers, lines) = parse_header(text, "graph")?;
    if numbers.len() != 2 {
        return Err(Error::parse(header_line, "graph header needs n and m"));
    }
    let (n, m) = (numbers[0], numbers[1]);
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(Error::parse(line_no, format!("expected `e <u> <v>`, got `{line}`")));
        }
        let u: usize = tokens[1]
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad vertex `{}`", tokens[1])))?;
        let v: usize = tokens[2]
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad vertex `{}`", tokens[2])))?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(line_no, "vertex index out of range (1-indexed)"));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let (header_line, numbers, lines) = parse_header(text, "hypergraph")?;
    if numbers.len() != 3 {
        return Err(Error::parse(header_line, "hypergraph header needs n, m and k"));
    }
    let (n, m, k) = (numbers[0], numbers[1], numbers[2]);
    let mut hyperedges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let vertices: Result<Vec<usize>> = line
            .split_whitespace()
            .map(|t| {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad vertex `{t}`")))?;
                if v == 0 || v > n {
                    return Err(Error::parse(line_no, "vertex index out of range (1-indexed)"));
                }
                Ok(v - 1)
            })
            .collect();
        let vertices = vertices?;
        if vertices.len() != k {
            return Err(Error::parse(
                line_no,
                format!("expected {k} vertices on a hyperedge line, got {}", vertices.len()),
            ));
        }
        hyperedges.push(vertices);
    }
    if hyperedges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} hyperedges, found {}", hyperedges.len()),
        ));
    }
    UniformHypergraph::new(n, k, hyperedges).map_err(|e| Error::parse(header_line, e.to_string()))
}

/// Coloring file: header `p coloring <n> <c>`, then `v <vertex> <color>`
/// lines, 1-indexed.
pub fn write_coloring(c: &super::VertexColoring) -> String {
    let mut out = String::new();
    writeln!(out, "p coloring {} {}", c.len(), c.palette()).unwrap();
    for (v, &color) in c.colors().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, color + 1).unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<super::VertexColoring> {
    let (header_line, numbers, lines) = parse_header(text, "coloring")?;
    if numbers.len() != 2 {
        return Err(Error::parse(header_line, "coloring header needs n and c"));
    }
    let (n, palette) = (numbers[0], numbers[1]);
    let mut colors = vec![None; n];
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "v" {
            return Err(Error::parse(line_no, "expected `v <vertex> <color>`"));
        }
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| Error::parse(line_no, "bad vertex"))?;
        let c: usize = tokens[2]
            .parse()
            .map_err(|_| Error::parse(line_no, "bad color"))?;
        if v == 0 || v > n || c == 0 || c > palette {
            return Err(Error::parse(line_no, "coloring entry out of range"));
        }
        colors[v - 1] = Some(c - 1);
    }
    let colors: Option<Vec<usize>> = colors.into_iter().collect();
    let colors = colors.ok_or_else(|| Error::parse(header_line, "missing vertex colors"))?;
    super::VertexColoring::new(colors, palette)
        .map_err(|e| Error::parse(header_line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    #[test]
    fn coloring_round_trip() {
        let c = super::super::VertexColoring::new(vec![0, 2, 1], 3).unwrap();
        let text = write_coloring(&c);
        assert!(text.starts_with("p coloring 3 3\n"));
        assert_eq!(parse_coloring(&text).unwrap(), c);
        assert!(parse_coloring("p coloring 2 1\nv 1 1\n").is_err());
    }

    #[test]
    fn graph_round_trip() {
        let g = crate::combinatorics::generators::kneser_graph(5, 2).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("p graph 10 15\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn random_round_trips() {
        let mut rng = Rng::seed_from(8);
        for _ in 0..30 {
            let n = 1 + rng.next_usize_below(12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);

            let k = 2 + rng.next_usize_below(3);
            if n >= k {
                let mut hyperedges = Vec::new();
                for _ in 0..rng.next_usize_below(8) {
                    let mut verts: Vec<usize> = (0..n).collect();
                    rng.shuffle(&mut verts);
                    hyperedges.push(verts[..k].to_vec());
                }
                let h = UniformHypergraph::new(n, k, hyperedges).unwrap();
                assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
            }
        }
    }

    #[test]
    fn comments_and_errors() {
        let text = "c a comment\np graph 3 1\nc another\ne 1 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!((g.n(), g.m()), (3, 1));

        assert!(parse_graph("p graph 2\ne 1 2\n").is_err());
        assert!(parse_graph("p graph 2 1\ne 0 2\n").is_err());
        assert!(parse_graph("p graph 2 2\ne 1 2\n").is_err());
        assert!(parse_hypergraph("p hypergraph 3 1 3\n1 2\n").is_err());
        assert!(parse_graph("").is_err());
    }
}
