use std::fmt::Write as _;

use crate::combinatorics::VertexColoring;
use crate::error::{Error, Result};

/// Which branch produced an independent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    HighDegree,
    Sdp,
    Edgeless,
    GreedyFallback,
}

impl Branch {
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::HighDegree => "high",
            Branch::Sdp => "sdp",
            Branch::Edgeless => "edgeless",
            Branch::GreedyFallback => "greedy",
        }
    }

    fn from_tag(tag: &str) -> Option<Branch> {
        match tag {
            "high" => Some(Branch::HighDegree),
            "sdp" => Some(Branch::Sdp),
            "edgeless" => Some(Branch::Edgeless),
            "greedy" => Some(Branch::GreedyFallback),
            _ => None,
        }
    }
}

/// One extraction round: which branch ran, how many vertices it removed,
/// and how large the residual graph was before removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IterationLog {
    pub iteration: usize,
    pub branch: Branch,
    pub set_size: usize,
    pub residual_n: usize,
}

/// The full run outcome.
#[derive(Clone, Debug)]
pub struct ColoringReport {
    pub coloring: VertexColoring,
    pub colors: usize,
    pub log: Vec<IterationLog>,
    pub promise_violations: Vec<String>,
}

/// Text records: `i <iter> <branch> <is-size> <residual-n>` per iteration,
/// promise violations as comments, footer `colors <c>`.
pub fn write_report(report: &ColoringReport) -> String {
    let mut out = String::new();
    for v in &report.promise_violations {
        writeln!(out, "c violation {v}").unwrap();
    }
    for entry in &report.log {
        writeln!(
            out,
            "i {} {} {} {}",
            entry.iteration,
            entry.branch.tag(),
            entry.set_size,
            entry.residual_n
        )
        .unwrap();
    }
    writeln!(out, "colors {}", report.colors).unwrap();
    out
}

/// Parses the iteration log and color count back (the coloring itself is
/// not part of the record).
pub fn parse_report(text: &str) -> Result<(Vec<IterationLog>, usize)> {
    let mut log = Vec::new();
    let mut colors = None;
    for (line_no, line) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("c ") && *l != "c")
    {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["i", iter, branch, size, residual] => {
                let branch = Branch::from_tag(branch)
                    .ok_or_else(|| Error::parse(line_no, format!("unknown branch `{branch}`")))?;
                let parse = |t: &str| -> Result<usize> {
                    t.parse()
                        .map_err(|_| Error::parse(line_no, format!("bad number `{t}`")))
                };
                log.push(IterationLog {
                    iteration: parse(iter)?,
                    branch,
                    set_size: parse(size)?,
                    residual_n: parse(residual)?,
                });
            }
            ["colors", c] => {
                colors = Some(
                    c.parse()
                        .map_err(|_| Error::parse(line_no, format!("bad color count `{c}`")))?,
                );
            }
            _ => return Err(Error::parse(line_no, format!("unexpected record `{line}`"))),
        }
    }
    match colors {
        Some(c) => Ok((log, c)),
        None => Err(Error::parse(1, "missing `colors` footer")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip() {
        let report = ColoringReport {
            coloring: VertexColoring::new(vec![0, 1, 0], 2).unwrap(),
            colors: 2,
            log: vec![
                IterationLog {
                    iteration: 0,
                    branch: Branch::HighDegree,
                    set_size: 2,
                    residual_n: 3,
                },
                IterationLog {
                    iteration: 1,
                    branch: Branch::Sdp,
                    set_size: 1,
                    residual_n: 1,
                },
            ],
            promise_violations: vec!["neighborhood of 4 not bipartite".into()],
        };
        let text = write_report(&report);
        assert!(text.contains("i 0 high 2 3\n"));
        assert!(text.ends_with("colors 2\n"));
        let (log, colors) = parse_report(&text).unwrap();
        assert_eq!(log, report.log);
        assert_eq!(colors, 2);
    }
}
