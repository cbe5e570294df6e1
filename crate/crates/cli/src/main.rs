//! Command-line front end: generation, bounds, reductions, coloring runs,
//! verification, and reproducible experiment manifests.

mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orthodim::coloring::{
    color_od3_graph, planted_od3_instance, write_report, ColoringRunConfig, PlantedKind,
    PromisePolicy,
};
use orthodim::combinatorics::{self, format as gformat, Graph, UniformHypergraph};
use orthodim::error::Error;
use orthodim::exactalg::format as mformat;
use orthodim::reductions::{
    self, format as lcformat, label_cover_to_hypergraph, lexicographic_reduce, toy_label_cover,
    uniformity_reduce, ToyKind, ToyParams,
};
use orthodim::representations::{
    format as rformat, format::ParsedRepresentation, grw_check, od_sandwich_graph,
    od_sandwich_hypergraph, verify_exact, verify_subspace, OdSandwichOptions,
};
use orthodim::sdp::SdpConfig;
use orthodim::SearchLimits;

use manifest::ManifestRecord;

#[derive(Parser)]
#[command(name = "orthodim", version, about = "orthogonal representation toolkit")]
struct Cli {
    /// Worker threads for searches that support partitioning.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Emit machine-readable JSON on stdout instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Append a JSON manifest record for this invocation.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate instance files for the built-in families.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Sandwich bounds on the orthogonality dimension of an instance file.
    Bounds(BoundsArgs),
    /// Run one of the reductions on instance files.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Color a graph promised to have orthogonality dimension at most 3.
    Color(ColorArgs),
    /// Verify representations, colorings, and matrix certificates.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Kneser graph K(d, s).
    Kneser {
        d: u32,
        s: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Schrijver graph S(d, s).
    Schrijver {
        d: u32,
        s: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// The +-1-representable intersection graph on t/2-subsets of [t].
    FranklRodl {
        t: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lexicographic product of two graph files.
    Lexi {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Planted instance with orthogonality dimension at most 3.
    Planted {
        n: usize,
        #[arg(value_enum)]
        kind: PlantedKindArg,
        /// Cross-part edge probability (tripartite only).
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Toy Label Cover instance.
    Labelcover {
        #[arg(value_enum)]
        kind: ToyKindArg,
        nu: usize,
        nv: usize,
        r: usize,
        l: usize,
        degree: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlantedKindArg {
    Tripartite,
    KneserSub,
}

#[derive(Clone, Copy, ValueEnum)]
enum ToyKindArg {
    Satisfiable,
    Random,
}

#[derive(Args)]
struct BoundsArgs {
    input: PathBuf,
    /// Skip the SDP lower bound.
    #[arg(long)]
    no_sdp: bool,
    /// Exact-search vertex limit.
    #[arg(long, default_value_t = 64)]
    limit: usize,
    /// Slack subtracted from the computed svchrom before the ceiling.
    #[arg(long, default_value_t = 1e-3)]
    eps_sdp: f64,
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Lift a hypergraph to higher uniformity.
    Uniformity {
        input: PathBuf,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lexicographic product of a pattern graph and an input graph.
    Lexi {
        pattern: PathBuf,
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Label Cover to a 4-uniform hypergraph with dimension threshold t.
    Labelcover {
        input: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct ColorArgs {
    input: PathBuf,
    #[arg(long)]
    seed: u64,
    /// Degree threshold exponent for the branch split.
    #[arg(long, default_value_t = 0.75)]
    exponent: f64,
    #[arg(long, value_enum, default_value_t = PolicyArg::BestEffort)]
    policy: PolicyArg,
    /// Hyperplane rounding trials.
    #[arg(long, default_value_t = 64)]
    trials: usize,
    /// Write the iteration report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write the coloring itself here.
    #[arg(long)]
    coloring_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum PolicyArg {
    BestEffort,
    Strict,
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Orthogonal representation against a graph or hypergraph file.
    Rep { instance: PathBuf, rep: PathBuf },
    /// Subspace representation against a graph file.
    Subspace { graph: PathBuf, rep: PathBuf },
    /// Proper coloring against a graph or hypergraph file.
    Coloring { instance: PathBuf, coloring: PathBuf },
    /// Sparsity/rank inequality for a square matrix with nonzero diagonal.
    Grw { matrix: PathBuf },
}

/// Instance files are distinguished by their `p` header.
enum Instance {
    Graph(Graph),
    Hypergraph(UniformHypergraph),
}

fn read_to_string(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn load_instance(path: &PathBuf) -> Result<Instance, Error> {
    let text = read_to_string(path)?;
    let header_kind = text
        .lines()
        .map(str::trim)
        .find(|l| l.starts_with("p "))
        .and_then(|l| l.split_whitespace().nth(1))
        .unwrap_or("");
    match header_kind {
        "graph" => Ok(Instance::Graph(gformat::parse_graph(&text)?)),
        "hypergraph" => Ok(Instance::Hypergraph(gformat::parse_hypergraph(&text)?)),
        other => Err(Error::parse(
            1,
            format!("expected a graph or hypergraph header, found `{other}`"),
        )),
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Verification(_) | Error::NonConvergence(_) => 1,
        Error::InvalidArgument(_) => 2,
        Error::Parse { .. } | Error::Mismatch(_) => 3,
        Error::Capacity(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut record = ManifestRecord::start(&cli);
    let outcome = run(&cli, &mut record);
    if let Some(path) = &cli.manifest {
        record.finish(outcome.as_ref().err());
        if let Err(e) = record.append_to(path) {
            eprintln!("manifest write failed: {e}");
        }
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: &Cli, record: &mut ManifestRecord) -> Result<(), Error> {
    match &cli.command {
        Command::Generate { family } => cmd_generate(cli, family, record),
        Command::Bounds(args) => cmd_bounds(cli, args, record),
        Command::Reduce { kind } => cmd_reduce(cli, kind, record),
        Command::Color(args) => cmd_color(cli, args, record),
        Command::Verify { kind } => cmd_verify(cli, kind, record),
    }
}

fn emit(cli: &Cli, record: &ManifestRecord, text_lines: &[String]) {
    if cli.json {
        println!("{}", record.results_json());
    } else {
        for line in text_lines {
            println!("{line}");
        }
    }
}

fn cmd_generate(cli: &Cli, family: &Family, record: &mut ManifestRecord) -> Result<(), Error> {
    let (out, text, lines) = match family {
        Family::Kneser { d, s, out } => {
            let g = combinatorics::kneser_graph(*d, *s)?;
            record.result("n", g.n());
            record.result("m", g.m());
            (
                out,
                gformat::write_graph(&g),
                vec![format!("kneser {d} {s}: n={} m={}", g.n(), g.m())],
            )
        }
        Family::Schrijver { d, s, out } => {
            let g = combinatorics::schrijver_graph(*d, *s)?;
            record.result("n", g.n());
            record.result("m", g.m());
            (
                out,
                gformat::write_graph(&g),
                vec![format!("schrijver {d} {s}: n={} m={}", g.n(), g.m())],
            )
        }
        Family::FranklRodl { t, out } => {
            let g = combinatorics::frankl_rodl_graph(*t)?;
            record.result("n", g.n());
            record.result("m", g.m());
            (
                out,
                gformat::write_graph(&g),
                vec![format!("frankl-rodl {t}: n={} m={}", g.n(), g.m())],
            )
        }
        Family::Lexi { g1, g2, out } => {
            record.input(g1)?;
            record.input(g2)?;
            let a = gformat::parse_graph(&read_to_string(g1)?)?;
            let b = gformat::parse_graph(&read_to_string(g2)?)?;
            let g = combinatorics::lexicographic_product(&a, &b)?;
            record.result("n", g.n());
            record.result("m", g.m());
            (
                out,
                gformat::write_graph(&g),
                vec![format!("lexi: n={} m={}", g.n(), g.m())],
            )
        }
        Family::Planted {
            n,
            kind,
            p,
            seed,
            out,
        } => {
            let kind = match kind {
                PlantedKindArg::Tripartite => PlantedKind::Tripartite {
                    edge_probability: *p,
                },
                PlantedKindArg::KneserSub => PlantedKind::KneserSub,
            };
            let g = planted_od3_instance(*n, kind, *seed)?;
            record.result("n", g.n());
            record.result("m", g.m());
            (
                out,
                gformat::write_graph(&g),
                vec![format!("planted: n={} m={}", g.n(), g.m())],
            )
        }
        Family::Labelcover {
            kind,
            nu,
            nv,
            r,
            l,
            degree,
            seed,
            out,
        } => {
            let toy = toy_label_cover(
                match kind {
                    ToyKindArg::Satisfiable => ToyKind::Satisfiable,
                    ToyKindArg::Random => ToyKind::Random,
                },
                ToyParams {
                    nu: *nu,
                    nv: *nv,
                    r: *r,
                    l: *l,
                    degree: *degree,
                },
                *seed,
            )?;
            record.result("edges", toy.instance.edges().len());
            let mut lines = vec![format!(
                "labelcover: |U|={nu} |V|={nv} |E|={} R={r} L={l}",
                toy.instance.edges().len()
            )];
            if let Some(planted) = &toy.planted {
                let planted_path = out.with_extension("planted");
                write_file(
                    &planted_path,
                    &lcformat::write_assignment(&toy.instance, planted),
                )?;
                lines.push(format!("planted assignment: {}", planted_path.display()));
            }
            (out, lcformat::write_label_cover(&toy.instance), lines)
        }
    };
    write_file(out, &text)?;
    emit(cli, record, &lines);
    Ok(())
}

fn cmd_bounds(cli: &Cli, args: &BoundsArgs, record: &mut ManifestRecord) -> Result<(), Error> {
    record.input(&args.input)?;
    let limits = SearchLimits::default()
        .with_exact_vertices(args.limit)
        .with_workers(cli.workers);
    let options = OdSandwichOptions {
        limits,
        sdp: if args.no_sdp {
            None
        } else {
            Some(SdpConfig {
                workers: cli.workers.max(1),
                ..SdpConfig::default()
            })
        },
        eps_sdp: args.eps_sdp,
    };
    let sandwich = match load_instance(&args.input)? {
        Instance::Graph(g) => od_sandwich_graph(&g, &options),
        Instance::Hypergraph(h) => od_sandwich_hypergraph(&h, &options),
    };
    record.result("lower", sandwich.lower);
    record.result("upper", sandwich.upper);
    record.result("upper_is_exact", sandwich.upper_is_exact);
    let mut lines = vec![
        format!("lower {}", sandwich.lower),
        format!("upper {}", sandwich.upper),
    ];
    if let Some(chi) = sandwich.chromatic {
        record.result("chromatic", chi);
        lines.push(format!("chromatic {chi}"));
    }
    if let Some(two) = sandwich.two_colorable {
        record.result("two_colorable", two);
        lines.push(format!("two-colorable {two}"));
    }
    if let Some(sv) = sandwich.svchrom {
        record.result("svchrom", format!("{sv:.6}"));
        lines.push(format!("svchrom {sv:.6}"));
    }
    if sandwich.coloring.is_some() {
        lines.push("certificate coloring attached".into());
    }
    if sandwich.gram.is_some() {
        lines.push("certificate gram attached".into());
    }
    for note in &sandwich.notes {
        lines.push(format!("note {note}"));
    }
    emit(cli, record, &lines);
    Ok(())
}

fn cmd_reduce(cli: &Cli, kind: &ReduceKind, record: &mut ManifestRecord) -> Result<(), Error> {
    let limits = SearchLimits::default().with_workers(cli.workers);
    match kind {
        ReduceKind::Uniformity { input, k2, m, out } => {
            record.input(input)?;
            let h = gformat::parse_hypergraph(&read_to_string(input)?)?;
            let red = uniformity_reduce(&h, *k2, *m, &limits)?;
            let text = format!(
                "{}\n{}",
                red.provenance.comment(),
                gformat::write_hypergraph(&red.output)
            );
            write_file(out, &text)?;
            record.result("s", red.s);
            record.result("ell", red.ell);
            record.result("n", red.output.n());
            record.result("m_out", red.output.m());
            emit(
                cli,
                record,
                &[format!(
                    "uniformity: s={} ell={} n={} m={}",
                    red.s,
                    red.ell,
                    red.output.n(),
                    red.output.m()
                )],
            );
        }
        ReduceKind::Lexi { pattern, input, out } => {
            record.input(pattern)?;
            record.input(input)?;
            let f = gformat::parse_graph(&read_to_string(pattern)?)?;
            let g = gformat::parse_graph(&read_to_string(input)?)?;
            let red = lexicographic_reduce(&f, &g)?;
            let text = format!(
                "{}\n{}",
                red.provenance.comment(),
                gformat::write_graph(&red.output)
            );
            write_file(out, &text)?;
            record.result("n", red.output.n());
            record.result("m_out", red.output.m());
            emit(
                cli,
                record,
                &[format!("lexi: n={} m={}", red.output.n(), red.output.m())],
            );
        }
        ReduceKind::Labelcover { input, t, out } => {
            record.input(input)?;
            let lc = lcformat::parse_label_cover(&read_to_string(input)?)?;
            let (h, dir) = label_cover_to_hypergraph(&lc, *t, &limits)?;
            let provenance = reductions::Provenance::new(
                "labelcover",
                format!("t={t} s={} block={}", dir.s, dir.block_size()),
                format!(
                    "fnv1a:{:016x}",
                    reductions::fnv1a(lcformat::write_label_cover(&lc).as_bytes())
                ),
            );
            let text = format!("{}\n{}", provenance.comment(), gformat::write_hypergraph(&h));
            write_file(out, &text)?;
            record.result("s", dir.s);
            record.result("block", dir.block_size());
            record.result("n", h.n());
            record.result("m_out", h.m());
            emit(
                cli,
                record,
                &[format!(
                    "labelcover: s={} block={} n={} m={}",
                    dir.s,
                    dir.block_size(),
                    h.n(),
                    h.m()
                )],
            );
        }
    }
    Ok(())
}

fn cmd_color(cli: &Cli, args: &ColorArgs, record: &mut ManifestRecord) -> Result<(), Error> {
    record.input(&args.input)?;
    let g = gformat::parse_graph(&read_to_string(&args.input)?)?;
    let cfg = ColoringRunConfig {
        degree_exponent: args.exponent,
        sdp: SdpConfig {
            rounding_trials: args.trials,
            workers: cli.workers.max(1),
            ..ColoringRunConfig::default().sdp
        },
        seed: args.seed,
        policy: match args.policy {
            PolicyArg::BestEffort => PromisePolicy::BestEffort,
            PolicyArg::Strict => PromisePolicy::Strict,
        },
    };
    let report = color_od3_graph(&g, &cfg)?;
    record.result("colors", report.colors);
    record.result("violations", report.promise_violations.len());
    record.result("iterations", report.log.len());
    let mut lines = vec![
        format!("colors {}", report.colors),
        format!("iterations {}", report.log.len()),
        format!("violations {}", report.promise_violations.len()),
    ];
    for v in &report.promise_violations {
        lines.push(format!("violation {v}"));
    }
    if let Some(path) = &args.report {
        write_file(path, &write_report(&report))?;
        lines.push(format!("report written to {}", path.display()));
    }
    if let Some(path) = &args.coloring_out {
        write_file(path, &gformat::write_coloring(&report.coloring))?;
        lines.push(format!("coloring written to {}", path.display()));
    }
    emit(cli, record, &lines);
    Ok(())
}

fn cmd_verify(cli: &Cli, kind: &VerifyKind, record: &mut ManifestRecord) -> Result<(), Error> {
    match kind {
        VerifyKind::Rep { instance, rep } => {
            record.input(instance)?;
            record.input(rep)?;
            let h = match load_instance(instance)? {
                Instance::Graph(g) => UniformHypergraph::from_graph(&g),
                Instance::Hypergraph(h) => h,
            };
            let report = match rformat::parse_representation(&read_to_string(rep)?)? {
                ParsedRepresentation::Exact(exact) => verify_exact(&h, &exact)?,
                ParsedRepresentation::Real(real) => real.verify(&h)?,
            };
            record.result("valid", report.is_valid());
            if report.is_valid() {
                emit(cli, record, &["valid".into()]);
                Ok(())
            } else {
                let mut lines = Vec::new();
                for v in &report.isotropic_vertices {
                    lines.push(format!("isotropic vertex {}", v + 1));
                }
                for e in &report.unsatisfied_hyperedges {
                    lines.push(format!("unsatisfied hyperedge {}", e + 1));
                }
                emit(cli, record, &lines);
                Err(Error::Verification(format!(
                    "{} isotropic vertices, {} unsatisfied hyperedges",
                    report.isotropic_vertices.len(),
                    report.unsatisfied_hyperedges.len()
                )))
            }
        }
        VerifyKind::Subspace { graph, rep } => {
            record.input(graph)?;
            record.input(rep)?;
            let g = gformat::parse_graph(&read_to_string(graph)?)?;
            let sub = rformat::parse_subspace(&read_to_string(rep)?)?;
            let report = verify_subspace(&g, &sub)?;
            record.result("valid", report.is_valid());
            if report.is_valid() {
                emit(cli, record, &["valid".into()]);
                Ok(())
            } else {
                Err(Error::Verification(format!(
                    "{} degenerate vertices, {} non-orthogonal edges",
                    report.degenerate_vertices.len(),
                    report.non_orthogonal_edges.len()
                )))
            }
        }
        VerifyKind::Coloring { instance, coloring } => {
            record.input(instance)?;
            record.input(coloring)?;
            let coloring = gformat::parse_coloring(&read_to_string(coloring)?)?;
            let proper = match load_instance(instance)? {
                Instance::Graph(g) => coloring.is_proper_on_graph(&g),
                Instance::Hypergraph(h) => coloring.is_proper_on_hypergraph(&h),
            };
            record.result("valid", proper);
            if proper {
                emit(cli, record, &["valid".into()]);
                Ok(())
            } else {
                Err(Error::Verification("coloring is not proper".into()))
            }
        }
        VerifyKind::Grw { matrix } => {
            record.input(matrix)?;
            let m = mformat::parse_matrix(&read_to_string(matrix)?)?;
            let report = grw_check(&m)?;
            record.result("sparsity", report.sparsity);
            record.result("rank", report.rank);
            record.result("holds", report.holds);
            emit(
                cli,
                record,
                &[format!(
                    "sparsity {} rank {} bound {:.4} holds {}",
                    report.sparsity,
                    report.rank,
                    report.bound(),
                    report.holds
                )],
            );
            if report.holds {
                Ok(())
            } else {
                Err(Error::Verification(
                    "sparsity bound violated; this indicates an implementation bug".into(),
                ))
            }
        }
    }
}
