//! Command-line front end. [`run`] parses an argument vector, dispatches to
//! the library and returns the process exit code:
//! `0` on success, `1` for a negative finding under `--strict`, `2` for
//! usage or input errors.

use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::coset::{enumerate, EnumerationResult, Limits, Strategy};
use crate::diagram::{
    curvature_report, find_cancellation_pairs, validate_diagram, AngleAssignment, Sign, SurfaceDiagram,
};
use crate::log::{cyclic_shift_family, parse_log, validate, LabeledOrientedGraph};
use crate::npc::{find_forbidden_patterns, log_link_girth, verdict};
use crate::presentation::{
    abelianization, log_presentation, parse_presentation, reidemeister_schreier_kernel, with_power, Letter,
    Presentation, Word,
};
use crate::search::search_small_lois;

#[derive(Parser, Debug)]
#[command(name = "logkit", version, about = "Labeled oriented graphs, their groups and surface diagrams")]
struct Cli {
    /// Emit machine-readable JSON (keys sorted).
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when the analysis is negative.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GroupInput {
    /// LOG file, or a presentation file starting with `gen:`; `-` reads stdin.
    input: String,
    /// Add the relator g^n; repeatable.
    #[arg(long = "power", value_name = "G:N", value_parser = parse_power)]
    powers: Vec<(String, i64)>,
}

#[derive(Args, Debug, Clone, Copy)]
struct LimitArgs {
    /// Ceiling on live cosets (default 100000, or LOGKIT_MAX_COSETS).
    #[arg(long)]
    max_cosets: Option<usize>,
    /// Ceiling on coset definitions (default 50 × max-cosets).
    #[arg(long)]
    max_steps: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Plain,
    Algebra,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a LOG and report the forbidden patterns, link girth and verdict.
    Check { input: String },
    /// Print the LOG-presentation, with any power relators.
    Present {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Todd–Coxeter enumeration of the group order.
    Order {
        #[command(flatten)]
        group: GroupInput,
        #[command(flatten)]
        limits: LimitArgs,
        /// Also print the closed coset table.
        #[arg(long)]
        table: bool,
    },
    /// Abelian invariants via Smith normal form.
    Abelianize {
        #[command(flatten)]
        group: GroupInput,
    },
    /// Presentation of the kernel of the map sending every generator to 1 in Z_K.
    Kernel {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long = "n", value_name = "K")]
        n: usize,
        /// Also enumerate the kernel's order.
        #[arg(long)]
        order: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Generate a LOG family.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Validate a diagram JSON file and audit its curvature.
    AuditDiagram {
        diagram: String,
        /// Presentation the face words must read (LOG or `gen:` file); by
        /// default the words of the faces themselves.
        #[arg(long)]
        against: Option<String>,
        #[arg(long = "power", value_name = "G:N", value_parser = parse_power)]
        powers: Vec<(String, i64)>,
    },
    /// Emit a canonical sphere diagram as JSON.
    Sphere {
        #[command(subcommand)]
        sphere: SphereCommand,
    },
    /// Exhaustive search over small compressed injective LOIs.
    ///
    /// LOIs are drawn on a fixed path, so vertex renaming reduces to the
    /// path reversal; instances are counted up to reversal, while the
    /// girth cross-check covers every labelling of the path.
    Search {
        #[arg(long)]
        max_vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCommand {
    /// Edges (i | i+3 mod n | i+1) for i = 0..n-2.
    CyclicShift {
        #[arg(long = "n")]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SphereCommand {
    /// Two n-gons reading g^n glued along their boundary.
    Power {
        #[arg(long)]
        generator: String,
        #[arg(long = "n")]
        n: usize,
        /// Print the curvature audit instead of the diagram.
        #[arg(long)]
        audit: bool,
    },
    /// Power cells a^n and c^n joined by a ring of n squares for the edge (a|b|c).
    Edge {
        #[arg(long, value_name = "A|B|C")]
        edge: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        audit: bool,
    },
}

fn parse_power(s: &str) -> Result<(String, i64), String> {
    let (g, n) = s.rsplit_once(':').ok_or_else(|| format!("expected G:N, got `{s}`"))?;
    let n: i64 = n.trim().parse().map_err(|_| format!("bad exponent in `{s}`"))?;
    if g.trim().is_empty() {
        return Err(format!("missing generator in `{s}`"));
    }
    Ok((g.trim().to_string(), n))
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the CLI on `args` (including the program name), writing to the
/// process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(true) => 0,
        Ok(false) => i32::from(cli.strict),
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))
    }
}

fn read_log(path: &str) -> Result<LabeledOrientedGraph, Failure> {
    Ok(parse_log(&read_input(path)?)?)
}

fn is_presentation_text(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("gen:"))
}

fn read_group(path: &str, powers: &[(String, i64)]) -> Result<Presentation, Failure> {
    let text = read_input(path)?;
    let mut p =
        if is_presentation_text(&text) { parse_presentation(&text)? } else { log_presentation(&parse_log(&text)?) };
    for (g, n) in powers {
        p = with_power(&p, g, *n)?;
    }
    Ok(p)
}

fn limits(a: &LimitArgs) -> (Strategy, Limits) {
    let mut l = Limits::from_env();
    if let Some(c) = a.max_cosets {
        l = Limits::new(c);
    }
    if let Some(s) = a.max_steps {
        l.max_steps = s;
    }
    let strategy = match a.strategy {
        StrategyArg::Hlt => Strategy::Hlt,
        StrategyArg::Felsch => Strategy::Felsch,
    };
    (strategy, l)
}

/// Pretty JSON with sorted keys, so re-serializing parsed output is
/// byte-identical.
fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    let value: Value = serde_json::to_value(v)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    Ok(())
}

fn present(p: &Presentation, format: Format) -> String {
    match format {
        Format::Plain => p.to_plain(),
        Format::Algebra => p.to_algebra(),
    }
}

fn enumeration_json(r: &EnumerationResult) -> Value {
    match r {
        EnumerationResult::Finite { order, table } => json!({
            "status": "finite",
            "order": order,
            "stats": table.stats,
        }),
        EnumerationResult::Exceeded(stats) => json!({
            "status": "exceeded",
            "message": r.to_string(),
            "stats": stats,
        }),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Check { input } => check(cli, out, &read_log(input)?),
        Command::Present { group, format } => {
            let p = read_group(&group.input, &group.powers)?;
            if cli.json {
                emit_json(out, &presentation_json(&p))?;
            } else {
                write!(out, "{}", present(&p, *format))?;
            }
            Ok(true)
        }
        Command::Order { group, limits: l, table } => {
            let p = read_group(&group.input, &group.powers)?;
            let (strategy, limits) = limits(l);
            let r = enumerate(&p, strategy, limits);
            if cli.json {
                let mut v = enumeration_json(&r);
                if let (true, EnumerationResult::Finite { table: t, .. }) = (*table, &r) {
                    v["table"] = t.to_json();
                }
                emit_json(out, &v)?;
            } else {
                writeln!(out, "{r}")?;
                if let (true, EnumerationResult::Finite { table: t, .. }) = (*table, &r) {
                    write!(out, "{}", t.to_text())?;
                }
            }
            Ok(r.order().is_some())
        }
        Command::Abelianize { group } => {
            let a = abelianization(&read_group(&group.input, &group.powers)?);
            if cli.json {
                emit_json(out, &a)?;
            } else {
                writeln!(out, "{a}")?;
            }
            Ok(true)
        }
        Command::Kernel { group, n, order, format, limits: l } => {
            let p = read_group(&group.input, &group.powers)?;
            let k = reidemeister_schreier_kernel(&p, *n)?;
            let r = order.then(|| {
                let (strategy, limits) = limits(l);
                enumerate(&k, strategy, limits)
            });
            if cli.json {
                let mut v = presentation_json(&k);
                if let Some(r) = &r {
                    v["enumeration"] = enumeration_json(r);
                }
                emit_json(out, &v)?;
            } else {
                write!(out, "{}", present(&k, *format))?;
                if let Some(r) = &r {
                    writeln!(out, "order: {r}")?;
                }
            }
            Ok(r.is_none_or(|r| r.order().is_some()))
        }
        Command::Family { family: FamilyCommand::CyclicShift { n } } => {
            let g = cyclic_shift_family(*n)?;
            if cli.json {
                let edges: Vec<[&str; 3]> =
                    g.edges().iter().map(|e| [g.name(e.source), g.name(e.label), g.name(e.target)]).collect();
                emit_json(out, &json!({ "vertices": g.vertices(), "edges": edges }))?;
            } else {
                write!(out, "{}", g.serialize())?;
            }
            Ok(true)
        }
        Command::AuditDiagram { diagram, against, powers } => audit(cli, out, diagram, against.as_deref(), powers),
        Command::Sphere { sphere } => {
            let (s, p, audit_only) = match sphere {
                SphereCommand::Power { generator, n, audit } => {
                    let s = crate::diagram::canonical_power_sphere(generator, *n)?;
                    let p = Presentation::new(vec![generator.clone()], vec![Word::power(0, *n as i64)])?;
                    (s, p, *audit)
                }
                SphereCommand::Edge { edge, n, audit } => {
                    let parts: Vec<&str> = edge.split('|').map(str::trim).collect();
                    let [a, b, c] = parts[..] else {
                        return Err(Failure(format!("expected A|B|C, got `{edge}`")));
                    };
                    let s = crate::diagram::canonical_edge_sphere(a, b, c, *n)?;
                    let g = LabeledOrientedGraph::from_triples(&[(a, b, c)])?;
                    let p = with_power(&with_power(&log_presentation(&g), a, *n as i64)?, c, *n as i64)?;
                    (s, p, *audit)
                }
            };
            if audit_only {
                audit_diagram(cli, out, &s, &p)
            } else {
                write!(out, "{}", s.to_json())?;
                Ok(true)
            }
        }
        Command::Search { max_vertices } => {
            let r = search_small_lois(*max_vertices)?;
            if cli.json {
                emit_json(out, &r)?;
            } else {
                write!(out, "{r}")?;
            }
            Ok(r.consistent())
        }
    }
}

fn presentation_json(p: &Presentation) -> Value {
    let relators: Vec<String> = p.relators().iter().map(|r| p.display_word(r).to_string()).collect();
    json!({ "generators": p.generators(), "relators": relators })
}

fn check(cli: &Cli, out: &mut dyn Write, g: &LabeledOrientedGraph) -> Outcome {
    let v = verdict(g);
    if cli.json {
        emit_json(out, &v)?;
        return Ok(v.theorem2_applicable);
    }
    let report = validate(g);
    writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edges().len())?;
    writeln!(out, "compressed: {}", report.compressed)?;
    writeln!(out, "injective: {}", report.injective)?;
    writeln!(out, "shape: {:?}", report.shape)?;
    if let Ok(p) = find_forbidden_patterns(g) {
        let pairs = |v: &[(usize, usize)]| v.iter().map(|(a, b)| format!("(e{a},e{b})")).collect::<Vec<_>>().join(" ");
        let triples = p.fig2.iter().map(|(a, b, c)| format!("(e{a},e{b},e{c})")).collect::<Vec<_>>().join(" ");
        writeln!(out, "fig1: [{}]", pairs(&p.fig1))?;
        writeln!(out, "fig2: [{triples}]")?;
        writeln!(out, "fig3: [{}]", pairs(&p.fig3))?;
    }
    writeln!(out, "link girth: {}", log_link_girth(g))?;
    writeln!(out, "npc={}", v.npc)?;
    writeln!(out, "theorem2_applicable={}", v.theorem2_applicable)?;
    for r in &v.reasons {
        writeln!(out, "  {}: {}", r.clause, r.witness)?;
    }
    Ok(v.theorem2_applicable)
}

/// Presentation whose relators are the words the faces read, so the
/// boundary-word check passes by construction.
fn face_presentation(s: &SurfaceDiagram) -> Result<Presentation, Failure> {
    let mut names: Vec<String> = Vec::new();
    for e in &s.edges {
        if !names.contains(&e.label) {
            names.push(e.label.clone());
        }
    }
    let mut relators = Vec::new();
    for f in 0..s.faces.len() {
        let letters = s
            .face_word(f)
            .into_iter()
            .map(|(label, inverse)| Letter { generator: names.iter().position(|n| n == label).unwrap(), inverse })
            .collect();
        let w = Word::new(letters);
        let w = if s.faces[f].sign == Sign::Minus { w.inverse() } else { w };
        if !relators.contains(&w) {
            relators.push(w);
        }
    }
    Ok(Presentation::new(names, relators)?)
}

fn audit(cli: &Cli, out: &mut dyn Write, path: &str, against: Option<&str>, powers: &[(String, i64)]) -> Outcome {
    let s = SurfaceDiagram::from_json(&read_input(path)?)?;
    let p = match against {
        Some(file) => read_group(file, powers)?,
        None => face_presentation(&s)?,
    };
    audit_diagram(cli, out, &s, &p)
}

fn audit_diagram(cli: &Cli, out: &mut dyn Write, s: &SurfaceDiagram, p: &Presentation) -> Outcome {
    let report = validate_diagram(s, p);
    let curvature = if report.valid {
        AngleAssignment::paper_scheme(s).ok().and_then(|a| curvature_report(s, &a).ok())
    } else {
        None
    };
    let pairs = if report.valid && report.closed { find_cancellation_pairs(s) } else { Vec::new() };
    let ok = report.valid && curvature.as_ref().is_none_or(|c| c.gauss_bonnet_holds);
    if cli.json {
        emit_json(out, &json!({ "validation": report, "curvature": curvature, "cancellation_pairs": pairs }))?;
        return Ok(ok);
    }
    writeln!(out, "V={} E={} F={} chi={}", s.vertex_count, s.edges.len(), s.faces.len(), s.euler_characteristic())?;
    writeln!(out, "valid: {}  closed: {}", report.valid, report.closed)?;
    for f in &report.failures {
        writeln!(out, "  failure: {f:?}")?;
    }
    match &curvature {
        Some(c) => writeln!(out, "{c}")?,
        None if report.valid => writeln!(out, "curvature: faces are not all squares or power cells")?,
        None => {}
    }
    if report.valid && report.closed {
        writeln!(out, "cancellation pairs: {}", pairs.len())?;
    }
    Ok(ok)
}
