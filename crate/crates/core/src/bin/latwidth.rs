use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use latwidth::bounds::{
    point_bound_report, point_bound_witness, volume_bound_report, volume_bound_witness, BoundReport,
};
use latwidth::classify::{enumerate_with_stats, Enumeration, ENUMERATION_LIMIT};
use latwidth::io::parse_polygon;
use latwidth::oracle::{brute_force_minimal_jobs, OracleClass, ORACLE_LIMIT};
use latwidth::svg::{render, PlotOptions};
use latwidth::{
    are_equivalent, classify_polygon, embed_in_square, four_direction_quadrangle,
    is_inscribed_in_hexagon, is_minimal, lattice_size_square, lattice_width, Classification,
    Direction, Point, Polygon, Tag, TypeParams, UnimodularMap,
};

/// Largest `d` accepted on the command line.
const MAX_D: i64 = 1000;
/// Largest bounding box (in lattice points) scanned for lattice points.
const SCAN_LIMIT: i64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "latwidth",
    version,
    about = "Lattice width, minimality and classification of lattice polygons"
)]
struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "LATWIDTH_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice width, width directions and lattice size.
    Width(PolygonArgs),
    /// Lattice size with respect to the unit square, with a witness map.
    LatticeSize(PolygonArgs),
    /// Decide inclusion-minimality.
    Minimal(PolygonArgs),
    /// Identify the family and parameters of a minimal polygon.
    Classify(PolygonArgs),
    /// List all minimal polygons of width d up to equivalence.
    Enumerate(EnumerateArgs),
    /// Check the bounds and structural properties over a range of widths.
    Verify(VerifyArgs),
    /// Draw a polygon as SVG.
    Plot(PlotArgs),
}

#[derive(Args)]
struct PolygonArgs {
    /// Polygon file: {"vertices": [[x, y], ...]}.
    input: PathBuf,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    d: i64,
    /// Also run the brute-force oracle (d <= 4) and diff the class lists.
    #[arg(long)]
    oracle: bool,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Oracle class list; defaults to <output>.oracle.json.
    #[arg(long)]
    oracle_output: Option<PathBuf>,
    /// Key diff between the two lists; defaults to <output>.diff.json.
    #[arg(long)]
    diff_output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Single width; shorthand for --from d --to d.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    d: Option<i64>,
    #[arg(long, default_value_t = 2)]
    from: i64,
    #[arg(long, default_value_t = 4)]
    to: i64,
    /// Compare against the brute-force oracle where d <= 4.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct PlotArgs {
    input: PathBuf,
    /// Draw the hexagon H_l (dashed).
    #[arg(long)]
    hexagon: Option<i64>,
    /// Side of the outlined square; defaults to the lattice width.
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Usage>;

fn read_polygon(path: &Path) -> Result<Polygon, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_polygon(&text)?)
}

fn check_scan_size(p: &Polygon) -> Result<(), Usage> {
    let (lo, hi) = p.bounding_box();
    let cells = (hi.x - lo.x + 1).saturating_mul(hi.y - lo.y + 1);
    if cells > SCAN_LIMIT {
        return Err(Usage(format!(
            "bounding box holds {cells} lattice points; the limit is {SCAN_LIMIT}"
        )));
    }
    Ok(())
}

fn check_d(d: i64) -> Result<(), Usage> {
    if !(0..=MAX_D).contains(&d) {
        return Err(Usage(format!("d must lie in 0..={MAX_D}, got {d}")));
    }
    Ok(())
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Usage> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> CmdResult {
    println!("{}", serde_json::to_string(value)?);
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct WidthOut {
    lw: i64,
    directions: Vec<Direction>,
    ls_square: i64,
}

fn cmd_width(args: &PolygonArgs) -> CmdResult {
    let p = read_polygon(&args.input)?;
    let w = lattice_width(&p);
    print_json(&WidthOut {
        lw: w.width,
        directions: w.directions,
        ls_square: lattice_size_square(&p).size,
    })
}

#[derive(Serialize)]
struct SizeOut {
    ls_square: i64,
    lw: i64,
    embeds: bool,
    witness: UnimodularMap,
}

fn cmd_lattice_size(args: &PolygonArgs) -> CmdResult {
    let p = read_polygon(&args.input)?;
    let s = lattice_size_square(&p);
    let lw = lattice_width(&p).width;
    print_json(&SizeOut {
        ls_square: s.size,
        lw,
        embeds: s.size == lw,
        witness: s.witness,
    })
}

#[derive(Serialize)]
struct MinimalOut {
    minimal: bool,
    width: i64,
    offending_vertex: Option<Point>,
}

fn cmd_minimal(args: &PolygonArgs) -> CmdResult {
    let p = read_polygon(&args.input)?;
    check_scan_size(&p)?;
    let r = is_minimal(&p);
    print_json(&MinimalOut {
        minimal: r.is_minimal,
        width: r.width,
        offending_vertex: r.offending_vertex,
    })
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    minimal: bool,
    d: i64,
    tag: Option<Tag>,
    params: Option<&'a TypeParams>,
    key: &'a str,
    point_count: Option<usize>,
    doubled_area: Option<i64>,
    representative: Option<Vec<Point>>,
    /// Maps the input polygon onto the representative.
    witness: Option<UnimodularMap>,
}

fn cmd_classify(args: &PolygonArgs) -> CmdResult {
    let p = read_polygon(&args.input)?;
    check_scan_size(&p)?;
    match classify_polygon(&p)? {
        Classification::NotMinimal(r) => print_json(&MinimalOut {
            minimal: false,
            width: r.width,
            offending_vertex: r.offending_vertex,
        }),
        Classification::Minimal { class, witness } => print_json(&ClassifyOut {
            minimal: true,
            d: class.d(),
            tag: Some(class.tag()),
            params: Some(&class.params),
            key: class.key(),
            point_count: Some(class.point_count),
            doubled_area: Some(class.doubled_area),
            representative: Some(class.polygon().vertices().to_vec()),
            witness: Some(witness),
        }),
        Classification::Unlisted { canonical, width } => {
            print_json(&ClassifyOut {
                minimal: true,
                d: width,
                tag: None,
                params: None,
                key: canonical.key(),
                point_count: None,
                doubled_area: None,
                representative: None,
                witness: None,
            })?;
            eprintln!("minimal polygon missing from the enumeration table");
            Ok(ExitCode::from(1))
        }
    }
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}"))
}

#[derive(Serialize)]
struct KeyDiff {
    only_in_enumeration: Vec<String>,
    only_in_oracle: Vec<String>,
}

impl KeyDiff {
    fn new(enumeration: &Enumeration, oracle: &[OracleClass]) -> Self {
        let a: BTreeSet<&str> = enumeration.classes.iter().map(|c| c.key()).collect();
        let b: BTreeSet<&str> = oracle.iter().map(|c| c.key.as_str()).collect();
        KeyDiff {
            only_in_enumeration: a.difference(&b).map(|s| s.to_string()).collect(),
            only_in_oracle: b.difference(&a).map(|s| s.to_string()).collect(),
        }
    }

    fn is_empty(&self) -> bool {
        self.only_in_enumeration.is_empty() && self.only_in_oracle.is_empty()
    }
}

fn report_stats(e: &Enumeration) {
    for (tag, s) in &e.stats {
        eprintln!(
            "{tag}: {} tuples, {} wrong width, {} not minimal, {} collisions, {} classes",
            s.tuples, s.wrong_width, s.not_minimal, s.collisions, s.classes
        );
    }
    eprintln!("d={}: {} classes", e.d, e.classes.len());
}

fn cmd_enumerate(args: &EnumerateArgs, jobs: usize) -> CmdResult {
    check_d(args.d)?;
    if args.oracle && args.d > ORACLE_LIMIT {
        return Err(Usage(format!("--oracle needs d <= {ORACLE_LIMIT}")));
    }
    let e = enumerate_with_stats(args.d, jobs)?;
    report_stats(&e);
    emit(
        args.output.as_deref(),
        &(serde_json::to_string_pretty(&e.classes)? + "\n"),
    )?;
    if !args.oracle {
        return Ok(ExitCode::SUCCESS);
    }

    let oracle = brute_force_minimal_jobs(args.d, jobs)?;
    let diff = KeyDiff::new(&e, &oracle);
    let oracle_path = args
        .oracle_output
        .clone()
        .or_else(|| args.output.as_deref().map(|p| sibling(p, "oracle.json")));
    let diff_path = args
        .diff_output
        .clone()
        .or_else(|| args.output.as_deref().map(|p| sibling(p, "diff.json")));
    if let Some(p) = oracle_path {
        emit(Some(&p), &(serde_json::to_string_pretty(&oracle)? + "\n"))?;
    }
    if let Some(p) = diff_path {
        emit(Some(&p), &(serde_json::to_string_pretty(&diff)? + "\n"))?;
    }
    if diff.is_empty() {
        eprintln!("oracle: {} classes, no difference", oracle.len());
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "oracle: {} keys only in the enumeration, {} only in the oracle",
            diff.only_in_enumeration.len(),
            diff.only_in_oracle.len()
        );
        Ok(ExitCode::from(1))
    }
}

struct Checks {
    failed: bool,
}

impl Checks {
    fn line(&mut self, ok: bool, d: i64, name: &str, detail: String) {
        self.failed |= !ok;
        eprintln!(
            "{} d={d} {name}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
}

fn bound_line(
    checks: &mut Checks,
    r: &BoundReport,
    witness: String,
    relation: &str,
) -> Result<(), Usage> {
    let ok = r.holds && r.is_sharp() && r.witnesses.contains(&witness);
    checks.line(
        ok,
        r.d,
        r.bound,
        format!(
            "{} {relation} bound {}, expected witness {}",
            r.achieved_max_or_min,
            r.bound_value,
            if r.witnesses.contains(&witness) {
                "attains it"
            } else {
                "missing"
            }
        ),
    );
    println!("{}", serde_json::to_string(r)?);
    Ok(())
}

fn verify_width(d: i64, oracle: bool, jobs: usize, checks: &mut Checks) -> Result<(), Usage> {
    let e = enumerate_with_stats(d, jobs)?;
    let classes = &e.classes;
    let polys: Vec<Polygon> = classes.iter().map(|c| c.polygon()).collect();

    if d >= 2 {
        bound_line(
            checks,
            &point_bound_report(d, classes)?,
            point_bound_witness(d)?,
            "=",
        )?;
    } else {
        eprintln!("SKIP d={d} lattice-points: bound not applicable for d <= 1");
    }
    if d >= 1 {
        bound_line(
            checks,
            &volume_bound_report(d, classes)?,
            volume_bound_witness(d)?,
            "=",
        )?;
    }

    let size_ok = polys.iter().all(|p| {
        let s = lattice_size_square(p);
        s.size == d
            && embed_in_square(p).is_some_and(|m| {
                p.apply(&m)
                    .map(|q| {
                        q.vertices()
                            .iter()
                            .all(|v| (0..=d).contains(&v.x) && (0..=d).contains(&v.y))
                    })
                    .unwrap_or(false)
            })
    });
    checks.line(
        size_ok,
        d,
        "lattice-size",
        format!("{} classes fit in the square of side d", polys.len()),
    );

    if d >= 1 {
        let two = polys
            .iter()
            .all(|p| lattice_width(p).has_independent_pair());
        checks.line(
            two,
            d,
            "two-directions",
            "every class has independent width directions".into(),
        );
    }

    if d >= 2 && d % 2 == 0 {
        let quad = four_direction_quadrangle(d)?;
        let own = lattice_width(&quad).directions.len() == 4;
        let rigid = polys
            .iter()
            .filter(|p| lattice_width(p).directions.len() >= 4)
            .all(|p| are_equivalent(p, &quad).is_some());
        checks.line(
            own && rigid,
            d,
            "four-directions",
            "classes with >= 4 width directions match the quadrangle".into(),
        );
    }

    let inscribed = classes
        .iter()
        .zip(&polys)
        .filter_map(|(c, p)| c.params.ell().map(|l| (l, p)))
        .all(|(l, p)| is_inscribed_in_hexagon(p, d, l));
    checks.line(
        inscribed,
        d,
        "hexagon",
        "T3/T4/T5 classes are inscribed in their hexagon".into(),
    );

    let counts = classes
        .iter()
        .zip(&polys)
        .all(|(c, p)| p.len() <= c.tag().max_vertices());
    checks.line(
        counts,
        d,
        "vertex-counts",
        "vertex counts within the family formulas".into(),
    );

    let wrong: usize = e.stats.values().map(|s| s.wrong_width).sum();
    let not_minimal: usize = e.stats.values().map(|s| s.not_minimal).sum();
    eprintln!(
        "INFO d={d} generators: {wrong} tuples with the wrong width, {not_minimal} not minimal"
    );

    if oracle && d <= ORACLE_LIMIT {
        let o = brute_force_minimal_jobs(d, jobs)?;
        let diff = KeyDiff::new(&e, &o);
        checks.line(
            diff.is_empty(),
            d,
            "oracle",
            format!("{} classes vs {} from brute force", classes.len(), o.len()),
        );
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, jobs: usize) -> CmdResult {
    let (from, to) = args.d.map_or((args.from, args.to), |d| (d, d));
    for d in [from, to] {
        check_d(d)?;
        if d > ENUMERATION_LIMIT {
            return Err(Usage(format!("verify supports d <= {ENUMERATION_LIMIT}")));
        }
    }
    let mut checks = Checks { failed: false };
    for d in from..=to {
        verify_width(d, args.oracle, jobs, &mut checks)?;
    }
    Ok(if checks.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_plot(args: &PlotArgs) -> CmdResult {
    let p = read_polygon(&args.input)?;
    check_scan_size(&p)?;
    let d = match args.d {
        Some(d) => d,
        None => lattice_width(&p).width,
    };
    check_d(d)?;
    if let Some(l) = args.hexagon {
        if !(0..=d).contains(&l) {
            return Err(Usage(format!("--hexagon must lie in 0..={d}")));
        }
    }
    let svg = render(
        &p,
        PlotOptions {
            d,
            hexagon: args.hexagon,
        },
    )?;
    emit(args.output.as_deref(), &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let result = match &cli.command {
        Command::Width(a) => cmd_width(a),
        Command::LatticeSize(a) => cmd_lattice_size(a),
        Command::Minimal(a) => cmd_minimal(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Enumerate(a) => cmd_enumerate(a, jobs),
        Command::Verify(a) => cmd_verify(a, jobs),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
