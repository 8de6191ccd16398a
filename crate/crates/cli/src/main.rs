//! `pointfree`: command-line access to spectra, dual maps, adjoints,
//! property checks, the open-map verification sweep, the infinite
//! counterexample, poset enumeration and Graphviz export.
//!
//! Exit codes: 0 when every check passed, 1 when a property failed (a
//! witness is printed), 2 for usage or input errors.

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use pointfree::dot::poset_dot;
use pointfree::duality::dual_of_hom;
use pointfree::enumerate::{all_posets, frames_up_to, MAX_CATALOG_SIZE};
use pointfree::fixtures;
use pointfree::json::{self, MapJson, PosetJson, SpectrumJson, WitnessPair};
use pointfree::jt::{jt_reports, subfit_openness_check, subfit_dual_check, JtReport};
use pointfree::omega;
use pointfree::sublocales::{open_localic_map, Openness};
use pointfree::{BitSet, Error, Frame, LatticeMap, MonotoneMap, Poset};

#[derive(Parser)]
#[command(name = "pointfree", version, about = "Finite frames, their Priestley duals, and open localic maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prime spectrum of a frame.
    Spectrum(InputArg),
    /// Print the dual monotone map of a frame homomorphism.
    DualHom(InputArg),
    /// Print the right and left adjoints of a monotone map between frames.
    Adjoints(InputArg),
    /// Test one property of a frame or map.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[command(flatten)]
        input: InputArg,
    },
    /// Check every characterization of open localic maps on every
    /// homomorphism between catalog frames.
    VerifyJt {
        /// Largest dual poset size to include (1..=7).
        #[arg(long, default_value_t = 4)]
        max_dual_size: usize,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Check that subfitness matches density of minimal points, and the
    /// openness criterion for homomorphisms out of subfit frames.
    Subfit {
        #[command(flatten)]
        input: InputArg,
        /// Frames to use as codomains; defaults to the catalog up to size 3.
        #[arg(long)]
        targets_up_to: Option<usize>,
    },
    /// Verify the infinite counterexample.
    Counterexample {
        /// Exception bound for the exhaustive sweep.
        #[arg(long, default_value_t = 6)]
        bound: u64,
        /// Write a Graphviz diagram of the first levels here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Levels drawn in the diagram.
        #[arg(long, default_value_t = 6)]
        levels: u64,
    },
    /// Stream posets or frames of one size, one per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Render a poset, or a frame's spectrum, as a Graphviz Hasse diagram.
    ExportDot {
        #[command(flatten)]
        input: InputArg,
        /// Render the prime spectrum of the input frame instead.
        #[arg(long)]
        spectrum: bool,
        /// Comma-separated element indices to highlight.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<usize>,
        /// With --spectrum: highlight the Stone image of this frame element.
        #[arg(long, requires = "spectrum")]
        stone: Option<usize>,
    },
}

#[derive(Args)]
struct InputArg {
    /// JSON file, `-` for stdin, or a built-in such as `b4`, `c3`,
    /// `chain:5`, `boolean:3`.
    input: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EnumerateArgs {
    #[arg(long)]
    posets: Option<usize>,
    #[arg(long)]
    frames: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// The map preserves finite meets and all joins.
    FrameHom,
    /// The map is the right adjoint of a frame homomorphism.
    Localic,
    /// The localic map sends open sublocales to open sublocales.
    Open,
    /// The homomorphism preserves all meets and implication.
    Heyting,
    /// The homomorphism has a left adjoint satisfying Frobenius.
    Frobenius,
    /// The frame is subfit.
    Subfit,
    /// The monotone map between posets is a p-morphism.
    Pmorphism,
}

/// Command failure: either bad input (exit 2) or an unexpected library
/// error, classified by kind.
struct Failure(Error);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(Error::PreconditionFailed(format!("i/o: {e}")))
    }
}

fn is_input_error(e: &Error) -> bool {
    use Error::*;
    matches!(
        e,
        NotSquare { .. }
            | IndexOutOfRange { .. }
            | LabelCount { .. }
            | DuplicateLabel(_)
            | NotReflexive(_)
            | NotAntisymmetric(..)
            | NotTransitive(..)
            | EmptyLattice
            | NoMeet(..)
            | NoJoin(..)
            | NotDistributive(..)
            | TableLength { .. }
            | NotMonotone(..)
            | Incompatible
            | FrameTooLarge { .. }
            | SizeRefused { .. }
            | Json { .. }
            | PreconditionFailed(_)
    )
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(Failure(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 1 })
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Spectrum(input) => spectrum(&input.input, out),
        Command::DualHom(input) => dual_hom(&input.input, out),
        Command::Adjoints(input) => adjoints(&input.input, out),
        Command::Check { property, input } => check(property, &input.input, out),
        Command::VerifyJt { max_dual_size, workers } => verify_jt(max_dual_size, workers, out),
        Command::Subfit { input, targets_up_to } => subfit(&input.input, targets_up_to.unwrap_or(3), out),
        Command::Counterexample { bound, dot, levels } => counterexample(bound, dot, levels, out),
        Command::Enumerate(args) => enumerate(args, out),
        Command::ExportDot { input, spectrum, highlight, stone } => {
            export_dot(&input.input, spectrum, highlight, stone, out)
        }
    }
}

// ---------------------------------------------------------------------------
// Input.

fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(input).map_err(|e| Failure(Error::PreconditionFailed(format!("cannot read {input}: {e}"))))
}

fn builtin_frame(name: &str) -> Option<Frame> {
    let sized = |prefix: &str| name.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok());
    match name {
        "c2" => Some(fixtures::c2()),
        "c3" => Some(fixtures::c3()),
        "b4" => Some(fixtures::b4()),
        _ => {
            if let Some(n) = sized("chain:").filter(|&n| (1..=64).contains(&n)) {
                Some(fixtures::chain_frame(n))
            } else {
                sized("boolean:").filter(|&k| k <= 6).map(fixtures::boolean_frame)
            }
        }
    }
}

fn load_poset(input: &str) -> Result<Poset, Failure> {
    if let Some(frame) = builtin_frame(input) {
        return Ok(frame.poset().clone());
    }
    match input {
        "m3" => return Ok(fixtures::m3()),
        "n5" => return Ok(fixtures::n5()),
        _ => {}
    }
    Ok(json::parse_poset(&read_text(input)?)?)
}

fn load_frame(input: &str) -> Result<Frame, Failure> {
    if let Some(frame) = builtin_frame(input) {
        return Ok(frame);
    }
    Ok(Frame::from_poset(load_poset(input)?)?)
}

/// Source, target and table of a map file.
fn load_map(input: &str) -> Result<(PosetJson, PosetJson, Vec<usize>), Failure> {
    let map: MapJson = json::parse(&read_text(input)?)?;
    Ok((map.source, map.target, map.table))
}

fn load_frame_map(input: &str) -> Result<(Frame, Frame, Vec<usize>), Failure> {
    let (s, t, table) = load_map(input)?;
    Ok((s.to_frame()?, t.to_frame()?, table))
}

fn line(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("serializable");
    writeln!(out, "{text}")?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Commands.

fn spectrum(input: &str, out: &mut impl Write) -> Outcome {
    let frame = load_frame(input)?;
    line(out, &SpectrumJson::from_space(frame.spectrum()?))?;
    Ok(true)
}

fn dual_hom(input: &str, out: &mut impl Write) -> Outcome {
    let (l, m, table) = load_frame_map(input)?;
    let h = LatticeMap::new(&l, &m, table)?;
    if !h.is_frame_hom() {
        eprintln!("frame-hom: false");
        return Ok(false);
    }
    let f = dual_of_hom(&h)?;
    let map = MapJson {
        source: PosetJson::from_poset(f.source()),
        target: PosetJson::from_poset(f.target()),
        table: f.table().to_vec(),
    };
    line(out, &map)?;
    Ok(true)
}

#[derive(Serialize)]
struct AdjointsJson {
    right: Option<Vec<usize>>,
    left: Option<Vec<usize>>,
}

fn adjoints(input: &str, out: &mut impl Write) -> Outcome {
    let (l, m, table) = load_frame_map(input)?;
    let h = LatticeMap::new(&l, &m, table)?;
    let right = match h.right_adjoint() {
        Ok(r) => Some(r.table().to_vec()),
        Err(Error::NotJoinPreserving) => None,
        Err(e) => return Err(e.into()),
    };
    let left = h.left_adjoint().map(|g| g.table().to_vec());
    line(out, &AdjointsJson { right, left })?;
    Ok(true)
}

fn verdict(out: &mut impl Write, name: &str, ok: bool, witness: Option<String>) -> Outcome {
    writeln!(out, "{name}: {ok}")?;
    if let Some(w) = witness.filter(|_| !ok) {
        writeln!(out, "witness: {w}")?;
    }
    Ok(ok)
}

fn pair_json(p: (usize, usize)) -> String {
    serde_json::to_string(&WitnessPair::from(p)).expect("serializable")
}

fn check(property: Property, input: &str, out: &mut impl Write) -> Outcome {
    match property {
        Property::Subfit => {
            let frame = load_frame(input)?;
            let witness = frame.subfit_witness();
            verdict(out, "subfit", witness.is_none(), witness.map(pair_json))
        }
        Property::Pmorphism => {
            let (s, t, table) = load_map(input)?;
            let (x, y) = (s.to_poset()?, t.to_poset()?);
            let f = MonotoneMap::new(&x, &y, table)?;
            let witness = f.pmorphism_witness();
            verdict(out, "pmorphism", witness.is_none(), witness.map(|p| format!("{{\"point\":{p}}}")))
        }
        Property::FrameHom => {
            let (l, m, table) = load_frame_map(input)?;
            let h = LatticeMap::new(&l, &m, table)?;
            verdict(out, "frame-hom", h.is_frame_hom(), None)
        }
        Property::Localic => {
            let (l, m, table) = load_frame_map(input)?;
            let r = LatticeMap::new(&l, &m, table)?;
            verdict(out, "localic", r.is_localic_map(), None)
        }
        Property::Open => {
            let (l, m, table) = load_frame_map(input)?;
            let r = LatticeMap::new(&l, &m, table)?;
            if !r.is_localic_map() {
                writeln!(out, "localic: false")?;
                return Ok(false);
            }
            match open_localic_map(&r)? {
                Openness::Open { .. } => verdict(out, "open", true, None),
                Openness::NotOpen { a } => verdict(out, "open", false, Some(format!("{{\"a\":{a}}}"))),
            }
        }
        Property::Heyting => {
            let (l, m, table) = load_frame_map(input)?;
            let h = LatticeMap::new(&l, &m, table)?;
            let ok = h.is_complete_heyting_hom();
            verdict(out, "heyting", ok, h.heyting_witness().map(pair_json))
        }
        Property::Frobenius => {
            let (l, m, table) = load_frame_map(input)?;
            let h = LatticeMap::new(&l, &m, table)?;
            match h.left_adjoint() {
                None => verdict(out, "frobenius", false, Some("no left adjoint".into())),
                Some(left) => {
                    let witness = h.frobenius_witness(&left)?;
                    verdict(out, "frobenius", witness.is_none(), witness.map(pair_json))
                }
            }
        }
    }
}

#[derive(Serialize, Default)]
struct JtSummary {
    max_dual_size: usize,
    frames: usize,
    pairs: usize,
    instances: usize,
    violations: usize,
    all_true: usize,
    all_false: usize,
    all_true_non_identity: usize,
}

fn verify_jt(max_dual_size: usize, workers: Option<usize>, out: &mut impl Write) -> Outcome {
    if max_dual_size == 0 || max_dual_size > MAX_CATALOG_SIZE {
        return Err(Error::SizeRefused { n: max_dual_size, max: MAX_CATALOG_SIZE }.into());
    }
    let start = Instant::now();
    let frames = frames_up_to(max_dual_size)?;
    let pairs: Vec<(usize, usize)> =
        (0..frames.len()).flat_map(|i| (0..frames.len()).map(move |j| (i, j))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::PreconditionFailed(format!("thread pool: {e}")))?;

    let mut summary = JtSummary { max_dual_size, frames: frames.len(), pairs: pairs.len(), ..Default::default() };
    // Chunks are evaluated in parallel and written in pair order, so the
    // stream does not depend on the worker count.
    for chunk in pairs.chunks(64) {
        let results: Vec<Result<Vec<JtReport>, Error>> = pool.install(|| {
            chunk.par_iter().map(|&(i, j)| jt_reports(&frames[i], &frames[j], (i, j))).collect()
        });
        for reports in results {
            for report in reports? {
                summary.instances += 1;
                if !report.is_consistent() {
                    summary.violations += 1;
                }
                let flags = report.flags();
                if flags.iter().all(|&b| b) {
                    summary.all_true += 1;
                    let identity = report.instance.source == report.instance.target
                        && report.instance.hom.iter().enumerate().all(|(i, &v)| i == v);
                    if !identity {
                        summary.all_true_non_identity += 1;
                    }
                } else if flags.iter().all(|&b| !b) {
                    summary.all_false += 1;
                }
                line(out, &report)?;
            }
        }
    }
    line(out, &serde_json::json!({ "summary": &summary }))?;
    eprintln!(
        "verify-jt: {} frames, {} pairs, {} homomorphisms, {} violations ({} all-true, {} all-false) in {:.2?}",
        summary.frames,
        summary.pairs,
        summary.instances,
        summary.violations,
        summary.all_true,
        summary.all_false,
        start.elapsed()
    );
    Ok(summary.violations == 0)
}

fn subfit(input: &str, targets_up_to: usize, out: &mut impl Write) -> Outcome {
    let frame = load_frame(input)?;
    let subfit = subfit_dual_check(&frame)?;
    let x = frame.spectrum()?.poset();
    writeln!(out, "subfit: {subfit}")?;
    writeln!(out, "min-dense: {}", x.min_elements() == x.whole())?;
    if !subfit {
        if let Some(w) = frame.subfit_witness() {
            writeln!(out, "witness: {}", pair_json(w))?;
        }
        return Ok(false);
    }
    let targets = frames_up_to(targets_up_to)?;
    for target in &targets {
        subfit_openness_check(&frame, target)?;
    }
    writeln!(out, "open-iff-complete: true ({} codomains)", targets.len())?;
    Ok(true)
}

fn counterexample(bound: u64, dot: Option<PathBuf>, levels: u64, out: &mut impl Write) -> Outcome {
    let start = Instant::now();
    let report = match omega::check_counterexample(bound) {
        Ok(report) => report,
        Err(e @ Error::CounterexampleViolation(_)) => {
            writeln!(out, "FAIL: {e}")?;
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "order: {}", report.order_reading)?;
    writeln!(out, "witness U = {}", report.witness.u)?;
    writeln!(out, "  U open: {}   U upset: {}", report.witness.u_open, report.witness.u_upset)?;
    writeln!(out, "  f[U] = {}", report.witness.image)?;
    writeln!(out, "  f[U] open: {}", report.witness.image_open)?;
    writeln!(out, "clopen upset shapes:")?;
    for row in &report.shapes {
        writeln!(
            out,
            "  {:<70} -> {:<18} clopen upset: {}  (swept: {})",
            row.shape, row.image, row.image_clopen_upset, row.instances
        )?;
    }
    writeln!(
        out,
        "sweep (exceptions <= {}): {} subsets of X, {} of Y; {} open upsets of X, {} of Y, {} clopen upsets of X",
        report.bound, report.x_sets_swept, report.y_sets_swept, report.x_open_upsets, report.y_open_upsets, report.clopen_upsets
    )?;
    writeln!(out, "min X = {}", report.min_x)?;
    writeln!(out, "min Y = {}   dense: {}", report.min_y, report.min_y_dense)?;
    writeln!(out, "{}", if report.pass { "PASS" } else { "FAIL" })?;
    if let Some(path) = dot {
        std::fs::write(&path, omega::diagram_dot(levels))?;
    }
    eprintln!("counterexample: checked in {:.2?}", start.elapsed());
    Ok(report.pass)
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let (n, frames) = match (args.posets, args.frames) {
        (Some(n), _) => (n, false),
        (None, Some(n)) => (n, true),
        (None, None) => unreachable!("clap requires one"),
    };
    let catalog = all_posets(n)?;
    for poset in &catalog.representatives {
        if frames {
            let frame = pointfree::clopup_frame(poset).into_frame();
            line(out, &PosetJson::from_poset(frame.poset()))?;
        } else {
            line(out, &PosetJson::from_poset(poset))?;
        }
    }
    eprintln!("{} {} of size {n}", catalog.representatives.len(), if frames { "frames with dual" } else { "posets" });
    Ok(true)
}

fn export_dot(input: &str, spectrum: bool, highlight: Vec<usize>, stone: Option<usize>, out: &mut impl Write) -> Outcome {
    let (poset, name) = if spectrum {
        let frame = load_frame(input)?;
        (frame.spectrum()?.poset().clone(), "spectrum")
    } else {
        (load_poset(input)?, "poset")
    };
    let n = poset.len();
    let mut sets = Vec::new();
    if !highlight.is_empty() {
        if let Some(&bad) = highlight.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n }.into());
        }
        let set = BitSet::from_indices(n, highlight.iter().copied());
        if !poset.is_upset(&set) {
            eprintln!("note: highlighted set is not an upset");
        }
        sets.push(set);
    }
    if let Some(a) = stone {
        let frame = load_frame(input)?;
        if a >= frame.len() {
            return Err(Error::IndexOutOfRange { index: a, n: frame.len() }.into());
        }
        sets.push(frame.spectrum()?.stone(a).clone());
    }
    write!(out, "{}", poset_dot(&poset, name, &sets))?;
    Ok(true)
}
