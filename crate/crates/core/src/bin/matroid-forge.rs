use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use matroid_forge::erection::{enumerate_erections, free_erection};
use matroid_forge::format::{parse_matrix, parse_matroid, serialize_matroid};
use matroid_forge::minor::{find_minor, realizability_obstruction};
use matroid_forge::polynomial::{characteristic_polynomial, splits_over_integers};
use matroid_forge::repro::{self, DataSet};
use matroid_forge::{Error, ExactMatrix, Matroid, SearchBudget, Subset};

#[derive(Parser)]
#[command(name = "matroid-forge", version, about = "Exact matroid erections, formality and minors")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on the bundled data.
    Reproduce {
        /// Directory holding the data files.
        #[arg(long)]
        data: Option<PathBuf>,
        /// Add wall-clock times.
        #[arg(long)]
        timing: bool,
    },
    /// Parse and validate a matroid file.
    Validate { matroid: PathBuf },
    /// List the flats of one rank.
    Flats {
        matroid: PathBuf,
        #[arg(long)]
        rank: usize,
        /// Keep only flats with more than this many elements.
        #[arg(long)]
        min_size: Option<usize>,
    },
    /// Enumerate erections.
    Erect {
        matroid: PathBuf,
        #[command(flatten)]
        mode: ErectMode,
    },
    /// Formality of the arrangement given by a matrix.
    Formality { matrix: PathBuf },
    /// Characteristic polynomial and its integer roots.
    Charpoly { matroid: PathBuf },
    /// Search for `target` as a minor of `host`.
    Minor { host: PathBuf, target: PathBuf },
    /// Fano and non-Fano minors and the resulting verdict.
    Obstruction { matroid: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ErectMode {
    /// Every erection, trivial first.
    #[arg(long)]
    all: bool,
    /// Only the free erection.
    #[arg(long)]
    free: bool,
}

/// Output of a command: text, JSON, and whether it reports success.
struct Output {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path.display().to_string()))
}

fn load_matroid(path: &Path) -> Result<Matroid, Error> {
    parse_matroid(&read(path)?).map_err(|e| e.in_file(path.display().to_string()))
}

fn load_matrix(path: &Path) -> Result<ExactMatrix, Error> {
    parse_matrix(&read(path)?).map_err(|e| e.in_file(path.display().to_string()))
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| i.to_string() + "\n").collect()
}

fn reproduce(data: Option<PathBuf>, timing: bool, budget: SearchBudget) -> Result<Output, Error> {
    let default_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let data = match data {
        Some(dir) => DataSet::load(&dir)?,
        None if default_dir.is_dir() => DataSet::load(&default_dir)?,
        None => DataSet::bundled()?,
    };
    let report = repro::run(&data, budget);
    Ok(Output {
        text: report.render(timing),
        json: report.to_json(timing),
        ok: report.passed(),
    })
}

fn validate(path: &Path) -> Result<Output, Error> {
    let text = read(path)?;
    let m = match parse_matroid(&text) {
        Ok(m) => m,
        Err(e) if !e.is_input_error() => {
            return Ok(Output {
                text: format!("invalid: {e}\n"),
                json: json!({ "valid": false, "error": e.to_string() }),
                ok: false,
            });
        }
        Err(e) => return Err(e.in_file(path.display().to_string())),
    };
    let flats = m.nontrivial_flats();
    let text = format!(
        "valid: n {}, rank {}, {} bases, {} nontrivial flats, {}\n",
        m.ground_size(),
        m.rank(),
        m.bases().len(),
        flats.len(),
        if m.is_simple() { "simple" } else { "not simple" }
    );
    let json = json!({
        "valid": true,
        "n": m.ground_size(),
        "rank": m.rank(),
        "bases": m.bases().len(),
        "simple": m.is_simple(),
        "nontrivial_flats": flats,
    });
    Ok(Output::ok(text, json))
}

fn flats(path: &Path, rank: usize, min_size: Option<usize>) -> Result<Output, Error> {
    let m = load_matroid(path)?;
    if rank > m.rank() {
        return Err(Error::Validation(format!("rank {rank} exceeds the matroid rank {}", m.rank())));
    }
    let flats: Vec<Subset> = match min_size {
        Some(s) => m.flats_at_larger_than(rank, s),
        None => m.flats_at(rank),
    };
    let json = json!({ "rank": rank, "min_size": min_size, "flats": flats });
    Ok(Output::ok(lines(&flats), json))
}

fn erect(path: &Path, mode: &ErectMode, budget: SearchBudget) -> Result<Output, Error> {
    let m = load_matroid(path)?;
    if mode.free {
        let e = free_erection(&m, budget)?;
        let json = json!({ "rank": e.rank(), "bases": e.bases().len(), "nontrivial_flats": e.nontrivial_flats() });
        return Ok(Output::ok(serialize_matroid(&e), json));
    }
    let family = enumerate_erections(&m, budget)?;
    let maximum = family.maximum();
    let mut text = format!(
        "{} erections from {} candidate blocks\n",
        family.len(),
        family.candidates().len()
    );
    let mut entries = Vec::new();
    for (i, e) in family.erections().iter().enumerate() {
        let role = match (i, Some(i) == maximum) {
            (0, true) => "trivial, free",
            (0, false) => "trivial",
            (_, true) => "free",
            _ => "nontrivial",
        };
        text += &format!(
            "erection {i}: rank {}, {} bases, {} blocks ({role})\n",
            e.matroid.rank(),
            e.matroid.bases().len(),
            e.blocks.len()
        );
        for b in e.blocks.blocks() {
            text += &format!("  block {b}\n");
        }
        entries.push(json!({
            "role": role,
            "rank": e.matroid.rank(),
            "bases": e.matroid.bases().len(),
            "blocks": e.blocks.blocks(),
        }));
    }
    let json = json!({ "candidates": family.candidates(), "erections": entries, "weak_order": family.weak_order() });
    Ok(Output::ok(text, json))
}

fn formality(path: &Path) -> Result<Output, Error> {
    let a = load_matrix(path)?;
    for column in a.zero_columns() {
        eprintln!("warning: column {column} is the zero functional");
    }
    let r = a.formality_report()?;
    let text = format!(
        "hyperplanes          {}\ndim ker              {}\ndim F                {}\nrank                 {}\nformalization rank   {}\nverdict              {}\n",
        r.hyperplanes,
        r.kernel_dim,
        r.weight3_dim,
        r.rank,
        r.formalization_rank,
        if r.formal { "formal" } else { "not formal" }
    );
    Ok(Output::ok(text, serde_json::to_value(&r).expect("report serializes")))
}

fn charpoly(path: &Path) -> Result<Output, Error> {
    let m = load_matroid(path)?;
    let chi = characteristic_polynomial(&m);
    let roots = splits_over_integers(&chi);
    let roots_text = match &roots {
        Some(r) => r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        None => "none".into(),
    };
    let text = format!("chi(t) = {chi}\ninteger roots: {roots_text}\n");
    let json = json!({
        "polynomial": chi.to_string(),
        "coefficients": chi,
        "integer_roots": roots.map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    });
    Ok(Output::ok(text, json))
}

fn minor(host: &Path, target: &Path, budget: SearchBudget) -> Result<Output, Error> {
    let h = load_matroid(host)?;
    let t = load_matroid(target)?;
    Ok(match find_minor(&h, &t, budget)? {
        Some(w) => Output::ok(format!("minor: {w}\n"), json!({ "found": true, "witness": w })),
        None => Output {
            text: "not a minor\n".into(),
            json: json!({ "found": false }),
            ok: false,
        },
    })
}

fn obstruction(path: &Path, budget: SearchBudget) -> Result<Output, Error> {
    let m = load_matroid(path)?;
    let report = realizability_obstruction(&m, budget)?;
    let show = |w: &Option<matroid_forge::MinorWitness>| match w {
        Some(w) => w.to_string(),
        None => "none".into(),
    };
    let text = format!(
        "F7:      {}\nF7-:     {}\nverdict: {}\n",
        show(&report.fano),
        show(&report.non_fano),
        report.verdict
    );
    Ok(Output::ok(text, serde_json::to_value(&report).expect("report serializes")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = SearchBudget::from_env();
    let result = match cli.command {
        Command::Reproduce { data, timing } => reproduce(data, timing, budget),
        Command::Validate { matroid } => validate(&matroid),
        Command::Flats {
            matroid,
            rank,
            min_size,
        } => flats(&matroid, rank, min_size),
        Command::Erect { matroid, mode } => erect(&matroid, &mode, budget),
        Command::Formality { matrix } => formality(&matrix),
        Command::Charpoly { matroid } => charpoly(&matroid),
        Command::Minor { host, target } => minor(&host, &target, budget),
        Command::Obstruction { matroid } => obstruction(&matroid, budget),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let input = e.is_input_error()
                || matches!(&e, Error::File { .. })
                || matches!(&e, Error::Validation(_) | Error::ZeroFunctional { .. } | Error::TargetNotSimple);
            ExitCode::from(if input { 2 } else { 1 })
        }
    }
}
