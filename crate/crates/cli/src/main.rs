mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use modlinks::cutting::{
    ab_sequence, ab_sequence_geometric, ab_to_lr, continued_fraction, lr_geometric_oracle,
};
use modlinks::farey::{farey_path, v_orbit};
use modlinks::numfmt::sig12;
use modlinks::psl2z::{field_discriminant, geodesic_length, word_to_matrix};
use modlinks::{
    build_family, census, slope_to_word, volume_length_table, CensusOptions, GeodesicWord, Slope,
};
use serde_json::json;

/// Farey paths, cutting sequences and octahedral link families of slopes on
/// the once-punctured torus.
#[derive(Debug, Parser)]
#[command(name = "modlinks", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form, continued fraction, Farey path length and V-orbit.
    SlopeInfo {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long)]
        json: bool,
    },
    /// AB- and LR-cutting sequences.
    Cutting {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        /// Compare against the exact lattice-line simulation.
        #[arg(long)]
        check: bool,
    },
    /// Canonical LR word of the modular geodesic.
    Word {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Link family of a target slope.
    Family {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        /// Write the family as JSON to FILE (`-` for standard output).
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Families of every Farey path up to the given length, as JSON lines.
    Census {
        #[arg(long)]
        max_x: u32,
        /// Output file; standard output when omitted.
        #[arg(long, value_name = "FILE")]
        jsonl: Option<PathBuf>,
        /// Keep one family of each pair related by exchanging L and R.
        #[arg(long)]
        dedupe_mirror: bool,
    },
    /// Volume and length of the first N geodesics LR(RL)^(k-1), as CSV.
    Table {
        #[arg(long)]
        n: u32,
        /// Output file; standard output when omitted.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Trace, length and discriminant of an LR word.
    Length { word: String },
    /// Farey tessellation in the disk with the path to the slope highlighted.
    SvgPath {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Lattice line of the slope with its A/B crossings and L/R turns.
    SvgLine {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

/// Largest census depth accepted; depth x alone has 2^(x-1) families.
const MAX_CENSUS_DEPTH: u32 = 24;

enum Failure {
    Usage(String),
    Domain(modlinks::Error),
    Io(String, io::Error),
    Mismatch(String),
}

impl From<modlinks::Error> for Failure {
    fn from(e: modlinks::Error) -> Failure {
        Failure::Domain(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(e) if e.is_malformed_input() => 2,
            Failure::Domain(_) => 3,
            Failure::Io(..) | Failure::Mismatch(_) => 1,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Usage(msg) => format!("usage: {msg}"),
            Failure::Domain(e) => format!("{}: {e}", e.reason()),
            Failure::Io(path, e) => format!("io: {path}: {e}"),
            Failure::Mismatch(msg) => format!("oracle-mismatch: {msg}"),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default();
            let first = first.strip_prefix("error: ").unwrap_or(first);
            return fail(Failure::Usage(first.to_string()));
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("error: {}", f.line());
    ExitCode::from(f.exit_code())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::SlopeInfo { slope, json } => slope_info(&parse_slope(&slope)?, json),
        Command::Cutting { slope, check } => cutting(parse_slope(&slope)?, check),
        Command::Word { slope } => {
            let s = route_to_representative(parse_slope(&slope)?, false);
            let word = slope_to_word(s)?;
            emit_stdout(|out| writeln!(out, "{word}"))
        }
        Command::Family { slope, json } => family(parse_slope(&slope)?, json.as_deref()),
        Command::Census {
            max_x,
            jsonl,
            dedupe_mirror,
        } => run_census(max_x, jsonl.as_deref(), dedupe_mirror),
        Command::Table { n, csv } => table(n, csv.as_deref()),
        Command::Length { word } => length(&word),
        Command::SvgPath { slope, out } => {
            let doc = svg::farey_path_svg(parse_slope(&slope)?)?;
            write_output(Some(&out), |w| w.write_all(doc.as_bytes()))
        }
        Command::SvgLine { slope, out } => {
            let doc = svg::lattice_line_svg(parse_slope(&slope)?)?;
            write_output(Some(&out), |w| w.write_all(doc.as_bytes()))
        }
    }
}

fn parse_slope(text: &str) -> Result<Slope, Failure> {
    Ok(text.parse::<Slope>()?)
}

/// Replaces a slope the cutting algorithms cannot take by a member of its
/// V-orbit that they can, announcing the substitution on stderr.
fn route_to_representative(s: Slope, need_positive: bool) -> Slope {
    let usable = |m: &Slope| m.is_nonnegative() && (!need_positive || (m.p() > 0 && m.q() > 0));
    if usable(&s) {
        return s;
    }
    let r = v_orbit(s)
        .into_iter()
        .find(usable)
        .expect("every V-orbit has a positive member");
    eprintln!("notice: {s} replaced by {r}, a member of its V-orbit");
    r
}

fn slope_info(s: &Slope, as_json: bool) -> Outcome {
    let cf = continued_fraction(*s).ok();
    let path = farey_path(*s).ok();
    let orbit: Vec<Slope> = v_orbit(*s).into_iter().collect();
    let representative = modlinks::farey::nonnegative_representative(*s);
    if as_json {
        let value = json!({
            "slope": s,
            "continued_fraction": cf,
            "x": path.as_ref().map(|p| p.len()),
            "path": path.as_ref().map(|p| p
                .triangles()
                .iter()
                .map(|t| t.vertices().to_vec())
                .collect::<Vec<_>>()),
            "v_orbit": orbit,
            "representative": representative,
        });
        return emit_stdout(|out| {
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap())
        });
    }
    emit_stdout(|out| {
        writeln!(out, "slope: {s}")?;
        match &cf {
            Some(cf) => writeln!(out, "continued fraction: {cf}")?,
            None => writeln!(out, "continued fraction: none")?,
        }
        match &path {
            Some(p) => {
                writeln!(out, "farey path length: {}", p.len())?;
                let tris: Vec<String> = p.triangles().iter().map(ToString::to_string).collect();
                writeln!(out, "farey path: {}", tris.join(" "))?;
            }
            None => writeln!(out, "farey path length: none")?,
        }
        let orbit: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        writeln!(out, "v-orbit: {}", orbit.join(" "))?;
        writeln!(out, "representative: {representative}")
    })
}

fn cutting(s: Slope, check: bool) -> Outcome {
    let s = route_to_representative(s, true);
    let ab = ab_sequence(s)?;
    let lr = ab_to_lr(&ab);
    emit_stdout(|out| {
        writeln!(out, "slope: {s}")?;
        writeln!(out, "ab word: {ab}")?;
        writeln!(out, "lr word: {lr}")
    })?;
    if !check {
        return Ok(());
    }
    let ab_ok = ab == ab_sequence_geometric(s)?;
    let lr_ok = lr == lr_geometric_oracle(s)?;
    let verdict = |ok: bool| if ok { "match" } else { "mismatch" };
    emit_stdout(|out| {
        writeln!(out, "ab check: {}", verdict(ab_ok))?;
        writeln!(out, "lr check: {}", verdict(lr_ok))
    })?;
    if ab_ok && lr_ok {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("cutting sequences of {s}")))
    }
}

fn family(s: Slope, json: Option<&Path>) -> Outcome {
    let family = build_family(s)?;
    if let Some(path) = json {
        let text = family.to_json_pretty();
        return write_output(Some(path), |w| writeln!(w, "{text}"));
    }
    emit_stdout(|out| {
        writeln!(out, "target: {}", family.target)?;
        writeln!(out, "x: {}", family.x)?;
        let slopes: Vec<String> = family.slopes.iter().map(ToString::to_string).collect();
        writeln!(out, "slopes: {}", slopes.join(" "))?;
        for (i, o) in family.orbits.iter().enumerate() {
            let members: Vec<String> = o.slopes.iter().map(ToString::to_string).collect();
            let disc = o.discriminant.map_or("none".to_string(), |d| d.to_string());
            writeln!(
                out,
                "orbit {}: {} [{}] word {} trace {} length {} discriminant {disc}",
                i + 1,
                o.representative,
                members.join(" "),
                o.word,
                o.trace,
                sig12(o.length),
            )?;
        }
        let c = family.counts;
        writeln!(
            out,
            "octahedra: modular {} unit tangent {} both orientations {}",
            c.modular, c.unit_tangent_single_orientation, c.unit_tangent_both_orientations
        )?;
        writeln!(out, "volume: {}", sig12(family.volume_modular))?;
        writeln!(
            out,
            "volume (x v_oct / 2): {}",
            sig12(family.volume_paper_formula())
        )?;
        writeln!(out, "total length: {}", sig12(family.total_length))?;
        writeln!(out, "volume / sqrt(length): {}", sig12(family.ratio()))
    })
}

fn run_census(max_x: u32, jsonl: Option<&Path>, dedupe_mirror: bool) -> Outcome {
    if max_x == 0 || max_x > MAX_CENSUS_DEPTH {
        return Err(Failure::Domain(modlinks::Error::OutOfRange(format!(
            "--max-x must lie in 1..={MAX_CENSUS_DEPTH}"
        ))));
    }
    let families = census(max_x, CensusOptions { dedupe_mirror });
    write_output(jsonl, |w| {
        for family in families {
            let family = family.map_err(io::Error::other)?;
            writeln!(w, "{}", family.to_json_line())?;
        }
        Ok(())
    })
}

fn table(n: u32, csv: Option<&Path>) -> Outcome {
    if n == 0 {
        return Err(Failure::Domain(modlinks::Error::OutOfRange(
            "--n must be at least 1".into(),
        )));
    }
    let report = volume_length_table(n)?;
    write_output(csv, |w| report.write_csv(w).map_err(io::Error::other))
}

fn length(text: &str) -> Outcome {
    let word: GeodesicWord = text.parse()?;
    let m = word_to_matrix(&word);
    let len = geodesic_length(&m)?;
    let disc = match field_discriminant(&m) {
        Ok(d) => d.to_string(),
        Err(modlinks::Error::TooLargeToFactor(_)) => "none".to_string(),
        Err(e) => return Err(e.into()),
    };
    emit_stdout(|out| {
        writeln!(out, "word: {word}")?;
        writeln!(out, "trace: {}", m.trace())?;
        writeln!(out, "length: {}", sig12(len))?;
        writeln!(out, "discriminant: {disc}")
    })
}

fn emit_stdout(body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Outcome {
    write_output(None, body)
}

/// Runs `body` against `path`, or standard output for `None` and `-`.
fn write_output(
    path: Option<&Path>,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Outcome {
    match path {
        Some(p) if p != Path::new("-") => {
            let name = p.display().to_string();
            let file = File::create(p).map_err(|e| Failure::Io(name.clone(), e))?;
            let mut w = BufWriter::new(file);
            body(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| Failure::Io(name, e))
        }
        _ => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| Failure::Io("stdout".into(), e))
        }
    }
}
