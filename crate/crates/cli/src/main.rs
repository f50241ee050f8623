use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use sbwcube::census::{census_report, classify, enumerate, Caps, CensusClass};
use sbwcube::complex::{
    boundary_complex, build_cubed_complex, build_squared_complex, fundamental_group_presentation,
    QuotientComplex, JSON_VERSION,
};
use sbwcube::diagram::{parse_pd, reconstruct_diagram, spec_from_pd};
use sbwcube::homology::first_homology;
use sbwcube::{criterion_check, isomorphic, SbwSpec};

/// Signed black/white cubed complexes and alternating link diagrams.
#[derive(Parser, Debug)]
#[command(name = "sbwcube", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the orbit criterion (exit 0 = yes, 1 = no).
    Check {
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the squared (2) or cubed (3) complex as JSON.
    Build {
        spec: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        /// Add a presentation of the fundamental group and H_1.
        #[arg(long)]
        homology: bool,
    },
    /// Convert an alternating PD code to an SBW spec.
    FromPd { pd: PathBuf },
    /// Reconstruct the diagram: a PD code on the sphere, JSON otherwise.
    Reconstruct {
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all specs with `n` squares.
    Census {
        #[arg(long = "n", value_name = "K")]
        n: usize,
        /// List every bijection instead of one per isomorphism class.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
        /// Raise the size caps to the hard limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide isomorphism (exit 0 = isomorphic, 1 = not).
    Isomorphic { a: PathBuf, b: PathBuf },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_spec(path: &Path) -> Result<SbwSpec> {
    let text = read_input(path)?;
    text.parse()
        .with_context(|| format!("invalid spec {}", path.display()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn homology_json(c: &QuotientComplex) -> Result<serde_json::Value> {
    let p = fundamental_group_presentation(c)?;
    let h1 = first_homology(&p);
    Ok(json!({
        "generators": p.generators,
        "relators": p.relators,
        "h1": h1,
        "h1_text": h1.to_string(),
    }))
}

fn cmd_build(spec: &SbwSpec, dim: u8, homology: bool) -> Result<String> {
    let complex = if dim == 2 {
        build_squared_complex(spec)
    } else {
        build_cubed_complex(spec)
    };
    let mut out = json!({ "version": JSON_VERSION, "n": spec.n(), "complex": &complex });
    if dim == 3 {
        let boundary: Vec<_> = boundary_complex(&complex)
            .into_iter()
            .map(|s| {
                json!({
                    "faces": s.faces.iter().map(|f| &f.label).collect::<Vec<_>>(),
                    "vertices": s.vertex_count(),
                    "edges": s.edge_count(),
                    "euler": s.euler,
                    "closed": s.closed,
                    "orientable": s.orientable,
                    "genus": s.genus(),
                })
            })
            .collect();
        out["boundary"] = json!(boundary);
    }
    if homology {
        out["homology"] = homology_json(&complex)?;
    }
    to_json(&out)
}

fn cmd_reconstruct(spec: &SbwSpec, as_json: bool) -> Result<String> {
    let r = reconstruct_diagram(spec);
    if let (Some(pd), false) = (&r.pd, as_json) {
        return Ok(pd.to_string());
    }
    let genus: usize = r.surface.components.iter().filter_map(|c| c.genus).sum();
    let mut out = to_json(&json!({
        "version": JSON_VERSION,
        "genus": genus,
        "components": r.surface.components.len(),
        "pd": r.pd.as_ref().map(|pd| pd.to_string()),
        "crossings": r.diagram.crossing_labels(),
        "surface": &r.surface,
        "diagram": &r.diagram,
    }))?;
    out.push('\n');
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table_row(index: usize, c: &CensusClass) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    format!(
        "{:>5} {:>6} {:>6} {:>7} {:>5} {:>5} {:>9} {:>5} {:>10}  {:?}",
        index,
        c.size,
        c.orbits,
        yes_no(c.verdict),
        c.euler_m,
        c.genus,
        yes_no(c.connected),
        opt(c.link_components.map(|k| k.to_string())),
        opt(c.round_trip.map(|b| yes_no(b).to_string())),
        c.representative,
    )
}

const TABLE_HEADER: &str =
    "    #   size orbits verdict chi_M genus connected links round_trip  pairing";

fn cmd_census(n: usize, raw: bool, as_json: bool, caps: Caps) -> Result<String> {
    if raw {
        let classes: Vec<CensusClass> = enumerate(n, false, caps)?
            .iter()
            .map(|s| classify(s, 1))
            .collect();
        if as_json {
            return to_json(&json!({
                "version": JSON_VERSION,
                "n": n,
                "total_bijections": classes.len(),
                "bijections": classes,
            }));
        }
        let mut out = format!("n={n} bijections={}\n{TABLE_HEADER}\n", classes.len());
        for (i, c) in classes.iter().enumerate() {
            out.push_str(&table_row(i, c));
            out.push('\n');
        }
        return Ok(out);
    }
    let row = census_report(n, caps)?;
    if as_json {
        return to_json(&json!({ "version": JSON_VERSION, "census": row }));
    }
    let mut out = format!(
        "n={} bijections={} classes={} verdict_yes_classes={} verdict_yes_bijections={}\n{TABLE_HEADER}\n",
        row.n, row.total_bijections, row.isomorphism_classes, row.verdict_yes_classes, row.verdict_yes_bijections
    );
    for (i, c) in row.classes.iter().enumerate() {
        out.push_str(&table_row(i, c));
        out.push('\n');
    }
    Ok(out)
}

/// Text for standard output and the exit code.
fn run(cli: Cli) -> Result<(String, u8)> {
    match cli.command {
        Command::Check { spec, json } => {
            let report = criterion_check(&read_spec(&spec)?);
            let text = if json {
                let mut v = serde_json::to_value(&report)?;
                v["version"] = json!(JSON_VERSION);
                to_json(&v)?
            } else {
                report.summary_line()
            };
            Ok((text + "\n", if report.verdict { 0 } else { 1 }))
        }
        Command::Build {
            spec,
            dim,
            homology,
        } => Ok((cmd_build(&read_spec(&spec)?, dim, homology)? + "\n", 0)),
        Command::FromPd { pd } => {
            let text = read_input(&pd)?;
            let code =
                parse_pd(&text).with_context(|| format!("invalid PD code {}", pd.display()))?;
            Ok((spec_from_pd(&code)?.to_string(), 0))
        }
        Command::Reconstruct { spec, json } => Ok((cmd_reconstruct(&read_spec(&spec)?, json)?, 0)),
        Command::Census {
            n,
            raw,
            json,
            allow_large,
        } => {
            let caps = if allow_large {
                Caps::overridden()
            } else {
                Caps::default()
            };
            let mut out = cmd_census(n, raw, json, caps)?;
            if json {
                out.push('\n');
            }
            Ok((out, 0))
        }
        Command::Isomorphic { a, b } => {
            if a == Path::new("-") && b == Path::new("-") {
                bail!("at most one argument can be read from standard input");
            }
            let same = isomorphic(&read_spec(&a)?, &read_spec(&b)?);
            let text = if same {
                "isomorphic\n"
            } else {
                "not isomorphic\n"
            };
            Ok((text.to_string(), if same { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => ExitCode::from(code),
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(code),
                Err(e) => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
