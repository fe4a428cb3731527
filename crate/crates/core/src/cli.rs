//! Command-line front end. [`run`] is the whole program; the binary only
//! wires it to the process.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{checked_butterfly, classify, reduced_butterfly};
use crate::diagram::gauss::{dt_code, gauss_code};
use crate::diagram::{build_diagram, render_svg, SvgOptions};
use crate::error::{Error, Result};
use crate::family::{family_word, match_word, torus_report, worked_example_word};
use crate::form::{parse_schubert_form, validate_with, Rules, SchubertForm};
use crate::oracle::enumerate::{enumerate_forms, write_records, OutputFormat};
use crate::orient::orient;
use crate::presentation::{
    over_presentation, over_relations, under_presentation, Format, GroupPresentation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_REDUCED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "schubert3", version, about = "Schubert forms of 3-bridge links")]
pub struct Cli {
    /// Report errors on stderr as a JSON object.
    #[arg(long, global = true)]
    pub json_errors: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// A form as "(p/n,q/m,s/l)" or as six integers.
#[derive(Debug, Clone, Args)]
pub struct FormArg {
    /// "(p/n,q/m,s/l)" or the six integers p n q m s l
    #[arg(value_name = "FORM", num_args = 1..=6, required = true)]
    pub form: Vec<String>,
}

impl FormArg {
    fn parse(&self) -> Result<SchubertForm> {
        parse_schubert_form(&self.form.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupFormat {
    Text,
    Json,
    GapLike,
}

impl From<GroupFormat> for Format {
    fn from(f: GroupFormat) -> Format {
        match f {
            GroupFormat::Text => Format::Text,
            GroupFormat::Json => Format::Json,
            GroupFormat::GapLike => Format::GapLike,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the butterfly conditions and list violated clauses.
    Validate {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        json: bool,
        /// Use the guard `l < p − s` as printed instead of `l ≤ p − q`.
        #[arg(long)]
        as_published: bool,
    },
    /// Reducedness and number of components.
    Classify {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        json: bool,
    },
    /// Cycles, endpoints and bridge directions as JSON.
    Orient {
        #[command(flatten)]
        form: FormArg,
    },
    /// Over or under presentation of the link group.
    Group {
        #[command(flatten)]
        form: FormArg,
        /// Over presentation, relators `a w1 = w1 b` and so on
        #[arg(long, conflicts_with = "under", required_unless_present = "under")]
        over: bool,
        /// Under presentation, relators built from the words `u_a, u_b, u_c`
        #[arg(long)]
        under: bool,
        /// Relation form `x w = w y` of the over presentation.
        #[arg(long)]
        relations: bool,
        /// Omit the longest relator.
        #[arg(long)]
        drop_longest: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: GroupFormat,
    },
    /// Canonical diagram as SVG (default) or JSON.
    Diagram {
        #[command(flatten)]
        form: FormArg,
        #[arg(long, conflicts_with = "json")]
        svg: bool,
        #[arg(long)]
        json: bool,
        /// Label boundary vertices.
        #[arg(long)]
        labels: bool,
    },
    /// Signed Gauss code.
    Gauss {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        json: bool,
    },
    /// Dowker–Thistlethwaite code of a knot.
    Dt {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        json: bool,
    },
    /// Relation word `w(x,y,z)` of a form `(p/n,p/n,p/n)`.
    Family {
        #[arg(value_name = "FORM", num_args = 1..=6, required_unless_present = "torus_report")]
        form: Vec<String>,
        /// Compare the torus family `(p/1,p/1,p/1)`, p = 2..10, with the
        /// published case split.
        #[arg(long)]
        torus_report: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write invariants of every valid form up to `--pmax`.
    Enumerate {
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(2..=14))]
        pmax: u32,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

/// Terminal styling; never applied to machine-readable output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidForm { .. } | Error::UnsupportedFormat(_) => {
            EXIT_INVALID
        }
        Error::NotReduced(_) | Error::NotAKnot { .. } => EXIT_NOT_REDUCED,
        Error::NotSymmetric { .. } | Error::DegeneratePresentation(_) | Error::Internal(_) => {
            EXIT_INTERNAL
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_styled(args, out, err, Style::default())
}

pub fn run_styled<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, style: Style) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_errors = args.iter().any(|a| a == "--json-errors");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if json_errors {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
                let _ = writeln!(
                    err,
                    "{}",
                    json!({"error": "usage", "message": first, "exit_code": EXIT_INVALID})
                );
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return EXIT_INVALID;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            if cli.json_errors {
                let _ = writeln!(
                    err,
                    "{}",
                    json!({"error": e.kind(), "message": e.to_string(), "exit_code": code})
                );
            } else if style.color {
                let _ = writeln!(err, "\x1b[1;31merror:\x1b[0m {e}");
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    let mut emit = |s: &str| out.write_all(s.as_bytes()).map_err(io_err);
    match cmd {
        Command::Validate { form, json, as_published } => {
            let f = form.parse()?;
            let rules = if *as_published { Rules::AsPublished } else { Rules::Corrected };
            let report = validate_with(&f, rules);
            if *json {
                emit(&pretty(&report))?;
            } else if report.ok {
                emit(&format!("{f}: valid\n"))?;
            } else {
                let mut s = format!("{f}: invalid\n");
                for c in &report.violations {
                    s.push_str(&format!("  violates {c}\n"));
                }
                emit(&s)?;
            }
            Ok(if report.ok { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Classify { form, json } => {
            let f = form.parse()?;
            let class = classify(&f)?;
            if *json {
                emit(&pretty(&json!({
                    "form": f,
                    "reduced": class.reduced,
                    "components": class.components,
                    "class": class.to_string(),
                })))?;
            } else {
                emit(&format!("{class}\n"))?;
            }
            Ok(if class.reduced { EXIT_OK } else { EXIT_NOT_REDUCED })
        }
        Command::Orient { form } => {
            let f = form.parse()?;
            let o = orient(&reduced_butterfly(&f)?)?;
            emit(&pretty(&o.to_json()))?;
            Ok(EXIT_OK)
        }
        Command::Group { form, over, under, relations, drop_longest, format } => {
            let f = form.parse()?;
            reduced_butterfly(&f)?;
            let mut g: GroupPresentation = match (over, under, relations) {
                (_, true, _) => under_presentation(&f)?,
                (_, false, true) => over_relations(&f)?,
                _ => over_presentation(&f)?,
            };
            if *drop_longest {
                g = g.drop_longest();
            }
            emit(&g.export((*format).into()))?;
            Ok(EXIT_OK)
        }
        Command::Diagram { form, svg: _, json, labels } => {
            let f = form.parse()?;
            checked_butterfly(&f)?;
            let d = build_diagram(&f)?;
            if *json {
                emit(&d.to_json())?;
            } else {
                emit(&render_svg(&d, &SvgOptions { labels: *labels, ..Default::default() }))?;
            }
            Ok(EXIT_OK)
        }
        Command::Gauss { form, json } => {
            let f = form.parse()?;
            let code = gauss_code(&f)?;
            if *json {
                emit(&pretty(&json!({
                    "form": f,
                    "code": code.to_string(),
                    "components": code.components,
                })))?;
            } else {
                emit(&format!("{code}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Dt { form, json } => {
            let f = form.parse()?;
            let code = dt_code(&f)?;
            if *json {
                emit(&pretty(&json!({
                    "form": f,
                    "code": code.to_string(),
                    "pairs": code.pairs(),
                })))?;
            } else {
                emit(&format!("{code}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Family { form, torus_report: report, json } => {
            let mut text = String::new();
            let mut value = serde_json::Map::new();
            if !form.is_empty() {
                let f = parse_schubert_form(&form.join(" "))?;
                let fw = family_word(&f)?;
                let published = worked_example_word(&f);
                let matched = published.as_ref().and_then(|w| match_word(&fw, w));
                text.push_str(&format!("w = {}\n", fw.display_word()));
                let x = fw.word.clone();
                let y = x.cyclic_shift();
                let z = y.cyclic_shift();
                text.push_str(&format!("w1 = {x}, w2 = {y}, w3 = {z}\n"));
                text.push_str("cyclic substitution x -> y -> z -> x maps w1 -> w2 -> w3\n");
                if let (Some(w), Some(m)) = (&published, matched) {
                    text.push_str(&format!(
                        "published form: w = {} ({m})\n",
                        w.in_variables()
                    ));
                }
                value.insert("family".into(), json!({
                    "form": f,
                    "shape": fw.shape,
                    "word": fw.display_word(),
                    "raw_word": fw.raw_word.in_variables().to_string(),
                    "substitution": fw.substitution,
                    "symmetric": true,
                    "published": published.as_ref().map(|w| w.in_variables().to_string()),
                    "published_match": matched,
                }));
            }
            if *report {
                let r = torus_report(2, 10)?;
                if !text.is_empty() {
                    text.push('\n');
                }
                text.push_str(&r.to_string());
                value.insert("torus_report".into(), serde_json::to_value(&r).expect("serializable"));
            }
            if *json {
                emit(&pretty(&value))?;
            } else {
                emit(&text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { pmax, out: path, format } => {
            let records = enumerate_forms(*pmax)?;
            let file = File::create(path).map_err(io_err)?;
            let fmt = match format {
                TableFormat::Csv => OutputFormat::Csv,
                TableFormat::Jsonl => OutputFormat::Jsonl,
            };
            write_records(&records, fmt, BufWriter::new(file))?;
            let reduced = records.iter().filter(|r| r.reduced).count();
            emit(&format!(
                "{} valid forms with p <= {pmax} ({reduced} reduced) written to {}\n",
                records.len(),
                path.display()
            ))?;
            Ok(EXIT_OK)
        }
    }
}
