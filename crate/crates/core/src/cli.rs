//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error (malformed weight, bad flag, invalid input).

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bz::{self, format_nodes, Projection};
use crate::error::Error;
use crate::oracle;
use crate::rootsystem::{highest_roots, Family, LieType, ParsedWeight, RootWeight};
use crate::survey::{self, Bounds, SurveyRecord, Target, TargetSelection, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "weightmult",
    version,
    about = "Exact weight multiplicities of simple Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print K_{λ,μ}.
    Mult {
        #[arg(value_parser = parse_weight)]
        lambda: ParsedWeight,
        #[arg(value_parser = parse_weight)]
        mu: ParsedWeight,
    },
    /// Dominant weights of V(λ) with multiplicities, by height.
    Diagram {
        #[arg(value_parser = parse_weight)]
        lambda: ParsedWeight,
        #[command(flatten)]
        format: Format,
    },
    /// Classify (λ; μ) as primitive, nonprimitive or incomparable.
    Pair {
        #[arg(value_parser = parse_root)]
        lambda: RootWeight,
        #[arg(value_parser = parse_root)]
        mu: RootWeight,
    },
    /// Decide K_{λ,μ} = 1 through the primitive list and projection.
    Multone {
        #[arg(value_parser = parse_root)]
        lambda: RootWeight,
        #[arg(value_parser = parse_root)]
        mu: RootWeight,
        #[arg(long, default_value = "drop", value_parser = parse_projection)]
        projection: Projection,
        /// Also print the Freudenthal value; exit 1 if it contradicts the verdict.
        #[arg(long)]
        oracle: bool,
    },
    /// Nonprimitive multiplicity-one pairs above the highest roots.
    Survey {
        #[arg(value_parser = parse_type)]
        ty: LieType,
        #[command(flatten)]
        sweep: Sweep,
        #[arg(long, default_value = "both", value_parser = parse_target)]
        target: TargetSelection,
        /// Emit every nonprimitive pair, not only those with K = 1.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Check the classification for every type and emit a JSON report.
    VerifyPaper {
        #[command(flatten)]
        sweep: Sweep,
        #[command(flatten)]
        format: Format,
    },
    /// Highest short and long roots.
    Roots {
        #[arg(value_parser = parse_type)]
        ty: LieType,
    },
    /// Project (λ; μ) onto the components of the support of λ − μ.
    Project {
        #[arg(value_parser = parse_root)]
        lambda: RootWeight,
        #[arg(value_parser = parse_root)]
        mu: RootWeight,
        #[arg(long, default_value = "drop", value_parser = parse_projection)]
        projection: Projection,
    },
}

#[derive(Args, Debug)]
struct Sweep {
    #[arg(long, default_value_t = 8)]
    cap: i64,
    #[arg(long, default_value = "drop", value_parser = parse_projection)]
    projection: Projection,
    /// Sweep all of E8 up to the cap instead of the m8 = 2 slice.
    #[arg(long)]
    e8_full: bool,
}

#[derive(Args, Debug)]
struct Format {
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

fn parse_weight(s: &str) -> Result<ParsedWeight, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_root(s: &str) -> Result<RootWeight, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: Error| format!("`{s}`: {e}"))
}

fn parse_projection(s: &str) -> Result<Projection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_target(s: &str) -> Result<TargetSelection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the CLI with process stdio.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams; returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Overflow(_) | Error::Recursion { .. } | Error::Output(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> crate::Result<i32> {
    let io = |r: io::Result<()>| r.map_err(|e| Error::Output(e.to_string()));
    match command {
        Command::Mult { lambda, mu } => {
            let k = oracle::multiplicity_omega(&lambda.to_omega(), &mu.to_omega())?;
            io(writeln!(out, "{k}"))?;
        }
        Command::Diagram { lambda, format } => {
            let diagram = oracle::weight_diagram_omega(&lambda.to_omega())?;
            let rows: Vec<(String, u64)> = diagram
                .entries()
                .iter()
                .map(|e| {
                    let name = match &lambda {
                        ParsedWeight::Root(_) => diagram
                            .root_weight(e)
                            .map(|w| w.to_string())
                            .unwrap_or_else(|| diagram.omega_weight(e).to_string()),
                        ParsedWeight::Omega(_) => diagram.omega_weight(e).to_string(),
                    };
                    (name, e.multiplicity)
                })
                .collect();
            if format.json {
                #[derive(Serialize)]
                struct Row<'a> {
                    weight: &'a str,
                    multiplicity: u64,
                }
                let rows: Vec<Row> = rows
                    .iter()
                    .map(|(w, m)| Row {
                        weight: w,
                        multiplicity: *m,
                    })
                    .collect();
                io(writeln!(out, "{}", to_json(&rows)))?;
            } else {
                io(writeln!(out, "weight\tmultiplicity"))?;
                for (w, m) in rows {
                    io(writeln!(out, "{w}\t{m}"))?;
                }
            }
        }
        Command::Pair { lambda, mu } => {
            io(writeln!(out, "{}", bz::classify_pair(&lambda, &mu)?))?;
        }
        Command::Multone {
            lambda,
            mu,
            projection,
            oracle: check,
        } => {
            let verdict = bz::multiplicity_one(&lambda, &mu, projection)?;
            if check {
                let k = oracle::multiplicity(&lambda, &mu)?;
                io(writeln!(out, "{verdict}\t{k}"))?;
                if verdict != (k == 1) {
                    return Ok(EXIT_FAILED);
                }
            } else {
                io(writeln!(out, "{verdict}"))?;
            }
        }
        Command::Survey {
            ty,
            sweep,
            target,
            all,
            format,
        } => {
            let bounds = survey_bounds(ty, &sweep);
            let records: Vec<SurveyRecord> =
                survey::nonprimitive_candidates(ty, &bounds, target, sweep.projection)?
                    .into_iter()
                    .filter(|r| all || r.oracle == 1)
                    .collect();
            if format.json {
                let rows: Vec<RecordJson> = records.iter().map(RecordJson::from).collect();
                io(writeln!(out, "{}", to_json(&rows)))?;
            } else {
                io(writeln!(out, "{}", SurveyRecord::TSV_HEADER))?;
                for r in &records {
                    io(writeln!(out, "{}", r.tsv_row()))?;
                }
            }
        }
        Command::VerifyPaper { sweep, format } => {
            let report = verify_paper(&sweep)?;
            if format.tsv {
                io(writeln!(out, "lemma\tpass\twitnesses"))?;
                for (key, entry) in report.lemmas() {
                    io(writeln!(
                        out,
                        "{key}\t{}\t{}",
                        entry.pass,
                        entry.witnesses.join(" ")
                    ))?;
                }
            } else {
                io(writeln!(out, "{}", to_json(&report)))?;
            }
            return Ok(if report.theorem_main.pass {
                EXIT_OK
            } else {
                EXIT_FAILED
            });
        }
        Command::Roots { ty } => {
            let (short, long) = highest_roots(ty);
            io(writeln!(out, "short {short}  long {long}"))?;
        }
        Command::Project {
            lambda,
            mu,
            projection,
        } => {
            let diff = lambda.checked_sub(&mu)?;
            let s = bz::support(&diff)?;
            for nodes in bz::components(lambda.lie_type(), &s) {
                let comp = bz::classify_subdiagram(lambda.lie_type(), &nodes)?;
                let relabel: Vec<String> =
                    comp.relabel().iter().map(|n| (n + 1).to_string()).collect();
                let (l, m) = match projection {
                    Projection::Drop => (
                        bz::project_drop(&lambda, &comp).to_string(),
                        bz::project_drop(&mu, &comp).to_string(),
                    ),
                    Projection::Restrict => (
                        bz::project_restrict(&lambda, &comp).to_string(),
                        bz::project_restrict(&mu, &comp).to_string(),
                    ),
                };
                io(writeln!(
                    out,
                    "S={}\t{}\t{}\t{l}\t{m}",
                    format_nodes(&nodes),
                    comp.classified(),
                    relabel.join(",")
                ))?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// The `E_8` default is the slice `m_8 = 2`; it is bounded on its own and the
/// largest coefficient in it is 10, so the cap is raised to at least that.
pub const E8_SLICE_CAP: i64 = 10;

fn survey_bounds(ty: LieType, sweep: &Sweep) -> Bounds {
    if ty.family() == Family::E && ty.rank() == 8 && !sweep.e8_full {
        Bounds::cap(sweep.cap.max(E8_SLICE_CAP)).with_fixed(7, 2)
    } else {
        Bounds::cap(sweep.cap)
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub pass: bool,
    pub witnesses: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
struct RecordJson {
    zeta: String,
    target: String,
    mu: String,
    class: String,
    fastpath: bool,
    oracle: u64,
}

impl From<&SurveyRecord> for RecordJson {
    fn from(r: &SurveyRecord) -> Self {
        RecordJson {
            zeta: r.zeta.to_string(),
            target: r.target.to_string(),
            mu: r.mu.to_string(),
            class: r.pair_class.to_string(),
            fastpath: r.fastpath,
            oracle: r.oracle,
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub values: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct TypeDetail {
    pub lemma: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub cap: i64,
    pub fixed: Vec<String>,
    pub pass: bool,
    pub found: Vec<String>,
    pub unmatched: Vec<String>,
    pub missed: Vec<String>,
    pub disagreements: Vec<String>,
    pub sublemma_violations: Vec<String>,
    pub checks: Vec<Check>,
    candidates: Vec<RecordJson>,
}

#[derive(Serialize, Debug, Clone)]
pub struct PaperReport {
    pub schema: u32,
    pub cap: i64,
    pub projection: String,
    pub annonprim: LemmaEntry,
    pub nonprimb: LemmaEntry,
    pub nonprimc: LemmaEntry,
    pub nonprimd: LemmaEntry,
    pub nonprimesix: LemmaEntry,
    pub nonprimeseven: LemmaEntry,
    pub nonprimeeight: LemmaEntry,
    pub nonprimf: LemmaEntry,
    pub nonprimg: LemmaEntry,
    pub theorem_main: LemmaEntry,
    pub details: Vec<TypeDetail>,
}

impl PaperReport {
    pub fn lemmas(&self) -> [(&'static str, &LemmaEntry); 10] {
        [
            ("annonprim", &self.annonprim),
            ("nonprimb", &self.nonprimb),
            ("nonprimc", &self.nonprimc),
            ("nonprimd", &self.nonprimd),
            ("nonprimesix", &self.nonprimesix),
            ("nonprimeseven", &self.nonprimeseven),
            ("nonprimeeight", &self.nonprimeeight),
            ("nonprimf", &self.nonprimf),
            ("nonprimg", &self.nonprimg),
            ("theorem_main", &self.theorem_main),
        ]
    }

    pub fn detail(&self, ty: &str) -> Option<&TypeDetail> {
        self.details.iter().find(|d| d.ty == ty)
    }
}

const LEMMAS: &[(&str, &[&str])] = &[
    ("annonprim", &["A2", "A3", "A4", "A5"]),
    ("nonprimb", &["B2", "B3", "B4", "B5", "B6"]),
    ("nonprimc", &["C3", "C4", "C5"]),
    ("nonprimd", &["D4", "D5", "D6"]),
    ("nonprimesix", &["E6"]),
    ("nonprimeseven", &["E7"]),
    ("nonprimeeight", &["E8"]),
    ("nonprimf", &["F4"]),
    ("nonprimg", &["G2"]),
];

// Weights singled out in the case analysis as nonprimitive with K ≠ 1.
fn named_non_examples(ty: LieType) -> Vec<(RootWeight, Target)> {
    let list: &[&str] = match ty.to_string().as_str() {
        "E6" => &["E6:2,2,3,4,3,2"],
        "E7" => &["E7:2,3,4,6,5,4,2", "E7:2,3,4,6,5,4,3"],
        "E8" => &["E8:4,5,7,10,8,6,4,2"],
        "F4" => &["F4:2,4,6,3", "F4:2,4,6,4"],
        _ => &[],
    };
    list.iter()
        .map(|s| (s.parse().expect("valid literal"), Target::Long))
        .collect()
}

fn check_non_examples(ty: LieType) -> crate::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (zeta, target) in named_non_examples(ty) {
        let mu = target.root(ty);
        let class = bz::classify_pair(&zeta, &mu)?;
        let k = oracle::multiplicity(&zeta, &mu)?;
        let nonprim = matches!(class, bz::PairClass::Nonprimitive(_));
        checks.push(Check {
            name: format!("{zeta} nonprimitive over {target} with K != 1"),
            pass: zeta.is_dominant() && nonprim && k != 1,
            values: vec![class.to_string(), format!("K={k}")],
        });
    }
    Ok(checks)
}

fn detail_for(
    lemma: &'static str,
    ty: LieType,
    report: &TheoremReport,
    checks: Vec<Check>,
    sub: Vec<RootWeight>,
) -> TypeDetail {
    let names = |v: &[RootWeight]| v.iter().map(|w| w.to_string()).collect::<Vec<_>>();
    let pass = report.passes() && sub.is_empty() && checks.iter().all(|c| c.pass);
    TypeDetail {
        lemma,
        ty: ty.to_string(),
        cap: report.bounds.cap,
        fixed: report
            .bounds
            .fixed
            .iter()
            .map(|(n, v)| format!("m{}={v}", n + 1))
            .collect(),
        pass,
        found: names(&report.found),
        unmatched: names(&report.unmatched),
        missed: names(&report.missed),
        disagreements: report
            .disagreements
            .iter()
            .map(SurveyRecord::tsv_row)
            .collect(),
        sublemma_violations: names(&sub),
        checks,
        candidates: report.candidates.iter().map(RecordJson::from).collect(),
    }
}

fn verify_paper(sweep: &Sweep) -> crate::Result<PaperReport> {
    let mut details = Vec::new();
    let mut entries = Vec::new();
    for &(lemma, types) in LEMMAS {
        let mut entry = LemmaEntry {
            pass: true,
            witnesses: Vec::new(),
        };
        for t in types {
            let ty: LieType = t.parse()?;
            let report = survey::verify_in(ty, &survey_bounds(ty, sweep), sweep.projection)?;
            let mut checks = check_non_examples(ty)?;
            if ty.to_string() == "E8" && !sweep.e8_full {
                let found: Vec<String> = report
                    .candidates
                    .iter()
                    .map(|r| r.zeta.to_string())
                    .collect();
                checks.push(Check {
                    name: "slice m8=2 has a single nonprimitive weight".into(),
                    pass: found == ["E8:4,5,7,10,8,6,4,2"],
                    values: found,
                });
            }
            let sub = survey::sublemma_violations(ty, sweep.cap);
            let detail = detail_for(lemma, ty, &report, checks, sub);
            entry.pass &= detail.pass;
            entry.witnesses.extend(detail.found.iter().cloned());
            details.push(detail);
        }
        entries.push(entry);
    }
    let theorem_main = LemmaEntry {
        pass: entries.iter().all(|e| e.pass),
        witnesses: entries
            .iter()
            .flat_map(|e| e.witnesses.iter().cloned())
            .collect(),
    };
    let mut it = entries.into_iter();
    let mut next = || it.next().expect("one entry per lemma");
    Ok(PaperReport {
        schema: 1,
        cap: sweep.cap,
        projection: sweep.projection.to_string(),
        annonprim: next(),
        nonprimb: next(),
        nonprimc: next(),
        nonprimd: next(),
        nonprimesix: next(),
        nonprimeseven: next(),
        nonprimeeight: next(),
        nonprimf: next(),
        nonprimg: next(),
        theorem_main,
        details,
    })
}

/// Builds the verification report programmatically, as `verify-paper` does.
pub fn paper_report(cap: i64, projection: Projection, e8_full: bool) -> crate::Result<PaperReport> {
    verify_paper(&Sweep {
        cap,
        projection,
        e8_full,
    })
}

// Single-line JSON with `": "` and `", "` separators.
struct Spaced;

impl serde_json::ser::Formatter for Spaced {
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Spaced);
    value.serialize(&mut ser).expect("report types serialize");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("weightmult").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn mult_example() {
        assert_eq!(
            run_str(&["mult", "A2:1,2", "A2:1,1"]),
            (0, "1\n".into(), String::new())
        );
    }

    #[test]
    fn roots_example() {
        assert_eq!(run_str(&["roots", "G2"]).1, "short G2:2,1  long G2:3,2\n");
    }

    #[test]
    fn bad_weight_is_usage_error() {
        let (code, _, err) = run_str(&["mult", "A2:1.5,1", "A2:1,1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("A2:1.5,1"), "{err}");
    }

    #[test]
    fn semantic_error_is_usage_error() {
        let (code, _, err) = run_str(&["mult", "A2:0,1", "A2:0,0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("not dominant"));
    }

    #[test]
    fn json_separators() {
        let entry = LemmaEntry {
            pass: true,
            witnesses: vec!["G2:4,2".into()],
        };
        assert_eq!(
            to_json(&entry),
            r#"{"pass": true, "witnesses": ["G2:4,2"]}"#
        );
    }
}
