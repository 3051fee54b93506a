//! Command line front end: invariant reports, classification, solvability
//! verdicts, diagram composition, and the built-in verification suite.
//!
//! Exit status is 0 on success, 1 when `verify` reports a failed check, and
//! 2 for usage errors (bad arguments, malformed specs, missing files).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stringlink::{
    arf, borromean, braid_generator_a, classify_full_2comp, classify_linking, classify_zero,
    component_knot, figure_eight_component, parse_diagram, report_with_truncation, run_all,
    trivial, twisted_hopf, verdict, whitehead, write_closed_diagram, write_diagram,
    StringLinkDiagram, DEFAULT_TRUNCATION,
};

#[derive(Parser)]
#[command(name = "stringlink", version, about = "Low-order concordance invariants of string links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Milnor invariant report and component Arf invariants
    Invariants {
        #[command(flatten)]
        links: LinkArgs,
        /// Truncation degree for the Magnus expansion (at least 4)
        #[arg(long, short = 'q', env = "STRINGLINK_TRUNCATION")]
        truncation: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Classify into the low-order quotients of the solvable filtration
    Classify {
        #[command(flatten)]
        links: LinkArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Report the solvability verdict and the 0.5-level obstruction
    Verdict {
        #[command(flatten)]
        links: LinkArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Combine diagrams and write the result as a diagram file
    Compose {
        #[command(flatten)]
        links: LinkArgs,
        /// Group operation applied to the specs in order
        #[arg(long, value_enum, default_value_t = Op::Stack)]
        op: Op,
        /// Write the composed diagram to a file instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the built-in verification suite
    Verify {
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Args)]
struct LinkArgs {
    /// Builder spec `name[:arg]*` or a diagram file path; repeatable.
    /// Builders: trivial:m, whitehead:m, borromean, twistedhopf:n,
    /// braidA:m:i:j, figureeight
    #[arg(long = "link", value_name = "SPEC", required = true)]
    link: Vec<String>,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Stack,
    Inverse,
    Commutator,
    Closure,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Stack => "stack",
            Op::Inverse => "inverse",
            Op::Commutator => "commutator",
            Op::Closure => "closure",
        }
    }
}

#[derive(Debug)]
struct Outcome {
    stdout: String,
    failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, failed: false }
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.failed {
                std::process::ExitCode::from(1)
            } else {
                std::process::ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::ExitCode::from(2)
        }
    }
}

/// Builds a diagram from a builder spec or, for unrecognized names, a file
/// path in the diagram text format.
fn build_link(spec: &str) -> Result<StringLinkDiagram, String> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or("");
    let args: Vec<&str> = parts.collect();
    let ints = |expect: usize| -> Result<Vec<i64>, String> {
        if args.len() != expect {
            return Err(format!(
                "builder `{name}` takes {expect} integer argument(s), got {} in `{spec}`",
                args.len()
            ));
        }
        args.iter()
            .map(|a| {
                a.parse::<i64>()
                    .map_err(|_| format!("bad integer `{a}` in builder spec `{spec}`"))
            })
            .collect()
    };
    let strand_count = |v: i64| -> Result<usize, String> {
        usize::try_from(v)
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(|| format!("strand count must be a positive integer in `{spec}`"))
    };
    match name {
        "trivial" => Ok(trivial(strand_count(ints(1)?[0])?)),
        "whitehead" => {
            let m = strand_count(ints(1)?[0])?;
            whitehead(m).map_err(|e| format!("{spec}: {e}"))
        }
        "borromean" => {
            ints(0)?;
            Ok(borromean())
        }
        "twistedhopf" => Ok(twisted_hopf(ints(1)?[0])),
        "braidA" => {
            let v = ints(3)?;
            let m = strand_count(v[0])?;
            let i = strand_count(v[1])?;
            let j = strand_count(v[2])?;
            braid_generator_a(m, i, j).map_err(|e| format!("{spec}: {e}"))
        }
        "figureeight" => {
            ints(0)?;
            Ok(figure_eight_component())
        }
        _ => {
            let text = fs::read_to_string(spec)
                .map_err(|_| format!("unknown builder or missing file `{spec}`"))?;
            parse_diagram(&text).map_err(|e| format!("{spec}: {e}"))
        }
    }
}

fn build_links(specs: &[String]) -> Result<Vec<StringLinkDiagram>, String> {
    specs.iter().map(|s| build_link(s)).collect()
}

fn index_label(index: &[usize]) -> String {
    if index.iter().all(|&i| i <= 9) {
        index.iter().map(|i| i.to_string()).collect()
    } else {
        let parts: Vec<String> = index.iter().map(|i| i.to_string()).collect();
        parts.join(" ")
    }
}

fn component_arfs(d: &StringLinkDiagram) -> Result<Vec<u8>, String> {
    (1..=d.num_strands())
        .map(|i| {
            let knot = component_knot(d, i).map_err(|e| e.to_string())?;
            Ok(arf(&knot).map_err(|e| e.to_string())?.value())
        })
        .collect()
}

fn json_line(value: &Value) -> String {
    let mut out = serde_json::to_string(value).expect("serializable value");
    out.push('\n');
    out
}

fn run(command: &Command) -> Result<Outcome, String> {
    match command {
        Command::Invariants { links, truncation, format } => {
            run_invariants(&links.link, truncation.unwrap_or(DEFAULT_TRUNCATION), format.format)
        }
        Command::Classify { links, format } => run_classify(&links.link, format.format),
        Command::Verdict { links, format } => run_verdict(&links.link, format.format),
        Command::Compose { links, op, out, format } => {
            run_compose(&links.link, *op, out.as_deref(), format.format)
        }
        Command::Verify { seed, format } => Ok(run_verify(*seed, format.format)),
    }
}

fn run_invariants(specs: &[String], q: usize, format: Format) -> Result<Outcome, String> {
    let mut blocks = Vec::new();
    let mut entries = Vec::new();
    for spec in specs {
        let d = build_link(spec)?;
        let rep = report_with_truncation(&d, q).map_err(|e| format!("{spec}: {e}"))?;
        let arfs = component_arfs(&d).map_err(|e| format!("{spec}: {e}"))?;
        match format {
            Format::Table => {
                let mut block = String::new();
                writeln!(block, "link: {spec}").unwrap();
                writeln!(block, "strands: {}", d.num_strands()).unwrap();
                block.push_str(&rep.to_text());
                for (i, a) in arfs.iter().enumerate() {
                    writeln!(block, "arf {} = {a}", i + 1).unwrap();
                }
                blocks.push(block);
            }
            Format::Json => {
                let mu: serde_json::Map<String, Value> = rep
                    .iter()
                    .map(|(index, v)| (index_label(index), json!(v)))
                    .collect();
                entries.push(json!({
                    "spec": spec,
                    "strands": d.num_strands(),
                    "mu": mu,
                    "arf": arfs,
                }));
            }
        }
    }
    Ok(Outcome::ok(match format {
        Format::Table => blocks.join("\n"),
        Format::Json => json_line(&json!({
            "schema": 1,
            "command": "invariants",
            "truncation": q,
            "links": entries,
        })),
    }))
}

/// Name of the quotient the order-0 coordinates of an m-strand linking-trivial
/// diagram live in: one Z per triple, one Z2 per pair, one Z2 per strand.
fn zero_quotient_name(m: usize) -> String {
    let pairs = m * (m - 1) / 2;
    let triples = m * (m - 1) * (m - 2) / 6;
    format!("Z^{triples} ⊕ Z₂^{pairs} ⊕ Z₂^{m}")
}

fn run_classify(specs: &[String], format: Format) -> Result<Outcome, String> {
    let mut blocks = Vec::new();
    let mut entries = Vec::new();
    for spec in specs {
        let d = build_link(spec)?;
        let m = d.num_strands();
        let lk = classify_linking(&d);
        let linking_trivial = lk.iter().all(|&v| v == 0);
        let v = verdict(&d).map_err(|e| format!("{spec}: {e}"))?;
        let full2 = if m == 2 {
            Some(classify_full_2comp(&d).map_err(|e| format!("{spec}: {e}"))?)
        } else {
            None
        };
        let zero = if linking_trivial {
            Some(classify_zero(&d).map_err(|e| format!("{spec}: {e}"))?)
        } else {
            None
        };
        match format {
            Format::Table => {
                let mut block = String::new();
                writeln!(block, "link: {spec}").unwrap();
                if let Some((a1, a2, s, l)) = full2 {
                    writeln!(block, "class: ({a1},{a2},{s},{l}) in Z₂ ⊕ Z₂ ⊕ Z₂ ⊕ Z").unwrap();
                    writeln!(block, "coordinates: (arf 1, arf 2, sl 12 mod 2, lk 12)").unwrap();
                } else if let Some(cv) = &zero {
                    writeln!(block, "quotient: {}", zero_quotient_name(m)).unwrap();
                    block.push_str(&cv.to_text());
                } else {
                    for ((i, j), value) in stringlink::strand_pairs(m).into_iter().zip(&lk) {
                        writeln!(block, "lk {} = {value}", index_label(&[i, j])).unwrap();
                    }
                    writeln!(
                        block,
                        "note: order-0 coordinates are defined only for linking-trivial string links"
                    )
                    .unwrap();
                }
                writeln!(block, "verdict: {v}").unwrap();
                blocks.push(block);
            }
            Format::Json => {
                entries.push(json!({
                    "spec": spec,
                    "strands": m,
                    "lk": lk,
                    "class2": full2.map(|(a1, a2, s, l)| json!([a1, a2, s, l])),
                    "zero": zero.map(|cv| {
                        json!({"triple": cv.triple, "sl_mod2": cv.sl_mod2, "arf": cv.arf})
                    }),
                    "level": format!("{:?}", v.level),
                    "verdict": v.to_string(),
                }));
            }
        }
    }
    Ok(Outcome::ok(match format {
        Format::Table => blocks.join("\n"),
        Format::Json => json_line(&json!({
            "schema": 1,
            "command": "classify",
            "links": entries,
        })),
    }))
}

fn run_verdict(specs: &[String], format: Format) -> Result<Outcome, String> {
    let mut lines = String::new();
    let mut entries = Vec::new();
    for spec in specs {
        let d = build_link(spec)?;
        let v = verdict(&d).map_err(|e| format!("{spec}: {e}"))?;
        match format {
            Format::Table => {
                if specs.len() == 1 {
                    writeln!(lines, "{v}").unwrap();
                } else {
                    writeln!(lines, "{spec}: {v}").unwrap();
                }
            }
            Format::Json => {
                entries.push(json!({
                    "spec": spec,
                    "level": format!("{:?}", v.level),
                    "obstruction_to_half": v.obstruction_to_half,
                    "verdict": v.to_string(),
                }));
            }
        }
    }
    Ok(Outcome::ok(match format {
        Format::Table => lines,
        Format::Json => json_line(&json!({
            "schema": 1,
            "command": "verdict",
            "links": entries,
        })),
    }))
}

fn run_compose(
    specs: &[String],
    op: Op,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<Outcome, String> {
    let arity = |expected: &str, ok: bool| -> Result<(), String> {
        if ok {
            Ok(())
        } else {
            Err(format!("`{}` takes {expected}, got {} link spec(s)", op.name(), specs.len()))
        }
    };
    let diagrams = build_links(specs)?;
    let text = match op {
        Op::Stack => {
            arity("at least 2 link specs", diagrams.len() >= 2)?;
            let mut acc = diagrams[0].clone();
            for d in &diagrams[1..] {
                acc = acc.stack(d).map_err(|e| e.to_string())?;
            }
            write_diagram(&acc)
        }
        Op::Inverse => {
            arity("exactly 1 link spec", diagrams.len() == 1)?;
            write_diagram(&diagrams[0].inverse())
        }
        Op::Commutator => {
            arity("exactly 2 link specs", diagrams.len() == 2)?;
            write_diagram(&diagrams[0].commutator(&diagrams[1]).map_err(|e| e.to_string())?)
        }
        Op::Closure => {
            arity("exactly 1 link spec", diagrams.len() == 1)?;
            write_closed_diagram(&diagrams[0].closure())
        }
    };
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(Outcome::ok(match format {
        Format::Table => {
            if out.is_some() {
                String::new()
            } else {
                text
            }
        }
        Format::Json => json_line(&json!({
            "schema": 1,
            "command": "compose",
            "op": op.name(),
            "specs": specs,
            "diagram": text,
        })),
    }))
}

fn run_verify(seed: u64, format: Format) -> Outcome {
    let results = run_all(seed);
    let failed = results.iter().filter(|r| !r.passed).count();
    let stdout = match format {
        Format::Table => {
            let mut out = String::new();
            for r in &results {
                if r.passed {
                    writeln!(out, "{}: pass", r.name).unwrap();
                } else {
                    out.push_str(&r.to_text());
                }
            }
            if failed == 0 {
                writeln!(out, "suite: pass ({} checks)", results.len()).unwrap();
            } else {
                writeln!(out, "suite: FAIL ({failed} of {} checks)", results.len()).unwrap();
            }
            out
        }
        Format::Json => {
            let checks: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "passed": r.passed,
                        "transcript": r.transcript,
                    })
                })
                .collect();
            json_line(&json!({
                "schema": 1,
                "command": "verify",
                "seed": seed,
                "failed": failed,
                "checks": checks,
            }))
        }
    };
    Outcome { stdout, failed: failed > 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn links(specs: &[&str]) -> LinkArgs {
        LinkArgs { link: specs.iter().map(|s| s.to_string()).collect() }
    }

    fn table() -> FormatArg {
        FormatArg { format: Format::Table }
    }

    fn json_fmt() -> FormatArg {
        FormatArg { format: Format::Json }
    }

    #[test]
    fn parses_spec_examples() {
        assert!(Cli::try_parse_from(["stringlink", "invariants", "--link", "whitehead:2"]).is_ok());
        assert!(Cli::try_parse_from([
            "stringlink", "classify", "--link", "braidA:3:1:2", "--format", "json"
        ])
        .is_ok());
        assert!(Cli::try_parse_from([
            "stringlink", "compose", "--link", "whitehead:2", "--op", "inverse"
        ])
        .is_ok());
        assert!(Cli::try_parse_from(["stringlink", "unlink"]).is_err());
        assert!(Cli::try_parse_from(["stringlink", "verdict"]).is_err());
    }

    #[test]
    fn truncation_reads_environment_default() {
        std::env::set_var("STRINGLINK_TRUNCATION", "6");
        let cli =
            Cli::try_parse_from(["stringlink", "invariants", "--link", "trivial:2"]).unwrap();
        std::env::remove_var("STRINGLINK_TRUNCATION");
        match cli.command {
            Command::Invariants { truncation, .. } => assert_eq!(truncation, Some(6)),
            _ => panic!("expected invariants"),
        }
    }

    #[test]
    fn builder_specs_match_library_builders() {
        assert_eq!(build_link("whitehead:2").unwrap(), whitehead(2).unwrap());
        assert_eq!(build_link("borromean").unwrap(), borromean());
        assert_eq!(build_link("twistedhopf:-2").unwrap(), twisted_hopf(-2));
        assert_eq!(build_link("braidA:3:1:2").unwrap(), braid_generator_a(3, 1, 2).unwrap());
        assert_eq!(build_link("trivial:4").unwrap(), trivial(4));
        assert_eq!(build_link("figureeight").unwrap(), figure_eight_component());
    }

    #[test]
    fn malformed_builder_specs_are_rejected() {
        assert!(build_link("trivial").unwrap_err().contains("argument"));
        assert!(build_link("trivial:x").unwrap_err().contains("bad integer"));
        assert!(build_link("trivial:0").unwrap_err().contains("positive"));
        assert!(build_link("borromean:3").unwrap_err().contains("argument"));
        assert!(build_link("whitehead:1").unwrap_err().contains("out of range"));
        assert!(build_link("chainlink:2").unwrap_err().contains("missing file"));
    }

    #[test]
    fn file_specs_round_trip_through_the_text_format() {
        let path = std::env::temp_dir().join("stringlink-cli-whitehead.txt");
        fs::write(&path, write_diagram(&whitehead(2).unwrap())).unwrap();
        let spec = path.to_str().unwrap().to_string();
        assert_eq!(build_link(&spec).unwrap(), whitehead(2).unwrap());
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn verdict_line_for_the_whitehead_pattern() {
        let out = run(&Command::Verdict { links: links(&["whitehead:2"]), format: table() })
            .unwrap()
            .stdout;
        assert_eq!(out, "LinkingTrivialNot0Solvable; not 0.5-solvable (SL = 1)\n");
    }

    #[test]
    fn classify_table_for_one_full_twist() {
        let out = run(&Command::Classify { links: links(&["twistedhopf:1"]), format: table() })
            .unwrap()
            .stdout;
        assert!(out.contains("class: (0,0,0,1) in Z₂ ⊕ Z₂ ⊕ Z₂ ⊕ Z"), "{out}");
        assert!(out.contains("verdict: NotLinkingTrivial"), "{out}");
    }

    #[test]
    fn classify_table_for_the_borromean_rings() {
        let out = run(&Command::Classify { links: links(&["borromean"]), format: table() })
            .unwrap()
            .stdout;
        assert!(out.contains("quotient: Z^1 ⊕ Z₂^3 ⊕ Z₂^3"), "{out}");
        assert!(out.contains("mu 123 = 1"), "{out}");
        assert!(out.contains("verdict: LinkingTrivialNot0Solvable"), "{out}");
    }

    #[test]
    fn classify_notes_nonvanishing_linking_for_three_strands() {
        let out = run(&Command::Classify { links: links(&["braidA:3:1:3"]), format: table() })
            .unwrap()
            .stdout;
        assert!(out.contains("lk 13 = 1"), "{out}");
        assert!(out.contains("note: order-0"), "{out}");
    }

    #[test]
    fn invariants_of_the_trivial_link_all_vanish() {
        let cmd = Command::Invariants {
            links: links(&["trivial:4"]),
            truncation: None,
            format: table(),
        };
        let out = run(&cmd).unwrap().stdout;
        for line in out.lines().filter(|l| l.contains('=')) {
            assert!(line.ends_with("= 0"), "{line}");
        }
        assert!(out.contains("mu 1122 = 0"), "{out}");
        assert!(out.contains("arf 4 = 0"), "{out}");
    }

    #[test]
    fn truncation_below_the_minimum_is_a_usage_error() {
        let cmd = Command::Invariants {
            links: links(&["whitehead:2"]),
            truncation: Some(3),
            format: table(),
        };
        assert!(run(&cmd).unwrap_err().contains("too small"));
    }

    #[test]
    fn json_output_is_deterministic_and_round_trips() {
        let cmd = || Command::Classify { links: links(&["twistedhopf:1"]), format: json_fmt() };
        let first = run(&cmd()).unwrap().stdout;
        let second = run(&cmd()).unwrap().stdout;
        assert_eq!(first, second);
        let value: Value = serde_json::from_str(first.trim_end()).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["links"][0]["class2"], json!([0, 0, 0, 1]));
        assert_eq!(json_line(&value), first);
    }

    #[test]
    fn compose_stacks_twists_additively() {
        let cmd = Command::Compose {
            links: links(&["twistedhopf:1", "twistedhopf:1"]),
            op: Op::Stack,
            out: None,
            format: table(),
        };
        assert_eq!(run(&cmd).unwrap().stdout, write_diagram(&twisted_hopf(2)));
    }

    #[test]
    fn compose_arity_is_per_operation() {
        let unary = Command::Compose {
            links: links(&["whitehead:2"]),
            op: Op::Inverse,
            out: None,
            format: table(),
        };
        assert_eq!(run(&unary).unwrap().stdout, write_diagram(&whitehead(2).unwrap().inverse()));
        let short = Command::Compose {
            links: links(&["whitehead:2"]),
            op: Op::Stack,
            out: None,
            format: table(),
        };
        assert!(run(&short).unwrap_err().contains("at least 2"));
        let long = Command::Compose {
            links: links(&["trivial:2", "trivial:2", "trivial:2"]),
            op: Op::Commutator,
            out: None,
            format: table(),
        };
        assert!(run(&long).unwrap_err().contains("exactly 2"));
    }

    #[test]
    fn compose_closure_writes_a_closed_diagram_file() {
        let cmd = Command::Compose {
            links: links(&["twistedhopf:1"]),
            op: Op::Closure,
            out: None,
            format: table(),
        };
        let out = run(&cmd).unwrap().stdout;
        assert!(out.starts_with("# closed diagram, 2 components\nclosed\n"), "{out}");
    }

    #[test]
    fn compose_out_writes_a_loadable_file() {
        let path = std::env::temp_dir().join("stringlink-cli-composed.txt");
        let cmd = Command::Compose {
            links: links(&["whitehead:2", "whitehead:2"]),
            op: Op::Stack,
            out: Some(path.clone()),
            format: table(),
        };
        assert_eq!(run(&cmd).unwrap().stdout, "");
        let spec = path.to_str().unwrap().to_string();
        let expected = whitehead(2).unwrap().stack(&whitehead(2).unwrap()).unwrap();
        assert_eq!(build_link(&spec).unwrap(), expected);
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn verify_suite_passes_and_reports_every_check() {
        let outcome = run_verify(0, Format::Table);
        assert!(!outcome.failed);
        assert!(outcome.stdout.contains("suite: pass"), "{}", outcome.stdout);
        assert!(outcome.stdout.contains("nonsplitting_obstruction"), "{}", outcome.stdout);
    }
}
