//! `pfrep`: linear Pfaffian representations of ternary forms from the
//! command line.
//!
//! Every invocation terminates with exit code 0-4. Command payloads (the
//! representation document, the Pfaffian value, reports) go to standard
//! output so they can be redirected to files and re-ingested; the last line
//! the process emits is always a machine-parsable summary on standard error
//! of the form `RESULT command=<name> status=<ok|fail|error> exit=<code>
//! key=value...`. Output bytes are a deterministic function of the
//! arguments, the inputs, and the seed.

use std::fs;
use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use pfrep_core::repr::{
    self, build, form_ring, is_nice, represent, symbolic_coefficient_ring, CoefficientVector,
};
use pfrep_core::sample::Sampler;
use pfrep_core::{json, latex, Element, Error, MultiPoly, Representation, Ring};

#[derive(Parser)]
#[command(
    name = "pfrep",
    version,
    about = "Exact linear Pfaffian representations of homogeneous ternary forms of degree 1-5",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct three skew-symmetric matrices A, B, C with
    /// Pf(x*A + y*B + z*C) = f, verify the identity, and print them.
    Represent {
        /// Coefficient ring: int, rat, mod:n, or sym (generic symbolic
        /// coefficients; requires --degree).
        #[arg(long, default_value = "int")]
        ring: String,
        /// Output format for the representation document.
        #[arg(long, default_value = "json", value_parser = ["text", "json", "latex"])]
        format: String,
        /// Degree of the form; inferred from the polynomial when omitted.
        #[arg(long)]
        degree: Option<u32>,
        /// The form, e.g. "x^4 + y^4 + z^4".
        polynomial: String,
    },
    /// Recompute the Pfaffian of a stored representation and compare it
    /// against a form; exit 0 on exact match, 1 on mismatch.
    Verify {
        /// Coefficient ring the polynomial is read in; must match the
        /// document's ring.
        #[arg(long, default_value = "int")]
        ring: String,
        /// Also check det(M) = f^2 with an independent division-free
        /// determinant.
        #[arg(long)]
        cross_check: bool,
        /// The form the representation is claimed to represent.
        polynomial: String,
        /// Path to a representation document produced by `represent`.
        representation: PathBuf,
    },
    /// Pfaffian of one skew-symmetric matrix from a JSON document.
    Pf {
        /// Ring the matrix entries are read in: int, rat, or mod:n.
        #[arg(long, default_value = "int")]
        ring: String,
        /// Output format for the value.
        #[arg(long, default_value = "text", value_parser = ["text", "json", "latex"])]
        format: String,
        /// Path to a matrix document {"size": n, "entries": [[i, j, "v"], ...]}.
        matrix: PathBuf,
    },
    /// Decide whether the generic representation of a degree is nice:
    /// every entry 0, +-1, or a signed coefficient, each coefficient
    /// appearing exactly once.
    Nice {
        /// Output format for the verdict and witnesses.
        #[arg(long, default_value = "text", value_parser = ["text", "json", "latex"])]
        format: String,
        /// Degree, 2 through 5.
        degree: u32,
    },
    /// Run the symbolic identity checks, randomized specialization trials,
    /// and Pfaffian identity suites; exit 0 only if everything passes.
    Selftest {
        /// Restrict trials to one ring (int, rat, mod:n, or sym); default
        /// runs int, rat, mod:5, and mod:6.
        #[arg(long)]
        ring: Option<String>,
        /// Specialization trials per ring per degree.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Seed for all randomized trials.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Represent { .. } => "represent",
            Command::Verify { .. } => "verify",
            Command::Pf { .. } => "pf",
            Command::Nice { .. } => "nice",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// What a command run came to: the exit code, the status word for the
/// RESULT line, and extra key=value pairs for it.
struct Outcome {
    exit: i32,
    status: &'static str,
    extras: Vec<(&'static str, String)>,
}

impl Outcome {
    fn ok(extras: Vec<(&'static str, String)>) -> Outcome {
        Outcome {
            exit: 0,
            status: "ok",
            extras,
        }
    }

    fn fail(extras: Vec<(&'static str, String)>) -> Outcome {
        Outcome {
            exit: 1,
            status: "fail",
            extras,
        }
    }

    fn error(exit: i32, message: String) -> Outcome {
        eprintln!("error: {message}");
        Outcome {
            exit,
            status: "error",
            extras: vec![("error", message)],
        }
    }
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            let attempted = argv
                .get(1)
                .map(String::as_str)
                .filter(|s| ["represent", "verify", "pf", "nice", "selftest"].contains(s))
                .unwrap_or("none");
            let status = if exit_code == 0 { "ok" } else { "error" };
            emit_result(attempted, status, exit_code, &[]);
            exit(exit_code);
        }
    };
    let name = cli.command.name();
    let outcome = match cli.command {
        Command::Represent {
            ring,
            format,
            degree,
            polynomial,
        } => cmd_represent(&ring, &format, degree, &polynomial),
        Command::Verify {
            ring,
            cross_check,
            polynomial,
            representation,
        } => cmd_verify(&ring, cross_check, &polynomial, &representation),
        Command::Pf {
            ring,
            format,
            matrix,
        } => cmd_pf(&ring, &format, &matrix),
        Command::Nice { format, degree } => cmd_nice(&format, degree),
        Command::Selftest { ring, trials, seed } => cmd_selftest(ring.as_deref(), trials, seed),
    };
    emit_result(name, outcome.status, outcome.exit, &outcome.extras);
    exit(outcome.exit);
}

fn emit_result(command: &str, status: &str, exit: i32, extras: &[(&'static str, String)]) {
    let mut line = format!("RESULT command={command} status={status} exit={exit}");
    for (key, value) in extras {
        line.push(' ');
        line.push_str(key);
        line.push('=');
        line.push_str(&quote(value));
    }
    eprintln!("{line}");
}

/// Quotes a RESULT value when it contains anything that would break
/// whitespace-splitting key=value parsers.
fn quote(value: &str) -> String {
    let plain = !value.is_empty()
        && value
            .chars()
            .all(|c| !c.is_whitespace() && c != '"' && c != '=' && c != '\\');
    if plain {
        value.to_string()
    } else {
        format!("\"{}\"", value.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Resolves a `--ring` token; `sym` needs the degree to know the symbol set.
fn resolve_ring(token: &str, degree: Option<u32>) -> Result<Ring, Error> {
    if token == "sym" {
        match degree {
            Some(d) => symbolic_coefficient_ring(d),
            None => Err(Error::InvalidRing(
                "--ring sym requires --degree to fix the coefficient symbols".into(),
            )),
        }
    } else {
        Ring::parse_token(token)
    }
}

/// Parses a form in `base[x,y,z]`.
fn parse_form(base: &Ring, text: &str) -> Result<MultiPoly, Error> {
    let fring = form_ring(base.clone())?;
    let poly_ring = fring.as_poly().expect("form ring is polynomial").clone();
    MultiPoly::parse(&poly_ring, text)
}

// ---------------------------------------------------------------------------
// represent

fn represent_exit(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::UnsupportedDegree(_) | Error::DegreeError(_) | Error::AmbiguousDegree => 3,
        _ => 2,
    }
}

fn cmd_represent(ring: &str, format: &str, degree: Option<u32>, polynomial: &str) -> Outcome {
    let base = match resolve_ring(ring, degree) {
        Ok(r) => r,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let f = match parse_form(&base, polynomial) {
        Ok(f) => f,
        Err(e) => return Outcome::error(represent_exit(&e), e.to_string()),
    };
    let rep = match represent(&f, degree) {
        Ok(rep) => rep,
        Err(e) => return Outcome::error(represent_exit(&e), e.to_string()),
    };
    // The construction is re-checked from scratch before anything is
    // emitted; a failure here is a bug in this program, never a property
    // of the input, and gets its own exit code.
    match repr::verify(&rep, &f, false) {
        Ok(report) if report.pfaffian_matches => {}
        Ok(report) => {
            use pfrep_core::Style;
            return Outcome::error(
                4,
                format!(
                    "internal verification failure: Pf(M) - f = {}",
                    report.difference.format(Style::Plain)
                ),
            );
        }
        Err(e) => return Outcome::error(4, format!("internal verification failure: {e}")),
    }
    let rendered = match format {
        "json" => match json::representation_to_json(&rep) {
            Ok(s) => s,
            Err(e) => return Outcome::error(2, e.to_string()),
        },
        "latex" => latex::representation(&rep),
        _ => representation_text(&rep),
    };
    println!("{rendered}");
    let token = json::ring_token_for(&rep).unwrap_or_else(|_| "sym".into());
    Outcome::ok(vec![
        ("degree", rep.degree().to_string()),
        ("size", rep.size().to_string()),
        ("ring", token),
    ])
}

/// Human-readable rendering: one line per stored entry, matrices in order.
fn representation_text(rep: &Representation) -> String {
    let ring = rep.ring();
    let mut out = format!(
        "degree {}\nsize {}\nring {}",
        rep.degree(),
        rep.size(),
        ring
    );
    for (name, m) in rep.matrices() {
        out.push_str(&format!("\nmatrix {name}"));
        for (&(i, j), v) in m.upper_entries() {
            out.push_str(&format!("\n  ({i},{j}) = {}", ring.format_element(v)));
        }
    }
    if let Some(derived) = rep.derived() {
        out.push_str("\nderived");
        for (name, v) in derived {
            out.push_str(&format!("\n  {name} = {}", ring.format_element(v)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(ring: &str, cross_check: bool, polynomial: &str, path: &PathBuf) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(2, format!("cannot read {}: {e}", path.display())),
    };
    let rep = match json::representation_from_json(&text) {
        Ok(rep) => rep,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let requested = match resolve_ring(ring, Some(rep.degree())) {
        Ok(r) => r,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    if &requested != rep.ring() {
        return Outcome::error(
            2,
            format!(
                "ring mismatch: polynomial read over {requested}, representation over {}",
                rep.ring()
            ),
        );
    }
    let f = match parse_form(&requested, polynomial) {
        Ok(f) => f,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let report = match repr::verify(&rep, &f, cross_check) {
        Ok(r) => r,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    use pfrep_core::Style;
    let pf_status = if report.pfaffian_matches {
        "match"
    } else {
        "mismatch"
    };
    println!("pfaffian: {pf_status}");
    if !report.pfaffian_matches {
        println!("Pf(M) - f = {}", report.difference.format(Style::Plain));
    }
    let det_status = match report.det_matches {
        None => "skipped",
        Some(true) => "match",
        Some(false) => "mismatch",
    };
    if cross_check {
        println!("determinant: {det_status}");
    }
    let extras = vec![
        ("pfaffian", pf_status.to_string()),
        ("determinant", det_status.to_string()),
    ];
    if report.ok() {
        Outcome::ok(extras)
    } else {
        Outcome::fail(extras)
    }
}

// ---------------------------------------------------------------------------
// pf

fn cmd_pf(ring: &str, format: &str, path: &PathBuf) -> Outcome {
    let ring = match Ring::parse_token(ring) {
        Ok(r) => r,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(2, format!("cannot read {}: {e}", path.display())),
    };
    let m = match json::skew_from_json(&ring, &text) {
        Ok(m) => m,
        Err(e @ Error::ShapeError(_)) => return Outcome::error(3, e.to_string()),
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let value = m.pfaffian();
    let value_text = ring.format_element(&value);
    match format {
        "json" => println!(
            "{}",
            serde_json::json!({ "size": m.size(), "pfaffian": value_text })
        ),
        "latex" => println!("{}", latex::element(&ring, &value)),
        _ => println!("{value_text}"),
    }
    Outcome::ok(vec![("size", m.size().to_string()), ("value", value_text)])
}

// ---------------------------------------------------------------------------
// nice

fn cmd_nice(format: &str, degree: u32) -> Outcome {
    if !(2..=5).contains(&degree) {
        return Outcome::error(
            3,
            format!("degree error: niceness is assessed for degrees 2 through 5, got {degree}"),
        );
    }
    let rep = match CoefficientVector::generic(degree).and_then(|cv| build(&cv)) {
        Ok(rep) => rep,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let report = match is_nice(&rep) {
        Ok(r) => r,
        Err(e) => return Outcome::error(2, e.to_string()),
    };
    let ring = rep.ring();
    match format {
        "json" => {
            let entry_violations: Vec<serde_json::Value> = report
                .entry_violations
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "matrix": w.matrix,
                        "row": w.row,
                        "col": w.col,
                        "value": ring.format_element(&w.value),
                    })
                })
                .collect();
            let multiplicity_violations: Vec<serde_json::Value> = report
                .multiplicity_violations
                .iter()
                .map(|(symbol, count)| serde_json::json!({ "symbol": symbol, "count": count }))
                .collect();
            let doc = serde_json::json!({
                "degree": degree,
                "nice": report.nice,
                "entry_violations": entry_violations,
                "multiplicity_violations": multiplicity_violations,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        "latex" => {
            println!("degree {degree}");
            println!("nice: {}", report.nice);
            for w in &report.entry_violations {
                println!(
                    "entry {}({},{}) = {}",
                    w.matrix,
                    w.row,
                    w.col,
                    latex::element(ring, &w.value)
                );
            }
            for (symbol, count) in &report.multiplicity_violations {
                println!("coefficient {symbol} occupies {count} entries");
            }
        }
        _ => {
            println!("degree {degree}");
            println!("nice: {}", report.nice);
            for w in &report.entry_violations {
                println!(
                    "entry {}({},{}) = {}",
                    w.matrix,
                    w.row,
                    w.col,
                    ring.format_element(&w.value)
                );
            }
            for (symbol, count) in &report.multiplicity_violations {
                println!("coefficient {symbol} occupies {count} entries");
            }
        }
    }
    let violations = report.entry_violations.len() + report.multiplicity_violations.len();
    Outcome::ok(vec![
        ("degree", degree.to_string()),
        ("nice", report.nice.to_string()),
        ("violations", violations.to_string()),
    ])
}

// ---------------------------------------------------------------------------
// selftest

/// The ring a trial runs over; `sym` depends on the degree under test.
enum RingChoice {
    Fixed(Ring),
    Symbolic,
}

impl RingChoice {
    fn ring_for(&self, degree: u32) -> Ring {
        match self {
            RingChoice::Fixed(r) => r.clone(),
            RingChoice::Symbolic => {
                symbolic_coefficient_ring(degree).expect("degrees 1-5 have symbol sets")
            }
        }
    }
}

fn cmd_selftest(ring: Option<&str>, trials: u32, seed: u64) -> Outcome {
    let choices: Vec<(String, RingChoice)> = match ring {
        None => ["int", "rat", "mod:5", "mod:6"]
            .iter()
            .map(|t| {
                (
                    t.to_string(),
                    RingChoice::Fixed(Ring::parse_token(t).expect("built-in token")),
                )
            })
            .collect(),
        Some("sym") => vec![("sym".to_string(), RingChoice::Symbolic)],
        Some(token) => match Ring::parse_token(token) {
            Ok(r) => vec![(token.to_string(), RingChoice::Fixed(r))],
            Err(e) => return Outcome::error(2, e.to_string()),
        },
    };

    let mut failures: Vec<String> = Vec::new();

    // (a) The five universal identities: Pf of the generic pencil equals the
    // generic form, certifying the construction over every ring at once.
    let mut identities = 0;
    for degree in 1..=5u32 {
        let ok = (|| -> Result<bool, Error> {
            let cv = CoefficientVector::generic(degree)?;
            let rep = build(&cv)?;
            let f = cv.to_form()?;
            Ok(repr::verify(&rep, &f, false)?.pfaffian_matches)
        })()
        .unwrap_or(false);
        if ok {
            identities += 1;
            println!("symbolic identity degree {degree}: ok");
        } else {
            println!("symbolic identity degree {degree}: FAIL");
            failures.push(format!("symbolic identity degree {degree}"));
        }
    }

    // (b) Randomized specialization trials per ring per degree.
    for (ri, (label, choice)) in choices.iter().enumerate() {
        for degree in 1..=5u32 {
            let ring = choice.ring_for(degree);
            let mut sampler = Sampler::new(
                seed.wrapping_add((ri as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
                    .wrapping_add(u64::from(degree)),
            );
            let slots = repr::slot_count(degree).expect("supported degree");
            let mut passed = 0;
            for trial in 0..trials {
                let coeffs: Vec<Element> = (0..slots).map(|_| sampler.element(&ring)).collect();
                let outcome = (|| -> Result<bool, Error> {
                    let cv = CoefficientVector::new(ring.clone(), degree, coeffs.clone())?;
                    let f = cv.to_form()?;
                    let rep = represent(&f, Some(degree))?;
                    Ok(repr::verify(&rep, &f, false)?.pfaffian_matches)
                })();
                if outcome.unwrap_or(false) {
                    passed += 1;
                } else {
                    let coeff_text: Vec<String> =
                        coeffs.iter().map(|c| ring.format_element(c)).collect();
                    failures.push(format!(
                        "trial degree={degree} ring={label} seed={seed} trial={trial} \
                         coefficients=[{}]",
                        coeff_text.join(", ")
                    ));
                }
            }
            println!("trials degree {degree} ring {label}: {passed}/{trials}");
        }
    }

    // (c) Pfaffian identity suites over the integers.
    let int = Ring::integers();
    for size in [2usize, 4, 6, 8, 10] {
        let mut sampler = Sampler::new(seed.wrapping_add(0xDE70 + size as u64));
        let mut passed = 0;
        let runs = 20;
        for trial in 0..runs {
            let m = sampler.skew(&int, size);
            let pf = m.pfaffian();
            if m.determinant() == int.mul(&pf, &pf) {
                passed += 1;
            } else {
                failures.push(format!("det = pf^2 size={size} seed={seed} trial={trial}"));
            }
        }
        println!("det = pf^2 size {size}: {passed}/{runs}");
    }
    for size in [4usize, 6] {
        let mut sampler = Sampler::new(seed.wrapping_add(0xC000 + size as u64));
        let mut passed = 0;
        let runs = 20;
        for trial in 0..runs {
            let x = sampler.square(&int, size);
            let a = sampler.skew(&int, size);
            let ok = pfrep_core::pfaffian::congruence(&x, &a)
                .map(|xaxt| xaxt.pfaffian() == int.mul(&x.determinant(), &a.pfaffian()))
                .unwrap_or(false);
            if ok {
                passed += 1;
            } else {
                failures.push(format!("congruence size={size} seed={seed} trial={trial}"));
            }
        }
        println!("congruence size {size}: {passed}/{runs}");
    }

    let verdict = if failures.is_empty() {
        "all pass".to_string()
    } else {
        format!("{} failures", failures.len())
    };
    println!(
        "{identities}/5 symbolic identities, {trials}\u{d7}{} ring trials: {verdict}",
        choices.len()
    );
    for f in &failures {
        println!("failed: {f}");
    }

    let extras = vec![
        ("identities", format!("{identities}/5")),
        ("trials", trials.to_string()),
        ("rings", choices.len().to_string()),
        ("failures", failures.len().to_string()),
    ];
    if failures.is_empty() {
        Outcome::ok(extras)
    } else {
        Outcome::fail(extras)
    }
}
