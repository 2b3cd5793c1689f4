//! Command-line front end: input parsing, dispatch and document emission.
//!
//! Input is one polynomial per line; the first two are `P` and `Q`, the rest
//! are constraints `F`. Blank lines and lines starting with `#` are ignored.

mod output;
mod parser;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser as ClapParser, ValueEnum};

pub use output::*;
pub use parser::{parse_polynomial, MAX_EXPONENT};

use crate::arith::{int, BiPoly, Rational};
use crate::error::{Error, Result};
use crate::isolation::isolate_boxes_with;
use crate::query::{
    real_root_count, rur_of_radical, sign_at_all, sign_at_all_naive, split_by_sign,
};
use crate::rur::{
    multiplicities, rur_candidate, solve_rur, verify_rur, verify_rur_consistency, Rur, SearchMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// RUR, isolating boxes and multiplicities
    Solve,
    /// The four RUR polynomials and the separating form
    Rur,
    /// Sign of each constraint at every real solution
    Sign,
    /// Split the solutions by vanishing of each constraint
    Split,
    /// RUR of the radical of <P, Q, F1, ..., Fk>
    Radical,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Solve => "solve",
            Command::Rur => "rur",
            Command::Sign => "sign",
            Command::Split => "split",
            Command::Radical => "radical",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[default]
    Det,
    Rand,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Solver options carried alongside the parsed polynomials.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Options {
    pub form: Option<i64>,
    pub mode: Mode,
    pub seed: u64,
    pub trials: u32,
    pub max_width: Option<Rational>,
    pub format: Format,
}

impl Options {
    fn search_mode(&self) -> SearchMode {
        match self.mode {
            Mode::Det => SearchMode::Deterministic,
            Mode::Rand => SearchMode::Randomized {
                seed: self.seed,
                trials: self.trials.max(1),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedSystem {
    pub p: BiPoly,
    pub q: BiPoly,
    pub constraints: Vec<BiPoly>,
    pub options: Options,
}

/// Parse the line-oriented input format.
pub fn parse_system(text: &str, options: Options) -> Result<ParsedSystem> {
    let mut polys = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let p = parse_polynomial(line).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos,
                msg: format!("line {}: {msg}", lineno + 1),
            },
            other => other,
        })?;
        polys.push(p);
    }
    if polys.len() < 2 {
        return Err(Error::Parse {
            pos: text.len(),
            msg: "expected at least two polynomials (P and Q)".into(),
        });
    }
    let constraints = polys.split_off(2);
    let q = polys.pop().unwrap();
    let p = polys.pop().unwrap();
    Ok(ParsedSystem {
        p,
        q,
        constraints,
        options,
    })
}

struct Base {
    rur: Rur,
    form: SeparatingDoc,
}

fn base_rur(sys: &ParsedSystem) -> Result<Base> {
    let opts = &sys.options;
    if let Some(a) = opts.form {
        let rur = rur_candidate(&sys.p, &sys.q, &int(a))?;
        let v = verify_rur(&rur, &sys.p, &sys.q);
        if !v.is_valid() {
            return Err(Error::BadParameter(format!(
                "X + {a}*Y does not give a valid representation"
            )));
        }
        return Ok(Base {
            form: SeparatingDoc {
                a: a.to_string(),
                source: "override",
                mode: None,
                distinct_values: None,
            },
            rur,
        });
    }
    let (rur, sep) = solve_rur(&sys.p, &sys.q, opts.search_mode())?;
    Ok(Base {
        form: SeparatingDoc {
            a: sep.a.to_string(),
            source: "search",
            mode: Some(match opts.mode {
                Mode::Det => "det",
                Mode::Rand => "rand",
            }),
            distinct_values: Some(sep.n),
        },
        rur,
    })
}

fn require_constraints(sys: &ParsedSystem) -> Result<()> {
    if sys.constraints.is_empty() {
        return Err(Error::InvalidInput(
            "this command needs at least one constraint line after P and Q".into(),
        ));
    }
    Ok(())
}

fn run_body(command: Command, sys: &ParsedSystem) -> Result<Body> {
    if matches!(command, Command::Sign | Command::Split | Command::Radical) {
        require_constraints(sys)?;
    }
    let base = base_rur(sys)?;
    let r = &base.rur;
    let max_width = sys.options.max_width.as_ref();
    Ok(match command {
        Command::Solve => {
            let v = verify_rur(r, &sys.p, &sys.q);
            let boxes = isolate_boxes_with(r, max_width)?;
            Body::Solve(SolveBody {
                separating_form: base.form,
                rur: r.into(),
                verification: (&v).into(),
                real_solutions: boxes.len(),
                boxes: boxes.iter().map(Into::into).collect(),
                multiplicities: multiplicities(r)?,
            })
        }
        Command::Rur => {
            let v = verify_rur(r, &sys.p, &sys.q);
            Body::Rur(RurBody {
                separating_form: base.form,
                rur: r.into(),
                verification: (&v).into(),
            })
        }
        Command::Sign => {
            let mut queries = Vec::new();
            for f in &sys.constraints {
                let s = sign_at_all(r, f)?;
                let n = sign_at_all_naive(r, f)?;
                queries.push(SignEntry {
                    f: f.to_string(),
                    method: s.method,
                    naive_agrees: s.signs == n.signs,
                    signs: s.signs,
                });
            }
            Body::Sign(SignBody {
                separating_form: base.form,
                real_solutions: real_root_count(r)?,
                queries,
            })
        }
        Command::Split => Body::Split(SplitBody {
            f_bar: poly_strs(&r.f_bar()),
            separating_form: base.form,
            queries: sys
                .constraints
                .iter()
                .map(|f| {
                    let s = split_by_sign(r, f);
                    SplitEntry {
                        f: f.to_string(),
                        f_zero: poly_strs(&s.f_zero),
                        f_nonzero: poly_strs(&s.f_nonzero),
                    }
                })
                .collect(),
        }),
        Command::Radical => {
            let mut cur = r.clone();
            for f in &sys.constraints {
                cur = rur_of_radical(&cur, &sys.p, &sys.q, f)?;
            }
            let v = verify_rur_consistency(&cur, &sys.p, &sys.q);
            let boxes = isolate_boxes_with(&cur, max_width)?;
            Body::Radical(RadicalBody {
                separating_form: base.form,
                rur: (&cur).into(),
                verification: (&v).into(),
                boxes: boxes.iter().map(Into::into).collect(),
            })
        }
    })
}

/// Run `command` and wrap the outcome, success or error, in a document.
pub fn run(command: Command, sys: &ParsedSystem) -> Document {
    let (result, error) = match run_body(command, sys) {
        Ok(b) => (Some(b), None),
        Err(e) => (None, Some(ErrorDoc::from(&e))),
    };
    Document {
        schema: SCHEMA,
        command: command.name().into(),
        input: InputDoc {
            p: sys.p.to_string(),
            q: sys.q.to_string(),
            f: sys.constraints.iter().map(ToString::to_string).collect(),
        },
        result,
        error,
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

fn poly_text(coeffs: &[String]) -> String {
    format!("[{}]", coeffs.join(", "))
}

/// Plain-text rendering for humans.
pub fn render_text(doc: &Document) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}: P = {}, Q = {}",
        doc.command, doc.input.p, doc.input.q
    );
    if let Some(e) = &doc.error {
        let _ = writeln!(s, "error [{}]: {}", e.code, e.message);
        return s;
    }
    let form = |s: &mut String, f: &SeparatingDoc| {
        let _ = writeln!(s, "separating form: X + {}*Y ({})", f.a, f.source);
    };
    let rur = |s: &mut String, r: &RurDoc| {
        let _ = writeln!(s, "f  = {}", poly_text(&r.f));
        let _ = writeln!(s, "f1 = {}", poly_text(&r.f1));
        let _ = writeln!(s, "fX = {}", poly_text(&r.fx));
        let _ = writeln!(s, "fY = {}", poly_text(&r.fy));
    };
    let boxes = |s: &mut String, bs: &[BoxDoc]| {
        for b in bs {
            let _ = writeln!(
                s,
                "root {} (mult {}): X in [{}, {}], Y in [{}, {}]",
                b.root_index, b.multiplicity, b.x[0], b.x[1], b.y[0], b.y[1]
            );
        }
    };
    match doc.result.as_ref() {
        Some(Body::Solve(b)) => {
            form(&mut s, &b.separating_form);
            rur(&mut s, &b.rur);
            let _ = writeln!(s, "{} real solution(s)", b.real_solutions);
            boxes(&mut s, &b.boxes);
        }
        Some(Body::Rur(b)) => {
            form(&mut s, &b.separating_form);
            rur(&mut s, &b.rur);
        }
        Some(Body::Sign(b)) => {
            form(&mut s, &b.separating_form);
            for q in &b.queries {
                let _ = writeln!(s, "sign of {} : {:?}", q.f, q.signs);
            }
        }
        Some(Body::Split(b)) => {
            form(&mut s, &b.separating_form);
            for q in &b.queries {
                let _ = writeln!(
                    s,
                    "{}: zero part {}, nonzero part {}",
                    q.f,
                    poly_text(&q.f_zero),
                    poly_text(&q.f_nonzero)
                );
            }
        }
        Some(Body::Radical(b)) => {
            form(&mut s, &b.separating_form);
            rur(&mut s, &b.rur);
            boxes(&mut s, &b.boxes);
        }
        None => {}
    }
    s
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidInput(_) => 2,
        _ => 3,
    }
}

#[derive(Debug, ClapParser)]
#[command(
    name = "birur",
    version,
    about = "Solve bivariate polynomial systems exactly"
)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input file; stdin when absent or "-"
    input: Option<PathBuf>,
    /// Use X + a*Y as separating form (checked before use)
    #[arg(long, allow_hyphen_values = true)]
    form: Option<i64>,
    #[arg(long, value_enum, default_value_t = Mode::Det)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidates sampled in rand mode
    #[arg(long, default_value_t = 64)]
    trials: u32,
    /// Refine boxes until each side is at most this wide, e.g. 1/1000000
    #[arg(long, value_parser = parse_rational)]
    max_width: Option<Rational>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| format!("not a rational: {s}"))?;
    if r <= Rational::from_integer(0.into()) {
        return Err("must be positive".into());
    }
    Ok(r)
}

/// Full CLI entry point; returns the process exit code.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut text = String::new();
    let read = match args.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| text = s),
        _ => stdin.read_to_string(&mut text).map(|_| ()),
    };
    if let Err(e) = read {
        let _ = writeln!(err, "birur: cannot read input: {e}");
        return 1;
    }
    let options = Options {
        form: args.form,
        mode: args.mode,
        seed: args.seed,
        trials: args.trials,
        max_width: args.max_width,
        format: if args.text {
            Format::Text
        } else {
            Format::Json
        },
    };
    let sys = match parse_system(&text, options) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "birur: {e}");
            if !args.text {
                let doc = serde_json::json!({
                    "schema": SCHEMA,
                    "command": args.command.name(),
                    "error": { "code": e.code(), "message": e.to_string() },
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            return exit_code(&e);
        }
    };
    let doc = run(args.command, &sys);
    let rendered = match sys.options.format {
        Format::Json => render_json(&doc),
        Format::Text => render_text(&doc),
    };
    if out.write_all(rendered.as_bytes()).is_err() {
        return 1;
    }
    match &doc.error {
        None => 0,
        Some(e) => {
            let _ = writeln!(err, "birur: {}", e.message);
            if matches!(e.code, "ParseError" | "InvalidInput") {
                2
            } else {
                3
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str], input: &str) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["birur"];
        argv.extend_from_slice(args);
        let code = main_with(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn solve_circle_line() {
        let (code, out) = run_cli(&["solve"], "X^2 + Y^2 - 1\nX - Y\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], "birur/1");
        // X alone separates, so the search stops at a = 0
        assert_eq!(v["result"]["separating_form"]["a"], "0");
        assert_eq!(
            v["result"]["rur"]["f"],
            serde_json::json!(["-1/2", "0", "1"])
        );
        assert_eq!(v["result"]["boxes"].as_array().unwrap().len(), 2);
        let (_, out) = run_cli(&["solve", "--form", "1"], "X^2 + Y^2 - 1\nX - Y\n");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["rur"]["f"], serde_json::json!(["-2", "0", "1"]));
        assert_eq!(v["result"]["boxes"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn rur_with_form() {
        let (code, out) = run_cli(&["rur", "--form", "1"], "X^2 + Y^2 - 1\nX - Y\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let r = &v["result"]["rur"];
        assert_eq!(r["f1"], serde_json::json!(["0", "2"]));
        assert_eq!(r["fX"], serde_json::json!(["2"]));
        assert_eq!(r["fY"], serde_json::json!(["2"]));
    }

    #[test]
    fn errors_and_codes() {
        let (code, out) = run_cli(&["solve"], "X*Y\nX*Y\n");
        assert_eq!(code, 3);
        assert!(out.contains("NotZeroDimensional"));
        let (code, out) = run_cli(&["solve"], "X^Y\nX\n");
        assert_eq!(code, 2);
        assert!(out.contains("ParseError"));
        let (code, _) = run_cli(&["sign"], "X\nY\n");
        assert_eq!(code, 2);
        let (code, out) = run_cli(&["radical"], "X^2 - 1\nY\nX - 2\n");
        assert_eq!(code, 3);
        assert!(out.contains("EmptyVariety"));
        let (code, out) = run_cli(&["rur", "--form", "1"], "X^2 - 1\nY^2 - 1\n");
        assert_eq!(code, 3);
        assert!(out.contains("BadParameter"));
        let (code, _) = run_cli(&["bogus"], "");
        assert_eq!(code, 2);
    }

    #[test]
    fn deterministic_output() {
        let input = "X^2 + Y^2 - 1\nX - Y\nX\nX + Y - 1\n";
        for cmd in ["solve", "sign", "split", "radical"] {
            let a = run_cli(&[cmd], input);
            let b = run_cli(&[cmd], input);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn text_format() {
        let (code, out) = run_cli(&["solve", "--text"], "X\nY\n");
        assert_eq!(code, 0);
        assert!(out.contains("1 real solution(s)"));
    }
}
