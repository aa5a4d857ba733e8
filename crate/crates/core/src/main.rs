use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use superfuse::deligne::{
    closed_as_al, closed_as_as, gl0_tensor, lift, lift_inv, project_max_atypical, rt_tensor, truncate,
    ClosedFormulaResult, RtElement,
};
use superfuse::diagram::{bipartition_invariants, caps, is_cross, weight_diagram};
use superfuse::gl22::decompose;
use superfuse::parse::{parse_bipartition, parse_operand};
use superfuse::verify::{interpretations, run_suite, Suite};
use superfuse::Error;

#[derive(Parser)]
#[command(name = "superfuse", version, about = "Tensor products of mixed tensors and Gl(2|2) fusion")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Weight diagram, caps and invariants of a bipartition such as "(3|1,1,1)"
    Wdiag {
        bipartition: String,
        /// Vertex range to draw, e.g. -4..5
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// The lift isomorphism from the δ = 0 ring to the generic ring
    Lift {
        operand: String,
        /// Apply the inverse map instead
        #[arg(long)]
        inverse: bool,
    },
    /// Product in the generic Deligne ring
    TensorRt {
        left: String,
        right: String,
        #[command(flatten)]
        filters: Filters,
    },
    /// Product of indecomposables at δ = 0
    TensorGl0 {
        left: String,
        right: String,
        #[command(flatten)]
        filters: Filters,
    },
    /// Closed decomposition of AS_i ⊗ AS_j or AS_i ⊗ AL_j surviving in Gl(n|n)
    Closed {
        #[arg(value_enum)]
        kind: ClosedKind,
        i: u32,
        j: u32,
        #[arg(long, default_value_t = 2)]
        truncate: u32,
    },
    /// Decomposition of S^i ⊗ S^j for Gl(2|2)
    Fuse { i: i64, j: i64 },
    /// Run a verification suite: lr, deligne, gl22 or all
    Check {
        suite: String,
        #[arg(long)]
        max: Option<u32>,
    },
}

#[derive(clap::Args)]
struct Filters {
    /// Keep only the terms surviving in Gl(n|n)
    #[arg(long)]
    truncate: Option<u32>,
    /// Keep only the maximal atypical terms
    #[arg(long)]
    project_max_atypical: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedKind {
    AsAs,
    AsAl,
}

enum Failure {
    Usage(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Wdiag { bipartition, window } => wdiag(bipartition, window.as_deref(), fmt)?,
        Command::Lift { operand, inverse } => {
            let x = element(operand)?;
            let y = if *inverse { lift_inv(&x) } else { lift(&x) };
            print_element(&y, fmt, false);
        }
        Command::TensorRt { left, right, filters } => {
            let x = rt_tensor(&element(left)?, &element(right)?);
            print_element(&filters.apply(x), fmt, true);
        }
        Command::TensorGl0 { left, right, filters } => {
            let x = gl0_tensor(&element(left)?, &element(right)?)?;
            print_element(&filters.apply(x), fmt, true);
        }
        Command::Closed { kind, i, j, truncate } => {
            let c = match kind {
                ClosedKind::AsAs => closed_as_as(*i, *j, *truncate)?,
                ClosedKind::AsAl => closed_as_al(*i, *j, *truncate)?,
            };
            print_closed(&c, fmt);
        }
        Command::Fuse { i, j } => {
            if *i < 1 || *j < 1 {
                return Err(Error::InvalidArgument(format!("fuse needs i, j >= 1, got {i} {j}")).into());
            }
            let dec = decompose(*i, *j)?;
            match fmt {
                Format::Text => println!("{}", dec.to_text()),
                Format::Json => println!("{}", dec.to_json()),
                Format::Latex => println!("{}", dec.to_latex()),
            }
        }
        Command::Check { suite, max } => return check(suite, *max),
    }
    Ok(())
}

impl Filters {
    fn apply(&self, mut x: RtElement) -> RtElement {
        if let Some(n) = self.truncate {
            x = truncate(&x, n);
        }
        if self.project_max_atypical {
            x = project_max_atypical(&x);
        }
        x
    }
}

/// An operand literal, or an element in its JSON encoding.
fn element(src: &str) -> Result<RtElement, Error> {
    if src.trim_start().starts_with('[') {
        let v: serde_json::Value =
            serde_json::from_str(src).map_err(|e| Error::InvalidArgument(format!("bad JSON operand: {e}")))?;
        RtElement::from_json(&v)
    } else {
        Ok(RtElement::basis(parse_operand(src)?))
    }
}

fn print_element(x: &RtElement, fmt: Format, symbolic: bool) {
    match fmt {
        Format::Text if symbolic => println!("{}", x.to_symbolic_text()),
        Format::Text => println!("{}", x.to_text()),
        Format::Json => println!("{}", x.to_json()),
        Format::Latex => println!("{}", x.to_latex()),
    }
}

fn print_closed(c: &ClosedFormulaResult, fmt: Format) {
    match fmt {
        Format::Text => println!("{}", c.to_text()),
        Format::Json => println!("{}", serde_json::to_string(c).expect("closed formula serializes")),
        Format::Latex => println!("{}", c.to_latex()),
    }
}

fn parse_window(src: &str) -> Result<(i64, i64), Error> {
    let bad = |pos: usize, msg: &str| Error::Parse { input: src.to_string(), position: pos, message: msg.to_string() };
    let sep = src.find("..").ok_or_else(|| bad(0, "expected lo..hi"))?;
    let lo = src[..sep].trim().parse::<i64>().map_err(|_| bad(0, "expected an integer"))?;
    let hi = src[sep + 2..].trim().parse::<i64>().map_err(|_| bad(sep + 2, "expected an integer"))?;
    if lo > hi {
        return Err(bad(sep, "empty window"));
    }
    Ok((lo, hi))
}

fn wdiag(src: &str, window: Option<&str>, fmt: Format) -> Result<(), Error> {
    let bip = parse_bipartition(src)?;
    let mut dg = weight_diagram(&bip);
    if let Some(w) = window {
        let (lo, hi) = parse_window(w)?;
        dg = dg.with_window(lo, hi)?;
    }
    let cap_list: Vec<(i64, i64)> = caps(&dg).caps.into_iter().collect();
    let inv = bipartition_invariants(&bip);
    let cross: Vec<(u32, bool)> = (1..=4).map(|n| (n, is_cross(&bip, n))).collect();
    match fmt {
        Format::Json => {
            let labels: String = dg.labels().iter().map(|l| l.symbol()).collect();
            let v = json!({
                "bipartition": { "left": bip.left.parts(), "right": bip.right.parts() },
                "window": [dg.window_lo(), dg.window_hi()],
                "labels": labels,
                "caps": cap_list,
                "rk": inv.rk,
                "d": inv.d,
                "k": inv.k,
                "cross": cross.iter().map(|(n, c)| json!({ "n": n, "survives": c })).collect::<Vec<_>>(),
                "max_atypical": bip.is_max_atypical(),
            });
            println!("{v}");
        }
        Format::Text | Format::Latex => {
            println!("{bip}");
            println!("{}", dg.render());
            let caps_text: Vec<String> = cap_list.iter().map(|(a, b)| format!("({a},{b})")).collect();
            println!("caps: {}", if caps_text.is_empty() { "none".to_string() } else { caps_text.join(" ") });
            let max = if bip.is_max_atypical() { "max-atypical" } else { "not max-atypical" };
            println!("rk={} d={} k={}, {max}", inv.rk, inv.d, inv.k);
            let status: Vec<String> =
                cross.iter().map(|(n, c)| format!("n={n} {}", if *c { "survives" } else { "vanishes" })).collect();
            println!("Gl(n|n): {}", status.join(", "));
        }
    }
    Ok(())
}

fn check(suite: &str, max: Option<u32>) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    for note in interpretations() {
        println!("note: {note}");
    }
    let results = run_suite(suite, max);
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in &results {
        println!("{r}");
    }
    if failed == 0 {
        println!("PASS ({} checks)", results.len());
        Ok(())
    } else {
        println!("FAIL ({failed} of {} checks)", results.len());
        Err(Failure::Check)
    }
}
