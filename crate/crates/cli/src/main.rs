use std::process::ExitCode;

use bfcat::bf::{det_a_closed, matrix_a_closed, matrix_b, matrix_c, tilde_a, wtq_tensor, Slot};
use bfcat::fock::{apply_psi, apply_psi_star, apply_t, g_p_trunc, g_q_trunc, stable_truncation};
use bfcat::heisenberg::{apply_p, apply_p_col, apply_p_row, apply_q, apply_q_col, apply_q_row};
use bfcat::quiver::{resolution_df_p, resolution_q, resolution_simple};
use bfcat::rational::format_rational;
use bfcat::sequence::{from_sequence, to_sequence};
use bfcat::verify::{self, Suite};
use bfcat::vershik_okounkov::{a_coeff, a_oracle, h_coeff, Path};
use bfcat::{ChargedSequence, Error, FockVector, Partition, RationalMatrix, SchurVector};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bfcat", version, about = "Exact boson-fermion computations")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one operator to a partition or charged sequence.
    Act {
        /// t<i>, psi<j>, psi*<j>, q, p, gq, gp, or a strip operator such as "p_row 2".
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// "(2,1)", "vac:k" or "seq:k:x1,x2,...".
        #[arg(long)]
        on: String,
    },
    /// Coefficients a, a~, the oracle and h for a path lam1 -> lam -> mu.
    Coeff {
        #[arg(long)]
        lam1: Partition,
        #[arg(long)]
        lam: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// The complex Q~ (x) P(x(lam)).
    Complex {
        #[arg(long)]
        lam: Partition,
    },
    /// A projective resolution over the quiver algebra.
    Resolve {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        lam: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// The matrices C, B, A and their determinants.
    Det {
        #[arg(long)]
        lam: Partition,
        /// Matrix size; defaults to the number of columns.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Q,
    Dfp,
    Simple,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, text: impl std::fmt::Display, value: impl FnOnce() -> Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value()).expect("json"));
    } else {
        println!("{text}");
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Act { op, on } => act(op, on, cli.json),
        Command::Coeff { lam1, lam, mu } => coeff(lam1, lam, mu, cli.json),
        Command::Complex { lam } => {
            let w = wtq_tensor(lam);
            emit(cli.json, &w, || {
                let degree0: Vec<Value> = w
                    .window
                    .iter()
                    .map(|(i, s)| match s {
                        Slot::Copy { column } => json!({"index": i, "sequence": to_sequence(lam).to_string(), "copy": column}),
                        Slot::Residual { label, .. } => {
                            json!({"index": i, "sequence": to_sequence(label).to_string(), "partition": label})
                        }
                        Slot::Zero => json!({"index": i, "sequence": null}),
                    })
                    .collect();
                json!({
                    "lam": lam,
                    "k": w.k,
                    "degree0": degree0,
                    "degree1": w.degree1().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "differential": w.differential(),
                    "c": w.c,
                    "quotient": w.quotient_labels(),
                })
            });
            Ok(Outcome::Pass)
        }
        Command::Resolve { kind, lam, n } => {
            let r = match kind {
                Kind::Q => resolution_q(lam, *n)?,
                Kind::Dfp => resolution_df_p(lam, *n)?,
                Kind::Simple => resolution_simple(lam, *n)?,
            };
            let text = match kind {
                Kind::Simple => format!("{r} → L({lam})"),
                _ => r.to_string(),
            };
            emit(cli.json, text, || serde_json::to_value(&r).expect("json"));
            Ok(Outcome::Pass)
        }
        Command::Verify { suite, max_size } => {
            let report = verify::run(*suite, *max_size);
            emit(cli.json, &report, || json!({"passed": report.passed(), "report": report}));
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Det { lam, k } => det(lam, k.unwrap_or(lam.width().max(1)), cli.json),
    }
}

enum Operand {
    Schur(SchurVector),
    Fock(FockVector),
}

fn parse_operand(s: &str) -> Result<Operand, Error> {
    let s = s.trim();
    if s.starts_with("vac:") || s.starts_with("seq:") {
        Ok(Operand::Fock(FockVector::basis(s.parse::<ChargedSequence>()?)))
    } else {
        Ok(Operand::Schur(SchurVector::basis(s.parse::<Partition>()?)))
    }
}

fn as_fock(o: Operand) -> FockVector {
    match o {
        Operand::Fock(v) => v,
        Operand::Schur(v) => v.iter().map(|(p, c)| (to_sequence(p), c.clone())).collect(),
    }
}

fn as_schur(o: Operand) -> Result<SchurVector, Error> {
    match o {
        Operand::Schur(v) => Ok(v),
        Operand::Fock(v) => v.iter().map(|(x, c)| Ok((from_sequence(x)?, c.clone()))).collect(),
    }
}

fn strip_size(rest: &str) -> Result<usize, Error> {
    rest.trim_start_matches([':', ' ', '='])
        .parse()
        .map_err(|_| Error::Parse(format!("bad strip size {rest:?}")))
}

fn index(rest: &str, op: &str) -> Result<i64, Error> {
    rest.parse().map_err(|_| Error::Parse(format!("bad operator {op:?}")))
}

fn act(op: &str, on: &str, json: bool) -> Result<Outcome, Error> {
    let operand = parse_operand(on)?;
    let op = op.trim();
    type Strip = fn(usize, &SchurVector) -> SchurVector;
    let strips: [(&str, Strip); 4] =
        [("p_row", apply_p_row), ("p_col", apply_p_col), ("q_row", apply_q_row), ("q_col", apply_q_col)];
    for (name, f) in strips {
        if let Some(rest) = op.strip_prefix(name) {
            let v = f(strip_size(rest)?, &as_schur(operand)?);
            emit(json, &v, || serde_json::to_value(&v).expect("json"));
            return Ok(Outcome::Pass);
        }
    }
    let fock = |v: FockVector| {
        emit(json, &v, || serde_json::to_value(&v).expect("json"));
        Ok(Outcome::Pass)
    };
    let schur = |v: SchurVector| {
        emit(json, &v, || serde_json::to_value(&v).expect("json"));
        Ok(Outcome::Pass)
    };
    match op {
        "q" => schur(apply_q(&as_schur(operand)?)),
        "p" => schur(apply_p(&as_schur(operand)?)),
        "gq" | "gp" => {
            let v = as_fock(operand);
            let n = v.keys().map(|x| stable_truncation(&x.shape())).max().unwrap_or(1);
            fock(if op == "gq" { g_q_trunc(n, &v) } else { g_p_trunc(n, &v) })
        }
        _ => {
            if let Some(rest) = op.strip_prefix("psi*") {
                fock(apply_psi_star(index(rest, op)?, &as_fock(operand)))
            } else if let Some(rest) = op.strip_prefix("psi") {
                fock(apply_psi(index(rest, op)?, &as_fock(operand)))
            } else if let Some(rest) = op.strip_prefix('t') {
                fock(apply_t(index(rest, op)?, &as_fock(operand)))
            } else {
                Err(Error::Parse(format!("unknown operator {op:?}")))
            }
        }
    }
}

fn coeff(lam1: &Partition, lam: &Partition, mu: &Partition, json_out: bool) -> Result<Outcome, Error> {
    let path = Path::new(lam1, lam, mu)?;
    let h1 = h_coeff(lam1, lam)?;
    let h2 = h_coeff(lam, mu)?;
    let mut rows = Vec::new();
    let mut all = true;
    for branch in path.branches() {
        let target = match branch {
            bfcat::vershik_okounkov::Branch::Lambda => lam.clone(),
            bfcat::vershik_okounkov::Branch::Nu => path.nu.clone().expect("branch exists"),
        };
        let a = a_coeff(lam1, lam, mu, branch)?;
        let t = tilde_a(lam1, lam, mu, branch)?;
        let o = a_oracle(lam1, lam, mu, branch)?;
        let pass = a == t && a == o;
        all &= pass;
        rows.push((branch, target, a, t, o, pass));
    }
    if json_out {
        let cases: Vec<Value> = rows
            .iter()
            .map(|(b, target, a, t, o, pass)| {
                json!({"branch": b, "via": target, "a": format_rational(a), "a_tilde": format_rational(t),
                       "a_oracle": format_rational(o), "pass": pass})
            })
            .collect();
        let v = json!({"lam1": lam1, "lam": lam, "mu": mu, "nu": path.nu, "d": path.d(),
                       "h_lam1_lam": format_rational(&h1), "h_lam_mu": format_rational(&h2), "cases": cases});
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        println!("path {lam1} -> {lam} -> {mu}");
        match &path.nu {
            Some(nu) => println!("second corner {nu}"),
            None => println!("second corner none"),
        }
        println!("d = {}", path.d());
        println!("h({lam1},{lam}) = {}", format_rational(&h1));
        println!("h({lam},{mu}) = {}", format_rational(&h2));
        println!("{:<8} {:<10} {:>8} {:>8} {:>8}  check", "branch", "via", "a", "a~", "oracle");
        for (b, target, a, t, o, pass) in &rows {
            println!(
                "{:<8} {:<10} {:>8} {:>8} {:>8}  {}",
                b.to_string(),
                target.to_string(),
                format_rational(a),
                format_rational(t),
                format_rational(o),
                if *pass { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(if all { Outcome::Pass } else { Outcome::Fail })
}

fn show(name: &str, m: &RationalMatrix) -> String {
    let rows: Vec<String> = m.to_string_rows().iter().map(|r| format!("  [{}]", r.join(", "))).collect();
    format!("{name} =\n{}", rows.join("\n"))
}

fn det(lam: &Partition, k: usize, json_out: bool) -> Result<Outcome, Error> {
    let c = matrix_c(lam, k)?;
    let b = matrix_b(k);
    let a = matrix_a_closed(lam, k)?;
    let det_c = c.det()?;
    let det_a = det_a_closed(lam, k)?;
    let bc = &b * &c;
    let ok = bc == a && det_a == det_c;
    if json_out {
        let v = json!({"lam": lam, "k": k, "c": c, "b": b, "a": a, "bc": bc,
                       "det_c": format_rational(&det_c), "det_a_closed": format_rational(&det_a), "pass": ok});
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        println!("{}", show("C", &c));
        println!("{}", show("A", &a));
        println!("det C = {}", format_rational(&det_c));
        println!("det A (closed form) = {}", format_rational(&det_a));
        println!("B C = A: {}", if bc == a { "yes" } else { "no" });
    }
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}
