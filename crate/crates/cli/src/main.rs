//! Command-line front end: tableaux, graded dimensions, blocks, bases,
//! relation checks, Gram matrices and specialization.

use althecke::combinat::{
    blocks, codeg, deg, graded_dim, partitions, standard_tableaux, AlgebraKind, BlockGamma, Quantum,
};
use althecke::gradedbasis::{
    basis_table_csv, block_report, cellular_indices, gram_matrix, independence_check_with, psi_indices, CellularIndex,
    Parity,
};
use althecke::klrgen::{parse_word, relation_suites, run_suite, Flavor, KlrGenerators, RelationReport};
use althecke::seminormal::{coefficient_systems, validate_coeff_system, SeminormalModel};
use althecke::specialize::{is_prime, parse_target, verify_specialized_klr, SpecializedGenerators};
use althecke::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "althecke", version, about = "Exact seminormal Hecke algebras, KLR generators and alternating subalgebras")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of letters n.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Quantum characteristic e (at least 3).
    #[arg(long, global = true, default_value_t = 3)]
    e: u32,
    /// Algebra: S for R(S_n), A for R(A_n).
    #[arg(long, global = true, default_value = "S")]
    algebra: String,
    /// Block, by index in `blocks` output or by its label.
    #[arg(long, global = true)]
    block: Option<String>,
    /// Relation suites, comma separated, or `all`.
    #[arg(long, global = true, default_value = "all")]
    suite: String,
    /// Specialization target: fp:p[:xi], cyclotomic or rational.
    #[arg(long, global = true)]
    target: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached trace weights.
    #[arg(long, global = true, env = "ALTHECKE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow sizes beyond the desk-scale limits.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    /// ψ_st for all same-shape pairs.
    Psi,
    /// ψ′_st for all same-shape pairs.
    PsiPrime,
    /// Ψ⁺_st with s ∈ Std₊.
    Plus,
    /// Ψ⁻_st with s ∈ Std₊.
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Standard tableaux with residues, degrees and codegrees.
    Tableaux,
    /// Graded dimension of R(S_n) or R(A_n), optionally of one block.
    Gdim,
    /// Blocks with defect, partitions, graded dimensions and classifier.
    Blocks,
    /// Homogeneous basis tables.
    Basis {
        #[arg(long, value_enum, default_value_t = BasisKind::Plus)]
        kind: BasisKind,
        /// Also check linear independence of the images (n ≤ 4 without --force).
        #[arg(long)]
        check: bool,
    },
    /// Run relation suites on the seminormal generators.
    Verify {
        /// Coefficient system.
        #[arg(long, default_value = "alternating")]
        system: String,
    },
    /// Gram matrices of the trace pairing on R(A_n)_γ.
    Gram,
    /// Specialize the generators and check the KLR relations.
    Specialize {
        #[arg(long, default_value = "circ")]
        flavor: String,
        /// Word to evaluate, such as "psi2 y3 e(012)".
        #[arg(long)]
        word: Option<String>,
    },
}

/// Outcome of a command: what to print and whether every check passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    csv: Option<String>,
    passed: bool,
}

impl Outcome {
    fn info(text: String, json: serde_json::Value) -> Self {
        Outcome { text, json, csv: None, passed: true }
    }
}

fn guard(c: &Common, limit: usize, what: &str) -> Result<()> {
    if c.n > limit && !c.force {
        return Err(Error::Domain(format!("{what} with n = {} exceeds the desk-scale limit n ≤ {limit}; pass --force", c.n)));
    }
    Ok(())
}

fn quantum(c: &Common) -> Result<Quantum> {
    Quantum::new(c.e)
}

fn resolve_blocks(c: &Common, e: Quantum) -> Result<Vec<BlockGamma>> {
    let all = blocks(c.n, e);
    match &c.block {
        None => Ok(all),
        Some(b) => {
            if let Ok(k) = b.parse::<usize>() {
                return all.get(k).cloned().map(|g| vec![g]).ok_or_else(|| Error::Domain(format!("block index {k} out of range (0..{})", all.len())));
            }
            all.into_iter()
                .find(|g| g.to_string() == *b)
                .map(|g| vec![g])
                .ok_or_else(|| Error::Unknown { kind: "block", name: b.clone() })
        }
    }
}

fn model(c: &Common, system: &str) -> Result<Arc<SeminormalModel>> {
    let sys = coefficient_systems().get(system)?;
    Ok(Arc::new(SeminormalModel::new(c.n, quantum(c)?, sys).with_cache_dir(c.cache_dir.clone())))
}

/// Smallest odd prime `p ≡ 1 (mod e)`, which has ξ of quantum characteristic `e`.
fn default_target(e: u32) -> String {
    let p = (3u64..).find(|&p| is_prime(p) && p % e as u64 == 1).expect("primes ≡ 1 mod e exist");
    format!("fp:{p}")
}

fn tableaux(c: &Common) -> Result<Outcome> {
    guard(c, 6, "tableaux")?;
    let e = quantum(c)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for lambda in partitions(c.n) {
        for t in standard_tableaux(&lambda) {
            let (d, cd) = (deg(&t, e), codeg(&t, e));
            text.push_str(&format!("{lambda:<12} {t:<20} res {} deg {d} codeg {cd}{}\n", t.residues(e), if t.is_plus() { " +" } else { "" }));
            rows.push(json!({"lambda": lambda, "tableau": t, "residues": t.residues(e), "deg": d, "codeg": cd, "plus": t.is_plus()}));
        }
    }
    Ok(Outcome::info(text, json!(rows)))
}

fn gdim(c: &Common) -> Result<Outcome> {
    guard(c, 6, "gdim")?;
    let e = quantum(c)?;
    let kind = AlgebraKind::parse(&c.algebra)?;
    let mut text = String::new();
    let mut out = Vec::new();
    let mut passed = true;
    let targets: Vec<Option<BlockGamma>> = match &c.block {
        None => vec![None],
        Some(_) => resolve_blocks(c, e)?.into_iter().map(Some).collect(),
    };
    for gamma in targets {
        let p = graded_dim(c.n, e, kind, gamma.as_ref());
        let label = gamma.as_ref().map_or("all".to_string(), |g| g.to_string());
        text.push_str(&format!("{label}: {p}  (at q = 1: {})\n", p.at_one()));
        if gamma.is_none() {
            let fact: u64 = (1..=c.n as u64).product();
            let want = match kind {
                AlgebraKind::S => fact,
                AlgebraKind::A => (fact / 2).max(1),
            };
            passed &= p.at_one() == want;
            text.push_str(&format!("dimension check: {} (expected {want})\n", if p.at_one() == want { "PASS" } else { "FAIL" }));
        }
        out.push(json!({"block": label, "gdim": p, "at_one": p.at_one()}));
    }
    Ok(Outcome { text, json: json!(out), csv: None, passed })
}

fn blocks_cmd(c: &Common) -> Result<Outcome> {
    guard(c, 6, "blocks")?;
    let rep = block_report(c.n, quantum(c)?)?;
    let mut text = String::new();
    for (k, b) in rep.iter().enumerate() {
        let parts: Vec<String> = b.partitions.iter().map(|p| p.to_string()).collect();
        text.push_str(&format!(
            "[{k}] γ = {}  defect {}  |γ| = {}  partitions {}\n    qdim S: {}\n    qdim A: {}\n    {}\n",
            b.gamma,
            b.defect,
            b.size,
            parts.join(" "),
            b.qdim_s,
            b.qdim_a,
            b.classifier
        ));
    }
    Ok(Outcome::info(text, json!(rep)))
}

fn basis(c: &Common, kind: BasisKind, check: bool) -> Result<Outcome> {
    guard(c, 6, "basis")?;
    let e = quantum(c)?;
    let indices: Vec<CellularIndex> = match kind {
        BasisKind::Psi => cellular_indices(c.n, e, false)?,
        BasisKind::PsiPrime => cellular_indices(c.n, e, true)?,
        BasisKind::Plus => psi_indices(c.n, e, Parity::Plus)?,
        BasisKind::Minus => psi_indices(c.n, e, Parity::Minus)?,
    };
    let mut text = String::from("# ordered by partition, then s, then t (row-reading order)\n");
    for x in &indices {
        text.push_str(&format!("{:<10} ({} | {})  primed {}  degree {}  z2 {}\n", x.lambda, x.s, x.t, x.primed, x.degree, x.z2degree));
    }
    let mut json = json!({"basis": indices});
    let mut passed = true;
    if check {
        guard(c, 4, "basis --check")?;
        let g = KlrGenerators::new(model(c, "alternating")?)?;
        let r = independence_check_with(&g)?;
        passed = r.passed();
        text.push_str(&format!(
            "independence: rank {} of {}, Ψ⁺ rank {} of {}: {}\n",
            r.rank_all,
            r.expected_all,
            r.rank_plus,
            r.expected_plus,
            if passed { "PASS" } else { "FAIL" }
        ));
        json["independence"] = json!(r);
    }
    Ok(Outcome { text, json, csv: Some(basis_table_csv(&indices)?), passed })
}

fn report_text(r: &RelationReport) -> String {
    let mut s = format!(
        "{} {}: {} instances, {} passed ({} vacuous), {} failed\n",
        if r.all_passed() { "PASS" } else { "FAIL" },
        r.suite,
        r.total,
        r.passed,
        r.vacuous,
        r.failures.len()
    );
    for (rel, k) in r.failure_histogram() {
        s.push_str(&format!("    {rel}: {k}\n"));
    }
    for f in r.failures.iter().take(10) {
        s.push_str(&format!("    {} at {} (witness {} nonzero entries)\n", f.relation, f.indices, f.witness_norm));
    }
    if r.failures.len() > 10 {
        s.push_str(&format!("    ... {} more\n", r.failures.len() - 10));
    }
    s
}

fn verify(c: &Common, system: &str) -> Result<Outcome> {
    guard(c, 5, "verify")?;
    let m = model(c, system)?;
    let coeff = validate_coeff_system(m.system().as_ref(), c.n);
    let mut text = format!("{} coefficient system {}: {} conditions checked\n", if coeff.passed() { "PASS" } else { "FAIL" }, system, coeff.checked);
    let mut passed = coeff.passed();
    let g = KlrGenerators::new(m)?;
    let suites = relation_suites();
    let names: Vec<String> = if c.suite == "all" { suites.names() } else { c.suite.split(',').map(|s| s.trim().to_string()).collect() };
    let mut reports = Vec::new();
    for name in names {
        let r = run_suite(&g, suites.get(&name)?.as_ref())?;
        passed &= r.all_passed();
        text.push_str(&report_text(&r));
        reports.push(r);
    }
    Ok(Outcome { text, json: json!({"coefficients": coeff, "suites": reports}), csv: None, passed })
}

fn gram(c: &Common) -> Result<Outcome> {
    guard(c, 5, "gram")?;
    let e = quantum(c)?;
    let desc = c.target.clone().unwrap_or_else(|| default_target(c.e));
    let g = KlrGenerators::new(model(c, "alternating")?)?;
    let sg = SpecializedGenerators::new(&g, Flavor::Circ, parse_target(&desc, c.e)?)?;
    let mut text = String::new();
    let mut csv = String::new();
    let mut out = Vec::new();
    let mut passed = true;
    for gamma in resolve_blocks(c, e)? {
        let gm = gram_matrix(&gamma, &sg)?;
        let (diag, viol, nonsing) = (gm.diagonal_nonzero(), gm.zero_pattern_violations(), gm.is_nonsingular());
        let ok = diag && viol.is_empty() && nonsing;
        passed &= ok;
        let body = gm.to_csv()?;
        text.push_str(&body);
        text.push_str(&format!(
            "{} block {}: diagonal nonzero {diag}, zero-pattern violations {}, nonsingular {nonsing}, truncated values {}\n\n",
            if ok { "PASS" } else { "FAIL" },
            gamma,
            viol.len(),
            gm.truncated
        ));
        csv.push_str(&body);
        out.push(gm.to_json());
    }
    Ok(Outcome { text, json: json!(out), csv: Some(csv), passed })
}

fn specialize(c: &Common, flavor: &str, word: Option<&str>) -> Result<Outcome> {
    guard(c, 5, "specialize")?;
    let desc = c.target.clone().unwrap_or_else(|| default_target(c.e));
    let target = parse_target(&desc, c.e)?;
    let g = KlrGenerators::new(model(c, "alternating")?)?;
    let sg = SpecializedGenerators::new(&g, Flavor::parse(flavor)?, target)?;
    let t = sg.target();
    let mut text = format!("target {desc}: field {}, ξ = {}\n", t.field().name, t.xi());
    let r = verify_specialized_klr(&sg);
    text.push_str(&report_text(&r));
    let mut json = json!({"target": desc, "field": t.field().name, "xi": t.xi().to_string(), "report": r});
    if let Some(w) = word {
        let img = sg.word_image(&parse_word(g.e(), w)?)?;
        text.push_str(&format!("{w} ↦ {img}\n"));
        json["word"] = json!({"word": w, "image": img});
    }
    Ok(Outcome { text, json, csv: None, passed: r.all_passed() })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let c = &cli.common;
    if let Some(j) = c.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| Error::Domain(e.to_string()))?;
    }
    match &cli.command {
        Command::Tableaux => tableaux(c),
        Command::Gdim => gdim(c),
        Command::Blocks => blocks_cmd(c),
        Command::Basis { kind, check } => basis(c, *kind, *check),
        Command::Verify { system } => verify(c, system),
        Command::Gram => gram(c),
        Command::Specialize { flavor, word } => specialize(c, flavor, word.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.common.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize")),
                Format::Csv => match &out.csv {
                    Some(s) => print!("{s}"),
                    None => {
                        eprintln!("error: csv output is available for `basis` and `gram`");
                        return ExitCode::from(2);
                    }
                },
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
