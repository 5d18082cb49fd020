use std::collections::HashMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use lcsq::checks::{lemma21_suite, mjk_suite, theorem12_suite, SuiteReport};
use lcsq::scalar::{PrimeField, Rationals};
use lcsq::tables::{published_table, PUBLISHED_CASES};
use lcsq::{
    decompose, lambda_bound, verify_bound, Driver, JhSeries, LcsError, MultiDegree, ScalarMode,
};

#[derive(Parser)]
#[command(name = "lcsq", version, about = "Lower central series quotients of free algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Exact rational arithmetic instead of the two-prime default
    #[arg(long, global = true)]
    exact: bool,

    /// Explicit prime pair for the modular mode
    #[arg(long, global = true, value_name = "p1,p2")]
    primes: Option<String>,

    /// Seed for prime selection and the property-suite RNG
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: available cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimensions of M_m, M_{m+1}, N_m at given multidegrees
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Multidegrees as comma-separated exponents, e.g. 2,1
        #[arg(required = true)]
        degrees: Vec<String>,
    },
    /// Compute the Hilbert series of N_m and decompose it into F_lambda
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Total-degree cutoff, or "auto" for the Theorem 1.1 bound
        #[arg(long = "max-deg", default_value = "auto")]
        max_deg: String,
        /// Extra degrees past the cutoff for the residue-zero check
        #[arg(long = "extra-degree", default_value_t = 0)]
        extra_degree: u32,
        /// Output format: text or json
        #[arg(long, default_value = "text")]
        format: String,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the published decomposition tables and diff them
    Verify {
        /// Case selector: "all", "n=2", or "n=3,m=4"
        #[arg(long = "paper-tables", default_value = "all")]
        paper_tables: String,
    },
    /// Run the Lemma 2.1 / Theorem 1.2 / Theorem 2.6 property suites
    Properties,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    lambda: Vec<u32>,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    n: usize,
    m: u32,
    max_degree: u32,
    modules: Vec<ModuleJson>,
    bound: u32,
    bound_satisfied: bool,
}

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_INCONSISTENT: i32 = 2;
const EXIT_PRIME: i32 = 3;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(EXIT_USAGE);
        }
    };
    std::process::exit(run(cli));
}

fn error_code(e: &LcsError) -> i32 {
    match e {
        LcsError::PrimeDisagreement { .. } => EXIT_PRIME,
        LcsError::InvalidInput(_) => EXIT_USAGE,
        _ => EXIT_INCONSISTENT,
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn parse_primes(s: &str) -> Result<(u64, u64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("--primes expects two comma-separated primes, got {s:?}"));
    }
    let p1: u64 = parts[0].trim().parse().map_err(|_| format!("bad prime {:?}", parts[0]))?;
    let p2: u64 = parts[1].trim().parse().map_err(|_| format!("bad prime {:?}", parts[1]))?;
    if p1 == p2 {
        return Err("the two primes must differ".into());
    }
    Ok((p1, p2))
}

fn run(cli: Cli) -> i32 {
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let mode = if cli.exact {
        ScalarMode::Exact
    } else {
        match &cli.primes {
            Some(s) => match parse_primes(s) {
                Ok((p1, p2)) => ScalarMode::TwoPrimes(p1, p2),
                Err(msg) => return usage(&msg),
            },
            None => ScalarMode::seeded(cli.seed),
        }
    };

    match cli.cmd {
        Cmd::Dims { n, m, degrees } => cmd_dims(mode, n, m, &degrees),
        Cmd::Decompose { n, m, max_deg, extra_degree, format, out } => {
            cmd_decompose(mode, n, m, &max_deg, extra_degree, &format, out.as_deref())
        }
        Cmd::Verify { paper_tables } => cmd_verify(mode, &paper_tables),
        Cmd::Properties => cmd_properties(mode, cli.seed),
    }
}

fn check_nm(n: usize, m: u32) -> Option<i32> {
    if n < 2 {
        return Some(usage("n must be at least 2"));
    }
    if m < 2 {
        return Some(usage("m must be at least 2"));
    }
    None
}

fn cmd_dims(mode: ScalarMode, n: usize, m: u32, degrees: &[String]) -> i32 {
    if let Some(code) = check_nm(n, m) {
        return code;
    }
    let mut parsed = Vec::new();
    for s in degrees {
        let exps: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        match exps {
            Ok(v) if v.len() == n => parsed.push(MultiDegree(v)),
            _ => return usage(&format!("multidegree {s:?} is not {n} comma-separated exponents")),
        }
    }
    let maxdeg = parsed.iter().map(|d| d.total()).max().unwrap_or(0);
    let mut driver = Driver::new(n, maxdeg, mode);
    println!("{:>16} {:>10} {:>10} {:>10}", "d", format!("dim M_{m}"), format!("dim M_{}", m + 1), format!("dim N_{m}"));
    for d in &parsed {
        match driver.dims(m as usize, d) {
            Ok((a, b, c)) => {
                let label = format!("({})", d.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","));
                println!("{label:>16} {a:>10} {b:>10} {c:>10}");
            }
            Err(e) => {
                eprintln!("error: {e}");
                return error_code(&e);
            }
        }
    }
    EXIT_OK
}

fn render_jh(jh: &JhSeries) -> String {
    if jh.entries.is_empty() {
        return "0".to_string();
    }
    jh.entries
        .iter()
        .map(|(lambda, &mult)| {
            let tuple = lambda.display(jh.n);
            if mult == 1 { tuple } else { format!("{mult}{tuple}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn jh_to_json(jh: &JhSeries, max_degree: u32) -> DecompositionJson {
    let bound = lambda_bound(jh.m, jh.n);
    DecompositionJson {
        n: jh.n,
        m: jh.m,
        max_degree,
        modules: jh
            .entries
            .iter()
            .map(|(lambda, &mult)| ModuleJson { lambda: lambda.padded(jh.n), mult })
            .collect(),
        bound,
        bound_satisfied: verify_bound(jh),
    }
}

fn cmd_decompose(
    mode: ScalarMode,
    n: usize,
    m: u32,
    max_deg: &str,
    extra_degree: u32,
    format: &str,
    out: Option<&std::path::Path>,
) -> i32 {
    if let Some(code) = check_nm(n, m) {
        return code;
    }
    let bound = lambda_bound(m, n);
    let base = if max_deg == "auto" {
        bound
    } else {
        match max_deg.parse::<u32>() {
            Ok(d) if d >= bound => d,
            Ok(d) => return usage(&format!("--max-deg {d} is below the bound {bound} for n={n}, m={m}")),
            Err(_) => return usage(&format!("--max-deg must be an integer or \"auto\", got {max_deg:?}")),
        }
    };
    let maxdeg = base + extra_degree;
    let mut driver = Driver::new(n, maxdeg, mode);
    let result = driver
        .hilbert_n(m as usize, maxdeg)
        .and_then(|h| decompose(&h, m, n));
    let jh = match result {
        Ok(jh) => jh,
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    let rendered = match format {
        "text" => {
            let mut s = format!("N_{m}(A_{n}) = {}\n", render_jh(&jh));
            s.push_str(&format!(
                "bound |lambda| <= {bound}: {}\n",
                if verify_bound(&jh) { "satisfied" } else { "VIOLATED" }
            ));
            s
        }
        "json" => {
            let mut s = serde_json::to_string_pretty(&jh_to_json(&jh, maxdeg)).unwrap();
            s.push('\n');
            s
        }
        other => return usage(&format!("unknown format {other:?} (expected text or json)")),
    };
    match out {
        None => print!("{rendered}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INCONSISTENT;
            }
        }
    }
    if verify_bound(&jh) { EXIT_OK } else { EXIT_INCONSISTENT }
}

fn parse_selector(s: &str) -> Result<(Option<usize>, Option<u32>), String> {
    if s == "all" {
        return Ok((None, None));
    }
    let mut n = None;
    let mut m = None;
    for part in s.split(',') {
        let Some((key, value)) = part.split_once('=') else {
            return Err(format!("bad selector component {part:?}"));
        };
        match key.trim() {
            "n" => n = Some(value.trim().parse().map_err(|_| format!("bad n in {part:?}"))?),
            "m" => m = Some(value.trim().parse().map_err(|_| format!("bad m in {part:?}"))?),
            other => return Err(format!("unknown selector key {other:?}")),
        }
    }
    Ok((n, m))
}

fn cmd_verify(mode: ScalarMode, selector: &str) -> i32 {
    let (sel_n, sel_m) = match parse_selector(selector) {
        Ok(s) => s,
        Err(msg) => return usage(&msg),
    };
    let cases: Vec<(usize, u32)> = PUBLISHED_CASES
        .iter()
        .copied()
        .filter(|&(n, m)| sel_n.map_or(true, |v| v == n) && sel_m.map_or(true, |v| v == m))
        .collect();
    if cases.is_empty() {
        return usage(&format!("selector {selector:?} matches no published table"));
    }
    // one driver per n so the echelon caches are shared across m
    let mut drivers: HashMap<usize, Driver> = HashMap::new();
    for &(n, _) in &cases {
        let maxdeg = cases
            .iter()
            .filter(|&&(cn, _)| cn == n)
            .map(|&(_, m)| lambda_bound(m, n))
            .max()
            .unwrap();
        drivers.entry(n).or_insert_with(|| Driver::new(n, maxdeg, mode));
    }
    let mut all_ok = true;
    for &(n, m) in &cases {
        let expected = published_table(n, m).unwrap();
        let bound = lambda_bound(m, n);
        let driver = drivers.get_mut(&n).unwrap();
        let computed = driver
            .hilbert_n(m as usize, bound)
            .and_then(|h| decompose(&h, m, n));
        match computed {
            Ok(jh) if jh.entries == expected.entries => {
                println!("PASS n={n} m={m}: {}", render_jh(&jh));
            }
            Ok(jh) => {
                all_ok = false;
                println!("FAIL n={n} m={m}:");
                println!("  computed:  {}", render_jh(&jh));
                println!("  published: {}", render_jh(&expected));
            }
            Err(e) => {
                eprintln!("error at n={n} m={m}: {e}");
                return error_code(&e);
            }
        }
    }
    if all_ok { EXIT_OK } else { EXIT_INCONSISTENT }
}

fn report(name: &str, r: &SuiteReport) -> bool {
    if r.passed() {
        println!("PASS {name}: {} instances", r.total);
        true
    } else {
        println!("FAIL {name}: {} of {} instances", r.failures.len(), r.total);
        for w in &r.failures {
            println!("  witness: {w}");
        }
        false
    }
}

fn cmd_properties(mode: ScalarMode, seed: u64) -> i32 {
    let mut ok = true;
    match mode {
        ScalarMode::Exact => {
            let f = Rationals;
            ok &= report("lemma 2.1", &lemma21_suite(f, seed, 100));
            ok &= report("theorem 1.2", &theorem12_suite(f, &[2, 3], &[2, 3, 4], 7));
            ok &= report("theorem 2.6", &mjk_suite(f, &[(2, 3), (3, 2), (3, 3)], 6));
        }
        ScalarMode::TwoPrimes(p1, p2) => {
            for p in [p1, p2] {
                let f = PrimeField::new(p);
                ok &= report(&format!("lemma 2.1 (mod {p})"), &lemma21_suite(f, seed, 100));
                ok &= report(
                    &format!("theorem 1.2 (mod {p})"),
                    &theorem12_suite(f, &[2, 3], &[2, 3, 4], 7),
                );
                ok &= report(
                    &format!("theorem 2.6 (mod {p})"),
                    &mjk_suite(f, &[(2, 3), (3, 2), (3, 3)], 6),
                );
            }
        }
    }
    if ok { EXIT_OK } else { EXIT_INCONSISTENT }
}
