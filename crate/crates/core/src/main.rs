use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;

use sqrt_crystals::algebra::Permutation;
use sqrt_crystals::poly::{
    expand_in_g, expand_in_lascoux, grothendieck_g, Expansion, Polynomial,
};
use sqrt_crystals::{crystal, hecke, pipedreams, svwords, tableaux};

const EXIT_FALSIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sqrt-crystals",
    version,
    about = "Crystal combinatorics: expansions, theorem verification, graph export"
)]
struct Cli {
    /// Output format for reports and graphs
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Number of worker threads for exhaustive sweeps
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Seed recorded in reports; all commands are deterministic
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a symmetric polynomial in the G basis with a counting cross-check
    Expand {
        #[arg(long, value_enum)]
        kind: ExpandKind,
        /// Number of variables
        #[arg(long)]
        n: usize,
        /// Shape argument: "nu/lambda" for skew-g, "lambda*mu" for product,
        /// a strict partition for gp-dec (e.g. "3,1")
        #[arg(long)]
        shape: Option<String>,
        /// One-line permutation for gw, e.g. "1432"
        #[arg(long)]
        w: Option<String>,
    },
    /// Exhaustively verify a theorem over a bounded range
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
        /// Word length / grid width, where applicable
        #[arg(long)]
        m: Option<usize>,
        /// Partition shape for svt, e.g. "2,1"
        #[arg(long)]
        shape: Option<String>,
        /// One-line permutation for dhf
        #[arg(long)]
        w: Option<String>,
    },
    /// Export a crystal graph as DOT or JSON
    Graph {
        #[arg(long, value_enum)]
        universe: UniverseKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Partition shape for settab, e.g. "1"
        #[arg(long)]
        shape: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandKind {
    /// G of a skew shape in terms of straight-shape G
    SkewG,
    /// Product G_lambda * G_mu
    Product,
    /// G_w from decreasing factorizations
    Gw,
    /// GP of a strict partition from decomposition tableaux
    GpDec,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    /// Characters of word-crystal components are sums of G over highest weights
    Ch,
    /// Rectification always lands on a highest-weight element
    Rect,
    /// Insertion tableau equals the tableau of the rectification
    InsertionEqRect,
    /// Decreasing-factorization crystals: axioms and highest-weight criterion
    Dhf,
    /// Demazure recursion on pipe-dream crystals
    Cw,
    /// Lascoux positivity of pipe-dream Demazure characters
    Lascoux,
    /// Set-valued tableau crystals: axioms and character identity
    Svt,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseKind {
    /// Standard crystal on nonempty subsets of [n]
    StandardSqrt,
    /// Crystal on set-valued tableaux of a partition shape
    Settab,
    /// Crystal on set-valued words of length m over [n]
    Svwords,
    /// One vertex, no edges
    Trivial,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), String> {
    match &cli.out {
        None => {
            println!("{body}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path).map_err(|e| e.to_string())?;
            writeln!(f, "{body}").map_err(|e| e.to_string())
        }
    }
}

fn parse_partition(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad partition '{s}': {e}")))
        .collect()
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    let vals: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| format!("bad digit '{c}'")))
            .collect::<Result<_, _>>()?
    };
    Permutation::from_one_line(&vals).map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Expand { kind, n, shape, w } => cmd_expand(cli, *kind, *n, shape.as_deref(), w.as_deref()),
        Command::Verify { theorem, n, m, shape, w } => {
            cmd_verify(cli, *theorem, *n, *m, shape.as_deref(), w.as_deref())
        }
        Command::Graph { universe, n, m, shape } => cmd_graph(cli, *universe, *n, *m, shape.as_deref()),
    }
}

// ---------------------------------------------------------------------------
// expand

struct ExpandReport {
    kind: &'static str,
    description: String,
    counts: Vec<(Vec<u32>, BigInt)>,
    expansion: Expansion,
}

impl ExpandReport {
    fn routes_agree(&self) -> bool {
        let by_count: std::collections::BTreeMap<&Vec<u32>, &BigInt> =
            self.counts.iter().map(|(k, v)| (k, v)).collect();
        let nonzero = |m: &std::collections::BTreeMap<&Vec<u32>, &BigInt>| {
            m.iter().filter(|(_, v)| !num::Zero::is_zero(**v)).count()
        };
        if nonzero(&by_count)
            != self
                .expansion
                .coeffs
                .iter()
                .filter(|(_, v)| !num::Zero::is_zero(v))
                .count()
        {
            return false;
        }
        self.counts.iter().all(|(k, v)| &self.expansion.coeff(k) == v)
    }

    fn render(&self, format: Format) -> String {
        let agree = self.routes_agree();
        let positive = self.expansion.is_positive();
        match format {
            Format::Json => serde_json::json!({
                "kind": self.kind,
                "input": self.description,
                "coefficients": self.expansion.to_json(),
                "positive": positive,
                "dual_route_agrees": agree,
            })
            .to_string(),
            _ => {
                let mut s = format!("expand {} {}\n", self.kind, self.description);
                for (idx, c) in self.expansion.coeffs.iter() {
                    let part: Vec<String> = idx.iter().map(|x| x.to_string()).collect();
                    s += &format!("  G[{}] : {}\n", part.join(","), c);
                }
                s += &format!("positive: {positive}\ndual_route_agrees: {agree}");
                s
            }
        }
    }
}

fn cmd_expand(
    cli: &Cli,
    kind: ExpandKind,
    n: usize,
    shape: Option<&str>,
    w: Option<&str>,
) -> Result<ExitCode, String> {
    let report = match kind {
        ExpandKind::SkewG => {
            let spec = shape.ok_or("--shape nu/lambda required for skew-g")?;
            let (nu_s, la_s) = spec.split_once('/').unwrap_or((spec, ""));
            let nu = parse_partition(nu_s)?;
            let lambda = parse_partition(la_s)?;
            let sh = tableaux::Shape::skew(&nu, &lambda).map_err(|e| e.to_string())?;
            let counts = tableaux::lattice_counts(&sh, n);
            let f = tableaux::g_polynomial(&sh, n);
            let expansion = expand_in_g(&f).map_err(|e| e.to_string())?;
            ExpandReport { kind: "skew-g", description: format!("nu/lambda={spec} n={n}"), counts, expansion }
        }
        ExpandKind::Product => {
            let spec = shape.ok_or("--shape lambda*mu required for product")?;
            let (la_s, mu_s) = spec.split_once('*').ok_or("expected lambda*mu")?;
            let lambda = parse_partition(la_s)?;
            let mu = parse_partition(mu_s)?;
            let sh = tableaux::Shape::star_product(&lambda, &mu).map_err(|e| e.to_string())?;
            let counts = tableaux::lattice_counts(&sh, n);
            let gl = grothendieck_g(&to_u32(&lambda), n).map_err(|e| e.to_string())?;
            let gm = grothendieck_g(&to_u32(&mu), n).map_err(|e| e.to_string())?;
            let expansion = expand_in_g(&gl.times(&gm)).map_err(|e| e.to_string())?;
            ExpandReport { kind: "product", description: format!("{spec} n={n}"), counts, expansion }
        }
        ExpandKind::Gw => {
            let w = parse_perm(w.ok_or("--w required for gw")?)?;
            let counts = hecke::c_w_coeffs(&w, n);
            let f = hecke::decr_character(&w, n);
            let expansion = expand_in_g(&f).map_err(|e| e.to_string())?;
            ExpandReport { kind: "gw", description: format!("w={w} n={n}"), counts, expansion }
        }
        ExpandKind::GpDec => {
            let lambda = parse_partition(shape.ok_or("--shape strict partition required for gp-dec")?)?;
            let counts = tableaux::gp_dec_lattice_counts(&lambda, n).map_err(|e| e.to_string())?;
            let f = tableaux::gp_dec(&lambda, n).map_err(|e| e.to_string())?;
            let expansion = expand_in_g(&f).map_err(|e| e.to_string())?;
            ExpandReport { kind: "gp-dec", description: format!("lambda={} n={n}", shape.unwrap()), counts, expansion }
        }
    };
    let agree = report.routes_agree();
    emit(cli, &report.render(cli.format))?;
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INCONSISTENT) })
}

fn to_u32(v: &[usize]) -> Vec<u32> {
    v.iter().map(|&x| x as u32).collect()
}

// ---------------------------------------------------------------------------
// verify

struct VerifyReport {
    theorem: &'static str,
    range: String,
    checked: usize,
    failures: Vec<String>,
}

impl VerifyReport {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::json!({
                "theorem": self.theorem,
                "range": self.range,
                "checked": self.checked,
                "pass": self.failures.is_empty(),
                "failures": self.failures,
            })
            .to_string(),
            _ => {
                let status = if self.failures.is_empty() { "pass" } else { "FAIL" };
                let mut s = format!(
                    "verify {} [{}]: {} ({} instances checked)",
                    self.theorem, self.range, status, self.checked
                );
                for f in &self.failures {
                    s += &format!("\n  witness: {f}");
                }
                s
            }
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    theorem: Theorem,
    n: usize,
    m: Option<usize>,
    shape: Option<&str>,
    w: Option<&str>,
) -> Result<ExitCode, String> {
    let report = match theorem {
        Theorem::Ch => verify_ch(n, m.ok_or("--m required")?)?,
        Theorem::Rect => verify_rect(n, m.ok_or("--m required")?)?,
        Theorem::InsertionEqRect => verify_insertion_eq_rect(n, m.ok_or("--m required")?)?,
        Theorem::Dhf => verify_dhf(n, parse_perm(w.ok_or("--w required for dhf")?)?)?,
        Theorem::Cw => verify_cw(m.ok_or("--m required")?, n)?,
        Theorem::Lascoux => verify_lascoux(m.ok_or("--m required")?, n, cli.jobs)?,
        Theorem::Svt => verify_svt(&parse_partition(shape.ok_or("--shape required for svt")?)?, n)?,
    };
    emit(cli, &report.render(cli.format))?;
    Ok(if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FALSIFIED)
    })
}

fn verify_ch(n: usize, m: usize) -> Result<VerifyReport, String> {
    let uni = svwords::universe(n, m).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let comps = uni.crystal.components();
    for comp in &comps {
        let members: BTreeSet<usize> = comp.iter().copied().collect();
        let ch = uni.crystal.character_of(&members);
        let mut sum = Polynomial::zero(n);
        for &b in comp {
            if uni.crystal.is_highest_weight(b) {
                let wt: Vec<u32> = uni.crystal.weights[b].iter().map(|&x| x as u32).collect();
                sum = sum.plus(&grothendieck_g(&wt, n).map_err(|e| e.to_string())?);
            }
        }
        if ch != sum {
            failures.push(format!("component of {}", uni.crystal.labels[comp[0]]));
        }
    }
    Ok(VerifyReport { theorem: "ch", range: format!("n={n} m={m}"), checked: comps.len(), failures })
}

fn verify_rect(n: usize, m: usize) -> Result<VerifyReport, String> {
    let uni = svwords::universe(n, m).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for b in 0..uni.crystal.len() {
        if !uni.crystal.is_highest_weight(uni.crystal.rect(b)) {
            failures.push(uni.crystal.labels[b].clone());
        }
    }
    Ok(VerifyReport { theorem: "rect", range: format!("n={n} m={m}"), checked: uni.crystal.len(), failures })
}

fn verify_insertion_eq_rect(n: usize, m: usize) -> Result<VerifyReport, String> {
    let uni = svwords::universe(n, m).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for (b, word) in uni.words.iter().enumerate() {
        let p = hecke::p_hecke(word);
        let rect = svwords::tab(&uni.words[uni.crystal.rect(b)]);
        if p != rect {
            failures.push(word.label());
        }
    }
    Ok(VerifyReport {
        theorem: "insertion-eq-rect",
        range: format!("n={n} m={m}"),
        checked: uni.words.len(),
        failures,
    })
}

fn verify_dhf(n: usize, w: Permutation) -> Result<VerifyReport, String> {
    let dc = hecke::decr_crystal(&w, n).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    if let Err(e) = dc.crystal.check_axioms() {
        failures.push(format!("axiom audit: {e}"));
    }
    for (b, fac) in dc.elements.iter().enumerate() {
        let hw = dc.crystal.is_highest_weight(b);
        let inc = svwords::is_increasing_tableau(&fac.tab());
        if hw != inc {
            failures.push(fac.label());
        }
    }
    // character identity G_w = sum over partitions of c_{w,lambda} G_lambda
    let mut sum = Polynomial::zero(n);
    for (lam, c) in hecke::c_w_coeffs(&w, n) {
        sum = sum.plus(&grothendieck_g(&lam, n).map_err(|e| e.to_string())?.scaled(&c));
    }
    if sum != hecke::decr_character(&w, n) {
        failures.push(format!("character identity for w={w}"));
    }
    Ok(VerifyReport {
        theorem: "dhf",
        range: format!("w={w} n={n}"),
        checked: dc.elements.len() + 1,
        failures,
    })
}

fn verify_cw(m: usize, n: usize) -> Result<VerifyReport, String> {
    let uni = pipedreams::rpd_universe(m, n).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for w in Permutation::all(n) {
        let cw = uni.c_w_members(&w).map_err(|e| e.to_string())?;
        for i in w.right_ascents_below(n) {
            checked += 1;
            let wsi = w.times_simple(i);
            let next = uni.c_w_members(&wsi).map_err(|e| e.to_string())?;
            if uni.demazure_op(&cw, i) != next {
                failures.push(format!("set recursion at w={w} i={i}"));
            }
            if uni.character_of(&cw).pi_k(i) != uni.character_of(&next) {
                failures.push(format!("character recursion at w={w} i={i}"));
            }
        }
    }
    Ok(VerifyReport { theorem: "cw", range: format!("m={m} n={n}"), checked, failures })
}

fn verify_lascoux(m: usize, n: usize, jobs: usize) -> Result<VerifyReport, String> {
    let uni = pipedreams::rpd_universe(m, n).map_err(|e| e.to_string())?;
    let perms = Permutation::all(n);
    let jobs = jobs.max(1);
    let results: Vec<Result<Vec<String>, String>> = std::thread::scope(|scope| {
        let chunks: Vec<Vec<Permutation>> =
            perms.chunks(perms.len().div_ceil(jobs)).map(|c| c.to_vec()).collect();
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                let uni = &uni;
                scope.spawn(move || -> Result<Vec<String>, String> {
                    let mut fails = Vec::new();
                    for w in &chunk {
                        let cw = uni.c_w_members(w).map_err(|e| e.to_string())?;
                        let ch = uni.character_of(&cw);
                        let exp = expand_in_lascoux(&ch).map_err(|e| e.to_string())?;
                        if !exp.is_positive() {
                            fails.push(format!("negative Lascoux coefficient in ch(C_{w})"));
                        }
                    }
                    Ok(fails)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(VerifyReport { theorem: "lascoux", range: format!("m={m} n={n}"), checked: perms.len(), failures })
}

fn verify_svt(lambda: &[usize], n: usize) -> Result<VerifyReport, String> {
    let shape = tableaux::Shape::straight(lambda).map_err(|e| e.to_string())?;
    let st = tableaux::settab_crystal(&shape, n).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    if let Err(e) = st.crystal.check_axioms() {
        failures.push(format!("axiom audit: {e}"));
    }
    let comps = st.crystal.components();
    for comp in &comps {
        let members: BTreeSet<usize> = comp.iter().copied().collect();
        let ch = st.crystal.character_of(&members);
        let mut sum = Polynomial::zero(n);
        for &b in comp {
            if st.crystal.is_highest_weight(b) {
                let wt: Vec<u32> = st.crystal.weights[b].iter().map(|&x| x as u32).collect();
                sum = sum.plus(&grothendieck_g(&wt, n).map_err(|e| e.to_string())?);
            }
        }
        if ch != sum {
            failures.push(format!("component of {}", st.crystal.labels[comp[0]]));
        }
    }
    Ok(VerifyReport {
        theorem: "svt",
        range: format!("shape={lambda:?} n={n}"),
        checked: st.crystal.len() + comps.len(),
        failures,
    })
}

// ---------------------------------------------------------------------------
// graph

fn cmd_graph(
    cli: &Cli,
    universe: UniverseKind,
    n: Option<usize>,
    m: Option<usize>,
    shape: Option<&str>,
) -> Result<ExitCode, String> {
    let graph = match universe {
        UniverseKind::StandardSqrt => crystal::standard_sqrt(n.ok_or("--n required")?),
        UniverseKind::Settab => {
            let lambda = parse_partition(shape.ok_or("--shape required for settab")?)?;
            let sh = tableaux::Shape::straight(&lambda).map_err(|e| e.to_string())?;
            tableaux::settab_crystal(&sh, n.ok_or("--n required")?)
                .map_err(|e| e.to_string())?
                .crystal
        }
        UniverseKind::Svwords => {
            svwords::universe(n.ok_or("--n required")?, m.ok_or("--m required")?)
                .map_err(|e| e.to_string())?
                .crystal
        }
        UniverseKind::Trivial => crystal::trivial(n.unwrap_or(1), crystal::Family::Sqrt),
    };
    let body = match cli.format {
        Format::Json => graph.to_json().to_string(),
        _ => graph.to_dot(),
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}
