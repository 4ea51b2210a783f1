//! Command-line front end for the `sigma_lfsr` library.
//!
//! Exit codes: 0 on success, 1 on a usage or input error, 2 when the
//! requested parameters exceed the feasible enumeration range, and 3
//! when a counting check (the Upsilon formula, the fiber sizes or the
//! surjectivity of the characteristic map) comes out false — so that a
//! script can tell a malformed invocation from a mathematical surprise.

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use sigma_lfsr::census::{self, CensusReport, VerifyCell};
use sigma_lfsr::construct::construct_primitive_sigma;
use sigma_lfsr::keystream::{keystream_words, measure_throughput};
use sigma_lfsr::lfsr::is_primitive_sigma;
use sigma_lfsr::order::{enumerate_primitive, is_primitive, poly_order_seeded};
use sigma_lfsr::splitting::splitting_count;
use sigma_lfsr::{
    BlockCompanion, Error, ExtElem, ExtField, LfsrSpec, MatFq, Poly, PrimeField, SigmaLfsrSpec,
};

#[derive(Parser)]
#[command(
    name = "sigma-lfsr",
    version,
    about = "Exact tools for word-oriented LFSRs: primitive polynomials, block \
             companion matrices, Singer-cycle censuses and keystream benchmarks"
)]
struct Cli {
    /// Seed for the randomized equal-degree splitter used internally when
    /// factoring polynomials. Every documented output is seed-invariant;
    /// the flag only pins the internal search path.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Primitive polynomials over F_q: enumeration, membership tests and
    /// multiplicative orders
    #[command(subcommand)]
    Primpoly(PrimpolyCmd),

    /// Classical scalar LFSR: the recurrence s_{i+n} = c_{n-1} s_{i+n-1}
    /// + ... + c_0 s_i over a prime field
    #[command(subcommand)]
    Lfsr(LfsrCmd),

    /// Word-oriented sigma-LFSR: matrix taps C_0..C_{n-1} acting on the
    /// coordinate vectors of F_{q^m} words
    #[command(subcommand)]
    Sigma(SigmaCmd),

    /// Throughput measurements for the packed q=2 keystream engine
    #[command(subcommand)]
    Bench(BenchCmd),

    /// Exhaustive census of block-companion Singer cycles: fiber
    /// histograms of the characteristic map and the counting checks
    #[command(subcommand)]
    Census(CensusCmd),

    /// Build a primitive sigma-LFSR whose Delta polynomial equals a given
    /// primitive polynomial of degree m*n (the surjectivity construction)
    Construct {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Target primitive polynomial of degree m*n, e.g. x^4+x+1
        #[arg(long)]
        f: String,
        /// Word size m; the tap blocks are m x m
        #[arg(long)]
        m: usize,
        /// Register length n; the number of tap blocks
        #[arg(long)]
        n: usize,
    },

    /// Count the m-dimensional alpha-splitting subspaces of F_{q^(mn)},
    /// where alpha is a root of the given primitive polynomial
    Splitting {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Primitive polynomial of degree m*n defining alpha
        #[arg(long)]
        f: String,
        /// Dimension of the splitting subspaces
        #[arg(long)]
        m: usize,
        /// Number of summands W + alpha W + ... + alpha^(n-1) W
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum PrimpolyCmd {
    /// List every monic primitive polynomial of the given degree over
    /// F_q, one per line, in ascending coefficient order
    List {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Degree of the polynomials to enumerate
        #[arg(long)]
        deg: usize,
    },
    /// Decide whether a polynomial is primitive over F_q; prints
    /// "true" or "false"
    Test {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Polynomial, e.g. x^4+x+1 or ascending coefficients 1,1,0,0,1
        #[arg(long)]
        f: String,
    },
    /// Multiplicative order of a polynomial: the least e >= 1 with
    /// f(x) dividing x^e - 1 (defined when f(0) != 0)
    Order {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Polynomial with nonzero constant term
        #[arg(long)]
        f: String,
    },
}

#[derive(Subcommand)]
enum LfsrCmd {
    /// Run the scalar recurrence and print the first N sequence terms
    /// (the seed occupies the first n slots) as one comma-separated line
    Run {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Tap coefficients c_0,...,c_{n-1}, ascending
        #[arg(long)]
        taps: String,
        /// Initial state s_0,...,s_{n-1}
        #[arg(long)]
        init: String,
        /// Number of sequence terms to emit
        #[arg(long)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum SigmaCmd {
    /// Step the matrix-tap recurrence and print the output words, one
    /// per line; with --hex or --raw the words are emitted as a packed
    /// keystream (base field F_2, m <= 64 only)
    Run {
        /// Field descriptor, e.g. "q=2,m=2,g=x^2+x+1"; g may be omitted
        /// to use the canonical primitive modulus
        #[arg(long)]
        field: String,
        /// Tap blocks C_0|C_1|...|C_{n-1}, each in row text form
        /// "r0c0,r0c1;r1c0,r1c1"
        #[arg(long)]
        blocks: String,
        /// Initial words s_0|s_1|...|s_{n-1}, each "a0,a1,...,a{m-1}"
        #[arg(long)]
        init: String,
        /// Number of output words
        #[arg(long)]
        count: usize,
        /// Emit packed keystream words in hex, one per line
        #[arg(long)]
        hex: bool,
        /// Emit packed keystream words as raw little-endian 8-byte words
        #[arg(long, conflicts_with = "hex")]
        raw: bool,
    },
    /// Report the Delta polynomial of a sigma-LFSR and whether it is
    /// primitive (every nonzero state on one cycle of length q^(mn)-1)
    Test {
        /// Field descriptor, e.g. "q=2,m=2,g=x^2+x+1"
        #[arg(long)]
        field: String,
        /// Tap blocks C_0|C_1|...|C_{n-1}
        #[arg(long)]
        blocks: String,
    },
}

#[derive(Subcommand)]
enum BenchCmd {
    /// Measure packed keystream throughput in words per second for a
    /// deterministic dense-tap register over F_{2^m}
    Keystream {
        /// Word size in bits (1..=64)
        #[arg(long, default_value_t = 32)]
        m: usize,
        /// Register length (number of tap blocks)
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Words generated per run
        #[arg(long, default_value_t = 1 << 26)]
        words: u64,
        /// Number of runs; the median rate is reported
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

#[derive(Subcommand)]
enum CensusCmd {
    /// Enumerate every nonsingular block companion matrix of maximal
    /// order for one (q, m, n) cell, group them by characteristic
    /// polynomial and evaluate the Upsilon count, the fiber sizes and
    /// the surjectivity of the characteristic map
    Run {
        /// Base prime field size
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Word size m; the tap blocks are m x m
        #[arg(long)]
        m: usize,
        /// Register length n; the number of tap blocks
        #[arg(long)]
        n: usize,
        /// Include the serialized members of every fiber
        #[arg(long)]
        members: bool,
        /// Worker threads for the scan; the output is byte-identical
        /// for any value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Sweep a (q, m, n) grid and re-run the census checks plus the
    /// construction roundtrip, the splitting-subspace relation and an
    /// independent Singer-cycle scan where each applies
    Verify {
        /// Grid, e.g. "q=2,m<=2,n<=3"; use = to pin a value and <= for
        /// a range starting at 1
        #[arg(long)]
        grid: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; anything else is
            // a usage error and must exit 1, not clap's default 2.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Infeasible { .. } => 2,
                _ => 1,
            }
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Primpoly(cmd) => primpoly(cmd, cli.seed),
        Cmd::Lfsr(cmd) => lfsr_run(cmd),
        Cmd::Sigma(cmd) => sigma(cmd),
        Cmd::Bench(cmd) => bench(cmd),
        Cmd::Census(cmd) => census_cmd(cmd),
        Cmd::Construct { q, f, m, n } => {
            let f = parse_poly(q, &f)?;
            let bc = construct_primitive_sigma(&f, m, n)?;
            println!("{}", bc.to_text());
            Ok(0)
        }
        Cmd::Splitting { q, f, m, n } => {
            let f = parse_poly(q, &f)?;
            let report = splitting_count(&f, m, n)?;
            println!(
                "{}",
                serde_json::json!({
                    "schema": "1",
                    "q": report.q,
                    "m": report.m,
                    "n": report.n,
                    "alpha_minpoly": report.alpha_minpoly.to_string(),
                    "subspace_count": report.subspace_count,
                })
            );
            Ok(0)
        }
    }
}

fn primpoly(cmd: PrimpolyCmd, seed: u64) -> Result<i32, Error> {
    match cmd {
        PrimpolyCmd::List { q, deg } => {
            let field = PrimeField::new(q)?;
            for f in enumerate_primitive(deg, field)? {
                println!("{f}");
            }
        }
        PrimpolyCmd::Test { q, f } => {
            let f = parse_poly(q, &f)?;
            println!("{}", is_primitive(&f)?);
        }
        PrimpolyCmd::Order { q, f } => {
            let f = parse_poly(q, &f)?;
            println!("{}", poly_order_seeded(&f, seed)?);
        }
    }
    Ok(0)
}

fn lfsr_run(cmd: LfsrCmd) -> Result<i32, Error> {
    let LfsrCmd::Run { q, taps, init, count } = cmd;
    let field = PrimeField::new(q)?;
    let spec = LfsrSpec::new(field, parse_u64_list(&taps)?)?;
    let seq = spec.run(&parse_u64_list(&init)?, count)?;
    let line: Vec<String> = seq.iter().map(u64::to_string).collect();
    println!("{}", line.join(","));
    Ok(0)
}

fn sigma(cmd: SigmaCmd) -> Result<i32, Error> {
    match cmd {
        SigmaCmd::Run { field, blocks, init, count, hex, raw } => {
            let (spec, _) = parse_sigma_spec(&field, &blocks)?;
            let init = parse_init_words(spec.parent(), &init)?;
            if hex || raw {
                let words = keystream_words(&spec, &init, count)?;
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                if hex {
                    for w in &words {
                        writeln!(out, "{w:x}").map_err(io_error)?;
                    }
                } else {
                    for w in &words {
                        out.write_all(&w.to_le_bytes()).map_err(io_error)?;
                    }
                }
                out.flush().map_err(io_error)?;
            } else {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                for w in spec.run(&init, count)? {
                    writeln!(out, "{w}").map_err(io_error)?;
                }
                out.flush().map_err(io_error)?;
            }
            Ok(0)
        }
        SigmaCmd::Test { field, blocks } => {
            let (spec, _) = parse_sigma_spec(&field, &blocks)?;
            println!("delta: {}", spec.delta_poly()?);
            println!("primitive: {}", is_primitive_sigma(&spec)?);
            Ok(0)
        }
    }
}

fn bench(cmd: BenchCmd) -> Result<i32, Error> {
    let BenchCmd::Keystream { m, n, words, runs } = cmd;
    let (spec, init) = bench_spec(m, n)?;
    let (rate, checksum) = measure_throughput(&spec, &init, words, runs)?;
    println!("m: {m}");
    println!("n: {n}");
    println!("words_per_run: {words}");
    println!("runs: {runs}");
    println!("median_words_per_sec: {rate:.0}");
    println!("checksum: {checksum:#018x}");
    Ok(0)
}

/// Deterministic dense-tap register for benchmarking: tap entries come
/// from a fixed xorshift stream, so every invocation measures the same
/// register. Throughput does not depend on the tap values.
fn bench_spec(m: usize, n: usize) -> Result<(SigmaLfsrSpec, Vec<ExtElem>), Error> {
    let field = PrimeField::new(2)?;
    let parent = ExtField::with_default_modulus(field, m)?;
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next_bit = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state & 1
    };
    let mut taps = Vec::with_capacity(n);
    for _ in 0..n {
        let entries: Vec<u64> = (0..m * m).map(|_| next_bit()).collect();
        taps.push(MatFq::new(field, m, m, entries)?);
    }
    let spec = SigmaLfsrSpec::new(parent.clone(), taps)?;
    let mut init = Vec::with_capacity(n);
    for i in 0..n {
        let mut coords: Vec<u64> = (0..m).map(|_| next_bit()).collect();
        if i == 0 {
            coords[0] = 1;
        }
        init.push(parent.elem(coords)?);
    }
    Ok((spec, init))
}

fn census_cmd(cmd: CensusCmd) -> Result<i32, Error> {
    match cmd {
        CensusCmd::Run { q, m, n, members, jobs, format } => {
            let field = PrimeField::new(q)?;
            let report = census::fiber_histogram(m, n, field, members, jobs)?;
            match format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&report).expect("report serialization"))
                }
                OutputFormat::Csv => {
                    println!("q,m,n,total,upsilon,fibers,conjecture1,conjecture2,surjective");
                    println!(
                        "{},{},{},{},{},{},{},{},{}",
                        report.q,
                        report.m,
                        report.n,
                        report.total,
                        report.upsilon,
                        report.fibers.len(),
                        report.conjecture1,
                        report.conjecture2,
                        report.surjective
                    );
                }
                OutputFormat::Text => render_census_text(&report),
            }
            Ok(if report.all_checks_hold() { 0 } else { 3 })
        }
        CensusCmd::Verify { grid, format } => {
            let (q, m_range, n_range) = parse_grid(&grid)?;
            let field = PrimeField::new(q)?;
            let cells = census::verify_all(field, m_range, n_range)?;
            match format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&cells).expect("report serialization"))
                }
                OutputFormat::Csv => render_verify_csv(&cells),
                OutputFormat::Text => render_verify_text(&cells),
            }
            Ok(if cells.iter().all(|c| c.passed) { 0 } else { 3 })
        }
    }
}

fn render_census_text(report: &CensusReport) {
    println!("census q={} m={} n={}", report.q, report.m, report.n);
    println!("total: {}", report.total);
    println!("upsilon: {}", report.upsilon);
    println!("conjecture1: {}", pass_fail(report.conjecture1));
    println!("conjecture2: {}", pass_fail(report.conjecture2));
    println!("surjective: {}", pass_fail(report.surjective));
    println!("fibers: {}", report.fibers.len());
    for fiber in &report.fibers {
        println!("  {}: {}", fiber.poly, fiber.size);
        if let Some(members) = &fiber.members {
            for member in members {
                println!("    {member}");
            }
        }
    }
}

fn render_verify_csv(cells: &[VerifyCell]) {
    println!(
        "q,m,n,skipped,total,upsilon,conjecture1,conjecture2,surjective,\
         construct_roundtrip,splitting_relation,singer_scan,passed"
    );
    for c in cells {
        println!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            c.q,
            c.m,
            c.n,
            c.skipped,
            opt(c.total),
            opt(c.upsilon),
            opt(c.conjecture1),
            opt(c.conjecture2),
            opt(c.surjective),
            opt(c.construct_roundtrip),
            opt(c.splitting_relation),
            opt(c.singer_scan),
            c.passed
        );
    }
}

fn render_verify_text(cells: &[VerifyCell]) {
    for c in cells {
        if c.skipped {
            let reason = c.skip_reason.as_deref().unwrap_or("infeasible");
            println!("q={} m={} n={}: skipped ({reason})", c.q, c.m, c.n);
        } else {
            println!(
                "q={} m={} n={}: {} (total {})",
                c.q,
                c.m,
                c.n,
                pass_fail(c.passed),
                opt(c.total)
            );
        }
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn parse_poly(q: u64, s: &str) -> Result<Poly, Error> {
    let field = PrimeField::new(q)?;
    Poly::parse(field, s)
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>().map_err(|_| Error::parse("field element", tok))
        })
        .collect()
}

fn parse_sigma_spec(field: &str, blocks: &str) -> Result<(SigmaLfsrSpec, BlockCompanion), Error> {
    let parent = ExtField::parse_descriptor(field)?;
    let bc = BlockCompanion::parse_piped(parent.base(), blocks)?;
    if bc.m() != parent.m() {
        return Err(Error::DimensionMismatch { expected: parent.m(), got: bc.m() });
    }
    let spec = SigmaLfsrSpec::new(parent, bc.blocks().to_vec())?;
    Ok((spec, bc))
}

fn parse_init_words(parent: &ExtField, s: &str) -> Result<Vec<ExtElem>, Error> {
    s.split('|').map(|tok| parent.parse_elem(tok.trim())).collect()
}

/// Parses a verification grid such as "q=2,m<=2,n<=3". The base field
/// must be pinned with `=`; m and n accept either a pin or a `<=` bound
/// (ranges always start at 1). All three keys are required.
fn parse_grid(s: &str) -> Result<(u64, RangeInclusive<usize>, RangeInclusive<usize>), Error> {
    let mut q = None;
    let mut m = None;
    let mut n = None;
    for part in s.split(',') {
        let part = part.trim();
        // Check `<=` before `=`: splitting "m<=2" on '=' would leave "m<".
        if let Some((key, bound)) = part.split_once("<=") {
            let hi: usize = bound
                .trim()
                .parse()
                .map_err(|_| Error::parse("grid bound", bound.trim()))?;
            match key.trim() {
                "m" => m = Some(1..=hi),
                "n" => n = Some(1..=hi),
                _ => return Err(Error::parse("grid key", part)),
            }
        } else if let Some((key, value)) = part.split_once('=') {
            let value = value.trim();
            match key.trim() {
                "q" => {
                    q = Some(value.parse::<u64>().map_err(|_| Error::parse("grid bound", value))?)
                }
                "m" => {
                    let v =
                        value.parse::<usize>().map_err(|_| Error::parse("grid bound", value))?;
                    m = Some(v..=v);
                }
                "n" => {
                    let v =
                        value.parse::<usize>().map_err(|_| Error::parse("grid bound", value))?;
                    n = Some(v..=v);
                }
                _ => return Err(Error::parse("grid key", part)),
            }
        } else {
            return Err(Error::parse("grid", part));
        }
    }
    match (q, m, n) {
        (Some(q), Some(m), Some(n)) => Ok((q, m, n)),
        _ => Err(Error::parse("grid", s)),
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::parse("stdout", e.to_string())
}
