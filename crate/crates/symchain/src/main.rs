//! Command-line front end: builds and verifies chain decompositions, cycle
//! factors and the middle-four-levels Hamilton cycle, and runs the necklace
//! search. All output is deterministic; `--json` switches every command to a
//! single structured record.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use symchain::factor::build_factor;
use symchain::middle4::{build_aux_graph, hamilton_middle4, structure_checks};
use symchain::necklace::{build_necklace_graph, lift_to_cube, search_disjoint_scds, SearchOutcome};
use symchain::product::product_scd_pair;
use symchain::scd::{lexical_scd, marker_scd, parenthesis_scd, ChainDecomposition, MarkerRule};

/// Prints a line to stdout; a closed pipe ends the process quietly instead
/// of panicking, so `symchain ... | head` behaves.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const Q5_LIFTS: [&str; 3] = [
    include_str!("../fixtures/q5_0.scd"),
    include_str!("../fixtures/q5_1.scd"),
    include_str!("../fixtures/q5_2.scd"),
];
const Q7_LIFTS: [&str; 4] = [
    include_str!("../fixtures/q7_0.scd"),
    include_str!("../fixtures/q7_1.scd"),
    include_str!("../fixtures/q7_2.scd"),
    include_str!("../fixtures/q7_3.scd"),
];

/// Symmetric chain decompositions of the n-cube and cycle structures built
/// from them.
///
/// Exit codes: 0 success or verified, 1 verification failure (including
/// "not disjoint" and "impossible"), 2 usage error, 3 search budget exceeded.
#[derive(Parser)]
#[command(name = "symchain", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one symmetric chain decomposition and print it, one chain per
    /// line, lowest vertex first.
    ///
    /// Kinds: d0, d0c, d1, d1c (parenthesis and marker decompositions and
    /// their complements; d1 needs even n), lex:<i_1,...,i_n> (union of the
    /// lexical matchings with those indices), product:<0|1> (the two
    /// edge-disjoint product decompositions of an odd cube), necklace:<i>
    /// (the i-th decomposition lifted from the necklace poset; shipped for
    /// n = 5 and n = 7).
    Scd {
        /// Which decomposition to build.
        kind: String,
        /// Cube dimension.
        n: usize,
        /// Append a verification report and fail if it does not pass.
        #[arg(long)]
        verify: bool,
        /// Emit one structured JSON record instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Check several decompositions of the same cube for pairwise
    /// edge-disjointness.
    Disjoint {
        /// Cube dimension.
        n: usize,
        /// Two or more decomposition kinds, as for `scd`.
        #[arg(num_args = 2.., required = true)]
        kinds: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build the cycle factor on the middle 2*ell levels of Q_{2n+1} from
    /// two edge-disjoint decompositions.
    Factor {
        /// Half-dimension: the cube is Q_{2n+1}.
        n: usize,
        /// Band half-width: the factor covers levels n+1-ell through n+ell.
        #[arg(long)]
        ell: usize,
        /// Either two comma-separated kinds, for example `d0,d0c`, or the
        /// word `product` for the canonical product pair.
        #[arg(long, value_delimiter = ',', required = true)]
        scds: Vec<String>,
        /// Print the cycle census (the default).
        #[arg(long)]
        census: bool,
        /// Print every cycle, one per line.
        #[arg(long, conflicts_with = "census")]
        emit: bool,
        #[arg(long)]
        json: bool,
    },
    /// The Hamilton cycle through the middle four levels of Q_{2n+1}.
    Middle4 {
        /// Half-dimension: the cube is Q_{2n+1}.
        n: usize,
        /// Print the census of rotation orbits of the path starts.
        #[arg(long)]
        orbits: bool,
        /// Print the Hamilton cycle, one vertex per line.
        #[arg(long, conflicts_with = "orbits")]
        emit: bool,
        /// Repeat the first vertex at the end (with --emit).
        #[arg(long, requires = "emit")]
        closed: bool,
        /// Run the structural checks behind the construction and report
        /// each as pass or fail.
        #[arg(long, conflicts_with_all = ["orbits", "emit"])]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search the necklace poset N_n for k pairwise edge-disjoint symmetric
    /// chain decompositions; on success persist them, and their cube lifts
    /// when n is prime, as .scd files.
    #[command(name = "necklace-search")]
    NecklaceSearch {
        /// Poset dimension.
        n: usize,
        /// How many pairwise disjoint decompositions to look for.
        k: usize,
        /// Bound on search steps before giving up.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Directory for the fixture files (default: current directory).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Verify(String),
    Budget(String),
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Scd { kind, n, verify, json } => cmd_scd(&kind, n, verify, json),
        Command::Disjoint { n, kinds, json } => cmd_disjoint(n, &kinds, json),
        Command::Factor { n, ell, scds, emit, json, .. } => cmd_factor(n, ell, &scds, emit, json),
        Command::Middle4 { n, orbits, emit, closed, check, json } => {
            if check {
                cmd_middle4_check(n, json)
            } else if orbits {
                cmd_middle4_orbits(n, json)
            } else if emit {
                cmd_middle4_emit(n, closed, json)
            } else {
                Err(Failure::Usage(
                    "middle4 needs one of --orbits, --emit or --check".into(),
                ))
            }
        }
        Command::NecklaceSearch { n, k, budget, out, json } => {
            cmd_necklace_search(n, k, budget, out.as_deref(), json)
        }
    }
}

fn build_kind(kind: &str, n: usize) -> Result<ChainDecomposition, Failure> {
    if let Some(list) = kind.strip_prefix("lex:") {
        let indices = list
            .split(',')
            .map(|w| w.parse::<usize>())
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| Failure::Usage(format!("cannot parse matching indices `{list}`")))?;
        return lexical_scd(n, &indices).map_err(Failure::usage);
    }
    if let Some(which) = kind.strip_prefix("product:") {
        if n.is_multiple_of(2) || n < 3 {
            return Err(Failure::Usage(format!(
                "the product pair is defined for odd cubes of dimension at least three, not Q_{n}"
            )));
        }
        let (a, b) = product_scd_pair(n / 2);
        return match which {
            "0" => Ok(a),
            "1" => Ok(b),
            _ => Err(Failure::Usage(format!(
                "`product:{which}`: the pair has members 0 and 1"
            ))),
        };
    }
    if let Some(idx) = kind.strip_prefix("necklace:") {
        let lifts: &[&str] = match n {
            5 => &Q5_LIFTS,
            7 => &Q7_LIFTS,
            _ => {
                return Err(Failure::Usage(format!(
                    "necklace decompositions ship for Q_5 and Q_7 only; run \
                     `symchain necklace-search {n} <k>` to build others"
                )))
            }
        };
        let i: usize = idx
            .parse()
            .map_err(|_| Failure::Usage(format!("cannot parse necklace index `{idx}`")))?;
        let text = lifts.get(i).ok_or_else(|| {
            Failure::Usage(format!(
                "Q_{n} ships {} necklace decompositions, indices 0..{}",
                lifts.len(),
                lifts.len() - 1
            ))
        })?;
        return ChainDecomposition::from_text(text).map_err(Failure::usage);
    }
    match kind {
        "d0" => Ok(parenthesis_scd(n)),
        "d0c" => Ok(parenthesis_scd(n).complemented()),
        "d1" => marker_scd(n, MarkerRule::Second).map_err(Failure::usage),
        "d1c" => Ok(marker_scd(n, MarkerRule::Second)
            .map_err(Failure::usage)?
            .complemented()),
        _ => Err(Failure::Usage(format!(
            "unknown decomposition kind `{kind}`; expected d0, d0c, d1, d1c, \
             lex:<indices>, product:<0|1> or necklace:<index>"
        ))),
    }
}

fn cmd_scd(kind: &str, n: usize, verify: bool, json: bool) -> Result<(), Failure> {
    let scd = build_kind(kind, n)?;
    let report = verify.then(|| scd.verify());
    if json {
        let chains: Vec<String> = scd.chains().iter().map(|c| c.to_string()).collect();
        let record = json!({
            "command": "scd",
            "params": { "kind": kind, "n": n, "verify": verify },
            "results": {
                "chain_count": scd.chains().len(),
                "chains": chains,
                "verified": report.as_ref().map(|r| r.is_valid()),
                "failures": report.as_ref().map(|r| r.failures.clone()),
            },
        });
        out!("{record}");
    } else {
        out_raw!("{}", scd.to_text());
        if let Some(report) = &report {
            out!("{report}");
        }
    }
    match report {
        Some(report) if !report.is_valid() => Err(Failure::Verify(format!(
            "{kind} of Q_{n} is not a symmetric chain decomposition"
        ))),
        _ => Ok(()),
    }
}

fn cmd_disjoint(n: usize, kinds: &[String], json: bool) -> Result<(), Failure> {
    let scds = kinds
        .iter()
        .map(|kind| build_kind(kind, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut records = Vec::new();
    let mut clashes = 0usize;
    for i in 0..scds.len() {
        for j in i + 1..scds.len() {
            let shared = scds[i].shared_edge(&scds[j]);
            if shared.is_some() {
                clashes += 1;
            }
            records.push((kinds[i].as_str(), kinds[j].as_str(), shared));
        }
    }
    if json {
        let pairs: Vec<_> = records
            .iter()
            .map(|(a, b, shared)| {
                json!({
                    "kinds": [a, b],
                    "disjoint": shared.is_none(),
                    "shared_edge": shared.map(|(x, y)| format!("{x} - {y}")),
                })
            })
            .collect();
        let record = json!({
            "command": "disjoint",
            "params": { "n": n, "kinds": kinds },
            "results": { "pairs": pairs, "all_disjoint": clashes == 0 },
        });
        out!("{record}");
    } else {
        for (a, b, shared) in &records {
            match shared {
                None => out!("{a} / {b}: disjoint"),
                Some((x, y)) => out!("{a} / {b}: share the edge {x} - {y}"),
            }
        }
        if clashes == 0 {
            out!("all pairs disjoint");
        } else {
            out!("{clashes} of {} pairs share edges", records.len());
        }
    }
    if clashes == 0 {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "{clashes} of {} pairs share edges",
            records.len()
        )))
    }
}

fn cmd_factor(n: usize, ell: usize, scds: &[String], emit: bool, json: bool) -> Result<(), Failure> {
    let dim = 2 * n + 1;
    let (d1, d2) = match scds {
        [word] if word == "product" => {
            if n == 0 {
                return Err(Failure::Usage("the product pair needs n of at least one".into()));
            }
            product_scd_pair(n)
        }
        [a, b] => (build_kind(a, dim)?, build_kind(b, dim)?),
        _ => {
            return Err(Failure::Usage(
                "--scds takes two comma-separated kinds or the word `product`".into(),
            ))
        }
    };
    let factor = build_factor(&d1, &d2, ell).map_err(Failure::usage)?;
    let census = factor.census();
    if json {
        let mut results = json!({
            "cycle_count": census.count(),
            "lengths": census.lengths,
        });
        if emit {
            let cycles: Vec<Vec<String>> = factor
                .cycles()
                .iter()
                .map(|c| c.iter().map(|v| v.to_string()).collect())
                .collect();
            results["cycles"] = json!(cycles);
        }
        let record = json!({
            "command": "factor",
            "params": { "n": n, "dimension": dim, "ell": ell, "scds": scds },
            "results": results,
        });
        out!("{record}");
    } else if emit {
        for cycle in factor.cycles() {
            let words: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            out!("{}", words.join(" "));
        }
    } else {
        out!("{census}");
    }
    Ok(())
}

fn cmd_middle4_orbits(n: usize, json: bool) -> Result<(), Failure> {
    let aux = build_aux_graph(n).map_err(Failure::usage)?;
    let sizes: Vec<usize> = aux.orbits().iter().map(|o| o.len()).collect();
    if json {
        let record = json!({
            "command": "middle4",
            "params": { "n": n, "mode": "orbits" },
            "results": { "orbit_count": aux.orbit_count(), "sizes": sizes },
        });
        out!("{record}");
    } else {
        let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
        let label = if aux.orbit_count() == 1 { "orbit" } else { "orbits" };
        out!("{} {label}: {}", aux.orbit_count(), sizes.join(","));
    }
    Ok(())
}

fn cmd_middle4_emit(n: usize, closed: bool, json: bool) -> Result<(), Failure> {
    let cycle = hamilton_middle4(n).map_err(|e| Failure::Verify(e.to_string()))?;
    if json {
        let vertices: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
        let record = json!({
            "command": "middle4",
            "params": { "n": n, "mode": "emit", "closed": closed },
            "results": { "length": cycle.len(), "vertices": vertices },
        });
        out!("{record}");
    } else {
        for v in &cycle {
            out!("{v}");
        }
        if closed {
            out!("{}", cycle[0]);
        }
    }
    Ok(())
}

fn cmd_middle4_check(n: usize, json: bool) -> Result<(), Failure> {
    let checks = structure_checks(n);
    let failures = checks.iter().filter(|(_, r)| r.is_err()).count();
    if json {
        let items: Vec<_> = checks
            .iter()
            .map(|(name, result)| {
                json!({
                    "check": name,
                    "ok": result.is_ok(),
                    "detail": result.as_ref().err().map(|e| e.to_string()),
                })
            })
            .collect();
        let record = json!({
            "command": "middle4",
            "params": { "n": n, "mode": "check" },
            "results": { "checks": items, "all_passed": failures == 0 },
        });
        out!("{record}");
    } else {
        for (name, result) in &checks {
            match result {
                Ok(()) => out!("pass: {name}"),
                Err(e) => out!("FAIL: {name}: {e}"),
            }
        }
        if failures == 0 {
            out!("all {} checks passed", checks.len());
        }
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "{failures} of {} checks failed for Q_{}",
            checks.len(),
            2 * n + 1
        )))
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn cmd_necklace_search(
    n: usize,
    k: usize,
    budget: u64,
    out: Option<&std::path::Path>,
    json: bool,
) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage("at least one decomposition must be requested".into()));
    }
    let g = build_necklace_graph(n).map_err(Failure::usage)?;
    let scds = match search_disjoint_scds(&g, k, budget) {
        SearchOutcome::Found(scds) => scds,
        SearchOutcome::Impossible => {
            let msg =
                format!("N_{n} has no {k} pairwise disjoint decompositions; the search was exhaustive");
            if json {
                let record = json!({
                    "command": "necklace-search",
                    "params": { "n": n, "k": k, "budget": budget },
                    "results": { "outcome": "impossible" },
                });
                out!("{record}");
            } else {
                out!("{msg}");
            }
            return Err(Failure::Verify(msg));
        }
        SearchOutcome::BudgetExceeded => {
            let msg = format!("budget of {budget} steps exceeded before the search finished");
            if json {
                let record = json!({
                    "command": "necklace-search",
                    "params": { "n": n, "k": k, "budget": budget },
                    "results": { "outcome": "budget exceeded" },
                });
                out!("{record}");
            } else {
                out!("{msg}");
            }
            return Err(Failure::Budget(msg));
        }
    };
    for scd in &scds {
        scd.verify(&g).map_err(|e| Failure::Verify(e.to_string()))?;
    }
    let lifts = if is_prime(n) {
        let lifts = lift_to_cube(&scds).map_err(|e| Failure::Verify(e.to_string()))?;
        for lift in &lifts {
            let report = lift.verify();
            if !report.is_valid() {
                return Err(Failure::Verify(format!("a lifted decomposition fails: {report}")));
            }
        }
        lifts
    } else {
        Vec::new()
    };

    let dir = out.unwrap_or_else(|| std::path::Path::new("."));
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    let write = |name: String, text: String, files: &mut Vec<String>| -> Result<(), Failure> {
        let path = dir.join(&name);
        std::fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        files.push(name);
        Ok(())
    };
    for (i, scd) in scds.iter().enumerate() {
        write(format!("n{n}_{i}.scd"), scd.to_text(), &mut files)?;
    }
    for (i, lift) in lifts.iter().enumerate() {
        write(format!("q{n}_{i}.scd"), lift.to_text(), &mut files)?;
    }

    if json {
        let decompositions: Vec<Vec<String>> = scds
            .iter()
            .map(|s| s.to_text().lines().map(str::to_owned).collect())
            .collect();
        let record = json!({
            "command": "necklace-search",
            "params": { "n": n, "k": k, "budget": budget },
            "results": {
                "outcome": "found",
                "decompositions": decompositions,
                "lifted": !lifts.is_empty(),
                "files": files,
            },
        });
        out!("{record}");
    } else {
        out!("found {k} pairwise disjoint decompositions of N_{n}");
        for (i, scd) in scds.iter().enumerate() {
            out!("decomposition {i}:");
            out_raw!("{}", scd.to_text());
        }
        if lifts.is_empty() {
            out!("{n} is not prime, so no cube lift is written");
        } else {
            for (i, lift) in lifts.iter().enumerate() {
                out!("lift {i}: {} verified chains of Q_{n}", lift.chains().len());
            }
        }
        out!("wrote {} to {}", files.join(", "), dir.display());
    }
    Ok(())
}
