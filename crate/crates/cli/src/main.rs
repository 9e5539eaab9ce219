//! `rookery` — generate, map, count, and verify the objects the library
//! models: rook placements on staircase boards, increasing trees, Dyck
//! chains, permutations, and the polynomials tying them together.
//!
//! Exit codes: 0 success (or verification passed), 1 verification found a
//! counterexample, 2 usage or input parse error.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rookery_core::bijections::{
    chain_to_perm, chain_to_rook, dyck_word_of, fibre, lift, perm_to_chain, perm_to_tree, profile,
    project, rook_to_chain, rook_to_tree, tree_to_perm, tree_to_rook,
};
use rookery_core::enumeration::{
    eulerian, gen_perms, gen_placements, gen_stirling, gen_trees, p_poly,
};
use rookery_core::poly::gamma_expand;
use rookery_core::{Side, StaircaseShape};

use rookery_cli::{verify, wire};

#[derive(Parser)]
#[command(name = "rookery", version, about = "Staircase rook placements, increasing trees, Dyck chains, and permutation statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of a family, one per line.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Weight vector (rooks), arity vector (trees), or multiplicity
        /// vector (stirling), comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = false)]
        s: Option<Vec<usize>>,
        /// Uniform weight/arity; combine with --n.
        #[arg(long)]
        k: Option<usize>,
        /// Row count (rooks), vertex count (trees), or letter count (perms).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Map objects read from stdin, one per line, through a bijection.
    Map {
        #[arg(value_enum)]
        pair: MapPair,
        /// Side for projected-to-rook lifts.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        align: SideArg,
        /// Slot count given to the final tree vertex in rook-to-tree.
        #[arg(long, default_value_t = 1)]
        last_arity: usize,
    },
    /// Print a coefficient row (degree-descending unless --ascending).
    Poly {
        #[arg(value_enum)]
        which: PolyKind,
        #[arg(long)]
        n: usize,
        /// Aligned side for the placement polynomial.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long)]
        ascending: bool,
    },
    /// Print the table of aligned-placement polynomials up to a size.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long)]
        max_n: usize,
    },
    /// Run the invariant suites up to size --n; exits 1 on a counterexample.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of the suites (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Option<Vec<verify::CheckName>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Rooks,
    Trees,
    Perms,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(side: SideArg) -> Side {
        match side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    P,
    Eulerian,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Pn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapPair {
    RookToTree,
    TreeToRook,
    PermToTree,
    TreeToPerm,
    RookToChain,
    ChainToRook,
    PermToChain,
    ChainToPerm,
    RookToDyck,
    PermToProfile,
    RookToProjected,
    ProjectedToRook,
    ProjectedToFibre,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("rookery: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen { family, s, k, n } => {
            gen(family, s, k, n)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { pair, align, last_arity } => {
            map(pair, align.into(), last_arity)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { which, n, side, ascending } => {
            let row = match which {
                PolyKind::P => wire::print_poly_row(&p_poly(n, side.into()), ascending),
                PolyKind::Eulerian => wire::print_poly_row(&eulerian(n), ascending),
                PolyKind::Gamma => {
                    let gamma = gamma_expand(&eulerian(n + 1), n)
                        .map_err(|e| format!("gamma expansion failed: {e}"))?;
                    gamma
                        .entries()
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            };
            println!("{row}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { which: TableKind::Pn, max_n } => {
            for n in 1..=max_n {
                println!("{n:>2}  {}", p_poly(n, Side::Left));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, checks } => {
            let requested = checks.unwrap_or_else(|| verify::ALL_CHECKS.to_vec());
            if verify::run(n, &requested) {
                println!("all checks passed");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification FAILED");
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Resolves the `--s/--k/--n` triple into an explicit vector: `--s` wins,
/// `--k` with `--n` repeats, bare `--n` falls back to the default entry.
fn resolve_vector(
    s: Option<Vec<usize>>,
    k: Option<usize>,
    n: Option<usize>,
    default_entry: usize,
) -> Result<Vec<usize>, String> {
    match (s, k, n) {
        (Some(v), None, None) => Ok(v),
        (None, Some(k), Some(n)) => Ok(vec![k; n]),
        (None, None, Some(n)) => Ok(vec![default_entry; n]),
        (Some(_), _, _) => Err("--s cannot be combined with --k/--n".into()),
        (None, Some(_), None) => Err("--k needs --n".into()),
        (None, None, None) => Err("give --s, or --k with --n, or --n".into()),
    }
}

fn gen(family: Family, s: Option<Vec<usize>>, k: Option<usize>, n: Option<usize>) -> Result<(), String> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut emit = |line: String| {
        writeln!(out, "{line}").map_err(|e| format!("write failed: {e}"))
    };
    match family {
        Family::Rooks => {
            let weights = resolve_vector(s, k, n, 2)?;
            let shape = StaircaseShape::new(weights).map_err(|e| e.to_string())?;
            for r in gen_placements(&shape) {
                emit(wire::print_rook(&r))?;
            }
        }
        Family::Trees => {
            let arity = resolve_vector(s, k, n, 2)?;
            for t in gen_trees(&arity) {
                emit(wire::print_tree(&t))?;
            }
        }
        Family::Perms => {
            if s.is_some() || k.is_some() {
                return Err("perms takes only --n".into());
            }
            let m = n.ok_or("perms needs --n")?;
            for p in gen_perms(m) {
                emit(wire::print_perm(&p))?;
            }
        }
        Family::Stirling => {
            if k.is_some() || n.is_some() {
                return Err("stirling takes only --s".into());
            }
            let mult = s.ok_or("stirling needs --s")?;
            if mult.contains(&0) {
                return Err("stirling multiplicities must be positive".into());
            }
            for w in gen_stirling(&mult) {
                emit(wire::print_stirling(&w))?;
            }
        }
    }
    Ok(())
}

fn map(pair: MapPair, side: Side, last_arity: usize) -> Result<(), String> {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (index, line) in stdin.lock().lines().enumerate() {
        let line = line.map_err(|e| format!("read failed: {e}"))?;
        let lines = map_line(pair, &line, side, last_arity)
            .map_err(|e| format!("line {}: {e}", index + 1))?;
        for rendered in lines {
            writeln!(out, "{rendered}").map_err(|e| format!("write failed: {e}"))?;
        }
    }
    Ok(())
}

/// Maps one input line; `projected-to-fibre` expands to one line per
/// preimage, every other pair yields exactly one line.
fn map_line(
    pair: MapPair,
    line: &str,
    side: Side,
    last_arity: usize,
) -> Result<Vec<String>, String> {
    let one = |s: String| Ok(vec![s]);
    match pair {
        MapPair::RookToTree => {
            let r = wire::parse_rook(line).map_err(|e| e.to_string())?;
            one(wire::print_tree(&rook_to_tree(&r, last_arity)))
        }
        MapPair::TreeToRook => {
            let t = wire::parse_tree(line).map_err(|e| e.to_string())?;
            let r = tree_to_rook(&t).map_err(|e| e.to_string())?;
            one(wire::print_rook(&r))
        }
        MapPair::PermToTree => {
            let p = wire::parse_perm(line).map_err(|e| e.to_string())?;
            one(wire::print_tree(&perm_to_tree(&p)))
        }
        MapPair::TreeToPerm => {
            let t = wire::parse_tree(line).map_err(|e| e.to_string())?;
            let p = tree_to_perm(&t).map_err(|e| e.to_string())?;
            one(wire::print_perm(&p))
        }
        MapPair::RookToChain => {
            let r = wire::parse_rook(line).map_err(|e| e.to_string())?;
            let c = rook_to_chain(&r).map_err(|e| e.to_string())?;
            one(wire::print_chain(&c))
        }
        MapPair::ChainToRook => {
            let c = wire::parse_chain(line).map_err(|e| e.to_string())?;
            let r = chain_to_rook(&c).map_err(|e| e.to_string())?;
            one(wire::print_rook(&r))
        }
        MapPair::PermToChain => {
            let p = wire::parse_perm(line).map_err(|e| e.to_string())?;
            one(wire::print_chain(&perm_to_chain(&p)))
        }
        MapPair::ChainToPerm => {
            let c = wire::parse_chain(line).map_err(|e| e.to_string())?;
            one(wire::print_perm(&chain_to_perm(&c)))
        }
        MapPair::RookToDyck => {
            let r = wire::parse_rook(line).map_err(|e| e.to_string())?;
            let w = dyck_word_of(&r).map_err(|e| e.to_string())?;
            one(wire::print_dyck(&w))
        }
        MapPair::PermToProfile => {
            let p = wire::parse_perm(line).map_err(|e| e.to_string())?;
            let w = profile(&p).map_err(|e| e.to_string())?;
            one(wire::print_dyck(&w))
        }
        MapPair::RookToProjected => {
            let r = wire::parse_rook(line).map_err(|e| e.to_string())?;
            let s = project(&r).map_err(|e| e.to_string())?;
            one(wire::print_projected(&s))
        }
        MapPair::ProjectedToRook => {
            let s = wire::parse_projected(line).map_err(|e| e.to_string())?;
            let r = lift(&s, side).map_err(|e| e.to_string())?;
            one(wire::print_rook(&r))
        }
        MapPair::ProjectedToFibre => {
            let s = wire::parse_projected(line).map_err(|e| e.to_string())?;
            let all = fibre(&s).map_err(|e| e.to_string())?;
            Ok(all.iter().map(wire::print_rook).collect())
        }
    }
}
