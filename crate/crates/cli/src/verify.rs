//! The `verify` subcommand: invariant suites over exhaustively generated
//! instances, sized by the `--n` bound.
//!
//! Every suite prints exactly one line, `NAME: ok (...)` or
//! `NAME: FAIL (...)` with the first counterexample, in a fixed order, so
//! runs are reproducible byte for byte.

use std::collections::BTreeMap;

use rookery_core::bijections::{
    chain_to_perm, chain_to_rook, dyck_word_of, fibre, lift, perm_to_chain, perm_to_tree, profile,
    project, rook_to_chain, rook_to_tree, tree_to_perm, tree_to_rook,
};
use rookery_core::dyck::{covers, successors};
use rookery_core::enumeration::{
    check_diagram, check_identity, closed_count_placements, closed_count_trees, eulerian,
    factorial, gamma_counts, gen_dyck, gen_perms, gen_placements, gen_stirling, gen_trees, p_poly,
};
use rookery_core::poly::gamma_expand;
use rookery_core::{
    Alignment, BigInt, IntPolynomial, LetterClass, RookPlacement, Side, StaircaseShape,
};

use crate::wire;

/// The selectable suites, in their canonical run order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckName {
    Bijections,
    Chain,
    Diagram,
    Identity,
    Fibre,
    Counts,
    Gamma,
}

pub const ALL_CHECKS: [CheckName; 7] = [
    CheckName::Bijections,
    CheckName::Chain,
    CheckName::Diagram,
    CheckName::Identity,
    CheckName::Fibre,
    CheckName::Counts,
    CheckName::Gamma,
];

impl CheckName {
    fn label(self) -> &'static str {
        match self {
            CheckName::Bijections => "bijections",
            CheckName::Chain => "chain",
            CheckName::Diagram => "diagram",
            CheckName::Identity => "identity",
            CheckName::Fibre => "fibre",
            CheckName::Counts => "counts",
            CheckName::Gamma => "gamma",
        }
    }
}

/// Runs the requested suites with sizes bounded by `n`; returns `true`
/// when all pass. Output order follows `ALL_CHECKS` regardless of the
/// order the names were given in.
pub fn run(n: usize, requested: &[CheckName]) -> bool {
    let mut all_ok = true;
    for check in ALL_CHECKS {
        if !requested.contains(&check) {
            continue;
        }
        let outcome = match check {
            CheckName::Bijections => bijections(n),
            CheckName::Chain => chain(n),
            CheckName::Diagram => diagram(n),
            CheckName::Identity => identity(n),
            CheckName::Fibre => fibre_suite(n),
            CheckName::Counts => counts(n),
            CheckName::Gamma => gamma(n),
        };
        match outcome {
            Ok(detail) => println!("{}: ok ({detail})", check.label()),
            Err(detail) => {
                all_ok = false;
                println!("{}: FAIL ({detail})", check.label());
            }
        }
    }
    all_ok
}

type Outcome = Result<String, String>;

/// Tree round trips, the block/child correspondence, and the
/// permutation/tree correspondence, for every size up to the bound.
fn bijections(n: usize) -> Outcome {
    let mut cases = 0u64;
    for m in 0..=n {
        for r in gen_placements(&StaircaseShape::double(m)) {
            cases += 1;
            let tree = rook_to_tree(&r, 2);
            if tree_to_rook(&tree).ok().as_ref() != Some(&r) {
                return Err(format!("round trip broke placement `{}`", wire::print_rook(&r)));
            }
            for block in 1..=m {
                let content = r.block_content(block).expect("block in range");
                let slots: Vec<bool> =
                    content.slots().iter().map(|s| s.is_some()).collect();
                let children =
                    [tree.child(block, 1).is_some(), tree.child(block, 2).is_some()];
                if slots != children {
                    return Err(format!(
                        "block {block} of `{}` disagrees with its vertex",
                        wire::print_rook(&r)
                    ));
                }
            }
        }
        for tree in gen_trees(&vec![2; m + 1]) {
            cases += 1;
            let back = tree_to_rook(&tree).map(|r| rook_to_tree(&r, 2));
            if back.ok().as_ref() != Some(&tree) {
                return Err(format!("round trip broke tree `{}`", wire::print_tree(&tree)));
            }
        }
        for sigma in gen_perms(m + 1) {
            cases += 1;
            let tree = perm_to_tree(&sigma);
            if tree_to_perm(&tree).ok().as_ref() != Some(&sigma) {
                return Err(format!("round trip broke perm `{}`", wire::print_perm(&sigma)));
            }
            let classes = sigma.letter_classes();
            for letter in 1..=sigma.len() {
                let expected = match (tree.child(letter, 1).is_some(), tree.child(letter, 2).is_some())
                {
                    (true, true) => LetterClass::Valley,
                    (false, false) => LetterClass::Peak,
                    (true, false) => LetterClass::DoubleFall,
                    (false, true) => LetterClass::DoubleRise,
                };
                if classes[letter - 1] != expected {
                    return Err(format!(
                        "letter {letter} of `{}` disagrees with its vertex",
                        wire::print_perm(&sigma)
                    ));
                }
            }
        }
    }
    Ok(format!("sizes 0..={n}, {cases} cases"))
}

/// Chain round trips, the column-word identities, profile shrinking, and
/// the successor count of every Dyck word up to the bound.
fn chain(n: usize) -> Outcome {
    let mut cases = 0u64;
    for m in 0..=n {
        for r in gen_placements(&StaircaseShape::double(m)) {
            cases += 1;
            let chain = rook_to_chain(&r).expect("double staircase");
            if chain_to_rook(&chain).ok().as_ref() != Some(&r) {
                return Err(format!("chain round trip broke `{}`", wire::print_rook(&r)));
            }
            let word = dyck_word_of(&r).expect("double staircase");
            if &word != chain.last() {
                return Err(format!("column word of `{}` is not the chain end", wire::print_rook(&r)));
            }
        }
        for sigma in gen_perms(m + 1) {
            cases += 1;
            let chain = perm_to_chain(&sigma);
            if chain_to_perm(&chain) != sigma {
                return Err(format!("chain round trip broke perm `{}`", wire::print_perm(&sigma)));
            }
            if sigma.len() >= 2 {
                let shrunk = sigma.delete_max().expect("non-empty");
                let small = profile(&shrunk).expect("non-empty");
                let big = profile(&sigma).expect("non-empty");
                if !rookery_core::dyck::covers(&small, &big).expect("consecutive sizes") {
                    return Err(format!(
                        "profile of `{}` does not cover its deletion",
                        wire::print_perm(&sigma)
                    ));
                }
            }
        }
        for word in gen_dyck(m) {
            cases += 1;
            let mut next = successors(&word);
            next.sort();
            next.dedup();
            if next.len() != m + 1 || next.iter().any(|e| !covers(&word, e).unwrap_or(false)) {
                return Err(format!("`{word}` must have exactly {} successors", m + 1));
            }
        }
    }
    Ok(format!("sizes 0..={n}, {cases} cases"))
}

fn diagram(n: usize) -> Outcome {
    let mut cases = 0u64;
    for m in 0..=n {
        let report = check_diagram(m);
        cases += report.cases;
        if !report.pass {
            let sigma = report.counterexample.expect("failing case recorded");
            return Err(format!("n={m}, counterexample perm `{}`", wire::print_perm(&sigma)));
        }
    }
    Ok(format!("sizes 0..={n}, {cases} permutations"))
}

fn identity(n: usize) -> Outcome {
    for m in 0..=n {
        let report = check_identity(m);
        if !report.pass {
            return Err(format!("n={m}: {} != {}", report.lhs, report.rhs));
        }
    }
    Ok(format!("sizes 0..={n}, exact coefficient equality"))
}

/// Projection image, fibre sizes, the fibre sum, and aligned-lift
/// uniqueness, exhaustively per size.
fn fibre_suite(n: usize) -> Outcome {
    for m in 0..=n {
        let mut image: BTreeMap<_, Vec<RookPlacement>> = BTreeMap::new();
        let mut total = 0u64;
        for r in gen_placements(&StaircaseShape::double(m)) {
            total += 1;
            let s = project(&r).map_err(|e| format!("projection failed: {e}"))?;
            if s.blocks().iter().any(|b| b.size > 2) {
                return Err(format!("wide block in image of `{}`", wire::print_rook(&r)));
            }
            image.entry(s).or_default().push(r);
        }
        let mut sum = BigInt::from(0);
        for (s, preimages) in &image {
            let expected = 1u64 << s.bso();
            sum += expected;
            let mut fib = fibre(s).map_err(|e| format!("fibre failed: {e}"))?;
            fib.sort();
            let mut listed = preimages.clone();
            listed.sort();
            if fib != listed {
                return Err(format!("fibre of `{}` mismatches", wire::print_projected(s)));
            }
            let left = lift(s, Side::Left).map_err(|e| format!("left lift failed: {e}"))?;
            let right = lift(s, Side::Right).map_err(|e| format!("right lift failed: {e}"))?;
            let lefties: Vec<_> = preimages
                .iter()
                .filter(|r| matches!(r.alignment(), Alignment::Left | Alignment::Both))
                .collect();
            let righties: Vec<_> = preimages
                .iter()
                .filter(|r| matches!(r.alignment(), Alignment::Right | Alignment::Both))
                .collect();
            if lefties != vec![&left] || righties != vec![&right] {
                return Err(format!(
                    "aligned lifts of `{}` are not unique",
                    wire::print_projected(s)
                ));
            }
        }
        if sum != BigInt::from(total) {
            return Err(format!("n={m}: fibre sizes sum to {sum}, expected {total}"));
        }
    }
    Ok(format!("sizes 0..={n}, images and fibres exhaustive"))
}

/// Stream cardinalities against the closed-form counts.
fn counts(n: usize) -> Outcome {
    let mut cases = 0u64;
    for m in 0..=n {
        let shape = StaircaseShape::double(m);
        let generated = gen_placements(&shape).count();
        if BigInt::from(generated) != factorial(m + 1)
            || closed_count_placements(&shape) != factorial(m + 1)
        {
            return Err(format!("2-staircase with {m} rows: {generated} placements"));
        }
        let arity = vec![2usize; m + 1];
        let trees = gen_trees(&arity).count();
        if BigInt::from(trees) != factorial(m + 1) {
            return Err(format!("binary trees on {} vertices: {trees}", m + 1));
        }
        cases += 2;
    }
    for k in 1..=4 {
        for m in 0..=n.min(4) {
            let shape = StaircaseShape::k_tuple(k, m).expect("positive k");
            let generated = gen_placements(&shape).count();
            if BigInt::from(generated) != closed_count_placements(&shape) {
                return Err(format!("{k}-staircase with {m} rows: {generated} placements"));
            }
            cases += 1;
        }
    }
    for s in compositions_up_to(n.saturating_add(1).min(7)) {
        let bumped: Vec<usize> = s.iter().map(|&x| x + 1).collect();
        let words = gen_stirling(&s).count();
        let trees = gen_trees(&bumped).count();
        if words != trees || BigInt::from(trees) != closed_count_trees(&bumped) {
            return Err(format!("multiset {s:?}: {words} words vs {trees} trees"));
        }
        cases += 1;
    }
    Ok(format!("sizes 0..={n}, {cases} counting identities"))
}

/// Gamma vectors four ways: basis expansion of the descent polynomial,
/// aligned-placement coefficients, and the letter-class counts on both
/// sides.
fn gamma(n: usize) -> Outcome {
    for m in 0..=n {
        let expanded = gamma_expand(&eulerian(m + 1), m)
            .map_err(|e| format!("n={m}: {e}"))?;
        let p = p_poly(m, Side::Left);
        let from_p = gamma_vector_of_p(&p, m).ok_or_else(|| format!("n={m}: odd coefficient in {p}"))?;
        let left = gamma_counts(m, Side::Left);
        let right = gamma_counts(m, Side::Right);
        if expanded.entries() != from_p || expanded.entries() != left || left != right {
            return Err(format!("n={m}: gamma routes disagree"));
        }
    }
    Ok(format!("sizes 0..={n}, four routes agree"))
}

/// Reads the aligned-placement polynomial as a gamma vector: entry `k`
/// is the coefficient of `x^(n-2k)`. Returns `None` when an off-parity
/// coefficient is present.
pub fn gamma_vector_of_p(p: &IntPolynomial, n: usize) -> Option<Vec<BigInt>> {
    for d in 0..=n {
        if (n - d) % 2 == 1 && !p.coeff(d).eq(&BigInt::from(0)) {
            return None;
        }
    }
    Some((0..=n / 2).map(|k| p.coeff(n - 2 * k)).collect())
}

/// All weight vectors with positive parts and total at most `bound`.
pub fn compositions_up_to(bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while let Some(prefix) = frontier.pop() {
        let used: usize = prefix.iter().sum();
        for part in 1..=bound - used {
            let mut next = prefix.clone();
            next.push(part);
            out.push(next.clone());
            frontier.push(next);
        }
    }
    out.sort();
    out
}
