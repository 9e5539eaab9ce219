//! Dyck words and chains of Dyck words.
//!
//! A Dyck word of size `n` has `n` up steps and `n` down steps, with every
//! prefix carrying at least as many ups as downs. Words of consecutive
//! sizes are compared by the ribbon relation: `D` is covered by `E` when
//! `E` arises from `D · DD` by turning exactly one down step other than
//! the last into an up step. A chain is a sequence `D_1, D_2, ...` of
//! words of sizes `1, 2, ...` in which each word covers the previous one.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// One step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A validated Dyck word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DyckWord {
    steps: Vec<Step>,
}

/// Balance check: equal step counts and no prefix dipping below zero.
pub fn is_dyck(steps: &[Step]) -> bool {
    balance_error(steps).is_ok()
}

fn balance_error(steps: &[Step]) -> Result<()> {
    let mut height = 0isize;
    for (i, &step) in steps.iter().enumerate() {
        match step {
            Step::Up => height += 1,
            Step::Down => height -= 1,
        }
        if height < 0 {
            return Err(Error::NegativePrefix { position: i + 1 });
        }
    }
    if height != 0 {
        let ups = steps.iter().filter(|&&s| s == Step::Up).count();
        return Err(Error::Unbalanced { ups, downs: steps.len() - ups });
    }
    Ok(())
}

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        balance_error(&steps)?;
        Ok(DyckWord { steps })
    }

    /// The smallest non-empty Dyck word, `UD`.
    pub fn unit() -> Self {
        DyckWord { steps: alloc::vec![Step::Up, Step::Down] }
    }

    /// Half the length.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                'U' => steps.push(Step::Up),
                'D' => steps.push(Step::Down),
                _ => return Err(Error::NegativePrefix { position: i + 1 }),
            }
        }
        DyckWord::new(steps)
    }
}

/// Position (1-based) of the unique step at which `big` differs from
/// `small · DD`, provided the difference is a single D-to-U flip that is
/// not the final step. This is exactly the ribbon condition.
pub fn flip_position(small: &DyckWord, big: &DyckWord) -> Result<usize> {
    if big.size() != small.size() + 1 {
        return Err(Error::SizeMismatch { small: small.size(), big: big.size() });
    }
    let extended: Vec<Step> = small
        .steps
        .iter()
        .copied()
        .chain([Step::Down, Step::Down])
        .collect();
    let mut flip = None;
    for (i, (&a, &b)) in extended.iter().zip(big.steps.iter()).enumerate() {
        if a != b {
            if flip.is_some() || a != Step::Down {
                return Err(Error::NotCover { index: 0 });
            }
            flip = Some(i + 1);
        }
    }
    match flip {
        Some(pos) if pos < extended.len() => Ok(pos),
        _ => Err(Error::NotCover { index: 0 }),
    }
}

/// Ribbon covering test between words of consecutive sizes. Errs when the
/// sizes do not differ by exactly one.
pub fn covers(small: &DyckWord, big: &DyckWord) -> Result<bool> {
    match flip_position(small, big) {
        Ok(_) => Ok(true),
        Err(Error::SizeMismatch { small, big }) => Err(Error::SizeMismatch { small, big }),
        Err(_) => Ok(false),
    }
}

/// All words covering `word`: one for each down step of `word · DD` other
/// than the last, so a word of size `n` has exactly `n + 1` successors.
pub fn successors(word: &DyckWord) -> Vec<DyckWord> {
    let extended: Vec<Step> = word
        .steps
        .iter()
        .copied()
        .chain([Step::Down, Step::Down])
        .collect();
    let mut out = Vec::new();
    for i in 0..extended.len() - 1 {
        if extended[i] == Step::Down {
            let mut steps = extended.clone();
            steps[i] = Step::Up;
            out.push(DyckWord::new(steps).expect("flipping a non-final down step keeps the word Dyck"));
        }
    }
    out
}

/// A sequence `D_1, ..., D_m` with `size(D_i) = i` and each `D_i` covered
/// by `D_{i+1}`. The empty chain is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckChain {
    words: Vec<DyckWord>,
}

impl DyckChain {
    pub fn new(words: Vec<DyckWord>) -> Result<Self> {
        for (i, word) in words.iter().enumerate() {
            if word.size() != i + 1 {
                return Err(Error::ChainSizeAt { index: i, size: word.size() });
            }
        }
        for i in 0..words.len().saturating_sub(1) {
            if !covers(&words[i], &words[i + 1])? {
                return Err(Error::NotCover { index: i });
            }
        }
        Ok(DyckChain { words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[DyckWord] {
        &self.words
    }

    /// The largest word, i.e. the shape the chain ends at.
    pub fn last(&self) -> &DyckWord {
        self.words.last().expect("chain is non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn dyck_recognition() {
        assert!(is_dyck(w("UUUDUUDUDDDD").steps()));
        assert!(is_dyck(w("UD").steps()));
        assert!(is_dyck(&[]));
        assert_eq!(
            "UDDU".parse::<DyckWord>().unwrap_err(),
            Error::NegativePrefix { position: 3 }
        );
        assert_eq!(
            "UUD".parse::<DyckWord>().unwrap_err(),
            Error::Unbalanced { ups: 2, downs: 1 }
        );
        // UDUD is a Dyck word even though an inner prefix touches zero.
        assert!(is_dyck(w("UDUD").steps()));
    }

    #[test]
    fn display_round_trip() {
        let word = w("UUDUDD");
        assert_eq!(word.to_string(), "UUDUDD");
        assert_eq!(word.size(), 3);
    }

    #[test]
    fn covering_examples() {
        // The last ribbon step of the running example's chain.
        assert!(covers(&w("UUUDUUDDDD"), &w("UUUDUUDUDDDD")).unwrap());
        assert!(covers(&w("UD"), &w("UDUD")).unwrap());
        assert!(covers(&w("UD"), &w("UUDD")).unwrap());
        // Two flips away is not a cover.
        assert!(!covers(&w("UDUD"), &w("UUDDUD")).unwrap());
        assert_eq!(
            covers(&w("UD"), &w("UDUDUD")).unwrap_err(),
            Error::SizeMismatch { small: 1, big: 3 }
        );
    }

    #[test]
    fn flip_positions() {
        assert_eq!(flip_position(&w("UD"), &w("UDUD")).unwrap(), 3);
        assert_eq!(flip_position(&w("UD"), &w("UUDD")).unwrap(), 2);
        assert_eq!(
            flip_position(&w("UDUDUUDD"), &w("UUUDUUDDDD")).unwrap(),
            2
        );
        assert!(flip_position(&w("UUDD"), &w("UDUDUD")).is_err());
    }

    #[test]
    fn successor_counts() {
        assert_eq!(successors(&w("UD")).len(), 2);
        let d = w("UUDUUDUDDD");
        let succ = successors(&d);
        assert_eq!(succ.len(), d.size() + 1);
        for e in &succ {
            assert!(covers(&d, e).unwrap());
        }
        // The empty word has exactly one successor, UD.
        let empty = DyckWord::new(vec![]).unwrap();
        assert_eq!(successors(&empty), vec![DyckWord::unit()]);
    }

    #[test]
    fn chain_validation() {
        let words: Vec<DyckWord> =
            ["UD", "UDUD", "UDUDUD", "UDUDUUDD", "UUUDUUDDDD", "UUUDUUDUDDDD"]
                .iter()
                .map(|s| w(s))
                .collect();
        let chain = DyckChain::new(words).unwrap();
        assert_eq!(chain.len(), 6);
        assert_eq!(chain.last().to_string(), "UUUDUUDUDDDD");

        assert!(DyckChain::new(vec![w("UD")]).is_ok());
        assert!(DyckChain::new(vec![]).is_ok());
        assert_eq!(
            DyckChain::new(vec![w("UUDD")]).unwrap_err(),
            Error::ChainSizeAt { index: 0, size: 2 }
        );
        assert_eq!(
            DyckChain::new(vec![w("UD"), w("UUDDUD")]).unwrap_err(),
            Error::ChainSizeAt { index: 1, size: 3 }
        );
    }
}
