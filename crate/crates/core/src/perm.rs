//! Permutations, their letter classification, and Stirling multiset words.
//!
//! A letter `i` of a permutation is judged against its two word
//! neighbours, with a 0 sentinel at both ends: it is a valley when both
//! neighbours are larger, a peak when both are smaller, a double rise
//! when it sits inside an ascending run and a double fall inside a
//! descending one. Descents and ascents, by contrast, are counted at
//! positions; both statistics are provided.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A permutation of `1..=m` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// The four classes a letter can fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterClass {
    Valley,
    DoubleFall,
    DoubleRise,
    Peak,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = alloc::vec![false; m + 1];
        for &v in &word {
            if v == 0 || v > m || seen[v] {
                return Err(Error::NotPermutation { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { word: (1..=m).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Position (1-based) of the given letter.
    pub fn position_of(&self, letter: usize) -> Result<usize> {
        if letter == 0 || letter > self.len() {
            return Err(Error::LetterOutOfRange { letter, len: self.len() });
        }
        Ok(self.word.iter().position(|&v| v == letter).expect("validated word") + 1)
    }

    /// Classifies the letter `i` against its word neighbours under the
    /// 0 sentinels.
    pub fn classify_letter(&self, letter: usize) -> Result<LetterClass> {
        let p = self.position_of(letter)?;
        let left = if p == 1 { 0 } else { self.word[p - 2] };
        let right = if p == self.len() { 0 } else { self.word[p] };
        Ok(match (left > letter, letter > right) {
            (true, false) => LetterClass::Valley,
            (true, true) => LetterClass::DoubleFall,
            (false, false) => LetterClass::DoubleRise,
            (false, true) => LetterClass::Peak,
        })
    }

    /// Classes of all letters at once; entry `i - 1` is the class of
    /// letter `i`.
    pub fn letter_classes(&self) -> Vec<LetterClass> {
        let mut classes = alloc::vec![LetterClass::Peak; self.len()];
        for p in 1..=self.len() {
            let letter = self.word[p - 1];
            let left = if p == 1 { 0 } else { self.word[p - 2] };
            let right = if p == self.len() { 0 } else { self.word[p] };
            classes[letter - 1] = match (left > letter, letter > right) {
                (true, false) => LetterClass::Valley,
                (true, true) => LetterClass::DoubleFall,
                (false, false) => LetterClass::DoubleRise,
                (false, true) => LetterClass::Peak,
            };
        }
        classes
    }

    /// Positional statistics: the number of indices `i` with
    /// `word[i] > word[i+1]` (descents) and with `word[i] < word[i+1]`
    /// (ascents). They sum to `m - 1`.
    pub fn position_stats(&self) -> (usize, usize) {
        let des = self.word.windows(2).filter(|w| w[0] > w[1]).count();
        (des, self.len().saturating_sub(1) - des)
    }

    /// The permutation of `1..=m-1` obtained by deleting the largest
    /// letter.
    pub fn delete_max(&self) -> Result<Permutation> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let m = self.len();
        let word = self.word.iter().copied().filter(|&v| v != m).collect();
        Ok(Permutation { word })
    }

    /// Inserts the letter `m + 1` just before (or after) the letter
    /// `target`, yielding a permutation of `1..=m+1`.
    pub fn insert_max(&self, target: usize, after: bool) -> Result<Permutation> {
        let p = self.position_of(target)?;
        let mut word = self.word.clone();
        word.insert(if after { p } else { p - 1 }, self.len() + 1);
        Ok(Permutation { word })
    }
}

/// A word on the multiset `{1^{s_1}, ..., n^{s_n}}` avoiding 2-1-2:
/// between any two equal letters every letter is larger.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StirlingWord {
    multiplicities: Vec<usize>,
    word: Vec<usize>,
}

/// True when no smaller letter sits between two equal ones.
pub fn is_stirling(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut first = alloc::vec![usize::MAX; max + 1];
    let mut last = alloc::vec![0usize; max + 1];
    for (p, &v) in word.iter().enumerate() {
        if first[v] == usize::MAX {
            first[v] = p;
        }
        last[v] = p;
    }
    for v in 1..=max {
        if first[v] == usize::MAX {
            continue;
        }
        for p in first[v] + 1..last[v] {
            if word[p] < v {
                return false;
            }
        }
    }
    true
}

impl StirlingWord {
    pub fn new(multiplicities: Vec<usize>, word: Vec<usize>) -> Result<Self> {
        let n = multiplicities.len();
        if let Some(i) = multiplicities.iter().position(|&s| s == 0) {
            return Err(Error::NonPositiveMultiplicity { value: i + 1 });
        }
        let mut counts = alloc::vec![0usize; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::LetterOutOfRange { letter: v, len: n });
            }
            counts[v] += 1;
        }
        for v in 1..=n {
            if counts[v] != multiplicities[v - 1] {
                return Err(Error::WrongMultiplicity {
                    value: v,
                    expected: multiplicities[v - 1],
                    got: counts[v],
                });
            }
        }
        if !is_stirling(&word) {
            return Err(Error::NotStirling);
        }
        Ok(StirlingWord { multiplicities, word })
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use LetterClass::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn classify_running_example() {
        let sigma = perm(&[5, 1, 2, 6, 4, 3]);
        let expected = [Valley, DoubleRise, DoubleFall, DoubleFall, Peak, Peak];
        for (i, &class) in expected.iter().enumerate() {
            assert_eq!(sigma.classify_letter(i + 1).unwrap(), class);
        }
        assert_eq!(sigma.letter_classes(), expected);
        assert!(sigma.classify_letter(7).is_err());
        assert!(sigma.classify_letter(0).is_err());
    }

    #[test]
    fn classify_small_cases() {
        assert_eq!(perm(&[1]).classify_letter(1).unwrap(), Peak);
        assert_eq!(perm(&[3, 2, 1]).letter_classes(), [DoubleFall, DoubleFall, Peak]);
        assert_eq!(perm(&[2, 1]).letter_classes(), [DoubleFall, Peak]);
        assert_eq!(perm(&[1, 2]).letter_classes(), [DoubleRise, Peak]);
    }

    #[test]
    fn peaks_exceed_valleys_by_one() {
        // Exhaustive census at a small size; the full sweep lives in the
        // integration suite.
        let mut word = vec![1, 2, 3, 4, 5];
        loop {
            let sigma = perm(&word);
            let classes = sigma.letter_classes();
            let peaks = classes.iter().filter(|&&c| c == Peak).count();
            let valleys = classes.iter().filter(|&&c| c == Valley).count();
            assert_eq!(peaks, valleys + 1);
            if !crate::enumeration::next_permutation(&mut word) {
                break;
            }
        }
    }

    #[test]
    fn position_stats_examples() {
        assert_eq!(perm(&[5, 1, 2, 6, 4, 3]).position_stats(), (3, 2));
        assert_eq!(Permutation::identity(6).position_stats(), (0, 5));
        assert_eq!(perm(&[3, 2, 1]).position_stats(), (2, 0));
        assert_eq!(Permutation::identity(0).position_stats(), (0, 0));
    }

    #[test]
    fn delete_max_examples() {
        let sigma = perm(&[5, 1, 2, 6, 4, 3]);
        let mut current = sigma;
        let mut words = Vec::new();
        loop {
            words.push(current.word().to_vec());
            if current.is_empty() {
                break;
            }
            current = current.delete_max().unwrap();
        }
        assert_eq!(
            words,
            vec![
                vec![5, 1, 2, 6, 4, 3],
                vec![5, 1, 2, 4, 3],
                vec![1, 2, 4, 3],
                vec![1, 2, 3],
                vec![1, 2],
                vec![1],
                vec![],
            ]
        );
        assert!(Permutation::identity(0).delete_max().is_err());
    }

    #[test]
    fn insert_max_positions() {
        let tau = perm(&[1]);
        assert_eq!(tau.insert_max(1, true).unwrap().word(), &[1, 2]);
        assert_eq!(tau.insert_max(1, false).unwrap().word(), &[2, 1]);
        let tau = perm(&[1, 2, 4, 3]);
        assert_eq!(tau.insert_max(1, false).unwrap().word(), &[5, 1, 2, 4, 3]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
    }

    #[test]
    fn stirling_recognition() {
        assert!(is_stirling(&[1, 1, 2, 2]));
        assert!(is_stirling(&[1, 2, 2, 1]));
        assert!(is_stirling(&[2, 2, 1, 1]));
        assert!(!is_stirling(&[1, 2, 1, 2]));
        assert!(!is_stirling(&[2, 1, 1, 2]));
        assert!(!is_stirling(&[2, 1, 2, 1]));
        assert!(is_stirling(&[]));
    }

    #[test]
    fn stirling_word_validation() {
        assert!(StirlingWord::new(vec![2, 2], vec![1, 2, 2, 1]).is_ok());
        assert_eq!(
            StirlingWord::new(vec![2, 2], vec![1, 2, 1, 2]).unwrap_err(),
            Error::NotStirling
        );
        assert_eq!(
            StirlingWord::new(vec![2, 2], vec![1, 1, 1, 2]).unwrap_err(),
            Error::WrongMultiplicity { value: 1, expected: 2, got: 3 }
        );
    }
}
