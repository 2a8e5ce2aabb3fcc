//! Binary-word primitives: violation search, fb membership, lexicographic
//! order, and Parikh vectors.
//!
//! A word is *fb* when it contains no factor `11` and no 4⁻-power, where a
//! 4⁻-power is a factor of period `p` and length `4p − 1` for some `p ≥ 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// An immutable finite word over {0, 1}.
///
/// Letters are stored as the byte values 0 and 1; the ASCII rendering
/// ('0'/'1' characters) is used by `Display`/`FromStr` and everywhere words
/// cross a process boundary.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Builds a word from raw letters, rejecting anything outside {0, 1}.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        for (position, &letter) in letters.iter().enumerate() {
            if letter > 1 {
                return Err(Error::InvalidLetter {
                    found: letter as char,
                    position,
                });
            }
        }
        Ok(BinaryWord(letters))
    }

    /// The `index`-th word of `{0,1}^len` in lexicographic order
    /// (most-significant bit first), for exhaustive sweeps.
    pub fn from_index(len: usize, index: u64) -> Self {
        debug_assert!(len < 64);
        let mut letters = Vec::with_capacity(len);
        for i in (0..len).rev() {
            letters.push(((index >> i) & 1) as u8);
        }
        BinaryWord(letters)
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l <= 1));
        BinaryWord(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at position `i` (0-based), as the value 0 or 1.
    pub fn letter(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        BinaryWord(letters)
    }

    /// The factor at `[start, end)`.
    pub fn factor(&self, start: usize, end: usize) -> BinaryWord {
        BinaryWord(self.0[start..end].to_vec())
    }

    /// The length-`n` prefix (the whole word if shorter).
    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord(self.0[..n.min(self.len())].to_vec())
    }

    pub fn starts_with(&self, prefix: &BinaryWord) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &BinaryWord) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// Position of the first occurrence of `needle` as a factor.
    pub fn find_factor(&self, needle: &BinaryWord) -> Option<usize> {
        if needle.is_empty() {
            return Some(0);
        }
        self.0
            .windows(needle.len())
            .position(|window| window == needle.letters())
    }

    /// Start positions of every occurrence of `needle`, in order.
    pub fn occurrences(&self, needle: &BinaryWord) -> Vec<usize> {
        if needle.is_empty() || needle.len() > self.len() {
            return Vec::new();
        }
        self.0
            .windows(needle.len())
            .enumerate()
            .filter(|(_, window)| *window == needle.letters())
            .map(|(i, _)| i)
            .collect()
    }

    /// Parikh vector: the pair (number of 0s, number of 1s).
    pub fn parikh(&self) -> ParikhVector {
        let ones = self.0.iter().map(|&l| l as usize).sum::<usize>();
        ParikhVector {
            zeros: self.len() - ones,
            ones,
        }
    }

    /// True iff the whole word is a 4⁻-power: `|w| = 4p − 1` for some `p ≥ 1`
    /// and `w` has period `p`. "Has period p" is the plain condition
    /// `w[i] = w[i+p]`, not a smallest-period computation.
    pub fn is_four_minus_power(&self) -> bool {
        let n = self.len();
        if n == 0 || !(n + 1).is_multiple_of(4) {
            return false;
        }
        let p = (n + 1) / 4;
        has_period(&self.0, p)
    }

    /// The leftmost violation of fb-ness, breaking ties by smallest period
    /// (a `11` occurrence counts as period 0). `None` means the word is fb.
    pub fn find_violation(&self) -> Option<Violation> {
        let w = &self.0;
        let n = w.len();
        let mut best: Option<Violation> = None;

        if let Some(start) = w.windows(2).position(|pair| pair == [1, 1]) {
            best = Some(Violation {
                kind: ViolationKind::Factor11,
                start,
                period: 0,
            });
        }

        // For each period p, the leftmost 4⁻-power of that period is the
        // leftmost run of 3p−1 consecutive positions t with w[t] = w[t+p].
        let max_period = (n + 1) / 4;
        for p in 1..=max_period {
            let needed = 3 * p - 1;
            let mut run = 0usize;
            for t in 0..n - p {
                if w[t] == w[t + p] {
                    run += 1;
                    if run >= needed {
                        let start = t + 1 - needed;
                        let candidate = Violation {
                            kind: ViolationKind::FourMinusPower,
                            start,
                            period: p,
                        };
                        if best
                            .as_ref()
                            .is_none_or(|b| (start, p) < (b.start, b.period))
                        {
                            best = Some(candidate);
                        }
                        break;
                    }
                } else {
                    run = 0;
                }
            }
        }
        best
    }

    /// fb membership: no factor `11` and no 4⁻-power factor.
    pub fn is_fb(&self) -> bool {
        self.find_violation().is_none()
    }
}

/// True iff `w[i] = w[i+p]` for every valid `i`.
pub(crate) fn has_period(w: &[u8], p: usize) -> bool {
    w.len() <= p || (0..w.len() - p).all(|i| w[i] == w[i + p])
}

/// Strict lexicographic order: proper prefixes are smaller, otherwise the
/// first differing letter decides.
pub fn lex_less(u: &BinaryWord, v: &BinaryWord) -> bool {
    for (a, b) in u.letters().iter().zip(v.letters()) {
        if a != b {
            return a < b;
        }
    }
    u.len() < v.len()
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in &self.0 {
            write!(f, "{}", letter)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => letters.push(0),
                '1' => letters.push(1),
                found => return Err(Error::InvalidLetter { found, position }),
            }
        }
        Ok(BinaryWord(letters))
    }
}

/// Letter counts `(|w|_0, |w|_1)` with the componentwise partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParikhVector {
    pub zeros: usize,
    pub ones: usize,
}

impl ParikhVector {
    /// Componentwise ≤ (a partial order, not the derived lexicographic one).
    pub fn le(&self, other: &ParikhVector) -> bool {
        self.zeros <= other.zeros && self.ones <= other.ones
    }

    pub fn total(&self) -> usize {
        self.zeros + self.ones
    }
}

/// Witness of non-fb-ness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// 0-based start of the offending factor.
    pub start: usize,
    /// Period of the 4⁻-power; 0 for a `11` occurrence.
    pub period: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    #[serde(rename = "factor11")]
    Factor11,
    #[serde(rename = "four_minus_power")]
    FourMinusPower,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::Factor11 => write!(f, "factor 11 at {}", self.start),
            ViolationKind::FourMinusPower => {
                write!(f, "4⁻-power at {} with period {}", self.start, self.period)
            }
        }
    }
}
