//! The lexicographically least and greatest infinite fb words.
//!
//! Both are fixed points: the least word ℓ satisfies ℓ = 0·φ²(ℓ) and the
//! greatest word m satisfies m = 1·φ²(m), and they determine each other via
//! ℓ = φ(m) and m = 1·φ(ℓ). Prefixes are computed by iterating the
//! fixed-point map from the one-letter seed; every iterate is a prefix of
//! the next, and lengths at least double per round, so any requested prefix
//! stabilizes after a few iterations.

use crate::morphism::{phi, phi_pow};
use crate::word::BinaryWord;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalKind {
    Least,
    Greatest,
}

impl ExtremalKind {
    fn seed(self) -> BinaryWord {
        let letter = match self {
            ExtremalKind::Least => 0,
            ExtremalKind::Greatest => 1,
        };
        BinaryWord::from_letters_unchecked(vec![letter])
    }
}

/// The length-`n` prefix of the extremal word of the given kind.
pub fn extremal_prefix(kind: ExtremalKind, n: usize) -> BinaryWord {
    let seed = kind.seed();
    let mut cur = seed.clone();
    while cur.len() < n {
        cur = seed.concat(&phi_pow(&cur, 2));
    }
    cur.prefix(n)
}

/// One verified relation between the extremal words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub pass: bool,
}

/// Outcome of [`check_relations`].
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verifies, on length-`n` prefixes (`n ≥ 2`), that the two extremal words
/// determine each other and satisfy their fixed-point equations: φ(greatest)
/// agrees with the least word, 1·φ(least) with the greatest, and each word
/// with its own seed·φ² image, always compared on the common length.
pub fn check_relations(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::PrefixTooShort(n, 2));
    }
    let least = extremal_prefix(ExtremalKind::Least, n);
    let greatest = extremal_prefix(ExtremalKind::Greatest, n);
    let one = BinaryWord::from_letters_unchecked(vec![1]);
    let zero = BinaryWord::from_letters_unchecked(vec![0]);

    let mut checks = Vec::new();
    let mut push = |name: &'static str, image: BinaryWord, kind: ExtremalKind| {
        let expected = extremal_prefix(kind, image.len());
        checks.push(RelationCheck {
            name,
            pass: image == expected,
        });
    };

    push("least = phi(greatest)", phi(&greatest), ExtremalKind::Least);
    push(
        "greatest = 1 phi(least)",
        one.concat(&phi(&least)),
        ExtremalKind::Greatest,
    );
    push(
        "least = 0 phi^2(least)",
        zero.concat(&phi_pow(&least, 2)),
        ExtremalKind::Least,
    );
    push(
        "greatest = 1 phi^2(greatest)",
        one.concat(&phi_pow(&greatest, 2)),
        ExtremalKind::Greatest,
    );
    Ok(RelationReport { checks })
}
