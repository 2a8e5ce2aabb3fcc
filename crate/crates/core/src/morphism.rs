//! The Fibonacci morphism `0 ↦ 01, 1 ↦ 0`, its iterates and fixed point,
//! the finite Fibonacci words `F_n`, and the inverse factorization
//! `w = a·φ(u)` with `a ∈ {ε, 1}`.

use crate::word::BinaryWord;
use crate::{Error, Result};

/// Homomorphic image under `0 ↦ 01, 1 ↦ 0`.
pub fn phi(w: &BinaryWord) -> BinaryWord {
    let mut letters = Vec::with_capacity(2 * w.len());
    for &letter in w.letters() {
        if letter == 0 {
            letters.extend_from_slice(&[0, 1]);
        } else {
            letters.push(0);
        }
    }
    BinaryWord::from_letters_unchecked(letters)
}

/// The k-fold iterate; `phi_pow(w, 0)` is `w` itself.
pub fn phi_pow(w: &BinaryWord, k: usize) -> BinaryWord {
    let mut out = w.clone();
    for _ in 0..k {
        out = phi(&out);
    }
    out
}

/// The finite Fibonacci word `F_n`: `F_0 = 0`, `F_1 = 01`,
/// `F_{n+2} = F_{n+1} F_n`. Its length is the (n+2)-nd Fibonacci number.
pub fn fib_word(n: usize) -> BinaryWord {
    let mut prev = BinaryWord::from_letters_unchecked(vec![0]);
    if n == 0 {
        return prev;
    }
    let mut cur = BinaryWord::from_letters_unchecked(vec![0, 1]);
    for _ in 2..=n {
        let next = cur.concat(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The length-`n` prefix of the infinite Fibonacci word, produced by
/// iterating the morphism on `0` until enough letters are fixed (never by
/// table lookup).
pub fn fibonacci_prefix(n: usize) -> BinaryWord {
    let mut cur = BinaryWord::from_letters_unchecked(vec![0]);
    while cur.len() < n {
        cur = phi(&cur);
    }
    cur.prefix(n)
}

/// The factorization `w = peeled · φ(preimage)` with `peeled ∈ {ε, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Either the empty word or the single letter 1.
    pub peeled: BinaryWord,
    pub preimage: BinaryWord,
}

impl Factorization {
    /// Reassembles `peeled · φ(preimage)`.
    pub fn reassemble(&self) -> BinaryWord {
        self.peeled.concat(&phi(&self.preimage))
    }
}

/// Inverts the morphism on an 11-free word: peels an optional leading 1,
/// then decodes tokens left to right — `01` reads back as the letter 0, a
/// lone `0` (followed by 0 or end of word) as the letter 1.
pub fn phi_decode(w: &BinaryWord) -> Result<Factorization> {
    if let Some(position) = w.letters().windows(2).position(|pair| pair == [1, 1]) {
        return Err(Error::ContainsFactor11 { position });
    }
    let letters = w.letters();
    let (peeled, mut i) = if letters.first() == Some(&1) {
        (BinaryWord::from_letters_unchecked(vec![1]), 1)
    } else {
        (BinaryWord::empty(), 0)
    };
    let mut preimage = Vec::new();
    while i < letters.len() {
        // After the peel every remaining position starts a token with 0.
        debug_assert_eq!(letters[i], 0);
        if letters.get(i + 1) == Some(&1) {
            preimage.push(0);
            i += 2;
        } else {
            preimage.push(1);
            i += 1;
        }
    }
    Ok(Factorization {
        peeled,
        preimage: BinaryWord::from_letters_unchecked(preimage),
    })
}

/// Pulls the shortest prefix of `φ(u)` ending in `F_{n+1}` back through the
/// morphism: the result is the prefix `q` of `u` with `φ(q)` equal to that
/// prefix, and `q` ends in `F_n`. Requires `n ≥ 2`; returns `None` when
/// `φ(u)` has no prefix ending in `F_{n+1}`.
///
/// On fb input the pullback always exists. Words that are not fb can place
/// the occurrence so that the prefix ends inside a φ-token (`u = 01000`
/// with `n = 3` has `φ(u) = 010010101`, whose F_4 prefix splits the final
/// 01 token); that case reports [`Error::PullbackMisaligned`].
pub fn pullback_prefix(u: &BinaryWord, n: usize) -> Result<Option<BinaryWord>> {
    if n < 2 {
        return Err(Error::StageTooSmall(n));
    }
    let image = phi(u);
    let target = fib_word(n + 1);
    let Some(pos) = image.find_factor(&target) else {
        return Ok(None);
    };
    let prefix_len = pos + target.len();
    // Walk u accumulating image lengths until the prefix boundary is hit.
    let mut image_len = 0usize;
    for (taken, &letter) in u.letters().iter().enumerate() {
        if image_len == prefix_len {
            return Ok(Some(u.prefix(taken)));
        }
        image_len += if letter == 0 { 2 } else { 1 };
    }
    if image_len == prefix_len {
        return Ok(Some(u.clone()));
    }
    Err(Error::PullbackMisaligned(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn phi_base_cases() {
        assert_eq!(phi(&w("0")), w("01"));
        assert_eq!(phi(&w("")), w(""));
        assert_eq!(phi(&w("010")), w("01001"));
    }

    #[test]
    fn phi_pow_cases() {
        assert_eq!(phi_pow(&w("0"), 2), w("010"));
        assert_eq!(phi_pow(&w("1"), 2), w("01"));
        assert_eq!(phi_pow(&w("0"), 0), w("0"));
        // φⁿ(0) = F_n; the recurrence is the oracle.
        assert_eq!(phi_pow(&w("0"), 5), fib_word(5));
        assert_eq!(phi_pow(&w("0"), 5), w("0100101001001"));
        assert_eq!(phi_pow(&w("0"), 4), w("01001010"));
    }

    #[test]
    fn fib_word_cases() {
        assert_eq!(fib_word(0), w("0"));
        assert_eq!(fib_word(1), w("01"));
        assert_eq!(fib_word(3), w("01001"));
        // |F_n| is the (n+2)-nd Fibonacci number: 1, 2, 3, 5, 8, ...
        let fib = [1usize, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        for n in 0..10 {
            assert_eq!(fib_word(n).len(), fib[n + 1]);
        }
    }

    #[test]
    fn fibonacci_prefix_cases() {
        assert_eq!(fibonacci_prefix(5), w("01001"));
        assert_eq!(fibonacci_prefix(0), w(""));
        assert_eq!(
            fibonacci_prefix(34),
            w("0100101001001010010100100101001001")
        );
    }

    #[test]
    fn decode_round_trips() {
        let f = phi_decode(&w("01001")).unwrap();
        assert_eq!(f.peeled, w(""));
        assert_eq!(f.preimage, w("010"));

        let f = phi_decode(&w("1010")).unwrap();
        assert_eq!(f.peeled, w("1"));
        assert_eq!(f.preimage, w("01"));

        assert!(matches!(
            phi_decode(&w("11")),
            Err(Error::ContainsFactor11 { position: 0 })
        ));
    }

    #[test]
    fn decode_edge_cases() {
        // Trailing lone 0 decodes as the letter 1.
        let f = phi_decode(&w("0")).unwrap();
        assert_eq!(f.preimage, w("1"));
        let f = phi_decode(&w("1")).unwrap();
        assert_eq!((f.peeled, f.preimage), (w("1"), w("")));
        let f = phi_decode(&w("")).unwrap();
        assert_eq!((f.peeled, f.preimage), (w(""), w("")));
    }

    #[test]
    fn pullback_cases() {
        // φ(010) = 01001 ends in F_3, so the pullback is all of 010.
        assert_eq!(pullback_prefix(&w("010"), 2).unwrap(), Some(w("010")));
        assert!(matches!(
            pullback_prefix(&w("00"), 1),
            Err(Error::StageTooSmall(1))
        ));
        // Shortest prefix of φ(u) ending in F_3 pulls back to the shortest
        // prefix of u ending in F_2 (direct-search oracle: that prefix is 010).
        let u = fibonacci_prefix(13);
        assert_eq!(pullback_prefix(&u, 2).unwrap(), Some(w("010")));
        // No occurrence of F_5 inside φ(010).
        assert_eq!(pullback_prefix(&w("010"), 4).unwrap(), None);
    }

    #[test]
    fn pullback_misalignment_is_detected() {
        // 01000 is not fb; its image 010010101 starts with F_4 but the
        // prefix ends inside the final 01 token.
        assert!(matches!(
            pullback_prefix(&w("01000"), 3),
            Err(Error::PullbackMisaligned(4))
        ));
    }
}
