//! Independent brute-force machinery: exhaustive fb enumeration and
//! counting, a naive double-loop violation scan, bounded extendability, and
//! greedy extremal search. Everything here is ground truth for the rest of
//! the crate, so the code favors the obviously-correct formulation over the
//! clever one.

use crate::exec::maybe_parallel;
use crate::extremal::ExtremalKind;
use crate::word::{BinaryWord, Violation, ViolationKind};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Cap for [`enumerate_fb`] and [`count_fb`].
pub const ENUMERATION_CAP: usize = 22;

/// Cap on `|w| + lookahead` for [`is_extendable`] and [`brute_extremal`];
/// larger than [`ENUMERATION_CAP`] because extension searches only walk the
/// (polynomially thin) fb tree.
pub const EXTENSION_CAP: usize = 80;

/// Prefix length used to shard parallel enumeration.
const SHARD_LEN: usize = 10;

/// True iff appending `letter` to the fb word in `prefix` keeps it fb.
/// Only factors ending at the appended letter can create a violation, so the
/// scan is restricted to suffixes: `11`, then each period `p` with
/// `4p − 1 ≤ len`.
fn extension_ok(prefix: &[u8], letter: u8) -> bool {
    let len = prefix.len() + 1;
    if letter == 1 && prefix.last() == Some(&1) {
        return false;
    }
    let at = |i: usize| if i + 1 == len { letter } else { prefix[i] };
    for p in 1..=(len + 1) / 4 {
        let start = len + 1 - 4 * p;
        if (start..len - p).all(|i| at(i) == at(i + p)) {
            return false;
        }
    }
    true
}

fn dfs<F: FnMut(&[u8])>(buf: &mut Vec<u8>, target: usize, emit: &mut F) {
    if buf.len() == target {
        emit(buf);
        return;
    }
    for letter in [0u8, 1u8] {
        if extension_ok(buf, letter) {
            buf.push(letter);
            dfs(buf, target, emit);
            buf.pop();
        }
    }
}

/// All fb words of length `n` extending `prefix`, in lexicographic order.
/// This is the shard worker behind [`enumerate_fb`]; a non-fb or overlong
/// prefix has no extensions.
pub fn fb_extensions(prefix: &BinaryWord, n: usize) -> Vec<BinaryWord> {
    if prefix.len() > n || !prefix.is_fb() {
        return Vec::new();
    }
    let mut buf = prefix.letters().to_vec();
    let mut out = Vec::new();
    dfs(&mut buf, n, &mut |letters| {
        out.push(BinaryWord::from_letters_unchecked(letters.to_vec()))
    });
    out
}

/// `fb_extensions(prefix, n).len()` without materializing the words.
pub fn count_fb_extensions(prefix: &BinaryWord, n: usize) -> u64 {
    if prefix.len() > n || !prefix.is_fb() {
        return 0;
    }
    let mut buf = prefix.letters().to_vec();
    let mut count = 0u64;
    dfs(&mut buf, n, &mut |_| count += 1);
    count
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { requested: n, cap })
    } else {
        Ok(())
    }
}

/// All fb words of length `n` in lexicographic order. With the `parallel`
/// feature the search shards by fixed prefixes and the shard results are
/// merged back in order.
pub fn enumerate_fb(n: usize) -> Result<Vec<BinaryWord>> {
    check_cap(n, ENUMERATION_CAP)?;
    let empty = BinaryWord::empty();
    if n <= SHARD_LEN + 2 {
        return Ok(fb_extensions(&empty, n));
    }
    let shards = fb_extensions(&empty, SHARD_LEN);
    let nested: Vec<Vec<BinaryWord>> = maybe_parallel!(
        par: shards.par_iter().map(|p| fb_extensions(p, n)).collect(),
        seq: shards.iter().map(|p| fb_extensions(p, n)).collect(),
    );
    Ok(nested.into_iter().flatten().collect())
}

/// Number of fb words of length `n`.
pub fn count_fb(n: usize) -> Result<u64> {
    check_cap(n, ENUMERATION_CAP)?;
    let empty = BinaryWord::empty();
    if n <= SHARD_LEN + 2 {
        return Ok(count_fb_extensions(&empty, n));
    }
    let shards = fb_extensions(&empty, SHARD_LEN);
    Ok(maybe_parallel!(
        par: shards.par_iter().map(|p| count_fb_extensions(p, n)).sum(),
        seq: shards.iter().map(|p| count_fb_extensions(p, n)).sum(),
    ))
}

fn search_extension(buf: &mut Vec<u8>, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    for letter in [0u8, 1u8] {
        if extension_ok(buf, letter) {
            buf.push(letter);
            let found = search_extension(buf, remaining - 1);
            buf.pop();
            if found {
                return true;
            }
        }
    }
    false
}

/// True iff some fb extension of `w` by `lookahead` more letters exists.
/// Rejection is sound (no extension of length Δ certainly means `w` is not a
/// prefix of an fb ω-word); acceptance is a Δ-bounded approximation.
pub fn is_extendable(w: &BinaryWord, lookahead: usize) -> Result<bool> {
    if let Some(violation) = w.find_violation() {
        return Err(Error::NotFb(violation));
    }
    check_cap(w.len() + lookahead, EXTENSION_CAP)?;
    let mut buf = w.letters().to_vec();
    Ok(search_extension(&mut buf, lookahead))
}

/// Greedy extremal search: letter by letter, keep the smallest (least) or
/// largest (greatest) letter whose extension survives the Δ-lookahead test.
/// Correct whenever Δ-extendability coincides with true extendability along
/// the frontier; the fixed-point construction cross-checks this.
pub fn brute_extremal(kind: ExtremalKind, n: usize, lookahead: usize) -> Result<BinaryWord> {
    check_cap(n + lookahead, EXTENSION_CAP)?;
    let preference: [u8; 2] = match kind {
        ExtremalKind::Least => [0, 1],
        ExtremalKind::Greatest => [1, 0],
    };
    let mut buf: Vec<u8> = Vec::with_capacity(n);
    for position in 0..n {
        let mut placed = false;
        for &letter in &preference {
            if extension_ok(&buf, letter) {
                buf.push(letter);
                if search_extension(&mut buf, lookahead) {
                    placed = true;
                    break;
                }
                buf.pop();
            }
        }
        if !placed {
            return Err(Error::NoExtension { position });
        }
    }
    Ok(BinaryWord::from_letters_unchecked(buf))
}

/// Naive double-loop violation scan: every factor is examined on its own,
/// independently of the incremental scan in [`BinaryWord::find_violation`].
/// Same tie-break: leftmost start, then smallest period (11 counts as 0).
pub fn naive_find_violation(w: &BinaryWord) -> Option<Violation> {
    let v = w.letters();
    let n = v.len();
    for start in 0..n {
        if n - start >= 2 && v[start] == 1 && v[start + 1] == 1 {
            return Some(Violation {
                kind: ViolationKind::Factor11,
                start,
                period: 0,
            });
        }
        for p in 1.. {
            let flen = 4 * p - 1;
            if start + flen > n {
                break;
            }
            let factor = &v[start..start + flen];
            if (0..flen - p).all(|i| factor[i] == factor[i + p]) {
                return Some(Violation {
                    kind: ViolationKind::FourMinusPower,
                    start,
                    period: p,
                });
            }
        }
    }
    None
}

/// fb membership by the naive scan.
pub fn naive_is_fb(w: &BinaryWord) -> bool {
    naive_find_violation(w).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn words(strs: &[&str]) -> Vec<BinaryWord> {
        strs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn enumerate_small_lengths() {
        assert_eq!(enumerate_fb(0).unwrap(), words(&[""]));
        assert_eq!(enumerate_fb(2).unwrap(), words(&["00", "01", "10"]));
        assert_eq!(
            enumerate_fb(3).unwrap(),
            words(&["001", "010", "100", "101"])
        );
    }

    #[test]
    fn counts_match_enumeration() {
        assert_eq!(count_fb(3).unwrap(), 4);
        assert_eq!(count_fb(4).unwrap(), 5);
        assert_eq!(count_fb(5).unwrap(), 7);
        for n in 0..=14 {
            assert_eq!(count_fb(n).unwrap(), enumerate_fb(n).unwrap().len() as u64);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_fb(ENUMERATION_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            count_fb(ENUMERATION_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn incremental_check_agrees_with_scans() {
        // The DFS prunes with the incremental suffix check; that must carve
        // out exactly the words both full scans accept.
        for n in 0..=12usize {
            let enumerated = enumerate_fb(n).unwrap();
            let mut expected = Vec::new();
            for i in 0..1u64 << n {
                let word = BinaryWord::from_index(n, i);
                let naive = naive_is_fb(&word);
                assert_eq!(naive, word.is_fb(), "scan disagreement on {word}");
                if naive {
                    expected.push(word);
                }
            }
            assert_eq!(enumerated, expected, "n = {n}");
        }
    }

    #[test]
    fn violation_scans_agree_in_detail() {
        for n in 0..=14usize {
            for i in 0..1u64 << n {
                let word = BinaryWord::from_index(n, i);
                assert_eq!(
                    word.find_violation(),
                    naive_find_violation(&word),
                    "word {word}"
                );
            }
        }
    }

    #[test]
    fn extendability_examples() {
        // The 0-extension runs into 00100100100 (period 3), so the search
        // must route through the 1-extension.
        assert!(is_extendable(&w("0010010010"), 5).unwrap());
        assert!(is_extendable(&w("10101"), 10).unwrap());
        assert!(matches!(is_extendable(&w("11"), 1), Err(Error::NotFb(_))));
        // Suffix occurrences of 10101 past the origin are dead ends.
        assert!(!is_extendable(&w("0010101"), 1).unwrap());
    }

    #[test]
    fn brute_extremal_examples() {
        assert_eq!(brute_extremal(ExtremalKind::Least, 2, 8).unwrap(), w("00"));
        assert_eq!(
            brute_extremal(ExtremalKind::Greatest, 5, 10).unwrap(),
            w("10101")
        );
        assert_eq!(
            brute_extremal(ExtremalKind::Least, 12, 24).unwrap(),
            w("001001001010")
        );
        assert!(matches!(
            brute_extremal(ExtremalKind::Least, 60, 60),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn sharded_paths_match_direct_dfs() {
        // Lengths above the shard threshold exercise the split/merge path.
        for n in [13usize, 16] {
            let direct = fb_extensions(&BinaryWord::empty(), n);
            assert_eq!(enumerate_fb(n).unwrap(), direct);
            assert_eq!(count_fb(n).unwrap(), direct.len() as u64);
        }
    }
}
