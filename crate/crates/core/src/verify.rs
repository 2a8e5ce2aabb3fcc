//! Exhaustive property checks wiring the modules against each other, exposed
//! so the CLI can run them. Every check returns a named outcome carrying a
//! counterexample description on failure; nothing is sampled — the sweeps
//! enumerate their full domains up to the given bounds.

use std::collections::{HashMap, HashSet};

use crate::exec::maybe_parallel;
use crate::extremal::{check_relations, extremal_prefix, ExtremalKind};
use crate::fife::{matches_forbidden, parse, FifeAutomaton, OperatorWord, Seed, StagedWord, State};
use crate::morphism::{fib_word, fibonacci_prefix, phi, phi_decode, phi_pow, pullback_prefix};
use crate::oracle;
use crate::word::{has_period, lex_less, BinaryWord};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    /// Counterexample or explanation; empty when the check passed.
    pub detail: String,
}

impl CheckOutcome {
    fn passed(name: &'static str) -> Self {
        CheckOutcome {
            name,
            pass: true,
            detail: String::new(),
        }
    }

    fn failed(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            pass: false,
            detail,
        }
    }

    fn from_counterexample(name: &'static str, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Self::passed(name),
            Some(detail) => Self::failed(name, detail),
        }
    }
}

/// The check groups exposed by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Words,
    Morphism,
    Fife,
    Extremal,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Words, Suite::Morphism, Suite::Fife, Suite::Extremal];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Morphism => "morphism",
            Suite::Fife => "fife",
            Suite::Extremal => "extremal",
        }
    }
}

/// Runs one suite. `max_len` scales the exhaustive word/operator bounds
/// downwards; each check caps it at the bound it was designed for, so
/// `max_len = 16` reproduces the full suite.
pub fn run_suite(suite: Suite, max_len: usize) -> Vec<CheckOutcome> {
    let cap = |bound: usize| bound.min(max_len);
    match suite {
        Suite::Words => vec![
            periodic_extension(cap(16)),
            violation_scan_agreement(cap(16)),
            internal_10101_sealed(cap(16)),
            lex_order_laws(cap(8), cap(6)),
            counts_pinned(),
            checkers_agree_on_counts(cap(14)),
            factorial_closure(cap(12)),
            count_bounded_by_11_free(cap(20)),
        ],
        Suite::Morphism => vec![
            phi_iterates_are_fib(12),
            fib_prefix_identity(10),
            decode_round_trip(cap(16)),
            decode_unique(cap(16)),
            phi_forward_preserves_fb(cap(14)),
            phi_reflection_is_omega_only(cap(14)),
            phi_fb_sharp(cap(14)),
            phi_order_reversal(cap(10)),
            pullback_alignment(cap(12), 6),
        ],
        Suite::Fife => vec![
            fife_triangulation(cap(11)),
            seed_automata_agreement(cap(10)),
            state_identities(),
            telescoping_identity(cap(6)),
            parse_identity(cap(8)),
            parse_round_trip(cap(8)),
            staging_bound(cap(8)),
            d_g_equivalent(cap(12)),
            fife_images_fb(cap(10)),
        ],
        Suite::Extremal => vec![
            extremal_prefix_chain(200),
            extremal_prefixes_fb(500),
            extremal_matches_brute(18),
            extremal_relations(100),
            occurrence_10101(500),
            occurrence_phi_10101(500),
            fib_factors_occur(60, 12, 5000),
        ],
    }
}

/// All four suites in order.
pub fn run_all(max_len: usize) -> Vec<CheckOutcome> {
    Suite::ALL
        .into_iter()
        .flat_map(|s| run_suite(s, max_len))
        .collect()
}

/// First word of length ≤ `max_len` (in length-then-lex order) failing the
/// predicate.
fn first_bad_word<F>(max_len: usize, ok: F) -> Option<BinaryWord>
where
    F: Fn(&BinaryWord) -> bool + Sync,
{
    for len in 0..=max_len {
        let found: Option<u64> = maybe_parallel!(
            par: (0..1u64 << len)
                .into_par_iter()
                .find_first(|&i| !ok(&BinaryWord::from_index(len, i))),
            seq: (0..1u64 << len).find(|&i| !ok(&BinaryWord::from_index(len, i))),
        );
        if let Some(i) = found {
            return Some(BinaryWord::from_index(len, i));
        }
    }
    None
}

/// First operator word of length ≤ `max_len` failing the predicate.
fn first_bad_opword<F>(max_len: usize, ok: F) -> Option<OperatorWord>
where
    F: Fn(&OperatorWord) -> bool + Sync,
{
    for len in 0..=max_len {
        let found: Option<u64> = maybe_parallel!(
            par: (0..1u64 << len)
                .into_par_iter()
                .find_first(|&i| !ok(&OperatorWord::from_index(len, i))),
            seq: (0..1u64 << len).find(|&i| !ok(&OperatorWord::from_index(len, i))),
        );
        if let Some(i) = found {
            return Some(OperatorWord::from_index(len, i));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// words

/// Periodically extending a word of period p and length 4p−1 by one letter
/// on either side yields a fourth power.
pub fn periodic_extension(max_len: usize) -> CheckOutcome {
    let name = "4-minus powers extend to fourth powers";
    for p in 1..=(max_len + 1) / 4 {
        for block in 0..1u64 << p {
            let x = BinaryWord::from_index(p, block);
            let letters: Vec<u8> = (0..4 * p - 1).map(|i| x.letter(i % p)).collect();
            let w = BinaryWord::from_letters_unchecked(letters);
            if !w.is_four_minus_power() {
                return CheckOutcome::failed(name, format!("{w} not detected as a 4⁻-power"));
            }
            let mut right = w.letters().to_vec();
            right.push(w.letter(w.len() - p));
            let mut left = vec![w.letter(p - 1)];
            left.extend_from_slice(w.letters());
            for ext in [right, left] {
                if ext.len() != 4 * p || !has_period(&ext, p) {
                    return CheckOutcome::failed(
                        name,
                        format!("extension of {w} is not a 4th power of period {p}"),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The incremental violation scan and the naive double-loop scan agree on
/// every word, including the reported (start, period).
pub fn violation_scan_agreement(max_len: usize) -> CheckOutcome {
    let counterexample = first_bad_word(max_len, |w| {
        w.find_violation() == oracle::naive_find_violation(w)
    });
    CheckOutcome::from_counterexample(
        "violation scan agrees with naive double loop",
        counterexample.map(|w| format!("disagreement on {w}")),
    )
}

/// In an fb word, 10101 can occur past the origin only as a suffix, and
/// such a word admits no fb extension at all.
pub fn internal_10101_sealed(max_len: usize) -> CheckOutcome {
    let name = "10101 past the origin seals an fb word";
    let pattern: BinaryWord = "10101".parse().expect("pattern is binary");
    for n in 0..=max_len {
        for word in oracle::fb_extensions(&BinaryWord::empty(), n) {
            for idx in word.occurrences(&pattern) {
                if idx == 0 {
                    continue;
                }
                if idx + pattern.len() != word.len() {
                    return CheckOutcome::failed(
                        name,
                        format!("{word} has an internal occurrence at {idx}"),
                    );
                }
                for bits in 0..4u8 {
                    let mut letters = word.letters().to_vec();
                    letters.push(bits & 1);
                    let one_more = BinaryWord::from_letters_unchecked(letters.clone());
                    letters.push(bits >> 1);
                    let two_more = BinaryWord::from_letters_unchecked(letters);
                    if one_more.is_fb() || two_more.is_fb() {
                        return CheckOutcome::failed(name, format!("{word} extends to an fb word"));
                    }
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// lex_less is a strict total order agreeing with the letter-vector order:
/// irreflexive, exactly one of u<v / v<u on distinct pairs, transitive.
pub fn lex_order_laws(pair_max: usize, triple_max: usize) -> CheckOutcome {
    let name = "lexicographic order is a strict total order";
    let words: Vec<BinaryWord> = (0..=pair_max)
        .flat_map(|len| (0..1u64 << len).map(move |i| BinaryWord::from_index(len, i)))
        .collect();
    for u in &words {
        for v in &words {
            let uv = lex_less(u, v);
            if uv != (u < v) {
                return CheckOutcome::failed(name, format!("order disagrees on ({u}, {v})"));
            }
            if u == v {
                if uv {
                    return CheckOutcome::failed(name, format!("{u} < itself"));
                }
            } else if uv == lex_less(v, u) {
                return CheckOutcome::failed(name, format!("({u}, {v}) not strictly ordered"));
            }
        }
    }
    let small: Vec<&BinaryWord> = words.iter().filter(|w| w.len() <= triple_max).collect();
    for u in &small {
        for v in &small {
            if !lex_less(u, v) {
                continue;
            }
            for t in &small {
                if lex_less(v, t) && !lex_less(u, t) {
                    return CheckOutcome::failed(
                        name,
                        format!("transitivity fails on ({u}, {v}, {t})"),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The frozen small counts, re-derived by the naive scan.
pub fn counts_pinned() -> CheckOutcome {
    let name = "fb counts at lengths 3, 4, 5 are 4, 5, 7";
    for (n, expected) in [(3usize, 4u64), (4, 5), (5, 7)] {
        let counted = oracle::count_fb(n).expect("below cap");
        let naive = (0..1u64 << n)
            .filter(|&i| oracle::naive_is_fb(&BinaryWord::from_index(n, i)))
            .count() as u64;
        if counted != expected || naive != expected {
            return CheckOutcome::failed(
                name,
                format!("length {n}: dfs {counted}, naive {naive}, expected {expected}"),
            );
        }
    }
    CheckOutcome::passed(name)
}

/// The DFS-with-pruning census and the naive membership census agree at
/// every length up to the bound.
pub fn checkers_agree_on_counts(max_len: usize) -> CheckOutcome {
    let name = "dfs census matches naive census";
    for n in 0..=max_len {
        let counted = oracle::count_fb(n).expect("below cap");
        let naive: u64 = maybe_parallel!(
            par: (0..1u64 << n)
                .into_par_iter()
                .filter(|&i| oracle::naive_is_fb(&BinaryWord::from_index(n, i)))
                .count() as u64,
            seq: (0..1u64 << n)
                .filter(|&i| oracle::naive_is_fb(&BinaryWord::from_index(n, i)))
                .count() as u64,
        );
        if counted != naive {
            return CheckOutcome::failed(
                name,
                format!("length {n}: dfs {counted} vs naive {naive}"),
            );
        }
    }
    CheckOutcome::passed(name)
}

/// Every factor of an enumerated fb word is itself fb.
pub fn factorial_closure(max_len: usize) -> CheckOutcome {
    let name = "fb language is closed under factors";
    for word in oracle::fb_extensions(&BinaryWord::empty(), max_len) {
        for start in 0..word.len() {
            for end in start + 1..=word.len() {
                if !word.factor(start, end).is_fb() {
                    return CheckOutcome::failed(
                        name,
                        format!("factor [{start}, {end}) of {word} is not fb"),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// fb words embed in the 11-free words, whose census is the Fibonacci
/// recurrence g(n) = g(n−1) + g(n−2), g(0) = 1, g(1) = 2.
pub fn count_bounded_by_11_free(max_len: usize) -> CheckOutcome {
    let name = "fb counts bounded by the 11-free census";
    let (mut prev, mut cur) = (1u64, 2u64);
    for n in 1..=max_len {
        let bound = if n == 1 { cur } else { prev + cur };
        if n > 1 {
            let next = prev + cur;
            prev = cur;
            cur = next;
        }
        let counted = oracle::count_fb(n).expect("below cap");
        if counted > bound {
            return CheckOutcome::failed(name, format!("length {n}: {counted} > {bound}"));
        }
    }
    CheckOutcome::passed(name)
}

// ---------------------------------------------------------------------------
// morphism

/// φⁿ(0) equals the recurrence-built F_n.
pub fn phi_iterates_are_fib(max_n: usize) -> CheckOutcome {
    let zero: BinaryWord = "0".parse().expect("binary");
    let counterexample = (0..=max_n).find(|&n| phi_pow(&zero, n) != fib_word(n));
    CheckOutcome::from_counterexample(
        "phi iterates of 0 are the finite Fibonacci words",
        counterexample.map(|n| format!("mismatch at n = {n}")),
    )
}

/// F_n is a prefix of F_{n−1}·F_{n+1}.
pub fn fib_prefix_identity(max_n: usize) -> CheckOutcome {
    let counterexample = (2..=max_n).find(|&n| {
        !fib_word(n - 1)
            .concat(&fib_word(n + 1))
            .starts_with(&fib_word(n))
    });
    CheckOutcome::from_counterexample(
        "F_n is a prefix of F_(n-1) F_(n+1)",
        counterexample.map(|n| format!("fails at n = {n}")),
    )
}

fn eleven_free(w: &BinaryWord) -> bool {
    !w.letters().windows(2).any(|pair| pair == [1, 1])
}

/// Peel-and-decode round trip on every 11-free word.
pub fn decode_round_trip(max_len: usize) -> CheckOutcome {
    let counterexample = first_bad_word(max_len, |w| {
        if !eleven_free(w) {
            return phi_decode(w).is_err();
        }
        match phi_decode(w) {
            Ok(f) => f.reassemble() == *w && f.peeled.len() <= 1,
            Err(_) => false,
        }
    });
    CheckOutcome::from_counterexample(
        "phi decode round-trips on 11-free words",
        counterexample.map(|w| format!("round trip fails on {w}")),
    )
}

/// The decoded preimage is the only one: over all pairs (a, u) with
/// a ∈ {ε, 1} and |u| ≤ max_len, each 11-free word arises exactly once.
pub fn decode_unique(max_len: usize) -> CheckOutcome {
    let name = "phi preimage is unique";
    let mut producers: HashMap<BinaryWord, Vec<BinaryWord>> = HashMap::new();
    let one: BinaryWord = "1".parse().expect("binary");
    for len in 0..=max_len {
        for i in 0..1u64 << len {
            let u = BinaryWord::from_index(len, i);
            let image = phi(&u);
            producers
                .entry(one.concat(&image))
                .or_default()
                .push(u.clone());
            producers.entry(image).or_default().push(u);
        }
    }
    for len in 0..=max_len {
        for i in 0..1u64 << len {
            let w = BinaryWord::from_index(len, i);
            if !eleven_free(&w) {
                continue;
            }
            let found = producers.get(&w).map_or(0, |v| v.len());
            if found != 1 {
                return CheckOutcome::failed(name, format!("{w} has {found} preimages"));
            }
            let decoded = phi_decode(&w).expect("11-free");
            if producers[&w][0] != decoded.preimage {
                return CheckOutcome::failed(name, format!("decode of {w} differs from census"));
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The image of an fb word under φ is fb (exhaustive).
pub fn phi_forward_preserves_fb(max_len: usize) -> CheckOutcome {
    let counterexample = first_bad_word(max_len, |w| !w.is_fb() || phi(w).is_fb());
    CheckOutcome::from_counterexample(
        "phi image of an fb word is fb",
        counterexample.map(|w| format!("{w} is fb but phi({w}) is not")),
    )
}

/// The reflection direction "φ(w) fb ⇒ w fb" holds for ω-words only. This
/// check pins the finite failure: counterexamples exist (the first is
/// w = 11, not fb, with the fb image 00), and every one of them has its
/// violation flush against the end of w, which is exactly what one more
/// letter of image context repairs (see [`phi_fb_sharp`]).
pub fn phi_reflection_is_omega_only(max_len: usize) -> CheckOutcome {
    let name = "phi reflection of fb needs omega-words (finite failure pinned)";
    let zero: BinaryWord = "0".parse().expect("binary");
    let first = first_bad_word(max_len, |w| w.is_fb() || !phi(w).is_fb());
    match first {
        None => CheckOutcome::failed(
            name,
            "no finite counterexample found; the raw biconditional holds here".into(),
        ),
        Some(w) => {
            if w.to_string() != "11" {
                return CheckOutcome::failed(name, format!("first counterexample moved to {w}"));
            }
            // Each counterexample must be repaired by the one-letter context.
            let unrepaired = first_bad_word(max_len, |w| {
                w.is_fb() || !phi(w).is_fb() || !phi(w).concat(&zero).is_fb()
            });
            match unrepaired {
                None => CheckOutcome::passed(name),
                Some(w) => CheckOutcome::failed(
                    name,
                    format!("{w} is a counterexample that context does not repair"),
                ),
            }
        }
    }
}

/// The finite-exact biconditional: w is fb iff φ(w)·0 is fb. The raw
/// statement "w fb iff φ(w) fb" holds for ω-words only — a violation at the
/// very end of w (e.g. 11, or 000) needs one more letter of image context,
/// and appending 0 supplies exactly the letter every continuation of the
/// image would start with. Minimal finite counterexample to the raw form:
/// w = 11 is not fb while φ(11) = 00 is.
pub fn phi_fb_sharp(max_len: usize) -> CheckOutcome {
    let zero: BinaryWord = "0".parse().expect("binary");
    let counterexample = first_bad_word(max_len, |w| w.is_fb() == phi(w).concat(&zero).is_fb());
    CheckOutcome::from_counterexample(
        "fb iff phi image with 0 appended is fb",
        counterexample.map(|w| format!("biconditional fails on {w}")),
    )
}

/// φ reverses the order of same-length words differing at some position.
pub fn phi_order_reversal(max_len: usize) -> CheckOutcome {
    let name = "phi is order-reversing";
    for len in 1..=max_len {
        let words: Vec<BinaryWord> = (0..1u64 << len)
            .map(|i| BinaryWord::from_index(len, i))
            .collect();
        let images: Vec<BinaryWord> = words.iter().map(phi).collect();
        for a in 0..words.len() {
            for b in 0..words.len() {
                if a == b {
                    continue;
                }
                let forward = lex_less(&words[a], &words[b]);
                let reversed = lex_less(&images[b], &images[a]);
                if forward != reversed {
                    return CheckOutcome::failed(
                        name,
                        format!("({}, {}) not reversed", words[a], words[b]),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// Prefixes of φ(u) ending in F_{n+1} (n ≥ 2) pull back to prefixes of u
/// ending in F_n whenever u is fb. Words that are not fb may report a
/// misalignment error instead; they must never produce a wrong
/// factorization.
pub fn pullback_alignment(max_u_len: usize, max_n: usize) -> CheckOutcome {
    let name = "image prefixes ending in F_(n+1) pull back through phi";
    for len in 0..=max_u_len {
        for i in 0..1u64 << len {
            let u = BinaryWord::from_index(len, i);
            let image = phi(&u);
            for n in 2..=max_n {
                let target = fib_word(n + 1);
                let expected_prefix = image
                    .find_factor(&target)
                    .map(|pos| image.prefix(pos + target.len()));
                match (pullback_prefix(&u, n), expected_prefix) {
                    (Ok(None), None) => {}
                    (Ok(Some(q)), Some(p)) => {
                        if phi(&q) != p || !u.starts_with(&q) || !q.ends_with(&fib_word(n)) {
                            return CheckOutcome::failed(
                                name,
                                format!("bad pullback of u = {u} at n = {n}"),
                            );
                        }
                    }
                    (Err(crate::Error::PullbackMisaligned(_)), Some(_)) if !u.is_fb() => {}
                    _ => {
                        return CheckOutcome::failed(
                            name,
                            format!("pullback presence mismatch for u = {u}, n = {n}"),
                        )
                    }
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

// ---------------------------------------------------------------------------
// fife

fn seed_image(seed: Seed, f: &OperatorWord) -> BinaryWord {
    seed.staged().bullet(f).word().clone()
}

/// The three-way equivalence for the 010 seed: the image is fb ⟺ the walk
/// misses the sink ⟺ no factor of the operator word is forbidden.
pub fn fife_triangulation(max_k: usize) -> CheckOutcome {
    let automaton = FifeAutomaton::for_seed(Seed::S010);
    let counterexample = first_bad_opword(max_k, |f| {
        let fb = seed_image(Seed::S010, f).is_fb();
        let sink_free = !automaton.walk(f).1;
        let clean = !matches_forbidden(f);
        fb == sink_free && sink_free == clean
    });
    CheckOutcome::from_counterexample(
        "image fb = sink-free walk = no forbidden factor (seed 010)",
        counterexample.map(|f| format!("triangulation breaks on {f}")),
    )
}

/// Walkability decides fb-ness for the other three seeds too.
pub fn seed_automata_agreement(max_k: usize) -> CheckOutcome {
    let name = "image fb = sink-free walk (seeds 0010, 1010, 10010)";
    for seed in [Seed::S0010, Seed::S1010, Seed::S10010] {
        let automaton = FifeAutomaton::for_seed(seed);
        let counterexample = first_bad_opword(max_k, |f| {
            seed_image(seed, f).is_fb() == !automaton.walk(f).1
        });
        if let Some(f) = counterexample {
            return CheckOutcome::failed(name, format!("seed {seed} disagrees on {f}"));
        }
    }
    CheckOutcome::passed(name)
}

/// The quotient-set identities pinned as state equalities on the 010
/// automaton's transition table.
pub fn state_identities() -> CheckOutcome {
    let name = "quotient identities hold on the 010 table";
    let automaton = FifeAutomaton::for_seed(Seed::S010);
    let expectations: [(&str, State); 10] = [
        ("b", State::B),
        ("baa", State::B),
        ("bab", State::B),
        ("bbaa", State::B),
        ("bba", State::C),
        ("bbba", State::C),
        ("bbb", State::D),
        ("bbbb", State::D),
        ("a", State::A),
        ("bbab", State::Sink),
    ];
    for (ops, expected) in expectations {
        let f: OperatorWord = ops.parse().expect("operator literal");
        let reached = automaton.walk_from(FifeAutomaton::START, &f);
        if reached != expected {
            return CheckOutcome::failed(
                name,
                format!(
                    "walk {ops} reaches {} not {}",
                    reached.name(),
                    expected.name()
                ),
            );
        }
    }
    CheckOutcome::passed(name)
}

fn strip_prefix(prefix: &BinaryWord, word: &BinaryWord) -> Option<BinaryWord> {
    word.starts_with(prefix)
        .then(|| word.factor(prefix.len(), word.len()))
}

/// The telescoping product: 010•f equals 010 followed by the blocks
/// F_{j+1}⁻¹ φ^{j−1}(F_2 • f_j), evaluated as literal strings.
pub fn telescoping_identity(max_k: usize) -> CheckOutcome {
    let name = "bullet action telescopes into phi-power blocks";
    for k in 0..=max_k {
        for i in 0..1u64 << k {
            let f = OperatorWord::from_index(k, i);
            let lhs = seed_image(Seed::S010, &f);
            let mut rhs = Seed::S010.word();
            for (j, op) in f.iter().enumerate() {
                let step = Seed::S010.staged().apply(op);
                let block = phi_pow(step.word(), j);
                let Some(tail) = strip_prefix(&fib_word(j + 2), &block) else {
                    return CheckOutcome::failed(
                        name,
                        format!("block {j} of {f} lacks its F_{} prefix", j + 2),
                    );
                };
                rhs = rhs.concat(&tail);
            }
            if lhs != rhs {
                return CheckOutcome::failed(name, format!("telescoping fails on {f}"));
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The parse identity: w•(g f) = (w•g) · F_{k+2}⁻¹ φ^k(010•f) for every
/// seed w and k = |g|.
pub fn parse_identity(max_total: usize) -> CheckOutcome {
    let name = "bullet action splits along any operator cut";
    for seed in Seed::ALL {
        for k in 0..=max_total {
            for m in 0..=max_total - k {
                for gi in 0..1u64 << k {
                    let g = OperatorWord::from_index(k, gi);
                    let left = seed.staged().bullet(&g);
                    for fi in 0..1u64 << m {
                        let f = OperatorWord::from_index(m, fi);
                        let lhs = seed.staged().bullet(&g.concat(&f));
                        let x = seed_image(Seed::S010, &f);
                        let Some(tail) = strip_prefix(&fib_word(k + 2), &phi_pow(&x, k)) else {
                            return CheckOutcome::failed(
                                name,
                                format!("phi^{k} image of 010•{f} lacks its F_{} prefix", k + 2),
                            );
                        };
                        if *lhs.word() != left.word().concat(&tail) {
                            return CheckOutcome::failed(
                                name,
                                format!("split fails for seed {seed}, g = {g}, f = {f}"),
                            );
                        }
                    }
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// parse inverts the bullet action on fb images of the 010 seed.
pub fn parse_round_trip(max_k: usize) -> CheckOutcome {
    let counterexample = first_bad_opword(max_k, |f| {
        let image = seed_image(Seed::S010, f);
        if !image.is_fb() {
            return true;
        }
        match parse(&image) {
            Ok(p) => p.seed == Seed::S010 && p.ops == *f && p.consumed == image.len(),
            Err(_) => false,
        }
    });
    CheckOutcome::from_counterexample(
        "parse inverts the bullet action",
        counterexample.map(|f| format!("round trip fails on {f}")),
    )
}

/// Every staged word reachable from a seed satisfies the staging bound.
pub fn staging_bound(ops_len: usize) -> CheckOutcome {
    let name = "staging bound is preserved along every operator chain";
    for seed in Seed::ALL {
        for i in 0..1u64 << ops_len {
            let f = OperatorWord::from_index(ops_len, i);
            let mut cur = seed.staged();
            for op in f.iter() {
                cur = cur.apply(op);
                if StagedWord::new(cur.word().clone(), cur.stage()).is_err() {
                    return CheckOutcome::failed(
                        name,
                        format!("invariant lost at stage {} from seed {seed}", cur.stage()),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

/// States d and g accept the same operator words (the table is deliberately
/// not minimized).
pub fn d_g_equivalent(max_k: usize) -> CheckOutcome {
    let automaton = FifeAutomaton::for_seed(Seed::S010);
    let counterexample = first_bad_opword(max_k, |f| {
        (automaton.walk_from(State::D, f) == State::Sink)
            == (automaton.walk_from(State::G, f) == State::Sink)
    });
    CheckOutcome::from_counterexample(
        "states d and g are language-equivalent",
        counterexample.map(|f| format!("d/g disagree on {f}")),
    )
}

/// Images of sink-free operator words are fb, and the short ones appear in
/// the exhaustive enumeration of their length.
pub fn fife_images_fb(max_k: usize) -> CheckOutcome {
    let name = "sink-free images are fb and enumerable";
    let automaton = FifeAutomaton::for_seed(Seed::S010);
    let mut enumerated: HashMap<usize, HashSet<BinaryWord>> = HashMap::new();
    for k in 0..=max_k {
        for i in 0..1u64 << k {
            let f = OperatorWord::from_index(k, i);
            if automaton.walk(&f).1 {
                continue;
            }
            let image = seed_image(Seed::S010, &f);
            if !image.is_fb() {
                return CheckOutcome::failed(name, format!("sink-free {f} gives non-fb image"));
            }
            if image.len() <= oracle::ENUMERATION_CAP {
                let set = enumerated.entry(image.len()).or_insert_with(|| {
                    oracle::fb_extensions(&BinaryWord::empty(), image.len())
                        .into_iter()
                        .collect()
                });
                if !set.contains(&image) {
                    return CheckOutcome::failed(
                        name,
                        format!("image of {f} missing from the census"),
                    );
                }
            }
        }
    }
    CheckOutcome::passed(name)
}

// ---------------------------------------------------------------------------
// extremal

/// Each extremal prefix extends the previous one.
pub fn extremal_prefix_chain(max_n: usize) -> CheckOutcome {
    let name = "extremal prefixes form a chain";
    for kind in [ExtremalKind::Least, ExtremalKind::Greatest] {
        let full = extremal_prefix(kind, max_n + 1);
        for n in 0..=max_n {
            if extremal_prefix(kind, n) != full.prefix(n) {
                return CheckOutcome::failed(name, format!("chain breaks at n = {n} ({kind:?})"));
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The extremal prefixes are fb (factor closure covers every shorter
/// prefix).
pub fn extremal_prefixes_fb(n: usize) -> CheckOutcome {
    let name = "extremal prefixes are fb";
    for kind in [ExtremalKind::Least, ExtremalKind::Greatest] {
        if let Some(violation) = extremal_prefix(kind, n).find_violation() {
            return CheckOutcome::failed(name, format!("{kind:?}: {violation}"));
        }
    }
    CheckOutcome::passed(name)
}

/// The fixed-point prefixes coincide with the greedy lookahead search.
pub fn extremal_matches_brute(max_n: usize) -> CheckOutcome {
    let name = "fixed-point prefixes match greedy lookahead search";
    for kind in [ExtremalKind::Least, ExtremalKind::Greatest] {
        for n in 0..=max_n {
            let brute = match oracle::brute_extremal(kind, n, 2 * n) {
                Ok(w) => w,
                Err(e) => return CheckOutcome::failed(name, format!("search failed: {e}")),
            };
            if brute != extremal_prefix(kind, n) {
                return CheckOutcome::failed(
                    name,
                    format!("{kind:?} differs at n = {n}: greedy gives {brute}"),
                );
            }
        }
    }
    CheckOutcome::passed(name)
}

/// The mutual and fixed-point relations at prefix length `n`.
pub fn extremal_relations(n: usize) -> CheckOutcome {
    let name = "extremal words determine each other";
    match check_relations(n) {
        Ok(report) => {
            if report.all_pass() {
                CheckOutcome::passed(name)
            } else {
                let failing: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name)
                    .collect();
                CheckOutcome::failed(name, failing.join(", "))
            }
        }
        Err(e) => CheckOutcome::failed(name, e.to_string()),
    }
}

/// 10101 occurs in the greatest word's prefix only at the origin.
pub fn occurrence_10101(window: usize) -> CheckOutcome {
    let pattern: BinaryWord = "10101".parse().expect("binary");
    let prefix = extremal_prefix(ExtremalKind::Greatest, window);
    let occurrences = prefix.occurrences(&pattern);
    CheckOutcome::from_counterexample(
        "10101 occurs only at the origin of the greatest word",
        (occurrences != vec![0]).then(|| format!("occurrences at {occurrences:?}")),
    )
}

/// The least word's sealing prefix. φ(10101) = 0010010 is a prefix of the
/// least word but — unlike the 10101 situation in the greatest word — it
/// recurs past the origin (at 3, 11, 19, …: an occurrence may end in the
/// middle of a φ-token, so it does not pull back to an internal 10101 in
/// the greatest word). The one-letter extension φ(10101)·0 is the true
/// seal: any later occurrence would be token-aligned and would pull back to
/// an internal 10101. The check verifies all three facts; the pattern is
/// computed, not assumed.
pub fn occurrence_phi_10101(window: usize) -> CheckOutcome {
    let name = "phi(10101)·0 seals the least word";
    let pattern = phi(&"10101".parse().expect("binary"));
    let prefix = extremal_prefix(ExtremalKind::Least, window);
    if !prefix.starts_with(&pattern) {
        return CheckOutcome::failed(name, "phi(10101) is not a prefix".into());
    }
    let recurrences = prefix.occurrences(&pattern);
    if recurrences.len() < 2 || recurrences[0] != 0 {
        return CheckOutcome::failed(
            name,
            format!("expected recurring phi(10101), saw {recurrences:?}"),
        );
    }
    let zero: BinaryWord = "0".parse().expect("binary");
    let sealed = pattern.concat(&zero);
    let occurrences = prefix.occurrences(&sealed);
    CheckOutcome::from_counterexample(
        name,
        (occurrences != vec![0]).then(|| format!("occurrences of {sealed} at {occurrences:?}")),
    )
}

/// Every short factor of the Fibonacci word occurs in both extremal words;
/// the window grows generously because the embedded blocks appear at
/// geometrically growing offsets.
pub fn fib_factors_occur(fib_len: usize, max_factor: usize, window: usize) -> CheckOutcome {
    let name = "factors of the Fibonacci word occur in both extremal words";
    let source = fibonacci_prefix(fib_len);
    let mut factors: HashSet<Vec<u8>> = HashSet::new();
    for len in 1..=max_factor.min(fib_len) {
        for start in 0..=fib_len - len {
            factors.insert(source.letters()[start..start + len].to_vec());
        }
    }
    for kind in [ExtremalKind::Least, ExtremalKind::Greatest] {
        let haystack = extremal_prefix(kind, window);
        for factor in &factors {
            let needle = BinaryWord::from_letters_unchecked(factor.clone());
            if haystack.find_factor(&needle).is_none() {
                return CheckOutcome::failed(
                    name,
                    format!("{needle} missing from the {kind:?} prefix of length {window}"),
                );
            }
        }
    }
    CheckOutcome::passed(name)
}
