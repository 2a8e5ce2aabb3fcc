//! The Fife operator calculus for fb words.
//!
//! A *staged word* is a presentation `y·F_n` (with a Parikh-vector bound on
//! `y`) on which the suffix-rewriting operators α and β act:
//! `α(y·F_n) = y·F_{n+1}` and `β(y·F_n) = y·F_{n−1}·F_{n+1}`, each raising
//! the stage by one and extending the word on the right. Iterating the
//! action from one of the four seed words 010, 0010, 1010, 10010 reaches
//! every infinite fb word, and whether a given operator word keeps the image
//! fb is decided by a 7-state automaton per seed — equivalently, for the 010
//! seed, by the absence of operator factors from a fixed regular language.

mod forbidden;

pub use forbidden::matches_forbidden;

use std::fmt;
use std::str::FromStr;

use crate::morphism::fib_word;
use crate::word::BinaryWord;
use crate::{Error, Result};

/// One of the two Fife operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Alpha,
    Beta,
}

impl Operator {
    pub const ALL: [Operator; 2] = [Operator::Alpha, Operator::Beta];

    /// ASCII encoding: α is 'a', β is 'b'.
    pub fn ascii(self) -> char {
        match self {
            Operator::Alpha => 'a',
            Operator::Beta => 'b',
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Operator::Alpha => 0,
            Operator::Beta => 1,
        }
    }
}

/// A finite word over {α, β}.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OperatorWord(Vec<Operator>);

impl OperatorWord {
    pub fn empty() -> Self {
        OperatorWord(Vec::new())
    }

    pub fn new(ops: Vec<Operator>) -> Self {
        OperatorWord(ops)
    }

    /// The `index`-th word of {α,β}^len in lexicographic order (α < β),
    /// for exhaustive sweeps.
    pub fn from_index(len: usize, index: u64) -> Self {
        debug_assert!(len < 64);
        let ops = (0..len)
            .rev()
            .map(|i| {
                if (index >> i) & 1 == 0 {
                    Operator::Alpha
                } else {
                    Operator::Beta
                }
            })
            .collect();
        OperatorWord(ops)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ops(&self) -> &[Operator] {
        &self.0
    }

    pub fn concat(&self, other: &OperatorWord) -> OperatorWord {
        let mut ops = self.0.clone();
        ops.extend_from_slice(&other.0);
        OperatorWord(ops)
    }

    pub fn iter(&self) -> impl Iterator<Item = Operator> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            write!(f, "{}", op.ascii())?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// Accepts 'a'/'b' and the aliases 'α'/'β'.
    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for (position, c) in s.chars().enumerate() {
            match c {
                'a' | 'α' => ops.push(Operator::Alpha),
                'b' | 'β' => ops.push(Operator::Beta),
                found => return Err(Error::InvalidOperator { found, position }),
            }
        }
        Ok(OperatorWord(ops))
    }
}

/// The four possible shortest prefixes of an fb ω-word ending in F_2 = 010.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Seed {
    S010,
    S0010,
    S1010,
    S10010,
}

impl Seed {
    pub const ALL: [Seed; 4] = [Seed::S010, Seed::S0010, Seed::S1010, Seed::S10010];

    pub fn as_str(self) -> &'static str {
        match self {
            Seed::S010 => "010",
            Seed::S0010 => "0010",
            Seed::S1010 => "1010",
            Seed::S10010 => "10010",
        }
    }

    pub fn word(self) -> BinaryWord {
        self.as_str().parse().expect("seed literals are binary")
    }

    /// The seed as a stage-2 staged word.
    pub fn staged(self) -> StagedWord {
        StagedWord::new(self.word(), 2).expect("seeds satisfy the staging bound")
    }

    fn from_word(w: &BinaryWord) -> Option<Seed> {
        Seed::ALL.into_iter().find(|s| s.word() == *w)
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "010" => Ok(Seed::S010),
            "0010" => Ok(Seed::S0010),
            "1010" => Ok(Seed::S1010),
            "10010" => Ok(Seed::S10010),
            other => Err(Error::InvalidSeed(other.to_string())),
        }
    }
}

/// A word of the form `y·F_n` carrying its stage `n ≥ 2` explicitly, with
/// the staging bound `π(y) ≤ π(F_n) − π(0)` componentwise. F_n-suffix
/// membership alone does not determine `n`, so the stage is part of the
/// value, and the validating constructor is the only way in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedWord {
    word: BinaryWord,
    stage: usize,
}

impl StagedWord {
    pub fn new(word: BinaryWord, stage: usize) -> Result<Self> {
        if stage < 2 {
            return Err(Error::InvalidStagedWord {
                reason: format!("stage {stage} is below 2"),
            });
        }
        let suffix = fib_word(stage);
        if !word.ends_with(&suffix) {
            return Err(Error::InvalidStagedWord {
                reason: format!("word {word} does not end in F_{stage}"),
            });
        }
        let y = word.prefix(word.len() - suffix.len());
        let bound = suffix.parikh();
        let head = y.parikh();
        if head.zeros + 1 > bound.zeros || head.ones > bound.ones {
            return Err(Error::InvalidStagedWord {
                reason: format!("head {y} violates the Parikh bound for stage {stage}"),
            });
        }
        Ok(StagedWord { word, stage })
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    /// The head `y` with `word = y·F_stage`.
    pub fn head(&self) -> BinaryWord {
        self.word
            .prefix(self.word.len() - fib_word(self.stage).len())
    }

    /// One operator application. α rewrites the F_n suffix to F_{n+1},
    /// β to F_{n−1}·F_{n+1}; either way the stage rises by one, the input
    /// word stays a prefix of the output, and the staging bound is
    /// preserved, so applications can be chained freely.
    pub fn apply(&self, op: Operator) -> StagedWord {
        let n = self.stage;
        let y = self.head();
        let word = match op {
            Operator::Alpha => y.concat(&fib_word(n + 1)),
            Operator::Beta => y.concat(&fib_word(n - 1)).concat(&fib_word(n + 1)),
        };
        debug_assert!(word.starts_with(&self.word));
        let next = StagedWord { word, stage: n + 1 };
        debug_assert!(StagedWord::new(next.word.clone(), next.stage).is_ok());
        next
    }

    /// The iterated action `w • f`: a left fold of [`StagedWord::apply`].
    pub fn bullet(&self, ops: &OperatorWord) -> StagedWord {
        ops.iter().fold(self.clone(), |sw, op| sw.apply(op))
    }
}

/// The monotone chain of staged words obtained by feeding operators from an
/// (arbitrarily long) source to a seed. The first item is the seed itself;
/// each later item extends the previous one, so any prefix of the limit word
/// becomes available after finitely many operators.
pub struct BulletStream<I> {
    next: Option<StagedWord>,
    ops: I,
}

pub fn bullet_stream<I>(seed: Seed, ops: I) -> BulletStream<I::IntoIter>
where
    I: IntoIterator<Item = Operator>,
{
    BulletStream {
        next: Some(seed.staged()),
        ops: ops.into_iter(),
    }
}

impl<I: Iterator<Item = Operator>> Iterator for BulletStream<I> {
    type Item = StagedWord;

    fn next(&mut self) -> Option<StagedWord> {
        let cur = self.next.take()?;
        if let Some(op) = self.ops.next() {
            self.next = Some(cur.apply(op));
        }
        Some(cur)
    }
}

/// Drives a bullet stream until `len` letters of the limit word are fixed
/// and returns that prefix (or everything produced, if the operator source
/// runs dry first).
pub fn limit_prefix<I>(seed: Seed, ops: I, len: usize) -> BinaryWord
where
    I: IntoIterator<Item = Operator>,
{
    let mut last = seed.staged();
    for staged in bullet_stream(seed, ops) {
        last = staged;
        if last.word().len() >= len {
            break;
        }
    }
    last.word().prefix(len)
}

/// Result of factoring an fb word through the operator calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedWord {
    pub seed: Seed,
    pub ops: OperatorWord,
    /// Length of the longest prefix reproduced by `seed • ops`.
    pub consumed: usize,
}

/// Factors an fb word containing 010: the seed is the shortest prefix
/// ending in F_2, and each step identifies the shortest prefix ending in
/// the next F_{n+1} as the α- or β-extension of the current staged word,
/// until neither extension fits. `seed • ops` reproduces the first
/// `consumed` letters exactly.
pub fn parse(w: &BinaryWord) -> Result<ParsedWord> {
    if let Some(violation) = w.find_violation() {
        return Err(Error::NotFb(violation));
    }
    let f2 = fib_word(2);
    let Some(pos) = w.find_factor(&f2) else {
        return Err(Error::NoSeed);
    };
    let seed_word = w.prefix(pos + f2.len());
    // For fb input the shortest prefix ending in 010 is one of the four
    // seeds; anything else means the fb precondition was not met.
    let seed =
        Seed::from_word(&seed_word).ok_or_else(|| Error::InvalidSeed(seed_word.to_string()))?;

    let mut cur = seed.staged();
    let mut ops = Vec::new();
    loop {
        let target = fib_word(cur.stage() + 1);
        let Some(pos) = w.find_factor(&target) else {
            break;
        };
        let prefix = w.prefix(pos + target.len());
        let by_alpha = cur.apply(Operator::Alpha);
        let by_beta = cur.apply(Operator::Beta);
        if prefix == *by_alpha.word() {
            ops.push(Operator::Alpha);
            cur = by_alpha;
        } else if prefix == *by_beta.word() {
            ops.push(Operator::Beta);
            cur = by_beta;
        } else {
            return Err(Error::UnparsablePrefix {
                prefix_len: prefix.len(),
                stage: cur.stage() + 1,
            });
        }
    }
    Ok(ParsedWord {
        seed,
        ops: OperatorWord::new(ops),
        consumed: cur.word().len(),
    })
}

/// States of the seed automata, conventionally named a–g with the
/// non-accepting sink e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum State {
    A,
    B,
    C,
    D,
    F,
    G,
    Sink,
}

impl State {
    /// Display/export order.
    pub const ORDER: [State; 7] = [
        State::A,
        State::B,
        State::C,
        State::D,
        State::F,
        State::G,
        State::Sink,
    ];

    pub fn name(self) -> &'static str {
        match self {
            State::A => "a",
            State::B => "b",
            State::C => "c",
            State::D => "d",
            State::F => "f",
            State::G => "g",
            State::Sink => "e",
        }
    }

    fn index(self) -> usize {
        match self {
            State::A => 0,
            State::B => 1,
            State::C => 2,
            State::D => 3,
            State::F => 4,
            State::G => 5,
            State::Sink => 6,
        }
    }
}

/// The 7-state automaton deciding, for a given seed, which operator words
/// keep the image fb. All four share the same rows for b, c, d, f, g and
/// the sink; only the start row depends on the seed. The sink is entered
/// only from c on β.
#[derive(Clone, Debug)]
pub struct FifeAutomaton {
    seed: Seed,
    table: [[State; 2]; 7],
}

impl FifeAutomaton {
    pub const START: State = State::A;

    pub fn for_seed(seed: Seed) -> Self {
        use State::*;
        let start_row = match seed {
            Seed::S010 => [A, B],
            Seed::S0010 => [F, G],
            Seed::S1010 => [B, B],
            Seed::S10010 => [C, D],
        };
        let table = [
            start_row,    // a
            [F, G],       // b
            [B, Sink],    // c
            [C, D],       // d
            [B, B],       // f
            [C, D],       // g
            [Sink, Sink], // e
        ];
        FifeAutomaton { seed, table }
    }

    pub fn seed(&self) -> Seed {
        self.seed
    }

    pub fn step(&self, state: State, op: Operator) -> State {
        self.table[state.index()][op.index()]
    }

    /// Deterministic transition fold from the start state; the flag is true
    /// iff the sink was ever visited.
    pub fn walk(&self, ops: &OperatorWord) -> (State, bool) {
        let mut state = Self::START;
        let mut hit_sink = state == State::Sink;
        for op in ops.iter() {
            state = self.step(state, op);
            hit_sink |= state == State::Sink;
        }
        (state, hit_sink)
    }

    /// Iterated transition from an arbitrary state (for the quotient-set
    /// identities).
    pub fn walk_from(&self, start: State, ops: &OperatorWord) -> State {
        ops.iter().fold(start, |s, op| self.step(s, op))
    }

    /// DOT rendering with nodes in the fixed order a, b, c, d, f, g, e and
    /// the α edge before the β edge of each node.
    pub fn dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph A_{} {{\n", self.seed.as_str()));
        out.push_str("    rankdir=LR;\n");
        out.push_str("    node [shape=circle];\n");
        out.push_str("    start [shape=none,label=\"\"];\n");
        out.push_str("    start -> a;\n");
        for state in State::ORDER {
            for op in Operator::ALL {
                out.push_str(&format!(
                    "    {} -> {} [label=\"{}\"];\n",
                    state.name(),
                    self.step(state, op).name(),
                    op.ascii()
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{fibonacci_prefix, phi_pow};

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn ops(s: &str) -> OperatorWord {
        s.parse().unwrap()
    }

    fn staged(s: &str, stage: usize) -> StagedWord {
        StagedWord::new(w(s), stage).unwrap()
    }

    #[test]
    fn operator_parsing_accepts_aliases() {
        assert_eq!(ops("ab"), ops("αβ"));
        assert!(matches!(
            "ax".parse::<OperatorWord>(),
            Err(Error::InvalidOperator {
                found: 'x',
                position: 1
            })
        ));
        assert_eq!(ops("ab").to_string(), "ab");
    }

    #[test]
    fn staging_invariant_enforced() {
        assert!(StagedWord::new(w("010"), 2).is_ok());
        assert!(StagedWord::new(w("10010"), 2).is_ok());
        // 1001 ends in F_1 but stages start at 2.
        assert!(StagedWord::new(w("1001"), 1).is_err());
        // Does not end in F_2.
        assert!(StagedWord::new(w("011"), 2).is_err());
        // Head 100 has two zeros; the bound for stage 2 allows one.
        assert!(StagedWord::new(w("100010"), 2).is_err());
    }

    #[test]
    fn apply_matches_definition() {
        assert_eq!(staged("010", 2).apply(Operator::Alpha), staged("01001", 3));
        assert_eq!(staged("010", 2).apply(Operator::Beta), staged("0101001", 3));
        // β at stage 3 replaces F_3 by F_2·F_4 (recurrence evaluated
        // directly: ε·010·01001010).
        assert_eq!(
            staged("01001", 3).apply(Operator::Beta),
            staged("01001001010", 4)
        );
    }

    #[test]
    fn bullet_folds() {
        assert_eq!(staged("010", 2).bullet(&ops("")), staged("010", 2));
        assert_eq!(
            staged("010", 2).bullet(&ops("ab")).word(),
            &w("01001001010")
        );
        // α^k from the bare seed walks up the Fibonacci words.
        for k in 0..=8 {
            let f = OperatorWord::new(vec![Operator::Alpha; k]);
            let result = staged("010", 2).bullet(&f);
            assert_eq!(result.word(), &fib_word(k + 2));
            assert_eq!(result.stage(), k + 2);
        }
    }

    #[test]
    fn bullet_beta_alpha_by_recurrence() {
        // 010•β = 0101001, then α rewrites the F_3 suffix to F_4:
        // 01·01001010 by direct recurrence evaluation.
        let step1 = staged("010", 2).apply(Operator::Beta);
        assert_eq!(step1.word(), &w("0101001"));
        let step2 = step1.apply(Operator::Alpha);
        assert_eq!(step2.word(), &w("0101001010"));
        assert!(step2.word().starts_with(step1.word()));
    }

    #[test]
    fn stream_yields_monotone_chain() {
        let f = ops("ba");
        let chain: Vec<StagedWord> = bullet_stream(Seed::S010, f.iter()).collect();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0].word(), &w("010"));
        assert_eq!(chain[1].word(), &w("0101001"));
        for pair in chain.windows(2) {
            assert!(pair[1].word().starts_with(pair[0].word()));
        }

        // Seed alone when there are no operators.
        let only: Vec<StagedWord> = bullet_stream(Seed::S10010, []).collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].word(), &w("10010"));
    }

    #[test]
    fn alpha_stream_is_fibonacci() {
        let prefix = limit_prefix(Seed::S010, std::iter::repeat(Operator::Alpha), 200);
        assert_eq!(prefix, fibonacci_prefix(200));
    }

    #[test]
    fn parse_examples() {
        let p = parse(&w("01001")).unwrap();
        assert_eq!(
            (p.seed, p.ops.to_string(), p.consumed),
            (Seed::S010, "a".into(), 5)
        );

        let p = parse(&w("0101001")).unwrap();
        assert_eq!(
            (p.seed, p.ops.to_string(), p.consumed),
            (Seed::S010, "b".into(), 7)
        );

        // 𝝓's 34-letter prefix is F_7 = 010•α⁵.
        let p = parse(&fibonacci_prefix(34)).unwrap();
        assert_eq!(
            (p.seed, p.ops.to_string(), p.consumed),
            (Seed::S010, "aaaaa".into(), 34)
        );
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(parse(&w("110")), Err(Error::NotFb(_))));
        assert!(matches!(parse(&w("00")), Err(Error::NoSeed)));
        assert!(matches!(parse(&w("")), Err(Error::NoSeed)));
    }

    #[test]
    fn parse_leaves_tail_unconsumed() {
        // 00101 starts with seed 0010; no F_3 fits, so one letter remains.
        let p = parse(&w("00101")).unwrap();
        assert_eq!((p.seed, p.consumed), (Seed::S0010, 4));
        assert!(p.ops.is_empty());
    }

    #[test]
    fn automaton_walks() {
        let a010 = FifeAutomaton::for_seed(Seed::S010);
        assert_eq!(a010.walk(&ops("bbb")), (State::D, false));
        assert_eq!(a010.walk(&ops("")), (State::A, false));
        assert_eq!(a010.walk(&ops("baa")), (State::B, false));
        assert!(a010.walk(&ops("bbab")).1);

        let a1010 = FifeAutomaton::for_seed(Seed::S1010);
        assert_eq!(a1010.walk(&ops("a")), (State::B, false));

        let a10010 = FifeAutomaton::for_seed(Seed::S10010);
        assert_eq!(a10010.walk(&ops("b")), (State::D, false));
    }

    #[test]
    fn sink_only_reachable_from_c_on_beta() {
        for seed in Seed::ALL {
            let m = FifeAutomaton::for_seed(seed);
            for state in State::ORDER {
                for op in Operator::ALL {
                    if m.step(state, op) == State::Sink {
                        assert!(
                            state == State::Sink || (state == State::C && op == Operator::Beta),
                            "unexpected sink edge from {} in A_{}",
                            state.name(),
                            seed
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dot_export_shape() {
        let dot = FifeAutomaton::for_seed(Seed::S010).dot();
        assert!(dot.contains("a -> a [label=\"a\"]"));
        assert!(dot.contains("c -> e [label=\"b\"]"));
        for seed in Seed::ALL {
            let dot = FifeAutomaton::for_seed(seed).dot();
            let labeled =
                dot.matches("[label=\"a\"]").count() + dot.matches("[label=\"b\"]").count();
            assert_eq!(labeled, 14);
        }
    }

    #[test]
    fn forbidden_factor_examples() {
        assert!(matches_forbidden(&ops("bbab")));
        assert!(!matches_forbidden(&ops("aaaa")));
        assert!(matches_forbidden(&ops("abbbab")));
        assert!(!matches_forbidden(&ops("")));
        assert!(!matches_forbidden(&ops("bab")));
        // Once a forbidden factor is present it stays present.
        assert!(matches_forbidden(&ops("bbabaaaa")));
        assert!(matches_forbidden(&ops("abbabb")));
    }

    #[test]
    fn phi_pow_connects_stages() {
        // φ^{j}(F_2 • f) for f ∈ O starts with F_{j+2}; spot-check the
        // telescoping building block.
        for j in 0..6 {
            for op in Operator::ALL {
                let image = staged("010", 2).apply(op);
                let block = phi_pow(image.word(), j);
                assert!(block.starts_with(&fib_word(j + 2)));
            }
        }
    }
}
