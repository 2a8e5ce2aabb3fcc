//! Binary words avoiding the factor `11` and all 4⁻-powers.
//!
//! A *4⁻-power* is a word of the form `XXXX⁻` (the fourth power of a non-empty
//! word with its last letter erased), equivalently a word of period `p` and
//! length `4p − 1`. A binary word avoiding both `11` and every 4⁻-power is
//! called *faux-bonacci* (fb for short). The fb words stand in the same
//! relation to the Fibonacci morphism `0 ↦ 01, 1 ↦ 0` that the overlap-free
//! words famously bear to the Thue–Morse morphism, and this crate implements
//! that structure end to end:
//!
//! - [`word`] — word primitives: violation search, fb membership,
//!   lexicographic order, Parikh vectors.
//! - [`morphism`] — the Fibonacci morphism, finite Fibonacci words `F_n`,
//!   the infinite Fibonacci word, and the inverse factorization `w = a·φ(u)`.
//! - [`fife`] — the Fife operator calculus: staged words, the `α`/`β`
//!   operators, parsing fb words into operator sequences, the forbidden
//!   operator-factor language, and the four seed automata.
//! - [`extremal`] — the lexicographically least and greatest infinite fb
//!   words via their fixed-point equations.
//! - [`oracle`] — independent brute-force machinery (exhaustive enumeration,
//!   bounded extendability, greedy extremal search) used as ground truth.
//! - [`verify`] — the exhaustive property checks tying everything together,
//!   runnable from the CLI.
//!
//! With the default `parallel` feature the heavy sweeps shard across threads
//! via rayon; disabling it leaves a dependency-free sequential core with the
//! same results.

pub mod extremal;
pub mod fife;
pub mod morphism;
pub mod oracle;
pub mod verify;
pub mod word;

mod exec;

pub use extremal::ExtremalKind;
pub use fife::{FifeAutomaton, Operator, OperatorWord, Seed, StagedWord};
pub use word::{BinaryWord, ParikhVector, Violation, ViolationKind};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A word string contained a character other than '0' or '1'.
    #[error("invalid letter {found:?} at position {position}; words are over {{0,1}}")]
    InvalidLetter { found: char, position: usize },
    /// An operator string contained a character other than a/b (or α/β).
    #[error("invalid operator {found:?} at position {position}; operators are a/α and b/β")]
    InvalidOperator { found: char, position: usize },
    /// A seed string was not one of 010, 0010, 1010, 10010.
    #[error("invalid seed {0:?}; expected one of 010, 0010, 1010, 10010")]
    InvalidSeed(String),
    /// The morphism decode is only defined on 11-free input.
    #[error("word contains the factor 11 at position {position}; decode is undefined")]
    ContainsFactor11 { position: usize },
    /// The pullback of a prefix through the morphism needs stage n ≥ 2.
    #[error("stage {0} is too small; the pullback requires n ≥ 2")]
    StageTooSmall(usize),
    /// The image prefix ends inside a φ-token; this cannot happen when the
    /// input word is fb.
    #[error("prefix ending in F_{0} does not align to a phi-image boundary")]
    PullbackMisaligned(usize),
    /// A staged word failed the staging invariant.
    #[error("not a staged word: {reason}")]
    InvalidStagedWord { reason: String },
    /// The word handed to the parser is not fb.
    #[error("word is not fb: {0}")]
    NotFb(Violation),
    /// The parser found no occurrence of 010 to seed from.
    #[error("word contains no occurrence of 010; nothing to parse")]
    NoSeed,
    /// The parser hit a prefix that matches neither candidate extension.
    #[error(
        "prefix of length {prefix_len} ending in F_{stage} is neither an α- nor a β-extension"
    )]
    UnparsablePrefix { prefix_len: usize, stage: usize },
    /// An exhaustive-search request exceeded the configured cap.
    #[error("length {requested} exceeds the search cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    /// Greedy extremal search found no viable letter (should not happen).
    #[error("no extendable letter at position {position}; lookahead is inconsistent")]
    NoExtension { position: usize },
    /// Relation checks need a minimum prefix length.
    #[error("prefix length {0} is below the minimum of {1}")]
    PrefixTooShort(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
