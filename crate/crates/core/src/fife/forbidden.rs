//! Factor matching for the forbidden operator language
//! `a*b(aa + ab + baa + bbb*aa)*(bab + bbb*ab)`.
//!
//! The matcher is compiled from that expression by Thompson construction
//! and subset construction, deliberately sharing nothing with the Fife
//! automaton tables so the two can be checked against each other.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::sync::OnceLock;

use super::{Operator, OperatorWord};

enum Pattern {
    Sym(Operator),
    Seq(Vec<Pattern>),
    Alt(Vec<Pattern>),
    Star(Box<Pattern>),
}

fn sym(op: Operator) -> Pattern {
    Pattern::Sym(op)
}

fn lit(s: &str) -> Pattern {
    Pattern::Seq(
        s.chars()
            .map(|c| match c {
                'a' => sym(Operator::Alpha),
                'b' => sym(Operator::Beta),
                _ => unreachable!("literals are over a/b"),
            })
            .collect(),
    )
}

/// `a*b(aa + ab + baa + bbb*aa)*(bab + bbb*ab)`
fn forbidden_expression() -> Pattern {
    let middle = Pattern::Alt(vec![
        lit("aa"),
        lit("ab"),
        lit("baa"),
        Pattern::Seq(vec![
            lit("bb"),
            Pattern::Star(Box::new(lit("b"))),
            lit("aa"),
        ]),
    ]);
    let tail = Pattern::Alt(vec![
        lit("bab"),
        Pattern::Seq(vec![
            lit("bb"),
            Pattern::Star(Box::new(lit("b"))),
            lit("ab"),
        ]),
    ]);
    Pattern::Seq(vec![
        Pattern::Star(Box::new(sym(Operator::Alpha))),
        sym(Operator::Beta),
        Pattern::Star(Box::new(middle)),
        tail,
    ])
}

/// Thompson NFA over the two-letter alphabet.
struct Nfa {
    eps: Vec<Vec<usize>>,
    step: Vec<[Vec<usize>; 2]>,
    start: usize,
    accept: usize,
}

impl Nfa {
    fn compile(pattern: &Pattern) -> Nfa {
        let mut nfa = Nfa {
            eps: Vec::new(),
            step: Vec::new(),
            start: 0,
            accept: 0,
        };
        let (start, accept) = nfa.fragment(pattern);
        nfa.start = start;
        nfa.accept = accept;
        nfa
    }

    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.step.push([Vec::new(), Vec::new()]);
        self.eps.len() - 1
    }

    fn fragment(&mut self, pattern: &Pattern) -> (usize, usize) {
        match pattern {
            Pattern::Sym(op) => {
                let s = self.state();
                let t = self.state();
                self.step[s][op.index()].push(t);
                (s, t)
            }
            Pattern::Seq(parts) => {
                let s = self.state();
                let mut cur = s;
                for part in parts {
                    let (ps, pt) = self.fragment(part);
                    self.eps[cur].push(ps);
                    cur = pt;
                }
                (s, cur)
            }
            Pattern::Alt(parts) => {
                let s = self.state();
                let t = self.state();
                for part in parts {
                    let (ps, pt) = self.fragment(part);
                    self.eps[s].push(ps);
                    self.eps[pt].push(t);
                }
                (s, t)
            }
            Pattern::Star(inner) => {
                let s = self.state();
                let (ps, pt) = self.fragment(inner);
                self.eps[s].push(ps);
                self.eps[pt].push(s);
                (s, s)
            }
        }
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
}

/// DFA answering "does some factor of the input lie in the expression?",
/// i.e. the subset construction of (a+b)* followed by the expression.
pub(crate) struct FactorMatcher {
    table: Vec<[usize; 2]>,
    accepting: Vec<bool>,
    start: usize,
}

impl FactorMatcher {
    fn build() -> FactorMatcher {
        let nfa = Nfa::compile(&forbidden_expression());
        let mut start_set = BTreeSet::from([nfa.start]);
        nfa.closure(&mut start_set);

        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        let mut table: Vec<[usize; 2]> = Vec::new();
        let key: Vec<usize> = start_set.iter().copied().collect();
        ids.insert(key, 0);
        sets.push(start_set);
        table.push([usize::MAX, usize::MAX]);

        let mut next = 0;
        while next < sets.len() {
            for letter in 0..2 {
                let mut moved = BTreeSet::new();
                for &s in &sets[next] {
                    moved.extend(&nfa.step[s][letter]);
                }
                // Restart a match attempt at every position: keep the NFA
                // start alive, which is the (a+b)* prefix loop.
                moved.insert(nfa.start);
                nfa.closure(&mut moved);
                let key: Vec<usize> = moved.iter().copied().collect();
                let id = *ids.entry(key).or_insert_with(|| {
                    sets.push(moved);
                    table.push([usize::MAX, usize::MAX]);
                    sets.len() - 1
                });
                table[next][letter] = id;
            }
            next += 1;
        }

        let accepting = sets.iter().map(|set| set.contains(&nfa.accept)).collect();
        FactorMatcher {
            table,
            accepting,
            start: 0,
        }
    }

    pub(crate) fn matches_factor(&self, ops: &[Operator]) -> bool {
        let mut state = self.start;
        if self.accepting[state] {
            return true;
        }
        for op in ops {
            state = self.table[state][op.index()];
            if self.accepting[state] {
                return true;
            }
        }
        false
    }
}

fn matcher() -> &'static FactorMatcher {
    static MATCHER: OnceLock<FactorMatcher> = OnceLock::new();
    MATCHER.get_or_init(FactorMatcher::build)
}

/// True iff some factor of `f` lies in the forbidden operator language.
pub fn matches_forbidden(f: &OperatorWord) -> bool {
    matcher().matches_factor(f.ops())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dfa_is_total_and_modest() {
        let m = matcher();
        assert!(m.table.len() < 64, "subset DFA blew up: {}", m.table.len());
        for row in &m.table {
            assert!(row[0] < m.table.len() && row[1] < m.table.len());
        }
        assert!(!m.accepting[m.start]);
    }

    #[test]
    fn shortest_forbidden_word_has_length_four() {
        for k in 0..=4usize {
            let hits = (0..1u64 << k)
                .filter(|&i| {
                    let f = OperatorWord::from_index(k, i);
                    matcher().matches_factor(f.ops())
                })
                .count();
            if k < 4 {
                assert_eq!(hits, 0, "no forbidden factor fits in {k} letters");
            }
            if k == 4 {
                // Exactly bbab.
                assert_eq!(hits, 1);
                assert!(matcher().matches_factor(OperatorWord::from_index(4, 0b1101).ops()));
            }
        }
    }
}
