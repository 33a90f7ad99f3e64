use std::collections::VecDeque;

use num_traits::Zero;

use crate::linalg::{BigRational, EchelonSpan, RatVector};
use crate::Result;

use super::{difference, to_linear_rep, LinearRep, QAutomaton, Word};

/// Basis of the forward space `span{ α · M(w) | w ∈ Σ* }` together with a
/// generating word for each vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardBasis {
    pub vectors: Vec<RatVector>,
    pub words: Vec<Word>,
}

impl ForwardBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Breadth-first exploration of the forward space. The worklist starts at
/// `ε` and is FIFO; every accepted word is extended by each symbol in
/// alphabet order. On a unary alphabet the accepted words are `ε, s, s², …`.
struct ForwardSpace<'a> {
    rep: &'a LinearRep,
    span: EchelonSpan,
    /// (parent basis index, symbol); `None` is the seed `ε`.
    queue: VecDeque<Option<(usize, usize)>>,
    vectors: Vec<RatVector>,
    words: Vec<Vec<usize>>,
}

impl<'a> ForwardSpace<'a> {
    fn new(rep: &'a LinearRep) -> Self {
        ForwardSpace {
            rep,
            span: EchelonSpan::new(),
            queue: VecDeque::from([None]),
            vectors: Vec::new(),
            words: Vec::new(),
        }
    }

    /// Advances until the next independent vector is found; returns its
    /// basis index.
    fn next_basis_vector(&mut self) -> Option<usize> {
        while let Some(item) = self.queue.pop_front() {
            let (vector, word) = match item {
                None => (self.rep.alpha().clone(), Vec::new()),
                Some((parent, symbol)) => {
                    let v = self.vectors[parent]
                        .vec_mat(&self.rep.matrices()[symbol])
                        .expect("dimensions checked at construction");
                    let mut w = self.words[parent].clone();
                    w.push(symbol);
                    (v, w)
                }
            };
            if !self.span.insert(vector.entries()) {
                continue;
            }
            let index = self.vectors.len();
            self.vectors.push(vector);
            self.words.push(word);
            self.queue
                .extend((0..self.rep.alphabet().len()).map(|a| Some((index, a))));
            return Some(index);
        }
        None
    }

    fn into_basis(self) -> ForwardBasis {
        let rep = self.rep;
        ForwardBasis {
            vectors: self.vectors,
            words: self
                .words
                .iter()
                .map(|w| rep.word_from_indices(w))
                .collect(),
        }
    }
}

pub fn forward_basis(r: &LinearRep) -> ForwardBasis {
    let mut space = ForwardSpace::new(r);
    while space.next_basis_vector().is_some() {}
    space.into_basis()
}

/// Finds the first basis vector (in worklist order) not orthogonal to `η`
/// and returns its generating word.
fn first_non_orthogonal(r: &LinearRep) -> Option<Word> {
    let mut space = ForwardSpace::new(r);
    while let Some(i) = space.next_basis_vector() {
        let value = space.vectors[i].dot(r.eta()).expect("same dimension");
        if !value.is_zero() {
            return Some(r.word_from_indices(&space.words[i]));
        }
    }
    None
}

/// Whether the series is identically zero: every forward basis vector is
/// orthogonal to `η`.
pub fn is_empty(r: &LinearRep) -> bool {
    first_non_orthogonal(r).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceResult {
    pub verdict: Verdict,
    /// A word the two automata disagree on; present iff not equivalent.
    pub witness: Option<Word>,
    /// Values of the first and second automaton on the witness.
    pub values: Option<(BigRational, BigRational)>,
}

impl EquivalenceResult {
    pub fn is_equivalent(&self) -> bool {
        self.verdict == Verdict::Equivalent
    }
}

/// Decides `⟦r1⟧ = ⟦r2⟧` via emptiness of the difference automaton. A
/// witness, when found, has length at most `r1.dim() + r2.dim() - 1`.
pub fn equivalent_reps(r1: &LinearRep, r2: &LinearRep) -> Result<EquivalenceResult> {
    let diff = difference(r1, r2)?;
    Ok(match first_non_orthogonal(&diff) {
        None => EquivalenceResult {
            verdict: Verdict::Equivalent,
            witness: None,
            values: None,
        },
        Some(w) => {
            let values = (r1.eval(&w)?, r2.eval(&w)?);
            debug_assert_ne!(values.0, values.1);
            EquivalenceResult {
                verdict: Verdict::NotEquivalent,
                witness: Some(w),
                values: Some(values),
            }
        }
    })
}

pub fn equivalent(a1: &QAutomaton, a2: &QAutomaton) -> Result<EquivalenceResult> {
    equivalent_reps(&to_linear_rep(a1), &to_linear_rep(a2))
}
