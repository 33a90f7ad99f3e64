use std::collections::HashSet;

use crate::linalg::{BigRational, RatMatrix, RatVector};
use crate::{Error, Result};

use super::{QAutomaton, Word};

/// Matrix form `⟨α, M, η⟩` of an automaton: `α` is the initial row vector,
/// `M(a)[i][j] = δ(qᵢ, a, qⱼ)` and `η` the final column vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep {
    alphabet: Vec<String>,
    alpha: RatVector,
    matrices: Vec<RatMatrix>,
    eta: RatVector,
}

impl LinearRep {
    /// Checks that every piece has dimension `alpha.len()`.
    pub fn new(
        alphabet: Vec<String>,
        alpha: RatVector,
        matrices: Vec<RatMatrix>,
        eta: RatVector,
    ) -> Result<Self> {
        let n = alpha.len();
        let mismatch = |what: &str, got: String| Error::DimensionMismatch {
            op: "linear representation",
            left: format!("dimension {n}"),
            right: format!("{what} {got}"),
        };
        if eta.len() != n {
            return Err(mismatch("eta of length", eta.len().to_string()));
        }
        if matrices.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton(format!(
                "{} symbols but {} matrices",
                alphabet.len(),
                matrices.len()
            )));
        }
        for m in &matrices {
            if m.rows() != n || m.cols() != n {
                return Err(mismatch("matrix", format!("{}x{}", m.rows(), m.cols())));
            }
        }
        Ok(LinearRep {
            alphabet,
            alpha: RatVector::row(alpha.into_entries()),
            matrices,
            eta: RatVector::column(eta.into_entries()),
        })
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alpha(&self) -> &RatVector {
        &self.alpha
    }

    pub fn eta(&self) -> &RatVector {
        &self.eta
    }

    pub fn matrices(&self) -> &[RatMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, symbol: &str) -> Result<&RatMatrix> {
        Ok(&self.matrices[self.symbol_index(symbol)?])
    }

    pub(crate) fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_owned()))
    }

    pub(crate) fn word_indices(&self, w: &Word) -> Result<Vec<usize>> {
        w.symbols().iter().map(|s| self.symbol_index(s)).collect()
    }

    pub(crate) fn word_from_indices(&self, indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| self.alphabet[i].clone()).collect())
    }

    /// `α · M(w)`.
    pub fn forward_vector(&self, w: &Word) -> Result<RatVector> {
        let mut v = self.alpha.clone();
        for a in self.word_indices(w)? {
            v = v.vec_mat(&self.matrices[a])?;
        }
        Ok(v)
    }

    pub fn eval(&self, w: &Word) -> Result<BigRational> {
        self.forward_vector(w)?.dot(&self.eta)
    }
}

pub fn to_linear_rep(a: &QAutomaton) -> LinearRep {
    let n = a.state_count();
    let mut matrices = vec![RatMatrix::zeros(n, n); a.alphabet().len()];
    for (p, sym, q, w) in a.transition_entries() {
        matrices[sym].set(p, q, w.clone());
    }
    LinearRep {
        alphabet: a.alphabet().to_vec(),
        alpha: RatVector::row(a.initial_weights().to_vec()),
        matrices,
        eta: RatVector::column(a.final_weights().to_vec()),
    }
}

/// `⟦A⟧(w) = α · M(w) · η`; the empty word gives `α · η`.
pub fn eval_word(r: &LinearRep, w: &Word) -> Result<BigRational> {
    r.eval(w)
}

/// Parallel composition with the second automaton's initial weights
/// negated: `α = [α₁ −α₂]`, `M(a) = diag(M₁(a), M₂(a))`, `η = [η₁; η₂]`.
/// Its series is `⟦r1⟧ − ⟦r2⟧`.
///
/// The alphabets must be equal as sets; the result uses `r1`'s order.
pub fn difference(r1: &LinearRep, r2: &LinearRep) -> Result<LinearRep> {
    let s1: HashSet<&String> = r1.alphabet.iter().collect();
    let s2: HashSet<&String> = r2.alphabet.iter().collect();
    if s1 != s2 {
        return Err(Error::AlphabetMismatch {
            left: r1.alphabet.clone(),
            right: r2.alphabet.clone(),
        });
    }
    let matrices = r1
        .alphabet
        .iter()
        .zip(&r1.matrices)
        .map(|(sym, m1)| {
            let m2 = r2.matrix(sym).expect("same alphabet");
            RatMatrix::block_diagonal(m1, m2)
        })
        .collect();
    Ok(LinearRep {
        alphabet: r1.alphabet.clone(),
        alpha: r1.alpha.concat(&r2.alpha.neg()),
        matrices,
        eta: r1.eta.concat(&r2.eta),
    })
}
