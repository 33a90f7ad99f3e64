//! Weighted automata over the rationals.
//!
//! A [`QAutomaton`] assigns rational weights to initial states, transitions
//! and final states. The value of a word is the sum over all runs of the
//! product of the weights along the run, i.e. `α · M(w) · η` for the
//! automaton's [`LinearRep`]. Equivalence is decided through the forward
//! space of the difference automaton (see [`equivalent`]).

mod format;
mod forward;
mod linear;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::linalg::BigRational;
use crate::{Error, Result};

pub use format::parse_weight;
pub use forward::{
    equivalent, equivalent_reps, forward_basis, is_empty, EquivalenceResult, ForwardBasis, Verdict,
};
pub use linear::{difference, eval_word, to_linear_rep, LinearRep};

/// A word over an automaton's alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `symbol` repeated `n` times.
    pub fn power(symbol: &str, n: usize) -> Self {
        Word(vec![symbol.to_owned(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }
}

/// `ε` for the empty word; symbols are juxtaposed when all are single
/// characters and space-separated otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.iter().all(|s| s.chars().count() == 1) {
            ""
        } else {
            " "
        };
        f.write_str(&self.0.join(sep))
    }
}

impl<S: Into<String>> FromIterator<S> for Word {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Word(iter.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QAutomaton {
    states: Vec<String>,
    alphabet: Vec<String>,
    state_index: HashMap<String, usize>,
    symbol_index: HashMap<String, usize>,
    /// Nonzero weights only, keyed by (from, symbol, to).
    transitions: BTreeMap<(usize, usize, usize), BigRational>,
    initial: Vec<BigRational>,
    final_weights: Vec<BigRational>,
}

fn index_names(names: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::InvalidAutomaton(format!("empty {what} name")));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::InvalidAutomaton(format!(
                "{what} `{name}` declared twice"
            )));
        }
    }
    Ok(index)
}

impl QAutomaton {
    /// An automaton with all weights zero.
    pub fn new<S: Into<String>, T: Into<String>>(
        states: impl IntoIterator<Item = S>,
        alphabet: impl IntoIterator<Item = T>,
    ) -> Result<Self> {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        let alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        let state_index = index_names(&states, "state")?;
        let symbol_index = index_names(&alphabet, "symbol")?;
        let n = states.len();
        Ok(QAutomaton {
            states,
            alphabet,
            state_index,
            symbol_index,
            transitions: BTreeMap::new(),
            initial: vec![BigRational::zero(); n],
            final_weights: vec![BigRational::zero(); n],
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_index(&self, state: &str) -> Result<usize> {
        self.state_index
            .get(state)
            .copied()
            .ok_or_else(|| Error::UnknownState(state.to_owned()))
    }

    pub fn symbol_index(&self, symbol: &str) -> Result<usize> {
        self.symbol_index
            .get(symbol)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_owned()))
    }

    pub fn set_initial(&mut self, state: &str, weight: BigRational) -> Result<()> {
        let i = self.state_index(state)?;
        self.initial[i] = weight;
        Ok(())
    }

    pub fn set_final(&mut self, state: &str, weight: BigRational) -> Result<()> {
        let i = self.state_index(state)?;
        self.final_weights[i] = weight;
        Ok(())
    }

    /// Sets `δ(from, symbol, to)`; a zero weight removes the transition.
    pub fn set_transition(
        &mut self,
        from: &str,
        symbol: &str,
        to: &str,
        weight: BigRational,
    ) -> Result<()> {
        let key = (
            self.state_index(from)?,
            self.symbol_index(symbol)?,
            self.state_index(to)?,
        );
        self.set_transition_indexed(key, weight);
        Ok(())
    }

    pub(crate) fn set_transition_indexed(
        &mut self,
        key: (usize, usize, usize),
        weight: BigRational,
    ) {
        if weight.is_zero() {
            self.transitions.remove(&key);
        } else {
            self.transitions.insert(key, weight);
        }
    }

    pub(crate) fn set_initial_indexed(&mut self, state: usize, weight: BigRational) {
        self.initial[state] = weight;
    }

    pub(crate) fn set_final_indexed(&mut self, state: usize, weight: BigRational) {
        self.final_weights[state] = weight;
    }

    pub fn initial(&self, state: &str) -> Result<&BigRational> {
        Ok(&self.initial[self.state_index(state)?])
    }

    pub fn final_weight(&self, state: &str) -> Result<&BigRational> {
        Ok(&self.final_weights[self.state_index(state)?])
    }

    /// `δ(from, symbol, to)`, zero when absent.
    pub fn transition(&self, from: &str, symbol: &str, to: &str) -> Result<BigRational> {
        let key = (
            self.state_index(from)?,
            self.symbol_index(symbol)?,
            self.state_index(to)?,
        );
        Ok(self
            .transitions
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    pub(crate) fn initial_weights(&self) -> &[BigRational] {
        &self.initial
    }

    pub(crate) fn final_weights(&self) -> &[BigRational] {
        &self.final_weights
    }

    /// Nonzero transitions as `(from, symbol, to, weight)` by index.
    pub(crate) fn transition_entries(
        &self,
    ) -> impl Iterator<Item = (usize, usize, usize, &BigRational)> {
        self.transitions.iter().map(|(&(p, a, q), w)| (p, a, q, w))
    }

    /// Nonzero transitions by name.
    pub fn transitions(&self) -> impl Iterator<Item = (&str, &str, &str, &BigRational)> {
        self.transition_entries().map(|(p, a, q, w)| {
            (
                self.states[p].as_str(),
                self.alphabet[a].as_str(),
                self.states[q].as_str(),
                w,
            )
        })
    }

    /// Restriction to the given states (kept in their current order).
    pub fn restrict(&self, keep: &[usize]) -> QAutomaton {
        let mut renumber = vec![None; self.states.len()];
        for (new, &old) in keep.iter().enumerate() {
            renumber[old] = Some(new);
        }
        let mut out = QAutomaton::new(
            keep.iter().map(|&i| self.states[i].clone()),
            self.alphabet.clone(),
        )
        .expect("subset of valid names");
        for (new, &old) in keep.iter().enumerate() {
            out.initial[new] = self.initial[old].clone();
            out.final_weights[new] = self.final_weights[old].clone();
        }
        for (p, a, q, w) in self.transition_entries() {
            if let (Some(p), Some(q)) = (renumber[p], renumber[q]) {
                out.transitions.insert((p, a, q), w.clone());
            }
        }
        out
    }

    /// Drops every state from which no state with a nonzero final weight is
    /// reachable. Such states contribute nothing to any word's value.
    pub fn trim_coaccessible(&self) -> QAutomaton {
        let n = self.states.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (p, _, q, _) in self.transition_entries() {
            preds[q].push(p);
        }
        let mut seen: HashSet<usize> = (0..n)
            .filter(|&i| !self.final_weights[i].is_zero())
            .collect();
        let mut stack: Vec<usize> = seen.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        let keep: Vec<usize> = (0..n).filter(|i| seen.contains(i)).collect();
        self.restrict(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn word_display() {
        assert_eq!(Word::empty().to_string(), "ε");
        assert_eq!(Word::power("s", 3).to_string(), "sss");
        assert_eq!(Word::from_iter(["ab", "c"]).to_string(), "ab c");
    }

    #[test]
    fn rejects_duplicates_and_unknowns() {
        assert!(QAutomaton::new(["p", "p"], ["s"]).is_err());
        assert!(QAutomaton::new(["p"], ["s", "s"]).is_err());
        let mut a = QAutomaton::new(["p"], ["s"]).unwrap();
        assert_eq!(
            a.set_initial("q", rat(1)).unwrap_err(),
            Error::UnknownState("q".into())
        );
        assert_eq!(
            a.set_transition("p", "t", "p", rat(1)).unwrap_err(),
            Error::UnknownSymbol("t".into())
        );
    }

    #[test]
    fn zero_weight_removes_transition() {
        let mut a = QAutomaton::new(["p", "q"], ["s"]).unwrap();
        a.set_transition("p", "s", "q", rat(3)).unwrap();
        assert_eq!(a.transitions().count(), 1);
        a.set_transition("p", "s", "q", rat(0)).unwrap();
        assert_eq!(a.transitions().count(), 0);
        assert_eq!(a, QAutomaton::new(["p", "q"], ["s"]).unwrap());
    }

    #[test]
    fn trim_keeps_only_coaccessible_states() {
        let mut a = QAutomaton::new(["x", "y", "z", "w"], ["s"]).unwrap();
        a.set_transition("x", "s", "y", rat(1)).unwrap();
        a.set_transition("y", "s", "z", rat(1)).unwrap();
        a.set_transition("z", "s", "w", rat(1)).unwrap();
        a.set_final("z", rat(1)).unwrap();
        for s in ["x", "y", "z", "w"] {
            a.set_initial(s, rat(1)).unwrap();
        }
        let t = a.trim_coaccessible();
        assert_eq!(t.states(), ["x", "y", "z"]);
        for k in 0..6 {
            let w = Word::power("s", k);
            assert_eq!(
                eval_word(&to_linear_rep(&a), &w).unwrap(),
                eval_word(&to_linear_rep(&t), &w).unwrap()
            );
        }
    }
}
