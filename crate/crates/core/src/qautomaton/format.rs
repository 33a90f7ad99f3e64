//! JSON document form of a [`QAutomaton`]:
//!
//! ```json
//! {
//!   "states": ["p", "q"],
//!   "alphabet": ["s"],
//!   "initial": { "p": "1" },
//!   "final": { "q": "1/2" },
//!   "transitions": [["p", "s", "q", "3"]]
//! }
//! ```
//!
//! Weights are written `p/q` or as integers, either as strings or as JSON
//! integers. Absent entries weigh zero. Writing always emits strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::BigRational;
use crate::{Error, Result};

use super::QAutomaton;

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
enum RawWeight {
    Int(i64),
    Text(String),
}

impl RawWeight {
    fn parse(&self) -> Result<BigRational> {
        match self {
            RawWeight::Int(n) => Ok(BigRational::from_integer((*n).into())),
            RawWeight::Text(s) => parse_weight(s),
        }
    }
}

/// Parses `n` or `p/q` (optionally signed) into a canonical rational.
pub fn parse_weight(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let invalid = || Error::InvalidWeight(text.to_owned());
    if let Some((n, d)) = t.split_once('/') {
        let n = num_bigint::BigInt::from_str(n.trim()).map_err(|_| invalid())?;
        let d = num_bigint::BigInt::from_str(d.trim()).map_err(|_| invalid())?;
        if d.is_zero() {
            return Err(invalid());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = num_bigint::BigInt::from_str(t).map_err(|_| invalid())?;
        Ok(BigRational::from_integer(n))
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct AutomatonDoc {
    states: Vec<String>,
    alphabet: Vec<String>,
    #[serde(default)]
    initial: BTreeMap<String, RawWeight>,
    #[serde(default, rename = "final")]
    final_weights: BTreeMap<String, RawWeight>,
    #[serde(default)]
    transitions: Vec<(String, String, String, RawWeight)>,
}

impl QAutomaton {
    pub fn from_json(text: &str) -> Result<QAutomaton> {
        let doc: AutomatonDoc =
            serde_json::from_str(text).map_err(|e| Error::InvalidAutomaton(e.to_string()))?;
        let mut a = QAutomaton::new(doc.states, doc.alphabet)?;
        for (state, w) in &doc.initial {
            a.set_initial(state, w.parse()?)?;
        }
        for (state, w) in &doc.final_weights {
            a.set_final(state, w.parse()?)?;
        }
        for (p, sym, q, w) in &doc.transitions {
            let key = (a.state_index(p)?, a.symbol_index(sym)?, a.state_index(q)?);
            if a.transitions.contains_key(&key) {
                return Err(Error::InvalidAutomaton(format!(
                    "transition ({p}, {sym}, {q}) listed twice"
                )));
            }
            a.set_transition_indexed(key, w.parse()?);
        }
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        let weights = |ws: &[BigRational]| {
            self.states
                .iter()
                .zip(ws)
                .filter(|(_, w)| !w.is_zero())
                .map(|(s, w)| (s.clone(), RawWeight::Text(w.to_string())))
                .collect()
        };
        let doc = AutomatonDoc {
            states: self.states.clone(),
            alphabet: self.alphabet.clone(),
            initial: weights(&self.initial),
            final_weights: weights(&self.final_weights),
            transitions: self
                .transitions()
                .map(|(p, a, q, w)| {
                    (
                        p.to_owned(),
                        a.to_owned(),
                        q.to_owned(),
                        RawWeight::Text(w.to_string()),
                    )
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}
