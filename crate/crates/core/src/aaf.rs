//! Argumentation frameworks: arguments, attacks, and the two usual text
//! encodings.
//!
//! APX:
//!
//! ```text
//! % comment
//! arg(a).
//! arg(b).
//! att(a,b).
//! ```
//!
//! TGF: one vertex per line (`<id> [label]`), a `#` line, then one edge
//! per line (`<from> <to> [label]`). A vertex is named by its label when
//! present, otherwise by its id.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_traits::One;

use crate::linalg::RatMatrix;
use crate::{Error, Result};

/// A finite digraph of named arguments. Argument order is the order of first
/// declaration and fixes matrix indices everywhere.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArgFramework {
    arguments: Vec<String>,
    index: HashMap<String, usize>,
    attacks: BTreeSet<(usize, usize)>,
}

/// An argument together with its matrix index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArgIndex<'a> {
    pub name: &'a str,
    pub index: usize,
}

impl ArgFramework {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a framework from argument names and attacks by name.
    pub fn from_parts<S: AsRef<str>>(arguments: &[S], attacks: &[(S, S)]) -> Result<Self> {
        let mut af = ArgFramework::new();
        for a in arguments {
            af.add_argument(a.as_ref())?;
        }
        for (a, b) in attacks {
            af.add_attack(a.as_ref(), b.as_ref())?;
        }
        Ok(af)
    }

    /// Declares a new argument. Names must be non-empty and unique.
    pub fn add_argument(&mut self, name: &str) -> Result<usize> {
        if name.is_empty() {
            return Err(Error::Syntax {
                line: 0,
                message: "empty argument name".into(),
            });
        }
        if self.index.contains_key(name) {
            return Err(Error::DuplicateArgument {
                line: 0,
                name: name.to_owned(),
            });
        }
        let i = self.arguments.len();
        self.arguments.push(name.to_owned());
        self.index.insert(name.to_owned(), i);
        Ok(i)
    }

    /// Adds an attack between existing arguments. Duplicates are ignored.
    pub fn add_attack(&mut self, attacker: &str, target: &str) -> Result<()> {
        let a = self.index_of(attacker)?;
        let b = self.index_of(target)?;
        self.attacks.insert((a, b));
        Ok(())
    }

    fn ensure_argument(&mut self, name: &str) -> usize {
        match self.index.get(name) {
            Some(&i) => i,
            None => {
                let i = self.arguments.len();
                self.arguments.push(name.to_owned());
                self.index.insert(name.to_owned(), i);
                i
            }
        }
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn argument(&self, index: usize) -> &str {
        &self.arguments[index]
    }

    pub fn arg_indices(&self) -> impl Iterator<Item = ArgIndex<'_>> {
        self.arguments
            .iter()
            .enumerate()
            .map(|(index, name)| ArgIndex { name, index })
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(name.to_owned()))
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    /// Attacks as index pairs, sorted.
    pub fn attack_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    /// Attacks by name, sorted by index pair.
    pub fn attacks(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attacks
            .iter()
            .map(|&(a, b)| (self.arguments[a].as_str(), self.arguments[b].as_str()))
    }

    pub fn has_attack(&self, attacker: usize, target: usize) -> bool {
        self.attacks.contains(&(attacker, target))
    }

    /// In-neighbour indices of `target`, ascending.
    pub fn attacker_indices(&self, target: usize) -> Vec<usize> {
        self.attacks
            .iter()
            .filter(|&&(_, b)| b == target)
            .map(|&(a, _)| a)
            .collect()
    }

    /// In-neighbour lists for every argument.
    pub fn in_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for &(a, b) in &self.attacks {
            out[b].push(a);
        }
        out
    }

    /// Attackers of `x` by name, in stored order.
    pub fn attackers(&self, x: &str) -> Result<BTreeSet<&str>> {
        let t = self.index_of(x)?;
        Ok(self
            .attacker_indices(t)
            .into_iter()
            .map(|a| self.arguments[a].as_str())
            .collect())
    }

    /// 0/1 adjacency matrix in stored order; entry `(i, j)` is 1 iff
    /// argument `i` attacks argument `j`.
    pub fn adjacency_matrix(&self) -> RatMatrix {
        let n = self.len();
        let mut m = RatMatrix::zeros(n, n);
        for &(a, b) in &self.attacks {
            m.set(a, b, One::one());
        }
        m
    }

    /// Name-union of two frameworks: `self`'s arguments first, then the
    /// new names of `other` in their order. Equal names are the same argument.
    pub fn union(&self, other: &ArgFramework) -> ArgFramework {
        let mut out = self.clone();
        for name in &other.arguments {
            out.ensure_argument(name);
        }
        for (a, b) in other.attacks() {
            let (a, b) = (out.index[a], out.index[b]);
            out.attacks.insert((a, b));
        }
        out
    }

    /// The sub-framework induced by the arguments with a walk to `target`
    /// (including `target` itself), in stored order.
    pub fn ancestors_of(&self, target: usize) -> Vec<usize> {
        let incoming = self.in_neighbours();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![target];
        seen[target] = true;
        while let Some(v) = stack.pop() {
            for &u in &incoming[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for &(_, b) in &self.attacks {
            indegree[b] += 1;
        }
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &self.attacks {
            out[a].push(b);
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut done = 0;
        while let Some(v) = ready.pop() {
            done += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        done == n
    }

    /// APX text in stored order; parses back to an identical framework.
    pub fn to_apx(&self) -> String {
        let mut s = String::new();
        for a in &self.arguments {
            let _ = writeln!(s, "arg({a}).");
        }
        for (a, b) in self.attacks() {
            let _ = writeln!(s, "att({a},{b}).");
        }
        s
    }

    /// TGF text using argument names as vertex ids.
    pub fn to_tgf(&self) -> String {
        let mut s = String::new();
        for a in &self.arguments {
            let _ = writeln!(s, "{a}");
        }
        s.push_str("#\n");
        for (a, b) in self.attacks() {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }
}

pub fn union(f1: &ArgFramework, f2: &ArgFramework) -> ArgFramework {
    f1.union(f2)
}

pub fn attackers<'a>(f: &'a ArgFramework, x: &str) -> Result<BTreeSet<&'a str>> {
    f.attackers(x)
}

pub fn adjacency_matrix(f: &ArgFramework) -> RatMatrix {
    f.adjacency_matrix()
}

fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | ',' | '.' | '%')
}

/// Cursor over APX text that tracks line numbers and skips whitespace and
/// `%` comments.
struct ApxLexer<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> ApxLexer<'a> {
    fn skip_trivia(&mut self) {
        loop {
            let trimmed = self
                .rest
                .trim_start_matches(|c: char| c.is_whitespace() && c != '\n');
            self.rest = trimmed;
            if let Some(r) = self.rest.strip_prefix('\n') {
                self.line += 1;
                self.rest = r;
            } else if self.rest.starts_with('%') {
                let end = self.rest.find('\n').unwrap_or(self.rest.len());
                self.rest = &self.rest[end..];
            } else {
                return;
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_trivia();
        match self.rest.strip_prefix(c) {
            Some(r) => {
                self.rest = r;
                Ok(())
            }
            None => Err(self.error(format!("expected `{c}`, found {}", self.peek_desc()))),
        }
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_trivia();
        let end = self
            .rest
            .find(|c: char| !is_name_char(c))
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.error(format!("expected a name, found {}", self.peek_desc())));
        }
        let (name, rest) = self.rest.split_at(end);
        self.rest = rest;
        Ok(name)
    }

    fn peek_desc(&self) -> String {
        match self.rest.chars().next() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_trivia();
        self.rest.is_empty()
    }
}

/// Parses APX facts `arg(x).` and `att(x,y).`.
pub fn parse_apx(text: &str) -> Result<ArgFramework> {
    let mut lex = ApxLexer {
        rest: text,
        line: 1,
    };
    let mut af = ArgFramework::new();
    let mut pending: Vec<(usize, String, String)> = Vec::new();
    while !lex.at_end() {
        let line = lex.line;
        let keyword = lex.name()?;
        match keyword {
            "arg" => {
                lex.expect('(')?;
                let name = lex.name()?;
                lex.expect(')')?;
                lex.expect('.')?;
                if af.contains(name) {
                    return Err(Error::DuplicateArgument {
                        line,
                        name: name.to_owned(),
                    });
                }
                af.ensure_argument(name);
            }
            "att" => {
                lex.expect('(')?;
                let a = lex.name()?;
                lex.expect(',')?;
                let b = lex.name()?;
                lex.expect(')')?;
                lex.expect('.')?;
                pending.push((line, a.to_owned(), b.to_owned()));
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    message: format!("unknown fact `{other}`"),
                })
            }
        }
    }
    // attacks may precede the declarations they mention
    for (line, a, b) in pending {
        for name in [&a, &b] {
            if !af.contains(name) {
                return Err(Error::UndeclaredArgument {
                    line,
                    name: name.clone(),
                });
            }
        }
        af.add_attack(&a, &b)?;
    }
    Ok(af)
}

/// Parses trivial graph format.
pub fn parse_tgf(text: &str) -> Result<ArgFramework> {
    if !text.trim().is_empty() && !text.lines().any(|l| l.trim() == "#") {
        return Err(Error::Syntax {
            line: text.lines().count(),
            message: "missing `#` separator".into(),
        });
    }
    let mut af = ArgFramework::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut in_edges = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_edges {
                return Err(Error::Syntax {
                    line,
                    message: "second `#` separator".into(),
                });
            }
            in_edges = true;
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let first = fields.next().expect("non-empty line");
        if !in_edges {
            let name = fields.collect::<Vec<_>>().join(" ");
            let name = if name.is_empty() {
                first.to_owned()
            } else {
                name
            };
            if ids.contains_key(first) || af.contains(&name) {
                return Err(Error::DuplicateArgument { line, name });
            }
            let i = af.ensure_argument(&name);
            ids.insert(first.to_owned(), i);
        } else {
            let Some(second) = fields.next() else {
                return Err(Error::Syntax {
                    line,
                    message: "edge needs two vertex ids".into(),
                });
            };
            let lookup = |id: &str| {
                ids.get(id)
                    .copied()
                    .ok_or_else(|| Error::UndeclaredArgument {
                        line,
                        name: id.to_owned(),
                    })
            };
            let (a, b) = (lookup(first)?, lookup(second)?);
            af.attacks.insert((a, b));
        }
    }
    Ok(af)
}
