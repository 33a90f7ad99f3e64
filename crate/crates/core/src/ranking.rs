//! The discussion-based ranking semantics.
//!
//! The discussion count of `x` is the sequence `Dis₁(x), Dis₂(x), …` with
//! `Disᵢ(x) = -|Wⁱₓ|` for odd `i` and `+|Wⁱₓ|` for even `i`, where `Wⁱₓ` are
//! the walks of length `i` ending in `x`. Arguments are ranked by
//! lexicographic order of these sequences, larger being stronger.
//!
//! If two discussion counts differ at all, they differ at some index
//! `i ≤ 2|A| - 1`, so every procedure here scans exactly that prefix.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::aaf::ArgFramework;
use crate::walks::{column_sum_levels, rational_to_count, signed, MatrixPowers};
use crate::{Error, Result};

/// Length of the prefix that decides every comparison: `2|A| - 1`.
pub fn decisive_length(f: &ArgFramework) -> usize {
    (2 * f.len()).saturating_sub(1)
}

/// The first `k` entries of an argument's discussion count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisPrefix {
    pub argument: String,
    /// `values[i - 1]` is `Disᵢ`.
    pub values: Vec<BigInt>,
}

impl DisPrefix {
    fn from_counts(argument: &str, counts: impl IntoIterator<Item = BigUint>) -> Self {
        let values = counts
            .into_iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -signed(&c) } else { signed(&c) })
            .collect();
        DisPrefix {
            argument: argument.to_owned(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Lexicographic comparison of the values; greater means stronger.
    pub fn lex_cmp(&self, other: &DisPrefix) -> Ordering {
        self.values.cmp(&other.values)
    }
}

impl fmt::Display for DisPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{}: ({})", self.argument, vals.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    StrictlyStronger,
    Equivalent,
    StrictlyWeaker,
}

impl Relation {
    pub fn reverse(self) -> Relation {
        match self {
            Relation::StrictlyStronger => Relation::StrictlyWeaker,
            Relation::Equivalent => Relation::Equivalent,
            Relation::StrictlyWeaker => Relation::StrictlyStronger,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::StrictlyStronger => "strictly-stronger",
            Relation::Equivalent => "equivalent",
            Relation::StrictlyWeaker => "strictly-weaker",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompareOutcome {
    pub relation: Relation,
    /// Smallest length at which the discussion counts differ.
    pub deciding_index: Option<usize>,
}

/// Direction decided by differing walk counts at length `len`: at odd
/// lengths fewer walks is better, at even lengths more is.
pub fn relation_at(len: usize, count_a: &BigUint, count_b: &BigUint) -> Relation {
    let fewer = match count_a.cmp(count_b) {
        Ordering::Equal => return Relation::Equivalent,
        Ordering::Less => true,
        Ordering::Greater => false,
    };
    if fewer == (len % 2 == 1) {
        Relation::StrictlyStronger
    } else {
        Relation::StrictlyWeaker
    }
}

/// Equivalence classes, strongest first; members in stored argument order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub classes: Vec<Vec<String>>,
}

impl RankResult {
    /// Position of `x`'s class, 0 being the strongest.
    pub fn class_of(&self, x: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.iter().any(|y| y == x))
    }

    /// The relation of `a` to `b` induced by the ranking.
    pub fn relation(&self, a: &str, b: &str) -> Option<Relation> {
        let (ca, cb) = (self.class_of(a)?, self.class_of(b)?);
        Some(match ca.cmp(&cb) {
            Ordering::Less => Relation::StrictlyStronger,
            Ordering::Equal => Relation::Equivalent,
            Ordering::Greater => Relation::StrictlyWeaker,
        })
    }
}

/// `a > g > c > {b,d,e} > f`
impl fmt::Display for RankResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            if class.len() == 1 {
                f.write_str(&class[0])?;
            } else {
                write!(f, "{{{}}}", class.join(","))?;
            }
        }
        Ok(())
    }
}

/// `Dis₁(x) … Dis_k(x)` from column sums of adjacency-matrix powers.
pub fn dis_prefix(f: &ArgFramework, x: &str, k: usize) -> Result<DisPrefix> {
    let col = f.index_of(x)?;
    if k == 0 {
        return Err(Error::ZeroLength);
    }
    let counts = MatrixPowers::new(f.adjacency_matrix())
        .take(k)
        .map(|m| rational_to_count(&m.column_sum(col).expect("column in range")));
    Ok(DisPrefix::from_counts(x, counts))
}

/// Whether `a` is at least as strong as `b`.
///
/// Walks the powers `Mⁱ` for `i = 1 … 2|A| - 1`; the first differing
/// column sum decides by parity, and no difference at all means the two
/// arguments are equally strong.
pub fn stronger_dis(f: &ArgFramework, a: &str, b: &str) -> Result<bool> {
    let (ia, ib) = (f.index_of(a)?, f.index_of(b)?);
    let powers = MatrixPowers::new(f.adjacency_matrix());
    for (m, i) in powers.zip(1..=decisive_length(f)) {
        let sa = m.column_sum(ia)?;
        let sb = m.column_sum(ib)?;
        if sa < sb && i % 2 == 1 {
            return Ok(true);
        }
        if sb < sa && i % 2 == 0 {
            return Ok(true);
        }
        if sa != sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `a` and `b` are equally strong: `Mⁱ[a] = Mⁱ[b]` for all
/// `i ≤ 2|A| - 1`.
pub fn equiv_dis(f: &ArgFramework, a: &str, b: &str) -> Result<bool> {
    let (ia, ib) = (f.index_of(a)?, f.index_of(b)?);
    let powers = MatrixPowers::new(f.adjacency_matrix());
    for (m, _) in powers.zip(1..=decisive_length(f)) {
        if m.column_sum(ia)? != m.column_sum(ib)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three-way comparison in a single scan over the decisive prefix.
pub fn compare(f: &ArgFramework, a: &str, b: &str) -> Result<CompareOutcome> {
    let (ia, ib) = (f.index_of(a)?, f.index_of(b)?);
    let powers = MatrixPowers::new(f.adjacency_matrix());
    for (m, i) in powers.zip(1..=decisive_length(f)) {
        let ca = rational_to_count(&m.column_sum(ia)?);
        let cb = rational_to_count(&m.column_sum(ib)?);
        if ca != cb {
            return Ok(CompareOutcome {
                relation: relation_at(i, &ca, &cb),
                deciding_index: Some(i),
            });
        }
    }
    Ok(CompareOutcome {
        relation: Relation::Equivalent,
        deciding_index: None,
    })
}

/// Decisive discussion-count prefixes of every argument, in stored order.
pub fn all_dis_prefixes(f: &ArgFramework) -> Vec<DisPrefix> {
    dis_prefixes(f, decisive_length(f))
}

/// Length-`k` prefixes of every argument from one shared sequence of powers.
pub fn dis_prefixes(f: &ArgFramework, k: usize) -> Vec<DisPrefix> {
    let levels = column_sum_levels(f, k);
    f.arg_indices()
        .map(|arg| {
            DisPrefix::from_counts(
                arg.name,
                levels.iter().map(|level| level[arg.index].clone()),
            )
        })
        .collect()
}

/// The full ranking, strongest class first.
pub fn full_ranking(f: &ArgFramework) -> RankResult {
    rank_prefixes(all_dis_prefixes(f))
}

/// Sorts prefixes by descending lexicographic order and groups ties.
pub fn rank_prefixes(mut prefixes: Vec<DisPrefix>) -> RankResult {
    // stable: ties keep stored order
    prefixes.sort_by(|x, y| y.lex_cmp(x));
    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut previous: Option<&DisPrefix> = None;
    for p in &prefixes {
        match previous {
            Some(q) if q.values == p.values => classes
                .last_mut()
                .expect("class opened")
                .push(p.argument.clone()),
            _ => classes.push(vec![p.argument.clone()]),
        }
        previous = Some(p);
    }
    RankResult { classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aaf::parse_apx;

    fn fig1() -> ArgFramework {
        parse_apx(
            "arg(a). arg(b). arg(c). arg(d). arg(e). arg(f). arg(g).
             att(a,b). att(a,d). att(a,e). att(b,c). att(d,f). att(e,f). att(f,g).",
        )
        .unwrap()
    }

    fn ints(p: &DisPrefix) -> Vec<i64> {
        p.values.iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn prefix_of_g() {
        assert_eq!(ints(&dis_prefix(&fig1(), "g", 3).unwrap()), [-1, 2, -2]);
        assert_eq!(ints(&dis_prefix(&fig1(), "a", 5).unwrap()), [0; 5]);
        assert_eq!(dis_prefix(&fig1(), "a", 0).unwrap_err(), Error::ZeroLength);
        assert!(dis_prefix(&fig1(), "zz", 1).is_err());
    }

    #[test]
    fn relation_parity() {
        let (two, three) = (BigUint::from(2u8), BigUint::from(3u8));
        assert_eq!(relation_at(1, &two, &three), Relation::StrictlyStronger);
        assert_eq!(relation_at(2, &two, &three), Relation::StrictlyWeaker);
        assert_eq!(relation_at(3, &three, &two), Relation::StrictlyWeaker);
        assert_eq!(relation_at(4, &three, &two), Relation::StrictlyStronger);
        assert_eq!(relation_at(4, &two, &two), Relation::Equivalent);
    }

    #[test]
    fn reflexive() {
        let f = fig1();
        for x in f.arguments() {
            assert!(stronger_dis(&f, x, x).unwrap());
            assert!(equiv_dis(&f, x, x).unwrap());
            assert_eq!(compare(&f, x, x).unwrap().relation, Relation::Equivalent);
        }
    }

    #[test]
    fn seven_args_pairs() {
        let f = fig1();
        assert!(!stronger_dis(&f, "f", "b").unwrap());
        assert!(stronger_dis(&f, "b", "f").unwrap());
        assert!(equiv_dis(&f, "b", "d").unwrap());
        assert!(!equiv_dis(&f, "a", "f").unwrap());
        let c = compare(&f, "g", "c").unwrap();
        assert_eq!(c.relation, Relation::StrictlyStronger);
        assert_eq!(c.deciding_index, Some(2));
        let c = compare(&f, "d", "e").unwrap();
        assert_eq!(c.relation, Relation::Equivalent);
        assert_eq!(c.deciding_index, None);
        let c = compare(&f, "a", "f").unwrap();
        assert_eq!(c.deciding_index, Some(1));
    }

    #[test]
    fn rankings() {
        assert_eq!(full_ranking(&fig1()).to_string(), "a > g > c > {b,d,e} > f");
        let single = parse_apx("arg(x). att(x,x).").unwrap();
        assert_eq!(full_ranking(&single).classes, [vec!["x".to_string()]]);
        assert!(full_ranking(&ArgFramework::new()).classes.is_empty());
    }

    #[test]
    fn rank_result_relation() {
        let r = full_ranking(&fig1());
        assert_eq!(r.relation("a", "f"), Some(Relation::StrictlyStronger));
        assert_eq!(r.relation("e", "b"), Some(Relation::Equivalent));
        assert_eq!(r.relation("f", "c"), Some(Relation::StrictlyWeaker));
        assert_eq!(r.relation("f", "zz"), None);
    }
}
