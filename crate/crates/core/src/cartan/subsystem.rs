//! Semisimple subsystem types and the pseudo-Levi enumerator.
//!
//! A pseudo-Levi type of `t` is anything reachable from `t` by repeatedly
//! choosing a simple factor, passing to its extended diagram and deleting a
//! nonempty set of nodes. Deleting a set of nodes from an extended diagram is
//! the same as deleting one node of it and then deleting single nodes from
//! the ordinary diagrams of the resulting components, so the closure is
//! generated by two elementary moves per factor:
//!
//! * delete one node of the extended diagram;
//! * delete one node of the ordinary diagram.
//!
//! Both moves are linear in the rank, which keeps [`is_pseudo_levi`] cheap
//! even for classical types of large rank.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::{CartanType, Series};
use crate::error::{Error, Result};

/// A multiset of simple Cartan types, stored sorted with low-rank aliases
/// identified: `B1, C1 -> A1`, `D2 -> A1xA1`, `D3 -> A3`, `C2 -> B2`.
/// Rank-zero factors (tori) are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsystemType {
    factors: Vec<CartanType>,
}

impl SubsystemType {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = CartanType>) -> Self {
        Self::from_raw(factors.into_iter().map(|t| (t.series(), t.rank())))
    }

    /// Builds from `(series, rank)` pairs that may use alias spellings
    /// such as `D2` or `B1`.
    pub fn from_raw(factors: impl IntoIterator<Item = (Series, u32)>) -> Self {
        let mut out = Vec::new();
        for (series, rank) in factors {
            push_normalized(&mut out, series, rank);
        }
        out.sort();
        Self { factors: out }
    }

    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn replace_factor(&self, index: usize, with: &SubsystemType) -> SubsystemType {
        let mut factors = self.factors.clone();
        factors.remove(index);
        factors.extend_from_slice(&with.factors);
        factors.sort();
        SubsystemType { factors }
    }
}

fn push_normalized(out: &mut Vec<CartanType>, series: Series, rank: u32) {
    let a = |n| CartanType::unchecked(Series::A, n);
    match (series, rank) {
        (Series::Torus, _) | (_, 0) => {}
        (Series::D, 1) => {}
        (Series::B | Series::C, 1) => out.push(a(1)),
        (Series::D, 2) => {
            out.push(a(1));
            out.push(a(1));
        }
        (Series::D, 3) => out.push(a(3)),
        (Series::C, 2) => out.push(CartanType::unchecked(Series::B, 2)),
        (s, n) => out.push(CartanType::unchecked(s, n)),
    }
}

impl fmt::Display for SubsystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("-");
        }
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for SubsystemType {
    type Err = Error;

    /// Accepts `A4xA4`, `A5 x A2 x A1`, `E7×A1`, `D_2xD_2`; `-`, `1` or an
    /// empty string for the empty subsystem.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" || t == "1" || t.eq_ignore_ascii_case("empty") {
            return Ok(Self::empty());
        }
        let bad = |reason: &str| Error::BadSubsystem {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut raw = Vec::new();
        for part in t.split(['x', 'X', '×', '*']) {
            let part = part.trim().replace('_', "");
            let mut chars = part.chars();
            let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Series::A,
                Some('B') => Series::B,
                Some('C') => Series::C,
                Some('D') => Series::D,
                Some('E') => Series::E,
                Some('F') => Series::F,
                Some('G') => Series::G,
                _ => return Err(bad("expected a series letter")),
            };
            let rank: u32 = chars.as_str().parse().map_err(|_| bad("expected a rank"))?;
            let valid = match series {
                Series::E => (6..=8).contains(&rank),
                Series::F => rank == 4,
                Series::G => rank == 2,
                _ => rank >= 1,
            };
            if !valid {
                return Err(bad("not a Cartan type"));
            }
            raw.push((series, rank));
        }
        Ok(Self::from_raw(raw))
    }
}

/// Results of the two elementary moves applied to a single simple factor.
fn elementary_moves(t: CartanType) -> Vec<SubsystemType> {
    let diagram = t.extended_diagram();
    let n = diagram.node_count();
    let mut out = BTreeSet::new();
    for deleted in 0..n {
        let mut alive = vec![true; n];
        alive[deleted] = false;
        out.insert(SubsystemType::from_factors(diagram.component_types(&alive)));
        if deleted > 0 {
            alive[0] = false;
            out.insert(SubsystemType::from_factors(diagram.component_types(&alive)));
        }
    }
    out.into_iter().collect()
}

fn moves_cached(t: CartanType) -> Arc<Vec<SubsystemType>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<Vec<SubsystemType>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&t) {
        return hit.clone();
    }
    let moves = Arc::new(elementary_moves(t));
    cache.lock().unwrap().insert(t, moves.clone());
    moves
}

/// All pseudo-Levi subsystem types of `t`, including `t` itself and the
/// empty subsystem. Memoized per type.
///
/// The closure grows quickly with the rank of classical types; use
/// [`is_pseudo_levi`] for membership queries on large ranks.
pub fn pseudo_levi_types(t: CartanType) -> Arc<BTreeSet<SubsystemType>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<BTreeSet<SubsystemType>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&t) {
        return hit.clone();
    }

    let start = SubsystemType::from_factors([t]);
    let mut seen: BTreeSet<SubsystemType> = BTreeSet::new();
    let mut work = vec![start.clone()];
    seen.insert(start);
    while let Some(member) = work.pop() {
        for (i, factor) in member.factors.iter().enumerate() {
            if i > 0 && member.factors[i - 1] == *factor {
                continue;
            }
            for result in moves_cached(*factor).iter() {
                let next = member.replace_factor(i, result);
                if seen.insert(next.clone()) {
                    work.push(next);
                }
            }
        }
    }
    let set = Arc::new(seen);
    cache.lock().unwrap().insert(t, set.clone());
    set
}

/// Whether `s` occurs among the pseudo-Levi types of `t`.
///
/// Answered by a memoized search that splits the target among the factors
/// produced by each move, so it does not materialize the full closure.
pub fn is_pseudo_levi(t: CartanType, s: &SubsystemType) -> bool {
    // Low-rank spellings such as C2 or D3 normalize to other factors.
    let own = SubsystemType::from_factors([t]);
    if own.is_empty() {
        return s.is_empty();
    }
    let mut memo = HashMap::new();
    split_among(own.factors(), s.factors(), &mut memo)
}

type Memo = HashMap<(CartanType, Vec<CartanType>), bool>;

fn reachable(f: CartanType, target: &[CartanType], memo: &mut Memo) -> bool {
    if target.is_empty() || target == [f] {
        return true;
    }
    let target_rank: u32 = target.iter().map(|t| t.rank()).sum();
    if target_rank > f.rank() {
        return false;
    }
    let key = (f, target.to_vec());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    memo.insert(key.clone(), false);
    let own = SubsystemType::from_factors([f]);
    let found = moves_cached(f)
        .iter()
        .filter(|r| **r != own && r.rank() >= target_rank)
        .any(|r| split_among(r.factors(), target, memo));
    memo.insert(key, found);
    found
}

/// Can `target` be partitioned into sub-multisets, one per factor in
/// `factors`, each reachable from its factor?
fn split_among(factors: &[CartanType], target: &[CartanType], memo: &mut Memo) -> bool {
    let mut buckets: Vec<Vec<CartanType>> = vec![Vec::new(); factors.len()];
    assign(factors, target, 0, &mut buckets, memo)
}

fn assign(
    factors: &[CartanType],
    target: &[CartanType],
    next: usize,
    buckets: &mut Vec<Vec<CartanType>>,
    memo: &mut Memo,
) -> bool {
    if next == target.len() {
        return factors
            .iter()
            .zip(buckets.iter())
            .all(|(f, b)| reachable(*f, b, memo));
    }
    let item = target[next];
    for i in 0..factors.len() {
        // Identical (factor, contents) buckets are interchangeable.
        if (0..i).any(|j| factors[j] == factors[i] && buckets[j] == buckets[i]) {
            continue;
        }
        let used: u32 = buckets[i].iter().map(|t| t.rank()).sum();
        if used + item.rank() > factors[i].rank() {
            continue;
        }
        buckets[i].push(item);
        if assign(factors, target, next + 1, buckets, memo) {
            buckets[i].pop();
            return true;
        }
        buckets[i].pop();
    }
    false
}
