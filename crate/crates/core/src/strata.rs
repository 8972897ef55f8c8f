//! The map from unipotent character sheaves to strata, read off the strata
//! tables, and the sets `c(E)*` whose sizes match its fibres.

use std::fmt;

use crate::cartan::{CartanType, Series};
use crate::cuspidal::{cuspidal_levis, CuspidalLevi, Delta, SheafTriple};
use crate::error::{Error, Result};
use crate::groups::FiniteGroupLabel;
use crate::springer::{Boxed, ComponentGroups, FiberEntry, Membership, StrataRow, StrataTable};
use crate::weyl::{enumerate_irr, CharacterLabel, Partition};

/// The stratum of regular unipotent elements: the row that receives the
/// `d = 0` cuspidal objects of the whole group.
pub fn unit_label(t: CartanType) -> CharacterLabel {
    let n = t.rank();
    match t.series() {
        Series::Torus => CharacterLabel::Trivial,
        Series::A => CharacterLabel::Partition(Partition::row(n + 1)),
        Series::B | Series::C => CharacterLabel::Bipartition(Partition::row(n), Partition::empty()),
        Series::D => CharacterLabel::DPair {
            alpha: Partition::row(n),
            beta: Partition::empty(),
            split: None,
        },
        Series::G => CharacterLabel::named("1"),
        Series::F => CharacterLabel::named("chi_{1,1}"),
        Series::E => CharacterLabel::named("1_0"),
    }
}

/// The table of a type-A group or a torus, where every fibre is a single
/// character and every component group is trivial.
pub fn synthesized_table(t: CartanType) -> Option<StrataTable> {
    if !matches!(t.series(), Series::A | Series::Torus) {
        return None;
    }
    let rows = enumerate_irr(t)
        .labels
        .into_iter()
        .map(|e| StrataRow {
            stratum: e.clone(),
            fiber: vec![FiberEntry {
                levi: None,
                character: e.clone(),
                printed: e,
                d: Delta::Known(0),
                mult: 1,
                disamb: None,
            }],
            groups: ComponentGroups::constant(FiniteGroupLabel::Triv),
            boxed: Boxed::Single,
            membership: Membership::Full,
        })
        .collect();
    Some(StrataTable {
        cartan_type: t,
        rows,
    })
}

fn levi_of(t: CartanType, levi: Option<CartanType>) -> CuspidalLevi {
    cuspidal_levis(t)
        .into_iter()
        .find(|l| l.levi == levi)
        .expect("entry Levis are validated on construction")
}

/// The triples an entry stands for, one per index below its multiplicity.
pub fn entry_triples(t: CartanType, entry: &FiberEntry) -> Vec<SheafTriple> {
    let levi = levi_of(t, entry.levi);
    (0..entry.mult)
        .map(|index| SheafTriple {
            levi,
            character: entry.character.clone(),
            d: entry.d,
            index,
        })
        .collect()
}

fn row_of<'a>(table: &'a StrataTable, e: &CharacterLabel) -> Result<&'a StrataRow> {
    table.row(e).ok_or_else(|| Error::NotAStratum {
        cartan: table.cartan_type,
        label: e.to_string(),
    })
}

/// The stratum whose fibre contains `triple`.
pub fn tau(table: &StrataTable, triple: &SheafTriple) -> Result<CharacterLabel> {
    let not_found = || Error::TripleNotFound(triple.to_string());
    if triple.levi.ambient != table.cartan_type {
        return Err(not_found());
    }
    table
        .rows
        .iter()
        .find(|row| {
            row.fiber.iter().any(|e| {
                e.levi == triple.levi.levi
                    && e.character == triple.character
                    && e.d == triple.d
                    && triple.index < e.mult
            })
        })
        .map(|row| row.stratum.clone())
        .ok_or_else(not_found)
}

/// The fibre over `e`, one entry per symbol with its multiplicity; the
/// triple carries index 0.
pub fn fiber(table: &StrataTable, e: &CharacterLabel) -> Result<Vec<(SheafTriple, u32)>> {
    let t = table.cartan_type;
    Ok(row_of(table, e)?
        .fiber
        .iter()
        .map(|entry| {
            let first = entry_triples(t, entry).swap_remove(0);
            (first, entry.mult)
        })
        .collect())
}

/// The fibre over `e` with multiplicities expanded into indices.
pub fn fiber_expanded(table: &StrataTable, e: &CharacterLabel) -> Result<Vec<SheafTriple>> {
    let t = table.cartan_type;
    Ok(row_of(table, e)?
        .fiber
        .iter()
        .flat_map(|entry| entry_triples(t, entry))
        .collect())
}

/// The collection `c(E)` of component groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CCollection {
    Single(FiniteGroupLabel),
    /// `(Γ, Γ')`, the groups at the two deviating primes in increasing order.
    Pair(FiniteGroupLabel, FiniteGroupLabel),
    /// Always `(C4, C3, C5)`.
    Triple(FiniteGroupLabel, FiniteGroupLabel, FiniteGroupLabel),
}

impl fmt::Display for CCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CCollection::Single(g) => write!(f, "{{{g}}}"),
            CCollection::Pair(a, b) => write!(f, "{{{a}, {b}}}"),
            CCollection::Triple(a, b, c) => write!(f, "{{{a}, {b}, {c}}}"),
        }
    }
}

const ALLOWED_PAIRS: [(FiniteGroupLabel, FiniteGroupLabel); 3] = [
    (FiniteGroupLabel::C2, FiniteGroupLabel::C3),
    (FiniteGroupLabel::C4, FiniteGroupLabel::C3),
    (FiniteGroupLabel::C2xC2, FiniteGroupLabel::C2xC3),
];

/// `c(E)` from the component groups of a row.
pub fn row_collection(row: &StrataRow) -> Result<CCollection> {
    let group = |r: u32| {
        row.component_group(r).ok_or_else(|| {
            Error::UnsupportedCollection(format!("{}: no group at {r}", row.stratum))
        })
    };
    if let Membership::Singleton(r0) = row.membership {
        return Ok(CCollection::Single(group(r0)?));
    }
    let deviation = row.deviation();
    match deviation.as_slice() {
        [] => Ok(CCollection::Single(group(0)?)),
        [r] => Ok(CCollection::Single(group(*r)?)),
        [r, s] => {
            let pair = (group(*r)?, group(*s)?);
            if ALLOWED_PAIRS.contains(&pair) {
                Ok(CCollection::Pair(pair.0, pair.1))
            } else {
                Err(Error::UnsupportedCollection(format!(
                    "{}: pair ({}, {})",
                    row.stratum, pair.0, pair.1
                )))
            }
        }
        _ => {
            let triple = (group(2)?, group(3)?, group(5)?);
            use FiniteGroupLabel::{C3, C4, C5};
            if triple == (C4, C3, C5) {
                Ok(CCollection::Triple(C4, C3, C5))
            } else {
                Err(Error::UnsupportedCollection(format!(
                    "{}: triple ({}, {}, {})",
                    row.stratum, triple.0, triple.1, triple.2
                )))
            }
        }
    }
}

/// The boxed flags implied by the component groups of a row.
pub fn recomputed_boxed(row: &StrataRow) -> Boxed {
    match row.membership {
        Membership::Singleton(r0) => Boxed::Primes(vec![r0]),
        Membership::Full => {
            let deviation = row.deviation();
            if deviation.is_empty() {
                Boxed::Single
            } else {
                Boxed::Primes(deviation)
            }
        }
    }
}

pub fn c_collection(table: &StrataTable, e: &CharacterLabel) -> Result<CCollection> {
    row_collection(row_of(table, e)?)
}

/// Which part of the construction of `c(E)*` an element comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CStarOrigin {
    /// An irreducible representation of the single group.
    Single,
    /// An irreducible representation of `Γ`.
    First,
    /// An irreducible representation of `Γ'` not pulled back from `Γ''`.
    SecondNew,
    /// A faithful irreducible representation of `C_m`.
    Faithful { m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CStarElement {
    pub group: FiniteGroupLabel,
    pub irrep: &'static str,
    pub origin: CStarOrigin,
}

impl fmt::Display for CStarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group, self.irrep)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `c(E)*` for a collection, with `quotient = A_{0,E}` used for pairs.
pub fn collection_star(
    c: CCollection,
    quotient: Option<FiniteGroupLabel>,
) -> Result<Vec<CStarElement>> {
    let all = |g: FiniteGroupLabel, origin| {
        g.irreps().into_iter().map(move |ir| CStarElement {
            group: g,
            irrep: ir.name,
            origin,
        })
    };
    match c {
        CCollection::Single(g) => Ok(all(g, CStarOrigin::Single).collect()),
        CCollection::Pair(g, h) => {
            let q = quotient.ok_or_else(|| {
                Error::UnsupportedCollection(format!("pair ({g}, {h}) without a group at 0"))
            })?;
            let pulled = h
                .pullback(q)
                .ok_or_else(|| Error::UnsupportedCollection(format!("no surjection {h} -> {q}")))?;
            let mut out: Vec<CStarElement> = all(g, CStarOrigin::First).collect();
            out.extend(
                all(h, CStarOrigin::SecondNew)
                    .enumerate()
                    .filter(|(i, _)| !pulled.contains(i))
                    .map(|(_, e)| e),
            );
            Ok(out)
        }
        CCollection::Triple(..) => Ok((1..=6u32)
            .flat_map(|m| {
                let g = FiniteGroupLabel::cyclic(m).expect("m <= 6");
                let irreps = g.irreps();
                (0..m)
                    .filter(move |&k| gcd(k, m) == 1)
                    .map(move |k| CStarElement {
                        group: g,
                        irrep: irreps[k as usize].name,
                        origin: CStarOrigin::Faithful { m },
                    })
            })
            .collect()),
    }
}

pub fn row_star(row: &StrataRow) -> Result<Vec<CStarElement>> {
    collection_star(row_collection(row)?, row.component_group(0))
}

pub fn c_star(table: &StrataTable, e: &CharacterLabel) -> Result<Vec<CStarElement>> {
    row_star(row_of(table, e)?)
}

/// Fibre size against `|c(E)*|` for one stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRow {
    pub stratum: CharacterLabel,
    pub fiber_size: u32,
    pub c_star_size: u32,
}

impl WitnessRow {
    pub fn matches(&self) -> bool {
        self.fiber_size == self.c_star_size
    }
}

/// Per-row cardinalities certifying a bijection between each fibre and
/// `c(E)*`.
pub fn fiber_cstar_witness(table: &StrataTable) -> Result<Vec<WitnessRow>> {
    table
        .rows
        .iter()
        .map(|row| {
            Ok(WitnessRow {
                stratum: row.stratum.clone(),
                fiber_size: row.fiber_size(),
                c_star_size: row_star(row)?.len() as u32,
            })
        })
        .collect()
}

/// A concrete bijection between the fibre over `e` and `c(E)*`, matching
/// fibre order with inventory order.
pub fn fiber_cstar_pairing(
    table: &StrataTable,
    e: &CharacterLabel,
) -> Result<Vec<(SheafTriple, CStarElement)>> {
    let triples = fiber_expanded(table, e)?;
    let star = c_star(table, e)?;
    if triples.len() != star.len() {
        return Err(Error::UnsupportedCollection(format!(
            "{e}: fibre has {} elements but c(E)* has {}",
            triples.len(),
            star.len()
        )));
    }
    Ok(triples.into_iter().zip(star).collect())
}

/// A primitive `m`-th root of unity `exp(2πik/m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnityLabel {
    pub m: u32,
    pub k: u32,
}

impl fmt::Display for RootOfUnityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta_{}^{}", self.m, self.k)
    }
}

/// Primitive `m`-th roots of unity for `1 <= m <= z`, which index the
/// fibre over the regular stratum.
pub fn regular_fiber_labels(t: CartanType) -> Vec<RootOfUnityLabel> {
    let z = if t.is_torus() { 1 } else { t.z_value() };
    (1..=z)
        .flat_map(|m| {
            (1..=m)
                .filter(move |&k| gcd(k, m) == 1)
                .map(move |k| RootOfUnityLabel { m, k })
        })
        .collect()
}
