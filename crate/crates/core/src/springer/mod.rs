//! Strata tables: for each stratum `E`, the fibre of the map from
//! unipotent character sheaves to strata, with the component groups
//! attached to `E` in each characteristic.
//!
//! The five exceptional tables are compiled in (see [`embedded_table`]);
//! tables for other types can be supplied through
//! [`crate::catalog::Catalog`].

mod centralizer;
mod errata;
mod notation;
mod tables;

use std::fmt;
use std::sync::OnceLock;

use crate::cartan::{CartanType, Series};
use crate::cuspidal::{cuspidal_levis, n_table, CuspidalLevi, Delta};
use crate::error::{Error, Result};
use crate::groups::FiniteGroupLabel;
use crate::weyl::{parse_label, parse_named_unchecked, CharacterLabel};

pub use centralizer::{
    centralizer_profile, centralizer_profiles, support_case_from_profiles, CentralizerProfile,
    CentralizerType, CharClass,
};
pub use errata::{errata_for, Erratum, ERRATA};

/// Component groups `A_{r,E}` for `r = 0, 2, 3, 5`. `None` is a dash: `E`
/// does not come from a unipotent class in that characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComponentGroups {
    pub r0: Option<FiniteGroupLabel>,
    pub r2: Option<FiniteGroupLabel>,
    pub r3: Option<FiniteGroupLabel>,
    pub r5: Option<FiniteGroupLabel>,
}

impl ComponentGroups {
    pub fn constant(g: FiniteGroupLabel) -> Self {
        Self {
            r0: Some(g),
            r2: Some(g),
            r3: Some(g),
            r5: None,
        }
    }

    /// The stored entry for `r`, without any defaulting.
    pub fn stored(&self, r: u32) -> Option<FiniteGroupLabel> {
        match r {
            0 => self.r0,
            2 => self.r2,
            3 => self.r3,
            5 => self.r5,
            _ => None,
        }
    }
}

/// The set `M(E)` of characteristics in which `E` is attached to a
/// unipotent class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// All characteristics.
    Full,
    /// Only the given prime.
    Singleton(u32),
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Full => f.write_str("full"),
            Membership::Singleton(r) => write!(f, "singleton:{r}"),
        }
    }
}

/// Which component groups are marked as forming `c(E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Boxed {
    /// The single constant group.
    Single,
    /// The groups at these primes, increasing.
    Primes(Vec<u32>),
}

/// One symbol `(J, E', d)` with multiplicity `N_d(J)` in a fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberEntry {
    /// Type of the cuspidal Levi; `None` for the maximal torus.
    pub levi: Option<CartanType>,
    /// The relative-Weyl character after occurrence tags are resolved.
    pub character: CharacterLabel,
    /// The character as written in the source table.
    pub printed: CharacterLabel,
    pub d: Delta,
    pub mult: u32,
    /// Occurrence tag separating symbols that are printed identically.
    pub disamb: Option<char>,
}

impl FiberEntry {
    pub fn is_empty_levi(&self) -> bool {
        self.levi.is_none()
    }
}

impl fmt::Display for FiberEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.levi {
            None => write!(f, "{}", self.character)?,
            Some(j) => write!(f, "({j},{},{})", self.character, self.d)?,
        }
        if self.mult > 1 {
            write!(f, "#{}", self.mult)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataRow {
    pub stratum: CharacterLabel,
    pub fiber: Vec<FiberEntry>,
    pub groups: ComponentGroups,
    pub boxed: Boxed,
    pub membership: Membership,
}

impl StrataRow {
    /// Number of triples in the fibre, counting multiplicities.
    pub fn fiber_size(&self) -> u32 {
        self.fiber.iter().map(|e| e.mult).sum()
    }

    /// `A_{r,E}`. For full membership, primes without an entry of their own
    /// share the characteristic-zero group.
    pub fn component_group(&self, r: u32) -> Option<FiniteGroupLabel> {
        match self.membership {
            Membership::Singleton(r0) => (r == r0).then(|| self.groups.stored(r)).flatten(),
            Membership::Full => self.groups.stored(r).or(self.groups.r0),
        }
    }

    /// Primes `r` in `{2, 3, 5}` with `A_{r,E} != A_{0,E}`.
    pub fn deviation(&self) -> Vec<u32> {
        [2, 3, 5]
            .into_iter()
            .filter(|&r| self.component_group(r) != self.component_group(0))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataTable {
    pub cartan_type: CartanType,
    pub rows: Vec<StrataRow>,
}

impl StrataTable {
    /// Characters occurring with empty Levi, in row order.
    pub fn empty_entry_labels(&self) -> Vec<CharacterLabel> {
        self.rows
            .iter()
            .flat_map(|r| r.fiber.iter())
            .filter(|e| e.is_empty_levi())
            .map(|e| e.character.clone())
            .collect()
    }

    pub fn heads(&self) -> impl Iterator<Item = &CharacterLabel> {
        self.rows.iter().map(|r| &r.stratum)
    }

    pub fn row(&self, stratum: &CharacterLabel) -> Option<&StrataRow> {
        self.rows.iter().find(|r| &r.stratum == stratum)
    }

    pub fn total_triples(&self) -> u32 {
        self.rows.iter().map(StrataRow::fiber_size).sum()
    }

    /// Builds a table from rows whose characters are still strings,
    /// resolving occurrence tags and checking row-local invariants.
    pub fn from_raw(t: CartanType, raw: Vec<RawRow>) -> Result<Self> {
        let levis = cuspidal_levis(t);
        let mut rows = Vec::with_capacity(raw.len());
        for (i, raw_row) in raw.into_iter().enumerate() {
            let mut fiber = Vec::with_capacity(raw_row.fiber.len());
            for entry in raw_row.fiber {
                fiber.push(
                    build_entry(t, &levis, entry)
                        .map_err(|e| Error::TableData(format!("{t} row {}: {e}", i + 1)))?,
                );
            }
            let first = fiber
                .first()
                .ok_or_else(|| Error::TableData(format!("{t} row {}: empty fibre", i + 1)))?;
            if !first.is_empty_levi() {
                return Err(Error::TableData(format!(
                    "{t} row {}: first entry {first} is not a character of W",
                    i + 1
                )));
            }
            if let Some(head) = &raw_row.stratum {
                if head != &first.printed.to_string() && head != &first.character.to_string() {
                    return Err(Error::TableData(format!(
                        "{t} row {}: stratum {head} differs from first entry {first}",
                        i + 1
                    )));
                }
            }
            check_groups(&raw_row.groups, raw_row.membership)
                .map_err(|e| Error::TableData(format!("{t} row {}: {e}", i + 1)))?;
            rows.push(StrataRow {
                stratum: first.character.clone(),
                fiber,
                groups: raw_row.groups,
                boxed: raw_row.boxed,
                membership: raw_row.membership,
            });
        }
        resolve_occurrences(&levis, &mut rows)?;
        for row in &mut rows {
            row.stratum = row.fiber[0].character.clone();
        }
        Ok(Self {
            cartan_type: t,
            rows,
        })
    }
}

/// A table row before label resolution, as produced by the notation
/// parser and by JSON import.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRow {
    pub stratum: Option<String>,
    pub fiber: Vec<RawEntry>,
    pub groups: ComponentGroups,
    pub boxed: Boxed,
    pub membership: Membership,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub levi: Option<CartanType>,
    pub character: String,
    pub d: Delta,
    pub mult: u32,
    pub disamb: Option<char>,
}

fn same_levi(a: Option<CartanType>, b: Option<CartanType>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => {
            a == b
                || (matches!(a.series(), Series::B | Series::C)
                    && matches!(b.series(), Series::B | Series::C)
                    && a.rank() == b.rank())
        }
        (a, b) => a == b,
    }
}

fn find_levi(levis: &[CuspidalLevi], j: Option<CartanType>) -> Option<&CuspidalLevi> {
    levis.iter().find(|l| same_levi(l.levi, j))
}

fn parse_character(space: Option<CartanType>, ambient_w: bool, s: &str) -> Result<CharacterLabel> {
    match space {
        None => match s.trim() {
            "1" | "-" => Ok(CharacterLabel::Trivial),
            other => Err(Error::TableData(format!(
                "{other:?}: the relative Weyl group is trivial, expected 1"
            ))),
        },
        // The exceptional registries are defined by these very tables.
        Some(t) if ambient_w && t.is_exceptional() => parse_named_unchecked(t.series(), s)
            .ok_or_else(|| Error::TableData(format!("malformed character name {s:?} for {t}"))),
        Some(t) => parse_label(t, s),
    }
}

fn build_entry(t: CartanType, levis: &[CuspidalLevi], raw: RawEntry) -> Result<FiberEntry> {
    let levi = find_levi(levis, raw.levi).ok_or_else(|| {
        Error::TableData(format!(
            "{} is not a cuspidal Levi of {t}",
            raw.levi.map_or("-".to_string(), |l| l.to_string())
        ))
    })?;
    let printed = parse_character(levi.relative, levi.is_torus(), &raw.character)?;
    let expected = n_table(levi.levi_type()).get(raw.d);
    if expected == 0 {
        return Err(Error::TableData(format!(
            "{} has no cuspidal objects with d = {}",
            levi, raw.d
        )));
    }
    if raw.mult != expected {
        return Err(Error::TableData(format!(
            "({},{},{}) has multiplicity {} but N_d = {expected}",
            levi, raw.character, raw.d, raw.mult
        )));
    }
    Ok(FiberEntry {
        levi: levi.levi,
        character: printed.clone(),
        printed,
        d: raw.d,
        mult: raw.mult,
        disamb: raw.disamb,
    })
}

fn check_groups(groups: &ComponentGroups, membership: Membership) -> Result<()> {
    match membership {
        Membership::Full => {
            if groups.r0.is_none() {
                return Err(Error::TableData(
                    "full membership needs a group at 0".into(),
                ));
            }
        }
        Membership::Singleton(r0) => {
            let defined: Vec<u32> = [0, 2, 3, 5]
                .into_iter()
                .filter(|&r| groups.stored(r).is_some())
                .collect();
            if defined != [r0] {
                return Err(Error::TableData(format!(
                    "singleton membership at {r0} but groups defined at {defined:?}"
                )));
            }
        }
    }
    Ok(())
}

/// Entries printed identically in several rows carry tags `a`, `b`, ...;
/// for each `(J, d)`, the tagged entries take the relative characters not
/// used by untagged entries, in registry order, tags in alphabetical order.
fn resolve_occurrences(levis: &[CuspidalLevi], rows: &mut [StrataRow]) -> Result<()> {
    let mut keys: Vec<(Option<CartanType>, Delta)> = Vec::new();
    for e in rows.iter().flat_map(|r| r.fiber.iter()) {
        if e.disamb.is_some() && !keys.contains(&(e.levi, e.d)) {
            keys.push((e.levi, e.d));
        }
    }
    for (levi_type, d) in keys {
        let levi = find_levi(levis, levi_type).expect("validated");
        let used: Vec<CharacterLabel> = rows
            .iter()
            .flat_map(|r| r.fiber.iter())
            .filter(|e| e.levi == levi_type && e.d == d && e.disamb.is_none())
            .map(|e| e.character.clone())
            .collect();
        let pool: Vec<CharacterLabel> = levi
            .relative_characters()
            .into_iter()
            .filter(|c| !used.contains(c))
            .collect();
        let mut tagged: Vec<(char, usize, usize)> = Vec::new();
        for (ri, row) in rows.iter().enumerate() {
            for (ei, e) in row.fiber.iter().enumerate() {
                if e.levi == levi_type && e.d == d {
                    if let Some(tag) = e.disamb {
                        tagged.push((tag, ri, ei));
                    }
                }
            }
        }
        tagged.sort();
        if tagged.windows(2).any(|w| w[0].0 == w[1].0) || tagged.len() > pool.len() {
            return Err(Error::TableData(format!(
                "cannot resolve occurrence tags for ({levi},{d})"
            )));
        }
        for ((_, ri, ei), character) in tagged.into_iter().zip(pool) {
            rows[ri].fiber[ei].character = character;
        }
    }
    Ok(())
}

/// The compiled-in table for an exceptional type.
pub fn embedded_table(t: CartanType) -> Option<&'static StrataTable> {
    static TABLES: [OnceLock<StrataTable>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let i = CartanType::EXCEPTIONAL.iter().position(|&e| e == t)?;
    Some(TABLES[i].get_or_init(|| {
        let raw = notation::parse_rows(tables::source(t)).expect("embedded table notation");
        StrataTable::from_raw(t, raw).expect("embedded table data")
    }))
}

/// Parses a table written in the compact row notation used for the
/// embedded tables (see [`notation`](self) for the format).
pub fn parse_notation(t: CartanType, text: &str) -> Result<StrataTable> {
    StrataTable::from_raw(t, notation::parse_rows(text)?)
}

/// The notation source of an embedded table.
pub fn embedded_source(t: CartanType) -> Option<&'static str> {
    t.is_exceptional().then(|| tables::source(t))
}
