//! Types of the connected centralizer `Z^0(s)` of the semisimple part `s`
//! of an element in the support of a cuspidal character sheaf, by type,
//! `d` and characteristic.

use std::fmt;

use crate::cartan::{CartanType, Series, SubsystemType};
use crate::cuspidal::{n_table, unipotent_support_case, Delta, SupportCase};
use crate::error::{Error, Result};

/// Characteristic classes distinguished by the profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharClass {
    /// Characteristic zero and every prime not listed separately.
    Generic,
    Prime(u32),
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharClass::Generic => f.write_str("generic"),
            CharClass::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl std::str::FromStr for CharClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "generic" | "0" => Ok(CharClass::Generic),
            p => p
                .parse()
                .ok()
                .filter(|&p: &u32| p >= 2)
                .map(CharClass::Prime)
                .ok_or_else(|| Error::TableData(format!("bad characteristic {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CentralizerType {
    /// `Z^0(s)` is the whole group, i.e. `s` is central.
    Full,
    Sub(SubsystemType),
}

impl fmt::Display for CentralizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralizerType::Full => f.write_str("H"),
            CentralizerType::Sub(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerProfile {
    pub ambient: CartanType,
    pub d: Delta,
    pub class: CharClass,
    /// Centralizer types with the number of cuspidal objects having them.
    pub entries: Vec<(CentralizerType, u32)>,
    pub note: Option<&'static str>,
}

impl CentralizerProfile {
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    /// All objects have central semisimple part, so all of them have
    /// unipotent support in this characteristic.
    pub fn all_full(&self) -> bool {
        self.entries
            .iter()
            .all(|(c, _)| *c == CentralizerType::Full)
    }
}

const E8_D0_NOTE: &str = "disagrees with a published claim that, in characteristic 2, \
     some semisimple element of E8 has centralizer of type A5xA2xA1";

fn sub(s: &str) -> CentralizerType {
    CentralizerType::Sub(s.parse().expect("embedded subsystem type"))
}

fn raw(factors: &[(Series, u32)]) -> CentralizerType {
    CentralizerType::Sub(SubsystemType::from_raw(factors.iter().copied()))
}

/// Profiles where the generic answer is a single proper subsystem for all
/// objects and `r0` gives the whole group.
fn split_at(
    t: CartanType,
    d: Delta,
    r0: u32,
    generic: CentralizerType,
    n: u32,
) -> Vec<CentralizerProfile> {
    vec![
        CentralizerProfile {
            ambient: t,
            d,
            class: CharClass::Generic,
            entries: vec![(generic, n)],
            note: None,
        },
        CentralizerProfile {
            ambient: t,
            d,
            class: CharClass::Prime(r0),
            entries: vec![(CentralizerType::Full, n)],
            note: None,
        },
    ]
}

fn mixed(
    t: CartanType,
    d: u32,
    rows: &[(CharClass, &[(CentralizerType, u32)])],
    note: Option<&'static str>,
) -> Vec<CentralizerProfile> {
    rows.iter()
        .map(|(class, entries)| CentralizerProfile {
            ambient: t,
            d: Delta::Known(d),
            class: *class,
            entries: entries.to_vec(),
            note,
        })
        .collect()
}

/// Every profile for `t`, grouped by `d` in decreasing order, generic
/// class first. Empty when `t` has no cuspidal character sheaves or is a
/// torus.
pub fn centralizer_profiles(t: CartanType) -> Vec<CentralizerProfile> {
    use CentralizerType::Full;
    use CharClass::{Generic, Prime};
    let table = n_table(t);
    let n = t.rank();
    let classical_d = || table.counts.first().map(|&(d, _)| d);
    match t.series() {
        Series::Torus | Series::A => vec![],
        Series::B => match classical_d() {
            Some(d) => {
                let k = pronic_root(n);
                let (a, b) = if k.is_multiple_of(2) {
                    (((k + 1) * (k + 1) - 1) / 2, k * k / 2)
                } else {
                    ((k * k - 1) / 2, (k + 1) * (k + 1) / 2)
                };
                split_at(t, d, 2, raw(&[(Series::B, a), (Series::D, b)]), 1)
            }
            None => vec![],
        },
        Series::C => match classical_d() {
            Some(d) => split_at(t, d, 2, raw(&[(Series::C, n / 2), (Series::C, n / 2)]), 1),
            None => vec![],
        },
        Series::D => match classical_d() {
            Some(d) => split_at(t, d, 2, raw(&[(Series::D, n / 2), (Series::D, n / 2)]), 1),
            None => vec![],
        },
        Series::G => {
            let mut out = mixed(t, 1, &[(Generic, &[(Full, 1)])], None);
            out.extend(mixed(
                t,
                0,
                &[
                    (Generic, &[(sub("A2"), 2), (sub("A1xA1"), 1)]),
                    (Prime(2), &[(sub("A2"), 2), (Full, 1)]),
                    (Prime(3), &[(Full, 2), (sub("A1xA1"), 1)]),
                ],
                None,
            ));
            out
        }
        Series::F => {
            let mut out = mixed(t, 4, &[(Generic, &[(Full, 1)])], None);
            out.extend(split_at(t, Delta::Known(2), 2, sub("B4"), 1));
            out.extend(split_at(t, Delta::Known(1), 2, sub("C3xA1"), 1));
            out.extend(mixed(
                t,
                0,
                &[
                    (Generic, &[(sub("A2xA2"), 2), (sub("A3xA1"), 2)]),
                    (Prime(2), &[(sub("A2xA2"), 2), (Full, 2)]),
                    (Prime(3), &[(sub("A3xA1"), 2), (Full, 2)]),
                ],
                None,
            ));
            out
        }
        Series::E => match n {
            6 => split_at(t, Delta::Known(0), 3, sub("A2xA2xA2"), 2),
            7 => split_at(t, Delta::Known(0), 2, sub("A3xA3xA1"), 2),
            _ => {
                let mut out = mixed(t, 16, &[(Generic, &[(Full, 1)])], None);
                out.extend(split_at(t, Delta::Known(7), 2, sub("E7xA1"), 1));
                out.extend(split_at(t, Delta::Known(6), 2, sub("D8"), 1));
                out.extend(split_at(t, Delta::Known(3), 3, sub("E6xA2"), 2));
                out.extend(split_at(t, Delta::Known(1), 2, sub("D5xA3"), 2));
                out.extend(mixed(
                    t,
                    0,
                    &[
                        (Generic, &[(sub("A4xA4"), 4), (sub("A5xA2xA1"), 2)]),
                        (Prime(2), &[(sub("A4xA4"), 4), (sub("E6xA2"), 2)]),
                        (Prime(3), &[(sub("A4xA4"), 4), (sub("E7xA1"), 2)]),
                        (Prime(5), &[(Full, 4), (sub("A5xA2xA1"), 2)]),
                    ],
                    Some(E8_D0_NOTE),
                ));
                out
            }
        },
    }
}

fn pronic_root(n: u32) -> u32 {
    (1..=n).find(|k| k * (k + 1) == n).expect("pronic rank")
}

/// The profile for `(t, d)` in characteristic `class`. Primes without a
/// profile of their own, and characteristic zero, fall under `Generic`.
pub fn centralizer_profile(
    t: CartanType,
    d: Delta,
    class: CharClass,
) -> Result<CentralizerProfile> {
    if n_table(t).get(d) == 0 {
        return Err(Error::NoCuspidal {
            cartan: t,
            d: d.to_string(),
        });
    }
    let for_d: Vec<CentralizerProfile> = centralizer_profiles(t)
        .into_iter()
        .filter(|p| p.d == d)
        .collect();
    let pick = |c: CharClass| for_d.iter().find(|p| p.class == c).cloned();
    let class = match class {
        CharClass::Prime(p) if p < 2 => CharClass::Generic,
        c => c,
    };
    pick(class)
        .or_else(|| pick(CharClass::Generic))
        .ok_or_else(|| Error::NoCentralizerData {
            cartan: t,
            d: d.to_string(),
        })
}

/// Recomputes the unipotent-support case for `(t, d)` from the profiles:
/// the characteristics in which every object has central semisimple part.
pub fn support_case_from_profiles(t: CartanType, d: Delta) -> Result<SupportCase> {
    if t.is_torus() {
        return unipotent_support_case(t, d);
    }
    let for_d: Vec<CentralizerProfile> = centralizer_profiles(t)
        .into_iter()
        .filter(|p| p.d == d)
        .collect();
    if for_d.is_empty() {
        return Err(Error::NoCentralizerData {
            cartan: t,
            d: d.to_string(),
        });
    }
    let generic_full = for_d
        .iter()
        .any(|p| p.class == CharClass::Generic && p.all_full());
    let full_primes: Vec<u32> = for_d
        .iter()
        .filter_map(|p| match p.class {
            CharClass::Prime(r) if p.all_full() => Some(r),
            _ => None,
        })
        .collect();
    Ok(match (generic_full, full_primes.as_slice()) {
        (true, _) => SupportCase::EveryChar,
        (false, [r0]) => SupportCase::UniqueChar { r0: *r0 },
        (false, []) => SupportCase::NoChar,
        (false, _) => {
            return Err(Error::TableData(format!(
                "{t}, d = {d}: several characteristics with central semisimple parts"
            )))
        }
    })
}
