//! Cuspidal Levi types, cuspidal counts and the parameter set of unipotent
//! character sheaves as triples `(J, E', A')`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, Series};
use crate::error::{Error, Result};
use crate::weyl::{enumerate_irr, CharacterLabel};

/// The invariant `d` of a cuspidal object. Classical cuspidal Levis other
/// than `B_2`, `C_2` and `D_4` carry no stated value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Delta {
    Known(u32),
    Opaque,
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Known(d) => write!(f, "{d}"),
            Delta::Opaque => f.write_str("opaque"),
        }
    }
}

impl std::str::FromStr for Delta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("opaque") {
            return Ok(Delta::Opaque);
        }
        s.parse()
            .map(Delta::Known)
            .map_err(|_| Error::TableData(format!("bad d value {s:?}")))
    }
}

/// A cuspidal Levi `J` of an ambient type. `levi = None` is the maximal
/// torus; `relative = None` is a trivial relative Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CuspidalLevi {
    pub ambient: CartanType,
    pub levi: Option<CartanType>,
    pub relative: Option<CartanType>,
}

impl CuspidalLevi {
    pub fn is_torus(&self) -> bool {
        self.levi.is_none()
    }

    pub fn is_full(&self) -> bool {
        self.relative.is_none()
    }

    /// Type used to look up the Levi's own cuspidal counts.
    pub fn levi_type(&self) -> CartanType {
        self.levi.unwrap_or(CartanType::TORUS)
    }

    /// `Irr` of the relative Weyl group.
    pub fn relative_characters(&self) -> Vec<CharacterLabel> {
        match self.relative {
            Some(t) => enumerate_irr(t).labels,
            None => vec![CharacterLabel::Trivial],
        }
    }
}

impl fmt::Display for CuspidalLevi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.levi {
            Some(t) => write!(f, "{t}"),
            None => f.write_str("-"),
        }
    }
}

fn relative_b(m: u32) -> Option<CartanType> {
    match m {
        0 => None,
        1 => Some(CartanType::unchecked(Series::A, 1)),
        m => Some(CartanType::unchecked(Series::B, m)),
    }
}

/// Cuspidal Levi types of `t`, starting with the maximal torus.
pub fn cuspidal_levis(t: CartanType) -> Vec<CuspidalLevi> {
    let levi = |levi: Option<CartanType>, relative: Option<CartanType>| CuspidalLevi {
        ambient: t,
        levi,
        relative,
    };
    if t.is_torus() {
        return vec![levi(None, None)];
    }
    let mut out = vec![levi(None, Some(t))];
    let n = t.rank();
    match t.series() {
        Series::A | Series::Torus => {}
        Series::B | Series::C => {
            for k in (1..).take_while(|k| k * (k + 1) <= n) {
                let m = k * (k + 1);
                let j = CartanType::unchecked(t.series(), m);
                out.push(levi(Some(j), relative_b(n - m)));
            }
        }
        Series::D => {
            for k in (1..).take_while(|k| 4 * k * k <= n) {
                let m = 4 * k * k;
                out.push(levi(
                    Some(CartanType::unchecked(Series::D, m)),
                    relative_b(n - m),
                ));
            }
        }
        Series::G => out.push(levi(Some(t), None)),
        Series::F => {
            let b2 = CartanType::unchecked(Series::B, 2);
            out.push(levi(Some(b2), Some(b2)));
            out.push(levi(Some(t), None));
        }
        Series::E => {
            let d4 = CartanType::unchecked(Series::D, 4);
            let relative_d4 = match n {
                6 => CartanType::unchecked(Series::A, 2),
                7 => CartanType::unchecked(Series::B, 3),
                _ => CartanType::F4,
            };
            out.push(levi(Some(d4), Some(relative_d4)));
            match n {
                7 => out.push(levi(
                    Some(CartanType::E6),
                    Some(CartanType::unchecked(Series::A, 1)),
                )),
                8 => {
                    out.push(levi(Some(CartanType::E6), Some(CartanType::G2)));
                    out.push(levi(
                        Some(CartanType::E7),
                        Some(CartanType::unchecked(Series::A, 1)),
                    ));
                }
                _ => {}
            }
            out.push(levi(Some(t), None));
        }
    }
    out
}

/// Numbers `N_d` of cuspidal unipotent character sheaves, by `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalCountTable {
    pub ambient: CartanType,
    /// `(d, N_d)` with `N_d > 0`, larger `d` first.
    pub counts: Vec<(Delta, u32)>,
}

impl CuspidalCountTable {
    pub fn get(&self, d: Delta) -> u32 {
        self.counts
            .iter()
            .find(|(k, _)| *k == d)
            .map_or(0, |(_, n)| *n)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().map(|(_, n)| n).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

fn is_pronic(n: u32) -> bool {
    (1..)
        .take_while(|k| k * (k + 1) <= n)
        .any(|k| k * (k + 1) == n)
}

fn is_four_square(n: u32) -> bool {
    (1..).take_while(|k| 4 * k * k <= n).any(|k| 4 * k * k == n)
}

pub fn n_table(t: CartanType) -> CuspidalCountTable {
    let k = Delta::Known;
    let counts = match t.series() {
        Series::Torus => vec![(k(0), 1)],
        Series::G => vec![(k(1), 1), (k(0), 3)],
        Series::F => vec![(k(4), 1), (k(2), 1), (k(1), 1), (k(0), 4)],
        Series::E if t.rank() == 8 => vec![
            (k(16), 1),
            (k(7), 1),
            (k(6), 1),
            (k(3), 2),
            (k(1), 2),
            (k(0), 6),
        ],
        Series::E => vec![(k(0), 2)],
        Series::B | Series::C if t.rank() == 2 => vec![(k(0), 1)],
        Series::D if t.rank() == 4 => vec![(k(0), 1)],
        Series::B | Series::C if is_pronic(t.rank()) => vec![(Delta::Opaque, 1)],
        Series::D if is_four_square(t.rank()) => vec![(Delta::Opaque, 1)],
        _ => Vec::new(),
    };
    CuspidalCountTable { ambient: t, counts }
}

/// One element `(J, E', A')` of the parameter set; `A'` is the pair
/// `(d, index)` with `index < N_d` of the Levi.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SheafTriple {
    pub levi: CuspidalLevi,
    pub character: CharacterLabel,
    pub d: Delta,
    pub index: u32,
}

impl fmt::Display for SheafTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})[{}]",
            self.levi, self.character, self.d, self.index
        )
    }
}

/// All triples, grouped by Levi, then character, then `d`, then index.
pub fn enumerate_cs_prime(t: CartanType) -> Vec<SheafTriple> {
    let mut out = Vec::new();
    for levi in cuspidal_levis(t) {
        let counts = n_table(levi.levi_type());
        for character in levi.relative_characters() {
            for &(d, n) in &counts.counts {
                for index in 0..n {
                    out.push(SheafTriple {
                        levi,
                        character: character.clone(),
                        d,
                        index,
                    });
                }
            }
        }
    }
    out
}

/// Which characteristics carry cuspidal objects with unipotent support,
/// for a fixed `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportCase {
    /// Exactly one prime `r0`.
    UniqueChar { r0: u32 },
    /// Every characteristic, with `d >= 1`.
    EveryChar,
    /// Every characteristic, `d = 0`; tori only.
    Torus,
    /// No characteristic.
    NoChar,
    /// `G_2` with `d = 0`: no single characteristic makes all three
    /// objects unipotently supported, but the type is not listed among the
    /// "no characteristic" cases. Treated as [`SupportCase::NoChar`] when
    /// assigning strata.
    Anomalous,
}

impl SupportCase {
    /// The case actually used to place the triples.
    pub fn effective(self) -> SupportCase {
        match self {
            SupportCase::Anomalous => SupportCase::NoChar,
            other => other,
        }
    }
}

impl fmt::Display for SupportCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportCase::UniqueChar { r0 } => write!(f, "unique-char(r0={r0})"),
            SupportCase::EveryChar => f.write_str("every-char"),
            SupportCase::Torus => f.write_str("torus"),
            SupportCase::NoChar => f.write_str("no-char"),
            SupportCase::Anomalous => f.write_str("anomalous"),
        }
    }
}

pub fn unipotent_support_case(t: CartanType, d: Delta) -> Result<SupportCase> {
    if n_table(t).get(d) == 0 {
        return Err(Error::NoCuspidal {
            cartan: t,
            d: d.to_string(),
        });
    }
    let Delta::Known(dv) = d else {
        return Ok(SupportCase::UniqueChar { r0: 2 });
    };
    use SupportCase::*;
    Ok(match (t.series(), t.rank(), dv) {
        (Series::Torus, _, _) => Torus,
        (Series::E, 8, 16) | (Series::F, _, 4) | (Series::G, _, 1) => EveryChar,
        (Series::E, 8, 0) | (Series::F, _, 0) => NoChar,
        (Series::G, _, 0) => Anomalous,
        (Series::E, 6, 0) | (Series::E, 8, 3) => UniqueChar { r0: 3 },
        _ => UniqueChar { r0: 2 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levi_names(t: CartanType) -> Vec<String> {
        cuspidal_levis(t).iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn levi_lists() {
        assert_eq!(levi_names(CartanType::E7), ["-", "D4", "E6", "E7"]);
        assert_eq!(
            levi_names(CartanType::b(30).unwrap()),
            ["-", "B2", "B6", "B12", "B20", "B30"]
        );
        assert_eq!(levi_names(CartanType::a(7).unwrap()), ["-"]);
        assert_eq!(levi_names(CartanType::d(16).unwrap()), ["-", "D4", "D16"]);
        assert_eq!(levi_names(CartanType::c(6).unwrap()), ["-", "C2", "C6"]);
        let b3 = cuspidal_levis(CartanType::b(3).unwrap());
        assert_eq!(b3[1].relative, Some(CartanType::a(1).unwrap()));
    }

    #[test]
    fn triple_counts() {
        assert_eq!(enumerate_cs_prime(CartanType::TORUS).len(), 1);
        assert_eq!(enumerate_cs_prime(CartanType::b(3).unwrap()).len(), 12);
        assert_eq!(enumerate_cs_prime(CartanType::a(3).unwrap()).len(), 5);
    }

    #[test]
    fn support_cases() {
        use SupportCase::*;
        let k = Delta::Known;
        assert_eq!(
            unipotent_support_case(CartanType::E6, k(0)),
            Ok(UniqueChar { r0: 3 })
        );
        assert_eq!(unipotent_support_case(CartanType::F4, k(4)), Ok(EveryChar));
        assert_eq!(unipotent_support_case(CartanType::G2, k(0)), Ok(Anomalous));
        assert_eq!(unipotent_support_case(CartanType::TORUS, k(0)), Ok(Torus));
        let b6 = CartanType::b(6).unwrap();
        assert_eq!(
            unipotent_support_case(b6, Delta::Opaque),
            Ok(UniqueChar { r0: 2 })
        );
        assert!(unipotent_support_case(CartanType::E6, k(1)).is_err());
    }
}
