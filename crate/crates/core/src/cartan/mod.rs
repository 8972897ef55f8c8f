//! Root-system level data for quasi-simple types and tori.
//!
//! Only diagram combinatorics lives here: the Cartan type itself, its static
//! record (degrees, bad primes, highest-root coefficients, extended diagram)
//! and the enumerator of pseudo-Levi subsystem types.

mod diagram;
mod subsystem;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub use diagram::{Bond, Diagram};
pub use subsystem::{is_pseudo_levi, pseudo_levi_types, SubsystemType};

/// Lettered family of a Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Torus,
}

impl Series {
    pub fn letter(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::Torus => "T",
        }
    }
}

/// A quasi-simple Cartan type in canonical form, or a torus.
///
/// The accepted combinations are `A_{n>=1}`, `B_{n>=2}`, `C_{n>=2}`,
/// `D_{n>=4}`, `E_{6,7,8}`, `F_4`, `G_2` and tori of any rank. Low-rank
/// aliases (`B_1`, `C_1`, `D_2`, `D_3`) are rejected; use
/// [`SubsystemType`] where they need to be identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    series: Series,
    rank: u32,
}

impl CartanType {
    pub const G2: CartanType = CartanType::unchecked(Series::G, 2);
    pub const F4: CartanType = CartanType::unchecked(Series::F, 4);
    pub const E6: CartanType = CartanType::unchecked(Series::E, 6);
    pub const E7: CartanType = CartanType::unchecked(Series::E, 7);
    pub const E8: CartanType = CartanType::unchecked(Series::E, 8);
    pub const TORUS: CartanType = CartanType::unchecked(Series::Torus, 0);

    /// The five exceptional types, in increasing order of size.
    pub const EXCEPTIONAL: [CartanType; 5] = [Self::G2, Self::F4, Self::E6, Self::E7, Self::E8];

    pub fn new(series: Series, rank: u32) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
            Series::Torus => true,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", series.letter(), rank)))
        }
    }

    pub(crate) const fn unchecked(series: Series, rank: u32) -> Self {
        Self { series, rank }
    }

    pub fn a(n: u32) -> Result<Self> {
        Self::new(Series::A, n)
    }

    pub fn b(n: u32) -> Result<Self> {
        Self::new(Series::B, n)
    }

    pub fn c(n: u32) -> Result<Self> {
        Self::new(Series::C, n)
    }

    pub fn d(n: u32) -> Result<Self> {
        Self::new(Series::D, n)
    }

    pub fn series(self) -> Series {
        self.series
    }

    /// Semisimple rank; for a torus, its dimension.
    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_torus(self) -> bool {
        self.series == Series::Torus
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.series, Series::E | Series::F | Series::G)
    }

    pub fn is_classical(self) -> bool {
        matches!(self.series, Series::B | Series::C | Series::D)
    }

    /// Number of simple roots, zero for tori.
    pub fn semisimple_rank(self) -> u32 {
        if self.is_torus() {
            0
        } else {
            self.rank
        }
    }

    /// Degrees of the basic invariants of the Weyl group.
    pub fn degrees(self) -> Vec<u32> {
        let n = self.rank;
        match self.series {
            Series::A => (2..=n + 1).collect(),
            Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
            Series::D => {
                let mut v: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                v.push(n);
                v.sort_unstable();
                v
            }
            Series::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Series::F => vec![2, 6, 8, 12],
            Series::G => vec![2, 6],
            Series::Torus => Vec::new(),
        }
    }

    /// Coxeter number, i.e. the largest degree (1 for tori).
    pub fn coxeter_number(self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(1)
    }

    /// Coefficients of the highest root in the simple roots, in Bourbaki order.
    pub fn highest_root_coeffs(self) -> Vec<u32> {
        let n = self.rank as usize;
        match self.series {
            Series::A => vec![1; n],
            Series::B => {
                let mut v = vec![2; n];
                v[0] = 1;
                v
            }
            Series::C => {
                let mut v = vec![2; n];
                v[n - 1] = 1;
                v
            }
            Series::D => {
                let mut v = vec![2; n];
                v[0] = 1;
                v[n - 2] = 1;
                v[n - 1] = 1;
                v
            }
            Series::E => match n {
                6 => vec![1, 2, 2, 3, 2, 1],
                7 => vec![2, 2, 3, 4, 3, 2, 1],
                _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
            },
            Series::F => vec![2, 3, 4, 2],
            Series::G => vec![3, 2],
            Series::Torus => Vec::new(),
        }
    }

    pub fn bad_primes(self) -> Vec<u32> {
        match self.series {
            Series::A | Series::Torus => Vec::new(),
            Series::B | Series::C | Series::D => vec![2],
            Series::G | Series::F => vec![2, 3],
            Series::E if self.rank == 8 => vec![2, 3, 5],
            Series::E => vec![2, 3],
        }
    }

    /// Largest highest-root coefficient, at least 1.
    pub fn z_value(self) -> u32 {
        self.highest_root_coeffs()
            .into_iter()
            .max()
            .unwrap_or(1)
            .max(1)
    }

    pub fn weyl_order(self) -> BigUint {
        self.degrees()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, d| acc * BigUint::from(d))
    }

    pub fn extended_diagram(self) -> Diagram {
        Diagram::extended(self)
    }
}

impl PartialOrd for CartanType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

// Larger rank first, so products print as E7xA1 or A5xA2xA1.
impl Ord for CartanType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .rank
            .cmp(&self.rank)
            .then(self.series.cmp(&other.series))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_torus() && self.rank == 0 {
            f.write_str("T")
        } else {
            write!(f, "{}{}", self.series.letter(), self.rank)
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `E8`, `E_8`, `e8`, `T`, `Torus`, `T3`, `T_3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("torus") || t.eq_ignore_ascii_case("t") {
            return Ok(Self::TORUS);
        }
        let mut chars = t.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            'T' => Series::Torus,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let digits = digits
            .strip_prefix('{')
            .and_then(|d| d.strip_suffix('}'))
            .unwrap_or(digits);
        let rank: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        Self::new(series, rank)
    }
}

/// The static record attached to a Cartan type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    pub weyl_order: BigUint,
    pub degrees: Vec<u32>,
    pub bad_primes: Vec<u32>,
    pub highest_root_coeffs: Vec<u32>,
    pub z_value: u32,
    pub extended_diagram: Diagram,
}

impl CartanDatum {
    pub fn coxeter_number(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(1)
    }

    /// The set `{1, ..} ∪ highest-root coefficients`, sorted.
    pub fn coefficient_set(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.highest_root_coeffs.clone();
        v.push(1);
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn datum(t: CartanType) -> CartanDatum {
    CartanDatum {
        cartan_type: t,
        weyl_order: t.weyl_order(),
        degrees: t.degrees(),
        bad_primes: t.bad_primes(),
        highest_root_coeffs: t.highest_root_coeffs(),
        z_value: t.z_value(),
        extended_diagram: t.extended_diagram(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_types() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(CartanType::a(n).unwrap());
        }
        for n in 2..=8 {
            v.push(CartanType::b(n).unwrap());
            v.push(CartanType::c(n).unwrap());
        }
        for n in 4..=8 {
            v.push(CartanType::d(n).unwrap());
        }
        v.extend(CartanType::EXCEPTIONAL);
        v
    }

    #[test]
    fn rejects_aliases() {
        for s in ["B1", "C1", "D2", "D3", "E5", "E9", "F3", "G3", "A0"] {
            assert!(s.parse::<CartanType>().is_err(), "{s} accepted");
        }
    }

    #[test]
    fn parses_spellings() {
        assert_eq!("E_8".parse::<CartanType>().unwrap(), CartanType::E8);
        assert_eq!("e8".parse::<CartanType>().unwrap(), CartanType::E8);
        assert_eq!("E_{8}".parse::<CartanType>().unwrap(), CartanType::E8);
        assert_eq!("Torus".parse::<CartanType>().unwrap(), CartanType::TORUS);
        assert_eq!("B30".parse::<CartanType>().unwrap().rank(), 30);
        assert_eq!(CartanType::E8.to_string(), "E8");
        assert_eq!(CartanType::TORUS.to_string(), "T");
    }

    #[test]
    fn z_values() {
        assert_eq!(datum(CartanType::E8).z_value, 6);
        assert_eq!(datum(CartanType::a(5).unwrap()).z_value, 1);
        assert_eq!(datum(CartanType::F4).z_value, 4);
        assert_eq!(datum(CartanType::E7).z_value, 4);
        assert_eq!(datum(CartanType::E6).z_value, 3);
        assert_eq!(datum(CartanType::G2).z_value, 3);
        for t in [CartanType::b(5), CartanType::c(3), CartanType::d(6)] {
            assert_eq!(datum(t.unwrap()).z_value, 2);
        }
        let torus = datum(CartanType::TORUS);
        assert_eq!(torus.z_value, 1);
        assert_eq!(torus.weyl_order, BigUint::from(1u32));
        assert!(torus.extended_diagram.is_empty());
    }

    #[test]
    fn coefficient_sets_are_initial_segments() {
        for t in all_small_types() {
            let d = datum(t);
            let expect: Vec<u32> = (1..=d.z_value).collect();
            assert_eq!(d.coefficient_set(), expect, "{t}");
            assert!([1, 2, 3, 4, 6].contains(&d.z_value));
            assert!(d.bad_primes.iter().all(|p| [2, 3, 5].contains(p)));
        }
    }

    #[test]
    fn coxeter_number_from_highest_root() {
        for t in all_small_types() {
            let d = datum(t);
            let h: u32 = 1 + d.highest_root_coeffs.iter().sum::<u32>();
            assert_eq!(h, d.coxeter_number(), "{t}");
        }
    }

    #[test]
    fn bad_primes_divide_coefficients() {
        for t in all_small_types() {
            let d = datum(t);
            let mut from_coeffs: Vec<u32> = [2, 3, 5]
                .into_iter()
                .filter(|p| d.highest_root_coeffs.iter().any(|c| c % p == 0))
                .collect();
            from_coeffs.sort_unstable();
            assert_eq!(from_coeffs, d.bad_primes, "{t}");
        }
    }

    #[test]
    fn weyl_orders() {
        let order = |t: CartanType| t.weyl_order().to_string();
        assert_eq!(order(CartanType::G2), "12");
        assert_eq!(order(CartanType::F4), "1152");
        assert_eq!(order(CartanType::E6), "51840");
        assert_eq!(order(CartanType::E7), "2903040");
        assert_eq!(order(CartanType::E8), "696729600");
        assert_eq!(order(CartanType::d(4).unwrap()), "192");
        assert_eq!(order(CartanType::b(3).unwrap()), "48");
    }

    #[test]
    fn highest_root_spans_kernel_of_affine_cartan_matrix() {
        for t in all_small_types() {
            let diagram = t.extended_diagram();
            let m = diagram.cartan_matrix();
            let mut coeffs = vec![1i64];
            coeffs.extend(t.highest_root_coeffs().into_iter().map(i64::from));
            assert_eq!(m.len(), coeffs.len(), "{t}");
            for (i, row) in m.iter().enumerate() {
                let s: i64 = row.iter().zip(&coeffs).map(|(a, c)| a * c).sum();
                assert_eq!(s, 0, "{t}: row {i}");
            }
        }
    }
}
