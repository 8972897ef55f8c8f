//! The small finite groups that occur as component groups, with their
//! irreducible representations, and a permutation-group oracle that
//! recounts conjugacy classes from explicit elements.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteGroupLabel {
    Triv,
    C2,
    C3,
    C4,
    C5,
    C6,
    C2xC2,
    C2xC3,
    S3,
    S4,
    S5,
    D8,
    S3xC2,
}

/// An irreducible representation in a group's inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Irrep {
    pub name: &'static str,
    pub dim: u32,
}

const fn irr(name: &'static str, dim: u32) -> Irrep {
    Irrep { name, dim }
}

const CYCLIC_NAMES: [&str; 6] = ["chi^0", "chi^1", "chi^2", "chi^3", "chi^4", "chi^5"];

impl FiniteGroupLabel {
    pub const ALL: [FiniteGroupLabel; 13] = [
        Self::Triv,
        Self::C2,
        Self::C3,
        Self::C4,
        Self::C5,
        Self::C6,
        Self::C2xC2,
        Self::C2xC3,
        Self::S3,
        Self::S4,
        Self::S5,
        Self::D8,
        Self::S3xC2,
    ];

    pub fn cyclic(m: u32) -> Option<Self> {
        Some(match m {
            1 => Self::Triv,
            2 => Self::C2,
            3 => Self::C3,
            4 => Self::C4,
            5 => Self::C5,
            6 => Self::C6,
            _ => return None,
        })
    }

    /// Order of a cyclic group, `None` for non-cyclic ones.
    pub fn cyclic_order(self) -> Option<u32> {
        match self {
            Self::Triv => Some(1),
            Self::C2 => Some(2),
            Self::C3 => Some(3),
            Self::C4 => Some(4),
            Self::C5 => Some(5),
            Self::C6 => Some(6),
            _ => None,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Self::C2xC2 => 4,
            Self::C2xC3 | Self::S3 => 6,
            Self::S4 => 24,
            Self::S5 => 120,
            Self::D8 => 8,
            Self::S3xC2 => 12,
            cyclic => cyclic.cyclic_order().expect("cyclic"),
        }
    }

    pub fn irreps(self) -> Vec<Irrep> {
        match self {
            Self::Triv => vec![irr("1", 1)],
            Self::C2 | Self::C3 | Self::C4 | Self::C5 | Self::C6 => {
                let m = self.cyclic_order().expect("cyclic") as usize;
                CYCLIC_NAMES[..m].iter().map(|n| irr(n, 1)).collect()
            }
            Self::C2xC2 => vec![irr("1", 1), irr("a", 1), irr("b", 1), irr("ab", 1)],
            Self::C2xC3 => vec![
                irr("1", 1),
                irr("w", 1),
                irr("w^2", 1),
                irr("s", 1),
                irr("sw", 1),
                irr("sw^2", 1),
            ],
            Self::S3 => vec![irr("1", 1), irr("sgn", 1), irr("refl", 2)],
            Self::S4 => vec![
                irr("1", 1),
                irr("sgn", 1),
                irr("2", 2),
                irr("3", 3),
                irr("3'", 3),
            ],
            Self::S5 => vec![
                irr("1", 1),
                irr("sgn", 1),
                irr("4", 4),
                irr("4'", 4),
                irr("5", 5),
                irr("5'", 5),
                irr("6", 6),
            ],
            Self::D8 => vec![
                irr("1", 1),
                irr("e1", 1),
                irr("e2", 1),
                irr("e3", 1),
                irr("2", 2),
            ],
            Self::S3xC2 => vec![
                irr("1+", 1),
                irr("sgn+", 1),
                irr("refl+", 2),
                irr("1-", 1),
                irr("sgn-", 1),
                irr("refl-", 2),
            ],
        }
    }

    /// Indices into `self.irreps()` of the representations pulled back
    /// along the surjection `self -> quotient`, when one is tabulated.
    pub fn pullback(self, quotient: FiniteGroupLabel) -> Option<Vec<usize>> {
        use FiniteGroupLabel::*;
        if quotient == Triv {
            return Some(vec![0]);
        }
        if quotient == self {
            return Some((0..self.irreps().len()).collect());
        }
        Some(match (self, quotient) {
            (C2xC3, C2) | (C6, C2) => vec![0, 3],
            (C4, C2) => vec![0, 2],
            (C6, C3) => vec![0, 2, 4],
            (C2xC3, C3) => vec![0, 1, 2],
            (S3, C2) | (S4, C2) | (S5, C2) => vec![0, 1],
            (S4, S3) => vec![0, 1, 2],
            _ => return None,
        })
    }

    /// Generators as permutations of `0..5`.
    pub fn generators(self) -> Vec<Vec<usize>> {
        let cycle = |points: &[usize]| {
            let mut p: Vec<usize> = (0..5).collect();
            for (i, &a) in points.iter().enumerate() {
                p[a] = points[(i + 1) % points.len()];
            }
            p
        };
        match self {
            Self::Triv => vec![cycle(&[0])],
            Self::C2 => vec![cycle(&[0, 1])],
            Self::C3 => vec![cycle(&[0, 1, 2])],
            Self::C4 => vec![cycle(&[0, 1, 2, 3])],
            Self::C5 => vec![cycle(&[0, 1, 2, 3, 4])],
            Self::C6 => vec![cycle(&[0, 1]), cycle(&[2, 3, 4])],
            Self::C2xC2 => vec![cycle(&[0, 1]), cycle(&[2, 3])],
            Self::C2xC3 => vec![cycle(&[0, 1]), cycle(&[2, 3, 4])],
            Self::S3 => vec![cycle(&[0, 1]), cycle(&[0, 1, 2])],
            Self::S4 => vec![cycle(&[0, 1]), cycle(&[0, 1, 2, 3])],
            Self::S5 => vec![cycle(&[0, 1]), cycle(&[0, 1, 2, 3, 4])],
            Self::D8 => vec![cycle(&[0, 1, 2, 3]), cycle(&[1, 3])],
            Self::S3xC2 => vec![cycle(&[0, 1]), cycle(&[0, 1, 2]), cycle(&[3, 4])],
        }
    }
}

impl fmt::Display for FiniteGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Triv => "1",
            Self::C2 => "C2",
            Self::C3 => "C3",
            Self::C4 => "C4",
            Self::C5 => "C5",
            Self::C6 => "C6",
            Self::C2xC2 => "C2xC2",
            Self::C2xC3 => "C2xC3",
            Self::S3 => "S3",
            Self::S4 => "S4",
            Self::S5 => "S5",
            Self::D8 => "D8",
            Self::S3xC2 => "S3xC2",
        })
    }
}

impl FromStr for FiniteGroupLabel {
    type Err = Error;

    /// Accepts the display forms plus `S2`, `C1`, `{1}`, `S_3`, `C2×C3`,
    /// `C3xC2`, `C2xS3` and `\D_8`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .trim()
            .replace("\\T", "x")
            .replace('×', "x")
            .replace("\\D", "D")
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}' | '$'))
            .collect();
        if matches!(t.as_str(), "1" | "C1" | "S1" | "Triv" | "triv") {
            return Ok(Self::Triv);
        }
        let mut key: Vec<&str> = t
            .split(['x', 'X'])
            .map(|f| if f == "S2" { "C2" } else { f })
            .collect();
        key.sort_unstable();
        Ok(match key.as_slice() {
            ["C2"] => Self::C2,
            ["C3"] => Self::C3,
            ["C4"] => Self::C4,
            ["C5"] => Self::C5,
            ["C6"] => Self::C6,
            ["C2", "C2"] => Self::C2xC2,
            ["C2", "C3"] => Self::C2xC3,
            ["S3"] => Self::S3,
            ["S4"] => Self::S4,
            ["S5"] => Self::S5,
            ["D8"] => Self::D8,
            ["C2", "S3"] => Self::S3xC2,
            _ => return Err(Error::BadGroup(s.to_string())),
        })
    }
}

/// Class data recomputed from an explicit list of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCensus {
    pub order: usize,
    pub class_count: usize,
    /// Order of the abelianization, i.e. the number of linear characters.
    pub abelianization: usize,
}

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a ∘ b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn closure(generators: &[Perm]) -> Vec<Perm> {
    let identity: Perm = (0..generators[0].len()).collect();
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out
}

/// Generates the group from its permutation generators and counts classes
/// by brute force.
pub fn census(group: FiniteGroupLabel) -> GroupCensus {
    let elements = closure(&group.generators());
    let mut classes: Vec<BTreeSet<Perm>> = Vec::new();
    let mut assigned: HashSet<Perm> = HashSet::new();
    for x in &elements {
        if assigned.contains(x) {
            continue;
        }
        let class: BTreeSet<Perm> = elements
            .iter()
            .map(|g| compose(&compose(g, x), &inverse(g)))
            .collect();
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    let commutators: Vec<Perm> = elements
        .iter()
        .flat_map(|a| {
            elements
                .iter()
                .map(move |b| compose(&compose(a, b), &compose(&inverse(a), &inverse(b))))
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    let derived = closure(&commutators).len();
    GroupCensus {
        order: elements.len(),
        class_count: classes.len(),
        abelianization: elements.len() / derived,
    }
}
