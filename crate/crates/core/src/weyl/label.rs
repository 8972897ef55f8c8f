use std::fmt;

use super::partition::Partition;

/// Tag separating the two characters attached to a symmetric pair `{α|α}`
/// in type D. The tags carry no further meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitTag {
    I,
    II,
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitTag::I => "I",
            SplitTag::II => "II",
        })
    }
}

/// A named character of an exceptional Weyl group.
///
/// `dim` and `b` are read off the name where it encodes them: `4480_16`
/// gives dimension 4480 and b-value 16, `chi_{9,1}` gives dimension 9.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NamedLabel {
    name: String,
    dim: Option<u32>,
    b: Option<u32>,
}

impl NamedLabel {
    /// Wraps an already canonical name.
    pub(crate) fn from_canonical(name: String) -> Self {
        let (dim, b) = dims_from_name(&name);
        Self { name, dim, b }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> Option<u32> {
        self.dim
    }

    pub fn b(&self) -> Option<u32> {
        self.b
    }
}

fn dims_from_name(name: &str) -> (Option<u32>, Option<u32>) {
    if let Some(inner) = name.strip_prefix("chi_{").and_then(|s| s.strip_suffix('}')) {
        let dim = inner.split(',').next().and_then(|d| d.parse().ok());
        return (dim, None);
    }
    if let Some((d, b)) = name.split_once('_') {
        if let (Ok(d), Ok(b)) = (d.parse(), b.parse()) {
            return (Some(d), Some(b));
        }
    }
    let dim = match name {
        "1" | "eps" | "eps_l" | "eps_c" => Some(1),
        "theta'" | "theta''" => Some(2),
        _ => None,
    };
    (dim, None)
}

/// An element of `Irr(W)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CharacterLabel {
    /// Type `A_{n-1}`: a partition of `n`.
    Partition(Partition),
    /// Types `B_n`, `C_n`: an ordered pair with `|α| + |β| = n`.
    Bipartition(Partition, Partition),
    /// Type `D_n`: an unordered pair, stored with `alpha` first in
    /// enumeration order; `split` is present exactly when `alpha == beta`.
    DPair {
        alpha: Partition,
        beta: Partition,
        split: Option<SplitTag>,
    },
    Named(NamedLabel),
    /// The character of the trivial group, used for tori and for relative
    /// Weyl groups that are trivial.
    Trivial,
}

impl CharacterLabel {
    pub fn named(name: &str) -> Self {
        CharacterLabel::Named(NamedLabel::from_canonical(name.to_string()))
    }

    pub fn partition(parts: &[u32]) -> Option<Self> {
        Partition::new(parts.to_vec()).map(CharacterLabel::Partition)
    }

    pub fn bipartition(alpha: &[u32], beta: &[u32]) -> Option<Self> {
        Some(CharacterLabel::Bipartition(
            Partition::new(alpha.to_vec())?,
            Partition::new(beta.to_vec())?,
        ))
    }

    /// Builds a type-D label from an unordered pair, orienting it.
    pub fn d_pair(a: Partition, b: Partition, split: Option<SplitTag>) -> Option<Self> {
        if (a == b) != split.is_some() {
            return None;
        }
        let (alpha, beta) = if a.enumeration_cmp(&b).is_le() {
            (a, b)
        } else {
            (b, a)
        };
        Some(CharacterLabel::DPair { alpha, beta, split })
    }

    /// Dimension where it is determined by the label itself.
    pub fn named_dim(&self) -> Option<u32> {
        match self {
            CharacterLabel::Named(n) => n.dim(),
            CharacterLabel::Trivial => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterLabel::Partition(p) => write!(f, "{p}"),
            CharacterLabel::Bipartition(a, b) => {
                f.write_str("(")?;
                a.write_inner(f)?;
                f.write_str("|")?;
                b.write_inner(f)?;
                f.write_str(")")
            }
            CharacterLabel::DPair { alpha, beta, split } => {
                f.write_str("{")?;
                alpha.write_inner(f)?;
                f.write_str("|")?;
                beta.write_inner(f)?;
                f.write_str("}")?;
                if let Some(tag) = split {
                    write!(f, ":{tag}")?;
                }
                Ok(())
            }
            CharacterLabel::Named(n) => f.write_str(n.name()),
            CharacterLabel::Trivial => f.write_str("1"),
        }
    }
}
