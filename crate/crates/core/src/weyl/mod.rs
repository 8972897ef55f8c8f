//! Labels for irreducible characters of Weyl groups.
//!
//! Classical types are enumerated combinatorially; the exceptional
//! registries are the sets of characters that occur with empty Levi in the
//! embedded strata tables, in table order.
//!
//! # Label grammar
//!
//! ```text
//! label       = partition | bipartition | d-pair | name | "1"
//! partition   = "(" parts ")"                       (* type A *)
//! bipartition = "(" side "|" side ")"               (* types B, C *)
//! d-pair      = "{" side "|" side "}" [ ":" split ] (* type D *)
//! split       = "I" | "II"
//! side        = "-" | parts
//! parts       = part { "," part }
//! part        = integer [ "^" integer ]
//! name        = e-name | f-name | g-name
//! e-name      = integer "_" integer                 (* dim_b, e.g. 4480_16 *)
//! f-name      = "chi_{" integer [ "," integer ] "}"
//! g-name      = "1" | "eps" | "eps_l" | "eps_c" | "theta'" | "theta''"
//! ```
//!
//! The parser also accepts the typeset spellings (`χ_{9,1}`, `ε_l`, `θ''`,
//! `4480_{16}`), pairs of compact partitions such as `(21,0)` or `(0,1^3)`
//! for types B and C, and a few names for small groups:
//!
//! | type    | name    | label       |
//! |---------|---------|-------------|
//! | `A_n`   | `1`     | `(n+1)`     |
//! | `A_n`   | `eps`   | `(1^{n+1})` |
//! | `A_2`   | `phi`   | `(2,1)`     |
//! | `B_2`   | `1`     | `(2\|-)`    |
//! | `B_2`   | `eps`   | `(-\|1,1)`  |
//! | `B_2`   | `theta` | `(1\|1)`    |
//! | `B_2`   | `eps_l` | `(1,1\|-)`  |
//! | `B_2`   | `eps_c` | `(-\|2)`    |

mod label;
mod partition;

use std::sync::{Arc, OnceLock};

use crate::cartan::{CartanType, Series};
use crate::error::{Error, Result};

pub use label::{CharacterLabel, NamedLabel, SplitTag};
pub use partition::{partition_count, partition_counts, partitions, Partition};

/// The ordered set `Irr(W)` for one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrRegistry {
    pub cartan_type: CartanType,
    pub labels: Vec<CharacterLabel>,
}

impl IrrRegistry {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: &CharacterLabel) -> bool {
        self.labels.contains(label)
    }

    pub fn position(&self, label: &CharacterLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CharacterLabel> {
        self.labels.iter()
    }
}

/// Ordered pairs `(α, β)` with `|α| + |β| = n`: larger `|α|` first, then
/// each side lexicographically decreasing.
pub fn bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let right = partitions(n - a);
        for alpha in partitions(a) {
            for beta in &right {
                out.push((alpha.clone(), beta.clone()));
            }
        }
    }
    out
}

pub fn enumerate_irr(t: CartanType) -> IrrRegistry {
    let n = t.rank();
    let labels = match t.series() {
        Series::Torus => vec![CharacterLabel::Trivial],
        Series::A => partitions(n + 1)
            .into_iter()
            .map(CharacterLabel::Partition)
            .collect(),
        Series::B | Series::C => bipartitions(n)
            .into_iter()
            .map(|(a, b)| CharacterLabel::Bipartition(a, b))
            .collect(),
        Series::D => {
            let mut v = Vec::new();
            for (alpha, beta) in bipartitions(n) {
                match alpha.enumeration_cmp(&beta) {
                    std::cmp::Ordering::Less => v.push(CharacterLabel::DPair {
                        alpha,
                        beta,
                        split: None,
                    }),
                    std::cmp::Ordering::Equal => {
                        for tag in [SplitTag::I, SplitTag::II] {
                            v.push(CharacterLabel::DPair {
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                                split: Some(tag),
                            });
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            v
        }
        Series::E | Series::F | Series::G => exceptional_registry(t).labels.clone(),
    };
    IrrRegistry {
        cartan_type: t,
        labels,
    }
}

fn exceptional_registry(t: CartanType) -> Arc<IrrRegistry> {
    // One cell per type: building the E8 table parses F4 labels.
    static CACHE: [OnceLock<Arc<IrrRegistry>>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let i = CartanType::EXCEPTIONAL
        .iter()
        .position(|&e| e == t)
        .expect("exceptional type");
    CACHE[i]
        .get_or_init(|| {
            let table = crate::springer::embedded_table(t).expect("embedded table");
            Arc::new(IrrRegistry {
                cartan_type: t,
                labels: table.empty_entry_labels(),
            })
        })
        .clone()
}

/// `|Irr(W)|`, from the generating identities for classical types.
pub fn irr_count(t: CartanType) -> u64 {
    let n = t.rank();
    match t.series() {
        Series::Torus => 1,
        Series::A => partition_count(n + 1),
        Series::B | Series::C => ordered_pair_count(n),
        Series::D => {
            let p = partition_counts(n);
            let symmetric = if n.is_multiple_of(2) {
                p[(n / 2) as usize]
            } else {
                0
            };
            (ordered_pair_count(n) + 3 * symmetric) / 2
        }
        Series::E | Series::F | Series::G => exceptional_registry(t).len() as u64,
    }
}

fn ordered_pair_count(n: u32) -> u64 {
    let p = partition_counts(n);
    (0..=n as usize).map(|a| p[a] * p[n as usize - a]).sum()
}

/// Parses a label for `t`; see the module documentation for the grammar.
pub fn parse_label(t: CartanType, s: &str) -> Result<CharacterLabel> {
    let bad = |reason: &str| Error::BadLabel {
        cartan: t.to_string(),
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let text = normalize_typography(s);
    let n = t.rank();
    match t.series() {
        Series::Torus => match text.as_str() {
            "1" | "triv" | "trivial" => Ok(CharacterLabel::Trivial),
            _ => Err(bad("a torus has only the trivial label 1")),
        },
        Series::A => {
            if let Some(label) = small_alias(t, &text) {
                return Ok(label);
            }
            let inner = strip_delims(&text, '(', ')');
            let p = Partition::parse_inner(inner)
                .filter(|p| p.size() == n + 1)
                .or_else(|| Partition::parse_compact(inner).filter(|p| p.size() == n + 1))
                .ok_or_else(|| bad(&format!("expected a partition of {}", n + 1)))?;
            Ok(CharacterLabel::Partition(p))
        }
        Series::B | Series::C => {
            if let Some(label) = small_alias(t, &text) {
                return Ok(label);
            }
            let (a, b) = parse_pair(&text).ok_or_else(|| bad("expected (alpha|beta)"))?;
            if a.size() + b.size() != n {
                return Err(bad(&format!("sizes must add up to {n}")));
            }
            Ok(CharacterLabel::Bipartition(a, b))
        }
        Series::D => {
            let (body, split) = match text.rsplit_once(':') {
                Some((body, "I")) => (body, Some(SplitTag::I)),
                Some((body, "II")) => (body, Some(SplitTag::II)),
                Some(_) => return Err(bad("split tag must be I or II")),
                None => (text.as_str(), None),
            };
            let inner = strip_delims(body, '{', '}');
            let (a, b) =
                parse_pair(&format!("({inner})")).ok_or_else(|| bad("expected {alpha|beta}"))?;
            if a.size() + b.size() != n {
                return Err(bad(&format!("sizes must add up to {n}")));
            }
            match (a == b, split.is_some()) {
                (true, false) => return Err(bad("symmetric pair needs a split tag :I or :II")),
                (false, true) => return Err(bad("split tag only applies to symmetric pairs")),
                _ => {}
            }
            Ok(CharacterLabel::d_pair(a, b, split).expect("checked"))
        }
        Series::E | Series::F | Series::G => {
            let name = canonical_name(t.series(), &text).ok_or_else(|| bad("malformed name"))?;
            let label = CharacterLabel::named(&name);
            if exceptional_registry(t).contains(&label) {
                Ok(label)
            } else {
                Err(bad("unknown character name"))
            }
        }
    }
}

/// Parses a named label without consulting any registry.
pub(crate) fn parse_named_unchecked(series: Series, s: &str) -> Option<CharacterLabel> {
    canonical_name(series, &normalize_typography(s)).map(|n| CharacterLabel::named(&n))
}

fn small_alias(t: CartanType, s: &str) -> Option<CharacterLabel> {
    let n = t.rank();
    match (t.series(), s) {
        (Series::A, "1") => Some(CharacterLabel::Partition(Partition::row(n + 1))),
        (Series::A, "eps") => Some(CharacterLabel::Partition(Partition::column(n + 1))),
        (Series::A, "phi") if n == 2 => CharacterLabel::partition(&[2, 1]),
        (Series::B | Series::C, _) if n == 2 => match s {
            "1" => CharacterLabel::bipartition(&[2], &[]),
            "eps" => CharacterLabel::bipartition(&[], &[1, 1]),
            "theta" => CharacterLabel::bipartition(&[1], &[1]),
            "eps_l" => CharacterLabel::bipartition(&[1, 1], &[]),
            "eps_c" => CharacterLabel::bipartition(&[], &[2]),
            _ => None,
        },
        _ => None,
    }
}

fn strip_delims(s: &str, open: char, close: char) -> &str {
    s.strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .unwrap_or(s)
}

/// `(α|β)` with canonical sides, or `(x,y)` with compact sides.
fn parse_pair(s: &str) -> Option<(Partition, Partition)> {
    let inner = strip_delims(s.trim(), '(', ')');
    if let Some((a, b)) = inner.split_once('|') {
        return Some((Partition::parse_inner(a)?, Partition::parse_inner(b)?));
    }
    let (a, b) = inner.split_once(',')?;
    if b.contains(',') {
        return None;
    }
    Some((Partition::parse_compact(a)?, Partition::parse_compact(b)?))
}

fn normalize_typography(s: &str) -> String {
    let mut t: String = s
        .trim()
        .trim_matches('$')
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    for (from, to) in [
        ("\\emptyset", "-"),
        ("\\chi", "chi"),
        ("\\c", "chi"),
        ("χ", "chi"),
        ("\\varepsilon", "eps"),
        ("\\epsilon", "eps"),
        ("\\e", "eps"),
        ("ε", "eps"),
        ("\\theta", "theta"),
        ("\\th", "theta"),
        ("θ", "theta"),
        ("\\phi", "phi"),
        ("\\ph", "phi"),
        ("φ", "phi"),
        ("″", "''"),
        ("′", "'"),
        ("∅", "-"),
    ] {
        t = t.replace(from, to);
    }
    t
}

fn canonical_name(series: Series, s: &str) -> Option<String> {
    let unbraced: String = s.chars().filter(|c| *c != '{' && *c != '}').collect();
    match series {
        Series::E => {
            let (d, b) = unbraced.split_once('_')?;
            let d: u32 = d.parse().ok()?;
            let b: u32 = b.parse().ok()?;
            Some(format!("{d}_{b}"))
        }
        Series::F => {
            let inner = unbraced.strip_prefix("chi_")?;
            let ok = !inner.is_empty()
                && inner.split(',').count() <= 2
                && inner
                    .split(',')
                    .all(|x| !x.is_empty() && x.chars().all(|c| c.is_ascii_digit()));
            ok.then(|| format!("chi_{{{inner}}}"))
        }
        Series::G => match unbraced.as_str() {
            "1" | "eps" | "eps_l" | "eps_c" | "theta'" | "theta''" => Some(unbraced),
            _ => None,
        },
        _ => None,
    }
}
