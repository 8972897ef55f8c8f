use std::cmp::Ordering;
use std::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        parts.shrink_to_fit();
        Some(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    pub fn column(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order used for every enumeration: larger size first, then
    /// lexicographically larger first.
    pub fn enumeration_cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.cmp(&self.0))
    }

    /// Comma-separated parts, `-` for the empty partition.
    pub fn write_inner(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }

    /// Parses the inside of a canonical label: `2,1,1`, `2,1^2`, `5`, or
    /// `-` / `0` / `∅` / empty for the empty partition.
    pub fn parse_inner(s: &str) -> Option<Self> {
        let s = s.trim();
        if is_empty_marker(s) {
            return Some(Self::empty());
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            parse_power(item.trim(), &mut parts)?;
        }
        Self::new(parts)
    }

    /// Parses the compact notation with single-digit parts, e.g. `21`,
    /// `1^3`, `2^21`, `0`.
    pub fn parse_compact(s: &str) -> Option<Self> {
        let s = s.trim();
        if is_empty_marker(s) {
            return Some(Self::empty());
        }
        let chars: Vec<char> = s.chars().collect();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let part = chars[i].to_digit(10)?;
            i += 1;
            let mut times = 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let exp: String = chars[start..i].iter().collect();
                times = exp.parse().ok()?;
            }
            parts.extend(std::iter::repeat_n(part, times));
        }
        Self::new(parts)
    }
}

fn is_empty_marker(s: &str) -> bool {
    matches!(s, "" | "-" | "0" | "∅" | "\\emptyset" | "\\emp")
}

fn parse_power(item: &str, parts: &mut Vec<u32>) -> Option<()> {
    let (base, exp) = match item.split_once('^') {
        Some((b, e)) => (b, e.trim_matches(|c| c == '{' || c == '}')),
        None => (item, "1"),
    };
    let base: u32 = base.trim().parse().ok()?;
    let exp: usize = exp.trim().parse().ok()?;
    parts.extend(std::iter::repeat_n(base, exp));
    Some(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        self.write_inner(f)?;
        f.write_str(")")
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n)` first, `(1^n)` last.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of each integer `0..=n`.
pub fn partition_counts(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    p
}

pub fn partition_count(n: u32) -> u64 {
    partition_counts(n)[n as usize]
}
