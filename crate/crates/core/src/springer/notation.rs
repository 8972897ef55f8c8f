//! Row notation for strata tables.
//!
//! One row per line: the fibre, `;;`, then the component-group datum.
//!
//! ```text
//! theta', (G2,1,1)         ;; S3,[C2],(S3)
//! 1, (G2,1,0)#3            ;; [C2,C3],(1)
//! 21_3, (D4,(1,2),0), (E6,1,0)#2@b ;; [C2,C3],(1)
//! ```
//!
//! A fibre entry is a bare character (empty Levi, `d = 0`) or a symbol
//! `(J,E',d)`, optionally followed by `#n` for the multiplicity and `@x`
//! for an occurrence tag.
//!
//! The datum lists `A_2, A_3, (A_0)`, with `[...]` marking the groups that
//! form `c(E)` and `-` for undefined entries. A lone `[G]` means the group
//! is `G` in every characteristic. `[G2,G3],(G0)` lists `A_2, A_3` inside
//! one box and `[G2,G3,G5],(G0)` adds `A_5`.
//!
//! Blank lines and lines starting with `//` are ignored.

use super::{Boxed, ComponentGroups, Membership, RawEntry, RawRow};
use crate::cartan::CartanType;
use crate::cuspidal::Delta;
use crate::error::{Error, Result};
use crate::groups::FiniteGroupLabel;

pub(super) fn parse_rows(text: &str) -> Result<Vec<RawRow>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let err = |msg: String| Error::TableData(format!("line {}: {msg}", lineno + 1));
        let (fiber, groups) = line
            .split_once(";;")
            .ok_or_else(|| err("missing ';;'".into()))?;
        let fiber = split_top_level(fiber)
            .into_iter()
            .map(parse_entry)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| err(e.to_string()))?;
        let (groups, boxed, membership) = parse_groups(groups).map_err(|e| err(e.to_string()))?;
        rows.push(RawRow {
            stratum: None,
            fiber,
            groups,
            boxed,
            membership,
        });
    }
    Ok(rows)
}

/// Splits at commas outside `()`, `[]` and `{}`.
pub(super) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn matching_close(s: &str) -> Option<usize> {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_entry(s: &str) -> Result<RawEntry> {
    let bad = |why: &str| Error::TableData(format!("entry {s:?}: {why}"));
    if s.starts_with('(') {
        if let Some(close) = matching_close(s) {
            let inner = &s[1..close];
            let parts = split_top_level(inner);
            if parts.len() == 3 {
                if let Ok(levi) = parts[0].parse::<CartanType>() {
                    let (mult, disamb) =
                        parse_suffix(&s[close + 1..]).ok_or_else(|| bad("bad suffix"))?;
                    let d: Delta = parts[2].parse()?;
                    return Ok(RawEntry {
                        levi: Some(levi),
                        character: parts[1].to_string(),
                        d,
                        mult,
                        disamb,
                    });
                }
            }
        }
    }
    if s.is_empty() {
        return Err(bad("empty"));
    }
    Ok(RawEntry {
        levi: None,
        character: s.to_string(),
        d: Delta::Known(0),
        mult: 1,
        disamb: None,
    })
}

fn parse_suffix(s: &str) -> Option<(u32, Option<char>)> {
    let s = s.trim();
    let (body, disamb) = match s.split_once('@') {
        Some((body, tag)) => {
            let mut chars = tag.trim().chars();
            let c = chars.next()?;
            if chars.next().is_some() || !c.is_ascii_lowercase() {
                return None;
            }
            (body.trim(), Some(c))
        }
        None => (s, None),
    };
    let mult = match body.strip_prefix('#') {
        Some(n) => n.trim().parse().ok()?,
        None if body.is_empty() => 1,
        None => return None,
    };
    Some((mult, disamb))
}

struct Slot {
    group: Option<FiniteGroupLabel>,
    boxed: bool,
}

fn parse_group(s: &str) -> Result<Option<FiniteGroupLabel>> {
    let s = s.trim();
    if s == "-" {
        Ok(None)
    } else {
        s.parse().map(Some)
    }
}

fn parse_groups(s: &str) -> Result<(ComponentGroups, Boxed, Membership)> {
    let bad = |why: &str| Error::TableData(format!("group datum {s:?}: {why}"));
    let mut slots = Vec::new();
    let mut zero: Option<Option<FiniteGroupLabel>> = None;
    for item in split_top_level(s.trim()) {
        if let Some(inner) = item.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            for g in split_top_level(inner) {
                slots.push(Slot {
                    group: parse_group(g)?,
                    boxed: true,
                });
            }
        } else if let Some(inner) = item.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            if zero.is_some() {
                return Err(bad("two characteristic-zero entries"));
            }
            zero = Some(parse_group(inner)?);
        } else {
            slots.push(Slot {
                group: parse_group(item)?,
                boxed: false,
            });
        }
    }

    let Some(r0) = zero else {
        if let [only] = slots.as_slice() {
            let g = only
                .group
                .ok_or_else(|| bad("a lone entry must be a group"))?;
            if !only.boxed {
                return Err(bad("a lone entry must be boxed"));
            }
            return Ok((
                ComponentGroups::constant(g),
                Boxed::Single,
                Membership::Full,
            ));
        }
        return Err(bad("missing characteristic-zero entry"));
    };
    let primes = [2u32, 3, 5];
    if slots.len() < 2 || slots.len() > 3 {
        return Err(bad("expected two or three positional entries"));
    }
    let mut groups = ComponentGroups {
        r0,
        ..ComponentGroups::default()
    };
    let mut boxed = Vec::new();
    for (slot, &r) in slots.iter().zip(&primes) {
        match r {
            2 => groups.r2 = slot.group,
            3 => groups.r3 = slot.group,
            _ => groups.r5 = slot.group,
        }
        if slot.boxed {
            boxed.push(r);
        }
    }
    let defined: Vec<u32> = [0, 2, 3, 5]
        .into_iter()
        .filter(|&r| groups.stored(r).is_some())
        .collect();
    let membership = match (r0, defined.as_slice()) {
        (None, [r]) => Membership::Singleton(*r),
        (None, _) => return Err(bad("dash rows must define exactly one group")),
        (Some(_), _) => Membership::Full,
    };
    Ok((groups, Boxed::Primes(boxed), membership))
}
