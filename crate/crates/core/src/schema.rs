//! JSON documents: the `strata-table/1` table format and the triple and
//! stratum listings.
//!
//! ```json
//! {
//!   "schema": "strata-table/1",
//!   "type": "G2",
//!   "rows": [
//!     {
//!       "stratum": "theta'",
//!       "fiber": [
//!         { "levi": "empty", "character": "theta'", "d": 0, "mult": 1 },
//!         { "levi": "G2", "character": "1", "d": 1, "mult": 1 }
//!       ],
//!       "groups": { "r0": "S3", "r2": "S3", "r3": "C2" },
//!       "boxed": ["3"],
//!       "membership": "full"
//!     }
//!   ]
//! }
//! ```
//!
//! `levi` is `"empty"` for the maximal torus, `d` is an integer or
//! `"opaque"`, `boxed` is `["single"]` or a list of primes, `membership` is
//! `"full"` or `"singleton:r"`, and `disamb` is an optional one-letter
//! occurrence tag. Characters are written as printed, before occurrence
//! tags are resolved. Output is pretty-printed with a trailing newline and
//! fixed key order.

use serde::{Deserialize, Serialize};

use crate::cartan::CartanType;
use crate::cuspidal::{enumerate_cs_prime, Delta};
use crate::error::{Error, Result};
use crate::groups::FiniteGroupLabel;
use crate::springer::{Boxed, ComponentGroups, Membership, RawEntry, RawRow, StrataTable};

pub const TABLE_SCHEMA: &str = "strata-table/1";
pub const TRIPLES_SCHEMA: &str = "strata-triples/1";
pub const STRATA_SCHEMA: &str = "strata-list/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    schema: String,
    #[serde(rename = "type")]
    cartan_type: String,
    rows: Vec<RowDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RowDoc {
    stratum: String,
    fiber: Vec<EntryDoc>,
    groups: GroupsDoc,
    boxed: Vec<String>,
    membership: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    levi: String,
    character: String,
    d: DeltaDoc,
    mult: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    disamb: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum DeltaDoc {
    Known(u32),
    Word(String),
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r0: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r3: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r5: Option<String>,
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn levi_name(levi: Option<CartanType>) -> String {
    levi.map_or_else(|| "empty".to_string(), |t| t.to_string())
}

fn delta_doc(d: Delta) -> DeltaDoc {
    match d {
        Delta::Known(d) => DeltaDoc::Known(d),
        Delta::Opaque => DeltaDoc::Word("opaque".into()),
    }
}

/// Serializes a table as a `strata-table/1` document.
pub fn export_table(table: &StrataTable) -> String {
    let group = |g: Option<FiniteGroupLabel>| g.map(|g| g.to_string());
    let rows = table
        .rows
        .iter()
        .map(|row| RowDoc {
            stratum: row.stratum.to_string(),
            fiber: row
                .fiber
                .iter()
                .map(|e| EntryDoc {
                    levi: levi_name(e.levi),
                    character: e.printed.to_string(),
                    d: delta_doc(e.d),
                    mult: e.mult,
                    disamb: e.disamb.map(String::from),
                })
                .collect(),
            groups: GroupsDoc {
                r0: group(row.groups.r0),
                r2: group(row.groups.r2),
                r3: group(row.groups.r3),
                r5: group(row.groups.r5),
            },
            boxed: match &row.boxed {
                Boxed::Single => vec!["single".into()],
                Boxed::Primes(ps) => ps.iter().map(u32::to_string).collect(),
            },
            membership: row.membership.to_string(),
        })
        .collect();
    to_pretty(&TableDoc {
        schema: TABLE_SCHEMA.into(),
        cartan_type: table.cartan_type.to_string(),
        rows,
    })
}

fn schema_err(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn parse_group(field: &str, s: &Option<String>) -> Result<Option<FiniteGroupLabel>> {
    s.as_deref()
        .map(|g| {
            g.parse()
                .map_err(|_| schema_err(format!("{field}: unknown group {g:?}")))
        })
        .transpose()
}

fn parse_row(i: usize, row: RowDoc) -> Result<RawRow> {
    let at = |msg: String| schema_err(format!("row {}: {msg}", i + 1));
    let fiber = row
        .fiber
        .into_iter()
        .map(|e| {
            let levi = match e.levi.as_str() {
                "empty" => None,
                s => Some(s.parse().map_err(|_| at(format!("bad levi {s:?}")))?),
            };
            let d = match e.d {
                DeltaDoc::Known(d) => Delta::Known(d),
                DeltaDoc::Word(w) if w == "opaque" => Delta::Opaque,
                DeltaDoc::Word(w) => return Err(at(format!("bad d {w:?}"))),
            };
            let disamb = match e.disamb.as_deref() {
                None => None,
                Some(tag) => {
                    let mut chars = tag.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) if c.is_ascii_lowercase() => Some(c),
                        _ => return Err(at(format!("bad disamb {tag:?}"))),
                    }
                }
            };
            if e.mult == 0 {
                return Err(at("mult must be positive".into()));
            }
            Ok(RawEntry {
                levi,
                character: e.character,
                d,
                mult: e.mult,
                disamb,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let groups = ComponentGroups {
        r0: parse_group("r0", &row.groups.r0).map_err(|e| at(e.to_string()))?,
        r2: parse_group("r2", &row.groups.r2).map_err(|e| at(e.to_string()))?,
        r3: parse_group("r3", &row.groups.r3).map_err(|e| at(e.to_string()))?,
        r5: parse_group("r5", &row.groups.r5).map_err(|e| at(e.to_string()))?,
    };
    let boxed = match row.boxed.as_slice() {
        [s] if s == "single" => Boxed::Single,
        items => Boxed::Primes(
            items
                .iter()
                .map(|p| match p.parse::<u32>() {
                    Ok(r @ (2 | 3 | 5)) => Ok(r),
                    _ => Err(at(format!("bad boxed entry {p:?}"))),
                })
                .collect::<Result<_>>()?,
        ),
    };
    let membership = match row.membership.as_str() {
        "full" => Membership::Full,
        m => match m.strip_prefix("singleton:").map(str::parse::<u32>) {
            Some(Ok(r @ (0 | 2 | 3 | 5))) => Membership::Singleton(r),
            _ => return Err(at(format!("bad membership {m:?}"))),
        },
    };
    Ok(RawRow {
        stratum: Some(row.stratum),
        fiber,
        groups,
        boxed,
        membership,
    })
}

/// Parses and validates a `strata-table/1` document.
pub fn import_table(doc: &str) -> Result<StrataTable> {
    let doc: TableDoc = serde_json::from_str(doc).map_err(|e| schema_err(e.to_string()))?;
    if doc.schema != TABLE_SCHEMA {
        return Err(schema_err(format!(
            "expected schema {TABLE_SCHEMA:?}, found {:?}",
            doc.schema
        )));
    }
    let t: CartanType = doc
        .cartan_type
        .parse()
        .map_err(|_| schema_err(format!("bad type {:?}", doc.cartan_type)))?;
    let rows = doc
        .rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| parse_row(i, r))
        .collect::<Result<Vec<_>>>()?;
    StrataTable::from_raw(t, rows)
}

#[derive(Serialize)]
struct TriplesDoc {
    schema: &'static str,
    #[serde(rename = "type")]
    cartan_type: String,
    triples: Vec<TripleDoc>,
}

#[derive(Serialize)]
struct TripleDoc {
    levi: String,
    character: String,
    d: DeltaDoc,
    index: u32,
}

/// The parameter set of `t` as a JSON listing.
pub fn export_triples(t: CartanType) -> String {
    let triples = enumerate_cs_prime(t)
        .into_iter()
        .map(|tr| TripleDoc {
            levi: levi_name(tr.levi.levi),
            character: tr.character.to_string(),
            d: delta_doc(tr.d),
            index: tr.index,
        })
        .collect();
    to_pretty(&TriplesDoc {
        schema: TRIPLES_SCHEMA,
        cartan_type: t.to_string(),
        triples,
    })
}

#[derive(Serialize)]
struct StrataDoc {
    schema: &'static str,
    #[serde(rename = "type")]
    cartan_type: String,
    strata: Vec<StratumDoc>,
}

#[derive(Serialize)]
struct StratumDoc {
    label: String,
    fiber_size: u32,
}

/// The strata of a table with their fibre sizes.
pub fn export_strata(table: &StrataTable) -> String {
    to_pretty(&StrataDoc {
        schema: STRATA_SCHEMA,
        cartan_type: table.cartan_type.to_string(),
        strata: table
            .rows
            .iter()
            .map(|r| StratumDoc {
                label: r.stratum.to_string(),
                fiber_size: r.fiber_size(),
            })
            .collect(),
    })
}
