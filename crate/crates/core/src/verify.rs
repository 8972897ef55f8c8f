//! The verification suite: every structural identity the data must satisfy,
//! run per type and collected into a report.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::cartan::{is_pseudo_levi, CartanType};
use crate::catalog::{check_placement, Catalog};
use crate::cuspidal::{cuspidal_levis, enumerate_cs_prime, n_table, unipotent_support_case};
use crate::groups::{census, FiniteGroupLabel};
use crate::springer::{
    centralizer_profiles, errata_for, support_case_from_profiles, CentralizerType, Erratum,
    Membership, StrataTable,
};
use crate::strata::{self, recomputed_boxed, regular_fiber_labels, unit_label};
use crate::weyl::{enumerate_irr, irr_count, parse_label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub cartan_type: CartanType,
    pub checks: Vec<Check>,
    pub errata: Vec<&'static Erratum>,
}

/// Check ids in the order they run.
pub const CHECK_IDS: [&str; 11] = [
    "irr-enumeration",
    "cs-enumeration",
    "triple-placement",
    "retraction",
    "empty-entry-completeness",
    "boxed-recomputation",
    "fiber-cstar-cardinality",
    "regular-fiber-count",
    "centralizer-profiles",
    "support-classification",
    "group-inventories",
];

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One `id: status -- detail` line per check, then the errata.
    pub fn to_text(&self) -> String {
        let mut out = format!("verify {}\n", self.cartan_type);
        for c in &self.checks {
            out.push_str(&format!("{}: {} -- {}\n", c.id, c.status, c.detail));
        }
        for e in &self.errata {
            out.push_str(&format!("erratum {}: {}\n", e.id, e.summary));
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ErratumDoc<'a> {
            id: &'a str,
            summary: &'a str,
        }
        #[derive(Serialize)]
        struct ReportDoc<'a> {
            schema: &'static str,
            #[serde(rename = "type")]
            cartan_type: String,
            passed: bool,
            checks: &'a [Check],
            errata: Vec<ErratumDoc<'a>>,
        }
        let doc = ReportDoc {
            schema: "strata-report/1",
            cartan_type: self.cartan_type.to_string(),
            passed: self.passed(),
            checks: &self.checks,
            errata: self
                .errata
                .iter()
                .map(|e| ErratumDoc {
                    id: e.id,
                    summary: e.summary,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}

type Outcome = (Status, String);

fn pass(detail: impl Into<String>) -> Outcome {
    (Status::Pass, detail.into())
}

fn fail(detail: impl Into<String>) -> Outcome {
    (Status::Fail, detail.into())
}

fn skipped(detail: impl Into<String>) -> Outcome {
    (Status::Skipped, detail.into())
}

fn irr_enumeration(t: CartanType) -> Outcome {
    let registry = enumerate_irr(t);
    let expected = irr_count(t);
    if registry.len() as u64 != expected {
        return fail(format!("{} labels, expected {expected}", registry.len()));
    }
    let mut seen = HashSet::new();
    for label in registry.iter() {
        if !seen.insert(label) {
            return fail(format!("duplicate label {label}"));
        }
        match parse_label(t, &label.to_string()) {
            Ok(back) if &back == label => {}
            _ => return fail(format!("{label} does not survive a print/parse round trip")),
        }
    }
    pass(format!("{expected} labels"))
}

fn cs_enumeration(t: CartanType) -> Outcome {
    let triples = enumerate_cs_prime(t);
    let expected: u64 = cuspidal_levis(t)
        .iter()
        .map(|l| l.relative_characters().len() as u64 * n_table(l.levi_type()).total() as u64)
        .sum();
    if triples.len() as u64 != expected {
        return fail(format!("{} triples, expected {expected}", triples.len()));
    }
    if let Some(bad) = triples
        .iter()
        .find(|tr| tr.levi.is_full() && tr.character != crate::weyl::CharacterLabel::Trivial)
    {
        return fail(format!(
            "{bad} has a nontrivial character on the whole group"
        ));
    }
    pass(format!("{expected} triples"))
}

fn triple_placement(table: &StrataTable) -> Outcome {
    match check_placement(table) {
        Ok(()) => {
            let n = enumerate_cs_prime(table.cartan_type).len();
            pass(format!("totals {} = {n}", table.total_triples()))
        }
        Err(e) => fail(e.to_string()),
    }
}

fn retraction(table: &StrataTable) -> Outcome {
    let mut heads = HashSet::new();
    for row in &table.rows {
        if !heads.insert(&row.stratum) {
            return fail(format!("stratum {} heads two rows", row.stratum));
        }
        let first = &row.fiber[0];
        if first.levi.is_some() || first.character != row.stratum {
            return fail(format!("row {} starts with {first}", row.stratum));
        }
        if row.fiber[1..]
            .iter()
            .any(|e| e.levi.is_none() && e.character == row.stratum)
        {
            return fail(format!("row {} repeats its head", row.stratum));
        }
    }
    pass(format!("{} rows", table.rows.len()))
}

fn empty_entry_completeness(table: &StrataTable) -> Outcome {
    let registry = enumerate_irr(table.cartan_type);
    let labels = table.empty_entry_labels();
    let mut seen = HashSet::new();
    for label in &labels {
        if !seen.insert(label) {
            return fail(format!("{label} occurs twice with empty Levi"));
        }
        if !registry.contains(label) {
            return fail(format!("{label} is not in Irr(W)"));
        }
    }
    if let Some(missing) = registry.iter().find(|l| !seen.contains(l)) {
        return fail(format!("{missing} occurs in no row"));
    }
    pass(format!("{} characters", labels.len()))
}

fn boxed_recomputation(table: &StrataTable) -> Outcome {
    let bad = table.cartan_type.bad_primes();
    for row in &table.rows {
        let recomputed = recomputed_boxed(row);
        if recomputed != row.boxed {
            return fail(format!(
                "row {}: boxed {:?}, recomputed {:?}",
                row.stratum, row.boxed, recomputed
            ));
        }
        if row.membership == Membership::Full {
            if let Some(r) = row.deviation().into_iter().find(|r| !bad.contains(r)) {
                return fail(format!("row {}: deviation at good prime {r}", row.stratum));
            }
        }
        if let Err(e) = strata::row_collection(row) {
            return fail(e.to_string());
        }
    }
    pass(format!("{} rows", table.rows.len()))
}

fn fiber_cstar(table: &StrataTable) -> Outcome {
    match strata::fiber_cstar_witness(table) {
        Ok(rows) => {
            if let Some(w) = rows.iter().find(|w| !w.matches()) {
                return fail(format!(
                    "row {}: fibre {} vs c(E)* {}",
                    w.stratum, w.fiber_size, w.c_star_size
                ));
            }
            let fibers: u32 = rows.iter().map(|w| w.fiber_size).sum();
            let stars: u32 = rows.iter().map(|w| w.c_star_size).sum();
            pass(format!("{} rows; totals {fibers} = {stars}", rows.len()))
        }
        Err(e) => fail(e.to_string()),
    }
}

fn regular_fiber(table: &StrataTable) -> Outcome {
    let t = table.cartan_type;
    let unit = unit_label(t);
    let Some(row) = table.row(&unit) else {
        return fail(format!("no row for the regular stratum {unit}"));
    };
    let want = regular_fiber_labels(t).len() as u32;
    if row.fiber_size() == want {
        pass(format!("|fibre({unit})| = {want}"))
    } else {
        fail(format!(
            "|fibre({unit})| = {}, expected {want}",
            row.fiber_size()
        ))
    }
}

fn centralizers(t: CartanType) -> Outcome {
    let profiles = centralizer_profiles(t);
    if profiles.is_empty() {
        return skipped("no cuspidal character sheaves of positive rank");
    }
    let table = n_table(t);
    for p in &profiles {
        if p.total() != table.get(p.d) {
            return fail(format!(
                "d = {}, {}: counts sum to {}, N_d = {}",
                p.d,
                p.class,
                p.total(),
                table.get(p.d)
            ));
        }
        for (c, _) in &p.entries {
            if let CentralizerType::Sub(s) = c {
                if !is_pseudo_levi(t, s) {
                    return fail(format!("d = {}, {}: {s} is not pseudo-Levi", p.d, p.class));
                }
            }
        }
    }
    pass(format!("{} profiles", profiles.len()))
}

fn support_classification(t: CartanType) -> Outcome {
    let counts = n_table(t);
    if counts.is_empty() {
        return skipped("no cuspidal character sheaves");
    }
    let mut parts = Vec::new();
    for &(d, _) in &counts.counts {
        let stated = match unipotent_support_case(t, d) {
            Ok(c) => c,
            Err(e) => return fail(e.to_string()),
        };
        let recomputed = match support_case_from_profiles(t, d) {
            Ok(c) => c,
            Err(e) => return fail(e.to_string()),
        };
        if stated.effective() != recomputed {
            return fail(format!(
                "d = {d}: stated {stated}, centralizers give {recomputed}"
            ));
        }
        parts.push(format!("d={d}: {stated}"));
    }
    pass(parts.join(", "))
}

fn group_inventories() -> Outcome {
    for g in FiniteGroupLabel::ALL {
        let c = census(g);
        let irreps = g.irreps();
        let square_sum: u32 = irreps.iter().map(|i| i.dim * i.dim).sum();
        let linear = irreps.iter().filter(|i| i.dim == 1).count();
        if c.order != g.order() as usize
            || c.class_count != irreps.len()
            || square_sum != g.order()
            || c.abelianization != linear
        {
            return fail(format!(
                "{g}: order {}, {} classes, {} linear; inventory has {} irreps, {} linear",
                c.order,
                c.class_count,
                c.abelianization,
                irreps.len(),
                linear
            ));
        }
    }
    pass(format!("{} groups", FiniteGroupLabel::ALL.len()))
}

/// Runs every check for `t` against the tables in `catalog`.
pub fn run_all(catalog: &Catalog, t: CartanType) -> VerificationReport {
    let table = catalog.strata_table(t).ok();
    let no_table = || skipped(format!("no strata table for {t}"));
    let with_table = |f: fn(&StrataTable) -> Outcome| table.as_deref().map_or_else(no_table, f);
    let outcomes = [
        irr_enumeration(t),
        cs_enumeration(t),
        with_table(triple_placement),
        with_table(retraction),
        with_table(empty_entry_completeness),
        with_table(boxed_recomputation),
        with_table(fiber_cstar),
        with_table(regular_fiber),
        centralizers(t),
        support_classification(t),
        group_inventories(),
    ];
    let checks = CHECK_IDS
        .iter()
        .zip(outcomes)
        .map(|(&id, (status, detail))| Check { id, status, detail })
        .collect();
    VerificationReport {
        cartan_type: t,
        checks,
        errata: errata_for(t),
    }
}

/// Types covered by `verify all`: the exceptional types and every type
/// with a registered table.
pub fn default_types(catalog: &Catalog) -> Vec<CartanType> {
    let mut types: Vec<CartanType> = CartanType::EXCEPTIONAL.to_vec();
    types.extend(catalog.registered_types());
    types
}

/// Runs the suite for several types in parallel, returning reports in the
/// order of `types`.
pub fn run_many(catalog: &Catalog, types: &[CartanType]) -> Vec<VerificationReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = types
            .iter()
            .map(|&t| s.spawn(move || run_all(catalog, t)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread"))
            .collect()
    })
}
