//! The set of strata tables available to queries: the compiled-in
//! exceptional tables plus tables registered for classical types.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

use crate::cartan::{CartanType, Series};
use crate::cuspidal::{enumerate_cs_prime, SheafTriple};
use crate::error::{Error, Result};
use crate::schema::import_table;
use crate::springer::{embedded_table, StrataTable};
use crate::strata::{self, CCollection, CStarElement, WitnessRow};
use crate::weyl::CharacterLabel;

/// Outcome of registering a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Registration {
    /// A classical table was validated and installed.
    Installed(CartanType),
    /// The table agrees with the compiled-in table for its type.
    MatchesEmbedded(CartanType),
}

impl fmt::Display for Registration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Registration::Installed(t) => write!(f, "{t}: installed"),
            Registration::MatchesEmbedded(t) => write!(f, "{t}: matches the embedded table"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    registered: BTreeMap<CartanType, StrataTable>,
}

/// Checks that every triple of `t` lies in exactly one fibre of `table`.
pub fn check_placement(table: &StrataTable) -> Result<()> {
    let t = table.cartan_type;
    let expected = enumerate_cs_prime(t);
    let mut remaining: HashSet<&SheafTriple> = expected.iter().collect();
    for row in &table.rows {
        for entry in &row.fiber {
            for tr in strata::entry_triples(t, entry) {
                if !remaining.remove(&tr) {
                    let why = if expected.contains(&tr) {
                        "placed twice"
                    } else {
                        "not a parameter"
                    };
                    return Err(Error::Placement(format!(
                        "{tr} in the row of {}: {why}",
                        row.stratum
                    )));
                }
            }
        }
    }
    if let Some(missing) = expected.iter().find(|tr| remaining.contains(tr)) {
        return Err(Error::Placement(format!("{missing} is in no row")));
    }
    Ok(())
}

/// Compares a table with a reference table for the same type, naming the
/// first triple whose stratum differs or the first row whose data differ.
pub fn compare_tables(reference: &StrataTable, table: &StrataTable) -> Result<()> {
    check_placement(table)?;
    for tr in enumerate_cs_prime(reference.cartan_type) {
        let want = strata::tau(reference, &tr)?;
        let got = strata::tau(table, &tr)?;
        if want != got {
            return Err(Error::Placement(format!(
                "{tr} is in the row of {got}, expected {want}"
            )));
        }
    }
    if reference.rows.len() != table.rows.len() {
        return Err(Error::TableData(format!(
            "{} rows, expected {}",
            table.rows.len(),
            reference.rows.len()
        )));
    }
    for (want, got) in reference.rows.iter().zip(&table.rows) {
        if want != got {
            return Err(Error::TableData(format!(
                "row {} differs from the embedded row {}",
                got.stratum, want.stratum
            )));
        }
    }
    Ok(())
}

impl Catalog {
    /// A catalog with only the compiled-in tables.
    pub fn new() -> Self {
        Self::default()
    }

    /// The table for `t`: embedded for exceptional types, registered for
    /// classical ones.
    pub fn table(&self, t: CartanType) -> Result<&StrataTable> {
        embedded_table(t)
            .or_else(|| self.registered.get(&t))
            .ok_or(Error::NoTableAvailable(t))
    }

    /// Like [`Catalog::table`], but type `A` and tori fall back to the
    /// identity table, which needs no data.
    pub fn strata_table(&self, t: CartanType) -> Result<Cow<'_, StrataTable>> {
        match self.table(t) {
            Ok(table) => Ok(Cow::Borrowed(table)),
            Err(e) => strata::synthesized_table(t).map(Cow::Owned).ok_or(e),
        }
    }

    pub fn has_table(&self, t: CartanType) -> bool {
        self.strata_table(t).is_ok()
    }

    pub fn registered_types(&self) -> impl Iterator<Item = CartanType> + '_ {
        self.registered.keys().copied()
    }

    /// Registers a table. Tables for exceptional types are compared with
    /// the embedded ones and never replace them.
    pub fn register(&mut self, table: StrataTable) -> Result<Registration> {
        let t = table.cartan_type;
        if let Some(embedded) = embedded_table(t) {
            compare_tables(embedded, &table)?;
            return Ok(Registration::MatchesEmbedded(t));
        }
        if !matches!(t.series(), Series::A | Series::B | Series::C | Series::D) {
            return Err(Error::TableData(format!("cannot register a table for {t}")));
        }
        check_placement(&table)?;
        self.registered.insert(t, table);
        Ok(Registration::Installed(t))
    }

    /// Registers a `strata-table/1` document.
    pub fn register_json(&mut self, doc: &str) -> Result<Registration> {
        self.register(import_table(doc)?)
    }

    /// Registers every `*.json` file in `dir`, in file-name order.
    pub fn load_dir(&mut self, dir: &Path) -> Result<Vec<Registration>> {
        let io = |e: std::io::Error| Error::TableData(format!("{}: {e}", dir.display()));
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<_>>()
            .map_err(io)?;
        paths.retain(|p| p.extension().is_some_and(|x| x == "json"));
        paths.sort();
        paths
            .iter()
            .map(|p| {
                let doc = std::fs::read_to_string(p)
                    .map_err(|e| Error::TableData(format!("{}: {e}", p.display())))?;
                self.register_json(&doc).map_err(|e| match e {
                    Error::Schema(m) => Error::Schema(format!("{}: {m}", p.display())),
                    other => other,
                })
            })
            .collect()
    }

    pub fn tau(&self, t: CartanType, triple: &SheafTriple) -> Result<CharacterLabel> {
        strata::tau(&*self.strata_table(t)?, triple)
    }

    pub fn fiber(&self, t: CartanType, e: &CharacterLabel) -> Result<Vec<(SheafTriple, u32)>> {
        strata::fiber(&*self.strata_table(t)?, e)
    }

    pub fn c_collection(&self, t: CartanType, e: &CharacterLabel) -> Result<CCollection> {
        strata::c_collection(&*self.strata_table(t)?, e)
    }

    pub fn c_star(&self, t: CartanType, e: &CharacterLabel) -> Result<Vec<CStarElement>> {
        strata::c_star(&*self.strata_table(t)?, e)
    }

    pub fn fiber_cstar_witness(&self, t: CartanType) -> Result<Vec<WitnessRow>> {
        strata::fiber_cstar_witness(&*self.strata_table(t)?)
    }
}
