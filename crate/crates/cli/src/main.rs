use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unipotent_strata::cartan::{
    datum, is_pseudo_levi, pseudo_levi_types, CartanType, SubsystemType,
};
use unipotent_strata::catalog::{Catalog, Registration};
use unipotent_strata::cuspidal::{
    cuspidal_levis, enumerate_cs_prime, n_table, unipotent_support_case, CuspidalLevi, Delta,
    SheafTriple,
};
use unipotent_strata::schema::{export_strata, export_table, export_triples, import_table};
use unipotent_strata::springer::{
    centralizer_profile, centralizer_profiles, errata_for, CharClass,
};
use unipotent_strata::strata::{self, unit_label, CStarOrigin};
use unipotent_strata::verify::{default_types, run_many, VerificationReport};
use unipotent_strata::weyl::{irr_count, parse_label, CharacterLabel};

/// Unipotent character sheaves, their cuspidal supports and the map to
/// strata, with a verification suite for the embedded tables.
#[derive(Parser)]
#[command(name = "strata", version)]
struct Cli {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory of strata-table/1 documents to register at startup.
    #[arg(long, global = true, env = "STRATA_TABLES", value_name = "DIR")]
    tables: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root datum, Weyl group and cuspidal data of a type.
    Info { cartan: CartanType },
    /// Strata with their fibre sizes.
    Strata { cartan: CartanType },
    /// The fibre over a stratum.
    Fiber {
        cartan: CartanType,
        #[arg(long)]
        stratum: String,
        /// List each triple separately instead of with multiplicities.
        #[arg(long)]
        expand: bool,
    },
    /// The stratum of a triple (J, E', A').
    Tau {
        cartan: CartanType,
        /// Cuspidal Levi type, or `empty` for the maximal torus.
        #[arg(long)]
        levi: String,
        /// Character of the relative Weyl group.
        #[arg(long = "char")]
        character: String,
        #[arg(long)]
        d: Option<Delta>,
        #[arg(long, default_value_t = 0)]
        index: u32,
    },
    /// c(E) and c(E)* for a stratum, paired with its fibre.
    Cstar {
        cartan: CartanType,
        #[arg(long)]
        stratum: String,
    },
    /// All triples (J, E', A').
    Triples { cartan: CartanType },
    /// Centralizer types of semisimple parts of cuspidal supports.
    Centralizers {
        cartan: CartanType,
        #[arg(long)]
        d: Option<Delta>,
        /// A prime, `0` or `generic`.
        #[arg(long = "char-class")]
        char_class: Option<CharClass>,
    },
    /// Pseudo-Levi subsystem types.
    PseudoLevi {
        cartan: CartanType,
        /// Test one subsystem type, e.g. A4xA4, instead of listing all.
        #[arg(long)]
        check: Option<SubsystemType>,
    },
    /// Run the verification suite for a type, or `all`.
    Verify { target: String },
    /// Write a canonical JSON document.
    Export {
        cartan: CartanType,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a strata-table/1 document and register it.
    Register {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Table,
    Triples,
    Strata,
    Report,
}

fn main() -> ExitCode {
    // Exit quietly when the reader of a pipe goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut catalog = Catalog::new();
    // `register` may create the directory it stores into.
    let creating = matches!(cli.command, Command::Register { .. });
    if let Some(dir) = cli.tables.as_ref().filter(|d| !creating || d.exists()) {
        catalog
            .load_dir(dir)
            .with_context(|| format!("loading tables from {}", dir.display()))?;
    }
    let json = cli.json;
    match cli.command {
        Command::Info { cartan } => emit(json, info(&catalog, cartan)?),
        Command::Strata { cartan } => {
            let table = catalog.strata_table(cartan)?;
            if json {
                print!("{}", export_strata(&table));
            } else {
                for row in &table.rows {
                    println!("{}\t{}", row.stratum, row.fiber_size());
                }
            }
        }
        Command::Fiber {
            cartan,
            stratum,
            expand,
        } => {
            let table = catalog.strata_table(cartan)?;
            let e = parse_label(cartan, &stratum)?;
            let row = table
                .row(&e)
                .ok_or_else(|| anyhow!("{e} is not a stratum of {cartan}"))?;
            let entries: Vec<(SheafTriple, u32)> = if expand {
                strata::fiber_expanded(&table, &e)?
                    .into_iter()
                    .map(|t| (t, 1))
                    .collect()
            } else {
                strata::fiber(&table, &e)?
            };
            let groups: serde_json::Map<String, Value> = [0, 2, 3, 5]
                .iter()
                .map(|&r| {
                    (
                        format!("r{r}"),
                        json!(row.component_group(r).map(|g| g.to_string())),
                    )
                })
                .collect();
            let value = json!({
                "type": cartan.to_string(),
                "stratum": e.to_string(),
                "fiber": entries.iter().map(|(t, m)| triple_json(t, *m)).collect::<Vec<_>>(),
                "size": row.fiber_size(),
                "groups": groups,
                "membership": row.membership.to_string(),
                "collection": strata::row_collection(row)?.to_string(),
            });
            if json {
                emit(true, value);
            } else {
                for (t, m) in &entries {
                    if *m > 1 {
                        println!("{t} x{m}");
                    } else {
                        println!("{t}");
                    }
                }
                println!("size: {}", row.fiber_size());
                println!("c(E): {}", value["collection"].as_str().unwrap_or_default());
            }
        }
        Command::Tau {
            cartan,
            levi,
            character,
            d,
            index,
        } => {
            let triple = build_triple(cartan, &levi, &character, d, index)?;
            let e = catalog.tau(cartan, &triple)?;
            if json {
                emit(
                    true,
                    json!({ "triple": triple_json(&triple, 1), "stratum": e.to_string() }),
                );
            } else {
                println!("{e}");
            }
        }
        Command::Cstar { cartan, stratum } => {
            let table = catalog.strata_table(cartan)?;
            let e = parse_label(cartan, &stratum)?;
            let collection = strata::c_collection(&table, &e)?;
            let pairing = strata::fiber_cstar_pairing(&table, &e)?;
            if json {
                emit(
                    true,
                    json!({
                        "stratum": e.to_string(),
                        "collection": collection.to_string(),
                        "pairs": pairing.iter().map(|(t, c)| json!({
                            "triple": triple_json(t, 1),
                            "group": c.group.to_string(),
                            "irrep": c.irrep,
                            "origin": origin_name(c.origin),
                        })).collect::<Vec<_>>(),
                        "size": pairing.len(),
                    }),
                );
            } else {
                println!("c(E) = {collection}");
                for (t, c) in &pairing {
                    println!("{t}\t{c}\t{}", origin_name(c.origin));
                }
                println!("size: {}", pairing.len());
            }
        }
        Command::Triples { cartan } => {
            if json {
                print!("{}", export_triples(cartan));
            } else {
                for t in enumerate_cs_prime(cartan) {
                    println!("{t}");
                }
            }
        }
        Command::Centralizers {
            cartan,
            d,
            char_class,
        } => {
            let profiles = match (d, char_class) {
                (Some(d), Some(c)) => vec![centralizer_profile(cartan, d, c)?],
                (d, None) => centralizer_profiles(cartan)
                    .into_iter()
                    .filter(|p| d.is_none_or(|d| p.d == d))
                    .collect(),
                (None, Some(_)) => bail!("--char-class needs --d"),
            };
            if profiles.is_empty() {
                bail!("no centralizer data for {cartan}");
            }
            let rows: Vec<Value> = profiles
                .iter()
                .map(|p| {
                    json!({
                        "d": p.d.to_string(),
                        "class": p.class.to_string(),
                        "entries": p.entries.iter().map(|(c, n)| json!([c.to_string(), n])).collect::<Vec<_>>(),
                        "note": p.note,
                    })
                })
                .collect();
            if json {
                emit(
                    true,
                    json!({ "type": cartan.to_string(), "profiles": rows }),
                );
            } else {
                for p in &profiles {
                    let entries: Vec<String> =
                        p.entries.iter().map(|(c, n)| format!("{c} x{n}")).collect();
                    println!("d={} r={}: {}", p.d, p.class, entries.join(", "));
                    if let Some(note) = p.note {
                        println!("  note: {note}");
                    }
                }
            }
        }
        Command::PseudoLevi { cartan, check } => match check {
            Some(s) => {
                let ok = is_pseudo_levi(cartan, &s);
                if json {
                    emit(
                        true,
                        json!({ "type": cartan.to_string(), "subsystem": s.to_string(), "pseudo_levi": ok }),
                    );
                } else {
                    println!("{ok}");
                }
            }
            None => {
                let set = pseudo_levi_types(cartan);
                let names: Vec<String> = set.iter().map(|s| s.to_string()).collect();
                if json {
                    emit(
                        true,
                        json!({ "type": cartan.to_string(), "pseudo_levi_types": names }),
                    );
                } else {
                    for n in names {
                        println!("{n}");
                    }
                }
            }
        },
        Command::Verify { target } => {
            let types = if target.eq_ignore_ascii_case("all") {
                default_types(&catalog)
            } else {
                vec![target.parse::<CartanType>()?]
            };
            let reports = run_many(&catalog, &types);
            print_reports(json, &reports);
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { cartan, what, out } => {
            let doc = match what {
                What::Table => export_table(catalog.table(cartan)?),
                What::Triples => export_triples(cartan),
                What::Strata => export_strata(&*catalog.strata_table(cartan)?),
                What::Report => run_many(&catalog, &[cartan])[0].to_json(),
            };
            match out {
                Some(path) => std::fs::write(&path, doc)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{doc}"),
            }
        }
        Command::Register { input } => {
            let doc = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let table = import_table(&doc)?;
            let t = table.cartan_type;
            let outcome = catalog.register(table)?;
            let stored = match (outcome, &cli.tables) {
                (Registration::Installed(_), Some(dir)) => Some(store(dir, t, &doc)?),
                _ => None,
            };
            if json {
                emit(
                    true,
                    json!({
                        "type": t.to_string(),
                        "outcome": match outcome {
                            Registration::Installed(_) => "installed",
                            Registration::MatchesEmbedded(_) => "matches-embedded",
                        },
                        "stored": stored.map(|p| p.display().to_string()),
                    }),
                );
            } else {
                println!("{outcome}");
                if let Some(p) = stored {
                    println!("stored as {}", p.display());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(json: bool, value: Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        print_text(&value, 0);
    }
}

fn print_text(value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        println!("{pad}{k}:");
                        print_text(v, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        println!("{pad}{k}:");
                        for item in items {
                            print_text(item, indent + 1);
                            if item.is_object() {
                                println!();
                            }
                        }
                    }
                    _ => println!("{pad}{k}: {}", scalar(v)),
                }
            }
        }
        other => println!("{pad}{}", scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn info(catalog: &Catalog, t: CartanType) -> Result<Value> {
    let data = datum(t);
    let counts = n_table(t);
    let levis: Vec<Value> = cuspidal_levis(t)
        .iter()
        .map(|l| {
            json!({
                "levi": levi_name(l),
                "relative": l.relative.map_or("1".to_string(), |r| r.to_string()),
            })
        })
        .collect();
    let cases: Vec<Value> = counts
        .counts
        .iter()
        .map(|&(d, n)| {
            json!({
                "d": d.to_string(),
                "n": n,
                "support": unipotent_support_case(t, d).map(|c| c.to_string()).unwrap_or_default(),
            })
        })
        .collect();
    Ok(json!({
        "type": t.to_string(),
        "rank": t.rank(),
        "weyl_order": data.weyl_order.to_string(),
        "degrees": data.degrees,
        "bad_primes": data.bad_primes,
        "highest_root": data.highest_root_coeffs,
        "z": data.z_value,
        "irr_count": irr_count(t),
        "unit_stratum": unit_label(t).to_string(),
        "cuspidal_levis": levis,
        "cuspidal_counts": cases,
        "triples": enumerate_cs_prime(t).len(),
        "table_rows": catalog.strata_table(t).ok().map(|tb| tb.rows.len()),
        "errata": errata_for(t).iter().map(|e| e.id).collect::<Vec<_>>(),
    }))
}

fn levi_name(l: &CuspidalLevi) -> String {
    l.levi
        .map_or_else(|| "empty".to_string(), |t| t.to_string())
}

fn delta_json(d: Delta) -> Value {
    match d {
        Delta::Known(d) => json!(d),
        Delta::Opaque => json!("opaque"),
    }
}

fn origin_name(o: CStarOrigin) -> String {
    match o {
        CStarOrigin::Single => "single".into(),
        CStarOrigin::First => "first".into(),
        CStarOrigin::SecondNew => "second".into(),
        CStarOrigin::Faithful { m } => format!("faithful-C{m}"),
    }
}

fn triple_json(t: &SheafTriple, mult: u32) -> Value {
    json!({
        "levi": levi_name(&t.levi),
        "character": t.character.to_string(),
        "d": delta_json(t.d),
        "index": t.index,
        "mult": mult,
    })
}

fn build_triple(
    t: CartanType,
    levi: &str,
    character: &str,
    d: Option<Delta>,
    index: u32,
) -> Result<SheafTriple> {
    let wanted: Option<CartanType> = match levi.trim() {
        "empty" | "-" | "" => None,
        s => Some(s.parse()?),
    };
    let levi = cuspidal_levis(t)
        .into_iter()
        .find(|l| l.levi == wanted)
        .ok_or_else(|| anyhow!("{levi} is not a cuspidal Levi of {t}"))?;
    let character = match levi.relative {
        Some(r) => parse_label(r, character)?,
        None => parse_label(CartanType::TORUS, character)
            .map(|_| CharacterLabel::Trivial)
            .map_err(|_| anyhow!("the relative Weyl group is trivial; use --char 1"))?,
    };
    let counts = n_table(levi.levi_type());
    let d = match d {
        Some(d) => d,
        None => match counts.counts.as_slice() {
            [(d, _)] => *d,
            _ => bail!("{} has several values of d; pass --d", levi_name(&levi)),
        },
    };
    if index >= counts.get(d) {
        bail!("index {index} out of range for d = {d}");
    }
    Ok(SheafTriple {
        levi,
        character,
        d,
        index,
    })
}

fn print_reports(json: bool, reports: &[VerificationReport]) {
    if json {
        let docs: Vec<Value> = reports
            .iter()
            .map(|r| serde_json::from_str(&r.to_json()).expect("report json"))
            .collect();
        let value = if docs.len() == 1 {
            docs.into_iter().next().expect("one report")
        } else {
            Value::Array(docs)
        };
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", r.to_text());
        }
    }
}

fn store(dir: &Path, t: CartanType, doc: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(format!("{t}.json"));
    std::fs::write(&path, doc).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}
