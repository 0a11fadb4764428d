//! Built-in corpus of divisors with the verdicts they are known to have.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Deserialize;
use serde_json::Value;

use crate::criteria::{analyze, check_linear_jacobian_type, AnalyzeOptions, Checks, DivisorReport};
use crate::error::{Error, Result};
use crate::ideals::Limits;
use crate::logder::SaitoData;
use crate::poly::{parse_polynomial, Point, Polynomial, Ring};

const BUILTIN: &str = include_str!("../data/catalog.toml");
pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    version: u32,
    entry: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    vars: String,
    poly: String,
    #[serde(default)]
    flags: Vec<String>,
    #[serde(default)]
    checks: Option<String>,
    #[serde(default)]
    points: Vec<String>,
    #[serde(default)]
    ljt_max_pairs: Option<usize>,
    #[serde(default)]
    b_function: Option<String>,
    #[serde(default)]
    notes: Vec<String>,
    #[serde(default)]
    expect: BTreeMap<String, RawExpectation>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExpectation {
    value: toml::Value,
    note: String,
}

/// A field of the JSON report, addressed by a JSON pointer, with the value
/// it must take and where that value comes from.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub pointer: String,
    pub value: Value,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: Ring,
    pub poly: Polynomial,
    pub poly_text: String,
    pub expensive: bool,
    pub homogeneous: bool,
    pub checks: Checks,
    pub points: Vec<Point>,
    /// Pair budget for the linear Jacobian type check alone.
    pub ljt_max_pairs: Option<usize>,
    pub b_function: Option<String>,
    pub notes: Vec<String>,
    pub expected: Vec<Expectation>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn invalid(name: &str, msg: impl fmt::Display) -> Error {
    Error::Precondition(format!("catalog entry `{name}`: {msg}"))
}

impl Catalog {
    /// The catalog compiled into the library.
    pub fn builtin() -> Result<Catalog> {
        Catalog::parse(BUILTIN)
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let raw: RawCatalog =
            toml::from_str(text).map_err(|e| Error::Precondition(format!("catalog: {e}")))?;
        if raw.version != FORMAT_VERSION {
            return Err(Error::Precondition(format!(
                "catalog: unsupported format version {}",
                raw.version
            )));
        }
        let mut seen = HashSet::new();
        let mut entries = Vec::with_capacity(raw.entry.len());
        for e in raw.entry {
            if !seen.insert(e.name.clone()) {
                return Err(invalid(&e.name, "duplicate name"));
            }
            entries.push(CatalogEntry::from_raw(e)?);
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl CatalogEntry {
    fn from_raw(e: RawEntry) -> Result<CatalogEntry> {
        let name = e.name;
        let ring = Ring::from_list(&e.vars).map_err(|err| invalid(&name, err))?;
        let poly = parse_polynomial(&e.poly, &ring).map_err(|err| invalid(&name, err))?;
        let mut expensive = false;
        let mut homogeneous = false;
        for flag in &e.flags {
            match flag.as_str() {
                "expensive" => expensive = true,
                "homogeneous" => homogeneous = true,
                other => return Err(invalid(&name, format!("unknown flag `{other}`"))),
            }
        }
        if homogeneous != poly.homogeneous_degree()?.is_some() {
            return Err(invalid(&name, "homogeneous flag disagrees with the polynomial"));
        }
        let checks = match &e.checks {
            Some(c) => c.parse().map_err(|err| invalid(&name, err))?,
            None => Checks::default(),
        };
        let points = e
            .points
            .iter()
            .map(|p| {
                let p = Point::parse(p).map_err(|err| invalid(&name, err))?;
                if p.dim() != ring.n() {
                    return Err(invalid(&name, format!("point {p} has the wrong dimension")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut expected = Vec::with_capacity(e.expect.len());
        for (pointer, x) in e.expect {
            if !pointer.starts_with('/') {
                return Err(invalid(&name, format!("`{pointer}` is not a JSON pointer")));
            }
            if x.note.trim().is_empty() {
                return Err(invalid(&name, format!("`{pointer}` has no note")));
            }
            let value = serde_json::to_value(&x.value).map_err(|err| invalid(&name, err))?;
            expected.push(Expectation {
                pointer,
                value,
                note: x.note,
            });
        }
        Ok(CatalogEntry {
            name,
            ring,
            poly,
            poly_text: e.poly,
            expensive,
            homogeneous,
            checks,
            points,
            ljt_max_pairs: e.ljt_max_pairs,
            b_function: e.b_function,
            notes: e.notes,
            expected,
        })
    }

    pub fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.expensive {
            out.push("expensive");
        }
        if self.homogeneous {
            out.push("homogeneous");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Default,
    High,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not run at this budget.
    SkipExpensive,
    /// Some expected field could not be computed within the limits.
    SkipLimit,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkipExpensive => "SKIP(expensive)",
            Status::SkipLimit => "SKIP(limit)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub pointer: String,
    pub expected: Value,
    /// `None` when the report has no such field.
    pub got: Option<Value>,
}

#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub name: String,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
    pub violations: Vec<String>,
    /// Why part or all of the entry was skipped.
    pub skipped: Option<String>,
    pub report: Option<DivisorReport>,
}

impl EntryOutcome {
    fn skip(entry: &CatalogEntry, status: Status, why: String) -> Self {
        EntryOutcome {
            name: entry.name.clone(),
            status,
            mismatches: Vec::new(),
            violations: Vec::new(),
            skipped: Some(why),
            report: None,
        }
    }
}

/// Analyzes the entry and compares the report with its expectations.
///
/// With `Budget::Default` expensive entries are skipped and `limits` apply;
/// `Budget::High` runs everything under `Limits::high()`. The linear
/// Jacobian type check additionally respects the entry's own pair budget.
pub fn run_entry(entry: &CatalogEntry, budget: Budget, limits: &Limits) -> Result<EntryOutcome> {
    let limits = match budget {
        Budget::Default if entry.expensive => {
            return Ok(EntryOutcome::skip(
                entry,
                Status::SkipExpensive,
                "expensive entry, run with the high budget".into(),
            ))
        }
        Budget::Default => *limits,
        Budget::High => Limits::high(),
    };
    let options = AnalyzeOptions {
        checks: Checks {
            ljt: false,
            ..entry.checks
        },
        points: entry.points.clone(),
        limits,
    };
    let mut report = match analyze(&entry.poly, &options) {
        Ok(r) => r,
        Err(Error::ResourceLimit(why)) => return Ok(EntryOutcome::skip(entry, Status::SkipLimit, why)),
        Err(e) => return Err(e),
    };
    let mut skipped = None;
    if entry.checks.ljt {
        let ljt_limits = Limits {
            max_pairs: entry.ljt_max_pairs.map_or(limits.max_pairs, |p| p.min(limits.max_pairs)),
            ..limits
        };
        let sd = SaitoData::from_derivations(&entry.poly, report.derivations.clone())?;
        match check_linear_jacobian_type(&sd, &ljt_limits) {
            Ok(v) => report.linear_jacobian_type = Some(v),
            Err(Error::ResourceLimit(why)) => skipped = Some(format!("linear Jacobian type: {why}")),
            Err(e) => return Err(e),
        }
    }
    let json = serde_json::to_value(&report).expect("report serializes");
    let mut mismatches = Vec::new();
    let mut unresolved = false;
    for x in &entry.expected {
        match json.pointer(&x.pointer) {
            Some(got) if *got == x.value => {}
            None if skipped.is_some() && x.pointer.starts_with("/linear_jacobian_type") => unresolved = true,
            got => mismatches.push(Mismatch {
                pointer: x.pointer.clone(),
                expected: x.value.clone(),
                got: got.cloned(),
            }),
        }
    }
    let violations = report.consistency_violations();
    let status = if !mismatches.is_empty() || !violations.is_empty() {
        Status::Fail
    } else if unresolved {
        Status::SkipLimit
    } else {
        Status::Pass
    };
    Ok(EntryOutcome {
        name: entry.name.clone(),
        status,
        mismatches,
        violations,
        skipped,
        report: Some(report),
    })
}

/// Runs every entry in catalog order.
pub fn run_catalog(catalog: &Catalog, budget: Budget, limits: &Limits) -> Result<Vec<EntryOutcome>> {
    catalog.entries().iter().map(|e| run_entry(e, budget, limits)).collect()
}
