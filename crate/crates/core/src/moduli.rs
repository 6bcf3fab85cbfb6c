//! Dimension bounds for moduli of pointed curves with a given Weierstrass
//! semigroup, and the comparison with the reference table of genus ≤ 7.

use std::fmt;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::cotangent::{t1_of, t2_of, Presentation};
use crate::curve::toric_ideal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::semigroup::NumericalSemigroup;

/// `(2g − 2 + t − dim T^{1,+}, 2g − 2 + t)`, valid for genus at least 2.
pub fn dimension_bounds(genus: usize, t: usize, t1_plus: usize) -> Result<(i64, i64)> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    let upper = 2 * genus as i64 - 2 + t as i64;
    Ok((upper - t1_plus as i64, upper))
}

/// Dimension `2g + t − 1` of the smoothing component of the base.
pub fn smoothing_component_dimension(genus: usize, t: usize) -> i64 {
    2 * genus as i64 + t as i64 - 1
}

/// One row of the reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub name: String,
    #[serde(with = "space_separated")]
    pub generators: Vec<u64>,
    pub genus: usize,
    pub d: i64,
    pub t: usize,
    pub base: String,
}

mod space_separated {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[u64], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<String> = v.iter().map(|n| n.to_string()).collect();
        s.serialize_str(&text.join(" "))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u64>, D::Error> {
        let text = String::deserialize(d)?;
        text.split_whitespace()
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

const EMBEDDED_TABLE: &str = include_str!("../assets/reference_table.csv");

/// A printed value of the reference table that contradicts its own
/// definitions, with the value the computation supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub name: &'static str,
    pub field: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub reason: &'static str,
}

/// Printed values of the table that are corrected before comparison.
pub const ERRATA: &[Erratum] = &[
    Erratum {
        name: "N(7)_10",
        field: "generators",
        printed: "4 9 11 14",
        corrected: "4 6 13 15",
        reason: "printed generators duplicate N(7)_6; <4,6,13,15> is the genus-7 semigroup missing from the table",
    },
    Erratum {
        name: "N(5)_3",
        field: "t",
        printed: "1",
        corrected: "2",
        reason: "<3,7,11> has pseudo-Frobenius numbers {4, 8}; a non-symmetric three-generated semigroup has type 2",
    },
    Erratum {
        name: "N(7)_21",
        field: "t",
        printed: "2",
        corrected: "1",
        reason: "<5,6,9> is a complete intersection, hence symmetric of type 1",
    },
    Erratum {
        name: "N(7)_25",
        field: "t",
        printed: "2",
        corrected: "3",
        reason: "<6,8,9,10,13> has pseudo-Frobenius numbers {4, 7, 11}",
    },
    Erratum {
        name: "N(7)_11",
        field: "d",
        printed: "10",
        corrected: "12",
        reason: "complete intersection with dim T^{1,+} = 1, so 2g-2+t-dim T^{1,+} = 12; the base is smooth and dim T^{1,-} - 1 = 12",
    },
];

/// Statements in the running text that name the wrong row.
pub const LABEL_NOTES: &[&str] = &[
    "dim T^2 = 84 for type 6 is attributed to N(6)_22, which has type 1; the type-6 curve of genus 6 is N(6)_23 = <7,...,13>",
    "N(7)_39 = <8,...,15> is called the only type 8 curve; its type is 7",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub rows: Vec<ReferenceRow>,
}

impl ReferenceTable {
    /// The table shipped with the crate.
    pub fn embedded() -> Self {
        Self::from_reader(EMBEDDED_TABLE.as_bytes()).expect("embedded reference table parses")
    }

    pub fn from_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let rows = rdr.deserialize().collect::<std::result::Result<Vec<ReferenceRow>, _>>()?;
        Ok(ReferenceTable { rows })
    }

    pub fn find(&self, generators: &[u64]) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| r.generators == generators)
    }

    pub fn by_name(&self, name: &str) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `(t, d)` of a row after applying [`ERRATA`].
    pub fn corrected(row: &ReferenceRow) -> (usize, i64) {
        let mut t = row.t;
        let mut d = row.d;
        for e in ERRATA.iter().filter(|e| e.name == row.name) {
            match e.field {
                "t" if row.t.to_string() == e.printed => t = e.corrected.parse().unwrap(),
                "d" if row.d.to_string() == e.printed => d = e.corrected.parse().unwrap(),
                _ => {}
            }
        }
        (t, d)
    }
}

/// Computed invariants of one semigroup joined with its reference row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub label: Option<String>,
    pub generators: Vec<u64>,
    pub genus: usize,
    /// Type as the rank of the last module of the minimal resolution.
    pub t: usize,
    /// Type as the number of pseudo-Frobenius numbers.
    pub t_lambda: usize,
    pub betti: Vec<usize>,
    pub t1: std::collections::BTreeMap<i64, usize>,
    pub t1_plus: usize,
    pub t1_minus: usize,
    pub t1_zero: usize,
    pub t2_total: Option<usize>,
    pub d_lower: i64,
    pub d_upper: i64,
    pub d_reference: Option<i64>,
    pub t_reference: Option<usize>,
    pub base_label: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOptions {
    pub include_t2: bool,
}

/// Runs curve, resolution, `T¹` and optionally `T²`, and joins the result
/// with the reference table.
pub fn build_record<F: Field>(s: &NumericalSemigroup, table: &ReferenceTable, opts: RecordOptions) -> Result<CurveRecord> {
    if s.genus() == 0 {
        return Err(Error::GenusTooSmall(0));
    }
    let curve = toric_ideal::<F>(s);
    let mut p = Presentation::new(&curve);
    let betti = crate::groebner::SchreyerFrame::new(&curve.basis).betti();
    let t = *betti.last().unwrap();
    let t1 = t1_of(&p);
    let t2_total = opts.include_t2.then(|| t2_of(&mut p).total());
    let genus = s.genus();
    let (d_lower, d_upper) = match dimension_bounds(genus, t, t1.plus()) {
        Ok(b) => b,
        // Genus one: the cusp, whose negative-weight deformations modulo
        // the G_m action give the moduli dimension directly.
        Err(_) => {
            let d = t1.minus() as i64 - 1;
            (d, d)
        }
    };
    let reference = table.find(s.generators());
    Ok(CurveRecord {
        label: reference.map(|r| r.name.clone()),
        generators: s.generators().to_vec(),
        genus,
        t,
        t_lambda: s.type_lambda(),
        betti,
        t1: t1.dims.entries.clone(),
        t1_plus: t1.plus(),
        t1_minus: t1.minus(),
        t1_zero: t1.degree_zero(),
        t2_total,
        d_lower,
        d_upper,
        d_reference: reference.map(|r| r.d),
        t_reference: reference.map(|r| r.t),
        base_label: reference.map(|r| r.base.clone()),
    })
}

/// The reference row of a record, or `UnknownLabel`.
pub fn reference_row<'a>(record: &CurveRecord, table: &'a ReferenceTable) -> Result<&'a ReferenceRow> {
    table.find(&record.generators).ok_or_else(|| {
        let g: Vec<String> = record.generators.iter().map(|n| n.to_string()).collect();
        Error::UnknownLabel(g.join(","))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum RowStatus {
    Match,
    /// Matches only after applying the listed errata.
    Corrected { errata: Vec<String> },
    Mismatch { field: String, expected: String, computed: String },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub name: Option<String>,
    pub generators: Vec<u64>,
    #[serde(flatten)]
    pub status: RowStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub rows: Vec<RowReport>,
    pub notes: Vec<String>,
}

impl DiffReport {
    pub fn matched(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, RowStatus::Match | RowStatus::Corrected { .. }))
            .count()
    }

    pub fn mismatches(&self) -> Vec<&RowReport> {
        self.rows
            .iter()
            .filter(|r| !matches!(r.status, RowStatus::Match | RowStatus::Corrected { .. }))
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches().is_empty()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}/{} rows match", self.matched(), self.rows.len())?;
        for r in &self.rows {
            let name = r.name.clone().unwrap_or_else(|| "-".into());
            let gens: Vec<String> = r.generators.iter().map(|n| n.to_string()).collect();
            match &r.status {
                RowStatus::Match => {}
                RowStatus::Corrected { errata } => {
                    writeln!(f, "  {name} <{}>: matches after errata ({})", gens.join(","), errata.join("; "))?
                }
                RowStatus::Mismatch { field, expected, computed } => writeln!(
                    f,
                    "  {name} <{}>: {field} expected {expected}, computed {computed}",
                    gens.join(",")
                )?,
                RowStatus::Unknown => writeln!(f, "  <{}>: not in the reference table", gens.join(","))?,
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Compares computed `t` and `d_lower` with the reference table.
pub fn verify_reference(records: &[CurveRecord], table: &ReferenceTable) -> DiffReport {
    let mut report = DiffReport::default();
    if records.is_empty() {
        return report;
    }
    for rec in records {
        let Some(row) = table.find(&rec.generators) else {
            report.rows.push(RowReport {
                name: None,
                generators: rec.generators.clone(),
                status: RowStatus::Unknown,
            });
            continue;
        };
        let (t, d) = ReferenceTable::corrected(row);
        let status = if rec.t != t {
            RowStatus::Mismatch {
                field: "t".into(),
                expected: t.to_string(),
                computed: rec.t.to_string(),
            }
        } else if rec.d_lower != d {
            RowStatus::Mismatch {
                field: "d".into(),
                expected: d.to_string(),
                computed: rec.d_lower.to_string(),
            }
        } else {
            let applied: Vec<String> = ERRATA
                .iter()
                .filter(|e| e.name == row.name)
                .map(|e| format!("{} printed {}", e.field, e.printed))
                .collect();
            if applied.is_empty() {
                RowStatus::Match
            } else {
                RowStatus::Corrected { errata: applied }
            }
        };
        report.rows.push(RowReport {
            name: Some(row.name.clone()),
            generators: rec.generators.clone(),
            status,
        });
    }
    report.notes = LABEL_NOTES.iter().map(|s| s.to_string()).collect();
    report
}
