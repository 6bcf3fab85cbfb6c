//! Batch construction of the genus-bounded atlas: enumeration, per-row
//! records with optional expensive columns, a JSON file cache, exports and
//! the comparison with the reference table.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cotangent::{t2_dimension, CotangentJson};
use crate::curve::{toric_ideal, CurveJson};
use crate::deform::quadratic_base_equations;
use crate::error::{Error, Result};
use crate::field::{configure_prime, Field, FieldKind, Fp, Rational};
use crate::moduli::{build_record, verify_reference, CurveRecord, DiffReport, RecordOptions, ReferenceTable};
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Ring order used for every curve; part of the cache key.
pub const RING_ORDER: &str = "weighted grevlex, generator weights, x last";

#[derive(Clone, Debug)]
pub struct AtlasOptions {
    pub field: FieldKind,
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
    pub include_t2: bool,
    pub include_quadbase: bool,
    /// Wall-clock budget for each optional column of each row.
    pub budget: Option<Duration>,
}

impl Default for AtlasOptions {
    fn default() -> Self {
        AtlasOptions {
            field: FieldKind::Rational,
            threads: None,
            include_t2: false,
            include_quadbase: false,
            budget: None,
        }
    }
}

/// An optional column: computed, not requested, or over budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "value")]
pub enum Column<T> {
    Computed(T),
    Skipped,
    TimedOut,
}

impl<T: ToString> Column<T> {
    pub fn render(&self) -> String {
        match self {
            Column::Computed(v) => v.to_string(),
            Column::Skipped => "skipped".into(),
            Column::TimedOut => "timed-out".into(),
        }
    }
}

impl<T> Column<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Column::Computed(v) => Some(v),
            _ => None,
        }
    }
}

/// Size and dimension of the quadratic part of the negative-weight base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadbaseSummary {
    pub equations: usize,
    pub variables: usize,
    pub affine_dimension: i64,
}

impl std::fmt::Display for QuadbaseSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} eq/{} var/dim {}", self.equations, self.variables, self.affine_dimension)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    pub record: CurveRecord,
    pub t2: Column<usize>,
    pub quadbase: Column<QuadbaseSummary>,
}

/// Everything stored for one semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDocument {
    pub curve: CurveJson,
    pub cotangent: CotangentJson,
    pub row: AtlasRow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFailure {
    pub generators: Vec<u64>,
    pub error: String,
}

#[derive(Clone, Debug, Default)]
pub struct Atlas {
    /// Rows in enumeration order: by genus, then as enumerated.
    pub rows: Vec<AtlasRow>,
    pub failures: Vec<RowFailure>,
    pub cache_hits: usize,
}

impl Atlas {
    pub fn records(&self) -> Vec<CurveRecord> {
        self.rows.iter().map(|r| r.record.clone()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub engine_version: String,
    pub ring_order: String,
    pub field: String,
}

impl Manifest {
    pub fn current(field: &FieldKind) -> Self {
        Manifest {
            engine_version: ENGINE_VERSION.into(),
            ring_order: RING_ORDER.into(),
            field: field.descriptor(),
        }
    }
}

/// JSON documents keyed by generator tuple under one root directory.
/// Entries are only read back when the stored manifest equals the current
/// configuration.
#[derive(Clone, Debug)]
pub struct AtlasStore {
    pub root: PathBuf,
    manifest: Manifest,
    valid: bool,
}

impl AtlasStore {
    /// Opens (creating if needed) a store; a mismatched manifest disables reads
    /// until it is overwritten by [`AtlasStore::write_manifest`].
    pub fn open(root: impl AsRef<Path>, field: &FieldKind) -> Result<Self> {
        let root = root.as_ref().to_path_buf();
        fs::create_dir_all(root.join("rows"))?;
        let manifest = Manifest::current(field);
        let valid = match fs::read_to_string(root.join("manifest.json")) {
            Ok(s) => serde_json::from_str::<Manifest>(&s).map(|m| m == manifest).unwrap_or(false),
            Err(_) => false,
        };
        Ok(AtlasStore { root, manifest, valid })
    }

    /// Store rooted at `$WSATLAS_CACHE`, if set.
    pub fn from_env(field: &FieldKind) -> Result<Option<Self>> {
        match std::env::var_os("WSATLAS_CACHE") {
            Some(dir) if !dir.is_empty() => Self::open(dir, field).map(Some),
            _ => Ok(None),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn path_for(&self, generators: &[u64]) -> PathBuf {
        let key: Vec<String> = generators.iter().map(|n| n.to_string()).collect();
        self.root.join("rows").join(format!("{}.json", key.join("_")))
    }

    pub fn load(&self, generators: &[u64]) -> Option<RowDocument> {
        if !self.valid {
            return None;
        }
        let text = fs::read_to_string(self.path_for(generators)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn save(&self, doc: &RowDocument) -> Result<()> {
        let text = serde_json::to_string_pretty(doc)?;
        fs::write(self.path_for(&doc.row.record.generators), text)?;
        Ok(())
    }

    pub fn write_manifest(&mut self) -> Result<()> {
        fs::write(self.root.join("manifest.json"), serde_json::to_string_pretty(&self.manifest)?)?;
        self.valid = true;
        Ok(())
    }
}

/// Worker count from `$WSATLAS_THREADS`, if set and positive.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("WSATLAS_THREADS").ok()?.parse().ok().filter(|&n| n > 0)
}

/// All semigroups of genus `1..=g_max`, in enumeration order.
pub fn semigroups_up_to(g_max: usize) -> Result<Vec<NumericalSemigroup>> {
    Ok(enumerate_by_genus(g_max)?
        .into_iter()
        .filter(|(g, _)| *g >= 1)
        .flat_map(|(_, list)| list)
        .collect())
}

/// Builds one record per semigroup of genus `1..=g_max`. Rows are computed
/// in parallel and returned in enumeration order; failed rows are
/// collected rather than aborting the run.
pub fn build_atlas(g_max: usize, opts: &AtlasOptions, store: Option<&mut AtlasStore>) -> Result<Atlas> {
    let semigroups = semigroups_up_to(g_max)?;
    build_rows(&semigroups, opts, store)
}

pub fn build_rows(semigroups: &[NumericalSemigroup], opts: &AtlasOptions, store: Option<&mut AtlasStore>) -> Result<Atlas> {
    if let FieldKind::Prime(p) = opts.field {
        configure_prime(p)?;
    }
    let table = ReferenceTable::embedded();
    let reader = store.as_deref().cloned();
    let work = || -> Vec<(Result<RowDocument>, bool)> {
        semigroups
            .par_iter()
            .map(|s| {
                if let Some(doc) = reader.as_ref().and_then(|st| st.load(s.generators())) {
                    if let Some(doc) = adapt_cached(doc, opts) {
                        return (Ok(doc), true);
                    }
                }
                (compute_row(s, &table, opts), false)
            })
            .collect()
    };
    let results = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parse(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut atlas = Atlas::default();
    let mut store = store;
    if let Some(st) = store.as_deref_mut() {
        if !st.is_valid() {
            st.write_manifest()?;
        }
    }
    for (s, (result, hit)) in semigroups.iter().zip(results) {
        match result {
            Ok(doc) => {
                if hit {
                    atlas.cache_hits += 1;
                } else if let Some(st) = store.as_deref() {
                    st.save(&doc)?;
                }
                atlas.rows.push(doc.row);
            }
            Err(e) => atlas.failures.push(RowFailure {
                generators: s.generators().to_vec(),
                error: e.to_string(),
            }),
        }
    }
    Ok(atlas)
}

/// A cached document as a cold run with `opts` would produce it, or `None`
/// when a requested column is missing from the cache.
fn adapt_cached(mut doc: RowDocument, opts: &AtlasOptions) -> Option<RowDocument> {
    if opts.include_t2 {
        if !matches!(doc.row.t2, Column::Computed(_)) {
            return None;
        }
    } else {
        doc.row.t2 = Column::Skipped;
        doc.row.record.t2_total = None;
        doc.cotangent.t2_total = None;
    }
    if opts.include_quadbase {
        if !matches!(doc.row.quadbase, Column::Computed(_)) {
            return None;
        }
    } else {
        doc.row.quadbase = Column::Skipped;
    }
    Some(doc)
}

fn compute_row(s: &NumericalSemigroup, table: &ReferenceTable, opts: &AtlasOptions) -> Result<RowDocument> {
    match opts.field {
        FieldKind::Rational => compute_row_in::<Rational>(s, table, opts),
        FieldKind::Prime(_) => compute_row_in::<Fp>(s, table, opts),
    }
}

fn compute_row_in<F: Field>(s: &NumericalSemigroup, table: &ReferenceTable, opts: &AtlasOptions) -> Result<RowDocument> {
    let mut record = build_record::<F>(s, table, RecordOptions { include_t2: false })?;
    let curve = toric_ideal::<F>(s);
    let t2 = if opts.include_t2 {
        let c = curve.clone();
        with_budget(opts.budget, move || t2_dimension(&c).total())
    } else {
        Column::Skipped
    };
    record.t2_total = t2.value().copied();
    let quadbase = if opts.include_quadbase {
        let c = curve.clone();
        with_budget(opts.budget, move || {
            let q = quadratic_base_equations(&c);
            QuadbaseSummary {
                equations: q.base.equations.len(),
                variables: q.base.nvars(),
                affine_dimension: q.base.dimension(),
            }
        })
    } else {
        Column::Skipped
    };
    let cotangent = CotangentJson {
        t1: record.t1.clone(),
        t1_plus: record.t1_plus,
        t1_minus: record.t1_minus,
        t2_total: record.t2_total,
    };
    Ok(RowDocument {
        curve: curve.record(),
        cotangent,
        row: AtlasRow { record, t2, quadbase },
    })
}

/// Runs `f` on a fresh thread pool and gives up after `budget`. A
/// computation that overruns keeps its threads until it finishes; its
/// result is dropped. The pool is separate from the one running the rows,
/// so a row waiting on its budget never starves the computation it waits for.
pub fn with_budget<T: Send + 'static>(budget: Option<Duration>, f: impl FnOnce() -> T + Send + 'static) -> Column<T> {
    let Some(limit) = budget else {
        return Column::Computed(f());
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let pool = rayon::ThreadPoolBuilder::new().build().expect("budget thread pool");
        let _ = tx.send(pool.install(f));
    });
    match rx.recv_timeout(limit) {
        Ok(v) => Column::Computed(v),
        Err(_) => Column::TimedOut,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            "md" | "markdown" => Ok(ExportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "name",
    "generators",
    "genus",
    "d_lower",
    "d_reference",
    "type",
    "t1_plus",
    "t2",
    "base",
];

fn columns(row: &AtlasRow) -> [String; 9] {
    let r = &row.record;
    let gens: Vec<String> = r.generators.iter().map(|n| n.to_string()).collect();
    [
        r.label.clone().unwrap_or_default(),
        gens.join(" "),
        r.genus.to_string(),
        r.d_lower.to_string(),
        r.d_reference.map(|d| d.to_string()).unwrap_or_default(),
        r.t.to_string(),
        r.t1_plus.to_string(),
        row.t2.render(),
        r.base_label.clone().unwrap_or_default(),
    ]
}

/// Renders rows with a fixed column order.
pub fn export(rows: &[AtlasRow], format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.write_record(columns(row))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ExportFormat::Markdown => {
            let mut out = String::new();
            writeln!(out, "| {} |", CSV_HEADER.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(CSV_HEADER.len())).unwrap();
            let mut genus = None;
            for row in rows {
                if genus.is_some() && genus != Some(row.record.genus) {
                    writeln!(out, "|{}", " |".repeat(CSV_HEADER.len())).unwrap();
                }
                genus = Some(row.record.genus);
                let mut cells = columns(row);
                cells[1] = format!("⟨{}⟩", cells[1].replace(' ', ","));
                writeln!(out, "| {} |", cells.join(" | ")).unwrap();
            }
            Ok(out)
        }
    }
}

/// Reads rows back from the JSON export.
pub fn import_json(text: &str) -> Result<Vec<AtlasRow>> {
    Ok(serde_json::from_str(text)?)
}

/// Comparison with the reference table, in human-readable and JSON form.
#[derive(Clone, Debug)]
pub struct ReferenceDiff {
    pub report: DiffReport,
}

impl ReferenceDiff {
    pub fn text(&self) -> String {
        self.report.to_string()
    }

    pub fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.report)?)
    }

    pub fn is_clean(&self) -> bool {
        self.report.is_clean()
    }
}

pub fn diff_reference(rows: &[AtlasRow]) -> ReferenceDiff {
    let records: Vec<CurveRecord> = rows.iter().map(|r| r.record.clone()).collect();
    ReferenceDiff {
        report: verify_reference(&records, &ReferenceTable::embedded()),
    }
}
