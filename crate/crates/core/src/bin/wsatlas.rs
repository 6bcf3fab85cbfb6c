use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wsatlas::atlas::{self, AtlasOptions, AtlasStore, ExportFormat};
use wsatlas::cotangent::{t1_graded, t2_dimension, CotangentJson};
use wsatlas::curve::toric_ideal;
use wsatlas::deform::{
    eliminate_linear, eliminate_linear_truncated, hauser_flatness_equations, hauser_unfolding, lowest_parts,
    quadratic_base_equations, trivial_parameters, LowestDegree,
};
use wsatlas::field::configure_prime;
use wsatlas::groebner::free_resolution_minimal;
use wsatlas::semigroup::enumerate_by_genus;
use wsatlas::{Field, FieldKind, Fp, NumericalSemigroup, Rational, Result};

#[derive(Parser)]
#[command(name = "wsatlas", version, about = "Monomial curves of numerical semigroups and their deformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all semigroups of genus 1..=G.
    Enumerate {
        #[arg(short = 'g', long)]
        genus: usize,
    },
    /// Gaps, Frobenius number, type and Apéry set.
    Invariants { generators: NumericalSemigroup },
    /// Minimal generators of the toric ideal.
    Ideal {
        generators: NumericalSemigroup,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Graded minimal free resolution.
    Resolve {
        generators: NumericalSemigroup,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Graded dimensions of T¹.
    T1 {
        generators: NumericalSemigroup,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Graded dimensions of T².
    T2 {
        generators: NumericalSemigroup,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Quadratic part of the negative-weight base equations.
    Quadbase {
        generators: NumericalSemigroup,
        /// Also compute the dimension of the zero scheme.
        #[arg(long)]
        dim: bool,
        /// Print the equations as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Unfolding with flatness equations, trivial directions removed.
    Hauser {
        generators: NumericalSemigroup,
        /// Eliminate linearly occurring variables.
        #[arg(long)]
        eliminate: bool,
        /// Drop terms of total degree above D while eliminating.
        #[arg(long, value_name = "D", requires = "eliminate")]
        truncate: Option<u32>,
        /// Replace each reduced equation by its lowest part.
        #[arg(long, value_enum, default_value = "off")]
        lowest: Lowest,
        /// Also compute the dimension of the zero scheme.
        #[arg(long)]
        dim: bool,
        #[arg(long, default_value = "q")]
        field: FieldKind,
    },
    /// Build the table of all semigroups of genus 1..=G.
    Table {
        #[arg(short = 'g', long)]
        genus: usize,
        #[arg(long, default_value = "md")]
        format: String,
        /// Compare with the reference table; nonzero exit on any mismatch.
        #[arg(long)]
        diff: bool,
        /// Print the comparison as JSON.
        #[arg(long, requires = "diff")]
        diff_json: bool,
        #[arg(long)]
        t2: bool,
        #[arg(long)]
        quadbase: bool,
        /// Per-row budget in seconds for the optional columns.
        #[arg(long, value_name = "SECS")]
        budget: Option<u64>,
        #[arg(long, default_value = "q")]
        field: FieldKind,
        #[arg(long)]
        threads: Option<usize>,
        /// Cache directory; defaults to $WSATLAS_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Ignore and do not write the cache.
        #[arg(long)]
        no_cache: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lowest {
    Off,
    Weighted,
    Total,
}

impl From<Lowest> for LowestDegree {
    fn from(l: Lowest) -> Self {
        match l {
            Lowest::Off => LowestDegree::Off,
            Lowest::Weighted => LowestDegree::Weighted,
            Lowest::Total => LowestDegree::Total,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

/// Runs `body` over the selected field.
macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            FieldKind::Rational => {
                type $f = Rational;
                $body
            }
            FieldKind::Prime(p) => {
                configure_prime(p)?;
                type $f = Fp;
                $body
            }
        }
    };
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Enumerate { genus } => {
            for (g, list) in enumerate_by_genus(genus)? {
                if g == 0 {
                    continue;
                }
                println!("genus {g}: {}", list.len());
                for s in list {
                    println!("  {s}");
                }
            }
        }
        Command::Invariants { generators } => {
            #[derive(Serialize)]
            struct Invariants {
                #[serde(flatten)]
                record: wsatlas::semigroup::SemigroupRecord,
                multiplicity: u64,
                conductor: u64,
                pseudo_frobenius: Vec<u64>,
                apery: Vec<u64>,
            }
            let s = &generators;
            print_json(&Invariants {
                record: s.record(),
                multiplicity: s.multiplicity(),
                conductor: s.conductor(),
                pseudo_frobenius: s.pseudo_frobenius(),
                apery: s.apery_set(s.multiplicity())?.representatives,
            })?;
        }
        Command::Ideal { generators, field } => with_field!(field, K => {
            print_json(&toric_ideal::<K>(&generators).record())?;
        }),
        Command::Resolve { generators, field } => with_field!(field, K => {
            let curve = toric_ideal::<K>(&generators);
            print_json(&free_resolution_minimal(&curve.ideal).summary())?;
        }),
        Command::T1 { generators, field } => with_field!(field, K => {
            let curve = toric_ideal::<K>(&generators);
            print_json(&CotangentJson::new(&t1_graded(&curve), None))?;
        }),
        Command::T2 { generators, field } => with_field!(field, K => {
            let curve = toric_ideal::<K>(&generators);
            let t2 = t2_dimension(&curve);
            print_json(&serde_json::json!({ "t2": t2.dims.entries, "total": t2.total() }))?;
        }),
        Command::Quadbase { generators, dim, json, field } => with_field!(field, K => {
            let curve = toric_ideal::<K>(&generators);
            let q = quadratic_base_equations(&curve);
            if json {
                print_json(&q.base.json())?;
            }
            println!("equations {}", q.base.equations.len());
            println!("variables {}", q.base.nvars());
            if dim {
                let d = q.base.dimension();
                println!("dimension {d} (projective {})", d - 1);
            }
        }),
        Command::Hauser { generators, eliminate, truncate, lowest, dim, field } => with_field!(field, K => {
            hauser::<K>(&generators, eliminate, truncate, lowest.into(), dim);
        }),
        Command::Table {
            genus,
            format,
            diff,
            diff_json,
            t2,
            quadbase,
            budget,
            field,
            threads,
            cache,
            no_cache,
        } => {
            let format: ExportFormat = format.parse()?;
            let opts = AtlasOptions {
                field,
                threads: threads.or_else(atlas::threads_from_env),
                include_t2: t2,
                include_quadbase: quadbase,
                budget: budget.map(Duration::from_secs),
            };
            let mut store = match (no_cache, cache) {
                (true, _) => None,
                (false, Some(dir)) => Some(AtlasStore::open(dir, &field)?),
                (false, None) => AtlasStore::from_env(&field)?,
            };
            let built = atlas::build_atlas(genus, &opts, store.as_mut())?;
            print!("{}", atlas::export(&built.rows, format)?);
            for f in &built.failures {
                eprintln!("row {:?} failed: {}", f.generators, f.error);
            }
            let mut ok = built.is_complete();
            if diff {
                let report = atlas::diff_reference(&built.rows);
                if diff_json {
                    eprintln!("{}", report.json()?);
                } else {
                    eprint!("{}", report.text());
                }
                ok &= report.is_clean();
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn hauser<K: Field>(s: &NumericalSemigroup, eliminate: bool, truncate: Option<u32>, lowest: LowestDegree, dim: bool) {
    let curve = toric_ideal::<K>(s);
    let full = hauser_unfolding(&curve);
    let trivial = trivial_parameters(&full, &curve);
    let family = full.without_parameters(&trivial);
    let system = hauser_flatness_equations(&family);
    let mut base = system.base;
    base.equations.retain(|e| !e.is_zero());
    println!(
        "unfolding {} variables, {} trivial, {} kept",
        full.nparameters(),
        trivial.len(),
        family.nparameters()
    );
    let monomials: usize = base.equations.iter().map(|e| e.len()).sum();
    println!("flatness {} equations, {} monomials", base.equations.len(), monomials);
    if eliminate {
        let elim = match truncate {
            Some(d) => eliminate_linear_truncated(&base, |_| true, d),
            None => eliminate_linear(&base, |_| true),
        };
        println!("eliminated {} variables", elim.eliminated.len());
        base = elim.reduced;
    }
    base = lowest_parts(&base, lowest);
    println!("reduced {} equations in {} variables", base.equations.len(), base.nvars());
    for e in &base.equations {
        println!("  {e}");
    }
    if dim {
        let d = base.dimension();
        println!("dimension {d} (projective {})", d - 1);
    }
}
