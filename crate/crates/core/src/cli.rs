//! The `topes` command line: `describe`, `verify` and `corpus`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebras::{nbc_sets, projectivize, ElementOrder};
use crate::corpus::{builtin, builtin_names, load, CORPUS};
use crate::cosheaf::verify_cosheaf;
use crate::error::{Error, Result};
use crate::filtrations::{
    asymptotic_filtration, quillen_z_demo, verify_cochain_pairing_in_degrees,
    verify_filtrations_agree, vg_lower_z,
};
use crate::om::io::Parsed;
use crate::om::sign::mask_label;
use crate::report::{timed, Check, Report};
use crate::salvetti::{FineSalvetti, SalvettiComplex};

#[derive(Debug, Parser)]
#[command(
    name = "topes",
    version,
    about = "Tope-space filtrations of oriented matroids, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Counts, Betti numbers, NBC sets and Salvetti cell counts of one input.
    Describe {
        /// Builtin name or path to an arrangement or covector file.
        input: String,
        #[command(flatten)]
        opts: Options,
    },
    /// Runs verification suites on one input.
    Verify {
        input: String,
        #[arg(value_enum, default_value = "all")]
        which: Suite,
        #[command(flatten)]
        opts: Options,
    },
    /// Runs every suite over builtin corpus entries.
    Corpus {
        /// Entries to run; all builtins when empty.
        names: Vec<String>,
        /// Worker threads; 0 uses the available parallelism.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        opts: Options,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Element ordering for NBC data, as one-based labels, e.g. `3,1,2`.
    #[arg(long)]
    pub order: Option<String>,
    /// Coefficients for the homology reported by `describe`.
    #[arg(long, value_enum, default_value = "z2")]
    pub ring: Ring,
    /// Restrict degree-indexed data and suites to this degree.
    #[arg(long)]
    pub p: Option<usize>,
    /// Seed for the randomized elimination in the Viro solver.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Z,
    Z2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "thmA", alias = "thma")]
    ThmA,
    #[value(name = "thmB", alias = "thmb")]
    ThmB,
    #[value(name = "thmC", alias = "thmc")]
    ThmC,
    #[value(name = "proj")]
    Proj,
    #[value(name = "asym")]
    Asym,
    #[value(name = "quillenZ", alias = "quillenz")]
    QuillenZ,
    #[value(name = "all")]
    All,
}

impl Suite {
    const EACH: [Suite; 6] = [
        Suite::ThmA,
        Suite::ThmB,
        Suite::ThmC,
        Suite::Proj,
        Suite::Asym,
        Suite::QuillenZ,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::ThmA => "thmA",
            Suite::ThmB => "thmB",
            Suite::ThmC => "thmC",
            Suite::Proj => "proj",
            Suite::Asym => "asym",
            Suite::QuillenZ => "quillenZ",
            Suite::All => "all",
        }
    }
}

/// A loaded input with everything the suites share.
pub struct Target {
    pub name: String,
    pub parsed: Parsed,
    pub order: ElementOrder,
    pub p: Option<usize>,
    pub seed: u64,
}

impl Target {
    pub fn load(input: &str, opts: &Options) -> Result<Self> {
        let (name, parsed) = load(input)?;
        let n = parsed.matroid.ground_size();
        let order = match &opts.order {
            Some(s) => ElementOrder::parse(s, n)?,
            None => ElementOrder::identity(n),
        };
        if let Some(p) = opts.p {
            let r = parsed.matroid.rank();
            if p > r + 1 {
                return Err(Error::Usage(format!(
                    "--p {p} exceeds rank + 1 = {}",
                    r + 1
                )));
            }
        }
        Ok(Target {
            name,
            parsed,
            order,
            p: opts.p,
            seed: opts.seed,
        })
    }

    fn degrees(&self, top: usize) -> Vec<usize> {
        match self.p {
            Some(p) => vec![p],
            None => (0..=top).collect(),
        }
    }

    fn order_label(&self) -> String {
        (0..self.order.len())
            .map(|k| {
                let e = (0..self.order.len())
                    .find(|&e| self.order.position(e) == k)
                    .expect("permutation");
                (e + 1).to_string()
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn check(
    id: &str,
    t: &Target,
    parameters: Value,
    run: impl FnOnce() -> Result<(bool, Value)>,
) -> Check {
    let (outcome, wall_ms) = timed(run);
    let (pass, data) = outcome.unwrap_or_else(|e| (false, json!({ "error": e.to_string() })));
    Check {
        id: id.to_string(),
        target: t.name.clone(),
        parameters,
        pass,
        data,
        wall_ms,
    }
}

pub fn describe(t: &Target, ring: Ring) -> Check {
    let m = &t.parsed.matroid;
    let r = m.rank();
    let params =
        json!({ "ring": format!("{ring:?}").to_lowercase(), "order": t.order_label(), "p": t.p });
    check("describe", t, params, || {
        let coarse = SalvettiComplex::build(m);
        let (betti, torsion): (Vec<usize>, Vec<Vec<String>>) = match ring {
            Ring::Z2 => (coarse.betti_numbers_mod2(), vec![Vec::new(); r + 1]),
            Ring::Z => {
                let fine = FineSalvetti::from_coarse(&coarse);
                (0..=fine.top_dim())
                    .map(|d| {
                        let h = fine.homology_z(d);
                        (h.rank, h.torsion.iter().map(ToString::to_string).collect())
                    })
                    .unzip()
            }
        };
        let nbc: Vec<Value> = t
            .degrees(r)
            .into_iter()
            .map(|p| {
                let sets: Vec<String> = nbc_sets(m, &t.order, p)
                    .into_iter()
                    .map(mask_label)
                    .collect();
                json!({ "p": p, "count": sets.len(), "sets": sets })
            })
            .collect();
        let total: usize = betti.iter().sum();
        let torsion_free = torsion.iter().all(Vec::is_empty);
        let pass = total == m.topes().len() && torsion_free;
        Ok((
            pass,
            json!({
                "ground_size": m.ground_size(),
                "rank": r,
                "realizable": t.parsed.arrangement.is_some(),
                "covectors": m.covectors().len(),
                "topes": m.topes().len(),
                "flats_by_rank": (0..=r).map(|k| m.flats_of_rank(k).count()).collect::<Vec<_>>(),
                "salvetti_cells": coarse.cell_counts(),
                "fixed_cells": coarse.fixed_cells().len(),
                "betti": betti,
                "torsion": torsion,
                "betti_total": total,
                "nbc": nbc,
            }),
        ))
    })
}

fn suite(t: &Target, s: Suite) -> Check {
    let m = &t.parsed.matroid;
    let r = m.rank();
    let order = json!(t.order_label());
    match s {
        Suite::ThmA => check(s.id(), t, json!({ "order": order }), || {
            let coarse = SalvettiComplex::build(m);
            let rep = verify_filtrations_agree(m, &coarse, &t.order);
            Ok((
                rep.pass(),
                serde_json::to_value(&rep).expect("serializable"),
            ))
        }),
        Suite::ThmB => {
            let degrees = t
                .degrees(r)
                .into_iter()
                .filter(|&p| p <= r)
                .collect::<Vec<_>>();
            check(
                s.id(),
                t,
                json!({ "order": order, "seed": t.seed, "degrees": degrees }),
                || {
                    let coarse = SalvettiComplex::build(m);
                    let fine = FineSalvetti::from_coarse(&coarse);
                    let rep = verify_cochain_pairing_in_degrees(
                        m, &coarse, &fine, &t.order, t.seed, &degrees,
                    )?;
                    Ok((
                        rep.pass(),
                        serde_json::to_value(&rep).expect("serializable"),
                    ))
                },
            )
        }
        Suite::ThmC => {
            let degrees = t.degrees(r);
            check(s.id(), t, json!({ "degrees": degrees }), || {
                let rep = verify_cosheaf(m, &degrees)?;
                Ok((
                    rep.pass(),
                    serde_json::to_value(&rep).expect("serializable"),
                ))
            })
        }
        Suite::Proj => {
            let degrees = t.degrees(r);
            check(
                s.id(),
                t,
                json!({ "order": order, "degrees": degrees }),
                || {
                    let reps = degrees
                        .iter()
                        .map(|&p| projectivize(m, &t.order, p))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((
                        reps.iter().all(|x| x.pass),
                        serde_json::to_value(&reps).expect("serializable"),
                    ))
                },
            )
        }
        Suite::Asym => {
            let degrees = t.degrees(r + 1);
            let asserted = t.parsed.arrangement.is_some();
            check(s.id(), t, json!({ "degrees": degrees }), || {
                let equal = degrees
                    .iter()
                    .map(|&p| asymptotic_filtration(m, p).equals(&vg_lower_z(m, p)))
                    .collect::<Result<Vec<bool>>>()?;
                let all = equal.iter().all(|&b| b);
                // only asserted when a realization was given
                Ok((
                    all || !asserted,
                    json!({ "asserted": asserted, "equal": equal }),
                ))
            })
        }
        Suite::QuillenZ => {
            let degrees: Vec<usize> = match t.p {
                Some(p) => vec![p],
                None => (1..=r + 1).collect(),
            };
            check(s.id(), t, json!({ "degrees": degrees }), || {
                let full = (1usize << r) - 1;
                let demos: Vec<Value> = degrees
                    .iter()
                    .map(|&p| {
                        let d = quillen_z_demo(m, p);
                        json!({
                            "p": p,
                            "rank": d.rank,
                            "next_index": d.next_index.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            "stabilizes": d.next_index.is_empty(),
                        })
                    })
                    .collect();
                // every power has full rank yet I^{p+1} is a proper sublattice of I^p
                let pass = degrees.iter().all(|&p| p >= 1)
                    && demos
                        .iter()
                        .all(|d| d["rank"] == json!(full) && d["stabilizes"] == json!(false));
                Ok((pass, json!({ "group_rank": r, "powers": demos })))
            })
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

pub fn verify(t: &Target, which: Suite) -> Report {
    let mut rep = Report::new("verify");
    let suites: Vec<Suite> = if which == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![which]
    };
    for s in suites {
        rep.push(suite(t, s));
    }
    rep
}

/// `verify all` over the named builtins, in corpus order regardless of `jobs`.
pub fn corpus(names: &[String], jobs: usize, opts: &Options) -> Result<Report> {
    let entries: Vec<&str> = if names.is_empty() {
        CORPUS.iter().map(|e| e.name).collect()
    } else {
        names
            .iter()
            .map(|n| {
                builtin(n).map(|e| e.name).ok_or_else(|| {
                    Error::UnknownInput(format!(
                        "{n} (builtins are {})",
                        builtin_names().join(", ")
                    ))
                })
            })
            .collect::<Result<_>>()?
    };
    let targets = entries
        .iter()
        .map(|n| Target::load(n, opts))
        .collect::<Result<Vec<_>>>()?;
    let jobs = match jobs {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        j => j,
    }
    .min(targets.len().max(1));
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; targets.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(t) = targets.get(i) else { break };
                let rep = verify(t, Suite::All);
                results.lock().expect("no poisoned workers")[i] = Some(rep);
            });
        }
    });
    let mut out = Report::new("corpus");
    for rep in results.into_inner().expect("workers joined") {
        out.extend(rep.expect("every entry ran"));
    }
    Ok(out)
}

fn emit(rep: &Report, opts: &Options, human: impl FnOnce() -> String) -> Result<()> {
    match &opts.json {
        Some(path) if path.as_os_str() == "-" => println!("{}", rep.to_json()),
        Some(path) => {
            std::fs::write(path, rep.to_json() + "\n")?;
            print!("{}", human());
        }
        None => print!("{}", human()),
    }
    std::io::stdout().flush()?;
    Ok(())
}

fn describe_text(c: &Check) -> String {
    let mut out = format!("{}\n", c.target);
    if let Value::Object(fields) = &c.data {
        for (k, v) in fields {
            out.push_str(&format!("  {k}: {v}\n"));
        }
    }
    out
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Describe { input, opts } => {
            let t = Target::load(&input, &opts)?;
            let mut rep = Report::new("describe");
            let c = describe(&t, opts.ring);
            let text = describe_text(&c);
            rep.push(c);
            emit(&rep, &opts, || text)?;
            Ok(rep.pass)
        }
        Command::Verify { input, which, opts } => {
            let t = Target::load(&input, &opts)?;
            if which == Suite::QuillenZ && opts.p == Some(0) {
                return Err(Error::Usage(
                    "the augmentation ideal powers start at p = 1".into(),
                ));
            }
            let rep = verify(&t, which);
            emit(&rep, &opts, || rep.summary())?;
            Ok(rep.pass)
        }
        Command::Corpus { names, jobs, opts } => {
            if opts.p == Some(0) {
                return Err(Error::Usage("corpus runs need p ≥ 1 or no --p".into()));
            }
            let rep = corpus(&names, jobs, &opts)?;
            emit(&rep, &opts, || rep.summary())?;
            Ok(rep.pass)
        }
    }
}

/// Parses arguments and runs; returns the process exit code
/// (0 all pass, 1 a check failed, 2 bad input).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
