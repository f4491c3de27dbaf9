//! One line per acceptance criterion; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tope_filtrations::algebras::{affine_image, nbc_sets, projectivize, ElementOrder};
use tope_filtrations::corpus::{builtin, CORPUS};
use tope_filtrations::cosheaf::{lifting_system, verify_cosheaf, LiftTarget};
use tope_filtrations::filtrations::{
    all_prefix_specs, asymptotic_filtration, brick_mod2, chain_mod2, prefix_chain, quillen_q,
    quillen_q_exhaustive, quillen_z_demo, tilde_a, tope_chain, verify_cochain_pairing,
    verify_filtrations_agree, vg_lower_z, viro_bv, PrefixSpec, ViroSolver,
};
use tope_filtrations::om::{enumerate_flags, Flag, OrientedMatroid, SignVector};
use tope_filtrations::salvetti::{Cell, FineSalvetti, SalvettiComplex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sv(s: &str) -> SignVector {
    SignVector::parse(s).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn matroid(name: &str) -> OrientedMatroid {
    builtin(name).unwrap().load().matroid
}

fn golden_u23() -> Outcome {
    let start = Instant::now();
    let m = matroid("u23");
    ensure!(
        m.covectors().len() == 13,
        "{} covectors",
        m.covectors().len()
    );
    ensure!(m.topes().len() == 6, "{} topes", m.topes().len());
    let coarse = SalvettiComplex::build(&m);
    ensure!(
        coarse.cell_counts() == [6, 12, 6],
        "cells {:?}",
        coarse.cell_counts()
    );
    let mod2 = coarse.betti_numbers_mod2();
    ensure!(mod2 == [1, 3, 2], "mod-2 Betti {mod2:?}");
    let fine = FineSalvetti::from_coarse(&coarse);
    for (d, &b) in mod2.iter().enumerate() {
        let h = fine.homology_z(d);
        ensure!(h.rank == b && h.torsion.is_empty(), "H_{d}(Z) = {h:?}");
    }
    ensure!(
        mod2.iter().sum::<usize>() == m.topes().len(),
        "total Betti differs from tope count"
    );
    within(start, Duration::from_secs(1), "u23 golden data")?;
    Ok(format!(
        "cells (6,12,6), Betti (1,3,2) over Z/2 and Z, {:?}",
        start.elapsed()
    ))
}

fn filtrations_agree() -> Outcome {
    let mut dims = Vec::new();
    for e in CORPUS {
        let start = Instant::now();
        let m = e.load().matroid;
        let coarse = SalvettiComplex::build(&m);
        let rep = verify_filtrations_agree(&m, &coarse, &ElementOrder::identity(m.ground_size()));
        ensure!(
            rep.equal && rep.chain_of_inclusions,
            "{}: {:?}",
            e.name,
            rep.discrepancy
        );
        within(start, Duration::from_secs(120), e.name)?;
        dims.push(format!("{} {:?}", e.name, rep.kalinin));
    }
    Ok(dims.join("; "))
}

fn cochain_pairing() -> Outcome {
    let mut total = 0;
    for e in CORPUS {
        let m = e.load().matroid;
        let coarse = SalvettiComplex::build(&m);
        let fine = FineSalvetti::from_coarse(&coarse);
        let rep = verify_cochain_pairing(
            &m,
            &coarse,
            &fine,
            &ElementOrder::identity(m.ground_size()),
            7,
        )
        .map_err(|err| format!("{}: {err}", e.name))?;
        ensure!(
            rep.pass(),
            "{}: {:?}",
            e.name,
            &rep.failures[..rep.failures.len().min(3)]
        );
        total += rep.comparisons;
    }
    Ok(format!("{total} comparisons of c^S(bv_p) with qbv_p"))
}

fn bookkeeping() -> Outcome {
    for e in CORPUS {
        let m = e.load().matroid;
        let coarse = SalvettiComplex::build(&m);
        let order = ElementOrder::identity(m.ground_size());
        let rep = verify_filtrations_agree(&m, &coarse, &order);
        ensure!(rep.bookkeeping, "{}: {:?}", e.name, rep.discrepancy);
        ensure!(
            rep.betti_mod2 == e.expected_betti,
            "{}: Betti {:?}",
            e.name,
            rep.betti_mod2
        );
        // NBC counts are order independent
        let reversed = ElementOrder::new((0..m.ground_size()).rev().collect()).unwrap();
        let nbc: Vec<usize> = (0..=m.rank())
            .map(|p| nbc_sets(&m, &reversed, p).len())
            .collect();
        ensure!(nbc == e.expected_betti, "{}: reversed NBC {nbc:?}", e.name);
    }
    Ok("quotients of Q, K, P and #NBC equal the mod-2 Betti numbers".into())
}

fn maximality() -> Outcome {
    for e in CORPUS {
        let m = e.load().matroid;
        let total: usize = SalvettiComplex::build(&m).betti_numbers_mod2().iter().sum();
        ensure!(
            total == m.topes().len(),
            "{}: {total} vs {}",
            e.name,
            m.topes().len()
        );
    }
    Ok("total mod-2 Betti number equals the tope count on the corpus".into())
}

fn worked_values() -> Outcome {
    let m = matroid("u23");
    let coarse = SalvettiComplex::build(&m);
    let f = Flag::new(&m, vec![0, 0b001, 0b111]).unwrap();
    let (a, b, d, e) = (sv("+++"), sv("-++"), sv("---"), sv("+--"));
    let g = |v, p| prefix_chain(&m, &PrefixSpec::new(&m, f.clone(), v, p).unwrap());
    ensure!(g(a, 1) == tope_chain(&m, &[(a, 1), (b, -1)]), "γ_(F,A,1)");
    ensure!(
        g(a, 2) == tope_chain(&m, &[(a, 1), (b, -1), (d, 1), (e, -1)]),
        "γ_(F,A,2)"
    );
    let flipped: Vec<_> = g(a, 2).iter().map(|x| -x).collect();
    ensure!(g(e, 2) == flipped, "origin change does not flip the sign");

    let cells = |d, list: &[(SignVector, SignVector)]| {
        coarse.chain(
            d,
            &list
                .iter()
                .map(|&(l, t)| Cell::new(l, t))
                .collect::<Vec<_>>(),
        )
    };
    let (alpha, o) = (sv("0++"), sv("000"));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (c1, _) =
        viro_bv(&coarse, &cells(0, &[(a, a), (b, b)]), 1, &mut rng).map_err(|x| x.to_string())?;
    ensure!(
        coarse.homologous(1, &c1, &cells(1, &[(alpha, a), (alpha, b)])),
        "bv_1(A+B)"
    );
    let gamma = cells(0, &[(a, a), (b, b), (d, d), (e, e)]);
    let (c2, _) = viro_bv(&coarse, &gamma, 2, &mut rng).map_err(|x| x.to_string())?;
    ensure!(
        coarse.homologous(2, &c2, &cells(2, &[(o, a), (o, b), (o, d), (o, e)])),
        "bv_2(A+B+D+E)"
    );

    let brick = |p| brick_mod2(&coarse, &PrefixSpec::new(&m, f.clone(), a, p).unwrap());
    ensure!(
        brick(1) == cells(1, &[(alpha, a), (alpha, b)]),
        "1-brick mod 2"
    );
    ensure!(
        brick(2) == cells(2, &[(o, a), (o, b), (o, d), (o, e)]),
        "2-brick mod 2"
    );
    Ok("prefix chains, bv_1, bv_2 and bricks of U(2,3) reproduced".into())
}

fn quillen_integral() -> Outcome {
    let m = matroid("u22");
    let d = quillen_z_demo(&m, 2);
    ensure!(d.rank == 3, "degree-2 span has rank {}", d.rank);
    ensure!(!d.next_index.is_empty(), "I^3 = I^2 over Z");
    Ok(format!(
        "rank 3, index of I^3 in I^2 has invariants {:?}",
        d.next_index
    ))
}

fn stalk_sequences() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for name in ["u23", "u34"] {
        let m = matroid(name);
        let degrees: Vec<usize> = (0..=m.rank()).collect();
        let rep = verify_cosheaf(&m, &degrees).map_err(|e| e.to_string())?;
        ensure!(
            rep.pass(),
            "{name}: {:?}",
            &rep.failures[..rep.failures.len().min(3)]
        );
        counts.push(format!(
            "{name}: {} cones, {} sequences, {} squares",
            rep.cones.len(),
            rep.sequences.len(),
            rep.squares.len()
        ));
    }
    within(start, Duration::from_secs(60), "cosheaf checks")?;
    Ok(counts.join("; "))
}

fn projectivization() -> Outcome {
    for e in CORPUS {
        let m = e.load().matroid;
        let order = ElementOrder::identity(m.ground_size());
        for p in 0..=m.rank() {
            let proj = projectivize(&m, &order, p).map_err(|x| x.to_string())?;
            if p % 2 == 0 {
                ensure!(
                    proj.rank_b == 0,
                    "{} p={p}: B_p has rank {}",
                    e.name,
                    proj.rank_b
                );
                ensure!(
                    proj.free_rank == proj.rank_a && proj.torsion.is_empty(),
                    "{} p={p}",
                    e.name
                );
            } else {
                let avoiding = nbc_sets(&m, &order, p)
                    .iter()
                    .filter(|&&s| s & 1 == 0)
                    .count();
                ensure!(
                    proj.dim_mod2 == avoiding,
                    "{} p={p}: dim {} vs {avoiding}",
                    e.name,
                    proj.dim_mod2
                );
            }
        }
    }
    Ok(
        "B_p = 0 for even p; odd-degree mod-2 dimensions match NBC sets avoiding the minimum"
            .into(),
    )
}

fn property_suites() -> Outcome {
    // bv_p does not depend on the elimination order
    for e in CORPUS {
        let m = e.load().matroid;
        let coarse = SalvettiComplex::build(&m);
        for p in 0..=m.rank() {
            let viro = ViroSolver::new(&coarse, p).map_err(|x| x.to_string())?;
            for spec in all_prefix_specs(&m, p) {
                let gamma = chain_mod2(&prefix_chain(&m, &spec));
                let mut reference = None;
                for seed in 0..20 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let (cycle, _) = viro.bv(&gamma, &mut rng).map_err(|x| x.to_string())?;
                    match &reference {
                        None => reference = Some(cycle),
                        Some(r) => ensure!(
                            coarse.homologous(p, r, &cycle),
                            "{} p={p} seed {seed}",
                            e.name
                        ),
                    }
                }
            }
        }
    }
    // reduced Quillen generators against every affine subspace
    for name in ["u22", "u23"] {
        let m = matroid(name);
        for p in 0..=m.rank() + 1 {
            let (q, oracle) = (quillen_q(&m, p), quillen_q_exhaustive(&m, p));
            ensure!(
                q.is_subspace_of(&oracle) && oracle.is_subspace_of(&q),
                "{name} Q_{p}"
            );
        }
    }
    // ã_p by the pairing formula against the images of affine generators
    for e in CORPUS {
        let m = e.load().matroid;
        for p in 0..=m.rank() {
            for spec in all_prefix_specs(&m, p) {
                let image = tilde_a(&m, &prefix_chain(&m, &spec), p).map_err(|x| x.to_string())?;
                ensure!(
                    image == affine_image(&spec.flag, &spec.origin, &spec.steps()),
                    "{} {spec:?}",
                    e.name
                );
            }
        }
    }
    // asymptotic filtration of realized arrangements
    for e in CORPUS {
        let m = e.load().matroid;
        for p in 0..=m.rank() + 1 {
            let equal = asymptotic_filtration(&m, p)
                .equals(&vg_lower_z(&m, p))
                .map_err(|x| x.to_string())?;
            ensure!(equal, "{} p={p}: asymptotic filtration differs", e.name);
        }
    }
    // negative control: no single map lifts all Orlik–Solomon stalks of U(2,3)
    let m = matroid("u23");
    let flags = enumerate_flags(&m, true);
    let os = lifting_system(&m, &flags, LiftTarget::OrlikSolomon).map_err(|x| x.to_string())?;
    ensure!(!os.feasible, "Orlik–Solomon lifting system is feasible");
    let cord = lifting_system(&m, &flags, LiftTarget::Cordovil).map_err(|x| x.to_string())?;
    ensure!(cord.feasible, "Cordovil lifting system is infeasible");
    Ok(format!(
        "20-seed bv_p, Quillen oracle, ã_p oracle, asymptotic filtration, OS lift infeasible ({}×{})",
        os.equations, os.unknowns
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("U(2,3) golden data", golden_u23),
        ("Q_p = P̄_p = K_p on the corpus", filtrations_agree),
        ("c^S ∘ bv_p = qbv_p on prefix chains", cochain_pairing),
        ("dimension bookkeeping", bookkeeping),
        ("Kalinin maximality", maximality),
        ("worked values", worked_values),
        ("integral Quillen powers do not stabilise", quillen_integral),
        ("stalk sequences and naturality", stalk_sequences),
        ("projectivization", projectivization),
        ("property suites and negative control", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
