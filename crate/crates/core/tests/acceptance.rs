//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use angulator::disk::{enumerate_angulations, flip_graph, fuss_catalan, DiskConfig, Guard};
use angulator::verify::{
    annulus_matrix, check_connectivity, check_flip_cycle, check_flip_mutation, check_gabriel,
    check_maximal_extension, check_quiver_axioms, cut_annulus, cut_disk, random_walk,
    VerificationReport, VerifyOptions,
};
use angulator::Angulation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// (m, sides, number of angulations).
const DISKS: [(u32, u32, u64); 7] = [
    (1, 5, 5),
    (1, 6, 14),
    (1, 7, 42),
    (2, 8, 12),
    (2, 10, 55),
    (3, 11, 22),
    (3, 14, 140),
];
const WALK_STEPS: usize = 500;
const SEED: u64 = 0;

fn guard() -> Guard {
    Guard::new(12)
}

fn disks() -> impl Iterator<Item = (DiskConfig, u64)> {
    DISKS
        .iter()
        .map(|&(m, s, n)| (DiskConfig::new(m, s).expect("valid disk"), n))
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Option<Duration>,
}

fn run(c: Criterion, body: impl FnOnce(&mut VerificationReport)) -> bool {
    let started = Instant::now();
    let mut report = VerificationReport::new(c.title);
    body(&mut report);
    let elapsed = started.elapsed();
    let in_time = c.budget.is_none_or(|b| elapsed <= b);
    let pass = report.pass && in_time;
    let budget = c
        .budget
        .map(|b| format!(" / {} s", b.as_secs()))
        .unwrap_or_default();
    println!(
        "{} criterion {}: {} ({} cases, {} failed, {:.2} s{budget})",
        if pass { "PASS" } else { "FAIL" },
        c.number,
        c.title,
        report.cases,
        report.failed,
        elapsed.as_secs_f64(),
    );
    for f in &report.failures {
        println!("    {}: expected {}, got {}", f.input, f.expected, f.actual);
    }
    pass
}

/// Runs a check on every arc of every disk angulation in the count table
/// and of every state of a random walk per annulus configuration.
fn every_case(
    report: &mut VerificationReport,
    disk: impl Fn(&mut VerificationReport, &angulator::disk::DiskAngulation, &angulator::disk::Diagonal),
    annulus: impl Fn(
        &mut VerificationReport,
        &angulator::annulus::AnnulusAngulation,
        &angulator::annulus::ArcClass,
    ),
) {
    for (config, _) in disks() {
        let e = enumerate_angulations(config, guard(), true).expect("within guard");
        for a in e.angulations.expect("requested") {
            for d in a.arcs() {
                disk(report, &a, d);
            }
        }
    }
    for config in annulus_matrix() {
        let walk = random_walk(&config.initial_bridges(), WALK_STEPS, SEED).expect("flips succeed");
        for a in &walk {
            for x in a.arcs() {
                annulus(report, a, x);
            }
        }
    }
}

fn main() -> ExitCode {
    let mut all = true;

    all &= run(
        Criterion {
            number: 1,
            title: "disk counts equal Fuss-Catalan and flip-graph size",
            budget: Some(Duration::from_secs(60)),
        },
        |r| {
            for (config, expected) in disks() {
                let case = format!("disk(m={},S={})", config.m(), config.sides());
                let e = enumerate_angulations(config, guard(), false).expect("within guard");
                r.expect_eq(&case, expected, e.count);
                let k = config.rank() as u32 + 1;
                r.expect_eq(&case, u128::from(expected), fuss_catalan(config.m(), k));
                let g = flip_graph(config, guard()).expect("within guard");
                r.expect_eq(&case, expected, g.node_count() as u64);
            }
        },
    );

    all &= run(
        Criterion {
            number: 2,
            title: "flip and mutation commute",
            budget: Some(Duration::from_secs(120)),
        },
        |r| every_case(r, check_flip_mutation, check_flip_mutation),
    );

    all &= run(
        Criterion {
            number: 3,
            title: "m+1 completions and flip period m+1",
            budget: None,
        },
        |r| every_case(r, check_flip_cycle, check_flip_cycle),
    );

    all &= run(
        Criterion {
            number: 4,
            title: "colored quiver axioms and procedural mutation agree",
            budget: None,
        },
        |r| every_case(r, check_quiver_axioms, check_quiver_axioms),
    );

    all &= run(
        Criterion {
            number: 5,
            title: "flip graphs are connected",
            budget: None,
        },
        |r| {
            for (config, _) in disks() {
                check_connectivity(r, config, guard());
            }
        },
    );

    all &= run(
        Criterion {
            number: 6,
            title: "maximal noncrossing sets have rank many arcs",
            budget: None,
        },
        |r| {
            for (config, _) in disks() {
                let case = format!("disk(m={},S={})", config.m(), config.sides());
                let e = enumerate_angulations(config, guard(), false).expect("within guard");
                let sizes: Vec<usize> = e.sizes.keys().copied().collect();
                r.expect_eq(&case, vec![config.rank()], sizes);
            }
            let opts = VerifyOptions::default();
            for config in annulus_matrix() {
                let mut rng = ChaCha8Rng::seed_from_u64(SEED);
                for _ in 0..opts.extension_trials.max(100) {
                    check_maximal_extension(r, config, opts.window, &mut rng);
                }
            }
        },
    );

    all &= run(
        Criterion {
            number: 7,
            title: "cut transport preserves crossings and commutes with flips",
            budget: None,
        },
        |r| {
            let opts = VerifyOptions {
                seed: SEED,
                guard: guard(),
                cut_trials: 200,
                ..VerifyOptions::default()
            };
            for (config, _) in disks() {
                r.merge(cut_disk(config, &opts));
            }
            for config in annulus_matrix() {
                let sub = cut_annulus(config, &opts);
                if sub.suite.contains("bridge cuts") {
                    println!("    note: {}", sub.suite);
                }
                r.merge(sub);
            }
        },
    );

    all &= run(
        Criterion {
            number: 8,
            title: "fan Gabriel quivers are linear paths",
            budget: None,
        },
        |r| {
            for (config, _) in disks() {
                check_gabriel(r, config);
            }
        },
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
