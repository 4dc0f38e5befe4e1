//! Executable checks of the flip/mutation correspondence and its companions:
//! complement cycles, quiver axioms, enumeration counts, connectivity, cut
//! transport and the cardinality of maximal arc sets.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::annulus::{AnnulusAngulation, AnnulusConfig, AnnulusCut, ArcClass, Transported};
use crate::disk::{
    enumerate_angulations, flip_graph, fuss_catalan, DiskAngulation, DiskConfig, Guard, Piece,
};
use crate::{Angulation, Error};

/// Failures kept verbatim in a report; further failures are only counted.
const KEPT_FAILURES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            elapsed_ms: 0,
            pass: true,
        }
    }

    pub fn fail(&mut self, input: impl Display, expected: impl Display, actual: impl Display) {
        self.failed += 1;
        self.pass = false;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Counts one case, failing it unless `ok`.
    pub fn expect(
        &mut self,
        ok: bool,
        input: impl Display,
        expected: impl Display,
        actual: impl Display,
    ) {
        self.cases += 1;
        if !ok {
            self.fail(input, expected, actual);
        }
    }

    pub fn expect_eq<T: PartialEq + Debug>(&mut self, input: impl Display, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.fail(input, format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    /// Counts one case that failed with an error.
    pub fn error(&mut self, input: impl Display, err: &Error) {
        self.cases += 1;
        self.fail(input, "success", err);
    }

    pub fn absorb<T>(&mut self, input: impl Display, result: Result<T, Error>) -> Option<T> {
        result.map_err(|e| self.error(input, &e)).ok()
    }

    /// Adds another report's cases and failures to this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.failed += other.failed;
        self.pass &= other.pass;
        let room = KEPT_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn timed(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} cases, {} failed, {} ms)",
            self.suite, self.cases, self.failed, self.elapsed_ms
        )
    }
}

struct Case<'a, A: Angulation>(&'a A, &'a A::Arc);

impl<A: Angulation> Display for Case<'_, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.0, self.1)
    }
}

fn index_of<A: Angulation>(a: &A, arc: &A::Arc) -> Option<usize> {
    a.arcs().iter().position(|x| x == arc)
}

/// `quiver(flip(a, arc))` equals `mutate(quiver(a), k)` where the new arc
/// takes the index `k` of the flipped one.
pub fn check_flip_mutation<A: Angulation>(report: &mut VerificationReport, a: &A, arc: &A::Arc) {
    let case = Case(a, arc);
    let Some(k) = index_of(a, arc) else {
        return report.expect(false, case, "arc in angulation", "missing");
    };
    let run = || -> Result<_, Error> {
        let flipped = a.flip(arc)?;
        let new = *flipped
            .arcs()
            .iter()
            .find(|x| !a.arcs().contains(x))
            .unwrap_or(arc);
        let mut order = a.arcs().to_vec();
        order[k] = new;
        Ok((a.quiver().mutate(k)?, flipped.quiver_ordered(&order)?))
    };
    if let Some((expected, actual)) = report.absorb(&case, run()) {
        report.expect_eq(case, expected, actual);
    }
}

/// `completions` has m+1 members and m+1 flips at the same position return
/// the original angulation.
pub fn check_flip_cycle<A: Angulation>(report: &mut VerificationReport, a: &A, arc: &A::Arc) {
    let case = Case(a, arc);
    let m = a.m() as usize;
    if let Some(c) = report.absorb(&case, a.completions(arc)) {
        report.expect(c.len() == m + 1, &case, m + 1, c.len());
    }
    let run = || -> Result<A, Error> {
        let mut cur = a.clone();
        let mut at = *arc;
        for _ in 0..=m {
            let next = cur.flip(&at)?;
            at = *next
                .arcs()
                .iter()
                .find(|x| !cur.arcs().contains(x))
                .unwrap_or(&at);
            cur = next;
        }
        Ok(cur)
    };
    if let Some(end) = report.absorb(&case, run()) {
        report.expect(end == *a, &case, a, end);
    }
}

/// The quiver of `a` and its mutation at `arc` satisfy the axioms, the
/// closed and procedural mutations agree, and m+1 mutations are the identity.
pub fn check_quiver_axioms<A: Angulation>(report: &mut VerificationReport, a: &A, arc: &A::Arc) {
    let case = Case(a, arc);
    let Some(k) = index_of(a, arc) else {
        return report.expect(false, case, "arc in angulation", "missing");
    };
    let q = a.quiver();
    let violations = |q: &crate::quiver::ColoredQuiver| {
        q.validate()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    };
    report.expect_eq(&case, Vec::<String>::new(), violations(&q));
    let run = || -> Result<_, Error> {
        let mutated = q.mutate(k)?;
        let procedural = q.mutate_procedural(k)?;
        let mut cycled = mutated.clone();
        for _ in 0..a.m() {
            cycled = cycled.mutate(k)?;
        }
        Ok((mutated, procedural, cycled))
    };
    if let Some((mutated, procedural, cycled)) = report.absorb(&case, run()) {
        report.expect_eq(&case, Vec::<String>::new(), violations(&mutated));
        report.expect_eq(&case, &mutated, &procedural);
        report.expect_eq(&case, &q, &cycled);
    }
}

/// All three per-arc checks at every arc of `a`.
pub fn check_angulation<A: Angulation>(report: &mut VerificationReport, a: &A) {
    for arc in a.arcs() {
        check_flip_mutation(report, a, arc);
        check_flip_cycle(report, a, arc);
        check_quiver_axioms(report, a, arc);
    }
}

/// Every maximal noncrossing set has `r` diagonals, and the backtracking
/// count equals the Fuss-Catalan number and the flip-graph size.
pub fn check_counts(report: &mut VerificationReport, config: DiskConfig, guard: Guard) {
    let case = format!("disk(m={},S={})", config.m(), config.sides());
    let Some(e) = report.absorb(
        &case,
        enumerate_angulations(config, guard, false).map_err(Error::from),
    ) else {
        return;
    };
    let sizes: Vec<usize> = e.sizes.keys().copied().collect();
    report.expect_eq(&case, vec![config.rank()], sizes);
    let k = config.rank() as u32 + 1;
    report.expect_eq(&case, fuss_catalan(config.m(), k), u128::from(e.count));
    if let Some(g) = report.absorb(&case, flip_graph(config, guard).map_err(Error::from)) {
        report.expect_eq(&case, e.count, g.node_count() as u64);
    }
}

/// The flip graph is connected, reaches every angulation from the fan and
/// is regular.
pub fn check_connectivity(report: &mut VerificationReport, config: DiskConfig, guard: Guard) {
    let case = format!("disk(m={},S={})", config.m(), config.sides());
    let Some(g) = report.absorb(&case, flip_graph(config, guard).map_err(Error::from)) else {
        return;
    };
    report.expect(g.is_connected(), &case, "connected", "disconnected");
    if let Some(e) = report.absorb(
        &case,
        enumerate_angulations(config, guard, false).map_err(Error::from),
    ) {
        report.expect_eq(&case, e.count, g.node_count() as u64);
    }
    // r forward and r backward flips, which coincide when m = 1.
    let degree = if config.m() == 1 {
        config.rank()
    } else {
        2 * config.rank()
    };
    let degrees = g.degrees();
    report.expect(
        degrees.iter().all(|&d| d == degree),
        &case,
        format!("degree {degree}"),
        format!("{degrees:?}"),
    );
}

/// The color-0 part of the fan quiver is a path through all `r` vertices.
pub fn check_gabriel(report: &mut VerificationReport, config: DiskConfig) {
    let fan = config.initial_fan();
    let g = DiskAngulation::quiver(&fan).gabriel();
    report.expect(
        g.is_linear_path(),
        &fan,
        "linear path",
        format!("{:?}", g.arrows),
    );
}

/// Cutting along `d` transports the diagonals not crossing it bijectively
/// onto the pieces' diagonals, preserves crossings, and commutes with flips.
pub fn check_disk_cut(
    report: &mut VerificationReport,
    a: &DiskAngulation,
    d: crate::disk::Diagonal,
) {
    let case = format!("{a} cut {d}");
    let config = a.config();
    let Some(cut) = report.absorb(&case, config.cut_along(d).map_err(Error::from)) else {
        return;
    };
    let domain: Vec<_> = config
        .all_diagonals()
        .into_iter()
        .filter(|e| *e != d && !e.crosses(&d))
        .collect();
    let mut images = Vec::new();
    for &e in &domain {
        match cut.transport(e) {
            Some((p, local)) => {
                let valid = cut
                    .piece(p)
                    .is_m_diagonal(local.a(), local.b())
                    .unwrap_or(false);
                report.expect(
                    valid && cut.lift(p, local) == e,
                    &case,
                    e,
                    format!("{p:?} {local}"),
                );
                images.push((e, p, local));
            }
            None => report.expect(false, &case, e, "no transport"),
        }
    }
    let targets: usize = [Piece::Inside, Piece::Outside]
        .iter()
        .map(|&p| cut.piece(p).all_diagonals().len())
        .sum();
    report.expect_eq(&case, targets, images.len());
    for (i, &(e, p, x)) in images.iter().enumerate() {
        for &(f, q, y) in &images[i + 1..] {
            report.expect_eq(
                format!("{case}: {e} vs {f}"),
                e.crosses(&f),
                p == q && x.crosses(&y),
            );
        }
    }
    if !a.contains(d) {
        return;
    }
    let Some(parts) = report.absorb(&case, cut.split(a).map_err(Error::from)) else {
        return;
    };
    for &y in a.diagonals().iter().filter(|&&y| y != d) {
        let Some((p, local)) = cut.transport(y) else {
            continue;
        };
        let idx = match p {
            Piece::Inside => 0,
            Piece::Outside => 1,
        };
        let run = || -> Result<_, Error> {
            let after = cut.split(&DiskAngulation::flip(a, y)?)?;
            let mut expected = parts.clone();
            expected[idx] = DiskAngulation::flip(&parts[idx], local)?;
            Ok((expected, after))
        };
        if let Some((expected, after)) = report.absorb(format!("{case} flip {y}"), run()) {
            report.expect_eq(format!("{case} flip {y}"), expected, after);
        }
    }
}

fn crosses_after(cut: &AnnulusCut, x: &Transported, y: &Transported) -> bool {
    match (cut, x, y) {
        (AnnulusCut::Chord(c), Transported::Annulus(a), Transported::Annulus(b)) => {
            c.reduced().crosses(a, b)
        }
        (_, Transported::Disk(a), Transported::Disk(b)) => a.crosses(b),
        _ => false,
    }
}

/// Annulus counterpart of [`check_disk_cut`]. The transport domain is every
/// m-diagonal with `|winding| <= window` not crossing `x`; crossings are
/// compared on the arcs of `a` plus up to `sample` random domain arcs.
pub fn check_annulus_cut<R: Rng>(
    report: &mut VerificationReport,
    a: &AnnulusAngulation,
    x: ArcClass,
    window: i64,
    sample: usize,
    rng: &mut R,
) {
    let case = format!("{a} cut {x}");
    let config = a.config();
    let Some(cut) = report.absorb(&case, config.cut_along(x).map_err(Error::from)) else {
        return;
    };
    let transport = |e: &ArcClass| match &cut {
        AnnulusCut::Bridge(b) => b.transport(e).map(Transported::Disk),
        AnnulusCut::Chord(c) => c.transport(e),
    };
    let lift = |t: Transported| match (&cut, t) {
        (AnnulusCut::Bridge(b), Transported::Disk(d)) => Some(b.lift(d)),
        (AnnulusCut::Chord(c), t) => Some(c.lift(t)),
        _ => None,
    };
    let valid = |t: &Transported| match (&cut, t) {
        (AnnulusCut::Bridge(b), Transported::Disk(d)) => {
            b.disk().is_m_diagonal(d.a(), d.b()).unwrap_or(false)
        }
        (AnnulusCut::Chord(c), Transported::Disk(d)) => {
            c.disk().is_m_diagonal(d.a(), d.b()).unwrap_or(false)
        }
        (AnnulusCut::Chord(c), Transported::Annulus(y)) => {
            c.reduced().is_m_diagonal(y).unwrap_or(false)
        }
        _ => false,
    };

    let domain: Vec<ArcClass> = config
        .arcs_in_window(window)
        .into_iter()
        .filter(|e| *e != x && !config.crosses(e, &x))
        .collect();
    for e in &domain {
        match transport(e) {
            Some(t) => report.expect(valid(&t) && lift(t) == Some(*e), &case, e, format!("{t:?}")),
            None => report.expect(false, &case, e, "no transport"),
        }
    }
    // Onto: every arc of the pieces comes from the annulus.
    let mut targets: Vec<Transported> = Vec::new();
    match &cut {
        AnnulusCut::Bridge(b) => {
            targets.extend(b.disk().all_diagonals().into_iter().map(Transported::Disk))
        }
        AnnulusCut::Chord(c) => {
            targets.extend(c.disk().all_diagonals().into_iter().map(Transported::Disk));
            targets.extend(
                c.reduced()
                    .arcs_in_window(window)
                    .into_iter()
                    .map(Transported::Annulus),
            );
        }
    }
    for t in targets {
        let back = lift(t).and_then(|e| config.is_m_diagonal(&e).ok().filter(|v| *v).map(|_| e));
        report.expect(
            back.and_then(|e| transport(&e)) == Some(t),
            &case,
            format!("{t:?}"),
            format!("{back:?}"),
        );
    }

    let mut probe: Vec<ArcClass> = a.arcs().iter().copied().filter(|e| *e != x).collect();
    probe.extend(domain.choose_multiple(rng, sample).copied());
    let images: Vec<Option<Transported>> = probe.iter().map(transport).collect();
    for i in 0..probe.len() {
        for j in i + 1..probe.len() {
            if let (Some(s), Some(t)) = (&images[i], &images[j]) {
                report.expect_eq(
                    format!("{case}: {} vs {}", probe[i], probe[j]),
                    config.crosses(&probe[i], &probe[j]),
                    crosses_after(&cut, s, t),
                );
            }
        }
    }

    if !a.contains(&x) {
        return;
    }
    for y in a.arcs().iter().filter(|y| **y != x) {
        let label = format!("{case} flip {y}");
        let run = || -> Result<bool, Error> {
            let flipped = AnnulusAngulation::flip(a, y)?;
            Ok(match (&cut, transport(y)) {
                (AnnulusCut::Bridge(b), Some(Transported::Disk(t))) => {
                    b.split(&flipped)? == DiskAngulation::flip(&b.split(a)?, t)?
                }
                (AnnulusCut::Chord(c), Some(t)) => {
                    let (small, disk) = c.split(a)?;
                    let after = c.split(&flipped)?;
                    match t {
                        Transported::Annulus(t) => after == (small.flip(&t)?, disk),
                        Transported::Disk(t) => after == (small, disk.flip(t)?),
                    }
                }
                _ => false,
            })
        };
        if let Some(ok) = report.absorb(&label, run()) {
            report.expect(ok, &label, "commuting square", "mismatch");
        }
    }
}

/// A deterministic flip walk: `steps + 1` angulations starting at `start`,
/// each obtained from the previous by flipping a uniformly chosen arc and
/// normalizing.
pub fn random_walk<A: Angulation>(start: &A, steps: usize, seed: u64) -> Result<Vec<A>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(steps + 1);
    let mut cur = start.normalized();
    out.push(cur.clone());
    for _ in 0..steps {
        if cur.arcs().is_empty() {
            break;
        }
        let arc = cur.arcs()[rng.gen_range(0..cur.arcs().len())];
        cur = cur.flip(&arc)?.normalized();
        out.push(cur.clone());
    }
    Ok(out)
}

/// Greedily extends a random bridge with `|winding| < window` by the
/// m-diagonals with `|winding| <= window`, taken in random order.
pub fn random_maximal_extension<R: Rng>(
    config: AnnulusConfig,
    window: i64,
    rng: &mut R,
) -> Vec<ArcClass> {
    let mut pool = config.arcs_in_window(window);
    let seeds: Vec<ArcClass> = pool
        .iter()
        .copied()
        .filter(|a| matches!(a, ArcClass::Bridge { winding, .. } if winding.abs() < window))
        .collect();
    let mut chosen = vec![*seeds.choose(rng).expect("every annulus has bridges")];
    pool.shuffle(rng);
    for e in pool {
        if !chosen.contains(&e) && chosen.iter().all(|c| !config.crosses(c, &e)) {
            chosen.push(e);
        }
    }
    chosen.sort();
    chosen
}

pub fn check_maximal_extension<R: Rng>(
    report: &mut VerificationReport,
    config: AnnulusConfig,
    window: i64,
    rng: &mut R,
) {
    let arcs = random_maximal_extension(config, window, rng);
    let list = arcs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    report.expect_eq(&list, config.rank(), arcs.len());
    if let Err(e) = AnnulusAngulation::new(config, arcs) {
        report.fail(&list, "valid angulation", e);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Compat,
    Counts,
    Cut,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Suite::All),
            "compat" => Ok(Suite::Compat),
            "counts" => Ok(Suite::Counts),
            "cut" => Ok(Suite::Cut),
            other => Err(Error::Parse(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random-walk length per annulus configuration.
    pub steps: usize,
    pub guard: Guard,
    /// Random (angulation, arc) cuts per configuration.
    pub cut_trials: usize,
    /// Random maximal extensions per annulus configuration.
    pub extension_trials: usize,
    /// Bridge winding bound for arc pools.
    pub window: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            steps: 500,
            guard: Guard::from_env(),
            cut_trials: 200,
            extension_trials: 100,
            window: 3,
        }
    }
}

/// Disk configurations with `m` in 1..=3 and rank in 1..=5 allowed by `guard`.
pub fn disk_matrix(guard: Guard) -> Vec<DiskConfig> {
    (1..=3)
        .flat_map(|m| (1..=5).map(move |r| DiskConfig::with_rank(m, r).expect("positive m")))
        .filter(|c| guard.check(*c).is_ok())
        .collect()
}

pub fn annulus_matrix() -> Vec<AnnulusConfig> {
    [1, 2]
        .into_iter()
        .flat_map(|m| {
            [(1, 1), (2, 1), (2, 2), (4, 3)]
                .into_iter()
                .map(move |(p, q)| AnnulusConfig::new(m, p, q).expect("positive parameters"))
        })
        .collect()
}

fn disk_name(c: DiskConfig) -> String {
    format!("disk(m={},S={})", c.m(), c.sides())
}

fn annulus_name(c: AnnulusConfig) -> String {
    format!("annulus(m={},p={},q={})", c.m(), c.p(), c.q())
}

/// Flip/mutation, complement-cycle and axiom checks on every angulation of
/// a disk.
pub fn compat_disk(config: DiskConfig, guard: Guard) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("compat/{}", disk_name(config)));
    let all = enumerate_angulations(config, guard, true).map_err(Error::from);
    if let Some(e) = report.absorb(disk_name(config), all) {
        for a in e.angulations.unwrap_or_default() {
            check_angulation(&mut report, &a);
        }
    }
    report.timed(started)
}

/// The same checks along a random walk from the initial bridges.
pub fn compat_annulus(config: AnnulusConfig, steps: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("compat/{}", annulus_name(config)));
    if let Some(walk) = report.absorb(
        annulus_name(config),
        random_walk(&config.initial_bridges(), steps, seed),
    ) {
        for a in &walk {
            check_angulation(&mut report, a);
        }
    }
    report.timed(started)
}

pub fn counts_disk(config: DiskConfig, guard: Guard) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("counts/{}", disk_name(config)));
    check_counts(&mut report, config, guard);
    check_connectivity(&mut report, config, guard);
    check_gabriel(&mut report, config);
    report.timed(started)
}

pub fn extensions_annulus(config: AnnulusConfig, opts: &VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("counts/{}", annulus_name(config)));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.extension_trials {
        check_maximal_extension(&mut report, config, opts.window, &mut rng);
    }
    report.timed(started)
}

/// Cuts along random ears of random walk states.
pub fn cut_disk(config: DiskConfig, opts: &VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("cut/{}", disk_name(config)));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let walk = random_walk(&config.initial_fan(), opts.cut_trials, opts.seed);
    if let Some(walk) = report.absorb(disk_name(config), walk) {
        for a in walk.iter().skip(1).take(opts.cut_trials) {
            let ears: Vec<_> = a
                .diagonals()
                .iter()
                .copied()
                .filter(|d| config.is_m_ear(*d))
                .collect();
            match ears.choose(&mut rng) {
                Some(&ear) => check_disk_cut(&mut report, a, ear),
                None => report.expect(false, a, "an ear", "none"),
            }
        }
    }
    report.timed(started)
}

/// Cuts along random ears of random walk states; configurations whose
/// angulations never carry an ear fall back to bridge cuts.
pub fn cut_annulus(config: AnnulusConfig, opts: &VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("cut/{}", annulus_name(config)));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let steps = opts.cut_trials * 10;
    let Some(walk) = report.absorb(
        annulus_name(config),
        random_walk(&config.initial_bridges(), steps, opts.seed),
    ) else {
        return report.timed(started);
    };
    let with_ears: Vec<&AnnulusAngulation> =
        walk.iter().filter(|a| a.ears().next().is_some()).collect();
    let mut fallback = 0;
    for i in 0..opts.cut_trials {
        let (a, x) = if with_ears.is_empty() {
            fallback += 1;
            let a = &walk[i % walk.len()];
            let bridges: Vec<_> = a.bridges().copied().collect();
            (
                a,
                *bridges
                    .choose(&mut rng)
                    .expect("angulations contain bridges"),
            )
        } else {
            let a = with_ears[i * with_ears.len() / opts.cut_trials];
            let ears: Vec<_> = a.ears().copied().collect();
            (a, *ears.choose(&mut rng).expect("nonempty"))
        };
        check_annulus_cut(&mut report, a, x, opts.window, 12, &mut rng);
    }
    if fallback > 0 {
        report
            .suite
            .push_str(&format!(" [bridge cuts: {fallback}]"));
    }
    report.timed(started)
}

/// Runs a suite over the built-in configuration matrix.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let disks = disk_matrix(opts.guard);
    let annuli = annulus_matrix();
    if matches!(suite, Suite::All | Suite::Counts) {
        out.extend(disks.iter().map(|&c| counts_disk(c, opts.guard)));
        out.extend(annuli.iter().map(|&c| extensions_annulus(c, opts)));
    }
    if matches!(suite, Suite::All | Suite::Compat) {
        out.extend(disks.iter().map(|&c| compat_disk(c, opts.guard)));
        out.extend(
            annuli
                .iter()
                .map(|&c| compat_annulus(c, opts.steps, opts.seed)),
        );
    }
    if matches!(suite, Suite::All | Suite::Cut) {
        out.extend(disks.iter().map(|&c| cut_disk(c, opts)));
        out.extend(annuli.iter().map(|&c| cut_annulus(c, opts)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::Diagonal;

    #[test]
    fn single_case_checks_pass_on_examples() {
        let mut r = VerificationReport::new("examples");
        let pent = DiskConfig::new(1, 5).unwrap().initial_fan();
        check_flip_mutation(&mut r, &pent, &Diagonal::new(1, 3));
        let oct = DiskConfig::new(2, 8).unwrap().initial_fan();
        check_flip_mutation(&mut r, &oct, &Diagonal::new(1, 4));
        let k = AnnulusConfig::new(1, 1, 1).unwrap().initial_bridges();
        check_flip_mutation(&mut r, &k, &ArcClass::bridge(1, 1, 0));
        check_flip_cycle(&mut r, &pent, &Diagonal::new(1, 3));
        check_flip_cycle(&mut r, &k, &ArcClass::bridge(1, 1, 0));
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.cases >= 5);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = VerificationReport::new("x");
        r.expect_eq("in", 1, 2);
        r.expect_eq("in", 3, 3);
        assert!(!r.pass);
        assert_eq!((r.cases, r.failed), (2, 1));
        assert_eq!(r.failures[0].expected, "1");
    }

    #[test]
    fn walks_are_reproducible() {
        let c = AnnulusConfig::new(2, 4, 3).unwrap();
        let a = random_walk(&c.initial_bridges(), 30, 9).unwrap();
        assert_eq!(a, random_walk(&c.initial_bridges(), 30, 9).unwrap());
        assert_eq!(a.len(), 31);
        let zero = random_walk(&c.initial_bridges(), 0, 9).unwrap();
        assert_eq!(zero, vec![c.initial_bridges()]);
    }

    #[test]
    fn counts_and_connectivity() {
        for (m, s) in [(1, 5), (2, 8), (3, 11)] {
            let r = counts_disk(DiskConfig::new(m, s).unwrap(), Guard::new(12));
            assert!(r.pass, "{:?}", r.failures);
        }
    }

    #[test]
    fn cut_checks_pass_on_small_configs() {
        let opts = VerifyOptions {
            cut_trials: 10,
            ..VerifyOptions::default()
        };
        assert!(cut_disk(DiskConfig::new(2, 10).unwrap(), &opts).pass);
        for (m, p, q) in [(1, 1, 1), (1, 2, 2), (2, 4, 3)] {
            let r = cut_annulus(AnnulusConfig::new(m, p, q).unwrap(), &opts);
            assert!(r.pass, "{}: {:?}", r.suite, r.failures);
        }
    }

    #[test]
    fn maximal_extensions_have_rank_many_arcs() {
        let opts = VerifyOptions {
            extension_trials: 20,
            ..VerifyOptions::default()
        };
        for c in annulus_matrix() {
            let r = extensions_annulus(c, &opts);
            assert!(r.pass, "{}: {:?}", r.suite, r.failures);
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("cut".parse::<Suite>().unwrap(), Suite::Cut);
        assert!("nope".parse::<Suite>().is_err());
    }
}
