//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! All quantities are exact, so every comparison tolerance is zero. Wall
//! clock limits are pinned per criterion where one is required.
//!
//! Oracles here are written against the raw definitions (fractions in
//! `i128`, direct scans over degrees and Bezout complements) and do not call
//! the library routine under test.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rayon::prelude::*;

use seifert_core::lens::lens_from_gluing;
use seifert_core::{
    allowable_degrees, classify_lens, decide_hvf, enumerate_lens_fiberings, homotopy_components,
    lens_from_invariant, lens_of_fibering, parse_invariant, parse_orbifold, print_invariant,
    print_orbifold, DegreeSet, FiberPair, LensCase, MarkedLens, Orbifold, Rational,
    SeifertInvariant,
};

/// Exact comparisons only.
const TOLERANCE: i64 = 0;
const CRITERION_1_LIMIT: Duration = Duration::from_secs(10);
const CRITERION_7_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_CASES: u32 = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn check(failures: &[String], detail: String) -> Self {
        if failures.is_empty() {
            Outcome { pass: true, detail }
        } else {
            Outcome {
                pass: false,
                detail: format!("{detail}; {} failure(s), first: {}", failures.len(), failures[0]),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle arithmetic.

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Q {
    n: i128,
    d: i128,
}

impl Q {
    fn new(n: i128, d: i128) -> Q {
        assert!(d != 0);
        let g = gcd128(n, d).max(1);
        let s = d.signum();
        Q { n: s * n / g, d: s * d / g }
    }

    fn int(n: i128) -> Q {
        Q { n, d: 1 }
    }

    fn add(self, o: Q) -> Q {
        Q::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }

    fn sub(self, o: Q) -> Q {
        self.add(Q { n: -o.n, d: o.d })
    }

    fn is(&self, r: Rational) -> bool {
        self.n == r.numer() as i128 && self.d == r.denom() as i128
    }
}

fn chi_oracle(genus_code: i64, cones: &[i64]) -> Q {
    let g = genus_code.unsigned_abs() as i128;
    let surface = if genus_code >= 0 { 2 - 2 * g } else { 2 - g };
    cones
        .iter()
        .filter(|&&a| a > 1)
        .fold(Q::int(surface), |acc, &a| acc.sub(Q::new(a as i128 - 1, a as i128)))
}

fn euler_oracle(pairs: &[FiberPair]) -> Q {
    pairs
        .iter()
        .fold(Q::int(0), |acc, p| acc.sub(Q::new(p.beta as i128, p.alpha as i128)))
}

fn lcm_of(pairs: &[FiberPair]) -> i128 {
    pairs.iter().fold(1i128, |l, p| l / gcd128(l, p.alpha as i128) * p.alpha as i128)
}

/// The raw congruence conditions `d * beta_i = -1 (mod alpha_i)`.
fn congruences_hold(pairs: &[FiberPair], d: i128) -> bool {
    pairs
        .iter()
        .all(|p| (d * p.beta as i128 + 1).rem_euclid(p.alpha as i128) == 0)
}

/// Allowable degrees from the raw conditions: non-zero `d` with
/// `d * e = chi` and all congruences. With `e != 0` the Euler condition is
/// linear in `d`, so at most one integer satisfies it and that candidate is
/// checked directly. With `e = 0` the window `[-3 lcm, 3 lcm]` is scanned.
enum RawDegrees {
    Pinned(Option<i128>),
    Scanned { window: i128, members: Vec<i128> },
}

fn raw_degrees(inv: &SeifertInvariant) -> RawDegrees {
    let pairs = inv.pairs();
    let e = euler_oracle(pairs);
    let chi = chi_oracle(inv.genus_code(), &pairs.iter().map(|p| p.alpha).collect::<Vec<_>>());
    let l = lcm_of(pairs);
    if e.n == 0 {
        let window = 3 * l;
        let members = if chi.n != 0 {
            Vec::new()
        } else {
            (-window..=window)
                .filter(|&d| d != 0 && congruences_hold(pairs, d))
                .collect()
        };
        return RawDegrees::Scanned { window, members };
    }
    // d * e = chi  <=>  d = chi / e.
    let ratio = Q::new(chi.n * e.d, chi.d * e.n);
    let candidate = (ratio.d == 1 && ratio.n != 0 && congruences_hold(pairs, ratio.n)).then_some(ratio.n);
    RawDegrees::Pinned(candidate)
}

/// Whether the library degree set equals the raw set on the oracle window.
fn degrees_agree(set: &DegreeSet, raw: &RawDegrees) -> bool {
    match raw {
        RawDegrees::Pinned(candidate) => match (set, candidate) {
            (DegreeSet::Single(d), Some(c)) => *d as i128 == *c,
            (DegreeSet::Empty, None) => true,
            _ => false,
        },
        RawDegrees::Scanned { window, members } => {
            if members.is_empty() {
                return set.is_empty();
            }
            let members: HashSet<i128> = members.iter().copied().collect();
            (-*window..=*window).all(|d| set.contains(d as i64) == members.contains(&d))
        }
    }
}

// ---------------------------------------------------------------------------
// Grids.

fn coprime_pairs(max_alpha: i64, max_beta: i64) -> Vec<FiberPair> {
    (1..=max_alpha)
        .flat_map(|a| (-max_beta..=max_beta).map(move |b| FiberPair::new(a, b)))
        .filter(|p| gcd128(p.alpha as i128, p.beta as i128) == 1)
        .collect()
}

/// Calls `f` on every multiset of `items` of size `0..=max_len` whose
/// smallest index is at least `start`.
fn for_each_multiset<T: Copy>(items: &[T], max_len: usize, start: usize, buf: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
    f(buf);
    if buf.len() == max_len {
        return;
    }
    for i in start..items.len() {
        buf.push(items[i]);
        for_each_multiset(items, max_len, i, buf, f);
        buf.pop();
    }
}

/// Multisets of cone orders in `2..=max_order` of size at most `max_len`.
fn cone_multisets(max_order: i64, max_len: usize) -> Vec<Vec<i64>> {
    let orders: Vec<i64> = (2..=max_order).collect();
    let mut out = Vec::new();
    for_each_multiset(&orders, max_len, 0, &mut Vec::new(), &mut |m| out.push(m.to_vec()));
    out
}

// ---------------------------------------------------------------------------
// Criteria.

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cones = cone_multisets(15, 5);
    let surfaces: Vec<i64> = vec![0, 1, 2, 3, -1, -2, -3];
    let mut failures = Vec::new();
    let mut count = 0usize;
    for &g in &surfaces {
        for m in &cones {
            count += 1;
            let orb = Orbifold::from_genus_code(g, m, 0).unwrap();
            let ut = orb.unit_tangent_invariant().unwrap();
            let e = ut.euler_number().unwrap();
            let chi = orb.chi();
            let oracle = chi_oracle(g, m);
            if e != chi || !oracle.is(chi) || !euler_oracle(ut.pairs()).is(e) {
                failures.push(format!("genus {g} cones {m:?}: e = {e}, chi = {chi}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > CRITERION_1_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {CRITERION_1_LIMIT:?}"));
    }
    Outcome::check(
        &failures,
        format!("{count} orbifolds, e(UT) = chi exactly (tolerance {TOLERANCE}), limit {CRITERION_1_LIMIT:?}"),
    )
}

#[derive(Default)]
struct GridStats {
    invariants: usize,
    with_degrees: usize,
    quotients_checked: usize,
    scanned: usize,
    quotient_failures: Vec<String>,
    oracle_failures: Vec<String>,
}

impl GridStats {
    fn merge(mut self, o: GridStats) -> GridStats {
        self.invariants += o.invariants;
        self.with_degrees += o.with_degrees;
        self.quotients_checked += o.quotients_checked;
        self.scanned += o.scanned;
        self.quotient_failures.extend(o.quotient_failures.into_iter().take(5));
        self.oracle_failures.extend(o.oracle_failures.into_iter().take(5));
        self
    }
}

/// Small representatives of a degree set: the set itself when pinned, else
/// the members of smallest absolute value on each side of zero.
fn small_degrees(set: &DegreeSet) -> Vec<i64> {
    match *set {
        DegreeSet::Single(d) => vec![d],
        DegreeSet::Progression { residue, modulus, .. } => {
            if residue == 0 {
                vec![modulus, -modulus]
            } else {
                vec![residue, residue - modulus]
            }
        }
        _ => Vec::new(),
    }
}

fn check_invariant(inv: &SeifertInvariant, stats: &mut GridStats) {
    stats.invariants += 1;
    let set = allowable_degrees(inv).unwrap();
    let raw = raw_degrees(inv);
    if matches!(raw, RawDegrees::Scanned { .. }) {
        stats.scanned += 1;
    }
    if !degrees_agree(&set, &raw) && stats.oracle_failures.len() < 5 {
        stats.oracle_failures.push(format!("{inv}: library {set}"));
    }
    if set.is_empty() {
        return;
    }
    stats.with_degrees += 1;
    let target = inv.base_orbifold().unit_tangent_invariant().unwrap().normalize();
    for d in small_degrees(&set) {
        stats.quotients_checked += 1;
        let ok = inv
            .fiberwise_quotient(d)
            .map(|q| q.normalize() == target)
            .unwrap_or(false);
        if !ok && stats.quotient_failures.len() < 5 {
            stats.quotient_failures.push(format!("{inv} with d = {d}"));
        }
    }
}

fn invariant_grid() -> GridStats {
    let pairs = coprime_pairs(8, 8);
    assert_eq!(pairs.len(), 87);
    let mut tasks: Vec<(i64, Option<usize>)> = Vec::new();
    for g in -2..=2 {
        tasks.push((g, None));
        tasks.extend((0..pairs.len()).map(|i| (g, Some(i))));
    }
    tasks
        .into_par_iter()
        .map(|(g, first)| {
            let mut stats = GridStats::default();
            match first {
                None => check_invariant(&SeifertInvariant::new(g, 0, vec![]).unwrap(), &mut stats),
                Some(i) => {
                    let mut buf = vec![pairs[i]];
                    // Multisets whose smallest element is pairs[i].
                    let mut f = |m: &[FiberPair]| {
                        let inv = SeifertInvariant::new(g, 0, m.to_vec()).unwrap();
                        check_invariant(&inv, &mut stats);
                    };
                    for_each_multiset(&pairs, 4, i, &mut buf, &mut f);
                }
            }
            stats
        })
        .reduce(GridStats::default, GridStats::merge)
}

fn criteria_2_and_3() -> (Outcome, Outcome) {
    let stats = invariant_grid();
    let c2 = Outcome::check(
        &stats.quotient_failures,
        format!(
            "{} invariants, {} with allowable degrees, {} quotients equal to UT(base) (tolerance {TOLERANCE})",
            stats.invariants, stats.with_degrees, stats.quotients_checked
        ),
    );
    let c3 = Outcome::check(
        &stats.oracle_failures,
        format!(
            "{} invariants agree with the raw-condition oracle ({} full window scans with e = 0)",
            stats.invariants, stats.scanned
        ),
    );
    (c2, c3)
}

fn elliptic_bases() -> Vec<(i64, Vec<i64>)> {
    let mut bases = vec![(0, vec![]), (-1, vec![])];
    for p in 2..=11 {
        bases.push((0, vec![p, p]));
        bases.push((0, vec![2, 2, p]));
        bases.push((-1, vec![p]));
    }
    for q in 3..=5 {
        bases.push((0, vec![2, 3, q]));
    }
    bases
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0usize;
    let mut family_found = BTreeSet::new();
    let family = |alpha: i64| {
        SeifertInvariant::closed(0, &[(alpha, (alpha - 1) / 2), (alpha, -(alpha + 1) / 2)]).unwrap()
    };
    for (g, cones) in elliptic_bases() {
        let mut alphas = cones.clone();
        while alphas.len() < 2 {
            alphas.push(1);
        }
        let choices: Vec<Vec<i64>> = alphas
            .iter()
            .map(|&a| (-20..=20).filter(|&b| gcd128(a as i128, b as i128) == 1).collect())
            .collect();
        let mut idx = vec![0usize; alphas.len()];
        'outer: loop {
            let pairs: Vec<FiberPair> = alphas
                .iter()
                .zip(&idx)
                .zip(&choices)
                .map(|((&a, &i), c)| FiberPair::new(a, c[i]))
                .collect();
            let inv = SeifertInvariant::new(g, 0, pairs).unwrap();
            assert_eq!(
                inv.base_orbifold().geometry_class().unwrap(),
                seifert_core::GeometryClass::Elliptic
            );
            count += 1;
            let set = allowable_degrees(&inv).unwrap();
            if !degrees_agree(&set, &raw_degrees(&inv)) {
                failures.push(format!("{inv}: oracle disagrees with {set}"));
            }
            if let DegreeSet::Single(d) = set {
                if d > 2 {
                    failures.push(format!("{inv}: positive degree {d}"));
                }
                let in_family = g == 0
                    && alphas[0] == alphas[1]
                    && alphas[0] % 2 == 1
                    && alphas[0] <= 11
                    && inv.same_fibering(&family(alphas[0])).unwrap();
                if (d == 2) != in_family {
                    failures.push(format!("{inv}: degree {d}, in family {in_family}"));
                }
                if d == 2 {
                    family_found.insert(alphas[0]);
                }
            } else if !set.is_empty() {
                failures.push(format!("{inv}: unexpected degree set {set}"));
            }
            // Odometer over the beta choices.
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    let expected: BTreeSet<i64> = (1..=11).step_by(2).collect();
    if family_found != expected {
        failures.push(format!("degree-2 family found for alpha {family_found:?}, expected {expected:?}"));
    }
    let belt = SeifertInvariant::closed(0, &[(1, 0), (1, -1)]).unwrap();
    let ut_s2 = Orbifold::sphere(&[]).unwrap().unit_tangent_invariant().unwrap();
    if allowable_degrees(&belt).unwrap() != DegreeSet::Single(2)
        || !belt.fiberwise_quotient(2).unwrap().same_fibering(&ut_s2).unwrap()
    {
        failures.push("S^3 does not double cover UT(S^2)".into());
    }
    Outcome::check(
        &failures,
        format!("{count} elliptic-base invariants, positive degrees in {{1, 2}}, d = 2 exactly for alpha in {family_found:?}"),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let expect = |failures: &mut Vec<String>, label: &str, got: DegreeSet, want: DegreeSet| {
        if got != want {
            failures.push(format!("{label}: got {got}, want {want}"));
        }
    };
    let ut = |s: &str| parse_orbifold(s).unwrap().unit_tangent_invariant().unwrap();
    let prog12 = DegreeSet::Progression { residue: 1, modulus: 2, include_zero: false };

    let ut235 = ut("2 3 5");
    expect(&mut failures, "UT(235)", allowable_degrees(&ut235).unwrap(), DegreeSet::Single(1));

    let m = parse_invariant("M(0; (1,-1), (5,2), (5,2), (5,2))").unwrap();
    expect(&mut failures, "555 double cover", allowable_degrees(&m).unwrap(), DegreeSet::Single(2));
    let target = decide_hvf(&m).unwrap().covering().map(|(_, t)| t.clone());
    if target.map(|t| t.same_fibering(&ut("5 5 5")).unwrap()) != Some(true) {
        failures.push("555 double cover does not target UT(555)".into());
    }

    let ut237 = ut("2 3 7");
    expect(&mut failures, "UT(237)", allowable_degrees(&ut237).unwrap(), DegreeSet::Single(1));
    expect(
        &mut failures,
        "-UT(237)",
        allowable_degrees(&ut237.reverse_orientation().unwrap()).unwrap(),
        DegreeSet::Single(-1),
    );
    expect(&mut failures, "UT(2222)", allowable_degrees(&ut("2 2 2 2")).unwrap(), prog12);
    expect(&mut failures, "UT(22x)", allowable_degrees(&ut("2 2 x")).unwrap(), prog12);

    let bounded = parse_invariant("M(0, 1; (3,1), (3,2))").unwrap();
    expect(&mut failures, "(0,1; (3,1), (3,2))", allowable_degrees(&bounded).unwrap(), DegreeSet::Empty);
    if seifert_core::decide_hvf_boundary(&bounded).unwrap().exists {
        failures.push("bounded (3,1), (3,2) reported an hvf".into());
    }
    Outcome::check(&failures, "7 named instances".into())
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let bases: Vec<(&str, i64, Vec<i64>)> = vec![
        ("T2", 1, vec![]),
        ("K", -2, vec![]),
        ("236", 0, vec![2, 3, 6]),
        ("244", 0, vec![2, 4, 4]),
        ("333", 0, vec![3, 3, 3]),
        ("2222", 0, vec![2, 2, 2, 2]),
        ("22x", -1, vec![2, 2]),
    ];
    let mut distinct = HashSet::new();
    let mut chiral = BTreeSet::new();
    for (name, g, cones) in &bases {
        let alphas: Vec<i64> = if cones.is_empty() { vec![1] } else { cones.clone() };
        let choices: Vec<Vec<i64>> = alphas
            .iter()
            .map(|&a| (-12..=12).filter(|&b| gcd128(a as i128, b as i128) == 1).collect())
            .collect();
        let ut = Orbifold::from_genus_code(*g, cones, 0).unwrap().unit_tangent_invariant().unwrap();
        let minus_ut = ut.reverse_orientation().unwrap();
        if !ut.same_fibering(&minus_ut).unwrap() {
            chiral.insert(name.to_string());
        }
        let mut idx = vec![0usize; alphas.len()];
        'outer: loop {
            let pairs: Vec<FiberPair> = alphas
                .iter()
                .zip(&idx)
                .zip(&choices)
                .map(|((&a, &i), c)| FiberPair::new(a, c[i]))
                .collect();
            if euler_oracle(&pairs).n == 0 {
                let inv = SeifertInvariant::new(*g, 0, pairs).unwrap();
                if !(inv.same_fibering(&ut).unwrap() || inv.same_fibering(&minus_ut).unwrap()) {
                    failures.push(format!("{inv} is not +-UT({name})"));
                }
                distinct.insert(inv.normalize());
            }
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    if distinct.len() != 10 {
        failures.push(format!("found {} distinct fiberings, expected 10", distinct.len()));
    }
    let expected: BTreeSet<String> = ["236", "244", "333"].iter().map(|s| s.to_string()).collect();
    if chiral != expected {
        failures.push(format!("UT != -UT for {chiral:?}"));
    }
    Outcome::check(
        &failures,
        format!("{} distinct e = 0 fiberings over parabolic bases, UT != -UT for {chiral:?}", distinct.len()),
    )
}

/// Every marked lens space homeomorphic to `L(p, q)`.
fn brody_class(p: i64, q: i64) -> Vec<MarkedLens> {
    let target = MarkedLens::new(p, q).unwrap();
    let mut out = Vec::new();
    for sign in [1, -1] {
        let pp = sign * p;
        for qq in 0..p.max(2) {
            if let Ok(l) = MarkedLens::new(pp, qq) {
                if l.homeomorphic(&target) && !out.contains(&l) {
                    out.push(l);
                }
            }
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for p in 0..=12i64 {
        for q in 0..p.max(2) {
            if gcd128(p as i128, q as i128) != 1 || (p == 0 && q != 1) {
                continue;
            }
            let case = classify_lens(p, q).unwrap();
            let target = MarkedLens::new(p, q).unwrap();
            let mut seen = HashSet::new();
            let mut fiberings = Vec::new();
            for marked in brody_class(p, q) {
                for inv in enumerate_lens_fiberings(marked, 12).unwrap() {
                    if seen.insert(inv.normalize()) {
                        fiberings.push(inv);
                    }
                }
            }
            for alpha in 1..=12 {
                for beta in [-1, 1] {
                    let inv = SeifertInvariant::closed(-1, &[(alpha, beta)]).unwrap();
                    if lens_of_fibering(&inv).unwrap().homeomorphic(&target) && seen.insert(inv.normalize()) {
                        fiberings.push(inv);
                    }
                }
            }
            let with: Vec<&SeifertInvariant> =
                fiberings.iter().filter(|i| decide_hvf(i).unwrap().exists).collect();
            let without = fiberings.len() - with.len();
            let ok = match &case {
                LensCase::AllHave => without == 0 && !with.is_empty(),
                LensCase::NoneHave => with.is_empty() && !fiberings.is_empty(),
                LensCase::MixedInfinite => !with.is_empty() && without > 0,
                LensCase::ExactlyOne { witness } => {
                    let minus = witness.reverse_orientation().unwrap();
                    let expected = SeifertInvariant::closed(-1, &[(p / 4, -1)]).unwrap();
                    (witness.same_fibering(&expected).unwrap() || minus.same_fibering(&expected).unwrap())
                        && with.iter().any(|i| i.same_fibering(witness).unwrap())
                        && with
                            .iter()
                            .all(|i| i.same_fibering(witness).unwrap() || i.same_fibering(&minus).unwrap())
                }
            };
            if !ok {
                failures.push(format!(
                    "L({p}, {q}) classified {}: {} fiberings with hvf, {without} without",
                    case.name(),
                    with.len()
                ));
            }
            if matches!(case, LensCase::ExactlyOne { .. }) {
                summary.push(format!("L({p},{q})"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > CRITERION_7_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {CRITERION_7_LIMIT:?}"));
    }
    Outcome::check(
        &failures,
        format!("all L(p, q) with 0 <= p <= 12 match the brute-force evidence; ExactlyOne for {}; limit {CRITERION_7_LIMIT:?}", summary.join(" ")),
    )
}

/// All `(alpha', beta')` with `alpha * beta' - alpha' * beta = 1` and
/// `|alpha'| <= 5 alpha`, by direct scan.
fn bezout_representatives(p: FiberPair) -> Vec<(i64, i64)> {
    (-5 * p.alpha..=5 * p.alpha)
        .filter_map(|a_prime| {
            let num = 1 + a_prime * p.beta;
            (num % p.alpha == 0).then(|| (a_prime, num / p.alpha))
        })
        .collect()
}

fn criterion_8() -> Outcome {
    let pairs = coprime_pairs(8, 8);
    let mut failures = Vec::new();
    let mut gluings = 0usize;
    let mut invariants = 0usize;
    for &f1 in &pairs {
        let reps1 = bezout_representatives(f1);
        for &f2 in &pairs {
            invariants += 1;
            let inv = SeifertInvariant::new(0, 0, vec![f1, f2]).unwrap();
            let lens = lens_from_invariant(&inv).unwrap();
            let p = (f1.alpha * f2.beta + f2.alpha * f1.beta) as i128;
            if p != lens.p() as i128 {
                failures.push(format!("{inv}: p = {p}, library {lens}"));
            }
            let reps2 = bezout_representatives(f2);
            // q = alpha_1' beta_2 + alpha_2 beta_1', reduced mod |p|.
            let qs: BTreeSet<i128> = reps1
                .iter()
                .map(|&(a1p, b1p)| {
                    let q = a1p as i128 * f2.beta as i128 + f2.alpha as i128 * b1p as i128;
                    if p == 0 { q } else { q.rem_euclid(p.abs()) }
                })
                .collect();
            if qs.len() != 1 {
                failures.push(format!("{inv}: q not stable across complements: {qs:?}"));
                continue;
            }
            let q = *qs.iter().next().unwrap();
            let oracle = MarkedLens::new(p as i64, q as i64).unwrap();
            if p == 0 && q != 1 {
                failures.push(format!("{inv}: p = 0 but q = {q}"));
            }
            // The library may list the two fibers in the other order, which
            // inverts q; that is the same marked lens space.
            if !lens.marked_eq(&oracle) {
                failures.push(format!("{inv}: oracle {oracle}, library {lens}"));
            }
            for &c1 in &reps1 {
                for &c2 in &reps2 {
                    gluings += 1;
                    if lens_from_gluing([f1, f2], [c1, c2]).unwrap() != oracle {
                        failures.push(format!("{inv}: gluing with {c1:?}, {c2:?} differs from {oracle}"));
                    }
                }
            }
            if decide_hvf(&inv).unwrap().exists != lens.has_hvf_fibering() {
                failures.push(format!("{inv}: decide_hvf disagrees with {lens}"));
            }
        }
    }
    Outcome::check(
        &failures,
        format!("{invariants} ordered two-fiber invariants, {gluings} gluings; q stable mod p and hvf iff q = -1 mod p"),
    )
}

fn arb_pair() -> impl Strategy<Value = FiberPair> {
    (1i64..=12, -30i64..=30)
        .prop_filter("coprime", |(a, b)| gcd128(*a as i128, *b as i128) == 1)
        .prop_map(|(a, b)| FiberPair::new(a, b))
}

fn arb_closed() -> impl Strategy<Value = SeifertInvariant> {
    (-3i64..=3, prop::collection::vec(arb_pair(), 0..=5))
        .prop_map(|(g, pairs)| SeifertInvariant::new(g, 0, pairs).unwrap())
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: PROPERTY_CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>, failures: &mut Vec<String>) {
    if let Err(e) = runner().run(&strategy, test) {
        failures.push(format!("{name}: {e}"));
    }
}

fn shifted(inv: &SeifertInvariant, moves: &[(u8, usize, usize, i64)]) -> SeifertInvariant {
    let mut pairs = inv.pairs().to_vec();
    for &(kind, i, j, k) in moves {
        match kind % 3 {
            0 if !pairs.is_empty() => {
                let n = pairs.len();
                pairs.swap(i % n, j % n);
            }
            1 => pairs.insert(i % (pairs.len() + 1), FiberPair::new(1, 0)),
            2 if pairs.len() >= 2 => {
                let n = pairs.len();
                let (i, j) = (i % n, j % n);
                if i != j {
                    pairs[i].beta += k * pairs[i].alpha;
                    pairs[j].beta -= k * pairs[j].alpha;
                }
            }
            _ => {}
        }
    }
    SeifertInvariant::new(inv.genus_code(), 0, pairs).unwrap()
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    property(
        "euler invariance under moves",
        (arb_closed(), prop::collection::vec((0u8..3, 0usize..8, 0usize..8, -3i64..=3), 1..10)),
        |(inv, moves)| {
            let moved = shifted(&inv, &moves);
            prop_assert_eq!(moved.euler_number().unwrap(), inv.euler_number().unwrap());
            prop_assert!(euler_oracle(moved.pairs()).is(inv.euler_number().unwrap()));
            prop_assert!(moved.same_fibering(&inv).unwrap());
            Ok(())
        },
        &mut failures,
    );
    property(
        "normalize idempotence",
        arb_closed(),
        |inv| {
            let c = inv.normalize();
            prop_assert_eq!(c.to_invariant().normalize(), c);
            Ok(())
        },
        &mut failures,
    );
    property(
        "quotient composition",
        (arb_closed(), 0usize..64, 0usize..64),
        |(inv, i1, i2)| {
            let allowed: Vec<i64> = (-9i64..=9)
                .filter(|&d| d != 0 && inv.pairs().iter().all(|p| gcd128(d as i128, p.alpha as i128) == 1))
                .collect();
            let (d1, d2) = (allowed[i1 % allowed.len()], allowed[i2 % allowed.len()]);
            let two = inv.fiberwise_quotient(d1).unwrap().fiberwise_quotient(d2).unwrap();
            prop_assert!(two.same_fibering(&inv.fiberwise_quotient(d1 * d2).unwrap()).unwrap());
            Ok(())
        },
        &mut failures,
    );
    property(
        "reverse_orientation involution and degree antisymmetry",
        arb_closed(),
        |inv| {
            let rev = inv.reverse_orientation().unwrap();
            prop_assert!(rev.reverse_orientation().unwrap().same_fibering(&inv).unwrap());
            let d = allowable_degrees(&inv).unwrap();
            let dr = allowable_degrees(&rev).unwrap();
            let window = 3 * lcm_of(inv.pairs()) as i64 * 8;
            for k in -window..=window {
                prop_assert_eq!(d.contains(k), dr.contains(-k), "d = {}", k);
            }
            if let DegreeSet::Single(x) = d {
                prop_assert_eq!(dr, DegreeSet::Single(-x));
            }
            Ok(())
        },
        &mut failures,
    );
    property(
        "orbifold round trip",
        (any::<bool>(), 0u32..5, prop::collection::vec(1i64..40, 0..6), 0u32..3),
        |(orientable, g, cones, n)| {
            let g = if orientable { g } else { g + 1 };
            let orb = Orbifold::new(orientable, g, &cones, n).unwrap();
            prop_assert_eq!(parse_orbifold(&print_orbifold(&orb)).unwrap(), orb);
            Ok(())
        },
        &mut failures,
    );
    property(
        "invariant round trip",
        (-4i64..=4, 0u32..3, prop::collection::vec(arb_pair(), 0..6)),
        |(g, n, pairs)| {
            let inv = SeifertInvariant::new(g, n, pairs).unwrap();
            let back = parse_invariant(&print_invariant(&inv)).unwrap();
            prop_assert_eq!(back.normalize(), inv.normalize());
            Ok(())
        },
        &mut failures,
    );

    // Relation nesting, exhaustive for |p| <= 12.
    let mut lenses = Vec::new();
    for p in -12i64..=12 {
        for q in 0..p.abs().max(2) {
            if let Ok(l) = MarkedLens::new(p, q) {
                if !lenses.contains(&l) {
                    lenses.push(l);
                }
            }
        }
    }
    let mut pairs_checked = 0usize;
    for a in &lenses {
        for b in &lenses {
            pairs_checked += 1;
            let (m, o, h) = (a.marked_eq(b), a.oriented_diffeomorphic(b), a.homeomorphic(b));
            if (m && !o) || (o && !h) {
                failures.push(format!("{a} vs {b}: marked {m}, oriented {o}, homeo {h}"));
            }
        }
    }
    Outcome::check(
        &failures,
        format!("6 property suites x {PROPERTY_CASES} cases; relation nesting on {pairs_checked} lens pairs"),
    )
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();
    let ut235 = parse_orbifold("2 3 5").unwrap().unit_tangent_invariant().unwrap();
    let c = homotopy_components(&ut235).unwrap();
    if !(c.unique_up_to_homotopy && c.degrees == DegreeSet::Single(1) && c.cohomology_rank == 0) {
        failures.push(format!("UT(235): {c:?}"));
    }
    let t3 = SeifertInvariant::closed(1, &[(1, 0)]).unwrap();
    let c = homotopy_components(&t3).unwrap();
    let all_integers = (-50..=50).all(|d| c.degrees.contains(d));
    if !(all_integers && c.cohomology_rank == 2 && !c.unique_up_to_homotopy) {
        failures.push(format!("T^3: {c:?}"));
    }
    Outcome::check(&failures, "UT(235) unique; T^3 degrees = Z (with 0), rank 2".into())
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, outcome: Outcome, elapsed: Duration| {
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "acceptance criterion {n:>2} [{status}] {name}: {} ({:.2}s)",
            outcome.detail,
            elapsed.as_secs_f64()
        );
    };

    let t = Instant::now();
    report(1, "e(UT) = chi on the orbifold grid", criterion_1(), t.elapsed());

    let t = Instant::now();
    let (c2, c3) = criteria_2_and_3();
    let shared = t.elapsed();
    report(2, "fiberwise quotient by an allowable degree is UT(base)", c2, shared);
    report(3, "allowable degrees match the raw-condition oracle", c3, shared);

    let runs: Vec<(usize, &str, fn() -> Outcome)> = vec![
        (4, "elliptic bases allow degrees 1 and 2 only", criterion_4),
        (5, "named instances", criterion_5),
        (6, "ten e = 0 fiberings over parabolic bases", criterion_6),
        (7, "lens space classification end to end", criterion_7),
        (8, "lens space gluing is well defined and matches the decision", criterion_8),
        (9, "property suites", criterion_9),
        (10, "homotopy catalogs", criterion_10),
    ];
    for (n, name, f) in runs {
        let t = Instant::now();
        let outcome = f();
        report(n, name, outcome, t.elapsed());
    }

    if failed > 0 {
        println!("acceptance: {failed} criterion/criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 10 criteria passed");
}
