//! The full invariant suite behind the `check` command.
//!
//! Every group is deterministic: randomized cases draw from fixed-seed
//! generators, enumerations are exhaustive over fixed families, and each
//! report carries a stable one-line detail. The same groups back the
//! acceptance tests, which pin the runtime bounds.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::bitword::BitWord;
use crate::divider::{self, DivisionTree};
use crate::nilpotent::{Dual, GalileanBoost, Polynomial};
use crate::paradoxes;
use crate::philebian::{self, AbClass, PhilebianSeq};
use crate::rational::{ratio, Rational};

/// Relative tolerance for the floating derivative cross-check.
pub const DERIVATIVE_REL_TOL: f64 = 1e-5;
/// Central-difference step for the floating derivative cross-check.
pub const DERIVATIVE_FD_STEP: f64 = 1e-6;

/// Outcome of one invariant group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn from_failures(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        match failures.first() {
            None => CheckReport {
                name,
                passed: true,
                detail: summary,
            },
            Some(first) => CheckReport {
                name,
                passed: false,
                detail: format!("{} failure(s); first: {}", failures.len(), first),
            },
        }
    }
}

/// Runs every invariant group in a fixed order.
pub fn run_all() -> Vec<CheckReport> {
    vec![
        nilpotency_ring_laws(),
        forward_derivative(),
        order_isomorphism_failure(),
        gap_adjacency(),
        tree_accounting(),
        dichotomy_conservation(),
        achilles_closed_form(),
        stadium_ratio(),
        galilean_contract(),
        poincare_intransitivity(),
    ]
}

fn random_rational(
    rng: &mut ChaCha8Rng,
    numer: RangeInclusive<i64>,
    denom: RangeInclusive<i64>,
) -> Rational {
    let n = rng.gen_range(numer);
    let d = rng.gen_range(denom);
    ratio(n, d)
}

fn random_dual(rng: &mut ChaCha8Rng) -> Dual {
    Dual::new(
        random_rational(rng, -1000..=1000, 1..=100),
        random_rational(rng, -1000..=1000, 1..=100),
    )
}

/// Every sequence with a prefix of up to 8 digits and one of the sample
/// periods, in normal form, deduplicated and lexicographically sorted.
pub fn enumerated_family() -> Vec<PhilebianSeq> {
    let periods: Vec<BitWord> = ["0", "1", "10", "01", "110"]
        .iter()
        .map(|p| p.parse().unwrap())
        .collect();
    let mut family: Vec<PhilebianSeq> = Vec::new();
    for len in 0..=8usize {
        for value in 0..(1u32 << len) {
            let prefix = BitWord::from_index(&BigUint::from(value), len);
            for period in &periods {
                family.push(PhilebianSeq::new(prefix.clone(), period.clone()).unwrap());
            }
        }
    }
    family.sort();
    family.dedup();
    family
}

/// Squaring the generator gives zero, and the ring laws hold exactly over
/// 1000 seeded triples.
pub fn nilpotency_ring_laws() -> CheckReport {
    let mut failures = Vec::new();
    if &Dual::h() * &Dual::h() != Dual::zero() {
        failures.push("h² != 0".to_owned());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a01);
    for case in 0..1000 {
        let x = random_dual(&mut rng);
        let y = random_dual(&mut rng);
        let z = random_dual(&mut rng);
        let laws: [(&str, Dual, Dual); 9] = [
            ("add-assoc", &(&x + &y) + &z, &x + &(&y + &z)),
            ("add-comm", &x + &y, &y + &x),
            ("add-identity", &x + &Dual::zero(), x.clone()),
            ("add-inverse", &x + &(-&x), Dual::zero()),
            ("mul-assoc", &(&x * &y) * &z, &x * &(&y * &z)),
            ("mul-comm", &x * &y, &y * &x),
            ("mul-identity", &x * &Dual::one(), x.clone()),
            ("distributive", &x * &(&y + &z), &(&x * &y) + &(&x * &z)),
            (
                "nilpotent-product",
                &Dual::new(Rational::zero(), x.infinitesimal().clone())
                    * &Dual::new(Rational::zero(), y.infinitesimal().clone()),
                Dual::zero(),
            ),
        ];
        for (law, lhs, rhs) in laws {
            if lhs != rhs {
                failures.push(format!("case {case}: {law} violated ({lhs} vs {rhs})"));
            }
        }
    }
    CheckReport::from_failures(
        "nilpotency-ring-laws",
        "h² = 0 and 9 ring laws over 1000 random triples, exact".to_owned(),
        failures,
    )
}

/// Dual evaluation at `(a, 1)` reproduces the symbolic derivative exactly,
/// and its floating mirror stays within relative tolerance of central finite
/// differences.
pub fn forward_derivative() -> CheckReport {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a02);
    let mut evaluations = 0usize;
    for poly_index in 0..50 {
        let degree = rng.gen_range(0..=6usize);
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| random_rational(&mut rng, -9..=9, 1..=9))
            .collect();
        let p = Polynomial::new(coeffs);
        let dp = p.derivative();
        for point_index in 0..10 {
            // Small evaluation points keep the finite-difference cancellation benign.
            let a = random_rational(&mut rng, -8..=8, 4..=8);
            evaluations += 1;

            let dual_result = p.eval_dual(&Dual::new(a.clone(), Rational::one()));
            if dual_result.real() != &p.eval(&a) {
                failures.push(format!(
                    "poly {poly_index} point {point_index}: value mismatch"
                ));
            }
            if dual_result.infinitesimal() != &dp.eval(&a) {
                failures.push(format!(
                    "poly {poly_index} point {point_index}: derivative mismatch"
                ));
            }

            let a_f = num_traits::ToPrimitive::to_f64(&a).unwrap();
            let (_, slope) = p.eval_dual_f64(a_f);
            let fd = (p.eval_f64(a_f + DERIVATIVE_FD_STEP) - p.eval_f64(a_f - DERIVATIVE_FD_STEP))
                / (2.0 * DERIVATIVE_FD_STEP);
            let scale = 1.0f64.max(slope.abs()).max(fd.abs());
            if (slope - fd).abs() > DERIVATIVE_REL_TOL * scale {
                failures.push(format!(
                    "poly {poly_index} point {point_index}: float slope {slope} vs finite difference {fd}"
                ));
            }
        }
    }
    CheckReport::from_failures(
        "forward-derivative",
        format!(
            "50 polynomials of degree <= 6, {evaluations} evaluations, exact + float within 1e-5"
        ),
        failures,
    )
}

/// Over the enumerated family, equal values with distinct sequences happen
/// exactly at double pairs, and on class A the lexicographic order is the
/// value order.
pub fn order_isomorphism_failure() -> CheckReport {
    let mut failures = Vec::new();
    let family = enumerated_family();

    let mut by_value: BTreeMap<Rational, Vec<&PhilebianSeq>> = BTreeMap::new();
    for seq in &family {
        by_value.entry(seq.value()).or_default().push(seq);
    }

    let mut collisions = 0usize;
    for (value, group) in &by_value {
        match group.as_slice() {
            [_] => {}
            [x, y] => {
                collisions += 1;
                // The colliding pair must be the two faces of one dyadic
                // rational, rebuilt here through the independent route.
                let denom = value.denom();
                let n = (denom.bits() - 1) as u32;
                if &(BigInt::one() << n) != denom {
                    failures.push(format!("collision at non-dyadic value {value}"));
                    continue;
                }
                let k = value.numer().to_biguint().unwrap_or_default();
                match philebian::dyadic_pair(&k, n) {
                    Ok(pair) => {
                        if (pair.lower(), pair.upper()) != (*x, *y) {
                            failures.push(format!("collision at {value} is not its double pair"));
                        }
                        if x.classify() != AbClass::B || y.classify() != AbClass::A {
                            failures.push(format!("collision at {value} has wrong classes"));
                        }
                        if x.canonical() != **y {
                            failures
                                .push(format!("canonical choice at {value} does not map across"));
                        }
                    }
                    Err(e) => failures.push(format!("collision at {value}: {e}")),
                }
            }
            group => failures.push(format!(
                "{} sequences share value {value}; expected at most 2",
                group.len()
            )),
        }
    }

    // Lex order on A is strictly monotone in value; the family is lex-sorted.
    let class_a: Vec<&PhilebianSeq> = family
        .iter()
        .filter(|s| s.classify() == AbClass::A)
        .collect();
    for w in class_a.windows(2) {
        if w[0].value() >= w[1].value() {
            failures.push(format!("values not increasing across {} < {}", w[0], w[1]));
        }
    }

    CheckReport::from_failures(
        "order-isomorphism-failure",
        format!(
            "{} sequences, {} value collisions, all double pairs; lex = value order on {} class-A members",
            family.len(),
            collisions,
            class_a.len()
        ),
        failures,
    )
}

/// No member of the enumerated family falls strictly between the two faces of
/// any dyadic `k/2^n` with `n <= 8`.
pub fn gap_adjacency() -> CheckReport {
    let mut failures = Vec::new();
    let family = enumerated_family();
    let mut pairs = 0usize;
    for n in 1..=8u32 {
        for k in 1..(1u32 << n) {
            let pair = match philebian::dyadic_pair(&BigUint::from(k), n) {
                Ok(pair) => pair,
                Err(e) => {
                    failures.push(format!("{k}/2^{n}: {e}"));
                    continue;
                }
            };
            pairs += 1;
            if !philebian::gap_check(&pair, &family) {
                failures.push(format!(
                    "a sequence intrudes between the faces of {k}/2^{n}"
                ));
            }
        }
    }
    CheckReport::from_failures(
        "gap-adjacency",
        format!(
            "{pairs} dyadic pairs against {} sequences, no intrusions",
            family.len()
        ),
        failures,
    )
}

/// Counts, widths, and adjacency agree with full enumeration for every depth
/// up to 20.
pub fn tree_accounting() -> CheckReport {
    let mut failures = Vec::new();
    for n in 0..=20u32 {
        let tree = DivisionTree::expand(n);
        let counts = divider::counts(n);
        let expected_parts = BigUint::one() << n;
        if counts.parts != expected_parts
            || counts.partitions != &expected_parts - BigUint::one()
            || tree.leaf_count() != expected_parts
        {
            failures.push(format!("depth {n}: counts disagree with 2^n"));
        }

        let mut total = Rational::zero();
        let mut leaves = 0usize;
        let mut previous: Option<crate::divider::DyadicInterval> = None;
        for (_, interval) in tree.leaf_intervals() {
            leaves += 1;
            total += interval.width();
            if let Some(prev) = previous {
                if prev.upper() != interval.lower() {
                    failures.push(format!(
                        "depth {n}: adjacent leaves do not share an endpoint"
                    ));
                }
            }
            previous = Some(interval);
        }
        if total != ratio(1, 1) {
            failures.push(format!("depth {n}: widths sum to {total}, not 1"));
        }
        if BigUint::from(leaves) != expected_parts {
            failures.push(format!("depth {n}: enumerated {leaves} leaves"));
        }
    }
    CheckReport::from_failures(
        "tree-accounting",
        "depths 0..=20: exact counts, widths summing to 1, shared endpoints".to_owned(),
        failures,
    )
}

/// Covered plus remaining distance is exactly 1 for every depth up to 64, and
/// the part count agrees with the division tree.
pub fn dichotomy_conservation() -> CheckReport {
    let mut failures = Vec::new();
    for n in 1..=64u32 {
        let report = paradoxes::dichotomy(n).expect("depth >= 1");
        if &report.cumulative + &report.remaining != ratio(1, 1) {
            failures.push(format!("depth {n}: cumulative + remaining != 1"));
        }
        if report.remaining != Rational::new(BigInt::one(), BigInt::one() << n) {
            failures.push(format!("depth {n}: remaining is not 2^-n"));
        }
        if report.parts != divider::counts(n).parts {
            failures.push(format!("depth {n}: parts disagree with the tree"));
        }
    }
    CheckReport::from_failures(
        "dichotomy-conservation",
        "depths 1..=64: exact conservation and tree agreement".to_owned(),
        failures,
    )
}

/// Iterative catch-up sums match the closed form exactly and stay below the
/// limit, for 100 seeded speed ratios and the pinned (10, 100) pursuit.
pub fn achilles_closed_form() -> CheckReport {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a07);
    for case in 0..100 {
        let denom = rng.gen_range(1..=10i64);
        let numer = rng.gen_range(denom + 1..=denom * 100);
        let r = ratio(numer, denom); // in (1, 100]
        let s = random_rational(&mut rng, 1..=1000, 1..=10);
        let k = rng.gen_range(1..=20u32);
        let report = match paradoxes::achilles(&r, &s, k) {
            Ok(report) => report,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };

        // Closed form s·(1 - r^-(k+1))/(1 - r^-1), computed independently.
        let r_inv = ratio(1, 1) / &r;
        let mut r_inv_pow = r_inv.clone(); // r^-1
        for _ in 0..k {
            r_inv_pow *= &r_inv;
        }
        let closed = &s * (ratio(1, 1) - r_inv_pow) / (ratio(1, 1) - r_inv);
        let last = report.points.last().expect("k+1 points");
        if last != &closed {
            failures.push(format!("case {case}: partial sum differs from closed form"));
        }
        if report.points.iter().any(|p| p >= &report.limit) {
            failures.push(format!("case {case}: a catch-up point reached the limit"));
        }
        if report.points.windows(2).any(|w| w[0] >= w[1]) {
            failures.push(format!("case {case}: points not strictly increasing"));
        }
    }

    let pinned = paradoxes::achilles(&ratio(10, 1), &ratio(100, 1), 3).expect("valid pursuit");
    if pinned.limit != ratio(1000, 9) {
        failures.push(format!(
            "pinned pursuit limit is {}, not 1000/9",
            pinned.limit
        ));
    }

    CheckReport::from_failures(
        "achilles-closed-form",
        "100 random pursuits match the closed form; limit 1000/9 reproduced".to_owned(),
        failures,
    )
}

/// The moving row passes the counter-moving row exactly twice as fast as the
/// resting row, for every tick count up to 100 and row length up to 50.
pub fn stadium_ratio() -> CheckReport {
    let mut failures = Vec::new();
    let mut simulations = 0usize;
    for n in 1..=50u32 {
        for k in 1..=100u32 {
            simulations += 1;
            let report = match paradoxes::stadium(n, k) {
                Ok(report) => report,
                Err(e) => {
                    failures.push(format!("N={n} k={k}: {e}"));
                    continue;
                }
            };
            if report.passings_b_vs_c != 2 * u64::from(k) || report.passings_b_vs_a != u64::from(k)
            {
                failures.push(format!(
                    "N={n} k={k}: simulation disagrees with closed form"
                ));
            }
            if report.ratio() != ratio(2, 1) {
                failures.push(format!("N={n} k={k}: ratio is {}", report.ratio()));
            }
        }
    }
    CheckReport::from_failures(
        "stadium-ratio",
        format!("{simulations} simulations, ratio exactly 2 throughout"),
        failures,
    )
}

/// Boosting shifts every worldline position by `w·t` exactly, and boosts
/// compose by velocity addition.
pub fn galilean_contract() -> CheckReport {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a09);
    for case in 0..1000 {
        let d = random_dual(&mut rng);
        let w = random_rational(&mut rng, -1000..=1000, 1..=100);
        let v = random_rational(&mut rng, -1000..=1000, 1..=100);
        let t = random_rational(&mut rng, -1000..=1000, 1..=100);

        let boost_w = GalileanBoost::new(w.clone());
        let boost_v = GalileanBoost::new(v.clone());

        let lhs = d.boosted(&boost_w).position_at(&t);
        let rhs = d.position_at(&t) + &w * &t;
        if lhs != rhs {
            failures.push(format!("case {case}: boost broke the worldline contract"));
        }

        if d.boosted(&boost_v).boosted(&boost_w) != d.boosted(&boost_v.compose(&boost_w)) {
            failures.push(format!("case {case}: composition is not additive"));
        }
        if d.boosted(&boost_w).boosted(&boost_w.inverse()) != d {
            failures.push(format!("case {case}: inverse boost does not undo"));
        }
        if d.boosted(&GalileanBoost::identity()) != d {
            failures.push(format!("case {case}: identity boost moved the worldline"));
        }
    }
    CheckReport::from_failures(
        "galilean-contract",
        "1000 random worldlines: exact position shift, additive composition".to_owned(),
        failures,
    )
}

/// The 10/11/12-gramme chain under a 3/2 threshold: consecutive weights
/// indistinguishable, the outer pair distinguishable.
pub fn poincare_intransitivity() -> CheckReport {
    let mut failures = Vec::new();
    let grams = [ratio(10, 1), ratio(11, 1), ratio(12, 1)];
    match philebian::poincare_chain(&ratio(3, 2), &grams) {
        Ok(report) => {
            if report.indistinguishable() != [(0, 1), (1, 2)] {
                failures.push("expected 10~11 and 11~12".to_owned());
            }
            if report.distinguishable() != [(0, 2)] {
                failures.push("expected 10 and 12 distinguishable".to_owned());
            }
            if report.witnesses() != [(0, 1, 2)] || !report.intransitive() {
                failures.push("expected the single intransitivity witness".to_owned());
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    CheckReport::from_failures(
        "poincare-intransitivity",
        "10~11, 11~12, 10<12 under threshold 3/2".to_owned(),
        failures,
    )
}
