//! Verification campaigns: each compares independent routes to the same
//! number over a range of instances and reports every disagreement.
//!
//! Instances are evaluated in parallel; mismatches are collected in instance
//! order so reports are deterministic.

use std::time::Instant;

use rayon::prelude::*;
use svo_core::evaluate::{evaluate, Method};
use svo_core::formulas::{self, sigma_prime_fully_regular, ProductForm};
use svo_core::numerics::{to_u64, ExactRational};
use svo_core::{derive_params, FamilySpec};

use crate::report::{Mismatch, VerificationReport};

fn ratio_string(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Runs `check` on every instance in parallel and assembles the report.
fn run_campaign<T: Sync>(
    campaign: &str,
    instances: Vec<T>,
    check: impl Fn(&T) -> Vec<Mismatch> + Sync + Send,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(campaign);
    report.instances_checked = instances.len() as u64;
    let found: Vec<Vec<Mismatch>> = instances.par_iter().map(check).collect();
    report.mismatches = found.into_iter().flatten().collect();
    report.elapsed = start.elapsed();
    report
}

/// Compares the summation value of `spec` with a ratio computed another way.
fn compare_ratio(spec: &FamilySpec, other: svo_core::Result<ExactRational>) -> Vec<Mismatch> {
    let expected = sigma_prime_fully_regular(&derive_params(spec));
    match other {
        Ok(got) if got == expected => Vec::new(),
        Ok(got) => vec![Mismatch {
            instance: spec.to_string(),
            expected: ratio_string(&expected),
            got: ratio_string(&got),
        }],
        Err(e) => vec![Mismatch {
            instance: spec.to_string(),
            expected: ratio_string(&expected),
            got: format!("error: {e}"),
        }],
    }
}

/// Evaluates `spec` with every applicable method, including the oracle when
/// the line graph fits under `cap`, and checks they all agree with the
/// summation formula. Each method is one checked instance.
pub fn crosscheck_family(spec: &FamilySpec, cap: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("family");
    let baseline = match evaluate(spec, Method::Summation, cap) {
        Ok(r) => r,
        Err(e) => {
            report.record(format!("{spec} method=theorem2"), "a value", format!("error: {e}"));
            report.elapsed = start.elapsed();
            return report;
        }
    };
    report.instances_checked = 1;
    report.findings.push(format!("theorem2: sigma = {}", baseline.sigma));

    let a0 = to_u64(derive_params(spec).a0(), "a_0").unwrap_or(u64::MAX);
    let mut methods = Method::applicable_formulas(spec);
    methods.retain(|&m| m != Method::Summation);
    if a0 <= cap as u64 {
        methods.push(Method::Oracle);
    }
    for method in methods {
        report.instances_checked += 1;
        let instance = format!("{spec} method={method}");
        match evaluate(spec, method, cap) {
            Ok(r) if r.sigma == baseline.sigma && r.sigma_prime == baseline.sigma_prime => {
                report.findings.push(format!("{method}: sigma = {}", r.sigma));
            }
            Ok(r) => report.record(instance, baseline.sigma.to_string(), r.sigma.to_string()),
            Err(e) => report.record(instance, baseline.sigma.to_string(), format!("error: {e}")),
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Conjectured product for `K_n^(3)` against the summation formula, for
/// `3 <= n <= n_max`.
pub fn sweep_conjecture_c(n_max: u32) -> VerificationReport {
    let instances: Vec<u32> = (3..=n_max).collect();
    run_campaign("conjecture-c", instances, |&n| {
        compare_ratio(&FamilySpec::complete_triple(n), formulas::complete_triple_ratio(n))
    })
}

/// Conjectured product for `K_{m,n}^(1,2)` against the summation formula,
/// for `1 <= m <= m_max`, `2 <= n <= n_max`.
pub fn sweep_conjecture_d(m_max: u32, n_max: u32) -> VerificationReport {
    let instances: Vec<(u32, u32)> = (1..=m_max).flat_map(|m| (2..=n_max).map(move |n| (m, n))).collect();
    run_campaign("conjecture-d", instances, |&(m, n)| {
        compare_ratio(&FamilySpec::mixed_triple(m, n), formulas::mixed_triple_ratio(m, n))
    })
}

/// `K_{m,n}` shelling product against the summation formula for
/// `1 <= m, n <= max_mn`. Compares probabilities, i.e. both counts divided
/// by the same `(mn)!`.
pub fn sweep_bipartite(max_mn: u32) -> VerificationReport {
    let instances: Vec<(u32, u32)> = (1..=max_mn).flat_map(|m| (1..=max_mn).map(move |n| (m, n))).collect();
    run_campaign("bipartite", instances, |&(m, n)| {
        compare_ratio(
            &FamilySpec::complete_bipartite(m, n),
            formulas::complete_bipartite_ratio(u64::from(m), u64::from(n)),
        )
    })
}

/// `K_n` shelling product against the summation formula, exact counts, for
/// `2 <= n <= n_max`.
pub fn sweep_complete(n_max: u32) -> VerificationReport {
    let instances: Vec<u32> = (2..=n_max).collect();
    run_campaign("complete", instances, |&n| {
        let spec = FamilySpec::complete_graph(n);
        let expected = formulas::sigma_fully_regular(&derive_params(&spec));
        let got = formulas::complete_graph_shellings(u64::from(n));
        compare_counts(&spec.to_string(), expected, got)
    })
}

fn compare_counts(
    instance: &str,
    expected: svo_core::Result<svo_core::ExactInteger>,
    got: svo_core::Result<svo_core::ExactInteger>,
) -> Vec<Mismatch> {
    let show = |r: &svo_core::Result<svo_core::ExactInteger>| match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    };
    match (&expected, &got) {
        (Ok(a), Ok(b)) if a == b => Vec::new(),
        _ => vec![Mismatch { instance: instance.to_string(), expected: show(&expected), got: show(&got) }],
    }
}

/// Both tripartite product forms against the summation formula, exact
/// counts, for `1 <= m, n, p <= max`. The reduced form is evaluated with
/// whichever class order keeps `p` from being the single largest.
pub fn sweep_tripartite(max: u32) -> VerificationReport {
    let instances: Vec<(u32, u32, u32)> = (1..=max)
        .flat_map(|m| (1..=max).flat_map(move |n| (1..=max).map(move |p| (m, n, p))))
        .collect();
    run_campaign("tripartite", instances, |&(m, n, p)| {
        let spec = FamilySpec::complete_tripartite(m, n, p);
        let expected = formulas::sigma_fully_regular(&derive_params(&spec));
        let (rm, rn, rp) = if p > m && p > n { (p, n, m) } else { (m, n, p) };
        let mut out = compare_counts(
            &format!("{spec} method=theorem4_form1 order=({m},{n},{p})"),
            expected.clone(),
            formulas::tripartite_count(m, n, p, ProductForm::Full),
        );
        out.extend(compare_counts(
            &format!("{spec} method=theorem4_form2 order=({rm},{rn},{rp})"),
            expected,
            formulas::tripartite_count(rm, rn, rp, ProductForm::Reduced),
        ));
        out
    })
}

/// Checks the alternating binomial identity on rational arguments drawn
/// from a seeded stream; excluded arguments are skipped, not counted.
pub fn sweep_binomial_identity(samples: usize, seed: u64) -> VerificationReport {
    use rand::{Rng, SeedableRng};
    let start = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut report = VerificationReport::new("binomial-identity");
    while (report.instances_checked as usize) < samples {
        let alpha = rng.random_range(0..=10u64);
        let beta = ExactRational::new(rng.random_range(-40..=40i64).into(), rng.random_range(1..=7i64).into());
        let gamma = ExactRational::new(rng.random_range(-40..=40i64).into(), rng.random_range(1..=7i64).into());
        match formulas::alternating_binomial_sides(alpha, &beta, &gamma) {
            Err(svo_core::Error::Undefined(_)) => continue,
            Ok((lhs, rhs)) if lhs == rhs => {}
            Ok((lhs, rhs)) => report.record(
                format!("alpha={alpha} beta={beta} gamma={gamma}"),
                ratio_string(&rhs),
                ratio_string(&lhs),
            ),
            Err(e) => report.record(format!("alpha={alpha} beta={beta} gamma={gamma}"), "both sides", format!("error: {e}")),
        }
        report.instances_checked += 1;
    }
    report.elapsed = start.elapsed();
    report
}

/// Checks the tripartite polynomial identity for `1 <= m, n, p <= max`.
pub fn sweep_polynomial_identity(max: i64) -> VerificationReport {
    let instances: Vec<(i64, i64, i64)> = (1..=max)
        .flat_map(|m| (1..=max).flat_map(move |n| (1..=max).map(move |p| (m, n, p))))
        .collect();
    run_campaign("polynomial-identity", instances, |&(m, n, p)| {
        match formulas::tripartite_polynomial_sides(m, n, p) {
            Ok((lhs, rhs)) if lhs == rhs => Vec::new(),
            Ok((lhs, rhs)) => vec![Mismatch {
                instance: format!("m={m} n={n} p={p}"),
                expected: rhs.to_string(),
                got: lhs.to_string(),
            }],
            Err(e) => vec![Mismatch {
                instance: format!("m={m} n={n} p={p}"),
                expected: "both sides".into(),
                got: format!("error: {e}"),
            }],
        }
    })
}

/// Both identity sweeps as one report.
pub fn sweep_identities(samples: usize, seed: u64, max: i64) -> VerificationReport {
    let binomial = sweep_binomial_identity(samples, seed);
    let polynomial = sweep_polynomial_identity(max);
    let mut report = VerificationReport::new("identities");
    report.instances_checked = binomial.instances_checked + polynomial.instances_checked;
    report.elapsed = binomial.elapsed + polynomial.elapsed;
    for part in [binomial, polynomial] {
        report.findings.push(format!("{}: {} checked", part.campaign, part.instances_checked));
        report.mismatches.extend(part.mismatches);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crosscheck_examples() {
        let r = crosscheck_family(&FamilySpec::complete_graph(4), 20);
        assert!(r.passed(), "{:?}", r.mismatches);
        // summation, product, edge-regular ratio and the oracle
        assert_eq!(r.instances_checked, 4);
        assert!(r.findings.iter().all(|f| f.ends_with("sigma = 576")));

        let r = crosscheck_family(&FamilySpec::complete_tripartite(2, 2, 2), 20);
        assert!(r.passed());
        assert!(r.findings.iter().all(|f| f.ends_with("sigma = 34560")));

        let r = crosscheck_family(&FamilySpec::complete_bipartite(1, 1), 20);
        assert!(r.passed());
        assert!(r.findings.iter().all(|f| f.ends_with("sigma = 1")));
    }

    #[test]
    fn small_sweeps() {
        let r = sweep_conjecture_c(6);
        assert!(r.passed());
        assert_eq!(r.instances_checked, 4);
        assert_eq!(sweep_conjecture_c(3).instances_checked, 1);

        let r = sweep_conjecture_d(2, 4);
        assert!(r.passed());
        assert_eq!(r.instances_checked, 6);

        for (b, count) in [(1, 1), (2, 4), (30, 900)] {
            let r = sweep_bipartite(b);
            assert!(r.passed());
            assert_eq!(r.instances_checked, count);
        }
        assert!(sweep_complete(20).passed());
        assert!(sweep_tripartite(4).passed());
        assert!(sweep_polynomial_identity(5).passed());
        let r = sweep_binomial_identity(50, 7);
        assert!(r.passed());
        assert_eq!(r.instances_checked, 50);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = sweep_conjecture_d(6, 8).to_json(false).to_string();
        let b = sweep_conjecture_d(6, 8).to_json(false).to_string();
        assert_eq!(a, b);
    }
}
