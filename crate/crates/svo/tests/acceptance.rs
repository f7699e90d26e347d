//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fail. A criterion also fails if it overruns its budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use svo::classify::{classify_fully_regular_line_graphs, connected_graphs};
use svo::verify;
use svo_core::formulas::{self, ProductForm};
use svo_core::oracle::{self, ShellingMode};
use svo_core::{
    build_hypergraph, derive_params, evaluate, line_graph, ExactInteger, FamilySpec, FullyRegularParams, Hypergraph,
    Method, SimpleGraph,
};

/// Every comparison is exact; these are the only tolerances.
const BUDGET_BIPARTITE: Duration = Duration::from_secs(10);
const BUDGET_COMPLETE: Duration = Duration::from_secs(10);
const BUDGET_EDGE_REGULAR: Duration = Duration::from_secs(30);
const BUDGET_TRIPARTITE: Duration = Duration::from_secs(60);
const BUDGET_TRIPLE: Duration = Duration::from_secs(60);
const BUDGET_MIXED: Duration = Duration::from_secs(60);
const BUDGET_ORACLE: Duration = Duration::from_secs(300);
const BUDGET_REGULARITY: Duration = Duration::from_secs(300);
const BUDGET_CLASSIFY: Duration = Duration::from_secs(600);
const BUDGET_IDENTITIES: Duration = Duration::from_secs(30);
const BUDGET_BRIDGE: Duration = Duration::from_secs(300);

const ORACLE_CAP: usize = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for m in 1..=30u32 {
        for n in 1..=30u32 {
            let spec = FamilySpec::complete_bipartite(m, n);
            let got = formulas::sigma_fully_regular(&derive_params(&spec)).map_err(|e| e.to_string())?;
            let want = formulas::complete_bipartite_shellings(m.into(), n.into()).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("K_{{{m},{n}}}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn criterion_2() -> Outcome {
    let r = verify::sweep_complete(60);
    summarize(&r)
}

fn criterion_3() -> Outcome {
    let mut cases: Vec<(String, SimpleGraph, ExactInteger)> = Vec::new();
    for n in 2..=12u64 {
        let product = formulas::complete_graph_shellings(n).map_err(|e| e.to_string())?;
        cases.push((format!("K_{n}"), SimpleGraph::complete(n as usize), product));
    }
    for m in 1..=8u64 {
        for n in 1..=8u64 {
            let product = formulas::complete_bipartite_shellings(m, n).map_err(|e| e.to_string())?;
            cases.push((format!("K_{{{m},{n}}}"), SimpleGraph::complete_bipartite(m as usize, n as usize), product));
        }
    }
    let count = cases.len();
    for (name, g, product) in cases {
        let er = oracle::extract_edge_regularity(&g)
            .map_err(|e| format!("{name}: {e}"))?
            .ok_or_else(|| format!("{name}: not edge-regular"))?;
        let ratio = formulas::edge_regular_shelling_ratio(er.nu, er.d, er.lambda.unwrap_or(0))
            .map_err(|e| format!("{name}: {e}"))?;
        let got = formulas::scale_to_count(&ratio, g.edge_count() as u64).map_err(|e| format!("{name}: {e}"))?;
        if got != product {
            return Err(format!("{name}: {got} != {product}"));
        }
    }
    Ok(format!("{count} graphs"))
}

fn criterion_4() -> Outcome {
    let r = verify::sweep_tripartite(20);
    // The zero-factor anchor must be inside the box and agree.
    let spec = FamilySpec::complete_tripartite(8, 2, 2);
    let want = formulas::sigma_fully_regular(&derive_params(&spec)).map_err(|e| e.to_string())?;
    for form in [ProductForm::Full, ProductForm::Reduced] {
        if formulas::tripartite_count(8, 2, 2, form).map_err(|e| e.to_string())? != want {
            return Err(format!("(8,2,2) {form:?}"));
        }
    }
    summarize(&r)
}

fn criterion_5() -> Outcome {
    summarize(&verify::sweep_conjecture_c(100))
}

fn criterion_6() -> Outcome {
    summarize(&verify::sweep_conjecture_d(50, 50))
}

/// Families whose line graph has at most 20 vertices, within the required
/// minimum ranges.
fn small_families() -> Vec<FamilySpec> {
    let mut set = BTreeSet::new();
    for n in 2..=6 {
        set.insert(FamilySpec::complete_graph(n).to_string());
    }
    for m in 1..=16u32 {
        for n in m..=16 {
            if m * n <= 16 {
                set.insert(FamilySpec::complete_bipartite(m, n).to_string());
            }
        }
    }
    for m in 1..=18u32 {
        for n in m..=18 {
            for p in n..=18 {
                if m * n * p <= 18 {
                    set.insert(FamilySpec::complete_tripartite(m, n, p).to_string());
                }
            }
        }
    }
    for n in 3..=6 {
        set.insert(FamilySpec::complete_triple(n).to_string());
    }
    for m in 1..=18u32 {
        for n in 2..=7u32 {
            if m * n * (n - 1) / 2 <= 18 {
                set.insert(FamilySpec::mixed_triple(m, n).to_string());
            }
        }
    }
    set.into_iter().map(|s| s.parse().unwrap()).collect()
}

fn criterion_7() -> Outcome {
    let families = small_families();
    for spec in &families {
        let oracle = evaluate(spec, Method::Oracle, ORACLE_CAP).map_err(|e| format!("{spec}: {e}"))?;
        let summation = evaluate(spec, Method::Summation, ORACLE_CAP).map_err(|e| format!("{spec}: {e}"))?;
        if oracle.sigma != summation.sigma {
            return Err(format!("{spec}: oracle {} != {}", oracle.sigma, summation.sigma));
        }
    }
    Ok(format!("{} families", families.len()))
}

fn criterion_8() -> Outcome {
    let families = small_families();
    for spec in &families {
        let lg = build_hypergraph(spec, ORACLE_CAP)
            .and_then(|h| line_graph(&h, ORACLE_CAP))
            .map_err(|e| format!("{spec}: {e}"))?;
        let cert = oracle::check_fully_regular(&lg).map_err(|e| format!("{spec}: {e}"))?;
        if cert.params() != Some(&derive_params(spec)) {
            return Err(format!("{spec}: {cert:?}"));
        }
    }
    let c5 = oracle::check_fully_regular(&SimpleGraph::cycle(5)).map_err(|e| e.to_string())?;
    if c5.params() != Some(&FullyRegularParams::from_u64s(&[5, 2, 0]).unwrap()) {
        return Err(format!("C_5: {c5:?}"));
    }
    Ok(format!("{} families and C_5", families.len()))
}

fn criterion_9() -> Outcome {
    let r = classify_fully_regular_line_graphs(7).map_err(|e| e.to_string())?;
    let mut want: BTreeSet<String> = (1..=7).map(|n| format!("K_{n}")).collect();
    for m in 1..=3 {
        for n in m..=7 - m {
            // K_{1,1} is K_2.
            want.insert(if (m, n) == (1, 1) { "K_2".into() } else { format!("K_{{{m},{n}}}") });
        }
    }
    want.insert("C_5".into());
    let got: BTreeSet<String> = r.findings.iter().cloned().collect();
    if !r.passed() || got != want {
        return Err(format!("positives {got:?}, expected {want:?}"));
    }
    Ok(format!("{} connected graphs, {} positives", r.instances_checked, got.len()))
}

fn criterion_10() -> Outcome {
    let b = verify::sweep_binomial_identity(500, 2024);
    let p = verify::sweep_polynomial_identity(15);
    summarize(&b)?;
    summarize(&p)?;
    Ok(format!("{} binomial, {} polynomial", b.instances_checked, p.instances_checked))
}

fn random_hypergraph(rng: &mut StdRng, vertices: usize, uniformity: usize, edges: usize) -> Hypergraph {
    let mut seen = BTreeSet::new();
    while seen.len() < edges {
        let mut e: Vec<usize> = rand::seq::index::sample(rng, vertices, uniformity).into_vec();
        e.sort_unstable();
        seen.insert(e);
    }
    Hypergraph::new(vertices, uniformity, seen.into_iter().collect()).unwrap()
}

fn criterion_11() -> Outcome {
    let mut corpus: Vec<Hypergraph> = connected_graphs(6)
        .into_iter()
        .map(|g| g.to_simple())
        .filter(|g| g.edge_count() <= 8)
        .map(|g| g.as_hypergraph())
        .collect();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let v = rng.random_range(3..=9);
        let max = (v * (v - 1) / 2).min(8);
        let e = rng.random_range(1..=max);
        corpus.push(random_hypergraph(&mut rng, v, 2, e));
    }
    for h in &corpus {
        let strict = oracle::count_hypergraph_shellings(h, ShellingMode::Shelling, ORACLE_CAP).map_err(|e| e.to_string())?;
        let lg = line_graph(h, ORACLE_CAP).map_err(|e| e.to_string())?;
        let orderings = oracle::count_successive_orderings(&lg, ORACLE_CAP).map_err(|e| e.to_string())?;
        if strict != orderings {
            return Err(format!("{:?}: shellings {strict} != orderings {orderings}", h.hyperedges()));
        }
    }
    let mut triples = 0;
    for _ in 0..300 {
        let v = rng.random_range(4..=7);
        let max = (v * (v - 1) * (v - 2) / 6).min(10);
        let e = rng.random_range(1..=max);
        let h = random_hypergraph(&mut rng, v, 3, e);
        let strict = oracle::count_hypergraph_shellings(&h, ShellingMode::Shelling, ORACLE_CAP).map_err(|e| e.to_string())?;
        let weak = oracle::count_hypergraph_shellings(&h, ShellingMode::Weak, ORACLE_CAP).map_err(|e| e.to_string())?;
        if weak < strict {
            return Err(format!("{:?}: weak {weak} < strict {strict}", h.hyperedges()));
        }
        triples += 1;
    }
    Ok(format!("{} graphs, {triples} 3-uniform", corpus.len()))
}

fn summarize(r: &svo::VerificationReport) -> Outcome {
    match r.mismatches.first() {
        None => Ok(format!("{} instances", r.instances_checked)),
        Some(m) => Err(format!(
            "{} of {} failed, first {}: expected {}, got {}",
            r.mismatches.len(),
            r.instances_checked,
            m.instance,
            m.expected,
            m.got
        )),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("bipartite equivalence", criterion_1, BUDGET_BIPARTITE),
        ("complete-graph equivalence", criterion_2, BUDGET_COMPLETE),
        ("edge-regular ratio consistency", criterion_3, BUDGET_EDGE_REGULAR),
        ("tripartite product forms", criterion_4, BUDGET_TRIPARTITE),
        ("K_n^(3) product sweep", criterion_5, BUDGET_TRIPLE),
        ("K_{m,n}^(1,2) product sweep", criterion_6, BUDGET_MIXED),
        ("oracle equivalence", criterion_7, BUDGET_ORACLE),
        ("definition-level regularity", criterion_8, BUDGET_REGULARITY),
        ("classification", criterion_9, BUDGET_CLASSIFY),
        ("identity suites", criterion_10, BUDGET_IDENTITIES),
        ("shelling bridge", criterion_11, BUDGET_BRIDGE),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}, over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
