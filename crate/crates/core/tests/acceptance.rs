//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use graph_boundary::boundary::boundary_from;
use graph_boundary::euclid::{
    classify_prop4, radial_laplacian_identity_check, sector_check, DEFAULT_MAX_ALPHA,
};
use graph_boundary::generators::{
    enumerate_connected, erdos_renyi, grid, grid_d, random_tree, Family,
};
use graph_boundary::io::write_edge_list;
use graph_boundary::verify::{verify_graph, Check, Status};
use graph_boundary::{boundary, is_connected, DistanceMatrix, Graph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const SMALL_GRAPH_CHECKS: [Check; 9] = [
    Check::Prop1,
    Check::Prop2,
    Check::Prop3,
    Check::DiameterPair,
    Check::Thm1,
    Check::Thm2,
    Check::Dichotomy,
    Check::Mps,
    Check::LaplacianOracle,
];

fn violations(g: &Graph) -> Result<Vec<String>, String> {
    let verdict = verify_graph(g, &SMALL_GRAPH_CHECKS, None).map_err(|e| e.to_string())?;
    Ok(verdict
        .outcomes
        .iter()
        .filter(|o| o.status == Status::Fail)
        .map(|o| format!("{}: {}", o.check, o.detail))
        .collect())
}

fn grid_facts() -> Outcome {
    for n in [3usize, 5, 10, 20] {
        let g = grid(n, n).map_err(|e| e.to_string())?.graph;
        let report = boundary(&g).map_err(|e| e.to_string())?;
        let corners = vec![0, n - 1, n * (n - 1), n * n - 1];
        ensure(report.cejz_boundary == corners, || {
            format!("{n}x{n}: (∂G)* = {:?}", report.cejz_boundary)
        })?;
        let rim: Vec<usize> = (0..n * n)
            .filter(|&u| {
                let (r, c) = (u / n, u % n);
                r == 0 || c == 0 || r == n - 1 || c == n - 1
            })
            .collect();
        ensure(
            report.boundary.len() == 4 * n - 4 && report.boundary == rim,
            || format!("{n}x{n}: |∂G| = {}", report.boundary.len()),
        )?;
    }
    let g = grid(20, 20).map_err(|e| e.to_string())?.graph;
    let size = boundary(&g).map_err(|e| e.to_string())?.boundary.len() as i64;
    // √|V| = 20 exactly.
    let ratio = Ratio::new(size, 4 * 20);
    ensure(
        ratio >= Ratio::new(4, 5) && ratio <= Ratio::from_integer(1),
        || format!("ratio {ratio} outside [0.8, 1]"),
    )?;
    Ok(format!(
        "rims 8/16/36/76, four corners each, 20x20 ratio {ratio}"
    ))
}

fn exhaustive_small_graphs() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        let mut graphs = 0usize;
        for g in enumerate_connected(6).map_err(|e| e.to_string())? {
            graphs += 1;
            let bad = violations(&g)?;
            ensure(bad.is_empty(), || {
                format!("{}: {bad:?}", write_edge_list(&g))
            })?;
        }
        ensure(graphs == 1 + 1 + 4 + 38 + 728 + 26704, || {
            format!("enumerated {graphs} graphs")
        })?;
        Ok(format!(
            "{graphs} connected labeled graphs on n ≤ 6, zero violations"
        ))
    })
}

fn tree_characterization() -> Outcome {
    for i in 0..200u64 {
        let n = 2 + (i as usize * 29) % 59;
        let tree = random_tree(n, i).map_err(|e| e.to_string())?;
        let report = boundary(&tree).map_err(|e| e.to_string())?;
        let leaves = common::degree_one(&tree);
        ensure(report.boundary == leaves, || {
            format!("tree n={n} seed={i}: ∂G ≠ leaves")
        })?;
    }
    Ok("200 trees, n in 2..=60, ∂G = leaves".into())
}

fn randomized_stress() -> Outcome {
    let ps = [0.1, 0.3, 0.7];
    let mut retries = 0u64;
    for i in 0..100usize {
        let p = ps[i % 3];
        let n = 10 + (i * 13) % 31;
        let mut seed = 1000 * i as u64;
        let g = loop {
            let g = erdos_renyi(n, p, seed).map_err(|e| e.to_string())?;
            if is_connected(&g) {
                break g;
            }
            seed += 1;
            retries += 1;
            ensure(seed < 1000 * i as u64 + 100_000, || {
                format!("no connected G({n}, {p})")
            })?;
        };
        let bad = violations(&g)?;
        ensure(bad.is_empty(), || {
            format!("G({n}, {p}) seed {seed}: {bad:?}")
        })?;
    }
    Ok(format!(
        "100 connected G(n, p), n in 10..=40, zero violations ({retries} reseeds)"
    ))
}

fn lattice_non_uniqueness() -> Outcome {
    let built = Family::parse("annulus", "0.4,1.0,0.2")
        .and_then(|f| f.build(0))
        .map_err(|e| e.to_string())?;
    let gg = built.grid.ok_or("annulus has no coordinates")?;
    let dm = DistanceMatrix::compute(&gg.graph).map_err(|e| e.to_string())?;
    let report = boundary_from(&gg.graph, &dm).map_err(|e| e.to_string())?;
    let entries = classify_prop4(&gg, &dm, &report, true).map_err(|e| e.to_string())?;
    let expected: BTreeSet<usize> = report
        .boundary
        .iter()
        .copied()
        .filter(|&u| gg.graph.degree(u) == 4)
        .collect();
    let covered: BTreeSet<usize> = entries.iter().map(|e| e.vertex).collect();
    ensure(!expected.is_empty() && covered == expected, || {
        format!(
            "{} full-degree boundary vertices, {} with witnesses",
            expected.len(),
            covered.len()
        )
    })?;
    let o = common::oracle(&gg.graph);
    let mut witnesses = 0;
    for w in entries.iter().flat_map(|e| &e.witnesses) {
        witnesses += 1;
        ensure(w.verify(&dm), || format!("witness {w:?} fails"))?;
        ensure(o.slices[w.source].contains(&w.vertex), || {
            format!("{w:?}: vertex not in slice")
        })?;
        ensure(u64::from(w.distance) == o.dist[w.vertex][w.source], || {
            format!("{w:?}: wrong distance")
        })?;
    }
    let mut solid = 0;
    for dims in [
        vec![3, 3],
        vec![5, 5],
        vec![8, 8],
        vec![10, 10],
        vec![4, 7],
        vec![3, 3, 3],
        vec![4, 4, 4],
    ] {
        let gg = grid_d(&dims).map_err(|e| e.to_string())?;
        let dm = DistanceMatrix::compute(&gg.graph).map_err(|e| e.to_string())?;
        let report = boundary_from(&gg.graph, &dm).map_err(|e| e.to_string())?;
        let entries = classify_prop4(&gg, &dm, &report, true).map_err(|e| e.to_string())?;
        ensure(entries.is_empty(), || {
            format!("grid {dims:?} has full-degree boundary vertices")
        })?;
        solid += 1;
    }
    Ok(format!(
        "annulus: {} full-degree boundary vertices, {witnesses} verified witnesses; {solid} solid grids empty",
        expected.len()
    ))
}

fn sector_sharpness() -> Outcome {
    for (r, alpha) in [(1.0, 0.01), (2.0, 0.05)] {
        let s = sector_check(r, alpha, DEFAULT_MAX_ALPHA).map_err(|e| e.to_string())?;
        ensure(s.ratio == Ratio::from_integer(2), || {
            format!("({r}, {alpha}): ratio {}", s.ratio)
        })?;
        let arc = 2.0 * std::f64::consts::PI * r * alpha;
        let area = alpha * std::f64::consts::PI * r * r;
        let numeric = arc / (area / r);
        ensure((numeric - 2.0).abs() < 1e-12, || {
            format!("({r}, {alpha}): numeric ratio {numeric}")
        })?;
    }
    let h = 1e-3;
    let plane: Vec<Vec<f64>> = (0..12)
        .flat_map(|k| {
            let t = k as f64 * std::f64::consts::PI / 6.0;
            [0.5, 1.0, 2.0].map(|s| vec![s * t.cos(), s * t.sin()])
        })
        .collect();
    let space = vec![
        vec![0.5, 0.0, 0.0],
        vec![0.3, -0.4, 0.6],
        vec![1.0, 1.0, 1.0],
    ];
    let dev2 = radial_laplacian_identity_check(2, &plane, h).map_err(|e| e.to_string())?;
    let dev3 = radial_laplacian_identity_check(3, &space, h).map_err(|e| e.to_string())?;
    let worst = dev2.max(dev3);
    ensure(worst < 1e-5, || format!("radial deviation {worst:e}"))?;
    Ok(format!(
        "ratio 2/1 at (1, 0.01) and (2, 0.05); radial deviation {worst:.2e} at h = 1e-3, |x| ≥ 0.5"
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        fs::write(&path, text).map_err(|e| e.to_string())?;
        fs::read(&path).map_err(|e| e.to_string())
    };
    let generated = |family: &str, params: &str, seed: u64| -> Result<String, String> {
        let built = Family::parse(family, params)
            .and_then(|f| f.build(seed))
            .map_err(|e| e.to_string())?;
        Ok(write_edge_list(&built.graph))
    };
    for (family, params, seed) in [
        ("er", "30,0.2", 42),
        ("tree", "50", 7),
        ("annulus", "0.4,1.0,0.2", 0),
    ] {
        let first = write(&format!("{family}-a.el"), &generated(family, params, seed)?)?;
        let second = write(&format!("{family}-b.el"), &generated(family, params, seed)?)?;
        ensure(first == second, || {
            format!("{family} generation differs between runs")
        })?;
    }

    let run_verify = |threads: usize| -> Result<Vec<u8>, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| {
            let mut out = String::new();
            let g = erdos_renyi(30, 0.3, 42).map_err(|e| e.to_string())?;
            let annulus = Family::parse("annulus", "0.4,1.0,0.2")
                .and_then(|f| f.build(0))
                .map_err(|e| e.to_string())?;
            for (graph, grid) in [(&g, None), (&annulus.graph, annulus.grid.as_ref())] {
                let verdict = verify_graph(graph, &Check::ALL, grid).map_err(|e| e.to_string())?;
                out += &serde_json::to_string_pretty(&verdict).map_err(|e| e.to_string())?;
                let report = boundary(graph).map_err(|e| e.to_string())?;
                out += &serde_json::to_string(&report.to_json(true, None))
                    .map_err(|e| e.to_string())?;
            }
            write(&format!("verify-{threads}.json"), &out)
        })
    };
    let reference = run_verify(1)?;
    for threads in [2, 4, 8] {
        ensure(run_verify(threads)? == reference, || {
            format!("verify output differs at {threads} threads")
        })?;
    }
    Ok("generation and verify output byte-identical across runs and 1/2/4/8 threads".into())
}

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            number: 1,
            name: "grid facts",
            budget: Duration::from_secs(10),
            run: grid_facts,
        },
        Criterion {
            number: 2,
            name: "exhaustive n ≤ 6",
            budget: Duration::from_secs(300),
            run: exhaustive_small_graphs,
        },
        Criterion {
            number: 3,
            name: "tree characterization",
            budget: Duration::from_secs(30),
            run: tree_characterization,
        },
        Criterion {
            number: 4,
            name: "randomized stress",
            budget: Duration::from_secs(120),
            run: randomized_stress,
        },
        Criterion {
            number: 5,
            name: "lattice non-uniqueness",
            budget: Duration::from_secs(30),
            run: lattice_non_uniqueness,
        },
        Criterion {
            number: 6,
            name: "sector sharpness",
            budget: Duration::from_secs(30),
            run: sector_sharpness,
        },
        Criterion {
            number: 7,
            name: "determinism",
            budget: Duration::from_secs(60),
            run: determinism,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!(
                "{detail}; took {elapsed:.2?}, budget {:?}",
                c.budget
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {} ({}): {detail} [{elapsed:.2?}]",
                c.number, c.name
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {} ({}): {why} [{elapsed:.2?}]",
                    c.number, c.name
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
