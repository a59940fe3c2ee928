//! Verification suites run by `farey verify`.
//!
//! Each suite expands into a list of independent checks over its parameter
//! grid. Checks run on the rayon pool and are reported in grid order.

use farey_core::arith::{gcd, is_prime};
use farey_core::coverings::{
    claimed_kernel_order, kernel_index, parallel_product_darts, tensor_product,
    verify_complete_graph_covering, verify_double_cover, verify_map_covering,
};
use farey_core::farey::{build_graph, verify_walk_counts, verify_zero_determinant_entries, vertex_count};
use farey_core::hecke::{build_hecke_graph, hecke_spectrum, verify_hecke_covering, HeckeFamily};
use farey_core::psl2::{group_order, kernel_size, DEFAULT_DART_CAP};
use farey_core::spectra::{
    closed_form_spectrum, compare_spectra, numeric_spectrum, verify_block_structure, Surd, DEFAULT_EIGEN_TOL,
};
use farey_core::{Result, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::Suite;

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub check: String,
    pub passed: bool,
    pub verdict: String,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub max_n: u64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

type Job = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;

struct Plan {
    jobs: Vec<(&'static str, String, Job)>,
}

impl Plan {
    fn add(&mut self, suite: &'static str, check: String, job: impl Fn() -> Result<Verdict> + Send + Sync + 'static) {
        self.jobs.push((suite, check, Box::new(job)));
    }
}

pub fn run(suite: Suite, max_n: u64, tol: f64) -> Report {
    let mut plan = Plan { jobs: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Coverings {
        coverings(&mut plan, max_n);
    }
    if all || suite == Suite::Products {
        products(&mut plan, max_n, tol);
    }
    if all || suite == Suite::Blocks {
        blocks(&mut plan, max_n);
    }
    if all || suite == Suite::Spectra {
        spectra(&mut plan, max_n, tol);
    }
    if all || suite == Suite::Hecke {
        hecke(&mut plan, max_n, tol);
    }
    let checks: Vec<CheckRecord> = plan
        .jobs
        .into_par_iter()
        .map(|(suite, check, job)| {
            let verdict = job().unwrap_or_else(|e| Verdict::fail(format!("error: {e}")));
            CheckRecord { suite, check, passed: verdict.is_pass(), verdict: verdict.to_string() }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
    Report { max_n, checks, summary }
}

fn expect_eq(what: &str, got: u64, want: u64) -> Verdict {
    if got == want {
        Verdict::Pass
    } else {
        Verdict::fail(format!("{what}: got {got}, expected {want}"))
    }
}

fn twice_odd(n: u64) -> bool {
    n % 4 == 2
}

fn coverings(plan: &mut Plan, max_n: u64) {
    for n in 2..=max_n {
        for m in (2..n).filter(|m| n % m == 0) {
            plan.add("coverings", format!("fiber adjacency ({n},{m}) d={}", n / m), move || verify_map_covering(n, m));
            if n <= DEFAULT_DART_CAP {
                // Reports the d³ (or 4) count next to the index it is checked against.
                let claimed = claimed_kernel_order(n, m).unwrap_or(0);
                plan.add("coverings", format!("kernel order ({n},{m}) claimed={claimed}"), move || {
                    Ok(expect_eq("kernel size vs index", kernel_size(n, m)?, kernel_index(n, m)?))
                });
            }
        }
    }
    for p in (3..=max_n).filter(|&p| is_prime(p)) {
        plan.add("coverings", format!("complete graph K_{} covering p={p}", p + 1), move || {
            verify_complete_graph_covering(p)
        });
    }
}

fn products(plan: &mut Plan, max_n: u64, tol: f64) {
    for l in 2..=max_n {
        for m in (l + 1)..=max_n {
            if gcd(l, m) != 1 || l * m > max_n {
                continue;
            }
            plan.add("products", format!("tensor spectrum ({l},{m})"), move || {
                let g = tensor_product(&build_graph(l)?, &build_graph(m)?);
                let exact = closed_form_spectrum(l)?.product(&closed_form_spectrum(m)?);
                Ok(compare_spectra(&exact, &numeric_spectrum(&g, DEFAULT_EIGEN_TOL)?, tol))
            });
            if l * m <= DEFAULT_DART_CAP {
                let expected_factor = if l == 2 || m == 2 { 1 } else { 2 };
                plan.add("products", format!("parallel product darts ({l},{m})"), move || {
                    let darts = parallel_product_darts(l, m)?.len() as u64;
                    Ok(expect_eq("darts", darts, group_order(l * m)? / expected_factor))
                });
            }
            if l >= 3 && !twice_odd(l) && !twice_odd(m) {
                plan.add("products", format!("double cover ({l},{m})"), move || verify_double_cover(l, m));
            }
        }
    }
}

fn blocks(plan: &mut Plan, max_n: u64) {
    for n in 2..=max_n {
        plan.add("blocks", format!("walk counts n={n}"), move || verify_walk_counts(&build_graph(n)?));
        plan.add("blocks", format!("zero-determinant entries n={n}"), move || {
            verify_zero_determinant_entries(&build_graph(n)?)
        });
    }
    for p in (5..=max_n).filter(|&p| is_prime(p)) {
        plan.add("blocks", format!("block structure p={p}"), move || verify_block_structure(p));
    }
}

fn spectra(plan: &mut Plan, max_n: u64, tol: f64) {
    for n in 2..=max_n {
        plan.add("spectra", format!("exact vs numeric n={n}"), move || {
            let exact = closed_form_spectrum(n)?;
            let invariants = expect_eq("total multiplicity", exact.total_multiplicity(), vertex_count(n)?)
                .and_then(|| if exact.is_traceless() { Verdict::Pass } else { Verdict::fail("nonzero trace") })
                .and_then(|| {
                    if exact.largest() == Some(Surd::integer(n as i64)) {
                        Verdict::Pass
                    } else {
                        Verdict::fail("largest eigenvalue is not the degree")
                    }
                });
            Ok(invariants.and_then(|| {
                match build_graph(n).and_then(|g| numeric_spectrum(&g, DEFAULT_EIGEN_TOL)) {
                    Ok(numeric) => compare_spectra(&exact, &numeric, tol),
                    Err(e) => Verdict::fail(format!("error: {e}")),
                }
            }))
        });
    }
}

fn hecke(plan: &mut Plan, max_n: u64, tol: f64) {
    for family in [HeckeFamily::Four, HeckeFamily::Six] {
        let q = family.q();
        for n in (2..=max_n).filter(|&n| family.admits(n)) {
            plan.add("hecke", format!("covering q={q} n={n}"), move || verify_hecke_covering(family, n));
            plan.add("hecke", format!("spectrum q={q} n={n}"), move || {
                let g = build_hecke_graph(family, n)?;
                Ok(compare_spectra(&hecke_spectrum(family, n)?, &numeric_spectrum(&g, DEFAULT_EIGEN_TOL)?, tol))
            });
            plan.add("hecke", format!("diameter q={q} n={n}"), move || {
                let g = build_hecke_graph(family, n)?;
                let d = g.diameter()?;
                Ok(if d > 4 || (n >= 7 && d != 4) {
                    Verdict::fail(format!("diameter {d}"))
                } else if g.bipartition().is_none() {
                    Verdict::fail("not bipartite")
                } else {
                    Verdict::Pass
                })
            });
        }
    }
}
