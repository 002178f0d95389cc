//! The double of a finite group with a conjugation crossing.
//!
//! Builds the S3 double, runs the crossed quasitriangularity suites on
//! it, and prints the closed forms the checks pin down: the canonical
//! two-leg element, the crossed inner multiplier, and its grouplike.
//!
//!     cargo run --example crossed_double

use multiplier_hopf::cograded::{
    check_canonical_w, check_pi_qt_axioms, check_pi_yang_baxter, check_u_tilde, compute_u_tilde,
    group_double,
};
use multiplier_hopf::group::s3;
use multiplier_hopf::linalg::Elem;
use multiplier_hopf::report::SuiteRun;

fn main() {
    let g = s3();
    let pq = group_double(&g, None);
    let inst = &pq.qt.inst;

    println!("instance: {}", inst.name);
    println!("basis: {} elements u[p]><d[h]", (inst.window)(0).len());
    println!();

    let u = compute_u_tilde(&pq);
    println!("crossed inner multiplier on a few basis elements:");
    for (p, h) in [(0usize, 1usize), (1, 3), (3, 4), (2, 0)] {
        let x = Elem::basis((p, h));
        println!(
            "  u~ . {} = {}",
            inst.render(&x),
            inst.render(&u.left_act(&x))
        );
    }
    println!();

    let mut failures = 0;
    for (name, run_suite) in [
        ("pi-qt-axioms", 0usize),
        ("pi-yang-baxter", 1),
        ("u-tilde", 2),
        ("thm-3-11-1", 3),
    ] {
        let mut run = SuiteRun::new(name, inst.name.clone());
        match run_suite {
            0 => check_pi_qt_axioms(&pq, 2, 7, &mut run),
            1 => check_pi_yang_baxter(&pq, 2, 7, &mut run),
            2 => check_u_tilde(&pq, 2, 7, &mut run),
            _ => check_canonical_w(&pq, &mut run),
        }
        let rep = run.finish();
        if !matches!(rep.status, multiplier_hopf::report::Status::Pass) {
            failures += 1;
        }
        println!(
            "suite {:<16} {:<6} ({} samples)",
            rep.name,
            rep.status.label(),
            rep.samples_run
        );
    }
    std::process::exit(if failures == 0 { 0 } else { 1 });
}
