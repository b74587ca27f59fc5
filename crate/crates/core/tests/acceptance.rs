//! One line per acceptance criterion. Run with `--nocapture` to see them.

mod common;

use common::{oracle_residue, random_pbw};
use qonsager::freealg::CMode;
use qonsager::pbw::{pbw_count, pbw_multiply, PbwElement};
use qonsager::rewrite::shared_system;
use qonsager::suite::{run_suites, Status};
use qonsager::Root;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

fn suites(names: &[&str], bound: usize) -> Check {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let rep = run_suites(&names, bound, None).map_err(|e| e.to_string())?;
    let bad: Vec<String> = rep
        .items
        .iter()
        .filter(|i| i.status != Status::Pass)
        .map(|i| format!("{} {} [{}]: {:?}", i.suite, i.identity, i.params, i.status))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} items at bound {bound}", rep.items.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn all(checks: Vec<Check>) -> Check {
    let mut ok = Vec::new();
    for c in checks {
        ok.push(c?);
    }
    Ok(ok.join(", "))
}

fn dims() -> Check {
    let expected = [1, 2, 4, 8, 14, 24, 40, 64, 100];
    for mode in [CMode::Generic, CMode::Zero] {
        let sys = shared_system(mode, 8).map_err(|e| e.to_string())?;
        for (d, &e) in expected.iter().enumerate() {
            let n = sys.normal_count(d).map_err(|e| e.to_string())?;
            if n != e || pbw_count(d) != e {
                return Err(format!("{mode} degree {d}: {n} normal words, {} monomials", pbw_count(d)));
            }
        }
    }
    Ok("dimensions 1..100 in both modes".into())
}

fn oracle() -> Check {
    let sys = shared_system(CMode::Generic, 10).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(20261019);
    let trials: Vec<(PbwElement, PbwElement)> = (0..200)
        .map(|_| {
            let hx = rng.gen_range(0..=10);
            let hy = rng.gen_range(0..=10 - hx);
            (random_pbw(&mut rng, hx), random_pbw(&mut rng, hy))
        })
        .collect();
    let roots = Root::up_to_height(10);
    let singles: Vec<(PbwElement, PbwElement)> = roots
        .iter()
        .flat_map(|&g| roots.iter().map(move |&h| (g, h)))
        .filter(|(g, h)| g.height() + h.height() <= 10)
        .map(|(g, h)| (PbwElement::root(g), PbwElement::root(h)))
        .collect();
    let n_single = singles.len();
    let bad = trials
        .par_iter()
        .chain(singles.par_iter())
        .filter(|(x, y)| !oracle_residue(x, y, &sys).is_zero())
        .count();
    if bad > 0 {
        return Err(format!("{bad} products disagree with the free algebra"));
    }
    for _ in 0..50 {
        let hs: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=4)).collect();
        let (x, y, z) = (random_pbw(&mut rng, hs[0]), random_pbw(&mut rng, hs[1]), random_pbw(&mut rng, hs[2]));
        if pbw_multiply(&pbw_multiply(&x, &y), &z) != pbw_multiply(&x, &pbw_multiply(&y, &z)) {
            return Err(format!("association differs on ({x}) ({y}) ({z})"));
        }
    }
    Ok(format!("200 random products, {n_single} root pairs, 50 triples"))
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("braid automorphism T0", Box::new(|| suites(&["t0-automorphism"], 10))),
        (
            "T1 on B_delta and braid translates",
            Box::new(|| all(vec![suites(&["t1-bdelta"], 12), suites(&["braid-translates"], 15)])),
        ),
        ("B_delta against real root vectors", Box::new(|| suites(&["bdelta-real"], 7))),
        ("C_m and D_m ordered forms", Box::new(|| suites(&["cm-ordered", "dm-ordered"], 10))),
        ("real-real relations", Box::new(|| suites(&["real-real", "real-real-mixed"], 12))),
        (
            "imaginary-real relations",
            Box::new(|| suites(&["b1-bndelta", "bnd-real-low", "bnd-real-high"], 12)),
        ),
        (
            "imaginary root vectors commute",
            Box::new(|| suites(&["imaginary-commute", "lemma-ndeltadelta"], 10)),
        ),
        (
            "closed forms and the F_n recursion",
            Box::new(|| {
                all(vec![
                    suites(&["rn-closed-form", "com2", "fn-alt"], 10),
                    // F_6 has degree 11
                    suites(&["fn-recursion"], 11),
                ])
            }),
        ),
        (
            "PBW dimensions and independence",
            Box::new(|| all(vec![dims(), suites(&["pbw-independence"], 8)])),
        ),
        ("top components", Box::new(|| suites(&["top-component"], 7))),
        ("structure constant ring", Box::new(|| suites(&["theorem2-coefficients"], 12))),
        ("classical limit", Box::new(|| suites(&["classical-limit"], 12))),
        ("PBW oracle equivalence", Box::new(oracle)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
