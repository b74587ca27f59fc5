mod common;

use common::{oracle_residue, random_pbw};
use qonsager::freealg::CMode;
use qonsager::pbw::{pbw_multiply, straighten, PbwElement};
use qonsager::rewrite::shared_system;
use qonsager::Root;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[test]
fn random_products_match_the_free_algebra() {
    let sys = shared_system(CMode::Generic, 10).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pairs: Vec<(PbwElement, PbwElement)> = (0..200)
        .map(|_| {
            let hx = rng.gen_range(0..=10);
            let hy = rng.gen_range(0..=10 - hx);
            (random_pbw(&mut rng, hx), random_pbw(&mut rng, hy))
        })
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter(|(x, y)| !oracle_residue(x, y, &sys).is_zero())
        .map(|(x, y)| format!("({x}) * ({y})"))
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn all_single_root_pairs() {
    let sys = shared_system(CMode::Generic, 10).unwrap();
    let roots = Root::up_to_height(10);
    let pairs: Vec<(Root, Root)> = roots
        .iter()
        .flat_map(|&g| roots.iter().map(move |&h| (g, h)))
        .filter(|(g, h)| g.height() + h.height() <= 10)
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter(|(g, h)| !oracle_residue(&PbwElement::root(*g), &PbwElement::root(*h), &sys).is_zero())
        .map(|(g, h)| format!("{g}*{h}"))
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn products_associate() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let hs: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=4)).collect();
        let (x, y, z) = (random_pbw(&mut rng, hs[0]), random_pbw(&mut rng, hs[1]), random_pbw(&mut rng, hs[2]));
        let left = pbw_multiply(&pbw_multiply(&x, &y), &z);
        let right = pbw_multiply(&x, &pbw_multiply(&y, &z));
        assert_eq!(left, right, "({x}) ({y}) ({z})");
    }
}

#[test]
fn straightening_stays_ordered_and_bounded() {
    let roots = Root::up_to_height(9);
    for &g in &roots {
        for &h in &roots {
            if h < g && g.height() + h.height() <= 9 {
                let v = straighten(g, h).unwrap();
                for (m, _) in v.terms() {
                    assert!(m.roots().windows(2).all(|w| w[0] <= w[1]), "{g}*{h} gives {m}");
                    assert!(m.height() <= g.height() + h.height());
                }
            }
        }
    }
}
