use balloon_core::checker::TREE_EXPONENT;
use balloon_core::{check_drawing, draw_tree, heavy_decomposition, RootedTree};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn assert_valid(t: &RootedTree) {
    let d = draw_tree(t).unwrap();
    let report = check_drawing(&d, TOL);
    assert!(report.pass(), "n={} {:?}", t.len(), &report.violations[..report.violations.len().min(5)]);
    let n = t.len() as f64;
    assert!(d.stats.covering_radius <= n.powf(TREE_EXPONENT) + TOL);
    assert!(d.stats.min_edge_length.is_none_or(|m| m >= 1.0 - TOL));
    assert!(d.stats.min_resolution_slack.is_none_or(|s| s >= -TOL));
}

fn random_tree(n: usize, seed: u64) -> RootedTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parents = (0..n).map(|v| if v == 0 { None } else { Some(rng.random_range(0..v)) }).collect();
    RootedTree::from_parents(parents).unwrap()
}

#[test]
fn single_node() {
    let d = draw_tree(&RootedTree::path(1).unwrap()).unwrap();
    assert_eq!(d.exclusive.len(), 1);
    assert_eq!(d.exclusive[0].radius, 1.0);
    assert_eq!(d.stats.covering_radius, 1.0);
    assert!(check_drawing(&d, TOL).pass());
}

#[test]
fn path_of_three() {
    let d = draw_tree(&RootedTree::path(3).unwrap()).unwrap();
    assert!(d.stats.min_edge_length.unwrap() >= 1.0);
    // the middle node has degree two, so its edges are opposite
    let a = d.positions[0] - d.positions[1];
    let b = d.positions[2] - d.positions[1];
    assert!((a.dot(b) / (a.norm() * b.norm()) + 1.0).abs() < 1e-12);
    assert!(check_drawing(&d, TOL).pass());
}

#[test]
fn star_with_five_leaves() {
    let t = RootedTree::star(5).unwrap();
    let d = draw_tree(&t).unwrap();
    assert!(check_drawing(&d, TOL).pass());
    let x_root = greedy_root_radius(4);
    assert!(x_root <= 2.0 * 4.0);
    assert!(d.stats.covering_radius <= 2.0 * (x_root + 1.0) + TOL);
}

fn greedy_root_radius(leaves: usize) -> f64 {
    balloon_core::greedy_one_free(&vec![1.0; leaves]).unwrap().covering_radius
}

#[test]
fn families() {
    for n in [2, 3, 5, 10, 64, 257] {
        assert_valid(&RootedTree::path(n).unwrap());
        assert_valid(&RootedTree::star(n).unwrap());
    }
    for h in 0..=7 {
        assert_valid(&RootedTree::complete(2, h).unwrap());
    }
    for h in 0..=4 {
        assert_valid(&RootedTree::complete(3, h).unwrap());
    }
    assert_valid(&RootedTree::complete(5, 3).unwrap());
}

#[test]
fn caterpillars_and_brooms() {
    // long spine with a leaf at every node, then a broom
    let n = 120;
    let parents = (0..n).map(|v: usize| match v {
        0 => None,
        v if v % 2 == 1 => Some(v - 1),
        v => Some(v - 2),
    });
    let t = RootedTree::from_parents(parents.collect()).unwrap();
    assert_valid(&t);
    let broom = (0..80).map(|v| match v {
        0 => None,
        v if v < 40 => Some(v - 1),
        _ => Some(39),
    });
    assert_valid(&RootedTree::from_parents(broom.collect()).unwrap());
}

#[test]
fn light_depth_is_logarithmic() {
    for seed in 0..20 {
        let t = random_tree(300, seed);
        let h = heavy_decomposition(&t);
        let worst = (0..t.len()).map(|v| h.light_depth(v)).max().unwrap();
        assert!(worst as f64 <= (t.len() as f64).log2());
        assert!(h.depth[0] as f64 <= (t.len() as f64).log2().floor() + 1.0);
        let mut covered = vec![0; t.len()];
        for p in &h.paths {
            for &v in p {
                covered[v] += 1;
            }
        }
        assert!(covered.iter().all(|&c| c == 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_trees_draw_cleanly(n in 1usize..200, seed in any::<u64>()) {
        assert_valid(&random_tree(n, seed));
    }

    #[test]
    fn preferential_trees_draw_cleanly(n in 1usize..200, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut targets = vec![0usize];
        let mut parents = vec![None];
        for v in 1..n {
            let p = targets[rng.random_range(0..targets.len())];
            parents.push(Some(p));
            targets.push(p);
            targets.push(v);
        }
        assert_valid(&RootedTree::from_parents(parents).unwrap());
    }
}
