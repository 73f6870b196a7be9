//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use balloon_core::RootedTree;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distribution {
    Uniform,
    PowerLaw,
    Equal,
}

impl Distribution {
    pub const ALL: [Distribution; 3] = [Distribution::Uniform, Distribution::PowerLaw, Distribution::Equal];
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "powerlaw" => Ok(Self::PowerLaw),
            "equal" => Ok(Self::Equal),
            _ => Err(format!("unknown distribution {s:?} (expected uniform, powerlaw or equal)")),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Uniform => "uniform",
            Self::PowerLaw => "powerlaw",
            Self::Equal => "equal",
        })
    }
}

/// `n` positive radii summing to one.
///
/// `Uniform` draws from `(0, 1]`, `PowerLaw` from a Pareto law with density
/// proportional to `x^-2` on `[1, ∞)`, `Equal` gives every balloon `1/n`.
pub fn radii(n: usize, dist: Distribution, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<f64> = match dist {
        Distribution::Uniform => (0..n).map(|_| 1.0 - rng.random::<f64>()).collect(),
        Distribution::PowerLaw => (0..n).map(|_| 1.0 / (1.0 - rng.random::<f64>())).collect(),
        Distribution::Equal => return vec![1.0 / n as f64; n],
    };
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|r| r / sum).collect()
}

/// Random tree on `n ≥ 1` nodes. `Uniform` attaches each node to a uniformly
/// chosen earlier node, `PowerLaw` attaches proportionally to degree
/// (preferential attachment), `Equal` gives the complete binary tree in
/// heap order.
pub fn tree(n: usize, dist: Distribution, seed: u64) -> RootedTree {
    let n = n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parents: Vec<Option<usize>> = match dist {
        Distribution::Uniform => (0..n).map(|v| (v > 0).then(|| rng.random_range(0..v))).collect(),
        Distribution::PowerLaw => {
            // each node appears once per incident edge end, plus once for itself
            let mut urn = vec![0usize];
            let mut parents = vec![None];
            for v in 1..n {
                let p = urn[rng.random_range(0..urn.len())];
                parents.push(Some(p));
                urn.extend([p, v]);
            }
            parents
        }
        Distribution::Equal => (0..n).map(|v| v.checked_sub(1).map(|w| w / 2)).collect(),
    };
    RootedTree::from_parents(parents).expect("generated parent maps are trees")
}
