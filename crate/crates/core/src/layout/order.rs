//! Weak ordering of balloon radii.
//!
//! A sequence is weakly ordered when its first element is the minimum, the
//! first `⌊n/2⌋ − 1` elements do not exceed the lower median, position
//! `⌊n/2⌋` holds the lower median, and the suffix after it is again weakly
//! ordered. The greedy layout only looks at the smallest and largest balloon
//! of each round, so a weak order gives the same layers as a full sort and
//! can be produced with linear-time selection.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

pub(crate) fn validate_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::InvalidArgument("at least one radius is required"));
    }
    if radii.iter().any(|r| *r <= 0.0 || !r.is_finite()) {
        return Err(Error::InvalidArgument("radii must be positive and finite"));
    }
    Ok(())
}

/// Group sizes of the recursive weak-order definition for `n` elements.
fn weak_groups(n: usize) -> Vec<usize> {
    let mut groups = Vec::new();
    let mut m = n;
    while m > 1 {
        let h = m / 2;
        groups.push(h);
        m -= h;
    }
    if m == 1 {
        groups.push(1);
    }
    groups
}

/// Permutation of `0..radii.len()` that splits the radii into consecutive
/// groups of the given sizes, smallest radii first. Within each group the
/// minimum comes first and the maximum last. Ties are broken by index.
pub(crate) fn order_by_groups(radii: &[f64], groups: &[usize]) -> Vec<usize> {
    let cmp = |a: &usize, b: &usize| -> Ordering {
        radii[*a].total_cmp(&radii[*b]).then(a.cmp(b))
    };
    let mut idx: Vec<usize> = (0..radii.len()).collect();
    let mut start = 0;
    for &k in groups {
        if k == 0 {
            continue;
        }
        let rest = &mut idx[start..];
        if k < rest.len() {
            rest.select_nth_unstable_by(k - 1, cmp);
        } else {
            // the last group: only its extremes matter
            let max_pos = (0..rest.len()).max_by(|&a, &b| cmp(&rest[a], &rest[b])).unwrap_or(0);
            rest.swap(max_pos, k - 1);
        }
        let group = &mut rest[..k];
        if k > 1 {
            let min_pos = (0..k - 1).min_by(|&a, &b| cmp(&group[a], &group[b])).unwrap_or(0);
            group.swap(0, min_pos);
        }
        start += k;
    }
    idx
}

/// Returns a permutation `p` such that `p.iter().map(|&i| radii[i])` is
/// weakly ordered. Runs in linear time.
pub fn weakly_order(radii: &[f64]) -> Result<Vec<usize>> {
    validate_radii(radii)?;
    Ok(order_by_groups(radii, &weak_groups(radii.len())))
}

/// Checks the recursive weak-order definition literally, with the median
/// taken as the `⌊n/2⌋`-th smallest element.
pub fn is_weakly_ordered(radii: &[f64]) -> bool {
    let mut rest = radii;
    let mut scratch: Vec<f64> = Vec::with_capacity(radii.len());
    while rest.len() > 1 {
        let n = rest.len();
        let h = n / 2;
        let min = rest.iter().copied().fold(f64::INFINITY, f64::min);
        if rest[0] != min {
            return false;
        }
        scratch.clear();
        scratch.extend_from_slice(rest);
        let (_, median, _) = scratch.select_nth_unstable_by(h - 1, |a, b| a.total_cmp(b));
        let median = *median;
        if rest[..h - 1].iter().any(|r| *r > median) || rest[h - 1] != median {
            return false;
        }
        rest = &rest[h..];
    }
    true
}
