//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use balloon::{bench, gen};
use balloon_core::checker::{contact_layer_bound, tiny_oracle, TREE_EXPONENT};
use balloon_core::geometry::{
    alpha, compact_factor, disks_interior_disjoint, ray_clear_of_disk, wedge_center_distance,
};
use balloon_core::{
    check_drawing, check_layout, draw_tree, greedy_balloon, greedy_two_free, layout, layout_with_order,
    weakly_order, Disk, FreeSpokes, LayerKind, Layout, RootedTree, SpokeSet, Vec2, KAPPA,
};
use gen::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    note: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Seeded instance `i` of the random harness.
fn instance(i: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB411_0000 ^ i);
    let n = rng.random_range(1..=1024);
    let dist = Distribution::ALL[(i % 3) as usize];
    gen::radii(n, dist, i)
}

fn harness(variant: FreeSpokes, extra: impl Fn(&Layout) -> Option<String>) -> Outcome {
    let start = Instant::now();
    let bound = variant.bound();
    let mut worst: f64 = 0.0;
    for i in 0..10_000u64 {
        let radii = instance(i);
        let l = match layout(&radii, variant) {
            Ok(l) => l,
            Err(e) => return outcome(false, format!("instance {i}: {e}")),
        };
        let report = check_layout(&l, variant, 1e-9);
        if !report.pass() {
            return outcome(false, format!("instance {i}: {:?}", report.violations.first()));
        }
        if l.covering_radius > bound + 1e-9 {
            return outcome(false, format!("instance {i}: R = {}", l.covering_radius));
        }
        if let Some(msg) = extra(&l) {
            return outcome(false, format!("instance {i}: {msg}"));
        }
        worst = worst.max(l.covering_radius);
    }
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(60),
        format!("max R = {worst:.12}, bound {bound:.12}, {:.2?}", elapsed),
    )
}

fn criterion_1() -> Outcome {
    harness(FreeSpokes::Zero, |l| (!l.free_spokes.is_empty()).then(|| "unexpected free spoke".into()))
}

fn criterion_2() -> Outcome {
    harness(FreeSpokes::One, |l| (l.free_spokes.len() != 1).then(|| format!("{} free spokes", l.free_spokes.len())))
}

fn criterion_3() -> Outcome {
    harness(FreeSpokes::Two, |l| {
        if l.free_spokes.len() != 2 {
            return Some(format!("{} free spokes", l.free_spokes.len()));
        }
        let a = l.spoke_angle(l.free_spokes[0] - 1);
        let b = l.spoke_angle(l.free_spokes[1] - 1);
        let d = (b - a).rem_euclid(TAU);
        let sep = d.min(TAU - d);
        (sep < 2.0 * PI / 3.0 - 1e-9).then(|| format!("free angle {sep}"))
    })
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for r in [1.0, 0.3, 7.5] {
        let l = greedy_balloon(&[r]).unwrap();
        if l.covering_radius != 2.0 * r {
            failures.push(format!("n=1 r={r}: {}", l.covering_radius));
        }
    }
    let half = greedy_balloon(&[0.5, 0.5]).unwrap().covering_radius;
    if half != 1.5 {
        failures.push(format!("[1/2,1/2]: {half}"));
    }
    let quarter = greedy_balloon(&[0.25; 4]).unwrap().covering_radius;
    if quarter != 1.0 {
        failures.push(format!("[1/4]x4: {quarter}"));
    }
    let single = greedy_two_free(&[1.0]).unwrap().covering_radius;
    if (single - alpha(4.0 * PI / 5.0).unwrap()).abs() > 1e-12 {
        failures.push(format!("two-free [1]: {single}"));
    }
    let pair = greedy_two_free(&[0.5, 0.5]).unwrap();
    let expect = 0.5 * alpha(4.0 * PI / 7.0).unwrap();
    let b1 = pair.placements.iter().find(|p| p.balloon == 0).unwrap();
    let covering = b1.center_distance + pair.radii[0];
    if (covering - expect).abs() > 1e-12 {
        failures.push(format!("two-free [1/2,1/2] B1: {covering} vs {expect}"));
    }
    outcome(failures.is_empty(), if failures.is_empty() { "all fixtures exact".into() } else { failures.join("; ") })
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let eps = 1e-3;
    let radii = [eps, eps, 1.0 - 2.0 * eps];
    let spokes = SpokeSet::uniform(5).unwrap();
    let oracle = tiny_oracle(&radii, &spokes, 2, 2.0 * PI / 3.0).unwrap();
    let greedy = greedy_two_free(&radii).unwrap().covering_radius;
    let elapsed = start.elapsed();
    let ok = oracle >= KAPPA - 0.01 && greedy <= KAPPA + 1e-12 && elapsed < Duration::from_secs(1);
    outcome(ok, format!("oracle {oracle:.6} <= greedy {greedy:.6} <= KAPPA {KAPPA:.6}, {elapsed:.2?}"))
}

/// Worst balloon of the previous layer touches the second spoke and the
/// radius-`s` circle; a balloon at the compacted line must stay clear of it.
fn compact_scene(beta: f64, s: f64, r2: f64) -> bool {
    let f = compact_factor(beta).unwrap();
    let r = s * beta.sin() / (beta.sin() + 1.0);
    let worst = Disk { center: Vec2::from_polar(s - r, beta), radius: r };
    let placed = Disk { center: Vec2::new(s * f + r2, 0.0), radius: r2 };
    disks_interior_disjoint(&worst, &placed, 1e-12) && ray_clear_of_disk(Vec2::ZERO, Vec2::new(1.0, 0.0), &worst, 1e-12)
}

fn criterion_6() -> Outcome {
    let exact = alpha(PI / 3.0).unwrap() == 3.0 && alpha(PI).unwrap() == 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for _ in 0..1_000_000 {
        let r = 1e-3 + rng.random::<f64>() * 1e3;
        let phi = (1.0 - rng.random::<f64>()) * TAU;
        let lhs = wedge_center_distance(r, phi).unwrap() + r;
        let rhs = alpha(phi).unwrap() * r;
        worst = worst.max((lhs - rhs).abs() / rhs);
    }
    let mut scene_failures = 0;
    for _ in 0..10_000 {
        let beta = (1.0 - rng.random::<f64>()) * PI / 2.0;
        let s = 1e-3 + rng.random::<f64>() * 10.0;
        let r2 = 1e-6 + rng.random::<f64>() * 5.0;
        if !compact_scene(beta, s, r2) {
            scene_failures += 1;
        }
    }
    outcome(
        exact && worst <= 1e-12 && scene_failures == 0,
        format!("exact identities {exact}, wedge identity max rel err {worst:.2e}, {scene_failures} compact scene failures"),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut corpus: Vec<(String, RootedTree)> = Vec::new();
    for n in [1, 2, 3, 5, 17, 100, 512] {
        corpus.push((format!("path {n}"), RootedTree::path(n).unwrap()));
    }
    for leaves in [1, 2, 3, 6, 20, 200] {
        corpus.push((format!("star {leaves}"), RootedTree::star(leaves).unwrap()));
    }
    for h in 1..=8 {
        corpus.push((format!("binary h{h}"), RootedTree::complete(2, h).unwrap()));
    }
    for h in 1..=5 {
        corpus.push((format!("ternary h{h}"), RootedTree::complete(3, h).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..500u64 {
        let n = rng.random_range(1..=512);
        let dist = if i % 2 == 0 { Distribution::Uniform } else { Distribution::PowerLaw };
        corpus.push((format!("random {i} ({dist}, n={n})"), gen::tree(n, dist, i)));
    }

    let mut exponents = Vec::new();
    for (name, t) in &corpus {
        let d = match draw_tree(t) {
            Ok(d) => d,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        };
        let report = check_drawing(&d, 1e-9);
        if !report.pass() {
            return outcome(false, format!("{name}: {:?}", report.violations.first()));
        }
        let n = t.len() as f64;
        let r = report.measured.covering_radius;
        if r > n.powf(TREE_EXPONENT) {
            return outcome(false, format!("{name}: R = {r}"));
        }
        if t.len() > 1 {
            exponents.push(r.ln() / n.ln());
        }
    }
    exponents.sort_by(f64::total_cmp);
    let q = |p: f64| exponents[((exponents.len() - 1) as f64 * p).round() as usize];
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(120),
        format!(
            "{} drawings; log R / log n min {:.3} p50 {:.3} p90 {:.3} max {:.3} (bound {TREE_EXPONENT}), {elapsed:.2?}",
            corpus.len(),
            q(0.0),
            q(0.5),
            q(0.9),
            q(1.0)
        ),
    )
}

/// Spoke count of the last wedge layer and the number of contact layers
/// after it, or `None` when every layer is a contact layer.
fn trailing_contacts(l: &Layout) -> Option<(usize, usize)> {
    let last = l.layers.iter().rposition(|layer| layer.kind == LayerKind::Wedge)?;
    Some((l.layers[last].spokes, l.layers.len() - last - 1))
}

fn criterion_8() -> Outcome {
    for l in 3..=(1usize << 20) {
        let f = contact_layer_bound(l).unwrap();
        if f64::from(f) > ((l - 1) as f64).log2() {
            return outcome(false, format!("f({l}) = {f}"));
        }
    }
    let mut worst_margin = i64::MIN;
    let mut without_wedge = 0;
    for i in 0..1000u64 {
        let radii = instance(i);
        let l = greedy_balloon(&radii).unwrap();
        let Some((spokes, count)) = trailing_contacts(&l) else {
            without_wedge += 1;
            continue;
        };
        let bound = if spokes >= 3 { contact_layer_bound(spokes).unwrap() as usize } else { 1 };
        if count > bound {
            return outcome(false, format!("instance {i}: {count} contact layers after {spokes} spokes, f = {bound}"));
        }
        worst_margin = worst_margin.max(count as i64 - bound as i64);
    }
    outcome(
        true,
        format!(
            "f(l) <= log2(l-1) up to 2^20; max (observed - f) = {worst_margin}; {without_wedge} instances have no wedge layer"
        ),
    )
}

fn criterion_9() -> Outcome {
    for i in 0..1000u64 {
        let radii = instance(i);
        let weak = weakly_order(&radii).unwrap();
        let mut sorted: Vec<usize> = (0..radii.len()).collect();
        sorted.sort_by(|&a, &b| radii[a].total_cmp(&radii[b]));
        let a = layout_with_order(&radii, FreeSpokes::Zero, &weak).unwrap();
        let b = layout_with_order(&radii, FreeSpokes::Zero, &sorted).unwrap();
        if !rel_close(a.covering_radius, b.covering_radius, 1e-12) || a.layers.len() != b.layers.len() {
            return outcome(false, format!("instance {i}: R {} vs {}", a.covering_radius, b.covering_radius));
        }
        for (x, y) in a.layers.iter().zip(&b.layers) {
            if !rel_close(x.width, y.width, 1e-12) {
                return outcome(false, format!("instance {i}: layer {} width {} vs {}", x.round, x.width, y.width));
            }
        }
    }
    outcome(true, "1000 instances agree")
}

fn criterion_10() -> Outcome {
    let timings = bench::doubling(1 << 20, 10);
    let ratios = bench::ratios(&timings);
    let last = timings.last().map(|t| t.best).unwrap_or_default();
    let ok = ratios.len() == 2 && ratios.iter().all(|r| (1.5..=2.7).contains(r)) && last < Duration::from_secs(5);
    let times: Vec<String> = timings.iter().map(|t| format!("n={} {:.2?}", t.n, t.best)).collect();
    outcome(ok, format!("{}; ratios {:.2?}", times.join(", "), ratios))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 zero-free bound", criterion_1),
        ("2 one-free bound", criterion_2),
        ("3 two-free bound", criterion_3),
        ("4 exact fixtures", criterion_4),
        ("5 tightness bracket", criterion_5),
        ("6 kernel identities", criterion_6),
        ("7 tree drawings", criterion_7),
        ("8 contact layer bound", criterion_8),
        ("9 weak order equivalence", criterion_9),
        ("10 linear time", criterion_10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.note);
        failed += usize::from(!o.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
