//! Acceptance checks, one line per criterion. Every comparison is exact.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use hiergames::oracle::{canonical_grid, games_equal};
use hiergames::{
    certificate_of_nonweightedness, is_weighted, is_weighted_conjunctive, is_weighted_disjunctive,
    recognize_conjunctive, recognize_disjunctive, search_trading_transform, synthesize_weights,
    verify_trading_transform, Coalition, HierarchyKind, HierarchyParams, MultisetGame, WeightedCase,
    Weightedness,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MAX_LEVELS: usize = 4;
const MAX_PLAYERS: u32 = 9;
const MAX_LEN: usize = 4;
const SWEEP_LIMIT: Duration = Duration::from_secs(300);
const RANDOM_CASES: usize = 200;
const SEED: u64 = 0x5eed_0007;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    let mut detail = detail;
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

fn sweep(kind: HierarchyKind) -> Vec<(HierarchyParams, MultisetGame)> {
    canonical_grid(kind, MAX_LEVELS, MAX_PLAYERS)
        .into_iter()
        .map(|p| {
            let g = p.build().expect("canonical parameters build");
            (p, g)
        })
        .collect()
}

/// Closed form against exact feasibility and bounded certificate search.
fn oracle_sweep(kind: HierarchyKind, games: &[(HierarchyParams, MultisetGame)]) -> (Vec<String>, usize, Duration) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut non_weighted = 0;
    for (p, g) in games {
        let decided = match kind {
            HierarchyKind::Disjunctive => is_weighted_disjunctive(p),
            HierarchyKind::Conjunctive => is_weighted_conjunctive(p),
        }
        .unwrap()
        .is_weighted();
        let feasible = synthesize_weights(g).unwrap().is_some();
        let no_certificate = search_trading_transform(g, MAX_LEN).unwrap().is_none();
        if !decided {
            non_weighted += 1;
        }
        if decided != feasible || decided != no_certificate {
            failures.push(format!(
                "{p:?}: closed form {decided}, feasibility {feasible}, no certificate {no_certificate}"
            ));
        }
    }
    (failures, non_weighted, start.elapsed())
}

fn criterion_1(disj: &[(HierarchyParams, MultisetGame)]) -> Outcome {
    let (mut failures, non_weighted, elapsed) = oracle_sweep(HierarchyKind::Disjunctive, disj);
    if elapsed > SWEEP_LIMIT {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(
        &failures,
        format!(
            "disjunctive sweep m <= {MAX_LEVELS}, sum n <= {MAX_PLAYERS}: {} games, {non_weighted} non-weighted, {} disagreements, {:.1}s (limit {}s)",
            disj.len(),
            failures.len(),
            elapsed.as_secs_f64(),
            SWEEP_LIMIT.as_secs()
        ),
    )
}

fn criterion_2(conj: &[(HierarchyParams, MultisetGame)]) -> Outcome {
    let (mut failures, non_weighted, elapsed) = oracle_sweep(HierarchyKind::Conjunctive, conj);
    for (p, _) in conj {
        let direct = is_weighted_conjunctive(p).unwrap().is_weighted();
        let via_dual = is_weighted_disjunctive(&p.dual().unwrap()).unwrap().is_weighted();
        if direct != via_dual {
            failures.push(format!("{p:?}: conjunctive {direct}, dual {via_dual}"));
        }
    }
    outcome(
        &failures,
        format!(
            "conjunctive sweep: {} games, {non_weighted} non-weighted, {} disagreements (oracles and dual), {:.1}s",
            conj.len(),
            failures.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_3(all: &[(HierarchyParams, MultisetGame)]) -> Outcome {
    let mut failures = Vec::new();
    for (p, g) in all {
        let d = p.dual().unwrap();
        if !games_equal(&g.dual().unwrap(), &d.build().unwrap()).unwrap() {
            failures.push(format!("{p:?}: dual game differs from game of dual parameters"));
        }
        if d.dual().unwrap() != *p {
            failures.push(format!("{p:?}: dual parameters are not an involution"));
        }
    }
    outcome(
        &failures,
        format!("duality on {} games: {} failures", all.len(), failures.len()),
    )
}

fn criterion_4(disj: &[(HierarchyParams, MultisetGame)], conj: &[(HierarchyParams, MultisetGame)]) -> Outcome {
    let mut failures = Vec::new();
    for (p, g) in disj {
        // Formula written out here rather than taken from the library.
        let m = p.levels();
        let mut m_formula: Vec<u32> = (0..m).map(|i| if i == 0 { p.k()[0] - 1 } else { p.k()[i] - p.k()[i - 1] }).collect();
        if m >= 2 && p.k()[m - 1] == p.k()[m - 2] + p.n()[m - 1] {
            m_formula[m - 1] = p.n()[m - 1];
        }
        let found = g.shift_maximal_losing().unwrap();
        if found != vec![Coalition::new(m_formula.clone())] {
            failures.push(format!("{p:?}: shift-maximal losing {found:?}, expected {m_formula:?}"));
        }
        if recognize_disjunctive(g).unwrap().as_ref() != Some(p) {
            failures.push(format!("{p:?}: disjunctive recognition"));
        }
    }
    for (p, g) in conj {
        let k = p.k();
        let formula: Vec<u32> = (0..k.len()).map(|i| if i == 0 { k[0] } else { k[i] - k[i - 1] }).collect();
        let found = g.shift_minimal_winning().unwrap();
        if found != vec![Coalition::new(formula.clone())] {
            failures.push(format!("{p:?}: shift-minimal winning {found:?}, expected {formula:?}"));
        }
        // One level is reported as disjunctive.
        let expected = if p.levels() == 1 {
            HierarchyParams::disjunctive(p.n().to_vec(), p.k().to_vec()).unwrap()
        } else {
            p.clone()
        };
        if recognize_conjunctive(g).unwrap() != Some(expected) {
            failures.push(format!("{p:?}: conjunctive recognition"));
        }
    }
    outcome(
        &failures,
        format!(
            "structure on {} disjunctive and {} conjunctive games: {} failures",
            disj.len(),
            conj.len(),
            failures.len()
        ),
    )
}

fn criterion_5(all: &[(HierarchyParams, MultisetGame)]) -> Outcome {
    let mut failures = Vec::new();
    let (mut certified, mut searched) = (0, 0);
    for (p, g) in all {
        if is_weighted(p).unwrap().is_weighted() {
            searched += 1;
            if let Some(t) = search_trading_transform(g, MAX_LEN).unwrap() {
                failures.push(format!("{p:?}: weighted but found {t:?}"));
            }
        } else {
            certified += 1;
            let t = certificate_of_nonweightedness(p).unwrap();
            if !verify_trading_transform(g, &t).unwrap() {
                failures.push(format!("{p:?}: certificate {t:?} does not verify"));
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{certified} certificates verified, {searched} weighted games without certificate up to length {MAX_LEN}: {} failures",
            failures.len()
        ),
    )
}

fn sorted(cs: &[Coalition]) -> Vec<Coalition> {
    let mut v = cs.to_vec();
    v.sort();
    v
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let unsc = HierarchyParams::conjunctive(vec![5, 10], vec![5, 9]).unwrap();
    let decision = is_weighted(&unsc).unwrap();
    if decision != Weightedness::Weighted(WeightedCase::TrivialFirstLevel) {
        failures.push(format!("UNSC decided {decision:?}"));
    }
    let g = unsc.build().unwrap();
    match synthesize_weights(&g).unwrap() {
        Some(rep) => {
            // Checked on every coalition, not only the extremal ones.
            for c in g.players().coalitions().unwrap() {
                if (rep.weight(&c) >= rep.quota) != g.is_winning(&c).unwrap() {
                    failures.push(format!("UNSC representation misjudges {c}"));
                    break;
                }
            }
        }
        None => failures.push("UNSC has no representation".into()),
    }

    let bank = HierarchyParams::disjunctive(vec![2, 3], vec![2, 3]).unwrap();
    let decision = is_weighted(&bank).unwrap();
    if decision != Weightedness::Weighted(WeightedCase::AdjacentThresholds) {
        failures.push(format!("bank decided {decision:?}"));
    }

    let nw = HierarchyParams::disjunctive(vec![2, 4], vec![2, 4]).unwrap();
    if is_weighted(&nw).unwrap() != Weightedness::NonWeighted {
        failures.push("(2,4),(2,4) decided weighted".into());
    }
    let t = certificate_of_nonweightedness(&nw).unwrap();
    let x = sorted(&[Coalition::from([2, 0]), Coalition::from([0, 4])]);
    let y = sorted(&[Coalition::from([1, 2]), Coalition::from([1, 2])]);
    if sorted(&t.x_side) != x || sorted(&t.y_side) != y {
        failures.push(format!("(2,4),(2,4) certificate {t:?}"));
    }
    if !verify_trading_transform(&nw.build().unwrap(), &t).unwrap() {
        failures.push("(2,4),(2,4) certificate does not verify".into());
    }
    outcome(
        &failures,
        "UNSC weighted via case (4), bank via case (2), (2,4),(2,4) certificate exact".into(),
    )
}

/// The canonical conditions, written out independently of the library.
fn satisfies_canonical_conditions(p: &HierarchyParams) -> bool {
    let (n, k, m) = (p.n(), p.k(), p.levels());
    if k[0] == 0 || k[0] > n[0] {
        return false;
    }
    let middle = (1..m.saturating_sub(1)).all(|i| k[i - 1] < k[i] && k[i] < k[i - 1] + n[i]);
    if m == 1 {
        return true;
    }
    let last = m - 1;
    middle
        && match p.kind() {
            HierarchyKind::Disjunctive => k[last - 1] < k[last] && k[last] <= k[last - 1] + n[last],
            HierarchyKind::Conjunctive => k[last - 1] <= k[last] && k[last] < k[last - 1] + n[last],
        }
}

fn random_non_canonical(rng: &mut StdRng) -> HierarchyParams {
    'retry: loop {
        let kind = if rng.gen_bool(0.5) {
            HierarchyKind::Disjunctive
        } else {
            HierarchyKind::Conjunctive
        };
        let m = rng.gen_range(2..=4);
        let n: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=4)).collect();
        let total: u32 = n.iter().sum();
        let mut k = Vec::with_capacity(m);
        let mut prev = 0;
        for i in 0..m {
            let lo = if kind == HierarchyKind::Conjunctive && i == m - 1 { prev.max(1) } else { prev + 1 };
            if lo > total + 2 {
                continue 'retry;
            }
            let x = rng.gen_range(lo..=total + 2);
            k.push(x);
            prev = x;
        }
        let Ok(p) = HierarchyParams::new(kind, n, k) else {
            continue 'retry;
        };
        if !p.wins(&Coalition::new(p.n().to_vec())) || satisfies_canonical_conditions(&p) {
            continue 'retry;
        }
        return p;
    }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    let mut merged = 0;
    for _ in 0..RANDOM_CASES {
        let p = random_non_canonical(&mut rng);
        let c = p.canonical();
        if !satisfies_canonical_conditions(&c) {
            failures.push(format!("{p:?} -> {c:?} violates the canonical conditions"));
            continue;
        }
        // Canonical levels are unions of consecutive original levels.
        let mut group = Vec::with_capacity(p.levels());
        let mut bounds = c.n().iter().scan(0u32, |acc, &x| {
            *acc += x;
            Some(*acc)
        });
        let mut bound = bounds.next().unwrap();
        let mut seen = 0;
        let mut level = 0;
        for &x in p.n() {
            if seen >= bound {
                bound = bounds.next().unwrap();
                level += 1;
            }
            group.push(level);
            seen += x;
        }
        if seen != c.n().iter().sum::<u32>() || level + 1 != c.levels() {
            failures.push(format!("{p:?} -> {c:?} does not merge consecutive levels"));
            continue;
        }
        if c.levels() < p.levels() {
            merged += 1;
        }
        let original = p.build().unwrap();
        let canonical = c.build().unwrap();
        let mut equal = true;
        for x in original.players().coalitions().unwrap() {
            let mut counts = vec![0; c.levels()];
            for (l, &g) in group.iter().enumerate() {
                counts[g] += x.count(l);
            }
            if original.is_winning(&x).unwrap() != canonical.is_winning(&Coalition::new(counts)).unwrap() {
                equal = false;
                break;
            }
        }
        if c.levels() == p.levels() && !games_equal(&original, &canonical).unwrap() {
            equal = false;
        }
        if !equal {
            failures.push(format!("{p:?} -> {c:?} changes the game"));
        }
    }
    outcome(
        &failures,
        format!(
            "{RANDOM_CASES} random non-canonical parameter sets (seed {SEED:#x}), {merged} with merged levels: {} failures",
            failures.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut inputs: Vec<_> = fs::read_dir(golden.join("inputs"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    inputs.sort();
    let commands = ["build", "canonical", "dual", "analyze", "weighted", "certificate", "recognize"];
    let mut failures = Vec::new();
    let mut per_command: BTreeMap<&str, usize> = BTreeMap::new();
    for input in &inputs {
        let name = input.file_stem().unwrap().to_str().unwrap();
        for command in commands {
            let expected = fs::read(golden.join("expected").join(name).join(format!("{command}.out"))).unwrap();
            let out = Process::new(env!("CARGO_BIN_EXE_hiergames"))
                .args([command, input.to_str().unwrap()])
                .env_remove("HIERGAMES_CAPACITY")
                .output()
                .unwrap();
            if !out.status.success() || out.stdout != expected {
                failures.push(format!("{name} {command}"));
            }
            *per_command.entry(command).or_default() += 1;
        }
    }
    let named = ["unsc", "bank", "nonweighted"];
    for name in named {
        if !inputs.iter().any(|p| p.file_stem().unwrap() == name) {
            failures.push(format!("missing golden input {name}"));
        }
    }
    outcome(
        &failures,
        format!(
            "{} golden reports byte-exact across {} commands and {} inputs: {} mismatches",
            per_command.values().sum::<usize>(),
            per_command.len(),
            inputs.len(),
            failures.len()
        ),
    )
}

fn main() -> ExitCode {
    let disj = sweep(HierarchyKind::Disjunctive);
    let conj = sweep(HierarchyKind::Conjunctive);
    let all: Vec<(HierarchyParams, MultisetGame)> = disj.iter().chain(&conj).cloned().collect();
    let results = [
        criterion_1(&disj),
        criterion_2(&conj),
        criterion_3(&all),
        criterion_4(&disj, &conj),
        criterion_5(&all),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    let mut ok = true;
    for (i, r) in results.iter().enumerate() {
        println!("criterion {} {}: {}", i + 1, if r.pass { "PASS" } else { "FAIL" }, r.detail);
        ok &= r.pass;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
