//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use disingquandle::families::enumerate::collect_disingquandles;
use disingquandle::invariants::{count_colorings, count_colorings_exhaustive};
use disingquandle::{
    affine_quadratic_disingquandle, audit_tables, catalog, catalog_entry, find_isomorphism, is_homomorphism,
    validate_oriented_disingquandle, AffineQuadraticParams, Builtin, Color, ColoringOptions, Morphism,
    OrientedDisingquandle, ReferenceTable, Table,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AXIOM_SUITE_BUDGET: Duration = Duration::from_secs(1);
const FAMILY_SAMPLES: usize = 200;
const RENAMINGS_PER_SYSTEM: usize = 10;
const RANDOM_RELABELINGS: usize = 10;
const GOLDEN_Z10: &str = include_str!("fixtures/z10_canonical.matrix");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn axiom_suites() -> Outcome {
    let start = Instant::now();
    for b in Builtin::ALL {
        let report = validate_oriented_disingquandle(&b.structure());
        ensure(report.passed(), || format!("{b}: {}", report.summary()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < AXIOM_SUITE_BUDGET, || format!("took {elapsed:?}, budget {AXIOM_SUITE_BUDGET:?}"))?;
    Ok(format!("4 builtins valid in {elapsed:.2?}"))
}

fn golden_matrix() -> Outcome {
    let exported = Builtin::Z10Canonical.structure().to_presentation_matrix().to_string();
    ensure(exported == GOLDEN_Z10, || {
        let line = exported.lines().zip(GOLDEN_Z10.lines()).position(|(a, b)| a != b);
        format!("export differs from the golden text (first differing line: {line:?})")
    })?;
    Ok("four 10x10 blocks byte-identical".into())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A random tuple meeting the family conditions: `a` a unit with `a^2 != 1`
/// and `(1-a)` annihilating `alpha, 1-beta-gamma, lambda, mu, delta`.
fn random_family_tuple(rng: &mut ChaCha8Rng) -> AffineQuadraticParams {
    loop {
        let n: i64 = rng.gen_range(3..=40);
        let a: i64 = rng.gen_range(0..n);
        if gcd(a, n) != 1 || (a * a) % n == 1 {
            continue;
        }
        let step = n / gcd(1 - a, n);
        let multiple = |rng: &mut ChaCha8Rng| step * rng.gen_range(0..n);
        let beta = rng.gen_range(0..n);
        let gamma = 1 - beta - multiple(rng);
        return AffineQuadraticParams {
            n: n as u64,
            a,
            alpha: multiple(rng),
            beta,
            gamma,
            lambda: multiple(rng),
            mu: multiple(rng),
            delta: multiple(rng),
        };
    }
}

fn family_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4a44);
    let mut nonlinear = 0;
    for _ in 0..FAMILY_SAMPLES {
        let p = random_family_tuple(&mut rng);
        let d = affine_quadratic_disingquandle(&p).map_err(|e| format!("{p}: {e}"))?;
        let report = validate_oriented_disingquandle(&d);
        ensure(report.passed(), || format!("{p}: {}", report.summary()))?;
        nonlinear += usize::from([p.lambda, p.mu, p.delta].iter().any(|c| c.rem_euclid(p.n as i64) != 0));
    }
    Ok(format!("{FAMILY_SAMPLES} tuples valid, {nonlinear} with a quadratic term"))
}

fn z60_r2_audit() -> Outcome {
    let d = Builtin::Z60.structure();
    let n = 60i64;
    let r1 = |x: i64, y: i64| 10 + 6 * x + 5 * y + 10 * x * x + 20 * y * y + 30 * x * y;
    let printed = |x: i64, y: i64| 10 + 35 * x - 24 * y + 20 * x * x + 10 * y * y;
    let mut differing = 0;
    for x in 0..n {
        for y in 0..n {
            let derived = r1(y, 7 * x - 6 * y).rem_euclid(n);
            ensure(d.r2().get(x as usize, y as usize) as i64 == derived, || format!("R2({x},{y}) != R1(y, x*y)"))?;
            let gap = (derived - printed(x, y)).rem_euclid(n);
            ensure(gap == (30 * x * y).rem_euclid(n), || format!("gap at ({x},{y}) is {gap}, not 30xy"))?;
            differing += usize::from(gap != 0);
        }
    }
    let audit = Builtin::Z60.r2_audit();
    ensure(!audit.consistent() && audit.mismatched_pairs.len() == differing, || {
        format!("audit reports {} mismatched pairs, tabulation finds {differing}", audit.mismatched_pairs.len())
    })?;
    ensure(validate_oriented_disingquandle(&d).passed(), || "derived z60 structure fails validation".into())?;
    Ok(format!("gap is exactly 30xy on all 3600 pairs ({differing} nonzero); derived structure valid"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for b in [Builtin::Z10Canonical, Builtin::Z10Uno, Builtin::Z30] {
        let d = b.structure();
        for entry in catalog() {
            let solver = count_colorings(&entry.system, &d).count;
            let oracle = count_colorings_exhaustive(&entry.system, &d).map_err(|e| e.to_string())?.count;
            ensure(solver == oracle, || format!("{} under {b}: solver {solver}, oracle {oracle}", entry.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} system/structure pairs agree ({:.1?})", start.elapsed()))
}

fn reference_values() -> Outcome {
    let z10 = Builtin::Z10Canonical.structure();
    let z30 = Builtin::Z30.structure();
    let expectations = [("3_1^2", &z10, 50), ("4_1^2", &z10, 10), ("6_4^2", &z10, 50), ("6_12^2", &z30, 0)];
    let mut wrong = Vec::new();
    for (link, d, expected) in expectations {
        let s = catalog_entry(link).map_err(|e| e.to_string())?.system;
        let got = count_colorings(&s, d).count;
        if got != expected {
            wrong.push(format!("{link}: computed {got}, expected {expected}"));
        }
    }
    let entries = catalog();
    let mut ledger = Vec::new();
    for table in ReferenceTable::ALL {
        let structures: Vec<(&str, OrientedDisingquandle)> =
            table.default_structures().into_iter().map(|b| (b.name(), b.structure())).collect();
        let refs: Vec<(&str, &OrientedDisingquandle)> = structures.iter().map(|(n, d)| (*n, d)).collect();
        let report = audit_tables(table, &entries, &refs, &ColoringOptions::default()).map_err(|e| e.to_string())?;
        ensure(report.rows.len() == entries.len(), || format!("table {} has {} rows", table.id(), report.rows.len()))?;
        for row in report.mismatches() {
            ledger.push(format!("t{}:{} {:?}!={:?}", table.id(), row.link, row.computed, row.printed));
        }
    }
    if !ledger.iter().any(|l| l.starts_with("t1:1_1^2")) {
        wrong.push("1_1^2 missing from the mismatch ledger".into());
    }
    let ledger = format!("mismatch ledger [{}]", ledger.join("; "));
    if wrong.is_empty() {
        Ok(format!("spot values reproduced; {ledger}"))
    } else {
        Err(format!("{}; {ledger}", wrong.join("; ")))
    }
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57_0007);
    let z10 = Builtin::Z10Canonical.structure();
    let diagonal_fixed = (0..10).all(|x| z10.r1().get(x, x) == x && z10.r2().get(x, x) == x);
    ensure(diagonal_fixed, || "z10_canonical does not fix the diagonal".into())?;
    for entry in catalog() {
        let base = count_colorings(&entry.system, &z10).count;
        ensure(base >= 10, || format!("{}: count {base} below the constant colorings", entry.name))?;
        for _ in 0..RENAMINGS_PER_SYSTEM {
            let mut perm: Vec<usize> = (0..entry.system.var_count()).collect();
            perm.shuffle(&mut rng);
            let renamed = entry.system.permuted(&perm);
            let count = count_colorings(&renamed, &z10).count;
            ensure(count == base, || format!("{}: renaming {perm:?} gives {count}, not {base}", entry.name))?;
        }
    }
    let mut structures: Vec<OrientedDisingquandle> = Builtin::ALL.iter().map(|b| b.structure()).collect();
    for n in 1..=3 {
        structures.extend(collect_disingquandles(n, u64::MAX).0);
    }
    for d in &structures {
        let n = d.size();
        let r2 = d.r2();
        let holds = (0..n).all(|x| {
            (0..n).all(|y| r2.get(y, d.star(Color::One).get(x, y)) == r2.get(y, d.star(Color::Two).get(x, y)))
        });
        ensure(holds, || format!("twist compatibility fails on a structure of order {n}"))?;
    }
    Ok(format!(
        "18 systems x {RENAMINGS_PER_SYSTEM} renamings stable; all counts >= 10; identity holds on {} structures",
        structures.len()
    ))
}

fn all_tables(n: usize) -> impl Iterator<Item = Table> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |mut code| {
        let mut entries = vec![0; cells];
        for e in entries.iter_mut() {
            *e = code % n;
            code /= n;
        }
        Table::from_entries(n, entries).expect("entries are in range")
    })
}

fn is_quandle(t: &Table) -> bool {
    let n = t.size();
    let idempotent = (0..n).all(|x| t.get(x, x) == x);
    let bijective = (0..n).all(|y| (0..n).map(|x| t.get(x, y)).collect::<BTreeSet<_>>().len() == n);
    let distributive =
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t.get(t.get(x, y), z) == t.get(t.get(x, z), t.get(y, z)))));
    idempotent && bijective && distributive
}

/// Every quandle pair and every `R1`, with `R2` forced by `R2(x,y) = R1(y, x *1 y)`.
fn naive_structures(n: usize) -> BTreeSet<String> {
    let quandles: Vec<Table> = all_tables(n).filter(is_quandle).collect();
    let mut out = BTreeSet::new();
    for q1 in &quandles {
        for q2 in &quandles {
            for r1 in all_tables(n) {
                let r2 = Table::from_fn(n, |x, y| r1.get(y, q1.get(x, y))).expect("in range");
                let Ok(d) = OrientedDisingquandle::new(q1.clone(), q2.clone(), r1, r2) else { continue };
                if validate_oriented_disingquandle(&d).passed() {
                    out.insert(d.to_presentation_matrix().to_string());
                }
            }
        }
    }
    out
}

fn enumeration_oracle() -> Outcome {
    let mut sizes = Vec::new();
    for n in 1..=3 {
        let (found, summary) = collect_disingquandles(n, u64::MAX);
        ensure(!summary.truncated, || format!("n={n} enumeration truncated"))?;
        let listed: BTreeSet<String> = found.iter().map(|d| d.to_presentation_matrix().to_string()).collect();
        ensure(listed.len() == found.len(), || format!("n={n}: duplicate structures emitted"))?;
        let naive = naive_structures(n);
        ensure(listed == naive, || format!("n={n}: enumerated {}, naive filter {}", listed.len(), naive.len()))?;
        sizes.push(format!("n={n}: {}", listed.len()));
    }
    ensure(sizes[0] == "n=1: 1", || format!("n=1 yields {}", sizes[0]))?;
    Ok(sizes.join(", "))
}

fn morphisms() -> Outcome {
    let d = Builtin::Z10Canonical.structure();
    ensure(is_homomorphism(&d, &d, &Morphism::identity(10)) == Ok(true), || "identity rejected".into())?;
    ensure(is_homomorphism(&d, &d, &Morphism::constant(10, 0)) == Ok(true), || "constant 0 rejected".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x150_0009);
    for _ in 0..RANDOM_RELABELINGS {
        let mut perm: Vec<usize> = (0..10).collect();
        perm.shuffle(&mut rng);
        let image = d.relabel(&perm).map_err(|e| e.to_string())?;
        let f = find_isomorphism(&d, &image).ok_or_else(|| format!("no isomorphism found for {perm:?}"))?;
        ensure(f.is_bijective() && is_homomorphism(&d, &image, &f) == Ok(true), || {
            format!("witness for {perm:?} is not an isomorphism")
        })?;
    }
    Ok(format!("identity and constant maps are homomorphisms; {RANDOM_RELABELINGS} relabelings recovered"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom suites for the four builtins", axiom_suites),
        ("golden order-10 presentation matrix", golden_matrix),
        ("affine-quadratic family conditions imply validity", family_property),
        ("derived R2 for z60 versus the printed polynomial", z60_r2_audit),
        ("solver agrees with exhaustive enumeration", oracle_equivalence),
        ("reference counts and table audit", reference_values),
        ("renaming, constant-coloring and twist invariants", invariance),
        ("structure enumeration matches the naive filter", enumeration_oracle),
        ("homomorphism and isomorphism search", morphisms),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL [{}] {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
