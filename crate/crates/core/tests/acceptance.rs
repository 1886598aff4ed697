//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{cyclic, gf, oracle, permutations, polys, random_form, ring};
use regseq::criteria::{
    corollary2_check, depth_ext, is_regular, is_strongly_regular, sop_regular_check,
    theorem_crosscheck, Corollary2Outcome, DepthValue, SopOutcome,
};
use regseq::fpmodule::{colon_submodule, kernel, ModuleMap};
use regseq::koszul::depth_via_koszul;
use regseq::session::{run_cli, CliArgs};
use regseq::{FPModule, Field, FreeElement, Polynomial, Ring};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.2?}, budget {budget:?}"))
}

struct Instance {
    module: FPModule,
    seq: Vec<Polynomial>,
}

/// The shared randomized corpus for criteria 2-4.
fn monomial_corpus(count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let r = ring(n, gf());
            Instance {
                module: common::random_monomial_module(&mut rng, &r),
                seq: common::random_variable_sequence(&mut rng, &r),
            }
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for field in [gf(), Field::Rational] {
        let r = ring(3, field);
        let m = cyclic(&r, &["y*(x-1)", "y*z"]);
        let zx = polys(&r, &["z", "x"]);
        let xz = polys(&r, &["x", "z"]);
        let reg = is_regular(&zx, &m).map_err(|e| e.to_string())?;
        ensure(reg.holds, || format!("(z, x) not regular over {field}"))?;
        let strong = is_strongly_regular(&zx, &m).map_err(|e| e.to_string())?;
        ensure(!strong.holds, || format!("(z, x) strongly regular over {field}"))?;
        ensure(strong.witness.is_some(), || "no witness".into())?;
        ensure(strong.revalidate(&zx, &m).map_err(|e| e.to_string())?, || {
            "witness failed re-validation".into()
        })?;
        let swapped = is_strongly_regular(&xz, &m).map_err(|e| e.to_string())?;
        ensure(swapped.holds, || format!("(x, z) not strongly regular over {field}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("verdicts match over GF(32003) and Q in {:.2?}", start.elapsed()))
}

fn criterion_2(corpus: &[Instance]) -> Outcome {
    let start = Instant::now();
    let mut bad = 0;
    let mut regular = 0;
    for inst in corpus {
        let rep = theorem_crosscheck(&inst.module, &inst.seq, None, true).map_err(|e| e.to_string())?;
        ensure(rep.ass.is_complete(), || "incomplete prime set on monomial input".into())?;
        if rep.regular.holds != rep.condition_iii || !rep.consistent() {
            bad += 1;
        }
        regular += rep.regular.holds as usize;
    }
    ensure(bad == 0, || format!("{bad} (i)-vs-(iii) inconsistencies"))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} instances ({regular} regular), 0 inconsistencies in {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn criterion_3(corpus: &[Instance]) -> Outcome {
    let mut bad = 0;
    for inst in corpus {
        let strong = is_strongly_regular(&inst.seq, &inst.module).map_err(|e| e.to_string())?.holds;
        let mut prefixes = true;
        for s in 1..=inst.seq.len() {
            prefixes &= is_regular(&inst.seq[..s], &inst.module).map_err(|e| e.to_string())?.holds;
        }
        if strong != prefixes {
            bad += 1;
        }
    }
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{} instances, 0 discrepancies", corpus.len()))
}

fn criterion_4(corpus: &[Instance]) -> Outcome {
    let mut bad = 0;
    let mut checked = 0;
    for inst in corpus {
        let base = is_regular(&inst.seq, &inst.module).map_err(|e| e.to_string())?.holds;
        for p in permutations(&inst.seq).into_iter().skip(1) {
            checked += 1;
            if is_regular(&p, &inst.module).map_err(|e| e.to_string())?.holds != base {
                bad += 1;
            }
        }
    }
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{checked} permutations checked, 0 discrepancies"))
}

fn criterion_5() -> Outcome {
    let mut modules: Vec<(FPModule, Option<usize>)> = Vec::new();
    let r2 = ring(2, gf());
    modules.push((FPModule::free(&r2, 1), Some(2)));
    modules.push((FPModule::free(&ring(3, gf()), 2), Some(3)));
    modules.push((cyclic(&r2, &["x^2", "x*y"]), Some(0)));
    modules.push((cyclic(&r2, &["x*y"]), Some(1)));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    while modules.len() < 110 {
        let r = ring(rng.gen_range(1..=3), gf());
        let m = if rng.gen_bool(0.5) {
            common::random_monomial_module(&mut rng, &r)
        } else {
            common::random_graded_module(&mut rng, &r)
        };
        modules.push((m, None));
    }
    let mut bad = Vec::new();
    for (i, (m, known)) in modules.iter().enumerate() {
        let e = depth_ext(m).map_err(|e| e.to_string())?;
        let k = depth_via_koszul(m).map_err(|e| e.to_string())?;
        if e != k || known.is_some_and(|d| e != DepthValue::Finite(d)) {
            bad.push(format!("#{i}: ext {e}, koszul {k}, expected {known:?}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} graded modules, 0 discrepancies", modules.len()))
}

/// `(f, g, M)` triples; `g` need not satisfy the hypothesis.
fn corollary2_pairs() -> Vec<(Vec<Polynomial>, Vec<Polynomial>, FPModule)> {
    let r2 = ring(2, gf());
    let r3 = ring(3, gf());
    let ring2 = FPModule::free(&r2, 1);
    let ring3 = FPModule::free(&r3, 1);
    let example = cyclic(&r3, &["y*(x-1)", "y*z"]);
    let p2 = |a: &[&str], b: &[&str], m: &FPModule| (polys(&r2, a), polys(&r2, b), m.clone());
    let p3 = |a: &[&str], b: &[&str], m: &FPModule| (polys(&r3, a), polys(&r3, b), m.clone());
    vec![
        p2(&["x", "y"], &["x + y", "x*y"], &ring2),
        p2(&["x", "y"], &["x^2", "y^2"], &ring2),
        p2(&["x", "y"], &["x^2", "y^3"], &ring2),
        p2(&["x", "y"], &["x + y", "x - y"], &ring2),
        p2(&["x", "y"], &["x^2 + y^2", "x*y"], &ring2),
        p2(&["x", "y"], &["y", "x^3"], &ring2),
        p2(&["x", "y"], &["x + y^2", "y^3"], &ring2),
        p2(&["x"], &["x^2"], &ring2),
        p2(&["x - 1", "y"], &["(x - 1)^2", "y^2"], &ring2),
        p2(&["x", "y"], &["x + y", "x*y"], &FPModule::free(&r2, 2)),
        p3(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &ring3),
        p3(&["x", "y", "z"], &["x + y + z", "x*y + y*z + x*z", "x*y*z"], &ring3),
        p3(&["x", "y", "z"], &["x", "y^2", "z^3"], &ring3),
        p3(&["x", "y"], &["x^2", "x + y"], &cyclic(&r3, &["z"])),
        p3(&["z", "x"], &["z^2", "x^2"], &example),
        p3(&["z", "x"], &["z", "x^2"], &example),
        p3(&["y", "z"], &["y^2", "y + z"], &cyclic(&r3, &["x^2"])),
        p3(&["x", "y", "z"], &["x^2", "y^2", "z^2"], &cyclic(&r3, &["x*y - z^2"])),
        p2(&["x", "y"], &["x", "x*y"], &ring2),
        p2(&["x"], &["x*y"], &ring2),
    ]
}

fn criterion_6() -> Outcome {
    let mut cases = corollary2_pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let base = cases.clone();
    for _ in 0..40 {
        let (f, g, m) = base[rng.gen_range(0..base.len())].clone();
        let r = m.ring().clone();
        let mut g2 = g.clone();
        let i = rng.gen_range(0..g2.len());
        if g2.len() > 1 && rng.gen_bool(0.5) {
            let j = (i + rng.gen_range(1..g2.len())) % g2.len();
            let d = rng.gen_range(0..=1);
            let h = random_form(&mut rng, &r, d, 2);
            g2[i] = &g2[i] + &(&h * &g[j]);
        } else {
            g2[i] = g2[i].pow(rng.gen_range(2..=3));
        }
        cases.push((f, g2, m));
    }
    let (mut confirmed, mut hyp_fail, mut premise_fail, mut violations) = (0, 0, 0, Vec::new());
    for (k, (f, g, m)) in cases.iter().enumerate() {
        let rep = corollary2_check(m, f, g).map_err(|e| e.to_string())?;
        match rep.outcome {
            Corollary2Outcome::Confirmed => confirmed += 1,
            Corollary2Outcome::HypothesisNotSatisfied => {
                hyp_fail += 1;
                if rep.f_regular.is_some() || rep.g_regular.is_some() {
                    violations.push(format!("#{k}: asserted a verdict without the hypothesis"));
                }
            }
            Corollary2Outcome::PremiseNotSatisfied => premise_fail += 1,
            Corollary2Outcome::Inconsistent => violations.push(format!("#{k}: g not regular")),
        }
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    ensure(hyp_fail >= 2, || "hypothesis-failing pairs were not detected".into())?;
    ensure(confirmed >= 15, || format!("only {confirmed} confirmations"))?;
    Ok(format!(
        "{} pairs: {confirmed} confirmed, {hyp_fail} hypothesis not satisfied, {premise_fail} premise not satisfied, 0 violations",
        cases.len()
    ))
}

fn cm_fixtures() -> Vec<FPModule> {
    let r2 = ring(2, gf());
    let r3 = ring(3, gf());
    vec![
        FPModule::free(&r2, 1),
        FPModule::free(&r2, 2),
        FPModule::free(&r3, 1),
        cyclic(&r2, &["x*y"]),
        cyclic(&r2, &["x^2 - y^2"]),
        cyclic(&r2, &["x^3 + y^3"]),
        cyclic(&r2, &["x^2"]),
        cyclic(&r3, &["x*y - z^2"]),
        cyclic(&r3, &["x*y*z"]),
        cyclic(&r3, &["x", "y^2"]),
    ]
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let (mut confirmed, mut not_sop, mut violations) = (0, 0, Vec::new());
    for (k, m) in cm_fixtures().iter().enumerate() {
        let r = m.ring().clone();
        let dim = m.krull_dimension().map_err(|e| e.to_string())? as usize;
        for trial in 0..4 {
            let f: Vec<Polynomial> = (0..dim)
                .map(|_| {
                    let d = rng.gen_range(1..=2);
                    random_form(&mut rng, &r, d, 3)
                })
                .collect();
            if f.iter().any(Polynomial::is_zero) {
                continue;
            }
            let rep = sop_regular_check(m, &f).map_err(|e| e.to_string())?;
            match rep.outcome {
                SopOutcome::Confirmed => confirmed += 1,
                SopOutcome::NotSystemOfParameters => not_sop += 1,
                SopOutcome::NotCohenMacaulay => violations.push(format!("fixture {k} reported not CM")),
                SopOutcome::Inconsistent => violations.push(format!("fixture {k} trial {trial}: not regular")),
            }
        }
    }
    let r2 = ring(2, gf());
    let non_cm = cyclic(&r2, &["x^2", "x*y"]);
    let rep = sop_regular_check(&non_cm, &polys(&r2, &["y"])).map_err(|e| e.to_string())?;
    if rep.outcome != SopOutcome::NotCohenMacaulay {
        violations.push(format!("k[x,y]/(x^2, xy) reported {}", rep.outcome.describe()));
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    ensure(confirmed >= 10, || format!("only {confirmed} confirmations"))?;
    Ok(format!(
        "{confirmed} s.o.p.s confirmed regular, {not_sop} random sequences were not s.o.p.s, non-CM fixture detected"
    ))
}

fn graded_fixtures() -> Vec<FPModule> {
    let r3 = ring(3, gf());
    let mut out = cm_fixtures();
    out.push(cyclic(&ring(2, gf()), &["x^2", "x*y"]));
    out.push(FPModule::present(
        &r3,
        2,
        vec![
            FreeElement::parse(&r3, &["x", "y"]).unwrap(),
            FreeElement::parse(&r3, &["z^2", "x*y"]).unwrap(),
        ],
        Some(vec![0, 0]),
    ).unwrap());
    out.push(FPModule::present(
        &r3,
        2,
        vec![FreeElement::parse(&r3, &["x*z", "y"]).unwrap()],
        Some(vec![0, 1]),
    ).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..10 {
        let r = ring(rng.gen_range(2..=3), gf());
        out.push(common::random_graded_module(&mut rng, &r));
    }
    out
}

/// Re-validates `(N : f)` against the oracle in degrees <= 4: every
/// generator times `f` lies in `N`, and every degree-d solution of
/// `f w in N` lies in the computed colon.
fn check_colon(r: &Ring, shifts: &[i32], rels: &[FreeElement], f: &Polynomial) -> Result<(), String> {
    let rank = shifts.len();
    let n = regseq::Submodule::new(r, rank, rels.to_vec()).map_err(|e| e.to_string())?;
    let colon = colon_submodule(&n, f).map_err(|e| e.to_string())?;
    let g = oracle::Graded {
        n: r.nvars(),
        shifts: shifts.to_vec(),
        p: 32003,
    };
    let e = f.total_degree().unwrap() as i64;
    for c in colon.generators() {
        let fc = c.scale(f).map_err(|e| e.to_string())?;
        ensure(g.contains(rels, &fc), || format!("{c} * ({f}) not in N"))?;
    }
    let columns: Vec<FreeElement> = (0..rank).map(|i| FreeElement::single(r, rank, i, f.clone())).collect();
    for d in 0..=4 {
        for w in g.preimage(r, &columns, e, &g, rels, d) {
            ensure(g.contains(colon.generators(), &w), || format!("{w} missing from (N : {f})"))?;
        }
    }
    Ok(())
}

/// Kernel of a map `R^a -> R^b / N`, re-validated the same way.
fn check_kernel(map: &ModuleMap, e: i64) -> Result<(), String> {
    let r = map.source().ring().clone();
    let k = kernel(map).map_err(|e| e.to_string())?;
    let src = oracle::graded(map.source());
    let tgt = oracle::graded(map.target());
    let rels = map.target().relations().generators();
    for v in &k.embedding {
        let img = map.apply(v).map_err(|e| e.to_string())?;
        ensure(tgt.contains(rels, &img), || format!("{v} does not map to zero"))?;
    }
    for d in 0..=4 {
        for w in src.preimage(&r, map.columns(), e, &tgt, rels, d) {
            ensure(src.contains(&k.embedding, &w), || format!("{w} missing from the kernel"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut compared = 0;
    for (k, m) in graded_fixtures().iter().enumerate() {
        for d in 0..=6 {
            let h = m.hilbert_function(d).map_err(|e| e.to_string())?;
            let s = m.standard_monomial_count(d).map_err(|e| e.to_string())?;
            let o = oracle::hilbert(m, d);
            ensure(h == s && h == o, || format!("fixture {k}, degree {d}: dense {h}, standard {s}, oracle {o}"))?;
            compared += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0108);
    for _ in 0..30 {
        let r = ring(rng.gen_range(2..=3), gf());
        let m = if rng.gen_bool(0.5) {
            common::random_monomial_module(&mut rng, &r)
        } else {
            common::random_graded_module(&mut rng, &r)
        };
        let d = rng.gen_range(1..=2);
        let f = random_form(&mut rng, &r, d, 2);
        if f.is_zero() {
            continue;
        }
        check_colon(&r, m.grading().unwrap(), m.relations().generators(), &f)?;
    }
    for _ in 0..20 {
        let r = ring(rng.gen_range(2..=3), gf());
        let target = if rng.gen_bool(0.5) {
            common::random_monomial_module(&mut rng, &r)
        } else {
            common::random_graded_module(&mut rng, &r)
        };
        let a = rng.gen_range(1..=3);
        let e = 1;
        let tshifts = target.grading().unwrap().to_vec();
        let base = *tshifts.iter().max().unwrap();
        let sshifts: Vec<i32> = vec![base; a];
        let columns: Vec<FreeElement> = (0..a)
            .map(|_| {
                let comps = tshifts
                    .iter()
                    .map(|&t| random_form(&mut rng, &r, (base + e as i32 - t) as u32, 2))
                    .collect();
                FreeElement::new(&r, comps).unwrap()
            })
            .collect();
        let source = FPModule::present(&r, a, Vec::new(), Some(sshifts)).unwrap();
        let map = ModuleMap::new(source, target, columns).map_err(|e| e.to_string())?;
        check_kernel(&map, e)?;
    }
    Ok(format!("{compared} Hilbert values agree three ways; 30 colons and 20 kernels re-validated to degree 4"))
}

fn criterion_9() -> Outcome {
    let corpus = monomial_corpus(50);
    let mut bad = 0;
    for inst in corpus.iter() {
        let ext = inst.module.adjoin_variable().map_err(|e| e.to_string())?;
        let seq: Vec<Polynomial> = inst
            .seq
            .iter()
            .map(|f| f.transfer(ext.ring()))
            .collect::<regseq::Result<_>>()
            .map_err(|e| e.to_string())?;
        let before = (
            is_regular(&inst.seq, &inst.module).map_err(|e| e.to_string())?.holds,
            is_strongly_regular(&inst.seq, &inst.module).map_err(|e| e.to_string())?.holds,
        );
        let after = (
            is_regular(&seq, &ext).map_err(|e| e.to_string())?.holds,
            is_strongly_regular(&seq, &ext).map_err(|e| e.to_string())?.holds,
        );
        if before != after {
            bad += 1;
        }
    }
    ensure(bad == 0, || format!("{bad} verdicts changed"))?;
    Ok(format!("{} instances unchanged under M -> M[t]", corpus.len()))
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn strip_version(s: &str) -> String {
    s.lines()
        .filter(|l| !l.trim_start().starts_with("\"version\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let expected: Vec<(String, i32)> = std::fs::read_to_string(fixture_dir().join("expected/exit_codes.txt"))
        .map_err(|e| e.to_string())?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (name, code) = l.split_once(' ').expect("name code");
            (name.to_string(), code.trim().parse().expect("code"))
        })
        .collect();
    ensure(expected.len() >= 8, || "fixture corpus is too small".into())?;
    let mut errors = Vec::new();
    for (name, code) in &expected {
        let path = fixture_dir().join(format!("{name}.session"));
        let args = CliArgs {
            words: vec!["run".into()],
            session: path,
            format: regseq::session::OutputFormat::Json,
            field: None,
            degree_cap: None,
            strict: false,
        };
        let a = run_cli(&args, None);
        let b = run_cli(&args, None);
        if a != b {
            errors.push(format!("{name}: output differs between runs"));
        }
        if a.code != *code {
            errors.push(format!("{name}: exit {} (expected {code})", a.code));
        }
        let golden = std::fs::read_to_string(fixture_dir().join(format!("expected/{name}.json")))
            .map_err(|e| format!("{name}: {e}"))?;
        if strip_version(&golden) != strip_version(&a.stdout) {
            errors.push(format!("{name}: JSON differs from the golden file"));
        }
    }
    ensure(errors.is_empty(), || errors.join("; "))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} fixture sessions byte-stable with documented exit codes in {:.2?}",
        expected.len(),
        start.elapsed()
    ))
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    match result {
        Ok(detail) => {
            println!("criterion {name}: PASS ({elapsed:.2?}) {detail}");
            true
        }
        Err(detail) => {
            println!("criterion {name}: FAIL ({elapsed:.2?}) {detail}");
            false
        }
    }
}

fn main() {
    let corpus = monomial_corpus(200);
    let results = [
        run("1 (running example golden)", criterion_1),
        run("2 (theorem equivalence)", || criterion_2(&corpus)),
        run("3 (strong regularity via prefixes)", || criterion_3(&corpus)),
        run("4 (permutation invariance)", || criterion_4(&corpus)),
        run("5 (depth cross-check)", criterion_5),
        run("6 (support-containment corollary)", criterion_6),
        run("7 (systems of parameters on CM modules)", criterion_7),
        run("8 (oracle equivalence)", criterion_8),
        run("9 (flat extension)", criterion_9),
        run("10 (CLI contract)", criterion_10),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
