//! Acceptance run: one PASS/FAIL line per criterion with its time limit.
//! Exits non-zero when any criterion fails.

use std::process::Command as Process;
use std::time::{Duration, Instant};

use clap::Parser;
use partgal::cohomology::{cohomology_group, Cochain, Complex, Engine, DEFAULT_BUDGET};
use partgal::crossed::{check_isomorphism, coiso_map, crossed_product, delta_theta, kappa_iso, skew_group_ring};
use partgal::finring::Elem;
use partgal::fixtures::{fixture, random_restricted_action, RANDOM_RING_CAP};
use partgal::galois::{find_certificate, regular_representation, CertificateSearch, SearchOptions};
use partgal::partial_action::{validate, PartialAction};
use partgal::picsemi::{star_action, z1_pics};
use partgal::sequence::{consequence_check, delta_theta_brauer_class};
use partgal_cli::{run, Cli};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fx(name: &str) -> PartialAction {
    fixture(name).unwrap_or_else(|| panic!("fixture {name}"))
}

/// Every single-entry corruption of the tables of `act` must be rejected.
fn mutations_rejected(act: &PartialAction) -> Result<usize, String> {
    let ring = act.ring();
    let base = act.to_candidate();
    let mut count = 0;
    for g in act.group().elements() {
        let keys: Vec<Elem> = base.alpha[g].keys().copied().collect();
        for s in keys {
            for v in ring.elements().filter(|&v| v != base.alpha[g][&s]) {
                let mut cand = base.clone();
                cand.alpha[g].insert(s, v);
                let rep = validate(ring, act.group(), &cand);
                ensure(!rep.is_valid() && !rep.violations[0].detail.is_empty(), || {
                    format!("alpha_{g}({}) -> {} accepted", ring.label(s), ring.label(v))
                })?;
                count += 1;
            }
        }
        for v in ring.elements().filter(|&v| v != base.one_g[g]) {
            let mut cand = base.clone();
            cand.one_g[g] = v;
            let rep = validate(ring, act.group(), &cand);
            ensure(!rep.is_valid(), || format!("1_{g} -> {} accepted", ring.label(v)))?;
            count += 1;
        }
    }
    Ok(count)
}

fn axiom_suite() -> Outcome {
    let mut mutations = 0;
    for name in ["E0", "E1", "E2"] {
        let act = fx(name);
        let rep = validate(act.ring(), act.group(), &act.to_candidate());
        ensure(rep.is_valid(), || format!("{name}: {:?}", rep.violations))?;
        mutations += mutations_rejected(&act).map_err(|e| format!("{name}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    for i in 0..200 {
        let act = random_restricted_action(&mut rng, RANDOM_RING_CAP);
        let base = act.to_candidate();
        let rep = validate(act.ring(), act.group(), &base);
        ensure(rep.is_valid(), || format!("random instance {i}: {:?}", rep.violations))?;
        // a few corrupted entries per random instance
        let ring = act.ring();
        for _ in 0..5 {
            let g = rng.random_range(0..act.group().order());
            let keys: Vec<Elem> = base.alpha[g].keys().copied().collect();
            let s = keys[rng.random_range(0..keys.len())];
            let old = base.alpha[g][&s];
            if ring.order() < 2 {
                break;
            }
            let v = loop {
                let v = ring.elem(rng.random_range(0..ring.order())).unwrap();
                if v != old {
                    break v;
                }
            };
            let mut cand = base.clone();
            cand.alpha[g].insert(s, v);
            ensure(!validate(ring, act.group(), &cand).is_valid(), || {
                format!("random instance {i}: mutation accepted")
            })?;
            sampled += 1;
        }
    }
    Ok(format!(
        "E0/E1/E2 and 200 random restrictions valid; {mutations} exhaustive and {sampled} sampled mutations rejected"
    ))
}

fn all_cochains(cx: &Complex<'_>, n: usize) -> Vec<Cochain> {
    let moduli = cx.moduli(n);
    let mut out = Vec::new();
    let mut c = vec![0u64; moduli.len()];
    loop {
        out.push(cx.from_coords(n, &c));
        let mut i = 0;
        loop {
            if i == c.len() {
                return out;
            }
            c[i] += 1;
            if c[i] < moduli[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

fn delta_squared() -> Outcome {
    let mut counts = Vec::new();
    for name in ["E1", "E2"] {
        let act = fx(name);
        let cx = Complex::new(&act, 4).map_err(|e| e.to_string())?;
        let dd = |f: &Cochain| cx.coboundary(&cx.coboundary(f).unwrap()).unwrap();
        for n in 0..2 {
            let all = all_cochains(&cx, n);
            ensure(all.len() as u64 == cx.cochain_count(n).try_into().unwrap_or(u64::MAX), || {
                format!("{name}: |C^{n}| mismatch")
            })?;
            for f in &all {
                ensure(dd(f) == cx.identity(n + 2), || format!("{name}: dd f != I at n = {n}"))?;
            }
            counts.push(format!("{name} |C^{n}| = {}", all.len()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let moduli = cx.moduli(2);
        for _ in 0..10_000 {
            let c: Vec<u64> = moduli.iter().map(|&m| rng.random_range(0..m)).collect();
            let f = cx.from_coords(2, &c);
            ensure(dd(&f) == cx.identity(4), || format!("{name}: dd f != I at n = 2"))?;
        }
    }
    Ok(format!("{}; 10000 sampled at n = 2 each", counts.join(", ")))
}

fn engine_agreement() -> Outcome {
    let mut seen = Vec::new();
    for name in ["E1", "E2", "E0", "G4"] {
        let act = fx(name);
        for n in 1..=2 {
            let e = cohomology_group(&act, n, Engine::Enumerate, DEFAULT_BUDGET)
                .map_err(|e| format!("{name} n={n}: {e}"))?;
            let s = cohomology_group(&act, n, Engine::Structure, DEFAULT_BUDGET)
                .map_err(|e| format!("{name} n={n}: {e}"))?;
            ensure(e.orders() == s.orders(), || format!("{name} n={n}: {:?} vs {:?}", e.orders(), s.orders()))?;
            seen.push(format!("{name}:H^{n}={}", e.h_order));
        }
    }
    Ok(seen.join(" "))
}

fn sequence_consequences() -> Outcome {
    for name in ["E0", "E1", "E2", "G4"] {
        let act = fx(name);
        let rep = consequence_check(&act, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        for term in ["H^1(G, alpha, R)", "H^2(G, alpha, R)"] {
            let t = rep.terms.iter().find(|t| t.name == term).ok_or(format!("{name}: no term {term}"))?;
            ensure(t.order.as_deref() == Some("1"), || format!("{name}: {term} = {:?}", t.order))?;
        }
        ensure(rep.consistent, || format!("{name}: report inconsistent"))?;
        let z = z1_pics(&star_action(&act), DEFAULT_BUDGET).ok_or(format!("{name}: Z1 over budget"))?;
        ensure(z.z1.len() == 1, || format!("{name}: |Z^1(alpha*)| = {}", z.z1.len()))?;
    }
    let n1 = fx("N1");
    match find_certificate(&n1, SearchOptions::default()) {
        CertificateSearch::NotFound { conclusive: true, .. } => {}
        other => return Err(format!("N1: {other:?}")),
    }
    Ok("H^1 = H^2 = 1 and |Z^1(alpha*)| = 1 on E0, E1, E2, G4; N1 not Galois (conclusive)".into())
}

fn structural_isomorphisms() -> Outcome {
    let mut pairs = 0;
    for name in ["E1", "E2"] {
        let act = fx(name);
        let (dt, _) = delta_theta(&act).map_err(|e| e.to_string())?;
        let (skew, assoc) = skew_group_ring(&act).map_err(|e| e.to_string())?;
        ensure(!assoc.sampled && assoc.failure.is_none(), || format!("{name}: skew associativity"))?;
        let k = check_isomorphism(&dt, &skew, &kappa_iso());
        ensure(k.is_isomorphism(), || format!("{name}: kappa {:?}", k.failure))?;
        pairs += k.pairs_checked;
    }
    let act = fx("E2");
    let cx = Complex::new(&act, 3).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let moduli = cx.moduli(1);
    let random_1 = |rng: &mut ChaCha8Rng| {
        let c: Vec<u64> = moduli.iter().map(|&m| rng.random_range(0..m)).collect();
        cx.from_coords(1, &c)
    };
    for i in 0..50 {
        let eta = random_1(&mut rng);
        let eps = random_1(&mut rng);
        let f_prime = cx.coboundary(&eta).unwrap();
        let f = cx.product(&f_prime, &cx.coboundary(&eps).unwrap());
        let (src, a1) = crossed_product(&act, &f).map_err(|e| format!("pair {i}: {e}"))?;
        let (dst, a2) = crossed_product(&act, &f_prime).map_err(|e| format!("pair {i}: {e}"))?;
        ensure(!a1.sampled && !a2.sampled, || "associativity was sampled".into())?;
        let phi = coiso_map(&act, &f, &f_prime, &eps).map_err(|e| format!("pair {i}: {e}"))?;
        let r = check_isomorphism(&src, &dst, &phi);
        ensure(r.is_isomorphism(), || format!("pair {i}: {:?}", r.failure))?;
    }
    // element-level associativity where it is cheap
    let e1 = fx("E1");
    let (alg, _) = crossed_product(&e1, &Complex::new(&e1, 3).unwrap().identity(2)).map_err(|e| e.to_string())?;
    let triples = alg.check_associativity_elements(1 << 20).ok_or("E1 too large")?.map_err(|f| f.what)?;
    Ok(format!("kappa on {pairs} basis pairs; 50 coiso pairs on E2; {triples} element triples on E1"))
}

fn matrix_verdict() -> Outcome {
    for (name, label, order) in [("E1", "M_2(F_2)", "16"), ("E0", "M_3(F_2)", "512")] {
        let act = fx(name);
        let v = delta_theta_brauer_class(&act).map_err(|e| e.to_string())?;
        ensure(v.delta_theta_order == order && v.endomorphism_order == order, || {
            format!("{name}: orders {} / {}", v.delta_theta_order, v.endomorphism_order)
        })?;
        ensure(v.matrix_label.as_deref() == Some(label), || format!("{name}: {:?}", v.matrix_label))?;
        ensure(v.regular_bijective && v.kappa_verified && v.split, || format!("{name}: {v:?}"))?;
        ensure(regular_representation(&act).injective, || format!("{name}: not injective"))?;
    }
    Ok("E1 -> M_2(F_2) of order 16, E0 -> M_3(F_2) of order 512".into())
}

fn hilbert_90() -> Outcome {
    let mut seen = Vec::new();
    for name in ["G4", "frob-F4", "frob-F64-F4", "shift-frob-F4"] {
        let act = fx(name);
        let h = cohomology_group(&act, 1, Engine::Enumerate, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        ensure(h.h_order == 1u32.into(), || format!("{name}: |H^1| = {}", h.h_order))?;
        seen.push(format!("{name} (|Z^1| = {})", h.z_order));
    }
    Ok(format!("H^1 = 1 on {}", seen.join(", ")))
}

fn determinism() -> Outcome {
    let cli = Cli::parse_from(["partgal", "--fixture", "E2", "sequence"]);
    let a = run(&cli).map_err(|e| e.to_string())?;
    let b = run(&cli).map_err(|e| e.to_string())?;
    ensure(a.to_text() == b.to_text() && a.to_json() == b.to_json(), || "in-process reports differ".into())?;
    ensure(a.ok, || "sequence on E2 reported a defect".into())?;
    let dir = std::env::temp_dir().join(format!("partgal-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let json = dir.join(format!("run{i}.json"));
        let out = Process::new(env!("CARGO_BIN_EXE_partgal"))
            .args(["--fixture", "E2", "--out"])
            .arg(&json)
            .arg("sequence")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit status {:?}", out.status.code()))?;
        outputs.push((out.stdout, std::fs::read(&json).map_err(|e| e.to_string())?));
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(outputs[0] == outputs[1], || "binary reports differ".into())?;
    ensure(outputs[0].0 == a.to_text().into_bytes(), || "binary and library text differ".into())?;
    Ok(format!("{} text bytes and {} JSON bytes identical across runs", outputs[0].0.len(), outputs[0].1.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 axiom suite", 10, axiom_suite),
        ("2 coboundary squares to the identity", 60, delta_squared),
        ("3 engine agreement", 120, engine_agreement),
        ("4 sequence consequences", 120, sequence_consequences),
        ("5 structural isomorphisms", 60, structural_isomorphisms),
        ("6 matrix-ring verdict", 30, matrix_verdict),
        ("7 Hilbert 90", 60, hilbert_90),
        ("8 determinism", 60, determinism),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(limit) => Err(format!("over time: {detail}")),
            other => other,
        };
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {name} [{:.2}s, limit {limit}s]: {detail}", took.as_secs_f64());
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
