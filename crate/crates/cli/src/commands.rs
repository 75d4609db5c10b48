use std::collections::BTreeSet;

use partgal::cohomology::{cohomology_group, Cochain, CohomologyError, CohomologyGroup, Complex, Engine};
use partgal::crossed::{
    check_isomorphism, check_partial_representation, coiso_map, crossed_product, delta_theta, kappa_iso,
    skew_group_ring, theta_factor_set, AssociativityReport, CrossedError, GradedAlgebra, TwistedBimodule,
};
use partgal::galois::{
    find_certificate, regular_representation, verify_certificate, CertificateSearch, SearchOptions, Strategy,
};
use partgal::partial_action::{restrict_global, validate, PartialAction};
use partgal::picsemi::{star_action, z1_pics};
use partgal::sequence::{consequence_check, SequenceError, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{parse_twist, Instance};
use crate::report::{Report, Section};
use crate::CliError;

/// Rows beyond this are elided from long listings.
const LISTING_LIMIT: usize = 64;

fn cohomology_error(e: CohomologyError) -> CliError {
    match e {
        CohomologyError::Budget { what, budget } => CliError::Budget(format!("budget {budget} exceeded: {what}")),
        CohomologyError::Defect(d) => CliError::Defect(d),
        other => CliError::Precondition(other.to_string()),
    }
}

fn crossed_error(e: CrossedError) -> CliError {
    match e {
        CrossedError::Cohomology(c) => cohomology_error(c),
        CrossedError::Structure(f) => CliError::Defect(format!("{}: {}", f.what, f.witness)),
        other => CliError::Precondition(other.to_string()),
    }
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::OrthogonalIdempotents => "orthogonal-idempotents",
        Strategy::LinearSystem => "linear-system",
        Strategy::Exhaustive => "exhaustive",
    }
}

fn instance_section(act: &PartialAction) -> Section {
    let ring = act.ring();
    let group = act.group();
    let mut s = Section::kv("instance");
    s.pair("ring order", ring.order());
    s.pair("group order", group.order());
    s.pair("global", act.is_global());
    s
}

fn domains_section(act: &PartialAction) -> Section {
    let mut s = Section::table("domains", &["g", "1_g", "|D_g|", "rank", "idempotents below"]);
    for d in act.orbit_report().domains {
        s.row([d.g_label, d.one_g, d.size.to_string(), d.rank.to_string(), d.idempotents_below.to_string()]);
    }
    s
}

fn cochain_rows(section: &mut Section, act: &PartialAction, label: &str, c: &Cochain) {
    let listing = c.listing(act);
    let shown = listing.len().min(LISTING_LIMIT);
    for (t, v) in &listing[..shown] {
        section.row([label.to_string(), t.clone(), v.clone()]);
    }
    if listing.len() > shown {
        section.row([label.to_string(), "...".into(), format!("{} more", listing.len() - shown)]);
    }
}

pub fn validate_cmd(inst: &Instance) -> Report {
    let mut rep = Report::new("validate", &inst.name);
    let vr = validate(&inst.ring, &inst.group, &inst.candidate);
    let mut s = Section::kv("instance");
    s.pair("ring order", inst.ring.order());
    s.pair("group order", inst.group.order());
    rep.push(s);
    let mut v = Section::table("violations", &["axiom", "g", "h", "s", "detail"]);
    let lab = |g: Option<usize>| g.map_or("-".to_string(), |g| inst.group.label(g).to_string());
    for x in &vr.violations {
        let s = x.s.map_or("-".to_string(), |s| inst.ring.label(s).to_string());
        v.row([x.axiom.to_string(), lab(x.g), lab(x.h), s, x.detail.clone()]);
    }
    rep.push(v);
    if vr.is_valid() {
        let act = inst.action().expect("validated");
        rep.push(domains_section(&act));
        let mut d = Section::table("idempotent dynamics", &["g", "e <= 1_{g^-1}", "alpha_g(e)"]);
        for x in act.orbit_report().dynamics {
            d.row([act.group().label(x.g).to_string(), x.source, x.target]);
        }
        rep.push(d);
        rep.verdict = "valid unital partial action".into();
    } else {
        rep.ok = false;
        rep.verdict = format!("not a unital partial action ({} violations)", vr.violations.len());
    }
    rep
}

pub fn invariants_cmd(inst: &Instance, act: &PartialAction) -> Report {
    let mut rep = Report::new("invariants", &inst.name);
    rep.push(instance_section(act));
    rep.push(domains_section(act));
    let inv = act.invariant_subring();
    let mut s = Section::table("invariant ring", &["element"]);
    for &x in inv.members() {
        s.row([act.ring().label(x)]);
    }
    rep.push(s);
    rep.verdict = format!("|R^alpha| = {}", inv.len());
    rep
}

pub fn galois_cmd(inst: &Instance, act: &PartialAction, budget: u64) -> Report {
    let mut rep = Report::new("galois", &inst.name);
    rep.push(instance_section(act));
    let ring = act.ring();
    let opts = SearchOptions { budget, ..SearchOptions::default() };
    let mut s = Section::kv("certificate search");
    match find_certificate(act, opts) {
        CertificateSearch::Found { certificate, strategy } => {
            s.pair("result", "found");
            s.pair("strategy", strategy_name(strategy));
            s.pair("length", certificate.len());
            let check = verify_certificate(act, &certificate);
            s.pair("verified", check.is_valid());
            rep.push(s);
            let mut c = Section::table("coordinates", &["i", "x_i", "y_i"]);
            for (i, (x, y)) in certificate.pairs.iter().enumerate() {
                c.row([i.to_string(), ring.label(*x).to_string(), ring.label(*y).to_string()]);
            }
            rep.push(c);
            if !check.is_valid() {
                rep.ok = false;
                rep.verdict = "defect: certificate returned by the search does not verify".into();
                return rep;
            }
            rep.verdict = "Galois".into();
        }
        CertificateSearch::NotFound { conclusive, reason } => {
            s.pair("result", "not found");
            s.pair("conclusive", conclusive);
            s.pair("reason", reason);
            rep.push(s);
            rep.verdict = if conclusive { "not Galois".into() } else { "undecided: search inconclusive".into() };
        }
    }
    let reg = regular_representation(act);
    let mut r = Section::kv("regular representation R*G -> End_{R^alpha}(R)");
    r.pair("|R*G|", &reg.algebra_order);
    r.pair("|End_{R^alpha}(R)|", &reg.endomorphism_order);
    r.pair("|image|", &reg.image_order);
    r.pair("|kernel|", &reg.kernel_order);
    r.pair("homomorphism", reg.homomorphism);
    r.pair("R^alpha-linear", reg.invariant_linear);
    r.pair("injective", reg.injective);
    r.pair("bijective", reg.bijective);
    if let Some(m) = &reg.matrix {
        r.pair("matrix form", m.label());
        r.pair("matrices multiplicative", m.multiplicative);
    }
    rep.push(r);
    if !reg.homomorphism || !reg.invariant_linear {
        rep.ok = false;
        rep.verdict = format!("defect: {}", reg.hom_failure.clone().unwrap_or_else(|| "regular representation".into()));
    }
    rep
}

fn group_sections(rep: &mut Report, act: &PartialAction, h: &CohomologyGroup) {
    let mut s = Section::kv(&format!("H^{}", h.n));
    s.pair("engine", format!("{:?}", h.engine).to_lowercase());
    s.pair("|C|", &h.c_order);
    s.pair("|Z|", &h.z_order);
    s.pair("|B|", &h.b_order);
    s.pair("|H|", &h.h_order);
    let factors: Vec<String> = h.h_factors.iter().map(|d| format!("Z/{d}")).collect();
    s.pair("structure", if factors.is_empty() { "trivial".to_string() } else { factors.join(" x ") });
    s.pair("canonical representatives", h.canonical_representatives);
    rep.push(s);
    let mut g = Section::table("generators", &["generator", "tuple", "value"]);
    for (i, c) in h.h_generators.iter().enumerate() {
        cochain_rows(&mut g, act, &i.to_string(), c);
    }
    rep.push(g);
    let mut r = Section::table("representatives", &["class", "tuple", "value"]);
    for (i, c) in h.representatives.iter().take(LISTING_LIMIT).enumerate() {
        cochain_rows(&mut r, act, &i.to_string(), c);
    }
    rep.push(r);
}

pub fn cohomology_cmd(
    inst: &Instance,
    act: &PartialAction,
    n: usize,
    engine: Option<Engine>,
    budget: u64,
) -> Result<Report, CliError> {
    let engine = engine.unwrap_or(Engine::default_for(n));
    let h = cohomology_group(act, n, engine, budget).map_err(cohomology_error)?;
    let mut rep = Report::new(&format!("cohomology --n {n}"), &inst.name);
    rep.push(instance_section(act));
    group_sections(&mut rep, act, &h);
    rep.verdict = if h.h_factors.is_empty() { format!("H^{n} is trivial") } else { format!("|H^{n}| = {}", h.h_order) };
    Ok(rep)
}

fn algebra_section(name: &str, alg: &GradedAlgebra<'_>, assoc: &AssociativityReport) -> Section {
    let mut s = Section::kv(name);
    s.pair("order", alg.order());
    s.pair("basis size", alg.basis().len());
    let unity: Vec<String> = alg.unity().0.iter().map(|&x| alg.action().ring().label(x).to_string()).collect();
    s.pair("unity (coefficients by degree)", unity.join(" "));
    s.pair("associativity triples", assoc.triples_checked);
    s.pair("associativity", if assoc.sampled { "holds on a seeded sample" } else { "holds on every basis triple" });
    s.pair("grading", "respected");
    s.pair("R^alpha central", true);
    s
}

/// A twist from its description: `identity`, `coboundary:SEED` or `file:PATH`.
/// For coboundaries the witness `ε` is returned as well.
fn make_twist(act: &PartialAction, cx: &Complex<'_>, twist: &str) -> Result<(Cochain, Option<Cochain>), CliError> {
    if twist == "identity" {
        return Ok((cx.identity(2), None));
    }
    if let Some(seed) = twist.strip_prefix("coboundary:") {
        let seed: u64 = seed.parse().map_err(|_| CliError::Usage(format!("bad seed in --twist {twist:?}")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..cx.slot_count(1))
            .map(|s| {
                let units = cx.slot_corner(1, s).units.elements();
                units[rng.random_range(0..units.len())]
            })
            .collect();
        let eps = cx.cochain(1, values).map_err(cohomology_error)?;
        let f = cx.coboundary(&eps).map_err(cohomology_error)?;
        return Ok((f, Some(eps)));
    }
    if let Some(path) = twist.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        let values = parse_twist(path, &text, act).map_err(CliError::Config)?;
        let f = cx.cochain(2, values).map_err(|e| match e {
            CohomologyError::NotACochain { tuple, value } => {
                let slot = act.group().tuple_index(&tuple);
                let labels: Vec<&str> = tuple.iter().map(|&g| act.group().label(g)).collect();
                CliError::Precondition(format!(
                    "{path}: f({}) = {} is not a unit of R*{}",
                    labels.join(","),
                    act.ring().label(value),
                    act.ring().label(cx.slot_identity(2, slot))
                ))
            }
            other => CliError::Precondition(format!("{path}: {other}")),
        })?;
        return Ok((f, None));
    }
    Err(CliError::Usage(format!("--twist must be identity, coboundary:SEED or file:PATH, got {twist:?}")))
}

pub fn crossed_cmd(
    inst: &Instance,
    act: &PartialAction,
    twist: &str,
    constants: Option<&str>,
    budget: u64,
) -> Result<Report, CliError> {
    let cx = Complex::new(act, 3).map_err(cohomology_error)?;
    let (f, eps) = make_twist(act, &cx, twist)?;
    let mut rep = Report::new("crossed", &inst.name);
    rep.push(instance_section(act));
    let mut t = Section::table("twist", &["f", "tuple", "value"]);
    cochain_rows(&mut t, act, "f", &f);
    rep.push(t);
    let (alg, assoc) = match crossed_product(act, &f) {
        Ok(x) => x,
        Err(CrossedError::NotACocycle(tuple)) => {
            let labels: Vec<&str> = tuple.iter().map(|&g| act.group().label(g)).collect();
            rep.ok = false;
            rep.verdict =
                format!("twist is not a 2-cocycle: delta f differs from the identity at ({})", labels.join(","));
            return Ok(rep);
        }
        Err(e) => return Err(crossed_error(e)),
    };
    rep.push(algebra_section("crossed product R *_{alpha,f} G", &alg, &assoc));
    let (nf, witness) = cx.normalize_2cocycle(&f, budget).map_err(cohomology_error)?;
    let mut n = Section::table("normalized twist", &["f~", "tuple", "value"]);
    cochain_rows(&mut n, act, "f~", &nf);
    rep.push(n);
    let mut w = Section::table("normalizing witness", &["eps", "tuple", "value"]);
    cochain_rows(&mut w, act, "eps", &witness);
    rep.push(w);

    let (skew, _) = skew_group_ring(act).map_err(crossed_error)?;
    let eps = match eps {
        Some(e) => Some(e),
        None => cx.cohomologous(&f, &cx.identity(2), budget).map_err(cohomology_error)?,
    };
    let mut iso = Section::kv("isomorphism to the skew group ring");
    match &eps {
        Some(e) => {
            let phi = coiso_map(act, &f, &cx.identity(2), e).map_err(crossed_error)?;
            let r = check_isomorphism(&alg, &skew, &phi);
            iso.pair("f cohomologous to the identity", true);
            iso.pair("map", "a_g delta_g -> a_g eps(g) delta_g");
            iso.pair("basis pairs checked", r.pairs_checked);
            iso.pair("isomorphism", r.is_isomorphism());
            if !r.is_isomorphism() {
                rep.ok = false;
                iso.pair("failure", r.failure.map_or(String::new(), |f| format!("{}: {}", f.what, f.witness)));
            }
        }
        None => {
            iso.pair("f cohomologous to the identity", false);
        }
    }
    rep.push(iso);
    if let Some(path) = constants {
        std::fs::write(path, alg.structure_constants()).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    if rep.ok {
        rep.verdict = match eps {
            Some(_) => "associative unital crossed product, isomorphic to R *_alpha G".into(),
            None => "associative unital crossed product, twist not cohomologous to the identity".into(),
        };
    } else if rep.verdict.is_empty() {
        rep.verdict = "defect: coiso map failed".into();
    }
    Ok(rep)
}

pub fn delta_theta_cmd(inst: &Instance, act: &PartialAction, budget: u64) -> Result<Report, CliError> {
    let mut rep = Report::new("delta-theta", &inst.name);
    rep.push(instance_section(act));
    let mut b = Section::table("twisted bimodules (D_g)_{g^-1}", &["g", "|D_g|", "axioms"]);
    for g in act.group().elements() {
        let tb = TwistedBimodule::new(act, g);
        let ok = tb.check();
        if ok.is_err() {
            rep.ok = false;
        }
        b.row([
            act.group().label(g).to_string(),
            tb.carrier().len().to_string(),
            ok.map_or_else(|f| format!("FAIL {}: {}", f.what, f.witness), |_| "hold".into()),
        ]);
    }
    rep.push(b);
    let fs = theta_factor_set(act).verify();
    let mut f = Section::kv("factor set of Theta");
    f.pair("pairs (g,h)", fs.pairs);
    f.pair("element checks", fs.element_checks);
    f.pair("valid", fs.is_valid());
    for x in &fs.failures {
        f.pair("failure", format!("{}: {}", x.what, x.witness));
    }
    rep.ok &= fs.is_valid();
    rep.push(f);
    let (dt, assoc) = delta_theta(act).map_err(crossed_error)?;
    rep.push(algebra_section("Delta(Theta)", &dt, &assoc));
    let (skew, _) = skew_group_ring(act).map_err(crossed_error)?;
    let k = check_isomorphism(&dt, &skew, &kappa_iso());
    let mut ks = Section::kv("kappa: Delta(Theta) -> R *_alpha G, u_g -> u_g delta_g");
    ks.pair("basis pairs checked", k.pairs_checked);
    ks.pair("bijective", k.bijective);
    ks.pair("multiplicative", k.multiplicative);
    ks.pair("unital", k.unital);
    ks.pair("fixes R^alpha", k.fixes_invariants);
    rep.ok &= k.is_isomorphism();
    rep.push(ks);
    let pr = check_partial_representation(&skew);
    let mut p = Section::kv("partial representation g -> 1_g delta_g");
    match pr {
        Ok(n) => p.pair("identities checked", n),
        Err(f) => {
            rep.ok = false;
            p.pair("failure", format!("{}: {}", f.what, f.witness))
        }
    };
    rep.push(p);
    let mut c = Section::kv("twists of Theta");
    match z1_pics(&star_action(act), budget) {
        Some(z) => {
            c.pair("|Z^1(G, alpha*, PicS(R))|", z.z1.len());
            c.pair("only the identity cocycle", z.only_identity);
            if z.only_identity {
                c.pair("consequence", "Delta(f Theta) = Delta(Theta) for every admissible f");
            }
        }
        None => {
            c.pair("|Z^1(G, alpha*, PicS(R))|", format!("skipped: budget {budget} exceeded"));
        }
    }
    rep.push(c);
    rep.verdict = if rep.ok {
        "Delta(Theta) is an associative unital ring isomorphic to R *_alpha G".into()
    } else {
        "defect in the Theta constructions".into()
    };
    Ok(rep)
}

pub fn pics_cmd(inst: &Instance, act: &PartialAction, budget: u64) -> Report {
    let mut rep = Report::new("pics", &inst.name);
    rep.push(instance_section(act));
    let ring = act.ring();
    let star = star_action(act);
    let mut m = Section::table("PicS(R) = E(R)", &["class [Re]", "e"]);
    for c in star.monoid().classes() {
        m.row([format!("[R{}]", ring.label(c.0)), ring.label(c.0).to_string()]);
    }
    rep.push(m);
    let mut t = Section::table("alpha*", &["g", "e", "alpha*_g(e)"]);
    for (g, e, f) in star.table() {
        t.row([act.group().label(g), ring.label(e), ring.label(f)]);
    }
    rep.push(t);
    let check = star.check();
    let mut a = Section::kv("partial action axioms on E(R)");
    a.pair("annihilator cross-checks", check.annihilator_checks);
    a.pair("valid", check.is_valid());
    for v in &check.violations {
        a.pair("violation", v);
    }
    rep.ok &= check.is_valid();
    rep.push(a);
    let mut z = Section::kv("H^1(G, alpha*, PicS(R))");
    match z1_pics(&star, budget) {
        Some(h) => {
            let counts: Vec<String> = h.corner_unit_counts.iter().map(|c| c.to_string()).collect();
            z.pair("|U(X_g)| by g", counts.join(" "));
            z.pair("candidates", h.candidates);
            z.pair("|Z^1|", h.z1.len());
            z.pair("|B^1|", h.b1.len());
            z.pair("|H^1|", h.h1_order);
            z.pair("Z^1 is the identity cocycle alone", h.only_identity);
            rep.verdict = format!("|PicS(R)| = {}, |H^1(G, alpha*, PicS)| = {}", star.monoid().len(), h.h1_order);
        }
        None => {
            z.pair("|Z^1|", format!("skipped: budget {budget} exceeded"));
            rep.verdict = format!("|PicS(R)| = {}", star.monoid().len());
        }
    }
    rep.push(z);
    let mut n = Section::kv("notes");
    n.pair("model", "finite commutative rings have trivial Picard groups, so [Re] is determined by e");
    n.pair("commutative Galois case", "PicS_0 coincides with PicS(R) and the quotient of H^1 with H^1");
    rep.push(n);
    if !rep.ok {
        rep.verdict = "defect: alpha* fails the partial action axioms".into();
    }
    rep
}

pub fn sequence_cmd(inst: &Instance, act: &PartialAction, budget: u64) -> Result<Report, CliError> {
    let seq = match consequence_check(act, budget) {
        Ok(s) => s,
        Err(SequenceError::NotGalois(why)) => return Err(CliError::Precondition(why)),
        Err(SequenceError::Cohomology(e)) => return Err(cohomology_error(e)),
        Err(SequenceError::Crossed(e)) => return Err(crossed_error(e)),
        Err(e) => return Err(CliError::Precondition(e.to_string())),
    };
    let mut rep = Report::new("sequence", &inst.name);
    rep.push(instance_section(act));
    let mut c = Section::kv("Galois certificate");
    c.pair("length", seq.certificate_length);
    c.pair("strategy", strategy_name(seq.certificate_strategy));
    rep.push(c);
    let mut t = Section::table("terms", &["term", "order", "predicted", "verdict", "method"]);
    for term in &seq.terms {
        let verdict = match term.verdict {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent => "INCONSISTENT",
            Verdict::Unpredicted => "no prediction",
            Verdict::Skipped => "skipped",
        };
        t.row([
            term.name.clone(),
            term.order.clone().unwrap_or_else(|| "-".into()),
            term.prediction.clone().unwrap_or_else(|| "-".into()),
            verdict.to_string(),
            term.method.clone(),
        ]);
    }
    rep.push(t);
    let mut x = Section::table("cross-checks", &["check", "passed", "detail"]);
    for cc in &seq.cross_checks {
        x.row([cc.name.clone(), cc.passed.to_string(), cc.detail.clone()]);
    }
    rep.push(x);
    let mut b = Section::kv("Delta(Theta) against End_{R^alpha}(R)");
    b.pair("|Delta(Theta)|", &seq.brauer.delta_theta_order);
    b.pair("|End_{R^alpha}(R)|", &seq.brauer.endomorphism_order);
    b.pair("kappa verified", seq.brauer.kappa_verified);
    b.pair("regular representation bijective", seq.brauer.regular_bijective);
    b.pair("matrix form", seq.brauer.matrix_label.clone().unwrap_or_else(|| "-".into()));
    b.pair("split", seq.brauer.split);
    rep.push(b);
    rep.ok = seq.consistent;
    rep.verdict = if seq.consistent {
        "consistent with exactness".into()
    } else {
        "INCONSISTENT with exactness: defect in the implementation or the model".into()
    };
    Ok(rep)
}

pub fn census_cmd(inst: &Instance, engine: Option<Engine>, budget: u64) -> Result<Report, CliError> {
    let parent = inst.parent.as_ref().ok_or_else(|| {
        CliError::Precondition(
            "census needs a global action (kind \"global\" or \"automorphisms\", or a global fixture)".into(),
        )
    })?;
    let ring = parent.ring();
    let mut rep = Report::new("census", &inst.name);
    let mut s = Section::kv("global action");
    s.pair("ring order", ring.order());
    s.pair("group order", parent.group().order());
    rep.push(s);
    let mut t =
        Section::table("restrictions", &["e", "|Re|", "|D_g| by g", "|R^alpha|", "Galois", "|H^0|", "|H^1|", "|H^2|"]);
    let mut seen = BTreeSet::new();
    for e in ring.idempotents() {
        if e.elem() == ring.zero() || !seen.insert(e.elem()) {
            continue;
        }
        let act = restrict_global(parent, e);
        let sizes: Vec<String> = act.orbit_report().domain_sizes().iter().map(|d| d.to_string()).collect();
        let galois = match find_certificate(&act, SearchOptions { budget, ..SearchOptions::default() }) {
            CertificateSearch::Found { .. } => "yes".to_string(),
            CertificateSearch::NotFound { conclusive: true, .. } => "no".to_string(),
            CertificateSearch::NotFound { conclusive: false, .. } => "undecided".to_string(),
        };
        let mut orders = Vec::new();
        for n in 0..3 {
            let eng = engine.unwrap_or(Engine::default_for(n));
            orders.push(match cohomology_group(&act, n, eng, budget) {
                Ok(h) => h.h_order.to_string(),
                Err(CohomologyError::Budget { .. }) => "skipped".into(),
                Err(e) => return Err(cohomology_error(e)),
            });
        }
        let mut row = vec![
            ring.label(e.elem()).to_string(),
            act.ring().order().to_string(),
            sizes.join(" "),
            act.invariant_subring().len().to_string(),
            galois,
        ];
        row.extend(orders);
        t.row(row);
    }
    let count = t.rows.len();
    rep.push(t);
    rep.verdict = format!("{count} nonzero restriction idempotents");
    Ok(rep)
}

pub fn fixtures_cmd() -> Report {
    let mut rep = Report::new("fixtures", "-");
    let mut t = Section::table("fixtures", &["name", "alias", "description"]);
    for f in partgal::fixtures::FIXTURES {
        t.row([f.name, f.alias.unwrap_or("-"), f.description]);
    }
    rep.push(t);
    rep.verdict = format!("{} built-in fixtures", partgal::fixtures::FIXTURES.len());
    rep
}
