//! Brute-force oracles computed straight from the defining identities, with
//! no use of the cochain machinery, compared against the library.

use num_bigint::BigUint;
use partgal::cohomology::{cohomology_group, Engine, DEFAULT_BUDGET};
use partgal::finring::{Elem, FiniteRing};
use partgal::fixtures::fixture;
use partgal::galois::{find_certificate, regular_representation, CertificateSearch, SearchOptions};
use partgal::partial_action::PartialAction;

/// Units of `R·e` by scanning for inverses.
fn corner_units(ring: &FiniteRing, e: Elem) -> Vec<Elem> {
    let ideal: Vec<Elem> = ring.elements().filter(|&x| ring.mul(x, e) == x).collect();
    ideal.iter().copied().filter(|&x| ideal.iter().any(|&y| ring.mul(x, y) == e)).collect()
}

fn corner_inverse(ring: &FiniteRing, e: Elem, x: Elem) -> Elem {
    ring.elements().find(|&y| ring.mul(ring.mul(x, y), e) == e && ring.mul(y, e) == y).unwrap()
}

/// All maps assigning to each index `i` one of `choices[i]`.
fn all_maps(choices: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out.into_iter().flat_map(|p| c.iter().map(move |&x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// `α_g(f(h)·1_{g⁻¹})·f(g) = f(gh)·1_g` for all `g`, `h`.
fn z1_oracle(act: &PartialAction) -> (usize, usize) {
    let ring = act.ring();
    let group = act.group();
    let choices: Vec<Vec<Elem>> = group.elements().map(|g| corner_units(ring, act.one(g))).collect();
    let maps = all_maps(&choices);
    let z1 = maps
        .iter()
        .filter(|f| {
            group.elements().all(|g| {
                group.elements().all(|h| {
                    let gh = group.mul(g, h);
                    ring.mul(act.apply(g, f[h]), f[g]) == ring.mul(f[gh], act.one(g))
                })
            })
        })
        .count();
    // B¹: g ↦ α_g(x·1_{g⁻¹})·x⁻¹ for units x of R
    let mut b1: Vec<Vec<Elem>> = corner_units(ring, ring.one())
        .into_iter()
        .map(|x| {
            let xi = corner_inverse(ring, ring.one(), x);
            group.elements().map(|g| ring.mul(act.apply(g, x), ring.mul(xi, act.one(g)))).collect()
        })
        .collect();
    b1.sort();
    b1.dedup();
    (z1, b1.len())
}

/// `α_g(f(h,l)·1_{g⁻¹})·f(g,hl) = f(g,h)·f(gh,l)` with `f(g,h) ∈ 𝒰(R·1_g·1_{gh})`,
/// and `B²` as the image of `(g,h) ↦ α_g(ε(h)·1_{g⁻¹})·ε(gh)⁻¹·ε(g)`.
fn z2_b2_oracle(act: &PartialAction) -> (usize, usize) {
    let ring = act.ring();
    let group = act.group();
    let n = group.order();
    let idem = |g: usize, h: usize| ring.mul(act.one(g), act.one(group.mul(g, h)));
    let choices: Vec<Vec<Elem>> = (0..n * n).map(|s| corner_units(ring, idem(s / n, s % n))).collect();
    let z2 = all_maps(&choices)
        .iter()
        .filter(|f| {
            let f = |g: usize, h: usize| f[g * n + h];
            (0..n).all(|g| {
                (0..n).all(|h| {
                    (0..n).all(|l| {
                        let (gh, hl) = (group.mul(g, h), group.mul(h, l));
                        ring.mul(act.apply(g, f(h, l)), f(g, hl)) == ring.mul(f(g, h), f(gh, l))
                    })
                })
            })
        })
        .count();
    let c1: Vec<Vec<Elem>> = group.elements().map(|g| corner_units(ring, act.one(g))).collect();
    let mut b2: Vec<Vec<Elem>> = all_maps(&c1)
        .into_iter()
        .map(|e| {
            (0..n * n)
                .map(|s| {
                    let (g, h) = (s / n, s % n);
                    let gh = group.mul(g, h);
                    let inv = corner_inverse(ring, act.one(gh), e[gh]);
                    ring.mul(ring.mul(ring.mul(act.apply(g, e[h]), inv), e[g]), idem(g, h))
                })
                .collect()
        })
        .collect();
    b2.sort();
    b2.dedup();
    (z2, b2.len())
}

#[test]
fn first_cohomology_matches_direct_enumeration() {
    for name in ["E0", "E1", "E2", "N1", "N2", "G4", "frob-F4", "frob-F64-F4"] {
        let act = fixture(name).unwrap();
        let (z1, b1) = z1_oracle(&act);
        let h = cohomology_group(&act, 1, Engine::Both, DEFAULT_BUDGET).unwrap();
        assert_eq!(h.z_order, BigUint::from(z1), "{name} Z1");
        assert_eq!(h.b_order, BigUint::from(b1), "{name} B1");
        assert_eq!(h.h_order, BigUint::from(z1 / b1), "{name} H1");
    }
}

#[test]
fn second_cohomology_matches_direct_enumeration() {
    for name in ["E0", "E1", "E2", "N1", "N2", "frob-F4"] {
        let act = fixture(name).unwrap();
        let (z2, b2) = z2_b2_oracle(&act);
        for engine in [Engine::Enumerate, Engine::Structure] {
            let h = cohomology_group(&act, 2, engine, DEFAULT_BUDGET).unwrap();
            assert_eq!(h.z_order, BigUint::from(z2), "{name} Z2 {engine:?}");
            assert_eq!(h.b_order, BigUint::from(b2), "{name} B2 {engine:?}");
        }
    }
}

#[test]
fn invariant_ring_by_scan() {
    for name in ["E0", "E1", "E2", "N1", "G4"] {
        let act = fixture(name).unwrap();
        let ring = act.ring();
        let scan: Vec<Elem> = ring
            .elements()
            .filter(|&r| act.group().elements().all(|g| act.apply(g, r) == ring.mul(r, act.one(g))))
            .collect();
        assert_eq!(act.invariant_subring().members(), scan.as_slice(), "{name}");
    }
}

/// Whether some list of at most `m` pairs satisfies the coordinate identity.
fn brute_force_coordinates(act: &PartialAction, m: usize) -> bool {
    let ring = act.ring();
    let els: Vec<Elem> = ring.elements().collect();
    let pairs: Vec<(Elem, Elem)> = els.iter().flat_map(|&x| els.iter().map(move |&y| (x, y))).collect();
    let mut stack: Vec<Vec<(Elem, Elem)>> = vec![Vec::new()];
    while let Some(list) = stack.pop() {
        let ok = act.group().elements().all(|g| {
            let s = list.iter().fold(ring.zero(), |acc, &(x, y)| ring.add(acc, ring.mul(x, act.apply(g, y))));
            s == if g == act.group().identity() { ring.one() } else { ring.zero() }
        });
        if ok && !list.is_empty() {
            return true;
        }
        if list.len() < m {
            for &p in &pairs {
                stack.push([list.clone(), vec![p]].concat());
            }
        }
    }
    false
}

#[test]
fn galois_search_agrees_with_brute_force() {
    let n1 = fixture("N1").unwrap();
    assert!(!brute_force_coordinates(&n1, 3));
    assert!(matches!(
        find_certificate(&n1, SearchOptions::default()),
        CertificateSearch::NotFound { conclusive: true, .. }
    ));
    let e1 = fixture("E1").unwrap();
    assert!(brute_force_coordinates(&e1, 2));
    assert!(find_certificate(&e1, SearchOptions::default()).certificate().is_some());
}

/// `|End_{R^α}(R)|` counted over all additive maps, each fixed by the images
/// of a generating set of `(R, +)` found by scanning.
fn endomorphism_count(act: &PartialAction) -> usize {
    let ring = act.ring();
    let inv = act.invariant_subring();
    let els: Vec<Elem> = ring.elements().collect();
    // greedy generating set
    let mut gens = Vec::new();
    let mut span = vec![ring.zero()];
    for &x in &els {
        if !span.contains(&x) {
            gens.push(x);
            let mut next = span.clone();
            loop {
                let add: Vec<Elem> = next.iter().map(|&s| ring.add(s, x)).filter(|s| !next.contains(s)).collect();
                if add.is_empty() {
                    break;
                }
                next.extend(add);
            }
            span = next;
        }
    }
    let choices = vec![els.clone(); gens.len()];
    let mut count = 0;
    for images in all_maps(&choices) {
        // extend additively; reject if inconsistent
        let mut map: Vec<Option<Elem>> = vec![None; ring.order()];
        map[ring.zero().idx()] = Some(ring.zero());
        let mut frontier = vec![ring.zero()];
        let mut ok = true;
        while let Some(s) = frontier.pop() {
            for (&gen, &img) in gens.iter().zip(&images) {
                let t = ring.add(s, gen);
                let v = ring.add(map[s.idx()].unwrap(), img);
                match map[t.idx()] {
                    None => {
                        map[t.idx()] = Some(v);
                        frontier.push(t);
                    }
                    Some(w) if w != v => ok = false,
                    _ => {}
                }
            }
        }
        if !ok {
            continue;
        }
        let phi = |x: Elem| map[x.idx()].unwrap();
        let additive = els.iter().all(|&a| els.iter().all(|&b| phi(ring.add(a, b)) == ring.add(phi(a), phi(b))));
        let linear = inv.members().iter().all(|&t| els.iter().all(|&a| phi(ring.mul(t, a)) == ring.mul(t, phi(a))));
        if additive && linear {
            count += 1;
        }
    }
    count
}

#[test]
fn endomorphism_ring_order_by_brute_force() {
    for name in ["E0", "E1", "N1"] {
        let act = fixture(name).unwrap();
        let reg = regular_representation(&act);
        assert_eq!(reg.endomorphism_order, BigUint::from(endomorphism_count(&act)), "{name}");
    }
}
