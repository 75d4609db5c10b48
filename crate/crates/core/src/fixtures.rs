//! Named example actions and a generator of random restricted actions.
//!
//! | name | alias | action |
//! |------|-------|--------|
//! | `global-shift-F2` | `E0` | `C_3` cyclically shifting the factors of `F_2^3` |
//! | `shift3-F2` | `E1` | `E0` restricted to `e = (1,1,0)` |
//! | `shift3-F4` | `E2` | the same restriction on `F_4^3` |
//! | `trivial-C2-F2` | `N1` | `C_2` acting trivially on `F_2` |
//! | `global-shift-F4` | `G4` | `C_3` cyclically shifting the factors of `F_4^3` |
//! | `trivial-C2-F3` | `N2` | `C_2` acting trivially on `F_3` |
//! | `shift-frob-F4` | | `C_6` generated by shift composed with Frobenius on `F_4^3` |
//! | `frob-F64-F4` | | `C_3` acting on `F_64` by `x ↦ x^4` |
//! | `frob-F4` | | `C_2` acting on `F_4` by `x ↦ x^2` |

use rand::seq::SliceRandom;
use rand::Rng;

use crate::finring::{make_ring, Elem, FiniteRing, Idempotent, RingDescriptor, RingError};
use crate::partial_action::{restrict_global, ActionError, GlobalAction, PartialAction};

/// Largest ring order produced by [`random_restricted_action`] by default.
pub const RANDOM_RING_CAP: usize = 512;

pub struct FixtureInfo {
    pub name: &'static str,
    pub alias: Option<&'static str>,
    pub description: &'static str,
}

pub const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo { name: "global-shift-F2", alias: Some("E0"), description: "C3 shifting the factors of F2^3" },
    FixtureInfo { name: "shift3-F2", alias: Some("E1"), description: "global-shift-F2 restricted to (1,1,0)" },
    FixtureInfo { name: "shift3-F4", alias: Some("E2"), description: "global-shift-F4 restricted to (1,1,0)" },
    FixtureInfo { name: "trivial-C2-F2", alias: Some("N1"), description: "C2 acting trivially on F2" },
    FixtureInfo { name: "global-shift-F4", alias: Some("G4"), description: "C3 shifting the factors of F4^3" },
    FixtureInfo { name: "trivial-C2-F3", alias: Some("N2"), description: "C2 acting trivially on F3" },
    FixtureInfo { name: "shift-frob-F4", alias: None, description: "C6 generated by shift then Frobenius on F4^3" },
    FixtureInfo { name: "frob-F64-F4", alias: None, description: "C3 acting on F64 by x -> x^4" },
    FixtureInfo { name: "frob-F4", alias: None, description: "C2 acting on F4 by x -> x^2" },
];

/// Canonical name of a fixture given its name or alias (case-insensitive).
pub fn canonical_name(name: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|f| f.name.eq_ignore_ascii_case(name) || f.alias.is_some_and(|a| a.eq_ignore_ascii_case(name)))
        .map(|f| f.name)
}

/// The fixture as a global action, for the fixtures that are global.
pub fn fixture_global(name: &str) -> Option<GlobalAction> {
    let f4 = RingDescriptor::gf4();
    let f2 = RingDescriptor::zmod(2);
    let g = match canonical_name(name)? {
        "global-shift-F2" => cyclic_shift(&f2, 3),
        "global-shift-F4" => cyclic_shift(&f4, 3),
        "trivial-C2-F2" => trivial(&f2, 2),
        "trivial-C2-F3" => trivial(&RingDescriptor::zmod(3), 2),
        "shift-frob-F4" => {
            let factors = vec![f4; 3];
            let ring = make_ring(&RingDescriptor::product(factors.clone())).expect("valid");
            let sigma = permutation_frobenius(&ring, &factors, &[1, 2, 0], &[1, 1, 1]).expect("valid");
            GlobalAction::cyclic(ring, 6, &sigma).expect("order 6")
        }
        "frob-F64-F4" => {
            let ring = make_ring(&RingDescriptor::gf(2, &[1, 1, 0, 0, 0, 0, 1])).expect("x^6+x+1 is irreducible");
            let sigma: Vec<Elem> = ring.elements().map(|x| ring.pow(x, 4)).collect();
            GlobalAction::cyclic(ring, 3, &sigma).expect("order 3")
        }
        "frob-F4" => {
            let ring = make_ring(&f4).expect("valid");
            let sigma: Vec<Elem> = ring.elements().map(|x| ring.pow(x, 2)).collect();
            GlobalAction::cyclic(ring, 2, &sigma).expect("order 2")
        }
        _ => return None,
    };
    Some(g)
}

/// The global action a fixture is, or is restricted from.
pub fn fixture_parent(name: &str) -> Option<GlobalAction> {
    match canonical_name(name)? {
        "shift3-F2" => fixture_global("global-shift-F2"),
        "shift3-F4" => fixture_global("global-shift-F4"),
        other => fixture_global(other),
    }
}

/// Builds a fixture by name or alias.
pub fn fixture(name: &str) -> Option<PartialAction> {
    let canonical = canonical_name(name)?;
    match canonical {
        "shift3-F2" | "shift3-F4" => {
            let glob = fixture_global(if canonical == "shift3-F2" { "global-shift-F2" } else { "global-shift-F4" })?;
            let ring = glob.ring();
            let e = ring.idempotent(ring.join(&[1, 1, 0]).expect("three factors")).expect("idempotent");
            Some(restrict_global(&glob, e))
        }
        _ => fixture_global(canonical).map(|g| g.as_partial()),
    }
}

fn cyclic_shift(factor: &RingDescriptor, k: usize) -> GlobalAction {
    let factors = vec![factor.clone(); k];
    let ring = make_ring(&RingDescriptor::product(factors.clone())).expect("valid");
    let perm: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let sigma = permutation_frobenius(&ring, &factors, &perm, &vec![0; k]).expect("valid");
    GlobalAction::cyclic(ring, k, &sigma).expect("shift has order k")
}

fn trivial(ring: &RingDescriptor, n: usize) -> GlobalAction {
    let ring = make_ring(ring).expect("valid");
    let id: Vec<Elem> = ring.elements().collect();
    GlobalAction::cyclic(ring, n, &id).expect("identity")
}

fn characteristic(ring: &FiniteRing) -> u64 {
    let mut k = 1;
    let mut x = ring.one();
    while x != ring.zero() {
        x = ring.add(x, ring.one());
        k += 1;
    }
    k
}

/// The map on a product ring sending component `i` to component `perm[i]`
/// after raising it to the power `char^frob[i]`. Whether this is a ring
/// automorphism is left to [`GlobalAction::new`].
pub fn permutation_frobenius(
    ring: &FiniteRing,
    factors: &[RingDescriptor],
    perm: &[usize],
    frob: &[u32],
) -> Result<Vec<Elem>, ActionError> {
    let k = factors.len();
    if perm.len() != k || frob.len() != k {
        return Err(ActionError::NotGlobal("one permutation entry and one Frobenius exponent per factor".into()));
    }
    let mut seen = vec![false; k];
    for (i, &p) in perm.iter().enumerate() {
        if p >= k || seen[p] {
            return Err(ActionError::NotGlobal("not a permutation of the factors".into()));
        }
        if factors[i] != factors[p] {
            return Err(ActionError::NotGlobal(format!("factor {i} is sent to the non-identical factor {p}")));
        }
        seen[p] = true;
    }
    let rings = factors
        .iter()
        .map(make_ring)
        .collect::<Result<Vec<_>, RingError>>()
        .map_err(|e| ActionError::NotGlobal(e.to_string()))?;
    if k == 1 && ring.component_orders().is_empty() {
        let exp = characteristic(ring).pow(frob[0]);
        return Ok(ring.elements().map(|x| ring.pow(x, exp)).collect());
    }
    let exps: Vec<u64> = rings.iter().zip(frob).map(|(r, &a)| characteristic(r).pow(a)).collect();
    Ok(ring
        .elements()
        .map(|x| {
            let parts = ring.split(x);
            let mut out = vec![0; k];
            for i in 0..k {
                out[perm[i]] = rings[i].pow(Elem(parts[i] as u32), exps[i]).idx();
            }
            ring.join(&out).expect("component indices in range")
        })
        .collect())
}

/// Smallest `n ≥ 1` with `σ^n = id`.
pub fn automorphism_order(sigma: &[Elem]) -> usize {
    let mut cur: Vec<Elem> = sigma.to_vec();
    let mut n = 1;
    while cur.iter().enumerate().any(|(i, x)| x.idx() != i) {
        cur = cur.iter().map(|x| sigma[x.idx()]).collect();
        n += 1;
    }
    n
}

/// Finite fields of order at most 9, with the polynomials used to build them.
pub fn small_fields() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::zmod(2),
        RingDescriptor::zmod(3),
        RingDescriptor::gf4(),
        RingDescriptor::zmod(5),
        RingDescriptor::zmod(7),
        RingDescriptor::gf(2, &[1, 1, 0, 1]),
        RingDescriptor::gf(3, &[1, 0, 1]),
    ]
}

fn descriptor_order(d: &RingDescriptor) -> usize {
    match d {
        RingDescriptor::Zmod { n } => *n as usize,
        RingDescriptor::Gf { p, poly } => (*p as usize).pow(poly.len() as u32 - 1),
        RingDescriptor::Product { factors } => factors.iter().map(descriptor_order).product(),
    }
}

/// A random global action of a cyclic group on a product of at most four
/// fields of order at most 9 (ring order at most `cap`), generated by a
/// factor permutation composed with Frobenius powers, and a random
/// idempotent to restrict to.
pub fn random_global_action<R: Rng>(rng: &mut R, cap: usize) -> (GlobalAction, Vec<RingDescriptor>, Idempotent) {
    let fields = small_fields();
    let factors = loop {
        let k = rng.random_range(1..=4);
        // repeat a few field types so that permutations have room to move
        let kinds = rng.random_range(1..=k);
        let pool: Vec<RingDescriptor> = (0..kinds).map(|_| fields[rng.random_range(0..fields.len())].clone()).collect();
        let mut factors: Vec<RingDescriptor> = (0..k).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
        factors.sort_by_key(|d| format!("{d:?}"));
        if factors.iter().map(descriptor_order).product::<usize>() <= cap {
            break factors;
        }
    };
    let k = factors.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut start = 0;
    while start < k {
        let end = (start..k).find(|&j| factors[j] != factors[start]).unwrap_or(k);
        perm[start..end].shuffle(rng);
        start = end;
    }
    let frob: Vec<u32> = factors
        .iter()
        .map(|d| match d {
            RingDescriptor::Gf { poly, .. } => rng.random_range(0..poly.len() as u32 - 1),
            _ => 0,
        })
        .collect();
    let ring = make_ring(&RingDescriptor::product(factors.clone())).expect("small product");
    let sigma = permutation_frobenius(&ring, &factors, &perm, &frob).expect("type-preserving permutation");
    let n = automorphism_order(&sigma);
    let glob = GlobalAction::cyclic(ring, n, &sigma).expect("automorphism of order n");
    let idems = glob.ring().idempotents();
    let e = idems[rng.random_range(0..idems.len())];
    (glob, factors, e)
}

/// [`random_global_action`] followed by the restriction.
pub fn random_restricted_action<R: Rng>(rng: &mut R, cap: usize) -> PartialAction {
    let (glob, _, e) = random_global_action(rng, cap);
    restrict_global(&glob, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn every_fixture_builds() {
        for f in FIXTURES {
            let act = fixture(f.name).unwrap_or_else(|| panic!("{}", f.name));
            if let Some(a) = f.alias {
                assert_eq!(fixture(a).unwrap().ring().order(), act.ring().order());
            }
        }
    }

    #[test]
    fn fixture_sizes() {
        let e2 = fixture("E2").unwrap();
        assert_eq!(e2.ring().order(), 16);
        assert_eq!(e2.orbit_report().domain_sizes(), vec![16, 4, 4]);
        assert_eq!(fixture("shift-frob-F4").unwrap().group().order(), 6);
        let f64 = fixture("frob-F64-F4").unwrap();
        assert_eq!(f64.invariant_subring().len(), 4);
    }

    #[test]
    fn random_actions_respect_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (glob, factors, _) = random_global_action(&mut rng, RANDOM_RING_CAP);
            assert!(glob.ring().order() <= RANDOM_RING_CAP);
            assert!(factors.len() <= 4);
        }
    }

    #[test]
    fn mismatched_permutation_is_rejected() {
        let factors = vec![RingDescriptor::zmod(2), RingDescriptor::zmod(3)];
        let ring = make_ring(&RingDescriptor::product(factors.clone())).unwrap();
        assert!(permutation_frobenius(&ring, &factors, &[1, 0], &[0, 0]).is_err());
    }
}
