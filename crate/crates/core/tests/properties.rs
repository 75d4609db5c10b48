use partgal::cohomology::{Cochain, Complex};
use partgal::finring::Elem;
use partgal::fixtures::{fixture, random_restricted_action, RANDOM_RING_CAP};
use partgal::partial_action::validate;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A cochain whose slot `s` takes the `picks[s] mod |units|`-th unit.
fn pick_cochain(cx: &Complex<'_>, n: usize, picks: &[u32]) -> Cochain {
    let values: Vec<Elem> = (0..cx.slot_count(n))
        .map(|s| {
            let units = cx.slot_corner(n, s).units.elements();
            units[picks[s % picks.len()] as usize % units.len()]
        })
        .collect();
    cx.cochain(n, values).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 1..40)
}

const NAMES: [&str; 5] = ["E1", "E2", "N2", "G4", "shift-frob-F4"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coboundary_is_a_homomorphism(which in 0..NAMES.len(), n in 0usize..3, a in picks(), b in picks()) {
        let act = fixture(NAMES[which]).unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let (f, g) = (pick_cochain(&cx, n, &a), pick_cochain(&cx, n, &b));
        let lhs = cx.coboundary(&cx.product(&f, &g)).unwrap();
        let rhs = cx.product(&cx.coboundary(&f).unwrap(), &cx.coboundary(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coboundaries_are_cocycles(which in 0..NAMES.len(), n in 0usize..2, a in picks()) {
        let act = fixture(NAMES[which]).unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let f = pick_cochain(&cx, n, &a);
        let df = cx.coboundary(&f).unwrap();
        prop_assert!(cx.is_cocycle(&df).unwrap());
    }

    #[test]
    fn coordinates_round_trip(which in 0..NAMES.len(), n in 0usize..3, a in picks()) {
        let act = fixture(NAMES[which]).unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let f = pick_cochain(&cx, n, &a);
        let c = cx.coords(&f);
        prop_assert!(c.iter().zip(cx.moduli(n)).all(|(&x, d)| x < d));
        prop_assert_eq!(cx.from_coords(n, &c), f);
    }

    #[test]
    fn normalization_keeps_the_class(which in 0..NAMES.len(), a in picks()) {
        let act = fixture(NAMES[which]).unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let f = cx.coboundary(&pick_cochain(&cx, 1, &a)).unwrap();
        let (nf, eps) = cx.normalize_2cocycle(&f, 1_000_000).unwrap();
        prop_assert!(cx.is_normalized(&nf));
        prop_assert!(cx.is_cocycle(&nf).unwrap());
        prop_assert_eq!(cx.product(&nf, &cx.coboundary(&eps).unwrap()), f);
    }
}

#[test]
fn random_restrictions_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let act = random_restricted_action(&mut rng, RANDOM_RING_CAP);
        let rep = validate(act.ring(), act.group(), &act.to_candidate());
        assert!(rep.is_valid(), "{:?}", rep.violations);
        assert!(act.invariant_subring().contains(act.ring().one()));
    }
}
