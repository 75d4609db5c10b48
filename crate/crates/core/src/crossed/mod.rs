//! Partial skew group rings, partial crossed products, `Δ(Θ)` and the
//! isomorphisms between them.

mod algebra;
mod theta;

pub use algebra::{
    check_isomorphism, AlgElem, AlgebraKind, AssociativityReport, BasisElem, CheckFailure, ComponentMap, GradedAlgebra,
    IsoReport, EXHAUSTIVE_TRIPLES, SAMPLED_TRIPLES,
};
pub use theta::{
    check_partial_representation, theta_factor_set, theta_product, FactorSetReport, ThetaFactorSet, TwistedBimodule,
};

use thiserror::Error;

use crate::cohomology::{Cochain, CohomologyError, Complex};
use crate::groups::GroupElem;
use crate::partial_action::PartialAction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedError {
    #[error("twist is not a 2-cocycle: delta f differs from the identity at {0:?}")]
    NotACocycle(Vec<GroupElem>),
    #[error("witness does not satisfy f = f'·delta(eps) at {0:?}")]
    WitnessInvalid(Vec<GroupElem>),
    #[error("{}: {}", .0.what, .0.witness)]
    Structure(CheckFailure),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// Runs the construction-time checks shared by every algebra.
fn finish(alg: GradedAlgebra<'_>) -> Result<(GradedAlgebra<'_>, AssociativityReport), CrossedError> {
    let assoc = alg.check_associativity();
    if let Some(f) = &assoc.failure {
        return Err(CrossedError::Structure(f.clone()));
    }
    alg.check_unity().map_err(CrossedError::Structure)?;
    alg.check_invariants_central().map_err(CrossedError::Structure)?;
    Ok((alg, assoc))
}

/// `R ⋆_α G`.
pub fn skew_group_ring(action: &PartialAction) -> Result<(GradedAlgebra<'_>, AssociativityReport), CrossedError> {
    let alg = GradedAlgebra::build(
        action,
        AlgebraKind::Skew,
        |g, a, _, b| theta_product(action, g, a, b),
        action.ring().one(),
    )
    .map_err(CrossedError::Structure)?;
    finish(alg)
}

/// `R ⋆_{α,f} G` for a 2-cocycle `f`, with unity `f(1,1)⁻¹·δ_1`.
pub fn crossed_product<'a>(
    action: &'a PartialAction,
    f: &Cochain,
) -> Result<(GradedAlgebra<'a>, AssociativityReport), CrossedError> {
    let cx = Complex::new(action, 3)?;
    let f = cx.cochain(2, f.values().to_vec())?;
    if let Some(t) = cx.first_failure(&f)? {
        return Err(CrossedError::NotACocycle(t));
    }
    let ring = action.ring();
    let group = action.group();
    let value = |g: GroupElem, h: GroupElem| f.value(group.tuple_index(&[g, h]));
    let unity = cx.slot_corner(2, 0).inverse(value(0, 0));
    let alg = GradedAlgebra::build(
        action,
        AlgebraKind::Crossed { twist: f.values().to_vec() },
        |g, a, h, b| ring.mul(theta_product(action, g, a, b), value(g, h)),
        unity,
    )
    .map_err(CrossedError::Structure)?;
    finish(alg)
}

/// Checks `f = f′·δ¹ε` and returns the map `a_g·δ_g ↦ a_g·ε(g)·δ_g` from
/// `R ⋆_{α,f} G` to `R ⋆_{α,f′} G`.
pub fn coiso_map<'e>(
    action: &PartialAction,
    f: &Cochain,
    f_prime: &Cochain,
    eps: &'e Cochain,
) -> Result<ComponentMap<'e>, CrossedError> {
    let cx = Complex::new(action, 2)?;
    let eps_checked = cx.cochain(1, eps.values().to_vec())?;
    let expected = cx.product(f_prime, &cx.coboundary(&eps_checked)?);
    if let Some(s) = expected.values().iter().zip(f.values()).position(|(a, b)| a != b) {
        return Err(CrossedError::WitnessInvalid(cx.tuple(2, s)));
    }
    let ring = action.ring().clone();
    Ok(ComponentMap { map: Box::new(move |g, a| ring.mul(a, eps.value(g))) })
}

/// `Δ(Θ) = ⊕_g (D_g)_{g⁻¹}` multiplied through the factor set of `Θ`.
pub fn delta_theta(action: &PartialAction) -> Result<(GradedAlgebra<'_>, AssociativityReport), CrossedError> {
    let fs = theta_factor_set(action);
    let alg =
        GradedAlgebra::build(action, AlgebraKind::DeltaTheta, |g, a, h, b| fs.value(g, a, h, b), action.ring().one())
            .map_err(CrossedError::Structure)?;
    finish(alg)
}

/// `κ(u_g) = u_g·δ_g`.
pub fn kappa_iso() -> ComponentMap<'static> {
    ComponentMap { map: Box::new(|_, a| a) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn skew_ring_of_restricted_shift() {
        let act = fixture("E1").unwrap();
        let (alg, assoc) = skew_group_ring(&act).unwrap();
        assert_eq!(alg.order(), 16u32.into());
        assert!(!assoc.sampled && assoc.failure.is_none());
        assert_eq!(alg.check_associativity_elements(1 << 13), Some(Ok(16 * 16 * 16)));
        assert!(check_partial_representation(&alg).is_ok());
    }

    #[test]
    fn trivial_action_gives_group_algebra() {
        let act = fixture("N1").unwrap();
        let (alg, _) = skew_group_ring(&act).unwrap();
        // F2[C2] is commutative with (1 + g)² = 0
        let els: Vec<AlgElem> = alg.elements().collect();
        for x in &els {
            for y in &els {
                assert_eq!(alg.mul(x, y), alg.mul(y, x));
            }
        }
        let one = act.ring().one();
        let s = AlgElem(vec![one, one]);
        assert_eq!(alg.mul(&s, &s), alg.zero());
    }

    #[test]
    fn identity_twist_matches_skew_ring() {
        let act = fixture("E2").unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let (skew, _) = skew_group_ring(&act).unwrap();
        let (cp, _) = crossed_product(&act, &cx.identity(2)).unwrap();
        assert_eq!(skew.structure_constants(), cp.structure_constants());
        assert_eq!(skew.unity(), cp.unity());
    }

    #[test]
    fn corrupted_twist_is_rejected() {
        let act = fixture("E2").unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let mut values = cx.identity(2).values().to_vec();
        let x = act.ring().find_label("(x,x,0)").unwrap();
        let s = act.group().tuple_index(&[0, 0]);
        values[s] = act.ring().mul(values[s], x);
        let f = cx.cochain(2, values).unwrap();
        assert!(matches!(crossed_product(&act, &f), Err(CrossedError::NotACocycle(_))));
    }

    #[test]
    fn coboundary_twist_is_isomorphic_to_skew_ring() {
        let act = fixture("E2").unwrap();
        let cx = Complex::new(&act, 3).unwrap();
        let x = act.ring().find_label("(x,x,0)").unwrap();
        let eps = cx.cochain_from_fn(1, |t| act.ring().mul(x, act.one(t[0]))).unwrap();
        let f = cx.coboundary(&eps).unwrap();
        let (twisted, _) = crossed_product(&act, &f).unwrap();
        let (skew, _) = skew_group_ring(&act).unwrap();
        let phi = coiso_map(&act, &f, &cx.identity(2), &eps).unwrap();
        let rep = check_isomorphism(&twisted, &skew, &phi);
        assert!(rep.is_isomorphism(), "{rep:?}");
        let bad = cx.cochain_from_fn(1, |t| if t[0] == 1 { act.one(1) } else { eps.value(t[0]) }).unwrap();
        assert!(matches!(coiso_map(&act, &f, &cx.identity(2), &bad), Err(CrossedError::WitnessInvalid(_))));
    }

    #[test]
    fn delta_theta_is_the_skew_ring() {
        for name in ["E1", "E2", "N1"] {
            let act = fixture(name).unwrap();
            let fs = theta_factor_set(&act);
            let rep = fs.verify();
            assert!(rep.is_valid(), "{name}: {:?}", rep.failures);
            let (dt, _) = delta_theta(&act).unwrap();
            let (skew, _) = skew_group_ring(&act).unwrap();
            assert_eq!(dt.component(0), act.ring().elements().collect::<Vec<_>>().as_slice());
            assert!(check_isomorphism(&dt, &skew, &kappa_iso()).is_isomorphism());
            for g in act.group().elements() {
                assert!(TwistedBimodule::new(&act, g).check().is_ok());
            }
        }
    }

    #[test]
    fn theta_on_shift_pair_lands_in_corner() {
        let act = fixture("E1").unwrap();
        let ring = act.ring();
        let fs = theta_factor_set(&act);
        let target = ring.mul(act.one(1), act.one(0));
        for &u in act.domain(1).iter() {
            for &v in act.domain(2).iter() {
                let w = fs.value(1, u, 2, v);
                assert_eq!(w, ring.mul(u, act.apply(1, v)));
                assert_eq!(ring.mul(w, target), w);
            }
        }
    }
}
