//! Classes of rank ≤ 1 projective modules over a finite commutative ring.
//!
//! A finite commutative ring is a product of local rings, each with trivial
//! Picard group, so the class of `R·e` is determined by the idempotent `e`
//! and the monoid collapses to the semilattice `E(R)` under multiplication.
//! The partial action induced on it is `α*_g(e) = α_g(e)` for `e ≤ 1_{g⁻¹}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::finring::{Elem, FiniteRing};
use crate::groups::GroupElem;
use crate::partial_action::PartialAction;

/// The class `[R·e]`, represented by `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PicSClass(pub Elem);

/// `E(R)` with `[Re]·[Rf] = [Ref]` and neutral class `[R]`.
#[derive(Clone, Debug)]
pub struct PicSMonoid {
    ring: FiniteRing,
    classes: Vec<PicSClass>,
}

pub fn pics_monoid(ring: &FiniteRing) -> PicSMonoid {
    let classes = ring.idempotents().into_iter().map(|e| PicSClass(e.elem())).collect();
    PicSMonoid { ring: ring.clone(), classes }
}

impl PicSMonoid {
    pub fn classes(&self) -> &[PicSClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn neutral(&self) -> PicSClass {
        PicSClass(self.ring.one())
    }

    pub fn product(&self, a: PicSClass, b: PicSClass) -> PicSClass {
        PicSClass(self.ring.mul(a.0, b.0))
    }

    /// `𝒳_e = {x : x ≤ e}`, a monoid with neutral element `e`.
    pub fn below(&self, e: Elem) -> Vec<PicSClass> {
        self.classes.iter().copied().filter(|x| self.ring.mul(x.0, e) == x.0).collect()
    }

    /// Units of `𝒳_e`, found by scanning for inverses.
    pub fn corner_units(&self, e: Elem) -> Vec<PicSClass> {
        let corner = self.below(e);
        corner.iter().copied().filter(|&x| corner.iter().any(|&y| self.product(x, y).0 == e)).collect()
    }
}

/// `α*` on `E(R)`: `star[g]` maps `{e ≤ 1_{g⁻¹}}` onto `{e ≤ 1_g}`.
#[derive(Clone, Debug)]
pub struct PicSAction<'a> {
    base: &'a PartialAction,
    monoid: PicSMonoid,
    star: Vec<BTreeMap<Elem, Elem>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PicSActionReport {
    pub violations: Vec<String>,
    /// Number of `(g, e)` pairs whose annihilator cross-check ran.
    pub annihilator_checks: usize,
}

impl PicSActionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn star_action(action: &PartialAction) -> PicSAction<'_> {
    let monoid = pics_monoid(action.ring());
    let group = action.group();
    let star = group
        .elements()
        .map(|g| monoid.below(action.one(group.inv(g))).into_iter().map(|e| (e.0, action.apply(g, e.0))).collect())
        .collect();
    PicSAction { base: action, monoid, star }
}

impl<'a> PicSAction<'a> {
    pub fn base(&self) -> &'a PartialAction {
        self.base
    }

    pub fn monoid(&self) -> &PicSMonoid {
        &self.monoid
    }

    /// `α*_g(e)`, defined for `e ≤ 1_{g⁻¹}`.
    pub fn star(&self, g: GroupElem, e: Elem) -> Option<Elem> {
        self.star[g].get(&e).copied()
    }

    /// `α*_g(e·1_{g⁻¹})`, total on `E(R)`.
    pub fn star_total(&self, g: GroupElem, e: Elem) -> Elem {
        let gi = self.base.group().inv(g);
        self.star[g][&self.base.ring().mul(e, self.base.one(gi))]
    }

    /// Table rows `(g, e, α*_g(e))` in group then element order.
    pub fn table(&self) -> Vec<(GroupElem, Elem, Elem)> {
        self.star.iter().enumerate().flat_map(|(g, m)| m.iter().map(move |(&e, &f)| (g, e, f))).collect()
    }

    /// Partial-action axioms on the semilattice plus the annihilator
    /// cross-check of every `α*_g(e)` against the module
    /// `(D_g)_{g⁻¹} ⊗ R·e ⊗ (D_{g⁻¹})_g`.
    pub fn check(&self) -> PicSActionReport {
        let act = self.base;
        let ring = act.ring();
        let group = act.group();
        let mut rep = PicSActionReport::default();
        let le = |x: Elem, y: Elem| ring.mul(x, y) == x;
        for g in group.elements() {
            let gi = group.inv(g);
            let dom: BTreeSet<Elem> = self.monoid.below(act.one(gi)).into_iter().map(|c| c.0).collect();
            let cod: BTreeSet<Elem> = self.monoid.below(act.one(g)).into_iter().map(|c| c.0).collect();
            let image: BTreeSet<Elem> = self.star[g].values().copied().collect();
            if image != cod || self.star[g].len() != dom.len() {
                rep.violations
                    .push(format!("star_{} is not a bijection onto the idempotents below 1_g", group.label(g)));
            }
            for &e in &dom {
                let s = self.star[g][&e];
                if g == group.identity() && s != e {
                    rep.violations.push(format!("star_1 moves {}", ring.label(e)));
                }
                if self.star[gi].get(&s) != Some(&e) {
                    rep.violations.push(format!(
                        "star_{} does not invert star_{} at {}",
                        group.label(gi),
                        group.label(g),
                        ring.label(e)
                    ));
                }
                for &f in &dom {
                    if self.star[g][&ring.mul(e, f)] != ring.mul(s, self.star[g][&f]) {
                        rep.violations.push(format!("star_{} is not multiplicative", group.label(g)));
                    }
                }
                for h in group.elements() {
                    let gh = group.mul(g, h);
                    // α*_g(e·1_{g⁻¹}·1_h) ≤ 1_g·1_{gh}
                    let x = ring.mul(e, act.one(h));
                    if !le(self.star[g][&x], ring.mul(act.one(g), act.one(gh))) {
                        rep.violations.push(format!("star_{}({}) escapes 1_g 1_gh", group.label(g), ring.label(x)));
                    }
                }
                rep.annihilator_checks += 1;
                match support_of_conjugate(act, g, e) {
                    Some(sup) if sup == s => {}
                    Some(sup) => rep.violations.push(format!(
                        "conjugate of R·{} has support {} but star gives {}",
                        ring.label(e),
                        ring.label(sup),
                        ring.label(s)
                    )),
                    None => rep.violations.push(format!(
                        "annihilator of the conjugate of R·{} is not idempotent-generated",
                        ring.label(e)
                    )),
                }
            }
        }
        // α*_g∘α*_h = α*_{gh} wherever the left side is defined
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for (&e, &sh) in &self.star[h] {
                    if !le(sh, act.one(group.inv(g))) {
                        continue;
                    }
                    if self.star[gh].get(&e) != Some(&self.star[g][&sh]) {
                        rep.violations.push(format!(
                            "star_{} star_{} differs from star_{} at {}",
                            group.label(g),
                            group.label(h),
                            group.label(gh),
                            ring.label(e)
                        ));
                    }
                }
            }
        }
        rep.violations.sort();
        rep.violations.dedup();
        rep
    }
}

/// The idempotent `s` with `P_g ≅ R·s`, where `P = R·e` and
/// `P_g = (D_g)_{g⁻¹} ⊗ P ⊗ (D_{g⁻¹})_g`. Each `u ⊗ p ⊗ v` has normal form
/// `α_{g⁻¹}(u)·p·v`; `s` is read off the annihilator `{r : r·P_g = 0}`.
fn support_of_conjugate(action: &PartialAction, g: GroupElem, e: Elem) -> Option<Elem> {
    let ring = action.ring();
    let gi = action.group().inv(g);
    let dg = action.domain(g);
    let dgi = action.domain(gi);
    let p = ring.ideal(e);
    let normal = |u: Elem, q: Elem, v: Elem| ring.mul(ring.mul(action.apply(gi, u), q), v);
    let ann: Vec<Elem> = ring
        .elements()
        .filter(|&r| {
            dg.iter().all(|&u| p.iter().all(|&q| dgi.iter().all(|&v| normal(ring.mul(r, u), q, v) == ring.zero())))
        })
        .collect();
    let a = ring.idempotents().into_iter().map(|i| i.elem()).find(|&a| ring.ideal(a) == ann)?;
    Some(ring.sub(ring.one(), a))
}

/// A monoid 1-cochain `g ↦ f(g) ∈ 𝒳_g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PicSCochain(pub Vec<Elem>);

#[derive(Clone, Debug, Serialize)]
pub struct PicSCohomology {
    /// `|𝒰(𝒳_g)|` for each `g`.
    pub corner_unit_counts: Vec<usize>,
    /// Candidates visited: all unit-valued maps `G → 𝒳_g`.
    pub candidates: u64,
    pub z1: Vec<PicSCochain>,
    pub b1: Vec<PicSCochain>,
    /// `|Z¹| / |B¹|`.
    pub h1_order: usize,
    /// `Z¹` is exactly `{g ↦ [D_g]}`.
    pub only_identity: bool,
}

/// `Z¹(G, α*, PicS(R))` by exhaustive search over unit choices in each
/// `𝒳_g`, with the cocycle identity `α*_g(f(h)·1_{g⁻¹})·f(g) = f(gh)·1_g`;
/// `B¹` from the units of `𝒳_1`. `None` when the search exceeds `budget`.
pub fn z1_pics(star: &PicSAction<'_>, budget: u64) -> Option<PicSCohomology> {
    let act = star.base();
    let ring = act.ring();
    let group = act.group();
    let units: Vec<Vec<PicSClass>> = group.elements().map(|g| star.monoid().corner_units(act.one(g))).collect();
    let candidates = units.iter().try_fold(1u64, |acc, u| acc.checked_mul(u.len() as u64))?;
    if candidates > budget {
        return None;
    }
    let is_cocycle = |f: &[Elem]| {
        group.elements().all(|g| {
            group.elements().all(|h| {
                let gh = group.mul(g, h);
                ring.mul(star.star_total(g, f[h]), f[g]) == ring.mul(f[gh], act.one(g))
            })
        })
    };
    let mut z1 = Vec::new();
    for mut idx in 0..candidates {
        let mut f = vec![ring.zero(); group.order()];
        for g in (0..group.order()).rev() {
            f[g] = units[g][(idx % units[g].len() as u64) as usize].0;
            idx /= units[g].len() as u64;
        }
        if is_cocycle(&f) {
            z1.push(PicSCochain(f));
        }
    }
    // δ⁰x(g) = α*_g(x·1_{g⁻¹})·x⁻¹, with x⁻¹ = x for units of a semilattice
    let mut b1: Vec<PicSCochain> = units[group.identity()]
        .iter()
        .map(|x| {
            PicSCochain(
                group.elements().map(|g| ring.mul(star.star_total(g, x.0), ring.mul(x.0, act.one(g)))).collect(),
            )
        })
        .collect();
    b1.sort();
    b1.dedup();
    let identity: Vec<Elem> = group.elements().map(|g| act.one(g)).collect();
    let only_identity = z1.len() == 1 && z1[0].0 == identity;
    let h1_order = if b1.is_empty() { 0 } else { z1.len() / b1.len() };
    Some(PicSCohomology {
        corner_unit_counts: units.iter().map(Vec::len).collect(),
        candidates,
        z1,
        b1,
        h1_order,
        only_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{make_ring, RingDescriptor};
    use crate::fixtures::fixture;

    #[test]
    fn semilattice_sizes() {
        let z6 = make_ring(&RingDescriptor::zmod(6)).unwrap();
        let m = pics_monoid(&z6);
        let labels: Vec<&str> = m.classes().iter().map(|c| z6.label(c.0)).collect();
        assert_eq!(labels, ["0", "1", "3", "4"]);
        let f4 = make_ring(&RingDescriptor::gf4()).unwrap();
        assert_eq!(pics_monoid(&f4).len(), 2);
        let e1 = fixture("E1").unwrap();
        assert_eq!(pics_monoid(e1.ring()).len(), 4);
    }

    #[test]
    fn star_on_restricted_shift() {
        let act = fixture("E1").unwrap();
        let ring = act.ring();
        let star = star_action(&act);
        let rep = star.check();
        assert!(rep.is_valid(), "{:?}", rep.violations);
        let e1 = ring.find_label("(1,0,0)").unwrap();
        assert_eq!(act.one(2), e1);
        assert_eq!(star.star(1, e1), Some(ring.find_label("(0,1,0)").unwrap()));
        for e in star.monoid().classes() {
            assert_eq!(star.star(0, e.0), Some(e.0));
        }
    }

    #[test]
    fn only_the_identity_cocycle() {
        for name in ["E1", "E2", "N1", "G4"] {
            let act = fixture(name).unwrap();
            let star = star_action(&act);
            assert!(star.check().is_valid());
            let h = z1_pics(&star, 1 << 20).unwrap();
            assert!(h.only_identity, "{name}");
            assert_eq!(h.b1.len(), 1);
            assert_eq!(h.h1_order, 1);
            assert!(h.corner_unit_counts.iter().all(|&c| c == 1));
        }
    }
}
