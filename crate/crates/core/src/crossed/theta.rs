//! The twisted bimodules `(D_g)_{g⁻¹}` and the factor set of `Θ`.
//!
//! `(D_g)_{g⁻¹}` is `D_g` with `r*d = r·d` and `d*r = d·α_g(r·1_{g⁻¹})`.
//! The factor set sends `u ⊗ v ∈ (D_g)_{g⁻¹} ⊗_R (D_h)_{h⁻¹}` to
//! `u·α_g(v·1_{g⁻¹}) ∈ 1_g·D_{gh}`, with inverse `w ↦ 1_g ⊗ α_{g⁻¹}(w)`.
//! Every `u ⊗ v` equals `1_g ⊗ α_{g⁻¹}(u)·v`, so the tensor product is
//! identified with `1_{g⁻¹}·D_h` through that normal form.

use crate::finring::Elem;
use crate::groups::GroupElem;
use crate::partial_action::PartialAction;

use super::algebra::CheckFailure;

/// `(D_g)_{g⁻¹}`.
pub struct TwistedBimodule<'a> {
    action: &'a PartialAction,
    g: GroupElem,
    carrier: Vec<Elem>,
}

impl<'a> TwistedBimodule<'a> {
    pub fn new(action: &'a PartialAction, g: GroupElem) -> TwistedBimodule<'a> {
        TwistedBimodule { action, g, carrier: action.domain(g) }
    }

    pub fn carrier(&self) -> &[Elem] {
        &self.carrier
    }

    /// `r * d`.
    pub fn left(&self, r: Elem, d: Elem) -> Elem {
        self.action.ring().mul(r, d)
    }

    /// `d * r`.
    pub fn right(&self, d: Elem, r: Elem) -> Elem {
        self.action.ring().mul(d, self.action.apply(self.g, r))
    }

    /// Bimodule axioms plus `r·d = d * α_{g⁻¹}(r·1_g)` for all `r`, `d`.
    pub fn check(&self) -> Result<(), CheckFailure> {
        let ring = self.action.ring();
        let gi = self.action.group().inv(self.g);
        for &d in &self.carrier {
            for r in ring.elements() {
                if self.left(r, d) != self.right(d, self.action.apply(gi, r)) {
                    return Err(CheckFailure {
                        what: "left action through alpha_{g^-1}".into(),
                        witness: format!("r = {}, d = {}", ring.label(r), ring.label(d)),
                    });
                }
                for s in ring.elements() {
                    if self.right(self.right(d, r), s) != self.right(d, ring.mul(r, s))
                        || self.right(self.left(r, d), s) != self.left(r, self.right(d, s))
                    {
                        return Err(CheckFailure {
                            what: "bimodule axioms".into(),
                            witness: format!("d = {}, r = {}, s = {}", ring.label(d), ring.label(r), ring.label(s)),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `f^Θ_{g,h}(u ⊗ v) = u·α_g(v·1_{g⁻¹})`.
pub fn theta_product(action: &PartialAction, g: GroupElem, u: Elem, v: Elem) -> Elem {
    action.ring().mul(u, action.apply(g, v))
}

/// The factor set tabulated on `D_g × D_h` for every pair.
pub struct ThetaFactorSet<'a> {
    action: &'a PartialAction,
    domains: Vec<Vec<Elem>>,
    /// `tables[g·|G|+h][i·|D_h|+j]`.
    tables: Vec<Vec<Elem>>,
}

/// What was verified about the factor set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorSetReport {
    pub pairs: usize,
    pub element_checks: u64,
    pub failures: Vec<CheckFailure>,
}

impl FactorSetReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn theta_factor_set(action: &PartialAction) -> ThetaFactorSet<'_> {
    let group = action.group();
    let domains: Vec<Vec<Elem>> = group.elements().map(|g| action.domain(g)).collect();
    let mut tables = Vec::with_capacity(group.order() * group.order());
    for g in group.elements() {
        for h in group.elements() {
            let mut t = Vec::with_capacity(domains[g].len() * domains[h].len());
            for &u in &domains[g] {
                for &v in &domains[h] {
                    t.push(theta_product(action, g, u, v));
                }
            }
            tables.push(t);
        }
    }
    ThetaFactorSet { action, domains, tables }
}

impl<'a> ThetaFactorSet<'a> {
    pub fn action(&self) -> &'a PartialAction {
        self.action
    }

    /// Tabulated value at `u ⊗ v` (both given as ring elements).
    pub fn value(&self, g: GroupElem, u: Elem, h: GroupElem, v: Elem) -> Elem {
        let n = self.domains.len();
        let i = self.domains[g].binary_search(&u).expect("u in D_g");
        let j = self.domains[h].binary_search(&v).expect("v in D_h");
        self.tables[g * n + h][i * self.domains[h].len() + j]
    }

    /// `w ↦ 1_g ⊗ α_{g⁻¹}(w)`, returned as the second tensor factor.
    pub fn inverse(&self, g: GroupElem, w: Elem) -> Elem {
        let gi = self.action.group().inv(g);
        self.action.apply(gi, w)
    }

    /// Normal form `α_{g⁻¹}(u)·v` of `u ⊗ v`.
    pub fn normal_form(&self, g: GroupElem, u: Elem, v: Elem) -> Elem {
        let gi = self.action.group().inv(g);
        self.action.ring().mul(self.action.apply(gi, u), v)
    }

    /// Exhaustive checks on elements: values land in `1_g·D_{gh}` and cover
    /// it; the map is balanced and a bimodule map; the inverse is two-sided;
    /// `f_{1,h}` is multiplication; and the associativity square
    /// `f_{gh,l}(f_{g,h}(u⊗v)⊗w) = f_{g,hl}(u⊗f_{h,l}(v⊗w))` commutes.
    pub fn verify(&self) -> FactorSetReport {
        let act = self.action;
        let ring = act.ring();
        let group = act.group();
        let mut rep = FactorSetReport { pairs: group.order() * group.order(), ..Default::default() };
        let fail = |rep: &mut FactorSetReport, what: &str, witness: String| {
            if rep.failures.len() < 16 {
                rep.failures.push(CheckFailure { what: what.into(), witness });
            }
        };
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                let target = ring.mul(act.one(g), act.one(gh));
                let mut image = std::collections::BTreeSet::new();
                for &u in &self.domains[g] {
                    for &v in &self.domains[h] {
                        rep.element_checks += 1;
                        let w = self.value(g, u, h, v);
                        image.insert(w);
                        if ring.mul(w, target) != w {
                            fail(
                                &mut rep,
                                "lands in 1_g D_gh",
                                format!("g={g}, h={h}, u={}, v={}", ring.label(u), ring.label(v)),
                            );
                        }
                        if g == group.identity() && w != ring.mul(u, v) {
                            fail(
                                &mut rep,
                                "f_{1,h} is multiplication",
                                format!("h={h}, u={}, v={}", ring.label(u), ring.label(v)),
                            );
                        }
                        // f⁻¹∘f is the identity on normal forms
                        let back = ring.mul(self.inverse(g, w), act.one(h));
                        if back != self.normal_form(g, u, v) {
                            fail(
                                &mut rep,
                                "inverse after factor set",
                                format!("g={g}, h={h}, u={}, v={}", ring.label(u), ring.label(v)),
                            );
                        }
                        for r in ring.elements() {
                            let right_u = ring.mul(u, act.apply(g, r));
                            let left_v = ring.mul(r, v);
                            if self.value(g, right_u, h, v) != self.value(g, u, h, left_v) {
                                fail(
                                    &mut rep,
                                    "balanced over R",
                                    format!(
                                        "g={g}, h={h}, u={}, r={}, v={}",
                                        ring.label(u),
                                        ring.label(r),
                                        ring.label(v)
                                    ),
                                );
                            }
                            if self.value(g, ring.mul(r, u), h, v) != ring.mul(r, w) {
                                fail(&mut rep, "left R-linear", format!("g={g}, h={h}, r={}", ring.label(r)));
                            }
                            let v_r = ring.mul(v, act.apply(h, r));
                            if self.value(g, u, h, v_r) != ring.mul(w, act.apply(gh, r)) {
                                fail(&mut rep, "right R-linear", format!("g={g}, h={h}, r={}", ring.label(r)));
                            }
                        }
                    }
                }
                let covers = ring.ideal(target);
                if image.into_iter().collect::<Vec<_>>() != covers {
                    fail(&mut rep, "onto 1_g D_gh", format!("g={g}, h={h}"));
                }
                for &w in &covers {
                    let v = ring.mul(self.inverse(g, w), act.one(h));
                    if !self.domains[h].contains(&v) || self.value(g, act.one(g), h, v) != w {
                        fail(&mut rep, "factor set after inverse", format!("g={g}, h={h}, w={}", ring.label(w)));
                    }
                }
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                for l in group.elements() {
                    let (gh, hl) = (group.mul(g, h), group.mul(h, l));
                    for &u in &self.domains[g] {
                        for &v in &self.domains[h] {
                            let uv = ring.mul(self.value(g, u, h, v), act.one(gh));
                            for &w in &self.domains[l] {
                                rep.element_checks += 1;
                                let vw = self.value(h, v, l, w);
                                let lhs = self.value(gh, uv, l, w);
                                let rhs = self.value(g, u, hl, vw);
                                if lhs != rhs {
                                    fail(&mut rep, "associativity square", format!("g={g}, h={h}, l={l}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }
}

/// The partial-representation identities of `g ↦ 1_g·δ_g` inside the skew
/// group ring: `θ_1 = 1`, `θ_{g⁻¹}θ_gθ_h = θ_{g⁻¹}θ_{gh}`,
/// `θ_gθ_hθ_{h⁻¹} = θ_{gh}θ_{h⁻¹}`, and `θ_gθ_{g⁻¹} = 1_g·δ_1` with
/// `(D_gδ_g)(D_{g⁻¹}δ_{g⁻¹}) = D_gδ_1`.
pub fn check_partial_representation(alg: &super::GradedAlgebra<'_>) -> Result<u64, CheckFailure> {
    let act = alg.action();
    let ring = act.ring();
    let group = act.group();
    let theta = |g: GroupElem| alg.homogeneous(g, act.one(g));
    let mut checks = 0;
    if theta(group.identity()) != *alg.unity() {
        return Err(CheckFailure { what: "theta_1 = 1".into(), witness: String::new() });
    }
    for g in group.elements() {
        let gi = group.inv(g);
        checks += 1;
        if alg.mul(&theta(g), &theta(gi)) != alg.homogeneous(group.identity(), act.one(g)) {
            return Err(CheckFailure {
                what: "theta_g theta_g^-1 = 1_g".into(),
                witness: format!("g={}", group.label(g)),
            });
        }
        let products: std::collections::BTreeSet<Elem> = act
            .domain(g)
            .iter()
            .flat_map(|&a| act.domain(gi).into_iter().map(move |b| (a, b)))
            .map(|(a, b)| alg.mul_homogeneous(g, a, gi, b))
            .collect();
        if products.into_iter().collect::<Vec<_>>() != act.domain(g) {
            return Err(CheckFailure {
                what: "(D_g δ_g)(D_g^-1 δ_g^-1) = D_g δ_1".into(),
                witness: format!("g={}", group.label(g)),
            });
        }
        for h in group.elements() {
            checks += 2;
            let gh = group.mul(g, h);
            let lhs = alg.mul(&alg.mul(&theta(gi), &theta(g)), &theta(h));
            let rhs = alg.mul(&theta(gi), &theta(gh));
            if lhs != rhs {
                return Err(CheckFailure {
                    what: "theta_g^-1 theta_g theta_h = theta_g^-1 theta_gh".into(),
                    witness: format!("g={}, h={}", group.label(g), group.label(h)),
                });
            }
            let hi = group.inv(h);
            let lhs = alg.mul(&alg.mul(&theta(g), &theta(h)), &theta(hi));
            let rhs = alg.mul(&theta(gh), &theta(hi));
            if lhs != rhs {
                return Err(CheckFailure {
                    what: "theta_g theta_h theta_h^-1 = theta_gh theta_h^-1".into(),
                    witness: format!("g={}, h={}", group.label(g), group.label(h)),
                });
            }
        }
    }
    let _ = ring;
    Ok(checks)
}
