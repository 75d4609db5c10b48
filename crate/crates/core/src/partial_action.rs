//! Unital partial actions of a finite group on a finite commutative ring.
//!
//! A partial action assigns to each `g` an idempotent `1_g` (so that
//! `D_g = R·1_g`) and a ring isomorphism `α_g: D_{g⁻¹} → D_g`. The map is
//! stored as a table on `D_{g⁻¹}` only; [`PartialAction::apply`] evaluates
//! `α_g(r·1_{g⁻¹})` for arbitrary `r`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::finring::{Elem, FiniteRing, Idempotent, Subring};
use crate::groups::{FiniteGroup, GroupElem};

/// Raw data of a would-be partial action, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionCandidate {
    /// `one_g[g]` is the generator `1_g` of `D_g`.
    pub one_g: Vec<Elem>,
    /// `alpha[g]` maps elements of `D_{g⁻¹}` to their images in `D_g`.
    pub alpha: Vec<BTreeMap<Elem, Elem>>,
}

/// The axiom a [`Violation`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// Tables have the wrong number of entries.
    Shape,
    /// `1_g` is not an idempotent.
    Idempotent,
    /// `1_1 = 1`.
    IdentityDomain,
    /// `α_1 = id`.
    IdentityMap,
    /// `α_g` must be defined exactly on `D_{g⁻¹}`.
    Domain,
    /// `α_g` must take values in `D_g` and be onto it, injectively.
    Bijection,
    /// `α_g(1_{g⁻¹}) = 1_g`.
    CarriesUnit,
    /// `α_g(a + b) = α_g(a) + α_g(b)`.
    Additive,
    /// `α_g(ab) = α_g(a)α_g(b)`.
    Multiplicative,
    /// `α_g(1_h·1_{g⁻¹}) = 1_g·1_{gh}`.
    IdempotentTransport,
    /// `α_g(α_h(s·1_{h⁻¹})·1_{g⁻¹})·1_g = α_{gh}(s·1_{(gh)⁻¹})·1_g`.
    Composition,
    /// `α_{g⁻¹}` is the inverse of `α_g`.
    Inverse,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "table shape",
            Axiom::Idempotent => "1_g is idempotent",
            Axiom::IdentityDomain => "1_1 = 1",
            Axiom::IdentityMap => "alpha_1 = id",
            Axiom::Domain => "alpha_g is defined on D_{g^-1}",
            Axiom::Bijection => "alpha_g is a bijection onto D_g",
            Axiom::CarriesUnit => "alpha_g carries 1_{g^-1} to 1_g",
            Axiom::Additive => "alpha_g is additive",
            Axiom::Multiplicative => "alpha_g is multiplicative",
            Axiom::IdempotentTransport => "alpha_g(1_h 1_{g^-1}) = 1_g 1_{gh}",
            Axiom::Composition => "alpha_g(alpha_h(s 1_{h^-1}) 1_{g^-1}) 1_g = alpha_{gh}(s 1_{(gh)^-1}) 1_g",
            Axiom::Inverse => "alpha_{g^-1} = alpha_g^-1",
        };
        f.write_str(s)
    }
}

/// A failed axiom with the group elements and ring elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub g: Option<GroupElem>,
    pub h: Option<GroupElem>,
    pub s: Option<Elem>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.axiom)?;
        if let Some(g) = self.g {
            write!(f, " [g={g}")?;
            if let Some(h) = self.h {
                write!(f, ", h={h}")?;
            }
            if let Some(s) = self.s {
                write!(f, ", s={s}")?;
            }
            write!(f, "]")?;
        }
        write!(f, ": {}", self.detail)
    }
}

/// All axiom failures of a candidate; empty exactly for a valid action.
/// At most one witness is kept per axiom and `(g, h)` pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: Axiom, g: Option<GroupElem>, h: Option<GroupElem>, s: Option<Elem>, detail: String) {
        self.violations.push(Violation { axiom, g, h, s, detail });
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ActionError {
    #[error("not a unital partial action: {} violation(s), first: {}", .0.violations.len(), .0.violations[0])]
    Invalid(ValidationReport),
    #[error("not a global action: {0}")]
    NotGlobal(String),
    #[error("{0} is not an idempotent")]
    NotIdempotent(Elem),
}

/// Checks every partial-action axiom of `cand` and reports each failure.
pub fn validate(ring: &FiniteRing, group: &FiniteGroup, cand: &ActionCandidate) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = group.order();
    if cand.one_g.len() != n || cand.alpha.len() != n {
        rep.push(
            Axiom::Shape,
            None,
            None,
            None,
            format!("expected {n} idempotents and {n} maps, got {} and {}", cand.one_g.len(), cand.alpha.len()),
        );
        return rep;
    }
    let in_range = |x: Elem| x.idx() < ring.order();
    for g in group.elements() {
        if !in_range(cand.one_g[g]) {
            rep.push(Axiom::Shape, Some(g), None, None, format!("1_g = {} out of range", cand.one_g[g]));
        }
        if let Some((a, b)) = cand.alpha[g].iter().find(|(a, b)| !in_range(**a) || !in_range(**b)) {
            rep.push(Axiom::Shape, Some(g), None, Some(*a), format!("entry {a} -> {b} out of range"));
        }
    }
    if !rep.is_valid() {
        return rep;
    }

    let one = |g: GroupElem| cand.one_g[g];
    for g in group.elements() {
        if !ring.is_idempotent(one(g)) {
            rep.push(
                Axiom::Idempotent,
                Some(g),
                None,
                Some(one(g)),
                format!("{} squared is not itself", ring.label(one(g))),
            );
        }
    }
    if one(0) != ring.one() {
        rep.push(Axiom::IdentityDomain, Some(0), None, Some(one(0)), format!("1_1 = {}", ring.label(one(0))));
    }
    if let Some((a, b)) = cand.alpha[0].iter().find(|(a, b)| a != b) {
        rep.push(
            Axiom::IdentityMap,
            Some(0),
            None,
            Some(*a),
            format!("alpha_1({}) = {}", ring.label(*a), ring.label(*b)),
        );
    }

    let ideals: Vec<BTreeSet<Elem>> = group.elements().map(|g| ring.ideal(one(g)).into_iter().collect()).collect();
    // the "apply" view: None when alpha_g is undefined at r·1_{g^-1}
    let apply = |g: GroupElem, r: Elem| -> Option<Elem> { cand.alpha[g].get(&ring.mul(r, one(group.inv(g)))).copied() };

    let mut maps_ok = vec![true; n];
    for g in group.elements() {
        let gi = group.inv(g);
        let domain = &ideals[gi];
        let table = &cand.alpha[g];
        let keys: BTreeSet<Elem> = table.keys().copied().collect();
        if let Some(&s) = domain.iter().find(|s| !keys.contains(s)) {
            rep.push(Axiom::Domain, Some(g), None, Some(s), format!("no value at {} in D_(g^-1)", ring.label(s)));
            maps_ok[g] = false;
        }
        if let Some(&s) = keys.iter().find(|s| !domain.contains(s)) {
            rep.push(
                Axiom::Domain,
                Some(g),
                None,
                Some(s),
                format!("value given at {} outside D_(g^-1)", ring.label(s)),
            );
            maps_ok[g] = false;
        }
        if let Some((&s, &t)) = table.iter().find(|(_, t)| !ideals[g].contains(t)) {
            rep.push(Axiom::Bijection, Some(g), None, Some(s), format!("image {} lies outside D_g", ring.label(t)));
            maps_ok[g] = false;
        }
        let mut seen: HashMap<Elem, Elem> = HashMap::new();
        for (&s, &t) in table {
            if let Some(&prev) = seen.get(&t) {
                rep.push(
                    Axiom::Bijection,
                    Some(g),
                    None,
                    Some(s),
                    format!("{} and {} both map to {}", ring.label(prev), ring.label(s), ring.label(t)),
                );
                maps_ok[g] = false;
                break;
            }
            seen.insert(t, s);
        }
        if maps_ok[g] && seen.len() != ideals[g].len() {
            rep.push(Axiom::Bijection, Some(g), None, None, "alpha_g is not onto D_g".into());
            maps_ok[g] = false;
        }
        if let Some(&t) = table.get(&one(gi)) {
            if t != one(g) {
                rep.push(
                    Axiom::CarriesUnit,
                    Some(g),
                    None,
                    Some(one(gi)),
                    format!("alpha_g(1_(g^-1)) = {} but 1_g = {}", ring.label(t), ring.label(one(g))),
                );
            }
        }
        if !maps_ok[g] {
            continue;
        }
        'hom: for &a in domain {
            for &b in domain {
                let (ta, tb) = (table[&a], table[&b]);
                if table[&ring.add(a, b)] != ring.add(ta, tb) {
                    rep.push(Axiom::Additive, Some(g), None, Some(a), format!("fails with b = {}", ring.label(b)));
                    break 'hom;
                }
            }
        }
        'hom: for &a in domain {
            for &b in domain {
                let (ta, tb) = (table[&a], table[&b]);
                if table[&ring.mul(a, b)] != ring.mul(ta, tb) {
                    rep.push(
                        Axiom::Multiplicative,
                        Some(g),
                        None,
                        Some(a),
                        format!("fails with b = {}", ring.label(b)),
                    );
                    break 'hom;
                }
            }
        }
    }

    for g in group.elements() {
        let gi = group.inv(g);
        if maps_ok[g] && maps_ok[gi] {
            for (&s, &t) in &cand.alpha[g] {
                if cand.alpha[gi].get(&t) != Some(&s) {
                    rep.push(
                        Axiom::Inverse,
                        Some(g),
                        None,
                        Some(s),
                        format!("alpha_(g^-1)(alpha_g({})) != {}", ring.label(s), ring.label(s)),
                    );
                    break;
                }
            }
        }
        for h in group.elements() {
            if let Some(x) = apply(g, one(h)) {
                let want = ring.mul(one(g), one(group.mul(g, h)));
                if x != want {
                    rep.push(
                        Axiom::IdempotentTransport,
                        Some(g),
                        Some(h),
                        Some(one(h)),
                        format!("got {}, expected {}", ring.label(x), ring.label(want)),
                    );
                }
            }
            let gh = group.mul(g, h);
            for s in ring.elements() {
                let left = apply(h, s).and_then(|y| apply(g, y)).map(|z| ring.mul(z, one(g)));
                let right = apply(gh, s).map(|z| ring.mul(z, one(g)));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        rep.push(
                            Axiom::Composition,
                            Some(g),
                            Some(h),
                            Some(s),
                            format!("left side {}, right side {}", ring.label(l), ring.label(r)),
                        );
                        break;
                    }
                }
            }
        }
    }
    rep
}

/// A validated unital partial action.
#[derive(Clone, Debug)]
pub struct PartialAction {
    ring: FiniteRing,
    group: FiniteGroup,
    one_g: Vec<Elem>,
    /// `apply[g][r] = α_g(r·1_{g⁻¹})`.
    apply: Vec<Vec<Elem>>,
}

impl PartialAction {
    /// Validates `cand` and wraps it; any violation is an error.
    pub fn new(ring: FiniteRing, group: FiniteGroup, cand: ActionCandidate) -> Result<PartialAction, ActionError> {
        let rep = validate(&ring, &group, &cand);
        if !rep.is_valid() {
            return Err(ActionError::Invalid(rep));
        }
        let apply = group
            .elements()
            .map(|g| {
                let e = cand.one_g[group.inv(g)];
                ring.elements().map(|r| cand.alpha[g][&ring.mul(r, e)]).collect()
            })
            .collect();
        Ok(PartialAction { ring, group, one_g: cand.one_g, apply })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `1_g`.
    #[inline]
    pub fn one(&self, g: GroupElem) -> Elem {
        self.one_g[g]
    }

    pub fn idempotent(&self, g: GroupElem) -> Idempotent {
        self.ring.idempotent(self.one_g[g]).expect("validated")
    }

    /// `α_g(r·1_{g⁻¹})`.
    #[inline]
    pub fn apply(&self, g: GroupElem, r: Elem) -> Elem {
        self.apply[g][r.idx()]
    }

    /// Members of `D_g`, sorted.
    pub fn domain(&self, g: GroupElem) -> Vec<Elem> {
        self.ring.ideal(self.one_g[g])
    }

    /// Whether every `1_g` equals `1`.
    pub fn is_global(&self) -> bool {
        self.one_g.iter().all(|&e| e == self.ring.one())
    }

    /// The action back in raw table form.
    pub fn to_candidate(&self) -> ActionCandidate {
        let alpha = self
            .group
            .elements()
            .map(|g| self.domain(self.group.inv(g)).into_iter().map(|s| (s, self.apply(g, s))).collect())
            .collect();
        ActionCandidate { one_g: self.one_g.clone(), alpha }
    }

    /// `R^α = {r : α_g(r·1_{g⁻¹}) = r·1_g for all g}`.
    pub fn invariant_subring(&self) -> Subring {
        let members: Vec<Elem> = self
            .ring
            .elements()
            .filter(|&r| self.group.elements().all(|g| self.apply(g, r) == self.ring.mul(r, self.one(g))))
            .collect();
        Subring::new(&self.ring, members).expect("the invariants of a partial action form a subring")
    }

    pub fn orbit_report(&self) -> OrbitReport {
        let ring = &self.ring;
        let idems: Vec<Elem> = ring.idempotents().into_iter().map(Idempotent::elem).collect();
        let below = |e: Elem| -> Vec<Elem> { idems.iter().copied().filter(|&f| ring.mul(f, e) == f).collect() };
        let primitive: Vec<Elem> = ring.primitive_idempotents().into_iter().map(Idempotent::elem).collect();
        let mut domains = Vec::new();
        let mut dynamics = Vec::new();
        for g in self.group.elements() {
            let e = self.one(g);
            domains.push(DomainEntry {
                g,
                g_label: self.group.label(g).to_string(),
                one_g: ring.label(e).to_string(),
                size: ring.ideal(e).len(),
                rank: primitive.iter().filter(|&&p| ring.mul(p, e) == p).count(),
                idempotents_below: below(e).len(),
            });
            for f in below(self.one(self.group.inv(g))) {
                dynamics.push(DynamicsEntry {
                    g,
                    source: ring.label(f).to_string(),
                    target: ring.label(self.apply(g, f)).to_string(),
                    source_elem: f,
                    target_elem: self.apply(g, f),
                });
            }
        }
        OrbitReport { domains, dynamics }
    }
}

/// Per-g summary of `D_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DomainEntry {
    pub g: GroupElem,
    pub g_label: String,
    pub one_g: String,
    /// `|R·1_g|`.
    pub size: usize,
    /// Number of primitive idempotents below `1_g`.
    pub rank: usize,
    /// Number of idempotents below `1_g`.
    pub idempotents_below: usize,
}

/// `α_g(f) = target` for an idempotent `f ≤ 1_{g⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynamicsEntry {
    pub g: GroupElem,
    pub source: String,
    pub target: String,
    #[serde(skip)]
    pub source_elem: Elem,
    #[serde(skip)]
    pub target_elem: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub domains: Vec<DomainEntry>,
    pub dynamics: Vec<DynamicsEntry>,
}

impl OrbitReport {
    pub fn domain_sizes(&self) -> Vec<usize> {
        self.domains.iter().map(|d| d.size).collect()
    }
}

/// A global action: a homomorphism from the group into ring automorphisms.
#[derive(Clone, Debug)]
pub struct GlobalAction {
    ring: FiniteRing,
    group: FiniteGroup,
    sigma: Vec<Vec<Elem>>,
}

impl GlobalAction {
    /// `sigma[g][r] = σ_g(r)`; checked to be automorphisms with `σ_1 = id`
    /// and `σ_g∘σ_h = σ_{gh}`.
    pub fn new(ring: FiniteRing, group: FiniteGroup, sigma: Vec<Vec<Elem>>) -> Result<GlobalAction, ActionError> {
        let n = ring.order();
        if sigma.len() != group.order() || sigma.iter().any(|s| s.len() != n || s.iter().any(|x| x.idx() >= n)) {
            return Err(ActionError::NotGlobal("one total table per group element required".into()));
        }
        for g in group.elements() {
            let s = &sigma[g];
            let image: BTreeSet<Elem> = s.iter().copied().collect();
            if image.len() != n {
                return Err(ActionError::NotGlobal(format!("sigma_{} is not bijective", group.label(g))));
            }
            if s[ring.one().idx()] != ring.one() {
                return Err(ActionError::NotGlobal(format!("sigma_{} does not fix 1", group.label(g))));
            }
            for a in ring.elements() {
                for b in ring.elements() {
                    if s[ring.add(a, b).idx()] != ring.add(s[a.idx()], s[b.idx()])
                        || s[ring.mul(a, b).idx()] != ring.mul(s[a.idx()], s[b.idx()])
                    {
                        return Err(ActionError::NotGlobal(format!(
                            "sigma_{} is not a ring map at ({}, {})",
                            group.label(g),
                            ring.label(a),
                            ring.label(b)
                        )));
                    }
                }
            }
        }
        if ring.elements().any(|r| sigma[0][r.idx()] != r) {
            return Err(ActionError::NotGlobal("sigma_1 is not the identity".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                if let Some(r) = ring.elements().find(|r| sigma[g][sigma[h][r.idx()].idx()] != sigma[gh][r.idx()]) {
                    return Err(ActionError::NotGlobal(format!(
                        "sigma_{} sigma_{} != sigma_{} at {}",
                        group.label(g),
                        group.label(h),
                        group.label(gh),
                        ring.label(r)
                    )));
                }
            }
        }
        Ok(GlobalAction { ring, group, sigma })
    }

    /// The action generated by a single automorphism `σ` of order dividing `n`
    /// for the cyclic group `C_n`.
    pub fn cyclic(ring: FiniteRing, n: usize, sigma: &[Elem]) -> Result<GlobalAction, ActionError> {
        let group = FiniteGroup::cyclic(n).map_err(|e| ActionError::NotGlobal(e.to_string()))?;
        let mut tables: Vec<Vec<Elem>> = vec![ring.elements().collect()];
        for k in 1..n {
            let prev = &tables[k - 1];
            tables.push(prev.iter().map(|x| sigma[x.idx()]).collect());
        }
        GlobalAction::new(ring, group, tables)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn sigma(&self, g: GroupElem, r: Elem) -> Elem {
        self.sigma[g][r.idx()]
    }

    /// The same action viewed as a partial action with every `1_g = 1`.
    pub fn as_partial(&self) -> PartialAction {
        let cand = ActionCandidate {
            one_g: vec![self.ring.one(); self.group.order()],
            alpha: self.sigma.iter().map(|s| self.ring.elements().map(|r| (r, s[r.idx()])).collect()).collect(),
        };
        PartialAction::new(self.ring.clone(), self.group.clone(), cand).expect("a global action is a partial action")
    }
}

/// The partial action induced on the ideal `S·e`: `1_g = e·σ_g(e)` and
/// `α_g = σ_g` restricted to `D_{g⁻¹}`. Ring elements are re-indexed as in
/// [`FiniteRing::corner_ring`].
pub fn restrict_global(sigma: &GlobalAction, e: Idempotent) -> PartialAction {
    let s = sigma.ring();
    let group = sigma.group();
    let (r, embed) = s.corner_ring(e);
    let local: HashMap<Elem, Elem> = embed.iter().enumerate().map(|(i, &x)| (x, Elem(i as u32))).collect();
    let e = e.elem();
    let one_amb: Vec<Elem> = group.elements().map(|g| s.mul(e, sigma.sigma(g, e))).collect();
    let one_g: Vec<Elem> = one_amb.iter().map(|x| local[x]).collect();
    let alpha = group
        .elements()
        .map(|g| {
            let d = one_amb[group.inv(g)];
            s.ideal(d).into_iter().map(|x| (local[&x], local[&sigma.sigma(g, x)])).collect()
        })
        .collect();
    PartialAction::new(r, group.clone(), ActionCandidate { one_g, alpha })
        .expect("restriction of a global action is a partial action")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{make_ring, RingDescriptor};

    fn shift_f2() -> GlobalAction {
        let ring = make_ring(&RingDescriptor::power(RingDescriptor::zmod(2), 3)).unwrap();
        let sigma: Vec<Elem> = ring
            .elements()
            .map(|x| {
                let p = ring.split(x);
                ring.join(&[p[2], p[0], p[1]]).unwrap()
            })
            .collect();
        GlobalAction::cyclic(ring, 3, &sigma).unwrap()
    }

    fn e110(ring: &FiniteRing) -> Idempotent {
        ring.idempotent(ring.join(&[1, 1, 0]).unwrap()).unwrap()
    }

    #[test]
    fn restriction_of_shift() {
        let glob = shift_f2();
        let act = restrict_global(&glob, e110(glob.ring()));
        let r = act.ring();
        assert_eq!(r.order(), 4);
        assert_eq!(r.label(act.one(1)), "(0,1,0)");
        assert_eq!(r.label(act.one(2)), "(1,0,0)");
        assert_eq!(act.orbit_report().domain_sizes(), vec![4, 2, 2]);
        let inv: Vec<&str> = act.invariant_subring().members().iter().map(|&x| r.label(x)).collect();
        assert_eq!(inv, vec!["(0,0,0)", "(1,1,0)"]);
    }

    #[test]
    fn global_action_is_partial() {
        let glob = shift_f2();
        let act = glob.as_partial();
        assert!(act.is_global());
        assert_eq!(act.invariant_subring().len(), 2);
        assert_eq!(act.orbit_report().domain_sizes(), vec![8, 8, 8]);
        let whole = restrict_global(&glob, glob.ring().idempotent(glob.ring().one()).unwrap());
        assert!(whole.is_global());
    }

    #[test]
    fn zero_map_violates_unit_axiom() {
        let glob = shift_f2();
        let act = restrict_global(&glob, e110(glob.ring()));
        let mut cand = act.to_candidate();
        let zero = act.ring().zero();
        for v in cand.alpha[1].values_mut() {
            *v = zero;
        }
        let rep = validate(act.ring(), act.group(), &cand);
        assert!(rep.has(Axiom::CarriesUnit));
        assert!(PartialAction::new(act.ring().clone(), act.group().clone(), cand).is_err());
    }

    #[test]
    fn non_idempotent_domain_is_reported() {
        let ring = make_ring(&RingDescriptor::zmod(6)).unwrap();
        let group = FiniteGroup::cyclic(2).unwrap();
        let cand = ActionCandidate {
            one_g: vec![ring.one(), Elem(2)],
            alpha: vec![ring.elements().map(|r| (r, r)).collect(), BTreeMap::new()],
        };
        let rep = validate(&ring, &group, &cand);
        assert!(rep.has(Axiom::Idempotent));
        assert!(rep.has(Axiom::Domain));
    }

    #[test]
    fn zero_domains_are_allowed() {
        let ring = make_ring(&RingDescriptor::zmod(2)).unwrap();
        let group = FiniteGroup::cyclic(2).unwrap();
        let cand = ActionCandidate {
            one_g: vec![ring.one(), ring.zero()],
            alpha: vec![ring.elements().map(|r| (r, r)).collect(), BTreeMap::from([(ring.zero(), ring.zero())])],
        };
        let act = PartialAction::new(ring, group, cand).unwrap();
        assert_eq!(act.orbit_report().domain_sizes(), vec![2, 1]);
    }
}
