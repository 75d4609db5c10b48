//! Partial cochains with values in corner unit groups, the coboundary `δⁿ`,
//! and the groups `Zⁿ`, `Bⁿ`, `Hⁿ` for `n ≤ 3`.
//!
//! An `n`-cochain assigns to each tuple `(g₁,…,gₙ)` a unit of the corner ring
//! `R·I(g₁,…,gₙ)` where `I(g₁,…,gₙ) = 1_{g₁}·1_{g₁g₂}·…·1_{g₁⋯gₙ}`. Tuples are
//! ordered lexicographically by group-element index; this is also the order
//! in which cochains are compared, so "least cochain" means least value
//! vector (by element index) in tuple order.
//!
//! Two engines compute the groups:
//!
//! * enumeration: backtracking over slot values for `Zⁿ`, and the image of
//!   every `(n-1)`-cochain for `Bⁿ`; exact sets, bounded by a node budget;
//! * structure: each corner unit group is put in invariant-factor form, `δⁿ`
//!   becomes an integer matrix on generators, and kernels, images and the
//!   quotient come from Smith normal forms.

mod enumerate;
mod structure;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::finring::{CornerUnits, Elem};
use crate::groups::{FinAbPresentation, GroupElem};
use crate::partial_action::PartialAction;

pub use enumerate::{enumerate_coboundaries, enumerate_cocycles};
pub use structure::{delta_matrix, structure_cohomology, MAX_MATRIX_ENTRIES};

/// Highest cohomological degree supported.
pub const MAX_DEGREE: usize = 3;
/// Default node budget of the enumeration engine.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Largest number of tuples `|G|^n` a cochain space may have.
pub const MAX_SLOTS: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("degree {0} is outside the supported range 0..={MAX_DEGREE}")]
    Degree(usize),
    #[error("cochain space of arity {n} has {slots} tuples, above the limit {MAX_SLOTS}")]
    TooManySlots { n: usize, slots: u128 },
    #[error("enumeration budget of {budget} exceeded: {what}")]
    Budget { what: String, budget: u64 },
    #[error("value {value} at tuple {tuple:?} is not a unit of its corner ring")]
    NotACochain { tuple: Vec<GroupElem>, value: Elem },
    #[error("cochain has arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("not a cocycle: coboundary differs from the identity at {tuple:?}")]
    NotACocycle { tuple: Vec<GroupElem> },
    #[error("defect: {0}")]
    Defect(String),
}

/// A unit group `𝒰(R·e)` with inverse lookup and invariant-factor form.
#[derive(Clone, Debug)]
pub struct Corner {
    pub idempotent: Elem,
    pub units: CornerUnits,
    /// `inverse[r]` for units `r`; `Elem(u32::MAX)` elsewhere.
    inverse: Vec<Elem>,
    pub presentation: FinAbPresentation<Elem>,
}

impl Corner {
    fn new(action: &PartialAction, e: Elem) -> Corner {
        let ring = action.ring();
        let units = ring.corner_units(ring.idempotent(e).expect("slot idempotent"));
        let mut inverse = vec![Elem(u32::MAX); ring.order()];
        for (u, v) in units.pairs() {
            inverse[u.idx()] = v;
        }
        let presentation = crate::groups::abelian_structure(units.elements(), e, |a, b| ring.mul(a, b))
            .expect("corner unit groups are abelian");
        Corner { idempotent: e, units, inverse, presentation }
    }

    #[inline]
    pub fn inverse(&self, u: Elem) -> Elem {
        self.inverse[u.idx()]
    }

    #[inline]
    pub fn contains(&self, u: Elem) -> bool {
        self.inverse[u.idx()].0 != u32::MAX
    }
}

#[derive(Clone, Debug)]
struct Space {
    slot_idem: Vec<Elem>,
    slot_corner: Vec<usize>,
}

/// One target value of `δⁿ`: `α_{g₁}(f[first]) · Π f[s]^{±1}`.
#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub g1: GroupElem,
    pub first: usize,
    /// `(slot, inverted)`.
    pub factors: Vec<(usize, bool)>,
}

/// The cochain complex of a partial action up to a fixed degree.
pub struct Complex<'a> {
    action: &'a PartialAction,
    corners: Vec<Corner>,
    corner_of: HashMap<Elem, usize>,
    spaces: Vec<Space>,
    plans: Vec<Vec<Term>>,
}

impl<'a> Complex<'a> {
    /// Cochain spaces `C⁰ … C^{top}` and coboundary plans `δ⁰ … δ^{top-1}`.
    pub fn new(action: &'a PartialAction, top: usize) -> Result<Complex<'a>, CohomologyError> {
        let group = action.group();
        let slots = (group.order() as u128).saturating_pow(top as u32);
        if slots > MAX_SLOTS as u128 {
            return Err(CohomologyError::TooManySlots { n: top, slots });
        }
        let mut cx =
            Complex { action, corners: Vec::new(), corner_of: HashMap::new(), spaces: Vec::new(), plans: Vec::new() };
        for n in 0..=top {
            let count = group.tuple_count(n);
            let mut slot_idem = Vec::with_capacity(count);
            let mut slot_corner = Vec::with_capacity(count);
            for i in 0..count {
                let e = cx.identity_value(&group.tuple(n, i));
                slot_idem.push(e);
                slot_corner.push(cx.corner_index(e));
            }
            cx.spaces.push(Space { slot_idem, slot_corner });
        }
        for n in 0..top {
            let plan = (0..group.tuple_count(n + 1)).map(|t| cx.term(n, &group.tuple(n + 1, t))).collect();
            cx.plans.push(plan);
        }
        Ok(cx)
    }

    pub fn action(&self) -> &'a PartialAction {
        self.action
    }

    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    /// `I(g₁,…,gₙ) = 1_{g₁}·1_{g₁g₂}·…`; `1` for the empty tuple.
    pub fn identity_value(&self, tuple: &[GroupElem]) -> Elem {
        let (ring, group) = (self.action.ring(), self.action.group());
        let mut acc = ring.one();
        let mut prefix = group.identity();
        for &g in tuple {
            prefix = group.mul(prefix, g);
            acc = ring.mul(acc, self.action.one(prefix));
        }
        acc
    }

    fn corner_index(&mut self, e: Elem) -> usize {
        if let Some(&i) = self.corner_of.get(&e) {
            return i;
        }
        self.corners.push(Corner::new(self.action, e));
        self.corner_of.insert(e, self.corners.len() - 1);
        self.corners.len() - 1
    }

    fn term(&self, n: usize, t: &[GroupElem]) -> Term {
        let group = self.action.group();
        let first = group.tuple_index(&t[1..]);
        let mut factors = Vec::with_capacity(n + 1);
        for i in 1..=n {
            let mut merged: Vec<GroupElem> = Vec::with_capacity(n);
            merged.extend_from_slice(&t[..i - 1]);
            merged.push(group.mul(t[i - 1], t[i]));
            merged.extend_from_slice(&t[i + 1..]);
            factors.push((group.tuple_index(&merged), i % 2 == 1));
        }
        factors.push((group.tuple_index(&t[..n]), (n + 1) % 2 == 1));
        Term { g1: t[0], first, factors }
    }

    pub fn slot_count(&self, n: usize) -> usize {
        self.spaces[n].slot_idem.len()
    }

    pub fn slot_identity(&self, n: usize, slot: usize) -> Elem {
        self.spaces[n].slot_idem[slot]
    }

    pub fn slot_corner(&self, n: usize, slot: usize) -> &Corner {
        &self.corners[self.spaces[n].slot_corner[slot]]
    }

    pub fn tuple(&self, n: usize, slot: usize) -> Vec<GroupElem> {
        self.action.group().tuple(n, slot)
    }

    pub(crate) fn plan(&self, n: usize) -> &[Term] {
        &self.plans[n]
    }

    /// `|Cⁿ| = Π |𝒰(R·I(τ))|`.
    pub fn cochain_count(&self, n: usize) -> BigUint {
        self.spaces[n].slot_corner.iter().fold(BigUint::one(), |acc, &c| acc * self.corners[c].units.len())
    }

    /// The identity cochain `I`.
    pub fn identity(&self, n: usize) -> Cochain {
        Cochain { arity: n, values: self.spaces[n].slot_idem.clone() }
    }

    /// Validates slot membership and wraps `values`.
    pub fn cochain(&self, n: usize, values: Vec<Elem>) -> Result<Cochain, CohomologyError> {
        if values.len() != self.slot_count(n) {
            return Err(CohomologyError::Arity { expected: n, found: usize::MAX });
        }
        for (slot, &v) in values.iter().enumerate() {
            if v.idx() >= self.action.ring().order() || !self.slot_corner(n, slot).contains(v) {
                return Err(CohomologyError::NotACochain { tuple: self.tuple(n, slot), value: v });
            }
        }
        Ok(Cochain { arity: n, values })
    }

    /// Builds a cochain from a function of the tuple.
    pub fn cochain_from_fn(&self, n: usize, f: impl Fn(&[GroupElem]) -> Elem) -> Result<Cochain, CohomologyError> {
        let values = (0..self.slot_count(n)).map(|s| f(&self.tuple(n, s))).collect();
        self.cochain(n, values)
    }

    pub fn product(&self, f: &Cochain, g: &Cochain) -> Cochain {
        assert_eq!(f.arity, g.arity, "arity mismatch");
        let ring = self.action.ring();
        Cochain { arity: f.arity, values: f.values.iter().zip(&g.values).map(|(&a, &b)| ring.mul(a, b)).collect() }
    }

    pub fn inverse(&self, f: &Cochain) -> Cochain {
        let values = f.values.iter().enumerate().map(|(s, &v)| self.slot_corner(f.arity, s).inverse(v)).collect();
        Cochain { arity: f.arity, values }
    }

    /// Evaluates one coordinate of `δⁿ` on raw slot values.
    #[inline]
    pub(crate) fn eval_term(&self, n: usize, term: &Term, values: &[Elem]) -> Elem {
        let ring = self.action.ring();
        let mut acc = self.action.apply(term.g1, values[term.first]);
        for &(s, inverted) in &term.factors {
            let v = values[s];
            let v = if inverted { self.corners[self.spaces[n].slot_corner[s]].inverse(v) } else { v };
            acc = ring.mul(acc, v);
        }
        acc
    }

    /// `δⁿ f`, with the result's membership in the target corners asserted.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain, CohomologyError> {
        let n = f.arity;
        if n >= self.plans.len() {
            return Err(CohomologyError::Degree(n));
        }
        if f.values.len() != self.slot_count(n) {
            return Err(CohomologyError::Arity { expected: n, found: f.arity });
        }
        let mut values = Vec::with_capacity(self.slot_count(n + 1));
        for (t, term) in self.plans[n].iter().enumerate() {
            let v = self.eval_term(n, term, &f.values);
            if !self.slot_corner(n + 1, t).contains(v) {
                return Err(CohomologyError::Defect(format!(
                    "coboundary value {} at {:?} is not a unit of R·{}",
                    self.action.ring().label(v),
                    self.tuple(n + 1, t),
                    self.action.ring().label(self.slot_identity(n + 1, t))
                )));
            }
            values.push(v);
        }
        Ok(Cochain { arity: n + 1, values })
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool, CohomologyError> {
        Ok(self.coboundary(f)? == self.identity(f.arity + 1))
    }

    /// Group-structure coordinates of a cochain: per-slot discrete logs,
    /// concatenated in slot order.
    pub fn coords(&self, f: &Cochain) -> Vec<u64> {
        f.values
            .iter()
            .enumerate()
            .flat_map(|(s, v)| self.slot_corner(f.arity, s).presentation.coords(v).expect("unit of its corner"))
            .collect()
    }

    /// Inverse of [`Complex::coords`].
    pub fn from_coords(&self, n: usize, coords: &[u64]) -> Cochain {
        let mut values = Vec::with_capacity(self.slot_count(n));
        let mut pos = 0;
        for s in 0..self.slot_count(n) {
            let p = &self.slot_corner(n, s).presentation;
            let k = p.invariant_factors().len();
            values.push(p.element(&coords[pos..pos + k]));
            pos += k;
        }
        Cochain { arity: n, values }
    }

    /// Invariant factors of `Cⁿ` as a product of its slot groups.
    pub fn moduli(&self, n: usize) -> Vec<u64> {
        (0..self.slot_count(n)).flat_map(|s| self.slot_corner(n, s).presentation.invariant_factors().to_vec()).collect()
    }

    /// Some `ε ∈ C^{n-1}` with `f = f′·δ^{n-1}ε`, or `None` when none exists.
    /// Exhaustive backtracking over `ε`, bounded by `budget` nodes.
    pub fn cohomologous(&self, f: &Cochain, f2: &Cochain, budget: u64) -> Result<Option<Cochain>, CohomologyError> {
        if f.arity != f2.arity {
            return Err(CohomologyError::Arity { expected: f.arity, found: f2.arity });
        }
        let n = f.arity;
        if n == 0 || n > self.plans.len() {
            return Err(CohomologyError::Degree(n));
        }
        let target = self.product(f, &self.inverse(f2));
        enumerate::solve_coboundary(self, n - 1, &target.values, budget)
    }

    /// Replaces a 2-cocycle by a cohomologous normalized one:
    /// returns `(f̃, ε)` with `f = f̃·δ¹ε` and `f̃(1,g) = f̃(g,1) = 1_g`.
    pub fn normalize_2cocycle(&self, f: &Cochain, budget: u64) -> Result<(Cochain, Cochain), CohomologyError> {
        if f.arity != 2 {
            return Err(CohomologyError::Arity { expected: 2, found: f.arity });
        }
        if let Some(t) = self.first_failure(f)? {
            return Err(CohomologyError::NotACocycle { tuple: t });
        }
        let group = self.action.group();
        let eps = self.cochain_from_fn(1, |t| f.values[group.tuple_index(&[t[0], 0])])?;
        let candidate = self.product(f, &self.inverse(&self.coboundary(&eps)?));
        if self.is_normalized(&candidate) {
            return Ok((candidate, eps));
        }
        // fallback: search C¹ for any ε whose coboundary normalizes f
        let found = enumerate::search_normalizer(self, f, budget)?;
        match found {
            Some(eps) => {
                let out = self.product(f, &self.inverse(&self.coboundary(&eps)?));
                Ok((out, eps))
            }
            None => Err(CohomologyError::Defect("2-cocycle admits no normalizing coboundary".into())),
        }
    }

    /// The arity-1 counterpart: every 1-cocycle satisfies `f(1) = 1`.
    pub fn normalize_1cocycle(&self, f: &Cochain) -> Result<Cochain, CohomologyError> {
        if f.arity != 1 {
            return Err(CohomologyError::Arity { expected: 1, found: f.arity });
        }
        if let Some(t) = self.first_failure(f)? {
            return Err(CohomologyError::NotACocycle { tuple: t });
        }
        if f.values[0] != self.action.ring().one() {
            return Err(CohomologyError::Defect("1-cocycle with f(1) != 1".into()));
        }
        Ok(f.clone())
    }

    /// Whether `f(1,g) = f(g,1) = 1_g` for all `g`.
    pub fn is_normalized(&self, f: &Cochain) -> bool {
        let group = self.action.group();
        group.elements().all(|g| {
            let one_g = self.action.one(g);
            f.values[group.tuple_index(&[0, g])] == one_g && f.values[group.tuple_index(&[g, 0])] == one_g
        })
    }

    /// First tuple where `δf` differs from the identity cochain.
    pub fn first_failure(&self, f: &Cochain) -> Result<Option<Vec<GroupElem>>, CohomologyError> {
        let d = self.coboundary(f)?;
        let id = self.identity(f.arity + 1);
        Ok(d.values.iter().zip(&id.values).position(|(a, b)| a != b).map(|s| self.tuple(f.arity + 1, s)))
    }
}

/// A function `Gⁿ → R` with values in the slot corner unit groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cochain {
    arity: usize,
    values: Vec<Elem>,
}

impl Cochain {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Values in lexicographic tuple order.
    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn value(&self, slot: usize) -> Elem {
        self.values[slot]
    }

    /// Tuple-to-label listing for reports.
    pub fn listing(&self, action: &PartialAction) -> Vec<(String, String)> {
        let group = action.group();
        self.values
            .iter()
            .enumerate()
            .map(|(s, &v)| {
                let labels: Vec<&str> = group.tuple(self.arity, s).into_iter().map(|g| group.label(g)).collect();
                (format!("({})", labels.join(",")), action.ring().label(v).to_string())
            })
            .collect()
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.0.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Which engine computes a cohomology group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Enumerate,
    Structure,
    Both,
}

impl Engine {
    /// Enumeration for `n ≤ 1`, structure above.
    pub fn default_for(n: usize) -> Engine {
        if n <= 1 {
            Engine::Enumerate
        } else {
            Engine::Structure
        }
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub n: usize,
    pub engine: Engine,
    pub c_order: BigUint,
    pub z_order: BigUint,
    pub b_order: BigUint,
    pub h_order: BigUint,
    /// Invariant factors (> 1) of `Hⁿ`.
    pub h_factors: Vec<u64>,
    /// Cocycles whose classes generate `Hⁿ` with the stated factors.
    pub h_generators: Vec<Cochain>,
    /// One cocycle per class, least in each coset; empty when
    /// `canonical_representatives` is false.
    pub representatives: Vec<Cochain>,
    pub canonical_representatives: bool,
}

impl CohomologyGroup {
    pub fn orders(&self) -> (BigUint, BigUint, BigUint) {
        (self.z_order.clone(), self.b_order.clone(), self.h_order.clone())
    }
}

/// Computes `Hⁿ(G, α, 𝒰(R))` with the chosen engine. With [`Engine::Both`]
/// the two engines must agree, otherwise a defect is reported.
pub fn cohomology_group(
    action: &PartialAction,
    n: usize,
    engine: Engine,
    budget: u64,
) -> Result<CohomologyGroup, CohomologyError> {
    if n > MAX_DEGREE {
        return Err(CohomologyError::Degree(n));
    }
    let cx = Complex::new(action, n + 1)?;
    match engine {
        Engine::Enumerate => enumerate::enumerated_group(&cx, n, budget),
        Engine::Structure => structure::structure_cohomology(&cx, n, budget),
        Engine::Both => {
            let e = enumerate::enumerated_group(&cx, n, budget)?;
            let s = structure::structure_cohomology(&cx, n, budget)?;
            if e.orders() != s.orders() || e.h_factors != s.h_factors {
                return Err(CohomologyError::Defect(format!(
                    "engines disagree in degree {n}: enumeration (|Z|,|B|,|H|) = {:?}, structure {:?}",
                    e.orders(),
                    s.orders()
                )));
            }
            if s.canonical_representatives && e.representatives != s.representatives {
                return Err(CohomologyError::Defect(format!("engines chose different representatives in degree {n}")));
            }
            Ok(CohomologyGroup { engine: Engine::Both, ..e })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn delta_zero_of_one_is_identity() {
        let act = fixture("E2").unwrap();
        let cx = Complex::new(&act, 2).unwrap();
        assert_eq!(cx.coboundary(&cx.identity(0)).unwrap(), cx.identity(1));
    }

    #[test]
    fn delta_zero_on_e2_matches_hand_formula() {
        let act = fixture("E2").unwrap();
        let r = act.ring();
        let cx = Complex::new(&act, 1).unwrap();
        let a = r.find_label("(x,1,0)").unwrap();
        let d = cx.coboundary(&cx.cochain(0, vec![a]).unwrap()).unwrap();
        assert_eq!(d.value(0), r.one());
        // α_g(x·1_{g⁻¹}) = (0,x,0) and x⁻¹ = (x+1,1,0)
        assert_eq!(r.label(d.value(1)), "(0,x,0)");
        // α_{g²}(x·1_g) = (1,0,0) and the product with x⁻¹ is (x+1,0,0)
        assert_eq!(r.label(d.value(2)), "(x+1,0,0)");
    }

    #[test]
    fn cochain_membership_is_checked() {
        let act = fixture("E1").unwrap();
        let cx = Complex::new(&act, 1).unwrap();
        let one = act.ring().one();
        assert!(matches!(cx.cochain(1, vec![one, one, one]), Err(CohomologyError::NotACochain { .. })));
    }

    #[test]
    fn small_groups_on_trivial_f3() {
        let act = fixture("N2").unwrap();
        for engine in [Engine::Enumerate, Engine::Structure, Engine::Both] {
            let h1 = cohomology_group(&act, 1, engine, DEFAULT_BUDGET).unwrap();
            assert_eq!(h1.orders(), (2u32.into(), 1u32.into(), 2u32.into()));
            let h2 = cohomology_group(&act, 2, engine, DEFAULT_BUDGET).unwrap();
            assert_eq!(h2.orders(), (4u32.into(), 2u32.into(), 2u32.into()));
        }
    }
}
