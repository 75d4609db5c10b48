//! `G`-graded algebras `⊕_g D_g·δ_g` with a homogeneous product table.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finring::Elem;
use crate::galois::ideal_structure;
use crate::groups::{FinAbPresentation, GroupElem};
use crate::partial_action::PartialAction;

/// Basis-triple count up to which associativity is checked exhaustively.
pub const EXHAUSTIVE_TRIPLES: u64 = 1_000_000;
/// Number of sampled triples beyond that.
pub const SAMPLED_TRIPLES: u64 = 1_000_000;

/// Which multiplication an algebra carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `(aδ_g)(bδ_h) = a·α_g(b·1_{g⁻¹})·δ_{gh}`.
    Skew,
    /// The same times `f(g,h)`, with the 2-cocycle values listed in tuple order.
    Crossed { twist: Vec<Elem> },
    /// `⊕ (D_g)_{g⁻¹}` multiplied through the factor set of `Θ`.
    DeltaTheta,
}

/// An element `Σ_g a_g·δ_g` with `a_g ∈ D_g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgElem(pub Vec<Elem>);

/// A basis element: generator `element` of the additive group of `D_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub g: GroupElem,
    pub element: Elem,
    /// Additive order of the generator.
    pub order: u64,
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra<'a> {
    action: &'a PartialAction,
    kind: AlgebraKind,
    /// Sorted members of each `D_g`.
    components: Vec<Vec<Elem>>,
    /// `position[g][r]`: index of `r` in `components[g]`, or `u32::MAX`.
    position: Vec<Vec<u32>>,
    /// `tables[g·|G|+h][i·|D_h|+j]`: the product of the `i`-th element of
    /// `D_g` and the `j`-th of `D_h`, as an element of `D_{gh}`.
    tables: Vec<Vec<Elem>>,
    presentations: Vec<FinAbPresentation<Elem>>,
    basis: Vec<BasisElem>,
    unity: AlgElem,
}

/// Failure of a structural check, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub what: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityReport {
    pub triples_checked: u64,
    pub sampled: bool,
    pub failure: Option<CheckFailure>,
}

impl<'a> GradedAlgebra<'a> {
    /// Fills the homogeneous product tables from `product(g, a, h, b)`, which
    /// must return an element of `D_{gh}`; anything else is reported as a
    /// grading failure.
    pub(crate) fn build(
        action: &'a PartialAction,
        kind: AlgebraKind,
        product: impl Fn(GroupElem, Elem, GroupElem, Elem) -> Elem,
        unity: Elem,
    ) -> Result<GradedAlgebra<'a>, CheckFailure> {
        let ring = action.ring();
        let group = action.group();
        let n = group.order();
        let components: Vec<Vec<Elem>> = group.elements().map(|g| action.domain(g)).collect();
        let position: Vec<Vec<u32>> = components
            .iter()
            .map(|c| {
                let mut p = vec![u32::MAX; ring.order()];
                for (i, &x) in c.iter().enumerate() {
                    p[x.idx()] = i as u32;
                }
                p
            })
            .collect();
        let mut tables = Vec::with_capacity(n * n);
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                // (D_gδ_g)(D_hδ_h) lies in D_g·D_{gh}δ_{gh}
                let allowed = ring.mul(action.one(g), action.one(gh));
                let mut t = Vec::with_capacity(components[g].len() * components[h].len());
                for &a in &components[g] {
                    for &b in &components[h] {
                        let c = product(g, a, h, b);
                        if ring.mul(c, allowed) != c {
                            return Err(CheckFailure {
                                what: "grading".into(),
                                witness: format!(
                                    "({}δ_{})({}δ_{}) = {} is outside D_g·D_gh",
                                    ring.label(a),
                                    group.label(g),
                                    ring.label(b),
                                    group.label(h),
                                    ring.label(c)
                                ),
                            });
                        }
                        t.push(c);
                    }
                }
                tables.push(t);
            }
        }
        let presentations: Vec<FinAbPresentation<Elem>> =
            group.elements().map(|g| ideal_structure(ring, action.one(g))).collect();
        let basis = presentations
            .iter()
            .enumerate()
            .flat_map(|(g, p)| {
                p.generators().iter().zip(p.invariant_factors()).map(move |(&element, &order)| BasisElem {
                    g,
                    element,
                    order,
                })
            })
            .collect();
        let mut u = vec![ring.zero(); n];
        u[group.identity()] = unity;
        Ok(GradedAlgebra { action, kind, components, position, tables, presentations, basis, unity: AlgElem(u) })
    }

    pub fn action(&self) -> &'a PartialAction {
        self.action
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    /// `Π_g |D_g|`, as a float-free product that may be large.
    pub fn order(&self) -> num_bigint::BigUint {
        self.components.iter().fold(num_bigint::BigUint::from(1u32), |acc, c| acc * c.len())
    }

    pub fn component(&self, g: GroupElem) -> &[Elem] {
        &self.components[g]
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn unity(&self) -> &AlgElem {
        &self.unity
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem(vec![self.action.ring().zero(); self.components.len()])
    }

    /// `a·δ_g`.
    pub fn homogeneous(&self, g: GroupElem, a: Elem) -> AlgElem {
        let mut v = self.zero();
        v.0[g] = a;
        v
    }

    /// Product of homogeneous elements; the result lives in degree `gh`.
    #[inline]
    pub fn mul_homogeneous(&self, g: GroupElem, a: Elem, h: GroupElem, b: Elem) -> Elem {
        let n = self.components.len();
        let i = self.position[g][a.idx()] as usize;
        let j = self.position[h][b.idx()] as usize;
        self.tables[g * n + h][i * self.components[h].len() + j]
    }

    pub fn add(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let ring = self.action.ring();
        AlgElem(x.0.iter().zip(&y.0).map(|(&a, &b)| ring.add(a, b)).collect())
    }

    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let ring = self.action.ring();
        let group = self.action.group();
        let mut out = self.zero();
        for (g, &a) in x.0.iter().enumerate() {
            if a == ring.zero() {
                continue;
            }
            for (h, &b) in y.0.iter().enumerate() {
                if b == ring.zero() {
                    continue;
                }
                let gh = group.mul(g, h);
                out.0[gh] = ring.add(out.0[gh], self.mul_homogeneous(g, a, h, b));
            }
        }
        out
    }

    /// Every element, enumerated in mixed radix over the components.
    pub fn elements(&self) -> impl Iterator<Item = AlgElem> + '_ {
        let total: usize = self.components.iter().map(Vec::len).product();
        (0..total).map(move |mut idx| {
            let mut v = vec![Elem(0); self.components.len()];
            for g in (0..self.components.len()).rev() {
                let c = &self.components[g];
                v[g] = c[idx % c.len()];
                idx /= c.len();
            }
            AlgElem(v)
        })
    }

    fn basis_triple_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let group = self.action.group();
        let (x, y, z) = (self.basis[i], self.basis[j], self.basis[k]);
        let (xy_g, xy) = (group.mul(x.g, y.g), self.mul_homogeneous(x.g, x.element, y.g, y.element));
        let (yz_g, yz) = (group.mul(y.g, z.g), self.mul_homogeneous(y.g, y.element, z.g, z.element));
        self.mul_homogeneous(xy_g, xy, z.g, z.element) == self.mul_homogeneous(x.g, x.element, yz_g, yz)
    }

    fn describe_triple(&self, i: usize, j: usize, k: usize) -> String {
        let ring = self.action.ring();
        let group = self.action.group();
        let show = |b: BasisElem| format!("{}δ_{}", ring.label(b.element), group.label(b.g));
        format!("({}, {}, {})", show(self.basis[i]), show(self.basis[j]), show(self.basis[k]))
    }

    /// Associativity on basis triples (sufficient by trilinearity):
    /// exhaustive up to [`EXHAUSTIVE_TRIPLES`], otherwise a seeded sample.
    pub fn check_associativity(&self) -> AssociativityReport {
        let n = self.basis.len();
        let total = (n as u64).pow(3);
        if total <= EXHAUSTIVE_TRIPLES {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !self.basis_triple_holds(i, j, k) {
                            return AssociativityReport {
                                triples_checked: total,
                                sampled: false,
                                failure: Some(CheckFailure {
                                    what: "associativity".into(),
                                    witness: self.describe_triple(i, j, k),
                                }),
                            };
                        }
                    }
                }
            }
            return AssociativityReport { triples_checked: total, sampled: false, failure: None };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_TRIPLES {
            let (i, j, k) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            if !self.basis_triple_holds(i, j, k) {
                return AssociativityReport {
                    triples_checked: SAMPLED_TRIPLES,
                    sampled: true,
                    failure: Some(CheckFailure {
                        what: "associativity".into(),
                        witness: self.describe_triple(i, j, k),
                    }),
                };
            }
        }
        AssociativityReport { triples_checked: SAMPLED_TRIPLES, sampled: true, failure: None }
    }

    /// Associativity on every triple of algebra elements; `None` when there
    /// are more than `limit` triples.
    pub fn check_associativity_elements(&self, limit: u64) -> Option<Result<u64, CheckFailure>> {
        let els: Vec<AlgElem> = self.elements().collect();
        let total = (els.len() as u64).checked_pow(3)?;
        if total > limit {
            return None;
        }
        for x in &els {
            for y in &els {
                let xy = self.mul(x, y);
                for z in &els {
                    if self.mul(&xy, z) != self.mul(x, &self.mul(y, z)) {
                        return Some(Err(CheckFailure {
                            what: "associativity".into(),
                            witness: format!("{:?} {:?} {:?}", x.0, y.0, z.0),
                        }));
                    }
                }
            }
        }
        Some(Ok(total))
    }

    /// The unity acts trivially on both sides of every basis element.
    pub fn check_unity(&self) -> Result<(), CheckFailure> {
        for b in &self.basis {
            let x = self.homogeneous(b.g, b.element);
            if self.mul(&self.unity, &x) != x || self.mul(&x, &self.unity) != x {
                return Err(CheckFailure {
                    what: "unity".into(),
                    witness: format!(
                        "fails on {}δ_{}",
                        self.action.ring().label(b.element),
                        self.action.group().label(b.g)
                    ),
                });
            }
        }
        Ok(())
    }

    /// `t·1_A` for an element `t` of `R^α`.
    pub fn scalar(&self, t: Elem) -> AlgElem {
        let ring = self.action.ring();
        AlgElem(self.unity.0.iter().map(|&u| ring.mul(t, u)).collect())
    }

    /// `R^α·1_A` commutes with every basis element.
    pub fn check_invariants_central(&self) -> Result<(), CheckFailure> {
        let ring = self.action.ring();
        for &t in self.action.invariant_subring().members() {
            let s = self.scalar(t);
            for b in &self.basis {
                let x = self.homogeneous(b.g, b.element);
                if self.mul(&s, &x) != self.mul(&x, &s) {
                    return Err(CheckFailure {
                        what: "centrality of invariants".into(),
                        witness: format!(
                            "{} and {}δ_{}",
                            ring.label(t),
                            ring.label(b.element),
                            self.action.group().label(b.g)
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// Structure constants on the basis as lines `i j k c`, meaning that
    /// `basis[i]·basis[j]` has coefficient `c` on `basis[k]`; preceded by
    /// `#` lines describing the basis.
    pub fn structure_constants(&self) -> String {
        let ring = self.action.ring();
        let group = self.action.group();
        let mut offset = Vec::with_capacity(self.presentations.len());
        let mut acc = 0;
        for p in &self.presentations {
            offset.push(acc);
            acc += p.generators().len();
        }
        let mut out = String::new();
        for (i, b) in self.basis.iter().enumerate() {
            let _ = writeln!(out, "# {i} g={} element={} order={}", group.label(b.g), ring.label(b.element), b.order);
        }
        for (i, x) in self.basis.iter().enumerate() {
            for (j, y) in self.basis.iter().enumerate() {
                let gh = group.mul(x.g, y.g);
                let c = self.mul_homogeneous(x.g, x.element, y.g, y.element);
                let coords = self.presentations[gh].coords(&c).expect("product lies in D_gh");
                for (t, &v) in coords.iter().enumerate() {
                    if v != 0 {
                        let _ = writeln!(out, "{i} {j} {} {v}", offset[gh] + t);
                    }
                }
            }
        }
        out
    }
}

/// A degree-preserving map given on coefficients: `a·δ_g ↦ φ(g, a)·δ_g`.
pub struct ComponentMap<'f> {
    pub map: Box<dyn Fn(GroupElem, Elem) -> Elem + 'f>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub bijective: bool,
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    pub fixes_invariants: bool,
    pub pairs_checked: u64,
    pub failure: Option<CheckFailure>,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective && self.additive && self.multiplicative && self.unital && self.fixes_invariants
    }
}

/// Checks that `phi` is an isomorphism of algebras `src → dst` that is the
/// identity on `R^α·1`: componentwise bijective and additive, multiplicative
/// on every pair of basis elements.
pub fn check_isomorphism(src: &GradedAlgebra<'_>, dst: &GradedAlgebra<'_>, phi: &ComponentMap<'_>) -> IsoReport {
    let action = src.action();
    let ring = action.ring();
    let group = action.group();
    let mut rep = IsoReport {
        bijective: true,
        additive: true,
        multiplicative: true,
        unital: true,
        fixes_invariants: true,
        pairs_checked: 0,
        failure: None,
    };
    let apply = |x: &AlgElem| AlgElem(x.0.iter().enumerate().map(|(g, &a)| (phi.map)(g, a)).collect());
    for g in group.elements() {
        let comp = src.component(g);
        let image: BTreeSet<Elem> = comp.iter().map(|&a| (phi.map)(g, a)).collect();
        let target: BTreeSet<Elem> = dst.component(g).iter().copied().collect();
        if image != target {
            rep.bijective = false;
            rep.failure.get_or_insert(CheckFailure {
                what: "bijectivity".into(),
                witness: format!("component {} is not mapped onto D_g", group.label(g)),
            });
        }
        'add: for &a in comp {
            for &b in comp {
                if (phi.map)(g, ring.add(a, b)) != ring.add((phi.map)(g, a), (phi.map)(g, b)) {
                    rep.additive = false;
                    rep.failure.get_or_insert(CheckFailure {
                        what: "additivity".into(),
                        witness: format!("{} + {} in degree {}", ring.label(a), ring.label(b), group.label(g)),
                    });
                    break 'add;
                }
            }
        }
    }
    for x in src.basis() {
        for y in src.basis() {
            rep.pairs_checked += 1;
            let gh = group.mul(x.g, y.g);
            let lhs = (phi.map)(gh, src.mul_homogeneous(x.g, x.element, y.g, y.element));
            let rhs = dst.mul_homogeneous(x.g, (phi.map)(x.g, x.element), y.g, (phi.map)(y.g, y.element));
            if lhs != rhs {
                rep.multiplicative = false;
                rep.failure.get_or_insert(CheckFailure {
                    what: "multiplicativity".into(),
                    witness: format!(
                        "{}δ_{} times {}δ_{}",
                        ring.label(x.element),
                        group.label(x.g),
                        ring.label(y.element),
                        group.label(y.g)
                    ),
                });
            }
        }
    }
    if apply(src.unity()) != *dst.unity() {
        rep.unital = false;
        rep.failure.get_or_insert(CheckFailure { what: "unity".into(), witness: "1 is not mapped to 1".into() });
    }
    for &t in action.invariant_subring().members() {
        if apply(&src.scalar(t)) != dst.scalar(t) {
            rep.fixes_invariants = false;
            rep.failure.get_or_insert(CheckFailure {
                what: "invariants".into(),
                witness: format!("{}·1 is moved", ring.label(t)),
            });
            break;
        }
    }
    rep
}
