//! Galois coordinates: elements `x_i, y_i` with
//! `Σ x_i·α_g(y_i·1_{g⁻¹}) = δ_{1,g}` for every `g`, and the regular
//! representation `ρ(r·δ_g)(x) = r·α_g(x·1_{g⁻¹})` used to cross-check them.
//!
//! Certificate search reduces to linear algebra: if any certificate exists
//! then one exists whose `y_i` run over a fixed additive generating set of
//! `R` (expand each `y_i` in the generators and regroup), and for fixed `y_i`
//! the identity is `R`-linear in the `x_i`. The resulting system is solved
//! separately on each local factor `R·e` of `R`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::finring::{Elem, FiniteRing, Idempotent};
use crate::groups::{abelian_structure, hom_kernel_image, FinAbPresentation, GroupElem};
use crate::partial_action::PartialAction;

/// Default bound on the number of pairs tried by the exhaustive fallback.
pub const DEFAULT_MAX_M: usize = 4;
/// Default bound on the number of candidate vectors the exhaustive fallback visits.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisCertificate {
    pub pairs: Vec<(Elem, Elem)>,
}

impl GaloisCertificate {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `Σ x_i·α_g(y_i·1_{g⁻¹})`.
pub fn galois_sum(action: &PartialAction, pairs: &[(Elem, Elem)], g: GroupElem) -> Elem {
    let r = action.ring();
    pairs.iter().fold(r.zero(), |acc, &(x, y)| r.add(acc, r.mul(x, action.apply(g, y))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateCheck {
    Valid,
    Fails { g: GroupElem, sum: Elem, expected: Elem },
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateCheck::Valid)
    }
}

/// Checks the defining identity at every group element; on failure reports
/// the first `g` (by index) where it breaks.
pub fn verify_certificate(action: &PartialAction, cert: &GaloisCertificate) -> CertificateCheck {
    let r = action.ring();
    for g in action.group().elements() {
        let expected = if g == action.group().identity() { r.one() } else { r.zero() };
        let sum = galois_sum(action, &cert.pairs, g);
        if sum != expected {
            return CertificateCheck::Fails { g, sum, expected };
        }
    }
    CertificateCheck::Valid
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// `x_i = y_i` running over the primitive idempotents.
    OrthogonalIdempotents,
    /// Gaussian elimination on each field factor.
    LinearSystem,
    /// Enumeration of candidate `x` vectors on factors that are not fields.
    Exhaustive,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// The exhaustive fallback only runs when the generating set has at most
    /// this many elements.
    pub max_m: usize,
    /// Cap on candidate vectors visited by the exhaustive fallback.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_m: DEFAULT_MAX_M, budget: DEFAULT_SEARCH_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateSearch {
    Found {
        certificate: GaloisCertificate,
        strategy: Strategy,
    },
    /// `conclusive` means no certificate of any length exists.
    NotFound {
        conclusive: bool,
        reason: String,
    },
}

impl CertificateSearch {
    pub fn certificate(&self) -> Option<&GaloisCertificate> {
        match self {
            CertificateSearch::Found { certificate, .. } => Some(certificate),
            CertificateSearch::NotFound { .. } => None,
        }
    }
}

/// Additive generators of `R` in invariant-factor form.
pub fn additive_structure(ring: &FiniteRing) -> FinAbPresentation<Elem> {
    let els: Vec<Elem> = ring.elements().collect();
    abelian_structure(&els, ring.zero(), |a, b| ring.add(a, b)).expect("(R,+) is abelian")
}

/// Additive generators of the ideal `R·e`.
pub fn ideal_structure(ring: &FiniteRing, e: Elem) -> FinAbPresentation<Elem> {
    let els = ring.ideal(e);
    abelian_structure(&els, ring.zero(), |a, b| ring.add(a, b)).expect("ideals are additive subgroups")
}

pub fn find_certificate(action: &PartialAction, opts: SearchOptions) -> CertificateSearch {
    let ring = action.ring();
    let prims: Vec<Elem> = ring.primitive_idempotents().into_iter().map(Idempotent::elem).collect();
    let idem = GaloisCertificate { pairs: prims.iter().map(|&e| (e, e)).collect() };
    if verify_certificate(action, &idem).is_valid() {
        return CertificateSearch::Found { certificate: idem, strategy: Strategy::OrthogonalIdempotents };
    }

    let gens: Vec<Elem> = additive_structure(ring).generators().to_vec();
    let group = action.group();
    // coefficient a[g][j] = α_g(b_j·1_{g⁻¹})
    let coeff: Vec<Vec<Elem>> = group.elements().map(|g| gens.iter().map(|&b| action.apply(g, b)).collect()).collect();
    let mut x = vec![ring.zero(); gens.len()];
    let mut strategy = Strategy::LinearSystem;
    for &e in &prims {
        let part = match solve_on_factor(ring, e, &coeff, group.identity()) {
            FactorSolve::Solved(v) => v,
            FactorSolve::Inconsistent => {
                return CertificateSearch::NotFound {
                    conclusive: true,
                    reason: format!("the linear system for x has no solution on the factor R·{}", ring.label(e)),
                }
            }
            FactorSolve::NotAField => {
                strategy = Strategy::Exhaustive;
                match search_on_factor(ring, e, &coeff, group.identity(), opts) {
                    Ok(Some(v)) => v,
                    Ok(None) => {
                        return CertificateSearch::NotFound {
                            conclusive: true,
                            reason: format!("exhaustive search on the factor R·{} found no solution", ring.label(e)),
                        }
                    }
                    Err(reason) => return CertificateSearch::NotFound { conclusive: false, reason },
                }
            }
        };
        for (xj, pj) in x.iter_mut().zip(part) {
            *xj = ring.add(*xj, pj);
        }
    }
    let pairs: Vec<(Elem, Elem)> = x.into_iter().zip(gens).filter(|(xj, _)| *xj != ring.zero()).collect();
    let certificate = GaloisCertificate { pairs };
    assert!(
        verify_certificate(action, &certificate).is_valid(),
        "defect: solved linear system does not yield Galois coordinates"
    );
    CertificateSearch::Found { certificate, strategy }
}

enum FactorSolve {
    Solved(Vec<Elem>),
    Inconsistent,
    NotAField,
}

/// Solves `Σ_j x_j·a[g][j]·e = δ_{1,g}·e` over the field `R·e`.
fn solve_on_factor(ring: &FiniteRing, e: Elem, coeff: &[Vec<Elem>], identity: GroupElem) -> FactorSolve {
    let units = ring.corner_units(ring.idempotent(e).expect("primitive idempotent"));
    if units.len() + 1 != ring.ideal(e).len() {
        return FactorSolve::NotAField;
    }
    let k = coeff.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Elem>> = coeff
        .iter()
        .enumerate()
        .map(|(g, row)| {
            let mut r: Vec<Elem> = row.iter().map(|&a| ring.mul(a, e)).collect();
            r.push(if g == identity { e } else { ring.zero() });
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..k {
        let Some(p) = (top..rows.len()).find(|&i| rows[i][col] != ring.zero()) else { continue };
        rows.swap(top, p);
        let inv = units.inverse(rows[top][col]).expect("nonzero element of a field");
        for v in rows[top].iter_mut() {
            *v = ring.mul(*v, inv);
        }
        let pivot = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != top && row[col] != ring.zero() {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot).take(k + 1) {
                    *x = ring.sub(*x, ring.mul(c, p));
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    if rows[top..].iter().any(|r| r[k] != ring.zero()) {
        return FactorSolve::Inconsistent;
    }
    let mut x = vec![ring.zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][k];
    }
    FactorSolve::Solved(x)
}

/// Enumerates `x ∈ (R·e)^k` in lexicographic order.
fn search_on_factor(
    ring: &FiniteRing,
    e: Elem,
    coeff: &[Vec<Elem>],
    identity: GroupElem,
    opts: SearchOptions,
) -> Result<Option<Vec<Elem>>, String> {
    let k = coeff.first().map_or(0, Vec::len);
    if k > opts.max_m {
        return Err(format!(
            "R·{} is not a field and needs {k} pairs, above the exhaustive bound m <= {}",
            ring.label(e),
            opts.max_m
        ));
    }
    let members = ring.ideal(e);
    let total = (members.len() as u128).pow(k as u32);
    if total > opts.budget as u128 {
        return Err(format!(
            "exhaustive search on R·{} needs {total} candidates, budget {}",
            ring.label(e),
            opts.budget
        ));
    }
    let mut digits = vec![0usize; k];
    for _ in 0..total {
        let ok = coeff.iter().enumerate().all(|(g, row)| {
            let sum = row
                .iter()
                .zip(&digits)
                .fold(ring.zero(), |acc, (&a, &d)| ring.add(acc, ring.mul(members[d], ring.mul(a, e))));
            sum == if g == identity { e } else { ring.zero() }
        });
        if ok {
            return Ok(Some(digits.iter().map(|&d| members[d]).collect()));
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < members.len() {
                break;
            }
            *d = 0;
        }
    }
    Ok(None)
}

/// Outcome of comparing `R⋆_αG` with `End_{R^α}(R)` through `ρ`.
#[derive(Clone, Debug)]
pub struct RegularRepresentation {
    /// `|R⋆_αG| = Π_g |D_g|`.
    pub algebra_order: BigUint,
    /// `|End_{R^α}(R)|`, counted independently of `ρ`.
    pub endomorphism_order: BigUint,
    pub image_order: BigUint,
    pub kernel_order: BigUint,
    pub homomorphism: bool,
    pub hom_failure: Option<String>,
    /// Every `ρ(u)` commutes with multiplication by `R^α`.
    pub invariant_linear: bool,
    pub injective: bool,
    pub bijective: bool,
    pub matrix: Option<MatrixForm>,
}

/// `R⋆_αG ≅ M_n(F_q)` when `R^α` is a field `F_q`, with the matrices of
/// `ρ(b·δ_g)` for additive generators `b` of each `D_g`.
#[derive(Clone, Debug)]
pub struct MatrixForm {
    pub field_order: usize,
    pub degree: usize,
    /// Basis of `R` over `R^α`.
    pub basis: Vec<Elem>,
    pub generator_matrices: Vec<GeneratorMatrix>,
    /// The matrices multiply like the algebra elements they represent.
    pub multiplicative: bool,
}

impl MatrixForm {
    pub fn label(&self) -> String {
        format!("M_{}(F_{})", self.degree, self.field_order)
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    pub g: GroupElem,
    pub coefficient: Elem,
    /// Row-major, entries in `R^α`.
    pub matrix: Vec<Vec<Elem>>,
}

/// `ρ(a·δ_g)(x)`.
#[inline]
fn rho(action: &PartialAction, g: GroupElem, a: Elem, x: Elem) -> Elem {
    action.ring().mul(a, action.apply(g, x))
}

pub fn regular_representation(action: &PartialAction) -> RegularRepresentation {
    let ring = action.ring();
    let group = action.group();
    let add = additive_structure(ring);
    let rgens = add.generators().to_vec();
    let dgens: Vec<FinAbPresentation<Elem>> = group.elements().map(|g| ideal_structure(ring, action.one(g))).collect();
    let algebra_order = dgens.iter().fold(BigUint::one(), |acc, d| acc * d.order());

    // multiplicativity on additive generators, against every x
    let mut hom_failure = None;
    if ring.elements().any(|x| rho(action, 0, ring.one(), x) != x) {
        hom_failure = Some("rho(1·δ_1) is not the identity".to_string());
    }
    'outer: for g in group.elements() {
        for h in group.elements() {
            let gh = group.mul(g, h);
            for &a in dgens[g].generators() {
                for &b in dgens[h].generators() {
                    let c = ring.mul(a, action.apply(g, b));
                    for x in ring.elements() {
                        let lhs = rho(action, g, a, rho(action, h, b, x));
                        let rhs = rho(action, gh, c, x);
                        if lhs != rhs {
                            hom_failure = Some(format!(
                                "rho({}δ_{g})rho({}δ_{h}) differs from rho of the product at x = {}",
                                ring.label(a),
                                ring.label(b),
                                ring.label(x)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    let invariants = action.invariant_subring();
    let inv_els: Vec<Elem> = invariants.members().to_vec();
    let inv_gens: Vec<Elem> = abelian_structure(&inv_els, ring.zero(), |a, b| ring.add(a, b))
        .expect("subring is an additive group")
        .generators()
        .to_vec();
    let invariant_linear = group.elements().all(|g| {
        dgens[g].generators().iter().all(|&a| {
            inv_gens.iter().all(|&t| {
                ring.elements().all(|x| rho(action, g, a, ring.mul(t, x)) == ring.mul(t, rho(action, g, a, x)))
            })
        })
    });

    // ρ as a Z-linear map ⊕ D_g → R^k, functions recorded by their values on generators of R
    let k = rgens.len();
    let rmod = add.invariant_factors().to_vec();
    let mut domain_moduli = Vec::new();
    let mut images = Vec::new();
    for g in group.elements() {
        for (&a, &d) in dgens[g].generators().iter().zip(dgens[g].invariant_factors()) {
            domain_moduli.push(d);
            let mut v = Vec::with_capacity(k * rmod.len());
            for &b in &rgens {
                v.extend(add.coords(&rho(action, g, a, b)).expect("element of R"));
            }
            images.push(v);
        }
    }
    let codomain_moduli: Vec<u64> = (0..k).flat_map(|_| rmod.iter().copied()).collect();
    let ki = hom_kernel_image(&domain_moduli, &codomain_moduli, &images).expect("rho is additive");

    let endomorphism_order = endomorphism_count(ring, &add, &inv_gens);
    let injective = ki.kernel_order.is_one();
    let homomorphism = hom_failure.is_none();
    let bijective = homomorphism && injective && invariant_linear && ki.image_order == endomorphism_order;
    let matrix = if bijective { matrix_form(action, &inv_els, &dgens) } else { None };
    RegularRepresentation {
        algebra_order,
        endomorphism_order,
        image_order: ki.image_order,
        kernel_order: ki.kernel_order,
        homomorphism,
        hom_failure,
        invariant_linear,
        injective,
        bijective,
        matrix,
    }
}

/// `|End_{R^α}(R)|`: additive maps `φ` given by `v_j = φ(b_j)` subject to
/// `d_j·v_j = 0` and `φ(t·b_j) = t·v_j` for additive generators `t` of `R^α`.
fn endomorphism_count(ring: &FiniteRing, add: &FinAbPresentation<Elem>, inv_gens: &[Elem]) -> BigUint {
    let rgens = add.generators();
    let rmod = add.invariant_factors();
    let k = rgens.len();
    // unknown vector lives in R^k; generator (j, i) puts b_i in slot j
    let mut domain_moduli = Vec::new();
    let mut images = Vec::new();
    let block = rmod.len();
    let constraints = k + k * inv_gens.len();
    for j in 0..k {
        for (i, &bi) in rgens.iter().enumerate() {
            domain_moduli.push(rmod[i]);
            let mut v = vec![0u64; constraints * block];
            // torsion constraint d_j·v_j
            let tors = add.coords(&ring.times(bi, rmod[j])).expect("in R");
            v[j * block..(j + 1) * block].copy_from_slice(&tors);
            // linearity constraints: Σ_l c_{s,m,l} v_l − t_s v_m for every m, s
            for (s, &t) in inv_gens.iter().enumerate() {
                for (m, &bm) in rgens.iter().enumerate() {
                    let slot = k + s * k + m;
                    let tb = add.coords(&ring.mul(t, bm)).expect("in R");
                    // contribution of v_j = b_i to Σ_l c_l v_l is c_j·b_i
                    let mut val = ring.times(bi, tb[j]);
                    if m == j {
                        val = ring.sub(val, ring.mul(t, bi));
                    }
                    let c = add.coords(&val).expect("in R");
                    v[slot * block..(slot + 1) * block].copy_from_slice(&c);
                }
            }
            images.push(v);
        }
    }
    let codomain: Vec<u64> = (0..constraints).flat_map(|_| rmod.iter().copied()).collect();
    hom_kernel_image(&domain_moduli, &codomain, &images).expect("constraints are additive").kernel_order
}

fn matrix_form(action: &PartialAction, field: &[Elem], dgens: &[FinAbPresentation<Elem>]) -> Option<MatrixForm> {
    let ring = action.ring();
    let q = field.len();
    let is_field = field.iter().all(|&t| t == ring.zero() || field.iter().any(|&u| ring.mul(t, u) == ring.one()));
    if !is_field || q < 2 {
        return None;
    }
    // greedy basis of R over F, with coordinates of every element
    let mut basis: Vec<Elem> = Vec::new();
    let mut coords: HashMap<Elem, Vec<Elem>> = HashMap::from([(ring.zero(), Vec::new())]);
    for r in ring.elements() {
        if coords.contains_key(&r) {
            continue;
        }
        let mut next = HashMap::with_capacity(coords.len() * q);
        for (&v, c) in &coords {
            for &t in field {
                let mut c2 = c.clone();
                c2.push(t);
                next.insert(ring.add(v, ring.mul(t, r)), c2);
            }
        }
        basis.push(r);
        coords = next;
    }
    let n = basis.len();
    for c in coords.values_mut() {
        c.resize(n, ring.zero());
    }
    let matrix_of = |g: GroupElem, a: Elem| -> Vec<Vec<Elem>> {
        let cols: Vec<&Vec<Elem>> = basis.iter().map(|&b| &coords[&rho(action, g, a, b)]).collect();
        (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
    };
    let mat_mul = |x: &[Vec<Elem>], y: &[Vec<Elem>]| -> Vec<Vec<Elem>> {
        (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(ring.zero(), |acc, l| ring.add(acc, ring.mul(x[i][l], y[l][j])))).collect()
            })
            .collect()
    };
    let group = action.group();
    let mut generator_matrices = Vec::new();
    for g in group.elements() {
        for &a in dgens[g].generators() {
            generator_matrices.push(GeneratorMatrix { g, coefficient: a, matrix: matrix_of(g, a) });
        }
    }
    let multiplicative = generator_matrices.iter().all(|u| {
        generator_matrices.iter().all(|v| {
            let c = ring.mul(u.coefficient, action.apply(u.g, v.coefficient));
            mat_mul(&u.matrix, &v.matrix) == matrix_of(group.mul(u.g, v.g), c)
        })
    });
    Some(MatrixForm { field_order: q, degree: n, basis, generator_matrices, multiplicative })
}
