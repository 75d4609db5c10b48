//! Finite commutative unital rings given by dense operation tables.
//!
//! Every ring, whatever its origin, is stored as `order × order` addition and
//! multiplication tables over element indices `0..order`. The structured
//! constructors only decide how those tables are filled and how elements are
//! ordered:
//!
//! * `Z/n`: element `k` is the residue `k`.
//! * `GF(p^k)` from a monic irreducible `f`: element `Σ cᵢ pⁱ` is the
//!   polynomial `Σ cᵢ xⁱ mod f`, so indices are lexicographic in
//!   `(c_{k-1}, …, c_0)`.
//! * products: mixed radix with the first factor most significant, i.e.
//!   lexicographic over component tuples.
//!
//! The ordering is part of the public contract because fixtures and reports
//! refer to elements by index.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the number of elements of a constructed ring.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Handle of an element inside a [`FiniteRing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An element `e` with `e·e = e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Idempotent(Elem);

impl Idempotent {
    pub fn elem(self) -> Elem {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial must be monic of degree >= 1 with coefficients below p")]
    MalformedPolynomial,
    #[error("polynomial {0} is reducible over GF({1})")]
    ReduciblePolynomial(String, u64),
    #[error("product of an empty list of rings")]
    EmptyProduct,
    #[error("ring would have {order} elements, above the configured cap of {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error("operation table: {0}")]
    BadTable(String),
    #[error("ring axiom fails: {0}")]
    Axiom(String),
}

/// Declarative description of a ring, as accepted by [`make_ring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingDescriptor {
    /// `Z/nZ`.
    Zmod { n: u64 },
    /// `GF(p)[x]/(poly)`; `poly` lists coefficients from the constant term
    /// upwards and must be monic.
    Gf { p: u64, poly: Vec<u64> },
    /// Direct product, first factor most significant in the element order.
    Product { factors: Vec<RingDescriptor> },
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> Self {
        RingDescriptor::Zmod { n }
    }

    pub fn gf(p: u64, poly: &[u64]) -> Self {
        RingDescriptor::Gf { p, poly: poly.to_vec() }
    }

    /// `GF(4)` as `GF(2)[x]/(x^2+x+1)`.
    pub fn gf4() -> Self {
        Self::gf(2, &[1, 1, 1])
    }

    pub fn product(factors: Vec<RingDescriptor>) -> Self {
        RingDescriptor::Product { factors }
    }

    pub fn power(factor: RingDescriptor, k: usize) -> Self {
        RingDescriptor::Product { factors: vec![factor; k] }
    }
}

/// How a ring was built. Only informational apart from the product case,
/// which carries the component orders used by [`FiniteRing::split`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingStructure {
    Modular {
        n: u64,
    },
    Field {
        p: u64,
        poly: Vec<u64>,
    },
    Product {
        factors: Vec<RingStructure>,
    },
    /// The ideal `S·e` of an ambient ring, with identity `e`.
    Corner {
        ambient: Box<RingStructure>,
        idempotent: String,
    },
    Table,
}

/// A finite commutative ring with identity, stored as dense tables.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    structure: RingStructure,
    component_orders: Vec<usize>,
    labels: Vec<String>,
}

/// Builds a ring from a descriptor with the default size cap.
pub fn make_ring(desc: &RingDescriptor) -> Result<FiniteRing, RingError> {
    make_ring_with_cap(desc, DEFAULT_MAX_ORDER)
}

pub fn make_ring_with_cap(desc: &RingDescriptor, cap: usize) -> Result<FiniteRing, RingError> {
    let order = descriptor_order(desc)?;
    if order > cap as u128 {
        return Err(RingError::TooLarge { order, cap });
    }
    match desc {
        RingDescriptor::Zmod { n } => FiniteRing::zmod(*n),
        RingDescriptor::Gf { p, poly } => FiniteRing::galois_field(*p, poly),
        RingDescriptor::Product { factors } => {
            let rings = factors.iter().map(|f| make_ring_with_cap(f, cap)).collect::<Result<Vec<_>, _>>()?;
            FiniteRing::product(&rings)
        }
    }
}

fn descriptor_order(desc: &RingDescriptor) -> Result<u128, RingError> {
    match desc {
        RingDescriptor::Zmod { n } => {
            if *n == 0 {
                Err(RingError::ZeroModulus)
            } else {
                Ok(*n as u128)
            }
        }
        RingDescriptor::Gf { p, poly } => {
            if poly.len() < 2 {
                return Err(RingError::MalformedPolynomial);
            }
            let mut order: u128 = 1;
            for _ in 1..poly.len() {
                order = order.saturating_mul(*p as u128);
            }
            Ok(order)
        }
        RingDescriptor::Product { factors } => {
            if factors.is_empty() {
                return Err(RingError::EmptyProduct);
            }
            factors.iter().try_fold(1u128, |acc, f| Ok(acc.saturating_mul(descriptor_order(f)?)))
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_label(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && deg > 0 { String::new() } else { c.to_string() };
        let term = match deg {
            0 => c.to_string(),
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{deg}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl FiniteRing {
    /// `Z/nZ` for `n >= 1`.
    pub fn zmod(n: u64) -> Result<FiniteRing, RingError> {
        if n == 0 {
            return Err(RingError::ZeroModulus);
        }
        let order = n as usize;
        let mut add = vec![0u32; order * order];
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                add[a * order + b] = ((a + b) % order) as u32;
                mul[a * order + b] = ((a as u64 * b as u64) % n) as u32;
            }
        }
        let labels = (0..order).map(|k| k.to_string()).collect();
        Ok(FiniteRing::assemble(add, mul, Elem(0), Elem((1 % n) as u32), RingStructure::Modular { n }, labels))
    }

    /// `GF(p^k) = GF(p)[x]/(poly)`, where `poly` is monic of degree `k`.
    pub fn galois_field(p: u64, poly: &[u64]) -> Result<FiniteRing, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let k = poly.len().checked_sub(1).ok_or(RingError::MalformedPolynomial)?;
        if k == 0 || poly[k] != 1 || poly.iter().any(|&c| c >= p) {
            return Err(RingError::MalformedPolynomial);
        }
        let order = (p as usize).pow(k as u32);
        let digits = |mut v: usize| -> Vec<u64> {
            let mut out = vec![0u64; k];
            for slot in out.iter_mut() {
                *slot = (v % p as usize) as u64;
                v /= p as usize;
            }
            out
        };
        let index = |c: &[u64]| -> usize { c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) };
        let coeffs: Vec<Vec<u64>> = (0..order).map(digits).collect();

        let mut add = vec![0u32; order * order];
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let s: Vec<u64> = coeffs[a].iter().zip(&coeffs[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * order + b] = index(&s) as u32;

                let mut prod = vec![0u64; 2 * k - 1];
                for (i, &x) in coeffs[a].iter().enumerate() {
                    for (j, &y) in coeffs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce by the monic modulus from the top degree down
                for deg in (k..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    for (i, &m) in poly.iter().enumerate().take(k) {
                        let t = deg - k + i;
                        prod[t] = (prod[t] + (p - c) * m % p) % p;
                    }
                    prod[deg] = 0;
                }
                mul[a * order + b] = index(&prod[..k]) as u32;
            }
        }
        let labels = if k == 1 {
            (0..order).map(|v| v.to_string()).collect()
        } else {
            coeffs.iter().map(|c| poly_label(c)).collect()
        };
        let ring =
            FiniteRing::assemble(add, mul, Elem(0), Elem(1), RingStructure::Field { p, poly: poly.to_vec() }, labels);
        // x^k - f has a zero divisor exactly when f is reducible
        for a in 1..order {
            if !(1..order).any(|b| ring.mul[a * order + b] == 1) {
                return Err(RingError::ReduciblePolynomial(poly_label(poly), p));
            }
        }
        Ok(ring)
    }

    /// Direct product of previously constructed rings.
    pub fn product(factors: &[FiniteRing]) -> Result<FiniteRing, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptyProduct);
        }
        let orders: Vec<usize> = factors.iter().map(|r| r.order).collect();
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o))
            .ok_or(RingError::TooLarge { order: u128::MAX, cap: DEFAULT_MAX_ORDER })?;
        let split = |mut v: usize| -> Vec<usize> {
            let mut out = vec![0; orders.len()];
            for i in (0..orders.len()).rev() {
                out[i] = v % orders[i];
                v /= orders[i];
            }
            out
        };
        let join = |parts: &[usize]| -> usize { parts.iter().zip(&orders).fold(0, |acc, (&p, &o)| acc * o + p) };
        let parts: Vec<Vec<usize>> = (0..order).map(split).collect();
        let mut add = vec![0u32; order * order];
        let mut mul = vec![0u32; order * order];
        let mut buf_add = vec![0usize; orders.len()];
        let mut buf_mul = vec![0usize; orders.len()];
        for a in 0..order {
            for b in 0..order {
                for (i, r) in factors.iter().enumerate() {
                    let (x, y) = (Elem(parts[a][i] as u32), Elem(parts[b][i] as u32));
                    buf_add[i] = r.add(x, y).idx();
                    buf_mul[i] = r.mul(x, y).idx();
                }
                add[a * order + b] = join(&buf_add) as u32;
                mul[a * order + b] = join(&buf_mul) as u32;
            }
        }
        let one = join(&factors.iter().map(|r| r.one.idx()).collect::<Vec<_>>());
        let labels = parts
            .iter()
            .map(|p| {
                let inner: Vec<&str> = p.iter().zip(factors).map(|(&v, r)| r.labels[v].as_str()).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        let mut ring = FiniteRing::assemble(
            add,
            mul,
            Elem(0),
            Elem(one as u32),
            RingStructure::Product { factors: factors.iter().map(|r| r.structure.clone()).collect() },
            labels,
        );
        ring.component_orders = orders;
        Ok(ring)
    }

    /// Builds a ring from explicit tables and checks every ring axiom.
    pub fn from_tables(add: Vec<Vec<u32>>, mul: Vec<Vec<u32>>, zero: u32, one: u32) -> Result<FiniteRing, RingError> {
        let order = add.len();
        if order == 0 || mul.len() != order {
            return Err(RingError::BadTable("tables must be square and non-empty".into()));
        }
        if add.iter().chain(mul.iter()).any(|row| row.len() != order) {
            return Err(RingError::BadTable("tables must be square".into()));
        }
        if add.iter().chain(mul.iter()).flatten().any(|&v| v as usize >= order)
            || zero as usize >= order
            || one as usize >= order
        {
            return Err(RingError::BadTable("entry out of range".into()));
        }
        let ring = FiniteRing::assemble(
            add.concat(),
            mul.concat(),
            Elem(zero),
            Elem(one),
            RingStructure::Table,
            (0..order).map(|v| v.to_string()).collect(),
        );
        ring.check_axioms().map_err(RingError::Axiom)?;
        Ok(ring)
    }

    fn assemble(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Elem,
        one: Elem,
        structure: RingStructure,
        labels: Vec<String>,
    ) -> FiniteRing {
        let order = labels.len();
        let mut neg = vec![0u32; order];
        for a in 0..order {
            neg[a] = (0..order).find(|&b| add[a * order + b] == zero.0).map(|b| b as u32).unwrap_or(u32::MAX);
        }
        FiniteRing { order, add, mul, neg, zero, one, structure, component_orders: Vec::new(), labels }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn structure(&self) -> &RingStructure {
        &self.structure
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.idx() * self.order + b.idx()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.idx() * self.order + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let (mut acc, mut base) = (self.one, a);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Integer multiple `k·a`.
    pub fn times(&self, a: Elem, k: u64) -> Elem {
        let (mut acc, mut base, mut k) = (self.zero, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.idx()]
    }

    pub fn elem(&self, index: usize) -> Option<Elem> {
        (index < self.order).then_some(Elem(index as u32))
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| Elem(i as u32))
    }

    /// Component orders when the ring was built as a direct product.
    pub fn component_orders(&self) -> &[usize] {
        &self.component_orders
    }

    /// Component indices of an element of a product ring.
    pub fn split(&self, a: Elem) -> Vec<usize> {
        let mut v = a.idx();
        let mut out = vec![0; self.component_orders.len()];
        for i in (0..out.len()).rev() {
            out[i] = v % self.component_orders[i];
            v /= self.component_orders[i];
        }
        out
    }

    /// Inverse of [`FiniteRing::split`].
    pub fn join(&self, parts: &[usize]) -> Option<Elem> {
        if parts.len() != self.component_orders.len() || parts.iter().zip(&self.component_orders).any(|(p, o)| p >= o) {
            return None;
        }
        let v = parts.iter().zip(&self.component_orders).fold(0, |acc, (&p, &o)| acc * o + p);
        Some(Elem(v as u32))
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotent(&self, a: Elem) -> Option<Idempotent> {
        self.is_idempotent(a).then_some(Idempotent(a))
    }

    /// All solutions of `e·e = e`, sorted by index.
    pub fn idempotents(&self) -> Vec<Idempotent> {
        self.elements().filter(|&a| self.is_idempotent(a)).map(Idempotent).collect()
    }

    /// Minimal nonzero idempotents. Their sum is `1` and they split the ring
    /// into its local factors.
    pub fn primitive_idempotents(&self) -> Vec<Idempotent> {
        let nonzero: Vec<Elem> =
            self.idempotents().into_iter().map(Idempotent::elem).filter(|&e| e != self.zero).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&e| !nonzero.iter().any(|&f| f != e && self.mul(e, f) == f))
            .map(Idempotent)
            .collect()
    }

    /// Members of the ideal `R·e`, sorted.
    pub fn ideal(&self, e: Elem) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self.elements().map(|r| self.mul(r, e)).collect();
        set.into_iter().collect()
    }

    /// Invertible elements of the corner ring `R·e` (identity `e`).
    pub fn corner_units(&self, e: Idempotent) -> CornerUnits {
        let e = e.elem();
        let members = self.ideal(e);
        let mut elements = Vec::new();
        let mut inverses = Vec::new();
        for &u in &members {
            if let Some(&v) = members.iter().find(|&&v| self.mul(u, v) == e) {
                elements.push(u);
                inverses.push(v);
            }
        }
        let position = elements.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        CornerUnits { identity: e, elements, inverses, position }
    }

    pub fn units(&self) -> CornerUnits {
        self.corner_units(Idempotent(self.one))
    }

    /// Smallest subring containing `seeds`, computed by closure iteration.
    pub fn subring_generated(&self, seeds: &[Elem]) -> Subring {
        let mut members: BTreeSet<Elem> = seeds.iter().copied().collect();
        members.insert(self.zero);
        members.insert(self.one);
        loop {
            let current: Vec<Elem> = members.iter().copied().collect();
            let before = members.len();
            for &a in &current {
                members.insert(self.neg(a));
                for &b in &current {
                    members.insert(self.add(a, b));
                    members.insert(self.mul(a, b));
                }
            }
            if members.len() == before {
                break;
            }
        }
        Subring { members: members.into_iter().collect() }
    }

    /// The corner ring `R·e` as a ring in its own right, together with the
    /// embedding of its elements into `R`. Indices follow the ambient order.
    pub fn corner_ring(&self, e: Idempotent) -> (FiniteRing, Vec<Elem>) {
        let members = self.ideal(e.elem());
        let local: HashMap<Elem, u32> = members.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let n = members.len();
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                add[i * n + j] = local[&self.add(a, b)];
                mul[i * n + j] = local[&self.mul(a, b)];
            }
        }
        let labels = members.iter().map(|&m| self.labels[m.idx()].clone()).collect();
        let ring = FiniteRing::assemble(
            add,
            mul,
            Elem(local[&self.zero]),
            Elem(local[&e.elem()]),
            RingStructure::Corner {
                ambient: Box::new(self.structure.clone()),
                idempotent: self.labels[e.elem().idx()].clone(),
            },
            labels,
        );
        (ring, members)
    }

    /// Exhaustive check of the commutative ring axioms. Cubic in the order.
    pub fn check_axioms(&self) -> Result<(), String> {
        let els: Vec<Elem> = self.elements().collect();
        if self.order > 1 && self.zero == self.one {
            return Err("zero equals one in a ring with more than one element".into());
        }
        for &a in &els {
            if self.add(a, self.zero) != a {
                return Err(format!("{} + 0 != {}", a, a));
            }
            if self.mul(a, self.one) != a {
                return Err(format!("{} * 1 != {}", a, a));
            }
            if self.neg[a.idx()] == u32::MAX {
                return Err(format!("{} has no additive inverse", a));
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at ({a}, {b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a}, {b})"));
                }
                for &c in &els {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unit group of a corner ring `R·e`, each unit paired with its inverse.
#[derive(Clone, Debug)]
pub struct CornerUnits {
    identity: Elem,
    elements: Vec<Elem>,
    inverses: Vec<Elem>,
    position: HashMap<Elem, usize>,
}

impl CornerUnits {
    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Units sorted by element index.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, u: Elem) -> bool {
        self.position.contains_key(&u)
    }

    pub fn position(&self, u: Elem) -> Option<usize> {
        self.position.get(&u).copied()
    }

    pub fn inverse(&self, u: Elem) -> Option<Elem> {
        self.position(u).map(|i| self.inverses[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.elements.iter().copied().zip(self.inverses.iter().copied())
    }
}

/// A subset of a ring closed under the ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subring {
    members: Vec<Elem>,
}

impl Subring {
    /// Wraps `members` after checking closure in `ring`.
    pub fn new(ring: &FiniteRing, members: Vec<Elem>) -> Option<Subring> {
        let set: BTreeSet<Elem> = members.iter().copied().collect();
        if !set.contains(&ring.zero()) || !set.contains(&ring.one()) {
            return None;
        }
        for &a in &set {
            if !set.contains(&ring.neg(a)) {
                return None;
            }
            for &b in &set {
                if !set.contains(&ring.add(a, b)) || !set.contains(&ring.mul(a, b)) {
                    return None;
                }
            }
        }
        Some(Subring { members: set.into_iter().collect() })
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2_cubed() -> FiniteRing {
        make_ring(&RingDescriptor::power(RingDescriptor::zmod(2), 3)).unwrap()
    }

    #[test]
    fn z6_basics() {
        let r = FiniteRing::zmod(6).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.add(Elem(1), Elem(5)), r.zero());
        r.check_axioms().unwrap();
    }

    #[test]
    fn gf4_units_have_order_dividing_three() {
        let r = make_ring(&RingDescriptor::gf4()).unwrap();
        assert_eq!(r.order(), 4);
        for a in r.elements().skip(1) {
            assert_eq!(r.pow(a, 3), r.one());
        }
        assert_eq!(r.label(Elem(3)), "x+1");
        r.check_axioms().unwrap();
    }

    #[test]
    fn gf_rejects_bad_input() {
        assert_eq!(FiniteRing::galois_field(4, &[1, 1, 1]).unwrap_err(), RingError::NotPrime(4));
        assert!(matches!(FiniteRing::galois_field(2, &[1, 0, 1]), Err(RingError::ReduciblePolynomial(..))));
        assert_eq!(FiniteRing::galois_field(2, &[1, 1, 0]).unwrap_err(), RingError::MalformedPolynomial);
        assert_eq!(make_ring(&RingDescriptor::product(vec![])).unwrap_err(), RingError::EmptyProduct);
    }

    #[test]
    fn gf9_and_gf8_are_fields() {
        for (p, poly) in [(3u64, vec![1u64, 0, 1]), (2, vec![1, 1, 0, 1])] {
            let r = FiniteRing::galois_field(p, &poly).unwrap();
            assert_eq!(r.units().len(), r.order() - 1);
        }
    }

    #[test]
    fn product_is_componentwise() {
        let r = f2_cubed();
        assert_eq!(r.order(), 8);
        let a = r.join(&[1, 1, 0]).unwrap();
        let b = r.join(&[0, 1, 1]).unwrap();
        assert_eq!(r.split(r.mul(a, b)), vec![0, 1, 0]);
        assert_eq!(r.split(r.add(a, b)), vec![1, 0, 1]);
        assert_eq!(r.label(a), "(1,1,0)");
        r.check_axioms().unwrap();
    }

    #[test]
    fn idempotent_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let idem: Vec<u32> = z6.idempotents().iter().map(|e| e.elem().0).collect();
        assert_eq!(idem, vec![0, 1, 3, 4]);
        let gf4 = make_ring(&RingDescriptor::gf4()).unwrap();
        assert_eq!(gf4.idempotents().len(), 2);
        assert_eq!(f2_cubed().idempotents().len(), 8);
    }

    #[test]
    fn corner_unit_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let u = z6.units();
        assert_eq!(u.elements(), &[Elem(1), Elem(5)]);
        assert_eq!(u.inverse(Elem(5)), Some(Elem(5)));

        let r = f2_cubed();
        let e = r.idempotent(r.join(&[1, 1, 0]).unwrap()).unwrap();
        assert_eq!(r.corner_units(e).elements(), &[e.elem()]);

        let f4sq = make_ring(&RingDescriptor::power(RingDescriptor::gf4(), 2)).unwrap();
        let e = f4sq.idempotent(f4sq.join(&[1, 0]).unwrap()).unwrap();
        assert_eq!(f4sq.corner_units(e).len(), 3);
    }

    #[test]
    fn zero_corner_has_trivial_unit_group() {
        let r = f2_cubed();
        let zero = r.idempotent(r.zero()).unwrap();
        assert_eq!(r.corner_units(zero).elements(), &[r.zero()]);
    }

    #[test]
    fn subring_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.subring_generated(&[]).len(), 6);
        let f2sq = make_ring(&RingDescriptor::power(RingDescriptor::zmod(2), 2)).unwrap();
        let diag = f2sq.subring_generated(&[]);
        assert_eq!(diag.members(), &[f2sq.zero(), f2sq.one()]);
        let gf4 = make_ring(&RingDescriptor::gf4()).unwrap();
        assert_eq!(gf4.subring_generated(&[Elem(2)]).len(), 4);
    }

    #[test]
    fn corner_ring_has_identity_e() {
        let r = f2_cubed();
        let e = r.idempotent(r.join(&[1, 1, 0]).unwrap()).unwrap();
        let (c, emb) = r.corner_ring(e);
        assert_eq!(c.order(), 4);
        assert_eq!(emb[c.one().idx()], e.elem());
        c.check_axioms().unwrap();
    }

    #[test]
    fn explicit_tables_are_validated() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let good = vec![vec![0, 0], vec![0, 1]];
        assert!(FiniteRing::from_tables(add.clone(), good, 0, 1).is_ok());
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteRing::from_tables(add, bad, 0, 1).is_err());
    }

    #[test]
    fn size_cap_is_enforced() {
        let desc = RingDescriptor::power(RingDescriptor::zmod(7), 5);
        assert!(matches!(make_ring(&desc), Err(RingError::TooLarge { .. })));
    }
}
