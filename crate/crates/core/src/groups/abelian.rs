//! Finite abelian groups: invariant-factor decompositions with explicit
//! discrete logarithms, and kernel/image/quotient computations for
//! homomorphisms between groups of the form `⊕ Z/dᵢ`.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::snf::{smith, IntMatrix, Transforms};
use super::GroupError;

/// An invariant-factor decomposition `d₁ | d₂ | … ` of a finite abelian group
/// given by explicit elements, with a lookup table for discrete logarithms.
#[derive(Clone, Debug)]
pub struct FinAbPresentation<T> {
    generators: Vec<T>,
    invariant_factors: Vec<u64>,
    /// Elements in mixed-radix order of their coordinates, last coordinate fastest.
    elements: Vec<T>,
    dlog: HashMap<T, usize>,
}

impl<T: Copy + Eq + Hash> FinAbPresentation<T> {
    pub fn generators(&self) -> &[T] {
        &self.generators
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> T {
        self.elements[0]
    }

    /// All elements, ordered by their coordinate vectors.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn contains(&self, x: &T) -> bool {
        self.dlog.contains_key(x)
    }

    /// Coordinates of `x` with respect to the generators.
    pub fn coords(&self, x: &T) -> Option<Vec<u64>> {
        self.dlog.get(x).map(|&i| self.unrank(i))
    }

    /// The element with the given coordinates (reduced modulo the factors).
    pub fn element(&self, coords: &[u64]) -> T {
        assert_eq!(coords.len(), self.invariant_factors.len());
        let idx = coords
            .iter()
            .zip(&self.invariant_factors)
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + (c % d) as usize);
        self.elements[idx]
    }

    fn unrank(&self, mut i: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.invariant_factors.len()];
        for k in (0..out.len()).rev() {
            let d = self.invariant_factors[k] as usize;
            out[k] = (i % d) as u64;
            i /= d;
        }
        out
    }

    /// Kernel and image of the homomorphism sending generator `i` to `images[i]`.
    pub fn hom_kernel_image<S: Copy + Eq + Hash>(
        &self,
        codomain: &FinAbPresentation<S>,
        images: &[S],
    ) -> Result<HomKernelImage, GroupError> {
        if images.len() != self.generators.len() {
            return Err(GroupError::NotAHomomorphism("one image per generator required".into()));
        }
        let cols = images
            .iter()
            .map(|s| codomain.coords(s).ok_or_else(|| GroupError::NotAHomomorphism("image outside codomain".into())))
            .collect::<Result<Vec<_>, _>>()?;
        hom_kernel_image(&self.invariant_factors, &codomain.invariant_factors, &cols)
    }
}

/// Invariant-factor decomposition of the finite abelian group on `elements`
/// under `op`. Commutativity and closure are checked exhaustively.
pub fn abelian_structure<T, F>(elements: &[T], identity: T, op: F) -> Result<FinAbPresentation<T>, GroupError>
where
    T: Copy + Eq + Hash,
    F: Fn(T, T) -> T,
{
    let n = elements.len();
    let index: HashMap<T, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    if index.len() != n || !index.contains_key(&identity) {
        return Err(GroupError::Invalid("element list must be distinct and contain the identity".into()));
    }
    for &a in elements {
        if op(identity, a) != a {
            return Err(GroupError::Invalid("identity law fails".into()));
        }
        for &b in elements {
            let ab = op(a, b);
            if !index.contains_key(&ab) {
                return Err(GroupError::Invalid("operation is not closed".into()));
            }
            if ab != op(b, a) {
                return Err(GroupError::NonCommutative);
            }
        }
    }

    let power = |x: T, k: u64| -> T {
        let mut acc = identity;
        for _ in 0..k {
            acc = op(acc, x);
        }
        acc
    };
    let elem_order = |x: T| -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != identity {
            y = op(y, x);
            k += 1;
            if k as usize > n {
                return 0;
            }
        }
        k
    };

    // Greedy polycyclic series: adjoin an element of maximal order outside
    // the current subgroup and record the relation it satisfies.
    let mut gens: Vec<T> = Vec::new();
    let mut relations: Vec<(u64, Vec<i64>)> = Vec::new();
    let mut sub: HashMap<T, Vec<i64>> = HashMap::from([(identity, Vec::new())]);
    let orders: Vec<u64> = elements.iter().map(|&x| elem_order(x)).collect();
    if orders.contains(&0) {
        return Err(GroupError::Invalid("element without finite order".into()));
    }
    while sub.len() < n {
        let (pos, _) = elements
            .iter()
            .enumerate()
            .filter(|(_, x)| !sub.contains_key(x))
            .max_by_key(|(i, _)| (orders[*i], std::cmp::Reverse(*i)))
            .expect("subgroup is proper");
        let x = elements[pos];
        let mut y = x;
        let mut m = 1u64;
        while !sub.contains_key(&y) {
            y = op(y, x);
            m += 1;
        }
        relations.push((m, sub[&y].clone()));
        let k = gens.len();
        gens.push(x);
        let mut next = HashMap::with_capacity(sub.len() * m as usize);
        let mut xj = identity;
        for j in 0..m {
            for (&h, c) in &sub {
                let mut c2 = c.clone();
                c2.resize(k, 0);
                c2.push(j as i64);
                next.insert(op(xj, h), c2);
            }
            xj = op(xj, x);
        }
        sub = next;
    }

    let k = gens.len();
    let mut rel = IntMatrix::zeros(k, k);
    for (row, (m, prev)) in relations.iter().enumerate() {
        rel.set(row, row, BigInt::from(*m));
        for (j, &c) in prev.iter().enumerate() {
            rel.set(row, j, BigInt::from(-c));
        }
    }
    // rows are relations; columns index generators
    let s = smith(&rel, Transforms { v_inv: true, ..Transforms::NONE });
    // new coordinates are old coordinates times V, so t_i = sum_j (V^-1)_ij s_j
    let w = s.v_inv.expect("requested");
    let mut new_gens = Vec::new();
    let mut factors = Vec::new();
    for i in 0..k {
        let d = s.diagonal[i].to_u64().expect("invariant factor fits in u64");
        if d == 1 {
            continue;
        }
        let mut t = identity;
        for (j, &g) in gens.iter().enumerate() {
            let ord = BigInt::from(orders[index[&g]]);
            let c = w.get(i, j).mod_floor(&ord).to_u64().expect("reduced");
            t = op(t, power(g, c));
        }
        new_gens.push(t);
        factors.push(d);
    }

    let mut table = Vec::with_capacity(n);
    let total: usize = factors.iter().map(|&d| d as usize).product();
    for idx in 0..total {
        let mut rem = idx;
        let mut x = identity;
        for (g, &d) in new_gens.iter().zip(&factors).rev() {
            x = op(x, power(*g, (rem % d as usize) as u64));
            rem /= d as usize;
        }
        table.push(x);
    }
    let dlog: HashMap<T, usize> = table.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    if dlog.len() != n || table.len() != n {
        return Err(GroupError::Invalid("decomposition does not reproduce the group".into()));
    }
    Ok(FinAbPresentation { generators: new_gens, invariant_factors: factors, elements: table, dlog })
}

/// Result of [`hom_kernel_image`].
#[derive(Clone, Debug)]
pub struct HomKernelImage {
    pub kernel_order: BigUint,
    pub image_order: BigUint,
    /// Columns spanning the preimage lattice of the kernel in `Z^k`
    /// (it contains `dᵢ·eᵢ` for every domain modulus).
    pub kernel_lattice: Vec<Vec<BigInt>>,
    /// Invariant factors (> 1) of `codomain / image`.
    pub cokernel_factors: Vec<u64>,
    /// Codomain coordinates of generators of `codomain / image`.
    pub cokernel_generators: Vec<Vec<u64>>,
    codomain_moduli: Vec<u64>,
}

impl HomKernelImage {
    /// One representative per coset of the image, or `None` when there are
    /// more than `limit` cosets.
    pub fn coset_representatives(&self, limit: usize) -> Option<Vec<Vec<u64>>> {
        let count = self.cokernel_factors.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))?;
        if count > limit {
            return None;
        }
        let mut reps = Vec::with_capacity(count);
        for idx in 0..count {
            let mut rem = idx;
            let mut v = vec![0u64; self.codomain_moduli.len()];
            for (gen, &d) in self.cokernel_generators.iter().zip(&self.cokernel_factors).rev() {
                let c = (rem % d as usize) as u64;
                rem /= d as usize;
                for ((slot, &g), &m) in v.iter_mut().zip(gen).zip(&self.codomain_moduli) {
                    *slot = (*slot + c * g) % m;
                }
            }
            reps.push(v);
        }
        Some(reps)
    }
}

fn product(moduli: &[u64]) -> BigUint {
    moduli.iter().fold(BigUint::one(), |acc, &d| acc * d)
}

fn reduce(v: &BigInt, m: u64) -> u64 {
    v.mod_floor(&BigInt::from(m)).to_u64().expect("reduced")
}

/// Kernel and image of the homomorphism `⊕ Z/dᵢ → ⊕ Z/eⱼ` that sends the
/// `i`-th domain generator to the coordinate vector `images[i]`.
pub fn hom_kernel_image(domain: &[u64], codomain: &[u64], images: &[Vec<u64>]) -> Result<HomKernelImage, GroupError> {
    let (k, m) = (domain.len(), codomain.len());
    if images.len() != k || images.iter().any(|v| v.len() != m) {
        return Err(GroupError::NotAHomomorphism("image matrix has the wrong shape".into()));
    }
    for (i, (img, &d)) in images.iter().zip(domain).enumerate() {
        for (&c, &e) in img.iter().zip(codomain) {
            if !(c as u128 * d as u128).is_multiple_of(e as u128) {
                return Err(GroupError::NotAHomomorphism(format!(
                    "generator {i} has order dividing {d} but its image does not"
                )));
            }
        }
    }
    // N = [M | diag(e)], kernel of N projects onto the kernel lattice
    let mut n = IntMatrix::zeros(m, k + m);
    for (j, img) in images.iter().enumerate() {
        for (i, &c) in img.iter().enumerate() {
            n.set(i, j, BigInt::from(c % codomain[i]));
        }
    }
    for (i, &e) in codomain.iter().enumerate() {
        n.set(i, k + i, BigInt::from(e));
    }
    let s = smith(&n, Transforms { v: true, u_inv: true, ..Transforms::NONE });
    debug_assert_eq!(s.rank, m);
    let v = s.v.expect("requested");
    let u_inv = s.u_inv.expect("requested");
    let coker_order = s.diagonal.iter().fold(BigUint::one(), |acc, d| acc * d.magnitude());
    let image_order = product(codomain) / &coker_order;
    let kernel_order = product(domain) / &image_order;
    let kernel_lattice = (m..k + m).map(|j| (0..k).map(|i| v.get(i, j).clone()).collect()).collect();
    let mut cokernel_factors = Vec::new();
    let mut cokernel_generators = Vec::new();
    for (i, d) in s.diagonal.iter().enumerate() {
        let d = d.to_u64().expect("cokernel factor fits in u64");
        if d > 1 {
            cokernel_factors.push(d);
            cokernel_generators.push((0..m).map(|r| reduce(u_inv.get(r, i), codomain[r])).collect());
        }
    }
    Ok(HomKernelImage {
        kernel_order,
        image_order,
        kernel_lattice,
        cokernel_factors,
        cokernel_generators,
        codomain_moduli: codomain.to_vec(),
    })
}

/// Structure of `L / (span(sub) + ⊕ dᵢZ)` where `L` is a full-rank lattice in
/// `Z^k` containing every `dᵢ·eᵢ` (for example a kernel lattice) and `sub`
/// lies in `L`. Returns the invariant factors (> 1) and generator coordinates.
pub fn subquotient(
    moduli: &[u64],
    lattice: &[Vec<BigInt>],
    sub: &[Vec<u64>],
) -> Result<(Vec<u64>, Vec<Vec<u64>>), GroupError> {
    let k = moduli.len();
    if k == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let l = IntMatrix::from_columns(k, lattice);
    let s = smith(&l, Transforms { u: true, v: true, ..Transforms::NONE });
    if s.rank != k {
        return Err(GroupError::Invalid("lattice is not of full rank".into()));
    }
    let (u, v) = (s.u.expect("requested"), s.v.expect("requested"));
    // coordinates in the lattice basis: y = V·S⁻¹·U·w
    let solve = |w: &[BigInt]| -> Result<Vec<BigInt>, GroupError> {
        let uw = u.mul_vec(w);
        let mut scaled = Vec::with_capacity(k);
        for (x, d) in uw.iter().zip(&s.diagonal) {
            let (q, r) = x.div_rem(d);
            if !r.is_zero() {
                return Err(GroupError::Invalid("subgroup generator outside the lattice".into()));
            }
            scaled.push(q);
        }
        Ok(v.mul_vec(&scaled))
    };
    let mut columns = Vec::with_capacity(sub.len() + k);
    for w in sub {
        columns.push(solve(&w.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())?);
    }
    for (i, &d) in moduli.iter().enumerate() {
        let mut w = vec![BigInt::zero(); k];
        w[i] = BigInt::from(d);
        columns.push(solve(&w)?);
    }
    let y = IntMatrix::from_columns(k, &columns);
    let sy = smith(&y, Transforms { u_inv: true, ..Transforms::NONE });
    let p = sy.u_inv.expect("requested");
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    for (i, d) in sy.diagonal.iter().enumerate() {
        let d = d.to_u64().expect("quotient factor fits in u64");
        if d > 1 {
            factors.push(d);
            let g = l.mul_vec(&p.column(i));
            gens.push(g.iter().zip(moduli).map(|(x, &m)| reduce(x, m)).collect());
        }
    }
    Ok((factors, gens))
}

/// Subgroup of `⊕ Z/dᵢ` generated by `gens`, enumerated as coordinate vectors.
/// Returns `None` when it would exceed `limit` elements.
pub fn span_elements(moduli: &[u64], gens: &[Vec<u64>], limit: usize) -> Option<Vec<Vec<u64>>> {
    let zero = vec![0u64; moduli.len()];
    let mut seen: std::collections::HashSet<Vec<u64>> = std::collections::HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).zip(moduli).map(|((a, b), m)| (a + b) % m).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<Vec<u64>> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{make_ring, Elem, RingDescriptor};

    #[test]
    fn unit_group_of_z6() {
        let r = make_ring(&RingDescriptor::zmod(6)).unwrap();
        let u = r.units();
        let p = abelian_structure(u.elements(), r.one(), |a, b| r.mul(a, b)).unwrap();
        assert_eq!(p.invariant_factors(), &[2]);
    }

    #[test]
    fn unit_group_of_f4_squared() {
        let r = make_ring(&RingDescriptor::power(RingDescriptor::gf4(), 2)).unwrap();
        let u = r.units();
        let p = abelian_structure(u.elements(), r.one(), |a, b| r.mul(a, b)).unwrap();
        assert_eq!(p.invariant_factors(), &[3, 3]);
    }

    #[test]
    fn trivial_group_has_no_factors() {
        let p = abelian_structure(&[0u8], 0, |a, b| a ^ b).unwrap();
        assert!(p.invariant_factors().is_empty());
        assert_eq!(p.order(), 1);
    }

    #[test]
    fn z2_times_z4_times_z3() {
        // Z/24 presented additively should give [24]; Z/2 x Z/12 gives [2, 12]
        let els: Vec<u32> = (0..24).collect();
        let p = abelian_structure(&els, 0, |a, b| (a + b) % 24).unwrap();
        assert_eq!(p.invariant_factors(), &[24]);
        let els: Vec<(u32, u32)> = (0..2).flat_map(|a| (0..12).map(move |b| (a, b))).collect();
        let p = abelian_structure(&els, (0, 0), |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 12)).unwrap();
        assert_eq!(p.invariant_factors(), &[2, 12]);
    }

    #[test]
    fn noncommutative_input_is_rejected() {
        // S3 as permutations of 3 points
        let perms: Vec<[u8; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let compose = |a: [u8; 3], b: [u8; 3]| [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]];
        assert!(matches!(abelian_structure(&perms, [0, 1, 2], compose), Err(GroupError::NonCommutative)));
    }

    #[test]
    fn coordinates_round_trip() {
        let r = make_ring(&RingDescriptor::zmod(15)).unwrap();
        let u = r.units();
        let p = abelian_structure(u.elements(), r.one(), |a, b| r.mul(a, b)).unwrap();
        assert_eq!(p.invariant_factors(), &[2, 4]);
        for &x in u.elements() {
            let c = p.coords(&x).unwrap();
            assert_eq!(p.element(&c), x);
        }
        let _: Elem = p.identity();
    }

    #[test]
    fn kernel_image_examples() {
        let id = hom_kernel_image(&[2], &[2], &[vec![1]]).unwrap();
        assert_eq!((id.kernel_order.clone(), id.image_order.clone()), (1u32.into(), 2u32.into()));
        let zero = hom_kernel_image(&[3, 3], &[3, 3], &[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!((zero.kernel_order, zero.image_order), (9u32.into(), 1u32.into()));
        // squaring on Z/4 is x -> 2x additively
        let sq = hom_kernel_image(&[4], &[4], &[vec![2]]).unwrap();
        assert_eq!((sq.kernel_order.clone(), sq.image_order.clone()), (2u32.into(), 2u32.into()));
        let reps = sq.coset_representatives(10).unwrap();
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn invalid_images_are_rejected() {
        // the generator of Z/2 cannot go to a generator of Z/3
        assert!(hom_kernel_image(&[2], &[3], &[vec![1]]).is_err());
    }

    #[test]
    fn subquotient_of_z4_by_2z4() {
        // identity map on Z/4: kernel lattice is 4Z, quotient by nothing is trivial
        let k = hom_kernel_image(&[4], &[1], &[vec![0]]).unwrap();
        let (f, _) = subquotient(&[4], &k.kernel_lattice, &[vec![2]]).unwrap();
        assert_eq!(f, vec![2]);
        let (f, _) = subquotient(&[4], &k.kernel_lattice, &[vec![1]]).unwrap();
        assert!(f.is_empty());
    }
}
