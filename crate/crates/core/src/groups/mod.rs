//! Finite groups by Cayley table, plus the abelian-group toolkit (Smith
//! normal form, invariant factors, kernels and images) that the cohomology
//! engine runs on.
//!
//! Group elements are plain indices `0..order` and the identity is always
//! element `0`. Cyclic groups `C_n` order their elements as `1, g, g^2, …`;
//! products of cyclic groups use mixed radix with the first factor most
//! significant.

pub mod abelian;
pub mod snf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use abelian::{abelian_structure, hom_kernel_image, FinAbPresentation, HomKernelImage};

/// Largest group accepted by [`make_group`].
pub const MAX_GROUP_ORDER: usize = 256;

/// Index of a group element.
pub type GroupElem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("group of order {0} is above the supported maximum of {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("Cayley table: {0}")]
    BadTable(String),
    #[error("group axiom fails: {0}")]
    Axiom(String),
    #[error("operation is not commutative")]
    NonCommutative,
    #[error("not an abelian group: {0}")]
    Invalid(String),
    #[error("images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
}

/// Declarative description of a group, as accepted by [`make_group`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Cyclic {
        n: usize,
    },
    /// Direct product of cyclic groups `C_{n_1} × C_{n_2} × …`.
    Product {
        factors: Vec<usize>,
    },
    /// Explicit Cayley table; `table[a][b]` is the index of `a·b` and element
    /// 0 must be the identity.
    Table {
        table: Vec<Vec<usize>>,
    },
}

impl GroupDescriptor {
    pub fn cyclic(n: usize) -> Self {
        GroupDescriptor::Cyclic { n }
    }
}

/// A finite group stored as a dense multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
    abelian: bool,
}

pub fn make_group(desc: &GroupDescriptor) -> Result<FiniteGroup, GroupError> {
    match desc {
        GroupDescriptor::Cyclic { n } => FiniteGroup::cyclic(*n),
        GroupDescriptor::Product { factors } => FiniteGroup::cyclic_product(factors),
        GroupDescriptor::Table { table } => {
            let labels = (0..table.len()).map(|i| if i == 0 { "1".to_string() } else { format!("t{i}") }).collect();
            FiniteGroup::from_table(table, labels)
        }
    }
}

fn cyclic_label(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "g".into(),
        _ => format!("g^{k}"),
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mul = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup { order: n, mul, inv, labels: (0..n).map(cyclic_label).collect(), abelian: true })
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).expect("order 1 is valid")
    }

    pub fn cyclic_product(factors: &[usize]) -> Result<FiniteGroup, GroupError> {
        if factors.is_empty() {
            return Ok(FiniteGroup::trivial());
        }
        if factors.contains(&0) {
            return Err(GroupError::Empty);
        }
        let order = factors.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n).filter(|&o| o <= MAX_GROUP_ORDER));
        let order = order.ok_or(GroupError::TooLarge(usize::MAX))?;
        let split = |mut x: usize| -> Vec<usize> {
            let mut out = vec![0; factors.len()];
            for i in (0..factors.len()).rev() {
                out[i] = x % factors[i];
                x /= factors[i];
            }
            out
        };
        let join = |v: &[usize]| v.iter().zip(factors).fold(0, |acc, (&c, &n)| acc * n + c);
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let sa = split(a);
            for b in 0..order {
                let sb = split(b);
                let s: Vec<usize> = sa.iter().zip(&sb).zip(factors).map(|((x, y), n)| (x + y) % n).collect();
                mul.push(join(&s));
            }
        }
        let inv = (0..order)
            .map(|a| join(&split(a).iter().zip(factors).map(|(x, n)| (n - x) % n).collect::<Vec<_>>()))
            .collect();
        let labels = (0..order)
            .map(|a| {
                let parts: Vec<String> = split(a).into_iter().map(cyclic_label).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Ok(FiniteGroup { order, mul, inv, labels, abelian: true })
    }

    /// Validates a Cayley table (closure, identity at 0, inverses, associativity).
    pub fn from_table(table: &[Vec<usize>], labels: Vec<String>) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        if labels.len() != n {
            return Err(GroupError::BadTable("one label per element required".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::BadTable(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::BadTable(format!("row {a} contains out-of-range entry {x}")));
            }
        }
        for (a, row) in table.iter().enumerate() {
            if table[0][a] != a || row[0] != a {
                return Err(GroupError::Axiom(format!("element 0 is not an identity for element {a}")));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let left = (0..n).find(|&b| table[a][b] == 0);
            match left {
                Some(b) if table[b][a] == 0 => inv[a] = b,
                _ => return Err(GroupError::Axiom(format!("element {a} has no two-sided inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::Axiom(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let abelian = (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]));
        Ok(FiniteGroup { order: n, mul: table.concat(), inv, labels, abelian })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<GroupElem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: GroupElem) -> GroupElem {
        self.inv[a]
    }

    pub fn pow(&self, a: GroupElem, k: usize) -> GroupElem {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: GroupElem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn label(&self, a: GroupElem) -> &str {
        &self.labels[a]
    }

    pub fn find_label(&self, label: &str) -> Option<GroupElem> {
        self.labels.iter().position(|l| l == label)
    }

    /// A generating set chosen greedily by index.
    pub fn generators(&self) -> Vec<GroupElem> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut members = vec![0];
        for a in 1..self.order {
            if span[a] {
                continue;
            }
            gens.push(a);
            // close the subgroup under right multiplication by all generators
            let mut frontier = members.clone();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !span[y] {
                        span[y] = true;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    /// The Cayley table as rows.
    pub fn table(&self) -> Vec<Vec<GroupElem>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Number of `n`-tuples, i.e. `order^n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.order.pow(n as u32)
    }

    /// The `index`-th tuple of `G^n` in lexicographic order.
    pub fn tuple(&self, n: usize, mut index: usize) -> Vec<GroupElem> {
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = index % self.order;
            index /= self.order;
        }
        out
    }

    pub fn tuple_index(&self, tuple: &[GroupElem]) -> usize {
        tuple.iter().fold(0, |acc, &g| acc * self.order + g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three() {
        let g = make_group(&GroupDescriptor::cyclic(3)).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.pow(1, 3), 0);
        assert_eq!(g.label(2), "g^2");
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.generators(), vec![1]);
    }

    #[test]
    fn klein_four() {
        let g = make_group(&GroupDescriptor::Product { factors: vec![2, 2] }).unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).all(|a| g.mul(a, a) == 0));
        assert_eq!(g.generators().len(), 2);
        assert_eq!(g.label(3), "(g,g)");
    }

    #[test]
    fn nonassociative_table_is_rejected() {
        // a loop with two-sided inverses that is not associative
        let table = vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 0, 4, 2, 5, 3],
            vec![2, 4, 3, 5, 1, 0],
            vec![3, 2, 5, 4, 0, 1],
            vec![4, 5, 1, 0, 3, 2],
            vec![5, 3, 0, 1, 2, 4],
        ];
        let err = make_group(&GroupDescriptor::Table { table }).unwrap_err();
        assert!(err.to_string().contains("·"), "{err}");
    }

    #[test]
    fn symmetric_group_table_is_accepted() {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table: Vec<Vec<usize>> =
            perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        let g = make_group(&GroupDescriptor::Table { table }).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.element_order(4), 3);
    }

    #[test]
    fn tuples_round_trip() {
        let g = FiniteGroup::cyclic(3).unwrap();
        for i in 0..g.tuple_count(3) {
            assert_eq!(g.tuple_index(&g.tuple(3, i)), i);
        }
        assert_eq!(g.tuple(2, 5), vec![1, 2]);
    }
}
