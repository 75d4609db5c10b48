//! Dense integer matrices and Smith normal form with unimodular transforms.
//!
//! Entries are arbitrary-precision so intermediate pivots cannot overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = s * c;
            self.data[dst * self.cols + j] += delta;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let delta = s * c;
            self.data[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = -v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = -v;
        }
    }
}

/// Which unimodular transforms to accumulate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Transforms {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Transforms {
    pub const ALL: Transforms = Transforms { u: true, u_inv: true, v: true, v_inv: true };
    pub const NONE: Transforms = Transforms { u: false, u_inv: false, v: false, v_inv: false };
}

/// `U·A·V = D` with `D` diagonal, `d₁ | d₂ | …`, all nonnegative.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_row(dst, src, c);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col(src, dst, &-c);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col(dst, src, c);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.add_row(src, dst, &-c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(r);
        }
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if v.abs().is_one() {
                return Some((i, j));
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form of `a`, accumulating the requested transforms.
pub fn smith(a: &IntMatrix, want: Transforms) -> Smith {
    let (rows, cols) = (a.rows, a.cols);
    let mut w = Work {
        a: a.clone(),
        u: want.u.then(|| IntMatrix::identity(rows)),
        u_inv: want.u_inv.then(|| IntMatrix::identity(rows)),
        v: want.v.then(|| IntMatrix::identity(cols)),
        v_inv: want.v_inv.then(|| IntMatrix::identity(cols)),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&w.a, t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let pivot = w.a.get(t, t).clone();
            let mut residue = false;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = w.a.get(i, t).div_floor(&pivot);
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
                residue |= !w.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = w.a.get(t, j).div_floor(&pivot);
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
                residue |= !w.a.get(t, j).is_zero();
            }
            if residue {
                // move the smallest leftover in row/column t into the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let v = w.a.get(i, t);
                    if !v.is_zero() && v.abs() < w.a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let v = w.a.get(t, j);
                    if !v.is_zero() && v.abs() < w.a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // row and column cleared; enforce divisibility of the remainder
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !w.a.get(i, j).is_multiple_of(&pivot) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| w.a.get(i, i).clone()).collect();
    Smith { diagonal, rank, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv }
}

/// Basis of the integer kernel `{x : A·x = 0}` as columns.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith(a, Transforms { v: true, ..Transforms::NONE });
    let v = s.v.expect("requested");
    (s.rank..a.cols).map(|j| v.column(j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut acc = BigInt::zero();
                for k in 0..a.cols() {
                    acc += a.get(i, k) * b.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    #[test]
    fn classic_example() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a, Transforms::ALL);
        let d: Vec<i64> = s.diagonal.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        let (u, v) = (s.u.unwrap(), s.v.unwrap());
        let prod = matmul(&matmul(&u, &a), &v);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(prod.get(i, j), &want);
            }
        }
        assert_eq!(matmul(&u, &s.u_inv.unwrap()), IntMatrix::identity(3));
        assert_eq!(matmul(&v, &s.v_inv.unwrap()), IntMatrix::identity(3));
    }

    #[test]
    fn divisibility_is_enforced() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        let s = smith(&a, Transforms::NONE);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for col in k {
            assert!(a.mul_vec(&col).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn empty_matrices() {
        let s = smith(&IntMatrix::zeros(0, 3), Transforms::ALL);
        assert_eq!(s.rank, 0);
        assert_eq!(integer_kernel(&IntMatrix::zeros(0, 3)).len(), 3);
    }
}
