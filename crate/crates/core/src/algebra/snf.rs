use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Dense integer matrix, row-major.
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

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Domain("ragged matrix rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j) + a * o.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + k * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + k * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        if negate {
            -prev
        } else {
            prev
        }
    }
}

/// Smith normal form `left · m · right = diag(factors, 0, …)`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Full diagonal of length min(rows, cols): d1 | d2 | …, zeros last.
    pub diagonal: Vec<BigInt>,
    /// Nonzero invariant factors.
    pub factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        // Pivot: smallest nonzero absolute value in the trailing block.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    let v = a.get(r, c);
                    if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                break;
            };
            a.swap_rows(t, pr);
            left.swap_rows(t, pr);
            a.swap_cols(t, pc);
            right.swap_cols(t, pc);

            let mut clean = true;
            for r in t + 1..rows {
                let q = a.get(r, t).div_floor(a.get(t, t));
                if !q.is_zero() {
                    a.add_row(r, t, &-&q);
                    left.add_row(r, t, &-&q);
                }
                if !a.get(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                let q = a.get(t, c).div_floor(a.get(t, t));
                if !q.is_zero() {
                    a.add_col(c, t, &-&q);
                    right.add_col(c, t, &-&q);
                }
                if !a.get(t, c).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let mut bad_row = None;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !a.get(r, c).is_multiple_of(a.get(t, t)) {
                        bad_row = Some(r);
                        break 'scan;
                    }
                }
            }
            match bad_row {
                Some(r) => {
                    a.add_row(t, r, &BigInt::one());
                    left.add_row(t, r, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    let diagonal: Vec<BigInt> = (0..steps).map(|i| a.get(i, i).clone()).collect();
    let factors = diagonal.iter().filter(|d| !d.is_zero()).cloned().collect();
    Smith { diagonal, factors, left, right }
}

/// Prime factorization by trial division, primes strictly increasing.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::Domain("factorize needs a positive integer".into()));
    }
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows).unwrap();
        let s = smith_normal_form(&m);
        let d = s.left.mul(&m).mul(&s.right);
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let want = if r == c { s.diagonal[r].clone() } else { BigInt::zero() };
                assert_eq!(d.get(r, c), &want);
            }
        }
        s.diagonal.iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(diag_of(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(diag_of(&[vec![4, 6, 0], vec![0, 0, 10]]), vec![2, 10]);
    }

    #[test]
    fn transforms_are_unimodular() {
        let m = IntMatrix::from_rows(&[vec![3, 5, 7], vec![2, 4, 6], vec![1, 1, 2]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.left.det().abs(), BigInt::one());
        assert_eq!(s.right.det().abs(), BigInt::one());
        assert_eq!(m.det(), BigInt::from(2));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1).unwrap(), vec![]);
        assert_eq!(factorize(2310).unwrap(), vec![(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)]);
        assert!(factorize(0).is_err());
    }
}
