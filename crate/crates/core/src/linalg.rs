//! Small exact matrices.
//!
//! Two kinds live here: `IntMat`, fixed-capacity integer matrices used for
//! Weyl-group elements acting on root coordinates (rank computed by
//! fraction-free Bareiss elimination, so everything stays in ℤ), and `GfMat`,
//! dense matrices over GF(2^k) used by the Chevalley matrix models.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2k::{Fel, GfField};

/// Maximum root-system rank handled by the integer matrices.
pub const MAX_RANK: usize = 8;

/// An n×n integer matrix, n ≤ 8, stored inline. Unused entries stay zero so
/// derived equality and hashing are well defined.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMat {
    pub n: usize,
    a: [[i64; MAX_RANK]; MAX_RANK],
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                write!(f, "{:3} ", self.a[i][j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMat {
    pub fn zero(n: usize) -> IntMat {
        assert!(n <= MAX_RANK);
        IntMat { n, a: [[0; MAX_RANK]; MAX_RANK] }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            m.a[i][i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        debug_assert!(i < self.n && j < self.n);
        self.a[i][j] = v;
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i][k];
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i][j] += v * rhs.a[k][j];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        let mut out = *self;
        for i in 0..self.n {
            for j in 0..self.n {
                out.a[i][j] -= rhs.a[i][j];
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            let mut acc = 0;
            for j in 0..n {
                acc += self.a[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat::identity(self.n)
    }

    /// Exact rank over ℚ by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = [[0i128; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self.a[i][j] as i128;
            }
        }
        let mut prev: i128 = 1;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            // pivot search
            let mut piv = None;
            for r in row..n {
                if a[r][col] != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            a.swap(row, p);
            for r in row + 1..n {
                for c in col + 1..n {
                    a[r][c] = (a[r][c] * a[row][col] - a[r][col] * a[row][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[row][col];
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }

    /// Determinant by Bareiss; exact.
    pub fn det(&self) -> i64 {
        let n = self.n;
        let mut a = [[0i128; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self.a[i][j] as i128;
            }
        }
        let mut prev: i128 = 1;
        let mut sign = 1i128;
        for col in 0..n {
            let mut piv = None;
            for r in col..n {
                if a[r][col] != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { return 0 };
            if p != col {
                a.swap(col, p);
                sign = -sign;
            }
            for r in col + 1..n {
                for c in col + 1..n {
                    a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[col][col];
        }
        (sign * prev) as i64
    }
}

/// Errors from GF(2^k) matrix routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    DimMismatch,
    Singular,
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::DimMismatch => write!(f, "matrix dimension mismatch"),
            MatError::Singular => write!(f, "matrix is singular"),
        }
    }
}

/// A dense m×m matrix over GF(2^k). The field is passed to each operation;
/// matrices built over different fields must not be mixed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfMat {
    pub m: usize,
    e: Vec<Fel>,
}

impl fmt::Debug for GfMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfMat {}x{} [", self.m, self.m)?;
        for i in 0..self.m {
            write!(f, "  ")?;
            for j in 0..self.m {
                write!(f, "{:2} ", self.e[i * self.m + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl GfMat {
    pub fn zero(m: usize) -> GfMat {
        GfMat { m, e: vec![0; m * m] }
    }

    pub fn identity(m: usize) -> GfMat {
        let mut g = GfMat::zero(m);
        for i in 0..m {
            g.e[i * m + i] = 1;
        }
        g
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fel {
        self.e[i * self.m + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fel) {
        self.e[i * self.m + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        let m = self.m;
        self.e.iter().enumerate().all(|(idx, &v)| {
            let (i, j) = (idx / m, idx % m);
            v == u16::from(i == j)
        })
    }

    pub fn transpose(&self) -> GfMat {
        let m = self.m;
        let mut out = GfMat::zero(m);
        for i in 0..m {
            for j in 0..m {
                out.e[j * m + i] = self.e[i * m + j];
            }
        }
        out
    }

    pub fn add(&self, rhs: &GfMat) -> GfMat {
        assert_eq!(self.m, rhs.m);
        let mut out = self.clone();
        for (a, b) in out.e.iter_mut().zip(rhs.e.iter()) {
            *a ^= *b;
        }
        out
    }

    pub fn mul(&self, rhs: &GfMat, f: &GfField) -> GfMat {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        let m = self.m;
        let mut out = GfMat::zero(m);
        for i in 0..m {
            for k in 0..m {
                let v = self.e[i * m + k];
                if v == 0 {
                    continue;
                }
                if v == 1 {
                    for j in 0..m {
                        out.e[i * m + j] ^= rhs.e[k * m + j];
                    }
                } else {
                    for j in 0..m {
                        out.e[i * m + j] ^= f.mul(v, rhs.e[k * m + j]);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Fel], f: &GfField) -> Vec<Fel> {
        let m = self.m;
        let mut out = vec![0; m];
        for i in 0..m {
            let mut acc = 0;
            for j in 0..m {
                acc ^= f.mul(self.e[i * m + j], v[j]);
            }
            out[i] = acc;
        }
        out
    }

    pub fn pow(&self, mut n: usize, f: &GfField) -> GfMat {
        let mut base = self.clone();
        let mut acc = GfMat::identity(self.m);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            n >>= 1;
        }
        acc
    }

    pub fn rank(&self, f: &GfField) -> usize {
        let mut a = self.clone();
        let m = self.m;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m {
            let mut piv = None;
            for r in row..m {
                if a.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            a.swap_rows(row, p);
            let inv = f.inv(a.get(row, col)).unwrap();
            for r in row + 1..m {
                let factor = f.mul(a.get(r, col), inv);
                if factor != 0 {
                    for c in col..m {
                        let v = f.mul(factor, a.get(row, c));
                        a.set(r, c, a.get(r, c) ^ v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        let m = self.m;
        for c in 0..m {
            self.e.swap(r1 * m + c, r2 * m + c);
        }
    }

    /// Basis of the right nullspace {v : Av = 0}.
    pub fn nullspace(&self, f: &GfField) -> Vec<Vec<Fel>> {
        let m = self.m;
        let mut a = self.clone();
        // reduced row echelon form
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let mut piv = None;
            for r in row..m {
                if a.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            a.swap_rows(row, p);
            let inv = f.inv(a.get(row, col)).unwrap();
            for c in col..m {
                a.set(row, c, f.mul(a.get(row, c), inv));
            }
            for r in 0..m {
                if r != row && a.get(r, col) != 0 {
                    let factor = a.get(r, col);
                    for c in col..m {
                        let v = f.mul(factor, a.get(row, c));
                        a.set(r, c, a.get(r, c) ^ v);
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == m {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..m {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0 as Fel; m];
            v[free] = 1;
            for &(r, c) in &pivots {
                // x_c = sum over free columns of a[r][free] * x_free
                v[c] = a.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self, f: &GfField) -> Result<GfMat, MatError> {
        let m = self.m;
        let mut a = self.clone();
        let mut inv = GfMat::identity(m);
        for col in 0..m {
            let mut piv = None;
            for r in col..m {
                if a.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { return Err(MatError::Singular) };
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pi = f.inv(a.get(col, col)).unwrap();
            for c in 0..m {
                a.set(col, c, f.mul(a.get(col, c), pi));
                inv.set(col, c, f.mul(inv.get(col, c), pi));
            }
            for r in 0..m {
                if r != col && a.get(r, col) != 0 {
                    let factor = a.get(r, col);
                    for c in 0..m {
                        let v = f.mul(factor, a.get(col, c));
                        a.set(r, c, a.get(r, c) ^ v);
                        let v = f.mul(factor, inv.get(col, c));
                        inv.set(r, c, inv.get(r, c) ^ v);
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn det(&self, f: &GfField) -> Fel {
        let m = self.m;
        let mut a = self.clone();
        let mut det: Fel = 1;
        for col in 0..m {
            let mut piv = None;
            for r in col..m {
                if a.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { return 0 };
            a.swap_rows(col, p); // char 2: no sign to track
            det = f.mul(det, a.get(col, col));
            let pi = f.inv(a.get(col, col)).unwrap();
            for r in col + 1..m {
                let factor = f.mul(a.get(r, col), pi);
                if factor != 0 {
                    for c in col..m {
                        let v = f.mul(factor, a.get(col, c));
                        a.set(r, c, a.get(r, c) ^ v);
                    }
                }
            }
        }
        det
    }

    /// Packs the bit-planes of the matrix into a u128 key for hashing and
    /// census visited-sets. Requires k·m² ≤ 128.
    pub fn pack_key(&self, k: usize) -> u128 {
        let m = self.m;
        debug_assert!(k * m * m <= 128, "matrix too large to pack");
        let mut key = 0u128;
        let mut bit = 0;
        for plane in 0..k {
            for &v in &self.e {
                key |= (((v >> plane) & 1) as u128) << bit;
                bit += 1;
            }
        }
        key
    }

    /// Extracts, when this matrix is monomial (one nonzero entry per row and
    /// column), the permutation p with entry at (p(j), j), together with the
    /// nonzero values. Returns None otherwise.
    pub fn monomial_permutation(&self) -> Option<(Vec<usize>, Vec<Fel>)> {
        let m = self.m;
        let mut p = vec![usize::MAX; m];
        let mut vals = vec![0; m];
        let mut row_used = vec![false; m];
        for j in 0..m {
            for i in 0..m {
                if self.get(i, j) != 0 {
                    if p[j] != usize::MAX || row_used[i] {
                        return None;
                    }
                    p[j] = i;
                    vals[j] = self.get(i, j);
                    row_used[i] = true;
                }
            }
            if p[j] == usize::MAX {
                return None;
            }
        }
        Some((p, vals))
    }
}
