//! Exact dense linear algebra over prime fields `F_p` and the rationals.
//!
//! Every scalar is either a reduced residue modulo a prime or an arbitrary
//! precision rational; there is no floating point anywhere. Matrices are
//! stored dense in row-major order and may have zero rows or columns (empty
//! shapes show up constantly as vertex spaces of dimension zero).

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use std::fmt;

use crate::error::{Error, Result};

/// Ground field: `F_p` for a prime `p`, or `Q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Field {
    Prime(u64),
    Rational,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Modular exponentiation, used for inverses via Fermat.
fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl Field {
    /// Constructs `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
            Field::Rational => Scalar::Rat(BigRational::from(BigInt::from(n))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((*x as u128 * *y as u128 % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers only invert pivots).
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero in F_{p}");
                Scalar::Fp(pow_mod(*x, p - 2, *p))
            }
            (Field::Rational, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero in Q");
                Scalar::Rat(x.recip())
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Uniform random scalar; over `Q` a small integer, which is all the
    /// sampled surveys need.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            Field::Rational => self.from_int(rng.gen_range(-4..=4)),
        }
    }

    /// All elements of `F_p`, in residue order. Errors over `Q`.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Ok((0..*p).map(Scalar::Fp).collect()),
            Field::Rational => Err(Error::ExhaustiveOverInfiniteField),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// One exact field element. `Fp` values are always reduced to `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Rat(x) => write!(f, "{x}"),
        }
    }
}

/// Dense row-major matrix over a fixed field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Builds from integer data in row-major order, reducing into the field.
    pub fn from_int_rows(field: Field, rows: usize, cols: usize, data: &[i64]) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entry count must match shape");
        Matrix::from_fn(field, rows, cols, |i, j| field.from_int(data[i * cols + j]))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.neg(self.get(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Horizontal concatenation; all parts must share row count and field.
    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let rows = parts[0].rows;
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        for m in parts {
            assert_eq!(m.rows, rows);
            assert_eq!(m.field, field);
        }
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let cols = parts[0].cols;
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        for m in parts {
            assert_eq!(m.cols, cols);
            assert_eq!(m.field, field);
        }
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(off + i, j, m.get(i, j).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn block_diag(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            assert_eq!(m.field, field);
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(ro + i, co + j, m.get(i, j).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    /// Contiguous row block `[lo, hi)`.
    pub fn row_block(&self, lo: usize, hi: usize) -> Matrix {
        Matrix::from_fn(self.field, hi - lo, self.cols, |i, j| {
            self.get(lo + i, j).clone()
        })
    }

    /// The unique reduced row echelon form together with pivot columns.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let v = f.mul(&inv, m.get(row, j));
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    /// Rank by forward elimination with an early exit once the rank is
    /// saturated; cheaper than `rref` for pure rank questions.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.clone();
        let cap = self.rows.min(self.cols);
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == cap {
                break;
            }
            let pivot_row = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for j in col..m.cols {
                    let a = m.get(rank, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(rank, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(rank, col));
            for r in (rank + 1)..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = f.mul(&inv, m.get(r, col));
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn has_full_column_rank(&self) -> bool {
        self.cols <= self.rows && self.rank() == self.cols
    }

    /// Rank together with a kernel basis; the two always satisfy
    /// `rank + kernel columns = cols`.
    pub fn rank_and_kernel(&self) -> (usize, Matrix) {
        let kernel = self.kernel_basis();
        (self.cols - kernel.cols(), kernel)
    }

    /// Basis of the null space, one column per free variable. Over `Q` the
    /// columns are cleared to primitive integer vectors so that downstream
    /// module constructions stay integral.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { mat, pivots } = self.rref();
        let n = self.cols;
        let is_pivot = {
            let mut v = vec![false; n];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..n).filter(|j| !is_pivot[*j]).collect();
        let mut out = Matrix::zero(self.field, n, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (row, &pc) in pivots.iter().enumerate() {
                let c = mat.get(row, fc);
                if !c.is_zero() {
                    out.set(pc, k, self.field.neg(c));
                }
            }
        }
        if self.field == Field::Rational {
            out = out.clear_denominators_per_column();
        }
        out
    }

    /// Solves `A X = B` exactly; `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::ShapeMismatch {
                context: "solve",
                left: (self.rows, self.cols),
                right: (b.rows, b.cols),
            });
        }
        let aug = Matrix::hstack(&[self, b]);
        let Rref { mat, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zero(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, mat.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(x)) => {
                if self.mul(&x) == id {
                    Some(x)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Canonical basis of the column space: RREF the transpose and keep the
    /// nonzero rows, transposed back to columns.
    pub fn column_space_basis(&self) -> Matrix {
        let rr = self.transpose().rref();
        let rank = rr.rank();
        rr.mat.row_block(0, rank).transpose()
    }

    /// Canonical row-space basis (nonzero rows of the RREF).
    pub fn row_space_basis(&self) -> Matrix {
        let rr = self.rref();
        let rank = rr.rank();
        rr.mat.row_block(0, rank)
    }

    fn clear_denominators_per_column(&self) -> Matrix {
        let mut out = self.clone();
        for j in 0..self.cols {
            let mut lcm = BigInt::one();
            for i in 0..self.rows {
                if let Scalar::Rat(x) = self.get(i, j) {
                    if !x.is_zero() {
                        lcm = num::integer::lcm(lcm, x.denom().clone());
                    }
                }
            }
            let mut gcd = BigInt::zero();
            let mut col_ints = Vec::with_capacity(self.rows);
            for i in 0..self.rows {
                if let Scalar::Rat(x) = self.get(i, j) {
                    let v = (x * BigRational::from(lcm.clone())).to_integer();
                    gcd = num::integer::gcd(gcd, v.clone());
                    col_ints.push(v);
                } else {
                    unreachable!("rational matrix expected");
                }
            }
            if gcd.is_zero() {
                gcd = BigInt::one();
            }
            for (i, v) in col_ints.into_iter().enumerate() {
                out.set(i, j, Scalar::Rat(BigRational::from(v / gcd.clone())));
            }
        }
        out
    }
}

/// Reduces an integer tuple into the field.
pub fn scalar_vector(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_int(x)).collect()
}

/// Projection `k^n -> k^(n-s)` onto the canonical complement coordinates of
/// the row space of `span`: the quotient is coordinatized on the non-pivot
/// columns of the RREF. `q.mul(v)` gives the class of `v` and the rows of
/// `span` map to zero. Over `Q` the rows are cleared to integer vectors
/// (a basis change of the quotient).
pub fn quotient_projection(span: &Matrix) -> Matrix {
    let field = span.field();
    let n = span.cols();
    let Rref { mat, pivots } = span.rref();
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let nonpivots: Vec<usize> = (0..n).filter(|j| !is_pivot[*j]).collect();
    let mut q = Matrix::zero(field, nonpivots.len(), n);
    for (t, &nt) in nonpivots.iter().enumerate() {
        q.set(t, nt, field.one());
        for (row, &pc) in pivots.iter().enumerate() {
            let c = mat.get(row, nt);
            if !c.is_zero() {
                q.set(t, pc, field.neg(c));
            }
        }
    }
    if field == Field::Rational {
        q = q.transpose().clear_denominators_per_column().transpose();
    }
    q
}

/// Selection matrix `k^(n-s) -> k^n` sending the `t`-th quotient coordinate
/// to the `t`-th non-pivot unit vector; a section of [`quotient_projection`].
pub fn quotient_section(span: &Matrix) -> Matrix {
    let field = span.field();
    let n = span.cols();
    let pivots = span.rref().pivots;
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let nonpivots: Vec<usize> = (0..n).filter(|j| !is_pivot[*j]).collect();
    let mut s = Matrix::zero(field, n, nonpivots.len());
    for (t, &nt) in nonpivots.iter().enumerate() {
        s.set(nt, t, field.one());
    }
    s
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "] ({}x{} over {})", self.rows, self.cols, self.field)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn identity_rank_and_kernel() {
        let id = Matrix::identity(f5(), 3);
        let (rank, kernel) = id.rank_and_kernel();
        assert_eq!(rank, 3);
        assert_eq!(kernel.cols(), 0);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let z = Matrix::zero(f5(), 2, 4);
        let (rank, k) = z.rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(k.cols(), 4);
        assert!(z.mul(&k).is_zero());
    }

    /// Brute-force rank oracle: largest size of a square submatrix with
    /// nonzero determinant (Laplace expansion, independent of elimination).
    fn det_i64_mod(m: &[Vec<u64>], p: u64) -> u64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut acc: i128 = 0;
        for (j, head) in m[0].iter().enumerate() {
            let minor: Vec<Vec<u64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign: i128 = if j % 2 == 0 { 1 } else { -1 };
            acc += sign * (*head as i128) * (det_i64_mod(&minor, p) as i128);
            acc = acc.rem_euclid(p as i128);
        }
        acc as u64
    }

    fn oracle_rank(m: &[Vec<u64>], p: u64) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        for size in (1..=rows.min(cols)).rev() {
            let row_sets = subsets(rows, size);
            let col_sets = subsets(cols, size);
            for rs in &row_sets {
                for cs in &col_sets {
                    let sub: Vec<Vec<u64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| m[i][j]).collect())
                        .collect();
                    if det_i64_mod(&sub, p) != 0 {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn rank_agrees_with_minor_expansion_over_f7() {
        let f = Field::prime(7).unwrap();
        let mut state = 0x2545F4914F6CDD1Du64;
        for _ in 0..20 {
            let mut raw = vec![vec![0u64; 4]; 4];
            let mut data = Vec::new();
            for row in raw.iter_mut() {
                for v in row.iter_mut() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    *v = (state >> 33) % 7;
                    data.push(*v as i64);
                }
            }
            let m = Matrix::from_int_rows(f, 4, 4, &data);
            assert_eq!(m.rank(), oracle_rank(&raw, 7));
        }
    }

    #[test]
    fn rref_hand_example_over_q() {
        let q = Field::Rational;
        let m = Matrix::from_int_rows(q, 2, 2, &[0, 1, 0, 2]);
        let rr = m.rref();
        let expect = Matrix::from_int_rows(q, 2, 2, &[0, 1, 0, 0]);
        assert_eq!(rr.mat, expect);
        assert_eq!(rr.pivots, vec![1]);

        let id = Matrix::identity(q, 4);
        assert_eq!(id.rref().mat, id);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let f = f5();
        let id = Matrix::identity(f, 3);
        let b = Matrix::from_int_rows(f, 3, 1, &[1, 2, 3]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let z = Matrix::zero(f, 2, 2);
        let nz = Matrix::from_int_rows(f, 2, 1, &[1, 0]);
        assert!(z.solve(&nz).unwrap().is_none());
    }

    #[test]
    fn solve_constructed_system_has_zero_residual() {
        let f = f5();
        let a = Matrix::from_int_rows(f, 3, 2, &[1, 2, 3, 4, 0, 1]);
        let x0 = Matrix::from_int_rows(f, 2, 2, &[2, 1, 4, 3]);
        let b = a.mul(&x0);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn solve_shape_mismatch_is_an_error() {
        let f = f5();
        let a = Matrix::zero(f, 2, 2);
        let b = Matrix::zero(f, 3, 1);
        assert!(a.solve(&b).is_err());
    }

    #[test]
    fn quotient_projection_kills_span() {
        let f = f5();
        let span = Matrix::from_int_rows(f, 2, 4, &[1, 0, 2, 1, 0, 1, 3, 0]);
        let q = quotient_projection(&span);
        assert_eq!(q.rows(), 2);
        assert!(q.mul(&span.transpose()).is_zero());
        let s = quotient_section(&span);
        assert_eq!(q.mul(&s), Matrix::identity(f, 2));
    }

    #[test]
    fn empty_shapes_are_consistent() {
        let f = f5();
        let a = Matrix::zero(f, 0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().cols(), 3);
        let b = Matrix::zero(f, 3, 0);
        assert_eq!(b.kernel_basis().cols(), 0);
        let prod = b.mul(&Matrix::zero(f, 0, 2));
        assert!(prod.is_zero());
        assert_eq!(prod.rows(), 3);
    }

    #[test]
    fn rational_kernel_is_integral() {
        let q = Field::Rational;
        let m = Matrix::from_int_rows(q, 2, 3, &[2, 4, 6, 1, 3, 5]);
        let k = m.kernel_basis();
        assert!(m.mul(&k).is_zero());
        for i in 0..k.rows() {
            for j in 0..k.cols() {
                if let Scalar::Rat(x) = k.get(i, j) {
                    assert!(x.denom().is_one(), "kernel entry not integral: {x}");
                }
            }
        }
    }

    fn arb_matrix(field: Field, max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c)
                .prop_map(move |data| Matrix::from_int_rows(field, r, c, &data))
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in arb_matrix(Field::Prime(5), 5)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix(Field::Prime(3), 5)) {
            let r1 = m.rref();
            let r2 = r1.mat.rref();
            prop_assert_eq!(&r1.mat, &r2.mat);
            prop_assert_eq!(r1.pivots, r2.pivots);
        }

        #[test]
        fn rref_preserves_row_space(m in arb_matrix(Field::Prime(5), 4)) {
            let rr = m.rref();
            // Same row space iff each RREF row solves against the original rows.
            prop_assert_eq!(m.row_space_basis(), rr.mat.row_space_basis());
        }

        #[test]
        fn rank_and_kernel_are_complementary(m in arb_matrix(Field::Prime(7), 5)) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
            prop_assert_eq!(m.rref().rank(), m.rank());
        }

        #[test]
        fn solvable_iff_rank_of_augmented_matches(
            m in arb_matrix(Field::Prime(5), 4),
            data in proptest::collection::vec(-6i64..=6, 4),
        ) {
            let b = Matrix::from_int_rows(Field::Prime(5), m.rows(), 1, &data[..m.rows()]);
            let solvable = m.solve(&b).unwrap().is_some();
            let aug = Matrix::hstack(&[&m, &b]);
            prop_assert_eq!(solvable, m.rank() == aug.rank());
        }
    }
}
