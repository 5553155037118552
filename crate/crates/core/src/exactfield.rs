//! Exact scalars over ℚ and GF(p), dense matrices over them, and the
//! mixed-radix tensor ordering shared by every multi-legged map in the crate.
//!
//! Basis vector `(i₁, …, i_k)` of `V₁ ⊗ … ⊗ V_k` has flat index
//! `((i₁·d₂ + i₂)·d₃ + …)·d_k + i_k`, i.e. the last factor varies fastest.
//! [`Matrix::kron`] follows the same convention, so `kron(M, N)` is the matrix
//! of `M ⊗ N` in that basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest supported prime modulus; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(Field, Field),
    #[error("{0} is not a prime modulus in 2..={MAX_PRIME}")]
    NotPrime(u64),
    #[error("cannot parse {text:?} as an element of {field}")]
    Parse { text: String, field: Field },
    #[error("unknown field {0:?} (expected \"Q\" or \"F<p>\")")]
    UnknownField(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimensions(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
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

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p <= MAX_PRIME && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num/den` as a field element; `den` must be nonzero (and invertible mod p).
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parses `"-3"`, `"5/6"` (rationals) or a decimal residue (prime fields;
    /// fractions are also accepted and reduced).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, FieldError> {
        let err = || FieldError::Parse {
            text: text.to_string(),
            field: self,
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err());
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |v: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((v % &m) + &m) % &m;
                    r.to_string().parse().expect("residue fits u64")
                };
                let n = Scalar::Prime {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Prime {
                    value: reduce(&den),
                    modulus: p,
                };
                n.checked_div(&d).map_err(|_| err())
            }
        }
    }

    /// All field elements in increasing residue order (prime fields only).
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|value| Scalar::Prime { value, modulus: p }).collect()),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix("GF"))
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| FieldError::UnknownField(s.to_string()))?;
        Field::prime(p)
    }
}

/// An exact field element tagged with its field.
///
/// The arithmetic operators panic when the operands live in different fields;
/// the `checked_*` methods report that as [`FieldError::Mismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::Mismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: (a * b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => {
                let e = num_integer::Integer::extended_gcd(&(*value as i64), &(*modulus as i64));
                Scalar::Prime {
                    value: e.x.rem_euclid(*modulus as i64) as u64,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic across fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Dimensions(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(FieldError::Mismatch(field, s.field()).into());
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Small-integer convenience constructor.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular integer rows")
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, field.one());
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    fn check_field(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch(self.field, other.field).into());
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::Dimensions(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::Dimensions(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimensions(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// `(M⊗N)[(i·r+k),(j·s+l)] = M[i,j]·N[k,l]` where `N` is `r×s`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.check_field(other)?;
        let (r, s) = (other.rows, other.cols);
        Ok(Matrix::from_fn(self.field, self.rows * r, self.cols * s, |row, col| {
            self.get(row / r, col / s) * other.get(row % r, col % s)
        }))
    }

    /// Row echelon form by exact Gaussian elimination; returns the reduced
    /// matrix and the pivot columns.
    fn echelon(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, pivots) = aug.echelon();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(MatrixError::Singular { rank, size: n });
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    pub fn pow(&self, exp: u32) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Ordered tensor factors with last-factor-fastest flat indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    factors: Vec<usize>,
}

impl TensorShape {
    pub fn new(factors: impl Into<Vec<usize>>) -> TensorShape {
        TensorShape {
            factors: factors.into(),
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.factors.len());
        multi.iter().zip(&self.factors).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }
}
