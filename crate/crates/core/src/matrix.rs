//! Dense square matrices over exact scalars or over `F[ζ]`, and the three
//! concrete involutions on `M_d`.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficient domain of a [`Matrix`].
pub trait Entry: Clone + PartialEq + fmt::Display + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    /// The involution of the coefficient ring used by conjugate-transpose.
    fn conj(&self) -> Self;
}

impl Entry for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn conj(&self) -> Self {
        Scalar::conj(self)
    }
}

impl Entry for CPoly {
    fn zero() -> Self {
        CPoly::zero()
    }
    fn one() -> Self {
        CPoly::one()
    }
    fn is_zero(&self) -> bool {
        CPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Scalar) -> Self {
        CPoly::scale(self, c)
    }
    fn conj(&self) -> Self {
        self.bar()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Involution {
    None,
    Transpose,
    Symplectic,
    ConjugateTranspose,
}

impl Involution {
    pub fn is_first_kind(self) -> bool {
        matches!(self, Involution::Transpose | Involution::Symplectic)
    }

    pub fn is_second_kind(self) -> bool {
        self == Involution::ConjugateTranspose
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::None => "none",
            Involution::Transpose => "transpose",
            Involution::Symplectic => "symplectic",
            Involution::ConjugateTranspose => "unitary",
        }
    }

    pub fn check_dimension(self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::DimensionTooSmall { d, min: 1 });
        }
        if self == Involution::Symplectic && d % 2 == 1 {
            return Err(Error::OddSymplectic(d));
        }
        Ok(())
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Involution {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Involution::None),
            "transpose" | "orthogonal" => Ok(Involution::Transpose),
            "symplectic" => Ok(Involution::Symplectic),
            "unitary" | "conjugate-transpose" => Ok(Involution::ConjugateTranspose),
            _ => Err(format!("unknown involution {s:?}")),
        }
    }
}

/// Row-major `d × d` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    d: usize,
    data: Vec<T>,
}

impl<T: Entry> Matrix<T> {
    pub fn zeros(d: usize) -> Self {
        Matrix {
            d,
            data: vec![T::zero(); d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        Matrix::scalar(d, T::one())
    }

    pub fn scalar(d: usize, c: T) -> Self {
        let mut m = Matrix::zeros(d);
        for i in 0..d {
            m.data[i * d + i] = c.clone();
        }
        m
    }

    /// Matrix unit `E_ij` (zero-based indices).
    pub fn unit(d: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(d);
        m.data[i * d + j] = T::one();
        m
    }

    pub fn from_fn(d: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                data.push(f(i, j));
            }
        }
        Matrix { d, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let d = rows.len();
        let mut data = Vec::with_capacity(d * d);
        for r in rows {
            if r.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix { d, data })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.d + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.d).map(|r| r.to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            d: self.d,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.d != o.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: o.d,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.zip(o, T::add))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.mul(o))
    }

    fn zip(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(self.d, o.d, "matrix dimension mismatch");
        Matrix {
            d: self.d,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, T::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, T::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.d, o.d, "matrix dimension mismatch");
        let d = self.d;
        let mut out = Matrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &o.data[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell: &mut T = &mut out.data[i * d + j];
                    *cell = cell.add(&a.mul(b));
                }
            }
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.d).fold(T::zero(), |acc, i| acc.add(&self.data[i * self.d + i]))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.d, |i, j| self.get(j, i).clone())
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn as_scalar_matrix(&self) -> Option<T> {
        let c = self.get(0, 0).clone();
        if self.sub(&Matrix::scalar(self.d, c.clone())).is_zero() {
            Some(c)
        } else {
            None
        }
    }

    /// Applies the involution; `None` acts as the identity.
    ///
    /// The symplectic star on `d = 2d₀` sends the block matrix
    /// `[[A, B], [C, D]]` to `[[Dᵗ, −Bᵗ], [−Cᵗ, Aᵗ]]`.
    pub fn star(&self, inv: Involution) -> Result<Self> {
        inv.check_dimension(self.d)?;
        Ok(match inv {
            Involution::None => self.clone(),
            Involution::Transpose => self.transpose(),
            Involution::ConjugateTranspose => self.transpose().map(T::conj),
            Involution::Symplectic => {
                let h = self.d / 2;
                Matrix::from_fn(self.d, |i, j| {
                    let (bi, bj) = (i / h, j / h);
                    // block (bi, bj) of the result is ± the transpose of block (1-bj, 1-bi)
                    let (si, sj) = (1 - bj, 1 - bi);
                    let src = self.get(si * h + (j % h), sj * h + (i % h));
                    if bi == bj {
                        src.clone()
                    } else {
                        src.neg()
                    }
                })
            }
        })
    }
}

impl Matrix<Scalar> {
    /// Entrywise embedding into `M_d(F[ζ])`.
    pub fn to_cpoly(&self) -> Matrix<CPoly> {
        self.map(|c| CPoly::constant(c.clone()))
    }
}

impl<T: Entry> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.data.chunks(self.d.max(1)).enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Entry> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Entry> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.d))?;
        for row in self.data.chunks(self.d.max(1)) {
            let strs: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            seq.serialize_element(&strs)?;
        }
        seq.end()
    }
}

impl FromStr for Matrix<Scalar> {
    type Err = Error;

    /// Parses the row-major text form `[[a,b],[c,d]]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err(lead, "matrix must be wrapped in [ ]"))?;
        let mut rows = Vec::new();
        let mut depth = 0usize;
        let mut start = None;
        for (k, ch) in inner.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = Some(k + 1);
                    }
                    depth += 1;
                }
                ']' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| err(lead + 1 + k, "unbalanced ]"))?;
                    if depth == 0 {
                        let from = start.take().unwrap();
                        let row = inner[from..k]
                            .split(',')
                            .map(|x| {
                                x.parse::<Scalar>().map_err(|e| match e {
                                    Error::Parse { pos, msg } => Error::Parse {
                                        pos: pos + lead + 1 + from,
                                        msg,
                                    },
                                    other => other,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        rows.push(row);
                    }
                }
                ',' | ' ' | '\t' | '\n' if depth == 0 => {}
                _ if depth == 0 => return Err(err(lead + 1 + k, "unexpected character between rows")),
                _ => {}
            }
        }
        if depth != 0 {
            return Err(err(s.len(), "unbalanced ["));
        }
        if rows.is_empty() {
            return Err(err(lead, "empty matrix"));
        }
        Matrix::from_rows(rows)
    }
}
