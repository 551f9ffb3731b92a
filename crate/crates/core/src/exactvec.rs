//! Exact vectors with half-integer coordinates, small integer matrices, and
//! the primitive-kernel computation behind the distinguished coweight.
//!
//! A [`HalfVec`] stores every coordinate doubled, so the half-integer vectors
//! showing up in the E and F families are plain `i64`s. Dot products of two
//! doubled vectors come out scaled by 4; [`HalfVec::dot_x4`] exposes that raw
//! value and [`HalfVec::dot_int`] checks the pairing is an actual integer
//! (root against coweight always is).

use std::fmt;

use thiserror::Error;

/// Vector in ambient coordinates, stored as twice its mathematical value.
///
/// Ordering is lexicographic on the doubled coordinates; that order is the
/// canonical sort used for root lists, witnesses, and report determinism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfVec {
    coords_x2: Vec<i64>,
}

impl HalfVec {
    /// Wraps doubled coordinates directly.
    pub fn from_x2(coords_x2: Vec<i64>) -> Self {
        HalfVec { coords_x2 }
    }

    /// Builds from integer (undoubled) coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        HalfVec {
            coords_x2: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        HalfVec {
            coords_x2: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords_x2.len()
    }

    pub fn coords_x2(&self) -> &[i64] {
        &self.coords_x2
    }

    pub fn is_zero(&self) -> bool {
        self.coords_x2.iter().all(|&c| c == 0)
    }

    /// Dot product scaled by 4 (both operands are doubled).
    ///
    /// Panics on dimension mismatch: mixing ambient spaces is a programming
    /// error, not an input error.
    pub fn dot_x4(&self, other: &HalfVec) -> i64 {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dot product requires equal dimensions"
        );
        self.coords_x2
            .iter()
            .zip(&other.coords_x2)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Dot product as an exact integer; panics if the value is not integral.
    /// Root-coweight pairings always are.
    pub fn dot_int(&self, other: &HalfVec) -> i64 {
        let x4 = self.dot_x4(other);
        assert_eq!(x4 % 4, 0, "pairing is not an integer: {x4}/4");
        x4 / 4
    }

    pub fn add(&self, other: &HalfVec) -> HalfVec {
        assert_eq!(self.dim(), other.dim(), "sum requires equal dimensions");
        HalfVec {
            coords_x2: self
                .coords_x2
                .iter()
                .zip(&other.coords_x2)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> HalfVec {
        HalfVec {
            coords_x2: self.coords_x2.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> HalfVec {
        HalfVec {
            coords_x2: self.coords_x2.iter().map(|c| k * c).collect(),
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
            first = false;
        } else if c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if a != 1 {
            write!(f, "{a}")?;
        }
        write!(f, "e{}", i + 1)?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HalfVec {
    /// Renders in e-coordinates: `2e1 - e2`, or `1/2(e1 + 5e8)` when any
    /// coordinate is a proper half.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords_x2.iter().all(|c| c % 2 == 0) {
            let ints: Vec<i64> = self.coords_x2.iter().map(|c| c / 2).collect();
            write_terms(f, &ints)
        } else {
            write!(f, "1/2(")?;
            write_terms(f, &self.coords_x2)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for HalfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [x2 {:?}]", self.coords_x2)
    }
}

/// Dense row-major integer matrix. Row and column deletion take 1-based
/// indices because they mirror Dynkin node numbering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::new(r, c, rows.iter().flatten().copied().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based accessor.
    pub fn get(&self, r: usize, c: usize) -> i64 {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        assert!(r < self.rows, "row out of range");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Removes row `l` (1-based node index).
    pub fn delete_row(&self, l: usize) -> IntMatrix {
        assert!(l >= 1 && l <= self.rows, "row index out of range");
        let mut entries = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r + 1 != l {
                entries.extend_from_slice(self.row(r));
            }
        }
        IntMatrix::new(self.rows - 1, self.cols, entries)
    }

    /// Removes row `l` and column `l` (1-based node index).
    pub fn delete_row_col(&self, l: usize) -> IntMatrix {
        assert!(l >= 1 && l <= self.rows && l <= self.cols, "index out of range");
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r + 1 == l {
                continue;
            }
            for c in 0..self.cols {
                if c + 1 != l {
                    entries.push(self.get(r, c));
                }
            }
        }
        IntMatrix::new(self.rows - 1, self.cols - 1, entries)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("kernel computation needs an (n-1) x n matrix, got {rows} x {cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("kernel is not one-dimensional (matrix rank below {expected})")]
    NotOneDimensional { expected: usize },
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn det_bareiss(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| a[r][k] != 0);
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Primitive generator of the kernel of an (n-1) x n integer matrix of rank
/// n-1. The sign is whatever the minor expansion yields; callers needing a
/// normalization apply their own.
///
/// Uses the Laplace identity: the vector with j-th entry
/// (-1)^j * det(matrix without column j) is in the kernel, and it vanishes
/// identically exactly when the rank drops below n-1.
pub fn kernel_generator(m: &IntMatrix) -> Result<Vec<i64>, KernelError> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows + 1 != cols {
        return Err(KernelError::BadShape { rows, cols });
    }
    let mut v: Vec<i128> = Vec::with_capacity(cols);
    for skip in 0..cols {
        let minor: Vec<Vec<i128>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .filter(|&c| c != skip)
                    .map(|c| m.get(r, c) as i128)
                    .collect()
            })
            .collect();
        let d = det_bareiss(&minor);
        v.push(if skip % 2 == 0 { d } else { -d });
    }
    if v.iter().all(|&x| x == 0) {
        return Err(KernelError::NotOneDimensional { expected: rows });
    }
    let g = v.iter().fold(0i128, |acc, &x| gcd128(acc, x));
    Ok(v
        .iter()
        .map(|&x| i64::try_from(x / g).expect("kernel entry overflow"))
        .collect())
}

/// Exact rational, crate-internal: used for solving in the span of the simple
/// roots and for symplectic matrix ranks. Always kept reduced with a positive
/// denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Frac {
    pub num: i128,
    pub den: i128,
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        assert_ne!(den, 0, "zero denominator");
        let g = gcd128(num, den);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn int(n: i128) -> Self {
        Frac { num: n, den: 1 }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }

    pub fn div(self, o: Frac) -> Frac {
        assert!(!o.is_zero(), "division by zero");
        Frac::new(self.num * o.den, self.den * o.num)
    }

    /// The exact integer value, if it is one.
    pub fn as_int(self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    if a == 0 {
        1
    } else {
        a
    }
}
