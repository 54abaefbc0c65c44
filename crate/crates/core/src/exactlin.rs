//! Exact rational linear algebra: matrices, reduced row echelon form,
//! nullspaces and a small lattice of subspaces kept in canonical form.
//!
//! Everything here works over `BigRational`; there is no floating point
//! anywhere in the crate. Subspaces always carry their reduced row echelon
//! basis, so two `Subspace` values compare equal exactly when they span the
//! same space.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (q > 0). Accepts an ASCII or Unicode minus sign.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim().replace('\u{2212}', "-");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text.as_str(), None),
    };
    let parse_int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    let n = parse_int(num)?;
    match den {
        None => Some(Rational::from_integer(n)),
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return None;
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `acc += factor * v`
pub fn axpy(acc: &mut [Rational], factor: &Rational, v: &[Rational]) {
    if factor.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += factor * x;
        }
    }
}

pub fn unit_vector(dim: usize, index: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[index] = Rational::one();
    v
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { rows: n, cols, entries })
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&v| rat(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination on row vectors, in place. Returns the pivot
/// columns; afterwards the first `pivots.len()` rows are the nonzero rows
/// of the reduced echelon form and the rest are zero.
fn reduce_rows(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut().skip(col) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (col..cols).filter(|&c| !rows[next][c].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                let delta = &factor * &pivot_row[c];
                row[c] -= delta;
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Reduced row echelon form with leftmost pivots.
pub fn rref(m: &Matrix) -> Rref {
    let mut rows = m.row_vecs();
    let pivots = reduce_rows(&mut rows, m.cols);
    let rank = pivots.len();
    let matrix = Matrix::from_rows(m.cols, rows).expect("row widths preserved");
    Rref { matrix, rank, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// The kernel `{x : m·x = 0}` as a canonical subspace of `ℚ^cols`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let mut rows: Vec<Vec<Rational>> =
        m.row_vecs().into_iter().filter(|r| !is_zero_vector(r)).collect();
    let pivots = reduce_rows(&mut rows, m.cols);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            v
        })
        .collect();
    Subspace::from_vectors_unchecked(m.cols, basis)
}

/// One solution of `m·x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, got: b.len() });
    }
    let mut rows: Vec<Vec<Rational>> = (0..m.rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = reduce_rows(&mut rows, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][m.cols].clone();
    }
    Ok(Some(x))
}

/// A linear subspace of `ℚ^n`, stored as its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    fn from_vectors_unchecked(ambient_dim: usize, mut rows: Vec<Vec<Rational>>) -> Self {
        rows.retain(|r| !is_zero_vector(r));
        let pivots = reduce_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        let basis = Matrix::from_rows(ambient_dim, rows).expect("row widths checked");
        Self { ambient_dim, basis, pivots }
    }

    pub fn span<I, V>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<Rational>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.into();
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.len() });
            }
            rows.push(v);
        }
        Ok(Self::from_vectors_unchecked(ambient_dim, rows))
    }

    /// Span of the listed basis vectors `e_i` (0-based indices).
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::from_vectors_unchecked(
            ambient_dim,
            indices.iter().map(|&i| unit_vector(ambient_dim, i)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: n });
        }
        Ok(())
    }

    /// Remainder of `v` after reduction against the echelon basis.
    fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = -w[p].clone();
                axpy(&mut w, &factor, self.basis.row(r));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(is_zero_vector(&self.residue(v)))
    }

    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        other.check_dim(self.ambient_dim)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        Ok((0..self.dim()).all(|r| is_zero_vector(&other.residue(self.basis.row(r)))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Self::from_vectors_unchecked(self.ambient_dim, rows))
    }

    pub fn same_as(&self, other: &Subspace) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(self == other)
    }

    /// Linear forms (as coefficient rows) vanishing on this subspace.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let mut forms = self.annihilator().basis_vectors();
        forms.extend(other.annihilator().basis_vectors());
        let m = Matrix::from_rows(self.ambient_dim, forms)?;
        Ok(nullspace(&m))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> Matrix {
        Matrix::from_i64(rows, cols, v).unwrap()
    }

    #[test]
    fn rref_identity_zero_and_proportional() {
        let r = rref(&Matrix::identity(3));
        assert_eq!(r.matrix, Matrix::identity(3));
        assert_eq!((r.rank, r.pivots.clone()), (3, vec![0, 1, 2]));

        let r = rref(&Matrix::zeros(2, 4));
        assert!(r.matrix.is_zero());
        assert_eq!((r.rank, r.pivots.len()), (0, 0));

        let r = rref(&m(2, 3, &[1, 2, 3, 2, 4, 6]));
        assert_eq!(r.matrix, m(2, 3, &[1, 2, 3, 0, 0, 0]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::identity(4)).is_zero());
        assert_eq!(nullspace(&Matrix::zeros(3, 3)), Subspace::full(3));

        let k = nullspace(&m(1, 3, &[1, 1, 0]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[rat(1), rat(-1), rat(0)]).unwrap());
        assert!(k.contains(&[rat(0), rat(0), rat(1)]).unwrap());
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m(1, 3, &[1, 1, 0]).mul_vec(&v).unwrap()));
        }
    }

    #[test]
    fn span_examples() {
        assert!(Subspace::span(3, Vec::<Vec<Rational>>::new()).unwrap().is_zero());
        let s = Subspace::span(2, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(1)]]);
        assert_eq!(s.unwrap(), Subspace::full(2));
        let s = Subspace::span(3, vec![vec![rat(1), rat(2), rat(0)], vec![rat(2), rat(4), rat(0)]]);
        assert_eq!(s.unwrap().dim(), 1);
    }

    #[test]
    fn lattice_operations() {
        let zero = Subspace::zero(3);
        let x = Subspace::coordinate(3, &[0]);
        let y = Subspace::coordinate(3, &[1]);
        assert!(zero.leq(&x).unwrap());
        assert!(x.contains(&[rat(2), rat(0), rat(0)]).unwrap());
        assert!(!x.contains(&[rat(2), rat(1), rat(0)]).unwrap());
        let xy = x.sum(&y).unwrap();
        assert_eq!(xy.dim(), 2);
        assert!(x.leq(&xy).unwrap() && !xy.leq(&x).unwrap());
        assert_eq!(xy.intersection(&Subspace::coordinate(3, &[1, 2])).unwrap(), y);
    }

    #[test]
    fn affine_solve() {
        let a = m(2, 3, &[1, 1, 0, 0, 1, 1]);
        let x = solve(&a, &[rat(2), rat(3)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![rat(2), rat(3)]);
        let b = m(2, 2, &[1, 1, 2, 2]);
        assert_eq!(solve(&b, &[rat(1), rat(3)]).unwrap(), None);
        assert!(solve(&b, &[rat(1)]).is_err());
    }

    #[test]
    fn mismatched_ambient_dimension_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert_eq!(a.leq(&b), Err(Error::DimensionMismatch { expected: 3, got: 2 }));
        assert!(a.sum(&b).is_err());
        assert!(a.contains(&[rat(1)]).is_err());
        assert!(a.same_as(&b).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-1/2"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("\u{2212}1/2"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("4/6"), Some(ratio(2, 3)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Matrix::from_i64(r, c, &v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(a in small_matrix()) {
            let once = rref(&a);
            let twice = rref(&once.matrix);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(rank(&a) + nullspace(&a).dim(), a.cols());
        }

        #[test]
        fn nullspace_rows_are_annihilated(a in small_matrix()) {
            for v in nullspace(&a).basis_vectors() {
                prop_assert!(is_zero_vector(&a.mul_vec(&v).unwrap()));
            }
        }

        #[test]
        fn span_ignores_order_and_scaling(
            vs in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..5),
            scales in proptest::collection::vec(1i64..=5, 5),
        ) {
            let original: Vec<Vec<Rational>> =
                vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
            let mut shuffled: Vec<Vec<Rational>> = original
                .iter()
                .zip(&scales)
                .map(|(v, &s)| v.iter().map(|x| x * ratio(-s, 3)).collect())
                .collect();
            shuffled.reverse();
            prop_assert_eq!(Subspace::span(4, original).unwrap(), Subspace::span(4, shuffled).unwrap());
        }
    }
}
