//! Exact linear algebra over the integers and rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination. Every intermediate
//! entry is a minor of the input, so for the `{-1, 0, 1}` matrices of small
//! graphs the elimination runs in checked `i128`; on overflow it restarts with
//! arbitrary-precision integers. Kernels are read off the reduced row echelon
//! form over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LinalgError;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::Dimension {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    /// Row-major entries.
    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut work: Vec<i128> = self.data.iter().map(|&x| i128::from(x)).collect();
        match bareiss_rank_i128(&mut work, self.rows, self.cols) {
            Some(r) => r,
            None => bareiss_rank_big(self.data.iter().map(|&x| BigInt::from(x)).collect(), self.rows, self.cols),
        }
    }

    /// `M·x` with exact integer arithmetic.
    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::Dimension {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(&a, _)| a != 0)
                    .map(|(&a, b)| b * a)
                    .sum()
            })
            .collect())
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }
}

/// Dense row-major matrix of exact rationals (always in reduced form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::Dimension {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::Dimension {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    // Each row scaled by the lcm of its denominators; rank is unchanged.
    fn integer_rows(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.data.len());
        for r in 0..self.rows {
            let row = self.row(r);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            out.extend(row.iter().map(|q| q.numer() * (&l / q.denom())));
        }
        out
    }
}

impl From<&IntMatrix> for RationalMatrix {
    fn from(m: &IntMatrix) -> Self {
        m.to_rational()
    }
}

/// Exact `(rank, nullity)` with `nullity = cols - rank`.
pub fn rank_nullity(m: &RationalMatrix) -> (usize, usize) {
    let ints = m.integer_rows();
    let small: Option<Vec<i128>> = ints.iter().map(ToPrimitive::to_i128).collect();
    let rank = small
        .and_then(|mut w| bareiss_rank_i128(&mut w, m.rows, m.cols))
        .unwrap_or_else(|| bareiss_rank_big(ints, m.rows, m.cols));
    (rank, m.cols - rank)
}

// Pivot: largest absolute value in the column, lowest row index on ties.
fn pivot_row<T, F>(a: &[T], rows: usize, cols: usize, from: usize, c: usize, abs_gt: F) -> Option<usize>
where
    F: Fn(&T, &T) -> bool,
    T: Zero,
{
    let mut best: Option<usize> = None;
    for r in from..rows {
        let x = &a[r * cols + c];
        if x.is_zero() {
            continue;
        }
        match best {
            Some(b) if !abs_gt(x, &a[b * cols + c]) => {}
            _ => best = Some(r),
        }
    }
    best
}

fn swap_rows<T>(a: &mut [T], cols: usize, i: usize, j: usize) {
    if i != j {
        for c in 0..cols {
            a.swap(i * cols + c, j * cols + c);
        }
    }
}

/// Fraction-free elimination in checked `i128`; `None` on overflow.
fn bareiss_rank_i128(a: &mut [i128], rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pivot_row(a, rows, cols, r, c, |x, y| x.unsigned_abs() > y.unsigned_abs()) else {
            continue;
        };
        swap_rows(a, cols, r, p);
        let piv = a[r * cols + c];
        for i in r + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let t = piv
                    .checked_mul(a[i * cols + j])?
                    .checked_sub(lead.checked_mul(a[r * cols + j])?)?;
                debug_assert_eq!(t % prev, 0);
                a[i * cols + j] = t / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pivot_row(&a, rows, cols, r, c, |x: &BigInt, y: &BigInt| x.abs() > y.abs()) else {
            continue;
        };
        swap_rows(&mut a, cols, r, p);
        let piv = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let t = &piv * &a[i * cols + j] - &lead * &a[r * cols + j];
                debug_assert!((&t % &prev).is_zero());
                a[i * cols + j] = t / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Exact basis of a kernel, with fullness and integrality flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    dimension: usize,
    vectors: Vec<Vec<BigRational>>,
    is_full: bool,
    is_integer: bool,
}

impl KernelBasis {
    /// Wraps vectors of length `dimension`. Independence and kernel membership
    /// are the caller's responsibility.
    pub fn new(dimension: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dimension) {
            return Err(LinalgError::Dimension {
                expected: dimension,
                got: v.len(),
            });
        }
        let is_full = vectors.iter().all(|v| v.iter().all(|x| !x.is_zero()));
        let is_integer = vectors.iter().flatten().all(BigRational::is_integer);
        Ok(KernelBasis {
            dimension,
            vectors,
            is_full,
            is_integer,
        })
    }

    pub fn from_integer_vectors(dimension: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        Self::new(
            dimension,
            vectors
                .into_iter()
                .map(|v| v.into_iter().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    /// Length of each vector (the matrix column count).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    /// Every vector is nowhere-zero.
    pub fn is_full(&self) -> bool {
        self.is_full
    }

    pub fn is_integer(&self) -> bool {
        self.is_integer
    }

    /// Coordinates where some basis vector is nonzero (the support of the span).
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.dimension];
        for v in &self.vectors {
            for (flag, x) in s.iter_mut().zip(v) {
                *flag |= !x.is_zero();
            }
        }
        s
    }

    /// Each vector scaled to coprime integers with its first nonzero entry positive.
    pub fn integer_vectors(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| primitive_integer(v)).collect()
    }
}

/// Scales a rational vector to coprime integers, first nonzero entry positive.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    normalize_integer(ints)
}

fn normalize_integer(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negative = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    for x in &mut v {
        *x = &*x / &g;
        if negative {
            *x = -&*x;
        }
    }
    v
}

/// Reduced row echelon form; returns pivot columns.
fn rref(m: &RationalMatrix) -> (Vec<BigRational>, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, cols, r, p);
        let inv = a[r * cols + c].recip();
        for j in c..cols {
            a[r * cols + j] = &a[r * cols + j] * &inv;
        }
        for i in 0..rows {
            if i == r || a[i * cols + c].is_zero() {
                continue;
            }
            let f = a[i * cols + c].clone();
            for j in c..cols {
                let t = &f * &a[r * cols + j];
                a[i * cols + j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Exact kernel basis: one vector per free column of the reduced echelon
/// form, scaled to coprime integers with the first nonzero entry positive.
pub fn kernel_basis(m: &RationalMatrix) -> KernelBasis {
    let cols = m.cols;
    let (reduced, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<BigRational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -reduced[row * cols + f].clone();
            }
            primitive_integer(&x)
                .into_iter()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    for x in &vectors {
        let image = m.mul_vec(x).expect("dimensions agree");
        assert!(image.iter().all(Zero::is_zero), "kernel vector fails A·x = 0");
    }
    KernelBasis::new(cols, vectors).expect("dimensions agree")
}

/// Replaces a core kernel basis by one of the same span whose vectors are all
/// nowhere-zero integer vectors.
///
/// Repeatedly picks the lowest-index vector with a zero, its lowest zero
/// coordinate `i`, and the lowest-index donor `k` that is nonzero at `i`, then
/// adds `α·x_k` with `α = 1 + max ⌊|x_ℓ(j)| / |x_k(j)|⌋` over the support of
/// `x_k`. That addition keeps every nonzero coordinate nonzero and fills `i`,
/// so the zero count strictly drops. Rational input is first scaled to
/// primitive integer vectors.
pub fn fullify_basis(basis: &KernelBasis) -> Result<KernelBasis, LinalgError> {
    if let Some(missing) = basis.support().iter().position(|&s| !s) {
        return Err(LinalgError::NotCoreKernel(missing));
    }
    let mut xs = basis.integer_vectors();
    while let Some((l, i)) = xs
        .iter()
        .enumerate()
        .find_map(|(l, x)| x.iter().position(Zero::is_zero).map(|i| (l, i)))
    {
        let k = (0..xs.len())
            .find(|&k| !xs[k][i].is_zero())
            .expect("support covers every coordinate");
        let alpha = xs[k]
            .iter()
            .zip(&xs[l])
            .filter(|(d, _)| !d.is_zero())
            .map(|(d, x)| x.abs() / d.abs())
            .max()
            .expect("donor has a nonzero entry")
            + 1;
        let donor = xs[k].clone();
        for (x, d) in xs[l].iter_mut().zip(&donor) {
            *x += &alpha * d;
        }
    }
    KernelBasis::from_integer_vectors(basis.dimension, xs)
}

/// The unique kernel vector of a nullity-one basis, as coprime integers with
/// the first nonzero entry positive.
pub fn canonical_eigenvector(basis: &KernelBasis) -> Result<Vec<BigInt>, LinalgError> {
    match basis.vectors() {
        [v] => Ok(primitive_integer(v)),
        other => Err(LinalgError::NullityNotOne(other.len())),
    }
}

/// Whether two vector families span the same subspace.
pub fn same_span(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> bool {
    let stacked = |rows: Vec<Vec<BigRational>>| match RationalMatrix::from_rows(rows) {
        Ok(m) if m.rows() > 0 => rank_nullity(&m).0,
        _ => 0,
    };
    let ra = stacked(a.to_vec());
    let rb = stacked(b.to_vec());
    let both = stacked(a.iter().chain(b).cloned().collect());
    ra == rb && ra == both
}
