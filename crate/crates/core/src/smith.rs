//! Smith normal form of integer matrices.
//!
//! Elimination always pivots on a nonzero entry of smallest absolute value.
//! The reduction first runs on checked `i64` arithmetic and restarts on
//! unbounded integers as soon as an intermediate value overflows.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::IntegerMatrix;

/// Diagonal `d_1 | d_2 | … | d_r` followed by zeros; one entry per
/// `min(rows, cols)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diagonal[..self.rank]
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors()
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Rank of the free part of the cokernel `ℤ^rows / image`.
    pub fn cokernel_free_rank(&self) -> usize {
        self.rows - self.rank
    }

    /// Dimension of the kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank
    }

    pub fn has_zero_diagonal_entry(&self) -> bool {
        self.diagonal.iter().any(Zero::is_zero)
    }

    pub fn divisibility_chain_holds(&self) -> bool {
        let nonneg = self.diagonal.iter().all(|d| !Signed::is_negative(d));
        let zeros_trail = self.diagonal[self.rank..].iter().all(Zero::is_zero)
            && self.diagonal[..self.rank].iter().all(|d| !Zero::is_zero(d));
        let chain = self
            .invariant_factors()
            .windows(2)
            .all(|w| Zero::is_zero(&(&w[1] % &w[0])));
        nonneg && zeros_trail && chain
    }

    pub fn as_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(self.rows, self.cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

/// A Smith form together with unimodular `U`, `V` such that `U·A·V = D`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub form: SmithForm,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithDecomposition {
    /// Re-multiplies the recorded transforms and checks unimodularity.
    pub fn verify(&self, original: &IntegerMatrix) -> bool {
        let unimodular =
            |m: &IntegerMatrix| m.determinant().map(|d| d.abs().is_one()).unwrap_or(false);
        let product = &(&self.left * original) * &self.right;
        unimodular(&self.left)
            && unimodular(&self.right)
            && product == self.form.as_matrix()
            && self.form.divisibility_chain_holds()
    }
}

trait Scalar: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn divides(&self, other: &Self) -> bool;
    /// Quotient of the Euclidean division `self = q·d + r`, `|r| < |d|`.
    fn quotient(&self, d: &Self) -> Option<Self>;
    /// `self − q·x`.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn negate(&self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn divides(&self, other: &Self) -> bool {
        other.checked_rem(*self).is_none_or(|r| r == 0)
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        self.checked_div_euclid(*d)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn negate(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn divides(&self, other: &Self) -> bool {
        Zero::is_zero(self) && Zero::is_zero(other)
            || (!Zero::is_zero(self) && Zero::is_zero(&(other % self)))
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        Some(self.div_floor(d))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn negate(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Reduction<T> {
    a: Vec<Vec<T>>,
    left: Option<Vec<Vec<T>>>,
    right: Option<Vec<Vec<T>>>,
}

fn identity<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

impl<T: Scalar> Reduction<T> {
    fn rows(&self) -> usize {
        self.a.len()
    }

    fn cols(&self) -> usize {
        self.a.first().map_or(0, Vec::len)
    }

    /// row_dst −= q · row_src
    fn row_sub(&mut self, dst: usize, src: usize, q: &T) -> Option<()> {
        let support: Vec<usize> = (0..self.cols())
            .filter(|&c| !self.a[src][c].is_zero())
            .collect();
        for c in support {
            self.a[dst][c] = self.a[dst][c].sub_mul(q, &self.a[src][c])?;
        }
        if let Some(u) = self.left.as_mut() {
            let src_row = u[src].clone();
            for (d, s) in u[dst].iter_mut().zip(&src_row) {
                if !s.is_zero() {
                    *d = d.sub_mul(q, s)?;
                }
            }
        }
        Some(())
    }

    /// col_dst −= q · col_src
    fn col_sub(&mut self, dst: usize, src: usize, q: &T) -> Option<()> {
        for r in 0..self.rows() {
            if !self.a[r][src].is_zero() {
                self.a[r][dst] = self.a[r][dst].sub_mul(q, &self.a[r][src])?;
            }
        }
        if let Some(v) = self.right.as_mut() {
            for row in v.iter_mut() {
                if !row[src].is_zero() {
                    row[dst] = row[dst].sub_mul(q, &row[src])?;
                }
            }
        }
        Some(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = self.left.as_mut() {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in self.a.iter_mut() {
                row.swap(i, j);
            }
            if let Some(v) = self.right.as_mut() {
                for row in v.iter_mut() {
                    row.swap(i, j);
                }
            }
        }
    }

    fn negate_row(&mut self, r: usize) -> Option<()> {
        for x in self.a[r].iter_mut() {
            *x = x.negate()?;
        }
        if let Some(u) = self.left.as_mut() {
            for x in u[r].iter_mut() {
                *x = x.negate()?;
            }
        }
        Some(())
    }

    /// Smallest nonzero entry of the trailing submatrix, stopping at a unit.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows() {
            for c in t..self.cols() {
                let x = &self.a[r][c];
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    return Some((r, c));
                }
                if best.is_none_or(|(br, bc)| x.abs_lt(&self.a[br][bc])) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn run(&mut self) -> Option<usize> {
        let (rows, cols) = (self.rows(), self.cols());
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pr, pc)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                // clear column t below the pivot
                for r in t + 1..rows {
                    if !self.a[r][t].is_zero() {
                        let q = self.a[r][t].quotient(&self.a[t][t])?;
                        self.row_sub(r, t, &q)?;
                    }
                }
                // clear row t right of the pivot
                for c in t + 1..cols {
                    if !self.a[t][c].is_zero() {
                        let q = self.a[t][c].quotient(&self.a[t][t])?;
                        self.col_sub(c, t, &q)?;
                    }
                }
                // a nonzero remainder is smaller than the pivot: promote it
                let leftover_row = (t + 1..rows).find(|&r| !self.a[r][t].is_zero());
                let leftover_col = (t + 1..cols).find(|&c| !self.a[t][c].is_zero());
                match (leftover_row, leftover_col) {
                    (Some(r), _) => {
                        let r =
                            (t + 1..rows)
                                .filter(|&i| !self.a[i][t].is_zero())
                                .fold(r, |b, i| {
                                    if self.a[i][t].abs_lt(&self.a[b][t]) {
                                        i
                                    } else {
                                        b
                                    }
                                });
                        self.swap_rows(t, r);
                        continue;
                    }
                    (None, Some(c)) => {
                        let c =
                            (t + 1..cols)
                                .filter(|&j| !self.a[t][j].is_zero())
                                .fold(c, |b, j| {
                                    if self.a[t][j].abs_lt(&self.a[t][b]) {
                                        j
                                    } else {
                                        b
                                    }
                                });
                        self.swap_cols(t, c);
                        continue;
                    }
                    (None, None) => {}
                }
                if self.a[t][t].is_unit() {
                    break;
                }
                // enforce d_t | every remaining entry
                let offending = (t + 1..rows)
                    .find(|&r| (t + 1..cols).any(|c| !self.a[t][t].divides(&self.a[r][c])));
                match offending {
                    Some(r) => {
                        // row_t += row_r
                        let minus_one = T::one().negate()?;
                        self.row_sub(t, r, &minus_one)?;
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        Some(t)
    }
}

fn to_scalar_rows<T: Scalar>(
    m: &IntegerMatrix,
    conv: impl Fn(&BigInt) -> Option<T>,
) -> Option<Vec<Vec<T>>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(&conv).collect())
        .collect()
}

fn to_integer_matrix<T: Scalar>(rows: &[Vec<T>], n_rows: usize, n_cols: usize) -> IntegerMatrix {
    let entries = rows.iter().flatten().map(Scalar::to_big).collect();
    IntegerMatrix::new(n_rows, n_cols, entries).expect("consistent dimensions")
}

fn reduce<T: Scalar>(
    m: &IntegerMatrix,
    conv: impl Fn(&BigInt) -> Option<T>,
    transforms: bool,
) -> Option<(SmithForm, Option<(IntegerMatrix, IntegerMatrix)>)> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut red = Reduction {
        a: to_scalar_rows(m, conv)?,
        left: transforms.then(|| identity(rows)),
        right: transforms.then(|| identity(cols)),
    };
    let rank = red.run()?;
    let diagonal = (0..rows.min(cols)).map(|i| red.a[i][i].to_big()).collect();
    let form = SmithForm {
        rows,
        cols,
        diagonal,
        rank,
    };
    let mats = match (red.left, red.right) {
        (Some(u), Some(v)) => Some((
            to_integer_matrix(&u, rows, rows),
            to_integer_matrix(&v, cols, cols),
        )),
        _ => None,
    };
    Some((form, mats))
}

/// Smith normal form of `m` (no transforms recorded).
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    if let Some((form, _)) = reduce::<i64>(m, BigInt::to_i64, false) {
        return form;
    }
    reduce::<BigInt>(m, |x| Some(x.clone()), false)
        .expect("unbounded arithmetic cannot overflow")
        .0
}

/// Smith normal form with the unimodular transforms `U`, `V`.
pub fn smith_decomposition(m: &IntegerMatrix) -> SmithDecomposition {
    let result = reduce::<i64>(m, BigInt::to_i64, true)
        .or_else(|| reduce::<BigInt>(m, |x| Some(x.clone()), true))
        .expect("unbounded arithmetic cannot overflow");
    let (form, mats) = result;
    let (left, right) = mats.expect("transforms requested");
    SmithDecomposition { form, left, right }
}
