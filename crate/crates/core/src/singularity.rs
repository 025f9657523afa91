//! Singularities, weight systems and the elementary invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// A Brieskorn–Pham singularity `Σ x_i^{a_i} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalSingularity {
    exponents: Vec<u64>,
}

impl DiagonalSingularity {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::NoVariables);
        }
        if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::ExponentTooSmall(a));
        }
        Ok(DiagonalSingularity { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Complex dimension `m` of the hypersurface (number of variables minus one).
    pub fn dimension(&self) -> usize {
        self.exponents.len() - 1
    }

    /// μ = ∏ (a_i − 1).
    pub fn milnor_number(&self) -> BigInt {
        self.exponents
            .iter()
            .map(|&a| BigInt::from(a - 1))
            .product()
    }

    /// The Milnor number if it fits in a `u64`.
    pub fn milnor_number_u64(&self) -> Option<u64> {
        self.exponents
            .iter()
            .try_fold(1u64, |acc, &a| acc.checked_mul(a - 1))
    }

    /// Order `∏ a_i` of the diagonal symmetry group, if it fits in a `u64`.
    pub fn group_order(&self) -> Option<u64> {
        self.exponents
            .iter()
            .try_fold(1u64, |acc, &a| acc.checked_mul(a))
    }

    /// `Σ 1/a_i` as an exact rational.
    pub fn inverse_exponent_sum(&self) -> BigRational {
        self.exponents
            .iter()
            .map(|&a| BigRational::new(BigInt::one(), BigInt::from(a)))
            .sum()
    }

    pub fn to_matrix(&self) -> IntegerMatrix {
        let n = self.exponents.len();
        let mut m = IntegerMatrix::zeros(n, n);
        for (i, &a) in self.exponents.iter().enumerate() {
            m.set(i, i, BigInt::from(a));
        }
        m
    }

    /// `A_1(2k)`: the cDV point `x² + y² + z² + t^{2k}`.
    pub fn a1(k: u64) -> Result<Self> {
        DiagonalSingularity::new(vec![2, 2, 2, 2 * k])
    }
}

impl fmt::Display for DiagonalSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `w_A = Σ_k ∏_j x_j^{a_{kj}}` for an invertible integer matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleMatrixSingularity {
    matrix: IntegerMatrix,
}

impl InvertibleMatrixSingularity {
    pub fn new(matrix: IntegerMatrix) -> Result<Self> {
        if matrix.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(InvertibleMatrixSingularity { matrix })
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }
}

impl From<&DiagonalSingularity> for InvertibleMatrixSingularity {
    fn from(s: &DiagonalSingularity) -> Self {
        InvertibleMatrixSingularity {
            matrix: s.to_matrix(),
        }
    }
}

/// Positive primitive weights `(d_1, …, d_{m+1}; d)` with `A·d⃗ = d·𝟙`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: Vec<BigInt>,
    pub degree: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmplitudeClass {
    LogFano,
    LogCalabiYau,
    LogGeneral,
}

impl fmt::Display for AmplitudeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmplitudeClass::LogFano => "log-Fano",
            AmplitudeClass::LogCalabiYau => "log-Calabi-Yau",
            AmplitudeClass::LogGeneral => "log-general",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amplitude {
    pub value: BigInt,
    pub class: AmplitudeClass,
}

/// Solves `A x = 𝟙` over ℚ by Gauss–Jordan elimination.
fn solve_all_ones(a: &IntegerMatrix) -> Result<Vec<BigRational>> {
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = a
                .row(r)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// The unique positive primitive weight system of `w_A`.
pub fn solve_weights(s: &InvertibleMatrixSingularity) -> Result<WeightSystem> {
    let x = solve_all_ones(s.matrix())?;
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::NonPositiveWeight);
    }
    let denom = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut weights: Vec<BigInt> = x.iter().map(|v| (v * &denom).to_integer()).collect();
    let g = weights.iter().fold(denom.clone(), |acc, w| acc.gcd(w));
    for w in weights.iter_mut() {
        *w /= &g;
    }
    Ok(WeightSystem {
        weights,
        degree: denom / g,
    })
}

/// α = d − Σ d_j together with its sign class.
pub fn amplitude(ws: &WeightSystem) -> Amplitude {
    let value = &ws.degree - ws.weights.iter().sum::<BigInt>();
    let class = if value.is_negative() {
        AmplitudeClass::LogFano
    } else if value.is_zero() {
        AmplitudeClass::LogCalabiYau
    } else {
        AmplitudeClass::LogGeneral
    };
    Amplitude { value, class }
}

pub fn milnor_number(s: &DiagonalSingularity) -> BigInt {
    s.milnor_number()
}

/// A monomial `∏_{j ∈ variables} x_j^{k_j}`; variables are 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub variables: Vec<usize>,
    pub exponents: Vec<u64>,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .variables
            .iter()
            .zip(&self.exponents)
            .filter(|(_, &k)| k > 0)
            .map(|(&v, &k)| {
                if k == 1 {
                    format!("x{}", v + 1)
                } else {
                    format!("x{}^{}", v + 1, k)
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Monomial basis `∏_{j ∈ subset} x_j^{k_j}`, `0 ≤ k_j ≤ a_j − 2`, of the
/// Jacobian ring of the restriction of `s` to the variables in `subset`.
/// Output is lexicographic in the exponent vector.
pub fn jacobian_basis(s: &DiagonalSingularity, subset: &[usize]) -> Result<Vec<Monomial>> {
    let mut variables = subset.to_vec();
    variables.sort_unstable();
    variables.dedup();
    if let Some(&index) = variables.iter().find(|&&i| i >= s.num_vars()) {
        return Err(Error::IndexOutOfRange {
            index,
            len: s.num_vars(),
        });
    }
    let ranges: Vec<u64> = variables.iter().map(|&i| s.exponents()[i] - 1).collect();
    let mut out = Vec::new();
    let mut current = vec![0u64; variables.len()];
    loop {
        out.push(Monomial {
            variables: variables.clone(),
            exponents: current.clone(),
        });
        // odometer, last position fastest
        let mut pos = current.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] < ranges[pos] {
                break;
            }
            current[pos] = 0;
        }
    }
}
