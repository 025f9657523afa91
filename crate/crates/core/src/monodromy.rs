//! Integral monodromy of Brieskorn–Pham Milnor fibres and the topology of the
//! link.
//!
//! The monodromy on `H_m` of the Milnor fibre is modelled in the Pham basis as
//! the Kronecker product of the companion matrices of
//! `Λ_a(t) = 1 + t + … + t^{a−1}`. Its eigenvalues are the products
//! `ω_1 ⋯ ω_{m+1}` of nontrivial `a_i`-th roots of unity, which is what the
//! cyclotomic bookkeeping in [`char_poly`] enumerates without building a matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::poly::{self, Poly};
use crate::singularity::DiagonalSingularity;
use crate::smith::{smith_normal_form, SmithForm};
use crate::Limits;

/// Companion matrix of `Λ_a`: ones on the subdiagonal, last column `−1`.
pub fn companion_lambda(a: u64) -> Result<IntegerMatrix> {
    if a < 2 {
        return Err(Error::InvalidCompanion(a));
    }
    let n = (a - 1) as usize;
    let mut m = IntegerMatrix::zeros(n, n);
    for i in 1..n {
        m.set(i, i - 1, BigInt::one());
    }
    for i in 0..n {
        m.set(i, n - 1, -BigInt::one());
    }
    Ok(m)
}

/// The `μ × μ` integral monodromy `⊗_i companion_lambda(a_i)`.
pub fn integral_monodromy(s: &DiagonalSingularity, limits: &Limits) -> Result<IntegerMatrix> {
    let mu = s.milnor_number();
    if mu > BigInt::from(limits.matrix) {
        return Err(Error::cap(
            "monodromy matrix (Milnor number)",
            mu,
            limits.matrix,
        ));
    }
    let mut m = IntegerMatrix::identity(1);
    for &a in s.exponents() {
        m = m.kron(&companion_lambda(a)?);
    }
    Ok(m)
}

/// Eigenvalue multiset recorded as multiplicities `e_n` of the cyclotomic
/// factors `Φ_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CyclotomicMultiset {
    multiplicities: BTreeMap<u64, u64>,
}

impl CyclotomicMultiset {
    pub fn from_map(multiplicities: BTreeMap<u64, u64>) -> Self {
        let multiplicities = multiplicities.into_iter().filter(|&(_, e)| e > 0).collect();
        CyclotomicMultiset { multiplicities }
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.multiplicities.get(&order).copied().unwrap_or(0)
    }

    /// `Σ e_n φ(n)`, the degree of the characteristic polynomial.
    pub fn degree(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&n, &e)| e * poly::euler_phi(n))
            .sum()
    }

    /// The characteristic polynomial `∏ Φ_n^{e_n}` (lowest degree first).
    pub fn expand(&self) -> Poly {
        poly::expand_cyclotomic_product(&self.multiplicities)
    }

    /// `∏ Φ_n(1)^{e_n}`, the characteristic polynomial at `t = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|(&n, &e)| num_traits::pow(poly::cyclotomic_at_one(n), e as usize))
            .product()
    }

    fn merge(mut self, other: CyclotomicMultiset) -> Self {
        for (n, e) in other.multiplicities {
            *self.multiplicities.entry(n).or_insert(0) += e;
        }
        self
    }
}

impl fmt::Display for CyclotomicMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    format!("Phi_{n}")
                } else {
                    format!("Phi_{n}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Characteristic polynomial of the monodromy as cyclotomic multiplicities.
///
/// Every tuple `1 ≤ j_i ≤ a_i − 1` gives the root `exp(2πi Σ j_i/a_i)`, whose
/// exact order is the reduced denominator of `Σ j_i/a_i`. The enumeration is
/// split over the first coordinate and merged, so the result does not depend
/// on scheduling.
pub fn char_poly(s: &DiagonalSingularity, limits: &Limits) -> Result<CyclotomicMultiset> {
    let mu = s.milnor_number();
    if mu > BigInt::from(limits.enumeration) {
        return Err(Error::cap("root tuple enumeration", mu, limits.enumeration));
    }
    let a = s.exponents();
    let lcm = poly::lcm_all(a.iter().copied());
    let steps: Vec<u64> = a.iter().map(|&ai| lcm / ai).collect();

    let count_from = |j0: u64| -> CyclotomicMultiset {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        let mut j = vec![1u64; a.len()];
        j[0] = j0;
        loop {
            let numerator = j.iter().zip(&steps).map(|(&ji, &st)| ji * st).sum::<u64>() % lcm;
            let order = lcm / numerator.gcd(&lcm);
            // a full-turn numerator gives gcd = lcm, i.e. order 1
            *counts.entry(order).or_insert(0) += 1;
            let mut pos = a.len();
            loop {
                if pos == 1 {
                    return CyclotomicMultiset {
                        multiplicities: counts,
                    };
                }
                pos -= 1;
                j[pos] += 1;
                if j[pos] < a[pos] {
                    break;
                }
                j[pos] = 1;
            }
        }
    };

    // the root multiset of each Φ_n has φ(n) members; divide counts by φ(n)
    let raw = (1..a[0])
        .into_par_iter()
        .map(count_from)
        .reduce(CyclotomicMultiset::default, CyclotomicMultiset::merge);
    let multiplicities = raw
        .multiplicities
        .into_iter()
        .map(|(n, count)| {
            let phi = poly::euler_phi(n);
            debug_assert_eq!(count % phi, 0);
            (n, count / phi)
        })
        .collect();
    Ok(CyclotomicMultiset::from_map(multiplicities))
}

/// `det(M − I) = (−1)^μ · χ(1)` where `χ = ∏ Φ_n^{e_n}`.
pub fn det_h_minus_id(s: &DiagonalSingularity, limits: &Limits) -> Result<BigInt> {
    let cp = char_poly(s, limits)?;
    Ok(det_from_char_poly(&cp))
}

fn det_from_char_poly(cp: &CyclotomicMultiset) -> BigInt {
    let value = cp.value_at_one();
    if cp.degree() % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Topological type of the link of a Brieskorn–Pham singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkClassification {
    /// A topological sphere of the given real dimension.
    Sphere(usize),
    /// Connected sum of `ℓ ≥ 1` copies of `S² × S³`.
    ConnectedSumS2xS3(usize),
    /// `H_2 = ℤ^free ⊕ T ⊕ T` with `T` given by its elementary divisors.
    FreePlusTorsion {
        free_rank: usize,
        torsion: Vec<BigInt>,
    },
    Unsupported(String),
}

impl fmt::Display for LinkClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkClassification::Sphere(d) => write!(f, "S^{d}"),
            LinkClassification::ConnectedSumS2xS3(1) => write!(f, "S^2 x S^3"),
            LinkClassification::ConnectedSumS2xS3(l) => write!(f, "#{l} S^2 x S^3"),
            LinkClassification::FreePlusTorsion { free_rank, torsion } => {
                let t: Vec<String> = torsion.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "H_2 = Z^{free_rank} + ({0}) + ({0})", t.join(" + "))
            }
            LinkClassification::Unsupported(reason) => write!(f, "unsupported: {reason}"),
        }
    }
}

/// Full record behind a link classification.
#[derive(Clone, Debug)]
pub struct LinkReport {
    pub classification: LinkClassification,
    pub det_h_minus_id: BigInt,
    pub char_poly: CyclotomicMultiset,
    /// Smith form of `M − I`, present whenever it was needed.
    pub smith: Option<SmithForm>,
}

/// Splits `T ⊕ T` back into `T`; `None` if the multiset is not doubled.
fn halve_torsion(divisors: &[BigInt]) -> Option<Vec<BigInt>> {
    if !divisors.len().is_multiple_of(2) {
        return None;
    }
    let mut sorted = divisors.to_vec();
    sorted.sort();
    let mut half = Vec::with_capacity(sorted.len() / 2);
    for pair in sorted.chunks(2) {
        if pair[0] != pair[1] {
            return None;
        }
        half.push(pair[0].clone());
    }
    Some(half)
}

/// Elementary divisors (prime powers) of `⊕ ℤ/d_i`.
fn elementary_divisors(invariants: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in invariants {
        let mut rest = d.clone();
        let mut p = BigInt::from(2);
        while &p * &p <= rest {
            if (&rest % &p).is_zero() {
                let mut q = BigInt::one();
                while (&rest % &p).is_zero() {
                    rest /= &p;
                    q *= &p;
                }
                out.push(q);
            }
            p += 1;
        }
        if rest > BigInt::one() {
            out.push(rest);
        }
    }
    out.sort();
    out
}

/// Smith form of `M − I` for the integral monodromy `M`.
pub fn smith_of_h_minus_id(s: &DiagonalSingularity, limits: &Limits) -> Result<SmithForm> {
    let m = integral_monodromy(s, limits)?;
    Ok(smith_normal_form(&m.sub_scalar_identity(&BigInt::one())?))
}

pub fn classify_link(s: &DiagonalSingularity, limits: &Limits) -> Result<LinkReport> {
    let m = s.dimension();
    if m < 3 {
        return Err(Error::DimensionTooLow(m));
    }
    let cp = char_poly(s, limits)?;
    let det = det_from_char_poly(&cp);
    if det.abs().is_one() {
        return Ok(LinkReport {
            classification: LinkClassification::Sphere(2 * m - 1),
            det_h_minus_id: det,
            char_poly: cp,
            smith: None,
        });
    }
    if m > 3 {
        let betti = cp.multiplicity(1);
        return Ok(LinkReport {
            classification: LinkClassification::Unsupported(format!(
                "not a sphere (|det(h - id)| = {}); b_{m} = b_{} = {betti}; \
                 no classification in link dimension {}",
                det.abs(),
                m - 1,
                2 * m - 1
            )),
            det_h_minus_id: det,
            char_poly: cp,
            smith: None,
        });
    }
    let snf = smith_of_h_minus_id(s, limits)?;
    let free = snf.cokernel_free_rank();
    let torsion = elementary_divisors(&snf.torsion());
    let classification = if torsion.is_empty() {
        if free == 0 {
            LinkClassification::Sphere(5)
        } else {
            LinkClassification::ConnectedSumS2xS3(free)
        }
    } else {
        match halve_torsion(&torsion) {
            Some(half) => LinkClassification::FreePlusTorsion {
                free_rank: free,
                torsion: half,
            },
            None => LinkClassification::Unsupported(format!(
                "torsion elementary divisors {:?} do not split as T + T",
                torsion.iter().map(ToString::to_string).collect::<Vec<_>>()
            )),
        }
    };
    Ok(LinkReport {
        classification,
        det_h_minus_id: det,
        char_poly: cp,
        smith: Some(snf),
    })
}
