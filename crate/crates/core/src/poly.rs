//! Dense integer polynomials (coefficients lowest degree first) and the
//! cyclotomic polynomials built from them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Divides `num` by the monic polynomial `den`, panicking if the division
/// leaves a remainder.
pub fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Poly {
    let d = den.len() - 1;
    assert!(den[d].is_one(), "divisor must be monic");
    let mut rem: Poly = num.to_vec();
    if rem.len() <= d {
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(quot)
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial Φ_n, from `t^n − 1 = ∏_{d | n} Φ_d`.
pub fn cyclotomic(n: u64) -> Poly {
    assert!(n >= 1);
    let mut p: Poly = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            p = div_exact_monic(&p, &cyclotomic(d));
        }
    }
    p
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Φ_n(1): zero for n = 1, p for a prime power p^k, and 1 otherwise.
pub fn cyclotomic_at_one(n: u64) -> BigInt {
    if n == 1 {
        return BigInt::zero();
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            return if m == 1 {
                BigInt::from(p)
            } else {
                BigInt::one()
            };
        }
        p += 1;
    }
    BigInt::from(m)
}

/// Expands `∏ Φ_n^{e_n}` into an integer polynomial.
pub fn expand_cyclotomic_product(multiplicities: &BTreeMap<u64, u64>) -> Poly {
    let mut out: Poly = vec![BigInt::one()];
    for (&n, &e) in multiplicities {
        let phi = cyclotomic(n);
        for _ in 0..e {
            out = mul(&out, &phi);
        }
    }
    out
}

pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let c = cyclotomic(105);
        assert_eq!(c.len() as u64, euler_phi(105) + 1);
        assert!(c.contains(&BigInt::from(-2)));
    }

    #[test]
    fn value_at_one_matches_evaluation() {
        for n in 1..=60 {
            assert_eq!(
                eval(&cyclotomic(n), &BigInt::one()),
                cyclotomic_at_one(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn totients() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
        assert_eq!(euler_phi(30), 8);
    }
}
