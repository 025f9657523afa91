//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use singlab::hochschild::{HHTable, MonomialType};
use singlab::maslov::{AnglePath, Breakpoint};
use singlab::{DiagonalSingularity, IntegerMatrix};

pub fn ds(e: &[u64]) -> DiagonalSingularity {
    DiagonalSingularity::new(e.to_vec()).unwrap()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Flattened generator: `(residues, type tag, raw b_0, exponents, u, h, degree)`.
pub type Generator = (Vec<u64>, char, u64, Vec<i64>, i64, u64, i64);

/// Scans every exponent vector in `[−1, max(a_i − 2)]^{n+1}` for every group
/// element and applies the raw A/B/C definitions.
pub fn brute_force_hh(
    orders: &[u64],
    b0_max: u64,
    window: (i64, i64),
) -> BTreeMap<i64, Vec<Generator>> {
    let n1 = orders.len();
    let top = orders.iter().map(|&a| a as i64 - 2).max().unwrap();
    let l = orders.iter().fold(1u64, |l, &a| l / gcd(l, a) * a);
    let mut out: BTreeMap<i64, Vec<Generator>> = BTreeMap::new();
    let mut residues = vec![0u64; n1];
    loop {
        let x0_fixed = residues
            .iter()
            .zip(orders)
            .map(|(&r, &a)| r * (l / a))
            .sum::<u64>()
            % l
            == 0;
        // (tag, reduced b_0, raw b_0)
        let mut heads: Vec<(char, i64, u64)> = Vec::new();
        if x0_fixed {
            for raw in 0..=b0_max {
                heads.push(('A', raw as i64, raw));
                heads.push(('B', raw as i64 - 1, raw));
            }
        } else {
            heads.push(('C', -1, 0));
        }
        let mut b = vec![-1i64; n1];
        loop {
            let shape_ok = (0..n1).all(|i| {
                if residues[i] == 0 {
                    0 <= b[i] && b[i] <= orders[i] as i64 - 2
                } else {
                    b[i] == -1
                }
            });
            if shape_ok {
                for &(tag, b0, raw) in &heads {
                    if let Some(u) = lattice_weight(orders, b0, &b) {
                        let h =
                            b.iter().filter(|&&x| x == -1).count() as u64 + u64::from(tag != 'A');
                        let degree = 2 * u + h as i64;
                        if window.0 <= degree && degree <= window.1 {
                            let mut exps = vec![b0];
                            exps.extend(&b);
                            out.entry(degree).or_default().push((
                                residues.clone(),
                                tag,
                                raw,
                                exps,
                                u,
                                h,
                                degree,
                            ));
                        }
                    }
                }
            }
            if !advance(&mut b, |_| -1, |_| top) {
                break;
            }
        }
        if !advance_u64(&mut residues, orders) {
            break;
        }
    }
    for v in out.values_mut() {
        v.sort_by(|x, y| (&x.0, x.1, x.2).cmp(&(&y.0, y.1, y.2)));
    }
    out
}

/// Solves `(b_0, b) − u·𝟙 = Σ c_i (a_i e_i − 𝟙)` over the integers.
fn lattice_weight(orders: &[u64], b0: i64, b: &[i64]) -> Option<i64> {
    // coordinate 0 gives u = b_0 + Σ c_i; coordinate i gives b_i − u = a_i c_i − Σ c
    let mut c = Vec::with_capacity(orders.len());
    for (i, &a) in orders.iter().enumerate() {
        let diff = b[i] - b0;
        if diff % a as i64 != 0 {
            return None;
        }
        c.push(diff / a as i64);
    }
    let sc: i64 = c.iter().sum();
    let u = b0 + sc;
    let consistent = (0..orders.len()).all(|i| b[i] - u == orders[i] as i64 * c[i] - sc);
    consistent.then_some(u)
}

fn advance(v: &mut [i64], lo: impl Fn(usize) -> i64, hi: impl Fn(usize) -> i64) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < hi(i) {
            v[i] += 1;
            return true;
        }
        v[i] = lo(i);
    }
    false
}

fn advance_u64(v: &mut [u64], orders: &[u64]) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] + 1 < orders[i] {
            v[i] += 1;
            return true;
        }
        v[i] = 0;
    }
    false
}

pub fn flatten(table: &HHTable) -> BTreeMap<i64, Vec<Generator>> {
    table
        .generators
        .iter()
        .map(|(&d, gens)| {
            let v = gens
                .iter()
                .map(|m| {
                    let tag = match m.mtype {
                        MonomialType::A => 'A',
                        MonomialType::B => 'B',
                        MonomialType::C => 'C',
                    };
                    (
                        m.gamma.residues().to_vec(),
                        tag,
                        m.x0_raw,
                        m.exponents.clone(),
                        m.weight,
                        m.negativity,
                        m.degree,
                    )
                })
                .collect();
            (d, v)
        })
        .collect()
}

/// Index of `θ(t) = s·t` counted directly: the start at `θ = 0` contributes
/// `sign(s)`, each integer strictly between 0 and `s` contributes `2·sign(s)`,
/// and an integer endpoint contributes `sign(s)`.
pub fn linear_rotation_index(s: &BigRational) -> BigInt {
    if s.is_zero() {
        panic!("degenerate");
    }
    let sign = if s.is_positive() { 1 } else { -1 };
    let abs = s.abs();
    let interior = if abs.is_integer() {
        abs.to_integer() - 1
    } else {
        abs.floor().to_integer()
    };
    let end = if abs.is_integer() { 1 } else { 0 };
    BigInt::from(sign) * (BigInt::from(1 + end) + interior * 2)
}

/// Oracle for the ellipsoid orbit index: the linearized flow rotates each
/// complementary coordinate at speed `a_j / a_k` turns per period.
pub fn ellipsoid_oracle(a: &[BigRational], j: usize) -> BigInt {
    a.iter()
        .enumerate()
        .filter(|&(k, _)| k != j)
        .map(|(_, ak)| linear_rotation_index(&(&a[j] / ak)))
        .sum()
}

pub fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    q(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

pub fn random_positive_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    q(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

pub fn random_non_integer(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    loop {
        let r = random_positive_rational(rng, max_num, max_den);
        if !r.is_integer() {
            return r;
        }
    }
}

/// Random piecewise-linear path with `dim` coordinates.
pub fn random_path(rng: &mut ChaCha8Rng, dim: usize) -> AnglePath {
    let coords = (0..dim)
        .map(|_| {
            let inner = rng.gen_range(0..3);
            let mut times: Vec<BigRational> =
                (0..inner).map(|_| q(rng.gen_range(1..12), 12)).collect();
            times.sort();
            times.dedup();
            let mut all = vec![rat(0)];
            all.extend(times);
            all.push(rat(1));
            all.into_iter()
                .map(|t| Breakpoint::new(t, random_rational(rng, 18, 5)))
                .collect()
        })
        .collect();
    AnglePath::new(coords).unwrap()
}

/// `path` with every coordinate moved by the given number of turns.
pub fn shifted(path: &AnglePath, shifts: &[BigRational]) -> AnglePath {
    let coords = path
        .coordinates()
        .iter()
        .zip(shifts)
        .map(|(bps, s)| {
            bps.iter()
                .map(|b| Breakpoint::new(b.time.clone(), &b.turns + s))
                .collect()
        })
        .collect();
    AnglePath::new(coords).unwrap()
}

/// Random path whose windings are integers.
pub fn random_loop(rng: &mut ChaCha8Rng, dim: usize) -> AnglePath {
    let p = random_path(rng, dim);
    let coords = p
        .coordinates()
        .iter()
        .map(|bps| {
            let mut bps = bps.clone();
            let w = rat(rng.gen_range(-3..=3));
            let last = bps.len() - 1;
            bps[last].turns = &bps[0].turns + w;
            bps
        })
        .collect();
    AnglePath::new(coords).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> IntegerMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntegerMatrix::new(rows, cols, entries).unwrap()
}

/// All non-decreasing exponent tuples of length 1..=5 with `μ ≤ max_mu`.
pub fn diagonal_inputs(max_mu: u64) -> Vec<Vec<u64>> {
    fn rec(prefix: &mut Vec<u64>, start: u64, mu: u64, max_mu: u64, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == 5 {
            return;
        }
        let mut a = start;
        while mu * (a - 1) <= max_mu {
            prefix.push(a);
            rec(prefix, a, mu * (a - 1), max_mu, out);
            prefix.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 2, 1, max_mu, &mut out);
    out
}
