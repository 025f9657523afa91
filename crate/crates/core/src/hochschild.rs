//! Equivariant Hochschild cohomology `HH*(A, Γ_A)` of a diagonal singularity
//! `x_1^{a_1} + ... + x_{n+1}^{a_{n+1}}`, computed by enumerating compatible
//! pairs of a group element `γ ∈ ∏ μ_{a_i}` and a γ-monomial.
//!
//! A γ-monomial is `x_0^{b_0} x_1^{b_1} ⋯ x_{n+1}^{b_{n+1}}`, possibly with the
//! starred variable `x_0^*`. Moved variables carry exponent `−1`, fixed ones
//! lie in `0..=a_i−2`, and compatibility asks `b_i ≡ b_0 (mod a_i)`. A pair of
//! weight `u` and negativity `h` contributes to degree `2u + h`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::singularity::{
    amplitude, solve_weights, AmplitudeClass, DiagonalSingularity, InvertibleMatrixSingularity,
};
use crate::Limits;

/// `γ = (e^{2πi r_1/a_1}, …, e^{2πi r_{n+1}/a_{n+1}})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    residues: Vec<u64>,
    orders: Vec<u64>,
}

impl GroupElement {
    pub fn new(residues: Vec<u64>, orders: Vec<u64>) -> Result<Self> {
        if residues.len() != orders.len() {
            return Err(Error::InvalidArgument(
                "residue and order lists differ in length".into(),
            ));
        }
        if let Some((r, a)) = residues.iter().zip(&orders).find(|(r, a)| r >= a) {
            return Err(Error::InvalidArgument(format!(
                "residue {r} out of range for order {a}"
            )));
        }
        Ok(GroupElement { residues, orders })
    }

    pub fn identity(orders: &[u64]) -> Self {
        GroupElement {
            residues: vec![0; orders.len()],
            orders: orders.to_vec(),
        }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lexicographic iterator over all of `∏ μ_{a_i}`.
pub struct GroupElements {
    orders: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for GroupElements {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let mut carried = true;
        while carried && i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] == self.orders[i] {
                succ[i] = 0;
            } else {
                carried = false;
            }
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(GroupElement {
            residues: current,
            orders: self.orders.clone(),
        })
    }
}

pub fn group_elements(s: &DiagonalSingularity, limits: &Limits) -> Result<GroupElements> {
    let order = s.group_order();
    match order {
        Some(o) if o <= limits.group => {}
        _ => {
            let size: BigInt = s.exponents().iter().map(|&a| BigInt::from(a)).product();
            return Err(Error::cap("group order", size, limits.group));
        }
    }
    Ok(GroupElements {
        orders: s.exponents().to_vec(),
        next: Some(vec![0; s.num_vars()]),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedData {
    /// `I^γ`: 0-based indices `i` with `r_i = 0`.
    pub fixed: Vec<usize>,
    /// `I_γ`: the remaining indices.
    pub moved: Vec<usize>,
    /// Whether `t_0 = (t_1 ⋯ t_{n+1})^{−1}` equals 1.
    pub x0_fixed: bool,
}

pub fn fixed_data(g: &GroupElement) -> FixedData {
    let (fixed, moved): (Vec<usize>, Vec<usize>) =
        (0..g.residues.len()).partition(|&i| g.residues[i] == 0);
    let turns: BigRational = g
        .residues
        .iter()
        .zip(&g.orders)
        .map(|(&r, &a)| BigRational::new(BigInt::from(r), BigInt::from(a)))
        .sum();
    FixedData {
        fixed,
        moved,
        x0_fixed: turns.is_integer(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialType {
    /// No star; γ fixes `x_0`.
    A,
    /// Carries `x_0^*`; γ fixes `x_0`.
    B,
    /// `x_0^{−1}` with star; γ moves `x_0`.
    C,
}

impl fmt::Display for MonomialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialType::A => "A",
            MonomialType::B => "B",
            MonomialType::C => "C",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaMonomial {
    pub gamma: GroupElement,
    /// Reduced exponents `b_0, b_1, …, b_{n+1}`.
    pub exponents: Vec<i64>,
    pub mtype: MonomialType,
    pub weight: i64,
    pub negativity: u64,
    pub degree: i64,
    /// `b_0` before the star is absorbed.
    pub x0_raw: u64,
}

impl GammaMonomial {
    pub fn b0(&self) -> i64 {
        self.exponents[0]
    }

    fn sort_key(&self) -> (&[u64], MonomialType, u64) {
        (&self.gamma.residues, self.mtype, self.x0_raw)
    }
}

/// Reduced exponents only; the star is implied by the type.
impl fmt::Display for GammaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, &b)| {
                if b == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{b}")
                }
            })
            .collect();
        if factors.is_empty() {
            factors.push("1".into());
        }
        f.write_str(&factors.join(" "))
    }
}

fn build(
    g: &GroupElement,
    fd: &FixedData,
    mtype: MonomialType,
    b0: i64,
    raw: u64,
) -> Option<GammaMonomial> {
    let n1 = g.orders.len();
    let mut exponents = Vec::with_capacity(n1 + 1);
    exponents.push(b0);
    let mut m_sum = 0i64;
    for i in 0..n1 {
        let a = g.orders[i] as i64;
        let b = if g.residues[i] != 0 {
            if (b0 + 1).rem_euclid(a) != 0 {
                return None;
            }
            -1
        } else {
            let b = b0.rem_euclid(a);
            if b > a - 2 {
                return None;
            }
            b
        };
        debug_assert_eq!((b0 - b).rem_euclid(a), 0);
        m_sum += (b0 - b) / a;
        exponents.push(b);
    }
    let weight = b0 - m_sum;
    let negativity = fd.moved.len() as u64 + u64::from(mtype != MonomialType::A);
    Some(GammaMonomial {
        gamma: g.clone(),
        exponents,
        mtype,
        weight,
        negativity,
        degree: 2 * weight + negativity as i64,
        x0_raw: raw,
    })
}

/// Compatible γ-monomials for `γ` with raw `b_0 ≤ b0_max`, in generator order.
pub fn gamma_monomials(g: &GroupElement, b0_max: u64) -> Vec<GammaMonomial> {
    let fd = fixed_data(g);
    let mut out = Vec::new();
    if fd.x0_fixed {
        for raw in 0..=b0_max {
            let b0 = raw as i64;
            out.extend(build(g, &fd, MonomialType::A, b0, raw));
            out.extend(build(g, &fd, MonomialType::B, b0 - 1, raw));
        }
        out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    } else if fd.fixed.is_empty() {
        out.extend(build(g, &fd, MonomialType::C, -1, 0));
    }
    out
}

/// Smallest raw `b_0` bound beyond which every generator has degree below
/// `d_min`, or `None` when `Σ 1/a_i ≤ 1` and degrees do not decrease.
///
/// Uses `u ≤ b_0(1 − σ) + (n+1) − 2σ` and `h ≤ n + 2`.
pub fn completeness_bound(s: &DiagonalSingularity, d_min: i64) -> Option<u64> {
    let sigma = s.inverse_exponent_sum();
    let one = BigRational::one();
    if sigma <= one {
        return None;
    }
    let n1 = BigRational::from_integer(BigInt::from(s.num_vars()));
    let two = BigRational::from_integer(BigInt::from(2));
    // need B(1 − σ) < (d_min − (n+2))/2 − (n+1) + 2σ
    let rhs =
        (BigRational::from_integer(BigInt::from(d_min)) - &n1 - &one) / &two - &n1 + &two * &sigma;
    let threshold = -rhs / (&sigma - &one);
    let b = threshold.floor().to_integer() + BigInt::one();
    Some(if b.is_negative() {
        0
    } else {
        b.to_u64().expect("bound fits in u64")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHTable {
    pub window: (i64, i64),
    pub generators: BTreeMap<i64, Vec<GammaMonomial>>,
    pub dimensions: BTreeMap<i64, usize>,
    /// Largest raw `b_0` enumerated.
    pub b0_max: u64,
    /// Bound guaranteeing completeness at `window.0`, when one exists.
    pub completeness_bound: Option<u64>,
    pub complete: bool,
}

impl HHTable {
    pub fn dimension(&self, degree: i64) -> usize {
        self.dimensions.get(&degree).copied().unwrap_or(0)
    }

    pub fn generators_in(&self, degree: i64) -> &[GammaMonomial] {
        self.generators
            .get(&degree)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Sorted reduced `b_0` values in one degree.
    pub fn b0_multiset(&self, degree: i64) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .generators_in(degree)
            .iter()
            .map(GammaMonomial::b0)
            .collect();
        v.sort_unstable();
        v
    }

    fn restrict(&self, lo: i64, hi: i64) -> HHTable {
        HHTable {
            window: (lo, hi),
            generators: self
                .generators
                .range(lo..=hi)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            dimensions: self
                .dimensions
                .range(lo..=hi)
                .map(|(k, v)| (*k, *v))
                .collect(),
            ..self.clone()
        }
    }
}

fn check_window(window: (i64, i64)) -> Result<()> {
    if window.0 > window.1 {
        return Err(Error::InvalidWindow {
            lo: window.0,
            hi: window.1,
        });
    }
    Ok(())
}

/// Generators and dimensions of `HH^d` for `d` in the closed `window`.
///
/// Without `b0_max` the completeness bound is used, which needs `Σ 1/a_i > 1`.
/// Dimensions count compatible pairs `(γ, monomial)`.
pub fn hh_dimensions(
    s: &DiagonalSingularity,
    window: (i64, i64),
    b0_max: Option<u64>,
    limits: &Limits,
) -> Result<HHTable> {
    check_window(window)?;
    let bound = completeness_bound(s, window.0);
    let b0_max = match (b0_max, bound) {
        (Some(b), _) => b,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::MissingB0Bound),
    };
    let elements: Vec<GroupElement> = group_elements(s, limits)?.collect();
    let mut all: Vec<GammaMonomial> = elements
        .par_iter()
        .flat_map_iter(|g| {
            gamma_monomials(g, b0_max)
                .into_iter()
                .filter(|m| window.0 <= m.degree && m.degree <= window.1)
        })
        .collect();
    all.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    let mut generators: BTreeMap<i64, Vec<GammaMonomial>> = BTreeMap::new();
    for m in all {
        generators.entry(m.degree).or_default().push(m);
    }
    let dimensions = (window.0..=window.1)
        .map(|d| (d, generators.get(&d).map_or(0, Vec::len)))
        .collect();
    Ok(HHTable {
        window,
        generators,
        dimensions,
        b0_max,
        completeness_bound: bound,
        complete: bound.is_some_and(|b| b0_max >= b),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedEntry {
    pub b0: i64,
    pub first: BigRational,
    pub second: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedTable {
    pub scale: BigRational,
    pub entries: BTreeMap<i64, Vec<BigradedEntry>>,
    pub complete: bool,
}

/// Bidegrees `(d − λ·b_0, λ·b_0)` of the generators in each listed degree,
/// with `λ = scale`, by default the dimension `n`.
pub fn bigraded_table(
    s: &DiagonalSingularity,
    degrees: &[i64],
    scale: Option<BigRational>,
    b0_max: Option<u64>,
    limits: &Limits,
) -> Result<BigradedTable> {
    let scale = scale.unwrap_or_else(|| BigRational::from_integer(BigInt::from(s.dimension())));
    if !scale.is_positive() {
        return Err(Error::InvalidScale(scale.to_string()));
    }
    let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(Error::InvalidArgument("no degrees requested".into()));
    };
    let table = hh_dimensions(s, (lo, hi), b0_max, limits)?;
    let entries = degrees
        .iter()
        .map(|&d| {
            let row = table
                .b0_multiset(d)
                .into_iter()
                .map(|b0| {
                    let second = &scale * BigInt::from(b0);
                    BigradedEntry {
                        b0,
                        first: BigRational::from_integer(BigInt::from(d)) - &second,
                        second,
                    }
                })
                .collect();
            (d, row)
        })
        .collect();
    Ok(BigradedTable {
        scale,
        entries,
        complete: table.complete,
    })
}

pub const CONTACT_LICENSE: &str =
    "the negative-degree bigrading is a contact invariant of the link \
for terminal-type inputs; only the combinatorics of the tables is checked here";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinction {
    Distinct(i64),
    IndistinguishableInWindow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctionReport {
    pub verdict: Distinction,
    /// Rescale applied to the first table, once determined.
    pub lambda: Option<BigRational>,
    pub degrees_compared: Vec<i64>,
    pub complete: bool,
    pub license: &'static str,
}

/// Compares the reduced `b_0` multisets in the even negative degrees of the
/// window, allowing one global positive rescale of the first singularity.
pub fn contact_distinguish(
    s1: &DiagonalSingularity,
    s2: &DiagonalSingularity,
    window: (i64, i64),
    b0_max: Option<u64>,
    limits: &Limits,
) -> Result<DistinctionReport> {
    check_window(window)?;
    let t1 = hh_dimensions(s1, window, b0_max, limits)?;
    let t2 = hh_dimensions(s2, window, b0_max, limits)?;
    let top = window.1.min(-2);
    let degrees: Vec<i64> = (window.0..=top).rev().filter(|d| d % 2 == 0).collect();
    let mut lambda: Option<BigRational> = None;
    let mut verdict = Distinction::IndistinguishableInWindow;
    let mut compared = Vec::new();
    for &d in &degrees {
        compared.push(d);
        let m1 = t1.b0_multiset(d);
        let m2 = t2.b0_multiset(d);
        if m1.len() != m2.len() {
            verdict = Distinction::Distinct(d);
            break;
        }
        if lambda.is_none() {
            let sum1: i64 = m1.iter().sum();
            let sum2: i64 = m2.iter().sum();
            match (sum1 == 0, sum2 == 0) {
                (true, true) => {}
                (false, false) => {
                    let l = BigRational::new(BigInt::from(sum2), BigInt::from(sum1));
                    if !l.is_positive() {
                        verdict = Distinction::Distinct(d);
                        break;
                    }
                    lambda = Some(l);
                }
                _ => {
                    verdict = Distinction::Distinct(d);
                    break;
                }
            }
        }
        let matches = match &lambda {
            Some(l) => m1
                .iter()
                .map(|&b| l * BigInt::from(b))
                .zip(&m2)
                .all(|(x, &y)| x == BigRational::from_integer(BigInt::from(y))),
            None => m1 == m2,
        };
        if !matches {
            verdict = Distinction::Distinct(d);
            break;
        }
    }
    Ok(DistinctionReport {
        verdict,
        lambda,
        degrees_compared: compared,
        complete: t1.complete && t2.complete,
        license: CONTACT_LICENSE,
    })
}

pub const SH_NOTE: &str = "diagonal exponent matrices equal their transposes, so the Milnor fiber \
of the transposed polynomial is that of the input; HH is relabeled as SH";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShRefusal {
    ZeroAmplitude,
    NonzeroHH2(usize),
}

impl fmt::Display for ShRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShRefusal::ZeroAmplitude => f.write_str("amplitude is zero"),
            ShRefusal::NonzeroHH2(d) => write!(f, "HH^2 has dimension {d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShVerdict {
    Symplectic { table: HHTable, note: &'static str },
    Refused(ShRefusal),
}

/// Symplectic cohomology of the Milnor fiber read off from `HH`, when the
/// amplitude is non-zero and `HH² = 0`. Degree 2 is always enumerated for the
/// check even if the window excludes it.
pub fn sh_via_hh(
    s: &DiagonalSingularity,
    window: (i64, i64),
    b0_max: Option<u64>,
    limits: &Limits,
) -> Result<ShVerdict> {
    check_window(window)?;
    let ws = solve_weights(&InvertibleMatrixSingularity::from(s))?;
    if amplitude(&ws).class == AmplitudeClass::LogCalabiYau {
        return Ok(ShVerdict::Refused(ShRefusal::ZeroAmplitude));
    }
    let wide = (window.0.min(2), window.1.max(2));
    let table = hh_dimensions(s, wide, b0_max, limits)?;
    let hh2 = table.dimension(2);
    if hh2 != 0 {
        return Ok(ShVerdict::Refused(ShRefusal::NonzeroHH2(hh2)));
    }
    Ok(ShVerdict::Symplectic {
        table: table.restrict(window.0, window.1),
        note: SH_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(e: &[u64]) -> DiagonalSingularity {
        DiagonalSingularity::new(e.to_vec()).unwrap()
    }

    fn table(s: &DiagonalSingularity, lo: i64, hi: i64) -> HHTable {
        hh_dimensions(s, (lo, hi), None, &Limits::default()).unwrap()
    }

    #[test]
    fn group_sizes() {
        let l = Limits::default();
        assert_eq!(group_elements(&ds(&[2, 2]), &l).unwrap().count(), 4);
        for k in 1..4 {
            let s = DiagonalSingularity::a1(k).unwrap();
            assert_eq!(group_elements(&s, &l).unwrap().count() as u64, 16 * k);
        }
        let r: Vec<Vec<u64>> = group_elements(&ds(&[3]), &l)
            .unwrap()
            .map(|g| g.residues)
            .collect();
        assert_eq!(r, vec![vec![0], vec![1], vec![2]]);
        let tiny = Limits { group: 3, ..l };
        assert!(matches!(
            group_elements(&ds(&[2, 2]), &tiny),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn fixed_loci() {
        let id = GroupElement::identity(&[2, 2, 2, 4]);
        let fd = fixed_data(&id);
        assert_eq!(fd.fixed, vec![0, 1, 2, 3]);
        assert!(fd.x0_fixed);
        let g = GroupElement::new(vec![1, 1, 1, 2], vec![2, 2, 2, 4]).unwrap();
        let fd = fixed_data(&g);
        assert!(fd.fixed.is_empty());
        assert!(fd.x0_fixed);
        let g = GroupElement::new(vec![1, 0, 0, 0], vec![2, 2, 2, 4]).unwrap();
        let fd = fixed_data(&g);
        assert_eq!(fd.fixed, vec![1, 2, 3]);
        assert!(!fd.x0_fixed);
    }

    #[test]
    fn identity_monomials() {
        let id = GroupElement::identity(&[2, 2, 2, 4]);
        let ms = gamma_monomials(&id, 2);
        let a2 = ms
            .iter()
            .find(|m| m.mtype == MonomialType::A && m.x0_raw == 2)
            .unwrap();
        assert_eq!(a2.exponents, vec![2, 0, 0, 0, 2]);
        assert_eq!((a2.weight, a2.negativity, a2.degree), (-1, 0, -2));
        assert_eq!(a2.to_string(), "x0^2 x4^2");
        let a0 = ms
            .iter()
            .find(|m| m.mtype == MonomialType::A && m.x0_raw == 0)
            .unwrap();
        assert_eq!(a0.degree, 0);
        let b1 = ms
            .iter()
            .find(|m| m.mtype == MonomialType::B && m.x0_raw == 1)
            .unwrap();
        assert_eq!(b1.exponents, vec![0; 5]);
        assert_eq!(b1.degree, 1);
    }

    #[test]
    fn c_type_monomials() {
        let g = GroupElement::new(vec![1, 1, 1, 1], vec![2, 2, 2, 4]).unwrap();
        let ms = gamma_monomials(&g, 5);
        assert_eq!(ms.len(), 1);
        let c = &ms[0];
        assert_eq!(c.mtype, MonomialType::C);
        assert_eq!(c.exponents, vec![-1; 5]);
        assert_eq!((c.weight, c.negativity, c.degree), (-1, 5, 3));
        let g = GroupElement::new(vec![1, 0, 0, 1], vec![2, 2, 2, 4]).unwrap();
        assert!(gamma_monomials(&g, 5).is_empty());
    }

    #[test]
    fn a1_dimensions() {
        for (k, lo) in [(1u64, -10i64), (2, -10)] {
            let t = table(&DiagonalSingularity::a1(k).unwrap(), lo, 5);
            assert!(t.complete);
            assert_eq!(t.dimension(3), (2 * k - 1) as usize);
            assert_eq!(t.dimension(2), 0);
            assert_eq!(t.dimension(4), 0);
            assert_eq!(t.dimension(5), 0);
            for d in lo..=1 {
                assert_eq!(t.dimension(d), 1, "k = {k}, d = {d}");
            }
        }
    }

    #[test]
    fn middle_degree_lower_bound() {
        for e in [vec![2u64, 3], vec![2, 3, 4], vec![2, 2, 3], vec![3, 3, 4]] {
            let s = ds(&e);
            let n = s.dimension() as i64;
            let t = hh_dimensions(&s, (n, n), Some(4), &Limits::default()).unwrap();
            assert!(BigInt::from(t.dimension(n)) >= s.milnor_number(), "{s}");
        }
    }

    #[test]
    fn missing_bound() {
        let s = ds(&[3, 3, 3]);
        assert_eq!(completeness_bound(&s, -10), None);
        assert_eq!(
            hh_dimensions(&s, (-4, 4), None, &Limits::default()),
            Err(Error::MissingB0Bound)
        );
        let t = hh_dimensions(&s, (-4, 4), Some(6), &Limits::default()).unwrap();
        assert!(!t.complete);
    }

    #[test]
    fn bigrading() {
        let l = Limits::default();
        let three = Some(BigRational::from_integer(BigInt::from(3)));
        let two = Some(BigRational::from_integer(BigInt::from(2)));
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let t = bigraded_table(
            &DiagonalSingularity::a1(1).unwrap(),
            &[-2],
            three.clone(),
            None,
            &l,
        )
        .unwrap();
        let e = &t.entries[&-2];
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].first.clone(), e[0].second.clone()), (q(-5), q(3)));
        let t =
            bigraded_table(&DiagonalSingularity::a1(2).unwrap(), &[-2], three, None, &l).unwrap();
        assert_eq!(t.entries[&-2][0].first, q(-8));
        let t = bigraded_table(&DiagonalSingularity::a1(2).unwrap(), &[-4], two, None, &l).unwrap();
        let e = &t.entries[&-4][0];
        assert_eq!((e.b0, e.first.clone(), e.second.clone()), (3, q(-10), q(6)));
        let t =
            bigraded_table(&DiagonalSingularity::a1(2).unwrap(), &[-4], None, None, &l).unwrap();
        assert_eq!(t.scale, q(3));
    }

    #[test]
    fn distinguishing() {
        let l = Limits::default();
        let a = |k| DiagonalSingularity::a1(k).unwrap();
        let r = contact_distinguish(&a(1), &a(2), (-12, 5), None, &l).unwrap();
        assert_eq!(r.verdict, Distinction::Distinct(-4));
        assert_eq!(r.lambda, Some(BigRational::from_integer(BigInt::from(2))));
        let r = contact_distinguish(&a(2), &a(2), (-12, 5), None, &l).unwrap();
        assert_eq!(r.verdict, Distinction::IndistinguishableInWindow);
        let r = contact_distinguish(&a(2), &a(3), (-12, 5), None, &l).unwrap();
        assert!(matches!(r.verdict, Distinction::Distinct(_)));
    }

    #[test]
    fn symplectic_bridge() {
        let l = Limits::default();
        let v = sh_via_hh(&ds(&[3, 3, 3]), (-4, 4), None, &l).unwrap();
        assert_eq!(v, ShVerdict::Refused(ShRefusal::ZeroAmplitude));
        for k in 1..=3 {
            match sh_via_hh(&DiagonalSingularity::a1(k).unwrap(), (-6, 3), None, &l).unwrap() {
                ShVerdict::Symplectic { table, .. } => {
                    assert_eq!(table.dimension(3), (2 * k - 1) as usize);
                    assert_eq!(table.dimension(2), 0);
                }
                other => panic!("{other:?}"),
            }
        }
        match sh_via_hh(&DiagonalSingularity::a1(2).unwrap(), (-4, 0), None, &l).unwrap() {
            ShVerdict::Symplectic { table, .. } => assert_eq!(table.window, (-4, 0)),
            other => panic!("{other:?}"),
        }
    }
}
