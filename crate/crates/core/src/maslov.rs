//! Maslov and Conley–Zehnder indices of paths of diagonal unitary matrices.
//!
//! A path `diag(e^{2πi θ_1(t)}, …, e^{2πi θ_n(t)})` meets the Maslov cycle
//! exactly when some `θ_j(t)` is an integer. Angles are stored in turns, so
//! with piecewise-linear `θ_j` every crossing time is an exact rational. The
//! crossing form of a single coordinate is `sign(θ_j') · |v|²` on a real
//! 2-plane, so it has signature `±2`: an interior crossing contributes `±2`,
//! an endpoint crossing half of that.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub time: BigRational,
    /// Angle in full turns: `v` stands for `2πv`.
    pub turns: BigRational,
}

impl Breakpoint {
    pub fn new(time: BigRational, turns: BigRational) -> Self {
        Breakpoint { time, turns }
    }
}

/// Piecewise-linear angle functions `θ_j : [0, 1] → ℝ`, one per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnglePath {
    coordinates: Vec<Vec<Breakpoint>>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl AnglePath {
    pub fn new(coordinates: Vec<Vec<Breakpoint>>) -> Result<Self> {
        if coordinates.is_empty() {
            return Err(Error::InvalidPath(
                "at least one coordinate is required".into(),
            ));
        }
        for (j, bps) in coordinates.iter().enumerate() {
            if bps.len() < 2 {
                return Err(Error::InvalidPath(format!(
                    "coordinate {} needs two breakpoints",
                    j + 1
                )));
            }
            if !bps[0].time.is_zero() || !bps[bps.len() - 1].time.is_one() {
                return Err(Error::InvalidPath(format!(
                    "coordinate {} must start at t = 0 and end at t = 1",
                    j + 1
                )));
            }
            if bps.windows(2).any(|w| w[0].time >= w[1].time) {
                return Err(Error::InvalidPath(format!(
                    "breakpoint times of coordinate {} are not strictly increasing",
                    j + 1
                )));
            }
        }
        Ok(AnglePath { coordinates })
    }

    /// `θ_j(t) = start_j + slope_j · t`.
    pub fn affine(starts: &[BigRational], slopes: &[BigRational]) -> Result<Self> {
        assert_eq!(starts.len(), slopes.len());
        let coordinates = starts
            .iter()
            .zip(slopes)
            .map(|(v0, s)| {
                vec![
                    Breakpoint::new(rat(0), v0.clone()),
                    Breakpoint::new(rat(1), v0 + s),
                ]
            })
            .collect();
        AnglePath::new(coordinates)
    }

    /// `θ_j(t) = slope_j · t`.
    pub fn linear(slopes: &[BigRational]) -> Result<Self> {
        let zeros = vec![rat(0); slopes.len()];
        AnglePath::affine(&zeros, slopes)
    }

    pub fn coordinates(&self) -> &[Vec<Breakpoint>] {
        &self.coordinates
    }

    pub fn dimension(&self) -> usize {
        self.coordinates.len()
    }

    pub fn start(&self, j: usize) -> &BigRational {
        &self.coordinates[j][0].turns
    }

    pub fn end(&self, j: usize) -> &BigRational {
        &self.coordinates[j].last().expect("nonempty").turns
    }

    /// Value of `θ_j` at time `t ∈ [0, 1]`.
    pub fn value(&self, j: usize, t: &BigRational) -> BigRational {
        let bps = &self.coordinates[j];
        let i = bps
            .windows(2)
            .position(|w| &w[1].time >= t)
            .unwrap_or(bps.len() - 2);
        let (a, b) = (&bps[i], &bps[i + 1]);
        &a.turns + (&b.turns - &a.turns) * (t - &a.time) / (&b.time - &a.time)
    }

    /// Runs `self` on `[0, ½]` and `other` on `[½, 1]`.
    pub fn concat(&self, other: &AnglePath) -> Result<AnglePath> {
        if self.dimension() != other.dimension() {
            return Err(Error::InvalidPath(
                "concatenated paths differ in dimension".into(),
            ));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let coordinates = (0..self.dimension())
            .map(|j| {
                if self.end(j) != other.start(j) {
                    return Err(Error::InvalidPath(format!(
                        "coordinate {} jumps at the junction",
                        j + 1
                    )));
                }
                let mut bps: Vec<Breakpoint> = self.coordinates[j]
                    .iter()
                    .map(|b| Breakpoint::new(&b.time * &half, b.turns.clone()))
                    .collect();
                bps.extend(
                    other.coordinates[j]
                        .iter()
                        .skip(1)
                        .map(|b| Breakpoint::new(&half + &b.time * &half, b.turns.clone())),
                );
                Ok(bps)
            })
            .collect::<Result<Vec<_>>>()?;
        AnglePath::new(coordinates)
    }

    /// Inserts extra breakpoints without changing any `θ_j`.
    pub fn refine(&self, times: &[BigRational]) -> AnglePath {
        let coordinates = (0..self.dimension())
            .map(|j| {
                let mut bps = self.coordinates[j].clone();
                for t in times {
                    if t.is_positive() && t < &rat(1) && bps.iter().all(|b| &b.time != t) {
                        bps.push(Breakpoint::new(t.clone(), self.value(j, t)));
                    }
                }
                bps.sort_by(|a, b| a.time.cmp(&b.time));
                bps
            })
            .collect();
        AnglePath { coordinates }
    }
}

/// One transversal intersection with the Maslov cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub time: BigRational,
    pub coordinate: usize,
    pub sign: i8,
    /// Crossing at `t = 0` or `t = 1`.
    pub boundary: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingReport {
    pub crossings: Vec<Crossing>,
}

impl CrossingReport {
    /// `Σ ½·sgn` over endpoint crossings plus `Σ sgn` over interior ones.
    pub fn index(&self) -> BigInt {
        self.crossings
            .iter()
            .map(|c| {
                let weight = if c.boundary { 1 } else { 2 };
                BigInt::from(weight * i64::from(c.sign))
            })
            .sum()
    }
}

fn degenerate(coordinate: usize, time: &BigRational) -> Error {
    Error::DegenerateCrossing {
        coordinate: coordinate + 1,
        time: time.to_string(),
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// All crossings of `path` with the Maslov cycle, sorted by time.
pub fn crossings(path: &AnglePath) -> Result<CrossingReport> {
    let one = rat(1);
    let mut out = Vec::new();
    for (j, bps) in path.coordinates.iter().enumerate() {
        let pieces = bps.len() - 1;
        let mut prev_sign = 0i8;
        for (i, w) in bps.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let slope = (&b.turns - &a.turns) / (&b.time - &a.time);
            let sign = sign_of(&slope);
            if sign == 0 {
                if a.turns.is_integer() {
                    return Err(degenerate(j, &a.time));
                }
                prev_sign = 0;
                continue;
            }
            let (lo, hi) = if sign > 0 {
                (&a.turns, &b.turns)
            } else {
                (&b.turns, &a.turns)
            };
            let mut k = lo.ceil().to_integer();
            let last = hi.floor().to_integer();
            while k <= last {
                let level = BigRational::from_integer(k.clone());
                let t = &a.time + (&level - &a.turns) / &slope;
                k += 1;
                if t == b.time && i + 1 < pieces {
                    continue;
                }
                if t == a.time && i > 0 && prev_sign != sign {
                    return Err(degenerate(j, &t));
                }
                let boundary = t.is_zero() || t == one;
                out.push(Crossing {
                    time: t,
                    coordinate: j,
                    sign,
                    boundary,
                });
            }
            prev_sign = sign;
        }
    }
    out.sort_by(|x, y| x.time.cmp(&y.time).then(x.coordinate.cmp(&y.coordinate)));
    Ok(CrossingReport { crossings: out })
}

/// Index of a non-degenerate path from its crossing signatures. Each
/// coordinate's crossing form has even signature, so the value is an integer.
pub fn crossing_index(path: &AnglePath) -> Result<BigInt> {
    Ok(crossings(path)?.index())
}

/// Winding number of `det` along a loop: `Σ_j (θ_j(1) − θ_j(0))`.
pub fn loop_maslov(path: &AnglePath) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for j in 0..path.dimension() {
        let delta = path.end(j) - path.start(j);
        if !delta.is_integer() {
            return Err(Error::NotALoop(j + 1));
        }
        total += delta.to_integer();
    }
    Ok(total)
}

fn check_ellipsoid(a: &[BigRational]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::InvalidEllipsoid("no axes".into()));
    }
    if a.iter().any(|x| !x.is_positive()) {
        return Err(Error::InvalidEllipsoid("axes must be positive".into()));
    }
    Ok(())
}

/// Conley–Zehnder index `(n − 1) + 2 Σ_{k≠j} ⌊a_j / a_k⌋` of the simple Reeb
/// orbit through the `j`-th axis (0-based) of the ellipsoid contact form
/// `Σ a_k (x_k dy_k − y_k dx_k)` on `S^{2n−1}`.
pub fn cz_ellipsoid_orbit(a: &[BigRational], j: usize) -> Result<BigInt> {
    check_ellipsoid(a)?;
    if j >= a.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: a.len(),
        });
    }
    let mut total = BigInt::from(a.len() - 1);
    for (k, ak) in a.iter().enumerate() {
        if k == j {
            continue;
        }
        let ratio = &a[j] / ak;
        if ratio.is_integer() {
            return Err(Error::DegenerateRatio(j, k));
        }
        total += ratio.floor().to_integer() * 2;
    }
    Ok(total)
}

/// Linearized Reeb flow on the contact plane along the `j`-th orbit, time
/// rescaled to `[0, 1]`: `θ_k(t) = (a_j / a_k)·t` for `k ≠ j`.
pub fn ellipsoid_linearized_path(a: &[BigRational], j: usize) -> Result<AnglePath> {
    check_ellipsoid(a)?;
    if j >= a.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: a.len(),
        });
    }
    let slopes: Vec<BigRational> = a
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != j)
        .map(|(_, ak)| &a[j] / ak)
        .collect();
    AnglePath::linear(&slopes)
}

/// CZ index `2(n − 1)` of the simple Reeb orbit of the round `S^{2n−1}`.
pub fn cz_round_sphere(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sphere dimension needs n >= 1".into(),
        ));
    }
    Ok(BigInt::from(2 * (n - 1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIndex {
    /// `min_j CZ(γ_j) + (n − 3)`.
    pub mi: BigInt,
    pub index_positive: bool,
    /// Orbit (0-based axis) realizing the minimum.
    pub orbit: usize,
}

/// Minimal index of the ellipsoid Reeb flow.
///
/// Only the `n` simple orbits are inspected: the `r`-fold iterate of `γ_j`
/// replaces every `⌊a_j/a_k⌋` by `⌊r·a_j/a_k⌋ ≥ ⌊a_j/a_k⌋`, so iterates never
/// undercut their simple orbit.
pub fn minimal_index(a: &[BigRational]) -> Result<MinimalIndex> {
    check_ellipsoid(a)?;
    let n = a.len();
    let mut best: Option<(BigInt, usize)> = None;
    for j in 0..n {
        let cz = cz_ellipsoid_orbit(a, j)?;
        if best.as_ref().is_none_or(|(b, _)| &cz < b) {
            best = Some((cz, j));
        }
    }
    let (cz, orbit) = best.expect("at least one axis");
    let mi = cz + BigInt::from(n as i64 - 3);
    Ok(MinimalIndex {
        index_positive: mi.is_positive(),
        mi,
        orbit,
    })
}

/// An expression `constant + n_coefficient · n` in the dimension parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineInN {
    pub constant: BigRational,
    pub n_coefficient: i64,
}

impl fmt::Display for AffineInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n_coefficient {
            0 => write!(f, "{}", self.constant),
            c => {
                let n_term = match c {
                    1 => "n".to_string(),
                    -1 => "-n".to_string(),
                    c => format!("{c}n"),
                };
                if self.constant.is_zero() {
                    f.write_str(&n_term)
                } else {
                    write!(
                        f,
                        "{} {} {}",
                        self.constant,
                        if c < 0 { "-" } else { "+" },
                        n_term.trim_start_matches('-')
                    )
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hmi {
    Value(BigRational),
    /// The singularity is not canonical; only the sign is known.
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HmiBridge {
    pub hmi: Hmi,
    /// `hmi − (n − 3)`, absent when `hmi` is only known to be negative.
    pub cz_lower_bound: Option<AffineInN>,
}

/// Highest minimal index of the link from the minimal discrepancy:
/// `hmi = 2·md` when `md ≥ 0`, and merely negative otherwise.
pub fn hmi_md_bridge(md: &BigRational) -> HmiBridge {
    if md.is_negative() {
        return HmiBridge {
            hmi: Hmi::Negative,
            cz_lower_bound: None,
        };
    }
    let hmi = md * rat(2);
    HmiBridge {
        cz_lower_bound: Some(AffineInN {
            constant: &hmi + rat(3),
            n_coefficient: -1,
        }),
        hmi: Hmi::Value(hmi),
    }
}
