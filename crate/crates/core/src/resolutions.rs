//! Small-resolution criteria for compound du Val threefold points and the
//! link topology of `x_1^2 + x_2^2 + x_3^m + x_4^n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monodromy::{char_poly, smith_of_h_minus_id, LinkClassification};
use crate::singularity::DiagonalSingularity;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DuValType {
    A(u64),
    D(u64),
    E6,
    E7,
    E8,
}

impl DuValType {
    pub fn a(n: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDuVal(format!("A{n}")));
        }
        Ok(DuValType::A(n))
    }

    pub fn d(n: u64) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidDuVal(format!("D{n}")));
        }
        Ok(DuValType::D(n))
    }
}

impl fmt::Display for DuValType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DuValType::A(n) => write!(f, "A{n}"),
            DuValType::D(n) => write!(f, "D{n}"),
            DuValType::E6 => f.write_str("E6"),
            DuValType::E7 => f.write_str("E7"),
            DuValType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for DuValType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDuVal(s.to_string());
        let t = s.trim();
        let (head, tail) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let n: u64 = tail.parse().map_err(|_| bad())?;
        match (head.to_ascii_uppercase().as_str(), n) {
            ("A", n) => DuValType::a(n),
            ("D", n) => DuValType::d(n),
            ("E", 6) => Ok(DuValType::E6),
            ("E", 7) => Ok(DuValType::E7),
            ("E", 8) => Ok(DuValType::E8),
            _ => Err(bad()),
        }
    }
}

pub fn coxeter_number(t: DuValType) -> u64 {
    match t {
        DuValType::A(n) => n + 1,
        DuValType::D(n) => 2 * n - 2,
        DuValType::E6 => 12,
        DuValType::E7 => 18,
        DuValType::E8 => 30,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallResolutionVerdict {
    SmallResolution,
    NoSmallResolution,
    SmoothTotalSpace,
}

impl fmt::Display for SmallResolutionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallResolutionVerdict::SmallResolution => "small resolution",
            SmallResolutionVerdict::NoSmallResolution => "no small resolution",
            SmallResolutionVerdict::SmoothTotalSpace => "smooth total space",
        })
    }
}

/// Small resolutions of the threefold `f(x, y, z) + t^m` built from a du Val
/// surface `f` of type `t`: they exist exactly when the Coxeter number divides `m`.
pub fn brieskorn_small_res(t: DuValType, m: u64) -> Result<SmallResolutionVerdict> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(if m == 1 {
        SmallResolutionVerdict::SmoothTotalSpace
    } else if m.is_multiple_of(coxeter_number(t)) {
        SmallResolutionVerdict::SmallResolution
    } else {
        SmallResolutionVerdict::NoSmallResolution
    })
}

/// Factor of a plane curve germ `g(t, z)`. `Binomial { p, q }` stands for
/// `z^p + c·t^q` with a generic nonzero `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaneCurveFactor {
    VarT,
    VarZ,
    Binomial { p: u64, q: u64 },
}

impl FromStr for PlaneCurveFactor {
    type Err = Error;

    /// Accepts `t`, `z` and binomials written `z^p+t^q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unrecognized curve factor '{s}'"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "t" => Ok(PlaneCurveFactor::VarT),
            "z" => Ok(PlaneCurveFactor::VarZ),
            other => {
                let (zp, tq) = other.split_once('+').ok_or_else(bad)?;
                let power = |term: &str, var: char| -> Result<u64> {
                    let rest = term.strip_prefix(var).ok_or_else(bad)?;
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?
                    };
                    if e == 0 {
                        return Err(bad());
                    }
                    Ok(e)
                };
                Ok(PlaneCurveFactor::Binomial {
                    p: power(zp, 'z')?,
                    q: power(tq, 't')?,
                })
            }
        }
    }
}

impl fmt::Display for PlaneCurveFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneCurveFactor::VarT => f.write_str("t"),
            PlaneCurveFactor::VarZ => f.write_str("z"),
            PlaneCurveFactor::Binomial { p, q } => write!(f, "(z^{p} + c t^{q})"),
        }
    }
}

/// Number of analytic branches at the origin. Factors are compared by shape,
/// so two binomials with equal `(p, q)` count as a repeated factor even though
/// distinct coefficients would give an isolated curve.
pub fn katz_branch_count(factors: &[PlaneCurveFactor]) -> Result<u64> {
    for (i, f) in factors.iter().enumerate() {
        if let PlaneCurveFactor::Binomial { p, q } = f {
            if *p == 0 || *q == 0 {
                return Err(Error::InvalidArgument(format!(
                    "binomial exponents must be positive: {f}"
                )));
            }
        }
        if factors[..i].contains(f) {
            return Err(Error::NonIsolated);
        }
    }
    Ok(factors
        .iter()
        .map(|f| match f {
            PlaneCurveFactor::VarT | PlaneCurveFactor::VarZ => 1,
            PlaneCurveFactor::Binomial { p, q } => p.gcd(q),
        })
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KatzReport {
    pub branches: u64,
    /// Length of the exceptional chain of rational curves.
    pub exceptional_curves: u64,
    /// `false` when no exceptional locus is needed.
    pub admits: bool,
}

/// `x² + y² + g(t, z) = 0` with `b` branches of `g` is `cA_{b−1}` and has a
/// small resolution with a chain of `b − 1` exceptional curves.
pub fn katz_small_res(factors: &[PlaneCurveFactor]) -> Result<KatzReport> {
    let branches = katz_branch_count(factors)?;
    let exceptional_curves = branches.saturating_sub(1);
    Ok(KatzReport {
        branches,
        exceptional_curves,
        admits: exceptional_curves >= 1,
    })
}

/// Link of `x_1^2 + x_2^2 + x_3^m + x_4^n`: `#ℓ (S²×S³)` with `ℓ = gcd(m, n) − 1`.
pub fn fermat_link(m: u64, n: u64) -> Result<LinkClassification> {
    if m < 2 || n < 2 {
        return Err(Error::ExponentTooSmall(m.min(n)));
    }
    let l = (m.gcd(&n) - 1) as usize;
    Ok(if l == 0 {
        LinkClassification::Sphere(5)
    } else {
        LinkClassification::ConnectedSumS2xS3(l)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub gcd_rule: u64,
    /// Multiplicity of the eigenvalue 1 of the monodromy.
    pub eigenvalue_one: u64,
    /// Free rank of the cokernel of `M − I`.
    pub snf_free_rank: u64,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.gcd_rule == self.eigenvalue_one && self.eigenvalue_one == self.snf_free_rank
    }

    /// The common value of ℓ, or `None` on a discrepancy.
    pub fn ell(&self) -> Option<u64> {
        self.agree().then_some(self.gcd_rule)
    }
}

/// Computes ℓ for `(2, 2, m, n)` by the gcd rule, from the characteristic
/// polynomial and from the Smith form of `M − I`.
pub fn cross_check(s: &DiagonalSingularity, limits: &Limits) -> Result<CrossCheck> {
    let e = s.exponents();
    if e.len() != 4 || e[0] != 2 || e[1] != 2 {
        return Err(Error::InvalidArgument(format!(
            "cross check needs exponents (2,2,m,n), got {s}"
        )));
    }
    let gcd_rule = e[2].gcd(&e[3]) - 1;
    let eigenvalue_one = char_poly(s, limits)?.multiplicity(1);
    let snf_free_rank = smith_of_h_minus_id(s, limits)?.cokernel_free_rank() as u64;
    Ok(CrossCheck {
        gcd_rule,
        eigenvalue_one,
        snf_free_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use PlaneCurveFactor::*;

    #[test]
    fn coxeter_table() {
        assert_eq!(coxeter_number(DuValType::A(1)), 2);
        assert_eq!(coxeter_number(DuValType::A(5)), 6);
        assert_eq!(coxeter_number(DuValType::D(4)), 6);
        assert_eq!(coxeter_number(DuValType::D(7)), 12);
        assert_eq!(coxeter_number(DuValType::E6), 12);
        assert_eq!(coxeter_number(DuValType::E7), 18);
        assert_eq!(coxeter_number(DuValType::E8), 30);
    }

    #[test]
    fn parsing_types() {
        assert_eq!("A3".parse::<DuValType>().unwrap(), DuValType::A(3));
        assert_eq!("d5".parse::<DuValType>().unwrap(), DuValType::D(5));
        assert_eq!("E8".parse::<DuValType>().unwrap(), DuValType::E8);
        assert!("D3".parse::<DuValType>().is_err());
        assert!("A0".parse::<DuValType>().is_err());
        assert!("E9".parse::<DuValType>().is_err());
        assert_eq!(
            "z^3+t^6".parse::<PlaneCurveFactor>().unwrap(),
            Binomial { p: 3, q: 6 }
        );
        assert_eq!(
            "z + t^4".parse::<PlaneCurveFactor>().unwrap(),
            Binomial { p: 1, q: 4 }
        );
        assert!("z^0+t".parse::<PlaneCurveFactor>().is_err());
        assert!("t^2+z".parse::<PlaneCurveFactor>().is_err());
    }

    #[test]
    fn brieskorn_verdicts() {
        use SmallResolutionVerdict::*;
        assert_eq!(
            brieskorn_small_res(DuValType::A(1), 2).unwrap(),
            SmallResolution
        );
        for n in 1..6 {
            for k in 1..4 {
                assert_eq!(
                    brieskorn_small_res(DuValType::A(n), k * (n + 1)).unwrap(),
                    SmallResolution
                );
            }
        }
        assert_eq!(
            brieskorn_small_res(DuValType::E6, 10).unwrap(),
            NoSmallResolution
        );
        assert_eq!(
            brieskorn_small_res(DuValType::E8, 1).unwrap(),
            SmoothTotalSpace
        );
        assert!(brieskorn_small_res(DuValType::E8, 0).is_err());
    }

    #[test]
    fn katz_families() {
        for n in 2..7u64 {
            for k in 1..4 {
                let a = katz_small_res(&[Binomial {
                    p: n + 1,
                    q: k * (n + 1),
                }])
                .unwrap();
                assert_eq!(a.exceptional_curves, n);
                let b = katz_small_res(&[
                    VarZ,
                    VarT,
                    Binomial {
                        p: n - 1,
                        q: k * (n - 1),
                    },
                ])
                .unwrap();
                assert_eq!(b.exceptional_curves, n);
            }
        }
        let cusp = katz_small_res(&[Binomial { p: 2, q: 3 }]).unwrap();
        assert_eq!(
            (cusp.branches, cusp.exceptional_curves, cusp.admits),
            (1, 0, false)
        );
        assert_eq!(katz_branch_count(&[VarT, VarT]), Err(Error::NonIsolated));
        assert_eq!(
            katz_branch_count(&[Binomial { p: 2, q: 4 }, Binomial { p: 2, q: 4 }]),
            Err(Error::NonIsolated)
        );
    }

    #[test]
    fn fermat_links() {
        assert_eq!(
            fermat_link(2, 6).unwrap(),
            LinkClassification::ConnectedSumS2xS3(1)
        );
        assert_eq!(fermat_link(3, 5).unwrap(), LinkClassification::Sphere(5));
        assert_eq!(
            fermat_link(4, 6).unwrap(),
            LinkClassification::ConnectedSumS2xS3(1)
        );
        assert_eq!(
            fermat_link(6, 12).unwrap(),
            LinkClassification::ConnectedSumS2xS3(5)
        );
        assert!(fermat_link(1, 5).is_err());
    }

    #[test]
    fn cross_checks() {
        let l = Limits::default();
        let r = cross_check(&DiagonalSingularity::new(vec![2, 2, 4, 6]).unwrap(), &l).unwrap();
        assert_eq!(r.ell(), Some(1));
        for k in 1..5 {
            let r = cross_check(&DiagonalSingularity::a1(k).unwrap(), &l).unwrap();
            assert_eq!(r.ell(), Some(1));
        }
        let r = cross_check(&DiagonalSingularity::new(vec![2, 2, 3, 5]).unwrap(), &l).unwrap();
        assert_eq!(r.ell(), Some(0));
        assert!(cross_check(&DiagonalSingularity::new(vec![2, 3, 5]).unwrap(), &l).is_err());
    }
}
