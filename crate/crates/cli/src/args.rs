use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Parser, Debug)]
#[command(
    name = "singlab",
    version,
    about = "Exact invariants of Brieskorn-Pham singularities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Exponents {
    /// Comma-separated exponents a_1,...,a_k, each at least 2.
    #[arg(long, short = 'e', required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(2..))]
    pub exponents: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct Window {
    /// Degree window LO:HI.
    #[arg(long, short = 'w', allow_hyphen_values = true, value_parser = parse_window)]
    pub window: (i64, i64),

    /// Largest raw x0 exponent to enumerate; defaults to the completeness bound.
    #[arg(long)]
    pub b0_max: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weights, degree and amplitude of a diagonal or invertible-matrix polynomial.
    Weights {
        #[arg(
            long,
            short = 'e',
            value_delimiter = ',',
            value_parser = clap::value_parser!(u64).range(2..),
            conflicts_with = "matrix",
            required_unless_present = "matrix"
        )]
        exponents: Vec<u64>,
        /// Exponent matrix, rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_matrix)]
        matrix: Option<MatrixArg>,
    },
    /// Milnor number.
    Milnor(Exponents),
    /// Monomial basis of the Jacobian ring.
    Jacobian {
        #[command(flatten)]
        exponents: Exponents,
        /// 1-based variables to keep; all of them by default.
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        subset: Vec<u64>,
    },
    /// Integral monodromy matrix on middle homology.
    Monodromy(Exponents),
    /// Characteristic polynomial of the monodromy as a product of cyclotomic factors.
    Charpoly(Exponents),
    /// Topology of the link.
    Link(Exponents),
    /// Maslov index of a piecewise-linear angle path read from a JSON file.
    Maslov { path: PathBuf },
    /// Conley-Zehnder index of an ellipsoid Reeb orbit or of the round sphere.
    Cz {
        /// Ellipsoid axes as rationals p/q.
        #[arg(
            long,
            value_delimiter = ',',
            value_parser = parse_rational,
            required_unless_present = "sphere",
            conflicts_with = "sphere"
        )]
        axes: Vec<BigRational>,
        /// 1-based orbit index.
        #[arg(long, requires = "axes")]
        orbit: Option<usize>,
        /// Complex dimension n of the round sphere S^(2n-1).
        #[arg(long)]
        sphere: Option<u64>,
    },
    /// Minimal index of an ellipsoid contact form.
    Mi {
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_rational)]
        axes: Vec<BigRational>,
    },
    /// Highest minimal index from a minimal discrepancy.
    Bridge {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        md: BigRational,
    },
    /// Equivariant Hochschild cohomology in a degree window.
    Hh {
        #[command(flatten)]
        exponents: Exponents,
        #[command(flatten)]
        window: Window,
    },
    /// Bidegrees of the generators in the given degrees.
    Bigraded {
        #[command(flatten)]
        exponents: Exponents,
        /// Comma-separated degrees.
        #[arg(
            long,
            required = true,
            allow_hyphen_values = true,
            value_delimiter = ','
        )]
        degrees: Vec<i64>,
        /// Rescaling factor p/q; defaults to the dimension n.
        #[arg(long, value_parser = parse_rational)]
        scale: Option<BigRational>,
        #[arg(long)]
        b0_max: Option<u64>,
    },
    /// Compare the negative-degree bigradings of two singularities.
    Distinguish {
        #[command(flatten)]
        exponents: Exponents,
        /// Exponents of the second singularity.
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(2..))]
        against: Vec<u64>,
        #[command(flatten)]
        window: Window,
    },
    /// Symplectic cohomology of the Milnor fiber, when Hochschild cohomology computes it.
    Sh {
        #[command(flatten)]
        exponents: Exponents,
        #[command(flatten)]
        window: Window,
    },
    /// Coxeter number of a du Val type, with the small-resolution verdict for t^m.
    Coxeter {
        /// A<n>, D<n>, E6, E7 or E8.
        #[arg(long = "type")]
        du_val: String,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Branch count and small resolution of x^2 + y^2 + g(t, z).
    Katz {
        /// Factors of g separated by ',': t, z or z^p+t^q.
        #[arg(long, required = true, value_delimiter = ',')]
        factors: Vec<String>,
    },
    /// Link of x1^2 + x2^2 + x3^m + x4^n.
    Fermat { m: u64, n: u64 },
    /// Three computations of the link's second Betti number for (2,2,m,n).
    Crosscheck(Exponents),
}

#[derive(Clone, Debug)]
pub struct MatrixArg(pub Vec<Vec<BigInt>>);

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("cannot parse rational '{s}'");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("window '{s}' is not LO:HI"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{lo}'"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{hi}'"))?;
    if lo > hi {
        return Err(format!("window {lo}:{hi} is empty"));
    }
    Ok((lo, hi))
}

fn parse_matrix(s: &str) -> Result<MatrixArg, String> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<BigInt>()
                        .map_err(|_| format!("cannot parse '{}'", x.trim()))
                })
                .collect()
        })
        .collect::<Result<_, _>>()
        .map(MatrixArg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("3/6").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_rational(" -4 ").unwrap(),
            BigRational::from_integer((-4).into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn windows_and_matrices() {
        assert_eq!(parse_window("-10:5").unwrap(), (-10, 5));
        assert!(parse_window("5:-10").is_err());
        assert!(parse_window("5").is_err());
        let m = parse_matrix("2,0;1,-3").unwrap();
        assert_eq!(m.0[1][1], BigInt::from(-3));
    }

    #[test]
    fn grammar_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
