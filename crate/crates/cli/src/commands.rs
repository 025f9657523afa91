use std::fs;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use singlab::hochschild::{
    bigraded_table, contact_distinguish, hh_dimensions, sh_via_hh, Distinction, GammaMonomial,
    HHTable, ShVerdict,
};
use singlab::maslov::{
    crossings, cz_ellipsoid_orbit, cz_round_sphere, hmi_md_bridge, loop_maslov, minimal_index,
    AnglePath, Breakpoint, Hmi,
};
use singlab::monodromy::{
    char_poly, classify_link, det_h_minus_id, integral_monodromy, LinkClassification,
};
use singlab::resolutions::{
    brieskorn_small_res, coxeter_number, cross_check, fermat_link, katz_small_res, DuValType,
    PlaneCurveFactor,
};
use singlab::singularity::{amplitude, jacobian_basis, solve_weights};
use singlab::{DiagonalSingularity, IntegerMatrix, InvertibleMatrixSingularity, Limits};

use crate::args::{parse_rational, Command, MatrixArg};
use crate::report::{Report, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] singlab::Error),
    #[error("{0}")]
    Input(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn ratio(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn diagonal(exponents: &[u64]) -> Result<DiagonalSingularity> {
    Ok(DiagonalSingularity::new(exponents.to_vec())?)
}

pub fn run(command: Command) -> Result<Report> {
    let limits = Limits::default();
    match command {
        Command::Weights { exponents, matrix } => weights(&exponents, matrix),
        Command::Milnor(e) => {
            let s = diagonal(&e.exponents)?;
            Ok(Report::new("milnor")
                .input("exponents", list(&e.exponents))
                .result("milnor_number", big(&s.milnor_number())))
        }
        Command::Jacobian { exponents, subset } => {
            let s = diagonal(&exponents.exponents)?;
            let vars: Vec<usize> = if subset.is_empty() {
                (0..s.num_vars()).collect()
            } else {
                subset.iter().map(|&i| i as usize - 1).collect()
            };
            let basis = jacobian_basis(&s, &vars)?;
            let names: Vec<Value> = basis.iter().map(|m| Value::String(m.to_string())).collect();
            let vars_1: Vec<u64> = vars.iter().map(|&i| i as u64 + 1).collect();
            Ok(Report::new("jacobian")
                .input("exponents", list(&exponents.exponents))
                .input("variables", list(&vars_1))
                .result("dimension", basis.len())
                .result("basis", names))
        }
        Command::Monodromy(e) => {
            let s = diagonal(&e.exponents)?;
            let m = integral_monodromy(&s, &limits)?;
            let mut t = Table {
                headers: vec!["row", "entries"],
                ..Table::default()
            };
            for (i, row) in m.to_rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                t.rows.push(vec![(i + 1).to_string(), cells.join(" ")]);
                t.json.push(Value::Array(row.iter().map(big).collect()));
            }
            Ok(Report::new("monodromy")
                .input("exponents", list(&e.exponents))
                .result("size", m.rows())
                .table("matrix", t))
        }
        Command::Charpoly(e) => {
            let s = diagonal(&e.exponents)?;
            let cp = char_poly(&s, &limits)?;
            let factors: Vec<Value> = cp
                .multiplicities()
                .iter()
                .map(|(n, k)| json!({ "order": n, "multiplicity": k }))
                .collect();
            let coefficients: Vec<Value> = cp.expand().iter().map(big).collect();
            Ok(Report::new("charpoly")
                .input("exponents", list(&e.exponents))
                .result("factorization", cp.to_string())
                .result("factors", factors)
                .result("coefficients", coefficients)
                .result("degree", cp.degree())
                .result("det_h_minus_id", big(&det_h_minus_id(&s, &limits)?)))
        }
        Command::Link(e) => {
            let s = diagonal(&e.exponents)?;
            let r = classify_link(&s, &limits)?;
            let mut report = Report::new("link")
                .input("exponents", list(&e.exponents))
                .result("classification", r.classification.to_string())
                .result("det_h_minus_id", big(&r.det_h_minus_id))
                .result("char_poly", r.char_poly.to_string());
            if let Some(snf) = &r.smith {
                let diag: Vec<Value> = snf.diagonal.iter().map(big).collect();
                report = report
                    .result("smith_diagonal", diag)
                    .result("free_rank", snf.cokernel_free_rank())
                    .result("torsion", snf.torsion().iter().map(big).collect::<Vec<_>>());
            }
            Ok(report)
        }
        Command::Maslov { path } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let p = parse_path(&text)?;
            maslov(&p, &path.display().to_string())
        }
        Command::Cz {
            axes,
            orbit,
            sphere,
        } => {
            if let Some(n) = sphere {
                return Ok(Report::new("cz")
                    .input("sphere_dimension", n)
                    .result("cz", big(&cz_round_sphere(n)?)));
            }
            let axes_text = axes
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let report = Report::new("cz").input("axes", axes_text);
            match orbit {
                Some(j) if j >= 1 => {
                    let cz = cz_ellipsoid_orbit(&axes, j - 1)?;
                    Ok(report.input("orbit", j).result("cz", big(&cz)))
                }
                Some(_) => Err(CliError::Input("orbits are numbered from 1".into())),
                None => Ok(report.table("orbits", orbit_table(&axes)?)),
            }
        }
        Command::Mi { axes } => {
            let mi = minimal_index(&axes)?;
            let axes_text = axes
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok(Report::new("mi")
                .input("axes", axes_text)
                .result("mi", big(&mi.mi))
                .result("index_positive", mi.index_positive)
                .result("minimizing_orbit", mi.orbit + 1)
                .table("orbits", orbit_table(&axes)?))
        }
        Command::Bridge { md } => {
            let b = hmi_md_bridge(&md);
            let hmi = match &b.hmi {
                Hmi::Value(v) => ratio(v),
                Hmi::Negative => Value::String("negative".into()),
            };
            let bound = b
                .cz_lower_bound
                .map_or(Value::Null, |e| Value::String(e.to_string()));
            Ok(Report::new("bridge")
                .input("md", md.to_string())
                .result("hmi", hmi)
                .result("cz_lower_bound", bound)
                .note("hmi = 2 md holds for numerically Q-Gorenstein germs with md >= 0"))
        }
        Command::Hh { exponents, window } => {
            let s = diagonal(&exponents.exponents)?;
            let t = hh_dimensions(&s, window.window, window.b0_max, &limits)?;
            Ok(hh_report("hh", &exponents.exponents, &t))
        }
        Command::Bigraded {
            exponents,
            degrees,
            scale,
            b0_max,
        } => {
            let s = diagonal(&exponents.exponents)?;
            let b = bigraded_table(&s, &degrees, scale, b0_max, &limits)?;
            let mut t = Table {
                headers: vec!["degree", "b0", "bidegree"],
                ..Table::default()
            };
            for (d, entries) in &b.entries {
                for e in entries {
                    t.rows.push(vec![
                        d.to_string(),
                        e.b0.to_string(),
                        format!("({}, {})", e.first, e.second),
                    ]);
                    t.json.push(json!({
                        "degree": d,
                        "b0": e.b0,
                        "bidegree": [ratio(&e.first), ratio(&e.second)],
                    }));
                }
            }
            let degrees_text = degrees
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            Ok(Report::new("bigraded")
                .input("exponents", list(&exponents.exponents))
                .input("degrees", degrees_text)
                .result("scale", ratio(&b.scale))
                .table("bidegrees", t)
                .complete(b.complete))
        }
        Command::Distinguish {
            exponents,
            against,
            window,
        } => {
            let s1 = diagonal(&exponents.exponents)?;
            let s2 = diagonal(&against)?;
            let r = contact_distinguish(&s1, &s2, window.window, window.b0_max, &limits)?;
            let (verdict, witness) = match r.verdict {
                Distinction::Distinct(d) => (format!("distinct at degree {d}"), Value::from(d)),
                Distinction::IndistinguishableInWindow => {
                    ("indistinguishable in window".to_string(), Value::Null)
                }
            };
            let compared = r
                .degrees_compared
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            Ok(Report::new("distinguish")
                .input("exponents", list(&exponents.exponents))
                .input("against", list(&against))
                .input("window", format!("{}:{}", window.window.0, window.window.1))
                .result("verdict", verdict)
                .result("witness_degree", witness)
                .result("lambda", r.lambda.as_ref().map_or(Value::Null, ratio))
                .result("degrees_compared", compared)
                .complete(r.complete)
                .note(r.license))
        }
        Command::Sh { exponents, window } => {
            let s = diagonal(&exponents.exponents)?;
            match sh_via_hh(&s, window.window, window.b0_max, &limits)? {
                ShVerdict::Symplectic { table, note } => {
                    Ok(hh_report("sh", &exponents.exponents, &table)
                        .result("status", "accepted")
                        .note(note))
                }
                ShVerdict::Refused(reason) => Ok(Report::new("sh")
                    .input("exponents", list(&exponents.exponents))
                    .result("status", "refused")
                    .result("reason", reason.to_string())),
            }
        }
        Command::Coxeter { du_val, m } => {
            let t: DuValType = du_val.parse()?;
            let mut report = Report::new("coxeter")
                .input("type", t.to_string())
                .result("coxeter_number", coxeter_number(t));
            if let Some(m) = m {
                report = report
                    .input("m", m)
                    .result("verdict", brieskorn_small_res(t, m)?.to_string());
            }
            Ok(report)
        }
        Command::Katz { factors } => {
            let parsed = factors
                .iter()
                .map(|f| f.parse::<PlaneCurveFactor>())
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let r = katz_small_res(&parsed)?;
            let mut report = Report::new("katz")
                .input(
                    "factors",
                    parsed
                        .iter()
                        .map(|f| f.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                )
                .result("branches", r.branches)
                .result("exceptional_curves", r.exceptional_curves)
                .result("small_resolution", r.admits)
                .note("binomial factors are compared by shape with generic coefficients");
            if !r.admits {
                report = report.note("no exceptional locus needed");
            }
            Ok(report)
        }
        Command::Fermat { m, n } => {
            let c = fermat_link(m, n)?;
            let ell = match c {
                LinkClassification::ConnectedSumS2xS3(l) => l,
                _ => 0,
            };
            Ok(Report::new("fermat")
                .input("m", m)
                .input("n", n)
                .result("ell", ell)
                .result("classification", c.to_string()))
        }
        Command::Crosscheck(e) => {
            let s = diagonal(&e.exponents)?;
            let r = cross_check(&s, &limits)?;
            Ok(Report::new("crosscheck")
                .input("exponents", list(&e.exponents))
                .result("gcd_rule", r.gcd_rule)
                .result("eigenvalue_one", r.eigenvalue_one)
                .result("snf_free_rank", r.snf_free_rank)
                .result("agree", r.agree()))
        }
    }
}

fn weights(exponents: &[u64], matrix: Option<MatrixArg>) -> Result<Report> {
    let (s, report) = match matrix {
        Some(MatrixArg(rows)) => {
            let text = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect::<Vec<_>>()
                .join(";");
            let m = IntegerMatrix::from_rows(&rows)?;
            (
                InvertibleMatrixSingularity::new(m)?,
                Report::new("weights").input("matrix", text),
            )
        }
        None => (
            InvertibleMatrixSingularity::from(&diagonal(exponents)?),
            Report::new("weights").input("exponents", list(exponents)),
        ),
    };
    let ws = solve_weights(&s)?;
    let amp = amplitude(&ws);
    Ok(report
        .result("weights", ws.weights.iter().map(big).collect::<Vec<_>>())
        .result("degree", big(&ws.degree))
        .result("amplitude", big(&amp.value))
        .result("class", amp.class.to_string()))
}

fn orbit_table(axes: &[BigRational]) -> Result<Table> {
    let mut t = Table {
        headers: vec!["orbit", "axis", "cz"],
        ..Table::default()
    };
    for (j, a) in axes.iter().enumerate() {
        let cz = cz_ellipsoid_orbit(axes, j)?;
        t.rows
            .push(vec![(j + 1).to_string(), a.to_string(), cz.to_string()]);
        t.json
            .push(json!({ "orbit": j + 1, "axis": ratio(a), "cz": big(&cz) }));
    }
    Ok(t)
}

/// Reads `[[["t", "v"], ...], ...]`: one list of (time, turns) pairs per coordinate.
pub fn parse_path(text: &str) -> Result<AnglePath> {
    let bad = |msg: &str| CliError::Input(format!("invalid angle path: {msg}"));
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let coords = doc
        .as_array()
        .ok_or_else(|| bad("expected a list of coordinates"))?;
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        let pairs = c
            .as_array()
            .ok_or_else(|| bad("expected a list of breakpoints"))?;
        let mut bps = Vec::with_capacity(pairs.len());
        for p in pairs {
            let pair = p
                .as_array()
                .filter(|v| v.len() == 2)
                .ok_or_else(|| bad("expected [time, turns] pairs"))?;
            let field = |v: &Value| -> Result<BigRational> {
                let s = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() => n.to_string(),
                    _ => return Err(bad("values must be \"p/q\" strings")),
                };
                parse_rational(&s).map_err(|e| bad(&e))
            };
            bps.push(Breakpoint::new(field(&pair[0])?, field(&pair[1])?));
        }
        out.push(bps);
    }
    Ok(AnglePath::new(out)?)
}

fn maslov(p: &AnglePath, source: &str) -> Result<Report> {
    let report = crossings(p)?;
    let mut t = Table {
        headers: vec!["time", "coordinate", "sign", "endpoint"],
        ..Table::default()
    };
    for c in &report.crossings {
        t.rows.push(vec![
            c.time.to_string(),
            (c.coordinate + 1).to_string(),
            format!("{:+}", c.sign),
            c.boundary.to_string(),
        ]);
        t.json.push(json!({
            "time": ratio(&c.time),
            "coordinate": c.coordinate + 1,
            "sign": c.sign,
            "endpoint": c.boundary,
        }));
    }
    let winding = loop_maslov(p).ok().map_or(Value::Null, |w| big(&w));
    Ok(Report::new("maslov")
        .input("path", source)
        .input("coordinates", p.dimension())
        .result("index", big(&report.index()))
        .result("loop_winding", winding)
        .table("crossings", t))
}

fn generator_json(g: &GammaMonomial) -> Value {
    json!({
        "gamma": g.gamma.residues(),
        "type": g.mtype.to_string(),
        "monomial": g.to_string(),
        "exponents": g.exponents,
        "b0": g.b0(),
        "x0_raw": g.x0_raw,
        "weight": g.weight,
        "negativity": g.negativity,
    })
}

fn hh_report(command: &'static str, exponents: &[u64], table: &HHTable) -> Report {
    let mut t = Table {
        headers: vec!["degree", "dim", "generators"],
        ..Table::default()
    };
    for (&d, &dim) in table.dimensions.iter().rev() {
        let gens = table.generators_in(d);
        let text: Vec<String> = gens
            .iter()
            .map(|g| format!("{} {}: {}", g.gamma, g.mtype, g))
            .collect();
        t.rows
            .push(vec![d.to_string(), dim.to_string(), text.join("; ")]);
        t.json.push(json!({
            "degree": d,
            "dimension": dim,
            "generators": gens.iter().map(generator_json).collect::<Vec<_>>(),
        }));
    }
    Report::new(command)
        .input("exponents", list(exponents))
        .input("window", format!("{}:{}", table.window.0, table.window.1))
        .result("b0_max", table.b0_max)
        .result(
            "completeness_bound",
            table.completeness_bound.map_or(Value::Null, Value::from),
        )
        .table("degrees", t)
        .complete(table.complete)
}
