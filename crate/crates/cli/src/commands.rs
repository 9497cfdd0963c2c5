use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use tsi_core::numerics::{fd_eigensolve, round_rational, round_sqrt2, sample, sample_mode, NumericGrid, Tolerances};
use tsi_core::okamoto::okamoto;
use tsi_core::painleve::{backlund, identify, rational_solution, residual_numerator, BacklundMap, Family};
use tsi_core::ring::json::{parse_rational, rational_to_string};
use tsi_core::rootcount::{predicted_mode_count, predicted_okamoto_count, sturm_count};
use tsi_core::spectral::{potential, spectrum, ModeFunction};
use tsi_core::ttrr::{ode_residual, ttrr_sequence};
use tsi_core::verify::{run_verify, Suite, VerifySuiteConfig};
use tsi_core::wronsk::{
    exceptional_hermite, index_set, mode_index, susy_chain_potential, wronskian_mode, wronskian_potential,
    xhermite_from_ttrr, PartitionIndex, PotentialForm,
};
use tsi_core::{Error, ExactPoly, RationalFn, SqrtTwoScalar};

use crate::{
    Cli, Command, ExportArgs, ExportFormat, ExportKind, ModeIndex, PivArgs, PlotArgs, PlotWhat, PolyIndices,
    PolySource, PotentialArgs, PotentialVia, SampleRange, SpectrumArgs, TtrrArgs, VerifyArgs, XhermiteVia, ZerosArgs,
};

/// Bound on the index search when naming the image of a Bäcklund map.
const IDENTIFY_BOUND: i64 = 12;

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let out = match &cli.command {
        Command::Okamoto(ix) => json_text(cli, &okamoto_json(ix.m, ix.n)?),
        Command::Piv(args) => json_text(cli, &piv_json(args)?),
        Command::Potential(args) => potential_cmd(cli, args)?,
        Command::Modes(ix) => json_text(cli, &mode_json(&mode(ix.k.into(), ix.j, ix.n.into())?)),
        Command::Ttrr(args) => json_text(cli, &ttrr_json(args)?),
        Command::Xhermite(args) => json_text(cli, &xhermite_json(&args.index, args.via)?),
        Command::Zeros(args) => json_text(cli, &zeros_json(args)?),
        Command::Spectrum(args) => json_text(cli, &spectrum_json(args)?),
        Command::PlotData(args) => plot_csv(args)?,
        Command::Verify(args) => return verify_cmd(cli, args),
        Command::Export(args) => return export_cmd(cli, args),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn json_text(cli: &Cli, v: &impl Serialize) -> String {
    let mut s = if cli.pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("values built here always serialize");
    s.push('\n');
    s
}

fn csv_text(rows: &[(f64, f64)]) -> String {
    let mut s = String::from("x,value\n");
    for (x, v) in rows {
        writeln!(s, "{x:.16e},{v:.16e}").expect("writing to a String");
    }
    s
}

/// The coefficient schema of `p` with `degree` and the given fields added.
fn poly_json(p: &ExactPoly, extra: Value) -> Value {
    let mut obj = match serde_json::to_value(p).expect("polynomials serialize") {
        Value::Object(o) => o,
        _ => unreachable!("polynomials serialize as objects"),
    };
    obj.insert("degree".into(), json!(p.degree()));
    if let Value::Object(extra) = extra {
        obj.extend(extra);
    }
    Value::Object(obj)
}

fn okamoto_json(m: i64, n: i64) -> Result<Value> {
    let q = okamoto(m, n)?;
    Ok(poly_json(&q, json!({ "index": [m, n] })))
}

fn mode(k: i64, j: u8, n: i64) -> Result<ModeFunction> {
    let mut seq = ttrr_sequence(k, j, n as usize)?;
    Ok(seq.swap_remove(n as usize))
}

fn mode_json(m: &ModeFunction) -> Value {
    poly_json(
        &m.poly,
        json!({ "k": m.k, "j": m.j, "n": m.n, "energy": rational_to_string(&m.energy) }),
    )
}

fn piv_json(args: &PivArgs) -> Result<Value> {
    let family = Family::from_index(args.family).ok_or_else(|| anyhow!("family must be 1, 2 or 3"))?;
    let mut sol = rational_solution(family, args.m, args.n)?;
    let mut obj = Map::new();
    if let Some(map) = &args.backlund {
        let map: BacklundMap = map.parse()?;
        sol = backlund(&sol, map)?;
        obj.insert("backlund".into(), json!(map.to_string()));
        let image = identify(&sol, IDENTIFY_BOUND).map(|(f, m, n)| json!({ "family": f.index(), "m": m, "n": n }));
        obj.insert("image".into(), image.unwrap_or(Value::Null));
    }
    let residual = residual_numerator(&sol)?;
    obj.insert("w".into(), serde_json::to_value(&sol.w)?);
    obj.insert("alpha".into(), json!(rational_to_string(&sol.alpha)));
    obj.insert("beta".into(), json!(rational_to_string(&sol.beta)));
    obj.insert("residual_zero".into(), json!(residual.is_zero()));
    if args.residual {
        obj.insert("residual".into(), serde_json::to_value(&residual)?);
    }
    Ok(Value::Object(obj))
}

fn potential_fn(k: i64, via: PotentialVia) -> Result<RationalFn> {
    Ok(match via {
        PotentialVia::Rational => potential(k).potential(),
        PotentialVia::Deleting => wronskian_potential(k, PotentialForm::Deleting)?,
        PotentialVia::Adding => wronskian_potential(k, PotentialForm::Adding)?,
        PotentialVia::Susy => susy_chain_potential(&index_set(k))?,
    })
}

fn potential_json(k: i64, v: &RationalFn) -> Result<Value> {
    let mut obj = match serde_json::to_value(v)? {
        Value::Object(o) => o,
        _ => unreachable!("rational functions serialize as objects"),
    };
    obj.insert("k".into(), json!(k));
    Ok(Value::Object(obj))
}

/// Exact rational from `p/q`, an integer or a decimal literal.
fn parse_point(s: &str) -> Result<BigRational> {
    if let Ok(r) = parse_rational(s) {
        return Ok(r);
    }
    let x: f64 = s
        .parse()
        .with_context(|| format!("cannot parse evaluation point {s:?}"))?;
    BigRational::from_float(x).ok_or_else(|| anyhow!("evaluation point {s:?} is not finite"))
}

fn potential_cmd(cli: &Cli, args: &PotentialArgs) -> Result<String> {
    let k = i64::from(args.k);
    let v = potential_fn(k, args.via)?;
    if args.eval.is_empty() {
        return if args.csv {
            Ok(csv_text(&sample(&v, -5.0, 5.0, 101)?))
        } else {
            Ok(json_text(cli, &potential_json(k, &v)?))
        };
    }
    let mut points = Vec::new();
    for s in &args.eval {
        let x = parse_point(s)?;
        let value = v
            .eval(&SqrtTwoScalar::from_rational(x.clone()))
            .ok_or_else(|| Error::PoleAtPoint(round_rational(&x, 53)))?;
        points.push((x, value));
    }
    if args.csv {
        let rows: Vec<(f64, f64)> = points
            .iter()
            .map(|(x, value)| (round_rational(x, 53), round_sqrt2(value, 53)))
            .collect();
        return Ok(csv_text(&rows));
    }
    let points: Vec<Value> = points
        .iter()
        .map(|(x, value)| json!({ "x": rational_to_string(x), "value": value, "float": round_sqrt2(value, 53) }))
        .collect();
    Ok(json_text(
        cli,
        &json!({ "k": k, "via": format!("{:?}", args.via).to_lowercase(), "points": points }),
    ))
}

fn ttrr_json(args: &TtrrArgs) -> Result<Value> {
    let k = i64::from(args.k);
    let seq = ttrr_sequence(k, args.j, args.max_n as usize)?;
    seq.iter()
        .map(|m| {
            let mut v = mode_json(m);
            if args.check_ode {
                v["ode_ok"] = json!(ode_residual(k, m.j, m.n, &m.poly)?.is_zero());
            }
            if args.check_wronskian {
                v["wronskian_ok"] = json!(wronskian_mode(k, m.j, m.n)?.poly.is_proportional(&m.poly));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()
        .map(Value::Array)
}

fn xhermite_poly(ix: &ModeIndex, via: XhermiteVia) -> Result<ExactPoly> {
    let (k, j, n) = (i64::from(ix.k), ix.j, i64::from(ix.n));
    Ok(match via {
        XhermiteVia::Ttrr => xhermite_from_ttrr(k, j, n)?,
        XhermiteVia::Wronskian => wronskian_mode(k, j, n)?
            .poly
            .sqrt3_rescale()
            .ok_or_else(|| anyhow!("mode ({k}, {j}, {n}) has mixed parity"))?,
        XhermiteVia::Definition => exceptional_hermite(&PartitionIndex::staircase(k), mode_index(k, j, n))?,
    })
}

fn xhermite_json(ix: &ModeIndex, via: XhermiteVia) -> Result<Value> {
    let p = xhermite_poly(ix, via)?;
    let (k, j, n) = (i64::from(ix.k), ix.j, i64::from(ix.n));
    Ok(poly_json(
        &p,
        json!({ "k": k, "j": j, "n": n, "sigma": mode_index(k, j, n) }),
    ))
}

fn okamoto_indices(ix: &PolyIndices) -> Result<(i64, i64)> {
    match (ix.m, ix.n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => bail!("okamoto needs --m and --n"),
    }
}

fn mode_indices(ix: &PolyIndices) -> Result<ModeIndex> {
    match (ix.k, ix.j, ix.n) {
        (Some(k), Some(j), Some(n)) if n >= 0 => Ok(ModeIndex { k, j, n: n as u32 }),
        (Some(_), Some(_), Some(n)) => Err(Error::InvalidIndices(format!("mode index n = {n} is negative")).into()),
        _ => bail!("this kind needs --k, --j and --n"),
    }
}

fn zeros_json(args: &ZerosArgs) -> Result<Value> {
    let (poly, predicted) = match args.poly_from {
        PolySource::Okamoto => {
            let (m, n) = okamoto_indices(&args.index)?;
            let q = okamoto(m, n)?;
            let predicted = (m >= 0 && n >= 0).then(|| predicted_okamoto_count(m, n).n_total);
            ((*q).clone(), predicted)
        }
        PolySource::Mode | PolySource::Xhermite => {
            let ix = mode_indices(&args.index)?;
            let p = if args.poly_from == PolySource::Mode {
                mode(ix.k.into(), ix.j, ix.n.into())?.poly
            } else {
                xhermite_poly(&ix, XhermiteVia::Ttrr)?
            };
            let predicted = predicted_mode_count(ix.k.into(), ix.j, ix.n.into());
            (p, Some(predicted as usize))
        }
    };
    let show_count = !args.predict;
    let show_predicted = !args.count;
    let report = show_count.then(|| sturm_count(&poly));
    let matched = match (report, predicted) {
        (Some(r), Some(p)) if show_predicted => Some(r.n_total == p),
        _ => None,
    };
    Ok(json!({
        "n0": report.map(|r| r.n0),
        "n_plus": report.map(|r| r.n_plus),
        "n_total": report.map(|r| r.n_total),
        "predicted": if show_predicted { predicted } else { None },
        "match": matched,
    }))
}

fn spectrum_json(args: &SpectrumArgs) -> Result<Value> {
    let k = i64::from(args.k);
    let defaults = Tolerances::default();
    let grid = NumericGrid::new(
        args.half_width.unwrap_or(defaults.half_width),
        args.points.unwrap_or(defaults.points),
    )?;
    let numeric = fd_eigensolve(k, &grid, args.count, args.tol.unwrap_or(defaults.eigen_tol))?;
    let levels: Vec<Value> = spectrum(k, args.count)
        .iter()
        .zip(&numeric)
        .enumerate()
        .map(|(i, (level, &e))| {
            json!({
                "index": i,
                "j": level.j,
                "n": level.n,
                "energy": rational_to_string(&level.energy),
                "numeric": e,
                "deviation": e - round_rational(&level.energy, 53),
            })
        })
        .collect();
    Ok(Value::Array(levels))
}

fn range_of(r: &SampleRange) -> (f64, f64, usize) {
    (r.range[0], r.range[1], r.samples)
}

fn plot_csv(args: &PlotArgs) -> Result<String> {
    let (a, b, s) = range_of(&args.range);
    let k = i64::from(args.k);
    let rows = match args.what {
        PlotWhat::Potential => sample(&potential(k).potential(), a, b, s)?,
        PlotWhat::Mode => {
            let (j, n) = args
                .j
                .zip(args.n)
                .ok_or_else(|| anyhow!("--what mode needs --j and --n"))?;
            sample_mode(&mode(k, j, n.into())?, a, b, s)?
        }
    };
    Ok(csv_text(&rows))
}

fn verify_cmd(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode> {
    let suites = if args.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suite
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Suite>, _>>()?
    };
    let config = VerifySuiteConfig::new(args.k_max, args.n_max, suites)?;
    let report = run_verify(&config);
    if cli.json {
        print!("{}", json_text(cli, &report));
    } else {
        let mut out = String::new();
        for c in &report.checks {
            if c.passed && cli.quiet {
                continue;
            }
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(out, "{status} {} {}", c.suite, c.subject)?;
            if let Some(d) = c.discrepancy.as_ref().filter(|_| !c.passed) {
                write!(out, ": {d}")?;
            }
            out.push('\n');
        }
        let failed = report.failures().count();
        writeln!(out, "{} checks, {} failed", report.checks.len(), failed)?;
        print!("{out}");
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn export_cmd(cli: &Cli, args: &ExportArgs) -> Result<ExitCode> {
    let (a, b, s) = range_of(&args.range);
    let csv = args.format == ExportFormat::Csv;
    let text = match args.kind {
        ExportKind::Okamoto => {
            let (m, n) = okamoto_indices(&args.index)?;
            if csv {
                csv_text(&sample(&*okamoto(m, n)?, a, b, s)?)
            } else {
                json_text(cli, &okamoto_json(m, n)?)
            }
        }
        ExportKind::Mode => {
            let ix = mode_indices(&args.index)?;
            let m = mode(ix.k.into(), ix.j, ix.n.into())?;
            if csv {
                csv_text(&sample_mode(&m, a, b, s)?)
            } else {
                json_text(cli, &mode_json(&m))
            }
        }
        ExportKind::Xhermite => {
            let ix = mode_indices(&args.index)?;
            if csv {
                csv_text(&sample(&xhermite_poly(&ix, XhermiteVia::Ttrr)?, a, b, s)?)
            } else {
                json_text(cli, &xhermite_json(&ix, XhermiteVia::Ttrr)?)
            }
        }
        ExportKind::Potential => {
            let k = args.index.k.ok_or_else(|| anyhow!("potential needs --k"))?;
            let v = potential(k.into()).potential();
            if csv {
                csv_text(&sample(&v, a, b, s)?)
            } else {
                json_text(cli, &potential_json(k.into(), &v)?)
            }
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
