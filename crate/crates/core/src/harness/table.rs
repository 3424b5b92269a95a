//! Coefficient tables of a chart point.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::charts::{chart_coeffs, face_restriction, ChartId, ChartPoint};
use crate::error::{AskeyError, Result};
use crate::scalar::Real;

/// Output format of [`emit_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    /// Comment header lines (`# key: value`) followed by `n,B,C` rows; `C₀`
    /// is left blank.
    Csv,
    /// A single JSON object `{chart, coords, face, family, family_params,
    /// rho, sigma, rows}`; `C₀` is `null`.
    Json,
}

impl FromStr for TableFormat {
    type Err = AskeyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(AskeyError::InvalidInput(format!(
                "unknown table format `{other}` (expected csv or json)"
            ))),
        }
    }
}

/// Tabulate `(Bₙ, Cₙ)` for `n = 0..=n_max` at `p`, with a header naming the
/// chart, the coordinates, the face the point lies on, the affine scale
/// `(ρ, σ)` and the parameters of the family it restricts to.
///
/// ```
/// use askey_core::charts::{ChartId, ChartPoint};
/// use askey_core::harness::{emit_table, TableFormat};
///
/// let p = ChartPoint::new(ChartId::Racah1, vec![0.0; 4]).unwrap();
/// let csv = emit_table(ChartId::Racah1, &p, 3, TableFormat::Csv).unwrap();
/// let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
/// assert_eq!(rows, ["n,B,C", "0,0,", "1,0,1", "2,0,2", "3,0,3"]);
/// ```
///
/// # Errors
///
/// [`AskeyError::InvalidInput`] if `p` belongs to another chart;
/// [`AskeyError::NonFiniteCoefficient`] from the coefficient formulas.
pub fn emit_table<T: Real>(
    chart: ChartId,
    p: &ChartPoint<T>,
    n_max: usize,
    format: TableFormat,
) -> Result<String> {
    if p.chart != chart {
        return Err(AskeyError::InvalidInput(format!(
            "point belongs to chart {}, not {chart}",
            p.chart
        )));
    }
    let face = p.zero_set();
    let rec = face_restriction::<T>(chart, face)?;
    let family = (rec.params)(&p.coords);
    let (rho, sigma) = (rec.scale)(&p.coords);
    let rows: Vec<(T, T)> = (0..=n_max)
        .map(|n| chart_coeffs(p, n))
        .collect::<Result<_>>()?;
    let names = family.id().param_names();
    let params = family.params();

    match format {
        TableFormat::Csv => {
            let mut s = String::new();
            let coords: Vec<String> = p.coords.iter().map(|&v| num(v)).collect();
            let _ = writeln!(s, "# chart: {chart}");
            let _ = writeln!(s, "# coords: {}", coords.join(","));
            let _ = writeln!(s, "# face: {face}");
            let _ = writeln!(s, "# rho: {}", num(rho));
            let _ = writeln!(s, "# sigma: {}", num(sigma));
            let _ = writeln!(s, "# family: {}", family.id().name());
            for (name, v) in names.iter().zip(&params) {
                if v.im.is_zero() {
                    let _ = writeln!(s, "# {name}: {}", num(v.re));
                } else {
                    let _ = writeln!(s, "# {name}: {}{:+}i", num(v.re), v.im.to_f64());
                }
            }
            s.push_str("n,B,C\n");
            for (n, &(b, c)) in rows.iter().enumerate() {
                let c = if n == 0 { String::new() } else { num(c) };
                let _ = writeln!(s, "{n},{},{c}", num(b));
            }
            Ok(s)
        }
        TableFormat::Json => {
            let mut fp = Map::new();
            for (name, v) in names.iter().zip(&params) {
                let value = if v.im.is_zero() {
                    json_num(v.re)
                } else {
                    json!({ "re": json_num(v.re), "im": json_num(v.im) })
                };
                fp.insert((*name).to_string(), value);
            }
            let rows: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(n, &(b, c))| {
                    json!({
                        "n": n,
                        "B": json_num(b),
                        "C": if n == 0 { Value::Null } else { json_num(c) },
                    })
                })
                .collect();
            let obj = json!({
                "chart": chart.name(),
                "coords": p.coords.iter().map(|&v| json_num(v)).collect::<Vec<_>>(),
                "face": face.to_string(),
                "family": family.id().name(),
                "family_params": Value::Object(fp),
                "rho": json_num(rho),
                "sigma": json_num(sigma),
                "rows": rows,
            });
            Ok(serde_json::to_string_pretty(&obj).expect("table values serialise"))
        }
    }
}

/// Shortest round-trip decimal of the `f64` nearest to `v`, with `−0`
/// printed as `0`.
fn num<T: Real>(v: T) -> String {
    let x = v.to_f64();
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

fn json_num<T: Real>(v: T) -> Value {
    let x = v.to_f64();
    let x = if x == 0.0 { 0.0 } else { x };
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let p = ChartPoint::new(ChartId::Racah1, vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let t = emit_table(ChartId::Racah1, &p, 2, TableFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&t).unwrap();
        for key in ["chart", "coords", "rho", "sigma", "rows"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["family"], "racah");
        assert_eq!(v["rows"][0]["C"], Value::Null);
        assert_eq!(v["family_params"]["delta"], 18.0);
    }

    #[test]
    fn wilson2_face_header_names_continuous_dual_hahn() {
        let p = ChartPoint::new(ChartId::Wilson2, vec![1.0, 1.0, 1.0, 0.0]).unwrap();
        let t = emit_table(ChartId::Wilson2, &p, 2, TableFormat::Csv).unwrap();
        assert!(t.contains("# family: continuous-dual-hahn"), "{t}");
        assert!(t.contains("# face: {4}"));
    }

    #[test]
    fn format_parse() {
        assert_eq!("CSV".parse::<TableFormat>().unwrap(), TableFormat::Csv);
        assert!("xml".parse::<TableFormat>().is_err());
    }
}
