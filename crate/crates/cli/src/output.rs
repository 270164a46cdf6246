//! Text, CSV and JSON renderings of spectra, reports and graphs.

use std::fmt::Write as _;
use std::str::FromStr;

use comax_core::comax::g2_graph;
use comax_core::connectivity::{ReportValue, TheoremReport};
use comax_core::{ComaximalGraph, IntPoly, Modulus, SpectrumMultiset};
use serde_json::{json, Number, Value};

use crate::CliError;

/// `{"n", "phi", "integer_eigenvalues", "residual_poly", "laplacian_integral"}`.
pub fn spectrum_json(m: &Modulus, spec: &SpectrumMultiset) -> Value {
    let integer: Vec<Value> = spec
        .integer_part()
        .iter()
        .map(|&(v, k)| json!([v, k]))
        .collect();
    let residual = if spec.is_integral() {
        Value::Null
    } else {
        poly_json(spec.residual())
    };
    json!({
        "n": m.n(),
        "phi": m.phi(),
        "integer_eigenvalues": integer,
        "residual_poly": residual,
        "laplacian_integral": spec.is_integral(),
    })
}

/// Coefficients constant first, as exact JSON integers of any size.
pub fn poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Number(Number::from_str(&c.to_string()).expect("integer literal")))
            .collect(),
    )
}

/// `eigenvalue,multiplicity,exact`, descending, residual roots to 12 decimals.
pub fn spectrum_csv(spec: &SpectrumMultiset) -> Result<String, CliError> {
    let mut out = String::from("eigenvalue,multiplicity,exact\n");
    for e in spec.distinct_descending()? {
        match e.exact {
            Some(v) => writeln!(out, "{v},{},true", e.multiplicity),
            None => writeln!(out, "{:.12},{},false", e.value, e.multiplicity),
        }
        .expect("writing to a String");
    }
    Ok(out)
}

/// Descending values separated by spaces, `v^k` for multiplicity `k > 1`,
/// irrational values to 9 decimals.
pub fn spectrum_pretty(spec: &SpectrumMultiset) -> Result<String, CliError> {
    let parts: Vec<String> = spec
        .distinct_descending()?
        .into_iter()
        .map(|e| {
            let v = match e.exact {
                Some(v) => v.to_string(),
                None => format!("{:.9}", e.value),
            };
            if e.multiplicity > 1 {
                format!("{v}^{}", e.multiplicity)
            } else {
                v
            }
        })
        .collect();
    Ok(parts.join(" "))
}

pub fn report_value_json(v: ReportValue) -> Value {
    match v {
        ReportValue::Integer(i) => json!(i),
        ReportValue::Real(x) => json!(x),
        ReportValue::Boolean(b) => json!(b),
        ReportValue::NotApplicable => json!("not-applicable"),
        ReportValue::Skipped => json!("skipped"),
    }
}

/// `{"n", "theorem", "claimed", "computed", "agrees", "status", "note"}`.
pub fn report_json(r: &TheoremReport) -> Value {
    let mut v = json!({
        "n": r.n,
        "theorem": r.theorem,
        "claimed": report_value_json(r.claimed),
        "computed": report_value_json(r.computed),
        "agrees": r.agrees(),
        "status": r.status.as_str(),
    });
    if let Some(note) = &r.note {
        v["note"] = json!(note);
    }
    v
}

pub fn report_line(r: &TheoremReport) -> String {
    let mut line = format!(
        "{:<30} {:<15} claimed={} computed={}",
        r.theorem,
        r.status.as_str(),
        r.claimed,
        r.computed
    );
    if let Some(note) = &r.note {
        let _ = write!(line, " ({note})");
    }
    line
}

/// One `u v` line per edge of `Γ(Z_n)`, `u < v`.
pub fn graph_edges(m: &Modulus) -> String {
    let g = comax_core::comax::explicit_graph(m);
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `[{"divisor", "size", "neighbors"}]` over every divisor class.
pub fn graph_classes(m: &Modulus) -> Value {
    let cg = ComaximalGraph::new(m.clone());
    Value::Array(
        cg.classes()
            .iter()
            .map(|c| {
                json!({
                    "divisor": c.divisor,
                    "size": c.size,
                    "neighbors": cg.class_neighbors(c),
                })
            })
            .collect(),
    )
}

/// One `u v` line per edge of `G2`, labelled by residue.
pub fn g2_edges(m: &Modulus) -> String {
    let (g, labels) = g2_graph(m);
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", labels[u], labels[v]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use comax_core::quotient::full_spectrum;

    fn spectrum(n: u64) -> (Modulus, SpectrumMultiset) {
        let m = Modulus::new(n).unwrap();
        let s = full_spectrum(&m).unwrap();
        (m, s)
    }

    #[test]
    fn pretty_examples() {
        assert_eq!(spectrum_pretty(&spectrum(6).1).unwrap(), "6^2 5 3 2 0");
        assert_eq!(spectrum_pretty(&spectrum(5).1).unwrap(), "5^4 0");
    }

    #[test]
    fn json_examples() {
        let (m, s) = spectrum(4);
        let v = spectrum_json(&m, &s);
        assert_eq!(v["integer_eigenvalues"], json!([[4, 2], [2, 1], [0, 1]]));
        assert_eq!(v["residual_poly"], Value::Null);
        assert_eq!(v["laplacian_integral"], json!(true));
        assert_eq!(v["phi"], json!(2));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big = "123456789012345678901234567890";
        let p = IntPoly::new(vec![big.parse().unwrap(), 1.into()]);
        assert_eq!(
            serde_json::to_string(&poly_json(&p)).unwrap(),
            format!("[{big},1]")
        );
    }

    #[test]
    fn csv_example() {
        let csv = spectrum_csv(&spectrum(6).1).unwrap();
        assert_eq!(
            csv,
            "eigenvalue,multiplicity,exact\n6,2,true\n5,1,true\n3,1,true\n2,1,true\n0,1,true\n"
        );
    }

    #[test]
    fn edge_exports() {
        let m = Modulus::new(4).unwrap();
        assert_eq!(graph_edges(&m), "0 1\n0 3\n1 2\n1 3\n2 3\n");
        let m = Modulus::new(12).unwrap();
        let edges = g2_edges(&m);
        let lines: Vec<&str> = edges.lines().collect();
        assert!(lines.contains(&"2 3"));
        assert!(lines.contains(&"3 4"));
        assert!(lines.iter().all(|l| !l.contains('6')));
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn class_summary() {
        let v = graph_classes(&Modulus::new(12).unwrap());
        let three = v
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["divisor"] == json!(3))
            .unwrap();
        assert_eq!(three["size"], json!(2));
        assert_eq!(three["neighbors"], json!([1, 2, 4]));
    }
}
