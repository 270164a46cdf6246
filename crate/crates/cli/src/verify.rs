//! Every check that applies to one `n`, bundled for the `verify` command.

use comax_core::connectivity::{
    algebraic_connectivity, g2_components_report, g2_connectivity_report, kappa_g2_bound,
    multiplicity_reports, second_largest_report, vertex_connectivity, ReportStatus, ReportValue,
    TheoremReport,
};
use comax_core::oracle::{exact_char_poly_full, numeric_spectrum, EXACT_LIMIT};
use comax_core::quotient::{closed_form, full_char_poly, full_spectrum};
use comax_core::{comax::dense_laplacian, Modulus, SpectrumMultiset};

use crate::CliError;

/// Elementwise tolerance between the quotient spectrum and the dense oracle.
pub const SPECTRUM_TOLERANCE: f64 = 1e-6;

/// Largest absolute difference between sorted spectra, or `None` on a length mismatch.
pub fn max_deviation(a: &[f64], b: &[f64]) -> Option<f64> {
    (a.len() == b.len()).then(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    })
}

fn skipped(n: u64, theorem: &'static str, note: String) -> TheoremReport {
    TheoremReport {
        n,
        theorem,
        claimed: ReportValue::Boolean(true),
        computed: ReportValue::Skipped,
        status: ReportStatus::Skipped,
        note: Some(note),
    }
}

fn boolean_check(n: u64, theorem: &'static str, ok: bool, note: Option<String>) -> TheoremReport {
    let mut r = TheoremReport::compare(
        n,
        theorem,
        ReportValue::Boolean(true),
        ReportValue::Boolean(ok),
    );
    r.note = note;
    r
}

/// Quotient spectrum against the dense eigensolver.
pub fn oracle_spectrum_check(
    m: &Modulus,
    spec: &SpectrumMultiset,
    limit: usize,
) -> Result<TheoremReport, CliError> {
    let n = m.n();
    if n as usize > limit {
        return Ok(skipped(
            n,
            "oracle_spectrum",
            format!("n exceeds the dense limit {limit}"),
        ));
    }
    let dense = numeric_spectrum(&dense_laplacian(m, limit)?, limit)?;
    let quotient = spec.eigenvalues_ascending()?;
    let dev = max_deviation(&quotient, &dense.eigenvalues);
    let ok = dev.is_some_and(|d| d <= SPECTRUM_TOLERANCE);
    let note = match dev {
        Some(d) => format!("max deviation {d:.3e}"),
        None => String::from("eigenvalue counts differ"),
    };
    Ok(boolean_check(n, "oracle_spectrum", ok, Some(note)))
}

/// Exact full characteristic polynomial against the quotient assembly.
pub fn exact_char_poly_check(m: &Modulus) -> Result<TheoremReport, CliError> {
    let n = m.n();
    if n > EXACT_LIMIT {
        return Ok(skipped(
            n,
            "exact_char_poly",
            format!("n exceeds the exact limit {EXACT_LIMIT}"),
        ));
    }
    let ok = exact_char_poly_full(m)? == full_char_poly(m);
    Ok(boolean_check(n, "exact_char_poly", ok, None))
}

/// Spectrum against the closed form, when `n` has at most two prime factors.
pub fn closed_form_check(
    m: &Modulus,
    spec: &SpectrumMultiset,
) -> Result<Option<TheoremReport>, CliError> {
    let Some(expected) = closed_form(m) else {
        return Ok(None);
    };
    let expected = expected?;
    let ok = &expected == spec;
    Ok(Some(boolean_check(m.n(), "closed_form", ok, None)))
}

/// All reports for `n`, in a fixed order.
pub fn run(m: &Modulus, dense_limit: usize) -> Result<Vec<TheoremReport>, CliError> {
    let n = m.n();
    let spec = full_spectrum(m)?;
    let mut out = vec![
        oracle_spectrum_check(m, &spec, dense_limit)?,
        exact_char_poly_check(m)?,
    ];
    if let Some(r) = closed_form_check(m, &spec)? {
        out.push(r);
        out.push(boolean_check(
            n,
            "laplacian_integral",
            spec.is_integral(),
            None,
        ));
    }
    out.push(algebraic_connectivity(m)?);
    out.push(vertex_connectivity(m)?);
    if !m.is_prime() {
        let (g2, complement) = g2_connectivity_report(m)?;
        out.push(g2);
        out.push(complement);
        out.push(g2_components_report(m)?);
    }
    out.push(second_largest_report(m)?);
    let (radius, phi) = multiplicity_reports(m)?;
    out.push(radius);
    out.push(phi);
    if !m.is_prime() && m.is_squarefree() {
        out.push(kappa_g2_bound(m)?);
    }
    Ok(out)
}

/// Ids of the reports that count as failures.
pub fn failures(reports: &[TheoremReport]) -> Vec<&'static str> {
    reports
        .iter()
        .filter(|r| r.is_failure())
        .map(|r| r.theorem)
        .collect()
}
