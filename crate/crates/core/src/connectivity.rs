//! Connectivity and multiplicity statements about `Γ(Z_n)`, each checked by
//! recomputing the quantity from the exact spectrum or from an explicit graph.
//!
//! A [`TheoremReport`] pairs the value a formula predicts with the value that
//! was actually measured. Nothing here assumes a statement holds.

use alloc::format;
use alloc::string::String;

use crate::comax::{explicit_graph, g2_graph, DEFAULT_DENSE_LIMIT};
use crate::divisors::{euler_phi, Modulus};
use crate::oracle::{connected_components, min_vertex_cut};
use crate::quotient::{full_spectrum, g2_spectrum, SpectrumMultiset};
use crate::{Error, Result};

/// Tolerance for comparing a numeric eigenvalue with an integer.
pub const TOLERANCE: f64 = 1e-6;

/// Largest `n` for which `κ(Γ(Z_n))` is measured by max-flow.
pub const VERTEX_CUT_LIMIT: u64 = 60;

/// Largest `|V(G2)|` for which `κ(G2)` is measured by max-flow.
pub const G2_CUT_LIMIT: usize = 128;

/// Largest `|V(G2)|` for which `G2` is built explicitly for traversal.
pub const G2_TRAVERSAL_LIMIT: usize = DEFAULT_DENSE_LIMIT;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReportValue {
    Integer(u64),
    Real(f64),
    Boolean(bool),
    NotApplicable,
    Skipped,
}

impl ReportValue {
    fn as_f64(self) -> Option<f64> {
        match self {
            ReportValue::Integer(v) => Some(v as f64),
            ReportValue::Real(v) => Some(v),
            _ => None,
        }
    }

    /// Integers and booleans compare exactly; a real compares within [`TOLERANCE`].
    pub fn matches(self, other: ReportValue) -> bool {
        use ReportValue::*;
        match (self, other) {
            (Integer(a), Integer(b)) => a == b,
            (Boolean(a), Boolean(b)) => a == b,
            (Real(_), Integer(_) | Real(_)) | (Integer(_), Real(_)) => {
                let (a, b) = (
                    self.as_f64().unwrap_or(f64::NAN),
                    other.as_f64().unwrap_or(f64::NAN),
                );
                (a - b).abs() <= TOLERANCE * a.abs().max(1.0)
            }
            _ => false,
        }
    }
}

impl core::fmt::Display for ReportValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReportValue::Integer(v) => write!(f, "{v}"),
            ReportValue::Real(v) => write!(f, "{v:.9}"),
            ReportValue::Boolean(v) => write!(f, "{v}"),
            ReportValue::NotApplicable => f.write_str("not-applicable"),
            ReportValue::Skipped => f.write_str("skipped"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Agrees,
    Disagrees,
    /// The eigenvalue `φ(n)` was produced by more than one spectral branch.
    Collision,
    /// The measurement exceeded a size limit.
    Skipped,
    /// The statement does not cover this `n`.
    NotApplicable,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Agrees => "agrees",
            ReportStatus::Disagrees => "disagrees",
            ReportStatus::Collision => "collision",
            ReportStatus::Skipped => "skipped",
            ReportStatus::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub n: u64,
    pub theorem: &'static str,
    pub claimed: ReportValue,
    pub computed: ReportValue,
    pub status: ReportStatus,
    pub note: Option<String>,
}

impl TheoremReport {
    /// Status from exact (or toleranced) equality of the two values.
    pub fn compare(
        n: u64,
        theorem: &'static str,
        claimed: ReportValue,
        computed: ReportValue,
    ) -> Self {
        let status = if computed == ReportValue::Skipped {
            ReportStatus::Skipped
        } else if claimed.matches(computed) {
            ReportStatus::Agrees
        } else {
            ReportStatus::Disagrees
        };
        TheoremReport {
            n,
            theorem,
            claimed,
            computed,
            status,
            note: None,
        }
    }

    fn with_status(mut self, status: ReportStatus) -> Self {
        self.status = status;
        self
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    pub fn agrees(&self) -> bool {
        self.status == ReportStatus::Agrees
    }

    /// True when the report counts against a verification run.
    pub fn is_failure(&self) -> bool {
        self.status == ReportStatus::Disagrees
    }
}

/// The `k`-th smallest eigenvalue (0-based, counted with multiplicity).
pub fn kth_smallest(spec: &SpectrumMultiset, k: usize) -> Result<ReportValue> {
    let mut remaining = k as u64;
    let mut distinct = spec.distinct_descending()?;
    distinct.reverse();
    for e in distinct {
        if remaining < e.multiplicity {
            return Ok(match e.exact {
                Some(v) => ReportValue::Integer(v),
                None => ReportValue::Real(e.value),
            });
        }
        remaining -= e.multiplicity;
    }
    Err(Error::Inconsistent(
        "spectrum has fewer eigenvalues than requested",
    ))
}

/// Largest eigenvalue strictly below `n`, or `None` for a spectrum inside `{0, n}`.
pub fn second_largest(spec: &SpectrumMultiset, n: u64) -> Result<Option<ReportValue>> {
    let below = spec
        .distinct_descending()?
        .into_iter()
        .find(|e| e.value < n as f64 - TOLERANCE && e.exact != Some(n));
    Ok(below.map(|e| match e.exact {
        Some(v) => ReportValue::Integer(v),
        None => ReportValue::Real(e.value),
    }))
}

/// Claimed `λ_{n-1} = φ(n)` against the second-smallest eigenvalue.
pub fn algebraic_connectivity(m: &Modulus) -> Result<TheoremReport> {
    let spec = full_spectrum(m)?;
    let computed = kth_smallest(&spec, 1)?;
    let report = TheoremReport::compare(
        m.n(),
        "algebraic_connectivity",
        ReportValue::Integer(m.phi()),
        computed,
    );
    if m.is_prime() {
        let note = format!(
            "Γ(Z_{0}) = K_{0} has algebraic connectivity {0}, not φ = {0} - 1",
            m.n()
        );
        return Ok(report
            .with_status(ReportStatus::NotApplicable)
            .with_note(note));
    }
    Ok(report)
}

/// Claimed `κ = φ(n)` against a max-flow minimum vertex cut.
pub fn vertex_connectivity(m: &Modulus) -> Result<TheoremReport> {
    let computed = if m.n() <= VERTEX_CUT_LIMIT {
        ReportValue::Integer(min_vertex_cut(&explicit_graph(m))? as u64)
    } else {
        ReportValue::Skipped
    };
    Ok(TheoremReport::compare(
        m.n(),
        "vertex_connectivity",
        ReportValue::Integer(m.phi()),
        computed,
    ))
}

fn g2_size(m: &Modulus) -> Result<usize> {
    if m.is_prime() {
        return Err(Error::EmptyG2(m.n()));
    }
    Ok((m.n() - m.phi() - 1) as usize)
}

/// `(G2 connected ⇔ n squarefree, G2ᶜ connected ⇔ more than two primes)`.
///
/// The complement statement only covers squarefree `n`; otherwise the second
/// report carries the measurement with status not-applicable.
pub fn g2_connectivity_report(m: &Modulus) -> Result<(TheoremReport, TheoremReport)> {
    let size = g2_size(m)?;
    let claimed_g2 = ReportValue::Boolean(m.is_squarefree());
    let claimed_complement = ReportValue::Boolean(m.distinct_prime_count() > 2);
    if size > G2_TRAVERSAL_LIMIT {
        return Ok((
            TheoremReport::compare(m.n(), "g2_connected", claimed_g2, ReportValue::Skipped),
            TheoremReport::compare(
                m.n(),
                "g2_complement_connected",
                claimed_complement,
                ReportValue::Skipped,
            ),
        ));
    }
    let (g2, _) = g2_graph(m);
    let connected = connected_components(&g2) == 1;
    let complement_connected = connected_components(&g2.complement()) == 1;
    let first = TheoremReport::compare(
        m.n(),
        "g2_connected",
        claimed_g2,
        ReportValue::Boolean(connected),
    );
    let mut second = TheoremReport::compare(
        m.n(),
        "g2_complement_connected",
        claimed_complement,
        ReportValue::Boolean(complement_connected),
    );
    if !m.is_squarefree() {
        second = second
            .with_status(ReportStatus::NotApplicable)
            .with_note(String::from("statement covers squarefree n only"));
    }
    Ok((first, second))
}

/// Claimed `n / rad(n)` components of `G2` against a traversal.
pub fn g2_components_report(m: &Modulus) -> Result<TheoremReport> {
    let size = g2_size(m)?;
    let claimed = ReportValue::Integer(m.n() / m.radical());
    let computed = if size > G2_TRAVERSAL_LIMIT {
        ReportValue::Skipped
    } else {
        ReportValue::Integer(connected_components(&g2_graph(m).0) as u64)
    };
    Ok(TheoremReport::compare(
        m.n(),
        "g2_components",
        claimed,
        computed,
    ))
}

/// Claimed `λ₂ = n - 1 ⇔ n = pq` against the measured second-largest
/// distinct eigenvalue. Reports not-applicable for prime `n`.
pub fn second_largest_report(m: &Modulus) -> Result<TheoremReport> {
    let n = m.n();
    let is_pq = m.is_squarefree() && m.distinct_prime_count() == 2;
    let claimed = ReportValue::Boolean(is_pq);
    let spec = full_spectrum(m)?;
    let lambda2 = if m.is_prime() {
        None
    } else {
        second_largest(&spec, n)?
    };
    let Some(lambda2) = lambda2 else {
        return Ok(TheoremReport {
            n,
            theorem: "second_largest",
            claimed,
            computed: ReportValue::NotApplicable,
            status: ReportStatus::NotApplicable,
            note: Some(format!(
                "Γ(Z_{n}) = K_{n}: every nonzero eigenvalue equals n"
            )),
        });
    };
    let equality = lambda2.matches(ReportValue::Integer(n - 1));
    let value = lambda2.as_f64().unwrap_or(f64::NAN);
    let mut report =
        TheoremReport::compare(n, "second_largest", claimed, ReportValue::Boolean(equality))
            .with_note(format!("λ₂ = {lambda2}"));
    if value > (n - 1) as f64 + TOLERANCE {
        report.status = ReportStatus::Disagrees;
        report.note = Some(format!("λ₂ = {lambda2} exceeds n - 1"));
    }
    Ok(report)
}

/// `(mult(n) = φ(n), mult(φ(n)) = n / rad(n))`.
///
/// The second report is a collision when `φ(n)` in the full spectrum has a
/// multiplicity other than that of `0` in the `G2` spectrum, meaning another
/// branch of the spectrum also lands on `φ(n)`.
pub fn multiplicity_reports(m: &Modulus) -> Result<(TheoremReport, TheoremReport)> {
    let (n, phi) = (m.n(), m.phi());
    let full = full_spectrum(m)?;
    let radius = TheoremReport::compare(
        n,
        "spectral_radius_multiplicity",
        ReportValue::Integer(phi),
        ReportValue::Integer(full.multiplicity(n)),
    );
    let mult_phi = full.multiplicity(phi);
    let mut phi_report = TheoremReport::compare(
        n,
        "phi_multiplicity",
        ReportValue::Integer(n / m.radical()),
        ReportValue::Integer(mult_phi),
    );
    if m.is_prime() {
        phi_report = phi_report
            .with_status(ReportStatus::NotApplicable)
            .with_note(String::from("G2 is empty, so φ(n) is not an eigenvalue"));
    } else {
        let from_g2 = g2_spectrum(m)?.multiplicity(0);
        if from_g2 != mult_phi {
            phi_report = phi_report
                .with_status(ReportStatus::Collision)
                .with_note(format!("{from_g2} from the G2 kernel, {mult_phi} in total"));
        }
    }
    Ok((radius, phi_report))
}

/// Claimed `κ(G2) <= φ(n / p_max)` for squarefree composite `n`.
///
/// Agreement means the bound holds; the note records whether it is tight.
pub fn kappa_g2_bound(m: &Modulus) -> Result<TheoremReport> {
    let size = g2_size(m)?;
    if !m.is_squarefree() {
        return Err(Error::NotSquarefree(m.n()));
    }
    let bound = euler_phi(m.n() / m.largest_prime())?;
    let claimed = ReportValue::Integer(bound);
    if size > G2_CUT_LIMIT {
        return Ok(TheoremReport::compare(
            m.n(),
            "kappa_g2_bound",
            claimed,
            ReportValue::Skipped,
        ));
    }
    let kappa = min_vertex_cut(&g2_graph(m).0)? as u64;
    let status = if kappa <= bound {
        ReportStatus::Agrees
    } else {
        ReportStatus::Disagrees
    };
    let note = if kappa == bound { "tight" } else { "not tight" };
    Ok(TheoremReport {
        n: m.n(),
        theorem: "kappa_g2_bound",
        claimed,
        computed: ReportValue::Integer(kappa),
        status,
        note: Some(String::from(note)),
    })
}

/// Whether a [`kappa_g2_bound`] report met its bound with equality.
pub fn kappa_bound_is_tight(report: &TheoremReport) -> Option<bool> {
    match (report.claimed, report.computed) {
        (ReportValue::Integer(b), ReportValue::Integer(k)) => Some(b == k),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn value_matching() {
        use ReportValue::*;
        assert!(Integer(3).matches(Integer(3)));
        assert!(!Integer(3).matches(Integer(4)));
        assert!(Integer(3).matches(Real(3.0000000001)));
        assert!(!Integer(3).matches(Real(3.01)));
        assert!(!Integer(1).matches(Boolean(true)));
        assert!(!Skipped.matches(Skipped));
    }

    #[test]
    fn algebraic_connectivity_examples() {
        let r = algebraic_connectivity(&modulus(6)).unwrap();
        assert_eq!(
            (r.claimed, r.computed),
            (ReportValue::Integer(2), ReportValue::Integer(2))
        );
        assert!(r.agrees());
        let r = algebraic_connectivity(&modulus(9)).unwrap();
        assert_eq!(r.computed, ReportValue::Integer(6));
        assert!(r.agrees());
        let r = algebraic_connectivity(&modulus(30)).unwrap();
        assert_eq!(r.claimed, ReportValue::Integer(8));
        assert!(r.agrees(), "{r:?}");
        let r = algebraic_connectivity(&modulus(7)).unwrap();
        assert_eq!(r.computed, ReportValue::Integer(7));
        assert_eq!(r.status, ReportStatus::NotApplicable);
    }

    #[test]
    fn vertex_connectivity_examples() {
        for (n, k) in [(6, 2), (5, 4), (12, 4)] {
            let r = vertex_connectivity(&modulus(n)).unwrap();
            assert_eq!(r.computed, ReportValue::Integer(k), "n={n}");
            assert!(r.agrees());
        }
        assert_eq!(
            vertex_connectivity(&modulus(61)).unwrap().status,
            ReportStatus::Skipped
        );
    }

    #[test]
    fn g2_connectivity_examples() {
        let (g, c) = g2_connectivity_report(&modulus(30)).unwrap();
        assert_eq!(g.computed, ReportValue::Boolean(true));
        assert_eq!(c.computed, ReportValue::Boolean(true));
        assert!(g.agrees() && c.agrees());
        let (g, c) = g2_connectivity_report(&modulus(15)).unwrap();
        assert_eq!(g.computed, ReportValue::Boolean(true));
        assert_eq!(c.computed, ReportValue::Boolean(false));
        assert!(g.agrees() && c.agrees());
        let (g, c) = g2_connectivity_report(&modulus(12)).unwrap();
        assert_eq!(g.computed, ReportValue::Boolean(false));
        assert!(g.agrees());
        assert_eq!(c.status, ReportStatus::NotApplicable);
        assert_eq!(g2_connectivity_report(&modulus(7)), Err(Error::EmptyG2(7)));
    }

    #[test]
    fn g2_components_examples() {
        let r = g2_components_report(&modulus(12)).unwrap();
        assert_eq!(
            (r.claimed, r.computed),
            (ReportValue::Integer(2), ReportValue::Integer(2))
        );
        let r = g2_components_report(&modulus(30)).unwrap();
        assert!(r.agrees());
        // prime powers: every vertex of G2 is isolated
        let r = g2_components_report(&modulus(9)).unwrap();
        assert_eq!(
            (r.claimed, r.computed),
            (ReportValue::Integer(3), ReportValue::Integer(2))
        );
        assert_eq!(r.status, ReportStatus::Disagrees);
    }

    #[test]
    fn second_largest_examples() {
        let r = second_largest_report(&modulus(15)).unwrap();
        assert_eq!(r.computed, ReportValue::Boolean(true));
        assert!(r.agrees());
        assert_eq!(r.note.as_deref(), Some("λ₂ = 14"));
        let r = second_largest_report(&modulus(12)).unwrap();
        assert_eq!(r.note.as_deref(), Some("λ₂ = 10"));
        assert!(r.agrees());
        let r = second_largest_report(&modulus(8)).unwrap();
        assert_eq!(r.note.as_deref(), Some("λ₂ = 4"));
        assert!(r.agrees());
        assert_eq!(
            second_largest_report(&modulus(7)).unwrap().status,
            ReportStatus::NotApplicable
        );
    }

    #[test]
    fn multiplicity_examples() {
        let (a, b) = multiplicity_reports(&modulus(12)).unwrap();
        assert_eq!(a.computed, ReportValue::Integer(4));
        assert_eq!(b.computed, ReportValue::Integer(2));
        assert!(a.agrees() && b.agrees());
        let (a, b) = multiplicity_reports(&modulus(30)).unwrap();
        assert_eq!(
            (a.computed, b.computed),
            (ReportValue::Integer(8), ReportValue::Integer(1))
        );
        assert!(a.agrees() && b.agrees());
        // 9 / rad(9) = 3, while φ(9) = 6 has multiplicity 2
        let (a, b) = multiplicity_reports(&modulus(9)).unwrap();
        assert!(a.agrees());
        assert_eq!(
            (b.claimed, b.computed),
            (ReportValue::Integer(3), ReportValue::Integer(2))
        );
        assert_eq!(b.status, ReportStatus::Disagrees);
    }

    #[test]
    fn kappa_bound_examples() {
        let r = kappa_g2_bound(&modulus(15)).unwrap();
        assert_eq!(
            (r.claimed, r.computed),
            (ReportValue::Integer(2), ReportValue::Integer(2))
        );
        assert_eq!(kappa_bound_is_tight(&r), Some(true));
        assert!(r.agrees());
        let r = kappa_g2_bound(&modulus(30)).unwrap();
        assert_eq!(r.claimed, ReportValue::Integer(2));
        assert!(r.agrees());
        let r = kappa_g2_bound(&modulus(105)).unwrap();
        assert_eq!(r.claimed, ReportValue::Integer(8));
        assert!(r.agrees(), "{r:?}");
        assert_eq!(kappa_g2_bound(&modulus(12)), Err(Error::NotSquarefree(12)));
        assert_eq!(kappa_g2_bound(&modulus(13)), Err(Error::EmptyG2(13)));
    }
}
