//! Exact Laplacian spectra through the divisor-class quotient.
//!
//! Removing the units and zero from `Γ(Z_n)` leaves `G2`, the graph on the
//! nonzero non-units. The classes `A_d = {x : gcd(x, n) = d}` over proper
//! divisors `d` are independent sets, and two classes are either completely
//! joined (`gcd(d_i, d_j) = 1`) or not joined at all. So `G2` is a join of null
//! graphs over the coprimality graph `H` of the proper divisors, and its
//! Laplacian spectrum is
//!
//! * `N_i` with multiplicity `|A_{d_i}| - 1` for every class, where `N_i` is
//!   the total size of the classes joined to `A_{d_i}`, plus
//! * the eigenvalues of the `w x w` quotient matrix `B`.
//!
//! `B` has `B[i][i] = N_i` and `B[i][j] = -|A_{d_j}|` for coprime pairs. It is similar to the symmetric
//! matrix with off-diagonal `-sqrt(|A_i| |A_j|)` via `diag(sqrt |A_i|)`, so the
//! spectrum is real, and it keeps every computation in exact integers.
//!
//! The full graph is `K_phi(n)` joined to `G2 ∪ {0}`, which gives
//! `x (x - n)^phi(n) mu(G2, x - phi(n))` as its characteristic polynomial.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::divisors::{gcd, is_prime, Modulus};
use crate::graph::SimpleGraph;
use crate::linalg::IntMatrix;
use crate::poly::{IntPoly, IntegerRoots};
use crate::{Error, Result};

/// `H`: proper divisors of `n`, adjacent when coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimalityGraph {
    pub divisors: Vec<u64>,
    pub graph: SimpleGraph,
}

impl CoprimalityGraph {
    /// Edges as divisor pairs `(d_i, d_j)` with `d_i < d_j`.
    pub fn divisor_edges(&self) -> Vec<(u64, u64)> {
        self.graph
            .edges()
            .map(|(i, j)| (self.divisors[i], self.divisors[j]))
            .collect()
    }
}

pub fn coprimality_graph(m: &Modulus) -> CoprimalityGraph {
    let divisors = m.proper_divisors().to_vec();
    let graph =
        SimpleGraph::from_predicate(divisors.len(), |i, j| gcd(divisors[i], divisors[j]) == 1);
    CoprimalityGraph { divisors, graph }
}

/// The integer quotient matrix of `G2` over the divisor classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    divisors: Vec<u64>,
    class_sizes: Vec<u64>,
    entries: IntMatrix,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// `|A_{d_i}| = phi(n / d_i)`.
    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// `N_{d_i}`.
    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.dim())
            .map(|i| self.entries[(i, i)] as u64)
            .collect()
    }

    /// `det(x I - B)`.
    pub fn char_poly(&self) -> IntPoly {
        self.entries.char_poly()
    }
}

pub fn g2_quotient(m: &Modulus) -> QuotientMatrix {
    let divisors = m.proper_divisors().to_vec();
    let class_sizes: Vec<u64> = divisors.iter().map(|&d| m.cofactor_phi(d)).collect();
    let w = divisors.len();
    let mut entries = IntMatrix::zeros(w);
    for i in 0..w {
        let mut joined = 0i64;
        for j in 0..w {
            if i != j && gcd(divisors[i], divisors[j]) == 1 {
                entries[(i, j)] = -(class_sizes[j] as i64);
                joined += class_sizes[j] as i64;
            }
        }
        entries[(i, i)] = joined;
    }
    QuotientMatrix {
        divisors,
        class_sizes,
        entries,
    }
}

/// Eigenvalues with multiplicity: exact integers plus the roots of a stored
/// residual polynomial that has no integer roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumMultiset {
    /// `(value, multiplicity)`, values strictly descending, multiplicities positive.
    integer_part: Vec<(u64, u64)>,
    residual: IntPoly,
}

impl SpectrumMultiset {
    /// Merges repeated values and drops zero multiplicities.
    pub fn new(values: impl IntoIterator<Item = (u64, u64)>, residual: IntPoly) -> Self {
        let mut part: Vec<(u64, u64)> = values.into_iter().filter(|&(_, m)| m > 0).collect();
        part.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(part.len());
        for (v, m) in part {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += m,
                _ => merged.push((v, m)),
            }
        }
        let residual = if residual.degree() == 0 {
            IntPoly::one()
        } else {
            residual
        };
        SpectrumMultiset {
            integer_part: merged,
            residual,
        }
    }

    pub fn integral(values: impl IntoIterator<Item = (u64, u64)>) -> Self {
        SpectrumMultiset::new(values, IntPoly::one())
    }

    pub fn integer_part(&self) -> &[(u64, u64)] {
        &self.integer_part
    }

    /// Constant `1` when every eigenvalue is an integer.
    pub fn residual(&self) -> &IntPoly {
        &self.residual
    }

    pub fn is_integral(&self) -> bool {
        self.residual.degree() == 0
    }

    /// Multiplicity of an integer value.
    pub fn multiplicity(&self, value: u64) -> u64 {
        self.integer_part
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of eigenvalues counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.integer_part.iter().map(|&(_, m)| m).sum::<u64>() + self.residual.degree() as u64
    }

    /// Every eigenvalue moved up by `c`.
    pub fn shifted(&self, c: u64) -> Self {
        SpectrumMultiset {
            integer_part: self.integer_part.iter().map(|&(v, m)| (v + c, m)).collect(),
            residual: self.residual.translate(&BigInt::from(c)),
        }
    }

    pub fn union(&self, other: &SpectrumMultiset) -> Self {
        SpectrumMultiset::new(
            self.integer_part.iter().chain(&other.integer_part).copied(),
            &self.residual * &other.residual,
        )
    }

    /// `prod (x - v)^m * residual`.
    pub fn char_poly(&self) -> IntPoly {
        let roots: Vec<(BigInt, u64)> = self
            .integer_part
            .iter()
            .map(|&(v, m)| (BigInt::from(v), m))
            .collect();
        &IntPoly::from_roots(roots.iter().map(|(r, m)| (r, *m))) * &self.residual
    }

    /// Numeric roots of the residual with multiplicity, ascending.
    pub fn residual_roots(&self) -> Result<Vec<(f64, u64)>> {
        self.residual.real_roots()
    }

    /// All eigenvalues as doubles, ascending, with multiplicity expanded.
    pub fn eigenvalues_ascending(&self) -> Result<Vec<f64>> {
        let mut out: Vec<f64> = Vec::with_capacity(self.total() as usize);
        for &(v, m) in &self.integer_part {
            out.extend(core::iter::repeat_n(v as f64, m as usize));
        }
        for (r, m) in self.residual_roots()? {
            out.extend(core::iter::repeat_n(r, m as usize));
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }

    /// Distinct eigenvalues, descending, integers tagged exact.
    pub fn distinct_descending(&self) -> Result<Vec<Eigenvalue>> {
        let mut out: Vec<Eigenvalue> = self
            .integer_part
            .iter()
            .map(|&(v, m)| Eigenvalue {
                value: v as f64,
                exact: Some(v),
                multiplicity: m,
            })
            .collect();
        for (r, m) in self.residual_roots()? {
            out.push(Eigenvalue {
                value: r,
                exact: None,
                multiplicity: m,
            });
        }
        out.sort_by(|a, b| b.value.total_cmp(&a.value));
        Ok(out)
    }
}

/// One distinct eigenvalue of a [`SpectrumMultiset`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: f64,
    /// The exact value when it is an integer.
    pub exact: Option<u64>,
    pub multiplicity: u64,
}

fn to_eigenvalue(r: &BigInt) -> Result<u64> {
    if r.is_negative() {
        return Err(Error::NegativeEigenvalue(crate::error::BigIntDisplay(
            r.clone(),
        )));
    }
    r.to_u64().ok_or(Error::Inconsistent(
        "integer eigenvalue does not fit in u64",
    ))
}

/// Laplacian spectrum of `G2` (empty when `n` is prime).
pub fn g2_spectrum(m: &Modulus) -> Result<SpectrumMultiset> {
    let b = g2_quotient(m);
    let IntegerRoots { roots, residual } = b.char_poly().extract_integer_roots();
    let mut values = Vec::with_capacity(roots.len() + b.dim());
    for (r, mult) in &roots {
        values.push((to_eigenvalue(r)?, *mult));
    }
    // each null class contributes N_i with multiplicity |A_i| - 1
    for (n_i, size) in b.diagonal().into_iter().zip(b.class_sizes()) {
        values.push((n_i, size - 1));
    }
    let spec = SpectrumMultiset::new(values, residual);
    let expected = m.n() - m.phi() - 1;
    if spec.total() != expected {
        return Err(Error::Inconsistent(
            "G2 spectrum size differs from its vertex count",
        ));
    }
    Ok(spec)
}

/// Laplacian spectrum of `Γ(Z_n)`: `{0} ∪ {n^phi(n)} ∪ (spectrum(G2) + phi(n))`.
pub fn full_spectrum(m: &Modulus) -> Result<SpectrumMultiset> {
    let g2 = g2_spectrum(m)?.shifted(m.phi());
    let spec = g2.union(&SpectrumMultiset::integral([(0, 1), (m.n(), m.phi())]));
    debug_assert_eq!(spec.total(), m.n());
    Ok(spec)
}

/// `mu(G2, x)` assembled from the class part and the quotient.
pub fn g2_char_poly(m: &Modulus) -> IntPoly {
    let b = g2_quotient(m);
    let class_part: Vec<(BigInt, u64)> = b
        .diagonal()
        .into_iter()
        .zip(b.class_sizes())
        .map(|(n_i, &size)| (BigInt::from(n_i), size - 1))
        .collect();
    &IntPoly::from_roots(class_part.iter().map(|(r, k)| (r, *k))) * &b.char_poly()
}

/// `x (x - n)^phi(n) mu(G2, x - phi(n))`.
pub fn full_char_poly(m: &Modulus) -> IntPoly {
    let n = BigInt::from(m.n());
    let head = &IntPoly::x() * &IntPoly::linear_root(&n).pow(m.phi());
    &head * &g2_char_poly(m).translate(&BigInt::from(m.phi()))
}

pub fn is_laplacian_integral(m: &Modulus) -> Result<bool> {
    Ok(full_spectrum(m)?.is_integral())
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `Γ(Z_p) = K_p`: `{p^(p-1), 0}`.
pub fn closed_form_prime(p: u64) -> Result<SpectrumMultiset> {
    require_prime(p)?;
    if p < 3 {
        return Err(Error::TooSmall { n: p, min: 3 });
    }
    Ok(SpectrumMultiset::integral([(p, p - 1), (0, 1)]))
}

/// `n = p^m`, `m >= 2`: `G2` is edgeless, giving `{n^phi, phi^(n - phi - 1), 0}`.
pub fn closed_form_prime_power(p: u64, m: u32) -> Result<SpectrumMultiset> {
    require_prime(p)?;
    if m < 2 {
        return Err(Error::Exponent { got: m, min: 2 });
    }
    let n = p.pow(m);
    let phi = n - n / p;
    Ok(SpectrumMultiset::integral([
        (n, phi),
        (phi, n - phi - 1),
        (0, 1),
    ]))
}

/// `n = p^a q^b` with `p < q`: `G2` is the join of the `p`-power and `q`-power
/// classes plus `t = p^(a-1) q^(b-1) - 1` isolated vertices.
pub fn closed_form_two_primes(p: u64, q: u64, alpha: u32, beta: u32) -> Result<SpectrumMultiset> {
    if p >= q {
        return Err(Error::PrimeOrder { p, q });
    }
    require_prime(p)?;
    require_prime(q)?;
    for e in [alpha, beta] {
        if e < 1 {
            return Err(Error::Exponent { got: e, min: 1 });
        }
    }
    let n = p.pow(alpha) * q.pow(beta);
    let phi = (p - 1) * p.pow(alpha - 1) * (q - 1) * q.pow(beta - 1);
    let t1 = p.pow(alpha - 1) * q.pow(beta - 1);
    // zero multiplicities (p = 2, a = b = 1) are dropped by the constructor
    Ok(SpectrumMultiset::integral([
        (n, phi),
        (t1 * (p - 1) + phi, t1 * (q - 1) - 1),
        (t1 * (q - 1) + phi, t1 * (p - 1) - 1),
        (phi, t1),
        (t1 * (p + q - 2) + phi, 1),
        (0, 1),
    ]))
}

/// The closed form matching the shape of `n`, if there is one.
pub fn closed_form(m: &Modulus) -> Option<Result<SpectrumMultiset>> {
    match *m.factorization() {
        [(p, 1)] => Some(closed_form_prime(p)),
        [(p, e)] => Some(closed_form_prime_power(p, e)),
        [(p, a), (q, b)] => Some(closed_form_two_primes(p, q, a, b)),
        _ => None,
    }
}
