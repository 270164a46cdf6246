//! Brute-force ground truth, kept independent of the quotient pipeline.
//!
//! * [`numeric_spectrum`]: dense symmetric eigensolver (Householder
//!   tridiagonalization followed by implicit QL).
//! * [`exact_char_poly_full`]: `det(x I - L)` of the full `n x n` Laplacian,
//!   computed modulo word-size primes by Hessenberg reduction and lifted by CRT.
//! * [`min_vertex_cut`] and [`connected_components`] on explicit graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::comax::dense_laplacian;
use crate::divisors::Modulus;
use crate::graph::SimpleGraph;
use crate::linalg::IntMatrix;
use crate::poly::IntPoly;
use crate::{Error, Result};

/// Largest `n` for which the exact full characteristic polynomial is computed.
pub const EXACT_LIMIT: u64 = 64;

/// Largest vertex count accepted by [`min_vertex_cut`].
pub const CUT_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseSpectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Bound on the backward error of the computed eigenvalues.
    pub backward_error: f64,
}

/// All eigenvalues of a symmetric integer matrix, ascending.
pub fn numeric_spectrum(l: &IntMatrix, limit: usize) -> Result<DenseSpectrum> {
    let n = l.dim();
    if n > limit {
        return Err(Error::SizeLimit { size: n, limit });
    }
    if !l.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a: Vec<f64> = l.rows().flat_map(|r| r.iter().map(|&v| v as f64)).collect();
    let frobenius = libm::sqrt(a.iter().map(|v| v * v).sum::<f64>());
    let (mut d, mut e) = tridiagonalize(&mut a, n);
    implicit_ql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(DenseSpectrum {
        eigenvalues: d,
        backward_error: 4.0 * n as f64 * f64::EPSILON * frobenius,
    })
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// Returns `(diagonal, off-diagonal)` with `off[i]` coupling `i` and `i + 1`.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let idx = |i: usize, j: usize| i * n + j;
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[idx(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[idx(i, l)];
            } else {
                for k in 0..=l {
                    a[idx(i, k)] /= scale;
                    h += a[idx(i, k)] * a[idx(i, k)];
                }
                let f = a[idx(i, l)];
                let g = if f >= 0.0 {
                    -libm::sqrt(h)
                } else {
                    libm::sqrt(h)
                };
                e[i] = scale * g;
                h -= f * g;
                a[idx(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[idx(j, k)] * a[idx(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[idx(k, j)] * a[idx(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[idx(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[idx(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[idx(j, k)] -= f * e[k] + g * a[idx(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[idx(i, l)];
        }
        d[i] = h;
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[idx(i, i)];
    }
    // re-index: off-diagonal element coupling i and i+1
    if n > 0 {
        e.remove(0);
        e.push(0.0);
    }
    (d, e)
}

/// Eigenvalues of a symmetric tridiagonal matrix by QL with implicit shifts.
fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 64 {
                return Err(Error::Inconsistent("tridiagonal QL did not converge"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// `det(x I - L(Γ(Z_n)))` with exact coefficients, `n <= EXACT_LIMIT`.
pub fn exact_char_poly_full(m: &Modulus) -> Result<IntPoly> {
    if m.n() > EXACT_LIMIT {
        return Err(Error::SizeLimit {
            size: m.n() as usize,
            limit: EXACT_LIMIT as usize,
        });
    }
    let l = dense_laplacian(m, EXACT_LIMIT as usize)?;
    Ok(char_poly_modular(&l))
}

/// Characteristic polynomial of an integer matrix by multi-modular Hessenberg
/// reduction and Chinese remaindering.
pub fn char_poly_modular(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    // |eigenvalue| <= max absolute row sum, so |c_k| <= C(n, k) rho^k <= (1 + rho)^n
    let rho = a
        .rows()
        .map(|r| r.iter().map(|v| v.unsigned_abs()).sum::<u64>())
        .max()
        .unwrap_or(0);
    let bound_bits = n as f64 * libm::log2(1.0 + rho as f64) + 2.0;
    let mut modulus = BigUint::one();
    let mut residues: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    let mut prime = 1u64 << 62;
    while (modulus.bits() as f64) < bound_bits + 1.0 {
        prime = previous_prime(prime);
        let cp = char_poly_mod_p(a, prime);
        // Garner step: x' = x + M * ((r - x) * M^-1 mod p)
        let m_mod = (&modulus % prime).to_u64().unwrap_or(0);
        let m_inv = inv_mod(m_mod, prime);
        for (x, &r) in residues.iter_mut().zip(&cp) {
            let x_mod = (&*x % prime).to_u64().unwrap_or(0);
            let delta = mul_mod(sub_mod(r, x_mod, prime), m_inv, prime);
            *x += &modulus * delta;
        }
        modulus *= prime;
    }
    let half = &modulus >> 1;
    let coeffs = residues
        .into_iter()
        .map(|x| {
            if x > half {
                BigInt::from(x) - BigInt::from(modulus.clone())
            } else {
                BigInt::from(x)
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn previous_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if is_prime_u64(n) {
            return n;
        }
    }
}

/// Coefficients of `det(x I - A) mod p`, constant first, length `n + 1`.
fn char_poly_mod_p(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.dim();
    let reduce = |v: i64| -> u64 {
        let r = v.rem_euclid(p as i64);
        r as u64
    };
    let mut h: Vec<Vec<u64>> = a
        .rows()
        .map(|r| r.iter().map(|&v| reduce(v)).collect())
        .collect();
    // similarity transform to upper Hessenberg form
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul_mod(u, h[m][j], p);
                h[i][j] = sub_mod(h[i][j], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod sub-diagonal) p_{k-i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = sub_mod(next[i], mul_mod(h[k - 1][k - 1], c, p), p);
        }
        let mut t = 1u64;
        for i in 1..k {
            t = mul_mod(t, h[k - i][k - i - 1], p);
            let coef = mul_mod(t, h[k - i - 1][k - 1], p);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                next[j] = sub_mod(next[j], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap_or_else(|| vec![1])
}

pub fn connected_components(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    components
}

/// Vertex connectivity `κ(G)`.
///
/// Complete graphs report `n - 1` without searching and disconnected graphs
/// report 0. Otherwise Even's scheme: some vertex among the first `κ + 1`
/// survives a minimum separator, so only pairs `(v_i, v_j)`, `i <= best`,
/// `j > i`, need their local connectivity, each by unit-capacity max-flow on
/// the vertex-split graph.
pub fn min_vertex_cut(g: &SimpleGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > CUT_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: CUT_LIMIT,
        });
    }
    if g.is_complete() {
        return Ok(n.saturating_sub(1));
    }
    if connected_components(g) > 1 {
        return Ok(0);
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut network = SplitNetwork::new(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if best == 0 {
                return Ok(0);
            }
            if !g.has_edge(i, j) {
                let flow = network.max_flow(i, j, best);
                best = best.min(flow);
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize) -> usize {
    SplitNetwork::new(g).max_flow(s, t, usize::MAX)
}

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    rev: usize,
    cap: usize,
    initial: usize,
}

/// Vertex `v` becomes `2v` (in) and `2v + 1` (out) joined by a unit arc.
struct SplitNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let big = n + 1;
        let mut arcs: Vec<Vec<Arc>> = vec![Vec::new(); 2 * n];
        let add = |arcs: &mut Vec<Vec<Arc>>, from: usize, to: usize, cap: usize| {
            let rev_from = arcs[to].len();
            let rev_to = arcs[from].len();
            arcs[from].push(Arc {
                to,
                rev: rev_from,
                cap,
                initial: cap,
            });
            arcs[to].push(Arc {
                to: from,
                rev: rev_to,
                cap: 0,
                initial: 0,
            });
        };
        for v in 0..n {
            add(&mut arcs, 2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            add(&mut arcs, 2 * u + 1, 2 * v, big);
            add(&mut arcs, 2 * v + 1, 2 * u, big);
        }
        SplitNetwork {
            level: vec![0; 2 * n],
            cursor: vec![0; 2 * n],
            arcs,
        }
    }

    /// Dinic from `s`'s out-node to `t`'s in-node, stopping once `cap` is reached.
    fn max_flow(&mut self, s: usize, t: usize, cap: usize) -> usize {
        for list in &mut self.arcs {
            for a in list.iter_mut() {
                a.cap = a.initial;
            }
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < cap && self.bfs(source, sink) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(source, sink, cap - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= cap {
                    break;
                }
            }
        }
        flow
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[sink] >= 0
    }

    fn dfs(&mut self, v: usize, sink: usize, limit: usize) -> usize {
        if v == sink {
            return limit;
        }
        while self.cursor[v] < self.arcs[v].len() {
            let a = self.arcs[v][self.cursor[v]];
            if a.cap > 0 && self.level[a.to] == self.level[v] + 1 {
                let pushed = self.dfs(a.to, sink, limit.min(a.cap));
                if pushed > 0 {
                    self.arcs[v][self.cursor[v]].cap -= pushed;
                    self.arcs[a.to][a.rev].cap += pushed;
                    return pushed;
                }
            }
            self.cursor[v] += 1;
        }
        0
    }
}
