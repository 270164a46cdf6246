//! Number-theoretic substrate: gcd, trial-division factorization, Euler's
//! totient, radicals and the ordered proper-divisor list of `n`.

use alloc::vec::Vec;

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

fn phi_from_factors(factors: &[(u64, u32)]) -> u64 {
    factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn euler_phi(n: u64) -> Result<u64> {
    match n {
        0 => Err(Error::TooSmall { n, min: 1 }),
        1 => Ok(1),
        _ => Ok(phi_from_factors(&factorize(n)?)),
    }
}

pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.iter().map(|&(p, _)| p).product())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n).as_deref(), Ok([(_, 1)]))
}

fn all_divisors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = alloc::vec![1u64];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Divisors `d` of `n` with `1 < d < n`, ascending. Empty for prime `n`.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let divs = all_divisors(&factorize(n)?);
    Ok(divs[1..divs.len() - 1].to_vec())
}

/// `n >= 3` together with everything downstream code needs about it.
///
/// Built once; the spectral code never refactorizes `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    n: u64,
    factorization: Vec<(u64, u32)>,
    phi: u64,
    radical: u64,
    proper_divisors: Vec<u64>,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let factorization = factorize(n)?;
        let phi = phi_from_factors(&factorization);
        let radical = factorization.iter().map(|&(p, _)| p).product();
        let divs = all_divisors(&factorization);
        let proper_divisors = divs[1..divs.len() - 1].to_vec();
        Ok(Modulus {
            n,
            factorization,
            phi,
            radical,
            proper_divisors,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn radical(&self) -> u64 {
        self.radical
    }

    /// `(prime, exponent)` pairs, primes ascending.
    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    /// `d_1 < d_2 < ... < d_w`.
    pub fn proper_divisors(&self) -> &[u64] {
        &self.proper_divisors
    }

    /// Number of proper divisors.
    pub fn w(&self) -> usize {
        self.proper_divisors.len()
    }

    pub fn distinct_prime_count(&self) -> usize {
        self.factorization.len()
    }

    pub fn is_prime(&self) -> bool {
        self.factorization == [(self.n, 1)]
    }

    pub fn is_squarefree(&self) -> bool {
        self.radical == self.n
    }

    pub fn largest_prime(&self) -> u64 {
        self.factorization.last().map(|&(p, _)| p).unwrap_or(1)
    }

    /// `phi(n / d)` for a divisor `d` of `n`, using the stored factorization.
    ///
    /// This is the size of the class of residues `x` with `gcd(x, n) = d`.
    pub fn cofactor_phi(&self, d: u64) -> u64 {
        debug_assert!(d != 0 && self.n % d == 0);
        let mut rest = d;
        let mut phi = 1;
        for &(p, e) in &self.factorization {
            let mut k = 0;
            while k < e && rest % p == 0 {
                rest /= p;
                k += 1;
            }
            if e > k {
                phi *= (p - 1) * p.pow(e - k - 1);
            }
        }
        phi
    }

    /// Every divisor of `n` including `1` and `n`, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        all_divisors(&self.factorization)
    }

    /// `"p1^a1*p2^a2"`, exponents of one omitted.
    pub fn factorization_string(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        for (i, &(p, e)) in self.factorization.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            let _ = write!(s, "{p}");
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap(), vec![(97, 1)]);
        assert_eq!(factorize(360).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), Err(Error::TooSmall { n: 1, min: 2 }));
        assert!(factorize(0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(7).unwrap(), 6);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn proper_divisor_examples() {
        assert_eq!(proper_divisors(12).unwrap(), vec![2, 3, 4, 6]);
        assert_eq!(proper_divisors(13).unwrap(), Vec::<u64>::new());
        assert_eq!(proper_divisors(30).unwrap(), vec![2, 3, 5, 6, 10, 15]);
        assert!(proper_divisors(2).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(12).unwrap(), 6);
        assert_eq!(radical(30).unwrap(), 30);
        assert_eq!(radical(8).unwrap(), 2);
        assert!(radical(1).is_err());
    }

    #[test]
    fn modulus_rejects_small() {
        assert!(Modulus::new(2).is_err());
        let m = Modulus::new(3).unwrap();
        assert!(m.is_prime());
        assert_eq!(m.w(), 0);
    }

    #[test]
    fn factorization_string_format() {
        assert_eq!(
            Modulus::new(360).unwrap().factorization_string(),
            "2^3*3^2*5"
        );
        assert_eq!(Modulus::new(7).unwrap().factorization_string(), "7");
    }

    #[test]
    fn modulus_invariants_small_range() {
        for n in 3..=2000u64 {
            let m = Modulus::new(n).unwrap();
            let prod: u64 = m.factorization().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(m.factorization().windows(2).all(|w| w[0].0 < w[1].0));
            assert_eq!(m.phi(), brute_phi(n), "phi({n})");
            let tau: usize = m
                .factorization()
                .iter()
                .map(|&(_, e)| e as usize + 1)
                .product();
            assert_eq!(m.w() + 2, tau);
            let brute: Vec<u64> = (2..n).filter(|d| n % d == 0).collect();
            assert_eq!(m.proper_divisors(), &brute[..]);
            assert_eq!(n % m.radical(), 0);
            for &d in m.proper_divisors() {
                assert_eq!(m.cofactor_phi(d), brute_phi(n / d));
            }
            assert_eq!(m.cofactor_phi(1), m.phi());
            assert_eq!(m.cofactor_phi(n), 1);
        }
    }

    proptest! {
        #[test]
        fn squarefree_iff_radical_is_n(n in 3u64..100_000) {
            let m = Modulus::new(n).unwrap();
            let squarefree = m.factorization().iter().all(|&(_, e)| e == 1);
            prop_assert_eq!(squarefree, m.radical() == n);
            prop_assert_eq!(n % m.radical(), 0);
        }

        #[test]
        fn class_sizes_partition_n(n in 3u64..20_000) {
            let m = Modulus::new(n).unwrap();
            let total: u64 = m.divisors().iter().map(|&d| m.cofactor_phi(d)).sum();
            prop_assert_eq!(total, n);
        }
    }
}
