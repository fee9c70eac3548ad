//! Budgeted integer factorization: trial division, Miller–Rabin, and
//! Pollard–Brent rho. Returns `None` when the budget runs out with a
//! composite cofactor left, so callers can surface a termination rather
//! than a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy)]
pub struct FactorBudget {
    /// Iterations per Pollard–Brent attempt.
    pub rho_iterations: u64,
    /// Attempts (with different polynomial offsets) per composite.
    pub rho_attempts: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { rho_iterations: 1 << 20, rho_attempts: 6 }
    }
}

/// Prime factorization of `n > 0`, sorted, or `None` on budget
/// exhaustion.
pub fn factorize(n: &BigInt, budget: FactorBudget) -> Option<Vec<(BigInt, u32)>> {
    assert!(n.is_positive(), "factorize needs a positive integer");
    let mut factors: Vec<BigInt> = Vec::new();
    let mut stack = vec![n.clone()];
    while let Some(mut m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        for small in 2u64..=101 {
            let small = BigInt::from(small);
            while (&m % &small).is_zero() {
                factors.push(small.clone());
                m /= &small;
            }
        }
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            factors.push(m);
            continue;
        }
        // trial division continues cheaply for word-size values
        if let Some(small) = m.to_u64() {
            let mut d = 103u64;
            let mut m64 = small;
            while d.saturating_mul(d) <= m64 {
                if m64 % d == 0 {
                    factors.push(BigInt::from(d));
                    m64 /= d;
                } else {
                    d += 2;
                }
            }
            if m64 > 1 {
                factors.push(BigInt::from(m64));
            }
            continue;
        }
        let split = pollard_brent(&m, budget)?;
        stack.push(m / &split);
        stack.push(split);
    }
    factors.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for f in factors {
        match out.last_mut() {
            Some((p, e)) if *p == f => *e += 1,
            _ => out.push((f, 1)),
        }
    }
    Some(out)
}

/// Miller–Rabin with 30 fixed pseudo-random bases; deterministic for
/// word-size inputs and overwhelmingly reliable beyond.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return crate::matrix::is_prime_u64(small);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut base_rng = cospectra_graphs::SplitMix64::new(0x4D52_4D52);
    'witness: for _ in 0..30 {
        let a = BigInt::from(2u64 + base_rng.next_u64() % ((1 << 62) - 4));
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt, budget: FactorBudget) -> Option<BigInt> {
    let one = BigInt::one();
    let two = BigInt::from(2);
    if (n % &two).is_zero() {
        return Some(two);
    }
    let mut seed = cospectra_graphs::SplitMix64::new(0x9E11_0C5);
    for _ in 0..budget.rho_attempts {
        let c = BigInt::from(1 + seed.next_u64() % 1_000_003);
        let mut x = BigInt::from(2 + seed.next_u64() % 1_000_003);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let mut iter = 0u64;
        let mut saved = x.clone();
        let mut product = BigInt::one();
        while d.is_one() && iter < budget.rho_iterations {
            // Brent cycle with batched gcds
            for _ in 0..128 {
                x = (&x * &x + &c) % n;
                y = (&y * &y + &c) % n;
                y = (&y * &y + &c) % n;
                let diff = (&x - &y).abs();
                if diff.is_zero() {
                    break;
                }
                product = (product * diff) % n;
                iter += 1;
            }
            d = product.gcd(n);
            if d.is_one() {
                saved = x.clone();
                product = BigInt::one();
            } else if &d == n {
                // overshoot: redo from the last checkpoint one step at a time
                let mut x2 = saved.clone();
                d = BigInt::one();
                while d.is_one() {
                    x2 = (&x2 * &x2 + &c) % n;
                    d = (&x2 - &y).abs().gcd(n);
                    if x2 == y {
                        break;
                    }
                }
                if d.is_one() || &d == n {
                    break; // this attempt failed; try another offset
                }
            }
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
    }
    None
}
