//! Exact integer dense-matrix routines: fraction-free elimination for
//! rank and determinant, integer kernel vectors, and CRT-based linear
//! solves for systems whose solutions are known to be integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_vec(m: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Fraction-free (Bareiss) elimination with full pivoting.
/// Returns the rank and, for square full-rank input, the determinant
/// (zero otherwise).
pub fn bareiss_rank_det(m: &IntMatrix) -> (usize, BigInt) {
    let rows = m.len();
    if rows == 0 {
        return (0, BigInt::one());
    }
    let cols = m[0].len();
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut r = 0usize;
    for step in 0..rows.min(cols) {
        // smallest nonzero pivot in the remaining block limits growth
        let mut pivot: Option<(usize, usize)> = None;
        for i in step..rows {
            for j in step..cols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].magnitude() < a[pi][pj].magnitude())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != step {
            a.swap(pi, step);
            sign = -sign;
        }
        if pj != step {
            for row in a.iter_mut() {
                row.swap(pj, step);
            }
            sign = -sign;
        }
        r += 1;
        for i in step + 1..rows {
            for j in step + 1..cols {
                let num = &a[i][j] * &a[step][step] - &a[i][step] * &a[step][j];
                a[i][j] = num / &prev;
            }
            a[i][step] = BigInt::zero();
        }
        prev = a[step][step].clone();
        if step + 1 == rows.min(cols) {
            break;
        }
    }
    let det = if rows == cols && r == rows {
        let mut d = a[rows - 1][rows - 1].clone();
        if sign < 0 {
            d = -d;
        }
        d
    } else {
        BigInt::zero()
    };
    (r, det)
}

pub fn rank(m: &IntMatrix) -> usize {
    bareiss_rank_det(m).0
}

pub fn determinant(m: &IntMatrix) -> BigInt {
    bareiss_rank_det(m).1
}

/// Primitive integer kernel vector of a square matrix of rank n-1
/// (`m x = 0`), content one, sign chosen so the first nonzero entry is
/// positive. `None` when the rank is not n-1.
pub fn integer_kernel_vector(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    // rational elimination with column pivot tracking
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut col_of: Vec<usize> = (0..n).collect();
    let mut pivots = 0usize;
    for step in 0..n {
        let mut found = None;
        'outer: for i in step..n {
            for j in step..n {
                if !a[i][j].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        a.swap(pi, step);
        if pj != step {
            for row in a.iter_mut() {
                row.swap(pj, step);
            }
            col_of.swap(pj, step);
        }
        pivots += 1;
        let pivot = a[step][step].clone();
        for i in step + 1..n {
            if a[i][step].is_zero() {
                continue;
            }
            let factor = &a[i][step] / &pivot;
            for j in step..n {
                let sub = &factor * &a[step][j];
                a[i][j] -= sub;
            }
        }
    }
    if pivots != n - 1 {
        return None;
    }
    // back-substitute with the free variable (column n-1) set to one
    let mut x = vec![BigRational::zero(); n];
    x[n - 1] = BigRational::one();
    for i in (0..n - 1).rev() {
        let mut s = BigRational::zero();
        for j in i + 1..n {
            s += &a[i][j] * &x[j];
        }
        x[i] = -s / &a[i][i];
    }
    // un-permute, clear denominators, strip content
    let mut denom = BigInt::one();
    for v in &x {
        denom = denom.lcm(v.denom());
    }
    let mut out = vec![BigInt::zero(); n];
    for (slot, v) in x.iter().enumerate() {
        out[col_of[slot]] = (v * BigRational::from(denom.clone())).to_integer();
    }
    let mut content = BigInt::zero();
    for v in &out {
        content = content.gcd(v);
    }
    if content.is_zero() {
        return None;
    }
    for v in out.iter_mut() {
        *v /= &content;
    }
    if let Some(first) = out.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in out.iter_mut() {
                *v = -&*v;
            }
        }
    }
    Some(out)
}

/// Log2 of the Hadamard bound on |det|, rounded up (an overestimate is
/// fine); also bounds every minor of the matrix.
pub fn hadamard_bound_bits(m: &IntMatrix) -> u64 {
    let mut bits = 2f64;
    let cols = m.first().map_or(0, Vec::len).max(1) as f64;
    for row in m {
        let max_bits = row.iter().map(|x| x.bits()).max().unwrap_or(0) as f64;
        bits += max_bits + cols.log2() / 2.0 + 1.0;
    }
    bits.ceil() as u64 + 1
}

const PRIME_SEED: u64 = (1 << 62) - 57;

/// Deterministic supply of ~62-bit primes.
pub fn working_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = PRIME_SEED;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
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

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Solve `m x = b` when the solution is an integer vector with entries
/// bounded by `2^bound_bits`, by CRT over word-size primes. The result
/// is verified exactly; `None` when `m` is singular modulo every prime
/// tried or verification fails.
pub fn solve_integer_system(m: &IntMatrix, b: &[BigInt], bound_bits: u64) -> Option<Vec<BigInt>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let needed = (bound_bits / 61 + 2) as usize;
    // skip primes where the matrix loses rank; a nonsingular integer
    // matrix is singular modulo only finitely many of them
    let supply = working_primes(needed + 8);
    let mut primes: Vec<u64> = Vec::with_capacity(needed);
    let mut residues: Vec<Vec<u64>> = Vec::with_capacity(needed);
    for &p in &supply {
        if primes.len() == needed {
            break;
        }
        let a_p: Vec<Vec<u64>> = m
            .iter()
            .map(|row| row.iter().map(|x| to_u64_mod(x, p)).collect())
            .collect();
        let b_p: Vec<u64> = b.iter().map(|x| to_u64_mod(x, p)).collect();
        if let Some(sol) = solve_mod_p(a_p, b_p, p) {
            primes.push(p);
            residues.push(sol);
        }
    }
    if primes.len() < needed {
        return None;
    }
    // CRT combine, centered
    let mut modulus = BigInt::one();
    let mut x = vec![BigInt::zero(); n];
    for (idx, &p) in primes.iter().enumerate() {
        let p_big = BigInt::from(p);
        for i in 0..n {
            // lift x[i] so it matches residues[idx][i] mod p
            let cur = ((&x[i]) % &p_big + &p_big) % &p_big;
            let want = BigInt::from(residues[idx][i]);
            let diff = ((&want - &cur) % &p_big + &p_big) % &p_big;
            let inv = mod_inverse(&(&modulus % &p_big), &p_big)?;
            let t = (diff * inv) % &p_big;
            x[i] += &modulus * t;
        }
        modulus *= &p_big;
    }
    let half = &modulus / 2;
    for v in x.iter_mut() {
        let r = ((&*v) % &modulus + &modulus) % &modulus;
        *v = if r > half { r - &modulus } else { r };
    }
    if mat_vec(m, &x) == b.to_vec() {
        Some(x)
    } else {
        None
    }
}

fn to_u64_mod(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(((e.x % m) + m) % m)
    } else {
        None
    }
}

/// Gaussian elimination mod p.
pub fn solve_mod_p(mut a: Vec<Vec<u64>>, mut b: Vec<u64>, p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut where_col = vec![usize::MAX; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(piv) = (row..n).find(|&i| a[i][col] % p != 0) else { continue };
        a.swap(row, piv);
        b.swap(row, piv);
        let inv = pow_mod(a[row][col], p - 2, p);
        for j in col..n {
            a[row][j] = mul_mod(a[row][j], inv, p);
        }
        b[row] = mul_mod(b[row], inv, p);
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in col..n {
                    let t = mul_mod(f, a[row][j], p);
                    a[i][j] = (a[i][j] + p - t) % p;
                }
                let t = mul_mod(f, b[row], p);
                b[i] = (b[i] + p - t) % p;
            }
        }
        where_col[col] = row;
        row += 1;
        if row == n {
            break;
        }
    }
    if row < n {
        return None; // singular mod p
    }
    let mut x = vec![0u64; n];
    for col in 0..n {
        x[col] = b[where_col[col]];
    }
    Some(x)
}

/// Kernel basis of `a x = 0` over F_p (a is m x n, row-major).
pub fn kernel_mod_p(a: &[Vec<u64>], n_cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let m = rows.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for col in 0..n_cols {
        let Some(piv) = (r..m).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][col], p - 2, p);
        for j in 0..n_cols {
            rows[r][j] = mul_mod(rows[r][j], inv, p);
        }
        for i in 0..m {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..n_cols {
                    let t = mul_mod(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - t) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        r += 1;
        if r == m {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut is_pivot = vec![false; n_cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..n_cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; n_cols];
        v[free] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            let coeff = rows[ri][free];
            if coeff != 0 {
                v[pc] = p - coeff;
            }
        }
        basis.push(v);
    }
    basis
}

pub fn rank_mod_p(a: &[Vec<u64>], n_cols: usize, p: u64) -> usize {
    n_cols - kernel_mod_p(a, n_cols, p).len()
}
