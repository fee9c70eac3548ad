//! Smith normal form over the integers, with the two optimizations the
//! experiment pipeline leans on: a transform-free divisor computation
//! that reduces everything modulo the determinant, and a shadow copy of
//! the right transform kept reduced modulo a prime power.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::{bareiss_rank_det, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SnfError {
    #[error("matrix must be square and non-empty")]
    BadShape,
    #[error("walk matrix rank must be n-1 for the kernel column, got {0}")]
    WrongRank(usize),
}

/// Diagonalization `U M V = diag(d)` with unimodular U, V and a divisor
/// chain `d_i | d_{i+1}`. When `modulus_used` is set, `v` is the exact
/// transform reduced modulo that value after every column operation, so
/// `U M V = diag(d)` holds modulo the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub modulus_used: Option<BigInt>,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Exact Smith normal form by elementary operations, smallest-pivot
/// selection. Divisors are exact regardless of `modulus`; the modulus
/// only controls the reduction of the returned `v`.
pub fn smith_normal_form(m: &IntMatrix, modulus: Option<&BigInt>) -> Result<SnfResult, SnfError> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(SnfError::BadShape);
    }
    let mut a = m.to_vec();
    let mut u = identity(n);
    let mut v = identity(n);
    let reduce_v = |v: &mut IntMatrix| {
        if let Some(md) = modulus {
            for row in v.iter_mut() {
                for e in row.iter_mut() {
                    *e = e.mod_floor(md);
                }
            }
        }
    };

    let mut t = 0usize;
    'outer: while t < n {
        // find the smallest nonzero entry in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..n {
            for j in t..n {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].magnitude() < a[pi][pj].magnitude())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }

        // clear row and column t by division steps
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][t], &a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                    for j in 0..n {
                        let s = &q * &u[t][j];
                        u[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    // remainder became the smaller pivot
                    a.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[t][j], &a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        let s = &q * &a[i][t];
                        a[i][j] -= s;
                    }
                    for i in 0..n {
                        let s = &q * &v[i][t];
                        v[i][j] -= s;
                    }
                    reduce_v(&mut v);
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
        }

        // divisibility: the pivot must divide the rest of the block
        for i in t + 1..n {
            for j in t + 1..n {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    // fold that row in and redo this pivot
                    for jj in t..n {
                        let s = a[i][jj].clone();
                        a[t][jj] += s;
                    }
                    for jj in 0..n {
                        let s = u[i][jj].clone();
                        u[t][jj] += s;
                    }
                    continue 'outer;
                }
            }
        }
        t += 1;
    }

    // positive diagonal
    for i in 0..n {
        if a[i][i].is_negative() {
            for j in 0..n {
                let x = -v[j][i].clone();
                v[j][i] = x;
            }
            a[i][i] = -a[i][i].clone();
            reduce_v(&mut v);
        }
    }
    let divisors: Vec<BigInt> = (0..n).map(|i| a[i][i].clone()).filter(|d| !d.is_zero()).collect();
    Ok(SnfResult { divisors, u, v, modulus_used: modulus.cloned() })
}

/// Quotient rounded to nearest, so remainders shrink fast.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r * 2u8 > b.abs() {
        q + 1
    } else if &r * 2u8 <= -b.abs() {
        q - 1
    } else {
        q
    }
}

/// Elementary divisors of a nonsingular matrix without transforms,
/// working modulo `R = |det|` throughout so entries stay bounded. The
/// cokernel is unchanged by adjoining the generators `R e_i`, which is
/// what entry reduction amounts to.
pub fn elementary_divisors(m: &IntMatrix) -> Result<Vec<BigInt>, SnfError> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(SnfError::BadShape);
    }
    let (_, det) = bareiss_rank_det(m);
    if det.is_zero() {
        // singular: fall back to the exact transform-free path
        return Ok(smith_normal_form(m, None)?.divisors);
    }
    let r = det.abs();
    let mut a: Vec<Vec<BigInt>> =
        m.iter().map(|row| row.iter().map(|x| x.mod_floor(&r)).collect()).collect();
    let reduce = |x: &BigInt| -> BigInt { x.mod_floor(&r) };

    let mut diag: Vec<BigInt> = Vec::with_capacity(n);
    for t in 0..n {
        'pivot: loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && pivot
                            .is_none_or(|(pi, pj)| a[i][j].magnitude() < a[pi][pj].magnitude())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                diag.push(BigInt::zero());
                break 'pivot;
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in t + 1..n {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    for j in t..n {
                        let s = &q * &a[t][j];
                        a[i][j] = reduce(&(&a[i][j] - s));
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    for i in t..n {
                        let s = &q * &a[i][t];
                        a[i][j] = reduce(&(&a[i][j] - s));
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            diag.push(a[t][t].clone());
            break 'pivot;
        }
    }
    // entries were computed modulo R: recover each divisor as a gcd with
    // R, then sort the prime powers into a chain
    let mut ds: Vec<BigInt> = diag.iter().map(|d| d.gcd(&r)).collect();
    let len = ds.len();
    for _ in 0..len {
        for i in 0..len - 1 {
            for j in i + 1..len {
                let g = ds[i].gcd(&ds[j]);
                let l = (&ds[i] / &g) * &ds[j];
                ds[i] = g;
                ds[j] = l;
            }
        }
    }
    Ok(ds)
}

/// Smallest prime power `p^a >= d_n^2` with `p | d_n`, the default
/// modulus for the shadowed transform. `None` when `d_n` cannot be
/// factored within the budget.
pub fn default_modulus(d_n: &BigInt) -> Option<BigInt> {
    if d_n.is_one() {
        return Some(BigInt::from(2));
    }
    let factors = crate::factor::factorize(d_n, crate::factor::FactorBudget::default())?;
    let target = d_n * d_n;
    factors
        .iter()
        .map(|(p, _)| {
            let mut power = p.clone();
            while power < target {
                power *= p;
            }
            power
        })
        .min()
}

/// The cofactor vector of the final column of a rank-(n-1) walk matrix:
/// an integer kernel vector of the transpose, scaled so it equals the
/// vector of all final-column cofactors (only one cofactor is actually
/// computed). Zero when the first n-1 columns already drop rank.
pub fn kernel_final_column(w: &IntMatrix) -> Result<Vec<BigInt>, SnfError> {
    let n = w.len();
    if n == 0 || w.iter().any(|r| r.len() != n) {
        return Err(SnfError::BadShape);
    }
    let wt = crate::matrix::transpose(w);
    let (rank, _) = bareiss_rank_det(&wt);
    if rank != n - 1 {
        return Err(SnfError::WrongRank(rank));
    }
    let k = crate::matrix::integer_kernel_vector(&wt).expect("rank checked");
    let i_star = k.iter().position(|x| !x.is_zero()).expect("kernel vector nonzero");
    // C_{i*, n} = (-1)^(i* + n) det(W without row i*, column n)
    let minor: IntMatrix = (0..n)
        .filter(|&i| i != i_star)
        .map(|i| w[i][..n - 1].to_vec())
        .collect();
    let mut cof = crate::matrix::determinant(&minor);
    if (i_star + n + 1) % 2 == 1 {
        // (-1)^(i+1 + n) with 1-based indices: (i_star+1) + n
        cof = -cof;
    }
    let (scale, rem) = cof.div_rem(&k[i_star]);
    debug_assert!(rem.is_zero(), "cofactor vector is an integer multiple of the kernel");
    Ok(k.iter().map(|x| x * &scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_vec;
    use cospectra_graphs::Xoshiro256StarStar;

    fn from_i64(m: &[&[i64]]) -> IntMatrix {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn check_snf(m: &IntMatrix, r: &SnfResult) {
        let n = m.len();
        assert!(r.modulus_used.is_none());
        // U M V = diag(d)
        let prod = mat_mul(&mat_mul(&r.u, m), &r.v);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j && i < r.divisors.len() {
                    r.divisors[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(prod[i][j], want, "at ({i},{j})");
            }
        }
        // unimodular transforms
        assert_eq!(crate::matrix::determinant(&r.u).abs(), BigInt::one());
        assert_eq!(crate::matrix::determinant(&r.v).abs(), BigInt::one());
        // divisor chain
        for w in r.divisors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain {:?}", r.divisors);
        }
    }

    #[test]
    fn identity_and_diagonal() {
        let id = from_i64(&[&[1, 0], &[0, 1]]);
        let r = smith_normal_form(&id, None).unwrap();
        assert_eq!(r.divisors, vec![BigInt::one(), BigInt::one()]);
        check_snf(&id, &r);
        let d = from_i64(&[&[2, 0], &[0, 6]]);
        let r = smith_normal_form(&d, None).unwrap();
        assert_eq!(r.divisors, vec![BigInt::from(2), BigInt::from(6)]);
        check_snf(&d, &r);
        // divisor chain forces a reshuffle here
        let d = from_i64(&[&[4, 0], &[0, 6]]);
        let r = smith_normal_form(&d, None).unwrap();
        assert_eq!(r.divisors, vec![BigInt::from(2), BigInt::from(12)]);
        check_snf(&d, &r);
    }

    #[test]
    fn random_matrices_full_checks() {
        let mut rng = Xoshiro256StarStar::new(31415);
        for trial in 0..60 {
            let n = 1 + rng.next_below(5) as usize;
            let m: IntMatrix = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.next_below(19) as i64 - 9)).collect())
                .collect();
            let r = smith_normal_form(&m, None).unwrap();
            check_snf(&m, &r);
            // divisor product equals |det| for nonsingular input
            let det = crate::matrix::determinant(&m).abs();
            if !det.is_zero() {
                let prod: BigInt = r.divisors.iter().product();
                assert_eq!(prod, det, "trial {trial}");
                assert_eq!(elementary_divisors(&m).unwrap(), r.divisors);
            }
        }
    }

    #[test]
    fn divisors_invariant_under_unimodular_moves() {
        let mut rng = Xoshiro256StarStar::new(999);
        for _ in 0..20 {
            let n = 3;
            let m: IntMatrix = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.next_below(15) as i64 - 7)).collect())
                .collect();
            let mut m2 = m.clone();
            // random row/column additions
            for _ in 0..6 {
                let a = rng.next_below(n as u64) as usize;
                let b = rng.next_below(n as u64) as usize;
                if a != b {
                    for j in 0..n {
                        let s = m2[b][j].clone();
                        m2[a][j] += s;
                    }
                }
            }
            assert_eq!(
                smith_normal_form(&m, None).unwrap().divisors,
                smith_normal_form(&m2, None).unwrap().divisors
            );
        }
    }

    #[test]
    fn modular_v_matches_exact_v() {
        let mut rng = Xoshiro256StarStar::new(271828);
        let modulus = BigInt::from(243); // 3^5
        for _ in 0..50 {
            let n = 4;
            let m: IntMatrix = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.next_below(19) as i64 - 9)).collect())
                .collect();
            let exact = smith_normal_form(&m, None).unwrap();
            let modular = smith_normal_form(&m, Some(&modulus)).unwrap();
            assert_eq!(exact.divisors, modular.divisors);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(exact.v[i][j].mod_floor(&modulus), modular.v[i][j]);
                }
            }
            // U M V = diag(d) modulo the modulus
            let prod = mat_mul(&mat_mul(&modular.u, &m), &modular.v);
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j && i < modular.divisors.len() {
                        modular.divisors[i].mod_floor(&modulus)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(prod[i][j].mod_floor(&modulus), want);
                }
            }
        }
    }

    #[test]
    fn default_modulus_examples() {
        // d = 12, d^2 = 144: 2^8 = 256 vs 3^5 = 243 -> 243
        assert_eq!(default_modulus(&BigInt::from(12)), Some(BigInt::from(243)));
        assert_eq!(default_modulus(&BigInt::from(2)), Some(BigInt::from(4)));
    }

    #[test]
    fn kernel_column_hand_case() {
        // W = [[1, 0], [0, 0]]: kernel of W^T is (0, 1); the only
        // nonzero cofactor of the final column is C_22 = 1
        let w = from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(kernel_final_column(&w).unwrap(), vec![BigInt::zero(), BigInt::one()]);
        let full = from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(kernel_final_column(&full), Err(SnfError::WrongRank(2)));
    }

    #[test]
    fn kernel_column_matches_all_cofactors() {
        let mut rng = Xoshiro256StarStar::new(17);
        let mut done = 0;
        while done < 30 {
            let n = 3 + (rng.next_below(4)) as usize; // up to 6
            // build a rank-(n-1) matrix: random times a rank-deficient projector
            let mut m: IntMatrix = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(rng.next_below(9) as i64 - 4)).collect())
                .collect();
            // force a linear relation: last row = sum of the others
            let mut last: Vec<BigInt> = vec![BigInt::zero(); n];
            for row in m.iter().take(n - 1) {
                for (j, x) in row.iter().enumerate() {
                    last[j] += x;
                }
            }
            m[n - 1] = last;
            if crate::matrix::bareiss_rank_det(&m).0 != n - 1 {
                continue;
            }
            done += 1;
            let fast = kernel_final_column(&m).unwrap();
            // oracle: all cofactors of the final column
            let brute: Vec<BigInt> = (0..n)
                .map(|i| {
                    let minor: IntMatrix = (0..n)
                        .filter(|&r| r != i)
                        .map(|r| m[r][..n - 1].to_vec())
                        .collect();
                    let det = crate::matrix::determinant(&minor);
                    if (i + n + 1) % 2 == 1 {
                        -det
                    } else {
                        det
                    }
                })
                .collect();
            assert_eq!(fast, brute);
            // the result annihilates W^T
            let wt = crate::matrix::transpose(&m);
            assert!(mat_vec(&wt, &fast).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_column_sign_flips_with_row_swap() {
        let mut m = from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let a = kernel_final_column(&m).unwrap();
        m.swap(0, 2);
        let b = kernel_final_column(&m).unwrap();
        // swapping two rows of W flips every final-column cofactor's sign
        // and permutes the entries accordingly
        let expect: Vec<BigInt> = vec![-a[2].clone(), -a[1].clone(), -a[0].clone()];
        assert_eq!(b, expect);
    }
}
