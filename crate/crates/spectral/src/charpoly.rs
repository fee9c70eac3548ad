use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use cospectra_graphs::Graph;

use crate::poly::IntPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("path length {0} out of range (need n >= 1)")]
    PathRange(usize),
    #[error("cycle length {0} out of range (need n >= 3)")]
    CycleRange(usize),
}

/// Characteristic polynomial `det(xI - A)` of the adjacency matrix,
/// exact integer coefficients via the Faddeev–LeVerrier recurrence
/// (every division is exact). A checked-i128 pass handles small graphs;
/// anything that would overflow falls back to big integers.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    match char_poly_i128(g) {
        Some(p) => p,
        None => char_poly_bigint(g),
    }
}

fn char_poly_i128(g: &Graph) -> Option<IntPolynomial> {
    let n = g.n();
    if n == 0 {
        return Some(IntPolynomial::one());
    }
    // c[n] = 1; M_1 = A; c_{n-k} = -tr(M_k)/k; M_{k+1} = A(M_k + c_{n-k} I)
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m: Vec<i128> = vec![0; n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            m[u * n + v] = 1;
        }
    }
    for k in 1..=n {
        let mut tr: i128 = 0;
        for i in 0..n {
            tr = tr.checked_add(m[i * n + i])?;
        }
        coeffs[n - k] = -tr / k as i128;
        if k == n {
            break;
        }
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(coeffs[n - k])?;
        }
        // m <- A * m, one sparse row pass per vertex
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for &w in g.neighbors(i) {
                for j in 0..n {
                    next[i * n + j] = next[i * n + j].checked_add(m[w * n + j])?;
                }
            }
        }
        m = next;
    }
    Some(IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect()))
}

fn char_poly_bigint(g: &Graph) -> IntPolynomial {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            m[u * n + v] = BigInt::one();
        }
    }
    for k in 1..=n {
        let mut tr = BigInt::zero();
        for i in 0..n {
            tr += &m[i * n + i];
        }
        coeffs[n - k] = -tr / k;
        if k == n {
            break;
        }
        for i in 0..n {
            let c = coeffs[n - k].clone();
            m[i * n + i] += c;
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for &w in g.neighbors(i) {
                for j in 0..n {
                    next[i * n + j] += &m[w * n + j];
                }
            }
        }
        m = next;
    }
    IntPolynomial::new(coeffs)
}

/// Equal adjacency spectra (coefficient-wise equality of char polys).
pub fn are_cospectral(g: &Graph, h: &Graph) -> bool {
    char_poly(g) == char_poly(h)
}

/// Cospectral with cospectral complements.
pub fn are_r_cospectral(g: &Graph, h: &Graph) -> bool {
    are_cospectral(g, h) && are_cospectral(&g.complement(), &h.complement())
}

/// The pair (char poly, complement's char poly): equal fingerprints are
/// exactly R-cospectrality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SpectralFingerprint {
    pub char_poly: IntPolynomial,
    pub complement_char_poly: IntPolynomial,
}

impl SpectralFingerprint {
    pub fn of(g: &Graph) -> Self {
        SpectralFingerprint {
            char_poly: char_poly(g),
            complement_char_poly: char_poly(&g.complement()),
        }
    }
}

/// `phi(P_n)` by the recurrence `phi(P_n) = x phi(P_{n-1}) - phi(P_{n-2})`,
/// `phi(P_0) = 1`.
pub fn path_char_poly(n: usize) -> Result<IntPolynomial, PolyError> {
    if n < 1 {
        return Err(PolyError::PathRange(n));
    }
    Ok(path_poly_unchecked(n))
}

fn path_poly_unchecked(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::one(); // P_0
    let mut cur = IntPolynomial::monomial(1); // P_1
    for _ in 1..n {
        let next = cur.shift(1).sub(&prev);
        prev = cur;
        cur = next;
    }
    if n == 0 {
        prev
    } else {
        cur
    }
}

/// `phi(C_n) = phi(P_n) - phi(P_{n-2}) - 2` for `n >= 3`.
pub fn cycle_char_poly(n: usize) -> Result<IntPolynomial, PolyError> {
    if n < 3 {
        return Err(PolyError::CycleRange(n));
    }
    Ok(path_poly_unchecked(n)
        .sub(&path_poly_unchecked(n - 2))
        .add_scalar(-2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospectra_graphs::{sample_gnp, SampleConfig};

    /// Independent oracle: expand det(xI - A) over all permutations.
    /// Each permutation contributes sign(s) * (-1)^(moved) * x^(fixed)
    /// when every non-fixed position sits on an edge.
    fn char_poly_permanent_style(g: &Graph) -> IntPolynomial {
        let n = g.n();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mut fixed = 0usize;
            let mut ok = true;
            for i in 0..n {
                if perm[i] == i {
                    fixed += 1;
                } else if !g.has_edge(i, perm[i]) {
                    ok = false;
                    break;
                }
            }
            if ok {
                // permutation sign from cycle count
                let mut seen = vec![false; n];
                let mut cycles = 0;
                for s in 0..n {
                    if !seen[s] {
                        cycles += 1;
                        let mut x = s;
                        while !seen[x] {
                            seen[x] = true;
                            x = perm[x];
                        }
                    }
                }
                let sign = if (n - cycles) % 2 == 0 { 1 } else { -1 };
                let moved_sign = if (n - fixed) % 2 == 0 { 1 } else { -1 };
                coeffs[fixed] += sign * moved_sign;
            }
            // next permutation
            if n < 2 {
                break;
            }
            let mut i = n - 2;
            loop {
                if perm[i] < perm[i + 1] {
                    break;
                }
                if i == 0 {
                    return IntPolynomial::new(coeffs);
                }
                i -= 1;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i] {
                j -= 1;
            }
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        IntPolynomial::new(coeffs)
    }

    #[test]
    fn known_small_polynomials() {
        assert_eq!(char_poly(&Graph::empty(1)), IntPolynomial::from_i64(&[0, 1])); // x
        assert_eq!(char_poly(&Graph::path(2)), IntPolynomial::from_i64(&[-1, 0, 1])); // x^2-1
        assert_eq!(char_poly(&Graph::path(3)), IntPolynomial::from_i64(&[0, -2, 0, 1])); // x^3-2x
        assert_eq!(
            char_poly(&Graph::cycle(4)),
            IntPolynomial::from_i64(&[0, 0, -4, 0, 1]) // x^4-4x^2
        );
    }

    #[test]
    fn agrees_with_permutation_expansion() {
        for t in 0..60 {
            let n = 1 + t % 8;
            let g = sample_gnp(&SampleConfig::new(n, 2.5, 31_000 + t as u64));
            assert_eq!(char_poly(&g), char_poly_permanent_style(&g), "n={n} t={t}");
        }
    }

    #[test]
    fn bigint_path_matches_i128_path() {
        for t in 0..20 {
            let g = sample_gnp(&SampleConfig::new(10, 3.0, 77_000 + t));
            assert_eq!(super::char_poly_i128(&g).unwrap(), super::char_poly_bigint(&g));
        }
    }

    #[test]
    fn structural_coefficients() {
        for t in 0..80 {
            let n = 2 + t % 7;
            let g = sample_gnp(&SampleConfig::new(n, 2.0, 5_500 + t as u64));
            let p = char_poly(&g);
            assert_eq!(p.coeff(n), BigInt::from(1));
            assert_eq!(p.coeff(n - 1), BigInt::from(0), "trace-free");
            assert_eq!(p.coeff(n - 2), BigInt::from(-(g.edge_count() as i64)));
            if n >= 3 {
                let mut triangles = 0i64;
                for u in 0..n {
                    for v in u + 1..n {
                        for w in v + 1..n {
                            if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                                triangles += 1;
                            }
                        }
                    }
                }
                assert_eq!(p.coeff(n - 3), BigInt::from(-2 * triangles));
            }
        }
    }

    #[test]
    fn cospectral_examples() {
        let g = sample_gnp(&SampleConfig::new(12, 2.0, 9));
        assert!(are_cospectral(&g, &g));
        assert!(!are_cospectral(&Graph::complete(3), &Graph::path(3)));

        // C4 + K1 and K_{1,4}: cospectral but not R-cospectral
        let c4k1 = Graph::cycle(4).disjoint_union(&Graph::empty(1));
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(are_cospectral(&c4k1, &star));
        assert!(!are_r_cospectral(&c4k1, &star));

        // relabelings are R-cospectral
        let h = g.relabel(&[3, 1, 4, 0, 2, 5, 7, 6, 11, 10, 9, 8]);
        assert!(are_r_cospectral(&g, &h));
    }

    #[test]
    fn disjoint_union_multiplies() {
        for t in 0..30 {
            let g = sample_gnp(&SampleConfig::new(5, 2.0, 100 + t));
            let h = sample_gnp(&SampleConfig::new(4, 2.0, 200 + t));
            assert_eq!(
                char_poly(&g.disjoint_union(&h)),
                char_poly(&g).mul(&char_poly(&h))
            );
        }
    }

    #[test]
    fn path_and_cycle_recurrences_match_determinants() {
        assert_eq!(path_char_poly(2).unwrap(), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(cycle_char_poly(4).unwrap(), IntPolynomial::from_i64(&[0, 0, -4, 0, 1]));
        for n in 1..=12 {
            assert_eq!(path_char_poly(n).unwrap(), char_poly(&Graph::path(n)), "P_{n}");
            if n >= 3 {
                assert_eq!(cycle_char_poly(n).unwrap(), char_poly(&Graph::cycle(n)), "C_{n}");
            }
        }
        assert_eq!(path_char_poly(0), Err(PolyError::PathRange(0)));
        assert_eq!(cycle_char_poly(2), Err(PolyError::CycleRange(2)));
    }

    #[test]
    fn cospectrality_invariant_under_relabeling() {
        for t in 0..40 {
            let g = sample_gnp(&SampleConfig::new(9, 2.2, 660 + t));
            let perm: Vec<usize> = {
                let mut rng = cospectra_graphs::Xoshiro256StarStar::new(t);
                let mut p: Vec<usize> = (0..9).collect();
                for i in (1..9).rev() {
                    let j = rng.next_below(i as u64 + 1) as usize;
                    p.swap(i, j);
                }
                p
            };
            assert_eq!(char_poly(&g), char_poly(&g.relabel(&perm)));
        }
    }
}
