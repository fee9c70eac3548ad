//! Linear algebra over F_2 on packed bit vectors, polynomial
//! factorization over F_2, and the invariant-submodule search used by
//! the 2-adic refutation step of certification.

/// Bit vector, LSB-first in 64-bit words.
pub type Bv = Vec<u64>;

pub fn bv_new(bits: usize) -> Bv {
    vec![0u64; bits.div_ceil(64)]
}

pub fn bv_get(v: &Bv, i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

pub fn bv_set(v: &mut Bv, i: usize) {
    v[i / 64] |= 1 << (i % 64);
}

pub fn bv_xor_into(dst: &mut Bv, src: &Bv) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

pub fn bv_dot(a: &Bv, b: &Bv) -> bool {
    a.iter().zip(b).fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones()) & 1 == 1
}

pub fn bv_weight(v: &Bv) -> u64 {
    v.iter().map(|w| w.count_ones() as u64).sum()
}

pub fn bv_is_zero(v: &Bv) -> bool {
    v.iter().all(|&w| w == 0)
}

fn lowest_set_bit(v: &Bv) -> Option<usize> {
    for (wi, &w) in v.iter().enumerate() {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Incremental echelon basis over F_2 for membership and coordinate
/// queries: each stored row keeps the combination that produced it.
pub struct Echelon {
    rows: Vec<(usize, Bv, Bv)>, // (pivot, reduced vector, combination)
    dim_in: usize,
}

impl Echelon {
    pub fn new(ambient_bits: usize) -> Self {
        Echelon { rows: Vec::new(), dim_in: ambient_bits }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Insert vector number `index`; returns false when it was already
    /// in the span.
    pub fn insert(&mut self, v: &Bv, index: usize, index_capacity: usize) -> bool {
        let mut vec = v.clone();
        let mut combo = bv_new(index_capacity);
        bv_set(&mut combo, index);
        for (piv, row, row_combo) in &self.rows {
            if bv_get(&vec, *piv) {
                bv_xor_into(&mut vec, row);
                bv_xor_into(&mut combo, row_combo);
            }
        }
        match lowest_set_bit(&vec) {
            Some(piv) => {
                debug_assert!(piv < self.dim_in);
                self.rows.push((piv, vec, combo));
                true
            }
            None => false,
        }
    }

    /// Coordinates of `v` over the inserted vectors, if in the span.
    pub fn coordinates(&self, v: &Bv, index_capacity: usize) -> Option<Bv> {
        let mut vec = v.clone();
        let mut combo = bv_new(index_capacity);
        for (piv, row, row_combo) in &self.rows {
            if bv_get(&vec, *piv) {
                bv_xor_into(&mut vec, row);
                bv_xor_into(&mut combo, row_combo);
            }
        }
        if bv_is_zero(&vec) {
            Some(combo)
        } else {
            None
        }
    }
}

/// Kernel basis of the system `rows . x = 0` over F_2.
pub fn kernel_basis(rows: &[Bv], n_cols: usize) -> Vec<Bv> {
    let mut work: Vec<Bv> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..n_cols {
        let Some(pr) = (r..work.len()).find(|&i| bv_get(&work[i], col)) else { continue };
        work.swap(r, pr);
        let row = work[r].clone();
        for (i, w) in work.iter_mut().enumerate() {
            if i != r && bv_get(w, col) {
                bv_xor_into(w, &row);
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == work.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; n_cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..n_cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = bv_new(n_cols);
        bv_set(&mut v, free);
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            if bv_get(&work[ri], free) {
                bv_set(&mut v, pc);
            }
        }
        basis.push(v);
    }
    basis
}

pub fn rank2(rows: &[Bv], n_cols: usize) -> usize {
    n_cols - kernel_basis(rows, n_cols).len()
}

// ---------------------------------------------------------------------
// Polynomials over F_2, LSB-first bit-packed coefficients.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2(pub Vec<u64>);

impl Poly2 {
    pub fn zero() -> Self {
        Poly2(Vec::new())
    }
    pub fn one() -> Self {
        Poly2(vec![1])
    }
    pub fn x() -> Self {
        Poly2(vec![2])
    }
    pub fn from_coeff_bits(bits: &[usize]) -> Self {
        let mut v = bv_new(bits.iter().max().map_or(1, |&m| m + 1));
        for &b in bits {
            bv_set(&mut v, b);
        }
        Poly2(v).trimmed()
    }
    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> usize {
        match self.0.last() {
            None => 0,
            Some(&w) => (self.0.len() - 1) * 64 + (63 - w.leading_zeros() as usize),
        }
    }
    pub fn coeff(&self, i: usize) -> bool {
        i / 64 < self.0.len() && self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut v = vec![0u64; self.0.len().max(other.0.len())];
        for (i, &w) in self.0.iter().enumerate() {
            v[i] ^= w;
        }
        for (i, &w) in other.0.iter().enumerate() {
            v[i] ^= w;
        }
        Poly2(v).trimmed()
    }
    pub fn shifted(&self, k: usize) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let mut v = vec![0u64; (self.degree() + k) / 64 + 1];
        for i in 0..=self.degree() {
            if self.coeff(i) {
                v[(i + k) / 64] |= 1 << ((i + k) % 64);
            }
        }
        Poly2(v).trimmed()
    }
    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut acc = Poly2::zero();
        for i in 0..=other.degree() {
            if other.coeff(i) {
                acc = acc.add(&self.shifted(i));
            }
        }
        acc
    }
    pub fn rem(&self, modulus: &Poly2) -> Poly2 {
        assert!(!modulus.is_zero());
        let dm = modulus.degree();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dm {
            let shift = r.degree() - dm;
            r = r.add(&modulus.shifted(shift));
        }
        r
    }
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
    /// Formal derivative (keeps odd-degree coefficients, shifted down).
    pub fn derivative(&self) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let mut v = bv_new(self.degree() + 1);
        for i in (1..=self.degree()).step_by(2) {
            if self.coeff(i) {
                bv_set(&mut v, i - 1);
            }
        }
        Poly2(v).trimmed()
    }
    /// Square root of a polynomial in F_2[x^2].
    pub fn sqrt(&self) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let mut v = bv_new(self.degree() / 2 + 1);
        for i in (0..=self.degree()).step_by(2) {
            if self.coeff(i) {
                bv_set(&mut v, i / 2);
            }
        }
        Poly2(v).trimmed()
    }
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly2) -> Poly2 {
        let mut base = self.rem(modulus);
        let mut acc = Poly2::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }
}

/// `x^(2^e) mod f` by repeated squaring.
fn frobenius_power(e: usize, f: &Poly2) -> Poly2 {
    let mut acc = Poly2::x().rem(f);
    for _ in 0..e {
        acc = acc.mul(&acc).rem(f);
    }
    acc
}

/// Irreducible factors with multiplicities.
pub fn factor_poly2(f: &Poly2) -> Vec<(Poly2, u32)> {
    assert!(!f.is_zero() && f.degree() >= 1);
    let mut out: Vec<(Poly2, u32)> = Vec::new();
    // squarefree decomposition first
    for (sf, mult) in squarefree_parts(f) {
        for g in factor_squarefree(&sf) {
            match out.iter_mut().find(|(p, _)| *p == g) {
                Some((_, e)) => *e += mult,
                None => out.push((g, mult)),
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0 .0).cmp(&(b.0.degree(), &b.0 .0)));
    out
}

fn squarefree_parts(f: &Poly2) -> Vec<(Poly2, u32)> {
    let mut out: Vec<(Poly2, u32)> = Vec::new();
    let mut stack = vec![(f.clone(), 1u32)];
    while let Some((g, mult)) = stack.pop() {
        if g.degree() == 0 {
            continue;
        }
        let d = g.derivative();
        if d.is_zero() {
            // g = h(x)^2
            stack.push((g.sqrt(), mult * 2));
            continue;
        }
        let s = g.gcd(&d);
        if s.degree() == 0 {
            out.push((g, mult));
            continue;
        }
        // squarefree part times the rest
        let part = poly_div_exact(&g, &s);
        stack.push((part, mult));
        stack.push((s, mult));
    }
    // merge duplicates
    let mut merged: Vec<(Poly2, u32)> = Vec::new();
    for (p, m) in out {
        match merged.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += m,
            None => merged.push((p, m)),
        }
    }
    merged
}

fn poly_div_exact(a: &Poly2, b: &Poly2) -> Poly2 {
    // long division, remainder must vanish
    let mut r = a.clone();
    let mut q = Poly2::zero();
    let db = b.degree();
    while !r.is_zero() && r.degree() >= db {
        let shift = r.degree() - db;
        q = q.add(&Poly2::one().shifted(shift));
        r = r.add(&b.shifted(shift));
    }
    debug_assert!(r.is_zero(), "division must be exact");
    q
}

fn factor_squarefree(f: &Poly2) -> Vec<Poly2> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut d = 1usize;
    while rest.degree() >= 1 {
        if rest.degree() < 2 * d {
            out.push(rest.clone());
            break;
        }
        // x^(2^d) - x mod rest
        let xq = frobenius_power(d, &rest);
        let split = xq.add(&Poly2::x().rem(&rest)).gcd(&rest);
        if split.degree() >= 1 {
            equal_degree_split(&split, d, &mut out);
            rest = poly_div_exact(&rest, &split);
        }
        d += 1;
    }
    out
}

/// Cantor–Zassenhaus in characteristic 2 via trace maps.
fn equal_degree_split(f: &Poly2, d: usize, out: &mut Vec<Poly2>) {
    if f.degree() == d {
        out.push(f.clone());
        return;
    }
    let mut rng = cospectra_graphs::SplitMix64::new(0xF2_FAC ^ f.degree() as u64);
    loop {
        // random polynomial of degree < deg f
        let mut coeffs = bv_new(f.degree());
        for w in coeffs.iter_mut() {
            *w = rng.next_u64();
        }
        if f.degree() % 64 != 0 {
            let last = coeffs.len() - 1;
            coeffs[last] &= (1u64 << (f.degree() % 64)) - 1;
        }
        let u = Poly2(coeffs).trimmed().rem(f);
        if u.is_zero() {
            continue;
        }
        // trace map u + u^2 + u^4 + ... (d terms)
        let mut trace = u.clone();
        let mut power = u.clone();
        for _ in 1..d {
            power = power.mul(&power).rem(f);
            trace = trace.add(&power);
        }
        let g = trace.gcd(f);
        if g.degree() >= 1 && g.degree() < f.degree() {
            equal_degree_split(&g, d, out);
            equal_degree_split(&poly_div_exact(f, &g), d, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------
// Invariant-submodule admissibility search.

/// Apply a linear operator given by columns: `cols[i]` is the image of
/// basis vector `i`.
fn apply_columns(cols: &[Bv], x: &Bv, dim: usize) -> Bv {
    let mut out = bv_new(dim);
    for (i, col) in cols.iter().enumerate() {
        if bv_get(x, i) {
            bv_xor_into(&mut out, col);
        }
    }
    out
}

/// Minimal polynomial of the operator with the given columns, as the
/// lcm of the annihilators of all standard basis vectors; verified.
pub fn min_poly(cols: &[Bv], dim: usize) -> Poly2 {
    if dim == 0 {
        return Poly2::one();
    }
    let mut mu = Poly2::one();
    for start in 0..dim {
        let mut e = bv_new(dim);
        bv_set(&mut e, start);
        // Krylov sequence until dependence
        let mut ech = Echelon::new(dim);
        let mut seq: Vec<Bv> = vec![e.clone()];
        let mut v = e;
        let mut idx = 0;
        while ech.insert(&v, idx, dim + 1) {
            v = apply_columns(cols, &v, dim);
            seq.push(v.clone());
            idx += 1;
        }
        // v = seq[last] depends on earlier: coordinates give the annihilator
        let combo = ech.coordinates(&v, dim + 1).expect("dependence just detected");
        let mut bits: Vec<usize> = vec![seq.len() - 1];
        for i in 0..seq.len() - 1 {
            if bv_get(&combo, i) {
                bits.push(i);
            }
        }
        let ann = Poly2::from_coeff_bits(&bits);
        // mu = lcm(mu, ann)
        let g = mu.gcd(&ann);
        mu = poly_div_exact(&mu.mul(&ann), &g);
    }
    mu
}

/// Evaluate `g(T) v` by Horner's rule with `T` given by columns.
fn apply_poly(cols: &[Bv], g: &Poly2, v: &Bv, dim: usize) -> Bv {
    let mut acc = bv_new(dim);
    if g.is_zero() {
        return acc;
    }
    for i in (0..=g.degree()).rev() {
        acc = apply_columns(cols, &acc, dim);
        if g.coeff(i) {
            bv_xor_into(&mut acc, v);
        }
    }
    acc
}

/// Decision input for the 2-adic test: the ambient space, an operator on
/// it, and an invariant subspace described by a basis.
pub struct SubmoduleSearch<'a> {
    /// Ambient dimension (number of graph vertices).
    pub n: usize,
    /// Basis of the invariant subspace in ambient coordinates.
    pub kernel: &'a [Bv],
    /// Image of each kernel basis vector under the operator, in ambient
    /// coordinates.
    pub images: &'a [Bv],
    /// Cap on enumerated minimal submodules.
    pub cap: u64,
}

/// Does the subspace contain a nonzero operator-invariant subspace that
/// is self-orthogonal and doubly even (every member's weight divisible
/// by four)? `Some(true)`: yes, a witness exists. `Some(false)`: no.
/// `None`: enumeration cap exceeded, undecided.
///
/// Any admissible subspace contains a minimal invariant one, and the
/// properties pass to submodules, so only minimal submodules need
/// checking; those are enumerated per irreducible factor of the minimal
/// polynomial.
pub fn admissible_submodule_exists(search: &SubmoduleSearch) -> Option<bool> {
    let dim = search.kernel.len();
    if dim == 0 {
        return Some(false);
    }
    // operator in subspace coordinates
    let mut ech = Echelon::new(search.n);
    for (i, k) in search.kernel.iter().enumerate() {
        assert!(ech.insert(k, i, dim), "kernel basis must be independent");
    }
    let mut t_cols: Vec<Bv> = Vec::with_capacity(dim);
    for img in search.images {
        t_cols.push(ech.coordinates(img, dim)?);
    }

    let lift = |x: &Bv| -> Bv {
        let mut out = bv_new(search.n);
        for (i, k) in search.kernel.iter().enumerate() {
            if bv_get(x, i) {
                bv_xor_into(&mut out, k);
            }
        }
        out
    };

    let admissible = |basis_coords: &[Bv]| -> bool {
        let lifted: Vec<Bv> = basis_coords.iter().map(&lift).collect();
        for (i, a) in lifted.iter().enumerate() {
            if bv_weight(a) % 4 != 0 {
                return false;
            }
            for b in &lifted[i + 1..] {
                if bv_dot(a, b) {
                    return false;
                }
            }
        }
        true
    };

    let mu = min_poly(&t_cols, dim);
    for (g, _) in factor_poly2(&mu) {
        let dg = g.degree();
        // kernel of g(T): rows of g(T) in subspace coordinates
        let gt_cols: Vec<Bv> = (0..dim)
            .map(|i| {
                let mut e = bv_new(dim);
                bv_set(&mut e, i);
                apply_poly(&t_cols, &g, &e, dim)
            })
            .collect();
        // build row matrix for kernel computation: row j has bit i when
        // (g(T))_{j i} = 1
        let rows: Vec<Bv> = (0..dim)
            .map(|j| {
                let mut row = bv_new(dim);
                for (i, col) in gt_cols.iter().enumerate() {
                    if bv_get(col, j) {
                        bv_set(&mut row, i);
                    }
                }
                row
            })
            .collect();
        let socle = kernel_basis(&rows, dim);
        let db = socle.len();
        if db == 0 {
            continue;
        }
        debug_assert_eq!(db % dg, 0, "isotypic dimension divisible by factor degree");
        let blocks = db / dg;

        // cyclic decomposition: greedily pick generators
        let mut gens: Vec<Bv> = Vec::new();
        let mut span = Echelon::new(dim);
        let mut inserted = 0usize;
        for v in &socle {
            if span.coordinates(v, db + 1).is_some() {
                continue;
            }
            gens.push(v.clone());
            let mut w = v.clone();
            for _ in 0..dg {
                span.insert(&w, inserted, db + 1);
                inserted += 1;
                w = apply_columns(&t_cols, &w, dim);
            }
            if gens.len() == blocks {
                break;
            }
        }
        debug_assert_eq!(gens.len(), blocks);

        if blocks == 1 {
            let basis: Vec<Bv> = cyclic_basis(&t_cols, &gens[0], dg, dim);
            if admissible(&basis) {
                return Some(true);
            }
            continue;
        }

        // minimal submodules = projective combinations over F_{2^dg}
        if dg >= 63 {
            return None;
        }
        let q: u128 = 1u128 << dg;
        let count = (q.pow(blocks as u32) - 1) / (q - 1);
        if count > search.cap as u128 {
            return None;
        }
        // precompute T^i g_j for scalar application
        let powers: Vec<Vec<Bv>> = gens
            .iter()
            .map(|g0| cyclic_basis(&t_cols, g0, dg, dim))
            .collect();
        let scalar_apply = |alpha: u64, j: usize| -> Bv {
            let mut out = bv_new(dim);
            for (i, p) in powers[j].iter().enumerate() {
                if alpha >> i & 1 == 1 {
                    bv_xor_into(&mut out, p);
                }
            }
            out
        };
        for lead in 0..blocks {
            let free = blocks - lead - 1;
            let mut counters = vec![0u64; free];
            loop {
                let mut w = powers[lead][0].clone();
                for (f, &alpha) in counters.iter().enumerate() {
                    if alpha != 0 {
                        bv_xor_into(&mut w, &scalar_apply(alpha, lead + 1 + f));
                    }
                }
                let basis = cyclic_basis(&t_cols, &w, dg, dim);
                if admissible(&basis) {
                    return Some(true);
                }
                // increment the mixed-radix counter over F_q^free
                let mut pos = 0;
                loop {
                    if pos == free {
                        break;
                    }
                    counters[pos] += 1;
                    if counters[pos] < q as u64 {
                        break;
                    }
                    counters[pos] = 0;
                    pos += 1;
                }
                if pos == free {
                    break;
                }
            }
        }
    }
    Some(false)
}

fn cyclic_basis(t_cols: &[Bv], v: &Bv, deg: usize, dim: usize) -> Vec<Bv> {
    let mut out = Vec::with_capacity(deg);
    let mut w = v.clone();
    for _ in 0..deg {
        out.push(w.clone());
        w = apply_columns(t_cols, &w, dim);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_rank() {
        // rows: x0 + x1 = 0, x1 + x2 = 0 over F_2^3 -> kernel = {(1,1,1)}
        let mut r0 = bv_new(3);
        bv_set(&mut r0, 0);
        bv_set(&mut r0, 1);
        let mut r1 = bv_new(3);
        bv_set(&mut r1, 1);
        bv_set(&mut r1, 2);
        let basis = kernel_basis(&[r0.clone(), r1.clone()], 3);
        assert_eq!(basis.len(), 1);
        assert_eq!(bv_weight(&basis[0]), 3);
        assert_eq!(rank2(&[r0, r1], 3), 2);
    }

    #[test]
    fn poly2_arithmetic() {
        // (x+1)^2 = x^2 + 1 over F_2
        let xp1 = Poly2::from_coeff_bits(&[0, 1]);
        let sq = xp1.mul(&xp1);
        assert_eq!(sq, Poly2::from_coeff_bits(&[0, 2]));
        assert_eq!(sq.sqrt(), xp1);
        assert_eq!(sq.derivative(), Poly2::zero());
        let g = sq.gcd(&xp1);
        assert_eq!(g.degree(), 1);
    }

    #[test]
    fn factor_small_polys() {
        // x^2 + x = x (x + 1)
        let f = Poly2::from_coeff_bits(&[1, 2]);
        let factors = factor_poly2(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(_, e)| *e == 1));
        // x^2 + x + 1 irreducible
        let f = Poly2::from_coeff_bits(&[0, 1, 2]);
        assert_eq!(factor_poly2(&f), vec![(f.clone(), 1)]);
        // (x^2+x+1)^2 = x^4 + x^2 + 1
        let f2 = f.mul(&f);
        assert_eq!(factor_poly2(&f2), vec![(f, 2)]);
        // product of all degree-<=2 irreducibles and a cube
        let g = Poly2::from_coeff_bits(&[0, 1]) // x + 1
            .mul(&Poly2::x())
            .mul(&Poly2::from_coeff_bits(&[0, 1, 2]))
            .mul(&Poly2::x())
            .mul(&Poly2::x());
        let fs = factor_poly2(&g);
        let total: usize = fs.iter().map(|(p, e)| p.degree() * *e as usize).sum();
        assert_eq!(total, g.degree());
        for (p, _) in &fs {
            assert!(factor_poly2(p).len() == 1);
        }
    }

    #[test]
    fn factor_random_polys_reassemble() {
        let mut rng = cospectra_graphs::SplitMix64::new(777);
        for _ in 0..30 {
            let deg = 2 + (rng.next_u64() % 24) as usize;
            let mut v = bv_new(deg + 1);
            for i in 0..deg {
                if rng.next_u64() & 1 == 1 {
                    bv_set(&mut v, i);
                }
            }
            bv_set(&mut v, deg);
            let f = Poly2(v).trimmed();
            let factors = factor_poly2(&f);
            let mut prod = Poly2::one();
            for (p, e) in &factors {
                for _ in 0..*e {
                    prod = prod.mul(p);
                }
            }
            assert_eq!(prod, f, "degree {deg}");
        }
    }

    #[test]
    fn min_poly_of_nilpotent_and_identity() {
        // T = identity on F_2^3: mu = x + 1
        let cols: Vec<Bv> = (0..3)
            .map(|i| {
                let mut e = bv_new(3);
                bv_set(&mut e, i);
                e
            })
            .collect();
        assert_eq!(min_poly(&cols, 3), Poly2::from_coeff_bits(&[0, 1]));
        // T = single Jordan-ish shift: e0 -> 0, e1 -> e0: mu = x^2
        let z = bv_new(2);
        let mut e0 = bv_new(2);
        bv_set(&mut e0, 0);
        assert_eq!(min_poly(&[z, e0], 2), Poly2::from_coeff_bits(&[2]));
    }

    #[test]
    fn submodule_search_finds_doubly_even_fixed_space() {
        // ambient F_2^4, operator = identity, kernel = span of the
        // all-ones vector: weight 4, self-orthogonal -> admissible
        let mut ones = bv_new(4);
        for i in 0..4 {
            bv_set(&mut ones, i);
        }
        let search = SubmoduleSearch {
            n: 4,
            kernel: &[ones.clone()],
            images: &[ones.clone()],
            cap: 1000,
        };
        assert_eq!(admissible_submodule_exists(&search), Some(true));
        // a weight-2 vector is not doubly even
        let mut two = bv_new(4);
        bv_set(&mut two, 0);
        bv_set(&mut two, 1);
        let search = SubmoduleSearch { n: 4, kernel: &[two.clone()], images: &[two], cap: 1000 };
        assert_eq!(admissible_submodule_exists(&search), Some(false));
    }
}
