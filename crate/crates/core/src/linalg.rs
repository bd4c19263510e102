//! Dense linear algebra over GF(16) on bit-sliced vectors.
//!
//! A [`Vector`] stores 64 coordinates per chunk as four bit planes, one per
//! coefficient of 1, ζ, ζ², ζ³. Adding a scalar multiple of one vector to
//! another is then a handful of word-wide ANDs and XORs per 64 entries.

use crate::gf16::{Scalar16, MUL};

/// `SCALE[c][k][j]` is all-ones iff bit `j` of `c·ζᵏ` is set.
const fn build_scale_masks() -> [[[u64; 4]; 4]; 16] {
    let mut t = [[[0u64; 4]; 4]; 16];
    let mut c = 0;
    while c < 16 {
        let mut k = 0;
        while k < 4 {
            let prod = MUL[c][1 << k];
            let mut j = 0;
            while j < 4 {
                if (prod >> j) & 1 == 1 {
                    t[c][k][j] = u64::MAX;
                }
                j += 1;
            }
            k += 1;
        }
        c += 1;
    }
    t
}

const SCALE: [[[u64; 4]; 4]; 16] = build_scale_masks();

#[inline]
fn scale_chunk(c: Scalar16, x: &[u64; 4]) -> [u64; 4] {
    let m = &SCALE[c.bits() as usize];
    let mut y = [0u64; 4];
    for k in 0..4 {
        let xk = x[k];
        for j in 0..4 {
            y[j] ^= xk & m[k][j];
        }
    }
    y
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    len: usize,
    chunks: Vec<[u64; 4]>,
}

impl std::fmt::Debug for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = self.iter().map(|c| c.to_string()).collect();
        write!(f, "[{s}]")
    }
}

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector {
            len,
            chunks: vec![[0; 4]; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Vector::zeros(len);
        v.set(i, Scalar16::ONE);
        v
    }

    pub fn from_scalars(xs: &[Scalar16]) -> Self {
        let mut v = Vector::zeros(xs.len());
        for (i, &x) in xs.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Scalar16 {
        debug_assert!(i < self.len);
        let c = &self.chunks[i / 64];
        let b = i % 64;
        let bits = ((c[0] >> b) & 1) | (((c[1] >> b) & 1) << 1) | (((c[2] >> b) & 1) << 2) | (((c[3] >> b) & 1) << 3);
        Scalar16::from_bits(bits as u8)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Scalar16) {
        debug_assert!(i < self.len);
        let c = &mut self.chunks[i / 64];
        let b = i % 64;
        for (j, plane) in c.iter_mut().enumerate() {
            *plane &= !(1u64 << b);
            *plane |= (((x.bits() >> j) & 1) as u64) << b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Scalar16> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_scalars(&self) -> Vec<Scalar16> {
        self.iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.chunks.iter().all(|c| (c[0] | c[1] | c[2] | c[3]) == 0)
    }

    /// Index of the first nonzero coordinate below `limit`.
    pub fn first_nonzero_below(&self, limit: usize) -> Option<usize> {
        let limit = limit.min(self.len);
        for (ci, c) in self.chunks.iter().enumerate() {
            let start = ci * 64;
            if start >= limit {
                break;
            }
            let mut any = c[0] | c[1] | c[2] | c[3];
            if limit - start < 64 {
                any &= (1u64 << (limit - start)) - 1;
            }
            if any != 0 {
                return Some(start + any.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.first_nonzero_below(self.len)
    }

    pub fn add_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.len, other.len);
        for (x, y) in self.chunks.iter_mut().zip(&other.chunks) {
            for j in 0..4 {
                x[j] ^= y[j];
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, c: Scalar16, other: &Vector) {
        debug_assert_eq!(self.len, other.len);
        if c.is_zero() {
            return;
        }
        if c == Scalar16::ONE {
            return self.add_assign(other);
        }
        for (x, y) in self.chunks.iter_mut().zip(&other.chunks) {
            let s = scale_chunk(c, y);
            for j in 0..4 {
                x[j] ^= s[j];
            }
        }
    }

    pub fn scale(&mut self, c: Scalar16) {
        for x in self.chunks.iter_mut() {
            *x = scale_chunk(c, x);
        }
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut v = Vector::zeros(self.len + other.len);
        for i in 0..self.len {
            v.set(i, self.get(i));
        }
        for i in 0..other.len {
            v.set(self.len + i, other.get(i));
        }
        v
    }

    /// Coordinates `range` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> Vector {
        let mut v = Vector::zeros(end - start);
        for i in start..end {
            v.set(i - start, self.get(i));
        }
        v
    }

    /// Coordinates at the given indices, in order.
    pub fn gather(&self, idx: &[usize]) -> Vector {
        let mut v = Vector::zeros(idx.len());
        for (k, &i) in idx.iter().enumerate() {
            v.set(k, self.get(i));
        }
        v
    }

    /// Scalar-weighted sum of rows: Σ coeffs[i] · rows[i].
    pub fn combination(coeffs: &Vector, rows: &[Vector], len: usize) -> Vector {
        let mut out = Vector::zeros(len);
        for (i, r) in rows.iter().enumerate() {
            out.add_scaled(coeffs.get(i), r);
        }
        out
    }
}

/// A row space in reduced row echelon form, built incrementally.
///
/// Pivots are only taken in columns `< pivot_limit`; columns past the limit
/// ride along as an augmentation (used to record combinations).
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_limit: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon::augmented(ncols, ncols)
    }

    pub fn augmented(ncols: usize, pivot_limit: usize) -> Self {
        Echelon {
            ncols,
            pivot_limit,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; pivot_limit],
        }
    }

    pub fn from_rows<'a>(ncols: usize, rows: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        col < self.pivot_limit && self.pivot_row[col].is_some()
    }

    /// Columns below the pivot limit without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.pivot_limit).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        v
    }

    pub fn reduce_in_place(&self, v: &mut Vector) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(col);
            if !c.is_zero() {
                v.add_scaled(c, row);
            }
        }
    }

    /// Whether `v` lies in the span, judged on the pivot columns only.
    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).first_nonzero_below(self.pivot_limit).is_none()
    }

    /// Adds `v` to the row space. Returns false when it was already dependent
    /// (on the pivot columns).
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut v = v;
        self.reduce_in_place(&mut v);
        let Some(col) = v.first_nonzero_below(self.pivot_limit) else {
            return false;
        };
        let inv = v.get(col).inverse().expect("pivot is nonzero");
        v.scale(inv);
        for row in self.rows.iter_mut() {
            let c = row.get(col);
            if !c.is_zero() {
                row.add_scaled(c, &v);
            }
        }
        self.pivot_row[col] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(col);
        true
    }
}

/// Rank of the row space of `rows`.
pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    Echelon::from_rows(ncols, rows).rank()
}

/// Rank of a small matrix given as nested rows of scalars.
pub fn rank_of_rows(rows: &[Vec<Scalar16>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_scalars(r)).collect();
    rank(&vs, ncols)
}

/// Basis of {c : Σ cᵢ rowsᵢ = 0}, the left kernel of the matrix whose rows
/// are `rows` (each of length `ncols`).
pub fn left_kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let n = rows.len();
    let mut e = Echelon::augmented(ncols + n, ncols);
    let mut kernel = Echelon::new(n);
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.concat(&Vector::unit(n, i));
        e.reduce_in_place(&mut v);
        if v.first_nonzero_below(ncols).is_none() {
            kernel.insert(v.slice(ncols, ncols + n));
        } else {
            e.insert(v);
        }
    }
    kernel.rows().to_vec()
}

/// Expresses `target` as a combination of `rows`, if possible.
pub fn solve_combination(rows: &[Vector], target: &Vector) -> Option<Vector> {
    let ncols = target.len();
    let n = rows.len();
    let mut e = Echelon::augmented(ncols + n, ncols);
    for (i, r) in rows.iter().enumerate() {
        e.insert(r.concat(&Vector::unit(n, i)));
    }
    let v = e.reduce(&target.concat(&Vector::zeros(n)));
    v.first_nonzero_below(ncols)
        .is_none()
        .then(|| v.slice(ncols, ncols + n))
}

/// Basis (echelon rows) of span(a) ∩ span(b).
pub fn intersect(a: &[Vector], b: &[Vector], ncols: usize) -> Vec<Vector> {
    let stacked: Vec<Vector> = a.iter().chain(b.iter()).cloned().collect();
    let mut out = Echelon::new(ncols);
    for k in left_kernel(&stacked, ncols) {
        let v = Vector::combination(&k.slice(0, a.len()), a, ncols);
        out.insert(v);
    }
    out.rows().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vector(rng: &mut ChaCha8Rng, len: usize, density: f64) -> Vector {
        let xs: Vec<Scalar16> = (0..len)
            .map(|_| {
                if rng.gen_bool(density) {
                    Scalar16::from_bits(rng.gen_range(1..16))
                } else {
                    Scalar16::ZERO
                }
            })
            .collect();
        Vector::from_scalars(&xs)
    }

    #[test]
    fn scaled_add_matches_scalar_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in [1, 63, 64, 65, 200] {
            let x = random_vector(&mut rng, len, 0.7);
            let y = random_vector(&mut rng, len, 0.7);
            for c in Scalar16::all() {
                let mut z = x.clone();
                z.add_scaled(c, &y);
                for i in 0..len {
                    assert_eq!(z.get(i), x.get(i) + c * y.get(i));
                }
            }
        }
    }

    #[test]
    fn first_nonzero_respects_limit() {
        let mut v = Vector::zeros(130);
        v.set(100, Scalar16::ZETA);
        assert_eq!(v.first_nonzero(), Some(100));
        assert_eq!(v.first_nonzero_below(100), None);
        assert_eq!(v.first_nonzero_below(101), Some(100));
    }

    #[test]
    fn kernel_and_rank_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(1..30);
            let m = rng.gen_range(1..30);
            let mut rows: Vec<Vector> = (0..n).map(|_| random_vector(&mut rng, m, 0.4)).collect();
            // force a dependency
            if n >= 3 {
                let mut d = rows[0].clone();
                d.add_scaled(Scalar16::ZETA, &rows[1]);
                rows[2] = d;
            }
            let r = rank(&rows, m);
            let k = left_kernel(&rows, m);
            assert_eq!(r + k.len(), n);
            for kv in &k {
                assert!(Vector::combination(kv, &rows, m).is_zero());
            }
        }
    }

    #[test]
    fn solve_finds_combination() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rows: Vec<Vector> = (0..6).map(|_| random_vector(&mut rng, 10, 0.5)).collect();
        let coeffs = random_vector(&mut rng, 6, 0.8);
        let target = Vector::combination(&coeffs, &rows, 10);
        let c = solve_combination(&rows, &target).unwrap();
        assert_eq!(Vector::combination(&c, &rows, 10), target);
        let outside = Vector::unit(10, 9);
        if !Echelon::from_rows(10, &rows).contains(&outside) {
            assert!(solve_combination(&rows, &outside).is_none());
        }
    }

    #[test]
    fn intersection_dimension() {
        // span(e0, e1, e2) ∩ span(e1, e2 + e3, e4) = span(e1)
        let e = |i| Vector::unit(5, i);
        let mut e23 = e(2);
        e23.add_assign(&e(3));
        let x = intersect(&[e(0), e(1), e(2)], &[e(1), e23, e(4)], 5);
        assert_eq!(x.len(), 1);
        assert_eq!(x[0], e(1));
    }
}
