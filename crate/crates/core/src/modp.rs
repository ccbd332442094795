//! Arithmetic and small dense linear algebra over a prime field GF(p),
//! p < 2³¹ so products fit in u64.

/// The prime field context.
#[derive(Debug, Clone, Copy)]
pub struct Gf {
    pub p: u64,
}

impl Gf {
    pub fn new(p: u64) -> Gf {
        debug_assert!(p < (1 << 31));
        Gf { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> u64 {
        let p = self.p as i64;
        (((v % p) + p) % p) as u64
    }

    /// A multiplicative generator of GF(p)*.
    pub fn primitive_root(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let factors = distinct_prime_factors(self.p - 1);
        'cand: for g in 2..self.p {
            for &q in &factors {
                if self.pow(g, (self.p - 1) / q) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("GF(p)* is cyclic");
    }

    /// An element of multiplicative order exactly `e` (requires e | p−1).
    pub fn root_of_unity(&self, e: u64) -> u64 {
        debug_assert_eq!((self.p - 1) % e, 0);
        self.pow(self.primitive_root(), (self.p - 1) / e)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 29u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone)]
pub struct MatGf {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl MatGf {
    pub fn zeros(rows: usize, cols: usize) -> MatGf {
        MatGf { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> MatGf {
        let mut m = MatGf::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, gf: &Gf, v: &[u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc: u64 = 0;
                for c in 0..self.cols {
                    acc = (acc + self.at(r, c) * v[c]) % gf.p;
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot column per rank row.
    pub fn rref(&mut self, gf: &Gf) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let piv_inv = gf.inv(self.at(row, col));
            for c in col..self.cols {
                let v = gf.mul(self.at(row, c), piv_inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = gf.sub(self.at(r, c), gf.mul(factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right nullspace, deterministic order (free columns
    /// ascending). Each vector is length `cols`.
    pub fn nullspace(mut self, gf: &Gf) -> Vec<Vec<u64>> {
        let cols = self.cols;
        let pivots = self.rref(gf);
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = gf.neg(self.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial coefficients, low degree first, of a
    /// square matrix: reduce to upper Hessenberg by similarity, then use
    /// the leading-principal-minor recurrence. Division-free in p (only
    /// field inversions of pivots).
    pub fn char_poly(&self, gf: &Gf) -> Vec<u64> {
        let n = self.rows;
        debug_assert_eq!(n, self.cols);
        let mut h = self.clone();
        // Hessenberg reduction with similarity transforms.
        for col in 0..n.saturating_sub(2) {
            let Some(pr) = (col + 1..n).find(|&r| h.at(r, col) != 0) else {
                continue;
            };
            if pr != col + 1 {
                for c in 0..n {
                    h.data.swap((col + 1) * n + c, pr * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + col + 1, r * n + pr);
                }
            }
            let piv_inv = gf.inv(h.at(col + 1, col));
            for r in col + 2..n {
                let factor = gf.mul(h.at(r, col), piv_inv);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = gf.sub(h.at(r, c), gf.mul(factor, h.at(col + 1, c)));
                    h.set(r, c, v);
                }
                for r2 in 0..n {
                    let v = gf.add(h.at(r2, col + 1), gf.mul(factor, h.at(r2, r)));
                    h.set(r2, col + 1, v);
                }
            }
        }
        // p_k(λ) = charpoly of leading k×k block of (λI − H).
        // p_0 = 1; p_k = (λ − h_{kk}) p_{k−1} − Σ_{j<k} h_{jk} (Π subdiag) p_{j−1}.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut pk = poly_mul_linear(gf, &polys[k], h.at(k, k));
            let mut subdiag_prod = 1u64;
            for j in (0..k).rev() {
                subdiag_prod = gf.mul(subdiag_prod, h.at(j + 1, j));
                let coeff = gf.mul(h.at(j, k), subdiag_prod);
                if coeff != 0 {
                    for (i, &c) in polys[j].iter().enumerate() {
                        pk[i] = gf.sub(pk[i], gf.mul(coeff, c));
                    }
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

/// `(λ − a) · q(λ)` with coefficients low-first.
fn poly_mul_linear(gf: &Gf, q: &[u64], a: u64) -> Vec<u64> {
    let mut out = vec![0u64; q.len() + 1];
    for (i, &c) in q.iter().enumerate() {
        out[i + 1] = gf.add(out[i + 1], c);
        out[i] = gf.sub(out[i], gf.mul(a, c));
    }
    out
}

/// Evaluate a polynomial (low-first coefficients) at `x`.
pub fn poly_eval(gf: &Gf, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = gf.add(gf.mul(acc, x), c);
    }
    acc
}

/// All roots in GF(p) by direct scan, ascending.
pub fn poly_roots(gf: &Gf, poly: &[u64]) -> Vec<u64> {
    (0..gf.p).filter(|&x| poly_eval(gf, poly, x) == 0).collect()
}
