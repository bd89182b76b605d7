//! Arithmetic and linear algebra over a prime field `F_p`.
//!
//! Vectors and matrices are plain `Vec<u64>` / `Vec<Vec<u64>>` of reduced
//! residues; `p` stays well below `2^32` so products fit in `u64`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p) && p < (1 << 31), "{p} is not a usable prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let p = self.p;
        if p == 2 {
            return 1;
        }
        let factors = prime_factors(p - 1);
        (2..p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (p - 1) / q) != 1))
            .expect("every prime field has a primitive root")
    }

    /// Square roots of `a`, if any, as `(r, p - r)` with `r ≤ p - r`.
    pub fn sqrt(&self, a: u64) -> Option<(u64, u64)> {
        let a = a % self.p;
        (0..=self.p / 2)
            .find(|&r| self.mul(r, r) == a)
            .map(|r| (r, (self.p - r) % self.p))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
                continue;
            };
            rows.swap(r, k);
            let scale = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, scale);
            }
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &p) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, p));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : M v = 0}` for `M` given as rows.
    pub fn kernel(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ncols = m.first().map_or(0, Vec::len);
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }

    /// `M v` for `M` given as rows.
    pub fn mat_vec(&self, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        m.iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b))))
            .collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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
