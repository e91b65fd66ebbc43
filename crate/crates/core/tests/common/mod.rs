//! Reference arithmetic written independently of the library: field
//! products by schoolbook polynomial multiplication, Frobenius by repeated
//! multiplication, skew products from `(a t^i)(b t^j) = a sigma^i(b) t^(i+j)`.
//! Elements use the same integer codes as the library so results can be
//! compared directly.

#![allow(dead_code)]

use std::sync::Arc;

use skewcodes::{Elem, RingContext, SkewPoly, TwistContext};

pub struct Field {
    pub p: u32,
    pub r: u32,
    pub q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    /// `frob[e][a] = a^(p^e)` for `e < r`.
    frob: Vec<Vec<u32>>,
}

fn digits(mut c: u32, p: u32, r: u32) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn code(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

impl Field {
    pub fn from_ring(ring: &RingContext) -> Field {
        let spec = ring.field_spec().expect("oracle fields only");
        Field::new(spec.p, spec.r, &spec.modulus)
    }

    pub fn new(p: u32, r: u32, modulus: &[u32]) -> Field {
        let q = p.pow(r);
        let mut mul = vec![0; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a, p, r), digits(b, p, r));
                let mut prod = vec![0u32; (2 * r) as usize];
                for i in 0..r as usize {
                    for j in 0..r as usize {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for d in (r as usize..prod.len()).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    for (k, &mk) in modulus.iter().enumerate() {
                        let idx = d - r as usize + k;
                        prod[idx] = (prod[idx] + p * p - c * mk % p) % p;
                    }
                }
                mul[(a * q + b) as usize] = code(&prod[..r as usize], p);
            }
        }
        let mut add = vec![0; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a, p, r), digits(b, p, r));
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = code(&s, p);
            }
        }
        let mut k = Field { p, r, q, add, mul, frob: vec![(0..q).collect()] };
        for e in 1..r {
            let prev = &k.frob[e as usize - 1];
            let next = prev.iter().map(|&x| (0..p).fold(1, |acc, _| k.mul(acc, x))).collect();
            k.frob.push(next);
        }
        k
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn units(&self) -> Vec<u32> {
        (1..self.q).collect()
    }

    /// `a^(p^e)`.
    pub fn frob(&self, e: u32, a: u32) -> u32 {
        self.frob[(e % self.r) as usize][a as usize]
    }

    /// `prod_(j < i) sigma^j(beta)` with `sigma = frob(e)`.
    pub fn norm(&self, e: u32, beta: u32, i: usize) -> u32 {
        (0..i).fold(1, |acc, j| self.mul(acc, self.frob(((e as u64 * j as u64) % self.r as u64) as u32, beta)))
    }

    pub fn fixed(&self, e: u32, a: u32) -> bool {
        self.frob(e, a) == a
    }
}

/// `S[t; sigma]` with `sigma = x -> x^(p^s)`, coefficients little-endian.
pub struct Skew<'a> {
    pub k: &'a Field,
    pub s: u32,
}

impl<'a> Skew<'a> {
    pub fn sigma_pow(&self, i: usize, a: u32) -> u32 {
        self.k.frob(((self.s as u64 * i as u64) % self.k.r as u64) as u32, a)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        if x.is_empty() || y.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; x.len() + y.len() - 1];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                let term = self.k.mul(a, self.sigma_pow(i, b));
                out[i + j] = self.k.add(out[i + j], term);
            }
        }
        trim(out)
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = x.len().max(y.len());
        trim((0..n).map(|i| self.k.add(*x.get(i).unwrap_or(&0), *y.get(i).unwrap_or(&0))).collect())
    }

    /// Right remainder modulo a monic `f`.
    pub fn rem(&self, g: &[u32], f: &[u32]) -> Vec<u32> {
        let m = f.len() - 1;
        let mut g = trim(g.to_vec());
        while g.len() > m {
            let d = g.len() - 1;
            let c = g[d];
            let mut mono = vec![0; d - m + 1];
            mono[d - m] = c;
            let sub = self.mul(&mono, f);
            for (i, &x) in sub.iter().enumerate() {
                g[i] = self.k.sub(g[i], x);
            }
            g = trim(g);
        }
        g
    }
}

pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Petit algebra given by a multiplication table over element indices
/// `sum c_i q^i`.
pub struct Table {
    pub n: usize,
    pub m: usize,
    pub q: u32,
    pub mul: Vec<u32>,
}

impl Table {
    pub fn build(sk: &Skew, f: &[u32]) -> Table {
        let m = f.len() - 1;
        let q = sk.k.q;
        let n = (q as usize).pow(m as u32);
        let vecs: Vec<Vec<u32>> = (0..n).map(|i| vec_of(i, q, m)).collect();
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = sk.rem(&sk.mul(&vecs[i], &vecs[j]), f);
                mul[i * n + j] = index_of(&prod, q) as u32;
            }
        }
        Table { n, m, q, mul }
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }
}

pub fn vec_of(mut idx: usize, q: u32, m: usize) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let c = (idx % q as usize) as u32;
            idx /= q as usize;
            c
        })
        .collect()
}

pub fn index_of(v: &[u32], q: u32) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * q as usize + c as usize)
}

/// Coefficients `c_0..c_(m-1)` of `t^m - sum a_i t^i`, plus the leading 1.
pub fn monic_from_a(k: &Field, a: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().map(|&x| k.neg(x)).collect();
    v.push(1);
    v
}

/// `tau(a_i) = N_(m-i)(sigma^i(alpha)) b_i` for all `i`.
pub fn equation(sk: &Skew, a: &[u32], b: &[u32], tau: u32, alpha: u32) -> bool {
    let m = a.len();
    (0..m).all(|i| {
        let n = sk.k.norm(sk.s, sk.sigma_pow(i, alpha), m - i);
        sk.k.frob(tau, a[i]) == sk.k.mul(n, b[i])
    })
}

/// `G(x) = sum tau(x_i) N_i(alpha) t^i` on length-`m` vectors.
pub fn g_map(sk: &Skew, tau: u32, alpha: u32, x: &[u32]) -> Vec<u32> {
    x.iter().enumerate().map(|(i, &c)| sk.k.mul(sk.k.frob(tau, c), sk.k.norm(sk.s, alpha, i))).collect()
}

pub fn gf(p: u32, r: u32) -> Arc<RingContext> {
    Arc::new(RingContext::finite_field(p, r, None).unwrap())
}

pub fn gf4() -> Arc<RingContext> {
    Arc::new(RingContext::finite_field(2, 2, Some(&[1, 1, 1])).unwrap())
}

pub fn elems(ring: &RingContext, codes: &[u32]) -> Vec<Elem> {
    codes.iter().map(|&c| ring.element(c as u64).unwrap()).collect()
}

pub fn codes(x: &SkewPoly) -> Vec<u32> {
    x.coeffs().iter().map(|c| c.code()).collect()
}

pub fn poly(tw: &Arc<TwistContext>, c: &[u32]) -> SkewPoly {
    tw.poly(elems(tw.ring(), c))
}

/// Every coefficient vector of length `len` over `q` elements.
pub fn all_vectors(q: u32, len: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..(q as usize).pow(len as u32)).map(move |i| vec_of(i, q, len))
}
