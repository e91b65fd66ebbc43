//! Petit algebras `S_f = R / Rf` with product `g ∘ h = gh mod_r f`.
//!
//! Elements are skew polynomials of degree below `m = deg f`. They are also
//! indexed by integers `0..|S|^m`: the element with coefficients
//! `c_0, ..., c_(m-1)` has index `sum code(c_i) |S|^i`.
//!
//! The product is biadditive, so the associator is additive in each slot.
//! Associativity and nucleus membership are therefore decided on the
//! additive generators `e t^i` (`e` in an additive basis of `S`) instead of
//! on every element.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeffring::{Elem, RingContext};
use crate::error::{check_cap, Error, Result};
use crate::skewpoly::{tail_from_index, SkewPoly, TwistContext};

pub const DEFAULT_ALGEBRA_CAP: u64 = 1 << 16;

#[derive(Debug)]
pub struct PetitAlgebra {
    f: SkewPoly,
    m: usize,
    /// `t^k f` for `k = 0..m`; each has leading coefficient 1 at `k + m`.
    shifted: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub is_associative: bool,
    pub left_nucleus_dim: u32,
    pub middle_nucleus_dim: u32,
    pub right_nucleus_dim: u32,
    pub f_two_sided: bool,
    /// Set over residue rings that are not fields, where the reported
    /// dimensions are `floor(log_n |Nuc|)`.
    pub nucleus_dims_are_lower_bounds: bool,
}

impl StructureReport {
    pub fn to_json(&self) -> Value {
        json!({
            "associative": self.is_associative,
            "two_sided_f": self.f_two_sided,
            "nucleus_dims": [self.left_nucleus_dim, self.middle_nucleus_dim, self.right_nucleus_dim],
        })
    }
}

impl PetitAlgebra {
    pub fn new(f: SkewPoly) -> Result<Self> {
        let m = f.degree().ok_or(Error::NonMonic)?;
        if !f.is_monic() {
            return Err(Error::NonMonic);
        }
        if m < 2 {
            return Err(Error::DegreeTooLow(m));
        }
        let tw = f.twist().clone();
        let mut shifted = Vec::with_capacity(m);
        let mut cur = f.coeffs().to_vec();
        for _ in 0..m {
            let next = tw.shift(&cur);
            shifted.push(cur);
            cur = next;
        }
        Ok(PetitAlgebra { f, m, shifted })
    }

    pub fn f(&self) -> &SkewPoly {
        &self.f
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn twist(&self) -> &Arc<TwistContext> {
        self.f.twist()
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.f.ring()
    }

    /// `|S|^m`, saturating.
    pub fn size(&self) -> u128 {
        (self.ring().size() as u128).saturating_pow(self.m as u32)
    }

    pub fn element_at(&self, index: u64) -> SkewPoly {
        self.twist().poly(self.vec_at(index))
    }

    pub fn index_of(&self, x: &SkewPoly) -> Result<u64> {
        self.check_element(x)?;
        Ok(self.index_of_vec(x.coeffs()))
    }

    /// Coefficient vector of length `m` for an element index.
    pub fn vec_at(&self, index: u64) -> Vec<Elem> {
        tail_from_index(index, self.ring().size() as u64, self.m)
    }

    pub fn index_of_vec(&self, c: &[Elem]) -> u64 {
        let q = self.ring().size() as u64;
        c.iter().rev().fold(0, |acc, e| acc * q + e.code() as u64)
    }

    fn check_element(&self, x: &SkewPoly) -> Result<()> {
        if x.twist() != self.twist() {
            return Err(Error::ContextMismatch);
        }
        match x.degree() {
            Some(d) if d >= self.m => Err(Error::DegreeTooHigh { degree: d, m: self.m }),
            _ => Ok(()),
        }
    }

    /// Right remainder modulo `f` of a raw coefficient vector, padded to
    /// length `m`.
    pub(crate) fn reduce_vec(&self, mut c: Vec<Elem>) -> Vec<Elem> {
        let k = self.ring();
        let m = self.m;
        if c.len() > 2 * m {
            let poly = self.twist().poly(c);
            let (_, rem) = poly.right_divide(&self.f).expect("f is monic");
            c = rem.coeffs().to_vec();
        }
        for d in (m..c.len()).rev() {
            let lead = c[d];
            if lead.is_zero() {
                continue;
            }
            for (i, &s) in self.shifted[d - m].iter().enumerate() {
                if !s.is_zero() {
                    c[i] = k.sub(c[i], k.mul(lead, s));
                }
            }
        }
        c.resize(m, k.zero());
        c
    }

    pub fn reduce(&self, g: &SkewPoly) -> Result<SkewPoly> {
        if g.twist() != self.twist() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.twist().poly(self.reduce_vec(g.coeffs().to_vec())))
    }

    /// Product of two length-`m` coefficient vectors.
    pub(crate) fn mul_vec(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        self.reduce_vec(self.twist().mul_raw(x, y))
    }

    pub fn petit_mul(&self, g: &SkewPoly, h: &SkewPoly) -> Result<SkewPoly> {
        self.check_element(g)?;
        self.check_element(h)?;
        Ok(self.twist().poly(self.mul_vec(g.coeffs(), h.coeffs())))
    }

    /// `(x y) z - x (y z)`.
    pub fn associator(&self, x: &SkewPoly, y: &SkewPoly, z: &SkewPoly) -> Result<SkewPoly> {
        let xy = self.petit_mul(x, y)?;
        let yz = self.petit_mul(y, z)?;
        Ok(&self.petit_mul(&xy, z)? - &self.petit_mul(x, &yz)?)
    }

    fn associator_vanishes(&self, x: &[Elem], y: &[Elem], z: &[Elem]) -> bool {
        let left = self.mul_vec(&self.mul_vec(x, y), z);
        let right = self.mul_vec(x, &self.mul_vec(y, z));
        left == right
    }

    /// Additive generators `e t^i` of the algebra.
    pub fn additive_generators(&self) -> Vec<Vec<Elem>> {
        let k = self.ring();
        let mut out = Vec::new();
        for i in 0..self.m {
            for e in k.additive_basis() {
                let mut v = vec![k.zero(); self.m];
                v[i] = e;
                out.push(v);
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        let gens = self.additive_generators();
        gens.par_iter().all(|x| gens.iter().all(|y| gens.iter().all(|z| self.associator_vanishes(x, y, z))))
    }

    /// Whether `Rf` is a two-sided ideal: `f t` and `f e` for every additive
    /// generator `e` of `S` are right multiples of `f`.
    pub fn f_two_sided(&self) -> bool {
        let tw = self.twist();
        let k = self.ring();
        let mut probes = vec![tw.t_pow(1)];
        probes.extend(k.additive_basis().into_iter().map(|e| tw.constant(e)));
        probes.iter().all(|p| {
            let fp = &self.f * p;
            fp.right_divide(&self.f).map(|(_, r)| r.is_zero()).unwrap_or(false)
        })
    }

    pub fn probe_structure(&self) -> Result<StructureReport> {
        self.probe_structure_with_cap(DEFAULT_ALGEBRA_CAP)
    }

    pub fn probe_structure_with_cap(&self, cap: u64) -> Result<StructureReport> {
        check_cap(self.size(), cap)?;
        let gens = self.additive_generators();
        let n = self.size() as u64;
        let count = |slot: usize| -> u64 {
            (0..n)
                .into_par_iter()
                .filter(|&idx| {
                    let x = self.vec_at(idx);
                    gens.iter().all(|y| {
                        gens.iter().all(|z| match slot {
                            0 => self.associator_vanishes(&x, y, z),
                            1 => self.associator_vanishes(y, &x, z),
                            _ => self.associator_vanishes(y, z, &x),
                        })
                    })
                })
                .count() as u64
        };
        let base = self.ring().characteristic() as u64;
        let dim = |size: u64| -> u32 {
            let mut d = 0;
            let mut acc = 1u64;
            while acc * base <= size {
                acc *= base;
                d += 1;
            }
            d
        };
        let (l, mid, r) = (count(0), count(1), count(2));
        Ok(StructureReport {
            is_associative: self.is_associative(),
            left_nucleus_dim: dim(l),
            middle_nucleus_dim: dim(mid),
            right_nucleus_dim: dim(r),
            f_two_sided: self.f_two_sided(),
            nucleus_dims_are_lower_bounds: !self.ring().is_field()
                && !crate::coeffring::is_prime(self.ring().characteristic() as u64),
        })
    }

    /// `[g, t∘g, ..., t^(m - deg g - 1)∘g]` for a monic right divisor `g`.
    pub fn left_ideal_span(&self, g: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let dg = self.check_generator(g)?;
        let tw = self.twist();
        let mut rows = Vec::with_capacity(self.m - dg);
        let mut cur = g.coeffs().to_vec();
        for i in 0..self.m - dg {
            if i > 0 {
                cur = tw.shift(&cur);
            }
            rows.push(tw.poly(cur.clone()));
        }
        Ok(rows)
    }

    /// Degree of `g` if it is a monic right divisor of `f` of degree `< m`.
    pub(crate) fn check_generator(&self, g: &SkewPoly) -> Result<usize> {
        if g.twist() != self.twist() {
            return Err(Error::ContextMismatch);
        }
        match g.degree() {
            Some(d) if d < self.m && g.is_monic() && self.f.is_right_divisible_by(g)? => Ok(d),
            _ => Err(Error::NotARightDivisor),
        }
    }

    /// Full multiplication table by element index, for small algebras.
    pub fn mul_table(&self, cap: u64) -> Result<MulTable> {
        let n = self.size();
        check_cap(n * n, cap)?;
        let n = n as usize;
        let vecs: Vec<Vec<Elem>> = (0..n as u64).map(|i| self.vec_at(i)).collect();
        let entries: Vec<u32> = (0..n * n)
            .into_par_iter()
            .map(|ij| self.index_of_vec(&self.mul_vec(&vecs[ij / n], &vecs[ij % n])) as u32)
            .collect();
        Ok(MulTable { n, entries })
    }
}

/// `table[i][j] = index(x_i ∘ x_j)`.
pub struct MulTable {
    n: usize,
    entries: Vec<u32>,
}

impl MulTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j] as usize
    }
}
