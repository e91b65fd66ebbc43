//! Skew polynomials in `R = S[t; sigma, delta]`.
//!
//! Multiplication is carried out by moving `t` past coefficients one step at
//! a time with `t a = sigma(a) t + delta(a)`. Polynomials are immutable and
//! normalised (no trailing zero coefficients), so structural equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffring::{Automorphism, Elem, RingContext};
use crate::error::{check_cap, Error, Result};
use crate::matrix::Matrix;

/// Rings up to this size have the derivation law checked on all pairs.
const EXHAUSTIVE_DERIVATION_CHECK: u32 = 256;
const SAMPLED_DERIVATION_PAIRS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Derivation {
    Zero,
    /// `delta(a) = beta (sigma(a) - a)`.
    Inner(Elem),
}

/// The data `(S, sigma, delta)` shared by all polynomials of one ring.
pub struct TwistContext {
    ring: Arc<RingContext>,
    sigma: Automorphism,
    delta: Derivation,
}

impl PartialEq for TwistContext {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma
            && self.delta == other.delta
            && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for TwistContext {}

impl fmt::Debug for TwistContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[t; s={}, {:?}]", self.ring, self.sigma.frob_exp, self.delta)
    }
}

impl TwistContext {
    pub fn new(ring: Arc<RingContext>, sigma: Automorphism, delta: Derivation) -> Result<Arc<Self>> {
        ring.automorphism(sigma.frob_exp)?;
        let tw = TwistContext { ring, sigma, delta };
        if let Derivation::Inner(beta) = delta {
            if !tw.ring.contains(beta) {
                return Err(Error::ContextMismatch);
            }
            tw.check_derivation_law()?;
        }
        Ok(Arc::new(tw))
    }

    /// `S[t; sigma]` with zero derivation.
    pub fn with_sigma(ring: Arc<RingContext>, frob_exp: u32) -> Result<Arc<Self>> {
        let sigma = ring.automorphism(frob_exp)?;
        Self::new(ring, sigma, Derivation::Zero)
    }

    fn check_derivation_law(&self) -> Result<()> {
        let k = &*self.ring;
        let law = |a: Elem, b: Elem| {
            let lhs = self.delta_of(k.mul(a, b));
            let rhs = k.add(k.mul(self.sigma_of(a), self.delta_of(b)), k.mul(self.delta_of(a), b));
            lhs == rhs && self.delta_of(k.add(a, b)) == k.add(self.delta_of(a), self.delta_of(b))
        };
        let ok = if k.size() <= EXHAUSTIVE_DERIVATION_CHECK {
            k.elements().all(|a| k.elements().all(|b| law(a, b)))
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            (0..SAMPLED_DERIVATION_PAIRS).all(|_| {
                let a = Elem::from_code(rng.gen_range(0..k.size()));
                let b = Elem::from_code(rng.gen_range(0..k.size()));
                law(a, b)
            })
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDerivation(format!("{:?} violates the sigma-derivation law", self.delta)))
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn sigma(&self) -> Automorphism {
        self.sigma
    }

    pub fn delta(&self) -> Derivation {
        self.delta
    }

    pub fn is_delta_zero(&self) -> bool {
        self.delta == Derivation::Zero
    }

    pub(crate) fn require_delta_zero(&self) -> Result<()> {
        if self.is_delta_zero() {
            Ok(())
        } else {
            Err(Error::DeltaNotZero)
        }
    }

    /// Order `n` of sigma.
    pub fn sigma_order(&self) -> u32 {
        self.ring.aut_order(self.sigma)
    }

    pub fn sigma_of(&self, a: Elem) -> Elem {
        self.ring.act(self.sigma, a)
    }

    /// `sigma^k(a)` for any integer `k`.
    pub fn sigma_pow_of(&self, k: i64, a: Elem) -> Elem {
        let r = self.ring.degree() as i64;
        let e = (self.sigma.frob_exp as i64 * k).rem_euclid(r) as u32;
        self.ring.act(Automorphism { frob_exp: e }, a)
    }

    pub fn delta_of(&self, a: Elem) -> Elem {
        match self.delta {
            Derivation::Zero => self.ring.zero(),
            Derivation::Inner(beta) => {
                let k = &self.ring;
                k.mul(beta, k.sub(self.sigma_of(a), a))
            }
        }
    }

    pub fn poly(self: &Arc<Self>, coeffs: Vec<Elem>) -> SkewPoly {
        SkewPoly::new(self.clone(), coeffs)
    }

    pub fn zero_poly(self: &Arc<Self>) -> SkewPoly {
        self.poly(Vec::new())
    }

    pub fn one_poly(self: &Arc<Self>) -> SkewPoly {
        self.constant(self.ring.one())
    }

    pub fn constant(self: &Arc<Self>, a: Elem) -> SkewPoly {
        self.poly(vec![a])
    }

    /// `a t^k`.
    pub fn monomial(self: &Arc<Self>, a: Elem, k: usize) -> SkewPoly {
        let mut coeffs = vec![self.ring.zero(); k + 1];
        coeffs[k] = a;
        self.poly(coeffs)
    }

    pub fn t_pow(self: &Arc<Self>, k: usize) -> SkewPoly {
        self.monomial(self.ring.one(), k)
    }

    /// `t^m + c_(m-1) t^(m-1) + ... + c_0` with `tail = [c_0, ..., c_(m-1)]`.
    pub fn monic_from_tail(self: &Arc<Self>, tail: &[Elem]) -> SkewPoly {
        let mut coeffs = tail.to_vec();
        coeffs.push(self.ring.one());
        self.poly(coeffs)
    }

    /// `t^m - sum a_i t^i`, the shape used by the classification results.
    pub fn monic_from_a(self: &Arc<Self>, a: &[Elem]) -> SkewPoly {
        let tail: Vec<Elem> = a.iter().map(|&x| self.ring.neg(x)).collect();
        self.monic_from_tail(&tail)
    }

    /// All monic polynomials of degree `m`, ordered lexicographically by
    /// `(c_0, c_1, ...)`.
    pub fn monic_polys(self: &Arc<Self>, m: usize, cap: u64) -> Result<Vec<SkewPoly>> {
        let q = self.ring.size() as u128;
        check_cap(q.pow(m as u32), cap)?;
        let count = q.pow(m as u32) as u64;
        let mut out: Vec<SkewPoly> =
            (0..count).map(|idx| self.monic_from_tail(&tail_from_index(idx, q as u64, m))).collect();
        out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        Ok(out)
    }

    /// `t * c` for a coefficient vector `c`.
    pub(crate) fn shift(&self, c: &[Elem]) -> Vec<Elem> {
        let k = &self.ring;
        let mut out = vec![k.zero(); c.len() + 1];
        for (j, &cj) in c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            out[j + 1] = k.add(out[j + 1], self.sigma_of(cj));
            if !self.is_delta_zero() {
                out[j] = k.add(out[j], self.delta_of(cj));
            }
        }
        out
    }

    /// Product of two raw coefficient vectors (not normalised).
    pub(crate) fn mul_raw(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let k = &self.ring;
        let mut out = vec![k.zero(); a.len() + b.len() - 1];
        let mut cur = b.to_vec();
        for (i, &ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                for (j, &c) in cur.iter().enumerate() {
                    if !c.is_zero() {
                        out[j] = k.add(out[j], k.mul(ai, c));
                    }
                }
            }
            if i + 1 < a.len() {
                cur = self.shift(&cur);
            }
        }
        out
    }
}

pub(crate) fn tail_from_index(mut idx: u64, q: u64, m: usize) -> Vec<Elem> {
    (0..m)
        .map(|_| {
            let c = Elem::from_code((idx % q) as u32);
            idx /= q;
            c
        })
        .collect()
}

fn normalize(mut coeffs: Vec<Elem>) -> Vec<Elem> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

#[derive(Clone)]
pub struct SkewPoly {
    coeffs: Vec<Elem>,
    twist: Arc<TwistContext>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (Arc::ptr_eq(&self.twist, &other.twist) || self.twist == other.twist)
    }
}

impl Eq for SkewPoly {}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<u32> = self.coeffs.iter().map(|c| c.code()).collect();
        write!(f, "SkewPoly{codes:?}")
    }
}

impl SkewPoly {
    pub fn new(twist: Arc<TwistContext>, coeffs: Vec<Elem>) -> Self {
        SkewPoly { coeffs: normalize(coeffs), twist }
    }

    pub fn twist(&self) -> &Arc<TwistContext> {
        &self.twist
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.twist.ring
    }

    /// Little-endian coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.ring().one())
    }

    /// For monic `f = t^m - sum a_i t^i`, the vector `[a_0, ..., a_(m-1)]`.
    pub fn a_coeffs(&self) -> Result<Vec<Elem>> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        let m = self.coeffs.len() - 1;
        Ok(self.coeffs[..m].iter().map(|&c| self.ring().neg(c)).collect())
    }

    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_twist(&self, other: &SkewPoly) -> Result<()> {
        if Arc::ptr_eq(&self.twist, &other.twist) || self.twist == other.twist {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<Elem>) -> SkewPoly {
        SkewPoly::new(self.twist.clone(), coeffs)
    }

    pub fn try_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_twist(other)?;
        let k = self.ring();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with_coeffs((0..n).map(|i| k.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn try_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_twist(other)?;
        let k = self.ring();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.with_coeffs((0..n).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    /// `a * self` (scalar on the left).
    pub fn scale_left(&self, a: Elem) -> SkewPoly {
        let k = self.ring();
        self.with_coeffs(self.coeffs.iter().map(|&c| k.mul(a, c)).collect())
    }

    pub fn skew_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_twist(other)?;
        Ok(self.with_coeffs(self.twist.mul_raw(&self.coeffs, &other.coeffs)))
    }

    fn divisor_lead_inverse(f: &SkewPoly) -> Result<Elem> {
        f.leading().and_then(|u| f.ring().inv(u)).ok_or(Error::NonInvertibleLeadingCoefficient)
    }

    /// `(q, rem)` with `self = q f + rem` and `deg rem < deg f`.
    pub fn right_divide(&self, f: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_twist(f)?;
        Self::divisor_lead_inverse(f)?;
        let tw = &*self.twist;
        let k = self.ring();
        let m = f.coeffs.len() - 1;
        let u = f.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![k.zero(); rem.len().saturating_sub(m)];
        while rem.len() > m {
            let d = rem.len() - 1;
            let c = rem[d];
            let shift = d - m;
            let lead = tw.sigma_pow_of(shift as i64, u);
            let e = k.mul(c, k.inv(lead).ok_or(Error::NonInvertibleLeadingCoefficient)?);
            q[shift] = k.add(q[shift], e);
            let mut term = vec![k.zero(); shift + 1];
            term[shift] = e;
            let prod = tw.mul_raw(&term, &f.coeffs);
            for (i, &p) in prod.iter().enumerate() {
                rem[i] = k.sub(rem[i], p);
            }
            debug_assert!(rem[d].is_zero());
            rem = normalize(rem);
        }
        Ok((self.with_coeffs(q), self.with_coeffs(rem)))
    }

    /// `(q, rem)` with `self = f q + rem` and `deg rem < deg f`.
    pub fn left_divide(&self, f: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_twist(f)?;
        let u_inv = Self::divisor_lead_inverse(f)?;
        let tw = &*self.twist;
        let k = self.ring();
        let m = f.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut q = vec![k.zero(); rem.len().saturating_sub(m)];
        while rem.len() > m {
            let d = rem.len() - 1;
            let shift = d - m;
            let e = tw.sigma_pow_of(-(m as i64), k.mul(u_inv, rem[d]));
            q[shift] = k.add(q[shift], e);
            let mut term = vec![k.zero(); shift + 1];
            term[shift] = e;
            let prod = tw.mul_raw(&f.coeffs, &term);
            for (i, &p) in prod.iter().enumerate() {
                rem[i] = k.sub(rem[i], p);
            }
            debug_assert!(rem[d].is_zero());
            rem = normalize(rem);
        }
        Ok((self.with_coeffs(q), self.with_coeffs(rem)))
    }

    pub fn is_right_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.right_divide(g)?.1.is_zero())
    }

    /// All monic `g` of the given degree with `self = q g`, in lexicographic
    /// order of `(g_0, g_1, ...)`. Degree 0 yields `[1]`.
    pub fn enumerate_monic_right_divisors(&self, degree: usize, cap: u64) -> Result<Vec<SkewPoly>> {
        let m = self.degree().ok_or(Error::NonMonic)?;
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        if degree > m {
            return Ok(Vec::new());
        }
        if degree == m {
            return Ok(vec![self.clone()]);
        }
        let q = self.ring().size() as u64;
        check_cap((q as u128).pow(degree as u32), cap)?;
        let count = q.pow(degree as u32);
        let mut found: Vec<SkewPoly> = (0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let g = self.twist.monic_from_tail(&tail_from_index(idx, q, degree));
                let (_, rem) = self.right_divide(&g).expect("monic divisor");
                rem.is_zero().then_some(g)
            })
            .collect();
        found.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        Ok(found)
    }

    /// Monic right divisors of every degree `0..=deg f`, by degree.
    pub fn all_monic_right_divisors(&self, cap: u64) -> Result<Vec<SkewPoly>> {
        let m = self.degree().ok_or(Error::NonMonic)?;
        let mut out = Vec::new();
        for d in 0..=m {
            out.extend(self.enumerate_monic_right_divisors(d, cap)?);
        }
        Ok(out)
    }

    /// The `m x m` matrix with ones on the superdiagonal and last row
    /// `(a_0, ..., a_(m-1))`.
    pub fn companion_matrix(&self) -> Result<Matrix> {
        let a = self.a_coeffs()?;
        let m = a.len();
        let mut mat = Matrix::zeros(m, m);
        for i in 0..m.saturating_sub(1) {
            mat.set(i, i + 1, self.ring().one());
        }
        for (j, &aj) in a.iter().enumerate() {
            mat.set(m - 1, j, aj);
        }
        Ok(mat)
    }

    /// `sum a_k t^k -> sum sigma^(-k)(a_k) t^k`, landing in `S[t; sigma^-1]`.
    pub fn psi(&self) -> Result<SkewPoly> {
        self.twist.require_delta_zero()?;
        let ring = self.ring().clone();
        let inv = ring.aut_inverse(self.twist.sigma);
        let target = TwistContext::new(ring, inv, Derivation::Zero)?;
        let coeffs = self.coeffs.iter().enumerate().map(|(k, &a)| self.twist.sigma_pow_of(-(k as i64), a)).collect();
        Ok(SkewPoly::new(target, coeffs))
    }

    pub fn to_json(&self) -> Value {
        let k = self.ring();
        let delta = match self.twist.delta {
            Derivation::Zero => Value::Null,
            Derivation::Inner(beta) => json!({ "inner": k.element_to_json(beta) }),
        };
        json!({
            "coeffs": self.coeffs.iter().map(|&c| k.element_to_json(c)).collect::<Vec<_>>(),
            "sigma_exp": self.twist.sigma.frob_exp,
            "delta": delta,
        })
    }

    pub fn from_json(ring: &Arc<RingContext>, value: &Value) -> Result<SkewPoly> {
        let bad = |what: &str| Error::InvalidConfig(format!("polynomial JSON: {what}"));
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(|v| ring.element_from_json(v))
            .collect::<Result<Vec<_>>>()?;
        let s = value.get("sigma_exp").and_then(Value::as_u64).ok_or_else(|| bad("missing sigma_exp"))?;
        let sigma = ring.automorphism(s as u32)?;
        let delta = match value.get("delta") {
            None | Some(Value::Null) => Derivation::Zero,
            Some(d) => Derivation::Inner(ring.element_from_json(d.get("inner").ok_or_else(|| bad("delta"))?)?),
        };
        Ok(SkewPoly::new(TwistContext::new(ring.clone(), sigma, delta)?, coeffs))
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.try_add(rhs).expect("twist mismatch in addition")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.try_sub(rhs).expect("twist mismatch in subtraction")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.skew_mul(rhs).expect("twist mismatch in multiplication")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let k = self.ring();
        self.with_coeffs(self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }
}
