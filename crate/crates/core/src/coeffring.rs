//! Finite commutative coefficient rings.
//!
//! Two families are supported: prime-power fields `GF(p^r)`, stored in the
//! polynomial basis `1, x, ..., x^(r-1)` modulo an irreducible monic
//! polynomial, and integer residue rings `Z_n`.
//!
//! Elements are plain [`Elem`] codes. A field element with little-endian
//! digits `d_0, ..., d_(r-1)` has code `d_0 + d_1 p + ... + d_(r-1) p^(r-1)`;
//! a residue class has its least non-negative representative as code. The
//! canonical order on elements used throughout the crate is the order of
//! these codes, so `0 < 1 < x < x + 1 < ...` in `GF(2^r)`.
//!
//! Field multiplication goes through discrete logarithms with respect to a
//! fixed primitive element, found at construction time. Rings are capped in
//! size (default `2^16`) because every classification routine enumerates the
//! unit group.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_RING_SIZE: u64 = 1 << 16;

/// An element of a [`RingContext`], identified by its code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub(crate) fn from_code(code: u32) -> Elem {
        Elem(code)
    }

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    FiniteField { p: u32, r: u32, modulus: Vec<u32> },
    ResidueRing { n: u32 },
}

/// The Frobenius power `x -> x^(p^frob_exp)`; the identity in a residue ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    pub frob_exp: u32,
}

impl Automorphism {
    pub const IDENTITY: Automorphism = Automorphism { frob_exp: 0 };

    pub fn is_identity(self) -> bool {
        self.frob_exp == 0
    }
}

/// JSON description of a field: `{"p": 2, "r": 2, "modulus": [1, 1, 1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub r: u32,
    pub modulus: Vec<u32>,
}

enum Tables {
    Field { xi: u32, exp: Vec<u32>, log: Vec<u32> },
    Residue { inv: Vec<u32> },
}

pub struct RingContext {
    kind: RingKind,
    size: u32,
    tables: Tables,
    units: Vec<Elem>,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::FiniteField { p, r, modulus } => {
                write!(f, "GF({p}^{r}) mod {modulus:?}")
            }
            RingKind::ResidueRing { n } => write!(f, "Z_{n}"),
        }
    }
}

impl RingContext {
    /// `GF(p^r)`; the default modulus is the smallest irreducible monic
    /// polynomial of degree `r`, ordered by the code of its lower coefficients.
    pub fn finite_field(p: u32, r: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::finite_field_with_cap(p, r, modulus, DEFAULT_MAX_RING_SIZE)
    }

    pub fn finite_field_with_cap(p: u32, r: u32, modulus: Option<&[u32]>, max_size: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if r == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let size = (p as u64)
            .checked_pow(r)
            .filter(|&s| s <= u32::MAX as u64)
            .ok_or(Error::RingTooLarge { size: u64::MAX, cap: max_size })?;
        if size > max_size {
            return Err(Error::RingTooLarge { size, cap: max_size });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || m[r as usize] != 1 {
                    return Err(Error::InvalidModulus(format!("expected a monic polynomial of degree {r}, got {m:?}")));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients of {m:?} must lie in [0, {p})")));
                }
                if !fp::is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(m.to_vec()));
                }
                m.to_vec()
            }
            None => fp::smallest_irreducible(p, r),
        };

        let q = size as u32;
        let order = q - 1;
        let xi_digits = fp::find_primitive(p, &modulus, order);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = fp::digits(1, p, r);
        for k in 0..order {
            let code = fp::encode(&cur, p);
            if k > 0 && code == 1 {
                return Err(Error::Inconsistent(format!("primitive element has order {k} instead of {order}")));
            }
            exp.push(code);
            log[code as usize] = k;
            cur = fp::mul_mod(&cur, &xi_digits, &modulus, p);
        }
        if fp::encode(&cur, p) != 1 {
            return Err(Error::Inconsistent("primitive element does not satisfy xi^(q-1) = 1".into()));
        }
        let xi = fp::encode(&xi_digits, p);
        Ok(RingContext {
            kind: RingKind::FiniteField { p, r, modulus },
            size: q,
            tables: Tables::Field { xi, exp, log },
            units: (1..q).map(Elem).collect(),
        })
    }

    pub fn residue_ring(n: u32) -> Result<Self> {
        Self::residue_ring_with_cap(n, DEFAULT_MAX_RING_SIZE)
    }

    pub fn residue_ring_with_cap(n: u32, max_size: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConfig(format!("residue ring modulus must be at least 2, got {n}")));
        }
        if n as u64 > max_size {
            return Err(Error::RingTooLarge { size: n as u64, cap: max_size });
        }
        let inv: Vec<u32> = (0..n).map(|a| mod_inverse(a as u64, n as u64).unwrap_or(0) as u32).collect();
        let units = (0..n).filter(|&a| inv[a as usize] != 0).map(Elem).collect();
        Ok(RingContext { kind: RingKind::ResidueRing { n }, size: n, tables: Tables::Residue { inv }, units })
    }

    pub fn from_field_spec(spec: &FieldSpec) -> Result<Self> {
        Self::finite_field(spec.p, spec.r, Some(&spec.modulus))
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, RingKind::FiniteField { .. })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// `p` for a field, `n` for `Z_n`.
    pub fn characteristic(&self) -> u32 {
        match self.kind {
            RingKind::FiniteField { p, .. } => p,
            RingKind::ResidueRing { n } => n,
        }
    }

    /// Extension degree `r`; 1 for residue rings.
    pub fn degree(&self) -> u32 {
        match self.kind {
            RingKind::FiniteField { r, .. } => r,
            RingKind::ResidueRing { .. } => 1,
        }
    }

    pub fn field_spec(&self) -> Option<FieldSpec> {
        match &self.kind {
            RingKind::FiniteField { p, r, modulus } => Some(FieldSpec { p: *p, r: *r, modulus: modulus.clone() }),
            RingKind::ResidueRing { .. } => None,
        }
    }

    /// The fixed generator of the unit group (field case only).
    pub fn primitive_element(&self) -> Option<Elem> {
        match self.tables {
            Tables::Field { xi, .. } => Some(Elem(xi)),
            Tables::Residue { .. } => None,
        }
    }

    pub fn element(&self, code: u64) -> Result<Elem> {
        if code < self.size as u64 {
            Ok(Elem(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, size: self.size as u64 })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(Elem)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// Image of an integer under the canonical map `Z -> S`.
    pub fn from_int(&self, value: i64) -> Elem {
        let c = self.characteristic() as i64;
        Elem(value.rem_euclid(c) as u32)
    }

    /// Little-endian digit vector (length `r`) of a field element, or the
    /// single residue for `Z_n`.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        match self.kind {
            RingKind::FiniteField { p, r, .. } => fp::digits(a.0, p, r),
            RingKind::ResidueRing { .. } => vec![a.0],
        }
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        match self.kind {
            RingKind::FiniteField { p, r, .. } => {
                if digits.len() != r as usize || digits.iter().any(|&d| d >= p) {
                    return Err(Error::InvalidConfig(format!("expected {r} digits in [0, {p}), got {digits:?}")));
                }
                Ok(Elem(fp::encode(digits, p)))
            }
            RingKind::ResidueRing { .. } => match digits {
                [d] => self.element(*d as u64),
                _ => Err(Error::InvalidConfig(format!("expected a single residue, got {digits:?}"))),
            },
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.kind {
            RingKind::FiniteField { p: 2, .. } => Elem(a.0 ^ b.0),
            RingKind::FiniteField { p, r, .. } => Elem(digitwise(a.0, b.0, p, r, |x, y| (x + y) % p)),
            RingKind::ResidueRing { n } => Elem(((a.0 as u64 + b.0 as u64) % n as u64) as u32),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match self.kind {
            RingKind::FiniteField { p: 2, .. } => a,
            RingKind::FiniteField { p, r, .. } => Elem(digitwise(a.0, 0, p, r, |x, _| (p - x) % p)),
            RingKind::ResidueRing { n } => Elem((n - a.0) % n),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Tables::Field { exp, log, .. } => {
                if a.0 == 0 || b.0 == 0 {
                    return Elem(0);
                }
                let order = exp.len() as u32;
                let k = (log[a.0 as usize] + log[b.0 as usize]) % order;
                Elem(exp[k as usize])
            }
            Tables::Residue { .. } => Elem(((a.0 as u64 * b.0 as u64) % self.size as u64) as u32),
        }
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        match &self.tables {
            Tables::Field { exp, log, .. } => {
                if a.0 == 0 {
                    return None;
                }
                let order = exp.len() as u32;
                Some(Elem(exp[((order - log[a.0 as usize]) % order) as usize]))
            }
            Tables::Residue { inv } => match inv[a.0 as usize] {
                0 => None,
                i => Some(Elem(i)),
            },
        }
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inv(a).is_some()
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return self.one();
        }
        match &self.tables {
            Tables::Field { exp, log, .. } => {
                if a.0 == 0 {
                    return Elem(0);
                }
                let order = exp.len() as u64;
                let e = (log[a.0 as usize] as u64 * (k % order)) % order;
                Elem(exp[e as usize])
            }
            Tables::Residue { .. } => {
                let n = self.size as u64;
                Elem(mod_pow(a.0 as u64, k, n) as u32)
            }
        }
    }

    /// All units in canonical order.
    pub fn unit_group(&self) -> &[Elem] {
        &self.units
    }

    /// Elements whose additive span is the whole ring: `x^0, ..., x^(r-1)`
    /// for a field, `1` for `Z_n`.
    pub fn additive_basis(&self) -> Vec<Elem> {
        match self.kind {
            RingKind::FiniteField { p, r, .. } => (0..r).map(|l| Elem(p.pow(l))).collect(),
            RingKind::ResidueRing { .. } => vec![Elem(1)],
        }
    }

    pub fn automorphism(&self, frob_exp: u32) -> Result<Automorphism> {
        if frob_exp < self.degree() {
            Ok(Automorphism { frob_exp })
        } else {
            Err(Error::UnsupportedAutomorphism(frob_exp))
        }
    }

    /// The whole automorphism group in canonical order (identity first).
    pub fn automorphisms(&self) -> Vec<Automorphism> {
        (0..self.degree()).map(|frob_exp| Automorphism { frob_exp }).collect()
    }

    pub fn aut_order(&self, tau: Automorphism) -> u32 {
        let r = self.degree();
        r / gcd(r as u64, tau.frob_exp as u64) as u32
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: Automorphism, b: Automorphism) -> Automorphism {
        Automorphism { frob_exp: (a.frob_exp + b.frob_exp) % self.degree() }
    }

    pub fn aut_inverse(&self, a: Automorphism) -> Automorphism {
        let r = self.degree();
        Automorphism { frob_exp: (r - a.frob_exp % r) % r }
    }

    pub fn aut_pow(&self, a: Automorphism, k: u64) -> Automorphism {
        let r = self.degree() as u64;
        Automorphism { frob_exp: ((a.frob_exp as u64 % r) * (k % r) % r) as u32 }
    }

    /// Checked form of [`RingContext::act`].
    pub fn apply_aut(&self, tau: Automorphism, a: Elem) -> Result<Elem> {
        if tau.frob_exp >= self.degree() {
            return Err(Error::UnsupportedAutomorphism(tau.frob_exp));
        }
        if !self.contains(a) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.act(tau, a))
    }

    /// `tau(a) = a^(p^e)`. Assumes `tau` belongs to this ring.
    pub fn act(&self, tau: Automorphism, a: Elem) -> Elem {
        if tau.frob_exp == 0 || a.0 == 0 {
            return a;
        }
        match (&self.kind, &self.tables) {
            (RingKind::FiniteField { p, .. }, Tables::Field { exp, log, .. }) => {
                let order = exp.len() as u64;
                let pe = mod_pow(*p as u64, tau.frob_exp as u64, order);
                let e = (log[a.0 as usize] as u64 * pe) % order;
                Elem(exp[e as usize])
            }
            _ => a,
        }
    }

    /// Checked form of [`RingContext::norm`].
    pub fn partial_norm(&self, tau: Automorphism, beta: Elem, i: usize) -> Result<Elem> {
        self.apply_aut(tau, beta)?;
        Ok(self.norm(tau, beta, i))
    }

    /// `N_i^tau(beta) = beta tau(beta) ... tau^(i-1)(beta)`; `N_0 = 1`.
    pub fn norm(&self, tau: Automorphism, beta: Elem, i: usize) -> Elem {
        let mut acc = self.one();
        let mut x = beta;
        for _ in 0..i {
            acc = self.mul(acc, x);
            x = self.act(tau, x);
        }
        acc
    }

    /// The subgroup `{N_m^tau(beta) : beta a unit}` in canonical order.
    pub fn norm_image(&self, tau: Automorphism, m: usize) -> Vec<Elem> {
        let image: BTreeSet<Elem> = self.units.iter().map(|&u| self.norm(tau, u, m)).collect();
        image.into_iter().collect()
    }

    /// `Fix(tau)` in canonical order.
    pub fn fixed_elements(&self, tau: Automorphism) -> Vec<Elem> {
        self.elements().filter(|&a| self.act(tau, a) == a).collect()
    }

    pub fn is_fixed(&self, tau: Automorphism, a: Elem) -> bool {
        self.act(tau, a) == a
    }

    /// JSON element encoding: digit array for fields, integer for `Z_n`.
    pub fn element_to_json(&self, a: Elem) -> Value {
        match self.kind {
            RingKind::FiniteField { .. } => Value::from(self.digits(a)),
            RingKind::ResidueRing { .. } => Value::from(a.0),
        }
    }

    pub fn element_from_json(&self, value: &Value) -> Result<Elem> {
        let bad = || Error::InvalidConfig(format!("cannot decode element from {value}"));
        match (&self.kind, value) {
            (RingKind::FiniteField { .. }, Value::Array(items)) => {
                let digits = items
                    .iter()
                    .map(|v| v.as_u64().and_then(|d| u32::try_from(d).ok()).ok_or_else(bad))
                    .collect::<Result<Vec<u32>>>()?;
                self.from_digits(&digits)
            }
            (RingKind::ResidueRing { .. }, Value::Number(n)) => self.element(n.as_u64().ok_or_else(bad)?),
            _ => Err(bad()),
        }
    }
}

fn digitwise(a: u32, b: u32, p: u32, r: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..r {
        out += op(a % p, b % p) * place;
        place *= p;
        a /= p;
        b /= p;
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            result = (result as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    result
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i64, n as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n as i64) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
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

/// Dense little-endian polynomials over `F_p`, used only while building
/// field tables.
mod fp {
    use super::prime_factors;

    pub fn digits(mut code: u32, p: u32, r: u32) -> Vec<u32> {
        (0..r)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    }

    pub fn encode(digits: &[u32], p: u32) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    /// Remainder of `a` modulo the monic polynomial `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let db = b.len() - 1;
        while a.len() > db {
            let shift = a.len() - 1 - db;
            let lead = *a.last().unwrap();
            for (i, &c) in b.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
            a = trim(a);
        }
        a
    }

    /// Product of two residues modulo the monic `modulus`, as `r` digits.
    pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        let r = modulus.len() - 1;
        let mut prod = vec![0u32; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let mut out = rem(&prod, modulus, p);
        out.resize(r, 0);
        out
    }

    fn pow_mod(a: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
        let r = modulus.len() - 1;
        let mut result = digits(1, p, r as u32);
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &base, modulus, p);
            }
            base = mul_mod(&base, &base, modulus, p);
            e >>= 1;
        }
        result
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
        let deg = poly.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut g = digits(code as u32, p, d as u32);
                g.push(1);
                if rem(poly, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
        let count = p.pow(r);
        (0..count)
            .map(|code| {
                let mut m = digits(code, p, r);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree")
    }

    /// Smallest code whose powers generate the unit group of order `order`.
    pub fn find_primitive(p: u32, modulus: &[u32], order: u32) -> Vec<u32> {
        let r = modulus.len() as u32 - 1;
        let one = digits(1, p, r);
        let factors = prime_factors(order as u64);
        (1..=order)
            .map(|code| digits(code, p, r))
            .find(|cand| factors.iter().all(|&l| pow_mod(cand, order as u64 / l, modulus, p) != one))
            .expect("the unit group of a finite field is cyclic")
    }
}
