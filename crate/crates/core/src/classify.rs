//! Equivalence and isometry of code classes `C_f`, `C_h`.
//!
//! Throughout, `f = t^m - sum a_i t^i` and `h = t^m - sum b_i t^i` over the
//! same twist with `delta = 0`. A witness `(tau, alpha, k)` stands for the
//! map `G: S_f -> S_h` that acts as `tau` on coefficients and sends `t` to
//! `alpha t^k`. With `k = 1` it is an isomorphism exactly when
//! `tau(a_i) = N_(m-i)(sigma^i(alpha)) b_i` for all `i`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeffring::{gcd, Automorphism, Elem, RingContext, RingKind};
use crate::error::{check_cap, Error, Result};
use crate::petit::PetitAlgebra;
use crate::skewpoly::{SkewPoly, TwistContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IsometryWitness {
    pub tau: Automorphism,
    pub alpha: Elem,
    pub k: usize,
}

impl IsometryWitness {
    pub fn identity(ring: &RingContext) -> Self {
        IsometryWitness { tau: Automorphism::IDENTITY, alpha: ring.one(), k: 1 }
    }

    /// Witness of the inverse map `S_h -> S_f` (degree 1 only).
    pub fn inverse(&self, ring: &RingContext) -> Result<Self> {
        if self.k != 1 {
            return Err(Error::WitnessInvalid);
        }
        let tau_inv = ring.aut_inverse(self.tau);
        let alpha_inv = ring.inv(self.alpha).ok_or(Error::NonUnit)?;
        Ok(IsometryWitness { tau: tau_inv, alpha: ring.act(tau_inv, alpha_inv), k: 1 })
    }

    /// Witness of `G_next ∘ G_self` (degree 1 only).
    pub fn then(&self, next: &IsometryWitness, ring: &RingContext) -> Result<Self> {
        if self.k != 1 || next.k != 1 {
            return Err(Error::WitnessInvalid);
        }
        Ok(IsometryWitness {
            tau: ring.compose(next.tau, self.tau),
            alpha: ring.mul(ring.act(next.tau, self.alpha), next.alpha),
            k: 1,
        })
    }

    pub fn to_json(&self, ring: &RingContext) -> Value {
        json!({
            "tau": { "frob_exp": self.tau.frob_exp },
            "alpha": ring.element_to_json(self.alpha),
            "k": self.k,
        })
    }
}

/// Strongest relation established between two classes, in the order
/// listed here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Relation {
    ChenEquivalent,
    Equivalent,
    ChenIsometric,
    Isometric,
    NotRelated,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::ChenEquivalent => "ChenEquivalent",
            Relation::Equivalent => "Equivalent",
            Relation::ChenIsometric => "ChenIsometric",
            Relation::Isometric => "Isometric",
            Relation::NotRelated => "NotRelated",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub relation: Relation,
    pub witness: Option<IsometryWitness>,
    pub filter_reason: Option<String>,
    pub equivalent: bool,
    pub chen_equivalent: bool,
    pub isometric: bool,
    pub chen_isometric: bool,
    /// Witness for the strongest relation with `tau = id`.
    pub chen_witness: Option<IsometryWitness>,
}

impl ClassificationResult {
    /// The same result with every relation that needs `tau != id` dropped.
    pub fn chen_only(self) -> Self {
        let relation = if self.chen_equivalent {
            Relation::ChenEquivalent
        } else if self.chen_isometric {
            Relation::ChenIsometric
        } else {
            Relation::NotRelated
        };
        ClassificationResult {
            relation,
            witness: self.chen_witness,
            equivalent: self.chen_equivalent,
            isometric: self.chen_isometric,
            ..self
        }
    }

    pub fn to_json(&self, ring: &RingContext) -> Value {
        json!({
            "relation": self.relation.to_string(),
            "witness": self.witness.map(|w| w.to_json(ring)),
            "filter_reason": self.filter_reason,
            "equivalent": self.equivalent,
            "chen_equivalent": self.chen_equivalent,
            "isometric": self.isometric,
            "chen_isometric": self.chen_isometric,
        })
    }
}

struct Pair<'a> {
    tw: &'a Arc<TwistContext>,
    m: usize,
    a: Vec<Elem>,
    b: Vec<Elem>,
}

fn pair<'a>(f: &'a SkewPoly, h: &SkewPoly) -> Result<Pair<'a>> {
    if f.twist() != h.twist() {
        return Err(Error::ContextMismatch);
    }
    f.twist().require_delta_zero()?;
    let (df, dh) = (f.degree().unwrap_or(0), h.degree().unwrap_or(0));
    if df != dh {
        return Err(Error::DegreeMismatch(df, dh));
    }
    Ok(Pair { tw: f.twist(), m: df, a: f.a_coeffs()?, b: h.a_coeffs()? })
}

fn equation_holds(p: &Pair, tau: Automorphism, alpha: Elem) -> bool {
    let k = p.tw.ring();
    (0..p.m).all(|i| {
        let lhs = k.act(tau, p.a[i]);
        let n = k.norm(p.tw.sigma(), p.tw.sigma_pow_of(i as i64, alpha), p.m - i);
        lhs == k.mul(n, p.b[i])
    })
}

/// `tau(a_i) = N_(m-i)(sigma^i(alpha)) b_i` for every `i < m`.
pub fn check_equivalence(f: &SkewPoly, h: &SkewPoly, tau: Automorphism, alpha: Elem) -> Result<bool> {
    let p = pair(f, h)?;
    let k = p.tw.ring();
    k.apply_aut(tau, alpha)?;
    if !k.is_unit(alpha) {
        return Err(Error::NonUnit);
    }
    Ok(equation_holds(&p, tau, alpha))
}

fn candidate_taus(ring: &RingContext, chen_only: bool) -> Vec<Automorphism> {
    if chen_only {
        vec![Automorphism::IDENTITY]
    } else {
        ring.automorphisms()
    }
}

/// First `(tau, alpha)` in canonical order (tau by Frobenius exponent,
/// alpha by element order) satisfying the equivalence equation.
pub fn find_equivalence(f: &SkewPoly, h: &SkewPoly, chen_only: bool) -> Result<Option<IsometryWitness>> {
    let p = pair(f, h)?;
    let k = p.tw.ring();
    for tau in candidate_taus(k, chen_only) {
        for &alpha in k.unit_group() {
            if equation_holds(&p, tau, alpha) {
                return Ok(Some(IsometryWitness { tau, alpha, k: 1 }));
            }
        }
    }
    Ok(None)
}

/// Cheap necessary conditions for equivalence. Returns the reason when one
/// of them proves that no `(tau, alpha)` exists.
pub fn fast_reject(f: &SkewPoly, h: &SkewPoly) -> Result<Option<String>> {
    let p = pair(f, h)?;
    let k = p.tw.ring();
    let m = p.m;
    for i in 0..m {
        if p.a[i].is_zero() != p.b[i].is_zero() {
            return Ok(Some(format!("support mismatch at i = {i}")));
        }
    }
    for i in 0..m {
        if k.is_unit(p.a[i]) != k.is_unit(p.b[i]) {
            return Ok(Some(format!("invertibility pattern mismatch at i = {i}")));
        }
    }
    let taus = k.automorphisms();
    if m >= 1 {
        let (a, b) = (p.a[m - 1], p.b[m - 1]);
        let associate = |tau: Automorphism| {
            let ta = k.act(tau, a);
            k.unit_group().iter().any(|&u| k.mul(u, b) == ta)
        };
        if !taus.iter().any(|&tau| associate(tau)) {
            return Ok(Some(format!("leading coefficient: tau(a_{}) is never a unit multiple of b_{}", m - 1, m - 1)));
        }
    }
    // Applying the norm N_n to S_0 = Fix(sigma) turns the equation at index i
    // into N_n(tau(a_i) / b_i) = N_n(alpha)^(m-i).
    let sigma = p.tw.sigma();
    let n = k.aut_order(sigma) as usize;
    let norms: BTreeSet<Elem> = k.norm_image(sigma, n).into_iter().collect();
    let unit_pairs: Vec<usize> = (0..m).filter(|&i| k.is_unit(p.a[i]) && k.is_unit(p.b[i])).collect();
    if !unit_pairs.is_empty() {
        let fits = |tau: Automorphism| {
            norms.iter().any(|&nu| {
                unit_pairs.iter().all(|&i| {
                    let q = k.mul(k.act(tau, p.a[i]), k.inv(p.b[i]).unwrap());
                    k.norm(sigma, q, n) == k.pow(nu, (m - i) as u64)
                })
            })
        };
        if !taus.iter().any(|&tau| fits(tau)) {
            return Ok(Some("norm coset: no tau matches N(tau(a_i)/b_i) with a power of a common norm".into()));
        }
    }
    Ok(None)
}

/// Outcome of the degree-`k` constacyclic test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeKCheck {
    pub holds: bool,
    /// True when the condition is only known to be necessary.
    pub necessary_only: bool,
}

fn constacyclic_coeff(f: &SkewPoly) -> Result<Elem> {
    let a = f.a_coeffs()?;
    if a.is_empty() || a[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotConstacyclic);
    }
    Ok(a[0])
}

/// Admissible monomial degrees: `k = 1`, or `1 < k < m` with `k = 1 mod n`
/// and `gcd(k, m) = 1`.
pub fn validate_k(k: usize, m: usize, n: u32) -> Result<()> {
    let bad = |reason: &str| Err(Error::InvalidK { k, reason: reason.into() });
    if k == 0 {
        return bad("k must be positive");
    }
    if k == 1 {
        return Ok(());
    }
    if k >= m {
        return bad("k must be smaller than m");
    }
    if !(k - 1).is_multiple_of(n as usize) {
        return bad("k must be congruent to 1 modulo the order of sigma");
    }
    if gcd(k as u64, m as u64) != 1 {
        return bad("k must be coprime to m");
    }
    Ok(())
}

/// `N_m^(sigma^k)(alpha) b^k = tau(a)` for `f = t^m - a`, `h = t^m - b`.
pub fn check_isometry_k(f: &SkewPoly, h: &SkewPoly, tau: Automorphism, alpha: Elem, k: usize) -> Result<DegreeKCheck> {
    let p = pair(f, h)?;
    let (a, b) = (constacyclic_coeff(f)?, constacyclic_coeff(h)?);
    let ring = p.tw.ring();
    let sigma = p.tw.sigma();
    let n = ring.aut_order(sigma);
    validate_k(k, p.m, n)?;
    ring.apply_aut(tau, alpha)?;
    if !ring.is_unit(alpha) {
        return Err(Error::NonUnit);
    }
    let sigma_k = ring.aut_pow(sigma, k as u64);
    let lhs = ring.mul(ring.norm(sigma_k, alpha, p.m), ring.pow(b, k as u64));
    let associative_case = ring.is_fixed(sigma, a) && ring.is_fixed(sigma, b) && p.m % n as usize == 0;
    Ok(DegreeKCheck { holds: lhs == ring.act(tau, a), necessary_only: k > 1 && !associative_case })
}

/// `G(x)` for `x` in `S_f`: `sum tau(x_i) N_i^(sigma^k)(alpha) t^(ki)`,
/// reduced modulo `h` in the target.
pub(crate) fn map_vec(target: &PetitAlgebra, w: &IsometryWitness, x: &[Elem]) -> Vec<Elem> {
    let tw = target.twist();
    let ring = tw.ring();
    let sigma_k = ring.aut_pow(tw.sigma(), w.k as u64);
    let mut out = vec![ring.zero(); (x.len().max(1) - 1) * w.k + 1];
    let mut norm = ring.one();
    let mut step = w.alpha;
    for (i, &xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            out[i * w.k] = ring.add(out[i * w.k], ring.mul(ring.act(w.tau, xi), norm));
        }
        norm = ring.mul(norm, step);
        step = ring.act(sigma_k, step);
    }
    target.reduce_vec(out)
}

/// Monic normalisation of `G_(tau, alpha)(g)` for a code generator.
pub fn monic_image(g: &SkewPoly, target: &Arc<TwistContext>, w: &IsometryWitness) -> Result<SkewPoly> {
    if w.k != 1 {
        return Err(Error::WitnessInvalid);
    }
    let ring = target.ring();
    let mut coeffs = Vec::with_capacity(g.coeffs().len());
    let mut norm = ring.one();
    let mut step = w.alpha;
    for &gi in g.coeffs() {
        coeffs.push(ring.mul(ring.act(w.tau, gi), norm));
        norm = ring.mul(norm, step);
        step = target.sigma_of(step);
    }
    let image = target.poly(coeffs);
    let lead = image.leading().ok_or(Error::WitnessInvalid)?;
    let inv = ring.inv(lead).ok_or(Error::NonUnit)?;
    Ok(image.scale_left(inv))
}

/// Checks directly that the witness defines a multiplicative bijection
/// `S_f -> S_h`: multiplicativity on additive generator pairs and a trivial
/// kernel over all `|S_f|` elements.
pub fn verify_monomial_map(
    source: &PetitAlgebra,
    target: &PetitAlgebra,
    w: &IsometryWitness,
    cap: u64,
) -> Result<bool> {
    if source.twist() != target.twist() {
        return Err(Error::ContextMismatch);
    }
    if source.m() != target.m() {
        return Err(Error::DegreeMismatch(source.m(), target.m()));
    }
    validate_k(w.k, source.m(), target.twist().sigma_order())?;
    if !source.ring().is_unit(w.alpha) {
        return Err(Error::NonUnit);
    }
    check_cap(source.size(), cap)?;
    let gens = source.additive_generators();
    let multiplicative = gens.par_iter().all(|x| {
        gens.iter().all(|y| {
            let lhs = map_vec(target, w, &source.mul_vec(x, y));
            let rhs = target.mul_vec(&map_vec(target, w, x), &map_vec(target, w, y));
            lhs == rhs
        })
    });
    if !multiplicative {
        return Ok(false);
    }
    let injective = (1..source.size() as u64)
        .into_par_iter()
        .all(|idx| map_vec(target, w, &source.vec_at(idx)).iter().any(|c| !c.is_zero()));
    Ok(injective)
}

fn find_higher_isometry(
    source: &PetitAlgebra,
    target: &PetitAlgebra,
    chen_only: bool,
    ks: &[usize],
    cap: u64,
) -> Result<Option<IsometryWitness>> {
    let ring = source.ring();
    for &k in ks {
        for tau in candidate_taus(ring, chen_only) {
            for &alpha in ring.unit_group() {
                let w = IsometryWitness { tau, alpha, k };
                if verify_monomial_map(source, target, &w, cap)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Monomial degrees `k > 1` admissible for length `m` and `sigma` of order `n`.
pub fn admissible_ks(m: usize, n: u32) -> Vec<usize> {
    (2..m).filter(|&k| validate_k(k, m, n).is_ok()).collect()
}

/// Classifies the pair `(C_f, C_h)`. Each flag is established by its own
/// search; `ks` restricts the higher-degree isometry search (all admissible
/// degrees when `None`).
pub fn classify_pair(f: &SkewPoly, h: &SkewPoly, ks: Option<&[usize]>, cap: u64) -> Result<ClassificationResult> {
    let p = pair(f, h)?;
    let n = p.tw.sigma_order();
    let filter_reason = fast_reject(f, h)?;
    let (equiv, chen) = if filter_reason.is_some() {
        (None, None)
    } else {
        (find_equivalence(f, h, false)?, find_equivalence(f, h, true)?)
    };
    let ks: Vec<usize> = match ks {
        Some(ks) => {
            for &k in ks {
                validate_k(k, p.m, n)?;
            }
            ks.iter().copied().filter(|&k| k > 1).collect()
        }
        None => admissible_ks(p.m, n),
    };
    let (mut iso, mut chen_iso) = (equiv, chen);
    if !ks.is_empty() && (iso.is_none() || chen_iso.is_none()) {
        let source = PetitAlgebra::new(f.clone())?;
        let target = PetitAlgebra::new(h.clone())?;
        if chen_iso.is_none() {
            chen_iso = find_higher_isometry(&source, &target, true, &ks, cap)?;
        }
        if iso.is_none() {
            iso = match chen_iso {
                Some(w) => Some(w),
                None => find_higher_isometry(&source, &target, false, &ks, cap)?,
            };
        }
    }
    let (relation, witness) = if chen.is_some() {
        (Relation::ChenEquivalent, chen)
    } else if equiv.is_some() {
        (Relation::Equivalent, equiv)
    } else if chen_iso.is_some() {
        (Relation::ChenIsometric, chen_iso)
    } else if iso.is_some() {
        (Relation::Isometric, iso)
    } else {
        (Relation::NotRelated, None)
    };
    Ok(ClassificationResult {
        relation,
        witness,
        filter_reason,
        equivalent: equiv.is_some(),
        chen_equivalent: chen.is_some(),
        isometric: iso.is_some(),
        chen_isometric: chen_iso.is_some(),
        chen_witness: chen.or(chen_iso),
    })
}

/// `h_(tau, alpha) = t^m - sum N_(m-i)(sigma^i(tau(alpha))) tau(b_i) t^i`.
pub fn class_member(h: &SkewPoly, tau: Automorphism, alpha: Elem) -> Result<SkewPoly> {
    let tw = h.twist();
    tw.require_delta_zero()?;
    let ring = tw.ring();
    let b = h.a_coeffs()?;
    let m = b.len();
    let ta = ring.act(tau, alpha);
    let a: Vec<Elem> = (0..m)
        .map(|i| ring.mul(ring.norm(tw.sigma(), tw.sigma_pow_of(i as i64, ta), m - i), ring.act(tau, b[i])))
        .collect();
    Ok(tw.monic_from_a(&a))
}

/// All `h_(tau, alpha)`, deduplicated and sorted by coefficient vector.
pub fn equivalence_class_of(h: &SkewPoly, chen_only: bool) -> Result<Vec<SkewPoly>> {
    let ring = h.ring().clone();
    let mut members = Vec::new();
    for tau in candidate_taus(&ring, chen_only) {
        for &alpha in ring.unit_group() {
            members.push(class_member(h, tau, alpha)?);
        }
    }
    members.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
    members.dedup();
    Ok(members)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub nonassoc: u64,
    pub assoc: u64,
    pub formula_nonassoc: u64,
    pub formula_assoc: u64,
}

impl ClassCounts {
    pub fn agree(&self) -> bool {
        self.nonassoc == self.formula_nonassoc && self.assoc == self.formula_assoc
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain struct")
    }
}

/// `[m]_s mod q`, with `[m]_0 = m`.
fn bracket_mod(p: u64, s: u32, m: usize, q: u64) -> u64 {
    let ps = crate::coeffring::mod_pow(p, s as u64, q);
    let mut acc = 0u64;
    let mut term = 1 % q;
    for _ in 0..m {
        acc = (acc + term) % q;
        term = term * ps % q;
    }
    acc
}

/// Closed-form `(nonassoc, assoc)` counts of Chen classes of skew
/// constacyclic families over `GF(p^r)` with `sigma = x -> x^(p^s)`.
pub fn closed_form_counts(p: u32, r: u32, s: u32, m: usize) -> (u64, u64) {
    let q = (p as u64).pow(r) - 1;
    let w = gcd(bracket_mod(p as u64, s, m, q), q);
    let g = gcd(r as u64, s as u64) as u32;
    let n = r / g;
    if !m.is_multiple_of(n as usize) {
        return (w, 0);
    }
    // [n]_g = |K^x| / |Fix(sigma)^x|
    let fixed_units = (p as u64).pow(g) - 1;
    let index = q / fixed_units;
    (w - w / index, w / index)
}

/// Counts Chen classes of `t^m - a` (`a` a unit) by enumerating the cosets
/// of `N_m(S^x)` in `S^x`, and compares with the closed forms.
pub fn count_constacyclic_classes(
    ring: &Arc<RingContext>,
    sigma: Automorphism,
    m: usize,
    cap: u64,
) -> Result<ClassCounts> {
    ring.apply_aut(sigma, ring.one())?;
    if m < 2 {
        return Err(Error::DegreeTooLow(m));
    }
    let units = ring.unit_group();
    check_cap(units.len() as u128, cap)?;
    let tw = TwistContext::new(ring.clone(), sigma, crate::skewpoly::Derivation::Zero)?;
    let image = ring.norm_image(sigma, m);
    let mut seen = BTreeSet::new();
    let (mut nonassoc, mut assoc) = (0, 0);
    for &a in units {
        if seen.contains(&a) {
            continue;
        }
        for &nu in &image {
            seen.insert(ring.mul(a, nu));
        }
        let mut tail = vec![ring.zero(); m];
        tail[0] = a;
        let f = tw.monic_from_a(&tail);
        if PetitAlgebra::new(f)?.f_two_sided() {
            assoc += 1;
        } else {
            nonassoc += 1;
        }
    }
    let (formula_nonassoc, formula_assoc) = match *ring.kind() {
        RingKind::FiniteField { p, r, .. } => closed_form_counts(p, r, sigma.frob_exp, m),
        RingKind::ResidueRing { .. } => (0, (units.len() / image.len()) as u64),
    };
    Ok(ClassCounts { nonassoc, assoc, formula_nonassoc, formula_assoc })
}

/// Compares the equivalence equation for `(f, h)` with the componentwise
/// constacyclic equations for `t^(m-i) - a_i` and `t^(m-i) - b_i` under
/// `(tau, sigma^i(alpha))`, over every index where `a_i` or `b_i` is
/// nonzero. Disagreement is an internal error.
pub fn polycyclic_constacyclic_bridge(f: &SkewPoly, h: &SkewPoly, tau: Automorphism, alpha: Elem) -> Result<bool> {
    let p = pair(f, h)?;
    let lhs = check_equivalence(f, h, tau, alpha)?;
    let ring = p.tw.ring();
    let mut rhs = true;
    for i in 0..p.m {
        if p.a[i].is_zero() && p.b[i].is_zero() {
            continue;
        }
        let len = p.m - i;
        let mut ta = vec![ring.zero(); len];
        let mut tb = vec![ring.zero(); len];
        ta[0] = p.a[i];
        tb[0] = p.b[i];
        let fi = p.tw.monic_from_a(&ta);
        let hi = p.tw.monic_from_a(&tb);
        rhs &= check_equivalence(&fi, &hi, tau, p.tw.sigma_pow_of(i as i64, alpha))?;
    }
    if lhs != rhs {
        return Err(Error::Inconsistent(format!(
            "equivalence equation gives {lhs} but the constacyclic components give {rhs}"
        )));
    }
    Ok(lhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialClassReport {
    pub equivalent_to_cyclic: bool,
    pub cyclic_witness: Option<IsometryWitness>,
    pub equivalent_to_negacyclic: bool,
    pub negacyclic_witness: Option<IsometryWitness>,
}

/// Whether `C_(t^m - a)` is Chen equivalent to the cyclic (`t^m - 1`) and
/// negacyclic (`t^m + 1`) classes; witnesses map `S_(t^m - a)` onto them.
pub fn special_class_tests(
    ring: &Arc<RingContext>,
    sigma: Automorphism,
    m: usize,
    a: Elem,
) -> Result<SpecialClassReport> {
    ring.apply_aut(sigma, a)?;
    if !ring.is_unit(a) {
        return Err(Error::NonUnit);
    }
    let solve = |target: Elem| {
        ring.unit_group().iter().find(|&&alpha| ring.norm(sigma, alpha, m) == target).map(|&alpha| IsometryWitness {
            tau: Automorphism::IDENTITY,
            alpha,
            k: 1,
        })
    };
    let cyclic_witness = solve(a);
    let negacyclic_witness = solve(ring.neg(a));
    Ok(SpecialClassReport {
        equivalent_to_cyclic: cyclic_witness.is_some(),
        cyclic_witness,
        equivalent_to_negacyclic: negacyclic_witness.is_some(),
        negacyclic_witness,
    })
}
