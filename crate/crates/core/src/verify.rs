//! Built-in cross-check suites over ranges of small parameters.
//!
//! Each suite runs over every `(field, sigma, m)` in a [`VerifyPlan`] whose
//! enumeration fits under the plan's cap; larger tuples are counted as
//! skipped. Mismatches are collected as report entries, never raised.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::classify::{
    closed_form_counts, count_constacyclic_classes, fast_reject, find_equivalence, monic_image, verify_monomial_map,
};
use crate::codes::{CodeClass, CodeParams};
use crate::coeffring::{Elem, RingContext};
use crate::error::Result;
use crate::petit::PetitAlgebra;
use crate::skewpoly::{SkewPoly, TwistContext};

pub type CountFormula = fn(u32, u32, u32, usize) -> (u64, u64);

#[derive(Clone, Debug)]
pub struct VerifyPlan {
    /// `(p, r)` pairs.
    pub fields: Vec<(u32, u32)>,
    pub m_values: Vec<usize>,
    /// Largest enumeration a single tuple may need.
    pub cap: u64,
    /// Closed form checked by the counting suite.
    pub count_formula: CountFormula,
}

impl Default for VerifyPlan {
    fn default() -> Self {
        VerifyPlan {
            fields: vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)],
            m_values: (2..=6).collect(),
            cap: 1 << 12,
            count_formula: closed_form_counts,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("plain struct");
        v["success"] = Value::Bool(self.success());
        v
    }
}

struct Tuple {
    tw: Arc<TwistContext>,
    m: usize,
    label: String,
}

fn tuples(plan: &VerifyPlan) -> Result<Vec<Tuple>> {
    let mut out = Vec::new();
    for &(p, r) in &plan.fields {
        let ring = Arc::new(RingContext::finite_field(p, r, None)?);
        for s in 0..r {
            let tw = TwistContext::with_sigma(ring.clone(), s)?;
            for &m in &plan.m_values {
                out.push(Tuple { tw: tw.clone(), m, label: format!("GF({p}^{r}) s={s} m={m}") });
            }
        }
    }
    Ok(out)
}

fn constacyclic(tw: &Arc<TwistContext>, m: usize, a: Elem) -> SkewPoly {
    let ring = tw.ring();
    let mut tail = vec![ring.zero(); m];
    tail[0] = a;
    tw.monic_from_a(&tail)
}

fn fits(q: u32, exp: usize, cap: u64) -> bool {
    (q as u128).checked_pow(exp as u32).is_some_and(|n| n <= cap as u128)
}

/// `S_(t^m - d)` is associative iff `d` is fixed by sigma and `ord(sigma) | m`.
fn associativity_suite(plan: &VerifyPlan, ts: &[Tuple]) -> Result<SuiteResult> {
    let mut res = SuiteResult { name: "associativity criterion".into(), ..Default::default() };
    for t in ts {
        let ring = t.tw.ring();
        if !fits(ring.size(), t.m, plan.cap) {
            res.skipped += 1;
            continue;
        }
        let n = t.tw.sigma_order() as usize;
        for &d in ring.unit_group() {
            let alg = PetitAlgebra::new(constacyclic(&t.tw, t.m, d))?;
            let predicate = ring.is_fixed(t.tw.sigma(), d) && t.m % n == 0;
            let assoc = alg.is_associative();
            if assoc != predicate || assoc != alg.f_two_sided() {
                res.failures.push(format!("{} d={}: associative={assoc}, predicate={predicate}", t.label, d.code()));
            }
            res.checked += 1;
        }
    }
    Ok(res)
}

fn counting_suite(plan: &VerifyPlan, ts: &[Tuple]) -> Result<SuiteResult> {
    let mut res = SuiteResult { name: "counting formulas".into(), ..Default::default() };
    for t in ts {
        let ring = t.tw.ring();
        let spec = ring.field_spec().expect("plans use fields");
        let counts = count_constacyclic_classes(ring, t.tw.sigma(), t.m, plan.cap.max(1 << 16))?;
        let formula = (plan.count_formula)(spec.p, spec.r, t.tw.sigma().frob_exp, t.m);
        if (counts.nonassoc, counts.assoc) != formula {
            res.failures.push(format!(
                "{}: enumeration ({}, {}) vs formula {:?}",
                t.label, counts.nonassoc, counts.assoc, formula
            ));
        }
        res.checked += 1;
    }
    Ok(res)
}

/// Over all pairs of monic polynomials of degree `m`: the filters never
/// reject a pair that has a witness, and every witness defines a
/// multiplicative bijection.
fn filter_and_witness_suites(plan: &VerifyPlan, ts: &[Tuple]) -> Result<(SuiteResult, SuiteResult)> {
    let mut filters = SuiteResult { name: "filter soundness".into(), ..Default::default() };
    let mut witnesses = SuiteResult { name: "witness soundness".into(), ..Default::default() };
    for t in ts {
        let ring = t.tw.ring();
        if !fits(ring.size(), 2 * t.m, plan.cap) {
            filters.skipped += 1;
            witnesses.skipped += 1;
            continue;
        }
        let polys = t.tw.monic_polys(t.m, plan.cap)?;
        let algebras: Vec<PetitAlgebra> = polys.iter().map(|f| PetitAlgebra::new(f.clone())).collect::<Result<_>>()?;
        let outcomes: Vec<(Vec<String>, Vec<String>, u64)> = (0..polys.len())
            .into_par_iter()
            .map(|i| {
                let (mut fail_f, mut fail_w, mut checked_w) = (Vec::new(), Vec::new(), 0);
                for j in 0..polys.len() {
                    let (f, h) = (&polys[i], &polys[j]);
                    let reject = fast_reject(f, h).expect("validated pair");
                    let witness = find_equivalence(f, h, false).expect("validated pair");
                    if let (Some(reason), Some(w)) = (&reject, witness) {
                        fail_f
                            .push(format!("{} {:?} {:?}: rejected ({reason}) despite witness {:?}", t.label, f, h, w));
                    }
                    if let Some(w) = witness {
                        checked_w += 1;
                        if !verify_monomial_map(&algebras[i], &algebras[j], &w, u64::MAX).unwrap_or(false) {
                            fail_w
                                .push(format!("{} {:?} -> {:?}: witness {:?} is not an isomorphism", t.label, f, h, w));
                        }
                    }
                }
                (fail_f, fail_w, checked_w)
            })
            .collect();
        for (ff, fw, cw) in outcomes {
            filters.failures.extend(ff);
            witnesses.failures.extend(fw);
            witnesses.checked += cw;
        }
        filters.checked += (polys.len() * polys.len()) as u64;
    }
    Ok((filters, witnesses))
}

/// For equivalent constacyclic classes, `g -> monic(G(g))` is a bijection
/// of divisors preserving `(length, dim, min_dist)`.
fn preservation_suite(plan: &VerifyPlan, ts: &[Tuple]) -> Result<SuiteResult> {
    let mut res = SuiteResult { name: "parameter preservation".into(), ..Default::default() };
    for t in ts {
        let ring = t.tw.ring();
        if !fits(ring.size(), t.m, plan.cap) {
            res.skipped += 1;
            continue;
        }
        let units = ring.unit_group().to_vec();
        let classes: Vec<(CodeClass, HashMap<Vec<u32>, CodeParams>)> = units
            .par_iter()
            .map(|&a| {
                let class = CodeClass::new(constacyclic(&t.tw, t.m, a), plan.cap)?;
                let params = class
                    .codes()
                    .iter()
                    .map(|c| Ok((key(c.generator().unwrap()), c.params(plan.cap)?)))
                    .collect::<Result<HashMap<_, _>>>()?;
                Ok((class, params))
            })
            .collect::<Result<_>>()?;
        for (i, (src, src_params)) in classes.iter().enumerate() {
            for (j, (dst, dst_params)) in classes.iter().enumerate() {
                let Some(w) = find_equivalence(src.f(), dst.f(), false)? else { continue };
                res.checked += 1;
                let mut images = Vec::new();
                for code in src.codes() {
                    let g = code.generator().unwrap();
                    let image = monic_image(g, dst.algebra().twist(), &w)?;
                    match dst_params.get(&key(&image)) {
                        Some(p) if *p == src_params[&key(g)] => images.push(key(&image)),
                        other => res.failures.push(format!(
                            "{} a={} -> b={}: divisor {:?} maps to {:?} with params {:?}",
                            t.label,
                            units[i].code(),
                            units[j].code(),
                            g,
                            image,
                            other
                        )),
                    }
                }
                images.sort();
                images.dedup();
                if images.len() != dst_params.len() {
                    res.failures.push(format!(
                        "{} a={} -> b={}: divisor map is not a bijection",
                        t.label,
                        units[i].code(),
                        units[j].code()
                    ));
                }
            }
        }
    }
    Ok(res)
}

fn key(f: &SkewPoly) -> Vec<u32> {
    f.coeffs().iter().map(|c| c.code()).collect()
}

pub fn run_verify(plan: &VerifyPlan) -> Result<VerifyReport> {
    let ts = tuples(plan)?;
    let (filters, witnesses) = filter_and_witness_suites(plan, &ts)?;
    Ok(VerifyReport {
        suites: vec![
            associativity_suite(plan, &ts)?,
            counting_suite(plan, &ts)?,
            filters,
            preservation_suite(plan, &ts)?,
            witnesses,
        ],
    })
}
