//! Deduplicated catalogues of code classes for fixed `(S, sigma, m)`.
//!
//! Output is JSON lines: a header, then one line per full equivalence class
//! listing its canonical representative (smallest coefficient vector), all
//! members, the Chen classes it splits into, and the parameters of every
//! code of the representative.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classify::equivalence_class_of;
use crate::codes::{CodeClass, CodeParams};
use crate::error::{check_cap, Error, Result};
use crate::job::ring_json;
use crate::skewpoly::{SkewPoly, TwistContext};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogueMode {
    /// Every monic `f` of degree `m`.
    All,
    /// `t^m - a` for units `a`.
    Constacyclic,
}

impl CatalogueMode {
    fn name(self) -> &'static str {
        match self {
            CatalogueMode::All => "all",
            CatalogueMode::Constacyclic => "constacyclic",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CodeEntry {
    pub generator: SkewPoly,
    pub params: CodeParams,
}

#[derive(Clone, Debug)]
pub struct CatalogueClass {
    pub representative: SkewPoly,
    pub members: Vec<SkewPoly>,
    pub chen_classes: Vec<Vec<SkewPoly>>,
    pub codes: Vec<CodeEntry>,
}

#[derive(Clone, Debug)]
pub struct Catalogue {
    pub twist: Arc<TwistContext>,
    pub m: usize,
    pub mode: CatalogueMode,
    pub classes: Vec<CatalogueClass>,
}

fn candidates(tw: &Arc<TwistContext>, m: usize, mode: CatalogueMode, cap: u64) -> Result<Vec<SkewPoly>> {
    match mode {
        CatalogueMode::All => tw.monic_polys(m, cap),
        CatalogueMode::Constacyclic => {
            let ring = tw.ring();
            let mut out: Vec<SkewPoly> = ring
                .unit_group()
                .iter()
                .map(|&a| {
                    let mut tail = vec![ring.zero(); m];
                    tail[0] = ring.neg(a);
                    tw.monic_from_tail(&tail)
                })
                .collect();
            out.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
            Ok(out)
        }
    }
}

/// Refuses up front if any enumeration would exceed `cap`: the candidate
/// list, divisor search (`|S|^(m-1)`) and codeword scans (`|S|^m`).
fn check_caps(tw: &TwistContext, m: usize, mode: CatalogueMode, cap: u64) -> Result<()> {
    let q = tw.ring().size() as u128;
    let candidates = match mode {
        CatalogueMode::All => q.saturating_pow(m as u32),
        CatalogueMode::Constacyclic => tw.ring().unit_group().len() as u128,
    };
    check_cap(candidates, cap)?;
    check_cap(q.saturating_pow(m as u32), cap)
}

pub fn build_catalogue(tw: &Arc<TwistContext>, m: usize, mode: CatalogueMode, cap: u64) -> Result<Catalogue> {
    if m < 2 {
        return Err(Error::InvalidConfig(format!("catalogue degree must exceed 1, got {m}")));
    }
    tw.require_delta_zero()?;
    check_caps(tw, m, mode, cap)?;
    let polys = candidates(tw, m, mode, cap)?;
    let mut assigned: HashSet<Vec<u32>> = HashSet::new();
    let key = |f: &SkewPoly| f.coeffs().iter().map(|c| c.code()).collect::<Vec<u32>>();
    let mut partitions = Vec::new();
    for f in &polys {
        if assigned.contains(&key(f)) {
            continue;
        }
        let members = equivalence_class_of(f, false)?;
        for g in &members {
            assigned.insert(key(g));
        }
        let mut chen_seen: HashSet<Vec<u32>> = HashSet::new();
        let mut chen_classes = Vec::new();
        for g in &members {
            if chen_seen.contains(&key(g)) {
                continue;
            }
            let chen = equivalence_class_of(g, true)?;
            for x in &chen {
                chen_seen.insert(key(x));
            }
            chen_classes.push(chen);
        }
        partitions.push((members, chen_classes));
    }
    let classes = partitions
        .into_par_iter()
        .map(|(members, chen_classes)| {
            let representative = members[0].clone();
            let class = CodeClass::new(representative.clone(), cap)?;
            let codes = class
                .codes()
                .iter()
                .map(|code| {
                    Ok(CodeEntry {
                        generator: code.generator().expect("built from a divisor").clone(),
                        params: code.params(cap)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CatalogueClass { representative, members, chen_classes, codes })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalogue { twist: tw.clone(), m, mode, classes })
}

fn coeffs_json(f: &SkewPoly) -> Value {
    let ring = f.ring();
    Value::Array(f.coeffs().iter().map(|&c| ring.element_to_json(c)).collect())
}

impl Catalogue {
    pub fn chen_class_count(&self) -> usize {
        self.classes.iter().map(|c| c.chen_classes.len()).sum()
    }

    pub fn header_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "header",
            "ring": ring_json(self.twist.ring()),
            "sigma_exp": self.twist.sigma().frob_exp,
            "m": self.m,
            "mode": self.mode.name(),
            "classes": self.classes.len(),
            "chen_classes": self.chen_class_count(),
        })
    }

    pub fn class_json(&self, index: usize) -> Value {
        let c = &self.classes[index];
        json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "class",
            "index": index,
            "representative": c.representative.to_json(),
            "members": c.members.iter().map(coeffs_json).collect::<Vec<_>>(),
            "chen_classes": c.chen_classes.iter()
                .map(|cls| cls.iter().map(coeffs_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "codes": c.codes.iter().map(|e| json!({
                "generator": coeffs_json(&e.generator),
                "length": e.params.length,
                "dim": e.params.dim,
                "min_dist": e.params.min_dist,
            })).collect::<Vec<_>>(),
        })
    }

    /// The whole catalogue as JSON lines, newline terminated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header_json().to_string());
        out.push('\n');
        for i in 0..self.classes.len() {
            out.push_str(&self.class_json(i).to_string());
            out.push('\n');
        }
        out
    }
}
