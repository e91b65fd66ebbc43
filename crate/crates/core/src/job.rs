//! Job configuration and the textual encodings used on the command line.
//!
//! Rings: `p,r` or `p,r,<modulus>` where the modulus is given either as
//! `r + 1` further comma-separated coefficients or as one colon-separated
//! token (`2,2,1:1:1`), little-endian. Elements: an integer code, or
//! little-endian digits joined by colons (`0:1` is `x` in `GF(p^2)`).
//! Polynomials: comma-separated elements `c_0, ..., c_(m-1)`; the leading
//! coefficient 1 of `t^m` is implicit.

use std::path::PathBuf;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::coeffring::{Elem, RingContext, DEFAULT_MAX_RING_SIZE};
use crate::error::{Error, Result};
use crate::skewpoly::{SkewPoly, TwistContext};

pub const DEFAULT_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Field { p: u32, r: u32, modulus: Option<Vec<u32>> },
    Residue { n: u32 },
}

impl RingSpec {
    /// Parses the `--field` argument.
    pub fn parse_field(text: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("cannot parse field spec {text:?}; expected p,r[,modulus]"));
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() < 2 {
            return Err(bad());
        }
        let p: u32 = parts[0].parse().map_err(|_| bad())?;
        let r: u32 = parts[1].parse().map_err(|_| bad())?;
        let modulus = match &parts[2..] {
            [] => None,
            [single] if single.contains(':') => Some(parse_digits(single).ok_or_else(bad)?),
            rest => Some(rest.iter().map(|c| c.parse().map_err(|_| bad())).collect::<Result<Vec<u32>>>()?),
        };
        Ok(RingSpec::Field { p, r, modulus })
    }

    pub fn build(&self) -> Result<Arc<RingContext>> {
        Ok(Arc::new(match self {
            RingSpec::Field { p, r, modulus } => {
                RingContext::finite_field_with_cap(*p, *r, modulus.as_deref(), DEFAULT_MAX_RING_SIZE)?
            }
            RingSpec::Residue { n } => RingContext::residue_ring(*n)?,
        }))
    }
}

/// Header description of a ring for JSON output.
pub fn ring_json(ring: &RingContext) -> Value {
    match ring.field_spec() {
        Some(spec) => json!({ "p": spec.p, "r": spec.r, "modulus": spec.modulus }),
        None => json!({ "n": ring.characteristic() }),
    }
}

fn parse_digits(text: &str) -> Option<Vec<u32>> {
    text.split(':').map(|d| d.trim().parse().ok()).collect()
}

pub fn parse_element(ring: &RingContext, text: &str) -> Result<Elem> {
    let text = text.trim();
    if text.contains(':') {
        let digits = parse_digits(text).ok_or_else(|| Error::InvalidConfig(format!("bad element {text:?}")))?;
        ring.from_digits(&digits)
    } else {
        let code: u64 = text.parse().map_err(|_| Error::InvalidConfig(format!("bad element {text:?}")))?;
        ring.element(code)
    }
}

pub fn parse_elements(ring: &RingContext, text: &str) -> Result<Vec<Elem>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse_element(ring, t)).collect()
}

/// A monic polynomial from its lower coefficients.
pub fn parse_monic(tw: &Arc<TwistContext>, text: &str) -> Result<SkewPoly> {
    Ok(tw.monic_from_tail(&parse_elements(tw.ring(), text)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    AlgebraInfo,
    MinDist,
    CheckEquiv,
    CountClasses,
    Catalogue,
    Verify,
}

/// Everything a single run needs. Caps are checked before any enumeration.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub mode: Mode,
    pub ring: RingSpec,
    pub sigma_exp: u32,
    pub m: Option<usize>,
    pub cap: u64,
    pub out: Option<PathBuf>,
}

impl JobConfig {
    pub fn new(mode: Mode, ring: RingSpec) -> Self {
        JobConfig { mode, ring, sigma_exp: 0, m: None, cap: DEFAULT_CAP, out: None }
    }

    pub fn twist(&self) -> Result<Arc<TwistContext>> {
        TwistContext::with_sigma(self.ring.build()?, self.sigma_exp)
    }

    pub fn require_m(&self) -> Result<usize> {
        self.m.ok_or_else(|| Error::InvalidConfig("--m is required for this command".into()))
    }
}
