//! Skew `(f, sigma, delta)`-polycyclic codes: principal left ideals of a
//! Petit algebra, read as linear codes of length `m = deg f`.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{self, IsometryWitness};
use crate::coeffring::Elem;
use crate::error::{check_cap, Error, Result};
use crate::matrix::Matrix;
use crate::petit::PetitAlgebra;
use crate::skewpoly::SkewPoly;

/// Default bound on the number of codewords enumerated by a single scan.
pub const DEFAULT_CODEWORD_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CodeParams {
    pub length: usize,
    pub dim: usize,
    pub min_dist: usize,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    algebra: Arc<PetitAlgebra>,
    generator: Option<SkewPoly>,
    gen_matrix: Matrix,
}

impl LinearCode {
    /// The code generated by a monic right divisor `g` of `f`; row `i` of the
    /// generator matrix is `t^i ∘ g`.
    pub fn build(algebra: Arc<PetitAlgebra>, g: &SkewPoly) -> Result<Self> {
        let m = algebra.m();
        let rows = algebra
            .left_ideal_span(g)?
            .into_iter()
            .map(|r| {
                let mut v = r.coeffs().to_vec();
                v.resize(m, algebra.ring().zero());
                v
            })
            .collect();
        Ok(LinearCode { gen_matrix: Matrix::from_rows(rows, m), generator: Some(g.clone()), algebra })
    }

    /// The left `S`-span of arbitrary rows of length `m`, which need not be an
    /// ideal. Rows are assumed independent.
    pub fn from_rows(algebra: Arc<PetitAlgebra>, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let m = algebra.m();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidConfig(format!("code rows must have length {m}")));
        }
        Ok(LinearCode { gen_matrix: Matrix::from_rows(rows, m), generator: None, algebra })
    }

    pub fn algebra(&self) -> &Arc<PetitAlgebra> {
        &self.algebra
    }

    pub fn generator(&self) -> Option<&SkewPoly> {
        self.generator.as_ref()
    }

    pub fn gen_matrix(&self) -> &Matrix {
        &self.gen_matrix
    }

    pub fn length(&self) -> usize {
        self.algebra.m()
    }

    pub fn dimension(&self) -> usize {
        self.gen_matrix.rows()
    }

    fn codeword_count(&self) -> u128 {
        (self.algebra.ring().size() as u128).saturating_pow(self.dimension() as u32)
    }

    /// The codeword with message index `idx` (message digits little-endian).
    fn codeword(&self, mut idx: u64) -> Vec<Elem> {
        let k = self.algebra.ring();
        let q = k.size() as u64;
        let mut c = vec![k.zero(); self.length()];
        for row in self.gen_matrix.iter_rows() {
            let s = Elem::from_code((idx % q) as u32);
            idx /= q;
            if s.is_zero() {
                continue;
            }
            for (cj, &rj) in c.iter_mut().zip(row) {
                *cj = k.add(*cj, k.mul(s, rj));
            }
        }
        c
    }

    /// All codewords, as coefficient vectors of length `m`.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<Elem>>> {
        let n = self.codeword_count();
        check_cap(n, cap)?;
        Ok((0..n as u64).into_par_iter().map(|i| self.codeword(i)).collect())
    }

    /// Whether the code is closed under the shift
    /// `c -> (0, sigma(c_0), ..., sigma(c_(m-2))) + sigma(c_(m-1)) a + delta(c)`.
    pub fn shift_closure_check(&self, cap: u64) -> Result<bool> {
        let words = self.codewords(cap)?;
        let members: HashSet<&Vec<Elem>> = words.iter().collect();
        let tw = self.algebra.twist();
        let k = self.algebra.ring();
        let a = self.algebra.f().a_coeffs()?;
        let m = self.length();
        Ok(words.par_iter().all(|c| {
            let top = tw.sigma_of(c[m - 1]);
            let shifted: Vec<Elem> = (0..m)
                .map(|i| {
                    let moved = if i == 0 { k.zero() } else { tw.sigma_of(c[i - 1]) };
                    k.add(k.add(moved, k.mul(top, a[i])), tw.delta_of(c[i]))
                })
                .collect();
            members.contains(&shifted)
        }))
    }

    pub fn min_hamming_distance(&self) -> Result<usize> {
        self.min_hamming_distance_with_cap(DEFAULT_CODEWORD_CAP)
    }

    pub fn min_hamming_distance_with_cap(&self, cap: u64) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        let n = self.codeword_count();
        check_cap(n, cap)?;
        (1..n as u64)
            .into_par_iter()
            .map(|i| self.codeword(i).iter().filter(|c| !c.is_zero()).count())
            .filter(|&w| w > 0)
            .min()
            .ok_or(Error::ZeroCode)
    }

    pub fn params(&self, cap: u64) -> Result<CodeParams> {
        Ok(CodeParams {
            length: self.length(),
            dim: self.dimension(),
            min_dist: self.min_hamming_distance_with_cap(cap)?,
        })
    }

    /// Monic `h` with `f = g h` and `f = h' g`, when both factorisations
    /// exist. A word `c` is then a codeword iff `c h = 0` in `S_f`.
    pub fn parity_check(&self) -> Option<SkewPoly> {
        let g = self.generator.as_ref()?;
        let f = self.algebra.f();
        let (h, rem_left) = f.left_divide(g).ok()?;
        let (_, rem_right) = f.right_divide(g).ok()?;
        (rem_left.is_zero() && rem_right.is_zero() && h.is_monic()).then_some(h)
    }

    /// Image of the code under an equivalence `S_f -> S_h` certified by
    /// `witness`, as a code of the target class.
    pub fn apply_isometry(&self, witness: &IsometryWitness, target: &CodeClass) -> Result<LinearCode> {
        let g = self.generator.as_ref().ok_or(Error::WitnessInvalid)?;
        if witness.k != 1 || !classify::check_equivalence(self.algebra.f(), target.f(), witness.tau, witness.alpha)? {
            return Err(Error::WitnessInvalid);
        }
        let image = classify::monic_image(g, target.algebra().twist(), witness)?;
        LinearCode::build(target.algebra().clone(), &image)
    }

    pub fn mindist_json(&self, cap: u64) -> Result<Value> {
        Ok(json!({
            "length": self.length(),
            "dim": self.dimension(),
            "min_dist": self.min_hamming_distance_with_cap(cap)?,
            "gen_matrix": self.gen_matrix.to_json(self.algebra.ring()),
        }))
    }
}

/// Whether `c h` vanishes in `S_f` (`h` may have degree `m`).
pub fn annihilates(algebra: &PetitAlgebra, c: &[Elem], h: &SkewPoly) -> bool {
    let prod = algebra.twist().mul_raw(c, h.coeffs());
    algebra.reduce_vec(prod).iter().all(|x| x.is_zero())
}

/// The family of all codes coming from monic right divisors of one `f`.
#[derive(Clone, Debug)]
pub struct CodeClass {
    algebra: Arc<PetitAlgebra>,
    codes: Vec<LinearCode>,
}

impl CodeClass {
    /// One code per monic right divisor `g` of `f` with `deg g < m`, ordered
    /// by degree and then coefficients.
    pub fn new(f: SkewPoly, cap: u64) -> Result<Self> {
        let algebra = Arc::new(PetitAlgebra::new(f)?);
        let m = algebra.m();
        let mut codes = Vec::new();
        for d in 0..m {
            for g in algebra.f().enumerate_monic_right_divisors(d, cap)? {
                codes.push(LinearCode::build(algebra.clone(), &g)?);
            }
        }
        Ok(CodeClass { algebra, codes })
    }

    pub fn f(&self) -> &SkewPoly {
        self.algebra.f()
    }

    pub fn algebra(&self) -> &Arc<PetitAlgebra> {
        &self.algebra
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }
}
