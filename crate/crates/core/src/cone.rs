//! Membership tests for the cone `Σ(Q, α)` of weights carrying nonzero
//! semi-invariants, and the inequality systems behind them.
//!
//! Three equivalent characterizations are implemented. Each requires
//! `σ(α) = 0` and `σ(β) ≤ 0` for every `β` in a finite set:
//!
//! * [`Method::Dw`]: all generic subdimensions `β ↪ α`;
//! * [`Method::Inductive`]: all `β ≤ α` with `β ∘ (α−β) ≠ 0`;
//! * [`Method::AntiInv`]: for `α = τα` and anti-symmetric `σ`, the `β` of
//!   every pair `(β, γ)` with `α = β + γ + τβ`, `β ∘ γ ≠ 0` and `β ∘ τβ ≠ 0`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Involution, OrbitBasis, Weight};
use crate::schofield::ExtTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Dw,
    Inductive,
    AntiInv,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "dw" => Ok(Method::Dw),
            "inductive" => Ok(Method::Inductive),
            "antiinv" => Ok(Method::AntiInv),
            other => Err(Error::BadParameter(format!("unknown method `{other}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Dw => "dw",
            Method::Inductive => "inductive",
            Method::AntiInv => "antiinv",
        })
    }
}

/// Why a weight is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `σ(α) ≠ 0`.
    Equality { value: i64 },
    /// `σ(β) > 0` for a `β` of the inequality system.
    Inequality { beta: DimVector, value: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NotMember(Violation),
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member)
    }
}

/// An element of the set II⁰: `α = β + γ + τβ` with `β ∘ γ ≠ 0` and
/// `β ∘ τβ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoPair {
    pub beta: DimVector,
    pub gamma: DimVector,
}

/// `σ(α) = 0` together with `σ(β) ≤ 0` for every normal `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub alpha: DimVector,
    pub method: Method,
    pub normals: Vec<DimVector>,
    /// Present for anti-invariant systems: the coordinates used to restrict
    /// each normal to the lattice of anti-symmetric weights.
    pub coordinate_space: Option<OrbitBasis>,
    /// `restricted[i]` is the coefficient vector of `normals[i]` in
    /// `coordinate_space`.
    pub restricted: Vec<Vec<i64>>,
}

impl InequalitySystem {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    /// Keeps the first normal of each distinct restricted halfspace, i.e. of
    /// each distinct primitive coefficient vector. Unrestricted systems are
    /// left unchanged.
    pub fn dedup_restricted(&mut self) {
        if self.coordinate_space.is_none() {
            return;
        }
        let mut seen = std::collections::HashSet::new();
        let keep: Vec<bool> = self
            .restricted
            .iter()
            .map(|c| seen.insert(primitive(c)))
            .collect();
        self.retain_rows(&keep);
    }

    fn retain_rows(&mut self, keep: &[bool]) {
        let mut k = keep.iter();
        self.normals.retain(|_| *k.next().unwrap());
        if !self.restricted.is_empty() {
            let mut k = keep.iter();
            self.restricted.retain(|_| *k.next().unwrap());
        }
    }

    /// Drops zero rows (zero restricted coefficients when restricted).
    pub fn drop_zero_rows(&mut self) {
        let keep: Vec<bool> = if self.coordinate_space.is_none() {
            self.normals.iter().map(|b| !b.is_zero()).collect()
        } else {
            self.restricted
                .iter()
                .map(|c| c.iter().any(|&x| x != 0))
                .collect()
        };
        self.retain_rows(&keep);
    }

    /// Restricted coefficient rows divided by their gcd.
    pub fn primitive_rows(&self) -> Vec<Vec<i64>> {
        self.restricted.iter().map(|c| primitive(c)).collect()
    }

    /// Primitive restricted rows, sorted lexicographically.
    pub fn sorted_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = self.primitive_rows();
        rows.sort();
        rows
    }
}

/// `c / gcd(c)`; the zero vector is returned unchanged.
pub fn primitive(c: &[i64]) -> Vec<i64> {
    let g = c.iter().fold(0u64, |g, &x| gcd(g, x.unsigned_abs()));
    if g <= 1 {
        return c.to_vec();
    }
    c.iter().map(|&x| x / g as i64).collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Counts of the three inequality systems for one dimension vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub n1: usize,
    pub n2: usize,
    /// One entry per requested involution.
    pub n3: Vec<usize>,
}

/// Every `β ≤ α` with `β ∘ (α−β) ≠ 0`, in mixed-radix order.
pub fn inductive_normals(t: &ExtTable, alpha: &DimVector) -> Result<Vec<DimVector>> {
    let q = t.quiver();
    let subs = t.enumerate_generic_subdims(alpha)?;
    let mut out = Vec::new();
    for b in subs {
        let rest = alpha.checked_sub(&b).expect("subdimension is below alpha");
        // b ↪ α already gives ext(b, α−b) = 0
        if q.euler_form(&b, &rest)? == 0 {
            out.push(b);
        }
    }
    Ok(out)
}

/// The set II⁰(Q, α, τ), ordered lexicographically in `β`. Always contains
/// `(0, α)`.
pub fn enumerate_i0(t: &ExtTable, alpha: &DimVector, inv: &Involution) -> Result<Vec<IsoPair>> {
    t.quiver().check_dim(alpha)?;
    if !inv.is_symmetric(alpha) {
        return Err(Error::NotSymmetricDimension);
    }
    let q = t.quiver();
    let n = q.vertex_count();
    // β + τβ ≤ α bounds β(x) by min(α(x), α(x) − β(τx)); search the box
    // β(x) ≤ α(x) / (1 or 2) and filter.
    let bound = DimVector::new(
        (0..n)
            .map(|x| {
                if inv.vertex_map()[x] == x {
                    alpha[x] / 2
                } else {
                    alpha[x]
                }
            })
            .collect(),
    );
    let candidates: Vec<DimVector> = bound.sub_box().collect();
    let results: Vec<Option<IsoPair>> = candidates
        .into_par_iter()
        .map(|beta| -> Result<Option<IsoPair>> {
            let tb = inv.tau_dim(&beta);
            let Some(gamma) = alpha.checked_sub(&beta).and_then(|r| r.checked_sub(&tb)) else {
                return Ok(None);
            };
            if q.euler_form(&beta, &gamma)? != 0 || q.euler_form(&beta, &tb)? != 0 {
                return Ok(None);
            }
            if t.ext_vanishes(beta.as_slice(), gamma.as_slice())?
                && t.ext_vanishes(beta.as_slice(), tb.as_slice())?
            {
                Ok(Some(IsoPair { beta, gamma }))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(results.into_iter().flatten().collect())
}

fn check_zero_sum(s: &Weight, alpha: &DimVector) -> Result<Option<Verdict>> {
    let v = s.eval(alpha)?;
    Ok((v != 0).then_some(Verdict::NotMember(Violation::Equality { value: v })))
}

fn first_violation<'a>(
    s: &Weight,
    normals: impl IntoIterator<Item = &'a DimVector>,
) -> Result<Verdict> {
    for b in normals {
        let v = s.eval(b)?;
        if v > 0 {
            return Ok(Verdict::NotMember(Violation::Inequality {
                beta: b.clone(),
                value: v,
            }));
        }
    }
    Ok(Verdict::Member)
}

/// Membership by the generic-subdimension characterization.
pub fn member_dw(t: &ExtTable, s: &Weight, alpha: &DimVector) -> Result<Verdict> {
    t.quiver().check_weight(s)?;
    t.quiver().check_dim(alpha)?;
    if let Some(v) = check_zero_sum(s, alpha)? {
        return Ok(v);
    }
    let (disc, witness) = t.disc_witness(alpha, s)?;
    if disc > 0 {
        return Ok(Verdict::NotMember(Violation::Inequality {
            beta: witness,
            value: disc,
        }));
    }
    Ok(Verdict::Member)
}

/// Membership by the inductive characterization (`β ∘ (α−β) ≠ 0`).
pub fn member_inductive(t: &ExtTable, s: &Weight, alpha: &DimVector) -> Result<Verdict> {
    t.quiver().check_weight(s)?;
    t.quiver().check_dim(alpha)?;
    if let Some(v) = check_zero_sum(s, alpha)? {
        return Ok(v);
    }
    first_violation(s, &inductive_normals(t, alpha)?)
}

/// Membership of an anti-symmetric weight for a symmetric dimension vector,
/// using only the pairs of II⁰.
pub fn member_antiinv(
    t: &ExtTable,
    s: &Weight,
    alpha: &DimVector,
    inv: &Involution,
) -> Result<Verdict> {
    t.quiver().check_weight(s)?;
    t.quiver().check_dim(alpha)?;
    if !inv.is_symmetric(alpha) {
        return Err(Error::NotSymmetricDimension);
    }
    if !inv.is_antisymmetric(s) {
        return Err(Error::NotAntiSymmetric);
    }
    debug_assert_eq!(s.eval(alpha)?, 0);
    let pairs = enumerate_i0(t, alpha, inv)?;
    first_violation(s, pairs.iter().map(|p| &p.beta))
}

/// Dispatches to the membership test for `method`.
pub fn member(
    t: &ExtTable,
    s: &Weight,
    alpha: &DimVector,
    method: Method,
    inv: Option<&Involution>,
) -> Result<Verdict> {
    match method {
        Method::Dw => member_dw(t, s, alpha),
        Method::Inductive => member_inductive(t, s, alpha),
        Method::AntiInv => {
            let inv = inv.ok_or_else(|| {
                Error::BadParameter("antiinv method requires an involution".into())
            })?;
            member_antiinv(t, s, alpha, inv)
        }
    }
}

/// Builds the inequality system of `method`. For [`Method::AntiInv`], `basis`
/// fixes the coordinates (default representatives when `None`).
pub fn inequalities(
    t: &ExtTable,
    alpha: &DimVector,
    method: Method,
    inv: Option<&Involution>,
    basis: Option<OrbitBasis>,
) -> Result<InequalitySystem> {
    t.quiver().check_dim(alpha)?;
    let (normals, coordinate_space) = match method {
        Method::Dw => (t.enumerate_generic_subdims(alpha)?, None),
        Method::Inductive => (inductive_normals(t, alpha)?, None),
        Method::AntiInv => {
            let inv = inv.ok_or_else(|| {
                Error::BadParameter("antiinv method requires an involution".into())
            })?;
            let pairs = enumerate_i0(t, alpha, inv)?;
            for p in &pairs {
                let total = p.beta.checked_add(&inv.tau_dim(&p.beta))?;
                debug_assert!(total.le(alpha));
            }
            let basis = basis.unwrap_or_else(|| OrbitBasis::new(t.quiver(), inv));
            (pairs.into_iter().map(|p| p.beta).collect(), Some(basis))
        }
    };
    let restricted = match &coordinate_space {
        Some(basis) => normals
            .iter()
            .map(|b| basis.restrict(b))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(InequalitySystem {
        alpha: alpha.clone(),
        method,
        normals,
        coordinate_space,
        restricted,
    })
}

/// `n₁`, `n₂` and one `n₃` per involution, trivial members included.
pub fn counts(t: &ExtTable, alpha: &DimVector, invs: &[&Involution]) -> Result<Counts> {
    t.quiver().check_dim(alpha)?;
    let n1 = t.count_generic_subdims(alpha)?;
    let n2 = inductive_normals(t, alpha)?.len();
    let n3 = invs
        .iter()
        .map(|inv| enumerate_i0(t, alpha, inv).map(|p| p.len()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Counts { n1, n2, n3 })
}
