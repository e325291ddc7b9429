//! Generic `ext`/`hom` between dimension vectors and the generic
//! subdimension relation, computed by Schofield's recursion.
//!
//! For dimension vectors `a`, `b`:
//!
//! ```text
//! ext(a, b) = max { −⟨a′, b⟩ : a′ ↪ a }        (a′ = 0 gives the floor 0)
//! a′ ↪ a    ⇔ a′ ≤ a and ext(a′, a − a′) = 0
//! ```
//!
//! Deciding `a′ ↪ a` only needs the generic subdimensions of `a′`, which is
//! strictly below `a` whenever the test is non-trivial. The table therefore
//! memoizes, per dimension vector, the full list of its generic
//! subdimensions; `ext` values requested through the public API are cached
//! separately.

use std::borrow::Borrow;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::quiver::{dot, DimVector, Quiver, Weight};

impl Borrow<[u32]> for DimVector {
    fn borrow(&self) -> &[u32] {
        self.as_slice()
    }
}

/// Generic subdimensions of one dimension vector, stored flat in mixed-radix
/// order.
#[derive(Debug)]
struct SubdimList {
    width: usize,
    flat: Vec<u32>,
}

impl SubdimList {
    fn len(&self) -> usize {
        self.flat.len().checked_div(self.width).unwrap_or(1)
    }

    fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        let width = self.width;
        let n = self.len();
        (0..n).map(move |i| &self.flat[i * width..(i + 1) * width])
    }
}

/// Memoized generic homological data for one quiver.
///
/// Lookups and insertions go through read/write locks and every cached
/// value is a pure function of its key, so one table can be shared by
/// worker threads.
#[derive(Debug)]
pub struct ExtTable {
    quiver: Quiver,
    subdims: RwLock<HashMap<DimVector, Arc<SubdimList>>>,
    ext: RwLock<HashMap<(DimVector, DimVector), u64>>,
}

impl ExtTable {
    pub fn new(quiver: &Quiver) -> ExtTable {
        ExtTable {
            quiver: quiver.clone(),
            subdims: RwLock::new(HashMap::new()),
            ext: RwLock::new(HashMap::new()),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Number of dimension vectors whose subdimension list is memoized.
    pub fn memoized_dims(&self) -> usize {
        self.subdims.read().expect("lock").len()
    }

    /// Generic `ext(a, b)`.
    pub fn ext_generic(&self, a: &DimVector, b: &DimVector) -> Result<u64> {
        self.quiver.check_dim(a)?;
        self.quiver.check_dim(b)?;
        if a.is_zero() || b.is_zero() {
            return Ok(0);
        }
        let key = (a.clone(), b.clone());
        if let Some(&v) = self.ext.read().expect("lock").get(&key) {
            return Ok(v);
        }
        let w = self.quiver.right_pairing(b)?;
        let subs = self.subdim_list(a.as_slice())?;
        let mut best = 0i64;
        for s in subs.iter() {
            best = best.max(dot(w.as_slice(), s)?.checked_neg().ok_or(Error::Overflow)?);
        }
        let v = best as u64;
        self.ext.write().expect("lock").entry(key).or_insert(v);
        Ok(v)
    }

    /// Generic `hom(a, b) = ⟨a, b⟩ + ext(a, b)`.
    pub fn hom_generic(&self, a: &DimVector, b: &DimVector) -> Result<u64> {
        let ext = self.ext_generic(a, b)?;
        let e = self.quiver.euler_form(a, b)?;
        let hom = e
            .checked_add(i64::try_from(ext).map_err(|_| Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        // a itself is a generic subdimension of a, so ext ≥ −⟨a,b⟩
        Ok(u64::try_from(hom).expect("generic hom is nonnegative"))
    }

    /// `b ↪ a`: a general representation of dimension `a` has a
    /// subrepresentation of dimension `b`.
    pub fn is_generic_subdim(&self, b: &DimVector, a: &DimVector) -> Result<bool> {
        self.quiver.check_dim(a)?;
        self.quiver.check_dim(b)?;
        match a.checked_sub(b) {
            None => Ok(false),
            Some(rest) => self.ext_vanishes(b.as_slice(), rest.as_slice()),
        }
    }

    /// All `b ↪ a`, in mixed-radix lexicographic order over the vertices.
    pub fn enumerate_generic_subdims(&self, a: &DimVector) -> Result<Vec<DimVector>> {
        self.quiver.check_dim(a)?;
        let subs = self.subdim_list(a.as_slice())?;
        Ok(subs.iter().map(|s| DimVector::new(s.to_vec())).collect())
    }

    /// Number of generic subdimensions of `a`, counting `0` and `a`.
    pub fn count_generic_subdims(&self, a: &DimVector) -> Result<usize> {
        self.quiver.check_dim(a)?;
        Ok(self.subdim_list(a.as_slice())?.len())
    }

    /// `disc(a, σ) = max { σ(b) : b ↪ a }`.
    pub fn disc(&self, a: &DimVector, s: &Weight) -> Result<i64> {
        self.disc_witness(a, s).map(|(v, _)| v)
    }

    /// Discrepancy together with the first generic subdimension attaining it.
    pub fn disc_witness(&self, a: &DimVector, s: &Weight) -> Result<(i64, DimVector)> {
        self.quiver.check_dim(a)?;
        self.quiver.check_weight(s)?;
        let subs = self.subdim_list(a.as_slice())?;
        let mut best: Option<(i64, &[u32])> = None;
        for b in subs.iter() {
            let v = dot(s.as_slice(), b)?;
            if best.is_none_or(|(m, _)| v > m) {
                best = Some((v, b));
            }
        }
        let (v, b) = best.expect("0 is always a generic subdimension");
        Ok((v, DimVector::new(b.to_vec())))
    }

    /// `a ∘ b ≠ 0`, decided as `⟨a,b⟩ = 0` and `ext(a,b) = 0` (which forces
    /// `hom(a,b) = 0`).
    pub fn circ_nonzero(&self, a: &DimVector, b: &DimVector) -> Result<bool> {
        if self.quiver.euler_form(a, b)? != 0 {
            return Ok(false);
        }
        self.ext_vanishes(a.as_slice(), b.as_slice())
    }

    /// Necessary condition for `parts` to be a generic filtration dimension:
    /// `Σ_{i<j} ⟨parts_i, parts_j⟩ ≥ 0`.
    pub fn filtration_necessary(&self, parts: &[DimVector]) -> Result<bool> {
        Ok(self.quiver.filtration_defect(parts)? >= 0)
    }

    /// `ext(a, b) = 0` without computing the full maximum.
    pub(crate) fn ext_vanishes(&self, a: &[u32], b: &[u32]) -> Result<bool> {
        let mut w = vec![0i64; a.len()];
        self.ext_vanishes_with(a, b, &mut w)
    }

    fn ext_vanishes_with(&self, a: &[u32], b: &[u32], w: &mut [i64]) -> Result<bool> {
        if a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        // w = ⟨·, b⟩
        for (wi, &bi) in w.iter_mut().zip(b) {
            *wi = i64::from(bi);
        }
        for arr in self.quiver.arrows() {
            w[arr.tail] = w[arr.tail]
                .checked_sub(i64::from(b[arr.head]))
                .ok_or(Error::Overflow)?;
        }
        if dot(w, a)? < 0 {
            return Ok(false);
        }
        let subs = self.subdim_list(a)?;
        for s in subs.iter() {
            if dot(w, s)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn subdim_list(&self, a: &[u32]) -> Result<Arc<SubdimList>> {
        if let Some(list) = self.subdims.read().expect("lock").get(a) {
            return Ok(Arc::clone(list));
        }
        let n = a.len();
        let mut flat = Vec::new();
        let mut cur = vec![0u32; n];
        let mut rest = a.to_vec();
        let mut w = vec![0i64; n];
        loop {
            if self.ext_vanishes_with(&cur, &rest, &mut w)? {
                flat.extend_from_slice(&cur);
            }
            // mixed-radix increment, last vertex fastest
            let mut i = n;
            loop {
                if i == 0 {
                    let list = Arc::new(SubdimList { width: n, flat });
                    let mut map = self.subdims.write().expect("lock");
                    let entry = map
                        .entry(DimVector::new(a.to_vec()))
                        .or_insert_with(|| Arc::clone(&list));
                    return Ok(Arc::clone(entry));
                }
                i -= 1;
                if cur[i] < a[i] {
                    cur[i] += 1;
                    rest[i] -= 1;
                    break;
                }
                cur[i] = 0;
                rest[i] = a[i];
            }
        }
    }
}

/// Free-function form of [`ExtTable::ext_generic`].
pub fn ext_generic(t: &ExtTable, a: &DimVector, b: &DimVector) -> Result<u64> {
    t.ext_generic(a, b)
}

/// Free-function form of [`ExtTable::hom_generic`].
pub fn hom_generic(t: &ExtTable, a: &DimVector, b: &DimVector) -> Result<u64> {
    t.hom_generic(a, b)
}
