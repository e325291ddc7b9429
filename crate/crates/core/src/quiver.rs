//! Acyclic quivers, dimension vectors, weights and quiver involutions.
//!
//! Vectors are stored densely, indexed by the position of each vertex in the
//! quiver's declaration order. Every enumeration in the crate walks vertices in
//! that order, so output is reproducible.

use std::collections::HashMap;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A dimension vector: one natural number per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<u32>);

/// A weight: one integer per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    /// Indicator vector of vertex `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        DimVector(v)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Sum of the entries.
    pub fn mass(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other`, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn checked_add(&self, other: &DimVector) -> Result<DimVector> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                got: other.0.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }

    /// Every `b` with `0 <= b <= self`, in mixed-radix lexicographic order
    /// (first vertex most significant).
    pub fn sub_box(&self) -> SubBox<'_> {
        SubBox {
            bound: &self.0,
            next: Some(vec![0; self.0.len()]),
        }
    }

    /// Number of vectors in [`DimVector::sub_box`].
    pub fn sub_box_len(&self) -> u128 {
        self.0.iter().map(|&x| u128::from(x) + 1).product()
    }
}

impl Index<usize> for DimVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Iterator over the integer box below a dimension vector.
pub struct SubBox<'a> {
    bound: &'a [u32],
    next: Option<Vec<u32>>,
}

impl Iterator for SubBox<'_> {
    type Item = DimVector;

    fn next(&mut self) -> Option<DimVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if succ[i] < self.bound[i] {
                succ[i] += 1;
                advanced = true;
                break;
            }
            succ[i] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(DimVector(current))
    }
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zeros(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Weight> {
        self.0
            .iter()
            .map(|x| x.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn checked_neg(&self) -> Result<Weight> {
        self.checked_scale(-1)
    }

    /// `σ(α) = Σ σ(x) α(x)`.
    pub fn eval(&self, a: &DimVector) -> Result<i64> {
        check_len(self.0.len(), a.len())?;
        dot(&self.0, a.as_slice())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

pub(crate) fn dot(w: &[i64], a: &[u32]) -> Result<i64> {
    w.iter().zip(a).try_fold(0i64, |acc, (&s, &x)| {
        s.checked_mul(i64::from(x))
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow)
    })
}

/// `σ(α)` for a weight and a dimension vector of the same quiver.
pub fn weight_eval(s: &Weight, a: &DimVector) -> Result<i64> {
    s.eval(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A finite directed multigraph without oriented cycles.
///
/// Construction validates every invariant, so a `Quiver` value is always
/// well formed.
#[derive(Clone, Debug)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Builds and validates a quiver from vertex ids and `(id, tail, head)`
    /// arrow triples.
    pub fn new<S: AsRef<str>>(
        name: impl Into<String>,
        vertices: &[S],
        arrows: &[(S, S, S)],
    ) -> Result<Quiver> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        let mut vids = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_index.insert(v.clone(), vids.len()).is_some() {
                return Err(Error::DuplicateId {
                    kind: "vertex",
                    id: v,
                });
            }
            vids.push(v);
        }
        let mut arrow_index = HashMap::with_capacity(arrows.len());
        let mut arrs = Vec::with_capacity(arrows.len());
        for (id, tail, head) in arrows {
            let id = id.as_ref().to_string();
            let endpoint = |v: &S| {
                vertex_index
                    .get(v.as_ref())
                    .copied()
                    .ok_or_else(|| Error::DanglingEndpoint {
                        arrow: id.clone(),
                        vertex: v.as_ref().to_string(),
                    })
            };
            let tail = endpoint(tail)?;
            let head = endpoint(head)?;
            if arrow_index.insert(id.clone(), arrs.len()).is_some() {
                return Err(Error::DuplicateId { kind: "arrow", id });
            }
            arrs.push(Arrow { id, tail, head });
        }
        let q = Quiver {
            name: name.into(),
            vertices: vids,
            arrows: arrs,
            vertex_index,
            arrow_index,
        };
        q.validate()?;
        Ok(q)
    }

    /// Re-checks acyclicity. Identifier invariants are enforced by
    /// [`Quiver::new`].
    pub fn validate(&self) -> Result<()> {
        self.topological_order().map(|_| ())
    }

    /// A topological order of the vertices (Kahn's algorithm, ties broken by
    /// declaration order), or the witness of an oriented cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arrows {
            indegree[a.head] += 1;
            out[a.tail].push(a.head);
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        Err(Error::OrientedCycle {
            cycle: self.find_cycle(&indegree, &out),
        })
    }

    // Every vertex left with positive indegree lies on or downstream of a
    // cycle; walking backwards along remaining arrows must revisit a vertex.
    fn find_cycle(&self, indegree: &[usize], out: &[Vec<usize>]) -> Vec<String> {
        let n = self.vertices.len();
        let mut pred = vec![usize::MAX; n];
        for (v, succs) in out.iter().enumerate() {
            if indegree[v] == 0 {
                continue;
            }
            for &w in succs {
                if indegree[w] > 0 && pred[w] == usize::MAX {
                    pred[w] = v;
                }
            }
        }
        let start = (0..n).find(|&v| indegree[v] > 0).expect("cycle exists");
        let mut seen = vec![false; n];
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = pred[v];
        }
        let mut cycle = vec![v];
        let mut w = pred[v];
        while w != v {
            cycle.push(w);
            w = pred[w];
        }
        cycle.reverse();
        cycle.push(cycle[0]);
        cycle
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::Unknown {
                kind: "vertex",
                id: id.to_string(),
            })
    }

    pub fn arrow(&self, id: &str) -> Result<usize> {
        self.arrow_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::Unknown {
                kind: "arrow",
                id: id.to_string(),
            })
    }

    pub fn check_dim(&self, a: &DimVector) -> Result<()> {
        check_len(self.vertices.len(), a.len())
    }

    pub fn check_weight(&self, s: &Weight) -> Result<()> {
        check_len(self.vertices.len(), s.len())
    }

    /// Dimension vector from `(vertex id, value)` pairs; absent vertices are 0.
    pub fn dim<S: AsRef<str>>(&self, entries: &[(S, u32)]) -> Result<DimVector> {
        let mut v = vec![0; self.vertices.len()];
        for (id, x) in entries {
            v[self.vertex(id.as_ref())?] = *x;
        }
        Ok(DimVector(v))
    }

    /// Weight from `(vertex id, value)` pairs; absent vertices are 0.
    pub fn weight<S: AsRef<str>>(&self, entries: &[(S, i64)]) -> Result<Weight> {
        let mut v = vec![0; self.vertices.len()];
        for (id, x) in entries {
            v[self.vertex(id.as_ref())?] = *x;
        }
        Ok(Weight(v))
    }

    /// The Euler–Ringel form `⟨a,b⟩ = Σ a(x)b(x) − Σ_arrows a(ta)b(ha)`.
    pub fn euler_form(&self, a: &DimVector, b: &DimVector) -> Result<i64> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        self.euler_raw(a.as_slice(), b.as_slice())
    }

    pub(crate) fn euler_raw(&self, a: &[u32], b: &[u32]) -> Result<i64> {
        let mut acc = 0i64;
        for (&x, &y) in a.iter().zip(b) {
            let p = i64::from(x)
                .checked_mul(i64::from(y))
                .ok_or(Error::Overflow)?;
            acc = acc.checked_add(p).ok_or(Error::Overflow)?;
        }
        for arr in &self.arrows {
            let p = i64::from(a[arr.tail])
                .checked_mul(i64::from(b[arr.head]))
                .ok_or(Error::Overflow)?;
            acc = acc.checked_sub(p).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// The weight `⟨·,b⟩`, i.e. `x ↦ b(x) − Σ_{ta = x} b(ha)`.
    pub fn right_pairing(&self, b: &DimVector) -> Result<Weight> {
        self.check_dim(b)?;
        let mut w: Vec<i64> = b.as_slice().iter().map(|&x| i64::from(x)).collect();
        for arr in &self.arrows {
            w[arr.tail] = w[arr.tail]
                .checked_sub(i64::from(b[arr.head]))
                .ok_or(Error::Overflow)?;
        }
        Ok(Weight(w))
    }

    /// The weight `⟨a,·⟩`, i.e. `y ↦ a(y) − Σ_{ha = y} a(ta)`.
    pub fn left_pairing(&self, a: &DimVector) -> Result<Weight> {
        self.check_dim(a)?;
        let mut w: Vec<i64> = a.as_slice().iter().map(|&x| i64::from(x)).collect();
        for arr in &self.arrows {
            w[arr.head] = w[arr.head]
                .checked_sub(i64::from(a[arr.tail]))
                .ok_or(Error::Overflow)?;
        }
        Ok(Weight(w))
    }

    /// Sum of the Euler form over ordered pairs `i < j` of a filtration.
    pub fn filtration_defect(&self, parts: &[DimVector]) -> Result<i64> {
        let mut acc = 0i64;
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                acc = acc
                    .checked_add(self.euler_form(a, b)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }

    pub fn format_dim(&self, a: &DimVector) -> String {
        format_assignments(&self.vertices, a.as_slice().iter().copied())
    }

    pub fn format_weight(&self, s: &Weight) -> String {
        format_assignments(&self.vertices, s.as_slice().iter().copied())
    }
}

fn format_assignments<T: fmt::Display + PartialEq + Default>(
    ids: &[String],
    values: impl Iterator<Item = T>,
) -> String {
    let zero = T::default();
    let parts: Vec<String> = ids
        .iter()
        .zip(values)
        .filter(|(_, v)| *v != zero)
        .map(|(id, v)| format!("{id}={v}"))
        .collect();
    parts.join(",")
}

/// The Euler–Ringel form of `q`.
pub fn euler_form(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64> {
    q.euler_form(a, b)
}

/// A pair of self-inverse maps on vertices and arrows exchanging heads and
/// tails: `h∘τ₁ = τ₀∘t` and `t∘τ₁ = τ₀∘h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    name: String,
    vmap: Vec<usize>,
    amap: Vec<usize>,
}

impl Involution {
    /// Builds an involution from index maps and validates it against `q`.
    pub fn from_maps(
        q: &Quiver,
        name: impl Into<String>,
        vmap: Vec<usize>,
        amap: Vec<usize>,
    ) -> Result<Involution> {
        let inv = Involution {
            name: name.into(),
            vmap,
            amap,
        };
        inv.validate(q)?;
        Ok(inv)
    }

    /// Builds an involution from unordered id pairs. Unlisted vertices and
    /// arrows are fixed; a pair may be listed in either direction or twice.
    pub fn from_pairs<S: AsRef<str>>(
        q: &Quiver,
        name: impl Into<String>,
        vertex_pairs: &[(S, S)],
        arrow_pairs: &[(S, S)],
    ) -> Result<Involution> {
        let name = name.into();
        let mut vmap: Vec<usize> = (0..q.vertex_count()).collect();
        for (x, y) in vertex_pairs {
            let (x, y) = (q.vertex(x.as_ref())?, q.vertex(y.as_ref())?);
            set_pair(&mut vmap, x, y, &name, "vertex", q.vertices())?;
        }
        let mut amap: Vec<usize> = (0..q.arrows().len()).collect();
        for (a, b) in arrow_pairs {
            let (a, b) = (q.arrow(a.as_ref())?, q.arrow(b.as_ref())?);
            let ids: Vec<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
            set_pair(&mut amap, a, b, &name, "arrow", &ids)?;
        }
        Involution::from_maps(q, name, vmap, amap)
    }

    /// Checks that both maps are self-inverse permutations and that arrows
    /// exchange heads and tails.
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        let not_inv = |kind, at: &str| Error::NotSelfInverse {
            involution: self.name.clone(),
            kind,
            at: at.to_string(),
        };
        if self.vmap.len() != q.vertex_count() {
            return Err(not_inv("vertex", "<length>"));
        }
        if self.amap.len() != q.arrows().len() {
            return Err(not_inv("arrow", "<length>"));
        }
        for (x, &y) in self.vmap.iter().enumerate() {
            if y >= self.vmap.len() || self.vmap[y] != x {
                return Err(not_inv("vertex", &q.vertices()[x]));
            }
        }
        for (a, &b) in self.amap.iter().enumerate() {
            if b >= self.amap.len() || self.amap[b] != a {
                return Err(not_inv("arrow", &q.arrows()[a].id));
            }
        }
        for (i, arr) in q.arrows().iter().enumerate() {
            let img = &q.arrows()[self.amap[i]];
            if img.head != self.vmap[arr.tail] || img.tail != self.vmap[arr.head] {
                return Err(Error::AxiomViolation {
                    involution: self.name.clone(),
                    arrow: arr.id.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vmap
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.amap
    }

    /// `(τα)(x) = α(τx)`.
    pub fn tau_dim(&self, a: &DimVector) -> DimVector {
        DimVector(self.vmap.iter().map(|&y| a[y]).collect())
    }

    /// `(τσ)(x) = σ(τx)`.
    pub fn tau_weight(&self, s: &Weight) -> Weight {
        Weight(self.vmap.iter().map(|&y| s[y]).collect())
    }

    pub fn is_symmetric(&self, a: &DimVector) -> bool {
        a.len() == self.vmap.len() && self.tau_dim(a) == *a
    }

    /// `σ = −τσ`.
    pub fn is_antisymmetric(&self, s: &Weight) -> bool {
        s.len() == self.vmap.len()
            && self
                .vmap
                .iter()
                .enumerate()
                .all(|(x, &y)| s[x].checked_neg() == Some(s[y]))
    }
}

pub(crate) fn set_pair(
    map: &mut [usize],
    x: usize,
    y: usize,
    inv: &str,
    kind: &'static str,
    ids: &[String],
) -> Result<()> {
    let free = |i: usize, map: &[usize], target: usize| map[i] == i || map[i] == target;
    if !free(x, map, y) || !free(y, map, x) {
        let at = if free(x, map, y) { y } else { x };
        return Err(Error::NotSelfInverse {
            involution: inv.to_string(),
            kind,
            at: ids[at].clone(),
        });
    }
    map[x] = y;
    map[y] = x;
    Ok(())
}

/// `τ·α`.
pub fn tau_dim(inv: &Involution, a: &DimVector) -> DimVector {
    inv.tau_dim(a)
}

/// `τ·σ`.
pub fn tau_weight(inv: &Involution, s: &Weight) -> Weight {
    inv.tau_weight(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orbit {
    Fixed(usize),
    Swapped { rep: usize, partner: usize },
}

/// Coordinates on the lattice of anti-symmetric weights `σ = −τσ`: one
/// integer `σ(rep)` per swapped orbit. Fixed vertices carry weight 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBasis {
    orbits: Vec<Orbit>,
    // indices into `orbits` of the swapped orbits, in coordinate order
    coords: Vec<(usize, usize)>,
    len: usize,
}

impl OrbitBasis {
    /// Default representatives: the lexicographically larger vertex id of each
    /// swapped pair. Coordinates follow the declaration order of the
    /// representatives.
    pub fn new(q: &Quiver, inv: &Involution) -> OrbitBasis {
        let ids = q.vertices();
        let mut orbits = Vec::new();
        for (x, &y) in inv.vertex_map().iter().enumerate() {
            if x == y {
                orbits.push(Orbit::Fixed(x));
            } else if x < y {
                let (rep, partner) = if ids[x] >= ids[y] { (x, y) } else { (y, x) };
                orbits.push(Orbit::Swapped { rep, partner });
            }
        }
        let mut coords: Vec<(usize, usize)> = orbits
            .iter()
            .filter_map(|o| match *o {
                Orbit::Swapped { rep, partner } => Some((rep, partner)),
                Orbit::Fixed(_) => None,
            })
            .collect();
        coords.sort_by_key(|&(rep, _)| rep);
        OrbitBasis {
            orbits,
            coords,
            len: q.vertex_count(),
        }
    }

    /// Explicit representatives, one per swapped orbit, in the given order.
    pub fn with_representatives<S: AsRef<str>>(
        q: &Quiver,
        inv: &Involution,
        reps: &[S],
    ) -> Result<OrbitBasis> {
        let default = OrbitBasis::new(q, inv);
        let mut coords = Vec::with_capacity(reps.len());
        let mut used = vec![false; q.vertex_count()];
        for r in reps {
            let rep = q.vertex(r.as_ref())?;
            let partner = inv.vertex_map()[rep];
            if partner == rep {
                return Err(Error::BadParameter(format!(
                    "representative `{}` is a fixed vertex",
                    r.as_ref()
                )));
            }
            if used[rep] || used[partner] {
                return Err(Error::BadParameter(format!(
                    "orbit of `{}` listed twice",
                    r.as_ref()
                )));
            }
            used[rep] = true;
            used[partner] = true;
            coords.push((rep, partner));
        }
        if coords.len() != default.coords.len() {
            return Err(Error::BadParameter(format!(
                "expected {} representatives, got {}",
                default.coords.len(),
                coords.len()
            )));
        }
        let orbits = default
            .orbits
            .into_iter()
            .map(|o| match o {
                Orbit::Fixed(x) => Orbit::Fixed(x),
                Orbit::Swapped { rep, partner } => {
                    let &(r, p) = coords
                        .iter()
                        .find(|&&(r, p)| r == rep || p == rep)
                        .expect("every orbit is covered");
                    let _ = partner;
                    Orbit::Swapped { rep: r, partner: p }
                }
            })
            .collect();
        Ok(OrbitBasis {
            orbits,
            coords,
            len: q.vertex_count(),
        })
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Representatives in coordinate order.
    pub fn representatives(&self) -> Vec<usize> {
        self.coords.iter().map(|&(r, _)| r).collect()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn fixed_count(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| matches!(o, Orbit::Fixed(_)))
            .count()
    }

    pub fn to_coords(&self, s: &Weight) -> Result<Vec<i64>> {
        check_len(self.len, s.len())?;
        let fixed_ok = self.orbits.iter().all(|o| match *o {
            Orbit::Fixed(x) => s[x] == 0,
            Orbit::Swapped { rep, partner } => s[rep].checked_neg() == Some(s[partner]),
        });
        if !fixed_ok {
            return Err(Error::NotAntiSymmetric);
        }
        Ok(self.coords.iter().map(|&(r, _)| s[r]).collect())
    }

    pub fn from_coords(&self, v: &[i64]) -> Result<Weight> {
        check_len(self.coords.len(), v.len())?;
        let mut w = vec![0; self.len];
        for (&(r, p), &x) in self.coords.iter().zip(v) {
            w[r] = x;
            w[p] = x.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Weight(w))
    }

    /// Coefficients `β(rep) − β(τ rep)` so that `σ(β) = Σ c_o · coord_o(σ)`
    /// for every anti-symmetric `σ`.
    pub fn restrict(&self, b: &DimVector) -> Result<Vec<i64>> {
        check_len(self.len, b.len())?;
        Ok(self
            .coords
            .iter()
            .map(|&(r, p)| i64::from(b[r]) - i64::from(b[p]))
            .collect())
    }
}

/// Orbit basis with default representatives.
pub fn antisym_basis(q: &Quiver, inv: &Involution) -> OrbitBasis {
    OrbitBasis::new(q, inv)
}
