//! Constructors for the standard quiver families, each paired with its
//! involution(s). Every returned object has already been validated.

use crate::error::{Error, Result};
use crate::quiver::{Involution, Quiver};

/// Family tag plus parameters, as accepted by [`build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Line { n: usize },
    Kronecker { n: usize },
    Sun { k: usize, n: usize },
    D5Hat,
}

/// Builds a family member together with all of its listed involutions.
pub fn build(spec: FamilySpec) -> Result<(Quiver, Vec<Involution>)> {
    match spec {
        FamilySpec::Line { n } => make_line(n).map(|(q, t)| (q, vec![t])),
        FamilySpec::Kronecker { n } => make_kronecker(n).map(|(q, t)| (q, vec![t])),
        FamilySpec::Sun { k, n } => make_sun(k, n),
        FamilySpec::D5Hat => make_d5hat().map(|(q, t)| (q, vec![t])),
    }
}

/// The oriented line `1 → 2 → … → n` with the reflection `i ↦ n+1−i`.
pub fn make_line(n: usize) -> Result<(Quiver, Involution)> {
    if n == 0 {
        return Err(Error::BadParameter("line quiver needs n >= 1".into()));
    }
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(format!("A{n}"), &vertices, &arrows)?;
    let vmap = (0..n).map(|i| n - 1 - i).collect();
    // a_i ↦ a_{n−i}, with a_i at index i−1
    let amap = (0..n.saturating_sub(1)).map(|i| n - 2 - i).collect();
    let tau = Involution::from_maps(&q, "tau", vmap, amap)?;
    Ok((q, tau))
}

/// The `n`-Kronecker quiver: `n` parallel arrows `1 → 2`, with the involution
/// swapping the two vertices and fixing every arrow.
pub fn make_kronecker(n: usize) -> Result<(Quiver, Involution)> {
    if n == 0 {
        return Err(Error::BadParameter("Kronecker quiver needs n >= 1".into()));
    }
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("a{i}"), "1".to_string(), "2".to_string()))
        .collect();
    let q = Quiver::new(
        format!("Theta{n}"),
        &["1".to_string(), "2".to_string()],
        &arrows,
    )?;
    let tau = Involution::from_maps(&q, "tau", vec![1, 0], (0..n).collect())?;
    Ok((q, tau))
}

/// The `(2k, n)`-Sun quiver: a ring of `2k` vertices with alternating
/// orientation, each ring vertex carrying a spoke of length `n − 1`.
///
/// Vertex `(i, j)` is named `"i.j"` with `i ∈ 0..2k`, `j ∈ 1..=n`; arrow
/// `a_{i,j}` is named `"ai.j"`. Returns `tau` (with `tau(0,n) = (1,n)`) and,
/// when `k` is odd, the half-turn `rho`.
pub fn make_sun(k: usize, n: usize) -> Result<(Quiver, Vec<Involution>)> {
    if k < 2 || n == 0 {
        return Err(Error::BadParameter(
            "Sun quiver needs k >= 2 and n >= 1".into(),
        ));
    }
    let m = 2 * k;
    let idx = |i: usize, j: usize| (i % m) * n + (j - 1);
    let vname = |i: usize, j: usize| format!("{}.{}", i % m, j);
    let vertices: Vec<String> = (0..m)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| vname(i, j))
        .collect();
    let mut arrows = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 1..=n {
            let (tail, head) = match (i % 2 == 1, j == n) {
                (true, true) => ((i + 1, n), (i, n)),
                (true, false) => ((i, j + 1), (i, j)),
                (false, true) => ((i, n), (i + 1, n)),
                (false, false) => ((i, j), (i, j + 1)),
            };
            arrows.push((
                format!("a{i}.{j}"),
                vname(tail.0, tail.1),
                vname(head.0, head.1),
            ));
        }
    }
    let q = Quiver::new(format!("Sun({m},{n})"), &vertices, &arrows)?;

    let neg = |i: usize| (m - i % m) % m;
    let mut tau_v = vec![0; m * n];
    let mut tau_a = vec![0; m * n];
    for i in 0..m {
        for j in 1..=n {
            tau_v[idx(i, j)] = idx(neg(i) + 1, j);
            // ring arrows a_{i,n} ↦ a_{−i,n}; spokes a_{i,j} ↦ a_{1−i,j}
            tau_a[idx(i, j)] = if j == n {
                idx(neg(i), n)
            } else {
                idx(neg(i) + 1, j)
            };
        }
    }
    let mut invs = vec![Involution::from_maps(&q, "tau", tau_v, tau_a)?];
    if k % 2 == 1 {
        let rho: Vec<usize> = (0..m)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| idx(i + k, j))
            .collect();
        invs.push(Involution::from_maps(&q, "rho", rho.clone(), rho)?);
    }
    Ok((q, invs))
}

/// The six-vertex, five-arrow quiver of type D̂₅ with its involution
/// `(x1 x6)(x2 x5)(x3 x4)`, `(a1 a5)(a2 a4)`.
///
/// Sources `x1, x2` feed `x3 → x4`, which feeds the sinks `x5, x6`. With this
/// pairing the symmetric dimension vectors are exactly `(a,b,c,c,b,a)`.
pub fn make_d5hat() -> Result<(Quiver, Involution)> {
    let q = Quiver::new(
        "d5hat",
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[
            ("a1", "x1", "x3"),
            ("a2", "x2", "x3"),
            ("a3", "x3", "x4"),
            ("a4", "x4", "x5"),
            ("a5", "x4", "x6"),
        ],
    )?;
    let tau = Involution::from_pairs(
        &q,
        "tau",
        &[("x1", "x6"), ("x2", "x5"), ("x3", "x4")],
        &[("a1", "a5"), ("a2", "a4")],
    )?;
    Ok((q, tau))
}
