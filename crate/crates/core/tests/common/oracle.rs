//! Independent generic ext/hom oracle: for random integer representations V,
//! W the map `φ ↦ (φ(ha)·V(a) − W(a)·φ(ta))_a` has kernel Hom(V,W) and
//! cokernel Ext(V,W). The maximal rank over several samples gives the generic
//! values.

use quiver_cones::Quiver;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const SAMPLES: usize = 20;

type Mat = Vec<Vec<i64>>;

fn random_rep(q: &Quiver, d: &[u32], rng: &mut ChaCha8Rng) -> Vec<Mat> {
    q.arrows()
        .iter()
        .map(|a| {
            (0..d[a.head])
                .map(|_| (0..d[a.tail]).map(|_| rng.gen_range(-7..=7)).collect())
                .collect()
        })
        .collect()
}

/// Exact rank by fraction-free elimination.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = m[r][c]
                    .checked_mul(m[i][j])
                    .and_then(|x| x.checked_sub(m[i][c].checked_mul(m[r][j])?))
                    .expect("oracle overflow");
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Returns (hom, ext) for one random pair of representations.
pub fn sample(q: &Quiver, a: &[u32], b: &[u32], rng: &mut ChaCha8Rng) -> (usize, usize) {
    let v = random_rep(q, a, rng);
    let w = random_rep(q, b, rng);
    let n = a.len();
    // domain: φ(x) is b(x) × a(x)
    let mut dom_off = vec![0; n + 1];
    for x in 0..n {
        dom_off[x + 1] = dom_off[x] + (a[x] * b[x]) as usize;
    }
    let dom = dom_off[n];
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for (k, arr) in q.arrows().iter().enumerate() {
        let (t, h) = (arr.tail, arr.head);
        // output block is b(h) × a(t)
        for i in 0..b[h] as usize {
            for j in 0..a[t] as usize {
                let mut row = vec![0i128; dom];
                // (φ_h V_a)[i][j] = Σ_l φ_h[i][l] V_a[l][j]
                for l in 0..a[h] as usize {
                    row[dom_off[h] + i * a[h] as usize + l] += v[k][l][j] as i128;
                }
                // (W_a φ_t)[i][j] = Σ_l W_a[i][l] φ_t[l][j]
                for l in 0..b[t] as usize {
                    row[dom_off[t] + l * a[t] as usize + j] -= w[k][i][l] as i128;
                }
                rows.push(row);
            }
        }
    }
    let codim = rows.len();
    let r = if dom == 0 || codim == 0 {
        0
    } else {
        rank(rows)
    };
    (dom - r, codim - r)
}

pub fn dims_up_to(n: usize, mass: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                let used: u32 = p.iter().sum();
                (0..=mass - used).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Generic (hom, ext) as the extremes over `SAMPLES` random pairs.
pub fn generic(q: &Quiver, a: &[u32], b: &[u32], rng: &mut ChaCha8Rng) -> (usize, usize) {
    let (mut hom, mut ext) = (usize::MAX, usize::MAX);
    for _ in 0..SAMPLES {
        let (h, e) = sample(q, a, b, rng);
        hom = hom.min(h);
        ext = ext.min(e);
    }
    (hom, ext)
}
