//! Generic ext/hom and generic subdimension vectors on the Kronecker quiver.

use quiver_cones::zoo::make_kronecker;
use quiver_cones::{DimVector, ExtTable, Result};

fn main() -> Result<()> {
    let (q, _) = make_kronecker(2)?;
    let t = ExtTable::new(&q);
    for (a, b) in [
        ([1, 0], [0, 1]),
        ([0, 1], [1, 0]),
        ([1, 1], [1, 1]),
        ([2, 1], [1, 2]),
    ] {
        let (a, b) = (DimVector::new(a.to_vec()), DimVector::new(b.to_vec()));
        println!(
            "a={a} b={b} euler={} ext={} hom={}",
            q.euler_form(&a, &b)?,
            t.ext_generic(&a, &b)?,
            t.hom_generic(&a, &b)?
        );
    }
    let alpha = DimVector::new(vec![2, 3]);
    let subs: Vec<String> = t
        .enumerate_generic_subdims(&alpha)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("generic subdimensions of {alpha}: {}", subs.join(" "));
    Ok(())
}
