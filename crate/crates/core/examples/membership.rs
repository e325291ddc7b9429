//! The three membership tests on an anti-symmetric weight for D5-hat.

use quiver_cones::cone::{member, Method};
use quiver_cones::zoo::make_d5hat;
use quiver_cones::{DimVector, ExtTable, OrbitBasis, Result};

fn main() -> Result<()> {
    let (q, tau) = make_d5hat()?;
    let t = ExtTable::new(&q);
    let alpha = DimVector::new(vec![2, 3, 4, 4, 3, 2]);
    let basis = OrbitBasis::with_representatives(&q, &tau, &["x4", "x5", "x6"])?;
    for coords in [[-1, -1, -1], [-3, 1, 2], [1, 0, -1], [0, 0, 0]] {
        let sigma = basis.from_coords(&coords)?;
        print!("{:>12}", q.format_weight(&sigma));
        for m in [Method::Dw, Method::Inductive, Method::AntiInv] {
            let v = member(&t, &sigma, &alpha, m, Some(&tau))?;
            print!("  {m}={}", v.is_member());
        }
        println!();
    }
    Ok(())
}
