//! The anti-invariant inequality system for D5-hat at (2,3,4,4,3,2),
//! written on the coordinates x4, x5, x6.

use quiver_cones::cone::{inequalities, Method};
use quiver_cones::zoo::make_d5hat;
use quiver_cones::{DimVector, ExtTable, OrbitBasis, Result};

fn main() -> Result<()> {
    let (q, tau) = make_d5hat()?;
    let t = ExtTable::new(&q);
    let alpha = DimVector::new(vec![2, 3, 4, 4, 3, 2]);
    let basis = OrbitBasis::with_representatives(&q, &tau, &["x4", "x5", "x6"])?;
    let mut sys = inequalities(&t, &alpha, Method::AntiInv, Some(&tau), Some(basis))?;
    println!("{} pairs", sys.len());
    sys.dedup_restricted();
    sys.drop_zero_rows();
    for row in sys.sorted_rows() {
        println!("{row:?} . (x4,x5,x6) <= 0");
    }
    Ok(())
}
