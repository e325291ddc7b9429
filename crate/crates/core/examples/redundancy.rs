//! Exact redundancy elimination on a small cone and on the D5-hat system.

use quiver_cones::cone::{inequalities, Method};
use quiver_cones::reduce::{irredundant_core, HalfspaceCone};
use quiver_cones::zoo::make_d5hat;
use quiver_cones::{DimVector, ExtTable, OrbitBasis, Result};

fn main() -> Result<()> {
    let cone = HalfspaceCone::new(3, vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 3, 2]], vec![])?;
    println!("(0,3,2) redundant: {}", cone.is_redundant(2)?);

    let (q, tau) = make_d5hat()?;
    let t = ExtTable::new(&q);
    let alpha = DimVector::new(vec![2, 3, 4, 4, 3, 2]);
    let basis = OrbitBasis::with_representatives(&q, &tau, &["x4", "x5", "x6"])?;
    let mut sys = inequalities(&t, &alpha, Method::AntiInv, Some(&tau), Some(basis))?;
    sys.dedup_restricted();
    let core = irredundant_core(&sys)?;
    println!("{} rows reduce to {}:", sys.len(), core.len());
    for row in core.primitive_rows() {
        println!("  {row:?}");
    }
    Ok(())
}
