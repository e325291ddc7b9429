//! Inequality counts for the (6,1)-Sun quiver under both involutions.

use quiver_cones::cone::counts;
use quiver_cones::zoo::make_sun;
use quiver_cones::{DimVector, ExtTable, Result};

fn main() -> Result<()> {
    let (q, invs) = make_sun(3, 1)?;
    let t = ExtTable::new(&q);
    let (tau, rho) = (&invs[0], &invs[1]);
    for a in [[1, 1, 2, 3, 3, 2], [1, 2, 3, 1, 2, 3], [2, 2, 2, 2, 2, 2]] {
        let alpha = DimVector::new(a.to_vec());
        let applicable: Vec<_> = [tau, rho]
            .into_iter()
            .filter(|i| i.is_symmetric(&alpha))
            .collect();
        let c = counts(&t, &alpha, &applicable)?;
        let names: Vec<&str> = applicable.iter().map(|i| i.name()).collect();
        println!(
            "{alpha} n1={} n2={} n3={:?} ({})",
            c.n1,
            c.n2,
            c.n3,
            names.join(",")
        );
    }
    Ok(())
}
