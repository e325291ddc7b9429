//! Euler form, pairings and involutions on the line quiver A3.

use quiver_cones::zoo::make_line;
use quiver_cones::{DimVector, Result};

fn main() -> Result<()> {
    let (q, tau) = make_line(3)?;
    let a = q.dim(&[("1", 1), ("2", 1)])?;
    let b = q.dim(&[("2", 1), ("3", 1)])?;
    println!("<{a}, {b}> = {}", q.euler_form(&a, &b)?);
    println!("<{b}, {a}> = {}", q.euler_form(&b, &a)?);

    let w = q.right_pairing(&b)?;
    println!("<-, {b}> = [{}]", q.format_weight(&w));

    let c = DimVector::new(vec![1, 2, 3]);
    println!("tau {c} = {}", tau.tau_dim(&c));
    println!("{c} symmetric: {}", tau.is_symmetric(&c));
    Ok(())
}
