//! Group literals, element arithmetic, bases and automorphisms.
use zslab::group::{enumerate_automorphisms, is_basis};
use zslab::{GroupSpec, Result};

fn main() -> Result<()> {
    let g: GroupSpec = "C5xC5".parse()?;
    println!("{g}: order {}, exponent {}, rank {}", g.order(), g.exponent(), g.rank());

    let a = g.element(&[3, 4])?;
    let b = g.element(&[4, 2])?;
    println!("{a} + {b} = {}", g.add(&a, &b)?);
    println!("-{a} = {}, 7·{a} = {}", g.neg(&a), g.scalar_mul(7, &a));
    println!("ord{a} = {}", g.element_order(&a));

    let e1 = g.element(&[2, 0])?;
    let e2 = g.element(&[0, 3])?;
    println!("({e1}, {e2}) is a basis: {}", is_basis(&g, &[e1.clone(), e2.clone()]));
    let twice = is_basis(&g, &[e1.clone(), e1.clone()]);
    println!("({e1}, {e1}) is a basis: {twice}");

    for spec in ["C2xC2", "C3xC3", "C4xC4", "C5xC5", "C2xC2xC2"] {
        let spec: GroupSpec = spec.parse()?;
        println!("|Aut({spec})| = {}", enumerate_automorphisms(&spec)?.count());
    }
    Ok(())
}
