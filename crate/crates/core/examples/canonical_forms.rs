//! Canonical orbit representatives and orbit sizes under Aut(G).
use zslab::symmetry::{canonicalize, SymmetryTable};
use zslab::{GroupSpec, Result, Sequence};

fn main() -> Result<()> {
    let g: GroupSpec = "C5xC5".parse()?;
    let table = SymmetryTable::new(&g)?;
    println!("|Aut({g})| = {}", table.len());
    for text in [
        "C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2",
        "C5xC5 | (2,0)^4 (0,3)^4 (2,3)^2",
        "C5xC5 | (3,1)^4 (1,1)^4 (4,2)^2",
        "C5xC5 | (1,2) (2,4) (3,1)",
    ] {
        let s: Sequence = text.parse()?;
        println!("{s}\n  -> {}  (orbit size {})", canonicalize(&s)?.render_terms(), table.orbit_size(&s));
    }
    // rank three with 1,488,000 automorphisms: streamed rather than tabulated
    let big: Sequence = "C5xC5xC5 | (1,2,3) (4,4,0)".parse()?;
    println!("{big}\n  -> {}", canonicalize(&big)?.render_terms());
    Ok(())
}
