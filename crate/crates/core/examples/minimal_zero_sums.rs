//! Orbit representatives of minimal zero-sum sequences of length D(G) over
//! C_n ⊕ C_n, each matched against e1^[n-1]·∏(x_i e1 + e2), Σx_i ≡ 1.
use zslab::search::{enumerate_minimal_zero_sums, SearchOptions};
use zslab::structure::match_property_b_form;
use zslab::{GroupSpec, Result};

fn main() -> Result<()> {
    for n in 2..=5u32 {
        let g = GroupSpec::homocyclic(n, 2)?;
        let reps = enumerate_minimal_zero_sums(&g, 2 * n as usize - 1, &SearchOptions::default())?;
        println!("{g}: {} orbit(s)", reps.len());
        for s in reps {
            let m = match_property_b_form(&s)?;
            println!("  {:<40} x = {}", s.render_terms(), m.parameters["x"]);
        }
    }
    Ok(())
}
