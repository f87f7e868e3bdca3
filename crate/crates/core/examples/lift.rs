//! Lifts an extremal sequence over C_p ⊕ C_p to C_p^3 and checks that the
//! result is a minimal zero-sum of the rank-three template.
use zslab::structure::{lift_sequence, match_rank3_form, verify_lift_minimal};
use zslab::{Result, Sequence};

fn main() -> Result<()> {
    for (text, k) in [
        ("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2", 2),
        ("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^3", 3),
        ("C7xC7 | (1,0)^6 (0,1)^6 (1,1)^4", 4),
    ] {
        let s: Sequence = text.parse()?;
        let lift = lift_sequence(&s, k)?;
        println!("{s}  (k = {k})");
        for (i, part) in lift.parts.iter().enumerate() {
            println!("  S'_{} = {}", i + 1, part.render_terms());
        }
        println!(
            "  |S'| = {}, σ(S') = {}, minimal zero-sum: {}, rank-3 template: {}",
            lift.lifted.len(),
            lift.lifted.sigma(),
            verify_lift_minimal(&s, k)?,
            match_rank3_form(&lift.lifted)?.matched
        );
    }
    Ok(())
}
