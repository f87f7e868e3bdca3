//! The full pipeline over C_p ⊕ C_p for every admissible k of one prime.
use zslab::report::verify_theorem;
use zslab::search::Budget;
use zslab::Result;

fn main() -> Result<()> {
    let p: u32 = std::env::args().nth(1).map_or(5, |a| a.parse().expect("p is an integer"));
    let mut all = true;
    for k in 2..=p - 2 {
        let verdict = verify_theorem(p, k, Budget::from_env(), 1)?;
        println!("{verdict}\n");
        all &= verdict.overall;
    }
    println!("p = {p}: {}", if all { "all k verified" } else { "NOT all verified" });
    Ok(())
}
