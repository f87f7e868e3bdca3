//! Builds and solves the binomial congruence system for a prime and k.
use zslab::congruence::{binom_mod_p, build_system, closed_form, solve_by_elimination};
use zslab::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let p = args.next().unwrap_or(7);
    let k = args.next().unwrap_or(3);

    let sys = build_system(p, k)?;
    println!("p = {p}, k = {k}; rows are (constant, x_1, …, x_k) mod p:");
    for row in &sys.matrix {
        println!("  {row:?}");
    }
    let sol = solve_by_elimination(&sys)?;
    println!("elimination: {:?} (unique: {})", sol.values, sol.unique);
    println!("closed form: {:?}", closed_form(p, k)?.values);
    println!("C(2p-2+k, k-1) mod p = {}", binom_mod_p(2 * p - 2 + k, k - 1, p)?);
    Ok(())
}
