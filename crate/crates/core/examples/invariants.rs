//! D(G), η(G) and s_{≤D(G)-k}(G) computed by exhaustive search, next to
//! their closed forms.
use zslab::congruence::{davenport_formula, eta_formula};
use zslab::search::{compute_davenport_by_search, compute_eta_by_search, s_leq_by_search, SearchOptions};
use zslab::{GroupSpec, Result};

fn main() -> Result<()> {
    let opts = SearchOptions::default();
    for name in ["C2xC2", "C3xC3", "C4xC4", "C5xC5", "C2xC4", "C2xC2xC2", "C3xC3xC3"] {
        let g: GroupSpec = name.parse()?;
        let d = compute_davenport_by_search(&g, &opts)?;
        let eta = compute_eta_by_search(&g, &opts)?;
        let fmt = |r: Result<u64>| r.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{name:<10} D = {d:<3} (formula {:<3})  η = {eta:<3} (formula {})",
            fmt(davenport_formula(&g)),
            fmt(eta_formula(&g))
        );
    }
    for n in 2..=5u32 {
        let g = GroupSpec::homocyclic(n, 2)?;
        let d = 2 * n as usize - 1;
        let values: Vec<_> = (0..n as usize)
            .map(|k| s_leq_by_search(&g, d - k, &opts).map(|s| format!("k={k}: {s}")))
            .collect::<Result<_>>()?;
        println!("s_≤D-k({g}): {}", values.join(", "));
    }
    Ok(())
}
