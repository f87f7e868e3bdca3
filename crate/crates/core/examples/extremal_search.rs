//! Enumerates, up to automorphism, the sequences of length D(G)+k-1 with no
//! zero-sum of length ≤ D(G)-k, and prints the JSON report.
use zslab::search::{enumerate_extremal, SearchTask};
use zslab::{GroupSpec, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let group: GroupSpec = args.next().unwrap_or_else(|| "C5xC5".into()).parse()?;
    let k: u32 = args.next().map_or(2, |a| a.parse().expect("k is an integer"));

    let task = SearchTask::extremal(&group, k)?;
    let report = enumerate_extremal(&task)?;
    println!(
        "{group}, |S| = {}, forbidden ≤ {}: {} orbit(s) in {} nodes",
        task.target_length,
        task.forbidden,
        report.orbits.len(),
        report.nodes
    );
    println!("{}", serde_json::to_string_pretty(&report.to_json(true)).unwrap());
    Ok(())
}
