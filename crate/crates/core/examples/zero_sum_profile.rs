//! Exact zero-sum counts, short zero-sums and witnesses for one sequence.
use zslab::{Result, Sequence, ZeroSumEngine};

fn main() -> Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2".to_string());
    let s: Sequence = text.parse()?;
    let engine = ZeroSumEngine::new(s.spec())?;

    let profile = engine.count_zero_sums(&s)?;
    println!("S = {s}  (|S| = {}, σ(S) = {})", s.len(), s.sigma());
    for (i, c) in profile.counts().iter().enumerate() {
        println!("  N^{i:<2} = {c}");
    }
    match engine.shortest_nonempty_zero_sum(&s)? {
        Some(len) => {
            let w = engine.extract_witness(&s, len)?.expect("length has a zero-sum");
            println!("shortest zero-sum: length {len}, e.g. {}", w.render_terms());
        }
        None => println!("S is zero-sum free"),
    }
    println!("|Σ(S)| = {}", engine.subsum_set_size(&s)?);
    println!("minimal zero-sum: {}", engine.is_minimal_zero_sum(&s)?);
    if let Some(p) = s.spec().p_group_prime() {
        println!("Σ(-1)^i N^i mod {p} = {}", engine.olson_alternating_check(&s, p)?);
    }
    Ok(())
}
