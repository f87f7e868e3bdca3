//! Template matching: the extremal form, the minimal zero-sum form and the
//! k-dependent family, each with a self-checking basis witness.
use zslab::structure::{check_coset_reduction, match_conjecture_form, match_main_form, match_property_b_form};
use zslab::{Result, Sequence};

fn show(label: &str, s: &Sequence, m: &zslab::FormMatch) {
    let basis = m
        .basis_witness
        .as_ref()
        .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .unwrap_or_else(|| "-".into());
    println!(
        "{label:<14} {s}\n               {} matched={} basis=[{basis}] params={:?} reproduces={}",
        m.form_name,
        m.matched,
        m.parameters,
        m.witness_reproduces(s)
    );
}

fn main() -> Result<()> {
    let s: Sequence = "C5xC5 | (2,0)^4 (0,3)^4 (2,3)^2".parse()?;
    show("extremal", &s, &match_main_form(&s, 2)?);

    let near: Sequence = "C5xC5 | (1,0)^4 (0,1)^4 (1,2)^2".parse()?;
    show("near miss", &near, &match_main_form(&near, 2)?);

    let mzs: Sequence = "C5xC5 | (1,0)^4 (0,1)^4 (1,1)".parse()?;
    show("minimal", &mzs, &match_property_b_form(&mzs)?);

    let kn1: Sequence = "C5xC5 | (1,0)^4 (0,1)^4 (2,1)^4".parse()?;
    show("k = n-1", &kn1, &match_conjecture_form(&kn1, 4)?);

    let shifted: Sequence = "C5xC5 | (1,0)^4 (1,1)^4 (2,1)^2".parse()?;
    println!("coset reduction on {shifted}: {}", check_coset_reduction(&shifted, 2)?);
    Ok(())
}
