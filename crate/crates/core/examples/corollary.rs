//! Rationality of iterated commutator-power words over the small
//! catalog groups.

use wordlab::conciseness::corollary_check;
use wordlab::{catalog_group, Enumeration, FiniteGroup, STANDARD_CATALOG};

fn main() -> wordlab::Result<()> {
    let groups: Vec<FiniteGroup> = STANDARD_CATALOG
        .iter()
        .map(|s| catalog_group(s))
        .collect::<wordlab::Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| g.order() <= 24)
        .collect();
    let cfg = Enumeration::with_budget(2_000_000);
    for exps in [vec![1, 1], vec![2, 1], vec![1, 2, 3], vec![3, 1, 2]] {
        let report = corollary_check(&exps, &groups, &cfg)?;
        let checked = report.groups.iter().filter(|e| e.checked).count();
        println!(
            "{:<28} checked {:>2}/{:<2} rational everywhere: {}",
            report.word,
            checked,
            report.groups.len(),
            report.aggregate
        );
        for f in report.failures() {
            println!("   fails on {}", f.group);
        }
    }
    Ok(())
}
