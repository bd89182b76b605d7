//! Index bounds relating a word's image, its centralizer and the number
//! of values it takes.

use wordlab::conciseness::{fam_bound_check, lemma_concise_report, totient_ceiling};
use wordlab::{catalog_group, Enumeration, Word};

fn main() -> wordlab::Result<()> {
    let cfg = Enumeration::default();
    for m in 1..=6 {
        println!("largest n with phi(n) <= {m}: {}", totient_ceiling(m));
    }
    for (spec, word) in [("S4", "[x1,x2]"), ("Q8", "[x1,x2]"), ("D5", "x1^2"), ("A5", "[x1,x2]^30")] {
        let g = catalog_group(spec)?;
        let w = Word::parse(word)?;
        let report = lemma_concise_report(&g, &w, &cfg)?;
        println!("\n{spec}  w = {w}");
        print!("{}", report.to_table());
        match fam_bound_check(&g, &w, &cfg) {
            Ok(fam) => println!("multilinear bound |W| <= {}: {}", fam.bound, fam.holds),
            Err(e) => println!("multilinear bound skipped: {e}"),
        }
    }
    Ok(())
}
