//! Weak and full rationality of word maps across a few groups.

use wordlab::rationality::rationality_pair;
use wordlab::{catalog_group, gamma_power_word, Enumeration, Word};

fn main() -> wordlab::Result<()> {
    let cfg = Enumeration::default();
    let words = [
        Word::parse("[x1,x2]")?,
        Word::parse("x1^2 x2^3")?,
        gamma_power_word(&[2, 3])?,
        Word::parse("[x1,x2,x3]")?,
    ];
    println!("{:<10} {:<22} {:>5} {:>5}", "group", "word", "weak", "full");
    for spec in ["S3", "Q8", "SL(2,3)", "A5"] {
        let g = catalog_group(spec)?;
        for w in &words {
            let (weak, full) = rationality_pair(&g, w, &cfg)?;
            println!("{:<10} {:<22} {:>5} {:>5}", spec, w.to_string(), weak.holds, full.holds);
        }
    }
    Ok(())
}
