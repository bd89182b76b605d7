//! Parse words, evaluate them at an assignment, and compute images,
//! fibre sizes and verbal subgroups.

use wordlab::{
    catalog_group, evaluate_word, solution_count, solution_counts, verbal_subgroup, word_image,
    Assignment, ClassTable, Enumeration, Word,
};

fn main() -> wordlab::Result<()> {
    let s4 = catalog_group("S4")?;
    let t = ClassTable::new(&s4);
    let cfg = Enumeration::default();

    let w: Word = "[x1, x2]^2 x3^-1".parse()?;
    println!("canonical form: {w}  (arity {})", w.arity());

    let a: Assignment = [(1, t.rep(1)), (2, t.rep(2)), (3, t.rep(4))].into_iter().collect();
    let value = evaluate_word(&s4, &w, &a)?;
    println!("value at a sample assignment: {}", s4.element(value));

    let comm = Word::parse("[x1,x2]")?;
    let counts = solution_counts(&s4, &comm, &cfg)?;
    for k in 0..t.len() {
        println!("  |w^-1({})| = {}", t.name(k), counts[t.rep(k)]);
    }
    println!("fibre over the identity: {}", solution_count(&s4, &comm, 0, &cfg)?);
    println!("image size: {}", word_image(&s4, &comm, &cfg)?.len());
    println!("verbal subgroup order: {}", verbal_subgroup(&s4, &comm, &cfg)?.order());

    // Enumeration refuses work beyond its budget.
    let tight = Enumeration::with_budget(100);
    if let Err(e) = word_image(&s4, &comm, &tight) {
        println!("budget refusal: {e}");
    }
    Ok(())
}
