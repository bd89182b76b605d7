//! Build catalog groups and a group from explicit generators, then list
//! their conjugacy classes.

use wordlab::{catalog_group, ClassTable, FiniteGroup, Permutation};

fn main() -> wordlab::Result<()> {
    for spec in ["S3", "Q8", "SL(2,3)", "A5", "PSL(2,7)"] {
        let g = catalog_group(spec)?;
        let t = ClassTable::new(&g);
        let names: Vec<String> = (0..t.len()).map(|k| format!("{}({})", t.name(k), t.size(k))).collect();
        println!("{:<9} order {:>3}  exponent {:>3}  classes {}", spec, g.order(), g.exponent(), names.join(" "));
    }

    // Generators in cycle notation on points 0..n-1.
    let gens = vec![
        Permutation::parse_cycles("(0 1 2 3 4)", 5)?,
        Permutation::parse_cycles("(1 4)(2 3)", 5)?,
    ];
    let d5 = FiniteGroup::build(&gens, "custom D5")?;
    println!("\n{}: order {}, abelian {}", d5.name(), d5.order(), d5.is_abelian());
    for x in 0..d5.order() {
        println!("  {}", d5.describe(x));
    }
    Ok(())
}
