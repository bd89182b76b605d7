//! Character tables computed modulo a prime and lifted to complex values.

use wordlab::characters::GroupCharacters;
use wordlab::catalog_group;

fn main() -> wordlab::Result<()> {
    for spec in ["S4", "A5"] {
        let g = catalog_group(spec)?;
        let ch = GroupCharacters::new(&g)?;
        let t = &ch.classes;
        println!("{spec}: working prime p = {}", ch.mod_p.prime);
        print!("      ");
        for k in 0..t.len() {
            print!("{:>16}", t.name(k));
        }
        println!();
        for (i, d) in ch.table.degrees.iter().enumerate() {
            print!("chi{:<3}", i + 1);
            for k in 0..t.len() {
                let v = ch.table.value(i, k);
                let (re, im) = (clean(v.re), clean(v.im));
                let cell = if im == 0.0 {
                    format!("{re:.4}")
                } else {
                    format!("{re:.3}{im:+.3}i")
                };
                print!("{cell:>16}");
            }
            println!("   (degree {d})");
        }
        println!(
            "orthogonality error {:.1e}\n",
            ch.table.orthogonality_error(&t.sizes())
        );
    }
    Ok(())
}

fn clean(x: f64) -> f64 {
    if x.abs() < 1e-9 {
        0.0
    } else {
        x
    }
}
