//! Which unions of conjugacy classes are closed under coprime powers.

use wordlab::rationality::power_closed;
use wordlab::{catalog_group, ClassTable};

fn main() -> wordlab::Result<()> {
    for spec in ["A5", "PSL(2,7)"] {
        let g = catalog_group(spec)?;
        let t = ClassTable::new(&g);
        println!("{spec}");
        for k in 1..t.len() {
            let mut set = t.class(0).to_vec();
            set.extend_from_slice(t.class(k));
            let pc = power_closed(&g, &set);
            let note = pc
                .witness
                .map(|w| format!("  e.g. {} to the power {} leaves the set", w.g_cycles, w.e))
                .unwrap_or_default();
            println!("  1A + {:<3} power-closed: {:<5}{note}", t.name(k), pc.power_closed);
        }
    }
    Ok(())
}
