//! Conjugacy classes in canonical order.

use serde::Serialize;

use crate::error::{Result, WordlabError};
use crate::group::{Elem, FiniteGroup, IDENTITY};

/// Index into [`ClassTable::classes`].
pub type ClassId = usize;

#[derive(Clone, Debug)]
pub struct ClassTable {
    classes: Vec<Vec<Elem>>,
    reps: Vec<Elem>,
    class_of: Vec<ClassId>,
    inverse_class: Vec<ClassId>,
    names: Vec<String>,
}

/// Per-class metadata, as exported in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub rep: String,
    pub size: usize,
    pub element_order: usize,
}

impl ClassTable {
    /// Classes are sorted by (order of representative, class size, smallest
    /// member); the representative is the smallest member.
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = vec![x];
            assigned[x] = true;
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                for &s in g.generators() {
                    let z = g.conj(y, s);
                    if !assigned[z] {
                        assigned[z] = true;
                        class.push(z);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (g.element_order(c[0]), c.len(), c[0]));

        let reps: Vec<Elem> = classes.iter().map(|c| c[0]).collect();
        let mut class_of = vec![0; n];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let inverse_class = reps.iter().map(|&r| class_of[g.inv(r)]).collect();

        let mut names = Vec::with_capacity(classes.len());
        let mut last_order = 0;
        let mut letter = 0u8;
        for &r in &reps {
            let o = g.element_order(r);
            if o != last_order {
                last_order = o;
                letter = 0;
            }
            names.push(format!("{o}{}", class_letter(letter)));
            letter += 1;
        }

        ClassTable {
            classes,
            reps,
            class_of,
            inverse_class,
            names,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, k: ClassId) -> &[Elem] {
        &self.classes[k]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn rep(&self, k: ClassId) -> Elem {
        self.reps[k]
    }

    pub fn size(&self, k: ClassId) -> usize {
        self.classes[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, g: Elem) -> ClassId {
        self.class_of[g]
    }

    pub fn inverse_class(&self, k: ClassId) -> ClassId {
        self.inverse_class[k]
    }

    pub fn identity_class(&self) -> ClassId {
        self.class_of[IDENTITY]
    }

    /// Names like `1A`, `2A`, `5A`, `5B` in canonical order.
    pub fn name(&self, k: ClassId) -> &str {
        &self.names[k]
    }

    pub fn by_name(&self, name: &str) -> Result<ClassId> {
        let wanted = name.trim().to_ascii_uppercase();
        self.names
            .iter()
            .position(|n| *n == wanted)
            .ok_or_else(|| {
                WordlabError::Validation(format!(
                    "no class named `{name}` (have {})",
                    self.names.join(", ")
                ))
            })
    }

    pub fn info(&self, g: &FiniteGroup) -> Vec<ClassInfo> {
        (0..self.len())
            .map(|k| ClassInfo {
                name: self.names[k].clone(),
                rep: g.describe(self.reps[k]),
                size: self.size(k),
                element_order: g.element_order(self.reps[k]),
            })
            .collect()
    }
}

fn class_letter(mut k: u8) -> String {
    // A..Z, then AA, AB, ...
    let mut s = Vec::new();
    loop {
        s.push(b'A' + k % 26);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;

    #[test]
    fn s3_and_a5_class_sizes() {
        let s3 = catalog_group("S3").unwrap();
        assert_eq!(ClassTable::new(&s3).sizes(), vec![1, 3, 2]);
        let a5 = catalog_group("A5").unwrap();
        let t = ClassTable::new(&a5);
        assert_eq!(t.sizes(), vec![1, 15, 20, 12, 12]);
        let names: Vec<&str> = (0..t.len()).map(|k| t.name(k)).collect();
        assert_eq!(names, ["1A", "2A", "3A", "5A", "5B"]);
        assert_eq!(t.by_name("5b").unwrap(), 4);
        assert!(t.by_name("7A").is_err());
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let c4 = catalog_group("C4").unwrap();
        assert_eq!(ClassTable::new(&c4).sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn partition_and_orbit_stabilizer() {
        for spec in ["S4", "Q8", "D5", "SL(2,3)", "A4"] {
            let g = catalog_group(spec).unwrap();
            let t = ClassTable::new(&g);
            assert_eq!(t.sizes().iter().sum::<usize>(), g.order());
            for k in 0..t.len() {
                assert_eq!(g.order() % t.size(k), 0);
                assert!(t.class(k).contains(&t.rep(k)));
                assert_eq!(t.size(t.inverse_class(k)), t.size(k));
                let c = g.centralizer(&[t.rep(k)]);
                assert_eq!(c.order() * t.size(k), g.order());
            }
        }
    }

    #[test]
    fn letters() {
        assert_eq!(class_letter(0), "A");
        assert_eq!(class_letter(25), "Z");
        assert_eq!(class_letter(26), "AA");
    }
}
