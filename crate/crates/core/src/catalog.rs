//! Named groups: `C<n>`, `D<n>` (dihedral of order 2n), `S<n>`, `A<n>`,
//! `Q8`, `SL(2,3)` and `PSL(2,<p>)` for odd primes `p`.
//!
//! | spec        | degree | action                              |
//! |-------------|--------|-------------------------------------|
//! | `C<n>`      | n      | n-cycle                             |
//! | `D<n>`      | n      | symmetries of the n-gon (n ≥ 3)     |
//! | `S<n>`      | n      | natural                             |
//! | `A<n>`      | n      | natural                             |
//! | `Q8`        | 8      | right regular                       |
//! | `SL(2,3)`   | 8      | nonzero vectors of F₃²              |
//! | `PSL(2,p)`  | p + 1  | projective line                     |

use crate::error::{Result, WordlabError};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

/// The groups that the verification suites sweep over, smallest first.
pub const STANDARD_CATALOG: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "D3", "S3", "C8", "D4", "Q8", "D5", "C12", "D6", "A4",
    "D10", "SL(2,3)", "S4", "A5", "PSL(2,5)", "PSL(2,7)",
];

pub fn catalog_group(spec: &str) -> Result<FiniteGroup> {
    catalog_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn catalog_group_with_cap(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let name: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || WordlabError::UnknownGroup(spec.to_string());
    let gens = if name == "Q8" {
        quaternion_gens()
    } else if name == "SL(2,3)" {
        sl23_gens()
    } else if let Some(p) = name.strip_prefix("PSL(2,").and_then(|r| r.strip_suffix(')')) {
        let p: u32 = p.parse().map_err(|_| unknown())?;
        if p < 3 || !is_prime(p) {
            return Err(unknown());
        }
        psl2_gens(p)
    } else {
        let (kind, n) = name.split_at(1.min(name.len()));
        let n: u32 = n.parse().map_err(|_| unknown())?;
        if n == 0 || n > 64 {
            return Err(unknown());
        }
        match kind {
            "C" => vec![cycle_perm(n, 0..n)],
            "D" => dihedral_gens(n),
            "S" => symmetric_gens(n),
            "A" => alternating_gens(n),
            _ => return Err(unknown()),
        }
    };
    FiniteGroup::build_with_cap(&gens, &name, cap)
}

fn cycle_perm(degree: u32, points: impl IntoIterator<Item = u32>) -> Permutation {
    let points: Vec<u32> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree).collect();
    for (k, &a) in points.iter().enumerate() {
        images[a as usize] = points[(k + 1) % points.len()];
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

fn dihedral_gens(n: u32) -> Vec<Permutation> {
    match n {
        1 => vec![cycle_perm(2, [0, 1])],
        2 => vec![cycle_perm(4, [0, 1]), cycle_perm(4, [2, 3])],
        _ => {
            let rotation = cycle_perm(n, 0..n);
            let reflection =
                Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
            vec![rotation, reflection]
        }
    }
}

fn symmetric_gens(n: u32) -> Vec<Permutation> {
    if n == 1 {
        return vec![Permutation::identity(1)];
    }
    vec![cycle_perm(n, 0..n), cycle_perm(n, [0, 1])]
}

fn alternating_gens(n: u32) -> Vec<Permutation> {
    if n < 3 {
        return vec![Permutation::identity(n as usize)];
    }
    let long = if n % 2 == 1 {
        cycle_perm(n, 0..n)
    } else {
        cycle_perm(n, 1..n)
    };
    vec![cycle_perm(n, [0, 1, 2]), long]
}

/// Quaternion units `±1, ±i, ±j, ±k` encoded as `sign * 4 + unit`.
fn quaternion_gens() -> Vec<Permutation> {
    // unit products: TABLE[a][b] = (sign, unit) for units 1,i,j,k.
    const TABLE: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let times = |x: u32, y: u32| {
        let (sx, ux) = (x / 4, x % 4);
        let (sy, uy) = (y / 4, y % 4);
        let (s, u) = TABLE[ux as usize][uy as usize];
        ((sx + sy + s) % 2) * 4 + u
    };
    [1u32, 2]
        .iter()
        .map(|&g| Permutation::from_images((0..8).map(|x| times(x, g)).collect()).unwrap())
        .collect()
}

/// SL(2,3) acting on the eight nonzero vectors of F₃².
fn sl23_gens() -> Vec<Permutation> {
    let vectors: Vec<(u32, u32)> = (0..9)
        .map(|v| (v / 3, v % 3))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    let index = |v: (u32, u32)| vectors.iter().position(|&w| w == v).unwrap() as u32;
    let act = |m: [[u32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| index(((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)))
            .collect();
        Permutation::from_images(images).unwrap()
    };
    vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]
}

/// PSL(2,p) on the projective line `{0, …, p-1, ∞}` with `∞ = p`,
/// generated by `z ↦ z + 1` and `z ↦ -1/z`.
fn psl2_gens(p: u32) -> Vec<Permutation> {
    let inf = p;
    let translate = (0..=p).map(|z| if z == inf { inf } else { (z + 1) % p }).collect();
    let invert = (0..=p)
        .map(|z| {
            if z == inf {
                0
            } else if z == 0 {
                inf
            } else {
                (p - mod_inverse(z, p)) % p
            }
        })
        .collect();
    vec![
        Permutation::from_images(translate).unwrap(),
        Permutation::from_images(invert).unwrap(),
    ]
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| (a as u64 * b as u64) % p as u64 == 1).unwrap()
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassTable;

    fn order_and_classes(spec: &str) -> (usize, usize) {
        let g = catalog_group(spec).unwrap();
        (g.order(), ClassTable::new(&g).len())
    }

    #[test]
    fn standard_orders() {
        assert_eq!(order_and_classes("S3"), (6, 3));
        assert_eq!(order_and_classes("Q8"), (8, 5));
        assert_eq!(order_and_classes("D4"), (8, 5));
        assert_eq!(order_and_classes("D5"), (10, 4));
        assert_eq!(order_and_classes("A4"), (12, 4));
        assert_eq!(order_and_classes("SL(2,3)"), (24, 7));
        assert_eq!(order_and_classes("S4"), (24, 5));
        assert_eq!(order_and_classes("A5"), (60, 5));
        assert_eq!(order_and_classes("PSL(2,5)"), (60, 5));
        assert_eq!(order_and_classes("PSL(2,7)"), (168, 6));
        assert_eq!(order_and_classes("C1"), (1, 1));
        assert_eq!(order_and_classes("D1"), (2, 2));
        assert_eq!(order_and_classes("D2"), (4, 4));
    }

    #[test]
    fn psl_order_formula() {
        for p in [3u32, 5, 7, 11] {
            let g = catalog_group(&format!("PSL(2,{p})")).unwrap();
            assert_eq!(g.order() as u32, p * (p * p - 1) / 2);
            assert_eq!(g.degree() as u32, p + 1);
        }
    }

    #[test]
    fn q8_structure() {
        let q8 = catalog_group("Q8").unwrap();
        let involutions: Vec<_> = (0..8).filter(|&g| q8.element_order(g) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert_eq!((0..8).filter(|&g| q8.element_order(g) == 4).count(), 6);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn rejects_unknown_and_oversized() {
        for bad in ["NOSUCH", "", "X3", "C0", "PSL(2,4)", "PSL(2,x)", "S"] {
            assert!(matches!(catalog_group(bad), Err(WordlabError::UnknownGroup(_))), "{bad}");
        }
        assert_eq!(
            catalog_group("S7").unwrap_err(),
            WordlabError::SizeLimit { cap: DEFAULT_ORDER_CAP }
        );
        assert_eq!(catalog_group_with_cap("S7", 5040).unwrap().order(), 5040);
    }

    #[test]
    fn catalog_builds_in_increasing_order() {
        let orders: Vec<usize> = STANDARD_CATALOG
            .iter()
            .map(|s| catalog_group(s).unwrap().order())
            .collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]), "{orders:?}");
    }
}
