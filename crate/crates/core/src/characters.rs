//! Character tables by Dixon's method and the class-algebra triple counts
//! they evaluate.
//!
//! Class matrices `M_i[j][k] = #{(x, y) ∈ C_i × C_j : xy = g_k}` commute,
//! and their common eigenvectors over `F_p` (with `p ≡ 1 mod exp(G)`) are
//! the central characters `ω_χ(C_k) = |C_k| χ(g_k) / χ(1)`. Degrees come
//! from the second orthogonality relation, and complex values are recovered
//! from eigenvalue multiplicities of each class representative.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::classes::{ClassId, ClassInfo, ClassTable};
use crate::error::{Result, WordlabError};
use crate::group::{gcd, lcm, FiniteGroup};
use crate::rationality::normalize_exponent;
use crate::modp::{is_prime, PrimeField};

/// Tolerance on imaginary residues and lifted orthogonality.
pub const LIFT_TOLERANCE: f64 = 1e-8;
/// Relative tolerance between the character sum and the exact count.
pub const FORMULA_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrix {
    pub class: ClassId,
    /// `entries[j][k] = #{(x, y) ∈ C_i × C_j : xy = rep_k}`
    pub entries: Vec<Vec<u64>>,
}

#[allow(clippy::needless_range_loop)]
pub fn class_matrix(g: &FiniteGroup, t: &ClassTable, i: ClassId) -> ClassMatrix {
    let r = t.len();
    let mut entries = vec![vec![0u64; r]; r];
    for k in 0..r {
        let target = t.rep(k);
        for &x in t.class(i) {
            let y = g.mul(g.inv(x), target);
            entries[t.class_of(y)][k] += 1;
        }
    }
    ClassMatrix { class: i, entries }
}

/// Smallest prime `p ≡ 1 (mod exp G)` with `p > 2√|G|`.
pub fn dixon_prime(g: &FiniteGroup) -> u64 {
    let m = g.exponent() as u64;
    let order = g.order() as u64;
    (1..)
        .map(|k| k * m + 1)
        .find(|&p| p * p > 4 * order && is_prime(p))
        .unwrap()
}

#[derive(Clone, Debug)]
pub struct ModPCharacterTable {
    pub prime: u64,
    pub primitive_root: u64,
    /// Exponent `m` of the group.
    pub exponent: u64,
    /// `primitive_root^((p-1)/m)`, the image of `exp(2πi/m)`.
    pub root_of_unity: u64,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub inverse_class: Vec<ClassId>,
    /// `power_classes[k][l]` is the class of `rep_k^l` for `0 ≤ l < |rep_k|`.
    pub power_classes: Vec<Vec<ClassId>>,
    /// `values[χ][k]` reduced mod p.
    pub values: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct ComplexCharacterTable {
    pub exponent: u64,
    pub group_order: u64,
    pub degrees: Vec<u64>,
    /// `values[χ][k]`
    pub values: Vec<Vec<Complex64>>,
}

pub fn character_table_mod_p(g: &FiniteGroup, t: &ClassTable) -> Result<ModPCharacterTable> {
    let p = dixon_prime(g);
    let f = PrimeField::new(p);
    let r = t.len();
    let order = g.order() as u64;

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    for i in 0..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        if i == t.identity_class() {
            continue;
        }
        let m = class_matrix(g, t, i).entries;
        let mut next = Vec::with_capacity(r);
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(&f, &m, space, i)?);
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() > 1) {
        return Err(WordlabError::Internal(format!(
            "eigenspace splitting left a space of dimension {} over F_{p}",
            s.len()
        )));
    }

    let sizes: Vec<u64> = t.sizes().iter().map(|&s| s as u64).collect();
    let inverse: Vec<ClassId> = (0..r).map(|k| t.inverse_class(k)).collect();
    let id = t.identity_class();
    let mut chars: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        if v[id] == 0 {
            return Err(WordlabError::Internal("central character vanishes at 1".into()));
        }
        let scale = f.inv(v[id]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        let norm = (0..r).fold(0, |acc, k| {
            let term = f.mul(f.mul(omega[k], omega[inverse[k]]), f.inv(sizes[k] % p));
            f.add(acc, term)
        });
        if norm == 0 {
            return Err(WordlabError::Internal("degenerate central character".into()));
        }
        let deg_sq = f.mul(order % p, f.inv(norm));
        let (deg, _) = f.sqrt(deg_sq).ok_or_else(|| {
            WordlabError::Internal(format!("{deg_sq} is not a square mod {p}"))
        })?;
        if deg == 0 || deg * deg > order {
            return Err(WordlabError::Internal(format!("implausible degree {deg}")));
        }
        let values = (0..r)
            .map(|k| f.mul(f.mul(omega[k], deg), f.inv(sizes[k] % p)))
            .collect();
        chars.push((deg, values));
    }
    chars.sort();
    let degree_sum: u64 = chars.iter().map(|(d, _)| d * d).sum();
    if degree_sum != order {
        return Err(WordlabError::Internal(format!(
            "squared degrees sum to {degree_sum}, group order is {order}"
        )));
    }

    let exponent = g.exponent() as u64;
    let primitive_root = f.primitive_root();
    let power_classes = (0..r)
        .map(|k| {
            let x = t.rep(k);
            (0..g.element_order(x) as i64).map(|l| t.class_of(g.pow(x, l))).collect()
        })
        .collect();
    Ok(ModPCharacterTable {
        prime: p,
        primitive_root,
        exponent,
        root_of_unity: f.pow(primitive_root, (p - 1) / exponent),
        group_order: order,
        class_sizes: sizes,
        inverse_class: inverse,
        power_classes,
        degrees: chars.iter().map(|(d, _)| *d).collect(),
        values: chars.into_iter().map(|(_, v)| v).collect(),
    })
}

/// Splits an `m`-invariant subspace (rows in reduced echelon form) into
/// eigenspaces of `m`.
fn split_space(
    f: &PrimeField,
    m: &[Vec<u64>],
    space: Vec<Vec<u64>>,
    class: ClassId,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = space.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).unwrap())
        .collect();
    // v ∈ space has coordinates v[pivot_t]; m b_s = Σ_t a[t][s] b_t
    let images: Vec<Vec<u64>> = space.iter().map(|b| f.mat_vec(m, b)).collect();
    let a: Vec<Vec<u64>> = (0..d)
        .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
        .collect();

    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..f.modulus() {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|t| {
                (0..d)
                    .map(|s| if s == t { f.sub(a[t][s], lambda) } else { a[t][s] })
                    .collect()
            })
            .collect();
        let ker = f.kernel(&shifted);
        if ker.is_empty() {
            continue;
        }
        let mut rows: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![0; space[0].len()];
                for (s, &cs) in c.iter().enumerate() {
                    for (x, &b) in v.iter_mut().zip(&space[s]) {
                        *x = f.add(*x, f.mul(cs, b));
                    }
                }
                v
            })
            .collect();
        f.rref(&mut rows);
        found += rows.len();
        parts.push(rows);
        if found == d {
            return Ok(parts);
        }
    }
    Err(WordlabError::Internal(format!(
        "class matrix {class} is not diagonalizable on a subspace of dimension {d} (eigenvectors span {found})"
    )))
}

pub fn lift_character_table(t: &ModPCharacterTable) -> Result<ComplexCharacterTable> {
    let f = PrimeField::new(t.prime);
    let mut values = Vec::with_capacity(t.values.len());
    for (chi, row) in t.values.iter().enumerate() {
        let degree = t.degrees[chi];
        let mut lifted = Vec::with_capacity(row.len());
        for powers in &t.power_classes {
            let n = powers.len() as u64;
            let eps = f.pow(t.root_of_unity, t.exponent / n);
            let n_inv = f.inv(n % t.prime);
            let mut value = Complex64::new(0.0, 0.0);
            let mut total = 0;
            for s in 0..n {
                let mut acc = 0;
                for (l, &cls) in powers.iter().enumerate() {
                    let twist = f.pow(eps, (n - s % n) * l as u64 % n);
                    acc = f.add(acc, f.mul(row[cls], twist));
                }
                let mult = f.mul(acc, n_inv);
                if mult > degree {
                    return Err(WordlabError::Internal(format!(
                        "character {chi}: eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                total += mult;
                let angle = 2.0 * PI * s as f64 / n as f64;
                value += Complex64::from_polar(mult as f64, angle);
            }
            if total != degree {
                return Err(WordlabError::Internal(format!(
                    "character {chi}: multiplicities sum to {total}, degree is {degree}"
                )));
            }
            lifted.push(value);
        }
        values.push(lifted);
    }
    Ok(ComplexCharacterTable {
        exponent: t.exponent,
        group_order: t.group_order,
        degrees: t.degrees.clone(),
        values,
    })
}

impl ModPCharacterTable {
    /// `Σ_k |C_k| χ(k) ψ(k⁻¹) = |G| δ` exactly in `F_p`.
    pub fn rows_orthogonal(&self) -> bool {
        let f = PrimeField::new(self.prime);
        let order = self.group_order % self.prime;
        self.values.iter().enumerate().all(|(a, chi)| {
            self.values.iter().enumerate().all(|(b, psi)| {
                let s = (0..chi.len()).fold(0, |acc, k| {
                    let term = f.mul(self.class_sizes[k], f.mul(chi[k], psi[self.inverse_class[k]]));
                    f.add(acc, term)
                });
                s == if a == b { order } else { 0 }
            })
        })
    }
}

impl ComplexCharacterTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, chi: usize, k: ClassId) -> Complex64 {
        self.values[chi][k]
    }

    /// Largest deviation of `Σ_k |C_k| χ(k) conj(ψ(k)) / |G|` from `δ`.
    pub fn orthogonality_error(&self, sizes: &[usize]) -> f64 {
        let order = self.group_order as f64;
        let mut worst: f64 = 0.0;
        for (a, chi) in self.values.iter().enumerate() {
            for (b, psi) in self.values.iter().enumerate() {
                let s: Complex64 = (0..sizes.len())
                    .map(|k| chi[k] * psi[k].conj() * sizes[k] as f64)
                    .sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((s / order - expected).norm());
            }
        }
        worst
    }

    /// Largest `|χ(k⁻¹) - conj χ(k)|`.
    pub fn conjugation_error(&self, t: &ClassTable) -> f64 {
        self.values
            .iter()
            .flat_map(|row| (0..row.len()).map(move |k| (row[t.inverse_class(k)] - row[k].conj()).norm()))
            .fold(0.0, f64::max)
    }
}

/// `N(D, C, C⁻¹) = #{(a, b, c) ∈ D⁻¹ × C⁻¹ × C : abc = 1}`, counted as
/// `|D|` times the number of `(b, c)` with `bc` equal to a fixed element
/// of `D`.
pub fn triple_count_brute(g: &FiniteGroup, t: &ClassTable, d: ClassId, c: ClassId) -> u64 {
    let d_inv = t.inverse_class(d);
    let target = g.inv(t.rep(d_inv));
    let c_inv = t.inverse_class(c);
    let pairs = t
        .class(c_inv)
        .iter()
        .filter(|&&b| t.class_of(g.mul(g.inv(b), target)) == c)
        .count() as u64;
    t.size(d) as u64 * pairs
}

/// `(|C|² |D| / |G|) Σ_χ χ(g⁻¹) χ(b) χ(b⁻¹) / χ(1)` with `g ∈ D`, `b ∈ C⁻¹`.
pub fn triple_count_formula(
    ct: &ComplexCharacterTable,
    t: &ClassTable,
    d: ClassId,
    c: ClassId,
) -> Result<f64> {
    let g_inv = t.inverse_class(d);
    let b = t.inverse_class(c);
    let b_inv = c;
    let sum: Complex64 = (0..ct.len())
        .map(|chi| ct.value(chi, g_inv) * ct.value(chi, b) * ct.value(chi, b_inv) / ct.degrees[chi] as f64)
        .sum();
    let prefactor = (t.size(c) * t.size(c) * t.size(d)) as f64 / ct.group_order as f64;
    let n = sum * prefactor;
    if n.im.abs() > LIFT_TOLERANCE {
        return Err(WordlabError::Internal(format!(
            "character sum has imaginary residue {:e}",
            n.im
        )));
    }
    Ok(n.re)
}

/// Class of `rep^e` for each class, checked on every member.
pub fn class_power_map(g: &FiniteGroup, t: &ClassTable, e: i64) -> Result<Vec<ClassId>> {
    if gcd(e.unsigned_abs(), g.order() as u64) != 1 {
        return Err(WordlabError::Precondition(format!(
            "exponent {e} is not prime to |G| = {}",
            g.order()
        )));
    }
    (0..t.len())
        .map(|k| {
            let image = t.class_of(g.pow(t.rep(k), e));
            if t.class(k).iter().any(|&x| t.class_of(g.pow(x, e)) != image) {
                return Err(WordlabError::Internal(format!(
                    "power map x ↦ x^{e} is not constant on class {}",
                    t.name(k)
                )));
            }
            Ok(image)
        })
        .collect()
}

/// Whether a real formula value matches an exact count.
pub fn formula_agrees(formula: f64, exact: u64) -> bool {
    let exact_f = exact as f64;
    (formula - exact_f).abs() < FORMULA_TOLERANCE * exact_f.max(1.0) && formula.round() as u64 == exact
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TripleCountReport {
    pub group: String,
    pub d: String,
    pub c: String,
    pub e: i64,
    /// Exponent prime to `|G|` with the same action on `D` and `C`.
    pub e_effective: i64,
    pub d_e: String,
    pub c_e: String,
    pub n_brute: u64,
    pub n_brute_e: u64,
    pub n_formula: f64,
    pub n_formula_e: f64,
    pub formula_matches: bool,
    pub galois_invariant: bool,
    pub holds: bool,
}

/// A group together with its classes and both forms of its character table.
#[derive(Clone, Debug)]
pub struct GroupCharacters<'g> {
    pub group: &'g FiniteGroup,
    pub classes: ClassTable,
    pub mod_p: ModPCharacterTable,
    pub table: ComplexCharacterTable,
}

impl<'g> GroupCharacters<'g> {
    pub fn new(group: &'g FiniteGroup) -> Result<Self> {
        let classes = ClassTable::new(group);
        let mod_p = character_table_mod_p(group, &classes)?;
        let table = lift_character_table(&mod_p)?;
        Ok(GroupCharacters {
            group,
            classes,
            mod_p,
            table,
        })
    }

    pub fn triple_count_brute(&self, d: ClassId, c: ClassId) -> u64 {
        triple_count_brute(self.group, &self.classes, d, c)
    }

    pub fn triple_count_formula(&self, d: ClassId, c: ClassId) -> Result<f64> {
        triple_count_formula(&self.table, &self.classes, d, c)
    }

    /// Compares `N(D, C, C⁻¹)` with `N(D^e, C^e, C^{-e})`, each computed
    /// both by brute force and by the character sum.
    ///
    /// `e` only has to be prime to the orders of the two representatives;
    /// it is replaced by an exponent prime to `|G|` inducing the same powers
    /// on them (see [`normalize_exponent`]).
    pub fn galois_check(&self, d: ClassId, c: ClassId, e: i64) -> Result<TripleCountReport> {
        if e < 1 {
            return Err(WordlabError::Precondition(format!("exponent {e} must be positive")));
        }
        let g = self.group;
        let local = lcm(
            g.element_order(self.classes.rep(d)),
            g.element_order(self.classes.rep(c)),
        );
        let effective = normalize_exponent(e as u64, local as u64, g.order() as u64)?;
        let effective = if gcd(e as u64, g.order() as u64) == 1 {
            e
        } else {
            effective as i64
        };
        let power = class_power_map(g, &self.classes, effective)?;
        let (de, ce) = (power[d], power[c]);
        let n_brute = self.triple_count_brute(d, c);
        let n_brute_e = self.triple_count_brute(de, ce);
        let n_formula = self.triple_count_formula(d, c)?;
        let n_formula_e = self.triple_count_formula(de, ce)?;
        let formula_matches = formula_agrees(n_formula, n_brute) && formula_agrees(n_formula_e, n_brute_e);
        let galois_invariant = n_brute == n_brute_e;
        let name = |k: ClassId| self.classes.name(k).to_string();
        Ok(TripleCountReport {
            group: self.group.name().to_string(),
            d: name(d),
            c: name(c),
            e,
            e_effective: effective,
            d_e: name(de),
            c_e: name(ce),
            n_brute,
            n_brute_e,
            n_formula,
            n_formula_e,
            formula_matches,
            galois_invariant,
            holds: formula_matches && galois_invariant,
        })
    }

    pub fn export(&self, include_mod_p: bool) -> CharacterTableExport {
        CharacterTableExport {
            group: self.group.name().to_string(),
            order: self.group.order(),
            exponent: self.table.exponent,
            root_convention: format!("zeta = exp(2*pi*i/{})", self.table.exponent),
            classes: self.classes.info(self.group),
            degrees: self.table.degrees.clone(),
            values: self
                .table
                .values
                .iter()
                .map(|row| row.iter().map(|z| ComplexValue { re: clean(z.re), im: clean(z.im) }).collect())
                .collect(),
            mod_p: include_mod_p.then(|| ModPDump {
                prime: self.mod_p.prime,
                primitive_root: self.mod_p.primitive_root,
                root_of_unity: self.mod_p.root_of_unity,
                values: self.mod_p.values.clone(),
            }),
        }
    }
}

/// Rounds away float noise so exported tables are stable across platforms.
fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModPDump {
    pub prime: u64,
    pub primitive_root: u64,
    pub root_of_unity: u64,
    pub values: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterTableExport {
    pub group: String,
    pub order: usize,
    pub exponent: u64,
    pub root_convention: String,
    pub classes: Vec<ClassInfo>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<ComplexValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod_p: Option<ModPDump>,
}
