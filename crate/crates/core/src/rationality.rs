//! Rationality and weak rationality of a word on one finite group.
//!
//! A word is weakly rational on `G` when its value set is closed under
//! `g ↦ g^e` for `e` prime to `|G|`, and rational when the number of
//! solutions of `w = g` and `w = g^e` agree. Both are decided here for a
//! single group; sweeping a catalog gives evidence, not a proof.

use serde::Serialize;

use crate::error::{Result, WordlabError};
use crate::group::{gcd, Elem, FiniteGroup, IDENTITY};
use crate::word::Word;
use crate::wordmap::{image_from_counts, solution_counts, ElementSet, Enumeration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weak,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g: Elem,
    pub g_cycles: String,
    pub e: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_g: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_ge: Option<u64>,
}

/// Outcome of the same test with `e` restricted to residues prime to `|g|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementOrderVariant {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityVerdict {
    pub mode: Mode,
    pub group: String,
    pub word: String,
    /// Number of distinct word values.
    pub m: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_order_variant: Option<ElementOrderVariant>,
}

/// Replaces `e` (prime to `|g|`) by `e + d`, where `d` is the largest
/// divisor of `|G|` prime to `e`. The result is prime to `|G|` and induces
/// the same power of `g`.
pub fn normalize_exponent(e: u64, order_g: u64, order_group: u64) -> Result<u64> {
    if order_g == 0 || order_group == 0 || !order_group.is_multiple_of(order_g) {
        return Err(WordlabError::Precondition(format!(
            "element order {order_g} must divide group order {order_group}"
        )));
    }
    if gcd(e, order_g) != 1 {
        return Err(WordlabError::Precondition(format!(
            "exponent {e} is not prime to element order {order_g}"
        )));
    }
    let mut d = order_group;
    loop {
        let common = gcd(d, e);
        if common == 1 {
            break;
        }
        d /= common;
    }
    Ok(e + d)
}

fn witness(g: &FiniteGroup, x: Elem, e: u64) -> Witness {
    Witness {
        g: x,
        g_cycles: g.describe(x),
        e,
        count_g: None,
        count_ge: None,
    }
}

/// First `(s, e)` in canonical order with `e` prime to `|s|` and
/// `s^e ∉ set`.
fn first_power_escape(g: &FiniteGroup, set: &[Elem], inside: &[bool]) -> Option<(Elem, u64)> {
    for &s in set {
        let n = g.element_order(s) as u64;
        for e in 1..=n {
            if gcd(e, n) == 1 && !inside[g.pow(s, e as i64)] {
                return Some((s, e));
            }
        }
    }
    None
}

fn membership(g: &FiniteGroup, set: &[Elem]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    for &s in set {
        inside[s] = true;
    }
    inside
}

/// Residues `1 ≤ e ≤ exp(G)` prime to `|G|`; powering is periodic mod
/// `exp(G)` so these cover every such exponent.
pub fn group_coprime_exponents(g: &FiniteGroup) -> Vec<u64> {
    let order = g.order() as u64;
    (1..=g.exponent() as u64).filter(|&e| gcd(e, order) == 1).collect()
}

/// Weak rationality via the element-order criterion: every `g ∈ G_w` and
/// every `e` prime to `|g|` must give `g^e ∈ G_w`.
pub fn weakly_rational_on(g: &FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<RationalityVerdict> {
    let image = crate::wordmap::word_image(g, w, cfg)?;
    Ok(weak_verdict(g, w, &image))
}

pub fn weak_verdict(g: &FiniteGroup, w: &Word, image: &ElementSet<'_>) -> RationalityVerdict {
    let inside = membership(g, image.members());
    let failure = first_power_escape(g, image.members(), &inside);
    RationalityVerdict {
        mode: Mode::Weak,
        group: g.name().to_string(),
        word: w.to_string(),
        m: image.len(),
        holds: failure.is_none(),
        witness: failure.map(|(x, e)| witness(g, x, e)),
        element_order_variant: None,
    }
}

/// Weak rationality straight from the definition: `e` ranges over residues
/// prime to `|G|`. Must agree with [`weakly_rational_on`].
pub fn weakly_rational_by_definition(g: &FiniteGroup, image: &ElementSet<'_>) -> bool {
    let inside = membership(g, image.members());
    let exps = group_coprime_exponents(g);
    image
        .members()
        .iter()
        .all(|&x| exps.iter().all(|&e| inside[g.pow(x, e as i64)]))
}

/// Rationality: `#{w = g} = #{w = g^e}` for every `g` and every `e` prime
/// to `|G|`. The variant with `e` prime to `|g|` is recorded alongside.
pub fn rational_on(g: &FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<RationalityVerdict> {
    let counts = solution_counts(g, w, cfg)?;
    Ok(full_verdict(g, w, &counts))
}

pub fn full_verdict(g: &FiniteGroup, w: &Word, counts: &[u64]) -> RationalityVerdict {
    let exps = group_coprime_exponents(g);
    let by_group_order = (0..g.order()).find_map(|x| {
        exps.iter()
            .copied()
            .find(|&e| counts[x] != counts[g.pow(x, e as i64)])
            .map(|e| (x, e))
    });
    let by_element_order = (0..g.order()).find_map(|x| {
        let n = g.element_order(x) as u64;
        (1..=n)
            .find(|&e| gcd(e, n) == 1 && counts[x] != counts[g.pow(x, e as i64)])
            .map(|e| (x, e))
    });
    let with_counts = |(x, e): (Elem, u64)| Witness {
        count_g: Some(counts[x]),
        count_ge: Some(counts[g.pow(x, e as i64)]),
        ..witness(g, x, e)
    };
    RationalityVerdict {
        mode: Mode::Full,
        group: g.name().to_string(),
        word: w.to_string(),
        m: counts.iter().filter(|&&c| c > 0).count(),
        holds: by_group_order.is_none(),
        witness: by_group_order.map(with_counts),
        element_order_variant: Some(ElementOrderVariant {
            holds: by_element_order.is_none(),
            witness: by_element_order.map(with_counts),
        }),
    }
}

/// Both verdicts from a single enumeration.
pub fn rationality_pair(
    g: &FiniteGroup,
    w: &Word,
    cfg: &Enumeration,
) -> Result<(RationalityVerdict, RationalityVerdict)> {
    let counts = solution_counts(g, w, cfg)?;
    let image = image_from_counts(g, &counts);
    Ok((weak_verdict(g, w, &image), full_verdict(g, w, &counts)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerClosure {
    pub group: String,
    pub size: usize,
    pub power_closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub conjugation_closed: bool,
    pub contains_identity: bool,
}

/// Is `set` closed under `s ↦ s^e` for every `e` prime to `|s|`? Also
/// reports conjugation closure and whether the identity is present.
pub fn power_closed(g: &FiniteGroup, set: &[Elem]) -> PowerClosure {
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    let inside = membership(g, &members);
    let failure = first_power_escape(g, &members, &inside);
    PowerClosure {
        group: g.name().to_string(),
        size: members.len(),
        power_closed: failure.is_none(),
        witness: failure.map(|(x, e)| witness(g, x, e)),
        conjugation_closed: g.is_conjugation_closed(&members),
        contains_identity: inside[IDENTITY],
    }
}
