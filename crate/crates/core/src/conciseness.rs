//! Bounding `|w(G)|` in terms of the number `m` of word values.
//!
//! [`lemma_concise_report`] runs each step of the bound on a concrete
//! group: the conjugation action on the value set, the index of the
//! centralizer of `W = w(G)`, the derived subgroup of `W`, and, when `W`
//! is abelian, the totient bound on element orders.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Result, WordlabError};
use crate::group::{euler_phi, Elem, FiniteGroup};
use crate::rationality::{rationality_pair, RationalityVerdict};
use crate::word::{gamma_power_word, Word};
use crate::wordmap::{word_image, Enumeration};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
    /// False when the value is only recorded for inspection.
    pub asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueOrder {
    pub element: Elem,
    pub order: u64,
    pub phi: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConciseReport {
    pub group: String,
    pub word: String,
    pub m: usize,
    pub verbal_order: usize,
    pub centralizer_order: usize,
    pub centralizer_index: usize,
    pub kernel_order: usize,
    pub m_factorial: String,
    pub center_of_w_order: usize,
    pub derived_order: usize,
    pub w_abelian: bool,
    pub values: Vec<ValueOrder>,
    pub max_phi: u64,
    pub l_of_m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_bound: Option<String>,
    pub inequalities: Vec<Inequality>,
    pub passes: bool,
}

/// `L(m) = max { n : φ(n) ≤ m }`, by scanning `n ≤ 2m² + 2`.
pub fn totient_ceiling(m: u64) -> u64 {
    let limit = 2 * m * m + 2;
    (1..=limit).filter(|&n| euler_phi(n) <= m).max().unwrap_or(1)
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::from(1u32), |acc, k| acc * k)
}

pub fn lemma_concise_report(g: &FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<ConciseReport> {
    let image = word_image(g, w, cfg)?;
    let values = image.members();
    let m = values.len();
    let verbal = g.subgroup_generated(values);
    let centralizer = g.centralizer(verbal.members());

    // G acting on the value set by conjugation, as permutations of positions
    let mut kernel = Vec::new();
    for x in 0..g.order() {
        let mut moved = false;
        for (pos, &s) in values.iter().enumerate() {
            let image_pos = values.binary_search(&g.conj(s, x)).map_err(|_| {
                WordlabError::Internal(format!("value set of {w} is not conjugation-closed"))
            })?;
            moved |= image_pos != pos;
        }
        if !moved {
            kernel.push(x);
        }
    }
    let kernel_ok = kernel.as_slice() == centralizer.members();

    let center_of_w: Vec<Elem> = verbal
        .members()
        .iter()
        .copied()
        .filter(|&x| centralizer.contains(x))
        .collect();
    let derived = g.derived_of(&verbal);
    let w_abelian = derived.is_trivial();

    let orders: Vec<ValueOrder> = values
        .iter()
        .map(|&x| {
            let order = g.element_order(x) as u64;
            ValueOrder {
                element: x,
                order,
                phi: euler_phi(order),
            }
        })
        .collect();
    let max_phi = orders.iter().map(|v| v.phi).max().unwrap_or(1);
    let l_of_m = totient_ceiling(m as u64);
    let m_fact = factorial(m as u64);
    let final_bound = BigUint::from(l_of_m).pow(m as u32);

    let mut inequalities = vec![
        Inequality {
            name: "kernel of conjugation on G_w equals C_G(W)".into(),
            lhs: kernel.len().to_string(),
            relation: "==".into(),
            rhs: centralizer.order().to_string(),
            holds: kernel_ok,
            asserted: true,
        },
        Inequality {
            name: "|G : C_G(W)| <= m!".into(),
            lhs: centralizer.index().to_string(),
            relation: "<=".into(),
            rhs: m_fact.to_string(),
            holds: BigUint::from(centralizer.index()) <= m_fact,
            asserted: true,
        },
        Inequality {
            name: "|W : Z(W)| <= m!".into(),
            lhs: (verbal.order() / center_of_w.len()).to_string(),
            relation: "<=".into(),
            rhs: m_fact.to_string(),
            holds: BigUint::from(verbal.order() / center_of_w.len()) <= m_fact,
            asserted: true,
        },
        Inequality {
            name: "max phi(|g|) over g in G_w <= m".into(),
            lhs: max_phi.to_string(),
            relation: "<=".into(),
            rhs: m.to_string(),
            holds: max_phi <= m as u64,
            asserted: w_abelian,
        },
    ];
    if w_abelian {
        inequalities.push(Inequality {
            name: "|W| <= L(m)^m".into(),
            lhs: verbal.order().to_string(),
            relation: "<=".into(),
            rhs: final_bound.to_string(),
            holds: BigUint::from(verbal.order()) <= final_bound,
            asserted: true,
        });
    }
    let passes = inequalities.iter().all(|i| i.holds || !i.asserted);

    Ok(ConciseReport {
        group: g.name().to_string(),
        word: w.to_string(),
        m,
        verbal_order: verbal.order(),
        centralizer_order: centralizer.order(),
        centralizer_index: centralizer.index(),
        kernel_order: kernel.len(),
        m_factorial: m_fact.to_string(),
        center_of_w_order: center_of_w.len(),
        derived_order: derived.order(),
        w_abelian,
        values: orders,
        max_phi,
        l_of_m,
        final_bound: w_abelian.then(|| final_bound.to_string()),
        inequalities,
        passes,
    })
}

impl ConciseReport {
    /// One inequality per line.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  word {}  m = {}  |W| = {}  |W'| = {}  L(m) = {}\n",
            self.group, self.word, self.m, self.verbal_order, self.derived_order, self.l_of_m
        );
        let width = self.inequalities.iter().map(|i| i.name.len()).max().unwrap_or(0);
        for i in &self.inequalities {
            let status = match (i.asserted, i.holds) {
                (false, _) => "INFO",
                (true, true) => "PASS",
                (true, false) => "FAIL",
            };
            let _ = writeln!(
                out,
                "{status}  {:width$}  {} {} {}",
                i.name, i.lhs, i.relation, i.rhs
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamReport {
    pub group: String,
    pub word: String,
    pub m: usize,
    pub verbal_order: usize,
    /// `(m-1)^(m-1)`, with `0^0 = 1`.
    pub bound: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `|w(G)| ≤ (m-1)^(m-1)` for a multilinear commutator word with `m`
/// values. Numbers are reported as computed; no reinterpretation of `m`.
pub fn fam_bound_check(g: &FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<FamReport> {
    if !w.is_multilinear_commutator() {
        return Err(WordlabError::Classification(format!(
            "{w} uses powers, products or repeated variables"
        )));
    }
    let image = word_image(g, w, cfg)?;
    let m = image.len();
    let verbal = g.subgroup_generated(image.members());
    let bound = BigUint::from(m - 1).pow(m as u32 - 1);
    Ok(FamReport {
        group: g.name().to_string(),
        word: w.to_string(),
        m,
        verbal_order: verbal.order(),
        holds: BigUint::from(verbal.order()) <= bound,
        bound: bound.to_string(),
        note: (m == 1).then(|| "degenerate: only the identity is a value".to_string()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryEntry {
    pub group: String,
    pub order: usize,
    pub checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak: Option<RationalityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full: Option<RationalityVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub exponents: Vec<u32>,
    pub word: String,
    pub groups: Vec<CorollaryEntry>,
    /// Conjunction of the full verdicts over checked groups.
    pub aggregate: bool,
    pub scope: String,
}

impl CorollaryReport {
    pub fn failures(&self) -> impl Iterator<Item = &CorollaryEntry> {
        self.groups
            .iter()
            .filter(|e| e.full.as_ref().is_some_and(|v| !v.holds))
    }
}

/// Runs both rationality tests for `[…[x1^n1, x2]^n2, …, xk]^nk` on each
/// group. Groups over the enumeration budget are skipped and marked.
pub fn corollary_check(
    exponents: &[u32],
    groups: &[FiniteGroup],
    cfg: &Enumeration,
) -> Result<CorollaryReport> {
    let w = gamma_power_word(exponents)?;
    let mut entries = Vec::with_capacity(groups.len());
    for g in groups {
        let entry = match rationality_pair(g, &w, cfg) {
            Ok((weak, full)) => CorollaryEntry {
                group: g.name().to_string(),
                order: g.order(),
                checked: true,
                skipped_reason: None,
                weak: Some(weak),
                full: Some(full),
            },
            Err(e @ WordlabError::BudgetExceeded { .. }) => CorollaryEntry {
                group: g.name().to_string(),
                order: g.order(),
                checked: false,
                skipped_reason: Some(e.to_string()),
                weak: None,
                full: None,
            },
            Err(e) => return Err(e),
        };
        entries.push(entry);
    }
    let aggregate = entries.iter().filter_map(|e| e.full.as_ref()).all(|v| v.holds);
    Ok(CorollaryReport {
        exponents: exponents.to_vec(),
        word: w.to_string(),
        groups: entries,
        aggregate,
        scope: "per-group exhaustive checks on the listed groups; evidence, not a proof".into(),
    })
}
