//! Evaluating words on a finite group and enumerating word maps.

use std::collections::BTreeMap;

use crate::error::{Result, WordlabError};
use crate::group::{Elem, FiniteGroup, Subgroup, IDENTITY};
use crate::word::{Expr, Word};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Limits for exhaustive enumeration over `G^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Maximum number of word evaluations; larger jobs are refused.
    pub budget: u64,
    /// Worker threads. The assignment space is split on the first variable
    /// and partial counts are summed, so results do not depend on this.
    pub jobs: usize,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

impl Enumeration {
    pub fn with_budget(budget: u64) -> Self {
        Enumeration {
            budget,
            ..Default::default()
        }
    }

    pub fn check(&self, group_order: usize, arity: usize) -> Result<u128> {
        let needed = (group_order as u128)
            .checked_pow(arity as u32)
            .unwrap_or(u128::MAX);
        if needed > self.budget as u128 {
            return Err(WordlabError::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(needed)
    }
}

/// Variable bindings for one evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<u32, Elem>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, var: u32, g: Elem) -> Self {
        self.0.insert(var, g);
        self
    }

    pub fn get(&self, var: u32) -> Option<Elem> {
        self.0.get(&var).copied()
    }
}

impl FromIterator<(u32, Elem)> for Assignment {
    fn from_iter<T: IntoIterator<Item = (u32, Elem)>>(iter: T) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// A set of elements of one group, sorted ascending.
#[derive(Clone, Debug)]
pub struct ElementSet<'g> {
    parent: &'g FiniteGroup,
    members: Vec<Elem>,
}

impl<'g> ElementSet<'g> {
    pub fn new(parent: &'g FiniteGroup, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet { parent, members }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Load(usize),
    Inv,
    Pow(i64),
    Mul(usize),
    Comm,
}

/// A word flattened into a postfix program over variable slots, where slot
/// `i` holds the `i`-th entry of [`Word::variables`].
#[derive(Clone, Debug)]
pub struct CompiledWord {
    ops: Vec<Op>,
    arity: usize,
}

impl CompiledWord {
    pub fn new(w: &Word) -> Self {
        let mut ops = Vec::new();
        emit(w.ast(), w.variables(), &mut ops);
        CompiledWord {
            ops,
            arity: w.arity(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Evaluates with `args[i]` bound to slot `i`; `stack` is scratch space.
    pub fn eval(&self, g: &FiniteGroup, args: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Load(i) => stack.push(args[i]),
                Op::Inv => {
                    let x = stack.pop().unwrap();
                    stack.push(g.inv(x));
                }
                Op::Pow(e) => {
                    let x = stack.pop().unwrap();
                    stack.push(g.pow(x, e));
                }
                Op::Mul(n) => {
                    let start = stack.len() - n;
                    let acc = stack[start..].iter().fold(IDENTITY, |acc, &x| g.mul(acc, x));
                    stack.truncate(start);
                    stack.push(acc);
                }
                Op::Comm => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(g.commutator(a, b));
                }
            }
        }
        stack[0]
    }
}

fn emit(e: &Expr, vars: &[u32], ops: &mut Vec<Op>) {
    match e {
        Expr::Var(i) => ops.push(Op::Load(vars.binary_search(i).unwrap())),
        Expr::Inverse(c) => {
            emit(c, vars, ops);
            ops.push(Op::Inv);
        }
        Expr::Power(c, n) => {
            emit(c, vars, ops);
            ops.push(Op::Pow(*n));
        }
        Expr::Product(cs) => {
            cs.iter().for_each(|c| emit(c, vars, ops));
            ops.push(Op::Mul(cs.len()));
        }
        Expr::Commutator(a, b) => {
            emit(a, vars, ops);
            emit(b, vars, ops);
            ops.push(Op::Comm);
        }
    }
}

pub fn evaluate_word(g: &FiniteGroup, w: &Word, a: &Assignment) -> Result<Elem> {
    let mut args = Vec::with_capacity(w.arity());
    for &v in w.variables() {
        let x = a.get(v).ok_or_else(|| WordlabError::MissingBinding(format!("x{v}")))?;
        if x >= g.order() {
            return Err(WordlabError::Validation(format!(
                "element index {x} out of range for {}",
                g.name()
            )));
        }
        args.push(x);
    }
    if let Some(extra) = a.0.keys().find(|v| w.variables().binary_search(v).is_err()) {
        return Err(WordlabError::Validation(format!(
            "x{extra} does not occur in {w}"
        )));
    }
    Ok(CompiledWord::new(w).eval(g, &args, &mut Vec::new()))
}

/// `counts[g]` = number of assignments with `w(assignment) = g`.
pub fn solution_counts(g: &FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<Vec<u64>> {
    cfg.check(g.order(), w.arity())?;
    let prog = CompiledWord::new(w);
    let n = g.order();
    let k = prog.arity();
    if k == 0 {
        let mut counts = vec![0; n];
        counts[prog.eval(g, &[], &mut Vec::new())] = 1;
        return Ok(counts);
    }
    let jobs = cfg.jobs.clamp(1, n);
    if jobs == 1 {
        return Ok(count_block(g, &prog, 0..n));
    }
    let chunk = n.div_ceil(jobs);
    let partials: Vec<Vec<u64>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..n)
            .step_by(chunk)
            .map(|lo| {
                let prog = &prog;
                s.spawn(move || count_block(g, prog, lo..(lo + chunk).min(n)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut counts = vec![0; n];
    for part in partials {
        for (c, p) in counts.iter_mut().zip(part) {
            *c += p;
        }
    }
    Ok(counts)
}

/// Counts over all assignments whose first slot lies in `first`.
fn count_block(g: &FiniteGroup, prog: &CompiledWord, first: std::ops::Range<usize>) -> Vec<u64> {
    let n = g.order();
    let k = prog.arity();
    let mut counts = vec![0u64; n];
    let mut args = vec![0; k];
    let mut stack = Vec::new();
    for a0 in first {
        args[0] = a0;
        args[1..].iter_mut().for_each(|x| *x = 0);
        loop {
            counts[prog.eval(g, &args, &mut stack)] += 1;
            // odometer over slots 1..k
            let mut i = k;
            loop {
                i -= 1;
                if i == 0 {
                    break;
                }
                args[i] += 1;
                if args[i] < n {
                    break;
                }
                args[i] = 0;
            }
            if i == 0 {
                break;
            }
        }
    }
    counts
}

pub fn solution_count(g: &FiniteGroup, w: &Word, target: Elem, cfg: &Enumeration) -> Result<u64> {
    Ok(solution_counts(g, w, cfg)?[target])
}

/// The set `G_w` of all values of `w` on `G`.
pub fn word_image<'g>(g: &'g FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<ElementSet<'g>> {
    let counts = solution_counts(g, w, cfg)?;
    Ok(image_from_counts(g, &counts))
}

pub fn image_from_counts<'g>(g: &'g FiniteGroup, counts: &[u64]) -> ElementSet<'g> {
    let members = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(x, _)| x)
        .collect();
    ElementSet::new(g, members)
}

/// The verbal subgroup `w(G)`, generated by the word's values.
pub fn verbal_subgroup<'g>(g: &'g FiniteGroup, w: &Word, cfg: &Enumeration) -> Result<Subgroup<'g>> {
    let image = word_image(g, w, cfg)?;
    Ok(g.subgroup_generated(image.members()))
}
