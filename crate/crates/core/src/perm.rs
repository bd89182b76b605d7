//! Permutations of `{0, …, n-1}` and the disjoint-cycle text format.
//!
//! Products act on the right: `p.then(q)` sends `i` to `q(p(i))`.

use std::fmt;

use crate::error::{Result, WordlabError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is
    /// not a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(WordlabError::Validation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`. The result has
    /// degree `max(degree, largest point + 1)`. `()` and the empty string
    /// both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let max_point = cycles.iter().flatten().copied().max();
        let n = degree.max(max_point.map_or(0, |m| m as usize + 1));
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in &cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if touched[a as usize] {
                    return Err(WordlabError::Validation(format!(
                        "point {a} appears twice in `{text}`"
                    )));
                }
                touched[a as usize] = true;
                images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let bad = |msg: &str| WordlabError::Validation(format!("bad cycle notation `{text}`: {msg}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(bad("expected `(`"));
        }
        let close = rest.find(')').ok_or_else(|| bad("unclosed `(`"))?;
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let point: u32 = tok.parse().map_err(|_| bad(&format!("`{tok}` is not a point")))?;
            if cycle.contains(&point) {
                return Err(bad(&format!("point {point} repeated in a cycle")));
            }
            cycle.push(point);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Reads a generator file: one permutation per line in cycle notation,
/// blank lines and `#` comments ignored. All generators are padded to a
/// common degree.
pub fn parse_generator_file(contents: &str) -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    for line in contents.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        gens.push(Permutation::parse_cycles(line, 0)?);
    }
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1).max(1);
    Ok(gens.into_iter().map(|g| g.extended(degree)).collect())
}
