//! Double covers of one-relator surface groups: Reidemeister–Schreier
//! rewriting, abelianisation and lift parity.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{snf, IntMatrix};

/// A generator index with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Cancels adjacent `x x^-1` pairs.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(p) if p.gen == l.gen && p.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| Letter { gen: l.gen, inverse: !l.inverse })
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(Word::reduced).collect();
        GroupPresentation { generators, relators }
    }

    /// `<a1, b1, ..., ag, bg | [a1, b1] ... [ag, bg]>`.
    pub fn standard_surface(g: usize) -> Self {
        let mut gens = Vec::new();
        let mut rel = Vec::new();
        for i in 0..g {
            gens.push(format!("a{}", i + 1));
            gens.push(format!("b{}", i + 1));
            let (a, b) = (2 * i, 2 * i + 1);
            rel.extend([
                Letter { gen: a, inverse: false },
                Letter { gen: b, inverse: false },
                Letter { gen: a, inverse: true },
                Letter { gen: b, inverse: true },
            ]);
        }
        GroupPresentation::new(gens, vec![Word(rel)])
    }

    /// Genus 2 with generators `alpha, beta, gamma, delta` and the relation
    /// `alpha beta alpha^-1 beta^-1 = gamma^-1 delta gamma delta^-1`.
    pub fn genus2_example() -> Self {
        let gens = ["alpha", "beta", "gamma", "delta"].map(String::from).to_vec();
        let mut p = GroupPresentation { generators: gens, relators: vec![] };
        let rel = p.parse_word("alpha beta alpha^-1 beta^-1 delta gamma^-1 delta^-1 gamma").expect("valid word");
        p.relators.push(rel);
        p
    }

    /// Parses space-separated generator names, each optionally followed by
    /// `^-1`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        s.split_whitespace()
            .map(|tok| {
                let (name, inverse) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                self.generators
                    .iter()
                    .position(|g| g == name)
                    .map(|gen| Letter { gen, inverse })
                    .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.0.iter()
            .map(|l| {
                let g = &self.generators[l.gen];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.display_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// The index-2 subgroup `ker(hom)`, `hom: generators -> Z/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCover {
    pub base: GroupPresentation,
    pub hom: Vec<u8>,
}

impl TwoCover {
    pub fn new(base: GroupPresentation, hom: Vec<u8>) -> Result<Self> {
        if hom.len() != base.generators.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} generators",
                hom.len(),
                base.generators.len()
            )));
        }
        let hom: Vec<u8> = hom.into_iter().map(|h| h % 2).collect();
        let cover = TwoCover { base, hom };
        if let Some(i) = cover.base.relators.iter().position(|r| cover.parity(r) != 0) {
            return Err(Error::InvalidHom(i));
        }
        Ok(cover)
    }

    pub fn parity(&self, w: &Word) -> u8 {
        w.0.iter().fold(0, |acc, l| (acc + self.hom[l.gen]) % 2)
    }
}

pub fn lifts_as_loop(w: &Word, c: &TwoCover) -> bool {
    c.parity(w) == 0
}

/// Presentation of the cover by Reidemeister–Schreier with transversal
/// `{1, t}`, `t` the first generator mapping to 1. Schreier generator
/// `(r, x)` stands for `r x rep(r x)^-1`; the trivial one `(1, t)` is dropped.
pub fn cover_presentation(c: &TwoCover) -> Result<GroupPresentation> {
    let t = c
        .hom
        .iter()
        .position(|&h| h == 1)
        .ok_or_else(|| Error::InvalidInput("homomorphism is trivial".into()))?;
    let k = c.base.generators.len();
    let index = |coset: usize, gen: usize| -> Option<usize> {
        let raw = coset * k + gen;
        let trivial = t;
        match raw.cmp(&trivial) {
            std::cmp::Ordering::Less => Some(raw),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(raw - 1),
        }
    };
    let mut names = Vec::with_capacity(2 * k - 1);
    for coset in 0..2 {
        for gen in 0..k {
            if index(coset, gen).is_some() {
                let g = &c.base.generators[gen];
                names.push(if coset == 0 { g.clone() } else { format!("t.{g}") });
            }
        }
    }
    let mut relators = Vec::new();
    for r in &c.base.relators {
        for start in 0..2usize {
            let mut coset = start;
            let mut w = Vec::new();
            for l in &r.0 {
                let h = c.hom[l.gen] as usize;
                if l.inverse {
                    coset = (coset + h) % 2;
                    if let Some(i) = index(coset, l.gen) {
                        w.push(Letter { gen: i, inverse: true });
                    }
                } else {
                    if let Some(i) = index(coset, l.gen) {
                        w.push(Letter { gen: i, inverse: false });
                    }
                    coset = (coset + h) % 2;
                }
            }
            debug_assert_eq!(coset, start);
            relators.push(Word(w));
        }
    }
    Ok(GroupPresentation::new(names, relators))
}

/// Exponent-sum matrix of the relators.
pub fn relation_matrix(p: &GroupPresentation) -> IntMatrix {
    let k = p.generators.len();
    let rows: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; k];
            for l in &r.0 {
                row[l.gen] += if l.inverse { -1 } else { 1 };
            }
            row.into_iter().map(BigInt::from).collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("rectangular")
}

/// Genus of the cover, from the rank of its abelianisation.
pub fn cover_genus(c: &TwoCover) -> Result<u64> {
    let p = cover_presentation(c)?;
    let s = snf(&relation_matrix(&p));
    let torsion = s.torsion();
    if !torsion.is_empty() {
        return Err(Error::Torsion(torsion.iter().map(ToString::to_string).collect()));
    }
    let betti = p.generators.len() - s.rank();
    if betti % 2 != 0 {
        return Err(Error::InvalidInput(format!("odd first Betti number {betti}")));
    }
    Ok(betti as u64 / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_covers() -> (TwoCover, TwoCover) {
        let base = GroupPresentation::genus2_example();
        (
            TwoCover::new(base.clone(), vec![0, 1, 1, 0]).unwrap(),
            TwoCover::new(base, vec![0, 1, 0, 0]).unwrap(),
        )
    }

    #[test]
    fn example_covers_have_genus_three() {
        let (s1, s2) = example_covers();
        assert_eq!(cover_genus(&s1).unwrap(), 3);
        assert_eq!(cover_genus(&s2).unwrap(), 3);
    }

    #[test]
    fn lambda_and_mu_parity() {
        let (s1, s2) = example_covers();
        let lambda = s1
            .base
            .parse_word("gamma beta delta gamma beta alpha^-1 delta gamma beta")
            .unwrap();
        let mu = s1.base.parse_word("alpha beta alpha^-1 beta^-1").unwrap();
        assert!(lifts_as_loop(&lambda, &s1));
        assert!(!lifts_as_loop(&lambda, &s2));
        assert!(lifts_as_loop(&mu, &s1) && lifts_as_loop(&mu, &s2));
    }

    #[test]
    fn riemann_hurwitz() {
        for g in 2..=4usize {
            let base = GroupPresentation::standard_surface(g);
            for mask in 1u32..(1 << (2 * g)) {
                let hom: Vec<u8> = (0..2 * g).map(|i| ((mask >> i) & 1) as u8).collect();
                let c = TwoCover::new(base.clone(), hom).unwrap();
                assert_eq!(cover_genus(&c).unwrap(), 2 * g as u64 - 1);
            }
        }
    }

    #[test]
    fn relator_must_be_killed() {
        let gens = vec!["x".to_string()];
        let p = GroupPresentation::new(gens, vec![Word(vec![Letter { gen: 0, inverse: false }])]);
        assert_eq!(TwoCover::new(p, vec![1]), Err(Error::InvalidHom(0)));
    }

    #[test]
    fn word_reduction() {
        let p = GroupPresentation::standard_surface(1);
        let w = p.parse_word("a1 b1 b1^-1 a1^-1 a1").unwrap();
        assert_eq!(w.reduced(), p.parse_word("a1").unwrap());
        assert_eq!(w.concat(&w.inverse()).reduced(), Word::default());
    }
}
