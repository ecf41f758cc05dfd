//! Finite group presentations: LOG-presentations, power quotients, braid
//! quotients, abelianization and Reidemeister–Schreier kernels.

mod schreier;
mod snf;
mod word;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::log::LabeledOrientedGraph;

pub use schreier::reidemeister_schreier_kernel;
pub use snf::{smith_normal_form, SmithForm};
pub use word::{Letter, Word, WordDisplay};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("relator {relator} uses generator index {generator}, out of range")]
    GeneratorOutOfRange { relator: usize, generator: usize },
    #[error("exponent must be at least 1, got {0}")]
    InvalidExponent(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("relator {relator} has exponent sum {sum}, not divisible by {n}")]
    NotInKernelMap { relator: usize, sum: i64, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Generators and relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if seen.insert(g.as_str(), i).is_some() {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| l.generator >= generators.len()) {
                return Err(PresentationError::GeneratorOutOfRange { relator: i, generator: l.generator });
            }
        }
        Ok(Self { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Relators freely and cyclically reduced, empty ones dropped.
    pub fn cyclically_reduced_relators(&self) -> Vec<Word> {
        self.relators.iter().map(Word::cyclically_reduced).filter(|w| !w.is_empty()).collect()
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        w.display_with(&self.generators)
    }

    /// Plain format: one `gen:` line, then one `rel:` line per relator.
    pub fn to_plain(&self) -> String {
        let mut out = String::from("gen:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str(&format!("rel: {}\n", self.display_word(r)));
        }
        out
    }

    /// GAP input: a free group on the generator names and the quotient by the
    /// relators, written with `F.i` so that arbitrary names survive.
    pub fn to_algebra(&self) -> String {
        let names: Vec<String> = self.generators.iter().map(|g| format!("{g:?}")).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                if r.is_empty() {
                    return "One(F)".to_string();
                }
                r.runs()
                    .into_iter()
                    .map(|(l, k)| {
                        let exp = if l.inverse { -(k as i64) } else { k as i64 };
                        if exp == 1 {
                            format!("F.{}", l.generator + 1)
                        } else {
                            format!("F.{}^{}", l.generator + 1, exp)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        format!("F := FreeGroup({});;\nG := F / [ {} ];;\n", names.join(", "), rels.join(", "))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.display_word(r).to_string()).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

/// Parses the plain format written by [`Presentation::to_plain`]. Letters are
/// `x`, `x^-1` or `x^k` for any integer `k`; `#` lines are comments.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        let err = |message: String| PresentationError::Parse { line: lineno, message };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gen:") {
            if generators.is_some() {
                return Err(err("second `gen:` line".into()));
            }
            generators = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let gens = generators.as_ref().ok_or_else(|| err("`rel:` before `gen:`".into()))?;
            let mut letters = Vec::new();
            for token in rest.split_whitespace() {
                if token == "1" {
                    continue;
                }
                let (name, exp) = match token.split_once('^') {
                    Some((name, e)) => {
                        let k: i64 = e.parse().map_err(|_| err(format!("bad exponent in {token:?}")))?;
                        (name, k)
                    }
                    None => (token, 1),
                };
                let g =
                    gens.iter().position(|x| x == name).ok_or_else(|| err(format!("unknown generator {name:?}")))?;
                letters.extend(Word::power(g, exp).0);
            }
            relators.push(Word::new(letters));
        } else {
            return Err(err(format!("expected `gen:` or `rel:`, found {raw:?}")));
        }
    }
    let generators = generators.ok_or(PresentationError::Parse { line: 0, message: "missing `gen:` line".into() })?;
    Presentation::new(generators, relators)
}

/// One generator per vertex and relator `a b c⁻¹ b⁻¹` per edge `(a|b|c)`.
pub fn log_presentation(g: &LabeledOrientedGraph) -> Presentation {
    let relators = g
        .edges()
        .iter()
        .map(|e| {
            Word::new(vec![Letter::pos(e.source), Letter::pos(e.label), Letter::neg(e.target), Letter::neg(e.label)])
        })
        .collect();
    Presentation { generators: g.vertices().to_vec(), relators }
}

/// Appends the relator `xⁿ`.
pub fn with_power(p: &Presentation, x: &str, n: i64) -> Result<Presentation, PresentationError> {
    let g = p.generator(x).ok_or_else(|| PresentationError::UnknownGenerator(x.to_string()))?;
    if n < 1 {
        return Err(PresentationError::InvalidExponent(n));
    }
    let mut q = p.clone();
    q.relators.push(Word::power(g, n));
    Ok(q)
}

/// Artin presentation of the braid group on `m` strands with `σ₁ⁿ = 1`
/// added. Generators are named `s1 .. s{m-1}`.
pub fn braid_quotient(m: usize, n: i64) -> Result<Presentation, PresentationError> {
    if m < 2 {
        return Err(PresentationError::InvalidParameter(format!("braid group needs m >= 2, got {m}")));
    }
    if n < 1 {
        return Err(PresentationError::InvalidExponent(n));
    }
    let k = m - 1;
    let generators = (1..=k).map(|i| format!("s{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..k.saturating_sub(1) {
        let j = i + 1;
        relators.push(Word::new(vec![
            Letter::pos(i),
            Letter::pos(j),
            Letter::pos(i),
            Letter::neg(j),
            Letter::neg(i),
            Letter::neg(j),
        ]));
    }
    for i in 0..k {
        for j in i + 2..k {
            relators.push(Word::new(vec![Letter::pos(i), Letter::pos(j), Letter::neg(i), Letter::neg(j)]));
        }
    }
    relators.push(Word::power(0, n));
    Ok(Presentation { generators, relators })
}

/// Invariants of a finitely generated abelian group: `ℤ^free_rank ⊕ ⊕ ℤ/dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    /// d₁ | d₂ | …, each greater than one.
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(small) => seq.serialize_element(&small)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// `ℤ_n` for a single cyclic factor `n`.
    pub fn is_cyclic_of_order(&self, n: u64) -> bool {
        self.free_rank == 0 && self.torsion == [BigInt::from(n)]
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<BigInt>> {
    p.relators.iter().map(|r| (0..p.rank()).map(|g| BigInt::from(r.exponent_sum(g))).collect()).collect()
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let form = smith_normal_form(&relation_matrix(p));
    let torsion = form.diagonal.iter().filter(|d| !d.is_one()).map(|d| d.abs()).filter(|d| !d.is_zero()).collect();
    AbelianInvariants { torsion, free_rank: p.rank() - form.rank }
}
