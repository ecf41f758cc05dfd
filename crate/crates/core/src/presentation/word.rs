use std::fmt;

/// A generator (by index into its presentation) raised to the power ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Self { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Self { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Self { generator: self.generator, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators of a presentation. Not kept reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `g^k`; negative `k` gives inverse letters.
    pub fn power(generator: usize, k: i64) -> Self {
        let letter = if k < 0 { Letter::neg(generator) } else { Letter::pos(generator) };
        Self(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Cyclic rotation starting at position `start`.
    pub fn rotated(&self, start: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = start % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == generator).map(|l| l.sign()).sum()
    }

    pub fn total_exponent(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(a), Some(b)) => self.0.len() == 1 || *a != b.inv(),
                _ => true,
            }
    }

    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn cyclically_reduced(&self) -> Word {
        let w = self.freely_reduced().0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    /// Replaces each occurrence of `generator` by `image` (and its inverse by
    /// `image⁻¹`).
    pub fn substitute(&self, generator: usize, image: &Word) -> Word {
        let inv = image.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.generator == generator {
                out.extend_from_slice(if l.inverse { &inv.0 } else { &image.0 });
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Renders with the given generator names, `a b c^-1` style; runs of a
    /// repeated letter collapse to `a^k`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }

    /// Maximal runs `(letter, length)`.
    pub(crate) fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.0 {
            match runs.last_mut() {
                Some((prev, k)) if *prev == l => *k += 1,
                _ => runs.push((l, 1)),
            }
        }
        runs
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, (l, k)) in self.word.runs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.names[l.generator])?;
            match (l.inverse, k) {
                (false, 1) => {}
                (true, 1) => f.write_str("^-1")?,
                (false, k) => write!(f, "^{k}")?,
                (true, k) => write!(f, "^-{k}")?,
            }
        }
        Ok(())
    }
}
