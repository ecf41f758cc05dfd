//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! A closed table certifies the group order. Running out of room is reported
//! as [`EnumerationResult::Exceeded`], which carries no conclusion about
//! finiteness.
//!
//! Columns are laid out as `2g` for generator `g` and `2g + 1` for `g⁻¹`.
//! The engine is the coincidence procedure with forwarding pointers (merged
//! cosets point at the smaller survivor); dead rows are squeezed out whenever
//! the table fills up, so memory stays bounded by `max_cosets`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::presentation::{Letter, Presentation};

pub const DEFAULT_MAX_COSETS: usize = 100_000;
/// Environment variable overriding [`DEFAULT_MAX_COSETS`].
pub const MAX_COSETS_ENV: &str = "LOGKIT_MAX_COSETS";

const NONE: u32 = u32::MAX;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset table is not closed")]
    NotClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Strategy {
    /// Relator-based (Haselgrove–Leech–Trotter) with lookahead when full.
    #[default]
    Hlt,
    /// Definition-by-definition with deduction processing.
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Ceiling on simultaneously live cosets.
    pub max_cosets: usize,
    /// Ceiling on coset definitions over the whole run.
    pub max_steps: usize,
}

impl Limits {
    pub fn new(max_cosets: usize) -> Self {
        Self { max_cosets, max_steps: max_cosets.saturating_mul(50) }
    }

    /// Default limits, with `LOGKIT_MAX_COSETS` honoured when it parses.
    pub fn from_env() -> Self {
        let max = std::env::var(MAX_COSETS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v: &usize| v > 0)
            .unwrap_or(DEFAULT_MAX_COSETS);
        Self::new(max)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_COSETS)
    }
}

/// Strategy-dependent counters; not part of any equality check on results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Stats {
    pub definitions: usize,
    pub coincidences: usize,
    pub max_live: usize,
    pub lookaheads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Closed,
    Exceeded,
}

/// Action of the generators on cosets. Coset 0 is the subgroup coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    rows: Vec<Vec<Option<usize>>>,
    pub status: Status,
    pub stats: Stats,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn column_count(&self) -> usize {
        2 * self.generators.len()
    }

    pub fn column_of(letter: Letter) -> usize {
        2 * letter.generator + usize::from(letter.inverse)
    }

    pub fn entry(&self, coset: usize, column: usize) -> Option<usize> {
        self.rows[coset][column]
    }

    pub fn image(&self, coset: usize, letter: Letter) -> Option<usize> {
        self.entry(coset, Self::column_of(letter))
    }

    /// Overwrites an entry. Intended for tests of [`verify_table`].
    pub fn set_entry(&mut self, coset: usize, column: usize, value: Option<usize>) {
        self.rows[coset][column] = value;
    }

    pub fn column_name(&self, column: usize) -> String {
        let g = &self.generators[column / 2];
        if column.is_multiple_of(2) {
            g.clone()
        } else {
            format!("{g}^-1")
        }
    }

    /// Plain-text dump: one row per coset, one column per generator and inverse.
    pub fn to_text(&self) -> String {
        let mut out = String::from("coset");
        for c in 0..self.column_count() {
            out.push('\t');
            out.push_str(&self.column_name(c));
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&i.to_string());
            for e in row {
                out.push('\t');
                match e {
                    Some(v) => out.push_str(&v.to_string()),
                    None => out.push('-'),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let columns: Vec<String> = (0..self.column_count()).map(|c| self.column_name(c)).collect();
        serde_json::json!({
            "columns": columns,
            "rows": self.rows,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationResult {
    Finite { order: usize, table: CosetTable },
    Exceeded(Stats),
}

impl EnumerationResult {
    pub fn order(&self) -> Option<usize> {
        match self {
            EnumerationResult::Finite { order, .. } => Some(*order),
            EnumerationResult::Exceeded(_) => None,
        }
    }

    pub fn stats(&self) -> Stats {
        match self {
            EnumerationResult::Finite { table, .. } => table.stats,
            EnumerationResult::Exceeded(s) => *s,
        }
    }
}

impl fmt::Display for EnumerationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationResult::Finite { order, .. } => write!(f, "{order}"),
            EnumerationResult::Exceeded(_) => f.write_str("exceeded limit (consistent with infinite)"),
        }
    }
}

/// HLT enumeration of the cosets of the trivial subgroup.
pub fn todd_coxeter(p: &Presentation, limits: Limits) -> EnumerationResult {
    enumerate(p, Strategy::Hlt, limits)
}

pub fn enumerate(p: &Presentation, strategy: Strategy, limits: Limits) -> EnumerationResult {
    let mut e = Enumerator::new(p, strategy, limits);
    loop {
        if let Progress::Finished(r) = e.run(usize::MAX) {
            return r;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Progress {
    Paused { definitions: usize },
    Finished(EnumerationResult),
}

/// Resumable enumeration state.
///
/// [`Enumerator::run`] performs at most the given number of coset
/// definitions and then pauses; calling it again continues where it stopped.
pub struct Enumerator {
    generators: Vec<String>,
    strategy: Strategy,
    limits: Limits,
    ncols: usize,
    relators: Vec<Vec<usize>>,
    /// Cyclic conjugates of relators and their inverses, by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
    table: Vec<u32>,
    forward: Vec<u32>,
    used: usize,
    live: usize,
    queue: VecDeque<u32>,
    deductions: Vec<(u32, usize)>,
    /// HLT: coset being scanned and next relator; Felsch: first possibly
    /// incomplete coset.
    cursor: usize,
    relator_cursor: usize,
    stats: Stats,
    finished: Option<EnumerationResult>,
}

enum Scan {
    Done,
    Full,
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    pub fn new(p: &Presentation, strategy: Strategy, limits: Limits) -> Self {
        let ncols = 2 * p.rank();
        let relators: Vec<Vec<usize>> = p
            .cyclically_reduced_relators()
            .iter()
            .map(|w| w.letters().iter().map(|&l| CosetTable::column_of(l)).collect())
            .collect();
        let mut conjugates = vec![Vec::new(); ncols];
        for r in &relators {
            let rinv: Vec<usize> = r.iter().rev().map(|&c| inv(c)).collect();
            for w in [r, &rinv] {
                for s in 0..w.len() {
                    let rot: Vec<usize> = w[s..].iter().chain(&w[..s]).copied().collect();
                    if !conjugates[rot[0]].contains(&rot) {
                        conjugates[rot[0]].push(rot);
                    }
                }
            }
        }
        let capacity = limits.max_cosets.max(1);
        let mut e = Self {
            generators: p.generators().to_vec(),
            strategy,
            limits,
            ncols,
            relators,
            conjugates,
            table: Vec::with_capacity(capacity.min(1 << 16) * ncols),
            forward: Vec::new(),
            used: 0,
            live: 0,
            queue: VecDeque::new(),
            deductions: Vec::new(),
            cursor: 0,
            relator_cursor: 0,
            stats: Stats::default(),
            finished: None,
        };
        e.new_coset();
        e.stats.max_live = 1;
        e
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    pub fn live_cosets(&self) -> usize {
        self.live
    }

    pub fn run(&mut self, budget: usize) -> Progress {
        if let Some(r) = &self.finished {
            return Progress::Finished(r.clone());
        }
        let stop_at = self.stats.definitions.saturating_add(budget);
        let outcome = match self.strategy {
            Strategy::Hlt => self.run_hlt(stop_at),
            Strategy::Felsch => self.run_felsch(stop_at),
        };
        match outcome {
            Some(r) => {
                self.finished = Some(r.clone());
                Progress::Finished(r)
            }
            None => Progress::Paused { definitions: self.stats.definitions },
        }
    }

    fn run_hlt(&mut self, stop_at: usize) -> Option<EnumerationResult> {
        while self.cursor < self.used {
            let alpha = self.cursor;
            if !self.is_live(alpha) {
                self.cursor += 1;
                self.relator_cursor = 0;
                continue;
            }
            if self.stats.definitions >= stop_at {
                return None;
            }
            if self.relator_cursor < self.relators.len() {
                let w = self.relators[self.relator_cursor].clone();
                match self.scan_and_fill(alpha, &w) {
                    Scan::Done => self.relator_cursor += 1,
                    Scan::Full => {
                        if let Some(r) = self.make_room(true) {
                            return Some(r);
                        }
                    }
                }
                continue;
            }
            let mut full = false;
            for x in 0..self.ncols {
                if self.is_live(alpha) && self.get(alpha, x) == NONE && self.define(alpha, x).is_none() {
                    full = true;
                    break;
                }
            }
            if full {
                if let Some(r) = self.make_room(true) {
                    return Some(r);
                }
                continue;
            }
            self.cursor += 1;
            self.relator_cursor = 0;
        }
        Some(self.close())
    }

    fn run_felsch(&mut self, stop_at: usize) -> Option<EnumerationResult> {
        loop {
            self.process_deductions();
            // first undefined entry in coset order
            let mut hole = None;
            while self.cursor < self.used {
                if self.is_live(self.cursor) {
                    if let Some(x) = (0..self.ncols).find(|&x| self.get(self.cursor, x) == NONE) {
                        hole = Some((self.cursor, x));
                        break;
                    }
                }
                self.cursor += 1;
            }
            let Some((alpha, x)) = hole else {
                return Some(self.close());
            };
            if self.stats.definitions >= stop_at {
                return None;
            }
            if self.define(alpha, x).is_none() {
                if let Some(r) = self.make_room(false) {
                    return Some(r);
                }
            }
        }
    }

    /// Frees slots after the table fills up. Returns a result when the run
    /// has to stop.
    fn make_room(&mut self, lookahead: bool) -> Option<EnumerationResult> {
        if self.stats.definitions >= self.limits.max_steps {
            return Some(EnumerationResult::Exceeded(self.stats));
        }
        if self.live < self.limits.max_cosets {
            self.compact();
            return None;
        }
        if lookahead {
            self.stats.lookaheads += 1;
            let before = self.live;
            self.lookahead();
            if self.live < before {
                self.compact();
                return None;
            }
        }
        Some(EnumerationResult::Exceeded(self.stats))
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.ncols + x] = v;
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.forward[c] as usize == c
    }

    fn new_coset(&mut self) -> usize {
        let c = self.used;
        self.used += 1;
        if self.forward.len() < self.used {
            self.table.resize(self.used * self.ncols, NONE);
            self.forward.resize(self.used, 0);
        } else {
            self.table[c * self.ncols..(c + 1) * self.ncols].fill(NONE);
        }
        self.forward[c] = c as u32;
        self.live += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        c
    }

    fn define(&mut self, alpha: usize, x: usize) -> Option<usize> {
        if self.used >= self.limits.max_cosets || self.stats.definitions >= self.limits.max_steps {
            return None;
        }
        let beta = self.new_coset();
        self.stats.definitions += 1;
        self.set(alpha, x, beta as u32);
        self.set(beta, inv(x), alpha as u32);
        if self.strategy == Strategy::Felsch {
            self.deductions.push((alpha as u32, x));
        }
        Some(beta)
    }

    fn deduce(&mut self, f: usize, x: usize, b: usize) {
        self.set(f, x, b as u32);
        self.set(b, inv(x), f as u32);
        if self.strategy == Strategy::Felsch {
            self.deductions.push((f as u32, x));
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Scan {
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0, w.len());
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]) as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Scan::Done;
            }
            while j > i && self.get(b, inv(w[j - 1])) != NONE {
                b = self.get(b, inv(w[j - 1])) as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Scan::Done;
            }
            if j == i + 1 {
                self.deduce(f, w[i], b);
                return Scan::Done;
            }
            if self.define(f, w[i]).is_none() {
                return Scan::Full;
            }
        }
    }

    /// Scan without defining; records deductions and coincidences.
    fn scan(&mut self, alpha: usize, w: &[usize]) {
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0, w.len());
        while i < j && self.get(f, w[i]) != NONE {
            f = self.get(f, w[i]) as usize;
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j > i && self.get(b, inv(w[j - 1])) != NONE {
            b = self.get(b, inv(w[j - 1])) as usize;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.deduce(f, w[i], b);
        }
    }

    fn lookahead(&mut self) {
        let relators = std::mem::take(&mut self.relators);
        for beta in 0..self.used {
            for w in &relators {
                if !self.is_live(beta) {
                    break;
                }
                self.scan(beta, w);
            }
        }
        self.relators = relators;
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            let c = c as usize;
            if !self.is_live(c) {
                continue;
            }
            let conj = std::mem::take(&mut self.conjugates[x]);
            for w in &conj {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, w);
            }
            self.conjugates[x] = conj;
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE {
                continue;
            }
            let d = d as usize;
            let conj = std::mem::take(&mut self.conjugates[inv(x)]);
            for w in &conj {
                if !self.is_live(d) {
                    break;
                }
                self.scan(d, w);
            }
            self.conjugates[inv(x)] = conj;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.forward[root] as usize != root {
            root = self.forward[root] as usize;
        }
        let mut k = c;
        while self.forward[k] as usize != root && k != root {
            let next = self.forward[k] as usize;
            self.forward[k] = root as u32;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (phi, psi) = (self.rep(k), self.rep(l));
        if phi != psi {
            let (mu, nu) = (phi.min(psi), phi.max(psi));
            self.forward[nu] = mu as u32;
            self.live -= 1;
            self.stats.coincidences += 1;
            self.queue.push_back(nu as u32);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(gamma) = self.queue.pop_front() {
            let gamma = gamma as usize;
            for x in 0..self.ncols {
                let delta = self.get(gamma, x);
                if delta == NONE {
                    continue;
                }
                let delta = delta as usize;
                self.set(delta, inv(x), NONE);
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx as usize);
                    continue;
                }
                let nx = self.get(nu, inv(x));
                if nx != NONE {
                    self.merge(mu, nx as usize);
                    continue;
                }
                self.set(mu, x, nu as u32);
                self.set(nu, inv(x), mu as u32);
                if self.strategy == Strategy::Felsch {
                    self.deductions.push((mu as u32, x));
                }
            }
        }
    }

    /// Renumbers live cosets `0..live` in order, dropping dead rows.
    fn compact(&mut self) {
        let mut map = vec![NONE; self.used];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.forward[c] as usize == c {
                *slot = next;
                next += 1;
            }
        }
        let new_cursor = (self.cursor..self.used).find(|&c| self.is_live(c)).map_or(next as usize, |c| map[c] as usize);
        if !(self.cursor < self.used && self.is_live(self.cursor)) {
            self.relator_cursor = 0;
        }
        for c in 0..self.used {
            if map[c] == NONE {
                continue;
            }
            let dst = map[c] as usize;
            for x in 0..self.ncols {
                let v = self.get(c, x);
                let mapped = if v == NONE { NONE } else { map[self.rep(v as usize)] };
                self.set(dst, x, mapped);
            }
        }
        self.used = next as usize;
        for c in 0..self.used {
            self.forward[c] = c as u32;
        }
        self.cursor = new_cursor;
        self.deductions.retain(|&(c, _)| map[c as usize] != NONE);
        for d in &mut self.deductions {
            d.0 = map[d.0 as usize];
        }
    }

    fn close(&mut self) -> EnumerationResult {
        self.compact();
        let rows = (0..self.used)
            .map(|c| {
                (0..self.ncols)
                    .map(|x| {
                        let v = self.get(c, x);
                        (v != NONE).then_some(v as usize)
                    })
                    .collect()
            })
            .collect();
        let table = CosetTable { generators: self.generators.clone(), rows, status: Status::Closed, stats: self.stats };
        EnumerationResult::Finite { order: self.used, table }
    }
}

/// Why a table failed certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TableFailure {
    Undefined { coset: usize, column: String },
    OutOfRange { coset: usize, column: String },
    NotInjective { column: String, cosets: (usize, usize) },
    InverseMismatch { coset: usize, column: String },
    RelatorTrace { coset: usize, relator: usize },
}

/// Checks a closed table independently of how it was produced: every
/// generator acts as a permutation, inverse columns hold the inverse
/// permutations, and every relator fixes every coset.
pub fn verify_table(t: &CosetTable, p: &Presentation) -> Result<Option<TableFailure>, CosetError> {
    if t.status != Status::Closed {
        return Err(CosetError::NotClosed);
    }
    let n = t.len();
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(p.rank());
    for g in 0..p.rank() {
        let col = 2 * g;
        let mut perm = Vec::with_capacity(n);
        let mut preimage = vec![None; n];
        for c in 0..n {
            let Some(v) = t.entry(c, col) else {
                return Ok(Some(TableFailure::Undefined { coset: c, column: t.column_name(col) }));
            };
            if v >= n {
                return Ok(Some(TableFailure::OutOfRange { coset: c, column: t.column_name(col) }));
            }
            if let Some(prev) = preimage[v] {
                return Ok(Some(TableFailure::NotInjective { column: t.column_name(col), cosets: (prev, c) }));
            }
            preimage[v] = Some(c);
            perm.push(v);
        }
        for (c, &image) in perm.iter().enumerate() {
            if t.entry(image, col + 1) != Some(c) {
                return Ok(Some(TableFailure::InverseMismatch { coset: image, column: t.column_name(col + 1) }));
            }
        }
        perms.push(perm);
    }
    let inverses: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            let mut inv = vec![0; n];
            for (c, &v) in perm.iter().enumerate() {
                inv[v] = c;
            }
            inv
        })
        .collect();
    for (ri, r) in p.relators().iter().enumerate() {
        for c in 0..n {
            let end = r.letters().iter().fold(c, |cur, l| {
                if l.inverse {
                    inverses[l.generator][cur]
                } else {
                    perms[l.generator][cur]
                }
            });
            if end != c {
                return Ok(Some(TableFailure::RelatorTrace { coset: c, relator: ri }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn pres(s: &str) -> Presentation {
        parse_presentation(s).unwrap()
    }

    #[test]
    fn cyclic_group() {
        let p = pres("gen: x\nrel: x^5");
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let r = enumerate(&p, s, Limits::new(1000));
            assert_eq!(r.order(), Some(5));
            let EnumerationResult::Finite { table, .. } = r else { unreachable!() };
            assert_eq!(verify_table(&table, &p), Ok(None));
        }
    }

    #[test]
    fn trivial_and_free() {
        let p = pres("gen:\n");
        assert_eq!(todd_coxeter(&p, Limits::new(10)).order(), Some(1));
        let p = pres("gen: x\nrel: x");
        assert_eq!(todd_coxeter(&p, Limits::new(10)).order(), Some(1));
        let free = pres("gen: x y\n");
        assert!(matches!(todd_coxeter(&free, Limits::new(500)), EnumerationResult::Exceeded(_)));
        assert!(matches!(enumerate(&free, Strategy::Felsch, Limits::new(500)), EnumerationResult::Exceeded(_)));
    }

    #[test]
    fn symmetric_group() {
        // S_3 = <a, b | a^2, b^3, (ab)^2>
        let p = pres("gen: a b\nrel: a^2\nrel: b^3\nrel: a b a b");
        assert_eq!(todd_coxeter(&p, Limits::new(100)).order(), Some(6));
        assert_eq!(enumerate(&p, Strategy::Felsch, Limits::new(100)).order(), Some(6));
    }

    #[test]
    fn pause_and_resume() {
        let p = pres("gen: a b\nrel: a^2\nrel: b^3\nrel: a b a b");
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let mut e = Enumerator::new(&p, s, Limits::new(100));
            let mut pauses = 0;
            let result = loop {
                match e.run(1) {
                    Progress::Paused { .. } => pauses += 1,
                    Progress::Finished(r) => break r,
                }
            };
            assert!(pauses > 0);
            assert_eq!(result.order(), Some(6));
            assert_eq!(e.run(1), Progress::Finished(result));
        }
    }

    #[test]
    fn verify_detects_mutations() {
        let p = pres("gen: x\nrel: x^5");
        let EnumerationResult::Finite { table, .. } = todd_coxeter(&p, Limits::new(100)) else { panic!() };

        let mut broken = table.clone();
        let target = broken.entry(0, 0);
        broken.set_entry(1, 0, target);
        assert!(matches!(verify_table(&broken, &p), Ok(Some(TableFailure::NotInjective { .. }))));

        // swap two images in the x column and fix up x^-1: still a
        // permutation, but x^5 no longer fixes every coset
        let mut swapped = table.clone();
        let (a, b) = (swapped.entry(0, 0).unwrap(), swapped.entry(1, 0).unwrap());
        swapped.set_entry(0, 0, Some(b));
        swapped.set_entry(1, 0, Some(a));
        swapped.set_entry(b, 1, Some(0));
        swapped.set_entry(a, 1, Some(1));
        assert!(matches!(verify_table(&swapped, &p), Ok(Some(TableFailure::RelatorTrace { .. }))));

        let mut open = table;
        open.status = Status::Exceeded;
        assert_eq!(verify_table(&open, &p), Err(CosetError::NotClosed));
    }

    #[test]
    fn dumps() {
        let p = pres("gen: x\nrel: x^3");
        let EnumerationResult::Finite { table, .. } = todd_coxeter(&p, Limits::new(100)) else { panic!() };
        assert_eq!(table.to_text(), "coset\tx\tx^-1\n0\t1\t2\n1\t2\t0\n2\t0\t1\n");
        assert_eq!(table.to_json()["columns"], serde_json::json!(["x", "x^-1"]));
    }
}
