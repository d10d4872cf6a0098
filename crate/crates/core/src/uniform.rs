//! Uniform word-representants and representation numbers.
//!
//! A `k`-uniform word of length `k*n` is described by the position of the
//! `j`-th copy of every letter. The search builds the word left to right and
//! cuts a prefix as soon as an edge pair stops alternating, or a non-edge pair
//! is certain to end up alternating.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alternation::Word;
use crate::error::{Error, Result};
use crate::graph::{full_mask, Bits, Graph};
use crate::semitrans::is_word_representable;

/// `positions[i][j]` is the 1-based position of the `(j+1)`-th copy of letter `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionAssignment {
    pub n: usize,
    pub k: usize,
    pub positions: Vec<Vec<usize>>,
}

impl PositionAssignment {
    pub fn validate(&self) -> Result<()> {
        let len = self.n * self.k;
        if self.positions.len() != self.n {
            return Err(Error::InvalidAssignment(format!("{} rows for {} letters", self.positions.len(), self.n)));
        }
        let mut used = vec![false; len + 1];
        for (i, row) in self.positions.iter().enumerate() {
            if row.len() != self.k {
                return Err(Error::InvalidAssignment(format!("letter {} has {} positions", i + 1, row.len())));
            }
            for (j, &p) in row.iter().enumerate() {
                if p == 0 || p > len {
                    return Err(Error::InvalidAssignment(format!("position {p} outside 1..={len}")));
                }
                if used[p] {
                    return Err(Error::InvalidAssignment(format!("position {p} used twice")));
                }
                used[p] = true;
                if j > 0 && row[j - 1] >= p {
                    return Err(Error::InvalidAssignment(format!("positions of letter {} not increasing", i + 1)));
                }
            }
        }
        Ok(())
    }
}

pub fn word_of_assignment(a: &PositionAssignment) -> Result<Word> {
    a.validate()?;
    let mut letters = vec![0; a.n * a.k];
    for (i, row) in a.positions.iter().enumerate() {
        for &p in row {
            letters[p - 1] = i;
        }
    }
    Word::new(letters, a.n)
}

/// Inverse of [`word_of_assignment`]; the word must be uniform.
pub fn assignment_of_word(w: &Word) -> Result<PositionAssignment> {
    let n = w.n();
    let mut positions = vec![Vec::new(); n];
    for (p, &l) in w.letters().iter().enumerate() {
        positions[l].push(p + 1);
    }
    let k = positions[0].len();
    if positions.iter().any(|r| r.len() != k) || k == 0 {
        return Err(Error::InvalidAssignment("word is not uniform".into()));
    }
    Ok(PositionAssignment { n, k, positions })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepNumber {
    Finite(usize),
    /// Not word-representable.
    Infinite,
}

impl RepNumber {
    pub fn is_finite(self) -> bool {
        matches!(self, RepNumber::Finite(_))
    }
}

impl fmt::Display for RepNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepNumber::Finite(k) => write!(f, "{k}"),
            RepNumber::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for RepNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RepNumber::Finite(k) => s.serialize_u64(*k as u64),
            RepNumber::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for RepNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(RepNumber::Finite(k)),
            Raw::Str(s) if s == "infinity" => Ok(RepNumber::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad representation number `{s}`"))),
        }
    }
}

/// Least `k` together with a `k`-uniform witness (none for non-representable graphs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub number: RepNumber,
    pub witness: Option<Word>,
}

#[derive(Clone, Copy)]
struct Layout {
    /// Only the `j`-th copy of each letter may sit in block `j` of length `n`.
    blocks: bool,
    /// Letter forced into position 1, when rotations are allowed.
    first: Option<usize>,
}

struct WordSearch<'g> {
    g: &'g Graph,
    n: usize,
    k: usize,
    all: u64,
    nonadj: Vec<u64>,
    layout: Layout,
    word: Vec<usize>,
    rem: Vec<usize>,
    since: Vec<Vec<u64>>,
    broken: Vec<Vec<u64>>,
    nodes: u64,
}

impl<'g> WordSearch<'g> {
    fn new(g: &'g Graph, k: usize, layout: Layout) -> Self {
        let n = g.n();
        let all = full_mask(n);
        let len = n * k;
        WordSearch {
            g,
            n,
            k,
            all,
            nonadj: (0..n).map(|v| all & !g.neighbors(v) & !(1 << v)).collect(),
            layout,
            word: Vec::with_capacity(len),
            rem: vec![k; n],
            since: vec![vec![0; n]; len + 1],
            broken: vec![vec![0; n]; len + 1],
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<Word> {
        if self.extend(0, 0) {
            Some(Word::new(self.word.clone(), self.n).expect("letters in range"))
        } else {
            None
        }
    }

    fn extend(&mut self, pos: usize, placed: u64) -> bool {
        if pos == self.n * self.k {
            return true;
        }
        let candidates: u64 = match (pos, self.layout.first) {
            (0, Some(f)) => 1 << f,
            _ => (0..self.n).filter(|&x| self.rem[x] > 0).fold(0, |m, x| m | 1 << x),
        };
        let last_copy = (0..self.n).filter(|&x| self.rem[x] == 1).fold(0u64, |m, x| m | 1 << x);
        for x in Bits(candidates) {
            if self.layout.blocks && self.k - self.rem[x] != pos / self.n {
                continue;
            }
            // a neighbour must appear between consecutive copies of x
            if placed >> x & 1 == 1 && self.g.neighbors(x) & !self.since[pos][x] != 0 {
                continue;
            }
            // Final copies of an unbroken non-edge pair: if y came after the
            // last x, placing x now would complete an alternation.
            if self.rem[x] == 1
                && placed >> x & 1 == 1
                && self.nonadj[x] & self.since[pos][x] & last_copy & !self.broken[pos][x] != 0
            {
                continue;
            }
            if self.movable_left(pos, x) {
                continue;
            }
            self.nodes += 1;
            if self.place(pos, placed, x) && self.extend(pos + 1, placed | 1 << x) {
                return true;
            }
            self.word.pop();
            self.rem[x] += 1;
        }
        false
    }

    /// True if `x` placed at `pos` could be swapped in front of a suffix
    /// starting with a larger letter without changing the represented graph.
    ///
    /// Moving `x` left across letters that are not its neighbours and whose
    /// pair with `x` is already broken before the suffix keeps every pair's
    /// alternation status, and yields a lexicographically smaller word. The
    /// lexicographically least representant never admits such a move, so
    /// these placements can be skipped.
    fn movable_left(&self, pos: usize, x: usize) -> bool {
        let mut suffix = 0u64;
        for s in (1..pos).rev() {
            let c = self.word[s];
            suffix |= 1 << c;
            if suffix & !(self.nonadj[x] & self.broken[s][x]) != 0 {
                return false;
            }
            if c > x {
                return true;
            }
        }
        false
    }

    /// Writes state for `pos + 1` from `pos` with letter `x` appended. The
    /// word and counts are updated even when the result is a dead end; the
    /// caller undoes them.
    fn place(&mut self, pos: usize, placed: u64, x: usize) -> bool {
        let (cur, next) = self.since.split_at_mut(pos + 1);
        let (since, since_next) = (&cur[pos], &mut next[0]);
        let (bcur, bnext) = self.broken.split_at_mut(pos + 1);
        let (broken, broken_next) = (&bcur[pos], &mut bnext[0]);

        self.word.push(x);
        self.rem[x] -= 1;
        broken_next.copy_from_slice(broken);
        if placed >> x & 1 == 1 {
            let fresh = self.all & !since[x] & !(1 << x) & !broken[x];
            broken_next[x] |= fresh;
            for y in Bits(fresh) {
                broken_next[y] |= 1 << x;
            }
        }
        for (z, s) in since_next.iter_mut().enumerate() {
            *s = since[z] | 1 << x;
        }
        since_next[x] = 0;

        if self.rem[x] == 0 {
            // x is finished: every unbroken non-neighbour needs two more
            // copies still to come to break the alternation.
            for y in Bits(self.nonadj[x] & !broken_next[x]) {
                if self.rem[y] <= 1 {
                    return false;
                }
            }
            // and every neighbour must be at most one copy behind
            for y in Bits(self.g.neighbors(x)) {
                if self.rem[y] > 1 {
                    return false;
                }
            }
        }
        true
    }
}

fn first_letter(g: &Graph) -> usize {
    (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0)
}

/// A `k`-uniform word representing `g`, or `None` if there is none.
///
/// Any rotation of a uniform representant is again a representant, so the
/// search only considers words that start with a fixed vertex of maximum degree.
pub fn find_k_uniform_representant(g: &Graph, k: usize) -> Result<Option<Word>> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    if k == 1 {
        return Ok(g.is_complete().then(|| identity_permutations(g.n(), 1)));
    }
    let layout = Layout { blocks: false, first: Some(first_letter(g)) };
    Ok(WordSearch::new(g, k, layout).run())
}

/// A concatenation of `k` permutations representing `g`, or `None`.
pub fn find_permutational_representant(g: &Graph, k: usize) -> Result<Option<Word>> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let layout = Layout { blocks: true, first: None };
    Ok(WordSearch::new(g, k, layout).run())
}

fn identity_permutations(n: usize, k: usize) -> Word {
    let letters = (0..k).flat_map(|_| 0..n).collect();
    Word::new(letters, n).expect("letters in range")
}

/// Default cap on copies per letter: `2n`.
pub fn default_cap(g: &Graph) -> usize {
    2 * g.n()
}

/// The least `k <= cap` for which `g` is `k`-representable, with a witness.
///
/// Non-representable graphs are answered by orientation search alone and get
/// `Infinite`. A representable graph that needs more than `cap` copies is an
/// error rather than a silent infinity.
pub fn representation_number(g: &Graph, cap: Option<usize>) -> Result<Representation> {
    let cap = cap.unwrap_or_else(|| default_cap(g));
    if !is_word_representable(g) {
        return Ok(Representation { number: RepNumber::Infinite, witness: None });
    }
    if g.is_complete() {
        if cap < 1 {
            return Err(Error::CapExceeded { cap });
        }
        return Ok(Representation { number: RepNumber::Finite(1), witness: Some(identity_permutations(g.n(), 1)) });
    }
    for k in 2..=cap {
        if let Some(w) = find_k_uniform_representant(g, k)? {
            return Ok(Representation { number: RepNumber::Finite(k), witness: Some(w) });
        }
    }
    Err(Error::CapExceeded { cap })
}

/// Node count of a `k`-uniform search, for benchmarks.
pub fn uniform_search_nodes(g: &Graph, k: usize) -> u64 {
    let layout = Layout { blocks: false, first: Some(first_letter(g)) };
    let mut s = WordSearch::new(g, k, layout);
    s.run();
    s.nodes
}
