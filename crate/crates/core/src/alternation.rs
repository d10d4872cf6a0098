//! Words over vertex labels and the alternation relation.
//!
//! Two letters alternate in a word when the word restricted to them reads
//! `xyxy...` or `yxyx...`. A word represents the graph whose edges are its
//! alternating pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{full_mask, Bits, Graph, MAX_VERTICES};

/// A word over the alphabet `0..n` (printed as `1..=n`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::LetterOutOfRange { letter: bad + 1, n });
        }
        Ok(Word { letters, n })
    }

    /// Parses the text form: a digit string such as `1213423`, or
    /// whitespace/comma separated labels when some label exceeds 9. The
    /// alphabet size defaults to the largest label.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let labels: Vec<usize> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::WordSyntax(format!("bad label `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::WordSyntax(format!("bad letter `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        if labels.is_empty() {
            return Err(Error::WordSyntax("empty word".into()));
        }
        if labels.contains(&0) {
            return Err(Error::WordSyntax("labels start at 1".into()));
        }
        let n = n.unwrap_or_else(|| labels.iter().copied().max().unwrap_or(0));
        Word::new(labels.into_iter().map(|l| l - 1).collect(), n)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Declared alphabet size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn occurrences(&self, x: usize) -> usize {
        self.letters.iter().filter(|&&l| l == x).count()
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect(), n: self.n }
    }

    /// Moves the first `by` letters to the end.
    pub fn rotated(&self, by: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let by = by % letters.len();
            letters.rotate_left(by);
        }
        Word { letters, n: self.n }
    }

    /// Renames letter `x` to `perm[x]`.
    pub fn relabeled(&self, perm: &[usize]) -> Word {
        assert_eq!(perm.len(), self.n);
        Word { letters: self.letters.iter().map(|&l| perm[l]).collect(), n: self.n }
    }

    /// Erases every copy of `v` and shifts larger letters down by one, matching `Graph::delete_vertex`.
    pub fn erase(&self, v: usize) -> Result<Word> {
        if v >= self.n {
            return Err(Error::LetterOutOfRange { letter: v + 1, n: self.n });
        }
        let letters = self.letters.iter().filter(|&&l| l != v).map(|&l| if l > v { l - 1 } else { l }).collect();
        Word::new(letters, self.n - 1)
    }

    /// Concatenation of two words over the same alphabet.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, n: self.n }
    }

    fn present(&self) -> u64 {
        self.letters.iter().fold(0, |m, &l| m | 1 << l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { " " } else { "" };
        let parts: Vec<String> = self.letters.iter().map(|l| (l + 1).to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn alternate_in_word(w: &Word, x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::SameLetter(x + 1));
    }
    for l in [x, y] {
        if l >= w.n || !w.letters.contains(&l) {
            return Err(Error::LetterAbsent(l + 1));
        }
    }
    let mut last = usize::MAX;
    for &l in &w.letters {
        if l == x || l == y {
            if l == last {
                return Ok(false);
            }
            last = l;
        }
    }
    Ok(true)
}

/// Pairwise "not alternating" rows: bit `y` of row `x` is set when some two
/// consecutive occurrences of `x` or of `y` have no copy of the other letter
/// between them.
fn broken_pairs(w: &Word) -> Vec<u64> {
    let n = w.n;
    let mut broken = vec![0u64; n];
    let mut since = vec![0u64; n];
    let mut placed = 0u64;
    for &x in &w.letters {
        if placed >> x & 1 == 1 {
            broken[x] |= !since[x];
        }
        placed |= 1 << x;
        since[x] = 0;
        for (z, s) in since.iter_mut().enumerate() {
            if z != x {
                *s |= 1 << x;
            }
        }
    }
    let all = full_mask(n);
    for x in 0..n {
        broken[x] &= all & !(1 << x);
    }
    // symmetrise
    for x in 0..n {
        for y in Bits(broken[x]) {
            broken[y] |= 1 << x;
        }
    }
    broken
}

/// The graph on the word's alphabet whose edges are its alternating pairs.
pub fn graph_of_word(w: &Word) -> Result<Graph> {
    let all = full_mask(w.n);
    let missing = all & !w.present();
    if missing != 0 {
        return Err(Error::MissingLetters(Bits(missing).map(|l| l + 1).collect()));
    }
    let broken = broken_pairs(w);
    let mut g = Graph::empty(w.n)?;
    for x in 0..w.n {
        for y in Bits(all & !broken[x] & !(1u64 << x) & !full_mask(x)) {
            g.add_edge(x, y);
        }
    }
    Ok(g)
}

/// True iff `w` represents `g` as a labelled graph.
pub fn verify_representation(w: &Word, g: &Graph) -> Result<bool> {
    if w.n != g.n() {
        return Err(Error::AlphabetMismatch { word: w.n, graph: g.n() });
    }
    if w.present() != full_mask(w.n) {
        return Ok(false);
    }
    Ok(graph_of_word(w)? == *g)
}

pub fn is_k_uniform(w: &Word, k: usize) -> bool {
    let mut counts = vec![0usize; w.n];
    for &l in &w.letters {
        counts[l] += 1;
    }
    counts.iter().all(|&c| c == k)
}
