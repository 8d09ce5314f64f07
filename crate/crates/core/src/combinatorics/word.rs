use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::partition::Partition;
use crate::combinatorics::permutation::{next_permutation, parse_letters, Permutation};
use crate::error::{Error, Result};

/// A word over the positive integers `1, 2, 3, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.iter().any(|&a| a == 0) {
            return Err(Error::LetterOutOfRange { letter: 0, bound: usize::MAX });
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Occurrence counts of letters `1..=max_letter`, index 0 holding letter 1.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_letter()];
        for &a in &self.letters {
            counts[a - 1] += 1;
        }
        counts
    }

    pub fn count(&self, letter: usize) -> usize {
        self.letters.iter().filter(|&&a| a == letter).count()
    }

    /// Right action on positions: letter `i` of the result is letter `σ(i)` of `self`.
    pub fn act_positions(&self, sigma: &Permutation) -> Result<Word> {
        if self.len() != sigma.degree() {
            return Err(Error::SizeMismatch { expected: self.len(), found: sigma.degree() });
        }
        Ok(self.act_positions_unchecked(sigma))
    }

    pub(crate) fn act_positions_unchecked(&self, sigma: &Permutation) -> Word {
        Word { letters: sigma.one_line().iter().map(|&j| self.letters[j - 1]).collect() }
    }

    /// Left action on the alphabet: each letter `a` becomes `σ(a)`.
    pub fn act_alphabet(sigma: &Permutation, w: &Word) -> Result<Word> {
        let bound = sigma.degree();
        let letters = w
            .letters
            .iter()
            .map(|&a| if a <= bound { Ok(sigma.apply(a)) } else { Err(Error::LetterOutOfRange { letter: a, bound }) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }

    /// Inserts `letter` before position `i` (0-based; `i == len` appends).
    pub fn insert(&self, i: usize, letter: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.insert(i, letter);
        Word { letters }
    }

    pub fn remove(&self, i: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(i);
        Word { letters }
    }

    pub fn replace(&self, i: usize, letter: usize) -> Word {
        let mut letters = self.letters.clone();
        letters[i] = letter;
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.letters.iter().all(|&a| a <= 9) { "" } else { "," };
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

/// All words in which letter `a` occurs `content[a - 1]` times, in lexicographic order.
pub fn anagrams(content: &[usize]) -> Vec<Word> {
    let mut cur: Vec<usize> = content
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat(i + 1).take(c))
        .collect();
    let mut out = Vec::new();
    loop {
        out.push(Word { letters: cur.clone() });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// All compositions of `n` with exactly `m` parts, zeros allowed.
pub fn weak_compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=remaining {
            prefix.push(first);
            rec(remaining - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// Relabels a word over any ordered alphabet so the most frequent letter becomes 1,
/// the next 2, and so on; ties keep the original alphabet order.
///
/// ```
/// use shuffle_spectra::canonical_content;
/// let (w, content) = canonical_content(&"efface".chars().collect::<Vec<_>>());
/// assert_eq!(w.to_string(), "122341");
/// assert_eq!(content.parts(), &[2, 2, 1, 1]);
/// ```
pub fn canonical_content<T: Ord + Clone>(w: &[T]) -> (Word, Partition) {
    let mut freq: BTreeMap<T, usize> = BTreeMap::new();
    for a in w {
        *freq.entry(a.clone()).or_insert(0) += 1;
    }
    // BTreeMap iterates in alphabet order; a stable sort by count keeps ties in that order
    let mut order: Vec<(T, usize)> = freq.into_iter().collect();
    order.sort_by(|x, y| y.1.cmp(&x.1));
    let label: BTreeMap<T, usize> = order.iter().enumerate().map(|(i, (a, _))| (a.clone(), i + 1)).collect();
    let letters = w.iter().map(|a| label[a]).collect();
    let content = Partition::from_multiplicities(order.iter().map(|(_, c)| *c));
    (Word { letters }, content)
}
