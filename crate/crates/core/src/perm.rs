//! Permutations of {1, …, n} in one-line notation, with the symmetric-group
//! arithmetic everything else is built on: multiplication, length,
//! transpositions, Bruhat comparison, covers, and descents.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation in one-line notation: `word[i - 1] = w(i)`, values 1-based.
///
/// Immutable after construction. The derived `Hash`/`Eq` are word-wise; `Ord`
/// sorts by (Coxeter length, word), which fixes a deterministic iteration
/// order for intervals and sweeps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    word: Box<[u8]>,
}

impl Perm {
    /// The identity of S_n.
    pub fn identity(n: usize) -> Perm {
        assert!(n >= 1 && n <= u8::MAX as usize, "unsupported degree {n}");
        Perm {
            word: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from a one-line word, validating bijectivity.
    pub fn from_word(word: &[usize]) -> Result<Perm> {
        let n = word.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidWord(word.to_vec()));
        }
        let mut seen = vec![false; n + 1];
        for &x in word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidWord(word.to_vec()));
            }
            seen[x] = true;
        }
        Ok(Perm {
            word: word.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// w(i), 1-based.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> impl Iterator<Item = usize> + '_ {
        self.word.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Perm {
        let mut word = vec![0u8; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            word[x as usize - 1] = i as u8 + 1;
        }
        Perm { word: word.into() }
    }

    /// Composition (self ∘ other)(i) = self(other(i)). Panics on size mismatch.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "size mismatch in composition");
        Perm {
            word: other.word.iter().map(|&x| self.word[x as usize - 1]).collect(),
        }
    }

    /// The transposition (i j) as an element of S_n.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Perm> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::BadTransposition { i, j, n });
        }
        let mut p = Perm::identity(n);
        p.word.swap(i - 1, j - 1);
        Ok(p)
    }

    /// If this permutation is a transposition, returns it.
    pub fn as_transposition(&self) -> Option<Transposition> {
        let mut moved = self
            .word
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x as usize != i + 1);
        let (p, _) = moved.next()?;
        let (q, _) = moved.next()?;
        if moved.next().is_some() {
            return None;
        }
        if self.word[p] as usize == q + 1 && self.word[q] as usize == p + 1 {
            Some(Transposition::new(p + 1, q + 1))
        } else {
            None
        }
    }

    /// Left multiplication t ∘ self by the transposition t = (i j): swaps the
    /// values i and j wherever they occur in the word.
    pub fn left_mul(&self, t: Transposition) -> Perm {
        let mut word = self.word.clone();
        let (a, b) = (t.i() as u8, t.j() as u8);
        let p = word.iter().position(|&x| x == a).expect("value in range");
        let q = word.iter().position(|&x| x == b).expect("value in range");
        word.swap(p, q);
        Perm { word }
    }

    /// Bruhat order comparison by the sorted-prefix dominance criterion.
    /// Panics on size mismatch.
    pub fn bruhat_leq(&self, other: &Perm) -> bool {
        assert_eq!(self.n(), other.n(), "size mismatch in Bruhat comparison");
        let n = self.n();
        // sorted prefixes of both words, grown one value at a time
        let mut px: Vec<u8> = Vec::with_capacity(n);
        let mut py: Vec<u8> = Vec::with_capacity(n);
        for k in 0..n - 1 {
            let x = self.word[k];
            let y = other.word[k];
            px.insert(px.partition_point(|&a| a < x), x);
            py.insert(py.partition_point(|&a| a < y), y);
            for i in 0..=k {
                if px[i] > py[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn bruhat_lt(&self, other: &Perm) -> bool {
        self != other && self.bruhat_leq(other)
    }

    /// Upward covers within S_n: pairs (t, t∘self) with length exactly one more.
    pub fn covers_up(&self) -> Vec<(Transposition, Perm)> {
        let n = self.n();
        let len = self.length();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                let t = Transposition::new(i, j);
                let w = self.left_mul(t);
                if w.length() == len + 1 {
                    out.push((t, w));
                }
            }
        }
        out
    }

    /// Right descent set: indices i with w(i) > w(i+1).
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// Left descent set: indices i with s_i·w < w, i.e. i appears after i+1.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// All of S_n in lexicographic word order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        assert!(n >= 1 && n <= 8, "full-group enumeration guarded to n <= 8");
        itertools::Itertools::permutations((1..=n).collect::<Vec<_>>().into_iter(), n)
            .map(|w| Perm::from_word(&w).expect("permutation by construction"))
    }

    /// The longest element n, n-1, …, 1.
    pub fn longest(n: usize) -> Perm {
        Perm {
            word: (1..=n as u8).rev().collect(),
        }
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Display for Perm {
    /// Digits concatenated for n ≤ 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in self.word.iter() {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts both "3412" and "3,4,1,2".
    fn from_str(s: &str) -> Result<Perm> {
        let bad = || Error::ParsePerm(s.to_string());
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Perm::from_word(&word).map_err(|_| bad())
    }
}

/// A transposition (i j) with 1 ≤ i < j, stored by its moved points.
///
/// This is the label type for Bruhat-graph edges and the carrier for
/// reflection orders; conversion to a full `Perm` is explicit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: u8,
    j: u8,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Transposition {
        assert!(i != j && i >= 1 && j >= 1, "degenerate transposition");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Transposition { i: i as u8, j: j as u8 }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    /// The simple transposition s_i = (i i+1).
    pub fn simple(i: usize) -> Transposition {
        Transposition::new(i, i + 1)
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn to_perm(&self, n: usize) -> Perm {
        Perm::transposition(self.i(), self.j(), n).expect("indices within range")
    }

    /// All transpositions of S_n in lexicographic (i, j) order.
    pub fn all(n: usize) -> Vec<Transposition> {
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..n {
            for j in i + 1..=n {
                out.push(Transposition::new(i, j));
            }
        }
        out
    }

    /// Conjugation: w (i j) w⁻¹ = (w(i) w(j)).
    pub fn conjugate_by(&self, w: &Perm) -> Transposition {
        Transposition::new(w.apply(self.i()), w.apply(self.j()))
    }

    /// Bruhat comparison of transpositions: (i j) ≤ (k l) iff k ≤ i < j ≤ l.
    pub fn bruhat_leq(&self, other: &Transposition) -> bool {
        other.i <= self.i && self.j <= other.j
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
