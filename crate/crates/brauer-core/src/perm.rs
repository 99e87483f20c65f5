//! Permutations of {1, ..., n} in one-line notation, acting on the right:
//! `apply(i)` is the image (i)w, and `compose(v, w)` applies v first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = image of i+1, values in 1..=n
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition (i j) in S_n.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Permutation> {
        if i < 1 || j < 1 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({i} {j}) undefined in S_{n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    /// The simple transposition s_i = (i, i+1).
    pub fn simple(n: usize, i: usize) -> Result<Permutation> {
        if i < 1 || i >= n {
            return Err(Error::InvalidPermutation(format!(
                "simple transposition s_{i} undefined in S_{n}"
            )));
        }
        Permutation::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// Image (i)w, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// v.compose(w) = vw, i.e. apply v first then w.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::StrandMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All of S_n in lexicographic one-line order (frozen enumeration order).
    pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
        if n == 0 || n > 9 {
            return Err(Error::GuardExceeded {
                what: "symmetric group degree".into(),
                limit: 9,
                requested: n as u128,
            });
        }
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        Ok(out)
    }

    /// Rank in the lexicographic enumeration (factorial number system).
    pub fn lex_index(&self) -> usize {
        let n = self.images.len();
        let mut index = 0;
        let mut factorial = 1;
        for k in 1..n {
            factorial *= k;
        }
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut fact = factorial;
        for i in 0..n {
            let pos = remaining.iter().position(|&v| v == self.images[i]).unwrap();
            index += pos * fact;
            remaining.remove(pos);
            if n - i > 1 {
                fact /= n - i - 1;
            }
        }
        index
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .images
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "[{body}]")
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
