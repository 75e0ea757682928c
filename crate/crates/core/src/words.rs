//! Words in the free group `F_N = ⟨g1, …, gN⟩`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::Weight;

/// Freely reduced word: a sequence of syllables `g_i^e` with `e ≠ 0` and no
/// two adjacent syllables on the same generator. The empty word is the
/// identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord {
    syllables: Vec<(usize, i32)>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    /// The generator `g_i` (1-based).
    pub fn generator(i: usize) -> FreeWord {
        assert!(i >= 1, "generators are 1-based");
        FreeWord { syllables: vec![(i, 1)] }
    }

    /// Builds and freely reduces a word from arbitrary syllables; zero
    /// exponents are dropped.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i32)>>(it: I) -> FreeWord {
        let mut w = FreeWord::identity();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i32) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((g, e));
    }

    pub fn syllables(&self) -> &[(usize, i32)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Largest generator index used (0 for the identity).
    pub fn max_generator(&self) -> usize {
        self.syllables.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.syllables.iter().find(|&&(g, _)| g > rank) {
            Some(&(g, _)) => Err(Error::GeneratorOutOfRange { index: g, rank }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i32) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.concat(&base))
    }

    /// Word length `Σ|e|`.
    pub fn length(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// `(length, number of inverse letters)`.
    pub fn stats(&self) -> (usize, usize) {
        let inverses = self.syllables.iter().filter(|&&(_, e)| e < 0).map(|&(_, e)| e.unsigned_abs() as usize).sum();
        (self.length(), inverses)
    }

    /// Exponent sums of each generator mod `m`.
    pub fn weight_vector(&self, modulus: u32, rank: usize) -> WeightVector {
        assert!(modulus >= 1, "modulus must be positive");
        let mut entries = vec![0i64; rank];
        for &(g, e) in &self.syllables {
            assert!(g <= rank, "generator g{g} outside rank {rank}");
            entries[g - 1] += e as i64;
        }
        WeightVector::new(modulus, entries)
    }

    /// Expansion into unit letters `±g`.
    pub fn letters(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.length());
        for &(g, e) in &self.syllables {
            let s = if e > 0 { g as i64 } else { -(g as i64) };
            out.extend(std::iter::repeat_n(s, e.unsigned_abs() as usize));
        }
        out
    }

    pub fn from_letters(letters: &[i64]) -> FreeWord {
        FreeWord::from_syllables(letters.iter().map(|&l| (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 })))
    }

    /// Conjugate that is cyclically reduced: first and last syllables are on
    /// different generators.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let mut s = self.syllables.clone();
        while s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
            let (_, e_last) = s.pop().expect("len >= 2");
            s[0].1 += e_last;
            if s[0].1 == 0 {
                s.remove(0);
            }
        }
        FreeWord { syllables: s }
    }

    /// Cyclic rotation of a cyclically reduced word so that it starts at
    /// syllable `k`.
    pub fn rotate_syllables(&self, k: usize) -> FreeWord {
        let n = self.syllables.len();
        if n == 0 {
            return self.clone();
        }
        FreeWord::from_syllables((0..n).map(|i| self.syllables[(i + k) % n]))
    }

    /// Parses `g1^2 g2 g1^-1`; `""` and `"e"` denote the identity. Generator
    /// indices above `rank` and zero exponents are rejected.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord> {
        if text.trim() == "e" {
            return Ok(FreeWord::identity());
        }
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut word = FreeWord::identity();
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_owned() };
        let digits = |pos: &mut usize| -> Option<u64> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let s: String = chars[start..*pos].iter().collect();
            s.parse().ok()
        };
        loop {
            while pos < chars.len() && chars[pos].is_whitespace() {
                pos += 1;
            }
            if pos == chars.len() {
                return Ok(word);
            }
            if chars[pos] != 'g' {
                return Err(err(pos, "expected `g`"));
            }
            pos += 1;
            let idx_pos = pos;
            let idx = digits(&mut pos).ok_or_else(|| err(idx_pos, "expected generator index"))?;
            let idx = idx as usize;
            if idx == 0 || idx > rank {
                return Err(Error::GeneratorOutOfRange { index: idx, rank });
            }
            let mut exp: i64 = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let exp_pos = pos;
                let negative = pos < chars.len() && (chars[pos] == '-' || chars[pos] == '−');
                if negative {
                    pos += 1;
                }
                let e = digits(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                if e == 0 {
                    return Err(Error::ZeroExponent(exp_pos));
                }
                let e = i32::try_from(e).map_err(|_| err(exp_pos, "exponent too large"))? as i64;
                exp = if negative { -e } else { e };
            }
            word.push(idx, exp as i32);
        }
    }

    /// Uniformly random reduced word of exactly `len` letters.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> FreeWord {
        let mut letters: Vec<i64> = Vec::with_capacity(len);
        while letters.len() < len {
            let g = rng.gen_range(1..=rank) as i64;
            let l = if rng.gen_bool(0.5) { g } else { -g };
            if letters.last() == Some(&-l) {
                continue;
            }
            letters.push(l);
        }
        FreeWord::from_letters(&letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (k, &(g, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

/// Vector in `(ℤ/m)^N` with entries kept in `0..m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    modulus: u32,
    entries: Vec<u32>,
}

impl WeightVector {
    pub fn new(modulus: u32, entries: Vec<i64>) -> WeightVector {
        assert!(modulus >= 1, "modulus must be positive");
        let m = modulus as i64;
        WeightVector { modulus, entries: entries.into_iter().map(|x| x.rem_euclid(m) as u32).collect() }
    }

    pub fn zero(modulus: u32, rank: usize) -> WeightVector {
        WeightVector { modulus, entries: vec![0; rank] }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!(self.rank(), other.rank(), "mixed ranks");
        WeightVector {
            modulus: self.modulus,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % self.modulus).collect(),
        }
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector {
            modulus: self.modulus,
            entries: self.entries.iter().map(|&a| (self.modulus - a) % self.modulus).collect(),
        }
    }

    /// Mixed-radix index in `0..m^N` (first entry least significant).
    pub fn index(&self) -> usize {
        self.entries.iter().rev().fold(0usize, |acc, &x| acc * self.modulus as usize + x as usize)
    }

    pub fn from_index(modulus: u32, rank: usize, mut idx: usize) -> WeightVector {
        let mut entries = Vec::with_capacity(rank);
        for _ in 0..rank {
            entries.push((idx % modulus as usize) as u32);
            idx /= modulus as usize;
        }
        WeightVector { modulus, entries }
    }
}

impl Weight for WeightVector {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, k: i64) -> Self {
        WeightVector::new(self.modulus, self.entries.iter().map(|&x| x as i64 * k).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s, 2).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("g1^2 g2").syllables(), &[(1, 2), (2, 1)]);
        assert!(w("g1 g1^-1").is_identity());
        assert_eq!(w("g2 g1^-1").syllables(), &[(2, 1), (1, -1)]);
        assert!(w("").is_identity());
        assert!(w(" e ").is_identity());
        assert_eq!(w("g1g2g2").syllables(), &[(1, 1), (2, 2)]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(FreeWord::parse("g1 g3", 2).unwrap_err(), Error::GeneratorOutOfRange { index: 3, rank: 2 });
        assert_eq!(FreeWord::parse("g1^0", 2).unwrap_err(), Error::ZeroExponent(3));
        match FreeWord::parse("g1 h2", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(FreeWord::parse("g", 2).is_err());
        assert!(FreeWord::parse("g1^", 2).is_err());
        assert!(FreeWord::parse("g0", 2).is_err());
    }

    #[test]
    fn word_ops_examples() {
        assert_eq!(w("g1^2 g2").inverse().syllables(), &[(2, -1), (1, -2)]);
        assert_eq!(w("g1").concat(&w("g2")).syllables(), &[(1, 1), (2, 1)]);
        assert_eq!(w("g1 g2^-1").concat(&w("g2")).syllables(), &[(1, 1)]);
        let u = w("g1^3 g2^-2 g1");
        assert!(u.concat(&u.inverse()).is_identity());
        assert_eq!(u.pow(-2), u.inverse().concat(&u.inverse()));
    }

    #[test]
    fn weights_and_stats() {
        assert_eq!(w("g1^2 g2").weight_vector(2, 2).entries(), &[0, 1]);
        assert_eq!(w("g1 g2").weight_vector(2, 2).entries(), &[1, 1]);
        assert!(w("e").weight_vector(5, 2).is_zero());
        assert_eq!(w("g1 g2^-1").stats(), (2, 1));
        assert_eq!(w("g1^2").stats(), (2, 0));
        assert_eq!(w("e").stats(), (0, 0));
        assert_eq!(w("g1 g2^-1").weight_vector(3, 2).entries(), &[1, 2]);
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("g1 g2 g1^-1").cyclic_reduce(), w("g2"));
        assert_eq!(w("g1 g2 g1").cyclic_reduce(), w("g1^2 g2"));
        assert_eq!(w("g1^2 g2 g1^-2").cyclic_reduce(), w("g2"));
        assert_eq!(w("g2 g1 g2^-1 g1").cyclic_reduce(), w("g2 g1 g2^-1 g1"));
    }

    #[test]
    fn weight_index_round_trip() {
        for idx in 0..27 {
            let v = WeightVector::from_index(3, 3, idx);
            assert_eq!(v.index(), idx);
        }
        let v = WeightVector::new(4, vec![3, 1]);
        assert!(v.add(&v.neg()).is_zero());
    }
}
