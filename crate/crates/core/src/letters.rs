//! Alphabets, letter orders and single-box crystal arrows.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::LetterError;

/// Largest rank whose letters fit single-digit tokens.
pub const MAX_RANK: u8 = 9;

/// The five affine families with one-row crystals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Affine {
    A2,
    D2,
    C1,
    B1,
    D1,
}

impl Affine {
    pub const ALL: [Affine; 5] = [Affine::A2, Affine::D2, Affine::C1, Affine::B1, Affine::D1];

    pub fn classical(self) -> Classical {
        match self {
            Affine::A2 | Affine::C1 => Classical::C,
            Affine::D2 | Affine::B1 => Classical::B,
            Affine::D1 => Classical::D,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Affine::A2 => "A2",
            Affine::D2 => "D2",
            Affine::C1 => "C1",
            Affine::B1 => "B1",
            Affine::D1 => "D1",
        }
    }

    /// Families whose one-row crystals are twisted and go through the doubling map.
    pub fn is_twisted(self) -> bool {
        matches!(self, Affine::A2 | Affine::D2)
    }

    /// Families with an explicit 0-arrow.
    pub fn has_zero_arrow(self) -> bool {
        matches!(self, Affine::A2 | Affine::C1)
    }

    /// Families whose coordinates carry the x∘ slot.
    pub fn has_circ(self) -> bool {
        matches!(self, Affine::D2 | Affine::B1)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Affine {
    type Err = LetterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A2" => Ok(Affine::A2),
            "D2" => Ok(Affine::D2),
            "C1" => Ok(Affine::C1),
            "B1" => Ok(Affine::B1),
            "D1" => Ok(Affine::D1),
            other => Err(LetterError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classical {
    B,
    C,
    D,
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classical::B => "B",
            Classical::C => "C",
            Classical::D => "D",
        };
        f.write_str(s)
    }
}

/// An affine family together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    affine: Affine,
    rank: u8,
}

impl Family {
    pub fn new(affine: Affine, rank: u8) -> Result<Self, LetterError> {
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(LetterError::BadRank(rank));
        }
        Ok(Family { affine, rank })
    }

    pub fn affine(self) -> Affine {
        self.affine
    }

    pub fn rank(self) -> u8 {
        self.rank
    }

    pub fn classical(self) -> Classical {
        self.affine.classical()
    }

    pub fn alphabet(self) -> Alphabet {
        Alphabet { kind: self.classical(), rank: self.rank }
    }
}

/// One box of a tableau. `Plain(0)` and `Bar(0)` are the padding letters of the C alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Plain(u8),
    Circ,
    Bar(u8),
}

impl Letter {
    pub const ZERO: Letter = Letter::Plain(0);
    pub const ZERO_BAR: Letter = Letter::Bar(0);

    pub fn bar(self) -> Letter {
        match self {
            Letter::Plain(k) => Letter::Bar(k),
            Letter::Bar(k) => Letter::Plain(k),
            Letter::Circ => Letter::Circ,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Letter::Bar(_))
    }

    /// Index k of k or k̄; none for ∘.
    pub fn index(self) -> Option<u8> {
        match self {
            Letter::Plain(k) | Letter::Bar(k) => Some(k),
            Letter::Circ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(k) => write!(f, "{k}"),
            Letter::Bar(k) => write!(f, "-{k}"),
            Letter::Circ => f.write_str("o"),
        }
    }
}

impl FromStr for Letter {
    type Err = LetterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LetterError::BadToken(s.to_string());
        if s == "o" {
            return Ok(Letter::Circ);
        }
        let (barred, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if digits.len() != 1 {
            return Err(bad());
        }
        let k = digits.parse::<u8>().map_err(|_| bad())?;
        Ok(if barred { Letter::Bar(k) } else { Letter::Plain(k) })
    }
}

/// Result of comparing two letters; D alphabets leave n and n̄ unordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// A classical alphabet: letters, order and the vector-representation crystal on single boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub kind: Classical,
    pub rank: u8,
}

impl Alphabet {
    pub fn new(kind: Classical, rank: u8) -> Result<Self, LetterError> {
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(LetterError::BadRank(rank));
        }
        Ok(Alphabet { kind, rank })
    }

    pub fn contains(&self, a: Letter) -> bool {
        let n = self.rank;
        match (self.kind, a) {
            (_, Letter::Plain(k) | Letter::Bar(k)) if (1..=n).contains(&k) => true,
            (Classical::C, Letter::Plain(0) | Letter::Bar(0)) => true,
            (Classical::B, Letter::Circ) => true,
            _ => false,
        }
    }

    pub fn check(&self, a: Letter) -> Result<Letter, LetterError> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(LetterError::NotInAlphabet { letter: a.to_string(), kind: self.kind, rank: self.rank })
        }
    }

    /// All letters in increasing order (for D, n precedes n̄ in this listing only).
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.rank;
        let mut out = Vec::new();
        if self.kind == Classical::C {
            out.push(Letter::ZERO);
        }
        out.extend((1..=n).map(Letter::Plain));
        if self.kind == Classical::B {
            out.push(Letter::Circ);
        }
        out.extend((1..=n).rev().map(Letter::Bar));
        if self.kind == Classical::C {
            out.push(Letter::ZERO_BAR);
        }
        out
    }

    /// Position in the chain; n and n̄ share a level in type D.
    fn level(&self, a: Letter) -> u8 {
        let n = self.rank;
        match (self.kind, a) {
            (_, Letter::Plain(k)) => k,
            (Classical::B, Letter::Circ) => n + 1,
            (Classical::C, Letter::Bar(k)) => 2 * n + 1 - k,
            (Classical::B, Letter::Bar(k)) => 2 * n + 2 - k,
            (Classical::D, Letter::Bar(k)) => 2 * n - k,
            (_, Letter::Circ) => unreachable!("∘ outside the B alphabet"),
        }
    }

    pub fn compare(&self, a: Letter, b: Letter) -> Result<LetterOrder, LetterError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.order(a, b))
    }

    /// `compare` without membership checks; callers guarantee both letters belong.
    pub fn order(&self, a: Letter, b: Letter) -> LetterOrder {
        if a == b {
            return LetterOrder::Equal;
        }
        match self.level(a).cmp(&self.level(b)) {
            Ordering::Less => LetterOrder::Less,
            Ordering::Greater => LetterOrder::Greater,
            Ordering::Equal => LetterOrder::Incomparable,
        }
    }

    pub fn lt(&self, a: Letter, b: Letter) -> bool {
        self.order(a, b) == LetterOrder::Less
    }

    pub fn le(&self, a: Letter, b: Letter) -> bool {
        matches!(self.order(a, b), LetterOrder::Less | LetterOrder::Equal)
    }

    /// f̃ᵢ on a single box, `None` when it kills the box.
    pub fn box_f(&self, i: u8, a: Letter) -> Option<Letter> {
        let n = self.rank;
        if i == 0 || i > n {
            return None;
        }
        match self.kind {
            Classical::D if i >= n - 1 => {
                let (m, last) = (n - 1, n);
                if i == m {
                    match a {
                        Letter::Plain(k) if k == m => Some(Letter::Plain(last)),
                        Letter::Bar(k) if k == last => Some(Letter::Bar(m)),
                        _ => None,
                    }
                } else {
                    match a {
                        Letter::Plain(k) if k == m => Some(Letter::Bar(last)),
                        Letter::Plain(k) if k == last => Some(Letter::Bar(m)),
                        _ => None,
                    }
                }
            }
            _ if i < n => match a {
                Letter::Plain(k) if k == i => Some(Letter::Plain(i + 1)),
                Letter::Bar(k) if k == i + 1 => Some(Letter::Bar(i)),
                _ => None,
            },
            Classical::C => match a {
                Letter::Plain(k) if k == n => Some(Letter::Bar(n)),
                _ => None,
            },
            Classical::B => match a {
                Letter::Plain(k) if k == n => Some(Letter::Circ),
                Letter::Circ => Some(Letter::Bar(n)),
                _ => None,
            },
            Classical::D => unreachable!(),
        }
    }

    /// ẽᵢ on a single box, the inverse relation of `box_f`.
    pub fn box_e(&self, i: u8, a: Letter) -> Option<Letter> {
        self.letters().into_iter().find(|&b| self.box_f(i, b) == Some(a))
    }

    pub fn box_eps(&self, i: u8, a: Letter) -> usize {
        let mut steps = 0;
        let mut cur = a;
        while let Some(next) = self.box_e(i, cur) {
            cur = next;
            steps += 1;
        }
        steps
    }

    pub fn box_phi(&self, i: u8, a: Letter) -> usize {
        let mut steps = 0;
        let mut cur = a;
        while let Some(next) = self.box_f(i, cur) {
            cur = next;
            steps += 1;
        }
        steps
    }

    /// Weight of a single box in the standard coordinates ε₁..εₙ.
    pub fn box_weight(&self, a: Letter) -> Vec<i64> {
        let mut w = vec![0; self.rank as usize];
        match a {
            Letter::Plain(k) if k >= 1 => w[k as usize - 1] += 1,
            Letter::Bar(k) if k >= 1 => w[k as usize - 1] -= 1,
            _ => {}
        }
        w
    }

    /// Simple root αᵢ in the standard coordinates, matching the arrow tables.
    pub fn simple_root(&self, i: u8) -> Vec<i64> {
        let n = self.rank as usize;
        let i = i as usize;
        let mut r = vec![0; n];
        if i < n {
            r[i - 1] = 1;
            r[i] = -1;
        }
        if i == n {
            match self.kind {
                Classical::C => r[n - 1] = 2,
                Classical::B => r[n - 1] = 1,
                Classical::D => {
                    r[n - 2] = 1;
                    r[n - 1] = 1;
                }
            }
        }
        r
    }
}
