//! One-row affine crystals as coordinate vectors, Kashiwara operators, tensor products and the doubling map.

use std::fmt;

use crate::error::CrystalError;
use crate::letters::{Affine, Alphabet, Family, Letter};
use crate::tableaux::Tableau;

/// Kashiwara operators with string statistics computed by walking.
pub trait Crystal: Sized {
    fn e(&self, i: u8) -> Result<Option<Self>, CrystalError>;
    fn f(&self, i: u8) -> Result<Option<Self>, CrystalError>;

    fn eps(&self, i: u8) -> Result<usize, CrystalError> {
        walk(self, i, true)
    }

    fn phi(&self, i: u8) -> Result<usize, CrystalError> {
        walk(self, i, false)
    }
}

/// Length of the i-string above (raise) or below x.
fn walk<C: Crystal>(x: &C, i: u8, raise: bool) -> Result<usize, CrystalError> {
    let step = |y: &C| if raise { y.e(i) } else { y.f(i) };
    let mut steps = 0;
    let mut cur = step(x)?;
    while let Some(y) = cur {
        steps += 1;
        cur = step(&y)?;
    }
    Ok(steps)
}

/// Signature of a word: unmatched −'s and +'s after cancelling each + against a later −.
fn signature(alph: Alphabet, i: u8, word: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (p, &a) in word.iter().enumerate() {
        for _ in 0..alph.box_eps(i, a) {
            if plus.pop().is_none() {
                minus.push(p);
            }
        }
        for _ in 0..alph.box_phi(i, a) {
            plus.push(p);
        }
    }
    (minus, plus)
}

/// ẽᵢ on a word whose first letter is the first tensor factor; returns the changed position and letter.
pub fn word_e(alph: Alphabet, i: u8, word: &[Letter]) -> Option<(usize, Letter)> {
    let (minus, _) = signature(alph, i, word);
    let p = *minus.last()?;
    Some((p, alph.box_e(i, word[p]).expect("unmatched − has an e-arrow")))
}

pub fn word_f(alph: Alphabet, i: u8, word: &[Letter]) -> Option<(usize, Letter)> {
    let (_, plus) = signature(alph, i, word);
    let p = *plus.first()?;
    Some((p, alph.box_f(i, word[p]).expect("unmatched + has an f-arrow")))
}

fn check_classical(i: u8, rank: u8) -> Result<(), CrystalError> {
    if i == 0 || i > rank {
        return Err(CrystalError::BadIndex { i, n: rank });
    }
    Ok(())
}

impl Crystal for Tableau {
    fn e(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        let a = self.alphabet();
        if i == 0 {
            return Err(CrystalError::UnsupportedZeroArrow(format!("{} tableaux", a.kind)));
        }
        check_classical(i, a.rank)?;
        match word_e(a, i, &self.reading_word()) {
            Some((p, x)) => Ok(Some(self.with_word_letter(p, x)?)),
            None => Ok(None),
        }
    }

    fn f(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        let a = self.alphabet();
        if i == 0 {
            return Err(CrystalError::UnsupportedZeroArrow(format!("{} tableaux", a.kind)));
        }
        check_classical(i, a.rank)?;
        match word_f(a, i, &self.reading_word()) {
            Some((p, x)) => Ok(Some(self.with_word_letter(p, x)?)),
            None => Ok(None),
        }
    }
}

/// A point of B_l: coordinates x₁..xₙ, x̄ₙ..x̄₁ and, for D2 and B1, the x∘ slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    fam: Family,
    capacity: u32,
    coords: Vec<u32>,
    circ: u8,
}

impl Element {
    pub fn new(fam: Family, capacity: u32, coords: Vec<u32>, circ: u8) -> Result<Self, CrystalError> {
        let e = Element { fam, capacity, coords, circ };
        e.validate()?;
        Ok(e)
    }

    fn validate(&self) -> Result<(), CrystalError> {
        let n = self.fam.rank() as usize;
        let bad = |why: &str| Err(CrystalError::InvalidElement(format!("{why}: {self}")));
        if self.coords.len() != 2 * n {
            return bad("wrong number of coordinates");
        }
        if self.capacity == 0 {
            return bad("capacity must be positive");
        }
        if self.circ > 1 || (self.circ == 1 && !self.fam.affine().has_circ()) {
            return bad("x∘ must be 0 or 1 and only for D2 or B1");
        }
        let total = self.size();
        let l = self.capacity;
        match self.fam.affine() {
            Affine::A2 | Affine::D2 if total > l => bad("size exceeds capacity"),
            Affine::C1 if total > l || !(l - total).is_multiple_of(2) => {
                bad("size must not exceed capacity and share its parity")
            }
            Affine::B1 if total != l => bad("size must equal capacity"),
            Affine::D1 if total != l => bad("size must equal capacity"),
            Affine::D1 if self.x(n as u8) > 0 && self.xbar(n as u8) > 0 => bad("xn and x̄n both positive"),
            _ => Ok(()),
        }
    }

    /// The highest element (l, 0, …, 0).
    pub fn highest(fam: Family, capacity: u32) -> Self {
        let mut coords = vec![0; 2 * fam.rank() as usize];
        coords[0] = capacity;
        Element { fam, capacity, coords, circ: 0 }
    }

    /// The lowest element (0, …, 0, l) of the letter 1̄ repeated.
    pub fn lowest(fam: Family, capacity: u32) -> Self {
        let mut coords = vec![0; 2 * fam.rank() as usize];
        *coords.last_mut().unwrap() = capacity;
        Element { fam, capacity, coords, circ: 0 }
    }

    pub fn family(&self) -> Family {
        self.fam
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn circ(&self) -> u8 {
        self.circ
    }

    pub fn x(&self, i: u8) -> u32 {
        self.coords[i as usize - 1]
    }

    pub fn xbar(&self, i: u8) -> u32 {
        self.coords[self.coords.len() - i as usize]
    }

    /// Number of non-padding letters, counting x∘.
    pub fn size(&self) -> u32 {
        self.coords.iter().sum::<u32>() + self.circ as u32
    }

    /// Padding count x_∅ = x̄_∅ of a C1 element.
    pub fn padding(&self) -> u32 {
        (self.capacity - self.size()) / 2
    }

    fn slot(&self, a: Letter) -> Option<usize> {
        let n = self.fam.rank() as usize;
        match a {
            Letter::Plain(k) if k >= 1 => Some(k as usize - 1),
            Letter::Bar(k) if k >= 1 => Some(2 * n - k as usize),
            _ => None,
        }
    }

    /// The one-row tableau: x₁ 1's, …, x∘ ∘'s, …, x̄₁ 1̄'s.
    pub fn tableau(&self) -> Tableau {
        Tableau::one_row(self.fam.alphabet(), self.letters()).expect("element letters lie in its alphabet")
    }

    fn letters(&self) -> Vec<Letter> {
        let n = self.fam.rank();
        let mut row = Vec::with_capacity(self.size() as usize);
        for k in 1..=n {
            row.extend(std::iter::repeat_n(Letter::Plain(k), self.x(k) as usize));
        }
        if self.circ == 1 {
            row.push(Letter::Circ);
        }
        for k in (1..=n).rev() {
            row.extend(std::iter::repeat_n(Letter::Bar(k), self.xbar(k) as usize));
        }
        row
    }

    /// The padded row of a C1 element: x_∅ 0's, the letters, x̄_∅ 0̄'s.
    pub fn padded_tableau(&self) -> Result<Tableau, CrystalError> {
        if self.fam.affine() != Affine::C1 {
            return Err(CrystalError::InvalidElement(format!("padded rows are for C1 elements, got {self}")));
        }
        let pad = self.padding() as usize;
        let mut row = vec![Letter::ZERO; pad];
        row.extend(self.letters());
        row.extend(std::iter::repeat_n(Letter::ZERO_BAR, pad));
        Ok(Tableau::one_row(self.fam.alphabet(), row)?)
    }

    /// The padded row of the doubled element, for twisted families.
    pub fn omega_tableau(&self) -> Result<Tableau, CrystalError> {
        self.omega()?.padded_tableau()
    }

    /// Read an element back from a one-row tableau; C1 rows may carry equal numbers of 0's and 0̄'s.
    pub fn from_tableau(fam: Family, capacity: u32, t: &Tableau) -> Result<Self, CrystalError> {
        if !t.row2().is_empty() {
            return Err(CrystalError::InvalidElement(format!("two-row tableau {t}")));
        }
        let n = fam.rank() as usize;
        let mut coords = vec![0u32; 2 * n];
        let (mut circ, mut zeros, mut zero_bars) = (0u8, 0u32, 0u32);
        let probe = Element { fam, capacity, coords: coords.clone(), circ: 0 };
        for &a in t.row1() {
            fam.alphabet().check(a)?;
            match a {
                Letter::Circ => circ += 1,
                Letter::Plain(0) => zeros += 1,
                Letter::Bar(0) => zero_bars += 1,
                _ => coords[probe.slot(a).unwrap()] += 1,
            }
        }
        if zeros != zero_bars {
            return Err(CrystalError::InvalidElement(format!("unequal padding in {t}")));
        }
        if zeros > 0 && t.row1().len() != capacity as usize {
            return Err(CrystalError::InvalidElement(format!("padded row {t} does not have length {capacity}")));
        }
        Element::new(fam, capacity, coords, circ)
    }

    pub fn weight(&self) -> Vec<i64> {
        let n = self.fam.rank();
        (1..=n).map(|k| self.x(k) as i64 - self.xbar(k) as i64).collect()
    }

    /// The doubling map into the C1 crystal of capacity 2l.
    pub fn omega(&self) -> Result<Element, CrystalError> {
        if !self.fam.affine().is_twisted() {
            return Err(CrystalError::NotTwisted(self.fam.affine().to_string()));
        }
        let n = self.fam.rank() as usize;
        let mut coords: Vec<u32> = self.coords.iter().map(|&c| 2 * c).collect();
        coords[n - 1] += self.circ as u32;
        coords[n] += self.circ as u32;
        let fam = Family::new(Affine::C1, self.fam.rank())?;
        Element::new(fam, 2 * self.capacity, coords, 0)
    }

    /// Inverse of the doubling map onto the twisted family `target`.
    pub fn omega_inverse(&self, target: Affine) -> Result<Element, CrystalError> {
        if !target.is_twisted() {
            return Err(CrystalError::NotTwisted(target.to_string()));
        }
        if self.fam.affine() != Affine::C1 {
            return Err(CrystalError::NotInImage(format!("{self} is not a C1 element")));
        }
        if !self.capacity.is_multiple_of(2) {
            return Err(CrystalError::NotInImage(format!("odd capacity in {self}")));
        }
        let n = self.fam.rank() as usize;
        let mut coords = self.coords.clone();
        let mut circ = 0u8;
        if target == Affine::D2 {
            let (a, b) = (coords[n - 1], coords[n]);
            if a % 2 != b % 2 {
                return Err(CrystalError::NotInImage(format!("xn and x̄n parities differ in {self}")));
            }
            circ = (a % 2) as u8;
            coords[n - 1] -= circ as u32;
            coords[n] -= circ as u32;
        }
        if let Some(p) = coords.iter().position(|c| c % 2 != 0) {
            return Err(CrystalError::NotInImage(format!("odd coordinate {} in {self}", p + 1)));
        }
        let fam = Family::new(target, self.fam.rank())?;
        Element::new(fam, self.capacity / 2, coords.iter().map(|c| c / 2).collect(), circ)
    }

    fn replace(&self, old: Letter, new: Letter) -> Element {
        let mut next = self.clone();
        match self.slot(old) {
            Some(s) => next.coords[s] -= 1,
            None => next.circ -= 1,
        }
        match self.slot(new) {
            Some(s) => next.coords[s] += 1,
            None => next.circ += 1,
        }
        next
    }

    fn classical(&self, i: u8, raise: bool) -> Option<Element> {
        let alph = self.fam.alphabet();
        let mut word = self.letters();
        word.reverse();
        let (p, new) = if raise { word_e(alph, i, &word)? } else { word_f(alph, i, &word)? };
        Some(self.replace(word[p], new))
    }

    fn zero_arrow(&self, raise: bool) -> Result<Option<Element>, CrystalError> {
        let step = match self.fam.affine() {
            Affine::A2 => 1,
            Affine::C1 => 2,
            other => return Err(CrystalError::UnsupportedZeroArrow(other.to_string())),
        };
        let last = self.coords.len() - 1;
        let (x1, xb1) = (self.coords[0], self.coords[last]);
        // raising eats 1's first and then adds 1̄'s; lowering is the mirror image
        let (mine, other) = if raise { (0, last) } else { (last, 0) };
        let (have, opp) = if raise { (x1, xb1) } else { (xb1, x1) };
        let mut next = self.clone();
        if have >= opp + step {
            next.coords[mine] -= step;
        } else if step == 2 && have == opp + 1 {
            next.coords[mine] -= 1;
            next.coords[other] += 1;
        } else {
            if self.size() + step > self.capacity {
                return Ok(None);
            }
            next.coords[other] += step;
        }
        Ok(Some(next))
    }

    fn apply(&self, i: u8, raise: bool) -> Result<Option<Element>, CrystalError> {
        if i == 0 {
            return self.zero_arrow(raise);
        }
        check_classical(i, self.fam.rank())?;
        Ok(self.classical(i, raise))
    }

    pub fn parse(text: &str) -> Result<Self, CrystalError> {
        let bad = || CrystalError::Parse(text.to_string());
        let mut parts = text.trim().splitn(3, ':');
        let fam_tag = parts.next().ok_or_else(bad)?;
        let header = parts.next().ok_or_else(bad)?;
        let body = parts.next().ok_or_else(bad)?;
        let affine: Affine = fam_tag.parse()?;
        let (n_part, l_part) = header.split_once(',').ok_or_else(bad)?;
        let n: u8 = n_part.strip_prefix("n=").and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let l: u32 = l_part.strip_prefix("l=").and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        Self::parse_coords(Family::new(affine, n)?, l, body)
    }

    /// Parse the bracketed coordinate list "[x1,…,xn(,o=c),xbn,…,xb1]".
    pub fn parse_coords(fam: Family, capacity: u32, text: &str) -> Result<Self, CrystalError> {
        let bad = || CrystalError::Parse(text.to_string());
        let inner = text.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
        let n = fam.rank() as usize;
        let mut coords = Vec::with_capacity(2 * n);
        let mut circ = None;
        for (idx, tok) in inner.split(',').map(str::trim).enumerate() {
            if let Some(v) = tok.strip_prefix("o=") {
                if idx != n || circ.is_some() || !fam.affine().has_circ() {
                    return Err(bad());
                }
                circ = Some(v.parse::<u8>().map_err(|_| bad())?);
            } else {
                coords.push(tok.parse::<u32>().map_err(|_| bad())?);
            }
        }
        if fam.affine().has_circ() && circ.is_none() {
            return Err(bad());
        }
        if coords.len() != 2 * n {
            return Err(bad());
        }
        Element::new(fam, capacity, coords, circ.unwrap_or(0))
    }

    /// The bracketed coordinate list.
    pub fn coords_text(&self) -> String {
        let n = self.fam.rank() as usize;
        let mut parts: Vec<String> = self.coords[..n].iter().map(u32::to_string).collect();
        if self.fam.affine().has_circ() {
            parts.push(format!("o={}", self.circ));
        }
        parts.extend(self.coords[n..].iter().map(u32::to_string));
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={},l={}:{}", self.fam.affine(), self.fam.rank(), self.capacity, self.coords_text())
    }
}

impl Crystal for Element {
    fn e(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        self.apply(i, true)
    }

    fn f(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        self.apply(i, false)
    }

    fn eps(&self, i: u8) -> Result<usize, CrystalError> {
        if i == 0 {
            return walk(self, 0, true);
        }
        check_classical(i, self.fam.rank())?;
        let mut word = self.letters();
        word.reverse();
        Ok(signature(self.fam.alphabet(), i, &word).0.len())
    }

    fn phi(&self, i: u8) -> Result<usize, CrystalError> {
        if i == 0 {
            return walk(self, 0, false);
        }
        check_classical(i, self.fam.rank())?;
        let mut word = self.letters();
        word.reverse();
        Ok(signature(self.fam.alphabet(), i, &word).1.len())
    }
}

/// b ⊗ b′ with the operator acting on the left factor when φ(b) ≥ ε(b′) (raising) or φ(b) > ε(b′) (lowering).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

/// Which factor an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl<A: Crystal + Clone, B: Crystal + Clone> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor { left, right }
    }

    pub fn e_side(&self, i: u8) -> Result<Side, CrystalError> {
        Ok(if self.left.phi(i)? >= self.right.eps(i)? { Side::Left } else { Side::Right })
    }

    pub fn f_side(&self, i: u8) -> Result<Side, CrystalError> {
        Ok(if self.left.phi(i)? > self.right.eps(i)? { Side::Left } else { Side::Right })
    }
}

impl<A: Crystal + Clone, B: Crystal + Clone> Crystal for Tensor<A, B> {
    fn e(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        Ok(match self.e_side(i)? {
            Side::Left => self.left.e(i)?.map(|l| Tensor::new(l, self.right.clone())),
            Side::Right => self.right.e(i)?.map(|r| Tensor::new(self.left.clone(), r)),
        })
    }

    fn f(&self, i: u8) -> Result<Option<Self>, CrystalError> {
        Ok(match self.f_side(i)? {
            Side::Left => self.left.f(i)?.map(|l| Tensor::new(l, self.right.clone())),
            Side::Right => self.right.f(i)?.map(|r| Tensor::new(self.left.clone(), r)),
        })
    }
}

pub type TensorElement = Tensor<Element, Element>;

impl TensorElement {
    pub fn pair(b1: Element, b2: Element) -> Result<Self, CrystalError> {
        if b1.family() != b2.family() {
            return Err(CrystalError::Mismatch(format!("{b1} vs {b2}")));
        }
        Ok(Tensor::new(b1, b2))
    }

    pub fn weight(&self) -> Vec<i64> {
        self.left.weight().iter().zip(self.right.weight()).map(|(a, b)| a + b).collect()
    }

    pub fn family(&self) -> Family {
        self.left.family()
    }

    pub fn omega(&self) -> Result<TensorElement, CrystalError> {
        Ok(Tensor::new(self.left.omega()?, self.right.omega()?))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

/// All compositions of `total` into `parts` nonnegative pieces.
fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Every element of B_l for the family.
pub fn enumerate(fam: Family, capacity: u32) -> Vec<Element> {
    let n = fam.rank() as usize;
    let circs: &[u8] = if fam.affine().has_circ() { &[0, 1] } else { &[0] };
    let sizes: Vec<u32> = match fam.affine() {
        Affine::A2 | Affine::D2 => (0..=capacity).collect(),
        Affine::C1 => (0..=capacity).filter(|s| (capacity - s).is_multiple_of(2)).collect(),
        Affine::B1 | Affine::D1 => vec![capacity],
    };
    let mut out = Vec::new();
    for &c in circs {
        for &s in &sizes {
            if s < c as u32 {
                continue;
            }
            let mut comps = Vec::new();
            compositions(s - c as u32, 2 * n, &mut Vec::new(), &mut comps);
            for coords in comps {
                if let Ok(e) = Element::new(fam, capacity, coords, c) {
                    out.push(e);
                }
            }
        }
    }
    out
}

/// Every element of B_l ⊗ B_k.
pub fn enumerate_pairs(fam: Family, l: u32, k: u32) -> Vec<TensorElement> {
    let left = enumerate(fam, l);
    let right = enumerate(fam, k);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in &left {
        for b in &right {
            out.push(Tensor::new(a.clone(), b.clone()));
        }
    }
    out
}

/// Operator indices that are implemented for the family.
pub fn indices(fam: Family) -> std::ops::RangeInclusive<u8> {
    let lo = if fam.affine().has_zero_arrow() { 0 } else { 1 };
    lo..=fam.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::Classical;
    use proptest::prelude::*;

    fn fam(a: Affine, n: u8) -> Family {
        Family::new(a, n).unwrap()
    }

    fn el(text: &str) -> Element {
        Element::parse(text).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(fam(Affine::A2, 2), 1).len(), 5);
        assert_eq!(enumerate(fam(Affine::B1, 2), 1).len(), 5);
        assert_eq!(enumerate(fam(Affine::D1, 2), 1).len(), 4);
        assert_eq!(enumerate(fam(Affine::C1, 2), 2).len(), 1 + 10);
        let all = enumerate(fam(Affine::D2, 3), 3);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all.len(), 84 + 28);
    }

    #[test]
    fn text_round_trip() {
        for t in ["A2:n=2,l=3:[1,0,0,0]", "B1:n=5,l=5:[0,0,0,0,2,o=1,2,0,0,0,0]", "C1:n=2,l=4:[0,0,0,0]"] {
            assert_eq!(el(t).to_string(), t);
        }
        assert!(Element::parse("B1:n=2,l=2:[1,0,0,1]").is_err());
        assert!(Element::parse("A2:n=2,l=1:[1,0,0,1]").is_err());
        assert!(Element::parse("D1:n=2,l=2:[0,1,1,0]").is_err());
        assert!(Element::parse("C1:n=2,l=3:[1,1,0,0]").is_err());
        assert!(Element::parse("X9:n=2,l=3:[1,1,0,0]").is_err());
    }

    #[test]
    fn tableaux_of_elements() {
        assert_eq!(el("B1:n=5,l=5:[0,0,0,0,2,o=1,2,0,0,0,0]").tableau().render(), "5 5 o -5 -5");
        assert_eq!(el("A2:n=2,l=3:[1,0,0,0]").omega_tableau().unwrap().render(), "0 0 1 1 -0 -0");
        assert_eq!(el("D2:n=2,l=2:[0,1,o=1,0,0]").omega_tableau().unwrap().render(), "2 2 2 -2");
        let zero = el("A2:n=2,l=2:[0,0,0,0]");
        assert!(zero.tableau().is_empty());
        assert_eq!(zero.omega_tableau().unwrap().render(), "0 0 -0 -0");
        assert!(el("B1:n=2,l=1:[1,0,o=0,0,0]").omega_tableau().is_err());
    }

    #[test]
    fn from_tableau_inverts() {
        for f in [fam(Affine::A2, 2), fam(Affine::D2, 2), fam(Affine::B1, 3), fam(Affine::D1, 3), fam(Affine::C1, 2)] {
            for b in enumerate(f, 3) {
                assert_eq!(Element::from_tableau(f, 3, &b.tableau()).unwrap(), b);
                if f.affine() == Affine::C1 {
                    assert_eq!(Element::from_tableau(f, 3, &b.padded_tableau().unwrap()).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(el("A2:n=2,l=3:[1,0,0,0]").omega().unwrap().to_string(), "C1:n=2,l=6:[2,0,0,0]");
        assert_eq!(el("D2:n=2,l=2:[0,1,o=1,0,0]").omega().unwrap().coords()[1], 3);
        for affine in [Affine::A2, Affine::D2] {
            for l in 1..=3 {
                for b in enumerate(fam(affine, 2), l) {
                    assert_eq!(b.omega().unwrap().omega_inverse(affine).unwrap(), b);
                }
            }
        }
        assert!(el("C1:n=2,l=4:[1,1,0,0]").omega_inverse(Affine::A2).is_err());
        assert!(el("C1:n=2,l=4:[0,1,0,1]").omega_inverse(Affine::D2).is_err());
        assert!(el("C1:n=2,l=4:[1,1,0,0]").omega_inverse(Affine::D2).is_err());
    }

    #[test]
    fn zero_arrows_from_closed_forms() {
        let b = el("A2:n=2,l=3:[2,0,0,1]");
        assert_eq!(b.e(0).unwrap().unwrap().to_string(), "A2:n=2,l=3:[1,0,0,1]");
        let c = el("C1:n=2,l=5:[2,0,0,1]");
        assert_eq!(c.e(0).unwrap().unwrap().to_string(), "C1:n=2,l=5:[1,0,0,2]");
        let c = el("C1:n=2,l=6:[3,0,0,1]");
        assert_eq!(c.e(0).unwrap().unwrap().to_string(), "C1:n=2,l=6:[1,0,0,1]");
        assert_eq!(el("A2:n=2,l=1:[0,0,0,1]").e(0).unwrap(), None);
        assert!(matches!(el("B1:n=2,l=1:[1,0,o=0,0,0]").e(0), Err(CrystalError::UnsupportedZeroArrow(_))));
        assert!(matches!(el("A2:n=2,l=1:[1,0,0,0]").e(3), Err(CrystalError::BadIndex { .. })));
    }

    #[test]
    fn tensor_rule_on_tableau_pair() {
        let a = Alphabet::new(Classical::C, 2).unwrap();
        let t = Tensor::new(Tableau::parse("2 / -2", a).unwrap(), Tableau::parse("2", a).unwrap());
        let up = t.e(1).unwrap().unwrap();
        assert_eq!((up.left.render(), up.right.render()), ("1 / -2".to_string(), "2".to_string()));
    }

    #[test]
    fn duality_and_string_lengths() {
        for affine in Affine::ALL {
            for n in 2..=3 {
                let f = fam(affine, n);
                for l in 1..=3 {
                    for b in enumerate(f, l) {
                        for i in indices(f) {
                            if let Some(up) = b.e(i).unwrap() {
                                assert_eq!(up.f(i).unwrap().as_ref(), Some(&b));
                                assert_eq!(up.phi(i).unwrap(), b.phi(i).unwrap() + 1);
                            }
                            if let Some(down) = b.f(i).unwrap() {
                                assert_eq!(down.e(i).unwrap().as_ref(), Some(&b));
                                let w: Vec<i64> = down.weight();
                                if i > 0 {
                                    let r = f.alphabet().simple_root(i);
                                    let bw = b.weight();
                                    for j in 0..n as usize {
                                        assert_eq!(bw[j] - w[j], r[j]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn omega_scales_string_lengths() {
        for l in 1..=3 {
            for b in enumerate(fam(Affine::A2, 2), l) {
                let w = b.omega().unwrap();
                for i in 0..=2u8 {
                    let k = if i == 0 { 1 } else { 2 };
                    assert_eq!(w.phi(i).unwrap(), k * b.phi(i).unwrap());
                    assert_eq!(w.eps(i).unwrap(), k * b.eps(i).unwrap());
                }
            }
            for b in enumerate(fam(Affine::D2, 2), l) {
                let w = b.omega().unwrap();
                for i in 1..=2u8 {
                    let k = if i == 2 { 1 } else { 2 };
                    assert_eq!(w.phi(i).unwrap(), k * b.phi(i).unwrap());
                }
            }
        }
    }

    /// The binary tensor rule applied recursively, one box at a time.
    fn nested_e(alph: Alphabet, i: u8, word: &[Letter]) -> Option<Vec<Letter>> {
        if word.len() == 1 {
            return alph.box_e(i, word[0]).map(|a| vec![a]);
        }
        let rest = &word[1..];
        let phi_first = alph.box_phi(i, word[0]);
        let mut eps_rest = 0;
        let mut cur = rest.to_vec();
        while let Some(next) = nested_e(alph, i, &cur) {
            eps_rest += 1;
            cur = next;
        }
        if phi_first >= eps_rest {
            let a = alph.box_e(i, word[0])?;
            Some(std::iter::once(a).chain(rest.iter().copied()).collect())
        } else {
            let r = nested_e(alph, i, rest)?;
            Some(std::iter::once(word[0]).chain(r).collect())
        }
    }

    fn arb_word() -> impl Strategy<Value = (Alphabet, u8, Vec<Letter>)> {
        (prop_oneof![Just(Classical::B), Just(Classical::C), Just(Classical::D)], 2u8..=3).prop_flat_map(|(k, n)| {
            let a = Alphabet::new(k, n).unwrap();
            (Just(a), 1..=n, proptest::collection::vec(proptest::sample::select(a.letters()), 1..=5))
        })
    }

    proptest! {
        #[test]
        fn signature_rule_matches_nested_tensor_rule((a, i, w) in arb_word()) {
            let fast = word_e(a, i, &w).map(|(p, x)| {
                let mut v = w.clone();
                v[p] = x;
                v
            });
            prop_assert_eq!(fast, nested_e(a, i, &w));
        }
    }
}
