//! One- and two-row tableaux over a classical alphabet.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::letters::{Alphabet, Classical, Letter, LetterOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub r1: usize,
    pub r2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    alphabet: Alphabet,
    row1: Vec<Letter>,
    row2: Vec<Letter>,
}

/// A clause of the semistandard conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// A row fails to weakly increase (row 1 or 2).
    RowOrder(u8),
    /// Column entries fail the strictness clause of the family.
    ColumnOrder,
    /// The column (0, 0̄).
    ZeroPair,
    /// The column (1, 1̄) in types B and D.
    OneBarPair,
    /// (αₐ,αₐ₊₁,βₐ₊₁) = (x,x,x̄) or (αₐ,βₐ,βₐ₊₁) = (x,x̄,x̄).
    XXConfig,
    /// Forbidden (αₐ,βₐ₊₁) pairs around n.
    NNConfig,
    /// Forbidden type D quadruples around n−1 and n.
    Quadruple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub condition: Condition,
    /// 1-based column where the offending pattern starts.
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Tableau {
    pub fn new(alphabet: Alphabet, row1: Vec<Letter>, row2: Vec<Letter>) -> Result<Self, TableauError> {
        if row2.len() > row1.len() {
            return Err(TableauError::RowLength { r1: row1.len(), r2: row2.len() });
        }
        for &a in row1.iter().chain(&row2) {
            alphabet.check(a)?;
        }
        Ok(Tableau { alphabet, row1, row2 })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Tableau { alphabet, row1: Vec::new(), row2: Vec::new() }
    }

    pub fn one_row(alphabet: Alphabet, row: Vec<Letter>) -> Result<Self, TableauError> {
        Self::new(alphabet, row, Vec::new())
    }

    /// Build from columns listed left to right; two-box columns must come first.
    pub fn from_columns(alphabet: Alphabet, columns: &[Vec<Letter>]) -> Result<Self, TableauError> {
        let mut row1 = Vec::new();
        let mut row2 = Vec::new();
        for col in columns {
            match col.as_slice() {
                [a] => row1.push(*a),
                [a, b] => {
                    if row2.len() != row1.len() {
                        return Err(TableauError::RowLength { r1: row1.len(), r2: row2.len() + 1 });
                    }
                    row1.push(*a);
                    row2.push(*b);
                }
                _ => return Err(TableauError::TooManyRows(format!("{col:?}"))),
            }
        }
        Self::new(alphabet, row1, row2)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn row1(&self) -> &[Letter] {
        &self.row1
    }

    pub fn row2(&self) -> &[Letter] {
        &self.row2
    }

    pub fn shape(&self) -> Shape {
        Shape { r1: self.row1.len(), r2: self.row2.len() }
    }

    pub fn len(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row1.is_empty()
    }

    pub fn num_columns(&self) -> usize {
        self.row1.len()
    }

    /// Column `j` (0-based), top first.
    pub fn column(&self, j: usize) -> Vec<Letter> {
        let mut c = vec![self.row1[j]];
        if let Some(&b) = self.row2.get(j) {
            c.push(b);
        }
        c
    }

    pub fn columns(&self) -> Vec<Vec<Letter>> {
        (0..self.num_columns()).map(|j| self.column(j)).collect()
    }

    /// Columns right to left, each read top to bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.len());
        for j in (0..self.num_columns()).rev() {
            w.push(self.row1[j]);
            if let Some(&b) = self.row2.get(j) {
                w.push(b);
            }
        }
        w
    }

    /// Inverse of `reading_word` for a known shape.
    pub fn from_reading_word(alphabet: Alphabet, shape: Shape, word: &[Letter]) -> Result<Self, TableauError> {
        if shape.r2 > shape.r1 {
            return Err(TableauError::RowLength { r1: shape.r1, r2: shape.r2 });
        }
        if word.len() != shape.r1 + shape.r2 {
            return Err(TableauError::RowLength { r1: shape.r1, r2: word.len() - shape.r1.min(word.len()) });
        }
        let mut columns = Vec::with_capacity(shape.r1);
        let mut it = word.iter().copied();
        for j in (0..shape.r1).rev() {
            let height = if j < shape.r2 { 2 } else { 1 };
            columns.push(it.by_ref().take(height).collect::<Vec<_>>());
        }
        columns.reverse();
        Self::from_columns(alphabet, &columns)
    }

    /// Replace the letter at `pos` in the reading word.
    pub fn with_word_letter(&self, pos: usize, letter: Letter) -> Result<Self, TableauError> {
        let mut w = self.reading_word();
        w[pos] = letter;
        Self::from_reading_word(self.alphabet, self.shape(), &w)
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self, TableauError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty(alphabet));
        }
        let rows: Vec<&str> = text.split('/').collect();
        if rows.len() > 2 {
            return Err(TableauError::TooManyRows(text.to_string()));
        }
        let parse_row = |r: &str| -> Result<Vec<Letter>, TableauError> {
            r.split_whitespace().map(|t| Ok(alphabet.check(t.parse::<Letter>()?)?)).collect()
        };
        let row1 = parse_row(rows[0])?;
        let row2 = match rows.get(1) {
            Some(r) => parse_row(r)?,
            None => Vec::new(),
        };
        Self::new(alphabet, row1, row2)
    }

    pub fn render(&self) -> String {
        let join = |r: &[Letter]| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
        if self.row2.is_empty() {
            join(&self.row1)
        } else {
            format!("{} / {}", join(&self.row1), join(&self.row2))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let a = self.alphabet;
        let n = a.rank;
        let le = |x: Letter, y: Letter| a.le(x, y);
        let mut out = Vec::new();
        let mut flag = |condition, column| out.push(Violation { condition, column });

        for (r, row) in [(1u8, &self.row1), (2u8, &self.row2)] {
            for j in 1..row.len() {
                if !le(row[j - 1], row[j]) {
                    flag(Condition::RowOrder(r), j);
                }
            }
        }

        let x_max = if a.kind == Classical::C { n } else { n - 1 };
        let is_x = |x: Letter| matches!(x, Letter::Plain(k) if (1..=x_max).contains(&k));
        let top = |j: usize| self.row1[j];
        let bottom = |j: usize| self.row2.get(j).copied();
        let nn = Letter::Plain(n);
        let nb = Letter::Bar(n);

        for j in 0..self.num_columns() {
            let col = j + 1;
            if let Some(b) = bottom(j) {
                let t = top(j);
                let strict = match a.kind {
                    Classical::C => a.lt(t, b),
                    Classical::B => a.lt(t, b) || (t == Letter::Circ && b == Letter::Circ),
                    Classical::D => a.lt(t, b) || a.order(t, b) == LetterOrder::Incomparable,
                };
                if !strict {
                    flag(Condition::ColumnOrder, col);
                }
                match a.kind {
                    Classical::C if (t, b) == (Letter::ZERO, Letter::ZERO_BAR) => flag(Condition::ZeroPair, col),
                    Classical::B | Classical::D if (t, b) == (Letter::Plain(1), Letter::Bar(1)) => {
                        flag(Condition::OneBarPair, col)
                    }
                    _ => {}
                }
            }
            if j + 1 >= self.num_columns() {
                continue;
            }
            let (t, t2) = (top(j), top(j + 1));
            if let Some(b2) = bottom(j + 1) {
                let b = bottom(j).expect("two-box columns are left-justified");
                if is_x(t) && t2 == t && b2 == t.bar() {
                    flag(Condition::XXConfig, col);
                }
                if is_x(t) && b == t.bar() && b2 == t.bar() {
                    flag(Condition::XXConfig, col);
                }
                match a.kind {
                    Classical::B => {
                        let pairs = [(nn, nb), (nn, Letter::Circ), (Letter::Circ, Letter::Circ), (Letter::Circ, nb)];
                        if pairs.contains(&(t, b2)) {
                            flag(Condition::NNConfig, col);
                        }
                    }
                    Classical::D => {
                        if [nn, nb].contains(&t) && [nn, nb].contains(&b2) {
                            flag(Condition::NNConfig, col);
                        }
                        let m = Letter::Plain(n - 1);
                        let quads = [(m, nn, nn, m.bar()), (m, nb, nb, m.bar())];
                        if quads.contains(&(t, t2, b, b2)) {
                            flag(Condition::Quadruple, col);
                        }
                    }
                    Classical::C => {}
                }
            }
        }
        ValidationReport { violations: out }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
