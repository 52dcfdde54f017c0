//! Column insertion, inverse column insertion, bumping routes and tableau products.

use std::fmt;

use crate::error::InsertError;
use crate::letters::{Alphabet, Classical, Letter};
use crate::tableaux::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseName {
    A0,
    A1,
    /// Forward cases B0..B8.
    B(u8),
    /// Inverse cases C0..C8.
    C(u8),
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseName::A0 => f.write_str("A0"),
            CaseName::A1 => f.write_str("A1"),
            CaseName::B(k) => write!(f, "B{k}"),
            CaseName::C(k) => write!(f, "C{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub kind: Classical,
    pub name: CaseName,
}

impl CaseTag {
    /// Whether the inserted letter stays in the first row of its column.
    pub fn settles_in_first_row(&self) -> bool {
        let first: &[u8] = match self.kind {
            Classical::C => &[0, 2, 4],
            Classical::B => &[0, 2, 4, 6, 7],
            Classical::D => &[0, 2, 4, 5, 7],
        };
        match self.name {
            CaseName::A0 => true,
            CaseName::A1 => false,
            CaseName::B(k) => first.contains(&k),
            CaseName::C(_) => false,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.kind, self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Settled(Vec<Letter>),
    Bumped(Vec<Letter>, Letter),
}

impl Outcome {
    pub fn column(&self) -> &[Letter] {
        match self {
            Outcome::Settled(c) | Outcome::Bumped(c, _) => c,
        }
    }

    pub fn bumped(&self) -> Option<Letter> {
        match self {
            Outcome::Settled(_) => None,
            Outcome::Bumped(_, b) => Some(*b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnStep {
    pub outcome: Outcome,
    pub case: CaseTag,
}

/// Result of an inverse column insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseStep {
    pub column: Vec<Letter>,
    pub emitted: Letter,
    pub case: CaseTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteStep {
    /// 1-based column index.
    pub column: usize,
    /// Row (1 or 2) where the letter entering this column ends up.
    pub row: u8,
    pub case: CaseTag,
    pub incoming: Letter,
    pub outgoing: Option<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Route {
    pub steps: Vec<RouteStep>,
}

impl Route {
    pub fn rows(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.row).collect()
    }

    /// Rows never go down from left to right.
    pub fn is_monotone(&self) -> bool {
        self.steps.windows(2).all(|w| w[1].row <= w[0].row)
    }

    /// True when `self` is nowhere below `other` in a column both routes touch.
    pub fn not_below(&self, other: &Route) -> bool {
        self.steps.iter().zip(&other.steps).all(|(a, b)| a.row <= b.row)
    }

    /// The route ended by appending a box to the first row.
    pub fn ends_in_first_row(&self) -> bool {
        self.steps.last().is_some_and(|s| s.case.name == CaseName::A0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxPos {
    /// 1 or 2.
    pub row: u8,
    /// 1-based.
    pub col: usize,
}

/// Test hook: in the named forward case, swap the bumped letter with the new column's top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub case: CaseName,
}

/// Insertion driver for one alphabet, optionally with a deliberately broken case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inserter {
    pub alphabet: Alphabet,
    pub mutation: Option<Mutation>,
}

fn show(col: &[Letter]) -> String {
    col.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

struct Guards {
    a: Alphabet,
}

impl Guards {
    fn lt(&self, x: Letter, y: Letter) -> bool {
        self.a.lt(x, y)
    }

    fn le(&self, x: Letter, y: Letter) -> bool {
        self.a.le(x, y)
    }

    fn unbarred(&self, x: Letter) -> Option<u8> {
        match x {
            Letter::Plain(k) => Some(k),
            _ => None,
        }
    }

    /// (p, q) = (x, x̄) for some unbarred x.
    fn is_pair(&self, p: Letter, q: Letter) -> bool {
        matches!(p, Letter::Plain(_)) && q == p.bar()
    }

    fn is_spin(&self, x: Letter) -> bool {
        self.a.kind == Classical::D && x.index() == Some(self.a.rank) && x != Letter::Circ
    }

    /// Column (n, n̄) or (n̄, n) in type D.
    fn is_spin_pair(&self, p: Letter, q: Letter) -> bool {
        self.is_spin(p) && self.is_spin(q) && p != q
    }
}

impl Inserter {
    pub fn new(alphabet: Alphabet) -> Self {
        Inserter { alphabet, mutation: None }
    }

    pub fn with_mutation(alphabet: Alphabet, mutation: Mutation) -> Self {
        Inserter { alphabet, mutation: Some(mutation) }
    }

    fn tag(&self, name: CaseName) -> CaseTag {
        CaseTag { kind: self.alphabet.kind, name }
    }

    /// Every forward case whose guard accepts (column, a), with its output.
    pub fn forward_matches(&self, col: &[Letter], a: Letter) -> Vec<(CaseName, Outcome)> {
        let g = Guards { a: self.alphabet };
        let kind = self.alphabet.kind;
        let n = self.alphabet.rank;
        let circ = Letter::Circ;
        let mut out = Vec::new();
        let mut push = |name, o| out.push((name, o));
        match *col {
            [] => push(CaseName::A0, Outcome::Settled(vec![a])),
            [p] => {
                let a1 = match kind {
                    Classical::C => g.lt(p, a),
                    Classical::B => g.lt(p, a) || (p == circ && a == circ),
                    Classical::D => g.lt(p, a) || g.is_spin_pair(p, a),
                };
                if a1 {
                    push(CaseName::A1, Outcome::Settled(vec![p, a]));
                }
                let b0 = g.le(a, p) && !(kind == Classical::B && a == circ && p == circ);
                if b0 {
                    push(CaseName::B(0), Outcome::Bumped(vec![a], p));
                }
            }
            [p, q] => {
                let not_circ_pair = |x: Letter, y: Letter| !(kind == Classical::B && x == circ && y == circ);
                if g.lt(p, a) && g.le(a, q) && !g.is_pair(p, q) && not_circ_pair(a, q) {
                    push(CaseName::B(1), Outcome::Bumped(vec![p, a], q));
                }
                if g.le(a, p) && g.lt(p, q) && !g.is_pair(a, q) && not_circ_pair(a, p) {
                    push(CaseName::B(2), Outcome::Bumped(vec![a, q], p));
                }
                // (x, x̄) absorbs a letter between x and x̄ and pushes the pair down to x−1
                let shrink_lo = match kind {
                    Classical::C => 1,
                    Classical::B => 2,
                    Classical::D => 2,
                };
                let shrink_hi = if kind == Classical::D { n - 1 } else { n };
                if let Some(x) = g.unbarred(p) {
                    if g.is_pair(p, q) && (shrink_lo..=shrink_hi).contains(&x) && g.le(p, a) && g.le(a, q) {
                        let y = Letter::Plain(x - 1);
                        let name = if kind == Classical::B { CaseName::B(5) } else { CaseName::B(3) };
                        push(name, Outcome::Bumped(vec![y, a], y.bar()));
                    }
                }
                // (β, x̄) receiving x grows to (x+1, (x+1)‾)
                let grow_hi = match kind {
                    Classical::C => n.saturating_sub(1) as i16,
                    Classical::B => n as i16 - 1,
                    Classical::D => n as i16 - 2,
                };
                let grow_lo = if kind == Classical::C { 0 } else { 1 };
                if let Some(x) = g.unbarred(a) {
                    if q == a.bar() && (grow_lo..=grow_hi).contains(&(x as i16)) && g.lt(a, p) && g.lt(p, q) {
                        let y = Letter::Plain(x + 1);
                        let name = if kind == Classical::B { CaseName::B(6) } else { CaseName::B(4) };
                        push(name, Outcome::Bumped(vec![y, y.bar()], p));
                    }
                }
                match kind {
                    Classical::C => {}
                    Classical::B => {
                        let nn = Letter::Plain(n);
                        if p == circ && q.is_barred() && a == circ {
                            push(CaseName::B(3), Outcome::Bumped(vec![circ, circ], q));
                        }
                        if p == circ && q == circ && matches!(a, Letter::Plain(_)) {
                            push(CaseName::B(4), Outcome::Bumped(vec![a, circ], circ));
                        }
                        if p == circ && q == nn.bar() && a == nn {
                            push(CaseName::B(7), Outcome::Bumped(vec![nn, circ], nn.bar()));
                        }
                    }
                    Classical::D => {
                        let m = Letter::Plain(n - 1);
                        if g.is_spin_pair(p, q) && matches!(a, Letter::Plain(x) if x < n) {
                            push(CaseName::B(5), Outcome::Bumped(vec![a, q], p));
                        }
                        if g.is_spin(p) && q.is_barred() && q != Letter::Bar(n) && g.is_spin_pair(p, a) {
                            push(CaseName::B(6), Outcome::Bumped(vec![p, a], q));
                        }
                        if g.is_spin(p) && q == m.bar() && a == m {
                            push(CaseName::B(7), Outcome::Bumped(vec![p, p.bar()], p));
                        }
                        if g.is_spin_pair(p, q) && a == q {
                            push(CaseName::B(8), Outcome::Bumped(vec![m, q], m.bar()));
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }

    /// Every inverse case whose guard accepts (column, b), with its output.
    pub fn inverse_matches(&self, col: &[Letter], b: Letter) -> Vec<(CaseName, Vec<Letter>, Letter)> {
        let g = Guards { a: self.alphabet };
        let kind = self.alphabet.kind;
        let n = self.alphabet.rank;
        let circ = Letter::Circ;
        let mut out = Vec::new();
        let mut push = |name, c, e| out.push((name, c, e));
        match *col {
            [p] => {
                if g.le(p, b) && !(kind == Classical::B && p == circ && b == circ) {
                    push(CaseName::C(0), vec![b], p);
                }
            }
            [p, q] => {
                let not_circ_pair = |x: Letter, y: Letter| !(kind == Classical::B && x == circ && y == circ);
                if g.lt(p, q) && g.le(q, b) && !g.is_pair(p, b) && not_circ_pair(q, b) {
                    push(CaseName::C(1), vec![p, b], q);
                }
                if g.le(p, b) && g.lt(b, q) && !g.is_pair(p, q) && not_circ_pair(p, b) {
                    push(CaseName::C(2), vec![b, q], p);
                }
                // undo the shrink of (x, x̄) to (x−1, β)
                let shrink_lo = if kind == Classical::C { 1 } else { 2 };
                let shrink_hi = if kind == Classical::D { n - 1 } else { n };
                if let Some(y) = g.unbarred(p) {
                    let x = y + 1;
                    let (xl, xb) = (Letter::Plain(x), Letter::Bar(x));
                    if b == p.bar() && (shrink_lo..=shrink_hi).contains(&x) && g.le(xl, q) && g.le(q, xb) {
                        let name = if kind == Classical::B { CaseName::C(6) } else { CaseName::C(4) };
                        push(name, vec![xl, xb], q);
                    }
                }
                // undo the growth (β, x̄) + x → (x+1, (x+1)‾)
                let grow_hi = match kind {
                    Classical::C => n as i16 - 1,
                    Classical::B => n as i16 - 1,
                    Classical::D => n as i16 - 2,
                };
                let grow_lo = if kind == Classical::C { 0 } else { 1 };
                if let Some(y) = g.unbarred(p) {
                    let x = y as i16 - 1;
                    if x >= 0 && g.is_pair(p, q) && (grow_lo..=grow_hi).contains(&x) {
                        let xl = Letter::Plain(x as u8);
                        if g.lt(xl, b) && g.lt(b, xl.bar()) {
                            let name = if kind == Classical::B { CaseName::C(5) } else { CaseName::C(3) };
                            push(name, vec![b, xl.bar()], xl);
                        }
                    }
                }
                match kind {
                    Classical::C => {}
                    Classical::B => {
                        let nn = Letter::Plain(n);
                        if p == circ && q == circ && b.is_barred() {
                            push(CaseName::C(3), vec![circ, b], circ);
                        }
                        if matches!(p, Letter::Plain(_)) && q == circ && b == circ {
                            push(CaseName::C(4), vec![circ, circ], p);
                        }
                        if p == nn && q == circ && b == nn.bar() {
                            push(CaseName::C(7), vec![circ, nn.bar()], nn);
                        }
                    }
                    Classical::D => {
                        let m = Letter::Plain(n - 1);
                        if matches!(p, Letter::Plain(x) if x < n) && g.is_spin(q) && b == q.bar() {
                            push(CaseName::C(5), vec![b, q], p);
                        }
                        if g.is_spin_pair(p, q) && b.is_barred() && b != Letter::Bar(n) {
                            push(CaseName::C(6), vec![p, b], q);
                        }
                        if p == m && g.is_spin(q) && b == m.bar() {
                            push(CaseName::C(7), vec![q.bar(), q], q);
                        }
                        if g.is_spin_pair(p, q) && b == p {
                            push(CaseName::C(8), vec![p, m.bar()], m);
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }

    pub fn insert_column(&self, col: &[Letter], a: Letter) -> Result<ColumnStep, InsertError> {
        let matches = self.forward_matches(col, a);
        debug_assert!(matches.len() <= 1, "overlapping cases {matches:?} for [{}] <- {a}", show(col));
        let Some((name, mut outcome)) = matches.into_iter().next() else {
            return Err(self.no_forward_case(col, a));
        };
        if self.mutation.is_some_and(|m| m.case == name) {
            if let Outcome::Bumped(c, b) = &mut outcome {
                std::mem::swap(&mut c[0], b);
            }
        }
        Ok(ColumnStep { outcome, case: self.tag(name) })
    }

    fn no_forward_case(&self, col: &[Letter], a: Letter) -> InsertError {
        let alph = self.alphabet;
        let below = match *col {
            [p, q] => !alph.le(a, q) || (alph.kind == Classical::B && p == Letter::Circ && q == Letter::Circ && a == q),
            _ => false,
        };
        if below {
            InsertError::ThreeRow { column: show(col), letter: a.to_string() }
        } else {
            InsertError::NoCase { kind: alph.kind, column: show(col), letter: a.to_string() }
        }
    }

    pub fn inverse_insert_column(&self, col: &[Letter], b: Letter) -> Result<InverseStep, InsertError> {
        let matches = self.inverse_matches(col, b);
        debug_assert!(matches.len() <= 1, "overlapping inverse cases {matches:?}");
        match matches.into_iter().next() {
            Some((name, column, emitted)) => Ok(InverseStep { column, emitted, case: self.tag(name) }),
            None => {
                Err(InsertError::NoInverseCase { kind: self.alphabet.kind, column: show(col), letter: b.to_string() })
            }
        }
    }

    /// Insert `a` into the leftmost column and follow the bumps to the right.
    pub fn insert(&self, t: &Tableau, a: Letter) -> Result<(Tableau, Route), InsertError> {
        self.alphabet.check(a).map_err(crate::error::TableauError::from)?;
        let mut columns = t.columns();
        let mut route = Route::default();
        let mut carry = a;
        let mut j = 0;
        loop {
            let current = columns.get(j).cloned().unwrap_or_default();
            let step = self.insert_column(&current, carry)?;
            let row = if step.case.settles_in_first_row() { 1 } else { 2 };
            route.steps.push(RouteStep {
                column: j + 1,
                row,
                case: step.case,
                incoming: carry,
                outgoing: step.outcome.bumped(),
            });
            let new_col = step.outcome.column().to_vec();
            if j < columns.len() {
                columns[j] = new_col;
            } else {
                columns.push(new_col);
            }
            match step.outcome {
                Outcome::Settled(_) => break,
                Outcome::Bumped(_, b) => carry = b,
            }
            j += 1;
        }
        Ok((Tableau::from_columns(self.alphabet, &columns)?, route))
    }

    /// Remove the box at `start` and push its letter out through the columns to its left.
    pub fn reverse_bump(&self, t: &Tableau, start: BoxPos) -> Result<(Tableau, Letter, Vec<InverseStep>), InsertError> {
        let shape = t.shape();
        let row_len = if start.row == 1 { shape.r1 } else { shape.r2 };
        if start.row == 0 || start.row > 2 || start.col == 0 || start.col != row_len {
            return Err(crate::error::TableauError::NotRowEnd { row: start.row as usize, col: start.col }.into());
        }
        if start.row == 1 && start.col <= shape.r2 {
            return Err(crate::error::TableauError::NotCorner { row: 1, col: start.col }.into());
        }
        let mut columns = t.columns();
        let c = start.col - 1;
        let mut carry = columns[c].pop().expect("box exists");
        if columns[c].is_empty() {
            columns.pop();
        }
        let mut trace = Vec::new();
        for j in (0..c).rev() {
            let step = self.inverse_insert_column(&columns[j], carry)?;
            columns[j] = step.column.clone();
            carry = step.emitted;
            trace.push(step);
        }
        Ok((Tableau::from_columns(self.alphabet, &columns)?, carry, trace))
    }

    /// T1 * T2: insert the reading word of T2 into T1, first letter first.
    pub fn product(&self, t1: &Tableau, t2: &Tableau) -> Result<Tableau, InsertError> {
        let mut t = t1.clone();
        for a in t2.reading_word() {
            t = self.insert(&t, a)?.0;
        }
        Ok(t)
    }
}

pub fn insert_column(alphabet: Alphabet, col: &[Letter], a: Letter) -> Result<ColumnStep, InsertError> {
    Inserter::new(alphabet).insert_column(col, a)
}

pub fn inverse_insert_column(alphabet: Alphabet, col: &[Letter], b: Letter) -> Result<InverseStep, InsertError> {
    Inserter::new(alphabet).inverse_insert_column(col, b)
}

pub fn insert(t: &Tableau, a: Letter) -> Result<(Tableau, Route), InsertError> {
    Inserter::new(t.alphabet()).insert(t, a)
}

pub fn reverse_bump(t: &Tableau, start: BoxPos) -> Result<(Tableau, Letter), InsertError> {
    Inserter::new(t.alphabet()).reverse_bump(t, start).map(|(t, w, _)| (t, w))
}

pub fn product(t1: &Tableau, t2: &Tableau) -> Result<Tableau, InsertError> {
    Inserter::new(t1.alphabet()).product(t1, t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alph(kind: Classical, n: u8) -> Alphabet {
        Alphabet::new(kind, n).unwrap()
    }

    fn l(s: &str) -> Letter {
        s.parse().unwrap()
    }

    fn col(s: &str) -> Vec<Letter> {
        s.split_whitespace().map(l).collect()
    }

    fn tab(kind: Classical, n: u8, s: &str) -> Tableau {
        Tableau::parse(s, alph(kind, n)).unwrap()
    }

    #[test]
    fn c_pair_absorbs_its_bar() {
        let s = insert_column(alph(Classical::C, 2), &col("1 -1"), l("-1")).unwrap();
        assert_eq!(s.outcome, Outcome::Bumped(col("0 -1"), l("-0")));
        assert_eq!(s.case.name, CaseName::B(3));
    }

    #[test]
    fn c_one_bar_does_not_vanish() {
        let s = insert_column(alph(Classical::C, 2), &col("1"), l("-1")).unwrap();
        assert_eq!(s.outcome, Outcome::Settled(col("1 -1")));
        assert_eq!(s.case.name, CaseName::A1);
    }

    #[test]
    fn b_circ_into_pair() {
        let s = insert_column(alph(Classical::B, 5), &col("5 -5"), l("o")).unwrap();
        assert_eq!(s.outcome, Outcome::Bumped(col("4 o"), l("-4")));
        assert_eq!(s.case.name, CaseName::B(5));
    }

    #[test]
    fn inverse_examples() {
        let s = inverse_insert_column(alph(Classical::C, 2), &col("0 -1"), l("-0")).unwrap();
        assert_eq!((s.column, s.emitted, s.case.name), (col("1 -1"), l("-1"), CaseName::C(4)));
        let s = inverse_insert_column(alph(Classical::B, 3), &col("3 o"), l("-3")).unwrap();
        assert_eq!((s.column, s.emitted, s.case.name), (col("o -3"), l("3"), CaseName::C(7)));
        let s = inverse_insert_column(alph(Classical::D, 4), &col("2 -2"), l("3")).unwrap();
        assert_eq!((s.column, s.emitted, s.case.name), (col("3 -1"), l("1"), CaseName::C(3)));
    }

    #[test]
    fn c_walkthrough_first_step() {
        let (t, route) = insert(&tab(Classical::C, 2, "1 1 1 1 2 2"), l("-1")).unwrap();
        assert_eq!(t.render(), "1 1 1 1 2 2 / -1");
        assert_eq!(route.rows(), vec![2]);
    }

    #[test]
    fn b_boxed_route_example() {
        let (t, route) = insert(&tab(Classical::B, 3, "1 2 o -3 / 3 3 -3 -2"), l("2")).unwrap();
        assert_eq!(t.render(), "1 2 3 -3 -3 / 2 3 o -2");
        assert_eq!(route.rows(), vec![2, 2, 1, 1, 1]);
        let names: Vec<CaseName> = route.steps.iter().map(|s| s.case.name).collect();
        assert_eq!(names, vec![CaseName::B(1), CaseName::B(1), CaseName::B(7), CaseName::B(2), CaseName::A0]);
        assert!(route.is_monotone());
    }

    #[test]
    fn empty_and_single_box() {
        let a = alph(Classical::D, 3);
        let (t, route) = insert(&Tableau::empty(a), l("2")).unwrap();
        assert_eq!(t.render(), "2");
        assert_eq!(route.steps[0].case.name, CaseName::A0);
        let (t, w) = reverse_bump(&t, BoxPos { row: 1, col: 1 }).unwrap();
        assert!(t.is_empty());
        assert_eq!(w, l("2"));
    }

    #[test]
    fn reverse_bump_walkthrough() {
        let t0 = tab(Classical::C, 2, "0 0 1 1 2 2 / 2 2 -0 -0");
        let (t1, w1) = reverse_bump(&t0, BoxPos { row: 1, col: 6 }).unwrap();
        assert_eq!((t1.render().as_str(), w1), ("0 1 1 2 2 / 2 2 -0 -0", l("0")));
        let (t2, w2) = reverse_bump(&t1, BoxPos { row: 1, col: 5 }).unwrap();
        assert_eq!((t2.render().as_str(), w2), ("1 1 2 2 / 2 2 -0 -0", l("0")));
    }

    #[test]
    fn reverse_bump_rejects_inner_boxes() {
        let t0 = tab(Classical::C, 2, "1 1 2 / 2 2");
        assert!(reverse_bump(&t0, BoxPos { row: 1, col: 2 }).is_err());
        assert!(reverse_bump(&t0, BoxPos { row: 1, col: 1 }).is_err());
        let t1 = tab(Classical::C, 2, "1 1 / 2 2");
        assert!(reverse_bump(&t1, BoxPos { row: 1, col: 2 }).is_err());
    }

    #[test]
    fn products_from_walkthroughs() {
        let c = product(&tab(Classical::C, 2, "1 1 1 1 2 2"), &tab(Classical::C, 2, "2 2 -1 -1")).unwrap();
        assert_eq!(c.render(), "0 0 1 1 2 2 / 2 2 -0 -0");
        let b = product(&tab(Classical::B, 5, "5 5 o -5 -5"), &tab(Classical::B, 5, "5 o -5")).unwrap();
        assert_eq!(b.render(), "4 5 o -5 -5 / 5 o -4");
        let t = tab(Classical::D, 3, "1 2");
        assert_eq!(product(&t, &Tableau::empty(t.alphabet())).unwrap(), t);
    }

    #[test]
    fn third_row_is_reported() {
        let e = insert_column(alph(Classical::C, 2), &col("1 2"), l("-1")).unwrap_err();
        assert!(matches!(e, InsertError::ThreeRow { .. }));
        let e = insert_column(alph(Classical::B, 2), &col("o o"), l("o")).unwrap_err();
        assert!(matches!(e, InsertError::ThreeRow { .. }));
        let e = insert_column(alph(Classical::B, 2), &col("1 o"), l("o")).unwrap_err();
        assert!(matches!(e, InsertError::NoCase { .. }));
    }

    #[test]
    fn mutation_changes_output() {
        let a = alph(Classical::C, 2);
        let m = Inserter::with_mutation(a, Mutation { case: CaseName::B(2) });
        let good = insert_column(a, &col("1 2"), l("1")).unwrap();
        let bad = m.insert_column(&col("1 2"), l("1")).unwrap();
        assert_eq!(good.case, bad.case);
        let good = insert_column(a, &col("2 -2"), l("1")).unwrap();
        let bad = m.insert_column(&col("2 -2"), l("1")).unwrap();
        assert_ne!(good.outcome, bad.outcome);
    }
}
