//! Brute-force isomorphism tables, the checks that compare the R matrix against them,
//! and exhaustive sweeps over the insertion machinery.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{enumerate, enumerate_pairs, indices, Crystal, Element, Side, Tensor, TensorElement};
use crate::error::{CrystalError, InsertError, OracleError, RmatrixError};
use crate::insertion::{CaseName, Inserter, Outcome};
use crate::letters::{Affine, Alphabet, Classical, Family, Letter};
use crate::rmatrix::{pipeline_input, RMatrix, RResult};
use crate::tableaux::Tableau;

/// Env var capping the number of verification threads.
pub const THREADS_ENV: &str = "CRYSTAL_RMATRIX_THREADS";

/// Image and energy of every element of B_l ⊗ B_k.
#[derive(Clone, Debug)]
pub struct IsoTable {
    pub fam: Family,
    pub l: u32,
    pub k: u32,
    entries: HashMap<TensorElement, (TensorElement, i64)>,
}

impl IsoTable {
    fn new(fam: Family, l: u32, k: u32) -> Self {
        IsoTable { fam, l, k, entries: HashMap::new() }
    }

    pub fn get(&self, t: &TensorElement) -> Option<(&TensorElement, i64)> {
        self.entries.get(t).map(|(img, h)| (img, *h))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TensorElement, &TensorElement, i64)> {
        self.entries.iter().map(|(t, (img, h))| (t, img, *h))
    }

    /// The table for B_k ⊗ B_l obtained by reading this one backwards.
    pub fn invert(&self) -> Result<IsoTable, OracleError> {
        let mut out = IsoTable::new(self.fam, self.k, self.l);
        for (t, img, h) in self.iter() {
            if out.entries.insert(img.clone(), (t.clone(), h)).is_some() {
                return Err(OracleError::Inconsistent { at: img.to_string(), detail: "two preimages".into() });
            }
        }
        Ok(out)
    }

    fn check_total(&self) -> Result<(), OracleError> {
        let total = enumerate(self.fam, self.l).len() * enumerate(self.fam, self.k).len();
        if self.len() != total {
            return Err(OracleError::Coverage { missing: total - self.len(), total });
        }
        Ok(())
    }

    fn shift_energy(&mut self, anchor: &TensorElement) -> Result<(), OracleError> {
        let base =
            self.get(anchor).map(|(_, h)| h).ok_or_else(|| OracleError::Coverage { missing: 1, total: self.len() })?;
        for v in self.entries.values_mut() {
            v.1 -= base;
        }
        Ok(())
    }
}

/// 1^l ⊗ 1̄^k, where the energy is normalized to 0.
pub fn anchor(fam: Family, l: u32, k: u32) -> TensorElement {
    Tensor::new(Element::highest(fam, l), Element::lowest(fam, k))
}

/// (l,0,…,0) ⊗ (k,0,…,0).
pub fn seed(fam: Family, l: u32, k: u32) -> TensorElement {
    Tensor::new(Element::highest(fam, l), Element::highest(fam, k))
}

/// Change of energy along ẽ₀ at t, given the image of t.
fn zero_arrow_step(t: &TensorElement, img: &TensorElement) -> Result<i64, CrystalError> {
    Ok(match (t.e_side(0)?, img.e_side(0)?) {
        (Side::Left, Side::Left) => 1,
        (Side::Right, Side::Right) => -1,
        _ => 0,
    })
}

/// Propagate the seed mapping over the whole affine crystal graph, for families with 0-arrows.
pub fn oracle_bfs(fam: Family, l: u32, k: u32) -> Result<IsoTable, OracleError> {
    if !fam.affine().has_zero_arrow() {
        return Err(OracleError::NotApplicable(format!("{} has no 0-arrow", fam.affine())));
    }
    let mut table = IsoTable::new(fam, l, k);
    let start = seed(fam, l, k);
    table.entries.insert(start.clone(), (seed(fam, k, l), 0));
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        let (img, h) = table.entries[&t].clone();
        for i in indices(fam) {
            for raise in [true, false] {
                let (next, next_img) = if raise { (t.e(i)?, img.e(i)?) } else { (t.f(i)?, img.f(i)?) };
                let (next, next_img) = match (next, next_img) {
                    (None, None) => continue,
                    (Some(a), Some(b)) => (a, b),
                    (a, _) => {
                        return Err(OracleError::Inconsistent {
                            at: t.to_string(),
                            detail: format!("operator {i} kills only one side (source survives: {})", a.is_some()),
                        })
                    }
                };
                let dh = if i != 0 {
                    0
                } else if raise {
                    zero_arrow_step(&t, &img)?
                } else {
                    -zero_arrow_step(&next, &next_img)?
                };
                let value = (next_img, h + dh);
                match table.entries.get(&next) {
                    Some(old) if *old != value => {
                        return Err(OracleError::Inconsistent {
                            at: next.to_string(),
                            detail: format!("{} H={} vs {} H={}", old.0, old.1, value.0, value.1),
                        })
                    }
                    Some(_) => {}
                    None => {
                        table.entries.insert(next.clone(), value);
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    table.check_total()?;
    table.shift_energy(&anchor(fam, l, k))?;
    Ok(table)
}

fn is_classical_highest<C: Crystal>(x: &C, n: u8) -> Result<bool, CrystalError> {
    for i in 1..=n {
        if x.e(i)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Image and energy of a classical highest element of B_l ⊗ B_k with l ≥ k.
fn highest_image(t: &TensorElement, l: u32, k: u32) -> Result<(TensorElement, i64), OracleError> {
    let fam = t.family();
    let n = fam.rank();
    let form = || OracleError::Form(t.to_string());
    if t.left != Element::highest(fam, l) || t.right.circ() != 0 {
        return Err(form());
    }
    let (x1, x2, xb1) = (t.right.x(1), t.right.x(2), t.right.xbar(1));
    // With n = 2 in type D the letters 2 and 2̄ both sit next to 1, so x̄₂ may be nonzero too.
    let xb2 = if fam.affine() == Affine::D1 && n == 2 { t.right.xbar(2) } else { 0 };
    if x1 + x2 + xb2 + xb1 != k {
        return Err(form());
    }
    let mut coords = vec![0; 2 * n as usize];
    coords[0] = l - x2 - xb2 - xb1;
    coords[1] = x2;
    coords[2 * n as usize - 2] += xb2;
    coords[2 * n as usize - 1] = xb1;
    let right = Element::new(fam, l, coords, 0)?;
    let img = Tensor::new(Element::highest(fam, k), right);
    if !is_classical_highest(&img, n)? || img.weight() != t.weight() {
        return Err(OracleError::Theorem(format!("{t} would map to {img}, which is not a matching highest element")));
    }
    let h = 2 * (k as i64 - xb1 as i64) - x2 as i64 - xb2 as i64;
    Ok((img, h))
}

/// Image and energy of a single B1/D1 pair with l ≥ k: raise to the highest element, map it, lower back.
pub fn classical_image(t: &TensorElement) -> Result<(TensorElement, i64), OracleError> {
    let fam = t.family();
    let (l, k) = (t.left.capacity(), t.right.capacity());
    if !matches!(fam.affine(), Affine::B1 | Affine::D1) || l < k {
        return Err(OracleError::NotApplicable(format!("{t}")));
    }
    let mut path = Vec::new();
    let mut cur = t.clone();
    'up: loop {
        for i in 1..=fam.rank() {
            if let Some(u) = cur.e(i)? {
                path.push(i);
                cur = u;
                continue 'up;
            }
        }
        break;
    }
    let (mut img, h) = highest_image(&cur, l, k)?;
    for &i in path.iter().rev() {
        img = img
            .f(i)?
            .ok_or_else(|| OracleError::Inconsistent { at: t.to_string(), detail: format!("f{i} kills the image") })?;
    }
    Ok((img, h))
}

/// Classical-component oracle for B1 and D1 with l ≥ k.
pub fn oracle_classical(fam: Family, l: u32, k: u32) -> Result<IsoTable, OracleError> {
    if !matches!(fam.affine(), Affine::B1 | Affine::D1) {
        return Err(OracleError::NotApplicable(format!("classical oracle is for B1 and D1, got {}", fam.affine())));
    }
    if l < k {
        return Err(OracleError::NotApplicable(format!("needs l >= k, got l={l}, k={k}")));
    }
    let n = fam.rank();
    let mut table = IsoTable::new(fam, l, k);
    // A highest pair has a highest left factor; any component missed by this scan shows up as a coverage error.
    for right in enumerate(fam, k) {
        let t = Tensor::new(Element::highest(fam, l), right);
        if !is_classical_highest(&t, n)? {
            continue;
        }
        let (img, h) = highest_image(&t, l, k)?;
        let mut queue = VecDeque::from([(t.clone(), img.clone())]);
        if table.entries.insert(t.clone(), (img, h)).is_some() {
            return Err(OracleError::Inconsistent { at: t.to_string(), detail: "component collision".into() });
        }
        while let Some((s, s_img)) = queue.pop_front() {
            for i in 1..=n {
                match (s.f(i)?, s_img.f(i)?) {
                    (None, None) => {}
                    (Some(a), Some(b)) => {
                        if let Some(old) = table.entries.get(&a) {
                            if old.0 != b || old.1 != h {
                                return Err(OracleError::Inconsistent {
                                    at: a.to_string(),
                                    detail: format!("component collision: {} vs {b}", old.0),
                                });
                            }
                            continue;
                        }
                        table.entries.insert(a.clone(), (b.clone(), h));
                        queue.push_back((a, b));
                    }
                    _ => {
                        return Err(OracleError::Inconsistent {
                            at: s.to_string(),
                            detail: format!("f{i} kills only one side"),
                        })
                    }
                }
            }
        }
    }
    table.check_total()?;
    Ok(table)
}

/// Table for l < k, read backwards from the (k, l) table.
pub fn oracle_l_less_k(fam: Family, l: u32, k: u32) -> Result<IsoTable, OracleError> {
    if l >= k {
        return Err(OracleError::NotApplicable(format!("needs l < k, got l={l}, k={k}")));
    }
    let swapped = match fam.affine() {
        Affine::B1 | Affine::D1 => oracle_classical(fam, k, l)?,
        Affine::A2 | Affine::C1 => oracle_bfs(fam, k, l)?,
        Affine::D2 => oracle_d2(fam.rank(), k, l)?,
    };
    swapped.invert()
}

/// D2 table pulled back from the C1 table at (2l, 2k) through the doubling map.
pub fn oracle_d2(n: u8, l: u32, k: u32) -> Result<IsoTable, OracleError> {
    let fam = Family::new(Affine::D2, n)?;
    let doubled = oracle_bfs(Family::new(Affine::C1, n)?, 2 * l, 2 * k)?;
    let mut table = IsoTable::new(fam, l, k);
    for t in enumerate_pairs(fam, l, k) {
        let w = t.omega()?;
        let (img, h) = doubled.get(&w).ok_or_else(|| OracleError::Coverage { missing: 1, total: doubled.len() })?;
        let pull =
            |b: &Element| b.omega_inverse(Affine::D2).map_err(|e| OracleError::Theorem(format!("{w} -> {img}: {e}")));
        table.entries.insert(t, (Tensor::new(pull(&img.left)?, pull(&img.right)?), h));
    }
    table.shift_energy(&anchor(fam, l, k))?;
    Ok(table)
}

/// The oracle that applies to the family and capacities.
pub fn oracle_for(fam: Family, l: u32, k: u32) -> Result<IsoTable, OracleError> {
    match fam.affine() {
        Affine::A2 | Affine::C1 => oracle_bfs(fam, l, k),
        Affine::D2 => oracle_d2(fam.rank(), l, k),
        Affine::B1 | Affine::D1 if l >= k => oracle_classical(fam, l, k),
        Affine::B1 | Affine::D1 => oracle_l_less_k(fam, l, k),
    }
}

/// Outcome of one property over a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub checked: usize,
    pub failures: usize,
    /// First few counterexamples.
    pub samples: Vec<String>,
}

const SAMPLE_LIMIT: usize = 3;

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check { id: id.into(), pass: true, checked: 0, failures: 0, samples: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(detail());
        }
    }

    pub fn fail(&mut self, detail: String) {
        self.pass = false;
        self.failures += 1;
        if self.samples.len() < SAMPLE_LIMIT {
            self.samples.push(detail);
        }
    }

    fn merge(mut self, other: Check) -> Check {
        self.pass &= other.pass;
        self.checked += other.checked;
        self.failures += other.failures;
        for s in other.samples {
            if self.samples.len() < SAMPLE_LIMIT {
                self.samples.push(s);
            }
        }
        self
    }

    pub fn details(&self) -> String {
        if self.pass {
            format!("checked={}", self.checked)
        } else {
            format!("checked={} failures={} e.g. {}", self.checked, self.failures, self.samples.join(" | "))
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", if self.pass { "PASS" } else { "FAIL" }, self.id, self.details())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub family: String,
    pub n: u8,
    pub l: u32,
    pub k: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().map(Check::to_string).collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Thread pool honouring the thread cap env var.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        builder = builder.num_threads(n.max(1));
    }
    builder.build().expect("thread pool")
}

fn par_check<T, F>(id: &str, items: &[T], f: F) -> Check
where
    T: Sync,
    F: Fn(&T, &mut Check) + Sync,
{
    items
        .par_iter()
        .fold(
            || Check::new(id),
            |mut c, x| {
                f(x, &mut c);
                c
            },
        )
        .reduce(|| Check::new(id), Check::merge)
}

/// Compare the R matrix against the oracle and run the structural property suites.
pub fn verify(fam: Family, l: u32, k: u32) -> Report {
    verify_with(&RMatrix::new(), fam, l, k)
}

pub fn verify_with(r: &RMatrix, fam: Family, l: u32, k: u32) -> Report {
    thread_pool().install(|| {
        let pairs = enumerate_pairs(fam, l, k);
        let results: Vec<_> = pairs.par_iter().map(|t| r.apply(t)).collect();
        let mut checks = Vec::new();
        checks.extend(oracle_checks(fam, l, k, &pairs, &results));
        checks.extend(property_checks(r, fam, l, k, &pairs, &results));
        Report { family: fam.affine().to_string(), n: fam.rank(), l, k, checks }
    })
}

/// The structural property suites alone, without building an oracle table.
pub fn properties(r: &RMatrix, fam: Family, l: u32, k: u32) -> Report {
    thread_pool().install(|| {
        let pairs = enumerate_pairs(fam, l, k);
        let results: Vec<_> = pairs.par_iter().map(|t| r.apply(t)).collect();
        let checks = property_checks(r, fam, l, k, &pairs, &results);
        Report { family: fam.affine().to_string(), n: fam.rank(), l, k, checks }
    })
}

type Applied = Result<RResult, RmatrixError>;

fn oracle_checks(fam: Family, l: u32, k: u32, pairs: &[TensorElement], results: &[Applied]) -> Vec<Check> {
    let n = fam.rank();
    let mut checks = Vec::new();
    let table = match oracle_for(fam, l, k) {
        Ok(table) => table,
        Err(e) => {
            let mut bad = Check::new("oracle.build");
            bad.record(false, || e.to_string());
            return vec![bad];
        }
    };
    let mut ok = Check::new("oracle.build");
    ok.record(true, String::new);
    checks.push(ok);
    let indexed: Vec<(&TensorElement, &Applied)> = pairs.iter().zip(results).collect();
    checks.push(par_check("rmatrix.matches_oracle", &indexed, |(t, res), c| {
        let want = table.get(t);
        let got = res.as_ref().ok().map(|res| (&res.image, res.energy));
        c.record(want == got, || match (want, got) {
            (Some(w), Some(g)) => format!("{t}: oracle {} H={} vs rule {} H={}", w.0, w.1, g.0, g.1),
            _ => format!("{t}: missing value"),
        });
    }));
    checks.push(par_check("oracle.energy_classical_invariance", pairs, |t, c| {
        let h = table.get(t).map(|x| x.1);
        for i in 1..=n {
            if let Ok(Some(s)) = t.e(i) {
                let hs = table.get(&s).map(|x| x.1);
                c.record(h == hs, || format!("{t} vs e{i}: {h:?} {hs:?}"));
            }
        }
    }));
    checks
}

fn property_checks(
    r: &RMatrix,
    fam: Family,
    l: u32,
    k: u32,
    pairs: &[TensorElement],
    results: &[Applied],
) -> Vec<Check> {
    let n = fam.rank();
    let mut checks = Vec::new();
    let applied: HashMap<&TensorElement, &RResult> =
        pairs.iter().zip(results).filter_map(|(t, r)| Some((t, r.as_ref().ok()?))).collect();

    let mut total = Check::new("rmatrix.total");
    for (t, res) in pairs.iter().zip(results) {
        total.record(res.is_ok(), || format!("{t}: {}", res.as_ref().err().unwrap()));
    }
    checks.push(total);

    let mut two_rows = Check::new("rmatrix.two_rows");
    for (t, res) in pairs.iter().zip(results) {
        let three = matches!(res, Err(RmatrixError::Insertion { source: InsertError::ThreeRow { .. }, .. }));
        two_rows.record(!three, || t.to_string());
    }
    checks.push(two_rows);

    checks.push(par_check("rmatrix.product_semistandard", pairs, |t, c| {
        if let Some(res) = applied.get(t) {
            let report = res.diag.t0.validate();
            c.record(report.is_ok(), || format!("{t}: T0 = {} {:?}", res.diag.t0, report.violations));
        }
    }));

    let mut bij = Check::new("rmatrix.bijective");
    let mut images = HashSet::new();
    for (t, res) in &applied {
        bij.record(images.insert(res.image.clone()), || format!("{t} collides at {}", res.image));
    }
    let target = enumerate(fam, k).len() * enumerate(fam, l).len();
    bij.record(images.len() == target, || format!("{} images for {target} targets", images.len()));
    checks.push(bij);

    checks.push(par_check("rmatrix.inverse", pairs, |t, c| {
        if let Some(res) = applied.get(t) {
            let back = r.inverse(&res.image);
            c.record(back.as_ref() == Ok(t), || format!("{t} -> {} -> {back:?}", res.image));
        }
    }));

    checks.push(par_check("rmatrix.weight", pairs, |t, c| {
        if let Some(res) = applied.get(t) {
            c.record(res.image.weight() == t.weight(), || t.to_string());
        }
    }));

    checks.push(par_check("rmatrix.bump_letters_row", pairs, |t, c| {
        if let Some(res) = applied.get(t) {
            let row = Tableau::one_row(res.diag.t0.alphabet(), res.diag.bumped.clone());
            c.record(row.is_ok_and(|r| r.validate().is_ok()), || format!("{t}: {:?}", res.diag.bumped));
        }
    }));

    let classical: Vec<u8> = (1..=n).collect();
    checks.push(intertwining("rmatrix.classical_intertwining", r, pairs, &applied, &classical));
    if fam.affine().has_zero_arrow() {
        checks.push(intertwining("rmatrix.affine_intertwining", r, pairs, &applied, &[0]));
    }

    checks.push(par_check("rmatrix.energy_classical_invariance", pairs, |t, c| {
        if let Some(res) = applied.get(t) {
            for i in 1..=n {
                if let Ok(Some(s)) = t.e(i) {
                    let hs = applied.get(&s).map(|x| x.energy);
                    c.record(hs == Some(res.energy), || format!("{t} vs e{i}: {} {hs:?}", res.energy));
                }
            }
        }
    }));

    if fam.affine().has_zero_arrow() {
        checks.push(par_check("rmatrix.energy_zero_arrow", pairs, |t, c| {
            let (Some(res), Ok(Some(s))) = (applied.get(t), t.e(0)) else { return };
            let Some(next) = applied.get(&s) else { return };
            let step = zero_arrow_step(t, &res.image);
            c.record(step.as_ref().is_ok_and(|d| next.energy == res.energy + d), || {
                format!("{t}: H={} e0 H={} step {step:?}", res.energy, next.energy)
            });
        }));
    }

    let mut seed_check = Check::new("rmatrix.seed");
    let want = seed(fam, k, l);
    let got = r.apply(&seed(fam, l, k)).map(|x| x.image);
    seed_check.record(got.as_ref() == Ok(&want), || format!("{got:?}"));
    checks.push(seed_check);

    let mut anchor_check = Check::new("rmatrix.anchor_energy");
    let h = r.apply(&anchor(fam, l, k)).map(|x| x.energy);
    anchor_check.record(h == Ok(0), || format!("{h:?}"));
    checks.push(anchor_check);

    if fam.affine().is_twisted() {
        checks.push(par_check("rmatrix.twisted_engine", pairs, |t, c| {
            let Some(res) = applied.get(t) else { return };
            let (Ok(a), Ok(b)) = (t.left.padded_or_omega(), t.right.padded_or_omega()) else {
                c.record(false, || format!("{t}: no doubled rows"));
                return;
            };
            let run = r.engine_c(&a, &b);
            let ok = run.as_ref().is_ok_and(|run| {
                Ok(run.left.clone()) == res.image.left.padded_or_omega()
                    && Ok(run.right.clone()) == res.image.right.padded_or_omega()
            });
            c.record(ok, || format!("{t}"));
        }));
    }

    checks
}

fn intertwining(
    id: &str,
    r: &RMatrix,
    pairs: &[TensorElement],
    applied: &HashMap<&TensorElement, &RResult>,
    ops: &[u8],
) -> Check {
    par_check(id, pairs, |t, c| {
        let Some(res) = applied.get(t) else { return };
        for &i in ops {
            for raise in [true, false] {
                let (moved, img_moved) = if raise { (t.e(i), res.image.e(i)) } else { (t.f(i), res.image.f(i)) };
                let (Ok(moved), Ok(img_moved)) = (moved, img_moved) else {
                    c.record(false, || format!("{t}: operator {i} failed"));
                    continue;
                };
                let mapped = match &moved {
                    Some(s) => {
                        applied.get(s).map(|x| Some(x.image.clone())).or_else(|| r.apply(s).ok().map(|x| Some(x.image)))
                    }
                    None => Some(None),
                };
                c.record(mapped == Some(img_moved.clone()), || {
                    format!("{t} {}{i}: {mapped:?} vs {img_moved:?}", if raise { "e" } else { "f" })
                });
            }
        }
    })
}

impl Element {
    /// The padded C row the insertion engine sees for this element.
    fn padded_or_omega(&self) -> Result<Tableau, CrystalError> {
        if self.family().affine().is_twisted() {
            self.omega_tableau()
        } else {
            self.padded_tableau()
        }
    }
}

/// All valid columns of height at most two.
pub fn columns(alphabet: Alphabet) -> Vec<Vec<Letter>> {
    let letters = alphabet.letters();
    let mut out = vec![vec![]];
    for &a in &letters {
        out.push(vec![a]);
        for &b in &letters {
            let col = vec![a, b];
            if Tableau::from_columns(alphabet, std::slice::from_ref(&col)).is_ok_and(|t| t.validate().is_ok()) {
                out.push(col);
            }
        }
    }
    out
}

/// The inverse case that undoes a forward bumping case.
pub fn inverse_case(kind: Classical, forward: CaseName) -> Option<CaseName> {
    let CaseName::B(k) = forward else { return None };
    let inv = match (kind, k) {
        (_, 0..=2) => k,
        (Classical::C, 3) => 4,
        (Classical::C, 4) => 3,
        (Classical::B, 3 | 4 | 7) => k,
        (Classical::B, 5) => 6,
        (Classical::B, 6) => 5,
        (Classical::D, 3) => 4,
        (Classical::D, 4) => 3,
        (Classical::D, 5 | 6) => k,
        (Classical::D, 7) => 8,
        (Classical::D, 8) => 7,
        _ => return None,
    };
    Some(CaseName::C(inv))
}

/// Every (column, letter) pair: at most one forward case applies, and each bump is undone by its inverse case.
pub fn insertion_round_trip(kind: Classical, n: u8) -> Result<Check, OracleError> {
    let alphabet = Alphabet::new(kind, n)?;
    let ins = Inserter::new(alphabet);
    let mut check = Check::new(format!("insertion.round_trip.{kind}{n}"));
    let cols = columns(alphabet);
    for col in &cols {
        for a in alphabet.letters() {
            let matches = ins.forward_matches(col, a);
            check.record(matches.len() <= 1, || format!("[{}] <- {a}: {} cases", show(col), matches.len()));
            let Some((name, outcome)) = matches.into_iter().next() else { continue };
            let ok = match &outcome {
                Outcome::Settled(c) => c.last() == Some(&a) && c[..c.len() - 1] == col[..],
                Outcome::Bumped(c, b) => {
                    let inv = ins.inverse_matches(c, *b);
                    inv.len() == 1 && inv[0].1 == *col && inv[0].2 == a && Some(inv[0].0) == inverse_case(kind, name)
                }
            };
            check.record(ok, || format!("[{}] <- {a} via {name} gives {outcome:?}", show(col)));
        }
        for b in alphabet.letters() {
            let inv = ins.inverse_matches(col, b);
            check.record(inv.len() <= 1, || format!("[{}] <~ {b}: {} inverse cases", show(col), inv.len()));
            for (name, c, e) in inv {
                let fwd = ins.forward_matches(&c, e);
                let ok = fwd.len() == 1
                    && fwd[0].1 == Outcome::Bumped(col.clone(), b)
                    && inverse_case(kind, fwd[0].0) == Some(name);
                check
                    .record(ok, || format!("inverse {name} on [{}] <~ {b} is not undone by a forward case", show(col)));
            }
        }
    }
    Ok(check)
}

fn show(col: &[Letter]) -> String {
    col.iter().map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

/// Route checks on every pair of consecutive insertions made by the rule for B_l ⊗ B_k.
pub fn route_properties(fam: Family, l: u32, k: u32) -> Check {
    let mut monotone = Check::new("bumping.monotone");
    let mut dominated = Check::new("bumping.not_below");
    let mut persistent = Check::new("bumping.first_row_persists");
    for t in enumerate_pairs(fam, l, k) {
        let Ok(input) = pipeline_input(&t) else {
            monotone.record(false, || format!("{t}: no pipeline input"));
            continue;
        };
        let ins = Inserter::new(input.alphabet);
        let Ok(mut tab) = Tableau::one_row(input.alphabet, input.t_star.clone()) else { continue };
        let mut prev = None;
        for &a in input.v.iter().rev() {
            let Ok((next, route)) = ins.insert(&tab, a) else {
                monotone.record(false, || format!("{t}: insertion of {a} failed"));
                break;
            };
            monotone.record(route.is_monotone(), || format!("{t}: route {:?} inserting {a}", route.rows()));
            if let Some((b, before)) = prev.take() {
                let before: crate::insertion::Route = before;
                let skip = input.alphabet.kind == Classical::B && a == Letter::Circ && b == Letter::Circ;
                if !skip {
                    dominated.record(route.not_below(&before), || {
                        format!("{t}: {b} then {a}: {:?} vs {:?}", before.rows(), route.rows())
                    });
                    if before.ends_in_first_row() {
                        persistent.record(route.ends_in_first_row(), || format!("{t}: {b} then {a}"));
                    }
                }
            }
            prev = Some((a, route));
            tab = next;
        }
    }
    let mut all = Check::new("bumping");
    for c in [monotone, dominated, persistent] {
        all = all.merge(c);
    }
    all
}

/// ω(ẽᵢ x) = ẽᵢ′^p ω(x) and the same for f̃ᵢ, on single elements and on pairs.
pub fn omega_commutation(fam: Family, l: u32) -> Result<Check, OracleError> {
    if !fam.affine().is_twisted() {
        return Err(OracleError::NotApplicable(format!("{} has no doubling map", fam.affine())));
    }
    let n = fam.rank();
    let power = |i: u8| -> usize {
        if i == 0 || (fam.affine() == Affine::D2 && i == n) {
            1
        } else {
            2
        }
    };
    fn pow<C: Crystal>(x: &C, i: u8, raise: bool, p: usize) -> Result<Option<C>, CrystalError> {
        let mut cur = if raise { x.e(i)? } else { x.f(i)? };
        for _ in 1..p {
            cur = match cur {
                Some(c) => {
                    if raise {
                        c.e(i)?
                    } else {
                        c.f(i)?
                    }
                }
                None => None,
            };
        }
        Ok(cur)
    }
    let mut check = Check::new(format!("omega.commutation.{}", fam.affine()));
    let mut run = |label: String, lhs: Option<Vec<Element>>, rhs: Option<Vec<Element>>| {
        check.record(lhs == rhs, || label);
    };
    for cap in 1..=l {
        for b in enumerate(fam, cap) {
            let w = b.omega()?;
            for i in indices(fam) {
                for raise in [true, false] {
                    let lhs = pow(&b, i, raise, 1)?.map(|x| x.omega()).transpose()?.map(|x| vec![x]);
                    let rhs = pow(&w, i, raise, power(i))?.map(|x| vec![x]);
                    run(format!("{b} op {i}"), lhs, rhs);
                }
            }
        }
        for k in 1..=l {
            for t in enumerate_pairs(fam, cap, k) {
                let w = t.omega()?;
                for i in indices(fam) {
                    for raise in [true, false] {
                        let lhs = pow(&t, i, raise, 1)?.map(|x| x.omega()).transpose()?.map(|x| vec![x.left, x.right]);
                        let rhs = pow(&w, i, raise, power(i))?.map(|x| vec![x.left, x.right]);
                        run(format!("{t} op {i}"), lhs, rhs);
                    }
                }
            }
        }
    }
    Ok(check)
}

/// All one-row tableaux of length 1..=max over the unpadded alphabet that depict elements of B(jΛ₁); ∘ occurs at most once.
pub fn one_rows(alphabet: Alphabet, max: usize) -> Vec<Tableau> {
    let letters: Vec<Letter> =
        alphabet.letters().into_iter().filter(|&a| a != Letter::ZERO && a != Letter::ZERO_BAR).collect();
    let mut rows: Vec<Vec<Letter>> = vec![vec![]];
    let mut out = Vec::new();
    for _ in 0..max {
        let mut next = Vec::new();
        for r in &rows {
            for &a in &letters {
                if r.last().is_some_and(|&p| !alphabet.le(p, a) || (p == Letter::Circ && a == Letter::Circ)) {
                    continue;
                }
                let mut row = r.clone();
                row.push(a);
                if let Ok(t) = Tableau::one_row(alphabet, row.clone()) {
                    if t.validate().is_ok() {
                        out.push(t);
                        next.push(row);
                    }
                }
            }
        }
        rows = next;
    }
    out
}

/// The product of two one-row tableaux; for B and D the common 1…1̄ pairs are removed first, as the rule does.
pub fn psi(ins: &Inserter, t1: &Tableau, t2: &Tableau) -> Result<Tableau, InsertError> {
    if ins.alphabet.kind == Classical::C {
        return ins.product(t1, t2);
    }
    let one = Letter::Plain(1);
    let ones = t1.row1().iter().take_while(|&&a| a == one).count();
    let one_bars = t2.row1().iter().rev().take_while(|&&a| a == one.bar()).count();
    let z = ones.min(one_bars);
    let left = Tableau::one_row(ins.alphabet, t1.row1()[z..].to_vec())?;
    let right = Tableau::one_row(ins.alphabet, t2.row1()[..t2.row1().len() - z].to_vec())?;
    ins.product(&left, &right)
}

/// T₁ ⊗ T₂ ↦ ψ(T₁ ⊗ T₂) commutes with ẽᵢ and f̃ᵢ, i = 1..n, on all one-row pairs up to the given lengths.
pub fn morphism_squares(kind: Classical, n: u8, l: usize, k: usize) -> Result<Check, OracleError> {
    let alphabet = Alphabet::new(kind, n)?;
    let ins = Inserter::new(alphabet);
    let rows1 = one_rows(alphabet, l);
    let rows2 = one_rows(alphabet, k);
    let mut check = Check::new(format!("morphism.{kind}{n}"));
    for t1 in &rows1 {
        for t2 in &rows2 {
            let pair = Tensor::new(t1.clone(), t2.clone());
            let Ok(prod) = psi(&ins, t1, t2) else {
                check.record(false, || format!("{t1} * {t2} failed"));
                continue;
            };
            check.record(prod.validate().is_ok(), || format!("{t1} * {t2} = {prod} is not semistandard"));
            for i in 1..=n {
                for raise in [true, false] {
                    let moved = if raise { pair.e(i)? } else { pair.f(i)? };
                    let lhs = match moved {
                        Some(p) => Some(psi(&ins, &p.left, &p.right).map_err(|e| OracleError::Theorem(e.to_string()))?),
                        None => None,
                    };
                    let rhs = if raise { prod.e(i)? } else { prod.f(i)? };
                    check.record(lhs == rhs, || format!("{t1} (x) {t2} op {i} raise={raise}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
    }
    Ok(check)
}
