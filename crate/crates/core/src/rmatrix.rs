//! The combinatorial R matrix B_l ⊗ B_k → B_k ⊗ B_l and its energy, by insertion and reverse bumping.

use serde::{Deserialize, Serialize};

use crate::crystal::{Element, Tensor, TensorElement};
use crate::error::{CrystalError, InsertError, RmatrixError};
use crate::insertion::{BoxPos, Inserter, Mutation};
use crate::letters::{Affine, Alphabet, Classical, Family, Letter};
use crate::tableaux::Tableau;

/// Intermediate data of one run of the insertion pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub z: usize,
    pub l_prime: usize,
    pub k_prime: usize,
    pub m: usize,
    /// The product tableau before any reverse bumping.
    pub t0: Tableau,
    /// Tableaux after each reverse bump.
    pub stages: Vec<Tableau>,
    /// Letters w₁..w_{l′} pushed out by the reverse bumps.
    pub bumped: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RResult {
    /// b′₂ ⊗ b′₁ in B_k ⊗ B_l.
    pub image: TensorElement,
    pub energy: i64,
    pub diag: Diagnostics,
}

/// Output of the padded C pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineRun {
    /// New left factor, length of the old right factor.
    pub left: Tableau,
    /// New right factor, length of the old left factor.
    pub right: Tableau,
    pub diag: Diagnostics,
}

impl EngineRun {
    pub fn energy(&self) -> i64 {
        self.diag.l_prime.min(self.diag.k_prime) as i64 - self.diag.m as i64
    }
}

/// JSON-facing view of an `RResult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RResultView {
    pub image: ImageView,
    pub energy: i64,
    pub diag: DiagView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageView {
    pub b2: String,
    pub b1: String,
    pub b2_tableau: String,
    pub b1_tableau: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagView {
    pub z: usize,
    pub l_prime: usize,
    pub k_prime: usize,
    pub m: usize,
    pub t0: String,
    pub bumped: Vec<String>,
}

impl RResult {
    pub fn view(&self) -> RResultView {
        RResultView {
            image: ImageView {
                b2: self.image.left.to_string(),
                b1: self.image.right.to_string(),
                b2_tableau: self.image.left.tableau().render(),
                b1_tableau: self.image.right.tableau().render(),
            },
            energy: self.energy,
            diag: DiagView {
                z: self.diag.z,
                l_prime: self.diag.l_prime,
                k_prime: self.diag.k_prime,
                m: self.diag.m,
                t0: self.diag.t0.render(),
                bumped: self.diag.bumped.iter().map(Letter::to_string).collect(),
            },
        }
    }
}

/// R matrix driver; the mutation hook exists for negative-control tests.
#[derive(Clone, Copy, Debug, Default)]
pub struct RMatrix {
    mutation: Option<Mutation>,
}

fn row_text(row: &[Letter]) -> String {
    row.iter().map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

impl RMatrix {
    pub fn new() -> Self {
        RMatrix { mutation: None }
    }

    pub fn with_mutation(mutation: Mutation) -> Self {
        RMatrix { mutation: Some(mutation) }
    }

    fn inserter(&self, alphabet: Alphabet) -> Inserter {
        Inserter { alphabet, mutation: self.mutation }
    }

    /// Insert v into T_* (last letter first), then reverse-bump l′ boxes.
    fn pipeline(
        &self,
        alphabet: Alphabet,
        t_star: &[Letter],
        v: &[Letter],
        z: usize,
    ) -> Result<(Vec<Letter>, Diagnostics), RmatrixError> {
        let ins = self.inserter(alphabet);
        let state = || format!("T* = [{}], v = [{}]", row_text(t_star), row_text(v));
        let wrap = |source: InsertError| RmatrixError::Insertion { source, state: state() };
        let (l_prime, k_prime) = (t_star.len(), v.len());
        let mut t = Tableau::one_row(alphabet, t_star.to_vec()).map_err(|e| wrap(e.into()))?;
        for &a in v.iter().rev() {
            t = ins.insert(&t, a).map_err(wrap)?.0;
        }
        let t0 = t.clone();
        let m = t0.shape().r2;
        let mut stages = Vec::with_capacity(l_prime);
        let mut bumped = Vec::with_capacity(l_prime);
        for step in 0..l_prime {
            let shape = t.shape();
            let start =
                if step < l_prime - m { BoxPos { row: 1, col: shape.r1 } } else { BoxPos { row: 2, col: shape.r2 } };
            let (next, w, _) = ins.reverse_bump(&t, start).map_err(wrap)?;
            bumped.push(w);
            stages.push(next.clone());
            t = next;
        }
        debug_assert!(t.row2().is_empty() && t.row1().len() == k_prime);
        Ok((t.row1().to_vec(), Diagnostics { z, l_prime, k_prime, m, t0, stages, bumped }))
    }

    /// The C pipeline on padded rows: strip common padding, insert, reverse-bump, re-pad.
    pub fn engine_c(&self, t1pad: &Tableau, t2pad: &Tableau) -> Result<EngineRun, RmatrixError> {
        let input = strip_padding(t1pad, t2pad)?;
        let (top, diag) = self.pipeline(input.alphabet, &input.t_star, &input.v, input.z)?;
        let (left, right) = input.rewrap(top, &diag.bumped);
        Ok(EngineRun { left, right, diag })
    }

    pub fn apply(&self, t: &TensorElement) -> Result<RResult, RmatrixError> {
        let input = pipeline_input(t)?;
        let (top, diag) = self.pipeline(input.alphabet, &input.t_star, &input.v, input.z)?;
        let (left, right) = input.rewrap(top, &diag.bumped);
        let fam = t.family();
        let pull = |row: &Tableau, cap: u32| -> Result<Element, CrystalError> {
            match fam.affine() {
                Affine::A2 | Affine::D2 => {
                    let c1 = Family::new(Affine::C1, fam.rank())?;
                    Element::from_tableau(c1, 2 * cap, row)?.omega_inverse(fam.affine())
                }
                _ => Element::from_tableau(fam, cap, row),
            }
        };
        let wrap = |source| RmatrixError::PullBack { source, state: format!("T0 = {}", diag.t0) };
        let image =
            Tensor::new(pull(&left, t.right.capacity()).map_err(wrap)?, pull(&right, t.left.capacity()).map_err(wrap)?);
        let short = diag.l_prime.min(diag.k_prime) as i64;
        let energy = match input.alphabet.kind {
            Classical::C => short - diag.m as i64,
            _ => 2 * short - diag.m as i64,
        };
        Ok(RResult { image, energy, diag })
    }

    /// Map B_k ⊗ B_l back to B_l ⊗ B_k; the R matrix in the opposite direction is the inverse bijection.
    pub fn inverse(&self, t: &TensorElement) -> Result<TensorElement, RmatrixError> {
        Ok(self.apply(t)?.image)
    }
}

/// The rows fed to the insertion pipeline, after stripping z common pads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineInput {
    pub alphabet: Alphabet,
    pub t_star: Vec<Letter>,
    pub v: Vec<Letter>,
    pub z: usize,
}

impl PipelineInput {
    /// Put the z pads back on the new left row and the bumped letters.
    fn rewrap(&self, top: Vec<Letter>, bumped: &[Letter]) -> (Tableau, Tableau) {
        let z = self.z;
        let (head, tail) = match self.alphabet.kind {
            Classical::C => (Letter::ZERO, Letter::ZERO_BAR),
            _ => (Letter::Plain(1), Letter::Plain(1).bar()),
        };
        let padded_c = self.alphabet.kind == Classical::C;
        let build = |mid: &[Letter], lead: bool, trail: bool| {
            let mut row = Vec::with_capacity(mid.len() + 2 * z);
            if lead {
                row.extend(std::iter::repeat_n(head, z));
            }
            row.extend_from_slice(mid);
            if trail {
                row.extend(std::iter::repeat_n(tail, z));
            }
            Tableau::one_row(self.alphabet, row).expect("pads lie in the alphabet")
        };
        (build(&top, true, padded_c), build(bumped, padded_c, true))
    }
}

fn strip_padding(t1pad: &Tableau, t2pad: &Tableau) -> Result<PipelineInput, RmatrixError> {
    let alphabet = t1pad.alphabet();
    if alphabet.kind != Classical::C || t2pad.alphabet() != alphabet {
        return Err(RmatrixError::Padding("engine needs two C rows over the same alphabet".into()));
    }
    let count = |t: &Tableau, a: Letter| t.row1().iter().filter(|&&x| x == a).count();
    for t in [t1pad, t2pad] {
        if !t.row2().is_empty() || count(t, Letter::ZERO) != count(t, Letter::ZERO_BAR) {
            return Err(RmatrixError::Padding(format!("row {t} is not evenly padded")));
        }
    }
    let z = count(t1pad, Letter::ZERO).min(count(t2pad, Letter::ZERO));
    let strip = |t: &Tableau| t.row1()[z..t.row1().len() - z].to_vec();
    Ok(PipelineInput { alphabet, t_star: strip(t1pad), v: strip(t2pad), z })
}

/// The stripped rows T_* and v that the rule inserts for a pair.
pub fn pipeline_input(t: &TensorElement) -> Result<PipelineInput, RmatrixError> {
    let fam = t.family();
    if t.right.family() != fam {
        return Err(CrystalError::Mismatch(t.to_string()).into());
    }
    match fam.affine() {
        Affine::A2 | Affine::D2 => strip_padding(&t.left.omega_tableau()?, &t.right.omega_tableau()?),
        Affine::C1 => strip_padding(&t.left.padded_tableau()?, &t.right.padded_tableau()?),
        Affine::B1 | Affine::D1 => {
            let (r1, r2) = (t.left.tableau(), t.right.tableau());
            let one = Letter::Plain(1);
            let ones = r1.row1().iter().take_while(|&&a| a == one).count();
            let one_bars = r2.row1().iter().rev().take_while(|&&a| a == one.bar()).count();
            let z = ones.min(one_bars);
            Ok(PipelineInput {
                alphabet: fam.alphabet(),
                t_star: r1.row1()[z..].to_vec(),
                v: r2.row1()[..r2.row1().len() - z].to_vec(),
                z,
            })
        }
    }
}

pub fn r_apply(t: &TensorElement) -> Result<RResult, RmatrixError> {
    RMatrix::new().apply(t)
}

pub fn r_engine_c(t1pad: &Tableau, t2pad: &Tableau) -> Result<EngineRun, RmatrixError> {
    RMatrix::new().engine_c(t1pad, t2pad)
}

pub fn r_inverse(t: &TensorElement) -> Result<TensorElement, RmatrixError> {
    RMatrix::new().inverse(t)
}
