//! Characters, irreducibility certificates and character identities.

use std::collections::HashSet;

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMat, RankEstimate};
use crate::rep::{self, conjugate_rep, induce, MatrixRep, RewritingRep, WordRep};
use crate::schreier::{FreeQuotient, SubgroupPresentation};
use crate::words::{Alphabet, GeneratorId, Word};

/// Relative rank threshold for commutants and spans.
pub const SPAN_THRESHOLD: f64 = 1e-8;

/// A reproducible finite set of words: every reduced word of length at most
/// `l0`, followed by `count` further distinct random reduced words of length
/// `1..=max_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSample {
    pub l0: usize,
    pub count: usize,
    pub max_len: usize,
    pub seed: u64,
}

impl Default for WordSample {
    fn default() -> Self {
        WordSample { l0: 3, count: 50, max_len: 12, seed: 0 }
    }
}

impl WordSample {
    pub fn words(&self, alphabet: &Alphabet) -> Result<Vec<Word>> {
        let letters: Vec<(GeneratorId, i64)> =
            alphabet.ids().flat_map(|g| [(g, 1), (g, -1)]).collect();
        let mut out = vec![Word::identity()];
        let mut seen: HashSet<Word> = out.iter().cloned().collect();
        let mut layer = vec![Word::identity()];
        for _ in 0..self.l0 {
            let mut next = Vec::new();
            for w in &layer {
                let last = w.syllables().last().map(|&(g, e)| (g, e.signum()));
                for &(g, e) in &letters {
                    if last == Some((g, -e)) {
                        continue;
                    }
                    let v = w.multiply(&Word::power_of(g, e));
                    if seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        if self.count == 0 {
            return Ok(out);
        }
        if letters.is_empty() || self.max_len == 0 {
            return Err(Error::Sampling("random words need letters and a positive length".into()));
        }
        let mut rng = rep::seeded_rng(self.seed);
        let mut added = 0;
        let mut attempts = 0;
        while added < self.count {
            attempts += 1;
            if attempts > 100 * self.count + 1000 {
                return Err(Error::Sampling(format!("only {added} distinct random words found")));
            }
            let len = rng.random_range(1..=self.max_len);
            let mut raw: Vec<(GeneratorId, i64)> = Vec::with_capacity(len);
            while raw.len() < len {
                let l = letters[rng.random_range(0..letters.len())];
                if raw.last() == Some(&(l.0, -l.1)) {
                    continue;
                }
                raw.push(l);
            }
            let w = Word::reduce(raw);
            if seen.insert(w.clone()) {
                out.push(w);
                added += 1;
            }
        }
        Ok(out)
    }
}

/// Traces of a representation over a list of words.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceVector {
    pub words: Vec<Word>,
    pub traces: Vec<Complex64>,
}

impl TraceVector {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn character<R: WordRep + ?Sized>(rep: &R, words: &[Word]) -> Result<TraceVector> {
    let mut unique = Vec::with_capacity(words.len());
    let mut seen = HashSet::new();
    for w in words {
        if seen.insert(w) {
            unique.push(w.clone());
        }
    }
    let traces = unique
        .par_iter()
        .map(|w| rep.eval_word(w).map(|m| m.trace()))
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceVector { words: unique, traces })
}

/// `|z − w| / max(1, |z|, |w|)`.
pub fn scaled_difference(z: Complex64, w: Complex64) -> f64 {
    (z - w).norm() / 1f64.max(z.norm()).max(w.norm())
}

/// Largest scaled entrywise difference between two characters on one sample.
pub fn character_distance(c1: &TraceVector, c2: &TraceVector) -> Result<f64> {
    if c1.words != c2.words {
        return Err(Error::SampleMismatch);
    }
    Ok(c1
        .traces
        .iter()
        .zip(&c2.traces)
        .map(|(&a, &b)| scaled_difference(a, b))
        .fold(0.0, f64::max))
}

pub fn characters_equal(c1: &TraceVector, c2: &TraceVector, tol: f64) -> Result<bool> {
    Ok(character_distance(c1, c2)? <= tol)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommutantReport {
    pub dimension: usize,
    pub rank: RankEstimate,
}

/// Dimension of `{X : X M = M X for every M in images}`.
pub fn commutant_dimension(images: &[CMat]) -> CommutantReport {
    let n = images.first().map_or(0, |m| m.nrows());
    let id = linalg::identity(n);
    let mut system = CMat::zeros(n * n * images.len().max(1), n * n);
    for (k, m) in images.iter().enumerate() {
        let block = m.transpose().kronecker(&id) - id.kronecker(m);
        system.view_mut((k * n * n, 0), (n * n, n * n)).copy_from(&block);
    }
    let rank = RankEstimate::of(&system, SPAN_THRESHOLD);
    CommutantReport { dimension: n * n - rank.rank, rank }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDimension {
    pub dimension: usize,
    /// Span dimension of the words of length at most `ℓ`, for `ℓ = 0, 1, …`.
    pub per_length: Vec<usize>,
}

/// Dimension of the linear span of the images of all words of length at most
/// `max_len`; the value `n²` certifies irreducibility.
pub fn algebra_dimension(images: &[CMat], max_len: usize) -> AlgebraDimension {
    let n = images.first().map_or(0, |m| m.nrows());
    if n == 0 {
        return AlgebraDimension { dimension: 0, per_length: vec![0] };
    }
    let full = n * n;
    let mut gens: Vec<CMat> = images.to_vec();
    gens.extend(images.iter().filter_map(linalg::inverse));

    let id = linalg::identity(n);
    let mut basis: Vec<DVector<Complex64>> = vec![unit(&id).expect("identity is nonzero")];
    let mut frontier = vec![id];
    let mut per_length = vec![1];
    for _ in 0..max_len {
        if basis.len() == full || frontier.is_empty() {
            per_length.push(basis.len());
            continue;
        }
        let candidates: Vec<DVector<Complex64>> = frontier
            .par_iter()
            .flat_map_iter(|f| gens.iter().map(move |g| f * g))
            .filter_map(|m| unit(&m))
            .map(|v| project_out(project_out(v, &basis), &basis))
            .collect();
        let new_dirs = new_directions(&candidates, n * n);
        frontier = new_dirs
            .iter()
            .map(|v| linalg::devectorize(n, v.as_slice()))
            .collect();
        for v in new_dirs {
            if basis.len() == full {
                break;
            }
            let v = project_out(v, &basis);
            let norm = v.norm();
            if norm > 0.5 {
                basis.push(v / Complex64::new(norm, 0.0));
            }
        }
        per_length.push(basis.len());
    }
    AlgebraDimension { dimension: basis.len(), per_length }
}

fn unit(m: &CMat) -> Option<DVector<Complex64>> {
    let norm = m.norm();
    (norm > 0.0).then(|| DVector::from_column_slice(m.as_slice()) / Complex64::new(norm, 0.0))
}

fn project_out(mut v: DVector<Complex64>, basis: &[DVector<Complex64>]) -> DVector<Complex64> {
    for b in basis {
        let c = b.dotc(&v);
        v -= b * c;
    }
    v
}

/// Orthonormal directions spanning the residual candidates above threshold.
fn new_directions(candidates: &[DVector<Complex64>], dim: usize) -> Vec<DVector<Complex64>> {
    if candidates.is_empty() {
        return vec![];
    }
    let mut rows = CMat::zeros(candidates.len(), dim);
    for (i, c) in candidates.iter().enumerate() {
        rows.row_mut(i).copy_from(&c.transpose());
    }
    let svd = rows.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > SPAN_THRESHOLD)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect()
}

/// Outcome of the Mackey test for the figure-eight index-five subgroup.
#[derive(Clone, Debug)]
pub struct MackeyVerdict {
    /// `α|_N(y₀²)`, `(α|_N)^a(y₀²)`, `(α|_N)^{a²}(y₀²)`.
    pub witnesses: [CMat; 3],
    /// Distances of the witnesses from `I`, `B·A`, `A`.
    pub witness_residuals: [f64; 3],
    pub input_algebra_dimension: usize,
    /// `A ≠ I` and `B·A ≠ I`.
    pub witnesses_nontrivial: bool,
    /// Characters of the two twists differ from that of `α|_N` on the sample.
    pub separated_by_characters: [bool; 2],
    pub irreducible: bool,
}

/// Tolerance for deciding that a witness matrix is the identity.
pub const WITNESS_TOL: f64 = 1e-9;

/// Runs the Mackey criterion with double-coset representatives `{1, a, a²}`
/// and the separating element `y₀² = s²` of `N`.
///
/// `alpha` is a representation of `h`; `n_words` are parent words lying in `N`.
pub fn mackey_check_figure8(
    h: &SubgroupPresentation,
    alpha: &MatrixRep,
    a: &CMat,
    b: &CMat,
    n_words: &[Word],
) -> Result<MackeyVerdict> {
    let m = a.nrows();
    let input_algebra_dimension = algebra_dimension(&[a.clone(), b.clone()], 2 * m * m).dimension;
    if input_algebra_dimension != m * m {
        return Err(Error::ReducibleInput(format!(
            "the pair spans {input_algebra_dimension} of {} dimensions",
            m * m
        )));
    }
    let parent = h.parent();
    let y0_sq = parent.parse_word("s^2")?;
    let twists = [Word::identity(), parent.parse_word("a")?, parent.parse_word("a^2")?];
    let reps = twists
        .iter()
        .map(|g| conjugate_rep(alpha, h, g.clone()))
        .collect::<Result<Vec<RewritingRep>>>()?;
    let mut witnesses = Vec::with_capacity(3);
    for r in &reps {
        witnesses.push(r.eval_word(&y0_sq)?);
    }
    let expected = [linalg::identity(m), b * a, a.clone()];
    let witness_residuals = [0, 1, 2].map(|i| linalg::distance(&witnesses[i], &expected[i]));
    let id = linalg::identity(m);
    let witnesses_nontrivial =
        linalg::distance(&witnesses[1], &id) > WITNESS_TOL && linalg::distance(&witnesses[2], &id) > WITNESS_TOL;

    let mut words = vec![y0_sq];
    words.extend(n_words.iter().cloned());
    let chars = reps.iter().map(|r| character(r, &words)).collect::<Result<Vec<_>>>()?;
    let separated_by_characters = [
        !characters_equal(&chars[0], &chars[1], WITNESS_TOL)?,
        !characters_equal(&chars[0], &chars[2], WITNESS_TOL)?,
    ];
    let irreducible = witnesses_nontrivial && separated_by_characters.iter().all(|&s| s);
    let witnesses: [CMat; 3] = witnesses.try_into().expect("three witnesses");
    Ok(MackeyVerdict {
        witnesses,
        witness_residuals,
        input_algebra_dimension,
        witnesses_nontrivial,
        separated_by_characters,
        irreducible,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResIndReport {
    /// Largest scaled difference `|χ_res(w) − Σ χ_{α^g}(w)| / max(1, |·|, |·|)`.
    pub max_scaled: f64,
    /// Largest absolute difference.
    pub max_absolute: f64,
    pub words: usize,
}

/// Compares `χ(res_N ind_N^G α)` with `Σ_i χ(α^{g_i})` over left coset
/// representatives `g_i`, on parent words lying in `N`.
pub fn res_ind_character_identity(
    alpha: &MatrixRep,
    n_sub: &SubgroupPresentation,
    n_words: &[Word],
) -> Result<ResIndReport> {
    if !n_sub.is_normal() {
        return Err(Error::NotNormal("conjugates of some generator leave the subgroup".into()));
    }
    let induced = induce(alpha, n_sub)?;
    let twisted = n_sub
        .table()
        .left_reps()
        .iter()
        .map(|g| conjugate_rep(alpha, n_sub, g.clone()))
        .collect::<Result<Vec<_>>>()?;
    let lhs = character(&induced, n_words)?;
    let diffs = lhs
        .words
        .par_iter()
        .zip(&lhs.traces)
        .map(|(w, &l)| {
            let mut r = linalg::ZERO;
            for t in &twisted {
                r += t.eval_word(w)?.trace();
            }
            Ok(((l - r).norm(), scaled_difference(l, r)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResIndReport {
        max_scaled: diffs.iter().map(|d| d.1).fold(0.0, f64::max),
        max_absolute: diffs.iter().map(|d| d.0).fold(0.0, f64::max),
        words: diffs.len(),
    })
}

/// Divisibility constraint on the irreducible summands of a restriction to a
/// normal subgroup of index `k`: each `p_j` is a multiple of `m` in `[m, m·k]`
/// and they add up to `m·k`.
pub fn summand_dimension_check(dims: &[usize], m: usize, k: usize) -> bool {
    m > 0
        && !dims.is_empty()
        && dims.iter().all(|&p| p % m == 0 && p >= m && p <= m * k)
        && dims.iter().sum::<usize>() == m * k
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    /// Induced characters agree but source characters differ.
    pub collisions: Vec<(usize, usize)>,
    /// Induced characters agree and so do the source characters.
    pub same_source: Vec<(usize, usize)>,
}

/// Looks for distinct source characters with equal induced characters.
pub fn fiber_sampling(sources: &[TraceVector], induced: &[TraceVector], tol: f64) -> Result<FiberReport> {
    if sources.len() != induced.len() || sources.len() < 2 {
        return Err(Error::Invalid("fiber sampling needs at least two matched samples".into()));
    }
    let mut report = FiberReport::default();
    for i in 0..sources.len() {
        for j in i + 1..sources.len() {
            if character_distance(&induced[i], &induced[j])? > tol {
                continue;
            }
            if character_distance(&sources[i], &sources[j])? > 10.0 * tol {
                report.collisions.push((i, j));
            } else {
                report.same_source.push((i, j));
            }
        }
    }
    Ok(report)
}

/// Images of a free-group representation pulled back along a free quotient.
pub fn alpha_from_pair(
    h: &SubgroupPresentation,
    psi: &FreeQuotient,
    a: &CMat,
    b: &CMat,
) -> Result<MatrixRep> {
    let f2 = crate::presentation::Presentation::new(psi.target().clone(), vec![])?;
    let beta = MatrixRep::new(f2, vec![a.clone(), b.clone()], None)?;
    rep::pullback(&beta, h.presentation().clone(), psi.images())
}
