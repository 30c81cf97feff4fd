//! Matrix representations of finitely presented groups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coset::CosetTable;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::presentation::Presentation;
use crate::schreier::SubgroupPresentation;
use crate::words::{Alphabet, GeneratorId, Word};
use num_complex::Complex64;

/// Relation tolerance: `1e-9` up to dimension 4, `1e-9·n` beyond.
pub fn default_tol(n: usize) -> f64 {
    if n <= 4 {
        1e-9
    } else {
        1e-9 * n as f64
    }
}

/// Anything that turns words into matrices of a fixed size.
pub trait WordRep: Sync {
    fn dim(&self) -> usize;
    fn eval_word(&self, w: &Word) -> Result<CMat>;
}

#[derive(Clone, Debug)]
pub struct MatrixRep {
    presentation: Presentation,
    images: Vec<CMat>,
    inverses: Vec<CMat>,
    n: usize,
    tol: f64,
}

impl MatrixRep {
    /// Builds and verifies a representation; `tol` defaults to [`default_tol`].
    pub fn new(presentation: Presentation, images: Vec<CMat>, tol: Option<f64>) -> Result<Self> {
        let rep = MatrixRep::new_unchecked(presentation, images, tol)?;
        let residual = rep.verify_relations();
        if residual.is_nan() || residual > rep.tol {
            return Err(Error::RelationResidual { residual, tol: rep.tol });
        }
        Ok(rep)
    }

    /// Checks shapes and invertibility but not the relations.
    pub fn new_unchecked(presentation: Presentation, images: Vec<CMat>, tol: Option<f64>) -> Result<Self> {
        if images.len() != presentation.num_generators() {
            return Err(Error::DimensionMismatch {
                expected: presentation.num_generators(),
                found: images.len(),
            });
        }
        let n = images.first().map_or(0, |m| m.nrows());
        let mut inverses = Vec::with_capacity(images.len());
        for (g, m) in presentation.alphabet().ids().zip(&images) {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.nrows().max(m.ncols()) });
            }
            let name = presentation.alphabet().name(g).to_string();
            if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NotInvertible(name));
            }
            inverses.push(linalg::inverse(m).ok_or(Error::NotInvertible(name))?);
        }
        let tol = tol.unwrap_or_else(|| default_tol(n));
        Ok(MatrixRep { presentation, images, inverses, n, tol })
    }

    /// The representation sending every generator to the `n × n` identity.
    pub fn trivial(presentation: Presentation, n: usize) -> Self {
        let k = presentation.num_generators();
        MatrixRep::new(presentation, vec![linalg::identity(n); k], None).expect("identity images satisfy every relator")
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    pub fn images(&self) -> &[CMat] {
        &self.images
    }

    pub fn image(&self, g: GeneratorId) -> &CMat {
        &self.images[g.0]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// Product of generator images along the word, left to right.
    pub fn eval(&self, w: &Word) -> CMat {
        let mut out = linalg::identity(self.n);
        for &(g, e) in w.syllables() {
            let m = if e > 0 { &self.images[g.0] } else { &self.inverses[g.0] };
            for _ in 0..e.unsigned_abs() {
                out = &out * m;
            }
        }
        out
    }

    /// Largest Frobenius residual `‖ρ(r) − I‖` over the relators.
    pub fn verify_relations(&self) -> f64 {
        let id = linalg::identity(self.n);
        self.presentation
            .relators()
            .iter()
            .map(|r| linalg::distance(&self.eval(r), &id))
            .fold(0.0, f64::max)
    }

    pub fn is_valid(&self) -> bool {
        self.verify_relations() <= self.tol
    }

    /// `g ↦ P ρ(g) P⁻¹`.
    pub fn conjugate_by(&self, p: &CMat) -> Result<MatrixRep> {
        let pi = linalg::inverse(p).ok_or_else(|| Error::NotInvertible("conjugating matrix".into()))?;
        let images = self.images.iter().map(|m| p * m * &pi).collect();
        MatrixRep::new(self.presentation.clone(), images, Some(self.tol))
    }

    /// Largest `|det ρ(g) − 1|` over the generators.
    pub fn det_defect(&self) -> f64 {
        self.images
            .iter()
            .map(|m| (m.determinant() - linalg::ONE).norm())
            .fold(0.0, f64::max)
    }
}

impl WordRep for MatrixRep {
    fn dim(&self) -> usize {
        self.n
    }

    fn eval_word(&self, w: &Word) -> Result<CMat> {
        self.alphabet().validate(w)?;
        Ok(self.eval(w))
    }
}

/// A presentation of the free group on `names`.
pub fn free_presentation(names: &[&str]) -> Result<Presentation> {
    Presentation::new(Alphabet::from_names(names, false)?, vec![])
}

/// Pulls `rep` back along the homomorphism `presentation → rep.presentation()`
/// given by `images` (one word per generator of `presentation`).
pub fn pullback<R: WordRep + ?Sized>(rep: &R, presentation: Presentation, images: &[Word]) -> Result<MatrixRep> {
    if images.len() != presentation.num_generators() {
        return Err(Error::DimensionMismatch { expected: presentation.num_generators(), found: images.len() });
    }
    let mats = images
        .iter()
        .map(|w| rep.eval_word(w))
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::new(presentation, mats, Some(default_tol(rep.dim())))
}

/// `res_H^G ρ`: each subgroup generator goes to ρ of its expansion.
pub fn restrict(rep: &MatrixRep, sub: &SubgroupPresentation) -> Result<MatrixRep> {
    if rep.presentation() != sub.parent() {
        return Err(Error::PresentationMismatch);
    }
    pullback(rep, sub.presentation().clone(), &sub.expansions())
}

/// A representation of a subgroup, evaluated on parent words by rewriting.
///
/// With `g` nontrivial this is the twisted representation `x ↦ α(g⁻¹ x g)` on
/// the conjugate subgroup `g H g⁻¹`.
#[derive(Clone, Debug)]
pub struct RewritingRep<'a> {
    alpha: &'a MatrixRep,
    sub: &'a SubgroupPresentation,
    g: Word,
}

impl<'a> RewritingRep<'a> {
    pub fn new(alpha: &'a MatrixRep, sub: &'a SubgroupPresentation) -> Result<Self> {
        conjugate_rep(alpha, sub, Word::identity())
    }

    pub fn twist(&self) -> &Word {
        &self.g
    }
}

/// `α^g`, defined on parent words `x` with `g⁻¹ x g` in the subgroup.
pub fn conjugate_rep<'a>(
    alpha: &'a MatrixRep,
    sub: &'a SubgroupPresentation,
    g: Word,
) -> Result<RewritingRep<'a>> {
    if alpha.presentation() != sub.presentation() {
        return Err(Error::PresentationMismatch);
    }
    sub.parent().alphabet().validate(&g)?;
    Ok(RewritingRep { alpha, sub, g })
}

impl WordRep for RewritingRep<'_> {
    fn dim(&self) -> usize {
        self.alpha.n()
    }

    fn eval_word(&self, w: &Word) -> Result<CMat> {
        self.sub.parent().alphabet().validate(w)?;
        let inner = w.conjugate(&self.g);
        Ok(self.alpha.eval(&self.sub.rewrite(&inner)?))
    }
}

/// `ind_H^G α` in the coset-major basis `g_1⊗e_1, …, g_k⊗e_m`.
///
/// Block `(j, i)` of the image of a generator `g` is `α(h)` where
/// `g · g_i = g_j · h`; all other blocks vanish.
pub fn induce(alpha: &MatrixRep, sub: &SubgroupPresentation) -> Result<MatrixRep> {
    if alpha.presentation() != sub.presentation() {
        return Err(Error::PresentationMismatch);
    }
    let table = sub.table();
    let (k, m) = (table.index(), alpha.n());
    let parent = sub.parent();
    let mut images = Vec::with_capacity(parent.num_generators());
    for g in parent.alphabet().ids() {
        let gw = Word::generator(g);
        let mut mat = CMat::zeros(k * m, k * m);
        for i in 0..k {
            let (j, h) = table.factorize(&gw, i)?;
            let block = alpha.eval(&sub.rewrite(&h)?);
            mat.view_mut((j * m, i * m), (m, m)).copy_from(&block);
        }
        images.push(mat);
    }
    let n = k * m;
    MatrixRep::new(parent.clone(), images, Some(default_tol(n).max(alpha.tol())))
}

/// Determinant an induced generator image must have when `α` is special
/// linear: `sign(π_g)^m` for the coset permutation `π_g`.
pub fn induced_determinant(table: &CosetTable, g: GeneratorId, m: usize) -> Result<i32> {
    let sign = table.left_permutation(&Word::generator(g))?.sign();
    Ok(if m.is_multiple_of(2) { 1 } else { sign })
}

pub fn direct_sum(reps: &[MatrixRep]) -> Result<MatrixRep> {
    let first = reps.first().ok_or_else(|| Error::Invalid("direct sum of nothing".into()))?;
    if reps.iter().any(|r| r.presentation() != first.presentation()) {
        return Err(Error::PresentationMismatch);
    }
    let images = first
        .alphabet()
        .ids()
        .map(|g| linalg::block_diag(&reps.iter().map(|r| r.image(g).clone()).collect::<Vec<_>>()))
        .collect();
    let tol = reps.iter().map(|r| r.tol()).fold(0.0, f64::max);
    let n: usize = reps.iter().map(|r| r.n()).sum();
    MatrixRep::new(first.presentation().clone(), images, Some(tol.max(default_tol(n))))
}

/// The scalar twist `g ↦ λ^{exponent·φ(g)}` with `φ` the meridional exponent sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AbelianTwist {
    pub lambda: Complex64,
    pub exponent: i64,
}

impl AbelianTwist {
    pub fn new(lambda: Complex64, exponent: i64) -> Result<Self> {
        if lambda.norm() == 0.0 || !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::Invalid("twist parameter must be a nonzero finite number".into()));
        }
        Ok(AbelianTwist { lambda, exponent })
    }

    /// The scalar attached to a word.
    pub fn scalar(&self, alphabet: &Alphabet, w: &Word) -> Result<Complex64> {
        let phi = w.exponent_sum(alphabet)?;
        Ok(power(self.lambda, self.exponent * phi))
    }
}

fn power(z: Complex64, e: i64) -> Complex64 {
    let e = i32::try_from(e).expect("twist exponent fits in i32");
    z.powi(e)
}

/// `ρ ⊗ η`, the pointwise product with an abelian twist.
pub fn abelian_twist(rep: &MatrixRep, tw: AbelianTwist) -> Result<MatrixRep> {
    let images = rep
        .alphabet()
        .ids()
        .map(|g| Ok(rep.image(g) * tw.scalar(rep.alphabet(), &Word::generator(g))?))
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::new(rep.presentation().clone(), images, Some(rep.tol()))
}

/// `⊕_{i<l} ρ_i ⊗ λ_i^{p_l φ}  ⊕  ρ_l ⊗ (λ_1^{−p_1} ⋯ λ_{l−1}^{−p_{l−1}})^φ`
/// for special linear `ρ_i` of dimensions `p_i`. The result is special linear.
pub fn phi_direct_sum(reps: &[MatrixRep], lambdas: &[Complex64]) -> Result<MatrixRep> {
    let l = reps.len();
    if l == 0 || lambdas.len() + 1 != l {
        return Err(Error::DimensionMismatch { expected: l.saturating_sub(1), found: lambdas.len() });
    }
    for r in reps {
        let defect = r.det_defect();
        if defect > default_tol(r.n()) {
            return Err(Error::NotSpecialLinear(defect));
        }
    }
    let p_l = reps[l - 1].n() as i64;
    let mut parts = Vec::with_capacity(l);
    let mut balance = linalg::ONE;
    for (r, &lam) in reps.iter().zip(lambdas) {
        parts.push(abelian_twist(r, AbelianTwist::new(lam, p_l)?)?);
        balance *= power(lam, -(r.n() as i64));
    }
    parts.push(abelian_twist(&reps[l - 1], AbelianTwist::new(balance, 1)?)?);
    direct_sum(&parts)
}

/// A random `SL(m, C)` matrix: entries with real and imaginary parts uniform
/// in `[−1, 1]`, divided by the principal `m`-th root of the determinant.
pub fn random_sl<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<CMat> {
    if m == 0 {
        return Err(Error::Invalid("dimension must be at least 1".into()));
    }
    for _ in 0..100 {
        let mat = CMat::from_fn(m, m, |_, _| {
            Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
        });
        let det = mat.determinant();
        if det.norm() < 1e-8 {
            continue;
        }
        return Ok(mat / linalg::principal_root(det, m));
    }
    Err(Error::Sampling("no matrix with |det| >= 1e-8 after 100 attempts".into()))
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `random_sl` with a fresh generator for `seed`.
pub fn random_sl_seeded(m: usize, seed: u64) -> Result<CMat> {
    random_sl(m, &mut seeded_rng(seed))
}

/// The pair `(A, B)` drawn in that order from one generator per seed.
pub fn random_sl_pair(m: usize, seed: u64) -> Result<(CMat, CMat)> {
    let mut rng = seeded_rng(seed);
    let a = random_sl(m, &mut rng)?;
    let b = random_sl(m, &mut rng)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::dihedral_rep;
    use crate::presentation::{two_bridge_presentation, two_bridge_sa_form, TwoBridgeParams};

    fn fig8_h() -> SubgroupPresentation {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let rep = dihedral_rep(&p, 5).unwrap();
        SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "y").unwrap()
    }

    fn psi_images(f2: &Presentation) -> Vec<Word> {
        ["1", "x", "x", "1", "y", "1"].iter().map(|t| f2.parse_word(t).unwrap()).collect()
    }

    fn alpha_for(h: &SubgroupPresentation, a: &CMat, b: &CMat) -> MatrixRep {
        let f2 = free_presentation(&["x", "y"]).unwrap();
        let beta = MatrixRep::new(f2.clone(), vec![a.clone(), b.clone()], None).unwrap();
        pullback(&beta, h.presentation().clone(), &psi_images(&f2)).unwrap()
    }

    #[test]
    fn eval_basics() {
        let f2 = free_presentation(&["x", "y"]).unwrap();
        let (a, b) = random_sl_pair(2, 7).unwrap();
        let beta = MatrixRep::new(f2.clone(), vec![a.clone(), b.clone()], None).unwrap();
        assert_eq!(beta.eval(&Word::identity()), linalg::identity(2));
        let xy = f2.parse_word("x y").unwrap();
        assert!(linalg::distance(&beta.eval(&xy), &(&a * &b)) < 1e-14);
        let xx = Word::reduce([(GeneratorId(0), 1), (GeneratorId(0), -1)]);
        assert!(linalg::distance(&beta.eval(&xx), &linalg::identity(2)) < 1e-12);
        assert_eq!(beta.verify_relations(), 0.0);
    }

    #[test]
    fn random_sl_is_special_and_deterministic() {
        for m in 1..=5 {
            for seed in 0..10 {
                let a = random_sl_seeded(m, seed).unwrap();
                assert!((a.determinant() - linalg::ONE).norm() < 1e-12);
                assert_eq!(a, random_sl_seeded(m, seed).unwrap());
            }
        }
        assert_ne!(random_sl_seeded(2, 1).unwrap(), random_sl_seeded(2, 2).unwrap());
    }

    #[test]
    fn perturbed_rep_fails_verification() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let h = fig8_h();
        let (a, b) = random_sl_pair(2, 3).unwrap();
        let rho = induce(&alpha_for(&h, &a, &b), &h).unwrap();
        assert!(rho.verify_relations() <= 1e-9);
        let mut imgs = rho.images().to_vec();
        imgs[0][(0, 0)] += Complex64::new(1e-3, 0.0);
        assert!(matches!(
            MatrixRep::new(p.clone(), imgs.clone(), None),
            Err(Error::RelationResidual { .. })
        ));
        let unchecked = MatrixRep::new_unchecked(p, imgs, None).unwrap();
        assert!(unchecked.verify_relations() > unchecked.tol());
    }

    fn block(m: &CMat, size: usize, r: usize, c: usize) -> CMat {
        m.view((r * size, c * size), (size, size)).into_owned()
    }

    #[test]
    fn induced_blocks_match_printed_pattern() {
        let h = fig8_h();
        for seed in 0..5 {
            let (a, b) = random_sl_pair(2, seed).unwrap();
            let rho = induce(&alpha_for(&h, &a, &b), &h).unwrap();
            let st = two_bridge_presentation(TwoBridgeParams::new(5, 3).unwrap());
            let sa = h.parent();
            let rho_st = pullback(&rho, st, &[sa.parse_word("s").unwrap(), sa.parse_word("a s").unwrap()]).unwrap();
            let id = linalg::identity(2);
            let zero = CMat::zeros(2, 2);
            // 1-based (row, col) -> block
            let s_pattern = [((1, 1), &id), ((2, 5), &b), ((3, 4), &id), ((4, 3), &a), ((5, 2), &a)];
            let t_pattern = [((1, 2), &a), ((2, 1), &id), ((3, 5), &b), ((4, 4), &id), ((5, 3), &a)];
            for (img, pattern) in [(&rho_st.images()[0], &s_pattern), (&rho_st.images()[1], &t_pattern)] {
                for r in 1..=5 {
                    for c in 1..=5 {
                        let want = pattern.iter().find(|(rc, _)| *rc == (r, c)).map_or(&zero, |(_, m)| *m);
                        assert!(linalg::distance(&block(img, 2, r - 1, c - 1), want) < 1e-12, "block ({r},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn induce_trivial_gives_coset_permutations() {
        let h = fig8_h();
        let one = MatrixRep::trivial(h.presentation().clone(), 1);
        let rho = induce(&one, &h).unwrap();
        for g in h.parent().alphabet().ids() {
            let perm = h.table().left_permutation(&Word::generator(g)).unwrap();
            let img = rho.image(g);
            for i in 0..5 {
                for j in 0..5 {
                    let want = if perm.apply(i) == j { 1.0 } else { 0.0 };
                    assert_eq!(img[(j, i)], Complex64::new(want, 0.0));
                }
            }
            let det = img.determinant();
            assert!((det - Complex64::new(perm.sign() as f64, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn conjugate_rep_witnesses() {
        let h = fig8_h();
        let (a, b) = random_sl_pair(2, 11).unwrap();
        let alpha = alpha_for(&h, &a, &b);
        let p = h.parent();
        let y0sq = p.parse_word("s^2").unwrap();
        let plain = RewritingRep::new(&alpha, &h).unwrap();
        assert!(linalg::distance(&plain.eval_word(&y0sq).unwrap(), &linalg::identity(2)) < 1e-12);
        let ta = conjugate_rep(&alpha, &h, p.parse_word("a").unwrap()).unwrap();
        assert!(linalg::distance(&ta.eval_word(&y0sq).unwrap(), &(&b * &a)) < 1e-12);
        let ta2 = conjugate_rep(&alpha, &h, p.parse_word("a^2").unwrap()).unwrap();
        assert!(linalg::distance(&ta2.eval_word(&y0sq).unwrap(), &a) < 1e-12);
        assert!(matches!(ta.eval_word(&p.parse_word("a").unwrap()), Err(Error::NotInSubgroup(_))));
    }

    #[test]
    fn restrict_examples() {
        let h = fig8_h();
        let (a, b) = random_sl_pair(2, 5).unwrap();
        let rho = induce(&alpha_for(&h, &a, &b), &h).unwrap();
        let res = restrict(&rho, &h).unwrap();
        let y1 = h.presentation().parse_word("y1").unwrap();
        let expected = rho.eval(&h.parent().parse_word("a s a^-4").unwrap());
        assert!(linalg::distance(&res.eval(&y1), &expected) < 1e-12);
        let triv = restrict(&MatrixRep::trivial(h.parent().clone(), 3), &h).unwrap();
        assert!(triv.images().iter().all(|m| *m == linalg::identity(3)));
    }

    #[test]
    fn twists_and_sums() {
        let st = two_bridge_presentation(TwoBridgeParams::new(5, 3).unwrap());
        let h = {
            let rep = dihedral_rep(&st, 5).unwrap();
            SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "y").unwrap()
        };
        let f2 = free_presentation(&["x", "y"]).unwrap();
        let (a, b) = random_sl_pair(2, 1).unwrap();
        let beta = MatrixRep::new(f2.clone(), vec![a, b], None).unwrap();
        let alpha1 = MatrixRep::trivial(h.presentation().clone(), 2);
        let rho1 = induce(&alpha1, &h).unwrap();
        let rho2 = rho1.conjugate_by(&random_sl_seeded(10, 4).unwrap()).unwrap();
        let lam = Complex64::new(0.7, -0.4);
        let tw = abelian_twist(&rho1, AbelianTwist::new(lam, 1).unwrap()).unwrap();
        let s = st.parse_word("s").unwrap();
        assert!((tw.eval(&s).trace() - lam * rho1.eval(&s).trace()).norm() < 1e-12);
        assert!((tw.eval(&s).determinant() - lam.powi(10) * rho1.eval(&s).determinant()).norm() < 1e-9);
        let same = abelian_twist(&rho1, AbelianTwist::new(linalg::ONE, 3).unwrap()).unwrap();
        assert_eq!(same.images(), rho1.images());

        let sum = phi_direct_sum(&[rho1.clone(), rho2.clone()], &[lam]).unwrap();
        assert!(sum.det_defect() < 1e-9);
        let chi = sum.eval(&s).trace();
        let expected = lam.powi(10) * rho1.eval(&s).trace() + lam.powi(-10) * rho2.eval(&s).trace();
        assert!((chi - expected).norm() < 1e-9 * expected.norm().max(1.0));
        let plain = phi_direct_sum(&[rho1.clone(), rho2.clone()], &[linalg::ONE]).unwrap();
        assert_eq!(plain.images(), direct_sum(&[rho1.clone(), rho2]).unwrap().images());
        assert!(matches!(direct_sum(&[rho1, beta.clone()]), Err(Error::PresentationMismatch)));
        let gl = MatrixRep::new(f2, vec![linalg::identity(2) * Complex64::new(2.0, 0.0); 2], None).unwrap();
        assert!(matches!(phi_direct_sum(&[beta, gl], &[lam]), Err(Error::NotSpecialLinear(_))));
    }

    #[test]
    fn twist_needs_meridional_alphabet() {
        let h = fig8_h();
        let triv = MatrixRep::trivial(h.parent().clone(), 1);
        assert!(matches!(
            abelian_twist(&triv, AbelianTwist::new(Complex64::new(2.0, 0.0), 1).unwrap()),
            Err(Error::NonMeridional(_))
        ));
        assert!(AbelianTwist::new(linalg::ZERO, 1).is_err());
    }

    use proptest::prelude::*;

    fn raw_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, -2i64..=2), 0..=max_len)
            .prop_map(|v| Word::reduce(v.into_iter().map(|(g, e)| (GeneratorId(g), e))))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

        #[test]
        fn eval_is_a_homomorphism(u in raw_word(2, 12), v in raw_word(2, 12), seed in 0u64..50) {
            let h = fig8_h();
            let (a, b) = random_sl_pair(2, seed).unwrap();
            let rho = induce(&alpha_for(&h, &a, &b), &h).unwrap();
            let lhs = rho.eval(&u.multiply(&v));
            let rhs = rho.eval(&u) * rho.eval(&v);
            prop_assert!(linalg::distance(&lhs, &rhs) <= 1e-8 * lhs.norm().max(1.0));
            let inv = rho.eval(&u.inverse()) * rho.eval(&u);
            prop_assert!(linalg::distance(&inv, &linalg::identity(10)) <= 1e-8 * rho.eval(&u).norm().powi(2).max(1.0));
        }

        #[test]
        fn random_sl_has_unit_determinant(m in 1usize..=5, seed in any::<u64>()) {
            let a = random_sl_seeded(m, seed).unwrap();
            prop_assert!((a.determinant() - linalg::ONE).norm() <= 1e-10);
        }
    }
}
