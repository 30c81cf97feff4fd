//! Twisted cohomology dimensions through Fox calculus, and numerical ranks of
//! character maps.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMat, RankEstimate};
use crate::rep::MatrixRep;
use crate::words::{GeneratorId, Word};

/// Relative rank threshold for cocycle computations.
pub const COHOMOLOGY_THRESHOLD: f64 = 1e-7;
/// Relative rank threshold for character Jacobians.
pub const JACOBIAN_THRESHOLD: f64 = 1e-6;

/// `∂r/∂g` evaluated through `ρ`, or through `Ad∘ρ` on trace-zero matrices
/// when `adjoint` is set.
pub fn fox_derivative(r: &Word, g: GeneratorId, rep: &MatrixRep, adjoint: bool) -> CMat {
    let n = rep.n();
    let basis = adjoint.then(|| linalg::sl_basis(n));
    let size = if adjoint { n * n - 1 } else { n };
    let mut sum = CMat::zeros(size, size);
    let mut prefix = linalg::identity(n);
    let mut prefix_inv = linalg::identity(n);
    let add = |p: &CMat, p_inv: &CMat, sign: f64, sum: &mut CMat| {
        let term = match &basis {
            Some(q) => linalg::adjoint_action(p, p_inv, q),
            None => p.clone(),
        };
        *sum += term * Complex64::new(sign, 0.0);
    };
    for (h, e) in r.letters() {
        let m = rep.image(h);
        let m_inv = linalg::inverse(m).expect("representation images are invertible");
        if e > 0 {
            if h == g {
                add(&prefix, &prefix_inv, 1.0, &mut sum);
            }
            prefix = &prefix * m;
            prefix_inv = &m_inv * &prefix_inv;
        } else {
            prefix = &prefix * &m_inv;
            prefix_inv = m * &prefix_inv;
            if h == g {
                add(&prefix, &prefix_inv, -1.0, &mut sum);
            }
        }
    }
    sum
}

/// Largest `‖Σ_g ∂r/∂g · (ρ(g) − I) − (ρ(r) − I)‖` over the relators.
pub fn fox_fundamental_residual(rep: &MatrixRep) -> f64 {
    let id = linalg::identity(rep.n());
    rep.presentation()
        .relators()
        .iter()
        .map(|r| {
            let mut lhs = CMat::zeros(rep.n(), rep.n());
            for g in rep.alphabet().ids() {
                lhs += fox_derivative(r, g, rep, false) * (rep.image(g) - &id);
            }
            linalg::distance(&lhs, &(rep.eval(r) - &id))
        })
        .fold(0.0, f64::max)
}

/// Adjoint Fox Jacobian: block `(i, j)` is `Ad∘ρ(∂r_i/∂g_j)`.
#[derive(Clone, Debug)]
pub struct FoxMatrix {
    pub matrix: CMat,
    pub block: usize,
    pub relators: usize,
    pub generators: usize,
}

impl FoxMatrix {
    pub fn new(rep: &MatrixRep) -> FoxMatrix {
        let d = rep.n() * rep.n() - 1;
        let relators = rep.presentation().relators();
        let gens: Vec<GeneratorId> = rep.alphabet().ids().collect();
        let blocks: Vec<CMat> = relators
            .par_iter()
            .flat_map_iter(|r| gens.iter().map(move |&g| fox_derivative(r, g, rep, true)))
            .collect();
        let mut matrix = CMat::zeros(relators.len() * d, gens.len() * d);
        for (idx, b) in blocks.iter().enumerate() {
            let (i, j) = (idx / gens.len(), idx % gens.len());
            matrix.view_mut((i * d, j * d), (d, d)).copy_from(b);
        }
        FoxMatrix { matrix, block: d, relators: relators.len(), generators: gens.len() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimReport {
    pub n: usize,
    pub dim_z1: usize,
    pub dim_b1: usize,
    pub dim_h0: usize,
    pub dim_h1: i64,
    pub threshold: f64,
    pub fox_rank: RankEstimate,
    pub invariants_rank: RankEstimate,
    /// Both ranks have a clear gap and `dim_h1 ≥ 0`.
    pub conclusive: bool,
}

/// Dimensions of `Z¹`, `B¹`, `H⁰`, `H¹` with coefficients in `sl(n)` twisted
/// by the adjoint action.
pub fn h1_dimension(rep: &MatrixRep) -> Result<DimReport> {
    let n = rep.n();
    if n < 2 {
        return Err(Error::Invalid("adjoint cohomology needs dimension at least 2".into()));
    }
    let d = n * n - 1;
    let k = rep.presentation().num_generators();
    let fox = FoxMatrix::new(rep);
    let fox_rank = RankEstimate::of(&fox.matrix, COHOMOLOGY_THRESHOLD);

    let q = linalg::sl_basis(n);
    let id = linalg::identity(d);
    let mut inv_system = CMat::zeros(k * d, d);
    for (j, g) in rep.alphabet().ids().enumerate() {
        let m = rep.image(g);
        let m_inv = linalg::inverse(m).ok_or_else(|| Error::NotInvertible(rep.alphabet().name(g).into()))?;
        let ad = linalg::adjoint_action(m, &m_inv, &q) - &id;
        inv_system.view_mut((j * d, 0), (d, d)).copy_from(&ad);
    }
    let invariants_rank = RankEstimate::of(&inv_system, COHOMOLOGY_THRESHOLD);

    let dim_z1 = k * d - fox_rank.rank;
    let dim_h0 = d - invariants_rank.rank;
    let dim_b1 = d - dim_h0;
    let dim_h1 = dim_z1 as i64 - dim_b1 as i64;
    Ok(DimReport {
        n,
        dim_z1,
        dim_b1,
        dim_h0,
        dim_h1,
        threshold: COHOMOLOGY_THRESHOLD,
        conclusive: fox_rank.conclusive && invariants_rank.conclusive && dim_h1 >= 0,
        fox_rank,
        invariants_rank,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobianReport {
    pub rank: RankEstimate,
    pub rows: usize,
    pub columns: usize,
    pub step: f64,
}

impl JacobianReport {
    pub fn value(&self) -> usize {
        self.rank.rank
    }
}

/// Numerical rank of the derivative of `f(A, B)` at a point of `SL(m)²`.
///
/// Perturbations are `A·exp(±h X)` and `B·exp(±h X)` for `X` running over an
/// orthonormal basis of trace-zero matrices (`2(m²−1)` complex directions).
/// Rows are scaled by `1 / max(1, |f_i(A, B)|)` before the rank is taken.
pub fn character_jacobian_rank<F>(f: F, a: &CMat, b: &CMat, h: f64) -> Result<JacobianReport>
where
    F: Fn(&CMat, &CMat) -> Result<Vec<Complex64>> + Sync,
{
    let m = a.nrows();
    let q = linalg::sl_basis(m);
    let base = f(a, b)?;
    let rows = base.len();
    let d = q.ncols();
    let exps: Vec<(CMat, CMat)> = (0..d)
        .map(|k| {
            let x = linalg::devectorize(m, q.column(k).as_slice());
            let hx = x * Complex64::new(h, 0.0);
            (linalg::expm(&hx), linalg::expm(&(-hx)))
        })
        .collect();
    let columns = (0..2 * d)
        .into_par_iter()
        .map(|c| {
            let (plus, minus) = &exps[c % d];
            let (fp, fm) = if c < d {
                (f(&(a * plus), b)?, f(&(a * minus), b)?)
            } else {
                (f(a, &(b * plus))?, f(a, &(b * minus))?)
            };
            if fp.len() != rows || fm.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: fp.len().min(fm.len()) });
            }
            Ok((0..rows)
                .map(|i| (fp[i] - fm[i]) / Complex64::new(2.0 * h * base[i].norm().max(1.0), 0.0))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let jac = CMat::from_fn(rows, 2 * d, |i, j| columns[j][i]);
    Ok(JacobianReport { rank: RankEstimate::of(&jac, JACOBIAN_THRESHOLD), rows, columns: 2 * d, step: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{alpha_from_pair, character, WordSample};
    use crate::coset::{dihedral_rep, CosetTable};
    use crate::presentation::{two_bridge_sa_form, TwoBridgeParams};
    use crate::rep::{free_presentation, induce, random_sl_pair};
    use crate::schreier::{quotient_to_free, SubgroupPresentation};
    use crate::words::Alphabet;

    fn f2_rep(m: usize, seed: u64) -> MatrixRep {
        let (a, b) = random_sl_pair(m, seed).unwrap();
        MatrixRep::new(free_presentation(&["x", "y"]).unwrap(), vec![a, b], None).unwrap()
    }

    fn fig8_setup() -> (SubgroupPresentation, crate::schreier::FreeQuotient) {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let rep = dihedral_rep(&p, 5).unwrap();
        let h = SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "y").unwrap();
        let f2 = Alphabet::from_names(&["x", "y"], false).unwrap();
        let imgs = ["1", "x", "x", "1", "y", "1"].iter().map(|t| f2.parse_word(t).unwrap()).collect();
        let psi = quotient_to_free(h.presentation(), f2, imgs).unwrap();
        (h, psi)
    }

    #[test]
    fn base_and_product_rules() {
        let rep = f2_rep(2, 1);
        let x = GeneratorId(0);
        let id = linalg::identity(2);
        assert!(linalg::distance(&fox_derivative(&Word::generator(x), x, &rep, false), &id) < 1e-15);
        let d = fox_derivative(&Word::power_of(x, 2), x, &rep, false);
        assert!(linalg::distance(&d, &(&id + rep.image(x))) < 1e-14);
        let d = fox_derivative(&Word::power_of(x, -1), x, &rep, false);
        let xi = linalg::inverse(rep.image(x)).unwrap();
        assert!(linalg::distance(&d, &(-xi)) < 1e-14);
        assert_eq!(fox_derivative(&Word::generator(x), GeneratorId(1), &rep, false), CMat::zeros(2, 2));
        let ad = fox_derivative(&Word::generator(x), x, &rep, true);
        assert!(linalg::distance(&ad, &linalg::identity(3)) < 1e-15);
    }

    #[test]
    fn fundamental_identity() {
        let (h, psi) = fig8_setup();
        for seed in 0..3 {
            let (a, b) = random_sl_pair(2, seed).unwrap();
            let alpha = alpha_from_pair(&h, &psi, &a, &b).unwrap();
            let rho = induce(&alpha, &h).unwrap();
            assert!(fox_fundamental_residual(&rho) <= 1e-9);
            assert!(fox_fundamental_residual(&alpha) <= 1e-9);
        }
    }

    #[test]
    fn free_group_dimensions() {
        for seed in 0..5 {
            let r = h1_dimension(&f2_rep(2, seed)).unwrap();
            assert_eq!((r.dim_z1, r.dim_b1, r.dim_h0, r.dim_h1), (6, 3, 0, 3));
            assert!(r.conclusive);
        }
        let r = h1_dimension(&f2_rep(4, 3)).unwrap();
        assert_eq!(r.dim_h1, 15);
        let triv = h1_dimension(&MatrixRep::trivial(free_presentation(&["x", "y"]).unwrap(), 2)).unwrap();
        assert_eq!((triv.dim_z1, triv.dim_b1, triv.dim_h0, triv.dim_h1), (6, 0, 3, 6));
    }

    #[test]
    fn induced_figure_eight_cohomology() {
        let (h, psi) = fig8_setup();
        let (a, b) = random_sl_pair(2, 2).unwrap();
        let rho = induce(&alpha_from_pair(&h, &psi, &a, &b).unwrap(), &h).unwrap();
        let r = h1_dimension(&rho).unwrap();
        assert_eq!(r.dim_h0, 0);
        assert_eq!(r.dim_b1, 99);
        assert!(r.dim_h1 >= 3, "{r:?}");
        assert!(r.conclusive);
    }

    #[test]
    fn jacobian_ranks() {
        let f2 = free_presentation(&["x", "y"]).unwrap();
        let words = WordSample::default().words(f2.alphabet()).unwrap();
        let (a, b) = random_sl_pair(2, 5).unwrap();
        let constant = character_jacobian_rank(|_, _| Ok(vec![linalg::ONE; 5]), &a, &b, 1e-5).unwrap();
        assert_eq!(constant.value(), 0);
        let identity = |x: &CMat, y: &CMat| {
            let beta = MatrixRep::new_unchecked(f2.clone(), vec![x.clone(), y.clone()], None)?;
            Ok(character(&beta, &words)?.traces)
        };
        let r = character_jacobian_rank(identity, &a, &b, 1e-5).unwrap();
        assert_eq!(r.value(), 3);
        assert!(r.rank.conclusive);
        assert_eq!(r.columns, 6);
    }

    #[test]
    fn induced_jacobian_rank_is_step_independent() {
        let (h, psi) = fig8_setup();
        let words = WordSample::default().words(h.parent().alphabet()).unwrap();
        let (a, b) = random_sl_pair(2, 9).unwrap();
        let pipeline = |x: &CMat, y: &CMat| {
            let alpha = alpha_from_pair(&h, &psi, x, y)?;
            Ok(character(&induce(&alpha, &h)?, &words)?.traces)
        };
        let ranks: Vec<usize> = [1e-4, 1e-5, 1e-6]
            .iter()
            .map(|&step| {
                let r = character_jacobian_rank(pipeline, &a, &b, step).unwrap();
                assert!(r.rank.conclusive);
                r.value()
            })
            .collect();
        assert_eq!(ranks, vec![3, 3, 3]);
    }

    use proptest::prelude::*;
    use crate::presentation::Presentation;

    fn raw_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, -2i64..=2), 0..=max_len)
            .prop_map(|v| Word::reduce(v.into_iter().map(|(g, e)| (GeneratorId(g), e))))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

        #[test]
        fn fox_fundamental_identity(r in raw_word(2, 14), seed in 0u64..100, m in 1usize..4) {
            prop_assume!(!r.is_identity());
            let (a, b) = random_sl_pair(m, seed).unwrap();
            let f = Presentation::new(Alphabet::from_names(&["x", "y"], false).unwrap(), vec![r]).unwrap();
            let rep = MatrixRep::new_unchecked(f, vec![a, b], None).unwrap();
            let scale = rep.eval(&rep.presentation().relators()[0]).norm().max(1.0);
            prop_assert!(fox_fundamental_residual(&rep) <= 1e-9 * scale);
        }
    }
}
