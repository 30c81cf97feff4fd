use knotrep_core::figure8::{run_figure8, run_pair, Figure8, PipelineConfig, SeedStatus};
use knotrep_core::linalg;
use knotrep_core::rep::random_sl_pair;

#[test]
fn dimension_four_pairs_induce_irreducibly() {
    let fig = Figure8::load().unwrap();
    let cfg = PipelineConfig { m: 4, seeds: (0..5).collect(), with_h1: false, ..PipelineConfig::default() };
    let report = run_figure8(&fig, &cfg).unwrap();
    for s in &report.seeds {
        assert_eq!(s.status, SeedStatus::Pass, "seed {}: {:?}", s.seed, s.checks);
        assert_eq!(s.algebra.as_ref().unwrap().dimension, 400);
        assert_eq!(s.commutant_dimension, Some(1));
        assert!(s.jacobian.as_ref().unwrap().value() >= 15);
    }
    let (a, b) = random_sl_pair(4, 0).unwrap();
    assert_eq!(fig.induced(&a, &b).unwrap().n(), 20);
}

#[test]
fn identity_first_matrix_is_rejected_before_induction() {
    let fig = Figure8::load().unwrap();
    let cfg = PipelineConfig::default();
    let (_, b) = random_sl_pair(2, 17).unwrap();
    let r = run_pair(&fig, &cfg, 17, &linalg::identity(2), &b, &[], &[]);
    assert_eq!(r.status, SeedStatus::Fail);
    assert!(r.input_algebra_dimension < 4);
    assert!(r.error.as_deref().unwrap().contains("reducible"));
    assert!(r.mackey.is_none() && r.algebra.is_none());
}

#[test]
fn seed_order_and_subsets_are_stable() {
    let fig = Figure8::load().unwrap();
    let base = PipelineConfig { with_h1: false, ..PipelineConfig::default() };
    let all = run_figure8(&fig, &PipelineConfig { seeds: vec![5, 2, 9], ..base.clone() }).unwrap();
    let one = run_figure8(&fig, &PipelineConfig { seeds: vec![2], ..base }).unwrap();
    assert_eq!(all.seeds.iter().map(|s| s.seed).collect::<Vec<_>>(), [5, 2, 9]);
    assert_eq!(all.seeds[1], one.seeds[0]);
}

#[test]
fn cohomology_at_induced_points_is_conclusive() {
    let fig = Figure8::load().unwrap();
    let cfg = PipelineConfig { seeds: vec![0, 1, 2], ..PipelineConfig::default() };
    let report = run_figure8(&fig, &cfg).unwrap();
    for s in &report.seeds {
        let h = s.h1.as_ref().unwrap();
        assert!(h.conclusive);
        assert_eq!(h.dim_h0, 0);
        assert_eq!(h.dim_b1, 99);
        // Frozen from the first run of this pipeline.
        assert_eq!(h.dim_h1, 9);
    }
}
