//! The figure-eight knot group `b(5, 3)`: checked-in reference data and the
//! seeded induced-representation pipeline.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    algebra_dimension, commutant_dimension, character, mackey_check_figure8, res_ind_character_identity,
    AlgebraDimension, ResIndReport, WordSample,
};
use crate::cohomology::{character_jacobian_rank, h1_dimension, DimReport, JacobianReport};
use crate::coset::{dihedral_rep, CosetTable, PermRep};
use crate::error::{Error, Result};
use crate::io::{
    matrix_to_data, write_json, MatrixData, PermRepFile, PresentationFile, QuotientFile, SubgroupFile,
};
use crate::linalg::{self, CMat};
use crate::presentation::{two_bridge_presentation, two_bridge_sa_form, Presentation, TwoBridgeParams};
use crate::rep::{self, induce, pullback, random_sl_pair, MatrixRep, RewritingRep};
use crate::schreier::{FreeQuotient, SubgroupPresentation};
use crate::words::Word;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const FILES: [&str; 7] = [
    "presentation_st.json",
    "presentation_sa.json",
    "delta.json",
    "subgroup_h.json",
    "subgroup_n.json",
    "psi.json",
    "expected.json",
];

const EMBEDDED: [&str; 7] = [
    include_str!("../bundle/figure8/presentation_st.json"),
    include_str!("../bundle/figure8/presentation_sa.json"),
    include_str!("../bundle/figure8/delta.json"),
    include_str!("../bundle/figure8/subgroup_h.json"),
    include_str!("../bundle/figure8/subgroup_n.json"),
    include_str!("../bundle/figure8/psi.json"),
    include_str!("../bundle/figure8/expected.json"),
];

/// Block of an induced generator image, 1-based: `(row, column, label)` with
/// label `I`, `A` or `B`.
pub type BlockEntry = (usize, usize, String);

/// Hand-entered reference values for the figure-eight computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceData {
    pub alpha: i64,
    pub beta: i64,
    /// Two sides of the single relation in `⟨s, t⟩`.
    pub relation_st: [String; 2],
    pub relator_sa: String,
    pub a_in_st: String,
    pub delta: BTreeMap<String, String>,
    pub transversal: Vec<String>,
    pub generators: Vec<(String, String)>,
    pub relators: Vec<String>,
    pub kernel_index: usize,
    pub kernel_generators_in_h: Vec<String>,
    pub rho_s: Vec<BlockEntry>,
    pub rho_t: Vec<BlockEntry>,
}

/// The bundle as stored on disk.
#[derive(Clone, Debug, PartialEq)]
pub struct BundleFiles {
    pub presentation_st: PresentationFile,
    pub presentation_sa: PresentationFile,
    pub delta: PermRepFile,
    pub subgroup_h: SubgroupFile,
    pub subgroup_n: SubgroupFile,
    pub psi: QuotientFile,
    pub expected: ReferenceData,
}

impl BundleFiles {
    fn parse(texts: &[String; 7]) -> Result<Self> {
        let ctx = |i: usize| move |e: serde_json::Error| Error::Bundle(format!("{}: {e}", FILES[i]));
        Ok(BundleFiles {
            presentation_st: serde_json::from_str(&texts[0]).map_err(ctx(0))?,
            presentation_sa: serde_json::from_str(&texts[1]).map_err(ctx(1))?,
            delta: serde_json::from_str(&texts[2]).map_err(ctx(2))?,
            subgroup_h: serde_json::from_str(&texts[3]).map_err(ctx(3))?,
            subgroup_n: serde_json::from_str(&texts[4]).map_err(ctx(4))?,
            psi: serde_json::from_str(&texts[5]).map_err(ctx(5))?,
            expected: serde_json::from_str(&texts[6]).map_err(ctx(6))?,
        })
    }

    /// The copy compiled into the library.
    pub fn embedded() -> Result<Self> {
        BundleFiles::parse(&EMBEDDED.map(String::from))
    }

    pub fn read_dir(dir: &Path) -> Result<Self> {
        let mut texts: [String; 7] = Default::default();
        for (t, name) in texts.iter_mut().zip(FILES) {
            *t = std::fs::read_to_string(dir.join(name))?;
        }
        BundleFiles::parse(&texts)
    }

    pub fn write_dir(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        write_json(&dir.join(FILES[0]), &self.presentation_st)?;
        write_json(&dir.join(FILES[1]), &self.presentation_sa)?;
        write_json(&dir.join(FILES[2]), &self.delta)?;
        write_json(&dir.join(FILES[3]), &self.subgroup_h)?;
        write_json(&dir.join(FILES[4]), &self.subgroup_n)?;
        write_json(&dir.join(FILES[5]), &self.psi)?;
        write_json(&dir.join(FILES[6]), &self.expected)?;
        Ok(())
    }

    /// Recomputes every derived file from `(α, β)`; the quotient map and the
    /// reference values are taken from `data`.
    pub fn recompute(data: &ReferenceData, psi: &QuotientFile) -> Result<Self> {
        let params = TwoBridgeParams::new(data.alpha, data.beta)?;
        let st = two_bridge_presentation(params);
        let sa = two_bridge_sa_form(params);
        let delta = dihedral_rep(&sa, data.alpha as usize)?;
        let h = SubgroupPresentation::new(CosetTable::stabilizer(&delta, 1)?, "y")?;
        let n = SubgroupPresentation::new(CosetTable::kernel(&delta)?, "z")?;
        let psi_map = psi.load(h.presentation())?;
        Ok(BundleFiles {
            presentation_st: PresentationFile::from_presentation(&st),
            presentation_sa: PresentationFile::from_presentation(&sa),
            delta: PermRepFile::from_perm_rep(&delta),
            subgroup_h: SubgroupFile::from_subgroup(&h),
            subgroup_n: SubgroupFile::from_subgroup(&n),
            psi: QuotientFile::from_quotient(h.presentation(), &psi_map),
            expected: data.clone(),
        })
    }
}

/// Loaded and verified figure-eight data.
#[derive(Clone, Debug)]
pub struct Figure8 {
    pub st: Presentation,
    pub sa: Presentation,
    pub delta: PermRep,
    pub h: SubgroupPresentation,
    /// `Ker δ` with its index-ten table in the knot group.
    pub n: SubgroupPresentation,
    /// `Ker δ` as an index-two subgroup of `H`.
    pub n_in_h: SubgroupPresentation,
    pub psi: FreeQuotient,
    pub reference: ReferenceData,
}

impl Figure8 {
    /// Loads the embedded bundle, re-verifying every component.
    pub fn load() -> Result<Self> {
        Figure8::from_files(&BundleFiles::embedded()?)
    }

    pub fn from_files(files: &BundleFiles) -> Result<Self> {
        let st = files.presentation_st.to_presentation()?;
        let sa = files.presentation_sa.to_presentation()?;
        let delta = files.delta.to_perm_rep(&sa)?;
        let h = files.subgroup_h.load()?;
        let n = files.subgroup_n.load()?;
        for (name, sub) in [("subgroup_h", &h), ("subgroup_n", &n)] {
            if *sub.parent() != sa || sub.table().perm_rep().images() != delta.images() {
                return Err(Error::Bundle(format!("{name} is not built on the stored presentation and δ")));
            }
        }
        let psi = files.psi.load(h.presentation())?;
        let n_in_h = kernel_in_subgroup(&h, &delta)?;
        Ok(Figure8 { st, sa, delta, h, n, n_in_h, psi, reference: files.expected.clone() })
    }

    pub fn alpha(&self, a: &CMat, b: &CMat) -> Result<MatrixRep> {
        crate::analysis::alpha_from_pair(&self.h, &self.psi, a, b)
    }

    /// `ind_H^G (β∘ψ)` on the `⟨s, a⟩` presentation.
    pub fn induced(&self, a: &CMat, b: &CMat) -> Result<MatrixRep> {
        induce(&self.alpha(a, b)?, &self.h)
    }

    /// Transports a representation of the `⟨s, a⟩` form to `⟨s, t⟩` via `t = a s`.
    pub fn to_st(&self, rho: &MatrixRep) -> Result<MatrixRep> {
        let images = [self.sa.parse_word("s")?, self.sa.parse_word("a s")?];
        pullback(rho, self.st.clone(), &images)
    }

    /// Largest entrywise deviation of `ρ(s)`, `ρ(t)` from the reference block layout.
    pub fn pattern_deviation(&self, rho_st: &MatrixRep, a: &CMat, b: &CMat) -> f64 {
        let m = a.nrows();
        let k = self.h.index();
        let label = |l: &str| match l {
            "A" => a.clone(),
            "B" => b.clone(),
            _ => linalg::identity(m),
        };
        let mut worst: f64 = 0.0;
        for (img, pattern) in rho_st.images().iter().zip([&self.reference.rho_s, &self.reference.rho_t]) {
            let mut expected = CMat::zeros(k * m, k * m);
            for (r, c, l) in pattern {
                expected.view_mut(((r - 1) * m, (c - 1) * m), (m, m)).copy_from(&label(l));
            }
            let dev = (img - expected).iter().map(|z| z.norm()).fold(0.0, f64::max);
            worst = worst.max(dev);
        }
        worst
    }

    /// Parent words lying in `N`: the sample taken in `N`'s generators, expanded.
    pub fn n_words(&self, sample: WordSample) -> Result<Vec<Word>> {
        sample
            .words(self.n.presentation().alphabet())?
            .iter()
            .map(|w| self.n.expand(w))
            .collect()
    }
}

/// `Ker δ ∩ H` presented through the Reidemeister–Schreier method inside `H`.
fn kernel_in_subgroup(h: &SubgroupPresentation, delta: &PermRep) -> Result<SubgroupPresentation> {
    let images = h.expansions().iter().map(|w| delta.eval(w)).collect();
    let rep = PermRep::new(h.presentation().clone(), images)?;
    SubgroupPresentation::new(CosetTable::kernel(&rep)?, "w")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checklist {
    pub items: Vec<CheckItem>,
    /// Some relator only matched up to rotation or inversion.
    pub rotation_fallback: bool,
}

impl Checklist {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed, detail: detail.into() });
    }
}

/// Recomputes the bundle from `(α, β)` and compares it with `files`.
pub fn verify_bundle(files: &BundleFiles) -> Result<Checklist> {
    let reference = &files.expected;
    let fresh = BundleFiles::recompute(reference, &files.psi)?;
    let fig = Figure8::from_files(&fresh)?;
    let mut out = Checklist { items: vec![], rotation_fallback: false };

    let lhs = fig.st.parse_word(&reference.relation_st[0])?;
    let rhs = fig.st.parse_word(&reference.relation_st[1])?;
    let st_ok = fig.st.relators() == [lhs.multiply(&rhs.inverse())];
    out.push("presentation_st", st_ok, fig.st.format_word(&fig.st.relators()[0]));
    let sa_rel = fig.sa.format_word(&fig.sa.relators()[0]);
    let a_ok = fig.st.parse_word(&reference.a_in_st)? == fig.st.parse_word("t s^-1")?;
    out.push("presentation_sa", sa_rel == reference.relator_sa && a_ok, sa_rel);

    let delta_ok = fresh.delta.images == reference.delta;
    out.push("dihedral", delta_ok, format!("{:?}", fresh.delta.images));

    let transversal = &fresh.subgroup_h.transversal;
    out.push("transversal", *transversal == reference.transversal, transversal.join(", "));

    let gens: Vec<(String, String)> =
        fresh.subgroup_h.generators.iter().map(|g| (g.name.clone(), g.expansion.clone())).collect();
    let count_ok = gens.len() == fig.h.index() * fig.sa.num_generators() - fig.h.index() + 1;
    out.push("schreier_generators", gens == reference.generators && count_ok, format!("{} generators", gens.len()));

    let mut exact = fresh.subgroup_h.relators.len() == reference.relators.len();
    let mut detail = Vec::new();
    for (got, want) in fresh.subgroup_h.relators.iter().zip(&reference.relators) {
        if got != want {
            exact = false;
            let g = fig.h.presentation().parse_word(got)?;
            let w = fig.h.presentation().parse_word(want)?;
            if g.is_rotation_or_inverse_of(&w) {
                out.rotation_fallback = true;
                detail.push(format!("{got} matches {want} only up to rotation"));
            } else {
                detail.push(format!("{got} != {want}"));
            }
        }
    }
    out.push("relators", exact, if detail.is_empty() { "exact".to_string() } else { detail.join("; ") });

    let rt = fig.h.verify_round_trip().and(fig.n.verify_round_trip());
    out.push("round_trip", rt.is_ok(), rt.err().map_or("exact".into(), |e| e.to_string()));

    let killed = fig
        .h
        .relators()
        .iter()
        .filter(|r| fig.psi.apply(r).is_ok_and(|w| w.is_identity()))
        .count();
    out.push(
        "quotient",
        killed == fig.h.relators().len() && fig.psi.certified_surjective(),
        format!("{killed}/{} relators killed", fig.h.relators().len()),
    );

    let in_h: Vec<String> = fig
        .n_in_h
        .expansions()
        .iter()
        .map(|w| fig.h.presentation().format_word(w))
        .collect();
    let in_kernel = fig
        .n_in_h
        .expansions()
        .iter()
        .all(|w| fig.h.expand(w).is_ok_and(|g| fig.delta.in_kernel(&g)));
    out.push(
        "kernel_generators",
        in_h == reference.kernel_generators_in_h && in_kernel && fig.n_in_h.index() == 2,
        in_h.join(", "),
    );

    let n_ok = fig.n.index() == reference.kernel_index
        && fig.n.expansions().iter().all(|w| fig.delta.in_kernel(w))
        && fig.n.is_normal();
    out.push("kernel", n_ok, format!("index {}", fig.n.index()));

    let mut diffs = Vec::new();
    for (name, same) in [
        (FILES[0], fresh.presentation_st == files.presentation_st),
        (FILES[1], fresh.presentation_sa == files.presentation_sa),
        (FILES[2], fresh.delta == files.delta),
        (FILES[3], fresh.subgroup_h == files.subgroup_h),
        (FILES[4], fresh.subgroup_n == files.subgroup_n),
        (FILES[5], fresh.psi == files.psi),
    ] {
        if !same {
            diffs.push(name);
        }
    }
    out.push("files", diffs.is_empty(), if diffs.is_empty() { "no diffs".into() } else { diffs.join(", ") });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub m: usize,
    pub seeds: Vec<u64>,
    /// Relation residual tolerance for the induced representation.
    pub tol: f64,
    pub pattern_tol: f64,
    pub det_tol: f64,
    pub res_ind_tol: f64,
    pub algebra_max_len: usize,
    /// Words in the knot group for the character Jacobian.
    pub g_sample: WordSample,
    /// Words in the generators of `N` for character identities.
    pub n_sample: WordSample,
    pub jacobian_step: f64,
    pub with_h1: bool,
    pub verbosity: u8,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            m: 2,
            seeds: (0..20).collect(),
            tol: 1e-9,
            pattern_tol: 1e-12,
            det_tol: 1e-10,
            res_ind_tol: 1e-8,
            algebra_max_len: 8,
            g_sample: WordSample::default(),
            n_sample: WordSample { l0: 1, count: 50, max_len: 12, seed: 0 },
            jacobian_step: 1e-5,
            with_h1: true,
            verbosity: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MackeySummary {
    pub witness_residuals: [f64; 3],
    pub witnesses_nontrivial: bool,
    pub separated_by_characters: [bool; 2],
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<[MatrixData; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedStatus {
    Pass,
    /// Only rank gaps were unclear; nothing contradicted the expected values.
    Inconclusive,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedReport {
    pub seed: u64,
    pub input_algebra_dimension: usize,
    pub relation_residual_sa: Option<f64>,
    pub relation_residual_st: Option<f64>,
    pub pattern_deviation: Option<f64>,
    pub det_defect: Option<f64>,
    pub mackey: Option<MackeySummary>,
    pub algebra: Option<AlgebraDimension>,
    pub commutant_dimension: Option<usize>,
    pub res_ind: Option<ResIndReport>,
    pub jacobian: Option<JacobianReport>,
    pub h1: Option<DimReport>,
    pub checks: BTreeMap<String, bool>,
    pub error: Option<String>,
    pub status: SeedStatus,
}

impl SeedReport {
    fn new(seed: u64) -> Self {
        SeedReport {
            seed,
            input_algebra_dimension: 0,
            relation_residual_sa: None,
            relation_residual_st: None,
            pattern_deviation: None,
            det_defect: None,
            mackey: None,
            algebra: None,
            commutant_dimension: None,
            res_ind: None,
            jacobian: None,
            h1: None,
            checks: BTreeMap::new(),
            error: None,
            status: SeedStatus::Fail,
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.into(), ok);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub tool_version: String,
    pub config: PipelineConfig,
    pub seeds: Vec<SeedReport>,
    pub passed: usize,
    pub inconclusive: usize,
    pub failed: usize,
}

impl PipelineReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0
    }
}

/// Runs the induced-representation pipeline for every seed, in parallel;
/// the report lists seeds in the configured order.
pub fn run_figure8(fig: &Figure8, cfg: &PipelineConfig) -> Result<PipelineReport> {
    if cfg.m < 2 || !cfg.m.is_multiple_of(2) {
        return Err(Error::Invalid(format!("m must be even and at least 2, got {}", cfg.m)));
    }
    let g_words = cfg.g_sample.words(fig.sa.alphabet())?;
    let n_words = fig.n_words(cfg.n_sample)?;
    let seeds: Vec<SeedReport> = cfg
        .seeds
        .par_iter()
        .map(|&seed| match random_sl_pair(cfg.m, seed) {
            Ok((a, b)) => run_pair(fig, cfg, seed, &a, &b, &g_words, &n_words),
            Err(e) => {
                let mut r = SeedReport::new(seed);
                r.error = Some(e.to_string());
                r
            }
        })
        .collect();
    let count = |s: SeedStatus| seeds.iter().filter(|r| r.status == s).count();
    Ok(PipelineReport {
        tool_version: TOOL_VERSION.into(),
        config: cfg.clone(),
        passed: count(SeedStatus::Pass),
        inconclusive: count(SeedStatus::Inconclusive),
        failed: count(SeedStatus::Fail),
        seeds,
    })
}

/// Runs every stage for one pair `(A, B)`; stage errors are recorded, not raised.
pub fn run_pair(
    fig: &Figure8,
    cfg: &PipelineConfig,
    seed: u64,
    a: &CMat,
    b: &CMat,
    g_words: &[Word],
    n_words: &[Word],
) -> SeedReport {
    let mut r = SeedReport::new(seed);
    let m = a.nrows();
    r.input_algebra_dimension = algebra_dimension(&[a.clone(), b.clone()], 2 * m * m).dimension;
    let gate = r.input_algebra_dimension == m * m;
    r.check("input_irreducible", gate);
    if !gate {
        r.error = Some(Error::ReducibleInput("rejected before induction".into()).to_string());
        return r;
    }
    if let Err(e) = run_stages(fig, cfg, a, b, g_words, n_words, &mut r) {
        r.error = Some(e.to_string());
    }
    r.status = classify(&r);
    r
}

fn run_stages(
    fig: &Figure8,
    cfg: &PipelineConfig,
    a: &CMat,
    b: &CMat,
    g_words: &[Word],
    n_words: &[Word],
    r: &mut SeedReport,
) -> Result<()> {
    let m = a.nrows();
    let n = m * fig.h.index();
    let alpha = fig.alpha(a, b)?;
    let rho = induce(&alpha, &fig.h)?;
    let rho_st = fig.to_st(&rho)?;
    let res_sa = rho.verify_relations();
    let res_st = rho_st.verify_relations();
    r.relation_residual_sa = Some(res_sa);
    r.relation_residual_st = Some(res_st);
    r.check("relations", res_sa <= cfg.tol && res_st <= cfg.tol);
    let dev = fig.pattern_deviation(&rho_st, a, b);
    r.pattern_deviation = Some(dev);
    r.check("block_pattern", dev <= cfg.pattern_tol);
    let det = rho.det_defect().max(rho_st.det_defect());
    r.det_defect = Some(det);
    r.check("determinant", det <= cfg.det_tol);

    let v = mackey_check_figure8(&fig.h, &alpha, a, b, n_words)?;
    r.check("mackey", v.irreducible && v.witness_residuals.iter().all(|&x| x <= cfg.pattern_tol));
    r.mackey = Some(MackeySummary {
        witness_residuals: v.witness_residuals,
        witnesses_nontrivial: v.witnesses_nontrivial,
        separated_by_characters: v.separated_by_characters,
        irreducible: v.irreducible,
        witnesses: (cfg.verbosity >= 2).then(|| v.witnesses.each_ref().map(matrix_to_data)),
    });

    let ad = algebra_dimension(rho.images(), cfg.algebra_max_len);
    r.check("algebra_dimension", ad.dimension == n * n);
    r.algebra = Some(ad);
    let cd = commutant_dimension(rho.images()).dimension;
    r.check("commutant", cd == 1);
    r.commutant_dimension = Some(cd);

    let through = RewritingRep::new(&alpha, &fig.h)?;
    let alpha_n = rep::pullback(&through, fig.n.presentation().clone(), &fig.n.expansions())?;
    let ri = res_ind_character_identity(&alpha_n, &fig.n, n_words)?;
    r.check("res_ind", ri.max_scaled <= cfg.res_ind_tol);
    r.res_ind = Some(ri);

    let pipeline = |x: &CMat, y: &CMat| Ok(character(&fig.induced(x, y)?, g_words)?.traces);
    let jac = character_jacobian_rank(pipeline, a, b, cfg.jacobian_step)?;
    r.check("jacobian_rank", jac.value() >= m * m - 1);
    r.jacobian = Some(jac);

    if cfg.with_h1 {
        let h1 = h1_dimension(&rho)?;
        r.check("h1_lower_bound", h1.dim_h1 >= (m * m - 1) as i64);
        r.h1 = Some(h1);
    }
    Ok(())
}

fn classify(r: &SeedReport) -> SeedStatus {
    if r.error.is_some() {
        return SeedStatus::Fail;
    }
    let rank_checks = ["jacobian_rank", "h1_lower_bound"];
    let hard_fail = r.checks.iter().any(|(k, &ok)| !ok && !rank_checks.contains(&k.as_str()));
    if hard_fail {
        return SeedStatus::Fail;
    }
    let jac_conclusive = r.jacobian.as_ref().is_none_or(|j| j.rank.conclusive);
    let h1_conclusive = r.h1.as_ref().is_none_or(|h| h.conclusive);
    let rank_ok = rank_checks.iter().all(|k| r.checks.get(*k).copied().unwrap_or(true));
    match (rank_ok, jac_conclusive && h1_conclusive) {
        (true, true) => SeedStatus::Pass,
        (_, false) => SeedStatus::Inconclusive,
        (false, true) => SeedStatus::Fail,
    }
}

/// Reads a bundle directory, or the embedded copy when `dir` is `None`.
pub fn bundle_files(dir: Option<&Path>) -> Result<BundleFiles> {
    match dir {
        Some(d) => BundleFiles::read_dir(d),
        None => BundleFiles::embedded(),
    }
}

/// Writes a freshly recomputed bundle.
pub fn emit_bundle(dir: &Path) -> Result<()> {
    let reference: ReferenceData =
        serde_json::from_str(EMBEDDED[6]).map_err(|e| Error::Bundle(format!("{}: {e}", FILES[6])))?;
    let psi: QuotientFile =
        serde_json::from_str(EMBEDDED[5]).map_err(|e| Error::Bundle(format!("{}: {e}", FILES[5])))?;
    BundleFiles::recompute(&reference, &psi)?.write_dir(dir)
}
