mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotrep_core::analysis::{algebra_dimension, character, commutant_dimension, WordSample};
use knotrep_core::cohomology::{character_jacobian_rank, h1_dimension};
use knotrep_core::coset::CosetTable;
use knotrep_core::figure8::{bundle_files, emit_bundle, run_figure8, verify_bundle, Figure8, PipelineConfig, SeedStatus};
use knotrep_core::io::{read_json, write_json, MatrixRepFile, PermRepFile, PresentationFile, SubgroupFile};
use knotrep_core::presentation::{two_bridge_presentation, two_bridge_sa_form, TwoBridgeParams};
use knotrep_core::rep::{induce, random_sl_pair};
use knotrep_core::schreier::SubgroupPresentation;
use knotrep_core::{Error, Result};
use serde::Serialize;

use config::{write_report, RunConfig};

#[derive(Parser)]
#[command(name = "knotrep", version, about = "Knot group presentations, induced representations and their character varieties")]
struct Cli {
    /// 0 prints only the verdict, 2 adds per-item detail.
    #[arg(long, global = true, default_value_t = 1)]
    verbosity: u8,
    /// Write a JSON report with the full run configuration.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    /// Generators `s`, `t`.
    St,
    /// Generators `s`, `a = t s⁻¹`.
    Sa,
}

#[derive(Args, Clone, Copy)]
struct SampleArgs {
    /// Include every reduced word up to this length.
    #[arg(long, default_value_t = 3)]
    l0: usize,
    /// Number of additional random words.
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 0)]
    sample_seed: u64,
}

impl SampleArgs {
    fn sample(self) -> WordSample {
        WordSample { l0: self.l0, count: self.count, max_len: self.max_len, seed: self.sample_seed }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Presentation of the two-bridge knot group b(alpha, beta).
    TwoBridge {
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long, value_enum, default_value = "st")]
        form: Form,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reidemeister–Schreier presentation of a point stabilizer or kernel.
    Subgroup {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        permrep: PathBuf,
        #[arg(long, conflicts_with = "kernel", required_unless_present = "kernel")]
        point: Option<usize>,
        #[arg(long)]
        kernel: bool,
        /// Generator name prefix; defaults to `y` for stabilizers and `z` for kernels.
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Induce a representation of a subgroup to the parent group.
    Induce {
        #[arg(long)]
        subgroup: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the relations of a matrix representation.
    Verify {
        #[arg(long)]
        rep: PathBuf,
        /// Defaults to the tolerance stored with the representation.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Commutant and matrix-algebra dimensions of a representation.
    Analyze {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        commutant: bool,
        /// Maximal word length for the algebra span.
        #[arg(long, num_args = 0..=1, default_missing_value = "8")]
        algebra_dim: Option<usize>,
        /// Also print traces on a word sample.
        #[arg(long)]
        characters: bool,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Twisted cohomology dimensions with adjoint coefficients.
    H1 {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Rank of the figure-eight induced character map at a random point.
    JacobianRank {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-5)]
        step: f64,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Seeded figure-eight induced-representation pipeline.
    Figure8 {
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Number of consecutive seeds starting at --seed-base.
        #[arg(long, default_value_t = 20)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        seed_base: u64,
        /// Explicit seeds; overrides --seeds and --seed-base.
        #[arg(long, value_delimiter = ',')]
        seed_list: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Skip the cohomology computation.
        #[arg(long)]
        no_h1: bool,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Recompute the figure-eight bundle and diff it against stored data.
    BundleVerify {
        /// Bundle directory; the embedded copy is used when absent.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Write a freshly recomputed bundle here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

struct Outcome<T: Serialize> {
    config: RunConfig,
    passed: bool,
    result: T,
}

fn finish<T: Serialize>(report: Option<&Path>, o: Outcome<T>) -> Result<bool> {
    if let Some(path) = report {
        write_report(path, &o.config, o.passed, &o.result)?;
    }
    Ok(o.passed)
}

fn emit<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    match out {
        Some(path) => write_json(path, value),
        None => {
            println!("{}", serde_json::to_string_pretty(value)?);
            Ok(())
        }
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<bool> {
    let v = cli.verbosity;
    let report = cli.report.as_deref();
    match cli.command {
        Command::TwoBridge { alpha, beta, form, out } => {
            let params = TwoBridgeParams::new(alpha, beta)?;
            let p = match form {
                Form::St => two_bridge_presentation(params),
                Form::Sa => two_bridge_sa_form(params),
            };
            let file = PresentationFile::from_presentation(&p);
            emit(out.as_deref(), &file)?;
            if v >= 1 && out.is_some() {
                println!("b({alpha}, {beta}): relator {}", file.relators[0]);
            }
            let mut config = RunConfig::new("two-bridge", v);
            config.output = out.map(|o| o.display().to_string());
            finish(report, Outcome { config, passed: true, result: file })
        }
        Command::Subgroup { presentation, permrep, point, kernel, prefix, out } => {
            let config = RunConfig { output: out.as_ref().map(|o| o.display().to_string()), ..RunConfig::new("subgroup", v) }
                .input("presentation", &presentation)
                .input("permrep", &permrep);
            let p = read_json::<PresentationFile>(&presentation)?.to_presentation()?;
            let rep = read_json::<PermRepFile>(&permrep)?.to_perm_rep(&p)?;
            let (table, default_prefix) = match (point, kernel) {
                (Some(pt), false) => (CosetTable::stabilizer(&rep, pt)?, "y"),
                _ => (CosetTable::kernel(&rep)?, "z"),
            };
            let sub = SubgroupPresentation::new(table, prefix.as_deref().unwrap_or(default_prefix))?;
            sub.verify_round_trip()?;
            let file = SubgroupFile::from_subgroup(&sub);
            emit(out.as_deref(), &file)?;
            if v >= 1 && out.is_some() {
                println!(
                    "index {}, {} generators, {} relators",
                    sub.index(),
                    sub.generators().len(),
                    sub.relators().len()
                );
                if v >= 2 {
                    for r in &file.relators {
                        println!("  {r}");
                    }
                }
            }
            finish(report, Outcome { config, passed: true, result: file })
        }
        Command::Induce { subgroup, rep, out } => {
            let config = RunConfig { output: out.as_ref().map(|o| o.display().to_string()), ..RunConfig::new("induce", v) }
                .input("subgroup", &subgroup)
                .input("rep", &rep);
            let sub = read_json::<SubgroupFile>(&subgroup)?.load()?;
            let alpha = read_json::<MatrixRepFile>(&rep)?.load()?;
            if alpha.presentation() != sub.presentation() {
                return Err(Error::PresentationMismatch);
            }
            let rho = induce(&alpha, &sub)?;
            let residual = rho.verify_relations();
            let passed = residual <= rho.tol();
            emit(out.as_deref(), &MatrixRepFile::from_rep(&rho, false))?;
            if v >= 1 && out.is_some() {
                println!("induced dimension {}, relation residual {residual:.3e}: {}", rho.n(), verdict(passed));
            }
            finish(report, Outcome { config, passed, result: serde_json::json!({ "n": rho.n(), "residual": residual }) })
        }
        Command::Verify { rep, tol } => {
            let config = RunConfig { tol, ..RunConfig::new("verify", v) }.input("rep", &rep);
            config.validate()?;
            let r = read_json::<MatrixRepFile>(&rep)?.load_unchecked()?;
            let tol = tol.unwrap_or(r.tol());
            let residual = r.verify_relations();
            let det = r.det_defect();
            let passed = residual <= tol;
            println!("relation residual {residual:.3e} (tol {tol:.1e}), det defect {det:.3e}: {}", verdict(passed));
            finish(report, Outcome { config, passed, result: serde_json::json!({ "residual": residual, "det_defect": det }) })
        }
        Command::Analyze { rep, commutant, algebra_dim, characters, sample } => {
            let config = RunConfig { sample: characters.then(|| sample.sample()), ..RunConfig::new("analyze", v) }
                .input("rep", &rep);
            config.validate()?;
            let r = read_json::<MatrixRepFile>(&rep)?.load()?;
            let both = !commutant && algebra_dim.is_none() && !characters;
            let mut result = serde_json::Map::new();
            if commutant || both {
                let c = commutant_dimension(r.images());
                println!("commutant dimension {}", c.dimension);
                result.insert("commutant".into(), serde_json::to_value(c)?);
            }
            if algebra_dim.is_some() || both {
                let a = algebra_dimension(r.images(), algebra_dim.unwrap_or(8));
                println!("algebra dimension {} of {}", a.dimension, r.n() * r.n());
                result.insert("algebra".into(), serde_json::to_value(a)?);
            }
            if characters {
                let chi = character(&r, &sample.sample().words(r.alphabet())?)?;
                let rows: Vec<(String, [f64; 2])> =
                    chi.words.iter().zip(&chi.traces).map(|(w, t)| (r.presentation().format_word(w), [t.re, t.im])).collect();
                if v >= 2 {
                    for (w, t) in &rows {
                        println!("  tr {w} = {} {:+}i", t[0], t[1]);
                    }
                }
                println!("{} traces", rows.len());
                result.insert("characters".into(), serde_json::to_value(rows)?);
            }
            finish(report, Outcome { config, passed: true, result })
        }
        Command::H1 { rep } => {
            let config = RunConfig::new("h1", v).input("rep", &rep);
            let r = read_json::<MatrixRepFile>(&rep)?.load()?;
            let d = h1_dimension(&r)?;
            println!(
                "Z1 {} B1 {} H0 {} H1 {}{}",
                d.dim_z1,
                d.dim_b1,
                d.dim_h0,
                d.dim_h1,
                if d.conclusive { "" } else { " (rank gap inconclusive)" }
            );
            finish(report, Outcome { config, passed: d.conclusive, result: d })
        }
        Command::JacobianRank { m, seed, step, sample } => {
            let config = RunConfig {
                m: Some(m),
                seeds: Some(vec![seed]),
                sample: Some(sample.sample()),
                ..RunConfig::new("jacobian-rank", v)
            };
            config.validate()?;
            if m < 2 || !(step > 0.0 && step < 1.0) {
                return Err(Error::Invalid("need m >= 2 and a step in (0, 1)".into()));
            }
            let fig = Figure8::load()?;
            let words = sample.sample().words(fig.sa.alphabet())?;
            let (a, b) = random_sl_pair(m, seed)?;
            let f = |x: &_, y: &_| Ok(character(&fig.induced(x, y)?, &words)?.traces);
            let j = character_jacobian_rank(f, &a, &b, step)?;
            let target = m * m - 1;
            let passed = j.value() >= target && j.rank.conclusive;
            println!(
                "rank {} of {} directions, target {target}, gap {:.2e}: {}",
                j.value(),
                j.columns,
                j.rank.gap().unwrap_or(f64::NAN),
                verdict(passed)
            );
            finish(report, Outcome { config, passed, result: j })
        }
        Command::Figure8 { m, seeds, seed_base, seed_list, tol, no_h1, sample } => {
            let seeds: Vec<u64> = seed_list.unwrap_or_else(|| (0..seeds as u64).map(|i| seed_base + i).collect());
            let config = RunConfig {
                m: Some(m),
                seeds: Some(seeds.clone()),
                tol: Some(tol),
                sample: Some(sample.sample()),
                output: report.map(|p| p.display().to_string()),
                ..RunConfig::new("figure8", v)
            };
            config.validate()?;
            let fig = Figure8::load()?;
            let pc = PipelineConfig {
                m,
                seeds,
                tol,
                g_sample: sample.sample(),
                n_sample: WordSample { l0: 1, ..sample.sample() },
                with_h1: !no_h1,
                verbosity: v,
                ..PipelineConfig::default()
            };
            let start = Instant::now();
            let out = run_figure8(&fig, &pc)?;
            if v >= 1 {
                for s in &out.seeds {
                    let status = match s.status {
                        SeedStatus::Pass => "pass",
                        SeedStatus::Inconclusive => "inconclusive",
                        SeedStatus::Fail => "FAIL",
                    };
                    print!("seed {:>4}: {status:<12}", s.seed);
                    if let (Some(rs), Some(alg), Some(j)) = (s.relation_residual_st, &s.algebra, &s.jacobian) {
                        print!(" residual {rs:.1e}  algebra {}  jacobian {}", alg.dimension, j.value());
                    }
                    if let Some(h) = &s.h1 {
                        print!("  H1 {}", h.dim_h1);
                    }
                    println!();
                    if let Some(e) = &s.error {
                        println!("           {e}");
                    }
                    if v >= 2 {
                        for (k, ok) in &s.checks {
                            println!("           {k}: {}", verdict(*ok));
                        }
                    }
                }
            }
            println!(
                "{} passed, {} inconclusive, {} failed in {:.1} s",
                out.passed,
                out.inconclusive,
                out.failed,
                start.elapsed().as_secs_f64()
            );
            let passed = out.all_passed();
            finish(report, Outcome { config, passed, result: out })
        }
        Command::BundleVerify { dir, emit: emit_dir } => {
            let mut config = RunConfig::new("bundle-verify", v);
            if let Some(d) = &dir {
                config = config.input("dir", d);
            }
            config.output = emit_dir.as_ref().map(|o| o.display().to_string());
            let start = Instant::now();
            let files = bundle_files(dir.as_deref())?;
            let list = verify_bundle(&files)?;
            for item in &list.items {
                if v >= 1 || !item.passed {
                    println!("{:<20} {}  {}", item.name, verdict(item.passed), if v >= 2 { &item.detail } else { "" });
                }
            }
            if list.rotation_fallback {
                println!("relators matched only up to rotation");
            }
            println!("{} in {:.3} s", verdict(list.passed()), start.elapsed().as_secs_f64());
            if let Some(d) = &emit_dir {
                emit_bundle(d)?;
            }
            let passed = list.passed() && !list.rotation_fallback;
            finish(report, Outcome { config, passed, result: list })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
