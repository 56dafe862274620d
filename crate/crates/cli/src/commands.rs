//! Subcommands and the process entry point.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use lambda_kernel::cone::{check_cone_nerve, functors, nerve, pi0, FiniteCategory, SimplicialFunctor};
use lambda_kernel::dk::{
    binomial_i64, denormalize, denormalize_v, derived_lambda_with, embed_i_default, verify_e_conditions, Complex,
    FlagExterior, LevelBudget, Orientation,
};
use lambda_kernel::exact::{Integers, QPoly};
use lambda_kernel::lambda::{absolute_cohomology, verify_lambda_with, FilteredAlgebra, UniversalKind, WittRing};
use lambda_kernel::rep::{AbelianGroup, GroupRing, ZeroProductIdeal};
use num_bigint::BigInt;

use crate::acceptance;
use crate::cache::PolyCache;
use crate::error::{CliError, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use crate::formats::ring::{coordinates_by_terms, group_elements, Carrier, RingTask, SpecRing};
use crate::formats::{parse_category, parse_complex, parse_ring_spec, parse_sset, read_file, RingSpec, Source};
use crate::samples::{random_complex, ring_samples, rng, witt_samples, Stream};

/// Levels visited by `cone-check` and `pi0` when `--levels` is not given.
const DEFAULT_CONE_LEVELS: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "lambdak", version, about = "Exact λ-ring, Dold-Kan and simplicial-cone computations")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand. The seed determines every randomized check.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Truncation degree of power series.
    #[arg(long, global = true, default_value_t = 8)]
    pub degree: usize,
    /// Seed for generated samples.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Directory of the persistent universal-polynomial cache.
    #[arg(long, global = true, env = "LAMBDAK_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Level budget for simplicial constructions.
    #[arg(long, global = true)]
    pub levels: Option<usize>,
    /// Report cache activity on the error stream.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum PolyKind {
    P,
    Pkl,
    Q,
    Qkl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a universal polynomial.
    Upoly {
        #[arg(value_enum, ignore_case = true)]
        kind: PolyKind,
        indices: Vec<usize>,
    },
    /// Check the λ-ring axioms on seeded truncated Witt vectors over the integers.
    Witt {
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Check the λ-ring axioms on the ring of a specification file.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        /// Seeded samples added to those listed in the file.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Print the γ-filtration of a finite-dimensional λ-algebra.
    GammaFiltration {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        mmax: usize,
    },
    /// Print the graded pieces of every declared slot.
    AbsCohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        mmax: usize,
    },
    /// Derived exterior power of a complex, with its Euler characteristic check.
    DerivedLambda { file: PathBuf, k: usize },
    /// Basis of the exterior power of a flag, or a check of the flag conditions.
    FlagExterior {
        dims: Vec<usize>,
        /// Check the conditions on all flags within the bounds instead.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Normalization and totalization round trips on a file or on seeded complexes.
    DkRoundtrip {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 50)]
        two_sided: usize,
        /// Top simplicial level of denormalizations.
        #[arg(long, default_value_t = 4)]
        top: usize,
    },
    /// Compare cones of nerves with nerves of cones for every functor `A -> B`.
    ConeCheck { source: PathBuf, target: Option<PathBuf> },
    /// Connected components of a category or simplicial set file.
    Pi0 { file: PathBuf },
    /// Run acceptance criteria by number or name, or `all`.
    Acceptance {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Runs the command line `args` (program name first); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let cache = PolyCache::new(cli.config.cache_dir.clone());
    let mut text = String::new();
    let result = execute(&cli.command, &cli.config, &cache, &mut text);
    if cli.config.verbose > 0 {
        for e in cache.events() {
            let _ = writeln!(err, "{}", e);
        }
    }
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        let _ = writeln!(err, "cannot write output: {}", e);
        return EXIT_USAGE;
    }
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}

/// Writes the report to `out`; `Ok(false)` signals a mathematical failure.
fn execute(command: &Command, config: &RunConfig, cache: &PolyCache, out: &mut String) -> Result<bool, CliError> {
    match command {
        Command::Upoly { kind, indices } => upoly(*kind, indices, cache, out),
        Command::Witt { kmax, lmax, samples } => witt(config, *kmax, *lmax, *samples, cache, out),
        Command::Verify { file, kmax, lmax, samples } => {
            let spec = load_ring(file)?;
            let ring = spec.build()?;
            let task = VerifyTask { kmax: *kmax, lmax: *lmax, samples: *samples, seed: config.seed, cache, out };
            spec.dispatch(&ring, task)
        }
        Command::GammaFiltration { file, mmax } => {
            let spec = load_ring(file)?;
            let ring = spec.build()?;
            let a = spec.dispatch(&ring, FiltrationTask { mmax: *mmax })?;
            writeln!(out, "# gamma-filtration {} mmax={}", display(file), mmax).unwrap();
            writeln!(out, "basis: {}", a.labels().join(", ")).unwrap();
            out.push_str(&a.filtration_table());
            Ok(true)
        }
        Command::AbsCohomology { file, mmax } => abs_cohomology(file, *mmax, out),
        Command::DerivedLambda { file, k } => derived(file, *k, config, out),
        Command::FlagExterior { dims, check, max_dim, max_len } => flag_exterior(dims, *check, *max_dim, *max_len, out),
        Command::DkRoundtrip { file, count, two_sided, top } => {
            dk_roundtrip(file.as_deref(), *count, *two_sided, *top, config, out)
        }
        Command::ConeCheck { source, target } => cone_check(source, target.as_deref(), config, out),
        Command::Pi0 { file } => components(file, config, out),
        Command::Acceptance { suite } => {
            let selected = acceptance::select(suite)?;
            writeln!(out, "# acceptance suite={} seed={}", suite, config.seed).unwrap();
            let ctx = acceptance::Context { seed: config.seed, degree: config.degree, cache };
            let mut all = true;
            for c in selected {
                let outcome = c.run(&ctx);
                all &= outcome.passed;
                writeln!(out, "{}", acceptance::line(c, &outcome)).unwrap();
            }
            Ok(all)
        }
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

fn load_ring(path: &Path) -> Result<RingSpec, CliError> {
    let text = read_file(path)?;
    parse_ring_spec(&Source::new(&display(path), &text))
}

fn upoly(kind: PolyKind, indices: &[usize], cache: &PolyCache, out: &mut String) -> Result<bool, CliError> {
    let (kind, arity) = match kind {
        PolyKind::P => (UniversalKind::Product, 1),
        PolyKind::Pkl => (UniversalKind::Composite, 2),
        PolyKind::Q => (UniversalKind::GammaProduct, 1),
        PolyKind::Qkl => (UniversalKind::GammaComposite, 2),
    };
    if indices.len() != arity {
        return Err(CliError::Usage(format!("{} takes {} index(es), got {}", kind.tag(), arity, indices.len())));
    }
    let p = cache.get(kind, indices[0], indices.get(1).copied().unwrap_or(0))?;
    writeln!(out, "{}", p).unwrap();
    Ok(true)
}

fn witt(
    config: &RunConfig,
    kmax: usize,
    lmax: usize,
    count: usize,
    cache: &PolyCache,
    out: &mut String,
) -> Result<bool, CliError> {
    let ring = WittRing::new(Integers, config.degree);
    let samples = witt_samples(&ring, count, config.seed);
    let report = verify_lambda_with(&ring, &samples, kmax, lmax, cache)?;
    writeln!(out, "# witt degree={} kmax={} lmax={} samples={} seed={}", config.degree, kmax, lmax, count, config.seed)
        .unwrap();
    write!(out, "{}", report).unwrap();
    finish(out, report.passed())
}

fn finish(out: &mut String, passed: bool) -> Result<bool, CliError> {
    if !out.ends_with('\n') {
        out.push('\n');
    }
    writeln!(out, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    Ok(passed)
}

struct VerifyTask<'a> {
    kmax: usize,
    lmax: usize,
    samples: usize,
    seed: u64,
    cache: &'a PolyCache,
    out: &'a mut String,
}

impl RingTask for VerifyTask<'_> {
    type Output = bool;

    fn run<R: SpecRing>(self, ring: &R, spec: &RingSpec) -> Result<bool, CliError> {
        let mut xs = spec.parse_samples(ring)?;
        let listed = xs.len();
        xs.extend(ring_samples(ring, self.samples, self.seed)?);
        let report = verify_lambda_with(ring, &xs, self.kmax, self.lmax, self.cache)?;
        writeln!(
            self.out,
            "# verify {} kmax={} lmax={} listed={} samples={} seed={}",
            spec.path, self.kmax, self.lmax, listed, self.samples, self.seed
        )
        .unwrap();
        write!(self.out, "{}", report).unwrap();
        finish(self.out, report.passed())
    }
}

struct FiltrationTask {
    mmax: usize,
}

impl RingTask for FiltrationTask {
    type Output = FilteredAlgebra;

    fn run<R: SpecRing>(self, ring: &R, spec: &RingSpec) -> Result<FilteredAlgebra, CliError> {
        let basis = spec.parse_basis(ring)?;
        let psi_max = (basis.len() * (self.mmax + 1)).max(1);
        let a = FilteredAlgebra::from_ring(ring, &basis, |x| ring.coordinates(x, &basis), psi_max)?;
        Ok(a.gamma_filtration(self.mmax)?)
    }
}

/// The augmentation ideal of the rational group ring as a fiber over the integral group
/// ring, in the basis `g - 1` for `g ≠ 1`.
pub fn augmentation_slot(group: &AbelianGroup, slot: i64, mmax: usize) -> Result<FilteredAlgebra, CliError> {
    let elements = group_elements(group);
    let zring: GroupRing<BigInt> = GroupRing::new(group.clone());
    let zbasis = elements.iter().map(|g| zring.parse(g)).collect::<Result<Vec<_>, _>>()?;
    let psi_max = (elements.len() * (mmax + 1)).max(1);
    let base = FilteredAlgebra::from_ring(&zring, &zbasis, |x| zring.coordinates(x, &zbasis), psi_max)?;
    let ideal = ZeroProductIdeal::new(GroupRing::new(group.clone()));
    let qring = ideal.ambient();
    let mut terms: Vec<QPoly> = Vec::new();
    let mut fbasis: Vec<QPoly> = Vec::new();
    for g in elements.iter().filter(|g| g.as_str() != "1") {
        terms.push(qring.parse(g)?);
        fbasis.push(ideal.element(&qring.parse(&format!("{} - 1", g))?)?);
    }
    let fiber = FilteredAlgebra::fiber_slot(
        slot,
        base,
        &zring,
        &zbasis,
        &ideal,
        &fbasis,
        |x: &QPoly| coordinates_by_terms(x, &fbasis, &terms),
        psi_max,
    )?;
    Ok(fiber.gamma_filtration(mmax)?)
}

fn abs_cohomology(file: &Path, mmax: usize, out: &mut String) -> Result<bool, CliError> {
    let spec = load_ring(file)?;
    let ring = spec.build()?;
    let mut family: BTreeMap<i64, FilteredAlgebra> = BTreeMap::new();
    family.insert(0, spec.dispatch(&ring, FiltrationTask { mmax })?);
    for (n, at) in &spec.slots {
        let Carrier::Group(g) = &spec.carrier else {
            return Err(CliError::Parse {
                path: spec.path.clone(),
                line: at.line,
                col: at.col,
                msg: "fiber slots need `carrier group`".into(),
            });
        };
        family.insert(*n, augmentation_slot(g, *n, mmax)?);
    }
    writeln!(out, "# abs-cohomology {} mmax={}", display(file), mmax).unwrap();
    for (n, a) in &family {
        writeln!(out, "slot {}: {}", n, a.labels().join(", ")).unwrap();
        out.push_str(&a.filtration_table());
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    for n in family.keys() {
        for j in 0..mmax as i64 {
            let i = 2 * j - n;
            let piece = absolute_cohomology(&family, i, j)?;
            let group = if piece.dim() == 0 { "0".to_string() } else { format!("Q^{}", piece.dim()) };
            writeln!(out, "H^{}({}) = {}  [slot {}]", i, j, group, n).unwrap();
        }
    }
    Ok(true)
}

fn load_complex(path: &Path) -> Result<(Complex, Orientation), CliError> {
    let text = read_file(path)?;
    let f = parse_complex(&Source::new(&display(path), &text))?;
    Ok((f.complex, f.orientation))
}

fn derived(file: &Path, k: usize, config: &RunConfig, out: &mut String) -> Result<bool, CliError> {
    let (c, orientation) = load_complex(file)?;
    let budget = LevelBudget { max_level: config.levels, paranoid: false };
    let l = derived_lambda_with(k, &c, budget)?;
    let (chi, chi_k) = (c.euler_char(), l.euler_char());
    let expected = binomial_i64(chi, k);
    writeln!(out, "# derived-lambda {} k={}", display(file), k).unwrap();
    out.push_str(&l.homology_report(orientation));
    if !out.ends_with('\n') {
        out.push('\n');
    }
    writeln!(out, "chi(K) = {}", chi).unwrap();
    writeln!(out, "chi(L{}K) = {}", k, chi_k).unwrap();
    writeln!(out, "C(chi(K), {}) = {}", k, expected).unwrap();
    finish(out, chi_k == expected)
}

fn flag_exterior(
    dims: &[usize],
    check: bool,
    max_dim: usize,
    max_len: usize,
    out: &mut String,
) -> Result<bool, CliError> {
    if check {
        let report = verify_e_conditions(max_dim, max_len)?;
        writeln!(out, "# flag-exterior --check max-dim={} max-len={}", max_dim, max_len).unwrap();
        for (name, n) in &report.checked {
            writeln!(out, "{}: {} checked", name, n).unwrap();
        }
        for f in &report.failures {
            writeln!(out, "FAIL {}", f).unwrap();
        }
        return finish(out, report.passed());
    }
    if dims.is_empty() {
        return Err(CliError::Usage("flag-exterior needs dimensions, or --check".into()));
    }
    let f = FlagExterior::new(dims)?;
    writeln!(out, "rank = {}", f.rank()).unwrap();
    for i in 0..f.rank() {
        writeln!(out, "{}", f.basis_text(i)).unwrap();
    }
    Ok(true)
}

/// `(passed, checked)` for `N(DN(C)) = C` or its cosimplicial counterpart, and `Tot(N(i(C))) = C`.
pub fn roundtrip_one(c: &Complex, top: usize) -> Result<Vec<(&'static str, bool)>, CliError> {
    let mut checks = Vec::new();
    if c.hi() <= 0 {
        checks.push(("N(DN(C)) = C", denormalize(c, top)?.normalize() == *c));
    }
    if c.lo() >= 0 {
        checks.push(("N(DN'(C)) = C", denormalize_v(c, top)?.normalize() == *c));
    }
    checks.push(("Tot(N(i(C))) = C", embed_i_default(c)?.tot_normalized()? == *c));
    Ok(checks)
}

fn dk_roundtrip(
    file: Option<&Path>,
    count: usize,
    two_sided: usize,
    top: usize,
    config: &RunConfig,
    out: &mut String,
) -> Result<bool, CliError> {
    if let Some(path) = file {
        let (c, _) = load_complex(path)?;
        writeln!(out, "# dk-roundtrip {} top={}", display(path), top).unwrap();
        let checks = roundtrip_one(&c, top)?;
        for (name, ok) in &checks {
            writeln!(out, "{}: {}", name, if *ok { "ok" } else { "FAIL" }).unwrap();
        }
        return finish(out, checks.iter().all(|(_, ok)| *ok));
    }
    writeln!(out, "# dk-roundtrip count={} two-sided={} top={} seed={}", count, two_sided, top, config.seed).unwrap();
    let mut r = rng(config.seed, Stream::Complexes);
    let mut good = 0;
    for _ in 0..count {
        let c = random_complex(&mut r, -2, 0, 3, false);
        good += usize::from(denormalize(&c, top)?.normalize() == c);
    }
    writeln!(out, "N(DN(C)) = C: {}/{}", good, count).unwrap();
    let mut r = rng(config.seed, Stream::TwoSided);
    let mut good2 = 0;
    for _ in 0..two_sided {
        let c = random_complex(&mut r, -1, 1, 3, false);
        good2 += usize::from(embed_i_default(&c)?.tot_normalized()? == c);
    }
    writeln!(out, "Tot(N(i(C))) = C: {}/{}", good2, two_sided).unwrap();
    finish(out, good == count && good2 == two_sided)
}

fn load_category(path: &Path) -> Result<FiniteCategory, CliError> {
    let text = read_file(path)?;
    parse_category(&Source::new(&display(path), &text))
}

fn cone_check(source: &Path, target: Option<&Path>, config: &RunConfig, out: &mut String) -> Result<bool, CliError> {
    let s = load_category(source)?;
    let t = match target {
        Some(p) => load_category(p)?,
        None => s.clone(),
    };
    let top = config.levels.unwrap_or(DEFAULT_CONE_LEVELS);
    let all = functors(&s, &t);
    let mut failures = 0;
    for (i, g) in all.iter().enumerate() {
        let f = SimplicialFunctor::constant(g, &s, &t, top)?;
        if !check_cone_nerve(&f)? {
            failures += 1;
            writeln!(out, "FAIL functor {}", i).unwrap();
        }
    }
    writeln!(out, "# cone-check levels={} functors={}", top, all.len()).unwrap();
    writeln!(out, "{}", if failures == 0 { "OK" } else { "FAIL" }).unwrap();
    Ok(failures == 0)
}

fn components(file: &Path, config: &RunConfig, out: &mut String) -> Result<bool, CliError> {
    let text = read_file(file)?;
    let path = display(file);
    let src = Source::new(&path, &text);
    let is_category = src.lines().first().and_then(|l| l.words().next()) == Some("objects");
    let groups: Vec<Vec<String>> = if is_category {
        let c = parse_category(&src)?;
        let top = config.levels.unwrap_or(DEFAULT_CONE_LEVELS).max(1);
        pi0(&nerve(&c, top))?.into_iter().map(|g| g.into_iter().map(|v| c.objects()[v].clone()).collect()).collect()
    } else {
        let x = parse_sset(&src)?;
        pi0(&x)?.into_iter().map(|g| g.into_iter().map(|v| v.to_string()).collect()).collect()
    };
    writeln!(out, "components = {}", groups.len()).unwrap();
    for g in groups {
        writeln!(out, "{{{}}}", g.join(", ")).unwrap();
    }
    Ok(true)
}
