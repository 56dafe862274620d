//! The twelve acceptance criteria. Every comparison is exact equality of canonical forms,
//! integers or rational subspaces; randomized inputs come from the seeded streams.

use std::time::Duration;

use lambda_kernel::cone::{category_zoo, cone_nerve_grid};
use lambda_kernel::dk::{
    additivity_check, binomial_i64, denormalize, derived_lambda, embed_i_default, verify_e_conditions,
};
use lambda_kernel::exact::matrix::span_rank;
use lambda_kernel::exact::{
    decompose_symmetric, eval_poly, recompose, Block, IntMatrix, Integers, LaurentPoly, QPoly, Ring,
};
use lambda_kernel::lambda::{
    adams, adams_eigenspace, augment, verify_lambda_with, FilteredAlgebra, GeneratorLambda, LambdaRing, PresentedRing,
    UniversalKind, WittRing,
};
use lambda_kernel::rep::{
    substitute_classes, tensor_lambda_ring, AbelianGroup, GroupRing, MonoidRepRing, WeylAction, ZeroProductIdeal,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::cache::PolyCache;
use crate::error::CliError;
use crate::formats::ring::{coordinates_by_terms, SpecRing};
use crate::samples::{random_complex, random_split_flag, ring_samples, rng, witt_samples, Stream};

pub struct Context<'a> {
    pub seed: u64,
    /// Truncation degree of Witt vectors.
    pub degree: usize,
    pub cache: &'a PolyCache,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

type Check = fn(&Context<'_>) -> Result<Outcome, CliError>;

pub struct Criterion {
    pub number: usize,
    pub name: &'static str,
    /// How results are compared.
    pub tolerance: &'static str,
    /// Expected wall-clock time in an optimized build.
    pub budget: Duration,
    check: Check,
}

impl Criterion {
    /// Runs the check; an error counts as a failure and becomes the detail.
    pub fn run(&self, ctx: &Context<'_>) -> Outcome {
        (self.check)(ctx).unwrap_or_else(|e| Outcome::new(false, format!("error: {}", e)))
    }
}

const fn criterion(number: usize, name: &'static str, tolerance: &'static str, secs: u64, check: Check) -> Criterion {
    Criterion { number, name, tolerance, budget: Duration::from_secs(secs), check }
}

const EXACT: &str = "exact equality";
const SUBSPACES: &str = "exact equality of rational subspaces";

pub static CRITERIA: [Criterion; 12] = [
    criterion(1, "universal-polynomials", EXACT, 30, universal_polynomials),
    criterion(2, "witt-vectors", EXACT, 60, witt_vectors),
    criterion(3, "augmented-rings", EXACT, 30, augmented_rings),
    criterion(4, "adams-operations", EXACT, 20, adams_operations),
    criterion(5, "gamma-filtration", SUBSPACES, 5, gamma_filtration),
    criterion(6, "dold-kan-roundtrip", EXACT, 30, dold_kan_roundtrip),
    criterion(7, "derived-exterior-power", EXACT, 120, derived_exterior_power),
    criterion(8, "split-flag-additivity", EXACT, 60, split_flag_additivity),
    criterion(9, "flag-conditions", EXACT, 30, flag_conditions),
    criterion(10, "cone-nerve", EXACT, 60, cone_nerve),
    criterion(11, "representation-rings", EXACT, 20, representation_rings),
    criterion(12, "monoid-classes", EXACT, 20, monoid_classes),
];

/// Criteria by number or name; `all` selects every one.
pub fn select(suite: &str) -> Result<Vec<&'static Criterion>, CliError> {
    if suite == "all" {
        return Ok(CRITERIA.iter().collect());
    }
    CRITERIA
        .iter()
        .find(|c| c.name == suite || suite.parse::<usize>().ok() == Some(c.number))
        .map(|c| vec![c])
        .ok_or_else(|| {
            let names: Vec<&str> = CRITERIA.iter().map(|c| c.name).collect();
            CliError::Usage(format!("unknown suite {:?}; expected all, 1..12 or one of {}", suite, names.join(", ")))
        })
}

/// `PASS 01 name [tolerance]: detail`
pub fn line(c: &Criterion, outcome: &Outcome) -> String {
    format!(
        "{} {:02} {} [{}]: {}",
        if outcome.passed { "PASS" } else { "FAIL" },
        c.number,
        c.name,
        c.tolerance,
        outcome.detail
    )
}

fn free_group_ring(rank: usize) -> GroupRing<BigInt> {
    GroupRing::new(AbelianGroup::new(rank, Vec::new()).expect("a free group"))
}

/// `t_from + ... + t_to`, with every other line inverted so that both signs of exponents occur.
fn sum_of_lines(ring: &GroupRing<BigInt>, from: usize, to: usize) -> Result<LaurentPoly, CliError> {
    let text: Vec<String> =
        (from..=to).map(|i| if i % 2 == 0 { format!("t{}^-1", i) } else { format!("t{}", i) }).collect();
    Ok(ring.parse(&text.join(" + "))?)
}

fn evaluate<R: Ring>(ring: &R, p: &LaurentPoly, assign: impl Fn(&str) -> Option<R::Elem>) -> Result<R::Elem, CliError> {
    eval_poly(ring, p, assign).map_err(|e| CliError::Usage(format!("cannot evaluate a universal polynomial: {:?}", e)))
}

/// `λ^i` of `x` for `i = 1..=n`, indexed from zero.
fn lambdas<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<Vec<R::Elem>, CliError> {
    (1..=n).map(|i| ring.lambda(i, x).map_err(CliError::from)).collect()
}

fn indexed(name: &str, prefix: char) -> Option<usize> {
    name.strip_prefix(prefix)?.parse::<usize>().ok().filter(|&i| i >= 1)
}

fn universal_polynomials(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let mut checked = 0;
    for k in 1..=4 {
        let ring = free_group_ring(2 * k);
        let (x, y) = (sum_of_lines(&ring, 1, k)?, sum_of_lines(&ring, k + 1, 2 * k)?);
        let (e, f) = (lambdas(&ring, &x, k)?, lambdas(&ring, &y, k)?);
        let p = ctx.cache.get(UniversalKind::Product, k, 0)?;
        let value = evaluate(&ring, &p, |v| match v.as_bytes().first() {
            Some(b'e') => indexed(v, 'e').and_then(|i| e.get(i - 1).cloned()),
            Some(b'f') => indexed(v, 'f').and_then(|i| f.get(i - 1).cloned()),
            _ => None,
        })?;
        let direct = ring.lambda(k, &ring.mul(&x, &y))?;
        if value != direct {
            return Ok(Outcome::new(false, format!("P_{} disagrees with λ^{}(xy) for sums of {} lines", k, k, k)));
        }
        checked += 1;
    }
    for k in 1..=6 {
        for l in (1..=6).filter(|l| k * l <= 6) {
            let ring = free_group_ring(k * l);
            let x = sum_of_lines(&ring, 1, k * l)?;
            let e = lambdas(&ring, &x, k * l)?;
            let p = ctx.cache.get(UniversalKind::Composite, k, l)?;
            let value = evaluate(&ring, &p, |v| indexed(v, 'e').and_then(|i| e.get(i - 1).cloned()))?;
            let direct = ring.lambda(k, &ring.lambda(l, &x)?)?;
            if value != direct {
                return Ok(Outcome::new(false, format!("P_{{{},{}}} disagrees with λ^{}(λ^{}(x))", k, l, k, l)));
            }
            checked += 1;
        }
    }
    Ok(Outcome::new(true, format!("{} universal polynomials reproduce λ on sums of lines", checked)))
}

fn witt_vectors(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let ring = WittRing::new(Integers, ctx.degree);
    let samples = witt_samples(&ring, 50, ctx.seed);
    let report = verify_lambda_with(&ring, &samples, 3, 2, ctx.cache)?;
    Ok(report_outcome(&report.to_string(), report.passed(), &format!("degree {}, 50 samples, k<=3, l<=2", ctx.degree)))
}

/// The first failing line of a report, or a summary of how many instances passed.
fn report_outcome(report: &str, passed: bool, what: &str) -> Outcome {
    let checks: usize = report
        .lines()
        .filter_map(|l| {
            l.split_once('[').and_then(|(_, rest)| rest.split_whitespace().next()).and_then(|n| n.parse::<usize>().ok())
        })
        .sum();
    if passed {
        Outcome::new(true, format!("{}: {} axiom instances pass", what, checks))
    } else {
        let witness = report.lines().find(|l| l.starts_with("FAIL")).unwrap_or("no witness");
        Outcome::new(false, format!("{}: {}", what, witness))
    }
}

/// Rational combinations of `g - 1` over the non-identity elements of `group`.
fn ideal_samples(ideal: &ZeroProductIdeal, count: usize, seed: u64) -> Result<Vec<QPoly>, CliError> {
    let ambient = ideal.ambient();
    let mut r = rng(seed, Stream::RingElements);
    let mut out = Vec::with_capacity(count);
    let names = ambient.names().to_vec();
    for _ in 0..count {
        let mut text = Vec::new();
        for n in &names {
            let orders = ambient.group().torsion().to_vec();
            let order = orders[names.iter().position(|m| m == n).unwrap() - ambient.group().free_rank()] as i64;
            let e = r.gen_range(1..order);
            let (num, den) = (r.gen_range(-3i64..=3), r.gen_range(1i64..=2));
            text.push(format!("{}/{}*({}^{} - 1)", num, den, n, e));
        }
        out.push(ideal.element(&ambient.parse(&text.join(" + "))?)?);
    }
    Ok(out)
}

fn augmented_rings(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let group = AbelianGroup::parse("torsion=2,2")?;
    let ideal = || ZeroProductIdeal::new(GroupRing::new(group.clone()));
    let fibers = ideal_samples(&ideal(), 6, ctx.seed)?;

    let ints: Vec<BigInt> = (-2..=3).map(BigInt::from).collect();
    let over_z = augment(Integers, ideal(), &ints, &fibers)?;
    let pairs: Vec<_> = ints.iter().zip(&fibers).map(|(r, s)| (r.clone(), s.clone())).collect();
    let report = verify_lambda_with(&over_z, &pairs, 3, 2, ctx.cache)?;
    if !report.passed() {
        return Ok(report_outcome(&report.to_string(), false, "Z + I"));
    }

    let base = GroupRing::<BigInt>::new(group.clone());
    let bases = ring_samples(&base, 6, ctx.seed)?;
    let over_rep = augment(base, ideal(), &bases, &fibers)?;
    let pairs: Vec<_> = bases.iter().zip(&fibers).map(|(r, s)| (r.clone(), s.clone())).collect();
    let report2 = verify_lambda_with(&over_rep, &pairs, 3, 2, ctx.cache)?;
    if !report2.passed() {
        return Ok(report_outcome(&report2.to_string(), false, "R(D) + I"));
    }
    Ok(Outcome::new(true, "Z + I and R(Z/2 x Z/2) + I pass every axiom for k<=3, l<=2"))
}

/// `Q[x]/(x - 1)^3` with `x` a line.
fn truncated_line() -> Result<PresentedRing<BigRational>, CliError> {
    let mut r = PresentedRing::new();
    r.add_generator("x", GeneratorLambda::Line, None)?;
    r.add_relation(
        &"x^3".parse().map_err(lambda_kernel::lambda::LambdaError::from)?,
        &"3*x^2 - 3*x + 1".parse().map_err(lambda_kernel::lambda::LambdaError::from)?,
    )?;
    Ok(r)
}

fn adams_operations(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let ring = free_group_ring(2);
    let samples = ring_samples(&ring, 6, ctx.seed)?;
    let mut checked = 0;
    for x in &samples {
        for k in 1..=4 {
            for l in 1..=4 {
                if adams(&ring, k, &adams(&ring, l, x)?)? != adams(&ring, k * l, x)? {
                    return Ok(Outcome::new(false, format!("ψ^{}ψ^{} ≠ ψ^{} at {}", k, l, k * l, ring.show(x))));
                }
                checked += 1;
            }
        }
    }
    for x in &samples {
        for y in &samples {
            for k in 1..=4 {
                let (px, py) = (adams(&ring, k, x)?, adams(&ring, k, y)?);
                if adams(&ring, k, &ring.add(x, y))? != ring.add(&px, &py)
                    || adams(&ring, k, &ring.mul(x, y))? != ring.mul(&px, &py)
                {
                    return Ok(Outcome::new(
                        false,
                        format!("ψ^{} is not a ring map at {}, {}", k, ring.show(x), ring.show(y)),
                    ));
                }
                checked += 1;
            }
        }
    }
    if adams(&ring, 3, &ring.one().expect("a unit"))? != ring.one().expect("a unit") {
        return Ok(Outcome::new(false, "ψ^3(1) ≠ 1"));
    }

    let r = truncated_line()?;
    let basis: Vec<QPoly> = ["1", "x", "x^2"].iter().map(|s| r.parse(s)).collect::<Result<_, _>>()?;
    let a = FilteredAlgebra::from_ring(&r, &basis, |x| r.coordinates(x, &basis), 4)?;
    let mut vectors: Vec<Vec<BigRational>> =
        (0..3).map(|i| (0..3).map(|j| BigRational::from_integer(BigInt::from(i32::from(i == j)))).collect()).collect();
    let mut g = rng(ctx.seed, Stream::RingElements);
    vectors
        .extend((0..5).map(|_| {
            (0..3).map(|_| BigRational::new(g.gen_range(-4..=4).into(), g.gen_range(1..=3).into())).collect()
        }));
    let psi2 = a.psi_matrix(2).ok_or_else(|| CliError::Usage("ψ^2 is not available".into()))?;
    for v in &vectors {
        let parts = adams_eigenspace(&a, v, 2)?;
        let mut sum = vec![BigRational::from_integer(0.into()); 3];
        for (n, p) in &parts {
            let scaled: Vec<BigRational> =
                p.iter().map(|c| c * BigRational::from_integer(BigInt::from(1u64 << n))).collect();
            if psi2.apply(p) != scaled {
                return Ok(Outcome::new(
                    false,
                    format!("component of weight {} is not annihilated by ψ^2 - 2^{}", n, n),
                ));
            }
            for (s, c) in sum.iter_mut().zip(p) {
                *s += c;
            }
        }
        if &sum != v {
            return Ok(Outcome::new(false, "eigencomponents do not sum to the input"));
        }
        checked += 1;
    }
    Ok(Outcome::new(true, format!("{} instances of composition, ring laws and eigen-decomposition", checked)))
}

fn gamma_filtration(_: &Context<'_>) -> Result<Outcome, CliError> {
    let ring = GroupRing::<BigRational>::new(AbelianGroup::parse("torsion=2")?);
    let basis: Vec<QPoly> = ["1", "s1"].iter().map(|s| ring.parse(s)).collect::<Result<_, _>>()?;
    let a = FilteredAlgebra::from_ring(&ring, &basis, |x| ring.coordinates(x, &basis), 10)?.gamma_filtration(4)?;
    let dims: Vec<usize> = (0..=4).map(|m| a.filtration_dim(m).unwrap_or(usize::MAX)).collect();
    let f1 = a.filtration(1).unwrap_or(&[]).to_vec();
    for m in 2..=4 {
        let fm = a.filtration(m).unwrap_or(&[]).to_vec();
        let joint: Vec<_> = f1.iter().chain(&fm).cloned().collect();
        if span_rank(2, &joint) != span_rank(2, &f1) || span_rank(2, &fm) != span_rank(2, &f1) {
            return Ok(Outcome::new(false, format!("F^{} ≠ F^1", m)));
        }
    }
    let passed = dims == [2, 1, 1, 1, 1];
    Ok(Outcome::new(passed, format!("dim F^0..F^4 = {:?}, F^1 = F^2 = F^3 = F^4", dims)))
}

fn dold_kan_roundtrip(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let mut r = rng(ctx.seed, Stream::Complexes);
    for i in 0..100 {
        let c = random_complex(&mut r, -2, 0, 3, false);
        if denormalize(&c, 4)?.normalize() != c {
            return Ok(Outcome::new(false, format!("N(DN(C)) ≠ C for complex {}", i)));
        }
    }
    let mut r = rng(ctx.seed, Stream::TwoSided);
    for i in 0..50 {
        let c = random_complex(&mut r, -1, 1, 3, false);
        if embed_i_default(&c)?.tot_normalized()? != c {
            return Ok(Outcome::new(false, format!("Tot(N(i(C))) ≠ C for complex {}", i)));
        }
    }
    Ok(Outcome::new(true, "N(DN(C)) = C on 100 complexes, Tot(N(i(C))) = C on 50 two-sided complexes"))
}

fn derived_exterior_power(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let mut r = rng(ctx.seed, Stream::Derived);
    let mut tested = 0;
    let mut euler = std::collections::BTreeSet::new();
    while tested < 40 {
        let c = random_complex(&mut r, -1, 1, 3, false);
        let chi = c.euler_char();
        if chi.abs() > 3 {
            continue;
        }
        euler.insert(chi);
        for k in 0..=3 {
            let got = derived_lambda(k, &c)?.euler_char();
            if got != binomial_i64(chi, k) {
                return Ok(Outcome::new(false, format!("χ(Λ^{} K) = {} ≠ C({}, {})", k, got, chi, k)));
            }
        }
        if derived_lambda(1, &c)?.homology() != c.homology() {
            return Ok(Outcome::new(false, "Λ^1 changes homology"));
        }
        tested += 1;
    }
    for i in 0..10 {
        let c = random_complex(&mut r, -1, 1, 3, true);
        for k in 1..=3 {
            if !derived_lambda(k, &c)?.is_acyclic() {
                return Ok(Outcome::new(false, format!("Λ^{} of acyclic complex {} is not acyclic", k, i)));
            }
        }
    }
    let seen: Vec<String> = euler.iter().map(i64::to_string).collect();
    Ok(Outcome::new(
        true,
        format!("40 complexes with χ in {{{}}}, k<=3; 10 acyclic complexes; Λ^1 preserves homology", seen.join(", ")),
    ))
}

fn split_flag_additivity(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let mut r = rng(ctx.seed, Stream::Flags);
    for i in 0..30 {
        let flag = random_split_flag(&mut r, -1, 1, 2);
        for m in 0..=3 {
            let a = additivity_check(&flag, m)?;
            if !a.holds() || a.lhs != binomial_i64(a.euler, m) {
                return Ok(Outcome::new(
                    false,
                    format!("flag {}, m = {}: lhs {}, rhs {}, χ {}", i, m, a.lhs, a.rhs, a.euler),
                ));
            }
        }
    }
    Ok(Outcome::new(true, "30 split flags, m<=3: both sides equal C(χ, m)"))
}

/// Longest flags and largest dimension checked for the flag conditions.
const FLAG_MAX_DIM: usize = 5;
const FLAG_MAX_LEN: usize = 5;

fn flag_conditions(_: &Context<'_>) -> Result<Outcome, CliError> {
    let report = verify_e_conditions(FLAG_MAX_DIM, FLAG_MAX_LEN)?;
    let counts: Vec<String> = report.checked.iter().map(|(k, n)| format!("{} x{}", k, n)).collect();
    match report.failures.first() {
        None => Ok(Outcome::new(
            true,
            format!("dims <= {}, length <= {}: {}", FLAG_MAX_DIM, FLAG_MAX_LEN, counts.join(", ")),
        )),
        Some(f) => Ok(Outcome::new(false, f.clone())),
    }
}

fn cone_nerve(_: &Context<'_>) -> Result<Outcome, CliError> {
    let zoo = category_zoo();
    let report = cone_nerve_grid(&zoo, 4)?;
    match report.failures.first() {
        None => Ok(Outcome::new(
            true,
            format!("{} categories, {} pairs, {} functors, levels 0..4", zoo.len(), report.pairs, report.functors),
        )),
        Some(f) => Ok(Outcome::new(false, f.clone())),
    }
}

/// Largest power of `t1*t2` dividing out the negative exponents of `p`.
fn clearing_power(ring: &GroupRing<BigInt>, p: &LaurentPoly) -> i32 {
    p.terms().flat_map(|(m, _)| ring.exponents(p, m)).map(|e| -e).max().unwrap_or(0).max(0)
}

fn representation_rings(ctx: &Context<'_>) -> Result<Outcome, CliError> {
    let ring = free_group_ring(2);
    let weyl = WeylAction::new(&ring, vec![IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])])?;
    let invariants = weyl.invariants(&ring, 3);
    for x in &invariants {
        for k in 1..=4 {
            if !weyl.is_invariant(&ring, &ring.lambda(k, x)?) {
                return Ok(Outcome::new(false, format!("λ^{} of {} is not invariant", k, ring.show(x))));
            }
        }
    }
    // Every invariant is a polynomial in e1 and e2^±1 ...
    let block = [Block::numbered("e", "t", 2)];
    let det = ring.parse("t1*t2")?;
    for x in &invariants {
        let m = clearing_power(&ring, x);
        let cleared = ring.mul(x, &ring.pow(&det, m as u32).expect("a unital ring"));
        let q = decompose_symmetric(&cleared, &block).map_err(lambda_kernel::lambda::LambdaError::from)?;
        if recompose(&q, &block).map_err(lambda_kernel::lambda::LambdaError::from)? != cleared {
            return Ok(Outcome::new(false, format!("{} does not recompose", ring.show(x))));
        }
    }
    // ... and every e1^a e2^b of degree <= 3 lies in the span of the invariants.
    let leads: Vec<LaurentPoly> = invariants
        .iter()
        .map(|x| {
            let (m, _) = x.leading().expect("orbit sums are nonzero");
            ring.group_element(&ring.exponents(x, m))
        })
        .collect();
    let (e1, e2) = (ring.parse("t1 + t2")?, ring.parse("t1*t2")?);
    let e2_inv = ring.parse("t1^-1*t2^-1")?;
    let mut monomials = 0;
    for a in 0..=3u32 {
        for b in -3i32..=3 {
            let power =
                if b >= 0 { ring.pow(&e2, b as u32) } else { ring.pow(&e2_inv, (-b) as u32) }.expect("a unital ring");
            let p = ring.mul(&ring.pow(&e1, a).expect("a unital ring"), &power);
            let degree = p
                .terms()
                .map(|(m, _)| ring.exponents(&p, m).iter().map(|e| e.unsigned_abs()).sum::<u32>())
                .max()
                .unwrap_or(0);
            if degree > 3 {
                continue;
            }
            if !weyl.is_invariant(&ring, &p) || coordinates_by_terms(&p, &invariants, &leads).is_none() {
                return Ok(Outcome::new(false, format!("e1^{} e2^{} is not in the invariant span", a, b)));
            }
            monomials += 1;
        }
    }

    let tensor = tensor_lambda_ring(&AbelianGroup::parse("torsion=2")?, &dual_numbers()?)?;
    let mut samples: Vec<QPoly> =
        ["s1*x - s1", "s1 + x", "2*x - 1"].iter().map(|s| tensor.parse(s)).collect::<Result<_, _>>()?;
    samples.extend(ring_samples(&tensor, 4, ctx.seed)?);
    let report = verify_lambda_with(&tensor, &samples, 3, 2, ctx.cache)?;
    if !report.passed() {
        return Ok(report_outcome(&report.to_string(), false, "R(Z/2) ⊗ Q[h]/(h^2)"));
    }
    Ok(Outcome::new(
        true,
        format!(
            "{} invariants of degree <= 3 are λ-closed and match {} monomials in e1, e2^±1; R(Z/2) ⊗ Q[h]/(h^2) passes",
            invariants.len(),
            monomials
        ),
    ))
}

/// `Q[x]/(x - 1)^2` with `x` a line, so that `h = x - 1` squares to zero.
fn dual_numbers() -> Result<PresentedRing<BigRational>, CliError> {
    let mut k = PresentedRing::new();
    k.add_generator("x", GeneratorLambda::Line, None)?;
    k.add_relation(
        &"x^2".parse().map_err(lambda_kernel::lambda::LambdaError::from)?,
        &"2*x - 1".parse().map_err(lambda_kernel::lambda::LambdaError::from)?,
    )?;
    Ok(k)
}

fn monoid_classes(_: &Context<'_>) -> Result<Outcome, CliError> {
    let monoid = MonoidRepRing::new(2)?;
    let target = free_group_ring(4);
    let (x, y) = (target.parse("t1 + t2")?, target.parse("t3 + t4")?);
    let first = lambdas(&target, &x, 2)?;
    let second = lambdas(&target, &y, 2)?;
    let basis = ["a1^2", "a2", "a1*b1", "b1^2", "b2"];
    for text in basis {
        let e = monoid.parse(text)?;
        if !monoid.in_degree(&e, 2) {
            return Ok(Outcome::new(false, format!("{} is not of degree 2", text)));
        }
        let image = substitute_classes(&e, &first, &second, &target)?;
        let lhs = substitute_classes(&monoid.lambda(2, &e)?, &first, &second, &target)?;
        if lhs != target.lambda(2, &image)? {
            return Ok(Outcome::new(false, format!("λ^2 does not commute with substitution at {}", text)));
        }
    }
    Ok(Outcome::new(true, format!("degree-2 basis {} commutes with λ^2 under substitution", basis.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_are_numbered_in_order_with_distinct_names() {
        for (i, c) in CRITERIA.iter().enumerate() {
            assert_eq!(c.number, i + 1);
            assert_eq!(CRITERIA.iter().filter(|d| d.name == c.name).count(), 1);
        }
    }

    #[test]
    fn selection() {
        assert_eq!(select("all").unwrap().len(), 12);
        assert_eq!(select("7").unwrap()[0].name, "derived-exterior-power");
        assert_eq!(select("cone-nerve").unwrap()[0].number, 10);
        assert!(select("13").is_err());
    }

    #[test]
    fn failing_reports_quote_their_witness() {
        let report = "PASS (a) x [3 checks]\nFAIL (b) y [2 checks]: at z\n";
        assert_eq!(report_outcome(report, false, "ring").detail, "ring: FAIL (b) y [2 checks]: at z");
        assert_eq!(report_outcome(report, true, "ring").detail, "ring: 5 axiom instances pass");
    }
}
