//! Ring specifications.
//!
//! ```text
//! carrier presented          # integers | group | presented
//! coefficients rationals     # integers (default) | rationals
//! line s                     # generators that are lines: λ_t(s) = 1 + s·t
//! generator e                # a generator with explicit λ-values
//! lambda e = e ; 0           # λ^1(e), λ^2(e), ...; higher ones vanish
//! rank e = 2                 # the augmentation on a generator (lines have rank 1)
//! relation s^2 = 1           # a rewrite rule: a monic monomial and smaller terms
//! relation e^2 = 0
//! sample s + 2*e             # elements checked in addition to seeded random ones
//! basis 1 ; s ; e ; s*e      # monomial basis over the rationals, for filtrations
//! ```
//!
//! A group carrier takes `group free=r; torsion=d1,d2,...` instead of generators and
//! relations, and may declare fiber slots `slot <n> augmentation-ideal` (the rationalized
//! augmentation ideal with zero product, a module over the group ring).

use lambda_kernel::exact::{AlgebraError, Integers, Poly, Scalar};
use lambda_kernel::lambda::{GeneratorLambda, LambdaError, LambdaRing, PresentedRing};
use lambda_kernel::rep::{AbelianGroup, GroupRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_int, Line, Source};
use crate::error::CliError;

/// A piece of text and where it starts in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Located {
    fn new(line: &Line<'_>, part: &str) -> Self {
        Located { text: part.trim().to_string(), line: line.number, col: line.col_of(part.trim()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Integers,
    Group(AbelianGroup),
    Presented,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: Located,
    /// `None` for a line.
    pub lambda: Option<Vec<Located>>,
    pub rank: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub path: String,
    pub carrier: Carrier,
    pub rational: bool,
    pub generators: Vec<GeneratorDecl>,
    pub relations: Vec<(Located, Located)>,
    pub samples: Vec<Located>,
    pub basis: Option<Vec<Located>>,
    pub slots: Vec<(i64, Located)>,
}

fn split_list<'a>(line: &Line<'a>, rest: &'a str) -> Vec<Located> {
    rest.split(';').map(|p| Located::new(line, p)).collect()
}

pub fn parse_ring_spec(src: &Source<'_>) -> Result<RingSpec, CliError> {
    let mut carrier = None;
    let mut rational = None;
    let mut group_line = None;
    let mut gens: Vec<GeneratorDecl> = Vec::new();
    let mut lambdas: Vec<(Located, Vec<Located>)> = Vec::new();
    let mut ranks: Vec<(Located, BigInt)> = Vec::new();
    let mut relations = Vec::new();
    let mut samples = Vec::new();
    let mut basis = None;
    let mut slots = Vec::new();
    for line in src.lines() {
        let text = line.text();
        let kw = line.words().next().unwrap_or("");
        let rest = text[kw.len()..].trim();
        let need_rest = || -> Result<(), CliError> {
            if rest.is_empty() {
                return Err(src.error_at(&line, kw, format!("`{}` needs an argument", kw)));
            }
            Ok(())
        };
        // `name = value`.
        let equation = || -> Result<(&str, &str), CliError> {
            let (a, b) = rest
                .split_once('=')
                .ok_or_else(|| src.error_at(&line, kw, format!("expected `{} <lhs> = <rhs>`", kw)))?;
            if a.trim().is_empty() || b.trim().is_empty() {
                return Err(src.error_at(&line, kw, format!("expected `{} <lhs> = <rhs>`", kw)));
            }
            Ok((a, b))
        };
        match kw {
            "carrier" => {
                need_rest()?;
                if carrier.is_some() {
                    return Err(src.error_at(&line, kw, "carrier declared twice"));
                }
                carrier = Some(match rest {
                    "integers" => Carrier::Integers,
                    // The group itself comes from the `group` line.
                    "group" => Carrier::Group(AbelianGroup::new(0, Vec::new()).expect("trivial group")),
                    "presented" => Carrier::Presented,
                    other => return Err(src.error_at(&line, other, "expected `integers`, `group` or `presented`")),
                });
            }
            "coefficients" => {
                need_rest()?;
                rational = Some(match rest {
                    "integers" => false,
                    "rationals" => true,
                    other => return Err(src.error_at(&line, other, "expected `integers` or `rationals`")),
                });
            }
            "group" => {
                need_rest()?;
                let g = AbelianGroup::parse(rest).map_err(|e| src.error_at(&line, rest, e.to_string()))?;
                group_line = Some((g, line.number));
            }
            "line" => {
                need_rest()?;
                for w in line.words().skip(1) {
                    gens.push(GeneratorDecl { name: Located::new(&line, w), lambda: None, rank: None });
                }
            }
            "generator" => {
                need_rest()?;
                for w in line.words().skip(1) {
                    gens.push(GeneratorDecl { name: Located::new(&line, w), lambda: Some(Vec::new()), rank: None });
                }
            }
            "lambda" => {
                let (a, b) = equation()?;
                lambdas.push((Located::new(&line, a), split_list(&line, b)));
            }
            "rank" => {
                let (a, b) = equation()?;
                let r: BigInt = parse_int(src, &line, b.trim())?;
                ranks.push((Located::new(&line, a), r));
            }
            "relation" => {
                let (a, b) = equation()?;
                relations.push((Located::new(&line, a), Located::new(&line, b)));
            }
            "sample" => {
                need_rest()?;
                samples.push(Located::new(&line, rest));
            }
            "basis" => {
                need_rest()?;
                if basis.is_some() {
                    return Err(src.error_at(&line, kw, "basis declared twice"));
                }
                basis = Some(split_list(&line, rest));
            }
            "slot" => {
                let words: Vec<&str> = line.words().collect();
                if words.len() != 3 || words[2] != "augmentation-ideal" {
                    return Err(src.error_at(&line, kw, "expected `slot <n> augmentation-ideal`"));
                }
                let n: i64 = parse_int(src, &line, words[1])?;
                if n <= 0 {
                    return Err(src.error_at(&line, words[1], "fiber slots have positive index"));
                }
                slots.push((n, Located::new(&line, words[1])));
            }
            other => return Err(src.error_at(&line, other, format!("unknown keyword {:?}", other))),
        }
    }
    let at = |l: &Located, msg: String| CliError::Parse { path: src.path.to_string(), line: l.line, col: l.col, msg };
    let mut carrier = carrier.ok_or_else(|| src.error("missing `carrier` line"))?;
    match (&mut carrier, group_line) {
        (Carrier::Group(g), Some((parsed, _))) => *g = parsed,
        (Carrier::Group(_), None) => return Err(src.error("a group carrier needs a `group` line")),
        (_, Some((_, n))) => {
            return Err(CliError::Parse {
                path: src.path.to_string(),
                line: n,
                col: 1,
                msg: "`group` needs `carrier group`".into(),
            })
        }
        _ => {}
    }
    if carrier != Carrier::Presented {
        if let Some(g) = gens.first() {
            return Err(at(&g.name, "generators need `carrier presented`".into()));
        }
        if let Some((l, _)) = relations.first() {
            return Err(at(l, "relations need `carrier presented`".into()));
        }
    }
    if !matches!(carrier, Carrier::Group(_)) {
        if let Some((_, l)) = slots.first() {
            return Err(at(l, "fiber slots need `carrier group`".into()));
        }
    }
    for (name, values) in lambdas {
        let g = gens
            .iter_mut()
            .find(|g| g.name.text == name.text)
            .ok_or_else(|| at(&name, format!("unknown generator {:?}", name.text)))?;
        match &mut g.lambda {
            Some(v) if v.is_empty() => *v = values,
            Some(_) => return Err(at(&name, format!("λ-values of {} given twice", name.text))),
            None => return Err(at(&name, format!("{} is declared as a line", name.text))),
        }
    }
    for (name, r) in ranks {
        let g = gens
            .iter_mut()
            .find(|g| g.name.text == name.text)
            .ok_or_else(|| at(&name, format!("unknown generator {:?}", name.text)))?;
        g.rank = Some(r);
    }
    for g in &gens {
        if matches!(&g.lambda, Some(v) if v.is_empty()) {
            return Err(at(&g.name, format!("generator {} needs a `lambda` line", g.name.text)));
        }
    }
    Ok(RingSpec {
        path: src.path.to_string(),
        carrier,
        rational: rational.unwrap_or(false),
        generators: gens,
        relations,
        samples,
        basis,
        slots,
    })
}

/// A ring built from a specification.
#[derive(Clone, Debug)]
pub enum BuiltRing {
    Integers(Integers),
    GroupZ(GroupRing<BigInt>),
    GroupQ(GroupRing<BigRational>),
    PresentedZ(PresentedRing<BigInt>),
    PresentedQ(PresentedRing<BigRational>),
}

/// Work that runs on whichever ring a specification describes.
pub trait RingTask {
    type Output;
    fn run<R: SpecRing>(self, ring: &R, spec: &RingSpec) -> Result<Self::Output, CliError>;
}

impl RingSpec {
    /// An error located at `at`; parse columns reported by the kernel are added to its column.
    pub fn error(&self, at: &Located, e: LambdaError) -> CliError {
        let (col, msg) = match &e {
            LambdaError::Algebra(AlgebraError::Parse { col, msg }) => (at.col + col - 1, msg.clone()),
            _ => (at.col, e.to_string()),
        };
        CliError::Parse { path: self.path.clone(), line: at.line, col, msg }
    }

    pub fn build(&self) -> Result<BuiltRing, CliError> {
        Ok(match (&self.carrier, self.rational) {
            (Carrier::Integers, _) => BuiltRing::Integers(Integers),
            (Carrier::Group(g), false) => BuiltRing::GroupZ(GroupRing::new(g.clone())),
            (Carrier::Group(g), true) => BuiltRing::GroupQ(GroupRing::new(g.clone())),
            (Carrier::Presented, false) => BuiltRing::PresentedZ(self.presented()?),
            (Carrier::Presented, true) => BuiltRing::PresentedQ(self.presented()?),
        })
    }

    fn presented<C: Scalar>(&self) -> Result<PresentedRing<C>, CliError> {
        let mut r = PresentedRing::new();
        for g in &self.generators {
            let lambda = match &g.lambda {
                None => GeneratorLambda::Line,
                Some(values) => GeneratorLambda::Values(
                    values
                        .iter()
                        .map(|v| v.text.parse::<Poly<C>>().map_err(|e| self.error(v, e.into())))
                        .collect::<Result<_, _>>()?,
                ),
            };
            r.add_generator(&g.name.text, lambda, g.rank.clone()).map_err(|e| self.error(&g.name, e))?;
        }
        for (lhs, rhs) in &self.relations {
            let l: Poly<C> = lhs.text.parse().map_err(|e| self.error(lhs, LambdaError::from(e)))?;
            let rt: Poly<C> = rhs.text.parse().map_err(|e| self.error(rhs, LambdaError::from(e)))?;
            for v in l.vars().iter().chain(rt.vars()) {
                if !r.generators().contains(v) {
                    return Err(self.error(lhs, LambdaError::Invalid(format!("unknown generator {}", v))));
                }
            }
            r.add_relation(&l, &rt).map_err(|e| self.error(lhs, e))?;
        }
        Ok(r)
    }

    pub fn dispatch<T: RingTask>(&self, ring: &BuiltRing, task: T) -> Result<T::Output, CliError> {
        match ring {
            BuiltRing::Integers(r) => task.run(r, self),
            BuiltRing::GroupZ(r) => task.run(r, self),
            BuiltRing::GroupQ(r) => task.run(r, self),
            BuiltRing::PresentedZ(r) => task.run(r, self),
            BuiltRing::PresentedQ(r) => task.run(r, self),
        }
    }

    /// Parses the listed samples.
    pub fn parse_samples<R: SpecRing>(&self, ring: &R) -> Result<Vec<R::Elem>, CliError> {
        self.samples.iter().map(|s| ring.parse_element(&s.text).map_err(|e| self.error(s, e))).collect()
    }

    /// Parses the basis, or enumerates the group elements of a finite group.
    pub fn parse_basis<R: SpecRing>(&self, ring: &R) -> Result<Vec<R::Elem>, CliError> {
        match &self.basis {
            Some(b) => b.iter().map(|s| ring.parse_element(&s.text).map_err(|e| self.error(s, e))).collect(),
            None => match &self.carrier {
                Carrier::Integers => Ok(vec![ring.parse_element("1")?]),
                Carrier::Group(g) if g.free_rank() == 0 => {
                    group_elements(g).iter().map(|t| ring.parse_element(t).map_err(CliError::from)).collect()
                }
                _ => Err(CliError::Usage(format!("{}: a `basis` line is required for this carrier", self.path))),
            },
        }
    }
}

/// The elements of a finite abelian group as monomials, in lexicographic exponent order.
pub fn group_elements(g: &AbelianGroup) -> Vec<String> {
    let names = g.standard_names();
    let mut out = vec![Vec::<u32>::new()];
    for &d in g.torsion() {
        out = out.into_iter().flat_map(|e| (0..d).map(move |x| [e.clone(), vec![x]].concat())).collect();
    }
    out.into_iter()
        .map(|e| {
            let factors: Vec<String> = names
                .iter()
                .zip(&e)
                .filter(|(_, &x)| x > 0)
                .map(|(n, &x)| if x == 1 { n.clone() } else { format!("{}^{}", n, x) })
                .collect();
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("*")
            }
        })
        .collect()
}

/// Coefficients convertible to rationals.
pub trait Coeff: Scalar {
    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// The rings a specification can describe.
pub trait SpecRing: LambdaRing {
    fn parse_element(&self, s: &str) -> Result<Self::Elem, LambdaError>;
    /// Generator names for random samples, and whether they may appear with negative exponents.
    fn sample_generators(&self) -> Vec<(String, bool)>;
    fn rational(&self) -> bool;
    /// Coordinates in a basis of monomials, if `x` lies in its span.
    fn coordinates(&self, x: &Self::Elem, basis: &[Self::Elem]) -> Option<Vec<BigRational>>;
}

fn poly_coordinates<C: Coeff>(x: &Poly<C>, basis: &[Poly<C>]) -> Option<Vec<BigRational>> {
    coordinates_by_terms(x, basis, basis)
}

/// Coordinates of `x` in `basis`, where the coordinate of `basis[i]` is read off as the
/// coefficient of the monic monomial `terms[i]`, which no other basis element may contain.
pub fn coordinates_by_terms<C: Coeff>(x: &Poly<C>, basis: &[Poly<C>], terms: &[Poly<C>]) -> Option<Vec<BigRational>> {
    let mut rest = x.clone();
    let mut out = Vec::with_capacity(basis.len());
    for (b, t) in basis.iter().zip(terms) {
        let (m, c) = t.leading()?;
        if t.num_terms() != 1 || !c.is_one() {
            return None;
        }
        let factors: Vec<(&str, i32)> = t.vars().iter().map(String::as_str).zip(m.0.iter().copied()).collect();
        let coeff = x.coefficient(&factors);
        rest = rest.sub(&b.scale(&coeff));
        out.push(coeff.to_rational());
    }
    rest.is_zero().then_some(out)
}

impl SpecRing for Integers {
    fn parse_element(&self, s: &str) -> Result<BigInt, LambdaError> {
        s.trim().parse().map_err(|_| LambdaError::Invalid(format!("not an integer: {:?}", s)))
    }
    fn sample_generators(&self) -> Vec<(String, bool)> {
        Vec::new()
    }
    fn rational(&self) -> bool {
        false
    }
    fn coordinates(&self, x: &BigInt, basis: &[BigInt]) -> Option<Vec<BigRational>> {
        match basis {
            [b] if b.is_one() => Some(vec![BigRational::from_integer(x.clone())]),
            [] if x.is_zero() => Some(Vec::new()),
            _ => None,
        }
    }
}

impl<C: Coeff> SpecRing for GroupRing<C> {
    fn parse_element(&self, s: &str) -> Result<Poly<C>, LambdaError> {
        self.parse(s)
    }
    fn sample_generators(&self) -> Vec<(String, bool)> {
        self.names().iter().map(|n| (n.clone(), true)).collect()
    }
    fn rational(&self) -> bool {
        C::IS_FIELD
    }
    fn coordinates(&self, x: &Poly<C>, basis: &[Poly<C>]) -> Option<Vec<BigRational>> {
        poly_coordinates(x, basis)
    }
}

impl<C: Coeff> SpecRing for PresentedRing<C> {
    fn parse_element(&self, s: &str) -> Result<Poly<C>, LambdaError> {
        self.parse(s)
    }
    fn sample_generators(&self) -> Vec<(String, bool)> {
        self.generators().iter().map(|n| (n.clone(), false)).collect()
    }
    fn rational(&self) -> bool {
        C::IS_FIELD
    }
    fn coordinates(&self, x: &Poly<C>, basis: &[Poly<C>]) -> Option<Vec<BigRational>> {
        poly_coordinates(x, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RingSpec, CliError> {
        parse_ring_spec(&Source::new("r.ring", text))
    }

    #[test]
    fn group_carrier() {
        let spec = parse("carrier group\ngroup torsion=3\nsample s1 - 1\n").unwrap();
        assert_eq!(spec.carrier, Carrier::Group(AbelianGroup::parse("torsion=3").unwrap()));
        let BuiltRing::GroupZ(r) = spec.build().unwrap() else { panic!() };
        assert_eq!(spec.parse_samples(&r).unwrap(), vec![r.parse("s1 - 1").unwrap()]);
        assert_eq!(spec.parse_basis(&r).unwrap().len(), 3);
    }

    #[test]
    fn presented_carrier() {
        let text = "carrier presented\ncoefficients rationals\nline s\ngenerator e\nlambda e = e ; 0\nrank e = 0\nrelation s^2 = 1\nrelation e^2 = 0\nbasis 1 ; s ; e ; s*e\n";
        let spec = parse(text).unwrap();
        let BuiltRing::PresentedQ(r) = spec.build().unwrap() else { panic!() };
        let basis = spec.parse_basis(&r).unwrap();
        let x = r.parse("2*s*e - 1/2").unwrap();
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(r.coordinates(&x, &basis), Some(vec![q(-1, 2), q(0, 1), q(0, 1), q(2, 1)]));
        assert_eq!(r.coordinates(&r.parse("s^3").unwrap(), &basis[..1]), None);
    }

    #[test]
    fn polynomial_errors_point_into_the_line() {
        let spec = parse("carrier group\ngroup free=1\nsample t1 + *\n").unwrap();
        let BuiltRing::GroupZ(r) = spec.build().unwrap() else { panic!() };
        match spec.parse_samples(&r) {
            Err(CliError::Parse { line, col, .. }) => assert_eq!((line, col), (3, 13)),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse("line x\n"), Err(CliError::Parse { line: 0, .. })));
        assert!(matches!(parse("carrier ring\n"), Err(CliError::Parse { line: 1, col: 9, .. })));
        assert!(matches!(parse("carrier presented\ngenerator e\n"), Err(CliError::Parse { line: 2, col: 11, .. })));
        assert!(matches!(parse("carrier integers\nline x\n"), Err(CliError::Parse { line: 2, .. })));
    }

    #[test]
    fn finite_group_elements() {
        let g = AbelianGroup::parse("torsion=2,2").unwrap();
        assert_eq!(group_elements(&g), ["1", "s2", "s1", "s1*s2"]);
    }
}
