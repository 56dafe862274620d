//! Universal polynomials `P_k`, `P_{k,l}` and their γ-counterparts `Q_k`, `Q_{k,l}`.
//!
//! `P_k` lives in `e1..ek, f1..fk` (the λ-operations of the two factors), `P_{k,l}` in
//! `e1..e_{kl}`. The γ-versions use `g_i` and `h_i` for `γ^i` of the two arguments.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::LambdaError;
use crate::exact::{binomial_usize, decompose_symmetric, subsets, Block, LaurentPoly, TruncSeries};

/// Largest `k` accepted by [`universal_p`].
pub const P_CAP: usize = 6;
/// Largest `k·l` accepted by [`universal_p2`].
pub const P2_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UniversalKind {
    /// `λ^k(xy)`.
    Product,
    /// `λ^k(λ^l(x))`.
    Composite,
    /// `γ^k(xy)`.
    GammaProduct,
    /// `γ^k(γ^l(x))`.
    GammaComposite,
}

impl UniversalKind {
    pub fn tag(&self) -> &'static str {
        match self {
            UniversalKind::Product => "P",
            UniversalKind::Composite => "P2",
            UniversalKind::GammaProduct => "Q",
            UniversalKind::GammaComposite => "Q2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPoly {
    pub kind: UniversalKind,
    pub k: usize,
    /// Zero for the product kinds.
    pub l: usize,
    pub poly: LaurentPoly,
}

fn check_p(k: usize) -> Result<(), LambdaError> {
    if k == 0 {
        return Err(LambdaError::Index("P_0 is not defined; λ^0(xy) = 1 is an axiom".into()));
    }
    if k > P_CAP {
        return Err(LambdaError::Index(format!("P_{} exceeds the cap k <= {}", k, P_CAP)));
    }
    Ok(())
}

fn check_p2(k: usize, l: usize) -> Result<(), LambdaError> {
    if k == 0 || l == 0 {
        return Err(LambdaError::Index("P_{k,l} needs k >= 1 and l >= 1".into()));
    }
    if k * l > P2_CAP {
        return Err(LambdaError::Index(format!("P_{{{},{}}} exceeds the tractability cap k*l <= {}", k, l, P2_CAP)));
    }
    Ok(())
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
}

/// Coefficient of `t^k` in `Π (1 + z t)` over the given monomials.
fn elementary_of(terms: &[LaurentPoly], k: usize) -> LaurentPoly {
    let mut c = vec![LaurentPoly::zero(); k + 1];
    c[0] = LaurentPoly::one();
    for z in terms {
        for j in (1..=k).rev() {
            if !c[j - 1].is_zero() {
                c[j] = c[j].add(&z.mul(&c[j - 1]));
            }
        }
    }
    c.pop().expect("k + 1 coefficients")
}

/// `λ^k(xy) = P_k(λ^1 x..λ^k x; λ^1 y..λ^k y)`.
pub fn universal_p(k: usize) -> Result<UniversalPoly, LambdaError> {
    check_p(k)?;
    let (xs, ys) = (names("x", k), names("y", k));
    let mut products = Vec::with_capacity(k * k);
    for x in &xs {
        for y in &ys {
            products.push(LaurentPoly::monomial(&[(x, 1), (y, 1)], BigInt::one()));
        }
    }
    let ek = elementary_of(&products, k);
    let poly = decompose_symmetric(&ek, &[Block::new("e", &xs), Block::new("f", &ys)])?;
    Ok(UniversalPoly { kind: UniversalKind::Product, k, l: 0, poly })
}

/// `λ^k(λ^l x) = P_{k,l}(λ^1 x..λ^{kl} x)`.
pub fn universal_p2(k: usize, l: usize) -> Result<UniversalPoly, LambdaError> {
    check_p2(k, l)?;
    let n = k * l;
    let xs = names("x", n);
    let products: Vec<LaurentPoly> = subsets(n, l)
        .into_iter()
        .map(|s| {
            let f: Vec<(&str, i32)> = s.iter().map(|&i| (xs[i].as_str(), 1)).collect();
            LaurentPoly::monomial(&f, BigInt::one())
        })
        .collect();
    let ek = elementary_of(&products, k);
    let poly = decompose_symmetric(&ek, &[Block::new("e", &xs)])?;
    Ok(UniversalPoly { kind: UniversalKind::Composite, k, l, poly })
}

/// `γ^i` in terms of `λ^j`: `Σ_j C(i-1, i-j) λ^j`, with the λ's named `prefix_j`.
fn gamma_in_lambdas(i: usize, prefix: &str) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for j in 1..=i {
        let c = BigInt::from(binomial_usize(i - 1, i - j));
        acc = acc.add(&LaurentPoly::monomial(&[(&format!("{}{}", prefix, j), 1)], c));
    }
    acc
}

/// `λ^i` in terms of `γ^j`: `Σ_j (-1)^{i-j} C(i-1, i-j) γ^j`, with the γ's named `prefix_j`.
fn lambda_in_gammas(i: usize, prefix: &str) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for j in 1..=i {
        let mut c = BigInt::from(binomial_usize(i - 1, i - j));
        if (i - j) % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&LaurentPoly::monomial(&[(&format!("{}{}", prefix, j), 1)], c));
    }
    acc
}

/// Rewrites a polynomial in `e_i, f_i` (λ's) into `g_i, h_i` (γ's).
fn to_gamma_variables(p: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
    Ok(p.substitute(|v| {
        let (prefix, target) = match v.as_bytes().first()? {
            b'e' => ("e", "g"),
            b'f' => ("f", "h"),
            _ => return None,
        };
        let i: usize = v[prefix.len()..].parse().ok()?;
        Some(lambda_in_gammas(i, target))
    })?)
}

/// `γ^k(xy) = Q_k(γ^1 x..γ^k x; γ^1 y..γ^k y)` in variables `g_i`, `h_i`.
pub fn universal_q(k: usize) -> Result<UniversalPoly, LambdaError> {
    universal_q_with(k, universal_p)
}

/// As [`universal_q`], drawing the `P_j` from a caller-supplied source.
pub fn universal_q_with(
    k: usize,
    mut p: impl FnMut(usize) -> Result<UniversalPoly, LambdaError>,
) -> Result<UniversalPoly, LambdaError> {
    check_p(k)?;
    // γ^k(z) = Σ_j C(k-1, k-j) λ^j(z).
    let mut in_lambdas = LaurentPoly::zero();
    for j in 1..=k {
        let c = BigInt::from(binomial_usize(k - 1, k - j));
        in_lambdas = in_lambdas.add(&p(j)?.poly.scale(&c));
    }
    let poly = to_gamma_variables(&in_lambdas)?;
    Ok(UniversalPoly { kind: UniversalKind::GammaProduct, k, l: 0, poly })
}

/// `γ^k(γ^l x) = Q_{k,l}(γ^1 x..γ^{kl} x)` in variables `g_i`.
pub fn universal_q2(k: usize, l: usize) -> Result<UniversalPoly, LambdaError> {
    universal_q2_with(k, l, universal_p2)
}

/// As [`universal_q2`], drawing the `P_{j,i}` from a caller-supplied source.
pub fn universal_q2_with(
    k: usize,
    l: usize,
    mut p2: impl FnMut(usize, usize) -> Result<UniversalPoly, LambdaError>,
) -> Result<UniversalPoly, LambdaError> {
    check_p2(k, l)?;
    let ring = crate::exact::PolyRing::<BigInt>::new();
    // λ_t(γ^l x) = Π_i λ_t(λ^i x)^{C(l-1, l-i)}, with λ^j(λ^i x) = P_{j,i}.
    let mut series = TruncSeries::one(&ring, k);
    for i in 1..=l {
        let mult = binomial_usize(l - 1, l - i);
        if mult == 0 {
            continue;
        }
        let mut coeffs = vec![LaurentPoly::one()];
        for j in 1..=k {
            coeffs.push(p2(j, i)?.poly);
        }
        let factor = TruncSeries::from_coeffs(coeffs).pow_int(&ring, &BigInt::from(mult));
        series = series.mul(&ring, &factor);
    }
    let mut in_lambdas = LaurentPoly::zero();
    for j in 1..=k {
        let c = BigInt::from(binomial_usize(k - 1, k - j));
        in_lambdas = in_lambdas.add(&series.coeffs[j].scale(&c));
    }
    let poly = to_gamma_variables(&in_lambdas)?;
    Ok(UniversalPoly { kind: UniversalKind::GammaComposite, k, l, poly })
}

/// Re-expresses a `γ`-variable polynomial in λ-variables; used to cross-check the Q's.
pub fn gamma_to_lambda_variables(p: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
    Ok(p.substitute(|v| {
        let (prefix, target) = match v.as_bytes().first()? {
            b'g' => ("g", "e"),
            b'h' => ("h", "f"),
            _ => return None,
        };
        let i: usize = v[prefix.len()..].parse().ok()?;
        Some(gamma_in_lambdas(i, target))
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PolyRing, Ring};
    use crate::lambda::{LambdaRing, WittRing};
    use num_rational::BigRational;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn low_product_polynomials() {
        assert_eq!(universal_p(1).unwrap().poly, p("e1*f1"));
        assert_eq!(universal_p(2).unwrap().poly, p("e1^2*f2 + f1^2*e2 - 2*e2*f2"));
        assert!(universal_p(0).is_err());
    }

    #[test]
    fn low_composite_polynomials() {
        assert_eq!(universal_p2(2, 2).unwrap().poly, p("e1*e3 - e4"));
        for l in 1..=4 {
            assert_eq!(universal_p2(1, l).unwrap().poly, LaurentPoly::var(&format!("e{}", l)));
        }
        for k in 1..=4 {
            assert_eq!(universal_p2(k, 1).unwrap().poly, LaurentPoly::var(&format!("e{}", k)));
        }
        let err = universal_p2(2, 5).unwrap_err();
        assert!(format!("{}", err).contains("k*l <= 9"));
    }

    /// Weight of a monomial in `e_i`/`f_i`/`g_i`/`h_i` variables is the sum of indices.
    fn is_isobaric(q: &LaurentPoly, w: i64) -> bool {
        q.terms().all(|(m, _)| {
            m.0.iter().zip(q.vars()).map(|(&e, v)| e as i64 * v[1..].parse::<i64>().unwrap()).sum::<i64>() == w
        })
    }

    #[test]
    fn weights() {
        for k in 1..=4 {
            let pk = universal_p(k).unwrap().poly;
            // Weight k in each block separately.
            let e_part = pk.rename(|v| if v.starts_with('f') { "z0".into() } else { v.into() });
            assert!(is_isobaric(&e_part, k as i64));
        }
        for (k, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            assert!(is_isobaric(&universal_p2(k, l).unwrap().poly, (k * l) as i64));
        }
    }

    /// Independent route: multiply `1 + Σ e_i t^i` and `1 + Σ f_i t^i` in the Witt ring over
    /// rational polynomials, which works through power sums instead of formal roots.
    #[test]
    fn product_polynomials_match_power_sum_route() {
        let base = PolyRing::<BigRational>::new();
        for k in 1..=4 {
            let w = WittRing::new(base, k);
            let series = |prefix: &str| {
                let mut c = vec![crate::exact::QPoly::one()];
                c.extend((1..=k).map(|i| crate::exact::QPoly::var(&format!("{}{}", prefix, i))));
                w.element(c).unwrap()
            };
            let prod = w.mul(&series("e"), &series("f"));
            let expect = universal_p(k).unwrap().poly.to_rational();
            assert_eq!(prod.coeff(k), &expect, "P_{}", k);
        }
    }

    #[test]
    fn composite_polynomials_match_power_sum_route() {
        let base = PolyRing::<BigRational>::new();
        for (k, l) in [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)] {
            let w = WittRing::new(base, k * l);
            let mut c = vec![crate::exact::QPoly::one()];
            c.extend((1..=k * l).map(|i| crate::exact::QPoly::var(&format!("e{}", i))));
            let u = w.element(c).unwrap();
            let lam = w.lambda(l, &u).unwrap();
            let expect = universal_p2(k, l).unwrap().poly.to_rational();
            assert_eq!(lam.coeff(k), &expect, "P_{{{},{}}}", k, l);
        }
    }

    #[test]
    fn gamma_change_of_variables_is_inverse() {
        for i in 1..=6 {
            let g = LaurentPoly::var(&format!("g{}", i));
            let round = gamma_to_lambda_variables(&g).and_then(|q| to_gamma_variables(&q)).unwrap();
            assert_eq!(round, g);
        }
    }

    #[test]
    fn low_gamma_polynomials() {
        assert_eq!(universal_q(1).unwrap().poly, p("g1*h1"));
        for l in 1..=4 {
            assert_eq!(universal_q2(1, l).unwrap().poly, LaurentPoly::var(&format!("g{}", l)));
        }
    }
}
