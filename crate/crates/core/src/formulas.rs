//! Closed forms for successive orderings and shellings.
//!
//! Everything is exact. Product formulas that may contain zero factors
//! collect their numerator and denominator factors, drop the zeros from
//! both sides, and require that the same number was dropped from each.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::families::{b_value, FullyRegularParams};
use crate::numerics::{
    binomial, double_factorial, exact_div, factorial, generalized_binomial, to_u64, ExactInteger,
    ExactRational,
};
use crate::{Error, Result};

/// Probability that a uniformly random vertex ordering of a fully regular
/// graph is successive:
/// `sum_{i=0}^{alpha-1} prod_{j=1}^{i} -a_j / (a_0 - a_j)`.
///
/// The `i = alpha` term is zero and is skipped. The empty graph gives 1.
pub fn sigma_prime_fully_regular(params: &FullyRegularParams) -> ExactRational {
    let a = params.values();
    if a[0].is_zero() {
        return ExactRational::one();
    }
    // Horner form 1 + x_1 (1 + x_2 (1 + ...)) with x_j = -a_j / (a_0 - a_j),
    // kept as an unreduced fraction and normalized once.
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for aj in a[1..params.alpha()].iter().rev() {
        let step = &a[0] - aj;
        numer = &denom * &step - aj * numer;
        denom *= step;
    }
    ExactRational::new(numer, denom)
}

/// Number of successive orderings of a fully regular graph, `a_0!` times
/// [`sigma_prime_fully_regular`].
pub fn sigma_fully_regular(params: &FullyRegularParams) -> Result<ExactInteger> {
    let a0 = to_u64(params.a0(), "a_0")?;
    scale_to_count(&sigma_prime_fully_regular(params), a0)
}

/// `n! * ratio`, which must be an integer.
pub fn scale_to_count(ratio: &ExactRational, n: u64) -> Result<ExactInteger> {
    if ratio.is_negative() {
        return Err(Error::InvariantViolation(format!("negative ordering probability {ratio}")));
    }
    exact_div(&(factorial(n) * ratio.numer()), ratio.denom(), "ordering count")
}

/// Shellings of `K_n`: `C(n,2)! * n! / (2 (2n-3)!!)`.
pub fn complete_graph_shellings(n: u64) -> Result<ExactInteger> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("complete graph needs n >= 2, got {n}")));
    }
    let edges = n * (n - 1) / 2;
    let numer = factorial(edges) * factorial(n);
    let denom = double_factorial(2 * n as i64 - 3)? * 2;
    exact_div(&numer, &denom, "complete graph shellings")
}

/// Probability that a random edge ordering of `K_n` is a shelling:
/// `n! / (2 (2n-3)!!)`.
pub fn complete_graph_ratio(n: u64) -> Result<ExactRational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("complete graph needs n >= 2, got {n}")));
    }
    Ok(ExactRational::new(factorial(n), double_factorial(2 * n as i64 - 3)? * 2))
}

/// Probability that a random edge ordering of `K_{m,n}` is a shelling:
/// `(m+n) / C(m+n, m)`.
pub fn complete_bipartite_ratio(m: u64, n: u64) -> Result<ExactRational> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("complete bipartite graph needs m, n >= 1, got ({m}, {n})")));
    }
    Ok(ExactRational::new(BigInt::from(m + n), binomial((m + n) as i64, m)))
}

/// Shellings of `K_{m,n}`: `(mn)! (m+n) / C(m+n, m)`.
pub fn complete_bipartite_shellings(m: u64, n: u64) -> Result<ExactInteger> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("complete bipartite graph needs m, n >= 1, got ({m}, {n})")));
    }
    let numer = factorial(m * n) * (m + n);
    exact_div(&numer, &binomial((m + n) as i64, m), "complete bipartite shellings")
}

/// Probability that a random edge ordering of a graph is a shelling, for a
/// graph whose edges each meet `d` other edges and whose independent edge
/// pairs are each joined by `lambda` edges:
/// `nu / C(2(d+1)/lambda, nu - 1)`.
///
/// With `nu = 1` there are no independent pairs, `lambda` is vacuous and the
/// ratio is 1.
pub fn edge_regular_shelling_ratio(nu: u64, d: u64, lambda: u64) -> Result<ExactRational> {
    if nu == 0 {
        return Err(Error::InvalidArgument("matching number must be positive".into()));
    }
    if nu == 1 {
        return Ok(ExactRational::one());
    }
    if lambda == 0 {
        return Err(Error::InvalidArgument("lambda must be positive when nu >= 2".into()));
    }
    let top = ExactRational::new(BigInt::from(2 * (d + 1)), BigInt::from(lambda));
    let denom = generalized_binomial(&top, nu - 1);
    if denom.is_zero() {
        return Err(Error::UndefinedRatio(format!("C({top}, {}) vanishes", nu - 1)));
    }
    Ok(ExactRational::from_integer(nu.into()) / denom)
}

/// Which of the two equal product expressions to evaluate for the
/// tripartite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductForm {
    /// `(mnp-1)! prod_{1}^{m+n+p-1} b_i / (prod_{1}^{m-1} b_i prod_{1}^{n-1} b_i prod_{1}^{p-1} b_i)`.
    Full,
    /// `(mnp)! prod_{m}^{m+p} b_i / (mnp prod_{1}^{p-1} b_i)`; `p` must not be
    /// the single largest class.
    Reduced,
}

/// Drops zero factors from both sides and checks that as many were dropped
/// from the numerator as from the denominator.
fn ratio_without_zeros(numer: &[ExactInteger], denom: &[ExactInteger], context: &str) -> Result<ExactRational> {
    let zeros_n = numer.iter().filter(|f| f.is_zero()).count();
    let zeros_d = denom.iter().filter(|f| f.is_zero()).count();
    if zeros_n != zeros_d {
        return Err(Error::InvariantViolation(format!(
            "{context}: {zeros_n} zero factors in the numerator but {zeros_d} in the denominator"
        )));
    }
    let n: ExactInteger = numer.iter().filter(|f| !f.is_zero()).product();
    let d: ExactInteger = denom.iter().filter(|f| !f.is_zero()).product();
    Ok(ExactRational::new(n, d))
}

fn b_factors(m: i64, n: i64, p: i64, range: core::ops::RangeInclusive<i64>) -> impl Iterator<Item = ExactInteger> {
    range.map(move |i| BigInt::from(b_value(m, n, p, i)))
}

/// Successive orderings of the line graph of the complete 3-partite
/// 3-uniform hypergraph `K_{m,n,p}`, by either product form.
pub fn tripartite_count(m: u32, n: u32, p: u32, form: ProductForm) -> Result<ExactInteger> {
    if m == 0 || n == 0 || p == 0 {
        return Err(Error::InvalidArgument(format!("class sizes must be positive, got ({m}, {n}, {p})")));
    }
    let total = u64::from(m) * u64::from(n) * u64::from(p);
    let (mi, ni, pi) = (i64::from(m), i64::from(n), i64::from(p));
    let (lead, ratio) = match form {
        ProductForm::Full => {
            let numer: Vec<_> = b_factors(mi, ni, pi, 1..=mi + ni + pi - 1).collect();
            let denom: Vec<_> = [mi, ni, pi]
                .into_iter()
                .flat_map(|s| b_factors(mi, ni, pi, 1..=s - 1))
                .collect();
            (total - 1, ratio_without_zeros(&numer, &denom, "tripartite full form")?)
        }
        ProductForm::Reduced => {
            if p > m && p > n {
                return Err(Error::InvalidArgument(format!(
                    "reduced form needs p not to be the single largest class, got ({m}, {n}, {p})"
                )));
            }
            let numer: Vec<_> = b_factors(mi, ni, pi, mi..=mi + pi).collect();
            let mut denom: Vec<_> = b_factors(mi, ni, pi, 1..=pi - 1).collect();
            denom.push(BigInt::from(total));
            (total, ratio_without_zeros(&numer, &denom, "tripartite reduced form")?)
        }
    };
    scale_to_count(&ratio, lead)
}

/// `c_k = 3n^2 - 6n + 2 - k(3n - 3 - k)`.
fn triple_c(n: i64, k: i64) -> i64 {
    3 * n * n - 6 * n + 2 - k * (3 * n - 3 - k)
}

/// `6 (C(n,3) - C(n-k,3)) / k`, the other expression for `c_k`.
fn triple_c_from_binomials(n: i64, k: i64) -> Result<ExactInteger> {
    let diff = (binomial(n, 3) - binomial(n - k, 3)) * 6;
    exact_div(&diff, &BigInt::from(k), "c_k")
}

/// Checks that the two expressions for `c_k` agree.
pub fn triple_c_consistent(n: i64, k: i64) -> Result<bool> {
    Ok(triple_c_from_binomials(n, k)? == BigInt::from(triple_c(n, k)))
}

/// Conjectured product for the ordering probability of `L(K_n^(3))`:
/// `floor(n/3) prod_{n<k<=n+floor(n/2)-2, 3 !| k} c_k / prod_{3<=k<=n-3, 3 | k} c_k`.
pub fn complete_triple_ratio(n: u32) -> Result<ExactRational> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("complete 3-uniform family needs n >= 3, got {n}")));
    }
    let n = i64::from(n);
    let numer_ks: Vec<i64> = (n + 1..=n + n / 2 - 2).filter(|k| k % 3 != 0).collect();
    let denom_ks: Vec<i64> = (3..=n - 3).filter(|k| k % 3 == 0).collect();
    let mut factor = |k: i64| -> Result<ExactInteger> {
        let c = triple_c(n, k);
        if triple_c_from_binomials(n, k)? != BigInt::from(c) {
            return Err(Error::InvariantViolation(format!("the two forms of c_{k} differ for n = {n}")));
        }
        Ok(BigInt::from(c))
    };
    let numer = numer_ks.into_iter().map(&mut factor).collect::<Result<Vec<_>>>()?;
    let denom = denom_ks.into_iter().map(&mut factor).collect::<Result<Vec<_>>>()?;
    let ratio = ratio_without_zeros(&numer, &denom, "complete 3-uniform product")?;
    Ok(ratio * BigInt::from(n / 3))
}

/// Conjectured product for the ordering probability of `L(K_{m,n}^(1,2))`:
/// `m prod_{i=1}^{m-1} (mn - C(m+1,2) + C(i,2)) / d_i` with
/// `d_i = (a_0 - a_i)/i` and `a_i = (m-i) C(n-2i, 2)` taken as polynomials.
pub fn mixed_triple_ratio(m: u32, n: u32) -> Result<ExactRational> {
    if m == 0 || n < 2 {
        return Err(Error::InvalidArgument(format!("mixed 3-uniform family needs m >= 1, n >= 2, got ({m}, {n})")));
    }
    let (m, n) = (i64::from(m), i64::from(n));
    let a = |i: i64| binomial(n - 2 * i, 2) * (m - i);
    let a0 = a(0);
    let base = BigInt::from(m * n) - binomial(m + 1, 2);
    let numer: Vec<ExactRational> = (1..m).map(|i| ExactRational::from_integer(&base + binomial(i, 2))).collect();
    let denom: Vec<ExactRational> = (1..m)
        .map(|i| ExactRational::new(&a0 - a(i), BigInt::from(i)))
        .collect();
    let zeros_n = numer.iter().filter(|f| f.is_zero()).count();
    let zeros_d = denom.iter().filter(|f| f.is_zero()).count();
    if zeros_n != zeros_d {
        return Err(Error::InvariantViolation(format!(
            "mixed 3-uniform product: {zeros_n} zero factors in the numerator but {zeros_d} in the denominator"
        )));
    }
    let num: ExactRational = numer.into_iter().filter(|f| !f.is_zero()).product();
    let den: ExactRational = denom.into_iter().filter(|f| !f.is_zero()).product();
    Ok(num / den * BigInt::from(m))
}

/// Both sides of
/// `sum_{t=0}^{alpha} (-1)^t C(alpha,t) C(beta,t) / C(gamma,t) = C(gamma-beta, alpha) / C(gamma, alpha)`,
/// each evaluated on its own.
///
/// Neither side is defined when `gamma` is a nonnegative integer below
/// `alpha`.
pub fn alternating_binomial_sides(
    alpha: u64,
    beta: &ExactRational,
    gamma: &ExactRational,
) -> Result<(ExactRational, ExactRational)> {
    if gamma.is_integer() && !gamma.is_negative() && *gamma < ExactRational::from_integer(alpha.into()) {
        return Err(Error::Undefined(format!(
            "gamma = {gamma} is a nonnegative integer below alpha = {alpha}"
        )));
    }
    let mut lhs = ExactRational::zero();
    for t in 0..=alpha {
        let term = ExactRational::from_integer(binomial(alpha as i64, t)) * generalized_binomial(beta, t)
            / generalized_binomial(gamma, t);
        if t % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = generalized_binomial(&(gamma - beta), alpha) / generalized_binomial(gamma, alpha);
    Ok((lhs, rhs))
}

/// Both sides of the tripartite polynomial identity
/// `sum_{i=0}^{p-1} (-1)^i/i! prod_{j=1}^{i} a_j prod_{j=i+1}^{p-1} b_j = p prod_{j=m+1}^{m+p-1} b_j`
/// with `a_j = (m-j)(n-j)(p-j)` and `b_j = (a_0 - a_j)/j` extended to every
/// `j`. Any integers `m, n` are accepted; `p >= 1`.
pub fn tripartite_polynomial_sides(m: i64, n: i64, p: i64) -> Result<(ExactInteger, ExactInteger)> {
    if p < 1 {
        return Err(Error::InvalidArgument(format!("p must be positive, got {p}")));
    }
    let a = |j: i64| BigInt::from(m - j) * (n - j) * (p - j);
    let b = |j: i64| BigInt::from(b_value(m, n, p, j));
    let mut lhs = BigInt::zero();
    let mut a_prod = BigInt::one();
    for i in 0..p {
        if i > 0 {
            a_prod *= a(i);
        }
        let tail: ExactInteger = (i + 1..p).map(b).product();
        let term = exact_div(&(&a_prod * tail), &factorial(i as u64), "polynomial identity term")?;
        if i % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = (m + 1..m + p).map(b).product::<ExactInteger>() * p;
    Ok((lhs, rhs))
}
