//! Evaluates a family with a chosen counting method.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::ToPrimitive;

use crate::families::{build_hypergraph, derive_params, line_graph, FamilySpec};
use crate::formulas::{self, ProductForm};
use crate::numerics::{to_u64, ExactInteger, ExactRational};
use crate::{oracle, Error, Result};

/// A counting method. The string tags are stable and used in cache keys and
/// output documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Alternating summation over the parameter sequence; applies to every family.
    Summation,
    /// Product formula for shellings of `K_n`.
    CompleteGraphProduct,
    /// Product formula for shellings of `K_{m,n}`.
    BipartiteProduct,
    /// Generalized-binomial ratio for edge-regular graphs (2-uniform families).
    EdgeRegularRatio,
    /// Tripartite product, full form.
    TripartiteFull,
    /// Tripartite product, reduced form.
    TripartiteReduced,
    /// Conjectured product for `K_n^(3)`.
    CompleteTripleProduct,
    /// Conjectured product for `K_{m,n}^(1,2)`.
    MixedTripleProduct,
    /// Subset-DP count on the explicit line graph.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Summation,
        Method::CompleteGraphProduct,
        Method::BipartiteProduct,
        Method::EdgeRegularRatio,
        Method::TripartiteFull,
        Method::TripartiteReduced,
        Method::CompleteTripleProduct,
        Method::MixedTripleProduct,
        Method::Oracle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Summation => "theorem2",
            Method::CompleteGraphProduct => "stanley",
            Method::BipartiteProduct => "gao_peng",
            Method::EdgeRegularRatio => "together",
            Method::TripartiteFull => "theorem4_form1",
            Method::TripartiteReduced => "theorem4_form2",
            Method::CompleteTripleProduct => "conjecture_c",
            Method::MixedTripleProduct => "conjecture_d",
            Method::Oracle => "oracle",
        }
    }

    /// Closed-form methods whose family shape matches `spec`; the oracle is
    /// not included.
    pub fn applicable_formulas(spec: &FamilySpec) -> Vec<Method> {
        Method::ALL
            .into_iter()
            .filter(|&m| m != Method::Oracle && m.applies_to(spec))
            .collect()
    }

    /// Whether the family has the shape this method is stated for. The
    /// oracle applies to everything, subject to its cap at evaluation time.
    pub fn applies_to(self, spec: &FamilySpec) -> bool {
        match self {
            Method::Summation | Method::Oracle => true,
            Method::CompleteGraphProduct => matches!(spec.sizes_if_shape(&[2]).as_deref(), Some([n]) if *n >= 2),
            Method::BipartiteProduct => {
                matches!(spec.sizes_if_shape(&[1, 1]).as_deref(), Some([m, n]) if *m >= 1 && *n >= 1)
            }
            Method::EdgeRegularRatio => spec.uniformity() == 2 && derive_params(spec).alpha() >= 1,
            Method::TripartiteFull | Method::TripartiteReduced => {
                matches!(spec.sizes_if_shape(&[1, 1, 1]).as_deref(), Some(s) if s.iter().all(|&x| x >= 1))
            }
            Method::CompleteTripleProduct => matches!(spec.sizes_if_shape(&[3]).as_deref(), Some([n]) if *n >= 3),
            Method::MixedTripleProduct => {
                matches!(spec.sizes_if_shape(&[1, 2]).as_deref(), Some([m, n]) if *m >= 1 && *n >= 2)
            }
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "theorem4" {
            return Ok(Method::TripartiteFull);
        }
        Method::ALL.into_iter().find(|m| m.tag() == s).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "unknown method".to_string(),
        })
    }
}

/// `sigma` orderings out of `a_0!`, with probability `sigma_prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub sigma_prime: ExactRational,
    pub sigma: ExactInteger,
    pub method: Method,
}

/// Evaluates `spec` with `method`. `cap` bounds the oracle's line graph.
pub fn evaluate(spec: &FamilySpec, method: Method, cap: usize) -> Result<FormulaResult> {
    if !method.applies_to(spec) {
        return Err(Error::Inapplicable { method: method.tag(), family: spec.to_string() });
    }
    let params = derive_params(spec);
    let a0 = to_u64(params.a0(), "a_0")?;
    let sizes: Vec<u32> = spec.parts().iter().map(|p| p.size).collect();
    let from_count = |sigma: ExactInteger| {
        let sigma_prime = if a0 == 0 {
            ExactRational::from_integer(1.into())
        } else {
            ExactRational::new(sigma.clone(), crate::numerics::factorial(a0))
        };
        FormulaResult { sigma_prime, sigma, method }
    };
    let from_ratio = |sigma_prime: ExactRational| -> Result<FormulaResult> {
        let sigma = formulas::scale_to_count(&sigma_prime, a0)?;
        Ok(FormulaResult { sigma_prime, sigma, method })
    };
    match method {
        Method::Summation => from_ratio(formulas::sigma_prime_fully_regular(&params)),
        Method::CompleteGraphProduct => Ok(from_count(formulas::complete_graph_shellings(u64::from(sizes[0]))?)),
        Method::BipartiteProduct => Ok(from_count(formulas::complete_bipartite_shellings(
            u64::from(sizes[0]),
            u64::from(sizes[1]),
        )?)),
        Method::EdgeRegularRatio => {
            // Edge-regularity data read off the line-graph parameters:
            // d = a_0 - a_1 - 1, lambda = a_0 - 2 a_1 + a_2, nu = alpha.
            let a = params.values();
            let nu = params.alpha() as u64;
            let d = to_u64(&(&a[0] - &a[1] - 1), "d")?;
            let lambda = if nu >= 2 { to_u64(&(&a[0] - &a[1] * 2 + &a[2]), "lambda")? } else { 0 };
            from_ratio(formulas::edge_regular_shelling_ratio(nu, d, lambda)?)
        }
        Method::TripartiteFull => Ok(from_count(formulas::tripartite_count(
            sizes[0],
            sizes[1],
            sizes[2],
            ProductForm::Full,
        )?)),
        Method::TripartiteReduced => {
            // Sizes are sorted ascending; put the smallest class last so it
            // is never the single largest.
            Ok(from_count(formulas::tripartite_count(sizes[2], sizes[1], sizes[0], ProductForm::Reduced)?))
        }
        Method::CompleteTripleProduct => from_ratio(formulas::complete_triple_ratio(sizes[0])?),
        Method::MixedTripleProduct => from_ratio(formulas::mixed_triple_ratio(sizes[0], sizes[1])?),
        Method::Oracle => {
            if a0.to_usize().is_none_or(|v| v > cap) {
                return Err(Error::CapExceeded { what: "line graph", size: u128::from(a0), cap });
            }
            let h = build_hypergraph(spec, cap)?;
            let g = line_graph(&h, cap)?;
            Ok(from_count(oracle::count_successive_orderings(&g, cap)?))
        }
    }
}

impl FormulaResult {
    /// Checks `sigma = a_0! * sigma_prime`.
    pub fn is_consistent(&self, a0: u64) -> bool {
        formulas::scale_to_count(&self.sigma_prime, a0).is_ok_and(|s| s == self.sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ORACLE_CAP;

    fn eval_all(spec: &str) -> Vec<FormulaResult> {
        let spec: FamilySpec = spec.parse().unwrap();
        Method::ALL
            .into_iter()
            .filter(|m| m.applies_to(&spec))
            .filter_map(|m| match evaluate(&spec, m, DEFAULT_ORACLE_CAP) {
                Ok(r) => Some(r),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => panic!("{m} on {spec}: {e}"),
            })
            .collect()
    }

    #[test]
    fn tags_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.tag().parse::<Method>().unwrap(), m);
        }
        assert_eq!("theorem4".parse::<Method>().unwrap(), Method::TripartiteFull);
        assert!("bogus".parse::<Method>().is_err());
    }

    #[test]
    fn all_methods_agree() {
        for (spec, sigma) in [
            ("parts=2:4", 576u64),
            ("parts=1:2,1:3", 360),
            ("parts=1:2,1:2,1:2", 34560),
            ("parts=1:1,1:1,1:1", 1),
            ("parts=1:1,1:1", 1),
            ("parts=1:2,2:4", 435_456_000), // 12! * 10/11
        ] {
            let results = eval_all(spec);
            assert!(results.len() >= 2, "{spec}");
            for r in &results {
                assert_eq!(r.sigma, sigma.into(), "{spec} via {}", r.method);
            }
        }
    }

    #[test]
    fn applicability() {
        let k4: FamilySpec = "parts=2:4".parse().unwrap();
        assert_eq!(
            Method::applicable_formulas(&k4),
            [Method::Summation, Method::CompleteGraphProduct, Method::EdgeRegularRatio]
        );
        let k222 = FamilySpec::complete_tripartite(2, 2, 2);
        assert!(matches!(
            evaluate(&k222, Method::CompleteGraphProduct, 20),
            Err(Error::Inapplicable { .. })
        ));
        let k7 = FamilySpec::complete_graph(7);
        assert!(matches!(evaluate(&k7, Method::Oracle, 20), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn degenerate_family() {
        let r = evaluate(&FamilySpec::complete_graph(1), Method::Summation, 20).unwrap();
        assert_eq!(r.sigma, 1.into());
        assert_eq!(r.sigma_prime, ExactRational::from_integer(1.into()));
    }
}
