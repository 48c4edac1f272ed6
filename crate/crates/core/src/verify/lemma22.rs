//! Exact and numerical checks of the three quotient-matrix comparisons with `n - 2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::constructions::{
    gamma1, gamma1_partition, gamma1_quotient, gamma1_quotient_charpoly, gamma2, gamma2_partition, gamma2_quotient,
    gamma2_quotient_charpoly, gamma3, gamma3_partition, gamma3_quotient, gamma3_quotient_charpoly,
};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::io::round_sig;
use crate::spectral::{
    block_shift_residual, eigenvalues, equitable_quotient, jacobi::symmetric_eigenvalues, quotient_containment_check,
    IntPolynomial, QuotientMatrix, VertexPartition,
};

use super::SCHEMA_VERSION;

/// Required gap between a float index and `n - 2` for a strict comparison to count.
pub const STRICT_MARGIN: f64 = 1e-6;
/// Tolerance for eigenvalues of the block-shift residual to count as -1 or 0.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignProbe {
    pub polynomial: &'static str,
    /// Probe point as a decimal string, e.g. `-6/5`.
    pub at: String,
    pub value: String,
    pub expected_positive: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub family: &'static str,
    pub quotient_matches_construction: bool,
    pub char_poly: IntPolynomial,
    pub char_poly_matches: bool,
    pub quotient_contained: bool,
    /// `lambda_1` of the graph and of its quotient.
    pub index: f64,
    pub quotient_index: f64,
    /// `index - (n - 2)`: negative for gamma1/gamma2, positive for gamma3.
    pub margin: f64,
    pub comparison_holds: bool,
    /// Distinct eigenvalues of the block-shift residual (gamma1 and gamma2 only).
    pub residual_eigenvalues: Option<Vec<f64>>,
    pub residual_in_minus_one_zero: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma22Order {
    pub n: usize,
    pub families: Vec<FamilyCheck>,
    /// Exact value of the gamma3 quotient polynomial at `n - 2`.
    pub f_at_n_minus_2: String,
    pub f_identity_holds: bool,
    pub sign_probes: Vec<SignProbe>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma22Report {
    pub schema_version: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub orders: Vec<Lemma22Order>,
    pub all_hold: bool,
}

impl Lemma22Report {
    pub fn failures(&self) -> impl Iterator<Item = (usize, &String)> {
        self.orders.iter().flat_map(|o| o.failures.iter().map(move |f| (o.n, f)))
    }

    pub fn summary(&self) -> String {
        let mut s = format!("orders {}..={}\n", self.n_min, self.n_max);
        for o in &self.orders {
            let margins: Vec<String> = o.families.iter().map(|f| format!("{} {:+.6}", f.family, f.margin)).collect();
            s.push_str(&format!(
                "n = {:>2}: {} | f(n-2) = {} | {}\n",
                o.n,
                margins.join(", "),
                o.f_at_n_minus_2,
                if o.failures.is_empty() { "ok".to_string() } else { o.failures.join("; ") }
            ));
        }
        s.push_str(if self.all_hold { "all checks hold\n" } else { "SOME CHECKS FAILED\n" });
        s
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn distinct(values: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &v in values {
        if !out.iter().any(|&w| (w - v).abs() <= tol) {
            out.push(v);
        }
    }
    out
}

fn check_family(
    family: &'static str,
    n: usize,
    graph: SignedGraph,
    partition: VertexPartition,
    written: QuotientMatrix,
    expected: IntPolynomial,
    below: bool,
    with_residual: bool,
) -> Result<FamilyCheck> {
    let q = equitable_quotient(&graph, &partition)?;
    let char_poly = written.char_poly()?;
    let index = eigenvalues(&graph).index();
    let quotient_index = written.eigenvalues()?.first().copied().unwrap_or(0.0);
    let margin = index - (n as f64 - 2.0);
    let comparison_holds = if below { margin <= -STRICT_MARGIN } else { margin >= STRICT_MARGIN };
    let (residual_eigenvalues, residual_in_minus_one_zero) = if with_residual {
        let res = block_shift_residual(&graph, &partition)?;
        let ev = distinct(&symmetric_eigenvalues(&res, n), RESIDUAL_TOL);
        let ok = ev.iter().all(|&x| x.abs() <= RESIDUAL_TOL || (x + 1.0).abs() <= RESIDUAL_TOL);
        (Some(ev.into_iter().map(round_sig).collect()), Some(ok))
    } else {
        (None, None)
    };
    Ok(FamilyCheck {
        family,
        quotient_matches_construction: q == written,
        char_poly_matches: char_poly == expected,
        char_poly,
        quotient_contained: quotient_containment_check(&graph, &written),
        index: round_sig(index),
        quotient_index: round_sig(quotient_index),
        margin: round_sig(margin),
        comparison_holds,
        residual_eigenvalues,
        residual_in_minus_one_zero,
    })
}

fn probes(name: &'static str, p: &IntPolynomial, n: i64) -> Vec<SignProbe> {
    // (point, label, expected sign positive)
    let points = [
        (rat(-2, 1), "-2".to_string(), true),
        (rat(-6, 5), "-6/5".to_string(), false),
        (rat(0, 1), "0".to_string(), true),
        (rat(n - 3, 1), format!("{}", n - 3), false),
        (rat(n - 2, 1), format!("{}", n - 2), true),
    ];
    points
        .into_iter()
        .map(|(x, at, positive)| {
            let v = p.evaluate(&x);
            let holds = if positive { v.is_positive() } else { v.is_negative() };
            SignProbe { polynomial: name, at, value: v.to_string(), expected_positive: positive, holds }
        })
        .collect()
}

pub fn verify_lemma22_order(n: usize) -> Result<Lemma22Order> {
    let ni = n as i64;
    let families = vec![
        check_family(
            "gamma1",
            n,
            gamma1(n)?,
            gamma1_partition(n)?,
            gamma1_quotient(n)?,
            gamma1_quotient_charpoly(ni),
            true,
            true,
        )?,
        check_family(
            "gamma2",
            n,
            gamma2(n)?,
            gamma2_partition(n)?,
            gamma2_quotient(n)?,
            gamma2_quotient_charpoly(ni),
            true,
            true,
        )?,
        check_family(
            "gamma3",
            n,
            gamma3(n)?,
            gamma3_partition(n)?,
            gamma3_quotient(n)?,
            gamma3_quotient_charpoly(ni),
            false,
            false,
        )?,
    ];
    let f_val = gamma3_quotient_charpoly(ni).evaluate_int(ni - 2);
    let f_identity_holds = f_val == BigInt::from(1 - ni);
    let mut sign_probes = probes("gamma1", &gamma1_quotient_charpoly(ni), ni);
    sign_probes.extend(probes("gamma2", &gamma2_quotient_charpoly(ni), ni));

    let mut failures = Vec::new();
    for f in &families {
        if !f.quotient_matches_construction {
            failures.push(format!("{}: quotient of construction differs from written matrix", f.family));
        }
        if !f.char_poly_matches {
            failures.push(format!("{}: characteristic polynomial {} differs", f.family, f.char_poly));
        }
        if !f.quotient_contained {
            failures.push(format!("{}: quotient eigenvalues not contained in spectrum", f.family));
        }
        if !f.comparison_holds {
            failures.push(format!("{}: index comparison with n-2 fails (margin {})", f.family, f.margin));
        }
        if f.residual_in_minus_one_zero == Some(false) {
            failures.push(format!("{}: block-shift residual has eigenvalues outside {{-1, 0}}", f.family));
        }
        if (f.index - f.quotient_index).abs() > 1e-8 && f.family != "gamma3" {
            failures.push(format!("{}: index differs from quotient index", f.family));
        }
    }
    if !f_identity_holds {
        failures.push(format!("f(n-2) = {f_val}, expected {}", 1 - ni));
    }
    for p in sign_probes.iter().filter(|p| !p.holds) {
        failures.push(format!(
            "{} at {} is {}, expected {}",
            p.polynomial,
            p.at,
            p.value,
            if p.expected_positive { "> 0" } else { "< 0" }
        ));
    }
    Ok(Lemma22Order { n, families, f_at_n_minus_2: f_val.to_string(), f_identity_holds, sign_probes, failures })
}

pub fn verify_lemma22(n_min: usize, n_max: usize) -> Result<Lemma22Report> {
    if n_min < 7 || n_min > n_max {
        return Err(Error::InvalidParameter(format!("need 7 <= n_min <= n_max (got {n_min}, {n_max})")));
    }
    let orders = (n_min..=n_max).map(verify_lemma22_order).collect::<Result<Vec<_>>>()?;
    let all_hold = orders.iter().all(|o| o.failures.is_empty());
    Ok(Lemma22Report { schema_version: SCHEMA_VERSION, n_min, n_max, orders, all_hold })
}

/// Exact sign of `p` at a rational point: -1, 0 or 1.
pub fn exact_sign(p: &IntPolynomial, num: i64, den: i64) -> i32 {
    let v = p.evaluate(&rat(num, den));
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_ranges() {
        assert!(verify_lemma22(6, 8).is_err());
        assert!(verify_lemma22(9, 8).is_err());
    }

    #[test]
    fn order_nine_holds() {
        let o = verify_lemma22_order(9).unwrap();
        assert!(o.failures.is_empty(), "{:?}", o.failures);
        assert_eq!(o.f_at_n_minus_2, "-8");
    }

    #[test]
    fn g_at_seven() {
        let g = gamma1_quotient_charpoly(7);
        assert_eq!(exact_sign(&g, 5, 1), 1);
        assert_eq!(exact_sign(&g, 4, 1), -1);
        assert_eq!(g.evaluate_int(4), BigInt::from(-410));
    }
}
