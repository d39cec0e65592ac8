//! Closed-form upper bounds on `μ̂_{k,n}` and on Rider's measure, one per
//! class of signatures.
//!
//! Every bound here holds for all (infinitely many) signatures in its class;
//! the enumeration in [`super::exact_sup`] only cross-checks them.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinatorics::{binomial, Partition, Signature};
use crate::error::{Error, Result};
use crate::rational::{self, ratio, Rational};
use crate::spectra::mu_vanishes;

/// Signature classes used to bound a single `μ̂_{k,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    /// `d = 0`, `λ_1 ≥ 2`.
    D0L1Ge2,
    /// `d = 0`, `λ_1 = 1`, `λ ≠ (1)`.
    D0L1Eq1,
    /// `d ≥ 1`, `λ_k ≥ 2`.
    DGe1LkGe2,
    /// `d ≥ 1`, `λ_k = λ_1 = 1`, `λ ≠ (1^{n-1})`.
    DGe1Lk1L1Eq1,
    /// `d ≥ 1`, `λ_k = 1`, `λ_1 ≥ 2`, `λ_{n-1} = 0`.
    DGe1Lk1L1Ge2Ln1Eq0,
    /// `d ≥ 1`, `λ_k = 1`, `λ_1 ≥ 2`, `λ_{n-1} ≥ 1`.
    DGe1Lk1L1Ge2Ln1Ge1,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::D0L1Ge2,
        CaseId::D0L1Eq1,
        CaseId::DGe1LkGe2,
        CaseId::DGe1Lk1L1Eq1,
        CaseId::DGe1Lk1L1Ge2Ln1Eq0,
        CaseId::DGe1Lk1L1Ge2Ln1Ge1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CaseId::D0L1Ge2 => "D0_L1GE2",
            CaseId::D0L1Eq1 => "D0_L1EQ1",
            CaseId::DGe1LkGe2 => "DGE1_LKGE2",
            CaseId::DGe1Lk1L1Eq1 => "DGE1_LK1_L1EQ1",
            CaseId::DGe1Lk1L1Ge2Ln1Eq0 => "DGE1_LK1_L1GE2_LN1EQ0",
            CaseId::DGe1Lk1L1Ge2Ln1Ge1 => "DGE1_LK1_L1GE2_LN1GE1",
        }
    }

    pub fn predicate(self) -> &'static str {
        match self {
            CaseId::D0L1Ge2 => "d = 0, lambda_1 >= 2",
            CaseId::D0L1Eq1 => "d = 0, lambda_1 = 1, lambda != (1)",
            CaseId::DGe1LkGe2 => "d >= 1, lambda_k >= 2",
            CaseId::DGe1Lk1L1Eq1 => "d >= 1, lambda_k = lambda_1 = 1, lambda != (1^(n-1))",
            CaseId::DGe1Lk1L1Ge2Ln1Eq0 => "d >= 1, lambda_k = 1, lambda_1 >= 2, lambda_(n-1) = 0",
            CaseId::DGe1Lk1L1Ge2Ln1Ge1 => "d >= 1, lambda_k = 1, lambda_1 >= 2, lambda_(n-1) >= 1",
        }
    }

    pub fn needs_positive_d(self) -> bool {
        !matches!(self, CaseId::D0L1Ge2 | CaseId::D0L1Eq1)
    }
}

/// Which family of bounds applies to `μ_{k,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// `n - k ≤ k` (needed only when `d ≥ 1`).
    Even,
    /// `n = 2k + 1` with `k > 1`: the lower measure of an odd mixture.
    Odd,
}

impl Variant {
    pub fn id(self) -> &'static str {
        match self {
            Variant::Even => "even",
            Variant::Odd => "odd",
        }
    }
}

/// Outcome of [`analytic_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Trivial irrep or a member of `S_n = {σ_n, σ̄_n}`.
    InS,
    /// A vanishing rule applies.
    Zero,
    Case {
        case: CaseId,
        variant: Variant,
        value: Rational,
    },
}

impl Bound {
    /// The numeric bound, with `InS` mapped to `None`.
    pub fn value(&self) -> Option<Rational> {
        match self {
            Bound::InS => None,
            Bound::Zero => Some(Rational::zero()),
            Bound::Case { value, .. } => Some(value.clone()),
        }
    }
}

fn r(num: usize, den: usize) -> Rational {
    ratio(num as i64, den as i64)
}

/// Bound value of `case` for `μ_{k,n}` under `variant`.
pub fn case_value(n: usize, k: usize, case: CaseId, variant: Variant) -> Rational {
    let m = n - k;
    match (case, variant) {
        (CaseId::D0L1Ge2 | CaseId::DGe1LkGe2, _) => r(m * (m + 1), n * (n + 1)),
        (CaseId::D0L1Eq1 | CaseId::DGe1Lk1L1Eq1 | CaseId::DGe1Lk1L1Ge2Ln1Eq0, _) => {
            r(m * (m - 1), n * (n - 1))
        }
        (CaseId::DGe1Lk1L1Ge2Ln1Ge1, Variant::Even) => r(k * m, (n + 1) * (n - 1)),
        (CaseId::DGe1Lk1L1Ge2Ln1Ge1, Variant::Odd) => r((k + 1) * m, (n + 1) * (n - 1)),
    }
}

fn check_variant(n: usize, k: usize, d: i64, variant: Variant) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "(k, n)",
            detail: format!("need 1 <= k < n, got k={k}, n={n}"),
        });
    }
    match variant {
        Variant::Even if d >= 1 && n - k > k => Err(Error::OutOfRange {
            what: "even variant",
            detail: format!("needs n - k <= k when d >= 1, got n={n}, k={k}"),
        }),
        Variant::Odd if n != 2 * k + 1 || n <= 3 => Err(Error::OutOfRange {
            what: "odd variant",
            detail: format!("needs n = 2k + 1 > 3, got n={n}, k={k}"),
        }),
        _ => Ok(()),
    }
}

/// True for the trivial irrep, `σ_n` and `σ̄_n`, given in `(λ, d)` form.
pub fn in_s(n: usize, lambda: &Partition, d: i64) -> bool {
    (lambda.is_empty() && d == 0)
        || (d == 0 && lambda.parts() == [1])
        || (d == 1 && lambda.len() == n - 1 && lambda.first() == 1)
}

/// Which case a nonvanishing, non-`S` signature falls in.
pub fn classify(n: usize, k: usize, lambda: &Partition, d: i64) -> CaseId {
    if d == 0 {
        return if lambda.first() >= 2 {
            CaseId::D0L1Ge2
        } else {
            CaseId::D0L1Eq1
        };
    }
    if lambda.row(k) >= 2 {
        CaseId::DGe1LkGe2
    } else if lambda.first() == 1 {
        CaseId::DGe1Lk1L1Eq1
    } else if lambda.row(n - 1) == 0 {
        CaseId::DGe1Lk1L1Ge2Ln1Eq0
    } else {
        CaseId::DGe1Lk1L1Ge2Ln1Ge1
    }
}

/// Upper bound on `μ̂_{k,n}(λ, d)`.
pub fn analytic_bound(
    n: usize,
    k: usize,
    lambda: &Partition,
    d: i64,
    variant: Variant,
) -> Result<Bound> {
    check_variant(n, k, d, variant)?;
    if lambda.len() >= n {
        return Err(Error::IncompatibleSignature(format!(
            "lambda={lambda} has too many parts for U({n})"
        )));
    }
    if in_s(n, lambda, d) {
        return Ok(Bound::InS);
    }
    if mu_vanishes(k, n, lambda, d) {
        return Ok(Bound::Zero);
    }
    let case = classify(n, k, lambda, d);
    Ok(Bound::Case {
        case,
        variant,
        value: case_value(n, k, case, variant),
    })
}

/// Classes of signatures used to bound the odd mixture
/// `½(μ_{k,n} + μ_{k+1,n})` with `n = 2k + 1`. Both measures are classified
/// jointly since their case predicates look at different rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JointClass {
    /// `d = 0`, `λ_1 ≥ 2`.
    FlatWide,
    /// `d = 0`, `λ_1 = 1`.
    FlatColumn,
    /// Both coefficients vanish.
    Vanishing,
    /// `d ≥ 1`, `λ_{k+1} ≠ d`: the upper coefficient vanishes; the lower one
    /// falls in the given case.
    UpperVanishes(CaseId),
    /// `λ_{k+1} = d ≥ 2`.
    Deep,
    /// `λ_{k+1} = d = 1`, `λ_k ≥ 2`, `λ_{n-1} = 0`.
    ShallowWideOpen,
    /// `λ_{k+1} = d = 1`, `λ_k ≥ 2`, `λ_{n-1} ≥ 1`.
    ShallowWideFull,
    /// `λ_k = λ_{k+1} = d = 1`, `λ_1 = 1`.
    ShallowColumn,
    /// `λ_k = λ_{k+1} = d = 1`, `λ_1 ≥ 2`, `λ_{n-1} = 0`.
    ShallowHookOpen,
    /// `λ_k = λ_{k+1} = d = 1`, `λ_1 ≥ 2`, `λ_{n-1} ≥ 1`.
    ShallowHookFull,
}

impl JointClass {
    pub fn all() -> Vec<JointClass> {
        let mut v = alloc::vec![JointClass::FlatWide, JointClass::FlatColumn, JointClass::Vanishing];
        v.extend(
            CaseId::ALL
                .iter()
                .filter(|c| c.needs_positive_d())
                .map(|&c| JointClass::UpperVanishes(c)),
        );
        v.extend([
            JointClass::Deep,
            JointClass::ShallowWideOpen,
            JointClass::ShallowWideFull,
            JointClass::ShallowColumn,
            JointClass::ShallowHookOpen,
            JointClass::ShallowHookFull,
        ]);
        v
    }

    pub fn id(self) -> alloc::string::String {
        match self {
            JointClass::FlatWide => "FLAT_WIDE".into(),
            JointClass::FlatColumn => "FLAT_COLUMN".into(),
            JointClass::Vanishing => "VANISHING".into(),
            JointClass::UpperVanishes(c) => format!("UPPER_VANISHES/{}", c.id()),
            JointClass::Deep => "DEEP".into(),
            JointClass::ShallowWideOpen => "SHALLOW_WIDE_OPEN".into(),
            JointClass::ShallowWideFull => "SHALLOW_WIDE_FULL".into(),
            JointClass::ShallowColumn => "SHALLOW_COLUMN".into(),
            JointClass::ShallowHookOpen => "SHALLOW_HOOK_OPEN".into(),
            JointClass::ShallowHookFull => "SHALLOW_HOOK_FULL".into(),
        }
    }

    /// Bound on `ν̂_n` over the class, for odd `n ≥ 5`.
    pub fn bound(self, n: usize) -> Rational {
        let k = (n - 1) / 2;
        let upper = k + 1;
        let lo = |c| case_value(n, k, c, Variant::Odd);
        let hi = |c| case_value(n, upper, c, Variant::Even);
        let half = rational::half();
        match self {
            JointClass::FlatWide => half * (lo(CaseId::D0L1Ge2) + hi(CaseId::D0L1Ge2)),
            JointClass::FlatColumn => half * (lo(CaseId::D0L1Eq1) + hi(CaseId::D0L1Eq1)),
            JointClass::Vanishing => Rational::zero(),
            JointClass::UpperVanishes(c) => half * lo(c),
            JointClass::Deep => half * (lo(CaseId::DGe1LkGe2) + hi(CaseId::DGe1LkGe2)),
            JointClass::ShallowWideOpen => {
                half * (shallow_wide_lower(n) + hi(CaseId::DGe1Lk1L1Ge2Ln1Eq0))
            }
            JointClass::ShallowWideFull => {
                half * (shallow_wide_lower(n) + hi(CaseId::DGe1Lk1L1Ge2Ln1Ge1))
            }
            JointClass::ShallowColumn => {
                half * (lo(CaseId::DGe1Lk1L1Eq1) + hi(CaseId::DGe1Lk1L1Eq1))
            }
            JointClass::ShallowHookOpen => {
                half * (lo(CaseId::DGe1Lk1L1Ge2Ln1Eq0) + hi(CaseId::DGe1Lk1L1Ge2Ln1Eq0))
            }
            // ν̂ = [k·s_α(1^k) + (k+1)·s_α(1^{k+1})] / (2 s_λ(1^n)) with
            // α = (λ_1 - 1, …, λ_k - 1); maximized at α = (1).
            JointClass::ShallowHookFull => {
                ratio((n * n + 1) as i64, (4 * (n * n - 1)) as i64)
            }
        }
    }

    /// Class of a non-`S` signature of `U(n)`, `n = 2k + 1`.
    pub fn classify(n: usize, lambda: &Partition, d: i64) -> JointClass {
        let k = (n - 1) / 2;
        let upper = k + 1;
        let lower_zero = mu_vanishes(k, n, lambda, d);
        let upper_zero = mu_vanishes(upper, n, lambda, d);
        if lower_zero && upper_zero {
            return JointClass::Vanishing;
        }
        if d == 0 {
            return if lambda.first() >= 2 {
                JointClass::FlatWide
            } else {
                JointClass::FlatColumn
            };
        }
        if upper_zero {
            return JointClass::UpperVanishes(classify(n, k, lambda, d));
        }
        // λ_{k+1} = d and λ_{k+2} ≤ d ≤ λ_k from here on.
        if d >= 2 {
            return JointClass::Deep;
        }
        let open = lambda.row(n - 1) == 0;
        if lambda.row(k) >= 2 {
            if open {
                JointClass::ShallowWideOpen
            } else {
                JointClass::ShallowWideFull
            }
        } else if lambda.first() == 1 {
            JointClass::ShallowColumn
        } else if open {
            JointClass::ShallowHookOpen
        } else {
            JointClass::ShallowHookFull
        }
    }
}

/// Lower-measure bound when `λ_k ≥ 2` and every row below `k` is at most one:
/// the wide-case bound divided by the Catalan number `C_k`.
fn shallow_wide_lower(n: usize) -> Rational {
    let k = (n - 1) / 2;
    let catalan = binomial(2 * k as u64, k as u64) / (k as u64 + 1);
    case_value(n, k, CaseId::DGe1LkGe2, Variant::Odd) / rational::from_big(&catalan)
}

/// The `(k, variant)` pairs whose mixture is Rider's measure on `U(n)`.
pub fn rider_components(n: usize) -> Vec<(usize, Variant)> {
    if n.is_multiple_of(2) {
        alloc::vec![(n / 2, Variant::Even)]
    } else {
        alloc::vec![((n - 1) / 2, Variant::Odd), (n.div_ceil(2), Variant::Even)]
    }
}

/// Uniform bound `γ(n)` on `|ν̂_n(π)|` over nontrivial `π ∉ S_n`.
pub fn gamma_analytic(n: usize) -> Result<Rational> {
    if n < 4 {
        return Err(Error::Refused(format!("requires n > 3, got n={n}")));
    }
    let max = if n.is_multiple_of(2) {
        CaseId::ALL
            .iter()
            .map(|&c| case_value(n, n / 2, c, Variant::Even))
            .max()
    } else {
        JointClass::all().into_iter().map(|c| c.bound(n)).max()
    };
    Ok(max.expect("non-empty class list"))
}

/// Bound on `ν̂_n` at one signature: the class bound (joint for odd `n`).
pub fn rider_bound(n: usize, sig: &Signature) -> Option<Rational> {
    if in_s(n, sig.lambda(), sig.d()) {
        return None;
    }
    if n.is_multiple_of(2) {
        let k = n / 2;
        if mu_vanishes(k, n, sig.lambda(), sig.d()) {
            return Some(Rational::zero());
        }
        Some(case_value(n, k, classify(n, k, sig.lambda(), sig.d()), Variant::Even))
    } else {
        Some(JointClass::classify(n, sig.lambda(), sig.d()).bound(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn bound_examples() {
        let b = analytic_bound(4, 2, &p(&[2]), 0, Variant::Even).unwrap();
        assert_eq!(
            b,
            Bound::Case {
                case: CaseId::D0L1Ge2,
                variant: Variant::Even,
                value: ratio(3, 10)
            }
        );
        assert_eq!(
            analytic_bound(4, 2, &p(&[3, 1, 1]), 2, Variant::Even).unwrap(),
            Bound::Zero
        );
        assert_eq!(
            analytic_bound(5, 2, &p(&[2]), 0, Variant::Odd).unwrap().value(),
            Some(ratio(2, 5))
        );
        assert_eq!(analytic_bound(4, 2, &p(&[1]), 0, Variant::Even).unwrap(), Bound::InS);
        assert_eq!(
            analytic_bound(4, 2, &p(&[1, 1, 1]), 1, Variant::Even).unwrap(),
            Bound::InS
        );
        assert_eq!(analytic_bound(4, 2, &Partition::empty(), 0, Variant::Even).unwrap(), Bound::InS);
    }

    #[test]
    fn variant_preconditions() {
        assert!(analytic_bound(5, 2, &p(&[2, 2]), 1, Variant::Even).is_err());
        assert!(analytic_bound(5, 2, &p(&[2]), 0, Variant::Even).is_ok());
        assert!(analytic_bound(3, 1, &p(&[1]), 1, Variant::Odd).is_err());
        assert!(analytic_bound(6, 2, &p(&[1]), 1, Variant::Odd).is_err());
    }

    #[test]
    fn even_case_values_at_four() {
        let vals: Vec<Rational> = CaseId::ALL
            .iter()
            .map(|&c| case_value(4, 2, c, Variant::Even))
            .collect();
        assert_eq!(
            vals,
            alloc::vec![
                ratio(3, 10),
                ratio(1, 6),
                ratio(3, 10),
                ratio(1, 6),
                ratio(1, 6),
                ratio(4, 15)
            ]
        );
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_analytic(4).unwrap(), ratio(3, 10));
        assert_eq!(gamma_analytic(5).unwrap(), ratio(3, 10));
        assert_eq!(gamma_analytic(10).unwrap(), ratio(3, 11));
        assert!(matches!(gamma_analytic(3), Err(Error::Refused(_))));
    }

    #[test]
    fn gamma_closed_forms() {
        for n in 4..=300usize {
            let g = gamma_analytic(n).unwrap();
            let expected = if n % 2 == 0 {
                ratio(n as i64 + 2, 4 * (n as i64 + 1))
            } else {
                ratio(n as i64 + 1, 4 * n as i64)
            };
            assert_eq!(g, expected, "n={n}");
            assert!(g > ratio(1, 4) && g < ratio(1, 2));
        }
    }

    #[test]
    fn joint_classification() {
        // n = 5: k = 2, upper = 3
        assert_eq!(JointClass::classify(5, &p(&[2]), 0), JointClass::FlatWide);
        assert_eq!(JointClass::classify(5, &p(&[2, 2, 2, 2]), 2), JointClass::Deep);
        assert_eq!(JointClass::classify(5, &p(&[2, 1, 1, 1]), 1), JointClass::ShallowHookFull);
        assert_eq!(JointClass::classify(5, &p(&[2, 2, 1]), 1), JointClass::ShallowWideOpen);
        assert_eq!(
            JointClass::classify(5, &p(&[1, 1]), 1),
            JointClass::UpperVanishes(CaseId::DGe1Lk1L1Eq1)
        );
        assert_eq!(JointClass::classify(5, &p(&[3]), 2), JointClass::Vanishing);
        assert_eq!(JointClass::ShallowHookFull.bound(5), ratio(13, 48));
    }
}
