//! The fusion-category layer for `C(g, q, l)`: alcove label sets, q-numbers
//! at `q = zeta_2l`, exact Frobenius–Perron dimensions, pointedness and the
//! weak-integrality classifier with its totient bound.

use crate::cyclo::CycloNumber;
use crate::laurent::qnumber_poly;
use crate::rootdata::{Algebra, Root, RootKind, RootSystem, Weight};
use crate::{euler_phi, fusion, Error, Int, Rat, RatLaurent, Result};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One category `C(g, q, l)` with the principal specialisation
/// `q = zeta_(2l)`, so `q^2` is a primitive l-th root of unity.
#[derive(Debug, Clone)]
pub struct CategorySpec {
    pub algebra: Algebra,
    pub ell: u64,
    pub q: CycloNumber,
}

impl CategorySpec {
    /// Fails with [`Error::EmptyAlcove`] when `l` is too small for the label
    /// set to contain the trivial object.
    pub fn new(algebra: Algebra, ell: u64) -> Result<CategorySpec> {
        if ell < 2 {
            return Err(Error::EmptyAlcove(ell));
        }
        let spec = CategorySpec { algebra, ell, q: CycloNumber::root_of_unity(2 * ell, 1) };
        let rs = spec.rs();
        if rs.pairing(&rs.rho, spec.theta(), RootKind::Root) >= ell as i64 {
            return Err(Error::EmptyAlcove(ell));
        }
        Ok(spec)
    }

    pub fn rs(&self) -> &'static RootSystem {
        RootSystem::get(self.algebra)
    }

    /// The alcove (and truncation) wall is `theta_0` when `m | l`, `theta_1`
    /// otherwise.
    pub fn uses_theta0(&self) -> bool {
        self.ell % (self.rs().m as u64) == 0
    }

    pub fn theta(&self) -> &'static Root {
        let rs = self.rs();
        if self.uses_theta0() {
            rs.theta0()
        } else {
            rs.theta1()
        }
    }

    /// `q^e` as an exact root of unity.
    pub fn q_power(&self, e: i64) -> CycloNumber {
        CycloNumber::root_of_unity(2 * self.ell, e)
    }

    /// `q^t` for a rational exponent `t`, via the principal choice
    /// `zeta_2l^(p/d) = zeta_(2ld)^p`.
    pub fn q_rat_power(&self, t: &Rat) -> Result<CycloNumber> {
        let d = t.denom().to_u64().ok_or_else(|| Error::BadExponent(t.to_string()))?;
        let p = t.numer().to_i64().ok_or_else(|| Error::BadExponent(t.to_string()))?;
        Ok(CycloNumber::root_of_unity(2 * self.ell * d, p))
    }

    /// The quantum integer `[n] = (q^n - q^(-n)) / (q - q^(-1))`, evaluated
    /// through its Laurent expansion so it is defined for every `n`.
    pub fn qnumber(&self, n: i64) -> CycloNumber {
        let sign = if n < 0 { -1 } else { 1 };
        let n = n.abs();
        let terms: Vec<(i64, i64)> = (0..n).map(|j| (n - 1 - 2 * j, sign)).collect();
        CycloNumber::sum_of_roots(2 * self.ell, &terms)
    }

    /// Level of a label against the truncation wall: `<w + rho, theta>`.
    pub fn shifted_level(&self, w: &Weight) -> i64 {
        let rs = self.rs();
        rs.pairing(&w.add(&rs.rho), self.theta(), RootKind::Root)
    }

    pub fn in_alcove(&self, w: &Weight) -> bool {
        w.is_dominant() && self.shifted_level(w) < self.ell as i64
    }

    /// All labels of simple objects, in graded-lexicographic order.
    pub fn alcove(&self) -> Vec<Weight> {
        let rs = self.rs();
        let theta = self.theta();
        let coeffs: Vec<i64> = (1..=rs.rank)
            .map(|i| rs.pairing(&Weight::fundamental(rs.rank, i), theta, RootKind::Root))
            .collect();
        let budget = self.ell as i64 - 1 - rs.pairing(&rs.rho, theta, RootKind::Root);
        debug_assert!(budget >= 0);
        let mut out = Vec::new();
        let mut current = vec![0i64; rs.rank];
        enumerate_alcove(&coeffs, budget, 0, &mut current, &mut out);
        out.sort_by_key(Weight::grlex_key);
        out
    }

    pub fn rank(&self) -> usize {
        self.alcove().len()
    }

    /// Exact Frobenius–Perron dimension of the simple object labelled by
    /// `lambda`: the product of q-number ratios over positive roots when
    /// `m | l`, over positive coroots otherwise.
    pub fn fpdim(&self, lambda: &Weight) -> Result<CycloNumber> {
        if !self.in_alcove(lambda) {
            return Err(Error::OutsideAlcove(lambda.clone()));
        }
        let rs = self.rs();
        let kind = if self.uses_theta0() { RootKind::Root } else { RootKind::Coroot };
        let shifted = lambda.add(&rs.rho);
        let mut num = CycloNumber::one();
        let mut den = CycloNumber::one();
        for root in &rs.positive_roots {
            num = num.mul_unreduced(&self.qnumber(rs.pairing(&shifted, root, kind)));
            den = den.mul_unreduced(&self.qnumber(rs.pairing(&rs.rho, root, kind)));
        }
        Ok(&num * &den.inverse()?)
    }

    /// All labels with their FP-dimensions.
    pub fn fpdims(&self) -> Result<Vec<(Weight, CycloNumber)>> {
        self.alcove().into_iter().map(|w| self.fpdim(&w).map(|d| (w, d))).collect()
    }

    /// Weak integrality: `FPdim(X)^2` is a rational integer for every simple
    /// object. Returns the first failing label as witness. The equivalent
    /// total-sum criterion is evaluated too and any disagreement is reported
    /// as an internal error.
    pub fn is_weakly_integral(&self) -> Result<(bool, Option<Weight>)> {
        let dims = self.fpdims()?;
        let mut witness = None;
        let mut total = CycloNumber::zero();
        for (w, d) in &dims {
            let sq = d * d;
            total = &total + &sq;
            if witness.is_none() && sq.as_integer().is_none() {
                witness = Some(w.clone());
            }
        }
        let by_objects = witness.is_none();
        let by_sum = total.as_integer().is_some();
        if by_objects != by_sum {
            return Err(Error::Internal(format!(
                "weak-integrality criteria disagree for {} at ell={}: per-object {} vs total {}",
                self.algebra, self.ell, by_objects, by_sum
            )));
        }
        Ok((by_objects, witness))
    }

    /// Pointed: every simple object has FP-dimension exactly 1.
    pub fn is_pointed(&self) -> Result<bool> {
        for (_, d) in self.fpdims()? {
            if !d.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// CLI-facing document for this category.
    pub fn document(&self) -> Result<serde_json::Value> {
        let dims = self.fpdims()?;
        let (weakly_integral, _) = self.is_weakly_integral()?;
        let pointed = self.is_pointed()?;
        Ok(serde_json::json!({
            "algebra": self.algebra,
            "ell": self.ell,
            "rank": dims.len(),
            "labels": dims.iter().map(|(w, _)| w.clone()).collect::<Vec<_>>(),
            "fpdims": dims.iter().map(|(_, d)| d.clone()).collect::<Vec<_>>(),
            "weakly_integral": weakly_integral,
            "pointed": pointed,
        }))
    }
}

fn enumerate_alcove(
    coeffs: &[i64],
    budget: i64,
    idx: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Weight>,
) {
    if idx == coeffs.len() {
        out.push(Weight(current.clone()));
        return;
    }
    let step = coeffs[idx];
    debug_assert!(step > 0);
    let mut a = 0;
    while a * step <= budget {
        current[idx] = a;
        enumerate_alcove(coeffs, budget - a * step, idx + 1, current, out);
        a += 1;
    }
    current[idx] = 0;
}

/// Residue condition selecting a row of the non-integrality witness table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityCase {
    All,
    EvenEll,
    OddEll,
    DivisibleBy3,
    NotDivisibleBy3,
}

impl ParityCase {
    pub fn matches(self, ell: u64) -> bool {
        match self {
            ParityCase::All => true,
            ParityCase::EvenEll => ell % 2 == 0,
            ParityCase::OddEll => ell % 2 == 1,
            ParityCase::DivisibleBy3 => ell % 3 == 0,
            ParityCase::NotDivisibleBy3 => ell % 3 != 0,
        }
    }
}

/// One row of the witness table: an object `V_nu` inside
/// `V_mu (x) V_mu-dual` whose FP-dimension is the stated q-number ratio.
#[derive(Debug, Clone)]
pub struct WitnessRow {
    pub parity: ParityCase,
    pub nu: Weight,
    pub mu: Weight,
    pub numerator_qargs: Vec<i64>,
    pub denominator_qargs: Vec<i64>,
}

/// Witness data per algebra: adjoint-subcategory objects whose FP-dimension
/// is generically non-integral.
pub fn witness_rows(algebra: Algebra) -> Vec<WitnessRow> {
    let fw = |i| Weight::fundamental(algebra.rank(), i);
    match algebra {
        Algebra::E6 => vec![WitnessRow {
            parity: ParityCase::All,
            nu: fw(2),
            mu: fw(1),
            numerator_qargs: vec![8, 9, 13],
            denominator_qargs: vec![4, 3],
        }],
        Algebra::E7 => vec![WitnessRow {
            parity: ParityCase::All,
            nu: fw(1),
            mu: fw(7),
            numerator_qargs: vec![12, 14, 19],
            denominator_qargs: vec![4, 6],
        }],
        Algebra::E8 => vec![WitnessRow {
            parity: ParityCase::All,
            nu: fw(8),
            mu: fw(8),
            numerator_qargs: vec![20, 24, 31],
            denominator_qargs: vec![6, 10],
        }],
        Algebra::F4 => vec![
            WitnessRow {
                parity: ParityCase::EvenEll,
                nu: fw(1),
                mu: fw(1),
                numerator_qargs: vec![3, 8, 13, 18],
                denominator_qargs: vec![4, 6, 9],
            },
            WitnessRow {
                parity: ParityCase::OddEll,
                nu: fw(1),
                mu: fw(1),
                numerator_qargs: vec![13, 8],
                denominator_qargs: vec![4],
            },
        ],
        Algebra::G2 => vec![
            WitnessRow {
                parity: ParityCase::DivisibleBy3,
                nu: fw(1),
                mu: fw(1),
                numerator_qargs: vec![2, 7, 12],
                denominator_qargs: vec![4, 6],
            },
            WitnessRow {
                parity: ParityCase::NotDivisibleBy3,
                nu: fw(1),
                mu: fw(1),
                numerator_qargs: vec![7],
                denominator_qargs: vec![],
            },
        ],
    }
}

impl WitnessRow {
    /// Evaluate the row's q-number expression at the given specialisation.
    pub fn evaluate(&self, spec: &CategorySpec) -> Result<CycloNumber> {
        let mut num = CycloNumber::one();
        for &n in &self.numerator_qargs {
            num = num.mul_unreduced(&spec.qnumber(n));
        }
        let mut den = CycloNumber::one();
        for &n in &self.denominator_qargs {
            den = den.mul_unreduced(&spec.qnumber(n));
        }
        Ok(&num * &den.inverse()?)
    }
}

/// Output of the totient-bound procedure for one witness row.
#[derive(Debug, Clone, Serialize)]
pub struct TotientBound {
    pub algebra: Algebra,
    pub parity: ParityCase,
    /// Degree of the integer polynomial relation satisfied by `q` when the
    /// witness FP-dimension is an integer `k`.
    pub degree: u64,
    /// Largest `l` in the row's residue class with `phi(2l) <= degree`.
    pub max_ell: u64,
    /// Coefficients (ascending, constant term first) of the k-free part of
    /// the relation; the unknown integer `k` enters as `-k q^(k_exponent)`.
    #[serde(serialize_with = "serialize_int_vec")]
    pub relation: Vec<Int>,
    pub k_exponent: u64,
}

fn serialize_int_vec<S: serde::Serializer>(
    v: &[Int],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

/// Clear denominators in a witness row's FP-dimension expression: the ratio
/// of q-number products is an exact Laurent polynomial `R(q)` (a quantum
/// dimension), so `R(q) = k` becomes the integer relation
/// `q^M R(q) - k q^M = 0` with `M = deg_max R`. The minimal polynomial of
/// the primitive 2l-th root `q` divides it, capping `phi(2l)` and hence `l`.
pub fn totient_bound(algebra: Algebra, parity: ParityCase) -> Result<TotientBound> {
    let row = witness_rows(algebra)
        .into_iter()
        .find(|r| r.parity == parity)
        .ok_or_else(|| Error::BadExponent(format!("no witness row for {algebra} / {parity:?}")))?;
    let mut num: RatLaurent = RatLaurent::constant(Rat::one());
    for &n in &row.numerator_qargs {
        num = &num * &qnumber_poly(n);
    }
    let mut den: RatLaurent = RatLaurent::constant(Rat::one());
    for &n in &row.denominator_qargs {
        den = &den * &qnumber_poly(n);
    }
    let ratio = num
        .div_exact(&den)
        .ok_or_else(|| Error::Internal("witness ratio is not a Laurent polynomial".into()))?;
    let max = ratio.max_deg();
    debug_assert_eq!(ratio.min_deg(), -max, "quantum dimensions are palindromic");
    let degree = 2 * max as u64;
    let relation: Vec<Int> = (0..=2 * max)
        .map(|d| {
            let c = ratio.coeff(d - max);
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect();
    // phi(n) >= sqrt(n/2), so phi(2l) <= D forces l <= D^2.
    let cap = degree * degree + 6;
    let max_ell = (2..=cap)
        .filter(|&l| parity.matches(l) && euler_phi(2 * l) <= degree)
        .max()
        .ok_or_else(|| Error::Internal("empty totient scan".into()))?;
    Ok(TotientBound { algebra, parity, degree, max_ell, relation, k_exponent: max as u64 })
}

/// A weakly integral category found by the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeaklyIntegralCase {
    pub ell: u64,
    pub rank: usize,
    pub pointed: bool,
}

/// Totient-bound maxima per algebra, computed once.
fn row_bounds(algebra: Algebra) -> &'static Vec<(WitnessRow, u64)> {
    use std::sync::OnceLock;
    static BOUNDS: OnceLock<std::collections::HashMap<Algebra, Vec<(WitnessRow, u64)>>> =
        OnceLock::new();
    BOUNDS
        .get_or_init(|| {
            Algebra::ALL
                .iter()
                .map(|&alg| {
                    let rows = witness_rows(alg)
                        .into_iter()
                        .map(|row| {
                            let bound = totient_bound(alg, row.parity).expect("bound").max_ell;
                            (row, bound)
                        })
                        .collect();
                    (alg, rows)
                })
                .collect()
        })
        .get(&algebra)
        .unwrap()
}

/// Weak integrality decided through the witness filter: beyond the totient
/// bound, or with a non-integral witness surviving inside the truncated
/// `V_mu (x) V_mu-dual`, the category cannot be weakly integral and the full
/// alcove scan is skipped.
pub fn is_weakly_integral_filtered(spec: &CategorySpec) -> Result<bool> {
    let (row, bound) =
        row_bounds(spec.algebra).iter().find(|(r, _)| r.parity.matches(spec.ell)).unwrap();
    if spec.ell > *bound {
        return Ok(false);
    }
    if spec.in_alcove(&row.mu) && spec.in_alcove(&row.nu) {
        let dual = spec.rs().dual_weight(&row.mu);
        let prod = fusion::tensor_truncated(
            spec,
            &row.mu,
            &dual,
            crate::freudenthal::DEFAULT_SIZE_BOUND,
        )?;
        let in_adjoint = prod.get(&row.nu).copied().unwrap_or(0) > 0;
        if in_adjoint && spec.fpdim(&row.nu)?.as_integer().is_none() {
            return Ok(false);
        }
    }
    Ok(spec.is_weakly_integral()?.0)
}

/// Scan every `l` up to the totient bound of the matching residue class and
/// return the weakly integral categories of rank at least 2.
///
/// Per `l`, the witness object is checked first: when `V_nu` survives inside
/// the truncated `V_mu (x) V_mu-dual` (so it lies in the adjoint
/// subcategory) and its FP-dimension is not an integer, the category cannot
/// be weakly integral and the full alcove scan is skipped.
pub fn classify_weakly_integral(algebra: Algebra) -> Result<Vec<WeaklyIntegralCase>> {
    let scan_max = row_bounds(algebra).iter().map(|(_, b)| *b).max().unwrap();
    let mut cases: Vec<WeaklyIntegralCase> = (2..=scan_max)
        .into_par_iter()
        .map(|ell| classify_one(algebra, ell))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    cases.sort_by_key(|c| c.ell);
    Ok(cases)
}

fn classify_one(algebra: Algebra, ell: u64) -> Result<Option<WeaklyIntegralCase>> {
    let Ok(spec) = CategorySpec::new(algebra, ell) else {
        return Ok(None);
    };
    let rank = spec.rank();
    if rank < 2 || !is_weakly_integral_filtered(&spec)? {
        return Ok(None);
    }
    Ok(Some(WeaklyIntegralCase { ell, rank, pointed: spec.is_pointed()? }))
}
