//! Tensor-product decompositions: classical decompositions via the
//! Brauer–Klimyk procedure with symmetric/antisymmetric splitting of tensor
//! squares, and truncated fusion rules in `C(g, q, l)` via affine-Weyl
//! (Kac–Walton) reduction at level `l`.
//!
//! The affine reflection uses the same root (`theta_0` vs `theta_1`) as the
//! alcove definition for the given residue of `l` mod `m`, so the truncation
//! wall and the label set always match.

use crate::category::CategorySpec;
use crate::freudenthal::{weight_system, WeightSystem};
use crate::rootdata::{Algebra, RootKind, RootSystem, Weight};
use crate::{Error, Int, Result};
use num_traits::Zero;
use serde::Serialize;
#[allow(unused_imports)]
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// Position of a summand inside a tensor square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Symmetric,
    Antisymmetric,
    Unsplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiscardReason {
    Wall,
    Cancelled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub weight: Weight,
    pub mult: u64,
    pub parity: Parity,
}

/// A (possibly truncated) tensor decomposition with bookkeeping for what the
/// truncation removed.
#[derive(Debug, Clone, Serialize)]
pub struct FusionDecomposition {
    pub factors: (Weight, Weight),
    /// Sorted by graded-lex key of the weight.
    pub summands: Vec<Summand>,
    pub truncated: bool,
    /// Weights removed on the affine wall or cancelled by reflection.
    pub discarded: Vec<(Weight, DiscardReason)>,
}

impl FusionDecomposition {
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.summands.iter().filter(|s| &s.weight == w).map(|s| s.mult).sum()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.multiplicity(w) > 0
    }

    /// Total multiplicities ignoring parity.
    pub fn mult_map(&self) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            *out.entry(s.weight.clone()).or_insert(0) += s.mult;
        }
        out
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.mult_map().values().all(|&m| m == 1)
    }
}

type SquareCache = RwLock<HashMap<(Algebra, Weight), Arc<FusionDecomposition>>>;
type TruncSquareCache = RwLock<HashMap<(Algebra, u64, Weight), Arc<FusionDecomposition>>>;
type TruncProdCache = RwLock<HashMap<(Algebra, u64, Weight, Weight), Arc<BTreeMap<Weight, u64>>>>;

static CLASSICAL_SQ: OnceLock<SquareCache> = OnceLock::new();
static TRUNC_SQ: OnceLock<TruncSquareCache> = OnceLock::new();
static TRUNC_PROD: OnceLock<TruncProdCache> = OnceLock::new();

/// Classical tensor multiplicities `V_lambda (x) V_mu` by Brauer–Klimyk,
/// iterating over the weight system of the smaller factor.
pub fn tensor_multiplicities_classical(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    bound: u64,
) -> Result<BTreeMap<Weight, u64>> {
    let (base, iterate) =
        if rs.weyl_dim(lambda)? <= rs.weyl_dim(mu)? { (mu, lambda) } else { (lambda, mu) };
    let ws = weight_system(rs, iterate, bound)?;
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (w, mult) in ws.expanded(rs) {
        let (dom, sign, wall) = rs.to_dominant(&base.add(&w));
        if wall {
            continue;
        }
        *acc.entry(dom).or_insert(0) += sign * mult as i64;
    }
    let mut out = BTreeMap::new();
    for (w, m) in acc {
        match m.cmp(&0) {
            std::cmp::Ordering::Less => return Err(Error::NegativeMultiplicity(w)),
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Greater => {
                out.insert(w, m as u64);
            }
        }
    }
    Ok(out)
}

/// Signed character map of the symmetric / antisymmetric square of `V_lambda`:
/// the multisets of pairwise weight sums with `i <= j` resp. `i < j`.
fn square_characters(
    rs: &RootSystem,
    ws: &WeightSystem,
) -> (HashMap<Weight, i64>, HashMap<Weight, i64>) {
    let expanded = ws.expanded(rs);
    let mut sym: HashMap<Weight, i64> = HashMap::new();
    let mut anti: HashMap<Weight, i64> = HashMap::new();
    for (i, (wi, mi)) in expanded.iter().enumerate() {
        let mi = *mi as i64;
        // Same weight vector: multiplicity m gives m(m+1)/2 symmetric and
        // m(m-1)/2 antisymmetric pairs.
        let doubled = wi.add(wi);
        *sym.entry(doubled.clone()).or_insert(0) += mi * (mi + 1) / 2;
        *anti.entry(doubled).or_insert(0) += mi * (mi - 1) / 2;
        for (wj, mj) in expanded.iter().skip(i + 1) {
            let s = wi.add(wj);
            *sym.entry(s.clone()).or_insert(0) += mi * *mj as i64;
            *anti.entry(s).or_insert(0) += mi * *mj as i64;
        }
    }
    anti.retain(|_, m| *m != 0);
    (sym, anti)
}

/// Decompose a non-virtual character (weight -> multiplicity over the full
/// orbit expansion) into irreducibles by repeated highest-weight subtraction.
/// The maximum is taken in the rho-check height grading (lexicographic
/// tiebreak), under which any maximal weight is a constituent's highest
/// weight.
fn decompose_character(
    rs: &RootSystem,
    mut character: HashMap<Weight, i64>,
    bound: u64,
) -> Result<Vec<(Weight, u64)>> {
    let mut out = Vec::new();
    loop {
        character.retain(|_, m| *m != 0);
        let Some(top) =
            character.keys().max_by_key(|w| (rs.height2(w), w.0.clone())).cloned()
        else {
            break;
        };
        let mult = character[&top];
        if !top.is_dominant() || mult < 0 {
            return Err(Error::NegativeMultiplicity(top));
        }
        let ws = weight_system(rs, &top, bound)?;
        for (w, m) in ws.expanded(rs) {
            *character.entry(w).or_insert(0) -= mult * m as i64;
        }
        out.push((top, mult as u64));
    }
    out.sort_by_key(|(w, _)| w.grlex_key());
    Ok(out)
}

/// Classical decomposition of `V_lambda (x) V_lambda` with the
/// symmetric/antisymmetric split.
pub fn tensor_square_classical(
    rs: &RootSystem,
    lambda: &Weight,
    bound: u64,
) -> Result<Arc<FusionDecomposition>> {
    let cache = CLASSICAL_SQ.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (rs.algebra, lambda.clone());
    if let Some(d) = cache.read().unwrap().get(&key) {
        return Ok(Arc::clone(d));
    }
    let ws = weight_system(rs, lambda, bound)?;
    let (sym_char, anti_char) = square_characters(rs, &ws);
    let sym = decompose_character(rs, sym_char, bound)?;
    let anti = decompose_character(rs, anti_char, bound)?;

    // The split must be exhaustive: symmetric + antisymmetric equals the
    // plain Brauer-Klimyk multiplicities, summand by summand.
    let plain = tensor_multiplicities_classical(rs, lambda, lambda, bound)?;
    let mut merged: BTreeMap<Weight, u64> = BTreeMap::new();
    for (w, m) in sym.iter().chain(&anti) {
        *merged.entry(w.clone()).or_insert(0) += m;
    }
    if merged != plain {
        return Err(Error::Internal(format!(
            "parity split disagrees with Brauer-Klimyk for {} of {}",
            lambda, rs.algebra
        )));
    }

    let mut summands: Vec<Summand> = sym
        .into_iter()
        .map(|(w, m)| Summand { weight: w, mult: m, parity: Parity::Symmetric })
        .chain(
            anti.into_iter()
                .map(|(w, m)| Summand { weight: w, mult: m, parity: Parity::Antisymmetric }),
        )
        .collect();
    summands.sort_by_key(|s| (s.weight.grlex_key(), s.parity == Parity::Antisymmetric));

    let decomposition = Arc::new(FusionDecomposition {
        factors: (lambda.clone(), lambda.clone()),
        summands,
        truncated: false,
        discarded: Vec::new(),
    });
    let mut guard = cache.write().unwrap();
    Ok(Arc::clone(guard.entry(key).or_insert(decomposition)))
}

/// Classical decomposition of `V_mu (x) V_mu-dual` (no parity split).
pub fn tensor_with_dual_classical(
    rs: &RootSystem,
    mu: &Weight,
    bound: u64,
) -> Result<FusionDecomposition> {
    let dual = rs.dual_weight(mu);
    let mults = tensor_multiplicities_classical(rs, mu, &dual, bound)?;
    let mut summands: Vec<Summand> = mults
        .into_iter()
        .map(|(w, m)| Summand { weight: w, mult: m, parity: Parity::Unsplit })
        .collect();
    summands.sort_by_key(|s| s.weight.grlex_key());
    Ok(FusionDecomposition {
        factors: (mu.clone(), dual),
        summands,
        truncated: false,
        discarded: Vec::new(),
    })
}

/// Affine-Weyl reduction of a rho-shifted vector at level `l`: alternate the
/// finite dominant reduction with the reflection across the hyperplane
/// `<x, theta> = l`. Returns the unshifted dominant-alcove weight and the
/// accumulated sign, or `None` on a wall.
pub(crate) fn affine_reduce(
    spec: &CategorySpec,
    mut shifted: Weight,
) -> Option<(Weight, i64)> {
    let rs = spec.rs();
    let theta = spec.theta();
    let theta_weight = Weight(theta.weight_coords.clone());
    let ell = spec.ell as i64;
    let mut sign = 1i64;
    let mut guard = 0usize;
    loop {
        // Finite reduction on the shifted vector.
        while let Some(i) = (0..rs.rank).find(|&i| shifted.0[i] < 0) {
            shifted = rs.simple_reflect(&shifted, i);
            sign = -sign;
            guard += 1;
            assert!(guard < 1_000_000, "affine reduction failed to terminate");
        }
        if shifted.0.iter().any(|&c| c == 0) {
            return None;
        }
        let level = rs.pairing(&shifted, theta, RootKind::Root);
        if level < ell {
            return Some((shifted.sub(&rs.rho), sign));
        }
        if level == ell {
            return None;
        }
        // Reflect across the affine wall; <x, theta> and l are both
        // divisible by the half-norm in the branch that uses theta_0.
        let over = level - ell;
        debug_assert_eq!(over % theta.half_norm, 0);
        let step = over / theta.half_norm;
        shifted = Weight(
            shifted.0.iter().zip(&theta_weight.0).map(|(a, b)| a - step * b).collect(),
        );
        sign = -sign;
        guard += 1;
        assert!(guard < 1_000_000, "affine reduction failed to terminate");
    }
}

/// Truncated fusion multiplicities `V_lambda (x) V_mu` in `C(g, q, l)`:
/// Brauer–Klimyk pushed through the affine reduction.
pub fn tensor_truncated(
    spec: &CategorySpec,
    lambda: &Weight,
    mu: &Weight,
    bound: u64,
) -> Result<Arc<BTreeMap<Weight, u64>>> {
    let cache = TRUNC_PROD.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (spec.algebra, spec.ell, lambda.clone(), mu.clone());
    if let Some(d) = cache.read().unwrap().get(&key) {
        return Ok(Arc::clone(d));
    }
    let map = tensor_truncated_iterating(spec, lambda, mu, bound, None)?;
    let arc = Arc::new(map);
    let mut guard = cache.write().unwrap();
    Ok(Arc::clone(guard.entry(key).or_insert(arc)))
}

/// As [`tensor_truncated`], but with the iterated factor forced (for the
/// commutativity cross-check). `force_iterate == Some(false)` iterates over
/// the weight system of `lambda`, `Some(true)` over `mu`.
pub fn tensor_truncated_iterating(
    spec: &CategorySpec,
    lambda: &Weight,
    mu: &Weight,
    bound: u64,
    force_iterate_mu: Option<bool>,
    ) -> Result<BTreeMap<Weight, u64>> {
    let rs = spec.rs();
    let iterate_mu = match force_iterate_mu {
        Some(v) => v,
        None => rs.weyl_dim(mu)? <= rs.weyl_dim(lambda)?,
    };
    let (base, iterate) = if iterate_mu { (lambda, mu) } else { (mu, lambda) };
    let ws = weight_system(rs, iterate, bound)?;
    let shift = base.add(&rs.rho);
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (w, mult) in ws.expanded(rs) {
        if let Some((dom, sign)) = affine_reduce(spec, shift.add(&w)) {
            *acc.entry(dom).or_insert(0) += sign * mult as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (w, m) in acc {
        match m.cmp(&0) {
            std::cmp::Ordering::Less => return Err(Error::NegativeMultiplicity(w)),
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Greater => {
                out.insert(w, m as u64);
            }
        }
    }
    Ok(out)
}

/// Truncated tensor square with parity carried over from the classical
/// decomposition. Classical summands are reduced one by one so the discards
/// (walls and reflection cancellations) can be reported.
pub fn tensor_square_truncated(
    spec: &CategorySpec,
    lambda: &Weight,
    bound: u64,
) -> Result<Arc<FusionDecomposition>> {
    if !spec.in_alcove(lambda) {
        return Err(Error::OutsideAlcove(lambda.clone()));
    }
    let cache = TRUNC_SQ.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (spec.algebra, spec.ell, lambda.clone());
    if let Some(d) = cache.read().unwrap().get(&key) {
        return Ok(Arc::clone(d));
    }

    let rs = spec.rs();
    let classical = tensor_square_classical(rs, lambda, bound)?;
    let mut nets: BTreeMap<Weight, (i64, i64)> = BTreeMap::new(); // (sym, anti)
    let mut discarded: Vec<(Weight, DiscardReason)> = Vec::new();
    for s in &classical.summands {
        match affine_reduce(spec, s.weight.add(&rs.rho)) {
            None => discarded.push((s.weight.clone(), DiscardReason::Wall)),
            Some((dom, sign)) => {
                let entry = nets.entry(dom.clone()).or_insert((0, 0));
                let signed = sign * s.mult as i64;
                match s.parity {
                    Parity::Symmetric => entry.0 += signed,
                    Parity::Antisymmetric => entry.1 += signed,
                    Parity::Unsplit => unreachable!("classical squares are split"),
                }
                if dom != s.weight {
                    discarded.push((s.weight.clone(), DiscardReason::Cancelled));
                }
            }
        }
    }

    let mut summands = Vec::new();
    for (w, (sym, anti)) in &nets {
        let total = sym + anti;
        if total < 0 {
            return Err(Error::NegativeMultiplicity(w.clone()));
        }
        if total == 0 {
            if *sym != 0 || *anti != 0 {
                discarded.push((w.clone(), DiscardReason::Cancelled));
            }
            continue;
        }
        if *anti == 0 {
            summands.push(Summand { weight: w.clone(), mult: *sym as u64, parity: Parity::Symmetric });
        } else if *sym == 0 {
            summands.push(Summand {
                weight: w.clone(),
                mult: *anti as u64,
                parity: Parity::Antisymmetric,
            });
        } else if *sym > 0 && *anti > 0 {
            summands.push(Summand { weight: w.clone(), mult: *sym as u64, parity: Parity::Symmetric });
            summands.push(Summand {
                weight: w.clone(),
                mult: *anti as u64,
                parity: Parity::Antisymmetric,
            });
        } else {
            // Cross-parity cancellation with a positive remainder: the sign
            // is no longer determined by the classical split.
            summands.push(Summand { weight: w.clone(), mult: total as u64, parity: Parity::Unsplit });
        }
    }
    summands.sort_by_key(|s| (s.weight.grlex_key(), s.parity == Parity::Antisymmetric));
    discarded.sort_by_key(|(w, _)| w.grlex_key());

    // Cross-check against the one-pass Kac-Walton reduction.
    let direct = tensor_truncated(spec, lambda, lambda, bound)?;
    let totals: BTreeMap<Weight, u64> = {
        let mut m = BTreeMap::new();
        for s in &summands {
            *m.entry(s.weight.clone()).or_insert(0) += s.mult;
        }
        m
    };
    if &totals != direct.as_ref() {
        return Err(Error::Internal(format!(
            "two-stage and one-pass truncations disagree for {} at ell={}",
            lambda, spec.ell
        )));
    }

    let decomposition = Arc::new(FusionDecomposition {
        factors: (lambda.clone(), lambda.clone()),
        summands,
        truncated: true,
        discarded,
    });
    let mut guard = cache.write().unwrap();
    Ok(Arc::clone(guard.entry(key).or_insert(decomposition)))
}

/// `dim Hom(target, V^(x3))` in the truncated category: sum over summands
/// `Y` of `V (x) V` of the multiplicity of `target` in `Y (x) V`.
pub fn hom_dim_cube(
    spec: &CategorySpec,
    v: &Weight,
    target: &Weight,
    bound: u64,
) -> Result<u64> {
    if !spec.in_alcove(target) {
        return Err(Error::OutsideAlcove(target.clone()));
    }
    let square = tensor_square_truncated(spec, v, bound)?;
    let mut total = 0u64;
    for (y, mult) in square.mult_map() {
        let prod = tensor_truncated(spec, &y, v, bound)?;
        total += mult * prod.get(target).copied().unwrap_or(0);
    }
    Ok(total)
}

/// Dimension-sum identity for classical decompositions:
/// `sum mult * dim = dim(lambda) * dim(mu)`.
pub fn verify_dimension_sum(rs: &RootSystem, decomposition: &FusionDecomposition) -> Result<bool> {
    let mut total = Int::zero();
    for s in &decomposition.summands {
        total += Int::from(s.mult) * rs.weyl_dim(&s.weight)?;
    }
    let expected =
        rs.weyl_dim(&decomposition.factors.0)? * rs.weyl_dim(&decomposition.factors.1)?;
    Ok(total == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::CategorySpec;
    use crate::freudenthal::DEFAULT_SIZE_BOUND as BOUND;

    fn fw(alg: Algebra, i: usize) -> Weight {
        Weight::fundamental(alg.rank(), i)
    }

    fn summand_set(d: &FusionDecomposition) -> Vec<(Vec<i64>, u64, Parity)> {
        d.summands.iter().map(|s| (s.weight.0.clone(), s.mult, s.parity)).collect()
    }

    #[test]
    fn g2_tensor_square_classical() {
        let rs = RootSystem::get(Algebra::G2);
        let d = tensor_square_classical(rs, &fw(Algebra::G2, 1), BOUND).unwrap();
        // V (x) V = 1 + V_(l1) + V_(l2) + V_(2 l1); the exterior square is
        // V + V_(l2), which fixes the signs.
        let got = summand_set(&d);
        assert!(got.contains(&(vec![0, 0], 1, Parity::Symmetric)));
        assert!(got.contains(&(vec![1, 0], 1, Parity::Antisymmetric)));
        assert!(got.contains(&(vec![0, 1], 1, Parity::Antisymmetric)));
        assert!(got.contains(&(vec![2, 0], 1, Parity::Symmetric)));
        assert_eq!(got.len(), 4);
        assert!(verify_dimension_sum(rs, &d).unwrap());
    }

    #[test]
    fn zero_tensor_square() {
        let rs = RootSystem::get(Algebra::E6);
        let d = tensor_square_classical(rs, &Weight::zero(6), BOUND).unwrap();
        assert_eq!(summand_set(&d), vec![(vec![0; 6], 1, Parity::Symmetric)]);
    }

    #[test]
    fn f4_vector_square_classical() {
        let rs = RootSystem::get(Algebra::F4);
        let d = tensor_square_classical(rs, &fw(Algebra::F4, 1), BOUND).unwrap();
        // 26^2 = 676 across five summands including V itself.
        assert_eq!(d.summands.len(), 5);
        assert!(d.contains(&fw(Algebra::F4, 1)));
        assert!(verify_dimension_sum(rs, &d).unwrap());
        let sym_dim: Int = d
            .summands
            .iter()
            .filter(|s| s.parity == Parity::Symmetric)
            .map(|s| Int::from(s.mult) * rs.weyl_dim(&s.weight).unwrap())
            .sum();
        assert_eq!(sym_dim, Int::from(26 * 27 / 2));
    }

    #[test]
    fn f4_adjoint_square_truncated_at_24() {
        let spec = CategorySpec::new(Algebra::F4, 24).unwrap();
        let d = tensor_square_truncated(&spec, &fw(Algebra::F4, 4), BOUND).unwrap();
        // 1 + V_(2 l1) + U + V_(l3), with 2 l4 discarded on the wall.
        let got = summand_set(&d);
        assert!(got.contains(&(vec![0, 0, 0, 0], 1, Parity::Symmetric)));
        assert!(got.contains(&(vec![2, 0, 0, 0], 1, Parity::Symmetric)));
        assert!(got.contains(&(vec![0, 0, 0, 1], 1, Parity::Antisymmetric)));
        assert!(got.contains(&(vec![0, 0, 1, 0], 1, Parity::Antisymmetric)));
        assert_eq!(got.len(), 4);
        assert!(d
            .discarded
            .contains(&(Weight(vec![0, 0, 0, 2]), DiscardReason::Wall)));
    }

    #[test]
    fn g2_truncation_matches_classical_when_stable() {
        let rs = RootSystem::get(Algebra::G2);
        for ell in [18, 19, 23] {
            let spec = CategorySpec::new(Algebra::G2, ell).unwrap();
            let t = tensor_square_truncated(&spec, &fw(Algebra::G2, 1), BOUND).unwrap();
            let c = tensor_square_classical(rs, &fw(Algebra::G2, 1), BOUND).unwrap();
            assert_eq!(t.summands, c.summands, "ell={ell}");
            assert!(t.discarded.is_empty());
        }
        // Below the alcove: precondition error.
        let spec12 = CategorySpec::new(Algebra::G2, 12).unwrap();
        assert!(matches!(
            tensor_square_truncated(&spec12, &fw(Algebra::G2, 1), BOUND),
            Err(Error::OutsideAlcove(_))
        ));
    }

    #[test]
    fn g2_pointed_case_cancels_everything() {
        // At l = 8 the category is pointed of rank 2: X (x) X = 1, with the
        // classical V and 2 l1 cancelling against each other.
        let spec = CategorySpec::new(Algebra::G2, 8).unwrap();
        let d = tensor_square_truncated(&spec, &fw(Algebra::G2, 1), BOUND).unwrap();
        assert_eq!(summand_set(&d), vec![(vec![0, 0], 1, Parity::Symmetric)]);
        assert!(d.discarded.iter().any(|(w, r)| w == &Weight(vec![0, 1]) && *r == DiscardReason::Wall));
        assert!(d.discarded.iter().any(|(w, r)| w == &Weight(vec![1, 0]) && *r == DiscardReason::Cancelled));
    }

    #[test]
    fn dual_tensor_fixtures() {
        let e6 = RootSystem::get(Algebra::E6);
        let d = tensor_with_dual_classical(e6, &fw(Algebra::E6, 1), BOUND).unwrap();
        assert!(d.contains(&fw(Algebra::E6, 2)), "adjoint inside 27 (x) 27-bar");
        assert_eq!(d.multiplicity(&Weight::zero(6)), 1);
        let e7 = RootSystem::get(Algebra::E7);
        let d = tensor_with_dual_classical(e7, &fw(Algebra::E7, 7), BOUND).unwrap();
        assert!(d.contains(&fw(Algebra::E7, 1)));
        let g2 = RootSystem::get(Algebra::G2);
        let zero = tensor_with_dual_classical(g2, &Weight::zero(2), BOUND).unwrap();
        assert_eq!(zero.multiplicity(&Weight::zero(2)), 1);
        assert_eq!(zero.summands.len(), 1);
    }

    #[test]
    fn e8_adjoint_contains_itself_in_dual_square() {
        let e8 = RootSystem::get(Algebra::E8);
        let d = tensor_with_dual_classical(e8, &fw(Algebra::E8, 8), BOUND).unwrap();
        assert!(d.contains(&fw(Algebra::E8, 8)));
        assert!(d.contains(&fw(Algebra::E8, 1)));
        assert_eq!(d.multiplicity(&Weight::zero(8)), 1);
        assert!(verify_dimension_sum(e8, &d).unwrap());
    }

    #[test]
    fn truncated_fusion_is_commutative() {
        // Swapping the iterated weight system leaves multiplicities fixed.
        for (alg, ells) in [(Algebra::G2, vec![8, 13, 18]), (Algebra::F4, vec![15, 24])] {
            for ell in ells {
                let spec = CategorySpec::new(alg, ell).unwrap();
                let labels = spec.alcove();
                for a in &labels {
                    for b in &labels {
                        let ab =
                            tensor_truncated_iterating(&spec, a, b, BOUND, Some(true)).unwrap();
                        let ba =
                            tensor_truncated_iterating(&spec, a, b, BOUND, Some(false)).unwrap();
                        assert_eq!(ab, ba, "{alg} ell={ell} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn hom_dim_cube_fixtures() {
        let f4 = CategorySpec::new(Algebra::F4, 23).unwrap();
        assert_eq!(hom_dim_cube(&f4, &fw(Algebra::F4, 1), &fw(Algebra::F4, 1), BOUND).unwrap(), 5);
        let g2 = CategorySpec::new(Algebra::G2, 18).unwrap();
        assert_eq!(hom_dim_cube(&g2, &fw(Algebra::G2, 1), &fw(Algebra::G2, 1), BOUND).unwrap(), 4);
        let e6 = CategorySpec::new(Algebra::E6, 14).unwrap();
        let target = Weight(vec![1, 0, 0, 0, 0, 1]);
        assert_eq!(hom_dim_cube(&e6, &fw(Algebra::E6, 1), &target, BOUND).unwrap(), 3);
    }
}
