//! Braiding eigenvalue spectra: twists, the eigenvalue formula on
//! multiplicity-free tensor squares, the three-dimensional E-series spectra,
//! and ratio normalisation.
//!
//! The braiding `c_(V,V)` acts on the summand `W` of a multiplicity-free
//! `V (x) V` by `sign(W) * f(V) * q^(<w, w+2 rho>/2)`, with `+` for
//! symmetric and `-` for antisymmetric summands. The global factor `f(V)` is
//! never computed: every downstream decision consumes ratios only, which do
//! not see it.

use crate::category::CategorySpec;
use crate::cyclo::CycloNumber;
use crate::fusion::{self, Parity};
use crate::rootdata::{Algebra, RootKind, Weight};
use crate::{Error, Rat, Result};
use num_traits::One;
use serde::Serialize;

/// Whether the spectrum values still carry the unknown global scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    RawUpToGlobalScale,
    RatioNormalized,
}

/// One eigenvalue with its provenance.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumEntry {
    pub value: CycloNumber,
    /// Label of the tensor-square summand this eigenvalue belongs to.
    pub summand: Weight,
    pub parity: Parity,
    /// `value = sign(parity) * q^exponent` relative to the spectrum's scale.
    #[serde(serialize_with = "serialize_rat")]
    pub exponent: Rat,
}

fn serialize_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Eigenvalues of the braid generator on a Hom space.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub normalization: Normalization,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<CycloNumber> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    /// Multiset equality of values.
    pub fn same_values(&self, other: &[CycloNumber]) -> bool {
        multiset_eq(&self.values(), other)
    }

    /// Multiset equality up to one global nonzero scalar.
    pub fn same_values_up_to_scale(&self, other: &[CycloNumber]) -> bool {
        let mine = self.values();
        if mine.len() != other.len() || mine.is_empty() {
            return mine.len() == other.len();
        }
        // Try every candidate scale sending the first of ours into theirs.
        other.iter().any(|target| {
            let c = target / &mine[0];
            let scaled: Vec<CycloNumber> = mine.iter().map(|v| v * &c).collect();
            multiset_eq(&scaled, other)
        })
    }

    pub fn has_repeats(&self) -> bool {
        let vals = self.values();
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                if vals[i] == vals[j] {
                    return true;
                }
            }
        }
        false
    }
}

fn multiset_eq(a: &[CycloNumber], b: &[CycloNumber]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (i, y) in b.iter().enumerate() {
            if !used[i] && x == y {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The twist `theta_mu = q^(<mu + 2 rho, mu>)`, as an exact root of unity
/// (conductor extended when the exponent is not an integer).
pub fn twist(spec: &CategorySpec, mu: &Weight) -> Result<CycloNumber> {
    let rs = spec.rs();
    let exponent = rs.form(&mu.add(&rs.rho).add(&rs.rho), mu);
    spec.q_rat_power(&exponent)
}

/// Braiding exponent `<mu, mu + 2 rho> / 2` of a summand.
fn braiding_exponent(spec: &CategorySpec, mu: &Weight) -> Rat {
    let rs = spec.rs();
    rs.form(&mu.add(&rs.rho).add(&rs.rho), mu) / Rat::from_integer(2.into())
}

/// Eigenvalues of the braid generator on `Hom(V, V^(x3))` for `V` with
/// multiplicity-free truncated tensor square, up to the global scale.
pub fn sigma_spectrum(spec: &CategorySpec, v: &Weight) -> Result<Spectrum> {
    let square = fusion::tensor_square_truncated(spec, v, crate::freudenthal::DEFAULT_SIZE_BOUND)?;
    if !square.is_multiplicity_free() {
        return Err(Error::NotMultiplicityFree);
    }
    let mut entries = Vec::new();
    for s in &square.summands {
        let sign = match s.parity {
            Parity::Symmetric => 1,
            Parity::Antisymmetric => -1,
            // A truncation-mixed summand has no classical sign to inherit.
            Parity::Unsplit => return Err(Error::NotMultiplicityFree),
        };
        let exponent = braiding_exponent(spec, &s.weight);
        let magnitude = spec.q_rat_power(&exponent)?;
        let value = if sign < 0 { -&magnitude } else { magnitude };
        entries.push(SpectrumEntry { value, summand: s.weight.clone(), parity: s.parity, exponent });
    }
    let spectrum = Spectrum { entries, normalization: Normalization::RawUpToGlobalScale };
    verify_square_consistency(spec, &spectrum)?;
    Ok(spectrum)
}

/// `(v_i / v_j)^2` must equal `theta_i / theta_j` exactly; the braiding
/// squares to the twist ratio on every summand pair.
fn verify_square_consistency(spec: &CategorySpec, s: &Spectrum) -> Result<()> {
    for i in 0..s.entries.len() {
        for j in i + 1..s.entries.len() {
            let a = &s.entries[i];
            let b = &s.entries[j];
            let ratio = &a.value / &b.value;
            let lhs = &ratio * &ratio;
            let rhs = &twist(spec, &a.summand)? / &twist(spec, &b.summand)?;
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "square consistency failed between {} and {} at ell={}",
                    a.summand, b.summand, spec.ell
                )));
            }
        }
    }
    Ok(())
}

/// The three-dimensional E-series spectrum `{q, -q^(-1), q^(3-2N)}` on
/// `Hom(V_(l1 + lN), V^(x3))`, valid in the stable range where `l1 + lN`
/// lies in the alcove.
///
/// The values are matched to the three tensor-square summands carrying the
/// Hom space by sign and twist-ratio consistency; failure to match is an
/// internal error.
pub fn en_series_spectrum(spec: &CategorySpec) -> Result<Spectrum> {
    let n = match spec.algebra {
        Algebra::E6 => 6i64,
        Algebra::E7 => 7,
        Algebra::E8 => 8,
        other => {
            return Err(Error::BadExponent(format!(
                "the E-series spectrum is only defined for e6/e7/e8, not {other}"
            )))
        }
    };
    let rs = spec.rs();
    let v = Weight::fundamental(rs.rank, spec.algebra.vector_node());
    let partner = Weight::fundamental(rs.rank, spec.algebra.partner_node().unwrap());
    let target = v.add(&partner);
    if !spec.in_alcove(&target) {
        let min = rs.pairing(&target.add(&rs.rho), rs.theta0(), RootKind::Root) as u64 + 1;
        return Err(Error::StableRange { algebra: spec.algebra, ell: spec.ell, min });
    }

    // The Hom space decomposes over the summands Y of V (x) V that admit
    // V_target inside Y (x) V; classically this is exactly three of them,
    // one antisymmetric and two symmetric.
    let bound = crate::freudenthal::DEFAULT_SIZE_BOUND;
    let square = fusion::tensor_square_classical(rs, &v, bound)?;
    let mut carriers = Vec::new();
    for s in &square.summands {
        let prod = fusion::tensor_multiplicities_classical(rs, &s.weight, &v, bound)?;
        let mult = prod.get(&target).copied().unwrap_or(0);
        if mult > 0 {
            debug_assert_eq!(mult, 1);
            carriers.push((s.weight.clone(), s.parity));
        }
    }
    if carriers.len() != 3 {
        return Err(Error::Internal(format!(
            "expected 3 carrier summands for {} at ell={}, found {}",
            spec.algebra,
            spec.ell,
            carriers.len()
        )));
    }
    let antis: Vec<_> = carriers.iter().filter(|(_, p)| *p == Parity::Antisymmetric).collect();
    let syms: Vec<_> = carriers.iter().filter(|(_, p)| *p == Parity::Symmetric).collect();
    if antis.len() != 1 || syms.len() != 2 {
        return Err(Error::Internal("carrier parity pattern is not (sym, sym, anti)".into()));
    }

    let q = spec.q_power(1);
    let minus_q_inv = -&spec.q_power(-1);
    let q_low = spec.q_power(3 - 2 * n);
    // Assign {q, q^(3-2N)} to the two symmetric carriers so that squared
    // ratios match twist ratios; -q^(-1) goes to the antisymmetric one.
    let assignments = [
        [(0usize, 1i64), (1, 3 - 2 * n)],
        [(0, 3 - 2 * n), (1, 1)],
    ];
    for assignment in assignments {
        let mut entries = vec![SpectrumEntry {
            value: minus_q_inv.clone(),
            summand: antis[0].0.clone(),
            parity: Parity::Antisymmetric,
            exponent: Rat::from_integer((-1).into()),
        }];
        for (carrier_idx, exp) in assignment {
            entries.push(SpectrumEntry {
                value: if exp == 1 { q.clone() } else { q_low.clone() },
                summand: syms[carrier_idx].0.clone(),
                parity: Parity::Symmetric,
                exponent: Rat::from_integer(exp.into()),
            });
        }
        let spectrum = Spectrum { entries, normalization: Normalization::RawUpToGlobalScale };
        if verify_square_consistency(spec, &spectrum).is_ok() {
            let mut spectrum = spectrum;
            spectrum.entries.sort_by(|a, b| a.exponent.cmp(&b.exponent));
            return Ok(spectrum);
        }
    }
    Err(Error::Internal(format!(
        "E-series spectrum did not match twist data for {} at ell={}",
        spec.algebra, spec.ell
    )))
}

/// Rescale so ratios are explicit: divide by `q^e` where `e` is the largest
/// exponent among antisymmetric entries (the whole spectrum when there is
/// none). Entries are reordered by ascending exponent.
pub fn normalize_ratios(spec: &CategorySpec, s: &Spectrum) -> Result<Spectrum> {
    if s.entries.is_empty() {
        return Ok(s.clone());
    }
    let reference = s
        .entries
        .iter()
        .filter(|e| e.parity == Parity::Antisymmetric)
        .max_by(|a, b| a.exponent.cmp(&b.exponent))
        .unwrap_or(&s.entries[0]);
    let divisor = spec.q_rat_power(&reference.exponent)?;
    let inv = divisor.inverse()?;
    let mut entries: Vec<SpectrumEntry> = s
        .entries
        .iter()
        .map(|e| SpectrumEntry {
            value: &e.value * &inv,
            summand: e.summand.clone(),
            parity: e.parity,
            exponent: &e.exponent - &reference.exponent,
        })
        .collect();
    entries.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    Ok(Spectrum { entries, normalization: Normalization::RatioNormalized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn spec(alg: Algebra, ell: u64) -> CategorySpec {
        CategorySpec::new(alg, ell).unwrap()
    }

    fn fw(alg: Algebra, i: usize) -> Weight {
        Weight::fundamental(alg.rank(), i)
    }

    #[test]
    fn twist_fixtures() {
        let s = spec(Algebra::G2, 18);
        assert!(twist(&s, &Weight::zero(2)).unwrap().is_one());
        // <l1 + 2 rho, l1> = 12 for the 7-dimensional object.
        let rs = RootSystem::get(Algebra::G2);
        let l1 = fw(Algebra::G2, 1);
        let exp = rs.form(&l1.add(&rs.rho).add(&rs.rho), &l1);
        assert_eq!(exp, Rat::from_integer(12.into()));
        assert_eq!(twist(&s, &l1).unwrap(), s.q_power(12));
    }

    #[test]
    fn g2_spectrum_matches_paper() {
        for ell in [18, 21, 24, 30] {
            let s = spec(Algebra::G2, ell);
            let spectrum = sigma_spectrum(&s, &fw(Algebra::G2, 1)).unwrap();
            let expected = vec![
                CycloNumber::one(),
                -&s.q_power(6),
                -&s.q_power(12),
                s.q_power(14),
            ];
            assert!(spectrum.same_values(&expected), "ell={ell}");
        }
    }

    #[test]
    fn g2_normalized_spectrum_matches_paper_rescaling() {
        let s = spec(Algebra::G2, 21);
        let spectrum = sigma_spectrum(&s, &fw(Algebra::G2, 1)).unwrap();
        let normalized = normalize_ratios(&s, &spectrum).unwrap();
        // S = {q^-12, -q^-6, -1, q^2} in ascending exponent order.
        let expected = vec![
            s.q_power(-12),
            -&s.q_power(-6),
            CycloNumber::from_int(-1),
            s.q_power(2),
        ];
        let got = normalized.values();
        assert_eq!(got, expected);
        assert_eq!(normalized.normalization, Normalization::RatioNormalized);
    }

    #[test]
    fn normalization_is_scale_free() {
        // Ratios are unchanged by premultiplying all entries by a scalar.
        let s = spec(Algebra::G2, 20);
        let spectrum = sigma_spectrum(&s, &fw(Algebra::G2, 1)).unwrap();
        let c = s.q_power(5);
        let scaled = Spectrum {
            entries: spectrum
                .entries
                .iter()
                .map(|e| SpectrumEntry {
                    value: &e.value * &c,
                    summand: e.summand.clone(),
                    parity: e.parity,
                    exponent: &e.exponent + Rat::from_integer(5.into()),
                })
                .collect(),
            normalization: Normalization::RawUpToGlobalScale,
        };
        let n1 = normalize_ratios(&s, &spectrum).unwrap();
        let n2 = normalize_ratios(&s, &scaled).unwrap();
        assert_eq!(n1.values(), n2.values());
    }

    #[test]
    fn f4_vector_spectrum_even_ell() {
        for ell in [22u64, 24, 26, 30, 40] {
            let s = spec(Algebra::F4, ell);
            let spectrum = sigma_spectrum(&s, &fw(Algebra::F4, 1)).unwrap();
            // Computed raw values {1, q^12, q^26, -q^24, -q^18}; the paper's
            // display {q^-24, q^-12, q^2, -1, -q^-6} is the same set times
            // q^24.
            let paper: Vec<CycloNumber> = vec![
                s.q_power(-24),
                s.q_power(-12),
                s.q_power(2),
                CycloNumber::from_int(-1),
                -&s.q_power(-6),
            ];
            assert!(spectrum.same_values_up_to_scale(&paper), "ell={ell}");
            let normalized = normalize_ratios(&s, &spectrum).unwrap();
            assert!(normalized.same_values(&paper), "ell={ell}");
            // Distinct unless ell = 24.
            assert_eq!(spectrum.has_repeats(), ell == 24, "ell={ell}");
        }
    }

    #[test]
    fn f4_adjoint_spectrum_at_24() {
        let s = spec(Algebra::F4, 24);
        let spectrum = sigma_spectrum(&s, &fw(Algebra::F4, 4)).unwrap();
        let expected = vec![
            CycloNumber::one(),
            s.q_power(26),
            -&s.q_power(18),
            -&s.q_power(36),
        ];
        assert!(spectrum.same_values(&expected));
        assert!(!spectrum.has_repeats());
    }

    #[test]
    fn g2_distinctness_thresholds() {
        for ell in 10..=40u64 {
            let Ok(s) = CategorySpec::new(Algebra::G2, ell) else { continue };
            if !s.in_alcove(&fw(Algebra::G2, 1)) {
                continue;
            }
            let Ok(spectrum) = sigma_spectrum(&s, &fw(Algebra::G2, 1)) else { continue };
            if spectrum.len() == 4 {
                assert!(!spectrum.has_repeats(), "ell={ell}");
            }
        }
    }

    #[test]
    fn en_series_fixtures() {
        let e6 = spec(Algebra::E6, 14);
        let got = en_series_spectrum(&e6).unwrap();
        let expected =
            vec![e6.q_power(1), -&e6.q_power(-1), e6.q_power(-9)];
        assert!(got.same_values(&expected));

        let e8 = spec(Algebra::E8, 34);
        let got = en_series_spectrum(&e8).unwrap();
        let expected = vec![e8.q_power(1), -&e8.q_power(-1), e8.q_power(-13)];
        assert!(got.same_values(&expected));

        let e7 = spec(Algebra::E7, 21);
        let got = en_series_spectrum(&e7).unwrap();
        let expected = vec![e7.q_power(1), -&e7.q_power(-1), e7.q_power(-11)];
        assert!(got.same_values(&expected));
    }

    #[test]
    fn en_series_stable_range() {
        assert!(matches!(
            en_series_spectrum(&spec(Algebra::E8, 33)),
            Err(Error::StableRange { min: 34, .. })
        ));
        assert!(matches!(
            en_series_spectrum(&spec(Algebra::E6, 13)),
            Err(Error::StableRange { min: 14, .. })
        ));
        assert!(matches!(
            en_series_spectrum(&spec(Algebra::E7, 20)),
            Err(Error::StableRange { min: 21, .. })
        ));
        assert!(en_series_spectrum(&spec(Algebra::E7, 21)).is_ok());
    }

    #[test]
    fn spectrum_values_are_roots_of_unity() {
        for (alg, ell, node) in [
            (Algebra::G2, 18, 1),
            (Algebra::F4, 22, 1),
            (Algebra::F4, 24, 4),
            (Algebra::G2, 13, 1),
        ] {
            let s = spec(alg, ell);
            let spectrum = sigma_spectrum(&s, &fw(alg, node)).unwrap();
            for e in &spectrum.entries {
                assert!(e.value.root_of_unity_order().is_some());
                assert!(!e.value.is_zero());
            }
        }
    }
}
