//! Weight systems of irreducible highest-weight representations: dominant
//! weights with multiplicities via the Freudenthal recursion, plus lazy orbit
//! expansion.
//!
//! Weight systems are stored as dominant weights only; full orbits are
//! expanded on demand and bounded, since only small representations are ever
//! expanded. Computed systems are memoised behind a process-wide lock keyed
//! by `(algebra, highest weight)`.

use crate::rootdata::{Algebra, RootKind, RootSystem, Weight};
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

/// Default cap on the number of expanded weights of a single representation.
pub const DEFAULT_SIZE_BOUND: u64 = 100_000;

/// Dominant weights and multiplicities of one irreducible representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightSystem {
    pub highest: Weight,
    /// Sorted by descending graded-lex key of the weight.
    pub dominant: Vec<(Weight, u64)>,
    /// Total dimension (with multiplicities, over full orbits).
    pub dim: Int,
}

impl WeightSystem {
    /// Multiplicity of an arbitrary weight, using Weyl invariance.
    pub fn multiplicity(&self, rs: &RootSystem, w: &Weight) -> u64 {
        let dom = rs.dominant_representative(w);
        self.dominant.iter().find(|(d, _)| *d == dom).map_or(0, |(_, m)| *m)
    }

    /// Every weight with its multiplicity, orbits expanded.
    pub fn expanded(&self, rs: &RootSystem) -> Vec<(Weight, u64)> {
        let mut out = Vec::new();
        for (dom, mult) in &self.dominant {
            for w in rs.expand_orbit(dom) {
                out.push((w, *mult));
            }
        }
        out
    }

    fn validate(&self, rs: &RootSystem) -> bool {
        if rs.weyl_dim(&self.highest).as_ref() != Ok(&self.dim) {
            return false;
        }
        let mut total = Int::zero();
        for (w, m) in &self.dominant {
            if !w.is_dominant() {
                return false;
            }
            total += Int::from(rs.orbit_size(w)) * Int::from(*m);
        }
        total == self.dim
    }
}

type Cache = RwLock<HashMap<(Algebra, Weight), Arc<WeightSystem>>>;

static CACHE: OnceLock<Cache> = OnceLock::new();

fn cache() -> &'static Cache {
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Insert an externally computed weight system (e.g. from a file cache).
/// The data is validated against the Weyl dimension identity before being
/// trusted; returns whether it was accepted.
pub fn seed_weight_system(algebra: Algebra, ws: WeightSystem) -> bool {
    let rs = RootSystem::get(algebra);
    if !ws.validate(rs) {
        return false;
    }
    let key = (algebra, ws.highest.clone());
    cache().write().unwrap().insert(key, Arc::new(ws));
    true
}

/// The weight system of the irreducible with highest weight `lambda`.
///
/// Fails when `lambda` is not dominant or the dimension exceeds `bound`.
pub fn weight_system(rs: &RootSystem, lambda: &Weight, bound: u64) -> Result<Arc<WeightSystem>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let dim = rs.weyl_dim(lambda)?;
    if dim > Int::from(bound) {
        return Err(Error::SizeBound {
            weight: lambda.clone(),
            dim: dim.to_u64().unwrap_or(u64::MAX),
            bound,
        });
    }
    let key = (rs.algebra, lambda.clone());
    if let Some(ws) = cache().read().unwrap().get(&key) {
        return Ok(Arc::clone(ws));
    }
    let ws = Arc::new(compute(rs, lambda, dim));
    let mut guard = cache().write().unwrap();
    Ok(Arc::clone(guard.entry(key).or_insert(ws)))
}

/// All dominant weights `mu <= lambda` in the dominance order. Covers in that
/// order differ by a positive root, so a breadth-first search subtracting
/// positive roots while staying dominant is exhaustive.
fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for root in &rs.positive_roots {
            let cand = Weight(
                w.0.iter().zip(&root.weight_coords).map(|(a, b)| a - b).collect(),
            );
            if cand.is_dominant() && seen.insert(cand.clone()) {
                queue.push_back(cand);
            }
        }
    }
    seen.into_iter().collect()
}

/// Height of `lambda - mu` in the root lattice.
fn depth(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    let rc = rs
        .root_coords_of(&lambda.sub(mu))
        .expect("weights of one representation differ by root-lattice vectors");
    rc.iter().sum()
}

fn compute(rs: &RootSystem, lambda: &Weight, dim: Int) -> WeightSystem {
    let mut candidates = dominant_weights_below(rs, lambda);
    candidates.sort_by_key(|mu| depth(rs, lambda, mu));

    let shifted_top = lambda.add(&rs.rho);
    let top_norm = rs.form(&shifted_top, &shifted_top);
    let mut mults: HashMap<Weight, u64> = HashMap::new();
    mults.insert(lambda.clone(), 1);

    for mu in candidates.iter().skip(1) {
        // Freudenthal: (|lambda+rho|^2 - |mu+rho|^2) m(mu)
        //   = 2 sum_(alpha>0) sum_(k>=1) <mu+k alpha, alpha> m(mu+k alpha).
        let mut numerator: i128 = 0;
        for root in &rs.positive_roots {
            let base_pair = rs.pairing(mu, root, RootKind::Root);
            let norm = 2 * root.half_norm;
            for k in 1.. {
                let w = Weight(
                    mu.0.iter()
                        .zip(&root.weight_coords)
                        .map(|(a, b)| a + k * b)
                        .collect(),
                );
                let dom = rs.dominant_representative(&w);
                let Some(&m) = mults.get(&dom) else { break };
                numerator += 2 * (base_pair + k * norm) as i128 * m as i128;
            }
        }
        let shifted = mu.add(&rs.rho);
        let denom = &top_norm - rs.form(&shifted, &shifted);
        let num_rat = Rat::from_integer(Int::from(numerator));
        let mult = num_rat / denom;
        assert!(
            mult.denom().is_one() && mult.numer().is_positive(),
            "Freudenthal produced a non-positive or fractional multiplicity"
        );
        mults.insert(mu.clone(), mult.numer().to_u64().unwrap());
    }

    let mut dominant: Vec<(Weight, u64)> =
        candidates.into_iter().map(|mu| (mults[&mu], mu)).map(|(m, mu)| (mu, m)).collect();
    dominant.sort_by(|a, b| b.0.grlex_key().cmp(&a.0.grlex_key()));

    let ws = WeightSystem { highest: lambda.clone(), dominant, dim };
    debug_assert!(ws.validate(rs), "weight system failed the dimension identity");
    ws
}
