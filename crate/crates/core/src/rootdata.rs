//! Exact root-system data and Weyl-group machinery for the exceptional Lie
//! types G2, F4, E6, E7 and E8.
//!
//! Weights are integer vectors in the fundamental-weight basis. Roots are
//! stored in both root and weight coordinates, so every pairing used by the
//! alcove and fusion computations is an integer dot product against a
//! precomputed table. The bilinear form is normalised so short roots have
//! squared length 2.
//!
//! Node numbering follows Bourbaki for G2, E6, E7 and E8. For F4 the nodes
//! are numbered in reverse Bourbaki order, so that the 26-dimensional
//! fundamental representation sits at node 1 and the adjoint at node 4; this
//! is the convention the rest of the crate (and its I/O) uses throughout.

use crate::{linalg::Matrix, DisplayVec, Error, Int, Rat, Result};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

/// The five exceptional Lie types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7, Algebra::E8];

    pub fn rank(self) -> usize {
        match self {
            Algebra::G2 => 2,
            Algebra::F4 => 4,
            Algebra::E6 => 6,
            Algebra::E7 => 7,
            Algebra::E8 => 8,
        }
    }

    /// Squared-length ratio of long to short roots.
    pub fn lacing(self) -> i64 {
        match self {
            Algebra::G2 => 3,
            Algebra::F4 => 2,
            _ => 1,
        }
    }

    pub fn weyl_order(self) -> u64 {
        match self {
            Algebra::G2 => 12,
            Algebra::F4 => 1152,
            Algebra::E6 => 51840,
            Algebra::E7 => 2_903_040,
            Algebra::E8 => 696_729_600,
        }
    }

    /// One-indexed node of the "vector representation" used by the braid
    /// analysis: the Dynkin node furthest from the branch point for the E
    /// series (either end works for E6; node 1 is fixed here), the
    /// 26-dimensional node for F4 and the 7-dimensional node for G2.
    pub fn vector_node(self) -> usize {
        match self {
            Algebra::G2 | Algebra::F4 | Algebra::E6 => 1,
            Algebra::E7 => 7,
            Algebra::E8 => 8,
        }
    }

    /// For the E series, the end node of the second-longest arm; paired with
    /// [`Algebra::vector_node`] it labels the three-dimensional braid
    /// representation space.
    pub fn partner_node(self) -> Option<usize> {
        match self {
            Algebra::E6 => Some(6),
            Algebra::E7 | Algebra::E8 => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algebra::G2 => "g2",
            Algebra::F4 => "f4",
            Algebra::E6 => "e6",
            Algebra::E7 => "e7",
            Algebra::E8 => "e8",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Algebra {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(Algebra::G2),
            "f4" => Ok(Algebra::F4),
            "e6" => Ok(Algebra::E6),
            "e7" => Ok(Algebra::E7),
            "e8" => Ok(Algebra::E8),
            other => Err(format!("unknown algebra '{other}' (expected g2, f4, e6, e7 or e8)")),
        }
    }
}

/// Integer coordinate vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight at one-indexed node `i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| c * a).collect())
    }

    /// Graded-lexicographic key: total coordinate sum, then coordinates.
    pub fn grlex_key(&self) -> (i64, Vec<i64>) {
        (self.0.iter().sum(), self.0.clone())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DisplayVec(&self.0).fmt(f)
    }
}

/// A positive root with every coordinate system the crate needs.
#[derive(Debug, Clone, Serialize)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub root_coords: Vec<i64>,
    /// Coordinates in the fundamental-weight basis.
    pub weight_coords: Vec<i64>,
    /// Half the squared length (1 for short, `m` for long).
    pub half_norm: i64,
    /// `pair_vec . w = <w, alpha>` for a weight `w`.
    #[serde(skip)]
    pub pair_vec: Vec<i64>,
    /// `copair_vec . w = <w, alpha_check>`.
    #[serde(skip)]
    pub copair_vec: Vec<i64>,
}

/// Which side of a pairing to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    Root,
    Coroot,
}

/// Fully populated root-system data for one exceptional type.
pub struct RootSystem {
    pub algebra: Algebra,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j-check>`; row `i` is `alpha_i` in the
    /// fundamental-weight basis.
    pub cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots.
    pub d: Vec<i64>,
    /// Lacing number: 1 for E types, 2 for F4, 3 for G2.
    pub m: i64,
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    theta0_idx: usize,
    theta1_idx: usize,
    /// Gram matrix of the fundamental weights under the normalised form.
    form: Matrix<Rat>,
    /// Weight coordinates -> root coordinates conversion (inverse transpose
    /// of the Cartan matrix).
    wc_to_rc: Matrix<Rat>,
}

fn cartan_data(algebra: Algebra) -> (Vec<Vec<i64>>, Vec<i64>) {
    match algebra {
        Algebra::G2 => (vec![vec![2, -1], vec![-3, 2]], vec![1, 3]),
        Algebra::F4 => (
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![1, 1, 2, 2],
        ),
        Algebra::E6 | Algebra::E7 | Algebra::E8 => {
            let rank = algebra.rank();
            // Bourbaki: a chain 1-3-4-5-...-rank with node 2 attached to 4.
            let mut edges: Vec<(usize, usize)> = vec![(1, 3), (2, 4)];
            for i in 3..rank {
                edges.push((i, i + 1));
            }
            let mut c = vec![vec![0i64; rank]; rank];
            for i in 0..rank {
                c[i][i] = 2;
            }
            for (a, b) in edges {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            (c, vec![1; rank])
        }
    }
}

static SYSTEMS: [OnceLock<RootSystem>; 5] =
    [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

impl RootSystem {
    /// The shared, lazily-built root system for `algebra`.
    pub fn get(algebra: Algebra) -> &'static RootSystem {
        let idx = Algebra::ALL.iter().position(|&a| a == algebra).unwrap();
        SYSTEMS[idx].get_or_init(|| RootSystem::build(algebra))
    }

    /// Build from the Cartan matrix: positive roots by reflection closure of
    /// the simple roots, coroots as `2 alpha / <alpha, alpha>`.
    pub fn build(algebra: Algebra) -> RootSystem {
        let (cartan, d) = cartan_data(algebra);
        let rank = algebra.rank();
        let m = algebra.lacing();

        // Reflection closure on root coordinates; roots are sign-definite,
        // so collect the positive representative of each orbit element.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut rc = vec![0i64; rank];
            rc[i] = 1;
            seen.insert(rc.clone());
            queue.push_back(rc);
        }
        while let Some(rc) = queue.pop_front() {
            for i in 0..rank {
                // <alpha, alpha_i-check> = sum_j rc_j * cartan[j][i]
                let p: i64 = (0..rank).map(|j| rc[j] * cartan[j][i]).sum();
                let mut refl = rc.clone();
                refl[i] -= p;
                let positive = if refl.iter().all(|&c| c >= 0) {
                    refl
                } else {
                    debug_assert!(refl.iter().all(|&c| c <= 0));
                    refl.iter().map(|&c| -c).collect()
                };
                if seen.insert(positive.clone()) {
                    queue.push_back(positive);
                }
            }
        }
        let mut root_coords: Vec<Vec<i64>> = seen.into_iter().collect();
        root_coords.sort_by_key(|rc| (rc.iter().sum::<i64>(), rc.clone()));

        let positive_roots: Vec<Root> = root_coords
            .into_iter()
            .map(|rc| {
                let weight_coords: Vec<i64> =
                    (0..rank).map(|j| (0..rank).map(|i| rc[i] * cartan[i][j]).sum()).collect();
                // <alpha, alpha> = sum_ij rc_i rc_j <alpha_i, alpha_j>
                // with <alpha_i, alpha_j> = cartan[i][j] * d[j].
                let norm: i64 = (0..rank)
                    .map(|i| (0..rank).map(|j| rc[i] * rc[j] * cartan[i][j] * d[j]).sum::<i64>())
                    .sum();
                debug_assert_eq!(norm % 2, 0);
                let half_norm = norm / 2;
                let pair_vec: Vec<i64> = (0..rank).map(|j| rc[j] * d[j]).collect();
                let copair_vec: Vec<i64> = (0..rank)
                    .map(|j| {
                        debug_assert_eq!(rc[j] * d[j] % half_norm, 0);
                        rc[j] * d[j] / half_norm
                    })
                    .collect();
                Root { root_coords: rc, weight_coords, half_norm, pair_vec, copair_vec }
            })
            .collect();

        let dominant = |r: &Root| r.weight_coords.iter().all(|&c| c >= 0);
        let theta0_idx = positive_roots
            .iter()
            .position(|r| dominant(r) && r.half_norm == m)
            .expect("highest root");
        let theta1_idx = positive_roots
            .iter()
            .position(|r| dominant(r) && r.half_norm == 1)
            .expect("highest short root");

        // Gram matrix of fundamental weights: C^-1 D.
        let to_rat = |v: i64| Rat::from_integer(v.into());
        let c_rat = Matrix::new(
            rank,
            rank,
            cartan.iter().flatten().map(|&v| to_rat(v)).collect::<Vec<_>>(),
        );
        let c_inv = c_rat.inverse().expect("Cartan matrix is invertible");
        let mut dm = Matrix::new(rank, rank, vec![Rat::zero(); rank * rank]);
        for i in 0..rank {
            dm[(i, i)] = to_rat(d[i]);
        }
        let form = c_inv.mul(&dm);
        // Transpose of C, then invert: converts weight coords to root coords.
        let mut ct = Matrix::new(rank, rank, vec![Rat::zero(); rank * rank]);
        for i in 0..rank {
            for j in 0..rank {
                ct[(i, j)] = to_rat(cartan[j][i]);
            }
        }
        let wc_to_rc = ct.inverse().expect("Cartan matrix is invertible");

        RootSystem {
            algebra,
            rank,
            cartan,
            d,
            m,
            positive_roots,
            rho: Weight(vec![1; rank]),
            theta0_idx,
            theta1_idx,
            form,
            wc_to_rc,
        }
    }

    /// Highest root.
    pub fn theta0(&self) -> &Root {
        &self.positive_roots[self.theta0_idx]
    }

    /// Highest short root (equals the highest root for the E types).
    pub fn theta1(&self) -> &Root {
        &self.positive_roots[self.theta1_idx]
    }

    /// `<w, alpha>` or `<w, alpha-check>` under the normalised form.
    pub fn pairing(&self, w: &Weight, root: &Root, kind: RootKind) -> i64 {
        let vec = match kind {
            RootKind::Root => &root.pair_vec,
            RootKind::Coroot => &root.copair_vec,
        };
        w.0.iter().zip(vec).map(|(a, b)| a * b).sum()
    }

    /// `<u, v>` for arbitrary weights, as an exact rational.
    pub fn form(&self, u: &Weight, v: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if u.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if v.0[j] != 0 {
                    acc += Rat::from_integer((u.0[i] * v.0[j]).into()) * &self.form[(i, j)];
                }
            }
        }
        acc
    }

    /// Root coordinates of a weight-lattice vector lying in the root lattice.
    pub fn root_coords_of(&self, w: &Weight) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut acc = Rat::zero();
            for j in 0..self.rank {
                if w.0[j] != 0 {
                    acc += &self.wc_to_rc[(i, j)] * Rat::from_integer(w.0[j].into());
                }
            }
            if !acc.denom().is_one() {
                return None;
            }
            out.push(acc.numer().to_i64()?);
        }
        Some(out)
    }

    /// Reflect at the `i`-th simple root (zero-indexed).
    pub fn simple_reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i];
        if c == 0 {
            return w.clone();
        }
        Weight((0..self.rank).map(|j| w.0[j] - c * self.cartan[i][j]).collect())
    }

    /// Dominant representative of the rho-shifted orbit of `w`, with the sign
    /// `(-1)^(length)` and a flag for `w + rho` lying on a reflection wall.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, i64, bool) {
        let mut x = w.add(&self.rho);
        let mut sign = 1i64;
        let mut guard = 0usize;
        loop {
            match (0..self.rank).find(|&i| x.0[i] < 0) {
                Some(i) => {
                    x = self.simple_reflect(&x, i);
                    sign = -sign;
                }
                None => break,
            }
            guard += 1;
            assert!(guard < 1_000_000, "reflection loop failed to terminate");
        }
        let on_wall = x.0.iter().any(|&c| c == 0);
        (x.sub(&self.rho), sign, on_wall)
    }

    /// Dominant representative of the plain (unshifted) Weyl orbit.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        let mut guard = 0usize;
        while let Some(i) = (0..self.rank).find(|&i| x.0[i] < 0) {
            x = self.simple_reflect(&x, i);
            guard += 1;
            assert!(guard < 1_000_000, "reflection loop failed to terminate");
        }
        x
    }

    /// Highest weight of the dual representation: `-w0(lambda)`.
    pub fn dual_weight(&self, lambda: &Weight) -> Weight {
        self.dominant_representative(&lambda.neg())
    }

    /// Dimension of the irreducible representation with highest weight
    /// `lambda`, by the Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<Int> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let shifted = lambda.add(&self.rho);
        let mut num = Int::one();
        let mut den = Int::one();
        for root in &self.positive_roots {
            num *= Int::from(self.pairing(&shifted, root, RootKind::Root));
            den *= Int::from(self.pairing(&self.rho, root, RootKind::Root));
        }
        debug_assert!((&num % &den).is_zero());
        Ok(num / den)
    }

    /// Order of the parabolic Weyl subgroup generated by the simple
    /// reflections fixing `w` (the zero coordinates).
    pub fn stabilizer_order(&self, w: &Weight) -> u64 {
        debug_assert!(w.is_dominant());
        let support: Vec<usize> = (0..self.rank).filter(|&i| w.0[i] == 0).collect();
        self.subdiagram_weyl_order(&support)
    }

    /// Size of the Weyl orbit of a dominant weight, via the stabiliser.
    pub fn orbit_size(&self, w: &Weight) -> u64 {
        self.algebra.weyl_order() / self.stabilizer_order(w)
    }

    /// Weyl group order of the sub-Dynkin diagram on `nodes` (zero-indexed).
    pub fn subdiagram_weyl_order(&self, nodes: &[usize]) -> u64 {
        let node_set: HashSet<usize> = nodes.iter().copied().collect();
        let mut remaining = node_set.clone();
        let mut order = 1u64;
        while let Some(&start) = remaining.iter().min() {
            // Extract the connected component of `start`.
            let mut comp = vec![start];
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                for &u in &node_set {
                    if remaining.contains(&u) && self.cartan[v][u] != 0 {
                        remaining.remove(&u);
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            order *= self.component_weyl_order(&comp);
        }
        order
    }

    fn component_weyl_order(&self, comp: &[usize]) -> u64 {
        let n = comp.len() as u64;
        let factorial = |k: u64| (1..=k).product::<u64>();
        if n == 1 {
            return 2;
        }
        let degree = |v: usize| comp.iter().filter(|&&u| u != v && self.cartan[v][u] != 0).count();
        let mut max_edge = 1i64;
        let mut double_edge: Option<(usize, usize)> = None;
        for (i, &a) in comp.iter().enumerate() {
            for &b in comp.iter().skip(i + 1) {
                let w = self.cartan[a][b] * self.cartan[b][a];
                if w > max_edge {
                    max_edge = w;
                }
                if w == 2 {
                    double_edge = Some((a, b));
                }
            }
        }
        if max_edge == 3 {
            return 12; // G2
        }
        if max_edge == 2 {
            let (a, b) = double_edge.unwrap();
            // F4 when the double edge is interior to a path of 4.
            if n == 4 && degree(a) == 2 && degree(b) == 2 {
                return 1152;
            }
            return (1 << n) * factorial(n); // B_n / C_n
        }
        // Simply laced: A, D or E by branch structure.
        match comp.iter().find(|&&v| degree(v) == 3) {
            None => factorial(n + 1), // A_n
            Some(&branch) => {
                let mut arms: Vec<u64> = comp
                    .iter()
                    .filter(|&&v| v != branch && degree(v) == 1)
                    .map(|&leaf| {
                        // Walk from the leaf to the branch point.
                        let mut len = 1u64;
                        let mut prev = leaf;
                        let mut cur = leaf;
                        while cur != branch {
                            let next = comp
                                .iter()
                                .copied()
                                .find(|&u| u != prev && u != cur && self.cartan[cur][u] != 0)
                                .unwrap_or(branch);
                            if next == branch {
                                break;
                            }
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                if arms[1] == 1 {
                    (1u64 << (n - 1)) * factorial(n) // D_n
                } else {
                    match n {
                        6 => 51_840,
                        7 => 2_903_040,
                        8 => 696_729_600,
                        _ => unreachable!("no such simply-laced branched diagram"),
                    }
                }
            }
        }
    }

    /// Twice the rho-check height: `sum_(alpha > 0) <w, alpha-check>`.
    /// Strictly decreases when a positive root is subtracted, so its maximum
    /// over a character is attained at a highest weight.
    pub fn height2(&self, w: &Weight) -> i64 {
        self.positive_roots.iter().map(|r| self.pairing(w, r, RootKind::Coroot)).sum()
    }

    /// Full Weyl orbit of a dominant weight.
    pub fn expand_orbit(&self, w: &Weight) -> Vec<Weight> {
        debug_assert!(w.is_dominant());
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if x.0[i] > 0 {
                    let y = self.simple_reflect(&x, i);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Inspection dump: simple roots, positive roots, rho, thetas, lacing.
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "algebra": self.algebra,
            "rank": self.rank,
            "cartan": self.cartan,
            "half_norms": self.d,
            "m": self.m,
            "weyl_order": self.algebra.weyl_order(),
            "num_positive_roots": self.positive_roots.len(),
            "positive_roots": self.positive_roots.iter().map(|r| serde_json::json!({
                "root_coords": r.root_coords,
                "weight_coords": r.weight_coords,
                "half_norm": r.half_norm,
            })).collect::<Vec<_>>(),
            "rho": self.rho,
            "theta0": self.theta0().weight_coords,
            "theta1": self.theta1().weight_coords,
        })
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} positive roots)", self.algebra, self.positive_roots.len())
    }
}

/// Map between the per-type Weyl-orbit data and memoised weight systems is in
/// [`crate::freudenthal`]; this module stays purely combinatorial.
#[allow(dead_code)]
fn _module_note() {}

pub(crate) fn weights_equal_mod_root_lattice(rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
    rs.root_coords_of(&a.sub(b)).is_some()
}

pub(crate) type MultMap = HashMap<Weight, i64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        let expected = [(Algebra::G2, 6), (Algebra::F4, 24), (Algebra::E6, 36), (Algebra::E7, 63), (Algebra::E8, 120)];
        for (alg, count) in expected {
            let rs = RootSystem::get(alg);
            assert_eq!(rs.positive_roots.len(), count, "{alg}");
        }
    }

    #[test]
    fn lacing_and_theta_norms() {
        let g2 = RootSystem::get(Algebra::G2);
        assert_eq!(g2.m, 3);
        let f4 = RootSystem::get(Algebra::F4);
        // <theta0, theta0> = 2m, <theta1, theta1> = 2.
        assert_eq!(2 * f4.theta0().half_norm, 4);
        assert_eq!(2 * f4.theta1().half_norm, 2);
        let e8 = RootSystem::get(Algebra::E8);
        assert_eq!(e8.theta0().root_coords, e8.theta1().root_coords);
        assert_eq!(e8.m, 1);
    }

    #[test]
    fn rho_pairings() {
        // Direct-evaluation oracle values; Coxeter number h and dual Coxeter
        // number h-check give <rho, theta1> = h - 1 and
        // <rho, theta0-check> = h-check - 1.
        let g2 = RootSystem::get(Algebra::G2);
        assert_eq!(g2.pairing(&g2.rho, g2.theta0(), RootKind::Root), 9);
        assert_eq!(g2.pairing(&g2.rho, g2.theta1(), RootKind::Root), 5);
        assert_eq!(g2.pairing(&g2.rho, g2.theta0(), RootKind::Coroot), 3);
        let f4 = RootSystem::get(Algebra::F4);
        assert_eq!(f4.pairing(&f4.rho, f4.theta0(), RootKind::Root), 16);
        assert_eq!(f4.pairing(&f4.rho, f4.theta1(), RootKind::Root), 11);
        assert_eq!(f4.pairing(&f4.rho, f4.theta0(), RootKind::Coroot), 8);
        let zero = Weight::zero(4);
        assert_eq!(f4.pairing(&zero, f4.theta0(), RootKind::Root), 0);
        // E-series Coxeter numbers 12, 18, 30.
        for (alg, h) in [(Algebra::E6, 12), (Algebra::E7, 18), (Algebra::E8, 30)] {
            let rs = RootSystem::get(alg);
            assert_eq!(rs.pairing(&rs.rho, rs.theta0(), RootKind::Root), h - 1, "{alg}");
        }
    }

    #[test]
    fn rho_against_simple_coroots() {
        for alg in Algebra::ALL {
            let rs = RootSystem::get(alg);
            for root in &rs.positive_roots {
                if root.root_coords.iter().sum::<i64>() == 1 {
                    assert_eq!(rs.pairing(&rs.rho, root, RootKind::Coroot), 1);
                }
            }
        }
    }

    #[test]
    fn weyl_dims_of_named_representations() {
        let g2 = RootSystem::get(Algebra::G2);
        assert_eq!(g2.weyl_dim(&Weight::fundamental(2, 1)).unwrap(), Int::from(7));
        assert_eq!(g2.weyl_dim(&Weight::fundamental(2, 2)).unwrap(), Int::from(14));
        let f4 = RootSystem::get(Algebra::F4);
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 1)).unwrap(), Int::from(26));
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 4)).unwrap(), Int::from(52));
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 2)).unwrap(), Int::from(273));
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 3)).unwrap(), Int::from(1274));
        let e6 = RootSystem::get(Algebra::E6);
        assert_eq!(e6.weyl_dim(&Weight::fundamental(6, 1)).unwrap(), Int::from(27));
        assert_eq!(e6.weyl_dim(&Weight::fundamental(6, 2)).unwrap(), Int::from(78));
        let e7 = RootSystem::get(Algebra::E7);
        assert_eq!(e7.weyl_dim(&Weight::fundamental(7, 7)).unwrap(), Int::from(56));
        assert_eq!(e7.weyl_dim(&Weight::fundamental(7, 1)).unwrap(), Int::from(133));
        let e8 = RootSystem::get(Algebra::E8);
        assert_eq!(e8.weyl_dim(&Weight::fundamental(8, 8)).unwrap(), Int::from(248));
        assert_eq!(e8.weyl_dim(&Weight::fundamental(8, 1)).unwrap(), Int::from(3875));
        assert!(g2.weyl_dim(&Weight(vec![-1, 0])).is_err());
    }

    #[test]
    fn adjoint_node_is_theta0() {
        for (alg, node) in [
            (Algebra::G2, 2),
            (Algebra::F4, 4),
            (Algebra::E6, 2),
            (Algebra::E7, 1),
            (Algebra::E8, 8),
        ] {
            let rs = RootSystem::get(alg);
            let theta = Weight(rs.theta0().weight_coords.clone());
            assert_eq!(theta, Weight::fundamental(rs.rank, node), "{alg}");
        }
    }

    #[test]
    fn to_dominant_behaviour() {
        let g2 = RootSystem::get(Algebra::G2);
        let l1 = Weight::fundamental(2, 1);
        assert_eq!(g2.to_dominant(&l1), (l1.clone(), 1, false));
        // A single reflection of lambda_1 comes back with sign -1.
        let x = l1.add(&g2.rho);
        let reflected = g2.simple_reflect(&x, 0).sub(&g2.rho);
        assert_eq!(g2.to_dominant(&reflected), (l1.clone(), -1, false));
        // <w + rho, alpha_i-check> = 0 puts the weight on a wall.
        let wall = Weight(vec![-1, 3]);
        let (_, _, on_wall) = g2.to_dominant(&wall);
        assert!(on_wall);
        // Idempotence on the weight output.
        let w = Weight(vec![-3, 2]);
        let (dom, _, _) = g2.to_dominant(&w);
        let (dom2, sign2, _) = g2.to_dominant(&dom);
        assert_eq!((dom2, sign2), (dom, 1));
    }

    #[test]
    fn dual_weights() {
        let e6 = RootSystem::get(Algebra::E6);
        assert_eq!(e6.dual_weight(&Weight::fundamental(6, 1)), Weight::fundamental(6, 6));
        assert_eq!(e6.dual_weight(&Weight::fundamental(6, 2)), Weight::fundamental(6, 2));
        let g2 = RootSystem::get(Algebra::G2);
        assert_eq!(g2.dual_weight(&Weight::fundamental(2, 1)), Weight::fundamental(2, 1));
        let e7 = RootSystem::get(Algebra::E7);
        assert_eq!(e7.dual_weight(&Weight::fundamental(7, 7)), Weight::fundamental(7, 7));
    }

    #[test]
    fn orbit_sizes_match_enumeration() {
        for alg in [Algebra::G2, Algebra::F4] {
            let rs = RootSystem::get(alg);
            for i in 1..=rs.rank {
                let w = Weight::fundamental(rs.rank, i);
                let orbit = rs.expand_orbit(&w);
                assert_eq!(orbit.len() as u64, rs.orbit_size(&w), "{alg} node {i}");
            }
        }
        let e8 = RootSystem::get(Algebra::E8);
        let adjoint = Weight::fundamental(8, 8);
        assert_eq!(e8.orbit_size(&adjoint), 240);
        assert_eq!(e8.expand_orbit(&adjoint).len(), 240);
    }

    #[test]
    fn form_matches_integer_pairings() {
        for alg in Algebra::ALL {
            let rs = RootSystem::get(alg);
            for root in rs.positive_roots.iter().step_by(3) {
                let alpha = Weight(root.weight_coords.clone());
                let via_form = rs.form(&rs.rho, &alpha);
                let via_table = rs.pairing(&rs.rho, root, RootKind::Root);
                assert_eq!(via_form, Rat::from_integer(via_table.into()));
                assert_eq!(
                    rs.form(&alpha, &alpha),
                    Rat::from_integer((2 * root.half_norm).into())
                );
            }
        }
    }

    #[test]
    fn root_coords_roundtrip() {
        let f4 = RootSystem::get(Algebra::F4);
        for root in &f4.positive_roots {
            let w = Weight(root.weight_coords.clone());
            assert_eq!(f4.root_coords_of(&w).unwrap(), root.root_coords);
        }
        // A fundamental weight of E6 is not in the root lattice.
        let e6 = RootSystem::get(Algebra::E6);
        assert!(e6.root_coords_of(&Weight::fundamental(6, 1)).is_none());
        assert!(e6.root_coords_of(&Weight::fundamental(6, 2)).is_some());
    }
}
