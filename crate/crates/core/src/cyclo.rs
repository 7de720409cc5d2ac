//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A [`CycloNumber`] stores its conductor `N` and a vector of `phi(N)` exact
//! rationals: the coordinates in the power basis `1, zeta, ..., zeta^(phi-1)`
//! reduced modulo the N-th cyclotomic polynomial. Arithmetic between mixed
//! conductors lifts both operands to the least common multiple and reduces
//! the result back to its minimal conductor, with the convention that a
//! conductor is never congruent to 2 mod 4.
//!
//! All operations are pure; the per-conductor tables (cyclotomic polynomial
//! and reduced powers of `zeta`) live behind a lock and are safe to share
//! between threads.

use crate::{divisors, euler_phi, gcd, lcm, linalg::Matrix, Error, Int, Rat, Result};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// Per-conductor data: the cyclotomic polynomial and every power of `zeta`
/// reduced into the power basis.
struct ConductorTable {
    n: u64,
    phi: usize,
    /// `powers[k]` is `zeta_n^k` in the power basis, `k < max(n, 2*phi-1)`.
    powers: Vec<Vec<Int>>,
}

static TABLES: OnceLock<RwLock<HashMap<u64, Arc<ConductorTable>>>> = OnceLock::new();

fn tables() -> &'static RwLock<HashMap<u64, Arc<ConductorTable>>> {
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

fn table(n: u64) -> Arc<ConductorTable> {
    if let Some(t) = tables().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(ConductorTable::build(n));
    let mut guard = tables().write().unwrap();
    Arc::clone(guard.entry(n).or_insert(built))
}

/// Dense product of integer polynomials.
fn poly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic(num: &[Int], den: &[Int]) -> Vec<Int> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![Int::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + den.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Int::is_zero), "non-exact polynomial division");
    quot
}

/// The N-th cyclotomic polynomial, computed by the recursive division
/// `Phi_N = (x^N - 1) / prod_(d|N, d<N) Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Int> {
    let mut memo: HashMap<u64, Vec<Int>> = HashMap::new();
    for d in divisors(n) {
        let mut xn_minus_1 = vec![Int::zero(); d as usize + 1];
        xn_minus_1[0] = -Int::one();
        xn_minus_1[d as usize] = Int::one();
        let mut den = vec![Int::one()];
        for e in divisors(d) {
            if e < d {
                den = poly_mul(&den, &memo[&e]);
            }
        }
        memo.insert(d, poly_div_monic(&xn_minus_1, &den));
    }
    memo.remove(&n).unwrap()
}

impl ConductorTable {
    fn build(n: u64) -> Self {
        let phi = euler_phi(n) as usize;
        let cyclo = cyclotomic_polynomial(n);
        debug_assert_eq!(cyclo.len(), phi + 1);
        let rows = (n as usize).max(2 * phi - 1);
        let mut powers = Vec::with_capacity(rows);
        let mut cur = vec![Int::zero(); phi];
        cur[0] = Int::one();
        powers.push(cur.clone());
        for _ in 1..rows {
            // Multiply by x, then fold x^phi back using the monic relation
            // x^phi = -(c_0 + c_1 x + ... + c_(phi-1) x^(phi-1)).
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Int::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    cur[i] -= &top * &cyclo[i];
                }
            }
            powers.push(cur.clone());
        }
        ConductorTable { n, phi, powers }
    }

    fn power(&self, k: u64) -> &[Int] {
        &self.powers[(k % self.n.max(1)) as usize]
    }
}

/// An exact element of a cyclotomic field.
#[derive(Debug, Clone)]
pub struct CycloNumber {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber { conductor: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycloNumber { conductor: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycloNumber { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    /// `zeta_N^k`, canonically reduced. The zeroth root of unity of any
    /// conductor is 1.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u64;
        if k == 0 {
            return Self::one();
        }
        // Minimal order of zeta_n^k, then the 2 mod 4 normalisation.
        let order = n / gcd(n, k);
        let mut exp = (k / gcd(n, k)) % order;
        let mut sign = false;
        let mut m = order;
        if m % 4 == 2 {
            m /= 2;
            // zeta_(2m') = -zeta_m'^((m'+1)/2) with m' odd.
            sign = exp % 2 == 1;
            exp = (exp * ((m + 1) / 2)) % m;
        }
        if m == 1 {
            return if sign { Self::from_int(-1) } else { Self::one() };
        }
        let t = table(m);
        let coeffs = t
            .power(exp)
            .iter()
            .map(|c| {
                let r = Rat::from_integer(c.clone());
                if sign {
                    -r
                } else {
                    r
                }
            })
            .collect();
        CycloNumber { conductor: m, coeffs }
    }

    /// `sum of coeff * zeta_n^exp` over `(exp, coeff)` terms, built in one
    /// pass and reduced once. This is the fast path for q-numbers.
    pub fn sum_of_roots(n: u64, terms: &[(i64, i64)]) -> Self {
        assert!(n >= 1);
        if n == 1 {
            let total: i64 = terms.iter().map(|&(_, c)| c).sum();
            return Self::from_int(total);
        }
        let t = table(n);
        let mut out = vec![Rat::zero(); t.phi];
        for &(exp, coeff) in terms {
            if coeff == 0 {
                continue;
            }
            let e = exp.rem_euclid(n as i64) as u64;
            for (k, p) in t.power(e).iter().enumerate() {
                if !p.is_zero() {
                    out[k] += Rat::from_integer(p * Int::from(coeff));
                }
            }
        }
        CycloNumber { conductor: n, coeffs: out }.reduced()
    }

    /// Construct from explicit data, validating and reducing.
    pub fn new(conductor: u64, coeffs: Vec<Rat>) -> Result<Self> {
        if conductor == 0 || coeffs.len() != euler_phi(conductor) as usize {
            return Err(Error::BadExponent(format!(
                "coefficient vector of length {} does not match phi({conductor})",
                coeffs.len()
            )));
        }
        Ok(CycloNumber { conductor, coeffs }.reduced())
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if this element lies in `Z`.
    pub fn as_integer(&self) -> Option<Int> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    fn lift_coeffs(&self, m: u64) -> Vec<Rat> {
        debug_assert_eq!(m % self.conductor, 0);
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let t = table(m);
        let step = m / self.conductor;
        let mut out = vec![Rat::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in t.power(i as u64 * step).iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * Rat::from_integer(p.clone());
                }
            }
        }
        out
    }

    /// Rewrite at a larger conductor (a multiple of the current one).
    pub fn lift_to(&self, m: u64) -> Self {
        assert_eq!(m % self.conductor, 0, "target conductor must be a multiple");
        CycloNumber { conductor: m, coeffs: self.lift_coeffs(m) }
    }

    fn unify(&self, other: &Self) -> (u64, Vec<Rat>, Vec<Rat>) {
        let m = lcm(self.conductor, other.conductor);
        (m, self.lift_coeffs(m), other.lift_coeffs(m))
    }

    /// Reduce to the minimal conductor (never 2 mod 4).
    fn reduced(mut self) -> Self {
        // Rational fast path.
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            let c = self.coeffs.swap_remove(0);
            return Self::from_rat(c);
        }
        loop {
            let n = self.conductor;
            if n % 4 == 2 {
                self = self.descend_2_mod_4();
                continue;
            }
            let mut descended = false;
            for p in prime_divisors(n) {
                if let Some(next) = self.try_descend(p) {
                    self = next;
                    descended = true;
                    break;
                }
            }
            if !descended {
                return self;
            }
            if self.coeffs[1..].iter().all(Rat::is_zero) {
                let c = self.coeffs.swap_remove(0);
                return Self::from_rat(c);
            }
        }
    }

    /// `Q(zeta_n) = Q(zeta_(n/2))` for `n = 2 mod 4`: rewrite using
    /// `zeta_n = -zeta_m^((m+1)/2)` with `m = n/2` odd.
    fn descend_2_mod_4(&self) -> Self {
        let m = self.conductor / 2;
        debug_assert!(m % 2 == 1 && m > 1);
        let t = table(m);
        let half = (m + 1) / 2;
        let mut out = vec![Rat::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * half) % m;
            let negate = i % 2 == 1;
            for (j, p) in t.power(e).iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let term = c * Rat::from_integer(p.clone());
                if negate {
                    out[j] -= term;
                } else {
                    out[j] += term;
                }
            }
        }
        CycloNumber { conductor: m, coeffs: out }
    }

    /// Try to rewrite in `Q(zeta_(n/p))`; `None` when the element does not
    /// lie in that subfield.
    fn try_descend(&self, p: u64) -> Option<Self> {
        let n = self.conductor;
        let m = n / p;
        if m == 1 {
            return None; // rational fast path already ran
        }
        if euler_phi(m) == euler_phi(n) {
            // Same field (n = 2m with m odd); handled by the 2 mod 4 rule.
            return None;
        }
        // Invariance under Gal(Q(zeta_n)/Q(zeta_m)) = { sigma_j : j = 1 mod m }.
        let mut j = 1 + m;
        while j < n {
            if gcd(j, n) == 1 && self.galois_raw(j) != self.coeffs {
                return None;
            }
            j += m;
        }
        // Rewrite in the basis zeta_m^t = zeta_n^(p t).
        let tn = table(n);
        let phi_m = euler_phi(m) as usize;
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(phi_m);
        for t in 0..phi_m {
            cols.push(
                tn.power(p * t as u64).iter().map(|c| Rat::from_integer(c.clone())).collect(),
            );
        }
        let rows = tn.phi;
        let mat = Matrix::new(
            rows,
            phi_m,
            (0..rows).flat_map(|r| cols.iter().map(move |c| c[r].clone())).collect::<Vec<_>>(),
        );
        let x = mat
            .solve(&self.coeffs)
            .expect("Galois-invariant element must lie in the subfield");
        let out = CycloNumber { conductor: m, coeffs: x };
        if m % 4 == 2 {
            Some(out.descend_2_mod_4())
        } else {
            Some(out)
        }
    }

    /// Coefficients of `sigma_j(self)` at the same conductor, without
    /// reduction.
    fn galois_raw(&self, j: u64) -> Vec<Rat> {
        let t = table(self.conductor);
        let mut out = vec![Rat::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * j) % self.conductor;
            for (k, p) in t.power(e).iter().enumerate() {
                if !p.is_zero() {
                    out[k] += c * Rat::from_integer(p.clone());
                }
            }
        }
        out
    }

    /// Apply the Galois automorphism `zeta_N -> zeta_N^j`; `j` must be
    /// coprime to the conductor.
    pub fn galois(&self, j: i64) -> Result<Self> {
        let n = self.conductor;
        let j = j.rem_euclid(n as i64) as u64;
        if gcd(j, n) != 1 {
            return Err(Error::GaloisNotCoprime { j, n });
        }
        Ok(CycloNumber { conductor: n, coeffs: self.galois_raw(j) }.reduced())
    }

    /// Complex conjugation (`zeta -> zeta^(-1)`).
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor as i64 - 1).expect("-1 is coprime to the conductor")
    }

    pub(crate) fn mul_unreduced(&self, other: &Self) -> Self {
        let (m, a, b) = self.unify(other);
        let t = table(m);
        let phi = t.phi;
        let mut conv = vec![Rat::zero(); 2 * phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        let mut out: Vec<Rat> = conv[..phi].to_vec();
        for (e, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (k, p) in t.powers[e].iter().enumerate() {
                if !p.is_zero() {
                    out[k] += c * Rat::from_integer(p.clone());
                }
            }
        }
        CycloNumber { conductor: m, coeffs: out }
    }

    fn add_unreduced(&self, other: &Self) -> Self {
        let (m, mut a, b) = self.unify(other);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        CycloNumber { conductor: m, coeffs: a }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rat(r.recip()));
        }
        let n = self.conductor;
        let phi_poly: Vec<Rat> =
            cyclotomic_polynomial(n).into_iter().map(Rat::from_integer).collect();
        let a: Vec<Rat> = self.coeffs.clone();
        // Extended Euclid tracking only the cofactor of `a`.
        let mut r0 = phi_poly;
        let mut r1 = trim(a);
        let mut t0: Vec<Rat> = vec![];
        let mut t1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul_rat(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial is irreducible");
        let c = r0[0].clone();
        let phi = euler_phi(n) as usize;
        let mut coeffs = vec![Rat::zero(); phi];
        for (i, v) in t0.into_iter().enumerate() {
            coeffs[i] = v / c.clone();
        }
        Ok(CycloNumber { conductor: n, coeffs }.reduced())
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unreduced(&base);
            }
            base = base.mul_unreduced(&base);
            e >>= 1;
        }
        Ok(result.reduced())
    }

    /// The multiplicative order when this element is a root of unity.
    ///
    /// Roots of unity in `Q(zeta_N)` have order dividing `lcm(2, N)`, so only
    /// divisors of that bound are tested.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm(2, self.conductor);
        if !self.pow(bound as i64).unwrap().is_one() {
            return None;
        }
        divisors(bound).into_iter().find(|&t| self.pow(t as i64).unwrap().is_one())
    }

    /// Principal complex embedding `zeta_N -> exp(2 pi i / N)`, in double
    /// precision. Display and numeric cross-checks only; decisions never
    /// consume this.
    pub fn embed(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / n;
            z += c.to_f64().unwrap_or(f64::NAN) * Complex64::new(angle.cos(), angle.sin());
        }
        z
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

/// Division with remainder over `Q[x]`; returns `(quotient, remainder)`.
fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!den.is_empty());
    if num.len() < den.len() {
        return (vec![], num.to_vec());
    }
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![Rat::zero(); qlen];
    let lead = den.last().unwrap();
    for k in (0..qlen).rev() {
        let c = rem[k + den.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        let q = c / lead;
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &q * di;
        }
        quot[k] = q;
    }
    (trim(quot), trim(rem))
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.unify(other);
        a == b
    }
}

impl Eq for CycloNumber {}

impl std::ops::Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.add_unreduced(rhs).reduced()
    }
}

impl std::ops::Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.mul_unreduced(rhs).reduced()
    }
}

impl std::ops::Div for &CycloNumber {
    type Output = CycloNumber;
    /// Panics on a zero divisor; use [`CycloNumber::inverse`] to handle that
    /// case explicitly.
    fn div(self, rhs: &CycloNumber) -> CycloNumber {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl std::ops::Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl std::ops::Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl Zero for CycloNumber {
    fn zero() -> Self {
        CycloNumber::zero()
    }
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
}

impl One for CycloNumber {
    fn one() -> Self {
        CycloNumber::one()
    }
    fn is_one(&self) -> bool {
        CycloNumber::is_one(self)
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CycloJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<Rat>().map_err(|e| D::Error::custom(format!("bad rational: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycloNumber::new(raw.conductor, coeffs).map_err(D::Error::custom)
    }
}
