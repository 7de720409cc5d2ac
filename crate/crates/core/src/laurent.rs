//! Laurent polynomials in one indeterminate, generic over the coefficient
//! ring. Backs the symbolic q-number algebra of the totient-bound procedure
//! and the generic-q verification of the explicit braid matrices.

use num_traits::Zero;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `sum_i coeffs[i] * q^(min_deg + i)` with nonzero first and last
/// coefficients; the zero polynomial stores an empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<T> {
    min_deg: i64,
    coeffs: Vec<T>,
}

impl<T: Clone + Zero + PartialEq> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn monomial(c: T, deg: i64) -> Self {
        LaurentPoly { min_deg: deg, coeffs: vec![c] }.normalized()
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_coeffs(min_deg: i64, coeffs: Vec<T>) -> Self {
        LaurentPoly { min_deg, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> i64 {
        assert!(!self.is_zero());
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        assert!(!self.is_zero());
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, deg: i64) -> T {
        if self.is_zero() || deg < self.min_deg || deg > self.max_deg() {
            T::zero()
        } else {
            self.coeffs[(deg - self.min_deg) as usize].clone()
        }
    }

    /// Iterate `(degree, coefficient)` over the stored (nonzero-span) range.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_deg: self.min_deg + by, coeffs: self.coeffs.clone() }
    }

    /// Coefficients as an ordinary polynomial, together with the power of q
    /// that was factored out (i.e. `self = q^shift * poly`).
    pub fn as_polynomial(&self) -> (i64, Vec<T>) {
        (self.min_deg, self.coeffs.clone())
    }
}

impl<T: Clone + Zero + PartialEq> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_deg.min(rhs.min_deg);
        let max = self.max_deg().max(rhs.max_deg());
        let mut coeffs = vec![T::zero(); (max - min + 1) as usize];
        for (d, c) in self.terms() {
            coeffs[(d - min) as usize] = coeffs[(d - min) as usize].clone() + c.clone();
        }
        for (d, c) in rhs.terms() {
            coeffs[(d - min) as usize] = coeffs[(d - min) as usize].clone() + c.clone();
        }
        LaurentPoly::from_coeffs(min, coeffs)
    }
}

impl<T: Clone + Zero + PartialEq + Neg<Output = T>> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Clone + Zero + PartialEq + Neg<Output = T> + Sub<Output = T>> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Clone + Zero + PartialEq + Mul<Output = T>> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let min = self.min_deg + rhs.min_deg;
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.clone() * b.clone();
                coeffs[i + j] = coeffs[i + j].clone() + t;
            }
        }
        LaurentPoly::from_coeffs(min, coeffs)
    }
}

impl<T: Clone + Zero + PartialEq> Add for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        &self + &rhs
    }
}

impl<T: Clone + Zero + PartialEq + Mul<Output = T>> Mul for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        &self * &rhs
    }
}

impl<T: Clone + Zero + PartialEq + Neg<Output = T>> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Clone + Zero + PartialEq + Neg<Output = T> + Sub<Output = T>> Sub for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
        &self - &rhs
    }
}

impl<T: Clone + Zero + PartialEq> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl<T: Clone + Zero + PartialEq + num_traits::One + Mul<Output = T>> num_traits::One
    for LaurentPoly<T>
{
    fn one() -> Self {
        LaurentPoly::constant(T::one())
    }
}

impl<T> LaurentPoly<T>
where
    T: Clone + Zero + PartialEq + Neg<Output = T> + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    /// Exact division; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![T::zero(); qlen];
        let lead = d.last().unwrap().clone();
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead.clone();
            for (i, di) in d.iter().enumerate() {
                let s = q.clone() * di.clone();
                rem[k + i] = rem[k + i].clone() - s;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.min_deg - divisor.min_deg, quot))
    }
}

/// The quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})` as a Laurent
/// polynomial: `q^{n-1} + q^{n-3} + ... + q^{1-n}`, with `[-n] = -[n]`.
pub fn qnumber_poly<T: Clone + Zero + PartialEq + num_traits::One + Neg<Output = T>>(
    n: i64,
) -> LaurentPoly<T> {
    match n.cmp(&0) {
        std::cmp::Ordering::Equal => LaurentPoly::zero(),
        std::cmp::Ordering::Greater => {
            let coeffs: Vec<T> = (0..2 * n - 1)
                .map(|i| if i % 2 == 0 { T::one() } else { T::zero() })
                .collect();
            LaurentPoly::from_coeffs(1 - n, coeffs)
        }
        std::cmp::Ordering::Less => -&qnumber_poly::<T>(-n),
    }
}
