//! Products of half-integer powers of differences times a polynomial.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{MPoly, PolyJson};
use crate::rational::Q;

/// `prod_{i<j} (x_j - x_i)^{m_ij / 2} * poly`, with the doubled exponents `m_ij`
/// stored in row-major upper-triangular order.
///
/// Canonical form: the polynomial has no factor `x_j - x_i`; the zero function
/// has all exponents zero. Equal functions then have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredFunction {
    nvars: usize,
    exps: Vec<i32>,
    poly: MPoly,
}

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

impl FactoredFunction {
    /// Builds a function from doubled exponents indexed by pairs `(i, j)`, `i < j`.
    pub fn new(poly: MPoly, doubled: impl IntoIterator<Item = ((usize, usize), i32)>) -> FactoredFunction {
        let n = poly.nvars();
        let mut exps = vec![0; n * (n - 1) / 2];
        for ((i, j), m) in doubled {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            exps[pair_index(n, a, b)] += m;
        }
        let mut f = FactoredFunction { nvars: n, exps, poly };
        f.canonicalize();
        f
    }

    pub fn from_poly(poly: MPoly) -> FactoredFunction {
        FactoredFunction::new(poly, [])
    }

    pub fn zero(nvars: usize) -> FactoredFunction {
        FactoredFunction::from_poly(MPoly::zero(nvars))
    }

    /// `prod_{i<j} (x_j - x_i)^{m / 2}`.
    pub fn vandermonde_power(nvars: usize, doubled: i32) -> FactoredFunction {
        FactoredFunction::new(MPoly::one(nvars), pairs(nvars).map(|p| (p, doubled)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Doubled exponent of `x_j - x_i`, `i < j`.
    pub fn doubled_exponent(&self, i: usize, j: usize) -> i32 {
        self.exps[pair_index(self.nvars, i, j)]
    }

    /// Nonzero doubled exponents.
    pub fn factors(&self) -> Vec<((usize, usize), i32)> {
        pairs(self.nvars).map(|(i, j)| ((i, j), self.doubled_exponent(i, j))).filter(|(_, m)| *m != 0).collect()
    }

    fn canonicalize(&mut self) {
        if self.poly.is_zero() {
            self.exps.iter_mut().for_each(|m| *m = 0);
            return;
        }
        for (i, j) in pairs(self.nvars) {
            while let Some(q) = self.poly.div_difference(j, i) {
                self.poly = q;
                self.exps[pair_index(self.nvars, i, j)] += 2;
            }
        }
    }

    pub fn scale(&self, c: &Q) -> FactoredFunction {
        if c.is_zero() {
            return FactoredFunction::zero(self.nvars);
        }
        FactoredFunction { nvars: self.nvars, exps: self.exps.clone(), poly: self.poly.scale(c) }
    }

    pub fn mul(&self, other: &FactoredFunction) -> FactoredFunction {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return FactoredFunction::zero(self.nvars);
        }
        FactoredFunction {
            nvars: self.nvars,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            poly: &self.poly * &other.poly,
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> FactoredFunction {
        let mut f = FactoredFunction { nvars: self.nvars, exps: self.exps.clone(), poly: &self.poly * p };
        f.canonicalize();
        f
    }

    /// Multiplies by `(x_i - x_j)^p` for distinct `i, j` and any integer `p`.
    pub fn mul_difference_power(&self, i: usize, j: usize, p: i32) -> FactoredFunction {
        assert_ne!(i, j);
        if self.is_zero() {
            return self.clone();
        }
        let mut f = self.clone();
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        f.exps[pair_index(self.nvars, a, b)] += 2 * p;
        if i < j && p % 2 != 0 {
            f.poly = -f.poly;
        }
        f
    }

    /// Sum of several functions. Exponents are aligned to the componentwise minimum;
    /// this needs matching parities.
    pub fn sum<'a>(nvars: usize, terms: impl IntoIterator<Item = &'a FactoredFunction>) -> Result<FactoredFunction> {
        let terms: Vec<&FactoredFunction> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        let Some(first) = terms.first() else {
            return Ok(FactoredFunction::zero(nvars));
        };
        let mut base = first.exps.clone();
        for t in &terms[1..] {
            for (k, (b, m)) in base.iter_mut().zip(&t.exps).enumerate() {
                if (*b - m) % 2 != 0 {
                    let (i, j) = pairs(nvars).nth(k).unwrap();
                    return Err(Error::ParityMismatch(i + 1, j + 1));
                }
                *b = (*b).min(*m);
            }
        }
        let mut poly = MPoly::zero(nvars);
        for t in &terms {
            let mut p = t.poly.clone();
            for ((i, j), (m, b)) in pairs(nvars).zip(t.exps.iter().zip(&base)) {
                for _ in 0..(m - b) / 2 {
                    p = p.mul_difference(j, i);
                }
            }
            poly = &poly + &p;
        }
        let mut f = FactoredFunction { nvars, exps: base, poly };
        f.canonicalize();
        Ok(f)
    }

    pub fn add(&self, other: &FactoredFunction) -> Result<FactoredFunction> {
        FactoredFunction::sum(self.nvars, [self, other])
    }

    pub fn sub(&self, other: &FactoredFunction) -> Result<FactoredFunction> {
        self.add(&other.scale(&Q::int(-1)))
    }

    /// Partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> FactoredFunction {
        let n = self.nvars;
        if self.is_zero() {
            return self.clone();
        }
        // Pairs touching i with nonzero exponent each lose one full power.
        let touching: Vec<(usize, usize, i32)> = pairs(n)
            .filter(|&(a, b)| a == i || b == i)
            .map(|(a, b)| (a, b, self.doubled_exponent(a, b)))
            .filter(|t| t.2 != 0)
            .collect();
        let mul_others = |p: MPoly, skip: Option<usize>| {
            touching.iter().enumerate().filter(|(k, _)| Some(*k) != skip).fold(p, |acc, (_, &(a, b, _))| acc.mul_difference(b, a))
        };
        let mut poly = mul_others(self.poly.derivative(i), None);
        for (k, &(_, b, m)) in touching.iter().enumerate() {
            // d/dx_i (x_b - x_a)^{m/2} = +-(m/2)(x_b - x_a)^{m/2 - 1}
            let c = Q::new(if b == i { m as i64 } else { -(m as i64) }, 2);
            poly = &poly + &mul_others(self.poly.scale(&c), Some(k));
        }
        let mut exps = self.exps.clone();
        for &(a, b, _) in &touching {
            exps[pair_index(n, a, b)] -= 2;
        }
        let mut f = FactoredFunction { nvars: n, exps, poly };
        f.canonicalize();
        f
    }

    /// `f(a x + b)` with `a = root^2`, applied to every variable.
    pub fn affine_pullback(&self, root: &Q, b: &Q) -> FactoredFunction {
        let n = self.nvars;
        let a = root * root;
        let lin: Vec<MPoly> = (0..n).map(|i| &MPoly::var(n, i).scale(&a) + &MPoly::constant(n, b.clone())).collect();
        let mut poly = MPoly::zero(n);
        for (m, c) in self.poly.terms() {
            let mut t = MPoly::constant(n, c.clone());
            for (i, l) in lin.iter().enumerate() {
                t = &t * &l.pow(m.get(i) as u32);
            }
            poly = &poly + &t;
        }
        let k: i32 = self.exps.iter().sum();
        let mut f = FactoredFunction { nvars: n, exps: self.exps.clone(), poly: poly.scale(&root.pow(k)) };
        f.canonicalize();
        f
    }

    /// Square of the value at a point, exact. Requires nonzero differences where exponents are negative.
    pub fn eval_square(&self, point: &[Q]) -> Q {
        let mut v = self.poly.eval(point);
        v = &v * &v;
        for ((i, j), m) in self.factors() {
            v *= (&point[j] - &point[i]).pow(m);
        }
        v
    }

    /// Value at a point of the increasing chamber; NaN when some difference is not positive
    /// and carries a fractional exponent.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut v = self.poly.eval_f64(point);
        for ((i, j), m) in self.factors() {
            let d = point[j] - point[i];
            v *= if m % 2 == 0 { d.powi(m / 2) } else { d.powf(m as f64 / 2.0) };
        }
        v
    }

    pub fn to_json(&self) -> FactoredJson {
        FactoredJson {
            nvars: self.nvars,
            text: self.to_string(),
            factors: self
                .factors()
                .into_iter()
                .map(|((i, j), m)| FactorJson { i: i + 1, j: j + 1, exponent: Q::new(m as i64, 2).to_string() })
                .collect(),
            poly: self.poly.to_json(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorJson {
    pub i: usize,
    pub j: usize,
    pub exponent: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactoredJson {
    pub nvars: usize,
    pub text: String,
    pub factors: Vec<FactorJson>,
    pub poly: PolyJson,
}

impl fmt::Display for FactoredFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if self.is_zero() || factors.is_empty() {
            return write!(f, "{}", self.poly);
        }
        let mut parts: Vec<String> = factors
            .iter()
            .map(|&((i, j), m)| {
                let e = Q::new(m as i64, 2);
                let base = format!("(x{} - x{})", j + 1, i + 1);
                if e.is_one() {
                    base
                } else if e.is_integer() && e.is_positive() {
                    format!("{base}^{e}")
                } else {
                    format!("{base}^({e})")
                }
            })
            .collect();
        if !self.poly.is_one() {
            parts.push(format!("({})", self.poly));
        }
        write!(f, "{}", parts.join(" * "))
    }
}

impl Serialize for FactoredFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
