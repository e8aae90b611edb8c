//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are indexed from zero internally and printed as `x1, x2, ...`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::perm::{next_permutation, signed_perms, Perm};
use crate::rational::Q;
use crate::tableaux::Valences;

/// Exponent vector. Ordered by total degree, then lexicographically with `x1` largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: Vec<u16>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub canonical: String,
    pub terms: Vec<TermJson>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> MPoly {
        let mut p = MPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> MPoly {
        MPoly::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> MPoly {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        MPoly::monomial(m, Q::one())
    }

    /// `x_j - x_i` (zero-based indices).
    pub fn difference(nvars: usize, j: usize, i: usize) -> MPoly {
        &MPoly::var(nvars, j) - &MPoly::var(nvars, i)
    }

    pub fn monomial(m: Monomial, c: Q) -> MPoly {
        let mut p = MPoly::zero(m.0.len());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u16>, Q)>) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial::from_exps(&e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn is_one(&self) -> bool {
        self.nterms() == 1 && self.coeff(&Monomial::one(self.nvars)).is_one()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `x_j - x_i`.
    pub fn mul_difference(&self, j: usize, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut a = m.clone();
            a.0[j] += 1;
            out.add_term(a, c.clone());
            let mut b = m.clone();
            b.0[i] += 1;
            out.add_term(b, -c);
        }
        out
    }

    /// Multiplies by `x_i^k`.
    pub fn mul_var_power(&self, i: usize, k: u16) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut a = m.clone();
                    a.0[i] += k;
                    (a, c.clone())
                })
                .collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut a = m.clone();
                a.0[i] -= 1;
                out.add_term(a, c * Q::int(e as i64));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[i].pow(e as i32);
                }
            }
            total += t;
        }
        total
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| c.to_f64() * m.0.iter().enumerate().map(|(i, &e)| point[i].powi(e as i32)).product::<f64>())
            .sum()
    }

    /// Substitutes `x_i -> x_{g(i)}`, so that `act(g, act(h, P)) = act(gh, P)`.
    pub fn act(&self, g: &Perm) -> Result<MPoly> {
        if g.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: g.len() });
        }
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(self.nvars);
            for (i, &x) in m.0.iter().enumerate() {
                e.0[g.apply(i)] = x;
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Swaps `x_k` and `x_{k+1}`.
    pub fn swap_adjacent(&self, k: usize) -> MPoly {
        self.act(&Perm::transposition(self.nvars, k, k + 1)).expect("arity matches")
    }

    /// Re-embeds into `nvars` variables by sending `x_i` to `x_{map[i]}`.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(nvars);
            for (i, &x) in m.0.iter().enumerate() {
                e.0[map[i]] += x;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Exact quotient by `x_j - x_i`, or `None` when it does not divide.
    pub fn div_difference(&self, j: usize, i: usize) -> Option<MPoly> {
        // Group by the cofactor in the other variables and the degree d in (x_i, x_j);
        // each group is sum_a c_a x_j^a x_i^(d-a), divided by (t - 1) in t = x_j / x_i.
        let mut groups: HashMap<(Monomial, u16), Vec<Q>> = HashMap::new();
        for (m, c) in &self.terms {
            let a = m.0[j];
            let d = a + m.0[i];
            let mut base = m.clone();
            base.0[i] = 0;
            base.0[j] = 0;
            let g = groups.entry((base, d)).or_insert_with(|| vec![Q::zero(); d as usize + 1]);
            g[a as usize] = c.clone();
        }
        let mut quotient = MPoly::zero(self.nvars);
        for ((base, d), c) in groups {
            let mut carry = Q::zero();
            for a in (1..=d as usize).rev() {
                carry += &c[a];
                if !carry.is_zero() {
                    let mut m = base.clone();
                    m.0[j] = a as u16 - 1;
                    m.0[i] = d - a as u16;
                    quotient.terms.insert(m, carry.clone());
                }
            }
            if !(carry + &c[0]).is_zero() {
                return None;
            }
        }
        Some(quotient)
    }

    /// Divides by a product of differences `x_j - x_i`, given as `(j, i)` pairs.
    pub fn div_differences(&self, pairs: &[(usize, usize)]) -> Result<MPoly> {
        let mut p = self.clone();
        for &(j, i) in pairs {
            p = p.div_difference(j, i).ok_or_else(|| not_divisible(&p))?;
        }
        Ok(p)
    }

    /// Exact division by graded-lex reduction against the single divisor.
    pub fn exact_divide(&self, divisor: &MPoly) -> Result<MPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        let (lm, lc) = match divisor.leading_term() {
            None => return Err(Error::NotDivisible { terms: self.nterms(), witness: "division by zero".into() }),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        if let Some((j, i)) = divisor.as_difference() {
            return self.div_difference(j, i).ok_or_else(|| not_divisible(self));
        }
        let mut rem = self.clone();
        let mut quotient = MPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(not_divisible(&rem));
            }
            let t = MPoly::monomial(m.div(&lm), c / &lc);
            rem = &rem - &(&t * divisor);
            quotient = &quotient + &t;
        }
        Ok(quotient)
    }

    /// Recognizes `x_j - x_i`.
    fn as_difference(&self) -> Option<(usize, usize)> {
        if self.nterms() != 2 {
            return None;
        }
        let mut pos = None;
        let mut neg = None;
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let v = m.0.iter().position(|&e| e == 1)?;
            if c.is_one() {
                pos = Some(v);
            } else if *c == Q::int(-1) {
                neg = Some(v);
            }
        }
        Some((pos?, neg?))
    }

    /// Collapses each block of variables to a single new variable.
    pub fn project_eval(&self, v: &Valences) -> Result<MPoly> {
        if v.n() != self.nvars {
            return Err(Error::Arity { expected: v.n(), got: self.nvars });
        }
        let block = v.block_of();
        let mut out = MPoly::zero(v.len());
        for (m, c) in &self.terms {
            let mut e = Monomial::one(v.len());
            for (i, &x) in m.0.iter().enumerate() {
                e.0[block[i]] += x;
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&c.abs().to_string());
            if m.degree() > 0 {
                s.push_str(" * ");
                s.push_str(&m.to_string());
            }
        }
        s
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            nvars: self.nvars,
            canonical: self.to_canonical_string(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson { coeff: c.to_string(), exponents: m.0.to_vec() })
                .collect(),
        }
    }
}

fn not_divisible(rem: &MPoly) -> Error {
    let witness = match rem.leading_term() {
        Some((m, c)) => format!("{c} * {m}"),
        None => "0".into(),
    };
    Error::NotDivisible { terms: rem.nterms(), witness }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self.to_canonical_string())
    }
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let (big, small) = if self.nterms() >= rhs.nterms() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly { (&self).$m(&rhs) }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// `prod_{j<k} (x_{i_j} - x_{i_k})` over the given (zero-based) index order.
pub fn vandermonde(nvars: usize, indices: &[usize]) -> Result<MPoly> {
    for (a, &i) in indices.iter().enumerate() {
        if i >= nvars {
            return Err(Error::Arity { expected: nvars, got: i + 1 });
        }
        if indices[..a].contains(&i) {
            return Err(Error::RepeatedIndex(i));
        }
    }
    // Determinant expansion: sum_sigma sgn(sigma) prod_a x_{i_sigma(a)}^(m-1-a).
    let m = indices.len();
    let mut terms = BTreeMap::new();
    for (sigma, sign) in signed_perms(m) {
        let mut e = Monomial::one(nvars);
        for (a, &s) in sigma.iter().enumerate() {
            e.0[indices[s]] = (m - 1 - a) as u16;
        }
        terms.insert(e, Q::int(sign as i64));
    }
    Ok(MPoly { nvars, terms })
}

/// `(j, i)` pairs with `i < j` inside each block, i.e. the factors `x_j - x_i` of
/// the block Vandermonde product.
pub fn block_difference_pairs(v: &Valences) -> Vec<(usize, usize)> {
    v.blocks()
        .into_iter()
        .flat_map(|r| {
            let r2 = r.clone();
            r.flat_map(move |i| r2.clone().filter(move |&j| j > i).map(move |j| (j, i)))
        })
        .collect()
}

/// Block-antisymmetrizer `prod_k (1/s_k!) sum_{sigma in S_{s_k}} sgn(sigma) sigma`.
///
/// Terms are first collapsed onto orbit representatives (exponents decreasing inside
/// each block); monomials with a repeated exponent inside a block cancel.
pub fn antisymmetrize(v: &Valences, p: &MPoly) -> Result<MPoly> {
    block_average(v, p, true)
}

/// Block-symmetrizer `prod_k (1/s_k!) sum_{sigma in S_{s_k}} sigma`.
pub fn symmetrize(v: &Valences, p: &MPoly) -> Result<MPoly> {
    block_average(v, p, false)
}

fn block_average(v: &Valences, p: &MPoly, signed: bool) -> Result<MPoly> {
    if v.n() != p.nvars {
        return Err(Error::Arity { expected: v.n(), got: p.nvars });
    }
    let blocks = v.blocks();
    let mut reps: BTreeMap<Monomial, Q> = BTreeMap::new();
    'terms: for (m, c) in &p.terms {
        let mut e = m.clone();
        let mut sign = 1;
        for r in &blocks {
            let slice = &mut e.0[r.clone()];
            if signed {
                for a in 0..slice.len() {
                    for b in a + 1..slice.len() {
                        match slice[a].cmp(&slice[b]) {
                            Ordering::Equal => continue 'terms,
                            Ordering::Less => sign = -sign,
                            Ordering::Greater => {}
                        }
                    }
                }
            }
            slice.sort_unstable_by(|a, b| b.cmp(a));
        }
        let entry = reps.entry(e).or_default();
        if sign > 0 {
            *entry += c;
        } else {
            *entry -= c;
        }
    }

    let mut out = MPoly::zero(p.nvars);
    if signed {
        let perms: Vec<Vec<(Vec<usize>, i32)>> = blocks.iter().map(|r| signed_perms(r.len())).collect();
        let norm = Q::from_bigint(v.group_order().into()).recip();
        for (rep, c) in reps {
            if c.is_zero() {
                continue;
            }
            let c = c * &norm;
            let mut idx = vec![0usize; blocks.len()];
            loop {
                let mut e = rep.clone();
                let mut sign = 1;
                for (k, r) in blocks.iter().enumerate() {
                    let (images, s) = &perms[k][idx[k]];
                    sign *= s;
                    for (a, &b) in images.iter().enumerate() {
                        e.0[r.start + a] = rep.0[r.start + b];
                    }
                }
                out.terms.insert(e, if sign > 0 { c.clone() } else { -&c });
                if !odometer(&mut idx, |k| perms[k].len()) {
                    break;
                }
            }
        }
    } else {
        for (rep, c) in reps {
            if c.is_zero() {
                continue;
            }
            let orbits: Vec<Vec<Vec<u16>>> = blocks
                .iter()
                .map(|r| {
                    let mut cur: Vec<u16> = rep.0[r.clone()].to_vec();
                    cur.reverse();
                    let mut all = vec![cur.clone()];
                    while next_permutation(&mut cur) {
                        all.push(cur.clone());
                    }
                    all
                })
                .collect();
            let size: usize = orbits.iter().map(|o| o.len()).product();
            let c = c / Q::from(size);
            let mut idx = vec![0usize; blocks.len()];
            loop {
                let mut e = rep.clone();
                for (k, r) in blocks.iter().enumerate() {
                    e.0[r.clone()].copy_from_slice(&orbits[k][idx[k]]);
                }
                out.terms.insert(e, c.clone());
                if !odometer(&mut idx, |k| orbits[k].len()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Advances a mixed-radix counter; false after wrapping around.
pub(crate) fn odometer(idx: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for (k, i) in idx.iter_mut().enumerate() {
        *i += 1;
        if *i < radix(k) {
            return true;
        }
        *i = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn c(v: i64) -> Q {
        Q::int(v)
    }

    /// Oracle: literal sum over the block group.
    fn naive_average(v: &Valences, p: &MPoly, signed: bool) -> MPoly {
        let n = v.n();
        let blocks = v.block_of();
        let mut out = MPoly::zero(n);
        let mut count = 0i64;
        for g in Perm::all(n) {
            if (0..n).all(|i| blocks[g.apply(i)] == blocks[i]) {
                count += 1;
                let term = p.act(&g).unwrap();
                let s = if signed { g.sign() } else { 1 };
                out = &out + &term.scale(&c(s as i64));
            }
        }
        out.scale(&Q::new(1, count))
    }

    fn arb_poly(nvars: usize, max_terms: usize, max_exp: u16) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 0..=max_terms)
            .prop_map(move |ts| MPoly::from_terms(nvars, ts.into_iter().map(|(e, k)| (e, c(k)))))
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(3, &[1]).unwrap(), MPoly::one(3));
        assert_eq!(vandermonde(3, &[2, 0]).unwrap(), MPoly::difference(3, 2, 0));
        let v = vandermonde(6, &[1, 5, 0]).unwrap();
        let expect = MPoly::difference(6, 1, 5) * MPoly::difference(6, 1, 0) * MPoly::difference(6, 5, 0);
        assert_eq!(v, expect);
        assert!(matches!(vandermonde(3, &[1, 1]), Err(Error::RepeatedIndex(1))));
        assert_eq!(vandermonde(5, &[0, 1, 2, 3, 4]).unwrap().nterms(), 120);
    }

    #[test]
    fn act_examples() {
        let t = Perm::transposition(2, 0, 1);
        assert_eq!(x(2, 0).act(&t).unwrap(), x(2, 1));
        let d = MPoly::difference(2, 1, 0);
        assert_eq!(d.act(&t).unwrap(), -&d);
        assert_eq!(d.act(&Perm::identity(2)).unwrap(), d);
        assert!(d.act(&Perm::identity(3)).is_err());
    }

    #[test]
    fn averaging_examples() {
        let v: Valences = "2".parse().unwrap();
        let a = antisymmetrize(&v, &x(2, 0)).unwrap();
        assert_eq!(a, (&x(2, 0) - &x(2, 1)).scale(&Q::new(1, 2)));
        let s = symmetrize(&v, &x(2, 0)).unwrap();
        assert_eq!(s, (&x(2, 0) + &x(2, 1)).scale(&Q::new(1, 2)));
        let v3: Valences = "3".parse().unwrap();
        let anti = MPoly::difference(3, 1, 0);
        assert!(symmetrize(&v3, &anti).unwrap().is_zero());
    }

    #[test]
    fn division_examples() {
        let p = &x(2, 1).pow(2) - &x(2, 0).pow(2);
        let q = p.exact_divide(&MPoly::difference(2, 1, 0)).unwrap();
        assert_eq!(q, &x(2, 1) + &x(2, 0));
        assert_eq!(p.exact_divide(&MPoly::one(2)).unwrap(), p);
        let err = x(2, 0).exact_divide(&MPoly::difference(2, 1, 0)).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
        let g = &(&x(2, 0) * &x(2, 1)) + &MPoly::one(2);
        assert!(p.exact_divide(&g).is_err());
        assert!(p.exact_divide(&MPoly::zero(2)).is_err());
    }

    #[test]
    fn projection_examples() {
        let p = &x(3, 0) * &x(3, 2);
        assert_eq!(p.project_eval(&Valences::ones(3)).unwrap(), p);
        let q = &x(2, 0) * &x(2, 1);
        assert_eq!(q.project_eval(&"2".parse().unwrap()).unwrap(), x(1, 0).pow(2));
        let r = MPoly::difference(4, 2, 0) * MPoly::difference(4, 3, 1);
        assert_eq!(r.project_eval(&"2,2".parse().unwrap()).unwrap(), MPoly::difference(2, 1, 0).pow(2));
    }

    #[test]
    fn canonical_string_and_json() {
        let p = (&x(3, 0) - &x(3, 2)).scale(&Q::new(1, 2));
        assert_eq!(p.to_canonical_string(), "1/2 * x1 - 1/2 * x3");
        let q = &(&x(2, 1).pow(2) * &x(2, 0)).scale(&c(-3)) + &MPoly::constant(2, c(4));
        assert_eq!(q.to_string(), "-3 * x1 x2^2 + 4");
        assert_eq!(MPoly::zero(2).to_string(), "0");
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"nvars":3,"canonical":"1/2 * x1 - 1/2 * x3","terms":[{"coeff":"1/2","exponents":[1,0,0]},{"coeff":"-1/2","exponents":[0,0,1]}]}"#
        );
    }

    #[test]
    fn block_vandermonde_divides_antisymmetrization() {
        for v in ["2,2,1,1", "3,1", "2,3", "4", "1,2,2"] {
            let v: Valences = v.parse().unwrap();
            let n = v.n();
            let p = &(&x(n, 0).pow(3) * &x(n, n - 1)) + &(&x(n, 1) * &x(n, 2).pow(2));
            let a = antisymmetrize(&v, &p).unwrap();
            assert!(a.div_differences(&block_difference_pairs(&v)).is_ok());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn averaging_matches_group_sum(p in arb_poly(4, 6, 3), which in 0usize..4) {
            let v: Valences = ["2,2", "3,1", "1,2,1", "4"][which].parse().unwrap();
            let a = antisymmetrize(&v, &p).unwrap();
            prop_assert_eq!(&a, &naive_average(&v, &p, true));
            prop_assert_eq!(&antisymmetrize(&v, &a).unwrap(), &a);
            let s = symmetrize(&v, &p).unwrap();
            prop_assert_eq!(&s, &naive_average(&v, &p, false));
            prop_assert_eq!(&symmetrize(&v, &s).unwrap(), &s);
        }

        #[test]
        fn act_is_a_group_action(p in arb_poly(4, 6, 3), gi in 0usize..24, hi in 0usize..24) {
            let all = Perm::all(4);
            let (g, h) = (&all[gi], &all[hi]);
            prop_assert_eq!(p.act(&g.compose(h)).unwrap(), p.act(h).unwrap().act(g).unwrap());
        }

        #[test]
        fn exact_divide_inverts_multiplication(p in arb_poly(3, 40, 4), q in arb_poly(3, 6, 3)) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!(&(&p * &q).exact_divide(&q).unwrap(), &p);
        }

        #[test]
        fn difference_division_inverts(p in arb_poly(4, 20, 4), j in 0usize..4, i in 0usize..4) {
            prop_assume!(i != j);
            prop_assert_eq!(&p.mul_difference(j, i).div_difference(j, i).unwrap(), &p);
            let off = &p.mul_difference(j, i) + &MPoly::constant(4, Q::new(1, 3));
            prop_assert!(off.div_difference(j, i).is_none());
        }

        #[test]
        fn vandermonde_is_product_of_differences(idx in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(), len in 0usize..=5) {
            let idx = &idx[..len];
            let mut p = MPoly::one(5);
            for a in 0..len {
                for b in a + 1..len {
                    p = p.mul_difference(idx[a], idx[b]);
                }
            }
            prop_assert_eq!(vandermonde(5, idx).unwrap(), p);
        }

        #[test]
        fn ring_axioms(a in arb_poly(3, 5, 3), b in arb_poly(3, 5, 3), d in arb_poly(3, 5, 3)) {
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            prop_assert_eq!(&(&(&a + &b) * &d), &(&(&a * &d) + &(&b * &d)));
            prop_assert_eq!(&(&(&a * &b) * &d), &(&a * &(&b * &d)));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn derivative_leibniz(a in arb_poly(3, 5, 3), b in arb_poly(3, 5, 3), i in 0usize..3) {
            let lhs = (&a * &b).derivative(i);
            let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
