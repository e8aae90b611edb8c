//! Virasoro Verma modules, null vectors, and the fusion recursion on formal series.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::bpz::{bsa_coefficient, compositions};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::rational::Q;
use crate::tableaux::enumerate_partitions;

/// Weakly decreasing mode numbers `[i_k, .., i_1]` for `L_{-i_k} ... L_{-i_1}`.
pub type Word = Vec<u32>;
pub type Terms = BTreeMap<Word, Q>;

fn add_into(target: &mut Terms, w: Word, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = target.entry(w.clone()).or_default();
    *e += c;
    if e.is_zero() {
        target.remove(&w);
    }
}

fn axpy(target: &mut Terms, a: &Q, x: &Terms) {
    for (w, c) in x {
        add_into(target, w.clone(), a * c);
    }
}

/// Normal-ordered element of `U(Vir^-)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PbwElement {
    pub terms: Terms,
}

impl PbwElement {
    pub fn one() -> PbwElement {
        PbwElement { terms: [(vec![], Q::one())].into_iter().collect() }
    }

    /// `L_{-m_1} ... L_{-m_k}` in normal order.
    pub fn word(modes: &[u32]) -> PbwElement {
        let m = VermaModule::new(Q::zero(), Q::one());
        let mut v = PbwElement::one().terms;
        for &k in modes.iter().rev() {
            v = m.act_terms(-(k as i64), &v);
        }
        PbwElement { terms: v }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u32]) -> Q {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut t = self.terms.clone();
        axpy(&mut t, &Q::one(), &other.terms);
        PbwElement { terms: t }
    }

    pub fn scale(&self, c: &Q) -> PbwElement {
        let mut t = Terms::new();
        axpy(&mut t, c, &self.terms);
        PbwElement { terms: t }
    }

    /// Product `self * other`, normal-ordered.
    pub fn mul(&self, other: &PbwElement) -> PbwElement {
        let m = VermaModule::new(Q::zero(), Q::one());
        let mut out = Terms::new();
        for (w, c) in &self.terms {
            let mut v = other.terms.clone();
            for &k in w.iter().rev() {
                v = m.act_terms(-(k as i64), &v);
            }
            axpy(&mut out, c, &v);
        }
        PbwElement { terms: out }
    }

    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest power of L_{-1} first.
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        for (k, w) in keys.into_iter().enumerate() {
            let c = &self.terms[w];
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let mut i = 0;
            while i < w.len() {
                let mut j = i;
                while j < w.len() && w[j] == w[i] {
                    j += 1;
                }
                let p = j - i;
                factors.push(if p == 1 { format!("L-{}", w[i]) } else { format!("L-{}^{}", w[i], p) });
                i = j;
            }
            let body = if factors.is_empty() { "1".to_string() } else { factors.join(" ") };
            if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag} {body}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for PbwElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Verma module of weight `h` and central charge `c`, with memoized mode actions.
pub struct VermaModule {
    pub h: Q,
    pub c: Q,
    memo: RefCell<HashMap<(i64, Word), Terms>>,
}

/// Element of a Verma module: combination of normal-ordered words applied to `v_h`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VermaVector {
    pub terms: Terms,
}

impl VermaVector {
    pub fn highest_weight() -> VermaVector {
        VermaVector { terms: PbwElement::one().terms }
    }

    pub fn from_pbw(p: &PbwElement) -> VermaVector {
        VermaVector { terms: p.terms.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VermaVector) -> VermaVector {
        let mut t = self.terms.clone();
        axpy(&mut t, &Q::one(), &other.terms);
        VermaVector { terms: t }
    }

    pub fn scale(&self, c: &Q) -> VermaVector {
        let mut t = Terms::new();
        axpy(&mut t, c, &self.terms);
        VermaVector { terms: t }
    }
}

impl VermaModule {
    pub fn new(h: Q, c: Q) -> VermaModule {
        VermaModule { h, c, memo: RefCell::new(HashMap::new()) }
    }

    fn central(&self, n: i64) -> Q {
        &self.c * Q::int(n * n * n - n) / Q::int(12)
    }

    fn act_word(&self, n: i64, w: &[u32]) -> Terms {
        let key = (n, w.to_vec());
        if let Some(t) = self.memo.borrow().get(&key) {
            return t.clone();
        }
        let mut out = Terms::new();
        if n == 0 {
            let deg: u32 = w.iter().sum();
            add_into(&mut out, w.to_vec(), &self.h + Q::int(deg as i64));
        } else if w.is_empty() {
            if n < 0 {
                add_into(&mut out, vec![(-n) as u32], Q::one());
            }
        } else {
            let a = w[0] as i64;
            let rest = &w[1..];
            if n < 0 && -n >= a {
                let mut v = w.to_vec();
                v.insert(0, (-n) as u32);
                add_into(&mut out, v, Q::one());
            } else {
                // L_n L_{-a} R = L_{-a} L_n R + (n + a) L_{n-a} R + central
                let inner = self.act_word(n, rest);
                axpy(&mut out, &Q::one(), &self.act_terms(-a, &inner));
                axpy(&mut out, &Q::int(n + a), &self.act_word(n - a, rest));
                if n == a {
                    add_into(&mut out, rest.to_vec(), self.central(n));
                }
            }
        }
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn act_terms(&self, n: i64, t: &Terms) -> Terms {
        let mut out = Terms::new();
        for (w, c) in t {
            axpy(&mut out, c, &self.act_word(n, w));
        }
        out
    }

    /// `L_n v`.
    pub fn apply_mode(&self, n: i64, v: &VermaVector) -> VermaVector {
        VermaVector { terms: self.act_terms(n, &v.terms) }
    }

    /// `P v`.
    pub fn apply_pbw(&self, p: &PbwElement, v: &VermaVector) -> VermaVector {
        let mut out = Terms::new();
        for (w, c) in &p.terms {
            let mut x = v.terms.clone();
            for &k in w.iter().rev() {
                x = self.act_terms(-(k as i64), &x);
            }
            axpy(&mut out, c, &x);
        }
        VermaVector { terms: out }
    }
}

/// `h = (l - 1)^2 / 4`.
pub fn kac_weight(l: u32) -> Q {
    let a = l as i64 - 1;
    Q::new(a * a, 4)
}

/// Null-vector polynomial of level `l`, normal-ordered; the `L_{-1}^l` coefficient is one.
pub fn delta_op(l: u32) -> PbwElement {
    let mut out = PbwElement::default();
    for w in compositions(l) {
        out = out.add(&PbwElement::word(&w).scale(&bsa_coefficient(&w)));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularReport {
    pub level: u32,
    pub weight: Q,
    #[serde(rename = "L1_zero")]
    pub l1_zero: bool,
    #[serde(rename = "L2_zero")]
    pub l2_zero: bool,
    #[serde(rename = "L0_eigenvalue")]
    pub l0_eigenvalue: Option<Q>,
    pub expected_eigenvalue: Q,
    pub passed: bool,
}

/// Checks that `delta_op(l) v_h` is a highest-weight vector of weight `h_{l+2}` at `h = h_l+1`.
pub fn verify_singular(l: u32) -> SingularReport {
    let h = kac_weight(l);
    let m = VermaModule::new(h.clone(), Q::one());
    let w = m.apply_pbw(&delta_op(l), &VermaVector::highest_weight());
    let l1 = m.apply_mode(1, &w).is_zero();
    let l2 = m.apply_mode(2, &w).is_zero();
    let l0 = m.apply_mode(0, &w);
    let expected = kac_weight(l + 2);
    let eigen = w.terms.iter().next().and_then(|(k, c)| {
        let lam = l0.terms.get(k).cloned().unwrap_or_default() / c;
        (l0 == w.scale(&lam)).then_some(lam)
    });
    let passed = l1 && l2 && eigen.as_ref() == Some(&expected) && !w.is_zero();
    SingularReport { level: l, weight: h, l1_zero: l1, l2_zero: l2, l0_eigenvalue: eigen, expected_eigenvalue: expected, passed }
}

/// Dimension of level `l` of a Verma module, as the rank of all composition words.
pub fn level_dimension(l: u32) -> usize {
    let m = VermaModule::new(Q::zero(), Q::one());
    let mut e = Echelon::new();
    for w in compositions(l) {
        let mut x = VermaVector::highest_weight();
        for &k in w.iter().rev() {
            x = m.apply_mode(-(k as i64), &x);
        }
        e.insert(&x.terms);
    }
    e.rank()
}

pub fn partition_count(n: u32) -> usize {
    enumerate_partitions(n as usize).len()
}

/// Checks `[L_m, L_n] v = (m - n) L_{m+n} v + c (m^3 - m)/12 delta_{m+n,0} v` for one vector.
pub fn commutator_holds(module: &VermaModule, m: i64, n: i64, v: &VermaVector) -> bool {
    let lhs = module.apply_mode(m, &module.apply_mode(n, v)).add(&module.apply_mode(n, &module.apply_mode(m, v)).scale(&Q::int(-1)));
    let mut rhs = module.apply_mode(m + n, v).scale(&Q::int(m - n));
    if m + n == 0 {
        rhs = rhs.add(&v.scale(&module.central(m)));
    }
    lhs == rhs
}

/// `t^alpha sum_k v_k t^k` with coefficients known for `k <= order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesVector {
    pub alpha: Q,
    pub order: i64,
    pub coeffs: BTreeMap<i64, VermaVector>,
    pub clipped: bool,
}

impl SeriesVector {
    pub fn new(alpha: Q, order: i64) -> SeriesVector {
        SeriesVector { alpha, order, coeffs: BTreeMap::new(), clipped: false }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|v| v.is_zero())
    }

    pub fn coefficient(&self, k: i64) -> VermaVector {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    fn add_at(&mut self, k: i64, v: VermaVector) {
        if k > self.order {
            if !v.is_zero() {
                self.clipped = true;
            }
            return;
        }
        let cur = self.coefficient(k).add(&v);
        if cur.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, cur);
        }
    }
}

/// `L_n (v t^{alpha+k}) = (L_n v) t^{alpha+k} - (alpha + k + (n+1) h) v t^{alpha+k+n}`.
/// The result is known up to `order + min(0, n)`; anything beyond is dropped and flagged.
pub fn hat_apply(module: &VermaModule, n: i64, s: &SeriesVector, h: &Q) -> SeriesVector {
    let mut out = SeriesVector::new(s.alpha.clone(), s.order + n.min(0));
    out.clipped = s.clipped;
    for (&k, v) in &s.coeffs {
        out.add_at(k, module.apply_mode(n, v));
        let w = &s.alpha + Q::int(k) + Q::int(n + 1) * h;
        out.add_at(k + n, v.scale(&-w));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionReport {
    pub level: u32,
    pub truncation: usize,
    pub alpha: Q,
    pub leading_coefficients: Vec<Q>,
    pub leading_law_holds: bool,
    pub recursion_residual_zero: bool,
    pub leading_order_highest_weight: bool,
}

/// `varrho(k) = (alpha + k)^2 - hhat`.
pub fn varrho(alpha: &Q, hhat: &Q, k: i64) -> Q {
    let a = alpha + Q::int(k);
    &a * &a - hhat
}

/// `R_0 = 1`, `R_k = (1/varrho(k)) sum_{j=1..k} L_{-j} R_{k-j}`, with `alpha = (l-1)/2`
/// and `hhat = h_l`.
pub fn fusion_coefficients(l: u32, truncation: usize) -> Result<Vec<PbwElement>> {
    let alpha = Q::new(l as i64 - 1, 2);
    let hhat = kac_weight(l);
    let mut r = vec![PbwElement::one()];
    for k in 1..=truncation {
        let rho = varrho(&alpha, &hhat, k as i64);
        if rho.is_zero() {
            return Err(Error::Resonance(k));
        }
        let mut sum = PbwElement::default();
        for j in 1..=k {
            sum = sum.add(&PbwElement::word(&[j as u32]).mul(&r[k - j]));
        }
        r.push(sum.scale(&rho.recip()));
    }
    Ok(r)
}

/// Checks the leading `L_{-1}^k` coefficients of the fusion recursion, that the series
/// solves the second-order equation degree by degree, and that its leading coefficient is
/// a highest-weight vector of weight `hhat` for the shifted action.
pub fn verify_fusion(l: u32, truncation: usize) -> Result<FusionReport> {
    let alpha = Q::new(l as i64 - 1, 2);
    let hhat = kac_weight(l);
    let r = fusion_coefficients(l, truncation)?;
    let mut expected = Q::one();
    let mut leading = Vec::new();
    let mut law = true;
    for (k, rk) in r.iter().enumerate() {
        if k > 0 {
            expected /= varrho(&alpha, &hhat, k as i64);
        }
        let c = rk.coeff(&vec![1; k]);
        law &= c == expected;
        leading.push(c);
    }
    // v_k = R_k v_0 inside the Verma module of weight h_{l+1}.
    let module = VermaModule::new(kac_weight(l + 1), Q::one());
    let v0 = VermaVector::highest_weight();
    let vk: Vec<VermaVector> = r.iter().map(|p| module.apply_pbw(p, &v0)).collect();
    let mut residual_zero = varrho(&alpha, &hhat, 0).is_zero();
    for m in 1..vk.len() {
        let mut res = vk[m].scale(&varrho(&alpha, &hhat, m as i64));
        for i in 1..=m {
            res = res.add(&module.apply_pbw(&PbwElement::word(&[i as u32]), &vk[m - i]).scale(&Q::int(-1)));
        }
        residual_zero &= res.is_zero();
    }
    let mut w = SeriesVector::new(alpha.clone(), truncation as i64);
    for (k, v) in vk.iter().enumerate() {
        w.add_at(k as i64, v.clone());
    }
    let htilde = kac_weight(2);
    let l0 = hat_apply(&module, 0, &w, &htilde);
    let mut hw = l0.coefficient(0) == v0.scale(&hhat);
    for n in 1..=2 {
        hw &= hat_apply(&module, n, &w, &htilde).coefficient(0).is_zero();
    }
    Ok(FusionReport {
        level: l,
        truncation,
        alpha,
        leading_coefficients: leading,
        leading_law_holds: law,
        recursion_residual_zero: residual_zero,
        leading_order_highest_weight: hw,
    })
}
