//! Specht polynomials, fused Specht polynomials (limit and combinatorial forms) and
//! Schur polynomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{antisymmetrize, block_difference_pairs, vandermonde, MPoly, Monomial};
use crate::rational::Q;
use crate::tableaux::{enumerate_partitions, enumerate_tableaux, signed_orbit, Filling, Partition, SignedOrbitElement, TableauClass, Valences};

pub use crate::linalg::rank;

/// Product over columns of the Vandermonde of the column entries read bottom to top.
pub fn specht(n: &Filling) -> Result<MPoly> {
    if !n.is_numbering() {
        return Err(Error::WrongClass { expected: "numbering" });
    }
    let nvars = n.n();
    let mut p = MPoly::one(nvars);
    for col in n.columns() {
        let idx: Vec<usize> = col.iter().rev().map(|&e| e as usize - 1).collect();
        p = &p * &vandermonde(nvars, &idx)?;
    }
    Ok(p)
}

/// Fused Specht polynomial by its defining limit: antisymmetrize the Specht polynomial
/// of the tilde numbering over the blocks, divide by the block Vandermondes, and
/// collapse each block to one variable.
pub fn fused_specht_limit(f: &Filling) -> Result<MPoly> {
    let v = f.content();
    let p = specht(&f.tilde())?;
    let a = antisymmetrize(v, &p)?;
    let q = a.div_differences(&block_difference_pairs(v))?;
    q.project_eval(v)
}

/// The monomial attached to one orbit element, with its rational coefficient.
pub fn orbit_monomial(e: &SignedOrbitElement, v: &Valences) -> (Monomial, Q) {
    let mut exps = Vec::with_capacity(v.len());
    let mut coeff = Q::one();
    for (k, lambda) in e.lambdas.iter().enumerate() {
        let s = v.get(k);
        exps.push(lambda.size() as u16);
        let binom = s * (s.saturating_sub(1)) / 2;
        let sign = if binom.is_multiple_of(2) { 1 } else { -1 } * e.tau_signs[k];
        let ones = schur_ones(lambda, s).expect("row indices give at most s parts");
        coeff = coeff * ones * Q::int(sign as i64) / Q::factorial(s as u64);
    }
    (Monomial::from_exps(&exps), coeff)
}

/// Fused Specht polynomial from the signed column-orbit sum.
pub fn fused_specht_combinatorial(f: &Filling) -> MPoly {
    let v = f.content();
    let orbit = signed_orbit(f);
    let mut out = MPoly::zero(v.len());
    let stab = Q::from_bigint(orbit.stab_order.into());
    for e in &orbit.elements {
        let (m, c) = orbit_monomial(e, v);
        out.add_term(m, c * &stab * Q::int(e.sign as i64));
    }
    out
}

/// Schur polynomial evaluated at `s` ones: `prod_{i<j<=s} (l_i - l_j + j - i)/(j - i)`.
pub fn schur_ones(lambda: &Partition, s: usize) -> Result<Q> {
    if lambda.len() > s {
        return Err(Error::TooManyParts { partition: lambda.to_string(), vars: s });
    }
    let mut num = Q::one();
    for i in 0..s {
        for j in i + 1..s {
            let a = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64;
            num *= Q::new(a, (j - i) as i64);
        }
    }
    Ok(num)
}

fn alternant(exps: &[u16]) -> MPoly {
    let s = exps.len();
    let mut p = MPoly::zero(s);
    for g in crate::perm::Perm::all(s) {
        let mut e = vec![0u16; s];
        for (i, &a) in exps.iter().enumerate() {
            e[g.apply(i)] = a;
        }
        p.add_term(Monomial::from_exps(&e), Q::int(g.sign() as i64));
    }
    p
}

/// Schur polynomial in `s` variables as a ratio of alternants.
pub fn schur_bialternant(lambda: &Partition, s: usize) -> Result<MPoly> {
    if lambda.len() > s {
        return Err(Error::TooManyParts { partition: lambda.to_string(), vars: s });
    }
    let top: Vec<u16> = (0..s).map(|i| (lambda.part(i) + s - 1 - i) as u16).collect();
    // Denominator prod_{i<j} (x_i - x_j).
    let pairs: Vec<(usize, usize)> = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).collect();
    alternant(&top).div_differences(&pairs)
}

/// Schur polynomial in `s` variables as a sum over column-strict tableaux with entries at most `s`.
pub fn schur_combinatorial(lambda: &Partition, s: usize) -> Result<MPoly> {
    if lambda.len() > s {
        return Err(Error::TooManyParts { partition: lambda.to_string(), vars: s });
    }
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = MPoly::zero(s);

    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, s: usize, out: &mut MPoly) {
        if i == cells.len() {
            let mut e = vec![0u16; s];
            for &v in grid.iter().flatten() {
                e[v - 1] += 1;
            }
            out.add_term(Monomial::from_exps(&e), Q::one());
            return;
        }
        let (r, c) = cells[i];
        let lo_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_left.max(lo_up)..=s {
            grid[r][c] = v;
            go(i + 1, cells, grid, s, out);
        }
    }
    go(0, &cells, &mut grid, s, &mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingCheck {
    pub exponents: Vec<u16>,
    /// Coefficient predicted from the tableau data alone.
    pub predicted: Q,
    /// Coefficient of the same monomial in the fused Specht polynomial.
    pub actual: Q,
    /// Whether the tableau's exponent vector is the strict lexicographic minimum over the orbit.
    pub unique_minimum: bool,
}

impl LeadingCheck {
    pub fn holds(&self) -> bool {
        self.unique_minimum && self.predicted == self.actual && !self.actual.is_zero()
    }
}

/// Compares the coefficient of `prod x_k^{|lambda^T(k)|}` in the fused Specht polynomial
/// with its closed-form prediction.
pub fn leading_coefficient_check(t: &Filling) -> Result<LeadingCheck> {
    if !t.is_row_strict() {
        return Err(Error::WrongClass { expected: "row-strict" });
    }
    let v = t.content();
    let orbit = signed_orbit(t);
    let own = orbit.elements.iter().find(|e| &e.filling == t).expect("row-strict filling survives");
    let (m, c) = orbit_monomial(own, v);
    let exponents = m.exps().to_vec();
    let unique_minimum = orbit.elements.iter().filter(|e| &e.filling != t).all(|e| {
        let other: Vec<u16> = e.lambdas.iter().map(|l| l.size() as u16).collect();
        other > exponents
    });
    let predicted = c * Q::from_bigint(orbit.stab_order.into());
    let actual = fused_specht_combinatorial(t).coeff(&m);
    Ok(LeadingCheck { exponents, predicted, actual, unique_minimum })
}

/// `sum_{lambda |- n} |RSYT^lambda_v|^2`.
pub fn hecke_dimension(v: &Valences) -> usize {
    enumerate_partitions(v.n())
        .iter()
        .map(|shape| enumerate_tableaux(shape, v, TableauClass::RowStrict).expect("sizes agree").len().pow(2))
        .sum()
}

/// Basis polynomials of the (fused) Specht module of one shape.
#[derive(Debug, Clone, Serialize)]
pub struct SpechtBasis {
    pub shape: Partition,
    pub content: Valences,
    pub elements: Vec<(Filling, MPoly)>,
}

impl SpechtBasis {
    /// Specht polynomials of standard tableaux for unit content, fused Specht
    /// polynomials of row-strict tableaux otherwise.
    pub fn new(shape: &Partition, content: &Valences) -> Result<SpechtBasis> {
        let ts = enumerate_tableaux(shape, content, TableauClass::RowStrict)?;
        let elements = ts
            .into_iter()
            .map(|t| {
                let p = if content.is_unit() { specht(&t)? } else { fused_specht_limit(&t)? };
                Ok((t, p))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpechtBasis { shape: shape.clone(), content: content.clone(), elements })
    }

    pub fn rank(&self) -> usize {
        let polys: Vec<MPoly> = self.elements.iter().map(|(_, p)| p.clone()).collect();
        linalg::rank(&polys)
    }
}
