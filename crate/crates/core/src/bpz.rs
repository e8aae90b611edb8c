//! First-order operators `L_m^{(j)}` and the higher-order null-vector operators built from them.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{BlockBasis, BlockElement};
use crate::error::Result;
use crate::factored::FactoredFunction;
use crate::jet::{Jet, JetSpace};
use crate::rational::Q;
use crate::tableaux::Valences;

/// Compositions of `n` in lexicographic order.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `(-1)^{k-s-1} (s!)^2 / prod_{l<k} (m_1 + .. + m_l)(m_{l+1} + .. + m_k)` with `s + 1 = sum m`.
pub fn bsa_coefficient(word: &[u32]) -> Q {
    let total: u32 = word.iter().sum();
    let s = total as i64 - 1;
    let k = word.len() as i64;
    let sign = if (k - s - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let f = Q::factorial(s as u64);
    let mut denom = Q::one();
    let mut prefix = 0;
    for &m in &word[..word.len() - 1] {
        prefix += m;
        denom *= Q::int((prefix * (total - prefix)) as i64);
    }
    Q::int(sign) * &f * &f / denom
}

/// One term of a composed operator: a coefficient times `L_{-m_1} ... L_{-m_k}` at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffOpTerm {
    pub coefficient: Q,
    pub point: usize,
    /// Positive mode numbers `m_i`, read left to right.
    pub word: Vec<u32>,
}

/// Terms of the order-`order` operator at point `j` (zero-based).
pub fn bsa_terms(j: usize, order: u32) -> Vec<DiffOpTerm> {
    compositions(order).into_iter().map(|w| DiffOpTerm { coefficient: bsa_coefficient(&w), point: j, word: w }).collect()
}

/// `L_m^{(j)} f = -sum_{i != j} [(x_i - x_j)^{1+m} d_i f + (1+m)/4 s_i^2 (x_i - x_j)^m f]`.
pub fn apply_l(j: usize, m: i32, v: &Valences, f: &FactoredFunction) -> Result<FactoredFunction> {
    let d = f.nvars();
    let mut terms = Vec::with_capacity(2 * d);
    for i in (0..d).filter(|&i| i != j) {
        terms.push(f.derivative(i).mul_difference_power(i, j, 1 + m));
        let w = Q::new(((1 + m) as i64) * (v.get(i) * v.get(i)) as i64, 4);
        if !w.is_zero() {
            terms.push(f.mul_difference_power(i, j, m).scale(&w));
        }
    }
    Ok(FactoredFunction::sum(d, &terms)?.scale(&Q::int(-1)))
}

/// Applies `sum coeff * L_{-m_1} ... L_{-m_k}` (rightmost first), sharing common suffixes.
pub fn apply_terms(terms: &[DiffOpTerm], v: &Valences, f: &FactoredFunction) -> Result<FactoredFunction> {
    let mut memo: HashMap<(usize, Vec<u32>), FactoredFunction> = HashMap::new();
    let mut parts = Vec::with_capacity(terms.len());
    for t in terms {
        let mut cur = f.clone();
        for start in (0..t.word.len()).rev() {
            let key = (t.point, t.word[start..].to_vec());
            cur = match memo.get(&key) {
                Some(g) => g.clone(),
                None => {
                    let g = apply_l(t.point, -(t.word[start] as i32), v, &cur)?;
                    memo.insert(key, g.clone());
                    g
                }
            };
        }
        parts.push(cur.scale(&t.coefficient));
    }
    FactoredFunction::sum(f.nvars(), &parts)
}

/// The order `s_j + 1` operator at point `j` applied to `f`.
pub fn bsa_operator(j: usize, v: &Valences, f: &FactoredFunction) -> Result<FactoredFunction> {
    apply_terms(&bsa_terms(j, v.get(j) as u32 + 1), v, f)
}

fn jet_of(f: &FactoredFunction, space: &std::sync::Arc<JetSpace>, point: &[f64]) -> Jet {
    let d = f.nvars();
    let vars: Vec<Jet> = (0..d).map(|i| Jet::variable(space, i, point[i])).collect();
    let mut poly = Jet::constant(space, 0.0);
    for (m, c) in f.poly().terms() {
        let mut t = Jet::constant(space, c.to_f64());
        for (i, var) in vars.iter().enumerate() {
            for _ in 0..m.get(i) {
                t = t.mul(var);
            }
        }
        poly = poly.add(&t);
    }
    for ((i, j), m) in f.factors() {
        let diff = vars[j].add(&vars[i].scale(-1.0));
        poly = poly.mul(&diff.powf(m as f64 / 2.0));
    }
    poly
}

fn jet_l(j: usize, m: i32, v: &Valences, g: &Jet, vars: &[Jet]) -> Jet {
    let mut acc: Option<Jet> = None;
    for i in (0..vars.len()).filter(|&i| i != j) {
        let diff = vars[i].add(&vars[j].scale(-1.0));
        let mut t = diff.powf((1 + m) as f64).mul(&g.derivative(i));
        let w = (1 + m) as f64 / 4.0 * (v.get(i) * v.get(i)) as f64;
        if w != 0.0 {
            t = t.add(&diff.powf(m as f64).mul(g).scale(w));
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc.expect("at least two points").scale(-1.0)
}

/// Numeric value of the operator applied to `f` at `point`, with the sum of absolute
/// values of the individual terms as a scale.
pub fn shadow_residual(terms: &[DiffOpTerm], v: &Valences, f: &FactoredFunction, point: &[f64]) -> (f64, f64) {
    let d = f.nvars();
    let order = terms.iter().map(|t| t.word.iter().sum::<u32>() as usize).max().unwrap_or(0);
    let space = JetSpace::new(d, order);
    let vars: Vec<Jet> = (0..d).map(|i| Jet::variable(&space, i, point[i])).collect();
    let base = jet_of(f, &space, point);
    let mut memo: HashMap<Vec<u32>, Jet> = HashMap::new();
    let (mut total, mut scale) = (0.0, 0.0);
    for t in terms {
        let mut cur = base.clone();
        for start in (0..t.word.len()).rev() {
            let key = t.word[start..].to_vec();
            cur = memo
                .entry(key)
                .or_insert_with(|| jet_l(t.point, -(t.word[start] as i32), v, &cur, &vars))
                .clone();
        }
        let x = t.coefficient.to_f64() * cur.value();
        total += x;
        scale += x.abs();
    }
    (total, scale)
}

pub const SHADOW_TOLERANCE: f64 = 1e-9;

/// Increasing points with gaps of at least one half, on a quarter-integer grid.
pub fn random_chamber_points(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    let mut x = rng.gen_range(0..8) as f64 / 4.0;
    (0..d)
        .map(|_| {
            let cur = x;
            x += rng.gen_range(2..12) as f64 / 4.0;
            cur
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BpzOptions {
    pub block: Option<usize>,
    pub point: Option<usize>,
    pub shadow_points: usize,
    pub seed: u64,
    pub parallel: bool,
    pub emit_residual: bool,
}

impl Default for BpzOptions {
    fn default() -> Self {
        BpzOptions { block: None, point: None, shadow_points: 5, seed: 2024, parallel: false, emit_residual: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BpzResult {
    pub block: usize,
    pub tableau: String,
    pub point: usize,
    pub order: usize,
    pub zero: bool,
    pub residual_terms: usize,
    pub shadow_max: f64,
    pub shadow_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl BpzResult {
    pub fn passed(&self) -> bool {
        self.zero && self.shadow_ok
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BpzReport {
    pub content: Valences,
    pub results: Vec<BpzResult>,
    pub all_passed: bool,
}

fn check_one(b: &BlockElement, index: usize, j: usize, opts: &BpzOptions) -> Result<BpzResult> {
    let v = &b.valences;
    let order = v.get(j) + 1;
    let terms = bsa_terms(j, order as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((index as u64) << 16) ^ j as u64);
    let mut shadow_max: f64 = 0.0;
    let mut shadow_ok = true;
    for _ in 0..opts.shadow_points {
        let pt = random_chamber_points(&mut rng, v.len());
        let (r, scale) = shadow_residual(&terms, v, &b.function, &pt);
        shadow_max = shadow_max.max(r.abs());
        shadow_ok &= r.abs() <= SHADOW_TOLERANCE * scale.max(1.0);
    }
    let residual = apply_terms(&terms, v, &b.function)?;
    Ok(BpzResult {
        block: index + 1,
        tableau: b.label.as_ref().map(|t| t.to_string()).unwrap_or_default(),
        point: j + 1,
        order,
        zero: residual.is_zero(),
        residual_terms: residual.poly().nterms(),
        shadow_max,
        shadow_ok,
        residual: (opts.emit_residual || !residual.is_zero()).then(|| residual.to_string()),
    })
}

/// Applies the null-vector operator at every point to every block function of the given valences.
pub fn verify_bpz(v: &Valences, opts: &BpzOptions) -> Result<BpzReport> {
    let basis = BlockBasis::new(v)?;
    let tasks: Vec<(usize, usize)> = (0..basis.dim())
        .filter(|&k| opts.block.is_none_or(|b| b == k + 1))
        .flat_map(|k| (0..v.len()).filter(|&j| opts.point.is_none_or(|p| p == j + 1)).map(move |j| (k, j)))
        .collect();
    let run = |&(k, j): &(usize, usize)| check_one(&basis.elements[k], k, j, opts);
    let results: Vec<BpzResult> = if opts.parallel {
        tasks.par_iter().map(run).collect::<Result<_>>()?
    } else {
        tasks.iter().map(run).collect::<Result<_>>()?
    };
    let all_passed = !results.is_empty() && results.iter().all(|r| r.passed());
    Ok(BpzReport { content: v.clone(), results, all_passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_unit;
    use crate::poly::MPoly;

    #[test]
    fn coefficient_tables() {
        let three: Vec<(Vec<u32>, Q)> = compositions(3).into_iter().map(|w| (w.clone(), bsa_coefficient(&w))).collect();
        assert_eq!(
            three,
            vec![(vec![1, 1, 1], Q::int(1)), (vec![1, 2], Q::int(-2)), (vec![2, 1], Q::int(-2)), (vec![3], Q::int(4))]
        );
        let two: Vec<Q> = compositions(2).iter().map(|w| bsa_coefficient(w)).collect();
        assert_eq!(two, vec![Q::one(), Q::int(-1)]);
        for n in 1..7 {
            assert_eq!(bsa_coefficient(&vec![1; n as usize]), Q::one());
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn first_order_examples() {
        let v = Valences::ones(3);
        let one = FactoredFunction::from_poly(MPoly::one(3));
        assert!(apply_l(0, -1, &v, &one).unwrap().is_zero());
        let l2 = apply_l(0, -2, &v, &one).unwrap();
        let expect = FactoredFunction::new(MPoly::constant(3, Q::new(1, 4)), [((0, 1), -4)])
            .add(&FactoredFunction::new(MPoly::constant(3, Q::new(1, 4)), [((0, 2), -4)]))
            .unwrap();
        assert_eq!(l2, expect);
    }

    #[test]
    fn two_point_solution() {
        let v = Valences::ones(2);
        let f = FactoredFunction::new(MPoly::one(2), [((0, 1), -1)]);
        assert!(bsa_operator(0, &v, &f).unwrap().is_zero());
        assert!(bsa_operator(1, &v, &f).unwrap().is_zero());
        let g = FactoredFunction::new(MPoly::one(2), [((0, 1), 3)]);
        assert!(!bsa_operator(0, &v, &g).unwrap().is_zero());
    }

    #[test]
    fn first_order_matches_shadow() {
        let v: Valences = "1,2,1".parse().unwrap();
        let f = FactoredFunction::new(&MPoly::var(3, 0) + &MPoly::constant(3, Q::int(2)), [((0, 1), -1), ((1, 2), 3)]);
        let pt = [0.25, 1.0, 2.5];
        for m in 1..4 {
            let exact = apply_l(1, -m, &v, &f).unwrap().eval_f64(&pt);
            let terms = [DiffOpTerm { coefficient: Q::one(), point: 1, word: vec![m as u32] }];
            let (num, _) = shadow_residual(&terms, &v, &f, &pt);
            assert!((exact - num).abs() < 1e-10 * (1.0 + exact.abs()), "{m}: {exact} {num}");
        }
    }

    #[test]
    fn witt_bracket() {
        let v: Valences = "2,1,1".parse().unwrap();
        let samples = [
            FactoredFunction::new(MPoly::var(3, 1), [((0, 1), -1), ((0, 2), 2)]),
            FactoredFunction::new(&MPoly::var(3, 0).pow(2) - &MPoly::var(3, 2), [((1, 2), -3)]),
        ];
        for f in &samples {
            for j in 0..3 {
                for m in [-1, -2, -3] {
                    for n in [-1, -2, -3] {
                        let mn = apply_l(j, m, &v, &apply_l(j, n, &v, f).unwrap()).unwrap();
                        let nm = apply_l(j, n, &v, &apply_l(j, m, &v, f).unwrap()).unwrap();
                        let lhs = mn.sub(&nm).unwrap();
                        let rhs = apply_l(j, m + n, &v, f).unwrap().scale(&Q::int((m - n) as i64));
                        assert_eq!(lhs, rhs, "j={j} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn unit_blocks_are_annihilated() {
        let r = verify_bpz(&Valences::ones(4), &BpzOptions::default()).unwrap();
        assert_eq!(r.results.len(), 8);
        assert!(r.all_passed, "{r:?}");
    }

    #[test]
    fn fused_blocks_are_annihilated() {
        for v in ["2,1,1", "2,2", "1,2,1"] {
            let r = verify_bpz(&v.parse().unwrap(), &BpzOptions::default()).unwrap();
            assert!(r.all_passed, "{r:?}");
        }
    }

    #[test]
    fn non_solution_is_caught_by_both_checks() {
        let u = block_unit(&"1,3;2,4".parse().unwrap()).unwrap();
        let f = u.function.mul_poly(&MPoly::var(4, 1));
        let v = Valences::ones(4);
        let terms = bsa_terms(0, 2);
        assert!(!apply_terms(&terms, &v, &f).unwrap().is_zero());
        let (r, scale) = shadow_residual(&terms, &v, &f, &[0.0, 1.0, 2.5, 4.0]);
        assert!(r.abs() > SHADOW_TOLERANCE * scale.max(1.0));
    }

    #[test]
    fn scaling_covariance_of_residual() {
        // With x -> 4x + b, D(f o phi) = 4^{s+1} (D f) o phi for a non-solution f.
        let u = block_unit(&"1,2;3,4".parse().unwrap()).unwrap();
        let f = u.function.mul_poly(&(&MPoly::var(4, 1) - &MPoly::var(4, 3).scale(&Q::int(2))));
        let v = Valences::ones(4);
        let (root, b) = (Q::int(2), Q::new(1, 3));
        let g = f.affine_pullback(&root, &b);
        for j in 0..4 {
            let lhs = bsa_operator(j, &v, &g).unwrap();
            let rhs = bsa_operator(j, &v, &f).unwrap().affine_pullback(&root, &b).scale(&Q::int(16));
            assert_eq!(lhs, rhs);
        }
    }
}
