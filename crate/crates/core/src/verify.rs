//! The identity suites behind the acceptance criteria, shared by the acceptance test
//! binary and `fused-specht verify-all`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{block_unit, mobius_check, verify_symmetrizer, verify_tl, verify_valenced, BlockBasis, MobiusMap};
use crate::bpz::{bsa_operator, compositions, verify_bpz, BpzOptions};
use crate::error::Result;
use crate::factored::FactoredFunction;
use crate::hecke::{verify_simple_module_dims, w_expansion};
use crate::linalg::{poly_vector, Echelon};
use crate::poly::{MPoly, Monomial};
use crate::rational::Q;
use crate::specht::{fused_specht_combinatorial, fused_specht_limit, orbit_monomial};
use crate::tableaux::{enumerate_partitions, enumerate_tableaux, signed_orbit, Filling, Partition, TableauClass, Valences};
use crate::virasoro::{delta_op, level_dimension, partition_count, verify_fusion, verify_singular, PbwElement};

/// Size caps for the suites.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    /// Largest `n` for the definition-equivalence and Hecke suites.
    pub max_n: usize,
    pub max_n_one_column: usize,
    pub max_n_two_column: usize,
    pub max_n_standard: usize,
    pub max_tl_points: usize,
    pub max_singular_level: u32,
    pub max_dimension_level: u32,
    pub max_fusion_level: u32,
    pub fusion_truncation: usize,
    pub parallel: bool,
}

impl SuiteConfig {
    /// Caps derived from one size parameter; `max_n = 6` gives the full suite.
    pub fn with_max_n(max_n: usize) -> SuiteConfig {
        SuiteConfig {
            max_n,
            max_n_one_column: max_n + 2,
            max_n_two_column: max_n + 2,
            max_n_standard: max_n + 1,
            max_tl_points: max_n + 2,
            max_singular_level: max_n as u32,
            max_dimension_level: max_n as u32 + 2,
            max_fusion_level: (max_n as u32).saturating_sub(1),
            fusion_truncation: 4,
            parallel: true,
        }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::with_max_n(6)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
}

pub const CRITERIA: [&str; 10] = [
    "fused Specht goldens",
    "limit and combinatorial forms agree",
    "one-column closed form",
    "ranks and dimension counts",
    "block goldens",
    "null-vector equations",
    "Mobius covariance",
    "Temperley-Lieb relations",
    "Virasoro null vectors and fusion",
    "Hecke module realization",
];

/// All compositions of `n` as valence vectors.
pub fn all_valences(n: usize) -> Vec<Valences> {
    compositions(n as u32)
        .into_iter()
        .map(|c| Valences::new(c.into_iter().map(|s| s as usize).collect()).expect("positive parts"))
        .collect()
}

fn maybe_par<T: Sync, R: Send>(parallel: bool, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

/// Passed, number of checks, detail.
pub type Outcome = (bool, usize, String);

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, summary: String) -> Outcome {
        let passed = self.failures.is_empty() && self.cases > 0;
        let detail = if passed {
            summary
        } else {
            let shown: Vec<&str> = self.failures.iter().take(5).map(|s| s.as_str()).collect();
            format!("{} of {} checks failed: {}", self.failures.len(), self.cases, shown.join("; "))
        };
        (passed, self.cases, detail)
    }
}

fn x(n: usize, i: usize) -> MPoly {
    MPoly::var(n, i)
}

fn diff(n: usize, j: usize, i: usize) -> MPoly {
    MPoly::difference(n, j, i)
}

fn golden_fused(t: &mut Tally) -> Result<()> {
    let n = 4;
    let f = Filling::with_content(vec![vec![1, 2], vec![1, 3], vec![2, 4]], &"2,2,1,1".parse()?)?;
    let inner = &(&x(n, 0) * &(&(&x(n, 1).scale(&Q::int(2)) - &x(n, 2)) - &x(n, 3))) - &(&x(n, 1) * &(&x(n, 2) + &x(n, 3)));
    let inner = &inner + &(&x(n, 2) * &x(n, 3)).scale(&Q::int(2));
    let expect = (diff(n, 0, 1) * diff(n, 2, 3) * inner).scale(&Q::new(-1, 2));
    let got = fused_specht_limit(&f)?;
    t.check(got == expect, || format!("(2,2,1,1) example: got {got}"));

    let f: Filling = "1,2;2,3".parse()?;
    let expect = diff(3, 0, 2).scale(&Q::new(1, 2));
    let got = fused_specht_limit(&f)?;
    t.check(got == expect, || format!("(1,2,1) example: got {got}"));
    let monos: Vec<(Monomial, Q)> = signed_orbit(&f).elements.iter().map(|e| orbit_monomial(e, f.content())).collect();
    t.check(monos.contains(&(Monomial::from_exps(&[0, 0, 1]), Q::new(-1, 2))), || "monomial -x3/2 missing".into());
    t.check(monos.contains(&(Monomial::from_exps(&[1, 0, 0]), Q::new(1, 2))), || "monomial x1/2 missing".into());

    let g: Filling = "2,3;1,2;2,3".parse()?;
    let expect = diff(3, 0, 2).pow(2).scale(&Q::new(1, 3));
    let got = fused_specht_combinatorial(&g);
    t.check(got == expect, || format!("(1,3,2) example: got {got}"));
    let own = signed_orbit(&g).elements.into_iter().find(|e| e.filling == g);
    let m = own.map(|e| orbit_monomial(&e, g.content()));
    t.check(m == Some((Monomial::from_exps(&[1, 0, 1]), Q::new(-1, 6))), || format!("monomial -x1 x3/6: got {m:?}"));
    Ok(())
}

pub fn criterion_1(_cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    golden_fused(&mut t)?;
    Ok(t.finish("four reference polynomials and three monomials reproduced".into()))
}

pub fn criterion_2(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut fillings = Vec::new();
    for n in 1..=cfg.max_n {
        for v in all_valences(n) {
            for shape in enumerate_partitions(n) {
                fillings.extend(enumerate_tableaux(&shape, &v, TableauClass::AllFillings)?);
            }
        }
    }
    let outcomes = maybe_par(cfg.parallel, &fillings, |f| fused_specht_limit(f).map(|p| p == fused_specht_combinatorial(f)));
    let mut t = Tally::new();
    for (f, ok) in fillings.iter().zip(outcomes) {
        let ok = ok?;
        t.check(ok, || format!("{f} with content {}", f.content()));
    }
    let cases = t.cases;
    Ok(t.finish(format!("{cases} fillings, n <= {}", cfg.max_n)))
}

/// The single-column filling `1^{s_1} 2^{s_2} ...` read top to bottom.
pub fn one_column_filling(v: &Valences) -> Result<Filling> {
    let rows = (0..v.len()).flat_map(|k| std::iter::repeat_n(vec![k as u32 + 1], v.get(k))).collect();
    Filling::with_content(rows, v)
}

pub fn one_column_closed_form(v: &Valences) -> FactoredFunction {
    let s = v.entries();
    let d = s.len();
    let pairs = (0..d).flat_map(|i| (i + 1..d).map(move |j| ((i, j), 2 * (s[i] * s[j]) as i32)));
    FactoredFunction::new(MPoly::one(d), pairs)
}

pub fn criterion_3(cfg: &SuiteConfig) -> Result<Outcome> {
    let vs: Vec<Valences> = (1..=cfg.max_n_one_column).flat_map(all_valences).collect();
    let outcomes = maybe_par(cfg.parallel, &vs, |v| -> Result<bool> {
        let p = fused_specht_limit(&one_column_filling(v)?)?;
        Ok(FactoredFunction::from_poly(p) == one_column_closed_form(v))
    });
    let mut t = Tally::new();
    for (v, ok) in vs.iter().zip(outcomes) {
        let ok = ok?;
        t.check(ok, || format!("content {v}"));
    }
    let cases = t.cases;
    Ok(t.finish(format!("{cases} valence vectors, n <= {}", cfg.max_n_one_column)))
}

fn is_two_column(shape: &Partition) -> bool {
    shape.parts().iter().all(|&p| p <= 2)
}

fn columns_sorted(f: &Filling) -> bool {
    f.columns().iter().all(|c| c.windows(2).all(|w| w[0] <= w[1]))
}

/// Number of nonnegative integer matrices with row and column sums `v`, which counts
/// the double cosets of the Young subgroup and so the dimension of the fused Hecke algebra.
pub fn double_coset_count(v: &Valences) -> usize {
    fn go(row: usize, rows: &[usize], cols: &mut Vec<usize>) -> usize {
        if row == rows.len() {
            return cols.iter().all(|&c| c == 0) as usize;
        }
        fn fill(k: usize, left: usize, row: usize, rows: &[usize], cols: &mut Vec<usize>) -> usize {
            if k == cols.len() {
                return if left == 0 { go(row + 1, rows, cols) } else { 0 };
            }
            let mut total = 0;
            for a in 0..=left.min(cols[k]) {
                cols[k] -= a;
                total += fill(k + 1, left - a, row, rows, cols);
                cols[k] += a;
            }
            total
        }
        fill(0, rows[row], row, rows, cols)
    }
    let s = v.entries();
    go(0, s, &mut s.to_vec())
}

struct RankCase {
    shape: Partition,
    content: Valences,
    row_strict: usize,
    basis_rank: usize,
    span_rank: usize,
    spanning_set: usize,
}

fn rank_case(shape: &Partition, v: &Valences, exhaustive: bool) -> Result<RankCase> {
    let rs = enumerate_tableaux(shape, v, TableauClass::RowStrict)?;
    let mut basis = Echelon::new();
    for t in &rs {
        basis.insert(&poly_vector(&fused_specht_limit(t)?));
    }
    // Column antisymmetry makes the fillings with sorted columns span the same space.
    let all: Vec<Filling> = enumerate_tableaux(shape, v, TableauClass::AllFillings)?
        .into_iter()
        .filter(|f| exhaustive || columns_sorted(f))
        .collect();
    let mut span = Echelon::new();
    for f in &all {
        span.insert(&poly_vector(&fused_specht_limit(f)?));
    }
    Ok(RankCase {
        shape: shape.clone(),
        content: v.clone(),
        row_strict: rs.len(),
        basis_rank: basis.rank(),
        span_rank: span.rank(),
        spanning_set: all.len(),
    })
}

pub fn criterion_4(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let mut tasks = Vec::new();
    for n in 1..=cfg.max_n_two_column {
        for v in all_valences(n) {
            for shape in enumerate_partitions(n).into_iter().filter(is_two_column) {
                tasks.push((shape, v.clone(), n <= cfg.max_n));
            }
        }
    }
    let outcomes = maybe_par(cfg.parallel, &tasks, |(shape, v, ex)| rank_case(shape, v, *ex));
    let mut spanned = 0;
    for c in outcomes {
        let c = c?;
        spanned += c.spanning_set;
        t.check(c.basis_rank == c.row_strict && c.span_rank == c.row_strict, || {
            format!("{} {}: |RSYT| {} rank {} span {}", c.shape, c.content, c.row_strict, c.basis_rank, c.span_rank)
        });
    }
    let mut squares = 0;
    for n in 1..=cfg.max_n_two_column {
        for v in all_valences(n) {
            let sum: usize = enumerate_partitions(n)
                .iter()
                .map(|shape| Ok(enumerate_tableaux(shape, &v, TableauClass::RowStrict)?.len().pow(2)))
                .sum::<Result<usize>>()?;
            let dc = double_coset_count(&v);
            squares += 1;
            t.check(sum == dc, || format!("sum of squares for {v}: {sum} vs {dc} double cosets"));
        }
    }
    for n in 1..=cfg.max_n_standard {
        let sum: usize = enumerate_partitions(n)
            .iter()
            .map(|shape| Ok(enumerate_tableaux(shape, &Valences::ones(n), TableauClass::Standard)?.len().pow(2)))
            .sum::<Result<usize>>()?;
        let fact: usize = (1..=n).product();
        t.check(sum == fact, || format!("sum f_lambda^2 = {sum} != {n}!"));
    }
    let shapes = tasks.len();
    Ok(t.finish(format!(
            "{shapes} (shape, content) pairs with two columns, n <= {} ({spanned} spanning fillings); {squares} sum-of-squares counts; n! for n <= {}",
            cfg.max_n_two_column, cfg.max_n_standard
        ),
    ))
}

fn ff(n: usize, c: Q, exps: &[((usize, usize), i32)]) -> FactoredFunction {
    FactoredFunction::new(MPoly::constant(n, c), exps.iter().map(|&((i, j), m)| ((i - 1, j - 1), m)))
}

/// Reference closed form for the block whose fused tableau has first row `1,1,2,3`.
pub fn reference_mixed_block() -> Result<FactoredFunction> {
    let square = ff(4, Q::new(1, 2), &[((1, 4), -4), ((2, 3), -4)]);
    let cross = ff(4, Q::new(1, 4), &[((1, 2), -2), ((1, 3), -2), ((2, 4), -2), ((3, 4), -2)]);
    square.add(&cross)
}

pub fn criterion_5(_cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let unit = [
        ("1,3;2,4", [((1, 3), 1), ((2, 4), 1), ((1, 2), -1), ((2, 3), -1), ((1, 4), -1), ((3, 4), -1)]),
        ("1,2;3,4", [((1, 2), 1), ((3, 4), 1), ((1, 3), -1), ((2, 3), -1), ((1, 4), -1), ((2, 4), -1)]),
    ];
    for (s, exps) in unit {
        let got = block_unit(&s.parse()?)?.function;
        t.check(got == ff(4, Q::one(), &exps), || format!("unit block {s}: got {got}"));
    }
    let v: Valences = "2,2,2,2".parse()?;
    let basis = BlockBasis::new(&v)?;
    let by_label: BTreeMap<String, FactoredFunction> =
        basis.elements.iter().map(|b| (b.label.as_ref().map(|l| l.to_string()).unwrap_or_default(), b.function.clone())).collect();
    let reference = [
        ("1,1,2,2;3,3,4,4", ff(4, Q::one(), &[((1, 2), 4), ((3, 4), 4), ((1, 3), -4), ((2, 3), -4), ((1, 4), -4), ((2, 4), -4)])),
        ("1,1,3,3;2,2,4,4", ff(4, Q::one(), &[((1, 3), 4), ((2, 4), 4), ((1, 2), -4), ((2, 3), -4), ((1, 4), -4), ((3, 4), -4)])),
        ("1,1,2,3;2,3,4,4", reference_mixed_block()?),
    ];
    for (label, expect) in reference {
        let got = by_label.get(label);
        let ok = got == Some(&expect);
        let residual = if ok {
            String::new()
        } else {
            let reference_zero = (0..4).map(|j| bsa_operator(j, &v, &expect).map(|r| r.is_zero())).collect::<Result<Vec<_>>>()?;
            let difference = match got {
                Some(g) => g.sub(&expect)?.to_string(),
                None => "missing".into(),
            };
            format!(
                "block {label}: computed minus reference = {difference}; reference form annihilated by the null-vector operators at points 1..4: {reference_zero:?}"
            )
        };
        t.check(ok, || residual);
    }
    Ok(t.finish("two unit blocks and three (2,2,2,2) blocks match".into()))
}

pub const BPZ_CONTENTS: [&str; 6] = ["1,1,1,1", "1,1,1,1,1,1", "2,1,1", "2,2", "2,2,2,2", "3,1,1,1"];

pub fn criterion_6(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let opts = BpzOptions { parallel: cfg.parallel, ..BpzOptions::default() };
    let mut worst: f64 = 0.0;
    for s in BPZ_CONTENTS {
        let r = verify_bpz(&s.parse()?, &opts)?;
        for res in &r.results {
            worst = worst.max(res.shadow_max);
            t.check(res.passed(), || {
                format!("{s} block {} point {}: zero {} shadow {:e} residual {}", res.block, res.point, res.zero, res.shadow_max, res.residual.clone().unwrap_or_default())
            });
        }
    }
    let cases = t.cases;
    Ok(t.finish(format!("{cases} (block, point) pairs exactly zero; largest float residual {worst:.1e}")))
}

pub fn criterion_7(_cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let pt: Vec<Q> = [1, 2, 4, 7].iter().map(|&x| Q::int(x)).collect();
    let maps = [
        ("translation", MobiusMap::translation(Q::new(3, 2))),
        ("scaling", MobiusMap::scaling(Q::int(2))),
        ("inversion", MobiusMap::inversion()),
    ];
    for s in ["1,1,1,1", "2,2,2,2"] {
        let basis = BlockBasis::new(&s.parse()?)?;
        for b in &basis.elements {
            for (name, m) in &maps {
                let r = mobius_check(b, m, &pt)?;
                t.check(r.holds(), || format!("{s} {} {name}: {r:?}", b.label.as_ref().map(|l| l.to_string()).unwrap_or_default()));
            }
        }
    }
    let cases = t.cases;
    Ok(t.finish(format!("{cases} (block, map) pairs")))
}

pub fn criterion_8(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let mut checks = Vec::new();
    for n in (2..=cfg.max_tl_points).step_by(2) {
        checks.extend(verify_tl(n)?);
    }
    let mut inner: Vec<Valences> = (2..=cfg.max_tl_points.min(6)).step_by(2).flat_map(all_valences).filter(|v| !v.is_unit()).collect();
    if cfg.max_tl_points >= 8 {
        inner.extend(["2,2,2,2", "4,4", "3,2,3", "8"].iter().map(|s| s.parse().expect("valid valences")));
    }
    for v in &inner {
        checks.extend(verify_symmetrizer(v)?);
    }
    for s in ["2,2", "2,1,1", "1,2,1", "3,1,1,1", "2,2,2,2"] {
        checks.extend(verify_valenced(&s.parse()?)?);
    }
    for c in &checks {
        t.check(c.lhs_minus_rhs_is_zero, || c.relation.clone());
    }
    let cases = t.cases;
    Ok(t.finish(format!("{cases} matrix relations, 2N <= {}", cfg.max_tl_points)))
}

pub fn criterion_9(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let d2 = PbwElement::word(&[1, 1]).add(&PbwElement::word(&[2]).scale(&Q::int(-1)));
    let d3 = PbwElement::word(&[1, 1, 1])
        .add(&PbwElement::word(&[1, 2]).add(&PbwElement::word(&[2, 1])).scale(&Q::int(-2)))
        .add(&PbwElement::word(&[3]).scale(&Q::int(4)));
    for (l, expect) in [(1, PbwElement::word(&[1])), (2, d2), (3, d3)] {
        let got = delta_op(l);
        t.check(got == expect, || format!("level {l} null vector: {got}"));
    }
    for l in 1..=cfg.max_singular_level {
        let r = verify_singular(l);
        t.check(r.passed, || format!("singular vector at level {l}: {r:?}"));
    }
    for l in 0..=cfg.max_dimension_level {
        let (d, p) = (level_dimension(l), partition_count(l));
        t.check(d == p, || format!("level {l} dimension {d} vs p = {p}"));
    }
    for l in 2..=cfg.max_fusion_level {
        let r = verify_fusion(l, cfg.fusion_truncation)?;
        t.check(r.leading_law_holds && r.recursion_residual_zero && r.leading_order_highest_weight, || format!("fusion at level {l}: {r:?}"));
    }
    Ok(t.finish(format!(
            "null vectors to level 3; singular to level {}; dimensions to level {}; fusion to level {}",
            cfg.max_singular_level, cfg.max_dimension_level, cfg.max_fusion_level
        ),
    ))
}

pub fn criterion_10(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let one: BTreeMap<String, Q> = [("1,4;2,5;3".to_string(), Q::one())].into_iter().collect();
    let two: BTreeMap<String, Q> = [("1,4;2,5;3".to_string(), Q::new(1, 2)), ("1,3;2,5;4".to_string(), Q::new(-1, 2))].into_iter().collect();
    for (s, expect) in [("1,3;1,4;2", one), ("1,3;2,4;3", two)] {
        let got = w_expansion(&s.parse()?)?;
        t.check(got == expect, || format!("w for {s}: {got:?}"));
    }
    let vs: Vec<Valences> = (1..=cfg.max_n).flat_map(all_valences).collect();
    let reports = maybe_par(cfg.parallel, &vs, verify_simple_module_dims);
    let mut tableaux = 0;
    for r in reports {
        let r = r?;
        tableaux += r.shapes.iter().map(|s| s.row_strict_count).sum::<usize>();
        t.check(r.all_passed, || format!("module dimensions for {}", r.content));
    }
    Ok(t.finish(format!("two reference expansions; {tableaux} row-strict tableaux triangular, n <= {}", cfg.max_n)))
}

pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let out = match id {
        1 => criterion_1(cfg),
        2 => criterion_2(cfg),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(cfg),
        10 => criterion_10(cfg),
        _ => Ok((false, 0, "no such criterion".into())),
    };
    let (passed, cases, detail) = match out {
        Ok(o) => o,
        Err(e) => (false, 0, format!("error: {e}")),
    };
    let name = CRITERIA.get(id.wrapping_sub(1)).copied().unwrap_or("unknown");
    CriterionResult { id, name, passed, cases, detail, elapsed: start.elapsed() }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let criteria: Vec<CriterionResult> = (1..=CRITERIA.len()).map(|id| run_criterion(id, cfg)).collect();
    let all_passed = criteria.iter().all(|c| c.passed);
    SuiteReport { config: cfg.clone(), criteria, all_passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_cosets() {
        assert_eq!(double_coset_count(&Valences::ones(4)), 24);
        assert_eq!(double_coset_count(&"2,1".parse().unwrap()), 2);
        assert_eq!(double_coset_count(&"2,2".parse().unwrap()), 3);
    }

    #[test]
    fn one_column_examples() {
        let v: Valences = "2,1".parse().unwrap();
        assert_eq!(one_column_filling(&v).unwrap().to_string(), "1;1;2");
        assert_eq!(one_column_closed_form(&v).to_string(), "(x2 - x1)^2");
    }

    #[test]
    fn sorted_columns_span_all_fillings() {
        for n in 3..=5 {
            for v in all_valences(n) {
                for shape in enumerate_partitions(n).into_iter().filter(is_two_column) {
                    let (a, b) = (rank_case(&shape, &v, true).unwrap(), rank_case(&shape, &v, false).unwrap());
                    assert_eq!(a.span_rank, b.span_rank, "{shape} {v}");
                }
            }
        }
    }

    #[test]
    fn small_suite() {
        let cfg = SuiteConfig::with_max_n(3);
        for id in [1, 2, 3, 4, 7, 9, 10] {
            let r = run_criterion(id, &cfg);
            assert!(r.passed, "{r:?}");
        }
        let r = run_criterion(5, &cfg);
        assert!(!r.passed && r.detail.contains("1,1,2,3;2,3,4,4"), "{r:?}");
    }
}
