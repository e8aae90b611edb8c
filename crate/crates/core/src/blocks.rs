//! Conformal block functions, their Temperley-Lieb actions and Möbius covariance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factored::FactoredFunction;
use crate::linalg::{poly_vector, Echelon, Matrix};
use crate::poly::{antisymmetrize, block_difference_pairs, MPoly, Monomial};
use crate::rational::Q;
use crate::specht::specht;
use crate::tableaux::{enumerate_tableaux, Filling, Partition, TableauClass, Valences};

#[derive(Debug, Clone, Serialize)]
pub struct BlockElement {
    pub label: Option<Filling>,
    pub valences: Valences,
    pub function: FactoredFunction,
    /// Downstairs polynomial part, i.e. the fused Specht polynomial for basis elements.
    pub fused: MPoly,
    /// Lift to `2N` variables, fixed by the block antisymmetrizer.
    pub upstairs: MPoly,
}

/// `prod_{i<j} (x_j - x_i)^{-s_i s_j / 2}`.
pub fn prefactor(v: &Valences) -> FactoredFunction {
    let s = v.entries();
    let d = s.len();
    let pairs = (0..d).flat_map(|i| (i + 1..d).map(move |j| ((i, j), -((s[i] * s[j]) as i32))));
    FactoredFunction::new(MPoly::one(d), pairs)
}

fn two_row_shape(n: usize) -> Result<Partition> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidValences(format!("total valence {n} is not a positive even number")));
    }
    Partition::new(vec![n / 2, n / 2])
}

impl BlockElement {
    /// Builds the downstairs function of an upstairs polynomial fixed by the antisymmetrizer.
    pub fn from_upstairs(v: &Valences, upstairs: MPoly, label: Option<Filling>) -> Result<BlockElement> {
        let fused = upstairs.div_differences(&block_difference_pairs(v))?.project_eval(v)?;
        let function = prefactor(v).mul_poly(&fused);
        Ok(BlockElement { label, valences: v.clone(), function, fused, upstairs })
    }
}

/// `Delta^{-1/2} P_{T^t}` for a standard tableau of shape `(N, N)`.
pub fn block_unit(t: &Filling) -> Result<BlockElement> {
    let shape = two_row_shape(t.n())?;
    if t.shape() != &shape || !t.is_standard() {
        return Err(Error::WrongClass { expected: "standard tableau of shape (N,N)" });
    }
    BlockElement::from_upstairs(t.content(), specht(&t.transpose())?, Some(t.clone()))
}

/// `prod (x_j - x_i)^{-s_i s_j / 2} F_{T^t}` for a column-strict tableau of shape `(N, N)`.
pub fn block_general(t: &Filling) -> Result<BlockElement> {
    let v = t.content();
    let shape = two_row_shape(v.n())?;
    if t.shape() != &shape || !t.is_column_strict() {
        return Err(Error::WrongClass { expected: "column-strict tableau of shape (N,N)" });
    }
    let upstairs = antisymmetrize(v, &specht(&t.transpose().tilde())?)?;
    BlockElement::from_upstairs(v, upstairs, Some(t.clone()))
}

/// Generators of the Temperley-Lieb algebra, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    Tau(usize),
}

/// Action of `omega(g)` on an upstairs polynomial: `e_k -> 1 + swap`, `tau_k -> -swap`.
pub fn omega_apply(g: Generator, p: &MPoly) -> MPoly {
    match g {
        Generator::E(k) => p + &p.swap_adjacent(k - 1),
        Generator::Tau(k) => -p.swap_adjacent(k - 1),
    }
}

/// Applies a word, rightmost letter first.
pub fn omega_word(word: &[Generator], p: &MPoly) -> MPoly {
    word.iter().rev().fold(p.clone(), |acc, &g| omega_apply(g, &acc))
}

fn check_word(word: &[Generator], n: usize) -> Result<()> {
    for g in word {
        let (Generator::E(k) | Generator::Tau(k)) = *g;
        if k == 0 || k >= n {
            return Err(Error::Arity { expected: n - 1, got: k });
        }
    }
    Ok(())
}

/// `(s a s) . B` computed through the upstairs lift.
pub fn valenced_action(word: &[Generator], b: &BlockElement) -> Result<BlockElement> {
    let v = &b.valences;
    check_word(word, v.n())?;
    let up = antisymmetrize(v, &omega_word(word, &b.upstairs))?;
    BlockElement::from_upstairs(v, up, None)
}

/// `tau_k . U` for unit valences.
pub fn tau_action(k: usize, b: &BlockElement) -> Result<BlockElement> {
    if !b.valences.is_unit() {
        return Err(Error::InvalidValences("tau action needs unit valences".into()));
    }
    valenced_action(&[Generator::Tau(k)], b)
}

/// Block basis indexed by the column-strict tableaux of shape `(N, N)`.
pub struct BlockBasis {
    pub valences: Valences,
    pub elements: Vec<BlockElement>,
    echelon: Echelon<Monomial>,
}

impl BlockBasis {
    pub fn new(v: &Valences) -> Result<BlockBasis> {
        let shape = two_row_shape(v.n())?;
        let elements = enumerate_tableaux(&shape, v, TableauClass::ColumnStrict)?
            .iter()
            .map(block_general)
            .collect::<Result<Vec<_>>>()?;
        let mut echelon = Echelon::new();
        for e in &elements {
            echelon.insert(&poly_vector(&e.fused));
        }
        Ok(BlockBasis { valences: v.clone(), elements, echelon })
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Rank of the block functions; they share the prefactor, so this is the rank of the fused parts.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn coordinates(&self, b: &BlockElement) -> Option<Vec<Q>> {
        self.echelon.coordinates(&poly_vector(&b.fused))
    }

    /// Matrix of a linear map on upstairs polynomials, followed by the antisymmetrizer.
    pub fn operator_matrix(&self, op: impl Fn(&MPoly) -> Result<MPoly>) -> Result<Matrix> {
        let cols = self
            .elements
            .iter()
            .map(|b| {
                let up = antisymmetrize(&self.valences, &op(&b.upstairs)?)?;
                let image = BlockElement::from_upstairs(&self.valences, up, None)?;
                self.coordinates(&image).ok_or(Error::WrongClass { expected: "element of the block span" })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }

    pub fn action_matrix(&self, word: &[Generator]) -> Result<Matrix> {
        check_word(word, self.valences.n())?;
        self.operator_matrix(|p| Ok(omega_word(word, p)))
    }

    /// Matrix of the symmetrizer of the given valences, on a unit-valence basis.
    pub fn symmetrizer_matrix(&self, inner: &Valences) -> Result<Matrix> {
        if inner.n() != self.valences.n() {
            return Err(Error::Arity { expected: self.valences.n(), got: inner.n() });
        }
        self.operator_matrix(|p| antisymmetrize(inner, p))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub lhs_minus_rhs_is_zero: bool,
}

fn check(out: &mut Vec<RelationCheck>, relation: String, lhs: &Matrix, rhs: &Matrix) {
    out.push(RelationCheck { relation, lhs_minus_rhs_is_zero: lhs.sub(rhs).is_zero() });
}

/// Temperley-Lieb relations on the unit-valence blocks with `n = 2N` points, in both
/// the `e` presentation and the `tau` presentation.
pub fn verify_tl(n: usize) -> Result<Vec<RelationCheck>> {
    let basis = BlockBasis::new(&Valences::ones(n))?;
    let dim = basis.dim();
    let id = Matrix::identity(dim);
    let e: Vec<Matrix> = (1..n).map(|k| basis.action_matrix(&[Generator::E(k)])).collect::<Result<_>>()?;
    let t: Vec<Matrix> = (1..n).map(|k| basis.action_matrix(&[Generator::Tau(k)])).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let two = Q::int(2);
    for i in 0..n - 1 {
        let k = i + 1;
        check(&mut out, format!("e{k}^2 = 2 e{k}"), &e[i].mul(&e[i]), &e[i].scale(&two));
        check(&mut out, format!("tau{k} = 1 - e{k}"), &t[i], &id.sub(&e[i]));
        check(&mut out, format!("tau{k}^2 = 1"), &t[i].mul(&t[i]), &id);
        if i + 1 < n - 1 {
            check(&mut out, format!("e{k} e{} e{k} = e{k}", k + 1), &e[i].mul(&e[i + 1]).mul(&e[i]), &e[i]);
            check(&mut out, format!("e{} e{k} e{} = e{}", k + 1, k + 1, k + 1), &e[i + 1].mul(&e[i]).mul(&e[i + 1]), &e[i + 1]);
            let (a, b) = (&t[i], &t[i + 1]);
            check(&mut out, format!("tau{k} tau{} tau{k} = tau{} tau{k} tau{}", k + 1, k + 1, k + 1), &a.mul(b).mul(a), &b.mul(a).mul(b));
            let lhs = id.sub(a).sub(b).add(&a.mul(b)).add(&b.mul(a)).sub(&a.mul(b).mul(a));
            check(&mut out, format!("1 - tau{k} - tau{} + tau{k} tau{} + tau{} tau{k} - tau{k} tau{} tau{k} = 0", k + 1, k + 1, k + 1, k + 1), &lhs, &Matrix::zeros(dim, dim));
        }
        for j in i + 2..n - 1 {
            check(&mut out, format!("e{k} e{} = e{} e{k}", j + 1, j + 1), &e[i].mul(&e[j]), &e[j].mul(&e[i]));
        }
    }
    Ok(out)
}

/// Symmetrizer relations on the unit-valence blocks: the symmetrizer of `inner` is
/// idempotent and killed on both sides by every `e_k` inside a block.
pub fn verify_symmetrizer(inner: &Valences) -> Result<Vec<RelationCheck>> {
    let n = inner.n();
    let basis = BlockBasis::new(&Valences::ones(n))?;
    let s = basis.symmetrizer_matrix(inner)?;
    let zero = Matrix::zeros(basis.dim(), basis.dim());
    let mut out = Vec::new();
    check(&mut out, format!("s{inner}^2 = s{inner}"), &s.mul(&s), &s);
    for r in inner.blocks() {
        for k in r.start + 1..r.end {
            let e = basis.action_matrix(&[Generator::E(k)])?;
            check(&mut out, format!("e{k} s{inner} = 0"), &e.mul(&s), &zero);
            check(&mut out, format!("s{inner} e{k} = 0"), &s.mul(&e), &zero);
        }
    }
    Ok(out)
}

/// Valenced relations: the unit acts as the identity and every product of two
/// generators `(s e_i s)(s e_j s)` matches the upstairs composite.
pub fn verify_valenced(v: &Valences) -> Result<Vec<RelationCheck>> {
    let basis = BlockBasis::new(v)?;
    let n = v.n();
    let mut out = Vec::new();
    let unit = basis.action_matrix(&[])?;
    check(&mut out, format!("unit of TL{v} = 1"), &unit, &Matrix::identity(basis.dim()));
    let gens: Vec<Matrix> = (1..n).map(|k| basis.action_matrix(&[Generator::E(k)])).collect::<Result<_>>()?;
    for i in 1..n {
        for j in 1..n {
            // Upstairs composite (s e_i s)(s e_j s) applied to each basis element.
            let composite = basis.operator_matrix(|p| {
                let inner = antisymmetrize(v, &omega_apply(Generator::E(j), p))?;
                Ok(omega_apply(Generator::E(i), &inner))
            })?;
            check(&mut out, format!("[s e{i} s][s e{j} s] in TL{v}"), &gens[i - 1].mul(&gens[j - 1]), &composite);
        }
    }
    Ok(out)
}

/// `x -> (a x + b) / (c x + d)` with `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MobiusMap {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl MobiusMap {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<MobiusMap> {
        if &a * &d - &b * &c != Q::one() {
            return Err(Error::BadMap(format!("ad - bc != 1 for ({a}, {b}, {c}, {d})")));
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn translation(b: Q) -> MobiusMap {
        MobiusMap { a: Q::one(), b, c: Q::zero(), d: Q::one() }
    }

    /// `x -> a^2 x`.
    pub fn scaling(a: Q) -> MobiusMap {
        let d = a.recip();
        MobiusMap { a, b: Q::zero(), c: Q::zero(), d }
    }

    /// `x -> -1/x`.
    pub fn inversion() -> MobiusMap {
        MobiusMap { a: Q::zero(), b: Q::int(-1), c: Q::one(), d: Q::zero() }
    }

    pub fn apply(&self, x: &Q) -> Q {
        (&self.a * x + &self.b) / (&self.c * x + &self.d)
    }

    fn denominator(&self, x: &Q) -> Q {
        &self.c * x + &self.d
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MobiusReport {
    pub map: MobiusMap,
    pub squares_equal: bool,
    pub positive_before: bool,
    pub positive_after: bool,
}

impl MobiusReport {
    pub fn holds(&self) -> bool {
        self.squares_equal && self.positive_before && self.positive_after
    }
}

/// Linear polynomial `u x_i + w`.
fn affine(nvars: usize, i: usize, u: &Q, w: &Q) -> MPoly {
    &MPoly::var(nvars, i).scale(u) + &MPoly::constant(nvars, w.clone())
}

/// Checks `U(phi(x))^2 = prod |phi'(x_i)|^{-s_i^2/2} U(x)^2` as a polynomial identity after
/// clearing denominators, plus positivity of `U` at `point` and at its image.
pub fn mobius_check(b: &BlockElement, map: &MobiusMap, point: &[Q]) -> Result<MobiusReport> {
    let f = &b.function;
    let d = f.nvars();
    let s = b.valences.entries();
    if point.len() != d {
        return Err(Error::Arity { expected: d, got: point.len() });
    }
    let image: Vec<Q> = point.iter().map(|x| map.apply(x)).collect();
    let ordered = |p: &[Q]| p.windows(2).all(|w| w[0] < w[1]);
    if !ordered(point) || !ordered(&image) || point.iter().any(|x| !map.denominator(x).is_positive()) {
        return Err(Error::BadMap("ordering not preserved at the test point".into()));
    }
    let p = f.poly();
    let lin: Vec<MPoly> = (0..d).map(|i| affine(d, i, &map.c, &map.d)).collect();
    let num: Vec<MPoly> = (0..d).map(|i| affine(d, i, &map.a, &map.b)).collect();
    let degs: Vec<u16> = (0..d).map(|i| p.degree_in(i)).collect();
    // P(phi(x)) prod (c x_i + d)^{D_i}
    let mut moved = MPoly::zero(d);
    for (m, c) in p.terms() {
        let mut t = MPoly::constant(d, c.clone());
        for i in 0..d {
            let e = m.get(i);
            t = &(&t * &num[i].pow(e as u32)) * &lin[i].pow((degs[i] - e) as u32);
        }
        moved = &moved + &t;
    }
    let mut lhs = &moved * &moved;
    let mut rhs = p * p;
    for i in 0..d {
        let mut g = -2 * degs[i] as i64 - (s[i] * s[i]) as i64;
        for j in 0..d {
            if j != i {
                g -= f.doubled_exponent(i.min(j), i.max(j)) as i64;
            }
        }
        if g > 0 {
            lhs = &lhs * &lin[i].pow(g as u32);
        } else if g < 0 {
            rhs = &rhs * &lin[i].pow((-g) as u32);
        }
    }
    Ok(MobiusReport {
        map: map.clone(),
        squares_equal: lhs == rhs,
        positive_before: p.eval(point).is_positive(),
        positive_after: p.eval(&image).is_positive(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(s: &str) -> Filling {
        s.parse().unwrap()
    }

    fn ff(n: usize, c: Q, exps: &[((usize, usize), i32)]) -> FactoredFunction {
        FactoredFunction::new(MPoly::constant(n, c), exps.iter().map(|&((i, j), m)| ((i - 1, j - 1), m)))
    }

    #[test]
    fn unit_goldens() {
        let u = block_unit(&fl("1,3;2,4")).unwrap();
        let expect = ff(4, Q::one(), &[((1, 3), 1), ((2, 4), 1), ((1, 2), -1), ((2, 3), -1), ((1, 4), -1), ((3, 4), -1)]);
        assert_eq!(u.function, expect);
        let u = block_unit(&fl("1,2;3,4")).unwrap();
        let expect = ff(4, Q::one(), &[((1, 2), 1), ((3, 4), 1), ((1, 3), -1), ((2, 3), -1), ((1, 4), -1), ((2, 4), -1)]);
        assert_eq!(u.function, expect);
        let u = block_unit(&fl("1;2")).unwrap();
        assert_eq!(u.function, ff(2, Q::one(), &[((1, 2), -1)]));
        assert_eq!(block_general(&fl("1,3;2,4")).unwrap().function, block_unit(&fl("1,3;2,4")).unwrap().function);
    }

    #[test]
    fn fused_goldens() {
        let basis = BlockBasis::new(&"2,2,2,2".parse().unwrap()).unwrap();
        let labels: Vec<String> = basis.elements.iter().map(|b| b.label.as_ref().unwrap().to_string()).collect();
        assert_eq!(labels, ["1,1,3,3;2,2,4,4", "1,1,2,3;2,3,4,4", "1,1,2,2;3,3,4,4"]);
        let t1 = ff(4, Q::one(), &[((1, 2), 4), ((3, 4), 4), ((1, 3), -4), ((2, 3), -4), ((1, 4), -4), ((2, 4), -4)]);
        let t2 = ff(4, Q::one(), &[((1, 3), 4), ((2, 4), 4), ((1, 2), -4), ((2, 3), -4), ((1, 4), -4), ((3, 4), -4)]);
        let square = ff(4, Q::new(1, 2), &[((1, 4), -4), ((2, 3), -4)]);
        let cross = ff(4, Q::one(), &[((1, 2), -2), ((1, 3), -2), ((2, 4), -2), ((3, 4), -2)]);
        assert_eq!(basis.elements[2].function, t1);
        assert_eq!(basis.elements[0].function, t2);
        assert_eq!(basis.elements[1].function, square.add(&cross).unwrap());
        // The quarter-weight cross term differs by a non-multiple.
        let quarter = square.add(&cross.scale(&Q::new(1, 4))).unwrap();
        assert_ne!(basis.elements[1].function, quarter);
        assert_eq!(basis.rank(), 3);
    }

    #[test]
    fn tau_and_e_examples() {
        let u = block_unit(&fl("1;2")).unwrap();
        let basis = BlockBasis::new(&Valences::ones(2)).unwrap();
        assert_eq!(basis.action_matrix(&[Generator::E(1)]).unwrap(), Matrix::from_columns(1, &[vec![Q::int(2)]]));
        assert_eq!(tau_action(1, &u).unwrap().function, u.function.scale(&Q::int(-1)));
        // 1 and 2 share a column of T^t
        let u = block_unit(&fl("1,2;3,4")).unwrap();
        assert_eq!(tau_action(1, &u).unwrap().function, u.function);
        assert_eq!(valenced_action(&[], &u).unwrap().function, u.function);
    }

    #[test]
    fn tl_relations() {
        for n in [2, 4, 6] {
            let checks = verify_tl(n).unwrap();
            assert!(checks.iter().all(|c| c.lhs_minus_rhs_is_zero), "{checks:?}");
        }
    }

    #[test]
    fn symmetrizer_relations() {
        for v in ["2,2", "3,1", "1,2,1", "4", "2,2,2", "3,3", "1,4,1"] {
            let checks = verify_symmetrizer(&v.parse().unwrap()).unwrap();
            assert!(checks.iter().all(|c| c.lhs_minus_rhs_is_zero), "{v}: {checks:?}");
        }
    }

    #[test]
    fn valenced_relations() {
        for v in ["2,2,2,2", "2,1,1", "1,2,1", "3,1,1,1", "2,2"] {
            let checks = verify_valenced(&v.parse().unwrap()).unwrap();
            assert!(checks.iter().all(|c| c.lhs_minus_rhs_is_zero), "{v}: {checks:?}");
        }
    }

    #[test]
    fn catalan_counts() {
        for (n, cat) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            let b = BlockBasis::new(&Valences::ones(2 * n)).unwrap();
            assert_eq!((b.dim(), b.rank()), (cat, cat));
        }
    }

    #[test]
    fn mobius_examples() {
        let pt: Vec<Q> = [1, 2, 4, 7].iter().map(|&x| Q::int(x)).collect();
        let maps = [MobiusMap::translation(Q::new(3, 2)), MobiusMap::scaling(Q::int(2)), MobiusMap::inversion()];
        for v in ["1,1,1,1", "2,2,2,2", "2,1,1", "3,1,1,1"] {
            let basis = BlockBasis::new(&v.parse().unwrap()).unwrap();
            let d = basis.valences.len();
            for b in &basis.elements {
                for m in &maps {
                    let r = mobius_check(b, m, &pt[..d]).unwrap();
                    assert!(r.holds(), "{v} {:?} {r:?}", b.label);
                }
            }
        }
        let bad = MobiusMap::new(Q::int(2), Q::zero(), Q::zero(), Q::int(2));
        assert!(bad.is_err());
        let u = block_unit(&fl("1,3;2,4")).unwrap();
        let neg: Vec<Q> = [-2, -1, 1, 2].iter().map(|&x| Q::int(x)).collect();
        assert!(mobius_check(&u, &MobiusMap::inversion(), &neg).is_err());
    }
}
