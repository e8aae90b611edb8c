//! Tabloids, polytabloids and the `w_T` basis of the antisymmetrized Specht module.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::perm::{signed_perms, Perm};
use crate::poly::odometer;
use crate::rational::Q;
use crate::specht::specht;
use crate::tableaux::{dominance_geq, enumerate_partitions, enumerate_tableaux, Filling, Partition, TableauClass, Valences};
use crate::linalg::poly_vector;

/// Row-set equivalence class of a numbering; rows are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid(Vec<Vec<u32>>);

impl Tabloid {
    pub fn of(n: &Filling) -> Tabloid {
        Tabloid::from_rows(n.rows().to_vec())
    }

    fn from_rows(mut rows: Vec<Vec<u32>>) -> Tabloid {
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid(rows)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    /// Applies a letter permutation (zero-based on letters `1..=n`).
    pub fn relabel(&self, g: &Perm) -> Tabloid {
        Tabloid::from_rows(self.0.iter().map(|r| r.iter().map(|&e| g.apply(e as usize - 1) as u32 + 1).collect()).collect())
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.0.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{{{}}}", rows.join(";"))
    }
}

/// Finite rational combination of tabloids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TabloidVector(pub SparseVec<Tabloid>);

impl TabloidVector {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, t: Tabloid, c: Q) {
        let e = self.0.entry(t.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&t);
        }
    }

    pub fn add(&self, other: &TabloidVector) -> TabloidVector {
        let mut out = self.clone();
        for (t, c) in &other.0 {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> TabloidVector {
        if c.is_zero() {
            return TabloidVector::default();
        }
        TabloidVector(self.0.iter().map(|(t, a)| (t.clone(), a * c)).collect())
    }

    /// Letter permutation action `g.{N} = {g(N)}`.
    pub fn act(&self, g: &Perm) -> TabloidVector {
        let mut out = TabloidVector::default();
        for (t, c) in &self.0 {
            out.add_term(t.relabel(g), c.clone());
        }
        out
    }

    /// Block antisymmetrizer acting on letters.
    pub fn antisymmetrize(&self, v: &Valences) -> TabloidVector {
        let n = v.n();
        let blocks = v.blocks();
        let perms: Vec<Vec<(Vec<usize>, i32)>> = blocks.iter().map(|r| signed_perms(r.len())).collect();
        let norm = Q::new(1, v.group_order() as i64);
        let mut out = TabloidVector::default();
        let mut idx = vec![0usize; blocks.len()];
        loop {
            let mut images: Vec<usize> = (0..n).collect();
            let mut sign = 1;
            for (k, r) in blocks.iter().enumerate() {
                let (p, s) = &perms[k][idx[k]];
                sign *= s;
                for (a, &b) in p.iter().enumerate() {
                    images[r.start + a] = r.start + b;
                }
            }
            let g = Perm::new(images).expect("block permutation");
            for (t, c) in &self.0 {
                out.add_term(t.relabel(&g), c * &norm * Q::int(sign as i64));
            }
            if !odometer(&mut idx, |k| perms[k].len()) {
                return out;
            }
        }
    }
}

/// Column-antisymmetrized tabloid sum of a numbering.
pub fn polytabloid(n: &Filling) -> Result<TabloidVector> {
    if !n.is_numbering() {
        return Err(Error::WrongClass { expected: "numbering" });
    }
    let cols = n.columns();
    let perms: Vec<Vec<(Vec<usize>, i32)>> = cols.iter().map(|c| signed_perms(c.len())).collect();
    let mut out = TabloidVector::default();
    let mut idx = vec![0usize; cols.len()];
    loop {
        let mut rows: Vec<Vec<u32>> = n.shape().parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        let mut sign = 1;
        for (c, col) in cols.iter().enumerate() {
            let (p, s) = &perms[c][idx[c]];
            sign *= s;
            for (r, &src) in p.iter().enumerate() {
                rows[r].push(col[src]);
            }
        }
        out.add_term(Tabloid::from_rows(rows), Q::int(sign as i64));
        if !odometer(&mut idx, |k| perms[k].len()) {
            return Ok(out);
        }
    }
}

/// `p_v . v_{T~}` for a row-strict `T`.
pub fn w_vector(t: &Filling, v: &Valences) -> Result<TabloidVector> {
    if !t.is_row_strict() {
        return Err(Error::WrongClass { expected: "row-strict" });
    }
    if t.content() != v {
        return Err(Error::InvalidFilling(format!("content {} differs from {}", t.content(), v)));
    }
    Ok(polytabloid(&t.tilde())?.antisymmetrize(v))
}

/// Standard polytabloids of one shape, ready for coordinate solves.
pub struct StandardBasis {
    pub tableaux: Vec<Filling>,
    echelon: Echelon<Tabloid>,
}

impl StandardBasis {
    pub fn new(shape: &Partition) -> Result<StandardBasis> {
        let tableaux = enumerate_tableaux(shape, &Valences::ones(shape.size()), TableauClass::Standard)?;
        let mut echelon = Echelon::new();
        for t in &tableaux {
            let independent = echelon.insert(&polytabloid(t)?.0);
            debug_assert!(independent);
        }
        Ok(StandardBasis { tableaux, echelon })
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Coordinates in the standard polytabloids, if the vector lies in their span.
    pub fn coordinates(&self, x: &TabloidVector) -> Option<Vec<Q>> {
        self.echelon.coordinates(&x.0)
    }

    /// Nonzero coordinates paired with their standard tableaux.
    pub fn expansion(&self, x: &TabloidVector) -> Option<Vec<(Filling, Q)>> {
        let c = self.coordinates(x)?;
        Some(self.tableaux.iter().cloned().zip(c).filter(|(_, q)| !q.is_zero()).collect())
    }
}

/// Whether the expansion of `w_T` has positive coefficient on `T~` and otherwise only
/// involves standard tableaux that are larger in column-reading order.
pub fn is_upper_triangular(t: &Filling, expansion: &[(Filling, Q)]) -> bool {
    let lead = t.tilde();
    let own = expansion.iter().find(|(s, _)| *s == lead);
    matches!(own, Some((_, c)) if c.is_positive())
        && expansion.iter().all(|(s, _)| *s == lead || s.cmp_column_reading(&lead).is_gt())
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleDimension {
    pub shape: Partition,
    /// Dimension of `p_v(V^lambda)`, as the rank of the antisymmetrized standard polytabloids.
    pub dimension: usize,
    pub row_strict_count: usize,
    pub w_rank: usize,
    /// Whether the transposed shape dominates the sorted valences.
    pub kostka_nonempty: bool,
    pub upper_triangular: bool,
}

impl ModuleDimension {
    pub fn consistent(&self) -> bool {
        self.dimension == self.row_strict_count
            && self.w_rank == self.row_strict_count
            && (self.dimension > 0) == self.kostka_nonempty
            && self.upper_triangular
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleReport {
    pub content: Valences,
    pub shapes: Vec<ModuleDimension>,
    pub sum_of_squares: usize,
    pub hecke_dimension: usize,
    pub all_passed: bool,
}

/// For each shape: dimension of the antisymmetrized Specht module, the number of
/// row-strict tableaux, the rank of the `w_T`, and the dominance criterion.
pub fn verify_simple_module_dims(v: &Valences) -> Result<ModuleReport> {
    let mut shapes = Vec::new();
    for shape in enumerate_partitions(v.n()) {
        let basis = StandardBasis::new(&shape)?;
        let mut image = Echelon::new();
        for s in &basis.tableaux {
            image.insert(&polytabloid(s)?.antisymmetrize(v).0);
        }
        let rs = enumerate_tableaux(&shape, v, TableauClass::RowStrict)?;
        let mut w_span = Echelon::new();
        let mut upper = true;
        for t in &rs {
            let w = w_vector(t, v)?;
            w_span.insert(&w.0);
            upper &= basis.expansion(&w).is_some_and(|e| is_upper_triangular(t, &e));
        }
        shapes.push(ModuleDimension {
            kostka_nonempty: dominance_geq(&shape.transpose(), &v.ordered()),
            shape,
            dimension: image.rank(),
            row_strict_count: rs.len(),
            w_rank: w_span.rank(),
            upper_triangular: upper,
        });
    }
    let sum_of_squares = shapes.iter().map(|s| s.w_rank * s.w_rank).sum();
    let hecke_dimension = crate::specht::hecke_dimension(v);
    let all_passed = shapes.iter().all(|s| s.consistent()) && sum_of_squares == hecke_dimension;
    Ok(ModuleReport { content: v.clone(), shapes, sum_of_squares, hecke_dimension, all_passed })
}

/// Matrix of a permutation on the standard Specht polynomials.
pub fn specht_action_matrix(shape: &Partition, g: &Perm) -> Result<Matrix> {
    let ts = enumerate_tableaux(shape, &Valences::ones(shape.size()), TableauClass::Standard)?;
    let polys = ts.iter().map(specht).collect::<Result<Vec<_>>>()?;
    let mut e = Echelon::new();
    for p in &polys {
        e.insert(&poly_vector(p));
    }
    let cols = polys
        .iter()
        .map(|p| e.coordinates(&poly_vector(&p.act(g)?)).ok_or(Error::WrongClass { expected: "invariant span" }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(ts.len(), &cols))
}

/// Matrix of a permutation on the standard polytabloids.
pub fn tabloid_action_matrix(shape: &Partition, g: &Perm) -> Result<Matrix> {
    let basis = StandardBasis::new(shape)?;
    let cols = basis
        .tableaux
        .iter()
        .map(|t| {
            let moved = polytabloid(t)?.act(g);
            basis.coordinates(&moved).ok_or(Error::WrongClass { expected: "invariant span" })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(basis.tableaux.len(), &cols))
}

/// Whether `sigma` has the same matrix on Specht polynomials and on polytabloids,
/// for every `sigma` in the sample.
pub fn check_polynomial_isomorphism(shape: &Partition, sample: &[Perm]) -> Result<bool> {
    for g in sample {
        if specht_action_matrix(shape, g)? != tabloid_action_matrix(shape, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients of `w_T` on each standard tableau, keyed by the tableau text.
pub fn w_expansion(t: &Filling) -> Result<BTreeMap<String, Q>> {
    let basis = StandardBasis::new(t.shape())?;
    let w = w_vector(t, t.content())?;
    let e = basis.expansion(&w).ok_or(Error::WrongClass { expected: "vector in the Specht module" })?;
    Ok(e.into_iter().map(|(s, c)| (s.to_string(), c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(s: &str) -> Filling {
        s.parse().unwrap()
    }

    fn all_compositions(n: usize) -> Vec<Valences> {
        (0..1u32 << (n - 1))
            .map(|mask| {
                let mut parts = vec![1usize];
                for i in 0..n - 1 {
                    if mask & (1 << i) != 0 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                Valences::new(parts).unwrap()
            })
            .collect()
    }

    #[test]
    fn polytabloid_examples() {
        assert_eq!(polytabloid(&fl("1")).unwrap().0.len(), 1);
        let v = polytabloid(&fl("1,2;3,4")).unwrap();
        assert_eq!(v.0.len(), 4);
        assert_eq!(v.0.get(&Tabloid::of(&fl("3,4;1,2"))), Some(&Q::one()));
        assert_eq!(v.0.get(&Tabloid::of(&fl("3,2;1,4"))), Some(&Q::int(-1)));
        assert_eq!(StandardBasis::new(&"2,2".parse().unwrap()).unwrap().rank(), 2);
    }

    #[test]
    fn w_goldens() {
        let t = fl("1,3;1,4;2");
        let e = w_expansion(&t).unwrap();
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![("1,4;2,5;3".to_string(), Q::one())]);

        let t = fl("1,3;2,4;3");
        let e = w_expansion(&t).unwrap();
        let expect: BTreeMap<String, Q> =
            [("1,4;2,5;3".to_string(), Q::new(1, 2)), ("1,3;2,5;4".to_string(), Q::new(-1, 2))].into_iter().collect();
        assert_eq!(e, expect);
        // The raw tabloid sum also matches the unstraightened display.
        let raw = w_vector(&t, t.content()).unwrap();
        let direct = polytabloid(&fl("1,4;2,5;3"))
            .unwrap()
            .scale(&Q::new(1, 2))
            .add(&polytabloid(&fl("1,3;2,5;4")).unwrap().scale(&Q::new(-1, 2)));
        assert_eq!(raw, direct);
    }

    #[test]
    fn unit_content_gives_polytabloid() {
        let t = fl("1,3;2,4");
        assert_eq!(w_vector(&t, &Valences::ones(4)).unwrap(), polytabloid(&t).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let dim = |v: &str, shape: &str| {
            let r = verify_simple_module_dims(&v.parse().unwrap()).unwrap();
            assert!(r.all_passed);
            r.shapes.iter().find(|s| s.shape.to_string() == shape).unwrap().dimension
        };
        assert_eq!(dim("2,1", "(2,1)"), 1);
        assert_eq!(dim("3", "(3)"), 0);
        assert_eq!(dim("1,1,1,1", "(2,2)"), 2);
    }

    #[test]
    fn module_dims_all_small_valences() {
        for n in 1..=5 {
            for v in all_compositions(n) {
                let r = verify_simple_module_dims(&v).unwrap();
                assert!(r.all_passed, "{v}: {:?}", r.shapes);
            }
        }
    }

    #[test]
    fn polynomial_isomorphism() {
        let p21: Partition = "2,1".parse().unwrap();
        assert!(check_polynomial_isomorphism(&p21, &[Perm::identity(3)]).unwrap());
        assert!(check_polynomial_isomorphism(&p21, &Perm::all(3)).unwrap());
        let p22: Partition = "2,2".parse().unwrap();
        let gens: Vec<Perm> = (0..3).map(|k| Perm::transposition(4, k, k + 1)).collect();
        assert!(check_polynomial_isomorphism(&p22, &gens).unwrap());
        let p311: Partition = "3,1,1".parse().unwrap();
        let gens: Vec<Perm> = (0..4).map(|k| Perm::transposition(5, k, k + 1)).collect();
        assert!(check_polynomial_isomorphism(&p311, &gens).unwrap());
    }
}
