//! The two-step nilpotent Lie algebra attached to a graph.
//!
//! For a graph on vertices `0..n` with `m` edges, the algebra has basis
//! `v_0, ..., v_{n-1}` (the V-part) followed by `e_{ij}` for each edge
//! `i < j` in lexicographic order (the Z-part, indices `n..n+m`). The only
//! nonzero brackets of basis vectors are `[v_i, v_j] = e_{ij}` and
//! `[v_j, v_i] = -e_{ij}` for edges `i < j`; the Z-part is central.
//!
//! Structural invariants are computed through the [`StructureTable`] trait so
//! the same code handles algebras given only by a table of brackets.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::graph::Graph;
use crate::linalg::Matrix;

/// Anything that can report the bracket of two basis vectors.
pub trait StructureTable {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    /// Coefficients of `[b_i, b_j]` in the basis.
    fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar>;

    /// Bilinear extension of [`StructureTable::basis_bracket`] to coordinate vectors.
    fn bracket_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![f.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                if i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, b) in self.basis_bracket(i, j).iter().enumerate() {
                    if !b.is_zero() {
                        out[k] = &out[k] + &(&c * b);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphLieAlgebra {
    graph: Graph,
    field: Field,
}

/// A coordinate vector in some algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: Vec<Scalar>,
}

impl LieElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().map(|x| c * x).collect(),
        }
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        assert_eq!(
            self.coeffs.len(),
            rhs.coeffs.len(),
            "adding elements of different algebras"
        );
        LieElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &(-rhs)
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// Dimension counts and nilpotency flags of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructuralInvariants {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub is_abelian: bool,
    pub is_two_step: bool,
}

impl GraphLieAlgebra {
    pub fn new(graph: Graph, field: Field) -> GraphLieAlgebra {
        GraphLieAlgebra { graph, field }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `|S|`
    pub fn v_dim(&self) -> usize {
        self.graph.n()
    }

    /// `|E|`
    pub fn z_dim(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn basis_names(&self) -> Vec<String> {
        (0..self.v_dim())
            .map(|i| format!("v{i}"))
            .chain(self.graph.edges().iter().map(|(a, b)| format!("e{a}_{b}")))
            .collect()
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<LieElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        if coeffs.iter().any(|c| !self.field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(LieElement { coeffs })
    }

    /// Element from integer coordinates.
    pub fn element_i64(&self, coeffs: &[i64]) -> Result<LieElement> {
        self.element(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    /// Element from a V-part and a Z-part.
    pub fn element_from_parts(&self, v: Vec<Scalar>, z: Vec<Scalar>) -> Result<LieElement> {
        if v.len() != self.v_dim() || z.len() != self.z_dim() {
            return Err(Error::DimensionMismatch(format!(
                "parts of length ({}, {}) for an algebra with |S| = {}, |E| = {}",
                v.len(),
                z.len(),
                self.v_dim(),
                self.z_dim()
            )));
        }
        self.element(v.into_iter().chain(z).collect())
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    pub fn basis(&self, k: usize) -> LieElement {
        let mut x = self.zero();
        x.coeffs[k] = self.field.one();
        x
    }

    pub fn vertex(&self, i: usize) -> LieElement {
        assert!(i < self.v_dim(), "vertex {i} out of range");
        self.basis(i)
    }

    /// The basis vector `e_{ij}`, i.e. `[v_min, v_max]`.
    pub fn edge(&self, i: usize, j: usize) -> Option<LieElement> {
        self.graph
            .edge_index(i, j)
            .map(|e| self.basis(self.v_dim() + e))
    }

    pub fn v_part<'a>(&self, x: &'a LieElement) -> &'a [Scalar] {
        &x.coeffs[..self.v_dim()]
    }

    pub fn z_part<'a>(&self, x: &'a LieElement) -> &'a [Scalar] {
        &x.coeffs[self.v_dim()..]
    }

    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        LieElement {
            coeffs: (0..self.dim()).map(|_| self.field.random(rng)).collect(),
        }
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        if x.coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element of dimension {} used in an algebra of dimension {}",
                x.coeffs.len(),
                self.dim()
            )));
        }
        if x.coeffs.first().is_some_and(|c| !self.field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// The Lie bracket. Z-parts of the inputs do not contribute; the result lies in the Z-part.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        self.check(y)?;
        let n = self.v_dim();
        let mut out = self.zero();
        for (e, &(i, j)) in self.graph.edges().iter().enumerate() {
            let c = &(&x.coeffs[i] * &y.coeffs[j]) - &(&x.coeffs[j] * &y.coeffs[i]);
            out.coeffs[n + e] = c;
        }
        Ok(out)
    }

    /// Z-coordinates of `u ∧ w` modulo W, for `u, w` in the V-part:
    /// the coefficient on edge `{a, b}` is `u_a w_b - u_b w_a`.
    pub fn wedge_mod_w(&self, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        self.graph
            .edges()
            .iter()
            .map(|&(a, b)| &(&u[a] * &w[b]) - &(&u[b] * &w[a]))
            .collect()
    }

    pub fn structural_invariants(&self) -> StructuralInvariants {
        structural_invariants(self)
    }

    pub fn export_structure_constants(&self) -> StructureConstants {
        StructureConstants::from_table(self, self.basis_names())
    }
}

impl StructureTable for GraphLieAlgebra {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self) -> usize {
        self.graph.n() + self.graph.edge_count()
    }

    fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        let n = self.v_dim();
        if i < n && j < n {
            if let Some(e) = self.graph.edge_index(i, j) {
                out[n + e] = if i < j {
                    self.field.one()
                } else {
                    -&self.field.one()
                };
            }
        }
        out
    }
}

/// Rank of the span of all brackets `[b_i, b_j]`.
pub fn derived_dimension<T: StructureTable + ?Sized>(t: &T) -> usize {
    let d = t.dim();
    let rows: Vec<Vec<Scalar>> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .map(|(i, j)| t.basis_bracket(i, j))
        .filter(|r| r.iter().any(|s| !s.is_zero()))
        .collect();
    Matrix::from_rows(t.field(), d, rows)
        .expect("bracket rows")
        .rank()
}

/// Kernel basis of `x ↦ ([x, b_0], ..., [x, b_{d-1}])`.
pub fn center_basis<T: StructureTable + ?Sized>(t: &T) -> Vec<Vec<Scalar>> {
    let d = t.dim();
    // row (k, l): coefficient l of [b_i, b_k], as a function of the column i
    let brackets: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| (0..d).map(|k| t.basis_bracket(i, k)).collect())
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..d)
        .flat_map(|k| (0..d).map(move |l| (k, l)))
        .map(|(k, l)| {
            brackets
                .iter()
                .map(|b| b[k][l].clone())
                .collect::<Vec<Scalar>>()
        })
        .filter(|row| row.iter().any(|s| !s.is_zero()))
        .collect();
    Matrix::from_rows(t.field(), d, rows)
        .expect("adjoint rows")
        .null_space()
}

/// True iff every double bracket `[b_i, [b_j, b_k]]` vanishes.
pub fn is_two_step<T: StructureTable + ?Sized>(t: &T) -> bool {
    let d = t.dim();
    (0..d).all(|j| {
        (j + 1..d).all(|k| {
            let inner = t.basis_bracket(j, k);
            let basis = |i: usize| {
                let mut v = vec![t.field().zero(); d];
                v[i] = t.field().one();
                v
            };
            inner.iter().all(Scalar::is_zero)
                || (0..d).all(|i| {
                    t.bracket_coords(&basis(i), &inner)
                        .iter()
                        .all(Scalar::is_zero)
                })
        })
    })
}

/// Checks the Jacobi identity on every triple of basis vectors.
pub fn jacobi_holds<T: StructureTable + ?Sized>(t: &T) -> bool {
    let d = t.dim();
    let f = t.field();
    let basis = |i: usize| {
        let mut v = vec![f.zero(); d];
        v[i] = f.one();
        v
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let a = t.bracket_coords(&basis(i), &t.basis_bracket(j, k));
                let b = t.bracket_coords(&basis(j), &t.basis_bracket(k, i));
                let c = t.bracket_coords(&basis(k), &t.basis_bracket(i, j));
                if a.iter()
                    .zip(&b)
                    .zip(&c)
                    .any(|((x, y), z)| !(&(x + y) + z).is_zero())
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn structural_invariants<T: StructureTable + ?Sized>(t: &T) -> StructuralInvariants {
    let derived_dim = derived_dimension(t);
    StructuralInvariants {
        dim: t.dim(),
        derived_dim,
        center_dim: center_basis(t).len(),
        is_abelian: derived_dim == 0,
        is_two_step: is_two_step(t),
    }
}

/// An explicit table of nonzero brackets `[b_i, b_j]`, `i < j`.
///
/// Serializes as
/// `{"dim": d, "basis": [...], "brackets": {"i,j": {"k": "coeff", ...}, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    field: Field,
    basis: Vec<String>,
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl StructureConstants {
    pub fn from_table<T: StructureTable + ?Sized>(t: &T, basis: Vec<String>) -> StructureConstants {
        assert_eq!(basis.len(), t.dim(), "one name per basis vector");
        let d = t.dim();
        let mut brackets = BTreeMap::new();
        for i in 0..d {
            for j in i + 1..d {
                let entry: BTreeMap<usize, Scalar> = t
                    .basis_bracket(i, j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !entry.is_empty() {
                    brackets.insert((i, j), entry);
                }
            }
        }
        StructureConstants {
            field: t.field(),
            basis,
            brackets,
        }
    }

    /// Builds a table directly; `brackets` lists `[b_i, b_j]` for `i < j`.
    pub fn new(
        field: Field,
        basis: Vec<String>,
        brackets: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
    ) -> Result<StructureConstants> {
        let d = basis.len();
        for (&(i, j), entry) in &brackets {
            if i >= j || j >= d {
                return Err(Error::InvalidValue(format!("bracket key ({i}, {j})")));
            }
            if entry.keys().any(|&k| k >= d) {
                return Err(Error::InvalidValue(format!(
                    "bracket ({i}, {j}) leaves the basis"
                )));
            }
            if entry.values().any(|c| !field.contains(c)) {
                return Err(Error::FieldMismatch);
            }
        }
        let brackets = brackets
            .into_iter()
            .map(|(k, e)| (k, e.into_iter().filter(|(_, c)| !c.is_zero()).collect()))
            .filter(|(_, e): &(_, BTreeMap<usize, Scalar>)| !e.is_empty())
            .collect();
        Ok(StructureConstants {
            field,
            basis,
            brackets,
        })
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> {
        &self.brackets
    }

    pub fn to_json(&self) -> Value {
        let mut brackets = Map::new();
        for (&(i, j), entry) in &self.brackets {
            let coeffs: Map<String, Value> = entry
                .iter()
                .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
                .collect();
            brackets.insert(format!("{i},{j}"), Value::Object(coeffs));
        }
        let mut doc = Map::new();
        doc.insert("dim".into(), Value::from(self.basis.len()));
        doc.insert(
            "basis".into(),
            Value::Array(self.basis.iter().cloned().map(Value::String).collect()),
        );
        doc.insert("brackets".into(), Value::Object(brackets));
        Value::Object(doc)
    }

    /// Reads the JSON document back; scalars are interpreted in `field`.
    pub fn from_json(value: &Value, field: Field) -> Result<StructureConstants> {
        let dim = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing integer field \"dim\"".into()))?
            as usize;
        let basis: Vec<String> = match value.get("basis").and_then(Value::as_array) {
            Some(names) => names
                .iter()
                .map(|v| v.as_str().map(str::to_string))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Json("basis names must be strings".into()))?,
            None => (0..dim).map(|k| format!("b{k}")).collect(),
        };
        if basis.len() != dim {
            return Err(Error::Json(format!(
                "{} basis names for dim {dim}",
                basis.len()
            )));
        }
        let table = value
            .get("brackets")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Json("missing object field \"brackets\"".into()))?;
        let mut brackets = BTreeMap::new();
        for (key, entry) in table {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Json(format!("bracket key {key:?} is not \"i,j\"")))?;
            let entry = entry
                .as_object()
                .ok_or_else(|| Error::Json(format!("bracket {key:?} is not an object")))?;
            let mut coeffs = BTreeMap::new();
            for (k, c) in entry {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::Json(format!("basis index {k:?} in bracket {key:?}")))?;
                coeffs.insert(k, scalar_from_json(c, field)?);
            }
            brackets.insert((i, j), coeffs);
        }
        StructureConstants::new(field, basis, brackets)
    }
}

impl StructureTable for StructureConstants {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        let (key, sign) = if i < j {
            ((i, j), false)
        } else {
            ((j, i), true)
        };
        if let Some(entry) = self.brackets.get(&key) {
            for (&k, c) in entry {
                out[k] = if sign { -c } else { c.clone() };
            }
        }
        out
    }
}

/// Accepts scalars as strings (`"1/2"`) or JSON integers.
pub fn scalar_from_json(value: &Value, field: Field) -> Result<Scalar> {
    match value {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => field.parse(&n.to_string()),
        other => Err(Error::Json(format!("scalar expected, found {other}"))),
    }
}

pub fn scalars_to_json(values: &[Scalar]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|s| Value::String(s.to_string()))
            .collect(),
    )
}

pub fn scalars_from_json(value: &Value, field: Field) -> Result<Vec<Scalar>> {
    value
        .as_array()
        .ok_or_else(|| Error::Json(format!("array of scalars expected, found {value}")))?
        .iter()
        .map(|v| scalar_from_json(v, field))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(g: Graph) -> GraphLieAlgebra {
        GraphLieAlgebra::new(g, Field::rationals())
    }

    #[test]
    fn heisenberg_from_k2() {
        let a = alg(Graph::complete(2));
        assert_eq!(a.dim(), 3);
        let e01 = a.edge(0, 1).unwrap();
        assert_eq!(a.bracket(&a.vertex(0), &a.vertex(1)).unwrap(), e01);
        assert_eq!(a.bracket(&a.vertex(1), &a.vertex(0)).unwrap(), -&e01);
        assert_eq!(a.basis_names(), vec!["v0", "v1", "e0_1"]);
    }

    #[test]
    fn path_brackets() {
        let a = GraphLieAlgebra::new(Graph::path(3), Field::prime(3));
        assert_eq!(a.dim(), 5);
        assert!(a.bracket(&a.vertex(0), &a.vertex(2)).unwrap().is_zero());

        let q = alg(Graph::path(3));
        let x = &q.vertex(0) + &q.vertex(2);
        let expected = &q.edge(0, 1).unwrap() - &q.edge(1, 2).unwrap();
        assert_eq!(q.bracket(&x, &q.vertex(1)).unwrap(), expected);
    }

    #[test]
    fn bracket_rejects_foreign_elements() {
        let a = alg(Graph::complete(2));
        let b = alg(Graph::path(3));
        assert!(a.bracket(&a.vertex(0), &b.vertex(0)).is_err());
        let f3 = GraphLieAlgebra::new(Graph::complete(2), Field::prime(3));
        assert_eq!(
            a.bracket(&a.vertex(0), &f3.vertex(1)),
            Err(Error::FieldMismatch)
        );
        assert!(a.element(vec![Field::rationals().one()]).is_err());
    }

    #[test]
    fn invariants_of_small_algebras() {
        let k3 = alg(Graph::complete(3)).structural_invariants();
        assert_eq!(
            k3,
            StructuralInvariants {
                dim: 6,
                derived_dim: 3,
                center_dim: 3,
                is_abelian: false,
                is_two_step: true
            }
        );
        let flat = alg(Graph::empty(6)).structural_invariants();
        assert_eq!(
            flat,
            StructuralInvariants {
                dim: 6,
                derived_dim: 0,
                center_dim: 6,
                is_abelian: true,
                is_two_step: true
            }
        );
        let k2_plus =
            alg(Graph::complete(2).disjoint_union(&Graph::empty(3))).structural_invariants();
        assert_eq!(
            (k2_plus.dim, k2_plus.derived_dim, k2_plus.center_dim),
            (6, 1, 4)
        );

        let zero = alg(Graph::empty(0)).structural_invariants();
        assert_eq!((zero.dim, zero.derived_dim, zero.center_dim), (0, 0, 0));
        assert!(zero.is_abelian);
    }

    #[test]
    fn structure_constant_tables() {
        let k2 = alg(Graph::complete(2)).export_structure_constants();
        assert_eq!(
            k2.to_json().to_string(),
            r#"{"dim":3,"basis":["v0","v1","e0_1"],"brackets":{"0,1":{"2":"1"}}}"#
        );
        let p3 = alg(Graph::path(3)).export_structure_constants();
        let keys: Vec<_> = p3.brackets().keys().copied().collect();
        assert_eq!(keys, vec![(0, 1), (1, 2)]);
        assert_eq!(p3.brackets()[&(0, 1)].keys().collect::<Vec<_>>(), vec![&3]);
        assert_eq!(p3.brackets()[&(1, 2)].keys().collect::<Vec<_>>(), vec![&4]);
        assert!(alg(Graph::empty(2))
            .export_structure_constants()
            .brackets()
            .is_empty());
    }

    #[test]
    fn structure_constants_round_trip() {
        let q = Field::rationals();
        for g in crate::graph::enumerate_graphs(4).unwrap() {
            let a = GraphLieAlgebra::new(g, q);
            let doc = a.export_structure_constants().to_json();
            let back = StructureConstants::from_json(&doc, q).unwrap();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    assert_eq!(back.basis_bracket(i, j), a.basis_bracket(i, j));
                }
            }
        }
    }

    #[test]
    fn structure_constant_json_errors() {
        let q = Field::rationals();
        let bad = [
            r#"{"basis": [], "brackets": {}}"#,
            r#"{"dim": 2, "brackets": {"1,0": {"0": "1"}}}"#,
            r#"{"dim": 2, "brackets": {"0,1": {"5": "1"}}}"#,
            r#"{"dim": 2, "brackets": {"01": {"0": "1"}}}"#,
            r#"{"dim": 2, "brackets": {"0,1": {"0": 1.5}}}"#,
            r#"{"dim": 2, "basis": ["a"], "brackets": {}}"#,
        ];
        for doc in bad {
            let v: Value = serde_json::from_str(doc).unwrap();
            assert!(StructureConstants::from_json(&v, q).is_err(), "{doc}");
        }
    }

    #[test]
    fn jacobi_on_every_basis_triple() {
        for n in 0..=4 {
            for g in crate::graph::enumerate_graphs(n).unwrap() {
                assert!(jacobi_holds(&alg(g)));
            }
        }
    }

    #[test]
    fn jacobi_detects_a_broken_table() {
        // [b0,b1] = b0, [b0,b2] = b0, [b1,b2] = b1: the Jacobi sum on (0,1,2) is b0
        let q = Field::rationals();
        let mut br = BTreeMap::new();
        br.insert((0, 1), BTreeMap::from([(0, q.one())]));
        br.insert((0, 2), BTreeMap::from([(0, q.one())]));
        br.insert((1, 2), BTreeMap::from([(1, q.one())]));
        let t = StructureConstants::new(q, vec!["a".into(), "b".into(), "c".into()], br).unwrap();
        assert!(!jacobi_holds(&t));
        assert!(!is_two_step(&t));
    }

    proptest! {
        #[test]
        fn bracket_laws(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for f in [Field::rationals(), Field::prime(3), Field::prime(5)] {
                let a = GraphLieAlgebra::new(Graph::cycle(4).disjoint_union(&Graph::complete(2)), f);
                let (x, y, z) = (a.random_element(&mut rng), a.random_element(&mut rng), a.random_element(&mut rng));
                let (s, t) = (f.random(&mut rng), f.random(&mut rng));
                prop_assert_eq!(a.bracket(&x, &y).unwrap(), -&a.bracket(&y, &x).unwrap());
                let lhs = a.bracket(&(&x.scale(&s) + &y.scale(&t)), &z).unwrap();
                let rhs = &a.bracket(&x, &z).unwrap().scale(&s) + &a.bracket(&y, &z).unwrap().scale(&t);
                prop_assert_eq!(lhs, rhs);
                prop_assert!(a.bracket(&x, &a.bracket(&y, &z).unwrap()).unwrap().is_zero());
                // the generic bilinear extension agrees with the direct formula
                prop_assert_eq!(a.bracket_coords(x.coeffs(), y.coeffs()), a.bracket(&x, &y).unwrap().into_coeffs());
            }
        }
    }
}
