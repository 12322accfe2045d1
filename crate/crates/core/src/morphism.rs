//! Linear maps between graph Lie algebras.
//!
//! A [`GradedMap`] acts on the V-part by a matrix `A` and on the Z-part by a
//! matrix `B`. Maps built from `A` alone ([`GradedMap::from_v_map`]) take
//! `B` to be the induced action on wedges modulo `W'`, which makes them
//! bracket-compatible on edges; they are Lie morphisms exactly when the
//! wedges of non-adjacent vertices land in `W'` as well.
//!
//! A [`LinearMap`] is an arbitrary block matrix on the full basis, used for
//! non-graded automorphisms such as central shears.

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::graph::{Graph, VertexPermutation};
use crate::liealg::{
    scalars_from_json, scalars_to_json, GraphLieAlgebra, LieElement, StructureTable,
};
use crate::linalg::Matrix;

/// True iff `F[b_i, b_j] = [F b_i, F b_j]` for every pair of basis vectors.
///
/// `f` is the matrix of the map in the two bases (`target.dim() x source.dim()`);
/// a shape mismatch is reported as `false`.
pub fn is_lie_morphism<S, T>(source: &S, target: &T, f: &Matrix) -> bool
where
    S: StructureTable + ?Sized,
    T: StructureTable + ?Sized,
{
    if f.rows() != target.dim() || f.cols() != source.dim() || f.field() != source.field() {
        return false;
    }
    let images: Vec<Vec<Scalar>> = (0..f.cols()).map(|j| f.column(j)).collect();
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = f
                .mul_vec(&source.basis_bracket(i, j))
                .expect("shape checked");
            let rhs = target.bracket_coords(&images[i], &images[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    source: GraphLieAlgebra,
    target: GraphLieAlgebra,
    a: Matrix,
    b: Matrix,
}

impl GradedMap {
    /// A map with explicitly given blocks. No compatibility between `a` and `b` is assumed.
    pub fn new(
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
        a: Matrix,
        b: Matrix,
    ) -> Result<GradedMap> {
        let field = source.field();
        if target.field() != field || a.field() != field || b.field() != field {
            return Err(Error::FieldMismatch);
        }
        if (a.rows(), a.cols()) != (target.v_dim(), source.v_dim())
            || (b.rows(), b.cols()) != (target.z_dim(), source.z_dim())
        {
            return Err(Error::DimensionMismatch(format!(
                "blocks {}x{} and {}x{} for a map from (|S|={}, |E|={}) to (|S|={}, |E|={})",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                source.v_dim(),
                source.z_dim(),
                target.v_dim(),
                target.z_dim()
            )));
        }
        Ok(GradedMap {
            source,
            target,
            a,
            b,
        })
    }

    /// Extends a V-part matrix by its induced action on edge coordinates:
    /// column `e_{ij}` of `B` is the Z'-projection of `(A v_i) ∧ (A v_j)`.
    pub fn from_v_map(
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
        a: Matrix,
    ) -> Result<GradedMap> {
        if (a.rows(), a.cols()) != (target.v_dim(), source.v_dim()) {
            return Err(Error::DimensionMismatch(format!(
                "V-matrix is {}x{}, expected {}x{}",
                a.rows(),
                a.cols(),
                target.v_dim(),
                source.v_dim()
            )));
        }
        let columns: Vec<Vec<Scalar>> = source
            .graph()
            .edges()
            .iter()
            .map(|&(i, j)| target.wedge_mod_w(&a.column(i), &a.column(j)))
            .collect();
        let b = Matrix::from_columns(source.field(), target.z_dim(), &columns)?;
        GradedMap::new(source, target, a, b)
    }

    pub fn identity(algebra: &GraphLieAlgebra) -> GradedMap {
        let f = algebra.field();
        GradedMap {
            source: algebra.clone(),
            target: algebra.clone(),
            a: Matrix::identity(f, algebra.v_dim()),
            b: Matrix::identity(f, algebra.z_dim()),
        }
    }

    pub fn source(&self) -> &GraphLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &GraphLieAlgebra {
        &self.target
    }

    /// The V-part block.
    pub fn a(&self) -> &Matrix {
        &self.a
    }

    /// The Z-part block.
    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn full_matrix(&self) -> Matrix {
        self.a.block_diagonal(&self.b)
    }

    pub fn to_linear_map(&self) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.full_matrix(),
        }
    }

    pub fn is_lie_morphism(&self) -> bool {
        is_lie_morphism(&self.source, &self.target, &self.full_matrix())
    }

    pub fn is_invertible(&self) -> bool {
        self.a.is_invertible() && self.b.is_invertible()
    }

    /// True iff every source edge satisfies the compatibility condition
    /// `B e_{ij} = (A v_i) ∧ (A v_j) mod W'`.
    pub fn is_compatible(&self) -> bool {
        self.source
            .graph()
            .edges()
            .iter()
            .enumerate()
            .all(|(e, &(i, j))| {
                self.b.column(e)
                    == self
                        .target
                        .wedge_mod_w(&self.a.column(i), &self.a.column(j))
            })
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        let v = self.a.mul_vec(self.source.v_part(x))?;
        let z = self.b.mul_vec(self.source.z_part(x))?;
        self.target.element_from_parts(v, z)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch(
                "the inner map's target is not the outer map's source".into(),
            ));
        }
        GradedMap::new(
            other.source.clone(),
            self.target.clone(),
            self.a.mul(&other.a)?,
            self.b.mul(&other.b)?,
        )
    }

    pub fn invert(&self) -> Result<GradedMap> {
        GradedMap::new(
            self.target.clone(),
            self.source.clone(),
            self.a.inverse()?,
            self.b.inverse()?,
        )
    }

    /// `{"A": [[...]], "B": [[...]], "field": "..."}`
    pub fn to_json(&self) -> Value {
        json!({
            "A": matrix_to_json(&self.a),
            "B": matrix_to_json(&self.b),
            "field": self.field().to_string(),
        })
    }

    pub fn from_json(
        value: &Value,
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
    ) -> Result<GradedMap> {
        let field = source.field();
        if let Some(declared) = value.get("field").and_then(Value::as_str) {
            if declared.parse::<crate::field::FieldSpec>()? != field.spec() {
                return Err(Error::FieldMismatch);
            }
        }
        let block = |key: &str, cols: usize| -> Result<Matrix> {
            let v = value
                .get(key)
                .ok_or_else(|| Error::Json(format!("missing field {key:?}")))?;
            matrix_from_json(v, field, cols)
        };
        let a = block("A", source.v_dim())?;
        let b = block("B", source.z_dim())?;
        GradedMap::new(source, target, a, b)
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| scalars_to_json(r)).collect())
}

/// Reads a row-major array of rows; `cols` shapes a matrix with no rows.
pub fn matrix_from_json(value: &Value, field: Field, cols: usize) -> Result<Matrix> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?
        .iter()
        .map(|r| scalars_from_json(r, field))
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(cols, Vec::len);
    Matrix::from_rows(field, cols, rows)
}

/// The Lie isomorphism `f_*` induced by a graph isomorphism `f: g -> g'`.
///
/// `A` permutes vertices; `B` sends `e_{ij}` to `±e_{f(i) f(j)}`, negative when
/// `f` reverses the order of the endpoints.
pub fn functor_pushforward(
    f: &VertexPermutation,
    g: &Graph,
    g_prime: &Graph,
    field: Field,
) -> Result<GradedMap> {
    if !f.is_isomorphism(g, g_prime) {
        return Err(Error::NotGraphIsomorphism(format!(
            "{:?} does not carry {g} onto {g_prime}",
            f.images()
        )));
    }
    let source = GraphLieAlgebra::new(g.clone(), field);
    let target = GraphLieAlgebra::new(g_prime.clone(), field);
    let mut a = Matrix::zeros(field, g.n(), g.n());
    for i in 0..g.n() {
        a[(f.apply(i), i)] = field.one();
    }
    let m = g.edge_count();
    let mut b = Matrix::zeros(field, m, m);
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let (fi, fj) = (f.apply(i), f.apply(j));
        let target_edge = g_prime.edge_index(fi, fj).expect("edge-preserving");
        b[(target_edge, e)] = if fi < fj { field.one() } else { -&field.one() };
    }
    GradedMap::new(source, target, a, b)
}

/// Graded extension of `a` from `source` to `target`, when it exists.
///
/// Present iff `a` is invertible, the edge counts agree, and for every
/// non-edge `{i, j}` of the source the wedge `(A v_i) ∧ (A v_j)` has zero
/// coordinates on the target's edges (it lies in `W'`).
pub fn extend_graded(
    a: &Matrix,
    source: &GraphLieAlgebra,
    target: &GraphLieAlgebra,
) -> Option<GradedMap> {
    if a.field() != source.field()
        || source.field() != target.field()
        || (a.rows(), a.cols()) != (target.v_dim(), source.v_dim())
        || source.z_dim() != target.z_dim()
        || !a.is_invertible()
    {
        return None;
    }
    let columns: Vec<Vec<Scalar>> = (0..a.cols()).map(|j| a.column(j)).collect();
    let stable = source.graph().non_edges().iter().all(|&(i, j)| {
        target
            .wedge_mod_w(&columns[i], &columns[j])
            .iter()
            .all(Scalar::is_zero)
    });
    if !stable {
        return None;
    }
    GradedMap::from_v_map(source.clone(), target.clone(), a.clone()).ok()
}

/// Membership test for the group of V-automorphisms that extend to Lie automorphisms.
pub fn extend_to_automorphism(a: &Matrix, algebra: &GraphLieAlgebra) -> Option<GradedMap> {
    extend_graded(a, algebra, algebra)
}

/// A vertex scaling `v_i ↦ d_i v_i` with every `d_i` nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMap {
    algebra: GraphLieAlgebra,
    d: Vec<Scalar>,
}

impl DiagonalMap {
    pub fn new(algebra: GraphLieAlgebra, d: Vec<Scalar>) -> Result<DiagonalMap> {
        if d.len() != algebra.v_dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} diagonal entries for {} vertices",
                d.len(),
                algebra.v_dim()
            )));
        }
        if d.iter().any(|s| !algebra.field().contains(s)) {
            return Err(Error::FieldMismatch);
        }
        if let Some(k) = d.iter().position(Scalar::is_zero) {
            return Err(Error::ZeroDiagonal(k));
        }
        Ok(DiagonalMap { algebra, d })
    }

    pub fn random<R: Rng + ?Sized>(algebra: &GraphLieAlgebra, rng: &mut R) -> DiagonalMap {
        let d = (0..algebra.v_dim())
            .map(|_| algebra.field().random_nonzero(rng))
            .collect();
        DiagonalMap {
            algebra: algebra.clone(),
            d,
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.d
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::diagonal(self.algebra.field(), &self.d)
    }
}

/// The graded automorphism of a vertex scaling: `B` is diagonal with `d_i d_j` on edge `{i, j}`.
pub fn diagonal_extend(d: &DiagonalMap) -> GradedMap {
    let alg = &d.algebra;
    let b_entries: Vec<Scalar> = alg
        .graph()
        .edges()
        .iter()
        .map(|&(i, j)| &d.d[i] * &d.d[j])
        .collect();
    GradedMap {
        source: alg.clone(),
        target: alg.clone(),
        a: d.matrix(),
        b: Matrix::diagonal(alg.field(), &b_entries),
    }
}

/// A linear map on the full basis, `target.dim() x source.dim()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    source: GraphLieAlgebra,
    target: GraphLieAlgebra,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
        matrix: Matrix,
    ) -> Result<LinearMap> {
        if matrix.field() != source.field() || target.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        if (matrix.rows(), matrix.cols()) != (target.dim(), source.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(LinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &GraphLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &GraphLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_lie_morphism(&self) -> bool {
        is_lie_morphism(&self.source, &self.target, &self.matrix)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        self.target.element(self.matrix.mul_vec(x.coeffs())?)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch(
                "the inner map's target is not the outer map's source".into(),
            ));
        }
        LinearMap::new(
            other.source.clone(),
            self.target.clone(),
            self.matrix.mul(&other.matrix)?,
        )
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        LinearMap::new(
            self.target.clone(),
            self.source.clone(),
            self.matrix.inverse()?,
        )
    }

    /// The graded map with the same diagonal blocks, if the off-diagonal blocks vanish.
    pub fn as_graded(&self) -> Option<GradedMap> {
        let (n, n2) = (self.source.v_dim(), self.target.v_dim());
        let (d, d2) = (self.source.dim(), self.target.dim());
        let off1 = self.matrix.block(0, n2, n, d);
        let off2 = self.matrix.block(n2, d2, 0, n);
        if !off1.is_zero() || !off2.is_zero() {
            return None;
        }
        GradedMap::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.block(0, n2, 0, n),
            self.matrix.block(n2, d2, n, d),
        )
        .ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "F": matrix_to_json(&self.matrix),
            "field": self.source.field().to_string(),
        })
    }

    pub fn from_json(
        value: &Value,
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
    ) -> Result<LinearMap> {
        let field = source.field();
        if let Some(declared) = value.get("field").and_then(Value::as_str) {
            if declared.parse::<crate::field::FieldSpec>()? != field.spec() {
                return Err(Error::FieldMismatch);
            }
        }
        let f = value
            .get("F")
            .ok_or_else(|| Error::Json("missing field \"F\"".into()))?;
        LinearMap::new(
            source.clone(),
            target,
            matrix_from_json(f, field, source.dim())?,
        )
    }
}

/// The central shear `v + z ↦ v + φ(v) + z` for `φ: V → Z` given as an `|E| x |S|` matrix.
pub fn central_shear(algebra: &GraphLieAlgebra, phi: &Matrix) -> Result<LinearMap> {
    let (n, m) = (algebra.v_dim(), algebra.z_dim());
    if (phi.rows(), phi.cols()) != (m, n) {
        return Err(Error::DimensionMismatch(format!(
            "shear block is {}x{}, expected {m}x{n}",
            phi.rows(),
            phi.cols()
        )));
    }
    let mut f = Matrix::identity(algebra.field(), n + m);
    for i in 0..m {
        for j in 0..n {
            f[(n + i, j)] = phi[(i, j)].clone();
        }
    }
    LinearMap::new(algebra.clone(), algebra.clone(), f)
}

pub fn random_central_shear<R: Rng + ?Sized>(algebra: &GraphLieAlgebra, rng: &mut R) -> LinearMap {
    let f = algebra.field();
    let rows = (0..algebra.z_dim())
        .map(|_| (0..algebra.v_dim()).map(|_| f.random(rng)).collect())
        .collect();
    let phi = Matrix::from_rows(f, algebra.v_dim(), rows).expect("shape");
    central_shear(algebra, &phi).expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphisms, enumerate_graphs};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::rationals()
    }

    fn perm(images: &[usize]) -> VertexPermutation {
        VertexPermutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn pushforward_on_k2() {
        let k2 = Graph::complete(2);
        let id = functor_pushforward(&perm(&[0, 1]), &k2, &k2, q()).unwrap();
        assert_eq!(
            id,
            GradedMap::identity(&GraphLieAlgebra::new(k2.clone(), q()))
        );

        let swap = functor_pushforward(&perm(&[1, 0]), &k2, &k2, q()).unwrap();
        assert_eq!(swap.a(), &Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]));
        assert_eq!(swap.b(), &Matrix::from_i64(q(), &[&[-1]]));
        assert!(swap.is_lie_morphism());
    }

    #[test]
    fn pushforward_of_path_reversal() {
        let p3 = Graph::path(3);
        let rev = functor_pushforward(&perm(&[2, 1, 0]), &p3, &p3, q()).unwrap();
        // e01 -> v2∧v1 = -e12, e12 -> v1∧v0 = -e01
        assert_eq!(rev.b(), &Matrix::from_i64(q(), &[&[0, -1], &[-1, 0]]));
        assert!(rev.is_lie_morphism());
        assert!(rev.is_compatible());
    }

    #[test]
    fn pushforward_rejects_non_isomorphisms() {
        let p3 = Graph::path(3);
        assert!(matches!(
            functor_pushforward(&perm(&[1, 0, 2]), &p3, &p3, q()),
            Err(Error::NotGraphIsomorphism(_))
        ));
    }

    #[test]
    fn morphism_checks() {
        let k2 = GraphLieAlgebra::new(Graph::complete(2), q());
        let doubled = GradedMap::new(
            k2.clone(),
            k2.clone(),
            Matrix::identity(q(), 2),
            Matrix::from_i64(q(), &[&[2]]),
        )
        .unwrap();
        assert!(!doubled.is_lie_morphism());
        assert!(!doubled.is_compatible());

        let zero = GradedMap::new(
            k2.clone(),
            k2.clone(),
            Matrix::zeros(q(), 2, 2),
            Matrix::zeros(q(), 1, 1),
        )
        .unwrap();
        assert!(zero.is_lie_morphism());
        assert!(!zero.is_invertible());
        assert!(!is_lie_morphism(&k2, &k2, &Matrix::identity(q(), 2)));
    }

    #[test]
    fn automorphism_membership() {
        let p3 = GraphLieAlgebra::new(Graph::path(3), q());
        assert!(extend_to_automorphism(&Matrix::identity(q(), 3), &p3).is_some());
        // 0 <-> 1 sends the non-edge {0,2} to v1 ∧ v2
        let swap01 = Matrix::from_i64(q(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(extend_to_automorphism(&swap01, &p3).is_none());
        assert!(extend_to_automorphism(&Matrix::zeros(q(), 3, 3), &p3).is_none());
        assert!(extend_to_automorphism(&Matrix::identity(q(), 2), &p3).is_none());

        let k2 = GraphLieAlgebra::new(Graph::complete(2), q());
        let diag = Matrix::from_i64(q(), &[&[2, 0], &[0, 3]]);
        let ext = extend_to_automorphism(&diag, &k2).unwrap();
        assert_eq!(ext.b(), &Matrix::from_i64(q(), &[&[6]]));
    }

    #[test]
    fn diagonal_extensions() {
        let k2 = GraphLieAlgebra::new(Graph::complete(2), q());
        let one = DiagonalMap::new(k2.clone(), vec![q().one(), q().one()]).unwrap();
        assert_eq!(diagonal_extend(&one), GradedMap::identity(&k2));
        let d = DiagonalMap::new(k2.clone(), vec![q().from_i64(2), q().from_i64(3)]).unwrap();
        assert_eq!(diagonal_extend(&d).b(), &Matrix::from_i64(q(), &[&[6]]));

        let p3 = GraphLieAlgebra::new(Graph::path(3), q());
        let d = DiagonalMap::new(p3.clone(), [1, 2, 3].map(|x| q().from_i64(x)).to_vec()).unwrap();
        let ext = diagonal_extend(&d);
        assert_eq!(ext.b(), &Matrix::from_i64(q(), &[&[2, 0], &[0, 6]]));
        assert!(ext.is_lie_morphism());

        assert_eq!(
            DiagonalMap::new(k2, vec![q().one(), q().zero()]),
            Err(Error::ZeroDiagonal(1))
        );
    }

    #[test]
    fn composition_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let alg = GraphLieAlgebra::new(Graph::path(3), q());
        let d1 = DiagonalMap::random(&alg, &mut rng);
        let d2 = DiagonalMap::random(&alg, &mut rng);
        let m = diagonal_extend(&d1);
        assert_eq!(
            m.compose(&m.invert().unwrap()).unwrap(),
            GradedMap::identity(&alg)
        );

        let product: Vec<Scalar> = d1
            .entries()
            .iter()
            .zip(d2.entries())
            .map(|(a, b)| a * b)
            .collect();
        let expected = diagonal_extend(&DiagonalMap::new(alg.clone(), product).unwrap());
        assert_eq!(
            diagonal_extend(&d1).compose(&diagonal_extend(&d2)).unwrap(),
            expected
        );

        let singular = GradedMap::new(
            alg.clone(),
            alg.clone(),
            Matrix::zeros(q(), 3, 3),
            Matrix::zeros(q(), 2, 2),
        )
        .unwrap();
        assert_eq!(singular.invert(), Err(Error::Singular));
    }

    #[test]
    fn functoriality_on_path_automorphisms() {
        let p3 = Graph::path(3);
        let auts = automorphisms(&p3);
        assert_eq!(auts.len(), 2);
        for f in &auts {
            for h in &auts {
                let lhs = functor_pushforward(&f.compose(h), &p3, &p3, q()).unwrap();
                let fs = functor_pushforward(f, &p3, &p3, q()).unwrap();
                let hs = functor_pushforward(h, &p3, &p3, q()).unwrap();
                assert_eq!(lhs, fs.compose(&hs).unwrap());
            }
        }
    }

    #[test]
    fn random_members_form_a_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [q(), Field::prime(3)] {
            for g in enumerate_graphs(4).unwrap() {
                let alg = GraphLieAlgebra::new(g.clone(), f);
                let auts = automorphisms(&g);
                let mut member = || {
                    let sigma = &auts[rng.gen_range(0..auts.len())];
                    let push = functor_pushforward(sigma, &g, &g, f).unwrap();
                    diagonal_extend(&DiagonalMap::random(&alg, &mut rng))
                        .compose(&push)
                        .unwrap()
                };
                let (x, y) = (member(), member());
                let xy = x.compose(&y).unwrap();
                assert!(extend_to_automorphism(xy.a(), &alg).is_some());
                assert_eq!(extend_to_automorphism(xy.a(), &alg).unwrap(), xy);
                let inv = x.invert().unwrap();
                assert!(extend_to_automorphism(inv.a(), &alg).is_some());
                assert!(inv.is_lie_morphism());
            }
        }
    }

    #[test]
    fn shears_are_non_graded_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let alg = GraphLieAlgebra::new(Graph::cycle(4), q());
        let s = random_central_shear(&alg, &mut rng);
        assert!(s.is_lie_morphism());
        assert!(s.is_invertible());
        let inv = s.inverse().unwrap();
        assert!(inv.is_lie_morphism());
        let phi = Matrix::from_rows(
            q(),
            4,
            vec![vec![q().one(), q().zero(), q().zero(), q().zero()]; 4],
        )
        .unwrap();
        let s = central_shear(&alg, &phi).unwrap();
        assert!(s.as_graded().is_none());
        assert!(central_shear(&alg, &Matrix::zeros(q(), 2, 2)).is_err());
        let id = central_shear(&alg, &Matrix::zeros(q(), 4, 4)).unwrap();
        assert_eq!(id.as_graded().unwrap(), GradedMap::identity(&alg));
    }

    #[test]
    fn graded_map_json_round_trip() {
        let p3 = Graph::path(3);
        let m = functor_pushforward(&perm(&[2, 1, 0]), &p3, &p3, Field::prime(5)).unwrap();
        let doc = m.to_json();
        assert_eq!(doc["field"], "fp:5");
        assert_eq!(doc["B"][0][1], "4");
        let back = GradedMap::from_json(&doc, m.source().clone(), m.target().clone()).unwrap();
        assert_eq!(back, m);
        let other = GraphLieAlgebra::new(p3, q());
        assert!(GradedMap::from_json(&doc, other.clone(), other).is_err());
    }
}
