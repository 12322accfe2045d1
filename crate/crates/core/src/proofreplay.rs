//! Replaying the finite steps of the isomorphism argument on a concrete map.
//!
//! Given a Lie isomorphism `F: n(S, E) -> n(S', E')`, possibly non-graded,
//! let `π` be the projection of `n'` onto its V-part along the Z-part. The
//! replay computes `S'' = { π(F(α)) : α ∈ S }` and checks that
//!
//! * `S''` is a basis of `V'`,
//! * `|S| = |S'|`, `|E| = |E'|` and `|E| = dim [n', n']`,
//! * `[π F α, π F β] ≠ 0` exactly when `αβ ∈ E`, so the induced graph on
//!   `S''` is the source graph under `α ↦ π(F(α))`,
//! * a scaling diagonal in the basis `S''` extends to an automorphism of `n'`.

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::graph::Graph;
use crate::liealg::{derived_dimension, scalars_to_json, GraphLieAlgebra, StructureTable};
use crate::linalg::Matrix;
use crate::morphism::{extend_to_automorphism, LinearMap};

/// A verified Lie isomorphism to replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayInput {
    map: LinearMap,
}

impl ReplayInput {
    pub fn new(map: LinearMap) -> Result<ReplayInput> {
        if !map.is_lie_morphism() {
            return Err(Error::NotLieIsomorphism(
                "the map does not preserve brackets".into(),
            ));
        }
        if !map.is_invertible() {
            return Err(Error::NotLieIsomorphism("the map is not invertible".into()));
        }
        Ok(ReplayInput { map })
    }

    pub fn source(&self) -> &GraphLieAlgebra {
        self.map.source()
    }

    pub fn target(&self) -> &GraphLieAlgebra {
        self.map.target()
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// Reads `{"source": graph, "target": graph, "F": [[...]], "field": "..."}`.
    ///
    /// `field` is required here; it fixes how the matrix entries are read.
    pub fn from_json(value: &Value) -> Result<ReplayInput> {
        let get = |key: &str| {
            value
                .get(key)
                .ok_or_else(|| Error::Json(format!("replay input needs field {key:?}")))
        };
        let field = Field::create(
            get("field")?
                .as_str()
                .ok_or_else(|| Error::Json("\"field\" must be a string".into()))?
                .parse()?,
        )?;
        let source = GraphLieAlgebra::new(Graph::from_json(get("source")?)?, field);
        let target = GraphLieAlgebra::new(Graph::from_json(get("target")?)?, field);
        ReplayInput::new(LinearMap::from_json(value, source, target)?)
    }

    pub fn to_json(&self) -> Value {
        let mut doc = self.map.to_json();
        doc["source"] = self.source().graph().to_json();
        doc["target"] = self.target().graph().to_json();
        doc
    }
}

/// `π(F(α))` for each source vertex `α`, and whether these form a basis of `V'`.
pub fn induced_vertex_set(r: &ReplayInput) -> (Vec<Vec<Scalar>>, bool) {
    let (n, n2) = (r.source().v_dim(), r.target().v_dim());
    let projected = r.map.matrix().block(0, n2, 0, n);
    let vectors = (0..n).map(|a| projected.column(a)).collect();
    let basis_ok = n == n2 && projected.rank() == n2;
    (vectors, basis_ok)
}

/// The graph on `S''` whose edges are the pairs with nonzero bracket in the target.
pub fn induced_graph(r: &ReplayInput, s2: &[Vec<Scalar>]) -> Graph {
    let target = r.target();
    let n = s2.len();
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let mut x = s2[a].clone();
            let mut y = s2[b].clone();
            x.resize(target.dim(), target.field().zero());
            y.resize(target.dim(), target.field().zero());
            target.bracket_coords(&x, &y).iter().any(|c| !c.is_zero())
        });
    Graph::new(n, edges).expect("pairs are distinct and in range")
}

/// Whether the map diagonal in the basis `S''` with entries `d` extends to an
/// automorphism of the target.
pub fn torus_membership(r: &ReplayInput, s2: &[Vec<Scalar>], d: &[Scalar]) -> Result<bool> {
    let target = r.target();
    let f = target.field();
    if d.len() != s2.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} diagonal entries for {} basis vectors",
            d.len(),
            s2.len()
        )));
    }
    if let Some(k) = d.iter().position(Scalar::is_zero) {
        return Err(Error::ZeroDiagonal(k));
    }
    let p = Matrix::from_columns(f, target.v_dim(), s2)?;
    let conjugated = p.mul(&Matrix::diagonal(f, d))?.mul(&p.inverse()?)?;
    Ok(extend_to_automorphism(&conjugated, target).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayReport {
    pub s_double_prime: Vec<Vec<Scalar>>,
    pub basis_ok: bool,
    pub dims_ok: bool,
    pub induced_graph: Option<Graph>,
    pub induced_iso_ok: bool,
    pub torus_diagonal: Vec<Scalar>,
    pub torus_ok: bool,
}

impl ReplayReport {
    pub fn all_ok(&self) -> bool {
        self.basis_ok && self.dims_ok && self.induced_iso_ok && self.torus_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "s_double_prime": self.s_double_prime.iter().map(|v| scalars_to_json(v)).collect::<Vec<_>>(),
            "basis_ok": self.basis_ok,
            "dims_ok": self.dims_ok,
            "induced_graph": self.induced_graph.as_ref().map(Graph::to_json),
            "induced_iso_ok": self.induced_iso_ok,
            "torus_diagonal": scalars_to_json(&self.torus_diagonal),
            "torus_ok": self.torus_ok,
        })
    }
}

/// Runs every check, testing torus membership with the scaling `d`.
pub fn replay(r: &ReplayInput, d: &[Scalar]) -> Result<ReplayReport> {
    let (s2, basis_ok) = induced_vertex_set(r);
    let (src, tgt) = (r.source(), r.target());
    let dims_ok = src.v_dim() == tgt.v_dim()
        && src.z_dim() == tgt.z_dim()
        && src.z_dim() == derived_dimension(tgt);
    let (induced, induced_iso_ok, torus_ok) = if basis_ok {
        let induced = induced_graph(r, &s2);
        let iso_ok = &induced == src.graph();
        let torus_ok = torus_membership(r, &s2, d)?;
        (Some(induced), iso_ok, torus_ok)
    } else {
        (None, false, false)
    };
    Ok(ReplayReport {
        s_double_prime: s2,
        basis_ok,
        dims_ok,
        induced_graph: induced,
        induced_iso_ok,
        torus_diagonal: d.to_vec(),
        torus_ok,
    })
}

/// [`replay`] with a random nonzero scaling.
pub fn replay_random<R: Rng + ?Sized>(r: &ReplayInput, rng: &mut R) -> Result<ReplayReport> {
    let f = r.source().field();
    let d: Vec<Scalar> = (0..r.source().v_dim())
        .map(|_| f.random_nonzero(rng))
        .collect();
    replay(r, &d)
}
