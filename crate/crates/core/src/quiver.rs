//! Representations of the linear quiver `1 -> 2 -> ... -> n` with a loop
//! `alpha` at `n` subject to `alpha^2 = 0`.
//!
//! Vertices are 1-based in the public API; `dims[v - 1]` is the dimension at
//! vertex `v` and `arrows[v - 1]` is the map `v -> v + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{check_prime, Matrix, SubspaceBasis};
use crate::label::{IndecLabel, Multiset};

/// Number of vertices and the field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraContext {
    n: usize,
    p: u32,
}

impl AlgebraContext {
    pub fn new(n: usize, p: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadVertexCount(n));
        }
        let p = check_prime(p)?;
        Ok(AlgebraContext { n, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

/// A finite-dimensional module, given by its structure matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    ctx: AlgebraContext,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
    loop_map: Matrix,
}

impl Representation {
    /// Assembles a representation, checking matrix shapes and fields but not
    /// the relation; see [`check_relation`].
    pub fn new(
        ctx: AlgebraContext,
        dims: Vec<usize>,
        arrows: Vec<Matrix>,
        loop_map: Matrix,
    ) -> Result<Self> {
        let n = ctx.n;
        if dims.len() != n {
            return Err(Error::Shape(format!("{} dimensions for {n} vertices", dims.len())));
        }
        if arrows.len() != n - 1 {
            return Err(Error::Shape(format!("{} arrows, expected {}", arrows.len(), n - 1)));
        }
        for (v, a) in arrows.iter().enumerate() {
            if (a.rows(), a.cols()) != (dims[v + 1], dims[v]) {
                return Err(Error::Shape(format!(
                    "arrow {} -> {} is {}x{}, expected {}x{}",
                    v + 1,
                    v + 2,
                    a.rows(),
                    a.cols(),
                    dims[v + 1],
                    dims[v]
                )));
            }
        }
        if (loop_map.rows(), loop_map.cols()) != (dims[n - 1], dims[n - 1]) {
            return Err(Error::Shape(format!(
                "loop is {}x{}, expected {}x{}",
                loop_map.rows(),
                loop_map.cols(),
                dims[n - 1],
                dims[n - 1]
            )));
        }
        if arrows.iter().chain([&loop_map]).any(|m| m.p() != ctx.p) {
            return Err(Error::ContextMismatch("matrix over the wrong field".into()));
        }
        Ok(Representation {
            ctx,
            dims,
            arrows,
            loop_map,
        })
    }

    /// Like [`Representation::new`] but also rejects `alpha^2 != 0`.
    pub fn validated(
        ctx: AlgebraContext,
        dims: Vec<usize>,
        arrows: Vec<Matrix>,
        loop_map: Matrix,
    ) -> Result<Self> {
        let r = Self::new(ctx, dims, arrows, loop_map)?;
        if !check_relation(&r) {
            return Err(Error::Relation);
        }
        Ok(r)
    }

    /// The isomorphic representation obtained by the change of basis `g_v`
    /// at each vertex: arrows become `g_{v+1} A_v g_v^{-1}`, the loop `g_n L g_n^{-1}`.
    pub fn change_basis(&self, g: &[Matrix]) -> Result<Representation> {
        let n = self.ctx.n;
        if g.len() != n {
            return Err(Error::Shape(format!("{} base changes for {n} vertices", g.len())));
        }
        let mut inv = Vec::with_capacity(n);
        for (v, gv) in g.iter().enumerate() {
            if (gv.rows(), gv.cols()) != (self.dims[v], self.dims[v]) || gv.p() != self.ctx.p {
                return Err(Error::Shape(format!("base change at vertex {} has the wrong shape", v + 1)));
            }
            inv.push(
                gv.inverse()
                    .ok_or_else(|| Error::Domain(format!("base change at vertex {} is singular", v + 1)))?,
            );
        }
        let arrows = (0..n - 1).map(|v| g[v + 1].mul(&self.arrows[v]).mul(&inv[v])).collect();
        let loop_map = g[n - 1].mul(&self.loop_map).mul(&inv[n - 1]);
        Representation::new(self.ctx, self.dims.clone(), arrows, loop_map)
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        let p = ctx.p;
        Representation {
            ctx,
            dims: vec![0; ctx.n],
            arrows: vec![Matrix::zeros(p, 0, 0); ctx.n - 1],
            loop_map: Matrix::zeros(p, 0, 0),
        }
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The map from vertex `v` to `v + 1` (1-based `v`).
    pub fn arrow(&self, v: usize) -> &Matrix {
        &self.arrows[v - 1]
    }

    pub fn arrows(&self) -> &[Matrix] {
        &self.arrows
    }

    pub fn loop_map(&self) -> &Matrix {
        &self.loop_map
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Parses the JSON representation-file schema and validates it.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: RepresentationFile =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        file.into_representation()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RepresentationFile::from(self)).expect("plain data serializes")
    }
}

/// On-disk form: `{ "p", "n", "dims", "arrows", "loop" }`, matrices row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub p: u64,
    pub n: usize,
    pub dims: Vec<usize>,
    pub arrows: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "loop")]
    pub loop_map: Vec<Vec<i64>>,
}

impl RepresentationFile {
    pub fn into_representation(self) -> Result<Representation> {
        let ctx = AlgebraContext::new(self.n, self.p)?;
        if self.dims.len() != self.n {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                self.dims.len(),
                self.n
            )));
        }
        if self.arrows.len() + 1 != self.n {
            return Err(Error::Shape(format!(
                "{} arrows, expected {}",
                self.arrows.len(),
                self.n - 1
            )));
        }
        let matrix = |rows: &[Vec<i64>], r: usize, c: usize, what: &str| -> Result<Matrix> {
            if rows.len() != r {
                return Err(Error::Shape(format!("{what} has {} rows, expected {r}", rows.len())));
            }
            if let Some(bad) = rows.iter().flatten().find(|&&x| x < 0 || x >= self.p as i64) {
                return Err(Error::Json(format!("{what} entry {bad} is not reduced mod {}", self.p)));
            }
            Matrix::from_rows(self.p, c, rows)
                .map_err(|e| Error::Shape(format!("{what}: {e}")))
        };
        let mut arrows = Vec::with_capacity(self.n - 1);
        for (v, a) in self.arrows.iter().enumerate() {
            arrows.push(matrix(
                a,
                self.dims[v + 1],
                self.dims[v],
                &format!("arrow {} -> {}", v + 1, v + 2),
            )?);
        }
        let d = self.dims[self.n - 1];
        let loop_map = matrix(&self.loop_map, d, d, "loop")?;
        Representation::validated(ctx, self.dims, arrows, loop_map)
    }
}

impl From<&Representation> for RepresentationFile {
    fn from(r: &Representation) -> Self {
        let conv = |m: &Matrix| -> Vec<Vec<i64>> {
            m.to_rows()
                .into_iter()
                .map(|row| row.into_iter().map(i64::from).collect())
                .collect()
        };
        RepresentationFile {
            p: r.ctx.p as u64,
            n: r.ctx.n,
            dims: r.dims.clone(),
            arrows: r.arrows.iter().map(conv).collect(),
            loop_map: conv(&r.loop_map),
        }
    }
}

/// True iff all shapes are consistent and `loop * loop = 0`.
pub fn check_relation(r: &Representation) -> bool {
    let n = r.ctx.n;
    let shapes_ok = r.dims.len() == n
        && r.arrows.len() == n - 1
        && r
            .arrows
            .iter()
            .enumerate()
            .all(|(v, a)| a.rows() == r.dims[v + 1] && a.cols() == r.dims[v])
        && r.loop_map.rows() == r.dims[n - 1]
        && r.loop_map.cols() == r.dims[n - 1];
    shapes_ok && r.loop_map.mul(&r.loop_map).is_zero()
}

/// The matrix representative of an indecomposable.
pub fn make_indec(label: IndecLabel, ctx: AlgebraContext) -> Result<Representation> {
    let n = ctx.n;
    let p = ctx.p;
    label.validate(n)?;
    let dims = label.dims(n);
    // 1-based vertex of the distinguished arrow into K^2, if any
    let (special, column) = match label {
        IndecLabel::U(i, j) if j <= i => (i.checked_sub(1).filter(|&v| v >= j), 0),
        IndecLabel::U(i, j) => (Some(j - 1).filter(|&v| v >= i), 1),
        _ => (None, 0),
    };
    let arrows = (1..n)
        .map(|v| {
            let (src, dst) = (dims[v - 1], dims[v]);
            let mut a = Matrix::zeros(p, dst, src);
            if special == Some(v) {
                // e_1 or e_2
                a[(column, 0)] = 1;
            } else if src == dst {
                for k in 0..src {
                    a[(k, k)] = 1;
                }
            }
            a
        })
        .collect();
    let tail = dims[n - 1];
    let mut loop_map = Matrix::zeros(p, tail, tail);
    if tail == 2 {
        // M_alpha = [[0, 0], [1, 0]]
        loop_map[(1, 0)] = 1;
    }
    Representation::new(ctx, dims, arrows, loop_map)
}

/// `S_i`: `W(i, i)` below `n`, `V(n)` at `n`.
pub fn simple(i: usize, ctx: AlgebraContext) -> Result<IndecLabel> {
    IndecLabel::simple(i, ctx.n)
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch(format!("{:?} vs {:?}", a.ctx, b.ctx)));
    }
    Ok(Representation {
        ctx: a.ctx,
        dims: a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect(),
        arrows: a
            .arrows
            .iter()
            .zip(&b.arrows)
            .map(|(x, y)| x.block_diag(y))
            .collect(),
        loop_map: a.loop_map.block_diag(&b.loop_map),
    })
}

/// The module `\oplus` of the indecomposables in `m`, in canonical label order.
pub fn module_of(m: &Multiset, ctx: AlgebraContext) -> Result<Representation> {
    let mut acc = Representation::zero(ctx);
    for l in m.labels() {
        acc = direct_sum(&acc, &make_indec(l, ctx)?)?;
    }
    Ok(acc)
}

/// A choice of subspace at every vertex, closed under the structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleWitness<'a> {
    pub parent: &'a Representation,
    pub spaces: Vec<SubspaceBasis>,
}

impl<'a> SubmoduleWitness<'a> {
    pub fn new(parent: &'a Representation, spaces: Vec<SubspaceBasis>) -> Result<Self> {
        let w = SubmoduleWitness { parent, spaces };
        w.check()?;
        Ok(w)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    pub fn check(&self) -> Result<()> {
        let r = self.parent;
        let n = r.ctx.n;
        if self.spaces.len() != n {
            return Err(Error::Witness(format!("{} spaces for {n} vertices", self.spaces.len())));
        }
        for (v, s) in self.spaces.iter().enumerate() {
            if s.ambient_dim() != r.dims[v] || s.p() != r.ctx.p {
                return Err(Error::Witness(format!("space at vertex {} has the wrong ambient", v + 1)));
            }
        }
        for v in 0..n - 1 {
            if !self.spaces[v + 1].contains(&self.spaces[v].image(&r.arrows[v])) {
                return Err(Error::Witness(format!("arrow {} -> {} leaves the subspace", v + 1, v + 2)));
            }
        }
        if !self.spaces[n - 1].contains(&self.spaces[n - 1].image(&r.loop_map)) {
            return Err(Error::Witness("loop leaves the subspace".into()));
        }
        Ok(())
    }

    /// The submodule alone, with maps written in the echelon bases.
    pub fn submodule(&self) -> Representation {
        let r = self.parent;
        let n = r.ctx.n;
        let p = r.ctx.p;
        let restrict = |map: &Matrix, src: &SubspaceBasis, dst: &SubspaceBasis| {
            let mut out = Matrix::zeros(p, dst.dim(), src.dim());
            for c in 0..src.dim() {
                let img = map.mul_vec(src.basis_rows().row(c));
                for (t, x) in dst.coordinates(&img).into_iter().enumerate() {
                    out[(t, c)] = x;
                }
            }
            out
        };
        Representation {
            ctx: r.ctx,
            dims: self.dims(),
            arrows: (0..n - 1)
                .map(|v| restrict(&r.arrows[v], &self.spaces[v], &self.spaces[v + 1]))
                .collect(),
            loop_map: restrict(&r.loop_map, &self.spaces[n - 1], &self.spaces[n - 1]),
        }
    }

    /// The quotient, in coordinates complementary to the echelon pivots.
    pub fn quotient(&self) -> Representation {
        let r = self.parent;
        let n = r.ctx.n;
        let p = r.ctx.p;
        let comps: Vec<Vec<usize>> = self.spaces.iter().map(|s| s.complement_coordinates()).collect();
        let induce = |map: &Matrix, src: &[usize], dst_space: &SubspaceBasis, dst: &[usize]| {
            let mut out = Matrix::zeros(p, dst.len(), src.len());
            for (c, &coord) in src.iter().enumerate() {
                let img = dst_space.reduce(&map.column(coord));
                for (t, &d) in dst.iter().enumerate() {
                    out[(t, c)] = img[d];
                }
            }
            out
        };
        Representation {
            ctx: r.ctx,
            dims: comps.iter().map(|c| c.len()).collect(),
            arrows: (0..n - 1)
                .map(|v| induce(&r.arrows[v], &comps[v], &self.spaces[v + 1], &comps[v + 1]))
                .collect(),
            loop_map: induce(&r.loop_map, &comps[n - 1], &self.spaces[n - 1], &comps[n - 1]),
        }
    }
}

/// Splits a witness into the submodule and the quotient module.
pub fn submodule_and_quotient(w: &SubmoduleWitness<'_>) -> Result<(Representation, Representation)> {
    w.check()?;
    Ok((w.submodule(), w.quotient()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use IndecLabel::*;

    fn ctx(n: usize, p: u64) -> AlgebraContext {
        AlgebraContext::new(n, p).unwrap()
    }

    #[test]
    fn context_validation() {
        assert_eq!(AlgebraContext::new(1, 2), Err(Error::BadVertexCount(1)));
        assert_eq!(AlgebraContext::new(3, 9), Err(Error::BadPrime(9)));
    }

    #[test]
    fn simple_at_top_is_v() {
        let c = ctx(4, 3);
        let v = make_indec(V(4), c).unwrap();
        assert_eq!(v.dims(), &[0, 0, 0, 1]);
        assert_eq!(v.loop_map().to_rows(), vec![vec![0]]);
        assert_eq!(simple(1, ctx(3, 2)).unwrap(), W(1, 1));
        assert_eq!(simple(2, ctx(3, 2)).unwrap(), W(2, 2));
        assert_eq!(simple(3, ctx(3, 2)).unwrap(), V(3));
    }

    #[test]
    fn projectives_have_expected_shape() {
        let c = ctx(4, 2);
        let p2 = make_indec(U(4, 2), c).unwrap();
        assert_eq!(p2.dims(), &[0, 1, 1, 2]);
        // e_1 into the two-dimensional top
        assert_eq!(p2.arrow(3).to_rows(), vec![vec![1], vec![0]]);
        assert_eq!(p2.arrow(2).to_rows(), vec![vec![1]]);
        assert_eq!(p2.loop_map().to_rows(), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn u_with_e2() {
        let c = ctx(3, 5);
        let u = make_indec(U(1, 3), c).unwrap();
        assert_eq!(u.dims(), &[1, 1, 2]);
        assert_eq!(u.arrow(1).to_rows(), vec![vec![1]]);
        assert_eq!(u.arrow(2).to_rows(), vec![vec![0], vec![1]]);
        let u11 = make_indec(U(1, 1), c).unwrap();
        assert_eq!(u11.dims(), &[2, 2, 2]);
        assert_eq!(u11.arrow(1), &Matrix::identity(5, 2));
    }

    #[test]
    fn simple_w_is_unit_vector() {
        let c = ctx(4, 2);
        let s = make_indec(W(2, 2), c).unwrap();
        assert_eq!(s.dims(), &[0, 1, 0, 0]);
        let w = make_indec(W(1, 3), c).unwrap();
        assert_eq!(w.arrow(3).rows(), 0);
        assert_eq!(w.arrow(1).to_rows(), vec![vec![1]]);
    }

    #[test]
    fn every_label_satisfies_relation() {
        for n in 2..=6 {
            for p in [2, 3, 5] {
                let c = ctx(n, p);
                for l in IndecLabel::all(n) {
                    let r = make_indec(l, c).unwrap();
                    assert!(check_relation(&r), "{l}");
                    assert_eq!(r.dims(), l.dims(n).as_slice());
                }
            }
        }
    }

    #[test]
    fn bad_labels_rejected() {
        assert!(matches!(make_indec(W(2, 2), ctx(2, 2)), Err(Error::Label(_))));
        assert!(matches!(make_indec(U(0, 1), ctx(2, 2)), Err(Error::Label(_))));
    }

    #[test]
    fn relation_check() {
        let c = ctx(2, 3);
        let zero_arrow = Matrix::zeros(3, 2, 0);
        let bad = Representation::new(c, vec![0, 2], vec![zero_arrow.clone()], Matrix::identity(3, 2))
            .unwrap();
        assert!(!check_relation(&bad));
        let fine = Representation::new(c, vec![0, 2], vec![zero_arrow], Matrix::zeros(3, 2, 2)).unwrap();
        assert!(check_relation(&fine));
        assert_eq!(
            Representation::validated(c, vec![0, 2], vec![Matrix::zeros(3, 2, 0)], Matrix::identity(3, 2)),
            Err(Error::Relation)
        );
    }

    #[test]
    fn direct_sums() {
        let c = ctx(2, 3);
        let v1 = make_indec(V(1), c).unwrap();
        let v2 = make_indec(V(2), c).unwrap();
        let s = direct_sum(&v1, &v2).unwrap();
        assert_eq!(s.dims(), &[1, 2]);
        assert_eq!(direct_sum(&v1, &Representation::zero(c)).unwrap(), v1);
        let other = make_indec(V(1), ctx(2, 5)).unwrap();
        assert!(matches!(direct_sum(&v1, &other), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn trivial_witnesses() {
        let c = ctx(3, 2);
        let u = make_indec(U(2, 1), c).unwrap();
        let zero = SubmoduleWitness::new(
            &u,
            u.dims().iter().map(|&d| SubspaceBasis::zero(2, d)).collect(),
        )
        .unwrap();
        let (s, q) = submodule_and_quotient(&zero).unwrap();
        assert!(s.is_zero());
        assert_eq!(q, u);
        let full = SubmoduleWitness::new(
            &u,
            u.dims().iter().map(|&d| SubspaceBasis::full(2, d)).collect(),
        )
        .unwrap();
        let (s, q) = submodule_and_quotient(&full).unwrap();
        assert_eq!(s, u);
        assert!(q.is_zero());
    }

    #[test]
    fn witness_must_be_closed() {
        let c = ctx(2, 2);
        let v1 = make_indec(V(1), c).unwrap();
        let spaces = vec![SubspaceBasis::full(2, 1), SubspaceBasis::zero(2, 1)];
        assert!(matches!(SubmoduleWitness::new(&v1, spaces), Err(Error::Witness(_))));
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let c = ctx(3, 5);
        let u = make_indec(U(2, 1), c).unwrap();
        let text = u.to_json();
        assert_eq!(Representation::from_json(&text).unwrap(), u);

        let bad = r#"{"p": 3, "n": 2, "dims": [0, 2], "arrows": [[[], []]], "loop": [[1, 0], [0, 1]]}"#;
        assert_eq!(Representation::from_json(bad), Err(Error::Relation));
        let unreduced = r#"{"p": 3, "n": 2, "dims": [0, 1], "arrows": [[[]]], "loop": [[3]]}"#;
        assert!(matches!(Representation::from_json(unreduced), Err(Error::Json(_))));
        let shape = r#"{"p": 3, "n": 2, "dims": [1, 1], "arrows": [[[1, 0]]], "loop": [[0]]}"#;
        assert!(matches!(Representation::from_json(shape), Err(Error::Shape(_))));
    }
}
