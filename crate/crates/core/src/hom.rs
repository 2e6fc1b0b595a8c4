//! Hom-space dimensions, isomorphism tests and Krull-Schmidt decomposition.
//!
//! The algebra is representation-finite, so a module is determined up to
//! isomorphism by the numbers `dim Hom(X, M)` for `X` running over the
//! indecomposables. Writing `C[X][Y] = dim Hom(X, Y)` for indecomposable
//! `X, Y`, the multiplicities `m` of the summands of `M` solve
//! `C m = h` with `h[X] = dim Hom(X, M)`. The solve is exact over the rationals.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact;
use crate::gf::Matrix;
use crate::label::{IndecLabel, Multiset};
use crate::quiver::{make_indec, AlgebraContext, Representation};
use crate::Rational;

fn same_context(a: &Representation, b: &Representation) -> Result<()> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch(format!("{:?} vs {:?}", a.ctx(), b.ctx())));
    }
    Ok(())
}

/// Linear system whose kernel is `Hom(x, m)`.
///
/// Unknowns are the entries of `f_v : x_v -> m_v`, vertex by vertex,
/// row-major. One block of equations per arrow
/// (`f_{v+1} x_arrow - m_arrow f_v = 0`) and one for the loop.
fn hom_system(x: &Representation, m: &Representation) -> (Matrix, Vec<usize>) {
    let n = x.ctx().n();
    let p = x.ctx().p();
    let xd = x.dims();
    let md = m.dims();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut acc = 0;
    for v in 0..n {
        offsets.push(acc);
        acc += xd[v] * md[v];
    }
    offsets.push(acc);
    let unknowns = acc;
    let equations: usize =
        (0..n - 1).map(|v| md[v + 1] * xd[v]).sum::<usize>() + md[n - 1] * xd[n - 1];
    let mut sys = Matrix::zeros(p, equations, unknowns);
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * xd[v] + c;
    let mut row = 0;
    let mut block = |sys: &mut Matrix, src: usize, dst: usize, xa: &Matrix, ma: &Matrix| {
        // (f_dst * xa - ma * f_src)[r][c], r < m_dst, c < x_src
        for r in 0..md[dst] {
            for c in 0..xd[src] {
                for s in 0..xd[dst] {
                    let a = xa[(s, c)];
                    if a != 0 {
                        let e = &mut sys[(row, var(dst, r, s))];
                        *e = (*e + a) % p;
                    }
                }
                for t in 0..md[src] {
                    let a = ma[(r, t)];
                    if a != 0 {
                        let e = &mut sys[(row, var(src, t, c))];
                        *e = (*e + p - a) % p;
                    }
                }
                row += 1;
            }
        }
    };
    for v in 0..n - 1 {
        block(&mut sys, v, v + 1, &x.arrows()[v], &m.arrows()[v]);
    }
    block(&mut sys, n - 1, n - 1, x.loop_map(), m.loop_map());
    (sys, offsets)
}

/// `dim Hom(x, m)` over the base field.
pub fn hom_dim(x: &Representation, m: &Representation) -> Result<usize> {
    same_context(x, m)?;
    let (sys, _) = hom_system(x, m);
    Ok(crate::gf::solve_intertwiner_dim(&sys))
}

/// A basis of `Hom(x, m)`, each element given as its vertex matrices.
pub fn hom_basis(x: &Representation, m: &Representation) -> Result<Vec<Vec<Matrix>>> {
    same_context(x, m)?;
    let (sys, offsets) = hom_system(x, m);
    let p = x.ctx().p();
    let xd = x.dims();
    let md = m.dims();
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|v| {
            (0..xd.len())
                .map(|k| Matrix::from_fn(p, md[k], xd[k], |r, c| v[offsets[k] + r * xd[k] + c]))
                .collect()
        })
        .collect())
}

/// Tests `m ≅ label` without a full decomposition.
///
/// The endomorphism ring of an indecomposable is local, so when `m ≅ Y` the
/// non-isomorphisms form a proper subspace of `Hom(Y, m)`; some basis vector
/// must then be an isomorphism.
pub fn is_iso_to_indec(m: &Representation, label: IndecLabel) -> Result<bool> {
    let y = make_indec(label, m.ctx())?;
    is_iso_to_indec_rep(m, &y)
}

pub(crate) fn is_iso_to_indec_rep(m: &Representation, y: &Representation) -> Result<bool> {
    if m.dims() != y.dims() {
        return Ok(false);
    }
    Ok(hom_basis(y, m)?
        .iter()
        .any(|f| f.iter().all(Matrix::is_invertible)))
}

/// Hom dimensions between all indecomposables of one context, plus the
/// inverse of that matrix over the rationals.
#[derive(Debug)]
pub struct HomTable {
    ctx: AlgebraContext,
    labels: Vec<IndecLabel>,
    index: HashMap<IndecLabel, usize>,
    reps: Vec<Representation>,
    /// `dims[x][y] = dim Hom(labels[x], labels[y])`
    dims: Vec<Vec<usize>>,
    inverse: Vec<Vec<Rational>>,
}

static TABLES: OnceLock<Mutex<HashMap<AlgebraContext, Arc<HomTable>>>> = OnceLock::new();

impl HomTable {
    /// Shared table for `ctx`; filled once, read-only afterwards.
    pub fn for_context(ctx: AlgebraContext) -> Result<Arc<HomTable>> {
        let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("hom table cache poisoned").get(&ctx) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(Self::compute(ctx)?);
        let mut guard = cache.lock().expect("hom table cache poisoned");
        Ok(Arc::clone(guard.entry(ctx).or_insert(table)))
    }

    fn compute(ctx: AlgebraContext) -> Result<HomTable> {
        let labels = IndecLabel::all(ctx.n());
        let reps = labels
            .iter()
            .map(|&l| make_indec(l, ctx))
            .collect::<Result<Vec<_>>>()?;
        let mut dims = vec![vec![0; labels.len()]; labels.len()];
        for (a, x) in reps.iter().enumerate() {
            for (b, y) in reps.iter().enumerate() {
                dims[a][b] = hom_dim(x, y)?;
            }
        }
        let as_q: Vec<Vec<Rational>> = dims
            .iter()
            .map(|r| r.iter().map(|&d| Rational::from_integer(d.into())).collect())
            .collect();
        let inverse = exact::invert(&as_q).ok_or_else(|| {
            Error::Invariant(format!("hom matrix of indecomposables is singular for {ctx:?}"))
        })?;
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Ok(HomTable {
            ctx,
            labels,
            index,
            reps,
            dims,
            inverse,
        })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn labels(&self) -> &[IndecLabel] {
        &self.labels
    }

    pub fn rep(&self, label: IndecLabel) -> &Representation {
        &self.reps[self.index[&label]]
    }

    /// `dim Hom(x, y)` for indecomposables.
    pub fn hom(&self, x: IndecLabel, y: IndecLabel) -> usize {
        self.dims[self.index[&x]][self.index[&y]]
    }

    /// `dim Hom(a, b)` for direct sums, by bilinearity.
    pub fn hom_multisets(&self, a: &Multiset, b: &Multiset) -> usize {
        a.iter()
            .flat_map(|(x, mx)| b.iter().map(move |(y, my)| mx * my * self.hom(x, y)))
            .sum()
    }

    /// `(dim Hom(X, m))_X` over all indecomposables `X`, for a direct sum `m`.
    pub fn hom_profile(&self, m: &Multiset) -> Vec<usize> {
        self.labels
            .iter()
            .map(|&x| m.iter().map(|(y, k)| k * self.hom(x, y)).sum())
            .collect()
    }

    /// `(dim Hom(m, X))_X` over all indecomposables `X`.
    pub fn cohom_profile(&self, m: &Multiset) -> Vec<usize> {
        self.labels
            .iter()
            .map(|&x| m.iter().map(|(y, k)| k * self.hom(y, x)).sum())
            .collect()
    }

    /// The raw hom matrix, rows and columns in canonical label order.
    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.dims
    }
}

/// `(dim Hom(X, m))_X` for an arbitrary module.
pub fn hom_vector(m: &Representation, table: &HomTable) -> Result<Vec<usize>> {
    table.reps.iter().map(|x| hom_dim(x, m)).collect()
}

/// Auslander's criterion: equal dimension vectors and equal hom counts from
/// every indecomposable.
pub fn is_iso(m: &Representation, other: &Representation) -> Result<bool> {
    same_context(m, other)?;
    if m.dims() != other.dims() {
        return Ok(false);
    }
    let table = HomTable::for_context(m.ctx())?;
    for x in &table.reps {
        if hom_dim(x, m)? != hom_dim(x, other)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Krull-Schmidt decomposition into labelled indecomposables.
pub fn decompose(m: &Representation) -> Result<Multiset> {
    if !crate::quiver::check_relation(m) {
        return Err(Error::Relation);
    }
    let table = HomTable::for_context(m.ctx())?;
    let h = hom_vector(m, &table)?;
    decompose_profile(&h, m.dims(), &table)
}

/// Solves `C mult = h` and validates the answer.
pub(crate) fn decompose_profile(h: &[usize], dims: &[usize], table: &HomTable) -> Result<Multiset> {
    let hq: Vec<Rational> = h.iter().map(|&d| Rational::from_integer(d.into())).collect();
    let mult = exact::apply(&table.inverse, &hq);
    let mut out = Multiset::zero();
    for (label, q) in table.labels.iter().zip(&mult) {
        if !q.is_integer() || q < &Rational::zero() {
            return Err(Error::Invariant(format!(
                "multiplicity of {label} solved to {q}, not a natural number"
            )));
        }
        let k = q.to_integer().to_usize().ok_or_else(|| {
            Error::Invariant(format!("multiplicity of {label} out of range"))
        })?;
        out.insert(*label, k);
    }
    // round trip: the candidate must reproduce the dimension vector and hom profile
    let n = table.ctx.n();
    if out.dims(n) != dims || table.hom_profile(&out) != h {
        return Err(Error::Invariant(format!(
            "decomposition {out} fails the isomorphism round trip"
        )));
    }
    Ok(out)
}
