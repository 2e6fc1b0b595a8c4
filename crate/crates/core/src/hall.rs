//! Hall numbers by exhaustive submodule enumeration, and Hall products.
//!
//! `F^M_{X,Y}` counts the submodules `U` of `M` with `U ≅ Y` and `M/U ≅ X`.
//! Submodules are enumerated depth-first along the arrows `1 -> ... -> n`:
//! the image of the space chosen at `v` is a lower bound for the space at
//! `v + 1`, and loop invariance is imposed at the last vertex.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::gf::{enumerate_subspaces, enumerate_subspaces_of_dim, SubspaceBasis, SubspaceIter};
use crate::hom::{decompose, is_iso_to_indec_rep, HomTable};
use crate::label::{multisets_with_dims, Multiset};
use crate::quiver::{module_of, AlgebraContext, Representation, SubmoduleWitness};
use crate::Rational;

/// Element of the Hall algebra in the isoclass basis.
pub type IsoClassCombo = Combo<Multiset, i64>;

pub const DEFAULT_DIM_CEILING: usize = 12;

/// Environment variable that overrides [`DEFAULT_DIM_CEILING`].
pub const DIM_CEILING_ENV: &str = "HALLQ_DIM_CEILING";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HallConfig {
    /// Largest total dimension of `M` that will be enumerated.
    pub dim_ceiling: usize,
    /// Skip enumeration when `dim Hom(Z, M) > dim Hom(Z, X) + dim Hom(Z, Y)`
    /// (or the dual inequality) for some indecomposable `Z`. Left exactness
    /// of Hom rules out any short exact sequence `0 -> Y -> M -> X -> 0` then.
    pub hom_filter: bool,
}

impl Default for HallConfig {
    fn default() -> Self {
        HallConfig {
            dim_ceiling: dim_ceiling_from_env(),
            hom_filter: true,
        }
    }
}

impl HallConfig {
    pub fn with_ceiling(dim_ceiling: usize) -> Self {
        HallConfig {
            dim_ceiling,
            ..Self::default()
        }
    }
}

/// The ceiling from `HALLQ_DIM_CEILING`, falling back to the default.
pub fn dim_ceiling_from_env() -> usize {
    std::env::var(DIM_CEILING_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CEILING)
}

/// Lazily yields every submodule of a representation.
pub struct SubmoduleIter<'a> {
    rep: &'a Representation,
    target: Option<Vec<usize>>,
    stack: Vec<SubspaceIter>,
    chosen: Vec<SubspaceBasis>,
    started: bool,
}

/// Every submodule of `m`, each exactly once.
pub fn enumerate_submodules(m: &Representation) -> SubmoduleIter<'_> {
    SubmoduleIter {
        rep: m,
        target: None,
        stack: Vec::new(),
        chosen: Vec::new(),
        started: false,
    }
}

/// Every submodule of `m` with dimension vector `dims`.
pub fn enumerate_submodules_with_dims<'a>(m: &'a Representation, dims: &[usize]) -> SubmoduleIter<'a> {
    SubmoduleIter {
        rep: m,
        target: Some(dims.to_vec()),
        stack: Vec::new(),
        chosen: Vec::new(),
        started: false,
    }
}

impl<'a> SubmoduleIter<'a> {
    fn spaces_at(&self, vertex: usize, lower: &SubspaceBasis) -> SubspaceIter {
        let d = self.rep.dims()[vertex];
        let p = self.rep.ctx().p();
        match &self.target {
            Some(t) => enumerate_subspaces_of_dim(d, p, lower, t[vertex]),
            None => enumerate_subspaces(d, p, lower),
        }
    }

    fn lower_bound(&self, vertex: usize) -> SubspaceBasis {
        let n = self.rep.ctx().n();
        let p = self.rep.ctx().p();
        let mut lower = if vertex == 0 {
            SubspaceBasis::zero(p, self.rep.dims()[0])
        } else {
            self.chosen[vertex - 1].image(&self.rep.arrows()[vertex - 1])
        };
        if vertex == n - 1 {
            // alpha^2 = 0, so L + alpha(L) is already loop-closed
            lower = lower.join(&lower.image(self.rep.loop_map()));
        }
        lower
    }
}

impl<'a> Iterator for SubmoduleIter<'a> {
    type Item = SubmoduleWitness<'a>;

    fn next(&mut self) -> Option<SubmoduleWitness<'a>> {
        let n = self.rep.ctx().n();
        if let Some(t) = &self.target {
            if t.len() != n || t.iter().zip(self.rep.dims()).any(|(a, b)| a > b) {
                return None;
            }
        }
        if !self.started {
            self.started = true;
            let lower = self.lower_bound(0);
            let it = self.spaces_at(0, &lower);
            self.stack.push(it);
        }
        loop {
            let depth = self.stack.len();
            if depth == 0 {
                return None;
            }
            let Some(space) = self.stack[depth - 1].next() else {
                self.stack.pop();
                continue;
            };
            self.chosen.truncate(depth - 1);
            self.chosen.push(space);
            if depth == n {
                let top = &self.chosen[n - 1];
                if top.contains(&top.image(self.rep.loop_map())) {
                    return Some(SubmoduleWitness {
                        parent: self.rep,
                        spaces: self.chosen.clone(),
                    });
                }
            } else {
                let lower = self.lower_bound(depth);
                let it = self.spaces_at(depth, &lower);
                self.stack.push(it);
            }
        }
    }
}

/// What a submodule or quotient has to be isomorphic to.
enum Target {
    Zero,
    Indecomposable(Representation),
    General(Multiset),
}

impl Target {
    fn new(m: &Multiset, table: &HomTable) -> Self {
        if m.is_zero() {
            Target::Zero
        } else if let Some(l) = m.as_indecomposable() {
            Target::Indecomposable(table.rep(l).clone())
        } else {
            Target::General(m.clone())
        }
    }

    fn matches(
        &self,
        rep: &Representation,
        dims: &[usize],
        memo: &mut HashMap<Representation, Multiset>,
    ) -> Result<bool> {
        if rep.dims() != dims {
            return Ok(false);
        }
        match self {
            Target::Zero => Ok(rep.is_zero()),
            Target::Indecomposable(y) => is_iso_to_indec_rep(rep, y),
            Target::General(m) => {
                if let Some(d) = memo.get(rep) {
                    return Ok(d == m);
                }
                let d = decompose(rep)?;
                let hit = &d == m;
                memo.insert(rep.clone(), d);
                Ok(hit)
            }
        }
    }
}

/// Hall numbers and products for one algebra over one field, with a result cache.
pub struct HallEngine {
    ctx: AlgebraContext,
    cfg: HallConfig,
    table: Arc<HomTable>,
    cache: Mutex<HashMap<(Multiset, Multiset, Multiset), u64>>,
}

impl HallEngine {
    pub fn new(ctx: AlgebraContext, cfg: HallConfig) -> Result<Self> {
        Ok(HallEngine {
            ctx,
            cfg,
            table: HomTable::for_context(ctx)?,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn config(&self) -> HallConfig {
        self.cfg
    }

    pub fn table(&self) -> &HomTable {
        &self.table
    }

    /// True when left exactness of Hom forbids `0 -> Y -> M -> X -> 0`.
    pub fn hom_obstructed(&self, x: &Multiset, y: &Multiset, m: &Multiset) -> bool {
        let t = &self.table;
        let (hx, hy, hm) = (t.hom_profile(x), t.hom_profile(y), t.hom_profile(m));
        if hm.iter().zip(hx.iter().zip(&hy)).any(|(&a, (&b, &c))| a > b + c) {
            return true;
        }
        let (cx, cy, cm) = (t.cohom_profile(x), t.cohom_profile(y), t.cohom_profile(m));
        cm.iter().zip(cx.iter().zip(&cy)).any(|(&a, (&b, &c))| a > b + c)
    }

    /// `F^M_{X,Y}`: submodules `U ⊆ M` with `U ≅ y` and `M/U ≅ x`.
    pub fn hall_number(&self, x: &Multiset, y: &Multiset, m: &Multiset) -> Result<u64> {
        let key = (x.clone(), y.clone(), m.clone());
        if let Some(&v) = self.cache.lock().expect("hall cache poisoned").get(&key) {
            return Ok(v);
        }
        let v = self.compute_hall_number(x, y, m)?;
        self.cache.lock().expect("hall cache poisoned").insert(key, v);
        Ok(v)
    }

    fn compute_hall_number(&self, x: &Multiset, y: &Multiset, m: &Multiset) -> Result<u64> {
        let n = self.ctx.n();
        for s in [x, y, m] {
            s.validate(n)?;
        }
        let (dx, dy, dm) = (x.dims(n), y.dims(n), m.dims(n));
        if dx.iter().zip(&dy).map(|(a, b)| a + b).ne(dm.iter().copied()) {
            return Ok(0);
        }
        let total = m.total_dim(n);
        if total > self.cfg.dim_ceiling {
            return Err(Error::DimCeiling {
                total,
                ceiling: self.cfg.dim_ceiling,
            });
        }
        if self.cfg.hom_filter && self.hom_obstructed(x, y, m) {
            return Ok(0);
        }
        let module = module_of(m, self.ctx)?;
        self.count_in(x, y, &module)
    }

    /// Hall number with `M` given as an explicit representation.
    pub fn hall_number_in(&self, x: &Multiset, y: &Multiset, module: &Representation) -> Result<u64> {
        if module.ctx() != self.ctx {
            return Err(Error::ContextMismatch(format!("{:?} vs {:?}", module.ctx(), self.ctx)));
        }
        let n = self.ctx.n();
        x.validate(n)?;
        y.validate(n)?;
        let (dx, dy) = (x.dims(n), y.dims(n));
        if dx.iter().zip(&dy).map(|(a, b)| a + b).ne(module.dims().iter().copied()) {
            return Ok(0);
        }
        if module.total_dim() > self.cfg.dim_ceiling {
            return Err(Error::DimCeiling {
                total: module.total_dim(),
                ceiling: self.cfg.dim_ceiling,
            });
        }
        self.count_in(x, y, module)
    }

    fn count_in(&self, x: &Multiset, y: &Multiset, module: &Representation) -> Result<u64> {
        let n = self.ctx.n();
        let (dx, dy) = (x.dims(n), y.dims(n));
        let (tx, ty) = (Target::new(x, &self.table), Target::new(y, &self.table));
        let mut memo = HashMap::new();
        let mut count = 0u64;
        for w in enumerate_submodules_with_dims(module, &dy) {
            if !ty.matches(&w.submodule(), &dy, &mut memo)? {
                continue;
            }
            if tx.matches(&w.quotient(), &dx, &mut memo)? {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Every isoclass with the dimension vector of `a ⊕ b`.
    pub fn candidates(&self, a: &Multiset, b: &Multiset) -> Vec<Multiset> {
        let n = self.ctx.n();
        let target: Vec<usize> = a.dims(n).iter().zip(b.dims(n)).map(|(x, y)| x + y).collect();
        multisets_with_dims(n, &target)
    }

    /// `[a] ⋄ [b] = Σ_M F^M_{a,b} [M]`.
    pub fn product(&self, a: &Multiset, b: &Multiset) -> Result<IsoClassCombo> {
        let mut out = IsoClassCombo::zero();
        for m in self.candidates(a, b) {
            let f = self.hall_number(a, b, &m)?;
            out.add_term(m, f as i64);
        }
        Ok(out)
    }

    /// Counts every submodule of `module`, grouped by (quotient, submodule) isoclass.
    pub fn classify_submodules(&self, module: &Representation) -> Result<BTreeMap<(Multiset, Multiset), u64>> {
        let mut out = BTreeMap::new();
        for w in enumerate_submodules(module) {
            let key = (decompose(&w.quotient())?, decompose(&w.submodule())?);
            *out.entry(key).or_insert(0) += 1;
        }
        Ok(out)
    }
}

/// `F^M_{X,Y}` with the default configuration.
pub fn hall_number(x: &Multiset, y: &Multiset, m: &Multiset, ctx: AlgebraContext) -> Result<u64> {
    HallEngine::new(ctx, HallConfig::default())?.hall_number(x, y, m)
}

/// `[n1] ⋄ [n2]` with the default configuration.
pub fn hall_product(n1: &Multiset, n2: &Multiset, ctx: AlgebraContext) -> Result<IsoClassCombo> {
    HallEngine::new(ctx, HallConfig::default())?.product(n1, n2)
}

/// One summand `coef · [left] ⋄ [right]` of a composition relation.
#[derive(Clone, Debug, PartialEq)]
pub struct CompoTerm {
    pub coef: Rational,
    pub left: Multiset,
    pub right: Multiset,
}

/// A relation `[target] = Σ coef · [left] ⋄ [right]` in the Hall algebra.
///
/// A single isoclass `c·[Z]` can be written as the term `c · [Z] ⋄ [0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompoRelation {
    pub target: Multiset,
    pub terms: Vec<CompoTerm>,
}

/// Outcome of one `(Y, M)` instance.
#[derive(Clone, Debug, PartialEq)]
pub struct CompoInstance {
    pub y: Multiset,
    pub m: Multiset,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CompoInstance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl CompoRelation {
    pub fn two_term(
        x: Multiset,
        (a, x1, x2): (i64, Multiset, Multiset),
        (b, x3, x4): (i64, Multiset, Multiset),
    ) -> Self {
        let q = |k: i64| Rational::from_integer(k.into());
        CompoRelation {
            target: x,
            terms: vec![
                CompoTerm {
                    coef: q(a),
                    left: x1,
                    right: x2,
                },
                CompoTerm {
                    coef: q(b),
                    left: x3,
                    right: x4,
                },
            ],
        }
    }

    /// Checks the relation itself by expanding each product.
    pub fn check_hypothesis(&self, engine: &HallEngine) -> Result<()> {
        let mut sum: Combo<Multiset, Rational> = Combo::zero();
        for t in &self.terms {
            let prod = engine.product(&t.left, &t.right)?;
            let prod = prod.map_coefficients(|&c| Rational::from_integer(c.into()));
            sum = sum.plus(&prod.scaled(&t.coef));
        }
        let want = Combo::single(self.target.clone(), Rational::from_integer(1.into()));
        if sum != want {
            return Err(Error::Hypothesis(format!("[{}] != {}", self.target, sum)));
        }
        Ok(())
    }

    /// Both sides of `F^M_{X,Y} = Σ coef Σ_Z F^M_{left,Z} F^Z_{right,Y}`.
    pub fn instance(&self, engine: &HallEngine, y: &Multiset, m: &Multiset) -> Result<CompoInstance> {
        let n = engine.ctx().n();
        let lhs = engine.hall_number(&self.target, y, m)?;
        let mut rhs = Rational::from_integer(0.into());
        let dm = m.dims(n);
        for t in &self.terms {
            let dl = t.left.dims(n);
            if dl.iter().zip(&dm).any(|(a, b)| a > b) {
                continue;
            }
            let dz: Vec<usize> = dm.iter().zip(&dl).map(|(a, b)| a - b).collect();
            let mut acc: u64 = 0;
            for z in multisets_with_dims(n, &dz) {
                let outer = engine.hall_number(&t.left, &z, m)?;
                if outer == 0 {
                    continue;
                }
                acc += outer * engine.hall_number(&t.right, y, &z)?;
            }
            rhs += t.coef.clone() * Rational::from_integer(acc.into());
        }
        Ok(CompoInstance {
            y: y.clone(),
            m: m.clone(),
            lhs: Rational::from_integer(lhs.into()),
            rhs,
        })
    }
}

/// Checks the composition identity for one `(Y, M)`, after checking the
/// hypothesis `[x] = a [x1] ⋄ [x2] + b [x3] ⋄ [x4]`.
#[allow(clippy::too_many_arguments)]
pub fn verify_compo_instance(
    x: &Multiset,
    x1: &Multiset,
    x2: &Multiset,
    x3: &Multiset,
    x4: &Multiset,
    a: i64,
    b: i64,
    y: &Multiset,
    m: &Multiset,
    ctx: AlgebraContext,
) -> Result<bool> {
    let engine = HallEngine::new(ctx, HallConfig::default())?;
    let rel = CompoRelation::two_term(x.clone(), (a, x1.clone(), x2.clone()), (b, x3.clone(), x4.clone()));
    rel.check_hypothesis(&engine)?;
    Ok(rel.instance(&engine, y, m)?.holds())
}
