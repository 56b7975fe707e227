use std::fmt;
use std::sync::Arc;

use super::data::AlgebraData;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};

/// A finite-dimensional right module.
///
/// Stored in quiver-representation form: one vector space `X e_s` per
/// vertex and one linear map per Gabriel-quiver arrow `a: s → t`, acting as
/// `x ↦ x·a` from `X e_s` to `X e_t` on column coordinate vectors. The
/// module basis is the concatenation of the vertex bases. Actions of
/// arbitrary algebra elements are recovered through the word basis of the
/// algebra, see [`ModuleRep::action`].
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<AlgebraData>,
    dims: Vec<usize>,
    arrows: Vec<RatMatrix>,
}

/// A module homomorphism, stored as one block `X e_s → Y e_s` per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    blocks: Vec<RatMatrix>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep{:?}", self.dims)
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

impl ModuleRep {
    /// Builds a module from vertex dimensions and arrow matrices and checks
    /// every defining relation of the algebra.
    pub fn new(algebra: Arc<AlgebraData>, dims: Vec<usize>, arrows: Vec<RatMatrix>) -> Result<Self> {
        let m = Self::from_parts(algebra, dims, arrows)?;
        m.check_relations()?;
        Ok(m)
    }

    /// Shape checks only; used internally where relations hold by construction.
    pub(crate) fn from_parts(algebra: Arc<AlgebraData>, dims: Vec<usize>, arrows: Vec<RatMatrix>) -> Result<Self> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                algebra.vertex_count()
            )));
        }
        if arrows.len() != algebra.arrows().len() {
            return Err(Error::InvalidModule("wrong number of arrow matrices".into()));
        }
        for (a, m) in algebra.arrows().iter().zip(&arrows) {
            if m.rows() != dims[a.tgt] || m.cols() != dims[a.src] {
                return Err(Error::InvalidModule("arrow matrix has wrong shape".into()));
            }
        }
        Ok(ModuleRep { algebra, dims, arrows })
    }

    pub fn zero(algebra: Arc<AlgebraData>) -> Self {
        let nv = algebra.vertex_count();
        let arrows = algebra.arrows().iter().map(|_| RatMatrix::zeros(0, 0)).collect();
        ModuleRep { algebra, dims: vec![0; nv], arrows }
    }

    /// The simple module at vertex `s`.
    pub fn simple(algebra: Arc<AlgebraData>, s: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[s] = 1;
        let arrows = algebra
            .arrows()
            .iter()
            .map(|a| RatMatrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        ModuleRep { algebra, dims, arrows }
    }

    /// The indecomposable projective `e_s A`, with basis the words starting at `s`.
    pub fn projective(algebra: Arc<AlgebraData>, s: usize) -> Self {
        let pres = algebra.pres();
        let nv = algebra.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|t| pres.block_words[s][t].len()).collect();
        let mut arrows: Vec<RatMatrix> = algebra
            .arrows()
            .iter()
            .map(|a| RatMatrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        for t in 0..nv {
            for (col, &w) in pres.block_words[s][t].iter().enumerate() {
                for (ai, coords) in &pres.extend[w] {
                    for (u, c) in coords {
                        arrows[*ai][(pres.word_pos[*u], col)] = c.clone();
                    }
                }
            }
        }
        ModuleRep { algebra, dims, arrows }
    }

    /// The right regular module `A_A`, as the direct sum of the `e_s A`.
    pub fn regular(algebra: Arc<AlgebraData>) -> Self {
        let parts: Vec<ModuleRep> = (0..algebra.vertex_count())
            .map(|s| Self::projective(algebra.clone(), s))
            .collect();
        direct_sum(&algebra, &parts).0
    }

    /// The indecomposable injective `D(A e_t)`.
    pub fn injective(algebra: Arc<AlgebraData>, t: usize) -> Self {
        let op = algebra.opposite();
        Self::projective(op, t).dual()
    }

    pub fn algebra(&self) -> &Arc<AlgebraData> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offset(&self, s: usize) -> usize {
        self.dims[..s].iter().sum()
    }

    pub fn arrow(&self, a: usize) -> &RatMatrix {
        &self.arrows[a]
    }

    pub fn arrow_matrices(&self) -> &[RatMatrix] {
        &self.arrows
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    pub(crate) fn check_same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Actions `X e_s → X e_t` of every word from `s`, indexed like
    /// `algebra.words()` (entries for other words are `None`).
    pub fn word_actions_from(&self, s: usize) -> Vec<Option<RatMatrix>> {
        let pres = self.algebra.pres();
        let mut out: Vec<Option<RatMatrix>> = vec![None; pres.words.len()];
        // Words from s were created after their parents, so index order works.
        let mut from_s: Vec<usize> = (0..self.dims.len()).flat_map(|t| pres.block_words[s][t].iter().copied()).collect();
        from_s.sort_unstable();
        for w in from_s {
            let word = &pres.words[w];
            let m = match word.parent {
                None => RatMatrix::identity(self.dims[s]),
                Some((p, a)) => {
                    let pm = out[p].as_ref().expect("parent computed first");
                    self.arrows[a].mul(pm)
                }
            };
            out[w] = Some(m);
        }
        out
    }

    /// Action `X e_s → X e_t` of the `(s, t)` Peirce component of an element.
    pub fn act_block(&self, element: &[Rational], s: usize, t: usize) -> RatMatrix {
        let coords = self.algebra.word_coords(element);
        self.act_block_words(&coords, s, t, &self.word_actions_from(s))
    }

    pub(crate) fn act_block_words(
        &self,
        word_coords: &[Rational],
        s: usize,
        t: usize,
        actions: &[Option<RatMatrix>],
    ) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dims[t], self.dims[s]);
        for &w in self.algebra.words_between(s, t) {
            let c = &word_coords[w];
            if c.is_zero() {
                continue;
            }
            m = m.add(&actions[w].as_ref().expect("word from s").scale(c));
        }
        m
    }

    /// Full `dim × dim` matrix of the right action of an algebra element.
    pub fn action_of(&self, element: &[Rational]) -> RatMatrix {
        let coords = self.algebra.word_coords(element);
        let n = self.dim();
        let mut full = RatMatrix::zeros(n, n);
        for s in 0..self.dims.len() {
            if self.dims[s] == 0 {
                continue;
            }
            let actions = self.word_actions_from(s);
            for t in 0..self.dims.len() {
                if self.dims[t] == 0 {
                    continue;
                }
                let b = self.act_block_words(&coords, s, t, &actions);
                full.set_block(self.offset(t), self.offset(s), &b);
            }
        }
        full
    }

    /// Full matrix of the action of basis element `b`.
    pub fn action(&self, b: usize) -> RatMatrix {
        self.action_of(&self.algebra.basis_vector(b))
    }

    /// Full action matrices of several elements, sharing the word actions.
    pub fn actions_of(&self, elements: &[Vec<Rational>]) -> Vec<RatMatrix> {
        let n = self.dim();
        let nv = self.dims.len();
        let word_actions: Vec<Vec<Option<RatMatrix>>> = (0..nv)
            .map(|s| if self.dims[s] > 0 { self.word_actions_from(s) } else { Vec::new() })
            .collect();
        elements
            .iter()
            .map(|e| {
                let coords = self.algebra.word_coords(e);
                let mut full = RatMatrix::zeros(n, n);
                for s in 0..nv {
                    for t in 0..nv {
                        if self.dims[s] == 0 || self.dims[t] == 0 {
                            continue;
                        }
                        let b = self.act_block_words(&coords, s, t, &word_actions[s]);
                        full.set_block(self.offset(t), self.offset(s), &b);
                    }
                }
                full
            })
            .collect()
    }

    /// Restriction of scalars along an algebra map `B → A` given by the
    /// images of the basis of `B`. The images must act unitally on `X`.
    pub fn pullback(&self, algebra: Arc<AlgebraData>, images: &[Vec<Rational>]) -> Result<ModuleRep> {
        if images.len() != algebra.dim() {
            return Err(Error::InvalidModule("one image per basis element is required".into()));
        }
        let actions = self.actions_of(images);
        ModuleRep::from_actions(algebra, self.dim(), &actions)
    }

    /// Checks that the arrow matrices satisfy every relation `w·a = Σ c_u u`
    /// among words, which is equivalent to being a module.
    pub fn check_relations(&self) -> Result<()> {
        let pres = self.algebra.pres();
        for s in 0..self.dims.len() {
            if self.dims[s] == 0 {
                continue;
            }
            let actions = self.word_actions_from(s);
            for t in 0..self.dims.len() {
                for &w in &pres.block_words[s][t] {
                    let wm = actions[w].as_ref().unwrap();
                    for (ai, coords) in &pres.extend[w] {
                        let a = &pres.arrows[*ai];
                        let lhs = self.arrows[*ai].mul(wm);
                        let mut rhs = RatMatrix::zeros(self.dims[a.tgt], self.dims[s]);
                        for (u, c) in coords {
                            rhs = rhs.add(&actions[*u].as_ref().unwrap().scale(c));
                        }
                        if lhs != rhs {
                            return Err(Error::InvalidModule(format!(
                                "relation for word {w} times arrow {ai} fails"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a module from full action matrices, one per basis element,
    /// checking that the action respects the structure constants.
    pub fn from_actions(algebra: Arc<AlgebraData>, dim: usize, actions: &[RatMatrix]) -> Result<Self> {
        let n = algebra.dim();
        if actions.len() != n || actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule("action matrices have wrong count or shape".into()));
        }
        let act = |v: &[Rational]| -> RatMatrix {
            let mut m = RatMatrix::zeros(dim, dim);
            for (b, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    m = m.add(&actions[b].scale(c));
                }
            }
            m
        };
        if act(algebra.unit()) != RatMatrix::identity(dim) {
            return Err(Error::InvalidModule("unit does not act as identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = act(&{
                    let mut v = vec![Rational::zero(); n];
                    for (k, c) in algebra.product(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                });
                // Right action: x·(b_i b_j) = (x·b_i)·b_j.
                if prod != actions[j].mul(&actions[i]) {
                    return Err(Error::InvalidModule(format!(
                        "action does not respect the product of basis elements {i} and {j}"
                    )));
                }
            }
        }
        let nv = algebra.vertex_count();
        let mut bases = Vec::with_capacity(nv);
        let mut dims = Vec::with_capacity(nv);
        for e in algebra.idempotents() {
            let b = act(&e.coords).column_space();
            dims.push(b.cols());
            bases.push(b);
        }
        let mut change = RatMatrix::zeros(dim, 0);
        for b in &bases {
            change = change.hstack(b);
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::InvalidModule("idempotent images do not split the space".into()))?;
        let offsets: Vec<usize> = (0..nv).map(|s| dims[..s].iter().sum()).collect();
        let arrows = algebra
            .arrows()
            .iter()
            .map(|a| {
                let full = inv.mul(&act(&a.coords)).mul(&change);
                full.block(offsets[a.tgt], offsets[a.src], dims[a.tgt], dims[a.src])
            })
            .collect();
        Ok(ModuleRep { algebra, dims, arrows })
    }

    /// The dual `D X = Hom_k(X, k)`, a module over the opposite algebra.
    pub fn dual(&self) -> ModuleRep {
        let op = self.algebra.opposite();
        let actions: Vec<Vec<Option<RatMatrix>>> =
            (0..self.dims.len()).map(|s| if self.dims[s] > 0 { self.word_actions_from(s) } else { Vec::new() }).collect();
        let arrows = op
            .arrows()
            .iter()
            .map(|a| {
                // a ∈ e_src A^op e_tgt = e_tgt A e_src acts X e_tgt → X e_src.
                if self.dims[a.tgt] == 0 || self.dims[a.src] == 0 {
                    return RatMatrix::zeros(self.dims[a.tgt], self.dims[a.src]);
                }
                let coords = self.algebra.word_coords(&a.coords);
                self.act_block_words(&coords, a.tgt, a.src, &actions[a.tgt]).transpose()
            })
            .collect();
        ModuleRep { algebra: op, dims: self.dims.clone(), arrows }
    }

    /// Vertices with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&s| self.dims[s] > 0).collect()
    }

    /// Submodule spanned per vertex by the columns of `bases[s]` (assumed
    /// closed under the action), with its inclusion.
    pub fn submodule(&self, bases: &[RatMatrix]) -> (ModuleRep, ModuleMap) {
        let dims: Vec<usize> = bases.iter().map(RatMatrix::cols).collect();
        let arrows = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                if dims[a.src] == 0 || dims[a.tgt] == 0 {
                    return RatMatrix::zeros(dims[a.tgt], dims[a.src]);
                }
                let img = self.arrows[ai].mul(&bases[a.src]);
                bases[a.tgt].solve_many(&img).expect("subspace closed under the action")
            })
            .collect();
        let sub = ModuleRep { algebra: self.algebra.clone(), dims, arrows };
        (sub, ModuleMap { blocks: bases.to_vec() })
    }

    /// Quotient by the submodule spanned by `bases`, with the projection.
    pub fn quotient(&self, bases: &[RatMatrix]) -> (ModuleRep, ModuleMap) {
        let nv = self.dims.len();
        let mut proj = Vec::with_capacity(nv);
        let mut sect = Vec::with_capacity(nv);
        for s in 0..nv {
            let (p, q) = complement(&bases[s], self.dims[s]);
            proj.push(p);
            sect.push(q);
        }
        let dims: Vec<usize> = sect.iter().map(RatMatrix::cols).collect();
        let arrows = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| proj[a.tgt].mul(&self.arrows[ai]).mul(&sect[a.src]))
            .collect();
        let q = ModuleRep { algebra: self.algebra.clone(), dims, arrows };
        (q, ModuleMap { blocks: proj })
    }

    /// Submodule `X·rad`, per vertex.
    pub fn radical_bases(&self) -> Vec<RatMatrix> {
        let nv = self.dims.len();
        (0..nv)
            .map(|t| {
                let mut span = RatMatrix::zeros(self.dims[t], 0);
                for (ai, a) in self.algebra.arrows().iter().enumerate() {
                    if a.tgt == t && self.dims[a.src] > 0 {
                        span = span.hstack(&self.arrows[ai]);
                    }
                }
                span.column_space()
            })
            .collect()
    }

    /// Socle: vectors killed by every arrow, per vertex.
    pub fn socle_bases(&self) -> Vec<RatMatrix> {
        let nv = self.dims.len();
        (0..nv)
            .map(|s| {
                let mut stack = RatMatrix::zeros(0, self.dims[s]);
                for (ai, a) in self.algebra.arrows().iter().enumerate() {
                    if a.src == s && self.dims[a.tgt] > 0 {
                        stack = stack.vstack(&self.arrows[ai]);
                    }
                }
                stack.kernel_basis()
            })
            .collect()
    }

    /// Multiplicity of each simple in the top.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        self.radical_bases().iter().zip(&self.dims).map(|(r, d)| d - r.cols()).collect()
    }

    /// Multiplicity of each simple in the socle.
    pub fn socle_multiplicities(&self) -> Vec<usize> {
        self.socle_bases().iter().map(RatMatrix::cols).collect()
    }

    pub fn radical(&self) -> (ModuleRep, ModuleMap) {
        self.submodule(&self.radical_bases())
    }

    pub fn top(&self) -> (ModuleRep, ModuleMap) {
        self.quotient(&self.radical_bases())
    }

    pub fn socle(&self) -> (ModuleRep, ModuleMap) {
        self.submodule(&self.socle_bases())
    }

    /// Projective iff its dimension equals that of the projective cover.
    pub fn is_projective(&self) -> bool {
        let top = self.top_multiplicities();
        let cover: usize = top
            .iter()
            .enumerate()
            .map(|(s, m)| m * self.algebra.projective_dims(s).iter().sum::<usize>())
            .sum();
        cover == self.dim()
    }

    /// Injective iff its dimension equals that of the injective envelope.
    pub fn is_injective(&self) -> bool {
        let soc = self.socle_multiplicities();
        let env: usize = soc
            .iter()
            .enumerate()
            .map(|(t, m)| m * self.algebra.injective_dims(t).iter().sum::<usize>())
            .sum();
        env == self.dim()
    }

    /// Dimensions of the radical layers `X rad^i / X rad^{i+1}`, one
    /// dimension vector per layer.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let rad = cur.radical_bases();
            layers.push(cur.dims.iter().zip(&rad).map(|(d, r)| d - r.cols()).collect());
            cur = cur.submodule(&rad).0;
        }
        layers
    }
}

/// Returns `(projection, section)` for a complement of the column span of
/// `sub` in a space of dimension `n`: `projection · section = I` and
/// `projection · sub = 0`.
pub(crate) fn complement(sub: &RatMatrix, n: usize) -> (RatMatrix, RatMatrix) {
    let k = sub.cols();
    let full = sub.hstack(&RatMatrix::identity(n));
    let pivots = full.rref().pivot_cols;
    let extra: Vec<usize> = pivots.iter().copied().filter(|&p| p >= k).map(|p| p - k).collect();
    let sect = RatMatrix::identity(n).select_columns(&extra);
    let basis = sub.column_space().hstack(&sect);
    let inv = basis.inverse().expect("complemented basis");
    let r = basis.cols() - extra.len();
    let proj = inv.select_rows(&(r..basis.cols()).collect::<Vec<_>>());
    (proj, sect)
}

/// Direct sum with canonical injections and projections. Within each
/// vertex block the summands appear in order.
pub fn direct_sum(algebra: &Arc<AlgebraData>, parts: &[ModuleRep]) -> (ModuleRep, Vec<ModuleMap>, Vec<ModuleMap>) {
    let nv = algebra.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|s| parts.iter().map(|p| p.dims[s]).sum()).collect();
    let arrows = algebra
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = RatMatrix::zeros(dims[a.tgt], dims[a.src]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                m.set_block(r, c, &p.arrows[ai]);
                r += p.dims[a.tgt];
                c += p.dims[a.src];
            }
            m
        })
        .collect();
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offs = vec![0; nv];
    for p in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for s in 0..nv {
            let mut i = RatMatrix::zeros(dims[s], p.dims[s]);
            i.set_block(offs[s], 0, &RatMatrix::identity(p.dims[s]));
            proj.push(i.transpose());
            inj.push(i);
            offs[s] += p.dims[s];
        }
        injections.push(ModuleMap { blocks: inj });
        projections.push(ModuleMap { blocks: proj });
    }
    let sum = ModuleRep { algebra: algebra.clone(), dims, arrows };
    (sum, injections, projections)
}

impl ModuleMap {
    pub fn from_blocks(blocks: Vec<RatMatrix>) -> Self {
        ModuleMap { blocks }
    }

    /// Checks shapes and the intertwining equations against `source` and `target`.
    pub fn new(source: &ModuleRep, target: &ModuleRep, blocks: Vec<RatMatrix>) -> Result<Self> {
        let f = ModuleMap { blocks };
        if !f.is_homomorphism(source, target) {
            return Err(Error::InvalidMap("blocks do not intertwine the actions".into()));
        }
        Ok(f)
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> Self {
        ModuleMap {
            blocks: source.dims.iter().zip(&target.dims).map(|(&s, &t)| RatMatrix::zeros(t, s)).collect(),
        }
    }

    pub fn identity(x: &ModuleRep) -> Self {
        ModuleMap { blocks: x.dims.iter().map(|&d| RatMatrix::identity(d)).collect() }
    }

    pub fn blocks(&self) -> &[RatMatrix] {
        &self.blocks
    }

    pub fn block(&self, s: usize) -> &RatMatrix {
        &self.blocks[s]
    }

    pub fn source_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(RatMatrix::cols).collect()
    }

    pub fn target_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(RatMatrix::rows).collect()
    }

    /// Whole block-diagonal matrix, `dim target × dim source`.
    pub fn matrix(&self) -> RatMatrix {
        let r: usize = self.blocks.iter().map(RatMatrix::rows).sum();
        let c: usize = self.blocks.iter().map(RatMatrix::cols).sum();
        let mut m = RatMatrix::zeros(r, c);
        let (mut ro, mut co) = (0, 0);
        for b in &self.blocks {
            m.set_block(ro, co, b);
            ro += b.rows();
            co += b.cols();
        }
        m
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(RatMatrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        self.blocks.iter().map(RatMatrix::inverse).collect::<Option<Vec<_>>>().map(|blocks| ModuleMap { blocks })
    }

    /// Transposed blocks: the dual map `D Y → D X`.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(RatMatrix::transpose).collect() }
    }

    /// Block entries concatenated row-major, vertex by vertex.
    pub fn flatten(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// `trace(self ∘ other)` for `self: Y → X`, `other: X → Y`.
    pub fn trace_of_composite(&self, other: &ModuleMap) -> Rational {
        let mut t = Rational::zero();
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            // tr(AB) = Σ_ij A_ij B_ji
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    let x = &a[(i, j)];
                    if !x.is_zero() {
                        let y = &b[(j, i)];
                        if !y.is_zero() {
                            t += &(x * y);
                        }
                    }
                }
            }
        }
        t
    }

    /// Whether the blocks intertwine the arrow actions of `source` and `target`.
    pub fn is_homomorphism(&self, source: &ModuleRep, target: &ModuleRep) -> bool {
        if !source.same_algebra(target) || self.blocks.len() != source.dims.len() {
            return false;
        }
        for (s, b) in self.blocks.iter().enumerate() {
            if b.rows() != target.dims[s] || b.cols() != source.dims[s] {
                return false;
            }
        }
        source.algebra.arrows().iter().enumerate().all(|(ai, a)| {
            self.blocks[a.tgt].mul(&source.arrows[ai]) == target.arrows[ai].mul(&self.blocks[a.src])
        })
    }

    /// Kernel submodule of `self: source → target`, with inclusion.
    pub fn kernel(&self, source: &ModuleRep) -> (ModuleRep, ModuleMap) {
        let bases: Vec<RatMatrix> = self.blocks.iter().map(RatMatrix::kernel_basis).collect();
        source.submodule(&bases)
    }

    /// Image submodule of `self` inside `target`, with inclusion.
    pub fn image(&self, target: &ModuleRep) -> (ModuleRep, ModuleMap) {
        let bases: Vec<RatMatrix> = self.blocks.iter().map(RatMatrix::column_space).collect();
        target.submodule(&bases)
    }

    /// Cokernel of `self` with the projection from `target`.
    pub fn cokernel(&self, target: &ModuleRep) -> (ModuleRep, ModuleMap) {
        let bases: Vec<RatMatrix> = self.blocks.iter().map(RatMatrix::column_space).collect();
        target.quotient(&bases)
    }
}
