use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::cover::{injective_envelope, projective_cover};
use super::data::AlgebraData;
use super::hom::{span_rank_maps, HomSpace};
use super::module::{ModuleMap, ModuleRep};
use crate::error::{Error, Result};

/// A homological dimension computed up to a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Bounded {
    Exact(usize),
    /// The computation stopped at the cap; the true value is at least this.
    AtLeast(usize),
}

impl Bounded {
    /// Known value or lower bound.
    pub fn value(self) -> usize {
        match self {
            Bounded::Exact(v) | Bounded::AtLeast(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bounded::Exact(_))
    }

    /// Certainly `≥ n`.
    pub fn is_at_least(self, n: usize) -> bool {
        self.value() >= n
    }

    /// Certainly `≤ n`.
    pub fn is_at_most(self, n: usize) -> bool {
        matches!(self, Bounded::Exact(v) if v <= n)
    }

    /// Maximum, where any capped operand makes the result capped.
    pub fn max(self, other: Bounded) -> Bounded {
        let v = self.value().max(other.value());
        if self.is_exact() && other.is_exact() {
            Bounded::Exact(v)
        } else {
            Bounded::AtLeast(v)
        }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(v) => write!(f, "{v}"),
            Bounded::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution `… → P_1 → P_0 → X → 0` or minimal
/// injective coresolution `0 → X → I_0 → I_1 → …`.
///
/// For a projective resolution `maps[0]: P_0 → X` and `maps[i]: P_i → P_{i-1}`;
/// for an injective one `maps[0]: X → I_0` and `maps[i]: I_{i-1} → I_i`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub terms: Vec<ModuleRep>,
    pub maps: Vec<ModuleMap>,
    /// Indecomposable summands of each term, by vertex.
    pub vertices: Vec<Vec<usize>>,
    pub length: Bounded,
}

impl Resolution {
    /// Rank-count exactness at every term, including at `X`.
    pub fn is_exact(&self, x: &ModuleRep) -> bool {
        let n = self.terms.len();
        match self.kind {
            ResolutionKind::Projective => {
                if n == 0 {
                    return x.is_zero();
                }
                if !self.maps[0].is_surjective() {
                    return false;
                }
                (0..n).all(|i| {
                    let ker = self.terms[i].dim() - self.maps[i].rank();
                    let img = self.maps.get(i + 1).map_or(0, ModuleMap::rank);
                    ker == img
                })
            }
            ResolutionKind::Injective => {
                if n == 0 {
                    return x.is_zero();
                }
                if !self.maps[0].is_injective() {
                    return false;
                }
                (0..n).all(|i| {
                    let img = self.maps[i].rank();
                    let ker = self.terms[i].dim() - self.maps.get(i + 1).map_or(0, ModuleMap::rank);
                    ker == img
                })
            }
        }
    }
}

/// Minimal projective resolution, computed through `P_cap` at most.
pub fn projective_resolution(x: &ModuleRep, cap: usize) -> Resolution {
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        terms: Vec::new(),
        maps: Vec::new(),
        vertices: Vec::new(),
        length: Bounded::Exact(0),
    };
    if x.is_zero() {
        return res;
    }
    let mut cur = x.clone();
    let mut into_prev: Option<ModuleMap> = None;
    for i in 0..=cap {
        let cover = projective_cover(&cur);
        let d = match &into_prev {
            Some(incl) => incl.compose(&cover.map),
            None => cover.map.clone(),
        };
        let (k, incl) = cover.map.kernel(&cover.module);
        res.terms.push(cover.module);
        res.maps.push(d);
        res.vertices.push(cover.vertices);
        if k.is_zero() {
            res.length = Bounded::Exact(i);
            return res;
        }
        cur = k;
        into_prev = Some(incl);
    }
    res.length = Bounded::AtLeast(cap + 1);
    res
}

/// Minimal injective coresolution, computed through `I_cap` at most.
pub fn injective_resolution(x: &ModuleRep, cap: usize) -> Resolution {
    let mut res = Resolution {
        kind: ResolutionKind::Injective,
        terms: Vec::new(),
        maps: Vec::new(),
        vertices: Vec::new(),
        length: Bounded::Exact(0),
    };
    if x.is_zero() {
        return res;
    }
    let mut cur = x.clone();
    let mut from_prev: Option<ModuleMap> = None;
    for i in 0..=cap {
        let env = injective_envelope(&cur);
        let d = match &from_prev {
            Some(proj) => env.map.compose(proj),
            None => env.map.clone(),
        };
        let (c, proj) = env.map.cokernel(&env.module);
        res.terms.push(env.module);
        res.maps.push(d);
        res.vertices.push(env.vertices);
        if c.is_zero() {
            res.length = Bounded::Exact(i);
            return res;
        }
        cur = c;
        from_prev = Some(proj);
    }
    res.length = Bounded::AtLeast(cap + 1);
    res
}

pub fn projective_dimension(x: &ModuleRep, cap: usize) -> Bounded {
    projective_resolution(x, cap).length
}

pub fn injective_dimension(x: &ModuleRep, cap: usize) -> Bounded {
    injective_resolution(x, cap).length
}

/// Maximum projective dimension of the simple modules.
pub fn global_dimension(algebra: &Arc<AlgebraData>, cap: usize) -> Bounded {
    (0..algebra.vertex_count())
        .map(|s| projective_dimension(&ModuleRep::simple(algebra.clone(), s), cap))
        .fold(Bounded::Exact(0), Bounded::max)
}

/// Number of leading projective terms in the minimal injective coresolution
/// of `x`. A coresolution that ends, or stays projective through `cap`
/// terms, reports `AtLeast(cap)`.
pub fn dominant_dimension_of(x: &ModuleRep, cap: usize) -> Bounded {
    let mut cur = x.clone();
    for i in 0..cap {
        if cur.is_zero() {
            return Bounded::AtLeast(cap);
        }
        let env = injective_envelope(&cur);
        if !env.module.is_projective() {
            return Bounded::Exact(i);
        }
        cur = env.map.cokernel(&env.module).0;
    }
    Bounded::AtLeast(cap)
}

/// Dominant dimension of the algebra: that of its regular module.
pub fn dominant_dimension(algebra: &Arc<AlgebraData>, cap: usize) -> Bounded {
    dominant_dimension_of(&ModuleRep::regular(algebra.clone()), cap)
}

/// `dim Ext¹(Y, X)` from `P_2 → P_1 → P_0` of the minimal projective
/// resolution of `Y`: `dim ker(Hom(P_1,X) → Hom(P_2,X)) − rank(Hom(P_0,X) → Hom(P_1,X))`.
pub fn ext1_dim(y: &ModuleRep, x: &ModuleRep) -> usize {
    let res = projective_resolution(y, 2);
    if res.terms.len() < 2 {
        return 0;
    }
    let h1 = HomSpace::new(&res.terms[1], x);
    let into_p2 = match res.terms.get(2) {
        Some(_) => {
            let d2 = &res.maps[2];
            span_rank_maps(h1.basis().iter().map(|g| g.compose(d2)).collect::<Vec<_>>().iter())
        }
        None => 0,
    };
    let h0 = HomSpace::new(&res.terms[0], x);
    let d1 = &res.maps[1];
    let from_p0 = span_rank_maps(h0.basis().iter().map(|f| f.compose(d1)).collect::<Vec<_>>().iter());
    h1.dim() - into_p2 - from_p0
}

/// `dim Hom(Y, Z)` minus the dimension of the maps factoring through the
/// listed projective-injective modules.
pub fn stable_hom_dim(y: &ModuleRep, z: &ModuleRep, through: &[ModuleRep]) -> Result<usize> {
    for (i, q) in through.iter().enumerate() {
        q.check_same_algebra(y)?;
        if !q.is_projective() || !q.is_injective() {
            return Err(Error::NotProjInjective(format!("entry {i} of the list")));
        }
    }
    let total = HomSpace::new(y, z).dim();
    if total == 0 {
        return Ok(0);
    }
    let mut composites = Vec::new();
    for q in through {
        let into = HomSpace::new(y, q);
        if into.dim() == 0 {
            continue;
        }
        let out = HomSpace::new(q, z);
        for g in out.basis() {
            for f in into.basis() {
                composites.push(g.compose(f));
            }
        }
    }
    Ok(total - span_rank_maps(composites.iter()))
}
