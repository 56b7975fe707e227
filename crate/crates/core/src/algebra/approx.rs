use super::hom::{span_rank_maps, HomSpace};
use super::module::{direct_sum, ModuleMap, ModuleRep};
use crate::error::Result;
use crate::linalg::{Rational, SparseEchelon};

/// `add(L_0 ⊕ … ⊕ L_{r-1})` for pairwise non-isomorphic indecomposables,
/// with Hom spaces and radical maps between the generators precomputed.
#[derive(Clone, Debug)]
pub struct AddCategory {
    summands: Vec<ModuleRep>,
    /// `homs[i][j] = Hom(L_i, L_j)`
    homs: Vec<Vec<HomSpace>>,
    /// `radical[i][j]`: basis of `rad(L_i, L_j)`
    radical: Vec<Vec<Vec<ModuleMap>>>,
}

/// A right `add`-approximation `g: L → X` with `L = ⊕_k L_{sources[k]}`
/// and `g = Σ_k components[k] ∘ π_k`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub source: ModuleRep,
    pub map: ModuleMap,
    pub sources: Vec<usize>,
    pub components: Vec<ModuleMap>,
}

impl AddCategory {
    pub fn new(summands: Vec<ModuleRep>) -> Result<Self> {
        for pair in summands.windows(2) {
            pair[0].check_same_algebra(&pair[1])?;
        }
        let r = summands.len();
        let homs: Vec<Vec<HomSpace>> =
            (0..r).map(|i| (0..r).map(|j| HomSpace::new(&summands[i], &summands[j])).collect()).collect();
        let radical = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let basis = homs[i][j].basis();
                        if i != j {
                            return basis.to_vec();
                        }
                        // Local endomorphism ring with rational residue: the
                        // radical is the kernel of the trace.
                        let traces: Vec<Rational> = basis.iter().map(|f| f.matrix().trace()).collect();
                        let p = traces.iter().position(|t| !t.is_zero()).expect("identity has nonzero trace");
                        basis
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != p)
                            .map(|(k, f)| f.sub(&basis[p].scale(&(&traces[k] / &traces[p]))))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(AddCategory { summands, homs, radical })
    }

    pub fn summands(&self) -> &[ModuleRep] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    /// Minimal right approximation of `X`.
    ///
    /// The multiplicity of `L_i` is the dimension of `Hom(L_i, X)` modulo the
    /// maps `φ ∘ r` with `r ∈ rad(L_i, L_j)` and `φ ∈ Hom(L_j, X)`; the chosen
    /// components are a basis of a complement.
    pub fn right_approximation(&self, x: &ModuleRep) -> Approximation {
        let r = self.len();
        let to_x: Vec<HomSpace> = self.summands.iter().map(|l| HomSpace::new(l, x)).collect();
        let mut sources = Vec::new();
        let mut components = Vec::new();
        for i in 0..r {
            let h = &to_x[i];
            if h.dim() == 0 {
                continue;
            }
            let mut span = SparseEchelon::new(h.dim());
            for j in 0..r {
                for rad in &self.radical[i][j] {
                    for phi in to_x[j].basis() {
                        span.insert_dense(&h.coords(&phi.compose(rad)));
                    }
                }
            }
            for (k, f) in h.basis().iter().enumerate() {
                let mut e = vec![Rational::zero(); h.dim()];
                e[k] = Rational::one();
                if span.insert_dense(&e) {
                    sources.push(i);
                    components.push(f.clone());
                }
            }
        }
        self.assemble(x, sources, components)
    }

    fn assemble(&self, x: &ModuleRep, sources: Vec<usize>, components: Vec<ModuleMap>) -> Approximation {
        let parts: Vec<ModuleRep> = sources.iter().map(|&i| self.summands[i].clone()).collect();
        let (source, _, projections) = direct_sum(x.algebra(), &parts);
        let mut map = ModuleMap::zero(&source, x);
        for (c, p) in components.iter().zip(&projections) {
            map = map.add(&c.compose(p));
        }
        Approximation { source, map, sources, components }
    }

    /// Whether every map `L_j → X` factors through `Σ components`.
    pub fn is_right_approximation(&self, x: &ModuleRep, sources: &[usize], components: &[ModuleMap]) -> bool {
        (0..self.len()).all(|j| {
            let need = HomSpace::new(&self.summands[j], x).dim();
            if need == 0 {
                return true;
            }
            let mut maps = Vec::new();
            for (&i, c) in sources.iter().zip(components) {
                for h in self.homs[j][i].basis() {
                    maps.push(c.compose(h));
                }
            }
            span_rank_maps(maps.iter()) == need
        })
    }

    /// Whether no single source summand can be dropped.
    pub fn is_right_minimal(&self, x: &ModuleRep, approx: &Approximation) -> bool {
        (0..approx.sources.len()).all(|k| {
            let mut s = approx.sources.clone();
            let mut c = approx.components.clone();
            s.remove(k);
            c.remove(k);
            !self.is_right_approximation(x, &s, &c)
        })
    }
}
