use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// An arrow `name: from → to`, endpoints given by vertex index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuiverArrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// A finite acyclic quiver with labelled vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<QuiverArrow>,
}

/// A path, read left to right: `arrows[0]` first. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, from, to)` arrows
    /// given by vertex label.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidAlgebra("empty vertex label".into()));
            }
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut names = HashSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::InvalidAlgebra("empty arrow label".into()));
            }
            if !names.insert(name.to_string()) {
                return Err(Error::DuplicateLabel(name.to_string()));
            }
            let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.to_string()));
            out.push(QuiverArrow { name: name.to_string(), from: lookup(from.as_ref())?, to: lookup(to.as_ref())? });
        }
        let q = Quiver { vertices, arrows: out };
        q.check_acyclic()?;
        Ok(q)
    }

    fn check_acyclic(&self) -> Result<()> {
        // Kahn's algorithm; any vertex left over lies on or behind a cycle.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.from == v) {
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    stack.push(a.to);
                }
            }
        }
        if seen == n {
            return Ok(());
        }
        // Report a vertex that actually lies on a cycle.
        let mut v = (0..n).find(|&v| indeg[v] > 0).unwrap();
        let mut visited = HashSet::new();
        while visited.insert(v) {
            v = self.arrows.iter().find(|a| a.to == v && indeg[a.from] > 0).map(|a| a.from).unwrap();
        }
        Err(Error::CyclicQuiver(self.vertices[v].clone()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[QuiverArrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// All paths: trivial paths in vertex order, then longer paths by
    /// length and lexicographically by arrow index.
    pub fn paths(&self) -> Vec<Path> {
        let mut all: Vec<Path> =
            (0..self.vertices.len()).map(|v| Path { src: v, tgt: v, arrows: Vec::new() }).collect();
        let mut frontier: Vec<Path> = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.from == p.tgt {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { src: p.src, tgt: a.to, arrows });
                    }
                }
            }
            next.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Label of a path: arrow names joined by `.`, or `e<vertex>` when trivial.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertices[p.src])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.from, a.to), (a.to, a.from)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A single vertex `1`, no arrows.
    pub fn one_vertex() -> Self {
        Quiver::new(&["1"], &[]).unwrap()
    }

    /// `1 ← 2`.
    pub fn a2() -> Self {
        Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap()
    }

    /// `1 ← 2 ← 3`.
    pub fn a3_linear() -> Self {
        Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]).unwrap()
    }

    /// The Kronecker quiver `1 ⇇ 2`.
    pub fn kronecker() -> Self {
        Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_counts() {
        assert_eq!(Quiver::one_vertex().paths().len(), 1);
        assert_eq!(Quiver::kronecker().paths().len(), 4);
        assert_eq!(Quiver::a3_linear().paths().len(), 6);
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        let cyc = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "3", "1")]);
        match cyc {
            Err(Error::CyclicQuiver(v)) => assert!(v == "1" || v == "2"),
            other => panic!("expected a cycle, got {other:?}"),
        }
        assert!(matches!(Quiver::new(&["1"], &[("l", "1", "1")]), Err(Error::CyclicQuiver(_))));
        assert!(matches!(Quiver::new(&["1", "1"], &[]), Err(Error::DuplicateLabel(_))));
        assert!(matches!(
            Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "1", "2")]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(Quiver::new(&["1"], &[("a", "1", "9")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn connectivity() {
        assert!(Quiver::kronecker().is_connected());
        assert!(!Quiver::new(&["1", "2"], &[]).unwrap().is_connected());
    }
}
