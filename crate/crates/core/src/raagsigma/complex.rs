use std::collections::BTreeSet;

use super::RaagError;

/// A flag complex on labeled vertices: its simplices are the cliques of the edge graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagComplex {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

/// A simplex as a sorted vertex list. The empty simplex has dimension −1.
pub type Simplex = Vec<usize>;

impl FlagComplex {
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(usize, usize)]) -> Result<Self, RaagError> {
        let n = labels.len();
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(RaagError::InvalidComplex("duplicate vertex label".into()));
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(RaagError::InvalidComplex(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(RaagError::InvalidComplex(format!("loop at {}", labels[a])));
            }
            if !adj[a].insert(b) {
                return Err(RaagError::InvalidComplex(format!(
                    "repeated edge ({},{})",
                    labels[a], labels[b]
                )));
            }
            adj[b].insert(a);
        }
        Ok(FlagComplex { labels, adj })
    }

    /// Builds from vertex labels and edges given by label.
    pub fn from_labels<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self, RaagError> {
        let find = |s: &S| {
            labels
                .iter()
                .position(|l| l.as_ref() == s.as_ref())
                .ok_or_else(|| RaagError::InvalidComplex(format!("unknown vertex {}", s.as_ref())))
        };
        let idx = edges
            .iter()
            .map(|(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>, RaagError>>()?;
        Self::new(labels, &idx)
    }

    pub fn empty() -> Self {
        FlagComplex {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// The cycle graph on `n ≥ 4` vertices labeled `1..=n`.
    pub fn cycle(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(&labels, &edges).expect("cycle is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    /// All nonempty simplices, grouped by dimension.
    pub fn simplices(&self) -> Vec<Vec<Simplex>> {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        let mut layer: Vec<Simplex> = (0..self.vertex_count()).map(|v| vec![v]).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for s in &layer {
                let last = *s.last().expect("nonempty");
                for &w in self.adj[last].range(last + 1..) {
                    if s.iter().all(|&u| self.adjacent(u, w)) {
                        let mut t = s.clone();
                        t.push(w);
                        next.push(t);
                    }
                }
            }
            by_dim.push(layer);
            layer = next;
        }
        by_dim
    }

    /// Dimension of the complex; −1 when empty.
    pub fn dimension(&self) -> i64 {
        self.simplices().len() as i64 - 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices()
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// The full subcomplex on a vertex subset.
    pub fn induced(&self, vertices: &BTreeSet<usize>) -> SubcomplexView {
        let parent: Vec<usize> = vertices.iter().copied().collect();
        let labels: Vec<&str> = parent.iter().map(|&v| self.label(v)).collect();
        let pos = |v: usize| parent.iter().position(|&p| p == v);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| Some((pos(a)?, pos(b)?)))
            .collect();
        let complex = FlagComplex::new(&labels, &edges).expect("induced subcomplex is valid");
        SubcomplexView {
            parent_vertices: parent,
            complex,
        }
    }

    pub fn whole(&self) -> SubcomplexView {
        self.induced(&(0..self.vertex_count()).collect())
    }

    /// The link of a simplex: vertices outside it adjacent to all of it.
    pub fn link_vertices(&self, sigma: &[usize]) -> BTreeSet<usize> {
        (0..self.vertex_count())
            .filter(|v| !sigma.contains(v) && sigma.iter().all(|&u| self.adjacent(u, *v)))
            .collect()
    }

    /// `perm` maps edges to edges (and non-edges to non-edges).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        if perm.len() != n || perm.iter().collect::<BTreeSet<_>>().len() != n || perm.iter().any(|&p| p >= n) {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.adjacent(a, b) == self.adjacent(perm[a], perm[b])))
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut seen = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertex_count()
    }
}

/// A full subcomplex together with the parent indices of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomplexView {
    parent_vertices: Vec<usize>,
    complex: FlagComplex,
}

impl SubcomplexView {
    pub fn parent_vertices(&self) -> &[usize] {
        &self.parent_vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.parent_vertices.iter().copied().collect()
    }

    pub fn complex(&self) -> &FlagComplex {
        &self.complex
    }

    pub fn labels(&self) -> &[String] {
        self.complex.labels()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn star() -> FlagComplex {
        FlagComplex::from_labels(&["1", "2", "3", "4"], &[("1", "4"), ("2", "4"), ("3", "4")]).unwrap()
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(FlagComplex::new(&["a"], &[(0, 0)]).is_err());
        assert!(FlagComplex::new(&["a", "b"], &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn cliques_of_a_triangle_plus_tail() {
        let l = FlagComplex::new(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let s = l.simplices();
        assert_eq!(s.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 4, 1]);
        assert_eq!(l.dimension(), 2);
        assert_eq!(l.euler_characteristic(), 1);
    }

    #[test]
    fn star_structure() {
        let l = star();
        assert!(l.is_connected());
        assert!(l.is_automorphism(&[1, 0, 2, 3]));
        assert!(!l.is_automorphism(&[3, 1, 2, 0]));
        let sub = l.induced(&BTreeSet::from([2, 3]));
        assert_eq!(sub.labels(), &["3", "4"]);
        assert_eq!(sub.complex().edges(), vec![(0, 1)]);
    }

    #[test]
    fn hexagon_rotation_is_automorphism() {
        let h = FlagComplex::cycle(6);
        let rot: Vec<usize> = (0..6).map(|i| (i + 3) % 6).collect();
        assert!(h.is_automorphism(&rot));
        assert_eq!(h.euler_characteristic(), 0);
    }
}
