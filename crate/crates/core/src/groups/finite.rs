use std::collections::BTreeSet;

use super::GroupError;

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

/// A subgroup of a finite group as a sorted element set.
pub type FiniteSubgroup = BTreeSet<usize>;

impl FiniteGroupTable {
    pub fn new(mult: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self, GroupError> {
        let n = mult.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if names.len() != n {
            return Err(GroupError::InvalidTable(format!("{} names for order {n}", names.len())));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::InvalidTable(format!("row {i} is malformed")));
            }
        }
        for a in 0..n {
            if mult[0][a] != a || mult[a][0] != a {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| mult[a][b] == 0 && mult[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return Err(GroupError::InvalidTable(format!("element {a} has no inverse"))),
            }
        }
        Ok(FiniteGroupTable { mult, inverse, names })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1, "k")
    }

    /// `C_n` with elements named `e, prefix, prefix^2, ...`.
    pub fn cyclic(n: usize, prefix: &str) -> Self {
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => prefix.to_string(),
                _ => format!("{prefix}^{i}"),
            })
            .collect();
        Self::new(mult, names).expect("cyclic table is valid")
    }

    /// `C_2 × C_2` with elements `e, x, y, xy`.
    pub fn klein() -> Self {
        let mult = (0..4).map(|a: usize| (0..4).map(|b: usize| a ^ b).collect()).collect();
        let names = ["e", "x", "y", "xy"].iter().map(|s| s.to_string()).collect();
        Self::new(mult, names).expect("klein table is valid")
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g a g⁻¹`
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> FiniteSubgroup {
        let mut set: FiniteSubgroup = BTreeSet::from([0]);
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn all_subgroups(&self) -> Vec<FiniteSubgroup> {
        let mut subs: BTreeSet<FiniteSubgroup> = (0..self.order()).map(|a| self.closure([a])).collect();
        loop {
            let current: Vec<FiniteSubgroup> = subs.iter().cloned().collect();
            let mut grew = false;
            for a in &current {
                for b in &current {
                    let joined = self.closure(a.iter().chain(b.iter()).copied());
                    grew |= subs.insert(joined);
                }
            }
            if !grew {
                break;
            }
        }
        let mut v: Vec<_> = subs.into_iter().collect();
        v.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        v
    }

    pub fn conjugate_subgroup(&self, g: usize, s: &FiniteSubgroup) -> FiniteSubgroup {
        s.iter().map(|&a| self.conj(g, a)).collect()
    }

    /// One representative per conjugacy class of subgroups, smallest first.
    pub fn subgroup_classes(&self) -> Vec<FiniteSubgroup> {
        let mut reps: Vec<FiniteSubgroup> = Vec::new();
        for s in self.all_subgroups() {
            let seen = reps
                .iter()
                .any(|r| r.len() == s.len() && (0..self.order()).any(|g| self.conjugate_subgroup(g, r) == s));
            if !seen {
                reps.push(s);
            }
        }
        reps
    }

    pub fn normalizer(&self, s: &FiniteSubgroup) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.conjugate_subgroup(g, s) == *s)
            .collect()
    }

    pub fn centralizer(&self, s: &FiniteSubgroup) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| s.iter().all(|&a| self.conj(g, a) == a))
            .collect()
    }

    /// A small generating set of a subgroup.
    pub fn generators_of(&self, s: &FiniteSubgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: FiniteSubgroup = BTreeSet::from([0]);
        for &a in s {
            if !span.contains(&a) {
                gens.push(a);
                span = self.closure(gens.iter().copied());
            }
        }
        gens
    }

    /// Checks that `f` (given on all elements) is a homomorphism into `target`.
    pub fn is_hom_to<T: PartialEq>(&self, f: impl Fn(usize) -> T, compose: impl Fn(&T, &T) -> T) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| f(self.mul(a, b)) == compose(&f(a), &f(b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroupTable {
        // permutations of {0,1,2} in a fixed order
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mult = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let names = (0..6).map(|i| format!("p{i}")).collect();
        FiniteGroupTable::new(mult, names).unwrap()
    }

    #[test]
    fn rejects_non_associative() {
        let mult = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        let names = vec!["e".into(), "a".into(), "b".into()];
        assert!(matches!(
            FiniteGroupTable::new(mult, names),
            Err(GroupError::InvalidTable(_))
        ));
    }

    #[test]
    fn subgroup_classes_of_s3() {
        let g = s3();
        let classes = g.subgroup_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        assert_eq!(g.all_subgroups().len(), 6);
    }

    #[test]
    fn klein_has_five_subgroups() {
        let g = FiniteGroupTable::klein();
        assert_eq!(g.all_subgroups().len(), 5);
        assert_eq!(g.subgroup_classes().len(), 5);
    }

    #[test]
    fn cyclic_orders() {
        let g = FiniteGroupTable::cyclic(4, "r");
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
        assert_eq!(g.name(3), "r^3");
    }
}
