use crate::error::{Error, Result};

/// A finite group given by its multiplication table; `mul[a][b] = a b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses on the full table.
    pub fn from_table(mul: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!(
                    "row {a} contains {bad}, outside 0..{n}"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = match names {
            Some(names) if names.len() != n => {
                return Err(Error::InvalidGroup(format!(
                    "{} names for {n} elements",
                    names.len()
                )))
            }
            Some(names) => names,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            mul,
            inv,
            identity,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Cyclic group `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(mul, Some((0..n).map(|k| format!("r{k}")).collect()))
    }

    /// `G x H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let mul = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.names[x / m], other.names[x % m]))
            .collect();
        FiniteGroup::from_table(mul, Some(names)).expect("products of groups are groups")
    }

    /// Checks that `h` is a subgroup closed under conjugation; returns its sorted elements.
    pub fn normal_subgroup(&self, h: &[usize]) -> Result<Vec<usize>> {
        let mut elems = h.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&x| x >= self.order()) {
            return Err(Error::NotNormal(format!(
                "element {bad} is not in the group"
            )));
        }
        let member = |x: usize| elems.binary_search(&x).is_ok();
        if !member(self.identity) {
            return Err(Error::NotNormal("the identity is missing".into()));
        }
        for &a in &elems {
            for &b in &elems {
                if !member(self.mul(a, b)) {
                    return Err(Error::NotNormal(format!(
                        "not closed: {a} * {b} = {}",
                        self.mul(a, b)
                    )));
                }
            }
        }
        for g in self.elements() {
            for &a in &elems {
                let c = self.mul(self.mul(g, a), self.inv(g));
                if !member(c) {
                    return Err(Error::NotNormal(format!(
                        "conjugate of {a} by {g} is {c}, outside the subgroup"
                    )));
                }
            }
        }
        Ok(elems)
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for a in self.elements() {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = self
                .elements()
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }
}
