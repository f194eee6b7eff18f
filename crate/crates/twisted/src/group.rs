//! Finite groups as dense multiplication tables. The identity is always index 0.

use crate::error::{invalid, Result};

pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Builds a group from a full multiplication table and checks the axioms exhaustively.
    pub fn from_table(mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return invalid("empty group table");
        }
        if order > MAX_ORDER {
            return invalid(format!("group order {order} exceeds {MAX_ORDER}"));
        }
        if labels.len() != order {
            return invalid("label count does not match order");
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &mul {
            if row.len() != order {
                return invalid("multiplication table is not square");
            }
            if row.iter().any(|&x| x >= order) {
                return invalid("table entry out of range");
            }
            flat.extend_from_slice(row);
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if flat[a * order + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
        }
        if inv.contains(&usize::MAX) {
            return invalid("some element has no inverse");
        }
        let g = GroupTable {
            order,
            mul: flat,
            inv,
            labels,
        };
        g.check_axioms()?;
        Ok(g)
    }

    fn from_parts_unchecked(order: usize, mul: Vec<usize>, labels: Vec<String>) -> Self {
        let mut inv = vec![0; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| mul[a * order + b] == 0).unwrap_or(0);
        }
        GroupTable {
            order,
            mul,
            inv,
            labels,
        }
    }

    /// Exhaustive associativity, unit and inverse checks.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return invalid(format!("index 0 is not a two-sided unit at {}", self.labels[a]));
            }
            let i = self.inv[a];
            if self.mul(a, i) != 0 || self.mul(i, a) != 0 {
                return invalid(format!("no two-sided inverse for {}", self.labels[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return invalid(format!(
                            "not associative at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// t^k for any integer k.
    pub fn power(&self, t: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(t) } else { t };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, t: usize) -> usize {
        let mut acc = t;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, t);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks that `elements` is a subgroup and returns it as a group, together with the
    /// embedding (new index -> old index). The identity is moved to the front.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        let mut emb: Vec<usize> = Vec::with_capacity(elements.len());
        if !elements.contains(&0) {
            return invalid("subgroup must contain the identity");
        }
        emb.push(0);
        for &e in elements {
            if e >= self.order {
                return invalid("subgroup element out of range");
            }
            if !emb.contains(&e) {
                emb.push(e);
            }
        }
        let pos = |x: usize| emb.iter().position(|&y| y == x);
        let m = emb.len();
        let mut table = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                match pos(self.mul(emb[i], emb[j])) {
                    Some(k) => table[i][j] = k,
                    None => return invalid("element list is not closed under multiplication"),
                }
            }
        }
        let labels = emb.iter().map(|&e| self.labels[e].clone()).collect();
        Ok((GroupTable::from_table(table, labels)?, emb))
    }
}

/// Z/n with mul(p,q) = (p+q) mod n.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return invalid("cyclic group of order 0");
    }
    if n > MAX_ORDER {
        return invalid(format!("group order {n} exceeds {MAX_ORDER}"));
    }
    let mut mul = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            mul.push((p + q) % n);
        }
    }
    let labels = (0..n).map(|k| k.to_string()).collect();
    Ok(GroupTable::from_parts_unchecked(n, mul, labels))
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

/// Componentwise product, indexed row-major: (a, b) has index a * |h| + b.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    if order > MAX_ORDER {
        return invalid(format!("group order {order} exceeds {MAX_ORDER}"));
    }
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / n, a % n);
        for b in 0..order {
            let (b1, b2) = (b / n, b % n);
            mul.push(g.mul(a1, b1) * n + h.mul(a2, b2));
        }
    }
    let labels = (0..order)
        .map(|a| {
            format!(
                "({},{})",
                strip_parens(g.label(a / n)),
                strip_parens(h.label(a % n))
            )
        })
        .collect();
    Ok(GroupTable::from_parts_unchecked(order, mul, labels))
}

/// (Z/2)^n as an iterated direct product; the first coordinate is the most significant bit.
pub fn z2_power(n: usize) -> Result<GroupTable> {
    let z2 = make_cyclic(2)?;
    if n == 0 {
        return make_cyclic(1);
    }
    let mut g = z2.clone();
    for _ in 1..n {
        g = direct_product(&g, &z2)?;
    }
    Ok(g)
}

/// Finite subsets of an ordered label list under symmetric difference. Bit i of an
/// element index stands for the i-th label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetGroup {
    base: Vec<String>,
    group: GroupTable,
}

pub const MAX_SUBSET_LABELS: usize = 12;

pub fn make_subset_group<S: AsRef<str>>(labels: &[S]) -> Result<SubsetGroup> {
    let base: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    for (i, l) in base.iter().enumerate() {
        if base[..i].contains(l) {
            return invalid(format!("duplicate label {l}"));
        }
    }
    if base.len() > MAX_SUBSET_LABELS {
        return invalid(format!("at most {MAX_SUBSET_LABELS} labels"));
    }
    let order = 1usize << base.len();
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            mul.push(a ^ b);
        }
    }
    let names = (0..order)
        .map(|a| {
            let parts: Vec<&str> = (0..base.len())
                .filter(|i| a >> i & 1 == 1)
                .map(|i| base[i].as_str())
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let group = GroupTable {
        order,
        inv: (0..order).collect(),
        mul,
        labels: names,
    };
    Ok(SubsetGroup { base, group })
}

impl SubsetGroup {
    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.len()
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn into_group(self) -> GroupTable {
        self.group
    }

    /// Bitmask of a subset given by labels.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        let mut m = 0;
        for l in labels {
            match self.base.iter().position(|b| b == l.as_ref()) {
                Some(i) => m |= 1 << i,
                None => return invalid(format!("unknown label {}", l.as_ref())),
            }
        }
        Ok(m)
    }

    pub fn singleton(&self, i: usize) -> usize {
        1 << i
    }

    pub fn full(&self) -> usize {
        (1 << self.base.len()) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = make_cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z2 = make_cyclic(2).unwrap();
        assert_eq!(z2.mul(1, 1), 0);
        let z4 = make_cyclic(4).unwrap();
        assert_eq!(z4.inv(1), 3);
        assert!(make_cyclic(0).is_err());
        assert!(make_cyclic(MAX_ORDER + 1).is_err());
        z4.check_axioms().unwrap();
    }

    #[test]
    fn products() {
        let z2 = make_cyclic(2).unwrap();
        let k = direct_product(&z2, &z2).unwrap();
        k.check_axioms().unwrap();
        assert!((1..4).all(|t| k.element_order(t) == 2));
        let z4 = make_cyclic(4).unwrap();
        let g = direct_product(&z2, &z4).unwrap();
        assert_eq!(g.order(), 8);
        g.check_axioms().unwrap();
        assert_eq!(g.label(6), "(1,2)");
        assert_eq!(g.mul(g.index_of("(1,1)").unwrap(), g.index_of("(1,3)").unwrap()), 0);
        let triv = make_cyclic(1).unwrap();
        let c = direct_product(&triv, &z4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(c.mul(a, b), z4.mul(a, b));
            }
        }
        let p = z2_power(3).unwrap();
        assert_eq!(p.label(5), "(1,0,1)");
    }

    #[test]
    fn subset_group() {
        let s = make_subset_group::<&str>(&[]).unwrap();
        assert_eq!(s.group().order(), 1);
        let s = make_subset_group(&["1", "2"]).unwrap();
        let a = s.mask_of(&["1"]).unwrap();
        let ab = s.mask_of(&["1", "2"]).unwrap();
        assert_eq!(s.group().mul(a, ab), s.mask_of(&["2"]).unwrap());
        assert_eq!(s.group().label(ab), "{1,2}");
        let s3 = make_subset_group(&["1", "2", "3"]).unwrap();
        s3.group().check_axioms().unwrap();
        assert!((0..8).all(|x| s3.group().mul(x, x) == 0));
        assert!(make_subset_group(&["a", "a"]).is_err());
    }

    #[test]
    fn subgroup_restriction() {
        let z4 = make_cyclic(4).unwrap();
        let (h, emb) = z4.subgroup(&[0, 2]).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(emb, vec![0, 2]);
        assert!(z4.subgroup(&[0, 1]).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(GroupTable::from_table(bad, vec!["e".into(), "a".into()]).is_err());
    }
}
