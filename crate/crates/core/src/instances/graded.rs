//! Graded posets with a unique minimum and maximum: ranks, intervals,
//! Möbius functions, flag f-vectors, and the lattice of lower ideals.

use std::sync::OnceLock;

use super::poset::FinitePoset;
use crate::compositions::Composition;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct GradedPoset {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
    rank: Vec<usize>,
    mobius: OnceLock<Vec<Vec<i64>>>,
}

impl Clone for GradedPoset {
    fn clone(&self) -> Self {
        GradedPoset {
            poset: self.poset.clone(),
            bottom: self.bottom,
            top: self.top,
            rank: self.rank.clone(),
            mobius: OnceLock::new(),
        }
    }
}

impl GradedPoset {
    /// Validate a unique `0`, a unique `1`, and equal length of all maximal
    /// chains.
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let labels = |v: &[usize]| v.iter().map(|&i| poset.labels()[i].clone()).collect::<Vec<_>>().join(", ");
        let min = poset.minimal();
        let max = poset.maximal();
        if min.len() != 1 {
            return Err(Error::InvalidPoset(format!("expected a unique minimum, found [{}]", labels(&min))));
        }
        if max.len() != 1 {
            return Err(Error::InvalidPoset(format!("expected a unique maximum, found [{}]", labels(&max))));
        }
        let (bottom, top) = (min[0], max[0]);
        let n = poset.size();
        let covers = poset.covers();
        let order = poset.linear_extension();
        // Shortest and longest cover paths from the bottom, with predecessors.
        let mut short = vec![(usize::MAX, usize::MAX); n];
        let mut long = vec![(0usize, usize::MAX); n];
        short[bottom] = (0, usize::MAX);
        for &v in &order {
            for &(a, b) in covers.iter().filter(|(a, _)| *a == v) {
                if short[a].0 + 1 < short[b].0 {
                    short[b] = (short[a].0 + 1, a);
                }
                if long[a].0 + 1 > long[b].0 || long[b].1 == usize::MAX {
                    long[b] = (long[a].0 + 1, a);
                }
            }
        }
        if short[top].0 != long[top].0 {
            let trace = |table: &[(usize, usize)]| {
                let mut path = vec![top];
                let mut v = top;
                while v != bottom {
                    v = table[v].1;
                    path.push(v);
                }
                path.reverse();
                labels(&path)
            };
            return Err(Error::InvalidPoset(format!(
                "maximal chains of different lengths: [{}] and [{}]",
                trace(&short),
                trace(&long)
            )));
        }
        // Every element lies on a maximal chain, so its rank is well defined.
        for v in 0..n {
            if short[v].0 != long[v].0 {
                return Err(Error::InvalidPoset(format!(
                    "element `{}` is reached by chains of lengths {} and {}",
                    poset.labels()[v],
                    short[v].0,
                    long[v].0
                )));
            }
        }
        let rank = short.iter().map(|s| s.0).collect();
        Ok(GradedPoset { poset, bottom, top, rank, mobius: OnceLock::new() })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Common length of the maximal chains.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// The interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Result<GradedPoset> {
        if !self.poset.leq(x, y) {
            return Err(Error::InvalidPoset(format!(
                "`{}` is not below `{}`",
                self.poset.labels()[x],
                self.poset.labels()[y]
            )));
        }
        let mask = (0..self.poset.size())
            .filter(|&z| self.poset.leq(x, z) && self.poset.leq(z, y))
            .fold(0u64, |m, z| m | 1 << z);
        GradedPoset::new(self.poset.induced(mask))
    }

    /// `μ(x, y)` for every pair, 0 when `x ≰ y`.
    fn mobius_table(&self) -> &Vec<Vec<i64>> {
        self.mobius.get_or_init(|| {
            let n = self.poset.size();
            let order = self.poset.linear_extension();
            let mut mu = vec![vec![0i64; n]; n];
            for x in 0..n {
                mu[x][x] = 1;
                for &y in &order {
                    if !self.poset.less(x, y) {
                        continue;
                    }
                    let s: i64 = (0..n).filter(|&z| self.poset.leq(x, z) && self.poset.less(z, y)).map(|z| mu[x][z]).sum();
                    mu[x][y] = -s;
                }
            }
            mu
        })
    }

    /// `μ(0_P, 1_P)`.
    pub fn mobius(&self) -> i64 {
        self.mobius_table()[self.bottom][self.top]
    }

    /// `μ(x, y)`, or `None` unless `x ≤ y`.
    pub fn mobius_interval(&self, x: usize, y: usize) -> Option<i64> {
        self.poset.leq(x, y).then(|| self.mobius_table()[x][y])
    }

    /// `μ([x, y]) = (-1)^{rank[x, y]}` for all `x < y`.
    pub fn is_eulerian(&self) -> bool {
        let n = self.poset.size();
        let mu = self.mobius_table();
        (0..n).all(|x| {
            (0..n).filter(|&y| self.poset.less(x, y)).all(|y| {
                let r = self.rank[y] - self.rank[x];
                mu[x][y] == if r.is_multiple_of(2) { 1 } else { -1 }
            })
        })
    }

    /// Number of chains `0 = z_0 < z_1 < ... < z_k = 1` with
    /// `rank[z_{i-1}, z_i] = a_i`.
    pub fn flag_f_vector(&self, alpha: &Composition) -> Result<u64> {
        if alpha.weight() != self.rank() {
            return Err(Error::WeightMismatch { left: alpha.weight(), right: self.rank() });
        }
        let n = self.poset.size();
        let mut ways = vec![0u64; n];
        ways[self.bottom] = 1;
        let mut level = 0;
        for &a in alpha.parts() {
            let next_level = level + a;
            let mut next = vec![0u64; n];
            for z in (0..n).filter(|&z| self.rank[z] == next_level) {
                next[z] = (0..n)
                    .filter(|&w| self.rank[w] == level && self.poset.leq(w, z))
                    .map(|w| ways[w])
                    .sum();
            }
            ways = next;
            level = next_level;
        }
        Ok(ways[self.top])
    }

    /// Cartesian product; ranks add.
    pub fn product(&self, other: &Self) -> Result<Self> {
        GradedPoset::new(self.poset.product(&other.poset)?)
    }
}

/// `J(P)`: lower ideals of `P` ordered by inclusion, ranked by size.
pub fn ideal_lattice(p: &FinitePoset) -> Result<GradedPoset> {
    let ideals = p.lower_ideals();
    if ideals.len() > crate::instances::poset::MAX_POSET_SIZE {
        return Err(Error::InvalidPoset(format!("J(P) has {} elements, too many", ideals.len())));
    }
    let labels = ideals
        .iter()
        .map(|&m| {
            let items: Vec<&str> = (0..p.size()).filter(|i| m >> i & 1 == 1).map(|i| p.labels()[i].as_str()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    let rows = ideals
        .iter()
        .map(|&a| {
            ideals.iter().enumerate().filter(|(_, &b)| a != b && a & b == a).fold(0u64, |r, (k, _)| r | 1 << k)
        })
        .collect();
    GradedPoset::new(FinitePoset::from_relation_labeled(labels, rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::instances::poset::{antichain, boolean_lattice, chain, polygon_face_lattice};

    fn graded(p: FinitePoset) -> GradedPoset {
        GradedPoset::new(p).unwrap()
    }

    #[test]
    fn mobius_values() {
        assert_eq!(graded(chain(1)).mobius(), 1);
        assert_eq!(graded(boolean_lattice(2)).mobius(), 1);
        assert_eq!(graded(chain(3)).mobius(), 0);
        assert_eq!(graded(boolean_lattice(3)).mobius(), -1);
    }

    #[test]
    fn eulerian_examples() {
        assert!(graded(boolean_lattice(3)).is_eulerian());
        assert!(!graded(chain(3)).is_eulerian());
        assert!(graded(chain(1)).is_eulerian());
        assert!(graded(polygon_face_lattice(5)).is_eulerian());
    }

    #[test]
    fn flag_vectors() {
        let b2 = graded(boolean_lattice(2));
        assert_eq!(b2.flag_f_vector(&comp![1, 1]).unwrap(), 2);
        assert_eq!(b2.flag_f_vector(&comp![2]).unwrap(), 1);
        assert_eq!(graded(boolean_lattice(3)).flag_f_vector(&comp![1, 1, 1]).unwrap(), 6);
        assert!(b2.flag_f_vector(&comp![1]).is_err());
    }

    #[test]
    fn ideal_lattices() {
        let j = ideal_lattice(&antichain(2)).unwrap();
        assert_eq!(j.poset().canonical_rows(), boolean_lattice(2).canonical_rows());
        let j = ideal_lattice(&chain(2)).unwrap();
        assert_eq!(j.poset().canonical_rows(), chain(3).canonical_rows());
        assert_eq!(j.rank(), 2);
    }

    #[test]
    fn rejects_ungraded() {
        // 0 < a < b < 1 and 0 < c < 1: chains of lengths 3 and 2.
        let p = FinitePoset::from_covers(
            ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
            &[
                ("0".into(), "a".into()),
                ("a".into(), "b".into()),
                ("b".into(), "1".into()),
                ("0".into(), "c".into()),
                ("c".into(), "1".into()),
            ],
        )
        .unwrap();
        let err = GradedPoset::new(p).unwrap_err().to_string();
        assert!(err.contains("[0, c, 1]") && err.contains("[0, a, b, 1]"), "{err}");
        assert!(GradedPoset::new(antichain(2)).is_err());
    }

    #[test]
    fn intervals() {
        let b3 = graded(boolean_lattice(3));
        let i = b3.interval(0, 3).unwrap();
        assert_eq!(i.rank(), 2);
        assert_eq!(b3.mobius_interval(0, 3), Some(1));
        assert_eq!(b3.mobius_interval(3, 0), None);
    }
}
