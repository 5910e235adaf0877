//! Relations over `{0..c}^arity`: the tuple-set algebra used by the gadget
//! builder and the reduction generators.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A finite set of tuples over `{0..bound}^arity`. Tuples are kept in a sorted
/// set, so equality and hashing are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub arity: usize,
    pub bound: u8,
    pub tuples: BTreeSet<Vec<u8>>,
}

impl Relation {
    pub fn new(arity: usize, bound: u8, tuples: impl IntoIterator<Item = Vec<u8>>) -> Result<Self> {
        let tuples: BTreeSet<Vec<u8>> = tuples.into_iter().collect();
        for t in &tuples {
            if t.len() != arity {
                return Err(Error::InvalidRelation(format!(
                    "tuple of length {} in relation of arity {arity}",
                    t.len()
                )));
            }
            if t.iter().any(|&x| x > bound) {
                return Err(Error::InvalidRelation(format!("entry exceeds bound {bound}")));
            }
        }
        Ok(Relation { arity, bound, tuples })
    }

    pub fn empty(arity: usize, bound: u8) -> Self {
        Relation { arity, bound, tuples: BTreeSet::new() }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, t: &[u8]) -> bool {
        self.tuples.contains(t)
    }

    /// Maps each tuple to its complement `(c - r_1, ..., c - r_l)`.
    pub fn complement(&self, c: u8) -> Result<Relation> {
        if self.bound > c {
            return Err(Error::InvalidRelation(format!(
                "relation bound {} exceeds complement bound {c}",
                self.bound
            )));
        }
        let tuples = self
            .tuples
            .iter()
            .map(|t| t.iter().map(|&x| c - x).collect())
            .collect::<BTreeSet<Vec<u8>>>();
        Ok(Relation { arity: self.arity, bound: c, tuples })
    }

    /// True iff every tuple weight is congruent to `x` mod `d`.
    pub fn is_regular(&self, x: u64, d: u64) -> bool {
        assert!(d >= 1);
        self.tuples.iter().all(|t| weight(t) % d == x % d)
    }

    /// The residue `x` such that the relation is `(x, d)`-regular, if any.
    pub fn regularity_residue(&self, d: u64) -> Option<u64> {
        assert!(d >= 1);
        let mut it = self.tuples.iter();
        let first = weight(it.next()?) % d;
        if it.all(|t| weight(t) % d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// `{u (+) Compl_c(u) | u in self}`.
    pub fn copy_rel(&self, c: u8) -> Result<Relation> {
        if self.bound > c {
            return Err(Error::InvalidRelation("bound exceeds c".into()));
        }
        let tuples = self
            .tuples
            .iter()
            .map(|t| {
                let mut out = t.clone();
                out.extend(t.iter().map(|&x| c - x));
                out
            })
            .collect::<BTreeSet<Vec<u8>>>();
        Ok(Relation { arity: 2 * self.arity, bound: c, tuples })
    }

    pub fn max_weight(&self) -> u64 {
        self.tuples.iter().map(|t| weight(t)).max().unwrap_or(0)
    }
}

pub fn weight(t: &[u8]) -> u64 {
    t.iter().map(|&x| x as u64).sum()
}

pub fn concat(r: &[u8], s: &[u8]) -> Vec<u8> {
    let mut out = r.to_vec();
    out.extend_from_slice(s);
    out
}

/// Stacks equal-length vectors in order: `v_(i,j) = v^(i)_j`.
pub fn stack(vectors: &[Vec<u8>]) -> Result<Vec<u8>> {
    if let Some(first) = vectors.first() {
        if vectors.iter().any(|v| v.len() != first.len()) {
            return Err(Error::InvalidRelation("stack of ragged vectors".into()));
        }
    }
    Ok(vectors.concat())
}

/// `COVER_l^y = {(y, ..., y)}`.
pub fn rel_cover(arity: usize, y: u8) -> Relation {
    Relation { arity, bound: y, tuples: [vec![y; arity]].into_iter().collect() }
}

/// `EQ_l^X = union of COVER_l^x for x in X`.
pub fn rel_eq(arity: usize, values: &[u8]) -> Result<Relation> {
    if values.is_empty() {
        return Err(Error::InvalidRelation("EQ over an empty value set".into()));
    }
    let bound = *values.iter().max().unwrap();
    let tuples = values.iter().map(|&x| vec![x; arity]).collect();
    Ok(Relation { arity, bound, tuples })
}

/// `SUM_l^z`: all tuples over `{0..z}^l` of total weight exactly `z`.
pub fn rel_sum(arity: usize, z: u8) -> Result<Relation> {
    if z == 0 {
        return Err(Error::InvalidRelation("SUM requires z >= 1".into()));
    }
    let mut tuples = BTreeSet::new();
    let mut cur = vec![0u8; arity];
    fn rec(cur: &mut Vec<u8>, i: usize, left: u8, z: u8, out: &mut BTreeSet<Vec<u8>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.insert(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(cur, i + 1, left - v, z, out);
        }
    }
    if arity == 0 {
        return Err(Error::InvalidRelation("SUM of arity 0".into()));
    }
    rec(&mut cur, 0, z, z, &mut tuples);
    Ok(Relation { arity, bound: z, tuples })
}

/// `CNEQ_z = {(x, z-x)} = SUM_2^z`.
pub fn rel_cneq(z: u8) -> Result<Relation> {
    rel_sum(2, z)
}

/// The selector relations over `{0,1}^(x*y)` from block partitions: for each
/// choice `w` picking one block index from every part, the tuple has all-zero
/// rows at the picked indices and all-one rows elsewhere.
pub fn rel_sel(partition: &[Vec<usize>], x: usize, y: usize) -> Result<Relation> {
    // Check the parts partition [1..=x].
    let mut seen = vec![false; x + 1];
    for part in partition {
        if part.is_empty() {
            return Err(Error::InvalidRelation("empty part in SEL partition".into()));
        }
        for &i in part {
            if i == 0 || i > x || seen[i] {
                return Err(Error::InvalidRelation("SEL parts must partition [x]".into()));
            }
            seen[i] = true;
        }
    }
    if seen[1..].iter().any(|&s| !s) {
        return Err(Error::InvalidRelation("SEL parts must cover [x]".into()));
    }
    let mut tuples = BTreeSet::new();
    let mut pick = vec![0usize; partition.len()];
    fn rec(
        partition: &[Vec<usize>],
        pick: &mut Vec<usize>,
        depth: usize,
        x: usize,
        y: usize,
        out: &mut BTreeSet<Vec<u8>>,
    ) {
        if depth == partition.len() {
            let mut t = vec![1u8; x * y];
            for &w in pick.iter() {
                for j in 0..y {
                    t[(w - 1) * y + j] = 0;
                }
            }
            out.insert(t);
            return;
        }
        for &w in &partition[depth] {
            pick[depth] = w;
            rec(partition, pick, depth + 1, x, y, out);
        }
    }
    rec(partition, &mut pick, 0, x, y, &mut tuples);
    Ok(Relation { arity: x * y, bound: 1, tuples })
}

/// `SEL` with the trivial partition `([x])`: pick one of the `x` rows to zero.
pub fn rel_sel_full(x: usize, y: usize) -> Result<Relation> {
    rel_sel(&[(1..=x).collect()], x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cneq_examples() {
        let r = rel_cneq(2).unwrap();
        let want: BTreeSet<Vec<u8>> = [vec![0, 2], vec![1, 1], vec![2, 0]].into_iter().collect();
        assert_eq!(r.tuples, want);
        assert_eq!(r, rel_sum(2, 2).unwrap());
    }

    #[test]
    fn cover_and_eq_examples() {
        assert_eq!(rel_cover(3, 0).tuples.iter().next().unwrap(), &vec![0, 0, 0]);
        assert_eq!(rel_cover(3, 0).len(), 1);
        let eq = rel_eq(2, &[0, 1]).unwrap();
        let want: BTreeSet<Vec<u8>> = [vec![0, 0], vec![1, 1]].into_iter().collect();
        assert_eq!(eq.tuples, want);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(rel_eq(2, &[]).is_err());
        assert!(rel_sum(3, 0).is_err());
        assert!(rel_cneq(0).is_err());
    }

    #[test]
    fn cardinality_laws() {
        for z in 1..=4u8 {
            assert_eq!(rel_cneq(z).unwrap(), rel_sum(2, z).unwrap());
        }
        for l in 1..=4usize {
            assert_eq!(rel_eq(l, &[0, 2, 3]).unwrap().len(), 3);
            assert_eq!(rel_cover(l, 2).len(), 1);
        }
    }

    #[test]
    fn weight_and_regularity() {
        assert!(rel_cneq(3).unwrap().is_regular(0, 3));
        // EQ_3 over {0,1}: weights 0 and 3.
        assert!(rel_eq(3, &[0, 1]).unwrap().is_regular(0, 3));
        let r = Relation::new(2, 1, [vec![1, 0]]).unwrap();
        assert!(!r.is_regular(0, 2));
        assert_eq!(r.regularity_residue(2), Some(1));
    }

    #[test]
    fn complement_examples() {
        let r = Relation::new(2, 1, [vec![0, 1]]).unwrap();
        let c = r.complement(2).unwrap();
        assert!(c.contains(&[2, 1]));
        assert_eq!(c.len(), 1);
        for cbound in 1..=3u8 {
            let cneq = rel_cneq(cbound).unwrap();
            assert_eq!(cneq.complement(cbound).unwrap(), cneq);
        }
        assert!(Relation::new(1, 3, [vec![3]]).unwrap().complement(2).is_err());
    }

    #[test]
    fn concat_and_stack() {
        assert_eq!(concat(&[1, 2], &[3]), vec![1, 2, 3]);
        assert_eq!(concat(&[], &[7]), vec![7]);
        assert_eq!(concat(&[0], &[0]), vec![0, 0]);
        assert_eq!(stack(&[vec![1, 2], vec![3, 4]]).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(stack(&[vec![5, 6]]).unwrap(), vec![5, 6]);
        assert_eq!(stack(&[vec![0], vec![0], vec![0]]).unwrap(), vec![0, 0, 0]);
        assert!(stack(&[vec![0], vec![0, 1]]).is_err());
    }

    #[test]
    fn stack_double_index_rule() {
        // v_(i,j) = v^(i)_j, i.e. entry (i-1)*m + j of the stacked tuple.
        let v1 = vec![1, 2, 3];
        let v2 = vec![4, 5, 6];
        let s = stack(&[v1.clone(), v2.clone()]).unwrap();
        for (i, v) in [v1, v2].iter().enumerate() {
            for j in 0..3 {
                assert_eq!(s[i * 3 + j], v[j]);
            }
        }
    }

    #[test]
    fn sel_examples() {
        let full = rel_sel_full(2, 1).unwrap();
        let want: BTreeSet<Vec<u8>> = [vec![0, 1], vec![1, 0]].into_iter().collect();
        assert_eq!(full.tuples, want);
        let split = rel_sel(&[vec![1], vec![2]], 2, 1).unwrap();
        assert_eq!(split.tuples.iter().next().unwrap(), &vec![0, 0]);
        assert_eq!(split.len(), 1);
        assert_eq!(rel_sel_full(1, 2).unwrap().tuples.iter().next().unwrap(), &vec![0, 0]);
        assert!(rel_sel(&[vec![1], vec![1]], 2, 1).is_err());
        assert!(rel_sel(&[vec![1]], 2, 1).is_err());
    }

    #[test]
    fn sel_full_weight_law() {
        for x in 1..=4usize {
            for y in 1..=3usize {
                let r = rel_sel_full(x, y).unwrap();
                assert_eq!(r.len(), x);
                for t in &r.tuples {
                    assert_eq!(weight(t), ((x - 1) * y) as u64);
                }
            }
        }
    }

    #[test]
    fn copy_rel_examples() {
        let w = Relation::new(2, 1, [vec![0, 1]]).unwrap();
        let c = w.copy_rel(1).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.contains(&[0, 1, 1, 0]));
    }

    #[test]
    fn copy_rel_of_phi_image_is_regular() {
        // The encoding image for (B=2, l=6, c=1, d=3) and its COPY relation
        // are both (0,3)-regular.
        let phi = crate::reductions::phi_encoding(2, 6, 1, 3).unwrap();
        let w = Relation::new(6, 1, phi.into_iter().map(|(_, t)| t)).unwrap();
        assert!(w.is_regular(0, 3));
        let copy = w.copy_rel(1).unwrap();
        assert_eq!(copy.len(), w.len());
        assert!(copy.is_regular(0, 3));
    }

    fn arb_relation() -> impl Strategy<Value = Relation> {
        (1usize..5, 0u8..4).prop_flat_map(|(arity, bound)| {
            proptest::collection::btree_set(
                proptest::collection::vec(0..=bound, arity),
                0..12,
            )
            .prop_map(move |tuples| Relation { arity, bound, tuples })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(r in arb_relation(), extra in 0u8..3) {
            let c = r.bound + extra;
            let cc = r.complement(c).unwrap().complement(c).unwrap();
            prop_assert_eq!(cc.tuples, r.tuples);
        }

        #[test]
        fn complement_regularity(r in arb_relation(), d in 1u64..6) {
            let c = r.bound;
            if let Some(x) = r.regularity_residue(d) {
                let comp = r.complement(c).unwrap();
                let lc = (r.arity as u64) * (c as u64);
                let want = (lc + d - x % d) % d;
                prop_assert!(comp.is_regular(want, d));
            }
        }

        #[test]
        fn copy_rel_cardinality(r in arb_relation()) {
            let c = r.bound;
            prop_assert_eq!(r.copy_rel(c).unwrap().len(), r.len());
        }
    }
}
