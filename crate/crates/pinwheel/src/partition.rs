//! Unordered set partitions of the mark set `{1, ..., n}`.
//!
//! Partitions index the pinwheel strata, so everything downstream leans on
//! the canonical form fixed here: labels ascending inside each part, parts
//! ordered by their minimum label. Two partitions are equal exactly when
//! their canonical forms are equal as lists.

use crate::error::{Error, Result};

/// An unordered partition of `{1, ..., n}` into non-empty disjoint parts,
/// stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validate and canonicalize a collection of parts over `{1, ..., n}`.
    ///
    /// The parts may arrive in any order and with labels in any order inside
    /// each part; the constructor sorts both. Empty parts, labels outside
    /// `1..=n`, duplicates and missing labels are rejected.
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("partition of the empty mark set"));
        }
        let mut seen = vec![false; n + 1];
        let mut covered = 0usize;
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
        for part in parts {
            if part.is_empty() {
                return Err(Error::invalid("empty part"));
            }
            let mut part = part;
            part.sort_unstable();
            for &label in &part {
                if label == 0 || label > n {
                    return Err(Error::invalid(format!("label {label} outside 1..={n}")));
                }
                if seen[label] {
                    return Err(Error::invalid(format!("label {label} repeated")));
                }
                seen[label] = true;
                covered += 1;
            }
            canonical.push(part);
        }
        if covered != n {
            return Err(Error::invalid(format!(
                "parts cover {covered} of {n} labels"
            )));
        }
        canonical.sort_unstable_by_key(|part| part[0]);
        Ok(SetPartition {
            n,
            parts: canonical,
        })
    }

    /// Ambient mark count `n`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// The parts in canonical order.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Number of parts, written `l(P)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Codimension of the associated pinwheel stratum: the number of parts
    /// of size greater than one (each spawns one rational tail, one node).
    pub fn codimension(&self) -> usize {
        self.parts.iter().filter(|part| part.len() > 1).count()
    }

    /// Sum the per-mark `weights` over each part, in canonical part order.
    /// With the exponent vector as weights this computes the `alpha_j`
    /// (or `beta_j`) of the evaluation formulas.
    pub fn part_weights(&self, weights: &[u64]) -> Result<Vec<u64>> {
        if weights.len() != self.n {
            return Err(Error::invalid(format!(
                "weight vector has length {}, expected {}",
                weights.len(),
                self.n
            )));
        }
        Ok(self
            .parts
            .iter()
            .map(|part| part.iter().map(|&label| weights[label - 1]).sum())
            .collect())
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for part in &self.parts {
            write!(f, "{{")?;
            for (i, label) in part.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{label}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Enumerate every set partition of `{1, ..., n}` exactly once, in canonical
/// form, via restricted growth strings: `a[0] = 0` and
/// `a[i] <= 1 + max(a[0..i])`. The block of label `i+1` is `a[i]`, so parts
/// come out sorted by minimum label for free. Strings are visited in reverse
/// lexicographic order, which lists the all-singletons partition first and
/// the one-part partition last — the order expansions read best in.
pub fn enumerate_set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::invalid("no partitions of the empty mark set"));
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0usize; n];
    'next: loop {
        let blocks = prefix_max[n - 1] + 1;
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        for (i, &block) in rgs.iter().enumerate() {
            parts[block].push(i + 1);
        }
        out.push(SetPartition { n, parts });

        // advance to the lexicographically next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                break 'next;
            }
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                continue 'next;
            }
            i -= 1;
        }
    }
    out.reverse();
    Ok(out)
}

/// Bell numbers `B_1..=B_8`; enumeration counts are pinned against these.
pub const BELL_NUMBERS: [usize; 8] = [1, 2, 5, 15, 52, 203, 877, 4140];

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn partition(n: usize, parts: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, parts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    /// Independent brute-force enumeration: run over all n^n label-to-block
    /// assignments, normalize each to a set of parts, deduplicate.
    fn brute_force_partitions(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
        let mut seen = BTreeSet::new();
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
            for label in 1..=n {
                blocks[c % n].push(label);
                c /= n;
            }
            let mut parts: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
            parts.sort_unstable_by_key(|p| p[0]);
            seen.insert(parts);
        }
        seen
    }

    #[test]
    fn singleton_set_has_one_partition() {
        let all = enumerate_set_partitions(1).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].parts(), &[vec![1]]);
    }

    #[test]
    fn three_marks_give_five_partitions() {
        let all = enumerate_set_partitions(3).unwrap();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            let enumerated: BTreeSet<Vec<Vec<usize>>> = enumerate_set_partitions(n)
                .unwrap()
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            let brute = brute_force_partitions(n);
            assert_eq!(enumerated, brute, "n={n}");
        }
    }

    #[test]
    fn counts_match_bell_numbers() {
        for n in 1..=8 {
            let all = enumerate_set_partitions(n).unwrap();
            assert_eq!(all.len(), BELL_NUMBERS[n - 1], "n={n}");
        }
    }

    #[test]
    fn enumeration_yields_valid_canonical_partitions() {
        for n in 1..=6 {
            for p in enumerate_set_partitions(n).unwrap() {
                let rebuilt = SetPartition::new(n, p.parts().to_vec()).unwrap();
                assert_eq!(rebuilt, p);
            }
        }
    }

    #[test]
    fn zero_marks_rejected() {
        assert!(enumerate_set_partitions(0).is_err());
        assert!(SetPartition::new(0, vec![]).is_err());
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err()); // misses 3
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err()); // overlap
        assert!(SetPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err()); // empty part
        assert!(SetPartition::new(3, vec![vec![1, 2, 4]]).is_err()); // out of range
        assert!(SetPartition::new(3, vec![vec![0, 1, 2]]).is_err()); // 1-based labels
    }

    #[test]
    fn canonicalization_is_idempotent_and_order_insensitive() {
        let a = SetPartition::new(5, vec![vec![4, 2], vec![5, 1], vec![3]]).unwrap();
        let b = SetPartition::new(5, vec![vec![3], vec![1, 5], vec![2, 4]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.parts(), &[vec![1, 5], vec![2, 4], vec![3]]);
    }

    #[test]
    fn codimension_counts_non_singleton_parts() {
        assert_eq!(partition(3, &[&[1], &[2], &[3]]).codimension(), 0);
        assert_eq!(partition(3, &[&[1, 2], &[3]]).codimension(), 1);
        assert_eq!(partition(3, &[&[1, 2, 3]]).codimension(), 1);
        assert_eq!(partition(4, &[&[1, 2], &[3, 4]]).codimension(), 2);
    }

    #[test]
    fn part_weights_examples() {
        let p = partition(3, &[&[1, 2], &[3]]);
        assert_eq!(p.part_weights(&[3, 2, 0]).unwrap(), vec![5, 0]);
        let q = partition(3, &[&[1], &[2], &[3]]);
        assert_eq!(q.part_weights(&[0, 0, 0]).unwrap(), vec![0, 0, 0]);
        let r = partition(3, &[&[1, 2, 3]]);
        assert_eq!(r.part_weights(&[3, 2, 0]).unwrap(), vec![5]);
        assert!(p.part_weights(&[1, 2]).is_err());
    }

    proptest! {
        /// Random label-to-block assignments, rebuilt as partitions: the
        /// constructor must accept them, produce a stable canonical form,
        /// and part weights must always resum to the total weight.
        #[test]
        fn random_assignment_invariants(
            assignment in proptest::collection::vec(0usize..6, 1..9),
            weights_seed in proptest::collection::vec(0u64..7, 1..9),
        ) {
            let n = assignment.len();
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); 6];
            for (i, &b) in assignment.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            let parts: Vec<Vec<usize>> =
                blocks.into_iter().filter(|b| !b.is_empty()).collect();
            let p = SetPartition::new(n, parts).unwrap();

            // canonical form is a fixed point
            let again = SetPartition::new(n, p.parts().to_vec()).unwrap();
            prop_assert_eq!(&again, &p);

            // disjoint cover of {1,..,n}
            let mut all: Vec<usize> = p.parts().iter().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (1..=n).collect::<Vec<_>>());

            // weight sums are preserved
            let weights: Vec<u64> = (0..n).map(|i| weights_seed[i % weights_seed.len()]).collect();
            let sums = p.part_weights(&weights).unwrap();
            prop_assert_eq!(sums.iter().sum::<u64>(), weights.iter().sum::<u64>());
        }
    }
}
