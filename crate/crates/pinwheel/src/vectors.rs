//! Enumeration of exponent vectors of a fixed total degree.

/// All ordered vectors of `parts` non-negative integers summing to `total`.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn rec(total: u64, parts: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            current.push(total);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in 0..=total {
            current.push(first);
            rec(total - first, parts - 1, current, out);
            current.pop();
        }
    }
    if parts == 0 {
        return out;
    }
    rec(total, parts, &mut current, &mut out);
    out
}

/// All multisets of `parts` non-negative integers summing to `total`,
/// each written as a weakly decreasing vector. One representative per orbit
/// of the symmetric group on [`compositions`].
pub fn multisets(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn rec(total: u64, parts: usize, bound: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if total <= bound {
                current.push(total);
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        let mut first = total.min(bound);
        loop {
            current.push(first);
            rec(total - first, parts - 1, first, current, out);
            current.pop();
            if first == 0 {
                break;
            }
            first -= 1;
        }
    }
    if parts == 0 {
        return out;
    }
    rec(total, parts, total, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts_are_binomial() {
        // #compositions(total, parts) = C(total + parts - 1, parts - 1)
        assert_eq!(compositions(0, 3).len(), 1);
        assert_eq!(compositions(1, 3).len(), 3);
        assert_eq!(compositions(5, 8).len(), 792);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
    }

    #[test]
    fn multisets_are_sorted_orbit_representatives() {
        let all = multisets(4, 3);
        assert_eq!(
            all,
            vec![vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1],]
        );
        for m in &all {
            assert!(m.windows(2).all(|w| w[0] >= w[1]));
        }
        // every composition sorts onto exactly one multiset
        use std::collections::BTreeSet;
        let sorted: BTreeSet<Vec<u64>> = compositions(4, 3)
            .into_iter()
            .map(|mut v| {
                v.sort_unstable_by(|x, y| y.cmp(x));
                v
            })
            .collect();
        let expected: BTreeSet<Vec<u64>> = all.into_iter().collect();
        assert_eq!(sorted, expected);
    }
}
