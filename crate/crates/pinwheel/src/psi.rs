//! Top intersections of psi classes: the correlators
//! `<tau_{k_1} ... tau_{k_n}>_g` over the moduli space of stable genus-g
//! curves with n marked points, in exact rational arithmetic.
//!
//! The evaluator runs the Dijkgraaf-Verlinde-Verlinde recursion on the
//! largest exponent, with the string and dilaton equations as fast paths for
//! exponents 0 and 1, seeded by `<tau_0^3>_0 = 1` alone. A correlator is
//! nonzero only when the total exponent equals the dimension `3g - 3 + n`;
//! dimension mismatches short-circuit to zero before any recursion.
//!
//! In genus zero the closed form `(n-3)! / prod k_i!` doubles as an
//! independent oracle; the default evaluator uses it as a terminal case,
//! while [`PsiOracle::recursion_only`] disables the shortcut so the two
//! routes can be checked against each other.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{
    factorial, odd_double_factorial, odd_double_factorial_ratio, rational_from_strings, Rational,
};

fn stable(genus: i64, marks: usize) -> bool {
    2 * genus - 2 + marks as i64 > 0
}

fn dimension(genus: i64, marks: usize) -> i64 {
    3 * genus - 3 + marks as i64
}

/// Canonical lookup key for a correlator: genus plus the exponent multiset,
/// stored sorted ascending. Symmetry of the correlator in its exponents makes
/// the sorted vector the natural quotient, collapsing `n!` duplicate keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionKey {
    genus: u32,
    exponents: Vec<u64>,
}

impl IntersectionKey {
    pub fn new(genus: u32, exponents: impl Into<Vec<u64>>) -> Result<Self> {
        let mut exponents = exponents.into();
        if exponents.is_empty() {
            return Err(Error::invalid("at least one marked point is required"));
        }
        if !stable(genus as i64, exponents.len()) {
            return Err(Error::invalid(format!(
                "unstable pair g={genus}, n={}: need 2g-2+n > 0",
                exponents.len()
            )));
        }
        exponents.sort_unstable();
        Ok(IntersectionKey { genus, exponents })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn marks(&self) -> usize {
        self.exponents.len()
    }
}

impl fmt::Display for IntersectionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}, k=[", self.genus)?;
        for (i, k) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// One line of the persistent cache file: the canonical key and the reduced
/// rational as decimal integer strings.
#[derive(Debug, Serialize, Deserialize)]
struct CacheRecord {
    g: u32,
    k: Vec<u64>,
    num: String,
    den: String,
}

/// Thread-safe memo table for correlator values.
///
/// Puts are idempotent: re-inserting the value already stored is a no-op,
/// while inserting a different value for an existing key is an integrity
/// error, since correlators are pure functions of their key.
#[derive(Debug, Default)]
pub struct PsiCache {
    table: Mutex<HashMap<IntersectionKey, Rational>>,
}

impl PsiCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &IntersectionKey) -> Option<Rational> {
        self.table.lock().unwrap().get(key).cloned()
    }

    pub fn put(&self, key: IntersectionKey, value: Rational) -> Result<()> {
        let mut table = self.table.lock().unwrap();
        if let Some(existing) = table.get(&key) {
            if *existing != value {
                return Err(Error::CacheConflict {
                    key: key.to_string(),
                    existing: existing.to_string(),
                    offered: value.to_string(),
                });
            }
            return Ok(());
        }
        table.insert(key, value);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Merge records from a newline-delimited JSON file. A missing file is
    /// fine (the cache is an optimization, never required); a record that
    /// conflicts with a value already in the table is an integrity error.
    /// Returns the number of records read.
    pub fn load_file(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(err) => return Err(err.into()),
        };
        let mut count = 0;
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record: CacheRecord =
                serde_json::from_str(line).map_err(|err| Error::MalformedCache {
                    path: path.display().to_string(),
                    line: idx + 1,
                    reason: err.to_string(),
                })?;
            let key =
                IntersectionKey::new(record.g, record.k).map_err(|err| Error::MalformedCache {
                    path: path.display().to_string(),
                    line: idx + 1,
                    reason: err.to_string(),
                })?;
            let value = rational_from_strings(&record.num, &record.den).map_err(|err| {
                Error::MalformedCache {
                    path: path.display().to_string(),
                    line: idx + 1,
                    reason: err.to_string(),
                }
            })?;
            self.put(key, value)?;
            count += 1;
        }
        Ok(count)
    }

    /// Write every cached value as one JSON record per line, sorted by key so
    /// the file contents are deterministic. Returns the number of records.
    pub fn save_file(&self, path: &Path) -> Result<usize> {
        let mut entries: Vec<(IntersectionKey, Rational)> = {
            let table = self.table.lock().unwrap();
            table.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
        };
        entries.sort();
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        let mut out = fs::File::create(path)?;
        for (key, value) in &entries {
            let record = CacheRecord {
                g: key.genus,
                k: key.exponents.clone(),
                num: value.numer().to_string(),
                den: value.denom().to_string(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&record).expect("record is serializable")
            )?;
        }
        Ok(entries.len())
    }
}

/// Closed form for genus-zero correlators: `(n-3)! / prod k_i!` on its
/// domain `sum k_i = n - 3`, `n >= 3`. Kept independent of the recursion so
/// the two can validate each other.
pub fn psi_top_genus0_closed(exponents: &[u64]) -> Result<Rational> {
    let n = exponents.len();
    if n < 3 {
        return Err(Error::invalid(format!(
            "genus-0 closed form needs n >= 3 marks, got {n}"
        )));
    }
    let total: u64 = exponents.iter().sum();
    if total != (n - 3) as u64 {
        return Err(Error::invalid(format!(
            "genus-0 closed form needs total degree n-3 = {}, got {total}",
            n - 3
        )));
    }
    let mut den = BigInt::one();
    for &k in exponents {
        den *= factorial(k);
    }
    Ok(Rational::new(factorial((n - 3) as u64), den))
}

/// Memoized evaluator for `<tau_{k_1} ... tau_{k_n}>_g`.
pub struct PsiOracle {
    cache: PsiCache,
    genus0_closed_terminal: bool,
}

impl Default for PsiOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl PsiOracle {
    pub fn new() -> Self {
        PsiOracle {
            cache: PsiCache::new(),
            genus0_closed_terminal: true,
        }
    }

    /// An oracle that never consults the genus-zero closed form: string,
    /// dilaton and the DVV recursion run all the way down to the seed
    /// `<tau_0^3>_0 = 1`. Exists so the recursion and the closed form remain
    /// two genuinely independent routes to every genus-zero value.
    pub fn recursion_only() -> Self {
        PsiOracle {
            cache: PsiCache::new(),
            genus0_closed_terminal: false,
        }
    }

    pub fn cache(&self) -> &PsiCache {
        &self.cache
    }

    /// `<tau_{k_1} ... tau_{k_n}>_g`. Returns zero on dimension mismatch
    /// (`sum k_i != 3g - 3 + n`) without recursing; rejects unstable `(g, n)`
    /// and empty exponent vectors.
    pub fn psi_top(&self, genus: u32, exponents: &[u64]) -> Result<Rational> {
        let key = IntersectionKey::new(genus, exponents)?;
        let total: u64 = key.exponents.iter().sum();
        if (total as i64) != dimension(genus as i64, key.marks()) {
            return Ok(Rational::zero());
        }
        self.eval(key)
    }

    /// Evaluate a key that is known stable and dimension-matched.
    fn eval(&self, key: IntersectionKey) -> Result<Rational> {
        if let Some(value) = self.cache.get(&key) {
            return Ok(value);
        }
        let value = self.compute(&key)?;
        self.cache.put(key, value.clone())?;
        Ok(value)
    }

    fn compute(&self, key: &IntersectionKey) -> Result<Rational> {
        let genus = key.genus;
        let ks = &key.exponents; // sorted ascending
        if genus == 0 {
            if ks.as_slice() == [0, 0, 0] {
                return Ok(Rational::one()); // the seed
            }
            if self.genus0_closed_terminal {
                return psi_top_genus0_closed(ks);
            }
            // Dimension n-3 < n forces a zero exponent, so the string
            // equation below reaches the seed without ever needing DVV.
        }
        if genus == 1 && ks.as_slice() == [1] {
            return self.tau_one_genus_one();
        }
        if ks[0] == 0 {
            return self.string_equation(genus, ks);
        }
        if ks[0] == 1 {
            return self.dilaton_equation(genus, ks);
        }
        self.dvv(genus, ks)
    }

    /// String equation: remove one zero exponent and sum over lowering each
    /// remaining positive exponent by one.
    fn string_equation(&self, genus: u32, ks: &[u64]) -> Result<Rational> {
        let rest = &ks[1..];
        debug_assert!(!rest.is_empty());
        let mut total = Rational::zero();
        for j in 0..rest.len() {
            if rest[j] == 0 {
                continue;
            }
            let mut reduced: Vec<u64> = rest.to_vec();
            reduced[j] -= 1;
            total += self.eval(IntersectionKey::new(genus, reduced)?)?;
        }
        Ok(total)
    }

    /// Dilaton equation: remove one exponent equal to one and scale by
    /// `2g - 2 + (n - 1)`.
    fn dilaton_equation(&self, genus: u32, ks: &[u64]) -> Result<Rational> {
        let rest = &ks[1..];
        debug_assert!(!rest.is_empty(), "(1,[1]) is handled before the fast paths");
        let factor = 2 * genus as i64 - 2 + rest.len() as i64;
        let inner = self.eval(IntersectionKey::new(genus, rest.to_vec())?)?;
        Ok(inner * Rational::from_integer(BigInt::from(factor)))
    }

    /// The Dijkgraaf-Verlinde-Verlinde recursion on the largest exponent
    /// `k1 >= 2`:
    ///
    /// ```text
    /// (2k1+1)!! <tau_k1 R>_g =
    ///     sum_{j in R} (2(k1+kj)-1)!!/(2kj-1)!! <tau_{k1+kj-1} R\{j}>_g
    ///   + 1/2 sum_{a+b=k1-2} (2a+1)!!(2b+1)!! [ <tau_a tau_b R>_{g-1}
    ///       + sum_{g1+g2=g} sum_{I + J = R} <tau_a I>_{g1} <tau_b J>_{g2} ]
    /// ```
    ///
    /// with `(-1)!! = 1` in the `kj = 0` coefficients and unstable or
    /// dimension-mismatched factors contributing zero.
    fn dvv(&self, genus: u32, ks: &[u64]) -> Result<Rational> {
        let (&k1, rest) = ks.split_last().expect("keys are non-empty");
        debug_assert!(k1 >= 2 && genus >= 1);
        let mut total = Rational::zero();

        for j in 0..rest.len() {
            let coeff = odd_double_factorial_ratio(k1 + rest[j], rest[j]);
            let mut merged: Vec<u64> = Vec::with_capacity(rest.len());
            merged.extend_from_slice(&rest[..j]);
            merged.extend_from_slice(&rest[j + 1..]);
            merged.push(k1 + rest[j] - 1);
            let inner = self.eval(IntersectionKey::new(genus, merged)?)?;
            total += inner * Rational::from_integer(coeff);
        }

        for a in 0..=(k1 - 2) {
            let b = k1 - 2 - a;
            let coeff = Rational::new(
                odd_double_factorial(2 * a as i64 + 1) * odd_double_factorial(2 * b as i64 + 1),
                BigInt::from(2),
            );

            // one fewer handle
            let mut joined: Vec<u64> = Vec::with_capacity(rest.len() + 2);
            joined.push(a);
            joined.push(b);
            joined.extend_from_slice(rest);
            let reduced = self.value_or_zero(genus as i64 - 1, joined)?;
            total += reduced * coeff.clone();

            // separating splits: ordered pairs (g1, I) vs (g2, J)
            for g1 in 0..=genus {
                let g2 = genus - g1;
                for mask in 0u64..(1u64 << rest.len()) {
                    let mut left: Vec<u64> = vec![a];
                    let mut right: Vec<u64> = vec![b];
                    for (j, &kj) in rest.iter().enumerate() {
                        if mask & (1 << j) != 0 {
                            left.push(kj);
                        } else {
                            right.push(kj);
                        }
                    }
                    let f1 = self.value_or_zero(g1 as i64, left)?;
                    if f1.is_zero() {
                        continue;
                    }
                    let f2 = self.value_or_zero(g2 as i64, right)?;
                    total += f1 * f2 * coeff.clone();
                }
            }
        }

        Ok(total / Rational::from_integer(odd_double_factorial(2 * k1 as i64 + 1)))
    }

    /// Correlator value with the boundary conventions of the recursion:
    /// unstable factors and dimension mismatches contribute zero.
    fn value_or_zero(&self, genus: i64, mut ks: Vec<u64>) -> Result<Rational> {
        if genus < 0 || ks.is_empty() || !stable(genus, ks.len()) {
            return Ok(Rational::zero());
        }
        let total: u64 = ks.iter().sum();
        if (total as i64) != dimension(genus, ks.len()) {
            return Ok(Rational::zero());
        }
        ks.sort_unstable();
        self.eval(IntersectionKey::new(genus as u32, ks)?)
    }

    /// `<tau_1>_1`, the one correlator the downward induction cannot reach:
    /// the DVV relation for `<tau_2 tau_0>_1`,
    ///
    /// ```text
    /// (2*2+1)!! <tau_2 tau_0>_1 = 3!! <tau_1>_1 + 1/2 * 1!! * 1!! * <tau_0^3>_0,
    /// ```
    ///
    /// combined with the string equation `<tau_2 tau_0>_1 = <tau_1>_1`, pins
    /// the value from the seed alone: (15 - 3) x = 1/2.
    fn tau_one_genus_one(&self) -> Result<Rational> {
        let seed = self.eval(IntersectionKey::new(0, vec![0, 0, 0])?)?;
        let lhs_coeff = odd_double_factorial(5);
        let merge_coeff = odd_double_factorial_ratio(2, 0);
        let boundary = Rational::new(BigInt::one(), BigInt::from(2)) * seed;
        Ok(boundary / Rational::from_integer(lhs_coeff - merge_coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational;

    fn psi(oracle: &PsiOracle, genus: u32, ks: &[u64]) -> Rational {
        oracle.psi_top(genus, ks).unwrap()
    }

    #[test]
    fn seed_value() {
        let oracle = PsiOracle::new();
        assert_eq!(psi(&oracle, 0, &[0, 0, 0]), rational(1, 1));
    }

    #[test]
    fn genus0_single_descendant_normalization() {
        let oracle = PsiOracle::new();
        for n in 4usize..=8 {
            let mut ks = vec![0u64; n];
            ks[0] = (n - 3) as u64;
            assert_eq!(psi(&oracle, 0, &ks), rational(1, 1), "n={n}");
        }
    }

    #[test]
    fn golden_values() {
        // Frozen from the DVV recursion worked out by hand on small cases and
        // cross-checked against published Witten-Kontsevich tables.
        let oracle = PsiOracle::new();
        assert_eq!(psi(&oracle, 0, &[1, 1, 0, 0, 0]), rational(2, 1));
        assert_eq!(psi(&oracle, 1, &[1]), rational(1, 24));
        assert_eq!(psi(&oracle, 1, &[0, 2]), rational(1, 24));
        assert_eq!(psi(&oracle, 1, &[1, 1]), rational(1, 24));
        assert_eq!(psi(&oracle, 1, &[1, 1, 1]), rational(1, 12));
        assert_eq!(psi(&oracle, 2, &[4]), rational(1, 1152));
        assert_eq!(psi(&oracle, 2, &[0, 5]), rational(1, 1152));
        assert_eq!(psi(&oracle, 2, &[1, 4]), rational(1, 384));
        assert_eq!(psi(&oracle, 2, &[2, 3]), rational(29, 5760));
        assert_eq!(psi(&oracle, 2, &[2, 2, 2]), rational(7, 240));
        assert_eq!(psi(&oracle, 3, &[7]), rational(1, 82944));
        assert_eq!(psi(&oracle, 3, &[0, 8]), rational(1, 82944));
        assert_eq!(psi(&oracle, 3, &[4, 4]), rational(607, 1451520));
        assert_eq!(psi(&oracle, 3, &[2, 3, 4]), rational(1121, 241920));
    }

    #[test]
    fn dimension_mismatch_is_zero() {
        let oracle = PsiOracle::new();
        assert_eq!(psi(&oracle, 1, &[0, 0]), rational(0, 1));
        assert_eq!(psi(&oracle, 2, &[2, 2, 3]), rational(0, 1));
        assert_eq!(psi(&oracle, 0, &[3, 0, 0]), rational(0, 1));
        // ... and does not grow the memo table
        assert!(oracle.cache().is_empty());
    }

    #[test]
    fn symmetric_in_exponents() {
        let oracle = PsiOracle::new();
        let value = psi(&oracle, 2, &[0, 1, 2, 4]);
        assert_eq!(psi(&oracle, 2, &[4, 2, 1, 0]), value);
        assert_eq!(psi(&oracle, 2, &[1, 4, 0, 2]), value);
    }

    #[test]
    fn invalid_inputs_rejected() {
        let oracle = PsiOracle::new();
        assert!(oracle.psi_top(0, &[]).is_err());
        assert!(oracle.psi_top(0, &[0, 0]).is_err()); // unstable (0,2)
        assert!(oracle.psi_top(0, &[1]).is_err()); // unstable (0,1)
        assert!(IntersectionKey::new(0, vec![0, 0]).is_err());
    }

    #[test]
    fn string_equation_holds() {
        let oracle = PsiOracle::new();
        // <tau_0 k>_g = sum_j <k - e_j>_g on dimension-matched vectors
        let cases: [(u32, &[u64]); 4] = [
            (1, &[0, 1, 2]),
            (2, &[0, 2, 3]),
            (1, &[0, 0, 1, 3]),
            (3, &[0, 8]),
        ];
        for (g, ks) in cases {
            let lhs = psi(&oracle, g, ks);
            let mut rhs = Rational::zero();
            let rest = &ks[1..];
            for j in 0..rest.len() {
                if rest[j] == 0 {
                    continue;
                }
                let mut reduced = rest.to_vec();
                reduced[j] -= 1;
                rhs += psi(&oracle, g, &reduced);
            }
            assert_eq!(lhs, rhs, "g={g} ks={ks:?}");
        }
    }

    #[test]
    fn dilaton_equation_holds() {
        let oracle = PsiOracle::new();
        let cases: [(u32, &[u64]); 3] = [(1, &[1, 1]), (2, &[1, 4]), (2, &[1, 2, 2, 2])];
        for (g, ks) in cases {
            let lhs = psi(&oracle, g, ks);
            let rest = &ks[1..];
            let factor = 2 * g as i64 - 2 + rest.len() as i64;
            let rhs = psi(&oracle, g, rest) * Rational::from_integer(BigInt::from(factor));
            assert_eq!(lhs, rhs, "g={g} ks={ks:?}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(psi_top_genus0_closed(&[0, 0, 0]).unwrap(), rational(1, 1));
        assert_eq!(
            psi_top_genus0_closed(&[1, 1, 0, 0, 0]).unwrap(),
            rational(2, 1)
        );
        assert_eq!(
            psi_top_genus0_closed(&[2, 0, 0, 0, 0]).unwrap(),
            rational(1, 1)
        );
        // the domain check is an error, distinct from a zero value
        assert!(psi_top_genus0_closed(&[1, 0, 0]).is_err());
        assert!(psi_top_genus0_closed(&[0, 0]).is_err());
    }

    #[test]
    fn recursion_agrees_with_closed_form_small() {
        let oracle = PsiOracle::recursion_only();
        for n in 3usize..=6 {
            for ks in crate::vectors::compositions((n - 3) as u64, n) {
                assert_eq!(
                    psi(&oracle, 0, &ks),
                    psi_top_genus0_closed(&ks).unwrap(),
                    "ks={ks:?}"
                );
            }
        }
    }

    #[test]
    fn recursion_only_matches_default_oracle() {
        let plain = PsiOracle::new();
        let bare = PsiOracle::recursion_only();
        for (g, ks) in [
            (1u32, vec![1u64, 1]),
            (2, vec![4]),
            (2, vec![2, 2, 2]),
            (3, vec![7]),
        ] {
            assert_eq!(psi(&plain, g, &ks), psi(&bare, g, &ks));
        }
    }

    #[test]
    fn values_are_reduced_with_positive_denominator() {
        let oracle = PsiOracle::new();
        for (g, ks) in [(2u32, vec![1u64, 4]), (3, vec![4, 4]), (1, vec![1, 1, 1])] {
            let v = psi(&oracle, g, &ks);
            assert!(v.denom() > &BigInt::zero());
            assert!(num_integer::gcd(v.numer().clone(), v.denom().clone()).is_one());
        }
    }

    #[test]
    fn cache_round_trip_and_idempotence() {
        let cache = PsiCache::new();
        let key = IntersectionKey::new(2, vec![4]).unwrap();
        assert!(cache.get(&key).is_none());
        cache.put(key.clone(), rational(1, 1152)).unwrap();
        assert_eq!(cache.get(&key), Some(rational(1, 1152)));
        // idempotent re-put
        cache.put(key.clone(), rational(1, 1152)).unwrap();
        assert_eq!(cache.len(), 1);
        // conflicting value is an integrity error
        let err = cache.put(key, rational(1, 2)).unwrap_err();
        assert!(matches!(err, Error::CacheConflict { .. }));
    }

    #[test]
    fn cache_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("psi_cache.jsonl");

        let oracle = PsiOracle::new();
        psi(&oracle, 2, &[4]);
        psi(&oracle, 1, &[1]);
        let saved = oracle.cache().save_file(&path).unwrap();
        assert!(saved >= 2);

        let fresh = PsiCache::new();
        let loaded = fresh.load_file(&path).unwrap();
        assert_eq!(loaded, saved);
        let key = IntersectionKey::new(2, vec![4]).unwrap();
        assert_eq!(fresh.get(&key), Some(rational(1, 1152)));

        // loading the same file twice is a no-op thanks to idempotent puts
        fresh.load_file(&path).unwrap();
        assert_eq!(fresh.len(), saved);
    }

    #[test]
    fn cache_file_missing_is_fine() {
        let cache = PsiCache::new();
        assert_eq!(
            cache
                .load_file(Path::new("/nonexistent/psi.jsonl"))
                .unwrap(),
            0
        );
    }

    #[test]
    fn cache_file_conflict_is_integrity_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("psi_cache.jsonl");
        std::fs::write(&path, "{\"g\":1,\"k\":[1],\"num\":\"1\",\"den\":\"25\"}\n").unwrap();

        let cache = PsiCache::new();
        let key = IntersectionKey::new(1, vec![1]).unwrap();
        cache.put(key, rational(1, 24)).unwrap();
        let err = cache.load_file(&path).unwrap_err();
        assert!(matches!(err, Error::CacheConflict { .. }));
    }

    #[test]
    fn cache_file_garbage_is_malformed() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("psi_cache.jsonl");
        std::fs::write(&path, "not json at all\n").unwrap();
        let err = PsiCache::new().load_file(&path).unwrap_err();
        assert!(matches!(err, Error::MalformedCache { .. }));
    }
}
