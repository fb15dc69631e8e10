//! The built-in verification suite.
//!
//! Every check here is exact: values either match or they do not. The suite
//! leans on redundancy between independent routes — recursion against closed
//! form, symbolic expansion against direct partition sums, omega against
//! kappa through the pushforward identity — so a defect in any one path
//! shows up as a disagreement somewhere else.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::expansion::{
    evaluate_pinwheel_term, expand_graph_formula, expand_graph_formula_simplified,
    integrate_expansion, OmegaMonomial, PinwheelTerm,
};
use crate::omega_kappa::{check_pushforward_identity, kappa_top, omega_top, KappaMonomial};
use crate::partition::{enumerate_set_partitions, SetPartition, BELL_NUMBERS};
use crate::psi::{psi_top_genus0_closed, PsiOracle};
use crate::rational::{rational, Rational};
use crate::vectors::compositions;

/// Outcome of one check: exact pass/fail, a short description of what was
/// verified, and the measured wall time against the check's budget.
#[derive(Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CheckReport {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed && self.within_budget() {
            "PASS"
        } else {
            "FAIL"
        };
        format!(
            "{status} {} ({} ms / budget {} ms): {}",
            self.name,
            self.elapsed.as_millis(),
            self.budget.as_millis(),
            self.detail
        )
    }
}

fn run_check(
    name: &'static str,
    budget: Duration,
    body: impl FnOnce() -> Result<String, String>,
) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CheckReport {
        name,
        passed,
        detail,
        elapsed,
        budget,
    }
}

/// Run the whole suite. Value checks share `oracle`, so a warm persistent
/// cache is exercised (and validated) when one was loaded into it; the
/// closed-form cross-check builds its own recursion-only oracle to keep the
/// two routes independent.
pub fn run_all(oracle: &PsiOracle) -> Vec<CheckReport> {
    vec![
        check_example_expansion(),
        check_genus0_normalization(oracle),
        check_oracle_validation(oracle),
        check_expansion_evaluation(oracle),
        check_pushforward(oracle),
        check_known_values(oracle),
        check_property_suite(oracle),
    ]
}

/// Fixed seed: the randomized checks are deterministic from run to run.
const RNG_SEED: u64 = 42;

type Fingerprint = (Vec<Vec<usize>>, i8, Vec<u64>, Vec<u64>);

fn fingerprint(term: &PinwheelTerm) -> Fingerprint {
    (
        term.parts().to_vec(),
        term.sign(),
        term.spine_exponents().to_vec(),
        term.tail_exponents().to_vec(),
    )
}

/// The three-mark worked example: omega_1^3 omega_2^2 expands into five
/// strata carrying six decorated terms, with these signs and exponents.
fn check_example_expansion() -> CheckReport {
    run_check("example-2-3-expansion", Duration::from_secs(1), || {
        let monomial = OmegaMonomial::new(2, vec![3, 2, 0]).map_err(|e| e.to_string())?;
        let got: BTreeSet<Fingerprint> = expand_graph_formula_simplified(&monomial)
            .iter()
            .map(fingerprint)
            .collect();
        let want: BTreeSet<Fingerprint> = [
            (
                vec![vec![1], vec![2], vec![3]],
                1i8,
                vec![3, 2, 0],
                vec![0, 0, 0],
            ),
            (vec![vec![1, 2], vec![3]], -1, vec![4, 0], vec![0, 0]),
            (vec![vec![1, 3], vec![2]], -1, vec![2, 2], vec![0, 0]),
            (vec![vec![1], vec![2, 3]], -1, vec![3, 1], vec![0, 0]),
            (vec![vec![1, 2, 3]], -1, vec![4], vec![0]),
            (vec![vec![1, 2, 3]], 1, vec![3], vec![1]),
        ]
        .into_iter()
        .collect();
        if got != want {
            return Err(format!("expansion mismatch: got {got:?}"));
        }
        Ok("six decorated terms across five strata, exact multiset match".into())
    })
}

fn check_genus0_normalization(oracle: &PsiOracle) -> CheckReport {
    run_check("genus0-normalization", Duration::from_secs(1), || {
        for n in 3usize..=10 {
            let mut ks = vec![0u64; n];
            ks[0] = (n - 3) as u64;
            let value = oracle.psi_top(0, &ks).map_err(|e| e.to_string())?;
            if value != rational(1, 1) {
                return Err(format!("psi(0, {ks:?}) = {value}, expected 1"));
            }
        }
        Ok("single-descendant genus-0 integrals are 1 for n = 3..=10".into())
    })
}

fn check_oracle_validation(oracle: &PsiOracle) -> CheckReport {
    run_check("oracle-validation", Duration::from_secs(30), || {
        // recursion vs closed form, every genus-0 exponent vector with n <= 8
        let recursion = PsiOracle::recursion_only();
        let mut closed_checked = 0usize;
        for n in 3usize..=8 {
            for ks in compositions((n - 3) as u64, n) {
                let via_recursion = recursion.psi_top(0, &ks).map_err(|e| e.to_string())?;
                let via_closed = psi_top_genus0_closed(&ks).map_err(|e| e.to_string())?;
                if via_recursion != via_closed {
                    return Err(format!(
                        "genus-0 disagreement at {ks:?}: {via_recursion} vs {via_closed}"
                    ));
                }
                closed_checked += 1;
            }
        }

        // string and dilaton identities on randomized stable instances
        let mut rng = StdRng::seed_from_u64(RNG_SEED);
        let mut randomized = 0usize;
        while randomized < 200 {
            let genus: u32 = rng.random_range(0..=3);
            let min_marks = if genus == 0 { 3 } else { 1 };
            if min_marks > 5 {
                continue;
            }
            let marks = rng.random_range(min_marks..=5usize);

            // string: <tau_0 k>_g = sum_j <k - e_j>_g, with k of the
            // dimension of the (marks+1)-pointed space
            let string_total = 3 * genus as i64 - 3 + marks as i64 + 1;
            let ks = random_vector(&mut rng, marks, string_total as u64);
            let mut appended = ks.clone();
            appended.push(0);
            let lhs = oracle
                .psi_top(genus, &appended)
                .map_err(|e| e.to_string())?;
            let mut rhs = Rational::zero();
            for j in 0..ks.len() {
                if ks[j] == 0 {
                    continue;
                }
                let mut reduced = ks.clone();
                reduced[j] -= 1;
                rhs += oracle.psi_top(genus, &reduced).map_err(|e| e.to_string())?;
            }
            if lhs != rhs {
                return Err(format!("string equation fails at g={genus}, k={ks:?}"));
            }

            // dilaton: <tau_1 k>_g = (2g - 2 + n) <k>_g on a top-degree k
            let dilaton_total = 3 * genus as i64 - 3 + marks as i64;
            let ks = random_vector(&mut rng, marks, dilaton_total as u64);
            let mut appended = ks.clone();
            appended.push(1);
            let lhs = oracle
                .psi_top(genus, &appended)
                .map_err(|e| e.to_string())?;
            let factor = 2 * genus as i64 - 2 + marks as i64;
            let rhs = oracle.psi_top(genus, &ks).map_err(|e| e.to_string())?
                * Rational::from_integer(factor.into());
            if lhs != rhs {
                return Err(format!("dilaton equation fails at g={genus}, k={ks:?}"));
            }
            randomized += 1;
        }
        Ok(format!(
            "{closed_checked} genus-0 vectors match the closed form; string and dilaton hold on {randomized} randomized instances"
        ))
    })
}

fn check_expansion_evaluation(oracle: &PsiOracle) -> CheckReport {
    run_check(
        "expansion-evaluation-consistency",
        Duration::from_secs(60),
        || {
            let mut checked = 0usize;
            for genus in 1u32..=2 {
                for marks in 1usize..=4 {
                    let total = (3 * genus as i64 - 3 + marks as i64) as u64;
                    for ks in compositions(total, marks) {
                        let monomial =
                            OmegaMonomial::new(genus, ks.clone()).map_err(|e| e.to_string())?;
                        let via_expansion =
                            integrate_expansion(oracle, &monomial).map_err(|e| e.to_string())?;
                        let via_sum = omega_top(oracle, &monomial).map_err(|e| e.to_string())?;
                        if via_expansion != via_sum {
                            return Err(format!(
                                "g={genus}, k={ks:?}: expansion gives {via_expansion}, partition sum gives {via_sum}"
                            ));
                        }
                        checked += 1;
                    }
                }
            }
            Ok(format!(
                "integrate_expansion == omega_top on all {checked} top-degree vectors, g <= 2, n <= 4"
            ))
        },
    )
}

fn check_pushforward(oracle: &PsiOracle) -> CheckReport {
    run_check("pushforward-identity", Duration::from_secs(60), || {
        let mut checked = 0usize;
        for genus in 2u32..=3 {
            let total = 3 * genus as u64 - 3;
            for marks in 1usize..=3 {
                for ls in compositions(total, marks) {
                    if !check_pushforward_identity(oracle, genus, &ls).map_err(|e| e.to_string())? {
                        return Err(format!("identity fails at g={genus}, l={ls:?}"));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!(
            "omega/kappa pushforward identity holds on all {checked} index vectors, g in {{2,3}}, n <= 3"
        ))
    })
}

fn check_known_values(oracle: &PsiOracle) -> CheckReport {
    run_check("known-values", Duration::from_secs(1), || {
        let psi_1 = oracle.psi_top(1, &[1]).map_err(|e| e.to_string())?;
        if psi_1 != rational(1, 24) {
            return Err(format!("psi(1,(1)) = {psi_1}, expected 1/24"));
        }
        let psi_2 = oracle.psi_top(2, &[4]).map_err(|e| e.to_string())?;
        if psi_2 != rational(1, 1152) {
            return Err(format!("psi(2,(4)) = {psi_2}, expected 1/1152"));
        }
        let k3 = KappaMonomial::new(2, vec![1, 1, 1]).map_err(|e| e.to_string())?;
        let kappa_111 = kappa_top(oracle, &k3).map_err(|e| e.to_string())?;
        if kappa_111 != rational(43, 2880) {
            return Err(format!("kappa(2,(1,1,1)) = {kappa_111}, expected 43/2880"));
        }
        let k2 = KappaMonomial::new(2, vec![1, 2]).map_err(|e| e.to_string())?;
        let kappa_12 = kappa_top(oracle, &k2).map_err(|e| e.to_string())?;
        if kappa_12 != rational(1, 240) {
            return Err(format!("kappa(2,(1,2)) = {kappa_12}, expected 1/240"));
        }
        let m = OmegaMonomial::new(1, vec![1, 1]).map_err(|e| e.to_string())?;
        let omega_11 = omega_top(oracle, &m).map_err(|e| e.to_string())?;
        if !omega_11.is_zero() {
            return Err(format!("omega(1,(1,1)) = {omega_11}, expected 0"));
        }
        Ok("1/24, 1/1152, 43/2880, 1/240 and 0 all reproduced".into())
    })
}

fn check_property_suite(oracle: &PsiOracle) -> CheckReport {
    run_check("property-suite", Duration::from_secs(30), || {
        // permutation symmetry on 100 random shuffles
        let mut rng = StdRng::seed_from_u64(RNG_SEED ^ 0xa5a5);
        let mut shuffles = 0usize;
        while shuffles < 100 {
            let genus: u32 = rng.random_range(0..=2);
            let min_marks = if genus == 0 { 3 } else { 1 };
            let marks = rng.random_range(min_marks..=5usize);
            let total = 3 * genus as i64 - 3 + marks as i64;
            let ks = random_vector(&mut rng, marks, total as u64);
            let reference = oracle.psi_top(genus, &ks).map_err(|e| e.to_string())?;
            let mut shuffled = ks.clone();
            shuffled.shuffle(&mut rng);
            let permuted = oracle
                .psi_top(genus, &shuffled)
                .map_err(|e| e.to_string())?;
            if permuted != reference {
                return Err(format!(
                    "psi(g={genus}) not symmetric: {ks:?} vs {shuffled:?}"
                ));
            }
            shuffles += 1;
        }

        // dimension vanishing: off-degree vectors evaluate to zero
        let mut vanishing = 0usize;
        for genus in 0u32..=2 {
            let min_marks = if genus == 0 { 3 } else { 1 };
            for marks in min_marks..=4usize {
                let dim = 3 * genus as i64 - 3 + marks as i64;
                for offset in [-1i64, 1, 2] {
                    let total = dim + offset;
                    if total < 0 {
                        continue;
                    }
                    for ks in compositions(total as u64, marks) {
                        let value = oracle.psi_top(genus, &ks).map_err(|e| e.to_string())?;
                        if !value.is_zero() {
                            return Err(format!(
                                "psi(g={genus}, {ks:?}) = {value} but degree is off-dimension"
                            ));
                        }
                        vanishing += 1;
                    }
                }
            }
        }

        // Bell-number partition counts through n = 8
        for n in 1usize..=8 {
            let count = enumerate_set_partitions(n)
                .map_err(|e| e.to_string())?
                .len();
            if count != BELL_NUMBERS[n - 1] {
                return Err(format!(
                    "{count} partitions of [{n}], expected {}",
                    BELL_NUMBERS[n - 1]
                ));
            }
        }

        // every emitted term satisfies the decoration invariants
        let mut terms_checked = 0usize;
        for (genus, ks) in [
            (1u32, vec![1u64, 1]),
            (1, vec![2, 1, 0, 1]),
            (2, vec![3, 2, 0]),
            (2, vec![0, 0, 4]),
            (2, vec![2, 2, 2]),
            (1, vec![1, 1, 1, 1, 0]),
        ] {
            let monomial = OmegaMonomial::new(genus, ks.clone()).map_err(|e| e.to_string())?;
            let degree = monomial.total_degree();
            for term in expand_graph_formula(&monomial) {
                verify_term_invariants(&term, &ks, degree)?;
                // evaluation accepts every emitted term
                evaluate_pinwheel_term(oracle, genus, ks.len(), &term)
                    .map_err(|e| e.to_string())?;
                terms_checked += 1;
            }
        }

        Ok(format!(
            "symmetry on {shuffles} shuffles, {vanishing} off-dimension zeros, Bell counts to n=8, {terms_checked} terms validated"
        ))
    })
}

fn verify_term_invariants(term: &PinwheelTerm, ks: &[u64], degree: u64) -> Result<(), String> {
    if term.total_degree() != degree {
        return Err(format!("term {term:?} breaks homogeneity"));
    }
    let n = ks.len();
    let partition = SetPartition::new(n, term.parts().to_vec()).map_err(|e| e.to_string())?;
    let alphas = partition.part_weights(ks).map_err(|e| e.to_string())?;
    for (j, part) in partition.parts().iter().enumerate() {
        let (a, b) = (term.spine_exponents()[j], term.tail_exponents()[j]);
        if part.len() == 1 {
            if b != 0 || a != alphas[j] {
                return Err(format!("singleton law broken in {term:?}"));
            }
        } else {
            if alphas[j] == 0 {
                return Err(format!("support rule broken in {term:?}"));
            }
            if a + b + 1 != alphas[j] {
                return Err(format!("series bookkeeping broken in {term:?}"));
            }
        }
    }
    // the validating constructor re-derives the sign law
    PinwheelTerm::new(
        partition,
        term.sign(),
        term.spine_exponents().to_vec(),
        term.tail_exponents().to_vec(),
    )
    .map_err(|e| e.to_string())?;
    Ok(())
}

/// Random non-negative vector with a prescribed sum: `total` unit increments
/// sprinkled over `len` slots.
fn random_vector(rng: &mut StdRng, len: usize, total: u64) -> Vec<u64> {
    let mut ks = vec![0u64; len];
    for _ in 0..total {
        let slot = rng.random_range(0..len);
        ks[slot] += 1;
    }
    ks
}
