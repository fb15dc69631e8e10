//! Closed-form evaluation of top intersections of omega and kappa classes
//! as signed partition sums of psi correlators.
//!
//! For `prod omega_i^{k_i}` of top degree on the genus-g, n-marked space,
//!
//! ```text
//! integral = sum_{P + [n]} (-1)^{n + l(P)} <prod_j tau_{alpha_j - |P_j| + 1}>_g,
//! ```
//!
//! where `alpha_j` is the exponent weight collected by part j and any part
//! with `alpha_j - |P_j| + 1 < 0` kills its summand (negative psi powers
//! vanish, so those summands are skipped without consulting the oracle).
//! Top intersections of kappa classes on the unmarked genus-g space follow
//! the same shape with `beta_j + 1` in place of `alpha_j - |P_j| + 1`, and
//! the two are tied together by the forgetful pushforward
//! `omega`-to-`kappa` identity checked by [`check_pushforward_identity`].

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expansion::OmegaMonomial;
use crate::partition::enumerate_set_partitions;
use crate::psi::PsiOracle;
use crate::rational::Rational;

/// A monomial `prod kappa_{l_i}` on the unmarked genus-g space, `g >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaMonomial {
    genus: u32,
    indices: Vec<u64>,
}

impl KappaMonomial {
    pub fn new(genus: u32, indices: Vec<u64>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::invalid("kappa monomials need genus >= 2"));
        }
        if indices.is_empty() {
            return Err(Error::invalid("at least one kappa index is required"));
        }
        Ok(KappaMonomial { genus, indices })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    /// Total degree `sum l_i`; top intersections require it to equal `3g - 3`.
    pub fn total_degree(&self) -> u64 {
        self.indices.iter().sum()
    }
}

/// Top intersection of an omega monomial, as the signed partition sum over
/// spine correlators. Returns zero on dimension mismatch without invoking
/// the oracle.
pub fn omega_top(oracle: &PsiOracle, monomial: &OmegaMonomial) -> Result<Rational> {
    if monomial.total_degree() != monomial.dimension() {
        return Ok(Rational::zero());
    }
    let n = monomial.marks();
    let ks = monomial.exponents();
    let mut total = Rational::zero();
    'partition: for partition in enumerate_set_partitions(n)? {
        let alphas = partition.part_weights(ks)?;
        let mut exponents = Vec::with_capacity(partition.len());
        for (part, &alpha) in partition.parts().iter().zip(&alphas) {
            let shifted = alpha as i64 - part.len() as i64 + 1;
            if shifted < 0 {
                continue 'partition; // negative psi power: summand vanishes
            }
            exponents.push(shifted as u64);
        }
        let value = oracle.psi_top(monomial.genus(), &exponents)?;
        total += attach_sign(n, partition.len(), value);
    }
    Ok(total)
}

/// `(-1)^{n + l(P)} v`: the sign every summand of the partition sums carries.
fn attach_sign(marks: usize, parts: usize, value: Rational) -> Rational {
    if (marks + parts).is_multiple_of(2) {
        value
    } else {
        -value
    }
}

/// Top intersection of a kappa monomial on the unmarked genus-g space.
/// Returns zero when `sum l_i != 3g - 3`, again without invoking the oracle.
pub fn kappa_top(oracle: &PsiOracle, monomial: &KappaMonomial) -> Result<Rational> {
    let genus = monomial.genus() as i64;
    if monomial.total_degree() as i64 != 3 * genus - 3 {
        return Ok(Rational::zero());
    }
    let n = monomial.indices().len();
    let mut total = Rational::zero();
    for partition in enumerate_set_partitions(n)? {
        let betas = partition.part_weights(monomial.indices())?;
        let exponents: Vec<u64> = betas.iter().map(|&beta| beta + 1).collect();
        let value = oracle.psi_top(monomial.genus(), &exponents)?;
        total += attach_sign(n, partition.len(), value);
    }
    Ok(total)
}

/// Check the forgetful-pushforward identity tying the two evaluators
/// together: `omega_top(g, (l_1+1, ..., l_n+1)) == kappa_top(g, l)`.
/// A correct implementation returns `true` on every valid input.
pub fn check_pushforward_identity(oracle: &PsiOracle, genus: u32, indices: &[u64]) -> Result<bool> {
    let kappa = KappaMonomial::new(genus, indices.to_vec())?;
    let omega = OmegaMonomial::new(genus, indices.iter().map(|&l| l + 1).collect())?;
    Ok(omega_top(oracle, &omega)? == kappa_top(oracle, &kappa)?)
}
