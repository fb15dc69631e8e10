//! Expansion of omega-class monomials into signed, psi-decorated pinwheel
//! strata, and top-degree evaluation of the resulting terms.
//!
//! A monomial `prod omega_i^{k_i}` on the genus-g, n-marked space expands as
//! a sum over set partitions P of the mark set. The stratum of P carries one
//! rational tail per non-singleton part; the node joining the spine to the
//! j-th tail contributes a geometric series in the two half-edge psi classes,
//!
//! ```text
//! psi_spine^{alpha_j} / (-psi_spine - psi_tail)
//!     = sum_{b=0}^{alpha_j - 1} (-1)^{b+1} psi_spine^{alpha_j - 1 - b} psi_tail^b,
//! ```
//!
//! where `alpha_j` is the total exponent weight carried into the part and
//! negative spine powers vanish. Singleton parts contribute the bare factor
//! `psi^{alpha_j}` at their mark. A non-singleton part with `alpha_j = 0`
//! kills its partition outright, so the expansion is supported on strata
//! whose every tail absorbs positive weight.
//!
//! The full series is the Chow-level statement. On a tail with `|P_j|` marks
//! the class `psi_tail^b` dies for `b > |P_j| - 2` for dimension reasons;
//! [`expand_graph_formula_simplified`] drops those terms eagerly, while the
//! default expansion keeps them and lets evaluation kill them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_set_partitions, SetPartition};
use crate::psi::PsiOracle;
use crate::rational::Rational;
use num_traits::Zero;

/// A monomial `prod_{i=1}^n omega_i^{k_i}` on the genus-g, n-marked space.
/// Omega classes are pulled back from one-marked spaces, so `g >= 1` and
/// `n >= 1` are required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaMonomial {
    genus: u32,
    exponents: Vec<u64>,
}

impl OmegaMonomial {
    pub fn new(genus: u32, exponents: Vec<u64>) -> Result<Self> {
        if genus < 1 {
            return Err(Error::invalid("omega classes need genus >= 1"));
        }
        if exponents.is_empty() {
            return Err(Error::invalid("at least one marked point is required"));
        }
        Ok(OmegaMonomial { genus, exponents })
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

    /// Total degree `K = sum k_i`.
    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    /// Dimension `3g - 3 + n` of the ambient space.
    pub fn dimension(&self) -> u64 {
        (3 * self.genus as i64 - 3 + self.marks() as i64) as u64
    }
}

/// One summand of the expanded graph formula: a pinwheel stratum with a sign
/// and per-part decorations. `spine_exponents[j]` is the psi power on the
/// spine side of part j (at the mark itself for singletons);
/// `tail_exponents[j]` is the psi power on the tail side, always zero for
/// singleton parts, which have no node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PinwheelTerm {
    partition: Vec<Vec<usize>>,
    sign: i8,
    spine_exponents: Vec<u64>,
    tail_exponents: Vec<u64>,
}

impl PinwheelTerm {
    /// Structural validation: the partition must be canonical over some
    /// `[n]`, exponent vectors must match its length, singleton parts must
    /// carry no tail exponent, and the sign must obey the series sign law
    /// `sign = prod_{|P_j|>1} (-1)^{b_j + 1}`.
    pub fn new(
        partition: SetPartition,
        sign: i8,
        spine_exponents: Vec<u64>,
        tail_exponents: Vec<u64>,
    ) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::invalid("sign must be +1 or -1"));
        }
        if spine_exponents.len() != partition.len() || tail_exponents.len() != partition.len() {
            return Err(Error::invalid(format!(
                "expected {} per-part exponents, got {} spine / {} tail",
                partition.len(),
                spine_exponents.len(),
                tail_exponents.len()
            )));
        }
        let mut expected_sign = 1i8;
        for (part, &b) in partition.parts().iter().zip(&tail_exponents) {
            if part.len() == 1 {
                if b != 0 {
                    return Err(Error::invalid(
                        "singleton parts have no node and take no tail exponent",
                    ));
                }
            } else if b % 2 == 0 {
                expected_sign = -expected_sign;
            }
        }
        if sign != expected_sign {
            return Err(Error::invalid(format!(
                "sign {sign} violates the series sign law (expected {expected_sign})"
            )));
        }
        Ok(PinwheelTerm {
            partition: partition.parts().to_vec(),
            sign,
            spine_exponents,
            tail_exponents,
        })
    }

    pub fn partition(&self) -> Result<SetPartition> {
        let n = self.partition.iter().map(|p| p.len()).sum();
        SetPartition::new(n, self.partition.clone())
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn spine_exponents(&self) -> &[u64] {
        &self.spine_exponents
    }

    pub fn tail_exponents(&self) -> &[u64] {
        &self.tail_exponents
    }

    /// Number of non-singleton parts, the codimension of the stratum.
    pub fn codimension(&self) -> usize {
        self.partition.iter().filter(|p| p.len() > 1).count()
    }

    /// Codimension plus all decoration exponents.
    pub fn total_degree(&self) -> u64 {
        self.codimension() as u64
            + self.spine_exponents.iter().sum::<u64>()
            + self.tail_exponents.iter().sum::<u64>()
    }
}

fn expand(monomial: &OmegaMonomial, simplify: bool) -> Vec<PinwheelTerm> {
    let n = monomial.marks();
    let ks = monomial.exponents();
    let mut terms = Vec::new();

    'partition: for partition in
        enumerate_set_partitions(n).expect("monomials have at least one mark")
    {
        let alphas = partition
            .part_weights(ks)
            .expect("weights indexed by the same mark set");
        let parts = partition.parts();

        // per-part decoration choices: (sign, spine, tail)
        let mut choices: Vec<Vec<(i8, u64, u64)>> = Vec::with_capacity(parts.len());
        for (part, &alpha) in parts.iter().zip(&alphas) {
            if part.len() == 1 {
                choices.push(vec![(1, alpha, 0)]);
                continue;
            }
            if alpha == 0 {
                // the series for this tail is identically zero
                continue 'partition;
            }
            let max_tail = if simplify {
                (part.len() as u64 - 2).min(alpha - 1)
            } else {
                alpha - 1
            };
            choices.push(
                (0..=max_tail)
                    .map(|b| (if b % 2 == 0 { -1 } else { 1 }, alpha - 1 - b, b))
                    .collect(),
            );
        }

        // Cartesian product of the per-part series, tails ascending within
        // each slot, so the emitted order is deterministic.
        let mut picked: Vec<(i8, u64, u64)> = Vec::with_capacity(choices.len());
        emit_products(&choices, &mut picked, &mut |combo| {
            let mut sign = 1i8;
            let mut spine = Vec::with_capacity(combo.len());
            let mut tails = Vec::with_capacity(combo.len());
            for &(s, a, b) in combo {
                sign *= s;
                spine.push(a);
                tails.push(b);
            }
            terms.push(PinwheelTerm {
                partition: parts.to_vec(),
                sign,
                spine_exponents: spine,
                tail_exponents: tails,
            });
        });
    }
    terms
}

fn emit_products<T: Copy>(choices: &[Vec<T>], picked: &mut Vec<T>, visit: &mut impl FnMut(&[T])) {
    if picked.len() == choices.len() {
        visit(picked);
        return;
    }
    for &choice in &choices[picked.len()] {
        picked.push(choice);
        emit_products(choices, picked, visit);
        picked.pop();
    }
}

/// Expand a monomial into the complete multiset of decorated pinwheel terms,
/// keeping every term of the geometric series (the Chow-level view).
/// Partitions are visited in enumeration order and series terms emitted by
/// ascending tail exponent, so the output order is deterministic.
pub fn expand_graph_formula(monomial: &OmegaMonomial) -> Vec<PinwheelTerm> {
    expand(monomial, false)
}

/// Like [`expand_graph_formula`], but eagerly drops series terms whose tail
/// exponent exceeds the dimension `|P_j| - 2` of the tail factor; these are
/// zero as classes. On paper-sized examples this reproduces the shape a
/// human would write down.
pub fn expand_graph_formula_simplified(monomial: &OmegaMonomial) -> Vec<PinwheelTerm> {
    expand(monomial, true)
}

/// Integrate one decorated term over the genus-g, n-marked space.
///
/// The value is zero unless the term is of top degree `3g - 3 + n` and every
/// tail carries exactly `psi^{|P_j| - 2}`, the top power on its factor; each
/// such tail integrates to one, leaving `sign * <prod tau_{a_j}>_g` on the
/// spine.
pub fn evaluate_pinwheel_term(
    oracle: &PsiOracle,
    genus: u32,
    marks: usize,
    term: &PinwheelTerm,
) -> Result<Rational> {
    if genus < 1 {
        return Err(Error::invalid("pinwheel strata live on genus >= 1 spaces"));
    }
    let covered: usize = term.parts().iter().map(|p| p.len()).sum();
    if covered != marks {
        return Err(Error::invalid(format!(
            "term partitions {covered} marks, expected {marks}"
        )));
    }
    // re-validate structure so hand-built terms cannot smuggle in nonsense
    let partition = SetPartition::new(marks, term.parts().to_vec())?;
    let rebuilt = PinwheelTerm::new(
        partition,
        term.sign(),
        term.spine_exponents().to_vec(),
        term.tail_exponents().to_vec(),
    )?;

    let dim = 3 * genus as i64 - 3 + marks as i64;
    if rebuilt.total_degree() as i64 != dim {
        return Ok(Rational::zero());
    }
    for (part, &b) in rebuilt.parts().iter().zip(rebuilt.tail_exponents()) {
        if part.len() > 1 && b != part.len() as u64 - 2 {
            return Ok(Rational::zero());
        }
    }
    let value = oracle.psi_top(genus, rebuilt.spine_exponents())?;
    Ok(if rebuilt.sign() < 0 { -value } else { value })
}

/// Expand the monomial and integrate term by term. Returns zero when the
/// monomial is not of top degree.
pub fn integrate_expansion(oracle: &PsiOracle, monomial: &OmegaMonomial) -> Result<Rational> {
    if monomial.total_degree() != monomial.dimension() {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    for term in expand_graph_formula(monomial) {
        total += evaluate_pinwheel_term(oracle, monomial.genus(), monomial.marks(), &term)?;
    }
    Ok(total)
}
