//! Output formatting: exact values and symbolic expansions as plain text,
//! JSON, or LaTeX.
//!
//! JSON output is deterministic (fixed field order, integers as decimal
//! strings), so parsing an emitted document and re-rendering it reproduces
//! the bytes exactly.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::PinwheelTerm;
use crate::partition::SetPartition;
use crate::rational::{rational_from_strings, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Latex,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(Error::invalid(format!(
                "unknown format {other:?} (expected plain, json or latex)"
            ))),
        }
    }
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct ValueRecord {
    num: String,
    den: String,
}

/// Render a reduced rational: `num/den` (or a bare integer) in plain text,
/// `{"num":...,"den":...}` in JSON, `\frac{num}{den}` in LaTeX.
pub fn render_value(value: &Rational, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            if value.denom().is_one() {
                value.numer().to_string()
            } else {
                format!("{}/{}", value.numer(), value.denom())
            }
        }
        OutputFormat::Json => {
            let record = ValueRecord {
                num: value.numer().to_string(),
                den: value.denom().to_string(),
            };
            serde_json::to_string(&record).expect("value record is serializable")
        }
        OutputFormat::Latex => {
            if value.denom().is_one() {
                value.numer().to_string()
            } else {
                let (sign, magnitude) = if value.numer().sign() == num_bigint::Sign::Minus {
                    ("-", -value.numer().clone())
                } else {
                    ("", value.numer().clone())
                };
                format!("{sign}\\frac{{{magnitude}}}{{{}}}", value.denom())
            }
        }
    }
}

/// Parse a value previously rendered as JSON.
pub fn parse_value_json(text: &str) -> Result<Rational> {
    let record: ValueRecord = serde_json::from_str(text.trim())
        .map_err(|err| Error::invalid(format!("bad value record: {err}")))?;
    rational_from_strings(&record.num, &record.den)
}

#[derive(Debug, Serialize, Deserialize)]
struct TermRecord {
    partition: Vec<Vec<usize>>,
    sign: i8,
    spine_exponents: Vec<u64>,
    tail_exponents: Vec<u64>,
}

/// Render an expansion in the requested format: JSON gives the list of
/// `{partition, sign, spine_exponents, tail_exponents}` records; plain and
/// LaTeX give a signed sum of decorated strata, one monomial per term.
pub fn render_expansion(terms: &[PinwheelTerm], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(terms).expect("terms are serializable"),
        OutputFormat::Plain => {
            let mut out = String::new();
            for term in terms {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&render_term(term, false));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for (i, term) in terms.iter().enumerate() {
                let rendered = render_term(term, true);
                if i == 0 {
                    // leading "+" is dropped on the first term
                    out.push_str(rendered.strip_prefix("+ ").unwrap_or(&rendered));
                } else {
                    out.push(' ');
                    out.push_str(&rendered);
                }
            }
            out
        }
    }
}

/// Parse an expansion previously rendered as JSON, re-validating every term.
pub fn parse_expansion_json(text: &str) -> Result<Vec<PinwheelTerm>> {
    let records: Vec<TermRecord> = serde_json::from_str(text.trim())
        .map_err(|err| Error::invalid(format!("bad expansion document: {err}")))?;
    records
        .into_iter()
        .map(|record| {
            let n = record.partition.iter().map(|p| p.len()).sum();
            let partition = SetPartition::new(n, record.partition)?;
            PinwheelTerm::new(
                partition,
                record.sign,
                record.spine_exponents,
                record.tail_exponents,
            )
        })
        .collect()
}

/// One decorated stratum as a signed monomial. Spine flags render as
/// `psi_b` / `\psi_\bullet` and tail flags as `psi_s` / `\psi_\star`,
/// indexed by part only when several tails are present; singleton parts
/// render at their mark label. A bare fundamental class renders as `1`.
fn render_term(term: &PinwheelTerm, latex: bool) -> String {
    let parts = term.parts();
    let non_singletons = parts.iter().filter(|p| p.len() > 1).count();
    let mut factors: Vec<String> = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        let spine = term.spine_exponents()[j];
        let tail = term.tail_exponents()[j];
        if part.len() == 1 {
            if spine > 0 {
                factors.push(psi_factor(&part[0].to_string(), spine, latex));
            }
            continue;
        }
        let index = if non_singletons > 1 {
            format!("{}", j + 1)
        } else {
            String::new()
        };
        let (bullet, star) = if latex {
            (
                format!("\\bullet{}", braced_subscript(&index)),
                format!("\\star{}", braced_subscript(&index)),
            )
        } else {
            (format!("b{index}"), format!("s{index}"))
        };
        if spine > 0 {
            factors.push(psi_factor(&bullet, spine, latex));
        }
        if tail > 0 {
            factors.push(psi_factor(&star, tail, latex));
        }
    }

    let mut body = if factors.is_empty() {
        String::new()
    } else {
        factors.join(if latex { "" } else { " " })
    };

    if term.codimension() > 0 {
        let stratum = if latex {
            let mut s = String::from("[\\Delta_{");
            for part in parts {
                s.push_str("\\{");
                s.push_str(
                    &part
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                );
                s.push_str("\\}");
            }
            s.push_str("}]");
            s
        } else {
            let mut s = String::from("[Delta ");
            for part in parts {
                s.push('{');
                s.push_str(
                    &part
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                );
                s.push('}');
            }
            s.push(']');
            s
        };
        if !body.is_empty() && !latex {
            body.push(' ');
        }
        body.push_str(&stratum);
    }

    if body.is_empty() {
        body.push('1');
    }
    let sign = if term.sign() < 0 { '-' } else { '+' };
    format!("{sign} {body}")
}

fn braced_subscript(index: &str) -> String {
    if index.is_empty() {
        String::new()
    } else {
        format!("_{{{index}}}")
    }
}

fn psi_factor(label: &str, exponent: u64, latex: bool) -> String {
    if latex {
        if exponent == 1 {
            format!("\\psi_{{{label}}}")
        } else {
            format!("\\psi_{{{label}}}^{{{exponent}}}")
        }
    } else if exponent == 1 {
        format!("psi_{label}")
    } else {
        format!("psi_{label}^{exponent}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{expand_graph_formula_simplified, OmegaMonomial};
    use crate::rational::rational;

    #[test]
    fn value_formats() {
        let v = rational(43, 2880);
        assert_eq!(render_value(&v, OutputFormat::Plain), "43/2880");
        assert_eq!(
            render_value(&v, OutputFormat::Json),
            "{\"num\":\"43\",\"den\":\"2880\"}"
        );
        assert_eq!(render_value(&v, OutputFormat::Latex), "\\frac{43}{2880}");

        let one = rational(1, 1);
        assert_eq!(render_value(&one, OutputFormat::Plain), "1");
        assert_eq!(render_value(&one, OutputFormat::Latex), "1");

        let neg = rational(-1, 24);
        assert_eq!(render_value(&neg, OutputFormat::Plain), "-1/24");
        assert_eq!(render_value(&neg, OutputFormat::Latex), "-\\frac{1}{24}");
        assert_eq!(
            render_value(&neg, OutputFormat::Json),
            "{\"num\":\"-1\",\"den\":\"24\"}"
        );
        assert_eq!(render_value(&rational(0, 1), OutputFormat::Plain), "0");
    }

    #[test]
    fn value_json_round_trips_byte_identically() {
        for v in [rational(43, 2880), rational(-1, 24), rational(5, 1)] {
            let rendered = render_value(&v, OutputFormat::Json);
            let parsed = parse_value_json(&rendered).unwrap();
            assert_eq!(render_value(&parsed, OutputFormat::Json), rendered);
        }
    }

    #[test]
    fn expansion_json_round_trips_byte_identically() {
        let m = OmegaMonomial::new(2, vec![3, 2, 0]).unwrap();
        let terms = expand_graph_formula_simplified(&m);
        let rendered = render_expansion(&terms, OutputFormat::Json);
        let parsed = parse_expansion_json(&rendered).unwrap();
        assert_eq!(render_expansion(&parsed, OutputFormat::Json), rendered);
    }

    #[test]
    fn latex_three_mark_example() {
        let m = OmegaMonomial::new(2, vec![3, 2, 0]).unwrap();
        let terms = expand_graph_formula_simplified(&m);
        let latex = render_expansion(&terms, OutputFormat::Latex);
        assert!(latex.starts_with("\\psi_{1}^{3}\\psi_{2}^{2}"));
        assert!(latex.contains("- \\psi_{\\bullet}^{4}[\\Delta_{\\{1,2\\}\\{3\\}}]"));
        assert!(latex.contains("- \\psi_{\\bullet}^{2}\\psi_{2}^{2}[\\Delta_{\\{1,3\\}\\{2\\}}]"));
        assert!(latex.contains("- \\psi_{1}^{3}\\psi_{\\bullet}[\\Delta_{\\{1\\}\\{2,3\\}}]"));
        assert!(latex.contains("- \\psi_{\\bullet}^{4}[\\Delta_{\\{1,2,3\\}}]"));
        assert!(latex.contains("+ \\psi_{\\bullet}^{3}\\psi_{\\star}[\\Delta_{\\{1,2,3\\}}]"));
    }

    #[test]
    fn plain_degenerate_terms() {
        let m = OmegaMonomial::new(1, vec![2]).unwrap();
        let terms = expand_graph_formula_simplified(&m);
        assert_eq!(render_expansion(&terms, OutputFormat::Plain), "+ psi_1^2");

        let m = OmegaMonomial::new(1, vec![0, 0]).unwrap();
        let terms = expand_graph_formula_simplified(&m);
        assert_eq!(render_expansion(&terms, OutputFormat::Plain), "+ 1");
    }

    #[test]
    fn format_parsing() {
        assert_eq!(
            "plain".parse::<OutputFormat>().unwrap(),
            OutputFormat::Plain
        );
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!(
            "latex".parse::<OutputFormat>().unwrap(),
            OutputFormat::Latex
        );
        assert!("markdown".parse::<OutputFormat>().is_err());
    }
}
