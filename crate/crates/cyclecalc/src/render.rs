//! Shared text rendering for linear combinations of formal symbols.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Render `sum coeff * symbol` with signs folded into separators and unit
/// coefficients omitted, e.g. `6*C_(3) - C_(4) + 1/2*C_(5)`. Zero terms are
/// skipped; the empty combination renders as `0`.
pub(crate) fn linear_combo<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (coeff, symbol) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let abs = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&symbol);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn formatting() {
        let s = linear_combo(vec![
            (rat(0), "a".to_string()),
            (rat(1), "b".to_string()),
            (rat(-24), "c".to_string()),
            (frac(1, 2), "d".to_string()),
            (rat(-1), "e".to_string()),
        ]);
        assert_eq!(s, "b - 24*c + 1/2*d - e");
        assert_eq!(linear_combo(vec![]), "0");
        assert_eq!(linear_combo(vec![(rat(-3), "x".to_string())]), "-3*x");
    }
}
