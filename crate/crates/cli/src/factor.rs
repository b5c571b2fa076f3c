//! Best-effort factored rendering, e.g. `1/6*X*(X + 1)*(X + 2)`.
//!
//! Only rational roots `a/b` with `|a| <= 64` and `1 <= b <= 12` are tried;
//! whatever does not split is printed as a monic cofactor.

use std::collections::BTreeSet;

use gapsum_core::{format_rational, int, rat, Polynomial, Rational};
use num_traits::{Signed, Zero};

const MAX_NUMERATOR: i64 = 64;
const MAX_DENOMINATOR: i64 = 12;

fn candidate_roots() -> BTreeSet<Rational> {
    let mut set = BTreeSet::new();
    for b in 1..=MAX_DENOMINATOR {
        for a in -MAX_NUMERATOR..=MAX_NUMERATOR {
            set.insert(rat(a, b));
        }
    }
    set
}

fn linear_factor(root: &Rational) -> String {
    if root.is_zero() {
        return "X".to_string();
    }
    let neg = -root.clone();
    if neg.is_positive() {
        format!("(X + {})", format_rational(&neg))
    } else {
        format!("(X - {})", format_rational(root))
    }
}

/// Renders `p` as `lead*(X - r1)*...*(cofactor)`, falling back to the
/// expanded form when no root is found.
pub fn factored(p: &Polynomial) -> String {
    if p.degree() < 2 {
        return p.to_string();
    }
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    for r in candidate_roots() {
        let mut mult = 0;
        while rest.degree() >= 1 && rest.evaluate(&r).is_zero() {
            let divisor = Polynomial::from_coeffs(vec![-r.clone(), int(1)]);
            rest = rest.euclid_div(&divisor).expect("nonzero divisor").0;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
        if rest.degree() < 1 {
            break;
        }
    }
    if roots.is_empty() {
        return p.to_string();
    }
    // X first, then (X + 1), (X - 1), (X + 2), ...
    roots.sort_by(|(a, _), (b, _)| a.abs().cmp(&b.abs()).then(a.cmp(b)));

    let lead = rest.leading().cloned().expect("nonzero polynomial");
    let cofactor = rest.scale(&lead.recip());
    let mut parts: Vec<String> = roots
        .iter()
        .map(|(r, m)| {
            let f = linear_factor(r);
            if *m == 1 {
                f
            } else {
                format!("{f}^{m}")
            }
        })
        .collect();
    if cofactor.degree() >= 1 {
        parts.push(format!("({cofactor})"));
    }
    let body = parts.join("*");
    if lead == int(1) {
        body
    } else if lead == int(-1) {
        format!("-{body}")
    } else {
        format!("{}*{body}", format_rational(&lead))
    }
}
