use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{schur_expand, Partition};
use crate::exactpoly::{Polynomial, VarSpace};
use crate::scalar::Sign;

fn subscript(p: &Partition) -> String {
    let sep = if p.largest() >= 10 { "," } else { "" };
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Expands a `u`-free polynomial that is symmetric in `t` in Schur
/// polynomials of `t`. `None` when it is not symmetric.
pub fn schur_expand_t(q: &Polynomial<BigInt>) -> Option<Vec<(Partition, BigInt)>> {
    let s = q.space();
    if q.involves_u() {
        return None;
    }
    let target = VarSpace::new(s.n, s.n).expect("n >= 1");
    let images: Vec<(usize, Sign)> = (0..s.nvars())
        .map(|idx| if idx < s.r { (idx, Sign::Plus) } else { (idx - s.r, Sign::Plus) })
        .collect();
    let e = schur_expand(&q.relabel(target, &images)).ok()?;
    e.terms()
        .iter()
        .map(|(lam, c)| c.as_constant().map(|c| (lam.clone(), c)))
        .collect()
}

/// Human-readable `sum c s_mu(t) s_lam(u)`, e.g. `2s_1(u) + s_1(t)`.
///
/// Coefficients that are not symmetric in `t` are printed as polynomials.
pub fn render_schur_form(p: &Polynomial<BigInt>) -> String {
    let Ok(e) = schur_expand(p) else {
        return p.to_string();
    };
    let mut pieces: Vec<(bool, String)> = Vec::new();
    // Largest u-shape first.
    for (lam, q) in e.terms().iter().rev() {
        let u_part = if lam.size() == 0 {
            String::new()
        } else {
            format!("s_{}(u)", subscript(lam))
        };
        match schur_expand_t(q) {
            Some(ts) => {
                for (mu, c) in ts.iter().rev() {
                    let t_part = if mu.size() == 0 {
                        String::new()
                    } else {
                        format!("s_{}(t)", subscript(mu))
                    };
                    let body = format!("{t_part}{u_part}");
                    let mag = c.abs();
                    let text = match (body.is_empty(), mag.is_one()) {
                        (true, _) => mag.to_string(),
                        (false, true) => body,
                        (false, false) => format!("{mag}{body}"),
                    };
                    pieces.push((c.is_negative(), text));
                }
            }
            None => {
                let body = if u_part.is_empty() { String::new() } else { format!("*{u_part}") };
                pieces.push((false, format!("({q}){body}")));
            }
        }
    }
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, text)) in pieces.iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(text);
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::{schur_in_u, schur_poly, EvalArgs};

    type P = Polynomial<BigInt>;

    #[test]
    fn renders_small_classes() {
        let s = VarSpace::new(2, 4).unwrap();
        let s1t = schur_poly::<BigInt>(&partition![1], &EvalArgs::t_vars(s, 1..=4, Sign::Plus));
        let p = schur_in_u::<BigInt>(&partition![1], s).scale(&BigInt::from(2)) + s1t.clone();
        assert_eq!(render_schur_form(&p), "2s_1(u) + s_1(t)");
        assert_eq!(render_schur_form(&P::zero(s)), "0");
        assert_eq!(render_schur_form(&-P::one(s)), "-1");
        let mixed = &s1t * &schur_in_u(&partition![1, 1], s) - schur_in_u(&partition![2], s);
        assert_eq!(render_schur_form(&mixed), "-s_2(u) + s_1(t)s_11(u)");
        assert_eq!(render_schur_form(&P::t(s, 1)), "(t1)");
    }

    #[test]
    fn t_expansion_rejects_asymmetric() {
        let s = VarSpace::new(1, 3).unwrap();
        assert!(schur_expand_t(&P::t(s, 2)).is_none());
        let e = schur_expand_t(&(P::t(s, 1) * P::t(s, 2) + P::t(s, 1) * P::t(s, 3) + P::t(s, 2) * P::t(s, 3))).unwrap();
        assert_eq!(e, vec![(partition![1, 1], BigInt::one())]);
    }
}
