use super::{sst_enumerate, Partition, SymError};
use crate::exactpoly::{Polynomial, VarSpace};
use crate::scalar::{Scalar, Sign};

/// Factorial Schur polynomial, the equivariant class of a matrix Schubert variety.
///
/// Sum over `SST(lam, r)` of products over cells of
/// `u_{tau(c)} - t_sign * t_{tau(c) + col(c) - row(c)}`.
/// The `t` index is the entry shifted by the cell's content, so it always
/// lies in `1..=n-1` when `lam` fits in the `r x (n-r)` box.
pub fn factorial_schur<C: Scalar>(
    lam: &Partition,
    space: VarSpace,
    t_sign: Sign,
) -> Result<Polynomial<C>, SymError> {
    let (r, n) = (space.r, space.n);
    if !lam.fits(r, (n - r) as u32) {
        return Err(SymError::ShapeOutOfBox {
            partition: lam.clone(),
            r,
            n,
        });
    }
    // Each factor only depends on (entry, content); build them once.
    let max_content = lam.largest() as i64;
    let factor = |e: u32, content: i64| -> Polynomial<C> {
        let j = e as i64 + content;
        debug_assert!(j >= 1 && j as usize <= n);
        Polynomial::u(space, e as usize) - t_sign.apply_poly(Polynomial::t(space, j as usize))
    };
    let mut table = Vec::new();
    for e in 1..=r as u32 {
        let row: Vec<Polynomial<C>> = (-(r as i64)..=max_content)
            .map(|c| {
                let j = e as i64 + c;
                if j >= 1 && j as usize <= n {
                    factor(e, c)
                } else {
                    Polynomial::zero(space)
                }
            })
            .collect();
        table.push(row);
    }
    let mut acc = Polynomial::zero(space);
    for tab in sst_enumerate(lam, r as u32) {
        let mut term = Polynomial::one(space);
        for (row, col, e) in tab.cells() {
            let content = col as i64 - row as i64;
            term = &term * &table[e as usize - 1][(content + r as i64) as usize];
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::schur_in_u;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn documented_examples() {
        let s = VarSpace::new(2, 4).unwrap();
        assert_eq!(factorial_schur::<BigInt>(&Partition::empty(), s, Sign::Plus).unwrap(), P::one(s));
        let plus = factorial_schur::<BigInt>(&partition![1], s, Sign::Plus).unwrap();
        assert_eq!(plus, (P::u(s, 1) - P::t(s, 1)) + (P::u(s, 2) - P::t(s, 2)));
        let minus = factorial_schur::<BigInt>(&partition![1], s, Sign::Minus).unwrap();
        assert_eq!(minus, P::u(s, 1) + P::u(s, 2) + P::t(s, 1) + P::t(s, 2));
        assert!(matches!(
            factorial_schur::<BigInt>(&partition![3], s, Sign::Plus),
            Err(SymError::ShapeOutOfBox { .. })
        ));
    }

    #[test]
    fn top_degree_is_schur_and_symmetric() {
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let s = VarSpace::new(r, n).unwrap();
            for lam in Partition::in_box(r, (n - r) as u32) {
                for sign in [Sign::Plus, Sign::Minus] {
                    let f = factorial_schur::<BigInt>(&lam, s, sign).unwrap();
                    assert!(f.is_symmetric_in_u(), "{lam} not symmetric");
                    let diff = &f - &schur_in_u(&lam, s);
                    assert!(diff.is_zero() || diff.u_degree() < lam.size(), "{lam}");
                    assert!(f.is_homogeneous());
                }
            }
        }
    }
}
