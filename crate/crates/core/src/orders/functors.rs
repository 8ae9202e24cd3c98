use super::DoubleOrder;
use crate::error::{Error, Result};

/// `F(o) = (x<, y< ∖ x<)` on semi-regular orders; lands in `R(A)`.
pub fn f_map(o: &DoubleOrder) -> Result<DoubleOrder> {
    if !o.is_semi_regular() {
        return Err(Error::contract(format!("F needs a semi-regular order, got {o}")));
    }
    let out = f_unchecked(o);
    if !out.is_regular() {
        return Err(Error::consistency(format!("F({o}) = {out} is not regular")));
    }
    Ok(out)
}

pub(crate) fn f_unchecked(o: &DoubleOrder) -> DoubleOrder {
    DoubleOrder::new(o.x, o.y.minus_comparable(&o.x))
}

/// `G(o₀ ⊏ ⋯ ⊏ o_r) = (x<_r, y<_0)`, which is also the union of the
/// chain; both forms are computed and compared.
pub fn g_map(chain: &[DoubleOrder]) -> Result<DoubleOrder> {
    let (first, last) = match (chain.first(), chain.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::argument("G needs a non-empty chain")),
    };
    for o in chain {
        if !o.is_regular() {
            return Err(Error::argument(format!("chain entry {o} is not regular")));
        }
    }
    for w in chain.windows(2) {
        if w[0] == w[1] || !w[0].is_sqsubset(&w[1]) {
            return Err(Error::argument(format!(
                "chain is not strictly increasing in ⊑ at {} / {}",
                w[0], w[1]
            )));
        }
    }
    let out = DoubleOrder::new(last.x, first.y);
    let union = chain
        .iter()
        .try_fold(*first, |acc, o| acc.union_bar(o))
        .ok_or_else(|| Error::consistency("union of a ⊑-chain is reflexive"))?;
    if union != out {
        return Err(Error::consistency(format!(
            "G formula {out} differs from the union {union}"
        )));
    }
    if !out.is_semi_regular() {
        return Err(Error::consistency(format!("G value {out} is not semi-regular")));
    }
    Ok(out)
}

/// `G ∘ sd(F)` on a `⊊`-chain of semi-regular orders. `F` is monotone, so
/// the image is a `⊑`-chain once repeated entries are dropped.
pub fn g_of_sd_f(chain: &[DoubleOrder]) -> Result<DoubleOrder> {
    let mut image: Vec<DoubleOrder> = Vec::with_capacity(chain.len());
    for o in chain {
        let f = f_map(o)?;
        if image.last() != Some(&f) {
            image.push(f);
        }
    }
    g_map(&image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn f_examples() {
        let o = DoubleOrder::from_pairs(2, &[(0, 1)], &[(0, 1)]);
        assert_eq!(f_map(&o).unwrap(), DoubleOrder::from_pairs(2, &[(0, 1)], &[]));
        let r = DoubleOrder::from_pairs(2, &[], &[(1, 0)]);
        assert_eq!(f_map(&r).unwrap(), r);
        let not_double = DoubleOrder::from_pairs(2, &[], &[]);
        assert!(f_map(&not_double).is_err());
    }

    #[test]
    fn f_commutes_with_action() {
        let o = DoubleOrder::from_pairs(3, &[(0, 2), (1, 2)], &[(0, 1), (0, 2), (1, 2)]);
        assert!(o.is_semi_regular());
        for s in Permutation::all(3) {
            assert_eq!(f_map(&o.act(&s)).unwrap(), f_map(&o).unwrap().act(&s));
        }
    }

    #[test]
    fn g_examples() {
        let lo = DoubleOrder::from_pairs(2, &[], &[(0, 1)]);
        let hi = DoubleOrder::from_pairs(2, &[(0, 1)], &[]);
        assert_eq!(g_map(&[lo]).unwrap(), lo);
        assert_eq!(
            g_map(&[lo, hi]).unwrap(),
            DoubleOrder::from_pairs(2, &[(0, 1)], &[(0, 1)])
        );
        assert!(g_map(&[hi, lo]).is_err());
        assert!(g_map(&[]).is_err());
    }
}
