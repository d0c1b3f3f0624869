//! Brute-force checks that avoid the arithmetic shortcuts used elsewhere.
//! They are slow (quadratic in `n` or worse) and meant for desk-scale
//! cross-checking.

use crate::circulant::Circulant;

/// Every non-identity element of `subgroup` moves every nonzero residue.
/// Walks `H x Z_n` directly instead of using `gcd(h - 1, n)`.
pub fn stabilizers_trivial(n: u64, subgroup: &[u64]) -> bool {
    subgroup.iter().filter(|&&h| h != 1).all(|&h| {
        // y runs through h * x mod n
        let mut y = 0;
        (1..n).all(|x| {
            y += h;
            if y >= n {
                y -= n;
            }
            y != x
        })
    })
}

/// No two graphs in the list are related by a unit multiplier.
pub fn pairwise_non_isomorphic(graphs: &[Circulant]) -> bool {
    graphs.iter().enumerate().all(|(i, a)| {
        graphs[i + 1..]
            .iter()
            .all(|b| matches!(a.iso_multiplier(b), Ok(None)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::cyclic_subgroup;

    #[test]
    fn stabilizer_examples() {
        assert!(stabilizers_trivial(6253, &cyclic_subgroup(5507, 6253)));
        assert!(!stabilizers_trivial(27, &cyclic_subgroup(8, 27)));
        assert!(stabilizers_trivial(9, &[1, 8]));
    }

    #[test]
    fn non_isomorphic_examples() {
        let a = Circulant::new(19, [1, 7, 8, 11, 12, 18]).unwrap();
        let b = Circulant::new(19, [2, 3, 5, 14, 16, 17]).unwrap();
        let c = Circulant::cycle(19).unwrap();
        assert!(!pairwise_non_isomorphic(&[a.clone(), b]));
        assert!(pairwise_non_isomorphic(&[a, c]));
    }
}
