//! 2-graceful α-labelings of ladders `L_{2k} = P_2 × P_k`, which exist
//! exactly when k is even (2 must divide e = 3k-2).

use super::{finalize, ConstructionError};
use crate::graph::Graph;
use crate::labeling::Labeling;

/// Labels the ladder on `2k` vertices for even `k`. Writing `A_h` for the
/// vertices `(i, j)` with `i + j ≡ h (mod 2)`:
/// low part `A_0` gets `f(i,j) = j`; high part `A_1` gets `3k - 2j - 1` for
/// `j < k/2` and `3k - 2j - 2` for `j ≥ k/2`.
pub fn label_ladder_d2(k: usize) -> Result<Labeling, ConstructionError> {
    if k % 2 != 0 {
        return Err(ConstructionError::not_admissible(
            "ladder",
            format!("k = {k} is odd, so 2 does not divide e = 3k-2"),
        ));
    }
    let graph = Graph::ladder(k)?;
    let mut slots = vec![None; 2 * k];
    for i in 0..2 {
        for j in 0..k {
            let label = if (i + j) % 2 == 0 {
                j
            } else if j < k / 2 {
                3 * k - 2 * j - 1
            } else {
                3 * k - 2 * j - 2
            };
            slots[i * k + j] = Some(label);
        }
    }
    finalize(graph, 2, slots, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_ladder_is_a_4_cycle() {
        let l = label_ladder_d2(2).unwrap();
        assert_eq!(l.labels(), &[0, 2, 5, 1]);
        assert_eq!(l.verify_d_graceful().unwrap().realized, vec![1, 2, 4, 5]);
    }

    #[test]
    fn l16_label_sets() {
        let l = label_ladder_d2(8).unwrap();
        let (mut low, mut high) = (Vec::new(), Vec::new());
        for i in 0..2 {
            for j in 0..8 {
                let label = l.labels()[i * 8 + j];
                if (i + j) % 2 == 0 {
                    low.push(label);
                } else {
                    high.push(label);
                }
            }
        }
        low.sort_unstable();
        high.sort_unstable();
        assert_eq!(low, (0..=7).collect::<Vec<_>>());
        assert_eq!(high, vec![8, 10, 12, 14, 17, 19, 21, 23]);
    }

    #[test]
    fn even_k_sweep_is_alpha() {
        for k in (2..=30).step_by(2) {
            let l = label_ladder_d2(k).unwrap();
            assert_eq!(l.verify_alpha(), Ok(true), "k = {k}");
        }
    }

    #[test]
    fn odd_k_is_not_admissible() {
        for k in [3usize, 5, 9, 15] {
            assert!(matches!(
                label_ladder_d2(k),
                Err(ConstructionError::NotAdmissible { .. })
            ));
        }
    }
}
