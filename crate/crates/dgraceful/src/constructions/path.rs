//! d-graceful α-labelings of paths, for every admissible d.
//!
//! The path `P_{e+1}` is written `x_1 ∼ x_2 ∼ … ∼ x_{e+1}` (internally ids
//! `t-1`). Odd-indexed vertices `x_{2i+1}` take the low labels, even-indexed
//! `x_{2i}` the high ones; the exact rules split on the parity of `m = e/d`
//! and, when `m` is odd, on the parity of `d`.

use super::{apply_pieces, finalize, ConstructionError, Piece};
use crate::graph::Graph;
use crate::labeling::Labeling;

/// Builds the d-graceful α-labeling of the path with `e` edges.
pub fn label_path(e: usize, d: usize) -> Result<Labeling, ConstructionError> {
    let graph = Graph::path(e)?;
    if d == 0 || e % d != 0 {
        return Err(ConstructionError::not_admissible(
            "path",
            format!("d = {d} does not divide e = {e}"),
        ));
    }
    let m = (e / d) as i64;
    let d = d as i64;
    let bound = d * (m + 1); // labels live in [0, bound-1]

    let mut odd = Vec::new(); // rules for f(x_{2i+1})
    let mut even = Vec::new(); // rules for f(x_{2i})
    if m % 2 == 0 {
        // m even: low part is one run [0, dm/2]; high part descends in d
        // blocks of m/2, dropping one extra unit between blocks.
        odd.push(Piece::incr(0, d * m / 2, 0));
        for j in 0..d {
            even.push(Piece::decr(j * m / 2 + 1, (j + 1) * m / 2, bound - j));
        }
    } else if d % 2 == 1 {
        // m odd, d odd
        odd.push(Piece::incr(0, (m - 1) / 2, 0));
        for j in 1..=(d - 1) / 2 {
            odd.push(Piece::incr(((2 * j - 1) * m + 1) / 2, ((2 * j + 1) * m - 1) / 2, j));
        }
        for j in 0..=(d - 1) / 2 {
            even.push(Piece::decr(
                j * m + 1,
                ((j + 1) * m).min((d * m + 1) / 2),
                bound - j,
            ));
        }
    } else {
        // m odd, d even
        odd.push(Piece::incr(0, (m - 1) / 2, 0));
        for j in 1..d / 2 {
            odd.push(Piece::incr(((2 * j - 1) * m + 1) / 2, ((2 * j + 1) * m - 1) / 2, j));
        }
        odd.push(Piece::incr(((d - 1) * m + 1) / 2, d * m / 2, d / 2));
        for j in 0..=(d - 2) / 2 {
            even.push(Piece::decr(j * m + 1, (j + 1) * m, bound - j));
        }
    }

    let mut slots = vec![None; e + 1];
    apply_pieces(&mut slots, &odd, |i| (2 * i) as usize)?;
    apply_pieces(&mut slots, &even, |i| (2 * i - 1) as usize)?;
    finalize(graph, d as usize, slots, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::admissible_divisors;

    #[test]
    fn smallest_path() {
        assert_eq!(label_path(1, 1).unwrap().labels(), &[0, 1]);
    }

    #[test]
    fn p5_with_d2() {
        let l = label_path(4, 2).unwrap();
        assert_eq!(l.labels(), &[0, 5, 1, 3, 2]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.realized, vec![1, 2, 4, 5]);
    }

    #[test]
    fn p10_with_d3_is_the_odd_odd_case() {
        // m = 3, d = 3: both odd
        let l = label_path(9, 3).unwrap();
        assert_eq!(l.labels(), &[0, 11, 1, 10, 3, 9, 4, 7, 5, 6]);
        assert_eq!(l.verify_alpha(), Ok(true));
    }

    #[test]
    fn p19_with_d2_is_the_odd_even_case() {
        // m = 9 odd, d = 2 even
        let l = label_path(18, 2).unwrap();
        assert_eq!(
            l.labels(),
            &[0, 19, 1, 18, 2, 17, 3, 16, 4, 15, 6, 14, 7, 13, 8, 12, 9, 11, 10]
        );
    }

    #[test]
    fn p19_with_d18_is_odd_graceful() {
        let l = label_path(18, 18).unwrap();
        let odd_indexed: Vec<usize> = l.labels().iter().copied().step_by(2).collect();
        let even_indexed: Vec<usize> = l.labels().iter().copied().skip(1).step_by(2).collect();
        assert_eq!(odd_indexed, (0..=18).step_by(2).collect::<Vec<_>>());
        assert_eq!(even_indexed, (19..=35).rev().step_by(2).collect::<Vec<_>>());
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.required, (1..=35).step_by(2).collect::<Vec<_>>());
    }

    #[test]
    fn every_divisor_of_18_labels_p19() {
        let g = Graph::path(18).unwrap();
        for d in admissible_divisors(&g) {
            let l = label_path(18, d).unwrap();
            assert_eq!(l.verify_alpha(), Ok(true), "d = {d}");
        }
    }

    #[test]
    fn low_part_is_an_initial_segment_when_m_even() {
        // f(O) = [0, dm/2] exactly
        for (e, d) in [(8, 2), (12, 3), (20, 5), (24, 6)] {
            let l = label_path(e, d).unwrap();
            let m = e / d;
            let mut lows: Vec<usize> = l.labels().iter().copied().step_by(2).collect();
            lows.sort_unstable();
            assert_eq!(lows, (0..=d * m / 2).collect::<Vec<_>>(), "e={e} d={d}");
        }
    }

    #[test]
    fn gap_blocks_tile_descending_intervals_when_m_even() {
        // With ε_i = |f(x_{2i-1}) - f(x_{2i})| and ρ_i = |f(x_{2i}) - f(x_{2i+1})|,
        // the i-values of the j-th block of m/2 produce exactly the gap
        // interval [(d-j)(m+1)+1, (d-j+1)(m+1)-1].
        for (e, d) in [(4, 2), (8, 2), (12, 3), (20, 5)] {
            let l = label_path(e, d).unwrap();
            let m = e / d;
            let f = |t: usize| l.labels()[t - 1]; // 1-based access
            for j in 1..=d {
                let mut gaps = Vec::new();
                for i in (j - 1) * m / 2 + 1..=j * m / 2 {
                    gaps.push(f(2 * i - 1).abs_diff(f(2 * i)));
                    gaps.push(f(2 * i).abs_diff(f(2 * i + 1)));
                }
                gaps.sort_unstable();
                let expected: Vec<usize> =
                    ((d - j) * (m + 1) + 1..=(d - j + 1) * (m + 1) - 1).collect();
                assert_eq!(gaps, expected, "e={e} d={d} block {j}");
            }
        }
    }

    #[test]
    fn rejects_non_divisors() {
        assert!(matches!(
            label_path(5, 2),
            Err(ConstructionError::NotAdmissible { .. })
        ));
        assert!(matches!(
            label_path(4, 0),
            Err(ConstructionError::NotAdmissible { .. })
        ));
    }
}
