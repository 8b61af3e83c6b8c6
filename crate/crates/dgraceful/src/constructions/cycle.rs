//! d-graceful labelings of cycles: α-labelings of `C_{4k}` for d = 2 and
//! d = 4, and plain 2-graceful labelings of `C_{2k}` for odd k.
//!
//! Cycle vertices are `x_1 … x_n` around the cycle (vertex id `t-1` for
//! `x_t`); odd indices `x_{2i+1}` take the low labels and even indices
//! `x_{2i}` the high ones, exactly as for paths.

use super::{apply_pieces, finalize, ConstructionError, Piece};
use crate::graph::Graph;
use crate::labeling::Labeling;

/// 2-graceful α-labeling of `C_{4k}`, any `k ≥ 1`.
pub fn label_cycle_4k_d2(k: usize) -> Result<Labeling, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::not_admissible(
            "cycle4k-d2",
            "need k >= 1",
        ));
    }
    let graph = Graph::cycle(4 * k)?;
    let k = k as i64;
    let odd = [Piece::incr(0, 2 * k - 1, 0)];
    let even = [
        Piece::decr(1, k, 4 * k + 2),
        Piece::decr(k + 1, 2 * k, 4 * k),
    ];
    let mut slots = vec![None; 4 * k as usize];
    apply_pieces(&mut slots, &odd, |i| (2 * i) as usize)?;
    apply_pieces(&mut slots, &even, |i| (2 * i - 1) as usize)?;
    finalize(graph, 2, slots, true)
}

/// 4-graceful α-labeling of `C_{4k}`, any `k ≥ 1` (so `m = k`); the rules
/// split on the parity of k.
pub fn label_cycle_4k_d4(k: usize) -> Result<Labeling, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::not_admissible(
            "cycle4k-d4",
            "need k >= 1",
        ));
    }
    let graph = Graph::cycle(4 * k)?;
    let k = k as i64;
    let (odd, even) = if k % 2 == 0 {
        (
            vec![
                Piece::incr(0, 3 * k / 2 - 1, 0),
                Piece::incr(3 * k / 2, 2 * k - 1, 1),
            ],
            vec![
                Piece::decr(1, k / 2, 4 * k + 4),
                Piece::decr(k / 2 + 1, k, 4 * k + 3),
                Piece::decr(k + 1, 2 * k, 4 * k + 1),
            ],
        )
    } else {
        (
            vec![
                Piece::incr(0, (k - 1) / 2, 0),
                Piece::incr((k + 1) / 2, 2 * k - 1, 1),
            ],
            vec![
                Piece::decr(1, k, 4 * k + 4),
                Piece::decr(k + 1, (3 * k - 1) / 2, 4 * k + 2),
                Piece::decr((3 * k + 1) / 2, 2 * k, 4 * k + 1),
            ],
        )
    };
    let mut slots = vec![None; 4 * k as usize];
    apply_pieces(&mut slots, &odd, |i| (2 * i) as usize)?;
    apply_pieces(&mut slots, &even, |i| (2 * i - 1) as usize)?;
    finalize(graph, 4, slots, true)
}

/// 2-graceful labeling of `C_{2k}` for odd `k ≥ 3`. Unlike the other cycle
/// constructions this one is not claimed to be α (for `C_6` it happens to
/// be; we assert nothing).
///
/// `k ∈ {3, 5, 7}` use fixed explicit labelings; larger k follow five-branch
/// rules split on `k mod 4`, with `k = 2t+1`. Some branches are empty for
/// the smallest t — `apply_pieces` skips them naturally.
pub fn label_cycle_2k_odd_d2(k: usize) -> Result<Labeling, ConstructionError> {
    if k % 2 == 0 || k < 3 {
        return Err(ConstructionError::not_admissible(
            "cycle2k-odd",
            format!("need odd k >= 3, got {k}"),
        ));
    }
    let graph = Graph::cycle(2 * k)?;
    let explicit: Option<&[usize]> = match k {
        3 => Some(&[0, 5, 2, 3, 1, 7]),
        5 => Some(&[0, 11, 1, 3, 7, 4, 5, 10, 2, 9]),
        7 => Some(&[0, 15, 1, 14, 11, 4, 10, 5, 7, 6, 2, 13, 3, 12]),
        _ => None,
    };
    if let Some(labels) = explicit {
        let slots = labels.iter().map(|&l| Some(l)).collect();
        return finalize(graph, 2, slots, false);
    }

    let t = ((k - 1) / 2) as i64;
    let (odd, even) = if k % 4 == 1 {
        // t even, t >= 4
        (
            vec![
                Piece::incr(0, t / 2, 0),
                Piece::decr(t / 2 + 1, t, 7 * t / 2 + 3),
                Piece::decr(t + 1, t + t / 4, 3 * t + 2),
                Piece::incr(t + t / 4 + 1, 3 * t / 2, t + 2),
                Piece::incr(3 * t / 2 + 1, 2 * t, -t),
            ],
            vec![
                Piece::decr(1, t / 2, 4 * t + 4),
                Piece::incr(t / 2 + 1, t + 1, t / 2),
                Piece::incr(t + 2, t + (t + 2) / 4, t + 1),
                Piece::decr(t + (t + 2) / 4 + 1, 3 * t / 2, 3 * t + 2),
                Piece::decr(3 * t / 2 + 1, 2 * t + 1, 5 * t + 4),
            ],
        )
    } else {
        // k % 4 == 3: t odd, t >= 5
        (
            vec![
                Piece::incr(0, (t - 1) / 2, 0),
                Piece::decr((t + 1) / 2, t, (7 * t + 5) / 2),
                Piece::decr(t + 1, t + (t + 1) / 4, 3 * t + 2),
                Piece::incr(t + (t + 1) / 4 + 1, (3 * t - 1) / 2, t + 2),
                Piece::incr((3 * t + 1) / 2, 2 * t, -t),
            ],
            vec![
                Piece::decr(1, (t + 1) / 2, 4 * t + 4),
                Piece::incr((t + 3) / 2, t + 1, (t - 1) / 2),
                Piece::incr(t + 2, t + (t + 3) / 4, t + 1),
                Piece::decr(t + (t + 3) / 4 + 1, (3 * t + 1) / 2, 3 * t + 2),
                Piece::decr((3 * t + 3) / 2, 2 * t + 1, 5 * t + 4),
            ],
        )
    };
    let mut slots = vec![None; 2 * k];
    apply_pieces(&mut slots, &odd, |i| (2 * i) as usize)?;
    apply_pieces(&mut slots, &even, |i| (2 * i - 1) as usize)?;
    finalize(graph, 2, slots, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_with_d2() {
        let l = label_cycle_4k_d2(1).unwrap();
        assert_eq!(l.labels(), &[0, 5, 1, 2]);
        assert_eq!(l.verify_d_graceful().unwrap().realized, vec![1, 2, 4, 5]);
    }

    #[test]
    fn c8_with_d2_label_sets() {
        let l = label_cycle_4k_d2(2).unwrap();
        let lows: Vec<usize> = l.labels().iter().copied().step_by(2).collect();
        let highs: Vec<usize> = l.labels().iter().copied().skip(1).step_by(2).collect();
        assert_eq!(lows, vec![0, 1, 2, 3]);
        assert_eq!(highs, vec![9, 8, 5, 4]);
    }

    #[test]
    fn c4k_d2_sweep_is_alpha() {
        for k in 1..=25 {
            let l = label_cycle_4k_d2(k).unwrap();
            assert_eq!(l.verify_alpha(), Ok(true), "k = {k}");
        }
    }

    #[test]
    fn c4_with_d4_is_odd_graceful() {
        let l = label_cycle_4k_d4(1).unwrap();
        assert_eq!(l.labels(), &[0, 7, 2, 3]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.realized, vec![1, 3, 5, 7]);
    }

    #[test]
    fn c8_with_d4() {
        let l = label_cycle_4k_d4(2).unwrap();
        assert_eq!(l.labels(), &[0, 11, 1, 9, 2, 6, 4, 5]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.required, vec![1, 2, 4, 5, 7, 8, 10, 11]);
    }

    #[test]
    fn c4k_d4_sweep_is_alpha() {
        for k in 1..=25 {
            let l = label_cycle_4k_d4(k).unwrap();
            assert_eq!(l.verify_alpha(), Ok(true), "k = {k}");
        }
    }

    #[test]
    fn small_odd_cycles_match_fixed_strings() {
        assert_eq!(label_cycle_2k_odd_d2(3).unwrap().labels(), &[0, 5, 2, 3, 1, 7]);
        assert_eq!(
            label_cycle_2k_odd_d2(5).unwrap().labels(),
            &[0, 11, 1, 3, 7, 4, 5, 10, 2, 9]
        );
        assert_eq!(
            label_cycle_2k_odd_d2(7).unwrap().labels(),
            &[0, 15, 1, 14, 11, 4, 10, 5, 7, 6, 2, 13, 3, 12]
        );
    }

    #[test]
    fn c18_golden_vector() {
        // k = 9 is the smallest k ≡ 1 (mod 4) instance, where the third
        // even branch is empty (the "skip" rule at t = 4).
        let l = label_cycle_2k_odd_d2(9).unwrap();
        assert_eq!(
            l.labels(),
            &[0, 19, 1, 18, 2, 5, 14, 6, 13, 7, 9, 8, 12, 17, 3, 16, 4, 15]
        );
    }

    #[test]
    fn c22_golden_vector() {
        // k = 11 is the smallest k ≡ 3 (mod 4) instance of the general rules
        let l = label_cycle_2k_odd_d2(11).unwrap();
        assert_eq!(
            l.labels(),
            &[0, 23, 1, 22, 2, 21, 17, 6, 16, 7, 15, 8, 11, 13, 14, 9, 3, 20, 4, 19, 5, 18]
        );
    }

    #[test]
    fn odd_cycle_sweep_verifies() {
        for k in (3..=49).step_by(2) {
            let l = label_cycle_2k_odd_d2(k).unwrap();
            let spec = l.verify_d_graceful().unwrap();
            assert_eq!(spec.realized.len(), 2 * k, "k = {k}");
        }
    }

    #[test]
    fn rejects_even_or_tiny_k() {
        assert!(matches!(
            label_cycle_2k_odd_d2(4),
            Err(ConstructionError::NotAdmissible { .. })
        ));
        assert!(matches!(
            label_cycle_2k_odd_d2(1),
            Err(ConstructionError::NotAdmissible { .. })
        ));
        assert!(matches!(
            label_cycle_4k_d2(0),
            Err(ConstructionError::NotAdmissible { .. })
        ));
    }
}
