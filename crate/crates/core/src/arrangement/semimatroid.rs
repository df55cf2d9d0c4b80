//! The table of central subsets and their ranks.

use super::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, RowStatus};

pub const MAX_TABLE_HYPERPLANES: usize = 26;

/// Rank of every subset of hyperplanes, indexed by bitmask; `-1` marks a
/// non-central subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetRanks {
    n: usize,
    table: Vec<i8>,
}

impl SubsetRanks {
    pub(crate) fn build(a: &Arrangement) -> Result<Self> {
        let n = a.len();
        if n > MAX_TABLE_HYPERPLANES {
            return Err(Error::TooManyHyperplanes(n));
        }
        let rows: Vec<_> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
        let mut table = vec![-1i8; 1usize << n];
        fn go(
            i: usize,
            mask: usize,
            e: &Echelon,
            rows: &[Vec<num_bigint::BigInt>],
            table: &mut [i8],
        ) {
            if i == rows.len() {
                table[mask] = e.rank() as i8;
                return;
            }
            go(i + 1, mask, e, rows, table);
            match e.test(&rows[i]) {
                RowStatus::Inconsistent => {} // every superset stays -1
                RowStatus::Dependent => go(i + 1, mask | 1 << i, e, rows, table),
                RowStatus::Independent => {
                    let mut e2 = e.clone();
                    e2.push(&rows[i]);
                    go(i + 1, mask | 1 << i, &e2, rows, table);
                }
            }
        }
        go(0, 0, &a.augmented_echelon(), &rows, &mut table);
        Ok(Self { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of a central subset, `None` if the subset is not central.
    pub fn get(&self, mask: u64) -> Option<usize> {
        let r = self.table[mask as usize];
        (r >= 0).then_some(r as usize)
    }

    /// Largest rank of a central subset.
    pub fn rank(&self) -> usize {
        self.table.iter().copied().max().unwrap_or(0).max(0) as usize
    }

    /// `(mask, rank)` for every central subset, in increasing mask order.
    pub fn central(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &r)| r >= 0)
            .map(|(m, &r)| (m as u64, r as usize))
    }

    pub fn table(&self) -> &[i8] {
        &self.table
    }

    /// First subset (in mask order) on which two tables disagree.
    pub fn first_difference(&self, other: &SubsetRanks) -> Option<u64> {
        if self.n != other.n {
            return Some(0);
        }
        self.table
            .iter()
            .zip(&other.table)
            .position(|(a, b)| a != b)
            .map(|m| m as u64)
    }
}

#[cfg(test)]
mod tests {
    use crate::arrangement::{indices_of, Arrangement};
    use proptest::prelude::*;

    #[test]
    fn pencil_coloop_table() {
        let a = Arrangement::from_int_rows(
            3,
            &[
                (vec![1, 0, 0], 0),
                (vec![0, 1, 0], 0),
                (vec![1, -1, 0], 0),
                (vec![0, 0, 1], 0),
            ],
        )
        .unwrap();
        let s = a.semimatroid().unwrap();
        assert_eq!(s.central().count(), 16);
        assert_eq!(s.get(0b0111), Some(2));
        assert_eq!(s.get(0b1011), Some(3));
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn parallel_pair_is_not_central() {
        let a = Arrangement::from_int_rows(1, &[(vec![1], 0), (vec![1], 1)]).unwrap();
        let s = a.semimatroid().unwrap();
        assert_eq!(s.get(0b11), None);
        assert_eq!(s.get(0b10), Some(1));
    }

    fn small_arrangement() -> impl Strategy<Value = Arrangement> {
        (1usize..=3).prop_flat_map(|d| {
            prop::collection::vec((prop::collection::vec(-2i64..=2, d), -1i64..=1), 0..=6).prop_map(
                move |rows| {
                    let rows: Vec<_> = rows
                        .into_iter()
                        .map(|(n, b)| {
                            if n.iter().all(|&x| x == 0) {
                                (n, 0)
                            } else {
                                (n, b)
                            }
                        })
                        .collect();
                    Arrangement::from_int_rows(d, &rows).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn table_matches_direct_queries(a in small_arrangement()) {
            let s = a.semimatroid().unwrap();
            for mask in 0..(1u64 << a.len()) {
                let idx = indices_of(mask);
                let direct = a.rank_of(&idx).ok();
                prop_assert_eq!(s.get(mask), direct);
            }
        }

        #[test]
        fn rank_is_monotone_and_submodular(a in small_arrangement()) {
            let s = a.semimatroid().unwrap();
            let n = a.len();
            for x in 0..(1u64 << n) {
                let Some(rx) = s.get(x) else { continue };
                for e in 0..n {
                    let Some(rxe) = s.get(x | 1 << e) else { continue };
                    prop_assert!(rxe >= rx && rxe <= rx + 1);
                }
                for y in 0..(1u64 << n) {
                    if let (Some(ry), Some(ru)) = (s.get(y), s.get(x | y)) {
                        let ri = s.get(x & y).unwrap();
                        prop_assert!(ru + ri <= rx + ry);
                    }
                }
            }
        }
    }
}
