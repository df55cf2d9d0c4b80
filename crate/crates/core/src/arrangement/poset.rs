//! Intersection poset: flats as closed sets of hyperplanes, ordered by
//! reverse inclusion of subspaces, with Möbius values.

use std::collections::{BTreeSet, HashMap};

use super::{indices_of, Arrangement, MAX_SUBSET_HYPERPLANES};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, RowStatus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Indices of all hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub mask: u64,
    pub rank: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    flats: Vec<Flat>,
    mobius: Vec<i64>,
    covers: Vec<(usize, usize)>,
}

impl IntersectionPoset {
    pub(crate) fn build(a: &Arrangement) -> Result<Self> {
        let n = a.len();
        if n > MAX_SUBSET_HYPERPLANES {
            return Err(Error::TooManyHyperplanes(n));
        }
        let rows: Vec<_> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
        let closure = |e: &Echelon| -> u64 {
            (0..n)
                .filter(|&i| e.test(&rows[i]) == RowStatus::Dependent)
                .fold(0u64, |m, i| m | 1 << i)
        };

        let root = a.augmented_echelon();
        let root_mask = closure(&root);
        let mut flats = vec![Flat {
            hyperplanes: indices_of(root_mask),
            mask: root_mask,
            rank: 0,
            dim: a.dim(),
        }];
        let mut index: HashMap<u64, usize> = HashMap::from([(root_mask, 0)]);
        let mut covers = BTreeSet::new();
        let mut level: Vec<(usize, Echelon)> = vec![(0, root)];
        while !level.is_empty() {
            let mut next = Vec::new();
            for (fi, e) in &level {
                let fmask = flats[*fi].mask;
                for h in 0..n {
                    if fmask >> h & 1 == 1 {
                        continue;
                    }
                    let mut e2 = e.clone();
                    if e2.push(&rows[h]) != RowStatus::Independent {
                        continue;
                    }
                    let mask = closure(&e2);
                    let gi = match index.get(&mask) {
                        Some(&gi) => gi,
                        None => {
                            let rank = e2.rank();
                            flats.push(Flat {
                                hyperplanes: indices_of(mask),
                                mask,
                                rank,
                                dim: a.dim() - rank,
                            });
                            let gi = flats.len() - 1;
                            index.insert(mask, gi);
                            next.push((gi, e2));
                            gi
                        }
                    };
                    covers.insert((*fi, gi));
                }
            }
            level = next;
        }
        let covers: Vec<_> = covers.into_iter().collect();

        // flats are in nondecreasing rank order, so every flat below G
        // precedes it
        let mut mobius = vec![0i64; flats.len()];
        mobius[0] = 1;
        for g in 1..flats.len() {
            let gm = flats[g].mask;
            mobius[g] = -(0..g)
                .filter(|&f| flats[f].mask & !gm == 0)
                .map(|f| mobius[f])
                .sum::<i64>();
        }
        Ok(Self {
            flats,
            mobius,
            covers,
        })
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn mobius(&self, i: usize) -> i64 {
        self.mobius[i]
    }

    pub fn mobius_values(&self) -> &[i64] {
        &self.mobius
    }

    /// Pairs `(F, G)` with `G` covering `F`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether flat `i` lies below flat `j` (the subspace of `i` contains
    /// that of `j`).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].mask & !self.flats[j].mask == 0
    }

    /// Number of flats of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.flats.iter().map(|f| f.rank).max().unwrap_or(0);
        let mut v = vec![0; top + 1];
        for f in &self.flats {
            v[f.rank] += 1;
        }
        v
    }

    /// Sum of Möbius values over the flats of each rank.
    pub fn mobius_by_rank(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank_sizes().len()];
        for (f, m) in self.flats.iter().zip(&self.mobius) {
            v[f.rank] += m;
        }
        v
    }

    /// Checks `Σ_{F ≤ G} μ(F) = [G is the minimum]` for every flat `G`;
    /// returns the first flat where it fails.
    pub fn check_mobius_recursion(&self) -> Option<usize> {
        (0..self.len()).find(|&g| {
            let s: i64 = (0..self.len())
                .filter(|&f| self.leq(f, g))
                .map(|f| self.mobius[f])
                .sum();
            s != i64::from(g == 0)
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::arrangement::Arrangement;

    fn pencil_coloop() -> Arrangement {
        Arrangement::from_int_rows(
            3,
            &[
                (vec![1, 0, 0], 0),
                (vec![0, 1, 0], 0),
                (vec![1, -1, 0], 0),
                (vec![0, 0, 1], 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pencil_coloop_mobius_levels() {
        let p = pencil_coloop().intersection_poset().unwrap();
        assert_eq!(p.mobius_by_rank(), vec![1, -4, 5, -2]);
        assert_eq!(p.check_mobius_recursion(), None);
    }

    #[test]
    fn braid_a2() {
        let a = Arrangement::from_int_rows(
            3,
            &[
                (vec![1, -1, 0], 0),
                (vec![1, 0, -1], 0),
                (vec![0, 1, -1], 0),
            ],
        )
        .unwrap();
        let p = a.intersection_poset().unwrap();
        assert_eq!(p.rank_sizes(), vec![1, 3, 1]);
        assert_eq!(p.mobius_values(), &[1, -1, -1, -1, 2]);
        assert_eq!(p.covers().len(), 6);
        assert_eq!(p.flats()[4].hyperplanes, vec![0, 1, 2]);
        assert_eq!(p.flats()[4].dim, 1);
    }

    #[test]
    fn single_hyperplane() {
        let a = Arrangement::from_int_rows(1, &[(vec![1], 0)]).unwrap();
        let p = a.intersection_poset().unwrap();
        assert_eq!(p.mobius_values(), &[1, -1]);
    }

    #[test]
    fn loops_sit_in_the_minimum() {
        let a = pencil_coloop()
            .extended(vec![crate::arrangement::Hyperplane::degenerate(3)])
            .unwrap();
        let p = a.intersection_poset().unwrap();
        assert_eq!(p.flats()[0].hyperplanes, vec![4]);
        assert_eq!(p.mobius_by_rank(), vec![1, -4, 5, -2]);
    }

    #[test]
    fn affine_poset_skips_empty_intersections() {
        // two parallel points on a line and a third one: three flats of rank 1
        let a = Arrangement::from_int_rows(1, &[(vec![1], 0), (vec![1], 1), (vec![1], 2)]).unwrap();
        let p = a.intersection_poset().unwrap();
        assert_eq!(p.rank_sizes(), vec![1, 3]);
        assert_eq!(p.mobius_by_rank(), vec![1, -3]);
    }
}
