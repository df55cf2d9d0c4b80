//! Direct lattice point counts of zonotopes in dimension at most 2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::VectorConfig;
use crate::error::{Error, Result};

/// Lattice points of `Z(A)` and of its relative interior, with its
/// lattice-normalized volume (length of a segment in primitive steps, area
/// of a polygon).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeCount {
    pub volume: BigInt,
    pub lattice_points: BigInt,
    pub interior_points: BigInt,
}

fn cross(o: &[i64; 2], a: &[i64; 2], b: &[i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Convex hull, counterclockwise, without collinear points.
fn hull(mut pts: Vec<[i64; 2]>) -> Vec<[i64; 2]> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Counts by listing the vertex sums `Σ_{a ∈ S} a` and testing every
/// lattice point of the bounding box against the hull.
pub fn brute_force_zonotope(c: &VectorConfig) -> Result<ZonotopeCount> {
    if c.dim() > 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: c.dim(),
        });
    }
    if c.len() > 16 {
        return Err(Error::TooManyHyperplanes(c.len()));
    }
    let vecs: Vec<[i64; 2]> = c
        .vectors()
        .iter()
        .map(|v| {
            let g = |i: usize| {
                v.get(i)
                    .map_or(Some(0), |x| x.to_i64())
                    .ok_or_else(|| Error::Parse(format!("entry {} is too large", v[i])))
            };
            Ok([g(0)?, g(1)?])
        })
        .collect::<Result<_>>()?;
    let mut sums = Vec::new();
    for mask in 0..(1u32 << vecs.len()) {
        let mut s = [0i64; 2];
        for (i, v) in vecs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s[0] += v[0];
                s[1] += v[1];
            }
        }
        sums.push(s);
    }
    let h = hull(sums.clone());
    let count = |v: i64, l: i64, i: i64| ZonotopeCount {
        volume: v.into(),
        lattice_points: l.into(),
        interior_points: i.into(),
    };
    match c.rank() {
        0 => Ok(count(1, 1, 1)),
        1 => {
            // all vertex sums are multiples of one primitive vector
            let dir = vecs.iter().find(|v| v[0] != 0 || v[1] != 0).unwrap();
            let g = dir[0].gcd(&dir[1]);
            let prim = [dir[0] / g, dir[1] / g];
            let steps: Vec<i64> = sums
                .iter()
                .map(|s| {
                    if prim[0] != 0 {
                        s[0] / prim[0]
                    } else {
                        s[1] / prim[1]
                    }
                })
                .collect();
            let len = steps.iter().max().unwrap() - steps.iter().min().unwrap();
            Ok(count(len, len + 1, len - 1))
        }
        _ => {
            let k = h.len();
            let twice_area: i64 = (0..k)
                .map(|i| {
                    let (a, b) = (h[i], h[(i + 1) % k]);
                    a[0] * b[1] - a[1] * b[0]
                })
                .sum();
            let (lo0, hi0) = (
                h.iter().map(|p| p[0]).min().unwrap(),
                h.iter().map(|p| p[0]).max().unwrap(),
            );
            let (lo1, hi1) = (
                h.iter().map(|p| p[1]).min().unwrap(),
                h.iter().map(|p| p[1]).max().unwrap(),
            );
            let (mut all, mut inner) = (0, 0);
            for x in lo0..=hi0 {
                for y in lo1..=hi1 {
                    let p = [x, y];
                    let sides: Vec<i64> =
                        (0..k).map(|i| cross(&h[i], &h[(i + 1) % k], &p)).collect();
                    if sides.iter().all(|&s| s >= 0) {
                        all += 1;
                        if sides.iter().all(|&s| s > 0) {
                            inner += 1;
                        }
                    }
                }
            }
            debug_assert!(twice_area % 2 == 0, "zonotope areas are integers");
            Ok(ZonotopeCount {
                volume: BigInt::from(twice_area.abs() / 2),
                lattice_points: all.into(),
                interior_points: inner.into(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::arithmetic::{arithmetic_tutte, zonotope_evaluations};
    use proptest::prelude::*;

    fn cfg(d: usize, v: &[Vec<i64>]) -> VectorConfig {
        VectorConfig::from_ints(d, v).unwrap()
    }

    #[test]
    fn known_zonotopes() {
        let z = brute_force_zonotope(&cfg(2, &[vec![1, 1], vec![1, -1]])).unwrap();
        assert_eq!(
            z,
            ZonotopeCount {
                volume: 2.into(),
                lattice_points: 5.into(),
                interior_points: 1.into()
            }
        );
        let z = brute_force_zonotope(&cfg(2, &[vec![2, 0], vec![0, 1]])).unwrap();
        assert_eq!(
            z,
            ZonotopeCount {
                volume: 2.into(),
                lattice_points: 6.into(),
                interior_points: 0.into()
            }
        );
        let z = brute_force_zonotope(&cfg(2, &[vec![2, 0]])).unwrap();
        assert_eq!(
            z,
            ZonotopeCount {
                volume: 2.into(),
                lattice_points: 3.into(),
                interior_points: 1.into()
            }
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn brute_force_matches_arithmetic_tutte(
            v in (1usize..=2).prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(-2i64..=2, d), 0..=4)))
        ) {
            let c = VectorConfig::from_ints(v.0, &v.1).unwrap();
            let m = arithmetic_tutte(&c).unwrap();
            let ev = zonotope_evaluations(&m);
            let bf = brute_force_zonotope(&c).unwrap();
            prop_assert_eq!(&bf.volume, &ev.volume);
            prop_assert_eq!(&bf.lattice_points, &ev.lattice_points);
            prop_assert_eq!(&bf.interior_points, &ev.interior_points);
            for k in 1..=3i64 {
                let dil = brute_force_zonotope(&c.scaled(k)).unwrap();
                let e = ev.ehrhart.eval_scalar(&[("q", rat(k))]).unwrap();
                prop_assert_eq!(crate::algebra::Rational::from_integer(dil.lattice_points), e);
            }
        }
    }
}
