//! Point enumeration over `F_p^d`.
//!
//! The first `d-1` coordinates are walked by an odometer. For a fixed
//! prefix, a hyperplane whose last coefficient is nonzero contains exactly
//! one point of the remaining line, at last coordinate
//! `(b - a'·prefix) / a_d`; hyperplanes with zero last coefficient contain
//! either the whole line or none of it. Each odometer step moves every
//! touched coordinate by `+1 mod p` (a wrap from `p-1` to `0` is also `+1`),
//! so all tracked values change by fixed per-coordinate increments.

use rayon::prelude::*;

use super::ModularArrangement;

struct Plan {
    p: u32,
    d: usize,
    loops: usize,
    n: usize,
    /// Hyperplanes with nonzero last coefficient: root of the last
    /// coordinate at the zero prefix, and its increment per coordinate.
    slanted_start: Vec<u32>,
    slanted_step: Vec<Vec<u32>>,
    /// Hyperplanes with zero last coefficient: `a'·prefix - b` at the zero
    /// prefix and its increment per coordinate.
    flat_start: Vec<u32>,
    flat_step: Vec<Vec<u32>>,
}

#[inline]
fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

impl Plan {
    fn new(m: &ModularArrangement) -> Plan {
        let p = m.prime();
        let d = m.dim();
        let pp = p as u32;
        let mut plan = Plan {
            p: pp,
            d,
            loops: 0,
            n: m.len(),
            slanted_start: Vec::new(),
            slanted_step: Vec::new(),
            flat_start: Vec::new(),
            flat_step: Vec::new(),
        };
        for (a, &b) in m.normals().iter().zip(m.offsets()) {
            if a.iter().all(|&c| c == 0) {
                // the whole space, or (for an invalid reduction) nothing
                plan.loops += usize::from(b == 0);
                continue;
            }
            let last = a[d - 1];
            if last != 0 {
                let inv = crate::linalg::mod_inv(last, p);
                plan.slanted_start.push(mulm(b, inv, p) as u32);
                plan.slanted_step.push(
                    a[..d - 1]
                        .iter()
                        .map(|&c| mulm((p - c) % p, inv, p) as u32)
                        .collect(),
                );
            } else {
                plan.flat_start.push(((p - b) % p) as u32);
                plan.flat_step
                    .push(a[..d - 1].iter().map(|&c| c as u32).collect());
            }
        }
        plan
    }

    /// Counts for all prefixes whose first coordinate is `first` (or the
    /// single empty prefix when `d = 1`).
    fn run_slice(&self, first: u32) -> Vec<u64> {
        let p = self.p;
        let prefix_len = self.d - 1;
        let mut counts = vec![0u64; self.n + 1];
        let mut slanted: Vec<u32> = self.slanted_start.clone();
        let mut flat: Vec<u32> = self.flat_start.clone();
        if prefix_len > 0 {
            for _ in 0..first {
                for (v, s) in slanted.iter_mut().zip(&self.slanted_step) {
                    *v = add(*v, s[0], p);
                }
                for (v, s) in flat.iter_mut().zip(&self.flat_step) {
                    *v = add(*v, s[0], p);
                }
            }
        }
        // transpose steps so one coordinate's increments are contiguous
        let sl_steps: Vec<Vec<u32>> = (0..prefix_len)
            .map(|k| self.slanted_step.iter().map(|s| s[k]).collect())
            .collect();
        let fl_steps: Vec<Vec<u32>> = (0..prefix_len)
            .map(|k| self.flat_step.iter().map(|s| s[k]).collect())
            .collect();

        let mut hist = vec![0u32; p as usize];
        let mut touched: Vec<u32> = Vec::with_capacity(slanted.len());
        let mut digits = vec![0u32; prefix_len];
        loop {
            let base = self.loops + flat.iter().filter(|&&v| v == 0).count();
            touched.clear();
            for &v in &slanted {
                if hist[v as usize] == 0 {
                    touched.push(v);
                }
                hist[v as usize] += 1;
            }
            counts[base] += (p as usize - touched.len()) as u64;
            for &v in &touched {
                counts[base + hist[v as usize] as usize] += 1;
                hist[v as usize] = 0;
            }

            // advance coordinates 1.. (coordinate 0 is fixed per slice)
            let mut k = prefix_len;
            loop {
                if k <= 1 {
                    return counts;
                }
                k -= 1;
                for (v, s) in slanted.iter_mut().zip(&sl_steps[k]) {
                    *v = add(*v, *s, p);
                }
                for (v, s) in flat.iter_mut().zip(&fl_steps[k]) {
                    *v = add(*v, *s, p);
                }
                digits[k] += 1;
                if digits[k] < p {
                    break;
                }
                digits[k] = 0;
            }
        }
    }
}

pub(super) fn enumerate(m: &ModularArrangement, parallel: bool) -> Vec<u64> {
    let n = m.len();
    if m.dim() == 0 {
        // a single point, on every degenerate hyperplane with zero offset
        let mut counts = vec![0u64; n + 1];
        counts[m.offsets().iter().filter(|&&b| b == 0).count()] = 1;
        return counts;
    }
    let plan = Plan::new(m);
    let slices: Vec<u32> = if m.dim() == 1 {
        vec![0]
    } else {
        (0..plan.p).collect()
    };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    if parallel {
        slices
            .par_iter()
            .map(|&s| plan.run_slice(s))
            .reduce(|| vec![0u64; n + 1], merge)
    } else {
        slices
            .iter()
            .map(|&s| plan.run_slice(s))
            .fold(vec![0u64; n + 1], merge)
    }
}

/// Direct per-point evaluation, for testing the kernel.
#[cfg(test)]
pub(super) fn enumerate_naive(m: &ModularArrangement) -> Vec<u64> {
    let p = m.prime();
    let d = m.dim();
    let mut counts = vec![0u64; m.len() + 1];
    let total = p.pow(d as u32);
    for idx in 0..total {
        let mut pt = vec![0u64; d];
        let mut r = idx;
        for c in pt.iter_mut().rev() {
            *c = r % p;
            r /= p;
        }
        let h = m
            .normals()
            .iter()
            .zip(m.offsets())
            .filter(|(a, &b)| a.iter().zip(&pt).map(|(x, y)| x * y % p).sum::<u64>() % p == b)
            .count();
        counts[h] += 1;
    }
    counts
}
