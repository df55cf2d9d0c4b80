//! The finite field method: reduce a rational arrangement modulo primes,
//! count points of `F_p^d` by the number of hyperplanes through them, and
//! interpolate the coboundary polynomial across primes.

mod kernel;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{interpolate, MultiPoly, Rational};
use crate::arrangement::{indices_of, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::{self, GroundField};
use crate::tutte::{tutte_from_coboundary, Engine, TutteResult};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Enumeration budget: `TUTTEKIT_BUDGET` if set and valid, else 10^8 points.
pub fn default_budget() -> u64 {
    std::env::var("TUTTEKIT_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Above this many minors the floor falls back to the Hadamard product bound.
const EXACT_MINOR_LIMIT: usize = 20_000;

/// A number `B` such that no prime `p > B` divides a nonzero minor of the
/// integer matrix `[normals | offsets]`. Uses the largest minor in absolute
/// value when there are few minors, otherwise Hadamard's bound on the
/// largest possible square minor.
pub fn hadamard_prime_floor(a: &Arrangement) -> Result<BigInt> {
    if !a.field().is_rational() {
        return Err(Error::NeedsRationalField);
    }
    let rows: Vec<Vec<BigInt>> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
    let cols = a.dim() + 1;
    let kmax = rows.len().min(cols);
    let mut count = 0usize;
    for k in 1..=kmax {
        count = count.saturating_add(
            (crate::tutte::binomial(rows.len(), k) * crate::tutte::binomial(cols, k))
                .to_usize()
                .unwrap_or(usize::MAX),
        );
    }
    if count <= EXACT_MINOR_LIMIT {
        let mut best = BigInt::one();
        for k in 1..=kmax {
            for rs in linalg::combinations(rows.len(), k) {
                for cs in linalg::combinations(cols, k) {
                    let m = linalg::minor(&rows, &rs, &cs).abs();
                    if m > best {
                        best = m;
                    }
                }
            }
        }
        return Ok(best);
    }
    // Hadamard: |det| <= product of row norms; take the largest norms
    let mut sq: Vec<BigInt> = rows
        .iter()
        .map(|r| r.iter().map(|x| x * x).sum::<BigInt>())
        .collect();
    sq.sort_by(|x, y| y.cmp(x));
    let mut best = BigInt::one();
    let mut prod = BigInt::one();
    for s in sq.iter().take(kmax) {
        prod *= s;
        let root = prod.sqrt() + 1;
        if root > best {
            best = root;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionMode {
    /// Accept only primes above [`hadamard_prime_floor`].
    Bound,
    /// Compare every subset's centrality and rank mod `p` with the rational
    /// arrangement.
    Verified,
}

/// An arrangement over `F_p` as residue vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularArrangement {
    p: u64,
    dim: usize,
    normals: Vec<Vec<u64>>,
    offsets: Vec<u64>,
    rank: usize,
}

impl ModularArrangement {
    /// Wraps an arrangement that is already defined over `F_p`.
    pub fn from_prime_field(a: &Arrangement) -> Result<Self> {
        let GroundField::Prime(p) = a.field() else {
            return Err(Error::NotPrime(0));
        };
        if p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::residues(a, p))
    }

    fn residues(a: &Arrangement, p: u64) -> Self {
        ModularArrangement {
            p,
            dim: a.dim(),
            normals: a
                .hyperplanes()
                .iter()
                .map(|h| linalg::to_mod(p, h.normal()))
                .collect(),
            offsets: a
                .hyperplanes()
                .iter()
                .map(|h| linalg::to_mod(p, std::slice::from_ref(h.offset()))[0])
                .collect(),
            rank: a.rank(),
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn normals(&self) -> &[Vec<u64>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }
}

/// Reduces a rational arrangement modulo `p`, certifying that subset ranks
/// and centrality are preserved.
pub fn reduce_mod_p(a: &Arrangement, p: u64, mode: ReductionMode) -> Result<ModularArrangement> {
    if !a.field().is_rational() {
        return Err(Error::NeedsRationalField);
    }
    if !linalg::is_prime(p) || p >= 1 << 31 {
        return Err(Error::NotPrime(p));
    }
    match mode {
        ReductionMode::Bound => {
            let floor = hadamard_prime_floor(a)?;
            if BigInt::from(p) <= floor {
                return Err(Error::PrimeBelowFloor {
                    prime: p,
                    floor: floor.to_string(),
                });
            }
            Ok(ModularArrangement::residues(a, p))
        }
        ReductionMode::Verified => {
            let modular = reduced_arrangement(a, p)?;
            let qt = a.semimatroid()?;
            let pt = modular.semimatroid()?;
            if let Some(mask) = qt.first_difference(&pt) {
                return Err(Error::BadPrime {
                    prime: p,
                    witness: indices_of(mask),
                });
            }
            Ok(ModularArrangement::residues(a, p))
        }
    }
}

/// The same equations read over `F_p`; a hyperplane whose normal vanishes
/// mod `p` while its offset does not is reported as a bad prime.
fn reduced_arrangement(a: &Arrangement, p: u64) -> Result<Arrangement> {
    let hs = a
        .hyperplanes()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            crate::arrangement::Hyperplane::from_raw(h.normal().to_vec(), h.offset().clone())
                .canonical(GroundField::Prime(p))
                .map_err(|_| Error::BadPrime {
                    prime: p,
                    witness: vec![i],
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(a.dim(), GroundField::Prime(p), hs)
}

/// `c_k` = number of points of `F_p^d` on exactly `k` hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointProfile {
    pub p: u64,
    pub counts: Vec<u64>,
}

impl PointProfile {
    /// `Σ_k c_k t^k`.
    pub fn polynomial(&self, var: &str) -> MultiPoly {
        let coeffs: Vec<Rational> = self
            .counts
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        MultiPoly::from_univariate(var, &coeffs)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// `p,c_0,...,c_n`.
    pub fn csv_row(&self) -> String {
        std::iter::once(self.p.to_string())
            .chain(self.counts.iter().map(u64::to_string))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Counts points of `F_p^d` by the number of hyperplanes containing them.
pub fn point_profile(m: &ModularArrangement, budget: u64, parallel: bool) -> Result<PointProfile> {
    let required = (m.p as u128).checked_pow(m.dim as u32).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let counts = kernel::enumerate(m, parallel);
    let profile = PointProfile { p: m.p, counts };
    assert_eq!(profile.total(), required, "profile must cover every point");
    Ok(profile)
}

#[derive(Clone, Debug)]
pub enum PrimeChoice {
    Auto,
    Given(Vec<u64>),
}

#[derive(Clone, Debug)]
pub struct FfmOptions {
    pub primes: PrimeChoice,
    /// `None` picks bound-certified primes unless they push `p^d` past the
    /// budget, in which case small verified primes are used.
    pub mode: Option<ReductionMode>,
    pub budget: u64,
    pub parallel: bool,
}

impl Default for FfmOptions {
    fn default() -> Self {
        FfmOptions {
            primes: PrimeChoice::Auto,
            mode: None,
            budget: default_budget(),
            parallel: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FfmResult {
    /// Polynomial in `X`, `Y`.
    pub coboundary: MultiPoly,
    pub rank: usize,
    pub profiles: Vec<PointProfile>,
}

fn pick_primes(
    a: &Arrangement,
    count: usize,
    opts: &FfmOptions,
) -> Result<(Vec<u64>, ReductionMode)> {
    if let PrimeChoice::Given(ps) = &opts.primes {
        return Ok((ps.clone(), opts.mode.unwrap_or(ReductionMode::Bound)));
    }
    let from = |start: u64, mode: ReductionMode| -> Vec<u64> {
        let mut out = Vec::new();
        let mut p = start;
        while out.len() < count {
            p = linalg::next_prime(p);
            if mode == ReductionMode::Bound || reduce_mod_p(a, p, mode).is_ok() {
                out.push(p);
            }
        }
        out
    };
    let floor = hadamard_prime_floor(a)?.to_u64().unwrap_or(u64::MAX / 2);
    let fits = |ps: &[u64]| {
        ps.iter().all(|&p| {
            (p as u128)
                .checked_pow(a.dim() as u32)
                .map_or(false, |v| v <= opts.budget as u128)
        })
    };
    match opts.mode {
        Some(ReductionMode::Bound) => Ok((from(floor, ReductionMode::Bound), ReductionMode::Bound)),
        Some(ReductionMode::Verified) => {
            Ok((from(1, ReductionMode::Verified), ReductionMode::Verified))
        }
        None => {
            let bound = from(floor, ReductionMode::Bound);
            if fits(&bound) || a.len() > 14 {
                Ok((bound, ReductionMode::Bound))
            } else {
                Ok((from(1, ReductionMode::Verified), ReductionMode::Verified))
            }
        }
    }
}

/// Coboundary polynomial from point counts at `r + 2` primes: `r + 1`
/// determine the `X`-degree-`r` interpolant and the last one checks it.
pub fn coboundary_ffm(a: &Arrangement, opts: &FfmOptions) -> Result<FfmResult> {
    let r = a.rank();
    let (primes, mode) = pick_primes(a, r + 2, opts)?;
    let mut samples = Vec::new();
    let mut profiles = Vec::new();
    for &p in &primes {
        let m = reduce_mod_p(a, p, mode)?;
        let prof = point_profile(&m, opts.budget, opts.parallel)?;
        let scale = Rational::from_integer(BigInt::from(p).pow((a.dim() - r) as u32));
        let poly = prof.polynomial("Y").scale(&(Rational::one() / scale));
        samples.push((Rational::from_integer(p.into()), poly));
        profiles.push(prof);
    }
    let cb = interpolate("X", &samples, r)?;
    if !cb.is_integral() {
        return Err(Error::InconsistentSample(
            "non-integer coefficient after interpolation".into(),
        ));
    }
    Ok(FfmResult {
        coboundary: cb.in_vars(&["X", "Y"]),
        rank: r,
        profiles,
    })
}

/// Tutte polynomial through the finite field method.
pub fn tutte_ffm(a: &Arrangement, opts: &FfmOptions) -> Result<TutteResult> {
    let res = coboundary_ffm(a, opts)?;
    Ok(TutteResult {
        tutte: tutte_from_coboundary(&res.coboundary, res.rank)?,
        rank: res.rank,
        n: a.len(),
        engine: Engine::FiniteField,
    })
}

/// Profile of an arrangement defined over `F_p` itself, divided by
/// `p^{d-r}`: its coboundary polynomial evaluated at `X = p`.
pub fn coboundary_at_own_prime(a: &Arrangement, budget: u64) -> Result<MultiPoly> {
    let m = ModularArrangement::from_prime_field(a)?;
    let prof = point_profile(&m, budget, true)?;
    let scale = BigInt::from(m.p).pow((a.dim() - m.rank) as u32);
    let poly = prof.polynomial("Y");
    if poly
        .terms()
        .any(|(_, c)| !(c.to_integer() % &scale).is_zero())
    {
        return Err(Error::NotPolynomial(
            "profile not divisible by p^(d-r)".into(),
        ));
    }
    Ok(poly.scale(&(Rational::one() / Rational::from_integer(scale))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::tutte::{char_poly, coboundary_transform, tutte_subset};
    use proptest::prelude::*;

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

    fn coordinate(n: usize) -> Arrangement {
        let rows: Vec<_> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                (v, 0)
            })
            .collect();
        Arrangement::from_int_rows(n, &rows).unwrap()
    }

    #[test]
    fn floors() {
        assert_eq!(hadamard_prime_floor(&coordinate(3)).unwrap(), BigInt::one());
        let braid = Arrangement::from_int_rows(
            4,
            &[
                (vec![1, -1, 0, 0], 0),
                (vec![1, 0, -1, 0], 0),
                (vec![1, 0, 0, -1], 0),
                (vec![0, 1, -1, 0], 0),
                (vec![0, 1, 0, -1], 0),
                (vec![0, 0, 1, -1], 0),
            ],
        )
        .unwrap();
        assert_eq!(hadamard_prime_floor(&braid).unwrap(), BigInt::one());
        let a = Arrangement::from_int_rows(2, &[(vec![2, 3], 1), (vec![1, -1], 5)]).unwrap();
        let b = hadamard_prime_floor(&a).unwrap();
        // minors: entries up to 5; 2x2 minors -5, 9, 16
        assert_eq!(b, BigInt::from(16));
        // no prime above the floor divides a nonzero minor
        let rows: Vec<Vec<BigInt>> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
        for p in [17u64, 19, 23] {
            for k in 1..=2 {
                for rs in linalg::combinations(2, k) {
                    for cs in linalg::combinations(3, k) {
                        let m = linalg::minor(&rows, &rs, &cs);
                        assert!(m.is_zero() || !(m % BigInt::from(p)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn reductions() {
        assert!(reduce_mod_p(&pencil_coloop(), 5, ReductionMode::Verified).is_ok());
        assert!(reduce_mod_p(&coordinate(3), 2, ReductionMode::Bound).is_ok());
        let pair = Arrangement::from_int_rows(2, &[(vec![1, -1], 0), (vec![1, 1], 0)]).unwrap();
        assert_eq!(
            reduce_mod_p(&pair, 2, ReductionMode::Verified).unwrap_err(),
            Error::BadPrime {
                prime: 2,
                witness: vec![0, 1]
            }
        );
        assert!(matches!(
            reduce_mod_p(&pair, 2, ReductionMode::Bound),
            Err(Error::PrimeBelowFloor { prime: 2, .. })
        ));
        assert_eq!(
            reduce_mod_p(&pair, 4, ReductionMode::Verified).unwrap_err(),
            Error::NotPrime(4)
        );
    }

    #[test]
    fn pencil_coloop_profile_at_five() {
        let m = reduce_mod_p(&pencil_coloop(), 5, ReductionMode::Verified).unwrap();
        let prof = point_profile(&m, DEFAULT_BUDGET, false).unwrap();
        assert_eq!(prof.counts, vec![48, 60, 12, 4, 1]);
        assert_eq!(prof.csv_row(), "5,48,60,12,4,1");
    }

    #[test]
    fn small_profiles() {
        let m = reduce_mod_p(&coordinate(2), 3, ReductionMode::Bound).unwrap();
        assert_eq!(point_profile(&m, 100, false).unwrap().counts, vec![4, 4, 1]);
        let e = reduce_mod_p(&Arrangement::empty(3), 7, ReductionMode::Bound).unwrap();
        assert_eq!(point_profile(&e, 1000, true).unwrap().counts, vec![343]);
        assert_eq!(
            point_profile(&e, 100, true).unwrap_err(),
            Error::BudgetExceeded {
                required: 343,
                budget: 100
            }
        );
        let zero_dim =
            Arrangement::rational(0, vec![crate::arrangement::Hyperplane::degenerate(0)]).unwrap();
        let z = reduce_mod_p(&zero_dim, 3, ReductionMode::Bound).unwrap();
        assert_eq!(point_profile(&z, 10, false).unwrap().counts, vec![0, 1]);
    }

    #[test]
    fn coboundaries() {
        let cb = coboundary_ffm(&coordinate(3), &FfmOptions::default()).unwrap();
        let want = (&(&MultiPoly::var("X") + &MultiPoly::var("Y")) - &MultiPoly::one()).pow(3);
        assert_eq!(cb.coboundary, want);
        let t = tutte_ffm(&pencil_coloop(), &FfmOptions::default()).unwrap();
        assert_eq!(t.tutte.to_text(), "x^3 + x^2 + x*y");
    }

    #[test]
    fn shi_complement_at_five() {
        // Shi arrangement for n = 3: x_i - x_j in {0, 1}
        let mut rows = Vec::new();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for b in [0, 1] {
                let mut v = vec![0; 3];
                v[i] = 1;
                v[j] = -1;
                rows.push((v, b));
            }
        }
        let a = Arrangement::from_int_rows(3, &rows).unwrap();
        let m = reduce_mod_p(&a, 5, ReductionMode::Verified).unwrap();
        let prof = point_profile(&m, DEFAULT_BUDGET, true).unwrap();
        assert_eq!(prof.counts[0], 20);
        let chi = char_poly(&a).unwrap();
        assert_eq!(chi.eval_scalar(&[("q", rat(5))]).unwrap(), rat(20));
    }

    fn arrangements() -> impl Strategy<Value = Arrangement> {
        crate::tutte::testutil::arrangements(6, 3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn kernel_matches_naive_and_parallel(a in arrangements(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
            let m = ModularArrangement::residues(&a, p);
            let naive = kernel::enumerate_naive(&m);
            prop_assert_eq!(&kernel::enumerate(&m, false), &naive);
            prop_assert_eq!(&kernel::enumerate(&m, true), &naive);
        }

        #[test]
        fn ffm_matches_subset_expansion(a in arrangements()) {
            let t = tutte_subset(&a).unwrap();
            let want = coboundary_transform(&t.tutte, t.rank).unwrap();
            let opts = FfmOptions { mode: Some(ReductionMode::Verified), ..FfmOptions::default() };
            let got = coboundary_ffm(&a, &opts).unwrap();
            prop_assert_eq!(&got.coboundary, &want);
            let chi = char_poly(&a).unwrap();
            for prof in &got.profiles {
                let poly = prof.polynomial("t");
                let pr = rat(prof.p as i64);
                prop_assert_eq!(poly.eval_scalar(&[("t", rat(1))]).unwrap(), num_traits::pow(pr.clone(), a.dim()));
                prop_assert_eq!(poly.eval_scalar(&[("t", rat(0))]).unwrap(), chi.eval_scalar(&[("q", pr)]).unwrap());
            }
        }
    }
}
