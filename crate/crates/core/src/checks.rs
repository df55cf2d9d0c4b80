//! Named identity suites behind the `check` command: every engine, every
//! structural identity and every applicable oracle, one outcome per
//! identity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{rat, MultiPoly, Rational};
use crate::arithmetic::{
    arithmetic_tutte, brute_force_zonotope, toric_identity_check, toric_point_profile,
    torsion_exponent, zonotope_evaluations, VectorConfig,
};
use crate::arrangement::{indices_of, Arrangement, HyperplaneKind};
use crate::error::{Error, Result};
use crate::families::{
    build_family, chromatic_polynomial, oracle_char, oracle_coboundary, oracle_regions,
    oracle_tutte, thicken_identity_check, FamilySpec, OracleValue,
};
use crate::finite_field::{
    coboundary_ffm, point_profile, reduce_mod_p, FfmOptions, ModularArrangement, PointProfile,
    ReductionMode,
};
use crate::linalg::{is_prime, next_prime};
use crate::multivariate::multivariate_tutte;
use crate::tutte::{
    char_poly, char_poly_whitney, coboundary_transform, scalar_invariants, tutte_activity,
    tutte_delcon, tutte_from_coboundary, tutte_subset, validate_chi_shape, DelconOptions,
    TutteResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub budget: u64,
    /// Include the finite field method among the engines.
    pub finite_field: bool,
    /// Extra hyperplane orders for the activity engine.
    pub orders: usize,
    /// Largest `p^d` for the point profile checks.
    pub profile_points: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: crate::finite_field::default_budget(),
            finite_field: true,
            orders: 4,
            profile_points: 2_000_000,
        }
    }
}

/// Outcomes of a suite.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<Verdict>) {
        let (status, detail) = match f() {
            Ok(Verdict::Pass(d)) => (Status::Pass, d),
            Ok(Verdict::Fail(d)) => (Status::Fail, d),
            Ok(Verdict::Skip(d)) => (Status::Skip, d),
            Err(
                e @ (Error::BudgetExceeded { .. }
                | Error::TooManyHyperplanes(_)
                | Error::NoClosedForm(_)),
            ) => (Status::Skip, e.to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.outcomes.push(CheckOutcome {
            name: name.to_string(),
            status,
            detail,
        });
    }

    fn extend(&mut self, other: CheckReport) {
        self.outcomes.extend(other.outcomes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn expect_eq<T: PartialEq + fmt::Display>(got: &T, want: &T, what: &str) -> Verdict {
    if got == want {
        Verdict::Pass(String::new())
    } else {
        Verdict::Fail(format!("{what}: {got} != {want}"))
    }
}

/// Deterministic hyperplane orders: reversal, rotations and an
/// even-then-odd interleaving.
fn orders(n: usize, count: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    out.push((0..n).step_by(2).chain((1..n).step_by(2)).collect());
    for k in 1..n {
        out.push((0..n).map(|i| (i + k) % n).collect());
    }
    out.truncate(count);
    out
}

/// Engine agreement, activity order invariance, deletion–contraction,
/// Whitney, coboundary round trip, Möbius recursion, shape of `χ`, point
/// profiles and the uniform multivariate specialization.
pub fn check_arrangement(a: &Arrangement, opts: &CheckOptions) -> CheckReport {
    let mut rep = CheckReport::default();
    let reference = match tutte_subset(a) {
        Ok(t) => t,
        Err(e) => {
            rep.run("subset-expansion", || Err(e));
            return rep;
        }
    };
    let t = &reference;

    rep.run("engines-agree", || {
        let dc = tutte_delcon(a, DelconOptions { memoize: true })?;
        let identity: Vec<usize> = (0..a.len()).collect();
        let (act, cert) = tutte_activity(a, &identity)?;
        if dc.tutte != t.tutte {
            return Ok(Verdict::Fail(format!(
                "delcon {} vs subset {}",
                dc.tutte, t.tutte
            )));
        }
        if act.tutte != t.tutte {
            return Ok(Verdict::Fail(format!(
                "activity {} vs subset {}",
                act.tutte, t.tutte
            )));
        }
        if BigInt::from(cert.entries.len()) != t.num_bases() {
            return Ok(Verdict::Fail("basis count differs from T(1,1)".into()));
        }
        Ok(Verdict::Pass(t.tutte.to_text()))
    });

    if opts.finite_field && a.field().is_rational() {
        rep.run("finite-field-engine", || {
            let ffm = coboundary_ffm(
                a,
                &FfmOptions {
                    budget: opts.budget,
                    ..FfmOptions::default()
                },
            )?;
            let chi = char_poly_whitney(t, a.dim())?;
            for prof in &ffm.profiles {
                if let Some(bad) = slice_failure(a, prof, &chi)? {
                    return Ok(Verdict::Fail(bad));
                }
            }
            let tutte = tutte_from_coboundary(&ffm.coboundary, ffm.rank)?;
            let primes: Vec<String> = ffm.profiles.iter().map(|p| p.p.to_string()).collect();
            Ok(
                match expect_eq(&tutte, &t.tutte, "finite field vs subset") {
                    Verdict::Pass(_) => Verdict::Pass(format!("primes {}", primes.join(","))),
                    v => v,
                },
            )
        });
    }

    rep.run("activity-order-invariance", || {
        for order in orders(a.len(), opts.orders) {
            let (act, _) = tutte_activity(a, &order)?;
            if act.tutte != t.tutte {
                return Ok(Verdict::Fail(format!(
                    "order {order:?} gives {}",
                    act.tutte
                )));
            }
        }
        Ok(Verdict::Pass(String::new()))
    });

    rep.run("deletion-contraction", || {
        let mut checked = 0;
        for i in 0..a.len() {
            if a.classify(i)? != HyperplaneKind::Ordinary {
                continue;
            }
            let sum = &tutte_subset(&a.delete(i)?)?.tutte + &tutte_subset(&a.contract(i)?)?.tutte;
            if sum != t.tutte {
                return Ok(Verdict::Fail(format!("hyperplane {i}: {sum}")));
            }
            checked += 1;
        }
        Ok(Verdict::Pass(format!("{checked} ordinary hyperplanes")))
    });

    let chi = char_poly(a);
    rep.run("whitney", || {
        let w = char_poly_whitney(t, a.dim())?;
        Ok(expect_eq(
            chi.as_ref().map_err(Clone::clone)?,
            &w,
            "Möbius vs Tutte evaluation",
        ))
    });

    rep.run("coboundary-round-trip", || {
        let cb = coboundary_transform(&t.tutte, t.rank)?;
        let back = tutte_from_coboundary(&cb, t.rank)?;
        if back != t.tutte {
            return Ok(Verdict::Fail(format!("round trip gives {back}")));
        }
        let at_one = cb
            .evaluate(&[("Y", rat(1))])?
            .substitute("X", &MultiPoly::var("q"))?;
        if at_one != MultiPoly::var("q").pow(t.rank as u32) {
            return Ok(Verdict::Fail(format!("coboundary at Y = 1 is {at_one}")));
        }
        let slice = &cb
            .evaluate(&[("Y", rat(0))])?
            .substitute("X", &MultiPoly::var("q"))?
            * &MultiPoly::var("q").pow((a.dim() - t.rank) as u32);
        Ok(expect_eq(
            &slice,
            &char_poly_whitney(t, a.dim())?,
            "Y = 0 slice vs χ",
        ))
    });

    rep.run("mobius-recursion", || {
        let poset = a.intersection_poset()?;
        Ok(match poset.check_mobius_recursion() {
            None => Verdict::Pass(format!("{} flats", poset.len())),
            Some(g) => Verdict::Fail(format!("fails at flat {g}")),
        })
    });

    rep.run("chi-shape", || {
        let shape = validate_chi_shape(chi.as_ref().map_err(Clone::clone)?)?;
        Ok(if shape.passed() {
            Verdict::Pass(String::new())
        } else {
            Verdict::Fail(shape.violations.join("; "))
        })
    });

    rep.run("scalar-invariants", || {
        let inv = scalar_invariants(t, a.dim(), a.is_central_arrangement())?;
        Ok(Verdict::Pass(format!(
            "regions {}, bounded {}",
            inv.regions, inv.bounded_regions
        )))
    });

    rep.run("point-profile", || profile_check(a, t, opts));

    rep.run("multivariate-specialization", || {
        multivariate_tutte(a)?.check_uniform(t)?;
        Ok(Verdict::Pass(String::new()))
    });
    rep
}

/// `Σ c_k = p^d`, the `t = 1` slice and `c_0 = χ(p)`.
fn slice_failure(a: &Arrangement, prof: &PointProfile, chi: &MultiPoly) -> Result<Option<String>> {
    let p = prof.p;
    let total = BigInt::from(p).pow(a.dim() as u32);
    if BigInt::from(prof.total()) != total {
        return Ok(Some(format!(
            "profile at {p} sums to {} not {total}",
            prof.total()
        )));
    }
    let poly = prof.polynomial("t");
    if poly.eval_scalar(&[("t", rat(1))])? != Rational::from_integer(total) {
        return Ok(Some(format!("t = 1 slice at {p}")));
    }
    let c0 = chi.eval_scalar(&[("q", Rational::from_integer(p.into()))])?;
    if poly.eval_scalar(&[("t", rat(0))])? != c0 {
        return Ok(Some(format!(
            "t = 0 slice {} vs χ({p}) = {c0}",
            prof.counts[0]
        )));
    }
    Ok(None)
}

/// Smallest prime with `p^d` inside the profile limit at which the
/// arrangement reduces correctly, or the arrangement's own prime.
fn profile_check(a: &Arrangement, t: &TutteResult, opts: &CheckOptions) -> Result<Verdict> {
    let limit = opts.profile_points.min(opts.budget);
    let modular = if a.field().is_rational() {
        let mut p = 2;
        loop {
            if (p as u128).pow(a.dim() as u32) > limit as u128 {
                return Ok(Verdict::Skip(format!("no good prime with p^d <= {limit}")));
            }
            match reduce_mod_p(a, p, ReductionMode::Verified) {
                Ok(m) => break m,
                Err(Error::BadPrime { .. }) => p = next_prime(p),
                Err(e) => return Err(e),
            }
        }
    } else {
        ModularArrangement::from_prime_field(a)?
    };
    let p = modular.prime();
    let prof = point_profile(&modular, limit, true)?;
    if let Some(bad) = slice_failure(a, &prof, &char_poly_whitney(t, a.dim())?)? {
        return Ok(Verdict::Fail(bad));
    }
    let poly = prof.polynomial("t");
    let pr = Rational::from_integer(p.into());
    let cb = coboundary_transform(&t.tutte, t.rank)?
        .evaluate(&[("X", pr)])?
        .substitute("Y", &MultiPoly::var("t"))?;
    let want = cb.scale(&Rational::from_integer(
        BigInt::from(p).pow((a.dim() - t.rank) as u32),
    ));
    if poly != want {
        return Ok(Verdict::Fail(format!("profile {poly} vs {want}")));
    }
    Ok(Verdict::Pass(prof.csv_row()))
}

/// The arrangement suite plus every oracle that applies to the family.
pub fn check_family(spec: &FamilySpec, opts: &CheckOptions) -> Result<CheckReport> {
    let a = build_family(spec)?;
    let mut rep = check_arrangement(&a, opts);
    let t = tutte_subset(&a)?;

    rep.run("oracle-characteristic", || {
        let o = oracle_char(spec)?;
        let engine = if a.field().is_rational() {
            char_poly(&a)?
        } else {
            let cb = coboundary_transform(&t.tutte, t.rank)?;
            &cb.evaluate(&[("Y", rat(0))])?
                .substitute("X", &MultiPoly::var("q"))?
                * &MultiPoly::var("q").pow((a.dim() - t.rank) as u32)
        };
        Ok(expect_eq(
            &engine,
            o.as_poly().expect("polynomial oracle"),
            o.source,
        ))
    });

    rep.run("oracle-coboundary", || {
        let o = oracle_coboundary(spec)?;
        let engine = coboundary_transform(&t.tutte, t.rank)?;
        Ok(expect_eq(
            &engine,
            o.as_poly().expect("polynomial oracle"),
            o.source,
        ))
    });

    rep.run("oracle-tutte", || {
        let o = oracle_tutte(spec)?;
        Ok(expect_eq(
            &t.tutte,
            o.as_poly().expect("polynomial oracle"),
            o.source,
        ))
    });

    if a.field().is_rational() {
        rep.run("oracle-regions", || {
            let o = oracle_regions(spec)?;
            let inv = scalar_invariants(&t, a.dim(), a.is_central_arrangement())?;
            let OracleValue::Regions { regions, bounded } = o.value else {
                unreachable!("region oracle returns counts")
            };
            if let Some(r) = regions.filter(|r| *r != inv.regions) {
                return Ok(Verdict::Fail(format!("regions {} vs {r}", inv.regions)));
            }
            if let Some(b) = bounded.filter(|b| *b != inv.bounded_regions) {
                return Ok(Verdict::Fail(format!(
                    "bounded regions {} vs {b}",
                    inv.bounded_regions
                )));
            }
            Ok(Verdict::Pass(format!("{} ({})", inv.regions, o.source)))
        });
    }

    if let FamilySpec::Graphical(g) = spec {
        rep.run("chromatic-polynomial", || {
            let engine = char_poly(&a)?;
            Ok(expect_eq(
                &engine,
                &chromatic_polynomial(g),
                "graph deletion-contraction",
            ))
        });
    }

    if let FamilySpec::Thickened { base, k } = spec {
        rep.run("thickening", || {
            let b = build_family(base)?;
            let report = thicken_identity_check(&b, &vec![*k; b.len()])?;
            Ok(if report.passed() {
                Verdict::Pass(String::new())
            } else {
                Verdict::Fail(format!("{report:?}"))
            })
        });
    }
    Ok(rep)
}

/// Multiplicities by minors and by invariant factors, the unimodular case,
/// the toric point count identity and, in dimension at most 2, the
/// zonotope lattice point counts.
pub fn check_vectors(c: &VectorConfig, opts: &CheckOptions) -> CheckReport {
    let mut rep = CheckReport::default();
    let m = match arithmetic_tutte(c) {
        Ok(m) => m,
        Err(e) => {
            rep.run("arithmetic-tutte", || Err(e));
            return rep;
        }
    };

    rep.run("multiplicity-routes", || {
        for mask in 0..(1u64 << c.len()) {
            let b = indices_of(mask);
            if c.multiplicity(&b) != c.multiplicity_smith(&b) {
                return Ok(Verdict::Fail(format!("subset {b:?}")));
            }
        }
        Ok(Verdict::Pass(String::new()))
    });

    rep.run("unimodular-case", || {
        let unimodular = (0..1u64 << c.len())
            .all(|mask| c.multiplicity_smith(&indices_of(mask)) == BigInt::from(1));
        if !unimodular {
            return Ok(Verdict::Skip("configuration is not unimodular".into()));
        }
        let t = tutte_subset(&c.linear_arrangement()?)?;
        Ok(expect_eq(&m.poly, &t.tutte, "arithmetic vs ordinary Tutte"))
    });

    rep.run("toric-identity", || {
        let tor = torsion_exponent(c);
        let limit = opts.profile_points.min(opts.budget);
        let mut done = Vec::new();
        let mut q = 1u64;
        while done.len() < 3 {
            q += 1;
            if (q as u128).pow(c.dim() as u32) > limit as u128 {
                break;
            }
            if !is_prime(q + 1) || !(BigInt::from(q) % &tor).is_zero() {
                continue;
            }
            let serial = toric_point_profile(c, q, limit, false)?;
            if toric_point_profile(c, q, limit, true)? != serial {
                return Ok(Verdict::Fail(format!(
                    "parallel profile differs at q = {q}"
                )));
            }
            toric_identity_check(&m, &serial)?;
            done.push(q.to_string());
        }
        Ok(if done.is_empty() {
            Verdict::Skip(format!(
                "no q within {limit} points with q + 1 prime and {tor} | q"
            ))
        } else {
            Verdict::Pass(format!("q in {{{}}}", done.join(", ")))
        })
    });

    rep.run("zonotope-lattice-points", || {
        if c.dim() > 2 {
            return Ok(Verdict::Skip("brute force needs dimension <= 2".into()));
        }
        let ev = zonotope_evaluations(&m);
        let bf = brute_force_zonotope(c)?;
        if (&bf.volume, &bf.lattice_points, &bf.interior_points)
            != (&ev.volume, &ev.lattice_points, &ev.interior_points)
        {
            return Ok(Verdict::Fail(format!("direct count {bf:?} vs {ev:?}")));
        }
        for k in 1..=3 {
            let dil = brute_force_zonotope(&c.scaled(k))?;
            let e = ev.ehrhart.eval_scalar(&[("q", rat(k))])?;
            if Rational::from_integer(dil.lattice_points.clone()) != e {
                return Ok(Verdict::Fail(format!(
                    "dilation {k}: {} vs Ehrhart {e}",
                    dil.lattice_points
                )));
            }
        }
        Ok(Verdict::Pass(String::new()))
    });
    rep
}

/// Runs several suites under a common prefix per outcome.
pub fn combine(parts: Vec<(String, CheckReport)>) -> CheckReport {
    let mut rep = CheckReport::default();
    for (prefix, part) in parts {
        let mut part = part;
        for o in &mut part.outcomes {
            o.name = format!("{prefix}/{}", o.name);
        }
        rep.extend(part);
    }
    rep
}
