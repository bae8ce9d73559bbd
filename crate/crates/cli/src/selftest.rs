//! Seeded invariant suites behind `knotlie selftest`.
//!
//! Every suite draws from its own generator, seeded from the run seed and the
//! suite name, so suites can run in any order or in parallel and still
//! produce the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use knotlie::alexander::{
    alexander_matrix, alexander_polynomial, characteristic_polynomial, fox_derivative, LaurentPolynomial,
};
use knotlie::cover::{
    meridional_presentation, project_back, pushforward, random_cover_word, reidemeister_schreier,
    rewrite_to_cover, to_fiber, window, TShift,
};
use knotlie::goldman::{
    goldman_bracket, goldman_bracket_linear_mutated, goldman_bracket_mutated, homological_projection, Mutation,
};
use knotlie::knots::{
    catalog, closure_components, is_symplectic, parse_braid, wirtinger_exponents, wirtinger_from_braid, BraidWord,
    FiberedKnotModel, GroupPresentation, CATALOG,
};
use knotlie::liealg::{
    bracket_H, bracket_H_linear, bracket_PiK, bracket_PiK_linear, bracket_pi_k, orbit_canonical, project_to_orbits,
    t_on_h, t_on_h_combination, OrbitCombination,
};
use knotlie::surface::{standard_surface, RibbonSurface};
use knotlie::words::{random, Alphabet, CyclicWord, LinearCombination, Rational, Word};
use knotlie::{Error, Result};

use crate::commands::thread_pool;
use crate::oracle::{seifert_alexander, seifert_catalog};
use crate::{Format, MutationArg, Outcome, RunConfig, EXIT_OK, EXIT_SELFTEST};

/// Settings shared by all suites of one run.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub orbit_bound: usize,
    pub mutation: Mutation,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            orbit_bound: 5,
            mutation: Mutation::None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed(),
            "counterexample": self.counterexample,
        })
    }
}

pub struct Suite {
    pub name: &'static str,
    /// Whether the suite belongs to the default run. Suites that check
    /// statements known to be false are only run on request.
    pub default: bool,
    pub description: &'static str,
    run: fn(&Context, &mut ChaCha8Rng, &mut Tally),
}

/// Case counter that keeps the first counterexample.
#[derive(Default)]
pub struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        self.cases += 1;
        let problem = match outcome {
            Ok(true) => return,
            Ok(false) => describe(),
            Err(e) => format!("{}: error {e}", describe()),
        };
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(problem);
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn show(c: &CyclicWord) -> String {
    c.display(Alphabet::Genus)
}

fn sum_zero(a: &LinearCombination, b: &LinearCombination) -> bool {
    (a + b).is_zero()
}

fn surfaces() -> Vec<RibbonSurface> {
    [1, 2].iter().map(|&g| standard_surface(g).expect("positive genus")).collect()
}

fn models() -> Vec<FiberedKnotModel> {
    CATALOG.iter().map(|n| catalog(n).expect("catalog entries validate")).collect()
}

fn antisymmetry(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for s in surfaces() {
        for k in 0..500 {
            let x = random::class(rng, s.rank(), 8);
            // every fifth pair shares a root with x
            let y = if k % 5 == 4 {
                let (root, _) = x.primitive_root().expect("nonempty");
                root.pow(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 })
            } else {
                random::class(rng, s.rank(), 8)
            };
            let outcome = (|| {
                let xy = goldman_bracket_mutated(&s, &x, &y, ctx.mutation)?;
                let yx = goldman_bracket_mutated(&s, &y, &x, ctx.mutation)?;
                Ok(sum_zero(&xy, &yx))
            })();
            t.check(outcome, || format!("genus {}: x = {}, y = {}", s.genus(), show(&x), show(&y)));
        }
    }
}

fn jacobi(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for s in surfaces() {
        for _ in 0..200 {
            let v: Vec<LinearCombination> = (0..3)
                .map(|_| LinearCombination::singleton(random::class(rng, s.rank(), 8)))
                .collect();
            let outcome = (|| {
                let mut total = LinearCombination::zero();
                for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let inner = goldman_bracket_linear_mutated(&s, &v[b], &v[c], ctx.mutation)?;
                    total = &total + &goldman_bracket_linear_mutated(&s, &v[a], &inner, ctx.mutation)?;
                }
                Ok(total.is_zero())
            })();
            t.check(outcome, || {
                let names: Vec<String> = v.iter().map(|c| c.display(Alphabet::Genus)).collect();
                format!("genus {}: {}", s.genus(), names.join(", "))
            });
        }
    }
}

fn anchors(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let s = standard_surface(1).expect("genus one");
    let a = CyclicWord::from_word(&Word::generator(1));
    let b = CyclicWord::from_word(&Word::generator(2));
    let ab = CyclicWord::from_word(&(&Word::generator(1) * &Word::generator(2)));
    t.check(
        goldman_bracket_mutated(&s, &a, &b, ctx.mutation).map(|c| c == LinearCombination::singleton(ab)),
        || "[a1, b1] != <a1.b1>".into(),
    );
    for s in surfaces() {
        let boundary = s.boundary_word();
        for _ in 0..100 {
            let x = random::class(rng, s.rank(), 8);
            t.check(goldman_bracket_mutated(&s, &x, &x, ctx.mutation).map(|c| c.is_zero()), || {
                format!("[x, x] != 0 for x = {}", show(&x))
            });
            for central in [CyclicWord::trivial(), boundary.clone()] {
                t.check(
                    goldman_bracket_mutated(&s, &central, &x, ctx.mutation).map(|c| c.is_zero()),
                    || format!("<{}> not central against {}", show(&central), show(&x)),
                );
            }
        }
    }
}

fn homology_projection(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for s in surfaces() {
        for _ in 0..200 {
            let x = random::class(rng, s.rank(), 8);
            let y = random::class(rng, s.rank(), 8);
            let outcome = (|| {
                let lhs = homological_projection(&goldman_bracket_mutated(&s, &x, &y, ctx.mutation)?, s.rank())?;
                let hx = x.to_word().abelianize(s.rank())?;
                let hy = y.to_word().abelianize(s.rank())?;
                Ok(lhs == bracket_H(s.genus(), &hx, &hy)?)
            })();
            t.check(outcome, || format!("genus {}: x = {}, y = {}", s.genus(), show(&x), show(&y)));
        }
    }
}

fn mapping_class_equivariance(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        let phi = m.monodromy();
        for _ in 0..100 {
            let x = random::class(rng, 2, 6);
            let y = random::class(rng, 2, 6);
            let outcome = (|| {
                let lhs = goldman_bracket_mutated(m.fiber(), &phi.apply_class(&x)?, &phi.apply_class(&y)?, ctx.mutation)?;
                let rhs = phi.apply_combination(&goldman_bracket_mutated(m.fiber(), &x, &y, ctx.mutation)?)?;
                Ok(lhs == rhs)
            })();
            t.check(outcome, || format!("{}: x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
    }
}

fn fox_product_rule(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..100 {
        let u = random::word(rng, 3, 8);
        let v = random::word(rng, 3, 8);
        for g in 1..=3 {
            let lhs = fox_derivative(&(&u * &v), g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_multiply(&u));
            t.check(Ok(lhs == rhs), || {
                format!("d/dx{g} of u = {}, v = {}", u.display(Alphabet::Generic), v.display(Alphabet::Generic))
            });
        }
    }
}

fn polynomial_of(p: &GroupPresentation, exponents: &[i64]) -> Result<LaurentPolynomial> {
    alexander_polynomial(&alexander_matrix(p, exponents)?)
}

fn braid_polynomial(braid: &str) -> Result<LaurentPolynomial> {
    let p = wirtinger_from_braid(&parse_braid(braid, None)?)?;
    polynomial_of(&p, &wirtinger_exponents(&p))
}

fn is_knot_polynomial(d: &LaurentPolynomial) -> bool {
    let v = d.value_at_one();
    (v == 1.into() || v == (-1).into()) && d.associates(&d.reciprocal())
}

fn alexander_oracle(_: &Context, _: &mut ChaCha8Rng, t: &mut Tally) {
    for (name, braid, seifert) in seifert_catalog() {
        let oracle = LaurentPolynomial::from_i64s(0, &seifert_alexander(&seifert));
        let outcome = braid_polynomial(braid).map(|d| d.associates(&oracle) && is_knot_polynomial(&d));
        t.check(outcome, || format!("{name}: Fox calculus on `{braid}` disagrees with the Seifert matrix"));
        if let Ok(m) = catalog(name) {
            let p = meridional_presentation(&m);
            let mut exponents = vec![0; p.rank()];
            exponents[0] = 1;
            let outcome = polynomial_of(&p, &exponents).map(|d| d.associates(&oracle));
            t.check(outcome, || format!("{name}: meridional presentation disagrees with the Seifert matrix"));
        }
    }
    // Tietze moves on the trefoil: conjugated relator, added consequence
    let x = |i| Word::generator(i);
    let r = &(&(&x(1) * &x(2)) * &x(1)) * &(&(&x(2) * &x(1)) * &x(2)).inverse();
    let base = GroupPresentation::with_generic_names(2, vec![r.clone()]).expect("rank 2");
    let moved = GroupPresentation::with_generic_names(2, vec![r.conjugated_by(&x(2)).inverse(), r.pow(2).conjugated_by(&x(1))])
        .expect("rank 2");
    let outcome = (|| Ok(polynomial_of(&base, &[1, 1])? == polynomial_of(&moved, &[1, 1])?))();
    t.check(outcome, || "Tietze moves change the trefoil polynomial".into());
}

fn fibered_consistency(_: &Context, _: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        let h = m.homology_matrix();
        t.check(Ok(is_symplectic(&h)), || format!("{}: homology matrix not symplectic", m.name()));
        let charpoly = characteristic_polynomial(&h);
        let braid = knotlie::knots::catalog_braid(m.name()).expect("catalog braid");
        let outcome = braid_polynomial(braid).map(|d| d.associates(&charpoly));
        t.check(outcome, || format!("{}: det(tI - M) differs from the Alexander polynomial", m.name()));
        let b = m.boundary_class();
        t.check(m.monodromy().apply_class(&b).map(|c| c == b), || {
            format!("{}: monodromy moves the boundary", m.name())
        });
    }
}

fn random_knot_braid(rng: &mut ChaCha8Rng) -> BraidWord {
    loop {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=9);
        let letters = (0..len)
            .map(|_| (rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        let b = BraidWord::new(strands, letters).expect("indices in range");
        if closure_components(&b) == 1 {
            return b;
        }
    }
}

fn wirtinger_abelianization(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..20 {
        let b = random_knot_braid(rng);
        let outcome = (|| {
            let p = wirtinger_from_braid(&b)?;
            let d = polynomial_of(&p, &wirtinger_exponents(&p))?;
            Ok(p.abelianization() == (1, vec![]) && p.deficiency() == 1 && is_knot_polynomial(&d))
        })();
        t.check(outcome, || format!("braid `{b}`"));
    }
}

fn schreier_round_trip(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..100 {
        let w = random_cover_word(rng, 2, 16);
        let outcome = rewrite_to_cover(&w).map(|lw| project_back(&lw) == w);
        t.check(outcome, || format!("word {}", w.display(Alphabet::Generic)));
    }
    let m = catalog("trefoil").expect("catalog");
    let p = meridional_presentation(&m);
    let outcome = (|| {
        let lp = reidemeister_schreier(&p)?;
        let schema_ok = lp
            .schema()
            .iter()
            .enumerate()
            .all(|(i, (y, z))| y == &m.monodromy().images()[i] && z == &Word::generator(i + 1));
        let rewritten: Vec<_> = p.relators().iter().map(rewrite_to_cover).collect::<Result<_>>()?;
        let mut ok = schema_ok && rewritten == lp.instantiate(-1);
        for k in -2..=2 {
            for r in lp.instantiate(k) {
                ok &= to_fiber(&r, &m)?.is_empty();
            }
        }
        Ok(ok)
    })();
    t.check(outcome, || "trefoil leveled relators".into());
}

fn shift_compatibility(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..100 {
            let w = random_cover_word(rng, 2, 10);
            let n = rng.gen_range(-3..=3);
            let outcome = (|| {
                let lw = rewrite_to_cover(&w)?;
                let shifted = to_fiber(&lw.t_shift(n, &m)?, &m)?;
                Ok(shifted == to_fiber(&lw, &m)?.t_shift(n, &m)?)
            })();
            t.check(outcome, || format!("{}: n = {n}, w = {}", m.name(), w.display(Alphabet::Generic)));
        }
    }
}

fn t_equivariance_fiber(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..100 {
            let x = random::class(rng, 2, 6);
            let y = random::class(rng, 2, 6);
            let outcome = (|| {
                let lhs = bracket_pi_k(&m, &x.t_shift(1, &m)?, &y.t_shift(1, &m)?)?;
                Ok(lhs == bracket_pi_k(&m, &x, &y)?.t_shift(1, &m)?)
            })();
            t.check(outcome, || format!("{}: x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
    }
}

fn t_equivariance_orbits(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..100 {
            let x = random::class(rng, 2, 5);
            let y = random::class(rng, 2, 5);
            let outcome = (|| {
                // t fixes every orbit, so [tx, ty] and [x, y] project alike
                let lhs = project_to_orbits(&m, &bracket_pi_k(&m, &x.t_shift(1, &m)?, &y.t_shift(1, &m)?)?, ctx.orbit_bound)?;
                let rhs = project_to_orbits(&m, &bracket_pi_k(&m, &x, &y)?, ctx.orbit_bound)?;
                let a = orbit_canonical(&m, &x, ctx.orbit_bound)?;
                let b = orbit_canonical(&m, &y, ctx.orbit_bound)?;
                let ta = orbit_canonical(&m, &x.t_shift(1, &m)?, ctx.orbit_bound)?;
                let tb = orbit_canonical(&m, &y.t_shift(1, &m)?, ctx.orbit_bound)?;
                Ok(lhs == rhs && bracket_PiK(&m, &ta, &tb, ctx.orbit_bound)? == bracket_PiK(&m, &a, &b, ctx.orbit_bound)?)
            })();
            t.check(outcome, || format!("{}: x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
    }
}

fn t_equivariance_homology(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..100 {
            let h1: Vec<i64> = (0..2).map(|_| rng.gen_range(-5..=5)).collect();
            let h2: Vec<i64> = (0..2).map(|_| rng.gen_range(-5..=5)).collect();
            let outcome = (|| {
                let lhs = bracket_H(1, &t_on_h(&m, &h1)?, &t_on_h(&m, &h2)?)?;
                Ok(lhs == t_on_h_combination(&m, &bracket_H(1, &h1, &h2)?)?)
            })();
            t.check(outcome, || format!("{}: h1 = {h1:?}, h2 = {h2:?}", m.name()));
        }
    }
}

fn random_homology(rng: &mut ChaCha8Rng, rank: usize) -> knotlie::goldman::HomologyCombination {
    let mut c = knotlie::goldman::HomologyCombination::zero();
    for _ in 0..3 {
        let h: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
        c.add_term(h, int(rng.gen_range(-2..=2)));
    }
    c
}

fn homology_lie(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for g in [1, 2] {
        for _ in 0..100 {
            let v: Vec<_> = (0..3).map(|_| random_homology(rng, 2 * g)).collect();
            let outcome = (|| {
                let mut anti = bracket_H_linear(g, &v[0], &v[1])?;
                anti.add_scaled(&bracket_H_linear(g, &v[1], &v[0])?, &int(1));
                let mut total = knotlie::goldman::HomologyCombination::zero();
                for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let inner = bracket_H_linear(g, &v[b], &v[c])?;
                    total.add_scaled(&bracket_H_linear(g, &v[a], &inner)?, &int(1));
                }
                Ok(anti.is_zero() && total.is_zero())
            })();
            t.check(outcome, || format!("genus {g}: {v:?}"));
        }
    }
}

fn orbit_canonical_suite(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..30 {
            let x = random::class(rng, 2, 6);
            let outcome = (|| {
                let canon = orbit_canonical(&m, &x, ctx.orbit_bound)?;
                let doubled = orbit_canonical(&m, &x, 2 * ctx.orbit_bound)?;
                let far = orbit_canonical(&m, &x.t_shift(5, &m)?, ctx.orbit_bound)?;
                Ok(canon == doubled && canon == far)
            })();
            t.check(outcome, || format!("{}: x = {}", m.name(), show(&x)));
        }
    }
}

fn orbit_antisymmetry(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        let boundary = orbit_canonical(&m, &m.boundary_class(), ctx.orbit_bound);
        for _ in 0..50 {
            let x = random::class(rng, 2, 5);
            let y = random::class(rng, 2, 5);
            let outcome = (|| {
                let a = orbit_canonical(&m, &x, ctx.orbit_bound)?;
                let b = orbit_canonical(&m, &y, ctx.orbit_bound)?;
                let mut sum = bracket_PiK(&m, &a, &b, ctx.orbit_bound)?;
                sum.add_scaled(&bracket_PiK(&m, &b, &a, ctx.orbit_bound)?, &int(1));
                let central = bracket_PiK(&m, boundary.as_ref().map_err(Clone::clone)?, &b, ctx.orbit_bound)?;
                Ok(sum.is_zero() && central.is_zero() && bracket_PiK(&m, &a, &a, ctx.orbit_bound)?.is_zero())
            })();
            t.check(outcome, || format!("{}: x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
    }
}

fn quotient_equal_shifts(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..50 {
            let x = random::class(rng, 2, 5);
            let y = random::class(rng, 2, 5);
            let n = rng.gen_range(-2..=2);
            let outcome = shifted_orbit_bracket(&m, &x, &y, n, n, ctx.orbit_bound);
            t.check(outcome, || format!("{}: x = {}, y = {}, n = m = {n}", m.name(), show(&x), show(&y)));
        }
    }
}

/// Whether the orbit projection of `[tⁿx, tᵐy]` equals that of `[x, y]`.
pub fn shifted_orbit_bracket(
    m: &FiberedKnotModel,
    x: &CyclicWord,
    y: &CyclicWord,
    n: i64,
    k: i64,
    bound: usize,
) -> Result<bool> {
    let base = project_to_orbits(m, &bracket_pi_k(m, x, y)?, bound)?;
    let shifted = bracket_pi_k(m, &x.t_shift(n, m)?, &y.t_shift(k, m)?)?;
    Ok(project_to_orbits(m, &shifted, bound)? == base)
}

fn quotient_independent_shifts(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..50 {
            let x = random::class(rng, 2, 5);
            let y = random::class(rng, 2, 5);
            let n = rng.gen_range(-2..=2);
            let k = rng.gen_range(-2..=2);
            let outcome = shifted_orbit_bracket(&m, &x, &y, n, k, ctx.orbit_bound);
            t.check(outcome, || format!("{}: x = {}, y = {}, shifts ({n}, {k})", m.name(), show(&x), show(&y)));
        }
    }
}

fn orbit_jacobi(ctx: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for _ in 0..30 {
            let classes: Vec<CyclicWord> = (0..3).map(|_| random::class(rng, 2, 4)).collect();
            let outcome = (|| {
                let v: Vec<OrbitCombination> = classes
                    .iter()
                    .map(|c| {
                        let mut o = OrbitCombination::zero();
                        o.add_term(orbit_canonical(&m, c, ctx.orbit_bound)?, int(1));
                        Ok(o)
                    })
                    .collect::<Result<_>>()?;
                let mut total = OrbitCombination::zero();
                for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let inner = bracket_PiK_linear(&m, &v[b], &v[c], ctx.orbit_bound)?;
                    total.add_scaled(&bracket_PiK_linear(&m, &v[a], &inner, ctx.orbit_bound)?, &int(1));
                }
                Ok(total.is_zero())
            })();
            t.check(outcome, || {
                let names: Vec<String> = classes.iter().map(show).collect();
                format!("{}: {}", m.name(), names.join(", "))
            });
        }
    }
}

fn window_single_copy(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        let identity = window(&m, 0, 0).expect("window");
        for _ in 0..50 {
            let x = random::class(rng, 2, 6);
            let y = random::class(rng, 2, 6);
            let outcome = (|| {
                let lhs = pushforward(&identity, &goldman_bracket(identity.surface(), &x, &y)?)?;
                Ok(lhs == bracket_pi_k(&m, &x, &y)?)
            })();
            t.check(outcome, || format!("{}: width 1, x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
        let wide = window(&m, -1, 1).expect("window");
        for _ in 0..30 {
            let level = rng.gen_range(-1..=1i64);
            let offset = wide.generator(1, level).expect("in window") - 1;
            let x = CyclicWord::from_word(&random::cyclically_reduced(rng, 2, 6).shifted(offset));
            let y = CyclicWord::from_word(&random::cyclically_reduced(rng, 2, 6).shifted(offset));
            let outcome = (|| {
                let lhs = pushforward(&wide, &goldman_bracket(wide.surface(), &x, &y)?)?;
                let rhs = bracket_pi_k(&m, &wide.project_class(&x)?, &wide.project_class(&y)?)?;
                Ok(lhs == rhs)
            })();
            t.check(outcome, || format!("{}: copy {level} of window -1..1, x = {}, y = {}", m.name(), show(&x), show(&y)));
        }
    }
}

fn window_boundary(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        for (k, l) in [(0, 0), (0, 1), (-1, 1)] {
            let outcome = (|| {
                let wm = window(&m, k, l)?;
                let fiber = m.fiber().based_boundary().clone();
                let mut product = Word::identity();
                for n in k..=l {
                    product = &product * &m.monodromy().apply_word_power(&fiber, n)?;
                }
                let boundary = wm.surface().boundary_word();
                let mut ok = wm.project_class(&boundary)? == CyclicWord::from_word(&product);
                for _ in 0..10 {
                    let y = random::class(rng, wm.surface().rank(), 6);
                    ok &= goldman_bracket(wm.surface(), &boundary, &y)?.is_zero();
                }
                Ok(ok)
            })();
            t.check(outcome, || format!("{}: window {k}..={l}", m.name()));
        }
    }
}

fn naturality_width_two(_: &Context, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for m in models() {
        let wm = window(&m, 0, 1).expect("window");
        for _ in 0..50 {
            let x = random::class(rng, 4, 6);
            let y = random::class(rng, 4, 6);
            let outcome = naturality_scaling(&m, &wm, &x, &y);
            t.check(outcome, || format!("{}: b1 = {}, b2 = {}", m.name(), show(&x), show(&y)));
        }
    }
}

/// `pushforward([x, y]) = width · [p(x), p(y)]`.
pub fn naturality_scaling(
    m: &FiberedKnotModel,
    wm: &knotlie::cover::WindowMap,
    x: &CyclicWord,
    y: &CyclicWord,
) -> Result<bool> {
    let lhs = pushforward(wm, &goldman_bracket(wm.surface(), x, y)?)?;
    let rhs = bracket_pi_k(m, &wm.project_class(x)?, &wm.project_class(y)?)?;
    Ok(lhs == rhs.scaled(&int(wm.width() as i64)))
}

pub fn suites() -> Vec<Suite> {
    macro_rules! suite {
        ($name:expr, $default:expr, $f:expr, $d:expr) => {
            Suite {
                name: $name,
                default: $default,
                description: $d,
                run: $f,
            }
        };
    }
    vec![
        suite!("antisymmetry", true, antisymmetry, "[x,y] = -[y,x] on genus 1 and 2"),
        suite!("jacobi", true, jacobi, "Jacobi identity on genus 1 and 2"),
        suite!("anchors", true, anchors, "[a1,b1] = <a1b1>, [x,x] = 0, central classes"),
        suite!("homology-projection", true, homology_projection, "homology projection is a bracket map"),
        suite!("mapping-class-equivariance", true, mapping_class_equivariance, "[φx,φy] = φ[x,y]"),
        suite!("fox-product-rule", true, fox_product_rule, "Fox derivative product rule"),
        suite!("alexander-oracle", true, alexander_oracle, "Fox calculus against Seifert matrices"),
        suite!("fibered-consistency", true, fibered_consistency, "catalog models: symplectic, det(tI-M) = Δ"),
        suite!("wirtinger-abelianization", true, wirtinger_abelianization, "random braid closures abelianize to Z"),
        suite!("schreier-round-trip", true, schreier_round_trip, "cover rewriting round trip and leveled relators"),
        suite!("t-shift-compatibility", true, shift_compatibility, "level shift agrees with the monodromy"),
        suite!("t-equivariance-fiber", true, t_equivariance_fiber, "[tx,ty] = t[x,y] on fiber classes"),
        suite!("t-equivariance-orbits", true, t_equivariance_orbits, "[tx,ty] = t[x,y] on t-orbits"),
        suite!("t-equivariance-homology", true, t_equivariance_homology, "[tx,ty] = t[x,y] on homology"),
        suite!("homology-lie", true, homology_lie, "Lie axioms on Q[H]"),
        suite!("orbit-canonical", true, orbit_canonical_suite, "orbit representatives are stable"),
        suite!("orbit-antisymmetry", true, orbit_antisymmetry, "antisymmetry and centrality on t-orbits"),
        suite!("quotient-equal-shifts", true, quotient_equal_shifts, "orbit bracket unchanged by (tⁿx, tⁿy)"),
        suite!("window-single-copy", true, window_single_copy, "windows restricted to one level"),
        suite!("window-boundary", true, window_boundary, "window boundary maps to the product of fiber boundaries"),
        suite!("naturality-width-2", false, naturality_width_two, "pushforward over a width-2 window doubles the bracket (known false)"),
        suite!("quotient-independent-shifts", false, quotient_independent_shifts, "orbit bracket unchanged by (tⁿx, tᵐy) (known false)"),
        suite!("orbit-jacobi", false, orbit_jacobi, "Jacobi identity on t-orbits (known false)"),
    ]
}

/// Suite seed derived from the run seed and the suite name (FNV-1a).
pub fn suite_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn run_suite(suite: &Suite, seed: u64, ctx: &Context) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(suite_seed(seed, suite.name));
    let mut tally = Tally::default();
    (suite.run)(ctx, &mut rng, &mut tally);
    SuiteReport {
        name: suite.name,
        cases: tally.cases,
        failures: tally.failures,
        counterexample: tally.first,
    }
}

/// Runs the named suites (all default suites if `names` is empty).
pub fn run_suites(names: &[String], seed: u64, ctx: &Context, jobs: usize) -> Result<Vec<SuiteReport>> {
    let all = suites();
    let selected: Vec<&Suite> = if names.is_empty() {
        all.iter().filter(|s| s.default).collect()
    } else {
        names
            .iter()
            .map(|n| {
                all.iter()
                    .find(|s| s.name == n)
                    .ok_or_else(|| Error::Invalid(format!("unknown suite `{n}`")))
            })
            .collect::<Result<_>>()?
    };
    if jobs == 1 {
        return Ok(selected.iter().map(|s| run_suite(s, seed, ctx)).collect());
    }
    Ok(thread_pool(jobs)?.install(|| selected.par_iter().map(|s| run_suite(s, seed, ctx)).collect()))
}

pub fn report(config: &RunConfig, reports: &[SuiteReport]) -> String {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match config.format {
        Format::Json => {
            let v = json!({
                "seed": config.seed,
                "orbit_bound": config.orbit_bound,
                "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
                "passed": reports.len() - failed,
                "failed": failed,
            });
            format!("{v}\n")
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.passed() { "ok  " } else { "FAIL" };
                out.push_str(&format!("{status} {:<30} {:>5} cases", r.name, r.cases));
                if let Some(c) = &r.counterexample {
                    out.push_str(&format!(", {} failed; first: {c}", r.failures));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "seed {}: {} suites passed, {failed} failed\n",
                config.seed,
                reports.len() - failed
            ));
            out
        }
    }
}

pub fn command(config: &RunConfig, names: &[String], list: bool, mutation: Option<MutationArg>) -> Result<Outcome> {
    if list {
        let lines: Vec<String> = suites()
            .iter()
            .map(|s| format!("{:<30} {}{}", s.name, if s.default { "" } else { "[opt-in] " }, s.description))
            .collect();
        return Ok(Outcome::ok(lines.join("\n") + "\n"));
    }
    let ctx = Context {
        orbit_bound: config.orbit_bound as usize,
        mutation: match mutation {
            Some(MutationArg::SignFlip) => Mutation::SignFlip,
            None => Mutation::None,
        },
    };
    let reports = run_suites(names, config.seed, &ctx, config.jobs)?;
    let code = if reports.iter().all(SuiteReport::passed) { EXIT_OK } else { EXIT_SELFTEST };
    Ok(Outcome {
        stdout: report(config, &reports),
        stderr: String::new(),
        code,
    })
}
