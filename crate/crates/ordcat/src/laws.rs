//! The desk-scale law verifier: a registry of named suites, one per
//! identity between the functors of this crate, each checked exhaustively
//! over all morphisms up to a size bound.
//!
//! Suites are deterministic: instances are enumerated in a fixed order and
//! failures are reported in that order regardless of how many threads the
//! sweep uses. A report lists the suite name, the bound, the number of
//! checked instances and up to ten counterexamples rendered in the map
//! literal grammar.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    act_contra_i, act_cov_t, join_it2_glued, join_it2_map, join_it_map, linearity_witness_i,
    linearity_witness_t, osum, osum2, osum2_map, osum_map, pair_it, sigma_act_i, sigma_act_t,
    sigma_pair, unit_bottom, unit_top, IndexedFamily,
};
use crate::core::{all_maps, automorphisms, enumerate_hom, hom_count, Error, FinOrd, MonMap, Tag};
use crate::duality::{
    adjoin_bottom, adjoin_bottom_t, adjoin_top, adjoin_top_i, birkhoff_it, birkhoff_ord,
    birkhoff_via_hom, bracket, builtins, dual_i, dual_i_via_hom, dual_t, dual_t_via_hom,
    forget_functor, lad, op_functor, rad, Functor, Variance,
};

/// Maximum number of counterexamples kept per suite.
const FAILURE_CAP: usize = 10;

/// One counterexample: the instance inputs and the two sides that were
/// expected to agree, all rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

/// The outcome of running one suite at one bound.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub suite: String,
    pub bound: usize,
    pub instances: u64,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Instance tally and collected counterexamples, before timing is added.
#[derive(Debug, Default)]
struct Outcome {
    instances: u64,
    failures: Vec<Failure>,
}

impl Outcome {
    fn check(&mut self, inputs: &[&dyn std::fmt::Display], expected: &str, actual: &str) {
        self.instances += 1;
        if expected != actual && self.failures.len() < FAILURE_CAP {
            self.failures.push(Failure {
                inputs: inputs.iter().map(|d| d.to_string()).collect(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Record a comparison of two computed maps (or errors).
    fn check_maps(
        &mut self,
        inputs: &[&dyn std::fmt::Display],
        expected: &Result<MonMap, Error>,
        actual: &Result<MonMap, Error>,
    ) {
        let render = |r: &Result<MonMap, Error>| match r {
            Ok(m) => m.to_string(),
            Err(e) => format!("error: {e}"),
        };
        self.check(inputs, &render(expected), &render(actual));
    }

    fn check_bool(&mut self, inputs: &[&dyn std::fmt::Display], condition: bool, claim: &str) {
        self.check(inputs, claim, if condition { claim } else { "violated" });
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.instances += other.instances;
        for f in other.failures {
            if self.failures.len() >= FAILURE_CAP {
                break;
            }
            self.failures.push(f);
        }
        self
    }

    /// Merge keeping every collected failure; used where each phase of a
    /// check should surface its own witnesses.
    fn merge_uncapped(mut self, other: Outcome) -> Outcome {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `eval` over `items` (possibly in parallel) and merges the
/// per-item outcomes in enumeration order, so reports do not depend on the
/// parallelism level.
fn sweep<T: Sync>(items: &[T], eval: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    items
        .par_iter()
        .map(eval)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
}

/// A registered suite: a name, the number of quantified morphisms, the
/// default size bound, and the runner.
pub struct LawSuite {
    pub name: &'static str,
    pub arity: usize,
    pub default_bound: usize,
    runner: fn(usize) -> Outcome,
}

impl LawSuite {
    pub fn run(&self, bound: usize) -> LawReport {
        let start = Instant::now();
        let mut outcome = (self.runner)(bound);
        outcome.failures.truncate(FAILURE_CAP);
        LawReport {
            suite: self.name.to_string(),
            bound,
            instances: outcome.instances,
            failures: outcome.failures,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

const fn suite(
    name: &'static str,
    arity: usize,
    default_bound: usize,
    runner: fn(usize) -> Outcome,
) -> LawSuite {
    LawSuite {
        name,
        arity,
        default_bound,
        runner,
    }
}

/// All registered suites, in the order `check all` runs them.
pub fn registry() -> &'static [LawSuite] {
    static REGISTRY: &[LawSuite] = &[
        suite("rigidity", 1, 8, suite_rigidity),
        suite("counts", 1, 7, suite_counts),
        suite("monicity", 1, 6, suite_monicity),
        suite("closure", 2, 5, suite_closure),
        suite("lemma-2.18", 1, 5, suite_tag_pullback),
        suite("op-2.14", 2, 5, suite_op),
        suite("functor-laws", 2, 4, suite_functor_laws),
        suite("thm-2.9", 1, 5, suite_involutions),
        suite("birkhoff-2.10", 1, 5, suite_birkhoff_inverses),
        suite("prop-2.12", 1, 5, suite_duality_squares),
        suite("lemma-2.17", 1, 5, suite_forgetful_triangle),
        suite("galois-2.21", 1, 5, suite_galois),
        suite("thm-2.23", 1, 5, suite_adjoint_description),
        suite("cor-2.24", 1, 5, suite_adjoint_square),
        suite("notation-2.25", 1, 5, suite_bracket_factorizations),
        suite("lemma-2.26", 1, 5, suite_birkhoff_bracket_op),
        suite("prop-2.28", 1, 5, suite_duality_squares_mirrored),
        suite("monoid-osum", 3, 4, suite_monoid_osum),
        suite("monoid-sigma", 3, 4, suite_monoid_sigma),
        suite("module-actions", 3, 4, suite_module_actions),
        suite("thm-3.12", 2, 5, suite_bottom_linearity),
        suite("cor-3.13", 2, 5, suite_top_linearity),
        suite("prop-3.17", 2, 5, suite_pairing_projections),
        suite("thm-3.19", 3, 4, suite_balanced_pairing),
        suite("thm-3.24", 3, 4, suite_commuting_actions),
        suite("thm-3.27", 3, 4, suite_pairing_bilinearity),
        suite("perfectness-3.32", 2, 5, suite_perfectness),
        suite("barr-beck-3.33", 1, 5, suite_coalgebras),
    ];
    REGISTRY
}

pub fn find_suite(name: &str) -> Result<&'static LawSuite, Error> {
    registry()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs a registered suite at the given bound.
pub fn run_suite(name: &str, bound: usize) -> Result<LawReport, Error> {
    Ok(find_suite(name)?.run(bound))
}

/// Runs a registered suite at its default bound.
pub fn run_suite_default(name: &str) -> Result<LawReport, Error> {
    let suite = find_suite(name)?;
    Ok(suite.run(suite.default_bound))
}

// ---------------------------------------------------------------------------
// functor-level checks

/// Checks functor laws for `f`: identities to identities, output sizes and
/// membership as declared, and (variance-ordered) composition preservation
/// over every composable pair within the bound.
pub fn check_functor(f: &Functor, bound: usize) -> LawReport {
    let start = Instant::now();
    let mut unary = Outcome::default();
    let lo = usize::from(f.src().pointed());
    for n in lo..=bound {
        let id = MonMap::identity(n);
        let expected = Ok(MonMap::identity(f.obj(FinOrd::new(n))));
        unary.check_maps(&[&id], &expected, &f.mor(&id));
    }
    let maps = all_maps(f.src(), bound);
    let images = sweep(&maps, |m| {
        let mut out = Outcome::default();
        match f.mor(m) {
            Ok(image) => {
                let (src_img, dst_img) = match f.variance() {
                    Variance::Covariant => (f.obj(m.src()), f.obj(m.dst())),
                    Variance::Contravariant => (f.obj(m.dst()), f.obj(m.src())),
                };
                out.check_bool(
                    &[m],
                    image.src() == src_img && image.dst() == dst_img && image.is_member(f.dst()),
                    "image has declared sizes and membership",
                );
            }
            Err(e) => out.check(&[m], "image defined", &format!("error: {e}")),
        }
        out
    });
    let composed = sweep(&maps, |g| {
        let mut out = Outcome::default();
        for h in &maps {
            if g.dst() != h.src() {
                continue;
            }
            let gh = g.then(h).expect("composable");
            let lhs = f.mor(&gh);
            let rhs = match f.variance() {
                Variance::Covariant => f.mor(g).and_then(|a| f.mor(h).and_then(|b| a.then(&b))),
                Variance::Contravariant => f.mor(h).and_then(|a| f.mor(g).and_then(|b| a.then(&b))),
            };
            out.check_maps(&[g, h], &lhs, &rhs);
        }
        out
    });
    // keep up to the cap from each phase, so a corrupted functor shows
    // composable-pair witnesses even when identities already fail
    let merged = unary.merge_uncapped(images).merge_uncapped(composed);
    LawReport {
        suite: format!("functor:{}", f.name()),
        bound,
        instances: merged.instances,
        failures: merged.failures,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Asserts two functors have the same signature and agree on every object
/// and morphism within the bound.
pub fn check_equal_functors(f: &Functor, g: &Functor, bound: usize) -> Result<LawReport, Error> {
    if f.src() != g.src() || f.dst() != g.dst() || f.variance() != g.variance() {
        return Err(Error::SignatureMismatch {
            lhs: format!("{} : {}", f.name(), f.signature()),
            rhs: format!("{} : {}", g.name(), g.signature()),
        });
    }
    let start = Instant::now();
    let mut out = Outcome::default();
    let lo = usize::from(f.src().pointed());
    for n in lo..=bound {
        let n = FinOrd::new(n);
        out.check(&[&n], &f.obj(n).to_string(), &g.obj(n).to_string());
    }
    let maps = all_maps(f.src(), bound);
    let swept = sweep(&maps, |m| {
        let mut out = Outcome::default();
        out.check_maps(&[m], &f.mor(m), &g.mor(m));
        out
    });
    let mut merged = out.merge(swept);
    merged.failures.truncate(FAILURE_CAP);
    Ok(LawReport {
        suite: format!("equal:{}={}", f.name(), g.name()),
        bound,
        instances: merged.instances,
        failures: merged.failures,
        millis: start.elapsed().as_millis() as u64,
    })
}

// ---------------------------------------------------------------------------
// comonad coalgebras

/// An object of the two-endpoint category together with a structure map to
/// its bottom-adjoined image, satisfying the counit and coassociativity
/// laws of the bottom-adjoining comonad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub carrier: FinOrd,
    pub structure: MonMap,
}

/// The comonad `X ↦ adjoin_bottom_t(X)` on morphisms.
fn comonad_mor(h: &MonMap) -> MonMap {
    adjoin_bottom_t(h).expect("two-endpoint maps are max-preserving")
}

/// The counit: collapse the fresh bottom onto the original minimum.
fn comonad_counit(carrier: FinOrd) -> MonMap {
    let n = carrier.size();
    let mut values = vec![0usize];
    values.extend(0..n);
    MonMap::new(n + 1, n, values).expect("the collapse map is monotone")
}

/// The comultiplication: duplicate the fresh bottom.
fn comonad_comultiplication(carrier: FinOrd) -> MonMap {
    let n = carrier.size();
    let mut values = vec![0usize];
    values.extend((0..n).map(|x| x + 2));
    MonMap::new(n + 1, n + 2, values).expect("the duplication map is monotone")
}

/// Whether `structure` makes `carrier` a coalgebra for the bottom-adjoining
/// comonad.
pub fn is_coalgebra(carrier: FinOrd, structure: &MonMap) -> bool {
    if !structure.is_member(Tag::OrdIt)
        || structure.src() != carrier
        || structure.dst().size() != carrier.size() + 1
    {
        return false;
    }
    let counit_ok = structure
        .then(&comonad_counit(carrier))
        .expect("sizes agree")
        .is_identity();
    let coassoc_lhs = structure
        .then(&comonad_comultiplication(carrier))
        .expect("sizes agree");
    let coassoc_rhs = structure
        .then(&comonad_mor(structure))
        .expect("sizes agree");
    counit_ok && coassoc_lhs == coassoc_rhs
}

/// Enumerates every coalgebra structure on a carrier. Exactly one exists
/// for carriers of size at least two and none on the one-point order.
pub fn enumerate_coalgebras(carrier: impl Into<FinOrd>) -> Result<Vec<Coalgebra>, Error> {
    let carrier = carrier.into();
    let candidates = enumerate_hom(carrier, FinOrd::new(carrier.size() + 1), Tag::OrdIt)?;
    Ok(candidates
        .into_iter()
        .filter(|structure| is_coalgebra(carrier, structure))
        .map(|structure| Coalgebra { carrier, structure })
        .collect())
}

/// Enumerates coalgebra morphisms between two coalgebras: two-endpoint maps
/// commuting with the structure maps.
pub fn coalgebra_morphisms(a: &Coalgebra, b: &Coalgebra) -> Vec<MonMap> {
    enumerate_hom(a.carrier, b.carrier, Tag::OrdIt)
        .expect("carriers are non-empty")
        .into_iter()
        .filter(|h| {
            let lhs = h.then(&b.structure).expect("sizes agree");
            let rhs = a.structure.then(&comonad_mor(h)).expect("sizes agree");
            lhs == rhs
        })
        .collect()
}

/// The smallest min-preserving-side object separating two distinct parallel
/// max-preserving maps under the ordinal-sum pairing, searched up to the
/// bound. The one-point order always suffices.
pub fn separation_witness(f: &MonMap, g: &MonMap, bound: usize) -> Result<Option<FinOrd>, Error> {
    f.require_member(Tag::OrdT)?;
    g.require_member(Tag::OrdT)?;
    if f.src() != g.src() || f.dst() != g.dst() {
        return Err(Error::NotParallel {
            lhs: f.to_string(),
            rhs: g.to_string(),
        });
    }
    if f == g {
        return Err(Error::EqualMaps(f.to_string()));
    }
    for z in 1..=bound {
        let id = MonMap::identity(z);
        if pair_it(&id, f)? != pair_it(&id, g)? {
            return Ok(Some(FinOrd::new(z)));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// suites

/// Every automorphism is the identity, for every size and applicable tag.
fn suite_rigidity(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for n in 0..=bound {
        let n = FinOrd::new(n);
        let mut ok = true;
        for tag in Tag::ALL {
            if tag.pointed() && n.is_empty() {
                continue;
            }
            ok &= automorphisms(n, tag).expect("sizes are tag-valid") == vec![MonMap::identity(n)];
        }
        out.check_bool(&[&n], ok, "only the identity automorphism");
    }
    out
}

/// Enumerated hom-set sizes match the stars-and-bars formulas, and the
/// counts satisfy the duality identity across the Birkhoff object map.
fn suite_counts(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for m in 0..=bound {
        for n in 0..=bound {
            for tag in Tag::ALL {
                if tag.pointed() && (m == 0 || n == 0) {
                    continue;
                }
                let enumerated = enumerate_hom(m, n, tag).expect("sizes are tag-valid");
                let seen: std::collections::HashSet<_> =
                    enumerated.iter().map(|f| f.values().to_vec()).collect();
                let distinct = seen.len() == enumerated.len();
                let sorted = enumerated.windows(2).all(|w| w[0].values() < w[1].values());
                let label = format!("{m}->{n} in {tag}");
                out.check(
                    &[&label],
                    &format!("{} maps, distinct, lex-sorted", hom_count(m, n, tag)),
                    &format!(
                        "{} maps, {}, {}",
                        enumerated.len(),
                        if distinct { "distinct" } else { "duplicated" },
                        if sorted { "lex-sorted" } else { "unsorted" }
                    ),
                );
            }
        }
    }
    if bound > 0 {
        for m in 0..=bound - 1 {
            for n in 0..=bound - 1 {
                let plain = enumerate_hom(m, n, Tag::Ord).expect("valid").len();
                let dualized = enumerate_hom(n + 1, m + 1, Tag::OrdIt)
                    .expect("valid")
                    .len();
                let label = format!("|Ord({m},{n})| = |OrdIt({},{})|", n + 1, m + 1);
                out.check(&[&label], &plain.to_string(), &dualized.to_string());
            }
        }
    }
    out
}

/// The identity-on-data inclusions between the four hom-sets really are
/// inclusions, and a map invertible in the plain category that lies in a
/// subcategory is invertible there.
fn suite_monicity(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for m in 1..=bound {
        for n in 1..=bound {
            let plain = enumerate_hom(m, n, Tag::Ord).expect("valid");
            for (sub, sup) in [
                (Tag::OrdIt, Tag::OrdT),
                (Tag::OrdIt, Tag::OrdI),
                (Tag::OrdT, Tag::Ord),
                (Tag::OrdI, Tag::Ord),
            ] {
                let smaller = enumerate_hom(m, n, sub).expect("valid");
                let larger = enumerate_hom(m, n, sup).expect("valid");
                let included = smaller.iter().all(|f| larger.contains(f));
                let label = format!("{sub} ⊆ {sup} at {m}->{n}");
                out.check_bool(&[&label], included, "hom-set inclusion");
            }
            for f in &plain {
                let inverse = enumerate_hom(n, m, Tag::Ord)
                    .expect("valid")
                    .into_iter()
                    .find(|g| {
                        f.then(g).expect("composable").is_identity()
                            && g.then(f).expect("composable").is_identity()
                    });
                if let Some(g) = inverse {
                    for tag in [Tag::OrdT, Tag::OrdI, Tag::OrdIt] {
                        if f.is_member(tag) {
                            out.check_bool(
                                &[f, &tag],
                                g.is_member(tag),
                                "inverse stays in the subcategory",
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// Identities are members of every tag, and members compose to members.
fn suite_closure(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for tag in Tag::ALL {
        let lo = usize::from(tag.pointed());
        for n in lo..=bound {
            out.check_bool(
                &[&MonMap::identity(n), &tag],
                MonMap::identity(n).is_member(tag),
                "identity is a member",
            );
        }
    }
    for tag in Tag::ALL {
        let maps = all_maps(tag, bound);
        let swept = sweep(&maps, |f| {
            let mut out = Outcome::default();
            for g in &maps {
                if f.dst() != g.src() {
                    continue;
                }
                let fg = f.then(g).expect("composable");
                let valid = MonMap::new(fg.src(), fg.dst(), fg.values().to_vec()).is_ok();
                out.check_bool(
                    &[f, g, &tag],
                    valid && fg.is_member(tag),
                    "composite is a member",
                );
            }
            out
        });
        out = out.merge(swept);
    }
    out
}

/// Two-endpoint membership is the conjunction of the two one-endpoint
/// memberships, on every map.
fn suite_tag_pullback(bound: usize) -> Outcome {
    let maps = all_maps(Tag::Ord, bound);
    sweep(&maps, |f| {
        let mut out = Outcome::default();
        out.check_bool(
            &[f],
            f.is_member(Tag::OrdIt) == (f.is_member(Tag::OrdI) && f.is_member(Tag::OrdT)),
            "two-endpoint membership is the pullback",
        );
        out
    })
}

/// `op` is an involution exchanging the two pointed tags, and inverts the
/// order of ordinal sums.
fn suite_op(bound: usize) -> Outcome {
    let maps = all_maps(Tag::Ord, bound);
    let unary = sweep(&maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(f.clone()), &Ok(f.op().op()));
        out.check_bool(
            &[f],
            f.op().is_member(Tag::OrdT) == f.is_member(Tag::OrdI)
                && f.op().is_member(Tag::OrdI) == f.is_member(Tag::OrdT)
                && f.op().is_member(Tag::OrdIt) == f.is_member(Tag::OrdIt),
            "op exchanges the pointed tags",
        );
        out
    });
    let binary = sweep(&maps, |f| {
        let mut out = Outcome::default();
        for g in &maps {
            out.check_maps(
                &[f, g],
                &Ok(osum2_map(f, g).op()),
                &Ok(osum2_map(&g.op(), &f.op())),
            );
        }
        out
    });
    unary.merge(binary)
}

/// Functor laws for every builtin functor.
fn suite_functor_laws(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for f in builtins() {
        let report = check_functor(&f, bound);
        out.instances += report.instances;
        for failure in report.failures {
            if out.failures.len() < FAILURE_CAP {
                out.failures.push(failure);
            }
        }
    }
    out
}

/// The self-dualities square to the identity.
fn suite_involutions(bound: usize) -> Outcome {
    let t_maps = all_maps(Tag::OrdT, bound);
    let top = sweep(&t_maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(f.clone()), &dual_t(f).and_then(|d| dual_t(&d)));
        out
    });
    let i_maps = all_maps(Tag::OrdI, bound);
    let bottom = sweep(&i_maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(f.clone()), &dual_i(f).and_then(|d| dual_i(&d)));
        out
    });
    top.merge(bottom)
}

/// The two Birkhoff functors are mutually inverse (the second direction is
/// swept one size higher so it sees the image of the first), and the
/// functor agrees with precomposition on hom posets into the dyad.
fn suite_birkhoff_inverses(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    let forward = sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(f.clone()), &birkhoff_it(&birkhoff_ord(f)));
        out.check_maps(&[f], &Ok(birkhoff_ord(f)), &birkhoff_via_hom(f));
        out
    });
    let pointed = all_maps(Tag::OrdIt, bound + 1);
    let backward = sweep(&pointed, |g| {
        let mut out = Outcome::default();
        out.check_maps(
            &[g],
            &Ok(g.clone()),
            &birkhoff_it(g).map(|f| birkhoff_ord(&f)),
        );
        out
    });
    let mut out = forward.merge(backward);
    for n in 0..=bound {
        let homs = enumerate_hom(n, 2, Tag::Ord).expect("valid").len();
        let label = format!("|Hom({n}, dyad)|");
        out.check(&[&label], &(n + 1).to_string(), &homs.to_string());
    }
    out
}

/// The duality squares through the max-preserving category: forgetting the
/// Birkhoff image equals dualizing the top-adjoined map, and bottom-adjoining
/// the dual equals the Birkhoff image of the underlying map.
fn suite_duality_squares(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    let left = sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(birkhoff_ord(f)), &dual_t(&adjoin_top(f)));
        out
    });
    let t_maps = all_maps(Tag::OrdT, bound);
    let right = sweep(&t_maps, |g| {
        let mut out = Outcome::default();
        out.check_maps(
            &[g],
            &Ok(birkhoff_ord(g)),
            &dual_t(g).and_then(|d| adjoin_bottom_t(&d)),
        );
        out
    });
    left.merge(right)
}

/// Both factorizations of the Birkhoff functor through the one-endpoint
/// categories have the same underlying map.
fn suite_forgetful_triangle(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    sweep(&plain, |f| {
        let mut out = Outcome::default();
        let via_top = dual_t(&adjoin_top(f));
        let via_bottom = dual_i(&adjoin_bottom(f));
        out.check_maps(&[f], &via_top, &via_bottom);
        out.check_maps(&[f], &via_top, &Ok(birkhoff_ord(f)));
        out
    })
}

/// The Galois inequalities characterizing the adjoint maps, on every
/// element pair, plus the two round trips.
fn suite_galois(bound: usize) -> Outcome {
    let t_maps = all_maps(Tag::OrdT, bound);
    let left = sweep(&t_maps, |f| {
        let mut out = Outcome::default();
        let g = lad(f).expect("max-preserving");
        let galois = (0..f.dst().size())
            .all(|j| (0..f.src().size()).all(|x| (g.apply(j) <= x) == (j <= f.apply(x))));
        out.check_bool(&[f], galois && g.is_member(Tag::OrdI), "left Galois law");
        out.check_maps(&[f], &Ok(f.clone()), &rad(&g));
        out
    });
    let i_maps = all_maps(Tag::OrdI, bound);
    let right = sweep(&i_maps, |f| {
        let mut out = Outcome::default();
        let g = rad(f).expect("min-preserving");
        let galois = (0..f.dst().size())
            .all(|j| (0..f.src().size()).all(|x| (x <= g.apply(j)) == (f.apply(x) <= j)));
        out.check_bool(&[f], galois && g.is_member(Tag::OrdT), "right Galois law");
        out.check_maps(&[f], &Ok(f.clone()), &lad(&g));
        out
    });
    left.merge(right)
}

/// The dualities decompose through `op` and the adjoints, agree with the
/// hom-poset description, and the right adjoint takes the pinned value at
/// the minimum.
fn suite_adjoint_description(bound: usize) -> Outcome {
    let t_maps = all_maps(Tag::OrdT, bound);
    let top = sweep(&t_maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &dual_t(f), &lad(f).map(|g| g.op()));
        out.check_maps(&[f], &dual_t(f), &dual_t_via_hom(f));
        out
    });
    let i_maps = all_maps(Tag::OrdI, bound);
    let bottom = sweep(&i_maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &dual_i(f), &rad(f).map(|g| g.op()));
        out.check_maps(&[f], &dual_i(f), &dual_i_via_hom(f));
        let pinned = (0..f.src().size()).rev().find(|&x| f.apply(x) == 0);
        out.check(
            &[f],
            &pinned.expect("min-preserving maps hit zero").to_string(),
            &rad(f).expect("min-preserving").apply(0).to_string(),
        );
        out
    });
    top.merge(bottom)
}

/// The outer square of the two adjoint factorizations commutes after
/// forgetting down to the plain category.
fn suite_adjoint_square(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &lad(&adjoin_top(f)), &rad(&adjoin_bottom(f)));
        out
    })
}

/// The cut functor factors through both adjoints.
fn suite_bracket_factorizations(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(bracket(f)), &lad(&adjoin_top(f)));
        out.check_maps(&[f], &Ok(bracket(f)), &rad(&adjoin_bottom(f)));
        out
    })
}

/// The Birkhoff functor is the cut functor conjugated by `op`, on both
/// sides.
fn suite_birkhoff_bracket_op(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(birkhoff_ord(f)), &Ok(bracket(f).op()));
        out.check_maps(&[f], &Ok(birkhoff_ord(f)), &Ok(bracket(&f.op())));
        out
    })
}

/// The `op`-mirrored duality squares, through the min-preserving category.
fn suite_duality_squares_mirrored(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    let left = sweep(&plain, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(birkhoff_ord(f)), &dual_i(&adjoin_bottom(f)));
        out
    });
    let i_maps = all_maps(Tag::OrdI, bound);
    let right = sweep(&i_maps, |g| {
        let mut out = Outcome::default();
        out.check_maps(
            &[g],
            &Ok(birkhoff_ord(g)),
            &dual_i(g).and_then(|d| adjoin_top_i(&d)),
        );
        out
    });
    left.merge(right)
}

/// Monoid laws for the ordinal sum: units, binary associativity, agreement
/// of the indexed and iterated-binary forms, and exact fiber reconstruction.
fn suite_monoid_osum(bound: usize) -> Outcome {
    let maps = all_maps(Tag::Ord, bound);
    let id0 = MonMap::identity(0);
    let units = sweep(&maps, |f| {
        let mut out = Outcome::default();
        out.check_maps(&[f], &Ok(f.clone()), &Ok(osum2_map(&id0, f)));
        out.check_maps(&[f], &Ok(f.clone()), &Ok(osum2_map(f, &id0)));
        out
    });
    let assoc = sweep(&maps, |f| {
        let mut out = Outcome::default();
        for g in &maps {
            for h in &maps {
                out.check_maps(
                    &[f, g, h],
                    &Ok(osum2_map(&osum2_map(f, g), h)),
                    &Ok(osum2_map(f, &osum2_map(g, h))),
                );
            }
        }
        out
    });
    let small = all_maps(Tag::Ord, bound.saturating_sub(1).min(3));
    let nary = sweep(&small, |f| {
        let mut out = Outcome::default();
        for g in &small {
            for h in &small {
                let family =
                    IndexedFamily::new(3, vec![f.clone(), g.clone(), h.clone()]).expect("three");
                out.check_maps(
                    &[f, g, h],
                    &Ok(osum2_map(&osum2_map(f, g), h)),
                    &Ok(osum_map(&family)),
                );
            }
        }
        out
    });
    let mut fibers = Outcome::default();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let sizes = [a, b, c];
                let family = IndexedFamily::new(
                    3,
                    sizes.iter().map(|&s| FinOrd::new(s)).collect::<Vec<_>>(),
                )
                .expect("three");
                let fib = osum(&family);
                let reconstructed: Vec<usize> = (0..3)
                    .map(|i| fib.fiber(i).expect("in range").size())
                    .collect();
                let label = format!("fibers of {a}+{b}+{c}");
                fibers.check(
                    &[&label],
                    &format!("{sizes:?}"),
                    &format!("{reconstructed:?}"),
                );
            }
        }
    }
    units.merge(assoc).merge(nary).merge(fibers)
}

/// Monoid laws for the interval join, its agreement with the duality
/// transport of the ordinal sum, and the gluing closed form.
fn suite_monoid_sigma(bound: usize) -> Outcome {
    let maps = all_maps(Tag::OrdIt, bound);
    let id1 = MonMap::identity(1);
    let units = sweep(&maps, |u| {
        let mut out = Outcome::default();
        out.check_maps(&[u], &Ok(u.clone()), &join_it2_map(&id1, u));
        out.check_maps(&[u], &Ok(u.clone()), &join_it2_map(u, &id1));
        out
    });
    let assoc = sweep(&maps, |u| {
        let mut out = Outcome::default();
        for v in &maps {
            for w in &maps {
                let lhs = join_it2_map(u, v).and_then(|uv| join_it2_map(&uv, w));
                let rhs = join_it2_map(v, w).and_then(|vw| join_it2_map(u, &vw));
                out.check_maps(&[u, v, w], &lhs, &rhs);
            }
        }
        out
    });
    let closed = sweep(&maps, |u| {
        let mut out = Outcome::default();
        for v in &maps {
            out.check_maps(&[u, v], &join_it2_map(u, v), &join_it2_glued(u, v));
        }
        out
    });
    let plain = all_maps(Tag::Ord, bound.saturating_sub(1));
    let transport = sweep(&plain, |f| {
        let mut out = Outcome::default();
        for g in &plain {
            out.check_maps(
                &[f, g],
                &join_it2_map(&birkhoff_ord(f), &birkhoff_ord(g)),
                &Ok(birkhoff_ord(&osum2_map(g, f))),
            );
        }
        out
    });
    let small = all_maps(Tag::OrdIt, bound.min(3));
    let nary = sweep(&small, |u| {
        let mut out = Outcome::default();
        for v in &small {
            for w in &small {
                let family =
                    IndexedFamily::new(3, vec![u.clone(), v.clone(), w.clone()]).expect("three");
                let binary = join_it2_map(u, v).and_then(|uv| join_it2_map(&uv, w));
                out.check_maps(&[u, v, w], &binary, &join_it_map(&family));
            }
        }
        out
    });
    units
        .merge(assoc)
        .merge(closed)
        .merge(transport)
        .merge(nary)
}

/// Unit and associativity laws for all four module actions, with the
/// interval-join actions associating in the order fixed by the transport.
fn suite_module_actions(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    let t_maps = all_maps(Tag::OrdT, bound);
    let i_maps = all_maps(Tag::OrdI, bound);
    let it_maps = all_maps(Tag::OrdIt, bound);
    let id0 = MonMap::identity(0);
    let id1 = MonMap::identity(1);

    let units_t = sweep(&t_maps, |x| {
        let mut out = Outcome::default();
        out.check_maps(&[x], &Ok(x.clone()), &act_cov_t(&id0, x));
        out.check_maps(&[x], &Ok(x.clone()), &sigma_act_t(&id1, x));
        out
    });
    let units_i = sweep(&i_maps, |x| {
        let mut out = Outcome::default();
        out.check_maps(&[x], &Ok(x.clone()), &act_contra_i(x, &id0));
        out.check_maps(&[x], &Ok(x.clone()), &sigma_act_i(x, &id1));
        out
    });
    let assoc_cov = sweep(&plain, |a| {
        let mut out = Outcome::default();
        for b in &plain {
            for x in &t_maps {
                out.check_maps(
                    &[a, b, x],
                    &act_cov_t(&osum2_map(a, b), x),
                    &act_cov_t(b, x).and_then(|bx| act_cov_t(a, &bx)),
                );
            }
        }
        out
    });
    let assoc_contra = sweep(&plain, |a| {
        let mut out = Outcome::default();
        for b in &plain {
            for x in &i_maps {
                out.check_maps(
                    &[x, a, b],
                    &act_contra_i(x, &osum2_map(a, b)),
                    &act_contra_i(x, a).and_then(|xa| act_contra_i(&xa, b)),
                );
            }
        }
        out
    });
    let assoc_sigma_t = sweep(&it_maps, |j| {
        let mut out = Outcome::default();
        for k in &it_maps {
            for x in &t_maps {
                out.check_maps(
                    &[j, k, x],
                    &join_it2_map(j, k).and_then(|jk| sigma_act_t(&jk, x)),
                    &sigma_act_t(j, x).and_then(|jx| sigma_act_t(k, &jx)),
                );
            }
        }
        out
    });
    let assoc_sigma_i = sweep(&it_maps, |j| {
        let mut out = Outcome::default();
        for k in &it_maps {
            for x in &i_maps {
                out.check_maps(
                    &[x, j, k],
                    &join_it2_map(j, k).and_then(|jk| sigma_act_i(x, &jk)),
                    &sigma_act_i(x, k).and_then(|xk| sigma_act_i(&xk, j)),
                );
            }
        }
        out
    });
    units_t
        .merge(units_i)
        .merge(assoc_cov)
        .merge(assoc_contra)
        .merge(assoc_sigma_t)
        .merge(assoc_sigma_i)
}

/// Adjoining a bottom is strictly linear over the contravariant action,
/// and the comparison witness closes the unit triangle.
fn suite_bottom_linearity(bound: usize) -> Outcome {
    let maps = all_maps(Tag::Ord, bound);
    let morphisms = sweep(&maps, |f| {
        let mut out = Outcome::default();
        for g in &maps {
            out.check_maps(
                &[f, g],
                &Ok(adjoin_bottom(&osum2_map(f, g))),
                &Ok(osum2_map(&adjoin_bottom(f), g)),
            );
        }
        out
    });
    let mut triangles = Outcome::default();
    for x in 0..=bound {
        for a in 0..=bound {
            let x = FinOrd::new(x);
            let a = FinOrd::new(a);
            let witness = linearity_witness_i(x, a);
            let label = format!("triangle at ({x}, {a})");
            triangles.check_maps(
                &[&label],
                &unit_bottom(osum2(x, a)).then(&witness),
                &Ok(osum2_map(&unit_bottom(x), &MonMap::identity(a))),
            );
        }
    }
    morphisms.merge(triangles)
}

/// The `op`-mirror: adjoining a top is strictly linear over the covariant
/// action.
fn suite_top_linearity(bound: usize) -> Outcome {
    let maps = all_maps(Tag::Ord, bound);
    let morphisms = sweep(&maps, |f| {
        let mut out = Outcome::default();
        for g in &maps {
            out.check_maps(
                &[g, f],
                &Ok(adjoin_top(&osum2_map(g, f))),
                &Ok(osum2_map(g, &adjoin_top(f))),
            );
        }
        out
    });
    let mut triangles = Outcome::default();
    for a in 0..=bound {
        for x in 0..=bound {
            let a = FinOrd::new(a);
            let x = FinOrd::new(x);
            let witness = linearity_witness_t(a, x);
            let label = format!("triangle at ({a}, {x})");
            triangles.check_maps(
                &[&label],
                &unit_top(osum2(a, x)).then(&witness),
                &Ok(osum2_map(&MonMap::identity(a), &unit_top(x))),
            );
        }
    }
    morphisms.merge(triangles)
}

/// Both forgetful projections of the pairing agree with the corresponding
/// actions.
fn suite_pairing_projections(bound: usize) -> Outcome {
    let i_maps = all_maps(Tag::OrdI, bound);
    let t_maps = all_maps(Tag::OrdT, bound);
    sweep(&i_maps, |x| {
        let mut out = Outcome::default();
        for y in &t_maps {
            let paired = pair_it(x, y);
            out.check_maps(&[x, y], &paired, &act_contra_i(x, y));
            out.check_maps(&[x, y], &paired, &act_cov_t(x, y));
        }
        out
    })
}

/// The pairing coequalizes the two scalar actions.
fn suite_balanced_pairing(bound: usize) -> Outcome {
    let i_maps = all_maps(Tag::OrdI, bound);
    let plain = all_maps(Tag::Ord, bound);
    let t_maps = all_maps(Tag::OrdT, bound);
    sweep(&i_maps, |x| {
        let mut out = Outcome::default();
        for a in &plain {
            for y in &t_maps {
                out.check_maps(
                    &[x, a, y],
                    &act_contra_i(x, a).and_then(|xa| pair_it(&xa, y)),
                    &act_cov_t(a, y).and_then(|ay| pair_it(x, &ay)),
                );
            }
        }
        out
    })
}

/// The ordinal-sum and interval-join actions on each one-endpoint category
/// commute.
fn suite_commuting_actions(bound: usize) -> Outcome {
    let plain = all_maps(Tag::Ord, bound);
    let it_maps = all_maps(Tag::OrdIt, bound);
    let t_maps = all_maps(Tag::OrdT, bound);
    let i_maps = all_maps(Tag::OrdI, bound);
    let top = sweep(&plain, |a| {
        let mut out = Outcome::default();
        for j in &it_maps {
            for x in &t_maps {
                out.check_maps(
                    &[a, j, x],
                    &sigma_act_t(j, x).and_then(|jx| act_cov_t(a, &jx)),
                    &act_cov_t(a, x).and_then(|ax| sigma_act_t(j, &ax)),
                );
            }
        }
        out
    });
    let bottom = sweep(&plain, |a| {
        let mut out = Outcome::default();
        for j in &it_maps {
            for x in &i_maps {
                out.check_maps(
                    &[x, j, a],
                    &sigma_act_i(x, j).and_then(|xj| act_contra_i(&xj, a)),
                    &act_contra_i(x, a).and_then(|xa| sigma_act_i(&xa, j)),
                );
            }
        }
        out
    });
    top.merge(bottom)
}

/// The pairing intertwines the interval-join actions on its arguments with
/// the join on its output.
fn suite_pairing_bilinearity(bound: usize) -> Outcome {
    let i_maps = all_maps(Tag::OrdI, bound);
    let it_maps = all_maps(Tag::OrdIt, bound);
    let t_maps = all_maps(Tag::OrdT, bound);
    sweep(&i_maps, |x| {
        let mut out = Outcome::default();
        for j in &it_maps {
            for y in &t_maps {
                out.check_maps(
                    &[x, j, y],
                    &sigma_act_i(x, j).and_then(|xj| pair_it(&xj, y)),
                    &pair_it(x, y).and_then(|xy| join_it2_map(j, &xy)),
                );
                out.check_maps(
                    &[x, j, y],
                    &sigma_act_t(j, y).and_then(|jy| pair_it(x, &jy)),
                    &pair_it(x, y).and_then(|xy| join_it2_map(&xy, j)),
                );
            }
        }
        out
    })
}

/// The zero-object identities of both pairings hold exactly, and pairing
/// with any fixed identity separates distinct parallel maps.
fn suite_perfectness(bound: usize) -> Outcome {
    let id1 = MonMap::identity(1);
    let t_maps = all_maps(Tag::OrdT, bound);
    let i_maps = all_maps(Tag::OrdI, bound);
    let zero_t = sweep(&t_maps, |y| {
        let mut out = Outcome::default();
        out.check_maps(&[y], &adjoin_bottom_t(y), &pair_it(&id1, y));
        out.check_maps(&[y], &Ok(y.clone()), &sigma_pair(&id1, y));
        out
    });
    let zero_i = sweep(&i_maps, |x| {
        let mut out = Outcome::default();
        out.check_maps(&[x], &adjoin_top_i(x), &pair_it(x, &id1));
        out.check_maps(&[x], &Ok(x.clone()), &sigma_pair(x, &id1));
        out
    });
    let separation = sweep(&t_maps, |f| {
        let mut out = Outcome::default();
        for g in &t_maps {
            if f.src() != g.src() || f.dst() != g.dst() || f == g {
                continue;
            }
            let witness = separation_witness(f, g, bound).expect("parallel and distinct");
            out.check(
                &[f, g],
                "separated by the one-point order",
                &match witness {
                    Some(z) if z == FinOrd::PT => "separated by the one-point order".to_string(),
                    Some(z) => format!("separated only by size {z}"),
                    None => "not separated".to_string(),
                },
            );
            // the curried functor is faithful at every component
            let everywhere = (1..=bound).all(|z| {
                let id = MonMap::identity(z);
                pair_it(&id, f).expect("valid") != pair_it(&id, g).expect("valid")
            });
            out.check_bool(&[f, g], everywhere, "distinct at every component");
        }
        out
    });
    zero_t.merge(zero_i).merge(separation)
}

/// Coalgebra census for the bottom-adjoining comonad: none on the point,
/// exactly one elsewhere, and coalgebra morphisms biject with
/// max-preserving maps of the bottom-stripped carriers.
fn suite_coalgebras(bound: usize) -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=bound {
        let coalgebras = enumerate_coalgebras(n).expect("non-empty carrier");
        let expected = usize::from(n >= 2);
        let label = format!("carrier {n}");
        out.check(
            &[&label],
            &format!("{expected} structure(s)"),
            &format!("{} structure(s)", coalgebras.len()),
        );
    }
    for n in 2..=bound {
        for m in 2..=bound {
            let a = enumerate_coalgebras(n).expect("non-empty")[0].clone();
            let b = enumerate_coalgebras(m).expect("non-empty")[0].clone();
            let morphisms = coalgebra_morphisms(&a, &b);
            let expected = hom_count(n - 1, m - 1, Tag::OrdT);
            let label = format!("coalgebra maps {n} -> {m}");
            out.check(
                &[&label],
                &expected.to_string(),
                &morphisms.len().to_string(),
            );
            // each morphism is the bottom-adjoined image of its strip
            let all_adjoined = morphisms.iter().all(|h| {
                h.apply(0) == 0
                    && (1..h.src().size()).all(|x| h.apply(x) >= 1)
                    && MonMap::new(
                        h.src().size() - 1,
                        h.dst().size() - 1,
                        (1..h.src().size())
                            .map(|x| h.apply(x) - 1)
                            .collect::<Vec<_>>(),
                    )
                    .map(|strip| adjoin_bottom_t(&strip) == Ok(h.clone()))
                    .unwrap_or(false)
            });
            out.check_bool(&[&label], all_adjoined, "morphisms strip to the free image");
        }
    }
    out
}

/// Post-composes a functor with the order-reversal on its target.
pub fn op_after(f: &Functor) -> Functor {
    f.then(&op_functor(f.dst()))
}

/// Post-composes a functor with a forgetful functor into a weaker tag.
pub fn forget_after(f: &Functor, dst: Tag) -> Functor {
    f.then(&forget_functor(f.dst(), dst))
}
