//! The dualities and free functors between the four categories.
//!
//! Everything here is pinned to one convention and derived from it:
//!
//! * [`lad`] / [`rad`] send a map to its left / right adjoint in the
//!   Galois-connection sense — `min {x : f(x) ≥ j}` and `max {x : f(x) ≤ j}`.
//! * [`bracket`] sends an order to its order of cuts; element `k` of the
//!   cut order counts how many inputs fall strictly below the cut.
//! * [`dual_t`]` = op ∘ lad`, [`dual_i`]` = op ∘ rad`, and the Birkhoff
//!   functor [`birkhoff_ord`]` = op ∘ bracket`, with [`birkhoff_it`] the
//!   forced inverse.
//!
//! With that single orientation every square relating the functors commutes
//! as a strict equality of morphism data; the `laws` module checks each one
//! exhaustively. An independent route to the same dualities — precomposition
//! on the enumerated hom posets into the dyad — is provided by
//! [`dual_t_via_hom`], [`dual_i_via_hom`] and [`birkhoff_via_hom`] and kept
//! separate from the closed formulas so the two can be compared.

use std::fmt;
use std::sync::Arc;

use crate::core::{Error, FinOrd, MonMap, Tag};

/// Left adjoint of a max-preserving map: `j ↦ min {x : f(x) ≥ j}`.
///
/// Contravariant and identity on objects; the result preserves the minimal
/// element. Satisfies `lad(f)(j) ≤ x ⇔ j ≤ f(x)`.
pub fn lad(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdT)?;
    let values = (0..f.dst().size())
        .map(|j| {
            (0..f.src().size())
                .find(|&x| f.apply(x) >= j)
                .expect("a max-preserving map attains every lower bound")
        })
        .collect();
    MonMap::new(f.dst(), f.src(), values)
}

/// Right adjoint of a min-preserving map: `j ↦ max {x : f(x) ≤ j}`.
///
/// Satisfies `x ≤ rad(f)(j) ⇔ f(x) ≤ j`; the result preserves the maximal
/// element. Mutually inverse with [`lad`].
pub fn rad(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdI)?;
    let values = (0..f.dst().size())
        .map(|j| {
            (0..f.src().size())
                .rev()
                .find(|&x| f.apply(x) <= j)
                .expect("a min-preserving map attains every upper bound")
        })
        .collect();
    MonMap::new(f.dst(), f.src(), values)
}

/// The self-duality of the max-preserving category: `op ∘ lad`.
pub fn dual_t(f: &MonMap) -> Result<MonMap, Error> {
    Ok(lad(f)?.op())
}

/// The self-duality of the min-preserving category: `op ∘ rad`.
pub fn dual_i(f: &MonMap) -> Result<MonMap, Error> {
    Ok(rad(f)?.op())
}

/// Adjoins a new top element: `n ↦ n+1`, values extended by the new top.
///
/// Left adjoint to the forgetful functor out of the max-preserving
/// category; the unit is the index-preserving inclusion.
pub fn adjoin_top(f: &MonMap) -> MonMap {
    let mut values: Vec<usize> = f.values().to_vec();
    values.push(f.dst().size());
    MonMap::new(f.src().size() + 1, f.dst().size() + 1, values)
        .expect("appending the new top preserves monotonicity")
}

/// Adjoins a new bottom element: `n ↦ n+1`, values shifted up by one.
pub fn adjoin_bottom(f: &MonMap) -> MonMap {
    let mut values = vec![0usize];
    values.extend(f.values().iter().map(|&v| v + 1));
    MonMap::new(f.src().size() + 1, f.dst().size() + 1, values)
        .expect("prepending the new bottom preserves monotonicity")
}

/// [`adjoin_bottom`] restricted to max-preserving maps; lands in the
/// two-endpoint category.
pub fn adjoin_bottom_t(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdT)?;
    let out = adjoin_bottom(f);
    debug_assert!(out.is_member(Tag::OrdIt));
    Ok(out)
}

/// [`adjoin_top`] restricted to min-preserving maps; lands in the
/// two-endpoint category.
pub fn adjoin_top_i(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdI)?;
    let out = adjoin_top(f);
    debug_assert!(out.is_member(Tag::OrdIt));
    Ok(out)
}

/// The cut functor: `n ↦ n+1` on objects, and for `f : m -> n` the
/// contravariant map `(n+1) -> (m+1)` given by `k ↦ |{x : f(x) < k}|`.
///
/// Equal to `lad ∘ adjoin_top` and to `rad ∘ adjoin_bottom`.
pub fn bracket(f: &MonMap) -> MonMap {
    let values = (0..=f.dst().size())
        .map(|k| f.values().iter().filter(|&&v| v < k).count())
        .collect();
    let out = MonMap::new(f.dst().size() + 1, f.src().size() + 1, values)
        .expect("cut counts are monotone in the cut");
    debug_assert!(out.is_member(Tag::OrdIt));
    out
}

/// Inverse of [`bracket`]: recovers `f` from its cut map.
fn bracket_inv(g: &MonMap) -> Result<MonMap, Error> {
    g.require_member(Tag::OrdIt)?;
    let n = g.src().size() - 1;
    let m = g.dst().size() - 1;
    let values = (0..m)
        .map(|x| (1..=n).filter(|&k| g.apply(k) <= x).count())
        .collect();
    MonMap::new(m, n, values)
}

/// The Birkhoff duality functor on the plain category: `op ∘ bracket`,
/// concretely `k ↦ |{x : f(x) ≥ n-k}|` for `f : m -> n`.
pub fn birkhoff_ord(f: &MonMap) -> MonMap {
    let n = f.dst().size();
    let values = (0..=n)
        .map(|k| f.values().iter().filter(|&&v| v + k >= n).count())
        .collect();
    let out = MonMap::new(n + 1, f.src().size() + 1, values)
        .expect("tail counts are monotone in the cut");
    debug_assert!(out.is_member(Tag::OrdIt));
    out
}

/// The inverse Birkhoff functor, `m ↦ m-1` on objects; the two-sided
/// inverse of [`birkhoff_ord`], realized as `bracket⁻¹ ∘ op`.
pub fn birkhoff_it(g: &MonMap) -> Result<MonMap, Error> {
    g.require_member(Tag::OrdIt)?;
    bracket_inv(&g.op())
}

/// The self-duality computed through the hom poset into the dyad instead of
/// through the adjoint formula: element `e` of the dual order stands for the
/// max-preserving map with threshold `|J|-1-e`, and a morphism acts by
/// precomposition.
///
/// Kept independent of [`dual_t`] so the two routes can be compared.
pub fn dual_t_via_hom(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdT)?;
    let p = f.dst().size();
    let q = f.src().size();
    let values = (0..p)
        .map(|e| {
            let h = dyad_map_t(p, p - 1 - e);
            let composite = f.then(&h).expect("sizes agree");
            q - 1 - composite.threshold().expect("lands in the dyad")
        })
        .collect();
    MonMap::new(p, q, values)
}

/// Hom-route version of [`dual_i`]; element `e` stands for the
/// min-preserving map with threshold `|J|-e`.
pub fn dual_i_via_hom(f: &MonMap) -> Result<MonMap, Error> {
    f.require_member(Tag::OrdI)?;
    let p = f.dst().size();
    let q = f.src().size();
    let values = (0..p)
        .map(|e| {
            let h = dyad_map(p, p - e);
            let composite = f.then(&h).expect("sizes agree");
            q - composite.threshold().expect("lands in the dyad")
        })
        .collect();
    MonMap::new(p, q, values)
}

/// Hom-route version of [`birkhoff_ord`]; element `e` stands for the
/// unconstrained map with threshold `|J|-e`.
pub fn birkhoff_via_hom(f: &MonMap) -> Result<MonMap, Error> {
    let p = f.dst().size();
    let q = f.src().size();
    let values = (0..=p)
        .map(|e| {
            let h = dyad_map(p, p - e);
            let composite = f.then(&h).expect("sizes agree");
            q - composite.threshold().expect("lands in the dyad")
        })
        .collect();
    MonMap::new(p + 1, q + 1, values)
}

/// The map `n -> 2` sending exactly the first `threshold` elements to 0.
fn dyad_map(n: usize, threshold: usize) -> MonMap {
    let values = (0..n).map(|x| usize::from(x >= threshold)).collect();
    MonMap::new(n, 2, values).expect("a step function is monotone")
}

/// As [`dyad_map`], bounds-checked to stay max-preserving.
fn dyad_map_t(n: usize, threshold: usize) -> MonMap {
    debug_assert!(threshold < n);
    dyad_map(n, threshold)
}

/// Covariant or contravariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    fn compose(self, other: Variance) -> Variance {
        if self == other {
            Variance::Covariant
        } else {
            Variance::Contravariant
        }
    }
}

impl fmt::Display for Variance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        })
    }
}

type ObjMap = Arc<dyn Fn(usize) -> usize + Send + Sync>;
type MorMap = Arc<dyn Fn(&MonMap) -> Result<MonMap, Error> + Send + Sync>;

/// A functor between two of the tagged categories, as runtime data: an
/// object map on sizes and a morphism map, with a declared variance.
///
/// Used by the law checker to state functor laws and diagram equalities
/// uniformly, and by the CLI to dispatch `apply` by name.
#[derive(Clone)]
pub struct Functor {
    name: String,
    src: Tag,
    dst: Tag,
    variance: Variance,
    obj: ObjMap,
    mor: MorMap,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Functor({} : {} -> {}, {})",
            self.name, self.src, self.dst, self.variance
        )
    }
}

impl Functor {
    pub fn new(
        name: impl Into<String>,
        src: Tag,
        dst: Tag,
        variance: Variance,
        obj: impl Fn(usize) -> usize + Send + Sync + 'static,
        mor: impl Fn(&MonMap) -> Result<MonMap, Error> + Send + Sync + 'static,
    ) -> Functor {
        Functor {
            name: name.into(),
            src,
            dst,
            variance,
            obj: Arc::new(obj),
            mor: Arc::new(mor),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn src(&self) -> Tag {
        self.src
    }

    pub fn dst(&self) -> Tag {
        self.dst
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn obj(&self, n: FinOrd) -> FinOrd {
        FinOrd::new((self.obj)(n.size()))
    }

    pub fn mor(&self, f: &MonMap) -> Result<MonMap, Error> {
        (self.mor)(f)
    }

    pub fn signature(&self) -> String {
        format!("{} -> {} ({})", self.src, self.dst, self.variance)
    }

    /// Diagrammatic composite: apply `self` first, then `next`.
    pub fn then(&self, next: &Functor) -> Functor {
        let name = format!("{};{}", self.name, next.name);
        let first_obj = Arc::clone(&self.obj);
        let next_obj = Arc::clone(&next.obj);
        let first_mor = Arc::clone(&self.mor);
        let next_mor = Arc::clone(&next.mor);
        Functor {
            name,
            src: self.src,
            dst: next.dst,
            variance: self.variance.compose(next.variance),
            obj: Arc::new(move |n| next_obj(first_obj(n))),
            mor: Arc::new(move |f| next_mor(&first_mor(f)?)),
        }
    }

    /// Looks up a builtin by its CLI name.
    pub fn builtin(name: &str) -> Result<Functor, Error> {
        builtins()
            .into_iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFunctor(name.to_string()))
    }
}

/// The addressable functors, in a fixed order.
///
/// `op` is registered on the plain category where it is tag-preserving;
/// as a data operation it also exchanges the two pointed tags.
pub fn builtins() -> Vec<Functor> {
    use Tag::*;
    use Variance::*;
    vec![
        Functor::new("lad", OrdT, OrdI, Contravariant, |n| n, lad),
        Functor::new("rad", OrdI, OrdT, Contravariant, |n| n, rad),
        Functor::new("dualT", OrdT, OrdT, Contravariant, |n| n, dual_t),
        Functor::new("dualI", OrdI, OrdI, Contravariant, |n| n, dual_i),
        Functor::new(
            "B",
            Ord,
            OrdIt,
            Contravariant,
            |n| n + 1,
            |f| Ok(birkhoff_ord(f)),
        ),
        Functor::new("B-inv", OrdIt, Ord, Contravariant, |n| n - 1, birkhoff_it),
        Functor::new(
            "bracket",
            Ord,
            OrdIt,
            Contravariant,
            |n| n + 1,
            |f| Ok(bracket(f)),
        ),
        Functor::new("t", Ord, OrdT, Covariant, |n| n + 1, |f| Ok(adjoin_top(f))),
        Functor::new(
            "i",
            Ord,
            OrdI,
            Covariant,
            |n| n + 1,
            |f| Ok(adjoin_bottom(f)),
        ),
        Functor::new("iT", OrdT, OrdIt, Covariant, |n| n + 1, adjoin_bottom_t),
        Functor::new("tI", OrdI, OrdIt, Covariant, |n| n + 1, adjoin_top_i),
        Functor::new("op", Ord, Ord, Covariant, |n| n, |f| Ok(f.op())),
    ]
}

/// `op` with an explicit signature, for building composites whose middle
/// category is pointed.
pub(crate) fn op_functor(src: Tag) -> Functor {
    Functor::new(
        "op",
        src,
        src.opposite(),
        Variance::Covariant,
        |n| n,
        |f| Ok(f.op()),
    )
}

/// The forgetful functor from a tagged category into a weaker one.
pub(crate) fn forget_functor(src: Tag, dst: Tag) -> Functor {
    Functor::new(
        format!("forget[{src}->{dst}]"),
        src,
        dst,
        Variance::Covariant,
        |n| n,
        |f| Ok(f.clone()),
    )
}
