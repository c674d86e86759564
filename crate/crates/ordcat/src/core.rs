//! Skeletal finite total orders and the monotone maps between them.
//!
//! An object is just its size: the order with elements `0 < 1 < ... < n-1`.
//! A morphism is a weakly increasing value sequence. Four categories share
//! this data, distinguished only by which endpoints a map must preserve:
//!
//! * [`Tag::Ord`] — no constraint,
//! * [`Tag::OrdT`] — the maximal element maps to the maximal element,
//! * [`Tag::OrdI`] — the minimal element maps to the minimal element,
//! * [`Tag::OrdIt`] — both.
//!
//! Finite total orders are rigid (the only order-automorphism is the
//! identity), so working with one skeletal representative per size loses
//! nothing: every "canonical isomorphism" is an identity and all functor
//! identities in this crate hold as strict equalities of morphism data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Errors raised by the whole crate: malformed maps, tag violations and
/// lookups of unknown suites or functors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {got} values for a source of size {src}")]
    LengthMismatch { src: usize, got: usize },
    #[error("monotonicity violation at index {index}: {prev} > {next}")]
    NotMonotone {
        index: usize,
        prev: usize,
        next: usize,
    },
    #[error("range violation at index {index}: value {value} is not below the target size {dst}")]
    OutOfRange {
        index: usize,
        value: usize,
        dst: usize,
    },
    #[error("syntax error in map literal {literal:?}: {reason}")]
    Syntax { literal: String, reason: String },
    #[error("cannot compose: intermediate objects differ ({lhs_dst} vs {rhs_src})")]
    NotComposable { lhs_dst: usize, rhs_src: usize },
    #[error("map {map} is not a member of {tag}: {reason}")]
    NotMember {
        map: String,
        tag: Tag,
        reason: String,
    },
    #[error("{tag} has no empty objects (requested {src}->{dst})")]
    EmptyObject { tag: Tag, src: usize, dst: usize },
    #[error("maps are not parallel: {lhs} vs {rhs}")]
    NotParallel { lhs: String, rhs: String },
    #[error("target must be the two-element order, got size {dst}")]
    NotDyad { dst: usize },
    #[error("fiber index {index} out of range for a base of size {base}")]
    FiberIndex { index: usize, base: usize },
    #[error("family has {got} members for an index of size {index}")]
    FamilySize { index: usize, got: usize },
    #[error("unknown functor {0:?}")]
    UnknownFunctor(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("functor signatures differ: {lhs} vs {rhs}")]
    SignatureMismatch { lhs: String, rhs: String },
    #[error("separation requires distinct maps, got {0} twice")]
    EqualMaps(String),
}

/// A skeletal finite total order, represented by its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FinOrd(usize);

impl FinOrd {
    /// The empty order, unit of the ordinal sum.
    pub const EMPTY: FinOrd = FinOrd(0);
    /// The one-element order as the zero object of the pointed categories.
    pub const PT: FinOrd = FinOrd(1);
    /// The one-element order as the terminal monoid under ordinal sum.
    pub const UNIV: FinOrd = FinOrd(1);
    /// The two-element order; homming into it implements every duality here.
    pub const DYAD: FinOrd = FinOrd(2);

    pub const fn new(size: usize) -> FinOrd {
        FinOrd(size)
    }

    pub const fn size(self) -> usize {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for FinOrd {
    fn from(size: usize) -> FinOrd {
        FinOrd(size)
    }
}

impl fmt::Display for FinOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the four categories a map is regarded in.
///
/// Membership is a predicate on the map data; `MonMap` itself carries no tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    /// All monotone maps.
    Ord,
    /// Non-empty orders, maps preserving the maximal element.
    OrdT,
    /// Non-empty orders, maps preserving the minimal element.
    OrdI,
    /// Non-empty orders, maps preserving both endpoints.
    OrdIt,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::Ord, Tag::OrdT, Tag::OrdI, Tag::OrdIt];

    /// Whether objects of this category must be non-empty.
    pub const fn pointed(self) -> bool {
        !matches!(self, Tag::Ord)
    }

    /// The tag obtained by reversing all orders. Exchanges `OrdT` and `OrdI`.
    pub const fn opposite(self) -> Tag {
        match self {
            Tag::Ord => Tag::Ord,
            Tag::OrdT => Tag::OrdI,
            Tag::OrdI => Tag::OrdT,
            Tag::OrdIt => Tag::OrdIt,
        }
    }

    /// Stable lower-case name, used by the CLI and in reports.
    pub const fn name(self) -> &'static str {
        match self {
            Tag::Ord => "ord",
            Tag::OrdT => "ord-t",
            Tag::OrdI => "ord-i",
            Tag::OrdIt => "ord-it",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tag, Error> {
        match s {
            "ord" => Ok(Tag::Ord),
            "ord-t" | "t" => Ok(Tag::OrdT),
            "ord-i" | "i" => Ok(Tag::OrdI),
            "ord-it" | "it" => Ok(Tag::OrdIt),
            other => Err(Error::Syntax {
                literal: other.to_string(),
                reason: "expected one of ord, ord-t, ord-i, ord-it".to_string(),
            }),
        }
    }
}

/// A monotone map between skeletal finite total orders.
///
/// Stored as the source size, the target size and the weakly increasing
/// sequence of values. Values are validated on construction; every
/// `MonMap` in circulation is a genuine morphism of `Ord`.
///
/// The text form is `m->n:[v0 v1 ...]`, e.g. `3->2:[0 0 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonMap {
    src: FinOrd,
    dst: FinOrd,
    values: Vec<usize>,
}

impl MonMap {
    /// Validates length, monotonicity and range.
    pub fn new(
        src: impl Into<FinOrd>,
        dst: impl Into<FinOrd>,
        values: Vec<usize>,
    ) -> Result<MonMap, Error> {
        let src = src.into();
        let dst = dst.into();
        if values.len() != src.size() {
            return Err(Error::LengthMismatch {
                src: src.size(),
                got: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if value >= dst.size() {
                return Err(Error::OutOfRange {
                    index,
                    value,
                    dst: dst.size(),
                });
            }
            if index > 0 && values[index - 1] > value {
                return Err(Error::NotMonotone {
                    index,
                    prev: values[index - 1],
                    next: value,
                });
            }
        }
        Ok(MonMap { src, dst, values })
    }

    /// The identity map on `n`; a member of every tag applicable to `n`.
    pub fn identity(n: impl Into<FinOrd>) -> MonMap {
        let n = n.into();
        MonMap {
            src: n,
            dst: n,
            values: (0..n.size()).collect(),
        }
    }

    pub fn src(&self) -> FinOrd {
        self.src
    }

    pub fn dst(&self) -> FinOrd {
        self.dst
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.values.iter().enumerate().all(|(x, &v)| v == x)
    }

    /// Diagrammatic composition: `self` first, then `other`.
    pub fn then(&self, other: &MonMap) -> Result<MonMap, Error> {
        if self.dst != other.src {
            return Err(Error::NotComposable {
                lhs_dst: self.dst.size(),
                rhs_src: other.src.size(),
            });
        }
        Ok(MonMap {
            src: self.src,
            dst: other.dst,
            values: self.values.iter().map(|&v| other.values[v]).collect(),
        })
    }

    /// The same map between the reversed orders: `x ↦ (n-1) - f(m-1-x)`.
    ///
    /// Involutive; exchanges `OrdT` and `OrdI` membership and preserves the
    /// other two tags.
    pub fn op(&self) -> MonMap {
        if self.values.is_empty() {
            return self.clone();
        }
        let n = self.dst.size();
        let m = self.src.size();
        MonMap {
            src: self.src,
            dst: self.dst,
            values: (0..m).map(|x| n - 1 - self.values[m - 1 - x]).collect(),
        }
    }

    /// Decides membership under a tag.
    pub fn is_member(&self, tag: Tag) -> bool {
        let nonempty = !self.src.is_empty() && !self.dst.is_empty();
        let top = || self.values[self.src.size() - 1] == self.dst.size() - 1;
        let bottom = || self.values[0] == 0;
        match tag {
            Tag::Ord => true,
            Tag::OrdT => nonempty && top(),
            Tag::OrdI => nonempty && bottom(),
            Tag::OrdIt => nonempty && top() && bottom(),
        }
    }

    /// `Ok(self)` if the map is a member of `tag`, otherwise an error naming
    /// the endpoint predicate that failed.
    pub fn require_member(&self, tag: Tag) -> Result<&MonMap, Error> {
        if self.is_member(tag) {
            return Ok(self);
        }
        let reason = if self.src.is_empty() || self.dst.is_empty() {
            "objects must be non-empty".to_string()
        } else {
            let m = self.src.size();
            let n = self.dst.size();
            let top_ok = self.values[m - 1] == n - 1;
            let bottom_ok = self.values[0] == 0;
            match tag {
                Tag::Ord => unreachable!("every map is a member of ord"),
                Tag::OrdT => format!(
                    "maximal element not preserved (f({}) = {}, want {})",
                    m - 1,
                    self.values[m - 1],
                    n - 1
                ),
                Tag::OrdI => format!(
                    "minimal element not preserved (f(0) = {}, want 0)",
                    self.values[0]
                ),
                Tag::OrdIt => {
                    if !bottom_ok {
                        format!(
                            "minimal element not preserved (f(0) = {}, want 0)",
                            self.values[0]
                        )
                    } else if !top_ok {
                        format!(
                            "maximal element not preserved (f({}) = {}, want {})",
                            m - 1,
                            self.values[m - 1],
                            n - 1
                        )
                    } else {
                        unreachable!("both endpoints preserved")
                    }
                }
            }
        };
        Err(Error::NotMember {
            map: self.to_string(),
            tag,
            reason,
        })
    }

    /// Pointwise comparison on parallel maps: `f ≤ g` iff `f(x) ≤ g(x)` for
    /// all `x`. This is the order of the hom poset.
    pub fn pointwise_leq(&self, other: &MonMap) -> Result<bool, Error> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::NotParallel {
                lhs: self.to_string(),
                rhs: other.to_string(),
            });
        }
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// For a map into the two-element order, the size of the preimage of 0.
    ///
    /// Thresholds classify maps into the dyad: `f ≤ g` pointwise iff
    /// `threshold(f) ≥ threshold(g)`.
    pub fn threshold(&self) -> Result<usize, Error> {
        if self.dst != FinOrd::DYAD {
            return Err(Error::NotDyad {
                dst: self.dst.size(),
            });
        }
        Ok(self.values.iter().filter(|&&v| v == 0).count())
    }
}

impl fmt::Display for MonMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:[", self.src, self.dst)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for MonMap {
    type Err = Error;

    /// Parses the `m->n:[v0 v1 ...]` literal. Whitespace between values is
    /// arbitrary; everything else is rejected with a message naming the
    /// offending part.
    fn from_str(s: &str) -> Result<MonMap, Error> {
        let syntax = |reason: &str| Error::Syntax {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (sizes, body) = t.split_once(':').ok_or_else(|| syntax("missing ':'"))?;
        let (src, dst) = sizes
            .split_once("->")
            .ok_or_else(|| syntax("missing '->' between sizes"))?;
        let src: usize = src
            .trim()
            .parse()
            .map_err(|_| syntax("source size is not a natural number"))?;
        let dst: usize = dst
            .trim()
            .parse()
            .map_err(|_| syntax("target size is not a natural number"))?;
        let body = body.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| syntax("values must be enclosed in '[' ']'"))?;
        let mut values = Vec::new();
        for (index, tok) in inner.split_whitespace().enumerate() {
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(&format!("value at index {index} is not a natural number")))?;
            values.push(v);
        }
        MonMap::new(src, dst, values)
    }
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The number of tag-members `m -> n` by the stars-and-bars count.
///
/// The `counts` law suite checks these formulas against brute-force
/// enumeration rather than assuming them.
pub fn hom_count(m: usize, n: usize, tag: Tag) -> u64 {
    match tag {
        Tag::Ord => {
            if m == 0 {
                1
            } else if n == 0 {
                0
            } else {
                binomial(m + n - 1, m)
            }
        }
        Tag::OrdT | Tag::OrdI => {
            if m == 0 || n == 0 {
                0
            } else {
                binomial(m + n - 2, m - 1)
            }
        }
        Tag::OrdIt => {
            if m == 0 || n == 0 {
                0
            } else if m == 1 {
                u64::from(n == 1)
            } else {
                binomial(m + n - 3, m - 2)
            }
        }
    }
}

/// All weakly increasing sequences of length `m` with values below `n`,
/// in lexicographic order.
fn monotone_sequences(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    loop {
        out.push(cur.clone());
        // lexicographic successor: bump the last bumpable position and
        // level everything after it
        match (0..m).rev().find(|&i| cur[i] < n - 1) {
            Some(i) => {
                cur[i] += 1;
                let v = cur[i];
                for slot in cur.iter_mut().skip(i + 1) {
                    *slot = v;
                }
            }
            None => return out,
        }
    }
}

/// Enumerates the hom-set `m -> n` under a tag, in lexicographic order of
/// value sequences.
pub fn enumerate_hom(
    m: impl Into<FinOrd>,
    n: impl Into<FinOrd>,
    tag: Tag,
) -> Result<Vec<MonMap>, Error> {
    let m = m.into();
    let n = n.into();
    if tag.pointed() && (m.is_empty() || n.is_empty()) {
        return Err(Error::EmptyObject {
            tag,
            src: m.size(),
            dst: n.size(),
        });
    }
    Ok(monotone_sequences(m.size(), n.size())
        .into_iter()
        .map(|values| MonMap {
            src: m,
            dst: n,
            values,
        })
        .filter(|f| f.is_member(tag))
        .collect())
}

/// Every tag-member with both sizes at most `bound`, ordered by
/// `(src, dst, lex)`. The workhorse of the exhaustive law sweeps.
pub fn all_maps(tag: Tag, bound: usize) -> Vec<MonMap> {
    let lo = usize::from(tag.pointed());
    let mut out = Vec::new();
    for m in lo..=bound {
        for n in lo..=bound {
            out.extend(enumerate_hom(m, n, tag).expect("sizes are tag-valid"));
        }
    }
    out
}

/// An enumerated hom-set with its pointwise partial order.
#[derive(Debug, Clone)]
pub struct HomPoset {
    src: FinOrd,
    dst: FinOrd,
    tag: Tag,
    elements: Vec<MonMap>,
    /// Row-major `len × len` matrix of the pointwise order.
    leq: Vec<bool>,
}

impl HomPoset {
    pub fn src(&self) -> FinOrd {
        self.src
    }

    pub fn dst(&self) -> FinOrd {
        self.dst
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MonMap] {
        &self.elements
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    pub fn index_of(&self, f: &MonMap) -> Option<usize> {
        self.elements.iter().position(|g| g == f)
    }

    /// Whether the order is total.
    pub fn is_chain(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| (0..k).all(|j| self.leq(i, j) || self.leq(j, i)))
    }
}

/// Bundles [`enumerate_hom`] with the pointwise order.
pub fn hom_poset(m: impl Into<FinOrd>, n: impl Into<FinOrd>, tag: Tag) -> Result<HomPoset, Error> {
    let m = m.into();
    let n = n.into();
    let elements = enumerate_hom(m, n, tag)?;
    let k = elements.len();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            leq[i * k + j] = elements[i]
                .pointwise_leq(&elements[j])
                .expect("elements are parallel");
        }
    }
    Ok(HomPoset {
        src: m,
        dst: n,
        tag,
        elements,
        leq,
    })
}

/// All invertible endomaps of `n` under a tag. Rigidity of finite total
/// orders means this is always exactly the identity.
pub fn automorphisms(n: impl Into<FinOrd>, tag: Tag) -> Result<Vec<MonMap>, Error> {
    let n = n.into();
    let endos = enumerate_hom(n, n, tag)?;
    let id = MonMap::identity(n);
    Ok(endos
        .iter()
        .filter(|f| {
            endos.iter().any(|g| {
                f.then(g).expect("endos compose") == id && g.then(f).expect("endos compose") == id
            })
        })
        .cloned()
        .collect())
}
