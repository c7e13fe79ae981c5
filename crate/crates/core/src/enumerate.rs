//! Brute-force enumeration of the counted families.
//!
//! Everything here generates members one at a time by backtracking search
//! and counts what it actually saw; this is the ground truth the closed
//! forms in [`crate::closed_form`] are checked against, so nothing in this
//! module may consult those formulas. Search runs over values in
//! descending order: the membership conditions compare the minimum against
//! a function of the cardinality, and once a prefix violates that bound no
//! extension can repair it (the minimum only drops, the cardinality only
//! grows), so such branches are cut immediately.

use std::fmt;

use num_traits::{One, Zero};

use crate::{BigCount, Error};

/// Most members a single enumeration will list. Counting is not capped.
pub const LISTING_CAP: usize = 100_000;

/// Node limit for one enumeration. The guard compares the projected
/// search size from [`estimate_cost`] against this before starting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_nodes: BigCount,
}

impl EnumerationBudget {
    pub fn new(max_nodes: impl Into<BigCount>) -> Self {
        Self {
            max_nodes: max_nodes.into(),
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::new(100_000_000u64)
    }
}

/// Multiplicity caps for the B family: how many copies of each value the
/// universe offers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultSeq {
    /// The pointwise-minimal admissible sequence, floor((m-1)/u).
    Minimal,
    /// Every value available n times.
    Uniform,
    /// Caller-supplied caps, one per value 1..=n.
    Explicit(Vec<u64>),
}

/// Which family to enumerate. Variant letters match the names the CLI
/// exposes; each variant documents its membership condition. "min" and
/// "cardinality" count multiplicity in the multiset families A and B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Sub-multisets of {1..n} where each value below n is available s-1
    /// times and n once; members contain n and satisfy min >= cardinality.
    A { s: u64, n: u64 },
    /// Sub-multisets of {1..n} with caps from `caps`; members are empty or
    /// satisfy min >= u * cardinality + 1.
    B { u: u64, caps: MultSeq, n: u64 },
    /// Subsets of a labeled universe holding s-1 colored copies of each
    /// value below n plus one uncolored n; members contain n and satisfy
    /// min value >= cardinality. Same values in different colors are
    /// different members.
    C { s: u64, n: u64 },
    /// Subsets of {1..n} that are empty or contain max-1 and satisfy
    /// min >= cardinality.
    D { n: u64 },
    /// Subsets of {1..n} containing n with min > cardinality^p.
    S { p: u64, n: u64 },
    /// Subsets of {1..n} containing n with min >= cardinality^p.
    Ap { p: u64, n: u64 },
    /// Subsets of {1..n} that are empty or contain max-1 and satisfy
    /// min >= cardinality^p.
    Bp { p: u64, n: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), Error> {
        let (name, n) = match self {
            FamilySpec::A { s, n } | FamilySpec::C { s, n } => {
                if *s < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "family requires s >= 2, got {s}"
                    )));
                }
                ("A/C", *n)
            }
            FamilySpec::B { u, caps, n } => {
                if *u < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "family B requires u >= 2, got {u}"
                    )));
                }
                if let MultSeq::Explicit(list) = caps {
                    if list.len() as u64 != *n {
                        return Err(Error::InvalidSpec(format!(
                            "cap list has {} entries but n = {n}",
                            list.len()
                        )));
                    }
                    for (i, &cap) in list.iter().enumerate() {
                        let m = i as u64 + 1;
                        let need = (m - 1) / u;
                        if cap < need {
                            return Err(Error::InvalidSpec(format!(
                                "cap list inadmissible at position {m}: \
                                 needs at least {need}, got {cap}"
                            )));
                        }
                    }
                }
                ("B", *n)
            }
            FamilySpec::D { n } => ("D", *n),
            FamilySpec::S { p, n } | FamilySpec::Ap { p, n } | FamilySpec::Bp { p, n } => {
                if *p < 1 {
                    return Err(Error::InvalidSpec("family requires p >= 1".into()));
                }
                ("S/Ap/Bp", *n)
            }
        };
        if n < 1 {
            return Err(Error::InvalidSpec(format!(
                "family {name} requires n >= 1"
            )));
        }
        Ok(())
    }

    /// Universe caps for the multiset families, indexed by value - 1.
    fn multiset_caps(&self) -> Option<Vec<u64>> {
        match self {
            FamilySpec::A { s, n } => {
                let mut caps = vec![*s - 1; *n as usize - 1];
                caps.push(1);
                Some(caps)
            }
            FamilySpec::B { u, caps, n } => Some(match caps {
                MultSeq::Minimal => minimal_mult_seq(*u, *n),
                MultSeq::Uniform => vec![*n; *n as usize],
                MultSeq::Explicit(list) => list.clone(),
            }),
            _ => None,
        }
    }

    /// Size of the labeled universe for the subset families.
    fn labeled_size(&self) -> Option<u64> {
        match self {
            FamilySpec::C { s, n } => Some((n - 1) * (s - 1) + 1),
            FamilySpec::D { n }
            | FamilySpec::S { n, .. }
            | FamilySpec::Ap { n, .. }
            | FamilySpec::Bp { n, .. } => Some(*n),
            _ => None,
        }
    }
}

/// The pointwise-minimal admissible cap sequence for the B family:
/// floor((m-1)/u) copies of value m, for m = 1..=n.
pub fn minimal_mult_seq(u: u64, n: u64) -> Vec<u64> {
    (1..=n).map(|m| (m - 1) / u).collect()
}

/// Upper bound on search nodes: the product of (cap + 1) over the universe
/// for multiset families, 2^(universe size) for labeled ones. The budget
/// guard compares this before any enumeration starts.
pub fn estimate_cost(spec: &FamilySpec) -> Result<BigCount, Error> {
    spec.validate()?;
    if let Some(caps) = spec.multiset_caps() {
        let mut bound = BigCount::one();
        for cap in caps {
            bound *= BigCount::from(cap + 1);
        }
        return Ok(bound);
    }
    let size = spec.labeled_size().expect("spec is multiset or labeled");
    let size = usize::try_from(size)
        .map_err(|_| Error::InvalidSpec(format!("universe of {size} elements is unusable")))?;
    Ok(BigCount::one() << size)
}

/// One enumerated member in canonical form: element lists are sorted
/// ascending, so equal members compare equal and listings are stable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Member {
    /// (value, multiplicity) pairs; prints as `{2^1,4^2}`.
    Multiset(Vec<(u64, u64)>),
    /// Plain values; prints as `{2,3}`, the empty member as `{}`.
    Set(Vec<u64>),
    /// (value, color) pairs, color None for the uncolored top value;
    /// prints as `{2_1,4}`.
    Colored(Vec<(u64, Option<u64>)>),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { write!(f, ",") };
            first = false;
            r
        };
        match self {
            Member::Multiset(pairs) => {
                for (v, m) in pairs {
                    sep(f)?;
                    write!(f, "{v}^{m}")?;
                }
            }
            Member::Set(values) => {
                for v in values {
                    sep(f)?;
                    write!(f, "{v}")?;
                }
            }
            Member::Colored(pairs) => {
                for (v, color) in pairs {
                    sep(f)?;
                    match color {
                        Some(c) => write!(f, "{v}_{c}")?,
                        None => write!(f, "{v}")?,
                    }
                }
            }
        }
        write!(f, "}}")
    }
}

/// Result of one family enumeration. `members` is present only when
/// listing was requested, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEnumeration {
    pub count: BigCount,
    pub members: Option<Vec<Member>>,
}

/// cardinality^p, or None when it exceeds u128 (no u64 minimum can reach
/// such a bound, so callers treat None as "condition unsatisfiable").
fn pow_bound(card: u64, p: u64) -> Option<u128> {
    if card <= 1 {
        return Some(card as u128);
    }
    (card as u128).checked_pow(u32::try_from(p).ok()?)
}

struct Collector {
    listing: Option<Vec<Member>>,
    count: u128,
}

impl Collector {
    fn new(list_members: bool) -> Self {
        Self {
            listing: list_members.then(Vec::new),
            count: 0,
        }
    }

    fn record(&mut self, make: impl FnOnce() -> Member) -> Result<(), Error> {
        self.count += 1;
        if let Some(listing) = &mut self.listing {
            if listing.len() >= LISTING_CAP {
                return Err(Error::ListingCapExceeded { cap: LISTING_CAP });
            }
            listing.push(make());
        }
        Ok(())
    }

    fn finish(self) -> FamilyEnumeration {
        let members = self.listing.map(|mut listing| {
            listing.sort();
            listing
        });
        FamilyEnumeration {
            count: BigCount::from(self.count),
            members,
        }
    }
}

/// Backtracking over multiplicity vectors, highest value first. `admits`
/// judges a nonempty prefix by (min, cardinality) and must only get harder
/// as cardinality grows at fixed min; prefixes it rejects are dead because
/// extensions only lower the min and raise the cardinality further.
struct MultisetSearch<'a, F: Fn(u64, u64) -> bool> {
    caps: &'a [u64],
    admits: F,
    empty_is_member: bool,
    chosen: Vec<(u64, u64)>,
    out: Collector,
}

impl<F: Fn(u64, u64) -> bool> MultisetSearch<'_, F> {
    fn descend(&mut self, value: u64, card: u64) -> Result<(), Error> {
        if value == 0 {
            if card > 0 || self.empty_is_member {
                let chosen = &self.chosen;
                self.out
                    .record(|| Member::Multiset(chosen.iter().rev().copied().collect()))?;
            }
            return Ok(());
        }
        self.descend(value - 1, card)?;
        for mult in 1..=self.caps[value as usize - 1] {
            if !(self.admits)(value, card + mult) {
                break;
            }
            self.chosen.push((value, mult));
            self.descend(value - 1, card + mult)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Anchor {
    /// Family does not use the max-1 rule.
    Unused,
    /// Nothing chosen yet; the empty completion is a member.
    Empty,
    /// The element holding this value must be taken next.
    NeedPrev(u64),
    /// max and max-1 both present.
    Done,
}

/// Backtracking over labeled elements, descending by value. Same pruning
/// contract on `admits` as the multiset search.
struct LabeledSearch<'a, F: Fn(u64, u64) -> bool> {
    elements: &'a [(u64, Option<u64>)],
    admits: F,
    chosen: Vec<(u64, Option<u64>)>,
    out: Collector,
}

impl<F: Fn(u64, u64) -> bool> LabeledSearch<'_, F> {
    fn record_member(&mut self) -> Result<(), Error> {
        let chosen = &self.chosen;
        self.out.record(|| {
            let mut pairs: Vec<_> = chosen.clone();
            pairs.sort_unstable();
            Member::Colored(pairs)
        })
    }

    fn take(&mut self, idx: usize, card: u64, anchor: Anchor) -> Result<(), Error> {
        let (value, color) = self.elements[idx];
        if !(self.admits)(value, card + 1) {
            return Ok(());
        }
        self.chosen.push((value, color));
        self.descend(idx + 1, card + 1, anchor)?;
        self.chosen.pop();
        Ok(())
    }

    fn descend(&mut self, idx: usize, card: u64, anchor: Anchor) -> Result<(), Error> {
        if idx == self.elements.len() {
            // NeedPrev never reaches the end: taking value 1 first is cut
            // below, and otherwise the needed element is the very next one.
            return match anchor {
                Anchor::NeedPrev(_) => unreachable!("unresolved max-1 requirement"),
                _ => self.record_member(),
            };
        }
        let (value, _) = self.elements[idx];
        if let Anchor::NeedPrev(needed) = anchor {
            // max-1 must be in the member; skipping it is not an option.
            debug_assert_eq!(value, needed);
            return self.take(idx, card, Anchor::Done);
        }
        self.descend(idx + 1, card, anchor)?;
        match anchor {
            Anchor::Empty => {
                if value > 1 {
                    self.take(idx, card, Anchor::NeedPrev(value - 1))?;
                }
                // Taking value 1 as the first element can never produce a
                // member: its predecessor 0 is outside the universe.
            }
            _ => self.take(idx, card, anchor)?,
        }
        Ok(())
    }
}

fn labeled_members_to_sets(enumeration: FamilyEnumeration) -> FamilyEnumeration {
    let members = enumeration.members.map(|members| {
        members
            .into_iter()
            .map(|member| match member {
                Member::Colored(pairs) => Member::Set(pairs.into_iter().map(|(v, _)| v).collect()),
                other => other,
            })
            .collect()
    });
    FamilyEnumeration {
        members,
        ..enumeration
    }
}

/// Counts (and optionally lists) the members of `spec` by exhaustive
/// search. Fails up front when the projected search size exceeds the
/// budget, without enumerating anything.
pub fn enumerate_family(
    spec: &FamilySpec,
    budget: &EnumerationBudget,
    list_members: bool,
) -> Result<FamilyEnumeration, Error> {
    if budget.max_nodes.is_zero() {
        return Err(Error::InvalidSpec("budget must be positive".into()));
    }
    let projected = estimate_cost(spec)?;
    if projected > budget.max_nodes {
        return Err(Error::BudgetExceeded {
            projected,
            allowed: budget.max_nodes.clone(),
        });
    }

    let out = Collector::new(list_members);
    match spec {
        FamilySpec::A { n, .. } => {
            let caps = spec.multiset_caps().expect("A is a multiset family");
            let mut search = MultisetSearch {
                caps: &caps,
                admits: |min, card| min >= card,
                empty_is_member: false,
                chosen: Vec::new(),
                out,
            };
            // mult(n) = 1 is required, so fix it and search the rest.
            search.chosen.push((*n, 1));
            search.descend(*n - 1, 1)?;
            Ok(search.out.finish())
        }
        FamilySpec::B { u, n, .. } => {
            let caps = spec.multiset_caps().expect("B is a multiset family");
            let u = *u;
            let mut search = MultisetSearch {
                caps: &caps,
                admits: move |min, card| min as u128 > u as u128 * card as u128,
                empty_is_member: true,
                chosen: Vec::new(),
                out,
            };
            search.descend(*n, 0)?;
            Ok(search.out.finish())
        }
        FamilySpec::C { s, n } => {
            let mut elements = vec![(*n, None)];
            for value in (1..*n).rev() {
                elements.extend((1..*s).map(|color| (value, Some(color))));
            }
            let mut search = LabeledSearch {
                elements: &elements,
                admits: |min, card| min >= card,
                chosen: Vec::new(),
                out,
            };
            search.chosen.push((*n, None));
            search.descend(1, 1, Anchor::Unused)?;
            Ok(search.out.finish())
        }
        FamilySpec::D { n } => Ok(run_plain_subsets(*n, 1, false, false, out)?),
        FamilySpec::S { p, n } => Ok(run_plain_subsets(*n, *p, true, true, out)?),
        FamilySpec::Ap { p, n } => Ok(run_plain_subsets(*n, *p, true, false, out)?),
        FamilySpec::Bp { p, n } => Ok(run_plain_subsets(*n, *p, false, false, out)?),
    }
}

/// Shared search for the plain-subset families. `forced_top` families
/// contain n and have no max-1 rule; the others are anchored (empty or
/// max-1 present). `strict` switches min >= card^p to min > card^p.
fn run_plain_subsets(
    n: u64,
    p: u64,
    forced_top: bool,
    strict: bool,
    out: Collector,
) -> Result<FamilyEnumeration, Error> {
    let elements: Vec<(u64, Option<u64>)> = (1..=n).rev().map(|v| (v, None)).collect();
    let admits = move |min: u64, card: u64| match pow_bound(card, p) {
        Some(bound) if strict => min as u128 > bound,
        Some(bound) => min as u128 >= bound,
        None => false,
    };
    let mut search = LabeledSearch {
        elements: &elements,
        admits,
        chosen: Vec::new(),
        out,
    };
    if forced_top {
        search.take(0, 0, Anchor::Unused)?;
    } else {
        search.descend(0, 0, Anchor::Empty)?;
    }
    Ok(labeled_members_to_sets(search.out.finish()))
}

/// An ordered decomposition into parts; prints as `4+4+5`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<u64>,
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionEnumeration {
    pub count: BigCount,
    /// Present when listing was requested; ordered by length, then
    /// lexicographically.
    pub compositions: Option<Vec<Composition>>,
}

/// Walks compositions of `remaining` into `parts_left` parts, each at
/// least `lo`, in lexicographic order.
fn descend_parts(
    remaining: u64,
    parts_left: u64,
    lo: u64,
    stack: &mut Vec<u64>,
    count: &mut u128,
    listing: &mut Option<Vec<Composition>>,
) -> Result<(), Error> {
    if parts_left == 1 {
        if remaining >= lo {
            *count += 1;
            if let Some(listing) = listing {
                if listing.len() >= LISTING_CAP {
                    return Err(Error::ListingCapExceeded { cap: LISTING_CAP });
                }
                let mut parts = stack.clone();
                parts.push(remaining);
                listing.push(Composition { parts });
            }
        }
        return Ok(());
    }
    let reserve = (parts_left - 1) as u128 * lo as u128;
    let mut part = lo;
    while (part as u128) + reserve <= remaining as u128 {
        stack.push(part);
        descend_parts(remaining - part, parts_left - 1, lo, stack, count, listing)?;
        stack.pop();
        part += 1;
    }
    Ok(())
}

fn count_length_into(
    n: u64,
    p: u64,
    k: u64,
    count: &mut u128,
    listing: &mut Option<Vec<Composition>>,
) -> Result<(), Error> {
    debug_assert!(k >= 1);
    // Parts must strictly exceed k^p.
    let Some(lo) = pow_bound(k, p).and_then(|b| b.checked_add(1)) else {
        return Ok(());
    };
    if lo.checked_mul(k as u128).is_none_or(|need| need > n as u128) {
        return Ok(());
    }
    descend_parts(n, k, lo as u64, &mut Vec::new(), count, listing)
}

/// Counts decompositions of n into parts whose minimum strictly exceeds
/// (number of parts)^p, over every feasible number of parts. Listing is
/// ordered by length, then lexicographically.
pub fn enumerate_compositions(
    n: u64,
    p: u64,
    list_members: bool,
) -> Result<CompositionEnumeration, Error> {
    let mut count = 0u128;
    let mut listing = list_members.then(Vec::new);
    for k in 1..=n {
        count_length_into(n, p, k, &mut count, &mut listing)?;
    }
    Ok(CompositionEnumeration {
        count: BigCount::from(count),
        compositions: listing,
    })
}

/// Counts only the decompositions with exactly k parts.
pub fn compositions_of_length(n: u64, p: u64, k: u64) -> BigCount {
    if k == 0 {
        return BigCount::zero();
    }
    let mut count = 0u128;
    count_length_into(n, p, k, &mut count, &mut None).expect("no listing, no cap");
    BigCount::from(count)
}
