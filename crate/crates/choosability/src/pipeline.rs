//! The constructive colorer.
//!
//! Given lists of size at least `max{k, ceil((n+k-1)/3)}`, [`color`]
//! produces a proper list coloring by:
//!
//! 1. solving small instances (`n <= 2k+1`) with the exact oracle;
//! 2. repeatedly stripping stable sets that share a color (a 2-part with
//!    intersecting lists, three lists of one part sharing a color, or an
//!    intersecting pair inside a largest part when `n+k-1` is not divisible
//!    by 3), deleting the used color from all remaining lists;
//! 3. attempting a rainbow SDR over all remaining lists;
//! 4. otherwise merging vertex pairs inside designated 3- and 4-parts,
//!    checking the structural properties P1-P8 at runtime, and extracting
//!    the coloring from one final SDR over the merged lists;
//! 5. falling back to the exact oracle the moment any check fails, and
//!    recording the reason.
//!
//! Every decision is logged in a [`ProofTrace`] that can be replayed to
//! reproduce the coloring, and every returned coloring passes
//! [`validate_coloring`].

use serde::{Deserialize, Serialize};

use crate::instance::{ColorSet, Coloring, Instance, ListAssignment, Profile};
use crate::oracle::{search_coloring, Budget, SearchOptions};
use crate::sdr::{find_sdr, SdrResult};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Trace types
// ---------------------------------------------------------------------------

/// Why a reduction step applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionKind {
    /// A part of size 2 whose lists share a color.
    TwoPartCommonColor,
    /// Three lists of one part sharing a color.
    SharedTriple,
    /// Same, in a part of size at least 5.
    SharedTripleBigPart,
    /// An intersecting pair inside a largest part, restoring divisibility
    /// of `n+k-1` by 3.
    ParityTrim,
}

/// One reduction: `vertices` (original ids) all receive `color`, which is
/// then deleted from every remaining list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub part: usize,
    pub vertices: Vec<usize>,
    pub color: u32,
}

/// Why the reduction loop stopped making progress.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StuckReason {
    /// `n+k-1` is not divisible by 3 and no largest part has an
    /// intersecting pair (possible only when the pot has >= n colors).
    ParityUnfixable,
    /// A part of size >= 5 survived with no color on three of its lists.
    BigPartIrreducible,
    /// A step would have dropped some list below the required size.
    ListSizeInvariant,
}

/// The structural properties checked before the final SDR.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
    pub p4: bool,
    pub p5: bool,
    pub p6: bool,
    pub p7: bool,
    pub p8: bool,
}

impl Properties {
    pub fn all(&self) -> bool {
        self.p1 && self.p2 && self.p3 && self.p4 && self.p5 && self.p6 && self.p7 && self.p8
    }
}

/// Signals that route [`color`] to the exact-oracle fallback.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum PipelineFailure {
    ReductionStuck(StuckReason),
    BigPartSurvived,
    /// `(2n-k+1)/3` is not an integer.
    FractionalS,
    /// `(k1-k3+k4+1)/3` is not an integer or exceeds `k4`.
    BadZ4Size,
    /// A merged list in a designated 4-part fell below `ceil(k/3)`.
    MergedListTooSmall { part: usize },
    /// The good-pair color set of a part missed its size bound.
    GoodPairBoundViolated { part: usize },
    /// No SDR for the family of good-pair color sets and merged lists.
    FamilySdrViolator { violator: Vec<usize> },
    PropertyFailed { properties: Properties },
    FinalSdrViolator { violator: Vec<usize> },
}

/// A family together with the matching outcome, kept as a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdrCertificate {
    pub family: Vec<Vec<u32>>,
    pub result: SdrResult,
}

impl SdrCertificate {
    fn new(family: &[ColorSet], result: SdrResult) -> Self {
        SdrCertificate {
            family: family.iter().map(|s| s.to_vec()).collect(),
            result,
        }
    }
}

/// Where a merge was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MergeStage {
    /// Greedy merge in a designated 3-part.
    Z3Prime,
    /// Maximum-intersection merge in a designated 4-part.
    Z4Primary,
    /// Complementary-pair merge in a designated 4-part.
    Z4Secondary,
    /// Representative-guided merge in a part outside the designated sets.
    Remaining,
}

/// A merge of two vertices (reduced-instance ids, `u < v`) of one part; the
/// merged vertex's list is the exact intersection of its constituents'.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Merge {
    pub part: usize,
    pub u: usize,
    pub v: usize,
    pub stage: MergeStage,
}

/// The merge bookkeeping: designated part sets, the count `t3` of 3-parts
/// holding a merge, the threshold `s`, the leftover parts `y`, and the
/// merges themselves.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MergeState {
    pub z3: Vec<usize>,
    pub z3_prime: Vec<usize>,
    pub z4: Vec<usize>,
    pub t3: usize,
    pub s: Option<i64>,
    pub y: Vec<usize>,
    pub merges: Vec<Merge>,
}

/// The per-part good pairs considered for the remaining merges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartGoodPairs {
    pub part: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Complete record of one [`color`] run; replaying it against the same
/// input reproduces the output coloring.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ProofTrace {
    /// Reductions applied, in order (original vertex ids, dense colors).
    pub reductions: Vec<ReductionStep>,
    /// Why the reduction loop gave up, if it did.
    pub stuck: Option<StuckReason>,
    /// Reduced vertex id -> original vertex id.
    pub vertex_map: Vec<usize>,
    /// Number of distinct colors left on the reduced lists.
    pub pot_size: usize,
    /// The reduced instance was solved directly by the oracle.
    pub base_case: bool,
    /// The all-distinct-representatives attempt over the reduced lists.
    pub rainbow: Option<SdrCertificate>,
    /// Merge bookkeeping when the merge stage ran.
    pub merge_state: Option<MergeState>,
    /// Good pairs per leftover part.
    pub good_pairs: Vec<PartGoodPairs>,
    /// SDR certificate for the good-pair/merged-list family.
    pub family_x: Option<SdrCertificate>,
    /// P1-P8 at the moment the final SDR ran.
    pub properties: Option<Properties>,
    /// SDR certificate over all resulting lists.
    pub final_sdr: Option<SdrCertificate>,
    /// Why the run fell back to the exact oracle, if it did.
    pub fallback: Option<PipelineFailure>,
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// True iff the coloring is proper (no color on two different parts) and
/// every vertex's color lies in its list.
pub fn validate_coloring(instance: &Instance, lists: &ListAssignment, coloring: &Coloring) -> bool {
    if coloring.0.len() != instance.n() || lists.n() != instance.n() {
        return false;
    }
    let max_color = coloring.0.iter().max().copied().unwrap_or(0) as usize;
    let mut owner: Vec<Option<usize>> = vec![None; max_color + 1];
    for v in 0..instance.n() {
        let c = coloring.0[v];
        if !lists.list(v).contains(c) {
            return false;
        }
        let part = instance.part_of(v);
        match owner[c as usize] {
            None => owner[c as usize] = Some(part),
            Some(p) if p == part => {}
            Some(_) => return false,
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

/// Everything the reduction loop produced: colors fixed so far, the
/// surviving sub-instance with its trimmed lists, and the step log. `stuck`
/// is the reduction-stuck signal; callers fall back to the oracle.
#[derive(Clone, Debug)]
pub struct ReductionOutcome {
    /// (original vertex, dense color) pairs fixed by the reductions.
    pub assigned: Vec<(usize, u32)>,
    pub steps: Vec<ReductionStep>,
    pub reduced: Instance,
    /// Lists of the reduced instance; colors keep their original dense ids.
    pub reduced_lists: Vec<ColorSet>,
    /// Reduced vertex id -> original vertex id.
    pub vertex_map: Vec<usize>,
    pub stuck: Option<StuckReason>,
}

/// Run the reduction loop while `n >= 2k+2`: strip color-sharing stable
/// sets (intersecting 2-parts, shared triples, and — when `n+k-1` is not
/// divisible by 3 — an intersecting pair inside a largest part), deleting
/// each used color from all remaining lists. Every step keeps all list
/// sizes at least `max{k', ceil((n'+k'-1)/3)}`, which is checked.
pub fn apply_reductions(instance: &Instance, lists: &ListAssignment) -> Result<ReductionOutcome> {
    check_precondition(instance, lists)?;
    Ok(reduce(instance, lists.lists().to_vec()))
}

fn check_precondition(instance: &Instance, lists: &ListAssignment) -> Result<()> {
    if lists.n() != instance.n() {
        return Err(Error::InvalidLists(format!(
            "{} lists for {} vertices",
            lists.n(),
            instance.n()
        )));
    }
    let bound = crate::instance::main_bound(instance.n(), instance.k())?;
    if let Some(v) = (0..instance.n()).find(|&v| lists.list(v).len() < bound) {
        return Err(Error::InvalidLists(format!(
            "list of vertex {v} has {} colors, need at least {bound}",
            lists.list(v).len()
        )));
    }
    Ok(())
}

struct Reducer {
    lists: Vec<ColorSet>,
    alive: Vec<bool>,
    /// Alive vertices per original part, ascending.
    parts: Vec<Vec<usize>>,
    n: usize,
}

impl Reducer {
    fn k(&self) -> usize {
        self.parts.iter().filter(|p| !p.is_empty()).count()
    }

    fn bound(&self) -> usize {
        let k = self.k();
        k.max((self.n + k - 1).div_ceil(3))
    }

    /// Color `vertices` with `c`, remove them, and delete `c` everywhere.
    fn apply(&mut self, part: usize, vertices: &[usize], c: u32) {
        for &v in vertices {
            self.alive[v] = false;
        }
        let alive = &self.alive;
        self.parts[part].retain(|v| alive[*v]);
        self.n -= vertices.len();
        for (v, l) in self.lists.iter_mut().enumerate() {
            if self.alive[v] {
                l.remove(c);
            }
        }
    }

    fn find_two_part_common(&self) -> Option<(usize, u32)> {
        for (p, members) in self.parts.iter().enumerate() {
            if members.len() == 2 {
                let common = self.lists[members[0]] & self.lists[members[1]];
                if let Some(c) = common.min_color() {
                    return Some((p, c));
                }
            }
        }
        None
    }

    fn find_shared_triple(&self) -> Option<(usize, Vec<usize>, u32)> {
        for (p, members) in self.parts.iter().enumerate() {
            if members.len() < 3 {
                continue;
            }
            let pot = members
                .iter()
                .fold(ColorSet::EMPTY, |acc, &v| acc | self.lists[v]);
            for c in pot.iter() {
                let holders: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&v| self.lists[v].contains(c))
                    .take(3)
                    .collect();
                if holders.len() == 3 {
                    return Some((p, holders, c));
                }
            }
        }
        None
    }

    fn find_parity_pair(&self) -> Option<(usize, [usize; 2], u32)> {
        let largest = self.parts.iter().map(|m| m.len()).max()?;
        for (p, members) in self.parts.iter().enumerate() {
            if members.len() != largest {
                continue;
            }
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if let Some(c) = (self.lists[u] & self.lists[v]).min_color() {
                        return Some((p, [u, v], c));
                    }
                }
            }
        }
        None
    }
}

fn reduce(instance: &Instance, lists: Vec<ColorSet>) -> ReductionOutcome {
    let mut r = Reducer {
        lists,
        alive: vec![true; instance.n()],
        parts: (0..instance.k())
            .map(|p| instance.part_vertices(p).collect())
            .collect(),
        n: instance.n(),
    };
    let mut steps = Vec::new();
    let mut assigned = Vec::new();
    let mut stuck = None;

    loop {
        let k = r.k();
        if r.n < 2 * k + 2 {
            break;
        }
        let step = if let Some((p, c)) = r.find_two_part_common() {
            let vs = r.parts[p].clone();
            ReductionStep {
                kind: ReductionKind::TwoPartCommonColor,
                part: p,
                vertices: vs,
                color: c,
            }
        } else if let Some((p, vs, c)) = r.find_shared_triple() {
            let kind = if r.parts[p].len() >= 5 {
                ReductionKind::SharedTripleBigPart
            } else {
                ReductionKind::SharedTriple
            };
            ReductionStep {
                kind,
                part: p,
                vertices: vs,
                color: c,
            }
        } else if (r.n + k - 1) % 3 != 0 {
            match r.find_parity_pair() {
                Some((p, [u, v], c)) => ReductionStep {
                    kind: ReductionKind::ParityTrim,
                    part: p,
                    vertices: vec![u, v],
                    color: c,
                },
                None => {
                    stuck = Some(StuckReason::ParityUnfixable);
                    break;
                }
            }
        } else if r.parts.iter().any(|m| m.len() >= 5) {
            stuck = Some(StuckReason::BigPartIrreducible);
            break;
        } else {
            break;
        };

        r.apply(step.part, &step.vertices, step.color);
        for &v in &step.vertices {
            assigned.push((v, step.color));
        }
        steps.push(step);

        // Each step must keep the surviving lists above the shrunken bound.
        let bound = r.bound();
        if (0..r.lists.len()).any(|v| r.alive[v] && r.lists[v].len() < bound) {
            debug_assert!(false, "reduction dropped a list below the bound");
            stuck = Some(StuckReason::ListSizeInvariant);
            break;
        }
    }

    let vertex_map: Vec<usize> = r.parts.iter().flatten().copied().collect();
    let sizes: Vec<usize> = r.parts.iter().map(|m| m.len()).filter(|&s| s > 0).collect();
    let reduced = Instance::new(sizes).expect("reductions never empty the instance");
    let reduced_lists: Vec<ColorSet> = vertex_map.iter().map(|&v| r.lists[v]).collect();
    ReductionOutcome {
        assigned,
        steps,
        reduced,
        reduced_lists,
        vertex_map,
        stuck,
    }
}

// ---------------------------------------------------------------------------
// Merge machinery
// ---------------------------------------------------------------------------

/// Largest pairwise list intersection within a part (which has size >= 2).
pub fn ell(instance: &Instance, lists: &[ColorSet], part: usize) -> usize {
    let range = instance.part_vertices(part);
    assert!(range.len() >= 2, "ell needs a part of size >= 2");
    let mut best = 0;
    for u in range.clone() {
        for v in u + 1..range.end {
            best = best.max((lists[u] & lists[v]).len());
        }
    }
    best
}

/// The pair of `part` achieving the largest intersection, smallest vertex
/// indices first among ties.
fn max_pair(instance: &Instance, lists: &[ColorSet], part: usize) -> (usize, usize) {
    let range = instance.part_vertices(part);
    let mut best = (range.start, range.start + 1);
    let mut best_len = usize::MAX;
    for u in range.clone() {
        for v in u + 1..range.end {
            let len = (lists[u] & lists[v]).len();
            if best_len == usize::MAX || len > best_len {
                best = (u, v);
                best_len = len;
            }
        }
    }
    best
}

/// Good pairs of a part of size 3 or 4: in a 3-part, pairs whose
/// intersection reaches `(k1+k4+1)/3`; in a 4-part, pairs at least as large
/// as their complementary pair. A maximum-intersection pair always
/// qualifies.
pub fn good_pairs(
    instance: &Instance,
    lists: &[ColorSet],
    profile: &Profile,
    part: usize,
) -> Result<Vec<(usize, usize)>> {
    let range = instance.part_vertices(part);
    let mut out = Vec::new();
    match range.len() {
        3 => {
            let threshold = profile.k1 + profile.k4 + 1;
            for u in range.clone() {
                for v in u + 1..range.end {
                    if 3 * (lists[u] & lists[v]).len() >= threshold {
                        out.push((u, v));
                    }
                }
            }
        }
        4 => {
            let vs: Vec<usize> = range.collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    let rest: Vec<usize> =
                        vs.iter().copied().filter(|&w| w != u && w != v).collect();
                    let own = (lists[u] & lists[v]).len();
                    let complement = (lists[rest[0]] & lists[rest[1]]).len();
                    if own >= complement {
                        out.push((u, v));
                    }
                }
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "good pairs are defined for parts of size 3 or 4, got {other}"
            )))
        }
    }
    Ok(out)
}

/// Output of the greedy 3-part merge selection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z3Selection {
    pub t3: usize,
    pub z3_prime: Vec<usize>,
    pub merges: Vec<Merge>,
}

/// Choose `t3` as the largest integer for which `t3 - ceil(k3/3)` members
/// of `z3` (taken by descending intersection strength) all satisfy
/// `ell(A) >= (k+t3-1)/3`, and merge a maximum-intersection pair in exactly
/// those members. When no member qualifies, `t3 = ceil(k3/3)` and nothing
/// merges here.
pub fn select_merges_z3(
    instance: &Instance,
    lists: &[ColorSet],
    profile: &Profile,
    z3: &[usize],
) -> Z3Selection {
    let k = profile.k;
    let k3 = profile.k3;
    let quota = k3.div_ceil(3);
    let mut ranked: Vec<(usize, usize)> =
        z3.iter().map(|&p| (ell(instance, lists, p), p)).collect();
    ranked.sort_by_key(|&(l, p)| (std::cmp::Reverse(l), p));

    let mut t3 = quota;
    for t in (quota..=k3).rev() {
        let need = t - quota;
        if need <= ranked.len() && ranked[..need].iter().all(|&(l, _)| 3 * l >= k + t - 1) {
            t3 = t;
            break;
        }
    }
    let mut z3_prime: Vec<usize> = ranked[..t3 - quota].iter().map(|&(_, p)| p).collect();
    z3_prime.sort_unstable();
    let merges = z3_prime
        .iter()
        .map(|&p| {
            let (u, v) = max_pair(instance, lists, p);
            Merge {
                part: p,
                u,
                v,
                stage: MergeStage::Z3Prime,
            }
        })
        .collect();
    Z3Selection {
        t3,
        z3_prime,
        merges,
    }
}

/// In each designated 4-part, merge a maximum-intersection pair, and the
/// complementary pair too iff its intersection reaches `s = (2n-k+1)/3 -
/// k4`. `s` must be an integer and every merged list must have at least
/// `ceil(k/3)` colors.
pub fn select_merges_z4(
    instance: &Instance,
    lists: &[ColorSet],
    profile: &Profile,
    z4: &[usize],
) -> std::result::Result<(i64, Vec<Merge>), PipelineFailure> {
    let n = profile.n as i64;
    let k = profile.k as i64;
    if (2 * n - k + 1).rem_euclid(3) != 0 {
        return Err(PipelineFailure::FractionalS);
    }
    let s = (2 * n - k + 1) / 3 - profile.k4 as i64;
    let min_merged = profile.k.div_ceil(3);
    let mut merges = Vec::new();
    for &p in z4 {
        let (u, v) = max_pair(instance, lists, p);
        if (lists[u] & lists[v]).len() < min_merged {
            return Err(PipelineFailure::MergedListTooSmall { part: p });
        }
        merges.push(Merge {
            part: p,
            u,
            v,
            stage: MergeStage::Z4Primary,
        });
        let rest: Vec<usize> = instance
            .part_vertices(p)
            .filter(|&w| w != u && w != v)
            .collect();
        let complement = (lists[rest[0]] & lists[rest[1]]).len();
        if complement as i64 >= s {
            if complement < min_merged {
                return Err(PipelineFailure::MergedListTooSmall { part: p });
            }
            merges.push(Merge {
                part: p,
                u: rest[0],
                v: rest[1],
                stage: MergeStage::Z4Secondary,
            });
        }
    }
    Ok((s, merges))
}

/// Output of the representative-guided merges.
#[derive(Clone, Debug)]
pub struct RemainingMerges {
    pub merges: Vec<Merge>,
    pub good_pairs: Vec<PartGoodPairs>,
    pub certificate: SdrCertificate,
}

/// For each part in `y` (the 3- and 4-parts outside the designated sets),
/// collect the union `L_A` of its good-pair intersections; find an SDR for
/// the family of all `L_A` together with the lists of the already-merged
/// vertices in `t`; then merge, in each `y` part, the first good pair whose
/// intersection holds that part's representative.
///
/// The size bounds `|L_A| >= k3 + (k1+k4)/3` (3-parts) and
/// `|L_A| >= k3 + k4` (4-parts) are checked on the way.
pub fn remaining_merges(
    instance: &Instance,
    lists: &[ColorSet],
    profile: &Profile,
    y: &[usize],
    t: &[Merge],
) -> std::result::Result<RemainingMerges, PipelineFailure> {
    let mut family = Vec::new();
    let mut all_pairs = Vec::new();
    for &p in y {
        let pairs = good_pairs(instance, lists, profile, p).expect("y parts have size 3 or 4");
        let l_a = pairs
            .iter()
            .fold(ColorSet::EMPTY, |acc, &(u, v)| acc | (lists[u] & lists[v]));
        let ok = match instance.part_size(p) {
            3 => 3 * l_a.len() >= 3 * profile.k3 + profile.k1 + profile.k4,
            _ => l_a.len() >= profile.k3 + profile.k4,
        };
        if !ok {
            return Err(PipelineFailure::GoodPairBoundViolated { part: p });
        }
        family.push(l_a);
        all_pairs.push(PartGoodPairs { part: p, pairs });
    }
    for m in t {
        family.push(lists[m.u] & lists[m.v]);
    }

    let result = find_sdr(&family);
    let certificate = SdrCertificate::new(&family, result.clone());
    let reps = match result {
        SdrResult::Violator(violator) => {
            return Err(PipelineFailure::FamilySdrViolator { violator })
        }
        SdrResult::Representatives(reps) => reps,
    };

    let mut merges = Vec::new();
    for (i, &p) in y.iter().enumerate() {
        let rep = reps[i];
        let &(u, v) = all_pairs[i]
            .pairs
            .iter()
            .find(|&&(u, v)| (lists[u] & lists[v]).contains(rep))
            .expect("representative comes from some good pair");
        merges.push(Merge {
            part: p,
            u,
            v,
            stage: MergeStage::Remaining,
        });
    }
    Ok(RemainingMerges {
        merges,
        good_pairs: all_pairs,
        certificate,
    })
}

/// A vertex of the merged graph: one or two constituents from one part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResultingVertex {
    pub part: usize,
    pub u: usize,
    pub v: Option<usize>,
}

impl ResultingVertex {
    pub fn list(&self, lists: &[ColorSet]) -> ColorSet {
        match self.v {
            Some(v) => lists[self.u] & lists[v],
            None => lists[self.u],
        }
    }
}

/// The vertices left after performing `merges`, ordered by part and then by
/// smallest constituent id. No vertex may appear in two merges.
pub fn resulting_vertices(instance: &Instance, merges: &[Merge]) -> Vec<ResultingVertex> {
    let mut partner: Vec<Option<usize>> = vec![None; instance.n()];
    for m in merges {
        assert!(
            partner[m.u].is_none() && partner[m.v].is_none(),
            "vertex in two merges"
        );
        partner[m.u] = Some(m.v);
        partner[m.v] = Some(m.u);
    }
    let mut out = Vec::new();
    for part in 0..instance.k() {
        for u in instance.part_vertices(part) {
            match partner[u] {
                Some(v) if v < u => {}
                Some(v) => out.push(ResultingVertex {
                    part,
                    u,
                    v: Some(v),
                }),
                None => out.push(ResultingVertex { part, u, v: None }),
            }
        }
    }
    out
}

/// Evaluate P1-P8 for a decided set of merges. Never fails; reports.
pub fn check_properties(
    instance: &Instance,
    lists: &[ColorSet],
    profile: &Profile,
    state: &MergeState,
) -> Properties {
    let n = profile.n;
    let k = profile.k;
    let (k3, k4) = (profile.k3, profile.k4);
    let result = resulting_vertices(instance, &state.merges);

    let mut merged_parts: Vec<bool> = vec![false; instance.k()];
    for m in &state.merges {
        merged_parts[m.part] = true;
    }
    let t3 = (0..instance.k())
        .filter(|&p| instance.part_size(p) == 3 && merged_parts[p])
        .count();

    let p1 = 3 * t3 >= k3;
    let p2 = (0..instance.k())
        .filter(|&p| instance.part_size(p) == 4)
        .all(|p| merged_parts[p]);

    let mut p3 = true;
    let mut p4 = true;
    let mut p5 = true;
    let mut p6 = true;
    let mut p7 = true;
    for part in 0..instance.k() {
        let stars: Vec<ColorSet> = result
            .iter()
            .filter(|r| r.part == part)
            .map(|r| r.list(lists))
            .collect();
        // P3: triples of resulting vertices in one part.
        for i in 0..stars.len() {
            for j in i + 1..stars.len() {
                for l in j + 1..stars.len() {
                    if (stars[i] | stars[j] | stars[l]).len() + t3 + k4 < n {
                        p3 = false;
                    }
                }
            }
        }
        // P4-P7: pairs of resulting vertices, thresholds by part class.
        let size = instance.part_size(part);
        let unmerged3 = size == 3 && stars.len() == 3;
        let in_z3 = state.z3.contains(&part);
        let in_z4 = state.z4.contains(&part);
        for i in 0..stars.len() {
            for j in i + 1..stars.len() {
                let union = (stars[i] | stars[j]).len();
                if unmerged3 && union < k + k3 + k4 {
                    p4 = false;
                }
                if size == 3 && in_z3 && union < k + t3 + k4 {
                    p5 = false;
                }
                if size == 3 && 3 * union < 3 * k + k3 + 3 * k4 {
                    p6 = false;
                }
                if in_z4 && union < k + k4 {
                    p7 = false;
                }
            }
        }
    }

    let merged_lists: Vec<ColorSet> = state
        .merges
        .iter()
        .map(|m| lists[m.u] & lists[m.v])
        .collect();
    let p8 = find_sdr(&merged_lists).is_sdr();

    Properties {
        p1,
        p2,
        p3,
        p4,
        p5,
        p6,
        p7,
        p8,
    }
}

// ---------------------------------------------------------------------------
// The colorer
// ---------------------------------------------------------------------------

/// Color the instance under the bound hypothesis. See the module docs for
/// the stages; the returned trace records every decision, and the returned
/// coloring always passes [`validate_coloring`].
pub fn color(instance: &Instance, lists: &ListAssignment) -> Result<(Coloring, ProofTrace)> {
    color_opt(instance, lists, &SearchOptions::default())
}

/// [`color`] with an explicit node budget for the oracle stages.
pub fn color_opt(
    instance: &Instance,
    lists: &ListAssignment,
    opts: &SearchOptions,
) -> Result<(Coloring, ProofTrace)> {
    check_precondition(instance, lists)?;
    let n = instance.n();
    let k = instance.k();
    let mut trace = ProofTrace::default();

    // Small instances go straight to the oracle; a coloring is guaranteed
    // because the lists have at least k = chi colors each.
    if n <= 2 * k + 1 {
        trace.base_case = true;
        trace.vertex_map = (0..n).collect();
        trace.pot_size = lists.pot_size();
        let mut budget = Budget::new(opts.node_limit);
        let coloring = search_coloring(instance, lists.lists(), &mut budget)?
            .expect("base case is always list-colorable");
        debug_assert!(validate_coloring(instance, lists, &coloring));
        return Ok((coloring, trace));
    }

    let red = reduce(instance, lists.lists().to_vec());
    trace.reductions = red.steps.clone();
    trace.stuck = red.stuck;
    trace.vertex_map = red.vertex_map.clone();
    trace.pot_size = red
        .reduced_lists
        .iter()
        .fold(ColorSet::EMPTY, |acc, &l| acc | l)
        .len();

    let rn = red.reduced.n();
    let rk = red.reduced.k();
    let reduced_coloring: Vec<u32>;

    if rn <= 2 * rk + 1 {
        trace.base_case = true;
        let mut budget = Budget::new(opts.node_limit);
        let c = search_coloring(&red.reduced, &red.reduced_lists, &mut budget)?
            .expect("base case is always list-colorable");
        reduced_coloring = c.0;
    } else {
        // Rainbow attempt: distinct colors for every remaining vertex.
        let rainbow = find_sdr(&red.reduced_lists);
        trace.rainbow = Some(SdrCertificate::new(&red.reduced_lists, rainbow.clone()));
        if let SdrResult::Representatives(reps) = rainbow {
            reduced_coloring = reps;
        } else {
            let outcome = if let Some(reason) = red.stuck {
                Err(PipelineFailure::ReductionStuck(reason))
            } else {
                merge_stage(&red.reduced, &red.reduced_lists, &mut trace)
            };
            match outcome {
                Ok(c) => reduced_coloring = c,
                Err(failure) => {
                    trace.fallback = Some(failure);
                    let mut budget = Budget::new(opts.node_limit);
                    let c = search_coloring(&red.reduced, &red.reduced_lists, &mut budget)?
                        .ok_or_else(|| {
                            Error::InvalidLists(
                                "reduced instance has no list coloring; the bound hypothesis \
                                 must have been violated"
                                    .into(),
                            )
                        })?;
                    reduced_coloring = c.0;
                }
            }
        }
    }

    let coloring = assemble(n, &red.assigned, &red.vertex_map, &reduced_coloring);
    assert!(
        validate_coloring(instance, lists, &coloring),
        "pipeline produced an invalid coloring"
    );
    Ok((coloring, trace))
}

/// The merge pipeline on a clean reduced instance. Returns a coloring of
/// the reduced instance or the failure that routes to the fallback.
fn merge_stage(
    instance: &Instance,
    lists: &[ColorSet],
    trace: &mut ProofTrace,
) -> std::result::Result<Vec<u32>, PipelineFailure> {
    let profile = instance.profile();
    if profile.k_big > 0 {
        return Err(PipelineFailure::BigPartSurvived);
    }
    let (k1, k3, k4) = (profile.k1 as i64, profile.k3 as i64, profile.k4 as i64);

    let parts_of = |size: usize| -> Vec<usize> {
        (0..instance.k())
            .filter(|&p| instance.part_size(p) == size)
            .collect()
    };
    let three_parts = parts_of(3);
    let four_parts = parts_of(4);

    let z3: Vec<usize> = three_parts
        .iter()
        .copied()
        .take(2 * profile.k3 / 3)
        .collect();

    let z4_numer = k1 - k3 + k4 + 1;
    let z4_size = if z4_numer <= 0 {
        0
    } else if z4_numer % 3 != 0 || z4_numer / 3 > k4 {
        return Err(PipelineFailure::BadZ4Size);
    } else {
        (z4_numer / 3) as usize
    };
    let z4: Vec<usize> = four_parts.iter().copied().take(z4_size).collect();

    let z3sel = select_merges_z3(instance, lists, &profile, &z3);
    let (s, z4_merges) = select_merges_z4(instance, lists, &profile, &z4)?;

    let mut prior = z3sel.merges.clone();
    prior.extend(z4_merges.iter().copied());

    let y: Vec<usize> = (0..instance.k())
        .filter(|&p| {
            let size = instance.part_size(p);
            (size == 3 || size == 4) && !z3.contains(&p) && !z4.contains(&p)
        })
        .collect();

    let mut state = MergeState {
        t3: z3sel.t3,
        z3,
        z3_prime: z3sel.z3_prime,
        z4,
        s: Some(s),
        y: y.clone(),
        merges: prior.clone(),
    };

    let remaining = match remaining_merges(instance, lists, &profile, &y, &prior) {
        Ok(r) => r,
        Err(failure) => {
            trace.merge_state = Some(state);
            return Err(failure);
        }
    };
    trace.good_pairs = remaining.good_pairs.clone();
    trace.family_x = Some(remaining.certificate.clone());
    state.merges.extend(remaining.merges.iter().copied());

    // Merged lists must stay disjoint from the rest of their part; this is
    // what the shared-triple reduction guarantees.
    debug_assert!(state.merges.iter().all(|m| {
        let merged = lists[m.u] & lists[m.v];
        instance
            .part_vertices(m.part)
            .filter(|&w| w != m.u && w != m.v)
            .all(|w| (merged & lists[w]).is_empty())
    }));

    let properties = check_properties(instance, lists, &profile, &state);
    trace.properties = Some(properties);
    trace.merge_state = Some(state.clone());
    if !properties.all() {
        return Err(PipelineFailure::PropertyFailed { properties });
    }

    let result = resulting_vertices(instance, &state.merges);
    let family: Vec<ColorSet> = result.iter().map(|r| r.list(lists)).collect();
    let sdr = find_sdr(&family);
    trace.final_sdr = Some(SdrCertificate::new(&family, sdr.clone()));
    let reps = match sdr {
        SdrResult::Violator(violator) => {
            return Err(PipelineFailure::FinalSdrViolator { violator })
        }
        SdrResult::Representatives(reps) => reps,
    };

    let mut coloring = vec![u32::MAX; instance.n()];
    for (r, &c) in result.iter().zip(reps.iter()) {
        coloring[r.u] = c;
        if let Some(v) = r.v {
            coloring[v] = c;
        }
    }
    debug_assert!(!coloring.contains(&u32::MAX));
    Ok(coloring)
}

/// Stitch the reduction assignments and the reduced-instance coloring into
/// a coloring of the original instance.
fn assemble(
    n: usize,
    assigned: &[(usize, u32)],
    vertex_map: &[usize],
    reduced_coloring: &[u32],
) -> Coloring {
    let mut colors = vec![u32::MAX; n];
    for &(v, c) in assigned {
        colors[v] = c;
    }
    for (r, &orig) in vertex_map.iter().enumerate() {
        colors[orig] = reduced_coloring[r];
    }
    debug_assert!(!colors.contains(&u32::MAX));
    Coloring(colors)
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

/// Re-derive the coloring from a trace: apply the logged reductions, then
/// the logged terminal step (oracle, rainbow representatives, or merges
/// plus the final SDR representatives). Produces exactly the coloring the
/// original run returned.
pub fn replay(instance: &Instance, lists: &ListAssignment, trace: &ProofTrace) -> Result<Coloring> {
    check_precondition(instance, lists)?;
    let mut work: Vec<ColorSet> = lists.lists().to_vec();
    let mut assigned = Vec::new();
    let mut alive = vec![true; instance.n()];
    for step in &trace.reductions {
        for &v in &step.vertices {
            alive[v] = false;
            assigned.push((v, step.color));
        }
        for (v, l) in work.iter_mut().enumerate() {
            if alive[v] {
                l.remove(step.color);
            }
        }
    }
    let reduced_lists: Vec<ColorSet> = trace.vertex_map.iter().map(|&v| work[v]).collect();
    let mut sizes: Vec<usize> = Vec::new();
    let mut last_part = usize::MAX;
    for &v in &trace.vertex_map {
        let p = instance.part_of(v);
        if p == last_part {
            *sizes.last_mut().unwrap() += 1;
        } else {
            sizes.push(1);
            last_part = p;
        }
    }
    let reduced = Instance::new(sizes)?;

    let reduced_coloring: Vec<u32> = if trace.base_case || trace.fallback.is_some() {
        let mut budget = Budget::new(SearchOptions::default().node_limit);
        search_coloring(&reduced, &reduced_lists, &mut budget)?
            .ok_or_else(|| Error::InvalidLists("trace does not fit the input".into()))?
            .0
    } else if let Some(SdrCertificate {
        result: SdrResult::Representatives(reps),
        ..
    }) = &trace.rainbow
    {
        reps.clone()
    } else {
        let state = trace
            .merge_state
            .as_ref()
            .ok_or_else(|| Error::InvalidLists("trace is missing its merge record".into()))?;
        let reps = trace
            .final_sdr
            .as_ref()
            .and_then(|c| c.result.representatives())
            .ok_or_else(|| Error::InvalidLists("trace is missing the final SDR".into()))?;
        let result = resulting_vertices(&reduced, &state.merges);
        let mut coloring = vec![u32::MAX; reduced.n()];
        for (r, &c) in result.iter().zip(reps.iter()) {
            coloring[r.u] = c;
            if let Some(v) = r.v {
                coloring[v] = c;
            }
        }
        coloring
    };

    Ok(assemble(
        instance.n(),
        &assigned,
        &trace.vertex_map,
        &reduced_coloring,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::make_instance;

    fn dense(inst: &Instance, lists: &[&[u32]]) -> ListAssignment {
        ListAssignment::new(inst, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validator_examples() {
        let k2 = make_instance(&[1, 1]).unwrap();
        let lists = dense(&k2, &[&[0], &[1]]);
        assert!(validate_coloring(&k2, &lists, &Coloring(vec![0, 1])));
        // membership violation
        assert!(!validate_coloring(&k2, &lists, &Coloring(vec![0, 0])));
        // properness violation
        let lists = dense(&k2, &[&[0], &[0, 1]]);
        assert!(!validate_coloring(&k2, &lists, &Coloring(vec![0, 0])));
    }

    #[test]
    fn reduction_two_part_common_color() {
        let inst = make_instance(&[2, 4]).unwrap();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 1, 2],
                &[0, 1, 3],
                &[0, 2, 4],
                &[0, 3, 4],
            ],
        );
        let out = apply_reductions(&inst, &lists).unwrap();
        assert_eq!(out.steps[0].kind, ReductionKind::TwoPartCommonColor);
        assert_eq!(out.steps[0].vertices, vec![0, 1]);
        assert_eq!(out.steps[0].color, 0);
        assert!(out.assigned.contains(&(0, 0)) && out.assigned.contains(&(1, 0)));
        assert!(out.stuck.is_none());
        // color 0 was stripped from the surviving lists
        assert!(out.reduced_lists.iter().all(|l| !l.contains(0)));
    }

    #[test]
    fn reduction_shared_triple() {
        // A 3-part whose lists share color 0 is colored 0 wholesale.
        let inst = make_instance(&[3, 4]).unwrap();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[2, 4, 6],
                &[1, 4, 6],
                &[2, 3, 5],
            ],
        );
        let out = apply_reductions(&inst, &lists).unwrap();
        assert_eq!(out.steps[0].kind, ReductionKind::SharedTriple);
        assert_eq!(out.steps[0].vertices, vec![0, 1, 2]);
        assert_eq!(out.steps[0].color, 0);
    }

    #[test]
    fn reduction_noop_when_clean() {
        // [4,4]: no 2-parts, no shared triples, and n+k-1 = 9 is divisible
        // by 3: nothing to do.
        let inst = make_instance(&[4, 4]).unwrap();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3, 4],
                &[4, 5, 6],
                &[0, 4, 5],
                &[1, 5, 6],
                &[2, 3, 6],
                &[0, 2, 4],
            ],
        );
        let out = apply_reductions(&inst, &lists).unwrap();
        assert!(out.steps.is_empty());
        assert!(out.stuck.is_none());
        assert_eq!(out.reduced.n(), 8);
        assert_eq!(out.vertex_map, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn reductions_reject_undersized_lists() {
        let inst = make_instance(&[2, 4]).unwrap();
        let lists = dense(&inst, &[&[0], &[1], &[0], &[1], &[2], &[3]]);
        assert!(apply_reductions(&inst, &lists).is_err());
    }

    #[test]
    fn ell_examples() {
        let inst = make_instance(&[3]).unwrap();
        let lists = dense(&inst, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(ell(&inst, lists.lists(), 0), 1);
        let lists = dense(&inst, &[&[0], &[1], &[2]]);
        assert_eq!(ell(&inst, lists.lists(), 0), 0);
        // all 2-subsets of a 3-set pairwise meet in one color
        let lists = dense(&inst, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(ell(&inst, lists.lists(), 0), 1);
    }

    #[test]
    fn good_pairs_four_part() {
        let inst = make_instance(&[4]).unwrap();
        let profile = inst.profile();
        let lists = dense(&inst, &[&[0, 1, 2], &[0, 1, 3], &[4, 5, 6], &[4, 7, 8]]);
        let pairs = good_pairs(&inst, lists.lists(), &profile, 0).unwrap();
        assert!(pairs.contains(&(0, 1)));
        assert!(!pairs.contains(&(2, 3)));
    }

    #[test]
    fn good_pairs_three_part_threshold() {
        // k1 = k4 = 0: any intersecting pair is good, disjoint pairs are not.
        let inst = make_instance(&[3, 3]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[&[0, 1], &[1, 2], &[5, 6], &[0, 1], &[1, 2], &[5, 6]],
        );
        let pairs = good_pairs(&inst, lists.lists(), &profile, 0).unwrap();
        assert_eq!(pairs, vec![(0, 1)]);
    }

    #[test]
    fn good_pairs_rejects_other_sizes() {
        let inst = make_instance(&[2, 4]).unwrap();
        let lists = dense(&inst, &[&[0], &[1], &[0], &[1], &[2], &[3]]);
        assert!(good_pairs(&inst, lists.lists(), &inst.profile(), 0).is_err());
    }

    #[test]
    fn z3_selection_examples() {
        // Three 3-parts, k = k3 = 3, two of them in z3 with ell = 5:
        // t3 = 3 requires two parts with ell >= (3+3-1)/3, i.e. >= 2.
        let inst = make_instance(&[3, 3, 3]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2, 3, 4, 10],
                &[0, 1, 2, 3, 4, 11],
                &[20, 21, 22],
                &[0, 1, 2, 3, 4, 12],
                &[0, 1, 2, 3, 4, 13],
                &[23, 24, 25],
                &[5, 6, 7],
                &[8, 9, 14],
                &[15, 16, 17],
            ],
        );
        let sel = select_merges_z3(&inst, lists.lists(), &profile, &[0, 1]);
        assert_eq!(sel.t3, 3);
        assert_eq!(sel.z3_prime, vec![0, 1]);
        assert_eq!(sel.merges.len(), 2);
        assert_eq!((sel.merges[0].u, sel.merges[0].v), (0, 1));

        // No member strong enough: t3 = ceil(k3/3), nothing merges.
        let weak = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[3, 4, 5],
                &[6, 7, 8],
                &[9, 10, 11],
                &[12, 13, 14],
                &[15, 16, 17],
                &[18, 19, 20],
                &[21, 22, 23],
                &[24, 25, 26],
            ],
        );
        let sel = select_merges_z3(&inst, weak.lists(), &profile, &[0, 1]);
        assert_eq!(sel.t3, 1);
        assert!(sel.z3_prime.is_empty());
        assert!(sel.merges.is_empty());
    }

    #[test]
    fn z3_empty_when_no_three_parts() {
        let inst = make_instance(&[4, 4]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3, 4],
                &[4, 5, 6],
                &[0, 4, 5],
                &[1, 5, 6],
                &[2, 3, 6],
                &[0, 2, 4],
            ],
        );
        let sel = select_merges_z3(&inst, lists.lists(), &profile, &[]);
        assert_eq!(sel.t3, 0);
        assert!(sel.merges.is_empty());
    }

    #[test]
    fn z4_merges_and_threshold() {
        // Profile (1,0,0,1): n=5, k=2, s = (10-2+1)/3 - 1 = 2.
        let inst = make_instance(&[1, 4]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[&[9, 10], &[0, 1, 2], &[0, 1, 3], &[2, 3, 4], &[2, 4, 5]],
        );
        let (s, merges) = select_merges_z4(&inst, lists.lists(), &profile, &[1]).unwrap();
        assert_eq!(s, 2);
        // primary pair (1,2) with intersection {0,1}; complement (3,4)
        // intersects in {2,4}, size 2 >= s: both merge.
        assert_eq!(merges.len(), 2);
        assert_eq!((merges[0].u, merges[0].v), (1, 2));
        assert_eq!((merges[1].u, merges[1].v), (3, 4));

        // complement intersection s-1 = 1: single merge only.
        let lists = dense(
            &inst,
            &[&[9, 10], &[0, 1, 2], &[0, 1, 3], &[2, 3, 4], &[2, 5, 6]],
        );
        let (_, merges) = select_merges_z4(&inst, lists.lists(), &profile, &[1]).unwrap();
        assert_eq!(merges.len(), 1);
    }

    #[test]
    fn remaining_merges_trivial_cases() {
        let inst = make_instance(&[4, 4]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3, 4],
                &[4, 5, 6],
                &[0, 4, 5],
                &[1, 5, 6],
                &[2, 3, 6],
                &[0, 2, 4],
            ],
        );
        // y and t empty: nothing to do.
        let r = remaining_merges(&inst, lists.lists(), &profile, &[], &[]).unwrap();
        assert!(r.merges.is_empty());

        // t only: two merged vertices with disjoint lists.
        let t = [
            Merge {
                part: 0,
                u: 0,
                v: 1,
                stage: MergeStage::Z4Primary,
            },
            Merge {
                part: 1,
                u: 6,
                v: 7,
                stage: MergeStage::Z4Primary,
            },
        ];
        let r = remaining_merges(&inst, lists.lists(), &profile, &[], &t).unwrap();
        let reps = r.certificate.result.representatives().unwrap().to_vec();
        assert_eq!(reps.len(), 2);
        assert_ne!(reps[0], reps[1]);
    }

    #[test]
    fn properties_vacuous_cases() {
        let inst = make_instance(&[1, 1, 2, 3]).unwrap();
        let profile = inst.profile();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 1, 4],
                &[2, 3, 4],
                &[0, 3, 4],
            ],
        );
        // no 4-parts: P2 vacuously true; no merges and k3 = 1: P1 fails.
        let state = MergeState::default();
        let props = check_properties(&inst, lists.lists(), &profile, &state);
        assert!(props.p2);
        assert!(!props.p1);
        // k3 = 0 satisfies P1 with t3 = 0, and the empty family has an SDR.
        let inst = make_instance(&[1, 1]).unwrap();
        let lists = dense(&inst, &[&[0], &[1]]);
        let props =
            check_properties(&inst, lists.lists(), &inst.profile(), &MergeState::default());
        assert!(props.p1);
        assert!(props.p8);
    }

    #[test]
    fn color_k5_distinct_singletons() {
        let k5 = make_instance(&[1, 1, 1, 1, 1]).unwrap();
        let lists = dense(
            &k5,
            &[
                &[0, 5, 6, 7, 8],
                &[1, 5, 6, 7, 8],
                &[2, 5, 6, 7, 8],
                &[3, 5, 6, 7, 8],
                &[4, 5, 6, 7, 8],
            ],
        );
        let (coloring, trace) = color(&k5, &lists).unwrap();
        assert!(trace.base_case);
        assert_eq!(coloring.0, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn color_rejects_undersized_lists() {
        let inst = make_instance(&[3, 3]).unwrap();
        let lists = dense(
            &inst,
            &[&[0, 1], &[1, 2], &[0, 2], &[0, 1], &[1, 2], &[0, 2]],
        );
        match color(&inst, &lists) {
            Err(Error::InvalidLists(_)) => {}
            other => panic!("expected invalid-lists error, got {other:?}"),
        }
    }

    #[test]
    fn color_k33_bound_sized_lists() {
        let inst = make_instance(&[3, 3]).unwrap();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[1, 2, 3],
                &[2, 3, 4],
                &[0, 3, 4],
                &[0, 1, 4],
                &[0, 2, 4],
            ],
        );
        let (coloring, trace) = color(&inst, &lists).unwrap();
        assert!(validate_coloring(&inst, &lists, &coloring));
        let re = replay(&inst, &lists, &trace).unwrap();
        assert_eq!(re.0, coloring.0);
    }

    #[test]
    fn color_k24_bound_sized_lists() {
        let inst = make_instance(&[2, 4]).unwrap();
        let lists = dense(
            &inst,
            &[
                &[0, 1, 2],
                &[2, 3, 4],
                &[0, 1, 3],
                &[1, 2, 4],
                &[0, 3, 4],
                &[1, 3, 4],
            ],
        );
        let (coloring, trace) = color(&inst, &lists).unwrap();
        assert!(validate_coloring(&inst, &lists, &coloring));
        let re = replay(&inst, &lists, &trace).unwrap();
        assert_eq!(re.0, coloring.0);
    }
}
