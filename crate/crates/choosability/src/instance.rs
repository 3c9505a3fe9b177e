//! Core data model: complete multipartite instances, list assignments over a
//! dense color pot, part-size profiles, and the ceiling bound on the choice
//! number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Maximum number of distinct colors supported by [`ColorSet`].
pub const MAX_COLORS: usize = 128;

// ---------------------------------------------------------------------------
// ColorSet
// ---------------------------------------------------------------------------

/// A set of colors, stored as a 128-bit mask. Colors are dense non-negative
/// integers below [`MAX_COLORS`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn singleton(c: u32) -> Self {
        debug_assert!((c as usize) < MAX_COLORS);
        ColorSet(1u128 << c)
    }

    /// All colors in `0..p`.
    pub fn full(p: usize) -> Self {
        debug_assert!(p <= MAX_COLORS);
        if p == MAX_COLORS {
            ColorSet(u128::MAX)
        } else {
            ColorSet((1u128 << p) - 1)
        }
    }

    pub fn insert(&mut self, c: u32) {
        debug_assert!((c as usize) < MAX_COLORS);
        self.0 |= 1u128 << c;
    }

    pub fn remove(&mut self, c: u32) {
        self.0 &= !(1u128 << c);
    }

    pub fn contains(self, c: u32) -> bool {
        (c as usize) < MAX_COLORS && self.0 >> c & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest color in the set, if any.
    pub fn min_color(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// Largest color in the set, if any.
    pub fn max_color(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    /// Iterate colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros();
                bits &= bits - 1;
                Some(c)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_bits(bits: u128) -> Self {
        ColorSet(bits)
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl std::ops::BitAnd for ColorSet {
    type Output = ColorSet;
    fn bitand(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for ColorSet {
    type Output = ColorSet;
    fn bitor(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for ColorSet {
    fn bitor_assign(&mut self, rhs: ColorSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::Sub for ColorSet {
    type Output = ColorSet;
    fn sub(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

/// A complete multipartite graph given by its part sizes. Vertices are
/// indexed part-major: the vertices of part `i` precede those of part `i+1`,
/// and the indexing is stable — all tie-breaking elsewhere references it.
/// Two vertices are adjacent iff they lie in different parts.
#[derive(Clone, PartialEq, Eq)]
pub struct Instance {
    part_sizes: Vec<usize>,
    n: usize,
    vertex_part: Vec<usize>,
    part_start: Vec<usize>,
}

impl Instance {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidInstance("no parts given".into()));
        }
        if let Some(&bad) = part_sizes.iter().find(|&&s| s == 0) {
            return Err(Error::InvalidInstance(format!(
                "part size must be positive, got {bad}"
            )));
        }
        let n: usize = part_sizes.iter().sum();
        let mut vertex_part = Vec::with_capacity(n);
        let mut part_start = Vec::with_capacity(part_sizes.len());
        for (p, &size) in part_sizes.iter().enumerate() {
            part_start.push(vertex_part.len());
            vertex_part.extend(std::iter::repeat(p).take(size));
        }
        Ok(Instance {
            part_sizes,
            n,
            vertex_part,
            part_start,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts; equals the chromatic number of the graph.
    pub fn k(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.part_sizes[part]
    }

    /// Part containing vertex `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.vertex_part[v]
    }

    /// Vertex range of part `p` under the part-major indexing.
    pub fn part_vertices(&self, p: usize) -> std::ops::Range<usize> {
        self.part_start[p]..self.part_start[p] + self.part_sizes[p]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.vertex_part[u] != self.vertex_part[v]
    }

    /// Counts of parts by size.
    pub fn profile(&self) -> Profile {
        let mut p = Profile {
            k1: 0,
            k2: 0,
            k3: 0,
            k4: 0,
            k_big: 0,
            n: self.n,
            k: self.k(),
        };
        for &s in &self.part_sizes {
            match s {
                1 => p.k1 += 1,
                2 => p.k2 += 1,
                3 => p.k3 += 1,
                4 => p.k4 += 1,
                _ => p.k_big += 1,
            }
        }
        p
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Instance{:?}", self.part_sizes)
    }
}

/// Build an instance from part sizes with canonical part-major vertex
/// indexing.
pub fn make_instance(part_sizes: &[usize]) -> Result<Instance> {
    Instance::new(part_sizes.to_vec())
}

// ---------------------------------------------------------------------------
// main bound
// ---------------------------------------------------------------------------

/// The ceiling bound `max{k, ceil((n+k-1)/3)}` on the choice number of an
/// `n`-vertex graph with chromatic number `k`. Monotone non-decreasing in
/// `n` for fixed `k`, and never below `k`.
pub fn main_bound(n: usize, k: usize) -> Result<usize> {
    if k == 0 || n < k {
        return Err(Error::InvalidParameter(format!(
            "no {k}-chromatic graph on {n} vertices"
        )));
    }
    Ok(k.max((n + k - 1).div_ceil(3)))
}

// ---------------------------------------------------------------------------
// ListAssignment
// ---------------------------------------------------------------------------

/// Per-vertex finite sets of allowed colors. Colors are renumbered on
/// ingestion so that the pot (the union of all lists) is `{0..p-1}`; the
/// original color values are kept for serialization.
#[derive(Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
    /// Dense color id -> external color value; strictly increasing.
    names: Vec<u32>,
}

impl ListAssignment {
    /// Ingest external lists (one per vertex, part-major order). The pot is
    /// renumbered to `{0..p-1}` preserving the numeric order of colors.
    pub fn new(instance: &Instance, lists: &[Vec<u32>]) -> Result<Self> {
        if lists.len() != instance.n() {
            return Err(Error::InvalidLists(format!(
                "expected {} lists, got {}",
                instance.n(),
                lists.len()
            )));
        }
        let mut names: Vec<u32> = lists.iter().flatten().copied().collect();
        names.sort_unstable();
        names.dedup();
        if names.len() > MAX_COLORS {
            return Err(Error::InvalidLists(format!(
                "pot has {} colors; at most {MAX_COLORS} supported",
                names.len()
            )));
        }
        let dense = |c: u32| names.binary_search(&c).unwrap() as u32;
        let lists = lists
            .iter()
            .map(|l| l.iter().map(|&c| dense(c)).collect())
            .collect();
        Ok(ListAssignment { lists, names })
    }

    /// Wrap already-dense lists (colors `0..p` for some `p`); gaps in the
    /// union are compacted away.
    pub fn from_dense(lists: Vec<ColorSet>) -> Self {
        let pot = lists.iter().fold(ColorSet::EMPTY, |acc, &l| acc | l);
        let names: Vec<u32> = pot.iter().collect();
        let contiguous = names.len() == pot.max_color().map_or(0, |m| m as usize + 1);
        let lists = if contiguous {
            lists
        } else {
            lists
                .iter()
                .map(|l| {
                    l.iter()
                        .map(|c| names.binary_search(&c).unwrap() as u32)
                        .collect()
                })
                .collect()
        };
        ListAssignment { lists, names }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    /// Size of the pot, the union of all lists.
    pub fn pot_size(&self) -> usize {
        self.names.len()
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    /// External color value of a dense color id.
    pub fn external_color(&self, dense: u32) -> u32 {
        self.names[dense as usize]
    }

    /// Lists mapped back to external color values, sorted.
    pub fn external_lists(&self) -> Vec<Vec<u32>> {
        self.lists
            .iter()
            .map(|l| l.iter().map(|c| self.names[c as usize]).collect())
            .collect()
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.lists.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// Coloring
// ---------------------------------------------------------------------------

/// A color per vertex (dense color ids, part-major vertex order).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn external(&self, lists: &ListAssignment) -> Vec<u32> {
        self.0.iter().map(|&c| lists.external_color(c)).collect()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// ---------------------------------------------------------------------------
// Profile and arithmetic identities
// ---------------------------------------------------------------------------

/// Counts of parts by size: `k1..k4` for sizes 1–4, `k_big` for size >= 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
    pub k_big: usize,
    pub n: usize,
    pub k: usize,
}

impl Profile {
    /// Build a profile directly from small-part counts (no parts of size >= 5).
    pub fn from_counts(k1: usize, k2: usize, k3: usize, k4: usize) -> Profile {
        Profile {
            k1,
            k2,
            k3,
            k4,
            k_big: 0,
            n: k1 + 2 * k2 + 3 * k3 + 4 * k4,
            k: k1 + k2 + k3 + k4,
        }
    }
}

/// Outcome of checking one arithmetic identity: `exact` records whether every
/// thirds-fraction in it is an integer, `satisfied` whether the relation
/// holds (evaluated exactly, with all terms tripled).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub exact: bool,
    pub satisfied: bool,
}

/// Report on the three part-count identities relating `(n+k-1)/3` to the
/// profile (see [`arith_identities`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithReport {
    pub a: IdentityCheck,
    pub b: IdentityCheck,
    pub c: IdentityCheck,
}

impl ArithReport {
    pub fn all_satisfied(&self) -> bool {
        self.a.satisfied && self.b.satisfied && self.c.satisfied
    }
}

/// Check the three identities tying the bound to the profile of a graph with
/// all parts of size at most 4:
///
/// (a) `(n+k-1)/3 = k + k4 - (k1-k3+k4+1)/3`, both fractions integral
///     whenever `3 | n+k-1`;
/// (b) `(n+k-1)/3 + k/3 >= k + k4 + (2*k3-1)/3`;
/// (c) `2(n+k-1)/3 = n + (k1-k3-2*k4-2)/3 = k + k3 + 2*k4 + (k+2*k2+k3-2)/3`.
///
/// Profiles with a part of size >= 5 are rejected.
pub fn arith_identities(p: &Profile) -> Result<ArithReport> {
    if p.k_big > 0 {
        return Err(Error::UnsupportedProfile(format!(
            "{} part(s) of size >= 5 present",
            p.k_big
        )));
    }
    let (n, k) = (p.n as i64, p.k as i64);
    let (k1, k2, k3, k4) = (p.k1 as i64, p.k2 as i64, p.k3 as i64, p.k4 as i64);
    let nk1 = n + k - 1;

    let a = IdentityCheck {
        exact: nk1 % 3 == 0 && (k1 - k3 + k4 + 1).rem_euclid(3) == 0,
        satisfied: nk1 == 3 * (k + k4) - (k1 - k3 + k4 + 1),
    };
    let b = IdentityCheck {
        exact: nk1 % 3 == 0 && k % 3 == 0 && (2 * k3 - 1).rem_euclid(3) == 0,
        satisfied: nk1 + k >= 3 * (k + k4) + 2 * k3 - 1,
    };
    let c = IdentityCheck {
        exact: (2 * nk1) % 3 == 0
            && (k1 - k3 - 2 * k4 - 2).rem_euclid(3) == 0
            && (k + 2 * k2 + k3 - 2).rem_euclid(3) == 0,
        satisfied: 2 * nk1 == 3 * n + (k1 - k3 - 2 * k4 - 2)
            && 2 * nk1 == 3 * (k + k3 + 2 * k4) + (k + 2 * k2 + k3 - 2),
    };
    Ok(ArithReport { a, b, c })
}

// ---------------------------------------------------------------------------
// JSON instance format
// ---------------------------------------------------------------------------

/// Wire format: `{"parts":[3,3],"lists":[[0,1],[1,2],...]}`. `lists` is
/// optional; vertex `i`'s list is the `i`-th entry under part-major indexing.
/// Writers emit sorted color arrays. Unknown fields are ignored on read.
#[derive(Serialize, Deserialize)]
pub struct InstanceJson {
    pub parts: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lists: Option<Vec<Vec<u32>>>,
}

/// Parse the JSON instance format.
pub fn read_instance_json(text: &str) -> Result<(Instance, Option<ListAssignment>)> {
    let raw: InstanceJson = serde_json::from_str(text)?;
    let instance = Instance::new(raw.parts)?;
    let lists = match raw.lists {
        Some(lists) => Some(ListAssignment::new(&instance, &lists)?),
        None => None,
    };
    Ok((instance, lists))
}

/// Serialize an instance (and optionally its lists) to the JSON format.
pub fn write_instance_json(instance: &Instance, lists: Option<&ListAssignment>) -> String {
    let raw = InstanceJson {
        parts: instance.part_sizes().to_vec(),
        lists: lists.map(|l| l.external_lists()),
    };
    serde_json::to_string(&raw).expect("instance serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_instance_basic() {
        let tri = make_instance(&[1, 1, 1]).unwrap();
        assert_eq!((tri.n(), tri.k()), (3, 3));
        let k33 = make_instance(&[3, 3]).unwrap();
        assert_eq!((k33.n(), k33.k()), (6, 2));
        assert!(k33.adjacent(0, 3));
        assert!(!k33.adjacent(0, 2));
        let g = make_instance(&[2, 2, 4]).unwrap();
        assert_eq!((g.n(), g.k()), (8, 3));
        assert_eq!(g.part_vertices(2), 4..8);
    }

    #[test]
    fn make_instance_rejects_bad_input() {
        assert!(make_instance(&[]).is_err());
        assert!(make_instance(&[2, 0, 1]).is_err());
    }

    #[test]
    fn main_bound_values() {
        assert_eq!(main_bound(9, 3).unwrap(), 4);
        for k in 1..40 {
            assert_eq!(main_bound(k, k).unwrap(), k);
            assert_eq!(main_bound(2 * k + 1, k).unwrap(), k);
        }
        assert!(main_bound(2, 3).is_err());
    }

    #[test]
    fn profile_counts() {
        let p = make_instance(&[3, 3]).unwrap().profile();
        assert_eq!((p.k1, p.k2, p.k3, p.k4), (0, 0, 2, 0));
        let p = make_instance(&[1, 4]).unwrap().profile();
        assert_eq!((p.k1, p.k2, p.k3, p.k4), (1, 0, 0, 1));
        let p = make_instance(&[2, 2, 4]).unwrap().profile();
        assert_eq!((p.k1, p.k2, p.k3, p.k4), (0, 2, 0, 1));
        let p = make_instance(&[5, 1]).unwrap().profile();
        assert_eq!((p.k1, p.k_big), (1, 1));
    }

    #[test]
    fn arith_identity_examples() {
        // n=5, k=2: (n+k-1)/3 = 2 = 2+1-1
        let r = arith_identities(&Profile::from_counts(1, 0, 0, 1)).unwrap();
        assert!(r.a.exact && r.a.satisfied);
        // n=6, k=2: 7/3 is fractional
        let r = arith_identities(&Profile::from_counts(0, 0, 2, 0)).unwrap();
        assert!(!r.a.exact);
        assert!(r.a.satisfied);
        // n=7, k=3: 3 = 3+1-1
        let r = arith_identities(&Profile::from_counts(1, 1, 0, 1)).unwrap();
        assert!(r.a.exact && r.a.satisfied);

        let big = make_instance(&[5, 1]).unwrap().profile();
        assert!(arith_identities(&big).is_err());
    }

    #[test]
    fn identities_hold_on_all_small_profiles() {
        // Exhaustive over all profiles with n <= 20; (a) and (c) must hold
        // exactly whenever 3 | n+k-1.
        for k1 in 0..=20usize {
            for k2 in 0..=10usize {
                for k3 in 0..=6usize {
                    for k4 in 0..=5usize {
                        let n = k1 + 2 * k2 + 3 * k3 + 4 * k4;
                        let k = k1 + k2 + k3 + k4;
                        if n > 20 || k == 0 {
                            continue;
                        }
                        let p = Profile::from_counts(k1, k2, k3, k4);
                        let r = arith_identities(&p).unwrap();
                        assert!(r.all_satisfied(), "profile {p:?}");
                        if (n + k - 1) % 3 == 0 {
                            assert!(r.a.exact, "identity (a) not exact on {p:?}");
                            assert!(r.c.exact, "identity (c) not exact on {p:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn list_assignment_renumbers_pot() {
        let inst = make_instance(&[1, 1]).unwrap();
        let lists = ListAssignment::new(&inst, &[vec![5, 9], vec![9, 40]]).unwrap();
        assert_eq!(lists.pot_size(), 3);
        assert_eq!(lists.list(0).to_vec(), vec![0, 1]);
        assert_eq!(lists.list(1).to_vec(), vec![1, 2]);
        assert_eq!(lists.external_lists(), vec![vec![5, 9], vec![9, 40]]);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"parts":[3,3],"lists":[[0,1],[1,2],[2,0],[0,1],[1,2],[2,0]]}"#;
        let (inst, lists) = read_instance_json(text).unwrap();
        let lists = lists.unwrap();
        assert_eq!(inst.part_sizes(), &[3, 3]);
        assert_eq!(lists.pot_size(), 3);
        let emitted = write_instance_json(&inst, Some(&lists));
        let (inst2, lists2) = read_instance_json(&emitted).unwrap();
        assert_eq!(inst.part_sizes(), inst2.part_sizes());
        assert_eq!(lists, lists2.unwrap());
    }

    #[test]
    fn colorset_ops() {
        let a: ColorSet = [0, 2, 5].into_iter().collect();
        let b: ColorSet = [2, 3].into_iter().collect();
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a | b).len(), 4);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.min_color(), Some(0));
        assert_eq!(ColorSet::full(3).to_vec(), vec![0, 1, 2]);
        assert!(ColorSet::EMPTY.min_color().is_none());
    }
}
