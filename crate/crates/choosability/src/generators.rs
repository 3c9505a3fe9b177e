//! Hard-instance families and closed-form choice-number formulas.
//!
//! Two classical constructions produce non-colorable list assignments on
//! `K_{m*k}` (k parts of size m):
//!
//! - [`gen_small_m`]: a universe of `2k-1` colors is split into `m` blocks
//!   `X_1..X_m`; vertex `i` of every part gets the complement of `X_i`.
//!   Any proper coloring needs two disjoint colors per part, hence `2k`
//!   colors, one more than the universe has.
//! - [`gen_large_m`]: all `(k-1)j`-subsets of a `(kj-1)`-color universe,
//!   assigned identically on each part. Using fewer than `j` colors on a
//!   part strands one of its lists, so `kj` colors are needed.
//!
//! [`gen_sharpness`] interpolates the small-m family with singleton parts
//! holding the full pot, and [`gen_eoos`] returns the small complete
//! multipartite graphs known not to be `k`-choosable near `n = 2k+2`.

use crate::instance::{ColorSet, Instance, ListAssignment};
use crate::{Error, Result};

/// Default cap on the part size of [`gen_large_m`]; the binomial count
/// explodes quickly.
pub const LARGE_M_CAP: u64 = 10_000;

/// Split `{0..universe}` into `count` contiguous blocks whose sizes differ
/// by at most one, smaller blocks first.
fn contiguous_split(universe: usize, count: usize) -> Vec<ColorSet> {
    let q = universe / count;
    let r = universe % count;
    let mut blocks = Vec::with_capacity(count);
    let mut next = 0u32;
    for i in 0..count {
        let size = if i < count - r { q } else { q + 1 };
        blocks.push((next..next + size as u32).collect());
        next += size as u32;
    }
    blocks
}

/// `K_{m*k}` with the cover-design lists over a `2k-1` color universe:
/// vertex `i` of each part gets `U - X_i` for the contiguous split
/// `X_1..X_m`. Every list has at least `floor(2k(m-1)/m) - 1` colors, and
/// the assignment admits no proper list coloring.
pub fn gen_small_m(m: usize, k: usize) -> Result<(Instance, ListAssignment)> {
    if m < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "small-m family needs m >= 2 and k >= 2, got m={m}, k={k}"
        )));
    }
    let universe = 2 * k - 1;
    let full = ColorSet::full(universe);
    let blocks = contiguous_split(universe, m);
    let instance = Instance::new(vec![m; k])?;
    let lists: Vec<ColorSet> = (0..k)
        .flat_map(|_| blocks.iter().map(|&x| full - x))
        .collect();
    Ok((instance, ListAssignment::from_dense(lists)))
}

/// `K_{1*i,3*(k-i)}` over a pot of `2k-1-i` colors: each singleton part
/// holds the full pot, each 3-part carries the `m = 3` split pattern of
/// [`gen_small_m`] on the reduced pot. `n = 3k - 2i`.
pub fn gen_sharpness(k: usize, i: usize) -> Result<(Instance, ListAssignment)> {
    if k == 0 || i >= k {
        return Err(Error::InvalidParameter(format!(
            "sharpness family needs 0 <= i < k, got k={k}, i={i}"
        )));
    }
    let universe = 2 * k - 1 - i;
    let full = ColorSet::full(universe);
    let blocks = contiguous_split(universe, 3);
    let mut sizes = vec![1; i];
    sizes.extend(std::iter::repeat(3).take(k - i));
    let instance = Instance::new(sizes)?;
    let mut lists = vec![full; i];
    for _ in 0..k - i {
        lists.extend(blocks.iter().map(|&x| full - x));
    }
    Ok((instance, ListAssignment::from_dense(lists)))
}

fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// All `size`-subsets of `{0..m}` in lexicographic order of their sorted
/// element tuples.
fn lex_subsets(m: usize, size: usize) -> Vec<ColorSet> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(ColorSet::EMPTY);
        return out;
    }
    if size > m {
        return out;
    }
    let mut idx: Vec<u32> = (0..size as u32).collect();
    loop {
        out.push(idx.iter().copied().collect());
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + 1 <= (m - size + i) as u32 {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `K_{m*k}` for `m = C(kj-1, (k-1)j)`, assigning the `m` distinct
/// `(k-1)j`-subsets of a `(kj-1)`-color universe to each part's vertices in
/// lexicographic order. Each list omits exactly `j-1` colors. Errors when
/// `m` exceeds [`LARGE_M_CAP`].
pub fn gen_large_m(k: usize, j: usize) -> Result<(Instance, ListAssignment)> {
    gen_large_m_capped(k, j, LARGE_M_CAP)
}

/// [`gen_large_m`] with an explicit cap on the part size `m`.
pub fn gen_large_m_capped(k: usize, j: usize, cap: u64) -> Result<(Instance, ListAssignment)> {
    if k < 2 || j < 1 {
        return Err(Error::InvalidParameter(format!(
            "large-m family needs k >= 2 and j >= 1, got k={k}, j={j}"
        )));
    }
    let universe = k * j - 1;
    let list_size = (k - 1) * j;
    let m = binomial(universe as u64, list_size as u64).ok_or(Error::TooLarge {
        m: u64::MAX,
        cap,
    })?;
    if m > cap {
        return Err(Error::TooLarge { m, cap });
    }
    let subsets = lex_subsets(universe, list_size);
    debug_assert_eq!(subsets.len() as u64, m);
    let instance = Instance::new(vec![m as usize; k])?;
    let lists: Vec<ColorSet> = (0..k).flat_map(|_| subsets.iter().copied()).collect();
    Ok((instance, ListAssignment::from_dense(lists)))
}

/// The complete multipartite graphs on a few more than `2k` vertices that
/// are known not to be `k`-choosable: `K_{2*(k-1),4*1}` and
/// `K_{2*(k-1),5*1}` always, plus `K_{1*(k/2-1),3*(k/2+1)}` when `k` is
/// even. Graphs only; witnesses come from the oracle.
pub fn gen_eoos(k: usize) -> Result<Vec<Instance>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "family needs k >= 2, got k={k}"
        )));
    }
    let mut out = Vec::new();
    let mut sizes = vec![2; k - 1];
    sizes.push(4);
    out.push(Instance::new(sizes)?);
    let mut sizes = vec![2; k - 1];
    sizes.push(5);
    out.push(Instance::new(sizes)?);
    if k % 2 == 0 {
        let mut sizes = vec![1; k / 2 - 1];
        sizes.extend(std::iter::repeat(3).take(k / 2 + 1));
        out.push(Instance::new(sizes)?);
    }
    Ok(out)
}

/// Exact choice number of `K_{1*k1,3*k3}`: `max{k, ceil((n+k-1)/3)}` with
/// `k = k1+k3` and `n = k1+3*k3`. Requires at least one part.
pub fn ohba_formula(k1: usize, k3: usize) -> usize {
    assert!(k1 + k3 >= 1, "need at least one part");
    let k = k1 + k3;
    let n = k1 + 3 * k3;
    k.max((n + k - 1).div_ceil(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::find_coloring;

    #[test]
    fn small_m_2_2_matches_hand_computation() {
        let (inst, lists) = gen_small_m(2, 2).unwrap();
        assert_eq!(inst.part_sizes(), &[2, 2]);
        // U = {0,1,2}, X1 = {0}, X2 = {1,2}
        assert_eq!(
            lists.external_lists(),
            vec![vec![1, 2], vec![0], vec![1, 2], vec![0]]
        );
        assert!(find_coloring(&inst, &lists).unwrap().is_none());
    }

    #[test]
    fn small_m_instances_are_non_colorable() {
        for m in 2..=3 {
            for k in 2..=3 {
                let (inst, lists) = gen_small_m(m, k).unwrap();
                assert!(
                    find_coloring(&inst, &lists).unwrap().is_none(),
                    "small-m ({m},{k}) unexpectedly colorable"
                );
            }
        }
    }

    #[test]
    fn small_m_list_size_floor() {
        for m in 2..=6usize {
            for k in 2..=6usize {
                let (_, lists) = gen_small_m(m, k).unwrap();
                let floor = (2 * k * (m - 1)) / m - 1;
                assert!(
                    lists.min_list_size() >= floor,
                    "floor violated at ({m},{k})"
                );
            }
        }
        // and the concrete value at (4,3)
        let (_, lists) = gen_small_m(4, 3).unwrap();
        assert!(lists.min_list_size() >= 3);
    }

    #[test]
    fn small_m_rejects_out_of_range() {
        assert!(gen_small_m(1, 2).is_err());
        assert!(gen_small_m(2, 1).is_err());
    }

    #[test]
    fn sharpness_examples() {
        // (k=2,i=1): K_{1,3} over two colors, singleton list is the pot.
        let (inst, lists) = gen_sharpness(2, 1).unwrap();
        assert_eq!(inst.part_sizes(), &[1, 3]);
        assert_eq!(lists.pot_size(), 2);
        assert_eq!(lists.list(0).to_vec(), vec![0, 1]);
        assert!(find_coloring(&inst, &lists).unwrap().is_none());

        // (k=3,i=1): n = 3k-2i = 7
        let (inst, _) = gen_sharpness(3, 1).unwrap();
        assert_eq!(inst.n(), 7);

        assert!(gen_sharpness(2, 2).is_err());
    }

    #[test]
    fn sharpness_instances_are_non_colorable() {
        for k in 1..=3 {
            for i in 0..k {
                let (inst, lists) = gen_sharpness(k, i).unwrap();
                assert_eq!(inst.n(), 3 * k - 2 * i);
                assert!(
                    find_coloring(&inst, &lists).unwrap().is_none(),
                    "sharpness ({k},{i}) unexpectedly colorable"
                );
            }
        }
    }

    #[test]
    fn large_m_2_2_is_the_all_pairs_assignment() {
        let (inst, lists) = gen_large_m(2, 2).unwrap();
        assert_eq!(inst.part_sizes(), &[3, 3]);
        assert_eq!(
            lists.external_lists(),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
        assert!(find_coloring(&inst, &lists).unwrap().is_none());
    }

    #[test]
    fn large_m_small_cases() {
        // (2,1): K_2, both lists {0}
        let (inst, lists) = gen_large_m(2, 1).unwrap();
        assert_eq!(inst.part_sizes(), &[1, 1]);
        assert_eq!(lists.external_lists(), vec![vec![0], vec![0]]);
        assert!(find_coloring(&inst, &lists).unwrap().is_none());

        // (3,1): K_3, all lists {0,1}
        let (inst, lists) = gen_large_m(3, 1).unwrap();
        assert_eq!(inst.part_sizes(), &[1, 1, 1]);
        assert!(lists.lists().iter().all(|l| l.to_vec() == vec![0, 1]));
        assert!(find_coloring(&inst, &lists).unwrap().is_none());
    }

    #[test]
    fn large_m_lists_omit_j_minus_1_colors() {
        for (k, j) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let (_, lists) = gen_large_m(k, j).unwrap();
            let universe = k * j - 1;
            assert_eq!(lists.pot_size(), universe);
            assert!(lists.lists().iter().all(|l| universe - l.len() == j - 1));
        }
    }

    #[test]
    fn large_m_cap_names_m() {
        match gen_large_m(2, 9) {
            Err(Error::TooLarge { m, cap }) => {
                assert_eq!(m, 24310);
                assert_eq!(cap, LARGE_M_CAP);
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn eoos_families() {
        let fams = gen_eoos(2).unwrap();
        let sizes: Vec<_> = fams.iter().map(|i| i.part_sizes().to_vec()).collect();
        assert_eq!(sizes, vec![vec![2, 4], vec![2, 5], vec![3, 3]]);

        let fams = gen_eoos(3).unwrap();
        let sizes: Vec<_> = fams.iter().map(|i| i.part_sizes().to_vec()).collect();
        assert_eq!(sizes, vec![vec![2, 2, 4], vec![2, 2, 5]]);

        let fams = gen_eoos(4).unwrap();
        assert_eq!(fams[2].part_sizes(), &[1, 3, 3, 3]);
    }

    #[test]
    fn ohba_formula_values() {
        assert_eq!(ohba_formula(0, 2), 3);
        assert_eq!(ohba_formula(1, 1), 2);
        for k1 in 1..10 {
            assert_eq!(ohba_formula(k1, 0), k1);
        }
        // Agreement with the K_{3*k} special case for all k <= 100.
        for k in 1..=100usize {
            assert_eq!(ohba_formula(0, k), (4 * k - 1).div_ceil(3));
        }
    }

    #[test]
    fn lex_subsets_are_lexicographic() {
        let subs = lex_subsets(4, 2);
        let as_vecs: Vec<Vec<u32>> = subs.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            as_vecs,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
