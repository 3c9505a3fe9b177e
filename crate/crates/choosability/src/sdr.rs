//! Systems of distinct representatives via bipartite matching.
//!
//! `find_sdr` either picks one distinct color per set or returns a Hall
//! violator: an index set `S` whose union of sets has fewer than `|S|`
//! elements, certifying that no SDR exists.

use serde::{Deserialize, Serialize};

use crate::instance::ColorSet;

/// Result of an SDR search: representatives (one distinct color per set, in
/// family order) or a Hall-violator index set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SdrResult {
    Representatives(Vec<u32>),
    Violator(Vec<usize>),
}

impl SdrResult {
    pub fn representatives(&self) -> Option<&[u32]> {
        match self {
            SdrResult::Representatives(r) => Some(r),
            SdrResult::Violator(_) => None,
        }
    }

    pub fn is_sdr(&self) -> bool {
        matches!(self, SdrResult::Representatives(_))
    }
}

/// Find an SDR for the family by maximum bipartite matching (layered
/// augmenting-path search). Deterministic: sets are processed in index
/// order and colors in increasing order, so ties go to the smallest set
/// index, then the smallest color. The empty family has the empty SDR.
///
/// Both outcomes are re-checked against their defining condition before
/// being returned.
pub fn find_sdr(family: &[ColorSet]) -> SdrResult {
    let m = family.len();
    let max_color = family
        .iter()
        .filter_map(|s| s.max_color())
        .max()
        .map_or(0, |c| c as usize + 1);

    // match_set[i]: color matched to set i; match_color[c]: set matched to c.
    let mut match_set: Vec<Option<u32>> = vec![None; m];
    let mut match_color: Vec<Option<usize>> = vec![None; max_color];

    loop {
        // BFS layering from unmatched sets.
        const UNREACHED: u32 = u32::MAX;
        let mut dist = vec![UNREACHED; m];
        let mut queue = std::collections::VecDeque::new();
        for i in 0..m {
            if match_set[i].is_none() {
                dist[i] = 0;
                queue.push_back(i);
            }
        }
        let mut free_color_reachable = false;
        while let Some(i) = queue.pop_front() {
            for c in family[i].iter() {
                match match_color[c as usize] {
                    None => free_color_reachable = true,
                    Some(j) => {
                        if dist[j] == UNREACHED {
                            dist[j] = dist[i] + 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        if !free_color_reachable {
            break;
        }

        fn augment(
            family: &[ColorSet],
            match_set: &mut [Option<u32>],
            match_color: &mut [Option<usize>],
            dist: &mut [u32],
            i: usize,
        ) -> bool {
            let d = std::mem::replace(&mut dist[i], u32::MAX);
            for c in family[i].iter() {
                let ok = match match_color[c as usize] {
                    None => true,
                    Some(j) => {
                        dist[j] == d + 1 && augment(family, match_set, match_color, dist, j)
                    }
                };
                if ok {
                    match_set[i] = Some(c);
                    match_color[c as usize] = Some(i);
                    return true;
                }
            }
            false
        }

        let mut progressed = false;
        for i in 0..m {
            if match_set[i].is_none() && dist[i] == 0 {
                progressed |= augment(family, &mut match_set, &mut match_color, &mut dist, i);
            }
        }
        if !progressed {
            break;
        }
    }

    if match_set.iter().all(|x| x.is_some()) {
        let reps: Vec<u32> = match_set.into_iter().map(|x| x.unwrap()).collect();
        let mut seen = ColorSet::EMPTY;
        for (i, &c) in reps.iter().enumerate() {
            assert!(family[i].contains(c) && !seen.contains(c), "matching bug");
            seen.insert(c);
        }
        return SdrResult::Representatives(reps);
    }

    // Hall violator: sets reachable from an unmatched set via alternating
    // paths (set -> any color -> matching edge back to a set).
    let mut in_s = vec![false; m];
    let mut stack: Vec<usize> = (0..m).filter(|&i| match_set[i].is_none()).collect();
    for &i in &stack {
        in_s[i] = true;
    }
    while let Some(i) = stack.pop() {
        for c in family[i].iter() {
            if let Some(j) = match_color[c as usize] {
                if !in_s[j] {
                    in_s[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    let violator: Vec<usize> = (0..m).filter(|&i| in_s[i]).collect();
    let union = violator
        .iter()
        .fold(ColorSet::EMPTY, |acc, &i| acc | family[i]);
    assert!(union.len() < violator.len(), "violator certificate bug");
    SdrResult::Violator(violator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(colors: &[u32]) -> ColorSet {
        colors.iter().copied().collect()
    }

    #[test]
    fn two_equal_singletons_violate() {
        let r = find_sdr(&[set(&[0]), set(&[0])]);
        assert_eq!(r, SdrResult::Violator(vec![0, 1]));
    }

    #[test]
    fn triangle_of_pairs_has_sdr() {
        let r = find_sdr(&[set(&[0, 1]), set(&[1, 2]), set(&[2, 0])]);
        assert_eq!(r, SdrResult::Representatives(vec![0, 1, 2]));
    }

    #[test]
    fn empty_family_has_empty_sdr() {
        assert_eq!(find_sdr(&[]), SdrResult::Representatives(vec![]));
    }

    #[test]
    fn augmenting_reshuffles_earlier_choices() {
        // Set 0 grabs color 0 first, then set 1 forces it over to color 1.
        let r = find_sdr(&[set(&[0, 1]), set(&[0])]);
        assert_eq!(r, SdrResult::Representatives(vec![1, 0]));
    }

    #[test]
    fn violator_is_the_deficient_subfamily() {
        // Three sets crammed into two colors, one set off on its own.
        let r = find_sdr(&[set(&[0, 1]), set(&[0, 1]), set(&[0, 1]), set(&[5])]);
        assert_eq!(r, SdrResult::Violator(vec![0, 1, 2]));
    }

    #[test]
    fn deterministic() {
        let fam = vec![set(&[3, 7]), set(&[1, 3]), set(&[1, 7]), set(&[2, 9])];
        assert_eq!(find_sdr(&fam), find_sdr(&fam));
    }

    #[test]
    fn empty_set_in_family_violates() {
        let r = find_sdr(&[set(&[1]), set(&[])]);
        assert_eq!(r, SdrResult::Violator(vec![1]));
    }
}
