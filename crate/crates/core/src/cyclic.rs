//! Enumeration of tuples of circular permutations.
//!
//! Each group is a cyclic sequence of distinct items stored with its least
//! item first, so a group of size `k` has `(k - 1)!` canonical forms. A
//! tuple of groups is enumerated lexicographically, first group most
//! significant, and any position in that order can be reached directly by
//! index, which is how the search is split across threads.

use rayon::prelude::*;

/// Number of canonical cyclic orders of a `k`-element set.
pub(crate) fn cyclic_count(k: usize) -> Option<u128> {
    (1..k.max(1) as u128).try_fold(1u128, |acc, f| acc.checked_mul(f))
}

/// Number of tuples of canonical cyclic orders, or `None` on overflow.
pub(crate) fn tuple_count(sizes: impl IntoIterator<Item = usize>) -> Option<u128> {
    sizes
        .into_iter()
        .try_fold(1u128, |acc, k| acc.checked_mul(cyclic_count(k)?))
}

/// Rotates `seq` so that its least element comes first.
pub(crate) fn canonical_rotation<T: Ord>(seq: &mut [T]) {
    if let Some(pos) = seq
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
    {
        seq.rotate_left(pos);
    }
}

fn next_permutation<T: Ord>(s: &mut [T]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        s.reverse();
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Writes the `rank`-th lexicographic permutation of `sorted` into `out`.
fn unrank_permutation<T: Copy>(sorted: &[T], mut rank: u128, out: &mut [T]) {
    let mut pool: Vec<T> = sorted.to_vec();
    let n = sorted.len();
    for (pos, slot) in out.iter_mut().enumerate() {
        let block = (1..(n - pos - 1) as u128 + 1).product::<u128>();
        let digit = (rank / block) as usize;
        rank %= block;
        *slot = pool.remove(digit);
    }
}

/// Current position in the enumeration of canonical cyclic-order tuples.
#[derive(Clone, Debug)]
pub(crate) struct Odometer {
    groups: Vec<Vec<u32>>,
}

impl Odometer {
    /// `base` holds each group's items in ascending order.
    pub(crate) fn first(base: &[Vec<u32>]) -> Self {
        Odometer {
            groups: base.to_vec(),
        }
    }

    pub(crate) fn at(base: &[Vec<u32>], mut index: u128) -> Self {
        let mut groups = base.to_vec();
        for g in groups.iter_mut().rev() {
            let radix = cyclic_count(g.len()).expect("group too large");
            let digit = index % radix;
            index /= radix;
            let rest: Vec<u32> = g[1..].to_vec();
            unrank_permutation(&rest, digit, &mut g[1..]);
        }
        Odometer { groups }
    }

    pub(crate) fn groups(&self) -> &[Vec<u32>] {
        &self.groups
    }

    /// Steps to the next tuple; returns `false` after wrapping to the first.
    pub(crate) fn advance(&mut self) -> bool {
        for g in self.groups.iter_mut().rev() {
            if next_permutation(&mut g[1..]) {
                return true;
            }
        }
        false
    }
}

/// Calls `visit` for every tuple with index in `[start, start + len)`.
pub(crate) fn for_range<F: FnMut(u64, &[Vec<u32>])>(
    base: &[Vec<u32>],
    start: u64,
    len: u64,
    mut visit: F,
) {
    let mut odo = Odometer::at(base, start as u128);
    for i in 0..len {
        visit(start + i, odo.groups());
        if i + 1 < len {
            odo.advance();
        }
    }
}

/// Splits `[0, total)` into contiguous `(start, len)` chunks, evaluates
/// `chunk` on each in parallel and returns the results in index order.
pub(crate) fn par_ranges<R, F>(total: u64, chunk: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64, u64) -> R + Sync,
{
    let threads = rayon::current_num_threads().max(1) as u64;
    let size = (total / (threads * 8)).clamp(256, 1 << 20);
    let starts: Vec<u64> = (0..total).step_by(size as usize).collect();
    starts
        .into_par_iter()
        .map(|start| chunk(start, size.min(total - start)))
        .collect()
}

/// Running minimum and maximum with the smallest index achieving each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Extremes {
    pub min: (i64, u64),
    pub max: (i64, u64),
}

impl Extremes {
    pub(crate) fn new(value: i64, index: u64) -> Self {
        Extremes {
            min: (value, index),
            max: (value, index),
        }
    }

    pub(crate) fn observe(&mut self, value: i64, index: u64) {
        if value < self.min.0 || (value == self.min.0 && index < self.min.1) {
            self.min = (value, index);
        }
        if value > self.max.0 || (value == self.max.0 && index < self.max.1) {
            self.max = (value, index);
        }
    }

    pub(crate) fn merge(mut self, other: Extremes) -> Self {
        self.observe(other.min.0, other.min.1);
        self.observe(other.max.0, other.max.1);
        self
    }

    pub(crate) fn fold(parts: impl IntoIterator<Item = Option<Extremes>>) -> Option<Extremes> {
        parts.into_iter().flatten().reduce(Extremes::merge)
    }
}
