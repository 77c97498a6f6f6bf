use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::kernel::{dispatch, Kernel, KernelTask, Word};
use crate::model::Instance;
use crate::objective::total_distance;

use super::{Method, SearchMode, SearchOptions, Solution};

/// Result of exploring one or more first-level branches.
#[derive(Default)]
struct Tally {
    count: u128,
    visited: u64,
    /// Best total with its drop-first order (kernel indices).
    best: Option<(BigRational, Vec<usize>)>,
    leaves: Vec<Vec<usize>>,
}

impl Tally {
    fn offer(&mut self, total: &BigRational, drop_first: impl FnOnce() -> Vec<usize>) {
        match &self.best {
            Some((t, _)) if total < t => {}
            Some((t, pi)) if total == t => {
                let candidate = drop_first();
                if candidate < *pi {
                    self.best = Some((total.clone(), candidate));
                }
            }
            _ => self.best = Some((total.clone(), drop_first())),
        }
    }

    /// Associative, commutative merge: counts add, optima by exact max
    /// then lexicographic order.
    fn merge(mut self, other: Tally) -> Tally {
        self.count += other.count;
        self.visited += other.visited;
        if let Some((total, pi)) = other.best {
            self.offer(&total, || pi);
        }
        self.leaves.extend(other.leaves);
        self
    }
}

struct Dfs<'k, W> {
    kernel: &'k Kernel<W>,
    mode: SearchMode,
    /// Farthest-first placement and the context beyond each entry.
    placed: Vec<usize>,
    beyond: Vec<W>,
    used: Vec<bool>,
    sum: W,
    total: W,
    partial: Vec<BigRational>,
    tally: Tally,
}

impl<'k, W: Word> Dfs<'k, W> {
    fn new(kernel: &'k Kernel<W>, mode: SearchMode) -> Self {
        Dfs {
            kernel,
            mode,
            placed: Vec::with_capacity(kernel.len()),
            beyond: Vec::with_capacity(kernel.len()),
            used: vec![false; kernel.len()],
            sum: W::zero(),
            total: kernel.k.iter().fold(W::zero(), |acc, k| acc.add(k)),
            partial: vec![BigRational::zero()],
            tally: Tally::default(),
        }
    }

    /// Checks a candidate for the next (lower) position against every
    /// placed airplane, at both neighbouring contexts.
    fn admits(&self, a: usize) -> bool {
        let k = self.kernel;
        self.placed.iter().zip(&self.beyond).all(|(&b, top)| {
            k.phi_le(a, b, top) || k.phi_le(a, b, &self.sum.sub(&k.k[b]))
        })
    }

    /// True when some unplaced airplane can no longer be put anywhere.
    ///
    /// For a fixed pair, `φ(x, C) ≤ φ(b, C)` is linear in `C`, so the
    /// contexts that accept it form a half-line. An unplaced `x` will sit
    /// on a context between `sum` (placed next) and `total − c_x` (dropped
    /// first); if the pair fails at both ends it fails everywhere between.
    fn doomed(&self) -> bool {
        let k = self.kernel;
        (0..k.len()).filter(|&x| !self.used[x]).any(|x| {
            let deepest = self.total.sub(&k.k[x]);
            self.placed.iter().zip(&self.beyond).any(|(&b, top)| {
                !k.phi_le(x, b, top)
                    && !k.phi_le(x, b, &self.sum.sub(&k.k[b]))
                    && !k.phi_le(x, b, &deepest.sub(&k.k[b]))
            })
        })
    }

    fn push(&mut self, a: usize) {
        if self.mode.optimizes() {
            let leg = self.kernel.leg(a, &self.sum);
            let next = self.partial.last().expect("partial totals start at zero") + leg;
            self.partial.push(next);
        }
        self.tally.visited += 1;
        self.used[a] = true;
        self.placed.push(a);
        self.beyond.push(self.sum.clone());
        self.sum = self.sum.add(&self.kernel.k[a]);
    }

    fn pop(&mut self) {
        let a = self.placed.pop().expect("pop after push");
        self.sum = self.beyond.pop().expect("pop after push");
        self.used[a] = false;
        if self.mode.optimizes() {
            self.partial.pop();
        }
    }

    fn drop_first(&self) -> Vec<usize> {
        self.placed.iter().rev().copied().collect()
    }

    fn leaf(&mut self) {
        self.tally.count += 1;
        if self.mode.optimizes() {
            let total = self.partial.last().expect("non-empty").clone();
            let pi = self.drop_first();
            self.tally.offer(&total, || pi);
        }
        if self.mode == SearchMode::EnumerateAll {
            let pi = self.drop_first();
            self.tally.leaves.push(pi);
        }
    }

    fn descend(&mut self) {
        if self.placed.len() == self.kernel.len() {
            self.leaf();
            return;
        }
        if self.doomed() {
            return;
        }
        for a in 0..self.kernel.len() {
            if !self.used[a] && self.admits(a) {
                self.push(a);
                self.descend();
                self.pop();
            }
        }
    }

    fn branch(kernel: &'k Kernel<W>, mode: SearchMode, farthest: usize) -> Tally {
        let mut dfs = Dfs::new(kernel, mode);
        dfs.push(farthest);
        dfs.descend();
        dfs.tally
    }
}

struct Search {
    mode: SearchMode,
    workers: usize,
}

impl KernelTask for Search {
    type Output = Tally;

    fn run<W: Word>(self, kernel: &Kernel<W>) -> Tally {
        let n = kernel.len();
        let mode = self.mode;
        if self.workers <= 1 || n < 2 {
            return (0..n)
                .map(|a| Dfs::branch(kernel, mode, a))
                .fold(Tally::default(), Tally::merge);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool");
        let tallies: Vec<Tally> = pool.install(|| {
            (0..n)
                .into_par_iter()
                .map(|a| Dfs::branch(kernel, mode, a))
                .collect()
        });
        tallies.into_iter().fold(Tally::default(), Tally::merge)
    }
}

/// Enumerates the sequential feasible orders by backtracking from the
/// farthest position down, admitting a candidate only if it is acceptable
/// against every airplane already placed above it.
pub fn sequential_search(inst: &Instance, opts: &SearchOptions) -> Solution {
    let by_id = inst.sorted_by_id();
    let ids = by_id.ids();
    let tally = dispatch(
        &by_id,
        Search {
            mode: opts.mode,
            workers: opts.worker_hint,
        },
    );
    let to_ids = |pi: &[usize]| pi.iter().map(|&a| ids[a]).collect::<Vec<_>>();

    let schedule = tally.best.as_ref().map(|(total, pi)| {
        let s = total_distance(inst, &to_ids(pi)).expect("search yields permutations");
        debug_assert_eq!(s.total.as_rational().cmp(total), Ordering::Equal);
        s
    });
    let feasible_set = (opts.mode == SearchMode::EnumerateAll)
        .then(|| tally.leaves.iter().map(|pi| to_ids(pi)).collect::<BTreeSet<_>>());
    Solution {
        schedule,
        method: Method::SequentialSearch,
        q_count: opts.mode.counts().then(|| BigUint::from(tally.count)),
        visited_nodes: tally.visited,
        feasible_set,
    }
}
