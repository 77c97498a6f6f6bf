use crate::kernel::{dispatch, Kernel, KernelTask, Word};
use crate::model::Instance;
use crate::objective::total_distance;

use super::{Method, Solution};

/// Fills positions from the farthest down: each step takes the remaining
/// airplane with the largest `φ(·, C)`, `C` being the consumption already
/// placed beyond it. Ties go to the lowest kernel index.
///
/// `first` pins an airplane to the farthest position. Returns indices in
/// farthest-first order.
pub(crate) fn greedy_fill<W: Word>(kernel: &Kernel<W>, first: Option<usize>) -> Vec<usize> {
    let n = kernel.len();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    let mut ctx = W::zero();
    if let Some(f) = first {
        remaining.retain(|&a| a != f);
        ctx = ctx.add(&kernel.k[f]);
        order.push(f);
    }
    while !remaining.is_empty() {
        let mut best = 0;
        for slot in 1..remaining.len() {
            if kernel.phi_cmp(remaining[slot], remaining[best], &ctx).is_gt() {
                best = slot;
            }
        }
        // `remove` keeps the remaining indices ascending for the tie-break
        let a = remaining.remove(best);
        ctx = ctx.add(&kernel.k[a]);
        order.push(a);
    }
    order
}

struct Greedy;

impl KernelTask for Greedy {
    type Output = Vec<usize>;
    fn run<W: Word>(self, kernel: &Kernel<W>) -> Vec<usize> {
        greedy_fill(kernel, None)
    }
}

/// One sequential feasible order, built greedily.
pub fn greedy_sequential(inst: &Instance) -> Solution {
    let by_id = inst.sorted_by_id();
    let far_first = dispatch(&by_id, Greedy);
    let ids = by_id.ids();
    let pi: Vec<_> = far_first.iter().rev().map(|&a| ids[a]).collect();
    let schedule = total_distance(inst, &pi).expect("greedy output is a permutation");
    Solution {
        schedule: Some(schedule),
        method: Method::Greedy,
        q_count: None,
        visited_nodes: inst.len() as u64,
        feasible_set: None,
    }
}
