//! Bipartite matching between "demands" and hypergraph edges.
//!
//! A demand asks for one edge that contains every vertex of `required` and
//! at least one vertex of `any`. A consecutive pair `{a, b}` of a Berge path
//! is the demand `required = {a, b}`, `any = everything`. A set of demands
//! can be served by pairwise distinct edges iff Hall's condition holds,
//! which is what an augmenting-path matcher decides.

use crate::hypergraph::VertexMask;

const FREE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Demand {
    pub required: VertexMask,
    pub any: VertexMask,
}

impl Demand {
    pub fn pair(a: VertexMask, b: VertexMask) -> Self {
        Demand {
            required: a | b,
            any: u64::MAX,
        }
    }

    #[inline]
    pub fn accepts(&self, edge: VertexMask) -> bool {
        edge & self.required == self.required && edge & self.any != 0
    }
}

/// Incremental matcher: demands are pushed and popped in stack order and
/// the current matching always saturates every demand on the stack.
#[derive(Debug, Clone)]
pub struct DemandMatcher<'a> {
    masks: &'a [VertexMask],
    /// Edges containing each vertex (0-based), ascending.
    incident: Vec<Vec<u32>>,
    demands: Vec<Demand>,
    demand_edge: Vec<u32>,
    edge_owner: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'a> DemandMatcher<'a> {
    pub fn new(n: usize, masks: &'a [VertexMask]) -> Self {
        let mut incident = vec![Vec::new(); n];
        for (e, &m) in masks.iter().enumerate() {
            let mut rest = m;
            while rest != 0 {
                incident[rest.trailing_zeros() as usize].push(e as u32);
                rest &= rest - 1;
            }
        }
        DemandMatcher {
            masks,
            incident,
            demands: Vec::new(),
            demand_edge: Vec::new(),
            edge_owner: vec![FREE; masks.len()],
            stamp: vec![0; masks.len()],
            epoch: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.demands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.demands.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.masks.len()
    }

    /// Pushes `demand` and tries to extend the matching to cover it. On
    /// failure the demand is not kept and the matching is unchanged in size.
    pub fn push(&mut self, demand: Demand) -> bool {
        if demand.required == 0 {
            return false;
        }
        let d = self.demands.len() as u32;
        self.demands.push(demand);
        self.demand_edge.push(FREE);
        self.next_epoch();
        if self.augment(d) {
            true
        } else {
            self.demands.pop();
            self.demand_edge.pop();
            false
        }
    }

    /// Removes the most recent demand, freeing its edge. The remaining
    /// demands stay matched.
    pub fn pop(&mut self) {
        if let Some(e) = self.demand_edge.pop() {
            if e != FREE {
                self.edge_owner[e as usize] = FREE;
            }
            self.demands.pop();
        }
    }

    /// Pops demands until `len` remain.
    pub fn truncate(&mut self, len: usize) {
        while self.demands.len() > len {
            self.pop();
        }
    }

    /// Edge (0-based) currently serving each demand, in push order.
    pub fn assignment(&self) -> Vec<usize> {
        self.demand_edge.iter().map(|&e| e as usize).collect()
    }

    fn next_epoch(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    fn augment(&mut self, d: u32) -> bool {
        let demand = self.demands[d as usize];
        let pivot = demand.required.trailing_zeros() as usize;
        for k in 0..self.incident[pivot].len() {
            let e = self.incident[pivot][k] as usize;
            if self.stamp[e] == self.epoch || !demand.accepts(self.masks[e]) {
                continue;
            }
            self.stamp[e] = self.epoch;
            let owner = self.edge_owner[e];
            if owner == FREE || self.augment(owner) {
                self.edge_owner[e] = d;
                self.demand_edge[d as usize] = e as u32;
                return true;
            }
        }
        false
    }
}

/// Whether all `demands` can be served by distinct edges, skipping edges
/// flagged in `forbidden`.
pub fn has_saturating_matching(
    n: usize,
    masks: &[VertexMask],
    demands: &[Demand],
    forbidden: &[bool],
) -> bool {
    let filtered: Vec<VertexMask> = masks
        .iter()
        .zip(forbidden)
        .map(|(&m, &f)| if f { 0 } else { m })
        .collect();
    let mut matcher = DemandMatcher::new(n, &filtered);
    demands.iter().all(|&d| matcher.push(d))
}

/// Lexicographically smallest assignment of distinct edges (0-based) to
/// `demands`, if one exists.
pub fn lex_first_assignment(
    n: usize,
    masks: &[VertexMask],
    demands: &[Demand],
) -> Option<Vec<usize>> {
    let mut forbidden = vec![false; masks.len()];
    if !has_saturating_matching(n, masks, demands, &forbidden) {
        return None;
    }
    let mut out = Vec::with_capacity(demands.len());
    for (i, d) in demands.iter().enumerate() {
        let choice = (0..masks.len()).find(|&e| {
            if forbidden[e] || !d.accepts(masks[e]) {
                return false;
            }
            forbidden[e] = true;
            let ok = has_saturating_matching(n, masks, &demands[i + 1..], &forbidden);
            forbidden[e] = false;
            ok
        })?;
        forbidden[choice] = true;
        out.push(choice);
    }
    Some(out)
}
