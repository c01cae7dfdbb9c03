//! Backward orbits: iterated preimages of a point under `f` over `Z/p^k`,
//! built from roots mod `p` and Hensel lifting. Also forward orbits and the
//! two metrics on residue sequences.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{pow, reduce, to_bigint};
use crate::congruence::{roots_mod_p, RootModP};
use crate::hensel::lift_preimage;
use crate::poly::IntPoly;
use crate::{Error, Prime, Result};

pub const DEFAULT_MAX_NODES: usize = 100_000;

/// Solutions of `f(x) ≡ target (mod p^k)` reachable by lifting.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Preimages {
    /// Lifts of the simple roots mod `p`, in order of their residue mod `p`.
    pub lifted: Vec<BigUint>,
    /// Roots mod `p` where `f'` vanishes. Not lifted.
    pub singular: Vec<RootModP>,
}

impl Preimages {
    pub fn is_empty(&self) -> bool {
        self.lifted.is_empty() && self.singular.is_empty()
    }
}

pub fn preimages(f: &IntPoly, target: &BigInt, p: Prime, k: u32) -> Result<Preimages> {
    if k == 0 {
        return Err(Error::ZeroPrecision);
    }
    let target = to_bigint(&reduce(target, &pow(p.get(), k)));
    let roots = roots_mod_p(f, &target, p);
    let mut out = Preimages::default();
    for root in roots.roots {
        if root.singular {
            out.singular.push(root);
        } else {
            let lifted = lift_preimage(f, &target, &root.residue.into(), k, p)?;
            out.lifted.push(lifted.root().clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeStatus {
    /// Has at least one child.
    Expanded,
    /// A root mod `p` where `f'` vanishes; its value is only known mod `p`.
    SingularLeaf,
    /// The value has no preimage mod `p`.
    NoPreimageLeaf,
    /// At the depth limit, or left unexpanded when the node budget ran out.
    Frontier,
}

impl NodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeStatus::Expanded => "expanded",
            NodeStatus::SingularLeaf => "singular-leaf",
            NodeStatus::NoPreimageLeaf => "no-preimage-leaf",
            NodeStatus::Frontier => "frontier",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardNode {
    /// Breadth-first index; node 0 is the seed.
    pub id: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub value: BigUint,
    pub depth: usize,
    pub status: NodeStatus,
    /// `value` is meaningful modulo `p^precision`: the tree precision `k`,
    /// or 1 for singular leaves.
    pub precision: u32,
}

/// Tree of iterated preimages: each child `c` of a node `u` satisfies
/// `f(c) ≡ u (mod p^k)`, singular leaves only modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardTree {
    p: Prime,
    precision: u32,
    polynomial: IntPoly,
    max_depth: usize,
    nodes: Vec<BackwardNode>,
    complete: bool,
}

impl BackwardTree {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> BigUint {
        pow(self.p.get(), self.precision)
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.polynomial
    }

    pub fn seed(&self) -> &BigUint {
        &self.nodes[0].value
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// `false` when expansion stopped at the node budget.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn nodes(&self) -> &[BackwardNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &BackwardNode {
        &self.nodes[id]
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = &BackwardNode> {
        self.nodes[id].children.iter().map(|&c| &self.nodes[c])
    }

    pub fn nodes_at_depth(&self, depth: usize) -> impl Iterator<Item = &BackwardNode> {
        self.nodes.iter().filter(move |n| n.depth == depth)
    }

    /// Backward iterates at `depth`, i.e. nodes other than singular markers.
    pub fn preimage_count_at_depth(&self, depth: usize) -> usize {
        self.nodes_at_depth(depth)
            .filter(|n| n.status != NodeStatus::SingularLeaf)
            .count()
    }

    /// The backward sequence from the seed to every frontier node.
    pub fn sequences(&self) -> Vec<BackwardSequence> {
        self.nodes
            .iter()
            .filter(|n| n.status == NodeStatus::Frontier)
            .map(|n| {
                let mut path = Vec::with_capacity(n.depth + 1);
                let mut cur = Some(n.id);
                while let Some(id) = cur {
                    path.push(self.nodes[id].value.clone());
                    cur = self.nodes[id].parent;
                }
                path.reverse();
                BackwardSequence { path }
            })
            .collect()
    }

    /// Every node value reduced mod `p^{k-1}`; `None` when `k = 1`.
    ///
    /// Lifts of simple roots are unique, so the result equals the tree built
    /// directly at precision `k - 1`.
    pub fn reduce_precision(&self) -> Option<BackwardTree> {
        let k = self.precision.checked_sub(1).filter(|&k| k > 0)?;
        let m = pow(self.p.get(), k);
        let nodes = self
            .nodes
            .iter()
            .map(|n| BackwardNode {
                value: &n.value % &m,
                precision: n.precision.min(k),
                ..n.clone()
            })
            .collect();
        Some(BackwardTree {
            precision: k,
            nodes,
            polynomial: self.polynomial.clone(),
            ..*self
        })
    }
}

/// A path `seed = x_0, x_1, ..., x_m` with `f(x_{i+1}) ≡ x_i (mod p^k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardSequence {
    pub path: Vec<BigUint>,
}

/// Expands the preimages of `seed` breadth first down to `depth` levels.
///
/// Children are ordered by residue mod `p`. Stops early, with the tree
/// flagged incomplete, rather than exceed `max_nodes` nodes.
pub fn backward_tree(
    f: &IntPoly,
    seed: &BigInt,
    p: Prime,
    k: u32,
    depth: usize,
    max_nodes: usize,
) -> Result<BackwardTree> {
    if k == 0 {
        return Err(Error::ZeroPrecision);
    }
    let modulus = pow(p.get(), k);
    let mut nodes = alloc::vec![BackwardNode {
        id: 0,
        parent: None,
        children: Vec::new(),
        value: reduce(seed, &modulus),
        depth: 0,
        status: NodeStatus::Frontier,
        precision: k,
    }];
    let mut complete = true;
    let mut cache: BTreeMap<BigUint, Preimages> = BTreeMap::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);

    while let Some(id) = queue.pop_front() {
        let node_depth = nodes[id].depth;
        if node_depth >= depth {
            continue;
        }
        let value = nodes[id].value.clone();
        let pre = match cache.get(&value) {
            Some(pre) => pre.clone(),
            None => {
                let pre = preimages(f, &to_bigint(&value), p, k)?;
                cache.insert(value, pre.clone());
                pre
            }
        };
        if pre.is_empty() {
            nodes[id].status = NodeStatus::NoPreimageLeaf;
            continue;
        }
        if nodes.len() + pre.lifted.len() + pre.singular.len() > max_nodes {
            complete = false;
            break;
        }

        let mut children: Vec<(u64, BigUint, NodeStatus, u32)> = pre
            .lifted
            .into_iter()
            .map(|v| {
                let r = u64::try_from(&v % p.get()).expect("residue below p");
                (r, v, NodeStatus::Frontier, k)
            })
            .chain(
                pre.singular
                    .iter()
                    .map(|r| (r.residue, r.residue.into(), NodeStatus::SingularLeaf, 1)),
            )
            .collect();
        children.sort_by_key(|c| c.0);

        nodes[id].status = NodeStatus::Expanded;
        for (_, value, status, precision) in children {
            let child = nodes.len();
            nodes.push(BackwardNode {
                id: child,
                parent: Some(id),
                children: Vec::new(),
                value,
                depth: node_depth + 1,
                status,
                precision,
            });
            nodes[id].children.push(child);
            if status == NodeStatus::Frontier {
                queue.push_back(child);
            }
        }
    }

    Ok(BackwardTree {
        p,
        precision: k,
        polynomial: f.clone(),
        max_depth: depth,
        nodes,
        complete,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cycle {
    /// Index of the first term that recurs.
    pub tail: usize,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardOrbit {
    /// `x_0, f(x_0), ..., f^n(x_0)` mod `p^k`.
    pub terms: Vec<BigUint>,
    /// The first repetition among `terms`, if any. Always found once
    /// `steps >= p^k`.
    pub cycle: Option<Cycle>,
}

impl ForwardOrbit {
    pub fn is_preperiodic(&self) -> bool {
        self.cycle.is_some_and(|c| c.tail > 0)
    }
}

pub fn forward_orbit(f: &IntPoly, x0: &BigInt, p: Prime, k: u32, steps: usize) -> Result<ForwardOrbit> {
    if k == 0 {
        return Err(Error::ZeroPrecision);
    }
    let m = pow(p.get(), k);
    let mut terms = Vec::with_capacity(steps + 1);
    let mut seen: BTreeMap<BigUint, usize> = BTreeMap::new();
    let mut cycle = None;
    let mut x = reduce(x0, &m);
    for i in 0..=steps {
        if cycle.is_none() {
            if let Some(&first) = seen.get(&x) {
                cycle = Some(Cycle {
                    tail: first,
                    length: i - first,
                });
                seen.clear();
            } else {
                seen.insert(x.clone(), i);
            }
        }
        let next = if i < steps {
            Some(f.eval_mod(&to_bigint(&x), &m)?)
        } else {
            None
        };
        terms.push(x);
        match next {
            Some(n) => x = n,
            None => break,
        }
    }
    Ok(ForwardOrbit { terms, cycle })
}

/// `Σ |s_i - t_i| / p^i` over equal-length sequences.
pub fn distance_series(s: &[BigInt], t: &[BigInt], p: Prime) -> Result<BigRational> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    let base = BigInt::from(p.get());
    let mut scale = BigInt::one();
    let mut sum = BigRational::zero();
    for (a, b) in s.iter().zip(t) {
        let diff = a - b;
        if !diff.is_zero() {
            sum += BigRational::new(num_traits::Signed::abs(&diff), scale.clone());
        }
        scale *= &base;
    }
    Ok(sum)
}

/// `2^{-l}` where `l` is the first index at which the sequences differ; 0 if equal.
pub fn distance_first_difference<T: PartialEq>(s: &[T], t: &[T]) -> Result<BigRational> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    Ok(match s.iter().zip(t).position(|(a, b)| a != b) {
        None => BigRational::zero(),
        Some(l) => BigRational::new(BigInt::one(), BigInt::one() << l),
    })
}
