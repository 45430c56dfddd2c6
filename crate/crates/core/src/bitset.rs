//! Small fixed-width bitsets used by the search loops.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    pub fn ones(n: usize) -> Self {
        let mut b = Bits::zeros(n);
        for v in 0..n {
            b.set(v);
        }
        b
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = Vertex>) -> Self {
        let mut b = Bits::zeros(n);
        for v in it {
            b.set(v);
        }
        b
    }

    pub fn set(&mut self, v: Vertex) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    pub fn clear(&mut self, v: Vertex) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    pub fn get(&self, v: Vertex) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    pub fn is_superset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

/// Open and closed neighbourhood masks of every vertex.
#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub n: usize,
    pub open: Vec<Bits>,
    pub closed: Vec<Bits>,
}

impl Masks {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let open: Vec<Bits> = g
            .vertices()
            .map(|v| Bits::from_iter(n, g.neighbors(v).iter().copied()))
            .collect();
        let closed = open
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let mut c = b.clone();
                c.set(v);
                c
            })
            .collect();
        Masks { n, open, closed }
    }

    pub fn dominated(&self, set: impl IntoIterator<Item = Vertex>) -> Bits {
        let mut out = Bits::zeros(self.n);
        for v in set {
            out.or_assign(&self.closed[v]);
        }
        out
    }

    /// Whether the members of `set` induce a connected subgraph (false for
    /// the empty set).
    pub fn connected(&self, set: &Bits) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = Bits::zeros(self.n);
        seen.set(start);
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.open[v].and(set).ones_iter() {
                if !seen.get(w) {
                    seen.set(w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == set.count()
    }
}
