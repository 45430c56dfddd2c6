//! Token addition/removal reconfiguration: instances, move sequences, an
//! exact breadth-first oracle and a step-by-step verifier.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{Bits, Masks};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Vertex, VertexSet};

/// Default cap on the number of configurations a search may visit.
pub const DEFAULT_MAX_STATES: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Dominating sets.
    Ds,
    /// Connected dominating sets.
    Cds,
    /// Colored connected subgraphs: connected and hitting every colour.
    Ccs,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Ds => "ds",
            Variant::Cds => "cds",
            Variant::Ccs => "ccs",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconfInstance {
    variant: Variant,
    graph: Graph,
    coloring: Option<Coloring>,
    source: VertexSet,
    target: VertexSet,
    k: usize,
}

impl ReconfInstance {
    /// Validates ids, the colouring and feasibility of both endpoints.
    pub fn new(
        variant: Variant,
        graph: Graph,
        coloring: Option<Coloring>,
        source: VertexSet,
        target: VertexSet,
        k: usize,
    ) -> Result<Self> {
        source
            .check_in(&graph)
            .map_err(|e| Error::InvalidInstance(format!("source: {e}")))?;
        target
            .check_in(&graph)
            .map_err(|e| Error::InvalidInstance(format!("target: {e}")))?;
        match (&coloring, variant) {
            (None, Variant::Ccs) => {
                return Err(Error::InvalidInstance("colors: required for the ccs variant".into()))
            }
            (Some(_), Variant::Ds | Variant::Cds) => {
                return Err(Error::InvalidInstance(format!(
                    "colors: not allowed for the {variant} variant"
                )))
            }
            (Some(c), Variant::Ccs) => {
                if c.len() != graph.n() {
                    return Err(Error::InvalidInstance(format!(
                        "colors: {} entries for {} vertices",
                        c.len(),
                        graph.n()
                    )));
                }
                if c.num_colors() as usize > k {
                    return Err(Error::InvalidInstance(format!(
                        "colors: {} colours exceed the bound k = {k}",
                        c.num_colors()
                    )));
                }
            }
            (None, _) => {}
        }
        let inst = ReconfInstance {
            variant,
            graph,
            coloring,
            source,
            target,
            k,
        };
        if !is_feasible(&inst, &inst.source) {
            return Err(Error::InvalidInstance("source: not a feasible solution".into()));
        }
        if !is_feasible(&inst, &inst.target) {
            return Err(Error::InvalidInstance("target: not a feasible solution".into()));
        }
        Ok(inst)
    }

    pub fn cds(graph: Graph, source: VertexSet, target: VertexSet, k: usize) -> Result<Self> {
        ReconfInstance::new(Variant::Cds, graph, None, source, target, k)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        self.coloring.as_ref()
    }

    pub fn source(&self) -> &VertexSet {
        &self.source
    }

    pub fn target(&self) -> &VertexSet {
        &self.target
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Same instance with source and target swapped.
    pub fn reversed(&self) -> ReconfInstance {
        ReconfInstance {
            source: self.target.clone(),
            target: self.source.clone(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Add,
    Remove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub op: Op,
    pub vertex: Vertex,
}

impl Move {
    pub fn add(vertex: Vertex) -> Self {
        Move { op: Op::Add, vertex }
    }

    pub fn remove(vertex: Vertex) -> Self {
        Move { op: Op::Remove, vertex }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconfSequence {
    pub initial: VertexSet,
    pub moves: Vec<Move>,
}

impl ReconfSequence {
    pub fn new(initial: VertexSet) -> Self {
        ReconfSequence {
            initial,
            moves: Vec::new(),
        }
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every configuration along the sequence, starting with `initial`.
    /// Fails on the first move that adds a present or removes an absent
    /// vertex.
    pub fn configurations(&self) -> Result<Vec<VertexSet>> {
        let mut cur = self.initial.clone();
        let mut out = vec![cur.clone()];
        for (i, mv) in self.moves.iter().enumerate() {
            let ok = match mv.op {
                Op::Add => cur.insert(mv.vertex),
                Op::Remove => cur.remove(mv.vertex),
            };
            if !ok {
                return Err(Error::Invalid(format!("move {i} is not applicable")));
            }
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn final_configuration(&self) -> Result<VertexSet> {
        Ok(self.configurations()?.pop().expect("at least the initial set"))
    }
}

/// Feasibility test shared by the oracle and the verifier.
pub(crate) struct Checker {
    variant: Variant,
    k: usize,
    masks: Masks,
    full: Bits,
    color_masks: Vec<Bits>,
}

impl Checker {
    pub fn new(inst: &ReconfInstance) -> Self {
        let n = inst.graph.n();
        let color_masks = match &inst.coloring {
            Some(c) => (1..=c.num_colors())
                .map(|col| Bits::from_iter(n, c.class(col)))
                .collect(),
            None => Vec::new(),
        };
        Checker {
            variant: inst.variant,
            k: inst.k,
            masks: Masks::new(&inst.graph),
            full: Bits::ones(n),
            color_masks,
        }
    }

    /// Feasibility ignoring the size bound.
    fn structurally_ok(&self, set: &Bits) -> bool {
        match self.variant {
            Variant::Ds => self.masks.dominated(set.ones_iter()).is_superset(&self.full),
            Variant::Cds => {
                self.masks.dominated(set.ones_iter()).is_superset(&self.full) && self.masks.connected(set)
            }
            Variant::Ccs => {
                self.color_masks.iter().all(|m| m.intersects(set)) && self.masks.connected(set)
            }
        }
    }

    pub fn feasible(&self, set: &Bits) -> bool {
        set.count() <= self.k && self.structurally_ok(set)
    }
}

pub fn is_feasible(inst: &ReconfInstance, s: &VertexSet) -> bool {
    if s.check_in(&inst.graph).is_err() {
        return false;
    }
    let checker = Checker::new(inst);
    checker.feasible(&Bits::from_iter(inst.graph.n(), s.iter()))
}

/// Feasible configurations one move away from `s`, in lexicographic order
/// of their sorted vertex lists.
pub fn feasible_successors(inst: &ReconfInstance, s: &VertexSet) -> Vec<VertexSet> {
    let checker = Checker::new(inst);
    let bits = Bits::from_iter(inst.graph.n(), s.iter());
    let mut out: Vec<VertexSet> = successors(&checker, &bits)
        .into_iter()
        .map(|b| b.ones_iter().collect())
        .collect();
    out.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
    out
}

fn successors(checker: &Checker, s: &Bits) -> Vec<Bits> {
    let n = checker.masks.n;
    let size = s.count();
    let mut out = Vec::new();
    for v in s.ones_iter() {
        let mut t = s.clone();
        t.clear(v);
        if checker.feasible(&t) {
            out.push(t);
        }
    }
    if size < checker.k {
        // outside DS, an added vertex must touch the set to keep it connected
        let candidates: Box<dyn Iterator<Item = Vertex>> = match checker.variant {
            Variant::Ds => Box::new(0..n),
            _ if size == 0 => Box::new(0..n),
            _ => {
                let mut near = Bits::zeros(n);
                for v in s.ones_iter() {
                    near.or_assign(&checker.masks.open[v]);
                }
                Box::new(near.ones_iter().collect::<Vec<_>>().into_iter())
            }
        };
        for v in candidates {
            if s.get(v) {
                continue;
            }
            let mut t = s.clone();
            t.set(v);
            if checker.feasible(&t) {
                out.push(t);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_states: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// Shortest TAR sequence from source to target, or `None` when the target
/// is unreachable.
pub fn solve_tar(inst: &ReconfInstance) -> Result<Option<ReconfSequence>> {
    solve_tar_with(inst, SolveOptions::default())
}

pub fn solve_tar_with(inst: &ReconfInstance, opts: SolveOptions) -> Result<Option<ReconfSequence>> {
    let n = inst.graph.n();
    let checker = Checker::new(inst);
    let start = Bits::from_iter(n, inst.source.iter());
    let goal = Bits::from_iter(n, inst.target.iter());
    if start == goal {
        return Ok(Some(ReconfSequence::new(inst.source.clone())));
    }
    let mut index: HashMap<Bits, usize> = HashMap::new();
    let mut states: Vec<(Bits, usize, Move)> = Vec::new();
    index.insert(start.clone(), 0);
    states.push((start, usize::MAX, Move::add(0)));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let cur = states[i].0.clone();
        let mut next = successors(&checker, &cur);
        next.sort_by_cached_key(|b| b.ones_iter().collect::<Vec<_>>());
        for t in next {
            if index.contains_key(&t) {
                continue;
            }
            let mv = match t.count() > cur.count() {
                true => Move::add(t.ones_iter().find(|&v| !cur.get(v)).expect("added vertex")),
                false => Move::remove(cur.ones_iter().find(|&v| !t.get(v)).expect("removed vertex")),
            };
            let id = states.len();
            if id >= opts.max_states {
                return Err(Error::BudgetExceeded {
                    limit: opts.max_states,
                });
            }
            let done = t == goal;
            index.insert(t.clone(), id);
            states.push((t, i, mv));
            if done {
                let mut moves = Vec::new();
                let mut at = id;
                while states[at].1 != usize::MAX {
                    moves.push(states[at].2);
                    at = states[at].1;
                }
                moves.reverse();
                return Ok(Some(ReconfSequence {
                    initial: inst.source.clone(),
                    moves,
                }));
            }
            queue.push_back(id);
        }
    }
    Ok(None)
}

/// First problem found when checking a sequence. Step indices count moves
/// from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    WrongStart,
    WrongEnd,
    InfeasibleStep(usize),
    SizeExceeded(usize),
    IllegalMove(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongStart => write!(f, "initial configuration differs from the source"),
            Violation::WrongEnd => write!(f, "final configuration differs from the target"),
            Violation::InfeasibleStep(i) => write!(f, "step {i}: configuration is not feasible"),
            Violation::SizeExceeded(i) => write!(f, "step {i}: configuration exceeds the token bound"),
            Violation::IllegalMove(i) => {
                write!(f, "step {i}: adds a present vertex or removes an absent one")
            }
        }
    }
}

impl std::error::Error for Violation {}

pub fn verify_sequence(inst: &ReconfInstance, seq: &ReconfSequence) -> std::result::Result<(), Violation> {
    if seq.initial != inst.source {
        return Err(Violation::WrongStart);
    }
    let n = inst.graph.n();
    let checker = Checker::new(inst);
    let mut cur = Bits::from_iter(n, seq.initial.iter());
    for (i, mv) in seq.moves.iter().enumerate() {
        if mv.vertex >= n {
            return Err(Violation::IllegalMove(i));
        }
        match (mv.op, cur.get(mv.vertex)) {
            (Op::Add, false) => cur.set(mv.vertex),
            (Op::Remove, true) => cur.clear(mv.vertex),
            _ => return Err(Violation::IllegalMove(i)),
        }
        if cur.count() > inst.k {
            return Err(Violation::SizeExceeded(i));
        }
        if !checker.feasible(&cur) {
            return Err(Violation::InfeasibleStep(i));
        }
    }
    if cur != Bits::from_iter(n, inst.target.iter()) {
        return Err(Violation::WrongEnd);
    }
    Ok(())
}
