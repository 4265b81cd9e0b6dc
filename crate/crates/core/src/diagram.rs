//! Signed trivalent diagrams and their Q(d)-linear combinations.
//!
//! A diagram lives in Hom(1, X^k): its `k` boundary legs are numbered left to right. A
//! morphism with profile `(m, n)` lists its inputs first in reversed order, then its
//! outputs. Half-edges are numbered `0..k` for the boundary, then `k + 3v + s` for slot `s`
//! of vertex `v`; each vertex is oriented by the cyclic order of its slots. Crossings carry
//! no data.

use crate::scalar::RatFunc;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("half-edge {0} is not paired exactly once")]
    Dangling(usize),
    #[error("half-edge id {0} is declared more than once")]
    DuplicateId(usize),
    #[error("half-edge id {0} is used by an edge but never declared")]
    UnknownId(usize),
    #[error("profile mismatch: {0}")]
    Profile(String),
    #[error("operation needs at least {needed} input legs, found {found}")]
    TooFewInputs { needed: usize, found: usize },
    #[error("cannot parse diagram: {0}")]
    Parse(String),
}

/// Trivalent graph with ordered boundary legs and a free-loop counter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    arity: usize,
    mate: Vec<usize>,
    loops: usize,
}

/// Result of canonical labeling: `original = sign * diagram`, or zero when self-negating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub diagram: Diagram,
    pub sign: i32,
    pub self_negating: bool,
}

impl Diagram {
    /// Builds a diagram from an involution on `arity + 3 * vertices` half-edges.
    pub fn from_mate(arity: usize, mate: Vec<usize>, loops: usize) -> Result<Self, DiagramError> {
        let n = mate.len();
        if n < arity || !(n - arity).is_multiple_of(3) {
            return Err(DiagramError::Dangling(n));
        }
        for (h, &m) in mate.iter().enumerate() {
            if m >= n || m == h || mate[m] != h {
                return Err(DiagramError::Dangling(h));
            }
        }
        Ok(Diagram { arity, mate, loops })
    }

    /// Builds a diagram from arbitrary half-edge ids.
    ///
    /// `boundary` lists the ids of legs `1..k`; each vertex lists its ids in cyclic order.
    pub fn from_parts(
        boundary: &[usize],
        vertices: &[[usize; 3]],
        edges: &[(usize, usize)],
        loops: usize,
    ) -> Result<Self, DiagramError> {
        let arity = boundary.len();
        let mut index = BTreeMap::new();
        let ids = boundary.iter().chain(vertices.iter().flatten());
        for (i, &id) in ids.enumerate() {
            if index.insert(id, i).is_some() {
                return Err(DiagramError::DuplicateId(id));
            }
        }
        let n = index.len();
        let mut mate = vec![usize::MAX; n];
        for &(a, b) in edges {
            let ia = *index.get(&a).ok_or(DiagramError::UnknownId(a))?;
            let ib = *index.get(&b).ok_or(DiagramError::UnknownId(b))?;
            if ia == ib || mate[ia] != usize::MAX {
                return Err(DiagramError::Dangling(a));
            }
            if mate[ib] != usize::MAX {
                return Err(DiagramError::Dangling(b));
            }
            mate[ia] = ib;
            mate[ib] = ia;
        }
        if let Some(h) = mate.iter().position(|&m| m == usize::MAX) {
            let id = *index.iter().find(|(_, &i)| i == h).map(|(id, _)| id).unwrap();
            return Err(DiagramError::Dangling(id));
        }
        Ok(Diagram { arity, mate, loops })
    }

    /// The diagram with no legs, no vertices and no loops.
    pub fn empty() -> Self {
        Diagram {
            arity: 0,
            mate: Vec::new(),
            loops: 0,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertex_count(&self) -> usize {
        (self.mate.len() - self.arity) / 3
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn half_edges(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, h: usize) -> usize {
        self.mate[h]
    }

    pub fn is_boundary(&self, h: usize) -> bool {
        h < self.arity
    }

    /// Half-edge id of slot `s` of vertex `v`.
    pub fn slot(&self, v: usize, s: usize) -> usize {
        self.arity + 3 * v + s
    }

    /// Vertex and slot of a non-boundary half-edge.
    pub fn vertex_of(&self, h: usize) -> (usize, usize) {
        let x = h - self.arity;
        (x / 3, x % 3)
    }

    pub fn with_loops(&self, loops: usize) -> Self {
        Diagram { loops, ..self.clone() }
    }

    /// Relabels boundary legs: old leg `p` moves to position `perm[p]`.
    pub fn permute_boundary(&self, perm: &[usize]) -> Self {
        let map = |h: usize| if h < self.arity { perm[h] } else { h };
        let mut mate = vec![0; self.mate.len()];
        for (h, &m) in self.mate.iter().enumerate() {
            mate[map(h)] = map(m);
        }
        Diagram {
            arity: self.arity,
            mate,
            loops: self.loops,
        }
    }

    /// Reverses the cyclic order at vertex `v` (the result equals minus the original).
    pub fn flip_vertex(&self, v: usize) -> Self {
        let (a, b) = (self.slot(v, 1), self.slot(v, 2));
        let swap = |h: usize| {
            if h == a {
                b
            } else if h == b {
                a
            } else {
                h
            }
        };
        let mut mate = vec![0; self.mate.len()];
        for (h, &m) in self.mate.iter().enumerate() {
            mate[swap(h)] = swap(m);
        }
        Diagram {
            arity: self.arity,
            mate,
            loops: self.loops,
        }
    }

    /// Canonical labeling with the boundary fixed pointwise.
    pub fn canonicalize(&self) -> CanonicalForm {
        let mut search = Search {
            d: self,
            best: None,
            parities: [false; 2],
        };
        let mut st = State {
            order: (0..self.arity).collect(),
            inv: vec![usize::MAX; self.mate.len()],
            code: Vec::with_capacity(self.mate.len()),
            odd: false,
        };
        for h in 0..self.arity {
            st.inv[h] = h;
        }
        search.run(st);
        let code = search.best.expect("search visits at least one labeling");
        let diagram = Diagram {
            arity: self.arity,
            mate: code,
            loops: self.loops,
        };
        let self_negating = search.parities[0] && search.parities[1];
        let sign = if self_negating {
            0
        } else if search.parities[1] {
            -1
        } else {
            1
        };
        CanonicalForm {
            diagram,
            sign,
            self_negating,
        }
    }

    pub fn is_canonical(&self) -> bool {
        let c = self.canonicalize();
        !c.self_negating && c.sign == 1 && &c.diagram == self
    }

    /// Record form with ids `1..=k` for the boundary and consecutive ids for vertex slots.
    pub fn to_record(&self, inputs: usize) -> DiagramRecord {
        let id = |h: usize| h + 1;
        let vertices = (0..self.vertex_count())
            .map(|v| [id(self.slot(v, 0)), id(self.slot(v, 1)), id(self.slot(v, 2))])
            .collect();
        let edges = (0..self.mate.len())
            .filter(|&h| h < self.mate[h])
            .map(|h| [id(h), id(self.mate[h])])
            .collect();
        DiagramRecord {
            arity: self.arity,
            inputs,
            vertices,
            edges,
            loops: self.loops,
            boundary: (0..self.arity).map(id).collect(),
        }
    }
}

/// Serializable form of a diagram with its profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub arity: usize,
    #[serde(default)]
    pub inputs: usize,
    #[serde(default)]
    pub vertices: Vec<[usize; 3]>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub loops: usize,
    #[serde(default)]
    pub boundary: Vec<usize>,
}

impl DiagramRecord {
    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        if self.boundary.len() != self.arity {
            return Err(DiagramError::Parse(format!(
                "arity {} but {} boundary ids",
                self.arity,
                self.boundary.len()
            )));
        }
        if self.inputs > self.arity {
            return Err(DiagramError::Parse("more inputs than legs".into()));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Diagram::from_parts(&self.boundary, &self.vertices, &edges, self.loops)
    }

    /// The single-term morphism described by this record.
    pub fn to_morphism(&self) -> Result<Morphism, DiagramError> {
        let d = self.to_diagram()?;
        Ok(Morphism::from_diagram(self.inputs, self.arity - self.inputs, d))
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        toml::from_str(text).map_err(|e| DiagramError::Parse(e.to_string()))
    }

    pub fn print(&self) -> String {
        toml::to_string(self).expect("records always serialize")
    }
}

struct State {
    order: Vec<usize>,
    inv: Vec<usize>,
    code: Vec<usize>,
    odd: bool,
}

impl State {
    fn clone_state(&self) -> State {
        State {
            order: self.order.clone(),
            inv: self.inv.clone(),
            code: self.code.clone(),
            odd: self.odd,
        }
    }

    /// Labels vertex of half-edge `h` next, with `h` as slot 0.
    fn assign(&mut self, d: &Diagram, h: usize, reversed: bool) {
        let (v, s) = d.vertex_of(h);
        let base = self.order.len();
        let (a, b) = ((s + 1) % 3, (s + 2) % 3);
        let (x, y) = if reversed { (b, a) } else { (a, b) };
        for (k, slot) in [s, x, y].into_iter().enumerate() {
            let orig = d.slot(v, slot);
            self.order.push(orig);
            self.inv[orig] = base + k;
        }
        self.odd ^= reversed;
    }
}

struct Search<'a> {
    d: &'a Diagram,
    best: Option<Vec<usize>>,
    parities: [bool; 2],
}

impl Search<'_> {
    /// `None` when `code` already exceeds the best prefix, else whether it ties it.
    fn status(&self, code: &[usize]) -> Option<bool> {
        match &self.best {
            None => Some(false),
            Some(b) => match code.cmp(&b[..code.len()]) {
                std::cmp::Ordering::Greater => None,
                std::cmp::Ordering::Equal => Some(true),
                std::cmp::Ordering::Less => Some(false),
            },
        }
    }

    /// Depth-first over labelings, keeping the lexicographically least code.
    fn run(&mut self, mut st: State) {
        let d = self.d;
        let n = d.mate.len();
        let Some(mut tied) = self.status(&st.code) else { return };
        while st.code.len() < n {
            let c = st.code.len();
            if c == st.order.len() {
                // Unreached component: try every root slot and orientation.
                for h in d.arity..n {
                    if st.inv[h] == usize::MAX {
                        for rev in [false, true] {
                            let mut next = st.clone_state();
                            next.assign(d, h, rev);
                            self.run(next);
                        }
                    }
                }
                return;
            }
            let m = d.mate[st.order[c]];
            let fresh = st.inv[m] == usize::MAX;
            let label = if fresh { st.order.len() } else { st.inv[m] };
            if tied {
                let b = self.best.as_ref().unwrap()[c];
                if label > b {
                    return;
                }
                if label < b {
                    tied = false;
                }
            }
            if fresh {
                let mut other = st.clone_state();
                other.assign(d, m, true);
                other.code.push(label);
                st.assign(d, m, false);
                st.code.push(label);
                self.run(other);
                match self.status(&st.code) {
                    None => return,
                    Some(t) => tied = t,
                }
                continue;
            }
            st.code.push(label);
        }
        if tied {
            self.parities[st.odd as usize] = true;
        } else {
            self.best = Some(st.code);
            self.parities = [false; 2];
            self.parities[st.odd as usize] = true;
        }
    }
}

/// Endpoint used while gluing diagrams together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    Leg(usize),
    Slot(usize, usize),
    Port(usize),
}

/// Incremental builder: vertices, legs and pass-through ports joined by links.
/// Chains of ports collapse into single edges; closed chains become free loops.
#[derive(Debug, Default)]
pub(crate) struct Wiring {
    arity: usize,
    verts: usize,
    ports: usize,
    links: Vec<(End, End)>,
    loops: usize,
}

impl Wiring {
    pub(crate) fn new(arity: usize) -> Self {
        Wiring {
            arity,
            ..Default::default()
        }
    }

    pub(crate) fn vertices(&mut self, k: usize) -> usize {
        self.verts += k;
        self.verts - k
    }

    pub(crate) fn port(&mut self) -> End {
        self.ports += 1;
        End::Port(self.ports - 1)
    }

    pub(crate) fn ports(&mut self, k: usize) -> Vec<End> {
        (0..k).map(|_| self.port()).collect()
    }

    pub(crate) fn link(&mut self, a: End, b: End) {
        self.links.push((a, b));
    }

    pub(crate) fn add_loops(&mut self, k: usize) {
        self.loops += k;
    }

    /// Copies `d` in, attaching its boundary leg `i` to `legs[i]`.
    pub(crate) fn embed(&mut self, d: &Diagram, legs: &[End]) {
        self.embed_except(d, legs, &[]);
    }

    /// Like `embed`, but skips the listed vertices and exposes their slots as ports.
    /// Returns the port standing in for each slot of a skipped vertex.
    pub(crate) fn embed_except(&mut self, d: &Diagram, legs: &[End], skip: &[usize]) -> Vec<[End; 3]> {
        let mut map = vec![usize::MAX; d.vertex_count()];
        let mut next = self.verts;
        for (v, slot) in map.iter_mut().enumerate() {
            if !skip.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        self.verts = next;
        let exposed: Vec<[End; 3]> = skip.iter().map(|_| [self.port(), self.port(), self.port()]).collect();
        let end = |h: usize| -> End {
            if h < d.arity {
                return legs[h];
            }
            let (v, s) = d.vertex_of(h);
            match skip.iter().position(|&x| x == v) {
                Some(i) => exposed[i][s],
                None => End::Slot(map[v], s),
            }
        };
        for h in 0..d.mate.len() {
            let m = d.mate[h];
            if h < m {
                self.links.push((end(h), end(m)));
            }
        }
        self.loops += d.loops;
        exposed
    }

    pub(crate) fn finish(self) -> Result<Diagram, DiagramError> {
        let terminals = self.arity + 3 * self.verts;
        let total = terminals + self.ports;
        let idx = |e: End| match e {
            End::Leg(i) => i,
            End::Slot(v, s) => self.arity + 3 * v + s,
            End::Port(p) => terminals + p,
        };
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for &(a, b) in &self.links {
            let (ia, ib) = (idx(a), idx(b));
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        for (i, a) in adj.iter().enumerate() {
            let want = if i < terminals { 1 } else { 2 };
            if a.len() != want {
                return Err(DiagramError::Dangling(i));
            }
        }
        let mut seen = vec![false; total];
        let mut mate = vec![usize::MAX; terminals];
        for t in 0..terminals {
            if seen[t] {
                continue;
            }
            seen[t] = true;
            let (mut prev, mut cur) = (t, adj[t][0]);
            while cur >= terminals {
                seen[cur] = true;
                let nxt = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = nxt;
            }
            if cur == t {
                return Err(DiagramError::Dangling(t));
            }
            seen[cur] = true;
            mate[t] = cur;
            mate[cur] = t;
        }
        let mut loops = self.loops;
        for p in terminals..total {
            if seen[p] {
                continue;
            }
            loops += 1;
            let (mut prev, mut cur) = (p, adj[p][0]);
            seen[p] = true;
            while cur != p {
                seen[cur] = true;
                let nxt = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = nxt;
            }
        }
        Ok(Diagram {
            arity: self.arity,
            mate,
            loops,
        })
    }
}

/// Finite Q(d)-linear combination of canonical diagrams with a profile `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Morphism {
    inputs: usize,
    outputs: usize,
    terms: BTreeMap<Diagram, RatFunc>,
}

impl Morphism {
    pub fn zero(inputs: usize, outputs: usize) -> Self {
        Morphism {
            inputs,
            outputs,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(inputs: usize, outputs: usize, d: Diagram) -> Self {
        let mut m = Self::zero(inputs, outputs);
        m.add_term(d, RatFunc::one());
        m
    }

    /// The scalar `c` as an endomorphism of the unit object.
    pub fn scalar(c: RatFunc) -> Self {
        let mut m = Self::zero(0, 0);
        m.add_term(Diagram::empty(), c);
        m
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn profile(&self) -> (usize, usize) {
        (self.inputs, self.outputs)
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * d`, canonicalizing `d`; self-negating diagrams contribute nothing.
    pub fn add_term(&mut self, d: Diagram, c: RatFunc) {
        debug_assert_eq!(d.arity(), self.inputs + self.outputs);
        let cf = d.canonicalize();
        if cf.self_negating || c.is_zero() {
            return;
        }
        let c = if cf.sign < 0 { -&c } else { c };
        self.add_canonical(cf.diagram, c);
    }

    pub(crate) fn add_canonical(&mut self, d: Diagram, c: RatFunc) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, o: &Morphism) -> Result<(), DiagramError> {
        if self.profile() != o.profile() {
            return Err(DiagramError::Profile(format!(
                "{:?} vs {:?}",
                self.profile(),
                o.profile()
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Morphism) -> Result<Morphism, DiagramError> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (d, c) in &o.terms {
            r.add_canonical(d.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Morphism) -> Result<Morphism, DiagramError> {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Morphism {
        let mut r = Morphism::zero(self.inputs, self.outputs);
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect();
        r
    }

    /// Applies a diagram map termwise, re-canonicalizing.
    fn map_diagrams<F>(&self, inputs: usize, outputs: usize, f: F) -> Morphism
    where
        F: Fn(&Diagram) -> Diagram,
    {
        let mut r = Morphism::zero(inputs, outputs);
        for (d, c) in &self.terms {
            r.add_term(f(d), c.clone());
        }
        r
    }

    fn bilinear<F>(&self, o: &Morphism, inputs: usize, outputs: usize, f: F) -> Morphism
    where
        F: Fn(&Diagram, &Diagram) -> Diagram,
    {
        let mut r = Morphism::zero(inputs, outputs);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(f(a, b), x * y);
            }
        }
        r
    }

    /// `self` followed by `g`: output leg `i` of `self` joins input leg `i` of `g`.
    pub fn compose(&self, g: &Morphism) -> Result<Morphism, DiagramError> {
        if self.outputs != g.inputs {
            return Err(DiagramError::Profile(format!(
                "cannot follow {:?} by {:?}",
                self.profile(),
                g.profile()
            )));
        }
        let (m, n, p) = (self.inputs, self.outputs, g.outputs);
        Ok(self.bilinear(g, m, p, |a, b| compose_diagrams(a, b, m, n, p)))
    }

    /// Monoidal product: inputs of `self` precede inputs of `g`, likewise for outputs.
    pub fn tensor(&self, g: &Morphism) -> Morphism {
        let (m, n, m2, n2) = (self.inputs, self.outputs, g.inputs, g.outputs);
        self.bilinear(g, m + m2, n + n2, |a, b| tensor_diagrams(a, b, (m, n), (m2, n2)))
    }

    /// Cyclic shift of the boundary by one position.
    pub fn rot(&self) -> Morphism {
        let k = self.inputs + self.outputs;
        if k == 0 {
            return self.clone();
        }
        let perm: Vec<usize> = (0..k).map(|p| (p + k - 1) % k).collect();
        self.map_diagrams(self.inputs, self.outputs, |d| d.permute_boundary(&perm))
    }

    /// Precomposition with the crossing on the two input legs.
    pub fn switch(&self) -> Result<Morphism, DiagramError> {
        let m = self.inputs;
        if m < 2 {
            return Err(DiagramError::TooFewInputs { needed: 2, found: m });
        }
        let mut perm: Vec<usize> = (0..m + self.outputs).collect();
        perm.swap(m - 1, m - 2);
        Ok(self.map_diagrams(m, self.outputs, |d| d.permute_boundary(&perm)))
    }

    /// Closes `self` against the mirror image of `g`: output `i` meets output `i` and
    /// input `j` meets input `j`. Mirroring reverses every vertex of `g`, a sign of
    /// `(-1)^(m + n)`.
    pub fn pair_close(&self, g: &Morphism) -> Result<Morphism, DiagramError> {
        self.check_same(g)?;
        let (m, n) = self.profile();
        let closed = self.bilinear(g, 0, 0, |a, b| pair_diagrams(a, b, m + n));
        Ok(if (m + n) % 2 == 1 {
            closed.scale(&RatFunc::from_int(-1))
        } else {
            closed
        })
    }

    pub fn structural_equal(&self, g: &Morphism) -> bool {
        self == g
    }

    /// Pivotal transpose: the same diagrams read as a morphism `n -> m`.
    /// Obtained by rotating the picture a half turn.
    pub fn with_profile(&self, inputs: usize, outputs: usize) -> Result<Morphism, DiagramError> {
        if inputs + outputs != self.inputs + self.outputs {
            return Err(DiagramError::Profile(format!(
                "cannot view {:?} as {:?}",
                self.profile(),
                (inputs, outputs)
            )));
        }
        Ok(Morphism {
            inputs,
            outputs,
            terms: self.terms.clone(),
        })
    }
}

/// Removes the vertices in `site` and glues `r` in their place: boundary leg `i` of `r`
/// takes over the half-edge `legs[i]`, which must be a slot of a site vertex. Slots of
/// site vertices not listed in `legs` must be matched among themselves.
pub(crate) fn splice(d: &Diagram, site: &[usize], legs: &[usize], r: &Diagram) -> Diagram {
    debug_assert_eq!(r.arity(), legs.len());
    let mut w = Wiring::new(d.arity());
    let mut map = vec![usize::MAX; d.vertex_count()];
    for (v, slot) in map.iter_mut().enumerate() {
        if !site.contains(&v) {
            *slot = w.vertices(1);
        }
    }
    let inside = |h: usize| !d.is_boundary(h) && site.contains(&d.vertex_of(h).0);
    let end = |h: usize| -> End {
        if d.is_boundary(h) {
            End::Leg(h)
        } else {
            let (v, s) = d.vertex_of(h);
            End::Slot(map[v], s)
        }
    };
    for h in 0..d.half_edges() {
        let m = d.mate(h);
        if h < m && !inside(h) && !inside(m) {
            w.link(end(h), end(m));
        }
    }
    let ports = w.ports(legs.len());
    for (i, &h) in legs.iter().enumerate() {
        let m = d.mate(h);
        match legs.iter().position(|&x| x == m) {
            Some(j) if i < j => w.link(ports[i], ports[j]),
            Some(_) => {}
            None => w.link(ports[i], end(m)),
        }
    }
    w.embed(r, &ports);
    w.add_loops(d.loops());
    w.finish().expect("splicing into a well-formed diagram")
}

fn compose_diagrams(a: &Diagram, b: &Diagram, m: usize, n: usize, p: usize) -> Diagram {
    let mut w = Wiring::new(m + p);
    let pa = w.ports(m + n);
    let pb = w.ports(n + p);
    for i in 0..m {
        w.link(pa[i], End::Leg(i));
    }
    for i in 0..n {
        // output i+1 of a sits at m+i; input i+1 of b sits at n-1-i
        w.link(pa[m + i], pb[n - 1 - i]);
    }
    for j in 0..p {
        w.link(pb[n + j], End::Leg(m + j));
    }
    w.embed(a, &pa);
    w.embed(b, &pb);
    w.finish().expect("gluing well-formed diagrams")
}

fn tensor_diagrams(a: &Diagram, b: &Diagram, (m, n): (usize, usize), (m2, n2): (usize, usize)) -> Diagram {
    let k = m + n + m2 + n2;
    let mut w = Wiring::new(k);
    let la: Vec<End> = (0..m + n).map(|p| End::Leg(m2 + p)).collect();
    let lb: Vec<End> = (0..m2 + n2)
        .map(|p| if p < m2 { End::Leg(p) } else { End::Leg(m + n + p) })
        .collect();
    w.embed(a, &la);
    w.embed(b, &lb);
    w.finish().expect("disjoint union is well-formed")
}

fn pair_diagrams(a: &Diagram, b: &Diagram, k: usize) -> Diagram {
    let mut w = Wiring::new(0);
    let pa = w.ports(k);
    let pb = w.ports(k);
    for p in 0..k {
        w.link(pa[p], pb[p]);
    }
    w.embed(a, &pa);
    w.embed(b, &pb);
    w.finish().expect("closing well-formed diagrams")
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) * {d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[k={} v={} loops={} mate={:?}]",
            self.arity,
            self.vertex_count(),
            self.loops,
            self.mate
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(order: [usize; 3]) -> Diagram {
        Diagram::from_parts(
            &[1, 2, 3],
            &[[order[0] + 10, order[1] + 10, order[2] + 10]],
            &[(1, 11), (2, 12), (3, 13)],
            0,
        )
        .unwrap()
    }

    #[test]
    fn single_vertex_is_canonical() {
        let c = vertex([1, 2, 3]).canonicalize();
        assert_eq!(c.sign, 1);
        assert_eq!(c.diagram, vertex([1, 2, 3]));
        assert_eq!(vertex([2, 3, 1]).canonicalize(), c);
    }

    #[test]
    fn reversed_vertex_has_negative_sign() {
        let c = vertex([1, 3, 2]).canonicalize();
        assert_eq!(c.sign, -1);
        assert_eq!(c.diagram, vertex([1, 2, 3]));
    }

    #[test]
    fn lollipop_is_self_negating() {
        let d = Diagram::from_parts(&[1], &[[11, 12, 13]], &[(1, 11), (12, 13)], 0).unwrap();
        assert!(d.canonicalize().self_negating);
        let m = Morphism::from_diagram(0, 1, d);
        assert!(m.is_zero());
    }

    #[test]
    fn dangling_half_edge_is_rejected() {
        let e = Diagram::from_parts(&[1, 2], &[], &[(1, 2), (2, 1)], 0);
        assert!(e.is_err());
        assert!(Diagram::from_parts(&[1, 2], &[], &[], 0).is_err());
    }

    #[test]
    fn wiring_collapses_port_chains_and_counts_loops() {
        let mut w = Wiring::new(2);
        let p = w.ports(4);
        w.link(End::Leg(0), p[0]);
        w.link(p[0], p[1]);
        w.link(p[1], End::Leg(1));
        w.link(p[2], p[3]);
        w.link(p[3], p[2]);
        let d = w.finish().unwrap();
        assert_eq!(d.mate(0), 1);
        assert_eq!(d.loops(), 1);
    }

    #[test]
    fn record_round_trip() {
        let c = vertex([1, 3, 2]).canonicalize().diagram;
        let r = c.to_record(2);
        let text = r.print();
        let back = DiagramRecord::parse(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_diagram().unwrap(), c);
    }
}
