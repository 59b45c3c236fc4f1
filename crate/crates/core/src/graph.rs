//! Immutable bipartite graphs with exact distance, girth and domination
//! queries.
//!
//! Vertices are addressed by dense ids `0..order`. Graphs built from the
//! finite-field constructions also carry a coordinate label per vertex and the
//! field they were built over; graphs read from files carry at most labels.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type VertexId = u32;

/// A coordinate: a field element or the sentinel written `inf`.
///
/// Ordered with every element (by index) before `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Elem(FieldElement),
    Infinity,
}

impl Coord {
    pub fn elem(index: u32) -> Coord {
        Coord::Elem(FieldElement::from_index_unchecked(index))
    }

    /// Position in the total order: the element index, or `q` for infinity.
    pub fn ordinal(self, q: u32) -> u32 {
        match self {
            Coord::Elem(x) => x.index(),
            Coord::Infinity => q,
        }
    }

    pub fn from_ordinal(ordinal: u32, q: u32) -> Coord {
        if ordinal == q {
            Coord::Infinity
        } else {
            Coord::elem(ordinal)
        }
    }

    pub fn as_elem(self) -> Option<FieldElement> {
        match self {
            Coord::Elem(x) => Some(x),
            Coord::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        self == Coord::Infinity
    }
}

impl From<FieldElement> for Coord {
    fn from(x: FieldElement) -> Self {
        Coord::Elem(x)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Elem(x) => write!(f, "{}", x.index()),
            Coord::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Coord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(Coord::Infinity)
        } else {
            s.parse::<u32>()
                .map(Coord::elem)
                .map_err(|_| format!("bad coordinate {s:?}"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Point = 0,
    Line = 1,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Point => Side::Line,
            Side::Line => Side::Point,
        }
    }

    pub fn index(self) -> u32 {
        self as u32
    }
}

/// A labelled vertex: side plus coordinate triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub a: Coord,
    pub b: Coord,
    pub c: Coord,
}

impl Vertex {
    pub fn new(side: Side, a: Coord, b: Coord, c: Coord) -> Vertex {
        Vertex { side, a, b, c }
    }

    pub fn point(a: Coord, b: Coord, c: Coord) -> Vertex {
        Vertex::new(Side::Point, a, b, c)
    }

    pub fn line(a: Coord, b: Coord, c: Coord) -> Vertex {
        Vertex::new(Side::Line, a, b, c)
    }

    /// Shorthand with `None` standing for infinity.
    pub fn from_ordinals(side: Side, a: Option<u32>, b: Option<u32>, c: Option<u32>) -> Vertex {
        let coord = |x: Option<u32>| x.map_or(Coord::Infinity, Coord::elem);
        Vertex::new(side, coord(a), coord(b), coord(c))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:({},{},{})",
            self.side.index(),
            self.a,
            self.b,
            self.c
        )
    }
}

impl FromStr for Vertex {
    type Err = String;

    /// Parses the `side:(a,b,c)` form used in label lines.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (side, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("bad vertex {s:?}"))?;
        let side = match side {
            "0" => Side::Point,
            "1" => Side::Line,
            _ => return Err(format!("bad side in {s:?}")),
        };
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("bad coordinates in {s:?}"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("expected three coordinates in {s:?}"));
        }
        Ok(Vertex::new(
            side,
            parts[0].trim().parse()?,
            parts[1].trim().parse()?,
            parts[2].trim().parse()?,
        ))
    }
}

/// Dense id layout for the cage vertex sets: the first shape `(a,b,c)` with
/// `a ∈ F ∪ {inf}`, `b, c ∈ F` in coordinate-lex order, then `(inf,inf,c)`
/// with `c ∈ F ∪ {inf}`; points before lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaLayout {
    pub q: u32,
}

impl GammaLayout {
    pub fn new(q: u32) -> Self {
        GammaLayout { q }
    }

    /// Vertices per side: q³ + q² + q + 1.
    pub fn side_size(&self) -> u32 {
        let q = self.q;
        q * q * q + q * q + q + 1
    }

    pub fn order(&self) -> u32 {
        2 * self.side_size()
    }

    pub fn local_id(&self, v: &Vertex) -> Result<u32> {
        let q = self.q;
        let valid = |c: Coord| c.as_elem().is_none_or(|x| x.index() < q);
        if !(valid(v.a) && valid(v.b) && valid(v.c)) {
            return Err(Error::InvalidVertex(v.to_string()));
        }
        match (v.a, v.b, v.c) {
            (a, Coord::Elem(_), Coord::Elem(_)) => {
                Ok(a.ordinal(q) * q * q + v.b.ordinal(q) * q + v.c.ordinal(q))
            }
            (Coord::Infinity, Coord::Infinity, c) => Ok((q + 1) * q * q + c.ordinal(q)),
            _ => Err(Error::InvalidVertex(v.to_string())),
        }
    }

    pub fn id(&self, v: &Vertex) -> Result<VertexId> {
        Ok(v.side.index() * self.side_size() + self.local_id(v)?)
    }

    pub fn vertex(&self, id: VertexId) -> Vertex {
        let q = self.q;
        let side = if id < self.side_size() {
            Side::Point
        } else {
            Side::Line
        };
        let local = id - side.index() * self.side_size();
        let first = (q + 1) * q * q;
        if local < first {
            Vertex::new(
                side,
                Coord::from_ordinal(local / (q * q), q),
                Coord::elem(local / q % q),
                Coord::elem(local % q),
            )
        } else {
            Vertex::new(
                side,
                Coord::Infinity,
                Coord::Infinity,
                Coord::from_ordinal(local - first, q),
            )
        }
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// Intersection of all sets; `None` for an empty family.
    pub fn intersect_all<'a>(sets: impl IntoIterator<Item = &'a VertexSet>) -> Option<VertexSet> {
        sets.into_iter().fold(None, |acc: Option<VertexSet>, s| {
            Some(match acc {
                None => s.clone(),
                Some(a) => a.intersection(s),
            })
        })
    }

    pub fn union_all<'a>(sets: impl IntoIterator<Item = &'a VertexSet>) -> VertexSet {
        sets.into_iter().flat_map(|s| s.iter()).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Which construction produced a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Gamma,
    H,
    B,
    Derived,
    Foreign,
}

/// An explicit vertex map between two graphs, indexed by source id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap(pub Vec<Option<VertexId>>);

impl VertexMap {
    /// Builds a map through vertex labels: `f` sends each source label to a
    /// target label, which is looked up in `target`. Unlabelled sources and
    /// images missing from `target` become `None`.
    pub fn from_labels(
        source: &BipartiteGraph,
        target: &BipartiteGraph,
        f: impl Fn(&Vertex) -> Option<Vertex>,
    ) -> VertexMap {
        VertexMap(
            (0..source.order() as VertexId)
                .map(|v| {
                    source
                        .label(v)
                        .and_then(&f)
                        .and_then(|img| target.id_of(&img).ok())
                })
                .collect(),
        )
    }

    pub fn identity(n: usize) -> VertexMap {
        VertexMap((0..n as VertexId).map(Some).collect())
    }
}

#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    field: Option<Field>,
    origin: Origin,
    sides: Vec<Side>,
    adj: Vec<Vec<VertexId>>,
    labels: Option<Vec<Vertex>>,
    index: HashMap<Vertex, VertexId>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.sides == other.sides && self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Builds a graph from raw parts. Neighbour lists are sorted and
    /// deduplicated; edges are symmetrised.
    pub fn from_parts(
        sides: Vec<Side>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        labels: Option<Vec<Vertex>>,
        field: Option<Field>,
        origin: Origin,
    ) -> Result<BipartiteGraph> {
        let n = sides.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n {
                return Err(Error::IdOutOfRange(u));
            }
            if v as usize >= n {
                return Err(Error::IdOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidVertex(format!("self-loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidVertex(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    n
                )));
            }
        }
        let index = labels
            .iter()
            .flatten()
            .enumerate()
            .map(|(i, v)| (*v, i as VertexId))
            .collect();
        Ok(BipartiteGraph {
            field,
            origin,
            sides,
            adj,
            labels,
            index,
        })
    }

    /// Graph from an edge list with no coordinate context. Sides come from
    /// `labels` when given, otherwise from a BFS two-colouring (which may be
    /// improper when the input is not bipartite; see [`Self::is_bipartite`]).
    pub fn from_edges(
        order: usize,
        edges: &[(VertexId, VertexId)],
        labels: Option<Vec<Vertex>>,
    ) -> Result<BipartiteGraph> {
        let sides = match &labels {
            Some(l) if l.len() == order => l.iter().map(|v| v.side).collect(),
            _ => two_colouring(order, edges),
        };
        Self::from_parts(sides, edges.iter().copied(), labels, None, Origin::Foreign)
    }

    pub fn field(&self) -> Option<&Field> {
        self.field.as_ref()
    }

    pub fn require_field(&self) -> Result<&Field> {
        self.field.as_ref().ok_or(Error::MissingContext)
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.sides[v as usize]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn side_count(&self, side: Side) -> usize {
        self.sides.iter().filter(|&&s| s == side).count()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn labels(&self) -> Option<&[Vertex]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&Vertex> {
        self.labels.as_ref().and_then(|l| l.get(v as usize))
    }

    pub fn id_of(&self, v: &Vertex) -> Result<VertexId> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::VertexNotFound(v.to_string()))
    }

    pub fn check_id(&self, v: VertexId) -> Result<VertexId> {
        if (v as usize) < self.order() {
            Ok(v)
        } else {
            Err(Error::IdOutOfRange(v))
        }
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.order() as VertexId
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    /// Histogram degree -> number of vertices.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for list in &self.adj {
            *profile.entry(list.len()).or_insert(0) += 1;
        }
        profile
    }

    /// The common degree if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        let profile = self.degree_profile();
        (profile.len() == 1).then(|| *profile.keys().next().unwrap())
    }

    pub fn is_bipartite(&self) -> bool {
        self.edges().all(|(u, v)| self.side(u) != self.side(v))
    }

    /// BFS distances from `root`, stopping after depth `limit` when given.
    pub fn distances_from(&self, root: VertexId, limit: Option<u32>) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        dist[root as usize] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length; `None` when `v` is unreachable.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<u32>> {
        self.check_id(u)?;
        self.check_id(v)?;
        Ok(self.distances_from(u, None)[v as usize])
    }

    /// The sphere at exactly distance `t` (open) or the ball within `t`
    /// (closed).
    pub fn ball(&self, u: VertexId, t: u32, closed: bool) -> Result<VertexSet> {
        self.check_id(u)?;
        let dist = self.distances_from(u, Some(t));
        Ok(dist
            .iter()
            .enumerate()
            .filter_map(|(v, d)| match d {
                Some(d) if *d == t || (closed && *d < t) => Some(v as VertexId),
                _ => None,
            })
            .collect())
    }

    /// `ball` addressed by coordinates.
    pub fn ball_at(&self, u: &Vertex, t: u32, closed: bool) -> Result<VertexSet> {
        self.ball(self.id_of(u)?, t, closed)
    }

    /// Open neighbourhood of a set: the union of its members' neighbours.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|v| self.neighbors(v).iter().copied())
            .collect()
    }

    /// Closed neighbourhood of a set.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        self.neighborhood(set).union(set)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in self.vertices() {
            if seen[s as usize] {
                continue;
            }
            count += 1;
            seen[s as usize] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Length of the shortest cycle through `root`'s BFS tree, searching only
    /// for cycles shorter than `bound`.
    fn shortest_cycle_from(&self, root: VertexId, bound: u32) -> Option<u32> {
        let n = self.order();
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![VertexId::MAX; n];
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        let mut best: Option<u32> = None;
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            let limit = best.unwrap_or(bound);
            // a non-tree edge seen from depth du closes a cycle of length >= 2*du
            if 2 * du >= limit {
                break;
            }
            for &w in self.neighbors(u) {
                if w == parent[u as usize] {
                    continue;
                }
                let dw = dist[w as usize];
                if dw == u32::MAX {
                    dist[w as usize] = du + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else {
                    let len = du + dw + 1;
                    if best.map_or(len < bound, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        best
    }

    /// Exact girth; `None` for forests. BFS from every root in parallel,
    /// reduced by minimum.
    pub fn girth(&self) -> Option<u32> {
        self.vertices()
            .collect::<Vec<_>>()
            .par_iter()
            .filter_map(|&root| self.shortest_cycle_from(root, u32::MAX))
            .min()
    }

    /// True iff distinct members of `set` are pairwise at distance >= `t`
    /// (unreachable counts as infinitely far).
    pub fn pairwise_at_least(&self, set: &VertexSet, t: u32) -> bool {
        if t == 0 {
            return true;
        }
        set.iter().all(|u| {
            let d = self.distances_from(u, Some(t - 1));
            set.iter().all(|v| v == u || d[v as usize].is_none())
        })
    }

    /// True iff every vertex outside `set` has exactly one neighbour in it.
    pub fn is_perfect_dominating(&self, set: &VertexSet) -> bool {
        self.domination_failures(set).is_empty()
    }

    /// Vertices outside `set` whose neighbour count in `set` is not one.
    pub fn domination_failures(&self, set: &VertexSet) -> Vec<(VertexId, usize)> {
        let mut member = vec![false; self.order()];
        for v in set {
            member[v as usize] = true;
        }
        self.vertices()
            .filter(|&v| !member[v as usize])
            .filter_map(|v| {
                let k = self
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| member[w as usize])
                    .count();
                (k != 1).then_some((v, k))
            })
            .collect()
    }

    /// Induced subgraph on the complement of `set`. Survivors get new dense
    /// ids in ascending old-id order and keep their labels.
    pub fn remove_set(&self, set: &VertexSet) -> BipartiteGraph {
        let mut new_id = vec![None; self.order()];
        let mut next = 0;
        for v in self.vertices() {
            if !set.contains(v) {
                new_id[v as usize] = Some(next);
                next += 1;
            }
        }
        let keep = |v: VertexId| new_id[v as usize];
        let sides = self
            .vertices()
            .filter(|&v| keep(v).is_some())
            .map(|v| self.side(v))
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            self.vertices()
                .filter(|&v| keep(v).is_some())
                .map(|v| l[v as usize])
                .collect()
        });
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((keep(u)?, keep(v)?)))
            .collect();
        let origin = match self.origin {
            Origin::Foreign => Origin::Foreign,
            _ if set.is_empty() => self.origin,
            _ => Origin::Derived,
        };
        Self::from_parts(sides, edges, labels, self.field.clone(), origin)
            .expect("induced subgraph of a valid graph is valid")
    }

    /// Checks that `map` is a bijection onto `other` preserving adjacency in
    /// both directions.
    pub fn is_isomorphism_via(&self, other: &BipartiteGraph, map: &VertexMap) -> Result<bool> {
        if map.0.len() != self.order() {
            return Err(Error::MapNotTotal(map.0.len().min(self.order()) as VertexId));
        }
        let mut preimage: Vec<Option<VertexId>> = vec![None; other.order()];
        for (v, img) in map.0.iter().enumerate() {
            let img = img.ok_or(Error::MapNotTotal(v as VertexId))?;
            if img as usize >= other.order() {
                return Err(Error::MapNotTotal(v as VertexId));
            }
            if let Some(prev) = preimage[img as usize] {
                return Err(Error::MapNotInjective(prev, v as VertexId));
            }
            preimage[img as usize] = Some(v as VertexId);
        }
        if self.order() != other.order() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        // injective + equal edge counts: edge preservation one way suffices
        Ok(self.edges().all(|(u, v)| {
            let (fu, fv) = (map.0[u as usize].unwrap(), map.0[v as usize].unwrap());
            other.neighbors(fu).binary_search(&fv).is_ok()
        }))
    }

    /// Labelled edge set, for comparing graphs built through different id
    /// schemes.
    pub fn labelled_edges(&self) -> Option<Vec<(Vertex, Vertex)>> {
        let labels = self.labels.as_ref()?;
        let mut out: Vec<_> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (labels[u as usize], labels[v as usize]);
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        out.sort_unstable();
        Some(out)
    }
}

fn two_colouring(order: usize, edges: &[(VertexId, VertexId)]) -> Vec<Side> {
    let mut adj = vec![Vec::new(); order];
    for &(u, v) in edges {
        if (u as usize) < order && (v as usize) < order {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
    }
    let mut side: Vec<Option<Side>> = vec![None; order];
    for s in 0..order {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::Point);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in &adj[u] {
                if side[w as usize].is_none() {
                    side[w as usize] = Some(su.other());
                    queue.push_back(w as usize);
                }
            }
        }
    }
    side.into_iter().map(Option::unwrap).collect()
}
