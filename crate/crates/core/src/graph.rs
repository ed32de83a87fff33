//! Temporal graph data model.
//!
//! A [`TemporalGraph`] holds vertices stamped with the time they joined and
//! edges stamped with the time they were created. Graphs are assembled with a
//! [`GraphBuilder`] and are immutable afterwards; analyses run over
//! [`Snapshot`] views that restrict the graph to everything that arrived by a
//! given horizon.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Dense vertex index in `0..vertex_count()`.
pub type VertexId = usize;

/// Opaque, caller-defined time unit. `0` is the activation time of a network.
pub type TimeStamp = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub source: VertexId,
    pub target: VertexId,
    pub created: TimeStamp,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Incrementally assembles a [`TemporalGraph`].
///
/// In simple-graph mode (the default) a repeated `(source, target)` pair
/// collapses into one edge stamped with the earliest creation time. For
/// undirected graphs the pair is unordered.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    directed: bool,
    allow_self_loops: bool,
    simple: bool,
    time_unit: Option<String>,
    join_times: Vec<TimeStamp>,
    edges: Vec<Edge>,
    index: HashMap<(VertexId, VertexId), usize>,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            allow_self_loops: false,
            simple: true,
            time_unit: None,
            join_times: Vec::new(),
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn undirected() -> Self {
        Self::new(false)
    }

    pub fn directed() -> Self {
        Self::new(true)
    }

    pub fn allow_self_loops(mut self, allow: bool) -> Self {
        self.allow_self_loops = allow;
        self
    }

    /// Keep repeated interactions as parallel edges instead of collapsing them.
    pub fn multigraph(mut self, multi: bool) -> Self {
        self.simple = !multi;
        self
    }

    pub fn time_unit(mut self, label: impl Into<String>) -> Self {
        self.time_unit = Some(label.into());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.join_times.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn join_time(&self, v: VertexId) -> Option<TimeStamp> {
        self.join_times.get(v).copied()
    }

    pub fn add_vertex(&mut self, join: TimeStamp) -> VertexId {
        self.join_times.push(join);
        self.join_times.len() - 1
    }

    fn key(&self, source: VertexId, target: VertexId) -> (VertexId, VertexId) {
        if self.directed || source <= target {
            (source, target)
        } else {
            (target, source)
        }
    }

    pub fn has_edge(&self, source: VertexId, target: VertexId) -> bool {
        self.index.contains_key(&self.key(source, target))
    }

    /// Adds an edge. Returns `Ok(false)` when the edge collapsed into an
    /// existing one (simple-graph mode).
    pub fn add_edge(&mut self, source: VertexId, target: VertexId, created: TimeStamp) -> Result<bool> {
        for v in [source, target] {
            let join = self.join_time(v).ok_or(Error::VertexNotFound(v))?;
            if join > created {
                return invalid(format!(
                    "edge ({source}, {target}) created at {created} precedes the join time {join} of vertex {v}"
                ));
            }
        }
        if source == target && !self.allow_self_loops {
            return invalid(format!("self-loop on vertex {source} but self-loops are disabled"));
        }
        let edge = Edge { source, target, created };
        if self.simple {
            let key = self.key(source, target);
            if let Some(&pos) = self.index.get(&key) {
                let existing = &mut self.edges[pos];
                existing.created = existing.created.min(created);
                return Ok(false);
            }
            self.index.insert(key, self.edges.len());
        }
        self.edges.push(edge);
        Ok(true)
    }

    pub fn build(self) -> TemporalGraph {
        TemporalGraph::from_parts(self.directed, self.allow_self_loops, self.time_unit, self.join_times, self.edges)
    }
}

/// A network whose vertices and edges carry arrival times.
#[derive(Clone, Debug, PartialEq)]
pub struct TemporalGraph {
    directed: bool,
    allow_self_loops: bool,
    time_unit: Option<String>,
    join_times: Vec<TimeStamp>,
    /// Sorted by `(created, source, target)`.
    edges: Vec<Edge>,
    /// Vertex ids sorted by `(join time, id)`.
    join_order: Vec<VertexId>,
    /// Per vertex: `(created, neighbor)` sorted by time.
    incident: Vec<Vec<(TimeStamp, VertexId)>>,
}

impl TemporalGraph {
    fn from_parts(
        directed: bool,
        allow_self_loops: bool,
        time_unit: Option<String>,
        join_times: Vec<TimeStamp>,
        mut edges: Vec<Edge>,
    ) -> Self {
        edges.sort_by_key(|e| (e.created, e.source, e.target));
        let mut join_order: Vec<VertexId> = (0..join_times.len()).collect();
        join_order.sort_by_key(|&v| (join_times[v], v));
        let mut incident = vec![Vec::new(); join_times.len()];
        for e in &edges {
            incident[e.source].push((e.created, e.target));
            if !e.is_loop() {
                incident[e.target].push((e.created, e.source));
            }
        }
        TemporalGraph { directed, allow_self_loops, time_unit, join_times, edges, join_order, incident }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn allows_self_loops(&self) -> bool {
        self.allow_self_loops
    }

    pub fn time_unit(&self) -> Option<&str> {
        self.time_unit.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.join_times.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.join_times.is_empty()
    }

    pub fn join_time(&self, v: VertexId) -> Option<TimeStamp> {
        self.join_times.get(v).copied()
    }

    pub fn join_times(&self) -> &[TimeStamp] {
        &self.join_times
    }

    /// Edges ordered by creation time.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertex ids ordered by join time, ties by id.
    pub fn join_order(&self) -> &[VertexId] {
        &self.join_order
    }

    /// Latest event in the graph (vertex join or edge creation); `0` when empty.
    pub fn t_max(&self) -> TimeStamp {
        let last_join = self.join_order.last().map(|&v| self.join_times[v]).unwrap_or(0);
        let last_edge = self.edges.last().map(|e| e.created).unwrap_or(0);
        last_join.max(last_edge)
    }

    pub fn snapshot_at(&self, horizon: TimeStamp) -> Snapshot<'_> {
        let vertex_count = self.join_order.partition_point(|&v| self.join_times[v] <= horizon);
        let edge_count = self.edges.partition_point(|e| e.created <= horizon);
        Snapshot { graph: self, horizon, vertex_count, edge_count }
    }

    pub fn snapshot_series(&self, interval: TimeStamp) -> Result<Vec<Snapshot<'_>>> {
        Ok(horizons(self.t_max(), interval)?.into_iter().map(|t| self.snapshot_at(t)).collect())
    }

    /// Number of distinct vertices connected to `v` by edges created at or
    /// before `t`, in either direction. A self-loop counts `v` once.
    pub fn degree_at(&self, v: VertexId, t: TimeStamp) -> Result<usize> {
        let incident = self.incident.get(v).ok_or(Error::VertexNotFound(v))?;
        let end = incident.partition_point(|&(created, _)| created <= t);
        let mut neighbors: Vec<VertexId> = incident[..end].iter().map(|&(_, u)| u).collect();
        neighbors.sort_unstable();
        neighbors.dedup();
        Ok(neighbors.len())
    }

    /// Returns a copy with every time stamp shifted by `-offset`.
    pub(crate) fn shifted(&self, offset: TimeStamp) -> TemporalGraph {
        let join_times = self.join_times.iter().map(|&t| t - offset).collect();
        let edges = self.edges.iter().map(|e| Edge { created: e.created - offset, ..*e }).collect();
        TemporalGraph::from_parts(self.directed, self.allow_self_loops, self.time_unit.clone(), join_times, edges)
    }
}

/// Horizons `interval, 2·interval, …` followed by `t_max` when it is not a
/// multiple of `interval`.
pub fn horizons(t_max: TimeStamp, interval: TimeStamp) -> Result<Vec<TimeStamp>> {
    if interval == 0 {
        return invalid("interval must be positive");
    }
    let mut out: Vec<TimeStamp> = (1..=t_max / interval).map(|i| i * interval).collect();
    if out.last() != Some(&t_max) {
        out.push(t_max);
    }
    Ok(out)
}

/// The graph restricted to vertices and edges that arrived by `horizon`.
#[derive(Clone, Copy, Debug)]
pub struct Snapshot<'a> {
    graph: &'a TemporalGraph,
    horizon: TimeStamp,
    vertex_count: usize,
    edge_count: usize,
}

impl<'a> Snapshot<'a> {
    pub fn graph(&self) -> &'a TemporalGraph {
        self.graph
    }

    pub fn horizon(&self) -> TimeStamp {
        self.horizon
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Vertices present at the horizon, in join order.
    pub fn vertices(&self) -> &'a [VertexId] {
        &self.graph.join_order[..self.vertex_count]
    }

    pub fn edges(&self) -> &'a [Edge] {
        &self.graph.edges[..self.edge_count]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.graph.join_time(v).is_some_and(|t| t <= self.horizon)
    }

    /// Dense local index for every snapshot vertex (`None` for absent ones).
    fn local_index(&self) -> Vec<Option<usize>> {
        let mut local = vec![None; self.graph.vertex_count()];
        for (i, &v) in self.vertices().iter().enumerate() {
            local[v] = Some(i);
        }
        local
    }

    /// Neighbor lists over local indices (position in [`Snapshot::vertices`]),
    /// direction ignored, sorted and deduplicated.
    pub fn neighbor_lists(&self, include_loops: bool) -> Vec<Vec<usize>> {
        let local = self.local_index();
        let mut lists = vec![Vec::new(); self.vertex_count];
        for e in self.edges() {
            let (Some(s), Some(t)) = (local[e.source], local[e.target]) else {
                continue;
            };
            if s == t {
                if include_loops {
                    lists[s].push(s);
                }
                continue;
            }
            lists[s].push(t);
            lists[t].push(s);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        lists
    }

    /// Degree of every snapshot vertex, aligned with [`Snapshot::vertices`].
    pub fn degrees(&self) -> Vec<usize> {
        self.neighbor_lists(true).iter().map(Vec::len).collect()
    }
}
