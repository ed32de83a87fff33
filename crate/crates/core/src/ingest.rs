//! Building temporal graphs from timestamped edge streams.
//!
//! Input is line-oriented text with three integer columns
//! `source target timestamp`, separated by commas or whitespace. Lines
//! starting with `#` are comments and a leading non-numeric header line is
//! skipped. A vertex joins the network at the earliest time stamp of any
//! record that mentions it.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{GraphBuilder, TemporalGraph, TimeStamp};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct IngestConfig {
    pub directed: bool,
    pub allow_self_loops: bool,
    /// Graphs with fewer edges than this are rejected.
    pub min_edges: usize,
    /// Collapse repeated interactions into one edge stamped with the earliest time.
    pub dedupe: bool,
    pub time_column_unit: Option<String>,
    /// Drop every record touching a vertex whose final degree exceeds this cap.
    pub max_degree: Option<usize>,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            directed: false,
            allow_self_loops: false,
            min_edges: 0,
            dedupe: true,
            time_column_unit: None,
            max_degree: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Record {
    pub source: u64,
    pub target: u64,
    pub time: TimeStamp,
}

fn parse_field(field: &str, line: usize) -> Result<u64> {
    field
        .parse()
        .map_err(|_| Error::Parse { line, message: format!("expected a non-negative integer, found {field:?}") })
}

pub(crate) fn parse_records<R: BufRead>(source: R) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    let mut seen_data = false;
    for (i, line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()).collect();
        if !seen_data {
            seen_data = true;
            let is_header = fields.iter().all(|f| f.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_'));
            if is_header {
                continue;
            }
        }
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 3 fields (source, target, timestamp), found {}", fields.len()),
            });
        }
        records.push(Record {
            source: parse_field(fields[0], line_no)?,
            target: parse_field(fields[1], line_no)?,
            time: parse_field(fields[2], line_no)?,
        });
    }
    Ok(records)
}

fn drop_high_degree(records: Vec<Record>, cap: usize) -> Vec<Record> {
    let mut neighbors: HashMap<u64, HashSet<u64>> = HashMap::new();
    for r in &records {
        neighbors.entry(r.source).or_default().insert(r.target);
        neighbors.entry(r.target).or_default().insert(r.source);
    }
    let over: HashSet<u64> = neighbors.into_iter().filter(|(_, n)| n.len() > cap).map(|(v, _)| v).collect();
    records.into_iter().filter(|r| !over.contains(&r.source) && !over.contains(&r.target)).collect()
}

/// Builds a graph from parsed records plus optional explicit join times
/// (used for vertices that joined before their first edge, or never had one).
pub(crate) fn build_from_records(
    records: Vec<Record>,
    explicit_joins: &[(u64, TimeStamp)],
    config: &IngestConfig,
    allow_empty: bool,
) -> Result<TemporalGraph> {
    let records = match config.max_degree {
        Some(cap) => drop_high_degree(records, cap),
        None => records,
    };
    if records.is_empty() && explicit_joins.is_empty() && !allow_empty {
        return invalid("edge stream contains no records");
    }

    let mut joins: HashMap<u64, TimeStamp> = HashMap::new();
    let mut note = |v: u64, t: TimeStamp| {
        joins.entry(v).and_modify(|j| *j = (*j).min(t)).or_insert(t);
    };
    for r in &records {
        note(r.source, r.time);
        note(r.target, r.time);
    }
    for &(v, t) in explicit_joins {
        note(v, t);
    }

    let mut order: Vec<(TimeStamp, u64)> = joins.iter().map(|(&v, &t)| (t, v)).collect();
    order.sort_unstable();

    let mut builder =
        GraphBuilder::new(config.directed).allow_self_loops(config.allow_self_loops).multigraph(!config.dedupe);
    if let Some(unit) = &config.time_column_unit {
        builder = builder.time_unit(unit.clone());
    }
    let mut dense = HashMap::with_capacity(order.len());
    for (t, v) in order {
        dense.insert(v, builder.add_vertex(t));
    }
    for r in &records {
        if r.source == r.target && !config.allow_self_loops {
            continue;
        }
        builder.add_edge(dense[&r.source], dense[&r.target], r.time)?;
    }
    if builder.edge_count() < config.min_edges {
        return Err(Error::TooFewEdges { edges: builder.edge_count(), min_edges: config.min_edges });
    }
    Ok(builder.build())
}

/// Reads a timestamped edge stream into a [`TemporalGraph`].
///
/// Vertex ids in the result are dense and assigned in join order (ties by the
/// original id). Records need not be sorted by time.
pub fn read_edge_stream<R: BufRead>(source: R, config: &IngestConfig) -> Result<TemporalGraph> {
    build_from_records(parse_records(source)?, &[], config, false)
}

/// Shifts every time stamp so the earliest join happens at time 0.
pub fn normalize_times(g: &TemporalGraph) -> TemporalGraph {
    match g.join_times().iter().min() {
        Some(&offset) if offset > 0 => g.shifted(offset),
        _ => g.clone(),
    }
}
