//! Temporal edge-list files.
//!
//! A graph is stored as two files: a CSV edge list with the header
//! `source,target,timestamp` and a JSON metadata sidecar next to it
//! (`<path>.meta.json`). The sidecar carries the directedness and self-loop
//! policy, and the join time of every vertex that cannot be recovered from its
//! first edge (isolated vertices and vertices that joined before their first
//! edge).

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{TemporalGraph, TimeStamp, VertexId};
use crate::ingest::{build_from_records, parse_records, IngestConfig};

pub const HEADER: &str = "source,target,timestamp";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GraphMetadata {
    pub directed: bool,
    pub allow_self_loops: bool,
    #[serde(default)]
    pub time_unit_label: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub multigraph: bool,
    /// `[vertex, join_time]` for vertices whose join time precedes their first edge.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertex_join_times: Vec<(VertexId, TimeStamp)>,
}

impl GraphMetadata {
    pub fn of(g: &TemporalGraph) -> Self {
        let mut first_seen: Vec<Option<TimeStamp>> = vec![None; g.vertex_count()];
        for e in g.edges() {
            for v in [e.source, e.target] {
                first_seen[v].get_or_insert(e.created);
            }
        }
        let vertex_join_times = g
            .join_order()
            .iter()
            .filter(|&&v| first_seen[v] != g.join_time(v))
            .map(|&v| (v, g.join_times()[v]))
            .collect();
        let multigraph = {
            let mut keys: Vec<_> =
                g.edges()
                    .iter()
                    .map(|e| {
                        if g.is_directed() || e.source <= e.target {
                            (e.source, e.target)
                        } else {
                            (e.target, e.source)
                        }
                    })
                    .collect();
            keys.sort_unstable();
            keys.windows(2).any(|w| w[0] == w[1])
        };
        GraphMetadata {
            directed: g.is_directed(),
            allow_self_loops: g.allows_self_loops(),
            time_unit_label: g.time_unit().map(str::to_owned),
            multigraph,
            vertex_join_times,
        }
    }

    fn ingest_config(&self) -> IngestConfig {
        IngestConfig {
            directed: self.directed,
            allow_self_loops: self.allow_self_loops,
            dedupe: !self.multigraph,
            time_column_unit: self.time_unit_label.clone(),
            ..IngestConfig::default()
        }
    }
}

pub fn write_edge_list<W: Write>(g: &TemporalGraph, mut out: W) -> Result<()> {
    writeln!(out, "{HEADER}")?;
    for e in g.edges() {
        writeln!(out, "{},{},{}", e.source, e.target, e.created)?;
    }
    out.flush()?;
    Ok(())
}

/// Reads an edge list written by [`write_edge_list`] together with its metadata.
pub fn read_edge_list<R: BufRead>(source: R, meta: &GraphMetadata) -> Result<TemporalGraph> {
    let joins: Vec<(u64, TimeStamp)> = meta.vertex_join_times.iter().map(|&(v, t)| (v as u64, t)).collect();
    build_from_records(parse_records(source)?, &joins, &meta.ingest_config(), true)
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Writes `path` and its `.meta.json` sidecar.
pub fn save(g: &TemporalGraph, path: &Path) -> Result<()> {
    write_edge_list(g, BufWriter::new(File::create(path)?))?;
    let meta = serde_json::to_string_pretty(&GraphMetadata::of(g))?;
    std::fs::write(sidecar_path(path), meta + "\n")?;
    Ok(())
}

/// Loads an edge list; a missing sidecar means an undirected simple graph
/// without self-loops.
pub fn load(path: &Path) -> Result<TemporalGraph> {
    let meta_path = sidecar_path(path);
    let meta = if meta_path.exists() {
        serde_json::from_str(&std::fs::read_to_string(meta_path)?)?
    } else {
        GraphMetadata::default()
    };
    read_edge_list(BufReader::new(File::open(path)?), &meta)
}
