//! Turns a raw interaction log into a temporal graph, writes it as an edge
//! list with its metadata sidecar and reads it back.

use std::io::Cursor;

use temponet::edgelist;
use temponet::ingest::{normalize_times, read_edge_stream, IngestConfig};

const LOG: &str = "\
user,peer,day
# repeated replies collapse to the first one
17,4,1003
4,17,1005
17,9,1004
9,9,1004
23,4,1010
23,9,1011
";

fn main() -> temponet::Result<()> {
    let config = IngestConfig { time_column_unit: Some("day".into()), ..IngestConfig::default() };
    let g = normalize_times(&read_edge_stream(Cursor::new(LOG), &config)?);
    println!("vertices={} edges={} t_max={}", g.vertex_count(), g.edge_count(), g.t_max());
    for v in g.join_order() {
        println!("vertex {v} joined at {}", g.join_time(*v).unwrap());
    }

    let dir = std::env::temp_dir().join(format!("temponet-ingest-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("log.csv");
    edgelist::save(&g, &path)?;
    let back = edgelist::load(&path)?;
    println!("round trip equal: {}", back == g);
    print!("{}", std::fs::read_to_string(&path)?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
