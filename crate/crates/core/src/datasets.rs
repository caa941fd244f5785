//! Graph and filter ingestion: SNAP-style edge lists, TU-Dortmund kernel
//! datasets, vertex attribute sidecars and the download manifest.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use flate2::read::MultiGzDecoder;
use serde::{Deserialize, Serialize};

use crate::coral::core_numbers;
use crate::error::{invalid, Error, Result};
use crate::filter::VertexFilter;
use crate::graph::{Graph, NormalizeStats, VertexId};

fn parse_id(tok: &str, line: usize) -> Result<VertexId> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a vertex id, found {tok:?}"),
    })
}

/// Reads whitespace-separated edge pairs, one per line.
///
/// Lines starting with `#` and blank lines are skipped. Columns after the
/// second are ignored, so weighted or timestamped lists load as plain
/// graphs. A line with a single id declares a vertex without edges. Edge
/// direction is dropped, self-loops are removed and repeated edges merged.
pub fn load_edge_list<R: Read>(source: R) -> Result<(Graph, NormalizeStats)> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut toks = text.split_whitespace();
        let u = parse_id(toks.next().unwrap_or_default(), i + 1)?;
        match toks.next() {
            Some(t) => edges.push((u, parse_id(t, i + 1)?)),
            None => vertices.push(u),
        }
    }
    Ok(Graph::from_parts(vertices, edges))
}

/// Opens `path` as an edge list, decompressing when it ends in `.gz`.
pub fn load_edge_list_path(path: &Path) -> Result<(Graph, NormalizeStats)> {
    let file = File::open(path)
        .map_err(|e| Error::InvalidInput(format!("cannot open {}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "gz") {
        load_edge_list(MultiGzDecoder::new(file))
    } else {
        load_edge_list(file)
    }
}

/// Writes `u v` per edge with `u < v`, then one line per isolated vertex.
/// Reloading with [`load_edge_list`] gives back the same graph.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    for &v in g.vertices() {
        if g.degree(v)? == 0 {
            writeln!(out, "{v}")?;
        }
    }
    Ok(())
}

/// Reads a `vertex_id,value` CSV with a header row.
pub fn load_attribute_csv<R: Read>(source: R) -> Result<VertexFilter> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source);
    let mut f = VertexFilter::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        if rec.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected 2 columns, found {}", rec.len()),
            });
        }
        let v = parse_id(&rec[0], line)?;
        let x: f64 = rec[1].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected a number, found {:?}", &rec[1]),
        })?;
        if f.get(v).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} listed twice"),
            });
        }
        f.insert(v, x).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    Ok(f)
}

pub fn write_attribute_csv<W: Write>(f: &VertexFilter, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["vertex_id", "value"])?;
    for (v, x) in f.iter() {
        w.write_record([v.to_string(), x.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Where the filter values come from.
#[derive(Debug, Clone, PartialEq)]
pub enum FilterSpec {
    Degree,
    Coreness,
    Constant(f64),
    /// Sidecar CSV of `vertex_id,value`.
    Attribute(PathBuf),
}

impl FromStr for FilterSpec {
    type Err = Error;

    /// `degree`, `coreness`, `constant:<v>` or `attr:<path>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "degree" => Ok(FilterSpec::Degree),
            None if s == "coreness" => Ok(FilterSpec::Coreness),
            Some(("constant", v)) => match v.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(FilterSpec::Constant(x)),
                _ => invalid(format!("bad constant filter value {v:?}")),
            },
            Some(("attr", p)) if !p.is_empty() => Ok(FilterSpec::Attribute(p.into())),
            _ => invalid(format!("unknown filter {s:?}")),
        }
    }
}

/// Evaluates `spec` on `g`. Degree and coreness are computed on `g` itself,
/// so resolve on the original graph and reduce afterwards.
pub fn resolve_filter(g: &Graph, spec: &FilterSpec) -> Result<VertexFilter> {
    match spec {
        FilterSpec::Degree => Ok(VertexFilter::degree(g)),
        FilterSpec::Coreness => {
            let core = core_numbers(g);
            Ok(core.iter().map(|(v, c)| (v, c as f64)).collect())
        }
        FilterSpec::Constant(c) => VertexFilter::constant(g, *c),
        FilterSpec::Attribute(path) => {
            let file = File::open(path)
                .map_err(|e| Error::InvalidInput(format!("cannot open {}: {e}", path.display())))?;
            load_attribute_csv(file)?.restrict_to(g)
        }
    }
}

/// Induced subgraph on everything within `hops` of `center`.
pub fn ego_network(g: &Graph, center: VertexId, hops: usize) -> Result<Graph> {
    if hops == 0 {
        return invalid("ego networks need at least one hop");
    }
    g.induced_subgraph(&g.ball(center, hops)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub label: i64,
    pub name: String,
}

/// A graph classification dataset.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LabeledGraphSet {
    pub graphs: Vec<LabeledGraph>,
}

impl LabeledGraphSet {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LabeledGraph> {
        self.graphs.iter()
    }

    pub fn mean_vertex_count(&self) -> f64 {
        if self.graphs.is_empty() {
            return 0.0;
        }
        let total: usize = self.graphs.iter().map(|g| g.graph.vertex_count()).sum();
        total as f64 / self.graphs.len() as f64
    }
}

fn format_err(file: &str, line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("{file} line {line}: {msg}"))
}

fn tu_lines<R: Read>(source: R) -> impl Iterator<Item = Result<(usize, String)>> {
    BufReader::new(source)
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l.trim().to_owned())).map_err(Error::from))
        .filter(|r| !matches!(r, Ok((_, l)) if l.is_empty()))
}

/// Parses the three TU files of dataset `name`. Vertex ids are the global
/// 1-based ids of the indicator file; graph `i` is named `<name>/<i>`.
pub fn parse_tu<A: Read, I: Read, L: Read>(
    name: &str,
    edges: A,
    indicator: I,
    labels: L,
) -> Result<LabeledGraphSet> {
    let mut owner = Vec::new();
    for r in tu_lines(indicator) {
        let (line, text) = r?;
        let gid: usize = text
            .parse()
            .map_err(|_| format_err("graph_indicator", line, format!("bad graph id {text:?}")))?;
        if gid == 0 {
            return Err(format_err("graph_indicator", line, "graph ids start at 1"));
        }
        owner.push(gid);
    }
    let mut label_list = Vec::new();
    for r in tu_lines(labels) {
        let (line, text) = r?;
        let label: i64 = text
            .parse()
            .map_err(|_| format_err("graph_labels", line, format!("bad label {text:?}")))?;
        label_list.push(label);
    }
    if owner.is_empty() || label_list.is_empty() {
        return Err(Error::Format(format!("dataset {name} has no graphs")));
    }
    let count = label_list.len();
    if let Some(&bad) = owner.iter().find(|&&g| g > count) {
        return Err(Error::Format(format!(
            "graph id {bad} exceeds the {count} labelled graphs"
        )));
    }
    let mut per_graph: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); count];
    for r in tu_lines(edges) {
        let (line, text) = r?;
        let mut parts = text.split(',').map(str::trim);
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format_err(
                "A",
                line,
                format!("expected `u, v`, found {text:?}"),
            ));
        };
        let parse = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(v) if (1..=owner.len()).contains(&v) => Ok(v),
                _ => Err(format_err("A", line, format!("unknown vertex {t:?}"))),
            }
        };
        let (u, v) = (parse(a)?, parse(b)?);
        let (gu, gv) = (owner[u - 1], owner[v - 1]);
        if gu != gv {
            return Err(format_err(
                "A",
                line,
                format!("edge ({u}, {v}) joins graphs {gu} and {gv}"),
            ));
        }
        per_graph[gu - 1].push((u as VertexId, v as VertexId));
    }
    let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); count];
    for (i, &g) in owner.iter().enumerate() {
        members[g - 1].push(i as VertexId + 1);
    }
    let graphs = members
        .into_iter()
        .zip(per_graph)
        .zip(label_list)
        .enumerate()
        .map(|(i, ((vs, es), label))| LabeledGraph {
            graph: Graph::from_parts(vs, es).0,
            label,
            name: format!("{name}/{}", i + 1),
        })
        .collect();
    Ok(LabeledGraphSet { graphs })
}

/// Loads a TU-Dortmund dataset directory holding `DS_A.txt`,
/// `DS_graph_indicator.txt` and `DS_graph_labels.txt`.
pub fn load_tu_dataset(dir: &Path) -> Result<LabeledGraphSet> {
    let mut prefix = None;
    for entry in std::fs::read_dir(dir)? {
        let name = entry?.file_name();
        if let Some(p) = name.to_str().and_then(|n| n.strip_suffix("_A.txt")) {
            prefix = Some(p.to_owned());
            break;
        }
    }
    let Some(ds) = prefix else {
        return Err(Error::Format(format!(
            "no *_A.txt file in {}",
            dir.display()
        )));
    };
    let open = |suffix: &str| -> Result<File> {
        let path = dir.join(format!("{ds}_{suffix}.txt"));
        File::open(&path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
    };
    parse_tu(
        &ds,
        open("A")?,
        open("graph_indicator")?,
        open("graph_labels")?,
    )
}

/// One downloadable dataset with its expected size after normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub url: String,
    /// Hex digest of the downloaded file; empty when not pinned yet.
    pub sha256: String,
    pub vertices: usize,
    pub edges: usize,
}

/// The large-network manifest shipped with the crate.
pub const SNAP_MANIFEST: &str = include_str!("../manifest/snap.csv");

/// Reads a `name,url,sha256,vertices,edges` CSV.
pub fn load_manifest<R: Read>(source: R) -> Result<Vec<ManifestEntry>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["name", "url", "sha256", "vertices", "edges"] {
        return Err(Error::Format(format!(
            "unexpected manifest header {headers:?}"
        )));
    }
    let entries: Vec<ManifestEntry> = reader
        .deserialize()
        .collect::<std::result::Result<_, _>>()?;
    let mut seen = BTreeMap::new();
    for e in &entries {
        if seen.insert(e.name.as_str(), ()).is_some() {
            return Err(Error::Format(format!("dataset {} listed twice", e.name)));
        }
    }
    Ok(entries)
}

/// Dataset cache directory: `$CORALPRUNE_DATA`, else `./data`.
pub fn cache_dir() -> PathBuf {
    std::env::var_os("CORALPRUNE_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

/// Path of a cached download, named after the last URL segment.
pub fn cached_path(dir: &Path, entry: &ManifestEntry) -> PathBuf {
    let file = entry.url.rsplit('/').next().unwrap_or(&entry.name);
    dir.join(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn load(s: &str) -> Result<(Graph, NormalizeStats)> {
        load_edge_list(s.as_bytes())
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(load("1 2\n2 3\n").unwrap().0, path(3));
        let (g, stats) = load("# comment\n1 1\n1 2\n2 1\n").unwrap();
        assert_eq!(g, Graph::from_edges([(1, 2)]));
        assert_eq!(stats.self_loops, 1);
        assert_eq!(stats.duplicate_edges, 1);
    }

    #[test]
    fn edge_list_errors_carry_line() {
        match load("1 2\n\n3 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(load("-1 2\n").is_err());
    }

    #[test]
    fn edge_list_extras() {
        let (g, _) = load("1\t2\t0.5\n  \n7\n").unwrap();
        assert_eq!(g.vertices(), &[1, 2, 7]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let (g, _) = Graph::from_parts([9, 11], cycle(5).edges());
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(load_edge_list(buf.as_slice()).unwrap().0, g);
    }

    #[test]
    fn gz_edge_list() {
        use flate2::{write::GzEncoder, Compression};
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.txt.gz");
        let mut enc = GzEncoder::new(File::create(&p).unwrap(), Compression::default());
        enc.write_all(b"# x\n1 2\n2 3\n").unwrap();
        enc.finish().unwrap();
        assert_eq!(load_edge_list_path(&p).unwrap().0, path(3));
        assert!(load_edge_list_path(&dir.path().join("missing")).is_err());
    }

    #[test]
    fn attribute_csv() {
        let f = load_attribute_csv("vertex_id,value\n1, 0.5\n2,3\n".as_bytes()).unwrap();
        assert_eq!(f.get(1), Some(0.5));
        assert_eq!(f.get(2), Some(3.0));
        assert!(load_attribute_csv("vertex_id,value\n1,a\n".as_bytes()).is_err());
        assert!(load_attribute_csv("vertex_id,value\n1,1\n1,2\n".as_bytes()).is_err());
        assert!(load_attribute_csv("vertex_id,value\n1,inf\n".as_bytes()).is_err());

        let mut buf = Vec::new();
        write_attribute_csv(&f, &mut buf).unwrap();
        assert_eq!(load_attribute_csv(buf.as_slice()).unwrap(), f);
    }

    #[test]
    fn filter_specs() {
        assert_eq!("degree".parse::<FilterSpec>().unwrap(), FilterSpec::Degree);
        assert_eq!(
            "coreness".parse::<FilterSpec>().unwrap(),
            FilterSpec::Coreness
        );
        assert_eq!(
            "constant:-1.5".parse::<FilterSpec>().unwrap(),
            FilterSpec::Constant(-1.5)
        );
        assert_eq!(
            "attr:x.csv".parse::<FilterSpec>().unwrap(),
            FilterSpec::Attribute("x.csv".into())
        );
        for bad in ["", "deg", "constant:", "constant:nan", "attr:", "degree:1"] {
            assert!(bad.parse::<FilterSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn resolve_examples() {
        let c5 = cycle(5);
        let deg = resolve_filter(&c5, &FilterSpec::Degree).unwrap();
        assert!(deg.iter().all(|(_, x)| x == 2.0));
        let core = resolve_filter(&complete(4), &FilterSpec::Coreness).unwrap();
        assert!(core.iter().all(|(_, x)| x == 3.0));
        let zero = resolve_filter(&c5, &FilterSpec::Constant(0.0)).unwrap();
        assert_eq!(zero.len(), 5);
        assert!(zero.iter().all(|(_, x)| x == 0.0));
    }

    #[test]
    fn resolve_attribute_needs_every_vertex() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.csv");
        std::fs::write(&p, "vertex_id,value\n1,1\n2,2\n3,3\n9,0\n").unwrap();
        let f = resolve_filter(&path(3), &FilterSpec::Attribute(p.clone())).unwrap();
        assert_eq!(f.len(), 3);
        assert!(resolve_filter(&path(4), &FilterSpec::Attribute(p)).is_err());
    }

    #[test]
    fn ego_examples() {
        assert_eq!(ego_network(&star(5), 0, 1).unwrap(), star(5));
        let p = ego_network(&path(5), 3, 1).unwrap();
        assert_eq!(p, Graph::from_edges([(2, 3), (3, 4)]));
        let c = ego_network(&cycle(6), 1, 2).unwrap();
        assert_eq!(c, Graph::from_edges([(5, 6), (6, 1), (1, 2), (2, 3)]));
        assert!(ego_network(&path(3), 9, 1).is_err());
        assert!(ego_network(&path(3), 1, 0).is_err());
    }

    #[test]
    fn tu_rejects_crossing_edge() {
        let err = parse_tu(
            "X",
            "1, 2\n2, 3\n".as_bytes(),
            "1\n1\n2\n".as_bytes(),
            "0\n1\n".as_bytes(),
        )
        .unwrap_err();
        match err {
            Error::Format(msg) => assert!(msg.contains("(2, 3)"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tu_empty_directory() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(load_tu_dataset(dir.path()), Err(Error::Format(_))));
    }

    #[test]
    fn builtin_manifest_parses() {
        let m = load_manifest(SNAP_MANIFEST.as_bytes()).unwrap();
        let oregon = m.iter().find(|e| e.name == "oregon1_010526").unwrap();
        assert_eq!((oregon.vertices, oregon.edges), (11174, 23409));
        assert_eq!(m.len(), 11);
        assert!(load_manifest("a,b\n1,2\n".as_bytes()).is_err());
    }
}
