//! Deterministic serialization: edge lists, DIMACS, graph6, removed-set
//! dumps and the JSON metadata sidecar.
//!
//! Every writer emits edges as `u v` with `u < v`, sorted ascending, so two
//! writes of the same graph are byte-identical.

use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cage::moore_bound;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{BipartiteGraph, Vertex, VertexId, VertexSet};
use crate::pds::DerivedSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Dimacs,
    Graph6,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Edgelist => "edges",
            Format::Dimacs => "dimacs",
            Format::Graph6 => "g6",
        }
    }

    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "edges" | "edgelist" | "txt" => Some(Format::Edgelist),
            "dimacs" | "col" => Some(Format::Dimacs),
            "g6" | "graph6" => Some(Format::Graph6),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            "graph6" => Ok(Format::Graph6),
            _ => Err(parse_err(0, format!("unknown format {s:?}"))),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

pub fn write_graph(g: &BipartiteGraph, format: Format, sink: &mut impl Write) -> Result<()> {
    match format {
        Format::Edgelist => write_edgelist(g, sink),
        Format::Dimacs => write_dimacs(g, sink),
        Format::Graph6 => write_graph6(g, sink),
    }
}

pub fn read_graph(format: Format, source: impl BufRead) -> Result<BipartiteGraph> {
    match format {
        Format::Edgelist => read_edgelist(source),
        Format::Dimacs => read_dimacs(source),
        Format::Graph6 => read_graph6(source),
    }
}

// ---------------------------------------------------------------------------
// edge list
// ---------------------------------------------------------------------------

/// `#n <order>`, then `#v <id> <label>` per labelled vertex, then `u v`
/// per edge.
pub fn write_edgelist(g: &BipartiteGraph, sink: &mut impl Write) -> Result<()> {
    writeln!(sink, "#n {}", g.order())?;
    if let Some(labels) = g.labels() {
        for (i, v) in labels.iter().enumerate() {
            writeln!(sink, "#v {i} {v}")?;
        }
    }
    for (u, v) in g.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    Ok(())
}

/// Reads the edge-list format. Without `#n` the order is one past the
/// largest id; without a full set of `#v` lines the graph is unlabelled.
/// Other `#` lines are comments.
pub fn read_edgelist(source: impl BufRead) -> Result<BipartiteGraph> {
    let mut order: Option<usize> = None;
    let mut labels: Vec<(usize, Vertex)> = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#n") {
            order = Some(parse_num(Some(rest.trim()), lineno, "order")?);
        } else if let Some(rest) = line.strip_prefix("#v") {
            let mut it = rest.split_whitespace();
            let id: usize = parse_num(it.next(), lineno, "vertex id")?;
            let label = it
                .next()
                .ok_or_else(|| parse_err(lineno, "missing label"))?
                .parse::<Vertex>()
                .map_err(|e| parse_err(lineno, e.to_string()))?;
            labels.push((id, label));
        } else if line.starts_with('#') {
            continue;
        } else {
            let mut it = line.split_whitespace();
            let u: VertexId = parse_num(it.next(), lineno, "vertex id")?;
            let v: VertexId = parse_num(it.next(), lineno, "vertex id")?;
            if it.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens"));
            }
            edges.push((u, v));
        }
    }
    let max_id = edges
        .iter()
        .map(|&(u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    let order = order.unwrap_or(max_id);
    if max_id > order {
        return Err(parse_err(
            0,
            format!("edge endpoint {} exceeds order {order}", max_id - 1),
        ));
    }
    let labels = if labels.is_empty() {
        None
    } else {
        let mut slots = vec![None; order];
        for (id, v) in labels {
            *slots
                .get_mut(id)
                .ok_or_else(|| parse_err(0, format!("label id {id} exceeds order {order}")))? =
                Some(v);
        }
        slots.into_iter().collect::<Option<Vec<_>>>()
    };
    BipartiteGraph::from_edges(order, &edges, labels)
}

// ---------------------------------------------------------------------------
// DIMACS
// ---------------------------------------------------------------------------

pub fn write_dimacs(g: &BipartiteGraph, sink: &mut impl Write) -> Result<()> {
    writeln!(sink, "p edge {} {}", g.order(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(sink, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn read_dimacs(source: impl BufRead) -> Result<BipartiteGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if it.next() != Some("edge") {
                    return Err(parse_err(lineno, "expected \"p edge N M\""));
                }
                let n = parse_num(it.next(), lineno, "vertex count")?;
                let m = parse_num(it.next(), lineno, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                let u: usize = parse_num(it.next(), lineno, "vertex id")?;
                let v: usize = parse_num(it.next(), lineno, "vertex id")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("vertex out of range 1..={n}")));
                }
                edges.push(((u - 1) as VertexId, (v - 1) as VertexId));
            }
            Some(tok) => return Err(parse_err(lineno, format!("unknown line type {tok:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    BipartiteGraph::from_edges(n, &edges, None)
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Largest order with a 4-byte graph6 size prefix.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

pub fn write_graph6(g: &BipartiteGraph, sink: &mut impl Write) -> Result<()> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            format: "graph6",
            order: n,
        });
    }
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6) + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    // upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    let (mut acc, mut nbits) = (0u8, 0);
    for j in 1..n {
        let nb = g.neighbors(j as VertexId);
        let mut k = 0;
        for i in 0..j {
            while k < nb.len() && (nb[k] as usize) < i {
                k += 1;
            }
            let bit = k < nb.len() && nb[k] as usize == i;
            acc = (acc << 1) | bit as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    out.push(b'\n');
    sink.write_all(&out)?;
    Ok(())
}

/// Reads the first graph of a graph6 stream.
pub fn read_graph6(mut source: impl BufRead) -> Result<BipartiteGraph> {
    let mut line = String::new();
    source.read_line(&mut line)?;
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "byte outside the graph6 range 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 line")),
        [126, 126, ..] => {
            return Err(Error::TooLarge {
                format: "graph6",
                order: usize::MAX,
            })
        }
        [126, a, b, c, rest @ ..] => ((six(*a) << 12) | (six(*b) << 6) | six(*c), rest),
        [126, ..] => return Err(parse_err(1, "truncated size prefix")),
        [a, rest @ ..] => (six(*a), rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "expected {} data bytes for {n} vertices, found {}",
                nbits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i as VertexId, j as VertexId));
            }
            k += 1;
        }
    }
    BipartiteGraph::from_edges(n, &edges, None)
}

// ---------------------------------------------------------------------------
// vertex sets
// ---------------------------------------------------------------------------

/// One id per line.
pub fn write_set(set: &VertexSet, sink: &mut impl Write) -> Result<()> {
    for v in set {
        writeln!(sink, "{v}")?;
    }
    Ok(())
}

pub fn read_set(source: impl BufRead) -> Result<VertexSet> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_num(Some(line), i + 1, "vertex id")?);
    }
    Ok(out.into_iter().collect())
}

// ---------------------------------------------------------------------------
// metadata
// ---------------------------------------------------------------------------

/// Sidecar record. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub q: u32,
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
    pub family: String,
    pub xi: Option<u32>,
    pub alpha: Option<VertexId>,
    pub beta: Option<VertexId>,
    pub order: usize,
    pub degree: Option<usize>,
    pub girth: Option<u32>,
    pub removed: Option<usize>,
    pub moore_bound: Option<u64>,
    pub excess: Option<i64>,
}

impl Metadata {
    /// Measures `g` and fills in the record; `spec` is present for derived
    /// graphs.
    pub fn describe(
        g: &BipartiteGraph,
        field: &Field,
        family: &str,
        spec: Option<&DerivedSpec>,
    ) -> Metadata {
        let degree = g.regular_degree();
        let girth = g.girth();
        let moore = match (degree, girth) {
            (Some(k), Some(gi)) if k >= 2 => Some(moore_bound(k as u64, gi as u64)),
            _ => None,
        };
        Metadata {
            q: field.q(),
            p: field.p(),
            n: field.n(),
            modulus: field.modulus().to_vec(),
            family: family.to_string(),
            xi: spec.and_then(|s| s.xi),
            alpha: spec.and_then(|s| s.alpha),
            beta: spec.and_then(|s| s.beta),
            order: g.order(),
            degree,
            girth,
            removed: spec.map(|s| s.expected_removed),
            moore_bound: moore,
            excess: moore.map(|m| g.order() as i64 - m as i64),
        }
    }
}

pub fn write_metadata(meta: &Metadata, sink: &mut impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *sink, meta)?;
    writeln!(sink)?;
    Ok(())
}

pub fn read_metadata(source: impl std::io::Read) -> Result<Metadata> {
    Ok(serde_json::from_reader(source)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cage::build_gamma;
    use crate::graph::Side;
    use proptest::prelude::*;

    fn to_string(g: &BipartiteGraph, f: Format) -> String {
        let mut buf = Vec::new();
        write_graph(g, f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn plain(n: usize, edges: &[(u32, u32)]) -> BipartiteGraph {
        BipartiteGraph::from_edges(n, edges, None).unwrap()
    }

    #[test]
    fn graph6_small_examples() {
        assert_eq!(to_string(&plain(2, &[]), Format::Graph6), "A?\n");
        assert_eq!(to_string(&plain(2, &[(0, 1)]), Format::Graph6), "A_\n");
        assert_eq!(to_string(&plain(0, &[]), Format::Graph6), "?\n");
        // path 0-1-2-3 (bits 1,0,1,0,0,1 -> 101001)
        assert_eq!(
            to_string(&plain(4, &[(0, 1), (1, 2), (2, 3)]), Format::Graph6),
            "Ch\n"
        );
    }

    #[test]
    fn graph6_gamma2_matches_reference_encoder() {
        // produced by networkx.to_graph6_bytes on the same edge list
        let want = "]?????????????????CP?PC?a_?a_CAO@AC?HA??oG?W?O?B?O?K?_??WG??@`???BG???B_??\n";
        assert_eq!(to_string(&build_gamma(2).unwrap(), Format::Graph6), want);
    }

    #[test]
    fn graph6_long_prefix() {
        let g = build_gamma(3).unwrap();
        let s = to_string(&g, Format::Graph6);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 16]);
        let back = read_graph6(s.as_bytes()).unwrap();
        assert_eq!(
            back.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn dimacs_header_for_gamma2() {
        let s = to_string(&build_gamma(2).unwrap(), Format::Dimacs);
        assert_eq!(s.lines().next(), Some("p edge 30 45"));
        assert_eq!(s.lines().count(), 46);
        let back = read_dimacs(s.as_bytes()).unwrap();
        assert_eq!(back.edge_count(), 45);
    }

    #[test]
    fn edgelist_round_trip_keeps_labels() {
        let g = build_gamma(3).unwrap();
        let s = to_string(&g, Format::Edgelist);
        let back = read_edgelist(s.as_bytes()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(0).unwrap().side, Side::Point);
        assert_eq!(to_string(&back, Format::Edgelist), s);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "#n 3\n0 1\n1 x\n";
        assert!(matches!(
            read_edgelist(bad.as_bytes()),
            Err(Error::Parse { line: 3, .. })
        ));
        let bad = "p edge 2 1\ne 1 3\n";
        assert!(matches!(
            read_dimacs(bad.as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(read_dimacs("p edge 2 2\ne 1 2\n".as_bytes()).is_err());
        assert!(read_graph6("A\n".as_bytes()).is_err());
        assert!(read_edgelist("#n 2\n0 5\n".as_bytes()).is_err());
    }

    #[test]
    fn set_round_trip() {
        let s: VertexSet = [9, 2, 4].into_iter().collect();
        let mut buf = Vec::new();
        write_set(&s, &mut buf).unwrap();
        assert_eq!(buf, b"2\n4\n9\n");
        assert_eq!(read_set(buf.as_slice()).unwrap(), s);
    }

    #[test]
    fn metadata_for_gamma3() {
        let g = build_gamma(3).unwrap();
        let m = Metadata::describe(&g, g.field().unwrap(), "gamma", None);
        assert_eq!(
            (m.order, m.degree, m.girth, m.excess),
            (80, Some(4), Some(8), Some(0))
        );
        let mut buf = Vec::new();
        write_metadata(&m, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let keys = [
            "q",
            "p",
            "n",
            "modulus",
            "family",
            "xi",
            "alpha",
            "beta",
            "order",
            "degree",
            "girth",
            "removed",
            "moore_bound",
            "excess",
        ];
        let pos: Vec<_> = keys
            .iter()
            .map(|k| text.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\"xi\": null"));
        assert_eq!(read_metadata(text.as_bytes()).unwrap(), m);
    }

    #[test]
    fn format_from_path() {
        assert_eq!(Format::from_path(Path::new("a/b.g6")), Some(Format::Graph6));
        assert_eq!(
            Format::from_path(Path::new("x.dimacs")),
            Some(Format::Dimacs)
        );
        assert_eq!(
            Format::from_path(Path::new("x.edges")),
            Some(Format::Edgelist)
        );
        assert_eq!(Format::from_path(Path::new("x")), None);
    }

    fn arb_graph() -> impl Strategy<Value = BipartiteGraph> {
        (1usize..40).prop_flat_map(|n| {
            prop::collection::vec((0..n as u32, 0..n as u32), 0..80).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                BipartiteGraph::from_edges(n, &edges, None).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn every_format_round_trips(g in arb_graph()) {
            for f in [Format::Edgelist, Format::Dimacs, Format::Graph6] {
                let s = to_string(&g, f);
                let back = read_graph(f, s.as_bytes()).unwrap();
                prop_assert_eq!(back.order(), g.order());
                prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
                prop_assert_eq!(to_string(&back, f), s);
            }
        }
    }
}
