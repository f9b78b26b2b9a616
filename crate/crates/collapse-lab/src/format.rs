//! Plain-text input formats.
//!
//! Complexes: one facet per line, vertex ids separated by whitespace. The
//! directive line `#void` denotes the void complex and `#empty` the complex
//! `{∅}`; neither may be mixed with facet lines. Any other line starting
//! with `#` is a comment.
//!
//! Hypergraphs: one edge per line, same id syntax, edges kept in file
//! order. An optional header `#parts: 1-3,4-6` declares a partition of the
//! ground set. Graphs are hypergraphs whose edges all have two vertices; an
//! optional header `#vertices: 1-8` declares isolated vertices that no edge
//! mentions.

use collapse_core::hypergraph::{Graph, Hypergraph};
use collapse_core::{Simplex, SimplicialComplex, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Structure(String),
}

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line {
        line,
        msg: msg.into(),
    }
}

/// Parses one whitespace-separated list of vertex ids. Duplicates are
/// rejected: a repeated id in a facet or edge is always a typo, and
/// silently deduplicating would change the face.
fn parse_vertex_line(line: usize, text: &str) -> Result<Simplex, FormatError> {
    let mut verts = Vec::new();
    for tok in text.split_whitespace() {
        let v: Vertex = tok
            .parse()
            .map_err(|_| line_err(line, format!("expected a vertex id, found {tok:?}")))?;
        if verts.contains(&v) {
            return Err(line_err(line, format!("vertex {v} repeated")));
        }
        verts.push(v);
    }
    Ok(Simplex::new(verts))
}

/// Parses `1-3,7,9-10` into the listed ids.
fn parse_id_ranges(line: usize, text: &str) -> Result<Vec<Vertex>, FormatError> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(line_err(line, "empty range entry"));
        }
        let (lo, hi) = match piece.split_once('-') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (piece, piece),
        };
        let lo: Vertex = lo
            .parse()
            .map_err(|_| line_err(line, format!("bad id {lo:?} in range list")))?;
        let hi: Vertex = hi
            .parse()
            .map_err(|_| line_err(line, format!("bad id {hi:?} in range list")))?;
        if hi < lo {
            return Err(line_err(line, format!("range {piece:?} is reversed")));
        }
        for v in lo..=hi {
            if out.contains(&v) {
                return Err(line_err(line, format!("id {v} repeated in range list")));
            }
            out.push(v);
        }
    }
    Ok(out)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    Ok(parse_complex_with_order(text)?.0)
}

/// As `parse_complex`, also returning the facet lines in file order (the
/// `given` ordering mode). For a `#empty` file the order is the single
/// empty face.
pub fn parse_complex_with_order(
    text: &str,
) -> Result<(SimplicialComplex, Vec<Simplex>), FormatError> {
    let mut facets: Vec<Simplex> = Vec::new();
    let mut directive: Option<(&str, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let word = rest.trim();
            if word == "void" || word == "empty" {
                if let Some((prev, at)) = directive {
                    return Err(line_err(
                        line,
                        format!("#{word} conflicts with #{prev} on line {at}"),
                    ));
                }
                directive = Some((if word == "void" { "void" } else { "empty" }, line));
            }
            continue;
        }
        let s = parse_vertex_line(line, trimmed)?;
        if s.is_empty() {
            return Err(line_err(line, "facet line has no vertices"));
        }
        facets.push(s);
    }
    match directive {
        Some(("void", at)) => {
            if !facets.is_empty() {
                return Err(line_err(at, "#void cannot be mixed with facet lines"));
            }
            Ok((SimplicialComplex::void(), Vec::new()))
        }
        Some((_, at)) => {
            if !facets.is_empty() {
                return Err(line_err(at, "#empty cannot be mixed with facet lines"));
            }
            Ok((SimplicialComplex::empty(), vec![Simplex::empty()]))
        }
        None => {
            if facets.is_empty() {
                return Err(FormatError::Structure(
                    "no facets found; write #void or #empty for a complex with none".into(),
                ));
            }
            let complex = SimplicialComplex::from_facets(facets.iter().cloned());
            Ok((complex, facets))
        }
    }
}

pub fn write_complex(x: &SimplicialComplex) -> String {
    if x.is_void() {
        return "#void\n".into();
    }
    if x.is_empty_complex() {
        return "#empty\n".into();
    }
    let mut out = String::new();
    for f in x.facets() {
        let ids: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let mut edges: Vec<Simplex> = Vec::new();
    let mut parts: Option<Vec<Simplex>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(ranges) = rest.trim().strip_prefix("parts:") {
                if parts.is_some() {
                    return Err(line_err(line, "#parts declared twice"));
                }
                let mut seen: Vec<Vertex> = Vec::new();
                let mut list = Vec::new();
                for piece in ranges.split(',') {
                    let ids = parse_id_ranges(line, piece)?;
                    for &v in &ids {
                        if seen.contains(&v) {
                            return Err(line_err(line, format!("id {v} in two parts")));
                        }
                        seen.push(v);
                    }
                    list.push(Simplex::new(ids));
                }
                parts = Some(list);
            }
            continue;
        }
        let e = parse_vertex_line(line, trimmed)?;
        if e.is_empty() {
            return Err(line_err(line, "edge line has no vertices"));
        }
        if edges.contains(&e) {
            return Err(line_err(line, format!("edge {e:?} repeated")));
        }
        edges.push(e);
    }
    if edges.is_empty() {
        return Err(FormatError::Structure("no edges found".into()));
    }
    match parts {
        None => Hypergraph::new(edges),
        Some(list) => Hypergraph::with_parts(edges, list),
    }
    .map_err(|e| FormatError::Structure(e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Vec<Vertex> = Vec::new();
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(ranges) = rest.trim().strip_prefix("vertices:") {
                for v in parse_id_ranges(line, ranges)? {
                    if !declared.contains(&v) {
                        declared.push(v);
                    }
                }
            }
            continue;
        }
        let e = parse_vertex_line(line, trimmed)?;
        if e.size() != 2 {
            return Err(line_err(
                line,
                format!("graph edges need exactly two vertices, found {}", e.size()),
            ));
        }
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        if pairs.contains(&(a, b)) {
            return Err(line_err(line, format!("edge {a} {b} repeated")));
        }
        pairs.push((a, b));
    }
    if declared.is_empty() && pairs.is_empty() {
        return Err(FormatError::Structure(
            "no edges found; declare #vertices: for an edgeless graph".into(),
        ));
    }
    let mut verts = declared;
    for &(a, b) in &pairs {
        if !verts.contains(&a) {
            verts.push(a);
        }
        if !verts.contains(&b) {
            verts.push(b);
        }
    }
    verts.sort_unstable();
    Graph::new(verts, pairs).map_err(|e| FormatError::Structure(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.iter().copied())
    }

    #[test]
    fn complexes_round_trip() {
        let (x, order) = parse_complex_with_order("# a triangle with a tail\n1 2 3\n\n3 4\n").unwrap();
        assert_eq!(x.facets(), &[s(&[1, 2, 3]), s(&[3, 4])]);
        assert_eq!(order, vec![s(&[1, 2, 3]), s(&[3, 4])]);
        assert_eq!(write_complex(&x), "1 2 3\n3 4\n");

        let void = parse_complex("#void\n").unwrap();
        assert!(void.is_void());
        assert_eq!(write_complex(&void), "#void\n");

        let empty = parse_complex("# comment\n#empty\n").unwrap();
        assert!(empty.is_empty_complex());
        assert_eq!(write_complex(&empty), "#empty\n");

        // Non-maximal lines are absorbed in the complex but kept in the
        // ordering.
        let (y, order) = parse_complex_with_order("1 2\n1 2 3\n").unwrap();
        assert_eq!(y.facets(), &[s(&[1, 2, 3])]);
        assert_eq!(order, vec![s(&[1, 2]), s(&[1, 2, 3])]);
    }

    #[test]
    fn complex_errors_name_lines() {
        let err = parse_complex("1 2\nx y\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_complex("1 2 2\n").unwrap_err().to_string();
        assert!(err.contains("line 1") && err.contains("repeated"), "{err}");
        let err = parse_complex("#void\n1 2\n").unwrap_err().to_string();
        assert!(err.contains("mixed"), "{err}");
        let err = parse_complex("#void\n#empty\n").unwrap_err().to_string();
        assert!(err.contains("conflicts"), "{err}");
        assert!(parse_complex("# only comments\n").is_err());
    }

    #[test]
    fn hypergraphs_with_parts() {
        let h = parse_hypergraph("#parts: 1-2,3-4\n1 3\n1 4\n2 3\n2 4\n").unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.parts().unwrap(), &[s(&[1, 2]), s(&[3, 4])]);

        let h = parse_hypergraph("2 1\n5\n").unwrap();
        assert_eq!(h.edges(), &[s(&[1, 2]), s(&[5])]);
        assert_eq!(h.rank(), 2);

        let err = parse_hypergraph("1 2\n2 1\n").unwrap_err().to_string();
        assert!(err.contains("line 2") && err.contains("repeated"), "{err}");
        let err = parse_hypergraph("#parts: 1-2\n#parts: 3-4\n1\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("twice"), "{err}");
        let err = parse_hypergraph("#parts: 1-2,2-3\n1 2\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("two parts"), "{err}");
        assert!(parse_hypergraph("#parts: 1-2\n").is_err());
    }

    #[test]
    fn graphs() {
        let g = parse_graph("#vertices: 1-5\n1 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(2, 1));

        let err = parse_graph("1 2 3\n").unwrap_err().to_string();
        assert!(err.contains("two vertices"), "{err}");
        let err = parse_graph("1 1\n").unwrap_err().to_string();
        assert!(err.contains("repeated"), "{err}");

        let lonely = parse_graph("#vertices: 4\n").unwrap();
        assert_eq!(lonely.vertex_count(), 1);
        assert_eq!(lonely.edge_count(), 0);
    }
}
