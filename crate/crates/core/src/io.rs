//! On-disk formats: a JSON document and a line-oriented text form.
//!
//! Text layout: `k n m` on the first line, then `n` vertex labels one per
//! line, then `m` lines of `k` space-separated member labels. An edge line may
//! end in ` # <name>` to carry the edge name.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl HypergraphFile {
    pub fn from_hypergraph(h: &Hypergraph, meta: Option<serde_json::Value>) -> Self {
        Self {
            k: h.k(),
            vertices: h.labels().to_vec(),
            edges: h.edges().to_vec(),
            edge_names: h.edge_names().map(<[String]>::to_vec),
            meta,
        }
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        Hypergraph::build_named(self.k, self.vertices, self.edges, self.edge_names)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    /// `.txt` means text; everything else is JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("txt") => Format::Text,
            _ => Format::Json,
        }
    }
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "txt" | "text" => Ok(Format::Text),
            other => Err(Error::InvalidParams(format!("unknown format {other:?}"))),
        }
    }
}

pub fn to_json(h: &Hypergraph, meta: Option<serde_json::Value>) -> String {
    let mut s = serde_json::to_string_pretty(&HypergraphFile::from_hypergraph(h, meta))
        .expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<(Hypergraph, Option<serde_json::Value>)> {
    let file: HypergraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let meta = file.meta.clone();
    Ok((file.into_hypergraph()?, meta))
}

fn check_token(label: &str) -> Result<()> {
    if label.is_empty() || label.contains(char::is_whitespace) || label.starts_with('#') {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

pub fn to_text(h: &Hypergraph) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "{} {} {}", h.k(), h.n(), h.m()).unwrap();
    for l in h.labels() {
        check_token(l)?;
        writeln!(out, "{l}").unwrap();
    }
    for (e, members) in h.edges().iter().enumerate() {
        let line: Vec<&str> = members.iter().map(|&v| h.label(v)).collect();
        out.push_str(&line.join(" "));
        if let Some(name) = h.edge_name(e) {
            if name.contains('\n') {
                return Err(Error::InvalidLabel(name.to_string()));
            }
            write!(out, " # {name}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn from_text(s: &str) -> Result<Hypergraph> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
        .collect::<Result<_>>()?;
    let [k, n, m] = nums[..] else {
        return Err(Error::Parse(format!("header must be `k n m`, got {header:?}")));
    };
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let l = lines.next().ok_or_else(|| Error::Parse("missing vertex label".into()))?.trim();
        check_token(l).map_err(|_| Error::Parse(format!("bad vertex label {l:?}")))?;
        labels.push(l.to_string());
    }
    let mut edges = Vec::with_capacity(m);
    let mut names = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines.next().ok_or_else(|| Error::Parse("missing edge line".into()))?;
        let (members, name) = match line.split_once(" # ") {
            Some((a, b)) => (a, Some(b.trim().to_string())),
            None => (line, None),
        };
        edges.push(members.split_whitespace().map(str::to_string).collect::<Vec<_>>());
        names.push(name);
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after the last edge".into()));
    }
    let named = names.iter().filter(|n| n.is_some()).count();
    let names = match named {
        0 => None,
        _ if named == m => Some(names.into_iter().map(Option::unwrap).collect()),
        _ => return Err(Error::Parse("either every edge line carries a name or none does".into())),
    };
    let mut raw = Vec::with_capacity(m);
    for e in &edges {
        let mut out = Vec::with_capacity(e.len());
        for l in e {
            let v = labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            out.push(v);
        }
        raw.push(out);
    }
    Hypergraph::build_named(k, labels, raw, names)
}

pub fn read_file(path: &Path) -> Result<(Hypergraph, Option<serde_json::Value>)> {
    let s = std::fs::read_to_string(path)?;
    match Format::from_path(path) {
        Format::Json => from_json(&s),
        Format::Text => Ok((from_text(&s)?, None)),
    }
}

pub fn write_file(path: &Path, h: &Hypergraph, format: Format, meta: Option<serde_json::Value>) -> Result<()> {
    let s = match format {
        Format::Json => to_json(h, meta),
        Format::Text => to_text(h)?,
    };
    std::fs::write(path, s)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Hypergraph {
        Hypergraph::build_named(
            3,
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            vec![vec![3, 1, 2], vec![0, 1, 2]],
            Some(vec!["E_2".into(), "E_1".into()]),
        )
        .unwrap()
    }

    #[test]
    fn text_layout() {
        let t = to_text(&sample()).unwrap();
        assert_eq!(t, "3 4 2\na\nb\nc\nd\na b c # E_1\nb c d # E_2\n");
        assert_eq!(from_text(&t).unwrap(), sample());
    }

    #[test]
    fn text_without_names() {
        let h = from_text("2 3 2\nx\ny\nz\nz y\nx y\n").unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
        assert!(h.edge_names().is_none());
    }

    #[test]
    fn text_errors() {
        assert!(matches!(from_text(""), Err(Error::Parse(_))));
        assert!(matches!(from_text("2 2"), Err(Error::Parse(_))));
        assert!(matches!(from_text("2 2 1\na\nb\n"), Err(Error::Parse(_))));
        assert_eq!(from_text("2 2 1\na\nb\na q\n"), Err(Error::UnknownLabel("q".into())));
        assert!(matches!(from_text("2 2 1\na\nb\na a\n"), Err(Error::NonUniformEdge { .. })));
        assert!(matches!(from_text("2 2 0\na\nb\nextra\n"), Err(Error::Parse(_))));
        let spaced = Hypergraph::build(2, vec!["a b".into(), "c".into()], vec![]).unwrap();
        assert!(to_text(&spaced).is_err());
    }

    #[test]
    fn json_keeps_meta() {
        let meta = serde_json::json!({"family": "test"});
        let s = to_json(&sample(), Some(meta.clone()));
        let (h, m) = from_json(&s).unwrap();
        assert_eq!(h, sample());
        assert_eq!(m, Some(meta));
        assert!(matches!(from_json("{\"k\": 2}"), Err(Error::Parse(_))));
        assert!(matches!(
            from_json(r#"{"k":2,"vertices":["a","b"],"edges":[[0,2]]}"#),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
