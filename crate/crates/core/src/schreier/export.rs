use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Edge, LabeledBall};
use crate::error::{Error, Result};

/// One line of the JSON-lines ball export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum BallRecord {
    Header {
        backend: String,
        basepoint: String,
        radius: usize,
        generators: Vec<String>,
        complete: bool,
    },
    Vertex {
        key: String,
        distance: usize,
    },
    Edge {
        source: String,
        target: String,
        generator: String,
    },
}

fn records(ball: &LabeledBall) -> Vec<BallRecord> {
    let mut out = vec![BallRecord::Header {
        backend: ball.backend.clone(),
        basepoint: ball.basepoint().to_string(),
        radius: ball.radius,
        generators: ball.generators.clone(),
        complete: ball.complete,
    }];
    out.extend(ball.vertices().map(|(key, distance)| BallRecord::Vertex {
        key: key.to_string(),
        distance,
    }));
    out.extend(ball.edges.iter().map(|e| BallRecord::Edge {
        source: ball.key(e.a).to_string(),
        target: ball.key(e.b).to_string(),
        generator: e.generator.clone(),
    }));
    out
}

pub fn to_json_lines(ball: &LabeledBall) -> String {
    let mut out = String::new();
    for r in records(ball) {
        out.push_str(&serde_json::to_string(&r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Rebuilds a ball from its JSON-lines export.
pub fn parse_json_lines(text: &str) -> Result<LabeledBall> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty()).enumerate();
    let bad = |n: usize, msg: String| Error::InvalidInput(format!("line {}: {msg}", n + 1));
    let Some((n, first)) = lines.next() else {
        return Err(Error::InvalidInput("empty ball export".into()));
    };
    let header: BallRecord = serde_json::from_str(first).map_err(|e| bad(n, e.to_string()))?;
    let BallRecord::Header {
        backend,
        basepoint,
        radius,
        generators,
        complete,
    } = header
    else {
        return Err(bad(n, "expected a header record".into()));
    };
    let mut vertices: Vec<(String, usize)> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edges = BTreeSet::new();
    for (n, line) in lines {
        match serde_json::from_str::<BallRecord>(line).map_err(|e| bad(n, e.to_string()))? {
            BallRecord::Header { .. } => return Err(bad(n, "repeated header".into())),
            BallRecord::Vertex { key, distance } => {
                if index.insert(key.clone(), vertices.len()).is_some() {
                    return Err(bad(n, format!("repeated vertex {key}")));
                }
                vertices.push((key, distance));
            }
            BallRecord::Edge {
                source,
                target,
                generator,
            } => {
                let (Some(&a), Some(&b)) = (index.get(&source), index.get(&target)) else {
                    return Err(bad(n, format!("edge {source} -- {target} has an unknown endpoint")));
                };
                edges.insert(Edge {
                    a: a.min(b),
                    b: a.max(b),
                    generator,
                });
            }
        }
    }
    if vertices.first().map(|v| v.0.as_str()) != Some(basepoint.as_str()) {
        return Err(Error::InvalidInput("first vertex is not the basepoint".into()));
    }
    Ok(LabeledBall::assemble(backend, radius, generators, vertices, edges, complete))
}

fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Undirected DOT graph; vertex labels carry the key and distance, edge
/// labels the generator name.
pub fn to_dot(ball: &LabeledBall) -> String {
    let mut out = String::from("graph ball {\n");
    let _ = writeln!(
        out,
        "  graph [backend={}, basepoint={}, radius={}];",
        quoted(&ball.backend),
        quoted(ball.basepoint()),
        ball.radius
    );
    for (key, d) in ball.vertices() {
        let _ = writeln!(out, "  {} [label={}];", quoted(key), quoted(&format!("{key} (d={d})")));
    }
    for e in &ball.edges {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}];",
            quoted(ball.key(e.a)),
            quoted(ball.key(e.b)),
            quoted(&e.generator)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::{quandle_ball, DEFAULT_VERTEX_CAP};
    use super::*;
    use crate::families::{FreeQuandle, QuandleBackend};

    #[test]
    fn json_round_trip() {
        let fq = FreeQuandle::new(['a', 'b']).unwrap();
        let gens = fq.inner_generators().unwrap();
        let ball = quandle_ball(&fq, &gens, &fq.default_base(), 3, DEFAULT_VERTEX_CAP).unwrap();
        let text = to_json_lines(&ball);
        assert_eq!(parse_json_lines(&text).unwrap(), ball);
        assert!(text.starts_with("{\"record\":\"header\""));
    }

    #[test]
    fn dot_shape() {
        let fq = FreeQuandle::new(['a', 'b']).unwrap();
        let gens = fq.inner_generators().unwrap();
        let ball = quandle_ball(&fq, &gens, &fq.default_base(), 1, DEFAULT_VERTEX_CAP).unwrap();
        let dot = to_dot(&ball);
        assert!(dot.starts_with("graph ball {\n"));
        assert!(dot.contains("\"a^1\" -- \"a^b\" [label=\"s_b^1\"];"));
        assert!(dot.contains("\"a^1\" -- \"a^1\" [label=\"s_a^1\"];"));
        assert!(dot.ends_with("}\n"));
    }
}
