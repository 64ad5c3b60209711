//! Graph input: graph6 text, `{"n", "edges"}` JSON, or a report from a
//! previous stage carrying `results.graph6`.

use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use equilines::{graph6, GraphJson, SeidelGraph};
use serde_json::Value;

pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

pub fn parse_graph(text: &str) -> Result<SeidelGraph> {
    let t = text.trim();
    if t.is_empty() {
        bail!("no graph on input");
    }
    if !t.starts_with('{') {
        let line = t.lines().next().unwrap_or_default();
        return graph6::decode(line).map_err(|e| anyhow!("invalid graph6 input: {e}"));
    }
    let v: Value = serde_json::from_str(t).context("invalid JSON input")?;
    if v.get("n").is_some() && v.get("edges").is_some() {
        let j: GraphJson = serde_json::from_value(v).context("invalid {n, edges} object")?;
        return SeidelGraph::try_from(j).map_err(|e| anyhow!("invalid graph: {e}"));
    }
    let g6 = v
        .get("graph6")
        .or_else(|| v.pointer("/results/graph6"))
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("JSON input has neither {{n, edges}} nor a graph6 field"))?;
    graph6::decode(g6).map_err(|e| anyhow!("invalid graph6 field: {e}"))
}

/// A graph given inline as graph6, or the path of a file holding one.
pub fn parse_graph_arg(arg: &str) -> Result<SeidelGraph> {
    let p = Path::new(arg);
    if p.is_file() {
        parse_graph(&read_source(Some(p))?)
    } else {
        parse_graph(arg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let c5 = SeidelGraph::cycle(5).unwrap();
        let g6 = graph6::encode(&c5);
        assert_eq!(parse_graph(&format!("{g6}\n")).unwrap(), c5);
        assert_eq!(parse_graph(&format!(">>graph6<<{g6}")).unwrap(), c5);
        let j = serde_json::to_string(&GraphJson::from(&c5)).unwrap();
        assert_eq!(parse_graph(&j).unwrap(), c5);
        let report = format!(r#"{{"command":"construct","results":{{"graph6":"{g6}"}}}}"#);
        assert_eq!(parse_graph(&report).unwrap(), c5);
    }

    #[test]
    fn rejected_forms() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("{\"x\": 1}").is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(parse_graph("\u{1}").is_err());
    }
}
