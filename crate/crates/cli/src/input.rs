use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use oldoind::graph::parse_graph_text;
use oldoind::hardness::X3CInstance;
use oldoind::{Graph, VertexSet};

/// Reads an argument that names a file, `-` for stdin, or holds the text
/// itself.
pub fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {arg}"));
    }
    // Inline text may use ';' for line breaks.
    Ok(arg.replace(';', "\n"))
}

pub fn read_graph(arg: &str) -> Result<Graph> {
    let text = read_source(arg)?;
    parse_graph_text(&text).with_context(|| format!("parsing graph from {}", describe(arg)))
}

pub fn read_instance(arg: &str) -> Result<X3CInstance> {
    let text = read_source(arg)?;
    text.parse::<X3CInstance>()
        .with_context(|| format!("parsing X3C instance from {}", describe(arg)))
}

fn describe(arg: &str) -> String {
    if arg == "-" {
        "stdin".into()
    } else if Path::new(arg).is_file() {
        arg.into()
    } else {
        "inline text".into()
    }
}

/// Parses numbers separated by blanks or commas, optionally in braces.
pub fn parse_numbers(words: &[String]) -> Result<Vec<usize>> {
    let joined = words.join(" ");
    joined
        .split(|c: char| c.is_whitespace() || matches!(c, ',' | '{' | '}' | '[' | ']'))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad vertex {t:?}"))
        })
        .collect()
}

pub fn parse_set(words: &[String], limit: usize) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for v in parse_numbers(words)? {
        if v >= limit {
            bail!("vertex {v} out of range for {limit} vertices");
        }
        set.insert(v);
    }
    Ok(set)
}
