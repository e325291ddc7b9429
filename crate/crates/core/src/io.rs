//! Line-oriented text format for quivers with involutions, and vector
//! literals.
//!
//! ```text
//! # comments run to end of line
//! quiver d5hat
//! vertices x1 x2 x3 x4 x5 x6
//! arrow a1 x1 x3
//! arrow a2 x2 x3
//! ...
//! involution tau
//! vmap x1 x6        # unordered pair; fixed points may be omitted
//! amap a1 a5
//! ```
//!
//! Vector literals are comma-separated `vertex=value` assignments (absent
//! vertices are 0), or a parenthesized tuple listing every vertex in
//! declaration order, e.g. `(2,3,4,4,3,2)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::quiver::{set_pair, DimVector, Involution, Quiver, Weight};

struct InvolutionBlock {
    name: String,
    line: usize,
    vpairs: Vec<(usize, String, String)>,
    apairs: Vec<(usize, String, String)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax(msg.into()).at_line(line)
}

/// Parses a quiver file into a validated quiver and its involutions, in file
/// order.
pub fn parse_quiver_file(text: &str) -> Result<(Quiver, Vec<Involution>)> {
    let mut name: Option<(usize, String)> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut blocks: Vec<InvolutionBlock> = Vec::new();
    let mut seen_vertices = std::collections::HashSet::new();
    let mut seen_arrows = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = tokens.split_first() else {
            continue;
        };
        if directive != "quiver" && name.is_none() {
            return Err(syntax(line, "file must start with `quiver <name>`"));
        }
        match directive {
            "quiver" => {
                if name.is_some() {
                    return Err(syntax(line, "duplicate `quiver` line"));
                }
                let [n] = args else {
                    return Err(syntax(line, "expected `quiver <name>`"));
                };
                name = Some((line, n.to_string()));
            }
            "vertices" => {
                if !arrows.is_empty() || !blocks.is_empty() {
                    return Err(syntax(
                        line,
                        "`vertices` must precede arrows and involutions",
                    ));
                }
                for v in args {
                    if !seen_vertices.insert(v.to_string()) {
                        return Err(Error::DuplicateId {
                            kind: "vertex",
                            id: v.to_string(),
                        }
                        .at_line(line));
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                if !blocks.is_empty() {
                    return Err(syntax(line, "arrows must precede involution blocks"));
                }
                let [id, tail, head] = args else {
                    return Err(syntax(line, "expected `arrow <id> <tail> <head>`"));
                };
                for v in [tail, head] {
                    if !seen_vertices.contains(*v) {
                        return Err(Error::DanglingEndpoint {
                            arrow: id.to_string(),
                            vertex: v.to_string(),
                        }
                        .at_line(line));
                    }
                }
                if !seen_arrows.insert(id.to_string()) {
                    return Err(Error::DuplicateId {
                        kind: "arrow",
                        id: id.to_string(),
                    }
                    .at_line(line));
                }
                arrows.push((id.to_string(), tail.to_string(), head.to_string()));
            }
            "involution" => {
                let [n] = args else {
                    return Err(syntax(line, "expected `involution <name>`"));
                };
                if blocks.iter().any(|b| b.name == *n) {
                    return Err(Error::DuplicateId {
                        kind: "involution",
                        id: n.to_string(),
                    }
                    .at_line(line));
                }
                blocks.push(InvolutionBlock {
                    name: n.to_string(),
                    line,
                    vpairs: Vec::new(),
                    apairs: Vec::new(),
                });
            }
            "vmap" | "amap" => {
                let Some(block) = blocks.last_mut() else {
                    return Err(syntax(
                        line,
                        format!("`{directive}` outside an involution block"),
                    ));
                };
                let [x, y] = args else {
                    return Err(syntax(line, format!("expected `{directive} <id> <id>`")));
                };
                let entry = (line, x.to_string(), y.to_string());
                if directive == "vmap" {
                    block.vpairs.push(entry);
                } else {
                    block.apairs.push(entry);
                }
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let Some((qline, qname)) = name else {
        return Err(syntax(1, "empty quiver file"));
    };
    let q = Quiver::new(qname, &vertices, &arrows).map_err(|e| e.at_line(qline))?;
    let arrow_ids: Vec<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
    let mut invs = Vec::with_capacity(blocks.len());
    for b in blocks {
        let mut vmap: Vec<usize> = (0..q.vertex_count()).collect();
        for (line, x, y) in &b.vpairs {
            let (x, y) = (
                q.vertex(x).map_err(|e| e.at_line(*line))?,
                q.vertex(y).map_err(|e| e.at_line(*line))?,
            );
            set_pair(&mut vmap, x, y, &b.name, "vertex", q.vertices())
                .map_err(|e| e.at_line(*line))?;
        }
        let mut amap: Vec<usize> = (0..q.arrows().len()).collect();
        for (line, x, y) in &b.apairs {
            let (x, y) = (
                q.arrow(x).map_err(|e| e.at_line(*line))?,
                q.arrow(y).map_err(|e| e.at_line(*line))?,
            );
            set_pair(&mut amap, x, y, &b.name, "arrow", &arrow_ids)
                .map_err(|e| e.at_line(*line))?;
        }
        invs.push(Involution::from_maps(&q, b.name, vmap, amap).map_err(|e| e.at_line(b.line))?);
    }
    Ok((q, invs))
}

/// Serializes a quiver and involutions. Each swapped pair is written once,
/// smaller declaration index first; fixed points are omitted.
pub fn serialize_quiver_file(q: &Quiver, invs: &[Involution]) -> String {
    let mut out = String::new();
    writeln!(out, "quiver {}", q.name()).unwrap();
    writeln!(out, "vertices {}", q.vertices().join(" ")).unwrap();
    for a in q.arrows() {
        writeln!(
            out,
            "arrow {} {} {}",
            a.id,
            q.vertices()[a.tail],
            q.vertices()[a.head]
        )
        .unwrap();
    }
    for inv in invs {
        writeln!(out, "involution {}", inv.name()).unwrap();
        for (x, &y) in inv.vertex_map().iter().enumerate() {
            if x < y {
                writeln!(out, "vmap {} {}", q.vertices()[x], q.vertices()[y]).unwrap();
            }
        }
        for (a, &b) in inv.arrow_map().iter().enumerate() {
            if a < b {
                writeln!(out, "amap {} {}", q.arrows()[a].id, q.arrows()[b].id).unwrap();
            }
        }
    }
    out
}

fn parse_entries(q: &Quiver, text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    let n = q.vertex_count();
    if let Some(inner) = text.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::Syntax(format!("unterminated tuple `{text}`")))?;
        let values = inner
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| Error::Syntax(format!("bad integer `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: values.len(),
            });
        }
        return Ok(values);
    }
    let mut values = vec![0i64; n];
    let mut assigned = vec![false; n];
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (id, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Syntax(format!("expected `vertex=value`, got `{item}`")))?;
        let x = q.vertex(id.trim())?;
        if assigned[x] {
            return Err(Error::Syntax(format!(
                "vertex `{}` assigned twice",
                id.trim()
            )));
        }
        assigned[x] = true;
        values[x] = value
            .trim()
            .parse()
            .map_err(|_| Error::Syntax(format!("bad integer `{}`", value.trim())))?;
    }
    Ok(values)
}

/// Parses a dimension-vector literal; negative entries are rejected.
pub fn parse_dim(q: &Quiver, text: &str) -> Result<DimVector> {
    let values = parse_entries(q, text)?;
    values
        .into_iter()
        .map(|x| {
            u32::try_from(x)
                .map_err(|_| Error::Syntax(format!("dimension entry {x} is negative or too large")))
        })
        .collect::<Result<Vec<_>>>()
        .map(DimVector::new)
}

/// Parses a weight literal.
pub fn parse_weight(q: &Quiver, text: &str) -> Result<Weight> {
    parse_entries(q, text).map(Weight::new)
}

/// Parses a comma-separated integer list such as `1,0,-1`.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Syntax(format!("bad integer `{s}`")))
        })
        .collect()
}
