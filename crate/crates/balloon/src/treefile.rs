//! Tree files: either one `parent child` pair per line (node 0 is the root,
//! `#` starts a comment) or a single nested-parentheses term such as
//! `(()(()))`, where every pair of parentheses is a node.

use balloon_core::RootedTree;

use crate::error::{CliError, Result};

pub fn parse_tree(text: &str) -> Result<RootedTree> {
    match text.trim_start().chars().next() {
        Some('(') => parse_parens(text),
        _ => parse_edges(text),
    }
}

fn parse_edges(text: &str) -> Result<RootedTree> {
    let mut edges = Vec::new();
    let mut max_id = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| CliError::TreeFile { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [p, c] = fields[..] else {
            return Err(err(format!("expected `parent child`, got {line:?}")));
        };
        let p: usize = p.parse().map_err(|_| err(format!("bad node id {p:?}")))?;
        let c: usize = c.parse().map_err(|_| err(format!("bad node id {c:?}")))?;
        max_id = max_id.max(p).max(c);
        edges.push((p, c));
    }
    Ok(RootedTree::from_edges(max_id + 1, &edges)?)
}

fn parse_parens(text: &str) -> Result<RootedTree> {
    let mut parents: Vec<Option<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut closed = false;
    for (i, line) in text.lines().enumerate() {
        let err = |message: &str| CliError::TreeFile { line: i + 1, message: message.into() };
        for ch in line.chars() {
            match ch {
                '(' if closed => return Err(err("text after the root term")),
                '(' => {
                    parents.push(stack.last().copied());
                    stack.push(parents.len() - 1);
                }
                ')' => {
                    stack.pop().ok_or_else(|| err("unbalanced `)`"))?;
                    closed = stack.is_empty();
                }
                c if c.is_whitespace() => {}
                _ => return Err(err("unexpected character")),
            }
        }
    }
    if !stack.is_empty() || parents.is_empty() {
        return Err(CliError::TreeFile { line: text.lines().count().max(1), message: "unbalanced `(`".into() });
    }
    Ok(RootedTree::from_parents(parents)?)
}

/// Edge-list form, children in increasing id order.
pub fn emit_edges(t: &RootedTree) -> String {
    let mut out = String::new();
    for v in 0..t.len() {
        if let Some(p) = t.parent(v) {
            out.push_str(&format!("{p} {v}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list() {
        let t = parse_tree("# a path\n0 1\n1 2\n\n").unwrap();
        assert_eq!(t, RootedTree::path(3).unwrap());
        assert_eq!(parse_tree(&emit_edges(&t)).unwrap(), t);
        assert_eq!(parse_tree("").unwrap().len(), 1);
    }

    #[test]
    fn parentheses() {
        let t = parse_tree("(()\n (()()))").unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.children(0), &[1, 2]);
        assert_eq!(t.children(2), &[3, 4]);
        assert_eq!(parse_tree("()").unwrap().len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_tree("0 1\n0 x\n"), Err(CliError::TreeFile { line: 2, .. })));
        assert!(parse_tree("0 1 2\n").is_err());
        assert!(parse_tree("1 2\n").is_err());
        assert!(parse_tree("0 1\n0 1\n").is_err());
        assert!(parse_tree("(()").is_err());
        assert!(parse_tree("())").is_err());
        assert!(parse_tree("()()").is_err());
        assert!(parse_tree("(a)").is_err());
    }
}
