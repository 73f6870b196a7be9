//! Rooted unordered trees, heavy-path decomposition and straight-line
//! drawings with perfect angular resolution.

mod compose;
mod draw;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use compose::{compose_path, NodeFrame, PathPlacement};
pub use draw::{draw_tree, Drawing, DrawingStats, ExclusiveDisk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl RootedTree {
    /// Builds a tree from a parent map; exactly one entry must be `None`.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::InvalidArgument("tree must have at least one node"));
        }
        let mut root = None;
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None if root.is_some() => return Err(Error::InvalidArgument("tree has more than one root")),
                None => root = Some(v),
                Some(p) if p >= n => return Err(Error::InvalidArgument("parent id out of range")),
                Some(p) if p == v => return Err(Error::InvalidArgument("node is its own parent")),
                Some(p) => children[p].push(v),
            }
        }
        let root = root.ok_or(Error::InvalidArgument("tree has no root"))?;
        let tree = Self { parent, children, root };
        if tree.preorder().len() != n {
            return Err(Error::InvalidArgument("parent map contains a cycle"));
        }
        Ok(tree)
    }

    /// Builds a tree rooted at node 0 from `(parent, child)` pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.len() + 1 != n {
            return Err(Error::InvalidArgument("a tree on n nodes has n - 1 edges"));
        }
        let mut parent = vec![None; n];
        for &(p, c) in edges {
            if p >= n || c >= n {
                return Err(Error::InvalidArgument("node id out of range"));
            }
            if c == 0 {
                return Err(Error::InvalidArgument("node 0 is the root and has no parent"));
            }
            if parent[c].replace(p).is_some() {
                return Err(Error::InvalidArgument("node has two parents"));
            }
        }
        Self::from_parents(parent)
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_parents((0..n).map(|v| v.checked_sub(1)).collect())
    }

    /// Root 0 with `leaves` children.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::from_parents((0..=leaves).map(|v| if v == 0 { None } else { Some(0) }).collect())
    }

    /// Complete `k`-ary tree in which every leaf is `height` edges below the
    /// root, numbered in breadth-first order.
    pub fn complete(k: usize, height: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("arity must be positive"));
        }
        let mut n = 1usize;
        let mut level = 1usize;
        for _ in 0..height {
            level = level.checked_mul(k).ok_or(Error::InvalidArgument("tree too large"))?;
            n = n.checked_add(level).ok_or(Error::InvalidArgument("tree too large"))?;
        }
        Self::from_parents((0..n).map(|v| if v == 0 { None } else { Some((v - 1) / k) }).collect())
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// Nodes in depth-first preorder from the root.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        let mut visited = vec![false; self.len()];
        while let Some(v) = stack.pop() {
            if core::mem::replace(&mut visited[v], true) {
                continue;
            }
            order.push(v);
            stack.extend(self.children[v].iter().rev().copied());
        }
        order
    }

    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.len()];
        for &v in self.preorder().iter().rev() {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyDecomposition {
    pub sizes: Vec<usize>,
    pub heavy_child: Vec<Option<usize>>,
    /// Heavy paths, top node first. Path 0 contains the root; every other
    /// path appears after the path its top hangs off.
    pub paths: Vec<Vec<usize>>,
    pub path_of: Vec<usize>,
    /// 1 for a path without light subtrees, else one more than the deepest
    /// path hanging off it.
    pub depth: Vec<u32>,
    /// `(parent, top)` for every path except the root's.
    pub light_parent_edge: Vec<Option<(usize, usize)>>,
}

impl HeavyDecomposition {
    /// Number of light edges on the way from `v` up to the root.
    pub fn light_depth(&self, v: usize) -> usize {
        let mut count = 0;
        let mut p = self.path_of[v];
        while let Some((parent, _)) = self.light_parent_edge[p] {
            count += 1;
            p = self.path_of[parent];
        }
        count
    }
}

pub fn heavy_decomposition(t: &RootedTree) -> HeavyDecomposition {
    let n = t.len();
    let sizes = t.subtree_sizes();
    let heavy_child: Vec<Option<usize>> = (0..n)
        .map(|v| {
            t.children(v)
                .iter()
                .copied()
                .max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a)))
        })
        .collect();

    let mut paths = Vec::new();
    let mut path_of = vec![usize::MAX; n];
    let mut light_parent_edge = Vec::new();
    let mut tops = vec![(None, t.root())];
    let mut next = 0;
    while next < tops.len() {
        let (edge, top) = tops[next];
        next += 1;
        let id = paths.len();
        let mut path = Vec::new();
        let mut v = Some(top);
        while let Some(u) = v {
            path.push(u);
            path_of[u] = id;
            for &c in t.children(u) {
                if Some(c) != heavy_child[u] {
                    tops.push((Some((u, c)), c));
                }
            }
            v = heavy_child[u];
        }
        paths.push(path);
        light_parent_edge.push(edge);
    }

    let mut depth = vec![1u32; paths.len()];
    for id in (1..paths.len()).rev() {
        if let Some((parent, _)) = light_parent_edge[id] {
            let host = path_of[parent];
            depth[host] = depth[host].max(depth[id] + 1);
        }
    }
    HeavyDecomposition { sizes, heavy_child, paths, path_of, depth, light_parent_edge }
}
