//! Digraphs as explicit arc sets, plus a line-oriented edge-list format.
//!
//! Vertices of an order-`n` digraph are `0..n`. Loops are allowed, parallel
//! arcs are not. The edge-list format looks like:
//!
//! ```text
//! # optional comment
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! 3 0
//! ```
//!
//! The first significant line `n <order>` fixes the order; every later
//! significant line is one arc `u v` with 0-based endpoints. Full-line `#`
//! comments and blank lines are skipped. Duplicate arcs are rejected.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite digraph on vertices `0..order`, stored as a sorted arc set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    order: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    /// Creates a digraph with no arcs.
    pub fn empty(order: usize) -> Self {
        Digraph {
            order,
            arcs: BTreeSet::new(),
        }
    }

    /// Creates a digraph from an arc list, rejecting out-of-range endpoints
    /// and duplicate arcs.
    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(order);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Inserts the arc `u -> v`.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for &index in &[u, v] {
            if index >= self.order {
                return Err(Error::IndexOutOfRange {
                    index,
                    order: self.order,
                });
            }
        }
        if !self.arcs.insert((u, v)) {
            return Err(Error::DuplicateArc { u, v });
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    /// The arcs in sorted order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    /// Whether the arc `u -> v` is present.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Out-neighbours of `u`, in increasing order.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .range((u, 0)..=(u, usize::MAX))
            .map(|&(_, v)| v)
    }

    /// Whether every ordered pair of vertices is joined by a walk of
    /// positive length.
    ///
    /// Under the positive-length convention an isolated vertex is *not*
    /// strongly connected to itself: the order-1 digraph qualifies only if
    /// it carries the loop.
    pub fn is_strongly_connected(&self) -> bool {
        if self.order == 0 {
            return false;
        }
        if self.order == 1 {
            return self.has_arc(0, 0);
        }
        self.reaches_all_forward(0) && self.reaches_all_backward(0)
    }

    /// Whether this digraph is exactly a single directed cycle through all
    /// vertices (every in- and out-degree 1, one strong component).
    pub fn is_cycle_graph(&self) -> bool {
        if self.order == 0 || self.arcs.len() != self.order {
            return false;
        }
        let mut out_deg = vec![0usize; self.order];
        let mut in_deg = vec![0usize; self.order];
        for &(u, v) in &self.arcs {
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        if out_deg.iter().any(|&d| d != 1) || in_deg.iter().any(|&d| d != 1) {
            return false;
        }
        self.is_strongly_connected()
    }

    fn reaches_all_forward(&self, start: usize) -> bool {
        let mut seen = vec![false; self.order];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in self.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn reaches_all_backward(&self, start: usize) -> bool {
        let mut in_neighbors = vec![Vec::new(); self.order];
        for &(u, v) in &self.arcs {
            in_neighbors[v].push(u);
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in &in_neighbors[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Parses the edge-list format described in the module documentation.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut digraph: Option<Digraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match &mut digraph {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("expected header `n <order>`, found `{line}`"),
                        });
                    }
                    let order: usize = fields[1].parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("invalid order `{}`", fields[1]),
                    })?;
                    digraph = Some(Digraph::empty(order));
                }
                Some(d) => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("expected arc `u v`, found `{line}`"),
                        });
                    }
                    let mut ends = [0usize; 2];
                    for (slot, field) in ends.iter_mut().zip(&fields) {
                        *slot = field.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("invalid vertex `{field}`"),
                        })?;
                    }
                    d.add_arc(ends[0], ends[1]).map_err(|e| Error::Parse {
                        line: line_no,
                        msg: e.to_string(),
                    })?;
                }
            }
        }
        digraph.ok_or_else(|| Error::Parse {
            line: text.lines().count() + 1,
            msg: "missing header `n <order>`".to_string(),
        })
    }

    /// Renders the digraph in the edge-list format, arcs sorted.
    ///
    /// `parse_edge_list(&d.to_edge_list())` reconstructs `d` exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.order);
        for &(u, v) in &self.arcs {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_edge_list())
    }
}
