//! Integer partitions, nodes and skew diagrams.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing positive
//! parts with no trailing zeros, so structural equality is mathematical
//! equality. Nodes use matrix convention with 1-based row and column.
//!
//! The text grammar is `part ("," part)*` with `part = int | int "^" int`,
//! whitespace ignored; `3^2,1` is `(3,3,1)` and the empty string is the empty
//! partition. Surrounding `[..]` or `(..)` are accepted when parsing so the
//! bracket rendering produced by `Display` round-trips.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box position `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// Edge-adjacent (not diagonal) to `other`.
    pub fn is_adjacent(&self, other: &Node) -> bool {
        (self.row == other.row && self.col.abs_diff(other.col) == 1)
            || (self.col == other.col && self.row.abs_diff(other.row) == 1)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjust {
    Add,
    Remove,
}

impl Partition {
    /// Validates and canonicalizes `parts`. Trailing zeros are dropped; a zero
    /// followed by a positive part, or an increase, is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::parse(
                &format!("{parts:?}"),
                "parts must be weakly decreasing and positive",
            ));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(a^b)`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 || b == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![a; b] }
        }
    }

    /// Builds a partition from `(value, multiplicity)` blocks written with
    /// signed arithmetic, as in `(a+1, a^(b-2), a-1)`. Blocks with zero
    /// multiplicity are skipped and zero values are allowed only at the end.
    /// Returns `None` when the blocks do not describe a partition.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Option<Self> {
        let mut parts = Vec::new();
        for &(value, mult) in blocks {
            if mult < 0 {
                return None;
            }
            if mult == 0 {
                continue;
            }
            if value < 0 {
                return None;
            }
            parts.extend(std::iter::repeat_n(value as usize, mult as usize));
        }
        Partition::new(parts).ok()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `i`-th part, 1-based; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First hook length `h_{11} = width + length - 1`; zero when empty.
    pub fn first_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.width() + self.length() - 1
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let mut parts = Vec::with_capacity(width);
        for j in 1..=width {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.part(node.row) >= node.col
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let k = self.length();
        (1..=k)
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i, self.part(i)))
            .collect()
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let k = self.length();
        let mut nodes: Vec<Node> = (1..=k)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .map(|i| Node::new(i, self.part(i) + 1))
            .collect();
        nodes.push(Node::new(k + 1, 1));
        nodes
    }

    pub fn is_removable(&self, node: Node) -> bool {
        node.row >= 1
            && node.row <= self.length()
            && node.col == self.part(node.row)
            && self.part(node.row) > self.part(node.row + 1)
    }

    pub fn is_addable(&self, node: Node) -> bool {
        node.row >= 1
            && node.row <= self.length() + 1
            && node.col == self.part(node.row) + 1
            && (node.row == 1 || self.part(node.row) < self.part(node.row - 1))
    }

    pub fn adjust_node(&self, node: Node, direction: Adjust) -> Result<Partition> {
        match direction {
            Adjust::Remove => {
                if !self.is_removable(node) {
                    return Err(Error::NotAdjustable {
                        partition: self.clone(),
                        node,
                        action: "removed",
                    });
                }
                let mut parts = self.parts.clone();
                parts[node.row - 1] -= 1;
                if parts[node.row - 1] == 0 {
                    parts.pop();
                }
                Ok(Partition { parts })
            }
            Adjust::Add => {
                if !self.is_addable(node) {
                    return Err(Error::NotAdjustable {
                        partition: self.clone(),
                        node,
                        action: "added",
                    });
                }
                let mut parts = self.parts.clone();
                if node.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[node.row - 1] += 1;
                }
                Ok(Partition { parts })
            }
        }
    }

    /// `λ_A`; the node must be removable.
    pub fn remove(&self, node: Node) -> Result<Partition> {
        self.adjust_node(node, Adjust::Remove)
    }

    /// `λ^B`; the node must be addable.
    pub fn add(&self, node: Node) -> Result<Partition> {
        self.adjust_node(node, Adjust::Add)
    }

    pub fn hook_length(&self, node: Node) -> Result<usize> {
        if !self.contains_node(node) {
            return Err(Error::NodeOutsideDiagram {
                partition: self.clone(),
                node,
            });
        }
        let conj = self.conjugate();
        Ok(self.part(node.row) - node.col + conj.part(node.col) - node.row + 1)
    }

    /// All hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                hooks.push(len - j + conj.parts[j] - i - 1);
            }
        }
        hooks
    }

    /// `(λ_2, λ_3, ...)`.
    pub fn drop_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// `(λ_1 - 1, λ_2 - 1, ...)`.
    pub fn drop_first_column(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .map(|p| p - 1)
                .filter(|&p| p > 0)
                .collect(),
        }
    }

    /// `(m, λ_1, λ_2, ...)` if that is a partition.
    pub fn with_first_row(&self, m: usize) -> Option<Partition> {
        if m < self.width() || m == 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.parts);
        Some(Partition { parts })
    }

    /// `λ + (1^m)`: a new first column of height `m`, if that is a partition.
    pub fn with_first_column(&self, m: usize) -> Option<Partition> {
        if m < self.length() {
            return None;
        }
        let parts = (1..=m).map(|i| self.part(i) + 1).collect();
        Some(Partition { parts })
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Rectangle with at least two rows and two columns.
    pub fn is_nontrivial_rectangle(&self) -> bool {
        self.is_rectangle() && self.width() >= 2 && self.length() >= 2
    }

    /// `(a, 1^b)`, including the trivial hooks.
    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }

    /// At most two rows or at most two columns.
    pub fn is_two_line(&self) -> bool {
        self.length() <= 2 || self.width() <= 2
    }

    /// Exactly two distinct part sizes.
    pub fn is_fat_hook(&self) -> bool {
        self.parts.iter().collect::<BTreeSet<_>>().len() == 2
    }

    /// Grammar form with exponent compression, e.g. `2^2,1`; empty string for
    /// the empty partition.
    pub fn to_grammar_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.parts.len() {
            let value = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == value {
                j += 1;
            }
            if !out.is_empty() {
                out.push(',');
            }
            let mult = j - i;
            if mult == 1 {
                out.push_str(&value.to_string());
            } else {
                out.push_str(&format!("{value}^{mult}"));
            }
            i = j;
        }
        out
    }

    /// Decreasing lexicographic comparison: `(4) < (3,1)` in this order.
    pub fn cmp_decreasing(&self, other: &Partition) -> Ordering {
        other.cmp(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_grammar_string())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let body = strip_brackets(&cleaned);
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => (v, m),
                None => (token, "1"),
            };
            let value: usize = value
                .parse()
                .map_err(|_| Error::parse(input, format!("bad part {token:?}")))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| Error::parse(input, format!("bad exponent in {token:?}")))?;
            if value == 0 {
                return Err(Error::parse(input, "parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(value, mult));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(input, "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

fn strip_brackets(s: &str) -> &str {
    for (open, close) in [('[', ']'), ('(', ')')] {
        if let Some(inner) = s.strip_prefix(open).and_then(|r| r.strip_suffix(close)) {
            return inner;
        }
    }
    s
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_grammar_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            fill(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` contained in `bound`, decreasing lexicographic order.
pub fn partitions_inside(n: usize, bound: &Partition) -> Vec<Partition> {
    fn fill(
        row: usize,
        remaining: usize,
        max: usize,
        bound: &Partition,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let cap = max.min(bound.part(row)).min(remaining);
        for part in (1..=cap).rev() {
            prefix.push(part);
            fill(row + 1, remaining - part, part, bound, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(1, n, n, bound, &mut Vec::new(), &mut out);
    out
}

/// A skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Per-row column intervals `[start, end)` (0-based columns) for rows
    /// `1..=outer.length()`.
    pub fn row_intervals(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.length())
            .map(|i| (self.inner.part(i), self.outer.part(i)))
            .collect()
    }

    /// Boxes of the diagram in row-major order.
    pub fn node_set(&self) -> Vec<Node> {
        let mut nodes = Vec::with_capacity(self.size());
        for (i, (start, end)) in self.row_intervals().into_iter().enumerate() {
            for j in start..end {
                nodes.push(Node::new(i + 1, j + 1));
            }
        }
        nodes
    }

    pub fn contains_node(&self, node: Node) -> bool {
        self.outer.contains_node(node) && !self.inner.contains_node(node)
    }

    /// Whether `node` is edge-adjacent to some box of the diagram.
    pub fn is_connected_to(&self, node: Node) -> bool {
        let Node { row, col } = node;
        let mut around = vec![Node::new(row + 1, col), Node::new(row, col + 1)];
        if row > 1 {
            around.push(Node::new(row - 1, col));
        }
        if col > 1 {
            around.push(Node::new(row, col - 1));
        }
        around.into_iter().any(|n| self.contains_node(n))
    }

    /// The transposed diagram `outer' / inner'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Lengths of the nonempty rows, sorted decreasingly.
    pub fn sorted_row_lengths(&self) -> Partition {
        let mut lens: Vec<usize> = self
            .row_intervals()
            .into_iter()
            .map(|(s, e)| e - s)
            .filter(|&l| l > 0)
            .collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: lens }
    }

    /// Lengths of the nonempty columns, sorted decreasingly.
    pub fn sorted_column_lengths(&self) -> Partition {
        self.conjugate().sorted_row_lengths()
    }

    /// All boxes in a single row.
    pub fn is_row(&self) -> bool {
        let nodes = self.node_set();
        !nodes.is_empty() && nodes.iter().all(|n| n.row == nodes[0].row)
    }

    /// All boxes in a single column.
    pub fn is_column(&self) -> bool {
        let nodes = self.node_set();
        !nodes.is_empty() && nodes.iter().all(|n| n.col == nodes[0].col)
    }

    /// Edge-connected components, each in row-major order.
    pub fn components(&self) -> Vec<Vec<Node>> {
        let nodes = self.node_set();
        let mut seen = vec![false; nodes.len()];
        let mut comps = Vec::new();
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(nodes[i]);
                for (j, other) in nodes.iter().enumerate() {
                    if !seen[j] && nodes[i].is_adjacent(other) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}",
            self.outer.to_grammar_string(),
            self.inner.to_grammar_string()
        )
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let (outer, inner) = match input.split_once('/') {
            Some((o, i)) => (o, i),
            None => (input, ""),
        };
        SkewShape::new(outer.parse()?, inner.parse()?)
    }
}

/// Translates a node set so its minimal row and column are 1.
pub fn normalize_nodes(nodes: &[Node]) -> Vec<Node> {
    let min_row = nodes.iter().map(|n| n.row).min().unwrap_or(1);
    let min_col = nodes.iter().map(|n| n.col).min().unwrap_or(1);
    let mut out: Vec<Node> = nodes
        .iter()
        .map(|n| Node::new(n.row - min_row + 1, n.col - min_col + 1))
        .collect();
    out.sort();
    out
}

/// If the (normalized) node set is a Young diagram, returns its partition.
pub fn nodes_as_partition(nodes: &[Node]) -> Option<Partition> {
    let nodes = normalize_nodes(nodes);
    let rows = nodes.iter().map(|n| n.row).max().unwrap_or(0);
    let mut parts = vec![0usize; rows];
    for n in &nodes {
        parts[n.row - 1] += 1;
    }
    let candidate = Partition::new(parts).ok()?;
    let diagram: Vec<Node> = SkewShape::straight(candidate.clone()).node_set();
    (diagram == nodes).then_some(candidate)
}

/// Rotates a node set by 180° inside its bounding box.
pub fn rotate_nodes(nodes: &[Node]) -> Vec<Node> {
    let nodes = normalize_nodes(nodes);
    let rows = nodes.iter().map(|n| n.row).max().unwrap_or(0);
    let cols = nodes.iter().map(|n| n.col).max().unwrap_or(0);
    let mut out: Vec<Node> = nodes
        .iter()
        .map(|n| Node::new(rows + 1 - n.row, cols + 1 - n.col))
        .collect();
    out.sort();
    out
}

/// Every skew diagram of `size` boxes with no empty row or column, up to
/// moving disconnected pieces together until they touch at a corner.
/// Pieces are never merged, so every skew character of this size (and every
/// configuration of connected pieces) is represented.
pub fn compact_skew_shapes(size: usize) -> Vec<SkewShape> {
    fn extend(
        remaining: usize,
        rows: &mut Vec<(usize, usize)>,
        out: &mut Vec<SkewShape>,
    ) {
        if remaining == 0 {
            if rows.last().map(|r| r.0) == Some(0) {
                let outer = Partition::new(rows.iter().map(|r| r.1).collect()).unwrap();
                let inner = Partition::new(rows.iter().map(|r| r.0).collect()).unwrap();
                out.push(SkewShape { outer, inner });
            }
            return;
        }
        match rows.last().copied() {
            None => {
                for len in 1..=remaining {
                    for start in 0..=remaining - len {
                        rows.push((start, start + len));
                        extend(remaining - len, rows, out);
                        rows.pop();
                    }
                }
            }
            Some((prev_start, prev_end)) => {
                for start in 0..=prev_start {
                    for end in (start + 1)..=prev_end {
                        let len = end - start;
                        if len > remaining || end < prev_start {
                            continue;
                        }
                        rows.push((start, end));
                        extend(remaining - len, rows, out);
                        rows.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(SkewShape::straight(Partition::empty()));
        return out;
    }
    extend(size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,1").conjugate(), p("2,1,1,1"));
        assert_eq!(p("3").conjugate(), p("1,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(p("3,2").intersect(&p("4,1")), p("3,1"));
        assert_eq!(p("5").intersect(&p("1^5")), p("1"));
        assert_eq!(p("2,2").intersect(&p("2,2")), p("2,2"));
    }

    #[test]
    fn removable_and_addable_examples() {
        assert_eq!(p("3,2").removable_nodes(), vec![Node::new(1, 3), Node::new(2, 2)]);
        assert_eq!(p("4").removable_nodes(), vec![Node::new(1, 4)]);
        assert_eq!(p("2,2").removable_nodes(), vec![Node::new(2, 2)]);
        assert_eq!(
            p("3,2").addable_nodes(),
            vec![Node::new(1, 4), Node::new(2, 3), Node::new(3, 1)]
        );
        assert_eq!(p("4").addable_nodes(), vec![Node::new(1, 5), Node::new(2, 1)]);
        assert_eq!(Partition::empty().addable_nodes(), vec![Node::new(1, 1)]);
    }

    #[test]
    fn adjust_node_examples() {
        assert_eq!(p("3,2").remove(Node::new(2, 2)).unwrap(), p("3,1"));
        assert_eq!(p("3,2").add(Node::new(3, 1)).unwrap(), p("3,2,1"));
        assert!(matches!(
            p("3,2").remove(Node::new(1, 1)),
            Err(Error::NotAdjustable { .. })
        ));
        assert!(p("3,2").add(Node::new(2, 4)).is_err());
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p("3,2").hook_length(Node::new(1, 1)).unwrap(), 4);
        assert_eq!(p("3,2").hook_length(Node::new(1, 3)).unwrap(), 1);
        assert_eq!(p("2,2").hook_length(Node::new(1, 1)).unwrap(), 3);
        assert!(matches!(
            p("2,2").hook_length(Node::new(1, 3)),
            Err(Error::NodeOutsideDiagram { .. })
        ));
        assert_eq!(p("3,2").hook_lengths(), vec![4, 3, 1, 2, 1]);
    }

    #[test]
    fn partitions_of_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four = partitions_of(4);
        assert_eq!(four.len(), 5);
        assert_eq!(four[0], p("4"));
        assert_eq!(four[4], p("1,1,1,1"));
        assert_eq!(partitions_of(5).len(), 7);
        // p(n) for n = 0..=12
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn partitions_are_in_decreasing_lex_order() {
        for n in 0..=10 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn skew_shape_examples() {
        let s = SkewShape::new(p("3,2"), p("3,1")).unwrap();
        assert_eq!(s.node_set(), vec![Node::new(2, 2)]);
        let s = SkewShape::new(p("3,2"), p("2")).unwrap();
        assert_eq!(
            s.node_set(),
            vec![Node::new(1, 3), Node::new(2, 1), Node::new(2, 2)]
        );
        assert!(matches!(
            SkewShape::new(p("2,2"), p("3")),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn grammar_parsing() {
        assert_eq!(p("3^2,1"), Partition::of(&[3, 3, 1]));
        assert_eq!(p(" 2 ^ 2 , 1 "), Partition::of(&[2, 2, 1]));
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("[2^2,1^2]"), Partition::of(&[2, 2, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(Partition::of(&[2, 2, 1, 1]).to_string(), "[2^2,1^2]");
        assert_eq!("3,2/2".parse::<SkewShape>().unwrap().size(), 3);
    }

    #[test]
    fn blocks_builder() {
        // (a+1, a^(b-2), a-1) with a = 3, b = 2
        assert_eq!(Partition::from_blocks(&[(4, 1), (3, 0), (2, 1)]), Some(p("4,2")));
        assert_eq!(Partition::from_blocks(&[(2, 1), (0, 1)]), Some(p("2")));
        assert_eq!(Partition::from_blocks(&[(0, 1), (1, 1)]), None);
        assert_eq!(Partition::from_blocks(&[(1, -1)]), None);
    }

    #[test]
    fn first_row_and_column_helpers() {
        let l = p("4,2,1");
        assert_eq!(l.drop_first_row(), p("2,1"));
        assert_eq!(l.drop_first_column(), p("3,1"));
        assert_eq!(p("2,1").with_first_row(4), Some(l.clone()));
        assert_eq!(p("3,1").with_first_column(3), Some(l));
        assert_eq!(p("3").with_first_row(2), None);
    }

    #[test]
    fn shape_geometry() {
        let rot = SkewShape::new(p("2,2"), p("1")).unwrap();
        assert!(nodes_as_partition(&rot.node_set()).is_none());
        assert_eq!(
            nodes_as_partition(&rotate_nodes(&rot.node_set())),
            Some(p("2,1"))
        );
        let split = SkewShape::new(p("3,2"), p("2")).unwrap();
        assert!(nodes_as_partition(&rotate_nodes(&split.node_set())).is_none());
        let two = SkewShape::new(p("2,1"), p("1")).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_row() && !two.is_column());
        assert!(SkewShape::new(p("3,1"), p("1,1")).unwrap().is_row());
    }

    #[test]
    fn compact_shape_counts_are_stable() {
        // size 2: row, column, two separated boxes
        assert_eq!(compact_skew_shapes(1).len(), 1);
        assert_eq!(compact_skew_shapes(2).len(), 3);
        for shape in compact_skew_shapes(5) {
            assert_eq!(shape.size(), 5);
        }
    }
}
