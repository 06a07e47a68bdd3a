//! Littlewood–Richardson coefficients and skew characters.
//!
//! Everything is computed by enumerating LR fillings directly: cells are
//! filled in reading order (rows top to bottom, each row right to left) with
//! weakly increasing rows, strictly increasing columns and the lattice-word
//! condition checked as each entry is placed.

use std::collections::HashMap;

use crate::partition::{
    nodes_as_partition, normalize_nodes, partitions_inside, rotate_nodes, Node, Partition,
    SkewShape,
};
use crate::vchar::{Decomposition, VirtualCharacter};

/// Outcome of [`classify_skew_shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    /// A translated Young diagram of `α`.
    Partition(Partition),
    /// A translated, 180°-rotated Young diagram of `α` (and not itself a
    /// Young diagram).
    RotatedPartition(Partition),
    ProperSkew,
}

impl ShapeClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ShapeClass::Partition(_) => "partition",
            ShapeClass::RotatedPartition(_) => "rotated-partition",
            ShapeClass::ProperSkew => "proper-skew",
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            ShapeClass::Partition(a) | ShapeClass::RotatedPartition(a) => Some(a),
            ShapeClass::ProperSkew => None,
        }
    }
}

struct Filler<'a> {
    // (row index 0-based, column 0-based), reading order
    cells: Vec<(usize, usize)>,
    inner: &'a Partition,
    grid: Vec<Vec<u8>>,
    counts: Vec<usize>,
    target: Option<&'a Partition>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, target: Option<&'a Partition>) -> Self {
        let outer = shape.outer();
        let inner = shape.inner();
        let mut cells = Vec::with_capacity(shape.size());
        for i in 0..outer.length() {
            for j in (inner.part(i + 1)..outer.part(i + 1)).rev() {
                cells.push((i, j));
            }
        }
        let grid = outer.parts().iter().map(|&len| vec![0u8; len]).collect();
        let rows = outer.length().max(1);
        Filler {
            cells,
            inner,
            grid,
            counts: vec![0; rows + 1],
            target,
        }
    }

    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize])) {
        if pos == self.cells.len() {
            visit(&self.counts);
            return;
        }
        let (i, j) = self.cells[pos];
        // value bounds from the row (right neighbour) and column (cell above)
        let upper = if j + 1 < self.grid[i].len() && j + 1 >= self.inner.part(i + 1) {
            self.grid[i][j + 1] as usize
        } else {
            usize::MAX
        };
        let lower = if i > 0 && j >= self.inner.part(i) && j < self.grid[i - 1].len() {
            self.grid[i - 1][j] as usize + 1
        } else {
            1
        };
        let max_value = self.counts.len() - 1;
        for v in lower..=upper.min(max_value) {
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            if let Some(t) = self.target {
                if self.counts[v] + 1 > t.part(v) {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.grid[i][j] = v as u8;
            self.run(pos + 1, visit);
            self.counts[v] -= 1;
        }
        self.grid[i][j] = 0;
    }
}

fn content_partition(counts: &[usize]) -> Partition {
    Partition::new(counts[1..].to_vec()).expect("lattice word content is a partition")
}

/// `c^α_{βγ}`: the number of LR fillings of `α/β` with content `γ`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if beta.size() + gamma.size() != alpha.size() || !alpha.contains(beta) {
        return 0;
    }
    let shape = SkewShape::new(alpha.clone(), beta.clone()).expect("checked containment");
    let mut count = 0u64;
    let mut filler = Filler::new(&shape, Some(gamma));
    filler.run(0, &mut |_| count += 1);
    count
}

/// `[α/β] = Σ_γ c^α_{βγ} [γ]`.
pub fn skew_decompose(shape: &SkewShape) -> Decomposition {
    let mut tally: HashMap<Partition, i64> = HashMap::new();
    let mut filler = Filler::new(shape, None);
    filler.run(0, &mut |counts| {
        *tally.entry(content_partition(counts)).or_insert(0) += 1;
    });
    VirtualCharacter::from_terms(shape.size(), tally).expect("contents have the skew size")
}

/// `[β] ⊗ [γ]`, by computing `c^α_{βγ}` for every `α ⊇ β, γ` of the right size.
pub fn outer_product_expand(beta: &Partition, gamma: &Partition) -> Decomposition {
    let n = beta.size() + gamma.size();
    let mut out = VirtualCharacter::zero(n);
    // constituents have width ≤ β_1 + γ_1 and length ≤ ℓ(β) + ℓ(γ)
    let bound = Partition::rectangle(
        beta.width() + gamma.width(),
        beta.length() + gamma.length(),
    );
    for alpha in partitions_inside(n, &bound) {
        if !alpha.contains(beta) || !alpha.contains(gamma) {
            continue;
        }
        let c = lr_coefficient(&alpha, beta, gamma);
        if c > 0 {
            out.add_term(alpha, c as i64).expect("sizes agree");
        }
    }
    out
}

/// The same product read off the skew shape that places `[β]` above and to
/// the right of `[γ]` with no shared rows or columns.
pub fn outer_product_via_skew(beta: &Partition, gamma: &Partition) -> Decomposition {
    let shift = gamma.width();
    let mut outer: Vec<usize> = beta.parts().iter().map(|&b| b + shift).collect();
    outer.extend_from_slice(gamma.parts());
    let inner = vec![shift; beta.length()];
    let shape = SkewShape::new(
        Partition::new(outer).expect("stacked outer shape"),
        Partition::new(inner).expect("rectangle"),
    )
    .expect("disjoint union is a skew shape");
    skew_decompose(&shape)
}

/// Extends [`outer_product_expand`] bilinearly to characters.
pub fn outer_product(a: &Decomposition, b: &Decomposition) -> Decomposition {
    let mut out = VirtualCharacter::zero(a.n() + b.n());
    for (beta, x) in a.iter() {
        for (gamma, y) in b.iter() {
            out = &out + &outer_product_expand(beta, gamma).scale(x * y);
        }
    }
    out
}

/// Rebuilds a skew shape from a node set, if the translated set is one.
pub fn skew_from_nodes(nodes: &[Node]) -> Option<SkewShape> {
    let nodes = normalize_nodes(nodes);
    let rows = nodes.iter().map(|n| n.row).max()?;
    let mut outer = vec![0usize; rows];
    let mut inner = vec![usize::MAX; rows];
    for n in &nodes {
        outer[n.row - 1] = outer[n.row - 1].max(n.col);
        inner[n.row - 1] = inner[n.row - 1].min(n.col - 1);
    }
    let inner: Vec<usize> = inner.into_iter().map(|v| if v == usize::MAX { 0 } else { v }).collect();
    let shape = SkewShape::new(Partition::new(outer).ok()?, Partition::new(inner).ok()?).ok()?;
    (shape.node_set() == nodes).then_some(shape)
}

/// `[s]` as the outer product of the characters of its connected pieces.
pub fn skew_decompose_by_components(shape: &SkewShape) -> Decomposition {
    let mut out = VirtualCharacter::irreducible(Partition::empty());
    for comp in shape.components() {
        let piece = skew_from_nodes(&comp).expect("a component of a skew shape is skew");
        out = outer_product(&out, &skew_decompose(&piece));
    }
    out
}

/// Partition / rotated partition / proper skew, after translating the node
/// set so its smallest row and column are 1.
pub fn classify_skew_shape(shape: &SkewShape) -> ShapeClass {
    let nodes = shape.node_set();
    if nodes.is_empty() {
        return ShapeClass::Partition(Partition::empty());
    }
    if let Some(alpha) = nodes_as_partition(&nodes) {
        return ShapeClass::Partition(alpha);
    }
    if let Some(alpha) = nodes_as_partition(&rotate_nodes(&nodes)) {
        return ShapeClass::RotatedPartition(alpha);
    }
    ShapeClass::ProperSkew
}

/// Number of standard Young tableaux of the skew shape, by removing outer
/// corners recursively.
pub fn skew_syt_count(shape: &SkewShape) -> u128 {
    fn count(
        outer: &mut Vec<usize>,
        inner: &Partition,
        memo: &mut HashMap<Vec<usize>, u128>,
    ) -> u128 {
        let remaining: usize = outer
            .iter()
            .enumerate()
            .map(|(i, &o)| o - inner.part(i + 1))
            .sum();
        if remaining == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(outer.as_slice()) {
            return v;
        }
        let mut total = 0u128;
        for i in 0..outer.len() {
            let next = outer.get(i + 1).copied().unwrap_or(0);
            if outer[i] > next && outer[i] > inner.part(i + 1) {
                outer[i] -= 1;
                total += count(outer, inner, memo);
                outer[i] += 1;
            }
        }
        memo.insert(outer.clone(), total);
        total
    }
    let mut outer = shape.outer().parts().to_vec();
    count(&mut outer, shape.inner(), &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn vc(s: &str) -> VirtualCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn lr_coefficient_examples() {
        assert_eq!(lr_coefficient(&p("3,2"), &p("2,1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2"), &p("2")), 0);
        // the classic multiplicity-two coefficient
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
    }

    #[test]
    fn outer_product_examples() {
        assert_eq!(outer_product_expand(&p("1"), &p("2,2")), vc("[3,2] + [2^2,1]"));
        assert_eq!(outer_product_expand(&p("1"), &p("1")), vc("[2] + [1^2]"));
        assert_eq!(
            outer_product_expand(&p("2,1"), &p("2")),
            vc("[4,1] + [3,2] + [3,1^2] + [2^2,1]")
        );
        assert_eq!(
            outer_product_expand(&p("2,1"), &p("2")),
            outer_product_via_skew(&p("2,1"), &p("2"))
        );
    }

    #[test]
    fn skew_decompose_examples() {
        assert_eq!(skew_decompose(&skew("2,1/1")), vc("[2] + [1^2]"));
        assert_eq!(skew_decompose(&skew("3,2/3,1")), vc("[1]"));
        assert_eq!(skew_decompose(&skew("3,1/1")), vc("[3] + [2,1]"));
        assert_eq!(skew_decompose(&skew("/")), VirtualCharacter::irreducible(Partition::empty()));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_skew_shape(&skew("3,2/3,1")),
            ShapeClass::Partition(p("1"))
        );
        assert_eq!(
            classify_skew_shape(&skew("2,2/1")),
            ShapeClass::RotatedPartition(p("2,1"))
        );
        // a box touching a domino only at a corner: [1]⊗[2] is reducible
        assert_eq!(classify_skew_shape(&skew("3,2/2")), ShapeClass::ProperSkew);
        assert_eq!(skew_decompose(&skew("3,2/2")), vc("[3] + [2,1]"));
        assert_eq!(classify_skew_shape(&skew("3,1/1")), ShapeClass::ProperSkew);
    }

    #[test]
    fn syt_count_examples() {
        assert_eq!(skew_syt_count(&skew("2,1/1")), 2);
        assert_eq!(skew_syt_count(&skew("3,2/")), 5);
        assert_eq!(skew_syt_count(&skew("3,1/1")), 3);
    }

    #[test]
    fn components_path_agrees() {
        for s in ["2,1/1", "4,2,1/2,1", "5,3,3/3,1", "3,3,1/2"] {
            let shape = skew(s);
            assert_eq!(skew_decompose(&shape), skew_decompose_by_components(&shape), "{s}");
        }
    }
}
