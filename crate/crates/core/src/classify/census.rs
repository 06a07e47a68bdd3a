//! Skew characters with few components, and products of two skew
//! characters with one or two components.

use std::collections::BTreeSet;

use super::families::{skew_two_component_families, FamilyShape};
use super::{check_bound, Checker, Counterexample, VerificationReport};
use crate::error::Result;
use crate::kronecker::kron_characters;
use crate::lr::{classify_skew_shape, outer_product_expand, skew_decompose, ShapeClass};
use crate::partition::{
    compact_skew_shapes, nodes_as_partition, normalize_nodes, rotate_nodes, Node, Partition,
    SkewShape,
};
use crate::vchar::{Decomposition, VirtualCharacter};

/// Largest size accepted by the skew-shape enumerations.
pub const MAX_SKEW_SIZE: usize = 10;

fn family_character(shape: &FamilyShape) -> Decomposition {
    match shape {
        FamilyShape::Outer(a, b) => outer_product_expand(a, b),
        FamilyShape::Skew(s) => skew_decompose(s),
    }
}

fn pair_character(a: &Partition, b: &Partition) -> VirtualCharacter {
    let mut v = VirtualCharacter::irreducible(a.clone());
    v.add_term(b.clone(), 1).expect("same size");
    v
}

/// Every skew character of size at most `size_max` with exactly two
/// components: both have multiplicity one, they are the sorted row lengths
/// and the conjugate of the sorted column lengths, and the character is one
/// of the eight two-component families. Each family member is also checked
/// against its own stated decomposition.
pub fn skew_two_component_census(size_max: usize) -> Result<VerificationReport> {
    check_bound("size_max", size_max, MAX_SKEW_SIZE)?;
    let mut ck = Checker::new("skew2", size_max);

    let families = skew_two_component_families(size_max);
    let mut family_chars: BTreeSet<(Partition, Partition)> = BTreeSet::new();
    for fm in &families {
        let expected = pair_character(&fm.rhs.0, &fm.rhs.1);
        for shape in &fm.shapes {
            let actual = family_character(shape);
            ck.check(actual == expected, || {
                Counterexample::new(
                    format!("family ({}) {:?}: {shape}", fm.family, fm.params),
                    "stated decomposition differs",
                )
                .with_values(&expected, &actual)
            });
        }
        let (x, y) = fm.rhs.clone();
        family_chars.insert(if x <= y { (x, y) } else { (y, x) });
    }

    let mut total = 0usize;
    for size in 1..=size_max {
        let mut found = 0usize;
        for shape in compact_skew_shapes(size) {
            let ch = skew_decompose(&shape);
            if ch.component_count() != 2 {
                continue;
            }
            found += 1;
            ck.check(ch.iter().all(|(_, c)| c == 1), || {
                Counterexample::new(format!("[{shape}]"), "a constituent has multiplicity > 1")
                    .with_values("multiplicity one", &ch)
            });
            let rows = shape.sorted_row_lengths();
            let cols = shape.sorted_column_lengths().conjugate();
            let expected: BTreeSet<Partition> = [rows, cols].into_iter().collect();
            let actual: BTreeSet<Partition> = ch.constituents().into_iter().collect();
            ck.check(expected == actual, || {
                Counterexample::new(format!("[{shape}]"), "constituents are not the row/column bounds")
                    .with_values(format!("{expected:?}"), &ch)
            });
            let key = {
                let c = ch.constituents();
                let (x, y) = (c[0].clone(), c[1].clone());
                if x <= y { (x, y) } else { (y, x) }
            };
            ck.check(family_chars.contains(&key), || {
                Counterexample::new(format!("[{shape}]"), "not covered by the eight families")
                    .with_values("a family member", &ch)
            });
        }
        ck.note(format!("size {size}: {found} compact shapes with two components"));
        total += found;
    }
    ck.note(format!("{} family instances, {total} shapes in total", families.len()));
    Ok(ck.finish())
}

fn addable_sum(alpha: &Partition, skip: Option<Node>) -> Result<VirtualCharacter> {
    let mut v = VirtualCharacter::zero(alpha.size() + 1);
    for b in alpha.addable_nodes() {
        if Some(b) != skip {
            v.add_term(alpha.add(b)?, 1)?;
        }
    }
    Ok(v)
}

/// Structural facts about a single skew character, for every compact skew
/// shape of size at most `size_max`:
///
/// - it is homogeneous iff irreducible iff the shape is a (rotated) Young
///   diagram;
/// - for a proper skew shape, the sorted row lengths and the conjugate of
///   the sorted column lengths are constituents of multiplicity one;
/// - adding an addable node `A` of the inner partition to a shape that is a
///   (rotated) Young diagram of `α`: if `A` is disconnected the character
///   is `Σ_B [α^B]` over addable `B`; if `A` sits above a Young diagram the
///   top addable node is left out, if it sits to the left the bottom one
///   is; next to a rotated diagram the character is a single `[α^B]`.
pub fn verify_skew_lemmas(size_max: usize) -> Result<VerificationReport> {
    check_bound("size_max", size_max, MAX_SKEW_SIZE)?;
    let mut ck = Checker::new("skew-lemmas", size_max);
    for size in 1..=size_max {
        for shape in compact_skew_shapes(size) {
            let ch = skew_decompose(&shape);
            let class = classify_skew_shape(&shape);
            let homogeneous = ch.component_count() == 1;
            let irreducible = ch.total_multiplicity() == 1 && homogeneous;
            let straight = class != ShapeClass::ProperSkew;
            ck.check(homogeneous == irreducible && irreducible == straight, || {
                Counterexample::new(format!("[{shape}]"), "homogeneous/irreducible/straight disagree")
                    .with_values(class.tag(), &ch)
            });
            if let Some(alpha) = class.partition() {
                ck.check(ch == VirtualCharacter::irreducible(alpha.clone()), || {
                    Counterexample::new(format!("[{shape}]"), "straight shape character")
                        .with_values(alpha, &ch)
                });
            } else {
                for lambda in [
                    shape.sorted_row_lengths(),
                    shape.sorted_column_lengths().conjugate(),
                ] {
                    ck.check(ch.get(&lambda) == 1, || {
                        Counterexample::new(format!("[{shape}]"), format!("multiplicity of {lambda}"))
                            .with_values(1, ch.get(&lambda))
                    });
                }
            }
            if size >= 2 {
                node_removal(&mut ck, &shape, &ch)?;
            }
        }
    }
    Ok(ck.finish())
}

fn node_removal(ck: &mut Checker, shape: &SkewShape, ch: &VirtualCharacter) -> Result<()> {
    for a in shape.node_set() {
        if !shape.inner().is_addable(a) {
            continue;
        }
        // shape = μ/γ_A with γ = inner + A
        let rest = SkewShape::new(shape.outer().clone(), shape.inner().add(a)?)?.node_set();
        let connected = rest.iter().any(|n| n.is_adjacent(&a));
        let straight = nodes_as_partition(&rest);
        let rotated = nodes_as_partition(&rotate_nodes(&rest));
        let case = format!("[{shape}] with inner node {a}");
        let Some(alpha) = straight.clone().or(rotated) else {
            continue;
        };
        if !connected {
            let expected = addable_sum(&alpha, None)?;
            ck.check(*ch == expected, || {
                Counterexample::new(case.clone(), "disconnected node").with_values(&expected, ch)
            });
        } else if straight.is_some() {
            // A is above the top row or left of the bottom row of α
            let above = rest.contains(&Node::new(a.row + 1, a.col));
            let skip = if above {
                Node::new(1, alpha.width() + 1)
            } else {
                Node::new(alpha.length() + 1, 1)
            };
            let expected = addable_sum(&alpha, Some(skip))?;
            ck.check(*ch == expected, || {
                Counterexample::new(case.clone(), if above { "node above" } else { "node to the left" })
                    .with_values(&expected, ch)
            });
        } else {
            let ok = ch.total_multiplicity() == 1
                && ch.iter().all(|(lambda, c)| {
                    c == 1
                        && alpha
                            .addable_nodes()
                            .iter()
                            .any(|&b| alpha.add(b).ok().as_ref() == Some(lambda))
                });
            ck.check(ok, || {
                Counterexample::new(case.clone(), "node next to a rotated diagram")
                    .with_values(format!("[{alpha}^B]"), ch)
            });
        }
    }
    Ok(())
}

/// Largest size for [`verify_skew_products`].
pub const MAX_SKEW_PRODUCT_SIZE: usize = 7;

struct ShapeInfo {
    shape: SkewShape,
    ch: Decomposition,
    class: ShapeClass,
    line: bool,
}

impl ShapeInfo {
    fn straight(&self) -> Option<&Partition> {
        self.class.partition()
    }
}

fn is_natural_like(p: &Partition) -> bool {
    let n = p.size();
    n >= 2 && (*p == Partition::of(&[n - 1, 1]) || p.conjugate() == Partition::of(&[n - 1, 1]))
}

fn domino_pair(s: &SkewShape) -> bool {
    let comps = s.components();
    if comps.len() != 2 || comps.iter().any(|c| c.len() != 2) {
        return false;
    }
    let horizontal = |c: &Vec<Node>| c[0].row == c[1].row;
    horizontal(&comps[0]) != horizontal(&comps[1])
}

fn predicts_one(x: &ShapeInfo, y: &ShapeInfo) -> bool {
    (x.straight().is_some() && y.line) || (y.straight().is_some() && x.line)
}

fn predicts_two(x: &ShapeInfo, y: &ShapeInfo, n: usize) -> bool {
    let two_points = |s: &ShapeInfo| s.shape.components().len() == 2;
    if n == 2 && two_points(x) && two_points(y) {
        return true;
    }
    let either = |f: &dyn Fn(&ShapeInfo, &ShapeInfo) -> bool| f(x, y) || f(y, x);
    if either(&|a, b| a.line && b.ch.component_count() == 2) {
        return true;
    }
    if either(&|a, b| {
        matches!((a.straight(), b.straight()), (Some(p), Some(q))
            if p.is_nontrivial_rectangle() && is_natural_like(q))
    }) {
        return true;
    }
    n == 4
        && either(&|a, b| a.straight() == Some(&Partition::of(&[2, 2])) && domino_pair(&b.shape))
}

/// Products `[S]·[T]` of skew characters of equal size at most `size_max`:
/// one component exactly when one is a (rotated) Young diagram and the other
/// a row or column, and two components exactly in the four listed
/// situations. Shapes are taken up to 180° rotation.
pub fn verify_skew_products(size_max: usize) -> Result<VerificationReport> {
    check_bound("size_max", size_max, MAX_SKEW_PRODUCT_SIZE)?;
    let mut ck = Checker::new("skew-products", size_max);
    for n in 1..=size_max {
        let infos: Vec<ShapeInfo> = compact_skew_shapes(n)
            .into_iter()
            .filter(|s| {
                let nodes = normalize_nodes(&s.node_set());
                nodes <= rotate_nodes(&nodes)
            })
            .map(|shape| ShapeInfo {
                ch: skew_decompose(&shape),
                class: classify_skew_shape(&shape),
                line: shape.is_row() || shape.is_column(),
                shape,
            })
            .collect();
        for i in 0..infos.len() {
            for j in i..infos.len() {
                let (x, y) = (&infos[i], &infos[j]);
                let product = kron_characters(&x.ch, &y.ch)?;
                let c = product.component_count();
                let case = format!("[{}] * [{}]", x.shape, y.shape);
                let one = predicts_one(x, y);
                ck.check((c == 1) == one, || {
                    Counterexample::new(case.clone(), "one-component prediction")
                        .with_values(one, &product)
                });
                let two = predicts_two(x, y, n);
                ck.check((c == 2) == two, || {
                    Counterexample::new(case.clone(), "two-component prediction")
                        .with_values(two, &product)
                });
            }
        }
        ck.note(format!("size {n}: {} shapes up to rotation", infos.len()));
    }
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let r = skew_two_component_census(5).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
    }

    #[test]
    fn small_lemmas() {
        let r = verify_skew_lemmas(5).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
    }

    #[test]
    fn small_products() {
        let r = verify_skew_products(4).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
    }
}
