//! Closed-form products and skew decompositions that are stated explicitly,
//! written as functions of their parameters.

use crate::partition::{Partition, SkewShape};
use crate::vchar::VirtualCharacter;

/// Partition from signed `(value, multiplicity)` blocks.
pub(crate) fn blocks(b: &[(i64, i64)]) -> Option<Partition> {
    Partition::from_blocks(b)
}

/// Sum of `c·[λ]` terms; `None` if any label is not a partition or the
/// labels have different sizes.
pub(crate) fn character(terms: &[(Option<Partition>, i64)]) -> Option<VirtualCharacter> {
    let first = terms.first()?.0.as_ref()?;
    let mut v = VirtualCharacter::zero(first.size());
    for (label, c) in terms {
        v.add_term(label.clone()?, *c).ok()?;
    }
    Some(v)
}

fn natural(n: usize) -> Option<Partition> {
    (n >= 2).then(|| Partition::of(&[n - 1, 1]))
}

/// `[n-1,1]·[a^b] = [a+1,a^{b-2},a-1] + [a^{b-1},a-1,1]`.
pub fn natural_times_rectangle(a: i64, b: i64) -> Option<VirtualCharacter> {
    character(&[
        (blocks(&[(a + 1, 1), (a, b - 2), (a - 1, 1)]), 1),
        (blocks(&[(a, b - 1), (a - 1, 1), (1, 1)]), 1),
    ])
}

/// `[2,1^{n-2}]·[a^b] = [b+1,b^{a-2},b-1] + [b^{a-1},b-1,1]`.
pub fn sign_natural_times_rectangle(a: i64, b: i64) -> Option<VirtualCharacter> {
    character(&[
        (blocks(&[(b + 1, 1), (b, a - 2), (b - 1, 1)]), 1),
        (blocks(&[(b, a - 1), (b - 1, 1), (1, 1)]), 1),
    ])
}

/// `[n-1,1]^2 = [n] + [n-1,1] + [n-2,2] + [n-2,1^2]` for `n ≥ 4`.
pub fn natural_square(n: i64) -> Option<VirtualCharacter> {
    character(&[
        (blocks(&[(n, 1)]), 1),
        (blocks(&[(n - 1, 1), (1, 1)]), 1),
        (blocks(&[(n - 2, 1), (2, 1)]), 1),
        (blocks(&[(n - 2, 1), (1, 2)]), 1),
    ])
}

/// `[k+1,k]·[2k,1] = [k+2,k-1] + [k+1,k] + [k+1,k-1,1] + [k^2,1]`.
pub fn natural_times_near_square(k: i64) -> Option<VirtualCharacter> {
    character(&[
        (blocks(&[(k + 2, 1), (k - 1, 1)]), 1),
        (blocks(&[(k + 1, 1), (k, 1)]), 1),
        (blocks(&[(k + 1, 1), (k - 1, 1), (1, 1)]), 1),
        (blocks(&[(k, 2), (1, 1)]), 1),
    ])
}

/// `[n-k,1^k]·[n-1,1]`, five terms, for `1 < k < n-2`.
pub fn hook_times_natural(n: i64, k: i64) -> Option<VirtualCharacter> {
    character(&[
        (blocks(&[(n - k + 1, 1), (1, k - 1)]), 1),
        (blocks(&[(n - k, 1), (2, 1), (1, k - 2)]), 1),
        (blocks(&[(n - k, 1), (1, k)]), 1),
        (blocks(&[(n - k - 1, 1), (2, 1), (1, k - 1)]), 1),
        (blocks(&[(n - k - 1, 1), (1, k + 1)]), 1),
    ])
}

fn parse(s: &str) -> VirtualCharacter {
    s.parse().expect("literal character")
}

/// The explicitly known product in canonical orientation, if any.
fn base_product(mu: &Partition, nu: &Partition) -> Option<VirtualCharacter> {
    let n = mu.size();
    if n == 0 {
        return None;
    }
    if *mu == Partition::row(n) {
        return Some(VirtualCharacter::irreducible(nu.clone()));
    }
    let nat = natural(n)?;
    if *mu == nat && nu.is_nontrivial_rectangle() {
        return natural_times_rectangle(nu.width() as i64, nu.length() as i64);
    }
    if *mu == nat && *nu == nat {
        return match n {
            3 => Some(parse("[3] + [2,1] + [1^3]")),
            n if n >= 4 => natural_square(n as i64),
            _ => None,
        };
    }
    if n % 2 == 1 && n >= 5 {
        let k = (n / 2) as i64;
        if *mu == nat && *nu == Partition::of(&[k as usize + 1, k as usize]) {
            return natural_times_near_square(k);
        }
    }
    match (mu.to_string().as_str(), nu.to_string().as_str()) {
        // the printed version has [2^2,1^1] in place of [2^2,1^2]
        ("[3^2]", "[4,2]") => Some(parse("[5,1] + [4,1^2] + [3^2] + [3,2,1] + [2^2,1^2]")),
        ("[3^2]", "[3^2]") => Some(parse("[6] + [4,2] + [3,1^3] + [2^3]")),
        ("[2^2]", "[2^2]") => Some(parse("[4] + [2^2] + [1^4]")),
        _ => None,
    }
}

/// Products printed in closed form: linear characters, rectangles against
/// `[n-1,1]`, products of `[n-1,1]` and `[2,1^{n-2}]`, `[2k,1]·[k+1,k]`,
/// `[3^2]·[4,2]`, the squares of `[2^2]` and `[3^2]`, and everything obtained
/// from these by swapping factors or conjugating either factor.
pub fn printed_product(mu: &Partition, nu: &Partition) -> Option<VirtualCharacter> {
    if mu.size() != nu.size() {
        return None;
    }
    let mu_c = mu.conjugate();
    let nu_c = nu.conjugate();
    let orientations = [
        (mu, nu, false),
        (&mu_c, nu, true),
        (mu, &nu_c, true),
        (&mu_c, &nu_c, false),
    ];
    for (a, b, conj) in orientations {
        for (x, y) in [(a, b), (b, a)] {
            if let Some(v) = base_product(x, y) {
                return Some(if conj { v.conjugate() } else { v });
            }
        }
    }
    None
}

/// Left-hand side of a two-component skew decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    /// Outer product of two irreducibles (two disconnected partition pieces).
    Outer(Partition, Partition),
    Skew(SkewShape),
}

impl std::fmt::Display for FamilyShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyShape::Outer(a, b) => write!(f, "{a}⊗{b}"),
            FamilyShape::Skew(s) => write!(f, "[{s}]"),
        }
    }
}

/// One instance of a family of skew characters with two components.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub family: &'static str,
    /// `(r, s, a, b)`.
    pub params: (i64, i64, i64, i64),
    pub shapes: Vec<FamilyShape>,
    /// The two constituents, each of multiplicity one.
    pub rhs: (Partition, Partition),
}

fn skew_of(outer: Option<Partition>, inner: Option<Partition>) -> Option<FamilyShape> {
    SkewShape::new(outer?, inner?).ok().map(FamilyShape::Skew)
}

fn member(
    family: &'static str,
    params: (i64, i64, i64, i64),
    shapes: Vec<Option<FamilyShape>>,
    rhs: (Option<Partition>, Option<Partition>),
) -> Option<FamilyMember> {
    let shapes = shapes.into_iter().collect::<Option<Vec<_>>>()?;
    let (x, y) = (rhs.0?, rhs.1?);
    if x == y || x.size() != y.size() {
        return None;
    }
    Some(FamilyMember {
        family,
        params,
        shapes,
        rhs: (x, y),
    })
}

fn family_member(family: &'static str, r: i64, s: i64, a: i64, b: i64) -> Option<FamilyMember> {
    let p = (r, s, a, b);
    match family {
        "i" => member(
            family,
            p,
            vec![blocks(&[(r, a + 1)]).map(|x| FamilyShape::Outer(Partition::row(1), x))],
            (
                blocks(&[(r + 1, 1), (r, a)]),
                blocks(&[(r, a + 1), (1, 1)]),
            ),
        ),
        "ii" => member(
            family,
            p,
            vec![blocks(&[(r, 1)]).map(|x| FamilyShape::Outer(Partition::column(a as usize + 1), x))],
            (
                blocks(&[(r, 1), (1, a + 1)]),
                blocks(&[(r + 1, 1), (1, a)]),
            ),
        ),
        "iii" => member(
            family,
            p,
            vec![
                skew_of(
                    blocks(&[(r + 1, a + 1), (r, b + 1)]),
                    blocks(&[(r - s, 1)]),
                ),
                skew_of(
                    blocks(&[(r + 1, a + b + 1), (s + 1, 1)]),
                    blocks(&[(1, b + 1)]),
                ),
            ],
            (
                blocks(&[(r + 1, a + 1), (r, b), (s, 1)]),
                blocks(&[(r + 1, a), (r, b + 1), (s + 1, 1)]),
            ),
        ),
        "iv" => member(
            family,
            p,
            vec![skew_of(
                blocks(&[(r + 1, a + 1), (s + 1, b + 1)]),
                blocks(&[(1, 1)]),
            )],
            (
                blocks(&[(r + 1, a), (r, 1), (s + 1, b + 1)]),
                blocks(&[(r + 1, a + 1), (s + 1, b), (s, 1)]),
            ),
        ),
        "v" => member(
            family,
            p,
            vec![skew_of(
                blocks(&[(r + 1, a + 1), (s + 1, b + 1)]),
                blocks(&[(1, a + b + 1)]),
            )],
            (
                blocks(&[(r, a + 1), (s + 1, 1), (s, b)]),
                blocks(&[(r + 1, 1), (r, a), (s, b + 1)]),
            ),
        ),
        // the blocks of (r^{a+1}, s^{b+1}) must be distinct
        "vi" if r <= s => None,
        "vi" => member(
            family,
            p,
            vec![skew_of(
                blocks(&[(r, a + 1), (s, b + 1)]),
                blocks(&[(r - 1, 1)]),
            )],
            (
                blocks(&[(r, a), (s, b + 1), (1, 1)]),
                blocks(&[(r, a), (s + 1, 1), (s, b)]),
            ),
        ),
        "vii" => member(
            family,
            p,
            vec![skew_of(
                blocks(&[(r + 1, 1), (s + 1, a + b + 1)]),
                blocks(&[(1, b + 1)]),
            )],
            (
                blocks(&[(r, 1), (s + 1, a + 1), (s, b)]),
                blocks(&[(r + 1, 1), (s + 1, a), (s, b + 1)]),
            ),
        ),
        "viii" if r <= 1 || r <= s => None,
        "viii" => member(
            family,
            p,
            vec![skew_of(
                blocks(&[(r, a + 1), (1, b + 1)]),
                blocks(&[(r - s, 1)]),
            )],
            (
                blocks(&[(r, a), (s, 1), (1, b + 1)]),
                blocks(&[(r, a), (s + 1, 1), (1, b)]),
            ),
        ),
        _ => None,
    }
}

pub const SKEW_FAMILIES: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];

/// All valid instances of the eight two-component families whose skew
/// characters have size at most `size_max`.
pub fn skew_two_component_families(size_max: usize) -> Vec<FamilyMember> {
    let bound = size_max as i64 + 1;
    let mut out = Vec::new();
    for family in SKEW_FAMILIES {
        for r in 0..=bound {
            for s in 0..=bound {
                for a in 0..=bound {
                    for b in 0..=bound {
                        if let Some(fm) = family_member(family, r, s, a, b) {
                            if fm.rhs.0.size() <= size_max && fm.rhs.0.size() > 0 {
                                out.push(fm);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
