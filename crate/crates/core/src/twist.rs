//! Twist regions, primality and twist-reducedness.
//!
//! Witness curves are combinatorial: a prime violation is a pair of edges
//! bordering the same two faces whose removal disconnects the crossings; a
//! twist-reduced violation is a pair of crossings sharing two faces that are
//! diagonal at both, with neither side a chain of bigons.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{is_alternating, Color, Coloring, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRegion {
    /// Crossings in chain order.
    pub crossings: Vec<usize>,
    pub c: usize,
    /// Colour of the internal bigons; `None` iff `c == 1`.
    pub color: Option<Color>,
    /// The bigon chain closes up into a cycle.
    pub closed: bool,
    /// Sign of the region's crossings (+1 / -1).
    pub sign: i8,
    /// Face ids of the internal bigons.
    pub bigons: Vec<usize>,
}

impl TwistRegion {
    pub fn internal_bigons(&self) -> usize {
        self.bigons.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    PrimeViolation,
    TwistReducedViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveWitness {
    pub kind: WitnessKind,
    /// Edge labels for a prime violation, crossing ids for a twist-reduced one.
    pub through: [usize; 2],
    /// The two faces the curve travels in.
    pub faces: [usize; 2],
    /// Crossings on either side of the curve (excluding `through` crossings).
    pub sides: [Vec<usize>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram is not prime (curve through edges {:?})", .0.through)]
    NotPrime(CurveWitness),
    #[error("diagram is not twist reduced (curve through crossings {:?})", .0.through)]
    NotTwistReduced(CurveWitness),
}

fn bigon_crossings(d: &PlanarDiagram, face: usize) -> Option<(usize, usize)> {
    let darts = d.face_darts(face);
    if darts.len() != 2 {
        return None;
    }
    let (x, y) = (darts[0] / 4, darts[1] / 4);
    (x != y).then_some((x.min(y), x.max(y)))
}

pub fn twist_regions(d: &PlanarDiagram, col: &Coloring) -> Vec<TwistRegion> {
    let n = d.crossing_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut bigons = Vec::new();
    for f in 0..d.face_count() {
        if let Some((x, y)) = bigon_crossings(d, f) {
            bigons.push((f, x, y));
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    let mut regions = Vec::new();
    for (root, members) in groups {
        let mut nbrs: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        let mut faces = Vec::new();
        for &(f, x, y) in &bigons {
            if find(&mut parent, x) == root {
                nbrs.entry(x).or_default().insert(y);
                nbrs.entry(y).or_default().insert(x);
                faces.push(f);
            }
        }
        let c = members.len();
        let closed = c >= 2 && faces.len() >= c;
        let start = if closed {
            members[0]
        } else {
            *members
                .iter()
                .find(|x| nbrs.get(x).map_or(0, |s| s.len()) <= 1)
                .unwrap_or(&members[0])
        };
        let mut order = vec![start];
        let mut seen: BTreeSet<usize> = [start].into();
        let mut cur = start;
        while let Some(&next) = nbrs.get(&cur).and_then(|s| s.iter().find(|y| !seen.contains(y))) {
            order.push(next);
            seen.insert(next);
            cur = next;
        }
        // branching chains (not seen in reduced alternating diagrams) keep the rest in id order
        order.extend(members.iter().filter(|x| !seen.contains(x)));
        let color = if c == 1 {
            None
        } else {
            let blue = faces.iter().filter(|&&f| col.color(f) == Color::Blue).count();
            Some(if 2 * blue >= faces.len() {
                Color::Blue
            } else {
                Color::Red
            })
        };
        regions.push(TwistRegion {
            crossings: order,
            c,
            color,
            closed,
            sign: d.crossing_sign(start),
            bigons: faces,
        });
    }
    regions
}

pub fn is_prime(d: &PlanarDiagram) -> Result<(), CurveWitness> {
    // edges grouped by their (unordered) face pair
    let mut by_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for dart in 0..d.dart_count() {
        if dart < d.partner(dart) {
            let (a, b) = d.edge_faces(dart);
            by_faces.entry((a.min(b), a.max(b))).or_default().push(dart);
        }
    }
    for (&(f, g), edges) in &by_faces {
        let pairs: Vec<(usize, usize)> = if f == g {
            edges.iter().map(|&e| (e, e)).collect()
        } else {
            let mut v = Vec::new();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    v.push((edges[i], edges[j]));
                }
            }
            v
        };
        for (e1, e2) in pairs {
            let cut: BTreeSet<usize> = [e1, d.partner(e1), e2, d.partner(e2)].into();
            let sides = split_crossings(d, &cut);
            if let Some([a, b]) = sides {
                return Err(CurveWitness {
                    kind: WitnessKind::PrimeViolation,
                    through: [d.label(e1) as usize, d.label(e2) as usize],
                    faces: [f, g],
                    sides: [a, b],
                });
            }
        }
    }
    Ok(())
}

/// Components of the crossing graph with the given darts' edges removed,
/// when there are exactly two.
fn split_crossings(d: &PlanarDiagram, cut: &BTreeSet<usize>) -> Option<[Vec<usize>; 2]> {
    let n = d.crossing_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for dart in 4 * x..4 * x + 4 {
                if cut.contains(&dart) {
                    continue;
                }
                let y = d.partner(dart) / 4;
                if comp[y] == usize::MAX {
                    comp[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    (count == 2).then(|| {
        let a = (0..n).filter(|&x| comp[x] == 0).collect();
        let b = (0..n).filter(|&x| comp[x] == 1).collect();
        [a, b]
    })
}

/// Curve through crossings `x` and `y`: slots of each half on side A and B.
struct Cut {
    x: usize,
    y: usize,
    faces: [usize; 2],
    side_a: [usize; 4],
    side_b: [usize; 4],
}

fn side_crossings(d: &PlanarDiagram, cut: &Cut, darts: &[usize; 4]) -> Option<Vec<usize>> {
    let other: &[usize; 4] = if darts == &cut.side_a { &cut.side_b } else { &cut.side_a };
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut stack: Vec<usize> = darts.to_vec();
    while let Some(dart) = stack.pop() {
        let p = d.partner(dart);
        let z = p / 4;
        if z == cut.x || z == cut.y {
            if other.contains(&p) {
                return None;
            }
            continue;
        }
        if seen.insert(z) {
            stack.extend(4 * z..4 * z + 4);
        }
    }
    Some(seen.into_iter().collect())
}

/// Whether the side starting with `x`'s darts is a chain of bigons ending at `y`.
///
/// A chain uses up both edges of every crossing it passes, so when the walk
/// reaches `y` nothing else can lie on that side.
fn is_bigon_chain(d: &PlanarDiagram, cut: &Cut, half: &[usize; 4]) -> bool {
    let y_half = [half[2], half[3]];
    let mut cur = [half[0], half[1]];
    let mut visited = 0;
    loop {
        let (p, q) = (d.partner(cur[0]), d.partner(cur[1]));
        if p / 4 != q / 4 {
            return false;
        }
        // the face between the two parallel edges must be a bigon
        let lo = if (cur[0] + 1) % 4 == cur[1] % 4 { cur[1] } else { cur[0] };
        if d.face_degree(d.face_of(lo)) != 2 {
            return false;
        }
        let z = p / 4;
        if z == cut.y {
            return y_half.contains(&p) && y_half.contains(&q);
        }
        if z == cut.x {
            return false;
        }
        visited += 1;
        if visited > d.crossing_count() {
            return false;
        }
        let rest: Vec<usize> = (4 * z..4 * z + 4).filter(|&t| t != p && t != q).collect();
        cur = [rest[0], rest[1]];
    }
}

fn color_twist_check(d: &PlanarDiagram, col: &Coloring, color: Color) -> Result<(), CurveWitness> {
    // crossings indexed by the unordered pair of same-coloured diagonal faces
    let mut by_pair: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for x in 0..d.crossing_count() {
        for k in 0..2 {
            let (f, g) = (d.face_of(4 * x + k), d.face_of(4 * x + k + 2));
            if f == g || col.color(f) != color {
                continue;
            }
            // remember which corner holds the smaller face
            let corner = if f < g { k } else { k + 2 };
            by_pair.entry((f.min(g), f.max(g))).or_default().push((x, corner));
        }
    }
    for (&(f, g), list) in &by_pair {
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let (x, kx) = list[i];
                let (y, ky) = list[j];
                let s = |c: usize, t: usize| (c + t) % 4;
                let cut = Cut {
                    x,
                    y,
                    faces: [f, g],
                    side_a: [4 * x + s(kx, 0), 4 * x + s(kx, 1), 4 * y + s(ky, 2), 4 * y + s(ky, 3)],
                    side_b: [4 * x + s(kx, 2), 4 * x + s(kx, 3), 4 * y + s(ky, 0), 4 * y + s(ky, 1)],
                };
                if !is_bigon_chain(d, &cut, &cut.side_a) && !is_bigon_chain(d, &cut, &cut.side_b) {
                    let a = side_crossings(d, &cut, &cut.side_a);
                    let b = side_crossings(d, &cut, &cut.side_b);
                    let (Some(a), Some(b)) = (a, b) else {
                        unreachable!("curve through two crossings in two faces separates the sphere")
                    };
                    return Err(CurveWitness {
                        kind: WitnessKind::TwistReducedViolation,
                        through: [x, y],
                        faces: cut.faces,
                        sides: [a, b],
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn is_color_twist_reduced(d: &PlanarDiagram, col: &Coloring, color: Color) -> Result<(), CurveWitness> {
    color_twist_check(d, col, color)
}

pub fn is_twist_reduced(d: &PlanarDiagram, col: &Coloring) -> Result<(), CurveWitness> {
    color_twist_check(d, col, Color::Blue)?;
    color_twist_check(d, col, Color::Red)
}

pub fn twist_number(d: &PlanarDiagram, col: &Coloring) -> Result<usize, TwistError> {
    if !is_alternating(d) {
        return Err(TwistError::NotAlternating);
    }
    is_prime(d).map_err(TwistError::NotPrime)?;
    is_twist_reduced(d, col).map_err(TwistError::NotTwistReduced)?;
    Ok(twist_regions(d, col).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{checkerboard, parse_pd};
    use crate::families::{connected_sum, pretzel, FIGURE_EIGHT, FIVE_TWO, TREFOIL};

    fn cs(regions: &[TwistRegion]) -> Vec<usize> {
        let mut v: Vec<usize> = regions.iter().map(|r| r.c).collect();
        v.sort();
        v
    }

    #[test]
    fn figure_eight_regions() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let col = checkerboard(&d);
        let r = twist_regions(&d, &col);
        assert_eq!(cs(&r), vec![2, 2]);
        assert!(r.iter().all(|r| !r.closed && r.internal_bigons() == 1));
        assert_ne!(r[0].color, r[1].color);
        assert_eq!(twist_number(&d, &col), Ok(2));
    }

    #[test]
    fn trefoil_is_one_closed_region() {
        let d = parse_pd(TREFOIL).unwrap();
        let col = checkerboard(&d);
        let r = twist_regions(&d, &col);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].c, 3);
        assert!(r[0].closed);
        assert_eq!(r[0].internal_bigons(), 3);
        assert_eq!(twist_number(&d, &col), Ok(1));
    }

    #[test]
    fn five_two_regions() {
        let d = parse_pd(FIVE_TWO).unwrap();
        let col = checkerboard(&d);
        assert_eq!(cs(&twist_regions(&d, &col)), vec![2, 3]);
        assert!(is_prime(&d).is_ok());
        assert!(is_twist_reduced(&d, &col).is_ok());
        assert_eq!(twist_number(&d, &col), Ok(2));
    }

    #[test]
    fn chains_are_ordered_along_bigons() {
        let d = pretzel(&[2, 3, 6]).unwrap();
        let col = checkerboard(&d);
        for r in twist_regions(&d, &col) {
            for w in r.crossings.windows(2) {
                let shared = (0..d.face_count()).any(|f| {
                    let ds = d.face_darts(f);
                    ds.len() == 2 && {
                        let mut xs = [ds[0] / 4, ds[1] / 4];
                        xs.sort();
                        xs == [w[0].min(w[1]), w[0].max(w[1])]
                    }
                });
                assert!(shared, "{:?}", r.crossings);
            }
        }
    }

    #[test]
    fn prime_checks() {
        assert!(is_prime(&parse_pd(FIGURE_EIGHT).unwrap()).is_ok());
        assert!(is_prime(&parse_pd("X[1,2,2,1]").unwrap()).is_ok());
        let t = parse_pd(TREFOIL).unwrap();
        let sum = connected_sum(&t, 1, &t, 1).unwrap();
        let w = is_prime(&sum).unwrap_err();
        assert_eq!(w.kind, WitnessKind::PrimeViolation);
        let mut sizes = [w.sides[0].len(), w.sides[1].len()];
        sizes.sort();
        assert_eq!(sizes, [3, 3]);
        assert_ne!(w.faces[0], w.faces[1]);
    }

    #[test]
    fn flype_separated_single_crossings_are_not_twist_reduced() {
        let d = pretzel(&[1, 2, 1, 2]).unwrap();
        let col = checkerboard(&d);
        assert!(is_prime(&d).is_ok());
        let w = is_twist_reduced(&d, &col).unwrap_err();
        assert_eq!(w.kind, WitnessKind::TwistReducedViolation);
        assert!(w.sides.iter().all(|s| s.len() == 2));
        assert!(matches!(twist_number(&d, &col), Err(TwistError::NotTwistReduced(_))));
    }

    #[test]
    fn color_restriction_is_monotone() {
        for t in [&[2usize, 3, 4][..], &[1, 1, 5], &[3, 3, 3, 3]] {
            let d = pretzel(t).unwrap();
            let col = checkerboard(&d);
            assert!(is_twist_reduced(&d, &col).is_ok());
            assert!(is_color_twist_reduced(&d, &col, Color::Blue).is_ok());
            assert!(is_color_twist_reduced(&d, &col, Color::Red).is_ok());
        }
    }

    #[test]
    fn non_alternating_is_refused() {
        let d = parse_pd("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let col = checkerboard(&d);
        assert_eq!(twist_number(&d, &col), Err(TwistError::NotAlternating));
    }
}
