use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::double::double_disk;
use super::faces::small_faces_with;
use super::{face_info, Context, EdgeKind, EmbeddedGraph, FaceInfo, GraphError};

/// Outcome of a lemma checker. The witness is a list of vertex ids for the
/// valence lemmas and of face ids for the bigon bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Holds { witness: Vec<usize> },
    Vacuous { reason: String },
    Counterexample { detail: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, Verdict::Vacuous { .. })
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }

    fn vacuous(reason: &str) -> Verdict {
        Verdict::Vacuous {
            reason: reason.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BigonVariant {
    Disk,
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "lemma")]
pub enum Lemma {
    Sphere,
    Disk,
    /// The disk lemma read off the doubled sphere graph.
    DiskByDoubling,
    Torus,
    BigonBound {
        r_tw: usize,
        variant: BigonVariant,
    },
}

impl Lemma {
    pub fn context(self) -> Context {
        match self {
            Lemma::Sphere => Context::Sphere,
            Lemma::Disk | Lemma::DiskByDoubling => Context::Disk,
            Lemma::Torus => Context::Torus,
            Lemma::BigonBound {
                variant: BigonVariant::Disk,
                ..
            } => Context::Disk,
            Lemma::BigonBound {
                variant: BigonVariant::Square,
                ..
            } => Context::Square,
        }
    }

    pub fn check(self, g: &EmbeddedGraph) -> Verdict {
        match self {
            Lemma::Sphere => check_sphere_lemma(g),
            Lemma::Disk => check_disk_lemma(g),
            Lemma::DiskByDoubling => check_disk_lemma_by_doubling(g),
            Lemma::Torus => check_torus_lemma(g),
            Lemma::BigonBound { r_tw, variant } => {
                check_bigon_bound(g, r_tw, variant).unwrap_or_else(|e| Verdict::Vacuous { reason: e.to_string() })
            }
        }
    }
}

fn has_small_inner_face(info: &FaceInfo, max_degree: usize) -> bool {
    info.inner_faces().any(|f| info.degree(f) <= max_degree)
}

pub fn check_sphere_lemma(g: &EmbeddedGraph) -> Verdict {
    if g.context() != Context::Sphere {
        return Verdict::vacuous("not a sphere graph");
    }
    if g.is_lone_vertex() {
        return Verdict::vacuous("isolated vertex");
    }
    if !g.is_connected() {
        return Verdict::vacuous("disconnected");
    }
    // sphere graphs have no outer faces, so every face counts
    let (vert, n) = g.vertices();
    let faces = g.face_degrees();
    if n as i64 - g.total_edges() as i64 + faces.len() as i64 != 2 {
        return Verdict::vacuous("rotation system is not planar");
    }
    if faces.iter().any(|&d| d <= 2) {
        return Verdict::vacuous("has a monogon or bigon");
    }
    if g.edge_count() == 1 && n == 2 {
        return Verdict::vacuous("single edge");
    }
    let mut val = vec![0; n];
    for d in 0..g.dart_count() {
        if g.kind(d / 2) != EdgeKind::Virtual {
            val[vert[d]] += 1;
        }
    }
    let low: Vec<usize> = val.iter().enumerate().filter(|(_, &d)| d < 6).map(|(v, _)| v).collect();
    if low.len() >= 3 {
        Verdict::Holds { witness: low }
    } else {
        Verdict::Counterexample {
            detail: format!("only {} vertices of valence < 6", low.len()),
        }
    }
}

/// The outer face of a disk walks once around a simple cycle of boundary
/// edges, and every boundary edge lies on it.
fn simple_boundary(g: &EmbeddedGraph, info: &FaceInfo) -> bool {
    let outer: Vec<usize> = (0..info.faces.len()).filter(|&f| info.outer[f]).collect();
    if outer.len() != 1 {
        return false;
    }
    let walk = &info.faces[outer[0]];
    let (vert, _) = g.vertices();
    let edges: BTreeSet<usize> = walk.iter().map(|d| d / 2).collect();
    let verts: BTreeSet<usize> = walk.iter().map(|&d| vert[d]).collect();
    let boundary: BTreeSet<usize> = (0..g.total_edges())
        .filter(|&e| g.kind(e) == EdgeKind::Boundary)
        .collect();
    edges.len() == walk.len() && verts.len() == walk.len() && edges == boundary
}

fn disk_hypotheses(g: &EmbeddedGraph) -> Result<FaceInfo, &'static str> {
    if g.context() != Context::Disk {
        return Err("not a disk graph");
    }
    if g.is_lone_vertex() {
        return Err("does not contain the boundary");
    }
    if !g.is_connected() {
        return Err("disconnected");
    }
    let info = face_info(g);
    if info.genus != 0 {
        return Err("rotation system is not planar");
    }
    if !simple_boundary(g, &info) {
        return Err("boundary is not a simple cycle of the graph");
    }
    Ok(info)
}

pub fn check_disk_lemma(g: &EmbeddedGraph) -> Verdict {
    let info = match disk_hypotheses(g) {
        Ok(info) => info,
        Err(reason) => return Verdict::vacuous(reason),
    };
    if has_small_inner_face(&info, 2) {
        return Verdict::vacuous("has a monogon or bigon");
    }
    let boundary = g.boundary_vertices();
    let val = g.valences();
    let interior_low: Vec<usize> = (0..val.len())
        .filter(|v| !boundary.contains(v) && val[*v] <= 5)
        .collect();
    if !interior_low.is_empty() {
        return Verdict::Holds { witness: interior_low };
    }
    let boundary_low: Vec<usize> = boundary.iter().copied().filter(|&v| val[v] <= 3).collect();
    if boundary_low.len() >= 3 {
        Verdict::Holds { witness: boundary_low }
    } else {
        Verdict::Counterexample {
            detail: format!(
                "no interior vertex of valence <= 5 and {} boundary vertices of valence <= 3",
                boundary_low.len()
            ),
        }
    }
}

/// The disk lemma by way of the sphere lemma on the doubled graph: a low
/// vertex off the doubled boundary is an interior vertex of the disk, and a
/// low vertex on it has valence `2d - 2 < 6` there.
pub fn check_disk_lemma_by_doubling(g: &EmbeddedGraph) -> Verdict {
    if g.context() != Context::Disk || g.outer_darts().is_empty() {
        return Verdict::vacuous("not a disk graph with boundary");
    }
    let Ok((double, origin)) = double_disk(g) else {
        return Verdict::vacuous("not a disk graph");
    };
    if !check_sphere_lemma(&double).holds() {
        return check_sphere_lemma(&double);
    }
    let val = double.valences();
    let low: Vec<usize> = (0..val.len()).filter(|&v| val[v] < 6).collect();
    let interior: Vec<usize> = low
        .iter()
        .filter(|&&v| !origin[v].on_boundary)
        .map(|&v| origin[v].vertex)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if !interior.is_empty() {
        return Verdict::Holds { witness: interior };
    }
    let on_boundary: Vec<usize> = low.iter().map(|&v| origin[v].vertex).collect();
    if on_boundary.len() >= 3 {
        Verdict::Holds { witness: on_boundary }
    } else {
        Verdict::Counterexample {
            detail: format!("doubled graph has {} low vertices", low.len()),
        }
    }
}

pub fn check_torus_lemma(g: &EmbeddedGraph) -> Verdict {
    if g.context() != Context::Torus {
        return Verdict::vacuous("not a torus graph");
    }
    if g.is_lone_vertex() {
        return Verdict::Holds { witness: vec![0] };
    }
    let info = face_info(g);
    if has_small_inner_face(&info, 2) {
        return Verdict::vacuous("has a monogon or bigon");
    }
    let val = g.valences();
    let min = *val.iter().min().unwrap();
    if min <= 6 {
        Verdict::Holds {
            witness: (0..val.len()).filter(|&v| val[v] == min).collect(),
        }
    } else {
        Verdict::Counterexample {
            detail: format!("minimum valence {min}"),
        }
    }
}

/// Checks the adjacent-bigon bound. Hypothesis failures are errors naming
/// the clause; the exceptional vertices are read from `g.exceptional`.
pub fn check_bigon_bound(g: &EmbeddedGraph, r_tw: usize, variant: BigonVariant) -> Result<Verdict, GraphError> {
    let fail = |s: String| Err(GraphError::HypothesisViolated(s));
    if r_tw < 2 || r_tw % 2 == 1 {
        return fail(format!("R_tw = {r_tw} must be even and at least 2"));
    }
    let want = match variant {
        BigonVariant::Disk => Context::Disk,
        BigonVariant::Square => Context::Square,
    };
    if g.context() != want {
        return Err(GraphError::WrongContext {
            expected: want,
            found: g.context(),
        });
    }
    let info = match variant {
        BigonVariant::Disk => disk_hypotheses(g).map_err(|s| GraphError::HypothesisViolated(s.into()))?,
        BigonVariant::Square => square_hypotheses(g).map_err(|s| GraphError::HypothesisViolated(s.into()))?,
    };
    if has_small_inner_face(&info, 1) {
        return fail("has a monogon".into());
    }
    let val = g.valences();
    let boundary = g.boundary_vertices();
    let marked = g.marked_vertices();
    let max_exceptions = match variant {
        BigonVariant::Disk => 2,
        BigonVariant::Square => 0,
    };
    if g.exceptional.len() > max_exceptions {
        return fail(format!(
            "{} exceptional vertices, at most {max_exceptions} allowed",
            g.exceptional.len()
        ));
    }
    for v in 0..val.len() {
        if g.exceptional.contains(&v) || marked.contains(&v) {
            continue;
        }
        let need = if boundary.contains(&v) { r_tw / 2 + 1 } else { r_tw };
        if val[v] < need {
            return fail(format!("vertex {v} has valence {} < {need}", val[v]));
        }
    }
    let small = small_faces_with(g, &info);
    let fam = small.longest_family();
    let k = fam.map_or(0, |f| f.len());
    let witness = fam.map(|f| f.faces.clone()).unwrap_or_default();
    Ok(match variant {
        BigonVariant::Disk => {
            if 6 * k + 6 > r_tw {
                Verdict::Holds { witness }
            } else {
                Verdict::Counterexample {
                    detail: format!("longest bigon family has {k} bigons, R_tw = {r_tw}"),
                }
            }
        }
        BigonVariant::Square => {
            let t = small.tagged_triangle_runs.iter().copied().max().unwrap_or(0);
            if 8 * k + 8 > r_tw {
                Verdict::Holds { witness }
            } else if 8 * t + 8 > r_tw {
                Verdict::Holds {
                    witness: small.tagged_triangles.clone(),
                }
            } else {
                Verdict::Counterexample {
                    detail: format!("longest bigon family {k}, longest tagged triangle run {t}, R_tw = {r_tw}"),
                }
            }
        }
    })
}

fn square_hypotheses(g: &EmbeddedGraph) -> Result<FaceInfo, &'static str> {
    if g.is_lone_vertex() || g.outer_darts().len() != 1 {
        return Err("square boundary is missing");
    }
    let info = face_info(g);
    if info.genus != 0 {
        return Err("rotation system is not planar");
    }
    let real: BTreeSet<usize> = (0..g.total_edges())
        .filter(|&e| g.kind(e) != EdgeKind::Virtual)
        .collect();
    if !g
        .remove_edges(&(0..g.total_edges()).filter(|e| !real.contains(e)).collect())
        .is_connected()
    {
        return Err("disconnected");
    }
    let val = g.valences();
    if g.marked_vertices().iter().any(|&v| val[v] != 1) {
        return Err("marked sides meet the graph in vertices of valence other than one");
    }
    Ok(info)
}

/// Fan triangulation: every face of degree `k > 3` gets the chords from
/// its least corner to the `k - 3` corners not adjacent to it.
pub fn fan_triangulate(g: &EmbeddedGraph) -> EmbeddedGraph {
    let (_, faces) = g.face_orbits();
    let mut out = g.clone();
    for walk in faces {
        let k = walk.len();
        if k <= 3 {
            continue;
        }
        // corner i sits before dart walk[i], after dart walk[i - 1] ^ 1
        let corner = |i: usize| walk[(i + k - 1) % k] ^ 1;
        let start = (0..k).min_by_key(|&i| corner(i)).unwrap();
        let c0 = corner(start);
        for j in 2..=k - 2 {
            out.add_edge(c0, corner(start + j), EdgeKind::Interior);
        }
    }
    out
}

pub fn triangulate_and_check_identity(g: &EmbeddedGraph) -> Verdict {
    if g.context() != Context::Sphere {
        return Verdict::vacuous("not a sphere graph");
    }
    if g.is_lone_vertex() || !g.is_connected() {
        return Verdict::vacuous("disconnected or a lone vertex");
    }
    let info = face_info(g);
    if info.genus != 0 || has_small_inner_face(&info, 2) || g.vertex_count() < 3 {
        return Verdict::vacuous("needs a planar graph without monogons or bigons on at least 3 vertices");
    }
    let t = fan_triangulate(g);
    let tinfo = face_info(&t);
    let (e, f) = (t.edge_count(), tinfo.faces.len());
    if 2 * e != 3 * f || tinfo.faces.iter().any(|w| w.len() != 3) {
        return Verdict::Counterexample {
            detail: format!("triangulation has E = {e}, F = {f}"),
        };
    }
    let val = t.valences();
    let sum: Ratio<i64> = val.iter().map(|&d| Ratio::new(6 - d as i64, 6)).sum();
    if sum == Ratio::from_integer(2) {
        Verdict::Holds { witness: val }
    } else {
        Verdict::Counterexample {
            detail: format!("sum of 1 - d/6 is {sum}"),
        }
    }
}

/// `(v_B, v_BR, v_BRG, e_BRG)`, compared lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComplexityTuple {
    pub v_b: usize,
    pub v_br: usize,
    pub v_brg: usize,
    pub e_brg: usize,
}

impl ComplexityTuple {
    pub fn new(v_b: usize, v_br: usize, v_brg: usize, e_brg: usize) -> Result<Self, String> {
        if v_b > v_br || v_br > v_brg {
            return Err(format!("vertex counts must be nested: {v_b} <= {v_br} <= {v_brg}"));
        }
        Ok(ComplexityTuple {
            v_b,
            v_br,
            v_brg,
            e_brg,
        })
    }
}

pub fn complexity(t: ComplexityTuple, u: ComplexityTuple) -> Ordering {
    t.cmp(&u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::examples::*;

    #[test]
    fn sphere_examples() {
        assert_eq!(
            check_sphere_lemma(&triangle()),
            Verdict::Holds { witness: vec![0, 1, 2] }
        );
        assert!(matches!(check_sphere_lemma(&icosahedron()), Verdict::Holds { witness } if witness.len() == 12));
        assert!(check_sphere_lemma(&theta(Context::Sphere)).is_vacuous());
        assert!(check_sphere_lemma(&EmbeddedGraph::lone_vertex(Context::Sphere)).is_vacuous());
        let edge = EmbeddedGraph::from_rotations(Context::Sphere, &[vec![0], vec![0]]).unwrap();
        assert!(check_sphere_lemma(&edge).is_vacuous());
        let path = EmbeddedGraph::from_rotations(Context::Sphere, &[vec![0], vec![0, 1], vec![1]]).unwrap();
        assert!(check_sphere_lemma(&path).holds());
    }

    #[test]
    fn disk_examples() {
        let sq = boundary_cycle(4);
        assert_eq!(
            check_disk_lemma(&sq),
            Verdict::Holds {
                witness: vec![0, 1, 2, 3]
            }
        );
        let w = disk_wheel(5);
        let Verdict::Holds { witness } = check_disk_lemma(&w) else {
            panic!()
        };
        assert_eq!(witness.len(), 1);
        assert_eq!(w.valences()[witness[0]], 5);
        // hub of valence 6: the interior clause fails, the boundary clause holds
        assert!(check_disk_lemma(&disk_wheel(6)).holds());
        assert!(check_disk_lemma(&doubled_spokes(4)).is_vacuous());
        for g in [sq, w, disk_wheel(6), square_with_chord(), boundary_cycle(2)] {
            assert_eq!(check_disk_lemma(&g).holds(), check_disk_lemma_by_doubling(&g).holds());
            assert_eq!(
                check_disk_lemma(&g).is_vacuous(),
                check_disk_lemma_by_doubling(&g).is_vacuous()
            );
        }
    }

    #[test]
    fn torus_examples() {
        let t = triangular_torus(3);
        assert!(t.valences().iter().all(|&d| d == 6));
        assert_eq!(
            check_torus_lemma(&t),
            Verdict::Holds {
                witness: (0..9).collect()
            }
        );
        assert!(check_torus_lemma(&square_torus(3)).holds());
        let bouquet = EmbeddedGraph::from_rotations(Context::Torus, &[vec![0, 1, 0, 1]]).unwrap();
        assert!(check_torus_lemma(&bouquet).holds());
    }

    #[test]
    fn bigon_bound_examples() {
        // hub joined to each of 6 boundary vertices by a pair of parallel edges
        let g = doubled_spokes(6);
        assert_eq!(g.valences().iter().max(), Some(&12));
        let v = check_bigon_bound(&g, 6, BigonVariant::Disk).unwrap();
        assert!(matches!(v, Verdict::Holds { witness } if witness.len() == 1));
        // at R_tw = 12 the boundary vertices (valence 4) are below 7
        assert!(matches!(
            check_bigon_bound(&g, 12, BigonVariant::Disk),
            Err(GraphError::HypothesisViolated(_))
        ));
        assert!(check_bigon_bound(&g, 5, BigonVariant::Disk).is_err());
        assert!(check_bigon_bound(&g, 6, BigonVariant::Square).is_err());

        // a boundary triangle has every vertex of valence 2; with two exceptions one is still short
        let mut tri = boundary_cycle(3);
        tri.exceptional = [0, 1].into();
        assert!(check_bigon_bound(&tri, 6, BigonVariant::Disk).is_err());
    }

    #[test]
    fn square_bound() {
        let g = square_with_cross();
        assert_eq!(g.marked_vertices().len(), 6);
        let v = check_bigon_bound(&g, 2, BigonVariant::Square).unwrap();
        assert!(v.holds(), "{v:?}");
        // the central vertex has valence 4 < 8
        assert!(check_bigon_bound(&g, 8, BigonVariant::Square).is_err());
        let split = square_with_crossing_chord();
        assert_eq!(
            check_bigon_bound(&split, 2, BigonVariant::Square),
            Err(GraphError::HypothesisViolated("disconnected".into()))
        );
    }

    #[test]
    fn identity_on_polyhedra() {
        for g in [octahedron(), cube(), icosahedron(), wheel(7), triangle()] {
            let v = triangulate_and_check_identity(&g);
            assert!(v.holds(), "{v:?}");
        }
        let c = fan_triangulate(&cube());
        assert_eq!(c.edge_count(), 18);
        assert!(triangulate_and_check_identity(&theta(Context::Sphere)).is_vacuous());
    }

    #[test]
    fn complexity_order() {
        let t = |a, b, c, d| ComplexityTuple::new(a, b, c, d).unwrap();
        assert_eq!(complexity(t(1, 2, 3, 4), t(1, 2, 3, 5)), Ordering::Less);
        // not a nested count, but the order is still total
        let u = ComplexityTuple {
            v_b: 1,
            v_br: 0,
            v_brg: 0,
            e_brg: 0,
        };
        assert_eq!(complexity(t(0, 9, 9, 9), u), Ordering::Less);
        assert_eq!(complexity(t(2, 2, 2, 2), t(2, 2, 2, 2)), Ordering::Equal);
        assert!(ComplexityTuple::new(3, 2, 5, 0).is_err());
    }
}
