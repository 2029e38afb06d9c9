use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Context, EdgeKind, EmbeddedGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DoubleMode {
    DiskToSphere,
    SquareToAnnulus,
    AnnulusToTorus,
    SquareToTorus,
}

/// Where a vertex of a doubled graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Origin {
    pub vertex: usize,
    pub mirrored: bool,
    pub on_boundary: bool,
}

pub fn double(g: &EmbeddedGraph, mode: DoubleMode) -> Result<EmbeddedGraph, GraphError> {
    let need = match mode {
        DoubleMode::DiskToSphere => Context::Disk,
        DoubleMode::SquareToAnnulus | DoubleMode::SquareToTorus => Context::Square,
        DoubleMode::AnnulusToTorus => Context::Annulus,
    };
    if g.context() != need {
        return Err(GraphError::WrongContext {
            expected: need,
            found: g.context(),
        });
    }
    Ok(match mode {
        DoubleMode::DiskToSphere => along_boundary(g, Context::Sphere).0,
        DoubleMode::AnnulusToTorus => along_boundary(g, Context::Torus).0,
        DoubleMode::SquareToAnnulus => along_marked_sides(g),
        DoubleMode::SquareToTorus => along_boundary(&along_marked_sides(g), Context::Torus).0,
    })
}

/// Disk to sphere with the origin of every vertex of the double.
pub fn double_disk(g: &EmbeddedGraph) -> Result<(EmbeddedGraph, Vec<Origin>), GraphError> {
    if g.context() != Context::Disk {
        return Err(GraphError::WrongContext {
            expected: Context::Disk,
            found: g.context(),
        });
    }
    Ok(along_boundary(g, Context::Sphere))
}

/// Glue `g` to its mirror image along the boundary edges; the faces marked
/// outer are where the mirror copy goes.
///
/// At a boundary vertex the rotation read from the dart `x` facing outward
/// is `x, i1..ik, y`; the double goes on with the mirrored `ik'..i1'`.
/// Interior vertices get a mirrored copy with the rotation reversed.
fn along_boundary(g: &EmbeddedGraph, target: Context) -> (EmbeddedGraph, Vec<Origin>) {
    let sigma = g.sigma();
    let nd = sigma.len();
    let mut outward = vec![false; nd];
    for &o in g.outer_darts() {
        let mut d = o;
        loop {
            outward[d] = true;
            d = sigma[d ^ 1];
            if d == o {
                break;
            }
        }
    }
    let mut inv = vec![0; nd];
    for (d, &s) in sigma.iter().enumerate() {
        inv[s] = d;
    }
    let ne = g.total_edges();
    let mut kinds: Vec<EdgeKind> = g.kinds().to_vec();
    let mut mirror_edge = vec![usize::MAX; ne];
    let mut original_edge = Vec::new();
    for e in 0..ne {
        if g.kind(e) == EdgeKind::Interior {
            mirror_edge[e] = kinds.len();
            original_edge.push(e);
            kinds.push(EdgeKind::Interior);
        }
    }
    let mirror = |d: usize| 2 * mirror_edge[d / 2] + (d & 1);
    let is_x = |d: usize| g.kind(d / 2) != EdgeKind::Interior && outward[d];

    let mut next = sigma.to_vec();
    next.resize(2 * kinds.len(), 0);
    for x in (0..nd).filter(|&d| is_x(d)) {
        let y = inv[x];
        let p = inv[y];
        next[y] = if p == x { x } else { mirror(p) };
    }
    for d in (0..nd).filter(|&d| g.kind(d / 2) == EdgeKind::Interior) {
        let p = inv[d];
        next[mirror(d)] = if is_x(p) { p } else { mirror(p) };
    }
    let out = EmbeddedGraph {
        context: target,
        sigma: next,
        kinds,
        lone_vertex: false,
        outer: Vec::new(),
        exceptional: BTreeSet::new(),
    };

    let (vert, _) = g.vertices();
    let mut on_boundary = vec![false; nd];
    for d in (0..nd).filter(|&d| is_x(d)) {
        on_boundary[vert[d]] = true;
    }
    let (new_vert, n) = out.vertices();
    let mut origin = Vec::with_capacity(n);
    for s in 0..out.sigma.len() {
        if new_vert[s] == origin.len() {
            let base = if s < nd {
                s
            } else {
                2 * original_edge[s / 2 - ne] + (s & 1)
            };
            let v = vert[base];
            origin.push(Origin {
                vertex: v,
                mirrored: s >= nd && !on_boundary[v],
                on_boundary: on_boundary[v],
            });
        }
    }
    (out, origin)
}

/// Glue a square to its mirror along the marked sides and smooth the
/// valence-one attachment points, keeping one where a cycle would
/// otherwise lose all its vertices.
fn along_marked_sides(g: &EmbeddedGraph) -> EmbeddedGraph {
    let ne = g.total_edges();
    let real: Vec<usize> = (0..ne).filter(|&e| g.kind(e) != EdgeKind::Virtual).collect();
    let mut id = vec![usize::MAX; ne];
    for (i, &e) in real.iter().enumerate() {
        id[e] = i;
    }
    let nr = real.len();
    let copy = |d: usize, c: usize| 2 * (id[d / 2] + c * nr) + (d & 1);
    let mut kinds: Vec<EdgeKind> = real.iter().map(|&e| g.kind(e)).collect();
    kinds.extend(kinds.clone());

    let marked = g.marked_vertices();
    let (vert, _) = g.vertices();
    let mut lists: Vec<Option<Vec<usize>>> = Vec::new();
    let mut to_smooth = Vec::new();
    for rot in g.rotations() {
        let v = vert[rot[0]];
        let realrot: Vec<usize> = rot
            .iter()
            .copied()
            .filter(|&d| g.kind(d / 2) != EdgeKind::Virtual)
            .collect();
        if marked.contains(&v) {
            debug_assert_eq!(realrot.len(), 1, "marked vertices have valence one");
            to_smooth.push(lists.len());
            lists.push(Some(vec![copy(realrot[0], 0), copy(realrot[0], 1)]));
        } else {
            lists.push(Some(realrot.iter().map(|&d| copy(d, 0)).collect()));
            lists.push(Some(realrot.iter().rev().map(|&d| copy(d, 1)).collect()));
        }
    }
    let mut at = vec![usize::MAX; 4 * nr];
    for (i, l) in lists.iter().enumerate() {
        for &d in l.as_ref().unwrap() {
            at[d] = i;
        }
    }
    let mut removed = BTreeSet::new();
    for w in to_smooth {
        let (a, b) = {
            let l = lists[w].as_ref().unwrap();
            (l[0], l[1])
        };
        if a / 2 == b / 2 {
            continue;
        }
        let far = b ^ 1;
        let target = at[far];
        let l = lists[target].as_mut().unwrap();
        let pos = l.iter().position(|&x| x == far).unwrap();
        l[pos] = a;
        at[a] = target;
        lists[w] = None;
        removed.insert(b / 2);
    }
    let keep: Vec<usize> = (0..2 * nr).filter(|e| !removed.contains(e)).collect();
    let mut new_id = vec![usize::MAX; 2 * nr];
    for (i, &e) in keep.iter().enumerate() {
        new_id[e] = i;
    }
    let map = |d: usize| 2 * new_id[d / 2] + (d & 1);
    let rotations: Vec<Vec<usize>> = lists
        .into_iter()
        .flatten()
        .map(|l| l.into_iter().map(map).collect())
        .collect();
    let kinds: Vec<EdgeKind> = keep.iter().map(|&e| kinds[e]).collect();
    let out = EmbeddedGraph::from_dart_rotations(Context::Annulus, &rotations, kinds).expect("annulus rotations");

    // outer sides: boundary darts facing out in the square, and their mirror images
    let (face_of, _) = g.face_orbits();
    let outer_faces: BTreeSet<usize> = g.outer_darts().iter().map(|&d| face_of[d]).collect();
    let mut candidates = Vec::new();
    for d in 0..g.dart_count() {
        if g.kind(d / 2) == EdgeKind::Boundary && outer_faces.contains(&face_of[d]) {
            candidates.push(copy(d, 0));
            candidates.push(copy(d ^ 1, 1));
        }
    }
    let (new_face, _) = out.face_orbits();
    let mut reps = Vec::new();
    let mut seen = BTreeSet::new();
    for c in candidates {
        if removed.contains(&(c / 2)) {
            continue;
        }
        let d = map(c);
        if seen.insert(new_face[d]) {
            reps.push(d);
        }
    }
    out.with_outer_darts(reps)
}
