//! Embedded multigraphs as rotation systems, plus the lemma checkers and
//! the enumerator that drives them.
//!
//! Edge `e` owns darts `2e` and `2e + 1`; `sigma[d]` is the next dart
//! counterclockwise around the vertex of `d`. Faces are the orbits of
//! `d -> sigma[d ^ 1]`. The corner `c` is the angle between `c` and
//! `sigma[c]` and belongs to the face of `sigma[c]`.
//!
//! Disks and squares carry their boundary: boundary edges are real edges of
//! the graph, the two marked sides of a square are virtual edges, and the
//! faces outside the surface are remembered by representative darts.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod double;
mod enumerate;
pub mod examples;
mod faces;
mod lemmas;

pub use double::{double, double_disk, DoubleMode, Origin};
pub use enumerate::{
    canonical_code, enumerate_graphs, for_each_graph, max_edges_cap, search_counterexamples, Constraints, Schedule,
    SearchReport,
};
pub use faces::{collapse_bigon_families, find_small_faces, BigonFamily, SmallFaces};
pub use lemmas::{
    check_bigon_bound, check_disk_lemma, check_disk_lemma_by_doubling, check_sphere_lemma, check_torus_lemma,
    complexity, fan_triangulate, triangulate_and_check_identity, BigonVariant, ComplexityTuple, Lemma, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Context {
    Sphere,
    Disk,
    Square,
    Annulus,
    Torus,
}

impl Context {
    /// Genus of the closed surface obtained by capping every boundary face.
    pub fn capped_genus(self) -> usize {
        match self {
            Context::Torus => 1,
            _ => 0,
        }
    }

    pub fn has_boundary(self) -> bool {
        matches!(self, Context::Disk | Context::Square | Context::Annulus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Interior,
    Boundary,
    /// A marked side of a square; not an edge of the graph itself.
    Virtual,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("rotation system is malformed: {0}")]
    Malformed(String),
    #[error("expected capped genus {expected} for {context:?}, found {found}")]
    ContextMismatch {
        context: Context,
        expected: usize,
        found: i64,
    },
    #[error("max_edges {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("expected a {expected:?} graph, got {found:?}")]
    WrongContext { expected: Context, found: Context },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("{0:?} enumeration is not supported")]
    Unsupported(Context),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    context: Context,
    sigma: Vec<usize>,
    kinds: Vec<EdgeKind>,
    /// A single vertex without edges.
    lone_vertex: bool,
    /// One dart in each face lying outside the surface.
    outer: Vec<usize>,
    /// Vertices exempt from valence schedules, by vertex id.
    pub exceptional: BTreeSet<usize>,
}

/// Face data of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceInfo {
    /// Darts of each face in walk order.
    pub faces: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
    /// Faces outside the surface (the complement of a disk, square or annulus).
    pub outer: Vec<bool>,
    pub genus: i64,
}

impl FaceInfo {
    pub fn degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(|&f| !self.outer[f])
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    context: Context,
    vertices: Vec<VertexJson>,
    pairing: Vec<[usize; 2]>,
    boundary: Vec<usize>,
    marks: MarksJson,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    rot: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MarksJson {
    #[serde(rename = "virtual")]
    virtual_edges: Vec<usize>,
    outer: Vec<usize>,
    exceptional: Vec<usize>,
}

impl EmbeddedGraph {
    /// The graph with one vertex and no edges.
    pub fn lone_vertex(context: Context) -> Self {
        EmbeddedGraph {
            context,
            sigma: Vec::new(),
            kinds: Vec::new(),
            lone_vertex: true,
            outer: Vec::new(),
            exceptional: BTreeSet::new(),
        }
    }

    /// Build from per-vertex rotations listing edge ids counterclockwise.
    /// Each edge id must appear exactly twice; the first occurrence becomes
    /// dart `2e`.
    pub fn from_rotations(context: Context, rotations: &[Vec<usize>]) -> Result<Self, GraphError> {
        let ne = rotations.iter().map(|r| r.len()).sum::<usize>();
        if ne == 0 {
            return if rotations.len() == 1 {
                Ok(Self::lone_vertex(context))
            } else {
                Err(GraphError::Malformed("edgeless graphs need exactly one vertex".into()))
            };
        }
        if ne % 2 == 1 {
            return Err(GraphError::Malformed("odd number of half-edges".into()));
        }
        let ne = ne / 2;
        let mut seen = vec![0u8; ne];
        let mut dart_rot = Vec::new();
        for rot in rotations {
            if rot.is_empty() {
                return Err(GraphError::Malformed("isolated vertex in a graph with edges".into()));
            }
            let mut darts = Vec::new();
            for &e in rot {
                if e >= ne || seen[e] == 2 {
                    return Err(GraphError::Malformed(format!(
                        "edge {e} used more than twice or out of range"
                    )));
                }
                darts.push(2 * e + seen[e] as usize);
                seen[e] += 1;
            }
            dart_rot.push(darts);
        }
        Self::from_dart_rotations(context, &dart_rot, vec![EdgeKind::Interior; ne])
    }

    pub(crate) fn from_dart_rotations(
        context: Context,
        rotations: &[Vec<usize>],
        kinds: Vec<EdgeKind>,
    ) -> Result<Self, GraphError> {
        let nd = 2 * kinds.len();
        let mut sigma = vec![usize::MAX; nd];
        for rot in rotations {
            for (i, &d) in rot.iter().enumerate() {
                if d >= nd || sigma[d] != usize::MAX {
                    return Err(GraphError::Malformed(format!("dart {d} repeated or out of range")));
                }
                sigma[d] = rot[(i + 1) % rot.len()];
            }
        }
        if sigma.iter().any(|&s| s == usize::MAX) {
            return Err(GraphError::Malformed("dart missing from rotations".into()));
        }
        Ok(EmbeddedGraph {
            context,
            sigma,
            kinds,
            lone_vertex: false,
            outer: Vec::new(),
            exceptional: BTreeSet::new(),
        })
    }

    /// Mark edges as boundary or virtual (marked square sides) and record
    /// the face outside a disk or square: the face whose sides are exactly
    /// the non-interior edges. A bare cycle has two such faces and the one
    /// holding the least dart is taken.
    pub fn with_boundary(mut self, boundary: &[usize], virtual_edges: &[usize]) -> Self {
        for &e in boundary {
            self.kinds[e] = EdgeKind::Boundary;
        }
        for &e in virtual_edges {
            self.kinds[e] = EdgeKind::Virtual;
        }
        let cycle: BTreeSet<usize> = (0..self.kinds.len())
            .filter(|&e| self.kinds[e] != EdgeKind::Interior)
            .collect();
        let (_, faces) = self.face_orbits();
        self.outer = faces
            .iter()
            .find(|darts| darts.iter().map(|&d| d / 2).collect::<BTreeSet<_>>() == cycle)
            .map(|darts| vec![darts[0]])
            .unwrap_or_default();
        self
    }

    /// Set the outer faces directly by representative darts.
    pub fn with_outer_darts(mut self, darts: Vec<usize>) -> Self {
        self.outer = darts;
        self
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    pub fn kind(&self, e: usize) -> EdgeKind {
        self.kinds[e]
    }

    pub fn outer_darts(&self) -> &[usize] {
        &self.outer
    }

    pub fn is_lone_vertex(&self) -> bool {
        self.lone_vertex
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    /// All edges including virtual ones.
    pub fn total_edges(&self) -> usize {
        self.kinds.len()
    }

    /// Edges of the graph proper (virtual sides excluded).
    pub fn edge_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k != EdgeKind::Virtual).count()
    }

    /// Vertex id of every dart and the vertex count. Vertices are numbered
    /// by their least dart.
    pub fn vertices(&self) -> (Vec<usize>, usize) {
        if self.lone_vertex {
            return (Vec::new(), 1);
        }
        let mut vert = vec![usize::MAX; self.sigma.len()];
        let mut n = 0;
        for s in 0..self.sigma.len() {
            if vert[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            loop {
                vert[d] = n;
                d = self.sigma[d];
                if d == s {
                    break;
                }
            }
            n += 1;
        }
        (vert, n)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().1
    }

    /// Darts around each vertex, counterclockwise from the least.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        if self.lone_vertex {
            return vec![Vec::new()];
        }
        let (vert, n) = self.vertices();
        let mut out = vec![Vec::new(); n];
        for s in 0..self.sigma.len() {
            if out[vert[s]].is_empty() {
                let mut d = s;
                loop {
                    out[vert[s]].push(d);
                    d = self.sigma[d];
                    if d == s {
                        break;
                    }
                }
            }
        }
        out
    }

    /// Valence counting graph edges only (virtual sides excluded).
    pub fn valences(&self) -> Vec<usize> {
        let (vert, n) = self.vertices();
        let mut deg = vec![0; n];
        for d in 0..self.sigma.len() {
            if self.kinds[d / 2] != EdgeKind::Virtual {
                deg[vert[d]] += 1;
            }
        }
        deg
    }

    pub(crate) fn face_orbits(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        if self.lone_vertex {
            return (Vec::new(), vec![Vec::new()]);
        }
        let nd = self.sigma.len();
        let mut face_of = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for s in 0..nd {
            if face_of[s] != usize::MAX {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = s;
            loop {
                face_of[d] = faces.len();
                walk.push(d);
                d = self.sigma[d ^ 1];
                if d == s {
                    break;
                }
            }
            faces.push(walk);
        }
        (face_of, faces)
    }

    /// Degree of each face, in the order of [`face_orbits`](Self::face_orbits).
    pub(crate) fn face_degrees(&self) -> Vec<usize> {
        if self.lone_vertex {
            return vec![0];
        }
        let nd = self.sigma.len();
        let mut seen = vec![false; nd];
        let mut out = Vec::new();
        for s in 0..nd {
            if seen[s] {
                continue;
            }
            let (mut d, mut k) = (s, 0);
            while !seen[d] {
                seen[d] = true;
                k += 1;
                d = self.sigma[d ^ 1];
            }
            out.push(k);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.lone_vertex || self.sigma.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.sigma.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for n in [d ^ 1, self.sigma[d]] {
                if !seen[n] {
                    seen[n] = true;
                    count += 1;
                    stack.push(n);
                }
            }
        }
        count == self.sigma.len()
    }

    /// Vertices on a boundary or marked side.
    pub fn boundary_vertices(&self) -> BTreeSet<usize> {
        let (vert, _) = self.vertices();
        (0..self.sigma.len())
            .filter(|&d| self.kinds[d / 2] != EdgeKind::Interior)
            .map(|d| vert[d])
            .collect()
    }

    /// Vertices touching a marked (virtual) side.
    pub fn marked_vertices(&self) -> BTreeSet<usize> {
        let (vert, _) = self.vertices();
        (0..self.sigma.len())
            .filter(|&d| self.kinds[d / 2] == EdgeKind::Virtual)
            .map(|d| vert[d])
            .collect()
    }

    /// Add an edge from corner `c1` to corner `c2` (each given by the dart
    /// preceding the corner). Returns the new edge id.
    pub fn add_edge(&mut self, c1: usize, c2: usize, kind: EdgeKind) -> usize {
        let e = self.kinds.len();
        let (a, b) = (2 * e, 2 * e + 1);
        self.kinds.push(kind);
        self.sigma.push(usize::MAX);
        self.sigma.push(usize::MAX);
        if c1 == c2 {
            self.sigma[b] = self.sigma[c1];
            self.sigma[a] = b;
            self.sigma[c1] = a;
        } else {
            self.sigma[a] = self.sigma[c1];
            self.sigma[c1] = a;
            self.sigma[b] = self.sigma[c2];
            self.sigma[c2] = b;
        }
        e
    }

    /// Attach a new leaf in corner `c` (or to the lone vertex). Returns the edge id.
    pub fn add_pendant(&mut self, c: Option<usize>) -> usize {
        let e = self.kinds.len();
        let (a, b) = (2 * e, 2 * e + 1);
        self.kinds.push(EdgeKind::Interior);
        self.sigma.push(usize::MAX);
        self.sigma.push(b);
        match c {
            Some(c) => {
                self.sigma[a] = self.sigma[c];
                self.sigma[c] = a;
            }
            None => {
                debug_assert!(self.lone_vertex);
                self.lone_vertex = false;
                self.sigma[a] = a;
            }
        }
        e
    }

    /// Split edge `e` with a new vertex of valence two. Dart `2e + 1` moves
    /// to the new vertex; the new edge's second dart takes its old place.
    pub fn subdivide(&mut self, e: usize) -> usize {
        let f = self.kinds.len();
        let q = 2 * e + 1;
        let (x, y) = (2 * f, 2 * f + 1);
        self.kinds.push(self.kinds[e]);
        self.sigma.push(usize::MAX);
        self.sigma.push(usize::MAX);
        if self.sigma[q] == q {
            self.sigma[y] = y;
        } else {
            let mut pred = q;
            while self.sigma[pred] != q {
                pred = self.sigma[pred];
            }
            self.sigma[pred] = y;
            self.sigma[y] = self.sigma[q];
        }
        self.sigma[q] = x;
        self.sigma[x] = q;
        f
    }

    /// Remove the given edges, renumbering the rest in order.
    pub fn remove_edges(&self, edges: &BTreeSet<usize>) -> EmbeddedGraph {
        let keep: Vec<usize> = (0..self.kinds.len()).filter(|e| !edges.contains(e)).collect();
        let mut new_edge = vec![usize::MAX; self.kinds.len()];
        for (i, &e) in keep.iter().enumerate() {
            new_edge[e] = i;
        }
        let map = |d: usize| 2 * new_edge[d / 2] + (d & 1);
        let rotations: Vec<Vec<usize>> = self
            .rotations()
            .into_iter()
            .map(|rot| {
                rot.into_iter()
                    .filter(|d| !edges.contains(&(d / 2)))
                    .map(map)
                    .collect::<Vec<_>>()
            })
            .filter(|r| !r.is_empty())
            .collect();
        let kinds: Vec<EdgeKind> = keep.iter().map(|&e| self.kinds[e]).collect();
        if kinds.is_empty() {
            return EmbeddedGraph::lone_vertex(self.context);
        }
        let mut g = EmbeddedGraph::from_dart_rotations(self.context, &rotations, kinds).expect("sub-rotation");
        // an outer face survives through any dart of it that survives
        let (face_of, faces) = self.face_orbits();
        for &o in &self.outer {
            if let Some(&d) = faces[face_of[o]].iter().find(|d| !edges.contains(&(*d / 2))) {
                g.outer.push(map(d));
            }
        }
        g
    }

    /// Reflection: reverse every rotation.
    pub fn mirror(&self) -> EmbeddedGraph {
        let mut sigma = vec![0; self.sigma.len()];
        for (d, &s) in self.sigma.iter().enumerate() {
            sigma[s] = d;
        }
        // faces of the mirror are the images under d -> d ^ 1 of the old faces
        EmbeddedGraph {
            context: self.context,
            sigma,
            kinds: self.kinds.clone(),
            lone_vertex: self.lone_vertex,
            outer: self.outer.iter().map(|&d| d ^ 1).collect(),
            exceptional: self.exceptional.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = GraphJson {
            context: self.context,
            vertices: self.rotations().into_iter().map(|rot| VertexJson { rot }).collect(),
            pairing: (0..self.kinds.len()).map(|e| [2 * e, 2 * e + 1]).collect(),
            boundary: (0..self.kinds.len())
                .filter(|&e| self.kinds[e] == EdgeKind::Boundary)
                .collect(),
            marks: MarksJson {
                virtual_edges: (0..self.kinds.len())
                    .filter(|&e| self.kinds[e] == EdgeKind::Virtual)
                    .collect(),
                outer: self.outer.clone(),
                exceptional: self.exceptional.iter().copied().collect(),
            },
        };
        serde_json::to_value(j).expect("graph json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, GraphError> {
        let j: GraphJson = serde_json::from_value(v.clone()).map_err(|e| GraphError::Malformed(e.to_string()))?;
        let ne = j.pairing.len();
        if ne == 0 {
            return Ok(Self::lone_vertex(j.context));
        }
        if j.pairing.iter().enumerate().any(|(e, p)| *p != [2 * e, 2 * e + 1]) {
            return Err(GraphError::Malformed("pairing must be [2e, 2e+1]".into()));
        }
        let mut kinds = vec![EdgeKind::Interior; ne];
        for &e in &j.boundary {
            *kinds
                .get_mut(e)
                .ok_or_else(|| GraphError::Malformed(format!("edge {e}")))? = EdgeKind::Boundary;
        }
        for &e in &j.marks.virtual_edges {
            *kinds
                .get_mut(e)
                .ok_or_else(|| GraphError::Malformed(format!("edge {e}")))? = EdgeKind::Virtual;
        }
        let rotations: Vec<Vec<usize>> = j.vertices.into_iter().map(|v| v.rot).collect();
        let mut g = Self::from_dart_rotations(j.context, &rotations, kinds)?;
        if j.marks.outer.iter().any(|&d| d >= g.dart_count()) {
            return Err(GraphError::Malformed("outer dart out of range".into()));
        }
        g.outer = j.marks.outer;
        g.exceptional = j.marks.exceptional.into_iter().collect();
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let (vert, n) = self.vertices();
        let mut s = String::from("graph G {\n");
        for v in 0..n {
            let _ = writeln!(s, "  v{v};");
        }
        for e in 0..self.kinds.len() {
            let style = match self.kinds[e] {
                EdgeKind::Interior => "",
                EdgeKind::Boundary => " [style=bold]",
                EdgeKind::Virtual => " [style=dashed]",
            };
            let _ = writeln!(s, "  v{} -- v{}{style};", vert[2 * e], vert[2 * e + 1]);
        }
        s.push_str("}\n");
        s
    }
}

/// Faces, outer-face flags and the genus of the capped surface, checked
/// against the graph's context.
///
/// Torus graphs are only accepted when cellular (genus 1 after the face
/// walk); a non-cellular torus graph reports its rotation-system genus.
pub fn faces_and_genus(g: &EmbeddedGraph) -> Result<FaceInfo, GraphError> {
    let info = face_info(g);
    let expected = g.context.capped_genus();
    if info.genus != expected as i64 {
        return Err(GraphError::ContextMismatch {
            context: g.context,
            expected,
            found: info.genus,
        });
    }
    Ok(info)
}

pub(crate) fn face_info(g: &EmbeddedGraph) -> FaceInfo {
    let (face_of, faces) = g.face_orbits();
    let mut outer = vec![false; faces.len()];
    for &o in &g.outer {
        outer[face_of[o]] = true;
    }
    let v = g.vertex_count() as i64;
    let e = g.total_edges() as i64;
    let f = faces.len() as i64;
    let genus = (2 - v + e - f) / 2;
    FaceInfo {
        faces,
        face_of,
        outer,
        genus,
    }
}
