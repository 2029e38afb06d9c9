//! Isomorph-free generation of embedded graphs by canonical parents.
//!
//! Every graph of a class either lies in a small base family or has an
//! interior edge with different faces on its two sides; removing such an
//! edge stays in the class. The canonical one (least invariant, ties broken
//! by the canonical labeling) defines the parent, so a depth-first search
//! that adds chords and keeps a child only when its new edge is the
//! canonical one visits each class once, with no global table. Base
//! families grow the same way by leaves (and, on the torus, by subdividing
//! edges): plane trees on the sphere, boundary cycles with pendant forests
//! on the disk, one-face maps on the torus.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lemmas::{BigonVariant, Lemma};
use super::{Context, EdgeKind, EmbeddedGraph, GraphError, Verdict};

pub const DEFAULT_MAX_EDGES: usize = 14;

/// Configured cap on `max_edges`; `TWISTLINK_MAX_EDGES` overrides the default.
pub fn max_edges_cap() -> usize {
    std::env::var("TWISTLINK_MAX_EDGES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_EDGES)
}

/// Valence floor for interior and boundary vertices, with a number of
/// boundary vertices allowed to fall short.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub interior: usize,
    pub boundary: usize,
    pub max_exceptions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    /// Every face inside the surface has at least this degree: 3 forbids
    /// monogons and bigons, 2 forbids monogons, 1 or 0 allows anything.
    pub min_face_degree: usize,
    pub schedule: Option<Schedule>,
}

impl Constraints {
    pub fn none() -> Self {
        Constraints {
            min_face_degree: 0,
            schedule: None,
        }
    }

    pub fn no_small_faces() -> Self {
        Constraints {
            min_face_degree: 3,
            schedule: None,
        }
    }

    /// Hypotheses of the given lemma.
    pub fn for_lemma(lemma: Lemma) -> Self {
        match lemma {
            Lemma::BigonBound { r_tw, .. } => Constraints {
                min_face_degree: 2,
                schedule: Some(Schedule {
                    interior: r_tw,
                    boundary: r_tw / 2 + 1,
                    max_exceptions: 2,
                }),
            },
            _ => Self::no_small_faces(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: serde_json::Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub lemma: Lemma,
    pub max_edges: usize,
    pub instances_checked: usize,
    pub vacuous: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Instances per edge count, index = edges.
    pub counts_by_edges: Vec<usize>,
    pub runtime_ms: u128,
}

/// Dart marks for the canonical code: edge kind and whether the dart
/// borders a face outside the surface.
fn marks(g: &EmbeddedGraph, face_of: &[usize]) -> Vec<u8> {
    let outer: BTreeSet<usize> = g.outer_darts().iter().map(|&d| face_of[d]).collect();
    (0..g.dart_count())
        .map(|d| {
            let k = match g.kind(d / 2) {
                EdgeKind::Interior => 0,
                EdgeKind::Boundary => 1,
                EdgeKind::Virtual => 2,
            };
            2 * k + outer.contains(&face_of[d]) as u8
        })
        .collect()
}

struct Oriented {
    sigma: Vec<usize>,
    marks: Vec<u8>,
    invariant: Vec<u32>,
}

impl Oriented {
    fn new(g: &EmbeddedGraph) -> Self {
        let (face_of, faces) = g.face_orbits();
        let marks = marks(g, &face_of);
        let (vert, nv) = g.vertices();
        let mut deg = vec![0u32; nv];
        for &v in &vert {
            deg[v] += 1;
        }
        let invariant = (0..g.dart_count())
            .map(|d| (deg[vert[d]] << 16) | ((faces[face_of[d]].len() as u32) << 4) | marks[d] as u32)
            .collect();
        Oriented {
            sigma: g.sigma().to_vec(),
            marks,
            invariant,
        }
    }

    /// Breadth-first code from `root`, compared with `best` as it is
    /// written; stops early once it is known to be larger.
    fn code(&self, root: usize, best: &[u8], buf: &mut Vec<u8>) -> Ordering {
        let n = self.sigma.len();
        let mut label = vec![u8::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        buf.clear();
        let mut state = if best.is_empty() {
            Ordering::Less
        } else {
            Ordering::Equal
        };
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for x in [d ^ 1, self.sigma[d]] {
                if label[x] == u8::MAX {
                    label[x] = order.len() as u8;
                    order.push(x);
                }
            }
            for b in [label[d ^ 1], label[self.sigma[d]], self.marks[d]] {
                if state == Ordering::Equal {
                    state = b.cmp(&best[buf.len()]);
                    if state == Ordering::Greater {
                        return state;
                    }
                }
                buf.push(b);
            }
            i += 1;
        }
        state
    }

    fn labels(&self, root: usize) -> Vec<u8> {
        let n = self.sigma.len();
        let mut label = vec![u8::MAX; n];
        let mut order = vec![root];
        label[root] = 0;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for x in [d ^ 1, self.sigma[d]] {
                if label[x] == u8::MAX {
                    label[x] = order.len() as u8;
                    order.push(x);
                }
            }
            i += 1;
        }
        label
    }
}

/// The least code and every (orientation, root) attaining it; there is one
/// such root per automorphism.
struct Canon {
    code: Vec<u8>,
    sides: Vec<Oriented>,
    optimal: Vec<(usize, usize)>,
}

impl Canon {
    fn new(g: &EmbeddedGraph, reflect: bool) -> Self {
        let mut sides = vec![Oriented::new(g)];
        if reflect {
            sides.push(Oriented::new(&g.mirror()));
        }
        let least = sides.iter().flat_map(|s| s.invariant.iter().copied()).min().unwrap();
        let mut code = Vec::new();
        let mut buf = Vec::new();
        let mut optimal = Vec::new();
        for (i, s) in sides.iter().enumerate() {
            for root in (0..s.sigma.len()).filter(|&d| s.invariant[d] == least) {
                match s.code(root, &code, &mut buf) {
                    Ordering::Less => {
                        std::mem::swap(&mut code, &mut buf);
                        optimal.clear();
                        optimal.push((i, root));
                    }
                    Ordering::Equal => optimal.push((i, root)),
                    Ordering::Greater => {}
                }
            }
        }
        Canon { code, sides, optimal }
    }

    fn automorphisms(&self) -> usize {
        self.optimal.len()
    }

    /// Indices of the items (dart sets) that come first in some canonical
    /// labeling: one automorphism orbit.
    fn first_items(&self, items: &[Vec<usize>]) -> BTreeSet<usize> {
        self.optimal
            .iter()
            .map(|&(side, root)| {
                let label = self.sides[side].labels(root);
                (0..items.len())
                    .min_by_key(|&i| items[i].iter().map(|&d| label[d]).min().unwrap())
                    .unwrap()
            })
            .collect()
    }
}

/// Least code over all roots, and over both orientations when `reflect`.
pub fn canonical_code(g: &EmbeddedGraph, reflect: bool) -> Vec<u8> {
    if g.is_lone_vertex() {
        return vec![u8::MAX];
    }
    Canon::new(g, reflect).code
}

/// Corners of every face: corner `p` of a walk sits before its `p`-th dart.
fn face_corners(g: &EmbeddedGraph, inner_only: bool) -> Vec<Vec<usize>> {
    let (face_of, faces) = g.face_orbits();
    let outer: BTreeSet<usize> = g.outer_darts().iter().map(|&d| face_of[d]).collect();
    faces
        .iter()
        .enumerate()
        .filter(|(f, _)| !(inner_only && outer.contains(f)))
        .map(|(_, w)| (0..w.len()).map(|p| w[(p + w.len() - 1) % w.len()] ^ 1).collect())
        .collect()
}

fn inner_faces_ok(g: &EmbeddedGraph, m: usize) -> bool {
    if m == 0 || g.is_lone_vertex() {
        return true;
    }
    let (face_of, faces) = g.face_orbits();
    let outer: BTreeSet<usize> = g.outer_darts().iter().map(|&d| face_of[d]).collect();
    faces
        .iter()
        .enumerate()
        .all(|(f, w)| outer.contains(&f) || w.len() >= m)
}

/// Per-vertex shortfall against the schedule.
fn deficiencies(g: &EmbeddedGraph, s: &Schedule) -> Vec<(usize, bool)> {
    let boundary = g.boundary_vertices();
    g.valences()
        .iter()
        .enumerate()
        .map(|(v, &d)| {
            let on_boundary = boundary.contains(&v);
            let need = if on_boundary { s.boundary } else { s.interior };
            (need.saturating_sub(d), on_boundary)
        })
        .collect()
}

/// Each further edge adds at most two to the valence sum, and removing the
/// canonical edge or leaf of a graph never raises the shortfall outside the
/// largest boundary ones by more than two, so a graph is hopeless once that
/// shortfall exceeds what the remaining edges can supply.
fn can_still_meet(g: &EmbeddedGraph, s: &Schedule, remaining: usize) -> bool {
    let def = deficiencies(g, s);
    let interior: usize = def.iter().filter(|d| !d.1).map(|d| d.0).sum();
    let mut on_boundary: Vec<usize> = def.iter().filter(|d| d.1).map(|d| d.0).collect();
    on_boundary.sort_unstable_by(|a, b| b.cmp(a));
    interior + on_boundary.iter().skip(s.max_exceptions).sum::<usize>() <= 2 * remaining
}

/// The exceptional vertices when the schedule is met. Only boundary
/// vertices may be exceptions.
fn schedule_exceptions(g: &EmbeddedGraph, s: &Schedule) -> Option<BTreeSet<usize>> {
    let def = deficiencies(g, s);
    if def.iter().any(|d| d.0 > 0 && !d.1) {
        return None;
    }
    let short: BTreeSet<usize> = def
        .iter()
        .enumerate()
        .filter(|(_, d)| d.0 > 0)
        .map(|(v, _)| v)
        .collect();
    (short.len() <= s.max_exceptions).then_some(short)
}

fn cycle(context: Context, n: usize) -> EmbeddedGraph {
    let g = if n == 1 {
        EmbeddedGraph::from_rotations(context, &[vec![0, 0]]).unwrap()
    } else {
        let rotations: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + n - 1) % n]).collect();
        EmbeddedGraph::from_rotations(context, &rotations).unwrap()
    };
    let all: Vec<usize> = (0..n).collect();
    g.with_boundary(&all, &[])
}

/// Local data used to pick canonical parents.
struct Shape {
    vert: Vec<usize>,
    deg: Vec<usize>,
    face_of: Vec<usize>,
    face_deg: Vec<usize>,
}

impl Shape {
    fn new(g: &EmbeddedGraph) -> Self {
        let sigma = g.sigma();
        let n = sigma.len();
        let mut vert = vec![usize::MAX; n];
        let mut deg = Vec::new();
        let mut face_of = vec![usize::MAX; n];
        let mut face_deg = Vec::new();
        for s in 0..n {
            if vert[s] == usize::MAX {
                let (mut d, mut k) = (s, 0);
                loop {
                    vert[d] = deg.len();
                    k += 1;
                    d = sigma[d];
                    if d == s {
                        break;
                    }
                }
                deg.push(k);
            }
            if face_of[s] == usize::MAX {
                let (mut d, mut k) = (s, 0);
                loop {
                    face_of[d] = face_deg.len();
                    k += 1;
                    d = sigma[d ^ 1];
                    if d == s {
                        break;
                    }
                }
                face_deg.push(k);
            }
        }
        Shape {
            vert,
            deg,
            face_of,
            face_deg,
        }
    }

    fn edge_invariant(&self, e: usize) -> u64 {
        let (a, b) = (self.deg[self.vert[2 * e]] as u64, self.deg[self.vert[2 * e + 1]] as u64);
        let (x, y) = (
            self.face_deg[self.face_of[2 * e]] as u64,
            self.face_deg[self.face_of[2 * e + 1]] as u64,
        );
        ((a + b) << 48) | (a.min(b) << 32) | ((x + y) << 16) | x.min(y)
    }
}

/// A chord from vertex `u` to `v` across face `f` (degree `k`, split `j`
/// corners apart) cannot be the canonical edge of the child when an edge
/// that is removable already has a smaller invariant there. Faces other
/// than `f` and all valences away from `u`, `v` are the same in the child.
fn beaten_by_old_edge(shape: &Shape, old: &[(u64, usize)], u: usize, v: usize, f: usize, k: usize, j: usize) -> bool {
    let bump = |w: usize| shape.deg[w] as u64 + (w == u) as u64 + (w == v) as u64;
    let key = |a: u64, b: u64, x: u64, y: u64| ((a + b) << 48) | (a.min(b) << 32) | ((x + y) << 16) | x.min(y);
    let mine = key(bump(u), bump(v), (j + 1) as u64, (k - j + 1) as u64);
    const HIGH: u64 = !0xffff_ffff;
    old.iter().any(|&(_, e)| {
        let (s, t) = (shape.vert[2 * e], shape.vert[2 * e + 1]);
        let (fs, ft) = (shape.face_of[2 * e], shape.face_of[2 * e + 1]);
        let theirs = key(bump(s), bump(t), shape.face_deg[fs] as u64, shape.face_deg[ft] as u64);
        if fs == f || ft == f {
            theirs & HIGH < mine & HIGH
        } else {
            theirs < mine
        }
    })
}

/// Whether `target` is, up to automorphism, the first of `items` (each an
/// invariant and a key); `darts` lists the darts of a key. The canonical
/// form is computed only on ties and is handed back for reuse.
fn is_canonical_choice(
    g: &EmbeddedGraph,
    reflect: bool,
    items: &[(u64, usize)],
    target: usize,
    darts: impl Fn(usize) -> Vec<usize>,
) -> (bool, Option<Canon>) {
    let Some(mine) = items.iter().find(|i| i.1 == target).map(|i| i.0) else {
        return (false, None);
    };
    let least = items.iter().map(|i| i.0).min().unwrap();
    if mine != least {
        return (false, None);
    }
    let tied: Vec<usize> = items.iter().filter(|i| i.0 == least).map(|i| i.1).collect();
    if tied.len() == 1 {
        return (true, None);
    }
    let canon = Canon::new(g, reflect);
    let sets: Vec<Vec<usize>> = tied.iter().map(|&k| darts(k)).collect();
    let firsts = canon.first_items(&sets);
    let pos = tied.iter().position(|&k| k == target).unwrap();
    (firsts.contains(&pos), Some(canon))
}

enum Step {
    Chord(usize),
    Leaf(usize),
    Split(usize),
}

struct Search<'a, F> {
    context: Context,
    max_edges: usize,
    m: usize,
    schedule: Option<Schedule>,
    reflect: bool,
    inner_only: bool,
    visit: &'a F,
}

impl<'a, F: Fn(&EmbeddedGraph) + Sync> Search<'a, F> {
    fn alive(&self, g: &EmbeddedGraph) -> bool {
        self.schedule
            .map_or(true, |s| can_still_meet(g, &s, self.max_edges - g.edge_count()))
    }

    fn emit(&self, g: &EmbeddedGraph) {
        if g.is_lone_vertex() {
            return;
        }
        match &self.schedule {
            None => (self.visit)(g),
            Some(s) => {
                if let Some(exc) = schedule_exceptions(g, s) {
                    let mut g = g.clone();
                    g.exceptional = exc;
                    (self.visit)(&g);
                }
            }
        }
    }

    /// Interior edges with different faces on their two sides: removing one
    /// merges two faces and stays in the class.
    fn removable(&self, g: &EmbeddedGraph, shape: &Shape) -> Vec<(u64, usize)> {
        (0..g.total_edges())
            .filter(|&e| g.kind(e) == EdgeKind::Interior && shape.face_of[2 * e] != shape.face_of[2 * e + 1])
            .map(|e| (shape.edge_invariant(e), e))
            .collect()
    }

    /// Interior edges ending in a vertex of valence one.
    fn leaves(&self, g: &EmbeddedGraph, shape: &Shape) -> Vec<(u64, usize)> {
        (0..g.total_edges())
            .filter(|&e| {
                g.kind(e) == EdgeKind::Interior
                    && (shape.deg[shape.vert[2 * e]] == 1 || shape.deg[shape.vert[2 * e + 1]] == 1)
            })
            .map(|e| (shape.edge_invariant(e), e))
            .collect()
    }

    /// Vertices of valence two on two distinct edges, keyed by a dart.
    fn splits(&self, g: &EmbeddedGraph, shape: &Shape) -> Vec<(u64, usize)> {
        let sigma = g.sigma();
        (0..g.dart_count())
            .filter(|&d| shape.deg[shape.vert[d]] == 2 && d < sigma[d] && d / 2 != sigma[d] / 2)
            .map(|d| {
                let (a, b) = (
                    shape.deg[shape.vert[d ^ 1]] as u64,
                    shape.deg[shape.vert[sigma[d] ^ 1]] as u64,
                );
                (((a + b) << 16) | a.min(b), d)
            })
            .collect()
    }

    /// Accept `h` when `step` undoes its canonical reduction; returns the
    /// canonical form when one was computed.
    fn accept(&self, h: &EmbeddedGraph, step: &Step) -> (bool, Option<Canon>) {
        let shape = Shape::new(h);
        let edge = |e: usize| vec![2 * e, 2 * e + 1];
        match *step {
            Step::Chord(e) => is_canonical_choice(h, self.reflect, &self.removable(h, &shape), e, edge),
            Step::Leaf(e) => is_canonical_choice(h, self.reflect, &self.leaves(h, &shape), e, edge),
            Step::Split(d) => {
                if !self.leaves(h, &shape).is_empty() {
                    return (false, None);
                }
                let sigma = h.sigma();
                let key = d.min(sigma[d]);
                is_canonical_choice(h, self.reflect, &self.splits(h, &shape), key, |k| vec![k, sigma[k]])
            }
        }
    }

    /// Accepted children, one per isomorphism class.
    fn children(&self, g: &EmbeddedGraph, candidates: Vec<(EmbeddedGraph, Step)>) -> Vec<EmbeddedGraph> {
        let symmetric = g.is_lone_vertex() || Canon::new(g, self.reflect).automorphisms() > 1;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (h, step) in candidates {
            if !self.alive(&h) {
                continue;
            }
            let (ok, canon) = self.accept(&h, &step);
            if !ok {
                continue;
            }
            if symmetric {
                let code = canon
                    .map(|c| c.code)
                    .unwrap_or_else(|| canonical_code(&h, self.reflect));
                if !seen.insert(code) {
                    continue;
                }
            }
            out.push(h);
        }
        out
    }

    fn chord_candidates(&self, g: &EmbeddedGraph) -> Vec<(EmbeddedGraph, Step)> {
        if g.is_lone_vertex() {
            if self.m > 1 {
                return Vec::new();
            }
            let h = EmbeddedGraph::from_rotations(g.context(), &[vec![0, 0]]).unwrap();
            return vec![(h, Step::Chord(0))];
        }
        let shape = Shape::new(g);
        let sigma = g.sigma();
        let old = self.removable(g, &shape);
        let mut out = Vec::new();
        for corners in face_corners(g, self.inner_only) {
            let k = corners.len();
            let f = shape.face_of[sigma[corners[0]]];
            for p in 0..k {
                for q in p..k {
                    let j = q - p;
                    if j + 1 < self.m || k - j + 1 < self.m {
                        continue;
                    }
                    let (u, v) = (shape.vert[corners[p]], shape.vert[corners[q]]);
                    if beaten_by_old_edge(&shape, &old, u, v, f, k, j) {
                        continue;
                    }
                    let mut h = g.clone();
                    let e = h.add_edge(corners[p], corners[q], EdgeKind::Interior);
                    out.push((h, Step::Chord(e)));
                }
            }
        }
        out
    }

    fn base_candidates(&self, g: &EmbeddedGraph) -> Vec<(EmbeddedGraph, Step)> {
        if g.is_lone_vertex() {
            let mut h = g.clone();
            let e = h.add_pendant(None);
            return vec![(h, Step::Leaf(e))];
        }
        let mut out = Vec::new();
        for c in face_corners(g, self.inner_only).into_iter().flatten() {
            let mut h = g.clone();
            let e = h.add_pendant(Some(c));
            out.push((h, Step::Leaf(e)));
        }
        if self.context == Context::Torus {
            for e in 0..g.total_edges() {
                let mut h = g.clone();
                let f = h.subdivide(e);
                out.push((h, Step::Split(2 * f)));
            }
        }
        out
    }

    fn each(&self, kids: Vec<EmbeddedGraph>, f: impl Fn(EmbeddedGraph) + Sync + Send) {
        if kids.first().map_or(false, |k| k.edge_count() <= 6) {
            kids.into_par_iter().for_each(f);
        } else {
            kids.into_iter().for_each(f);
        }
    }

    fn class_node(&self, g: EmbeddedGraph) {
        self.emit(&g);
        if g.edge_count() >= self.max_edges {
            return;
        }
        let kids = self.children(&g, self.chord_candidates(&g));
        self.each(kids, |h| self.class_node(h));
    }

    fn base_node(&self, g: EmbeddedGraph) {
        if inner_faces_ok(&g, self.m) {
            self.class_node(g.clone());
        }
        if g.edge_count() >= self.max_edges {
            return;
        }
        let kids = self.children(&g, self.base_candidates(&g));
        self.each(kids, |h| self.base_node(h));
    }
}

/// Call `visit` once per isomorphism class of connected graphs of the
/// context with `1..=max_edges` edges meeting the constraints (reflections
/// identified on the sphere and disk, not on the torus). Schedule
/// exceptions are stored in `exceptional`. Calls may come from several
/// threads.
pub fn for_each_graph<F>(
    context: Context,
    max_edges: usize,
    constraints: &Constraints,
    visit: F,
) -> Result<(), GraphError>
where
    F: Fn(&EmbeddedGraph) + Sync,
{
    let cap = max_edges_cap();
    if max_edges > cap {
        return Err(GraphError::CapExceeded {
            requested: max_edges,
            cap,
        });
    }
    let search = Search {
        context,
        max_edges,
        m: constraints.min_face_degree,
        schedule: constraints.schedule,
        reflect: context != Context::Torus,
        inner_only: context.has_boundary(),
        visit: &visit,
    };
    let roots: Vec<EmbeddedGraph> = match context {
        Context::Sphere => vec![EmbeddedGraph::lone_vertex(Context::Sphere)],
        Context::Disk => (1..=max_edges).map(|n| cycle(Context::Disk, n)).collect(),
        Context::Torus => [vec![vec![0, 1, 0, 1]], vec![vec![0, 1, 2], vec![0, 1, 2]]]
            .iter()
            .map(|r| EmbeddedGraph::from_rotations(Context::Torus, r).unwrap())
            .collect(),
        other => return Err(GraphError::Unsupported(other)),
    };
    roots
        .into_par_iter()
        .filter(|g| g.edge_count() <= max_edges && search.alive(g))
        .for_each(|g| search.base_node(g));
    Ok(())
}

/// All graphs of [`for_each_graph`], sorted by edge count and canonical code.
pub fn enumerate_graphs(
    context: Context,
    max_edges: usize,
    constraints: &Constraints,
) -> Result<Vec<EmbeddedGraph>, GraphError> {
    let found = Mutex::new(Vec::new());
    for_each_graph(context, max_edges, constraints, |g| {
        found.lock().unwrap().push(g.clone())
    })?;
    let reflect = context != Context::Torus;
    let mut keyed: Vec<(usize, Vec<u8>, EmbeddedGraph)> = found
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|g| (g.edge_count(), canonical_code(&g, reflect), g))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|k| k.2).collect())
}

/// Run a lemma checker over every enumerated graph meeting its hypotheses.
pub fn search_counterexamples(lemma: Lemma, max_edges: usize) -> Result<SearchReport, GraphError> {
    if let Lemma::BigonBound {
        variant: BigonVariant::Square,
        ..
    } = lemma
    {
        return Err(GraphError::Unsupported(Context::Square));
    }
    let start = Instant::now();
    let checked = AtomicUsize::new(0);
    let vacuous = AtomicUsize::new(0);
    let counts: Vec<AtomicUsize> = (0..=max_edges).map(|_| AtomicUsize::new(0)).collect();
    let found = Mutex::new(Vec::new());
    for_each_graph(lemma.context(), max_edges, &Constraints::for_lemma(lemma), |g| {
        counts[g.edge_count()].fetch_add(1, AtomicOrdering::Relaxed);
        match lemma.check(g) {
            Verdict::Holds { .. } => {
                checked.fetch_add(1, AtomicOrdering::Relaxed);
            }
            Verdict::Vacuous { .. } => {
                vacuous.fetch_add(1, AtomicOrdering::Relaxed);
            }
            Verdict::Counterexample { detail } => {
                checked.fetch_add(1, AtomicOrdering::Relaxed);
                found.lock().unwrap().push(Counterexample {
                    graph: g.to_json(),
                    detail,
                });
            }
        }
    })?;
    let mut counterexamples = found.into_inner().unwrap();
    counterexamples.sort_by(|a, b| a.graph.to_string().cmp(&b.graph.to_string()));
    Ok(SearchReport {
        lemma,
        max_edges,
        instances_checked: checked.into_inner(),
        vacuous: vacuous.into_inner(),
        counterexamples,
        counts_by_edges: counts.into_iter().map(|c| c.into_inner()).collect(),
        runtime_ms: start.elapsed().as_millis(),
    })
}
