use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{face_info, EdgeKind, EmbeddedGraph, FaceInfo};

/// A maximal run of bigons, consecutive ones sharing an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigonFamily {
    /// Bigon faces in chain order.
    pub faces: Vec<usize>,
    /// Edges in order across the chain.
    pub edges: Vec<usize>,
    /// The chain closes up (every edge is shared by two of its bigons).
    pub cyclic: bool,
}

impl BigonFamily {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallFaces {
    pub monogons: Vec<usize>,
    pub bigons: Vec<usize>,
    pub triangles: Vec<usize>,
    /// Triangles with exactly one side on a marked side of a square.
    pub tagged_triangles: Vec<usize>,
    pub bigon_families: Vec<BigonFamily>,
    /// Sizes of maximal runs of tagged triangles sharing edges.
    pub tagged_triangle_runs: Vec<usize>,
}

impl SmallFaces {
    pub fn longest_family(&self) -> Option<&BigonFamily> {
        self.bigon_families.iter().max_by_key(|f| f.len())
    }
}

/// Components of `faces` under "shares an edge", each as an ordered chain.
fn chains(info: &FaceInfo, faces: &[usize]) -> Vec<BigonFamily> {
    let set: BTreeSet<usize> = faces.iter().copied().collect();
    let edges_of = |f: usize| -> Vec<usize> {
        let mut es: Vec<usize> = info.faces[f].iter().map(|&d| d / 2).collect();
        es.dedup();
        es
    };
    // edge -> faces of the set on its sides
    let mut sides: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &f in faces {
        for &d in &info.faces[f] {
            let e = d / 2;
            let entry = sides.entry(e).or_default();
            if !entry.contains(&f) {
                entry.push(f);
            }
        }
    }
    let shared = |e: usize| sides.get(&e).map_or(0, |v| v.len()) == 2;
    let mut done = BTreeSet::new();
    let mut out = Vec::new();
    // chains first from their free ends, then whatever is left is cyclic
    let mut starts: Vec<(bool, usize)> = faces
        .iter()
        .map(|&f| (edges_of(f).iter().all(|&e| shared(e)), f))
        .collect();
    starts.sort();
    for (cyclic, start) in starts {
        if done.contains(&start) {
            continue;
        }
        let mut fam = BigonFamily {
            faces: Vec::new(),
            edges: Vec::new(),
            cyclic,
        };
        let first_edge = edges_of(start).into_iter().find(|&e| cyclic || !shared(e)).unwrap();
        fam.edges.push(first_edge);
        let mut f = start;
        let mut came = first_edge;
        loop {
            done.insert(f);
            fam.faces.push(f);
            let es = edges_of(f);
            let Some(&next_edge) = es.iter().find(|&&e| e != came).or(es.first()) else {
                break;
            };
            if next_edge == first_edge && cyclic {
                break;
            }
            fam.edges.push(next_edge);
            let next_face = sides[&next_edge].iter().copied().find(|g| *g != f && set.contains(g));
            match next_face {
                Some(g) if !done.contains(&g) => {
                    f = g;
                    came = next_edge;
                }
                _ => break,
            }
        }
        fam.edges.dedup();
        out.push(fam);
    }
    out
}

pub fn find_small_faces(g: &EmbeddedGraph) -> SmallFaces {
    let info = face_info(g);
    small_faces_with(g, &info)
}

pub(crate) fn small_faces_with(g: &EmbeddedGraph, info: &FaceInfo) -> SmallFaces {
    let mut s = SmallFaces {
        monogons: Vec::new(),
        bigons: Vec::new(),
        triangles: Vec::new(),
        tagged_triangles: Vec::new(),
        bigon_families: Vec::new(),
        tagged_triangle_runs: Vec::new(),
    };
    for f in info.inner_faces() {
        match info.degree(f) {
            1 => s.monogons.push(f),
            2 => s.bigons.push(f),
            3 => {
                s.triangles.push(f);
                let virtual_sides = info.faces[f]
                    .iter()
                    .filter(|&&d| g.kind(d / 2) == EdgeKind::Virtual)
                    .count();
                if virtual_sides == 1 {
                    s.tagged_triangles.push(f);
                }
            }
            _ => {}
        }
    }
    s.bigon_families = chains(info, &s.bigons);
    s.tagged_triangle_runs = tagged_runs(g, info, &s.tagged_triangles);
    s
}

fn tagged_runs(g: &EmbeddedGraph, info: &FaceInfo, tris: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = tris.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut runs = Vec::new();
    for &t in tris {
        if !seen.insert(t) {
            continue;
        }
        let mut size = 0;
        let mut stack = vec![t];
        while let Some(f) = stack.pop() {
            size += 1;
            for &d in &info.faces[f] {
                if g.kind(d / 2) == EdgeKind::Virtual {
                    continue;
                }
                let h = info.face_of[d ^ 1];
                if set.contains(&h) && seen.insert(h) {
                    stack.push(h);
                }
            }
        }
        runs.push(size);
    }
    runs
}

/// Replace every bigon family by a single edge, keeping a boundary edge of
/// the family when there is one.
pub fn collapse_bigon_families(g: &EmbeddedGraph) -> EmbeddedGraph {
    let small = find_small_faces(g);
    let mut drop = BTreeSet::new();
    for fam in &small.bigon_families {
        let keep = fam
            .edges
            .iter()
            .copied()
            .find(|&e| g.kind(e) != EdgeKind::Interior)
            .unwrap_or_else(|| *fam.edges.iter().min().unwrap());
        drop.extend(fam.edges.iter().copied().filter(|&e| e != keep));
    }
    if drop.is_empty() {
        return g.clone();
    }
    g.remove_edges(&drop)
}
