//! Brute force over every rotation system on a few edges, grouped into
//! isomorphism classes by trying all relabelings.

use std::collections::BTreeSet;

use twistlink_core::graph::faces_and_genus;
use twistlink_core::{enumerate_graphs, Constraints, Context};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn orbits(n: usize, next: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = next(d);
            }
        }
    }
    count
}

fn connected(sigma: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(d) = stack.pop() {
        for x in [sigma[d], d ^ 1] {
            if !seen[x] {
                seen[x] = true;
                stack.push(x);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Dart relabelings that keep each edge's two darts together.
fn edge_relabelings(e: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in permutations(e) {
        for flips in 0..1usize << e {
            let mut m = vec![0; 2 * e];
            for (i, &j) in p.iter().enumerate() {
                let f = (flips >> i) & 1;
                m[2 * i] = 2 * j + f;
                m[2 * i + 1] = 2 * j + (1 - f);
            }
            out.push(m);
        }
    }
    out
}

fn class_counts(e: usize, genus: i64, reflect: bool) -> usize {
    let n = 2 * e;
    let relabel = edge_relabelings(e);
    let mut classes = BTreeSet::new();
    for sigma in permutations(n) {
        if !connected(&sigma) {
            continue;
        }
        let v = orbits(n, |d| sigma[d]) as i64;
        let f = orbits(n, |d| sigma[d ^ 1]) as i64;
        if v - e as i64 + f != 2 - 2 * genus {
            continue;
        }
        let mut inverse = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            inverse[s] = d;
        }
        let variants = if reflect {
            vec![sigma.clone(), inverse]
        } else {
            vec![sigma.clone()]
        };
        let mut best: Option<Vec<usize>> = None;
        for s in &variants {
            for m in &relabel {
                let mut t = vec![0; n];
                for d in 0..n {
                    t[m[d]] = m[s[d]];
                }
                if best.as_ref().is_none_or(|b| t < *b) {
                    best = Some(t);
                }
            }
        }
        classes.insert(best.unwrap());
    }
    classes.len()
}

fn face_walks(sigma: &[usize]) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        let mut walk = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            walk.push(d);
            d = sigma[d ^ 1];
        }
        if !walk.is_empty() {
            out.push(walk);
        }
    }
    out
}

fn vertex_of(sigma: &[usize]) -> Vec<usize> {
    let mut v = vec![usize::MAX; sigma.len()];
    let mut k = 0;
    for s in 0..sigma.len() {
        if v[s] == usize::MAX {
            let mut d = s;
            while v[d] == usize::MAX {
                v[d] = k;
                d = sigma[d];
            }
            k += 1;
        }
    }
    v
}

fn edge_set(walk: &[usize]) -> BTreeSet<usize> {
    walk.iter().map(|d| d / 2).collect()
}

/// Sphere maps with one face marked as the outside, the face walk being a
/// simple cycle.
fn disk_class_counts(e: usize) -> usize {
    let n = 2 * e;
    let relabel = edge_relabelings(e);
    let mut classes = BTreeSet::new();
    for sigma in permutations(n) {
        if !connected(&sigma) {
            continue;
        }
        let v = orbits(n, |d| sigma[d]) as i64;
        let walks = face_walks(&sigma);
        if v - e as i64 + walks.len() as i64 != 2 {
            continue;
        }
        let vert = vertex_of(&sigma);
        let mut inverse = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            inverse[s] = d;
        }
        let inverse_walks = face_walks(&inverse);
        for w in &walks {
            let simple =
                w.iter().map(|&d| vert[d]).collect::<BTreeSet<_>>().len() == w.len() && edge_set(w).len() == w.len();
            if !simple {
                continue;
            }
            let mut marked: Vec<(&Vec<usize>, &Vec<usize>)> = vec![(&sigma, w)];
            for iw in inverse_walks.iter().filter(|iw| edge_set(iw) == edge_set(w)) {
                marked.push((&inverse, iw));
            }
            let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
            for (s, face) in &marked {
                for m in &relabel {
                    let mut t = vec![0; n];
                    for d in 0..n {
                        t[m[d]] = m[s[d]];
                    }
                    let mut f: Vec<usize> = face.iter().map(|&d| m[d]).collect();
                    f.sort();
                    let key = (t, f);
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
            classes.insert(best.unwrap());
        }
    }
    classes.len()
}

fn enumerated(context: Context, max: usize) -> Vec<usize> {
    let mut counts = vec![0; max + 1];
    for g in enumerate_graphs(context, max, &Constraints::none()).unwrap() {
        counts[g.edge_count()] += 1;
    }
    counts
}

#[test]
fn sphere_classes_match_brute_force() {
    let got = enumerated(Context::Sphere, 4);
    for e in 1..=4 {
        assert_eq!(got[e], class_counts(e, 0, true), "sphere graphs with {e} edges");
    }
}

#[test]
fn disk_classes_match_brute_force() {
    let got = enumerated(Context::Disk, 4);
    for e in 1..=4 {
        assert_eq!(got[e], disk_class_counts(e), "disk graphs with {e} edges");
    }
}

#[test]
fn torus_classes_match_brute_force() {
    let got = enumerated(Context::Torus, 4);
    for e in 1..=4 {
        assert_eq!(got[e], class_counts(e, 1, false), "torus graphs with {e} edges");
    }
}

#[test]
fn enumerated_graphs_have_the_right_genus() {
    for (context, genus) in [(Context::Sphere, 0), (Context::Disk, 0), (Context::Torus, 1)] {
        for g in enumerate_graphs(context, 6, &Constraints::none()).unwrap() {
            assert_eq!(faces_and_genus(&g).unwrap().genus as i64, genus);
        }
    }
}
