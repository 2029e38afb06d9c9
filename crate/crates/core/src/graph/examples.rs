//! Small named graphs used by tests, benches and the CLI.

use super::{Context, EmbeddedGraph};

/// Rotation system of a straight-line drawing: neighbours sorted by angle.
pub fn drawn(context: Context, pts: &[(f64, f64)], edges: &[(usize, usize)]) -> EmbeddedGraph {
    let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); pts.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        let ang = |a: usize, b: usize| (pts[b].1 - pts[a].1).atan2(pts[b].0 - pts[a].0);
        around[u].push((ang(u, v), e));
        around[v].push((ang(v, u), e));
    }
    let rotations: Vec<Vec<usize>> = around
        .into_iter()
        .map(|mut a| {
            a.sort_by(|x, y| x.0.total_cmp(&y.0));
            a.into_iter().map(|(_, e)| e).collect()
        })
        .collect();
    EmbeddedGraph::from_rotations(context, &rotations).expect("drawing")
}

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.cos(), r * t.sin())
}

pub fn triangle() -> EmbeddedGraph {
    drawn(
        Context::Sphere,
        &[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)],
        &[(0, 1), (1, 2), (2, 0)],
    )
}

/// Two vertices joined by three parallel edges.
pub fn theta(context: Context) -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(context, &[vec![0, 1, 2], vec![2, 1, 0]]).expect("theta")
}

pub fn octahedron() -> EmbeddedGraph {
    let mut pts: Vec<(f64, f64)> = [90.0, 210.0, 330.0].iter().map(|&a| polar(10.0, a)).collect();
    pts.extend([270.0, 30.0, 150.0].iter().map(|&a| polar(3.0, a)));
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (3, 1),
        (3, 2),
        (4, 2),
        (4, 0),
        (5, 0),
        (5, 1),
    ];
    drawn(Context::Sphere, &pts, &edges)
}

pub fn cube() -> EmbeddedGraph {
    let mut pts: Vec<(f64, f64)> = [45.0, 135.0, 225.0, 315.0].iter().map(|&a| polar(10.0, a)).collect();
    pts.extend([45.0, 135.0, 225.0, 315.0].iter().map(|&a| polar(3.0, a)));
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, 4 + i));
    }
    drawn(Context::Sphere, &pts, &edges)
}

/// Drawn from a triangular face: outer triangle, a hexagon, inner triangle.
pub fn icosahedron() -> EmbeddedGraph {
    let mut pts: Vec<(f64, f64)> = [90.0, 210.0, 330.0].iter().map(|&a| polar(20.0, a)).collect();
    let ring: Vec<f64> = vec![30.0, 90.0, 150.0, 210.0, 270.0, 330.0];
    pts.extend(ring.iter().map(|&a| polar(6.0, a)));
    pts.extend([30.0, 150.0, 270.0].iter().map(|&a| polar(2.0, a)));
    let m = |deg: f64| 3 + ring.iter().position(|&a| a == deg).unwrap();
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (9, 10), (10, 11), (11, 9)];
    for k in 0..6 {
        edges.push((3 + k, 3 + (k + 1) % 6));
    }
    for (o, ms) in [
        (0, [30.0, 90.0, 150.0]),
        (1, [150.0, 210.0, 270.0]),
        (2, [270.0, 330.0, 30.0]),
    ] {
        for a in ms {
            edges.push((o, m(a)));
        }
    }
    for (i, ms) in [
        (9, [330.0, 30.0, 90.0]),
        (10, [90.0, 150.0, 210.0]),
        (11, [210.0, 270.0, 330.0]),
    ] {
        for a in ms {
            edges.push((i, m(a)));
        }
    }
    drawn(Context::Sphere, &pts, &edges)
}

/// Hub joined to every vertex of an `n`-cycle.
pub fn wheel(n: usize) -> EmbeddedGraph {
    let mut pts = vec![(0.0, 0.0)];
    pts.extend((0..n).map(|k| polar(5.0, 360.0 * k as f64 / n as f64)));
    let mut edges = Vec::new();
    for k in 0..n {
        edges.push((1 + k, 1 + (k + 1) % n));
        edges.push((0, 1 + k));
    }
    drawn(Context::Sphere, &pts, &edges)
}

/// Disk bounded by an `n`-cycle with nothing inside.
pub fn boundary_cycle(n: usize) -> EmbeddedGraph {
    if n == 1 {
        return EmbeddedGraph::from_rotations(Context::Disk, &[vec![0, 0]])
            .unwrap()
            .with_boundary(&[0], &[]);
    }
    if n == 2 {
        return EmbeddedGraph::from_rotations(Context::Disk, &[vec![0, 1], vec![1, 0]])
            .unwrap()
            .with_boundary(&[0, 1], &[]);
    }
    let pts: Vec<(f64, f64)> = (0..n).map(|k| polar(5.0, 360.0 * k as f64 / n as f64)).collect();
    let edges: Vec<(usize, usize)> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    let all: Vec<usize> = (0..n).collect();
    drawn(Context::Disk, &pts, &edges).with_boundary(&all, &[])
}

/// Disk bounded by a 4-cycle with one diagonal.
pub fn square_with_chord() -> EmbeddedGraph {
    let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    drawn(Context::Disk, &pts, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).with_boundary(&[0, 1, 2, 3], &[])
}

/// Disk wheel: boundary `n`-cycle and an interior hub of valence `n`.
pub fn disk_wheel(n: usize) -> EmbeddedGraph {
    let g = wheel(n);
    let boundary: Vec<usize> = (0..n).map(|k| 2 * k).collect();
    let mut g = EmbeddedGraph::from_dart_rotations(Context::Disk, &g.rotations(), g.kinds().to_vec()).unwrap();
    g = g.with_boundary(&boundary, &[]);
    g
}

/// Boundary `k`-cycle and a hub joined to every boundary vertex by two
/// parallel edges.
pub fn doubled_spokes(k: usize) -> EmbeddedGraph {
    // edges: c_i = i (b_i -> b_{i+1}), p_i = k + 2i, q_i = k + 2i + 1
    let mut rotations = vec![(0..k).flat_map(|i| [k + 2 * i, k + 2 * i + 1]).collect::<Vec<_>>()];
    for i in 0..k {
        rotations.push(vec![i, k + 2 * i + 1, k + 2 * i, (i + k - 1) % k]);
    }
    let boundary: Vec<usize> = (0..k).collect();
    EmbeddedGraph::from_rotations(Context::Disk, &rotations)
        .unwrap()
        .with_boundary(&boundary, &[])
}

/// Torus grid on an `n x n` lattice with the given edge directions,
/// listed counterclockwise; each direction's opposite must also be listed.
pub fn torus_grid(n: usize, dirs: &[(i64, i64)]) -> EmbeddedGraph {
    let half = dirs.len() / 2;
    let idx = |x: i64, y: i64| (x.rem_euclid(n as i64) * n as i64 + y.rem_euclid(n as i64)) as usize;
    let edge = |v: usize, k: usize| v * half + k;
    let mut rotations = Vec::new();
    for x in 0..n as i64 {
        for y in 0..n as i64 {
            let v = idx(x, y);
            let rot: Vec<usize> = dirs
                .iter()
                .enumerate()
                .map(|(k, &(dx, dy))| {
                    if k < half {
                        edge(v, k)
                    } else {
                        edge(idx(x + dx, y + dy), k - half)
                    }
                })
                .collect();
            rotations.push(rot);
        }
    }
    // the first occurrence of each edge must be at its tail, so build dart rotations directly
    let dart_rot: Vec<Vec<usize>> = rotations
        .iter()
        .map(|rot| {
            rot.iter()
                .enumerate()
                .map(|(k, &e)| if k < half { 2 * e } else { 2 * e + 1 })
                .collect()
        })
        .collect();
    let kinds = vec![super::EdgeKind::Interior; n * n * half];
    EmbeddedGraph::from_dart_rotations(Context::Torus, &dart_rot, kinds).unwrap()
}

/// 6-regular triangulation of the torus on `n x n` vertices.
pub fn triangular_torus(n: usize) -> EmbeddedGraph {
    torus_grid(n, &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
}

/// 4-regular square grid on the torus.
pub fn square_torus(n: usize) -> EmbeddedGraph {
    torus_grid(n, &[(1, 0), (0, 1), (-1, 0), (0, -1)])
}

/// The square `I x I` with only its two boundary sides; the marked sides
/// are virtual.
pub fn bare_square() -> EmbeddedGraph {
    let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    drawn(Context::Square, &pts, &[(0, 1), (1, 2), (2, 3), (3, 0)]).with_boundary(&[1, 3], &[0, 2])
}

/// The square with one chord from the bottom marked side to the top one.
pub fn square_with_crossing_chord() -> EmbeddedGraph {
    let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.0), (0.5, 1.0)];
    let edges = [(0, 4), (4, 1), (1, 2), (2, 5), (5, 3), (3, 0), (4, 5)];
    drawn(Context::Square, &pts, &edges).with_boundary(&[2, 5], &[0, 1, 3, 4])
}

/// The square with a vertical and a horizontal chord meeting at a
/// central vertex of valence 4.
pub fn square_with_cross() -> EmbeddedGraph {
    let pts = [
        (0.0, 0.0),
        (1.0, 0.0),
        (1.0, 1.0),
        (0.0, 1.0),
        (0.5, 0.0),
        (0.5, 1.0),
        (0.5, 0.5),
        (0.0, 0.5),
        (1.0, 0.5),
    ];
    let edges = [
        (0, 4),
        (4, 1),
        (2, 5),
        (5, 3),
        (1, 8),
        (8, 2),
        (3, 7),
        (7, 0),
        (4, 6),
        (6, 5),
        (7, 6),
        (6, 8),
    ];
    drawn(Context::Square, &pts, &edges).with_boundary(&[4, 5, 6, 7], &[0, 1, 2, 3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::faces_and_genus;

    #[test]
    fn polyhedra_shapes() {
        for (g, v, e, f) in [
            (octahedron(), 6, 12, 8),
            (cube(), 8, 12, 6),
            (icosahedron(), 12, 30, 20),
        ] {
            let info = faces_and_genus(&g).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count(), info.faces.len()), (v, e, f));
        }
        assert!(icosahedron().valences().iter().all(|&d| d == 5));
    }

    #[test]
    fn torus_grids() {
        let t = triangular_torus(3);
        let info = faces_and_genus(&t).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count(), info.faces.len()), (9, 27, 18));
        assert!(info.faces.iter().all(|f| f.len() == 3));
        assert!(t.valences().iter().all(|&d| d == 6));
        let s = square_torus(3);
        let info = faces_and_genus(&s).unwrap();
        assert_eq!(info.faces.len(), 9);
        assert!(info.faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn disks_and_squares() {
        for g in [
            boundary_cycle(1),
            boundary_cycle(2),
            boundary_cycle(5),
            disk_wheel(5),
            doubled_spokes(6),
        ] {
            let info = faces_and_genus(&g).unwrap();
            assert_eq!(info.outer.iter().filter(|&&o| o).count(), 1);
        }
        let info = faces_and_genus(&doubled_spokes(6)).unwrap();
        assert_eq!(info.inner_faces().filter(|&f| info.degree(f) == 2).count(), 6);
        for g in [bare_square(), square_with_crossing_chord()] {
            let info = faces_and_genus(&g).unwrap();
            assert_eq!(info.outer.iter().filter(|&&o| o).count(), 1);
            assert!(g.marked_vertices().len() >= 4);
        }
    }
}
