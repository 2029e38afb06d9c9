use proptest::prelude::*;
use twistlink_core::families::pretzel;
use twistlink_core::graph::{double_disk, EdgeKind};
use twistlink_core::{
    augment, checkerboard, checkerboard_surface_report, enumerate_graphs, faces, faces_and_genus, is_alternating,
    punctured_surface_report, reduce_twists, strip_circles, twisted_surface_report, Color, ColorFilter, Constraints,
    Context, EmbeddedGraph,
};

/// Random rotations: the edge ids twice each, shuffled, cut into vertices.
fn rotations() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1usize..7)
        .prop_flat_map(|e| {
            let ends: Vec<usize> = (0..2 * e).map(|d| d / 2).collect();
            (
                Just(ends).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), 2 * e - 1),
            )
        })
        .prop_map(|(ends, cuts)| {
            let mut out = vec![vec![ends[0]]];
            for (k, &x) in ends[1..].iter().enumerate() {
                if cuts[k] {
                    out.push(Vec::new());
                }
                out.last_mut().unwrap().push(x);
            }
            out
        })
}

fn tassels() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(2usize..7, 3..6)
}

/// Face walks straight from the rotation, and the genus they give.
fn walks(g: &EmbeddedGraph) -> (Vec<Vec<usize>>, i64) {
    let sigma = g.sigma();
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for s in 0..sigma.len() {
        let mut w = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            w.push(d);
            d = sigma[d ^ 1];
        }
        if !w.is_empty() {
            out.push(w);
        }
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + out.len() as i64;
    (out, (2 - chi) / 2)
}

/// The graph in the closed surface its rotation lives on, if supported.
fn closed(rot: &[Vec<usize>]) -> Option<EmbeddedGraph> {
    let g = EmbeddedGraph::from_rotations(Context::Sphere, rot).unwrap();
    if !g.is_connected() {
        return None;
    }
    match walks(&g).1 {
        0 => Some(g),
        1 => EmbeddedGraph::from_rotations(Context::Torus, rot).ok(),
        _ => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn faces_partition_the_darts(rot in rotations()) {
        let Some(g) = closed(&rot) else { return Ok(()) };
        let info = faces_and_genus(&g).unwrap();
        let mut hits = vec![0; g.dart_count()];
        for (f, walk) in info.faces.iter().enumerate() {
            for &d in walk {
                hits[d] += 1;
                prop_assert_eq!(info.face_of[d], f);
            }
        }
        prop_assert!(hits.iter().all(|&h| h == 1));
        let (oracle, genus) = walks(&g);
        prop_assert_eq!(info.genus, genus);
        let mut a: Vec<usize> = info.faces.iter().map(Vec::len).collect();
        let mut b: Vec<usize> = oracle.iter().map(Vec::len).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mirror_keeps_face_degrees(rot in rotations()) {
        let Some(g) = closed(&rot) else { return Ok(()) };
        let degrees = |g: &EmbeddedGraph| {
            let mut d: Vec<usize> = faces_and_genus(g).unwrap().faces.iter().map(Vec::len).collect();
            d.sort();
            d
        };
        prop_assert_eq!(degrees(&g), degrees(&g.mirror()));
        let mut v = g.valences();
        let mut w = g.mirror().valences();
        v.sort();
        w.sort();
        prop_assert_eq!(v, w);
    }

    #[test]
    fn checkerboard_alternates_at_crossings(t in tassels()) {
        let d = pretzel(&t).unwrap();
        let fs = faces(&d);
        let blue: usize = fs.iter().filter(|f| f.color == Some(Color::Blue)).map(|f| f.degree).sum();
        let red: usize = fs.iter().filter(|f| f.color == Some(Color::Red)).map(|f| f.degree).sum();
        prop_assert_eq!(blue, 2 * d.crossing_count());
        prop_assert_eq!(red, 2 * d.crossing_count());
    }

    #[test]
    fn checkerboard_euler_identity(t in tassels()) {
        let d = pretzel(&t).unwrap();
        let col = checkerboard(&d);
        let chi_b = checkerboard_surface_report(&d, &col, Color::Blue).chi;
        let chi_r = checkerboard_surface_report(&d, &col, Color::Red).chi;
        prop_assert_eq!(chi_b + chi_r, 2 - d.crossing_count() as i64);
    }

    #[test]
    fn reduction_is_idempotent_and_punctures(t in tassels(), n_tw in 2usize..5, i in prop_oneof![Just(0u8), Just(2u8)]) {
        let d = pretzel(&t).unwrap();
        let col = checkerboard(&d);
        let Ok(l) = augment(&d, &col, n_tw, ColorFilter::All) else { return Ok(()) };
        let Ok(li) = reduce_twists(&l, i) else { return Ok(()) };
        prop_assert_eq!(&reduce_twists(&li, i).unwrap(), &li);
        prop_assert!(li.base.crossing_count() <= d.crossing_count());
        prop_assert!(is_alternating(&strip_circles(&li).unwrap()));
        for c in &li.circles {
            prop_assert_eq!(c.c, c.r + 2 * c.n_j);
            let cap = if i == 0 { 0..=1 } else { 1..=2 };
            prop_assert!(cap.contains(&c.associated.len()));
        }
        for color in [Color::Blue, Color::Red] {
            let base = checkerboard_surface_report(&li.base, &li.coloring, color).chi;
            let punctured = punctured_surface_report(&li, color).chi;
            let k = li.circles.iter().filter(|c| c.color == color).count() as i64;
            prop_assert_eq!(punctured, base - 2 * k);
            prop_assert_eq!(twisted_surface_report(&li, color).chi, punctured);
        }
    }
}

#[test]
fn doubled_disks_are_spheres() {
    for g in enumerate_graphs(Context::Disk, 5, &Constraints::none()).unwrap() {
        let (dbl, origins) = double_disk(&g).unwrap();
        let boundary_edges = (0..g.total_edges())
            .filter(|&e| g.kind(e) == EdgeKind::Boundary)
            .count();
        let interior_edges = g.edge_count() - boundary_edges;
        let on_boundary = g.boundary_vertices().len();
        assert_eq!(dbl.context(), Context::Sphere);
        assert!(dbl.is_connected());
        assert_eq!(faces_and_genus(&dbl).unwrap().genus, 0);
        assert_eq!(dbl.edge_count(), 2 * interior_edges + boundary_edges);
        assert_eq!(dbl.vertex_count(), 2 * g.vertex_count() - on_boundary);
        assert_eq!(origins.len(), dbl.vertex_count());
        assert_eq!(
            origins.iter().filter(|o| o.mirrored).count(),
            g.vertex_count() - on_boundary
        );
    }
}
