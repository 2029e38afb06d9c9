//! Seed diagrams: pretzel links, twist knots, connected sums and a few
//! standard PD codes.

use crate::diagram::{compact_labels, from_shadow, DiagramError, PlanarDiagram};

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const FIVE_TWO: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
pub const HOPF: &str = "X[1,4,2,3] X[3,2,4,1]";

struct Shadow {
    crossings: Vec<[usize; 4]>,
    next_edge: usize,
}

// dart positions inside a vertical twist crossing, counterclockwise
const NW: usize = 0;
const SW: usize = 1;
const SE: usize = 2;
const NE: usize = 3;

impl Shadow {
    fn new(n: usize) -> Self {
        Shadow {
            crossings: vec![[usize::MAX; 4]; n],
            next_edge: 0,
        }
    }

    fn join(&mut self, a: (usize, usize), b: (usize, usize)) {
        let e = self.next_edge;
        self.next_edge += 1;
        self.crossings[a.0][a.1] = e;
        self.crossings[b.0][b.1] = e;
    }
}

/// Alternating diagram of the pretzel link `P(t_1, ..., t_k)` with all
/// tassels twisted the same way. Each `t_i >= 1` and `k >= 2`.
pub fn pretzel(tassels: &[usize]) -> Result<PlanarDiagram, DiagramError> {
    if tassels.len() < 2 || tassels.iter().any(|&t| t == 0) {
        return Err(DiagramError::Degenerate(
            "pretzel needs >= 2 tassels of >= 1 crossing".into(),
        ));
    }
    let n: usize = tassels.iter().sum();
    let mut s = Shadow::new(n);
    let mut first = Vec::new();
    let mut offset = 0;
    for &t in tassels {
        first.push(offset);
        for j in 0..t - 1 {
            let (a, b) = (offset + j, offset + j + 1);
            s.join((a, SW), (b, NW));
            s.join((a, SE), (b, NE));
        }
        offset += t;
    }
    let k = tassels.len();
    let top = |i: usize| first[i];
    let bottom = |i: usize| first[i] + tassels[i] - 1;
    for i in 0..k - 1 {
        s.join((top(i), NE), (top(i + 1), NW));
        s.join((bottom(i), SE), (bottom(i + 1), SW));
    }
    s.join((top(0), NW), (top(k - 1), NE));
    s.join((bottom(0), SW), (bottom(k - 1), SE));
    from_shadow(&s.crossings)
}

/// Twist knot with a clasp and `n` half twists, drawn as `P(1, 1, n)`.
pub fn twist_knot(n: usize) -> Result<PlanarDiagram, DiagramError> {
    pretzel(&[1, 1, n])
}

/// Connected sum obtained by cutting edge `la` of `a` and edge `lb` of `b`
/// and splicing, choosing the reconnection that keeps alternation.
pub fn connected_sum(a: &PlanarDiagram, la: u32, b: &PlanarDiagram, lb: u32) -> Result<PlanarDiagram, DiagramError> {
    let off = a.edge_count() as u32;
    let mut crossings: Vec<[u32; 4]> = a.crossings().to_vec();
    crossings.extend(b.crossings().iter().map(|c| c.map(|l| l + off)));
    let na = a.crossing_count();
    let (p, q) = a
        .darts_of_label(la)
        .ok_or(DiagramError::Degenerate(format!("no label {la}")))?;
    let (r, s) = b
        .darts_of_label(lb)
        .ok_or(DiagramError::Degenerate(format!("no label {lb}")))?;
    let (r, s) = (r + 4 * na, s + 4 * na);
    // new edges p-r and q-s, or p-s and q-r; keep one under and one over end
    let (x, y) = if p % 2 != r % 2 { (r, s) } else { (s, r) };
    let fresh = 2 * (a.edge_count() + b.edge_count()) as u32 + 1;
    crossings[p / 4][p % 4] = la;
    crossings[x / 4][x % 4] = la;
    crossings[q / 4][q % 4] = fresh;
    crossings[y / 4][y % 4] = fresh;
    compact_labels(&mut crossings);
    PlanarDiagram::from_crossings(crossings)
}

/// Named seed diagrams: prime, twist-reduced, alternating and not (2,q)-torus.
pub fn seed_corpus() -> Vec<(String, PlanarDiagram)> {
    let mut out = vec![
        ("4_1".to_string(), crate::diagram::parse_pd(FIGURE_EIGHT).unwrap()),
        ("5_2".to_string(), crate::diagram::parse_pd(FIVE_TWO).unwrap()),
    ];
    for n in 2..=8 {
        out.push((format!("twist_knot({n})"), twist_knot(n).unwrap()));
    }
    let triples: &[&[usize]] = &[
        &[2, 2, 2],
        &[2, 2, 3],
        &[2, 3, 3],
        &[3, 3, 3],
        &[2, 3, 5],
        &[3, 3, 4],
        &[3, 5, 7],
        &[2, 2, 2, 2],
        &[2, 3, 2, 3],
        &[3, 3, 3, 3],
        &[2, 2, 4],
        &[4, 4, 4],
        &[2, 4, 6],
        &[5, 5, 5],
    ];
    for t in triples {
        let name = format!("pretzel{:?}", t);
        out.push((name, pretzel(t).unwrap()));
    }
    out
}
