//! Link diagrams as 4-valent combinatorial maps.
//!
//! A diagram is given in PD notation: each crossing is a token `X[a,b,c,d]`
//! listing the labels of the four incident edges counterclockwise, starting
//! from the incoming understrand. Slot `k` of crossing `x` is the dart
//! `4 * x + k`; the rotation at a crossing is `k -> k + 1 (mod 4)` and the
//! edge involution pairs the two darts carrying the same label.
//!
//! Faces are the orbits of `d -> rot(partner(d))`. The dart `4x + k` sits in
//! the corner between slots `k - 1` and `k` of crossing `x`, so the faces on
//! opposite corners of a crossing are `face(4x + k)` and `face(4x + k + 2)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("no crossings in input")]
    Empty,
    #[error("malformed token {index}: {reason}")]
    Malformed { index: usize, reason: String },
    #[error("label {label} appears {count} times (expected exactly 2)")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("label {label} is missing: labels must be exactly 1..={max}")]
    MissingLabel { label: u32, max: u32 },
    #[error("diagram is disconnected ({pieces} pieces)")]
    Disconnected { pieces: usize },
    #[error("operation produced a degenerate diagram: {0}")]
    Degenerate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Blue => f.write_str("blue"),
            Color::Red => f.write_str("red"),
        }
    }
}

/// A corner of a face: the angle at `crossing` between slots `slot - 1` and `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Corner {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub corners: Vec<Corner>,
    pub degree: usize,
    pub color: Option<Color>,
}

impl Face {
    pub fn is_bigon(&self) -> bool {
        self.degree == 2
    }

    pub fn is_monogon(&self) -> bool {
        self.degree == 1
    }
}

/// Face colouring indexed like [`PlanarDiagram::faces`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, face: usize) -> Color {
        self.0[face]
    }

    pub fn count(&self, color: Color) -> usize {
        self.0.iter().filter(|&&c| c == color).count()
    }

    pub fn swapped(&self) -> Coloring {
        Coloring(self.0.iter().map(|c| c.opposite()).collect())
    }
}

/// Validated, connected link diagram. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    partner: Vec<usize>,
    face_of: Vec<usize>,
    face_darts: Vec<Vec<usize>>,
}

#[inline]
pub(crate) fn rot(d: usize) -> usize {
    (d & !3) | ((d + 1) & 3)
}

#[inline]
pub(crate) fn opposite_slot(d: usize) -> usize {
    (d & !3) | ((d + 2) & 3)
}

fn pairing(crossings: &[[u32; 4]]) -> Result<Vec<usize>, DiagramError> {
    let mut seen: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (k, &label) in c.iter().enumerate() {
            seen.entry(label).or_default().push(4 * x + k);
        }
    }
    for (&label, darts) in &seen {
        if darts.len() != 2 {
            return Err(DiagramError::LabelMultiplicity {
                label,
                count: darts.len(),
            });
        }
    }
    let max = 2 * crossings.len() as u32;
    for label in 1..=max {
        if !seen.contains_key(&label) {
            return Err(DiagramError::MissingLabel { label, max });
        }
    }
    let mut partner = vec![0; 4 * crossings.len()];
    for darts in seen.values() {
        partner[darts[0]] = darts[1];
        partner[darts[1]] = darts[0];
    }
    Ok(partner)
}

fn face_walk(partner: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut face_of = vec![usize::MAX; partner.len()];
    let mut faces = Vec::new();
    for start in 0..partner.len() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            darts.push(d);
            d = rot(partner[d]);
            if d == start {
                break;
            }
        }
        faces.push(darts);
    }
    (face_of, faces)
}

fn crossing_pieces(n: usize, partner: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for d in 0..partner.len() {
        let (a, b) = (find(&mut parent, d / 4), find(&mut parent, partner[d] / 4));
        if a != b {
            parent[a] = b;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

impl PlanarDiagram {
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let partner = pairing(&crossings)?;
        let pieces = crossing_pieces(crossings.len(), &partner);
        if pieces != 1 {
            return Err(DiagramError::Disconnected { pieces });
        }
        let (face_of, face_darts) = face_walk(&partner);
        Ok(PlanarDiagram {
            crossings,
            partner,
            face_of,
            face_darts,
        })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_darts.len()
    }

    pub fn dart_count(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, dart: usize) -> usize {
        self.partner[dart]
    }

    pub fn label(&self, dart: usize) -> u32 {
        self.crossings[dart / 4][dart % 4]
    }

    /// Face in the corner between slots `k - 1` and `k` of the dart's crossing.
    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    pub fn face_darts(&self, face: usize) -> &[usize] {
        &self.face_darts[face]
    }

    pub fn face_degree(&self, face: usize) -> usize {
        self.face_darts[face].len()
    }

    /// The two darts carrying `label`, smaller first.
    pub fn darts_of_label(&self, label: u32) -> Option<(usize, usize)> {
        let d = (0..self.partner.len()).find(|&d| self.label(d) == label)?;
        let p = self.partner[d];
        Some((d.min(p), d.max(p)))
    }

    /// The two faces on either side of the edge through `dart`.
    pub fn edge_faces(&self, dart: usize) -> (usize, usize) {
        (self.face_of[dart], self.face_of[self.partner[dart]])
    }

    /// Labels of all edges, sorted.
    pub fn labels(&self) -> Vec<u32> {
        (1..=self.edge_count() as u32).collect()
    }

    /// Link components as label sequences in the direction of travel.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let orient = self.edge_heads();
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() {
            // start from a tail dart so the walk follows the orientation
            if seen[start] || orient[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                seen[self.partner[d]] = true;
                comp.push(self.label(d));
                d = opposite_slot(self.partner[d]);
                if d == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// For each dart, whether the edge *enters* the crossing there.
    ///
    /// Understrands run from slot 0 to slot 2. Components made only of
    /// overpasses are oriented so that their least dart is a tail.
    pub(crate) fn edge_heads(&self) -> Vec<bool> {
        let n = self.partner.len();
        let mut head: Vec<Option<bool>> = vec![None; n];
        let walk = |head: &mut Vec<Option<bool>>, start_tail: usize| {
            let mut d = start_tail;
            loop {
                if head[d].is_some() {
                    break;
                }
                head[d] = Some(false);
                let p = self.partner[d];
                head[p] = Some(true);
                d = opposite_slot(p);
            }
        };
        for x in 0..self.crossings.len() {
            walk(&mut head, 4 * x + 2);
        }
        for d in 0..n {
            if head[d].is_none() {
                walk(&mut head, d);
            }
        }
        head.into_iter().map(|h| h.unwrap_or(false)).collect()
    }

    /// Slot (1 or 3) at which the overstrand enters each crossing.
    pub fn over_in_slots(&self) -> Vec<usize> {
        let heads = self.edge_heads();
        (0..self.crossings.len())
            .map(|x| if heads[4 * x + 1] { 1 } else { 3 })
            .collect()
    }

    /// +1 when the overstrand runs from slot 3 to slot 1, otherwise -1.
    pub fn crossing_sign(&self, x: usize) -> i8 {
        if self.edge_heads()[4 * x + 3] {
            1
        } else {
            -1
        }
    }

    pub fn to_pd_string(&self) -> String {
        let tokens: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c[0], c[1], c[2], c[3]))
            .collect();
        format!("PD[{}]", tokens.join(", "))
    }

    pub fn to_json(&self) -> DiagramJson {
        let over = self.over_in_slots();
        let col = checkerboard(self);
        DiagramJson {
            crossings: self
                .crossings
                .iter()
                .zip(over)
                .map(|(slots, over)| CrossingJson { slots: *slots, over })
                .collect(),
            faces: faces(self),
            coloring: col.0,
        }
    }

    /// DOT export of the face adjacency graph, one edge per diagram edge.
    pub fn face_graph_dot(&self) -> String {
        let col = checkerboard(self);
        let mut out = String::from("graph faces {\n");
        for f in 0..self.face_count() {
            out.push_str(&format!(
                "  f{f} [label=\"f{f} (deg {})\", color={}];\n",
                self.face_degree(f),
                col.color(f)
            ));
        }
        for d in 0..self.partner.len() {
            if d < self.partner[d] {
                let (a, b) = self.edge_faces(d);
                out.push_str(&format!("  f{a} -- f{b} [label=\"{}\"];\n", self.label(d)));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub slots: [u32; 4],
    pub over: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<CrossingJson>,
    pub faces: Vec<Face>,
    pub coloring: Vec<Color>,
}

/// Parse the crossing tokens without any validation beyond syntax.
pub fn parse_pd_tokens(text: &str) -> Result<Vec<[u32; 4]>, DiagramError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD") {
        let rest = rest.trim_start();
        body = rest
            .strip_prefix('[')
            .and_then(|r| r.trim_end().strip_suffix(']'))
            .ok_or(DiagramError::Malformed {
                index: 0,
                reason: "unbalanced PD[...] wrapper".into(),
            })?;
    }
    let mut out = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let index = out.len();
        let malformed = |reason: &str| DiagramError::Malformed {
            index,
            reason: reason.to_string(),
        };
        let r = rest.strip_prefix('X').ok_or_else(|| malformed("expected X[a,b,c,d]"))?;
        let r = r
            .trim_start()
            .strip_prefix('[')
            .ok_or_else(|| malformed("expected '['"))?;
        let close = r.find(']').ok_or_else(|| malformed("missing ']'"))?;
        let labels: Vec<&str> = r[..close].split(',').map(str::trim).collect();
        if labels.len() != 4 {
            return Err(malformed(&format!("expected 4 labels, found {}", labels.len())));
        }
        let mut slots = [0u32; 4];
        for (k, s) in labels.iter().enumerate() {
            slots[k] = s.parse().map_err(|_| malformed(&format!("bad label {s:?}")))?;
        }
        out.push(slots);
        rest = &r[close + 1..];
    }
    Ok(out)
}

pub fn parse_pd(text: &str) -> Result<PlanarDiagram, DiagramError> {
    PlanarDiagram::from_crossings(parse_pd_tokens(text)?)
}

pub fn faces(d: &PlanarDiagram) -> Vec<Face> {
    let col = checkerboard(d);
    d.face_darts
        .iter()
        .enumerate()
        .map(|(i, darts)| Face {
            corners: darts
                .iter()
                .map(|&x| Corner {
                    crossing: x / 4,
                    slot: x % 4,
                })
                .collect(),
            degree: darts.len(),
            color: Some(col.color(i)),
        })
        .collect()
}

/// Proper 2-colouring of the faces across edges.
///
/// Normalisation: take the least edge label and its dart at slot 0 if it has
/// one, else its smaller dart; the face whose walk traverses the edge from
/// that dart is blue.
pub fn checkerboard(d: &PlanarDiagram) -> Coloring {
    let nf = d.face_count();
    let mut color: Vec<Option<Color>> = vec![None; nf];
    let (a, b) = d.darts_of_label(1).expect("label 1 exists");
    let root_dart = if b % 4 == 0 { b } else { a };
    let root = d.face_of(root_dart);
    color[root] = Some(Color::Blue);
    let mut stack = vec![root];
    while let Some(f) = stack.pop() {
        let c = color[f].unwrap();
        for &dart in d.face_darts(f) {
            let g = d.face_of(d.partner(dart));
            match color[g] {
                None => {
                    color[g] = Some(c.opposite());
                    stack.push(g);
                }
                Some(existing) => debug_assert_ne!(existing, c, "face graph not bipartite"),
            }
        }
    }
    Coloring(color.into_iter().map(|c| c.expect("connected face graph")).collect())
}

/// True iff every edge joins an under slot (0 or 2) to an over slot (1 or 3).
pub fn is_alternating(d: &PlanarDiagram) -> bool {
    (0..d.dart_count()).all(|x| (x % 2) != (d.partner(x) % 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub crossings: usize,
    pub edges: usize,
    pub faces: Option<usize>,
    pub genus: Option<i64>,
    pub components: Option<usize>,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Structural report for raw crossing tokens; failures become entries.
pub fn validate(crossings: &[[u32; 4]]) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.into(),
            passed,
            detail,
        })
    };
    let n = crossings.len();
    let mut report = ValidationReport {
        crossings: n,
        edges: 2 * n,
        faces: None,
        genus: None,
        components: None,
        checks: Vec::new(),
    };
    if n == 0 {
        push("nonempty", false, "no crossings".into());
        report.checks = checks;
        return report;
    }
    push("nonempty", true, format!("{n} crossings"));
    push("four_valent", true, "every crossing has 4 slots".into());
    let partner = match pairing(crossings) {
        Ok(p) => {
            push("pairing", true, "every label appears exactly twice".into());
            p
        }
        Err(e) => {
            push("pairing", false, e.to_string());
            report.checks = checks;
            return report;
        }
    };
    let pieces = crossing_pieces(n, &partner);
    push("connected", pieces == 1, format!("{pieces} connected piece(s)"));
    let (_, face_darts) = face_walk(&partner);
    let f = face_darts.len() as i64;
    let euler = (2 * pieces as i64) - n as i64 + 2 * n as i64 - f;
    // genus summed over connected pieces
    let genus = euler / 2;
    report.faces = Some(face_darts.len());
    report.genus = Some(genus);
    push(
        "genus_zero",
        genus == 0,
        format!("V={n} E={} F={f} genus={genus}", 2 * n),
    );
    let alternating = (0..partner.len()).all(|x| x % 2 != partner[x] % 2);
    push(
        "alternating",
        alternating,
        if alternating {
            "alternating".into()
        } else {
            "some edge joins two under or two over slots".into()
        },
    );
    if pieces == 1 && genus == 0 {
        if let Ok(d) = PlanarDiagram::from_crossings(crossings.to_vec()) {
            report.components = Some(d.component_count());
        }
    }
    report.checks = checks;
    report
}

/// Build a diagram from a shadow: per crossing the four *edge ids* in
/// counterclockwise order. Over/under data is chosen so the diagram is
/// alternating, strands are oriented by walking them, every crossing is
/// rotated so slot 0 is the incoming understrand, and edges are relabelled
/// 1..2n in order of travel along the components.
pub fn from_shadow(shadow: &[[usize; 4]]) -> Result<PlanarDiagram, DiagramError> {
    let n = shadow.len();
    if n == 0 {
        return Err(DiagramError::Empty);
    }
    let mut ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, c) in shadow.iter().enumerate() {
        for (k, &e) in c.iter().enumerate() {
            ends.entry(e).or_default().push(4 * x + k);
        }
    }
    let mut partner = vec![usize::MAX; 4 * n];
    for (&e, ds) in &ends {
        if ds.len() != 2 {
            return Err(DiagramError::LabelMultiplicity {
                label: e as u32,
                count: ds.len(),
            });
        }
        partner[ds[0]] = ds[1];
        partner[ds[1]] = ds[0];
    }
    if crossing_pieces(n, &partner) != 1 {
        return Err(DiagramError::Disconnected {
            pieces: crossing_pieces(n, &partner),
        });
    }
    // shift[x] = 0: positions 0/2 are under; 1: positions 1/3 are under.
    let mut shift: Vec<Option<usize>> = vec![None; n];
    shift[0] = Some(0);
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let sx = shift[x].unwrap();
        for k in 0..4 {
            let d = 4 * x + k;
            let p = partner[d];
            let y = p / 4;
            // d is under iff (k + sx) even; p must have the other parity
            let under_d = (k + sx) % 2 == 0;
            let need = if under_d { (p % 4 + 1) % 2 } else { (p % 4) % 2 };
            match shift[y] {
                None => {
                    shift[y] = Some(need);
                    stack.push(y);
                }
                Some(s) if s != need => {
                    return Err(DiagramError::Degenerate(
                        "shadow admits no alternating assignment".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    let shift: Vec<usize> = shift.into_iter().map(|s| s.unwrap()).collect();
    // position of each slot after rotating so under pair is at 0/2
    let is_under = |d: usize| (d % 4 + shift[d / 4]) % 2 == 0;
    // orient: walk from every under dart not yet oriented
    let mut head: Vec<Option<bool>> = vec![None; 4 * n];
    let mut order: Vec<usize> = Vec::new(); // tail darts in travel order
    let mut starts: Vec<usize> = (0..4 * n).filter(|&d| is_under(d)).collect();
    starts.extend((0..4 * n).filter(|&d| !is_under(d)));
    for s in starts {
        if head[s].is_some() {
            continue;
        }
        let mut d = s;
        while head[d].is_none() {
            head[d] = Some(false);
            head[partner[d]] = Some(true);
            order.push(d);
            d = opposite_slot(partner[d]);
        }
    }
    let mut label = vec![0u32; 4 * n];
    for (i, &d) in order.iter().enumerate() {
        label[d] = i as u32 + 1;
        label[partner[d]] = i as u32 + 1;
    }
    let mut crossings = Vec::with_capacity(n);
    for x in 0..n {
        let under_in = (0..4)
            .map(|k| 4 * x + k)
            .find(|&d| is_under(d) && head[d] == Some(true))
            .unwrap();
        let r = under_in % 4;
        crossings.push([0, 1, 2, 3].map(|k| label[4 * x + (r + k) % 4]));
    }
    PlanarDiagram::from_crossings(crossings)
}

/// Relabel a diagram's edges to 1..2n preserving the relative order of labels.
pub(crate) fn compact_labels(crossings: &mut [[u32; 4]]) {
    let set: BTreeSet<u32> = crossings.iter().flatten().copied().collect();
    let map: BTreeMap<u32, u32> = set.into_iter().enumerate().map(|(i, l)| (l, i as u32 + 1)).collect();
    for c in crossings.iter_mut() {
        for l in c.iter_mut() {
            *l = map[l];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    pub const FIGURE8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
    pub const HOPF: &str = "X[1,4,2,3] X[3,2,4,1]";

    fn degrees(d: &PlanarDiagram) -> Vec<usize> {
        let mut v: Vec<usize> = (0..d.face_count()).map(|f| d.face_degree(f)).collect();
        v.sort();
        v
    }

    #[test]
    fn parses_wrapped_and_comma_separated() {
        let a = parse_pd(TREFOIL).unwrap();
        let b = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.crossing_count(), 3);
        assert_eq!(a.component_count(), 1);
    }

    #[test]
    fn hopf_has_two_components() {
        let d = parse_pd(HOPF).unwrap();
        assert_eq!(d.crossing_count(), 2);
        let mut comps = d.components();
        for c in comps.iter_mut() {
            c.sort();
        }
        comps.sort();
        assert_eq!(comps, vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn kink_parses_as_one_crossing() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(degrees(&d), vec![1, 1, 2]);
        assert!(is_alternating(&d));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert!(matches!(parse_pd("X[1,2,3]"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(parse_pd("Y[1,2,3,4]"), Err(DiagramError::Malformed { .. })));
        assert!(matches!(
            parse_pd("X[1,1,1,2] X[2,3,4,3]"),
            Err(DiagramError::LabelMultiplicity { label: 1, count: 3 })
        ));
        assert!(matches!(
            parse_pd("X[1,2,2,5]"),
            Err(DiagramError::LabelMultiplicity { .. })
        ));
        assert!(matches!(
            parse_pd("X[1,3,3,1]"),
            Err(DiagramError::MissingLabel { label: 2, .. })
        ));
        assert!(matches!(
            parse_pd("X[1,2,2,1] X[3,4,4,3]"),
            Err(DiagramError::Disconnected { pieces: 2 })
        ));
    }

    #[test]
    fn face_census() {
        let t = parse_pd(TREFOIL).unwrap();
        assert_eq!(degrees(&t), vec![2, 2, 2, 3, 3]);
        let f8 = parse_pd(FIGURE8).unwrap();
        assert_eq!(f8.face_count(), 6);
        assert_eq!(degrees(&f8), vec![2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn checkerboard_splits() {
        let t = parse_pd(TREFOIL).unwrap();
        let c = checkerboard(&t);
        let (b, r) = (c.count(Color::Blue), c.count(Color::Red));
        assert_eq!((b.min(r), b.max(r)), (2, 3));
        let f8 = parse_pd(FIGURE8).unwrap();
        let c = checkerboard(&f8);
        assert_eq!((c.count(Color::Blue), c.count(Color::Red)), (3, 3));
        let h = parse_pd(HOPF).unwrap();
        let c = checkerboard(&h);
        assert_eq!((c.count(Color::Blue), c.count(Color::Red)), (2, 2));
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&parse_pd(TREFOIL).unwrap()));
        // rotating the first token by one slot changes that crossing
        let swapped = parse_pd("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(!is_alternating(&swapped));
    }

    #[test]
    fn validation_reports() {
        let t = parse_pd_tokens(TREFOIL).unwrap();
        let r = validate(&t);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.genus, Some(0));
        let torus = validate(&[[1, 2, 1, 2]]);
        assert!(!torus.check("genus_zero").unwrap().passed);
        assert_eq!(torus.genus, Some(1));
        let empty = validate(&[]);
        assert_eq!(empty.checks[0].detail, "no crossings");
        assert!(!empty.passed());
        let split = validate(&[[1, 2, 2, 1], [3, 4, 4, 3]]);
        assert!(!split.check("connected").unwrap().passed);
    }

    #[test]
    fn serialize_round_trip() {
        for s in [TREFOIL, FIGURE8, HOPF] {
            let d = parse_pd(s).unwrap();
            assert_eq!(parse_pd(&d.to_pd_string()).unwrap(), d);
        }
    }

    #[test]
    fn signs_of_trefoil_agree() {
        let t = parse_pd(TREFOIL).unwrap();
        let s: Vec<i8> = (0..3).map(|x| t.crossing_sign(x)).collect();
        assert!(s.iter().all(|&v| v == s[0]));
    }
}
