//! Crossing-circle augmentation and full-twist removal.
//!
//! Crossing circles are kept as records next to the base diagram rather than
//! drawn as four extra crossings. A circle sits around the first bigon of its
//! twist region; its two encircled edges are the two sides of that bigon,
//! traced into whatever edges they became after crossings were removed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::diagram::{checkerboard, compact_labels, opposite_slot, Color, Coloring, DiagramError, PlanarDiagram};
use crate::twist::{is_color_twist_reduced, is_prime, twist_number, twist_regions, TwistError};

/// Thresholds for the injectivity results, indexed by `i`.
pub const INJ_N_TW: [(u8, usize); 2] = [(0, 54), (2, 91)];
/// Thresholds for the arc results, indexed by `i`.
pub const ARC_N_TW: [(u8, usize); 2] = [(0, 72), (2, 121)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    L,
    #[serde(rename = "L_B")]
    LB,
    #[serde(rename = "L_0")]
    L0,
    #[serde(rename = "L_2")]
    L2,
    #[serde(rename = "L_B0")]
    LB0,
    #[serde(rename = "L_B2")]
    LB2,
}

impl Stage {
    pub fn is_reduced(self) -> bool {
        !matches!(self, Stage::L | Stage::LB)
    }

    pub fn is_blue(self) -> bool {
        matches!(self, Stage::LB | Stage::LB0 | Stage::LB2)
    }

    fn reduced(self, i: u8) -> Stage {
        match (self.is_blue(), i) {
            (false, 0) => Stage::L0,
            (false, _) => Stage::L2,
            (true, 0) => Stage::LB0,
            (true, _) => Stage::LB2,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::L => "L",
            Stage::LB => "L_B",
            Stage::L0 => "L_0",
            Stage::L2 => "L_2",
            Stage::LB0 => "L_B0",
            Stage::LB2 => "L_B2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorFilter {
    All,
    Blue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingCircle {
    pub id: usize,
    /// Crossings of the original diagram in chain order.
    pub region: Vec<usize>,
    pub c: usize,
    /// Crossings left after reduction (`c` before).
    pub r: usize,
    pub n_j: usize,
    /// Base crossings left in the region.
    pub associated: Vec<usize>,
    /// Colour of the surface the circle punctures.
    pub color: Color,
    pub sign: i8,
    /// Base edge labels of the two strands passing through the circle.
    pub encircled: [u32; 2],
    pub triangle: bool,
    pub through_bigon: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedDiagram {
    pub stage: Stage,
    pub i: Option<u8>,
    pub n_tw: usize,
    pub base: PlanarDiagram,
    /// Colouring of `base`, aligned with the colouring of the original diagram.
    pub coloring: Coloring,
    pub circles: Vec<CrossingCircle>,
    /// Original crossing id of each base crossing.
    pub provenance: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AugmentError {
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error("augmentation threshold must be at least 1")]
    ZeroThreshold,
    #[error("i must be 0 or 2, got {0}")]
    BadIndex(u8),
    #[error("stage {0} cannot be used here")]
    WrongStage(Stage),
    #[error("no crossing circles")]
    NoCircles,
    #[error("R_tw = {r_tw} is below the bound {bound} for N_tw = {n_tw}, i = {i}")]
    BoundViolated {
        r_tw: usize,
        bound: usize,
        n_tw: usize,
        i: u8,
    },
    #[error("reduction is degenerate: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub fn augment(
    d: &PlanarDiagram,
    col: &Coloring,
    n_tw: usize,
    filter: ColorFilter,
) -> Result<AugmentedDiagram, AugmentError> {
    if n_tw == 0 {
        return Err(AugmentError::ZeroThreshold);
    }
    twist_number(d, col)?;
    let mut circles = Vec::new();
    for region in twist_regions(d, col) {
        let Some(bigon_color) = region.color else { continue };
        if region.c < n_tw {
            continue;
        }
        let color = bigon_color.opposite();
        if filter == ColorFilter::Blue && color != Color::Blue {
            continue;
        }
        let encircled = bigon_labels(d, region.crossings[0], region.crossings[1]);
        circles.push(CrossingCircle {
            id: circles.len(),
            c: region.c,
            r: region.c,
            n_j: 0,
            associated: Vec::new(),
            color,
            sign: region.sign,
            encircled,
            triangle: false,
            through_bigon: false,
            region: region.crossings,
        });
    }
    Ok(AugmentedDiagram {
        stage: if filter == ColorFilter::Blue {
            Stage::LB
        } else {
            Stage::L
        },
        i: None,
        n_tw,
        base: d.clone(),
        coloring: col.clone(),
        circles,
        provenance: (0..d.crossing_count()).collect(),
    })
}

/// Labels of the two edges of a bigon between crossings `x` and `y`.
fn bigon_labels(d: &PlanarDiagram, x: usize, y: usize) -> [u32; 2] {
    for f in 0..d.face_count() {
        let ds = d.face_darts(f);
        if ds.len() == 2 {
            let (a, b) = (ds[0] / 4, ds[1] / 4);
            if (a, b) == (x, y) || (a, b) == (y, x) {
                let mut l = [d.label(ds[0]), d.label(ds[1])];
                l.sort();
                return l;
            }
        }
    }
    unreachable!("consecutive region crossings share a bigon")
}

struct Removal {
    diagram: PlanarDiagram,
    /// Surviving original crossing ids, in new order.
    kept: Vec<usize>,
    /// Old label -> new label.
    labels: BTreeMap<u32, u32>,
}

/// Delete crossings and let each strand run straight through.
fn remove_crossings(d: &PlanarDiagram, removed: &BTreeSet<usize>) -> Result<Removal, AugmentError> {
    let kept: Vec<usize> = (0..d.crossing_count()).filter(|x| !removed.contains(x)).collect();
    if kept.is_empty() {
        return Err(AugmentError::Degenerate("every crossing would be removed".into()));
    }
    let new_id: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut crossings = vec![[0u32; 4]; kept.len()];
    let mut labels: BTreeMap<u32, u32> = BTreeMap::new();
    let mut visited = BTreeSet::new();
    for &x in &kept {
        for dart in 4 * x..4 * x + 4 {
            let mut path = vec![d.label(dart)];
            let mut e = d.partner(dart);
            while removed.contains(&(e / 4)) {
                visited.insert(e);
                let o = opposite_slot(e);
                visited.insert(o);
                path.push(d.label(o));
                e = d.partner(o);
            }
            let label = *path.iter().min().unwrap();
            for l in path {
                labels.insert(l, label);
            }
            crossings[new_id[&x]][dart % 4] = label;
        }
    }
    let loose = removed
        .iter()
        .flat_map(|&x| 4 * x..4 * x + 4)
        .any(|e| !visited.contains(&e));
    if loose {
        return Err(AugmentError::Degenerate(
            "a link component would lose all its crossings".into(),
        ));
    }
    let before: Vec<[u32; 4]> = crossings.clone();
    compact_labels(&mut crossings);
    let mut compact = BTreeMap::new();
    for (a, b) in before.iter().zip(&crossings) {
        for k in 0..4 {
            compact.insert(a[k], b[k]);
        }
    }
    for v in labels.values_mut() {
        *v = compact[v];
    }
    let diagram = PlanarDiagram::from_crossings(crossings)?;
    debug_assert_eq!(
        diagram.face_count(),
        diagram.crossing_count() + 2,
        "removal left a non-planar diagram"
    );
    Ok(Removal { diagram, kept, labels })
}

pub fn reduce_twists(l: &AugmentedDiagram, i: u8) -> Result<AugmentedDiagram, AugmentError> {
    if i != 0 && i != 2 {
        return Err(AugmentError::BadIndex(i));
    }
    if l.stage.is_reduced() {
        return if l.i == Some(i) {
            Ok(l.clone())
        } else {
            Err(AugmentError::WrongStage(l.stage))
        };
    }
    let mut removed = BTreeSet::new();
    let mut plan = Vec::new();
    for circle in &l.circles {
        let r = if circle.c % 2 == 1 { 1 } else { i as usize };
        if r == circle.c {
            // nothing to remove, so no circle is needed
            continue;
        }
        removed.extend(circle.region[r..].iter().copied());
        plan.push((circle, r));
    }
    let Removal { diagram, kept, labels } = if removed.is_empty() {
        Removal {
            diagram: l.base.clone(),
            kept: (0..l.base.crossing_count()).collect(),
            labels: l.base.labels().into_iter().map(|x| (x, x)).collect(),
        }
    } else {
        remove_crossings(&l.base, &removed)?
    };
    let new_id: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(n, &x)| (x, n)).collect();
    let coloring = aligned_coloring(&l.base, &l.coloring, &diagram, kept[0]);
    let circles = plan
        .into_iter()
        .enumerate()
        .map(|(id, (circle, r))| {
            let mut encircled = circle.encircled.map(|x| labels[&x]);
            encircled.sort();
            CrossingCircle {
                id,
                region: circle.region.clone(),
                c: circle.c,
                r,
                n_j: (circle.c - r) / 2,
                associated: circle.region[..r].iter().map(|x| new_id[x]).collect(),
                color: circle.color,
                sign: circle.sign,
                encircled,
                triangle: r == 1,
                through_bigon: r == 2,
            }
        })
        .collect();
    Ok(AugmentedDiagram {
        stage: l.stage.reduced(i),
        i: Some(i),
        n_tw: l.n_tw,
        base: diagram,
        coloring,
        circles,
        provenance: kept.iter().map(|&x| l.provenance[x]).collect(),
    })
}

/// Checkerboard colouring of `new` agreeing with `old` at a surviving crossing.
fn aligned_coloring(old: &PlanarDiagram, old_col: &Coloring, new: &PlanarDiagram, survivor: usize) -> Coloring {
    let col = checkerboard(new);
    let before = old_col.color(old.face_of(4 * survivor));
    // survivors are renumbered in order, and the first survivor becomes crossing 0
    let after = col.color(new.face_of(0));
    if before == after {
        col
    } else {
        col.swapped()
    }
}

pub fn strip_circles(l: &AugmentedDiagram) -> Result<PlanarDiagram, AugmentError> {
    if !l.stage.is_reduced() {
        return Err(AugmentError::WrongStage(l.stage));
    }
    Ok(l.base.clone())
}

/// Smallest number of crossings removed from any encircled region.
pub fn r_tw(l: &AugmentedDiagram) -> Result<usize, AugmentError> {
    let i = match (l.stage.is_reduced(), l.i) {
        (true, Some(i)) => i,
        _ => return Err(AugmentError::WrongStage(l.stage)),
    };
    let r_tw = l
        .circles
        .iter()
        .map(|c| 2 * c.n_j)
        .min()
        .ok_or(AugmentError::NoCircles)?;
    let bound = r_tw_bound(l.n_tw, i);
    if r_tw < bound {
        return Err(AugmentError::BoundViolated {
            r_tw,
            bound,
            n_tw: l.n_tw,
            i,
        });
    }
    Ok(r_tw)
}

/// Guaranteed lower bound on `R_tw` for threshold `n_tw`.
pub fn r_tw_bound(n_tw: usize, i: u8) -> usize {
    if i == 0 {
        2 * (n_tw / 2)
    } else {
        (2 * n_tw.div_ceil(2)).saturating_sub(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureItem {
    pub item: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub stage: Stage,
    pub items: Vec<StructureItem>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &StructureItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn item(&self, name: &str) -> Option<&StructureItem> {
        self.items.iter().find(|i| i.item == name)
    }
}

/// Face of the given colour on either side of the edge with this label.
fn colored_side(d: &PlanarDiagram, col: &Coloring, label: u32, color: Color) -> Option<usize> {
    let (a, _) = d.darts_of_label(label)?;
    let (f, g) = d.edge_faces(a);
    [f, g].into_iter().find(|&h| col.color(h) == color)
}

fn diagonal_check(d: &PlanarDiagram, col: &Coloring, color: Color) -> Option<String> {
    for x in 0..d.crossing_count() {
        for k in 0..2 {
            let (f, g) = (d.face_of(4 * x + k), d.face_of(4 * x + k + 2));
            if f == g && col.color(f) == color {
                return Some(format!("crossing {x}: face {f} on both sides"));
            }
        }
    }
    None
}

pub fn validate_augmented(l: &AugmentedDiagram) -> StructureReport {
    let d = &l.base;
    let col = &l.coloring;
    let mut items = Vec::new();
    let mut push = |item: &str, witness: Option<String>| {
        items.push(StructureItem {
            item: item.into(),
            passed: witness.is_none(),
            witness,
        })
    };

    push("opposite-blue-regions-differ", diagonal_check(d, col, Color::Blue));
    if l.i == Some(2) {
        push("opposite-red-regions-differ", diagonal_check(d, col, Color::Red));
    }

    let mut two_faces = None;
    let mut assoc = None;
    for c in &l.circles {
        let sides: Vec<Option<usize>> = c.encircled.iter().map(|&e| colored_side(d, col, e, c.color)).collect();
        let (Some(f), Some(g)) = (sides[0], sides[1]) else {
            two_faces.get_or_insert(format!("circle {}: encircled edge missing", c.id));
            continue;
        };
        if f == g {
            two_faces.get_or_insert(format!("circle {}: both punctures in face {f}", c.id));
            continue;
        }
        for x in 0..d.crossing_count() {
            let at: BTreeSet<usize> = (4 * x..4 * x + 4).map(|t| d.face_of(t)).collect();
            if at.contains(&f) && at.contains(&g) && !c.associated.contains(&x) {
                assoc.get_or_insert(format!("circle {}: crossing {x} meets faces {f} and {g}", c.id));
            }
        }
    }
    push("circle-meets-two-regions", two_faces);
    push("shared-crossing-is-associated", assoc);

    let cap = l.circles.iter().find_map(|c| {
        let n = c.associated.len();
        let ok = match l.i {
            Some(0) => n <= 1,
            Some(_) => (1..=2).contains(&n),
            None => true,
        };
        (!ok).then(|| format!("circle {}: {n} associated crossings", c.id))
    });
    push("association-cap", cap);

    let torus = (d.crossing_count() == 2 && d.component_count() == 2)
        .then(|| l.circles.iter().find(|c| c.associated.len() == 2))
        .flatten()
        .map(|c| format!("circle {} encircles both crossings of a (2,2)-torus diagram", c.id));
    push("no-22-torus", torus);

    let reduced = is_color_twist_reduced(d, col, Color::Blue)
        .err()
        .map(|w| format!("curve through crossings {:?} in faces {:?}", w.through, w.faces));
    push("blue-twist-reduced", reduced);

    if l.i == Some(2) {
        let prime = is_prime(d)
            .err()
            .map(|w| format!("curve through edges {:?}", w.through));
        push("prime", prime);
    }

    StructureReport { stage: l.stage, items }
}

impl AugmentedDiagram {
    pub fn to_json(&self) -> Value {
        let circles: Vec<Value> = self
            .circles
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "region": c.region,
                    "c": c.c,
                    "r": c.r,
                    "n_j": c.n_j,
                    "associated": c.associated,
                    "color": c.color,
                    "sign": c.sign,
                    "encircled": c.encircled,
                    "flags": {"triangle": c.triangle, "through_bigon": c.through_bigon},
                })
            })
            .collect();
        json!({
            "stage": self.stage,
            "i": self.i,
            "n_tw": self.n_tw,
            "base": self.base.to_json(),
            "circles": circles,
            "provenance": {"base_to_original": self.provenance},
        })
    }
}
