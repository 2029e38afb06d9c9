//! Euler characteristic, orientability and boundary bookkeeping for
//! checkerboard surfaces and their punctured and twisted versions.
//!
//! A checkerboard surface is one disk per face of its colour and one
//! half-twisted band per crossing. Twisted surfaces are only described by
//! their attachment ledger; the boundary count after attaching is a
//! convention (each puncture circle becomes an interior gluing curve).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::augment::AugmentedDiagram;
use crate::diagram::{Color, Coloring, PlanarDiagram};
use crate::twist::{twist_regions, TwistRegion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Checkerboard,
    Punctured,
    Twisted,
    Subsurface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attachment {
    Annulus,
    TwoMobiusBands,
}

impl Attachment {
    pub fn for_twists(n_j: usize) -> Attachment {
        if n_j % 2 == 1 {
            Attachment::Annulus
        } else {
            Attachment::TwoMobiusBands
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentRecord {
    pub circle: usize,
    pub n_j: usize,
    pub attachment: Attachment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub kind: SurfaceKind,
    pub color: Color,
    pub chi: i64,
    pub orientable: bool,
    pub boundary_components: usize,
    pub embedded: bool,
    pub ledger: Vec<AttachmentRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("region {0:?} is not a twist region of this diagram")]
    RegionMismatch(Vec<usize>),
}

/// Whether the faces of `color`, joined by one band per crossing, admit an
/// alternating sign (each half twist flips the disk orientation).
fn bands_orientable(d: &PlanarDiagram, col: &Coloring, color: Color) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; d.face_count()];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); d.face_count()];
    for x in 0..d.crossing_count() {
        for k in 0..2 {
            let (f, g) = (d.face_of(4 * x + k), d.face_of(4 * x + k + 2));
            if col.color(f) != color {
                continue;
            }
            if f == g {
                return false;
            }
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    for start in 0..d.face_count() {
        if col.color(start) != color || side[start].is_some() {
            continue;
        }
        side[start] = Some(true);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let s = side[f].unwrap();
            for &g in &adj[f] {
                match side[g] {
                    None => {
                        side[g] = Some(!s);
                        stack.push(g);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn checkerboard_surface_report(d: &PlanarDiagram, col: &Coloring, color: Color) -> SurfaceReport {
    SurfaceReport {
        kind: SurfaceKind::Checkerboard,
        color,
        chi: col.count(color) as i64 - d.crossing_count() as i64,
        orientable: bands_orientable(d, col, color),
        boundary_components: d.component_count(),
        embedded: true,
        ledger: Vec::new(),
    }
}

fn circles_of(l: &AugmentedDiagram, color: Color) -> impl Iterator<Item = &crate::augment::CrossingCircle> {
    l.circles.iter().filter(move |c| c.color == color)
}

pub fn punctured_surface_report(l: &AugmentedDiagram, color: Color) -> SurfaceReport {
    let base = checkerboard_surface_report(&l.base, &l.coloring, color);
    let k = circles_of(l, color).count();
    SurfaceReport {
        kind: SurfaceKind::Punctured,
        chi: base.chi - 2 * k as i64,
        boundary_components: base.boundary_components + 2 * k,
        ..base
    }
}

pub fn twisted_surface_report(l: &AugmentedDiagram, color: Color) -> SurfaceReport {
    let punctured = punctured_surface_report(l, color);
    let ledger: Vec<AttachmentRecord> = circles_of(l, color)
        .map(|c| AttachmentRecord {
            circle: c.id,
            n_j: c.n_j,
            attachment: Attachment::for_twists(c.n_j),
        })
        .collect();
    let k = ledger.len();
    let all_annuli = ledger.iter().all(|a| a.attachment == Attachment::Annulus);
    SurfaceReport {
        kind: SurfaceKind::Twisted,
        boundary_components: punctured.boundary_components - 2 * k,
        embedded: k == 0,
        orientable: punctured.orientable && all_annuli,
        ledger,
        ..punctured
    }
}

/// Euler characteristic of the part of the `color` surface inside a
/// neighbourhood of the twist region: the side carrying the bigons is a
/// disk, the other side is two disks joined by `c` bands.
pub fn twist_region_subsurface(
    d: &PlanarDiagram,
    col: &Coloring,
    region: &TwistRegion,
    color: Color,
) -> Result<i64, SurfaceError> {
    let known = twist_regions(d, col).into_iter().any(|r| {
        let mut a = r.crossings.clone();
        let mut b = region.crossings.clone();
        a.sort();
        b.sort();
        a == b
    });
    if !known {
        return Err(SurfaceError::RegionMismatch(region.crossings.clone()));
    }
    Ok(match region.color {
        Some(bigons) if bigons == color => 1,
        _ => 2 - region.c as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::{augment, reduce_twists, ColorFilter};
    use crate::diagram::{checkerboard, parse_pd};
    use crate::families::{pretzel, FIGURE_EIGHT, FIVE_TWO, HOPF, TREFOIL};

    fn color_with(col: &Coloring, n: usize) -> Color {
        if col.count(Color::Blue) == n {
            Color::Blue
        } else {
            Color::Red
        }
    }

    #[test]
    fn small_knots() {
        let t = parse_pd(TREFOIL).unwrap();
        let col = checkerboard(&t);
        let r = checkerboard_surface_report(&t, &col, color_with(&col, 2));
        assert_eq!((r.chi, r.orientable, r.boundary_components), (-1, true, 1));
        let r = checkerboard_surface_report(&t, &col, color_with(&col, 3));
        assert_eq!((r.chi, r.orientable), (0, false));

        let f8 = parse_pd(FIGURE_EIGHT).unwrap();
        let col = checkerboard(&f8);
        for c in [Color::Blue, Color::Red] {
            let r = checkerboard_surface_report(&f8, &col, c);
            assert_eq!(r.chi, -1);
            assert!(!r.orientable);
        }

        let h = parse_pd(HOPF).unwrap();
        let col = checkerboard(&h);
        let r = checkerboard_surface_report(&h, &col, Color::Blue);
        assert_eq!((r.chi, r.orientable, r.boundary_components), (0, true, 2));
    }

    #[test]
    fn punctured_and_twisted() {
        let k = parse_pd(FIVE_TWO).unwrap();
        let l0 = reduce_twists(&augment(&k, &checkerboard(&k), 3, ColorFilter::All).unwrap(), 0).unwrap();
        let pc = l0.circles[0].color;
        let plain = checkerboard_surface_report(&l0.base, &l0.coloring, pc);
        let p = punctured_surface_report(&l0, pc);
        assert_eq!(p.chi, plain.chi - 2);
        assert_eq!(p.boundary_components, plain.boundary_components + 2);
        let other = punctured_surface_report(&l0, pc.opposite());
        let plain_other = checkerboard_surface_report(&l0.base, &l0.coloring, pc.opposite());
        assert_eq!(
            (other.chi, other.boundary_components),
            (plain_other.chi, plain_other.boundary_components)
        );

        let t = twisted_surface_report(&l0, pc);
        assert_eq!(t.chi, p.chi);
        assert!(!t.embedded);
        assert_eq!(t.ledger.len(), 1);
        assert_eq!(t.ledger[0].attachment, Attachment::Annulus);
        assert_eq!(t.boundary_components, plain.boundary_components);
    }

    #[test]
    fn even_twists_attach_mobius_bands() {
        let d = pretzel(&[8, 3, 5]).unwrap();
        let l0 = reduce_twists(&augment(&d, &checkerboard(&d), 8, ColorFilter::All).unwrap(), 0).unwrap();
        let c = &l0.circles[0];
        assert_eq!(c.n_j, 4);
        let t = twisted_surface_report(&l0, c.color);
        assert_eq!(t.ledger[0].attachment, Attachment::TwoMobiusBands);
        assert!(!t.orientable);
    }

    #[test]
    fn no_circles_means_no_change() {
        let k = parse_pd(FIGURE_EIGHT).unwrap();
        let col = checkerboard(&k);
        let l = reduce_twists(&augment(&k, &col, 5, ColorFilter::All).unwrap(), 2).unwrap();
        for c in [Color::Blue, Color::Red] {
            let mut t = twisted_surface_report(&l, c);
            assert!(t.embedded);
            t.kind = SurfaceKind::Checkerboard;
            assert_eq!(t, checkerboard_surface_report(&k, &col, c));
        }
    }

    #[test]
    fn subsurface_sides() {
        let d = pretzel(&[7, 3, 1]).unwrap();
        let col = checkerboard(&d);
        let regions = twist_regions(&d, &col);
        let seven = regions.iter().find(|r| r.c == 7).unwrap();
        let bigon = seven.color.unwrap();
        assert_eq!(twist_region_subsurface(&d, &col, seven, bigon), Ok(1));
        assert_eq!(twist_region_subsurface(&d, &col, seven, bigon.opposite()), Ok(-5));
        let mut fake = seven.clone();
        fake.crossings.pop();
        assert!(twist_region_subsurface(&d, &col, &fake, bigon).is_err());
    }
}
