use anyhow::{bail, Result};
use serde_json::{json, Value};
use twistlink_core::{
    augment, checkerboard, checkerboard_surface_report, is_alternating, is_prime, is_twist_reduced,
    punctured_surface_report, r_tw, reduce_twists, twist_number, twist_regions, twisted_surface_report, validate,
    validate_augmented, AugmentError, AugmentedDiagram, Color, ColorFilter, PlanarDiagram, StructureReport,
    SurfaceReport, TwistError,
};

use crate::{SurfaceColor, SurfaceStage};

/// A per-diagram report and whether it found violations.
pub struct Report {
    pub value: Value,
    pub violations: bool,
}

pub fn parse(d: &PlanarDiagram) -> Report {
    let validation = validate(d.crossings());
    Report {
        violations: !validation.passed(),
        value: json!({ "diagram": d.to_json(), "validation": validation }),
    }
}

pub fn analyze(d: &PlanarDiagram) -> Report {
    let validation = validate(d.crossings());
    let mut out = json!({
        "validation": validation,
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "alternating": is_alternating(d),
    });
    if !is_alternating(d) {
        return Report {
            value: out,
            violations: true,
        };
    }
    let col = checkerboard(d);
    let prime = is_prime(d);
    let reduced = is_twist_reduced(d, &col);
    out["prime"] = json!(prime.is_ok());
    out["twist_reduced"] = json!(reduced.is_ok());
    if let Err(w) = &prime {
        out["prime_witness"] = json!(w);
    }
    if let Err(w) = &reduced {
        out["twist_reduced_witness"] = json!(w);
    }
    out["twist_regions"] = json!(twist_regions(d, &col));
    if let Ok(n) = twist_number(d, &col) {
        out["twist_number"] = json!(n);
    }
    Report {
        violations: !(validation.passed() && prime.is_ok() && reduced.is_ok()),
        value: out,
    }
}

fn error_report(err: &AugmentError) -> Report {
    let witness = match err {
        AugmentError::Twist(TwistError::NotPrime(w) | TwistError::NotTwistReduced(w)) => json!(w),
        _ => Value::Null,
    };
    Report {
        value: json!({ "error": err.to_string(), "witness": witness }),
        violations: true,
    }
}

fn filter(blue_only: bool) -> ColorFilter {
    if blue_only {
        ColorFilter::Blue
    } else {
        ColorFilter::All
    }
}

fn stages(
    d: &PlanarDiagram,
    n_tw: usize,
    i: u8,
    blue_only: bool,
) -> Result<(AugmentedDiagram, AugmentedDiagram), AugmentError> {
    let col = checkerboard(d);
    let l = augment(d, &col, n_tw, filter(blue_only))?;
    let li = reduce_twists(&l, i)?;
    Ok((l, li))
}

fn surfaces_of(d: &PlanarDiagram, li: &AugmentedDiagram) -> Vec<SurfaceReport> {
    let col = checkerboard(d);
    let mut out = Vec::new();
    for color in [Color::Blue, Color::Red] {
        out.push(checkerboard_surface_report(d, &col, color));
        out.push(punctured_surface_report(li, color));
        out.push(twisted_surface_report(li, color));
    }
    out
}

/// Report on `L_i` (or `L_{B,i}` with `blue_only`). The structure checks
/// always run on `L_{B,i}`, the stage they are stated for, so they still
/// apply when reducing every region of `L_i` leaves no crossings.
pub fn augment_report(d: &PlanarDiagram, n_tw: usize, i: u8, blue_only: bool) -> Report {
    let blue = match stages(d, n_tw, i, true) {
        Ok((_, lb)) => lb,
        Err(e) => return error_report(&e),
    };
    let structure: StructureReport = validate_augmented(&blue);
    let mut value = json!({
        "n_tw": n_tw,
        "i": i,
        "structure": structure,
    });
    let li = match stages(d, n_tw, i, blue_only) {
        Ok((l, li)) => {
            value["augmented"] = l.to_json();
            value["reduced"] = li.to_json();
            value["degenerate"] = json!(li.circles.is_empty());
            li
        }
        Err(e @ AugmentError::Degenerate(_)) => {
            value["degenerate"] = json!(true);
            value["degenerate_reason"] = json!(e.to_string());
            blue
        }
        Err(e) => return error_report(&e),
    };
    value["r_tw"] = match r_tw(&li) {
        Ok(r) => json!(r),
        Err(e) => json!(e.to_string()),
    };
    value["surfaces"] = json!(surfaces_of(d, &li));
    Report {
        violations: !structure.passed(),
        value,
    }
}

pub fn surface_report(
    d: &PlanarDiagram,
    stage: SurfaceStage,
    color: SurfaceColor,
    params: Option<(usize, u8, bool)>,
) -> Result<Report> {
    let color = match color {
        SurfaceColor::Blue => Color::Blue,
        SurfaceColor::Red => Color::Red,
    };
    if stage == SurfaceStage::Checkerboard {
        let r = checkerboard_surface_report(d, &checkerboard(d), color);
        return Ok(Report {
            value: json!(r),
            violations: false,
        });
    }
    let Some((n_tw, i, blue_only)) = params else {
        bail!("--stage punctured and twisted need --ntw");
    };
    let li = match stages(d, n_tw, i, blue_only) {
        Ok((_, li)) => li,
        Err(e) => return Ok(error_report(&e)),
    };
    let r = if stage == SurfaceStage::Punctured {
        punctured_surface_report(&li, color)
    } else {
        twisted_surface_report(&li, color)
    };
    Ok(Report {
        value: json!(r),
        violations: false,
    })
}
