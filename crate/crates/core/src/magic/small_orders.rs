//! Magic labelings for the three orders below the reach of the frame
//! construction.
//!
//! Order 2 reads the labeling straight off homogeneous coordinates, order 3
//! evaluates a quadratic form and its two coordinate rotations, and order 4
//! uses a fixed coordinate frame over the four-element field plus a search
//! for the one auxiliary line that makes the third coordinate injective on
//! the residual collision classes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Plane;
use crate::gf::FieldElement;
use crate::groups::{AbelianGroup, Classification, Labeling};

fn ensure_order(plane: &Plane, expected: usize) -> Result<()> {
    if plane.order() != expected {
        return Err(Error::WrongOrder { expected, got: plane.order() });
    }
    Ok(())
}

/// Reads a prime-field coordinate as an integer.
fn scalar(e: &FieldElement) -> u64 {
    e.coeffs()[0]
}

/// Magic labeling of the order-2 plane over `(Z/2)^3`: each point maps to
/// its homogeneous coordinate bits.  Well defined because the only nonzero
/// scalar is 1, and line-invariant with constant zero because the three
/// points of a line are `a`, `b`, and `a + b`.
pub fn magic_order2(plane: &Arc<Plane>) -> Result<Labeling> {
    ensure_order(plane, 2)?;
    let group = AbelianGroup::power(2, 3)?;
    let values = (0..plane.num_points())
        .map(|p| {
            let c = plane.point_coords(p)?;
            group.element(&[scalar(&c[0]) as i64, scalar(&c[1]) as i64, scalar(&c[2]) as i64])
        })
        .collect::<Result<Vec<_>>>()?;
    Labeling::new(plane.clone(), group, values)
}

/// The quadratic form behind the order-3 labeling, evaluated mod 3.
fn order3_form(x: u64, y: u64, z: u64) -> u64 {
    (x * x + z * z + x * y + 2 * y * z + 2 * x * z) % 3
}

/// Magic labeling of the order-3 plane over `(Z/3)^3`: a quadratic form in
/// the homogeneous coordinates together with its two cyclic coordinate
/// rotations.  Homogeneity of degree 2 makes the value independent of the
/// chosen representative, since both nonzero scalars square to 1 mod 3.
pub fn magic_order3(plane: &Arc<Plane>) -> Result<Labeling> {
    ensure_order(plane, 3)?;
    let group = AbelianGroup::power(3, 3)?;
    let values = (0..plane.num_points())
        .map(|p| {
            let c = plane.point_coords(p)?;
            let (x, y, z) = (scalar(&c[0]), scalar(&c[1]), scalar(&c[2]));
            group.element(&[
                order3_form(x, y, z) as i64,
                order3_form(y, z, x) as i64,
                order3_form(z, x, y) as i64,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Labeling::new(plane.clone(), group, values)
}

/// Result of the order-4 construction: the labeling plus the auxiliary line
/// singled out by the search.
pub struct Order4Magic {
    pub labeling: Labeling,
    pub aux_line: usize,
}

/// The distinguished points and lines of the order-4 coordinate frame.
struct Order4Frame {
    line_x: [usize; 5],
    lines_y: [usize; 4],
    line_z2: usize,
    line_z3: usize,
}

fn order4_frame(plane: &Arc<Plane>) -> Result<Order4Frame> {
    let field = plane.field()?.clone();
    let a = field.enumerate();
    let zero = || a[0].clone();
    let one = || a[1].clone();

    let x = plane.point_by_coords(&[zero(), one(), zero()])?;
    let y = plane.point_by_coords(&[zero(), zero(), one()])?;
    let w_row: Vec<usize> = a
        .iter()
        .map(|ai| plane.point_by_coords(&[one(), zero(), ai.clone()]))
        .collect::<Result<_>>()?;
    let w_col: Vec<usize> = a
        .iter()
        .map(|ai| plane.point_by_coords(&[one(), ai.clone(), zero()]))
        .collect::<Result<_>>()?;
    let z: Vec<usize> = a
        .iter()
        .map(|ai| plane.point_by_coords(&[zero(), one(), ai.clone()]))
        .collect::<Result<_>>()?;

    let mut line_x = [0usize; 5];
    for i in 0..4 {
        line_x[i] = plane.line_through(x, w_row[i])?;
    }
    line_x[4] = plane.line_through(x, y)?;
    let mut lines_y = [0usize; 4];
    for i in 0..4 {
        lines_y[i] = plane.line_through(y, w_col[i])?;
    }
    let w00 = w_row[0];
    Ok(Order4Frame {
        line_x,
        lines_y,
        line_z2: plane.line_through(w00, z[2])?,
        line_z3: plane.line_through(w00, z[3])?,
    })
}

/// The candidate labeling for a given choice of auxiliary line: the first
/// two coordinates are fixed by the frame, the third depends on `aux`.
pub(crate) fn order4_candidate(plane: &Arc<Plane>, aux: usize) -> Result<Labeling> {
    ensure_order(plane, 4)?;
    let frame = order4_frame(plane)?;
    let group = AbelianGroup::power(4, 3)?;

    let mut components = vec![[0u64; 3]; plane.num_points()];
    let mut add = |component: usize, line: usize, coeff: u64| {
        for &p in plane.line_points(line) {
            components[p][component] = (components[p][component] + coeff) % 4;
        }
    };
    for k in 2..=4 {
        add(0, frame.line_x[k], k as u64 - 1);
    }
    for k in 2..=3 {
        add(1, frame.lines_y[k], k as u64 - 1);
    }
    add(1, frame.line_x[4], 3);
    add(2, frame.line_x[0], 3);
    add(2, frame.line_z2, 1);
    add(2, frame.line_z3, 2);
    add(2, aux, 1);

    let values = components
        .iter()
        .map(|c| group.element(&[c[0] as i64, c[1] as i64, c[2] as i64]))
        .collect::<Result<Vec<_>>>()?;
    Labeling::new(plane.clone(), group, values)
}

/// Magic labeling of the order-4 plane over `(Z/4)^3`.
///
/// The first two coordinates follow the same pencil-weighting pattern as the
/// general construction; the third adds weight to the first pencil line, to
/// two joins through `w(0, 0)`, and to one auxiliary line.  No closed-form
/// choice of auxiliary line is taken on trust: all 21 lines are tried, and
/// the construction succeeds only if exactly one of them yields a magic
/// labeling.
pub fn magic_order4(plane: &Arc<Plane>) -> Result<Order4Magic> {
    ensure_order(plane, 4)?;
    let mut matches = Vec::new();
    for aux in 0..plane.num_lines() {
        let labeling = order4_candidate(plane, aux)?;
        if labeling.verify().classification == Classification::Magic {
            matches.push((aux, labeling));
        }
    }
    if matches.len() != 1 {
        return Err(Error::AuxLineSearch { found: matches.len() });
    }
    let (aux_line, labeling) = matches.pop().unwrap();
    Ok(Order4Magic { labeling, aux_line })
}
