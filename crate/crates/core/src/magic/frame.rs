//! Magic labelings over `(Z/n)^3` for planes of order `n >= 5`.
//!
//! The construction fixes a coordinate frame: a point `x`, a second point
//! `y` on a distinguished line through `x`, the grid of intersection points
//! `w(i, j)` carved out by the remaining pencils of `x` and `y`, and a
//! labeling `z(1) .. z(n-1)` of the remaining points on the distinguished
//! line.  Two auxiliary lines, chosen through incidence conditions on the
//! grid, break the symmetry that the first two coordinates cannot see.
//! Every choice made here is deterministic, so rebuilding the frame for the
//! same plane yields identical indices.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Plane;
use crate::groups::{AbelianGroup, Labeling};

/// The incidence frame underlying the `(Z/n)^3` construction.
///
/// Index conventions: `line_x(k)` for `k in 0..=n` are the lines through
/// `x`, with `line_x(n)` the line `xy`; `line_y(k)` for `k in 0..n` are the
/// lines through `y` other than `xy`; `w(i, j)` is the meet of `line_x(i)`
/// and `line_y(j)` for `i, j in 0..n`; `z(k)` for `k in 1..=n-1` are the
/// points of `xy` other than `x` and `y`; `line_z(k)` joins `w(0, 0)` to
/// `z(k)`.
pub struct PlaneFrame {
    plane: Arc<Plane>,
    x: usize,
    y: usize,
    lines_x: Vec<usize>,
    lines_y: Vec<usize>,
    w: Vec<Vec<usize>>,
    z: Vec<usize>,
    lines_z: Vec<usize>,
    j_line: usize,
    j_prime: usize,
    h: usize,
    h_prime: usize,
}

impl PlaneFrame {
    pub fn plane(&self) -> &Arc<Plane> {
        &self.plane
    }

    pub fn order(&self) -> usize {
        self.plane.order()
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    /// Line through `x`, for `k in 0..=n`; `k = n` is the line `xy`.
    pub fn line_x(&self, k: usize) -> usize {
        self.lines_x[k]
    }

    /// Line through `y` other than `xy`, for `k in 0..n`.
    pub fn line_y(&self, k: usize) -> usize {
        self.lines_y[k]
    }

    /// The line joining `x` and `y`.
    pub fn xy_line(&self) -> usize {
        *self.lines_x.last().unwrap()
    }

    /// Meet of `line_x(i)` and `line_y(j)`, for `i, j in 0..n`.
    pub fn w(&self, i: usize, j: usize) -> usize {
        self.w[i][j]
    }

    /// The `k`-th labeled point of the line `xy`, for `k in 1..=n-1`.
    pub fn z(&self, k: usize) -> usize {
        assert!((1..self.order()).contains(&k), "z index {k} out of range");
        self.z[k - 1]
    }

    /// Line joining `w(0, 0)` and `z(k)`, for `k in 1..=n-1`.
    pub fn line_z(&self, k: usize) -> usize {
        assert!((1..self.order()).contains(&k), "z-line index {k} out of range");
        self.lines_z[k - 1]
    }

    /// First auxiliary line: the join of `w(1, 0)` and `z(n-2)`.
    pub fn j_line(&self) -> usize {
        self.j_line
    }

    /// Second auxiliary line: the join of `w(1, 0)` and `z(2)`.
    pub fn j_prime(&self) -> usize {
        self.j_prime
    }

    /// Row index `h >= 2` with `w(h, 1)` off the second auxiliary line.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Column index `h' >= 2` with `w(0, h')` on the first auxiliary line.
    pub fn h_prime(&self) -> usize {
        self.h_prime
    }
}

/// Builds the frame for a plane of order at least 5.
///
/// All choices are canonical: `x` is point 0, the line `xy` is the
/// largest-index line through `x`, `y` is the smallest point on it other
/// than `x`, pencils are taken in ascending line order, and `h` is the
/// smallest admissible row index.  The three forced labels `z(1)`, `z(2)`,
/// `z(n-2)` come from auxiliary intersections; the remaining points of the
/// line `xy` receive the leftover labels in ascending point order.
pub fn build_frame(plane: &Arc<Plane>) -> Result<PlaneFrame> {
    let n = plane.order();
    if n < 5 {
        return Err(Error::OrderTooSmall { got: n, min: 5 });
    }

    let x = 0;
    let lines_x = plane.lines_through_point(x).to_vec();
    if lines_x.len() != n + 1 {
        return Err(Error::FrameDegenerate(format!(
            "point {x} lies on {} lines, expected {}",
            lines_x.len(),
            n + 1
        )));
    }
    let xy_line = *lines_x.last().unwrap();
    let y = plane
        .line_points(xy_line)
        .iter()
        .copied()
        .find(|&p| p != x)
        .ok_or_else(|| Error::FrameDegenerate("distinguished line has a single point".into()))?;

    let lines_y: Vec<usize> = plane
        .lines_through_point(y)
        .iter()
        .copied()
        .filter(|&l| l != xy_line)
        .collect();
    if lines_y.len() != n {
        return Err(Error::FrameDegenerate(format!(
            "point {y} lies on {} lines besides the distinguished one, expected {n}",
            lines_y.len()
        )));
    }

    let mut w = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            w[i][j] = plane.meet(lines_x[i], lines_y[j])?;
        }
    }

    // Forced labels on the distinguished line.
    let diagonal = plane.line_through(w[0][0], w[1][1])?;
    let z2 = plane.meet(diagonal, xy_line)?;
    let j_prime = plane.line_through(w[1][0], z2)?;
    let blocked = plane.meet(j_prime, lines_y[1])?;
    let h = (2..n)
        .find(|&i| w[i][1] != blocked)
        .ok_or_else(|| Error::FrameDegenerate("no admissible row index h".into()))?;
    let z1 = plane.meet(plane.line_through(w[0][0], w[h][1])?, xy_line)?;
    let j_line = plane.line_through(w[1][0], w[h][1])?;
    let zn2 = plane.meet(j_line, xy_line)?;

    for (label, point) in [(1, z1), (2, z2), (n - 2, zn2)] {
        if point == x || point == y {
            return Err(Error::FrameDegenerate(format!(
                "forced label z({label}) landed on x or y"
            )));
        }
    }
    if z1 == z2 || z1 == zn2 || z2 == zn2 {
        return Err(Error::FrameDegenerate("forced labels are not distinct".into()));
    }

    // Remaining labels in ascending point order.
    let mut z = vec![usize::MAX; n - 1];
    z[0] = z1;
    z[1] = z2;
    z[n - 3] = zn2;
    let leftover_labels = (3..=n.saturating_sub(3)).chain([n - 1]);
    let leftover_points = plane
        .line_points(xy_line)
        .iter()
        .copied()
        .filter(|&p| p != x && p != y && p != z1 && p != z2 && p != zn2);
    let mut labels = leftover_labels;
    let mut points = leftover_points;
    loop {
        match (labels.next(), points.next()) {
            (Some(k), Some(p)) => z[k - 1] = p,
            (None, None) => break,
            _ => {
                return Err(Error::FrameDegenerate(
                    "leftover labels and leftover points disagree in number".into(),
                ))
            }
        }
    }

    let mut lines_z = Vec::with_capacity(n - 1);
    for &zk in &z {
        lines_z.push(plane.line_through(w[0][0], zk)?);
    }

    let on_first_line = plane.meet(lines_x[0], j_line)?;
    let h_prime = (0..n)
        .find(|&j| w[0][j] == on_first_line)
        .ok_or_else(|| {
            Error::FrameDegenerate("first auxiliary line misses the first pencil row".into())
        })?;
    if h_prime < 2 {
        return Err(Error::FrameDegenerate(format!(
            "first auxiliary line meets the first pencil row at column {h_prime}"
        )));
    }

    let frame = PlaneFrame {
        plane: plane.clone(),
        x,
        y,
        lines_x,
        lines_y,
        w,
        z,
        lines_z,
        j_line,
        j_prime,
        h,
        h_prime,
    };
    validate_partition(&frame)?;
    Ok(frame)
}

/// The frame must tile the plane: `x`, `y`, the `n x n` grid, and the `n-1`
/// labeled points together hit every point exactly once.
fn validate_partition(frame: &PlaneFrame) -> Result<()> {
    let n = frame.order();
    let mut seen = vec![false; frame.plane.num_points()];
    let mut mark = |p: usize| -> Result<()> {
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::FrameDegenerate(format!("point {p} covered twice by the frame")));
        }
        Ok(())
    };
    mark(frame.x)?;
    mark(frame.y)?;
    for row in &frame.w {
        for &p in row {
            mark(p)?;
        }
    }
    for &p in &frame.z {
        mark(p)?;
    }
    if let Some(missed) = seen.iter().position(|&s| !s) {
        return Err(Error::FrameDegenerate(format!("point {missed} not covered by the frame")));
    }
    debug_assert_eq!(frame.plane.num_points(), n * n + n + 1);
    Ok(())
}

/// Builds the magic labeling over `(Z/n)^3` and returns the frame it came
/// from, so callers can inspect the distinguished points and lines.
pub fn magic_general_with_frame(plane: &Arc<Plane>) -> Result<(Labeling, PlaneFrame)> {
    let frame = build_frame(plane)?;
    let n = frame.order();
    let group = AbelianGroup::power(n as u64, 3)?;

    let mut components = vec![[0u64; 3]; plane.num_points()];
    let mut add = |component: usize, line: usize, coeff: usize| {
        for &p in plane.line_points(line) {
            components[p][component] = (components[p][component] + coeff as u64) % n as u64;
        }
    };

    // First coordinate: weight k-1 on the k-th line through x, k = 1 .. n.
    for k in 1..=n {
        add(0, frame.line_x(k), k - 1);
    }
    // Second coordinate: weight k-1 on the k-th line through y, with the
    // line xy playing the role of index n.
    for k in 1..n {
        add(1, frame.line_y(k), k - 1);
    }
    add(1, frame.xy_line(), n - 1);
    // Third coordinate: weight k-1 on the join of w(0,0) and z(k), plus
    // weight n-1 on the first line through x and weight 2 on the first
    // auxiliary line.
    for k in 1..n {
        add(2, frame.line_z(k), k - 1);
    }
    add(2, frame.line_x(0), n - 1);
    add(2, frame.j_line(), 2);

    let values = components
        .iter()
        .map(|c| group.element(&[c[0] as i64, c[1] as i64, c[2] as i64]))
        .collect::<Result<Vec<_>>>()?;
    let labeling = Labeling::new(plane.clone(), group, values)?;
    Ok((labeling, frame))
}

/// Magic labeling over `(Z/n)^3` for a plane of order `n >= 5`.
pub fn magic_general(plane: &Arc<Plane>) -> Result<Labeling> {
    magic_general_with_frame(plane).map(|(labeling, _)| labeling)
}
