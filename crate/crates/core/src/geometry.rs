//! Projective planes: construction from coordinates, axiom checking, and
//! serialization.
//!
//! The classical plane of order `q` has as points the normalized nonzero
//! triples over GF(q) (first nonzero coordinate scaled to 1) and as lines the
//! same triples read as dual vectors; a point lies on a line when the dot
//! product vanishes.  Points and lines are kept in one canonical order:
//! lexicographic by coordinate, using the field's element order.
//!
//! Planes ingested from JSON or from a 0/1 incidence matrix carry opaque
//! point labels and no coordinates; every combinatorial operation still
//! applies to them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{prime_power, FieldElement, FieldSpec};

/// A finite projective plane presented by its point/line incidences.
#[derive(Clone, Debug)]
pub struct Plane {
    order: usize,
    labels: Vec<String>,
    /// Sorted point indices per line.
    lines: Vec<Vec<usize>>,
    /// Sorted line indices per point.
    pencils: Vec<Vec<usize>>,
    coords: Option<PlaneCoords>,
}

/// Coordinate data carried by planes produced by [`build_plane`].
#[derive(Clone, Debug)]
struct PlaneCoords {
    field: FieldSpec,
    points: Vec<[FieldElement; 3]>,
    duals: Vec<[FieldElement; 3]>,
}

#[derive(Serialize, Deserialize)]
struct PlaneDto {
    order: usize,
    points: Vec<String>,
    lines: Vec<Vec<usize>>,
}

impl Plane {
    /// Assembles a plane from explicit line sets.  Checks structure only
    /// (indices in range, no repeated point within a line); use
    /// [`Plane::validate_axioms`] for the geometry.
    pub fn from_parts(order: usize, labels: Vec<String>, lines: Vec<Vec<usize>>) -> Result<Plane> {
        Plane::assemble(order, labels, lines, None)
    }

    fn assemble(
        order: usize,
        labels: Vec<String>,
        lines: Vec<Vec<usize>>,
        coords: Option<PlaneCoords>,
    ) -> Result<Plane> {
        let count = labels.len();
        let mut sorted_lines = Vec::with_capacity(lines.len());
        for (li, line) in lines.into_iter().enumerate() {
            let mut line = line;
            line.sort_unstable();
            for pair in line.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::PlaneFormat(format!(
                        "line {li} repeats point {}",
                        pair[0]
                    )));
                }
            }
            if let Some(&max) = line.last() {
                if max >= count {
                    return Err(Error::PointOutOfRange { index: max, count });
                }
            }
            sorted_lines.push(line);
        }
        let mut pencils = vec![Vec::new(); count];
        for (li, line) in sorted_lines.iter().enumerate() {
            for &pi in line {
                pencils[pi].push(li);
            }
        }
        Ok(Plane {
            order,
            labels,
            lines: sorted_lines,
            pencils,
            coords,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_points(&self) -> usize {
        self.labels.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn point_label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    /// Sorted indices of the points on a line.
    pub fn line_points(&self, line: usize) -> &[usize] {
        &self.lines[line]
    }

    /// Sorted indices of the lines through a point.
    pub fn lines_through_point(&self, point: usize) -> &[usize] {
        &self.pencils[point]
    }

    pub fn has_coords(&self) -> bool {
        self.coords.is_some()
    }

    pub fn field(&self) -> Result<&FieldSpec> {
        self.coords.as_ref().map(|c| &c.field).ok_or(Error::NoCoordinates)
    }

    pub fn point_coords(&self, point: usize) -> Result<&[FieldElement; 3]> {
        let coords = self.coords.as_ref().ok_or(Error::NoCoordinates)?;
        coords
            .points
            .get(point)
            .ok_or(Error::PointOutOfRange { index: point, count: self.num_points() })
    }

    pub fn line_dual(&self, line: usize) -> Result<&[FieldElement; 3]> {
        let coords = self.coords.as_ref().ok_or(Error::NoCoordinates)?;
        coords
            .duals
            .get(line)
            .ok_or(Error::LineOutOfRange { index: line, count: self.num_lines() })
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point < self.num_points() {
            Ok(())
        } else {
            Err(Error::PointOutOfRange { index: point, count: self.num_points() })
        }
    }

    fn check_line(&self, line: usize) -> Result<()> {
        if line < self.num_lines() {
            Ok(())
        } else {
            Err(Error::LineOutOfRange { index: line, count: self.num_lines() })
        }
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Result<usize> {
        self.check_point(a)?;
        self.check_point(b)?;
        if a == b {
            return Err(Error::SamePoint(a));
        }
        let common = intersect_sorted(&self.pencils[a], &self.pencils[b]);
        match common.as_slice() {
            [line] => Ok(*line),
            _ => Err(Error::JoinNotUnique { a, b, found: common.len() }),
        }
    }

    /// The unique common point of two distinct lines.
    pub fn meet(&self, l: usize, m: usize) -> Result<usize> {
        self.check_line(l)?;
        self.check_line(m)?;
        if l == m {
            return Err(Error::SameLine(l));
        }
        let common = intersect_sorted(&self.lines[l], &self.lines[m]);
        match common.as_slice() {
            [point] => Ok(*point),
            _ => Err(Error::MeetNotUnique { l, m, found: common.len() }),
        }
    }

    /// Index of the point with the given homogeneous coordinates (any
    /// representative).
    pub fn point_by_coords(&self, triple: &[FieldElement; 3]) -> Result<usize> {
        let coords = self.coords.as_ref().ok_or(Error::NoCoordinates)?;
        let normalized = normalize_triple(triple)?;
        let index = canonical_index(&coords.field, &normalized);
        if coords.points.get(index) == Some(&normalized) {
            Ok(index)
        } else {
            Err(Error::NoSuchPoint)
        }
    }

    /// Index of the line whose dual vector is the given triple (any
    /// representative).
    pub fn line_by_dual(&self, triple: &[FieldElement; 3]) -> Result<usize> {
        let coords = self.coords.as_ref().ok_or(Error::NoCoordinates)?;
        let normalized = normalize_triple(triple)?;
        let index = canonical_index(&coords.field, &normalized);
        if coords.duals.get(index) == Some(&normalized) {
            Ok(index)
        } else {
            Err(Error::NoSuchPoint)
        }
    }

    pub fn point_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks the projective plane axioms and the counting facts for the
    /// stored order, reporting every violation found.
    pub fn validate_axioms(&self) -> AxiomReport {
        let n = self.order;
        let points = self.num_points();
        let lines = self.num_lines();
        let expected = n * n + n + 1;
        let mut violations = Vec::new();

        if points != expected || lines != expected {
            violations.push(AxiomViolation::Counts { points, lines, expected });
        }
        for (li, line) in self.lines.iter().enumerate() {
            if line.len() != n + 1 {
                violations.push(AxiomViolation::LineSize {
                    line: li,
                    size: line.len(),
                    expected: n + 1,
                });
            }
        }
        for (pi, pencil) in self.pencils.iter().enumerate() {
            if pencil.len() != n + 1 {
                violations.push(AxiomViolation::PencilSize {
                    point: pi,
                    size: pencil.len(),
                    expected: n + 1,
                });
            }
        }

        // Unique line through every point pair; remember joins for the
        // quadrilateral search.
        let mut joins = vec![None; points * points];
        for a in 0..points {
            for b in a + 1..points {
                let common = intersect_sorted(&self.pencils[a], &self.pencils[b]);
                match common.as_slice() {
                    [] => violations.push(AxiomViolation::PairWithoutLine { a, b }),
                    [line] => {
                        joins[a * points + b] = Some(*line);
                    }
                    many => violations.push(AxiomViolation::PairWithManyLines {
                        a,
                        b,
                        lines: many.to_vec(),
                    }),
                }
            }
        }

        for l in 0..lines {
            for m in l + 1..lines {
                let common = intersect_sorted(&self.lines[l], &self.lines[m]);
                match common.as_slice() {
                    [] => violations.push(AxiomViolation::LinePairWithoutMeet { l, m }),
                    [_] => {}
                    many => violations.push(AxiomViolation::LinePairWithManyMeets {
                        l,
                        m,
                        points: many.to_vec(),
                    }),
                }
            }
        }

        let on_line = |line: usize, p: usize| self.lines[line].binary_search(&p).is_ok();
        let collinear = |a: usize, b: usize, c: usize| match joins[a * points + b] {
            Some(line) => on_line(line, c),
            // A pair on no common line cannot witness collinearity.
            None => false,
        };
        let mut quadrilateral = false;
        'search: for a in 0..points {
            for b in a + 1..points {
                for c in b + 1..points {
                    if collinear(a, b, c) {
                        continue;
                    }
                    for d in c + 1..points {
                        if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                            quadrilateral = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if !quadrilateral {
            violations.push(AxiomViolation::NoQuadrilateral);
        }

        AxiomReport { order: n, points, lines, violations }
    }

    pub fn to_json(&self) -> String {
        let dto = PlaneDto {
            order: self.order,
            points: self.labels.clone(),
            lines: self.lines.clone(),
        };
        let mut out = serde_json::to_string_pretty(&dto).expect("plane serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Plane> {
        let dto: PlaneDto = serde_json::from_str(text)?;
        Plane::from_parts(dto.order, dto.points, dto.lines)
    }

    /// Rows are lines, columns are points, entries separated by single spaces.
    pub fn to_incidence_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let mut row = vec![b'0'; self.num_points()];
            for &p in line {
                row[p] = b'1';
            }
            let cells: Vec<String> = row.iter().map(|&c| (c as char).to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Reads a 0/1 matrix whose rows are lines; the order is derived from the
    /// column count `n^2 + n + 1`.
    pub fn from_incidence_text(text: &str) -> Result<Plane> {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in raw.split_whitespace() {
                match tok {
                    "0" => row.push(0),
                    "1" => row.push(1),
                    other => {
                        return Err(Error::PlaneFormat(format!(
                            "row {}: entry {other:?} is not 0 or 1",
                            lineno + 1
                        )))
                    }
                }
            }
            rows.push(row);
        }
        let Some(first) = rows.first() else {
            return Err(Error::PlaneFormat("no rows".into()));
        };
        let width = first.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::PlaneFormat(format!(
                "row {} has {} entries, expected {width}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let order = order_from_count(width).ok_or_else(|| {
            Error::PlaneFormat(format!("{width} columns do not fit n^2 + n + 1"))
        })?;
        let labels = (0..width).map(|i| format!("p{i}")).collect();
        let lines = rows
            .into_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 1)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Plane::from_parts(order, labels, lines)
    }
}

/// Solves `n^2 + n + 1 = count` for a nonnegative order.
fn order_from_count(count: usize) -> Option<usize> {
    let mut n = 0usize;
    loop {
        let c = n * n + n + 1;
        if c == count {
            return Some(n);
        }
        if c > count {
            return None;
        }
        n += 1;
    }
}

/// Scales a nonzero triple so its first nonzero coordinate is 1.
pub fn normalize_triple(triple: &[FieldElement; 3]) -> Result<[FieldElement; 3]> {
    let lead = triple.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroTriple)?;
    let scale = lead.inv()?;
    Ok([
        triple[0].mul(&scale)?,
        triple[1].mul(&scale)?,
        triple[2].mul(&scale)?,
    ])
}

/// Position of a normalized triple in the canonical enumeration.
fn canonical_index(field: &FieldSpec, t: &[FieldElement; 3]) -> usize {
    let q = field.order() as usize;
    if t[0].is_zero() {
        if t[1].is_zero() {
            0
        } else {
            1 + t[2].index() as usize
        }
    } else {
        1 + q + t[1].index() as usize * q + t[2].index() as usize
    }
}

pub(crate) fn dot3(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    let mut acc = a[0].mul(&b[0]).expect("same field");
    acc = acc.add(&a[1].mul(&b[1]).expect("same field")).expect("same field");
    acc.add(&a[2].mul(&b[2]).expect("same field")).expect("same field")
}

fn format_triple(t: &[FieldElement; 3]) -> String {
    format!("[{}:{}:{}]", t[0], t[1], t[2])
}

/// Builds the plane of order `q = p^k` from homogeneous coordinates.
pub fn build_plane(q: u64) -> Result<Plane> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let field = FieldSpec::new(p, k)?;
    let elems = field.enumerate();
    let zero = field.zero();
    let one = field.one();

    // Normalized triples in lexicographic coordinate order.
    let mut points: Vec<[FieldElement; 3]> = Vec::new();
    points.push([zero.clone(), zero.clone(), one.clone()]);
    for t in &elems {
        points.push([zero.clone(), one.clone(), t.clone()]);
    }
    for s in &elems {
        for t in &elems {
            points.push([one.clone(), s.clone(), t.clone()]);
        }
    }
    let duals = points.clone();

    let mut lines = Vec::with_capacity(duals.len());
    for d in &duals {
        let on: Vec<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, pt)| dot3(d, pt).is_zero())
            .map(|(i, _)| i)
            .collect();
        lines.push(on);
    }

    let labels = points.iter().map(format_triple).collect();
    let coords = PlaneCoords { field, points, duals };
    let plane = Plane::assemble(q as usize, labels, lines, Some(coords))?;
    let report = plane.validate_axioms();
    assert!(
        report.is_valid(),
        "coordinate construction violated the axioms: {report}"
    );
    Ok(plane)
}

/// Outcome of [`Plane::validate_axioms`].
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub order: usize,
    pub points: usize,
    pub lines: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "order {}: {} points, {} lines",
            self.order, self.points, self.lines
        )?;
        if self.violations.is_empty() {
            write!(f, "all axioms hold")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    PairWithoutLine { a: usize, b: usize },
    PairWithManyLines { a: usize, b: usize, lines: Vec<usize> },
    LinePairWithoutMeet { l: usize, m: usize },
    LinePairWithManyMeets { l: usize, m: usize, points: Vec<usize> },
    NoQuadrilateral,
    LineSize { line: usize, size: usize, expected: usize },
    PencilSize { point: usize, size: usize, expected: usize },
    Counts { points: usize, lines: usize, expected: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::PairWithoutLine { a, b } => {
                write!(f, "points {a} and {b} lie on no common line")
            }
            AxiomViolation::PairWithManyLines { a, b, lines } => {
                write!(f, "points {a} and {b} lie on lines {lines:?}")
            }
            AxiomViolation::LinePairWithoutMeet { l, m } => {
                write!(f, "lines {l} and {m} share no point")
            }
            AxiomViolation::LinePairWithManyMeets { l, m, points } => {
                write!(f, "lines {l} and {m} share points {points:?}")
            }
            AxiomViolation::NoQuadrilateral => {
                write!(f, "no four points with no three on a line")
            }
            AxiomViolation::LineSize { line, size, expected } => {
                write!(f, "line {line} has {size} points, expected {expected}")
            }
            AxiomViolation::PencilSize { point, size, expected } => {
                write!(f, "point {point} lies on {size} lines, expected {expected}")
            }
            AxiomViolation::Counts { points, lines, expected } => {
                write!(f, "{points} points and {lines} lines, expected {expected} of each")
            }
        }
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_facts_hold() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let plane = build_plane(q).unwrap();
            let n = q as usize;
            let expected = n * n + n + 1;
            assert_eq!(plane.num_points(), expected);
            assert_eq!(plane.num_lines(), expected);
            for l in 0..plane.num_lines() {
                assert_eq!(plane.line_points(l).len(), n + 1, "line {l} of order {n}");
            }
            for p in 0..plane.num_points() {
                assert_eq!(plane.lines_through_point(p).len(), n + 1);
            }
        }
    }

    #[test]
    fn incidence_counted_both_ways() {
        for q in [2u64, 3, 5] {
            let plane = build_plane(q).unwrap();
            let n = q as usize;
            let flags = (n * n + n + 1) * (n + 1);
            let by_lines: usize = (0..plane.num_lines()).map(|l| plane.line_points(l).len()).sum();
            let by_points: usize =
                (0..plane.num_points()).map(|p| plane.lines_through_point(p).len()).sum();
            assert_eq!(by_lines, flags);
            assert_eq!(by_points, flags);
        }
    }

    #[test]
    fn canonical_point_order_of_fano() {
        let plane = build_plane(2).unwrap();
        let expected = [
            "[0:0:1]", "[0:1:0]", "[0:1:1]", "[1:0:0]", "[1:0:1]", "[1:1:0]", "[1:1:1]",
        ];
        assert_eq!(plane.labels(), &expected);
    }

    #[test]
    fn build_is_deterministic() {
        let a = build_plane(9).unwrap();
        let b = build_plane(9).unwrap();
        assert_eq!(a.labels(), b.labels());
        assert_eq!(a.lines, b.lines);
    }

    #[test]
    fn fano_joins_and_meets() {
        let plane = build_plane(2).unwrap();
        let x = |label: &str| plane.point_by_label(label).unwrap();
        let (x1, x2, x3) = (x("[1:0:0]"), x("[0:1:0]"), x("[0:0:1]"));
        let (x4, x5, x6, x7) = (x("[0:1:1]"), x("[1:0:1]"), x("[1:1:0]"), x("[1:1:1]"));

        let l1 = plane.line_through(x2, x3).unwrap();
        assert_eq!(sorted(plane.line_points(l1)), sorted(&[x2, x3, x4]));
        let l2 = plane.line_through(x1, x3).unwrap();
        assert_eq!(plane.meet(l1, l2).unwrap(), x3);

        let l3 = plane.line_through(x1, x2).unwrap();
        let l4 = plane.line_through(x1, x4).unwrap();
        assert_eq!(sorted(plane.line_points(l4)), sorted(&[x1, x4, x7]));
        assert_eq!(sorted(plane.lines_through_point(x1)), sorted(&[l2, l3, l4]));

        let l5 = plane.line_through(x2, x5).unwrap();
        let l6 = plane.line_through(x3, x6).unwrap();
        assert_eq!(sorted(plane.lines_through_point(x7)), sorted(&[l4, l5, l6]));
    }

    fn sorted(v: &[usize]) -> Vec<usize> {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    }

    #[test]
    fn order_four_line_contents() {
        let plane = build_plane(4).unwrap();
        let a = plane.point_by_label("[0:0:1]").unwrap();
        let b = plane.point_by_label("[1:0:0]").unwrap();
        let line = plane.line_through(a, b).unwrap();
        let labels: Vec<&str> =
            plane.line_points(line).iter().map(|&p| plane.point_label(p)).collect();
        assert_eq!(labels, ["[0:0:1]", "[1:0:0]", "[1:0:1]", "[1:0:a]", "[1:0:a+1]"]);
    }

    #[test]
    fn built_planes_validate() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let report = build_plane(q).unwrap().validate_axioms();
            assert!(report.is_valid(), "order {q}: {report}");
        }
    }

    #[test]
    fn corrupted_line_is_reported() {
        let plane = build_plane(2).unwrap();
        let mut lines = plane.lines.clone();
        lines[0].pop();
        let broken = Plane::from_parts(2, plane.labels.to_vec(), lines).unwrap();
        let report = broken.validate_axioms();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::LineSize { line: 0, size: 2, expected: 3 })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::PairWithoutLine { .. })));
    }

    #[test]
    fn collinear_configuration_has_no_quadrilateral() {
        let labels = (0..7).map(|i| format!("p{i}")).collect();
        let degenerate = Plane::from_parts(2, labels, vec![(0..7).collect()]).unwrap();
        let report = degenerate.validate_axioms();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&AxiomViolation::NoQuadrilateral));
    }

    #[test]
    fn json_round_trip() {
        let plane = build_plane(3).unwrap();
        let text = plane.to_json();
        let back = Plane::from_json(&text).unwrap();
        assert_eq!(back.order(), 3);
        assert_eq!(back.labels(), plane.labels());
        assert_eq!(back.lines, plane.lines);
        assert!(!back.has_coords());
        assert!(back.validate_axioms().is_valid());
    }

    #[test]
    fn incidence_text_round_trip() {
        let plane = build_plane(2).unwrap();
        let text = plane.to_incidence_text();
        let back = Plane::from_incidence_text(&text).unwrap();
        assert_eq!(back.order(), 2);
        assert_eq!(back.lines, plane.lines);
        assert!(back.validate_axioms().is_valid());
    }

    #[test]
    fn incidence_text_rejects_garbage() {
        assert!(matches!(
            Plane::from_incidence_text("0 1 2\n"),
            Err(Error::PlaneFormat(_))
        ));
        assert!(matches!(
            Plane::from_incidence_text("0 1\n0 1 1\n"),
            Err(Error::PlaneFormat(_))
        ));
        // Five columns cannot be n^2 + n + 1.
        assert!(matches!(
            Plane::from_incidence_text("0 1 1 0 0\n"),
            Err(Error::PlaneFormat(_))
        ));
    }

    #[test]
    fn coordinate_lookup_accepts_any_representative() {
        let plane = build_plane(3).unwrap();
        let f = plane.field().unwrap().clone();
        let two = f.from_int(2);
        let rep = [f.zero(), two.clone(), f.one()];
        // [0:2:1] normalizes to [0:1:2].
        let idx = plane.point_by_coords(&rep).unwrap();
        assert_eq!(plane.point_label(idx), "[0:1:2]");
    }

    #[test]
    fn join_and_meet_errors() {
        let plane = build_plane(2).unwrap();
        assert!(matches!(plane.line_through(3, 3), Err(Error::SamePoint(3))));
        assert!(matches!(plane.meet(4, 4), Err(Error::SameLine(4))));
        assert!(matches!(
            plane.line_through(0, 99),
            Err(Error::PointOutOfRange { index: 99, count: 7 })
        ));
        assert!(matches!(build_plane(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(build_plane(33), Err(Error::NotPrimePower(33))));
        assert!(matches!(build_plane(64), Err(Error::FieldTooLarge { .. })));
    }
}
