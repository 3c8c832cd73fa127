//! End-to-end acceptance suite.
//!
//! Eleven self-contained checks exercise the public surface of the crate
//! the way a release gate would: plane generation with axiom validation,
//! the frozen reference incidence table, exact determinant identities,
//! rational line-sum solving, the cyclic constructions and their exhaustive
//! confirmation, the magic constructions for every supported order, and the
//! subgroup bound.  Each check returns a [`CriterionResult`] rather than
//! panicking, so the suite always reports one status line per criterion.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::gcd;
use num_rational::BigRational;
use num_traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{build_plane, Plane};
use crate::groups::{AbelianGroup, Classification, Labeling};
use crate::incidence::IncidenceMatrix;
use crate::magic::{
    magic_general_with_frame, magic_labeling, magic_order2, magic_order3, magic_order4,
    prime_subgroup_bound, product_magic, v_line, PlaneFrame,
};
use crate::oracle::{cyclic_exhaustive, enumerate_line_invariant, enumerate_line_invariant_scan};

/// All supported plane orders: the prime powers up to 9.
pub const SUPPORTED_ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// The classical 7x7 incidence table of the order-2 plane under the point
/// enumeration x1 = (1,0,0), x2 = (0,1,0), x3 = (0,0,1), x4 = (0,1,1),
/// x5 = (1,0,1), x6 = (1,1,0), x7 = (1,1,1).
pub(crate) const FANO_TABLE: [[u8; 7]; 7] = [
    [0, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 1, 0, 0],
    [1, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 0],
];

/// Point and line orderings that reproduce [`FANO_TABLE`] from a generated
/// order-2 plane.
pub(crate) fn fano_reference_orders(plane: &Plane) -> Result<(Vec<usize>, Vec<usize>)> {
    let point_labels =
        ["[1:0:0]", "[0:1:0]", "[0:0:1]", "[0:1:1]", "[1:0:1]", "[1:1:0]", "[1:1:1]"];
    let points = point_labels
        .iter()
        .map(|l| plane.point_by_label(l).ok_or(Error::NoSuchPoint))
        .collect::<Result<Vec<usize>>>()?;
    let pairs = [(1, 2), (0, 2), (0, 1), (0, 3), (1, 4), (2, 5), (3, 4)];
    let lines = pairs
        .iter()
        .map(|&(a, b)| plane.line_through(points[a], points[b]))
        .collect::<Result<Vec<usize>>>()?;
    Ok((points, lines))
}

/// Outcome of one acceptance criterion.
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CriterionResult {
    /// The one-line status this suite reports per criterion.
    pub fn status_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{status} {}: {}", self.name, self.details)
    }
}

fn evaluate(
    name: &'static str,
    f: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    match f() {
        Ok((passed, details)) => CriterionResult { name, passed, details },
        Err(e) => CriterionResult { name, passed: false, details: format!("error: {e}") },
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ]
}

/// Every supported order yields a plane with the right counts that passes
/// full axiom validation, within a 5 second budget.
pub fn criterion_1() -> CriterionResult {
    evaluate("plane-construction-counts-and-axioms", || {
        let start = Instant::now();
        let mut ok = true;
        for q in SUPPORTED_ORDERS {
            let plane = build_plane(q)?;
            let n = q as usize;
            let expected = n * n + n + 1;
            let report = plane.validate_axioms();
            ok &= report.is_valid();
            ok &= plane.num_points() == expected && plane.num_lines() == expected;
            ok &= (0..plane.num_lines()).all(|l| plane.line_points(l).len() == n + 1);
            ok &= (0..plane.num_points())
                .all(|p| plane.lines_through_point(p).len() == n + 1);
        }
        let elapsed = start.elapsed();
        ok &= elapsed <= Duration::from_secs(5);
        Ok((
            ok,
            format!(
                "orders {:?} validated in {} (limit 5s)",
                SUPPORTED_ORDERS,
                secs(elapsed)
            ),
        ))
    })
}

/// The generated order-2 plane reproduces the classical 7x7 incidence table
/// entry for entry under the reference enumeration.
pub fn criterion_2() -> CriterionResult {
    evaluate("reference-incidence-table", || {
        let plane = build_plane(2)?;
        let (points, lines) = fano_reference_orders(&plane)?;
        let matrix = IncidenceMatrix::from_plane_reordered(&plane, &lines, &points)?;
        let mut mismatches = 0;
        for i in 0..7 {
            for j in 0..7 {
                if matrix.entry(i, j) != FANO_TABLE[i][j] {
                    mismatches += 1;
                }
            }
        }
        Ok((
            mismatches == 0,
            format!("49 entries compared, {mismatches} mismatches"),
        ))
    })
}

/// The Gram determinant computed by fraction-free elimination equals the
/// closed form `(n+1)^2 * n^(n^2+n)` for orders 2 through 5, within 10
/// seconds.
pub fn criterion_3() -> CriterionResult {
    evaluate("gram-determinant-two-ways", || {
        let start = Instant::now();
        let mut ok = true;
        let mut digits = Vec::new();
        for q in [2u64, 3, 4, 5] {
            let n = q as usize;
            let plane = build_plane(q)?;
            let det = IncidenceMatrix::from_plane(&plane).gram_determinant();
            let independent =
                BigInt::from(n + 1).pow(2u32) * BigInt::from(n).pow((n * n + n) as u32);
            ok &= det.computed == det.closed_form && det.computed == independent;
            digits.push(det.computed.to_string().len());
        }
        let elapsed = start.elapsed();
        ok &= elapsed <= Duration::from_secs(10);
        Ok((
            ok,
            format!(
                "orders 2-5 agree (determinants up to {} digits) in {} (limit 10s)",
                digits.iter().max().unwrap(),
                secs(elapsed)
            ),
        ))
    })
}

/// Solving the line-sum system for a rational target `c` always returns the
/// constant vector `c / (n + 1)`, for seeded random targets.
pub fn criterion_4() -> CriterionResult {
    evaluate("rational-line-sum-solver", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x00C0_FFEE);
        let mut ok = true;
        let mut trials = 0;
        for q in [2u64, 3, 4, 5] {
            let plane = build_plane(q)?;
            let matrix = IncidenceMatrix::from_plane(&plane);
            for _ in 0..5 {
                let numer: i64 = rng.gen_range(-100..=100);
                let denom: i64 = rng.gen_range(1..=20);
                let c = BigRational::new(BigInt::from(numer), BigInt::from(denom));
                let solution = matrix.solve_line_sums(&c)?;
                let expected = &c / BigRational::from_integer(BigInt::from(q + 1));
                ok &= solution.iter().all(|v| *v == expected);
                trials += 1;
            }
        }
        Ok((ok, format!("{trials} random targets solved to the constant c/(n+1)")))
    })
}

/// The single-line labeling is line-invariant with magic constant
/// `m / gcd(n, m)` for every line of every supported plane and every
/// modulus up to 24.
pub fn criterion_5() -> CriterionResult {
    evaluate("single-line-labeling-constants", || {
        let mut ok = true;
        let mut checked = 0u64;
        for q in SUPPORTED_ORDERS {
            let plane = Arc::new(build_plane(q)?);
            for m in 2..=24u64 {
                let expected = (m / gcd(q, m)) % m;
                for line in 0..plane.num_lines() {
                    let labeling = v_line(&plane, line, m)?;
                    for l in 0..plane.num_lines() {
                        let sum = labeling.line_sum(l)?;
                        ok &= sum.residues() == [expected];
                    }
                    checked += 1;
                }
            }
        }
        Ok((ok, format!("{checked} labelings, every line sum equals m/gcd(n,m)")))
    })
}

/// Cyclic groups: pseudomagic witnesses exist whenever `gcd(n, m) != 1`,
/// and exhaustive sweeps confirm that no cyclic labeling is ever magic —
/// over Z/2 .. Z/13 for the order-2 plane and Z/2 .. Z/6 for the order-3
/// plane — with the solver cross-checked against a brute-force scan on the
/// smallest spaces.  Budget: 60 seconds.
pub fn criterion_6() -> CriterionResult {
    evaluate("cyclic-exhaustive-sweeps", || {
        let start = Instant::now();
        let mut ok = true;

        for q in SUPPORTED_ORDERS {
            let plane = Arc::new(build_plane(q)?);
            let witness = v_line(&plane, 0, 2 * q)?;
            ok &= witness.verify().classification == Classification::Pseudomagic;
        }

        let fano = Arc::new(build_plane(2)?);
        let mut inspected = 0u128;
        for m in 2..=13u64 {
            let verdict = cyclic_exhaustive(&fano, m, crate::oracle::DEFAULT_BOUND)?;
            ok &= !verdict.magic_found && verdict.matches_theory();
            inspected += verdict.count_line_invariant;
        }
        let p3 = Arc::new(build_plane(3)?);
        for m in 2..=6u64 {
            let verdict = cyclic_exhaustive(&p3, m, 20_000_000_000)?;
            ok &= !verdict.magic_found && verdict.matches_theory();
            inspected += verdict.count_line_invariant;
        }

        for m in [2u64, 3, 4] {
            let solved = enumerate_line_invariant(&fano, m, crate::oracle::DEFAULT_BOUND)?;
            let scanned = enumerate_line_invariant_scan(&fano, m, crate::oracle::DEFAULT_BOUND)?;
            ok &= solved.total == scanned.total;
            ok &= labeling_residues(&solved.labelings) == labeling_residues(&scanned.labelings);
        }
        let solved = enumerate_line_invariant(&p3, 2, crate::oracle::DEFAULT_BOUND)?;
        let scanned = enumerate_line_invariant_scan(&p3, 2, crate::oracle::DEFAULT_BOUND)?;
        ok &= solved.total == scanned.total
            && labeling_residues(&solved.labelings) == labeling_residues(&scanned.labelings);

        let elapsed = start.elapsed();
        ok &= elapsed <= Duration::from_secs(60);
        Ok((
            ok,
            format!(
                "{inspected} line-invariant labelings inspected, none magic, in {} (limit 60s)",
                secs(elapsed)
            ),
        ))
    })
}

fn labeling_residues(labelings: &[Labeling]) -> Vec<Vec<u64>> {
    labelings
        .iter()
        .map(|l| l.values().iter().map(|v| v.residues()[0]).collect())
        .collect()
}

/// The frame construction yields a magic labeling over `(Z/n)^3` for orders
/// 5, 7, 8, 9, and the collision classes of its first two coordinates are
/// exactly the predicted families.  Budget: 10 seconds.
pub fn criterion_7() -> CriterionResult {
    evaluate("frame-construction-magic", || {
        let start = Instant::now();
        let mut ok = true;
        for q in [5u64, 7, 8, 9] {
            let plane = Arc::new(build_plane(q)?);
            let (labeling, frame) = magic_general_with_frame(&plane)?;
            ok &= labeling.verify().classification == Classification::Magic;
            ok &= collision_classes_match(&labeling, &frame);
        }
        let elapsed = start.elapsed();
        ok &= elapsed <= Duration::from_secs(10);
        Ok((
            ok,
            format!(
                "orders 5, 7, 8, 9 magic with exact collision classes in {} (limit 10s)",
                secs(elapsed)
            ),
        ))
    })
}

/// Collision classes of the first two coordinates: one 2x2 corner block,
/// one pair per remaining row and per remaining column, all labeled points
/// of the distinguished line together, and singletons elsewhere.
fn collision_classes_match(labeling: &Labeling, frame: &PlaneFrame) -> bool {
    use std::collections::HashMap;
    let n = frame.order();
    let plane = frame.plane();
    let pair = |p: usize| {
        let r = labeling.value(p).residues();
        (r[0], r[1])
    };

    let mut classes: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for p in 0..plane.num_points() {
        classes.entry(pair(p)).or_default().push(p);
    }

    let mut expected: Vec<Vec<usize>> = Vec::new();
    expected.push(vec![frame.w(0, 0), frame.w(0, 1), frame.w(1, 0), frame.w(1, 1)]);
    for i in 2..n {
        expected.push(vec![frame.w(0, i), frame.w(1, i)]);
        expected.push(vec![frame.w(i, 0), frame.w(i, 1)]);
    }
    expected.push((1..n).map(|k| frame.z(k)).collect());
    expected.push(vec![frame.x()]);
    expected.push(vec![frame.y()]);
    for i in 2..n {
        for j in 2..n {
            expected.push(vec![frame.w(i, j)]);
        }
    }

    if classes.len() != expected.len() {
        return false;
    }
    for class in &mut expected {
        class.sort_unstable();
        let Some(mut actual) = classes.remove(&pair(class[0])) else {
            return false;
        };
        actual.sort_unstable();
        if actual != *class {
            return false;
        }
    }
    classes.is_empty()
}

/// The ad-hoc constructions for orders 2, 3, 4 are magic; the order-3 value
/// does not depend on the chosen coordinate representative; the order-4
/// search singles out exactly one auxiliary line.
pub fn criterion_8() -> CriterionResult {
    evaluate("small-order-magic", || {
        let mut ok = true;

        let fano = Arc::new(build_plane(2)?);
        ok &= magic_order2(&fano)?.verify().classification == Classification::Magic;

        let p3 = Arc::new(build_plane(3)?);
        let labeling3 = magic_order3(&p3)?;
        ok &= labeling3.verify().classification == Classification::Magic;
        let field = p3.field()?.clone();
        for p in 0..p3.num_points() {
            let coords = p3.point_coords(p)?;
            for c in [1i64, 2] {
                let s = field.from_int(c);
                let scaled =
                    [coords[0].mul(&s)?, coords[1].mul(&s)?, coords[2].mul(&s)?];
                ok &= p3.point_by_coords(&scaled)? == p;
                let form = |x: u64, y: u64, z: u64| (x * x + z * z + x * y + 2 * y * z + 2 * x * z) % 3;
                let (x, y, z) = (
                    scaled[0].coeffs()[0],
                    scaled[1].coeffs()[0],
                    scaled[2].coeffs()[0],
                );
                ok &= labeling3.value(p).residues()
                    == [form(x, y, z), form(y, z, x), form(z, x, y)];
            }
        }

        let p4 = Arc::new(build_plane(4)?);
        let found = magic_order4(&p4)?;
        ok &= found.labeling.verify().classification == Classification::Magic;
        Ok((
            ok,
            format!(
                "orders 2, 3, 4 magic; order-3 representative-independent; order-4 auxiliary line {}",
                found.aux_line
            ),
        ))
    })
}

/// The product construction is magic for every generated plane up to order
/// 5 and for the plane ingested from the classical incidence table.
pub fn criterion_9() -> CriterionResult {
    evaluate("product-construction-magic", || {
        let mut ok = true;
        for q in [2u64, 3, 4, 5] {
            let plane = Arc::new(build_plane(q)?);
            ok &= product_magic(&plane)?.verify().classification == Classification::Magic;
        }

        let table_text = FANO_TABLE
            .iter()
            .map(|row| {
                row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n");
        let ingested = Arc::new(Plane::from_incidence_text(&table_text)?);
        ok &= ingested.validate_axioms().is_valid();
        ok &= product_magic(&ingested)?.verify().classification == Classification::Magic;
        Ok((
            ok,
            "orders 2-5 and the ingested 7x7 table all magic over (Z/n)^lines".to_string(),
        ))
    })
}

/// The necessary subgroup condition: the documented examples decide as
/// stated, and every magic labeling this crate produces for a prime-order
/// plane lives over a group that passes it.
pub fn criterion_10() -> CriterionResult {
    evaluate("prime-subgroup-bound", || {
        let mut ok = true;
        ok &= prime_subgroup_bound(2, &AbelianGroup::power(2, 3)?)?.contains_cube;
        ok &= !prime_subgroup_bound(2, &AbelianGroup::new(vec![8, 2])?)?.contains_cube;
        ok &= prime_subgroup_bound(3, &AbelianGroup::power(6, 3)?)?.contains_cube;

        let mut consistent = 0;
        for q in [2u64, 3, 5, 7] {
            let plane = Arc::new(build_plane(q)?);
            for labeling in [magic_labeling(&plane)?.labeling, product_magic(&plane)?] {
                ok &= labeling.verify().classification == Classification::Magic;
                ok &= prime_subgroup_bound(q, labeling.group())?.contains_cube;
                consistent += 1;
            }
        }
        Ok((
            ok,
            format!("3 documented examples and {consistent} produced magic labelings consistent"),
        ))
    })
}

/// Spot values of the frame labeling: the first coordinate vanishes at `x`
/// and the second at `y` for odd orders 5, 7, 9; for order 8 both equal 4,
/// as does the third coordinate at the grid corner.
pub fn criterion_11() -> CriterionResult {
    evaluate("frame-spot-values", || {
        let mut ok = true;
        for q in [5u64, 7, 9] {
            let plane = Arc::new(build_plane(q)?);
            let (labeling, frame) = magic_general_with_frame(&plane)?;
            ok &= labeling.value(frame.x()).residues()[0] == 0;
            ok &= labeling.value(frame.y()).residues()[1] == 0;
        }
        let plane8 = Arc::new(build_plane(8)?);
        let (labeling8, frame8) = magic_general_with_frame(&plane8)?;
        ok &= labeling8.value(frame8.x()).residues()[0] == 4;
        ok &= labeling8.value(frame8.y()).residues()[1] == 4;
        ok &= labeling8.value(frame8.w(0, 0)).residues()[2] == 4;
        Ok((
            ok,
            "odd orders vanish at the base points; order 8 takes the value 4".to_string(),
        ))
    })
}
