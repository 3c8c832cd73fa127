//! A battery of quick independent cross-checks.
//!
//! Each check recomputes one frozen fact of the library by a route that
//! shares as little code as possible with the module under test: field
//! moduli are re-derived by integer root scans, inverses by brute force,
//! determinants compared against closed forms, and enumeration results
//! probed for hand-computed members.  The battery returns structured
//! results instead of panicking so callers can render a full report.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{cyclic_exhaustive, enumerate_line_invariant, solve_congruence, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::geometry::build_plane;
use crate::gf::FieldSpec;
use crate::groups::AbelianGroup;
use crate::incidence::IncidenceMatrix;
use crate::magic::{build_frame, magic_order2, magic_order3, product_magic, v_line};
use crate::magic::prime_subgroup_bound;

/// Outcome of one spot check.
pub struct SpotCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs the whole battery and reports each outcome.
pub fn spot_checks() -> Vec<SpotCheck> {
    let mut out = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut() -> Result<(bool, String)>| {
        let (passed, detail) = match f() {
            Ok(pair) => pair,
            Err(e) => (false, format!("error: {e}")),
        };
        out.push(SpotCheck { name, passed, detail });
    };

    run("field-moduli-by-root-scan", &mut field_moduli_by_root_scan);
    run("gf5-inverse-of-two", &mut gf5_inverse_of_two);
    run("gf9-product-of-units", &mut gf9_product_of_units);
    run("order4-plane-pencil-line", &mut order4_plane_pencil_line);
    run("order3-matrix-degrees", &mut order3_matrix_degrees);
    run("gram-determinant-order2", &mut || gram_determinant_matches(2, "576"));
    run("gram-determinant-order3", &mut || gram_determinant_matches(3, "8503056"));
    run("line-sum-solver-is-constant", &mut line_sum_solver_is_constant);
    run("z9-scaling-inverts", &mut z9_scaling_inverts);
    run("coordinate-labeling-sums-vanish", &mut coordinate_labeling_sums_vanish);
    run("single-line-labeling-constant", &mut single_line_labeling_constant);
    run("product-labeling-separates", &mut product_labeling_separates);
    run("frame-grid-avoids-distinguished-line", &mut frame_grid_avoids_distinguished_line);
    run("order3-labeling-known-value", &mut order3_labeling_known_value);
    run("enumeration-contains-known-labelings", &mut enumeration_contains_known_labelings);
    run("exhaustive-sweep-coset-structure", &mut exhaustive_sweep_coset_structure);
    run("subgroup-bound-examples", &mut subgroup_bound_examples);
    run("congruence-solver-brute-force", &mut congruence_solver_brute_force);
    out
}

/// Smallest monic degree-`k` polynomial over `Z/p` without a root, in the
/// same candidate order the field module uses.  For `k <= 3`, having no
/// root is the same as being irreducible, so this re-derives the reduction
/// modulus by nothing but integer arithmetic.
fn minimal_root_free(p: u64, k: u32) -> Vec<u64> {
    assert!(k == 2 || k == 3, "root scan only decides degrees 2 and 3");
    'candidate: for idx in 0..p.pow(k) {
        let mut coeffs = vec![0u64; k as usize];
        let mut rest = idx;
        for slot in (0..k as usize).rev() {
            coeffs[slot] = rest % p;
            rest /= p;
        }
        for x in 0..p {
            let mut value = 1u64;
            for &c in coeffs.iter().rev() {
                value = (value * x + c) % p;
            }
            if value == 0 {
                continue 'candidate;
            }
        }
        coeffs.push(1);
        return coeffs;
    }
    unreachable!("some monic polynomial of degree {k} over Z/{p} is irreducible")
}

fn field_moduli_by_root_scan() -> Result<(bool, String)> {
    let cases: [(u64, u32, &[u64]); 5] = [
        (2, 2, &[1, 1, 1]),
        (3, 2, &[1, 0, 1]),
        (5, 2, &[1, 1, 1]),
        (2, 3, &[1, 0, 1, 1]),
        (3, 3, &[1, 0, 2, 1]),
    ];
    let mut detail = Vec::new();
    let mut passed = true;
    for (p, k, frozen) in cases {
        let scanned = minimal_root_free(p, k);
        let used = FieldSpec::new(p, k as usize)?.modulus().to_vec();
        let ok = scanned == frozen && used == frozen;
        passed &= ok;
        detail.push(format!("GF({}): scan {:?}, field {:?}", p.pow(k), scanned, used));
    }
    Ok((passed, detail.join("; ")))
}

fn gf5_inverse_of_two() -> Result<(bool, String)> {
    let brute = (1..5).find(|x| 2 * x % 5 == 1).unwrap();
    let f5 = FieldSpec::new(5, 1)?;
    let inv = f5.from_int(2).inv()?;
    let ok = brute == 3 && inv.coeffs()[0] == brute;
    Ok((ok, format!("brute force {brute}, field arithmetic {inv}")))
}

fn gf9_product_of_units() -> Result<(bool, String)> {
    let f9 = FieldSpec::new(3, 2)?;
    let mut product = f9.one();
    for e in f9.enumerate() {
        if !e.is_zero() {
            product = product.mul(&e)?;
        }
    }
    let ok = product == f9.from_int(-1);
    Ok((ok, format!("product of the 8 units is {product}")))
}

fn order4_plane_pencil_line() -> Result<(bool, String)> {
    let plane = build_plane(4)?;
    let a = plane.point_by_label("[0:0:1]").ok_or(Error::NoSuchPoint)?;
    let b = plane.point_by_label("[1:0:0]").ok_or(Error::NoSuchPoint)?;
    let line = plane.line_through(a, b)?;
    let labels: Vec<&str> = plane.line_points(line).iter().map(|&p| plane.point_label(p)).collect();
    let expected = ["[0:0:1]", "[1:0:0]", "[1:0:1]", "[1:0:a]", "[1:0:a+1]"];
    Ok((labels == expected, format!("line {line}: {}", labels.join(" "))))
}

fn order3_matrix_degrees() -> Result<(bool, String)> {
    let plane = build_plane(3)?;
    let matrix = IncidenceMatrix::from_plane(&plane);
    let rows_ok = matrix.num_rows() == 13 && matrix.num_cols() == 13;
    let row_sums_ok = matrix.rows().iter().all(|r| r.iter().map(|&e| e as u64).sum::<u64>() == 4);
    let col_sums_ok = (0..matrix.num_cols())
        .all(|j| matrix.rows().iter().map(|r| r[j] as u64).sum::<u64>() == 4);
    Ok((
        rows_ok && row_sums_ok && col_sums_ok,
        format!("{}x{} with 4 ones per row and column", matrix.num_rows(), matrix.num_cols()),
    ))
}

fn gram_determinant_matches(q: u64, expected: &str) -> Result<(bool, String)> {
    let plane = Arc::new(build_plane(q)?);
    let det = IncidenceMatrix::from_plane(&plane).gram_determinant();
    let target: BigInt = expected.parse().expect("literal integer");
    let ok = det.computed == target && det.closed_form == target;
    Ok((ok, format!("elimination {}, closed form {}", det.computed, det.closed_form)))
}

fn line_sum_solver_is_constant() -> Result<(bool, String)> {
    let plane = Arc::new(build_plane(3)?);
    let c = BigRational::from_integer(BigInt::from(8));
    let solution = IncidenceMatrix::from_plane(&plane).solve_line_sums(&c)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let ok = solution.len() == 13 && solution.iter().all(|x| *x == two);
    Ok((ok, format!("all {} coordinates equal {}", solution.len(), solution[0])))
}

fn z9_scaling_inverts() -> Result<(bool, String)> {
    let z9 = AbelianGroup::cyclic(9)?;
    let seven = z9.element(&[7])?;
    let scaled = seven.scale(4);
    let ok = scaled == z9.element(&[1])?;
    Ok((ok, format!("4 * 7 = {scaled} in Z/9")))
}

fn coordinate_labeling_sums_vanish() -> Result<(bool, String)> {
    let fano = Arc::new(build_plane(2)?);
    let report = magic_order2(&fano)?.verify();
    let constant_zero = report
        .magic_constant
        .as_ref()
        .map(|c| c.is_zero())
        .unwrap_or(false);
    Ok((
        report.is_line_invariant && constant_zero,
        format!("line sums all equal {:?}", report.magic_constant.map(|c| c.to_string())),
    ))
}

fn single_line_labeling_constant() -> Result<(bool, String)> {
    let plane = Arc::new(build_plane(3)?);
    let report = v_line(&plane, 0, 9)?.verify();
    let ok = report.is_line_invariant
        && report.magic_constant.as_ref().map(|c| c.residues() == [3]).unwrap_or(false);
    Ok((ok, format!("constant {:?} over Z/9", report.magic_constant.map(|c| c.to_string()))))
}

fn product_labeling_separates() -> Result<(bool, String)> {
    let fano = Arc::new(build_plane(2)?);
    let labeling = product_magic(&fano)?;
    let mut min_distance = usize::MAX;
    for a in 0..fano.num_points() {
        for b in a + 1..fano.num_points() {
            let distance = labeling
                .value(a)
                .residues()
                .iter()
                .zip(labeling.value(b).residues())
                .filter(|(x, y)| x != y)
                .count();
            min_distance = min_distance.min(distance);
        }
    }
    Ok((min_distance >= 2, format!("minimum coordinate distance {min_distance}")))
}

fn frame_grid_avoids_distinguished_line() -> Result<(bool, String)> {
    let plane = Arc::new(build_plane(7)?);
    let frame = build_frame(&plane)?;
    let mut grid = HashSet::new();
    let mut off_line = true;
    for i in 0..7 {
        for j in 0..7 {
            let p = frame.w(i, j);
            grid.insert(p);
            off_line &= plane.line_points(frame.xy_line()).binary_search(&p).is_err();
        }
    }
    Ok((
        grid.len() == 49 && off_line,
        format!("{} distinct grid points, all off the distinguished line: {off_line}", grid.len()),
    ))
}

fn order3_labeling_known_value() -> Result<(bool, String)> {
    let plane = Arc::new(build_plane(3)?);
    let labeling = magic_order3(&plane)?;
    let field = plane.field()?.clone();
    let p = plane.point_by_coords(&[field.from_int(1), field.from_int(0), field.from_int(0)])?;
    let value = labeling.value(p);
    Ok((value.residues() == [1, 1, 0], format!("value at [1:0:0] is {value}")))
}

fn enumeration_contains_known_labelings() -> Result<(bool, String)> {
    let fano = Arc::new(build_plane(2)?);
    let enumeration = enumerate_line_invariant(&fano, 2, DEFAULT_BOUND)?;
    let vectors: Vec<Vec<u64>> = enumeration
        .labelings
        .iter()
        .map(|l| l.values().iter().map(|v| v.residues()[0]).collect())
        .collect();
    let mut ok = enumeration.total == 16;
    ok &= vectors.contains(&vec![0; 7]) && vectors.contains(&vec![1; 7]);
    for line in 0..fano.num_lines() {
        let single: Vec<u64> = v_line(&fano, line, 2)?
            .values()
            .iter()
            .map(|v| v.residues()[0])
            .collect();
        ok &= vectors.contains(&single);
    }
    Ok((ok, format!("{} labelings, constants and 7 single-line labelings present", enumeration.total)))
}

fn exhaustive_sweep_coset_structure() -> Result<(bool, String)> {
    let fano = Arc::new(build_plane(2)?);
    let mut detail = Vec::new();
    let mut ok = true;
    for m in [4u64, 6] {
        let verdict = cyclic_exhaustive(&fano, m, DEFAULT_BOUND)?;
        ok &= verdict.coset_structure_holds
            && verdict.max_image_size as u64 <= verdict.gcd_n_m
            && !verdict.magic_found;
        detail.push(format!(
            "m={m}: {} labelings, image <= {}, coset step {}",
            verdict.count_line_invariant,
            verdict.gcd_n_m,
            m / verdict.gcd_n_m
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn subgroup_bound_examples() -> Result<(bool, String)> {
    let z6cube = AbelianGroup::power(6, 3)?;
    let z8z2 = AbelianGroup::new(vec![8, 2])?;
    let ok = prime_subgroup_bound(2, &z6cube)?.contains_cube
        && prime_subgroup_bound(3, &z6cube)?.contains_cube
        && !prime_subgroup_bound(2, &z8z2)?.contains_cube;
    Ok((ok, "(Z/6)^3 passes for 2 and 3; Z/8 x Z/2 fails for 2".into()))
}

fn congruence_solver_brute_force() -> Result<(bool, String)> {
    let mut checked = 0usize;
    for m in 2..=12u64 {
        for d in 0..m {
            for t in 0..m {
                let brute: Vec<u64> = (0..m).filter(|g| d * g % m == t).collect();
                let solved: Vec<u64> = match solve_congruence(d, t, m) {
                    None => Vec::new(),
                    Some(s) => {
                        let mut all: Vec<u64> =
                            (0..s.count).map(|k| (s.base + k * s.step) % m).collect();
                        all.sort_unstable();
                        all
                    }
                };
                if brute != solved {
                    return Ok((
                        false,
                        format!("d={d}, t={t}, m={m}: brute {brute:?} vs solver {solved:?}"),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} congruences agree with brute force")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_spot_check_passes() {
        let results = spot_checks();
        assert!(results.len() >= 15);
        let mut names = HashSet::new();
        for check in &results {
            assert!(names.insert(check.name), "duplicate name {}", check.name);
            assert!(check.passed, "{} failed: {}", check.name, check.detail);
        }
    }
}
