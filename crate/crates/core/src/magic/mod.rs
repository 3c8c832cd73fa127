//! Constructions of line-invariant, pseudomagic, and magic labelings.
//!
//! Over a cyclic group `Z/m` the best a plane of order `n` can do is
//! pseudomagic, and only when `gcd(n, m) != 1`: the single-line labeling
//! [`v_line`] witnesses this, and no labeling into `Z/m` is ever injective
//! because every line-invariant labeling takes at most `gcd(n, m)` distinct
//! values.  Magic labelings exist over larger groups: [`product_magic`] uses
//! one cyclic factor per line, and the frame construction in [`frame`]
//! reaches the much smaller group `(Z/n)^3` for `n >= 5`, with ad-hoc
//! constructions covering orders 2, 3, and 4.

mod frame;
mod small_orders;

use std::sync::Arc;

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::geometry::Plane;
use crate::gf::is_prime;
use crate::groups::{AbelianGroup, Labeling};

pub use frame::{build_frame, magic_general, magic_general_with_frame, PlaneFrame};
pub use small_orders::{magic_order2, magic_order3, magic_order4, Order4Magic};

/// The labeling into `Z/m` that puts `m / gcd(n, m)` on every point of one
/// line and 0 elsewhere.  It is always line-invariant with magic constant
/// `m / gcd(n, m)`; it is the zero labeling exactly when `gcd(n, m) = 1`.
pub fn v_line(plane: &Arc<Plane>, line: usize, m: u64) -> Result<Labeling> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    if line >= plane.num_lines() {
        return Err(Error::LineOutOfRange { index: line, count: plane.num_lines() });
    }
    let n = plane_order(plane)?;
    let group = AbelianGroup::cyclic(m)?;
    let value = group.element(&[(m / gcd(n, m)) as i64])?;
    let values = (0..plane.num_points())
        .map(|p| {
            if plane.line_points(line).binary_search(&p).is_ok() {
                value.clone()
            } else {
                group.zero()
            }
        })
        .collect();
    Labeling::new(plane.clone(), group, values)
}

/// Whether a plane of order `n` admits a pseudomagic labeling over `Z/m`.
pub fn is_pseudomagic_cyclic(n: u64, m: u64) -> bool {
    gcd(n, m) != 1
}

/// The magic labeling over `(Z/n)^(number of lines)` whose component at line
/// `L` is the indicator of `L`.  Works for any validated plane, including
/// ingested ones.
pub fn product_magic(plane: &Arc<Plane>) -> Result<Labeling> {
    let n = plane_order(plane)?;
    let k = plane.num_lines();
    let group = AbelianGroup::power(n, k)?;
    let values = (0..plane.num_points())
        .map(|p| {
            let residues: Vec<i64> = (0..k)
                .map(|l| i64::from(plane.line_points(l).binary_search(&p).is_ok()))
                .collect();
            group.element(&residues)
        })
        .collect::<Result<Vec<_>>>()?;
    Labeling::new(plane.clone(), group, values)
}

fn plane_order(plane: &Plane) -> Result<u64> {
    let n = plane.order() as u64;
    if n < 2 {
        return Err(Error::OrderTooSmall { got: plane.order(), min: 2 });
    }
    Ok(n)
}

/// Verdict of the necessary subgroup condition for planes of prime order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupBound {
    pub prime: u64,
    /// Number of cyclic factors of the group whose order the prime divides.
    pub rank: usize,
    pub contains_cube: bool,
}

/// Checks whether `group` contains `(Z/n)^3` for prime `n`.  A plane of
/// prime order `n` can only be magic over groups that do; the converse does
/// not hold, so a positive verdict is necessary, not sufficient.
pub fn prime_subgroup_bound(n: u64, group: &AbelianGroup) -> Result<SubgroupBound> {
    if !is_prime(n) {
        return Err(Error::BoundNeedsPrime { n });
    }
    let rank = group
        .orders()
        .iter()
        .flat_map(|&f| prime_power_components(f))
        .filter(|&c| c % n == 0)
        .count();
    Ok(SubgroupBound { prime: n, rank, contains_cube: rank >= 3 })
}

/// Splits `n >= 2` into its prime-power components, e.g. `12 -> [4, 3]`.
fn prime_power_components(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut power = 1;
            while n % p == 0 {
                power *= p;
                n /= p;
            }
            out.push(power);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Magic labeling of a generated plane, dispatching on the order: the three
/// ad-hoc constructions for orders 2 to 4, the frame construction beyond.
pub struct MagicConstruction {
    pub labeling: Labeling,
    /// The auxiliary line chosen by the order-4 search, when applicable.
    pub aux_line: Option<usize>,
}

pub fn magic_labeling(plane: &Arc<Plane>) -> Result<MagicConstruction> {
    match plane.order() {
        2 => Ok(MagicConstruction { labeling: magic_order2(plane)?, aux_line: None }),
        3 => Ok(MagicConstruction { labeling: magic_order3(plane)?, aux_line: None }),
        4 => {
            let found = magic_order4(plane)?;
            Ok(MagicConstruction {
                labeling: found.labeling,
                aux_line: Some(found.aux_line),
            })
        }
        _ => Ok(MagicConstruction { labeling: magic_general(plane)?, aux_line: None }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_plane;
    use crate::groups::Classification;

    fn plane(q: u64) -> Arc<Plane> {
        Arc::new(build_plane(q).unwrap())
    }

    #[test]
    fn v_line_value_and_constant() {
        let p3 = plane(3);
        let v = v_line(&p3, 5, 9).unwrap();
        // gcd(3, 9) = 3, so the marked line carries 9/3 = 3.
        for p in 0..p3.num_points() {
            let expected = if p3.line_points(5).contains(&p) { 3 } else { 0 };
            assert_eq!(v.value(p).residues(), &[expected]);
        }
        let report = v.verify();
        assert!(report.is_line_invariant);
        assert_eq!(report.magic_constant.unwrap().residues(), &[3]);
        assert_eq!(report.classification, Classification::Pseudomagic);
    }

    #[test]
    fn v_line_is_zero_exactly_when_coprime() {
        let fano = plane(2);
        // gcd(2, 3) = 1: the labeling collapses to zero.
        let coprime = v_line(&fano, 0, 3).unwrap();
        assert!(coprime.values().iter().all(|v| v.is_zero()));
        assert_eq!(coprime.verify().classification, Classification::TriviallyConstant);

        let shared = v_line(&fano, 0, 6).unwrap();
        assert!(!shared.values().iter().all(|v| v.is_zero()));
        assert_eq!(shared.verify().classification, Classification::Pseudomagic);
    }

    #[test]
    fn v_line_image_within_gcd_bound() {
        for q in [2u64, 3, 4, 5] {
            let pl = plane(q);
            for m in 2..=12u64 {
                for line in [0, pl.num_lines() / 2] {
                    let v = v_line(&pl, line, m).unwrap();
                    let report = v.verify();
                    assert!(report.is_line_invariant, "q={q} m={m}");
                    assert_eq!(
                        report.magic_constant.unwrap().residues(),
                        &[(m / gcd(q, m)) % m]
                    );
                    assert!(
                        v.image_size() as u64 <= gcd(q, m),
                        "q={q} m={m}: image {} > gcd {}",
                        v.image_size(),
                        gcd(q, m)
                    );
                    assert_ne!(report.classification, Classification::Magic);
                }
            }
        }
    }

    #[test]
    fn v_line_rejects_bad_inputs() {
        let fano = plane(2);
        assert!(matches!(v_line(&fano, 0, 1), Err(Error::BadModulus(1))));
        assert!(matches!(
            v_line(&fano, 9, 4),
            Err(Error::LineOutOfRange { index: 9, count: 7 })
        ));
    }

    #[test]
    fn pseudomagic_cyclic_is_a_gcd_test() {
        assert!(!is_pseudomagic_cyclic(2, 3));
        assert!(is_pseudomagic_cyclic(2, 6));
        assert!(is_pseudomagic_cyclic(3, 9));
        assert!(!is_pseudomagic_cyclic(4, 9));
        assert!(is_pseudomagic_cyclic(4, 6));
    }

    #[test]
    fn product_magic_on_fano() {
        let fano = plane(2);
        let v = product_magic(&fano).unwrap();
        assert_eq!(v.group().orders(), &[2; 7]);
        let report = v.verify();
        assert_eq!(report.classification, Classification::Magic);
        // Each line meets every other line once and itself n + 1 times, so
        // the constant is the all-ones vector.
        assert_eq!(report.magic_constant.unwrap().residues(), &[1; 7]);
        // Distinct points differ in at least two coordinates: their pencils
        // share exactly one line.
        for a in 0..fano.num_points() {
            for b in a + 1..fano.num_points() {
                let diff = v
                    .value(a)
                    .residues()
                    .iter()
                    .zip(v.value(b).residues())
                    .filter(|(x, y)| x != y)
                    .count();
                assert!(diff >= 2, "points {a},{b} differ in {diff} coordinates");
            }
        }
    }

    #[test]
    fn product_magic_on_ingested_plane() {
        let generated = plane(2);
        let text = generated.to_incidence_text();
        let ingested = Arc::new(Plane::from_incidence_text(&text).unwrap());
        assert!(ingested.validate_axioms().is_valid());
        let v = product_magic(&ingested).unwrap();
        assert_eq!(v.verify().classification, Classification::Magic);
    }

    #[test]
    fn subgroup_bound_examples() {
        let cube2 = AbelianGroup::power(2, 3).unwrap();
        assert!(prime_subgroup_bound(2, &cube2).unwrap().contains_cube);

        let z8z2 = AbelianGroup::new(vec![8, 2]).unwrap();
        let verdict = prime_subgroup_bound(2, &z8z2).unwrap();
        assert_eq!(verdict.rank, 2);
        assert!(!verdict.contains_cube);

        let z6cube = AbelianGroup::power(6, 3).unwrap();
        assert!(prime_subgroup_bound(3, &z6cube).unwrap().contains_cube);
        assert!(prime_subgroup_bound(2, &z6cube).unwrap().contains_cube);

        assert!(matches!(
            prime_subgroup_bound(4, &cube2),
            Err(Error::BoundNeedsPrime { n: 4 })
        ));
    }

    #[test]
    fn prime_power_components_split() {
        assert_eq!(prime_power_components(12), vec![4, 3]);
        assert_eq!(prime_power_components(8), vec![8]);
        assert_eq!(prime_power_components(30), vec![2, 3, 5]);
        assert_eq!(prime_power_components(7), vec![7]);
    }
}
