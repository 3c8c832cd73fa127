//! Finite Abelian groups, point labelings, and the verification verdict.
//!
//! Groups are direct sums of cyclic factors `Z/n1 (+) ... (+) Z/nk`; elements
//! are residue vectors.  A labeling assigns a group element to every point of
//! a plane.  `Labeling::verify` computes all line sums and classifies the
//! labeling:
//!
//! * not line-invariant: two lines with different sums exist;
//! * trivially constant: line-invariant but every point gets the same value;
//! * pseudomagic: line-invariant, non-constant, but some value repeats;
//! * magic: line-invariant and injective.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::geometry::Plane;

/// A finite Abelian group in direct-sum form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Arc<[u64]>,
}

impl AbelianGroup {
    /// The direct sum of `Z/n` for each listed `n`; every factor must be at
    /// least 2.
    pub fn new(orders: Vec<u64>) -> Result<AbelianGroup> {
        if orders.is_empty() {
            return Err(Error::EmptyGroup);
        }
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::BadGroupOrder(bad));
        }
        Ok(AbelianGroup { orders: orders.into() })
    }

    pub fn cyclic(m: u64) -> Result<AbelianGroup> {
        AbelianGroup::new(vec![m])
    }

    /// `(Z/m)^k`.
    pub fn power(m: u64, k: usize) -> Result<AbelianGroup> {
        AbelianGroup::new(vec![m; k])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_factors(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements.
    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&n| n as u128).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            residues: vec![0; self.orders.len()],
        }
    }

    /// Builds the element with the given residues, reduced factor-wise.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.orders.len() {
            return Err(Error::CoefficientLength {
                expected: self.orders.len(),
                got: residues.len(),
            });
        }
        let residues = residues
            .iter()
            .zip(self.orders.iter())
            .map(|(&r, &n)| r.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement { group: self.clone(), residues })
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// An element of an [`AbelianGroup`], stored as reduced residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: AbelianGroup,
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .zip(self.group.orders.iter())
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect();
        Ok(GroupElement { group: self.group.clone(), residues })
    }

    pub fn neg(&self) -> GroupElement {
        let residues = self
            .residues
            .iter()
            .zip(self.group.orders.iter())
            .map(|(&a, &n)| (n - a) % n)
            .collect();
        GroupElement { group: self.group.clone(), residues }
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.add(&other.neg())
    }

    /// Integer multiple `k * a`, with any sign of `k`.
    pub fn scale(&self, k: i64) -> GroupElement {
        let residues = self
            .residues
            .iter()
            .zip(self.group.orders.iter())
            .map(|(&a, &n)| {
                let k = k.rem_euclid(n as i64) as u64;
                (a * k) % n
            })
            .collect();
        GroupElement { group: self.group.clone(), residues }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            return write!(f, "{}", self.residues[0]);
        }
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct LabelingDto {
    group: Vec<u64>,
    values: Vec<Vec<i64>>,
}

/// A total assignment of group elements to the points of a plane.
#[derive(Clone, Debug)]
pub struct Labeling {
    plane: Arc<Plane>,
    group: AbelianGroup,
    values: Vec<GroupElement>,
}

impl PartialEq for Labeling {
    fn eq(&self, other: &Self) -> bool {
        self.same_plane(other) && self.group == other.group && self.values == other.values
    }
}

impl Eq for Labeling {}

impl Labeling {
    pub fn new(
        plane: Arc<Plane>,
        group: AbelianGroup,
        values: Vec<GroupElement>,
    ) -> Result<Labeling> {
        if values.len() != plane.num_points() {
            return Err(Error::LabelingLength {
                expected: plane.num_points(),
                got: values.len(),
            });
        }
        if values.iter().any(|v| v.group != group) {
            return Err(Error::GroupMismatch);
        }
        Ok(Labeling { plane, group, values })
    }

    pub fn constant(plane: Arc<Plane>, value: GroupElement) -> Labeling {
        let values = vec![value.clone(); plane.num_points()];
        Labeling { plane, group: value.group().clone(), values }
    }

    pub fn zero(plane: Arc<Plane>, group: AbelianGroup) -> Labeling {
        let zero = group.zero();
        Labeling::constant(plane, zero)
    }

    pub fn plane(&self) -> &Arc<Plane> {
        &self.plane
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn value(&self, point: usize) -> &GroupElement {
        &self.values[point]
    }

    fn same_plane(&self, other: &Labeling) -> bool {
        Arc::ptr_eq(&self.plane, &other.plane)
            || (self.plane.labels() == other.plane.labels()
                && (0..self.plane.num_lines())
                    .all(|l| self.plane.line_points(l) == other.plane.line_points(l)))
    }

    /// Sum of the values over the points of a line.
    pub fn line_sum(&self, line: usize) -> Result<GroupElement> {
        if line >= self.plane.num_lines() {
            return Err(Error::LineOutOfRange {
                index: line,
                count: self.plane.num_lines(),
            });
        }
        let mut acc = self.group.zero();
        for &p in self.plane.line_points(line) {
            acc = acc.add(&self.values[p])?;
        }
        Ok(acc)
    }

    /// Pointwise sum of two labelings on the same plane and group.
    pub fn add(&self, other: &Labeling) -> Result<Labeling> {
        if !self.same_plane(other) {
            return Err(Error::PlaneMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Labeling {
            plane: self.plane.clone(),
            group: self.group.clone(),
            values,
        })
    }

    /// Pointwise integer multiple.
    pub fn scale(&self, k: i64) -> Labeling {
        let values = self.values.iter().map(|v| v.scale(k)).collect();
        Labeling {
            plane: self.plane.clone(),
            group: self.group.clone(),
            values,
        }
    }

    /// Number of distinct values taken.
    pub fn image_size(&self) -> usize {
        let mut seen: Vec<&GroupElement> = Vec::new();
        for v in &self.values {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen.len()
    }

    /// Computes every line sum and classifies the labeling.
    pub fn verify(&self) -> VerifyReport {
        let line_sums: Vec<GroupElement> = (0..self.plane.num_lines())
            .map(|l| self.line_sum(l).expect("line index in range"))
            .collect();
        let mut offending_pair = None;
        for (l, sum) in line_sums.iter().enumerate().skip(1) {
            if sum != &line_sums[0] {
                offending_pair = Some((0, l));
                break;
            }
        }
        let is_line_invariant = offending_pair.is_none() && !line_sums.is_empty();

        let mut collision = None;
        for j in 1..self.values.len() {
            if let Some(i) = (0..j).find(|&i| self.values[i] == self.values[j]) {
                collision = Some((i, j));
                break;
            }
        }
        let is_injective = collision.is_none();
        let is_constant_labeling = self.values.windows(2).all(|w| w[0] == w[1]);

        let classification = if !is_line_invariant {
            Classification::NotLineInvariant
        } else if is_constant_labeling {
            Classification::TriviallyConstant
        } else if is_injective {
            Classification::Magic
        } else {
            Classification::Pseudomagic
        };
        let witness = match classification {
            Classification::NotLineInvariant => {
                offending_pair.map(|(l, m)| Witness::LinePair { l, m })
            }
            Classification::Magic => None,
            _ => collision.map(|(a, b)| Witness::PointCollision { a, b }),
        };
        VerifyReport {
            magic_constant: is_line_invariant.then(|| line_sums[0].clone()),
            line_sums,
            is_line_invariant,
            is_constant_labeling,
            is_injective,
            classification,
            witness,
        }
    }

    pub fn to_json(&self) -> String {
        let dto = LabelingDto {
            group: self.group.orders().to_vec(),
            values: self
                .values
                .iter()
                .map(|v| v.residues().iter().map(|&r| r as i64).collect())
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&dto).expect("labeling serializes");
        out.push('\n');
        out
    }

    /// Reads a labeling in plane point order and attaches it to `plane`.
    pub fn from_json(text: &str, plane: Arc<Plane>) -> Result<Labeling> {
        let dto: LabelingDto = serde_json::from_str(text)
            .map_err(|e| Error::LabelingFormat(e.to_string()))?;
        let group = AbelianGroup::new(dto.group)?;
        let values = dto
            .values
            .iter()
            .map(|row| group.element(row))
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(plane, group, values)
    }
}

/// How a labeling relates to the magic conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    NotLineInvariant,
    TriviallyConstant,
    Pseudomagic,
    Magic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Classification::NotLineInvariant => "not-line-invariant",
            Classification::TriviallyConstant => "trivially-constant",
            Classification::Pseudomagic => "pseudomagic",
            Classification::Magic => "magic",
        };
        write!(f, "{name}")
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two lines with different sums.
    LinePair { l: usize, m: usize },
    /// Two points with the same value.
    PointCollision { a: usize, b: usize },
}

/// Full outcome of [`Labeling::verify`].
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub line_sums: Vec<GroupElement>,
    pub is_line_invariant: bool,
    pub magic_constant: Option<GroupElement>,
    pub is_constant_labeling: bool,
    pub is_injective: bool,
    pub classification: Classification,
    pub witness: Option<Witness>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let witness = match &self.witness {
            Some(Witness::LinePair { l, m }) => json!({ "lines": [l, m] }),
            Some(Witness::PointCollision { a, b }) => json!({ "points": [a, b] }),
            None => serde_json::Value::Null,
        };
        let value = json!({
            "classification": self.classification.to_string(),
            "line_invariant": self.is_line_invariant,
            "magic_constant": self.magic_constant.as_ref().map(|c| c.residues().to_vec()),
            "constant_labeling": self.is_constant_labeling,
            "injective": self.is_injective,
            "line_sums": self.line_sums.iter().map(|s| s.residues().to_vec()).collect::<Vec<_>>(),
            "witness": witness,
        });
        let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
        out.push('\n');
        out
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classification: {}", self.classification)?;
        writeln!(f, "line-invariant: {}", self.is_line_invariant)?;
        match &self.magic_constant {
            Some(c) => writeln!(f, "magic constant: {c}")?,
            None => writeln!(f, "magic constant: none")?,
        }
        writeln!(f, "constant labeling: {}", self.is_constant_labeling)?;
        writeln!(f, "injective: {}", self.is_injective)?;
        match &self.witness {
            Some(Witness::LinePair { l, m }) => {
                write!(f, "witness: lines {l} and {m} have sums {} and {}",
                    self.line_sums[*l], self.line_sums[*m])
            }
            Some(Witness::PointCollision { a, b }) => {
                write!(f, "witness: points {a} and {b} share a value")
            }
            None => write!(f, "witness: none"),
        }
    }
}
