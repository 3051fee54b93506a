//! Classification into the low-order quotients of the solvable filtration.
//!
//! String links form a group under stacking, filtered by the n-solvable
//! subgroups indexed by half-integers. This module computes everything the
//! filtration sees at its lowest levels:
//!
//! * level -0.5: the pairwise linking numbers ([`classify_linking`]);
//! * level 0: once the linking numbers vanish, the triple linking numbers,
//!   the Sato-Levine invariants mod 2, and the component Arf invariants
//!   ([`classify_zero`]). Joint vanishing of these characterizes 0-solvable
//!   links, and that characterization is taken here as the working
//!   definition of 0-solvability;
//! * level 0.5: the integer Sato-Levine invariants obstruct 0.5-solvability
//!   ([`verdict`]). A nonzero value certifies a link is not 0.5-solvable;
//!   zeros are inconclusive, so the verdict never claims 0.5-solvability.
//!
//! Coordinates are always listed in lexicographic order: pairs `(i,j)` with
//! `i < j`, triples `(x,y,z)` with `x < y < z`.

use std::fmt;

use crate::diagram::{twisted_hopf, StringLinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::{arf, component_knot, linking_number};
use crate::magnus::{milnor, report};

/// Pairs `(i,j)` with `1 <= i < j <= m` in lexicographic order.
pub fn strand_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Triples `(x,y,z)` with `1 <= x < y < z <= m` in lexicographic order.
pub fn strand_triples(m: usize) -> Vec<(usize, usize, usize)> {
    let mut triples = Vec::new();
    for x in 1..=m {
        for y in x + 1..=m {
            for z in y + 1..=m {
                triples.push((x, y, z));
            }
        }
    }
    triples
}

/// Image of a string link in the order-0 quotient of the filtration.
///
/// `triple` and `sl_mod2` are meaningful only when `lk` vanishes, so
/// [`classify_zero`] (the only constructor) refuses diagrams with nonzero
/// linking numbers and always stores an all-zero `lk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVector {
    /// `lk(K_i, K_j)` over pairs `i < j`.
    pub lk: Vec<i64>,
    /// `mu(xyz)` over triples `x < y < z`.
    pub triple: Vec<i64>,
    /// `mu(iijj) mod 2` over pairs `i < j`.
    pub sl_mod2: Vec<u8>,
    /// Arf invariants of the component knots, one per strand.
    pub arf: Vec<u8>,
}

impl ClassificationVector {
    pub fn num_strands(&self) -> usize {
        self.arf.len()
    }

    pub fn is_zero(&self) -> bool {
        self.lk.iter().all(|&v| v == 0)
            && self.triple.iter().all(|&v| v == 0)
            && self.sl_mod2.iter().all(|&v| v == 0)
            && self.arf.iter().all(|&v| v == 0)
    }

    /// Coordinate-wise sum: integer coordinates add, Z2 coordinates add
    /// mod 2. This is the group law the classification maps onto.
    pub fn plus(&self, other: &ClassificationVector) -> ClassificationVector {
        assert_eq!(
            self.num_strands(),
            other.num_strands(),
            "classification vectors of different strand counts"
        );
        ClassificationVector {
            lk: self.lk.iter().zip(&other.lk).map(|(a, b)| a + b).collect(),
            triple: self
                .triple
                .iter()
                .zip(&other.triple)
                .map(|(a, b)| a + b)
                .collect(),
            sl_mod2: self
                .sl_mod2
                .iter()
                .zip(&other.sl_mod2)
                .map(|(a, b)| (a + b) % 2)
                .collect(),
            arf: self
                .arf
                .iter()
                .zip(&other.arf)
                .map(|(a, b)| (a + b) % 2)
                .collect(),
        }
    }

    /// Coordinate-wise negation; the Z2 coordinates are 2-torsion and stay
    /// put.
    pub fn negated(&self) -> ClassificationVector {
        ClassificationVector {
            lk: self.lk.iter().map(|v| -v).collect(),
            triple: self.triple.iter().map(|v| -v).collect(),
            sl_mod2: self.sl_mod2.clone(),
            arf: self.arf.clone(),
        }
    }

    /// One labeled line per coordinate, in the documented order.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let m = self.num_strands();
        let mut out = String::new();
        for ((i, j), v) in strand_pairs(m).into_iter().zip(&self.lk) {
            writeln!(out, "lk {} = {v}", index_label(&[i, j])).unwrap();
        }
        for ((x, y, z), v) in strand_triples(m).into_iter().zip(&self.triple) {
            writeln!(out, "mu {} = {v}", index_label(&[x, y, z])).unwrap();
        }
        for ((i, j), v) in strand_pairs(m).into_iter().zip(&self.sl_mod2) {
            writeln!(out, "sl {} = {v}", index_label(&[i, j])).unwrap();
        }
        for (i, v) in (1..=m).zip(&self.arf) {
            writeln!(out, "arf {i} = {v}").unwrap();
        }
        out
    }
}

impl fmt::Display for ClassificationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn index_label(index: &[usize]) -> String {
    if index.iter().all(|&i| i <= 9) {
        index.iter().map(|i| i.to_string()).collect()
    } else {
        let parts: Vec<String> = index.iter().map(|i| i.to_string()).collect();
        parts.join(" ")
    }
}

/// Where a diagram sits in the bottom of the filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolvabilityLevel {
    /// Some pairwise linking number is nonzero.
    NotLinkingTrivial,
    /// Linking numbers vanish but some order-0 invariant does not.
    LinkingTrivialNot0Solvable,
    /// Every invariant of [`classify_zero`] vanishes.
    ZeroSolvable,
}

/// Solvability verdict together with the obstruction one level up.
///
/// `obstruction_to_half` holds the integer Sato-Levine invariants over pairs
/// `i < j` whenever the linking numbers vanish (and is empty otherwise). Any
/// nonzero entry certifies the link is not 0.5-solvable; an all-zero vector
/// decides nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvabilityVerdict {
    pub level: SolvabilityLevel,
    pub obstruction_to_half: Vec<i64>,
}

impl fmt::Display for SolvabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.level)?;
        if self.obstruction_to_half.is_empty() {
            return Ok(());
        }
        let values: Vec<String> = self
            .obstruction_to_half
            .iter()
            .map(|v| v.to_string())
            .collect();
        let values = values.join(",");
        if self.obstruction_to_half.iter().any(|&v| v != 0) {
            write!(f, "; not 0.5-solvable (SL = {values})")
        } else {
            write!(f, "; 0.5-obstruction inconclusive (SL = {values})")
        }
    }
}

/// Pairwise linking numbers over pairs `i < j`, the image in the first
/// quotient of the filtration. Additive under stacking.
pub fn classify_linking(d: &StringLinkDiagram) -> Vec<i64> {
    strand_pairs(d.num_strands())
        .into_iter()
        .map(|(i, j)| linking_number(d, i, j).expect("enumerated pairs are in range"))
        .collect()
}

fn zero_level_data(d: &StringLinkDiagram) -> Result<(ClassificationVector, Vec<i64>)> {
    let m = d.num_strands();
    let pairs = strand_pairs(m);
    for &(i, j) in &pairs {
        let value = linking_number(d, i, j)?;
        if value != 0 {
            return Err(Error::NonVanishingLinking {
                i,
                j,
                value,
                what: "classify_zero",
            });
        }
    }
    let r = report(d)?;
    let triple = strand_triples(m)
        .into_iter()
        .map(|(x, y, z)| r.get(&[x, y, z]).expect("report covers all triples"))
        .collect();
    let sato_levine: Vec<i64> = pairs
        .iter()
        .map(|&(i, j)| r.get(&[i, i, j, j]).expect("report covers all pairs"))
        .collect();
    let sl_mod2 = sato_levine.iter().map(|v| v.rem_euclid(2) as u8).collect();
    let mut arfs = Vec::with_capacity(m);
    for i in 1..=m {
        arfs.push(arf(&component_knot(d, i)?)?.value());
    }
    let vector = ClassificationVector {
        lk: vec![0; pairs.len()],
        triple,
        sl_mod2,
        arf: arfs,
    };
    Ok((vector, sato_levine))
}

/// Order-0 classification of a linking-trivial diagram: triple linking
/// numbers, Sato-Levine invariants mod 2, and component Arf invariants.
/// Errors with [`Error::NonVanishingLinking`] when some `lk(K_i, K_j) != 0`.
///
/// The diagram is 0-solvable (for the characterization this crate computes)
/// exactly when the result [`ClassificationVector::is_zero`].
pub fn classify_zero(d: &StringLinkDiagram) -> Result<ClassificationVector> {
    Ok(zero_level_data(d)?.0)
}

/// Full classification of a 2-strand diagram in `Z2 + Z2 + Z2 + Z`, as
/// `(arf(K1), arf(K2), mu(1122) mod 2, lk)`.
///
/// When `lk != 0` the Sato-Levine coordinate is read off the
/// linking-corrected diagram `stack(d, twisted_hopf(-lk))`; mod 2 this is
/// independent of the correction, which makes the map a homomorphism under
/// stacking.
pub fn classify_full_2comp(d: &StringLinkDiagram) -> Result<(u8, u8, u8, i64)> {
    if d.num_strands() != 2 {
        return Err(Error::NotTwoStrands {
            num_strands: d.num_strands(),
        });
    }
    let lk = linking_number(d, 1, 2)?;
    let arf1 = arf(&component_knot(d, 1)?)?.value();
    let arf2 = arf(&component_knot(d, 2)?)?.value();
    let sl = if lk == 0 {
        milnor(d, &[1, 1, 2, 2])?
    } else {
        let corrected = d.stack(&twisted_hopf(-lk))?;
        milnor(&corrected, &[1, 1, 2, 2])?
    };
    Ok((arf1, arf2, sl.rem_euclid(2) as u8, lk))
}

/// Locate a diagram in the bottom of the filtration and report the
/// Sato-Levine obstruction to 0.5-solvability.
pub fn verdict(d: &StringLinkDiagram) -> Result<SolvabilityVerdict> {
    if classify_linking(d).iter().any(|&v| v != 0) {
        return Ok(SolvabilityVerdict {
            level: SolvabilityLevel::NotLinkingTrivial,
            obstruction_to_half: Vec::new(),
        });
    }
    let (vector, sato_levine) = zero_level_data(d)?;
    let level = if vector.is_zero() {
        SolvabilityLevel::ZeroSolvable
    } else {
        SolvabilityLevel::LinkingTrivialNot0Solvable
    };
    Ok(SolvabilityVerdict {
        level,
        obstruction_to_half: sato_levine,
    })
}
