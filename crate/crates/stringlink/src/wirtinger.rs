//! Wirtinger-style presentation of a string link complement.
//!
//! Arcs are maximal pieces of a strand between underpasses; the generator of
//! an arc is its meridian. Every crossing contributes the relation
//! `under_out = over^(-sign) * under_in * over^sign` where `sign` is the
//! orientation-corrected crossing sign: dragging the out-meridian back under
//! the over-strand to the in-side passes under it once, against the crossing
//! sign. The bottom arc of strand `i` is the base meridian `mu_i`, and the
//! zero-framed longitude of strand `i` opens with `mu_i^(-writhe)` and then
//! picks up `over^sign` at each underpass, read bottom to top. (Putting the
//! framing letters at the base meridian keeps the element independent of
//! where the compensating twists sit along the strand.)

use crate::diagram::StringLinkDiagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcGenerator {
    pub id: usize,
    /// Strand the arc belongs to, 1-based.
    pub strand: usize,
    /// Position of the arc along its strand; 0 is the bottom arc.
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRelation {
    /// Index of the crossing in the diagram's event list.
    pub event: usize,
    pub under_in: ArcGenerator,
    pub under_out: ArcGenerator,
    pub over: ArcGenerator,
    pub sign: i8,
}

/// A word in free-group generators, stored as `(generator id, exponent)`
/// letters with exponent +1 or -1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn new() -> FreeWord {
        FreeWord::default()
    }

    pub fn push(&mut self, generator: usize, exponent: i8) {
        debug_assert!(exponent == 1 || exponent == -1);
        self.letters.push((generator, exponent));
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent `g g^-1` pairs until none remain.
    pub fn reduced(&self) -> FreeWord {
        let mut letters: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            match letters.last() {
                Some(&(h, f)) if h == g && f == -e => {
                    letters.pop();
                }
                _ => letters.push((g, e)),
            }
        }
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Total exponent of `generator` in the word.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|&&(g, _)| g == generator)
            .map(|&(_, e)| i64::from(e))
            .sum()
    }
}

impl std::fmt::Display for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct WirtingerPresentation {
    pub num_strands: usize,
    pub generators: Vec<ArcGenerator>,
    pub relations: Vec<CrossingRelation>,
    /// Base meridian (bottom arc) per strand.
    pub base_meridians: Vec<ArcGenerator>,
    /// Zero-framed longitude per strand, as a word in the arc generators.
    pub longitudes: Vec<FreeWord>,
    /// Self-crossing sign sum per strand.
    pub writhes: Vec<i64>,
}

impl WirtingerPresentation {
    pub fn longitude(&self, i: usize) -> Result<&FreeWord> {
        self.longitudes
            .get(i - 1)
            .ok_or(Error::StrandOutOfRange {
                strand: i,
                num_strands: self.num_strands,
            })
    }

    /// Strand that `generator` belongs to.
    pub fn strand_of(&self, generator: usize) -> usize {
        self.generators[generator].strand
    }

    /// Relations along strand `s` in arc order: entry `t` rewrites arc `t+1`
    /// as a conjugate of arc `t`.
    pub fn chain(&self, s: usize) -> Vec<&CrossingRelation> {
        let mut chain: Vec<&CrossingRelation> = self
            .relations
            .iter()
            .filter(|r| r.under_in.strand == s)
            .collect();
        chain.sort_by_key(|r| r.under_in.order);
        chain
    }

    /// Text dump (`gen` / `rel` / `lng` records) for golden-file tests.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for g in &self.generators {
            writeln!(out, "gen g{} strand {} arc {}", g.id, g.strand, g.order).unwrap();
        }
        for r in &self.relations {
            writeln!(
                out,
                "rel e{}: g{} = g{}^{} g{} g{}^{}",
                r.event,
                r.under_out.id,
                r.over.id,
                -r.sign,
                r.under_in.id,
                r.over.id,
                r.sign,
            )
            .unwrap();
        }
        for (i, l) in self.longitudes.iter().enumerate() {
            writeln!(out, "lng {}: {}", i + 1, l).unwrap();
        }
        out
    }
}

/// Builds the presentation of a valid string link diagram. Deterministic:
/// equal event words give identical enumerations.
pub fn presentation(d: &StringLinkDiagram) -> WirtingerPresentation {
    let labeling = d.labeling();
    let m = d.num_strands();

    // Arcs per strand: one more than the number of underpasses.
    let mut arc_counts = vec![1usize; m];
    for c in &labeling.crossings {
        arc_counts[c.under_strand - 1] += 1;
    }
    let mut offsets = vec![0usize; m];
    for s in 1..m {
        offsets[s] = offsets[s - 1] + arc_counts[s - 1];
    }
    let arc = |strand: usize, order: usize| ArcGenerator {
        id: offsets[strand - 1] + order,
        strand,
        order,
    };

    let mut generators = Vec::with_capacity(offsets[m - 1] + arc_counts[m - 1]);
    for s in 1..=m {
        for t in 0..arc_counts[s - 1] {
            generators.push(arc(s, t));
        }
    }
    let base_meridians: Vec<ArcGenerator> = (1..=m).map(|s| arc(s, 0)).collect();

    let relations: Vec<CrossingRelation> = labeling
        .crossings
        .iter()
        .map(|c| CrossingRelation {
            event: c.event,
            under_in: arc(c.under_strand, c.under_arc),
            under_out: arc(c.under_strand, c.under_arc + 1),
            over: arc(c.over_strand, c.over_arc),
            sign: c.sign,
        })
        .collect();

    let mut longitudes = Vec::with_capacity(m);
    for s in 1..=m {
        let mut word = FreeWord::new();
        let w = labeling.writhes[s - 1];
        let exponent = if w > 0 { -1 } else { 1 };
        for _ in 0..w.unsigned_abs() {
            word.push(arc(s, 0).id, exponent);
        }
        for &(ci, over) in &labeling.strand_visits[s - 1] {
            if over {
                continue;
            }
            let c = &labeling.crossings[ci];
            word.push(arc(c.over_strand, c.over_arc).id, c.sign);
        }
        longitudes.push(word);
    }

    WirtingerPresentation {
        num_strands: m,
        generators,
        relations,
        base_meridians,
        longitudes,
        writhes: labeling.writhes.clone(),
    }
}

/// Zero-framed longitude of strand `i`.
pub fn longitude(d: &StringLinkDiagram, i: usize) -> Result<FreeWord> {
    if i == 0 || i > d.num_strands() {
        return Err(Error::StrandOutOfRange {
            strand: i,
            num_strands: d.num_strands(),
        });
    }
    Ok(presentation(d).longitudes.swap_remove(i - 1))
}
