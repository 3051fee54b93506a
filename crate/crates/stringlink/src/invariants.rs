//! Classical diagrammatic invariants: linking numbers from crossing signs,
//! the Conway polynomial by skein recursion, and Arf invariants of closed
//! components. Everything here is computed without the Magnus engine, so the
//! two pipelines can serve as independent oracles for each other.
//!
//! The skein recursion works against a descending template: components are
//! walked in a canonical order (lowest cup first, out of its left leg), and
//! a crossing is *bad* when its first visit passes under. A diagram with no
//! bad crossings is an unlink. Switching a bad crossing makes it good and
//! changes nothing else (the walk ignores signs), and smoothing removes a
//! crossing, so the recursion terminates for any choice of bad crossing —
//! which is what makes the randomized confluence check meaningful.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{ClosedDiagram, EventKind, MorseEvent, StringLinkDiagram};
use crate::error::{Error, Result};
use crate::magnus::milnor;

/// Global sign relating `mu(iijj)` to the degree-3 Conway coefficient of the
/// closure on 2-component diagrams with vanishing linking number. Fixed once
/// by the Whitehead fixture (`sato_levine = +1`, `nabla(closure) = -z^3`).
pub const SATO_LEVINE_CONWAY_SIGN: i64 = -1;

/// Integer polynomial in `z`, sparse by degree. No zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: BTreeMap<usize, i64>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    pub fn one() -> IntPolynomial {
        let mut p = IntPolynomial::default();
        p.coefficients.insert(0, 1);
        p
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (&d, &c) in &other.coefficients {
            let entry = out.coefficients.entry(d).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.coefficients.remove(&d);
            }
        }
        out
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> IntPolynomial {
        let coefficients = if k == 0 {
            BTreeMap::new()
        } else {
            self.coefficients
                .iter()
                .map(|(&d, &c)| (d, c * k))
                .collect()
        };
        IntPolynomial { coefficients }
    }

    /// Multiplication by `z^k`.
    pub fn shifted(&self, k: usize) -> IntPolynomial {
        IntPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&d, &c)| (d + k, c))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coefficients.iter().map(|(&d, &c)| (d, c))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (&d, &c)) in self.coefficients.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*z")?,
                _ => write!(f, "{a}*z^{d}")?,
            }
        }
        Ok(())
    }
}

/// An element of Z_2, carrying an Arf invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArfValue(u8);

impl ArfValue {
    pub fn new(value: u8) -> ArfValue {
        ArfValue(value & 1)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn plus(self, other: ArfValue) -> ArfValue {
        ArfValue(self.0 ^ other.0)
    }
}

impl fmt::Display for ArfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Half the signed count of crossings between strands `i` and `j`.
pub fn linking_number(d: &StringLinkDiagram, i: usize, j: usize) -> Result<i64> {
    let m = d.num_strands();
    for s in [i, j] {
        if s == 0 || s > m {
            return Err(Error::StrandOutOfRange {
                strand: s,
                num_strands: m,
            });
        }
    }
    if i == j {
        return Err(Error::UnsupportedIndex { index: vec![i, j] });
    }
    Ok(d.labeling().linking_number(i, j))
}

/// One crossing of a closed diagram, as seen by the canonical walk.
struct SkeinCrossing {
    event: usize,
    position: usize,
    positive: bool,
    /// Walk rank of the first visit; `bad` crossings sort by this.
    first_rank: usize,
    slash_upward: bool,
    backslash_upward: bool,
}

/// Walks the diagram and returns its component count plus the bad crossings
/// (first visit passes under) in walk order.
fn survey(events: &[MorseEvent]) -> (usize, Vec<SkeinCrossing>) {
    let d = ClosedDiagram::new(events.to_vec())
        .expect("skein transforms preserve closed-diagram validity");
    let (_, trace) = d.trace();
    let components = trace.visits.len();

    struct Seen {
        first_rank: usize,
        first_slash: bool,
        slash_upward: bool,
        backslash_upward: bool,
    }
    let mut seen: HashMap<usize, Seen> = HashMap::new();
    let mut rank = 0usize;
    for visits in &trace.visits {
        for v in visits {
            let entry = seen.entry(v.event).or_insert(Seen {
                first_rank: rank,
                first_slash: v.slash,
                slash_upward: false,
                backslash_upward: false,
            });
            if v.slash {
                entry.slash_upward = v.upward;
            } else {
                entry.backslash_upward = v.upward;
            }
            rank += 1;
        }
    }

    let mut bad: Vec<SkeinCrossing> = Vec::new();
    for (k, e) in events.iter().enumerate() {
        if !e.is_crossing() {
            continue;
        }
        let s = &seen[&k];
        let positive = e.kind == EventKind::PositiveCrossing;
        // The over piece is the slash for positive crossings, the backslash
        // for negative ones.
        let first_over = s.first_slash == positive;
        if !first_over {
            bad.push(SkeinCrossing {
                event: k,
                position: e.position,
                positive,
                first_rank: s.first_rank,
                slash_upward: s.slash_upward,
                backslash_upward: s.backslash_upward,
            });
        }
    }
    bad.sort_by_key(|c| c.first_rank);
    (components, bad)
}

fn conway_events(
    events: Vec<MorseEvent>,
    memo: &mut HashMap<Vec<MorseEvent>, IntPolynomial>,
    choose: &mut dyn FnMut(usize) -> usize,
) -> IntPolynomial {
    if let Some(p) = memo.get(&events) {
        return p.clone();
    }
    let (components, bad) = survey(&events);
    let result = if bad.is_empty() {
        // Descending diagram: an unlink.
        if components == 1 {
            IntPolynomial::one()
        } else {
            IntPolynomial::zero()
        }
    } else {
        let b = &bad[choose(bad.len())];
        let mut switched = events.clone();
        switched[b.event] = MorseEvent::crossing(b.position, if b.positive { -1 } else { 1 });
        let mut smoothed = events.clone();
        if b.slash_upward == b.backslash_upward {
            // Parallel strands: the oriented smoothing uncrosses them.
            smoothed.remove(b.event);
        } else {
            // Antiparallel: the smoothing turns both strands around.
            smoothed.splice(
                b.event..=b.event,
                [MorseEvent::cap(b.position), MorseEvent::cup(b.position)],
            );
        }
        let s = conway_events(switched, memo, choose);
        let t = conway_events(smoothed, memo, choose).shifted(1);
        // nabla(L+) - nabla(L-) = z * nabla(L0)
        if b.positive {
            s.add(&t)
        } else {
            s.sub(&t)
        }
    };
    memo.insert(events, result.clone());
    result
}

/// Conway polynomial of a closed diagram by memoized skein recursion against
/// the descending template.
pub fn conway(d: &ClosedDiagram) -> IntPolynomial {
    let mut memo = HashMap::new();
    conway_events(d.events().to_vec(), &mut memo, &mut |_| 0)
}

/// [`conway`] with the bad crossing picked at random each step. Confluence
/// of the skein recursion makes the result independent of the seed.
pub fn conway_randomized(d: &ClosedDiagram, seed: u64) -> IntPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut memo = HashMap::new();
    conway_events(d.events().to_vec(), &mut memo, &mut |n| {
        rng.gen_range(0..n)
    })
}

/// Closure of strand `i` alone, every other strand deleted.
pub fn component_knot(d: &StringLinkDiagram, i: usize) -> Result<ClosedDiagram> {
    if i == 0 || i > d.num_strands() {
        return Err(Error::StrandOutOfRange {
            strand: i,
            num_strands: d.num_strands(),
        });
    }
    Ok(d.keep_strands(&[i]).closure())
}

/// Arf invariant of a knot: the degree-2 Conway coefficient mod 2.
pub fn arf(k: &ClosedDiagram) -> Result<ArfValue> {
    let components = k.component_count();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(ArfValue::new(conway(k).coefficient(2).rem_euclid(2) as u8))
}

/// Sato-Levine invariant `mu(iijj)`; needs `lk(i,j) = 0`.
pub fn sato_levine(d: &StringLinkDiagram, i: usize, j: usize) -> Result<i64> {
    let lk = linking_number(d, i, j)?;
    if lk != 0 {
        return Err(Error::NonVanishingLinking {
            i,
            j,
            value: lk,
            what: "sato_levine",
        });
    }
    milnor(d, &[i, i, j, j])
}

/// Triple linking number `mu(ijk)`; needs all pairwise linking numbers among
/// the three strands to vanish.
pub fn triple_linking(d: &StringLinkDiagram, i: usize, j: usize, k: usize) -> Result<i64> {
    for (a, b) in [(i, j), (i, k), (j, k)] {
        let lk = linking_number(d, a, b)?;
        if lk != 0 {
            return Err(Error::NonVanishingLinking {
                i: a,
                j: b,
                value: lk,
                what: "triple_linking",
            });
        }
    }
    milnor(d, &[i, j, k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{
        borromean, braid_closure, figure_eight_component, trivial, twisted_hopf, whitehead,
    };

    fn poly(coeffs: &[(usize, i64)]) -> IntPolynomial {
        let mut p = IntPolynomial::zero();
        for &(d, c) in coeffs {
            p = p.add(&IntPolynomial::one().scale(c).shifted(d));
        }
        p
    }

    #[test]
    fn conway_unknot_is_one() {
        let u = braid_closure(1, &[]).unwrap();
        assert_eq!(conway(&u), IntPolynomial::one());
    }

    #[test]
    fn conway_unlinks_vanish() {
        for m in 2..=4 {
            assert!(conway(&trivial(m).closure()).is_zero());
        }
    }

    #[test]
    fn conway_hopf_is_z() {
        assert_eq!(conway(&twisted_hopf(1).closure()), poly(&[(1, 1)]));
        assert_eq!(conway(&twisted_hopf(-1).closure()), poly(&[(1, -1)]));
    }

    #[test]
    fn conway_trefoil() {
        let t = braid_closure(2, &[(1, 1), (1, 1), (1, 1)]).unwrap();
        assert_eq!(conway(&t), poly(&[(0, 1), (2, 1)]));
        let mirror = braid_closure(2, &[(1, -1), (1, -1), (1, -1)]).unwrap();
        assert_eq!(conway(&mirror), poly(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn conway_figure_eight() {
        let f = figure_eight_component().closure();
        assert_eq!(conway(&f), poly(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn conway_whitehead_closure_has_unit_a3() {
        let w = whitehead(2).unwrap().closure();
        let p = conway(&w);
        assert_eq!(p.coefficient(1), 0);
        assert_eq!(p.coefficient(3).abs(), 1);
        println!("nabla(whitehead closure) = {p}");
    }

    #[test]
    fn conway_twisted_hopf_reads_linking_in_a1() {
        for n in -3..=3i64 {
            let p = conway(&twisted_hopf(n).closure());
            assert_eq!(p.coefficient(1), n, "a1 of T_{n}");
        }
    }

    #[test]
    fn skein_recursion_is_confluent_on_fixtures() {
        let fixtures = [
            twisted_hopf(2).closure(),
            braid_closure(2, &[(1, 1), (1, 1), (1, 1)]).unwrap(),
            figure_eight_component().closure(),
            whitehead(2).unwrap().closure(),
            borromean().closure(),
        ];
        for d in &fixtures {
            let reference = conway(d);
            for seed in 0..6 {
                assert_eq!(conway_randomized(d, seed), reference);
            }
        }
    }

    #[test]
    fn component_knots_of_fixtures_are_unknots() {
        let w = whitehead(2).unwrap();
        for i in 1..=2 {
            let k = component_knot(&w, i).unwrap();
            assert_eq!(conway(&k), IntPolynomial::one());
        }
        let b = borromean();
        for i in 1..=3 {
            let k = component_knot(&b, i).unwrap();
            assert_eq!(conway(&k), IntPolynomial::one());
        }
    }

    #[test]
    fn component_knot_extracts_a_stacked_figure_eight() {
        // Figure-eight pattern on strand 1, with a spectator strand appended
        // at the far right.
        let events = figure_eight_component().events().to_vec();
        let d = crate::diagram::StringLinkDiagram::new(2, events).unwrap();
        assert_eq!(
            conway(&component_knot(&d, 1).unwrap()),
            poly(&[(0, 1), (2, -1)])
        );
        assert_eq!(conway(&component_knot(&d, 2).unwrap()), IntPolynomial::one());
    }

    #[test]
    fn linking_number_matches_milnor_on_fixtures() {
        let fixtures = [
            trivial(2),
            twisted_hopf(3),
            twisted_hopf(-2),
            whitehead(2).unwrap(),
        ];
        for d in &fixtures {
            assert_eq!(
                linking_number(d, 1, 2).unwrap(),
                milnor(d, &[1, 2]).unwrap()
            );
        }
        assert_eq!(linking_number(&twisted_hopf(3), 1, 2).unwrap(), 3);
        assert_eq!(linking_number(&whitehead(2).unwrap(), 1, 2).unwrap(), 0);
    }

    #[test]
    fn linking_number_rejects_bad_indices() {
        let d = trivial(2);
        assert!(matches!(
            linking_number(&d, 1, 1),
            Err(Error::UnsupportedIndex { .. })
        ));
        assert!(matches!(
            linking_number(&d, 1, 3),
            Err(Error::StrandOutOfRange { .. })
        ));
    }

    #[test]
    fn arf_values_of_small_knots() {
        let u = braid_closure(1, &[]).unwrap();
        assert_eq!(arf(&u).unwrap().value(), 0);
        let t = braid_closure(2, &[(1, 1), (1, 1), (1, 1)]).unwrap();
        assert_eq!(arf(&t).unwrap().value(), 1);
        let f = figure_eight_component().closure();
        assert_eq!(arf(&f).unwrap().value(), 1);
    }

    #[test]
    fn arf_rejects_links() {
        let h = twisted_hopf(1).closure();
        assert!(matches!(
            arf(&h),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn arf_is_additive_under_stacking_knots() {
        let f = figure_eight_component();
        let ff = f.stack(&f).unwrap();
        assert_eq!(arf(&ff.closure()).unwrap().value(), 0);
        let fff = ff.stack(&f).unwrap();
        assert_eq!(arf(&fff.closure()).unwrap().value(), 1);
    }

    #[test]
    fn sato_levine_fixture_values() {
        assert_eq!(sato_levine(&whitehead(2).unwrap(), 1, 2).unwrap(), 1);
        assert_eq!(sato_levine(&trivial(2), 1, 2).unwrap(), 0);
        match sato_levine(&twisted_hopf(2), 1, 2) {
            Err(Error::NonVanishingLinking {
                i: 1,
                j: 2,
                value: 2,
                ..
            }) => {}
            other => panic!("expected linking precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn triple_linking_fixture_values() {
        assert_eq!(triple_linking(&borromean(), 1, 2, 3).unwrap(), 1);
        let clasp = crate::diagram::braid_generator_a(3, 1, 2).unwrap();
        match triple_linking(&clasp, 1, 2, 3) {
            Err(Error::NonVanishingLinking {
                i: 1,
                j: 2,
                value: 1,
                ..
            }) => {}
            other => panic!("expected linking precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn sato_levine_matches_conway_a3_on_whitehead() {
        let w = whitehead(2).unwrap();
        let sl = sato_levine(&w, 1, 2).unwrap();
        let a3 = conway(&w.closure()).coefficient(3);
        assert_eq!(sl, SATO_LEVINE_CONWAY_SIGN * a3);
        let m = w.mirror();
        let sl_m = sato_levine(&m, 1, 2).unwrap();
        let a3_m = conway(&m.closure()).coefficient(3);
        assert_eq!(sl_m, SATO_LEVINE_CONWAY_SIGN * a3_m);
        assert_eq!(sl_m, -sl);
    }

    #[test]
    fn polynomial_display_format() {
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[(0, 1), (2, 1)]).to_string(), "1 + 1*z^2");
        assert_eq!(poly(&[(0, 1), (2, -1)]).to_string(), "1 - 1*z^2");
        assert_eq!(poly(&[(1, 1)]).to_string(), "1*z");
        assert_eq!(poly(&[(1, -3), (4, 2)]).to_string(), "-3*z + 2*z^4");
    }
}
