//! Named self-checks, runnable as a suite.
//!
//! Each check re-derives a concrete identity the classification rests on
//! (the order-2 non-splitting obstruction, 0-solvability of commutators,
//! triple-linking realization) and returns a [`CheckResult`] whose
//! transcript records every value entering the verdict. [`run_all`] strings
//! the fixed checks together with randomized property suites over a seeded
//! diagram corpus; it is deterministic given the seed.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{
    borromean, braid_generator_a, figure_eight_component, trivial, twisted_hopf, whitehead,
    StringLinkDiagram,
};
use crate::error::{Error, Result};
use crate::filtration::{
    classify_full_2comp, classify_linking, classify_zero, verdict, SolvabilityLevel,
};
use crate::invariants::{
    arf, component_knot, conway, conway_randomized, linking_number, sato_levine,
    SATO_LEVINE_CONWAY_SIGN,
};
use crate::magnus::{milnor, report, report_with_truncation, DEFAULT_TRUNCATION};
use crate::textio::write_diagram;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// `(quantity label, value)` lines; every value used in the verdict
    /// appears here, and failing lines are marked `[FAIL]`.
    pub transcript: Vec<(String, String)>,
}

impl CheckResult {
    fn new(name: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: true,
            transcript: Vec::new(),
        }
    }

    fn record(&mut self, label: impl Into<String>, value: impl fmt::Display) {
        self.transcript.push((label.into(), value.to_string()));
    }

    fn require(&mut self, label: impl Into<String>, value: impl fmt::Display, ok: bool) {
        let rendered = if ok {
            value.to_string()
        } else {
            format!("{value} [FAIL]")
        };
        self.transcript.push((label.into(), rendered));
        self.passed &= ok;
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{}: {}", self.name, if self.passed { "pass" } else { "FAIL" }).unwrap();
        for (label, value) in &self.transcript {
            writeln!(out, "  {label} = {value}").unwrap();
        }
        out
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn seq<T: fmt::Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Seeded corpus generator. Linking-trivial diagrams are products of lk-0
/// blocks: Whitehead insertions (either chirality), commutators of pure
/// braid words, and conjugates of both; arbitrary 2-strand diagrams mix in
/// twists and knotted split components.
pub struct DiagramSampler {
    rng: ChaCha8Rng,
}

impl DiagramSampler {
    pub fn new(seed: u64) -> DiagramSampler {
        DiagramSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Random pure-braid word: a product of `letters` generators `A_ij^±1`.
    pub fn pure_braid(&mut self, m: usize, letters: usize) -> StringLinkDiagram {
        let mut d = trivial(m);
        for _ in 0..letters {
            let i = self.rng.gen_range(1..m);
            let j = self.rng.gen_range(i + 1..=m);
            let g = braid_generator_a(m, i, j).expect("sampled pair is in range");
            let g = if self.rng.gen_bool(0.5) { g.inverse() } else { g };
            d = d.stack(&g).expect("equal strand counts");
        }
        d
    }

    fn lk0_block(&mut self, m: usize) -> StringLinkDiagram {
        let block = match self.rng.gen_range(0..4) {
            0 => whitehead(m).expect("m >= 2"),
            1 => whitehead(m).expect("m >= 2").mirror(),
            2 => {
                let x = self.pure_braid(m, 1);
                let letters = self.rng.gen_range(1..=2);
                let y = self.pure_braid(m, letters);
                x.commutator(&y).expect("equal strand counts")
            }
            _ => {
                let u = self.pure_braid(m, 1);
                u.stack(&whitehead(m).expect("m >= 2"))
                    .and_then(|d| d.stack(&u.inverse()))
                    .expect("equal strand counts")
            }
        };
        if self.rng.gen_bool(0.5) {
            block.inverse()
        } else {
            block
        }
    }

    /// Linking-trivial `m`-strand diagram: a product of `blocks` lk-0
    /// blocks (every block has vanishing pairwise linking numbers, so the
    /// product does too).
    pub fn linking_trivial(&mut self, m: usize, blocks: usize) -> StringLinkDiagram {
        let mut d = trivial(m);
        for _ in 0..blocks {
            let block = self.lk0_block(m);
            d = d.stack(&block).expect("equal strand counts");
        }
        d
    }

    /// Linking-trivial 2-strand diagram with at most `max_crossings`
    /// crossings.
    pub fn linking_trivial_capped(&mut self, blocks: usize, max_crossings: usize) -> StringLinkDiagram {
        loop {
            let d = self.linking_trivial(2, blocks);
            if d.crossing_count() <= max_crossings {
                return d;
            }
        }
    }

    /// Arbitrary 2-strand diagram: lk-0 blocks mixed with twists and a
    /// knotted split component.
    pub fn two_strand(&mut self, blocks: usize) -> StringLinkDiagram {
        let mut d = trivial(2);
        for _ in 0..blocks {
            let block = match self.rng.gen_range(0..4) {
                0 | 1 => self.lk0_block(2),
                2 => twisted_hopf(self.rng.gen_range(-2..=2)),
                _ => StringLinkDiagram::new(2, figure_eight_component().events().to_vec())
                    .expect("spectator strand keeps the diagram valid"),
            };
            d = d.stack(&block).expect("equal strand counts");
        }
        d
    }
}

/// Whitehead-signature obstruction on a supplied diagram: pairwise linking
/// numbers vanish, `mu(1122)` is odd, and the double of the diagram has
/// trivial order-0 classification. Odd Sato-Levine plus order two is the
/// non-splitting obstruction: a class of order 2 always has even doubled
/// Sato-Levine invariant, so no homomorphic section can reproduce it.
pub fn check_nonsplitting_obstruction_on(d: &StringLinkDiagram) -> CheckResult {
    let mut out = CheckResult::new("nonsplitting_obstruction");
    let lkv = classify_linking(d);
    let lk_ok = lkv.iter().all(|&v| v == 0);
    out.require("lk(W)", seq(&lkv), lk_ok);
    if !lk_ok {
        out.record("sl(W)", "skipped (nonzero linking)");
        return out;
    }
    let sl = sato_levine(d, 1, 2).expect("linking numbers vanish");
    out.require("sl(W)", sl, sl.rem_euclid(2) == 1);
    let doubled = d.stack(d).expect("equal strand counts");
    let class = classify_zero(&doubled).expect("linking numbers vanish");
    out.require("classify_zero(W*W) is zero", class.is_zero(), class.is_zero());
    let sl2 = sato_levine(&doubled, 1, 2).expect("linking numbers vanish");
    out.require("sl(W*W)", sl2, sl2 == 2 * sl);
    out.require("sl(W*W) mod 2", sl2.rem_euclid(2), sl2.rem_euclid(2) == 0);
    out
}

/// The non-splitting obstruction run on the `m`-strand Whitehead fixture
/// and its mirror; the fixture value `sl = +1` is pinned exactly.
pub fn check_nonsplitting_obstruction_3_1(m: usize) -> CheckResult {
    let name = format!("nonsplitting_obstruction_3_1(m={m})");
    let w = match whitehead(m) {
        Ok(w) => w,
        Err(e) => {
            let mut out = CheckResult::new(name);
            out.require("whitehead(m)", e, false);
            return out;
        }
    };
    let mut out = check_nonsplitting_obstruction_on(&w);
    out.name = name;
    let sl = sato_levine(&w, 1, 2).expect("fixture is linking-trivial");
    out.require("sl(W) exactly", sl, sl == 1);
    let mirror = w.mirror();
    let slm = sato_levine(&mirror, 1, 2).expect("mirror is linking-trivial");
    out.require("sl(mirror W)", slm, slm == -1 && slm.rem_euclid(2) == 1);
    out
}

/// Commutators land in the 0-solvable class: for linking-trivial `J`, `J'`
/// and twists `n`, `n'`, the commutator of `P = J * T_n` and `P' = J' *
/// T_n'` has vanishing linking numbers, vanishing component Arf invariants,
/// even Sato-Levine invariant, and verdict `ZeroSolvable`.
///
/// The twists slide through everything (the full twist is central) and the
/// Sato-Levine contributions of `J` and `J'` cancel against their inverses,
/// so the commutator's `mu(1122)` is zero exactly, not just even.
pub fn check_commutator_4_2(
    j: &StringLinkDiagram,
    j_prime: &StringLinkDiagram,
    n: i64,
    n_prime: i64,
) -> Result<CheckResult> {
    for d in [j, j_prime] {
        if d.num_strands() != 2 {
            return Err(Error::NotTwoStrands {
                num_strands: d.num_strands(),
            });
        }
        let lk = linking_number(d, 1, 2)?;
        if lk != 0 {
            return Err(Error::NonVanishingLinking {
                i: 1,
                j: 2,
                value: lk,
                what: "check_commutator_4_2",
            });
        }
    }
    let mut out = CheckResult::new(format!("commutator_4_2(n={n},n'={n_prime})"));
    let sl_j = sato_levine(j, 1, 2)?;
    let sl_jp = sato_levine(j_prime, 1, 2)?;
    out.record("sl(J)", sl_j);
    out.record("sl(J')", sl_jp);
    out.record("2*(sl(J)+sl(J')) mod 2", (2 * (sl_j + sl_jp)).rem_euclid(2));
    let p = j.stack(&twisted_hopf(n))?;
    let p_prime = j_prime.stack(&twisted_hopf(n_prime))?;
    let c = p.commutator(&p_prime)?;
    out.record("crossings([P,P'])", c.crossing_count());
    let lk_c = linking_number(&c, 1, 2)?;
    out.require("lk([P,P'])", lk_c, lk_c == 0);
    for i in 1..=2 {
        let a = arf(&component_knot(&c, i)?)?.value();
        out.require(format!("arf(component {i})"), a, a == 0);
    }
    let mu = milnor(&c, &[1, 1, 2, 2])?;
    out.record("mu 1122 ([P,P'])", mu);
    out.require("mu 1122 ([P,P']) mod 2", mu.rem_euclid(2), mu.rem_euclid(2) == 0);
    let v = verdict(&c)?;
    out.require(
        "verdict([P,P'])",
        format!("{:?}", v.level),
        v.level == SolvabilityLevel::ZeroSolvable,
    );
    Ok(out)
}

/// Triple-linking realization: for linking-trivial 3-strand `K12`, `K23`,
/// the commutator of `L12 = K12 * A12` and `L23 = K23 * A23` has
/// `mu(123) = 1` exactly -- the `K` factors contribute nothing (their
/// commutators with anything linking-trivial have vanishing triple linking
/// numbers), so the value is carried entirely by the bare clasp commutator,
/// which is the [`borromean`] fixture. A nonzero triple linking number
/// certifies the commutator is not 0-solvable.
///
/// The clasps enter the commutator in the fixture's order (`A23` first);
/// the opposite order realizes the mirror value `-1`.
pub fn check_nonsplitting_4_4(
    k12: &StringLinkDiagram,
    k23: &StringLinkDiagram,
) -> Result<CheckResult> {
    for d in [k12, k23] {
        if d.num_strands() != 3 {
            return Err(Error::StrandOutOfRange {
                strand: 3,
                num_strands: d.num_strands(),
            });
        }
        let lkv = classify_linking(d);
        if let Some(idx) = lkv.iter().position(|&v| v != 0) {
            let (i, j) = crate::filtration::strand_pairs(3)[idx];
            return Err(Error::NonVanishingLinking {
                i,
                j,
                value: lkv[idx],
                what: "check_nonsplitting_4_4",
            });
        }
    }
    let mut out = CheckResult::new("nonsplitting_4_4");
    let a12 = braid_generator_a(3, 1, 2)?;
    let a23 = braid_generator_a(3, 2, 3)?;

    let anchor = milnor(&borromean(), &[1, 2, 3])?;
    out.require("mu 123 (borromean)", anchor, anchor == 1);

    // Intermediate vanishing identities: commutators with no clasp content
    // have trivial length-3 invariants.
    for (label, c) in [
        ("[K23,K12]", k23.commutator(k12)?),
        ("[K23,A12]", k23.commutator(&a12)?),
        ("[A23,K12]", a23.commutator(k12)?),
    ] {
        let r = report(&c)?;
        let triples: Vec<i64> = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
            .iter()
            .map(|idx| r.get(idx).expect("report covers length-3 indices"))
            .collect();
        out.require(
            format!("mu xyz ({label})"),
            seq(&triples),
            triples.iter().all(|&v| v == 0),
        );
    }

    let l12 = k12.stack(&a12)?;
    let l23 = k23.stack(&a23)?;
    let c = l23.commutator(&l12)?;
    out.record("crossings([L23,L12])", c.crossing_count());
    let mu = milnor(&c, &[1, 2, 3])?;
    out.require("mu 123 ([L23,L12])", mu, mu == 1);
    let v = verdict(&c)?;
    out.require(
        "verdict([L23,L12])",
        format!("{:?}", v.level),
        v.level == SolvabilityLevel::LinkingTrivialNot0Solvable,
    );
    Ok(out)
}

const SALT_4_2: u64 = 0x42;
const SALT_4_4: u64 = 0x44;
const SALT_HOM: u64 = 0x2c;
const SALT_ADD: u64 = 0xadd;
const SALT_INV: u64 = 0x111;
const SALT_CONJ: u64 = 0xc0;
const SALT_TRUNC: u64 = 0x7c;
const SALT_CANCEL: u64 = 0xce;
const SALT_ORACLE: u64 = 0x0a;
const SALT_SKEIN: u64 = 0x55;

/// `check_commutator_4_2` over `samples` random linking-trivial pairs and
/// twists.
pub fn check_commutator_4_2_random(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_4_2);
    let mut out = CheckResult::new("commutator_4_2_random");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let j = sampler.linking_trivial(2, 1);
        let j_prime = sampler.linking_trivial(2, 1);
        let n = sampler.rng.gen_range(-3..=3);
        let n_prime = sampler.rng.gen_range(-3..=3);
        let sub = check_commutator_4_2(&j, &j_prime, n, n_prime)
            .expect("sampled diagrams are linking-trivial");
        if !sub.passed {
            failures += 1;
            out.record(format!("sample {k} J"), write_diagram(&j).replace('\n', "; "));
            out.record(format!("sample {k} J'"), write_diagram(&j_prime).replace('\n', "; "));
            for (label, value) in &sub.transcript {
                out.record(format!("sample {k} {label}"), value);
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// `check_nonsplitting_4_4` over `samples` random linking-trivial 3-strand
/// pairs.
pub fn check_nonsplitting_4_4_random(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_4_4);
    let mut out = CheckResult::new("nonsplitting_4_4_random");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let k12 = sampler.linking_trivial(3, 1);
        let k23 = sampler.linking_trivial(3, 1);
        let sub = check_nonsplitting_4_4(&k12, &k23).expect("sampled diagrams are linking-trivial");
        if !sub.passed {
            failures += 1;
            out.record(format!("sample {k} K12"), write_diagram(&k12).replace('\n', "; "));
            out.record(format!("sample {k} K23"), write_diagram(&k23).replace('\n', "; "));
            for (label, value) in &sub.transcript {
                out.record(format!("sample {k} {label}"), value);
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// The full 2-strand classification is a homomorphism: the class of
/// `stack(a, b)` is the coordinate-wise sum (mod 2 in the torsion
/// coordinates) of the classes of `a` and `b`.
pub fn check_full_classification_homomorphism(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_HOM);
    let mut out = CheckResult::new("full_2comp_homomorphism");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let blocks = sampler.rng.gen_range(1..=2);
        let a = sampler.two_strand(blocks);
        let b = sampler.two_strand(1);
        let ca = classify_full_2comp(&a).expect("sampled diagram");
        let cb = classify_full_2comp(&b).expect("sampled diagram");
        let cab = classify_full_2comp(&a.stack(&b).expect("equal strand counts"))
            .expect("sampled diagram");
        let want = (
            (ca.0 + cb.0) % 2,
            (ca.1 + cb.1) % 2,
            (ca.2 + cb.2) % 2,
            ca.3 + cb.3,
        );
        if cab != want {
            failures += 1;
            out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
            out.record(format!("sample {k} b"), write_diagram(&b).replace('\n', "; "));
            out.record(format!("sample {k} class(a)"), format!("{ca:?}"));
            out.record(format!("sample {k} class(b)"), format!("{cb:?}"));
            out.record(format!("sample {k} class(ab)"), format!("{cab:?}"));
            out.record(format!("sample {k} expected"), format!("{want:?}"));
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// Additivity of every reported `mu` value under stacking of
/// linking-trivial diagrams.
pub fn check_property_additivity(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_ADD);
    let mut out = CheckResult::new("additivity");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let m = if k % 3 == 0 { 3 } else { 2 };
        let a = sampler.linking_trivial(m, 1);
        let b = sampler.linking_trivial(m, 1);
        let ra = report(&a).expect("sampled diagram");
        let rb = report(&b).expect("sampled diagram");
        let rab = report(&a.stack(&b).expect("equal strand counts")).expect("sampled diagram");
        for (index, value) in rab.iter() {
            let want = ra.get(index).unwrap() + rb.get(index).unwrap();
            if value != want {
                failures += 1;
                out.record(
                    format!("sample {k} mu {index:?}"),
                    format!("{value} != {want}"),
                );
                out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
                out.record(format!("sample {k} b"), write_diagram(&b).replace('\n', "; "));
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// Every reported `mu` value negates under the string-link inverse, and
/// linking numbers negate on arbitrary diagrams.
pub fn check_property_inverse_negation(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_INV);
    let mut out = CheckResult::new("inverse_negation");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let m = if k % 3 == 0 { 3 } else { 2 };
        let a = sampler.linking_trivial(m, 1);
        let ra = report(&a).expect("sampled diagram");
        let ri = report(&a.inverse()).expect("sampled diagram");
        for (index, value) in ri.iter() {
            if value != -ra.get(index).unwrap() {
                failures += 1;
                out.record(
                    format!("sample {k} mu {index:?}"),
                    format!("{value} != -({})", ra.get(index).unwrap()),
                );
                out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
            }
        }
        let b = sampler.two_strand(2);
        let want: Vec<i64> = classify_linking(&b).iter().map(|v| -v).collect();
        if classify_linking(&b.inverse()) != want {
            failures += 1;
            out.record(format!("sample {k} lk(inverse)"), seq(&classify_linking(&b.inverse())));
            out.record(format!("sample {k} b"), write_diagram(&b).replace('\n', "; "));
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// The order-0 classification is invariant under conjugation by pure
/// braids; on 2 strands the integer Sato-Levine invariant is too (the
/// conjugator is a power of the central full twist).
pub fn check_property_conjugation(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_CONJ);
    let mut out = CheckResult::new("conjugation_invariance");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let m = if k % 3 == 0 { 3 } else { 2 };
        let a = sampler.linking_trivial(m, 1);
        let letters = sampler.rng.gen_range(1..=2);
        let u = sampler.pure_braid(m, letters);
        let conj = u
            .stack(&a)
            .and_then(|d| d.stack(&u.inverse()))
            .expect("equal strand counts");
        let base = classify_zero(&a).expect("sampled diagram is linking-trivial");
        let moved = classify_zero(&conj).expect("conjugation preserves linking triviality");
        if moved != base {
            failures += 1;
            out.record(format!("sample {k} classify_zero"), format!("{moved:?} != {base:?}"));
            out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
            out.record(format!("sample {k} u"), write_diagram(&u).replace('\n', "; "));
        }
        if m == 2 {
            let sl_a = sato_levine(&a, 1, 2).expect("linking-trivial");
            let sl_c = sato_levine(&conj, 1, 2).expect("linking-trivial");
            if sl_a != sl_c {
                failures += 1;
                out.record(format!("sample {k} sl"), format!("{sl_c} != {sl_a}"));
                out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// Reported `mu` values do not move when the truncation degree grows.
pub fn check_property_truncation_stability(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_TRUNC);
    let mut out = CheckResult::new("truncation_stability");
    out.record("seed", seed);
    out.record("samples", samples);
    out.record("q", format!("{} vs {}", DEFAULT_TRUNCATION, DEFAULT_TRUNCATION + 1));
    let mut failures = 0usize;
    for k in 0..samples {
        let m = if k % 10 == 0 { 3 } else { 2 };
        let a = sampler.linking_trivial(m, 1);
        let base = report_with_truncation(&a, DEFAULT_TRUNCATION).expect("sampled diagram");
        let slack = report_with_truncation(&a, DEFAULT_TRUNCATION + 1).expect("sampled diagram");
        for (index, value) in base.iter() {
            if slack.get(index).unwrap() != value {
                failures += 1;
                out.record(
                    format!("sample {k} mu {index:?}"),
                    format!("{} != {value}", slack.get(index).unwrap()),
                );
                out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// Every reported `mu` value of `stack(a, inverse(a))` vanishes and the
/// verdict is `ZeroSolvable`.
pub fn check_property_stack_inverse(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_CANCEL);
    let mut out = CheckResult::new("stack_inverse_vanishing");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let a = match k % 3 {
            0 => sampler.two_strand(1),
            1 => sampler.linking_trivial(3, 1),
            _ => sampler.pure_braid(3, 2),
        };
        let c = a.stack(&a.inverse()).expect("equal strand counts");
        let r = report(&c).expect("sampled diagram");
        let mut bad = false;
        for (index, value) in r.iter() {
            if value != 0 {
                bad = true;
                out.record(format!("sample {k} mu {index:?}"), value);
            }
        }
        let v = verdict(&c).expect("commutator with inverse is linking-trivial");
        if v.level != SolvabilityLevel::ZeroSolvable {
            bad = true;
            out.record(format!("sample {k} verdict"), format!("{:?}", v.level));
        }
        if bad {
            failures += 1;
            out.record(format!("sample {k} a"), write_diagram(&a).replace('\n', "; "));
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// Cross-oracle comparison on one linking-trivial 2-strand diagram: the
/// Magnus-expansion `mu(1122)` must match the degree-3 Conway coefficient
/// of the closure through [`SATO_LEVINE_CONWAY_SIGN`].
pub fn check_cross_oracle_on(d: &StringLinkDiagram) -> Result<CheckResult> {
    let mut out = CheckResult::new("cross_oracle(single)");
    let sl = sato_levine(d, 1, 2)?;
    let a3 = conway(&d.closure()).coefficient(3);
    out.record("mu 1122 (Magnus)", sl);
    out.record("a3(closure) (Conway)", a3);
    out.require(
        "mu 1122 == sign * a3",
        format!("{sl} vs {}", SATO_LEVINE_CONWAY_SIGN * a3),
        sl == SATO_LEVINE_CONWAY_SIGN * a3,
    );
    Ok(out)
}

/// Sato-Levine versus Conway on a random linking-trivial corpus, and
/// linking numbers versus `mu(ij)` on braided corpora with nonzero linking.
pub fn check_cross_oracle_conway(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_ORACLE);
    let mut out = CheckResult::new("cross_oracle_conway");
    out.record("seed", seed);
    out.record("samples", samples);
    out.record("sign", SATO_LEVINE_CONWAY_SIGN);
    let mut failures = 0usize;
    for k in 0..samples {
        let d = sampler.linking_trivial_capped(if k % 4 == 0 { 2 } else { 1 }, 30);
        let sub = check_cross_oracle_on(&d).expect("sampled diagram is linking-trivial");
        if !sub.passed {
            failures += 1;
            out.record(format!("sample {k} d"), write_diagram(&d).replace('\n', "; "));
            for (label, value) in &sub.transcript {
                out.record(format!("sample {k} {label}"), value);
            }
        }
        // Linking oracle on a corpus with nonzero linking numbers.
        let m = if k % 2 == 0 { 2 } else { 3 };
        let braid = sampler.pure_braid(m, 2);
        for (i, j) in crate::filtration::strand_pairs(m) {
            let lk = linking_number(&braid, i, j).expect("pairs in range");
            let forward = milnor(&braid, &[i, j]).expect("length-2 index");
            let backward = milnor(&braid, &[j, i]).expect("length-2 index");
            if lk != forward || lk != backward {
                failures += 1;
                out.record(
                    format!("sample {k} lk({i},{j})"),
                    format!("{lk} vs mu {forward}/{backward}"),
                );
                out.record(format!("sample {k} braid"), write_diagram(&braid).replace('\n', "; "));
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// The skein recursion reaches the same Conway polynomial regardless of
/// resolution order.
pub fn check_skein_determinism(seed: u64, samples: usize) -> CheckResult {
    let mut sampler = DiagramSampler::new(seed ^ SALT_SKEIN);
    let mut out = CheckResult::new("skein_determinism");
    out.record("seed", seed);
    out.record("samples", samples);
    let mut failures = 0usize;
    for k in 0..samples {
        let d = sampler.linking_trivial_capped(1, 20).closure();
        let base = conway(&d);
        for salt in 0..3u64 {
            let shuffled = conway_randomized(&d, seed ^ (k as u64) ^ salt);
            if shuffled != base {
                failures += 1;
                out.record(
                    format!("sample {k} order {salt}"),
                    format!("{shuffled:?} != {base:?}"),
                );
            }
        }
    }
    out.require("failures", failures, failures == 0);
    out
}

/// The whole suite: fixed theorem checks plus the randomized property
/// suites, deterministic for a given `seed`.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let w = whitehead(2).expect("two strands");
    let t = trivial(2);
    let mut results = vec![
        check_nonsplitting_obstruction_3_1(2),
        check_nonsplitting_obstruction_3_1(3),
    ];
    for (j, jp, n, np) in [(&w, &w, 1, -2), (&t, &t, 2, 5), (&w, &t, 0, 3)] {
        results.push(check_commutator_4_2(j, jp, n, np).expect("fixtures are linking-trivial"));
    }
    results.push(check_commutator_4_2_random(seed, 50));
    let t3 = trivial(3);
    let w3 = whitehead(3).expect("three strands");
    let b = borromean();
    let b_inv = b.inverse();
    for (k12, k23) in [(&t3, &t3), (&w3, &t3), (&b, &b_inv)] {
        results.push(check_nonsplitting_4_4(k12, k23).expect("fixtures are linking-trivial"));
    }
    results.push(check_nonsplitting_4_4_random(seed, 20));
    results.push(check_full_classification_homomorphism(seed, 200));
    results.push(check_property_additivity(seed, 100));
    results.push(check_property_inverse_negation(seed, 100));
    results.push(check_property_conjugation(seed, 100));
    results.push(check_property_truncation_stability(seed, 100));
    results.push(check_property_stack_inverse(seed, 100));
    results.push(check_cross_oracle_conway(seed, 100));
    results.push(check_skein_determinism(seed, 20));
    results
}
