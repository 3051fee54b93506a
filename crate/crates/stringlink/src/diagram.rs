//! Morse-word diagrams of string links and closed links.
//!
//! A diagram is a sequence of events read bottom to top. At every height the
//! diagram occupies a list of *slots* numbered from 1 at the left. A crossing
//! at position `p` exchanges the strands in slots `p` and `p+1`, a cup inserts
//! two new slots at position `p` (a local minimum), and a cap joins the
//! strands in slots `p` and `p+1` (a local maximum). A string link on `m`
//! strands starts and ends with `m` slots and connects bottom endpoint `i` to
//! top endpoint `i`.
//!
//! Crossing signs follow the right-handed convention: in a
//! [`EventKind::PositiveCrossing`] the strand running from bottom-left to
//! top-right passes over, which for upward-oriented strands is a +1 crossing.
//! The positive Hopf clasp `twisted_hopf(1)` has linking number +1.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    /// The strand from bottom-left to top-right passes over.
    PositiveCrossing,
    /// The strand from bottom-right to top-left passes over.
    NegativeCrossing,
    /// Local minimum: two new slots appear.
    Cup,
    /// Local maximum: two adjacent slots are joined and disappear.
    Cap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MorseEvent {
    pub kind: EventKind,
    /// 1-based slot position the event acts on.
    pub position: usize,
}

impl MorseEvent {
    pub fn crossing(position: usize, sign: i8) -> MorseEvent {
        let kind = if sign >= 0 {
            EventKind::PositiveCrossing
        } else {
            EventKind::NegativeCrossing
        };
        MorseEvent { kind, position }
    }

    pub fn cup(position: usize) -> MorseEvent {
        MorseEvent {
            kind: EventKind::Cup,
            position,
        }
    }

    pub fn cap(position: usize) -> MorseEvent {
        MorseEvent {
            kind: EventKind::Cap,
            position,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(
            self.kind,
            EventKind::PositiveCrossing | EventKind::NegativeCrossing
        )
    }
}

/// A violation found while checking an event word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Event position does not fit the slot count at its height.
    PositionOutOfRange {
        event: usize,
        position: usize,
        slots: usize,
    },
    /// Slot count at the top differs from the boundary count.
    SlotCountMismatch { expected: usize, actual: usize },
    /// Bottom endpoint `strand` does not reach top endpoint `strand`.
    NonIdentityPermutation { strand: usize, reached: String },
    /// A component with no boundary endpoints (forbidden in string links).
    ClosedComponent { event: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::PositionOutOfRange {
                event,
                position,
                slots,
            } => write!(
                f,
                "event {event}: position {position} out of range for {slots} slots"
            ),
            Violation::SlotCountMismatch { expected, actual } => {
                write!(f, "diagram ends with {actual} slots, expected {expected}")
            }
            Violation::NonIdentityPermutation { strand, reached } => {
                write!(f, "strand {strand} ends at {reached}, expected top {strand}")
            }
            Violation::ClosedComponent { event } => {
                write!(f, "closed component through cup at event {event}")
            }
        }
    }
}

/// A string link diagram on `m >= 1` strands. Constructed values are always
/// valid: slot bookkeeping is consistent, every bottom endpoint `i` connects
/// to top endpoint `i`, and there are no closed components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringLinkDiagram {
    num_strands: usize,
    events: Vec<MorseEvent>,
}

/// A closed link diagram: an event word with empty bottom and top boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedDiagram {
    events: Vec<MorseEvent>,
}

/// Checks an event word against the string-link invariants and reports every
/// violation found. An empty list means the word is a valid diagram.
pub fn validate(num_strands: usize, events: &[MorseEvent]) -> Vec<Violation> {
    let sweep = Sweep::run(num_strands, events);
    let mut violations = sweep.violations.clone();
    if violations.is_empty() {
        let trace = Trace::strands(&sweep, events);
        for (strand, end) in trace.endpoints.iter().enumerate() {
            match end {
                TraceEnd::Top(j) if *j == strand + 1 => {}
                other => violations.push(Violation::NonIdentityPermutation {
                    strand: strand + 1,
                    reached: other.describe(),
                }),
            }
        }
        if let Some(event) = trace.unvisited_cup(&sweep, events) {
            violations.push(Violation::ClosedComponent { event });
        }
    }
    violations
}

impl StringLinkDiagram {
    /// Builds a diagram, rejecting invalid event words.
    pub fn new(num_strands: usize, events: Vec<MorseEvent>) -> Result<StringLinkDiagram> {
        if num_strands == 0 {
            return Err(Error::InvalidDiagram(vec![Violation::SlotCountMismatch {
                expected: 1,
                actual: 0,
            }]));
        }
        let violations = validate(num_strands, &events);
        if violations.is_empty() {
            Ok(StringLinkDiagram {
                num_strands,
                events,
            })
        } else {
            Err(Error::InvalidDiagram(violations))
        }
    }

    pub fn num_strands(&self) -> usize {
        self.num_strands
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Always empty for constructed diagrams; see the free function
    /// [`validate`] for checking raw event words.
    pub fn validate(&self) -> Vec<Violation> {
        validate(self.num_strands, &self.events)
    }

    /// Stacking: `self` below, `other` above. Both diagrams must have the
    /// same number of strands.
    pub fn stack(&self, other: &StringLinkDiagram) -> Result<StringLinkDiagram> {
        if self.num_strands != other.num_strands {
            return Err(Error::StrandOutOfRange {
                strand: other.num_strands,
                num_strands: self.num_strands,
            });
        }
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        Ok(StringLinkDiagram {
            num_strands: self.num_strands,
            events,
        })
    }

    /// The concordance-group inverse: reflect about the horizontal midline.
    /// Event order reverses, cups and caps swap, and crossings change sign
    /// (the reflected over-strand diagonal flips).
    pub fn inverse(&self) -> StringLinkDiagram {
        let events = self
            .events
            .iter()
            .rev()
            .map(|e| MorseEvent {
                kind: match e.kind {
                    EventKind::PositiveCrossing => EventKind::NegativeCrossing,
                    EventKind::NegativeCrossing => EventKind::PositiveCrossing,
                    EventKind::Cup => EventKind::Cap,
                    EventKind::Cap => EventKind::Cup,
                },
                position: e.position,
            })
            .collect();
        StringLinkDiagram {
            num_strands: self.num_strands,
            events,
        }
    }

    /// `stack(a, stack(b, stack(inverse(a), inverse(b))))`.
    pub fn commutator(&self, other: &StringLinkDiagram) -> Result<StringLinkDiagram> {
        self.stack(other)?
            .stack(&self.inverse())?
            .stack(&other.inverse())
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> StringLinkDiagram {
        let events = self
            .events
            .iter()
            .map(|e| MorseEvent {
                kind: match e.kind {
                    EventKind::PositiveCrossing => EventKind::NegativeCrossing,
                    EventKind::NegativeCrossing => EventKind::PositiveCrossing,
                    k => k,
                },
                position: e.position,
            })
            .collect();
        StringLinkDiagram {
            num_strands: self.num_strands,
            events,
        }
    }

    /// Joins top endpoint `i` to bottom endpoint `i` by parallel arcs routed
    /// around the right side, producing a closed diagram with `m` components.
    /// Component `i` of the result is the closure of strand `i`.
    pub fn closure(&self) -> ClosedDiagram {
        let m = self.num_strands;
        let mut events = Vec::with_capacity(self.events.len() + 2 * m);
        for p in 1..=m {
            events.push(MorseEvent::cup(p));
        }
        events.extend_from_slice(&self.events);
        for p in (1..=m).rev() {
            events.push(MorseEvent::cap(p));
        }
        ClosedDiagram::new(events).expect("closure of a valid string link is valid")
    }

    /// Labels every segment with its strand and orientation and derives the
    /// sign of every crossing.
    pub fn labeling(&self) -> StrandLabeling {
        let sweep = Sweep::run(self.num_strands, &self.events);
        let trace = Trace::strands(&sweep, &self.events);
        StrandLabeling::build(self, &trace)
    }

    /// The sub-diagram spanned by the strands in `keep` (1-based, strictly
    /// increasing). Kept strands are renumbered by rank.
    pub(crate) fn keep_strands(&self, keep: &[usize]) -> StringLinkDiagram {
        let labeling = self.labeling();
        let sweep = Sweep::run(self.num_strands, &self.events);
        let mut slots: Vec<usize> = sweep.bottom.clone();
        let kept = |wire: usize| keep.contains(&labeling.segments[wire].strand);
        let mut events = Vec::new();
        for (k, e) in self.events.iter().enumerate() {
            let p = e.position;
            let new_p = 1 + slots[..p - 1].iter().filter(|&&w| kept(w)).count();
            match e.kind {
                EventKind::PositiveCrossing | EventKind::NegativeCrossing => {
                    let (a, b) = (slots[p - 1], slots[p]);
                    if kept(a) && kept(b) {
                        events.push(MorseEvent {
                            kind: e.kind,
                            position: new_p,
                        });
                    }
                    slots[p - 1] = sweep.ports[k][Port::TL as usize].unwrap();
                    slots[p] = sweep.ports[k][Port::TR as usize].unwrap();
                }
                EventKind::Cup => {
                    let c = sweep.ports[k][Port::TL as usize].unwrap();
                    let d = sweep.ports[k][Port::TR as usize].unwrap();
                    if kept(c) {
                        events.push(MorseEvent {
                            kind: EventKind::Cup,
                            position: new_p,
                        });
                    }
                    slots.insert(p - 1, d);
                    slots.insert(p - 1, c);
                }
                EventKind::Cap => {
                    if kept(slots[p - 1]) {
                        events.push(MorseEvent {
                            kind: EventKind::Cap,
                            position: new_p,
                        });
                    }
                    slots.drain(p - 1..=p);
                }
            }
        }
        StringLinkDiagram::new(keep.len(), events)
            .expect("sub-diagram of a valid string link is valid")
    }
}

impl ClosedDiagram {
    pub fn new(events: Vec<MorseEvent>) -> Result<ClosedDiagram> {
        let sweep = Sweep::run(0, &events);
        if sweep.violations.is_empty() {
            Ok(ClosedDiagram { events })
        } else {
            Err(Error::InvalidDiagram(sweep.violations))
        }
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        let sweep = Sweep::run(0, &self.events);
        Trace::cycles(&sweep, &self.events).visits.len()
    }

    pub(crate) fn trace(&self) -> (Sweep, Trace) {
        let sweep = Sweep::run(0, &self.events);
        let trace = Trace::cycles(&sweep, &self.events);
        (sweep, trace)
    }
}

/// Per-segment and per-crossing labels of a string link diagram.
#[derive(Debug, Clone)]
pub struct StrandLabeling {
    pub num_strands: usize,
    /// One entry per segment (wire between consecutive event heights).
    pub segments: Vec<SegmentLabel>,
    /// One entry per crossing, in event order.
    pub crossings: Vec<LabeledCrossing>,
    /// Sum of self-crossing signs per strand.
    pub writhes: Vec<i64>,
    /// Ordered crossing visits along each strand: `(crossing index, over?)`.
    pub strand_visits: Vec<Vec<(usize, bool)>>,
}

#[derive(Debug, Clone, Copy)]
pub struct SegmentLabel {
    pub strand: usize,
    pub upward: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct LabeledCrossing {
    /// Index into the event list.
    pub event: usize,
    /// Orientation-corrected crossing sign.
    pub sign: i8,
    pub over_strand: usize,
    pub under_strand: usize,
    /// Arc ordinal (underpass count so far) of the over strand at this
    /// crossing, and of the incoming under arc. The outgoing under arc is
    /// `under_arc + 1`.
    pub over_arc: usize,
    pub under_arc: usize,
}

impl StrandLabeling {
    fn build(d: &StringLinkDiagram, trace: &Trace) -> StrandLabeling {
        let num_strands = d.num_strands;
        let segments = trace
            .wire_label
            .iter()
            .map(|l| {
                let (strand, upward) = l.expect("valid diagram traces every wire");
                SegmentLabel { strand, upward }
            })
            .collect::<Vec<_>>();

        // Pair up the two visits of each crossing.
        struct Half {
            strand: usize,
            upward: bool,
            arc: usize,
            over: bool,
        }
        let mut halves: Vec<[Option<Half>; 2]> = Vec::new();
        let mut crossing_index = vec![usize::MAX; d.events.len()];
        for (k, e) in d.events.iter().enumerate() {
            if e.is_crossing() {
                crossing_index[k] = halves.len();
                halves.push([None, None]);
            }
        }
        let mut strand_visits: Vec<Vec<(usize, bool)>> = vec![Vec::new(); num_strands];
        for (s0, visits) in trace.visits.iter().enumerate() {
            let mut arc = 0usize;
            for v in visits {
                let slash_over =
                    d.events[v.event].kind == EventKind::PositiveCrossing;
                let over = v.slash == slash_over;
                let ci = crossing_index[v.event];
                halves[ci][v.slash as usize] = Some(Half {
                    strand: s0 + 1,
                    upward: v.upward,
                    arc,
                    over,
                });
                strand_visits[s0].push((ci, over));
                if !over {
                    arc += 1;
                }
            }
        }

        let mut crossings = Vec::with_capacity(halves.len());
        let mut writhes = vec![0i64; num_strands];
        for (k, e) in d.events.iter().enumerate() {
            if !e.is_crossing() {
                continue;
            }
            let ci = crossing_index[k];
            let [backslash, slash] = &halves[ci];
            let (bs, slash) = (
                backslash.as_ref().expect("both pieces traced"),
                slash.as_ref().expect("both pieces traced"),
            );
            let (over, under) = if slash.over { (slash, bs) } else { (bs, slash) };
            let base: i8 = if e.kind == EventKind::PositiveCrossing {
                1
            } else {
                -1
            };
            let flip = |up: bool| if up { 1i8 } else { -1i8 };
            let sign = base * flip(over.upward) * flip(under.upward);
            if over.strand == under.strand {
                writhes[over.strand - 1] += i64::from(sign);
            }
            crossings.push(LabeledCrossing {
                event: k,
                sign,
                over_strand: over.strand,
                under_strand: under.strand,
                over_arc: over.arc,
                under_arc: under.arc,
            });
        }
        StrandLabeling {
            num_strands,
            segments,
            crossings,
            writhes,
            strand_visits,
        }
    }

    /// Pairwise linking number from signed crossing counts: half the sum of
    /// corrected signs over crossings between the two strands.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        let total: i64 = self
            .crossings
            .iter()
            .filter(|c| {
                (c.over_strand == i && c.under_strand == j)
                    || (c.over_strand == j && c.under_strand == i)
            })
            .map(|c| i64::from(c.sign))
            .sum();
        debug_assert_eq!(total % 2, 0, "inter-strand signed count is even");
        total / 2
    }
}

// ---------------------------------------------------------------------------
// Sweep: slot bookkeeping and the port graph.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Port {
    BL = 0,
    BR = 1,
    TL = 2,
    TR = 3,
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Attach {
    Bottom(usize),
    Top(usize),
    Event { event: usize, port: Port },
    Unset,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Wire {
    pub lower: Attach,
    pub upper: Attach,
}

pub(crate) struct Sweep {
    pub wires: Vec<Wire>,
    pub bottom: Vec<usize>,
    /// Wire attached at each port of each event, indexed `[event][port]`.
    pub ports: Vec<[Option<usize>; 4]>,
    pub violations: Vec<Violation>,
}

impl Sweep {
    pub fn run(boundary: usize, events: &[MorseEvent]) -> Sweep {
        let mut wires: Vec<Wire> = Vec::new();
        let mut ports: Vec<[Option<usize>; 4]> = vec![[None; 4]; events.len()];
        let mut violations = Vec::new();
        let mut slots: Vec<usize> = (0..boundary)
            .map(|i| {
                wires.push(Wire {
                    lower: Attach::Bottom(i + 1),
                    upper: Attach::Unset,
                });
                i
            })
            .collect();
        let bottom = slots.clone();

        for (k, e) in events.iter().enumerate() {
            let p = e.position;
            let ok = match e.kind {
                EventKind::Cup => p >= 1 && p <= slots.len() + 1,
                _ => p >= 1 && p + 1 <= slots.len(),
            };
            if !ok {
                violations.push(Violation::PositionOutOfRange {
                    event: k,
                    position: p,
                    slots: slots.len(),
                });
                continue;
            }
            match e.kind {
                EventKind::PositiveCrossing | EventKind::NegativeCrossing => {
                    let (a, b) = (slots[p - 1], slots[p]);
                    wires[a].upper = Attach::Event { event: k, port: Port::BL };
                    wires[b].upper = Attach::Event { event: k, port: Port::BR };
                    ports[k][Port::BL as usize] = Some(a);
                    ports[k][Port::BR as usize] = Some(b);
                    let c = wires.len();
                    wires.push(Wire {
                        lower: Attach::Event { event: k, port: Port::TL },
                        upper: Attach::Unset,
                    });
                    let d = wires.len();
                    wires.push(Wire {
                        lower: Attach::Event { event: k, port: Port::TR },
                        upper: Attach::Unset,
                    });
                    ports[k][Port::TL as usize] = Some(c);
                    ports[k][Port::TR as usize] = Some(d);
                    slots[p - 1] = c;
                    slots[p] = d;
                }
                EventKind::Cup => {
                    let c = wires.len();
                    wires.push(Wire {
                        lower: Attach::Event { event: k, port: Port::TL },
                        upper: Attach::Unset,
                    });
                    let d = wires.len();
                    wires.push(Wire {
                        lower: Attach::Event { event: k, port: Port::TR },
                        upper: Attach::Unset,
                    });
                    ports[k][Port::TL as usize] = Some(c);
                    ports[k][Port::TR as usize] = Some(d);
                    slots.insert(p - 1, d);
                    slots.insert(p - 1, c);
                }
                EventKind::Cap => {
                    let (a, b) = (slots[p - 1], slots[p]);
                    wires[a].upper = Attach::Event { event: k, port: Port::BL };
                    wires[b].upper = Attach::Event { event: k, port: Port::BR };
                    ports[k][Port::BL as usize] = Some(a);
                    ports[k][Port::BR as usize] = Some(b);
                    slots.drain(p - 1..=p);
                }
            }
        }

        for (i, &w) in slots.iter().enumerate() {
            wires[w].upper = Attach::Top(i + 1);
        }
        if slots.len() != boundary {
            violations.push(Violation::SlotCountMismatch {
                expected: boundary,
                actual: slots.len(),
            });
        }
        Sweep {
            wires,
            bottom,
            ports,
            violations,
        }
    }
}

// ---------------------------------------------------------------------------
// Trace: walk the 1-manifold, orienting every wire.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub(crate) struct Visit {
    pub event: usize,
    /// True if this visit traverses the bottom-left/top-right piece.
    pub slash: bool,
    pub upward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TraceEnd {
    Top(usize),
    Bottom(usize),
}

impl TraceEnd {
    fn describe(&self) -> String {
        match self {
            TraceEnd::Top(j) => format!("top {j}"),
            TraceEnd::Bottom(j) => format!("bottom {j}"),
        }
    }
}

pub(crate) struct Trace {
    /// `(strand-or-component, upward)` per wire; 1-based labels.
    pub wire_label: Vec<Option<(usize, bool)>>,
    /// Ordered crossing visits per strand or component.
    pub visits: Vec<Vec<Visit>>,
    /// Where each boundary strand ends (string links only).
    pub endpoints: Vec<TraceEnd>,
}

impl Trace {
    /// Traces the `m` boundary strands of a string link.
    pub fn strands(sweep: &Sweep, events: &[MorseEvent]) -> Trace {
        let mut trace = Trace {
            wire_label: vec![None; sweep.wires.len()],
            visits: Vec::new(),
            endpoints: Vec::new(),
        };
        for (i, &start) in sweep.bottom.iter().enumerate() {
            let (visits, end) = trace.walk(sweep, events, start, true, i + 1, None);
            trace.visits.push(visits);
            trace
                .endpoints
                .push(end.expect("open strand reaches a boundary endpoint"));
        }
        trace
    }

    /// Traces all components of a closed diagram. Components are numbered in
    /// order of their lowest cup event; each is oriented upward out of the
    /// left leg of that cup.
    pub fn cycles(sweep: &Sweep, events: &[MorseEvent]) -> Trace {
        let mut trace = Trace {
            wire_label: vec![None; sweep.wires.len()],
            visits: Vec::new(),
            endpoints: Vec::new(),
        };
        for (k, e) in events.iter().enumerate() {
            if e.kind != EventKind::Cup {
                continue;
            }
            let start = sweep.ports[k][Port::TL as usize].expect("cup has wires");
            if trace.wire_label[start].is_some() {
                continue;
            }
            let component = trace.visits.len() + 1;
            let (visits, end) = trace.walk(sweep, events, start, true, component, Some(start));
            debug_assert!(end.is_none());
            trace.visits.push(visits);
        }
        trace
    }

    /// First unvisited cup, if any (a closed component inside a string link).
    fn unvisited_cup(&self, sweep: &Sweep, events: &[MorseEvent]) -> Option<usize> {
        events.iter().enumerate().find_map(|(k, e)| {
            let wire = sweep.ports[k].get(Port::TL as usize)?.as_ref()?;
            (e.kind == EventKind::Cup && self.wire_label[*wire].is_none()).then_some(k)
        })
    }

    fn walk(
        &mut self,
        sweep: &Sweep,
        events: &[MorseEvent],
        start: usize,
        start_upward: bool,
        label: usize,
        stop_wire: Option<usize>,
    ) -> (Vec<Visit>, Option<TraceEnd>) {
        let mut visits = Vec::new();
        let mut wire = start;
        let mut upward = start_upward;
        loop {
            self.wire_label[wire] = Some((label, upward));
            let attach = if upward {
                sweep.wires[wire].upper
            } else {
                sweep.wires[wire].lower
            };
            let (event, port) = match attach {
                Attach::Top(j) => return (visits, Some(TraceEnd::Top(j))),
                Attach::Bottom(j) => return (visits, Some(TraceEnd::Bottom(j))),
                Attach::Event { event, port } => (event, port),
                Attach::Unset => unreachable!("sweep attaches every wire end"),
            };
            // Crossings keep direction; cups and caps reverse it.
            let (sibling, next_upward) = if events[event].is_crossing() {
                match port {
                    Port::BL => {
                        visits.push(Visit { event, slash: true, upward: true });
                        (Port::TR, true)
                    }
                    Port::TR => {
                        visits.push(Visit { event, slash: true, upward: false });
                        (Port::BL, false)
                    }
                    Port::BR => {
                        visits.push(Visit { event, slash: false, upward: true });
                        (Port::TL, true)
                    }
                    Port::TL => {
                        visits.push(Visit { event, slash: false, upward: false });
                        (Port::BR, false)
                    }
                }
            } else {
                match port {
                    Port::BL => (Port::BR, false),
                    Port::BR => (Port::BL, false),
                    Port::TL => (Port::TR, true),
                    Port::TR => (Port::TL, true),
                }
            };
            wire = sweep.ports[event][sibling as usize].expect("port wired");
            upward = next_upward;
            if stop_wire == Some(wire) && upward == start_upward {
                return (visits, None);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Builders.
// ---------------------------------------------------------------------------

/// The trivial string link: `m` parallel strands, no events.
pub fn trivial(m: usize) -> StringLinkDiagram {
    StringLinkDiagram::new(m, Vec::new()).expect("trivial diagram is valid")
}

/// Diagram of a braid word. Letters are `(k, sign)` with `1 <= k < m` and
/// sign `+1` or `-1`. The induced strand permutation must be the identity;
/// non-pure words are rejected.
pub fn from_braid_word(m: usize, word: &[(usize, i8)]) -> Result<StringLinkDiagram> {
    let events = braid_events(m, word)?;
    StringLinkDiagram::new(m, events)
}

fn braid_events(m: usize, word: &[(usize, i8)]) -> Result<Vec<MorseEvent>> {
    word.iter()
        .map(|&(k, sign)| {
            if k == 0 || k >= m || (sign != 1 && sign != -1) {
                Err(Error::BadBraidLetter {
                    letter: k,
                    max: m.saturating_sub(1),
                })
            } else {
                Ok(MorseEvent::crossing(k, sign))
            }
        })
        .collect()
}

/// Closes braid strands `r+1..=k` around the right side, leaving the first
/// `r` strands open.
fn braid_partial_closure(k: usize, word: &[(usize, i8)], r: usize) -> Result<Vec<MorseEvent>> {
    let mut events: Vec<MorseEvent> = (r + 1..=k).map(MorseEvent::cup).collect();
    events.extend(braid_events(k, word)?);
    events.extend((r + 1..=k).rev().map(MorseEvent::cap));
    Ok(events)
}

/// Closed diagram of a braid word on `k` strands (plat-style closure around
/// the right; same link as the usual braid closure).
pub fn braid_closure(k: usize, word: &[(usize, i8)]) -> Result<ClosedDiagram> {
    ClosedDiagram::new(braid_partial_closure(k, word, 0)?)
}

/// The pure braid generator `A_{ij}` (`1 <= i < j <= m`): strand `j` is
/// brought down past the intermediate strands, clasps strand `i` with two
/// positive crossings, and returns. `lk(i,j) = 1`, all other pairs 0.
pub fn braid_generator_a(m: usize, i: usize, j: usize) -> Result<StringLinkDiagram> {
    if i == 0 || j <= i || j > m {
        return Err(Error::StrandOutOfRange {
            strand: j.max(i),
            num_strands: m,
        });
    }
    let mut word: Vec<(usize, i8)> = Vec::new();
    for k in (i + 1..j).rev() {
        word.push((k, 1));
    }
    word.push((i, 1));
    word.push((i, 1));
    for k in i + 1..j {
        word.push((k, -1));
    }
    from_braid_word(m, &word)
}

/// `n` full twists on two strands: `sigma_1^(2n)`. Linking number `n`.
/// `twisted_hopf(1)` is the positive Hopf clasp `T_1`.
pub fn twisted_hopf(n: i64) -> StringLinkDiagram {
    let sign = if n >= 0 { 1 } else { -1 };
    let word: Vec<(usize, i8)> = (0..2 * n.unsigned_abs()).map(|_| (1, sign)).collect();
    from_braid_word(2, &word).expect("full twists are pure")
}

/// Whitehead string link on strands 1 and 2 of `m >= 2` strands: linking
/// number zero, Sato-Levine invariant +1, both components unknotted.
pub fn whitehead(m: usize) -> Result<StringLinkDiagram> {
    if m < 2 {
        return Err(Error::StrandOutOfRange {
            strand: 2,
            num_strands: m,
        });
    }
    // Partial closure of a 3-braid whose closure is the Whitehead link;
    // strand 3 is closed off, strands 1 and 2 stay open. Extra strands sit
    // untouched to the right of the pattern. The sign choice pins
    // mu(1122) = +1; the mirror word gives the negative clasp.
    let word = [(2, 1), (1, -1), (2, 1), (2, 1), (1, -1)];
    let events = braid_partial_closure(3, &word, 2)?;
    StringLinkDiagram::new(m, events)
}

/// Borromean string link: the commutator of the clasps `A_23` and `A_12` on
/// three strands. This order of the clasps gives `mu(123) = +1`.
pub fn borromean() -> StringLinkDiagram {
    let a12 = from_braid_word(3, &[(1, 1), (1, 1)]).expect("pure");
    let a23 = from_braid_word(3, &[(2, 1), (2, 1)]).expect("pure");
    a23.commutator(&a12).expect("same strand count")
}

/// One-strand string link whose closure is the figure-eight knot.
pub fn figure_eight_component() -> StringLinkDiagram {
    let word = [(1, 1), (2, -1), (1, 1), (2, -1)];
    let events = braid_partial_closure(3, &word, 1).expect("letters in range");
    StringLinkDiagram::new(1, events).expect("partial closure of a knot braid is a string knot")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(p: usize, s: i8) -> MorseEvent {
        MorseEvent::crossing(p, s)
    }

    #[test]
    fn trivial_diagrams_validate() {
        for m in 1..=5 {
            let d = trivial(m);
            assert_eq!(d.num_strands(), m);
            assert!(d.validate().is_empty());
        }
    }

    #[test]
    fn cap_only_word_reports_slot_count() {
        let violations = validate(2, &[MorseEvent::cap(1)]);
        assert_eq!(
            violations,
            vec![Violation::SlotCountMismatch {
                expected: 2,
                actual: 0
            }]
        );
    }

    #[test]
    fn position_out_of_range_reported_per_event() {
        let violations = validate(2, &[x(2, 1), x(1, 1), x(1, 1)]);
        assert_eq!(
            violations[0],
            Violation::PositionOutOfRange {
                event: 0,
                position: 2,
                slots: 2
            }
        );
        assert_eq!(violations.len(), 1);
    }

    #[test]
    fn non_pure_braid_rejected() {
        let err = from_braid_word(2, &[(1, 1)]).unwrap_err();
        let Error::InvalidDiagram(violations) = err else {
            panic!("expected InvalidDiagram");
        };
        assert!(matches!(
            violations[0],
            Violation::NonIdentityPermutation { strand: 1, .. }
        ));
    }

    #[test]
    fn closed_loop_inside_string_link_rejected() {
        // A cup immediately capped next to two trivial strands.
        let events = vec![MorseEvent::cup(3), MorseEvent::cap(3)];
        let violations = validate(2, &events);
        assert_eq!(violations, vec![Violation::ClosedComponent { event: 0 }]);
    }

    #[test]
    fn hopf_clasp_linking_number() {
        let t1 = twisted_hopf(1);
        assert_eq!(t1.labeling().linking_number(1, 2), 1);
        assert_eq!(twisted_hopf(-1).labeling().linking_number(1, 2), -1);
        assert_eq!(twisted_hopf(3).labeling().linking_number(1, 2), 3);
    }

    #[test]
    fn braid_generator_linking_pattern() {
        for m in 2..=4 {
            for i in 1..m {
                for j in i + 1..=m {
                    let a = braid_generator_a(m, i, j).unwrap();
                    let labeling = a.labeling();
                    for x in 1..m {
                        for y in x + 1..=m {
                            let expected = i64::from(x == i && y == j);
                            assert_eq!(
                                labeling.linking_number(x, y),
                                expected,
                                "lk({x},{y}) of A_{i}{j} on {m} strands"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn borromean_matches_commutator_word() {
        let d = borromean();
        let expected: Vec<MorseEvent> = [
            x(2, 1),
            x(2, 1),
            x(1, 1),
            x(1, 1),
            x(2, -1),
            x(2, -1),
            x(1, -1),
            x(1, -1),
        ]
        .into();
        assert_eq!(d.events(), &expected[..]);
        let labeling = d.labeling();
        assert_eq!(labeling.linking_number(1, 2), 0);
        assert_eq!(labeling.linking_number(1, 3), 0);
        assert_eq!(labeling.linking_number(2, 3), 0);
    }

    #[test]
    fn whitehead_has_zero_linking() {
        for m in 2..=4 {
            let w = whitehead(m).unwrap();
            assert!(w.validate().is_empty());
            let labeling = w.labeling();
            for i in 1..m {
                for j in i + 1..=m {
                    assert_eq!(labeling.linking_number(i, j), 0, "lk({i},{j})");
                }
            }
        }
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let d = from_braid_word(2, &[(1, 1), (1, 1)]).unwrap();
        let inv = d.inverse();
        assert_eq!(inv.events(), &[x(1, -1), x(1, -1)]);
        assert_eq!(d.inverse().inverse(), d);
        let w = whitehead(2).unwrap();
        assert!(w.inverse().validate().is_empty());
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn stack_concatenates() {
        let a = twisted_hopf(1);
        let b = twisted_hopf(-1);
        let s = a.stack(&b).unwrap();
        assert_eq!(s.events().len(), 4);
        assert_eq!(s.labeling().linking_number(1, 2), 0);
    }

    #[test]
    fn closure_component_count() {
        assert_eq!(trivial(3).closure().component_count(), 3);
        assert_eq!(twisted_hopf(1).closure().component_count(), 2);
        assert_eq!(whitehead(2).unwrap().closure().component_count(), 2);
        assert_eq!(figure_eight_component().closure().component_count(), 1);
    }

    #[test]
    fn figure_eight_is_a_string_knot() {
        let d = figure_eight_component();
        assert_eq!(d.num_strands(), 1);
        assert!(d.validate().is_empty());
        assert_eq!(d.crossing_count(), 4);
    }

    #[test]
    fn whitehead_components_have_few_self_crossings() {
        let w = whitehead(2).unwrap();
        let labeling = w.labeling();
        let self_crossings = |s: usize| {
            labeling
                .crossings
                .iter()
                .filter(|c| c.over_strand == s && c.under_strand == s)
                .count()
        };
        assert_eq!(self_crossings(1) + self_crossings(2), 1);
        assert_eq!(labeling.crossings.len(), 5);
    }

    #[test]
    fn keep_strands_extracts_sub_diagram() {
        let b = borromean();
        for i in 1..=3 {
            let sub = b.keep_strands(&[i]);
            assert_eq!(sub.num_strands(), 1);
            // Each Borromean strand is unknotted and crossing-free on its own.
            assert_eq!(sub.crossing_count(), 0);
        }
        let pair = b.keep_strands(&[1, 3]);
        assert_eq!(pair.num_strands(), 2);
        assert_eq!(pair.labeling().linking_number(1, 2), 0);
    }

    #[test]
    fn writhe_counts_self_crossings() {
        let w = whitehead(2).unwrap();
        let labeling = w.labeling();
        let total: i64 = labeling.writhes.iter().sum();
        assert_eq!(total.abs(), 1, "single self-crossing clasp");
    }
}
