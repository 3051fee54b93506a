//! Plain-text diagram files.
//!
//! A diagram file is a header line `strands <m>` followed by one event per
//! line, bottom to top:
//!
//! ```text
//! # positive Hopf clasp
//! strands 2
//! x 1 +
//! x 1 +
//! ```
//!
//! Events are `x <i> +`, `x <i> -`, `cup <i>`, `cap <i>` with 1-based slot
//! positions. Everything after `#` is a comment; blank lines are skipped.

use std::fmt::Write;

use crate::diagram::{ClosedDiagram, EventKind, MorseEvent, StringLinkDiagram};
use crate::error::{Error, Result};

/// Parse a diagram file. Syntax problems report the offending 1-based line;
/// a well-formed event list that fails slot or strand bookkeeping is
/// rejected by diagram validation instead.
pub fn parse_diagram(text: &str) -> Result<StringLinkDiagram> {
    let mut num_strands: Option<usize> = None;
    let mut events = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match num_strands {
            None => {
                if tokens.len() != 2 || tokens[0] != "strands" {
                    return Err(parse_error(line, "expected header `strands <m>`"));
                }
                let m: usize = tokens[1]
                    .parse()
                    .map_err(|_| parse_error(line, "strand count must be a positive integer"))?;
                if m == 0 {
                    return Err(parse_error(line, "strand count must be a positive integer"));
                }
                num_strands = Some(m);
            }
            Some(_) => events.push(parse_event(line, &tokens)?),
        }
    }
    let Some(m) = num_strands else {
        return Err(parse_error(text.lines().count().max(1), "missing `strands <m>` header"));
    };
    StringLinkDiagram::new(m, events)
}

fn parse_event(line: usize, tokens: &[&str]) -> Result<MorseEvent> {
    let position = |tok: &str| -> Result<usize> {
        let p: usize = tok
            .parse()
            .map_err(|_| parse_error(line, "position must be a positive integer"))?;
        if p == 0 {
            return Err(parse_error(line, "position must be a positive integer"));
        }
        Ok(p)
    };
    match tokens {
        ["x", pos, sign] => {
            let p = position(pos)?;
            match *sign {
                "+" => Ok(MorseEvent::crossing(p, 1)),
                "-" => Ok(MorseEvent::crossing(p, -1)),
                _ => Err(parse_error(line, "crossing sign must be `+` or `-`")),
            }
        }
        ["cup", pos] => Ok(MorseEvent::cup(position(pos)?)),
        ["cap", pos] => Ok(MorseEvent::cap(position(pos)?)),
        _ => Err(parse_error(
            line,
            "expected `x <i> +`, `x <i> -`, `cup <i>`, or `cap <i>`",
        )),
    }
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

/// Render a diagram in the file format; [`parse_diagram`] inverts this.
pub fn write_diagram(d: &StringLinkDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "strands {}", d.num_strands()).unwrap();
    write_events(&mut out, d.events());
    out
}

/// Renders a closed diagram in the same event syntax under a `closed` header.
/// These files document a closure; `parse_diagram` does not read them back,
/// since a closed diagram has no boundary strands to label.
pub fn write_closed_diagram(d: &ClosedDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "# closed diagram, {} components", d.component_count()).unwrap();
    writeln!(out, "closed").unwrap();
    write_events(&mut out, d.events());
    out
}

fn write_events(out: &mut String, events: &[MorseEvent]) {
    for e in events {
        match e.kind {
            EventKind::PositiveCrossing => writeln!(out, "x {} +", e.position).unwrap(),
            EventKind::NegativeCrossing => writeln!(out, "x {} -", e.position).unwrap(),
            EventKind::Cup => writeln!(out, "cup {}", e.position).unwrap(),
            EventKind::Cap => writeln!(out, "cap {}", e.position).unwrap(),
        }
    }
}
