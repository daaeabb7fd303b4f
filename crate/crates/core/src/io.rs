//! graph6, signed records, and JSON reports.
//!
//! A signed record is one line, `"<graph6> <hexmask>"`. The mask carries one
//! bit per edge in lexicographic `(min, max)` order, most significant bit
//! first, `1` meaning negative, zero-padded to whole hex digits (at least one
//! digit). For example the all-negative `K4` is `"C~ FC"`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::classify::{NutReport, SignedClass};
use crate::error::ParseError;
use crate::graph::{Sign, SignedGraph};
use crate::search::{SearchOutcome, Verdict};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line into an all-positive graph. Orders up to 62 use the
/// one-byte form, larger orders the `~` + 3-byte form.
pub fn parse_graph6(line: &str) -> Result<SignedGraph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let offset0 = line.len() - body.len();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::InvalidByte { offset: offset0 + i, byte: b });
        }
    }
    let (n, start) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // 8-byte form (orders above 258047) is not supported
        return Err(ParseError::InvalidByte { offset: offset0 + 1, byte: 126 });
    } else {
        if bytes.len() < 4 {
            return Err(ParseError::BadLength { expected: 4, found: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, 4)
    };
    if n == 0 {
        return Err(ParseError::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(ParseError::BadLength { expected, found: bytes.len() });
    }
    let data = &bytes[start..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in bits..data.len() * 6 {
        if bit(pad) {
            return Err(ParseError::NonzeroPadding(offset0 + start + pad / 6));
        }
    }
    Ok(SignedGraph::new(n, edges).expect("decoded edges are simple"))
}

/// Encodes the underlying graph as graph6 (signs are ignored).
pub fn emit_graph6(g: &SignedGraph) -> Result<String, ParseError> {
    let n = g.order();
    if n == 0 {
        return Err(ParseError::EmptyGraph);
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    } else {
        return Err(ParseError::BadLength { expected: 258_047, found: n });
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(adjacent[i * n + j]);
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Hex sign mask, MSB-first over lexicographic edges.
pub fn sign_mask(g: &SignedGraph) -> String {
    let m = g.edge_count();
    let digits = m.div_ceil(4).max(1);
    let mut s = String::with_capacity(digits);
    for d in 0..digits {
        let nibble = (0..4).fold(0u32, |acc, b| {
            let idx = d * 4 + b;
            acc << 1 | u32::from(idx < m && g.signs()[idx].is_negative())
        });
        s.push(char::from_digit(nibble, 16).expect("nibble").to_ascii_uppercase());
    }
    s
}

/// `"<graph6> <hexmask>"`.
pub fn emit_signed(g: &SignedGraph) -> Result<String, ParseError> {
    Ok(format!("{} {}", emit_graph6(g)?, sign_mask(g)))
}

/// Parses `"<graph6> <hexmask>"`. Longer masks are accepted as long as the
/// bits past the edge count are zero.
pub fn parse_signed(line: &str) -> Result<SignedGraph, ParseError> {
    let mut fields = line.split_whitespace();
    let g6 = fields.next().ok_or(ParseError::Empty)?;
    let mask = fields.next().ok_or(ParseError::MissingMask)?;
    if let Some(extra) = fields.next() {
        return Err(ParseError::Trailing(extra.to_string()));
    }
    let g = parse_graph6(g6)?;
    let mask_offset = line.find(mask).unwrap_or(0);
    let m = g.edge_count();
    let mut bits = Vec::with_capacity(mask.len() * 4);
    for (i, ch) in mask.chars().enumerate() {
        let d = ch.to_digit(16).ok_or(ParseError::InvalidHex { offset: mask_offset + i, ch })?;
        bits.extend((0..4).rev().map(|b| d >> b & 1 == 1));
    }
    if bits.len() < m {
        return Err(ParseError::MaskTooShort { bits: bits.len(), edges: m });
    }
    if let Some(stray) = bits[m..].iter().position(|&b| b) {
        return Err(ParseError::StrayMaskBit(m + stray));
    }
    let signs = bits[..m].iter().map(|&b| Sign::from_negative(b)).collect();
    Ok(g.with_edge_signs(signs).expect("one sign per edge"))
}

/// Report schema version.
pub const SCHEMA_VERSION: u32 = 1;

fn big_ints<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    let v = v.as_ref().expect("skipped when absent");
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let num: serde_json::Number = x.to_string().parse().expect("integer literal");
        seq.serialize_element(&num)?;
    }
    seq.end()
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    record: Option<String>,
    order: usize,
    edge_count: usize,
    degree_profile: &'a [usize],
    connected: bool,
    nullity: usize,
    is_singular: bool,
    is_core: bool,
    is_nut: bool,
    signed_class: SignedClass,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_ints")]
    kernel_vector: &'a Option<Vec<BigInt>>,
}

/// JSON object for a classification report, optionally tagged with the
/// signed record it came from.
pub fn report_json(r: &NutReport, record: Option<&str>) -> String {
    let view = ReportJson {
        schema: SCHEMA_VERSION,
        record: record.map(str::to_string),
        order: r.order,
        edge_count: r.edge_count,
        degree_profile: &r.degree_profile,
        connected: r.connected,
        nullity: r.nullity,
        is_singular: r.is_singular,
        is_core: r.is_core,
        is_nut: r.is_nut,
        signed_class: r.signed_class,
        kernel_vector: &r.kernel_vector,
    };
    serde_json::to_string(&view).expect("report serializes")
}

/// One-line text form of a report: `key=value` fields separated by spaces.
pub fn report_line(r: &NutReport) -> String {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
    let mut s = format!(
        "n={} m={} nullity={} singular={} core={} nut={} connected={} class={} degrees={}",
        r.order,
        r.edge_count,
        r.nullity,
        r.is_singular,
        r.is_core,
        r.is_nut,
        r.connected,
        r.signed_class.as_str(),
        join(&mut r.degree_profile.iter().map(ToString::to_string)),
    );
    if let Some(x) = &r.kernel_vector {
        let _ = write!(s, " kernel={}", join(&mut x.iter().map(ToString::to_string)));
    }
    s
}

#[derive(Serialize)]
struct WitnessJson {
    graph_index: usize,
    mask: u64,
    record: String,
    #[serde(flatten)]
    report: serde_json::Value,
}

#[derive(Serialize)]
struct GraphErrorJson<'a> {
    graph_index: usize,
    message: &'a str,
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    schema: u32,
    order: usize,
    degree: usize,
    graphs_scanned: u64,
    signings_tested: u64,
    nut_signings: u64,
    unsigned_nut_found: bool,
    proper_nut_found: bool,
    exhaustive: bool,
    verdict: &'a str,
    witnesses: Vec<WitnessJson>,
    errors: Vec<GraphErrorJson<'a>>,
}

/// JSON object for a search outcome.
pub fn outcome_json(o: &SearchOutcome) -> String {
    let witnesses = o
        .witnesses
        .iter()
        .map(|w| {
            let record = emit_signed(&w.graph).expect("witness has vertices");
            let mut report: serde_json::Value =
                serde_json::from_str(&report_json(&w.report, None)).expect("valid json");
            if let Some(obj) = report.as_object_mut() {
                obj.remove("schema");
            }
            WitnessJson {
                graph_index: w.graph_index,
                mask: w.mask,
                record,
                report,
            }
        })
        .collect();
    let view = OutcomeJson {
        schema: SCHEMA_VERSION,
        order: o.order,
        degree: o.degree,
        graphs_scanned: o.graphs_scanned,
        signings_tested: o.signings_tested,
        nut_signings: o.nut_signings,
        unsigned_nut_found: o.unsigned_nut_found,
        proper_nut_found: o.proper_nut_found,
        exhaustive: o.exhaustive,
        verdict: o.verdict.as_str(),
        witnesses,
        errors: o
            .errors
            .iter()
            .map(|e| GraphErrorJson {
                graph_index: e.graph_index,
                message: &e.message,
            })
            .collect(),
    };
    serde_json::to_string(&view).expect("outcome serializes")
}

/// Human-readable summary of a search outcome.
pub fn outcome_text(o: &SearchOutcome) -> String {
    let mut s = format!(
        "n={} rho={} graphs={} signings={} nuts={} verdict={} symbol={}\n",
        o.order,
        o.degree,
        o.graphs_scanned,
        o.signings_tested,
        o.nut_signings,
        o.verdict.as_str(),
        o.verdict.symbol(o.order, o.degree),
    );
    for w in &o.witnesses {
        let _ = writeln!(
            s,
            "witness graph={} {} {}",
            w.graph_index,
            emit_signed(&w.graph).expect("witness has vertices"),
            report_line(&w.report)
        );
    }
    for e in &o.errors {
        let _ = writeln!(s, "error graph={} {}", e.graph_index, e.message);
    }
    s
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::UnsignedNutExists => "unsigned-nut-exists",
            Verdict::ProperOnly => "proper-only",
            Verdict::NoneFound => "none-found",
            Verdict::Capped => "capped",
        }
    }
}
