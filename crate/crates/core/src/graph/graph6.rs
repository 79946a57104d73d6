//! Short-form graph6 (`n < 63`).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant bit first, zero padded, each
//! byte offset by 63.

use super::{Graph, GraphError};

pub const MAX_SHORT_N: usize = 62;

pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= MAX_SHORT_N, "short-form graph6 needs n < 63, got {n}");
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::MalformedGraph6(msg);
    let mut end = bytes.len();
    while end > 0 && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &bytes[..end];
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(bad(format!("header byte {head} out of range")));
    }
    if head == 126 {
        return Err(bad("long-form graph6 (n >= 63) is not supported".into()));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b} out of range 63..126")));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(bad("non-zero padding bits".into()));
        }
    }
    Ok(g)
}
