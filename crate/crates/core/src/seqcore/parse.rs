use super::{DegreeSequence, SequenceError, MAX_ENTRY};

/// Parses `V` / `V^C` terms separated by commas.
///
/// ASCII whitespace is allowed around every token. Terms may come in any
/// order; the result is normalized to decreasing order.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, SequenceError> {
    if text.trim_ascii().is_empty() {
        return Err(SequenceError::Empty);
    }
    let mut pairs = Vec::new();
    let mut offset = 0;
    for term in text.split(',') {
        pairs.push(parse_term(term, offset)?);
        offset += term.len() + 1;
    }
    DegreeSequence::from_runs(pairs)
}

fn parse_term(term: &str, offset: usize) -> Result<(u64, u64), SequenceError> {
    let mut cursor = Cursor {
        bytes: term.as_bytes(),
        pos: 0,
        offset,
    };
    cursor.skip_ws();
    let value = cursor.number()?;
    cursor.skip_ws();
    let count = if cursor.eat(b'^') {
        cursor.skip_ws();
        let count = cursor.number()?;
        cursor.skip_ws();
        count
    } else {
        1
    };
    if cursor.pos != cursor.bytes.len() {
        return Err(cursor.malformed("unexpected character"));
    }
    if value == 0 || count == 0 {
        return Err(SequenceError::ZeroEntry);
    }
    Ok((value, count))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, SequenceError> {
        let start = self.pos;
        let mut value: u64 = 0;
        let mut overflow = false;
        while let Some(b) = self.bytes.get(self.pos).filter(|b| b.is_ascii_digit()) {
            let digit = u64::from(b - b'0');
            match value.checked_mul(10).and_then(|v| v.checked_add(digit)) {
                Some(v) if v <= MAX_ENTRY => value = v,
                _ => overflow = true,
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.malformed("expected a decimal number"));
        }
        if overflow {
            return Err(SequenceError::Overflow);
        }
        Ok(value)
    }

    fn malformed(&self, reason: &'static str) -> SequenceError {
        SequenceError::Malformed {
            position: self.offset + self.pos,
            reason,
        }
    }
}
