use crate::seqcore::DegreeSequence;

/// Streams non-increasing sequences in lexicographically decreasing order.
///
/// The enumerator holds only the next sequence to yield (the cursor), so a
/// stream can be stopped and resumed from any cursor, and disjoint slices
/// of the space are described by a fixed [`Partition`] prefix.
#[derive(Debug, Clone)]
pub struct SequenceEnumerator {
    cursor: Option<Vec<u64>>,
    /// Leading positions that never change.
    fixed: usize,
    even_only: bool,
}

/// The sequences of length `n` that start with `prefix`.
///
/// `prefix` must be non-increasing; the free positions range over
/// `1..=prefix.last()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub n: usize,
    pub prefix: Vec<u64>,
}

impl Partition {
    pub fn enumerate(&self, even_only: bool) -> SequenceEnumerator {
        let fill = *self.prefix.last().expect("partition prefix is non-empty");
        let cursor = if self.prefix.len() > self.n || fill == 0 {
            None
        } else {
            let mut v = self.prefix.clone();
            v.resize(self.n, fill);
            Some(v)
        };
        SequenceEnumerator::from_parts(cursor, self.prefix.len(), even_only)
    }
}

/// Every non-increasing sequence of length `n` with entries in `1..=dmax`.
pub fn enumerate_sequences(n: usize, dmax: u64, even_only: bool) -> SequenceEnumerator {
    let cursor = (n > 0 && dmax > 0).then(|| vec![dmax; n]);
    SequenceEnumerator::from_parts(cursor, 0, even_only)
}

impl SequenceEnumerator {
    fn from_parts(cursor: Option<Vec<u64>>, fixed: usize, even_only: bool) -> Self {
        let mut e = Self {
            cursor,
            fixed,
            even_only,
        };
        e.skip_filtered();
        e
    }

    /// Continues an unrestricted enumeration from `cursor` (inclusive).
    pub fn resume(cursor: Vec<u64>, even_only: bool) -> Self {
        assert!(
            cursor.windows(2).all(|w| w[0] >= w[1]) && cursor.iter().all(|&v| v >= 1),
            "cursor must be a non-increasing positive sequence"
        );
        let cursor = (!cursor.is_empty()).then_some(cursor);
        Self::from_parts(cursor, 0, even_only)
    }

    /// The next sequence the stream will yield.
    pub fn cursor(&self) -> Option<&[u64]> {
        self.cursor.as_deref()
    }

    /// Yields the next sequence as plain entries.
    pub fn next_values(&mut self) -> Option<Vec<u64>> {
        let current = self.cursor.clone()?;
        self.advance();
        self.skip_filtered();
        Some(current)
    }

    fn advance(&mut self) {
        let Some(v) = self.cursor.as_mut() else {
            return;
        };
        match (self.fixed..v.len()).rev().find(|&i| v[i] > 1) {
            Some(i) => {
                let value = v[i] - 1;
                v[i..].fill(value);
            }
            None => self.cursor = None,
        }
    }

    fn skip_filtered(&mut self) {
        if !self.even_only {
            return;
        }
        while let Some(v) = &self.cursor {
            if v.iter().map(|&x| x % 2).sum::<u64>() % 2 == 0 {
                return;
            }
            self.advance();
        }
    }
}

impl Iterator for SequenceEnumerator {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        let values = self.next_values()?;
        Some(DegreeSequence::from_values(&values).expect("enumerated entries are positive"))
    }
}
