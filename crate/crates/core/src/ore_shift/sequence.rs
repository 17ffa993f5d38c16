use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    BFile,
    Generator,
    Oracle,
    Unrolled,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::BFile => "bfile",
            Provenance::Generator => "generator",
            Provenance::Oracle => "oracle",
            Provenance::Unrolled => "unrolled",
        }
    }
}

/// Terms a_{offset}, a_{offset+1}, …; the offset is always explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub id: Option<String>,
    pub provenance: Provenance,
}

impl Sequence {
    pub fn new(offset: i64, terms: Vec<BigInt>, provenance: Provenance) -> Self {
        assert!(!terms.is_empty(), "a sequence needs at least one term");
        Sequence { offset, terms, id: None, provenance }
    }
    pub fn from_i64(offset: i64, terms: &[i64]) -> Self {
        Self::new(offset, terms.iter().map(|&t| BigInt::from(t)).collect(), Provenance::Generator)
    }
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    /// Last index present.
    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }
    pub fn get(&self, n: i64) -> Option<&BigInt> {
        let k = n.checked_sub(self.offset)?;
        if k < 0 {
            return None;
        }
        self.terms.get(k as usize)
    }
    /// a_n, panicking outside the stored range.
    pub fn at(&self, n: i64) -> &BigInt {
        self.get(n).unwrap_or_else(|| panic!("index {n} outside {}..={}", self.offset, self.last_index()))
    }
    /// The first `len` terms.
    pub fn prefix(&self, len: usize) -> Sequence {
        let mut s = self.clone();
        s.terms.truncate(len.max(1));
        s
    }
    /// Terms with index ≥ `from`.
    pub fn suffix_from(&self, from: i64) -> Sequence {
        let k = (from - self.offset).max(0) as usize;
        let mut s = self.clone();
        s.terms = self.terms[k..].to_vec();
        s.offset = self.offset + k as i64;
        s
    }
    /// Subsequence a_{offset + start + step·k}.
    pub fn every(&self, start: usize, step: usize) -> Sequence {
        let mut s = self.clone();
        s.terms = self.terms.iter().skip(start).step_by(step).cloned().collect();
        s.offset = 0;
        s
    }
    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.offset..=self.last_index()
    }
}
