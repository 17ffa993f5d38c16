//! Reproduction of the published table: per sequence, the fewest terms each
//! guesser needs (M′ for LA, L′ for LLL) beside the printed values.

use super::config::Budget;
use super::registry::{lookup, PaperRow};
use crate::guessing::{guess_la, guess_lll, Flag, GuessConfig};
use crate::ore_shift::Sequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub id: String,
    /// Terms available to the guessers.
    pub n: usize,
    pub m_prime: Option<usize>,
    pub l_prime: Option<usize>,
    pub order: Option<usize>,
    pub degree: Option<usize>,
    pub flags: Vec<Flag>,
    pub paper: Option<PaperRow>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

fn opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

impl ReportRow {
    pub fn to_line(&self) -> String {
        let flags: Vec<String> = self.flags.iter().map(Flag::to_string).collect();
        let mut s = format!(
            "{} N={} M'={} L'={} r={} d={} flags={}",
            self.id,
            self.n,
            opt(self.m_prime),
            opt(self.l_prime),
            opt(self.order),
            opt(self.degree),
            if flags.is_empty() { "-".into() } else { flags.join(",") }
        );
        if let Some(p) = &self.paper {
            s.push_str(&format!(
                " | paper N={} M={} L={} r={} d={} {:?}",
                p.n,
                opt(p.m),
                opt(p.l),
                opt(p.order),
                opt(p.degree),
                p.status
            ));
        }
        for note in &self.notes {
            s.push_str(&format!(" | {note}"));
        }
        s
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| r.to_line() + "\n").collect()
    }
}

/// Smallest len in (lo, hi] with ok(len), assuming ok is monotone and ok(hi).
fn bisect(mut lo: usize, mut hi: usize, ok: impl Fn(usize) -> bool) -> usize {
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Report row for the given terms. A guess counts as a success when its
/// operator annihilates every available term, not just the prefix it saw.
pub fn report_row(id: &str, a: &Sequence, paper: Option<PaperRow>, budget: &Budget) -> ReportRow {
    let mut row = ReportRow {
        id: id.to_string(),
        n: a.len(),
        m_prime: None,
        l_prime: None,
        order: None,
        degree: None,
        flags: Vec::new(),
        paper,
        notes: Vec::new(),
    };
    let la_cfg = GuessConfig::bounds(budget.max_order, budget.max_degree).with_holdout(0);
    let la_ok = |len: usize| -> bool {
        matches!(guess_la(&a.prefix(len), &la_cfg), Ok(Some(g)) if g.best().annihilates(a))
    };
    if let Ok(Some(g)) = guess_la(a, &la_cfg) {
        if g.best().annihilates(a) {
            row.order = Some(g.best().order());
            row.degree = Some(g.best().degree());
            row.m_prime = Some(bisect(3, a.len(), la_ok));
        }
    }
    if row.m_prime.is_none() {
        row.notes.push("LA: no recurrence within budget".into());
    }
    if let Ok(Some(g)) = guess_la(a, &GuessConfig::bounds(budget.max_order, budget.max_degree)) {
        row.flags = g.flags;
    }
    let cell = match (row.order, row.degree, paper) {
        (Some(r), Some(d), _) => Some((r, d)),
        (_, _, Some(PaperRow { order: Some(r), degree: Some(d), .. })) => Some((r, d)),
        _ => None,
    };
    match cell {
        None => row.notes.push("LLL: no cell to try".into()),
        Some((r, d)) if (r + 1) * (d + 1) > budget.lll_max_unknowns => {
            row.notes.push(format!("LLL: cell ({r},{d}) exceeds {} unknowns", budget.lll_max_unknowns))
        }
        Some((r, d)) => {
            let cfg = GuessConfig::bounds(r, d).with_cells(vec![(r, d)]).with_holdout(0);
            let lll_ok = |len: usize| -> bool {
                matches!(guess_lll(&a.prefix(len), &cfg), Ok(Some(g)) if g.candidates.iter().any(|c| c.annihilates(a)))
            };
            if lll_ok(a.len()) {
                row.l_prime = Some(bisect(r + 1, a.len(), lll_ok));
                row.order.get_or_insert(r);
                row.degree.get_or_insert(d);
            } else {
                row.notes.push(format!("LLL: nothing in cell ({r},{d})"));
            }
        }
    }
    row
}

/// Rows in id order; unknown ids get a row with a note.
pub fn run_report(ids: &[&str], budget: &Budget) -> Report {
    let mut ids: Vec<&str> = ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let rows = ids
        .into_iter()
        .map(|id| match lookup(id) {
            Some(e) => {
                let n_max = budget.report_terms.map_or(e.report_max, |t| (e.offset.max(0) as u64 + t).saturating_sub(1));
                report_row(id, &e.terms(n_max), e.paper, budget)
            }
            None => ReportRow {
                id: id.to_string(),
                n: 0,
                m_prime: None,
                l_prime: None,
                order: None,
                degree: None,
                flags: Vec::new(),
                paper: None,
                notes: vec!["not registered".into()],
            },
        })
        .collect();
    Report { rows }
}
