use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimEntry {
    pub claim: String,
    pub params: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
}

impl Tally {
    pub fn verdict(&self) -> Verdict {
        if self.fail > 0 {
            Verdict::Fail
        } else if self.pass > 0 {
            Verdict::Pass
        } else {
            Verdict::NotApplicable
        }
    }
}

/// Pass/fail evidence for one or more claims over a parameter range.
///
/// Every failing instance is kept with its detail. Passing and
/// not-applicable instances are kept only when the report was created with
/// [`ClaimReport::new`]; bulk audits use [`ClaimReport::failures_only`] and
/// keep tallies for the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub title: String,
    pub range: String,
    pub notes: Vec<String>,
    pub entries: Vec<ClaimEntry>,
    pub tallies: BTreeMap<String, Tally>,
    keep_all: bool,
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

impl ClaimReport {
    pub fn new(title: impl Into<String>, range: impl Into<String>) -> Self {
        ClaimReport {
            title: title.into(),
            range: range.into(),
            notes: Vec::new(),
            entries: Vec::new(),
            tallies: BTreeMap::new(),
            keep_all: true,
        }
    }

    pub fn failures_only(title: impl Into<String>, range: impl Into<String>) -> Self {
        ClaimReport {
            keep_all: false,
            ..Self::new(title, range)
        }
    }

    /// Records one instance; `describe` supplies `(params, detail)` and is
    /// only called when the entry is kept.
    pub fn record_with<F>(&mut self, claim: &str, verdict: Verdict, describe: F)
    where
        F: FnOnce() -> (String, String),
    {
        let tally = self.tallies.entry(claim.to_string()).or_default();
        match verdict {
            Verdict::Pass => tally.pass += 1,
            Verdict::Fail => tally.fail += 1,
            Verdict::NotApplicable => tally.not_applicable += 1,
        }
        if self.keep_all || verdict == Verdict::Fail {
            let (params, detail) = describe();
            self.entries.push(ClaimEntry {
                claim: claim.to_string(),
                params,
                verdict,
                detail,
            });
        }
    }

    pub fn record(&mut self, claim: &str, params: String, verdict: Verdict, detail: String) {
        self.record_with(claim, verdict, || (params, detail));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends another report's entries and tallies, preserving order.
    pub fn merge(&mut self, other: ClaimReport) {
        self.entries.extend(other.entries);
        self.notes.extend(other.notes);
        for (k, t) in other.tallies {
            let mine = self.tallies.entry(k).or_default();
            mine.pass += t.pass;
            mine.fail += t.fail;
            mine.not_applicable += t.not_applicable;
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.tallies.values().any(|t| t.fail > 0)
    }

    pub fn tally(&self, claim: &str) -> Tally {
        self.tallies.get(claim).copied().unwrap_or_default()
    }

    /// Tab-separated lines `claim, params, verdict, detail`: one per kept
    /// instance, then one summary line per claim. Title and notes are `#`
    /// comment lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", clean(&self.title)));
        for n in &self.notes {
            out.push_str(&format!("# {}\n", clean(n)));
        }
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                clean(&e.claim),
                clean(&e.params),
                e.verdict,
                clean(&e.detail)
            ));
        }
        for (claim, t) in &self.tallies {
            out.push_str(&format!(
                "{}\t{}\t{}\tsummary pass={} fail={} n/a={}\n",
                clean(claim),
                clean(&self.range),
                t.verdict(),
                t.pass,
                t.fail,
                t.not_applicable
            ));
        }
        out
    }

    /// `key=value` records separated by blank lines.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("report={}\nrange={}\n", clean(&self.title), clean(&self.range)));
        for n in &self.notes {
            out.push_str(&format!("note={}\n", clean(n)));
        }
        for e in &self.entries {
            out.push_str(&format!(
                "\nclaim={}\nparams={}\nverdict={}\ndetail={}\n",
                clean(&e.claim),
                clean(&e.params),
                e.verdict,
                clean(&e.detail)
            ));
        }
        for (claim, t) in &self.tallies {
            out.push_str(&format!(
                "\nsummary={}\nverdict={}\npass={}\nfail={}\nna={}\n",
                clean(claim),
                t.verdict(),
                t.pass,
                t.fail,
                t.not_applicable
            ));
        }
        out
    }
}
