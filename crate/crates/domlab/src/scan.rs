//! Bulk scanning of graph6 corpora against the conjectured domination
//! bounds for cubic graphs.

use crate::analysis::{is_cubic, vertex_connectivity};
use crate::domination::{gamma_exact, Budget, SolveStatus};
use crate::graph6::parse_graph6;
use serde::Serialize;

/// Which bound to test. `Reed` is γ(G) ≤ ⌈v/3⌉ for connected cubic graphs;
/// `Kelmans` sharpens it for 3-connected cubic graphs to ⌊v/3⌋ when
/// v ≡ 1 (mod 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    Kelmans,
    Reed,
}

impl Conjecture {
    pub fn bound(&self, n: usize) -> usize {
        match self {
            Conjecture::Reed => n.div_ceil(3),
            Conjecture::Kelmans => {
                if n % 3 == 1 {
                    n / 3
                } else {
                    n.div_ceil(3)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanFilters {
    /// Skip graphs with vertex connectivity below this.
    pub kappa_min: Option<usize>,
    /// Skip non-cubic graphs.
    pub cubic_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Violation,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub gamma: Option<usize>,
    pub kappa: usize,
    pub bound: usize,
    pub reed_bound: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSummary {
    pub scanned: usize,
    pub filtered_out: usize,
    pub pass: usize,
    pub violations: usize,
    pub inconclusive: usize,
    pub parse_errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanOutput {
    pub conjecture: Conjecture,
    pub summary: ScanSummary,
    pub records: Vec<ScanRecord>,
    pub errors: Vec<ScanError>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanError {
    pub line: usize,
    pub message: String,
}

/// Scan a corpus given as graph6 text, one graph per line. Parse errors are
/// reported per line and the scan continues. Records for graphs whose solve
/// did not reach optimality within `budget` are marked inconclusive.
pub fn scan_corpus(corpus: &str, conjecture: Conjecture, filters: ScanFilters, budget: &Budget) -> ScanOutput {
    let mut out = ScanOutput {
        conjecture,
        summary: ScanSummary::default(),
        records: Vec::new(),
        errors: Vec::new(),
    };
    for (idx, raw) in corpus.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        out.summary.scanned += 1;
        let g = match parse_graph6(text) {
            Ok(g) => g,
            Err(e) => {
                out.summary.parse_errors += 1;
                out.errors.push(ScanError { line, message: e.to_string() });
                continue;
            }
        };
        if filters.cubic_only && !is_cubic(&g) {
            out.summary.filtered_out += 1;
            continue;
        }
        let kappa = vertex_connectivity(&g);
        if let Some(min) = filters.kappa_min {
            if kappa < min {
                out.summary.filtered_out += 1;
                continue;
            }
        }
        let n = g.vertex_count();
        let solved = gamma_exact(&g, budget);
        let bound = conjecture.bound(n);
        let reed_bound = n.div_ceil(3);
        let (gamma, verdict) = match (solved.status, solved.gamma) {
            (SolveStatus::Optimal, Some(gamma)) => {
                let verdict = if gamma <= bound { Verdict::Pass } else { Verdict::Violation };
                (Some(gamma), verdict)
            }
            _ => (None, Verdict::Inconclusive),
        };
        match verdict {
            Verdict::Pass => out.summary.pass += 1,
            Verdict::Violation => out.summary.violations += 1,
            Verdict::Inconclusive => out.summary.inconclusive += 1,
        }
        out.records.push(ScanRecord {
            line,
            graph6: text.to_string(),
            n,
            gamma,
            kappa,
            bound,
            reed_bound,
            verdict,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::write_graph6;

    #[test]
    fn bounds() {
        assert_eq!(Conjecture::Reed.bound(54), 18);
        assert_eq!(Conjecture::Reed.bound(14), 5);
        assert_eq!(Conjecture::Kelmans.bound(14), 5);
        // v = 1 mod 3: floor instead of ceil
        assert_eq!(Conjecture::Kelmans.bound(16), 5);
        assert_eq!(Conjecture::Reed.bound(16), 6);
        assert_eq!(Conjecture::Kelmans.bound(12), 4);
    }

    #[test]
    fn order_10_corpus_is_clean_under_both_bounds() {
        // every connected cubic graph on 10 vertices has gamma = 3, which
        // meets even the sharpened floor(10/3) = 3 bound exactly
        let corpus: String = crate::corpus::connected_cubic_graphs(10)
            .iter()
            .map(|g| format!("{}\n", write_graph6(g).unwrap()))
            .collect();
        for conjecture in [Conjecture::Kelmans, Conjecture::Reed] {
            let out = scan_corpus(&corpus, conjecture, ScanFilters { cubic_only: true, kappa_min: None }, &Budget::seconds(60));
            assert_eq!(out.summary.scanned, 19);
            assert_eq!(out.summary.violations, 0);
            assert_eq!(out.summary.inconclusive, 0);
            assert!(out.records.iter().all(|r| r.gamma == Some(3)));
        }
    }

    #[test]
    fn violations_are_reported_with_the_offending_line() {
        // K1 has gamma = 1 > floor(1/3) = 0, exercising the violation path
        let out = scan_corpus("@\n", Conjecture::Kelmans, ScanFilters::default(), &Budget::seconds(10));
        assert_eq!(out.summary.violations, 1);
        assert_eq!(out.records[0].verdict, Verdict::Violation);
        assert_eq!(out.records[0].graph6, "@");
        assert_eq!(out.records[0].bound, 0);
    }

    #[test]
    fn parse_errors_do_not_stop_the_scan() {
        let corpus = "@\n*bogus*\nC~\n";
        let out = scan_corpus(corpus, Conjecture::Reed, ScanFilters::default(), &Budget::seconds(10));
        assert_eq!(out.summary.scanned, 3);
        assert_eq!(out.summary.parse_errors, 1);
        assert_eq!(out.errors[0].line, 2);
        assert_eq!(out.records.len(), 2);
        assert!(out.records.iter().all(|r| r.verdict == Verdict::Pass));
    }

    #[test]
    fn cubic_filter_skips_noncubic() {
        // K1 is not cubic
        let out = scan_corpus("@\n", Conjecture::Reed, ScanFilters { cubic_only: true, kappa_min: None }, &Budget::seconds(10));
        assert_eq!(out.summary.filtered_out, 1);
        assert!(out.records.is_empty());
    }
}
