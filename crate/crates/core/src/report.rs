//! Aggregation of stored outcomes.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::imports::extract_imports;
use crate::outcome::{ExecutionOutcome, OutcomeClass, Phase};
use crate::stdlib::{filter_third_party, StdlibManifest};
use crate::store::{Store, StoreError};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{id} has a {to} result but no {from} result")]
    MissingFromPhase { id: String, from: Phase, to: Phase },
    #[error(transparent)]
    Store(#[from] StoreError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub class: String,
    pub count: usize,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyTable {
    pub phase: Phase,
    pub total: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gain {
    pub from_phase: Phase,
    pub to_phase: Phase,
    /// Ids in the ImportError family in `from_phase`.
    pub import_errors_before: usize,
    /// Ids in the ImportError family in `to_phase`.
    pub import_errors_after: usize,
    /// Ids that left the ImportError family.
    pub gain: usize,
    /// Ids that left the family and now succeed.
    pub newly_successful: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusMetrics {
    pub total_snippets: usize,
    /// Physical lines per snippet, blanks and comments included; 1 decimal.
    pub mean_lines_of_code: f64,
    pub unique_third_party: usize,
    pub third_party_names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub tables: Vec<FrequencyTable>,
    pub gains: Vec<Gain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<CorpusMetrics>,
}

/// Latest class per id for `phase`; later log lines override earlier ones.
fn latest(results: &[ExecutionOutcome], phase: Phase) -> HashMap<&str, &OutcomeClass> {
    results
        .iter()
        .filter(|o| o.phase == phase)
        .map(|o| (o.snippet_id.as_str(), &o.outcome_class))
        .collect()
}

/// Outcome frequencies for one phase, by descending count then class name.
pub fn tabulate(results: &[ExecutionOutcome], phase: Phase) -> FrequencyTable {
    let per_id = latest(results, phase);
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for class in per_id.values() {
        *counts.entry(class.as_str()).or_default() += 1;
    }
    let total = per_id.len();
    let mut rows: Vec<TableRow> = counts
        .into_iter()
        .map(|(class, count)| TableRow {
            class: class.to_string(),
            count,
            percent: count as f64 * 100.0 / total as f64,
        })
        .collect();
    rows.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.class.cmp(&b.class)));
    FrequencyTable { phase, total, rows }
}

pub fn compute_gain(
    results: &[ExecutionOutcome],
    from_phase: Phase,
    to_phase: Phase,
) -> Result<Gain, ReportError> {
    let before = latest(results, from_phase);
    let after = latest(results, to_phase);
    let mut ids: Vec<&&str> = after.keys().collect();
    ids.sort();
    if let Some(id) = ids.into_iter().find(|id| !before.contains_key(**id)) {
        return Err(ReportError::MissingFromPhase {
            id: id.to_string(),
            from: from_phase,
            to: to_phase,
        });
    }
    let mut gain = Gain {
        from_phase,
        to_phase,
        import_errors_before: 0,
        import_errors_after: 0,
        gain: 0,
        newly_successful: 0,
    };
    for (id, class) in &before {
        if !class.is_import_error_family() {
            continue;
        }
        gain.import_errors_before += 1;
        match after.get(id) {
            Some(next) if next.is_import_error_family() => gain.import_errors_after += 1,
            Some(next) => {
                gain.gain += 1;
                if **next == OutcomeClass::Success {
                    gain.newly_successful += 1;
                }
            }
            None => {}
        }
    }
    Ok(gain)
}

/// Number of physical lines; a trailing newline does not start a new line.
pub fn physical_lines(source: &str) -> usize {
    source.lines().count()
}

pub fn corpus_metrics(
    store: &Store,
    manifest: &StdlibManifest,
) -> Result<CorpusMetrics, ReportError> {
    let ids = store.list_ids()?;
    let mut total_lines = 0usize;
    let mut names: Vec<String> = Vec::new();
    for id in &ids {
        let record = store.get_snippet(id)?;
        total_lines += physical_lines(&record.source);
        let decls = extract_imports(&record.source);
        let tops: Vec<String> = crate::imports::top_level_names(&decls)
            .into_iter()
            .filter(|n| n != "__future__")
            .collect();
        for name in filter_third_party(&tops, manifest) {
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    names.sort();
    let mean = if ids.is_empty() {
        0.0
    } else {
        (total_lines as f64 / ids.len() as f64 * 10.0).round() / 10.0
    };
    Ok(CorpusMetrics {
        total_snippets: ids.len(),
        mean_lines_of_code: mean,
        unique_third_party: names.len(),
        third_party_names: names,
    })
}

impl FrequencyTable {
    /// Plain-text table with `Result`, `Count` and `Percent` columns.
    pub fn render_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.class.len())
            .max()
            .unwrap_or(0)
            .max("Result".len());
        let mut out = String::new();
        let _ = writeln!(out, "{} ({} snippets)", self.phase, self.total);
        let _ = writeln!(
            out,
            "{:<width$}  {:>6}  {:>7}",
            "Result", "Count", "Percent"
        );
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:<width$}  {:>6}  {:>6.1}%",
                row.class, row.count, row.percent
            );
        }
        out
    }
}

impl Gain {
    pub fn render_text(&self) -> String {
        format!(
            "{} -> {}: {} ImportError-family before, {} after, gain {}, newly successful {}\n",
            self.from_phase,
            self.to_phase,
            self.import_errors_before,
            self.import_errors_after,
            self.gain,
            self.newly_successful
        )
    }
}

impl CorpusReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, table) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&table.render_text());
        }
        if !self.gains.is_empty() && !out.is_empty() {
            out.push('\n');
        }
        for gain in &self.gains {
            out.push_str(&gain.render_text());
        }
        if let Some(m) = &self.metrics {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "snippets: {}", m.total_snippets);
            let _ = writeln!(out, "mean lines of code: {:.1}", m.mean_lines_of_code);
            let _ = writeln!(out, "unique third-party modules: {}", m.unique_third_party);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::PYTHON2_IMAGE;
    use crate::store::SnippetRecord;
    use chrono::Utc;
    use proptest::prelude::*;

    fn o(id: &str, phase: Phase, class: &str) -> ExecutionOutcome {
        ExecutionOutcome {
            snippet_id: id.into(),
            phase,
            outcome_class: OutcomeClass::from(class),
            exception_name: None,
            exception_message: String::new(),
            exit_code: 0,
            duration_ms: 0,
            stdout_tail: String::new(),
            stderr_tail: String::new(),
            install_report: None,
        }
    }

    const B: Phase = Phase::BaselineV2;
    const P: Phase = Phase::PostInferenceV2;

    #[test]
    fn tabulate_percentages() {
        let log = [
            o("a", B, "ImportError"),
            o("b", B, "ImportError"),
            o("c", B, "ImportError"),
            o("d", B, "Success"),
        ];
        let t = tabulate(&log, B);
        assert_eq!(t.total, 4);
        assert_eq!(t.rows[0].class, "ImportError");
        assert_eq!(t.rows[0].count, 3);
        assert!((t.rows[0].percent - 75.0).abs() < 1e-9);
        assert_eq!(t.rows[1].class, "Success");
        assert!((t.rows[1].percent - 25.0).abs() < 1e-9);
        let text = t.render_text();
        assert!(text.contains("Result"));
        assert!(text.contains("75.0%"));
    }

    #[test]
    fn tabulate_empty_and_latest_wins() {
        assert!(tabulate(&[], B).rows.is_empty());
        let log = [o("a", B, "ImportError"), o("a", B, "Success")];
        let t = tabulate(&log, B);
        assert_eq!(t.total, 1);
        assert_eq!(t.rows[0].class, "Success");
        assert!(tabulate(&log, P).rows.is_empty());
    }

    #[test]
    fn ties_sorted_by_name() {
        let log = [
            o("a", B, "ValueError"),
            o("b", B, "EOFError"),
            o("c", B, "OSError"),
        ];
        let classes: Vec<_> = tabulate(&log, B)
            .rows
            .into_iter()
            .map(|r| r.class)
            .collect();
        assert_eq!(classes, vec!["EOFError", "OSError", "ValueError"]);
    }

    #[test]
    fn gain_example() {
        let mut log: Vec<_> = ["a", "b", "c", "d"]
            .iter()
            .map(|id| o(id, B, "ImportError"))
            .collect();
        log.push(o("e", B, "NameError"));
        log.extend([
            o("a", P, "Success"),
            o("b", P, "NameError"),
            o("c", P, "ImportError"),
            o("d", P, "ImportError"),
        ]);
        let g = compute_gain(&log, B, P).unwrap();
        assert_eq!((g.gain, g.newly_successful), (2, 1));
        assert_eq!((g.import_errors_before, g.import_errors_after), (4, 2));
    }

    #[test]
    fn gain_edge_cases() {
        let log = [o("a", B, "ImportError"), o("b", B, "Success")];
        assert_eq!(compute_gain(&log, B, B).unwrap().gain, 0);
        assert_eq!(compute_gain(&log, B, P).unwrap().gain, 0);
        let log = [o("a", P, "Success")];
        assert!(matches!(
            compute_gain(&log, B, P),
            Err(ReportError::MissingFromPhase { .. })
        ));
    }

    #[test]
    fn module_not_found_counts_as_import_error() {
        let log = [
            o("a", Phase::BaselineV3, "ModuleNotFoundError"),
            o("a", Phase::PostInferenceV3, "Success"),
        ];
        let g = compute_gain(&log, Phase::BaselineV3, Phase::PostInferenceV3).unwrap();
        assert_eq!(g.gain, 1);
    }

    fn put(store: &Store, id: &str, source: &str) {
        store
            .put_snippet(&SnippetRecord {
                id: id.into(),
                filename: "snippet.py".into(),
                source: source.into(),
                language_tag: "Python".into(),
                stars: 1,
                created_at: Utc::now(),
                origin_url: String::new(),
            })
            .unwrap();
    }

    #[test]
    fn metrics() {
        let manifest = StdlibManifest::bundled(PYTHON2_IMAGE).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let m = corpus_metrics(&store, &manifest).unwrap();
        assert_eq!(
            (m.total_snippets, m.mean_lines_of_code, m.unique_third_party),
            (0, 0.0, 0)
        );

        put(&store, "a", "import requests\nimport json\nx = 1\n");
        put(
            &store,
            "b",
            "import networkx\n\n# c\nimport requests\ny = 2",
        );
        let m = corpus_metrics(&store, &manifest).unwrap();
        assert_eq!(m.total_snippets, 2);
        assert_eq!(m.mean_lines_of_code, 4.0);
        assert_eq!(m.unique_third_party, 2);
        assert_eq!(m.third_party_names, vec!["networkx", "requests"]);
    }

    #[test]
    fn report_json_parses() {
        let log = [o("a", B, "ImportError"), o("a", P, "Success")];
        let report = CorpusReport {
            tables: vec![tabulate(&log, B)],
            gains: vec![compute_gain(&log, B, P).unwrap()],
            metrics: None,
        };
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["tables"][0]["rows"][0]["class"], "ImportError");
        assert_eq!(v["gains"][0]["gain"], 1);
    }

    proptest! {
        #[test]
        fn table_and_gain_invariants(
            entries in proptest::collection::vec(
                (0usize..12, prop_oneof![Just(B), Just(P)],
                 prop_oneof![Just("ImportError"), Just("ModuleNotFoundError"), Just("Success"), Just("NameError")]),
                0..60,
            )
        ) {
            let log: Vec<_> = entries.iter().map(|(id, ph, c)| o(&format!("s{id}"), *ph, c)).collect();
            let t = tabulate(&log, B);
            let distinct: std::collections::HashSet<_> = log.iter().filter(|x| x.phase == B).map(|x| &x.snippet_id).collect();
            prop_assert_eq!(t.rows.iter().map(|r| r.count).sum::<usize>(), distinct.len());
            if t.total > 0 {
                let sum: f64 = t.rows.iter().map(|r| r.percent).sum();
                prop_assert!((sum - 100.0).abs() <= 0.1);
            }
            if let Ok(g) = compute_gain(&log, B, P) {
                prop_assert!(g.gain <= g.import_errors_before);
                prop_assert!(g.newly_successful <= g.gain);
            }
        }
    }
}
