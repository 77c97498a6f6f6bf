//! Command results: JSON documents plus a flat table for csv/text output.
//!
//! Big numbers carry an exact rendering (integers, or `p/q` for the
//! closed bound) when they stay at or below 10^30, and 3-significant-digit
//! scientific notation always.

use std::collections::BTreeMap;
use std::time::Duration;

use arp_core::{BigCount, ComplexityReport, Scalar, Schedule};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Big {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub sci: String,
}

const EXACT_LIMIT: u32 = 30;

impl Big {
    pub fn scalar(x: &Scalar) -> Big {
        let limit = Scalar::from_integer(pow10(EXACT_LIMIT));
        Big {
            exact: (x.abs() <= limit).then(|| x.to_exact_string(0)),
            sci: x.to_scientific(3),
        }
    }

    pub fn count(x: &BigCount) -> Big {
        Big::scalar(&x.to_scalar())
    }
}

fn pow10(exp: u32) -> i128 {
    10i128.pow(exp)
}

pub fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

pub type Timings = BTreeMap<&'static str, f64>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionReport {
    pub method: String,
    pub n: usize,
    /// First drop to farthest flyer.
    pub pi: Vec<u32>,
    pub total_exact: String,
    /// 12 significant digits, correctly rounded from `total_exact`.
    pub total_decimal: String,
    pub q_count: Option<String>,
    pub visited_nodes: u64,
    pub timings_ms: Timings,
}

impl SolutionReport {
    pub fn new(method: impl ToString, schedule: &Schedule, q_count: Option<String>, visited_nodes: u64) -> Self {
        SolutionReport {
            method: method.to_string(),
            n: schedule.pi.len(),
            pi: schedule.pi.iter().map(|id| id.0).collect(),
            total_exact: schedule.total.to_string(),
            total_decimal: schedule.total.to_significant_decimal(12),
            q_count,
            visited_nodes,
            timings_ms: Timings::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub q_count: String,
    pub visited_nodes: u64,
    pub timings_ms: Timings,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub class: String,
    pub ties: bool,
    /// Every airplane in reverse order against the farthest flyer, which is
    /// what exact index estimation needs.
    pub reverse_order_against_last: bool,
}

/// One row of a bounds table.
#[derive(Clone, Debug, PartialEq, Serialize, Default)]
pub struct BoundsRow {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_prime: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_n: Option<Big>,
    pub q_star: Option<Big>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_m_exact: Option<Big>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_m_bound: Option<Big>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl BoundsRow {
    pub fn from_report(r: &ComplexityReport) -> Self {
        BoundsRow {
            n: r.n,
            m: r.m,
            m_prime: r.m_prime,
            f_n: None,
            q_star: Some(Big::count(&r.q_star)),
            q_m_exact: Some(Big::count(&r.q_m_exact)),
            q_m_bound: Some(Big::scalar(&r.q_m_bound)),
            regime: Some(r.regime.to_string()),
            timing_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub kind: String,
    pub rows: Vec<BoundsRow>,
    pub timings_ms: Timings,
}

/// Headers plus string cells, rendered as csv or an aligned text table.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory csv");
        for row in &self.rows {
            w.write_record(row).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.headers.clone());
        for row in &self.rows {
            out += &line(row.iter().map(String::as_str).collect());
        }
        out
    }
}

/// JSON plus a tabular view.
pub trait Render: Serialize {
    fn table(&self) -> Table;

    fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

impl Render for SolutionReport {
    fn table(&self) -> Table {
        let pi: Vec<String> = self.pi.iter().map(u32::to_string).collect();
        Table {
            headers: vec!["method", "n", "pi", "total_exact", "total_decimal", "q_count"],
            rows: vec![vec![
                self.method.clone(),
                self.n.to_string(),
                pi.join(" "),
                self.total_exact.clone(),
                self.total_decimal.clone(),
                opt(&self.q_count),
            ]],
        }
    }
}

impl Render for CountReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["n", "q_count", "visited_nodes"],
            rows: vec![vec![self.n.to_string(), self.q_count.clone(), self.visited_nodes.to_string()]],
        }
    }
}

impl Render for ClassifyReport {
    fn table(&self) -> Table {
        Table {
            headers: vec!["n", "class", "ties", "reverse_order_against_last"],
            rows: vec![vec![
                self.n.to_string(),
                self.class.clone(),
                self.ties.to_string(),
                self.reverse_order_against_last.to_string(),
            ]],
        }
    }
}

impl Render for BoundsReport {
    fn table(&self) -> Table {
        let sci = |b: &Option<Big>| b.as_ref().map(|b| b.sci.clone()).unwrap_or_default();
        let table2 = self.rows.iter().any(|r| r.f_n.is_some());
        if table2 {
            return Table {
                headers: vec!["n", "f_n", "q_star"],
                rows: self
                    .rows
                    .iter()
                    .map(|r| {
                        let exact = |b: &Option<Big>| {
                            b.as_ref().and_then(|b| b.exact.clone()).unwrap_or_else(|| sci(b))
                        };
                        vec![r.n.to_string(), exact(&r.f_n), exact(&r.q_star)]
                    })
                    .collect(),
            };
        }
        Table {
            headers: vec!["n", "m", "m_prime", "q_star", "q_m_exact", "q_m_bound", "regime"],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        opt(&r.m),
                        opt(&r.m_prime),
                        sci(&r.q_star),
                        sci(&r.q_m_exact),
                        sci(&r.q_m_bound),
                        opt(&r.regime),
                    ]
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use arp_core::{sequential_search, Instance, SearchOptions};

    #[test]
    fn solution_fields() {
        let inst = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")]).unwrap();
        let sol = sequential_search(&inst, &SearchOptions::default());
        let r = SolutionReport::new(sol.method, sol.best(), sol.q_count.as_ref().map(|q| q.to_string()), 0);
        assert_eq!(r.pi, vec![2, 3, 1]);
        assert_eq!(r.total_exact, "379/70");
        // 379/70 = 5.414285714285714…
        assert_eq!(r.total_decimal, "5.41428571429");
        assert_eq!(r.q_count.as_deref(), Some("2"));
    }

    #[test]
    fn big_values_drop_the_exact_form() {
        let small = Big::scalar(&Scalar::from_integer(256));
        assert_eq!(small, Big { exact: Some("256".into()), sci: "2.56e2".into() });
        let big = Big::scalar(&Scalar::from_integer(10i128.pow(30) + 1));
        assert_eq!(big.exact, None);
        assert_eq!(big.sci, "1.00e30");
    }

    #[test]
    fn text_table_aligns() {
        let t = Table {
            headers: vec!["n", "q_star"],
            rows: vec![vec!["4".into(), "4".into()], vec!["10".into(), "256".into()]],
        };
        assert_eq!(t.to_text(), " n  q_star\n 4       4\n10     256\n");
        assert_eq!(t.to_csv(), "n,q_star\n4,4\n10,256\n");
    }
}
