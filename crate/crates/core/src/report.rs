//! Result rows and renderers.
//!
//! Two row shapes cover everything the experiments produce: [`BiasReport`]
//! (one bias estimate per method) and [`DecompReport`] (mean and variance of
//! one decomposition component). Renderers emit locale-independent CSV with
//! six significant digits and markdown tables with three decimals; a method
//! that does not exist for a model (the trace corrections under the Laplace
//! model) renders as an empty CSV estimate and `---` in markdown.

use crate::analytic::Scenario;
use crate::dist::Family;
use std::fmt::Write as _;

/// Bias-estimation methods, in table row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Monte Carlo ground truth: mean of c1 + c3 over replications.
    True,
    /// Parameter count.
    Aic,
    /// Finite-sample corrected parameter count.
    Sugiura,
    /// tr(I J^{-1}) at the projected truth.
    TicAnalytic,
    /// Plug-in trace estimate averaged over replications.
    TicEmpirical,
    /// Series expansion of the exact bias.
    Cn,
    /// Bootstrap estimate averaged over replications.
    Bn,
}

impl Method {
    pub fn all() -> [Method; 7] {
        [
            Method::True,
            Method::Aic,
            Method::Sugiura,
            Method::TicAnalytic,
            Method::TicEmpirical,
            Method::Cn,
            Method::Bn,
        ]
    }

    /// Methods shown by the table reproduction commands.
    pub fn table_set() -> [Method; 6] {
        [
            Method::True,
            Method::Aic,
            Method::TicAnalytic,
            Method::TicEmpirical,
            Method::Cn,
            Method::Bn,
        ]
    }

    /// CSV token.
    pub fn csv_name(self) -> &'static str {
        match self {
            Method::True => "true",
            Method::Aic => "aic",
            Method::Sugiura => "aicc",
            Method::TicAnalytic => "tic",
            Method::TicEmpirical => "tic_emp",
            Method::Cn => "cn",
            Method::Bn => "bn",
        }
    }

    /// Human-readable row label.
    pub fn label(self) -> &'static str {
        match self {
            Method::True => "True",
            Method::Aic => "AIC",
            Method::Sugiura => "AICc",
            Method::TicAnalytic => "IJ^-1",
            Method::TicEmpirical => "IJ^-1 (emp)",
            Method::Cn => "C_n",
            Method::Bn => "B_n",
        }
    }
}

/// One bias estimate for one (scenario, sample size, method) cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiasReport {
    pub scenario: Scenario,
    pub n: usize,
    pub method: Method,
    /// `None` when the method does not exist for this model.
    pub estimate: Option<f64>,
    /// Monte Carlo standard error, when the method is stochastic.
    pub stderr: Option<f64>,
    /// Replications behind the estimate (1 for deterministic methods).
    pub reps: u64,
    /// Bootstrap resamples per replication, when applicable.
    pub nb: Option<u64>,
    pub seed: u64,
}

impl BiasReport {
    pub fn unavailable(&self) -> bool {
        self.estimate.is_none()
    }
}

/// Decomposition components, in table row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    C1,
    C2,
    C3,
    C,
    C1PlusC3,
}

impl Component {
    pub fn all() -> [Component; 5] {
        [Component::C1, Component::C2, Component::C3, Component::C, Component::C1PlusC3]
    }

    pub fn csv_name(self) -> &'static str {
        match self {
            Component::C1 => "c1",
            Component::C2 => "c2",
            Component::C3 => "c3",
            Component::C => "c",
            Component::C1PlusC3 => "c1+c3",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Component::C1 => "C1",
            Component::C2 => "C2",
            Component::C3 => "C3",
            Component::C => "C",
            Component::C1PlusC3 => "C1+C3",
        }
    }
}

/// Mean and variance of one decomposition component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompReport {
    pub scenario: Scenario,
    pub n: usize,
    pub component: Component,
    pub mean: f64,
    pub variance: f64,
    pub reps: u64,
    pub seed: u64,
}

/// Fixed-notation formatting with `sig` significant digits (trailing zeros
/// kept), independent of locale.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", sig.saturating_sub(1), 0.0);
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn opt_sig(x: Option<f64>, sig: usize) -> String {
    x.map(|v| fmt_sig(v, sig)).unwrap_or_default()
}

/// CSV with header `scenario,model,n,method,estimate,stderr,reps,nb,seed`;
/// rows are sorted by (scenario, n, method) and floats carry six significant
/// digits. Lines end with `\n`.
pub fn to_csv(reports: &[BiasReport]) -> String {
    let mut rows: Vec<&BiasReport> = reports.iter().collect();
    rows.sort_by_key(|r| (r.scenario, r.n, r.method));
    let mut out = String::from("scenario,model,n,method,estimate,stderr,reps,nb,seed\n");
    for r in rows {
        let nb = r.nb.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.scenario.truth,
            r.scenario.model,
            r.n,
            r.method.csv_name(),
            opt_sig(r.estimate, 6),
            opt_sig(r.stderr, 6),
            r.reps,
            nb,
            r.seed
        )
        .expect("writing to String cannot fail");
    }
    out
}

/// CSV for decomposition rows: `scenario,model,n,component,mean,variance,reps,seed`.
pub fn decomp_to_csv(reports: &[DecompReport]) -> String {
    let mut rows: Vec<&DecompReport> = reports.iter().collect();
    rows.sort_by_key(|r| (r.scenario, r.n, r.component));
    let mut out = String::from("scenario,model,n,component,mean,variance,reps,seed\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.scenario.truth,
            r.scenario.model,
            r.n,
            r.component.csv_name(),
            fmt_sig(r.mean, 6),
            fmt_sig(r.variance, 6),
            r.reps,
            r.seed
        )
        .expect("writing to String cannot fail");
    }
    out
}

/// Column key: (data family, n), in sorted order.
fn columns(cells: impl Iterator<Item = (Family, usize)>) -> Vec<(Family, usize)> {
    let mut cols: Vec<(Family, usize)> = cells.collect();
    cols.sort();
    cols.dedup();
    cols
}

/// Markdown table of method rows: one column per (data family, sample size),
/// three decimals, `---` for methods that do not exist under the model,
/// blank for cells absent from `reports`.
pub fn to_markdown_table(reports: &[BiasReport]) -> String {
    let cols = columns(reports.iter().map(|r| (r.scenario.truth, r.n)));
    let mut methods: Vec<Method> = reports.iter().map(|r| r.method).collect();
    methods.sort();
    methods.dedup();

    let mut out = String::from("| Method |");
    for (fam, n) in &cols {
        write!(out, " {fam} n={n} |").unwrap();
    }
    out.push('\n');
    out.push_str("|---|");
    out.push_str(&"---|".repeat(cols.len()));
    out.push('\n');
    for m in methods {
        write!(out, "| {} |", m.label()).unwrap();
        for (fam, n) in &cols {
            let cell = reports
                .iter()
                .find(|r| r.method == m && r.scenario.truth == *fam && r.n == *n);
            match cell {
                Some(r) => match r.estimate {
                    Some(v) => write!(out, " {v:.3} |").unwrap(),
                    None => out.push_str(" --- |"),
                },
                None => out.push_str("  |"),
            }
        }
        out.push('\n');
    }
    out
}

/// Markdown table of decomposition rows: one block of five components per
/// scenario, mean columns then variance columns over the sample sizes.
pub fn decomp_to_markdown_table(reports: &[DecompReport]) -> String {
    let sizes: Vec<usize> = {
        let mut v: Vec<usize> = reports.iter().map(|r| r.n).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut scenarios: Vec<Scenario> = reports.iter().map(|r| r.scenario).collect();
    scenarios.sort();
    scenarios.dedup();

    let mut out = String::from("| Data | Model | Term |");
    for n in &sizes {
        write!(out, " mean n={n} |").unwrap();
    }
    for n in &sizes {
        write!(out, " var n={n} |").unwrap();
    }
    out.push('\n');
    out.push_str("|---|---|---|");
    out.push_str(&"---|".repeat(2 * sizes.len()));
    out.push('\n');
    for sc in scenarios {
        for comp in Component::all() {
            let row: Vec<Option<&DecompReport>> = sizes
                .iter()
                .map(|n| {
                    reports
                        .iter()
                        .find(|r| r.scenario == sc && r.component == comp && r.n == *n)
                })
                .collect();
            if row.iter().all(Option::is_none) {
                continue;
            }
            write!(out, "| {} | {} | {} |", sc.truth, sc.model, comp.label()).unwrap();
            for cell in &row {
                match cell {
                    Some(r) => write!(out, " {:.3} |", r.mean).unwrap(),
                    None => out.push_str("  |"),
                }
            }
            for cell in &row {
                match cell {
                    Some(r) => write!(out, " {:.3} |", r.variance).unwrap(),
                    None => out.push_str("  |"),
                }
            }
            out.push('\n');
        }
    }
    out
}
