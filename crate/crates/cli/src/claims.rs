//! The fixed suite of extremal-value claims and its report.
//!
//! Every record computes its expected value from a closed form in the
//! family parameters (or, for the blow-up identities, from an exact solve
//! on the base graph) and compares it to an exact or constructive
//! computation on the generated instance.

use std::fmt::{self, Write};

use powerdom::constructive::constructive_kpds;
use powerdom::families::{self, FamilySpec};
use powerdom::solvers::{gamma_exact, gamma_pk_exact, gamma_t_exact, SolveError, SolveResult};
use powerdom::transforms::{blowup_clique, blowup_independent};
use powerdom::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimMethod {
    Exact,
    Constructive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    /// Order of the instance the claim is checked on.
    pub n: usize,
    pub expected: usize,
    /// `None` when the claim was skipped or the construction was not
    /// certified.
    pub computed: Option<usize>,
    pub method: ClaimMethod,
    pub status: Status,
    pub detail: String,
}

impl ClaimRecord {
    fn new(claim_id: String, n: usize, expected: usize, method: ClaimMethod) -> Self {
        ClaimRecord {
            claim_id,
            n,
            expected,
            computed: None,
            method,
            status: Status::SkippedBudget,
            detail: String::new(),
        }
    }

    fn settle(mut self, computed: Option<usize>, detail: String) -> Self {
        self.status = if computed == Some(self.expected) {
            Status::Pass
        } else {
            Status::Fail
        };
        self.computed = computed;
        self.detail = detail;
        self
    }

    fn budget_exhausted(mut self, err: &SolveError) -> Self {
        self.status = Status::SkippedBudget;
        self.detail = err.to_string();
        self
    }
}

/// One entry of the suite before it is run.
enum Claim {
    /// `γ_{p,k}` of a family instance against a closed form.
    PowerDomination {
        id: String,
        spec: FamilySpec,
        k: usize,
        expected: usize,
    },
    /// `γ_t` of a family instance against a closed form.
    TotalDomination {
        id: String,
        spec: FamilySpec,
        expected: usize,
    },
    /// `γ` of a family instance against a closed form.
    Domination {
        id: String,
        spec: FamilySpec,
        expected: usize,
    },
    /// `γ_{p,k}` of the independent blow-up equals `γ_t` of the base.
    IndependentBlowup {
        id: String,
        base: fn() -> Graph,
        k: usize,
    },
    /// `γ_{p,k}` of the clique blow-up equals `γ` of the base.
    CliqueBlowup {
        id: String,
        base: fn() -> Graph,
        k: usize,
    },
    /// Certified constructive size equals `n / (k + l + 2)`.
    Constructive {
        id: String,
        spec: FamilySpec,
        k: usize,
        l: usize,
    },
}

fn suite() -> Vec<Claim> {
    let mut out = Vec::new();

    // D_{r,q}: γ_{p,r-3} = 2q.
    for (r, q) in [(4, 2), (5, 2), (6, 2)] {
        out.push(Claim::PowerDomination {
            id: format!("drq:r={r},q={q}"),
            spec: FamilySpec::Drq { r, q },
            k: r - 3,
            expected: 2 * q,
        });
    }

    // Odd G_{r,q}: γ_{p,(r-3)/2} = (n+2)/(r+1).
    for (r, q) in [(5, 1), (5, 2), (7, 1)] {
        let spec = FamilySpec::GoddRq { r, q };
        out.push(Claim::PowerDomination {
            id: format!("g-odd:r={r},q={q}"),
            spec,
            k: (r - 3) / 2,
            expected: (spec.order() + 2) / (r + 1),
        });
    }

    // Even G_{r,q}: γ_{p,(r-2)/2} = (n+1)/(r+1).
    for (r, q) in [(4, 1), (4, 2), (6, 1)] {
        let spec = FamilySpec::GevenRq { r, q };
        out.push(Claim::PowerDomination {
            id: format!("g-even:r={r},q={q}"),
            spec,
            k: (r - 2) / 2,
            expected: (spec.order() + 1) / (r + 1),
        });
    }

    out.push(Claim::IndependentBlowup {
        id: "blowup-indep:base=K4,k=1".into(),
        base: || Graph::complete(4),
        k: 1,
    });
    out.push(Claim::IndependentBlowup {
        id: "blowup-indep:base=C4,k=1".into(),
        base: || Graph::cycle(4),
        k: 1,
    });
    for k in 1..=2 {
        out.push(Claim::CliqueBlowup {
            id: format!("blowup-clique:base=H0(q=1),k={k}"),
            base: || families::gen_h0q(1).expect("q = 1 is valid").graph,
            k,
        });
    }

    // F_{0,q}: γ_t = 2q; H_{0,q}: γ = 2q.
    for q in 1..=3 {
        out.push(Claim::TotalDomination {
            id: format!("f0q:q={q}"),
            spec: FamilySpec::F0q { q },
            expected: 2 * q,
        });
    }
    for q in 1..=2 {
        out.push(Claim::Domination {
            id: format!("h0q:q={q}"),
            spec: FamilySpec::H0q { q },
            expected: 2 * q,
        });
    }

    // C_{k,t}: γ_{p,k} = n/(k+l+2), exactly and constructively.
    for (k, l, t) in [(2, 2, 2), (2, 2, 3), (3, 3, 2), (4, 2, 2)] {
        let spec = FamilySpec::Ckt { k, l, t };
        out.push(Claim::PowerDomination {
            id: format!("ckt:k={k},l={l},t={t}"),
            spec,
            k,
            expected: spec.order() / (k + l + 2),
        });
        out.push(Claim::Constructive {
            id: format!("ckt-constructive:k={k},l={l},t={t}"),
            spec,
            k,
            l,
        });
    }

    out.sort_by(|a, b| a.id().cmp(b.id()));
    out
}

impl Claim {
    fn id(&self) -> &str {
        match self {
            Claim::PowerDomination { id, .. }
            | Claim::TotalDomination { id, .. }
            | Claim::Domination { id, .. }
            | Claim::IndependentBlowup { id, .. }
            | Claim::CliqueBlowup { id, .. }
            | Claim::Constructive { id, .. } => id,
        }
    }

    /// Order of the graph the claim is checked on, computed without
    /// building anything large.
    fn order(&self) -> usize {
        match self {
            Claim::PowerDomination { spec, .. }
            | Claim::TotalDomination { spec, .. }
            | Claim::Domination { spec, .. }
            | Claim::Constructive { spec, .. } => spec.order(),
            Claim::IndependentBlowup { base, k, .. } => base().order() * (k + 2),
            Claim::CliqueBlowup { base, k, .. } => base().order() * (k + 1),
        }
    }

    fn run(&self, budget: u64) -> ClaimRecord {
        let n = self.order();
        let id = self.id().to_string();
        let exact = |record: ClaimRecord, result: Result<SolveResult, SolveError>| match result {
            Ok(r) => {
                let detail = format!("witness {}", r.witness);
                record.settle(Some(r.value), detail)
            }
            Err(e) => record.budget_exhausted(&e),
        };
        match self {
            Claim::PowerDomination {
                spec, k, expected, ..
            } => {
                let record = ClaimRecord::new(id, n, *expected, ClaimMethod::Exact);
                exact(record, gamma_pk_exact(&build(spec), *k, budget))
            }
            Claim::TotalDomination { spec, expected, .. } => {
                let record = ClaimRecord::new(id, n, *expected, ClaimMethod::Exact);
                exact(record, gamma_t_exact(&build(spec), budget))
            }
            Claim::Domination { spec, expected, .. } => {
                let record = ClaimRecord::new(id, n, *expected, ClaimMethod::Exact);
                exact(record, gamma_exact(&build(spec), budget))
            }
            Claim::IndependentBlowup { base, k, .. } => {
                let base = base();
                let blown = blowup_independent(&base, *k).expect("suite bases are regular");
                link(
                    id,
                    n,
                    gamma_t_exact(&base, budget),
                    |b| gamma_pk_exact(&blown.graph, *k, b),
                    budget,
                )
            }
            Claim::CliqueBlowup { base, k, .. } => {
                let base = base();
                let blown =
                    blowup_clique(&base, *k).expect("suite bases are regular and claw-free");
                link(
                    id,
                    n,
                    gamma_exact(&base, budget),
                    |b| gamma_pk_exact(&blown.graph, *k, b),
                    budget,
                )
            }
            Claim::Constructive { spec, k, l, .. } => {
                let g = build(spec);
                let expected = n / (k + l + 2);
                let record = ClaimRecord::new(id, n, expected, ClaimMethod::Constructive);
                let sol = constructive_kpds(&g, *k);
                let gains: Vec<String> = sol
                    .sequence
                    .iter()
                    .map(|s| format!("{}:+{}", s.vertex, s.gain))
                    .collect();
                let detail = format!(
                    "pds {}, certified {}, bound {}, steps [{}]",
                    sol.pds,
                    sol.certified,
                    sol.bound,
                    gains.join(" ")
                );
                record.settle(sol.certified.then_some(sol.pds.len()), detail)
            }
        }
    }
}

fn build(spec: &FamilySpec) -> Graph {
    spec.generate()
        .expect("suite parameters are in range")
        .graph
}

/// Compares an exact value on the blown-up graph with the exact value of
/// the linked parameter on the base graph.
fn link(
    id: String,
    n: usize,
    base: Result<SolveResult, SolveError>,
    blown: impl FnOnce(u64) -> Result<SolveResult, SolveError>,
    budget: u64,
) -> ClaimRecord {
    let base = match base {
        Ok(r) => r,
        Err(e) => return ClaimRecord::new(id, n, 0, ClaimMethod::Exact).budget_exhausted(&e),
    };
    let record = ClaimRecord::new(id, n, base.value, ClaimMethod::Exact);
    match blown(budget.saturating_sub(base.explored)) {
        Ok(r) => {
            let detail = format!("base witness {}, witness {}", base.witness, r.witness);
            record.settle(Some(r.value), detail)
        }
        Err(e) => record.budget_exhausted(&e),
    }
}

/// Runs every claim whose instance has at most `max_n` vertices; the rest
/// are reported as skipped. Records are ordered by `claim_id`.
pub fn verify_claims(max_n: usize, budget: u64) -> Vec<ClaimRecord> {
    suite()
        .iter()
        .map(|claim| {
            let n = claim.order();
            if n > max_n {
                let mut record = ClaimRecord::new(
                    claim.id().to_string(),
                    n,
                    expected_without_running(claim),
                    method_of(claim),
                );
                record.detail = format!("order {n} exceeds --max-n {max_n}");
                record
            } else {
                claim.run(budget)
            }
        })
        .collect()
}

fn method_of(claim: &Claim) -> ClaimMethod {
    match claim {
        Claim::Constructive { .. } => ClaimMethod::Constructive,
        _ => ClaimMethod::Exact,
    }
}

/// Closed-form expected value; blow-up links have no closed form and
/// report 0 when not run.
fn expected_without_running(claim: &Claim) -> usize {
    match claim {
        Claim::PowerDomination { expected, .. }
        | Claim::TotalDomination { expected, .. }
        | Claim::Domination { expected, .. } => *expected,
        Claim::IndependentBlowup { .. } | Claim::CliqueBlowup { .. } => 0,
        Claim::Constructive { spec, k, l, .. } => spec.order() / (k + l + 2),
    }
}

/// True iff no record failed. Skipped records do not count as failures.
pub fn all_passed(records: &[ClaimRecord]) -> bool {
    records.iter().all(|r| r.status != Status::Fail)
}

/// Aligned plain-text table, one row per record.
pub fn render_table(records: &[ClaimRecord]) -> String {
    let header = ["claim", "n", "expected", "computed", "method", "status"];
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.claim_id.clone(),
                r.n.to_string(),
                r.expected.to_string(),
                r.computed
                    .map_or_else(|| "-".to_string(), |c| c.to_string()),
                match r.method {
                    ClaimMethod::Exact => "exact".to_string(),
                    ClaimMethod::Constructive => "constructive".to_string(),
                },
                r.status.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header);
    for row in &rows {
        line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use powerdom::solvers::DEFAULT_BUDGET;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<String> = suite().iter().map(|c| c.id().to_string()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn zero_cap_skips_everything() {
        let records = verify_claims(0, DEFAULT_BUDGET);
        assert!(records
            .iter()
            .all(|r| r.status == Status::SkippedBudget && r.computed.is_none()));
        assert!(all_passed(&records));
    }

    #[test]
    fn cap_sixteen_includes_drq() {
        let records = verify_claims(16, DEFAULT_BUDGET);
        let d = records
            .iter()
            .find(|r| r.claim_id == "drq:r=4,q=2")
            .unwrap();
        assert_eq!(
            (d.expected, d.computed, d.status),
            (4, Some(4), Status::Pass)
        );
        let big = records
            .iter()
            .find(|r| r.claim_id == "drq:r=5,q=2")
            .unwrap();
        assert_eq!(big.status, Status::SkippedBudget);
    }

    #[test]
    fn cap_nine_includes_even_g() {
        let records = verify_claims(9, DEFAULT_BUDGET);
        let g = records
            .iter()
            .find(|r| r.claim_id == "g-even:r=4,q=1")
            .unwrap();
        assert_eq!((g.n, g.expected, g.status), (9, 2, Status::Pass));
    }

    #[test]
    fn tiny_budget_skips_instead_of_failing() {
        let records = verify_claims(16, 1);
        assert!(records
            .iter()
            .any(|r| r.status == Status::SkippedBudget && r.n <= 16));
        assert!(records
            .iter()
            .all(|r| r.status != Status::Pass || r.computed == Some(r.expected)));
    }

    #[test]
    fn pass_iff_match() {
        for r in verify_claims(24, DEFAULT_BUDGET) {
            assert_eq!(
                r.status == Status::Pass,
                r.computed == Some(r.expected),
                "{}",
                r.claim_id
            );
            assert_eq!(r.status, Status::Pass, "{} {}", r.claim_id, r.detail);
        }
    }

    #[test]
    fn table_is_aligned() {
        let table = render_table(&verify_claims(10, DEFAULT_BUDGET));
        let lines: Vec<&str> = table.lines().collect();
        assert!(lines[0].starts_with("claim"));
        let col = lines[0].find("n ").unwrap();
        for l in &lines[1..] {
            assert_eq!(&l[col - 2..col], "  ");
        }
    }
}
