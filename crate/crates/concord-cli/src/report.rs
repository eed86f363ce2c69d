//! Typed reports for every subcommand. Each report serializes to JSON with
//! `--json` and renders to the text form below otherwise; both carry the
//! crate version and are deterministic functions of the invocation.

use concord_core::branched::{LinkingFormData, MoebiusVerdict};
use concord_core::obstruct::{FBoundReport, NonSliceCertificate, SeedDescription};
use concord_core::reproduce::ReproduceReport;
use concord_core::root::RootOfUnity;
use concord_core::surgery::AbelianGroupWithGens;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigReport {
    pub version: String,
    pub command: String,
    pub knot: String,
    pub at: RootOfUnity,
    pub sigma: i64,
    pub eta: usize,
}

impl SigReport {
    pub fn to_text(&self) -> String {
        format!(
            "knot: {}\nroot: {}\nsigma: {}\neta: {}\n",
            self.knot, self.at, self.sigma, self.eta
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonsliceReport {
    pub version: String,
    pub command: String,
    pub w: u64,
    pub knot: String,
    /// Set when the knot came out of a seed search rather than the argument.
    pub searched: Option<SeedDescription>,
    pub certificate: Option<NonSliceCertificate>,
}

impl NonsliceReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("winding number: {}\nknot: {}\n", self.w, self.knot);
        if let Some(desc) = &self.searched {
            s.push_str(&format!("search winner: {desc}\n"));
        }
        match &self.certificate {
            Some(cert) => {
                s.push_str("outcome: certificate\n");
                s.push_str(&cert.to_text());
            }
            None => s.push_str("outcome: empty\n"),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoebiusReport {
    pub version: String,
    pub command: String,
    pub knot: String,
    pub verdict: MoebiusVerdict,
    /// Linking data of the double branched cover when the form is defined.
    pub cover: Option<LinkingFormData>,
}

impl MoebiusReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("knot: {}\n", self.knot);
        if let Some(c) = &self.cover {
            s.push_str(&format!("cover: {c}\n"));
        }
        let verdict = match &self.verdict {
            MoebiusVerdict::Obstructed => "obstructed".to_string(),
            MoebiusVerdict::NotObstructed => "not obstructed".to_string(),
            MoebiusVerdict::Inapplicable { reason } => format!("inapplicable ({reason})"),
        };
        s.push_str(&format!("verdict: {verdict}\n"));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Report {
    pub version: String,
    pub command: String,
    pub presentation: Vec<Vec<String>>,
    pub group: AbelianGroupWithGens,
}

impl H1Report {
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = self
            .presentation
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        let mut s = format!("presentation rows: {}\ngroup: {}\n", rows.join(" "), self.group);
        for (j, label) in self.group.labels().iter().enumerate() {
            let ord = self.group.order_of_generator(j);
            let ord = if ord == 0.into() { "infinite".to_string() } else { ord.to_string() };
            s.push_str(&format!("generator {label}: order {ord}\n"));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FboundCliReport {
    pub version: String,
    pub command: String,
    pub a: i64,
    pub f: i64,
    pub d: u64,
    pub report: FBoundReport,
}

impl FboundCliReport {
    pub fn to_text(&self) -> String {
        let r = &self.report;
        format!(
            "parameters: a = {}, f = {}, d = {}\nstrict bounds hold: {}\nlower bound: {}\n\
             upper bound: {}\nworst low margin: {} at (n1, n2) = ({}, {})\n\
             worst high margin: {} at (n1, n2) = ({}, {})\n",
            self.a,
            self.f,
            self.d,
            if r.holds { "yes" } else { "no" },
            r.lower,
            r.upper,
            r.worst_low.margin,
            r.worst_low.n1,
            r.worst_low.n2,
            r.worst_high.margin,
            r.worst_high.n1,
            r.worst_high.n2,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceCliReport {
    pub version: String,
    pub command: String,
    pub report: ReproduceReport,
}

impl ReproduceCliReport {
    pub fn to_text(&self) -> String {
        self.report.to_text()
    }
}
