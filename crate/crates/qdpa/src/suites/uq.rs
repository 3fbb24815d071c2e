//! The quantized enveloping algebra laws (defining relations and module
//! algebra structure) and the root-vector identity suite.

use crate::galg::AlgebraKind;
use crate::uq::{
    check_module_algebra, check_nilpotency, check_uq_relations, lusztig_rootvector_recursion,
    verify_rootvector_identities, UqRealization,
};

use super::{SuiteParams, SuiteReport};

fn realization(params: &SuiteParams) -> Result<UqRealization, String> {
    let kind = match params.kind {
        AlgebraKind::Exterior => AlgebraKind::DividedPower,
        k => k,
    };
    UqRealization::new(params.n, kind, params.field).map_err(|e| e.to_string())
}

pub fn suite(params: &SuiteParams) -> SuiteReport {
    const S: &str = "uq";
    let mut report = SuiteReport::new();
    let r = match realization(params) {
        Ok(r) => r,
        Err(e) => {
            report.skip(S, "relation suite", "uq-relations", e);
            return report;
        }
    };
    for c in check_uq_relations(&r, params.degree).results {
        report.push(S, c.law, "uq-defining-relations", c.counterexample);
    }
    for c in check_module_algebra(&r, params.degree).results {
        report.push(S, c.law, "uq-module-algebra", c.counterexample);
    }
    if matches!(r.kind, AlgebraKind::Restricted(_)) {
        for c in check_nilpotency(&r).results {
            report.push(S, c.law, "uq-nilpotency", c.counterexample);
        }
    } else {
        report.skip(
            S,
            "e_i^l = f_i^l = 0 on the restricted algebra",
            "uq-nilpotency",
            "needs the restricted kind",
        );
    }
    report
}

pub fn rootvector_suite(params: &SuiteParams) -> SuiteReport {
    const S: &str = "rootvectors";
    let mut report = SuiteReport::new();
    let r = match realization(params) {
        Ok(r) => r,
        Err(e) => {
            report.skip(S, "root vector suite", "rootvector-identities", e);
            return report;
        }
    };
    for c in verify_rootvector_identities(&r, params.degree).results {
        report.push(S, c.law, "rootvector-identities", c.counterexample);
    }
    let (_, rec) = lusztig_rootvector_recursion(&r, params.degree);
    for c in rec.results {
        report.push(S, c.law, "rootvector-braid-recursion", c.counterexample);
    }
    report
}
