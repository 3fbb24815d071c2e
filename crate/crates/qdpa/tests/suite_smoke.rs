use qdpa::galg::AlgebraKind;
use qdpa::qarith::ScalarField;
use qdpa::suites::{run_suite, SuiteParams, LawStatus};

#[test]
fn smoke_all_suites() {
    let fields = [
        ("generic", ScalarField::Generic),
        ("root:3", ScalarField::root_of_unity(3).unwrap()),
        ("root:6", ScalarField::root_of_unity(6).unwrap()),
    ];
    for (fname, field) in fields {
        let kind = match field {
            ScalarField::Generic => AlgebraKind::DividedPower,
            _ => AlgebraKind::Restricted(3),
        };
        let params = SuiteParams { n: 2, field, kind, degree: 4, ..Default::default() };
        let report = run_suite("all", &params).unwrap();
        for law in &report.laws {
            if law.status == LawStatus::Fail {
                panic!("{fname}: {}/{} failed: {:?}", law.suite, law.law, law.counterexample);
            }
        }
        let n_pass = report.laws.iter().filter(|l| l.status == LawStatus::Pass).count();
        let n_skip = report.laws.iter().filter(|l| l.status == LawStatus::Skipped).count();
        println!("{fname}: {} laws pass, {} skipped", n_pass, n_skip);
    }
}
