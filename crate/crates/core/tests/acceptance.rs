//! One line per acceptance criterion; failing checks are listed beneath their criterion.

use std::process::ExitCode;
use std::time::Instant;

use trivalent::verify::{run, Report, Target};

mod common;

struct Criterion {
    number: usize,
    name: &'static str,
    failures: Vec<String>,
    elapsed_ms: u128,
}

fn from_reports(number: usize, name: &'static str, targets: &[Target]) -> Criterion {
    let start = Instant::now();
    let reports: Vec<Report> = targets.iter().map(|&t| run(t)).collect();
    let failures = reports
        .iter()
        .flat_map(|r| r.failures())
        .map(|l| {
            format!(
                "{}: expected {} [{}], computed {}",
                l.id, l.expected, l.source, l.computed
            )
        })
        .collect();
    Criterion {
        number,
        name,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn structural() -> Criterion {
    let start = Instant::now();
    let mut c = from_reports(8, "structural", &[Target::Windy, Target::RotSwitch]);
    let properties: [(&str, common::Property); 8] = [
        ("rot_full_order", common::rotation_has_full_order),
        ("switch_involution", common::switch_is_involution),
        ("vertex_reversal_negates", common::reversal_negates),
        ("canonical_form_stable", common::canonical_form_is_stable),
        ("associativity", common::composition_is_associative),
        ("interchange", common::interchange_law),
        ("crossing_naturality", common::crossing_is_natural),
        ("confluence", common::reduction_is_confluent),
    ];
    for (name, property) in properties {
        if let Err(e) = property() {
            c.failures.push(format!("{name} ({} cases): {e}", common::CASES));
        }
    }
    c.elapsed_ms = start.elapsed().as_millis();
    c
}

fn main() -> ExitCode {
    let criteria = vec![
        from_reports(1, "gram5", &[Target::Gram5]),
        from_reports(2, "gram16", &[Target::Gram16, Target::Rank3]),
        from_reports(3, "dims", &[Target::Dims]),
        from_reports(4, "relations", &[Target::Relations]),
        from_reports(5, "g2-oracle", &[Target::G2Oracle]),
        from_reports(6, "octonion", &[Target::Octonion]),
        from_reports(7, "tl-functor", &[Target::TlFunctor]),
        structural(),
    ];
    let mut passed = 0;
    for c in &criteria {
        let status = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {:<11} {status}  ({} ms)", c.number, c.name, c.elapsed_ms);
        for f in &c.failures {
            println!("    {f}");
        }
        passed += usize::from(c.failures.is_empty());
    }
    println!("acceptance: {passed} of {} criteria pass", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
