//! Runs every seeded check at a small configuration and prints one line
//! per check.
//!
//! Usage: `cargo run --release --example verify_suite -- [trials] [cutoff]`

use gorlab::verify::{run_check, Check, Outcome, Selection, TrialConfig};

fn main() -> anyhow::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let trials = args.first().copied().unwrap_or(5);
    let cutoff = args.get(1).copied().unwrap_or(7);
    let base = TrialConfig {
        trials,
        cutoff,
        margin: 4,
        max_dim: 8,
        ..TrialConfig::default()
    };

    for (check, e) in [
        (Check::Lofwall, 3),
        (Check::MainTheorem, 3),
        (Check::Vanishing, 3),
        (Check::CounterexampleE2, 2),
        (Check::LemmaSuite, 3),
    ] {
        let cfg = TrialConfig { e, ..base.clone() };
        let report = run_check(check, &cfg, None, Selection::All)?;
        let counts: Vec<String> = [
            Outcome::Pass,
            Outcome::Fail,
            Outcome::Skip,
            Outcome::Inconclusive,
            Outcome::ResourceLimit,
        ]
        .iter()
        .map(|&o| format!("{:?} {}", o, report.count(o)))
        .collect();
        println!(
            "{:<18} {}  {}",
            check.name(),
            if report.pass { "PASS" } else { "FAIL" },
            counts.join(", ")
        );
        for f in &report.failures {
            println!("    {}: {}\n      {}", f.label, f.reason, f.reproducer);
        }
    }
    Ok(())
}
