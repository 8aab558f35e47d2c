// Sweeping the connected covers of a graph up to a degree, sharded and
// resumable, with results kept as JSON lines.

use std::sync::Arc;

use planar_covers::corpus::{conjecture_harness, cycle, k4, HarnessConfig, Outcome, ResultsTable, Shard};
use planar_covers::Budget;

fn tally(t: &ResultsTable) -> String {
    let planar = t.count(|o| !matches!(o, Outcome::NotPlanar));
    let ok = t.count(|o| matches!(o, Outcome::Satisfied { .. }));
    let failed = t.count(|o| matches!(o, Outcome::Exhausted { .. }));
    format!("{} covers, {planar} planar, {ok} satisfied, {failed} fail everywhere", t.rows.len())
}

pub fn run() -> planar_covers::Result<()> {
    let k4 = Arc::new(k4());
    let config = HarnessConfig {
        max_degree: 3,
        ..HarnessConfig::default()
    };
    let report = conjecture_harness("k4", &k4, &config)?;
    println!("K4 up to degree 3: {}", tally(&report.table));
    for row in report.table.exhausted().take(3) {
        println!("  fails everywhere: degree {} voltages {:?}", row.degree, row.voltages);
    }

    // two shards, each stopped every four covers and resumed, give the
    // same rows as a single run
    let c4 = Arc::new(cycle(4));
    let whole = conjecture_harness("c4", &c4, &config)?.table;
    let mut rows = Vec::new();
    for index in 0..2 {
        let mut config = HarnessConfig {
            max_degree: 3,
            shard: Shard::new(index, 2)?,
            max_items: Some(4),
            budget: Budget::default(),
            ..HarnessConfig::default()
        };
        let mut table: Option<ResultsTable> = None;
        let mut runs = 0;
        loop {
            let part = conjecture_harness("c4", &c4, &config)?;
            runs += 1;
            let cursor = part.table.cursor;
            match table.as_mut() {
                Some(t) => t.extend(part.table)?,
                None => table = Some(part.table),
            }
            match cursor {
                Some(c) => config.resume = Some(c),
                None => break,
            }
        }
        let table = table.expect("the shard ran");
        println!("C4 shard {}: {} in {runs} runs", table.header.shard, tally(&table));
        rows.extend(table.rows);
    }
    rows.sort_by_key(|r| (r.degree, r.voltage_index));
    println!("shards reassemble the single run: {}", rows == whole.rows);
    println!("first line: {}", whole.to_jsonl().lines().next().unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
