//! Dev sweep: catalogue vs oracle over all graphic sequences of small n.

use dsforce::{apply_catalog, graphic_sequences, is_forcing_oracle, ForcingVerdict};
use std::collections::BTreeMap;

fn main() {
    let ns: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("n"))
        .collect();
    let ns = if ns.is_empty() { vec![6, 7] } else { ns };
    for n in ns {
        let mut forcing = 0usize;
        let mut proven = 0usize;
        let mut false_pos: Vec<String> = Vec::new();
        let mut missed: Vec<String> = Vec::new();
        let mut by_rule: BTreeMap<String, usize> = BTreeMap::new();
        for seq in graphic_sequences(n) {
            let oracle = is_forcing_oracle(&seq).expect("oracle");
            let truth = matches!(oracle, ForcingVerdict::ProvedForcing { .. });
            let report = apply_catalog(&seq).expect("graphic");
            let fired = report.fired_rule.clone();
            if truth {
                forcing += 1;
                if let Some(rule) = fired {
                    proven += 1;
                    *by_rule.entry(rule).or_default() += 1;
                } else {
                    missed.push(format!("{seq}"));
                }
            } else if let Some(rule) = fired {
                false_pos.push(format!("{seq} via {rule}"));
            }
        }
        println!("n={n}: forcing={forcing} proven={proven} false_positives={}", false_pos.len());
        for fp in &false_pos {
            println!("  FALSE POSITIVE: {fp}");
        }
        println!("  by rule: {by_rule:?}");
        if !missed.is_empty() && missed.len() <= 40 {
            println!("  missed: {missed:?}");
        } else if !missed.is_empty() {
            println!("  missed {} sequences (first 40): {:?}", missed.len(), &missed[..40]);
        }
    }
}
