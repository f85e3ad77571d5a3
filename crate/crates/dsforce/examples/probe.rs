//! Dev scratch tool: per-strength engine status for degree sequences.

use dsforce::degseq::DegreeSequence;
use dsforce::partition::{ClassSet, PartitionView};
use dsforce::rules::engine::BoundState;

fn suffix_pairs(view: &PartitionView) -> Vec<(ClassSet, ClassSet)> {
    let nclasses = view.classes().len();
    let dull = view.dull_classes();
    let bad = view.bad_classes();
    let mut pairs = Vec::new();
    for cut in 1..nclasses {
        let mut j = ClassSet::EMPTY;
        for c in cut..nclasses {
            j = j.union(ClassSet::single(c));
        }
        let comp = view.complement_of(j);
        for (i, jj) in [
            (comp, j),
            (comp.minus(dull), j),
            (comp, j.minus(bad)),
            (comp.minus(dull), j.minus(bad)),
            (j, comp),
            (j.minus(dull), comp),
        ] {
            if !i.is_empty() && !jj.is_empty() && i.is_disjoint(jj) && !pairs.contains(&(i, jj)) {
                pairs.push((i, jj));
            }
        }
    }
    pairs
}

fn main() {
    for arg in std::env::args().skip(1) {
        let seq = DegreeSequence::parse(&arg).expect("parse");
        let view = PartitionView::from_sequence(&seq);
        let pairs = suffix_pairs(&view);

        let mut q = BoundState::new(view.clone());
        q.assume_no_completable_card();
        q.run(&[]);
        let q_bad = q.is_contradictory();

        let mut g1 = q.clone();
        for &(i, j) in &pairs {
            g1.post_pair_floors(i, j, false);
        }
        g1.run(&pairs);
        let g1_bad = g1.is_contradictory();

        let mut g2 = g1.clone();
        if !g1_bad {
            for &(i, j) in &pairs {
                g2.post_pair_floors(i, j, true);
            }
            g2.run(&pairs);
        }
        let g2_bad = g2.is_contradictory();

        let g3_bad = if g2_bad {
            true
        } else {
            let mut g3 = g2.clone();
            g3.shave(&pairs, 3);
            g3.is_contradictory()
        };

        println!("{arg}: q={q_bad} g1={g1_bad} g2={g2_bad} g3={g3_bad}");
    }
}
