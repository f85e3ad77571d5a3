//! Dev scratch tool: inspect the unique-vertex contact quantities.

use dsforce::degseq::DegreeSequence;
use dsforce::partition::{ClassSet, PartitionView};
use dsforce::rules::engine::BoundState;
use dsforce::rules::UniqueVertexContext;

fn main() {
    for arg in std::env::args().skip(1) {
        let seq = DegreeSequence::parse(&arg).expect("parse");
        let view = PartitionView::from_sequence(&seq);
        let mut q = BoundState::new(view.clone());
        q.assume_no_completable_card();
        println!(
            "seq {:?} contradictory={}",
            seq.degrees(),
            q.is_contradictory()
        );
        for ctx in UniqueVertexContext::all(&view) {
            let vcl = ClassSet::single(ctx.class);
            println!(
                "  v deg {}: s={:?} t={:?} n_s={} sigma(v,s)={} tau(v,t)={}",
                ctx.degree,
                ctx.s.iter().collect::<Vec<_>>(),
                ctx.t.iter().collect::<Vec<_>>(),
                view.n_of(ctx.s),
                q.sigma(vcl, ctx.s),
                q.tau(vcl, ctx.t),
            );
            for a in 0..view.classes().len() {
                let i = ClassSet::single(a);
                if a != ctx.class && view.is_neighbourly_set(i) {
                    println!(
                        "    nbly i={{class {a} deg {}}} tau(i,v)={}",
                        view.classes()[a].degree,
                        q.tau(i, vcl)
                    );
                }
            }
        }
    }
}
