//! Bounded proof search; found proofs are printed as lemmas.

use gpnd::kernel::{check_document, Mode};
use gpnd::proof_format::{parse_formula, print_lemma, Lemma, Pos, ProofDocument};
use gpnd::search::prove;

fn main() {
    let goals = [
        "A /\\ B -> B /\\ A",
        "((A \\/ (A -> C)) -> C) -> C",
        "(A <-> (A -> B)) -> B",
        "~~A /\\ ~~B -> ~~(A /\\ B)",
        "A \\/ ~A",
        "((A -> B) -> A) -> A",
    ];
    for (i, g) in goals.iter().enumerate() {
        let goal = parse_formula(g).unwrap();
        match prove(&goal, &[], 12) {
            Ok(root) => {
                let lemma = Lemma {
                    name: format!("found{i}"),
                    hypotheses: Vec::new(),
                    goal,
                    root,
                    pos: Pos::default(),
                };
                let doc = ProofDocument { lemmas: vec![lemma.clone()], ..Default::default() };
                let ok = check_document(&doc, Mode::Intuitionistic).accepted;
                println!("{}\n# kernel: {}\n", print_lemma(&lemma), if ok { "accepted" } else { "REJECTED" });
            }
            Err(e) => println!("# {g}: {e}\n"),
        }
    }
}
