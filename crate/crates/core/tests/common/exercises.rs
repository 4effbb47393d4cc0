//! Propositional goals shared by the search tests.

use gpnd::kernel::{check_node, Context, Environment, Mode};
use gpnd::search::prove;
use gpnd::syntax::Formula;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Intuitionistic tautologies that a depth-12 search must find.
pub const EXERCISES: [&str; 9] = [
    "A /\\ B -> B /\\ A",
    "((A /\\ B) -> C) -> (A -> B -> C)",
    "(A -> B -> C) -> ((A /\\ B) -> C)",
    "(A -> B -> C) -> ((A -> B) -> (A -> C))",
    "A -> B -> A",
    "(A <-> (A -> B)) -> B",
    "((A \\/ (A -> C)) -> C) -> C",
    "~~A /\\ ~~B -> ~~(A /\\ B)",
    "~~(A /\\ B) -> ~~A /\\ ~~B",
];

/// Classical tautologies that no intuitionistic search may find.
pub const CLASSICAL: [&str; 4] = ["A \\/ ~A", "((A -> B) -> A) -> A", "~~A -> A", "(~B -> ~A) -> A -> B"];

/// A random formula over `atoms` letters and falsity.
pub fn random_formula(rng: &mut ChaCha8Rng, atoms: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..atoms + 1) {
            0 if rng.gen_bool(0.3) => Formula::Bottom,
            i => Formula::prop(["A", "B", "C", "D", "E"][i.saturating_sub(1) % atoms]),
        };
    }
    let a = random_formula(rng, atoms, depth - 1);
    let b = random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        2 => Formula::not(a),
        _ => Formula::implies(a, b),
    }
}

/// Searches random goals until `wanted` proofs are found, re-checking each
/// proof with the kernel and re-running the search for determinism. Returns
/// the number of goals tried, or the first offending goal.
pub fn random_successes(seed: u64, wanted: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut found, mut tried) = (0, 0);
    while found < wanted {
        tried += 1;
        if tried >= 100 * wanted {
            return Err(format!("only {found} successes in {tried} goals"));
        }
        let atoms = rng.gen_range(3..=5);
        let hyps: Vec<(String, Formula)> = (0..rng.gen_range(0..=2))
            .map(|i| (format!("p{i}"), random_formula(&mut rng, atoms, 2)))
            .collect();
        let goal = random_formula(&mut rng, atoms, 3);
        let Ok(proof) = prove(&goal, &hyps, 8) else { continue };
        let ctx = Context::from_hypotheses(&hyps, Mode::Intuitionistic);
        let diags = check_node(&proof, &ctx, &Environment::new());
        if !diags.is_empty() || proof.conclusion != goal {
            return Err(format!("{goal}: {diags:?}"));
        }
        if prove(&goal, &hyps, 8).as_ref() != Ok(&proof) {
            return Err(format!("{goal}: search is not deterministic"));
        }
        found += 1;
    }
    Ok(tried)
}
