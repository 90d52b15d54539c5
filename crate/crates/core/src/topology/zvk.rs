//! Zariski–Van Kampen presentations from braid monodromy.

use crate::presentations::Presentation;
use crate::words::{artin_automorphism, BraidWord, Word};

use super::TopologyError;

/// Generators `x1..xn`; for every monodromy braid and every generator, the
/// relator `x_i^-1 * beta(x_i)` (all n per braid, reduced, trivial ones
/// dropped; redundant ones are left for Tietze simplification).
pub fn zvk_presentation(
    strands: usize,
    braids: &[BraidWord],
) -> Result<Presentation, TopologyError> {
    let mut relators = Vec::new();
    for b in braids {
        if b.strands() != strands {
            return Err(TopologyError::StrandMismatch {
                expected: strands,
                found: b.strands(),
            });
        }
        let auto = artin_automorphism(b);
        for i in 0..strands {
            let r = Word::gen_inv(i).concat(auto.image_of_gen(i));
            if !r.is_identity() {
                relators.push(r);
            }
        }
    }
    let gens = (1..=strands).map(|i| format!("x{i}")).collect();
    Ok(Presentation::new(gens, relators).expect("valid by construction"))
}
