//! Free differential calculus.

use crate::presentations::Presentation;
use crate::words::{GroupRingElem, Word};

/// Fox derivative of a word with respect to generator `j` (0-based).
///
/// `d(uv) = du + u dv`, `dx/dx = 1`, `dx^-1/dx = -x^-1`, `dy/dx = 0`.
pub fn fox_derivative(w: &Word, j: usize) -> GroupRingElem {
    let g = j as i32 + 1;
    let mut out = GroupRingElem::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l == g {
            out = out.add(&GroupRingElem::from_word(prefix.clone()));
        } else if l == -g {
            let p = prefix.concat(&Word::gen_inv(j));
            out = out.sub(&GroupRingElem::from_word(p));
        }
        prefix = prefix.concat(&Word::from_letters([l]));
    }
    out
}

/// The fundamental identity `sum_j (dw/dx_j)(x_j - 1) = w - 1` in the group
/// ring, checked exactly.
pub fn fundamental_identity_holds(w: &Word, rank: usize) -> bool {
    let mut acc = GroupRingElem::zero();
    for j in 0..rank {
        let d = fox_derivative(w, j);
        let xj_minus_1 =
            GroupRingElem::from_word(Word::gen(j)).sub(&GroupRingElem::one());
        acc = acc.add(&d.mul(&xj_minus_1));
    }
    let target = GroupRingElem::from_word(w.clone()).sub(&GroupRingElem::one());
    acc == target
}

/// Relator-by-generator matrix of Fox derivatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxMatrix {
    pub entries: Vec<Vec<GroupRingElem>>,
    pub rows: usize,
    pub cols: usize,
}

/// Rows are relators, columns generators; the fundamental identity is
/// asserted per row on construction.
pub fn fox_matrix(p: &Presentation) -> FoxMatrix {
    let rows = p.relators().len();
    let cols = p.rank();
    let entries: Vec<Vec<GroupRingElem>> = p
        .relators()
        .iter()
        .map(|r| {
            debug_assert!(fundamental_identity_holds(r, cols));
            (0..cols).map(|j| fox_derivative(r, j)).collect()
        })
        .collect();
    FoxMatrix {
        entries,
        rows,
        cols,
    }
}
