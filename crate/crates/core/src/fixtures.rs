//! Built-in study objects: the nodal Zariski-pair groups, the double-cover
//! intermediate presentations, the rank-2 special linear representation that
//! distinguishes them, and the threshold family for the degree-6 pencil
//! `x^6 + y^6 + 6xy`.
//!
//! Word conventions: `[a,b] = a b a^-1 b^-1`; relations `u = v` are encoded
//! as relators `u v^-1`.

use std::sync::Arc;

use crate::algebra::numberfield::NumberField;
use crate::algebra::Rational;
use crate::alexander::{RepTemplate, SymEntry, SymTerm};
use crate::presentations::Presentation;
use crate::quotients::{FiniteHom, Perm};
use crate::topology::ThresholdInstance;
use crate::words::Word;

fn w(ls: &[i32]) -> Word {
    Word::from_letters(ls.iter().copied())
}

/// `< x,y,u,v | [x,v], [y,uv], v=[u^-1,x], u=y^-1 v y >`
/// (generators x=1, y=2, u=3, v=4).
pub fn presentation_one() -> Presentation {
    let x = w(&[1]);
    let y = w(&[2]);
    let u = w(&[3]);
    let v = w(&[4]);
    let relators = vec![
        Word::commutator(&x, &v),
        Word::commutator(&y, &u.concat(&v)),
        v.concat(&Word::commutator(&u.inverse(), &x).inverse()),
        u.concat(&y.inverse().concat(&v).concat(&y).inverse()),
    ];
    Presentation::new(
        vec!["x".into(), "y".into(), "u".into(), "v".into()],
        relators,
    )
    .unwrap()
}

/// `< x,y,w | [x,w], [y,[w,y]], w=[x^-1,[y^-1,w^-1]] >`
/// (generators x=1, y=2, w=3); the three-generator form of the same group,
/// with `w = v` and `u` eliminated.
pub fn presentation_two() -> Presentation {
    let x = w(&[1]);
    let y = w(&[2]);
    let ww = w(&[3]);
    let relators = vec![
        Word::commutator(&x, &ww),
        Word::commutator(&y, &Word::commutator(&ww, &y)),
        ww.concat(
            &Word::commutator(
                &x.inverse(),
                &Word::commutator(&y.inverse(), &ww.inverse()),
            )
            .inverse(),
        ),
    ];
    Presentation::new(vec!["x".into(), "y".into(), "w".into()], relators).unwrap()
}

/// The line-and-two-fibers complement group for the real pair of special
/// fibers (generators g1=1, g2=2, gp=3, gm=4).
pub fn tilde_g1() -> Presentation {
    let g1 = w(&[1]);
    let g2 = w(&[2]);
    let gp = w(&[3]);
    let gm = w(&[4]);
    let sq = |a: &Word| a.concat(a);
    let braid = |a: &Word, b: &Word| {
        // (ab)^2 = (ba)^2
        a.concat(b)
            .concat(a)
            .concat(b)
            .concat(&b.concat(a).concat(b).concat(a).inverse())
    };
    let relators = vec![
        Word::commutator(&g1, &g2),
        Word::commutator(&g2, &gp),
        Word::commutator(&g2, &gm),
        Word::commutator(&sq(&g1), &gp),
        Word::commutator(&sq(&g1), &gm),
        braid(&g1, &gp),
        braid(&g1, &gm),
        Word::commutator(&gm, &gp.concat(&g1).concat(&gp.inverse())),
        Word::commutator(&gp, &gm.inverse().concat(&g1).concat(&gm)),
    ];
    Presentation::new(
        vec!["g1".into(), "g2".into(), "gp".into(), "gm".into()],
        relators,
    )
    .unwrap()
}

/// The fully commutative analogue for the mixed pair of special fibers:
/// `Z^2 x F_2`.
pub fn tilde_g2() -> Presentation {
    let g1 = w(&[1]);
    let g2 = w(&[2]);
    let gp = w(&[3]);
    let gm = w(&[4]);
    let relators = vec![
        Word::commutator(&g1, &g2),
        Word::commutator(&g1, &gp),
        Word::commutator(&g1, &gm),
        Word::commutator(&g2, &gp),
        Word::commutator(&g2, &gm),
    ];
    Presentation::new(
        vec!["g1".into(), "g2".into(), "gp".into(), "gm".into()],
        relators,
    )
    .unwrap()
}

/// The hand-reduced index-2 kernel presentation (generators g1, tg1 = g2 g1
/// g2, c = g2^2, gp, gm, tgp = g2 gp g2, tgm = g2 gm g2).
pub fn tilde_k1_hand() -> Presentation {
    let g1 = w(&[1]);
    let tg1 = w(&[2]);
    let c = w(&[3]);
    let gp = w(&[4]);
    let gm = w(&[5]);
    let tgp = w(&[6]);
    let tgm = w(&[7]);
    let sq = |a: &Word| a.concat(a);
    let braid = |a: &Word, b: &Word| {
        a.concat(b)
            .concat(a)
            .concat(b)
            .concat(&b.concat(a).concat(b).concat(a).inverse())
    };
    let eq = |a: &Word, b: &Word| a.concat(&b.inverse());
    let relators = vec![
        eq(&tg1, &g1.concat(&c)),
        eq(&tg1, &c.concat(&g1)),
        eq(&tgp, &gp.concat(&c)),
        eq(&tgp, &c.concat(&gp)),
        eq(&tgm, &gm.concat(&c)),
        eq(&tgm, &c.concat(&gm)),
        Word::commutator(&gp, &sq(&g1)),
        Word::commutator(&gm, &sq(&g1)),
        braid(&g1, &gp),
        braid(&g1, &gm),
        Word::commutator(&gm, &gp.concat(&g1).concat(&gp.inverse())),
        Word::commutator(&gp, &gm.inverse().concat(&g1).concat(&gm)),
    ];
    Presentation::new(
        vec![
            "g1".into(),
            "tg1".into(),
            "c".into(),
            "gp".into(),
            "gm".into(),
            "tgp".into(),
            "tgm".into(),
        ],
        relators,
    )
    .unwrap()
}

/// The conic-and-fibers complement group after killing the double line
/// meridian (generators g1, gp, gm).
pub fn z1_hand() -> Presentation {
    let g1 = w(&[1]);
    let gp = w(&[2]);
    let gm = w(&[3]);
    let sq = |a: &Word| a.concat(a);
    let braid = |a: &Word, b: &Word| {
        a.concat(b)
            .concat(a)
            .concat(b)
            .concat(&b.concat(a).concat(b).concat(a).inverse())
    };
    let relators = vec![
        Word::commutator(&gp, &sq(&g1)),
        Word::commutator(&gm, &sq(&g1)),
        Word::commutator(&gp, &gm.inverse().concat(&g1).concat(&gm)),
        Word::commutator(&gm, &gp.inverse().concat(&g1).concat(&gp)),
        braid(&g1, &gp),
        braid(&g1, &gm),
    ];
    Presentation::new(vec!["g1".into(), "gp".into(), "gm".into()], relators).unwrap()
}

/// The irreducible rank-2 representation of [`presentation_two`] over
/// `Q[xi]/(xi^4+1)`, entries in the formal `sqrt2`/`i` tokens:
///
/// `x -> -[[xi, 0], [0, xi^-1]]`, `y -> [[sqrt2/2, 1], [-1/2, sqrt2/2]]`,
/// `w -> [[-i, 0], [0, i]]`, with grading `eps(x) = eps(y) = 1, eps(w) = 0`.
pub fn rho1_template() -> RepTemplate {
    let field = NumberField::cyclotomic8();
    let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let term = |c: Rational, pow: u32, sym: SymTerm| SymEntry {
        terms: vec![(c, pow, sym)],
    };
    let zero = SymEntry::default();
    let x_mat = vec![
        vec![term(q(-1, 1), 1, SymTerm::One), zero.clone()],
        // -xi^-1 = xi^3
        vec![zero.clone(), term(q(1, 1), 3, SymTerm::One)],
    ];
    let y_mat = vec![
        vec![
            term(q(1, 2), 0, SymTerm::Sqrt2),
            term(q(1, 1), 0, SymTerm::One),
        ],
        vec![
            term(q(-1, 2), 0, SymTerm::One),
            term(q(1, 2), 0, SymTerm::Sqrt2),
        ],
    ];
    let w_mat = vec![
        vec![term(q(-1, 1), 0, SymTerm::I), zero.clone()],
        vec![zero, term(q(1, 1), 0, SymTerm::I)],
    ];
    RepTemplate {
        field: Arc::clone(&field),
        eps: vec![1, 1, 0],
        mats: vec![x_mat, y_mat, w_mat],
    }
}

/// The symmetric-group homomorphism separating the meridians `x` and
/// `z = v x` of [`presentation_one`]: `x -> (1,2)`, `y -> (1,3)`,
/// `z -> (3,4)`, whence `v = z x^-1` and `u = y^-1 v y`.
pub fn phi_sigma4() -> FiniteHom {
    let x = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
    let y = Perm::from_cycles(4, &[vec![1, 3]]).unwrap();
    let z = Perm::from_cycles(4, &[vec![3, 4]]).unwrap();
    let v = z.compose(&x.inverse());
    let u = y.inverse().compose(&v).compose(&y);
    FiniteHom::new(4, vec![x, y, u, v]).unwrap()
}

/// Trefoil-type knot group `< x,y | xyx = yxy >`.
pub fn trefoil() -> Presentation {
    Presentation::new(
        vec!["x".into(), "y".into()],
        vec![w(&[1, 2, 1, -2, -1, -2])],
    )
    .unwrap()
}

/// Threshold instance for the atypical values `{0, 4, -4, 4i, -4i}` of the
/// pencil `x^6 + y^6 + 6xy`: a subset is in the family exactly when it
/// contains `{4e1, 4i*e2}` for some choice of signs.
pub fn threshold_instance() -> ThresholdInstance {
    let values: Vec<String> = ["0", "4", "-4", "4i", "-4i"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // bit positions: 0 -> "0", 1 -> "4", 2 -> "-4", 3 -> "4i", 4 -> "-4i"
    let pairs: [usize; 4] = [
        (1 << 1) | (1 << 3),
        (1 << 1) | (1 << 4),
        (1 << 2) | (1 << 3),
        (1 << 2) | (1 << 4),
    ];
    let table: Vec<bool> = (0..32)
        .map(|mask| pairs.iter().any(|p| mask & p == *p))
        .collect();
    ThresholdInstance::new(values, table).unwrap()
}
