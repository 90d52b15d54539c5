//! Property tests for the algebraic core.

use num_bigint::BigInt;
use proptest::prelude::*;

use pi1_core::algebra::laurent::{laurent_gcd, LaurentPoly};
use pi1_core::algebra::matrix::Mat;
use pi1_core::algebra::numberfield::NumberField;
use pi1_core::algebra::smith::{smith_normal_form, verify_smith};
use pi1_core::algebra::Rational;
use pi1_core::words::{artin_automorphism, BraidWord, GroupRingElem, Word};

fn letters(rank: i32, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(
        (1..=rank).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]),
        0..=max_len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_reduction_is_idempotent_and_subadditive(
        a in letters(4, 16),
        b in letters(4, 16),
    ) {
        let u = Word::from_letters(a);
        let v = Word::from_letters(b);
        let uv = u.concat(&v);
        prop_assert!(uv.len() <= u.len() + v.len());
        prop_assert_eq!(Word::from_letters(uv.letters().iter().copied()), uv.clone());
        // inverse law
        prop_assert!(uv.concat(&uv.inverse()).is_identity());
    }

    #[test]
    fn artin_action_fixes_the_generator_product(
        braid_letters in prop::collection::vec((1i32..=5).prop_flat_map(|k| prop_oneof![Just(k), Just(-k)]), 0..=20),
    ) {
        let braid = BraidWord::new(6, braid_letters).unwrap();
        let auto = artin_automorphism(&braid);
        let product = Word::from_letters(1..=6);
        prop_assert_eq!(auto.apply(&product).unwrap(), product);
    }

    #[test]
    fn group_ring_is_distributive(
        a in letters(3, 6),
        b in letters(3, 6),
        c in letters(3, 6),
    ) {
        let x = GroupRingElem::from_word(Word::from_letters(a));
        let y = GroupRingElem::from_word(Word::from_letters(b));
        let z = GroupRingElem::from_word(Word::from_letters(c));
        let lhs = x.mul(&y.add(&z));
        let rhs = x.mul(&y).add(&x.mul(&z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn smith_reconstruction_holds(
        entries in prop::collection::vec(-20i64..=20, 1..=16),
        rows in 1usize..=4,
    ) {
        let cols = (entries.len() / rows).max(1);
        let m = Mat::from_rows(
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| BigInt::from(*entries.get(i * cols + j).unwrap_or(&0)))
                        .collect()
                })
                .collect(),
        );
        let s = smith_normal_form(&m);
        prop_assert!(verify_smith(&m, &s));
        // diagonal invariant under row and column order
        let mut rev_rows: Vec<Vec<BigInt>> = (0..rows)
            .rev()
            .map(|i| (0..cols).map(|j| m[(i, j)].clone()).collect())
            .collect();
        rev_rows.iter_mut().for_each(|r| r.reverse());
        let s2 = smith_normal_form(&Mat::from_rows(rev_rows));
        prop_assert_eq!(s.diagonal, s2.diagonal);
    }

    #[test]
    fn laurent_gcd_divides_and_scales(
        fa in prop::collection::vec(-3i64..=3, 1..=4),
        fb in prop::collection::vec(-3i64..=3, 1..=4),
        fh in prop::collection::vec(-3i64..=3, 1..=3),
    ) {
        let field = NumberField::rationals();
        let poly = |cs: &[i64]| {
            LaurentPoly::from_terms(
                &field,
                "t",
                cs.iter().enumerate().map(|(i, &c)| {
                    (i as i64, field.from_rational(Rational::from_integer(BigInt::from(c))))
                }),
            )
        };
        let f = poly(&fa);
        let g = poly(&fb);
        let h = poly(&fh);
        let d = laurent_gcd(&f, &g);
        if !d.is_zero() {
            prop_assert!(f.exact_div(&d).is_some());
            prop_assert!(g.exact_div(&d).is_some());
        }
        if !h.is_zero() {
            // gcd(fh, gh) = gcd(f,g) * h up to units
            let lhs = laurent_gcd(&f.mul(&h), &g.mul(&h));
            let rhs = d.mul(&h).unit_normalize();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn nf_inverse_cancels(
        coeffs in prop::collection::vec(-5i64..=5, 4),
        other in prop::collection::vec(-5i64..=5, 4),
    ) {
        let field = NumberField::cyclotomic8();
        let elem = |cs: &[i64]| {
            field.element(cs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
        };
        let a = elem(&coeffs);
        let b = elem(&other);
        if !a.is_zero() && !b.is_zero() {
            let prod = a.mul(&b);
            prop_assert_eq!(prod.mul(&b.inverse().unwrap()), a);
        }
    }
}

#[test]
fn minor_gcd_invariance_under_permutation_and_unit_scaling() {
    // deterministic spot check of the minor-gcd invariance properties
    let field = NumberField::rationals();
    let c = |n: i64| {
        LaurentPoly::constant(
            &field,
            "t",
            field.from_rational(Rational::from_integer(BigInt::from(n))),
        )
    };
    let t = LaurentPoly::var_t(&field, "t");
    let rows = vec![
        vec![t.clone(), c(1), c(0)],
        vec![c(2), t.clone(), t.mul(&t)],
        vec![c(0), c(3), t.clone()],
    ];
    let m = Mat::from_rows(rows.clone());
    let gcd_of = |m: &Mat<LaurentPoly>, k: usize| {
        m.fold_minors(
            k,
            LaurentPoly::zero(&field, "t"),
            |acc, det| {
                if det.is_zero() {
                    acc
                } else if acc.is_zero() {
                    det.unit_normalize()
                } else {
                    laurent_gcd(&acc, &det)
                }
            },
            |acc| acc.is_unit(),
        )
        .unwrap()
    };
    for k in 1..=3 {
        let base = gcd_of(&m, k);
        // permute rows
        let perm = Mat::from_rows(vec![rows[2].clone(), rows[0].clone(), rows[1].clone()]);
        assert_eq!(gcd_of(&perm, k), base);
        // scale a row by the unit 5t^3
        let mut scaled_rows = rows.clone();
        let unit = LaurentPoly::monomial(
            &field,
            "t",
            3,
            field.from_rational(Rational::from_integer(BigInt::from(5))),
        );
        scaled_rows[1] = scaled_rows[1].iter().map(|e| e.mul(&unit)).collect();
        assert_eq!(gcd_of(&Mat::from_rows(scaled_rows), k), base);
    }
}

#[test]
fn tietze_preserves_abelianization_on_random_presentations() {
    use pi1_core::presentations::{tietze_simplify, TietzeLimits};
    let mut seed = 0xABCD_EF01_2345u64;
    let mut next = || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for _ in 0..100 {
        let rank = 1 + (next() % 4) as usize;
        let nrels = (next() % 4) as usize;
        let relators: Vec<Word> = (0..nrels)
            .map(|_| {
                let len = (next() % 8) as usize;
                Word::from_letters((0..len).map(|_| {
                    let g = (next() % rank as u64) as i32 + 1;
                    if next() % 2 == 0 {
                        g
                    } else {
                        -g
                    }
                }))
            })
            .collect();
        let p = pi1_core::Presentation::new(
            (1..=rank).map(|i| format!("g{i}")).collect(),
            relators,
        )
        .unwrap();
        let out = tietze_simplify(&p, &TietzeLimits::default());
        assert_eq!(
            out.presentation.abelianization(),
            p.abelianization(),
            "abelianization changed for {p:?}"
        );
    }
}

#[test]
fn zvk_homology_invariant_under_braid_conjugation() {
    use pi1_core::topology::zvk_presentation;
    let mut seed = 0x7777_1111u64;
    let mut next = || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for _ in 0..25 {
        let n = 2 + (next() % 3) as usize; // 2..=4 strands
        let rand_braid = |next: &mut dyn FnMut() -> u64, len: usize| {
            BraidWord::new(
                n,
                (0..len)
                    .map(|_| {
                        let k = (next() % (n as u64 - 1)) as i32 + 1;
                        if next().is_multiple_of(2) {
                            k
                        } else {
                            -k
                        }
                    })
                    .collect(),
            )
            .unwrap()
        };
        let nbraids = 1 + (next() % 3) as usize;
        let braids: Vec<BraidWord> = (0..nbraids)
            .map(|_| {
                let len = (next() % 6) as usize;
                rand_braid(&mut next, len)
            })
            .collect();
        let conj_len = (next() % 5) as usize;
        let conj = rand_braid(&mut next, conj_len);
        let conjugated: Vec<BraidWord> = braids
            .iter()
            .map(|b| {
                let mut letters: Vec<i32> = conj.letters().to_vec();
                letters.extend_from_slice(b.letters());
                letters.extend(conj.letters().iter().rev().map(|l| -l));
                BraidWord::new(n, letters).unwrap()
            })
            .collect();
        let h1 = zvk_presentation(n, &braids).unwrap().abelianization();
        let h1c = zvk_presentation(n, &conjugated).unwrap().abelianization();
        assert_eq!(h1, h1c, "H1 changed under conjugation");
    }
}
