use lg_core::braid::{lg, BraidWord};
use lg_core::load_rep;
use lg_core::matrix::SparseMatrix;
use lg_core::ring::{lift_q, BiLaurent};
use lg_core::skein::{g_poly, lg_hopf, skein_coeffs};
use lg_core::tangle::{
    antiparallel_twists, capcup, clasp, decompose_in_basis, evaluate, horizontal, partial_trace_left,
    partial_trace_right, scalar_of, scale_pq, Generator, LayeredTangle, Orient, OrientObject, Slice,
    SparseMorphism,
};
use lg_core::RepData;

use Generator::*;
use Orient::{Down as D, Up as U};

fn tangle(bottom: &[Orient], slices: &[(usize, Generator)]) -> LayeredTangle {
    LayeredTangle::new(
        OrientObject(bottom.to_vec()),
        slices.iter().map(|&(pos, gen)| Slice { pos, gen }).collect(),
    )
    .unwrap()
}

fn eval(rep: &RepData, bottom: &[Orient], slices: &[(usize, Generator)]) -> SparseMorphism {
    evaluate(&tangle(bottom, slices), rep).unwrap()
}

fn ident(bottom: &[Orient]) -> SparseMorphism {
    SparseMorphism::identity(OrientObject(bottom.to_vec()))
}

const PAIRS: [[Orient; 2]; 4] = [[U, U], [U, D], [D, U], [D, D]];

#[test]
fn identity_and_single_crossing() {
    let rep = load_rep().unwrap();
    assert_eq!(eval(&rep, &[U], &[]), ident(&[U]));
    assert_eq!(eval(&rep, &[U, U], &[(1, Id)]).matrix, SparseMatrix::identity(16));
    assert_eq!(eval(&rep, &[U, U], &[(1, PosCrossing)]).matrix, rep.braiding);
}

#[test]
fn zigzags() {
    let rep = load_rep().unwrap();
    assert_eq!(eval(&rep, &[U], &[(1, CupRl), (2, CapRl)]), ident(&[U]));
    assert_eq!(eval(&rep, &[U], &[(2, CupLr), (1, CapLr)]), ident(&[U]));
    assert_eq!(eval(&rep, &[D], &[(1, CupLr), (2, CapLr)]), ident(&[D]));
    assert_eq!(eval(&rep, &[D], &[(2, CupRl), (1, CapRl)]), ident(&[D]));
}

#[test]
fn reidemeister_two_all_orientations() {
    let rep = load_rep().unwrap();
    for pair in PAIRS {
        assert_eq!(eval(&rep, &pair, &[(1, PosCrossing), (1, NegCrossing)]), ident(&pair), "{pair:?}");
        assert_eq!(eval(&rep, &pair, &[(1, NegCrossing), (1, PosCrossing)]), ident(&pair), "{pair:?}");
    }
}

#[test]
fn reidemeister_three_all_orientations() {
    let rep = load_rep().unwrap();
    for a in [U, D] {
        for b in [U, D] {
            for c in [U, D] {
                let obj = [a, b, c];
                for (x, y, z) in [
                    (PosCrossing, PosCrossing, PosCrossing),
                    (PosCrossing, PosCrossing, NegCrossing),
                    (NegCrossing, PosCrossing, PosCrossing),
                ] {
                    let lhs = eval(&rep, &obj, &[(1, x), (2, y), (1, z)]);
                    let rhs = eval(&rep, &obj, &[(2, z), (1, y), (2, x)]);
                    assert_eq!(lhs, rhs, "{obj:?} {x:?} {y:?} {z:?}");
                }
            }
        }
    }
}

#[test]
fn kinks_are_trivial() {
    let rep = load_rep().unwrap();
    for sign in [PosCrossing, NegCrossing] {
        // right kinks
        assert_eq!(eval(&rep, &[U], &[(2, CupRl), (1, sign), (2, CapLr)]), ident(&[U]));
        assert_eq!(eval(&rep, &[D], &[(2, CupLr), (1, sign), (2, CapRl)]), ident(&[D]));
        // left kinks
        assert_eq!(eval(&rep, &[U], &[(1, CupLr), (2, sign), (1, CapRl)]), ident(&[U]));
        assert_eq!(eval(&rep, &[D], &[(1, CupRl), (2, sign), (1, CapLr)]), ident(&[D]));
    }
}

#[test]
fn strands_slide_across_cups_and_caps() {
    let rep = load_rep().unwrap();
    for cup in [CupRl, CupLr] {
        for s in [U, D] {
            for sign in [PosCrossing, NegCrossing] {
                let moved = eval(&rep, &[s], &[(2, cup), (1, sign), (2, sign)]);
                assert_eq!(moved, eval(&rep, &[s], &[(1, cup)]), "{cup:?} {s:?} {sign:?}");
            }
        }
    }
    for (cap, pair) in [(CapLr, [U, D]), (CapRl, [D, U])] {
        for s in [U, D] {
            for sign in [PosCrossing, NegCrossing] {
                let obj = [pair[0], pair[1], s];
                let moved = eval(&rep, &obj, &[(2, sign), (1, sign), (2, cap)]);
                assert_eq!(moved, eval(&rep, &obj, &[(1, cap)]), "{cap:?} {s:?} {sign:?}");
            }
        }
    }
}

#[test]
fn partial_trace_examples() {
    let rep = load_rep().unwrap();
    let id2 = ident(&[U, U]);
    assert!(partial_trace_right(&id2, &rep).unwrap().matrix.is_zero());
    let c = eval(&rep, &[U, U], &[(1, PosCrossing)]);
    assert_eq!(partial_trace_right(&c, &rep).unwrap(), ident(&[U]));
    assert!(partial_trace_right(&ident(&[U, D]), &rep).is_err());
    // A ⊗ B with B diagonal: trace picks up Σ G_k B_kk.
    let a = eval(&rep, &[U, U], &[(1, NegCrossing)]);
    let b = SparseMorphism::new(
        OrientObject(vec![U]),
        OrientObject(vec![U]),
        SparseMatrix::from_entries(4, 4, (0..4).map(|k| (k, k, lg_core::ring::ExtScalar::from_int(k as i64 + 1)))),
    );
    let w = (0..4).fold(lg_core::ring::ExtScalar::from_int(0), |acc, k| {
        &acc + &(&rep.pivot[k] * &lg_core::ring::ExtScalar::from_int(k as i64 + 1))
    });
    assert_eq!(partial_trace_right(&a.tensor(&b), &rep).unwrap(), a.scale(&w));
}

fn left_closure(m: &SparseMorphism, rep: &RepData) -> BiLaurent {
    scalar_of(&partial_trace_left(m, rep).unwrap()).unwrap()
}

#[test]
fn basis_closure_calibration() {
    let rep = load_rep().unwrap();
    assert!(left_closure(&clasp(&rep), &rep).is_one());
    assert!(left_closure(&capcup(&rep), &rep).is_one());
    assert!(left_closure(&ident(&[D, U]), &rep).is_zero());
    // closing the top: clasp gives the positive Hopf link times the cap.
    let cap = eval(&rep, &[D, U], &[(1, CapRl)]);
    let top = |m: &SparseMorphism| m.then(&cap).unwrap();
    let hopf = lg_hopf(1).unwrap();
    assert_eq!(top(&clasp(&rep)), scale_pq(&cap, &hopf).unwrap());
    assert!(top(&capcup(&rep)).matrix.is_zero());
}

#[test]
fn closing_twists_gives_hopf_links() {
    let rep = load_rep().unwrap();
    for n in 1..=3 {
        let v = left_closure(&antiparallel_twists(n, &rep), &rep);
        assert_eq!(v, lg_hopf(n).unwrap(), "n = {n}");
        assert_eq!(v, lg(&BraidWord::hopf(n).unwrap(), &rep).unwrap());
    }
    assert_eq!(left_closure(&antiparallel_twists(-2, &rep), &rep), lg_hopf(-2).unwrap());
}

#[test]
fn twists_decompose_by_the_skein_formula() {
    let rep = load_rep().unwrap();
    for n in 1..=3 {
        let s = skein_coeffs(n).unwrap();
        let (a, b, c) = decompose_in_basis(&antiparallel_twists(n, &rep), &rep).unwrap();
        assert_eq!((a, b, c), (lift_q(&s.b), s.c, s.d), "n = {n}");
    }
    let one = BiLaurent::one();
    let zero = BiLaurent::zero();
    assert_eq!(decompose_in_basis(&capcup(&rep), &rep).unwrap(), (zero.clone(), one.clone(), zero.clone()));
    let sum = clasp(&rep).add(&ident(&[D, U]));
    assert_eq!(decompose_in_basis(&sum, &rep).unwrap(), (one.clone(), zero, one));
}

#[test]
fn double_clasp_identity() {
    let rep = load_rep().unwrap();
    let cl = clasp(&rep);
    let cl2 = horizontal(&cl, &cl, &rep).unwrap();
    let q = |s: &str| lg_core::ring::parse_bilaurent(s).unwrap();
    let rhs = scale_pq(&capcup(&rep), &q("q"))
        .unwrap()
        .add(&scale_pq(&cl, &q("-q-q^-1")).unwrap())
        .add(&scale_pq(&cl2, &q("q^-1")).unwrap());
    let lhs = scale_pq(&ident(&[D, U]), &g_poly().unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn boundary_of_hopf_linked_annuli() {
    let rep = load_rep().unwrap();
    let t = lg_core::tangle::hopf_linked_annuli();
    let v = scalar_of(&evaluate(&t, &rep).unwrap()).unwrap();
    let expected = lg_core::ring::parse_bilaurent("-q^-4+2-q^4+(q^3+q^-3-q-q^-1)*(p+p^-1)").unwrap();
    assert_eq!(v, expected);
}

#[test]
fn closure_of_braid_tangle_matches_braid_evaluation() {
    let rep = load_rep().unwrap();
    for s in ["n=3; 1 -2 1 -2", "n=2; 1 1 1", "n=3; -1 2 1 1 2"] {
        let b = BraidWord::parse(s).unwrap();
        let slices: Vec<(usize, Generator)> = b
            .letters()
            .iter()
            .map(|&l| (l.unsigned_abs() as usize, if l > 0 { PosCrossing } else { NegCrossing }))
            .collect();
        let t = tangle(&vec![U; b.strands()], &slices);
        assert_eq!(lg_core::tangle::lg_of_closure(&t, &rep).unwrap(), lg(&b, &rep).unwrap(), "{s}");
    }
}

#[test]
fn basis_spans_three_dimensions() {
    let rep = load_rep().unwrap();
    let cl = clasp(&rep);
    let vecs = [
        ident(&[D, U]).matrix.flatten(),
        cl.matrix.flatten(),
        capcup(&rep).matrix.flatten(),
        horizontal(&cl, &cl, &rep).unwrap().matrix.flatten(),
        antiparallel_twists(1, &rep).matrix.flatten(),
    ];
    assert_eq!(lg_core::matrix::rank(&vecs), 3);
}

#[test]
fn ill_formed_tangles_name_the_slice() {
    let bad = LayeredTangle::new(OrientObject(vec![U, U]), vec![Slice { pos: 1, gen: Id }, Slice { pos: 1, gen: CapLr }]);
    assert_eq!(
        bad.unwrap_err(),
        lg_core::Error::IllFormedTangle { slice: 1, reason: "cap_lr needs strands [Up, Down]".into() }
    );
    assert!(matches!(
        LayeredTangle::new(OrientObject(vec![U]), vec![Slice { pos: 1, gen: PosCrossing }]),
        Err(lg_core::Error::IllFormedTangle { slice: 0, .. })
    ));
}

#[test]
fn text_format_round_trip() {
    let t = lg_core::tangle::hopf_linked_annuli();
    let text = t.to_string();
    assert!(text.starts_with("bottom: u\npos 2 cup_lr\n"));
    assert_eq!(LayeredTangle::parse(&text).unwrap(), t);
    assert!(LayeredTangle::parse("pos 1 id").is_err());
    assert!(LayeredTangle::parse("bottom: u x").is_err());
}

#[test]
fn identity_checks_as_library_functions() {
    let rep = load_rep().unwrap();
    for n in 1..=3 {
        assert!(lg_core::tangle::skein_identity_holds(n, &rep).unwrap(), "n = {n}");
    }
    assert!(lg_core::tangle::double_clasp_identity_holds(&rep).unwrap());
}
