use lg_core::braid::{lg, lg_open, lg_top, BraidWord};
use lg_core::load_rep;
use lg_core::ring::{parse_bilaurent, parse_unilaurent, BiLaurent};

fn word(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap()
}

#[test]
fn unknot_is_one() {
    let rep = load_rep().unwrap();
    assert!(lg(&word("n=1;"), &rep).unwrap().is_one());
    assert!(lg(&word("n=2; 1"), &rep).unwrap().is_one());
    assert!(lg(&word("n=3; 1 -2"), &rep).unwrap().is_one());
}

#[test]
fn hopf_link() {
    let rep = load_rep().unwrap();
    let expected = parse_bilaurent("q*(p+p^-1) - q^2 - 1").unwrap();
    assert_eq!(lg(&word("1 1"), &rep).unwrap(), expected);
}

#[test]
fn trefoil_and_figure_eight_tops() {
    let rep = load_rep().unwrap();
    assert_eq!(lg_top(&word("1 1 1"), &rep).unwrap(), (2, parse_unilaurent("q^2").unwrap()));
    assert_eq!(lg_top(&word("n=3; 1 -2 1 -2"), &rep).unwrap(), (2, parse_unilaurent("1").unwrap()));
}

#[test]
fn any_open_strand_gives_the_same_value() {
    let rep = load_rep().unwrap();
    for s in ["n=3; 1 -2 1 -2", "n=3; 1 1 2 -1 2", "n=4; 1 -2 3 2 1"] {
        let b = word(s);
        let base = lg(&b, &rep).unwrap();
        for open in 1..b.strands() {
            assert_eq!(lg_open(&b, &rep, open).unwrap(), base, "{s} open strand {open}");
        }
    }
}

#[test]
fn doubled_generator_closes_to_parallel_torus_link() {
    // (σ1)^{2n} closes to T(2,2n) with both strands oriented the same way.
    let rep = load_rep().unwrap();
    let (deg, top) = lg_top(&BraidWord::torus2(4), &rep).unwrap();
    assert_eq!((deg, top), (3, parse_unilaurent("q^3").unwrap()));
    let v: BiLaurent = lg(&BraidWord::hopf(2).unwrap(), &rep).unwrap();
    assert_eq!(v, parse_bilaurent("(3*q+q^3)*(p+p^-1) - 3 - 4*q^2 - q^4").unwrap());
}
