//! The full coset-leader listing of the [10,4] worked example, reproduced in
//! discovery order with every coset's leaders in increasing order.

mod common;

use clbc::{clbc_run, BinaryWord, OrderSpec};

// One coset per line; leaders separated by spaces, coordinates by "+", "0" is the zero word.
const LISTING: &str = "\
0\n\
1\n\
2\n\
3\n\
4\n\
5\n\
6\n\
7\n\
8\n\
9\n\
10\n\
1+2 5+6\n\
1+3 5+7\n\
1+4 5+8\n\
1+5 2+6 3+7 4+8\n\
1+6 2+5\n\
1+7 3+5\n\
1+8 4+5\n\
1+9\n\
1+10\n\
2+3 6+7\n\
2+4 6+8\n\
2+7 3+6\n\
2+8 4+6\n\
2+9\n\
2+10\n\
3+4 7+8\n\
3+8 4+7\n\
3+9\n\
3+10\n\
4+9\n\
4+10\n\
5+9\n\
5+10\n\
6+9\n\
6+10\n\
7+9\n\
7+10\n\
8+9\n\
8+10\n\
9+10\n\
1+2+3 1+6+7 2+5+7 3+5+6\n\
1+2+4 1+6+8 2+5+8 4+5+6\n\
1+2+7 1+3+6 2+3+5 5+6+7\n\
1+2+8 1+4+6 2+4+5 5+6+8\n\
1+2+9 5+6+9\n\
1+2+10 5+6+10\n\
1+3+4 1+7+8 3+5+8 4+5+7\n\
1+3+8 1+4+7 3+4+5 5+7+8\n\
1+3+9 5+7+9\n\
1+3+10 5+7+10\n\
1+4+9 5+8+9\n\
1+4+10 5+8+10\n\
1+5+9 2+6+9 3+7+9 4+8+9\n\
1+5+10 2+6+10 3+7+10 4+8+10\n\
1+6+9 2+5+9\n\
1+6+10 2+5+10\n\
1+7+9 3+5+9\n\
1+7+10 3+5+10\n\
1+8+9 4+5+9\n\
1+8+10 4+5+10\n\
1+9+10\n\
2+3+8 2+4+7 3+4+6 6+7+8\n\
5+9+10";

fn parse_leader(s: &str) -> BinaryWord {
    if s == "0" {
        return BinaryWord::zero(10);
    }
    let support: Vec<usize> = s.split('+').map(|i| i.parse().unwrap()).collect();
    BinaryWord::from_support(10, &support)
}

#[test]
fn listing_is_reproduced_exactly() {
    let expected: Vec<Vec<BinaryWord>> = LISTING
        .lines()
        .map(|l| l.split_whitespace().map(parse_leader).collect())
        .collect();
    assert_eq!(expected.len(), 64);

    let res = clbc_run(&common::example_code(), &OrderSpec::new(10)).unwrap();
    let got: Vec<Vec<BinaryWord>> = res.leaders.iter().map(<[_]>::to_vec).collect();
    for (j, (g, e)) in got.iter().zip(&expected).enumerate() {
        assert_eq!(g, e, "coset {}", j + 1);
    }
    assert_eq!(got.len(), expected.len());
}

#[test]
fn marked_leader_has_no_subword_in_the_transversal() {
    // e4+e5+e6 is a leader although none of e4+e5, e4+e6, e5+e6 is canonical,
    // so extending only canonical words would miss it.
    let res = clbc_run(&common::example_code(), &OrderSpec::new(10)).unwrap();
    let y = BinaryWord::from_support(10, &[4, 5, 6]);
    assert!(res.leaders.leaders(res.coset_of(&y)).contains(&y));
    for i in y.support() {
        assert_eq!(res.transversal.index_of(&y.with_flipped(i)), None);
    }
}
