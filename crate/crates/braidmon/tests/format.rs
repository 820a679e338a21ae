use braidmon::corpus;
use braidmon::format::{
    parse_braid_word, parse_factorization, parse_witness, serialize_factorization,
    serialize_presentation, serialize_witness, ParseErrorKind,
};
use braidmon_core::hurwitz::{Direction, MoveSpec, Witness};
use braidmon_core::vankampen::{presentation, simplify};
use braidmon_core::{BraidWord, CuspidalFactor, CuspidalFactorization};
use proptest::prelude::*;

fn factorization() -> impl Strategy<Value = CuspidalFactorization> {
    (2..=8usize).prop_flat_map(|n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
        let factor = (prop::collection::vec(letter, 0..8), 1..=3i64).prop_map(move |(q, rho)| {
            CuspidalFactor::new(BraidWord::new(n, q).unwrap(), rho).unwrap()
        });
        prop::collection::vec(factor, 1..8)
            .prop_map(move |fs| CuspidalFactorization::new(n, fs).unwrap())
    })
}

proptest! {
    #[test]
    fn factorization_round_trip(f in factorization()) {
        let text = serialize_factorization(&f);
        let back = parse_factorization(&text).unwrap();
        prop_assert_eq!(&back, &f.normalized());
        prop_assert_eq!(serialize_factorization(&back), text);
    }

    #[test]
    fn witness_round_trip(
        moves in prop::collection::vec((1..20usize, any::<bool>()), 0..20),
        z in prop::collection::vec(prop_oneof![1..5i32, -4..0i32], 0..6),
    ) {
        let w = Witness {
            moves: moves
                .into_iter()
                .map(|(i, l)| MoveSpec::new(i, if l { Direction::Left } else { Direction::Right }))
                .collect(),
            conjugator: BraidWord::new(5, z).unwrap().free_reduce(),
        };
        prop_assert_eq!(parse_witness(&serialize_witness(&w), 5).unwrap(), w);
    }

    /// Any text either parses or reports a position inside the input.
    #[test]
    fn errors_point_into_the_input(text in "[a-z0-9=# \\-\n]{0,80}") {
        if let Err(e) = parse_factorization(&text) {
            let lines: Vec<&str> = text.lines().collect();
            prop_assert!(e.line >= 1);
            if let Some(line) = lines.get(e.line - 1) {
                prop_assert!(e.column >= 1 && e.column <= line.chars().count() + 1);
            }
        }
    }
}

#[test]
fn conic_text() {
    let f = parse_factorization("strands 2\nfactor rho=1 Q=\nfactor rho=1 Q=\n").unwrap();
    assert_eq!(f, corpus::load("conic"));
}

#[test]
fn error_kinds() {
    let kind = |t: &str| parse_factorization(t).unwrap_err().kind;
    assert_eq!(
        kind("strands 2\nfactor rho=4 Q=\n"),
        ParseErrorKind::RhoOutOfRange(4)
    );
    assert_eq!(
        kind("strands 2\nfactor rho=0 Q=\n"),
        ParseErrorKind::RhoOutOfRange(0)
    );
    assert_eq!(
        kind("strands 2\nfactor rho=1 Q=2\n"),
        ParseErrorKind::StrandMismatch {
            letter: 2,
            strands: 2
        }
    );
    assert_eq!(kind(""), ParseErrorKind::MissingHeader);
    assert!(matches!(
        kind("strands 2\nfactor rho=1\n"),
        ParseErrorKind::Syntax(_)
    ));
    assert!(matches!(kind("strands two\n"), ParseErrorKind::Syntax(_)));
}

#[test]
fn braid_words() {
    assert_eq!(
        parse_braid_word(4, "1 -3  2").unwrap().letters(),
        &[1, -3, 2]
    );
    assert_eq!(parse_braid_word(4, "").unwrap().len(), 0);
    assert!(parse_braid_word(4, "4").is_err());
    assert!(parse_braid_word(4, "0").is_err());
}

#[test]
fn presentation_text() {
    let p = simplify(&presentation(&corpus::load("cuspidal_cubic")).unwrap());
    assert_eq!(serialize_presentation(&p), "gens 1\n1 1 1\n");
}
