use bwtforge::text::{display, from_display};
use bwtforge::{inplace, oracle, rle, LyndonFactorization, RunLengthString, TransformKind};
use proptest::prelude::*;

fn text() -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![
        prop::collection::vec(prop::sample::select(vec![b'a', b'b']), 1..60),
        prop::collection::vec(prop::sample::select(vec![b'a', b'b', b'c', b'd']), 1..60),
        prop::collection::vec(1u8..=255, 1..60),
        (prop::collection::vec(prop::sample::select(vec![b'a', b'b']), 1..4), 1usize..12)
            .prop_map(|(root, k)| root.repeat(k)),
    ]
}

#[test]
fn golden_values() {
    assert_eq!(display(&oracle::oracle_bbwt(b"bac").unwrap().data), "cba");
    assert_eq!(display(&oracle::oracle_bbwt(b"bacabbabb").unwrap().data), "bbcbbaaba");
    let f = LyndonFactorization::of(b"bacabbabb").unwrap();
    let factors: Vec<&[u8]> = f.factors(b"bacabbabb").collect();
    assert_eq!(factors, [&b"b"[..], b"ac", b"abb", b"abb"]);
}

#[test]
fn cedabedad_conversion() {
    let bwt = oracle::oracle_bwt(b"cedabedad").unwrap().data;
    let mut buf = bwt.clone();
    inplace::convert_bwt_to_bbwt(&mut buf).unwrap();
    let mut with_sentinel = from_display("$");
    with_sentinel.extend(oracle::oracle_bbwt(b"cedabedad").unwrap().data);
    assert_eq!(buf, with_sentinel);
    let rl = rle::convert_rlbwt_to_rlbbwt(&RunLengthString::compress(&bwt)).unwrap();
    assert_eq!(rl.decompress(), with_sentinel[1..]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bbwt_starts_with_last_symbol(t in text()) {
        let mut buf = t.clone();
        inplace::construct_bbwt(&mut buf).unwrap();
        prop_assert_eq!(buf[0], *t.last().unwrap());
        prop_assert_eq!(rle::rlbbwt(&t).unwrap().access(1).unwrap(), *t.last().unwrap());
    }

    #[test]
    fn inplace_matches_oracle(t in text()) {
        let mut buf = t.clone();
        inplace::construct_bwt(&mut buf).unwrap();
        prop_assert_eq!(&buf, &oracle::oracle_bwt(&t).unwrap().data);
        inplace::invert_bwt(&mut buf).unwrap();
        prop_assert_eq!(&buf, &t);

        let mut buf = t.clone();
        let row = inplace::construct_bwtc(&mut buf).unwrap();
        prop_assert_eq!(&buf, &oracle::oracle_bwtc(&t).unwrap().data);
        prop_assert_eq!(row, oracle::oracle_bwtc_start_row(&t).unwrap());
        inplace::invert_bwtc(&mut buf, row).unwrap();
        prop_assert_eq!(&buf, &t);
    }

    #[test]
    fn rle_matches_oracle(t in text()) {
        for kind in [TransformKind::Bwt, TransformKind::Bbwt] {
            let want = oracle::transform_bytes(kind, &t).unwrap();
            let got = match kind {
                TransformKind::Bwt => rle::rlbwt(&t).unwrap(),
                _ => rle::rlbbwt(&t).unwrap(),
            };
            prop_assert_eq!(got.decompress(), want);
        }
        let (s, row) = rle::rlbwtc(&t).unwrap();
        prop_assert_eq!(rle::invert_rlbwtc(&s, row).unwrap(), t.clone());
        prop_assert_eq!(rle::invert_rlbbwt(&rle::rlbbwt(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn conversions_commute(t in text()) {
        let bwt = oracle::oracle_bwt(&t).unwrap().data;
        let bbwt = oracle::oracle_bbwt(&t).unwrap().data;
        let mut buf = bbwt.clone();
        inplace::convert_bbwt_to_bwt(&mut buf).unwrap();
        prop_assert_eq!(&buf, &bwt);
        let mut buf = bwt.clone();
        inplace::convert_bwt_to_bbwt_verified(&mut buf).unwrap();
        prop_assert_eq!(&buf[1..], &bbwt[..]);
        let rl = rle::convert_rlbbwt_to_rlbwt(&RunLengthString::compress(&bbwt)).unwrap();
        prop_assert_eq!(rl.decompress(), bwt);
    }
}

#[test]
fn sentinel_in_text_is_rejected_everywhere() {
    let t = b"ab\0a";
    assert!(oracle::oracle_bwt(t).is_err());
    assert!(inplace::construct_bbwt(&mut t.to_vec()).is_err());
    assert!(inplace::construct_bwt(&mut t.to_vec()).is_err());
    assert!(rle::rlbwt(t).is_err());
}
