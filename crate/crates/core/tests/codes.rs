use meander_core::enumerate::all_meanders_up_to;
use meander_core::{render, MeanderCode, RenderFormat, Side};

#[test]
fn text_and_json_round_trip() {
    for m in all_meanders_up_to(9) {
        let text = m.to_string();
        assert_eq!(text.parse::<MeanderCode>().unwrap(), m, "{text}");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<MeanderCode>(&json).unwrap(), m, "{json}");
    }
}

#[test]
fn flip_is_an_involution() {
    for m in all_meanders_up_to(7) {
        let f = m.horizontal_flip();
        assert_eq!(f.horizontal_flip(), m);
        assert_eq!(f.order(), m.order());
    }
}

#[test]
fn exit_side_follows_crossing_parity() {
    for m in all_meanders_up_to(7) {
        let expected = if m.order().n % 2 == 1 { Side::Down } else { Side::Up };
        assert_eq!(*m.sides().last().unwrap(), expected, "{m}");
        assert_eq!(m.exit_side(), expected);
    }
}

#[test]
fn malformed_codes_are_rejected() {
    for bad in ["CC|1", "CX|1,2", "CC|1,1", "C|2", "CC|1,2,", "|1"] {
        assert!(bad.parse::<MeanderCode>().is_err(), "{bad}");
    }
    assert!("CC|2,1".parse::<MeanderCode>().unwrap().validate().violation.is_some());
}

#[test]
fn rendering_is_deterministic() {
    for m in all_meanders_up_to(4) {
        for f in [RenderFormat::Ascii, RenderFormat::Svg, RenderFormat::Tikz] {
            assert_eq!(render(&m, f).unwrap(), render(&m, f).unwrap());
        }
    }
}
