use proptest::prelude::*;
use qnet::construction::random_qnet;
use qnet::projective::Scalar;
use qnet_cli::netfile::{format_scalar, parse_scalar, NetFile};

proptest! {
    #[test]
    fn scalars_survive_formatting(n in any::<i64>(), d in 1i64..i64::MAX) {
        let x = Scalar::new(n.into(), d.into());
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn decimals_are_exact(whole in 0u32..100000, frac in 0u32..1000) {
        let text = format!("{whole}.{frac:03}");
        let expected = Scalar::new((whole as i64 * 1000 + frac as i64).into(), 1000.into());
        prop_assert_eq!(parse_scalar(&text).unwrap(), expected.clone());
        prop_assert_eq!(parse_scalar(&format!("-{text}")).unwrap(), -expected);
    }

    #[test]
    fn nets_survive_json(seed in any::<u64>(), a in 1usize..4, b in 1usize..4, n in 2usize..5) {
        let net = random_qnet(a, b, n, seed).unwrap();
        let text = serde_json::to_string(&NetFile::from_net(&net)).unwrap();
        let back: NetFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_net().unwrap(), net);
    }
}
