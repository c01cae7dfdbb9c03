use padic_dyn::poly::IntPoly;
use padic_dyn_cli::parse_poly;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(any::<i64>(), 0..12).prop_map(|c| IntPoly::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(f in poly()) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn whitespace_is_ignored(f in poly()) {
        let spaced = f.to_string().replace('^', " ^ ").replace('x', " x ");
        let squeezed: String = f.to_string().chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_poly(&spaced).unwrap(), f.clone());
        prop_assert_eq!(parse_poly(&squeezed).unwrap(), f);
    }

    #[test]
    fn parenthesized_products_expand(a in -50i64..50, b in -50i64..50, e in 0u32..6) {
        let text = format!("(x + ({a}))*(x - ({b}))^{e}");
        let expected = &IntPoly::from_i64s(&[a, 1]) * &IntPoly::from_i64s(&[-b, 1]).pow(e);
        prop_assert_eq!(parse_poly(&text).unwrap(), expected);
    }
}
