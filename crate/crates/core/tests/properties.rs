use proptest::prelude::*;

use magnus_kernel::hgroup::{lift_to_h, project_to_kernel};
use magnus_kernel::limits::dualize;
use magnus_kernel::words::reduce;
use magnus_kernel::{are_conjugate, limits_report, to_basis, BasisSpec, GroupContext, Letter, Syllable, Verdict, Word};

fn syllable() -> impl Strategy<Value = Syllable> {
    let letter = prop_oneof![
        (-6i64..=6).prop_map(Letter::b),
        (1u32..=2, -6i64..=6).prop_map(|(m, i)| Letter::y(m, i)),
    ];
    (letter, any::<bool>()).prop_map(|(l, pos)| if pos { Syllable::pos(l) } else { Syllable::neg(l) })
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(syllable(), 0..16).prop_map(reduce)
}

fn ctx() -> GroupContext {
    GroupContext::parse(4, 2, "y1 y2").unwrap()
}

proptest! {
    #[test]
    fn display_parse_round_trip(w in word()) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Word>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), w);
    }

    #[test]
    fn conjugation_is_detected(u in word(), g in word()) {
        let v = u.conjugate_by(&g);
        let c = are_conjugate(&u, &v);
        prop_assert!(matches!(c.verdict, Verdict::Conjugate | Verdict::Both));
        prop_assert!(c.verifies(&u, &v));
    }

    #[test]
    fn limits_shift(w in word(), j in -5i64..=5) {
        let c = ctx();
        if let Ok(a) = limits_report(&c, &w) {
            let b = limits_report(&c, &w.shift(j).unwrap()).unwrap();
            prop_assert_eq!((b.alpha, b.omega), (a.alpha + j, a.omega + j));
            prop_assert_eq!(b.alpha_form, a.alpha_form.shift(j).unwrap());
        }
    }

    #[test]
    fn dual_swaps_limits(w in word()) {
        let c = ctx();
        if let Ok(a) = limits_report(&c, &w) {
            let (dc, dw) = dualize(&c, &w).unwrap();
            let d = limits_report(&dc, &dw).unwrap();
            prop_assert_eq!((d.alpha, d.omega), (-a.omega, -a.alpha));
        }
    }

    #[test]
    fn basis_forms_agree_across_anchors(w in word(), i in -4i64..=4, j in -4i64..=4) {
        let c = ctx();
        let fi = to_basis(&c, &w, BasisSpec::mixed(i)).unwrap();
        let fj = to_basis(&c, &w, BasisSpec::mixed(j)).unwrap();
        prop_assert_eq!(to_basis(&c, &fi, BasisSpec::mixed(j)).unwrap(), fj);
    }

    #[test]
    fn lift_round_trip(w in word()) {
        prop_assert_eq!(project_to_kernel(&lift_to_h(&w).unwrap()).unwrap(), w);
    }
}
